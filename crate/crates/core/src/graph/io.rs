//! PACE-style text formats: `.gr` graphs, `.td` tree decompositions and
//! single-line cut orders. All vertex and bag ids are 1-indexed on disk.

use std::fmt::Write as _;

use super::decomposition::{CutOrder, TreeDecomposition};
use super::multigraph::Multigraph;
use crate::error::{Error, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Parse(format!("line {line}: missing {what}")))?;
    token.parse().map_err(|_| Error::Parse(format!("line {line}: bad {what} {token:?}")))
}

fn one_indexed(token: Option<&str>, line: usize, bound: usize, what: &str) -> Result<usize> {
    let v = number(token, line, what)?;
    if v == 0 || v > bound {
        return Err(Error::Parse(format!("line {line}: {what} {v} outside 1..={bound}")));
    }
    Ok(v - 1)
}

/// Parses `p tw <n> <m>` followed by `m` lines `<u> <v>`.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("p") || tok.next() != Some("tw") {
        return Err(Error::Parse(format!("line {line}: expected `p tw <n> <m>`")));
    }
    let n = number(tok.next(), line, "vertex count")?;
    let m = number(tok.next(), line, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut tok = text.split_whitespace();
        let u = one_indexed(tok.next(), line, n, "endpoint")?;
        let v = one_indexed(tok.next(), line, n, "endpoint")?;
        if tok.next().is_some() {
            return Err(Error::Parse(format!("line {line}: trailing tokens")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
    }
    Multigraph::new(n, edges)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses `s td <bags> <width+1> <n>`, then `b <id> <v...>` lines and tree
/// edges `<i> <j>`.
pub fn parse_tree_decomposition(text: &str) -> Result<TreeDecomposition> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::Parse("empty decomposition file".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("s") || tok.next() != Some("td") {
        return Err(Error::Parse(format!("line {line}: expected `s td <bags> <width+1> <n>`")));
    }
    let bag_count = number(tok.next(), line, "bag count")?;
    let declared = number(tok.next(), line, "bag size")?;
    let n = number(tok.next(), line, "vertex count")?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; bag_count];
    let mut tree_edges = Vec::new();
    for (line, text) in lines {
        let mut tok = text.split_whitespace().peekable();
        if tok.peek() == Some(&"b") {
            tok.next();
            let id = one_indexed(tok.next(), line, bag_count, "bag id")?;
            let mut bag = Vec::new();
            for t in tok {
                bag.push(one_indexed(Some(t), line, n, "vertex")?);
            }
            if bags[id].replace(bag).is_some() {
                return Err(Error::Parse(format!("line {line}: bag {} defined twice", id + 1)));
            }
        } else {
            let a = one_indexed(tok.next(), line, bag_count, "bag id")?;
            let b = one_indexed(tok.next(), line, bag_count, "bag id")?;
            tree_edges.push((a, b));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::Parse(format!("bag {} is never defined", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeDecomposition::new(bags, tree_edges).with_declared_width(declared.saturating_sub(1)))
}

pub fn write_tree_decomposition(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.node_count(), td.declared_width() + 1, n);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// One line of space-separated 1-indexed vertex ids.
pub fn parse_cut_order(text: &str) -> Result<CutOrder> {
    let mut order = Vec::new();
    for (line, text) in data_lines(text) {
        for t in text.split_whitespace() {
            let v = number(Some(t), line, "vertex")?;
            if v == 0 {
                return Err(Error::Parse(format!("line {line}: vertex ids are 1-indexed")));
            }
            order.push(v - 1);
        }
    }
    Ok(CutOrder::new(order))
}

pub fn write_cut_order(co: &CutOrder) -> String {
    let ids: Vec<String> = co.order().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", ids.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_loops_parallels_and_comments() {
        let g = parse_graph("c a comment\np tw 3 4\n1 2\n2 1\n3 3\nc mid\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 0), (2, 2), (1, 2)]);
    }

    #[test]
    fn reports_bad_graph_files() {
        assert!(parse_graph("p tw 2 1\n1 3\n").is_err());
        assert!(parse_graph("p tw 2 2\n1 2\n").is_err());
        assert!(parse_graph("p cep 2 1\n1 2\n").is_err());
        assert!(parse_graph("p tw 2 1\n0 1\n").is_err());
    }

    #[test]
    fn tree_decomposition_round_trip() {
        let text = "s td 3 3 4\nb 1 1 2 3\nb 2 3 4\nb 3\n1 2\n2 3\n";
        let td = parse_tree_decomposition(text).unwrap();
        assert_eq!(td.bags(), &[vec![0, 1, 2], vec![2, 3], vec![]]);
        assert_eq!(td.declared_width(), 2);
        assert_eq!(write_tree_decomposition(&td, 4), text);
    }

    #[test]
    fn cut_order_round_trip() {
        let co = parse_cut_order("3 1 2\n").unwrap();
        assert_eq!(co.order(), &[2, 0, 1]);
        assert_eq!(write_cut_order(&co), "3 1 2\n");
    }
}
