use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use tutte_core::forest::{count_forests, curve_y1_restriction};
use tutte_core::graph::io::{
    parse_cut_order, parse_graph, parse_tree_decomposition, write_cut_order, write_graph, write_tree_decomposition,
};
use tutte_core::graph::{cut_order_width, Decompositions, Multigraph};
use tutte_core::oracle::brute_tutte;
use tutte_core::partition::{bell, catalan, compat_matrix, enumerate_noncrossing};
use tutte_core::reduction::{chromatic_evaluator, curve_restriction, eval_curve, transform as apply, TransformKind};
use tutte_core::scalar::{format_scalar, parse_scalar, pow};
use tutte_core::special::{tutte_chromatic_point, tutte_on_h2};
use tutte_core::{evaluate_point, general_dp, tutte_coefficients, Error, Scalar};

use crate::{Algorithm, Op};

const MAX_VERIFY_EDGES: usize = 20;
const MAX_RANK_N: usize = 6;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Mismatch { computed: String, oracle: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io(..) => 2,
            Self::Mismatch { .. } => 4,
            Self::Core(e) => match e {
                Error::Parse(_)
                | Error::InvalidDecomposition(_)
                | Error::InvalidNice(_)
                | Error::InvalidCutOrder(_)
                | Error::InvalidArgument(_)
                | Error::DuplicateAbscissa(_) => 2,
                Error::InapplicablePoint { .. } | Error::DegenerateGadget(_) | Error::CrossingPartition(_) => 3,
                Error::ResourceGuard(_) => 5,
                Error::BasisFailure(_) | Error::Invariant(_) => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Core(e) => write!(f, "{e}"),
            Self::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Self::Mismatch { computed, oracle } => {
                write!(f, "verification failed: computed {computed}, oracle {oracle}")
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

pub struct Inputs {
    pub graph: PathBuf,
    pub td: Option<PathBuf>,
    pub pd: Option<PathBuf>,
    pub cut: Option<PathBuf>,
}

pub struct Outputs {
    pub graph: PathBuf,
    pub td: Option<PathBuf>,
    pub pd: Option<PathBuf>,
    pub cut: Option<PathBuf>,
}

#[derive(Debug, Default, Serialize)]
pub struct Widths {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub treewidth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pathwidth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutwidth: Option<usize>,
}

/// Everything a command prints. Exact values are strings `p` or `p/q`.
#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<(usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub widths: Option<Widths>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transformed_widths: Option<Widths>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<(String, String)>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("command: {}", self.command)];
        let mut push = |k: &str, v: &dyn fmt::Display| lines.push(format!("{k}: {v}"));
        if let Some(a) = &self.algorithm {
            push("algorithm", a);
        }
        if let Some(v) = &self.value {
            push("value", v);
        }
        if let Some(p) = &self.polynomial {
            push("polynomial", p);
        }
        if let Some(v) = self.verified {
            push("verified", &if v { "yes" } else { "no" });
        }
        for (label, widths) in [("", &self.widths), ("transformed ", &self.transformed_widths)] {
            let Some(w) = widths else { continue };
            for (name, value) in [("treewidth", w.treewidth), ("pathwidth", w.pathwidth), ("cutwidth", w.cutwidth)] {
                if let Some(value) = value {
                    push(&format!("{label}{name}"), &value);
                }
            }
        }
        for (k, v) in &self.details {
            push(k, v);
        }
        push("time", &format!("{:.3} ms", self.wall_time_ms));
        lines.join("\n")
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(inputs: &Inputs) -> Result<(Multigraph, Decompositions), CliError> {
    let g = parse_graph(&read(&inputs.graph)?)?;
    let mut d = match &inputs.td {
        Some(p) => Decompositions::new(parse_tree_decomposition(&read(p)?)?),
        None => Decompositions::trivial(&g),
    };
    d.tree.validate(&g).map_err(Error::InvalidDecomposition)?;
    if let Some(p) = &inputs.pd {
        let pd = parse_tree_decomposition(&read(p)?)?;
        pd.validate(&g).map_err(Error::InvalidDecomposition)?;
        if !pd.is_path() {
            return Err(Error::InvalidArgument("the path decomposition's tree is not a path".into()).into());
        }
        d.path = Some(pd);
    }
    if let Some(p) = &inputs.cut {
        let cut = parse_cut_order(&read(p)?)?;
        cut.validate(g.vertex_count())?;
        d.cut = Some(cut);
    }
    Ok((g, d))
}

fn widths(g: &Multigraph, d: &Decompositions) -> Result<Widths, CliError> {
    Ok(Widths {
        treewidth: Some(d.tree.validate(g).map_err(Error::InvalidDecomposition)?),
        pathwidth: d.path.as_ref().map(|p| p.validate(g)).transpose().map_err(Error::InvalidDecomposition)?,
        cutwidth: d.cut.as_ref().map(|c| cut_order_width(g, c)).transpose()?,
    })
}

fn inapplicable(x: &Scalar, y: &Scalar, reason: &str) -> Error {
    Error::InapplicablePoint { x: format_scalar(x), y: format_scalar(y), reason: reason.into() }
}

fn evaluate(
    alg: Algorithm,
    g: &Multigraph,
    d: &Decompositions,
    x: &Scalar,
    y: &Scalar,
) -> Result<(Scalar, String), Error> {
    let one = Scalar::one();
    let alpha = (x - &one) * (y - &one);
    let name = |s: &str| s.to_string();
    match alg {
        Algorithm::Auto => evaluate_point(g, d, x, y).map(|e| (e.value, e.route.to_string())),
        Algorithm::General => Ok((general_dp(g, &d.nice(g)?)?.eval(x, y), name("general"))),
        Algorithm::Oracle => Ok((brute_tutte(g, x, y)?, name("oracle"))),
        Algorithm::Forest => {
            if !y.is_one() {
                return Err(inapplicable(x, y, "the forest algorithm needs y = 1"));
            }
            let nd = d.nice(g)?;
            let value = if x.is_one() {
                curve_y1_restriction(g, &nd)?.eval(x)?
            } else {
                let xm = x - &one;
                pow(&xm, g.rank()) * count_forests(g, &nd, &xm.recip())?
            };
            Ok((value, name("forest")))
        }
        Algorithm::Ising => {
            if alpha != Scalar::from_integer(2.into()) {
                return Err(inapplicable(x, y, "the ising algorithm needs (x-1)(y-1) = 2"));
            }
            Ok((tutte_on_h2(g, &d.nice(g)?, x, y)?, name("ising")))
        }
        Algorithm::Coloring => {
            let q = (alpha.is_integer() && alpha.is_positive())
                .then(|| alpha.to_integer().to_usize())
                .flatten()
                .ok_or_else(|| {
                    inapplicable(x, y, "the coloring algorithm needs (x-1)(y-1) to be a positive integer")
                })?;
            if y.is_zero() {
                return Ok((tutte_chromatic_point(g, &d.nice(g)?, q)?, name("coloring")));
            }
            let base = Scalar::from_integer((1 - q as i64).into());
            let curve = curve_restriction(g, d, &base, &Scalar::zero(), &chromatic_evaluator(q))?;
            Ok((eval_curve(&curve, g, y)?, name("coloring-curve")))
        }
    }
}

pub fn eval(inputs: &Inputs, x: &str, y: &str, alg: Algorithm, verify: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let (x, y) = (parse_scalar(x)?, parse_scalar(y)?);
    let (g, d) = load(inputs)?;
    if verify && g.edge_count() > MAX_VERIFY_EDGES {
        return Err(Error::ResourceGuard(format!(
            "--verify runs the oracle only up to {MAX_VERIFY_EDGES} edges, the graph has {}",
            g.edge_count()
        ))
        .into());
    }
    let (value, route) = evaluate(alg, &g, &d, &x, &y)?;
    let verified = if verify {
        let oracle = brute_tutte(&g, &x, &y)?;
        if oracle != value {
            return Err(CliError::Mismatch { computed: format_scalar(&value), oracle: format_scalar(&oracle) });
        }
        Some(true)
    } else {
        None
    };
    Ok(RunReport {
        command: format!("eval {} {}", format_scalar(&x), format_scalar(&y)),
        algorithm: Some(route),
        value: Some(format_scalar(&value)),
        verified,
        widths: Some(widths(&g, &d)?),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        ..RunReport::default()
    })
}

pub fn coeffs(inputs: &Inputs) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let (g, d) = load(inputs)?;
    let poly = tutte_coefficients(&general_dp(&g, &d.nice(&g)?)?);
    let coefficients =
        poly.terms().map(|(&(i, j), c)| (i, j, format_scalar(&Scalar::from_integer(c.clone())))).collect();
    Ok(RunReport {
        command: "coeffs".into(),
        algorithm: Some("general".into()),
        polynomial: Some(poly.to_string()),
        coefficients: Some(coefficients),
        widths: Some(widths(&g, &d)?),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        ..RunReport::default()
    })
}

pub fn transform(inputs: &Inputs, op: Op, k: usize, out: &Outputs) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let (g, d) = load(inputs)?;
    let kind = match op {
        Op::Stretch => TransformKind::Stretch,
        Op::Thicken => TransformKind::Thicken,
        Op::Insulated => TransformKind::Insulated,
    };
    let t = apply(&g, &d, kind, k)?;
    let n = t.graph.vertex_count();
    write(&out.graph, &write_graph(&t.graph))?;
    if let Some(p) = &out.td {
        write(p, &write_tree_decomposition(&t.decompositions.tree, n))?;
    }
    if let (Some(p), Some(pd)) = (&out.pd, &t.decompositions.path) {
        write(p, &write_tree_decomposition(pd, n))?;
    }
    if let (Some(p), Some(cut)) = (&out.cut, &t.decompositions.cut) {
        write(p, &write_cut_order(cut))?;
    }
    Ok(RunReport {
        command: format!("transform {kind} {k}"),
        widths: Some(widths(&g, &d)?),
        transformed_widths: Some(widths(&t.graph, &t.decompositions)?),
        details: vec![
            ("vertices".into(), n.to_string()),
            ("edges".into(), t.graph.edge_count().to_string()),
            ("output".into(), out.graph.display().to_string()),
        ],
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        ..RunReport::default()
    })
}

pub fn rank(n: usize) -> Result<RunReport, CliError> {
    let start = Instant::now();
    if n == 0 || n > MAX_RANK_N {
        return Err(Error::InvalidArgument(format!("n must lie in 1..={MAX_RANK_N}")).into());
    }
    let m = compat_matrix(n)?;
    let rank = m.rank();
    let rows: Vec<usize> = enumerate_noncrossing(m.ground()).iter().filter_map(|p| m.index_of(p)).collect();
    let basis = rows.len() == rank && m.rank_of_rows(&rows) == rank;
    Ok(RunReport {
        command: format!("rank {n}"),
        details: vec![
            ("bell".into(), bell(n).to_string()),
            ("catalan".into(), catalan(n).to_string()),
            ("rank".into(), rank.to_string()),
            ("basis".into(), if basis { "OK" } else { "FAILED" }.into()),
        ],
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        ..RunReport::default()
    })
}
