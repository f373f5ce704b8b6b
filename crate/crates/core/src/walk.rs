//! Bottom-up evaluation of a nice decomposition. Unary chains run in a loop;
//! the two subtrees below a join are evaluated concurrently.

use crate::error::Result;
use crate::graph::{NiceDecomposition, NiceKind, NiceNode};

pub(crate) trait NiceVisitor: Sync {
    type Table: Send;

    fn leaf(&self, id: usize, node: &NiceNode) -> Result<Self::Table>;

    /// Introduce-vertex, forget-vertex and introduce-edge nodes.
    fn unary(&self, id: usize, node: &NiceNode, child: Self::Table) -> Result<Self::Table>;

    fn join(&self, id: usize, node: &NiceNode, left: Self::Table, right: Self::Table) -> Result<Self::Table>;
}

pub(crate) fn evaluate<V: NiceVisitor>(nd: &NiceDecomposition, visitor: &V) -> Result<V::Table> {
    eval_from(nd, visitor, nd.root())
}

fn eval_from<V: NiceVisitor>(nd: &NiceDecomposition, visitor: &V, top: usize) -> Result<V::Table> {
    let mut chain = Vec::new();
    let mut id = top;
    while matches!(
        nd.node(id).kind,
        NiceKind::IntroduceVertex(_) | NiceKind::ForgetVertex(_) | NiceKind::IntroduceEdge(_)
    ) {
        chain.push(id);
        id = nd.node(id).children[0];
    }
    let bottom = nd.node(id);
    let mut table = match bottom.kind {
        NiceKind::Join => {
            let (l, r) = crate::par::join(
                || eval_from(nd, visitor, bottom.children[0]),
                || eval_from(nd, visitor, bottom.children[1]),
            );
            visitor.join(id, bottom, l?, r?)?
        }
        _ => visitor.leaf(id, bottom)?,
    };
    for &c in chain.iter().rev() {
        table = visitor.unary(c, nd.node(c), table)?;
    }
    Ok(table)
}
