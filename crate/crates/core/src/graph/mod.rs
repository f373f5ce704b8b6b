//! Multigraphs, decompositions and their file formats.

mod decomposition;
pub mod io;
mod multigraph;
mod nice;

pub use decomposition::{
    cut_order_width, forest_decomposition, trivial_decompositions, CutOrder, TreeDecomposition, Violation,
};
pub use multigraph::{DisjointSets, Multigraph, Vertex};
pub use nice::{make_nice, NiceDecomposition, NiceKind, NiceNode};

/// The decompositions available for one graph: a tree decomposition is
/// always present, path and cut decompositions are optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decompositions {
    pub tree: TreeDecomposition,
    pub path: Option<TreeDecomposition>,
    pub cut: Option<CutOrder>,
}

impl Decompositions {
    pub fn new(tree: TreeDecomposition) -> Self {
        Self { tree, path: None, cut: None }
    }

    /// Trivial tree decomposition and identity order.
    pub fn trivial(g: &Multigraph) -> Self {
        let (tree, cut) = trivial_decompositions(g);
        let path = tree.is_path().then(|| tree.clone());
        Self { tree, path, cut: Some(cut) }
    }

    pub fn with_path(mut self, path: TreeDecomposition) -> Self {
        self.path = Some(path);
        self
    }

    pub fn with_cut(mut self, cut: CutOrder) -> Self {
        self.cut = Some(cut);
        self
    }

    /// Nice-ifies the path decomposition when present (join-free DP), the
    /// tree decomposition otherwise.
    pub fn nice(&self, g: &Multigraph) -> crate::Result<NiceDecomposition> {
        match &self.path {
            Some(pd) if pd.width() <= self.tree.width() => make_nice(g, pd),
            _ => make_nice(g, &self.tree),
        }
    }
}
