//! Undirected simple graphs and the helpers every other module builds on.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted so that
//! iteration order, and therefore every derived report, is deterministic.

mod certificate;
mod io;
mod multigraph;
mod rotation;

pub use certificate::{validate_certificate, CertificateDefect, CutCertificate, CutKind};
pub use multigraph::{contract, MultiGraph};
pub use rotation::{RotationError, RotationMap};

use std::collections::VecDeque;

/// An undirected edge `(u, v)`; canonical form has `u < v`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex {0} belongs to more than one block")]
    OverlappingBlocks(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error(transparent)]
    Rotation(#[from] RotationError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected simple graph with an optional port labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rotation: Option<RotationMap>,
}

/// Builds a graph from an edge list, collapsing repeated pairs.
pub fn make_graph(vertex_count: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
    Graph::from_edges(vertex_count, edges.iter().copied())
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rotation: None,
        }
    }

    /// Duplicate pairs collapse silently; use [`Graph::from_edges_strict`]
    /// to reject them instead.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::build(n, edges, false)
    }

    pub fn from_edges_strict<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::build(n, edges, true)
    }

    fn build<I>(n: usize, edges: I, strict: bool) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if strict {
                if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                    return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
                }
            }
            list.dedup();
        }
        Ok(Graph {
            adj,
            rotation: None,
        })
    }

    /// Attaches a port labelling after checking it against the adjacency.
    pub fn with_rotation_map(mut self, rot: RotationMap) -> Result<Self, GraphError> {
        rot.validate(&self)?;
        self.rotation = Some(rot);
        Ok(self)
    }

    pub fn rotation_map(&self) -> Option<&RotationMap> {
        self.rotation.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(Vec::len).min().ok_or(GraphError::Empty)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(Vec::len).max().ok_or(GraphError::Empty)
    }

    /// `ξ(G) = min { d(x) + d(y) - 2 : xy ∈ E }`.
    pub fn min_edge_degree(&self) -> Result<usize, GraphError> {
        self.edges()
            .map(|(u, v)| self.degree(u) + self.degree(v) - 2)
            .min()
            .ok_or(GraphError::Edgeless)
    }

    /// Common degree if the graph is regular (and non-empty).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// `K_{1,n-1}` for some `n ≥ 2`.
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count();
        if n < 2 || self.edge_count() != n - 1 {
            return false;
        }
        self.adj.iter().any(|l| l.len() == n - 1)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
            false
        })
    }

    /// Reachability partition; each component is sorted and the list is
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component (the empty graph is not
    /// connected).
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (index[w] != usize::MAX && i < index[w]).then(|| (i, index[w])))
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("complement of a simple graph")
    }

    /// `E_G(X) = [X, V∖X]`, sorted, each edge as `(min, max)`.
    pub fn edge_boundary(&self, side: &[usize]) -> Vec<Edge> {
        let mask = self.membership(side);
        let mut out: Vec<Edge> = side
            .iter()
            .flat_map(|&u| {
                let mask = &mask;
                self.adj[u]
                    .iter()
                    .filter(move |&&v| !mask[v])
                    .map(move |&v| (u.min(v), u.max(v)))
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Boolean membership vector for a vertex subset (out-of-range ids are
    /// ignored).
    pub fn membership(&self, side: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count()];
        for &v in side {
            if let Some(m) = mask.get_mut(v) {
                *m = true;
            }
        }
        mask
    }

    /// Edge set comparison that ignores any attached port labelling.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}
