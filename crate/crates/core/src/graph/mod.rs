//! Simple undirected graphs and loopless digraphs.

mod algorithms;
pub mod graph6;

use serde::Serialize;

use crate::error::{Error, Result};

pub use algorithms::{induced_subgraph, quotient_graph, underlying_graph, InducedSubgraph};

/// A finite simple undirected graph on `0..n`.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically;
/// the position of an edge in this list is its edge index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Rejects loops, out-of-range endpoints and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(Self { adjacency, edges: list })
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::new(n, list)
    }

    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbourhood(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    #[inline]
    pub(crate) fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn valency(&self, v: usize) -> Result<usize> {
        Ok(self.neighbourhood(v)?.len())
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adjacency.iter().all(|nb| nb.len() == k)
    }

    /// The common valency, if the graph is regular and nonempty.
    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.adjacency.first()?.len();
        self.is_regular(k).then_some(k)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Arcs `(u, v)` in lexicographic order; arc `i` of vertex `u`'s block is
    /// `(u, neighbours(u)[i])`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.adjacency.iter().enumerate().flat_map(|(u, nb)| nb.iter().map(move |&v| (u, v))).collect()
    }

    /// Whether `images` (a vertex map) sends every edge to an edge and is a bijection.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.order()
            && crate::permgroup::Permutation::from_images(images.to_vec()).is_ok()
            && self.edges.iter().all(|&(u, v)| self.has_edge(images[u], images[v]))
    }

    pub fn girth(&self) -> Girth {
        algorithms::girth(self)
    }

    pub fn is_connected(&self) -> bool {
        algorithms::component_count(self) <= 1
    }

    pub fn component_count(&self) -> usize {
        algorithms::component_count(self)
    }

    pub fn is_forest(&self) -> bool {
        self.order() == self.size() + self.component_count()
    }

    /// True iff deleting any `k - 1` or fewer edges leaves the graph connected.
    /// Exhaustive over edge subsets; supports `1 <= k <= 4`.
    pub fn is_k_edge_connected(&self, k: usize) -> Result<bool> {
        algorithms::is_k_edge_connected(self, k)
    }

    /// All `s`-arcs in lexicographic order.
    pub fn s_arcs(&self, s: usize) -> Vec<Vec<usize>> {
        algorithms::s_arcs(self, s)
    }

    pub fn count_s_arcs(&self, s: usize) -> usize {
        algorithms::count_s_arcs(self, s)
    }

    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        algorithms::distances_from(self, v)
    }

    /// Vertex `v` becomes `images[v]`.
    pub fn relabel(&self, images: &[usize]) -> Result<Graph> {
        Graph::new(self.order(), self.edges.iter().map(|&(u, v)| (images[u], images[v])))
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![usize::MAX; self.order()];
        for root in 0..self.order() {
            if side[root] != usize::MAX {
                continue;
            }
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Length of a shortest cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// `girth >= k`; forests satisfy every bound.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

/// A loopless digraph on `0..n` with sorted, distinct arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedEdge(w[0].0, w[0].1));
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &list {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in inn.iter_mut() {
            l.sort_unstable();
        }
        Ok(Self { n, arcs: list, out, inn })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// Whether the vertex map preserves arcs.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.n && self.arcs.iter().all(|&(u, v)| self.has_arc(images[u], images[v]))
    }
}
