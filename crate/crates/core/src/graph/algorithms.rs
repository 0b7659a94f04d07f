use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::permgroup::Partition;

use super::{Digraph, Girth, Graph};

pub(super) fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // every cycle closed from here has length >= 2 * dist[u]
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

pub(super) fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    for root in 0..g.order() {
        if seen[root] {
            continue;
        }
        count += 1;
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub(super) fn distances_from(g: &Graph, v: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have distances");
        for &w in g.neighbours(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn connected_without(g: &Graph, incident: &[Vec<(usize, usize)>], removed: &[bool]) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &(w, e) in &incident[u] {
            if !removed[e] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

pub(super) fn is_k_edge_connected(g: &Graph, k: usize) -> Result<bool> {
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedConnectivity(k));
    }
    let mut incident = vec![Vec::new(); g.order()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push((v, e));
        incident[v].push((u, e));
    }
    let mut removed = vec![false; g.size()];
    fn recurse(g: &Graph, incident: &[Vec<(usize, usize)>], removed: &mut [bool], start: usize, budget: usize) -> bool {
        if !connected_without(g, incident, removed) {
            return false;
        }
        if budget == 0 {
            return true;
        }
        for e in start..removed.len() {
            removed[e] = true;
            let ok = recurse(g, incident, removed, e + 1, budget - 1);
            removed[e] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    Ok(recurse(g, &incident, &mut removed, 0, k - 1))
}

/// Depth-first, explicit stack; each frame remembers the next neighbour slot.
fn walk_s_arcs(g: &Graph, s: usize, mut visit: impl FnMut(&[usize])) {
    let mut path: Vec<usize> = Vec::with_capacity(s + 1);
    let mut slot: Vec<usize> = Vec::with_capacity(s + 1);
    for v0 in 0..g.order() {
        path.clear();
        slot.clear();
        path.push(v0);
        slot.push(0);
        while let Some(&top) = path.last() {
            if path.len() == s + 1 {
                visit(&path);
                path.pop();
                slot.pop();
                continue;
            }
            let depth = path.len() - 1;
            let nb = g.neighbours(top);
            let mut i = slot[depth];
            while i < nb.len() && depth >= 1 && nb[i] == path[depth - 1] {
                i += 1;
            }
            if i < nb.len() {
                slot[depth] = i + 1;
                path.push(nb[i]);
                slot.push(0);
            } else {
                path.pop();
                slot.pop();
            }
        }
    }
}

pub(super) fn s_arcs(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    walk_s_arcs(g, s, |p| out.push(p.to_vec()));
    out
}

pub(super) fn count_s_arcs(g: &Graph, s: usize) -> usize {
    let mut count = 0;
    walk_s_arcs(g, s, |_| count += 1);
    count
}

/// An induced subgraph with its vertex relabelling: new vertex `i` is old
/// vertex `vertices[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

pub fn induced_subgraph(g: &Graph, subset: &[usize]) -> Result<InducedSubgraph> {
    let mut vertices = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let mut new_index = vec![usize::MAX; g.order()];
    for (i, &v) in vertices.iter().enumerate() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
        }
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
        .map(|&(u, v)| (new_index[u], new_index[v]));
    Ok(InducedSubgraph { graph: Graph::new(vertices.len(), edges)?, vertices })
}

/// Blocks become vertices, adjacent iff some edge of `g` joins them. Edges
/// inside a block and parallel cross edges collapse.
pub fn quotient_graph(g: &Graph, partition: &Partition) -> Result<Graph> {
    if partition.degree() != g.order() {
        return Err(Error::DegreeMismatch { left: partition.degree(), right: g.order() });
    }
    let edges = g.edges().iter().map(|&(u, v)| (partition.block_of(u), partition.block_of(v))).filter(|(a, b)| a != b);
    Graph::from_edges_dedup(partition.len(), edges)
}

pub fn underlying_graph(d: &Digraph) -> Graph {
    Graph::from_edges_dedup(d.order(), d.arcs().iter().copied()).expect("digraph arcs are loopless and in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(complete(5).girth(), Girth::Finite(3));
        assert_eq!(cycle(7).girth(), Girth::Finite(7));
        assert_eq!(path(6).girth(), Girth::Acyclic);
        assert_eq!(Graph::empty(0).girth(), Girth::Acyclic);
        let k33 = Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        assert_eq!(k33.girth(), Girth::Finite(4));
    }

    #[test]
    fn edge_connectivity() {
        let c5 = cycle(5);
        assert!(c5.is_k_edge_connected(2).unwrap());
        assert!(!c5.is_k_edge_connected(3).unwrap());
        assert!(complete(5).is_k_edge_connected(4).unwrap());
        assert!(!path(3).is_k_edge_connected(2).unwrap());
        assert_eq!(c5.is_k_edge_connected(5), Err(Error::UnsupportedConnectivity(5)));
        assert_eq!(c5.is_k_edge_connected(0), Err(Error::UnsupportedConnectivity(0)));
    }

    #[test]
    fn s_arc_counts() {
        let k5 = complete(5);
        assert_eq!(k5.s_arcs(0).len(), 5);
        assert_eq!(k5.s_arcs(1).len(), 2 * k5.size());
        assert_eq!(k5.s_arcs(2).len(), 60);
        assert_eq!(cycle(5).s_arcs(5).len(), 10);
        assert_eq!(k5.count_s_arcs(3), 5 * 4 * 3 * 3);
    }

    #[test]
    fn s_arcs_are_lexicographic_and_non_backtracking() {
        let arcs = complete(4).s_arcs(3);
        let mut sorted = arcs.clone();
        sorted.sort();
        assert_eq!(arcs, sorted);
        for a in &arcs {
            for w in a.windows(3) {
                assert_ne!(w[0], w[2]);
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = complete(5);
        assert_eq!(induced_subgraph(&k5, &[0, 1, 2, 3, 4]).unwrap().graph, k5);
        assert_eq!(induced_subgraph(&k5, &[]).unwrap().graph, Graph::empty(0));
        let k3 = induced_subgraph(&k5, &[4, 1, 2]).unwrap();
        assert_eq!(k3.graph, complete(3));
        assert_eq!(k3.vertices, vec![1, 2, 4]);
    }

    #[test]
    fn quotients() {
        let c6 = cycle(6);
        assert_eq!(quotient_graph(&c6, &Partition::singletons(6)).unwrap(), c6);
        let one = quotient_graph(&c6, &Partition::whole(6)).unwrap();
        assert_eq!((one.order(), one.size()), (1, 0));
        let pairs = Partition::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(quotient_graph(&c6, &pairs).unwrap(), cycle(3));
    }

    #[test]
    fn underlying_graphs() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(underlying_graph(&d), cycle(3));
        let both = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(underlying_graph(&both).size(), 1);
        assert_eq!(underlying_graph(&Digraph::new(4, []).unwrap()), Graph::empty(4));
    }
}
