//! Individualisation-refinement backtracking over ordered vertex partitions.
//!
//! The source graph is walked down a single "first path": at each level the
//! first vertex of the first smallest non-singleton cell is individualised.
//! The target side branches over the whole corresponding cell, and a branch
//! survives only while its refinement trace matches the source path. Leaves
//! are checked edge by edge, so every returned map is a verified isomorphism.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgroup::Permutation;

#[derive(Clone, Debug)]
struct Node {
    cells: Vec<Vec<usize>>,
    trace: u64,
}

impl Node {
    fn shape(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().map(Vec::len)
    }

    fn matches(&self, other: &Node) -> bool {
        self.trace == other.trace && self.cells.len() == other.cells.len() && self.shape().eq(other.shape())
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }
}

/// Equitable refinement: cells split by the multiset of neighbouring cell
/// indices until stable. Fragments are ordered by signature, so the result
/// depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>, seed: u64) -> Node {
    let n = g.order();
    let mut hasher = DefaultHasher::new();
    seed.hash(&mut hasher);
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split_any = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = g.neighbours(v).iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            let mut fragments = 0;
            while start < keyed.len() {
                let end = start + keyed[start..].iter().take_while(|(s, _)| *s == keyed[start].0).count();
                keyed[start].0.hash(&mut hasher);
                (end - start).hash(&mut hasher);
                next.push(keyed[start..end].iter().map(|&(_, v)| v).collect());
                fragments += 1;
                start = end;
            }
            fragments.hash(&mut hasher);
            split_any |= fragments > 1;
        }
        cells = next;
        if !split_any {
            break;
        }
        0xfeedu16.hash(&mut hasher);
    }
    Node { cells, trace: hasher.finish() }
}

fn individualize(g: &Graph, node: &Node, cell: usize, v: usize) -> Node {
    let mut cells = Vec::with_capacity(node.cells.len() + 1);
    cells.extend_from_slice(&node.cells[..cell]);
    cells.push(vec![v]);
    cells.push(node.cells[cell].iter().copied().filter(|&x| x != v).collect());
    cells.extend_from_slice(&node.cells[cell + 1..]);
    refine(g, cells, cell as u64)
}

fn target_cell(node: &Node) -> Option<usize> {
    node.cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i)
}

#[derive(Clone, Debug)]
struct Level {
    node: Node,
    cell: usize,
    vertex: usize,
}

/// Node budget used when none is given.
pub const DEFAULT_SEARCH_BUDGET: usize = 2_000_000;

pub(crate) struct Searcher<'a> {
    source: &'a Graph,
    target: &'a Graph,
    path: Vec<Level>,
    leaf: Node,
    budget: usize,
    used: usize,
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(source: &'a Graph, target: &'a Graph, budget: usize) -> Self {
        let n = source.order();
        let mut node = refine(source, if n == 0 { vec![] } else { vec![(0..n).collect()] }, u64::MAX);
        let mut path = Vec::new();
        while let Some(cell) = target_cell(&node) {
            let vertex = node.cells[cell][0];
            let child = individualize(source, &node, cell, vertex);
            path.push(Level { node, cell, vertex });
            node = child;
        }
        Self { source, target, path, leaf: node, budget, used: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::SearchBudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn node_at(&self, depth: usize) -> &Node {
        if depth < self.path.len() {
            &self.path[depth].node
        } else {
            &self.leaf
        }
    }

    fn leaf_map(&self, tnode: &Node) -> Option<Vec<usize>> {
        let n = self.source.order();
        let mut images = vec![0; n];
        for (s, t) in self.leaf.cells.iter().zip(&tnode.cells) {
            images[s[0]] = t[0];
        }
        self.source.edges().iter().all(|&(u, v)| self.target.has_edge(images[u], images[v])).then_some(images)
    }

    /// Depth-first search below a target node aligned with source depth `depth`.
    fn descend(&mut self, depth: usize, tnode: Node) -> Result<Option<Vec<usize>>> {
        self.tick()?;
        if depth == self.path.len() {
            return Ok(if tnode.is_discrete(self.target.order()) { self.leaf_map(&tnode) } else { None });
        }
        let cell = self.path[depth].cell;
        let candidates = tnode.cells[cell].clone();
        for w in candidates {
            let child = individualize(self.target, &tnode, cell, w);
            if !child.matches(self.node_at(depth + 1)) {
                continue;
            }
            if let Some(map) = self.descend(depth + 1, child)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }

    /// One isomorphism from source to target, if any.
    pub(crate) fn find_isomorphism(&mut self) -> Result<Option<Vec<usize>>> {
        let n = self.source.order();
        if n != self.target.order() || self.source.size() != self.target.size() {
            return Ok(None);
        }
        let root = refine(self.target, if n == 0 { vec![] } else { vec![(0..n).collect()] }, u64::MAX);
        if !root.matches(self.node_at(0)) {
            return Ok(None);
        }
        if n == 0 {
            return Ok(Some(Vec::new()));
        }
        self.descend(0, root)
    }

    /// Strong generators of the automorphism group (source == target) and
    /// the basic orbit lengths along the first path, whose product is the
    /// group order.
    pub(crate) fn automorphisms(&mut self) -> Result<(Vec<Permutation>, Vec<usize>)> {
        let n = self.source.order();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut orbit_lengths = vec![1; self.path.len()];
        for depth in (0..self.path.len()).rev() {
            let Level { node, cell, vertex } = self.path[depth].clone();
            let mut in_orbit = orbit_of(n, &generators, vertex);
            for &w in &node.cells[cell] {
                if in_orbit[w] {
                    continue;
                }
                let child = individualize(self.target, &node, cell, w);
                if !child.matches(self.node_at(depth + 1)) {
                    continue;
                }
                if let Some(map) = self.descend(depth + 1, child)? {
                    generators.push(Permutation::from_images_unchecked(map));
                    in_orbit = orbit_of(n, &generators, vertex);
                }
            }
            orbit_lengths[depth] = in_orbit.iter().filter(|&&b| b).count();
        }
        Ok((generators, orbit_lengths))
    }
}

fn orbit_of(n: usize, generators: &[Permutation], v: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}
