use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::permgroup::PermutationGroup;

use super::px::directed_px;

/// Out-copy of vertex `v` in a split graph.
pub fn plus(v: usize) -> usize {
    2 * v
}

/// In-copy of vertex `v` in a split graph.
pub fn minus(v: usize) -> usize {
    2 * v + 1
}

/// Splits every vertex `v` of a digraph with in- and out-valency 2 into
/// `v+ = 2v` and `v- = 2v + 1`, joined by an edge, with `{v+, u-}` for each
/// arc `(v, u)`. The result is cubic.
pub fn split(d: &Digraph) -> Result<Graph> {
    for v in 0..d.order() {
        let (i, o) = (d.in_neighbours(v).len(), d.out_neighbours(v).len());
        if i != 2 || o != 2 {
            return Err(Error::SplitValency { vertex: v, in_valency: i, out_valency: o });
        }
    }
    let rungs = (0..d.order()).map(|v| (plus(v), minus(v)));
    let arcs = d.arcs().iter().map(|&(v, u)| (plus(v), minus(u)));
    Graph::new(2 * d.order(), rungs.chain(arcs))
}

pub fn split_px(r: usize, s: usize) -> Result<Graph> {
    split(&directed_px(r, s)?)
}

/// The rungs `{v+, v-}` of a split graph on `2m` vertices.
pub fn rung_matching(order: usize) -> Vec<(usize, usize)> {
    (0..order / 2).map(|v| (plus(v), minus(v))).collect()
}

fn check_perfect_matching(g: &Graph, matching: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut slot = vec![usize::MAX; g.order()];
    for (i, &(u, v)) in matching.iter().enumerate() {
        if !g.has_edge(u, v) {
            return Err(Error::NotPerfectMatching(format!("{{{u}, {v}}} is not an edge")));
        }
        for x in [u, v] {
            if slot[x] != usize::MAX {
                return Err(Error::NotPerfectMatching(format!("vertex {x} covered twice")));
            }
            slot[x] = i;
        }
    }
    if let Some(x) = slot.iter().position(|&s| s == usize::MAX) {
        return Err(Error::NotPerfectMatching(format!("vertex {x} uncovered")));
    }
    Ok(slot)
}

/// Contracts a perfect matching: matching edge `i` becomes vertex `i`, and
/// two are adjacent when an edge outside the matching joins them. Loops and
/// parallel edges are rejected rather than simplified.
pub fn merge(g: &Graph, matching: &[(usize, usize)]) -> Result<Graph> {
    let slot = check_perfect_matching(g, matching)?;
    let mut seen: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for &(u, v) in g.edges() {
        let (a, b) = (slot[u], slot[v]);
        if a == b {
            let m = matching[a];
            if (m.0.min(m.1), m.0.max(m.1)) == (u, v) {
                continue;
            }
            return Err(Error::MergeNotSimple(format!("edge {{{u}, {v}}} becomes a loop")));
        }
        let key = (a.min(b), a.max(b));
        if let Some(prev) = seen.insert(key, (u, v)) {
            return Err(Error::MergeNotSimple(format!(
                "edges {{{}, {}}} and {{{u}, {v}}} both join blocks {a} and {b}",
                prev.0, prev.1
            )));
        }
    }
    Graph::new(matching.len(), seen.into_keys())
}

/// Pairs each vertex `w` with the unique neighbour fixed by the stabiliser
/// `G_w`. Fails unless every stabiliser has orbit lengths `{1, 2}` on the
/// neighbourhood.
pub fn canonical_matching(g: &Graph, aut: &PermutationGroup) -> Result<Vec<(usize, usize)>> {
    if g.regular_valency() != Some(3) {
        return Err(Error::Precondition("graph is not cubic".into()));
    }
    let mut partner = vec![usize::MAX; g.order()];
    for (w, slot) in partner.iter_mut().enumerate() {
        let stab = aut.point_stabilizer(w)?;
        let nb = g.neighbours(w);
        let mut lengths: Vec<usize> = Vec::new();
        let mut fixed = None;
        let mut done = vec![false; nb.len()];
        for (i, &x) in nb.iter().enumerate() {
            if done[i] {
                continue;
            }
            let orbit = stab.orbit(x);
            for (j, y) in nb.iter().enumerate() {
                if orbit.binary_search(y).is_ok() {
                    done[j] = true;
                }
            }
            if orbit.len() == 1 {
                fixed = Some(x);
            }
            lengths.push(orbit.len());
        }
        lengths.sort_unstable();
        if lengths != [1, 2] {
            return Err(Error::LocalOrbitStructure { vertex: w, orbit_lengths: lengths });
        }
        *slot = fixed.expect("an orbit of length one exists");
    }
    let mut out = Vec::new();
    for (w, &p) in partner.iter().enumerate() {
        if partner[p] != w {
            return Err(Error::Precondition(format!("partner of {w} is not an involution")));
        }
        if w < p {
            out.push((w, p));
        }
    }
    Ok(out)
}
