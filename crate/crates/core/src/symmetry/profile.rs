use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgroup::{Permutation, PermutationGroup};

/// Largest s for which s-arc-transitivity is tested.
pub const MAX_S: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityProfile {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub half_arc_transitive: bool,
    /// Largest s ≤ [`MAX_S`] with s-arc-transitivity; `None` if not vertex-transitive.
    pub max_s: Option<usize>,
    pub s_arc_regular_at: Option<usize>,
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of orbits of the group generated by `generators` on `0..len`,
/// where `image(g, i)` is the image of item `i` under generator `g`.
fn orbit_count(len: usize, generators: &[Permutation], image: impl Fn(&Permutation, usize) -> usize) -> usize {
    let mut parent: Vec<usize> = (0..len).collect();
    let mut count = len;
    for g in generators {
        for i in 0..len {
            let (a, b) = (find(&mut parent, i), find(&mut parent, image(g, i)));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
    }
    count
}

fn s_arc_orbits(g: &Graph, group: &PermutationGroup, s: usize) -> (usize, usize) {
    let arcs = g.s_arcs(s);
    let index: HashMap<&[usize], usize> = arcs.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let orbits = orbit_count(arcs.len(), group.generators(), |p, i| {
        let image: Vec<usize> = arcs[i].iter().map(|&x| p.apply(x)).collect();
        index[image.as_slice()]
    });
    (orbits, arcs.len())
}

/// Orbit counts of `group` on vertices, edges, arcs and s-arcs.
pub fn transitivity_profile(g: &Graph, group: &PermutationGroup) -> Result<TransitivityProfile> {
    if group.degree() != g.order() {
        return Err(Error::DegreeMismatch { left: g.order(), right: group.degree() });
    }
    if let Some(p) = group.generators().iter().find(|p| !g.is_automorphism(p.images())) {
        return Err(Error::Precondition(format!("{p} is not an automorphism")));
    }
    let order = group.order()?;
    let vertex_orbits = orbit_count(g.order(), group.generators(), |p, v| p.apply(v));
    let edges = g.edges();
    let edge_orbits = orbit_count(edges.len(), group.generators(), |p, i| {
        let (u, v) = edges[i];
        g.edge_index(p.apply(u), p.apply(v)).expect("automorphism")
    });
    let (arc_orbits, _) = s_arc_orbits(g, group, 1);
    let vertex_transitive = vertex_orbits <= 1;
    let edge_transitive = edge_orbits <= 1;
    let arc_transitive = arc_orbits <= 1;

    let mut max_s = None;
    let mut s_arc_regular_at = None;
    if vertex_transitive {
        for s in 0..=MAX_S {
            let (orbits, count) = if s == 0 { (vertex_orbits, g.order()) } else { s_arc_orbits(g, group, s) };
            if orbits > 1 || count == 0 {
                break;
            }
            max_s = Some(s);
            if count == order {
                s_arc_regular_at = Some(s);
            }
        }
    }
    Ok(TransitivityProfile {
        vertex_transitive,
        edge_transitive,
        arc_transitive,
        half_arc_transitive: vertex_transitive && edge_transitive && !arc_transitive && !edges.is_empty(),
        max_s,
        s_arc_regular_at,
        vertex_orbits,
        edge_orbits,
        arc_orbits,
    })
}
