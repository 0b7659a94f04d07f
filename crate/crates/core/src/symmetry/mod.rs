//! Automorphism groups by exhaustive search, transitivity predicates, local
//! actions and isomorphism testing against the Praeger-Xu families.

mod identify;
mod local;
mod profile;
mod search;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgroup::{Permutation, PermutationGroup, DEFAULT_ENUMERATION_CAP};

pub use identify::{identify_px, identify_split_px, PxIdentification, PX_MAX_R, PX_MAX_S};
pub use local::{local_action, local_group, local_kernel, LocalAction};
pub use profile::{transitivity_profile, TransitivityProfile, MAX_S};
pub use search::DEFAULT_SEARCH_BUDGET;

/// Environment variable overriding both the enumeration cap and the search budget.
pub const CAP_ENV: &str = "EDGEFIXITY_CAP";

/// Resource bounds for enumeration and backtracking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enumeration_cap: usize,
    pub search_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { enumeration_cap: DEFAULT_ENUMERATION_CAP, search_budget: DEFAULT_SEARCH_BUDGET }
    }
}

impl Limits {
    /// Defaults, overridden by `EDGEFIXITY_CAP` when it parses as a positive integer.
    pub fn from_env() -> Self {
        match std::env::var(CAP_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
            Some(cap) if cap > 0 => Self { enumeration_cap: cap, search_budget: cap },
            _ => Self::default(),
        }
    }
}

/// Output of the generator search: a strong generating set along the search
/// base and the basic orbit lengths.
#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    pub generators: Vec<Permutation>,
    pub orbit_lengths: Vec<usize>,
}

impl AutomorphismSearch {
    /// Group order as the product of basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.orbit_lengths.iter().map(|&l| l as u128).product()
    }
}

/// Generators of Aut(Γ) without enumerating the group.
pub fn automorphism_search(g: &Graph, limits: &Limits) -> Result<AutomorphismSearch> {
    let (generators, orbit_lengths) = search::Searcher::new(g, g, limits.search_budget).automorphisms()?;
    Ok(AutomorphismSearch { generators, orbit_lengths })
}

/// Aut(Γ) with default limits.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup> {
    automorphism_group_with(g, &Limits::default())
}

/// Aut(Γ), enumerated. The enumerated order is checked against the product
/// of basic orbit lengths from the search.
pub fn automorphism_group_with(g: &Graph, limits: &Limits) -> Result<PermutationGroup> {
    let found = automorphism_search(g, limits)?;
    let expected = found.order();
    if expected > limits.enumeration_cap as u128 {
        return Err(Error::CapExceeded { cap: limits.enumeration_cap });
    }
    let group = PermutationGroup::new(g.order(), found.generators)?.with_cap(limits.enumeration_cap);
    let order = group.order()?;
    if order as u128 != expected {
        return Err(Error::Precondition(format!(
            "enumerated {order} automorphisms but the search base predicts {expected}"
        )));
    }
    Ok(group)
}

/// An isomorphism `a -> b` as a vertex map, checked edge by edge.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with(a, b, &Limits::default())
}

pub fn are_isomorphic_with(a: &Graph, b: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    search::Searcher::new(a, b, limits.search_budget).find_isomorphism()
}

/// The group generated by automorphisms `t_w` carrying `v` to each neighbour `w`.
/// On a connected graph this group is vertex-transitive; that conclusion is
/// checked and a violation reported as an error.
pub fn neighbour_generated_group(g: &Graph, v: usize, transversal: &[Permutation]) -> Result<PermutationGroup> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let mut hit = vec![false; n];
    for t in transversal {
        if t.degree() != n {
            return Err(Error::DegreeMismatch { left: n, right: t.degree() });
        }
        if !g.is_automorphism(t.images()) {
            return Err(Error::Precondition(format!("{t} is not an automorphism")));
        }
        let w = t.apply(v);
        if !g.has_edge(v, w) {
            return Err(Error::Precondition(format!("{t} maps {v} to non-neighbour {w}")));
        }
        hit[w] = true;
    }
    if let Some(&w) = g.neighbours(v).iter().find(|&&w| !hit[w]) {
        return Err(Error::Precondition(format!("no transversal element maps {v} to {w}")));
    }
    let group = PermutationGroup::new(n, transversal.to_vec())?;
    if !group.is_transitive() {
        return Err(Error::Precondition("generated group is not vertex-transitive".into()));
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bch, complete, complete_bipartite, cycle, petersen, px};

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(automorphism_group(&complete(5)).unwrap().order().unwrap(), 120);
        assert_eq!(automorphism_group(&petersen()).unwrap().order().unwrap(), 120);
        assert_eq!(automorphism_group(&cycle(7)).unwrap().order().unwrap(), 14);
        assert_eq!(automorphism_search(&complete_bipartite(4, 4), &Limits::default()).unwrap().order(), 1152);
        assert_eq!(automorphism_group(&bch()).unwrap().order().unwrap(), 336);
        assert_eq!(automorphism_group(&px(5, 1).unwrap()).unwrap().order().unwrap(), 320);
    }

    #[test]
    fn empty_and_edgeless() {
        assert_eq!(automorphism_group(&Graph::empty(0)).unwrap().order().unwrap(), 1);
        assert_eq!(automorphism_group(&Graph::empty(4)).unwrap().order().unwrap(), 24);
    }

    #[test]
    fn isomorphism_certificate() {
        let a = px(4, 1).unwrap();
        let b = complete_bipartite(4, 4);
        let map = are_isomorphic(&a, &b).unwrap().unwrap();
        for &(u, v) in a.edges() {
            assert!(b.has_edge(map[u], map[v]));
        }
        assert!(are_isomorphic(&complete(5), &petersen()).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let limits = Limits { enumeration_cap: 10, search_budget: 3 };
        assert!(matches!(automorphism_search(&petersen(), &limits), Err(Error::SearchBudgetExceeded { budget: 3 })));
        let limits = Limits { enumeration_cap: 10, search_budget: 1000 };
        assert_eq!(automorphism_group_with(&petersen(), &limits).unwrap_err(), Error::CapExceeded { cap: 10 });
    }

    #[test]
    fn rotations_generate_cycle_group() {
        let g = cycle(6);
        let r = Permutation::from_images((0..6).map(|i| (i + 1) % 6).collect()).unwrap();
        let t = vec![r.clone(), r.inverse()];
        let group = neighbour_generated_group(&g, 0, &t).unwrap();
        assert_eq!(group.order().unwrap(), 6);
        assert!(neighbour_generated_group(&g, 0, &[r]).is_err());
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let swap = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(neighbour_generated_group(&disconnected, 0, &[swap]).is_err());
    }
}
