use serde::Serialize;

use crate::error::Result;
use crate::families::{px, split_px};
use crate::graph::Graph;

use super::{are_isomorphic_with, Limits};

/// Largest `r` tried by the identifiers.
pub const PX_MAX_R: usize = 14;
/// Largest `s` tried by the identifiers (also bounded by `r - 1`).
pub const PX_MAX_S: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PxIdentification {
    /// Isomorphic to the family member with these parameters, via `isomorphism`
    /// (a map from the input graph to the family member).
    Found { r: usize, s: usize, isomorphism: Vec<usize> },
    /// No member of the family has this shape within the search bounds, and
    /// no candidate was left untested.
    NotPx,
    /// Some candidate parameters lie outside the search bounds.
    Unknown,
}

impl PxIdentification {
    pub fn params(&self) -> Option<(usize, usize)> {
        match self {
            Self::Found { r, s, .. } => Some((*r, *s)),
            _ => None,
        }
    }
}

fn identify(
    g: &Graph,
    limits: &Limits,
    valency: usize,
    per_vertex: usize,
    build: fn(usize, usize) -> Result<Graph>,
) -> Result<PxIdentification> {
    let n = g.order();
    if n == 0 || g.regular_valency() != Some(valency) || !n.is_multiple_of(per_vertex) {
        return Ok(PxIdentification::NotPx);
    }
    let m = n / per_vertex;
    let mut out_of_bounds = false;
    for s in 1..usize::BITS as usize {
        if m >> s == 0 {
            break;
        }
        if !m.is_multiple_of(1 << s) {
            continue;
        }
        let r = m >> s;
        if r < 3 || s >= r {
            continue;
        }
        if r > PX_MAX_R || s > PX_MAX_S {
            out_of_bounds = true;
            continue;
        }
        if let Some(isomorphism) = are_isomorphic_with(g, &build(r, s)?, limits)? {
            return Ok(PxIdentification::Found { r, s, isomorphism });
        }
    }
    Ok(if out_of_bounds { PxIdentification::Unknown } else { PxIdentification::NotPx })
}

/// Finds `(r, s)` with Γ ≅ C(r, s), scanning `r * 2^s = |VΓ|`.
pub fn identify_px(g: &Graph, limits: &Limits) -> Result<PxIdentification> {
    identify(g, limits, 4, 1, px)
}

/// Finds `(r, s)` with Γ ≅ SC(r, s), scanning `2r * 2^s = |VΓ|`.
pub fn identify_split_px(g: &Graph, limits: &Limits) -> Result<PxIdentification> {
    identify(g, limits, 3, 2, split_px)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, hypercube, petersen};

    #[test]
    fn self_identification() {
        let limits = Limits::default();
        assert_eq!(identify_px(&px(5, 2).unwrap(), &limits).unwrap().params(), Some((5, 2)));
        assert_eq!(identify_split_px(&split_px(4, 1).unwrap(), &limits).unwrap().params(), Some((4, 1)));
        assert_eq!(identify_px(&complete_bipartite(4, 4), &limits).unwrap().params(), Some((4, 1)));
        assert_eq!(identify_px(&hypercube(4), &limits).unwrap().params(), Some((4, 2)));
    }

    #[test]
    fn non_members() {
        let limits = Limits::default();
        assert_eq!(identify_px(&complete(5), &limits).unwrap(), PxIdentification::NotPx);
        assert_eq!(identify_px(&hypercube(3), &limits).unwrap(), PxIdentification::NotPx);
        assert_eq!(identify_split_px(&petersen(), &limits).unwrap(), PxIdentification::NotPx);
    }

    #[test]
    fn out_of_bounds_is_unknown() {
        let big = crate::families::cycle(15 * 2);
        let four_valent = crate::families::circulant(30, &[1, 2]).unwrap();
        assert_eq!(identify_px(&big, &Limits::default()).unwrap(), PxIdentification::NotPx);
        assert_eq!(identify_px(&four_valent, &Limits::default()).unwrap(), PxIdentification::Unknown);
    }
}
