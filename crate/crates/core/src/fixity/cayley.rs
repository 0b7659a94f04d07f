use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::families::CayleySpec;
use crate::scalar::{ratio, ExactInt};

/// Edge fixed-point ratio of right multiplication by `g` on the Cayley
/// graph, from the conjugacy class of `g` alone: `|g^G ∩ S| / (|S| |g^G|)`
/// when `g` is an involution, and 0 otherwise.
pub fn cayley_edge_fpr<I: ExactInt>(spec: &CayleySpec, g: usize) -> Result<Ratio<I>> {
    let t = spec.table();
    if g >= t.order() {
        return Err(Error::VertexOutOfRange { vertex: g, order: t.order() });
    }
    if g == t.identity() {
        return Err(Error::IdentityElement);
    }
    if !spec.is_inverse_closed() {
        return Err(Error::InvalidConnectionSet("connection set is not inverse-closed".into()));
    }
    if t.mul(g, g) != t.identity() {
        return Ok(ratio(0, 1));
    }
    let class = t.conjugacy_class(g);
    let hits = class.iter().filter(|c| spec.connection().contains(c)).count();
    Ok(ratio(hits, spec.connection().len() * class.len()))
}

/// An element `s` with the edges `{sh, h}`.
pub type EdgeClass = (usize, Vec<(usize, usize)>);

/// The edge classes `E_s = {{sh, h}}`, one per pair `{s, s^-1}` of the
/// connection set, as sorted edge lists. Each class of an involution is a
/// perfect matching; the classes partition the edge set.
pub fn connection_edge_classes(spec: &CayleySpec) -> Result<Vec<EdgeClass>> {
    if !spec.is_inverse_closed() {
        return Err(Error::InvalidConnectionSet("connection set is not inverse-closed".into()));
    }
    let t = spec.table();
    let mut classes = Vec::new();
    for &s in spec.connection() {
        if t.inv(s) < s {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = (0..t.order())
            .map(|h| {
                let x = t.mul(s, h);
                (x.min(h), x.max(h))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        classes.push((s, edges));
    }
    Ok(classes)
}
