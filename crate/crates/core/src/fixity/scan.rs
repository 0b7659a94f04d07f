use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{quotient_graph, Graph};
use crate::permgroup::{Partition, Permutation, PermutationGroup};
use crate::scalar::{ratio, ExactInt};

use super::edges::fixed_edge_count;

/// A maximising non-identity element: its index in the group's element list,
/// the element, and its fixed count on the relevant domain.
#[derive(Clone, Debug)]
pub struct MaxFixity<I: ExactInt> {
    pub ratio: Ratio<I>,
    pub fixed: usize,
    pub witness_index: usize,
    pub witness: Permutation,
}

fn max_over<I: ExactInt>(
    elements: &[Permutation],
    domain: usize,
    count: impl Fn(&Permutation) -> usize + Sync,
) -> Result<MaxFixity<I>> {
    if domain == 0 {
        return Err(Error::EmptyDomain);
    }
    let (fixed, witness_index) = elements
        .par_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_identity())
        .map(|(i, p)| (count(p), i))
        .reduce_with(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .ok_or(Error::TrivialGroup)?;
    Ok(MaxFixity { ratio: ratio(fixed, domain), fixed, witness_index, witness: elements[witness_index].clone() })
}

/// Largest edge fixed-point ratio of a non-identity element of `group`.
/// Ties go to the smallest element index.
pub fn max_edge_fpr<I: ExactInt>(g: &Graph, group: &PermutationGroup) -> Result<MaxFixity<I>> {
    if group.degree() != g.order() {
        return Err(Error::DegreeMismatch { left: g.order(), right: group.degree() });
    }
    max_over(group.elements()?, g.size(), |p| fixed_edge_count(g, p))
}

/// As [`max_edge_fpr`], scanning one element per conjugacy class.
pub fn max_edge_fpr_by_class<I: ExactInt>(g: &Graph, group: &PermutationGroup) -> Result<MaxFixity<I>> {
    let elements = group.elements()?;
    let reps: Vec<Permutation> = group.conjugacy_classes()?.iter().map(|c| elements[c[0]].clone()).collect();
    let best = max_over::<I>(&reps, g.size(), |p| fixed_edge_count(g, p))?;
    let index = group.index_of(&best.witness)?.expect("class representative");
    Ok(MaxFixity { witness_index: index, ..best })
}

/// Largest point fixed-point ratio of a non-identity element.
pub fn max_point_fpr<I: ExactInt>(group: &PermutationGroup) -> Result<MaxFixity<I>> {
    max_over(group.elements()?, group.degree(), Permutation::fixed_point_count)
}

/// `(fpr(Ω, g), fpr(Σ, g^Σ))` for a `g`-invariant partition `Σ` of `Ω`.
pub fn quotient_fpr_pair<I: ExactInt>(g: &Permutation, partition: &Partition) -> Result<(Ratio<I>, Ratio<I>)> {
    if partition.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: partition.degree(), right: g.degree() });
    }
    let induced = partition.induced(g)?;
    if partition.is_empty() {
        return Err(Error::EmptyDomain);
    }
    Ok((ratio(g.fixed_point_count(), g.degree()), ratio(induced.fixed_point_count(), partition.len())))
}

/// Valency of the quotient by the orbits of `n` when that quotient is
/// regular, for graphs where `n` is a normal subgroup of a transitive group.
pub fn normal_quotient_valency(g: &Graph, n: &PermutationGroup) -> Result<Option<usize>> {
    Ok(quotient_graph(g, &n.orbits())?.regular_valency())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, px, px_groups};
    use crate::symmetry::automorphism_group;
    use crate::Fraction;

    #[test]
    fn k5_maximum_is_a_transposition() {
        let g = complete(5);
        let m = max_edge_fpr::<i64>(&g, &automorphism_group(&g).unwrap()).unwrap();
        assert_eq!(m.ratio, Fraction::new(2, 5));
        assert_eq!(m.witness.cycle_type_string(), "1^3 2^1");
        let c = max_edge_fpr_by_class::<i64>(&g, &automorphism_group(&g).unwrap()).unwrap();
        assert_eq!(c.ratio, m.ratio);
    }

    #[test]
    fn trivial_group_errors() {
        let g = complete(3);
        assert_eq!(max_edge_fpr::<i64>(&g, &PermutationGroup::trivial(3)).unwrap_err(), Error::TrivialGroup);
    }

    #[test]
    fn kernel_maximum_on_px() {
        let g = px(7, 2).unwrap();
        let m = max_edge_fpr::<i64>(&g, &px_groups(7, 2).unwrap().k).unwrap();
        assert_eq!(m.ratio, Fraction::new(4, 7));
    }

    #[test]
    fn quotient_pair_on_blocks() {
        let p = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let sigma = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (a, b) = quotient_fpr_pair::<i64>(&p, &sigma).unwrap();
        assert_eq!((a, b), (Fraction::new(1, 2), Fraction::from(1)));
    }
}
