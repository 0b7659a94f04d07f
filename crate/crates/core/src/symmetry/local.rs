use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgroup::{Permutation, PermutationGroup};

/// The action of a vertex stabiliser `G_v` on the neighbourhood `Γ(v)`.
/// Neighbours are numbered by their position in the sorted neighbourhood.
#[derive(Clone, Debug)]
pub struct LocalAction {
    pub vertex: usize,
    pub neighbours: Vec<usize>,
    pub stabilizer: PermutationGroup,
    pub local: PermutationGroup,
    pub kernel: PermutationGroup,
}

impl LocalAction {
    /// Orbit lengths of the local group, sorted.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.local.orbits().blocks().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }
}

pub fn local_action(g: &Graph, group: &PermutationGroup, v: usize) -> Result<LocalAction> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let neighbours = g.neighbours(v).to_vec();
    let stabilizer = group.point_stabilizer(v)?;
    let mut restricted: Vec<Permutation> = Vec::new();
    for x in stabilizer.elements()? {
        let images = neighbours
            .iter()
            .map(|&w| {
                neighbours
                    .binary_search(&x.apply(w))
                    .map_err(|_| Error::NotAnAutomorphism { edge: (v, w), image: (v, x.apply(w)) })
            })
            .collect::<Result<Vec<_>>>()?;
        restricted.push(Permutation::from_images_unchecked(images));
    }
    let mut distinct = restricted.clone();
    distinct.sort_unstable_by(|a, b| a.images().cmp(b.images()));
    distinct.dedup();
    let identity_pos = distinct.iter().position(Permutation::is_identity).expect("identity");
    distinct.swap(0, identity_pos);
    let local = PermutationGroup::from_group_elements(neighbours.len(), distinct, group.cap());
    let kernel = stabilizer.subgroup_where(|x| neighbours.iter().all(|&w| x.apply(w) == w))?;
    let (s, l, k) = (stabilizer.order()?, local.order()?, kernel.order()?);
    if s != l * k {
        return Err(Error::Precondition(format!("|G_v| = {s} but |local| * |kernel| = {l} * {k}")));
    }
    Ok(LocalAction { vertex: v, neighbours, stabilizer, local, kernel })
}

/// `G_v` restricted to `Γ(v)`.
pub fn local_group(g: &Graph, group: &PermutationGroup, v: usize) -> Result<PermutationGroup> {
    Ok(local_action(g, group, v)?.local)
}

/// The elements of `G_v` fixing `Γ(v)` pointwise.
pub fn local_kernel(g: &Graph, group: &PermutationGroup, v: usize) -> Result<PermutationGroup> {
    Ok(local_action(g, group, v)?.kernel)
}
