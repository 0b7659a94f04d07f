use crate::error::{Error, Result};
use crate::graph::{underlying_graph, Digraph, Graph};
use crate::permgroup::{Permutation, PermutationGroup};

/// The pair `(r, s)` indexing a Praeger-Xu graph: `r >= 3`, `1 <= s <= r - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PraegerXuParams {
    r: usize,
    s: usize,
}

impl PraegerXuParams {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r < 3 || s < 1 || s >= r || s >= usize::BITS as usize - 2 {
            return Err(Error::InvalidPxParams { r, s });
        }
        Ok(Self { r, s })
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn s(self) -> usize {
        self.s
    }

    /// `r * 2^s`
    pub fn vertex_count(self) -> usize {
        self.r << self.s
    }

    /// `r * 2^(s+1)`
    pub fn edge_count(self) -> usize {
        self.r << (self.s + 1)
    }

    /// `3s < 2r - 3`, the parameter range in which some automorphism fixes
    /// more than a third of the edges.
    pub fn in_high_fixity_range(self) -> bool {
        3 * self.s + 3 < 2 * self.r
    }

    pub fn vertex(self, index: usize) -> PxVertex {
        PxVertex { start: index >> self.s, bits: index & ((1 << self.s) - 1) }
    }

    pub fn index(self, v: PxVertex) -> usize {
        (v.start << self.s) | v.bits
    }

    /// Bit of the `k`-th point of the tuple (the first point is the most
    /// significant bit, matching the lexicographic vertex order).
    fn bit_mask(self, k: usize) -> usize {
        1 << (self.s - 1 - k)
    }
}

/// A vertex of the directed Praeger-Xu graph: an `(s-1)`-arc
/// `((x, i_0), (x+1, i_1), ..., (x+s-1, i_{s-1}))` of the doubled directed
/// `r`-cycle, stored as its start column and the bit string `i_0 .. i_{s-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PxVertex {
    pub start: usize,
    pub bits: usize,
}

impl PxVertex {
    /// The points `(column, layer)` of the tuple.
    pub fn points(self, params: PraegerXuParams) -> Vec<(usize, usize)> {
        (0..params.s).map(|k| ((self.start + k) % params.r, usize::from(self.bits & params.bit_mask(k) != 0))).collect()
    }
}

pub fn directed_px(r: usize, s: usize) -> Result<Digraph> {
    let p = PraegerXuParams::new(r, s)?;
    let n = p.vertex_count();
    let low = (1 << s) - 1;
    let arcs = (0..n).flat_map(|v| {
        let PxVertex { start, bits } = p.vertex(v);
        let next = (start + 1) % r;
        (0..2).map(move |j| (v, p.index(PxVertex { start: next, bits: ((bits << 1) & low) | j })))
    });
    Digraph::new(n, arcs)
}

pub fn px(r: usize, s: usize) -> Result<Graph> {
    Ok(underlying_graph(&directed_px(r, s)?))
}

fn vertex_map(p: PraegerXuParams, f: impl Fn(PxVertex) -> PxVertex) -> Permutation {
    Permutation::from_images_unchecked((0..p.vertex_count()).map(|v| p.index(f(p.vertex(v)))).collect())
}

/// The automorphism induced by swapping `(column, 0)` and `(column, 1)`.
pub fn px_tau(r: usize, s: usize, column: usize) -> Result<Permutation> {
    let p = PraegerXuParams::new(r, s)?;
    if column >= r {
        return Err(Error::Precondition(format!("column {column} not in Z_{r}")));
    }
    Ok(vertex_map(p, |v| {
        let k = (column + r - v.start) % r;
        if k < s {
            PxVertex { start: v.start, bits: v.bits ^ p.bit_mask(k) }
        } else {
            v
        }
    }))
}

/// The rotation `(x, i) -> (x + 1, i)`.
pub fn px_rho(r: usize, s: usize) -> Result<Permutation> {
    let p = PraegerXuParams::new(r, s)?;
    Ok(vertex_map(p, |v| PxVertex { start: (v.start + 1) % r, bits: v.bits }))
}

/// The reflection `(x, i) -> (-x, i)`; it reverses orientation, so tuples
/// are read backwards.
pub fn px_sigma(r: usize, s: usize) -> Result<Permutation> {
    let p = PraegerXuParams::new(r, s)?;
    Ok(vertex_map(p, |v| {
        let mut rev = 0;
        for k in 0..s {
            if v.bits & p.bit_mask(k) != 0 {
                rev |= p.bit_mask(s - 1 - k);
            }
        }
        let last = (v.start + s - 1) % r;
        PxVertex { start: (r - last) % r, bits: rev }
    }))
}

/// The groups `K = <tau_i>`, `H+ = K<rho>` and `H = K<rho, sigma>`.
#[derive(Clone, Debug)]
pub struct PxGroups {
    pub k: PermutationGroup,
    pub h_plus: PermutationGroup,
    pub h: PermutationGroup,
}

pub fn px_groups(r: usize, s: usize) -> Result<PxGroups> {
    let p = PraegerXuParams::new(r, s)?;
    let n = p.vertex_count();
    let taus = (0..r).map(|i| px_tau(r, s, i)).collect::<Result<Vec<_>>>()?;
    let rho = px_rho(r, s)?;
    let sigma = px_sigma(r, s)?;
    let mut plus = taus.clone();
    plus.push(rho.clone());
    let mut full = plus.clone();
    full.push(sigma);
    Ok(PxGroups {
        k: PermutationGroup::new(n, taus)?,
        h_plus: PermutationGroup::new(n, plus)?,
        h: PermutationGroup::new(n, full)?,
    })
}

/// Column index `x` of the set `Delta_x` containing vertex `v`.
pub fn delta_column(r: usize, s: usize, v: usize) -> Result<usize> {
    Ok(PraegerXuParams::new(r, s)?.vertex(v).start)
}
