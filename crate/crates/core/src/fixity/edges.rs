use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, InducedSubgraph};
use crate::permgroup::Permutation;
use crate::scalar::{ratio, ExactInt};

/// The permutation of edge indices induced by a vertex automorphism.
pub fn edge_perm(g: &Graph, p: &Permutation) -> Result<Permutation> {
    if p.degree() != g.order() {
        return Err(Error::DegreeMismatch { left: g.order(), right: p.degree() });
    }
    let images = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let image = (p.apply(u), p.apply(v));
            g.edge_index(image.0, image.1).ok_or(Error::NotAnAutomorphism { edge: (u, v), image })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Permutation::from_images_unchecked(images))
}

/// Number of edges mapped to themselves (pointwise or with ends swapped).
pub(crate) fn fixed_edge_count(g: &Graph, p: &Permutation) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| {
            let (a, b) = (p.apply(u), p.apply(v));
            (a == u && b == v) || (a == v && b == u)
        })
        .count()
}

/// Edges split by how an automorphism `g` treats them: fixed pointwise (`a`),
/// fixed with ends swapped (`f`), or moved (`n`). `gamma_g` is the subgraph
/// spanned by `a`, and `valency_classes[i]` lists its vertices of valency `i`
/// (as vertices of the original graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub a: Vec<usize>,
    pub f: Vec<usize>,
    pub n: Vec<usize>,
    pub gamma_g: InducedSubgraph,
    pub valency_classes: Vec<Vec<usize>>,
}

impl EdgeClassification {
    /// `|V_i(Γ, g)|`.
    pub fn v(&self, i: usize) -> usize {
        self.valency_classes.get(i).map_or(0, Vec::len)
    }

    pub fn fixed_edge_count(&self) -> usize {
        self.a.len() + self.f.len()
    }

    pub fn edge_count(&self) -> usize {
        self.a.len() + self.f.len() + self.n.len()
    }
}

pub fn classify_edges(g: &Graph, p: &Permutation) -> Result<EdgeClassification> {
    let images = edge_perm(g, p)?;
    let (mut a, mut f, mut n) = (Vec::new(), Vec::new(), Vec::new());
    let mut meets_a = vec![false; g.order()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if images.apply(i) != i {
            n.push(i);
        } else if p.apply(u) == u {
            a.push(i);
            meets_a[u] = true;
            meets_a[v] = true;
        } else {
            f.push(i);
        }
    }
    let support: Vec<usize> = (0..g.order()).filter(|&v| meets_a[v]).collect();
    let gamma_g = induced_subgraph(g, &support)?;
    let mut valency_classes = vec![Vec::new(); max_valency(&gamma_g.graph) + 1];
    for (i, &v) in gamma_g.vertices.iter().enumerate() {
        valency_classes[gamma_g.graph.neighbours(i).len()].push(v);
    }
    Ok(EdgeClassification { a, f, n, gamma_g, valency_classes })
}

fn max_valency(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.neighbours(v).len()).max().unwrap_or(0)
}

/// Fixed vertices, edges and arcs of one automorphism, with exact ratios.
#[derive(Clone, Debug)]
pub struct FixityReport<I: ExactInt> {
    pub element: usize,
    pub fixed_vertices: usize,
    pub fixed_edges: usize,
    pub fixed_arcs: usize,
    pub fpr_v: Ratio<I>,
    pub fpr_e: Ratio<I>,
    pub fpr_a: Ratio<I>,
    pub classification: EdgeClassification,
}

/// The report for `p`, labelled `element`. Needs at least one edge.
pub fn fixity_report<I: ExactInt>(g: &Graph, p: &Permutation, element: usize) -> Result<FixityReport<I>> {
    if g.size() == 0 {
        return Err(Error::EmptyDomain);
    }
    let classification = classify_edges(g, p)?;
    let fixed_vertices = p.fixed_point_count();
    let fixed_edges = classification.fixed_edge_count();
    let fixed_arcs = 2 * classification.a.len();
    Ok(FixityReport {
        element,
        fixed_vertices,
        fixed_edges,
        fixed_arcs,
        fpr_v: ratio(fixed_vertices, g.order()),
        fpr_e: ratio(fixed_edges, g.size()),
        fpr_a: ratio(fixed_arcs, 2 * g.size()),
        classification,
    })
}

/// Serialisable summary of a [`FixityReport`] with ratios as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixitySummary {
    pub element: usize,
    pub cycle_type: String,
    pub fixed_vertices: usize,
    pub fixed_edges: usize,
    pub fixed_arcs: usize,
    pub fpr_v: String,
    pub fpr_e: String,
    pub fpr_a: String,
    pub pointwise: usize,
    pub swapped: usize,
    pub moved: usize,
    pub valency_classes: Vec<usize>,
}

impl<I: ExactInt> FixityReport<I> {
    pub fn summary(&self, p: &Permutation) -> FixitySummary {
        use crate::scalar::fraction_string;
        FixitySummary {
            element: self.element,
            cycle_type: p.cycle_type_string(),
            fixed_vertices: self.fixed_vertices,
            fixed_edges: self.fixed_edges,
            fixed_arcs: self.fixed_arcs,
            fpr_v: fraction_string(&self.fpr_v),
            fpr_e: fraction_string(&self.fpr_e),
            fpr_a: fraction_string(&self.fpr_a),
            pointwise: self.classification.a.len(),
            swapped: self.classification.f.len(),
            moved: self.classification.n.len(),
            valency_classes: self.classification.valency_classes.iter().map(Vec::len).collect(),
        }
    }
}
