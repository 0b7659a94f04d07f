use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::permgroup::Permutation;
use crate::symmetry::{automorphism_group_with, automorphism_search, transitivity_profile, Limits};

use super::edges::{classify_edges, EdgeClassification};

/// The counting inequalities on the classification of an automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inequality {
    /// `2|F| + 4|V1| + 3|V2| + |V4| <= |V|` on 4-valent graphs of girth at least 5.
    QuarticVertexBudget,
    /// `3|V4| <= 3|V1| + |V2|` on 4-valent graphs of girth at least 5 whose
    /// automorphism group is 2-arc-transitive with kernels meeting in 3-groups.
    QuarticBranching,
    /// `2|F| + 3|V1| + |V3| <= |V|` on connected cubic arc-transitive graphs of girth at least 5.
    CubicVertexBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum InequalityStatus {
    Holds { lhs: usize, rhs: usize },
    Fails { lhs: usize, rhs: usize },
    Skipped { reason: String },
}

impl InequalityStatus {
    fn compare(lhs: usize, rhs: usize) -> Self {
        if lhs <= rhs {
            Self::Holds { lhs, rhs }
        } else {
            Self::Fails { lhs, rhs }
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Self::Fails { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Self::Skipped { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub inequality: Inequality,
    pub status: InequalityStatus,
}

/// Graph-level facts the hypotheses depend on, computed once per graph.
#[derive(Clone, Debug)]
pub struct CountingContext<'a> {
    graph: &'a Graph,
    quartic: Option<String>,
    branching: Option<String>,
    cubic: Option<String>,
}

fn is_power_of_three(mut n: usize) -> bool {
    while n > 1 && n.is_multiple_of(3) {
        n /= 3;
    }
    n == 1
}

/// Reason the full automorphism group fails the branching hypotheses:
/// 2-arc-transitivity, and `G_v^[1] ∩ G_w^[1]` a 3-group whenever
/// `0 < d(v, w) <= 2`.
fn branching_reason(g: &Graph, limits: &Limits) -> Result<Option<String>> {
    let aut = automorphism_group_with(g, limits)?;
    let profile = transitivity_profile(g, &aut)?;
    if profile.max_s.unwrap_or(0) < 2 {
        return Ok(Some("automorphism group is not 2-arc-transitive".into()));
    }
    let kernel = |v: usize| -> Result<Vec<usize>> {
        let elements = aut.elements()?;
        Ok((0..elements.len())
            .filter(|&i| {
                let x = &elements[i];
                x.apply(v) == v && g.neighbours(v).iter().all(|&w| x.apply(w) == w)
            })
            .collect())
    };
    let k0 = kernel(0)?;
    let distances = g.distances_from(0);
    for (w, d) in distances.iter().enumerate() {
        if !matches!(d, Some(1 | 2)) {
            continue;
        }
        let kw = kernel(w)?;
        let common = k0.iter().filter(|i| kw.binary_search(i).is_ok()).count();
        if !is_power_of_three(common) {
            return Ok(Some(format!("kernels at vertices 0 and {w} meet in a group of order {common}")));
        }
    }
    Ok(None)
}

impl<'a> CountingContext<'a> {
    /// May enumerate Aut(Γ) when a group-theoretic hypothesis has to be decided.
    pub fn new(graph: &'a Graph, limits: &Limits) -> Result<Self> {
        let valency = graph.regular_valency();
        let connected = graph.is_connected();
        let girth_ok = graph.girth().at_least(5);
        let shape = |k: usize, name: &str| -> Option<String> {
            if valency != Some(k) {
                Some(format!("graph is not {name}"))
            } else if !connected {
                Some("graph is not connected".into())
            } else if !girth_ok {
                Some("girth is less than 5".into())
            } else {
                None
            }
        };
        let quartic = shape(4, "4-valent");
        let branching = match &quartic {
            Some(r) => Some(r.clone()),
            None => branching_reason(graph, limits)?,
        };
        let cubic = match shape(3, "cubic") {
            Some(r) => Some(r),
            None => {
                let generators = automorphism_search(graph, limits)?.generators;
                (arc_orbit_count(graph, &generators) != 1).then(|| "graph is not arc-transitive".to_string())
            }
        };
        Ok(Self { graph, quartic, branching, cubic })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Evaluates every inequality whose hypotheses hold for `p`.
    pub fn check(&self, p: &Permutation) -> Result<Vec<InequalityCheck>> {
        let c = classify_edges(self.graph, p)?;
        Ok(self.check_classified(p, &c))
    }

    pub fn check_classified(&self, p: &Permutation, c: &EdgeClassification) -> Vec<InequalityCheck> {
        let n = self.graph.order();
        let identity = p.is_identity().then(|| "identity element".to_string());
        let status = |reason: &Option<String>, lhs: usize, rhs: usize| match identity.as_ref().or(reason.as_ref()) {
            Some(r) => InequalityStatus::Skipped { reason: r.clone() },
            None => InequalityStatus::compare(lhs, rhs),
        };
        vec![
            InequalityCheck {
                inequality: Inequality::QuarticVertexBudget,
                status: status(&self.quartic, 2 * c.f.len() + 4 * c.v(1) + 3 * c.v(2) + c.v(4), n),
            },
            InequalityCheck {
                inequality: Inequality::QuarticBranching,
                status: status(&self.branching, 3 * c.v(4), 3 * c.v(1) + c.v(2)),
            },
            InequalityCheck {
                inequality: Inequality::CubicVertexBudget,
                status: status(&self.cubic, 2 * c.f.len() + 3 * c.v(1) + c.v(3), n),
            },
        ]
    }
}

fn arc_orbit_count(g: &Graph, generators: &[Permutation]) -> usize {
    let arcs = g.arcs();
    let mut parent: Vec<usize> = (0..arcs.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let index = |u: usize, v: usize| arcs.binary_search(&(u, v)).expect("arc");
    let mut count = arcs.len();
    for p in generators {
        for (i, &(u, v)) in arcs.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, index(p.apply(u), p.apply(v))));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
    }
    count
}

/// One-shot form of [`CountingContext::check`].
pub fn check_counting_inequalities(g: &Graph, p: &Permutation) -> Result<Vec<InequalityCheck>> {
    CountingContext::new(g, &Limits::default())?.check(p)
}

/// Euler and degree-sum identities on Γ[g] when it is a forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestCheck {
    pub is_forest: bool,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub degree_sum: usize,
    /// `|V| - |E| = components`; `None` when Γ[g] has a cycle.
    pub euler_holds: Option<bool>,
    /// `2|E| = Σ i |V_i|`; `None` when Γ[g] has a cycle.
    pub degree_sum_holds: Option<bool>,
}

pub fn forest_euler_check(c: &EdgeClassification) -> ForestCheck {
    let g = &c.gamma_g.graph;
    let is_forest = g.is_forest();
    let (vertices, edges, components) = (g.order(), g.size(), g.component_count());
    let degree_sum = c.valency_classes.iter().enumerate().map(|(i, vs)| i * vs.len()).sum();
    ForestCheck {
        is_forest,
        vertices,
        edges,
        components,
        degree_sum,
        euler_holds: is_forest.then_some(vertices == edges + components),
        degree_sum_holds: is_forest.then_some(degree_sum == 2 * edges),
    }
}
