#![allow(dead_code)]

//! Independent brute-force oracles shared by the integration tests.

use edgefix::Graph;

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.order()]; g.order()];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Breadth-first vertex order, so each vertex after a component root has an
/// earlier neighbour and the search prunes early.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.order());
    let mut seen = vec![false; g.order()];
    for root in 0..g.order() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbourhood(u).unwrap() {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    a: &'a [Vec<bool>],
    b: &'a [Vec<bool>],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.out.push(self.map.clone());
            return;
        }
        let v = self.order[depth];
        for x in 0..self.a.len() {
            if self.used[x] || self.order[..depth].iter().any(|&u| self.a[v][u] != self.b[x][self.map[u]]) {
                continue;
            }
            self.used[x] = true;
            self.map[v] = x;
            self.extend(depth + 1);
            self.used[x] = false;
        }
    }
}

/// Every isomorphism `a -> b` (up to `limit`) by plain backtracking over
/// vertex images with adjacency checks against all earlier vertices.
pub fn brute_isomorphisms(a: &Graph, b: &Graph, limit: usize) -> Vec<Vec<usize>> {
    if a.order() != b.order() || a.size() != b.size() {
        return Vec::new();
    }
    let (adj_a, adj_b, order) = (adjacency(a), adjacency(b), search_order(a));
    let mut s = Search {
        a: &adj_a,
        b: &adj_b,
        order: &order,
        map: vec![usize::MAX; a.order()],
        used: vec![false; a.order()],
        out: Vec::new(),
        limit,
    };
    s.extend(0);
    s.out
}

pub fn brute_automorphism_count(g: &Graph) -> usize {
    brute_isomorphisms(g, g, usize::MAX).len()
}

/// Edges `{u, v}` with `{p(u), p(v)} = {u, v}`, counted directly.
pub fn brute_fixed_edges(g: &Graph, images: &[usize]) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| {
            let (a, b) = (images[u], images[v]);
            (a.min(b), a.max(b)) == (u, v)
        })
        .count()
}

/// Girth by trying every edge as the closing edge of a shortest cycle.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if g.has_edge(x, y) && (x, y) != (u, v) && (x, y) != (v, u) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            best = Some(best.map_or(dist[v] + 1, |b| b.min(dist[v] + 1)));
        }
    }
    best
}

/// Number of s-arcs by extending walks one step at a time.
pub fn brute_s_arc_count(g: &Graph, s: usize) -> usize {
    let mut walks: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
    for _ in 0..s {
        let mut next = Vec::new();
        for w in &walks {
            let last = w[w.len() - 1];
            for y in 0..g.order() {
                if g.has_edge(last, y) && (w.len() < 2 || w[w.len() - 2] != y) {
                    let mut e = w.clone();
                    e.push(y);
                    next.push(e);
                }
            }
        }
        walks = next;
    }
    walks.len()
}

use edgefix::families::{px_groups, GroupTable};
use edgefix::symmetry::automorphism_group;
use edgefix::{Partition, Permutation, PermutationGroup};
use rand::Rng;

/// Small groups whose coset actions give the transitive test groups.
pub fn base_groups() -> Vec<PermutationGroup> {
    let sym = |n: usize| {
        let cycle: Vec<usize> = (0..n).collect();
        PermutationGroup::new(
            n,
            vec![Permutation::from_cycles(n, &[&cycle]).unwrap(), Permutation::from_cycles(n, &[&[0, 1]]).unwrap()],
        )
        .unwrap()
    };
    let regular = |t: &GroupTable| {
        PermutationGroup::new(t.order(), (0..t.order()).map(|g| t.right_regular(g)).collect()).unwrap()
    };
    vec![
        sym(4),
        sym(5),
        regular(&GroupTable::dihedral(6)),
        regular(&GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(6))),
        px_groups(4, 1).unwrap().h,
        px_groups(5, 2).unwrap().h,
        automorphism_group(&edgefix::families::petersen()).unwrap(),
        automorphism_group(&edgefix::families::heawood()).unwrap(),
    ]
}

/// A transitive group (a coset action of a random cyclic subgroup), the
/// orbit partition of a random normal closure, and a random element.
pub fn random_quotient_instance(
    bases: &[PermutationGroup],
    rng: &mut impl Rng,
) -> (PermutationGroup, Partition, Permutation) {
    let base = &bases[rng.gen_range(0..bases.len())];
    let els = base.elements().unwrap();
    let x = els[rng.gen_range(0..els.len())].clone();
    let h = PermutationGroup::new(base.degree(), vec![x]).unwrap();
    let t = base.coset_action(&h).unwrap();
    let tel = t.elements().unwrap();
    let y = tel[rng.gen_range(0..tel.len())].clone();
    let sigma = t.normal_closure(&y).unwrap().orbits();
    let g = tel[rng.gen_range(0..tel.len())].clone();
    (t, sigma, g)
}
