use crate::error::{Error, Result};
use crate::graph::Graph;

use super::cayley::{cayley_graph, CayleySpec, GroupTable};
use super::px::px;

/// Lines of the Fano plane on points `0..7`: `{1,2,4}, {2,3,5}, ..., {7,1,3}`
/// shifted down by one.
pub const FANO_LINES: [[usize; 3]; 7] = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2]];

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("simple")
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)))).expect("simple")
}

/// `K_{5,5}` minus the perfect matching `{i, i + 5}`.
pub fn k55_minus_matching() -> Graph {
    Graph::new(10, (0..5).flat_map(|i| (0..5).filter(move |&j| j != i).map(move |j| (i, j + 5)))).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

/// `Cay(Z_2^d, standard basis)`; vertex `x` is the bit mask of its coordinates.
pub fn hypercube(d: usize) -> Graph {
    let spec = CayleySpec::new(GroupTable::elementary_abelian_2(d), (0..d).map(|j| 1 << j)).expect("valid");
    cayley_graph(&spec).expect("involutions")
}

/// `Cay(Z_n, {±j : j in jumps})`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    let conn = jumps.iter().flat_map(|&j| [j % n, (n - j % n) % n]);
    cayley_graph(&CayleySpec::new(GroupTable::cyclic(n), conn)?)
}

/// `Cay(Z_n x Z_2, {(0,1), (1,0), (-1,0)})`; vertex `(a, b)` is `2a + b`.
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("prism needs n >= 3, got {n}")));
    }
    let t = GroupTable::direct_product(&GroupTable::cyclic(n), &GroupTable::cyclic(2));
    cayley_graph(&CayleySpec::new(t, [1, 2, 2 * (n - 1)])?)
}

/// `Cay(Z_2n, {1, n, -1})`.
pub fn moebius(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition(format!("Moebius ladder needs n >= 2, got {n}")));
    }
    cayley_graph(&CayleySpec::new(GroupTable::cyclic(2 * n), [1, n, 2 * n - 1])?)
}

/// Points `0..7`, lines `7..14`; a point is adjacent to the lines missing it.
pub fn bch() -> Graph {
    fano_bipartite(false)
}

/// Point-line incidence graph of the Fano plane.
pub fn heawood() -> Graph {
    fano_bipartite(true)
}

fn fano_bipartite(incident: bool) -> Graph {
    let edges = FANO_LINES
        .iter()
        .enumerate()
        .flat_map(|(l, line)| (0..7).filter(move |p| line.contains(p) == incident).map(move |p| (p, 7 + l)));
    Graph::new(14, edges).expect("simple")
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("simple")
}

/// Generalised Petersen graph `GP(n, k)`: outer cycle `0..n`, spokes
/// `i ~ n + i`, inner edges `n + i ~ n + (i + k) mod n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::Precondition(format!("GP({n}, {k}) needs n >= 3 and 0 < k < n/2")));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, i + n));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    Graph::new(2 * n, outer.chain(spokes).chain(inner))
}

fn parse_param(rest: &str) -> Option<usize> {
    let rest = rest.trim_start_matches(['(', '-', '_', ':']).trim_end_matches(')');
    rest.parse().ok()
}

/// Looks up a named graph: `K5`, `K4,4`, `K5,5-5K2`, `Q4`, `BCH`,
/// `Petersen`, `Heawood`, `prism(n)`, `moebius(n)`, `GP(n,k)` and `PX(r,s)`.
/// Case, spaces and commas are not significant.
pub fn named(name: &str) -> Result<Graph> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let compact = key.replace(',', "");
    let unknown = || Error::UnknownName(name.to_string());
    match compact.as_str() {
        "k5" => return Ok(complete(5)),
        "k44" => return Ok(complete_bipartite(4, 4)),
        "k55-5k2" => return Ok(k55_minus_matching()),
        "q4" => return Ok(hypercube(4)),
        "bch" => return Ok(bch()),
        "petersen" => return Ok(petersen()),
        "heawood" => return Ok(heawood()),
        _ => {}
    }
    if let Some(rest) = compact.strip_prefix("prism") {
        return prism(parse_param(rest).ok_or_else(unknown)?);
    }
    for prefix in ["moebius", "mobius", "möbius"] {
        if let Some(rest) = compact.strip_prefix(prefix) {
            return moebius(parse_param(rest).ok_or_else(unknown)?);
        }
    }
    if let Some((a, b)) = pair(&key, "gp") {
        return generalized_petersen(a, b);
    }
    if let Some((r, s)) = pair(&key, "px") {
        return px(r, s);
    }
    Err(unknown())
}

fn pair(key: &str, prefix: &str) -> Option<(usize, usize)> {
    let inner = key.strip_prefix(prefix)?.trim_start_matches('(').trim_end_matches(')');
    let mut parts = inner.split(',').map(|p| p.parse::<usize>());
    match (parts.next(), parts.next(), parts.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}
