use crate::error::Result;
use crate::families::{
    bch, circulant, complete, complete_bipartite, generalized_petersen, heawood, hypercube, k55_minus_matching,
    moebius, petersen, prism, px, split_px,
};
use crate::graph::Graph;

/// A built-in test graph with a stable identifier.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub id: String,
    pub graph: Graph,
}

fn entry(id: impl Into<String>, graph: Result<Graph>) -> Result<CatalogueEntry> {
    Ok(CatalogueEntry { id: id.into(), graph: graph? })
}

/// Largest vertex count of a family member in the built-in catalogues.
pub const CATALOGUE_MAX_ORDER: usize = 64;

/// `(r, s)` with `r * 2^s <= 64`, `r <= 8`, `s <= 3`.
pub fn px_catalogue_params() -> Vec<(usize, usize)> {
    (3..=8).flat_map(|r| (1..r.min(4)).map(move |s| (r, s))).filter(|&(r, s)| r << s <= CATALOGUE_MAX_ORDER).collect()
}

/// `(r, s)` with `2r * 2^s <= 64`, `r <= 8`.
pub fn split_px_catalogue_params() -> Vec<(usize, usize)> {
    (3..=8).flat_map(|r| (1..r).map(move |s| (r, s))).filter(|&(r, s)| r << (s + 1) <= CATALOGUE_MAX_ORDER).collect()
}

/// Connected 4-valent graphs, most of them vertex- and edge-transitive.
pub fn quartic_catalogue() -> Result<Vec<CatalogueEntry>> {
    let mut out = vec![
        entry("K5", Ok(complete(5)))?,
        entry("K5,5-5K2", Ok(k55_minus_matching()))?,
        entry("Q4", Ok(hypercube(4)))?,
        entry("BCH", Ok(bch()))?,
    ];
    for (r, s) in px_catalogue_params() {
        out.push(entry(format!("PX({r},{s})"), px(r, s))?);
    }
    for (n, k) in [(8, 2), (10, 3), (12, 5), (13, 5), (17, 4)] {
        out.push(entry(format!("C{n}(1,{k})"), circulant(n, &[1, k]))?);
    }
    Ok(out)
}

/// Connected cubic graphs, most of them vertex-transitive.
pub fn cubic_catalogue() -> Result<Vec<CatalogueEntry>> {
    let mut out = Vec::new();
    for (r, s) in split_px_catalogue_params() {
        out.push(entry(format!("SPLIT_PX({r},{s})"), split_px(r, s))?);
    }
    for n in [3, 5, 6, 7] {
        out.push(entry(format!("PRISM({n})"), prism(n))?);
    }
    for n in [4, 5, 6, 7] {
        out.push(entry(format!("MOEBIUS({n})"), moebius(n))?);
    }
    out.extend([
        entry("K4", Ok(complete(4)))?,
        entry("K3,3", Ok(complete_bipartite(3, 3)))?,
        entry("Q3", Ok(hypercube(3)))?,
        entry("Petersen", Ok(petersen()))?,
        entry("Heawood", Ok(heawood()))?,
        entry("GP(8,3)", generalized_petersen(8, 3))?,
        entry("GP(10,2)", generalized_petersen(10, 2))?,
        entry("GP(10,3)", generalized_petersen(10, 3))?,
    ]);
    Ok(out)
}

/// The catalogue for valency 3 or 4.
pub fn catalogue(valency: usize) -> Result<Vec<CatalogueEntry>> {
    match valency {
        3 => cubic_catalogue(),
        4 => quartic_catalogue(),
        _ => Err(crate::error::Error::Precondition(format!("no catalogue for valency {valency}"))),
    }
}
