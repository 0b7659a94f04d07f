use std::fs;

use edgefix::families::{circulant, complete, cycle, generalized_petersen, hypercube, named, split_px};
use edgefix::graph::graph6;
use edgefix::Graph;

use crate::Failure;

/// Builds a family member from a name and integer parameters.
pub fn family(name: &str, params: &[usize]) -> Result<Graph, Failure> {
    let usage = |expected: &str| Failure::Usage(format!("{name} expects {expected}"));
    let key = name.to_lowercase().replace('_', "-");
    let built = match (key.as_str(), params) {
        ("px", [r, s]) => edgefix::families::px(*r, *s),
        ("px", _) => return Err(usage("r s")),
        ("split-px" | "splitpx" | "sc", [r, s]) => split_px(*r, *s),
        ("split-px" | "splitpx" | "sc", _) => return Err(usage("r s")),
        ("circulant", [n, jumps @ ..]) if !jumps.is_empty() => circulant(*n, jumps),
        ("circulant", _) => return Err(usage("n and at least one jump")),
        ("complete", [n]) => Ok(complete(*n)),
        ("cycle", [n]) if *n >= 3 => Ok(cycle(*n)),
        ("hypercube" | "cube", [d]) => Ok(hypercube(*d)),
        ("gp", [n, k]) => generalized_petersen(*n, *k),
        ("prism" | "moebius" | "mobius", [n]) => named(&format!("{key}({n})")),
        (_, []) => named(name),
        _ => return Err(Failure::Usage(format!("unknown family {name} with {} parameters", params.len()))),
    };
    built.map_err(|e| Failure::Usage(e.to_string()))
}

/// Parses `name`, `name(a,b)` or `name a b` into a graph.
pub fn build_spec(spec: &str) -> Result<Graph, Failure> {
    if let Ok(g) = named(spec) {
        return Ok(g);
    }
    let (name, rest) = match spec.find(['(', ' ', ':']) {
        Some(i) => (&spec[..i], &spec[i..]),
        None => (spec, ""),
    };
    let params = rest
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Failure::Usage(format!("{t}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    family(name.trim(), &params)
}

/// One input graph with a label.
pub struct Labelled {
    pub id: String,
    pub graph: Graph,
}

/// Graphs from exactly one of a graph6 string, a graph6 file or a family spec.
pub fn read_graphs(g6: Option<&str>, file: Option<&str>, build: Option<&str>) -> Result<Vec<Labelled>, Failure> {
    match (g6, file, build) {
        (Some(text), None, None) => {
            let graph = graph6::decode(text).map_err(|e| Failure::Decode(format!("graph6: {e}")))?;
            Ok(vec![Labelled { id: text.trim().to_string(), graph }])
        }
        (None, Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Decode(format!("{path}: {e}")))?;
            graph6::decode_lines(&text)
                .into_iter()
                .map(|(line, r)| match r {
                    Ok(graph) => Ok(Labelled { id: format!("{path}:{line}"), graph }),
                    Err(e) => Err(Failure::Decode(format!("{path}:{line}: {e}"))),
                })
                .collect()
        }
        (None, None, Some(spec)) => Ok(vec![Labelled { id: spec.to_string(), graph: build_spec(spec)? }]),
        _ => Err(Failure::Usage("give exactly one of --g6, --file, --build".into())),
    }
}
