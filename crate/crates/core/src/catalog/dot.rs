use std::fmt::Write;

use serde::Serialize;

use super::checks::figure_profiles;
use super::fixtures::*;
use crate::cluster::Enumeration;
use crate::error::{Error, Result};
use crate::profiles::Profile;
use crate::subsets::KSubset;

/// A directed graph with labelled nodes; edges may repeat.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    /// Draw edges without arrowheads.
    pub undirected: bool,
}

/// The drawn arrows of an Auslander-Reiten figure, nodes identified by profile.
pub fn fixture_graph(name: &str) -> Result<Graph> {
    let (nodes, arrows, n) = match name {
        "gr25" => (AR_GR25_NODES, AR_GR25_ARROWS, 5),
        "gr36" => (AR_GR36_NODES, AR_GR36_ARROWS, 6),
        "gr37" => (AR_GR37_NODES, AR_GR37_ARROWS, 7),
        "gr38" => (AR_GR38_NODES, AR_GR38_ARROWS, 8),
        _ => {
            return Err(Error::Parse(format!(
                "no quiver stored for fixture {name:?}"
            )))
        }
    };
    let ps = figure_profiles(nodes, n)?;
    let index = |s: &str| -> Result<usize> {
        let p = Profile::parse(s, n)?;
        ps.iter()
            .position(|q| *q == p)
            .ok_or_else(|| Error::Parse(format!("arrow endpoint {s} is not a node")))
    };
    let edges = arrows
        .iter()
        .map(|(a, b)| Ok((index(a)?, index(b)?)))
        .collect::<Result<_>>()?;
    Ok(Graph {
        nodes: ps.iter().map(Profile::to_string).collect(),
        edges,
        undirected: false,
    })
}

/// Exchange graph on cluster variables: an edge joins the two variables
/// swapped by a mutation. Degree-one variables are named by their label,
/// the others by their weight.
pub fn exchange_graph(e: &Enumeration) -> Graph {
    let nodes = e
        .records
        .iter()
        .map(|r| {
            let x = r.weight.coords();
            if r.degree == 1 && x.iter().all(|&v| v == 0 || v == 1) {
                let elems = (1..=e.n).filter(|&i| x[i - 1] == 1);
                KSubset::new(e.n, elems).map_or_else(|_| r.weight.to_string(), |s| s.to_string())
            } else {
                r.weight.to_string()
            }
        })
        .collect();
    Graph {
        nodes,
        edges: e
            .exchanges
            .iter()
            .map(|&(a, b)| (a as usize, b as usize))
            .collect(),
        undirected: true,
    }
}

/// Graphviz text for `g`; node `i` is written `n{i}` in input order.
pub fn export_dot(g: &Graph) -> String {
    if g.nodes.is_empty() {
        return "digraph {}\n".to_string();
    }
    let mut out = String::from("digraph {\n");
    if g.undirected {
        out.push_str("  edge [dir=none];\n");
    }
    for (i, label) in g.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (a, b) in &g.edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr25_counts() {
        let g = fixture_graph("gr25").unwrap();
        let dot = export_dot(&g);
        assert_eq!(dot.matches("[label=").count(), 10);
        assert_eq!(dot.matches("->").count(), 18);
        assert!(dot.starts_with("digraph {"));
    }

    #[test]
    fn empty_and_gr36() {
        assert_eq!(export_dot(&Graph::default()).trim(), "digraph {}");
        assert_eq!(fixture_graph("gr36").unwrap().nodes.len(), 22);
        assert!(fixture_graph("contours").is_err());
    }
}
