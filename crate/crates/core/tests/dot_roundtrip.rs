//! Parse-back check for DOT export: a small parser for the emitted subset
//! (digraph header, quoted node statements, quoted edges with a label
//! attribute) must recover exactly the nodes and edges of the graph.

use std::collections::BTreeSet;

use ssn_core::{build_graph, GraphFamily, GraphSpec, ParamRange};

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct DotEdge {
    from: String,
    to: String,
    label: String,
}

struct DotGraph {
    name: String,
    nodes: BTreeSet<String>,
    edges: BTreeSet<DotEdge>,
}

fn parse_quoted(s: &str) -> Option<(String, &str)> {
    let rest = s.trim_start();
    let rest = rest.strip_prefix('"')?;
    let end = rest.find('"')?;
    Some((rest[..end].to_string(), &rest[end + 1..]))
}

fn parse_dot(text: &str) -> Result<DotGraph, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty document")?;
    let name = header
        .strip_prefix("digraph ")
        .and_then(|h| h.strip_suffix(" {"))
        .ok_or_else(|| format!("bad header {header:?}"))?
        .to_string();
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut closed = false;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err(format!("statement after closing brace: {line:?}"));
        }
        let (id, rest) = parse_quoted(line).ok_or_else(|| format!("bad statement {line:?}"))?;
        let rest = rest.trim_start();
        if let Some(rest) = rest.strip_prefix("->") {
            let (to, rest) = parse_quoted(rest).ok_or_else(|| format!("bad edge {line:?}"))?;
            let attrs = rest.trim_start();
            let label = attrs
                .strip_prefix("[label=")
                .and_then(|a| parse_quoted(a).map(|(l, _)| l))
                .ok_or_else(|| format!("edge without label: {line:?}"))?;
            edges.insert(DotEdge { from: id, to, label });
        } else if rest == ";" {
            nodes.insert(id);
        } else {
            return Err(format!("unrecognized statement {line:?}"));
        }
    }
    if !closed {
        return Err("missing closing brace".into());
    }
    Ok(DotGraph { name, nodes, edges })
}

#[test]
fn dot_export_round_trips() {
    let specs = [
        GraphSpec {
            family: GraphFamily::Em1,
            l: ParamRange::single(1),
            m: ParamRange::single(0),
            n: ParamRange::new(-2, 2),
            p: ParamRange::single(0),
            minus_one: false,
        },
        GraphSpec {
            family: GraphFamily::Em1,
            l: ParamRange::new(-2, 2),
            m: ParamRange::single(0),
            n: ParamRange::new(-2, 2),
            p: ParamRange::new(-2, 2),
            minus_one: true,
        },
        GraphSpec {
            family: GraphFamily::Em2,
            l: ParamRange::new(2, 4),
            m: ParamRange::new(1, 3),
            n: ParamRange::new(-2, 2),
            p: ParamRange::new(-2, 2),
            minus_one: false,
        },
    ];
    for spec in specs {
        let graph = build_graph(&spec).unwrap();
        let parsed = parse_dot(&graph.to_dot()).unwrap();
        assert_eq!(parsed.name, "seifert_surgery_network");

        let want_nodes: BTreeSet<String> =
            graph.nodes().iter().map(|v| v.id()).collect();
        assert_eq!(parsed.nodes, want_nodes);

        let want_edges: BTreeSet<DotEdge> = graph
            .edges()
            .iter()
            .map(|e| DotEdge {
                from: graph.nodes()[e.from].id(),
                to: graph.nodes()[e.to].id(),
                label: e.mov.to_string(),
            })
            .collect();
        assert_eq!(parsed.edges, want_edges);
    }
}
