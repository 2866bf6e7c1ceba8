//! Graph ingestion for `info`: graph6 line files and edge-list files, with
//! `-` standing for standard input.

use std::io::Read;

use anyhow::{bail, Context, Result};
use monoprism::codec::{parse_edge_list, parse_graph6};
use monoprism::graph::Graph;
use monoprism::MAX_VERTICES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Reads every graph from the source. Graph6 sources hold one graph per
/// nonblank line; an edge-list source holds exactly one graph.
pub fn read_graphs(path: &str, format: InputFormat) -> Result<Vec<Graph>> {
    let text = read_source(path)?;
    let graphs = match format {
        InputFormat::Graph6 => {
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line)
                    .with_context(|| format!("line {}: bad graph6 `{line}`", idx + 1))?;
                graphs.push(g);
            }
            graphs
        }
        InputFormat::EdgeList => {
            if text.trim().is_empty() {
                Vec::new()
            } else {
                vec![parse_edge_list(&text).context("bad edge list")?]
            }
        }
    };
    for g in &graphs {
        check_workable(g)?;
    }
    Ok(graphs)
}

/// The invariants need a nonempty base whose prism fits the bitset width.
pub fn check_workable(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        bail!("the order-0 graph has no invariants to report");
    }
    if 2 * g.order() > MAX_VERTICES {
        bail!(
            "base graph has {} vertices; its prism would exceed the \
             {MAX_VERTICES}-vertex limit",
            g.order()
        );
    }
    Ok(())
}
