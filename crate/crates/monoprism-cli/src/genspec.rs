//! Parsing of family specifications for `gen`.
//!
//! Long form (subcommand arguments): a family name plus numeric parameters,
//! e.g. `cycle 5`, `complete-bipartite 2 3`, `gnp 6 0.5`. Compact tokens
//! (used by `--union`): `k3` complete, `p4` path, `c5` cycle, `e2` edgeless,
//! `s4` star, `kb2x3` complete bipartite.

use anyhow::{anyhow, bail, Context, Result};
use monoprism::families::{generate, Family, GnpSource};
use monoprism::graph::Graph;
use monoprism::MAX_VERTICES;

/// What `gen` was asked to produce, before unions are applied.
pub enum BaseSpec {
    Fixed(Graph),
    Random { source: Box<GnpSource> },
}

fn usize_param(params: &[String], i: usize, family: &str) -> Result<usize> {
    let raw = params
        .get(i)
        .ok_or_else(|| anyhow!("family `{family}` needs {} numeric parameter(s)", i + 1))?;
    raw.parse::<usize>()
        .with_context(|| format!("parameter `{raw}` of family `{family}` is not a count"))
}

fn expect_arity(params: &[String], arity: usize, family: &str) -> Result<()> {
    if params.len() != arity {
        bail!(
            "family `{family}` takes {arity} parameter(s), got {}",
            params.len()
        );
    }
    Ok(())
}

/// Parses the long-form family arguments of `gen`.
pub fn parse_base(family: &str, params: &[String], seed: u64) -> Result<BaseSpec> {
    let fixed = |f: Family| -> Result<BaseSpec> {
        Ok(BaseSpec::Fixed(generate(f)?))
    };
    match family {
        "path" => {
            expect_arity(params, 1, family)?;
            fixed(Family::Path(usize_param(params, 0, family)?))
        }
        "cycle" => {
            expect_arity(params, 1, family)?;
            fixed(Family::Cycle(usize_param(params, 0, family)?))
        }
        "complete" => {
            expect_arity(params, 1, family)?;
            fixed(Family::Complete(usize_param(params, 0, family)?))
        }
        "edgeless" => {
            expect_arity(params, 1, family)?;
            fixed(Family::Edgeless(usize_param(params, 0, family)?))
        }
        "star" => {
            expect_arity(params, 1, family)?;
            fixed(Family::Star(usize_param(params, 0, family)?))
        }
        "complete-bipartite" => {
            expect_arity(params, 2, family)?;
            fixed(Family::CompleteBipartite(
                usize_param(params, 0, family)?,
                usize_param(params, 1, family)?,
            ))
        }
        "gnp" => {
            expect_arity(params, 2, family)?;
            let n = usize_param(params, 0, family)?;
            let p: f64 = params[1]
                .parse()
                .with_context(|| format!("edge probability `{}` is not a number", params[1]))?;
            Ok(BaseSpec::Random {
                source: Box::new(GnpSource::new(n, p, seed)?),
            })
        }
        other => bail!(
            "unknown family `{other}` (expected path, cycle, complete, edgeless, \
             star, complete-bipartite, or gnp)"
        ),
    }
}

/// Parses one compact `--union` token into a graph.
pub fn parse_union_token(token: &str) -> Result<Graph> {
    let bad = || anyhow!("bad union token `{token}` (examples: k3, p4, c5, e2, s4, kb2x3)");
    if let Some(rest) = token.strip_prefix("kb") {
        let (a, b) = rest.split_once('x').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        return Ok(generate(Family::CompleteBipartite(a, b))?);
    }
    let mut chars = token.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let family = match letter {
        'k' => Family::Complete(n),
        'p' => Family::Path(n),
        'c' => Family::Cycle(n),
        'e' => Family::Edgeless(n),
        's' => Family::Star(n),
        _ => return Err(bad()),
    };
    Ok(generate(family)?)
}

/// Disjoint union of a base graph with every `--union` addend, checking the
/// vertex budget first.
pub fn apply_unions(mut g: Graph, addends: &[Graph]) -> Result<Graph> {
    let total: usize = g.order() + addends.iter().map(|a| a.order()).sum::<usize>();
    if total > MAX_VERTICES {
        bail!("union would have {total} vertices, above the {MAX_VERTICES}-vertex limit");
    }
    for addend in addends {
        g = g.disjoint_union(addend);
    }
    Ok(g)
}
