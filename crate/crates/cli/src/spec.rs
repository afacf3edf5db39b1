//! Graph specifications on the command line.

use std::path::Path;

use transfer_core::graph::{automorphism_group, cartesian_product, cycle_graph, path_graph};
use transfer_core::{Error as CoreError, Graph, Permutation};

use crate::error::{CliError, CliResult};

/// Shape recognised from a spec, used for closed-form cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Other,
}

pub struct ParsedGraph {
    pub graph: Graph,
    pub family: Family,
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// `path:N`, `cycle:N`, `prod:AxB` (factors are specs themselves) or a file.
pub fn parse_graph(spec: &str) -> CliResult<ParsedGraph> {
    if let Some(n) = spec.strip_prefix("path:") {
        let n = parse_size(spec, n)?;
        return Ok(ParsedGraph { graph: path_graph(n)?, family: Family::Path(n) });
    }
    if let Some(n) = spec.strip_prefix("cycle:") {
        let n = parse_size(spec, n)?;
        return Ok(ParsedGraph { graph: cycle_graph(n)?, family: Family::Cycle(n) });
    }
    if let Some(rest) = spec.strip_prefix("prod:") {
        // try each `x` as the split point; the first one where both sides parse wins
        for (at, _) in rest.match_indices('x') {
            if let (Ok(a), Ok(b)) = (parse_graph(&rest[..at]), parse_graph(&rest[at + 1..])) {
                return Ok(ParsedGraph { graph: cartesian_product(&a.graph, &b.graph), family: Family::Other });
            }
        }
        return Err(CliError::Spec(spec.to_string()));
    }
    let path = Path::new(spec);
    if path.is_file() {
        let graph = Graph::parse_edge_list(&read(path)?)?;
        return Ok(ParsedGraph { graph, family: Family::Other });
    }
    Err(CliError::Spec(spec.to_string()))
}

fn parse_size(spec: &str, digits: &str) -> CliResult<usize> {
    digits.parse().map_err(|_| CliError::Spec(spec.to_string()))
}

/// Full group from `--aut` generators, or by search when none are given.
pub fn group(g: &Graph, aut: Option<&Path>) -> CliResult<Vec<Permutation>> {
    let generators = match aut {
        Some(path) => Some(Permutation::parse_lines(&read(path)?, g.num_vertices())?),
        None => None,
    };
    automorphism_group(g, generators.as_deref()).map_err(|e| match (e, &generators) {
        (e @ CoreError::TooLarge { .. }, None) => CliError::NeedGenerators { source: e },
        (e, _) => e.into(),
    })
}
