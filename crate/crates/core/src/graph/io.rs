//! Graph file formats.
//!
//! JSON: `{"n":4,"edges":[[0,1],[1,2]]}` with `u < v`, edges sorted.
//! Text: a `n m` header line followed by one `u v` line per edge.
//!
//! Writers are canonical, so reading a written file and writing it again
//! reproduces the same bytes.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{input, Result};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = crate::Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(j.n, &edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let j: GraphJson = match serde_json::from_str(s) {
        Ok(j) => j,
        Err(e) => return input(format!("bad graph JSON: {e}")),
    };
    Graph::try_from(&j)
}

pub fn to_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_text(s: &str) -> Result<Graph> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let Some(header) = lines.next() else {
        return input("empty graph text");
    };
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let [u, v] = parse_pair(line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return input(format!("header promises {m} edges, found {}", edges.len()));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let nums: Vec<&str> = line.split_whitespace().collect();
    match nums.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok([a, b]),
            _ => input(format!("expected two integers, got {line:?}")),
        },
        _ => input(format!("expected two integers, got {line:?}")),
    }
}

/// Reads either format; JSON is recognized by a leading `{`.
pub fn parse_any(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let g = Graph::new(4, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(to_json(&g), r#"{"n":4,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn text_shape() {
        let g = Graph::new(3, &[(0, 2)]).unwrap();
        assert_eq!(to_text(&g), "3 1\n0 2\n");
        assert_eq!(parse_any("3 1\n0 2\n").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(from_json(r#"{"n":2,"edges":[],"extra":1}"#).is_err());
        assert!(from_text("3 2\n0 1\n").is_err());
        assert!(from_text("3 1\n0 x\n").is_err());
        assert!(from_text("").is_err());
    }
}
