//! Text and JSON formats for graphs and matchings.
//!
//! DIMACS-like edge lists use 1-indexed endpoints:
//!
//! ```text
//! c optional comment
//! p edge 4 3
//! e 1 2
//! e 2 3
//! e 3 4
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err("duplicate header line".into()));
                }
                if tokens.len() != 4 || (tokens[1] != "edge" && tokens[1] != "col") {
                    return Err(parse_err(format!("malformed header `{line}`")));
                }
                let n = parse_number(tokens[2]).map_err(&parse_err)?;
                let m = parse_number(tokens[3]).map_err(&parse_err)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err("edge before header".into()))?;
                if tokens.len() != 3 {
                    return Err(parse_err(format!("malformed edge `{line}`")));
                }
                let u = parse_number(tokens[1]).map_err(&parse_err)?;
                let v = parse_number(tokens[2]).map_err(&parse_err)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(format!(
                        "endpoint out of range 1..={n} in `{line}`"
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn parse_number(tok: &str) -> std::result::Result<usize, String> {
    tok.parse()
        .map_err(|_| format!("`{tok}` is not a non-negative integer"))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// On-disk JSON shape of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels().clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::with_labels(j.n, &edges, j.labels)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

pub fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

pub fn read_graph_json(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn write_graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

/// Reads a sorted array of endpoint pairs.
pub fn read_matching_json(text: &str) -> Result<Vec<(usize, usize)>> {
    let pairs: Vec<[usize; 2]> = serde_json::from_str(text).map_err(json_error)?;
    Ok(pairs.into_iter().map(|p| (p[0], p[1])).collect())
}

pub fn write_matching_json(edges: &[(usize, usize)]) -> String {
    let mut pairs: Vec<[usize; 2]> = edges.iter().map(|&(u, v)| [u.min(v), u.max(v)]).collect();
    pairs.sort_unstable();
    serde_json::to_string(&pairs).expect("pairs serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::new(5, &[(3, 4), (0, 1), (1, 2)]).unwrap();
        let text = write_dimacs(&g);
        assert_eq!(text, "p edge 5 3\ne 1 2\ne 2 3\ne 4 5\n");
        assert_eq!(read_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_tolerates_comments_and_order() {
        let g = read_dimacs("c hello\np edge 3 2\ne 3 2\ne 1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(
            read_dimacs("e 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            read_dimacs("p edge 2 1\ne 1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(read_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(read_dimacs("").is_err());
        assert_eq!(read_dimacs("p edge 2 1\ne 2 2\n"), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn json_round_trip_keeps_labels() {
        let mut labels = BTreeMap::new();
        labels.insert(0, "t+".to_string());
        let g = Graph::with_labels(3, &[(0, 2)], labels).unwrap();
        let text = write_graph_json(&g);
        assert_eq!(text, r#"{"n":3,"edges":[[0,2]],"labels":{"0":"t+"}}"#);
        let back = read_graph_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(0), Some("t+"));
    }

    #[test]
    fn json_rejects_bad_graphs() {
        assert!(read_graph_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(read_graph_json("not json").is_err());
    }

    #[test]
    fn matching_json_sorted() {
        assert_eq!(write_matching_json(&[(4, 3), (1, 0)]), "[[0,1],[3,4]]");
        assert_eq!(
            read_matching_json("[[3,4],[0,1]]").unwrap(),
            vec![(3, 4), (0, 1)]
        );
    }
}
