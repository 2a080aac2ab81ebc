use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, PetersenGraph, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    Json,
    /// Cover certificate JSON; needs a cover.
    Certificate,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" => Ok(ExportFormat::Dimacs),
            "json" => Ok(ExportFormat::Json),
            "cert" | "certificate" => Ok(ExportFormat::Certificate),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

/// DIMACS `edge` format; `u_i -> i`, `v_i -> n + i`.
pub fn to_dimacs(g: &PetersenGraph) -> String {
    let mut out = format!(
        "c generalized Petersen graph P({},{})\np edge {} {}\n",
        g.n(),
        g.k(),
        g.vertex_count(),
        g.edge_count()
    );
    for &(a, b) in g.dense_edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub id: usize,
    pub label: String,
    pub side: Side,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
}

/// Vertex and edge lists with the same 1-based numbering as DIMACS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<JsonVertex>,
    pub edges: Vec<JsonEdge>,
}

pub fn to_graph_json(g: &PetersenGraph) -> GraphJson {
    GraphJson {
        n: g.n(),
        k: g.k(),
        vertices: g
            .vertices()
            .enumerate()
            .map(|(id, v)| JsonVertex { id: id + 1, label: v.to_string(), side: v.side, index: v.index })
            .collect(),
        edges: g
            .edges()
            .iter()
            .zip(g.dense_edges())
            .map(|(e, &(a, b))| JsonEdge { source: a + 1, target: b + 1, kind: e.kind })
            .collect(),
    }
}

pub fn export(g: &PetersenGraph, format: ExportFormat, cover: Option<&Cover>) -> Result<String> {
    match format {
        ExportFormat::Dimacs => Ok(to_dimacs(g)),
        ExportFormat::Json => Ok(serde_json::to_string_pretty(&to_graph_json(g))?),
        ExportFormat::Certificate => {
            let cover = cover.ok_or_else(|| Error::Precondition("certificate export needs a cover".into()))?;
            if cover.params() != g.params() {
                return Err(Error::Precondition(format!("cover of {} exported for {}", cover.params(), g.params())));
            }
            Ok(serde_json::to_string_pretty(&cover.to_certificate())?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_header() {
        let text = to_dimacs(&PetersenGraph::new(5, 2).unwrap());
        assert!(text.lines().any(|l| l == "p edge 10 15"));
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 15);
        assert!(text.contains("e 1 2\n") && text.contains("e 1 6\n"));
    }

    #[test]
    fn json_counts() {
        let j = to_graph_json(&PetersenGraph::new(16, 5).unwrap());
        assert_eq!((j.vertices.len(), j.edges.len()), (32, 48));
        assert_eq!(j.vertices[16].label, "v1");
    }

    #[test]
    fn formats() {
        assert_eq!("DIMACS".parse::<ExportFormat>().unwrap(), ExportFormat::Dimacs);
        assert!(matches!("graphml".parse::<ExportFormat>(), Err(Error::UnknownFormat(_))));
        let g = PetersenGraph::new(5, 2).unwrap();
        assert!(export(&g, ExportFormat::Certificate, None).is_err());
    }
}
