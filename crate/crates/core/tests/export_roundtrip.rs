use std::collections::BTreeSet;

use gpcover::harness::export::{export, to_dimacs, ExportFormat, GraphJson};
use gpcover::solver::beta_exact;
use gpcover::{Cover, CoverCertificate, GraphParams, PetersenGraph};

/// Edge set from the definition, 1-based DIMACS numbering.
fn definition_edges(n: usize, k: usize) -> BTreeSet<(usize, usize)> {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (1..=n)
        .flat_map(|i| {
            let next = i % n + 1;
            let jump = (i - 1 + k) % n + 1;
            [key(i, next), key(i, n + i), key(n + i, n + jump)]
        })
        .collect()
}

fn parse_dimacs(text: &str) -> (usize, usize, BTreeSet<(usize, usize)>) {
    let mut header = (0, 0);
    let mut edges = BTreeSet::new();
    for line in text.lines() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            ["p", "edge", v, e] => header = (v.parse().unwrap(), e.parse().unwrap()),
            ["e", a, b] => {
                let (a, b): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
                assert!(edges.insert((a.min(b), a.max(b))), "duplicate edge {a} {b}");
            }
            ["c", ..] => {}
            other => panic!("unexpected line {other:?}"),
        }
    }
    (header.0, header.1, edges)
}

#[test]
fn dimacs_matches_definition() {
    for p in GraphParams::admissible_up_to(25) {
        let g = PetersenGraph::from_params(p);
        let (v, e, edges) = parse_dimacs(&to_dimacs(&g));
        assert_eq!((v, e), (2 * p.n(), 3 * p.n()), "{p}");
        assert_eq!(edges, definition_edges(p.n(), p.k()), "{p}");
    }
}

#[test]
fn json_round_trip() {
    let g = PetersenGraph::new(13, 5).unwrap();
    let text = export(&g, ExportFormat::Json, None).unwrap();
    let parsed: GraphJson = serde_json::from_str(&text).unwrap();
    assert_eq!((parsed.n, parsed.k), (13, 5));
    let edges: BTreeSet<(usize, usize)> =
        parsed.edges.iter().map(|e| (e.source.min(e.target), e.source.max(e.target))).collect();
    assert_eq!(edges, definition_edges(13, 5));
    assert!(parsed.vertices.iter().all(|v| v.label == g.vertex(v.id - 1).to_string()));
}

#[test]
fn certificate_round_trip() {
    let g = PetersenGraph::new(12, 5).unwrap();
    let witness = beta_exact(&g).unwrap().witness;
    let text = export(&g, ExportFormat::Certificate, Some(&witness)).unwrap();
    let cert: CoverCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(Cover::from_certificate(&cert).unwrap(), witness);

    let other = PetersenGraph::new(12, 1).unwrap();
    assert!(export(&other, ExportFormat::Certificate, Some(&witness)).is_err());
}
