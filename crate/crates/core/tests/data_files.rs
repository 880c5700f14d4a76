//! The versioned data directory: structure files and DOT goldens.

use rsfan::examples::{three, Example, FIGURES};
use rsfan::format::{parse_structure, read_structure_file, write_structure};
use std::collections::BTreeMap;
use std::path::PathBuf;

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/v1").join(rel)
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(data(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

#[test]
fn example_structure_files() {
    for ex in Example::ALL {
        let rel = format!("structures/{}.ts", ex.name());
        let text = read(&rel);
        let ts = ex.build();
        assert_eq!(text, write_structure(ex.name(), &ts), "{rel}");
        let parsed = read_structure_file(&data(&rel)).unwrap();
        assert_eq!(parsed.name, ex.name());
        assert_eq!(parsed.ts, ts);
    }
}

#[test]
fn product_structure_file() {
    let text = read("structures/three-squared.ts");
    let t = three();
    let product = t.product(&t);
    assert_eq!(text, write_structure("three-squared", &product));
    let parsed = parse_structure(&text).unwrap();
    assert_eq!(parsed.ts, product);
    assert!(!parsed.ts.satisfies_condition_z());
}

/// `node` and `edge` lines recovered from a DOT file, in golden-file form.
fn dot_as_poset_text(dot: &str) -> String {
    let mut labels = BTreeMap::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((node, rest)) = line.split_once(" [label=\"") {
            labels.insert(node.to_string(), rest.trim_end_matches("\"];").to_string());
        } else if let Some((a, b)) = line.trim_end_matches(';').split_once(" -> ") {
            edges.push((a.to_string(), b.to_string()));
        }
    }
    let mut nodes: Vec<String> = labels.values().map(|l| format!("node {l}")).collect();
    nodes.sort();
    let mut edge_lines: Vec<String> = edges.iter().map(|(a, b)| format!("edge {} {}", labels[a], labels[b])).collect();
    edge_lines.sort();
    nodes.into_iter().chain(edge_lines).map(|l| l + "\n").collect()
}

#[test]
fn dot_goldens_match_figures() {
    for fig in &FIGURES {
        let dot = read(&format!("golden/{}.dot", fig.id));
        assert_eq!(fig.dot().unwrap(), dot, "{}", fig.id);
        assert!(dot.starts_with(&format!("digraph \"{}\" {{", fig.id)));
        // the DOT encodes the same Hasse diagram as the hand-written list
        assert_eq!(dot_as_poset_text(&dot), fig.golden, "{}", fig.id);
    }
}
