#![allow(dead_code)]

use std::path::PathBuf;

fn rows(file: &str) -> Vec<(usize, String)> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(file);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (n, rest) = l.split_once('\t').expect("tab-separated row");
            (n.parse().expect("row index"), rest.to_string())
        })
        .collect()
}

pub fn reference_b() -> Vec<(usize, String)> {
    rows("reference_b.txt")
}

pub fn reference_g() -> Vec<(usize, String)> {
    rows("reference_g.txt")
}
