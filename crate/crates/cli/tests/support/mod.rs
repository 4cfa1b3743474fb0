#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;
use std::sync::Arc;

use supercochain::{CrossedHom, LieSupActTriple};
use supercochain_cli::{parse, ProblemFile};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Every top-level fixture, sorted by name.
pub fn fixtures() -> Vec<(String, ProblemFile)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(crate_dir().join("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), parse(&p).unwrap()))
        .collect()
}

pub fn triple(p: &ProblemFile) -> Arc<LieSupActTriple> {
    Arc::new(
        LieSupActTriple::candidate(p.g.clone().unwrap(), p.h.clone().unwrap(), p.action.clone().unwrap()).unwrap(),
    )
}

/// The fixture's crossed map when it has one and it passes.
pub fn crossed(p: &ProblemFile) -> Option<CrossedHom> {
    let t = triple(p);
    let map = p.crossed.clone()?;
    CrossedHom::new(t, map).ok()
}
