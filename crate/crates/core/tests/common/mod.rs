//! Shared helpers for the integration tests.
#![allow(dead_code)] // each test binary uses a different subset

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;

use fullerene_core::graph::FullereneGraph;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn read_fixture(name: &str) -> Vec<u8> {
    std::fs::read(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Relabels the vertices by a random permutation, preserving rotation order.
pub fn permuted(g: &FullereneGraph, rng: &mut impl Rng) -> FullereneGraph {
    let n = g.order() as usize;
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    let mut rotation = vec![[0u32; 3]; n];
    for v in 0..n {
        let nbs = g.neighbors(v as u32);
        rotation[perm[v] as usize] =
            [perm[nbs[0] as usize], perm[nbs[1] as usize], perm[nbs[2] as usize]];
    }
    FullereneGraph::from_adjacency(rotation).expect("relabelled graph stays valid")
}
