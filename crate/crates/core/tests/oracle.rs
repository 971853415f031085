//! Wiener index checked against an algorithmically independent oracle.
//!
//! The implementation computes W from n breadth-first searches. The oracle
//! here is a Floyd–Warshall pairwise-distance summation: different algorithm,
//! different traversal order, different arithmetic path. Both must agree on
//! every corpus graph of order <= 60.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fullerene_core::codec::PlanarCodeReader;
use fullerene_core::families::construct_type_a;
use fullerene_core::graph::FullereneGraph;
use fullerene_core::metrics;

/// O(n^3) all-pairs distances; independent of the BFS engine.
fn floyd_warshall(g: &FullereneGraph) -> Vec<Vec<u32>> {
    let n = g.order() as usize;
    const INF: u32 = u32::MAX / 2;
    let mut dist = vec![vec![INF; n]; n];
    for v in 0..n {
        dist[v][v] = 0;
        for w in g.neighbors(v as u32) {
            dist[v][w as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = dist[i][k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let through = dik + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

fn wiener_by_pairwise_sum(g: &FullereneGraph) -> u64 {
    let dist = floyd_warshall(g);
    let n = g.order() as usize;
    let mut total = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            assert!(dist[i][j] < u32::MAX / 2, "oracle sees a disconnected pair");
            total += dist[i][j] as u64;
        }
    }
    total
}

fn corpus_of_small_graphs() -> Vec<FullereneGraph> {
    let mut graphs = Vec::new();
    for name in ["f020.plc", "f024.plc", "f026.plc", "f028.plc", "f030.plc", "c60_ipr.plc"] {
        let bytes = common::read_fixture(name);
        for g in PlanarCodeReader::new(bytes.as_slice()) {
            graphs.push(g.unwrap());
        }
    }
    for k in 2..=6 {
        graphs.push(construct_type_a(k).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x57ab);
    let relabelled: Vec<_> =
        graphs.iter().map(|g| common::permuted(g, &mut rng)).collect();
    graphs.extend(relabelled);
    graphs
}

#[test]
fn wiener_from_transmissions_equals_pairwise_oracle() {
    let corpus = corpus_of_small_graphs();
    assert!(corpus.len() >= 20);
    for g in &corpus {
        assert!(g.order() <= 60);
        let via_transmissions = metrics::wiener_index(g);
        let via_pairs = wiener_by_pairwise_sum(g);
        assert_eq!(via_transmissions, via_pairs, "order {}", g.order());
    }
}

#[test]
fn diameter_equals_oracle_max_distance() {
    for g in corpus_of_small_graphs() {
        let dist = floyd_warshall(&g);
        let oracle_diameter =
            dist.iter().flat_map(|row| row.iter().copied()).max().unwrap();
        assert_eq!(metrics::diameter(&g), oracle_diameter);
        assert!(oracle_diameter >= 5);
    }
}

#[test]
fn transmissions_match_oracle_rows() {
    for g in corpus_of_small_graphs().into_iter().take(8) {
        let dist = floyd_warshall(&g);
        let tv = metrics::transmissions(&g);
        for (v, row) in dist.iter().enumerate() {
            let row_sum: u32 = row.iter().sum();
            assert_eq!(tv.transmissions()[v], row_sum);
        }
    }
}
