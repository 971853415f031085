//! Distance invariants: transmissions, Wiener index, Wiener complexity,
//! diameter.
//!
//! All-pairs distances come from one breadth-first search per source over
//! the adjacency arrays; the graph is cubic so each run is O(n). No distance
//! matrix is retained. Transmissions fit 32 bits comfortably at the orders
//! this crate targets; the Wiener index is kept in 64 bits.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{FullereneGraph, VertexId};
use crate::pentagons::{pentagon_stats, PentagonError, PentagonStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: VertexId, order: u32 },
}

/// Per-vertex transmissions and eccentricities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransmissionVector {
    transmissions: Vec<u32>,
    eccentricities: Vec<u32>,
}

impl TransmissionVector {
    pub fn transmissions(&self) -> &[u32] {
        &self.transmissions
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.eccentricities
    }

    pub fn len(&self) -> usize {
        self.transmissions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transmissions.is_empty()
    }

    /// Number of distinct transmission values. Computed by sorting a copy,
    /// keeping reports free of hash-order effects.
    pub fn distinct_count(&self) -> u32 {
        let mut sorted = self.transmissions.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() as u32
    }

    /// Maximum eccentricity, i.e. the diameter.
    pub fn max_eccentricity(&self) -> u32 {
        self.eccentricities.iter().copied().max().unwrap_or(0)
    }

    /// Half the transmission sum.
    pub fn wiener(&self) -> u64 {
        let total: u64 = self.transmissions.iter().map(|&t| t as u64).sum();
        debug_assert!(total % 2 == 0, "transmission sum must be even");
        total / 2
    }
}

/// Reusable BFS buffers. One engine per worker avoids reallocating the
/// distance array for every source when streaming many graphs.
#[derive(Debug, Default)]
pub struct DistanceEngine {
    dist: Vec<u32>,
    queue: Vec<VertexId>,
}

impl DistanceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Hop distances from `source` to every vertex. The graph is connected
    /// by construction, so all entries are finite.
    pub fn distances(&mut self, g: &FullereneGraph, source: VertexId) -> &[u32] {
        let n = g.order() as usize;
        self.dist.clear();
        self.dist.resize(n, u32::MAX);
        self.queue.clear();
        self.dist[source as usize] = 0;
        self.queue.push(source);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            let dv = self.dist[v as usize];
            for w in g.neighbors(v) {
                if self.dist[w as usize] == u32::MAX {
                    self.dist[w as usize] = dv + 1;
                    self.queue.push(w);
                }
            }
        }
        debug_assert_eq!(self.queue.len(), n, "graph must be connected");
        &self.dist
    }

    /// Transmissions and eccentricities for every vertex, n BFS runs.
    pub fn transmissions(&mut self, g: &FullereneGraph) -> TransmissionVector {
        let n = g.order();
        let mut transmissions = Vec::with_capacity(n as usize);
        let mut eccentricities = Vec::with_capacity(n as usize);
        for v in 0..n {
            let dist = self.distances(g, v);
            let mut sum = 0u32;
            let mut ecc = 0u32;
            for &d in dist {
                sum += d;
                ecc = ecc.max(d);
            }
            transmissions.push(sum);
            eccentricities.push(ecc);
        }
        TransmissionVector { transmissions, eccentricities }
    }
}

/// Hop distances from `v` to every vertex.
pub fn bfs_distances(g: &FullereneGraph, v: VertexId) -> Result<Vec<u32>, MetricsError> {
    if v >= g.order() {
        return Err(MetricsError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    Ok(DistanceEngine::new().distances(g, v).to_vec())
}

/// Transmission of `v`: the sum of distances from `v` to all other vertices.
pub fn transmission(g: &FullereneGraph, v: VertexId) -> Result<u32, MetricsError> {
    Ok(bfs_distances(g, v)?.iter().sum())
}

/// Transmissions of all vertices.
pub fn transmissions(g: &FullereneGraph) -> TransmissionVector {
    DistanceEngine::new().transmissions(g)
}

/// Wiener index: half the sum of all vertex transmissions.
pub fn wiener_index(g: &FullereneGraph) -> u64 {
    transmissions(g).wiener()
}

/// Wiener complexity: the number of distinct vertex transmissions.
pub fn wiener_complexity(g: &FullereneGraph) -> u32 {
    transmissions(g).distinct_count()
}

/// Diameter: the maximal distance between vertices.
pub fn diameter(g: &FullereneGraph) -> u32 {
    transmissions(g).max_eccentricity()
}

/// Per-graph invariant bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub order: u32,
    pub wiener: u64,
    pub complexity: u32,
    pub diameter: u32,
    pub transmissions: TransmissionVector,
    pub pentagons: PentagonStats,
    pub label: Option<String>,
}

/// Computes every invariant of one graph in a single pass (n BFS runs plus
/// one face trace). Deterministic for a given graph.
///
/// Fails only when the embedding does not have exactly twelve pentagonal
/// faces, i.e. the input is not a fullerene graph.
pub fn report(g: &FullereneGraph) -> Result<GraphReport, PentagonError> {
    report_with(&mut DistanceEngine::new(), g)
}

/// [`report`] with caller-owned BFS buffers, for streaming workloads.
pub fn report_with(
    engine: &mut DistanceEngine,
    g: &FullereneGraph,
) -> Result<GraphReport, PentagonError> {
    let faces = g.faces();
    let pentagons = pentagon_stats(&faces)?;
    let transmissions = engine.transmissions(g);
    Ok(GraphReport {
        order: g.order(),
        wiener: transmissions.wiener(),
        complexity: transmissions.distinct_count(),
        diameter: transmissions.max_eccentricity(),
        transmissions,
        pentagons,
        label: g.label().map(str::to_owned),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct_type_a;

    #[test]
    fn dodecahedron_layers() {
        let g = construct_type_a(2).unwrap();
        for v in 0..20 {
            let dist = bfs_distances(&g, v).unwrap();
            let mut layers = [0u32; 6];
            for &d in &dist {
                layers[d as usize] += 1;
            }
            assert_eq!(layers, [1, 3, 6, 6, 3, 1]);
        }
    }

    #[test]
    fn dodecahedron_suite() {
        let g = construct_type_a(2).unwrap();
        let r = report(&g).unwrap();
        assert_eq!(r.wiener, 500);
        assert_eq!(r.complexity, 1);
        assert_eq!(r.diameter, 5);
        assert!(r.transmissions.transmissions().iter().all(|&t| t == 50));
    }

    #[test]
    fn three_entries_at_distance_one() {
        for k in [2u32, 4, 7] {
            let g = construct_type_a(k).unwrap();
            for v in 0..g.order() {
                let ones = bfs_distances(&g, v).unwrap().iter().filter(|&&d| d == 1).count();
                assert_eq!(ones, 3);
            }
        }
    }

    #[test]
    fn type_a_three_transmission_sum() {
        let g = construct_type_a(3).unwrap();
        let total: u64 =
            transmissions(&g).transmissions().iter().map(|&t| t as u64).sum();
        assert_eq!(total, 2870);
    }

    #[test]
    fn type_a_five_report() {
        let g = construct_type_a(5).unwrap();
        let r = report(&g).unwrap();
        assert_eq!((r.wiener, r.complexity, r.diameter), (5455, 5, 9));
        // a cap-pentagon vertex sees a farthest vertex at distance 9
        let max = bfs_distances(&g, 0).unwrap().into_iter().max().unwrap();
        assert_eq!(max, 9);
    }

    #[test]
    fn wiener_matches_pairwise_double_loop() {
        let g = construct_type_a(2).unwrap();
        let n = g.order();
        let mut engine = DistanceEngine::new();
        let mut total = 0u64;
        for v in 0..n {
            total += engine.distances(&g, v).iter().map(|&d| d as u64).sum::<u64>();
        }
        assert_eq!(total / 2, wiener_index(&g));
    }

    #[test]
    fn transmission_floor_and_parity() {
        for k in [2u32, 3, 6] {
            let g = construct_type_a(k).unwrap();
            let tv = transmissions(&g);
            let n = g.order();
            assert!(tv.transmissions().iter().all(|&t| t >= n - 1));
            let total: u64 = tv.transmissions().iter().map(|&t| t as u64).sum();
            assert_eq!(total % 2, 0);
            // eccentricity(v) <= tr(v), D = max ecc, D <= max tr
            for (e, t) in tv.eccentricities().iter().zip(tv.transmissions()) {
                assert!(e <= t);
            }
            assert!(tv.max_eccentricity() >= 5);
        }
    }

    #[test]
    fn vertex_out_of_range() {
        let g = construct_type_a(2).unwrap();
        assert_eq!(
            bfs_distances(&g, 20),
            Err(MetricsError::VertexOutOfRange { vertex: 20, order: 20 })
        );
        assert!(transmission(&g, 19).is_ok());
    }
}
