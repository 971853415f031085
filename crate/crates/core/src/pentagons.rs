//! Pentagon placement: adjacency of the twelve pentagonal faces, connected
//! parts, isolated pentagons, and the isolated-pentagon-rule predicate.
//!
//! Two pentagons are adjacent when they share an edge of the underlying
//! graph (not merely a vertex); that is the standard reading of the
//! isolated pentagon rule.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{FaceSet, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentagonError {
    #[error("face set has {found} pentagons, expected 12")]
    NotTwelvePentagons { found: u32 },
}

/// Adjacency structure on the twelve pentagonal faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonAdjacency {
    adjacent: [[bool; 12]; 12],
}

impl PentagonAdjacency {
    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    /// Number of edge-sharing pentagon neighbours of pentagon `i`.
    pub fn degree(&self, i: usize) -> u32 {
        self.adjacent[i].iter().filter(|&&a| a).count() as u32
    }

    pub fn edge_count(&self) -> u32 {
        let mut count = 0;
        for i in 0..12 {
            for j in (i + 1)..12 {
                if self.adjacent[i][j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Connected components, each a sorted list of pentagon indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 12];
        let mut components = Vec::new();
        for start in 0..12 {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < component.len() {
                let i = component[head];
                head += 1;
                for j in 0..12 {
                    if self.adjacent[i][j] && !seen[j] {
                        seen[j] = true;
                        component.push(j);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }
}

/// Pentagon distribution statistics of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonStats {
    /// Number of connected parts of the pentagon-adjacency graph.
    pub parts: u32,
    /// Pentagons adjacent to no other pentagon. A single isolated pentagon
    /// counts as a part of its own.
    pub isolated: u32,
    /// True when no two pentagons share an edge.
    pub ipr: bool,
}

fn pentagon_edge_sets(faces: &FaceSet) -> Result<Vec<[(VertexId, VertexId); 5]>, PentagonError> {
    let pentagons: Vec<&[VertexId]> = faces.pentagons().collect();
    if pentagons.len() != 12 {
        return Err(PentagonError::NotTwelvePentagons { found: pentagons.len() as u32 });
    }
    Ok(pentagons
        .iter()
        .map(|p| {
            let mut edges = [(0, 0); 5];
            for i in 0..5 {
                let (a, b) = (p[i], p[(i + 1) % 5]);
                edges[i] = (a.min(b), a.max(b));
            }
            edges
        })
        .collect())
}

/// The graph on the twelve pentagonal faces, joined when edge-sharing.
pub fn pentagon_adjacency(faces: &FaceSet) -> Result<PentagonAdjacency, PentagonError> {
    let edge_sets = pentagon_edge_sets(faces)?;
    let mut adjacent = [[false; 12]; 12];
    for i in 0..12 {
        for j in (i + 1)..12 {
            let shares = edge_sets[i].iter().any(|e| edge_sets[j].contains(e));
            adjacent[i][j] = shares;
            adjacent[j][i] = shares;
        }
    }
    Ok(PentagonAdjacency { adjacent })
}

/// Computes parts, isolated pentagons, and the IPR flag from a face set.
pub fn pentagon_stats(faces: &FaceSet) -> Result<PentagonStats, PentagonError> {
    let adjacency = pentagon_adjacency(faces)?;
    let components = adjacency.components();
    let parts = components.len() as u32;
    let isolated = components.iter().filter(|c| c.len() == 1).count() as u32;
    Ok(PentagonStats { parts, isolated, ipr: parts == 12 })
}
