//! Fullerene graphs as combinatorial embeddings.
//!
//! A graph is stored as a rotation system: for every vertex, the cyclic
//! sequence of its three neighbours in a fixed global orientation. Faces are
//! recovered by tracing: from the directed edge `(u, v)` the walk continues
//! with `(v, w)` where `w` is the neighbour immediately after `u` in the
//! rotation at `v`. Either global orientation (clockwise or counterclockwise
//! lists) yields the same face multiset.

use std::fmt;

use thiserror::Error;

/// Vertex index, 0-based. Planar-code files are 1-based; the codec shifts.
pub type VertexId = u32;

/// Structural errors raised when building a [`FullereneGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} lists itself as a neighbour")]
    SelfLoop { vertex: VertexId },
    #[error("vertex {vertex} lists neighbour {neighbor} twice (parallel edge)")]
    Degree { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists {neighbor}, but {neighbor} does not list {vertex}")]
    Asymmetry { vertex: VertexId, neighbor: VertexId },
    #[error("graph is disconnected: reached {reached} of {order} vertices")]
    Disconnected { reached: u32, order: u32 },
    #[error("neighbour id {id} out of range for order {order}")]
    IdOutOfRange { id: u32, order: u32 },
    #[error("order {order} violates the fullerene order rule ({reason})")]
    InvalidOrder { order: u32, reason: OrderRule },
}

/// Why an order is rejected: fullerene graphs exist exactly for even
/// n >= 20 with n != 22.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRule {
    Odd,
    TooSmall,
    TwentyTwo,
}

impl fmt::Display for OrderRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderRule::Odd => write!(f, "order must be even"),
            OrderRule::TooSmall => write!(f, "order must be at least 20"),
            OrderRule::TwentyTwo => write!(f, "no fullerene graph of order 22 exists"),
        }
    }
}

/// Cubic planar graph with a fixed embedding, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullereneGraph {
    rotation: Vec<[VertexId; 3]>,
    label: Option<String>,
}

impl FullereneGraph {
    /// Builds a graph from per-vertex ordered neighbour triples.
    ///
    /// Checks 3-regularity (distinct neighbours, no self-loops), adjacency
    /// symmetry, connectivity and the order rule. Face structure is *not*
    /// checked here; see [`validate_rotation`] for the full report.
    pub fn from_adjacency(rotation: Vec<[VertexId; 3]>) -> Result<Self, GraphError> {
        let order = rotation.len() as u32;
        if order % 2 != 0 {
            return Err(GraphError::InvalidOrder { order, reason: OrderRule::Odd });
        }
        if order < 20 {
            return Err(GraphError::InvalidOrder { order, reason: OrderRule::TooSmall });
        }
        if order == 22 {
            return Err(GraphError::InvalidOrder { order, reason: OrderRule::TwentyTwo });
        }
        for (v, nbs) in rotation.iter().enumerate() {
            let v = v as VertexId;
            for (i, &w) in nbs.iter().enumerate() {
                if w >= order {
                    return Err(GraphError::IdOutOfRange { id: w, order });
                }
                if w == v {
                    return Err(GraphError::SelfLoop { vertex: v });
                }
                if nbs[..i].contains(&w) {
                    return Err(GraphError::Degree { vertex: v, neighbor: w });
                }
            }
        }
        for (v, nbs) in rotation.iter().enumerate() {
            let v = v as VertexId;
            for &w in nbs {
                if !rotation[w as usize].contains(&v) {
                    return Err(GraphError::Asymmetry { vertex: v, neighbor: w });
                }
            }
        }
        let reached = reachable_from(&rotation, 0);
        if reached != order {
            return Err(GraphError::Disconnected { reached, order });
        }
        Ok(FullereneGraph { rotation, label: None })
    }

    /// Number of vertices.
    pub fn order(&self) -> u32 {
        self.rotation.len() as u32
    }

    /// Number of edges; always `3 * order / 2`.
    pub fn edge_count(&self) -> u32 {
        3 * self.order() / 2
    }

    /// The three neighbours of `v` in rotation order.
    pub fn neighbors(&self, v: VertexId) -> [VertexId; 3] {
        self.rotation[v as usize]
    }

    /// Full rotation system.
    pub fn rotation(&self) -> &[[VertexId; 3]] {
        &self.rotation
    }

    /// Source identifier: file position or construction tag.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Traces all faces of the embedding. See [`trace_faces`].
    pub fn faces(&self) -> FaceSet {
        trace_faces(self)
    }

    /// Runs every fullerene check and collects all failures.
    pub fn validate(&self) -> ValidationReport {
        validate_rotation(&self.rotation)
    }
}

fn reachable_from(rotation: &[[VertexId; 3]], start: VertexId) -> u32 {
    if rotation.is_empty() {
        return 0;
    }
    let mut seen = vec![false; rotation.len()];
    let mut queue = vec![start];
    seen[start as usize] = true;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in &rotation[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    queue.len() as u32
}

/// The faces traced from a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<VertexId>>,
    pentagon_count: u32,
    hexagon_count: u32,
}

impl FaceSet {
    /// All faces, each a cyclic vertex sequence, in deterministic trace order.
    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face_count(&self) -> u32 {
        self.faces.len() as u32
    }

    pub fn pentagon_count(&self) -> u32 {
        self.pentagon_count
    }

    pub fn hexagon_count(&self) -> u32 {
        self.hexagon_count
    }

    /// Faces of length five, in trace order.
    pub fn pentagons(&self) -> impl Iterator<Item = &[VertexId]> {
        self.faces.iter().filter(|f| f.len() == 5).map(|f| f.as_slice())
    }

    /// True if every face is a pentagon or hexagon.
    pub fn only_pentagons_and_hexagons(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 5 || f.len() == 6)
    }
}

/// Traces every face of the embedding.
///
/// Each directed edge is used exactly once across all face walks; the walk
/// rule is fixed by the rotation convention, so the result is deterministic.
/// Face sizes are not restricted here; strict checks live in
/// [`validate_rotation`].
pub fn trace_faces(g: &FullereneGraph) -> FaceSet {
    let rotation = g.rotation();
    let n = rotation.len();
    // used[v][i] marks the directed edge (v, rotation[v][i]).
    let mut used = vec![[false; 3]; n];
    let mut faces = Vec::with_capacity(n / 2 + 2);
    let mut pentagon_count = 0;
    let mut hexagon_count = 0;
    for start_v in 0..n {
        for start_i in 0..3 {
            if used[start_v][start_i] {
                continue;
            }
            let mut face = Vec::with_capacity(6);
            let (mut u, mut v) = (start_v as VertexId, rotation[start_v][start_i]);
            loop {
                let pos = rotation[u as usize].iter().position(|&w| w == v).unwrap();
                if used[u as usize][pos] {
                    break;
                }
                used[u as usize][pos] = true;
                face.push(u);
                // successor of the reversed edge in the rotation at v
                let back = rotation[v as usize].iter().position(|&w| w == u).unwrap();
                let w = rotation[v as usize][(back + 1) % 3];
                u = v;
                v = w;
            }
            match face.len() {
                5 => pentagon_count += 1,
                6 => hexagon_count += 1,
                _ => {}
            }
            faces.push(face);
        }
    }
    FaceSet { faces, pentagon_count, hexagon_count }
}

/// A single refuted check in a [`ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationFailure {
    Structure(GraphError),
    /// A face of a size other than five or six was traced.
    FaceSize { size: u32, count: u32 },
    /// Pentagon count differs from twelve.
    PentagonCount { found: u32 },
    /// v - e + f != 2: the rotation does not describe a sphere embedding.
    EulerViolation { vertices: u32, edges: u32, faces: u32 },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::Structure(e) => write!(f, "{e}"),
            ValidationFailure::FaceSize { size, count } => {
                write!(f, "{count} face(s) of size {size} (only 5 and 6 allowed)")
            }
            ValidationFailure::PentagonCount { found } => {
                write!(f, "{found} pentagonal faces (expected 12)")
            }
            ValidationFailure::EulerViolation { vertices, edges, faces } => {
                write!(
                    f,
                    "Euler relation fails: {vertices} - {edges} + {faces} != 2 \
                     (not a sphere embedding)"
                )
            }
        }
    }
}

/// Outcome of running every fullerene check on a rotation system.
///
/// Collects all failures rather than short-circuiting, so corrupt input
/// files can be diagnosed in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub order: u32,
    pub pentagon_count: u32,
    pub hexagon_count: u32,
    pub face_count: u32,
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks a rotation system against every fullerene graph invariant:
/// 3-regularity, symmetry, connectivity, the order rule, face sizes in
/// {5, 6}, exactly twelve pentagons, and the Euler relation.
pub fn validate_rotation(rotation: &[[VertexId; 3]]) -> ValidationReport {
    let order = rotation.len() as u32;
    let mut failures = Vec::new();

    if order % 2 != 0 {
        failures.push(ValidationFailure::Structure(GraphError::InvalidOrder {
            order,
            reason: OrderRule::Odd,
        }));
    } else if order < 20 {
        failures.push(ValidationFailure::Structure(GraphError::InvalidOrder {
            order,
            reason: OrderRule::TooSmall,
        }));
    } else if order == 22 {
        failures.push(ValidationFailure::Structure(GraphError::InvalidOrder {
            order,
            reason: OrderRule::TwentyTwo,
        }));
    }

    let mut structurally_sound = true;
    for (v, nbs) in rotation.iter().enumerate() {
        let v = v as VertexId;
        for (i, &w) in nbs.iter().enumerate() {
            if w >= order {
                failures.push(ValidationFailure::Structure(GraphError::IdOutOfRange {
                    id: w,
                    order,
                }));
                structurally_sound = false;
            } else if w == v {
                failures.push(ValidationFailure::Structure(GraphError::SelfLoop { vertex: v }));
                structurally_sound = false;
            } else if nbs[..i].contains(&w) {
                failures.push(ValidationFailure::Structure(GraphError::Degree {
                    vertex: v,
                    neighbor: w,
                }));
                structurally_sound = false;
            }
        }
    }
    if structurally_sound {
        for (v, nbs) in rotation.iter().enumerate() {
            let v = v as VertexId;
            for &w in nbs {
                if !rotation[w as usize].contains(&v) {
                    failures.push(ValidationFailure::Structure(GraphError::Asymmetry {
                        vertex: v,
                        neighbor: w,
                    }));
                    structurally_sound = false;
                }
            }
        }
    }

    let mut pentagon_count = 0;
    let mut hexagon_count = 0;
    let mut face_count = 0;
    if structurally_sound && order > 0 {
        let reached = reachable_from(rotation, 0);
        if reached != order {
            failures.push(ValidationFailure::Structure(GraphError::Disconnected {
                reached,
                order,
            }));
        }
        // Face tracing is well-defined for any symmetric cubic rotation,
        // connected or not.
        let probe = FullereneGraph { rotation: rotation.to_vec(), label: None };
        let faces = trace_faces(&probe);
        pentagon_count = faces.pentagon_count();
        hexagon_count = faces.hexagon_count();
        face_count = faces.face_count();
        let mut odd_sizes: Vec<(u32, u32)> = Vec::new();
        for f in faces.faces() {
            let size = f.len() as u32;
            if size != 5 && size != 6 {
                match odd_sizes.iter_mut().find(|(s, _)| *s == size) {
                    Some((_, c)) => *c += 1,
                    None => odd_sizes.push((size, 1)),
                }
            }
        }
        for (size, count) in odd_sizes {
            failures.push(ValidationFailure::FaceSize { size, count });
        }
        if pentagon_count != 12 {
            failures.push(ValidationFailure::PentagonCount { found: pentagon_count });
        }
        let edges = 3 * order / 2;
        if order as i64 - edges as i64 + face_count as i64 != 2 {
            failures.push(ValidationFailure::EulerViolation {
                vertices: order,
                edges,
                faces: face_count,
            });
        }
    }

    ValidationReport { order, pentagon_count, hexagon_count, face_count, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct_type_a;

    #[test]
    fn dodecahedron_is_accepted() {
        let g = construct_type_a(2).unwrap();
        assert_eq!(g.order(), 20);
        let report = g.validate();
        assert!(report.is_valid(), "failures: {:?}", report.failures);
        assert_eq!(report.pentagon_count, 12);
        assert_eq!(report.hexagon_count, 0);
    }

    #[test]
    fn k4_rejected_by_order_rule() {
        let lists = vec![[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
        match FullereneGraph::from_adjacency(lists) {
            Err(GraphError::InvalidOrder { order: 4, reason: OrderRule::TooSmall }) => {}
            other => panic!("expected order rejection, got {other:?}"),
        }
    }

    #[test]
    fn asymmetric_lists_rejected() {
        let g = construct_type_a(2).unwrap();
        let mut rotation = g.rotation().to_vec();
        // vertex 0 now names vertex 7, but 7 does not name 0
        let old = rotation[0][1];
        assert_ne!(old, 7);
        rotation[0][1] = 7;
        assert!(!rotation[7].contains(&0));
        match FullereneGraph::from_adjacency(rotation) {
            Err(GraphError::Asymmetry { vertex: 0, .. }) => {}
            other => panic!("expected asymmetry, got {other:?}"),
        }
    }

    #[test]
    fn order_22_rejected() {
        // any cubic lists of length 22 must be refused before deeper checks
        let mut rotation = vec![[0u32; 3]; 22];
        for v in 0..22u32 {
            rotation[v as usize] = [(v + 1) % 22, (v + 21) % 22, (v + 11) % 22];
        }
        match FullereneGraph::from_adjacency(rotation) {
            Err(GraphError::InvalidOrder { order: 22, reason: OrderRule::TwentyTwo }) => {}
            other => panic!("expected order-22 rejection, got {other:?}"),
        }
    }

    #[test]
    fn face_trace_counts_match_order() {
        for k in [2u32, 5, 7, 10] {
            let g = construct_type_a(k).unwrap();
            let faces = g.faces();
            let n = g.order();
            assert_eq!(faces.pentagon_count(), 12);
            assert_eq!(faces.hexagon_count(), n / 2 - 10);
            assert_eq!(faces.face_count(), n / 2 + 2);
            // sum of face sizes = 2 * edges = 3n
            let total: u32 = faces.faces().iter().map(|f| f.len() as u32).sum();
            assert_eq!(total, 3 * n);
            // every edge on exactly two faces
            let mut edge_uses = std::collections::HashMap::new();
            for f in faces.faces() {
                for i in 0..f.len() {
                    let (a, b) = (f[i], f[(i + 1) % f.len()]);
                    let key = (a.min(b), a.max(b));
                    *edge_uses.entry(key).or_insert(0u32) += 1;
                }
            }
            assert_eq!(edge_uses.len() as u32, g.edge_count());
            assert!(edge_uses.values().all(|&c| c == 2));
        }
    }

    #[test]
    fn trace_is_deterministic() {
        let g = construct_type_a(5).unwrap();
        assert_eq!(trace_faces(&g), trace_faces(&g));
    }

    #[test]
    fn validate_passes_for_all_small_tubes() {
        for k in 2..=21 {
            let g = construct_type_a(k).unwrap();
            let report = g.validate();
            assert!(report.is_valid(), "k={k}: {:?}", report.failures);
        }
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K_{3,3} doubled to reach order 20 is awkward; instead take a valid
        // tube and swap two rotation entries, which changes the embedding but
        // not the graph. The face multiset degenerates and Euler fails.
        let g = construct_type_a(3).unwrap();
        let mut rotation = g.rotation().to_vec();
        rotation[10].swap(0, 1);
        let report = validate_rotation(&rotation);
        assert!(!report.is_valid());
        assert!(report
            .failures
            .iter()
            .any(|f| matches!(f, ValidationFailure::EulerViolation { .. })
                || matches!(f, ValidationFailure::FaceSize { .. })));
    }

    #[test]
    fn validation_collects_multiple_failures() {
        // order 22 and a self-loop at once: both must be reported
        let mut rotation = vec![[0u32; 3]; 22];
        for v in 0..22u32 {
            rotation[v as usize] = [(v + 1) % 22, (v + 21) % 22, (v + 11) % 22];
        }
        rotation[0] = [0, 1, 21];
        let report = validate_rotation(&rotation);
        assert!(report.failures.len() >= 2, "failures: {:?}", report.failures);
    }
}
