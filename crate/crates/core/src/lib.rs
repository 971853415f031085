//! Distance-based invariants and pentagon statistics of fullerene graphs,
//! at file-stream throughput, plus constructors and closed-form evaluators
//! for the nanotubical families with maximal Wiener index.
//!
//! The pieces:
//!
//! * [`graph`] — rotation-system representation, face tracing, validation;
//! * [`codec`] — the planar-code binary format used by isomer generators;
//! * [`metrics`] — BFS distance engine: transmissions, Wiener index,
//!   Wiener complexity, diameter;
//! * [`pentagons`] — pentagon adjacency parts, isolated pentagons, IPR;
//! * [`families`] — the six maximal-Wiener cap families and the explicit
//!   (5,0)-nanotube constructor;
//! * [`scan`] — parallel streaming aggregation with deterministic output.
//!
//! ```
//! use fullerene_core::families::construct_type_a;
//! use fullerene_core::metrics::report;
//!
//! let dodecahedron = construct_type_a(2).unwrap();
//! let r = report(&dodecahedron).unwrap();
//! assert_eq!((r.wiener, r.complexity, r.diameter), (500, 1, 5));
//! ```

pub mod codec;
pub mod families;
pub mod graph;
pub mod metrics;
pub mod pentagons;
pub mod scan;

pub use codec::{CodecError, PlanarCodeReader, PlanarCodeWriter};
pub use families::{FamilyKind, FamilyRow};
pub use graph::{FaceSet, FullereneGraph, GraphError, ValidationReport};
pub use metrics::{GraphReport, TransmissionVector};
pub use pentagons::PentagonStats;
pub use scan::{DistributionReport, ScanOptions, ScanOutcome};
