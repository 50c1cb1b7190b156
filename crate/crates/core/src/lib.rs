//! Plane subgraphs of simple drawings of complete graphs.
//!
//! Drawings are handled through their rotation systems. The crate provides
//! the crossing predicates, face tracing for plane subgraphs, maximal and
//! maximum augmentation, instance generators and the checkers used to
//! validate the structure of maximal plane subgraphs.

pub mod augment;
pub mod cli;
pub mod connectivity;
pub mod drawing;
pub mod error;
pub mod faces;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod k4;
pub mod k5;
pub mod optimize;
pub mod order;
pub mod plane;
pub mod structure;
pub mod svg;

pub use drawing::{Drawing, Edge, ValidationReport, VertexId, Violation};
pub use error::{Error, Result};
pub use faces::{trace_faces, Corner, EdgeLocation, FaceId, FaceStructure, HalfEdge};
pub use order::CrossingOrder;
pub use plane::{is_plane, PlaneSubgraph};
