//! Exact weighted Subset Feedback Vertex Set and Node Multiway Cut over
//! rooted layouts.
//!
//! The solver runs a dynamic program over a rooted layout of the graph.
//! Each node keeps a small table of partial solutions chosen through
//! d-neighbor equivalence, so the running time is governed by the
//! maximum induced matching width of the layout.

pub mod bitset;
pub mod dp;
pub mod error;
pub mod graph;
pub mod io;
pub mod layout;
pub mod nec;
pub mod nmc;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, Instance};
pub use layout::RootedLayout;
