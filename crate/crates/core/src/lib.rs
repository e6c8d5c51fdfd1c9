//! Wings, weighted Tutte embeddings and blackboard-framed links.
//!
//! The crate turns a combinatorial move log into a pair of planar wings,
//! embeds them with a weighted barycentric method, lifts them into 3-space by
//! cone constructions, and works with the resulting links: projections,
//! linking numbers, framings, Gauss codes and the duet/quintet link format.

pub mod codecs;
pub mod error;
pub mod geom3;
pub mod linkproj;
pub mod pipeline;
pub mod planar_map;
pub mod tutte;

pub use error::{Error, Result};
