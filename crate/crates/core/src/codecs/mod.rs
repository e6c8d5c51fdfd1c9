//! Text formats for link diagrams (Gauss codes and duet/quintet files),
//! planarity checks, linking matrices and blackboard framing.

mod dq;
mod gauss;
mod matrix;

pub use dq::{dq_to_diagram, dq_to_gauss, dq_to_map, parse_dq, serialize_dq, DuetQuintetFile, Quintet};
pub use gauss::{
    equivalent_up_to_relabeling, from_diagram, interlacement_parity_ok, parse_gauss, realizable, serialize_gauss,
    to_diagram, GaussCode, MAX_SIGN_SEARCH,
};
pub use matrix::{blackboard_frame, linking_matrix, Diagonal, LinkingMatrix};
