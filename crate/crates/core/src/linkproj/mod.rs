//! PL links: projection to decorated diagrams, linking numbers, writhe,
//! framings from cylinders, and realization of diagrams in 3-space.

mod cylinder;
mod diagram;
mod gauss_integral;
mod generate;
mod pllink;
mod project;
mod realize;
mod render;

pub use cylinder::{framings_from_cylinders, Cylinder, CylinderCurves};
pub use diagram::{Crossing, DiagramGeometry, LinkDiagram, Passage, PassageSite, Slot};
pub use gauss_integral::gauss_linking_integral;
pub use generate::{random_link, RANDOM_LINK_CLEARANCE};
pub use pllink::{segment_distance, PLLink};
pub use project::{linking_numbers, project, project_with, GenericityTolerances, MAX_PROJECTION_ATTEMPTS};
pub use realize::realize;
pub use render::{diagram_svg, UNDER_GAP};

/// `12 n^2`, the most segments a link built from a gem with `2n` vertices
/// needs.
pub fn size_bound(n: u64) -> u64 {
    12 * n * n
}

/// True iff the link has at most [`size_bound`] segments.
pub fn check_size_bound(link: &PLLink, n: u64) -> bool {
    (link.segment_count() as u64) <= size_bound(n)
}
