//! Points, exact predicates, and the 3D constructions: cones, the lifted
//! wing complex, blow-up midpoints, and curve shortcutting.

mod blowup;
mod complex;
mod cone;
mod h1;
pub mod point;
pub mod predicates;
mod shortcut;

pub use blowup::{blowup_point, blowup_points, BlowupPoint, BlowupVariant};
pub use complex::Complex3;
pub use cone::cone;
pub use h1::{build_h1_diamond, select_representatives, AxisFrame, Representative};
pub use point::{p2, p3, Point2, Point3};
pub use shortcut::shortcut;
