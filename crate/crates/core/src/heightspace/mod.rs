//! X(b) as an explicit variety over F_p: coefficient expansion, membership,
//! heights, and projection from constant points.

mod expand;
mod point;
mod projection;
mod variety;

pub use expand::{coefficient_var, expand, is_primitive, t_coefficients, ExpandedJson, ExpandedSystem};
pub use point::{height, HeightPoint, PointKind};
pub use projection::{center_on_variety, find_projection_center, project_from_point, Projection};
pub use variety::{Ambient, VarietySpec};
