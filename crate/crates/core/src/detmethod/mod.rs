//! The determinant method over F_p[t]: multiplicities, t-adic divisibility of
//! evaluation determinants, coordinate normalization, and auxiliary
//! polynomials for congruence classes of X(b).

mod auxpoly;
mod basis;
mod normalize;
mod valuation;

pub use auxpoly::{
    auxiliary_poly_affine, auxiliary_poly_projective, class_points, degree_budget, homogenize, kappa,
    kappa_bound_affine, kappa_bound_projective, AuxOptions, AuxPolyJson, AuxPolyResult, CongruenceDatum,
};
pub use basis::{basis_size, binomial, residual_main_term, residual_size, MonomialBasis};
pub use normalize::{coordinate_normalize, Normalized, Shear};
pub use valuation::{
    divisibility_exponent, divisibility_main_term, local_exponent, mult_at, reduces_to, DivisibilityReport,
};
