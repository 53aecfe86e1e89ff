//! Pell equations `x^2 - beta y^2 = gamma` over F_p[t]: square roots at
//! infinity, fundamental units by continued fractions, complete solution
//! lists of bounded height, and the `2^n` family.

mod cf;
mod series;
mod solve;

pub use cf::{
    continued_fraction_unit, continued_fraction_unit_bounded, norm_one_unit, quad_mul, PellInstance, Unit,
    UnitJson, MAX_CF_STEPS,
};
pub use series::{poly_sqrt, sqrt_series, LaurentSeries};
pub use solve::{
    base_solution, family_beta, find_family_prime, pell_family, pell_solutions, pell_variety, Pair, PellFamily,
    PellFamilyJson, PellSolutionJson, PellSolutionSet,
};
