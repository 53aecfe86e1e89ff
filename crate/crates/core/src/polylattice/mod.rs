//! Lattices over F_p[t]: reduced bases, successive minima, Plücker heights,
//! kernels and counts of bounded-height lattice vectors.

mod kernel;
mod matrix;
mod reduce;

pub use kernel::{column_echelon, kernel_lattice, lattice_height, saturate, short_kernel_vector, ColumnEchelon};
pub use matrix::{combinations, PolyMatrix};
pub use reduce::{linear_space_count, reduce_basis, vector_height, ReducedBasis, ReducedBasisJson};
