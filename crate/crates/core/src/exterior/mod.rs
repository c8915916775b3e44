//! The graded exterior algebra on a space with a fixed ordered basis.

mod blade;
mod index;
mod matrix;
mod multivector;
mod subspace;
mod vector;

pub use blade::{factor_blade, factor_blade_exact, is_blade, ExtendedCoordView};

pub use index::{MultiIndex, MAX_DIM};
pub use matrix::{cofactor_inverse, cramer_solve, det, kernel_basis, permanent, rank, Matrix};
pub use multivector::{
    det_of_map, ext_map, ext_power_map, grade_project, plucker_from_matrix, wedge, wedge_vectors,
    Multivector,
};
pub use subspace::{project_along, reflect_along, sym_basis_count};
pub use vector::Vector;
