//! The boson-fermion realization and its Fock-space rendering.

mod dyson;
mod fock;
mod map;

pub use dyson::{dyson_check, OrdinaryBoson};
pub use fock::{
    check_consistency_square, check_relations_on_fock, fock_matrix, fock_matrix_with_gl11, shift_bound, FockError,
    FockMatrix, FockSpace, FockState,
};
pub use map::{check_relations_for, check_trivial_projection, rho, verify_realization, RealizationMap, SubalgebraMode};
