//! Exact integer linear algebra.

pub mod group;
pub mod matrix;
pub mod snf;
pub mod vector;

pub use group::{
    cokernel, image_generators, in_subgroup, integer_kernel, kernel, same_subgroup, solve,
    subgroup_generates, FgAbelianGroup, GroupHom, Index,
};
pub use matrix::IntMatrix;
pub use snf::{hermite_rows, smith_normal_form, Smith};
pub use vector::{ivec, Int, Vector};
