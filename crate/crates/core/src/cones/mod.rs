//! Rational polyhedral cones, affine monoids and fans.

pub mod cone;
pub mod dd;
pub mod face;
pub mod fan;
pub mod hilbert;
pub mod monoid;

pub use cone::{dual_cone, Cone};
pub use face::{face_lattice, Face};
pub use fan::{validate_fan, Fan};
pub use hilbert::{hilbert_basis, lattice_cone_generators, lattice_points_generators};
pub use monoid::{monoid_faces, AffineMonoid};
