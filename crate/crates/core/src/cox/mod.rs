//! Cox rings of toric varieties and the checks around them.

pub mod charts;
pub mod orbits;
pub mod presentation;
pub mod reconstruct;
pub mod report;
pub mod verify;

pub use charts::{characteristic_space, chart, CharSpaceChart};
pub use orbits::{orbit_face_lattice, toric_f1_points, F1Points, OrbitNode};
pub use presentation::{cox_presentation, lattice_basis, CoxPresentation};
pub use reconstruct::{
    canonical_charts, charts_from_prime_system, find_prime_system, reconstruct_base, reconstruct_from_prime_system,
    round_trip, same_fan_up_to_permutation, RoundTrip,
};
pub use report::{Condition, VerificationReport, Witness, WitnessValue};
pub use verify::{
    irredundant_failures, verify_theorem_a, verify_theorem_b, verify_theorem_b_on, verify_theorem_c,
    verify_theorem_c_on, verify_theorem_d,
};
