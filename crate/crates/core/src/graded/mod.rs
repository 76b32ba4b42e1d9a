//! Graded monoid algebras, their monomial spectra and quotients.

pub mod algebra;
pub mod coarsen;
pub mod quotient;
pub mod spectrum;

pub use algebra::{homogeneous_units, monomial_valuation, GradedMonoidAlgebra, HomogeneousPolynomial, UnitData};
pub use coarsen::{coarsen_cie, same_ideal, CoarseAlgebra, CoarseningData};
pub use quotient::{
    degree_zero_monoid, good_quotient_affine, invariant_good_quotient, proj_quotient, spec_morphism,
    GoodQuotient, ProjQuotient, SpecMorphism,
};
pub use spectrum::{invariant_spectrum, k_spectrum, stalk, stalk_monoid, PrimePoint};
