use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic constructions of this crate.
///
/// Verifiers never return these for mathematical failures; those are
/// recorded in a [`crate::cox::VerificationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Vector or matrix dimensions do not fit together.
    Dimension(String),
    /// A homomorphism is not well defined on the torsion of its source.
    IllDefinedHom(String),
    /// The torsion orders of a group do not form a divisibility chain.
    InvalidGroup(String),
    /// Hilbert bases are only offered for pointed cones.
    NotPointed,
    /// The monomial spectrum only describes all graded primes for faithful gradings.
    NotFaithful,
    /// A point, face or ideal does not belong to the given object.
    Foreign(String),
    /// Inputs violate a documented precondition.
    Precondition(String),
    /// The fan failed validation.
    InvalidFan(String),
    /// The rays of a fan do not span the ambient lattice.
    TorusFactor,
    /// A bounded enumeration did not stabilise.
    EnumerationBound(String),
    /// A coarsening datum is not made of homogeneous units of the stated degrees.
    Coarsening(String),
    /// Charts of a reconstructed base do not glue to a fan.
    Gluing(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            Error::IllDefinedHom(m) => write!(f, "homomorphism not well defined: {m}"),
            Error::InvalidGroup(m) => write!(f, "invalid group presentation: {m}"),
            Error::NotPointed => f.write_str("hilbert basis requires pointed cone"),
            Error::NotFaithful => {
                f.write_str("K-spectrum exceeds monomial ideals; faithful grading required")
            }
            Error::Foreign(m) => write!(f, "foreign object: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::InvalidFan(m) => write!(f, "invalid fan: {m}"),
            Error::TorusFactor => f.write_str(
                "torus factor: Cox presentation refused (rays must span; otherwise the \
                 homogeneous units of the Cox ring are not all of degree zero)",
            ),
            Error::EnumerationBound(m) => write!(f, "increase enumeration bound: {m}"),
            Error::Coarsening(m) => write!(f, "invalid coarsening datum: {m}"),
            Error::Gluing(m) => write!(f, "charts do not glue: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
