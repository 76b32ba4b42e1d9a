use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cones::AffineMonoid;
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{hermite_rows, image_generators, kernel, FgAbelianGroup, GroupHom, IntMatrix};

/// Monoid algebra `k[M]` over the rationals, graded by `deg : Z^d -> K`,
/// with some generators inverted.
#[derive(Clone, Debug)]
pub struct GradedMonoidAlgebra {
    monoid: AffineMonoid,
    grading: GroupHom,
    inverted: Vec<usize>,
    effective: AffineMonoid,
}

impl GradedMonoidAlgebra {
    pub fn new(monoid: AffineMonoid, grading: GroupHom, inverted: Vec<usize>) -> Result<Self> {
        let d = monoid.ambient_rank();
        if grading.source() != &FgAbelianGroup::free(d) {
            return Err(Error::Dimension(format!(
                "grading must be defined on Z^{d}, got source {}",
                grading.source()
            )));
        }
        let mut inverted = inverted;
        inverted.sort_unstable();
        inverted.dedup();
        if let Some(&i) = inverted.iter().find(|&&i| i >= monoid.generators().len()) {
            return Err(Error::Dimension(format!("inverted index {i} out of range")));
        }
        let mut gens = monoid.generators().to_vec();
        gens.extend(inverted.iter().map(|&i| vector::neg(&monoid.generators()[i])));
        let effective = AffineMonoid::new(d, gens)?;
        Ok(GradedMonoidAlgebra {
            monoid,
            grading,
            inverted,
            effective,
        })
    }

    /// Polynomial ring `k[x_1, ..., x_n]` with `deg x_i = degrees[i]`.
    pub fn polynomial_ring(k: FgAbelianGroup, degrees: &[Vector]) -> Result<Self> {
        let grading = GroupHom::from_images(k, degrees)?;
        GradedMonoidAlgebra::new(AffineMonoid::free(degrees.len()), grading, Vec::new())
    }

    /// `k[M]` graded by the identity of `Z^d`.
    pub fn finely_graded(monoid: AffineMonoid) -> Self {
        let g = GroupHom::identity(&FgAbelianGroup::free(monoid.ambient_rank()));
        GradedMonoidAlgebra::new(monoid, g, Vec::new()).expect("identity grading")
    }

    pub fn monoid(&self) -> &AffineMonoid {
        &self.monoid
    }

    pub fn grading(&self) -> &GroupHom {
        &self.grading
    }

    pub fn grading_group(&self) -> &FgAbelianGroup {
        self.grading.target()
    }

    pub fn inverted(&self) -> &[usize] {
        &self.inverted
    }

    pub fn ambient_rank(&self) -> usize {
        self.monoid.ambient_rank()
    }

    /// Monoid of exponents of monomials of the localization: the generators
    /// followed by the negatives of the inverted ones.
    pub fn effective_monoid(&self) -> &AffineMonoid {
        &self.effective
    }

    /// Index into [`Self::monoid`]'s generators of an effective generator.
    pub fn effective_source(&self, i: usize) -> (usize, bool) {
        let n = self.monoid.generators().len();
        if i < n {
            (i, false)
        } else {
            (self.inverted[i - n], true)
        }
    }

    /// Further localization.
    pub fn localize(&self, more: &[usize]) -> Result<Self> {
        let mut inv = self.inverted.clone();
        inv.extend_from_slice(more);
        GradedMonoidAlgebra::new(self.monoid.clone(), self.grading.clone(), inv)
    }

    /// Same monoid and localization, different grading.
    pub fn regrade(&self, grading: GroupHom) -> Result<Self> {
        GradedMonoidAlgebra::new(self.monoid.clone(), grading, self.inverted.clone())
    }

    pub fn degree(&self, exponent: &[Int]) -> Vector {
        self.grading.apply(exponent)
    }

    pub fn contains_monomial(&self, exponent: &[Int]) -> bool {
        self.effective.contains(exponent)
    }

    /// Grading restricted to the group of differences of the effective monoid.
    pub fn restricted_grading(&self) -> GroupHom {
        let basis = self.effective.group_basis();
        let d = self.ambient_rank();
        let m = if basis.is_empty() {
            IntMatrix::zeros(d, 0)
        } else {
            IntMatrix::from_columns(basis, d).expect("basis width")
        };
        let inc = GroupHom::new(FgAbelianGroup::free(basis.len()), FgAbelianGroup::free(d), m)
            .expect("free groups");
        inc.then(&self.grading).expect("compatible maps")
    }

    /// Whether the grading is injective on the group of differences.
    pub fn is_faithful(&self) -> bool {
        self.restricted_grading().is_injective()
    }

    /// Lattice basis of the exponents of monomial units.
    pub fn unit_lattice(&self) -> Vec<Vector> {
        let gens: Vec<Vector> = self
            .effective
            .unit_generators()
            .iter()
            .map(|&i| self.effective.generators()[i].clone())
            .collect();
        hermite_rows(&gens)
    }

    /// Homogeneous units: exponent lattice and generators of the subgroup of
    /// `K` of their degrees.
    pub fn homogeneous_units(&self) -> UnitData {
        let lattice = self.unit_lattice();
        let degrees = if lattice.is_empty() {
            Vec::new()
        } else {
            let h = GroupHom::from_images(self.grading_group().clone(), &lattice_degrees(self, &lattice))
                .expect("degrees in K");
            image_generators(&h)
        };
        UnitData { lattice, degrees }
    }

    /// Kernel of the grading on the group of differences, in `Z^d`.
    pub fn degree_zero_lattice(&self) -> Vec<Vector> {
        let basis = self.effective.group_basis();
        let k = kernel(&self.restricted_grading());
        let d = self.ambient_rank();
        let vs: Vec<Vector> = k
            .iter()
            .map(|c| {
                basis.iter().zip(c).fold(vector::zero_vector(d), |acc, (b, x)| {
                    vector::add(&acc, &vector::scale(b, x))
                })
            })
            .collect();
        hermite_rows(&vs)
    }
}

fn lattice_degrees(r: &GradedMonoidAlgebra, lattice: &[Vector]) -> Vec<Vector> {
    lattice.iter().map(|u| r.degree(u)).collect()
}

/// Units of a graded monoid algebra, up to scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitData {
    /// Basis of the lattice of exponents `u` with `χ^u` a unit.
    pub lattice: Vec<Vector>,
    /// Generators of the subgroup of degrees of homogeneous units.
    pub degrees: Vec<Vector>,
}

impl UnitData {
    pub fn degrees_trivial(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Degrees of homogeneous units of `r`.
pub fn homogeneous_units(r: &GradedMonoidAlgebra) -> UnitData {
    r.homogeneous_units()
}

/// Non-zero homogeneous element: finitely many monomials with rational
/// coefficients, all of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    terms: BTreeMap<Vector, BigRational>,
    degree: Vector,
}

impl HomogeneousPolynomial {
    pub fn new(r: &GradedMonoidAlgebra, terms: BTreeMap<Vector, BigRational>) -> Result<Self> {
        let terms: BTreeMap<Vector, BigRational> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(first) = terms.keys().next() else {
            return Err(Error::Precondition("zero polynomial".into()));
        };
        let degree = r.degree(first);
        for e in terms.keys() {
            if !r.contains_monomial(e) {
                return Err(Error::Foreign(format!("{e:?} is not a monomial of the algebra")));
            }
            if r.degree(e) != degree {
                return Err(Error::Precondition(format!(
                    "terms of degrees {degree:?} and {:?}",
                    r.degree(e)
                )));
            }
        }
        Ok(HomogeneousPolynomial { terms, degree })
    }

    pub fn monomial(r: &GradedMonoidAlgebra, exponent: Vector) -> Result<Self> {
        let mut t = BTreeMap::new();
        t.insert(exponent, BigRational::from_integer(Int::from(1)));
        HomogeneousPolynomial::new(r, t)
    }

    pub fn terms(&self) -> &BTreeMap<Vector, BigRational> {
        &self.terms
    }

    pub fn degree(&self) -> &[Int] {
        &self.degree
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vector, BigRational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *terms.entry(vector::add(a, b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let degree = vector::add(&self.degree, &other.degree);
        // the degree is only used for comparisons, reduce through the terms
        HomogeneousPolynomial { terms, degree }
    }

    /// Sum, `None` when it vanishes. Both summands must have the same degree.
    pub fn add(&self, other: &Self) -> Option<Self> {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigRational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        (!terms.is_empty()).then(|| HomogeneousPolynomial {
            terms,
            degree: self.degree.clone(),
        })
    }
}

/// Order of vanishing along `x_ρ`: the minimal `ρ`-exponent over the terms.
/// Requires the generator `ρ` to be a free, non-inverted coordinate.
pub fn monomial_valuation(r: &GradedMonoidAlgebra, f: &HomogeneousPolynomial, rho: usize) -> Result<Int> {
    let gens = r.monoid().generators();
    let d = r.ambient_rank();
    let free_coordinate = rho < gens.len()
        && gens[rho] == vector::unit_vector(d, rho)
        && gens
            .iter()
            .enumerate()
            .all(|(i, g)| i == rho || g[rho].is_zero());
    if !free_coordinate || r.inverted().contains(&rho) {
        return Err(Error::Precondition(format!("valuation not discrete at {rho}")));
    }
    Ok(f.terms
        .keys()
        .map(|e| e[rho].clone())
        .min()
        .expect("non-zero polynomial"))
}
