use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use super::algebra::GradedMonoidAlgebra;
use super::spectrum::{invariant_spectrum, PrimePoint};
use crate::cones::{lattice_cone_generators, AffineMonoid, Face};
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{kernel, FgAbelianGroup, GroupHom, IntMatrix};
use crate::poset::Poset;

/// Radius of the bounded search for degree-zero generators of a
/// non-saturated monoid; the search is repeated at twice this radius and
/// must agree.
pub const DEGREE_ZERO_SEARCH_RADIUS: u32 = 4;

fn from_basis(basis: &[Vector], c: &[Int], d: usize) -> Vector {
    basis
        .iter()
        .zip(c)
        .fold(vector::zero_vector(d), |acc, (b, x)| vector::add(&acc, &vector::scale(b, x)))
}

/// The monoid `M_0` of degree-zero exponents of `R`.
pub fn degree_zero_monoid(r: &GradedMonoidAlgebra) -> Result<AffineMonoid> {
    let m = r.effective_monoid();
    let d = r.ambient_rank();
    let basis = m.group_basis();
    let k = kernel(&r.restricted_grading());
    let l0: Vec<Vector> = k.iter().map(|c| from_basis(basis, c, d)).collect();
    if l0.is_empty() {
        return AffineMonoid::new(d, Vec::new());
    }
    let restrict = |f: &Vector| -> Vector { l0.iter().map(|l| vector::dot(f, l)).collect() };
    let ineqs: Vec<Vector> = m.cone().facets().iter().map(restrict).collect();
    let eqs: Vec<Vector> = m.cone().equations().iter().map(restrict).collect();
    let sat: Vec<Vector> = lattice_cone_generators(l0.len(), &ineqs, &eqs)?
        .iter()
        .map(|c| from_basis(&l0, c, d))
        .collect();
    if sat.iter().all(|x| m.contains(x)) {
        return AffineMonoid::new(d, sat);
    }
    let saturated = AffineMonoid::new(d, sat.clone())?;
    if !saturated.is_pointed() {
        return Err(Error::EnumerationBound(
            "degree-zero part of a non-saturated monoid with units".into(),
        ));
    }
    let a = bounded_irreducibles(m, &sat, DEGREE_ZERO_SEARCH_RADIUS);
    let b = bounded_irreducibles(m, &sat, 2 * DEGREE_ZERO_SEARCH_RADIUS);
    if a != b {
        return Err(Error::EnumerationBound(format!(
            "degree-zero generators not stable at radius {DEGREE_ZERO_SEARCH_RADIUS}"
        )));
    }
    AffineMonoid::new(d, a)
}

/// Irreducible elements of `M` among the combinations of `sat` with
/// coefficients at most `radius`.
fn bounded_irreducibles(m: &AffineMonoid, sat: &[Vector], radius: u32) -> Vec<Vector> {
    let d = m.ambient_rank();
    let mut found: BTreeSet<Vector> = BTreeSet::new();
    let mut coeffs = vec![0u32; sat.len()];
    loop {
        let x = sat
            .iter()
            .zip(&coeffs)
            .fold(vector::zero_vector(d), |acc, (s, &c)| {
                vector::add(&acc, &vector::scale(s, &Int::from(c)))
            });
        if !vector::is_zero(&x) && m.contains(&x) {
            found.insert(x);
        }
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                let all: Vec<Vector> = found.iter().cloned().collect();
                return all
                    .iter()
                    .filter(|x| {
                        !all.iter()
                            .any(|y| y != *x && m.contains(&vector::sub(x, y)) && !vector::is_zero(&vector::sub(x, y)))
                    })
                    .cloned()
                    .collect();
            }
            coeffs[i] += 1;
            if coeffs[i] <= radius {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Combinatorial shadow of the good quotient `Spec_K R -> Spec R_0` on
/// monomial points.
#[derive(Clone, Debug)]
pub struct GoodQuotient {
    m0: AffineMonoid,
    source: Poset<PrimePoint>,
    base: Poset<Face>,
    point_map: Vec<usize>,
}

/// Monomial closed set `V(<χ^e : e ∈ E>)` as indices of points.
pub type ClosedSet = BTreeSet<usize>;

impl GoodQuotient {
    pub fn degree_zero(&self) -> &AffineMonoid {
        &self.m0
    }

    pub fn source(&self) -> &Poset<PrimePoint> {
        &self.source
    }

    /// Faces of `M_0`, ordered by inclusion.
    pub fn base(&self) -> &Poset<Face> {
        &self.base
    }

    /// Source point index to base face index: `τ ↦ τ ∩ M_0`.
    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.point_map.len()).filter(|&i| self.point_map[i] == y).collect()
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.base.len()).all(|y| self.point_map.contains(&y))
    }

    /// Whether the point map is a bijection.
    pub fn is_geometric(&self) -> bool {
        self.point_map.len() == self.base.len() && self.is_surjective()
    }

    /// The fiber point lying in the closure of every other fiber point.
    pub fn distinguished_point(&self, fiber: &[usize]) -> Result<usize> {
        let Some(&first) = fiber.first() else {
            return Err(Error::Precondition("empty fiber".into()));
        };
        if first >= self.point_map.len() {
            return Err(Error::Foreign(format!("point {first}")));
        }
        let y = self.point_map[first];
        let mut given: Vec<usize> = fiber.to_vec();
        given.sort_unstable();
        given.dedup();
        if given != self.fiber(y) {
            return Err(Error::Precondition("not a full fiber of the quotient map".into()));
        }
        // closure of p = points with larger ideal = smaller face
        let candidates: Vec<usize> = given
            .iter()
            .copied()
            .filter(|&p| given.iter().all(|&q| self.source.leq(q, p)))
            .collect();
        match candidates.as_slice() {
            [p] => Ok(*p),
            _ => Err(Error::Precondition(format!(
                "fiber over {y} has {} distinguished points",
                candidates.len()
            ))),
        }
    }

    /// Closed points of the source: maximal ideals.
    pub fn is_closed_source_point(&self, p: usize) -> bool {
        self.source.maximal().contains(&p)
    }

    /// Closed points of the base: minimal faces.
    pub fn is_closed_base_point(&self, y: usize) -> bool {
        self.base.minimal().contains(&y)
    }

    /// `V(<χ^e : e ∈ exponents>)` in the source.
    pub fn closed_set(&self, exponents: &[Vector]) -> ClosedSet {
        (0..self.source.len())
            .filter(|&i| {
                let f = &self.source.get(i).face;
                exponents.iter().all(|e| !f.contains(e))
            })
            .collect()
    }

    pub fn image(&self, a: &ClosedSet) -> ClosedSet {
        a.iter().map(|&i| self.point_map[i]).collect()
    }

    /// Closed subsets of the base are the sets closed under passing to
    /// smaller faces.
    pub fn is_closed_in_base(&self, s: &ClosedSet) -> bool {
        s.iter()
            .all(|&y| (0..self.base.len()).all(|z| !self.base.leq(z, y) || s.contains(&z)))
    }
}

fn build_quotient(r: &GradedMonoidAlgebra) -> Result<GoodQuotient> {
    let m0 = degree_zero_monoid(r)?;
    let source = invariant_spectrum(r);
    let base = m0.faces();
    let mut point_map = Vec::with_capacity(source.len());
    for p in source.elements() {
        let inside: Vec<usize> = (0..m0.generators().len())
            .filter(|&i| p.face.contains(&m0.generators()[i]))
            .collect();
        let y = base
            .position(|f| f.generators == inside)
            .expect("faces of M meet M_0 in faces");
        point_map.push(y);
    }
    Ok(GoodQuotient {
        m0,
        source,
        base,
        point_map,
    })
}

/// Good quotient of the affine graded scheme of a faithfully graded monoid
/// algebra.
pub fn good_quotient_affine(r: &GradedMonoidAlgebra) -> Result<GoodQuotient> {
    if !r.is_faithful() {
        return Err(Error::NotFaithful);
    }
    build_quotient(r)
}

/// The same construction restricted to monomial points, for any grading.
pub fn invariant_good_quotient(r: &GradedMonoidAlgebra) -> Result<GoodQuotient> {
    build_quotient(r)
}

/// Chart `Spec_Z R_f -> Spec (R_f)_0` of a Proj.
#[derive(Clone, Debug)]
pub struct ProjChart {
    /// Index of the inverted generator `f`.
    pub generator: usize,
    pub quotient: GoodQuotient,
    pub geometric: bool,
}

#[derive(Clone, Debug)]
pub struct ProjQuotient {
    pub charts: Vec<ProjChart>,
    pub geometric: bool,
    /// Points of the glued quotient, each given by the generators of `R`
    /// not in its prime.
    pub points: Vec<Vec<usize>>,
}

/// `Proj` of a non-negatively `Z`-graded monoid algebra, covered by the
/// charts of its positive-degree generators.
pub fn proj_quotient(r: &GradedMonoidAlgebra) -> Result<ProjQuotient> {
    let k = r.grading_group();
    if k != &FgAbelianGroup::free(1) {
        return Err(Error::Precondition(format!("Proj needs a Z-grading, got {k}")));
    }
    let m = r.effective_monoid();
    for g in m.generators() {
        if r.degree(g)[0].is_negative() {
            return Err(Error::Precondition(format!("negative degree at {g:?}")));
        }
    }
    let n = r.monoid().generators().len();
    let mut charts = Vec::new();
    let mut points: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        if r.inverted().contains(&i) || !r.degree(&r.monoid().generators()[i])[0].is_positive() {
            continue;
        }
        let chart = r.localize(&[i])?;
        let quotient = invariant_good_quotient(&chart)?;
        let geometric = quotient.is_geometric();
        for p in quotient.source().elements() {
            let gens: Vec<usize> = p.face.generators.iter().copied().filter(|&j| j < n).collect();
            points.insert(gens);
        }
        charts.push(ProjChart {
            generator: i,
            quotient,
            geometric,
        });
    }
    let geometric = charts.iter().all(|c| c.geometric);
    Ok(ProjQuotient {
        charts,
        geometric,
        points: points.into_iter().collect(),
    })
}

/// Map of monomial spectra induced by a monoid map `A : M' -> M`
/// compatible with gradings via `ψ : K' -> K`.
#[derive(Clone, Debug)]
pub struct SpecMorphism {
    /// Index in the spectrum of the target algebra to index in the spectrum
    /// of the source algebra.
    pub point_map: Vec<usize>,
}

/// `p_τ ↦ p'_{A^{-1}(τ) ∩ M'}` where `monoid_map` is the `d x d'` matrix of
/// `A`.
pub fn spec_morphism(
    source: &GradedMonoidAlgebra,
    target: &GradedMonoidAlgebra,
    monoid_map: &IntMatrix,
    psi: &GroupHom,
) -> Result<SpecMorphism> {
    let (d, d1) = (target.ambient_rank(), source.ambient_rank());
    if monoid_map.rows() != d || monoid_map.cols() != d1 {
        return Err(Error::Dimension(format!(
            "monoid map is {}x{}, expected {d}x{d1}",
            monoid_map.rows(),
            monoid_map.cols()
        )));
    }
    if psi.source() != source.grading_group() || psi.target() != target.grading_group() {
        return Err(Error::Dimension("ψ does not connect the grading groups".into()));
    }
    for g in source.effective_monoid().generators() {
        let img = monoid_map.mul_vec(g);
        if !target.effective_monoid().contains(&img) {
            return Err(Error::Precondition(format!("{g:?} maps to {img:?} outside the monoid")));
        }
    }
    for j in 0..d1 {
        let e = vector::unit_vector(d1, j);
        let lhs = target.degree(&monoid_map.mul_vec(&e));
        let rhs = psi.apply(&source.degree(&e));
        if !target.grading_group().equal(&lhs, &rhs) {
            return Err(Error::Precondition(format!("gradings incompatible at e_{j}")));
        }
    }
    let s_src = invariant_spectrum(source);
    let s_tgt = invariant_spectrum(target);
    let src_gens = source.effective_monoid().generators();
    let mut point_map = Vec::with_capacity(s_tgt.len());
    for p in s_tgt.elements() {
        let inside: Vec<usize> = (0..src_gens.len())
            .filter(|&i| p.face.contains(&monoid_map.mul_vec(&src_gens[i])))
            .collect();
        let q = s_src
            .position(|f| f.face.generators == inside)
            .expect("preimages of faces are faces");
        point_map.push(q);
    }
    Ok(SpecMorphism { point_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::ivec;

    fn poly(degrees: &[i64]) -> GradedMonoidAlgebra {
        let ds: Vec<Vector> = degrees.iter().map(|&x| ivec(&[x])).collect();
        GradedMonoidAlgebra::polynomial_ring(FgAbelianGroup::free(1), &ds).unwrap()
    }

    #[test]
    fn hyperbolic_quotient() {
        let r = poly(&[1, -1]);
        let q = invariant_good_quotient(&r).unwrap();
        assert_eq!(q.degree_zero().generators(), &[ivec(&[1, 1])]);
        assert!(q.is_surjective());
        let origin = q.base().position(|f| f.generators.is_empty()).unwrap();
        let fiber = q.fiber(origin);
        assert_eq!(fiber.len(), 3);
        let p = q.distinguished_point(&fiber).unwrap();
        assert_eq!(q.source().get(p).ideal_generators.len(), 2);
        assert!(q.distinguished_point(&fiber[..1]).is_err());
    }

    #[test]
    fn projective_line() {
        let pq = proj_quotient(&poly(&[1, 1])).unwrap();
        assert_eq!(pq.charts.len(), 2);
        assert!(pq.geometric);
        assert_eq!(pq.points.len(), 3);
        let pq = proj_quotient(&poly(&[1, 2])).unwrap();
        assert!(pq.geometric);
        assert_eq!(pq.charts[0].quotient.degree_zero().generators(), &[ivec(&[-2, 1])]);
        assert!(proj_quotient(&poly(&[1, -1])).is_err());
    }

    #[test]
    fn non_saturated_degree_zero() {
        // M = <2, 3> in Z with K = 0: M_0 = M
        let m = AffineMonoid::new(1, vec![ivec(&[2]), ivec(&[3])]).unwrap();
        let r = GradedMonoidAlgebra::new(m, GroupHom::zero(FgAbelianGroup::free(1), FgAbelianGroup::trivial()), vec![]).unwrap();
        let m0 = degree_zero_monoid(&r).unwrap();
        assert_eq!(m0.generators(), &[ivec(&[2]), ivec(&[3])]);
    }
}
