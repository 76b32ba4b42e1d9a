use alloc::format;
use alloc::vec::Vec;

use super::algebra::GradedMonoidAlgebra;
use crate::cones::{AffineMonoid, Face};
use crate::error::{Error, Result};
use crate::lattice::vector::Vector;
use crate::poset::Poset;

/// Monomial graded prime `p_τ = <χ^w : w ∈ M \ τ>` of a monoid algebra,
/// recorded by the face `τ` of the effective monoid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePoint {
    pub face: Face,
    /// Effective generators lying in `τ`.
    pub tau_generators: Vec<Vector>,
    /// Effective generators outside `τ`; they generate `p_τ`.
    pub ideal_generators: Vec<Vector>,
}

impl PrimePoint {
    /// Whether the monomial `χ^w` (with `w` in the monoid) lies in `p_τ`.
    pub fn ideal_contains(&self, w: &[crate::lattice::Int]) -> bool {
        !self.face.contains(w)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.ideal_generators.is_empty()
    }
}

fn points_of(m: &AffineMonoid) -> Poset<PrimePoint> {
    let faces = m.faces();
    let pts: Vec<PrimePoint> = faces
        .elements()
        .iter()
        .map(|f| {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                (0..m.generators().len()).partition(|i| f.generators.contains(i));
            PrimePoint {
                face: f.clone(),
                tau_generators: inside.iter().map(|&i| m.generators()[i].clone()).collect(),
                ideal_generators: outside.iter().map(|&i| m.generators()[i].clone()).collect(),
            }
        })
        .collect();
    // p ⊆ q iff τ_q ⊆ τ_p
    Poset::new(pts, |p, q| q.face.is_subface_of(&p.face))
}

/// Graded prime spectrum of a faithfully graded monoid algebra, ordered by
/// ideal inclusion.
pub fn k_spectrum(r: &GradedMonoidAlgebra) -> Result<Poset<PrimePoint>> {
    if !r.is_faithful() {
        return Err(Error::NotFaithful);
    }
    Ok(points_of(r.effective_monoid()))
}

/// Monomial graded primes for an arbitrary grading. For a coarse grading
/// this is only the torus-invariant part of the spectrum.
pub fn invariant_spectrum(r: &GradedMonoidAlgebra) -> Poset<PrimePoint> {
    points_of(r.effective_monoid())
}

fn check_point(r: &GradedMonoidAlgebra, p: &PrimePoint) -> Result<()> {
    let m = r.effective_monoid();
    let ok = p.face.generators.iter().all(|&i| i < m.generators().len())
        && m.faces().elements().contains(&p.face)
        && p.tau_generators.len() == p.face.generators.len()
        && p.face
            .generators
            .iter()
            .zip(&p.tau_generators)
            .all(|(&i, g)| &m.generators()[i] == g);
    if ok {
        Ok(())
    } else {
        Err(Error::Foreign(format!("{:?} is not a point of this spectrum", p.face.generators)))
    }
}

/// Homogeneous localization `R_p = R[τ_p^{-1}]` at a monomial prime.
pub fn stalk(r: &GradedMonoidAlgebra, p: &PrimePoint) -> Result<GradedMonoidAlgebra> {
    check_point(r, p)?;
    let more: Vec<usize> = p
        .face
        .generators
        .iter()
        .map(|&i| r.effective_source(i))
        .filter(|&(_, already)| !already)
        .map(|(j, _)| j)
        .collect();
    r.localize(&more)
}

/// The exponent monoid `M - τ_p` of the stalk.
pub fn stalk_monoid(r: &GradedMonoidAlgebra, p: &PrimePoint) -> Result<AffineMonoid> {
    Ok(stalk(r, p)?.effective_monoid().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::ivec;
    use crate::lattice::FgAbelianGroup;
    use alloc::vec;

    #[test]
    fn plane_spectrum() {
        let r = GradedMonoidAlgebra::finely_graded(AffineMonoid::free(2));
        let s = k_spectrum(&r).unwrap();
        assert_eq!(s.len(), 4);
        let max = s.maximal();
        assert_eq!(max.len(), 1);
        assert_eq!(s.get(max[0]).ideal_generators, vec![ivec(&[1, 0]), ivec(&[0, 1])]);
        let ray = s.position(|p| p.tau_generators == vec![ivec(&[1, 0])]).unwrap();
        let st = stalk_monoid(&r, s.get(ray)).unwrap();
        assert!(st.contains(&ivec(&[-3, 2])));
        assert!(!st.contains(&ivec(&[0, -1])));
    }

    #[test]
    fn coarse_grading_refused() {
        let r = GradedMonoidAlgebra::polynomial_ring(FgAbelianGroup::free(1), &[ivec(&[1]), ivec(&[1])])
            .unwrap();
        assert_eq!(k_spectrum(&r).unwrap_err(), Error::NotFaithful);
        assert_eq!(invariant_spectrum(&r).len(), 4);
    }

    #[test]
    fn foreign_point() {
        let r = GradedMonoidAlgebra::finely_graded(AffineMonoid::free(2));
        let other = GradedMonoidAlgebra::finely_graded(AffineMonoid::free(3));
        let p = k_spectrum(&other).unwrap().get(3).clone();
        assert!(matches!(stalk(&r, &p), Err(Error::Foreign(_))));
    }
}
