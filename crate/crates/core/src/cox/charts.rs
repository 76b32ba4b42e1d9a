use alloc::vec::Vec;

use super::presentation::CoxPresentation;
use crate::cones::{lattice_cone_generators, AffineMonoid};
use crate::error::Result;
use crate::graded::{degree_zero_monoid, GradedMonoidAlgebra};
use crate::lattice::vector::{self, Vector};
use crate::lattice::solve;

/// Affine chart `X̂_σ -> U_σ` of the characteristic space.
#[derive(Clone, Debug)]
pub struct CharSpaceChart {
    /// Ray indices of the maximal cone `σ`.
    pub cone: Vec<usize>,
    /// Variables `x_ρ` with `ρ ∉ σ(1)`.
    pub inverted: Vec<usize>,
    pub ring: GradedMonoidAlgebra,
    /// Generators of `σ^∨ ∩ M`.
    pub base: Vec<Vector>,
    /// Degree-zero exponents of the chart ring.
    pub degree_zero: AffineMonoid,
    /// `m ↦ div(χ^m)` sends `σ^∨ ∩ M` into the degree-zero monoid.
    pub forward_ok: bool,
    /// Every degree-zero generator comes from `σ^∨ ∩ M`.
    pub backward_ok: bool,
    /// Minimal generators correspond one to one, up to units.
    pub hilbert_bijection: bool,
}

impl CharSpaceChart {
    pub fn is_isomorphism(&self) -> bool {
        self.forward_ok && self.backward_ok
    }
}

/// Minimal generators of `m` modulo units: its non-unit generators with
/// associates and decomposable ones removed.
pub(crate) fn irreducibles_mod_units(m: &AffineMonoid) -> Vec<Vector> {
    let units: Vec<Vector> = m
        .unit_generators()
        .iter()
        .map(|&i| m.generators()[i].clone())
        .collect();
    let non_units: Vec<Vector> = m
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| !m.unit_generators().contains(i))
        .map(|(_, g)| g.clone())
        .collect();
    let unit_monoid = AffineMonoid::new(m.ambient_rank(), units).expect("widths");
    let mut out: Vec<Vector> = Vec::new();
    for g in &non_units {
        if out.iter().any(|h| unit_monoid.contains(&vector::sub(g, h))) {
            continue;
        }
        let decomposable = non_units.iter().any(|h| {
            let rest = vector::sub(g, h);
            m.contains(&rest) && !m.cone().in_lineality(&rest)
        });
        if !decomposable {
            out.push(g.clone());
        }
    }
    out
}

/// Whether `f` maps the irreducibles of `a` bijectively onto those of `b`,
/// up to units of `b`.
fn bijective_mod_units(a: &AffineMonoid, b: &AffineMonoid, f: impl Fn(&Vector) -> Vector) -> bool {
    let ia: Vec<Vector> = irreducibles_mod_units(a).iter().map(f).collect();
    let ib = irreducibles_mod_units(b);
    if ia.len() != ib.len() {
        return false;
    }
    let units: Vec<Vector> = b
        .unit_generators()
        .iter()
        .map(|&i| b.generators()[i].clone())
        .collect();
    let um = AffineMonoid::new(b.ambient_rank(), units).expect("widths");
    ia.iter()
        .all(|x| ib.iter().filter(|y| um.contains(&vector::sub(x, y))).count() == 1)
}

/// Chart of the maximal cone with the given rays.
pub fn chart(p: &CoxPresentation, cone: &[usize]) -> Result<CharSpaceChart> {
    let f = p.fan();
    let n = f.lattice_rank();
    let mut cone = cone.to_vec();
    cone.sort_unstable();
    let inverted: Vec<usize> = (0..p.n_rays()).filter(|i| !cone.contains(i)).collect();
    let ring = p.ring().localize(&inverted)?;
    let sigma_rays: Vec<Vector> = cone.iter().map(|&i| f.rays()[i].clone()).collect();
    let base = lattice_cone_generators(n, &sigma_rays, &[])?;
    let base_monoid = AffineMonoid::new(n, base.clone())?;
    let degree_zero = degree_zero_monoid(&ring)?;
    let forward_ok = base
        .iter()
        .all(|m| degree_zero.contains(&p.pullback(m)));
    let backward_ok = degree_zero.generators().iter().all(|e| {
        solve(p.ray_map(), e).is_some_and(|m| p.pullback(&m) == *e && base_monoid.contains(&m))
    });
    let hilbert_bijection =
        forward_ok && backward_ok && bijective_mod_units(&base_monoid, &degree_zero, |m| p.pullback(m));
    Ok(CharSpaceChart {
        cone,
        inverted,
        ring,
        base,
        degree_zero,
        forward_ok,
        backward_ok,
        hilbert_bijection,
    })
}

/// One chart per maximal cone.
pub fn characteristic_space(p: &CoxPresentation) -> Result<Vec<CharSpaceChart>> {
    p.fan().max_cones().iter().map(|s| chart(p, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::Fan;
    use crate::cox::cox_presentation;
    use crate::lattice::vector::ivec;
    use alloc::vec;

    #[test]
    fn line_charts() {
        let f = Fan::new(1, vec![ivec(&[1]), ivec(&[-1])], vec![vec![0], vec![1]]);
        let p = cox_presentation(&f).unwrap();
        let cs = characteristic_space(&p).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].inverted, vec![1]);
        assert_eq!(cs[0].degree_zero.generators(), &[ivec(&[1, -1])]);
        assert!(cs.iter().all(|c| c.is_isomorphism() && c.hilbert_bijection));
    }

    #[test]
    fn non_pointed_chart() {
        let f = Fan::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1])], vec![vec![0], vec![1]]);
        let p = cox_presentation(&f).unwrap();
        for c in characteristic_space(&p).unwrap() {
            assert!(c.is_isomorphism());
            assert!(c.hilbert_bijection);
        }
    }
}
