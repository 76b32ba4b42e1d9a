mod common;

use std::collections::BTreeMap;

use common::*;
use coxkernel_core::cones::AffineMonoid;
use coxkernel_core::cox::cox_presentation;
use coxkernel_core::divisors::*;
use coxkernel_core::graded::HomogeneousPolynomial;
use coxkernel_core::lattice::vector::{self, ivec, Int, Vector};
use coxkernel_core::lattice::{FgAbelianGroup, GroupHom, IntMatrix};
use coxkernel_core::Error;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

fn one() -> BigRational {
    BigRational::one()
}

#[test]
fn class_group_examples() {
    let (cl, deg) = class_group(&p2()).unwrap();
    assert_eq!(cl, FgAbelianGroup::free(1));
    assert!(same_up_to_automorphism(&deg.matrix().row_vectors(), &[vec![1, 1, 1]]));
    let (cl, _) = class_group(&a1_chart()).unwrap();
    assert_eq!(cl, FgAbelianGroup::cyclic(2));
    let (cl, _) = class_group(&affine_plane()).unwrap();
    assert!(cl.is_trivial());
    let bad = fan(2, &[&[1, 0], &[-1, 0]], &[&[0, 1]]);
    assert!(matches!(class_group(&bad), Err(Error::InvalidFan(_))));
}

#[test]
fn class_groups_match_minors_on_corpus() {
    for c in corpus() {
        let (cl, deg) = class_group(&c.fan).unwrap();
        let oracle = class_group_by_minors(c.fan.rays());
        assert_eq!((cl.free_rank(), cl.torsion().to_vec()), (oracle.0, oracle.1.iter().map(|&t| Int::from(t)).collect()), "{}", c.name);
        assert!(deg.is_surjective());
        assert!(ray_map(&c.fan).then(&deg).unwrap().matrix().is_zero(), "{}", c.name);
    }
}

#[test]
fn principal_divisor_examples() {
    assert_eq!(principal_divisor(&p2(), &ivec(&[0, 0])).unwrap(), WeilDivisor::zero(3));
    assert_eq!(principal_divisor(&p2(), &ivec(&[1, 0])).unwrap().coeffs, ivec(&[1, 0, -1]));
    assert_eq!(principal_divisor(&p1(), &ivec(&[1])).unwrap().coeffs, ivec(&[1, -1]));
    let (_, deg) = class_group(&p2()).unwrap();
    let mut rng = rng(3);
    for _ in 0..50 {
        let m = random_vec(&mut rng, 2, -9, 9);
        let d = principal_divisor(&p2(), &m).unwrap();
        assert!(vector::is_zero(&divisor_class(&deg, &d).unwrap()));
    }
}

#[test]
fn weil_divisor_basics() {
    let d = WeilDivisor::new(ivec(&[2, 0, -1]));
    assert_eq!(d.support(), vec![0, 2]);
    assert!(!d.is_effective());
    assert!(d.add(&WeilDivisor::new(ivec(&[0, 0, 1]))).is_effective());
}

/// Lattice points with `<m, v> + D_ρ >= 0` in a large box.
fn sections_by_box(f: &coxkernel_core::cones::Fan, d: &WeilDivisor, radius: i64) -> Vec<Vector> {
    let n = f.lattice_rank();
    let mut out = Vec::new();
    let mut m = vec![-radius; n];
    loop {
        let v = ivec(&m);
        if f.rays().iter().zip(&d.coeffs).all(|(r, c)| vector::dot(&v, r) + c >= Int::from(0)) {
            out.push(v);
        }
        let mut i = 0;
        while i < n && m[i] == radius {
            m[i] = -radius;
            i += 1;
        }
        if i == n {
            break;
        }
        m[i] += 1;
    }
    out.sort();
    out
}

#[test]
fn global_section_examples() {
    let s = global_sections(&p1(), &WeilDivisor::new(ivec(&[2, 0])), None).unwrap();
    assert_eq!(s, vec![ivec(&[-2]), ivec(&[-1]), ivec(&[0])]);
    let s = global_sections(&p2(), &WeilDivisor::new(ivec(&[1, 0, 0])), None).unwrap();
    assert_eq!(s.len(), 3);
    let s = global_sections(&p2(), &WeilDivisor::new(ivec(&[1, -1, 0])), None).unwrap();
    assert!(!s.contains(&ivec(&[0, 0])));

    let e = global_sections(&two_rays(), &WeilDivisor::zero(2), None).unwrap_err();
    assert_eq!(e, Error::Precondition("supply enumeration box".into()));
    let bx = LatticeBox {
        lower: ivec(&[0, 0]),
        upper: ivec(&[2, 1]),
    };
    assert_eq!(global_sections(&two_rays(), &WeilDivisor::zero(2), Some(&bx)).unwrap().len(), 6);
}

#[test]
fn section_count_translation_symmetry() {
    let fans = [p1(), p2(), p121(), f1(), p1xp1()];
    let mut rng = rng(5);
    for case in 0..100 {
        let f = &fans[case % fans.len()];
        let d = WeilDivisor::new(random_vec(&mut rng, f.rays().len(), -1, 3));
        let m = random_vec(&mut rng, f.lattice_rank(), -3, 3);
        let shifted = d.add(&principal_divisor(f, &m).unwrap());
        let a = global_sections(f, &d, None).unwrap();
        let b = global_sections(f, &shifted, None).unwrap();
        assert_eq!(a.len(), b.len());
        let mut expected = sections_by_box(f, &d, 12);
        let mut got = a.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }
}

#[test]
fn invariant_kdivisor_examples() {
    let p = cox_presentation(&p2()).unwrap();
    let r = p.ring();
    let f = HomogeneousPolynomial::monomial(r, ivec(&[2, 1, 0])).unwrap();
    let d = invariant_kdivisor(r, &f).unwrap();
    assert_eq!(d.coeffs, ivec(&[2, 1, 0]));
    assert!(!d.non_invariant_part);
    let f = HomogeneousPolynomial::monomial(r, ivec(&[1, 1, 1])).unwrap();
    assert_eq!(invariant_kdivisor(r, &f).unwrap().coeffs, ivec(&[1, 1, 1]));

    let q = cox_presentation(&p1()).unwrap();
    let f = HomogeneousPolynomial::new(q.ring(), BTreeMap::from([(ivec(&[1, 0]), one()), (ivec(&[0, 1]), one())])).unwrap();
    let d = invariant_kdivisor(q.ring(), &f).unwrap();
    assert_eq!(d.coeffs, ivec(&[0, 0]));
    assert!(d.non_invariant_part);
}

#[test]
fn kdivisor_class_is_degree() {
    let mut rng = rng(13);
    for c in corpus() {
        check_kdivisor_degrees(&mut rng, &c.fan, 200);
    }
}

#[test]
fn support_lemma() {
    check_support_lemma(&mut rng(17), 200);
}

#[test]
fn reflexive_vector_examples() {
    assert_eq!(reflexive_vector(&[ivec(&[1, 0, 0]), ivec(&[0, 1, 0])]).unwrap(), ivec(&[0, 0, 0]));
    assert_eq!(box_plus(&ivec(&[1, 0, 0]), &ivec(&[0, 1, 0])), ivec(&[1, 1, 0]));
    assert!(reflexive_vector(&[]).is_err());
}

#[test]
fn reflexive_vector_consistency() {
    check_reflexive_consistency(&mut rng(19), 100);
}

fn a1_spec(phi_rows: &[&[i64]], k: FgAbelianGroup) -> DivisorialAlgebraSpec {
    let phi = GroupHom::new(k, FgAbelianGroup::free(2), IntMatrix::from_i64(phi_rows)).unwrap();
    DivisorialAlgebraSpec::new(2, vec![ivec(&[1, 0]), ivec(&[1, 2])], phi).unwrap()
}

fn quadric_spec(phi_rows: &[&[i64]], k: FgAbelianGroup) -> DivisorialAlgebraSpec {
    let phi = GroupHom::new(k, FgAbelianGroup::free(4), IntMatrix::from_i64(phi_rows)).unwrap();
    DivisorialAlgebraSpec::new(3, quadric_cone().rays().to_vec(), phi).unwrap()
}

fn laurent(m: &[i64]) -> LaurentPolynomial {
    BTreeMap::from([(ivec(m), one())])
}

#[test]
fn mu_valuation_examples() {
    let spec = a1_spec(&[&[1, 0], &[0, 1]], FgAbelianGroup::free(2));
    let w = ivec(&[0, 3]);
    assert_eq!(mu_valuation(&spec, 0, &laurent(&[1, 0]), &w).unwrap(), Int::from(1));
    assert_eq!(mu_valuation(&spec, 1, &laurent(&[1, 0]), &w).unwrap(), Int::from(4));
    assert_eq!(mu_valuation(&spec, 1, &laurent(&[0, 0]), &w).unwrap(), Int::from(3));
    assert!(mu_valuation(&spec, 0, &LaurentPolynomial::new(), &w).is_err());

    let zero_phi = a1_spec(&[&[0, 0], &[0, 0]], FgAbelianGroup::free(2));
    assert_eq!(mu_valuation(&zero_phi, 1, &laurent(&[1, 1]), &w).unwrap(), Int::from(3));

    assert!(!component_membership(&spec, &laurent(&[-1, 0]), &ivec(&[1, 0])).unwrap());
    assert!(component_membership(&spec, &laurent(&[0, 0]), &ivec(&[1, 1])).unwrap());
    assert!(!component_membership(&spec, &laurent(&[-1, -1]), &ivec(&[0, 0])).unwrap());
}

fn laurent_mul(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::new();
    for (x, c) in a {
        for (y, d) in b {
            *out.entry(vector::add(x, y)).or_insert_with(|| BigRational::from_integer(0.into())) += c * d;
        }
    }
    out.retain(|_, c| *c != BigRational::from_integer(0.into()));
    out
}

#[test]
fn mu_valuation_additivity() {
    let spec = a1_spec(&[&[1, 0], &[0, 1]], FgAbelianGroup::free(2));
    let mut rng = rng(23);
    let random_laurent = |rng: &mut rand_chacha::ChaCha8Rng| -> LaurentPolynomial {
        (0..rng.gen_range(1..4))
            .map(|_| (random_vec(rng, 2, -4, 4), BigRational::from_integer(rng.gen_range(1i64..5).into())))
            .collect()
    };
    for _ in 0..500 {
        let a = random_laurent(&mut rng);
        let b = random_laurent(&mut rng);
        let w = random_vec(&mut rng, 2, -5, 5);
        let w2 = random_vec(&mut rng, 2, -5, 5);
        let rho = rng.gen_range(0..2);
        let lhs = mu_valuation(&spec, rho, &laurent_mul(&a, &b), &vector::add(&w, &w2)).unwrap();
        let rhs = mu_valuation(&spec, rho, &a, &w).unwrap() + mu_valuation(&spec, rho, &b, &w2).unwrap();
        assert_eq!(lhs, rhs);
        let (m, m2) = (random_vec(&mut rng, 2, -4, 4), random_vec(&mut rng, 2, -4, 4));
        assert_eq!(
            mu_valuation_monomial(&spec, rho, &vector::add(&m, &m2), &vector::add(&w, &w2)).unwrap(),
            mu_valuation_monomial(&spec, rho, &m, &w).unwrap() + mu_valuation_monomial(&spec, rho, &m2, &w2).unwrap()
        );
    }
}

#[test]
fn class_semigroup_examples() {
    let onto = a1_spec(&[&[1, 0], &[0, 1]], FgAbelianGroup::free(2));
    assert!(divisorial_class_semigroup(&onto).is_trivial());
    let zero = a1_spec(&[&[0], &[0]], FgAbelianGroup::free(1));
    assert_eq!(divisorial_class_semigroup(&zero), FgAbelianGroup::cyclic(2));
    let twice = quadric_spec(&[&[2], &[0], &[0], &[0]], FgAbelianGroup::free(1));
    assert_eq!(divisorial_class_semigroup(&twice), FgAbelianGroup::cyclic(2));
    let once = quadric_spec(&[&[1], &[0], &[0], &[0]], FgAbelianGroup::free(1));
    assert!(divisorial_class_semigroup(&once).is_trivial());
}

#[test]
fn divisorial_presentations() {
    // φ = 0: (σ^∨ ∩ M) ⊕ K
    let zero = a1_spec(&[&[0], &[0]], FgAbelianGroup::free(1));
    let pres = divisorial_algebra_presentation(&zero).unwrap();
    assert!(pres.degree_zero_ok);
    assert!(pres.all_degrees);
    let m = pres.algebra.monoid();
    assert!(m.contains(&ivec(&[0, 0, 1])) && m.contains(&ivec(&[0, 0, -1])));
    assert!(!m.contains(&ivec(&[-1, 0, 0])));

    // A = k[u, v], φ = id: (α + w₁, β + w₂, w₁, w₂) ↔ N² ⊕ Z²
    let phi = GroupHom::identity(&FgAbelianGroup::free(2));
    let plane = DivisorialAlgebraSpec::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1])], phi).unwrap();
    let pres = divisorial_algebra_presentation(&plane).unwrap();
    assert!(pres.degree_zero_ok && pres.all_degrees);
    let m = pres.algebra.monoid();
    let mut rng = rng(29);
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let (w1, w2) = (rng.gen_range(-5..5), rng.gen_range(-5..5));
        assert!(m.contains(&ivec(&[a - w1, b - w2, w1, w2])));
        assert!(!m.contains(&ivec(&[-1 - w1, b - w2, w1, w2])));
    }

    let a1 = a1_spec(&[&[1, 0], &[0, 1]], FgAbelianGroup::free(2));
    let pres = divisorial_algebra_presentation(&a1).unwrap();
    assert!(pres.degree_zero_ok && pres.all_degrees);

    let torsion = a1_spec(&[&[0], &[0]], FgAbelianGroup::cyclic(2));
    assert!(matches!(divisorial_algebra_presentation(&torsion), Err(Error::Precondition(_))));
}

#[test]
fn a1_divisorial_algebra_coarsens_to_cox_ring() {
    use coxkernel_core::graded::{coarsen_cie, CoarseningData};
    let a1 = a1_spec(&[&[1, 0], &[0, 1]], FgAbelianGroup::free(2));
    let pres = divisorial_algebra_presentation(&a1).unwrap();
    let r = &pres.algebra;
    let cox = cox_presentation(&a1_chart()).unwrap();
    // K = Z² -> Cl = Z/2, e_ρ ↦ deg x_ρ
    let psi = GroupHom::from_images(cox.class_group().clone(), &cox.degrees()).unwrap();
    let data = CoarseningData::from_units(r, psi).unwrap();
    let c = coarsen_cie(r, &data).unwrap();
    let poly = c.as_monoid_algebra().unwrap().expect("free group");
    // units of A(K, φ) all have degrees in ker ψ, so they collapse to 0
    let gens: Vec<Vector> = poly
        .monoid()
        .generators()
        .iter()
        .filter(|g| !vector::is_zero(g))
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    assert_eq!(gens.len(), 2);
    assert_eq!(IntMatrix::from_rows(&gens, 2).unwrap().determinant().magnitude(), &num_bigint::BigUint::from(1u8));
    let free = AffineMonoid::new(2, gens.clone()).unwrap();
    assert!(free.is_pointed());
    let mut degs: Vec<Vector> = gens.iter().map(|g| poly.degree(g)).collect();
    degs.sort();
    let mut expected = cox.degrees();
    expected.sort();
    assert_eq!(degs, expected);
}

#[test]
fn monomial_approximation_is_partial() {
    let rays = p2().rays().to_vec();
    let one = Int::from(1);
    let zero = Int::from(0);
    assert_eq!(monomial_approximation(2, &rays, &[(0, one.clone()), (1, zero.clone()), (2, zero.clone())]).unwrap(), None);
    let m = monomial_approximation(2, &rays, &[(0, one.clone()), (1, zero)]).unwrap().unwrap();
    assert_eq!(m, ivec(&[1, 0]));
    assert!(monomial_approximation(2, &rays, &[(7, one)]).is_err());
}
