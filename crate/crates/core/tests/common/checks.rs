//! Randomized oracle checks shared by the integration tests and the
//! acceptance harness. Each panics on the first counterexample.

use std::collections::{BTreeMap, BTreeSet};

use coxkernel_core::cones::{AffineMonoid, Fan};
use coxkernel_core::cox::cox_presentation;
use coxkernel_core::divisors::{box_plus, divisor_class, invariant_kdivisor, reflexive_vector, WeilDivisor};
use coxkernel_core::graded::coarsen::{ideal_product, ideal_sum};
use coxkernel_core::graded::{coarsen_cie, same_ideal, CoarseningData, GoodQuotient, GradedMonoidAlgebra, HomogeneousPolynomial};
use coxkernel_core::lattice::vector::{self, ivec, Int, Vector};
use coxkernel_core::lattice::{FgAbelianGroup, GroupHom};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{f1, monomials_of_degree, p1, p121, p1xp1, p2, random_vec};

pub fn monoid(dim: usize, gens: &[&[i64]]) -> AffineMonoid {
    AffineMonoid::new(dim, gens.iter().map(|g| ivec(g)).collect()).unwrap()
}

/// Checks the good-quotient laws on every pair of monomial closed sets cut
/// out by subsets of generators.
pub fn check_quotient_laws(q: &GoodQuotient, gens: &[Vector]) {
    assert!(q.is_surjective());
    let subsets: Vec<Vec<Vector>> = (0u32..(1 << gens.len()))
        .map(|mask| (0..gens.len()).filter(|i| mask & (1 << i) != 0).map(|i| gens[i].clone()).collect())
        .collect();
    let closed: Vec<_> = subsets.iter().map(|e| q.closed_set(e)).collect();
    for a in &closed {
        assert!(q.is_closed_in_base(&q.image(a)));
        for b in &closed {
            let both: BTreeSet<usize> = a.intersection(b).copied().collect();
            let lhs = q.image(&both);
            let rhs: BTreeSet<usize> = q.image(a).intersection(&q.image(b)).copied().collect();
            assert_eq!(lhs, rhs);
        }
    }
    for y in 0..q.base().len() {
        let fiber = q.fiber(y);
        let p = q.distinguished_point(&fiber).unwrap();
        // unique by exhaustive search: the smallest face in the fiber
        let by_search: Vec<usize> = fiber
            .iter()
            .copied()
            .filter(|&c| {
                let fc = &q.source().get(c).face.generators;
                fiber.iter().all(|&o| fc.iter().all(|g| q.source().get(o).face.generators.contains(g)))
            })
            .collect();
        assert_eq!(by_search, vec![p]);
        assert_eq!(q.is_closed_source_point(p), q.is_closed_base_point(y));
    }
}

/// Exponents of the ideal generators: random small elements of the monoid.
pub fn random_ideal(rng: &mut impl Rng, m: &AffineMonoid, size: usize) -> Vec<Vector> {
    (0..size)
        .map(|_| {
            m.generators().iter().fold(vector::zero_vector(m.ambient_rank()), |acc, g| {
                vector::add(&acc, &vector::scale(g, &Int::from(rng.gen_range(0..3))))
            })
        })
        .collect()
}

/// Graded algebras with a coarsening `ψ` whose kernel is spanned by unit degrees.
pub fn cie_fixtures() -> Vec<(GradedMonoidAlgebra, GroupHom)> {
    let laurent = GradedMonoidAlgebra::new(monoid(1, &[&[1], &[-1]]), GroupHom::identity(&FgAbelianGroup::free(1)), vec![]).unwrap();
    let to_z2 = GroupHom::from_images(FgAbelianGroup::cyclic(2), &[ivec(&[1])]).unwrap();

    let plane = GradedMonoidAlgebra::finely_graded(AffineMonoid::free(2));
    let id = GroupHom::identity(&FgAbelianGroup::free(2));

    // k[x, y, u^±], forgetting the degree of u
    let with_unit = GradedMonoidAlgebra::new(AffineMonoid::free(3), GroupHom::identity(&FgAbelianGroup::free(3)), vec![2]).unwrap();
    let forget = GroupHom::from_images(FgAbelianGroup::free(2), &[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[0, 0])]).unwrap();

    // k[x, y, u^±] with deg u = (1, 1), collapsed along (a, b) ↦ a - b
    let mixed = GradedMonoidAlgebra::new(
        AffineMonoid::free(3),
        GroupHom::from_images(FgAbelianGroup::free(2), &[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])]).unwrap(),
        vec![2],
    )
    .unwrap();
    let collapse = GroupHom::from_images(FgAbelianGroup::free(1), &[ivec(&[1]), ivec(&[-1])]).unwrap();
    vec![(laurent, to_z2), (plane, id), (with_unit, forget), (mixed, collapse)]
}

/// Ideal transfer along the coarsening: round trips both ways, and
/// compatibility with sums and products, on random monomial ideals.
pub fn check_cie_bijection(rng: &mut impl Rng, r: &GradedMonoidAlgebra, psi: GroupHom, trials: usize) {
    let data = CoarseningData::from_units(r, psi).unwrap();
    let c = coarsen_cie(r, &data).unwrap();
    assert!(c.unit_kernel_is_chi(&data));
    let m = r.effective_monoid();
    let fine_div = |a: &[Int], b: &[Int]| m.contains(&vector::sub(b, a));
    let coarse_div = |a: &[Int], b: &[Int]| c.divides(a, b);
    let add = |a: &[Int], b: &[Int]| c.group().add(a, b);
    for _ in 0..trials {
        let size = rng.gen_range(1..4);
        let a = random_ideal(rng, m, size);
        let size_b = rng.gen_range(1..4);
        let b = random_ideal(rng, m, size_b);
        let fa = c.forward(&a);
        let back = c.backward(&fa).unwrap();
        assert!(same_ideal(&back, &a, fine_div), "{a:?} -> {fa:?} -> {back:?}");

        let coarse: Vec<Vector> = random_ideal(rng, m, size).iter().map(|e| c.class_of(e)).collect();
        let there = c.forward(&c.backward(&coarse).unwrap());
        assert!(same_ideal(&there, &coarse, coarse_div));

        let fb = c.forward(&b);
        assert!(same_ideal(&c.forward(&ideal_sum(&a, &b)), &ideal_sum(&fa, &fb), coarse_div));
        let prod = ideal_product(&a, &b, vector::add);
        assert!(same_ideal(&c.forward(&prod), &ideal_product(&fa, &fb, add), coarse_div));
    }
}

/// `[div_K(χ^e)] = deg_K(χ^e)` for random monomials of the Cox ring.
pub fn check_kdivisor_degrees(rng: &mut impl Rng, f: &Fan, trials: usize) {
    let p = cox_presentation(f).unwrap();
    let r = p.ring();
    for _ in 0..trials {
        let e = random_vec(rng, p.n_rays(), 0, 6);
        let m = HomogeneousPolynomial::monomial(r, e.clone()).unwrap();
        let d = invariant_kdivisor(r, &m).unwrap();
        let class = divisor_class(p.deg(), &WeilDivisor::new(d.coeffs)).unwrap();
        assert!(p.class_group().equal(&class, m.degree()), "{e:?}");
        assert!(!d.non_invariant_part);
    }
}

fn random_positive_poly(rng: &mut impl Rng, r: &GradedMonoidAlgebra, pool: &[Vector]) -> HomogeneousPolynomial {
    let k = rng.gen_range(1..=pool.len().min(3));
    let terms = pool
        .choose_multiple(rng, k)
        .map(|e| (e.clone(), BigRational::from_integer(rng.gen_range(1i64..=3).into())))
        .collect();
    HomogeneousPolynomial::new(r, terms).unwrap()
}

/// Invariant prime divisors in the support of both summands stay in the
/// support of the sum, for random same-degree pairs on Cox rings.
pub fn check_support_lemma(rng: &mut impl Rng, trials: usize) {
    let fans = [p1(), p2(), p121(), f1(), p1xp1()];
    let mut done = 0;
    while done < trials {
        let f = &fans[done % fans.len()];
        let p = cox_presentation(f).unwrap();
        let r = p.ring();
        let weights: Vec<Vec<i64>> = (0..p.class_group().dim())
            .map(|i| p.degrees().iter().map(|d| i64::try_from(&d[i]).unwrap()).collect())
            .collect();
        let e = random_vec(rng, p.n_rays(), 0, 2);
        let degree: Vec<i64> = weights
            .iter()
            .map(|w| w.iter().zip(&e).map(|(a, b)| a * i64::try_from(b).unwrap()).sum())
            .collect();
        let pool = monomials_of_degree(&weights, &degree, 4);
        let g = random_positive_poly(rng, r, &pool);
        let mut h = random_positive_poly(rng, r, &pool);
        if rng.gen_bool(0.3) {
            // force cancellation of a shared term
            let (m, c) = g.terms().iter().next().unwrap();
            let mut t: BTreeMap<Vector, BigRational> = h.terms().clone();
            t.insert(m.clone(), -c.clone());
            h = HomogeneousPolynomial::new(r, t).unwrap();
        }
        let Some(s) = g.add(&h) else { continue };
        let supp = |x: &HomogeneousPolynomial| WeilDivisor::new(invariant_kdivisor(r, x).unwrap().coeffs).support();
        let (sg, sh, ss) = (supp(&g), supp(&h), supp(&s));
        for rho in sg.iter().filter(|x| sh.contains(x)) {
            assert!(ss.contains(rho));
        }
        done += 1;
    }
}

/// `reflexive_vector` of a monomial is its divisor, and `⊞` of two ideals'
/// vectors is the vector of their product, on random ideal pairs in `Cox(P²)`.
pub fn check_reflexive_consistency(rng: &mut impl Rng, trials: usize) {
    let p = cox_presentation(&p2()).unwrap();
    let r = p.ring();
    for _ in 0..trials {
        let e = random_vec(rng, 3, 0, 4);
        let f = HomogeneousPolynomial::monomial(r, e.clone()).unwrap();
        assert_eq!(reflexive_vector(&[e]).unwrap(), invariant_kdivisor(r, &f).unwrap().coeffs);

        let a: Vec<Vector> = (0..rng.gen_range(1..4)).map(|_| random_vec(rng, 3, 0, 4)).collect();
        let b: Vec<Vector> = (0..rng.gen_range(1..4)).map(|_| random_vec(rng, 3, 0, 4)).collect();
        let ab: Vec<Vector> = a.iter().flat_map(|x| b.iter().map(move |y| vector::add(x, y))).collect();
        assert_eq!(
            box_plus(&reflexive_vector(&a).unwrap(), &reflexive_vector(&b).unwrap()),
            reflexive_vector(&ab).unwrap()
        );
    }
}
