use alloc::format;
use alloc::vec::Vec;

use super::presentation::{cox_presentation, lattice_basis, CoxPresentation};
use super::verify::verify_theorem_d;
use crate::cones::{dual_cone, validate_fan, Cone, Fan};
use crate::error::{Error, Result};
use crate::graded::{degree_zero_monoid, GradedMonoidAlgebra};
use crate::lattice::vector::{self, Vector};
use crate::lattice::{kernel, subgroup_generates};

fn is_polynomial_ring(r: &GradedMonoidAlgebra) -> bool {
    let d = r.ambient_rank();
    let g = r.monoid().generators();
    g.len() == d && (0..d).all(|i| g[i] == vector::unit_vector(d, i))
}

/// Variables `f_1, ..., f_s` such that the degrees of all `f_j`, `j != k`,
/// generate `K` for every `k`. Only variables are tried.
pub fn find_prime_system(r: &GradedMonoidAlgebra) -> Result<Vec<usize>> {
    if !is_polynomial_ring(r) {
        return Err(Error::Precondition("prime systems are searched among variables of a polynomial ring".into()));
    }
    let rep = verify_theorem_d(r, None);
    if !rep.all_pass() {
        return Err(Error::Precondition(format!("conditions fail: {}", rep.failed_ids().join(", "))));
    }
    let system: Vec<usize> = (0..r.ambient_rank()).filter(|i| !r.inverted().contains(i)).collect();
    let k = r.grading_group();
    let d = r.ambient_rank();
    for &j in &system {
        let mut degs: Vec<Vector> = system
            .iter()
            .filter(|&&i| i != j)
            .map(|&i| r.degree(&vector::unit_vector(d, i)))
            .collect();
        degs.extend(r.inverted().iter().map(|&i| r.degree(&vector::unit_vector(d, i))));
        if !subgroup_generates(&degs, k)?.0 {
            return Err(Error::Precondition(format!(
                "monomial primes do not suffice: degrees without x_{j} do not generate {k}"
            )));
        }
    }
    Ok(system)
}

/// Inverted variables of the charts `R_j`: all system members but `f_j`.
pub fn charts_from_prime_system(system: &[usize]) -> Vec<Vec<usize>> {
    system
        .iter()
        .map(|&j| system.iter().copied().filter(|&i| i != j).collect())
        .collect()
}

/// Inverted variables of the charts over the maximal cones.
pub fn canonical_charts(p: &CoxPresentation) -> Vec<Vec<usize>> {
    p.fan()
        .max_cones()
        .iter()
        .map(|s| (0..p.n_rays()).filter(|i| !s.contains(i)).collect())
        .collect()
}

/// Fan glued from the charts `Spec (R_j)_0`, with `M = ker(deg)` expressed
/// in `lattice_basis` (default: its Hermite basis).
pub fn reconstruct_base(
    r: &GradedMonoidAlgebra,
    charts: &[Vec<usize>],
    lattice_basis: Option<&[Vector]>,
) -> Result<Fan> {
    let basis: Vec<Vector> = match lattice_basis {
        Some(b) => b.to_vec(),
        None => kernel(r.grading()),
    };
    let n = basis.len();
    let mut rays: Vec<Vector> = Vec::new();
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for inverted in charts {
        let chart = r.localize(inverted)?;
        let m0 = degree_zero_monoid(&chart)?;
        let coords: Vec<Vector> = m0
            .generators()
            .iter()
            .map(|g| {
                vector::solve_independent(&basis, g)
                    .filter(|c| c.iter().all(|q| q.is_integer()))
                    .map(|c| c.iter().map(|q| q.to_integer()).collect())
                    .ok_or_else(|| Error::Precondition(format!("{g:?} is outside the given lattice")))
            })
            .collect::<Result<_>>()?;
        let sigma = dual_cone(&Cone::new(n, coords)?);
        if !sigma.is_pointed() {
            return Err(Error::Gluing(format!("chart inverting {inverted:?} gives a non-pointed cone")));
        }
        let mut idx = Vec::new();
        for v in sigma.rays() {
            let i = match rays.iter().position(|w| w == v) {
                Some(i) => i,
                None => {
                    rays.push(v.clone());
                    rays.len() - 1
                }
            };
            idx.push(i);
        }
        idx.sort_unstable();
        if !cones.contains(&idx) {
            cones.push(idx);
        }
    }
    let cone_of = |s: &Vec<usize>| Cone::new(n, s.iter().map(|&i| rays[i].clone()).collect()).expect("widths");
    let maximal: Vec<Vec<usize>> = cones
        .iter()
        .filter(|s| {
            !cones.iter().any(|t| {
                t != *s && s.iter().all(|i| t.contains(i)) && cone_of(t).has_face(&cone_of(s))
            })
        })
        .cloned()
        .collect();
    let fan = Fan::new(n, rays, maximal);
    let report = validate_fan(&fan);
    if !report.is_empty() {
        return Err(Error::Gluing(report.join("; ")));
    }
    Ok(fan)
}

/// The fan recovered from the prime system's own charts.
pub fn reconstruct_from_prime_system(r: &GradedMonoidAlgebra, system: &[usize]) -> Result<Fan> {
    reconstruct_base(r, &charts_from_prime_system(system), None)
}

/// Equality of fans up to renumbering rays and reordering cones.
pub fn same_fan_up_to_permutation(a: &Fan, b: &Fan) -> bool {
    if a.lattice_rank() != b.lattice_rank() || a.rays().len() != b.rays().len() {
        return false;
    }
    let Some(perm) = a
        .rays()
        .iter()
        .map(|v| b.rays().iter().position(|w| w == v))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let norm = |cs: Vec<Vec<usize>>| {
        let mut cs: Vec<Vec<usize>> = cs
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cs.sort();
        cs.dedup();
        cs
    };
    let mapped = norm(
        a.max_cones()
            .iter()
            .map(|c| c.iter().map(|&i| perm[i]).collect())
            .collect(),
    );
    mapped == norm(b.max_cones().to_vec())
}

/// Outcome of `F -> Cox(F) -> reconstructed fan`.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub reconstructed: Fan,
    pub matches: bool,
}

pub fn round_trip(f: &Fan) -> Result<RoundTrip> {
    let p = cox_presentation(f)?;
    let basis = lattice_basis(&p);
    let reconstructed = reconstruct_base(p.ring(), &canonical_charts(&p), Some(&basis))?;
    let matches = same_fan_up_to_permutation(&reconstructed, f);
    Ok(RoundTrip {
        reconstructed,
        matches,
    })
}
