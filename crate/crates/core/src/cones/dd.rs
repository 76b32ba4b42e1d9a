//! Double description: from `{x : A x >= 0}` to extreme rays and lineality.

use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{integer_kernel, IntMatrix};

/// Generators of a polyhedral cone split into a lineality basis and extreme
/// rays modulo it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    /// Integer basis of the lineality space, in Hermite normal form.
    pub lineality: Vec<Vector>,
    /// One primitive representative per extreme ray, orthogonal to the
    /// lineality space, sorted.
    pub rays: Vec<Vector>,
}

fn tight_set(constraints: &[Vector], x: &[Int]) -> Vec<usize> {
    constraints
        .iter()
        .enumerate()
        .filter(|(_, a)| vector::dot(a, x).is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Extreme rays and lineality of `{x in Q^dim : a.x >= 0 for all a}`.
pub fn double_description(dim: usize, constraints: &[Vector]) -> Generators {
    let mut lines: Vec<Vector> = (0..dim).map(|i| vector::unit_vector(dim, i)).collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<Vector> = Vec::new();
    for a in constraints {
        debug_assert_eq!(a.len(), dim);
        if let Some(p) = lines.iter().position(|l| !vector::dot(a, l).is_zero()) {
            let mut l0 = lines.swap_remove(p);
            let mut al0 = vector::dot(a, &l0);
            if al0.is_negative() {
                l0 = vector::neg(&l0);
                al0 = -al0;
            }
            for l in lines.iter_mut() {
                let al = vector::dot(a, l);
                if !al.is_zero() {
                    *l = vector::primitive(&vector::combine(&al0, l, &-al, &l0));
                }
            }
            for r in rays.iter_mut() {
                let ar = vector::dot(a, r);
                if !ar.is_zero() {
                    *r = vector::primitive(&vector::combine(&al0, r, &-ar, &l0));
                }
            }
            rays.push(vector::primitive(&l0));
            processed.push(a.clone());
            continue;
        }
        processed.push(a.clone());
        let values: Vec<Int> = rays.iter().map(|r| vector::dot(a, r)).collect();
        let (mut keep, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
        for (r, v) in rays.iter().zip(&values) {
            if v.is_negative() {
                neg.push((r, v));
            } else {
                if v.is_positive() {
                    pos.push((r, v));
                }
                keep.push(r.clone());
            }
        }
        if neg.is_empty() {
            continue;
        }
        // rays of the new cone have tight constraints of rank `target`
        let target = dim - lines.len() - 1;
        let mut seen: Vec<Vec<usize>> = keep.iter().map(|r| tight_set(&processed, r)).collect();
        for (p, vp) in &pos {
            for (n, vn) in &neg {
                let c = vector::primitive(&vector::combine(&-*vn, p, vp, n));
                let tight = tight_set(&processed, &c);
                if seen.contains(&tight) {
                    continue;
                }
                let rows: Vec<Vector> = tight.iter().map(|&i| processed[i].clone()).collect();
                if vector::rank(&rows) == target {
                    seen.push(tight);
                    keep.push(c);
                }
            }
        }
        rays = keep;
    }
    let lineality = if lines.is_empty() {
        Vec::new()
    } else {
        let rows = if processed.is_empty() {
            IntMatrix::zeros(0, dim)
        } else {
            IntMatrix::from_rows(&processed, dim).expect("constraint width")
        };
        integer_kernel(&rows)
    };
    let mut rays: Vec<Vector> = rays
        .iter()
        .map(|r| project_off(r, &lineality))
        .collect();
    rays.sort();
    rays.dedup();
    Generators { lineality, rays }
}

/// Primitive integer multiple of the orthogonal projection of `r` onto the
/// complement of `span(basis)`.
pub fn project_off(r: &[Int], basis: &[Vector]) -> Vector {
    if basis.is_empty() {
        return vector::primitive(r);
    }
    let k = basis.len();
    // Gram system G c = B r
    let gram: Vec<Vector> = (0..k)
        .map(|i| (0..k).map(|j| vector::dot(&basis[i], &basis[j])).collect())
        .collect();
    let rhs: Vector = basis.iter().map(|b| vector::dot(b, r)).collect();
    let c = vector::solve_independent(&gram, &rhs).expect("independent basis");
    let mut out: Vec<BigRational> = r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    for (ci, b) in c.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o -= ci * BigRational::from_integer(x.clone());
        }
    }
    vector::primitive(&clear_denominators(&out))
}

/// Smallest positive integer multiple of a rational vector.
pub fn clear_denominators(v: &[BigRational]) -> Vector {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}
