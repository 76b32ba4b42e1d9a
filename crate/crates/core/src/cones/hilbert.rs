//! Hilbert bases of pointed cones and generators of `C ∩ Z^d` in general.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{integer_kernel, smith_normal_form, IntMatrix};

/// Subsets of `rays` forming a triangulation of the full-dimensional
/// pointed cone they generate in `Q^k` (pulling from the first ray).
fn triangulate(k: usize, rays: &[Vector]) -> Vec<Vec<Vector>> {
    if rays.len() <= k {
        return alloc::vec![rays.to_vec()];
    }
    let cone = Cone::new(k, rays.to_vec()).expect("consistent widths");
    let apex = &rays[0];
    let mut out = Vec::new();
    for f in cone.facets() {
        if vector::dot(f, apex).is_zero() {
            continue;
        }
        let facet_rays: Vec<Vector> = rays
            .iter()
            .filter(|r| vector::dot(f, r).is_zero())
            .cloned()
            .collect();
        for simplex in triangulate_face(k, &facet_rays) {
            let mut s = alloc::vec![apex.clone()];
            s.extend(simplex);
            out.push(s);
        }
    }
    out
}

/// Triangulation of a lower-dimensional pointed cone given by its rays.
fn triangulate_face(k: usize, rays: &[Vector]) -> Vec<Vec<Vector>> {
    let d = vector::rank(rays);
    if rays.len() <= d {
        return alloc::vec![rays.to_vec()];
    }
    // work inside the span: coordinates w.r.t. a lattice basis of it
    let basis = span_basis(k, rays);
    let local: Vec<Vector> = rays.iter().map(|r| coordinates(&basis, r)).collect();
    triangulate(d, &local)
        .into_iter()
        .map(|s| s.iter().map(|y| from_coordinates(&basis, y, k)).collect())
        .collect()
}

/// Lattice basis (rows) of `span(vs) ∩ Z^k`.
fn span_basis(k: usize, vs: &[Vector]) -> Vec<Vector> {
    let eqs = integer_kernel(&IntMatrix::from_rows(vs, k).expect("width"));
    if eqs.is_empty() {
        return (0..k).map(|i| vector::unit_vector(k, i)).collect();
    }
    integer_kernel(&IntMatrix::from_rows(&eqs, k).expect("width"))
}

/// Integer coordinates of `x` in the lattice basis `basis`.
fn coordinates(basis: &[Vector], x: &[Int]) -> Vector {
    let c = vector::solve_independent(basis, x).expect("point in the span");
    c.iter()
        .map(|q| {
            debug_assert!(q.is_integer());
            q.to_integer()
        })
        .collect()
}

fn from_coordinates(basis: &[Vector], y: &[Int], k: usize) -> Vector {
    basis
        .iter()
        .zip(y)
        .fold(vector::zero_vector(k), |acc, (b, c)| vector::add(&acc, &vector::scale(b, c)))
}

/// Non-zero lattice points of the half-open parallelepiped spanned by `k`
/// independent vectors of `Z^k`.
fn parallelepiped_points(k: usize, rays: &[Vector]) -> Vec<Vector> {
    let r = IntMatrix::from_columns(rays, k).expect("width");
    let s = smith_normal_form(&r);
    let d = s.diagonal();
    let mut out = Vec::new();
    let mut y = vector::zero_vector(k);
    loop {
        // x = U^{-1} y, lambda = V D^{-1} y
        let x = s.u_inv.mul_vec(&y);
        let scaled: Vec<BigRational> = y
            .iter()
            .zip(&d)
            .map(|(yi, di)| BigRational::new(yi.clone(), di.clone()))
            .collect();
        let mut point = x;
        for (j, ray) in rays.iter().enumerate() {
            let lam: BigRational = (0..k)
                .map(|i| BigRational::from_integer(s.v[(j, i)].clone()) * &scaled[i])
                .sum();
            let fl = lam.floor().to_integer();
            if !fl.is_zero() {
                point = vector::sub(&point, &vector::scale(ray, &fl));
            }
        }
        if !vector::is_zero(&point) {
            out.push(point);
        }
        // odometer over prod [0, d_i)
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            y[i] += Int::one();
            if y[i] < d[i] {
                break;
            }
            y[i] = Int::zero();
            i += 1;
        }
    }
}

/// Hilbert basis of a full-dimensional pointed cone in `Z^k` given by its
/// rays.
fn hilbert_full(k: usize, rays: &[Vector]) -> Vec<Vector> {
    let cone = Cone::new(k, rays.to_vec()).expect("width");
    let mut candidates: Vec<Vector> = rays.to_vec();
    for simplex in triangulate(k, rays) {
        candidates.extend(parallelepiped_points(k, &simplex));
    }
    candidates.sort();
    candidates.dedup();
    let mut out: Vec<Vector> = candidates
        .iter()
        .filter(|x| {
            !candidates
                .iter()
                .any(|h| h != *x && cone.contains(&vector::sub(x, h)))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Unique minimal generating set of the monoid `C ∩ Z^d`.
pub fn hilbert_basis(c: &Cone) -> Result<Vec<Vector>> {
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    if c.rays().is_empty() {
        return Ok(Vec::new());
    }
    let d = c.ambient_rank();
    let basis = if c.equations().is_empty() {
        (0..d).map(|i| vector::unit_vector(d, i)).collect()
    } else {
        integer_kernel(&IntMatrix::from_rows(c.equations(), d).expect("width"))
    };
    let k = basis.len();
    let local: Vec<Vector> = c.rays().iter().map(|r| coordinates(&basis, r)).collect();
    let mut out: Vec<Vector> = hilbert_full(k, &local)
        .iter()
        .map(|y| from_coordinates(&basis, y, d))
        .collect();
    out.sort();
    Ok(out)
}

/// Monoid generators of `{x in Z^dim : a.x >= 0, e.x = 0}`: a Hilbert basis
/// of the pointed part followed by a lattice basis of the lineality space
/// with both signs.
pub fn lattice_cone_generators(
    dim: usize,
    inequalities: &[Vector],
    equations: &[Vector],
) -> Result<Vec<Vector>> {
    let c = Cone::from_inequalities(dim, inequalities, equations)?;
    lattice_points_generators(&c)
}

/// Monoid generators of `C ∩ Z^d` for an arbitrary cone.
pub fn lattice_points_generators(c: &Cone) -> Result<Vec<Vector>> {
    if c.is_pointed() {
        return hilbert_basis(c);
    }
    let dim = c.ambient_rank();
    let l = c.lineality();
    let ell = l.len();
    // U x puts the saturated lattice L ∩ Z^d onto the first `ell` coordinates
    let s = smith_normal_form(&IntMatrix::from_columns(l, dim)?);
    debug_assert!(s.invariant_factors().iter().all(One::is_one));
    let project = |x: &Vector| s.u.mul_vec(x)[ell..].to_vec();
    let quotient_rays: Vec<Vector> = c.rays().iter().map(project).collect();
    let quotient = Cone::new(dim - ell, quotient_rays)?;
    let mut out: Vec<Vector> = hilbert_basis(&quotient)?
        .into_iter()
        .map(|h| {
            let mut y = vector::zero_vector(ell);
            y.extend(h);
            s.u_inv.mul_vec(&y)
        })
        .collect();
    out.sort();
    for b in l {
        out.push(b.clone());
        out.push(vector::neg(b));
    }
    Ok(out)
}
