use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::dd::{double_description, Generators};
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Int, Vector};

/// Rational polyhedral cone in `Q^d` with both descriptions cached.
///
/// `C = cone(rays) + span(lineality) = {x : f.x >= 0 for facets f, e.x = 0 for equations e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<Vector>,
    rays: Vec<Vector>,
    lineality: Vec<Vector>,
    facets: Vec<Vector>,
    equations: Vec<Vector>,
}

fn check_width(dim: usize, vs: &[Vector]) -> Result<()> {
    match vs.iter().position(|v| v.len() != dim) {
        Some(i) => Err(Error::Dimension(alloc::format!(
            "vector {i} has length {} in ambient rank {dim}",
            vs[i].len()
        ))),
        None => Ok(()),
    }
}

impl Cone {
    /// Cone generated by the given vectors.
    pub fn new(dim: usize, generators: Vec<Vector>) -> Result<Self> {
        check_width(dim, &generators)?;
        let dual = double_description(dim, &generators);
        let mut h = dual.rays.clone();
        for e in &dual.lineality {
            h.push(e.clone());
            h.push(vector::neg(e));
        }
        let primal = double_description(dim, &h);
        Ok(Cone {
            dim,
            generators,
            rays: primal.rays,
            lineality: primal.lineality,
            facets: dual.rays,
            equations: dual.lineality,
        })
    }

    /// `{x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}`.
    pub fn from_inequalities(dim: usize, inequalities: &[Vector], equations: &[Vector]) -> Result<Self> {
        check_width(dim, inequalities)?;
        check_width(dim, equations)?;
        let mut h = inequalities.to_vec();
        for e in equations {
            h.push(e.clone());
            h.push(vector::neg(e));
        }
        let Generators { lineality, rays } = double_description(dim, &h);
        let mut generators = rays;
        for l in &lineality {
            generators.push(l.clone());
            generators.push(vector::neg(l));
        }
        Cone::new(dim, generators)
    }

    pub fn zero(dim: usize) -> Self {
        Cone::new(dim, Vec::new()).expect("empty generator list")
    }

    pub fn ambient_rank(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// Extreme rays modulo the lineality space.
    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vector] {
        &self.lineality
    }

    /// Inward facet normals, modulo the equations.
    pub fn facets(&self) -> &[Vector] {
        &self.facets
    }

    /// Basis of the orthogonal complement of the span.
    pub fn equations(&self) -> &[Vector] {
        &self.equations
    }

    pub fn dimension(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        debug_assert_eq!(x.len(), self.dim);
        self.equations.iter().all(|e| vector::dot(e, x).is_zero())
            && self.facets.iter().all(|f| !vector::dot(f, x).is_negative())
    }

    /// Whether `x` lies in the lineality space `C ∩ -C`.
    pub fn in_lineality(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| vector::dot(e, x).is_zero())
            && self.facets.iter().all(|f| vector::dot(f, x).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.iter().all(|l| self.in_lineality(l))
    }

    /// Equality as point sets.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.lineality == other.lineality
    }

    /// Rays and lineality with both signs; generates the cone.
    pub fn minimal_generators(&self) -> Vec<Vector> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(vector::neg(l));
        }
        g
    }

    /// Sum of the facet normals; positive on every point outside the
    /// lineality space.
    pub fn positive_functional(&self) -> Vector {
        self.facets
            .iter()
            .fold(vector::zero_vector(self.dim), |acc, f| vector::add(&acc, f))
    }

    /// A point of the relative interior.
    pub fn interior_point(&self) -> Vector {
        self.rays
            .iter()
            .fold(vector::zero_vector(self.dim), |acc, r| vector::add(&acc, r))
    }

    /// Indices of facets vanishing on every given point.
    pub fn tight_facets(&self, points: &[Vector]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| points.iter().all(|p| vector::dot(&self.facets[i], p).is_zero()))
            .collect()
    }

    /// Intersection with another cone in the same space.
    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.dim, &ineqs, &eqs)
    }

    /// Smallest face containing the given points of the cone, as a cone.
    pub fn face_containing(&self, points: &[Vector]) -> Cone {
        let tight = self.tight_facets(points);
        let mut eqs = self.equations.clone();
        eqs.extend(tight.iter().map(|&i| self.facets[i].clone()));
        Cone::from_inequalities(self.dim, &self.facets, &eqs).expect("consistent widths")
    }

    /// Whether `face` is a face of this cone.
    pub fn has_face(&self, face: &Cone) -> bool {
        if !self.contains_cone(face) {
            return false;
        }
        let gens = face.minimal_generators();
        let smallest = if gens.is_empty() {
            self.face_containing(&[vector::zero_vector(self.dim)])
        } else {
            self.face_containing(&gens)
        };
        smallest.same_set(face)
    }
}

/// `{u : u.v >= 0 for all v in C}`.
pub fn dual_cone(c: &Cone) -> Cone {
    let mut generators = c.facets.clone();
    for e in &c.equations {
        generators.push(e.clone());
        generators.push(vector::neg(e));
    }
    Cone {
        dim: c.dim,
        generators,
        rays: c.facets.clone(),
        lineality: c.equations.clone(),
        facets: c.rays.clone(),
        equations: c.lineality.clone(),
    }
}
