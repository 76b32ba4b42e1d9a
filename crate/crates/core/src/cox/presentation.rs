use alloc::vec::Vec;

use crate::cones::{validate_fan, AffineMonoid, Fan};
use crate::divisors::ray_map;
use crate::error::{Error, Result};
use crate::graded::GradedMonoidAlgebra;
use crate::lattice::vector::{self, Vector};
use crate::lattice::{cokernel, FgAbelianGroup, GroupHom};

/// Cox ring `k[x_ρ : ρ ∈ Σ(1)]` of a fan, graded by `Cl(X)`.
#[derive(Clone, Debug)]
pub struct CoxPresentation {
    fan: Fan,
    cl: FgAbelianGroup,
    deg: GroupHom,
    ray_map: GroupHom,
    ring: GradedMonoidAlgebra,
    fine_ring: GradedMonoidAlgebra,
}

impl CoxPresentation {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn class_group(&self) -> &FgAbelianGroup {
        &self.cl
    }

    /// `deg : Z^{Σ(1)} -> Cl(X)`.
    pub fn deg(&self) -> &GroupHom {
        &self.deg
    }

    /// `M -> Z^{Σ(1)}`, `m ↦ div(χ^m)`.
    pub fn ray_map(&self) -> &GroupHom {
        &self.ray_map
    }

    /// The `Cl(X)`-graded Cox ring.
    pub fn ring(&self) -> &GradedMonoidAlgebra {
        &self.ring
    }

    /// The same polynomial ring graded by `Z^{Σ(1)}`.
    pub fn fine_ring(&self) -> &GradedMonoidAlgebra {
        &self.fine_ring
    }

    pub fn n_rays(&self) -> usize {
        self.fan.rays().len()
    }

    /// Degrees of the variables.
    pub fn degrees(&self) -> Vec<Vector> {
        self.deg.images()
    }

    /// `q^* χ^m = Π x_ρ^{<m, v_ρ>}`.
    pub fn pullback(&self, m: &[crate::lattice::Int]) -> Vector {
        self.ray_map.apply(m)
    }
}

/// Cox presentation of a fan whose rays span `N_Q`.
pub fn cox_presentation(f: &Fan) -> Result<CoxPresentation> {
    let report = validate_fan(f);
    if !report.is_empty() {
        return Err(Error::InvalidFan(report.join("; ")));
    }
    if !f.rays_span() {
        return Err(Error::TorusFactor);
    }
    let rm = ray_map(f);
    let (cl, deg) = cokernel(&rm);
    debug_assert!(deg.is_surjective());
    let n = f.rays().len();
    let ring = GradedMonoidAlgebra::new(AffineMonoid::free(n), deg.clone(), Vec::new())?;
    let fine_ring = GradedMonoidAlgebra::finely_graded(AffineMonoid::free(n));
    Ok(CoxPresentation {
        fan: f.clone(),
        cl,
        deg,
        ray_map: rm,
        ring,
        fine_ring,
    })
}

/// Columns of the ray map: a basis of `ker(deg)` identifying it with `M`.
pub fn lattice_basis(p: &CoxPresentation) -> Vec<Vector> {
    let n = p.fan.lattice_rank();
    (0..n)
        .map(|i| p.ray_map.apply(&vector::unit_vector(n, i)))
        .collect()
}
