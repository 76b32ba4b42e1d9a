use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cones::{dual_cone, face_lattice, lattice_cone_generators, Cone, Fan};
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Vector};
use crate::lattice::{cokernel, subgroup_generates, FgAbelianGroup, GroupHom, IntMatrix};
use crate::poset::Poset;

/// Orbit of `U_σ` with its three labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitNode {
    /// Rays of `σ` spanning the face `τ`.
    pub cone_face: Vec<usize>,
    /// Generators of `S = σ^∨ ∩ M` in the dual face `τ^* = σ^∨ ∩ τ^⊥`.
    pub dual_face: Vec<usize>,
    /// Generators of `p_τ = <χ^w : w ∈ S \ τ^*>`.
    pub ideal: Vec<Vector>,
    /// Generators of `deg_M(R^+ \ p_τ) = τ^* ∩ M`.
    pub m_degrees: Vec<Vector>,
    /// `Cl(U_σ)`-degrees of the Cox variables outside `p_τ`.
    pub cl_degrees: Vec<Vector>,
    /// Whether `S \ τ^*` was confirmed to be a prime ideal on generators.
    pub prime: bool,
}

/// Orbits of the affine toric variety of a pointed cone, ordered by
/// inclusion of their cones (reverse inclusion of orbit closures).
pub fn orbit_face_lattice(sigma: &Cone) -> Result<Poset<OrbitNode>> {
    if !sigma.is_pointed() {
        return Err(Error::NotPointed);
    }
    let n = sigma.ambient_rank();
    let rays = sigma.rays().to_vec();
    let s = lattice_cone_generators(n, &rays, &[])?;
    let (_, deg) = if rays.is_empty() {
        (FgAbelianGroup::trivial(), GroupHom::zero(FgAbelianGroup::free(0), FgAbelianGroup::trivial()))
    } else {
        let rm = GroupHom::new(
            FgAbelianGroup::free(n),
            FgAbelianGroup::free(rays.len()),
            IntMatrix::from_rows(&rays, n)?,
        )?;
        cokernel(&rm)
    };
    let ray_cone = Cone::new(n, rays.clone())?;
    let faces = face_lattice(&ray_cone);
    let mut nodes = Vec::with_capacity(faces.len());
    for f in faces.elements() {
        let in_dual = |g: &Vector| f.generators.iter().all(|&i| vector::dot(g, &rays[i]).is_zero());
        let dual_face: Vec<usize> = (0..s.len()).filter(|&i| in_dual(&s[i])).collect();
        let ideal: Vec<Vector> = s.iter().filter(|g| !in_dual(g)).cloned().collect();
        let m_degrees: Vec<Vector> = dual_face.iter().map(|&i| s[i].clone()).collect();
        let cl_degrees: Vec<Vector> = (0..rays.len())
            .filter(|i| !f.generators.contains(i))
            .map(|i| deg.apply(&vector::unit_vector(rays.len(), i)))
            .collect();
        // a + b ∈ τ^* forces a, b ∈ τ^*
        let prime = s.iter().all(|a| {
            s.iter()
                .all(|b| !in_dual(&vector::add(a, b)) || (in_dual(a) && in_dual(b)))
        });
        nodes.push(OrbitNode {
            cone_face: f.generators.clone(),
            dual_face,
            ideal,
            m_degrees,
            cl_degrees,
            prime,
        });
    }
    Ok(Poset::new(nodes, |a, b| a.cone_face.iter().all(|i| b.cone_face.contains(i))))
}

/// Points of the toric graded scheme of a fan, one per cone.
#[derive(Clone, Debug)]
pub struct F1Points {
    /// Cones of the fan; point `i` is `p_{cones[i]}`.
    pub cones: Vec<Vec<usize>>,
    /// `i <= j` iff `p_i` lies in the closure of `p_j`.
    pub specialization: Poset<usize>,
    /// Per maximal cone: degrees of `k[σ^∨ ∩ M]` generate `M`.
    pub effective: Vec<bool>,
    /// Per point: the dual of the stalk's degree cone is the point's cone.
    pub inverse_ok: Vec<bool>,
}

pub fn toric_f1_points(f: &Fan) -> Result<F1Points> {
    let report = crate::cones::validate_fan(f);
    if !report.is_empty() {
        return Err(Error::InvalidFan(report.join("; ")));
    }
    let n = f.lattice_rank();
    let cones = f.cones();
    let charts: Vec<Vec<Vector>> = f
        .max_cones()
        .iter()
        .map(|s| {
            let rays: Vec<Vector> = s.iter().map(|&i| f.rays()[i].clone()).collect();
            lattice_cone_generators(n, &rays, &[])
        })
        .collect::<Result<_>>()?;
    let zn = FgAbelianGroup::free(n);
    let effective = charts
        .iter()
        .map(|s| subgroup_generates(s, &zn).map(|x| x.0))
        .collect::<Result<Vec<bool>>>()?;
    let chart_of = |tau: &[usize]| -> Option<usize> {
        f.max_cones().iter().position(|s| tau.iter().all(|i| s.contains(i)))
    };
    // generators of the chart monoid outside the dual face of tau
    let outside = |c: usize, tau: &[usize]| -> Vec<usize> {
        (0..charts[c].len())
            .filter(|&g| tau.iter().any(|&i| !vector::dot(&charts[c][g], &f.rays()[i]).is_zero()))
            .collect()
    };
    let mut inverse_ok = Vec::with_capacity(cones.len());
    for tau in &cones {
        let c = chart_of(tau).ok_or_else(|| Error::InvalidFan(format!("cone {tau:?} lies in no maximal cone")))?;
        let out = outside(c, tau);
        let mut gens = charts[c].clone();
        for (g, v) in charts[c].iter().enumerate() {
            if !out.contains(&g) {
                gens.push(vector::neg(v));
            }
        }
        let stalk_cone = Cone::new(n, gens)?;
        inverse_ok.push(dual_cone(&stalk_cone).same_set(&f.cone_of(tau)));
    }
    let idx: Vec<usize> = (0..cones.len()).collect();
    let specialization = Poset::new(idx, |&i, &j| {
        let mut both = cones[i].clone();
        both.extend_from_slice(&cones[j]);
        match chart_of(&both) {
            // p_i ∈ closure(p_j) iff I_j ⊆ I_i
            Some(c) => {
                let oi = outside(c, &cones[i]);
                outside(c, &cones[j]).iter().all(|g| oi.contains(g))
            }
            None => false,
        }
    });
    Ok(F1Points {
        cones,
        specialization,
        effective,
        inverse_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::ivec;
    use alloc::vec;

    #[test]
    fn a1_orbits() {
        let c = Cone::new(2, vec![ivec(&[1, 0]), ivec(&[1, 2])]).unwrap();
        let o = orbit_face_lattice(&c).unwrap();
        assert_eq!(o.len(), 4);
        assert!(o.elements().iter().all(|n| n.prime));
        let bottom = o.position(|n| n.cone_face.is_empty()).unwrap();
        assert_eq!(o.get(bottom).cl_degrees, vec![ivec(&[1]), ivec(&[1])]);
        assert!(o.get(bottom).ideal.is_empty());
        assert_eq!(orbit_face_lattice(&Cone::zero(2)).unwrap().len(), 1);
    }

    #[test]
    fn line_points() {
        let f = Fan::new(1, vec![ivec(&[1]), ivec(&[-1])], vec![vec![0], vec![1]]);
        let pts = toric_f1_points(&f).unwrap();
        assert_eq!(pts.cones.len(), 3);
        assert_eq!(pts.specialization.maximal(), vec![0]);
        assert_eq!(pts.specialization.minimal().len(), 2);
        assert!(pts.inverse_ok.iter().all(|&b| b));
        assert!(pts.effective.iter().all(|&b| b));
    }
}
