use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::cone::Cone;
use super::face::face_lattice;
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Vector};
use crate::lattice::IntMatrix;

/// Fan in `N = Z^n` given by primitive rays and maximal cones (ray index
/// sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice_rank: usize,
    rays: Vec<Vector>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Unchecked constructor; see [`validate_fan`].
    pub fn new(lattice_rank: usize, rays: Vec<Vector>, max_cones: Vec<Vec<usize>>) -> Self {
        Fan {
            lattice_rank,
            rays,
            max_cones,
        }
    }

    /// Constructor that rejects fans with validation violations.
    pub fn validated(lattice_rank: usize, rays: Vec<Vector>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        let f = Fan::new(lattice_rank, rays, max_cones);
        let report = validate_fan(&f);
        if report.is_empty() {
            Ok(f)
        } else {
            Err(Error::InvalidFan(report.join("; ")))
        }
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// `m ↦ (<m, v_ρ>)_ρ` as a `#rays x n` matrix.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rays, self.lattice_rank).expect("rays of the lattice rank")
    }

    /// Cone spanned by the given rays.
    pub fn cone_of(&self, rays: &[usize]) -> Cone {
        let gens = rays.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::new(self.lattice_rank, gens).expect("rays of the lattice rank")
    }

    /// All cones of the fan as sorted ray-index sets, ordered by size then
    /// lexicographically. The zero cone is the empty set.
    pub fn cones(&self) -> Vec<Vec<usize>> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(Vec::new());
        for sigma in &self.max_cones {
            let c = self.cone_of(sigma);
            for face in face_lattice(&c).elements() {
                let mut s: Vec<usize> = face.generators.iter().map(|&i| sigma[i]).collect();
                s.sort_unstable();
                all.insert(s);
            }
        }
        let mut out: Vec<Vec<usize>> = all.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Whether the rays span `Q^n`.
    pub fn rays_span(&self) -> bool {
        vector::rank(&self.rays) == self.lattice_rank
    }

    /// Whether the support is all of `Q^n`.
    pub fn is_complete(&self) -> bool {
        // complete iff every facet of a maximal cone is shared by another
        // full-dimensional maximal cone
        let n = self.lattice_rank;
        let full: Vec<&Vec<usize>> = self
            .max_cones
            .iter()
            .filter(|s| self.cone_of(s).dimension() == n)
            .collect();
        if full.is_empty() {
            return n == 0;
        }
        full.iter().all(|s| {
            let c = self.cone_of(s);
            c.facets().iter().all(|f| {
                let on: Vec<usize> = s
                    .iter()
                    .copied()
                    .filter(|&i| vector::dot(f, &self.rays[i]).is_zero())
                    .collect();
                full.iter()
                    .filter(|t| !core::ptr::eq(**t, *s))
                    .any(|t| on.iter().all(|i| t.contains(i)))
            })
        })
    }
}

/// Violations of the fan axioms; empty iff the fan is valid.
pub fn validate_fan(f: &Fan) -> Vec<String> {
    let n = f.lattice_rank;
    let mut out = Vec::new();
    for (i, r) in f.rays.iter().enumerate() {
        if r.len() != n {
            out.push(format!("ray {i} has length {} instead of {n}", r.len()));
        } else if vector::is_zero(r) {
            out.push(format!("ray {i} is zero"));
        } else if !vector::is_primitive(r) {
            out.push(format!("ray {i} not primitive"));
        }
    }
    for i in 0..f.rays.len() {
        for j in i + 1..f.rays.len() {
            if f.rays[i] == f.rays[j] {
                out.push(format!("rays {i} and {j} coincide"));
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mut ok_cones = Vec::new();
    for (c, sigma) in f.max_cones.iter().enumerate() {
        if let Some(&i) = sigma.iter().find(|&&i| i >= f.rays.len()) {
            out.push(format!("cone {c} references unknown ray {i}"));
            continue;
        }
        let cone = f.cone_of(sigma);
        if !cone.is_pointed() {
            out.push(format!("cone {c} not pointed"));
            continue;
        }
        let mut extreme = true;
        for &i in sigma {
            if !cone.rays().contains(&f.rays[i]) {
                out.push(format!("cone {c}: ray {i} is not an extreme ray"));
                extreme = false;
            }
        }
        if extreme {
            ok_cones.push((c, cone));
        }
    }
    for (a, (ia, ca)) in ok_cones.iter().enumerate() {
        for (ib, cb) in ok_cones.iter().skip(a + 1) {
            let meet = ca.intersection(cb).expect("same ambient rank");
            if !ca.has_face(&meet) || !cb.has_face(&meet) {
                out.push(format!("cones {ia} and {ib} do not meet in a common face"));
            }
        }
    }
    for i in 0..f.rays.len() {
        if !f.max_cones.iter().any(|s| s.contains(&i)) {
            out.push(format!("ray {i} lies in no cone"));
        }
    }
    out
}
