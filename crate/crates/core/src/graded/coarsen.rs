//! Coarsening a grading along `ψ : K' -> K` by dividing out
//! `I_χ = <1 - χ(w') : w' ∈ ker ψ>`.

use alloc::format;
use alloc::vec::Vec;

use super::algebra::GradedMonoidAlgebra;
use crate::cones::AffineMonoid;
use crate::error::{Error, Result};
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{cokernel, kernel, same_subgroup, solve, FgAbelianGroup, GroupHom, IntMatrix};

/// `ψ` together with a kernel character `χ`: for each generator `w'` of
/// `ker ψ` the exponent of a homogeneous unit of degree `w'`.
#[derive(Clone, Debug)]
pub struct CoarseningData {
    psi: GroupHom,
    kernel_basis: Vec<Vector>,
    chi: Vec<Vector>,
}

impl CoarseningData {
    pub fn new(
        r: &GradedMonoidAlgebra,
        psi: GroupHom,
        kernel_basis: Vec<Vector>,
        chi: Vec<Vector>,
    ) -> Result<Self> {
        if psi.source() != r.grading_group() {
            return Err(Error::Coarsening(format!(
                "ψ starts at {}, the grading group is {}",
                psi.source(),
                r.grading_group()
            )));
        }
        if !psi.is_surjective() {
            return Err(Error::Coarsening("ψ is not surjective".into()));
        }
        if kernel_basis.len() != chi.len() {
            return Err(Error::Coarsening("one unit per kernel generator expected".into()));
        }
        if !same_subgroup(&kernel_basis, &kernel(&psi), psi.source())? {
            return Err(Error::Coarsening("kernel generators do not generate ker ψ".into()));
        }
        let units = r.unit_lattice();
        for (w, u) in kernel_basis.iter().zip(&chi) {
            if u.len() != r.ambient_rank() || !in_lattice(&units, u) {
                return Err(Error::Coarsening(format!("χ({w:?}) = χ^{u:?} is not a unit")));
            }
            if !psi.source().equal(&r.degree(u), w) {
                return Err(Error::Coarsening(format!(
                    "χ({w:?}) = χ^{u:?} has degree {:?}",
                    r.degree(u)
                )));
            }
        }
        Ok(CoarseningData {
            psi,
            kernel_basis,
            chi,
        })
    }

    /// Chooses `χ` among the monomial units of `r`; fails when some kernel
    /// degree carries no unit.
    pub fn from_units(r: &GradedMonoidAlgebra, psi: GroupHom) -> Result<Self> {
        let kernel_basis = kernel(&psi);
        let units = r.unit_lattice();
        let d = r.ambient_rank();
        let unit_degrees: Vec<Vector> = units.iter().map(|u| r.degree(u)).collect();
        let h = GroupHom::from_images(r.grading_group().clone(), &unit_degrees)?;
        let mut chi = Vec::with_capacity(kernel_basis.len());
        for w in &kernel_basis {
            let Some(c) = solve(&h, w) else {
                return Err(Error::Coarsening(format!("no homogeneous unit of degree {w:?}")));
            };
            chi.push(
                units
                    .iter()
                    .zip(&c)
                    .fold(vector::zero_vector(d), |acc, (u, x)| vector::add(&acc, &vector::scale(u, x))),
            );
        }
        CoarseningData::new(r, psi, kernel_basis, chi)
    }

    pub fn psi(&self) -> &GroupHom {
        &self.psi
    }

    pub fn kernel_basis(&self) -> &[Vector] {
        &self.kernel_basis
    }

    pub fn chi(&self) -> &[Vector] {
        &self.chi
    }
}

fn in_lattice(basis: &[Vector], x: &[Int]) -> bool {
    if basis.is_empty() {
        return vector::is_zero(x);
    }
    let h = GroupHom::from_images(FgAbelianGroup::free(x.len()), basis).expect("widths");
    solve(&h, x).is_some()
}

/// `R'/I_χ`: the monoid algebra of the image of `M'` in `G = Z^d / U_χ`,
/// graded by `K` through `ψ`.
#[derive(Clone, Debug)]
pub struct CoarseAlgebra {
    fine: GradedMonoidAlgebra,
    group: FgAbelianGroup,
    projection: GroupHom,
    grading: GroupHom,
    generators: Vec<Vector>,
}

impl CoarseAlgebra {
    pub fn fine(&self) -> &GradedMonoidAlgebra {
        &self.fine
    }

    /// The group `G` of coarse monomial exponents.
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    /// `Z^d -> G`; its kernel is `U_χ`.
    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    /// `G -> K`.
    pub fn grading(&self) -> &GroupHom {
        &self.grading
    }

    /// Images of the effective generators of `R'`.
    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn class_of(&self, fine_exponent: &[Int]) -> Vector {
        self.projection.apply(fine_exponent)
    }

    pub fn degree(&self, class: &[Int]) -> Vector {
        self.grading.apply(class)
    }

    /// A fine exponent over the class, lying in `M'` whenever the class lies
    /// in the coarse monoid.
    pub fn lift(&self, class: &[Int]) -> Option<Vector> {
        solve(&self.projection, class)
    }

    /// Whether `χ^g` is a monomial of the coarse algebra.
    pub fn contains(&self, class: &[Int]) -> bool {
        // fibres of the projection are U_χ-cosets and U_χ consists of units
        self.lift(class)
            .is_some_and(|x| self.fine.effective_monoid().contains(&x))
    }

    pub fn divides(&self, a: &[Int], b: &[Int]) -> bool {
        self.contains(&self.group.sub(b, a))
    }

    /// The coarse algebra as a monoid algebra when `G` is free.
    pub fn as_monoid_algebra(&self) -> Result<Option<GradedMonoidAlgebra>> {
        if !self.group.is_free() {
            return Ok(None);
        }
        let n = self.group.free_rank();
        let m = AffineMonoid::new(n, self.generators.clone())?;
        let g = GroupHom::new(FgAbelianGroup::free(n), self.grading.target().clone(), self.grading.matrix().clone())?;
        Ok(Some(GradedMonoidAlgebra::new(m, g, Vec::new())?))
    }

    /// `π(a')` on monomial generators.
    pub fn forward(&self, ideal: &[Vector]) -> Vec<Vector> {
        normalize(ideal.iter().map(|e| self.class_of(e)).collect(), |a, b| self.divides(a, b))
    }

    /// `<π^{-1}(a) ∩ R'^+>` on monomial generators.
    pub fn backward(&self, ideal: &[Vector]) -> Result<Vec<Vector>> {
        let mut out = Vec::with_capacity(ideal.len());
        for g in ideal {
            match self.lift(g) {
                Some(x) if self.fine.effective_monoid().contains(&x) => out.push(x),
                _ => return Err(Error::Foreign(format!("{g:?} is not a coarse monomial"))),
            }
        }
        let m = self.fine.effective_monoid();
        Ok(normalize(out, |a, b| m.contains(&vector::sub(b, a))))
    }

    /// Exponents `u` of fine units with `π(u) = 0`, as a lattice basis.
    pub fn unit_kernel(&self) -> Vec<Vector> {
        let units = self.fine.unit_lattice();
        if units.is_empty() {
            return units;
        }
        let d = self.fine.ambient_rank();
        let inc = GroupHom::new(
            FgAbelianGroup::free(units.len()),
            FgAbelianGroup::free(d),
            IntMatrix::from_columns(&units, d).expect("widths"),
        )
        .expect("free groups");
        let restricted = inc.then(&self.projection).expect("compatible");
        kernel(&restricted)
            .iter()
            .map(|c| inc.apply(c))
            .collect()
    }

    /// Whether the kernel of units is exactly `U_χ`.
    pub fn unit_kernel_is_chi(&self, data: &CoarseningData) -> bool {
        let d = FgAbelianGroup::free(self.fine.ambient_rank());
        same_subgroup(&self.unit_kernel(), data.chi(), &d).unwrap_or(false)
    }
}

/// Drops generators divisible by others; among associates the
/// lexicographically first survives.
pub fn normalize(mut gens: Vec<Vector>, divides: impl Fn(&[Int], &[Int]) -> bool) -> Vec<Vector> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Vector> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| {
            j != i && divides(h, g) && (!divides(g, h) || j < i)
        });
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Whether two monomial generating sets give the same ideal.
pub fn same_ideal(a: &[Vector], b: &[Vector], divides: impl Fn(&[Int], &[Int]) -> bool) -> bool {
    a.iter().all(|x| b.iter().any(|y| divides(y, x))) && b.iter().all(|y| a.iter().any(|x| divides(x, y)))
}

pub fn ideal_sum(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out
}

/// Product of monomial ideals, for exponents in a group with operation
/// `add`.
pub fn ideal_product(a: &[Vector], b: &[Vector], add: impl Fn(&[Int], &[Int]) -> Vector) -> Vec<Vector> {
    a.iter().flat_map(|x| b.iter().map(|y| add(x, y)).collect::<Vec<_>>()).collect()
}

/// Coarsening `R'` along `ψ`, with the bijection on monomial graded ideals.
pub fn coarsen_cie(r: &GradedMonoidAlgebra, data: &CoarseningData) -> Result<CoarseAlgebra> {
    let d = r.ambient_rank();
    let zd = FgAbelianGroup::free(d);
    let u = GroupHom::from_images(zd.clone(), data.chi())?;
    let (group, projection) = cokernel(&u);
    // deg' then ψ factors through G since deg'(U_χ) = ker ψ
    let deg_k = r.grading().then(data.psi())?;
    let mut cols = Vec::with_capacity(group.dim());
    for i in 0..group.dim() {
        let e = vector::unit_vector(group.dim(), i);
        let x = solve(&projection, &e).expect("projection is surjective");
        cols.push(deg_k.apply(&x));
    }
    let k = data.psi().target().clone();
    let m = IntMatrix::from_columns(&cols, k.dim())?;
    let grading = GroupHom::new(group.clone(), k, m)?;
    let generators = r
        .effective_monoid()
        .generators()
        .iter()
        .map(|g| projection.apply(g))
        .collect();
    Ok(CoarseAlgebra {
        fine: r.clone(),
        group,
        projection,
        grading,
        generators,
    })
}
