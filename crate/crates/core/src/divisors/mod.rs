//! Torus-invariant divisors, class groups, sections and divisorial algebras.
//!
//! Every divisor here lives on the invariant lattice `Z^{Σ(1)}`. Each class
//! of `Cl(X)` has an invariant representative, since `Cl(X)` is the cokernel
//! of `M -> Z^{Σ(1)}`, so class-level statements are complete at this level.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cones::{lattice_cone_generators, AffineMonoid, Cone, Fan};
use crate::error::{Error, Result};
use crate::graded::{degree_zero_monoid, monomial_valuation, GradedMonoidAlgebra, HomogeneousPolynomial};
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{cokernel, image_generators, solve, subgroup_generates, FgAbelianGroup, GroupHom, IntMatrix};

/// Invariant Weil divisor `Σ a_ρ D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeilDivisor {
    pub coeffs: Vector,
}

impl WeilDivisor {
    pub fn new(coeffs: Vector) -> Self {
        WeilDivisor { coeffs }
    }

    pub fn zero(rays: usize) -> Self {
        WeilDivisor::new(vector::zero_vector(rays))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &WeilDivisor) -> WeilDivisor {
        WeilDivisor::new(vector::add(&self.coeffs, &other.coeffs))
    }
}

/// Coefficients over the invariant `K`-prime divisors `<x_ρ>`.
pub type KWeilDivisor = Vector;

/// `Cl(X)` with `deg : Z^{Σ(1)} -> Cl(X)`, the cokernel of
/// `m ↦ (<m, v_ρ>)_ρ`.
pub fn class_group(f: &Fan) -> Result<(FgAbelianGroup, GroupHom)> {
    let report = crate::cones::validate_fan(f);
    if !report.is_empty() {
        return Err(Error::InvalidFan(report.join("; ")));
    }
    Ok(cokernel(&ray_map(f)))
}

/// `M -> Z^{Σ(1)}`.
pub fn ray_map(f: &Fan) -> GroupHom {
    GroupHom::new(
        FgAbelianGroup::free(f.lattice_rank()),
        FgAbelianGroup::free(f.rays().len()),
        f.ray_matrix(),
    )
    .expect("free groups")
}

/// `div(χ^m)`.
pub fn principal_divisor(f: &Fan, m: &[Int]) -> Result<WeilDivisor> {
    if m.len() != f.lattice_rank() {
        return Err(Error::Dimension(format!("lattice point of length {}", m.len())));
    }
    Ok(WeilDivisor::new(f.rays().iter().map(|v| vector::dot(m, v)).collect()))
}

/// `[D]` in canonical form.
pub fn divisor_class(deg: &GroupHom, d: &WeilDivisor) -> Result<Vector> {
    if d.coeffs.len() != deg.source().dim() {
        return Err(Error::Dimension(format!(
            "divisor has {} coefficients for {} rays",
            d.coeffs.len(),
            deg.source().dim()
        )));
    }
    Ok(deg.apply(&d.coeffs))
}

/// Axis-parallel lattice box, bounds inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    pub lower: Vector,
    pub upper: Vector,
}

/// Lattice points `m` with `div(χ^m) + D >= 0`.
pub fn global_sections(f: &Fan, d: &WeilDivisor, bounding_box: Option<&LatticeBox>) -> Result<Vec<Vector>> {
    let n = f.lattice_rank();
    if d.coeffs.len() != f.rays().len() {
        return Err(Error::Dimension(format!("divisor has {} coefficients", d.coeffs.len())));
    }
    let satisfies = |m: &Vector| {
        f.rays()
            .iter()
            .zip(&d.coeffs)
            .all(|(v, a)| !(vector::dot(m, v) + a).is_negative())
    };
    let b = match bounding_box {
        Some(b) => {
            if b.lower.len() != n || b.upper.len() != n {
                return Err(Error::Dimension("bounding box of the wrong rank".into()));
            }
            b.clone()
        }
        None => match section_polytope_box(f, d)? {
            Some(b) => b,
            None => return Ok(Vec::new()),
        },
    };
    let mut out = Vec::new();
    if b.lower.iter().zip(&b.upper).any(|(l, u)| l > u) {
        return Ok(out);
    }
    let mut m = b.lower.clone();
    loop {
        if satisfies(&m) {
            out.push(m.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if m[i] < b.upper[i] {
                m[i] += Int::one();
                break;
            }
            m[i] = b.lower[i].clone();
            i += 1;
        }
    }
}

/// Bounding box of `{m : <m, v_ρ> >= -D_ρ}` from its vertices, `None` when
/// it is empty.
fn section_polytope_box(f: &Fan, d: &WeilDivisor) -> Result<Option<LatticeBox>> {
    let n = f.lattice_rank();
    let recession = Cone::from_inequalities(n, f.rays(), &[])?;
    if !recession.rays().is_empty() || !recession.lineality().is_empty() {
        return Err(Error::Precondition("supply enumeration box".into()));
    }
    // homogenize: (m, t) with <m, v> + D t >= 0 and t >= 0
    let mut ineqs: Vec<Vector> = f
        .rays()
        .iter()
        .zip(&d.coeffs)
        .map(|(v, a)| {
            let mut h = v.clone();
            h.push(a.clone());
            h
        })
        .collect();
    ineqs.push(vector::unit_vector(n + 1, n));
    let hom = Cone::from_inequalities(n + 1, &ineqs, &[])?;
    let vertices: Vec<&Vector> = hom.rays().iter().filter(|r| r[n].is_positive()).collect();
    if vertices.is_empty() {
        return Ok(None);
    }
    let mut lower: Vec<Option<Int>> = alloc::vec![None; n];
    let mut upper: Vec<Option<Int>> = alloc::vec![None; n];
    for v in vertices {
        for i in 0..n {
            let lo = v[i].div_floor(&v[n]);
            let hi = v[i].div_ceil(&v[n]);
            if lower[i].as_ref().is_none_or(|x| &lo < x) {
                lower[i] = Some(lo);
            }
            if upper[i].as_ref().is_none_or(|x| &hi > x) {
                upper[i] = Some(hi);
            }
        }
    }
    Ok(Some(LatticeBox {
        lower: lower.into_iter().map(|x| x.expect("vertex")).collect(),
        upper: upper.into_iter().map(|x| x.expect("vertex")).collect(),
    }))
}

/// `div_K(f)` on the invariant primes of a polynomial ring, with a flag
/// recording whether its class differs from `deg_K(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantKDivisor {
    pub coeffs: KWeilDivisor,
    pub class: Vector,
    /// `deg_K(f) != [coeffs]`: `div_K(f)` has a non-invariant part.
    pub non_invariant_part: bool,
}

pub fn invariant_kdivisor(r: &GradedMonoidAlgebra, f: &HomogeneousPolynomial) -> Result<InvariantKDivisor> {
    let n = r.monoid().generators().len();
    let coeffs: Vector = (0..n)
        .map(|rho| monomial_valuation(r, f, rho))
        .collect::<Result<_>>()?;
    let class = r.degree(&coeffs);
    let non_invariant_part = !r.grading_group().equal(&class, f.degree());
    Ok(InvariantKDivisor {
        coeffs,
        class,
        non_invariant_part,
    })
}

/// Componentwise minimum of the exponents of monomial generators.
pub fn reflexive_vector(generators: &[Vector]) -> Result<KWeilDivisor> {
    let Some(first) = generators.first() else {
        return Err(Error::Precondition("empty generator list".into()));
    };
    Ok(generators.iter().skip(1).fold(first.clone(), |acc, g| {
        acc.iter().zip(g).map(|(a, b)| a.min(b).clone()).collect()
    }))
}

/// `a ⊞ b` on reflexive vectors.
pub fn box_plus(a: &KWeilDivisor, b: &KWeilDivisor) -> KWeilDivisor {
    vector::add(a, b)
}

/// Laurent polynomial over the rationals, keyed by exponent.
pub type LaurentPolynomial = BTreeMap<Vector, BigRational>;

/// `A(K, φ)` over `A = k[σ^∨ ∩ M]` with `σ = cone(rays)` and
/// `φ : K -> Z^{rays}`.
#[derive(Clone, Debug)]
pub struct DivisorialAlgebraSpec {
    lattice_rank: usize,
    rays: Vec<Vector>,
    phi: GroupHom,
}

impl DivisorialAlgebraSpec {
    pub fn new(lattice_rank: usize, rays: Vec<Vector>, phi: GroupHom) -> Result<Self> {
        if let Some(r) = rays.iter().find(|r| r.len() != lattice_rank) {
            return Err(Error::Dimension(format!("ray {r:?} in rank {lattice_rank}")));
        }
        if phi.target() != &FgAbelianGroup::free(rays.len()) {
            return Err(Error::Dimension(format!("φ must land in Z^{}", rays.len())));
        }
        Ok(DivisorialAlgebraSpec {
            lattice_rank,
            rays,
            phi,
        })
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn k(&self) -> &FgAbelianGroup {
        self.phi.source()
    }

    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    /// `Cl(A)` and `Z^{rays} -> Cl(A)`.
    pub fn base_class_group(&self) -> (FgAbelianGroup, GroupHom) {
        let p = IntMatrix::from_rows(&self.rays, self.lattice_rank).expect("widths");
        let h = GroupHom::new(FgAbelianGroup::free(self.lattice_rank), FgAbelianGroup::free(self.rays.len()), p)
            .expect("free groups");
        cokernel(&h)
    }
}

/// `μ_ρ(a χ^w) = ν_ρ(a) + φ(w)_ρ`.
pub fn mu_valuation(spec: &DivisorialAlgebraSpec, rho: usize, a: &LaurentPolynomial, w: &[Int]) -> Result<Int> {
    let v = spec
        .rays
        .get(rho)
        .ok_or_else(|| Error::Foreign(format!("ray {rho}")))?;
    spec.k().check(w)?;
    let nu = a
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, _)| {
            if m.len() == spec.lattice_rank {
                Ok(vector::dot(m, v))
            } else {
                Err(Error::Dimension(format!("exponent {m:?}")))
            }
        })
        .collect::<Result<Vec<Int>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Precondition("valuation of zero".into()))?;
    Ok(nu + &spec.phi.apply(w)[rho])
}

pub fn mu_valuation_monomial(spec: &DivisorialAlgebraSpec, rho: usize, m: &[Int], w: &[Int]) -> Result<Int> {
    let mut a = LaurentPolynomial::new();
    a.insert(m.to_vec(), BigRational::one());
    mu_valuation(spec, rho, &a, w)
}

/// Whether `a χ^w` lies in `R_w`.
pub fn component_membership(spec: &DivisorialAlgebraSpec, a: &LaurentPolynomial, w: &[Int]) -> Result<bool> {
    for rho in 0..spec.rays.len() {
        if mu_valuation(spec, rho, a, w)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `μ`-reflexive vector of an ideal generated by monomials `χ^m χ^w`.
pub fn spec_reflexive_vector(spec: &DivisorialAlgebraSpec, generators: &[(Vector, Vector)]) -> Result<KWeilDivisor> {
    if generators.is_empty() {
        return Err(Error::Precondition("empty generator list".into()));
    }
    let vs: Vec<Vector> = generators
        .iter()
        .map(|(m, w)| {
            (0..spec.rays.len())
                .map(|rho| mu_valuation_monomial(spec, rho, m, w))
                .collect::<Result<Vector>>()
        })
        .collect::<Result<_>>()?;
    reflexive_vector(&vs)
}

/// `Cl(A) / <[φ(K)]>`.
pub fn divisorial_class_semigroup(spec: &DivisorialAlgebraSpec) -> FgAbelianGroup {
    let (cl, deg) = spec.base_class_group();
    let images: Vec<Vector> = spec.phi.images().iter().map(|x| deg.apply(x)).collect();
    let h = GroupHom::from_images(cl, &images).expect("classes");
    cokernel(&h).0
}

/// Monoid presentation of `A(K, φ)` for free `K`.
#[derive(Clone, Debug)]
pub struct DivisorialPresentation {
    /// Exponents `(m, w) ∈ M ⊕ K`, graded by the projection to `K`.
    pub algebra: GradedMonoidAlgebra,
    /// Whether the degree-zero part is `σ^∨ ∩ M`.
    pub degree_zero_ok: bool,
    /// Whether every degree of `K` has a nonzero component.
    pub all_degrees: bool,
}

pub fn divisorial_algebra_presentation(spec: &DivisorialAlgebraSpec) -> Result<DivisorialPresentation> {
    let k = spec.k();
    if !k.is_free() {
        return Err(Error::Precondition(format!(
            "K = {k} has torsion; present over a free cover and coarsen"
        )));
    }
    let (n, kr) = (spec.lattice_rank, k.free_rank());
    let ineqs: Vec<Vector> = spec
        .rays
        .iter()
        .enumerate()
        .map(|(rho, v)| {
            let mut row = v.clone();
            row.extend(spec.phi.matrix().row(rho).iter().cloned());
            row
        })
        .collect();
    let gens = lattice_cone_generators(n + kr, &ineqs, &[])?;
    let monoid = AffineMonoid::new(n + kr, gens)?;
    let mut proj = IntMatrix::zeros(kr, n + kr);
    for i in 0..kr {
        proj[(i, n + i)] = Int::one();
    }
    let grading = GroupHom::new(FgAbelianGroup::free(n + kr), k.clone(), proj)?;
    let algebra = GradedMonoidAlgebra::new(monoid, grading, Vec::new())?;

    let base = AffineMonoid::new(n, lattice_cone_generators(n, &spec.rays, &[])?)?;
    let r0 = degree_zero_monoid(&algebra)?;
    let r0_gens: Vec<Vector> = r0.generators().iter().map(|g| g[..n].to_vec()).collect();
    let r0_proj = AffineMonoid::new(n, r0_gens.clone())?;
    let degree_zero_ok = r0.generators().iter().all(|g| g[n..].iter().all(Zero::is_zero))
        && r0_gens.iter().all(|g| base.contains(g))
        && base.generators().iter().all(|g| r0_proj.contains(g));

    let degs: Vec<Vector> = algebra
        .monoid()
        .generators()
        .iter()
        .map(|g| g[n..].to_vec())
        .collect();
    let deg_cone = Cone::new(kr, degs.clone())?;
    let all_degrees = (kr == 0 || deg_cone.is_linear()) && subgroup_generates(&degs, k)?.0;
    Ok(DivisorialPresentation {
        algebra,
        degree_zero_ok,
        all_degrees,
    })
}

/// A lattice point with prescribed ray pairings, if one exists. Only
/// monomials are searched, so `None` does not rule out other functions.
pub fn monomial_approximation(
    lattice_rank: usize,
    rays: &[Vector],
    prescribed: &[(usize, Int)],
) -> Result<Option<Vector>> {
    let mut rows = Vec::with_capacity(prescribed.len());
    let mut target = Vec::with_capacity(prescribed.len());
    for (rho, value) in prescribed {
        let v = rays.get(*rho).ok_or_else(|| Error::Foreign(format!("ray {rho}")))?;
        rows.push(v.clone());
        target.push(value.clone());
    }
    if rows.is_empty() {
        return Ok(Some(vector::zero_vector(lattice_rank)));
    }
    let h = GroupHom::new(
        FgAbelianGroup::free(lattice_rank),
        FgAbelianGroup::free(rows.len()),
        IntMatrix::from_rows(&rows, lattice_rank)?,
    )?;
    Ok(solve(&h, &target))
}

/// Subgroup of `Cl(X)` generated by the classes of the given rays.
pub fn classes_of_rays(deg: &GroupHom, rays: &[usize]) -> Vec<Vector> {
    let d = deg.source().dim();
    let imgs: Vec<Vector> = rays.iter().map(|&i| vector::unit_vector(d, i)).collect();
    if imgs.is_empty() {
        return Vec::new();
    }
    let h = GroupHom::from_images(deg.source().clone(), &imgs)
        .expect("unit vectors")
        .then(deg)
        .expect("compatible");
    image_generators(&h)
}
