use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::charts::{characteristic_space, irreducibles_mod_units, CharSpaceChart};
use super::presentation::{lattice_basis, CoxPresentation};
use super::report::{VerificationReport, Witness};
use crate::cones::AffineMonoid;
use crate::divisors::{classes_of_rays, divisorial_class_semigroup, invariant_kdivisor, principal_divisor, DivisorialAlgebraSpec};
use crate::error::Result;
use crate::graded::{
    homogeneous_units, invariant_good_quotient, invariant_spectrum, stalk, GradedMonoidAlgebra, HomogeneousPolynomial,
};
use crate::lattice::vector::{self, Vector};
use crate::lattice::{cokernel, integer_kernel, kernel, same_subgroup, subgroup_generates, FgAbelianGroup, GroupHom, IntMatrix};

fn variable(r: &GradedMonoidAlgebra, i: usize) -> HomogeneousPolynomial {
    HomogeneousPolynomial::monomial(r, vector::unit_vector(r.ambient_rank(), i)).expect("variables are monomials")
}

fn generates(elements: &[Vector], g: &FgAbelianGroup) -> (bool, Witness) {
    let (ok, index) = subgroup_generates(elements, g).expect("elements of the group");
    let w = Witness::new()
        .with("elements", elements.to_vec())
        .with("group", g.clone())
        .with("index", format!("{index}"));
    (ok, w)
}

/// Whether the monomials modulo units form a free monoid; returns the
/// irreducibles.
pub(crate) fn free_mod_units(r: &GradedMonoidAlgebra) -> (bool, Vec<Vector>) {
    let m = r.effective_monoid();
    let irr = irreducibles_mod_units(m);
    let units = r.unit_lattice();
    let mut all = irr.clone();
    all.extend(units.iter().cloned());
    (vector::rank(&all) == irr.len() + units.len(), irr)
}

/// Class group of the normal monoid algebra `k[M]`: `Z^{facets}` modulo the
/// facet pairings of `group(M)`.
fn monoid_class_group(m: &AffineMonoid) -> FgAbelianGroup {
    let facets = m.cone().facets();
    let basis = m.group_basis();
    let images: Vec<Vector> = basis
        .iter()
        .map(|b| facets.iter().map(|f| vector::dot(f, b)).collect())
        .collect();
    let target = FgAbelianGroup::free(facets.len());
    if images.is_empty() {
        return target;
    }
    let h = GroupHom::from_images(target, &images).expect("widths");
    cokernel(&h).0
}

pub fn verify_theorem_a(p: &CoxPresentation) -> VerificationReport {
    let mut rep = VerificationReport::new('A');
    let cl = p.class_group();
    let r = p.ring();
    let n = p.n_rays();
    let zr = FgAbelianGroup::free(n);

    let (ok, w) = generates(&p.degrees(), cl);
    rep.record("A.i.degrees", "degrees of homogeneous monomial fractions exhaust Cl(X)", ok, w);

    let k = kernel(p.deg());
    let m_basis = lattice_basis(p);
    let ok = same_subgroup(&k, &m_basis, &zr).expect("vectors of Z^rays");
    rep.record(
        "A.i.function_field",
        "degree-zero monomial fractions are exactly q*(χ^m), m in M",
        ok,
        Witness::new().with("degree_zero_lattice", k).with("image_of_M", m_basis.clone()),
    );

    let mut bad: Vec<Vector> = Vec::new();
    let lr = p.fan().lattice_rank();
    for i in 0..lr {
        let e = vector::unit_vector(lr, i);
        let pulled = p.pullback(&e);
        for (rho, v) in p.fan().rays().iter().enumerate() {
            if pulled[rho] != vector::dot(&e, v) {
                bad.push(alloc::vec![i.into(), rho.into()]);
            }
        }
    }
    rep.record(
        "A.ii.valuations",
        "the valuation along x_ρ restricts along q* to the order along D_ρ",
        bad.is_empty(),
        Witness::new().with("mismatches", bad),
    );

    let divs: Vec<Vector> = (0..n)
        .map(|i| invariant_kdivisor(r, &variable(r, i)).expect("variables").coeffs)
        .collect();
    let (ok, w) = generates(&divs, &zr);
    rep.record("A.iii.surjective", "monomial div_K maps onto the invariant divisors Z^rays", ok, w);

    let ker = integer_kernel(&IntMatrix::from_columns(&divs, n).expect("widths"));
    let units = homogeneous_units(r);
    rep.record(
        "A.iii.kernel",
        "monomial fractions with trivial div_K are constants, and all homogeneous units have degree zero",
        ker.is_empty() && units.lattice.is_empty(),
        Witness::new().with("kernel", ker).with("unit_lattice", units.lattice),
    );

    let mut bad = Vec::new();
    for i in 0..n {
        let d = invariant_kdivisor(r, &variable(r, i)).expect("variables");
        if d.non_invariant_part {
            bad.push(i);
        }
    }
    rep.record(
        "A.supplement.classes",
        "deg_K(f) ↦ [div_K(f)] is the identity on Cl(X) for the variables",
        bad.is_empty(),
        Witness::new().with("failing_variables", bad),
    );
    rep
}

/// Chart of some maximal cone containing the given cone.
fn chart_for<'a>(charts: &'a [CharSpaceChart], cone: &[usize]) -> &'a CharSpaceChart {
    charts
        .iter()
        .find(|c| cone.iter().all(|i| c.cone.contains(i)))
        .expect("every cone lies in a maximal cone")
}

/// Index of the invariant prime `<x_ρ : ρ ∈ vars>` in the spectrum of a
/// chart ring.
fn prime_of(spec: &crate::poset::Poset<crate::graded::PrimePoint>, n: usize, vars: &[usize]) -> Option<usize> {
    let mut want: Vec<Vector> = vars.iter().map(|&i| vector::unit_vector(n, i)).collect();
    want.sort();
    spec.position(|p| {
        let mut g = p.ideal_generators.clone();
        g.sort();
        g == want
    })
}

pub fn verify_theorem_b(p: &CoxPresentation) -> Result<VerificationReport> {
    let charts = characteristic_space(p)?;
    Ok(verify_theorem_b_on(p, &charts))
}

pub fn verify_theorem_b_on(p: &CoxPresentation, charts: &[CharSpaceChart]) -> VerificationReport {
    let mut rep = VerificationReport::new('B');
    let n = p.n_rays();
    let cl = p.class_group();

    let mut bad = Vec::new();
    for c in charts {
        let (free, irr) = free_mod_units(&c.ring);
        if !free || irr.len() != c.cone.len() {
            bad.push(c.cone.clone());
        }
    }
    rep.record(
        "B.i.factorial",
        "per chart, monomials modulo units form a free monoid on the non-inverted variables (invariant proxy for K-factoriality)",
        bad.is_empty(),
        Witness::new().with("failing_charts", bad.into_iter().map(|c| c.into_iter().map(Into::into).collect()).collect::<Vec<Vector>>()),
    );

    let mut bad: Vec<Vector> = Vec::new();
    for c in charts {
        let degs: Vec<Vector> = c.ring.effective_monoid().generators().iter().map(|g| c.ring.degree(g)).collect();
        if !generates(&degs, cl).0 {
            bad.push(c.cone.iter().map(|&i| i.into()).collect());
        }
    }
    rep.record(
        "B.i.degrees",
        "per chart, degrees of homogeneous chart elements generate Cl(X)",
        bad.is_empty(),
        Witness::new().with("failing_charts", bad),
    );

    let mut bad: Vec<Vector> = Vec::new();
    for c in charts {
        let mut facets = c.ring.effective_monoid().cone().facets().to_vec();
        facets.sort();
        let mut want: Vec<Vector> = c.cone.iter().map(|&i| vector::unit_vector(n, i)).collect();
        want.sort();
        if facets != want {
            bad.push(c.cone.iter().map(|&i| i.into()).collect());
        }
    }
    rep.record(
        "B.ii.essential",
        "per chart, the essential invariant valuations are the orders along x_ρ, ρ in σ(1)",
        bad.is_empty(),
        Witness::new().with("failing_charts", bad),
    );

    let mut bad_stalk: Vec<Vector> = Vec::new();
    let mut bad_units: Vec<Vector> = Vec::new();
    for sigma in p.fan().cones() {
        let c = chart_for(charts, &sigma);
        let spec = invariant_spectrum(&c.ring);
        let Some(pt) = prime_of(&spec, n, &sigma) else {
            bad_stalk.push(sigma.iter().map(|&i| i.into()).collect());
            continue;
        };
        let st = stalk(&c.ring, spec.get(pt)).expect("point of the spectrum");
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(vector::unit_vector(n, i));
            if !sigma.contains(&i) {
                gens.push(vector::neg(&vector::unit_vector(n, i)));
            }
        }
        let expected = AffineMonoid::new(n, gens).expect("widths");
        let sm = st.effective_monoid();
        let same = sm.generators().iter().all(|g| expected.contains(g))
            && expected.generators().iter().all(|g| sm.contains(g));
        if !same {
            bad_stalk.push(sigma.iter().map(|&i| i.into()).collect());
        }
        let unit_degrees = homogeneous_units(&st).degrees;
        let outside: Vec<usize> = (0..n).filter(|i| !sigma.contains(i)).collect();
        let expected = classes_of_rays(p.deg(), &outside);
        // classes principal near p_σ: deg(<e_ρ : ρ ∉ σ(1)> + im(div))
        let mut near: Vec<Vector> = outside.iter().map(|&i| vector::unit_vector(n, i)).collect();
        near.extend(lattice_basis(p));
        let near: Vec<Vector> = near.iter().map(|x| p.deg().apply(x)).collect();
        let ok = same_subgroup(&unit_degrees, &expected, cl).expect("classes")
            && same_subgroup(&unit_degrees, &near, cl).expect("classes");
        if !ok {
            bad_units.push(sigma.iter().map(|&i| i.into()).collect());
        }
    }
    rep.record(
        "B.iii.stalk",
        "the stalk at p_σ consists of the fractions with non-negative order along every ρ in σ(1)",
        bad_stalk.is_empty(),
        Witness::new().with("failing_cones", bad_stalk),
    );
    rep.record(
        "B.iii.units",
        "units of the stalk at p_σ have degrees <[D_ρ] : ρ ∉ σ(1)>, the classes principal near p_σ",
        bad_units.is_empty(),
        Witness::new().with("failing_cones", bad_units),
    );

    let mut bad = Vec::new();
    for rho in 0..n {
        let c = chart_for(charts, &[rho]);
        let spec = invariant_spectrum(&c.ring);
        let ok = prime_of(&spec, n, &[rho]).is_some_and(|pt| {
            let st = stalk(&c.ring, spec.get(pt)).expect("point of the spectrum");
            generates(&homogeneous_units(&st).degrees, cl).0
        });
        if !ok {
            bad.push(rho);
        }
    }
    rep.record(
        "B.iv.ray_units",
        "the stalk at each ray has homogeneous units in every degree of Cl(X)",
        bad.is_empty(),
        Witness::new().with("failing_rays", bad),
    );
    rep
}

pub fn verify_theorem_c(p: &CoxPresentation) -> Result<VerificationReport> {
    let charts = characteristic_space(p)?;
    verify_theorem_c_on(p, &charts)
}

pub fn verify_theorem_c_on(p: &CoxPresentation, charts: &[CharSpaceChart]) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new('C');
    let n = p.n_rays();
    let cl = p.class_group();
    let lr = p.fan().lattice_rank();

    let mut bad: Vec<Vector> = Vec::new();
    for c in charts {
        let degs: Vec<Vector> = c.ring.effective_monoid().group_basis().iter().map(|g| c.ring.degree(g)).collect();
        if !generates(&degs, cl).0 {
            bad.push(c.cone.iter().map(|&i| i.into()).collect());
        }
    }
    rep.record(
        "C.i.degrees",
        "per chart, degrees of homogeneous monomial fractions exhaust Cl(X)",
        bad.is_empty(),
        Witness::new().with("failing_charts", bad),
    );

    let mut bad: Vec<Vector> = Vec::new();
    let mut quotients = Vec::with_capacity(charts.len());
    for c in charts {
        let q = invariant_good_quotient(&c.ring)?;
        if !(c.is_isomorphism() && c.hilbert_bijection && q.is_surjective()) {
            bad.push(c.cone.iter().map(|&i| i.into()).collect());
        }
        quotients.push(q);
    }
    rep.record(
        "C.ii.good_quotient",
        "per chart, the degree-zero part of the chart ring is σ^∨ ∩ M via m ↦ div(χ^m), and q is surjective",
        bad.is_empty(),
        Witness::new().with("failing_charts", bad),
    );

    let mut bad: Vec<Vector> = Vec::new();
    for i in 0..lr {
        let m = vector::unit_vector(lr, i);
        let lhs = p.pullback(&m);
        let rhs = principal_divisor(p.fan(), &m)?.coeffs;
        if lhs != rhs {
            bad.push(m);
        }
    }
    rep.record(
        "C.ii.divisor_diagram",
        "α(div^K(q*χ^m)) = div(χ^m) for a basis of M",
        bad.is_empty(),
        Witness::new().with("failing_lattice_points", bad),
    );

    let r = p.ring();
    let bad: Vec<usize> = (0..n)
        .filter(|&i| {
            invariant_kdivisor(r, &variable(r, i)).expect("variables").coeffs != vector::unit_vector(n, i)
        })
        .collect();
    rep.record(
        "C.iii.class_group",
        "every invariant K-divisor of the total space is the divisor of a monomial, so the invariant Cl^K vanishes",
        bad.is_empty(),
        Witness::new().with("failing_rays", bad),
    );

    // rays inverted on every chart carry global units
    let global: Vec<usize> = (0..n)
        .filter(|i| charts.iter().all(|c| c.inverted.contains(i)))
        .collect();
    let degs: Vec<Vector> = global.iter().map(|&i| p.deg().apply(&vector::unit_vector(n, i))).collect();
    let ok = degs.iter().all(|d| cl.is_zero(d));
    rep.record(
        "C.iii.units",
        "global homogeneous units of the total space have degree zero",
        ok,
        Witness::new().with("global_unit_variables", global).with("degrees", degs),
    );

    let mut bad = Vec::new();
    for rho in 0..n {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for (c, q) in charts.iter().zip(&quotients) {
            if !c.cone.contains(&rho) {
                continue;
            }
            let m0 = q.degree_zero();
            let on_ray: Vec<usize> = (0..m0.generators().len())
                .filter(|&i| m0.generators()[i][rho].is_zero())
                .collect();
            let Some(y) = q.base().position(|f| f.generators == on_ray) else {
                continue;
            };
            let top = c.ring.effective_monoid().cone().dimension();
            for x in q.fiber(y) {
                let pt = q.source().get(x);
                if pt.face.dim + 1 != top {
                    continue;
                }
                let mut vars: Vec<usize> = pt
                    .ideal_generators
                    .iter()
                    .filter_map(|g| g.iter().position(|e| !e.is_zero()))
                    .collect();
                vars.sort_unstable();
                if !found.contains(&vars) {
                    found.push(vars);
                }
            }
        }
        if found != alloc::vec![alloc::vec![rho]] {
            bad.push(rho);
        }
    }
    rep.record(
        "C.supplement.single_prime",
        "the preimage of each D_ρ is the single invariant K-prime divisor <x_ρ>",
        bad.is_empty(),
        Witness::new().with("failing_rays", bad),
    );

    let mut bad: Vec<Vector> = Vec::new();
    for sigma in p.fan().cones() {
        let c = chart_for(charts, &sigma);
        let spec = invariant_spectrum(&c.ring);
        let p_sigma = prime_of(&spec, n, &sigma);
        for rho in 0..n {
            let incident = match (p_sigma, prime_of(&spec, n, &[rho])) {
                (Some(s), Some(r)) => spec.leq(r, s),
                _ => false,
            };
            if incident != sigma.contains(&rho) {
                let mut w: Vector = sigma.iter().map(|&i| i.into()).collect();
                w.push((rho as i64).into());
                bad.push(w);
            }
        }
    }
    rep.record(
        "C.supplement.incidence",
        "p_σ lies in the closure of <x_ρ> exactly when ρ ∈ σ(1)",
        bad.is_empty(),
        Witness::new().with("failing_cone_ray_pairs", bad),
    );
    Ok(rep)
}

/// Checks on a graded ring `R` with `R^{+,*} = k^* x (units)`; `spec`
/// supplies the divisorial algebra `R` is presented from, if any.
pub fn verify_theorem_d(r: &GradedMonoidAlgebra, spec: Option<&DivisorialAlgebraSpec>) -> VerificationReport {
    let mut rep = VerificationReport::new('D');
    let k = r.grading_group();
    let m = r.effective_monoid();

    match spec {
        None => {
            let (free, irr) = free_mod_units(r);
            rep.record(
                "D.i.free_monomials",
                "monomials modulo units form a free monoid (invariant proxy for K-factoriality)",
                free,
                Witness::new().with("irreducibles", irr),
            );
            let cg = monoid_class_group(m);
            rep.record(
                "D.i.class_semigroup",
                "the invariant class group of the monomial algebra vanishes",
                cg.is_trivial(),
                Witness::new().with("class_group", cg),
            );
        }
        Some(s) => {
            let cg = divisorial_class_semigroup(s);
            rep.record(
                "D.i.class_semigroup",
                "Cl(A)/<[φ(K)]> vanishes, so the divisorial algebra is K-factorial",
                cg.is_trivial(),
                Witness::new().with("class_semigroup", cg),
            );
        }
    }

    let units = homogeneous_units(r);
    rep.record(
        "D.ii.units",
        "homogeneous units have degree zero",
        units.degrees_trivial(),
        Witness::new().with("unit_degrees", units.degrees).with("unit_lattice", units.lattice),
    );

    let degs: Vec<Vector> = m.generators().iter().map(|g| r.degree(g)).collect();
    let (ok, w) = generates(&degs, k);
    rep.record("D.iii.generates", "degrees of homogeneous elements generate K", ok, w);

    let mut bad: Vec<Vector> = Vec::new();
    for f in m.cone().facets() {
        let on: Vec<Vector> = m
            .generators()
            .iter()
            .filter(|g| vector::dot(f, g).is_zero())
            .map(|g| r.degree(g))
            .collect();
        if !generates(&on, k).0 {
            bad.push(f.clone());
        }
    }
    rep.record(
        "D.iv.units_in_every_degree",
        "for every invariant prime divisor, the homogeneous elements outside it have degrees generating K",
        bad.is_empty(),
        Witness::new().with("failing_facets", bad),
    );
    rep
}

/// Ids of the failed clauses among those that characterize Cox rings
/// irredundantly: (i), (ii) and (iv).
pub fn irredundant_failures(rep: &VerificationReport) -> Vec<String> {
    rep.failed_clauses()
        .into_iter()
        .filter(|c| c != "D.iii")
        .collect()
}
