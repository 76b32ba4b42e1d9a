//! Between JSON documents and core objects.

use coxkernel_core::cones::{validate_fan, AffineMonoid, Fan};
use coxkernel_core::cox::{VerificationReport, WitnessValue};
use coxkernel_core::divisors::{DivisorialAlgebraSpec, WeilDivisor};
use coxkernel_core::graded::GradedMonoidAlgebra;
use coxkernel_core::lattice::{FgAbelianGroup, GroupHom, Int, IntMatrix, Vector};
use serde_json::{Map, Value};

use crate::schema::{
    schema, AlgebraDoc, DivisorDoc, DivisorialDoc, FanDoc, GradingDoc, GroupDoc, ReportEntry, SCHEMA,
};
use crate::CliError;

fn check_schema(s: &str) -> Result<(), CliError> {
    if s == SCHEMA {
        Ok(())
    } else {
        Err(CliError::schema("/schema", format!("expected \"{SCHEMA}\", found \"{s}\"")))
    }
}

fn vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn vectors(rows: &[Vec<i64>], width: usize, pointer: &str) -> Result<Vec<Vector>, CliError> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() == width {
                Ok(vector(r))
            } else {
                Err(CliError::schema(
                    &format!("{pointer}/{i}"),
                    format!("expected {width} entries, found {}", r.len()),
                ))
            }
        })
        .collect()
}

pub fn int(x: &Int) -> Result<i64, CliError> {
    i64::try_from(x).map_err(|_| CliError::new("overflow", format!("{x} does not fit in 64 bits")))
}

pub fn ints(v: &[Int]) -> Result<Vec<i64>, CliError> {
    v.iter().map(int).collect()
}

pub fn rows(vs: &[Vector]) -> Result<Vec<Vec<i64>>, CliError> {
    vs.iter().map(|v| ints(v)).collect()
}

fn group(free_rank: usize, torsion: &[i64], pointer: &str) -> Result<FgAbelianGroup, CliError> {
    FgAbelianGroup::new(free_rank, torsion.iter().map(|&t| Int::from(t)).collect())
        .map_err(|e| CliError::schema(pointer, e.to_string()))
}

pub fn group_doc(g: &FgAbelianGroup) -> Result<GroupDoc, CliError> {
    Ok(GroupDoc {
        free_rank: g.free_rank(),
        torsion: ints(g.torsion())?,
    })
}

pub fn fan(doc: &FanDoc) -> Result<Fan, CliError> {
    check_schema(&doc.schema)?;
    let rays = vectors(&doc.rays, doc.lattice_rank, "/rays")?;
    for (c, cone) in doc.max_cones.iter().enumerate() {
        if let Some(k) = cone.iter().position(|&i| i >= rays.len()) {
            return Err(CliError::schema(
                &format!("/max_cones/{c}/{k}"),
                format!("ray index {} out of range", cone[k]),
            ));
        }
    }
    let f = Fan::new(doc.lattice_rank, rays, doc.max_cones.clone());
    let problems = validate_fan(&f);
    if !problems.is_empty() {
        return Err(CliError::new("invalid-fan", problems.join("; ")));
    }
    Ok(f)
}

pub fn fan_doc(f: &Fan) -> Result<FanDoc, CliError> {
    Ok(FanDoc {
        schema: schema(),
        lattice_rank: f.lattice_rank(),
        rays: rows(f.rays())?,
        max_cones: f.max_cones().to_vec(),
        divisor: None,
    })
}

pub fn divisor(doc: &Option<DivisorDoc>, f: &Fan) -> Result<WeilDivisor, CliError> {
    let d = doc
        .as_ref()
        .ok_or_else(|| CliError::schema("/divisor", "this command needs a \"divisor\" field".into()))?;
    let n = f.rays().len();
    if d.rays != n {
        return Err(CliError::schema("/divisor/rays", format!("fan has {n} rays, divisor names {}", d.rays)));
    }
    if d.coeffs.len() != n {
        return Err(CliError::schema("/divisor/coeffs", format!("expected {n} entries, found {}", d.coeffs.len())));
    }
    Ok(WeilDivisor::new(vector(&d.coeffs)))
}

fn grading(g: &GradingDoc, d: usize) -> Result<GroupHom, CliError> {
    let k = group(g.free_rank, &g.torsion, "/grading/torsion")?;
    if g.matrix.len() != k.dim() {
        return Err(CliError::schema(
            "/grading/matrix",
            format!("expected {} rows, found {}", k.dim(), g.matrix.len()),
        ));
    }
    let m = vectors(&g.matrix, d, "/grading/matrix")?;
    let m = IntMatrix::from_rows(&m, d).map_err(|e| CliError::schema("/grading/matrix", e.to_string()))?;
    GroupHom::new(FgAbelianGroup::free(d), k, m).map_err(|e| CliError::schema("/grading/matrix", e.to_string()))
}

pub fn algebra(doc: &AlgebraDoc) -> Result<GradedMonoidAlgebra, CliError> {
    check_schema(&doc.schema)?;
    let d = match doc.monoid_generators.first() {
        Some(g) => g.len(),
        None => doc.grading.matrix.first().map_or(0, Vec::len),
    };
    let gens = vectors(&doc.monoid_generators, d, "/monoid_generators")?;
    let hom = grading(&doc.grading, d)?;
    if let Some(k) = doc.inverted.iter().position(|&i| i >= gens.len()) {
        return Err(CliError::schema(&format!("/inverted/{k}"), "generator index out of range".into()));
    }
    let m = AffineMonoid::new(d, gens).map_err(|e| CliError::schema("/monoid_generators", e.to_string()))?;
    GradedMonoidAlgebra::new(m, hom, doc.inverted.clone()).map_err(CliError::from)
}

pub fn algebra_doc(r: &GradedMonoidAlgebra) -> Result<AlgebraDoc, CliError> {
    let k = r.grading_group();
    Ok(AlgebraDoc {
        schema: schema(),
        monoid_generators: rows(r.monoid().generators())?,
        grading: GradingDoc {
            free_rank: k.free_rank(),
            torsion: ints(k.torsion())?,
            matrix: rows(&r.grading().matrix().row_vectors())?,
        },
        inverted: r.inverted().to_vec(),
    })
}

pub fn divisorial(doc: &DivisorialDoc) -> Result<DivisorialAlgebraSpec, CliError> {
    check_schema(&doc.schema)?;
    let rays = vectors(&doc.rays, doc.lattice_rank, "/rays")?;
    let k = group(doc.k.free_rank, &doc.k.torsion, "/k/torsion")?;
    if doc.phi.len() != rays.len() {
        return Err(CliError::schema("/phi", format!("expected {} rows, found {}", rays.len(), doc.phi.len())));
    }
    let m = vectors(&doc.phi, k.dim(), "/phi")?;
    let m = IntMatrix::from_rows(&m, k.dim()).map_err(|e| CliError::schema("/phi", e.to_string()))?;
    let phi = GroupHom::new(k, FgAbelianGroup::free(rays.len()), m).map_err(|e| CliError::schema("/phi", e.to_string()))?;
    DivisorialAlgebraSpec::new(doc.lattice_rank, rays, phi).map_err(CliError::from)
}

fn int_value(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(x.to_string()),
    }
}

fn vector_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn witness_value(w: &WitnessValue) -> Value {
    match w {
        WitnessValue::Bool(b) => Value::Bool(*b),
        WitnessValue::Int(x) => int_value(x),
        WitnessValue::Text(s) => Value::String(s.clone()),
        WitnessValue::Indices(v) => Value::Array(v.iter().map(|&i| Value::from(i)).collect()),
        WitnessValue::Vector(v) => vector_value(v),
        WitnessValue::Vectors(vs) => Value::Array(vs.iter().map(|v| vector_value(v)).collect()),
        WitnessValue::Group(g) => {
            let mut m = Map::new();
            m.insert("free_rank".into(), Value::from(g.free_rank()));
            m.insert("torsion".into(), vector_value(g.torsion()));
            Value::Object(m)
        }
    }
}

/// Report entries; passing conditions keep their witness only when `verbose`.
pub fn report(rep: &VerificationReport, verbose: bool) -> Vec<ReportEntry> {
    rep.conditions
        .iter()
        .map(|c| {
            let mut witness = Map::new();
            if verbose || !c.pass {
                for (k, v) in &c.witness.entries {
                    witness.insert(k.clone(), witness_value(v));
                }
            }
            ReportEntry {
                id: c.id.clone(),
                pass: c.pass,
                witness,
            }
        })
        .collect()
}
