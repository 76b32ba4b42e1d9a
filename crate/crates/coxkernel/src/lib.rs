//! JSON schemas, DOT output and the command-line front end for
//! `coxkernel-core`.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing condition
//! (the report is still written), 2 on any input error.

pub mod dot;
pub mod schema;

mod convert;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxkernel_core::cones::Fan;
use coxkernel_core::cox::{
    characteristic_space, cox_presentation, find_prime_system, orbit_face_lattice, reconstruct_from_prime_system,
    toric_f1_points, verify_theorem_a, verify_theorem_b, verify_theorem_c, verify_theorem_d, VerificationReport,
};
use coxkernel_core::divisors::{
    class_group, divisor_class, divisorial_algebra_presentation, global_sections, LatticeBox,
};
use coxkernel_core::graded::k_spectrum;
use coxkernel_core::lattice::{Int, Vector};
use coxkernel_core::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::schema::*;

#[derive(Parser, Debug, Clone)]
#[command(name = "coxkernel", version, about = "Cox rings, graded spectra and class groups of toric data")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Keep witnesses of passing conditions in reports.
    #[arg(long, global = true)]
    pub witnesses: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Class group of a fan and the classes of its ray divisors.
    Clgroup(Input),
    /// Cox ring of a fan, as an algebra document.
    Coxring(Input),
    /// Monomial graded spectrum of a faithfully graded algebra.
    Kspec(Input),
    /// Points of the toric graded scheme and orbit lattices of the maximal cones.
    Orbits(Input),
    /// Affine charts of the characteristic space of a fan.
    Charspace(Input),
    /// Check the conditions of theorem A, B, C (fan input) or D (algebra or divisorial input).
    Verify {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: Theorem,
        #[command(flatten)]
        input: Input,
    },
    /// Fan glued from a graded algebra admitting a prime system.
    Reconstruct(Input),
    /// Global sections of the divisor attached to a fan.
    Sections {
        /// Enumeration box `x1,y1:x2,y2`, bounds inclusive.
        #[arg(long = "box", value_parser = parse_box, allow_hyphen_values = true)]
        bounding_box: Option<LatticeBox>,
        #[command(flatten)]
        input: Input,
    },
    /// Class, support and effectivity of the divisor attached to a fan.
    Divisor(Input),
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    A,
    B,
    C,
    D,
}

fn parse_box(s: &str) -> Result<LatticeBox, String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lower:upper")?;
    let coords = |t: &str| -> Result<Vector, String> {
        t.split(',')
            .map(|x| x.trim().parse::<i64>().map(Int::from).map_err(|e| format!("{x:?}: {e}")))
            .collect()
    };
    let (lower, upper) = (coords(lo)?, coords(hi)?);
    if lower.len() != upper.len() {
        return Err("corners of different rank".into());
    }
    Ok(LatticeBox { lower, upper })
}

/// Input error reported with exit status 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub pointer: Option<String>,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: kind.into(),
            message: message.into(),
            pointer: None,
            line: None,
            column: None,
        }
    }

    pub fn schema(pointer: &str, message: String) -> Self {
        CliError {
            pointer: Some(pointer.into()),
            ..CliError::new("schema", message)
        }
    }

    fn doc(&self) -> ErrorDoc {
        ErrorDoc {
            line: self.line,
            column: self.column,
            pointer: self.pointer.clone(),
            ..ErrorDoc::new(&self.kind, self.message.clone())
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Dimension(_) => "dimension",
            Error::IllDefinedHom(_) => "ill-defined-hom",
            Error::InvalidGroup(_) => "invalid-group",
            Error::NotPointed => "not-pointed",
            Error::NotFaithful => "not-faithful",
            Error::Foreign(_) => "foreign",
            Error::Precondition(_) => "precondition",
            Error::InvalidFan(_) => "invalid-fan",
            Error::TorusFactor => "torus-factor",
            Error::EnumerationBound(_) => "enumeration-bound",
            Error::Coarsening(_) => "coarsening",
            Error::Gluing(_) => "gluing",
        };
        CliError::new(kind, e.to_string())
    }
}

/// Exit status with the text written to standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(e: &CliError) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: serde_json::to_string(&e.doc()).expect("error document") + "\n",
        }
    }
}

fn json_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => write!(out, "{index}").unwrap(),
            Segment::Map { key } | Segment::Enum { variant: key } => {
                out.push_str(&key.replace('~', "~0").replace('/', "~1"))
            }
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

/// Parses a document, reporting syntax errors by line and column and schema
/// violations by JSON pointer.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let located = |kind: &str, e: &serde_json::Error| CliError {
        line: Some(e.line()),
        column: Some(e.column()),
        ..CliError::new(kind, e.to_string())
    };
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let pointer = json_pointer(e.path());
        let inner = e.into_inner();
        if inner.is_data() {
            CliError {
                pointer: Some(pointer),
                ..located("schema", &inner)
            }
        } else {
            located("malformed-json", &inner)
        }
    })?;
    de.end().map_err(|e| located("malformed-json", &e))?;
    Ok(value)
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

fn fmt_indices(v: &[usize]) -> String {
    format!("{v:?}")
}

fn fmt_vectors(vs: &[Vec<i64>]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| format!("{v:?}")).collect();
    parts.join(" ")
}

/// Runs a job on the contents of its input file.
pub fn run(cli: &Cli) -> Outcome {
    if let Err(e) = check_format(cli) {
        return Outcome::failure(&e);
    }
    let path = match &cli.command {
        Command::Clgroup(i)
        | Command::Coxring(i)
        | Command::Kspec(i)
        | Command::Orbits(i)
        | Command::Charspace(i)
        | Command::Reconstruct(i)
        | Command::Divisor(i)
        | Command::Verify { input: i, .. }
        | Command::Sections { input: i, .. } => &i.input,
    };
    match std::fs::read_to_string(path) {
        Ok(text) => run_on(cli, &text),
        Err(e) => Outcome::failure(&CliError::new("io", format!("{}: {e}", path.display()))),
    }
}

fn check_format(cli: &Cli) -> Result<(), CliError> {
    let dot_ok = matches!(cli.command, Command::Kspec(_) | Command::Orbits(_));
    if cli.format == Format::Dot && !dot_ok {
        return Err(CliError::new("usage", "--format dot is available for kspec and orbits"));
    }
    Ok(())
}

/// Runs a job on the given input text instead of reading its input file.
pub fn run_on(cli: &Cli, text: &str) -> Outcome {
    if let Err(e) = check_format(cli) {
        return Outcome::failure(&e);
    }
    match dispatch(cli, text) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome::failure(&e),
    }
}

fn fan_input(text: &str) -> Result<(FanDoc, Fan), CliError> {
    let doc: FanDoc = parse(text)?;
    let f = convert::fan(&doc)?;
    Ok((doc, f))
}

fn dispatch(cli: &Cli, text: &str) -> Result<(i32, String), CliError> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Clgroup(_) => clgroup(fan_input(text)?.1, fmt)?,
        Command::Coxring(_) => {
            let p = cox_presentation(&fan_input(text)?.1)?;
            let doc = convert::algebra_doc(p.ring())?;
            match fmt {
                Format::Text => format!(
                    "Cox ring: polynomial ring in {} variables graded by {}\n{}",
                    p.n_rays(),
                    p.class_group(),
                    p.degrees()
                        .iter()
                        .enumerate()
                        .map(|(i, d)| Ok(format!("x{i}: degree {:?}\n", convert::ints(d)?)))
                        .collect::<Result<String, CliError>>()?
                ),
                _ => to_json(&doc),
            }
        }
        Command::Kspec(_) => kspec(text, fmt)?,
        Command::Orbits(_) => orbits(fan_input(text)?.1, fmt)?,
        Command::Charspace(_) => charspace(fan_input(text)?.1, fmt)?,
        Command::Verify { theorem, .. } => return verify(text, *theorem, fmt, cli.witnesses),
        Command::Reconstruct(_) => {
            let doc: AlgebraDoc = parse(text)?;
            let r = convert::algebra(&doc)?;
            let system = find_prime_system(&r)?;
            let f = reconstruct_from_prime_system(&r, &system)?;
            let out = convert::fan_doc(&f)?;
            match fmt {
                Format::Text => format!(
                    "prime system {}\nrays {}\nmax cones {}\n",
                    fmt_indices(&system),
                    fmt_vectors(&out.rays),
                    out.max_cones.iter().map(|c| fmt_indices(c)).collect::<Vec<_>>().join(" ")
                ),
                _ => to_json(&out),
            }
        }
        Command::Sections { bounding_box, .. } => {
            let (doc, f) = fan_input(text)?;
            let d = convert::divisor(&doc.divisor, &f)?;
            if let Some(b) = bounding_box {
                if b.lower.len() != f.lattice_rank() {
                    return Err(CliError::new(
                        "usage",
                        format!("--box has rank {}, fan has rank {}", b.lower.len(), f.lattice_rank()),
                    ));
                }
            }
            let pts = convert::rows(&global_sections(&f, &d, bounding_box.as_ref())?)?;
            match fmt {
                Format::Text => format!("{} sections\n{}\n", pts.len(), fmt_vectors(&pts)),
                _ => to_json(&SectionsDoc {
                    schema: schema(),
                    count: pts.len(),
                    points: pts,
                }),
            }
        }
        Command::Divisor(_) => {
            let (doc, f) = fan_input(text)?;
            let d = convert::divisor(&doc.divisor, &f)?;
            let (cl, deg) = class_group(&f)?;
            let class = divisor_class(&deg, &d)?;
            let out = DivisorInfoDoc {
                schema: schema(),
                cl: convert::group_doc(&cl)?,
                class: convert::ints(&class)?,
                support: d.support(),
                effective: d.is_effective(),
                principal: cl.is_zero(&class),
            };
            match fmt {
                Format::Text => format!(
                    "class {:?} in {cl}\nsupport {}\neffective {}\nprincipal {}\n",
                    out.class,
                    fmt_indices(&out.support),
                    out.effective,
                    out.principal
                ),
                _ => to_json(&out),
            }
        }
    };
    Ok((0, out))
}

fn clgroup(f: Fan, fmt: Format) -> Result<String, CliError> {
    let (cl, deg) = class_group(&f)?;
    let degrees: Vec<Vec<i64>> = (0..f.rays().len())
        .map(|i| convert::ints(&deg.matrix().column(i)))
        .collect::<Result<_, _>>()?;
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("Cl = {cl}\n");
            for (i, d) in degrees.iter().enumerate() {
                writeln!(s, "D{i}: {d:?}").unwrap();
            }
            s
        }
        _ => to_json(&ClGroupDoc {
            schema: schema(),
            cl: convert::group_doc(&cl)?,
            degrees,
        }),
    })
}

fn covers<T>(p: &coxkernel_core::Poset<T>) -> Vec<[usize; 2]> {
    p.covers().into_iter().map(|(a, b)| [a, b]).collect()
}

fn kspec(text: &str, fmt: Format) -> Result<String, CliError> {
    let doc: AlgebraDoc = parse(text)?;
    let r = convert::algebra(&doc)?;
    let spec = k_spectrum(&r)?;
    let n = r.effective_monoid().generators().len();
    let point = |face: &[usize]| SpectrumPointDoc {
        face: face.to_vec(),
        ideal: (0..n).filter(|i| !face.contains(i)).collect(),
    };
    let label = |p: &SpectrumPointDoc| format!("face {}; ideal <{}>", fmt_indices(&p.face), join(&p.ideal));
    Ok(match fmt {
        Format::Dot => dot::emit_dot(&spec, |p| label(&point(&p.face.generators))),
        Format::Text => {
            let mut s = format!("{} points\n", spec.len());
            for p in spec.elements() {
                writeln!(s, "{}", label(&point(&p.face.generators))).unwrap();
            }
            s
        }
        Format::Json => to_json(&SpectrumDoc {
            schema: schema(),
            effective_generators: convert::rows(r.effective_monoid().generators())?,
            points: spec.elements().iter().map(|p| point(&p.face.generators)).collect(),
            covers: covers(&spec),
        }),
    })
}

fn join(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

/// Index in `cone` of the fan ray pointing the same way as `v`.
fn fan_ray(f: &Fan, cone: &[usize], v: &[Int]) -> usize {
    let parallel = |w: &[Int]| {
        let dot: Int = v.iter().zip(w).map(|(a, b)| a * b).sum();
        dot > Int::from(0)
            && (0..v.len()).all(|i| (0..v.len()).all(|j| &v[i] * &w[j] == &v[j] * &w[i]))
    };
    *cone
        .iter()
        .find(|&&i| parallel(&f.rays()[i]))
        .expect("cone rays come from the fan")
}

fn orbits(f: Fan, fmt: Format) -> Result<String, CliError> {
    let pts = toric_f1_points(&f)?;
    let label = |c: &[usize]| format!("cone {}", fmt_indices(c));
    if fmt == Format::Dot {
        return Ok(dot::emit_dot(&pts.specialization, |&i| label(&pts.cones[i])));
    }
    let mut charts = Vec::new();
    for cone in f.max_cones() {
        let sigma = f.cone_of(cone);
        let lattice = orbit_face_lattice(&sigma)?;
        let to_fan = |face: &[usize]| {
            let mut idx: Vec<usize> = face.iter().map(|&k| fan_ray(&f, cone, &sigma.rays()[k])).collect();
            idx.sort_unstable();
            idx
        };
        let nodes = lattice
            .elements()
            .iter()
            .map(|n| {
                Ok(OrbitNodeDoc {
                    cone_face: to_fan(&n.cone_face),
                    dual_face: n.dual_face.clone(),
                    ideal: convert::rows(&n.ideal)?,
                    m_degrees: convert::rows(&n.m_degrees)?,
                    cl_degrees: convert::rows(&n.cl_degrees)?,
                    prime: n.prime,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        charts.push(OrbitChartDoc {
            cone: cone.clone(),
            nodes,
            covers: covers(&lattice),
        });
    }
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("{} points\n", pts.cones.len());
            for (i, c) in pts.cones.iter().enumerate() {
                let below: Vec<usize> = (0..pts.cones.len()).filter(|&j| pts.specialization.lt(j, i)).collect();
                writeln!(s, "{}: specializes to points {}", label(c), fmt_indices(&below)).unwrap();
            }
            for c in &charts {
                writeln!(s, "chart {}: {} orbits", fmt_indices(&c.cone), c.nodes.len()).unwrap();
            }
            s
        }
        _ => to_json(&OrbitsDoc {
            schema: schema(),
            points: pts.cones.clone(),
            covers: covers(&pts.specialization),
            effective: pts.effective.clone(),
            inverse_ok: pts.inverse_ok.clone(),
            charts,
        }),
    })
}

fn charspace(f: Fan, fmt: Format) -> Result<String, CliError> {
    let p = cox_presentation(&f)?;
    let charts = characteristic_space(&p)?
        .iter()
        .map(|c| {
            Ok(CharSpaceChartDoc {
                cone: c.cone.clone(),
                inverted: c.inverted.clone(),
                base: convert::rows(&c.base)?,
                degree_zero: convert::rows(c.degree_zero.generators())?,
                isomorphism: c.is_isomorphism(),
                hilbert_bijection: c.hilbert_bijection,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            for c in &charts {
                writeln!(
                    s,
                    "cone {}: invert {}; isomorphism {}; hilbert bijection {}",
                    fmt_indices(&c.cone),
                    fmt_indices(&c.inverted),
                    c.isomorphism,
                    c.hilbert_bijection
                )
                .unwrap();
            }
            s
        }
        _ => to_json(&CharSpaceDoc { schema: schema(), charts }),
    })
}

fn verify(text: &str, theorem: Theorem, fmt: Format, witnesses: bool) -> Result<(i32, String), CliError> {
    let rep: VerificationReport = match theorem {
        Theorem::D => {
            let value: Value = parse(text)?;
            if value.get("phi").is_some() {
                let spec = convert::divisorial(&parse::<DivisorialDoc>(text)?)?;
                let pres = divisorial_algebra_presentation(&spec)?;
                verify_theorem_d(&pres.algebra, Some(&spec))
            } else {
                verify_theorem_d(&convert::algebra(&parse::<AlgebraDoc>(text)?)?, None)
            }
        }
        t => {
            let p = cox_presentation(&fan_input(text)?.1)?;
            match t {
                Theorem::A => verify_theorem_a(&p),
                Theorem::B => verify_theorem_b(&p)?,
                _ => verify_theorem_c(&p)?,
            }
        }
    };
    let entries = convert::report(&rep, witnesses);
    let out = match fmt {
        Format::Text => {
            let mut s = String::new();
            for (e, c) in entries.iter().zip(&rep.conditions) {
                let verdict = if e.pass { "PASS" } else { "FAIL" };
                writeln!(s, "{verdict} {} {}", e.id, c.statement).unwrap();
                if !e.witness.is_empty() {
                    writeln!(s, "    {}", Value::Object(e.witness.clone())).unwrap();
                }
            }
            s
        }
        _ => to_json(&entries),
    };
    Ok((if rep.all_pass() { 0 } else { 1 }, out))
}
