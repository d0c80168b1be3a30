//! Command-line front end for cliffkit.
//!
//! Every command renders either a JSON document tagged with
//! [`cliffkit::SCHEMA`] or plain text. Exit codes: `0` success, `2` usage
//! error (bad flags, out-of-range dimensions), `3` internal consistency
//! failure (two independent computations disagree).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliffkit::algebra::GroundField;
use cliffkit::audit::{run_audit, AuditOptions};
use cliffkit::classify::{algebra_class, periodic_table, periodic_table_text};
use cliffkit::field::{
    field_bivector, helicity_split, ideal_projection, is_single_column, maxwell_componentwise, nabla_a, nabla_f, split_pattern,
    Basis, DHSpinor, FieldDerivatives, MaxwellResiduals,
};
use cliffkit::lorentz::{
    bcommut2_checks, bcommut_checks, build_block_ops, real_permutation_audit, symmetry_permutation_audit, RepLabel,
    OPERATOR_NAMES,
};
use cliffkit::num::{fmt_q, parse_q, Entry};
use cliffkit::quotient::quotient_report;
use cliffkit::reflect::{build_wec, real_aut_type, AutType, RealAut, ReflectionData};
use cliffkit::spinor::{find_primitive_idempotent, idempotent_k, spinor_k_repr, tensor_pauli_rep, Idempotent};
use cliffkit::vee::{build_vee_group, salingaros_type, vee_center, vee_group_id};
use cliffkit::{Blade, Error, Mat, Signature, Q, SCHEMA};

/// Default bound on `p+q` for commands that build matrices.
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "cliffkit", version, about = "Exact Clifford algebra computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ring type, matrix form, Brauer–Wall class and discrete-symmetry group.
    Classify(SigArgs),
    /// The periodic table of `Cl(p,q)` for `p, q ≤ max`.
    Table {
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Salingaros vee group with its multiplication table.
    Veegroup(SigArgs),
    /// Spinor representation with the matrices W, E, C.
    Rep(RepArgs),
    /// ε-quotient of an odd-dimensional algebra and the surviving symmetries.
    Quotient(SigArgs),
    /// Gel'fand–Naimark operators, bracket checks and permutation audits.
    Lorentz(LorentzArgs),
    /// Dirac–Hestenes spinors and the electromagnetic field.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Run the consolidated self-check.
    Audit(AuditArgs),
}

/// `--p/--q` for `Cl(p,q)`, `--n` for `C_n` (with `--p/--q` as its real form).
#[derive(Args, Debug, Clone, Default)]
pub struct SigArgs {
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct RepArgs {
    #[command(flatten)]
    pub sig: SigArgs,
    /// `auto` or a list of signed blades such as `e1,-e34`.
    #[arg(long, default_value = "auto")]
    pub idempotent: String,
    /// Use a fixed basis instead of the ideal construction.
    #[arg(long, value_parser = parse_basis)]
    pub basis: Option<Basis>,
}

#[derive(Args, Debug, Clone)]
pub struct LorentzArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub l0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub l1: Option<String>,
    /// Check the bracket relations for every label of dimension ≤ max.
    #[arg(long)]
    pub max: Option<usize>,
    /// Permutation audit of the discrete symmetries in `C_n`.
    #[arg(long)]
    pub audit: Option<usize>,
    /// Real permutation audit of `Cl(p,q)`.
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum FieldCmd {
    /// Matrix, ideal projection and helicity split of a Dirac–Hestenes spinor.
    Dh {
        /// `a0,a01,a02,a03,a12,a13,a23,a0123`
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, value_parser = parse_basis, default_value = "gamma")]
        basis: Basis,
    },
    /// `∇A` for paravectors: electric and magnetic components.
    Em {
        /// `∂0,∂1,∂2,∂3`
        #[arg(long, allow_hyphen_values = true)]
        partials: String,
        /// `A0,A1,A2,A3`
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
    },
    /// Maxwell residuals from `∇F`; 24 numbers `∂μ(E1,E2,E3,H1,H2,H3)` for μ = 0..3.
    Maxwell {
        #[arg(long, allow_hyphen_values = true)]
        derivs: String,
    },
    /// `φ = ΣF_iγ0γi` with `F = E + iH`, its ideal column and its reversion.
    Bivector {
        #[arg(long = "E", allow_hyphen_values = true)]
        e: String,
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct AuditArgs {
    /// Run only the named check.
    #[arg(long)]
    pub only: Option<String>,
    /// Fault injection for testing the audit itself.
    #[arg(long, hide = true)]
    pub corrupt_sign: bool,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::parse(s).ok_or_else(|| format!("unknown basis '{s}' (gamma, dirac, pauli-tensor)"))
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: if e.is_consistency() { 3 } else { 2 }, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Guard for matrix-building commands, overridable via `CLIFFKIT_MAX_DIM`.
pub fn max_dim() -> Result<usize, Error> {
    match std::env::var("CLIFFKIT_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Invalid(format!("CLIFFKIT_MAX_DIM={v} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn guard(n: usize) -> Result<(), Error> {
    let max = max_dim()?;
    if n > max {
        return Err(Error::SizeGuard { n, max });
    }
    Ok(())
}

/// Algebra selected by `--p/--q/--n`, with the real form `(p, q)`.
fn resolve(args: &SigArgs) -> Result<(Signature, (usize, usize)), Error> {
    match (args.n, args.p, args.q) {
        (None, None, None) => Err(Error::Invalid("give --p/--q for Cl(p,q) or --n for C_n".into())),
        (None, p, q) => {
            let (p, q) = (p.unwrap_or(0), q.unwrap_or(0));
            Ok((Signature::real(p, q), (p, q)))
        }
        (Some(n), None, None) => Ok((Signature::complex(n), (n, 0))),
        (Some(n), p, q) => {
            let (p, q) = (p.unwrap_or(0), q.unwrap_or(0));
            if p + q != n {
                return Err(Error::Invalid(format!("real form ({p},{q}) does not have dimension n = {n}")));
            }
            Ok((Signature::complex(n), (p, q)))
        }
    }
}

fn parse_list(s: &str, expected: usize, what: &str) -> Result<Vec<Q>, Error> {
    let items: Vec<Q> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_q(t).ok_or_else(|| Error::Invalid(format!("{what}: '{t}' is not a rational number"))))
        .collect::<Result<_, _>>()?;
    if items.len() != expected {
        return Err(Error::Invalid(format!("{what}: expected {expected} numbers, got {}", items.len())));
    }
    Ok(items)
}

/// Parse `e1,-e34` or `+e1 -e[1,10]` into signed blades.
pub fn parse_signed_blades(s: &str) -> Result<Vec<(i8, Blade)>, Error> {
    let mut items = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c == ',' || c.is_whitespace()) {
            items.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    items.push(cur);
    items
        .into_iter()
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            Ok((sign, Blade::parse(body)?))
        })
        .collect()
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((name, value, text)) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut doc = json!({ "schema": SCHEMA, "command": name });
                    if let (Value::Object(d), Value::Object(v)) = (&mut doc, value) {
                        d.extend(v);
                    }
                    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut t = text;
                    if !t.ends_with('\n') {
                        t.push('\n');
                    }
                    t
                }
            };
            Outcome::ok(stdout)
        }
        Err(Failure::Lib(e)) => Outcome::error(&e),
        Err(Failure::Check { name, value, text }) => {
            let mut out = Outcome::error(&Error::Consistency(format!("check failed: {name}")));
            out.stdout = match cli.format {
                Format::Json => {
                    let mut doc = json!({ "schema": SCHEMA, "command": "audit" });
                    if let (Value::Object(d), Value::Object(v)) = (&mut doc, value) {
                        d.extend(v);
                    }
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialize"))
                }
                Format::Text => text,
            };
            out
        }
    }
}

enum Failure {
    Lib(Error),
    /// A consistency check failed but its report is still printed.
    Check { name: String, value: Value, text: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Rendered = (&'static str, Value, String);

fn dispatch(cli: &Cli) -> Result<Rendered, Failure> {
    Ok(match &cli.command {
        Command::Classify(a) => classify(a)?,
        Command::Table { max } => table(*max),
        Command::Veegroup(a) => veegroup(a)?,
        Command::Rep(a) => rep(a)?,
        Command::Quotient(a) => quotient(a)?,
        Command::Lorentz(a) => lorentz(a)?,
        Command::Field { cmd } => field(cmd)?,
        Command::Audit(a) => return audit(a),
    })
}

fn aut_json(a: &AutType) -> Value {
    let cover = a.cover();
    json!({
        "aut_group": a.group.to_string(),
        "signature": a.signature.to_string(),
        "cover": cover.cover.to_string(),
        "pin": cover.label(),
        "cliffordian": cover.cliffordian,
    })
}

fn aut_text(a: &AutType) -> String {
    let c = a.cover();
    format!("{} {} cover {} ({}, {})", a.group, a.signature, c.cover, c.label(), if c.cliffordian { "Cliffordian" } else { "non-Cliffordian" })
}

fn classify(args: &SigArgs) -> Result<Rendered, Error> {
    let (sig, _) = resolve(args)?;
    let c = algebra_class(sig);
    let mut v = json!({
        "algebra": sig.to_string(),
        "p": sig.p,
        "q": sig.q,
        "n": sig.n(),
        "field": if sig.is_complex() { "C" } else { "R" },
        "ring": c.ring.to_string(),
        "matrix_form": c.matrix_form.to_string(),
        "simple": c.simple,
        "mod8": c.mod8,
        "bw_class": c.bw_class,
        "idempotent_factors": if sig.is_complex() { Value::Null } else { json!(idempotent_k(sig)) },
    });
    let mut text = format!("{sig}: {}  ring {}  simple {}  p-q mod 8 = {}  BW class {}\n", c.matrix_form, c.ring, c.simple, c.mod8, c.bw_class);
    let obj = v.as_object_mut().expect("object");
    let n = sig.n();
    let within = max_dim().map(|m| n <= m)?;
    if n == 0 {
        obj.insert("aut_group".into(), json!("1"));
        for k in ["signature", "cover", "pin", "cliffordian"] {
            obj.insert(k.into(), Value::Null);
        }
        text.push_str("automorphism group: trivial\n");
    } else if !within || (sig.is_complex() && n % 2 == 1) {
        obj.insert("aut_group".into(), Value::Null);
        obj.insert(
            "note".into(),
            json!(if within { "odd complex dimension: see `quotient`" } else { "matrix data skipped: p+q exceeds CLIFFKIT_MAX_DIM" }),
        );
    } else {
        match real_aut_type(sig)? {
            RealAut::Single(a) => {
                if let Value::Object(extra) = aut_json(&a) {
                    obj.extend(extra);
                }
                let _ = writeln!(text, "automorphisms: {}", aut_text(&a));
            }
            RealAut::Pair { d1, d1_prime } => {
                let comps: Vec<Value> = d1
                    .iter()
                    .chain(d1_prime.iter())
                    .map(|(s, a)| {
                        let mut x = aut_json(a);
                        x.as_object_mut().expect("object").insert("algebra".into(), json!(s.to_string()));
                        let _ = writeln!(text, "summand {s}: {}", aut_text(a));
                        x
                    })
                    .collect();
                obj.insert("aut_group".into(), Value::Null);
                obj.insert("components".into(), json!(comps));
            }
        }
    }
    Ok(("classify", v, text))
}

fn table(max: usize) -> Rendered {
    let grid: Vec<Vec<String>> =
        periodic_table(max, max).iter().map(|row| row.iter().map(|c| c.matrix_form.to_string()).collect()).collect();
    ("table", json!({ "max": max, "layout": "rows q = 0..max, columns p = 0..max", "cells": grid }), periodic_table_text(max, max))
}

fn veegroup(args: &SigArgs) -> Result<Rendered, Error> {
    let (sig, _) = resolve(args)?;
    if sig.is_complex() {
        return Err(Error::Invalid("vee groups are defined for real signatures".into()));
    }
    guard(sig.n())?;
    let v = build_vee_group(sig)?;
    let id = vee_group_id(&v)?;
    let mut val = json!({
        "algebra": sig.to_string(),
        "order": v.order(),
        "group": id.to_string(),
        "salingaros_type": salingaros_type(sig).to_string(),
        "center": vee_center(sig).to_string(),
    });
    let mut text = format!("G{}: order {}  {}  type {}  center {}\n", sig, v.order(), id, salingaros_type(sig), vee_center(sig));
    if sig.n() <= 4 {
        val.as_object_mut().expect("object").insert("labels".into(), json!(v.labels()));
        val.as_object_mut().expect("object").insert("table".into(), json!(v.group.table));
        text.push_str(&v.table_text());
    }
    Ok(("veegroup", val, text))
}

fn mat_json<T: Entry>(m: &Mat<T>) -> Value {
    json!(m.to_strings())
}

fn mat_text<T: Entry>(name: &str, m: &Mat<T>) -> String {
    format!("{name} =\n{m}\n")
}

fn reflection_json<T: Entry>(d: &ReflectionData<T>) -> Value {
    let cover = d.cover;
    json!({
        "W": mat_json(&d.w),
        "E": mat_json(&d.e),
        "C": mat_json(&d.c),
        "e_factors": d.e_factors(),
        "normalized": d.normalized,
        "signature": d.signature.to_string(),
        "abelian": d.abelian(),
        "group": d.group.to_string(),
        "cover": cover.cover.to_string(),
        "pin": cover.label(),
        "cliffordian": cover.cliffordian,
        "table": d.table_text(),
    })
}

fn rep_parts<T: Entry>(gens: &[Mat<T>], text: &mut String) -> Result<(Value, Value), Error> {
    let gj: Vec<Value> = gens.iter().map(mat_json).collect();
    for (i, g) in gens.iter().enumerate() {
        text.push_str(&mat_text(&format!("E{}", i + 1), g));
    }
    let refl = if gens.len() % 2 == 0 && !gens.is_empty() {
        let d = build_wec(gens)?;
        let _ = write!(text, "{}{}{}", mat_text("W", &d.w), mat_text("E", &d.e), mat_text("C", &d.c));
        let _ = writeln!(text, "signature {}  group {}  cover {}\n{}", d.signature, d.group, d.cover.cover, d.table_text());
        reflection_json(&d)
    } else {
        Value::Null
    };
    Ok((json!(gj), refl))
}

fn rep(args: &RepArgs) -> Result<Rendered, Error> {
    let (sig, _) = resolve(&args.sig)?;
    guard(sig.n())?;
    let mut text = String::new();
    let mut val = json!({ "algebra": sig.to_string() });
    let obj = val.as_object_mut().expect("object");
    let (gens, refl) = if let Some(basis) = args.basis {
        if args.idempotent != "auto" {
            return Err(Error::Invalid("--idempotent and --basis are exclusive".into()));
        }
        let r = basis.rep(sig)?;
        r.check_clifford_relations()?;
        obj.insert("basis".into(), serde_json::to_value(basis).expect("serializable"));
        obj.insert("route".into(), json!("fixed"));
        obj.insert("domain".into(), json!("C"));
        obj.insert("dim".into(), json!(r.dim()));
        let _ = writeln!(text, "{sig} in the {basis:?} basis, {}×{} over C", r.dim(), r.dim());
        rep_parts(&r.generators, &mut text)?
    } else if sig.is_complex() {
        if args.idempotent != "auto" {
            return Err(Error::Invalid("--idempotent applies to real signatures; C_n uses the tensor construction".into()));
        }
        let n = sig.n();
        if n == 0 {
            return Err(Error::Invalid("C_0 has no generators".into()));
        }
        let r = tensor_pauli_rep(n / 2, n % 2 == 1)?;
        obj.insert("route".into(), json!("tensor-pauli"));
        obj.insert("domain".into(), json!("C"));
        obj.insert("dim".into(), json!(r.dim()));
        let _ = writeln!(text, "{sig} by Pauli tensor products, {}×{} over C", r.dim(), r.dim());
        rep_parts(&r.generators, &mut text)?
    } else {
        if sig.n() == 0 {
            return Err(Error::Invalid("Cl(0,0) has no generators".into()));
        }
        let f = if args.idempotent == "auto" {
            find_primitive_idempotent(sig)?
        } else {
            Idempotent::from_blades(sig, &parse_signed_blades(&args.idempotent)?)?
        };
        let r = spinor_k_repr(sig, &f, None)?;
        r.check_clifford_relations()?;
        obj.insert("route".into(), json!("ideal"));
        obj.insert("idempotent".into(), json!(f.describe()));
        obj.insert("domain".into(), json!(r.domain()));
        obj.insert("dim".into(), json!(r.dim()));
        let _ = writeln!(text, "{sig}: f = {}, {}×{} over {}", f.describe(), r.dim(), r.dim(), r.domain());
        match &r {
            cliffkit::spinor::AnySpinorRep::Real(x) => rep_parts(&x.generators, &mut text)?,
            cliffkit::spinor::AnySpinorRep::Complex(x) => rep_parts(&x.generators, &mut text)?,
            cliffkit::spinor::AnySpinorRep::Quaternion(x) => rep_parts(&x.generators, &mut text)?,
        }
    };
    obj.insert("generators".into(), gens);
    obj.insert("reflections".into(), refl);
    Ok(("rep", val, text))
}

fn quotient(args: &SigArgs) -> Result<Rendered, Error> {
    let (sig, (p, q)) = resolve(args)?;
    guard(sig.n())?;
    let field = if sig.is_complex() { GroundField::Complex } else { GroundField::Real };
    let r = quotient_report(p, q, field)?;
    let mut text = format!(
        "{} → {}  ε = {}  class {}  quotient group {}\nλ+ = {}\nλ- = {}\n",
        r.source, r.target, r.epsilon, r.class, r.quotient_pin.label, r.lambda_plus, r.lambda_minus
    );
    for t in &r.transfers {
        let _ = writeln!(text, "{:<4} {:<20} {}  {}", format!("{:?}", t.transform), t.map, if t.transferred { "transfers" } else { "-" }, t.image);
    }
    Ok(("quotient", serde_json::to_value(&r).expect("serializable"), text))
}

fn parse_label(l0: &str, l1: &str) -> Result<RepLabel, Error> {
    let p = |s: &str| parse_q(s).ok_or_else(|| Error::Invalid(format!("'{s}' is not a rational number")));
    RepLabel::new(p(l0)?, p(l1)?)
}

fn lorentz(args: &LorentzArgs) -> Result<Rendered, Failure> {
    if let Some(n) = args.audit {
        guard(n)?;
        let a = symmetry_permutation_audit(n)?;
        let mut text = format!("C_{n}: group {}  E = product of {:?}\n", a.group, a.e_factors);
        for r in &a.rows {
            let _ = writeln!(
                text,
                "{:?} {:?} W {} E {} C {}  family {}  predicted {}{}",
                r.triple,
                r.membership,
                r.w,
                r.e,
                r.c,
                r.family.unwrap_or("?"),
                r.predicted.unwrap_or("?"),
                if r.matches { "" } else { "  MISMATCH" }
            );
        }
        let _ = writeln!(text, "consistent: {}  anomaly: {}", a.consistent, a.anomaly);
        if !a.consistent && !a.anomaly {
            return Err(Error::Consistency(format!("C_{n}: permutation verdicts disagree with the parity rule")).into());
        }
        return Ok(("lorentz", json!({ "mode": "audit", "audit": a }), text));
    }
    if args.p.is_some() || args.q.is_some() {
        let sig = Signature::real(args.p.unwrap_or(0), args.q.unwrap_or(0));
        guard(sig.n())?;
        let a = real_permutation_audit(sig)?;
        let mut text = format!("{sig}: type {}  group {}  brackets hold {}\n", a.ring_type, a.group, a.brackets_hold);
        for r in &a.rows {
            let _ = writeln!(text, "{:?} square {:+} W {} E {} C {}  family {}", r.triple, r.square, r.w, r.e, r.c, r.family.unwrap_or("?"));
        }
        if !a.brackets_hold {
            return Err(Error::Consistency(format!("{sig}: real model breaks the bracket relations")).into());
        }
        return Ok(("lorentz", json!({ "mode": "real-audit", "audit": a }), text));
    }
    if let Some(max) = args.max {
        let mut rows = Vec::new();
        let mut text = String::new();
        let mut all = true;
        for label in RepLabel::enumerate(max) {
            let ops = build_block_ops(&label)?;
            let failed: Vec<String> =
                bcommut_checks(&ops).into_iter().chain(bcommut2_checks(&ops)).filter(|c| !c.holds).map(|c| c.relation).collect();
            all &= failed.is_empty();
            let _ = writeln!(text, "{label} dim {}: {}", label.dim(), if failed.is_empty() { "ok".into() } else { failed.join(", ") });
            rows.push(json!({ "label": label.to_string(), "dim": label.dim(), "failed": failed }));
        }
        if !all {
            return Err(Error::Consistency("bracket relations fail for some label".into()).into());
        }
        return Ok(("lorentz", json!({ "mode": "brackets", "max": max, "labels": rows }), text));
    }
    let (Some(l0), Some(l1)) = (&args.l0, &args.l1) else {
        return Err(Error::Invalid("give --l0 and --l1, --max, --audit n, or --p/--q".into()).into());
    };
    let label = parse_label(l0, l1)?;
    let ops = build_block_ops(&label)?;
    let checks: Vec<_> = bcommut_checks(&ops).into_iter().chain(bcommut2_checks(&ops)).collect();
    let mut text = format!("{label}: dim {}  weights {}\n", label.dim(), label.weights().iter().map(fmt_q).collect::<Vec<_>>().join(", "));
    let mut opsj = serde_json::Map::new();
    for (name, m) in OPERATOR_NAMES.iter().zip(ops.all()) {
        text.push_str(&mat_text(name, &m));
        opsj.insert((*name).into(), mat_json(&m));
    }
    for c in &checks {
        let _ = writeln!(text, "{}: {}", c.relation, c.holds);
    }
    if checks.iter().any(|c| !c.holds) {
        return Err(Error::Consistency(format!("{label}: bracket relations fail")).into());
    }
    Ok((
        "lorentz",
        json!({ "mode": "operators", "label": label.to_string(), "dim": label.dim(), "operators": opsj, "checks": checks }),
        text,
    ))
}

fn cq_list(v: &[cliffkit::Cq]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn q_list(v: &[Q]) -> Value {
    json!(v.iter().map(fmt_q).collect::<Vec<_>>())
}

fn residuals_json(r: &MaxwellResiduals) -> Value {
    json!({
        "div_E": fmt_q(&r.div_e),
        "curl_H_minus_dt_E": q_list(&r.curl_h_minus_dt_e),
        "curl_E_plus_dt_H": q_list(&r.curl_e_plus_dt_h),
        "div_H": fmt_q(&r.div_h),
    })
}

fn field(cmd: &FieldCmd) -> Result<Rendered, Error> {
    match cmd {
        FieldCmd::Dh { coeffs, basis } => {
            if *basis != Basis::Gamma {
                return Err(Error::Invalid("Dirac–Hestenes matrices are defined in the gamma basis".into()));
            }
            let s = DHSpinor::from_coeffs(&parse_list(coeffs, 8, "--coeffs")?)?;
            let m = s.matrix();
            let proj = ideal_projection(&s);
            let split = helicity_split(&s);
            let pat = split_pattern(&s.phi());
            let pattern_ok = m == s.pattern_matrix();
            let single = is_single_column(&proj.matrix);
            let split_ok = split.plus == pat.plus && split.minus == pat.minus;
            if !(pattern_ok && single && split_ok) {
                return Err(Error::Consistency("spinor matrix, projection or split disagrees with its pattern".into()));
            }
            let text = format!(
                "φ = ({})\n{}{}{}{}",
                s.phi().iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                mat_text("matrix", &m),
                mat_text("projection", &proj.matrix),
                mat_text("phi+", &split.plus),
                mat_text("phi-", &split.minus)
            );
            Ok((
                "field",
                json!({
                    "mode": "dh",
                    "coeffs": q_list(&s.coeffs()),
                    "phi": cq_list(&s.phi()),
                    "matrix": mat_json(&m),
                    "projection": mat_json(&proj.matrix),
                    "column": cq_list(&proj.column),
                    "single_column": single,
                    "helicity_plus": mat_json(&split.plus),
                    "helicity_minus": mat_json(&split.minus),
                }),
                text,
            ))
        }
        FieldCmd::Em { partials, a } => {
            let d: [Q; 4] = parse_list(partials, 4, "--partials")?.try_into().expect("length checked");
            let a: [Q; 4] = parse_list(a, 4, "--A")?.try_into().expect("length checked");
            let f = nabla_a(&d, &a);
            let mv = f.multivector();
            let text = format!(
                "∇A = {mv}\nscalar {}\nE = ({})\nH = ({})\n",
                fmt_q(&f.scalar),
                f.e.iter().map(fmt_q).collect::<Vec<_>>().join(", "),
                f.h.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
            );
            Ok((
                "field",
                json!({ "mode": "em", "product": mv, "scalar": fmt_q(&f.scalar), "E": q_list(&f.e), "H": q_list(&f.h) }),
                text,
            ))
        }
        FieldCmd::Maxwell { derivs } => {
            let v = parse_list(derivs, 24, "--derivs")?;
            let d: FieldDerivatives = std::array::from_fn(|mu| std::array::from_fn(|k| v[6 * mu + k].clone()));
            let r = nabla_f(&d);
            if r != maxwell_componentwise(&d) {
                return Err(Error::Consistency("graded read-off of ∇F disagrees with vector calculus".into()));
            }
            let text = format!(
                "div E = {}\ncurl H − ∂0 E = ({})\ncurl E + ∂0 H = ({})\ndiv H = {}\n",
                fmt_q(&r.div_e),
                r.curl_h_minus_dt_e.iter().map(fmt_q).collect::<Vec<_>>().join(", "),
                r.curl_e_plus_dt_h.iter().map(fmt_q).collect::<Vec<_>>().join(", "),
                fmt_q(&r.div_h)
            );
            Ok(("field", json!({ "mode": "maxwell", "residuals": residuals_json(&r) }), text))
        }
        FieldCmd::Bivector { e, h } => {
            let e: [Q; 3] = parse_list(e, 3, "--E")?.try_into().expect("length checked");
            let h: [Q; 3] = parse_list(h, 3, "--H")?.try_into().expect("length checked");
            let fb = field_bivector(&e, &h);
            let rev = fb.reversed();
            let text = format!(
                "F = ({})\n{}column = ({})\nreversed column = ({})\n",
                fb.f.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                mat_text("phi", &fb.matrix),
                fb.projection.column.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                rev.projection.column.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            );
            Ok((
                "field",
                json!({
                    "mode": "bivector",
                    "F": cq_list(&fb.f),
                    "multivector": fb.multivector,
                    "matrix": mat_json(&fb.matrix),
                    "column": cq_list(&fb.projection.column),
                    "slots": cq_list(&fb.slots()),
                    "reversed": { "multivector": rev.multivector, "F": cq_list(&rev.f), "column": cq_list(&rev.projection.column) },
                }),
                text,
            ))
        }
    }
}

fn audit(args: &AuditArgs) -> Result<Rendered, Failure> {
    let opts = AuditOptions { only: args.only.clone(), corrupt_blade_sign: args.corrupt_sign };
    let report = run_audit(&opts)?;
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(text, "{} {} ({} cases)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases);
        for d in &c.details {
            let _ = writeln!(text, "    {d}");
        }
    }
    let value = serde_json::to_value(&report).expect("serializable");
    if !report.passed {
        return Err(Failure::Check { name: report.failures().join(", "), value, text });
    }
    Ok(("audit", value, text))
}
