//! Batch front end for the `dualfan` library: JSON documents in, one
//! deterministic JSON report out, with exit code 0 when every check passes,
//! 1 when a mathematical check fails and 2 for invalid input.

pub mod json;

use dualfan::fans::{is_complete, is_dual_pair, is_smooth, validate_fan, DualFanReport};
use dualfan::mirrors::{
    bb_mirror_pair, bhk_pair, givental_mirror, hori_vafa_mirror, quintic_pipeline, BHKInput, GiventalInput,
    MirrorReport,
};
use dualfan::polyhedra::{lattice_points, Cone};
use dualfan::toric_lg::{auxiliary_lg_from_ci, is_cartier, section_polytope, BaseChangeReport, ToricDivisor};
use dualfan::lattice::LatticeMap;
use dualfan::Error;
use serde_json::{json, Map, Value};

pub use json::parse_fan;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    DualCheck,
    FanValidate,
    Bhk,
    Bb,
    Givental,
    HoriVafa,
    Quintic,
    SectionPolytope,
    BundleFan,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::DualCheck => "dualcheck",
            Command::FanValidate => "fan-validate",
            Command::Bhk => "bhk",
            Command::Bb => "bb",
            Command::Givental => "givental",
            Command::HoriVafa => "hori-vafa",
            Command::Quintic => "quintic",
            Command::SectionPolytope => "section-polytope",
            Command::BundleFan => "bundle-fan",
        }
    }

    /// Number of input documents the command reads.
    pub fn arity(self) -> usize {
        match self {
            Command::DualCheck => 2,
            Command::Quintic => 0,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobRequest {
    pub command: Command,
    pub inputs: Vec<Value>,
    pub height_bound: usize,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure::Input(s.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckFailed(_) | Error::NotDual { .. } | Error::QuotientNotFan(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Report body, whether every check passed, and notes for the header.
type Body = (Map<String, Value>, bool, Vec<String>);

pub fn run(job: &JobRequest) -> Outcome {
    let mut header = Map::new();
    header.insert("schema_version".into(), json!(SCHEMA_VERSION));
    header.insert("command".into(), json!(job.command.name()));
    if job.inputs.len() != job.command.arity() {
        return failure(
            header,
            2,
            format!("{} expects {} input documents, got {}", job.command.name(), job.command.arity(), job.inputs.len()),
        );
    }
    match dispatch(job) {
        Ok((body, passed, notes)) => {
            header.insert("all_passed".into(), json!(passed));
            header.extend(body);
            header.insert("notes".into(), json!(notes));
            Outcome {
                report: Value::Object(header),
                exit_code: if passed { 0 } else { 1 },
            }
        }
        Err(Failure::Input(msg)) => failure(header, 2, msg),
        Err(Failure::Check(msg)) => failure(header, 1, msg),
    }
}

fn failure(mut header: Map<String, Value>, code: i32, msg: String) -> Outcome {
    header.insert("all_passed".into(), json!(false));
    header.insert("error".into(), json!(msg));
    header.insert("notes".into(), json!([]));
    Outcome {
        report: Value::Object(header),
        exit_code: code,
    }
}

/// Indented report with a trailing newline; arrays of scalars stay on one
/// line so that vectors and matrix rows read naturally.
pub fn render(report: &Value) -> String {
    let mut out = String::new();
    write_value(report, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn dispatch(job: &JobRequest) -> Result<Body, Failure> {
    let doc = job.inputs.first();
    match job.command {
        Command::DualCheck => dualcheck(&job.inputs[0], &job.inputs[1]),
        Command::FanValidate => fan_validate(&job.inputs[0]),
        Command::Bhk => Ok(mirror(bhk_pair(&parse_bhk(doc.unwrap())?)?)),
        Command::Bb => bb(doc.unwrap(), job.height_bound),
        Command::Givental => Ok(mirror(givental_mirror(&parse_givental(doc.unwrap())?)?)),
        Command::HoriVafa => Ok(mirror(hori_vafa_mirror(&parse_givental(doc.unwrap())?)?)),
        Command::Quintic => Ok(mirror(quintic_pipeline()?)),
        Command::SectionPolytope => section(doc.unwrap()),
        Command::BundleFan => bundle_fan(doc.unwrap()),
    }
}

fn duality(d: &DualFanReport) -> Value {
    json!({
        "verdict": d.verdict,
        "witness": d.witness.as_ref().map(|w| json!({
            "dual_ray": w.dual_ray,
            "ray": w.ray,
            "pairing": json::int(&w.pairing),
        })),
    })
}

fn inclusion(b: &BaseChangeReport, into: &str) -> Value {
    json!({
        "into": into,
        "verdict": b.verdict,
        "map": b.inclusion,
        "surviving": b.surviving,
        "dropped": b.dropped,
        "is_isomorphism": b.is_isomorphism,
        "witness_ray": b.witness_ray,
    })
}

fn mirror(r: MirrorReport) -> Body {
    let mut body = Map::new();
    body.insert("pipeline".into(), json!(r.pipeline));
    let verdicts: Map<String, Value> = r.checks.iter().map(|c| (c.name.clone(), json!(c.passed))).collect();
    body.insert("verdicts".into(), Value::Object(verdicts));
    body.insert(
        "checks".into(),
        Value::Array(
            r.checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect(),
        ),
    );
    body.insert("sigma".into(), json::fan(&r.sigma));
    body.insert("sigma_prime".into(), json::fan(&r.sigma_prime));
    body.insert("duality".into(), duality(&r.duality));
    body.insert("xi_count".into(), json!(r.xi.len()));
    body.insert("xi_prime_count".into(), json!(r.xi_prime.len()));
    body.insert("xi".into(), json::int_rows(&r.xi));
    body.insert("xi_prime".into(), json::int_rows(&r.xi_prime));
    body.insert("inclusion".into(), inclusion(&r.inclusion, "Gamma"));
    body.insert("inclusion_prime".into(), inclusion(&r.inclusion_prime, "Gamma'"));
    let groups: Map<String, Value> = r
        .groups
        .iter()
        .map(|(n, g)| {
            (
                n.clone(),
                json!({ "invariant_factors": json::ints(g.invariant_factors()), "order": json::int(&g.order()) }),
            )
        })
        .collect();
    body.insert("groups".into(), Value::Object(groups));
    let matrices: Map<String, Value> = r.matrices.iter().map(|(n, m)| (n.clone(), json::matrix(m))).collect();
    body.insert("matrices".into(), Value::Object(matrices));
    let potentials: Map<String, Value> = r
        .potentials
        .iter()
        .map(|p| (p.name.clone(), json::potential(&p.terms)))
        .collect();
    body.insert("potentials".into(), Value::Object(potentials));
    let passed = r.all_passed();
    (body, passed, r.notes)
}

fn fan_with_warnings(doc: &Value, notes: &mut Vec<String>) -> Result<dualfan::fans::Fan, Failure> {
    let (f, warnings) = json::parse_fan(doc)?;
    notes.extend(warnings);
    Ok(f)
}

fn dualcheck(a: &Value, b: &Value) -> Result<Body, Failure> {
    let mut notes = vec!["pairings use marked generators where a marking is given".to_string()];
    let s = fan_with_warnings(a, &mut notes)?;
    let sp = fan_with_warnings(b, &mut notes)?;
    let d = is_dual_pair(&s, &sp)?;
    let mut body = Map::new();
    let (va, vb) = (validate_fan(&s), validate_fan(&sp));
    body.insert(
        "verdicts".into(),
        json!({ "sigma_valid": va.valid, "sigma_prime_valid": vb.valid, "dual_fans": d.verdict }),
    );
    body.insert("duality".into(), duality(&d));
    body.insert("diagnostics".into(), json!(va.diagnostics.iter().chain(&vb.diagnostics).collect::<Vec<_>>()));
    body.insert("sigma".into(), json::fan(&s));
    body.insert("sigma_prime".into(), json::fan(&sp));
    Ok((body, va.valid && vb.valid && d.verdict, notes))
}

fn canonical(f: &dualfan::fans::Fan) -> Value {
    let (h, cones) = f.canonical_form();
    json!({ "hnf": json::matrix(&h), "max_cones": cones })
}

fn fan_validate(doc: &Value) -> Result<Body, Failure> {
    let mut notes = Vec::new();
    let f = fan_with_warnings(doc, &mut notes)?;
    let v = validate_fan(&f);
    let mut body = Map::new();
    let (complete, smooth) = if v.valid { (is_complete(&f), is_smooth(&f)) } else { (false, false) };
    body.insert(
        "verdicts".into(),
        json!({ "valid": v.valid, "complete": complete, "smooth": smooth }),
    );
    body.insert("diagnostics".into(), json!(v.diagnostics));
    body.insert("fan".into(), json::fan(&f));
    body.insert("canonical_form".into(), canonical(&f));
    Ok((body, v.valid, notes))
}

fn parse_divisor(doc: &Value, rays: usize) -> Result<ToricDivisor, Failure> {
    let c = json::parse_ints(json::field(doc, "coeffs")?, "coeffs")?;
    if c.len() != rays {
        return Err(Failure::Input(format!("divisor has {} coefficients for {rays} rays", c.len())));
    }
    Ok(ToricDivisor::new(c))
}

fn section(doc: &Value) -> Result<Body, Failure> {
    let mut notes = vec!["section polytope {m : <m, u_rho> + a_rho >= 0}".to_string()];
    let y = fan_with_warnings(json::field(doc, "fan")?, &mut notes)?;
    let d = parse_divisor(json::field(doc, "divisor")?, y.rays().len())?;
    let v = validate_fan(&y);
    if !v.valid {
        return Err(Failure::Check(format!("fan is invalid: {}", v.diagnostics.join("; "))));
    }
    let p = section_polytope(&y, &d)?;
    let pts = lattice_points(&p)?;
    let cd = is_cartier(&y, &d);
    let mut body = Map::new();
    body.insert("verdicts".into(), json!({ "valid": true, "cartier": cd.is_some() }));
    body.insert(
        "cartier_data".into(),
        cd.map_or(Value::Null, |c| json::int_rows(&c.m)),
    );
    body.insert("polytope".into(), json::polytope(&p));
    body.insert("lattice_point_count".into(), json!(pts.len()));
    body.insert("lattice_points".into(), json::int_rows(&pts));
    Ok((body, true, notes))
}

fn bundle_fan(doc: &Value) -> Result<Body, Failure> {
    let mut notes = vec!["lifted rays (u_rho, a_rho) in ray order, then the vertical rays".to_string()];
    let y = fan_with_warnings(json::field(doc, "fan")?, &mut notes)?;
    let ds = json::field(doc, "bundles")?
        .as_array()
        .ok_or("bundles must be an array")?
        .iter()
        .map(|d| parse_divisor(d, y.rays().len()))
        .collect::<Result<Vec<_>, _>>()?;
    let (aux, vertical) = auxiliary_lg_from_ci(&y, &ds)?;
    let v = validate_fan(&aux.fan);
    let mut body = Map::new();
    body.insert("verdicts".into(), json!({ "valid": v.valid }));
    body.insert("fan".into(), json::fan(&aux.fan));
    body.insert("vertical".into(), json!(vertical));
    body.insert("xi_count".into(), json!(aux.xi_count()));
    body.insert("xi".into(), json::int_rows(&aux.exponents));
    body.insert("summands".into(), json!(aux.summands));
    Ok((body, v.valid, notes))
}

fn parse_bhk(doc: &Value) -> Result<BHKInput, Failure> {
    let p_rows = json::parse_rows(json::field(json::field(doc, "P")?, "entries")?, "P.entries", None)?;
    let n = p_rows.len();
    let p = LatticeMap::from_rows(n, p_rows).map_err(|e| Failure::Input(e.to_string()))?;
    let phases = match doc.get("Q").and_then(|q| q.get("phases")) {
        Some(v) => v
            .as_array()
            .ok_or("Q.phases must be an array")?
            .iter()
            .map(|q| json::parse_rats(q, "Q.phases"))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    Ok(BHKInput::new(p, phases)?)
}

fn bb(doc: &Value, height_bound: usize) -> Result<Body, Failure> {
    let rank = json::parse_usize(json::field(doc, "rank")?, "rank")?;
    let gens = json::parse_rows(json::field(doc, "generators")?, "generators", Some(rank))?;
    let k = Cone::new(rank, &gens)?;
    let ell_dual = doc.get("ell_dual").map(|v| json::parse_ints(v, "ell_dual")).transpose()?;
    let e = json::parse_rows(json::field(doc, "splitting")?, "splitting", Some(rank))?;
    let e_dual = doc
        .get("dual_splitting")
        .map(|v| json::parse_rows(v, "dual_splitting", Some(rank)))
        .transpose()?;
    let r = bb_mirror_pair(&k, ell_dual.as_deref(), &e, e_dual.as_deref(), height_bound)?;
    Ok(mirror(r))
}

fn parse_givental(doc: &Value) -> Result<GiventalInput, Failure> {
    let mut notes = Vec::new();
    let y = fan_with_warnings(json::field(doc, "fan")?, &mut notes)?;
    let ds = json::field(doc, "bundles")?
        .as_array()
        .ok_or("bundles must be an array")?
        .iter()
        .map(|d| parse_divisor(d, y.rays().len()))
        .collect::<Result<Vec<_>, _>>()?;
    let basis = doc
        .get("basis_rays")
        .map(|b| {
            b.as_array()
                .ok_or_else(|| "basis_rays must be an array".to_string())?
                .iter()
                .map(|i| json::parse_usize(i, "basis ray"))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(GiventalInput::new(y, ds, basis)?)
}
