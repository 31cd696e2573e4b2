//! JSON encoding of lattice data.
//!
//! Integers are plain numbers below `2^53` in absolute value and decimal
//! strings otherwise; rationals are `"p/q"` strings in lowest terms. The
//! parsers accept either form for both.

use dualfan::fans::Fan;
use dualfan::lattice::{primitive, LatticeMap};
use dualfan::poly::ParamPoly;
use dualfan::polyhedra::Polytope;
use dualfan::{Int, IntVec, Rat, RatVec};
use num_bigint::Sign;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

pub type ParseResult<T> = std::result::Result<T, String>;

const SAFE: u64 = 1 << 53;

pub fn int(x: &Int) -> Value {
    match x.abs().to_u64() {
        Some(m) if m < SAFE => {
            let v = m as i64;
            json!(if x.sign() == Sign::Minus { -v } else { v })
        }
        _ => Value::String(x.to_string()),
    }
}

pub fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn int_rows(rows: &[IntVec]) -> Value {
    Value::Array(rows.iter().map(|r| ints(r)).collect())
}

pub fn rat(x: &Rat) -> Value {
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

pub fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn matrix(m: &LatticeMap) -> Value {
    int_rows(m.entries())
}

pub fn poly(p: &ParamPoly) -> Value {
    match p.as_constant() {
        Some(c) => int(&c),
        None => Value::String(p.to_string()),
    }
}

pub fn potential(terms: &[(IntVec, ParamPoly)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(m, c)| json!({ "exponent": ints(m), "coefficient": poly(c) }))
            .collect(),
    )
}

pub fn fan(f: &Fan) -> Value {
    let mut doc = Map::new();
    doc.insert("rank".into(), json!(f.rank()));
    doc.insert("rays".into(), int_rows(f.rays()));
    if f.has_marking() {
        doc.insert("marked".into(), int_rows(f.marked_generators()));
    }
    doc.insert("max_cones".into(), json!(f.max_cones()));
    Value::Object(doc)
}

pub fn polytope(p: &Polytope) -> Value {
    json!({
        "rank": p.rank(),
        "vertices": p.vertices().iter().map(|v| rats(v)).collect::<Vec<_>>(),
        "inequalities": p
            .hrep()
            .iter()
            .map(|(a, l)| json!({ "normal": ints(a), "offset": rat(l) }))
            .collect::<Vec<_>>(),
    })
}

pub fn parse_int(v: &Value) -> ParseResult<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| format!("{n} is not an integer")),
        Value::String(s) => s.trim().parse::<Int>().map_err(|_| format!("{s:?} is not an integer")),
        other => Err(format!("expected an integer, found {other}")),
    }
}

pub fn parse_rat(v: &Value) -> ParseResult<Rat> {
    match v {
        Value::String(s) => match s.split_once('/') {
            Some((p, q)) => {
                let p: Int = p.trim().parse().map_err(|_| format!("{s:?} is not a rational"))?;
                let q: Int = q.trim().parse().map_err(|_| format!("{s:?} is not a rational"))?;
                if q.is_zero() {
                    return Err(format!("{s:?} has zero denominator"));
                }
                Ok(Rat::new(p, q))
            }
            None => parse_int(v).map(Rat::from_integer),
        },
        _ => parse_int(v).map(Rat::from_integer),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> ParseResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| format!("{what} must be an array"))
}

pub fn field<'a>(doc: &'a Value, key: &str) -> ParseResult<&'a Value> {
    doc.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

pub fn parse_ints(v: &Value, what: &str) -> ParseResult<IntVec> {
    array(v, what)?.iter().map(parse_int).collect()
}

pub fn parse_rats(v: &Value, what: &str) -> ParseResult<RatVec> {
    array(v, what)?.iter().map(parse_rat).collect()
}

pub fn parse_rows(v: &Value, what: &str, width: Option<usize>) -> ParseResult<Vec<IntVec>> {
    let rows: Vec<IntVec> = array(v, what)?.iter().map(|r| parse_ints(r, what)).collect::<ParseResult<_>>()?;
    if let Some(w) = width {
        if let Some(bad) = rows.iter().position(|r| r.len() != w) {
            return Err(format!("{what}[{bad}] has length {}, expected {w}", rows[bad].len()));
        }
    }
    Ok(rows)
}

pub fn parse_usize(v: &Value, what: &str) -> ParseResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| format!("{what} must be a nonnegative integer"))
}

/// Parses a fan document. Rays that are not primitive are normalized; when
/// no marking is given the normalization is reported as a warning.
pub fn parse_fan(doc: &Value) -> ParseResult<(Fan, Vec<String>)> {
    let rank = parse_usize(field(doc, "rank")?, "rank")?;
    let raw = parse_rows(field(doc, "rays")?, "rays", Some(rank))?;
    let marked = doc
        .get("marked")
        .map(|m| parse_rows(m, "marked", Some(rank)))
        .transpose()?;
    let cones: Vec<Vec<usize>> = array(field(doc, "max_cones")?, "max_cones")?
        .iter()
        .map(|c| {
            array(c, "max_cones entry")?
                .iter()
                .map(|i| parse_usize(i, "ray index"))
                .collect::<ParseResult<Vec<usize>>>()
        })
        .collect::<ParseResult<_>>()?;
    let mut warnings = Vec::new();
    let mut rays = Vec::with_capacity(raw.len());
    for (i, r) in raw.iter().enumerate() {
        if r.iter().all(|x| x.is_zero()) {
            return Err(format!("ray {i} is zero"));
        }
        let p = primitive(r);
        if p != *r && marked.is_none() {
            warnings.push(format!("ray {i} was not primitive and has been normalized"));
        }
        rays.push(p);
    }
    let f = Fan::new(rank, rays, cones).map_err(|e| e.to_string())?;
    let f = match marked {
        Some(m) => f.with_marked(m).map_err(|e| e.to_string())?,
        None => f,
    };
    Ok((f, warnings))
}
