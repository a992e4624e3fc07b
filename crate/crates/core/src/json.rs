//! JSON forms shared by the library and the command line.
//!
//! Rationals travel as canonical strings (`"n"` or `"n/d"`), so values
//! round-trip losslessly. Objects are built on `serde_json::Value`, whose
//! maps keep keys sorted; serializing the same value twice therefore gives
//! byte-identical text.

use serde_json::{json, Map, Value};

use crate::algebra::{format_scalar, parse_scalar, MPoly, Monomial, Scalar, Var, Zero};
use crate::deformation::DeformationPoint;
use crate::error::{Error, Result};
use crate::matrix::Mat4;
use crate::numeric::CNum;
use crate::pencil::{Classification, SymPencil};
use crate::slice::{Coord, GElem, SliceSpec};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn scalar_to_json(r: &Scalar) -> Value {
    Value::String(format_scalar(r))
}

/// Accepts a rational string or a JSON integer.
pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string()),
        _ => Err(parse_err(format!("expected a rational string, got {v}"))),
    }
}

pub fn mat4_to_json(m: &Mat4<Scalar>) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn mat4_from_json(v: &Value) -> Result<Mat4<Scalar>> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 4)
        .ok_or_else(|| parse_err("a 4x4 matrix must be an array of 4 rows"))?;
    let mut out = Mat4::zero();
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| parse_err(format!("row {i} must have 4 entries")))?;
        for (j, x) in row.iter().enumerate() {
            out.set(i, j, scalar_from_json(x)?);
        }
    }
    Ok(out)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

pub fn pencil_to_json(p: &SymPencil<Scalar>) -> Value {
    json!({ "X": mat4_to_json(p.x()), "Y": mat4_to_json(p.y()) })
}

/// Parses `{"X": .., "Y": ..}`; asymmetric matrices are reported as `NotSymmetric`.
pub fn pencil_from_json(v: &Value) -> Result<SymPencil<Scalar>> {
    let x = mat4_from_json(field(v, "X")?)?;
    let y = mat4_from_json(field(v, "Y")?)?;
    SymPencil::new(x, y)
}

pub fn classification_to_json(c: &Classification) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(c.verdict));
    if let Some(r) = c.reason {
        m.insert("reason".into(), json!(r));
    }
    if let Some(j) = &c.j {
        m.insert("j".into(), scalar_to_json(j));
    }
    Value::Object(m)
}

pub fn coord_to_json(c: &Coord) -> Value {
    match c {
        Coord::Finite(x) => scalar_to_json(x),
        Coord::Infinity => Value::String("inf".into()),
    }
}

pub fn coord_from_str(s: &str) -> Result<Coord> {
    match s.trim() {
        "inf" | "infinity" | "∞" => Ok(Coord::Infinity),
        other => parse_scalar(other).map(Coord::Finite),
    }
}

pub fn coord_from_json(v: &Value) -> Result<Coord> {
    match v {
        Value::String(s) => coord_from_str(s),
        _ => scalar_from_json(v).map(Coord::Finite),
    }
}

pub fn slice_spec_to_json(s: &SliceSpec) -> Value {
    json!({ "p": coord_to_json(&s.p), "q": coord_to_json(&s.q) })
}

pub fn slice_spec_from_json(v: &Value) -> Result<SliceSpec> {
    Ok(SliceSpec {
        p: coord_from_json(field(v, "p")?)?,
        q: coord_from_json(field(v, "q")?)?,
    })
}

const GELEM_KEYS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn gelem_to_json(z: &GElem) -> Value {
    let m: Map<String, Value> = GELEM_KEYS
        .iter()
        .zip(z.coords().iter())
        .map(|(k, x)| (k.to_string(), scalar_to_json(x)))
        .collect();
    Value::Object(m)
}

pub fn gelem_from_json(v: &Value) -> Result<GElem> {
    let c = |k| scalar_from_json(field(v, k)?);
    Ok(GElem::new(
        c("a")?,
        c("b")?,
        c("c")?,
        c("d")?,
        c("e")?,
        c("f")?,
    ))
}

/// `{"vars": [...], "terms": [{"exponents": [...], "coeff": "n/d"}, ...]}`,
/// exponents listed against `vars`, which holds only the variables that occur.
pub fn mpoly_to_json(p: &MPoly) -> Value {
    let vars = p.variables();
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: Vec<u16> = vars.iter().map(|&v| m.exponent(v)).collect();
            json!({ "exponents": exps, "coeff": scalar_to_json(c) })
        })
        .collect();
    json!({
        "vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
        "terms": terms,
    })
}

pub fn mpoly_from_json(v: &Value) -> Result<MPoly> {
    let vars = field(v, "vars")?
        .as_array()
        .ok_or_else(|| parse_err("\"vars\" must be an array"))?
        .iter()
        .map(|n| {
            n.as_str()
                .and_then(Var::from_name)
                .ok_or_else(|| parse_err(format!("unknown variable {n}")))
        })
        .collect::<Result<Vec<Var>>>()?;
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| parse_err("\"terms\" must be an array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exps = field(t, "exponents")?
            .as_array()
            .filter(|e| e.len() == vars.len())
            .ok_or_else(|| parse_err("exponent list does not match \"vars\""))?;
        let mut full = vec![0u16; Var::all().count()];
        for (var, e) in vars.iter().zip(exps) {
            let e = e
                .as_u64()
                .and_then(|e| u16::try_from(e).ok())
                .ok_or_else(|| parse_err(format!("bad exponent {e}")))?;
            full[var.index()] += e;
        }
        out.push((
            scalar_from_json(field(t, "coeff")?)?,
            Monomial::from_exponents(full),
        ));
    }
    Ok(MPoly::from_terms(out))
}

pub fn cnum_to_json(z: &CNum) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Accepts `{"re": x, "im": y}` or a bare real number.
pub fn cnum_from_json(v: &Value) -> Result<CNum> {
    if let Some(x) = v.as_f64() {
        return Ok(CNum::new(x, 0.0));
    }
    let part = |k: &str| -> Result<f64> {
        match v.get(k) {
            None => Ok(0.0),
            Some(x) => x
                .as_f64()
                .ok_or_else(|| parse_err(format!("{k:?} must be a number"))),
        }
    };
    if !v.is_object() || (v.get("re").is_none() && v.get("im").is_none()) {
        return Err(parse_err(format!("expected {{\"re\", \"im\"}}, got {v}")));
    }
    Ok(CNum::new(part("re")?, part("im")?))
}

const POINT_KEYS: [&str; 7] = ["alpha", "beta", "gamma", "delta", "epsilon", "lambda", "mu"];

pub fn deformation_point_to_json(p: &DeformationPoint) -> Value {
    json!({
        "alpha": scalar_to_json(&p.alpha),
        "beta": scalar_to_json(&p.beta),
        "gamma": scalar_to_json(&p.gamma),
        "delta": scalar_to_json(&p.delta),
        "epsilon": scalar_to_json(&p.epsilon),
        "lambda": scalar_to_json(&p.lambda),
        "mu": scalar_to_json(&p.mu),
    })
}

/// Missing parameters default to zero; unknown keys are rejected.
pub fn deformation_point_from_json(v: &Value) -> Result<DeformationPoint> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("a deformation point must be an object"))?;
    if let Some(k) = obj.keys().find(|k| !POINT_KEYS.contains(&k.as_str())) {
        return Err(parse_err(format!("unknown deformation parameter {k:?}")));
    }
    let get = |k: &str| obj.get(k).map_or(Ok(Scalar::zero()), scalar_from_json);
    Ok(DeformationPoint {
        alpha: get("alpha")?,
        beta: get("beta")?,
        gamma: get("gamma")?,
        delta: get("delta")?,
        epsilon: get("epsilon")?,
        lambda: get("lambda")?,
        mu: get("mu")?,
    })
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mpoly::{k, v};
    use crate::algebra::{int, ratio};
    use crate::pencil::classify;

    #[test]
    fn scalars_are_canonical_strings() {
        assert_eq!(scalar_to_json(&ratio(6, -4)), json!("-3/2"));
        assert_eq!(scalar_to_json(&int(7)), json!("7"));
        assert_eq!(scalar_from_json(&json!(3)).unwrap(), int(3));
        assert!(scalar_from_json(&json!(0.5)).is_err());
    }

    #[test]
    fn classification_output_matches_example() {
        let p = SymPencil::new(Mat4::identity(), Mat4::diag([0, 1, 2, 3].map(int))).unwrap();
        let out = serde_json::to_string(&classification_to_json(&classify(&p))).unwrap();
        assert_eq!(out, r#"{"j":"35152/9","verdict":"EllipticD5"}"#);
        let back = pencil_from_json(&pencil_to_json(&p)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn asymmetric_pencil_rejected() {
        let mut x = Mat4::<Scalar>::identity();
        x.set(0, 1, int(1));
        let v = json!({ "X": mat4_to_json(&x), "Y": mat4_to_json(&Mat4::identity()) });
        assert_eq!(pencil_from_json(&v), Err(Error::NotSymmetric));
        assert!(matches!(
            pencil_from_json(&json!({"X": []})),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn polynomial_round_trip() {
        let poly = v(Var::A).pow(2) - k(2) * v(Var::Q) * v(Var::A) * v(Var::B) + k(1);
        let j = mpoly_to_json(&poly);
        assert_eq!(j["vars"], json!(["q", "a", "b"]));
        assert_eq!(mpoly_from_json(&j).unwrap(), poly);
    }

    #[test]
    fn slice_spec_and_point() {
        let s = slice_spec_from_json(&json!({"p": "inf", "q": "1/2"})).unwrap();
        assert_eq!(s.p, Coord::Infinity);
        assert_eq!(slice_spec_to_json(&s), json!({"p": "inf", "q": "1/2"}));
        let pt = deformation_point_from_json(&json!({"lambda": "2"})).unwrap();
        assert_eq!(pt.lambda, int(2));
        assert!(pt.alpha.is_zero());
        assert!(deformation_point_from_json(&json!({"nu": "1"})).is_err());
    }

    #[test]
    fn complex_numbers() {
        let z = CNum::new(1.5, -2.0);
        assert_eq!(cnum_from_json(&cnum_to_json(&z)).unwrap(), z);
        assert_eq!(
            cnum_from_json(&json!(1728)).unwrap(),
            CNum::new(1728.0, 0.0)
        );
        assert!(cnum_from_json(&json!("x")).is_err());
    }

    #[test]
    fn gelem_round_trip() {
        let z = GElem::new(int(1), ratio(1, 2), int(0), int(-3), int(4), int(5));
        assert_eq!(gelem_from_json(&gelem_to_json(&z)).unwrap(), z);
    }
}
