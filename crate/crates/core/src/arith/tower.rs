//! Field towers `Q -> [number field] -> [variable] -> [quadratic extension]` and
//! their JSON descriptors.
//!
//! ```json
//! {"number_field": {"min_poly": ["-2", "0", "1"], "name": "r"},
//!  "variable": "t",
//!  "quad_ext": {"D": "t^2 + 1", "name": "s"}}
//! ```
//!
//! Polynomials serialize as coefficient lists, lowest degree first, each
//! coefficient a `"num/den"` string.

use std::sync::Arc;

use serde_json::{json, Value};

use super::field::Field;
use super::numfield::{NfElem, NumberField};
use super::parse::parse_expr;
use super::poly::Poly;
use super::quadext::{QuadElem, QuadField};
use super::ratfunc::RatFunc;
use super::rational::{format_rational, parse_rational, Rational};
use super::square::SquareConfig;
use super::ArithError;

/// Function-field layer element: rational functions over the constant field.
pub type TowerFunc = RatFunc<NfElem>;
/// Element of the full tower.
pub type TowerElem = QuadElem<TowerFunc>;

pub fn poly_to_strings(p: &Poly<Rational>) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn poly_from_strings<S: AsRef<str>>(c: &[S]) -> Result<Poly<Rational>, ArithError> {
    let v: Result<Vec<Rational>, ArithError> = c.iter().map(|s| parse_rational(s.as_ref())).collect();
    Ok(Poly::from_coeffs(v?))
}

/// `[c0, c1, ...]` on one line, the format used in reports.
pub fn poly_serial(p: &Poly<Rational>) -> String {
    format!("[{}]", poly_to_strings(p).join(","))
}

pub fn poly_from_serial(s: &str) -> Result<Poly<Rational>, ArithError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ArithError::Parse(format!("not a coefficient list: {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Poly::zero());
    }
    poly_from_strings(&inner.split(',').collect::<Vec<_>>())
}

#[derive(Clone, Debug)]
pub struct FieldTower {
    number_field: Option<Arc<NumberField>>,
    variable: Option<String>,
    quad: Option<Arc<QuadField<TowerFunc>>>,
}

impl Default for FieldTower {
    fn default() -> Self {
        Self::rationals()
    }
}

impl FieldTower {
    pub fn rationals() -> Self {
        FieldTower { number_field: None, variable: None, quad: None }
    }

    pub fn new(
        number_field: Option<Arc<NumberField>>,
        variable: Option<&str>,
        quad_d: Option<(&str, &str)>,
        cfg: &SquareConfig,
    ) -> Result<Self, ArithError> {
        let mut t = FieldTower { number_field, variable: variable.map(str::to_string), quad: None };
        for name in t.names() {
            if !name.chars().all(|c| c.is_alphanumeric() || c == '_') || name.is_empty() {
                return Err(ArithError::Invalid(format!("bad symbol name {name:?}")));
            }
        }
        let mut seen = t.names();
        seen.sort();
        seen.dedup();
        if seen.len() != t.names().len() {
            return Err(ArithError::Invalid("symbol names must be distinct".into()));
        }
        if let Some((name, d)) = quad_d {
            let d = t.parse_function(d)?;
            t.quad = Some(QuadField::new(d, name, cfg)?);
        }
        Ok(t)
    }

    fn names(&self) -> Vec<String> {
        let mut v = Vec::new();
        if let Some(k) = &self.number_field {
            v.push(k.name().to_string());
        }
        if let Some(x) = &self.variable {
            v.push(x.clone());
        }
        v
    }

    pub fn from_json(text: &str, cfg: &SquareConfig) -> Result<Self, ArithError> {
        let v: Value = serde_json::from_str(text).map_err(|e| ArithError::Parse(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| ArithError::Parse("tower must be an object".into()))?;
        for key in obj.keys() {
            if !["number_field", "variable", "quad_ext"].contains(&key.as_str()) {
                return Err(ArithError::Parse(format!("unknown tower key {key:?}")));
            }
        }
        let nf = match obj.get("number_field") {
            None | Some(Value::Null) => None,
            Some(nf) => {
                let coeffs = nf
                    .get("min_poly")
                    .and_then(Value::as_array)
                    .ok_or_else(|| ArithError::Parse("number_field.min_poly must be a list".into()))?;
                let strs: Vec<String> = coeffs.iter().map(json_coeff).collect::<Result<_, _>>()?;
                let name = nf.get("name").and_then(Value::as_str).unwrap_or("a");
                Some(NumberField::new(poly_from_strings(&strs)?, name)?)
            }
        };
        let var = match obj.get("variable") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.as_str()),
            Some(_) => return Err(ArithError::Parse("variable must be a string".into())),
        };
        let quad = match obj.get("quad_ext") {
            None | Some(Value::Null) => None,
            Some(q) => {
                let d = q.get("D").ok_or_else(|| ArithError::Parse("quad_ext.D missing".into()))?;
                let d = match d {
                    Value::String(s) => s.clone(),
                    other => json_coeff(other)?,
                };
                let name = q.get("name").and_then(Value::as_str).unwrap_or("s").to_string();
                Some((name, d))
            }
        };
        Self::new(nf, var, quad.as_ref().map(|(n, d)| (n.as_str(), d.as_str())), cfg)
    }

    pub fn to_json(&self) -> Value {
        let mut out = serde_json::Map::new();
        if let Some(k) = &self.number_field {
            out.insert("number_field".into(), json!({"min_poly": poly_to_strings(k.min_poly()), "name": k.name()}));
        }
        if let Some(x) = &self.variable {
            out.insert("variable".into(), json!(x));
        }
        if let Some(q) = &self.quad {
            let var = self.variable.as_deref().unwrap_or("x");
            out.insert("quad_ext".into(), json!({"D": q.d().to_string_var(var), "name": q.name()}));
        }
        Value::Object(out)
    }

    pub fn number_field(&self) -> Option<&Arc<NumberField>> {
        self.number_field.as_ref()
    }

    pub fn variable(&self) -> Option<&str> {
        self.variable.as_deref()
    }

    pub fn quad(&self) -> Option<&Arc<QuadField<TowerFunc>>> {
        self.quad.as_ref()
    }

    /// A constant of the tower's number-field layer.
    pub fn parse_constant(&self, s: &str) -> Result<NfElem, ArithError> {
        let mut syms: Vec<(&str, NfElem)> = Vec::new();
        if let Some(k) = &self.number_field {
            syms.push((k.name(), k.generator()));
        }
        parse_expr(s, &syms)
    }

    /// An element of the function-field layer (constants if no variable).
    pub fn parse_function(&self, s: &str) -> Result<TowerFunc, ArithError> {
        let mut syms: Vec<(&str, TowerFunc)> = Vec::new();
        if let Some(k) = &self.number_field {
            syms.push((k.name(), RatFunc::constant(k.generator())));
        }
        if let Some(x) = &self.variable {
            syms.push((x.as_str(), RatFunc::x()));
        }
        let v = parse_expr(s, &syms)?;
        // Attach the number field to every coefficient so elements compare cleanly.
        Ok(match &self.number_field {
            Some(k) => v.map(|c| c.with_field(k)),
            None => v,
        })
    }

    /// A polynomial in the tower's variable over the constant field.
    pub fn parse_poly(&self, s: &str) -> Result<Poly<NfElem>, ArithError> {
        let f = self.parse_function(s)?;
        if !f.is_polynomial() {
            return Err(ArithError::Parse(format!("{s:?} is not a polynomial")));
        }
        Ok(f.num().clone())
    }

    pub fn parse_elem(&self, s: &str) -> Result<TowerElem, ArithError> {
        let mut syms: Vec<(&str, TowerElem)> = Vec::new();
        if let Some(k) = &self.number_field {
            syms.push((k.name(), QuadElem::base(RatFunc::constant(k.generator()))));
        }
        if let Some(x) = &self.variable {
            syms.push((x.as_str(), QuadElem::base(RatFunc::x())));
        }
        if let Some(q) = &self.quad {
            syms.push((q.name(), q.sqrt_d()));
        }
        parse_expr(s, &syms)
    }

    /// Human-readable name such as `Q(r)(t)`.
    pub fn describe(&self) -> String {
        let mut s = String::from("Q");
        if let Some(k) = &self.number_field {
            s.push_str(&format!("({})", k.name()));
        }
        if let Some(x) = &self.variable {
            s.push_str(&format!("({x})"));
        }
        if let Some(q) = &self.quad {
            s.push_str(&format!("({})", q.name()));
        }
        s
    }
}

fn json_coeff(v: &Value) -> Result<String, ArithError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() => Ok(n.to_string()),
        _ => Err(ArithError::Parse(format!("coefficient must be a \"num/den\" string, got {v}"))),
    }
}

/// Rational constant from a tower constant, when it lies in Q.
pub fn as_rational(a: &NfElem) -> Option<Rational> {
    a.to_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn descriptor_round_trip() {
        let cfg = SquareConfig::default();
        let text = r#"{"number_field": {"min_poly": ["-2", "0", "1"], "name": "r"}, "variable": "t"}"#;
        let t = FieldTower::from_json(text, &cfg).unwrap();
        assert_eq!(t.describe(), "Q(r)(t)");
        let again = FieldTower::from_json(&t.to_json().to_string(), &cfg).unwrap();
        assert_eq!(again.describe(), "Q(r)(t)");
        let f = t.parse_poly("r*t^2 - 1").unwrap();
        assert_eq!(f.deg0(), 2);
        let c = t.parse_constant("r^2").unwrap();
        assert_eq!(c.to_rational(), Some(int(2)));
    }

    #[test]
    fn rejects_bad_towers() {
        let cfg = SquareConfig::default();
        assert!(FieldTower::from_json(r#"{"number_field": {"min_poly": ["-1", "0", "1"]}}"#, &cfg).is_err());
        assert!(FieldTower::from_json(r#"{"variable": "t", "quad_ext": {"D": "t^2"}}"#, &cfg).is_err());
        assert!(FieldTower::from_json(r#"{"bogus": 1}"#, &cfg).is_err());
        assert!(FieldTower::from_json("not json", &cfg).is_err());
        let conic = FieldTower::from_json(r#"{"variable": "a", "quad_ext": {"D": "-a^2 - 1", "name": "b"}}"#, &cfg)
            .unwrap();
        let b = conic.parse_elem("b").unwrap();
        let a = conic.parse_elem("a").unwrap();
        assert!((b.square() + a.square() + TowerElem::one()).is_zero());
    }

    #[test]
    fn serial_round_trip() {
        let p = Poly::from_coeffs(vec![int(0), crate::arith::rational::rat(-1, 2), int(3)]);
        assert_eq!(poly_serial(&p), "[0,-1/2,3]");
        assert_eq!(poly_from_serial(&poly_serial(&p)).unwrap(), p);
        assert_eq!(poly_from_serial("[]").unwrap(), Poly::zero());
    }
}
