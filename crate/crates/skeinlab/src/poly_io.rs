//! Polynomial text and JSON.
//!
//! Text is the `Display` form of [`LaurentPoly2`], for example
//! `2*v^2 - v^4 + v^2*z^2`, with terms sorted by z-exponent and then
//! v-exponent. JSON is `{"terms":[{"v":2,"z":0,"c":2}, ...]}` in the same
//! order; coefficients beyond 64 bits are written as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use skeinlab_core::{Coeff, LaurentPoly2};

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub v: i32,
    pub z: i32,
    pub c: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl From<&LaurentPoly2> for PolyJson {
    fn from(p: &LaurentPoly2) -> Self {
        let terms = p
            .terms()
            .iter()
            .map(|t| TermJson {
                v: t.v,
                z: t.z,
                c: match t.coeff.to_i64() {
                    Some(n) => Value::from(n),
                    None => Value::from(t.coeff.to_string()),
                },
            })
            .collect();
        PolyJson { terms }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<LaurentPoly2, String> {
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.c {
                Value::Number(n) => n.as_i64().map(Coeff::from).ok_or_else(|| format!("coefficient {n} is not an integer"))?,
                Value::String(s) => s.parse::<BigInt>().map(Coeff::from).map_err(|_| format!("bad coefficient {s:?}"))?,
                other => return Err(format!("bad coefficient {other}")),
            };
            out.push((t.v, t.z, c));
        }
        Ok(LaurentPoly2::from_terms(out))
    }
}

pub fn poly_to_json(p: &LaurentPoly2) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("polynomial JSON")
}

pub fn poly_from_json(s: &str) -> Result<LaurentPoly2, ParseError> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    j.to_poly().map_err(|m| ParseError::new(1, 1, m))
}

/// Parses the text form. Accepts any term order and repeated monomials.
pub fn parse_poly(s: &str) -> Result<LaurentPoly2, ParseError> {
    let b = s.as_bytes();
    let mut i = 0;
    let err = |i: usize, m: &str| ParseError::new(1, i + 1, m);
    let skip = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let int = |i: &mut usize| -> Option<&str> {
        let start = *i;
        if *i < b.len() && b[*i] == b'-' {
            *i += 1;
        }
        let d0 = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        (*i > d0).then(|| &s[start..*i])
    };
    let mut terms = Vec::new();
    skip(&mut i);
    if s[i..].trim() == "0" {
        return Ok(LaurentPoly2::zero());
    }
    let mut first = true;
    loop {
        skip(&mut i);
        if i == b.len() {
            if first {
                return Err(err(i, "empty polynomial"));
            }
            break;
        }
        let mut neg = false;
        if b[i] == b'+' || b[i] == b'-' {
            neg = b[i] == b'-';
            i += 1;
            skip(&mut i);
        } else if !first {
            return Err(err(i, "expected `+` or `-` between terms"));
        }
        first = false;
        let mut coeff = BigInt::from(1);
        let (mut v, mut z) = (0, 0);
        let mut factors = 0;
        loop {
            skip(&mut i);
            let at = i;
            if i < b.len() && b[i].is_ascii_digit() {
                let d = int(&mut i).unwrap();
                coeff *= d.parse::<BigInt>().unwrap();
            } else if i < b.len() && (b[i] == b'v' || b[i] == b'z') {
                let var = b[i];
                i += 1;
                let mut e = 1;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    e = int(&mut i).and_then(|d| d.parse::<i32>().ok()).ok_or_else(|| err(i, "expected an exponent"))?;
                }
                if var == b'v' { v += e } else { z += e }
            } else {
                return Err(err(at, "expected a coefficient, `v` or `z`"));
            }
            factors += 1;
            skip(&mut i);
            if i < b.len() && b[i] == b'*' {
                i += 1;
                continue;
            }
            break;
        }
        debug_assert!(factors > 0);
        if neg {
            coeff = -coeff;
        }
        terms.push((v, z, Coeff::from(coeff)));
    }
    Ok(LaurentPoly2::from_terms(terms))
}
