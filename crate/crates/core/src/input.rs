//! JSON input documents.
//!
//! ```text
//! {"kind": "rational",   "entries": [["2", "1"], ["1", "1"]]}
//! {"kind": "gaussian",   "entries": [[["0", "1"]]]}
//! {"kind": "polynomial", "coeffs": ["1", "-3", "1"]}
//! ```
//!
//! Integers are decimal strings so arbitrary precision survives; plain JSON
//! integers are accepted too. Polynomial coefficients are ascending.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer};
use serde_json::{json, Value};

use crate::endo::{charpoly_gaussian, GaussianMatrix, IntMatrix, Realization};
use crate::error::{Error, Result};
use crate::intpoly::{GaussInt, IntPoly};

/// An integer read from either a decimal string or a JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalInt(pub BigInt);

impl FromStr for DecimalInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // accept the typographic minus sign too
        let cleaned = s.trim().replace('\u{2212}', "-");
        BigInt::from_str(&cleaned)
            .map(DecimalInt)
            .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
    }
}

impl<'de> Deserialize<'de> for DecimalInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
            UInt(u64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(DecimalInt(i.into())),
            Raw::UInt(u) => Ok(DecimalInt(u.into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    Rational { entries: Vec<Vec<DecimalInt>> },
    Gaussian { entries: Vec<Vec<(DecimalInt, DecimalInt)>> },
    Polynomial { coeffs: Vec<DecimalInt> },
}

/// An endomorphism as supplied by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoInput {
    Rational(IntMatrix),
    Gaussian(GaussianMatrix),
    Polynomial(IntPoly),
}

impl EndoInput {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(match doc {
            Document::Rational { entries } => EndoInput::Rational(IntMatrix::from_rows(
                entries.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect(),
            )?),
            Document::Gaussian { entries } => EndoInput::Gaussian(GaussianMatrix::from_rows(
                entries
                    .into_iter()
                    .map(|r| r.into_iter().map(|(re, im)| GaussInt::new(re.0, im.0)).collect())
                    .collect(),
            )?),
            Document::Polynomial { coeffs } => {
                let p = IntPoly::new(coeffs.into_iter().map(|x| x.0).collect());
                if p.is_zero() {
                    return Err(Error::Parse("polynomial has no nonzero coefficient".into()));
                }
                EndoInput::Polynomial(p)
            }
        })
    }

    pub fn to_json(&self) -> Value {
        let s = |x: &BigInt| Value::String(x.to_string());
        match self {
            EndoInput::Rational(m) => json!({
                "kind": "rational",
                "entries": m.rows().iter().map(|r| r.iter().map(s).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
            EndoInput::Gaussian(m) => json!({
                "kind": "gaussian",
                "entries": m.rows().iter()
                    .map(|r| r.iter().map(|z| json!([s(&z.re), s(&z.im)])).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
            EndoInput::Polynomial(p) => json!({"kind": "polynomial", "coeffs": p}),
        }
    }

    /// Only the Gaussian path produces `chi_a * conj(chi_a)` by construction.
    pub fn realization(&self) -> Realization {
        match self {
            EndoInput::Gaussian(_) => Realization::ConjugateClosed,
            _ => Realization::Formal,
        }
    }

    /// The characteristic polynomial of the rational representation.
    pub fn chi_r(&self) -> Result<IntPoly> {
        match self {
            EndoInput::Rational(m) => Ok(m.charpoly()),
            EndoInput::Gaussian(m) => Ok(charpoly_gaussian(m)?.1),
            EndoInput::Polynomial(p) => Ok(p.clone()),
        }
    }
}
