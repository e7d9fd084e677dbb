//! Endomorphisms through their matrix representations, and exact
//! evaluation of `Delta_n(q) = prod_{q(a)=0} (a^n - 1)`.
//!
//! `Delta_n` has two independent engines: the resultant `Res(q, t^n - 1)`
//! and the determinant `det(C^n - I)` of a companion-matrix power. Both are
//! exact and must agree; the companion engine is the default.

mod matrix;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::periodic_factor_at;
use crate::error::{domain, Error, Result};
use crate::intpoly::{resultant, GaussIntPoly, IntPoly};
use crate::specsplit::cyclotomic_split;

pub use matrix::{companion, GaussianMatrix, IntMatrix};

/// Where a characteristic polynomial came from.
///
/// Arbitrary integer matrices and polynomials are accepted as formal
/// rational representations; only inputs of the form `chi_a * conj(chi_a)`
/// are known to be conjugate closed, which guarantees `Delta_n >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Realization {
    Formal,
    ConjugateClosed,
}

impl Realization {
    pub fn is_formal(self) -> bool {
        self == Realization::Formal
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DeltaEngine {
    Resultant,
    #[default]
    Companion,
}

/// `det(tI - m)` of an integer matrix.
pub fn charpoly_int(m: &IntMatrix) -> IntPoly {
    m.charpoly()
}

/// Characteristic polynomials of an analytic representation: `chi_a` over
/// the Gaussian integers and `chi_r = chi_a * conj(chi_a)` over the integers.
pub fn charpoly_gaussian(m: &GaussianMatrix) -> Result<(GaussIntPoly, IntPoly)> {
    let chi_a = m.charpoly();
    let chi_r = chi_a.norm_poly()?;
    Ok((chi_a, chi_r))
}

pub fn realify(m: &GaussianMatrix) -> IntMatrix {
    m.realify()
}

fn check_delta_args(q: &IntPoly, n: u64) -> Result<()> {
    if !q.is_monic() {
        return domain(format!("Delta_n needs a monic polynomial, got {q}"));
    }
    if n == 0 {
        return domain("Delta_n needs n >= 1");
    }
    Ok(())
}

/// `t^n mod q` for monic `q`, by square-and-multiply.
fn power_of_t_mod(q: &IntPoly, n: u64) -> IntPoly {
    let mut acc = IntPoly::one().rem_monic(q);
    let mut base = IntPoly::x().rem_monic(q);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).rem_monic(q);
        }
        e >>= 1;
        if e > 0 {
            base = (&base * &base).rem_monic(q);
        }
    }
    acc
}

/// `Delta_n(q) = Res(q, t^n - 1)`.
///
/// For monic `q` the resultant only depends on `t^n - 1` modulo `q`, so the
/// second argument is reduced first.
pub fn delta_n_resultant(q: &IntPoly, n: u64) -> Result<BigInt> {
    check_delta_args(q, n)?;
    if q.deg() == 0 {
        return Ok(BigInt::one());
    }
    let reduced = &power_of_t_mod(q, n) - &IntPoly::one();
    if reduced.is_zero() {
        return Ok(BigInt::zero());
    }
    resultant(q, &reduced)
}

/// `Delta_n(q) = det(C^n - I)` with `C` the companion matrix of `q`.
pub fn delta_n_companion(q: &IntPoly, n: u64) -> Result<BigInt> {
    check_delta_args(q, n)?;
    if q.deg() == 0 {
        return Ok(BigInt::one());
    }
    Ok(companion(q)?.pow(n).sub_identity().determinant())
}

pub fn delta_n(q: &IntPoly, n: u64, engine: DeltaEngine) -> Result<BigInt> {
    match engine {
        DeltaEngine::Resultant => delta_n_resultant(q, n),
        DeltaEngine::Companion => delta_n_companion(q, n),
    }
}

/// Fixed-point count of the `n`-th iterate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixCount {
    pub value: BigUint,
    /// Set when the input is not known to be a genuine rational
    /// representation and the value is `|Delta_n|`.
    pub formal: bool,
}

/// `F(n) = Delta_n(chi_r)`.
///
/// A conjugate-closed `chi_r` always has `Delta_n >= 0`, and a negative
/// value means the polynomial cannot be a rational representation. A
/// vanishing `Delta_n` is the convention for an infinite fixed-point set.
pub fn fix_count(chi_r: &IntPoly, n: u64, realization: Realization) -> Result<FixCount> {
    let delta = delta_n_companion(chi_r, n)?;
    fix_value(delta, n, realization).map(|value| FixCount {
        value,
        formal: realization.is_formal(),
    })
}

fn fix_value(delta: BigInt, n: u64, realization: Realization) -> Result<BigUint> {
    match (delta.sign(), realization) {
        (Sign::Minus, Realization::ConjugateClosed) => Err(Error::InputValidation(format!(
            "Delta_{n} = {delta} is negative; not a conjugate-closed characteristic polynomial"
        ))),
        _ => Ok(delta.magnitude().clone()),
    }
}

/// `F(1..=n_max)` together with its split into the periodic factor
/// `Delta_n(P)` and the wild factor `|Delta_n(Q)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixSequence {
    pub chi_r: IntPoly,
    pub formal: bool,
    /// lcm of the cyclotomic orders; 1 when there are none.
    pub period: u64,
    pub rows: Vec<FixRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixRow {
    pub n: u64,
    #[serde(rename = "F", serialize_with = "as_decimal")]
    pub value: BigUint,
    /// `Delta_n(P)`, signed; periodic in `n` with period `FixSequence::period`.
    #[serde(serialize_with = "as_decimal")]
    pub periodic_factor: BigInt,
    /// `|Delta_n(t^m Q)|`, zero roots included.
    #[serde(serialize_with = "as_decimal")]
    pub wild_factor: BigUint,
}

fn as_decimal<T: ToString, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl FixSequence {
    pub fn values(&self) -> impl Iterator<Item = &BigUint> {
        self.rows.iter().map(|r| &r.value)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,F,periodic_factor,wild_factor\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.n, r.value, r.periodic_factor, r.wild_factor
            ));
        }
        out
    }
}

pub fn fix_sequence(chi_r: &IntPoly, n_max: u64, realization: Realization) -> Result<FixSequence> {
    if n_max == 0 {
        return domain("n_max must be at least 1");
    }
    let split = cyclotomic_split(chi_r)?;
    let period = crate::dynamics::period_of(&split.cyclotomic);
    let zero_sign = BigInt::from(if split.zero_multiplicity % 2 == 1 { -1 } else { 1 });
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let periodic = periodic_factor_at(&split.cyclotomic, n)?;
            // each zero root contributes 0^n - 1 = -1
            let wild = delta_n_companion(&split.wild, n)? * &zero_sign;
            let value = fix_value(&periodic * &wild, n, realization)?;
            Ok(FixRow {
                n,
                value,
                periodic_factor: periodic,
                wild_factor: wild.magnitude().clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixSequence {
        chi_r: chi_r.clone(),
        formal: realization.is_formal(),
        period,
        rows,
    })
}
