//! Splitting a characteristic polynomial into the part whose roots are roots
//! of unity and the part whose roots are not, plus exact counting of the
//! unimodular roots of the latter.

mod modp;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::factorize;
use crate::error::{domain, Error, Result};
use crate::intpoly::{
    cyclotomic, gcd_primitive, squarefree_part, sturm_real_root_count, Endpoints, IntPoly,
    Rational,
};

pub use modp::{irreducible_mod_p_witness, IrreducibilityWitness};

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(k: u64) -> Result<u64> {
    if k == 0 {
        return domain("totient of 0");
    }
    Ok(factorize(k)
        .into_iter()
        .fold(k, |acc, (p, _)| acc / p * (p - 1)))
}

/// All `k` with `phi(k) <= d`.
///
/// Since `phi(k) >= sqrt(k / 2)`, every such `k` is at most `2 d^2`.
pub fn inverse_totient_bound(d: u64) -> BTreeSet<u64> {
    let bound = 2 * d * d;
    (1..=bound.max(2))
        .filter(|&k| euler_phi(k).is_ok_and(|phi| phi <= d))
        .collect()
}

/// `chi = t^zero_multiplicity * prod_k Phi_k^mult(k) * wild`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSplit {
    pub input: IntPoly,
    pub zero_multiplicity: usize,
    /// Cyclotomic order `k` mapped to the multiplicity of `Phi_k`.
    pub cyclotomic: BTreeMap<u64, u32>,
    /// Monic, nonzero constant term, no cyclotomic factor.
    pub wild: IntPoly,
    /// Distinct roots of `wild` on the unit circle. None are roots of unity.
    pub unit_circle_distinct: usize,
    /// `gcd(wild, reciprocal(wild))`.
    pub self_reciprocal_factor: IntPoly,
}

impl SpectralSplit {
    /// `P`, the product of the cyclotomic factors with multiplicity.
    pub fn cyclotomic_part(&self) -> Result<IntPoly> {
        self.cyclotomic
            .iter()
            .map(|(&k, &m)| Ok(cyclotomic(k)?.pow(m)))
            .product()
    }

    pub fn has_cyclotomic_factor(&self) -> bool {
        !self.cyclotomic.is_empty()
    }

    /// Rebuilds the input from its pieces.
    pub fn reconstruct(&self) -> Result<IntPoly> {
        Ok((&self.cyclotomic_part()? * &self.wild).shift(self.zero_multiplicity))
    }

    /// Re-tests every `Phi_k` with `phi(k) <= deg(wild)` against `wild`.
    pub fn wild_is_cyclotomic_free(&self) -> Result<bool> {
        Ok(first_cyclotomic_divisor(&self.wild)?.is_none())
    }
}

impl Serialize for SpectralSplit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("zero_multiplicity", &self.zero_multiplicity)?;
        map.serialize_entry("cyclotomic", &self.cyclotomic)?;
        map.serialize_entry("wild", &self.wild)?;
        map.serialize_entry("unit_circle_distinct", &self.unit_circle_distinct)?;
        map.end()
    }
}

fn candidate_orders(deg: usize) -> impl Iterator<Item = (u64, u64)> {
    inverse_totient_bound(deg as u64)
        .into_iter()
        .map(|k| (k, euler_phi(k).expect("k >= 1")))
}

fn divides_monic(p: &IntPoly, m: &IntPoly) -> Option<IntPoly> {
    let (q, r) = p.div_rem_monic(m);
    r.is_zero().then_some(q)
}

fn first_cyclotomic_divisor(p: &IntPoly) -> Result<Option<u64>> {
    if p.is_constant() {
        return Ok(None);
    }
    for (k, _) in candidate_orders(p.deg()) {
        if divides_monic(p, &cyclotomic(k)?).is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Factors a monic polynomial as `t^m * P * Q` with `P` a product of
/// cyclotomic polynomials and `Q` free of roots of unity and of zero roots.
pub fn cyclotomic_split(p: &IntPoly) -> Result<SpectralSplit> {
    if p.is_zero() {
        return domain("cannot split the zero polynomial");
    }
    if !p.is_monic() {
        return domain(format!("{p} is not monic"));
    }
    let (zero_multiplicity, mut wild) = p.strip_zero_roots();
    let mut orders = BTreeMap::new();
    for (k, phi) in candidate_orders(wild.deg()) {
        if phi as usize > wild.deg() {
            continue;
        }
        let ck = cyclotomic(k)?;
        while let Some(q) = divides_monic(&wild, &ck) {
            wild = q;
            *orders.entry(k).or_insert(0) += 1;
        }
    }
    let (unit_circle_distinct, self_reciprocal_factor) = count_unimodular(&wild)?;
    Ok(SpectralSplit {
        input: p.clone(),
        zero_multiplicity,
        cyclotomic: orders,
        wild,
        unit_circle_distinct,
        self_reciprocal_factor,
    })
}

/// Number of distinct roots of `q` on the unit circle, together with the
/// self-reciprocal factor `gcd(q, reciprocal(q))` that carries them.
///
/// `q` must be monic with `q(0) != 0` and no cyclotomic factor.
pub fn unit_circle_count(q: &IntPoly) -> Result<(usize, IntPoly)> {
    if q.is_zero() || !q.is_monic() {
        return domain("unit-circle count needs a monic polynomial");
    }
    if q.constant_term().is_zero() {
        return domain("unit-circle count needs a nonzero constant term");
    }
    if let Some(k) = first_cyclotomic_divisor(q)? {
        return domain(format!("cyclotomic factor Phi_{k} present; split it off first"));
    }
    count_unimodular(q)
}

fn count_unimodular(q: &IntPoly) -> Result<(usize, IntPoly)> {
    if q.is_constant() {
        return Ok((0, IntPoly::one()));
    }
    let s = gcd_primitive(q, &q.reciprocal()?)?;
    if s.is_constant() {
        return Ok((0, s));
    }
    let sq = squarefree_part(&s)?;
    if !sq.is_palindromic() {
        // anti-palindromic forces a root at t = 1
        return Err(Error::Internal(format!(
            "self-reciprocal factor {sq} is not palindromic"
        )));
    }
    let cheb = chebyshev_transform(&sq)?;
    let two = Rational::from(BigInt::from(2));
    let real = sturm_real_root_count(&cheb, &-two.clone(), &two, Endpoints::Open)?;
    Ok((2 * real, s))
}

/// For palindromic `s` of degree `2e`, the `T` of degree `e` with
/// `s(t) = t^e T(t + 1/t)`.
pub fn chebyshev_transform(s: &IntPoly) -> Result<IntPoly> {
    if s.is_zero() || s.constant_term().is_zero() {
        return domain("chebyshev transform needs a nonzero constant term");
    }
    if !s.is_palindromic() {
        return domain(format!("{s} is not palindromic"));
    }
    if s.deg() % 2 == 1 {
        return domain(format!("{s} has odd degree"));
    }
    let e = s.deg() / 2;
    // t^j + t^-j as a polynomial in x = t + 1/t
    let mut prev = IntPoly::constant(BigInt::from(2));
    let mut cur = IntPoly::x();
    let mut out = IntPoly::constant(s.coeff(e));
    for j in 1..=e {
        if j > 1 {
            let next = &(&IntPoly::x() * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        out = &out + &cur.scale(&s.coeff(e + j));
    }
    Ok(out)
}
