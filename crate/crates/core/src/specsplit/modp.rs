//! Irreducibility certificates from reductions modulo small primes.
//!
//! A monic integer polynomial that stays irreducible modulo some prime is
//! irreducible over the rationals. The converse fails, so a negative answer
//! carries no information.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::first_primes;
use crate::error::{domain, Result};
use crate::intpoly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "prime", rename_all = "snake_case")]
pub enum IrreducibilityWitness {
    Irreducible(u64),
    Inconclusive,
}

/// Tries the first `prime_budget` primes and returns the first one modulo
/// which `p` is irreducible.
pub fn irreducible_mod_p_witness(p: &IntPoly, prime_budget: usize) -> Result<IrreducibilityWitness> {
    if !p.is_monic() || p.deg() == 0 {
        return domain("mod-p witness needs a monic polynomial of degree >= 1");
    }
    for prime in first_primes(prime_budget) {
        let f = reduce(p, prime);
        if is_irreducible_mod(&f, prime) {
            return Ok(IrreducibilityWitness::Irreducible(prime));
        }
    }
    Ok(IrreducibilityWitness::Inconclusive)
}

type Fp = Vec<u64>;

fn reduce(p: &IntPoly, m: u64) -> Fp {
    let mb = BigInt::from(m);
    let mut v: Fp = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c % &mb;
            let r = if r < BigInt::from(0) { r + &mb } else { r };
            r.to_u64().expect("reduced below the modulus")
        })
        .collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Fp) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn rem(a: &Fp, b: &Fp, m: u64) -> Fp {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], m);
    while r.len() > db {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let c = top * inv % m;
        let shift = r.len() - db;
        for (j, &bc) in b[..db].iter().enumerate() {
            r[shift + j] = (r[shift + j] + m - c * bc % m) % m;
        }
    }
    trim(&mut r);
    r
}

fn mul_mod(a: &Fp, b: &Fp, f: &Fp, m: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % m;
        }
    }
    trim(&mut out);
    rem(&out, f, m)
}

fn pow_poly(base: &Fp, mut e: u64, f: &Fp, m: u64) -> Fp {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, f, m);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod(&b, &b, f, m);
        }
    }
    acc
}

fn gcd(a: &Fp, b: &Fp, m: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, m);
        a = b;
        b = r;
    }
    a
}

fn is_unit(a: &Fp) -> bool {
    a.len() == 1
}

fn derivative(a: &Fp, m: u64) -> Fp {
    let mut d: Fp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| (k as u64 % m) * c % m)
        .collect();
    trim(&mut d);
    d
}

/// Distinct-degree test: a squarefree monic `f` of degree `d` is
/// irreducible iff `gcd(t^(m^i) - t, f) = 1` for all `i <= d / 2`.
fn is_irreducible_mod(f: &Fp, m: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let df = derivative(f, m);
    if df.is_empty() || !is_unit(&gcd(f, &df, m)) {
        return false;
    }
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = pow_poly(&h, m, f, m);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + m - 1) % m;
        trim(&mut diff);
        if diff.is_empty() || !is_unit(&gcd(f, &diff, m)) {
            return false;
        }
    }
    true
}
