//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order: `coeffs[k]` is the
//! coefficient of `t^k`. The zero polynomial is the empty vector, and every
//! constructor and arithmetic result is trimmed so the last stored
//! coefficient is nonzero.

mod cyclotomic;
mod gauss;
mod gcd;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};

pub use cyclotomic::cyclotomic;
pub use gauss::{GaussInt, GaussIntPoly};
pub use gcd::{gcd_primitive, resultant, squarefree_decomposition, squarefree_part};
pub use sturm::{sturm_chain, sturm_real_root_count, Endpoints};

/// Exact rational numbers, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        IntPoly { coeffs }
    }

    /// `t^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The polynomial divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(t^k)`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Exact Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        Rational::new(self.eval_homogeneous(x.numer(), x.denom()), x.denom().pow(self.deg() as u32))
    }

    /// `d^deg * p(n/d)`, an integer with the sign of `p(n/d)` when `d > 0`.
    pub(crate) fn eval_homogeneous(&self, n: &BigInt, d: &BigInt) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[deg].clone();
        let mut dpow = BigInt::one();
        for k in (0..deg).rev() {
            dpow *= d;
            acc = acc * n + &self.coeffs[k] * &dpow;
        }
        acc
    }

    /// Multiplicity of the root `0` and the polynomial with it removed.
    pub fn strip_zero_roots(&self) -> (usize, IntPoly) {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if m == 0 || self.is_zero() {
            return (0, self.clone());
        }
        (m, IntPoly { coeffs: self.coeffs[m..].to_vec() })
    }

    /// `t^deg * p(1/t)`. Requires `p(0) != 0`, which makes this an involution.
    pub fn reciprocal(&self) -> Result<IntPoly> {
        if self.coeffs.first().is_none_or(Zero::is_zero) {
            return domain("reciprocal requires a nonzero constant term");
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(IntPoly { coeffs })
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn is_antipalindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n.div_ceil(2)).all(|k| self.coeffs[k] == -&self.coeffs[n - 1 - k])
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, m: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(m.is_monic(), "divisor must be monic");
        let dm = m.deg();
        if self.deg() < dm || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dm];
        for k in (0..q.len()).rev() {
            let c = std::mem::take(&mut r[k + dm]);
            if c.is_zero() {
                continue;
            }
            for (j, mc) in m.coeffs[..dm].iter().enumerate() {
                if !mc.is_zero() {
                    r[k + j] -= &c * mc;
                }
            }
            q[k] = c;
        }
        r.truncate(dm);
        (Self::new(q), Self::new(r))
    }

    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        self.div_rem_monic(m).1
    }

    /// Returns `q` with `self = b * q` over the integers, or `None` when no
    /// such integer polynomial exists.
    pub fn exact_divide(&self, b: &IntPoly) -> Result<Option<IntPoly>> {
        if b.is_zero() {
            return domain("division by the zero polynomial");
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let db = b.deg();
        if self.deg() < db {
            return Ok(None);
        }
        let lb = b.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = std::mem::take(&mut r[k + db]);
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (j, bc) in b.coeffs[..db].iter().enumerate() {
                if !bc.is_zero() {
                    r[k + j] -= &c * bc;
                }
            }
            q[k] = c;
        }
        if r[..db].iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::new(q)))
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without fractions.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero());
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return self.clone();
        }
        let lb = b.leading_coeff().unwrap();
        let mut e = self.deg() - db + 1;
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let top = r.pop().unwrap();
            let shift = r.len() - db;
            for c in r.iter_mut() {
                *c *= lb;
            }
            if !top.is_zero() {
                for (j, bc) in b.coeffs[..db].iter().enumerate() {
                    r[shift + j] -= &top * bc;
                }
            }
            e -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let r = Self::new(r);
        if e > 0 {
            r.scale(&num_traits::pow(lb.clone(), e))
        } else {
            r
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<crate::input::DecimalInt>::deserialize(d)?;
        Ok(IntPoly::new(raw.into_iter().map(|c| c.0).collect()))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}
