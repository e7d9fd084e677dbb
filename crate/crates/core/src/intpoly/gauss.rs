use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

/// Gaussian integer `re + im * i`.
pub type GaussInt = Complex<BigInt>;

/// Polynomial with Gaussian-integer coefficients, ascending order, trimmed
/// like [`IntPoly`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussIntPoly {
    coeffs: Vec<GaussInt>,
}

impl GaussIntPoly {
    pub fn new(mut coeffs: Vec<GaussInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GaussIntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> GaussIntPoly {
        GaussIntPoly {
            coeffs: self.coeffs.iter().map(Complex::conj).collect(),
        }
    }

    pub fn mul(&self, rhs: &GaussIntPoly) -> GaussIntPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return GaussIntPoly::default();
        }
        let mut out = vec![GaussInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GaussIntPoly::new(out)
    }

    /// `self * conj(self)`, whose coefficients are real integers.
    pub fn norm_poly(&self) -> Result<IntPoly> {
        self.mul(&self.conj()).into_int_poly()
    }

    /// Drops the imaginary parts, failing if any is nonzero.
    pub fn into_int_poly(self) -> Result<IntPoly> {
        let mut re = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.into_iter().enumerate() {
            if !c.im.is_zero() {
                return Err(Error::Internal(format!(
                    "coefficient of t^{k} has nonzero imaginary part {}",
                    c.im
                )));
            }
            re.push(c.re);
        }
        Ok(IntPoly::new(re))
    }
}

impl From<&IntPoly> for GaussIntPoly {
    fn from(p: &IntPoly) -> Self {
        GaussIntPoly::new(
            p.coeffs()
                .iter()
                .map(|c| GaussInt::new(c.clone(), BigInt::zero()))
                .collect(),
        )
    }
}
