//! Mahler measure `M(q) = |a_0| prod max(1, |root|)` and its logarithm.
//!
//! Roots of each squarefree factor are located by Aberth-Ehrlich iteration,
//! warm-started in `f64` and polished with `precision_bits`-bit binary
//! floats. Cyclotomic and zero-root factors contribute nothing and are
//! split off exactly beforehand.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::endo::delta_n_companion;
use crate::error::{domain, Result};
use crate::intpoly::{cyclotomic, squarefree_decomposition, IntPoly};
use crate::specsplit::{cyclotomic_split, inverse_totient_bound};

pub const DEFAULT_PRECISION_BITS: u32 = 128;
const MAX_ITERATIONS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum MahlerMethod {
    /// Only zero roots, roots of unity and the leading coefficient remain.
    Exact,
    Aberth { precision_bits: u32, iterations: usize },
}

/// Natural-log Mahler measure with an advisory error bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MahlerEstimate {
    pub log_value: f64,
    pub error_bound: f64,
    pub method: MahlerMethod,
}

/// Removes zero roots and cyclotomic factors, which have measure one.
fn strip_measure_one(q: &IntPoly) -> Result<IntPoly> {
    let (_, mut rest) = q.strip_zero_roots();
    if rest.is_constant() {
        return Ok(rest);
    }
    for k in inverse_totient_bound(rest.deg() as u64) {
        let ck = cyclotomic(k)?;
        if ck.deg() > rest.deg() {
            continue;
        }
        loop {
            let (quot, rem) = rest.div_rem_monic(&ck);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
        }
    }
    Ok(rest)
}

pub fn mahler_measure(q: &IntPoly, precision_bits: u32) -> Result<MahlerEstimate> {
    if q.is_zero() {
        return domain("Mahler measure of the zero polynomial");
    }
    if precision_bits < 53 {
        return domain("precision must be at least 53 bits");
    }
    let lead = ln_biguint(q.leading_coeff().unwrap().magnitude());
    let rest = strip_measure_one(q)?;
    if rest.is_constant() {
        return Ok(MahlerEstimate {
            log_value: lead,
            error_bound: 0.0,
            method: MahlerMethod::Exact,
        });
    }
    let mut log_value = lead;
    let mut error_bound = 0.0;
    let mut iterations = 0;
    for (factor, mult) in squarefree_decomposition(&rest)? {
        let roots = aberth_roots(&factor, precision_bits);
        iterations = iterations.max(roots.iterations);
        for r in &roots.roots {
            log_value += mult as f64 * r.log_contribution;
            error_bound += mult as f64 * r.error;
        }
    }
    error_bound += log_value.abs() * 4.0 * f64::EPSILON;
    Ok(MahlerEstimate {
        log_value,
        error_bound,
        method: MahlerMethod::Aberth {
            precision_bits,
            iterations,
        },
    })
}

/// Topological entropy `m(chi_r)`, with the eigenvalue sum over one
/// representative of each conjugate pair alongside it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyReport {
    /// `m(chi_r)`: sum over all `2g` roots.
    pub topological: MahlerEstimate,
    /// `m(chi_r) / 2`: the sum over the `g` analytic eigenvalues when
    /// `chi_r = chi_a * conj(chi_a)`.
    pub analytic_eigenvalue_sum: f64,
}

pub fn entropy(chi_r: &IntPoly, precision_bits: u32) -> Result<EntropyReport> {
    let topological = mahler_measure(chi_r, precision_bits)?;
    Ok(EntropyReport {
        topological,
        analytic_eigenvalue_sum: topological.log_value / 2.0,
    })
}

/// `ln x` for an arbitrarily large integer; `-inf` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(n, ln|Delta_n(q)| / n)` for each requested `n`.
///
/// The limit of these values is `m(q)` when no root of `q` is a root of
/// unity, so cyclotomic factors are rejected.
pub fn mahler_convergence_table(q: &IntPoly, points: &[u64]) -> Result<Vec<(u64, f64)>> {
    let split = cyclotomic_split(q)?;
    if let Some((&k, _)) = split.cyclotomic.iter().next() {
        return domain(format!(
            "cyclotomic factor Phi_{k} present; the Mahler limit does not apply"
        ));
    }
    if points.contains(&0) {
        return domain("sample points must be positive");
    }
    points
        .par_iter()
        .map(|&n| {
            let d = delta_n_companion(q, n)?;
            Ok((n, ln_biguint(d.magnitude()) / n as f64))
        })
        .collect()
}

/// `1, 2, 4, ...` up to `n_max`, with `n_max` itself appended.
pub fn log_spaced_points(n_max: u64) -> Vec<u64> {
    let mut pts: Vec<u64> = std::iter::successors(Some(1u64), |&n| n.checked_mul(2))
        .take_while(|&n| n <= n_max)
        .collect();
    if pts.last() != Some(&n_max) && n_max >= 1 {
        pts.push(n_max);
    }
    pts
}

type F = FBig<HalfEven, 2>;

#[derive(Clone)]
struct Cx {
    re: F,
    im: F,
}

impl Cx {
    fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn norm_sqr(&self) -> F {
        &self.re * &self.re + &self.im * &self.im
    }
    fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sqr();
        Cx {
            re: (&self.re * &o.re + &self.im * &o.im) / &d,
            im: (&self.im * &o.re - &self.re * &o.im) / &d,
        }
    }
    fn is_zero(&self) -> bool {
        self.re == F::ZERO && self.im == F::ZERO
    }
    fn abs_f64(&self) -> f64 {
        self.norm_sqr().sqrt().to_f64().value()
    }
}

struct Ctx {
    prec: usize,
}

impl Ctx {
    fn real(&self, x: f64) -> F {
        F::try_from(x).expect("finite").with_precision(self.prec).value()
    }
    fn int(&self, x: &BigInt) -> F {
        let i: dashu_int::IBig = x.to_string().parse().expect("decimal integer");
        F::from(i).with_precision(self.prec).value()
    }
    fn cx(&self, z: Complex64) -> Cx {
        Cx { re: self.real(z.re), im: self.real(z.im) }
    }
}

struct Root {
    log_contribution: f64,
    error: f64,
}

struct Roots {
    roots: Vec<Root>,
    iterations: usize,
}

/// `(p(z), p'(z))` by Horner.
fn eval_with_derivative(coeffs: &[Cx], z: &Cx, zero: &Cx) -> (Cx, Cx) {
    let mut val = zero.clone();
    let mut der = zero.clone();
    for c in coeffs.iter().rev() {
        der = der.mul(z).add(&val);
        val = val.mul(z).add(c);
    }
    (val, der)
}

fn eval_with_derivative_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::zero();
    let mut der = Complex64::zero();
    for &c in coeffs.iter().rev() {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

/// Initial points on a circle through the geometric mean of the root moduli,
/// with an irrational angular offset to avoid symmetric stalls.
fn initial_guesses(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d].abs();
    let c0 = coeffs[0].abs().max(f64::MIN_POSITIVE);
    let radius = (c0 / lead).powf(1.0 / d as f64).clamp(0.5, 4.0);
    (0..d)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect()
}

fn aberth_f64(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let mut z = initial_guesses(coeffs);
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let (v, dv) = eval_with_derivative_f64(coeffs, z[i]);
            if v == Complex64::zero() {
                continue;
            }
            let w = v / dv;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = w / (1.0 - w * s);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    z.iter().all(|c| c.re.is_finite() && c.im.is_finite()).then_some(z)
}

fn aberth_roots(p: &IntPoly, precision_bits: u32) -> Roots {
    let d = p.deg();
    let ctx = Ctx { prec: precision_bits as usize };
    let coeffs_f64: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
    let start = aberth_f64(&coeffs_f64).unwrap_or_else(|| initial_guesses(&coeffs_f64));
    let coeffs: Vec<Cx> = p
        .coeffs()
        .iter()
        .map(|c| Cx { re: ctx.int(c), im: ctx.real(0.0) })
        .collect();
    let zero = ctx.cx(Complex64::zero());
    let one = ctx.cx(Complex64::new(1.0, 0.0));
    let mut z: Vec<Cx> = start.into_iter().map(|c| ctx.cx(c)).collect();
    let threshold = 2f64.powi(-(precision_bits as i32) / 2);

    let mut iterations = 0;
    let mut corrections = vec![0.0f64; d];
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut converged = true;
        for i in 0..d {
            let (v, dv) = eval_with_derivative(&coeffs, &z[i], &zero);
            if v.is_zero() || dv.is_zero() {
                corrections[i] = 0.0;
                continue;
            }
            let w = v.div(&dv);
            let mut s = zero.clone();
            for j in (0..d).filter(|&j| j != i) {
                s = s.add(&one.div(&z[i].sub(&z[j])));
            }
            let step = w.div(&one.sub(&w.mul(&s)));
            let size = step.abs_f64();
            z[i] = z[i].sub(&step);
            corrections[i] = size;
            if size > threshold * z[i].abs_f64().max(1.0) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }

    let roots = z
        .iter()
        .map(|zi| {
            let (v, dv) = eval_with_derivative(&coeffs, zi, &zero);
            // a root of p lies within d |p(z) / p'(z)| of z
            let radius = if v.is_zero() {
                0.0
            } else if dv.is_zero() {
                f64::INFINITY
            } else {
                d as f64 * v.div(&dv).abs_f64()
            };
            let norm_sqr = zi.norm_sqr();
            let abs = norm_sqr.clone().sqrt().to_f64().value();
            let log_contribution = if abs > 1.0 {
                (norm_sqr.ln() / ctx.real(2.0)).to_f64().value()
            } else {
                0.0
            };
            let error = if abs + radius <= 1.0 {
                0.0
            } else {
                radius / (abs - radius).max(0.5)
            };
            Root { log_contribution, error }
        })
        .collect();
    Roots { roots, iterations }
}
