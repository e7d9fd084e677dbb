#![allow(dead_code)]

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use torfix::endo::{
    charpoly_gaussian, companion, delta_n_companion, delta_n_resultant, realify, GaussianMatrix,
};
use torfix::intpoly::{cyclotomic, sturm_real_root_count, Endpoints};
use torfix::{IntPoly, Rational};

pub fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn lehmer() -> IntPoly {
    poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

pub fn e3_matrix() -> GaussianMatrix {
    GaussianMatrix::from_i64_rows(&[
        &[(0, 0), (0, 0), (0, -1)],
        &[(1, 0), (0, 0), (0, -2)],
        &[(0, 0), (1, 0), (-2, 0)],
    ])
    .unwrap()
}

/// Roots as eigenvalues of the f64 companion matrix (Schur decomposition).
pub fn numeric_roots(p: &IntPoly) -> Vec<Complex64> {
    let d = p.deg();
    let lead = p.leading_coeff().unwrap().to_f64().unwrap();
    let m = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -p.coeff(i).to_f64().unwrap() / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    // unshifted QR can cycle on symmetric spectra such as t^4 + 2t^2 + 4,
    // so bound the iterations and retry on a shifted matrix
    for shift in [0.0, 0.37, -0.61, 1.13] {
        let shifted = &m + DMatrix::identity(d, d) * shift;
        if let Some(schur) = Schur::try_new(shifted, f64::EPSILON, 10_000) {
            return schur
                .complex_eigenvalues()
                .iter()
                .map(|z| z - shift)
                .collect();
        }
    }
    panic!("no eigenvalue convergence for {p}");
}

/// `ln |a_d| + sum ln max(1, |root|)`.
pub fn numeric_mahler(p: &IntPoly) -> f64 {
    let lead = p.leading_coeff().unwrap().abs().to_f64().unwrap().ln();
    lead + numeric_roots(p)
        .iter()
        .map(|r| r.norm().max(1.0).ln())
        .sum::<f64>()
}

pub fn monic_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg)
        .prop_flat_map(move |d| prop::collection::vec(-bound..=bound, d))
        .prop_map(|mut c| {
            c.push(1);
            IntPoly::from_i64s(&c)
        })
}

pub fn gaussian_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = GaussianMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec((-bound..=bound, -bound..=bound), n * n).prop_map(move |e| {
            let rows: Vec<&[(i64, i64)]> = e.chunks(n).collect();
            GaussianMatrix::from_i64_rows(&rows).unwrap()
        })
    })
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

/// `prod_{d | n} Phi_d = t^n - 1`.
pub fn phi_product(n: u64) -> Result<(), TestCaseError> {
    let prod = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| cyclotomic(d).unwrap())
        .fold(IntPoly::one(), |acc, c| acc * c);
    if prod == IntPoly::x_pow_minus_one(n as usize) {
        Ok(())
    } else {
        Err(fail(format!("divisor product of t^{n} - 1 came out as {prod}")))
    }
}

/// `Delta_n(ab) = Delta_n(a) Delta_n(b)`, on both engines.
pub fn delta_multiplicative(a: &IntPoly, b: &IntPoly, n: u64) -> Result<(), TestCaseError> {
    let ab = a * b;
    let prod = delta_n_companion(a, n).unwrap() * delta_n_companion(b, n).unwrap();
    let lhs_c = delta_n_companion(&ab, n).unwrap();
    let lhs_r = delta_n_resultant(&ab, n).unwrap();
    if lhs_c == prod && lhs_r == prod {
        Ok(())
    } else {
        Err(fail(format!("n={n}: {lhs_c} / {lhs_r} vs {prod} for {a} and {b}")))
    }
}

pub fn reciprocal_involution(p: &IntPoly) -> Result<(), TestCaseError> {
    if p.constant_term().is_zero() {
        return Err(TestCaseError::reject("zero constant term"));
    }
    let r = p.reciprocal().unwrap();
    prop_assert_eq!(r.leading_coeff().unwrap(), &p.constant_term());
    prop_assert_eq!(r.reciprocal().unwrap(), p.clone());
    Ok(())
}

pub fn companion_round_trip(p: &IntPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(companion(p).unwrap().charpoly(), p.clone());
    Ok(())
}

/// `det(tI - realify(A)) = chi_a * conj(chi_a)`.
pub fn realify_equivalence(a: &GaussianMatrix) -> Result<(), TestCaseError> {
    let (chi_a, chi_r) = charpoly_gaussian(a).unwrap();
    prop_assert_eq!(realify(a).charpoly(), chi_r.clone());
    prop_assert_eq!(chi_a.mul(&chi_a.conj()).into_int_poly().unwrap(), chi_r);
    Ok(())
}

/// Distinct real roots in the open interval `(lo, hi)`, from eigenvalues.
/// Rejects cases too close to call in floating point.
pub fn numeric_real_count(p: &IntPoly, lo: f64, hi: f64) -> Result<usize, TestCaseError> {
    let mut reals = Vec::new();
    for r in numeric_roots(p) {
        let im = r.im.abs();
        if im > 1e-9 && im < 1e-4 {
            return Err(TestCaseError::reject("nearly real pair"));
        }
        if im <= 1e-9 {
            if (r.re - lo).abs() < 1e-6 || (r.re - hi).abs() < 1e-6 {
                return Err(TestCaseError::reject("root at an endpoint"));
            }
            if r.re > lo && r.re < hi {
                reals.push(r.re);
            }
        }
    }
    reals.sort_by(f64::total_cmp);
    reals.dedup_by(|a, b| (*a - *b).abs() < 1e-4);
    Ok(reals.len())
}

pub fn sturm_vs_numeric(p: &IntPoly, lo: i64, hi: i64) -> Result<(), TestCaseError> {
    let expected = numeric_real_count(p, lo as f64, hi as f64)?;
    let got = sturm_real_root_count(
        p,
        &Rational::from_integer(BigInt::from(lo)),
        &Rational::from_integer(BigInt::from(hi)),
        Endpoints::Open,
    )
    .unwrap();
    prop_assert_eq!(got, expected, "{} on ({}, {})", p, lo, hi);
    Ok(())
}

/// `(m^n - 1)^e`.
pub fn power_gap(m: i64, n: u64, e: u32) -> BigInt {
    (num_traits::pow(BigInt::from(m), n as usize) - BigInt::one()).pow(e)
}
