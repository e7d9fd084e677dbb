//! Growth classification of `F(n)` and the spectral diagnostics around it.
//!
//! Every verdict here is decided from the exact cyclotomic split. The Mahler
//! measure estimates that ride along are advisory.

mod mahler;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{gcd, lcm};
use crate::endo::{delta_n_companion, Realization};
use crate::error::{domain, Result};
use crate::intpoly::IntPoly;
use crate::specsplit::{cyclotomic_split, euler_phi, SpectralSplit};

pub use mahler::{
    entropy, ln_biguint, log_spaced_points, mahler_convergence_table, mahler_measure,
    EntropyReport, MahlerEstimate, MahlerMethod, DEFAULT_PRECISION_BITS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthKind {
    Exponential,
    Periodic,
    Mixed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthClassification {
    pub kind: GrowthKind,
    /// lcm of the cyclotomic orders for periodic and mixed growth, else 1.
    pub period: u64,
    /// Mixed only: `F(n) = 0` exactly when some member divides `n`.
    pub forbidden_residues: BTreeSet<u64>,
    /// Mahler measure of the wild part, which equals that of `chi_r`.
    pub entropy: MahlerEstimate,
    /// Mixed growth never happens on a simple torus.
    pub non_simple_implied: bool,
}

/// The machine-readable classification document.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub kind: GrowthKind,
    pub period: u64,
    pub forbidden_residues: Vec<u64>,
    pub entropy: EntropySummary,
    pub formal_input: bool,
    pub non_simple_implied: bool,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct EntropySummary {
    pub log_value: f64,
    pub error_bound: f64,
}

impl GrowthClassification {
    pub fn report(&self, realization: Realization) -> ClassificationReport {
        ClassificationReport {
            kind: self.kind,
            period: self.period,
            forbidden_residues: self.forbidden_residues.iter().copied().collect(),
            entropy: EntropySummary {
                log_value: self.entropy.log_value,
                error_bound: self.entropy.error_bound,
            },
            formal_input: realization.is_formal(),
            non_simple_implied: self.non_simple_implied,
        }
    }
}

pub(crate) fn period_of(orders: &BTreeMap<u64, u32>) -> u64 {
    orders.keys().fold(1, |acc, &k| lcm(acc, k))
}

pub fn classify(chi_r: &IntPoly) -> Result<GrowthClassification> {
    classify_with(chi_r, DEFAULT_PRECISION_BITS)
}

pub fn classify_with(chi_r: &IntPoly, precision_bits: u32) -> Result<GrowthClassification> {
    if chi_r.is_constant() {
        return domain("cannot classify a constant polynomial");
    }
    let split = cyclotomic_split(chi_r)?;
    classify_split(&split, precision_bits)
}

pub fn classify_split(split: &SpectralSplit, precision_bits: u32) -> Result<GrowthClassification> {
    let wild_trivial = split.wild.is_constant();
    let kind = match (split.has_cyclotomic_factor(), wild_trivial) {
        (_, true) => GrowthKind::Periodic,
        (false, false) => GrowthKind::Exponential,
        (true, false) => GrowthKind::Mixed,
    };
    let entropy = mahler_measure(&split.wild, precision_bits)?;
    // a wild part always has a root outside the closed unit disk
    debug_assert!(wild_trivial || entropy.log_value + entropy.error_bound > 0.0);
    let (period, forbidden_residues) = match kind {
        GrowthKind::Exponential => (1, BTreeSet::new()),
        GrowthKind::Periodic => (period_of(&split.cyclotomic), BTreeSet::new()),
        GrowthKind::Mixed => (
            period_of(&split.cyclotomic),
            split.cyclotomic.keys().copied().collect(),
        ),
    };
    Ok(GrowthClassification {
        kind,
        period,
        forbidden_residues,
        entropy,
        non_simple_implied: kind == GrowthKind::Mixed,
    })
}

/// `Phi_m(1)`: 0 for `m = 1`, `p` for a prime power `p^a`, else 1.
fn cyclotomic_at_one(m: u64) -> BigInt {
    if m == 1 {
        return BigInt::zero();
    }
    let f = crate::arith::factorize(m);
    if f.len() == 1 {
        BigInt::from(f[0].0)
    } else {
        BigInt::one()
    }
}

/// `Delta_n(Phi_k)` in closed form. With `d = gcd(n, k)`, the map
/// `z -> z^n` sends the primitive `k`-th roots onto the primitive
/// `(k/d)`-th roots, each hit `phi(k) / phi(k/d)` times, and
/// `prod (z - 1)` over the primitive `m`-th roots is `(-1)^phi(m) Phi_m(1)`.
fn delta_cyclotomic(k: u64, n: u64) -> Result<BigInt> {
    let m = k / gcd(n, k);
    let phi_m = euler_phi(m)?;
    let base = if phi_m % 2 == 1 {
        -cyclotomic_at_one(m)
    } else {
        cyclotomic_at_one(m)
    };
    Ok(num_traits::pow(base, (euler_phi(k)? / phi_m) as usize))
}

/// `Delta_n(P)` for `P = prod Phi_k^mult(k)`.
pub fn periodic_factor_at(orders: &BTreeMap<u64, u32>, n: u64) -> Result<BigInt> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    let mut acc = BigInt::one();
    for (&k, &mult) in orders {
        acc *= num_traits::pow(delta_cyclotomic(k, n)?, mult as usize);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Longest period [`periodic_profile`] will tabulate.
pub const MAX_TABULATED_PERIOD: u64 = 1 << 20;

/// The period of `Delta_n(P)` and its values over one period.
pub fn periodic_profile(orders: &BTreeMap<u64, u32>) -> Result<(u64, Vec<BigInt>)> {
    let period = period_of(orders);
    if period > MAX_TABULATED_PERIOD {
        return domain(format!("period {period} is too long to tabulate"));
    }
    let table = (1..=period)
        .map(|n| periodic_factor_at(orders, n))
        .collect::<Result<Vec<_>>>()?;
    Ok((period, table))
}

fn is_mixed(split: &SpectralSplit) -> bool {
    split.has_cyclotomic_factor() && !split.wild.is_constant()
}

/// The exponentially growing `h` of mixed growth: `F(n)` where it is
/// nonzero, and the wild contribution `|Delta_n(t^m Q)|` where it vanishes.
pub fn h_function(split: &SpectralSplit, n: u64) -> Result<BigUint> {
    if !is_mixed(split) {
        return domain("h is only defined for mixed growth");
    }
    let wild = delta_n_companion(&split.wild, n)?.magnitude().clone();
    let periodic = periodic_factor_at(&split.cyclotomic, n)?;
    if periodic.is_zero() {
        Ok(wild)
    } else {
        Ok(periodic.magnitude() * wild)
    }
}

/// Certificate attached to the self-reciprocal factor that carries the
/// unimodular eigenvalues which are not roots of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocalCertificate {
    pub factor: IntPoly,
    pub constant_term_is_one: bool,
    pub even_degree: bool,
    pub palindromic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErgodicityReport {
    /// No eigenvalue is a root of unity.
    pub no_root_of_unity_eigenvalues: bool,
    pub unit_circle_non_rou_distinct: usize,
    /// Present when `unit_circle_non_rou_distinct > 0`.
    pub certificates: Vec<ReciprocalCertificate>,
    /// When every eigenvalue is a root of unity: the lcm of their orders,
    /// which the order of the rational representation divides whenever it
    /// is diagonalizable. Not a proof of finite order.
    pub finite_order_candidate: Option<u64>,
}

pub fn ergodicity_report(chi_r: &IntPoly) -> Result<ErgodicityReport> {
    let split = cyclotomic_split(chi_r)?;
    Ok(ergodicity_from_split(&split))
}

pub fn ergodicity_from_split(split: &SpectralSplit) -> ErgodicityReport {
    let certificates = if split.unit_circle_distinct > 0 {
        let s = &split.self_reciprocal_factor;
        vec![ReciprocalCertificate {
            factor: s.clone(),
            constant_term_is_one: s.constant_term().is_one(),
            even_degree: s.deg() % 2 == 0,
            palindromic: s.is_palindromic(),
        }]
    } else {
        Vec::new()
    };
    let all_rou = split.wild.is_constant() && split.zero_multiplicity == 0;
    ErgodicityReport {
        no_root_of_unity_eigenvalues: !split.has_cyclotomic_factor(),
        unit_circle_non_rou_distinct: split.unit_circle_distinct,
        certificates,
        finite_order_candidate: all_rou.then(|| period_of(&split.cyclotomic)),
    }
}

/// Witness for `(e^(m - eps))^n <= F(n) <= (e^(m + eps))^n` on `[start, n_hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SandwichWitness {
    pub start: u64,
    pub n_hi: u64,
    pub log_mahler: f64,
    pub eps: f64,
}

/// Smallest `N` such that the exponential sandwich holds for every
/// `n in [N, n_hi]`, or `None` if it fails at `n_hi` itself.
///
/// Requires exponential growth; the comparison is done on `ln F(n)`.
pub fn exponential_sandwich(chi_r: &IntPoly, eps: f64, n_hi: u64) -> Result<Option<SandwichWitness>> {
    let class = classify(chi_r)?;
    if class.kind != GrowthKind::Exponential {
        return domain("the exponential sandwich needs exponential growth");
    }
    let m = class.entropy.log_value;
    let logs: Vec<f64> = {
        use rayon::prelude::*;
        (1..=n_hi)
            .into_par_iter()
            .map(|n| Ok(ln_biguint(delta_n_companion(chi_r, n)?.magnitude())))
            .collect::<Result<_>>()?
    };
    let mut start = None;
    for n in (1..=n_hi).rev() {
        let lf = logs[(n - 1) as usize];
        let nf = n as f64;
        if lf >= nf * (m - eps) && lf <= nf * (m + eps) {
            start = Some(n);
        } else {
            break;
        }
    }
    Ok(start.map(|start| SandwichWitness {
        start,
        n_hi,
        log_mahler: m,
        eps,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{delta_n_resultant, fix_sequence};
    use crate::intpoly::cyclotomic;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn classification_examples() {
        let c = classify(&p(&[-2, 1]).pow(2)).unwrap();
        assert_eq!(c.kind, GrowthKind::Exponential);
        assert_eq!(c.period, 1);
        assert!((c.entropy.log_value - 2.0 * 2f64.ln()).abs() < 1e-12);

        let c = classify(&p(&[1, 1]).pow(2)).unwrap();
        assert_eq!(c.kind, GrowthKind::Periodic);
        assert_eq!(c.period, 2);
        assert_eq!(c.entropy.log_value, 0.0);

        let mixed = &p(&[1, 1]).pow(2) * &p(&[-2, 1]).pow(2);
        let c = classify(&mixed).unwrap();
        assert_eq!(c.kind, GrowthKind::Mixed);
        assert_eq!(c.forbidden_residues, BTreeSet::from([2]));
        assert_eq!(c.period, 2);
        assert!(c.non_simple_implied);

        assert!(classify(&p(&[3])).is_err());
    }

    #[test]
    fn report_json_shape() {
        let mixed = &p(&[1, 1]).pow(2) * &p(&[-2, 1]).pow(2);
        let r = classify(&mixed).unwrap().report(Realization::Formal);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            vec!["entropy", "forbidden_residues", "formal_input", "kind", "non_simple_implied", "period"]
        );
        assert_eq!(v["kind"], "Mixed");
        assert_eq!(v["forbidden_residues"], serde_json::json!([2]));
    }

    #[test]
    fn periodic_profiles() {
        assert_eq!(
            periodic_profile(&BTreeMap::from([(1, 2)])).unwrap(),
            (1, vec![BigInt::zero()])
        );
        assert_eq!(
            periodic_profile(&BTreeMap::from([(2, 2)])).unwrap(),
            (2, vec![BigInt::from(4), BigInt::zero()])
        );
        // Phi_4 = t^2 + 1: Delta_n = (i^n - 1)(i^-n - 1) = 2 - 2 cos(n pi / 2)
        let (period, table) = periodic_profile(&BTreeMap::from([(4, 1)])).unwrap();
        assert_eq!(period, 4);
        assert_eq!(table, [2, 4, 2, 0].map(BigInt::from).to_vec());
        assert_eq!(periodic_profile(&BTreeMap::new()).unwrap(), (1, vec![BigInt::one()]));
    }

    #[test]
    fn closed_form_matches_engines() {
        for k in 1..=40u64 {
            let phi = cyclotomic(k).unwrap();
            for n in 1..=45u64 {
                let expected = delta_n_resultant(&phi, n).unwrap();
                assert_eq!(delta_cyclotomic(k, n).unwrap(), expected, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn h_examples() {
        let split = cyclotomic_split(&(&p(&[1, 1]).pow(2) * &p(&[-2, 1]).pow(2))).unwrap();
        assert_eq!(h_function(&split, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(h_function(&split, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(h_function(&split, 3).unwrap(), BigUint::from(196u32));
        let exp = cyclotomic_split(&p(&[-2, 1]).pow(2)).unwrap();
        assert!(h_function(&exp, 1).is_err());
    }

    #[test]
    fn h_is_positive_and_matches_nonzero_f() {
        let chi = &(&cyclotomic(3).unwrap() * &cyclotomic(4).unwrap()) * &p(&[1, -3, 1]);
        let split = cyclotomic_split(&chi).unwrap();
        let seq = fix_sequence(&chi, 24, Realization::Formal).unwrap();
        for row in &seq.rows {
            let h = h_function(&split, row.n).unwrap();
            assert!(!h.is_zero());
            if !row.value.is_zero() {
                assert_eq!(h, row.value);
            } else {
                assert!(row.n % 3 == 0 || row.n % 4 == 0);
            }
        }
    }

    #[test]
    fn ergodicity_examples() {
        let r = ergodicity_report(&p(&[-2, 1]).pow(2)).unwrap();
        assert!(r.no_root_of_unity_eigenvalues);
        assert_eq!(r.unit_circle_non_rou_distinct, 0);
        assert!(r.certificates.is_empty());

        let r = ergodicity_report(&p(&[1, 4, 4, 0, 4, 4, 1])).unwrap();
        assert!(r.no_root_of_unity_eigenvalues);
        assert!(r.unit_circle_non_rou_distinct >= 2);
        let cert = &r.certificates[0];
        assert!(cert.constant_term_is_one && cert.even_degree && cert.palindromic);

        let r = ergodicity_report(&p(&[1, 0, 1])).unwrap();
        assert!(!r.no_root_of_unity_eigenvalues);
        assert_eq!(r.finite_order_candidate, Some(4));
    }

    #[test]
    fn sandwich_start_for_doubling() {
        // ln (2^n - 1)^2 >= n (2 ln 2 - 0.1) first holds from n = 3 on
        let w = exponential_sandwich(&p(&[-2, 1]).pow(2), 0.1, 200).unwrap().unwrap();
        assert_eq!(w.start, 3);
        assert!(exponential_sandwich(&p(&[1, 1]).pow(2), 0.1, 20).is_err());
    }
}
