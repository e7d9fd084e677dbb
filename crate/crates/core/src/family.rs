//! The polynomials `p_g(t) = 1 + t + ... + t^(2g) - 3t - 3t^(2g-1)`.
//!
//! They are palindromic of degree `2g` and carry roots on the unit circle
//! that are not roots of unity. The scan checks, per `g`, that no
//! cyclotomic factor is present and counts the unimodular roots exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{mahler_measure, MahlerEstimate};
use crate::error::{domain, Result};
use crate::intpoly::IntPoly;
use crate::specsplit::{cyclotomic_split, irreducible_mod_p_witness, IrreducibilityWitness};

pub fn family_polynomial(g: usize) -> Result<IntPoly> {
    if g == 0 {
        return domain("family index must be at least 1");
    }
    let mut coeffs = vec![BigInt::from(1); 2 * g + 1];
    coeffs[1] -= 3;
    coeffs[2 * g - 1] -= 3;
    Ok(IntPoly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyRow {
    pub g: usize,
    pub cyclotomic: BTreeMap<u64, u32>,
    pub unit_circle_distinct: usize,
    pub irreducibility: IrreducibilityWitness,
    pub mahler: MahlerEstimate,
}

impl FamilyRow {
    pub fn has_cyclotomic_factor(&self) -> bool {
        !self.cyclotomic.is_empty()
    }
}

pub fn scan_row(g: usize, prime_budget: usize, precision_bits: u32) -> Result<FamilyRow> {
    let p = family_polynomial(g)?;
    let split = cyclotomic_split(&p)?;
    Ok(FamilyRow {
        g,
        cyclotomic: split.cyclotomic,
        unit_circle_distinct: split.unit_circle_distinct,
        irreducibility: irreducible_mod_p_witness(&p, prime_budget)?,
        mahler: mahler_measure(&p, precision_bits)?,
    })
}

/// One row per `g` in `g_min..=g_max`, in ascending order of `g` whatever
/// the scheduling. Runs on the current rayon pool.
pub fn scan_family(
    g_min: usize,
    g_max: usize,
    prime_budget: usize,
    precision_bits: u32,
) -> Result<Vec<FamilyRow>> {
    if g_min < 3 {
        return domain("the family scan starts at g = 3");
    }
    if g_min > g_max {
        return domain(format!("empty range {g_min}..={g_max}"));
    }
    (g_min..=g_max)
        .into_par_iter()
        .map(|g| scan_row(g, prime_budget, precision_bits))
        .collect()
}
