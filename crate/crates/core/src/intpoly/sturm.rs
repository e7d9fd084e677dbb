use num_bigint::Sign;
use num_traits::Signed;

use super::{IntPoly, Rational};
use crate::error::{domain, Result};

/// How the interval endpoints are treated by [`sturm_real_root_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoints {
    Open,
    Closed,
}

/// Sturm chain `p, p', -rem(p, p'), ...` with every member replaced by a
/// positive multiple that has integer coefficients and unit content.
pub fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone()];
    if p.is_constant() {
        return chain;
    }
    chain.push(divide_content(p.derivative()));
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_constant() {
            break;
        }
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // pseudo_rem scales by lc(b)^(da - db + 1); keep the overall factor positive
        let e = a.deg() - b.deg() + 1;
        let scale_negative = b.leading_coeff().unwrap().is_negative() && e % 2 == 1;
        let next = if scale_negative { r } else { -r };
        chain.push(divide_content(next));
    }
    chain
}

fn divide_content(p: IntPoly) -> IntPoly {
    let c = p.content();
    IntPoly::new(p.coeffs().iter().map(|x| x / &c).collect())
}

fn sign_at(p: &IntPoly, x: &Rational) -> Sign {
    p.eval_homogeneous(x.numer(), x.denom()).sign()
}

fn variations(chain: &[IntPoly], x: &Rational) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in chain.iter().map(|q| sign_at(q, x)) {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` between `lo` and `hi`.
///
/// `V(lo) - V(hi)` counts the roots in the half-open interval `(lo, hi]`;
/// the endpoint corrections give the open or closed count.
pub fn sturm_real_root_count(
    p: &IntPoly,
    lo: &Rational,
    hi: &Rational,
    endpoints: Endpoints,
) -> Result<usize> {
    if p.is_zero() {
        return domain("Sturm count of the zero polynomial");
    }
    if lo >= hi {
        return domain(format!("empty interval ({lo}, {hi})"));
    }
    let chain = sturm_chain(p);
    let half_open = variations(&chain, lo) - variations(&chain, hi);
    Ok(match endpoints {
        Endpoints::Open => half_open - usize::from(sign_at(p, hi) == Sign::NoSign),
        Endpoints::Closed => half_open + usize::from(sign_at(p, lo) == Sign::NoSign),
    })
}
