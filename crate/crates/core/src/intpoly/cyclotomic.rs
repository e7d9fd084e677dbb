use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;
use crate::arith::factorize;
use crate::error::{domain, Result};

/// The `k`-th cyclotomic polynomial `Phi_k`, monic of degree `phi(k)`.
///
/// Built from the squarefree kernel `r = p_1 ... p_s` of `k` using
/// `Phi_{mp}(t) = Phi_m(t^p) / Phi_m(t)` for primes `p` not dividing `m`,
/// then `Phi_k(t) = Phi_r(t^(k/r))`.
pub fn cyclotomic(k: u64) -> Result<IntPoly> {
    if k == 0 {
        return domain("cyclotomic polynomial of order 0");
    }
    let mut phi = IntPoly::new(vec![-BigInt::one(), BigInt::one()]);
    let mut radical = 1u64;
    for (p, _) in factorize(k) {
        let lifted = phi.compose_power(p as usize);
        phi = lifted
            .div_rem_monic(&phi)
            .0;
        radical *= p;
    }
    Ok(phi.compose_power((k / radical) as usize))
}
