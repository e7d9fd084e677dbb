use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{domain, Error, Result};

/// Primitive gcd over the integers, normalized to a positive leading
/// coefficient. Uses the primitive remainder sequence.
pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() && b.is_zero() {
        return domain("gcd of two zero polynomials");
    }
    let mut u = a.primitive_part();
    let mut v = b.primitive_part();
    if u.deg() < v.deg() || u.is_zero() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_zero() {
        if v.is_constant() {
            return Ok(IntPoly::one());
        }
        let r = u.pseudo_rem(&v).primitive_part();
        u = v;
        v = r;
    }
    Ok(u)
}

/// `Res(a, b) = lc(a)^deg(b) * prod_{a(x)=0} b(x)`, the Sylvester determinant.
///
/// Subresultant PRS over the integers, so every division is exact.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return domain("resultant of a zero polynomial");
    }
    let (da, db) = (a.deg(), b.deg());
    if da == 0 {
        return Ok(num_traits::pow(a.constant_term(), db));
    }
    if db == 0 {
        return Ok(num_traits::pow(b.constant_term(), da));
    }

    let ca = a.content();
    let cb = b.content();
    let mut u = IntPoly::new(a.coeffs().iter().map(|c| c / &ca).collect());
    let mut v = IntPoly::new(b.coeffs().iter().map(|c| c / &cb).collect());
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut sign_flip = false;
    if u.deg() < v.deg() {
        std::mem::swap(&mut u, &mut v);
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = true;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (du, dv) = (u.deg(), v.deg());
        let delta = (du - dv) as u32;
        if du % 2 == 1 && dv % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let r = u.pseudo_rem(&v);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        let next = IntPoly::new(
            r.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &divisor).is_zero());
                    c / &divisor
                })
                .collect(),
        );
        u = v;
        v = next;
        g = u.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h, delta as usize - 1)
        };
        if v.deg() == 0 {
            break;
        }
    }
    let du = u.deg();
    let lv = v.leading_coeff().unwrap().clone();
    // h <- lc(v)^du / h^(du - 1)
    let h = num_traits::pow(lv, du) / num_traits::pow(h, du - 1);
    let res = t * h;
    Ok(if sign_flip { -res } else { res })
}

/// Product of the distinct irreducible factors of `p`, as a primitive
/// polynomial with positive leading coefficient.
pub fn squarefree_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return domain("squarefree part of the zero polynomial");
    }
    let a = p.primitive_part();
    if a.is_constant() {
        return Ok(IntPoly::one());
    }
    let g = gcd_primitive(&a, &a.derivative())?;
    exact(&a, &g)
}

/// Yun's decomposition: returns `(s_i, i)` with `pp(p) = prod s_i^i`, the
/// `s_i` squarefree, pairwise coprime and nonconstant.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    if p.is_zero() {
        return domain("squarefree decomposition of the zero polynomial");
    }
    let a = p.primitive_part();
    let mut out = Vec::new();
    if a.is_constant() {
        return Ok(out);
    }
    let b = a.derivative();
    let c = gcd_primitive(&a, &b)?;
    let mut w = exact(&a, &c)?;
    let mut y = exact(&b, &c)?;
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while !w.is_constant() {
        let g = gcd_primitive(&w, &z)?;
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = exact(&w, &g)?;
        y = exact(&z, &g)?;
        z = &y - &w.derivative();
        i += 1;
    }
    Ok(out)
}

fn exact(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    a.exact_divide(b)?
        .ok_or_else(|| Error::Internal(format!("expected {b} to divide {a}")))
}
