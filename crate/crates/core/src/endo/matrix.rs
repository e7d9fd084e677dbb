use num_bigint::BigInt;
use num_traits::{Num, One, Zero};

use crate::error::{domain, Error, Result};
use crate::intpoly::{GaussInt, GaussIntPoly, IntPoly};

/// Square integer matrix, row-major. Used for rational representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

/// Square matrix over the Gaussian integers. Used for analytic
/// representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianMatrix {
    dim: usize,
    entries: Vec<GaussInt>,
}

fn from_rows<T>(rows: Vec<Vec<T>>) -> Result<(usize, Vec<T>)> {
    let dim = rows.len();
    if dim == 0 {
        return Err(Error::Parse("matrix has no rows".into()));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {dim}",
                row.len()
            )));
        }
        entries.extend(row);
    }
    Ok((dim, entries))
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let (dim, entries) = from_rows(rows)?;
        Ok(IntMatrix { dim, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim).map(<[BigInt]>::to_vec).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, mut e: u64) -> IntMatrix {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn sub_identity(&self) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.entries[i * self.dim + i] -= 1;
        }
        m
    }

    /// Fraction-free Gaussian elimination (Bareiss); every division is exact.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(piv) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.entries.swap(k * n + j, piv * n + j);
                }
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let v = (m.get(i, j) * &pivot - &lead * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// `det(tI - self)`.
    pub fn charpoly(&self) -> IntPoly {
        IntPoly::new(berkowitz(self.dim, &self.entries))
    }
}

impl GaussianMatrix {
    pub fn from_rows(rows: Vec<Vec<GaussInt>>) -> Result<Self> {
        let (dim, entries) = from_rows(rows)?;
        Ok(GaussianMatrix { dim, entries })
    }

    pub fn from_i64_rows(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&(re, im)| GaussInt::new(re.into(), im.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<GaussInt>> {
        self.entries.chunks(self.dim).map(<[GaussInt]>::to_vec).collect()
    }

    /// `det(tI - self)` over the Gaussian integers.
    pub fn charpoly(&self) -> GaussIntPoly {
        GaussIntPoly::new(berkowitz(self.dim, &self.entries))
    }

    /// Replaces each entry `a + bi` by the block `[[a, -b], [b, a]]`.
    pub fn realify(&self) -> IntMatrix {
        let n = self.dim;
        let mut out = IntMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                out.set(2 * i, 2 * j, z.re.clone());
                out.set(2 * i, 2 * j + 1, -z.im.clone());
                out.set(2 * i + 1, 2 * j, z.im.clone());
                out.set(2 * i + 1, 2 * j + 1, z.re.clone());
            }
        }
        out
    }
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated low coefficients in the last column.
pub fn companion(p: &IntPoly) -> Result<IntMatrix> {
    if !p.is_monic() || p.deg() == 0 {
        return domain(format!("companion matrix needs a monic polynomial of degree >= 1, got {p}"));
    }
    let d = p.deg();
    let mut m = IntMatrix::zeros(d);
    for i in 1..d {
        m.set(i, i - 1, BigInt::one());
    }
    for i in 0..d {
        m.set(i, d - 1, -p.coeff(i));
    }
    Ok(m)
}

/// Berkowitz's division-free characteristic polynomial, returned in
/// ascending order.
///
/// Step `r` borders the leading `r x r` block `M` with row `R`, column `C`
/// and corner `a`, and multiplies the running coefficient vector by the
/// lower-triangular Toeplitz matrix with first column
/// `(1, -a, -RC, -RMC, ..., -RM^(r-1)C)`.
fn berkowitz<T: Clone + Num>(n: usize, a: &[T]) -> Vec<T> {
    let at = |i: usize, j: usize| a[i * n + j].clone();
    // descending coefficients of the characteristic polynomial so far
    let mut vect = vec![T::one()];
    for r in 0..n {
        let mut col = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(T::zero() - at(r, r));
        // v = M^k C, starting with k = 0
        let mut v: Vec<T> = (0..r).map(|i| at(i, r)).collect();
        for _ in 0..r {
            let rv = (0..r).fold(T::zero(), |acc, j| acc + at(r, j) * v[j].clone());
            col.push(T::zero() - rv);
            v = (0..r)
                .map(|i| (0..r).fold(T::zero(), |acc, j| acc + at(i, j) * v[j].clone()))
                .collect();
        }
        let next: Vec<T> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .fold(T::zero(), |acc, j| acc + col[i - j].clone() * vect[j].clone())
            })
            .collect();
        vect = next;
    }
    vect.reverse();
    vect
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(IntMatrix::identity(2).charpoly(), p(&[1, -2, 1]));
        assert_eq!(
            IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]).unwrap().charpoly(),
            p(&[1, -3, 1])
        );
        let mut scalar = IntMatrix::zeros(4);
        for i in 0..4 {
            scalar.set(i, i, BigInt::from(3));
        }
        assert_eq!(scalar.charpoly(), p(&[-3, 1]).pow(4));
    }

    #[test]
    fn charpoly_matches_determinant_at_integers() {
        let m = IntMatrix::from_i64_rows(&[&[1, -2, 0, 4], &[3, 1, 5, -1], &[0, 2, -3, 1], &[7, 0, 1, 2]])
            .unwrap();
        let chi = m.charpoly();
        for t in -3i64..=3 {
            let mut shifted = IntMatrix::zeros(4);
            for i in 0..4 {
                for j in 0..4 {
                    let diag = if i == j { BigInt::from(t) } else { BigInt::zero() };
                    shifted.set(i, j, diag - m.get(i, j));
                }
            }
            assert_eq!(shifted.determinant(), chi.eval(&BigInt::from(t)));
        }
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[3, 0, 1], &[4, 5, 0]]).unwrap();
        // cofactor expansion: 0*(0-5) - 1*(0-4) + 2*(15-0) = 34
        assert_eq!(m.determinant(), BigInt::from(34));
        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.determinant(), BigInt::zero());
    }

    #[test]
    fn gaussian_charpoly_and_realify() {
        let i1 = GaussianMatrix::from_i64_rows(&[&[(0, 1)]]).unwrap();
        assert_eq!(
            i1.charpoly(),
            GaussIntPoly::new(vec![GaussInt::new(0.into(), (-1).into()), GaussInt::new(1.into(), 0.into())])
        );
        assert_eq!(i1.realify(), IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap());
        let w = GaussianMatrix::from_i64_rows(&[&[(1, 1)]]).unwrap();
        assert_eq!(w.realify(), IntMatrix::from_i64_rows(&[&[1, -1], &[1, 1]]).unwrap());
    }

    #[test]
    fn companion_examples() {
        assert_eq!(
            companion(&p(&[1, -3, 1])).unwrap(),
            IntMatrix::from_i64_rows(&[&[0, -1], &[1, 3]]).unwrap()
        );
        assert_eq!(companion(&p(&[-5, 1])).unwrap(), IntMatrix::from_i64_rows(&[&[5]]).unwrap());
        assert!(companion(&p(&[1, 2])).is_err());
        assert!(companion(&p(&[1])).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(
            IntMatrix::from_i64_rows(&[&[1, 2], &[3]]),
            Err(Error::Parse(_))
        ));
    }
}
