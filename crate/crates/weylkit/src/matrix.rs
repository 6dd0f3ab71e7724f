//! Small dense integer matrices with exact rational elimination.
//!
//! Group elements in this crate are square integer matrices of size ≤ ~10, so
//! a flat row-major `Vec<i64>` beats any sparse or arbitrary-precision
//! representation. Inverses and kernels are computed by Gauss–Jordan
//! elimination over `Rational64`; every result is exact and intermediate
//! values stay far below `i64` range for the matrices this crate produces.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Square integer matrix, row-major storage.
///
/// Equality and hashing compare the full entry list, which is what lets the
/// breadth-first searches deduplicate group elements by value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    /// Identity matrix of size `n`.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    /// Builds a matrix from rows; `None` if the rows are empty or ragged.
    #[must_use]
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let data = rows.iter().flatten().copied().collect();
        Some(Self { n, data })
    }

    /// Side length.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    /// Overwrites the entry at row `i`, column `j`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    /// Row `i` as a slice.
    #[must_use]
    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Matrix product `self · rhs`. Panics if the sizes differ.
    #[must_use]
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        Self { n, data }
    }

    /// Matrix–vector product over the integers.
    #[must_use]
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len(), "vector length mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Matrix–vector product against rational coordinates.
    #[must_use]
    pub fn mul_vec_rat(&self, v: &[Rational64]) -> Vec<Rational64> {
        assert_eq!(self.n, v.len(), "vector length mismatch");
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational64::zero(), |acc, (a, x)| acc + *x * *a)
            })
            .collect()
    }

    /// Transposed copy.
    #[must_use]
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        Self { n, data }
    }

    /// Whether this is the identity matrix.
    #[must_use]
    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    /// Non-negative integer power by repeated multiplication.
    #[must_use]
    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact inverse, provided it exists and is again integral (the group
    /// matrices in this crate are all unimodular). `None` if the matrix is
    /// singular or the inverse has a non-integer entry.
    #[must_use]
    pub fn inverse_exact(&self) -> Option<Self> {
        let n = self.n;
        // Augmented [A | I] over the rationals, then Gauss–Jordan.
        let mut a: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            Rational64::from_integer(self.get(i, j))
                        } else {
                            Rational64::from_integer(i64::from(j - n == i))
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for j in 0..2 * n {
                        let sub = f * a[col][j];
                        a[r][j] -= sub;
                    }
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &a {
            for x in &row[n..] {
                if !x.is_integer() {
                    return None;
                }
                data.push(x.to_integer());
            }
        }
        Some(Self { n, data })
    }

    /// Rows as owned vectors (for serialization and display).
    #[must_use]
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Basis of the right kernel `{x : M·x = 0}` over the rationals.
///
/// Returned vectors correspond to the free columns of the reduced row echelon
/// form, each with a 1 in its free position.
#[must_use]
pub fn rational_kernel(m: &IntMat) -> Vec<Vec<Rational64>> {
    let n = m.n();
    let mut a: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| Rational64::from_integer(m.get(i, j))).collect())
        .collect();
    // Reduced row echelon form, tracking which column each pivot lands in.
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col];
        for x in a[row].iter_mut() {
            *x /= pv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let sub = f * a[row][j];
                    a[r][j] -= sub;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational64::zero(); n];
        v[free] = Rational64::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to the primitive integer vector with positive
/// first nonzero entry; `None` for the zero vector.
#[must_use]
pub fn primitive_integer_vector(v: &[Rational64]) -> Option<Vec<i64>> {
    let lcm = v
        .iter()
        .map(|x| *x.denom())
        .fold(1i64, num_integer::lcm);
    let ints: Vec<i64> = v.iter().map(|x| (*x * lcm).to_integer()).collect();
    let gcd = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x.abs()));
    if gcd == 0 {
        return None;
    }
    let mut out: Vec<i64> = ints.iter().map(|x| x / gcd).collect();
    if let Some(first) = out.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in &mut out {
                *x = -*x;
            }
        }
    }
    Some(out)
}

/// True when `x` is a whole number.
#[must_use]
pub fn is_integer(x: &Rational64) -> bool {
    x.is_integer()
}

/// Rational absolute value (re-exported convenience for callers that already
/// depend on this module).
#[must_use]
pub fn rat_abs(x: Rational64) -> Rational64 {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_invert_unimodular() {
        let m = IntMat::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap();
        let inv = m.inverse_exact().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(inv.to_rows(), vec![vec![1, -2], vec![0, 1]]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = IntMat::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(m.inverse_exact().is_none());
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // Rows sum to zero against (1, 1, 2): the affine A1-like pattern.
        let m = IntMat::from_rows(&[vec![2, -2, 0], vec![-2, 2, 0], vec![0, 0, 0]]).unwrap();
        let basis = rational_kernel(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let iv: Vec<Rational64> = v.clone();
            for i in 0..3 {
                let s: Rational64 = (0..3)
                    .map(|j| Rational64::from_integer(m.get(i, j)) * iv[j])
                    .sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn primitive_vector_normalization() {
        let v = vec![
            Rational64::new(-1, 2),
            Rational64::new(-1, 2),
            Rational64::new(-1, 1),
        ];
        assert_eq!(primitive_integer_vector(&v).unwrap(), vec![1, 1, 2]);
    }
}
