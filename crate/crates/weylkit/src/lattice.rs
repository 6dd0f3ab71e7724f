//! Root and coweight coordinates, the root/coweight pairing, and finite root
//! enumeration.
//!
//! Roots live in the span of the simple roots `{α_0, …, α_n}` with integer
//! coordinates. Coweights live in the dual space with basis
//! `{h_1, …, h_n, h_δ}` and exact rational coordinates (half-integral
//! fundamental coweights occur in the fixtures). The pairing is fixed by
//! `⟨α_i, h_j⟩ = δ_ij`, `⟨α_i, h_δ⟩ = 0` for `1 ≤ i, j ≤ n`, together with
//! `⟨δ, h_j⟩ = 0` and `⟨δ, h_δ⟩ = 1`; the affine simple root `α_0` therefore
//! pairs as `⟨α_0, h_j⟩ = −c_j` and `⟨α_0, h_δ⟩ = 1`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::cartan::CartanData;
use crate::error::{Error, Result};

/// Integer coordinate vector in the simple-root basis `{α_0, …, α_n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootVec(Vec<i64>);

impl RootVec {
    #[must_use]
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// The zero vector of the given dimension.
    #[must_use]
    pub fn zero(size: usize) -> Self {
        Self(vec![0; size])
    }

    /// The simple root `α_i`.
    #[must_use]
    pub fn simple(i: usize, size: usize) -> Self {
        let mut coords = vec![0; size];
        coords[i] = 1;
        Self(coords)
    }

    #[must_use]
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise sum. Panics on dimension mismatch.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "root dimension mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference. Panics on dimension mismatch.
    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "root dimension mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    #[must_use]
    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    /// True when every coordinate is ≥ 0 and at least one is > 0.
    #[must_use]
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && !self.is_zero()
    }

    /// Compressed digit name like `a0223` when all coordinates are single
    /// digits ≥ 0 (each index repeated by its coefficient); `None` otherwise.
    #[must_use]
    pub fn compressed(&self) -> Option<String> {
        if self.is_zero() || self.0.iter().any(|&x| !(0..=9).contains(&x)) || self.len() > 10 {
            return None;
        }
        let mut s = String::from("a");
        for (i, &c) in self.0.iter().enumerate() {
            for _ in 0..c {
                s.push(char::from_digit(i as u32, 10).expect("index ≤ 9"));
            }
        }
        Some(s)
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compressed() {
            Some(name) => write!(f, "{name}{:?}", self.0),
            None => write!(f, "{:?}", self.0),
        }
    }
}

impl fmt::Display for RootVec {
    /// Signed combination of simple roots, e.g. `a0 + a2 - 2 a3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{} ", c.abs())?;
            }
            write!(f, "a{i}")?;
        }
        Ok(())
    }
}

/// Rational coordinate vector in the dual basis `{h_1, …, h_n, h_δ}` of an
/// affine ambient of size `n + 1`. The last coordinate is the `h_δ`
/// component, i.e. the level `⟨δ, ·⟩`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoweightVec(Vec<Rational64>);

impl CoweightVec {
    #[must_use]
    pub fn new(coords: Vec<Rational64>) -> Self {
        Self(coords)
    }

    /// Convenience constructor from integer coordinates.
    #[must_use]
    pub fn from_integers(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    #[must_use]
    pub fn zero(size: usize) -> Self {
        Self(vec![Rational64::zero(); size])
    }

    /// The fundamental coweight `h_i` (`1 ≤ i ≤ n`) in an ambient of the
    /// given size `n + 1`.
    #[must_use]
    pub fn fundamental(i: usize, size: usize) -> Self {
        assert!((1..size).contains(&i), "fundamental coweight index out of range");
        let mut coords = vec![Rational64::zero(); size];
        coords[i - 1] = Rational64::from_integer(1);
        Self(coords)
    }

    /// The scaling element `h_δ`.
    #[must_use]
    pub fn delta_dual(size: usize) -> Self {
        let mut coords = vec![Rational64::zero(); size];
        coords[size - 1] = Rational64::from_integer(1);
        Self(coords)
    }

    #[must_use]
    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational64::is_zero)
    }

    /// Coefficient of `h_i` (`1 ≤ i ≤ n`).
    #[must_use]
    pub fn h_coeff(&self, i: usize) -> Rational64 {
        self.0[i - 1]
    }

    /// The level `⟨δ, ·⟩`, which is the `h_δ` coordinate.
    #[must_use]
    pub fn level(&self) -> Rational64 {
        *self.0.last().expect("nonempty coweight")
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "coweight dimension mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "coweight dimension mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    #[must_use]
    pub fn scale(&self, k: Rational64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Debug for CoweightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CoweightVec {
    /// Signed combination like `-h1 + h2 + h3 - h4 - h5` or `h1 + hd`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.len();
        let mut first = true;
        for (idx, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if *c < Rational64::zero() { -*c } else { *c };
            if first {
                if *c < Rational64::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if *c < Rational64::zero() { "-" } else { "+" })?;
            }
            if mag != Rational64::from_integer(1) {
                write!(f, "{mag} ")?;
            }
            if idx == n - 1 {
                write!(f, "hd")?;
            } else {
                write!(f, "h{}", idx + 1)?;
            }
        }
        Ok(())
    }
}

impl Serialize for CoweightVec {
    /// Serialized as exact strings in lowest terms, e.g. `["-1/2", "1", "0"]`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }
}

fn require_affine(data: &CartanData) -> Result<&[i64]> {
    data.marks().ok_or(Error::NotAffine)
}

fn require_dim(len: usize, data: &CartanData) -> Result<()> {
    if len == data.size() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: data.size(), got: len })
    }
}

/// Pairing `⟨v, f⟩` of a root-space vector against a coweight.
pub fn pair(v: &RootVec, f: &CoweightVec, data: &CartanData) -> Result<Rational64> {
    let marks = require_affine(data)?;
    require_dim(v.len(), data)?;
    require_dim(f.len(), data)?;
    let n = data.size() - 1;
    // ⟨α_i, h_i⟩ = 1 for the finite nodes ...
    let mut acc = Rational64::zero();
    for i in 1..=n {
        acc += f.coords()[i - 1] * v.coords()[i];
    }
    // ... and α_0 = δ − Σ c_i α_i contributes through every dual basis vector.
    let v0 = Rational64::from_integer(v.coords()[0]);
    let mut alpha0_part = f.level();
    for j in 1..=n {
        alpha0_part -= f.coords()[j - 1] * marks[j];
    }
    Ok(acc + v0 * alpha0_part)
}

/// The simple coroot `α̌_i` expressed in `{h_1, …, h_n}`:
/// `α̌_i = Σ_j A[i][j] h_j`. The same row formula covers `i = 0`, where it
/// agrees with `−Σ c_i α̌_i` because the marks span the kernel.
pub fn simple_coroot(i: usize, data: &CartanData) -> Result<CoweightVec> {
    require_affine(data)?;
    if i >= data.size() {
        return Err(Error::DimensionMismatch { expected: data.size(), got: i });
    }
    let n = data.size() - 1;
    let mut coords = vec![Rational64::zero(); data.size()];
    for j in 1..=n {
        coords[j - 1] = Rational64::from_integer(data.entry(i, j));
    }
    Ok(CoweightVec::new(coords))
}

/// Bilinear form `(u, v)` from the ambient Gram matrix.
#[must_use]
pub fn bilinear(u: &RootVec, v: &RootVec, data: &CartanData) -> Rational64 {
    bilinear_with(u, v, &data.bilinear_gram())
}

/// Bilinear form against a precomputed Gram matrix (avoids recomputation in
/// loops over many root pairs).
#[must_use]
pub fn bilinear_with(u: &RootVec, v: &RootVec, gram: &[Vec<Rational64>]) -> Rational64 {
    let mut acc = Rational64::zero();
    for (i, &a) in u.coords().iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in v.coords().iter().enumerate() {
            if b == 0 {
                continue;
            }
            acc += gram[i][j] * a * b;
        }
    }
    acc
}

/// Splits an affine-space vector as `v = x + k·δ` with the `α_0`-coordinate
/// of `x` equal to zero. Returns `(x, k)`.
pub fn finite_part(v: &RootVec, data: &CartanData) -> Result<(RootVec, i64)> {
    let marks = require_affine(data)?;
    require_dim(v.len(), data)?;
    // c[0] = 1, so k is exactly the α_0-coordinate.
    let k = v.coords()[0];
    let x = v.sub(&RootVec::new(marks.to_vec()).scale(k));
    Ok((x, k))
}

/// Enumerates the finite root system: the closure of the finite simple roots
/// under their own reflections, computed with the ambient bilinear form.
///
/// For affine data the finite simple roots are `α_1, …, α_n` (node 0 is
/// skipped) and the result lives in the ambient coordinates with zero
/// `α_0`-component; for finite data every node participates. The result is
/// sorted lexicographically. Errors with `RootEnumerationCapExceeded` if more
/// than `cap` roots appear (non-finite systems).
pub fn enumerate_finite_roots(data: &CartanData, cap: usize) -> Result<Vec<RootVec>> {
    let size = data.size();
    let start = usize::from(data.is_affine());
    let gram = data.bilinear_gram();
    let simple: Vec<RootVec> = (start..size).map(|i| RootVec::simple(i, size)).collect();
    let mut seen: BTreeSet<RootVec> = simple.iter().cloned().collect();
    let mut queue: Vec<RootVec> = simple.clone();
    while let Some(v) = queue.pop() {
        for (idx, s) in simple.iter().enumerate() {
            let i = start + idx;
            // s_i v = v − (2 (α_i, v) / (α_i, α_i)) α_i; the coefficient is a
            // Cartan pairing, hence integral for every root in the closure.
            let coeff = Rational64::from_integer(2) * bilinear_with(s, &v, &gram)
                / data.root_length(i);
            debug_assert!(coeff.is_integer(), "non-integral reflection coefficient");
            let image = v.sub(&s.scale(coeff.to_integer()));
            if seen.insert(image.clone()) {
                if seen.len() > cap {
                    return Err(Error::RootEnumerationCapExceeded(cap));
                }
                queue.push(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Default cap for [`enumerate_finite_roots`].
pub const DEFAULT_ROOT_CAP: usize = 1_000_000;

/// Whether `v` is a real root of the affine system: its finite part must be a
/// root of the finite subsystem.
pub fn is_real_root(v: &RootVec, data: &CartanData) -> Result<bool> {
    if data.is_affine() {
        let (x, _) = finite_part(v, data)?;
        let finite = enumerate_finite_roots(data, DEFAULT_ROOT_CAP)?;
        Ok(finite.binary_search(&x).is_ok())
    } else {
        require_dim(v.len(), data)?;
        let finite = enumerate_finite_roots(data, DEFAULT_ROOT_CAP)?;
        Ok(finite.binary_search(v).is_ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanData;

    fn d5() -> CartanData {
        CartanData::load_builtin("D5~".parse().unwrap()).unwrap()
    }

    #[test]
    fn pairing_matches_dual_basis_rules() {
        let data = d5();
        let delta = data.null_root().unwrap();
        for j in 1..6 {
            let h = CoweightVec::fundamental(j, 6);
            assert!(pair(&delta, &h, &data).unwrap().is_zero());
            for i in 1..6 {
                let a = RootVec::simple(i, 6);
                let expect = Rational64::from_integer(i64::from(i == j));
                assert_eq!(pair(&a, &h, &data).unwrap(), expect);
            }
            // ⟨α_0, h_j⟩ = −c_j.
            let a0 = RootVec::simple(0, 6);
            assert_eq!(
                pair(&a0, &h, &data).unwrap(),
                Rational64::from_integer(-data.marks().unwrap()[j])
            );
        }
        let hd = CoweightVec::delta_dual(6);
        assert_eq!(pair(&delta, &hd, &data).unwrap(), Rational64::from_integer(1));
    }

    #[test]
    fn coroot_rows_of_the_cartan_matrix() {
        let data = d5();
        // α̌_0 = −h_2 and α̌_2 = −h_1 + 2h_2 − h_3 read off the matrix rows.
        assert_eq!(simple_coroot(0, &data).unwrap().to_string(), "-h2");
        assert_eq!(simple_coroot(2, &data).unwrap().to_string(), "-h1 + 2 h2 - h3");
        // Pairing check ⟨α_j, α̌_i⟩ = A[i][j] for the finite nodes.
        for i in 0..6 {
            let cv = simple_coroot(i, &data).unwrap();
            for j in 1..6 {
                let a = RootVec::simple(j, 6);
                assert_eq!(
                    pair(&a, &cv, &data).unwrap(),
                    Rational64::from_integer(data.entry(i, j))
                );
            }
        }
    }

    #[test]
    fn affine_rank_one_coroot_is_doubled() {
        let data = CartanData::load_builtin("A1~".parse().unwrap()).unwrap();
        assert_eq!(simple_coroot(1, &data).unwrap().to_string(), "2 h1");
        // ⟨α_0, h_1⟩ = −1 in the rank-one affine system.
        let h1 = CoweightVec::fundamental(1, 2);
        let a0 = RootVec::simple(0, 2);
        assert_eq!(pair(&a0, &h1, &data).unwrap(), Rational64::from_integer(-1));
    }

    #[test]
    fn finite_part_splits_off_delta_multiples() {
        let data = d5();
        // a012345 − δ = −(α_2 + α_3).
        let eta0 = RootVec::new(vec![1, 1, 1, 1, 1, 1]);
        let (x, k) = finite_part(&eta0, &data).unwrap();
        assert_eq!(k, 1);
        assert_eq!(x.coords(), &[0, 0, -1, -1, 0, 0]);
    }

    #[test]
    fn root_counts_match_closed_forms() {
        // |Φ(A_n)| = n(n+1), |Φ(D_n)| = 2n(n−1).
        for (label, expected) in [("A1~", 2), ("A3~", 12), ("D5~", 40), ("D4~", 24), ("A5", 30)] {
            let data = CartanData::load_builtin(label.parse().unwrap()).unwrap();
            let roots = enumerate_finite_roots(&data, DEFAULT_ROOT_CAP).unwrap();
            assert_eq!(roots.len(), expected, "{label}");
            // Closure contains negatives of everything it contains.
            for r in &roots {
                assert!(roots.binary_search(&r.neg()).is_ok());
            }
        }
    }

    #[test]
    fn real_root_test_uses_the_finite_part() {
        let data = d5();
        let delta = data.null_root().unwrap();
        let a2 = RootVec::simple(2, 6);
        assert!(is_real_root(&a2, &data).unwrap());
        assert!(is_real_root(&a2.add(&delta), &data).unwrap());
        assert!(is_real_root(&delta.sub(&a2), &data).unwrap());
        assert!(!is_real_root(&delta, &data).unwrap());
        // α_2 + α_4 skips the connecting node 3, so it has norm 4 and is
        // not a root.
        assert!(!is_real_root(&RootVec::new(vec![0, 0, 1, 0, 1, 0]), &data).unwrap());
    }

    #[test]
    fn compressed_names() {
        assert_eq!(RootVec::new(vec![1, 0, 1, 0, 0, 0]).compressed().unwrap(), "a02");
        assert_eq!(RootVec::new(vec![1, 1, 2, 2, 1, 1]).compressed().unwrap(), "a01223345");
        assert_eq!(RootVec::new(vec![-1, 0]).compressed(), None);
    }
}
