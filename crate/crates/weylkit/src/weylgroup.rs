//! Group elements of the extended affine Weyl group as exact integer
//! matrices.
//!
//! Every element acts on root coordinates by `v ↦ M·v` (column convention:
//! `g∘h` applies `h` first, so `M_{g∘h} = M_g·M_h`). Words evaluate with the
//! rightmost generator applied first, and elements remember the word that
//! produced them for display; equality and hashing use the matrix alone,
//! which makes the representation-level identity of two different words
//! directly observable.

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::{bilinear_with, pair, CoweightVec, RootVec};
use crate::matrix::IntMat;

/// One letter of a word: a simple reflection or a diagram automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorToken {
    /// The simple reflection `s_i`.
    S(usize),
    /// A named diagram automorphism given by its node-image map
    /// (`α_i ↦ α_{image[i]}`).
    Aut { name: String, image: Vec<usize> },
}

impl GeneratorToken {
    /// Display name: `s2`, `sigma12`, ...
    #[must_use]
    pub fn name(&self) -> String {
        match self {
            GeneratorToken::S(i) => format!("s{i}"),
            GeneratorToken::Aut { name, .. } => name.clone(),
        }
    }

    /// Inverse letter: reflections are involutions; automorphisms invert
    /// their image map.
    #[must_use]
    pub fn inverse(&self) -> Self {
        match self {
            GeneratorToken::S(i) => GeneratorToken::S(*i),
            GeneratorToken::Aut { name, image } => {
                let mut inv = vec![0; image.len()];
                for (i, &p) in image.iter().enumerate() {
                    inv[p] = i;
                }
                if inv == *image {
                    self.clone()
                } else {
                    GeneratorToken::Aut { name: format!("{name}^-1"), image: inv }
                }
            }
        }
    }
}

/// Result of an order computation that walks powers up to a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ElementOrder {
    Finite(u32),
    /// No power up to the cap was the identity (e.g. translations).
    ExceedsCap(u32),
}

/// An element of the extended affine Weyl group of some [`CartanData`].
#[derive(Clone)]
pub struct GroupElement {
    data: Arc<CartanData>,
    matrix: IntMat,
    word: Option<Vec<GeneratorToken>>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) if !w.is_empty() => write!(f, "⟨{}⟩", word_string(w)),
            Some(_) => write!(f, "⟨identity⟩"),
            None => write!(f, "⟨matrix {:?}⟩", self.matrix),
        }
    }
}

/// Joins token names with spaces: `"s1 s3 s2"`.
#[must_use]
pub fn word_string(word: &[GeneratorToken]) -> String {
    word.iter().map(GeneratorToken::name).collect::<Vec<_>>().join(" ")
}

impl GroupElement {
    /// The identity element (empty word).
    #[must_use]
    pub fn identity(data: &Arc<CartanData>) -> Self {
        Self {
            data: Arc::clone(data),
            matrix: IntMat::identity(data.size()),
            word: Some(Vec::new()),
        }
    }

    /// Wraps a raw matrix (no word provenance). The caller asserts the
    /// matrix really is a group element; `delta` invariance is checked for
    /// affine data as a cheap sanity guard.
    pub fn from_matrix(matrix: IntMat, data: &Arc<CartanData>) -> Result<Self> {
        if matrix.n() != data.size() {
            return Err(Error::DimensionMismatch { expected: data.size(), got: matrix.n() });
        }
        if let Some(marks) = data.marks() {
            if matrix.mul_vec(marks) != marks {
                return Err(Error::InvalidWord(
                    "matrix does not fix the null root direction".into(),
                ));
            }
        }
        Ok(Self { data: Arc::clone(data), matrix, word: None })
    }

    /// Ambient Cartan data.
    #[must_use]
    pub fn ambient(&self) -> &Arc<CartanData> {
        &self.data
    }

    /// The matrix in the simple-root basis.
    #[must_use]
    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    /// Word provenance, when the element was built from generators.
    #[must_use]
    pub fn word(&self) -> Option<&[GeneratorToken]> {
        self.word.as_deref()
    }

    /// Word length (number of letters); `None` without provenance.
    #[must_use]
    pub fn word_len(&self) -> Option<usize> {
        self.word.as_ref().map(Vec::len)
    }

    /// Product `self ∘ rhs` (apply `rhs` first). Panics on size mismatch.
    #[must_use]
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.data.size(), rhs.data.size(), "ambient size mismatch");
        let word = match (&self.word, &rhs.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                Some(w)
            }
            _ => None,
        };
        Self { data: Arc::clone(&self.data), matrix: self.matrix.mul(&rhs.matrix), word }
    }

    /// Exact inverse.
    #[must_use]
    pub fn inverse(&self) -> Self {
        let matrix = self
            .matrix
            .inverse_exact()
            .expect("group matrices are unimodular with integer inverses");
        let word = self
            .word
            .as_ref()
            .map(|w| w.iter().rev().map(GeneratorToken::inverse).collect());
        Self { data: Arc::clone(&self.data), matrix, word }
    }

    /// Integer power; negative exponents go through the inverse.
    #[must_use]
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(&self.data);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Smallest `k ≥ 1` with `g^k = 1`, walking powers up to `cap`.
    #[must_use]
    pub fn order(&self, cap: u32) -> ElementOrder {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return ElementOrder::Finite(k);
            }
            acc = acc.mul(self);
        }
        ElementOrder::ExceedsCap(cap)
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Image of a root-space vector.
    #[must_use]
    pub fn act(&self, v: &RootVec) -> RootVec {
        RootVec::new(self.matrix.mul_vec(v.coords()))
    }

    /// Whether the element fixes `v` exactly.
    #[must_use]
    pub fn fixes(&self, v: &RootVec) -> bool {
        self.act(v) == *v
    }

    /// Contragredient action on a coweight: `⟨v, g·f⟩ = ⟨g⁻¹·v, f⟩`.
    /// Requires an affine ambient (coweights carry an `h_δ` coordinate).
    pub fn act_coweight(&self, f: &CoweightVec) -> Result<CoweightVec> {
        let size = self.data.size();
        if f.len() != size {
            return Err(Error::DimensionMismatch { expected: size, got: f.len() });
        }
        let inv = self.inverse();
        let mut coords = Vec::with_capacity(size);
        for j in 1..size {
            let pre_image = inv.act(&RootVec::simple(j, size));
            coords.push(pair(&pre_image, f, &self.data)?);
        }
        // ⟨δ, g·f⟩ = ⟨δ, f⟩ because every element fixes δ.
        coords.push(f.level());
        Ok(CoweightVec::new(coords))
    }

    /// Matrix of the coweight action in the basis `{h_1, …, h_n, h_δ}`.
    /// Integral because the basis change from the root basis is unimodular.
    pub fn dual_matrix(&self) -> Result<IntMat> {
        let size = self.data.size();
        let mut out = IntMat::identity(size);
        for col in 0..size {
            let basis = if col + 1 < size {
                CoweightVec::fundamental(col + 1, size)
            } else {
                CoweightVec::delta_dual(size)
            };
            let image = self.act_coweight(&basis)?;
            for (row, x) in image.coords().iter().enumerate() {
                debug_assert!(x.is_integer(), "dual matrix must be integral");
                out.set(row, col, x.to_integer());
            }
        }
        Ok(out)
    }
}

impl Serialize for GroupElement {
    /// Serialized as `{"matrix": [[…]], "word": ["s1", …] | null}`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GroupElement", 2)?;
        st.serialize_field("matrix", &self.matrix.to_rows())?;
        st.serialize_field(
            "word",
            &self.word.as_ref().map(|w| w.iter().map(GeneratorToken::name).collect::<Vec<_>>()),
        )?;
        st.end()
    }
}

/// The simple reflection `s_i`: `s_i α_j = α_j − A[i][j] α_i`.
pub fn simple_reflection(i: usize, data: &Arc<CartanData>) -> Result<GroupElement> {
    let size = data.size();
    if i >= size {
        return Err(Error::InvalidWord(format!("reflection index {i} out of range 0..{size}")));
    }
    let mut m = IntMat::identity(size);
    for j in 0..size {
        m.set(i, j, i64::from(i == j) - data.entry(i, j));
    }
    Ok(GroupElement { data: Arc::clone(data), matrix: m, word: Some(vec![GeneratorToken::S(i)]) })
}

/// A diagram automorphism from a node-image map `α_i ↦ α_{image[i]}`.
/// Errors unless the map is a permutation preserving the Cartan matrix.
pub fn diagram_automorphism(
    name: &str,
    image: &[usize],
    data: &Arc<CartanData>,
) -> Result<GroupElement> {
    let size = data.size();
    let bad = |msg: String| Error::NotADiagramAutomorphism(msg);
    if image.len() != size {
        return Err(bad(format!("image map has {} entries, expected {size}", image.len())));
    }
    let mut hit = vec![false; size];
    for &p in image {
        if p >= size || hit[p] {
            return Err(bad(format!("image map {image:?} is not a permutation")));
        }
        hit[p] = true;
    }
    for i in 0..size {
        for j in 0..size {
            if data.entry(image[i], image[j]) != data.entry(i, j) {
                return Err(bad(format!(
                    "map does not preserve the Cartan matrix at ({i}, {j})"
                )));
            }
        }
    }
    let mut m = IntMat::identity(size);
    for i in 0..size {
        for r in 0..size {
            m.set(r, i, i64::from(r == image[i]));
        }
    }
    Ok(GroupElement {
        data: Arc::clone(data),
        matrix: m,
        word: Some(vec![GeneratorToken::Aut { name: name.to_string(), image: image.to_vec() }]),
    })
}

/// Evaluates a word with the rightmost letter applied first.
pub fn evaluate_word(tokens: &[GeneratorToken], data: &Arc<CartanData>) -> Result<GroupElement> {
    let mut acc = GroupElement::identity(data);
    for t in tokens {
        let g = match t {
            GeneratorToken::S(i) => simple_reflection(*i, data)?,
            GeneratorToken::Aut { name, image } => diagram_automorphism(name, image, data)?,
        };
        acc = acc.mul(&g);
    }
    Ok(acc)
}

/// The reflection through an arbitrary real root `α`:
/// `s_α(v) = v − (2(α, v)/(α, α)) α`.
///
/// The input is validated as a real root (finite part lies in the enumerated
/// finite system and the norm is positive); the reflection coefficients must
/// come out integral, which holds for every real root.
pub fn reflection_through(root: &RootVec, data: &Arc<CartanData>) -> Result<GroupElement> {
    let size = data.size();
    if root.len() != size {
        return Err(Error::DimensionMismatch { expected: size, got: root.len() });
    }
    let gram = data.bilinear_gram();
    let norm = bilinear_with(root, root, &gram);
    if norm <= Rational64::zero() {
        return Err(Error::NotARealRoot(format!(
            "vector {root:?} has non-positive squared length {norm}"
        )));
    }
    if !crate::lattice::is_real_root(root, data)? {
        return Err(Error::NotARealRoot(format!(
            "vector {root:?} is not in the real root system"
        )));
    }
    let mut m = IntMat::identity(size);
    for j in 0..size {
        let coeff =
            Rational64::from_integer(2) * bilinear_with(root, &RootVec::simple(j, size), &gram)
                / norm;
        if !coeff.is_integer() {
            return Err(Error::NotARealRoot(format!(
                "non-integral reflection coefficient {coeff} against node {j}"
            )));
        }
        let c = coeff.to_integer();
        if c != 0 {
            for r in 0..size {
                m.set(r, j, m.get(r, j) - c * root.coords()[r]);
            }
        }
    }
    GroupElement::from_matrix(m, data)
}

/// Named diagram automorphisms bundled with the builtin systems, exposed for
/// word parsing. Arbitrary maps stay available through explicit image lists.
#[must_use]
pub fn named_automorphisms(data: &CartanData) -> Vec<(String, Vec<usize>)> {
    let named = |pairs: &[(&str, Vec<usize>)]| {
        pairs.iter().map(|(n, v)| ((*n).to_string(), v.clone())).collect()
    };
    match data.label().map(|l| l.to_string()).as_deref() {
        // The rank-one affine diagram has a single flip.
        Some("A1~") => named(&[("pi", vec![1, 0])]),
        // Square diagram: the two reflections generating its dihedral group
        // and their order-4 product.
        Some("A3~") => named(&[
            ("p1", vec![0, 3, 2, 1]),
            ("p2", vec![3, 2, 1, 0]),
            ("p1p2", vec![1, 2, 3, 0]),
        ]),
        // Fork-to-fork symmetries: the leaf swap at node 2, the full flip,
        // and their order-4 product.
        Some("D5~") => named(&[
            ("sigma1", vec![1, 0, 2, 3, 4, 5]),
            ("sigma2", vec![5, 4, 3, 2, 1, 0]),
            ("sigma12", vec![5, 4, 3, 2, 0, 1]),
        ]),
        _ => Vec::new(),
    }
}

/// Verifies the key reflection identity `s_{wα} = w s_α w⁻¹` for a real root
/// `α` and any element `w`.
pub fn reflection_conjugation_holds(
    w: &GroupElement,
    root: &RootVec,
    data: &Arc<CartanData>,
) -> Result<bool> {
    let lhs = reflection_through(&w.act(root), data)?;
    let rhs = w.mul(&reflection_through(root, data)?).mul(&w.inverse());
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_finite_roots, finite_part, DEFAULT_ROOT_CAP};

    fn d5() -> Arc<CartanData> {
        Arc::new(CartanData::load_builtin("D5~".parse().unwrap()).unwrap())
    }

    fn word(s: &[usize], data: &Arc<CartanData>) -> GroupElement {
        let tokens: Vec<GeneratorToken> = s.iter().map(|&i| GeneratorToken::S(i)).collect();
        evaluate_word(&tokens, data).unwrap()
    }

    #[test]
    fn orientation_fixture_s2_on_alpha0() {
        let data = d5();
        let s2 = simple_reflection(2, &data).unwrap();
        let a0 = RootVec::simple(0, 6);
        assert_eq!(s2.act(&a0).coords(), &[1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn reflections_are_involutions_and_fix_delta() {
        let data = d5();
        let delta = data.null_root().unwrap();
        for i in 0..6 {
            let s = simple_reflection(i, &data).unwrap();
            assert!(s.mul(&s).is_identity());
            assert!(s.fixes(&delta));
        }
    }

    #[test]
    fn braid_relations_match_bond_orders() {
        let data = d5();
        for i in 0..6 {
            for j in 0..6 {
                if i == j {
                    continue;
                }
                let sij = word(&[i, j], &data);
                let expected = match data.bond_order(i, j) {
                    crate::cartan::BondOrder::Finite(m) => m,
                    crate::cartan::BondOrder::Infinite => unreachable!("simply laced"),
                };
                assert_eq!(sij.order(8), ElementOrder::Finite(expected));
            }
        }
    }

    #[test]
    fn automorphism_rotation_has_order_four() {
        let data = d5();
        let sigma12 = diagram_automorphism("sigma12", &[5, 4, 3, 2, 0, 1], &data).unwrap();
        assert_eq!(sigma12.order(8), ElementOrder::Finite(4));
        // Conjugation relabels reflections by the node image map.
        for i in 0..6 {
            let lhs = sigma12.mul(&simple_reflection(i, &data).unwrap());
            let rhs = simple_reflection([5, 4, 3, 2, 0, 1][i], &data)
                .unwrap()
                .mul(&sigma12);
            assert_eq!(lhs, rhs, "conjugation list fails at node {i}");
        }
    }

    #[test]
    fn non_symmetry_is_rejected_as_automorphism() {
        let data = d5();
        // Swapping nodes 0 and 2 does not preserve the matrix.
        assert!(diagram_automorphism("bad", &[2, 1, 0, 3, 4, 5], &data).is_err());
        assert!(diagram_automorphism("bad", &[0, 0, 2, 3, 4, 5], &data).is_err());
    }

    #[test]
    fn word_evaluation_applies_rightmost_first() {
        let data = d5();
        let w = word(&[1, 3, 2], &data);
        // w·α_0 = α_0 + α_1 + α_2 + α_3.
        assert_eq!(w.act(&RootVec::simple(0, 6)).coords(), &[1, 1, 1, 1, 0, 0]);
        // Compare against explicit composition: s1 ∘ (s3 ∘ s2).
        let alt = word(&[1], &data).mul(&word(&[3], &data)).mul(&word(&[2], &data));
        assert_eq!(w, alt);
    }

    #[test]
    fn inverse_and_power_round_trip() {
        let data = d5();
        let w = word(&[0, 2, 3, 4, 2, 1], &data);
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.pow(3), w.mul(&w).mul(&w));
        assert_eq!(w.pow(-2), w.inverse().mul(&w.inverse()));
    }

    #[test]
    fn coweight_action_is_contragredient() {
        let data = d5();
        let w = word(&[2, 3, 5], &data);
        let v = RootVec::new(vec![1, 0, 2, -1, 0, 3]);
        let f = CoweightVec::new(vec![
            Rational64::new(1, 2),
            Rational64::from_integer(-1),
            Rational64::zero(),
            Rational64::from_integer(2),
            Rational64::new(3, 2),
            Rational64::from_integer(1),
        ]);
        let lhs = pair(&w.act(&v), &w.act_coweight(&f).unwrap(), &data).unwrap();
        let rhs = pair(&v, &f, &data).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_action_of_simple_reflection_on_coroots() {
        // s_i α̌_j = α̌_j − A[j][i] α̌_i, checked through the pairing action.
        let data = d5();
        for i in 0..6 {
            let s = simple_reflection(i, &data).unwrap();
            for j in 0..6 {
                let lhs = s.act_coweight(&crate::lattice::simple_coroot(j, &data).unwrap())
                    .unwrap();
                let rhs = crate::lattice::simple_coroot(j, &data)
                    .unwrap()
                    .sub(&crate::lattice::simple_coroot(i, &data).unwrap()
                        .scale(Rational64::from_integer(data.entry(j, i))));
                assert_eq!(lhs, rhs, "coroot reflection at ({i}, {j})");
            }
        }
    }

    #[test]
    fn reflection_through_simple_roots_matches_generators() {
        let data = d5();
        for i in 0..6 {
            let via_root = reflection_through(&RootVec::simple(i, 6), &data).unwrap();
            assert_eq!(via_root, simple_reflection(i, &data).unwrap());
        }
    }

    #[test]
    fn reflection_through_affine_root_in_rank_one() {
        let data = Arc::new(CartanData::load_builtin("A1~".parse().unwrap()).unwrap());
        // δ − α_1 = α_0, so the reflection through it is s_0.
        let a0 = RootVec::simple(0, 2);
        let s0 = simple_reflection(0, &data).unwrap();
        assert_eq!(reflection_through(&a0, &data).unwrap(), s0);
        assert!(reflection_through(&data.null_root().unwrap(), &data).is_err());
    }

    #[test]
    fn conjugated_reflections_follow_the_root_image() {
        let data = d5();
        let w = word(&[1, 3, 2], &data);
        for i in 0..6 {
            assert!(reflection_conjugation_holds(&w, &RootVec::simple(i, 6), &data).unwrap());
        }
    }

    #[test]
    fn finite_part_of_images_tracks_delta_shifts() {
        let data = d5();
        // s_0 α_2 = α_0 + α_2 = δ − (finite combination).
        let s0 = simple_reflection(0, &data).unwrap();
        let image = s0.act(&RootVec::simple(2, 6));
        let (x, k) = finite_part(&image, &data).unwrap();
        assert_eq!(k, 1);
        assert_eq!(x, image.sub(&data.null_root().unwrap()));
        let roots = enumerate_finite_roots(&data, DEFAULT_ROOT_CAP).unwrap();
        assert!(roots.binary_search(&x).is_ok());
    }
}
