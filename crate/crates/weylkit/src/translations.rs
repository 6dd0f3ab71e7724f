//! Lattice translations inside the affine Weyl group, their detection, and
//! quasi-translation analysis (elements with a translation power).
//!
//! A level-zero integral coweight `μ` defines the translation
//! `t_μ · α = α − ⟨α, μ⟩ δ` on roots; on a coweight of level `k` it acts as
//! `f ↦ f + k·μ`. Translations commute, compose additively, and conjugate
//! by `w t_μ w⁻¹ = t_{w·μ}`.

use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::{pair, CoweightVec, RootVec};
use crate::matrix::IntMat;
use crate::normalizer::{InducedMap, Subsystem};
use crate::weylgroup::{word_string, GroupElement};

/// Default power bound for [`quasi_translation_analysis`].
pub const DEFAULT_KMAX: u32 = 24;

/// Builds the translation `t_μ` for a level-zero coweight with integer
/// coordinates. Column `j` of the matrix is `e_j − ⟨α_j, μ⟩ · marks`.
pub fn translation_element(mu: &CoweightVec, data: &Arc<CartanData>) -> Result<GroupElement> {
    let size = data.size();
    if mu.len() != size {
        return Err(Error::DimensionMismatch { expected: size, got: mu.len() });
    }
    if !mu.level().is_zero() {
        return Err(Error::NotALatticeTranslation(format!(
            "coweight {mu} has nonzero level {}",
            mu.level()
        )));
    }
    let marks = data.marks().ok_or(Error::NotAffine)?;
    let mut m = IntMat::identity(size);
    for j in 0..size {
        let p = pair(&RootVec::simple(j, size), mu, data)?;
        if !p.is_integer() {
            return Err(Error::NotALatticeTranslation(format!(
                "coweight {mu} pairs to {p} against simple root {j}"
            )));
        }
        let p = p.to_integer();
        for i in 0..size {
            m.set(i, j, m.get(i, j) - p * marks[i]);
        }
    }
    GroupElement::from_matrix(m, data)
}

/// Recovers the translation vector of `g` if `g` is a lattice translation:
/// every simple-root image must differ from the root by a multiple of `δ`,
/// and the reconstructed coweight must reproduce `g` exactly.
#[must_use]
pub fn as_translation(g: &GroupElement) -> Option<CoweightVec> {
    let data = g.ambient();
    let size = data.size();
    let delta = data.null_root().ok()?;
    let mut coords = vec![Rational64::zero(); size];
    for j in 0..size {
        let root = RootVec::simple(j, size);
        let d = g.act(&root).sub(&root);
        let k = d.coords()[0];
        if d != delta.scale(k) {
            return None;
        }
        if j > 0 {
            // t_μ α_j = α_j − μ_j δ for j ≥ 1.
            coords[j - 1] = Rational64::from_integer(-k);
        }
    }
    let mu = CoweightVec::new(coords);
    let rebuilt = translation_element(&mu, data).ok()?;
    (rebuilt.matrix() == g.matrix()).then_some(mu)
}

/// Checks the conjugation law `w t_μ w⁻¹ = t_{w·μ}` exactly.
pub fn conjugation_check(w: &GroupElement, mu: &CoweightVec) -> Result<bool> {
    let data = w.ambient();
    let t = translation_element(mu, data)?;
    let lhs = w.mul(&t).mul(&w.inverse());
    let moved = w.act_coweight(mu)?;
    let rhs = translation_element(&moved, data)?;
    Ok(lhs == rhs)
}

/// How an element acts on one subsystem's simple roots, if it stabilizes
/// them up to `δ` shifts.
#[derive(Clone, Debug, Serialize)]
pub struct SubsystemAction {
    pub subsystem: String,
    pub map: Option<InducedMap>,
}

/// Result of probing the powers of an element for translations.
#[derive(Clone, Debug, Serialize)]
pub struct QuasiTranslationReport {
    /// Display word of the analyzed element, when it carries one.
    pub word: String,
    /// Least `k ≥ 1` with `g^k` a lattice translation, within the bound.
    pub translation_power: Option<u32>,
    /// Translation vector of that power (zero when the power is the
    /// identity).
    pub vector: Option<CoweightVec>,
    /// Action of `g` itself on each supplied subsystem.
    pub subsystem_actions: Vec<SubsystemAction>,
}

/// Finds the least power of `g` that is a lattice translation (bounded by
/// `k_max`) and records how `g` permutes-and-shifts the given subsystems.
#[must_use]
pub fn quasi_translation_analysis(
    g: &GroupElement,
    subsystems: &[&Subsystem],
    k_max: u32,
) -> QuasiTranslationReport {
    let data = g.ambient();
    let mut translation_power = None;
    let mut vector = None;
    let mut power = g.clone();
    for k in 1..=k_max {
        if let Some(mu) = as_translation(&power) {
            translation_power = Some(k);
            vector = Some(mu);
            break;
        }
        power = power.mul(g);
    }
    let subsystem_actions = subsystems
        .iter()
        .map(|s| SubsystemAction {
            subsystem: s.name.clone(),
            map: s.induced_map(g, data),
        })
        .collect();
    QuasiTranslationReport {
        word: g.word().map(word_string).unwrap_or_default(),
        translation_power,
        vector,
        subsystem_actions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroup::{diagram_automorphism, evaluate_word, GeneratorToken};

    fn ambient(label: &str) -> Arc<CartanData> {
        Arc::new(CartanData::load_builtin(label.parse().unwrap()).unwrap())
    }

    fn coweight(ints: &[i64]) -> CoweightVec {
        CoweightVec::from_integers(ints)
    }

    #[test]
    fn rank_one_translation_matrix_and_detection() {
        let data = ambient("A1~");
        let t = translation_element(&coweight(&[1, 0]), &data).unwrap();
        // t_{h_1}: α_1 ↦ α_1 − δ = −α_0, α_0 ↦ α_0 + δ.
        let a0 = RootVec::simple(0, 2);
        let a1 = RootVec::simple(1, 2);
        let delta = data.null_root().unwrap();
        assert_eq!(t.act(&a1), a1.sub(&delta));
        assert_eq!(t.act(&a0), a0.add(&delta));
        assert_eq!(as_translation(&t).unwrap(), coweight(&[1, 0]));

        // The same element as the word π s_1.
        let pi = diagram_automorphism("pi", &[1, 0], &data).unwrap();
        let s1 = evaluate_word(&[GeneratorToken::S(1)], &data).unwrap();
        assert_eq!(pi.mul(&s1).matrix(), t.matrix());
        assert!(as_translation(&s1).is_none());
        assert!(as_translation(&pi).is_none());
    }

    #[test]
    fn translations_compose_additively() {
        let data = ambient("D5~");
        let mu = coweight(&[1, -2, 0, 3, -1, 0]);
        let nu = coweight(&[0, 1, 1, -1, 2, 0]);
        let t_mu = translation_element(&mu, &data).unwrap();
        let t_nu = translation_element(&nu, &data).unwrap();
        let t_sum = translation_element(&mu.add(&nu), &data).unwrap();
        assert_eq!(t_mu.mul(&t_nu), t_sum);
        assert_eq!(t_nu.mul(&t_mu), t_sum);
        assert_eq!(as_translation(&t_sum).unwrap(), mu.add(&nu));
    }

    #[test]
    fn level_one_coweights_shift_by_the_vector() {
        let data = ambient("A1~");
        let t = translation_element(&coweight(&[1, 0]), &data).unwrap();
        let level_one = CoweightVec::delta_dual(2);
        let moved = t.act_coweight(&level_one).unwrap();
        assert_eq!(moved, level_one.add(&coweight(&[1, 0])));
    }

    #[test]
    fn nonzero_level_and_fractional_vectors_are_rejected() {
        let data = ambient("A1~");
        let err = translation_element(&CoweightVec::delta_dual(2), &data).unwrap_err();
        assert!(matches!(err, Error::NotALatticeTranslation(_)));
        let half = CoweightVec::new(vec![Rational64::new(1, 2), Rational64::zero()]);
        let err = translation_element(&half, &data).unwrap_err();
        assert!(matches!(err, Error::NotALatticeTranslation(_)));
    }

    #[test]
    fn conjugation_moves_the_vector() {
        let data = ambient("D5~");
        let w = evaluate_word(
            &[GeneratorToken::S(1), GeneratorToken::S(3), GeneratorToken::S(2)],
            &data,
        )
        .unwrap();
        let mu = coweight(&[1, 0, 0, 0, 0, 0]);
        assert!(conjugation_check(&w, &mu).unwrap());
    }

    #[test]
    fn quasi_translation_detects_the_square() {
        let data = ambient("A1~");
        let pi = diagram_automorphism("pi", &[1, 0], &data).unwrap();
        // π² = identity = translation by zero.
        let report = quasi_translation_analysis(&pi, &[], 8);
        assert_eq!(report.translation_power, Some(2));
        assert!(report.vector.unwrap().is_zero());

        let t = translation_element(&coweight(&[3, 0]), &data).unwrap();
        let report = quasi_translation_analysis(&t, &[], 8);
        assert_eq!(report.translation_power, Some(1));
    }
}
