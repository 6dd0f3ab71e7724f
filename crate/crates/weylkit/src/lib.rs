//! Exact-arithmetic toolkit for extended affine Weyl groups realized as
//! faithful integer matrix groups.
//!
//! The crate works with a generalized Cartan matrix `A` and represents the
//! associated affine Weyl group — extended by its diagram automorphisms — on
//! the span of the simple roots `{α_0, …, α_n}`. Every computation is exact:
//! matrices are `i64`, coweights are `Rational64`, and there are no
//! tolerances anywhere. On top of the group action the crate provides
//!
//! * lattice translations and their detection ([`translations`]),
//! * quasi-translations: elements whose power is a translation,
//! * orthogonal (centralizer) subsystems, exact setwise stabilizer search,
//!   and normalizer assembly into commuting generator blocks ([`normalizer`]),
//! * a pinned fixture family inside the affine `D5` system — the
//!   `γ/η/β` subsystem configuration and the translation directions built
//!   from it ([`fixtures`]) — with a reproduction report ([`report`]).
//!
//! The CLI binary `weylkit` exposes the same operations on the command line.

pub mod cartan;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod lattice;
pub mod matrix;
pub mod normalizer;
pub mod report;
pub mod translations;
pub mod weylgroup;

pub use cartan::{classify_components, BondOrder, CartanData, Family, TypeLabel, ValidationReport};
pub use error::{Error, Result};
pub use expr::{parse_aut_spec, parse_coweight_expr, parse_root_expr, parse_word};
pub use fixtures::{
    build_directions, build_geb_system, build_order_four, build_order_two, build_rank_one,
    build_rank_three, catalog, geb_system, named_subsystem, Check, CheckStatus, Direction,
    FixtureEntry, GammaEtaBetaSystem, OrderFourQuasiTranslations, OrderTwoQuasiTranslations,
    RankOneExample, RankThreeExample, ReflectionWord, TranslationDirections,
};
pub use lattice::{
    bilinear, enumerate_finite_roots, finite_part, is_real_root, pair, simple_coroot, CoweightVec,
    RootVec, DEFAULT_ROOT_CAP,
};
pub use normalizer::{
    action_cell, action_table, affine_extension, assemble_normalizer, close_subgroup,
    default_search_cap, dihedral_name, orthogonal_subsystem, stabilizer_search, ActionTable,
    InducedMap, NormalizerBlock, NormalizerPresentation, StabilizerHit, Subsystem,
    DEFAULT_MAX_LEN,
};
pub use report::{property_cases, run_suite, suite_names, with_property_cases, ReproReport};
pub use translations::{
    as_translation, conjugation_check, quasi_translation_analysis, translation_element,
    QuasiTranslationReport, SubsystemAction, DEFAULT_KMAX,
};
pub use weylgroup::{
    diagram_automorphism, evaluate_word, named_automorphisms, reflection_conjugation_holds,
    reflection_through, simple_reflection, word_string, ElementOrder, GeneratorToken, GroupElement,
};
