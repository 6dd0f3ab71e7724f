//! Subsystems of the root system, their orthogonal complements, exact
//! setwise stabilizer search, and normalizer assembly.
//!
//! A [`Subsystem`] is an ordered simple system of real roots inside an
//! ambient system, together with its derived Cartan data. The normalizer of
//! the reflection subgroup it generates is assembled from three exact
//! ingredients: reflections through the subsystem's own roots, reflections
//! through roots orthogonal to all of them (the centralizer, organized into
//! affine-closed components), and short group elements that permute the
//! subsystem — found by breadth-first search over words in the simple
//! reflections and a chosen automorphism subgroup.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{classify_components, CartanData, TypeLabel};
use crate::error::{Error, Result};
use crate::lattice::{bilinear_with, enumerate_finite_roots, RootVec, DEFAULT_ROOT_CAP};
use crate::matrix::IntMat;
use crate::weylgroup::{reflection_through, simple_reflection, word_string, GroupElement};

/// Environment variable overriding the search dedup budget.
pub const SEARCH_CAP_ENV: &str = "WEYLKIT_SEARCH_CAP";

/// Default dedup budget for breadth-first element searches, overridable via
/// the `WEYLKIT_SEARCH_CAP` environment variable.
#[must_use]
pub fn default_search_cap() -> usize {
    std::env::var(SEARCH_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(5_000_000)
}

/// Default word-length bound for stabilizer searches.
pub const DEFAULT_MAX_LEN: usize = 8;

/// An ordered simple system of real roots inside an ambient system.
#[derive(Clone, Debug, Serialize)]
pub struct Subsystem {
    pub name: String,
    /// Ordered simple roots in ambient coordinates.
    pub roots: Vec<RootVec>,
    /// Display names parallel to `roots` (defaults to compressed root names).
    pub root_names: Vec<String>,
    /// Cartan data of the pairing matrix of `roots`.
    pub sub_cartan: CartanData,
    pub label: TypeLabel,
    /// Highest root of the finite part, in ambient coordinates.
    pub highest_root: RootVec,
    /// Index into `roots` of the affine node, for affine-closed subsystems.
    pub affine_node: Option<usize>,
}

impl Subsystem {
    /// Builds a finite-type subsystem from an ordered simple system.
    pub fn new_finite(name: &str, roots: Vec<RootVec>, ambient: &CartanData) -> Result<Self> {
        let (sub_cartan, label) = derive_sub_cartan(&roots, ambient)?;
        if label.affine {
            return Err(Error::InvalidSubsystem(format!(
                "simple system of {name} closes into an affine diagram; use new_affine"
            )));
        }
        let highest_root = highest_root_of(&roots, &sub_cartan)?;
        Ok(Self {
            name: name.to_string(),
            root_names: default_names(&roots),
            roots,
            sub_cartan,
            label,
            highest_root,
            affine_node: None,
        })
    }

    /// Builds an affine-closed subsystem. `affine_node` points at the node
    /// that extends the finite part; the constructor checks that it equals
    /// `k·δ − α̃` for the finite part's highest root `α̃` and some `k ≥ 1`.
    pub fn new_affine(
        name: &str,
        roots: Vec<RootVec>,
        affine_node: usize,
        ambient: &CartanData,
    ) -> Result<Self> {
        let (sub_cartan, label) = derive_sub_cartan(&roots, ambient)?;
        if !label.affine {
            return Err(Error::InvalidSubsystem(format!(
                "simple system of {name} is finite; use new_finite"
            )));
        }
        if affine_node >= roots.len() {
            return Err(Error::InvalidSubsystem(format!(
                "affine node index {affine_node} out of range"
            )));
        }
        let finite_roots: Vec<RootVec> = roots
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != affine_node)
            .map(|(_, r)| r.clone())
            .collect();
        let (finite_cartan, _) = derive_sub_cartan(&finite_roots, ambient)?;
        let highest_root = highest_root_of(&finite_roots, &finite_cartan)?;
        let delta = ambient.null_root()?;
        // The affine node must be k·δ − α̃: its sum with the highest root is
        // a positive multiple of δ.
        let total = roots[affine_node].add(&highest_root);
        let k = total.coords()[0];
        if k < 1 || total != delta.scale(k) {
            return Err(Error::InvalidSubsystem(format!(
                "node {affine_node} of {name} is not k·δ minus the finite highest root"
            )));
        }
        Ok(Self {
            name: name.to_string(),
            root_names: default_names(&roots),
            roots,
            sub_cartan,
            label,
            highest_root,
            affine_node: Some(affine_node),
        })
    }

    /// Replaces the per-root display names.
    pub fn set_root_names(&mut self, names: Vec<String>) -> Result<()> {
        if names.len() != self.roots.len() {
            return Err(Error::InvalidSubsystem(format!(
                "{} names supplied for {} roots",
                names.len(),
                self.roots.len()
            )));
        }
        self.root_names = names;
        Ok(())
    }

    /// How `g` permutes-and-shifts this subsystem's simple roots:
    /// `g·r_m = r_{perm[m]} + shifts[m]·δ`. `None` when some image leaves
    /// the subsystem's simple system (mod δ) or the matching fails to be a
    /// bijection.
    #[must_use]
    pub fn induced_map(&self, g: &GroupElement, ambient: &CartanData) -> Option<InducedMap> {
        let delta = ambient.null_root().ok();
        let mut perm = Vec::with_capacity(self.roots.len());
        let mut shifts = Vec::with_capacity(self.roots.len());
        for r in &self.roots {
            let image = g.act(r);
            let mut found = None;
            for (m, target) in self.roots.iter().enumerate() {
                let d = image.sub(target);
                if d.is_zero() {
                    found = Some((m, 0));
                    break;
                }
                if let Some(delta) = &delta {
                    // d must be a multiple of δ; c[0] = 1 fixes the factor.
                    let k = d.coords()[0];
                    if k != 0 && d == delta.scale(k) {
                        found = Some((m, k));
                        break;
                    }
                }
            }
            let (m, k) = found?;
            perm.push(m);
            shifts.push(k);
        }
        let mut hit = vec![false; self.roots.len()];
        for &m in &perm {
            if hit[m] {
                return None;
            }
            hit[m] = true;
        }
        Some(InducedMap { perm, shifts })
    }
}

fn default_names(roots: &[RootVec]) -> Vec<String> {
    roots
        .iter()
        .map(|r| r.compressed().unwrap_or_else(|| format!("{r}")))
        .collect()
}

/// Pairing matrix of an ordered root list as Cartan data, plus its diagram
/// label. Errors unless the pairings are a valid simple system.
fn derive_sub_cartan(roots: &[RootVec], ambient: &CartanData) -> Result<(CartanData, TypeLabel)> {
    if roots.is_empty() {
        return Err(Error::InvalidSubsystem("empty simple system".into()));
    }
    let gram = ambient.bilinear_gram();
    let k = roots.len();
    let mut rows = vec![vec![0i64; k]; k];
    for i in 0..k {
        let norm = bilinear_with(&roots[i], &roots[i], &gram);
        if norm <= num_rational::Rational64::zero() {
            return Err(Error::InvalidSubsystem(format!(
                "root #{i} has non-positive squared length"
            )));
        }
        for j in 0..k {
            let two_pair =
                num_rational::Rational64::from_integer(2) * bilinear_with(&roots[i], &roots[j], &gram) / norm;
            if !two_pair.is_integer() {
                return Err(Error::InvalidSubsystem(format!(
                    "pairing of roots #{i}, #{j} is not integral"
                )));
            }
            rows[i][j] = two_pair.to_integer();
        }
    }
    let m = IntMat::from_rows(&rows).expect("square pairing matrix");
    let sub_cartan = CartanData::new(m)?;
    let comps = classify_components(roots, ambient)?;
    if comps.len() != 1 {
        return Err(Error::InvalidSubsystem(format!(
            "simple system splits into {} components; build one subsystem per component",
            comps.len()
        )));
    }
    Ok((sub_cartan, comps[0].0))
}

/// Highest root of a finite system, mapped back to ambient coordinates.
fn highest_root_of(roots: &[RootVec], sub_cartan: &CartanData) -> Result<RootVec> {
    let sub_roots = enumerate_finite_roots(sub_cartan, DEFAULT_ROOT_CAP)?;
    let best = sub_roots
        .iter()
        .max_by_key(|r| r.coords().iter().sum::<i64>())
        .expect("nonempty root system");
    // Height has a unique maximum in an irreducible system.
    let top_height: i64 = best.coords().iter().sum();
    let ties = sub_roots
        .iter()
        .filter(|r| r.coords().iter().sum::<i64>() == top_height)
        .count();
    if ties != 1 {
        return Err(Error::InvalidSubsystem(
            "highest root is not unique; the component is not irreducible".into(),
        ));
    }
    let mut acc = RootVec::zero(roots[0].len());
    for (c, r) in best.coords().iter().zip(roots) {
        acc = acc.add(&r.scale(*c));
    }
    Ok(acc)
}

/// A permutation-with-shifts action on a subsystem's simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMap {
    /// `g·r_m = r_{perm[m]} + shifts[m]·δ`.
    pub perm: Vec<usize>,
    pub shifts: Vec<i64>,
}

impl InducedMap {
    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.shift_free()
    }

    #[must_use]
    pub fn shift_free(&self) -> bool {
        self.shifts.iter().all(|&s| s == 0)
    }

    /// Cycle notation for the permutation part, e.g. `(0 2)(1 3)`.
    #[must_use]
    pub fn cycles(&self) -> String {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.perm[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.perm[cur];
            }
            out.push('(');
            out.push_str(
                &cycle.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Finds all orthogonal-subsystem components: the roots of the finite system
/// orthogonal to every seed, organized into classified components with
/// canonical simple systems (positive roots that are not sums of two
/// positive orthogonal roots).
pub fn orthogonal_subsystem(seeds: &[RootVec], ambient: &CartanData) -> Result<Vec<Subsystem>> {
    let phi = enumerate_finite_roots(ambient, DEFAULT_ROOT_CAP)?;
    let gram = ambient.bilinear_gram();
    let omega: Vec<&RootVec> = phi
        .iter()
        .filter(|r| seeds.iter().all(|s| bilinear_with(r, s, &gram).is_zero()))
        .collect();
    let positives: HashSet<&RootVec> =
        omega.iter().copied().filter(|r| r.is_positive()).collect();
    let mut simple: Vec<RootVec> = positives
        .iter()
        .filter(|p| {
            // Simple ⇔ not a sum of two positive orthogonal roots.
            !positives.iter().any(|q| {
                let rest = p.sub(q);
                !rest.is_zero() && positives.contains(&rest)
            })
        })
        .map(|r| (*r).clone())
        .collect();
    simple.sort();
    let comps = classify_components(&simple, ambient)?;
    comps
        .into_iter()
        .enumerate()
        .map(|(i, (label, roots))| {
            Subsystem::new_finite(&format!("{label}#{i}"), roots, ambient)
        })
        .collect()
}

/// Closes a finite subsystem into its affine extension by appending
/// `δ − α̃` (highest root `α̃` of the component).
pub fn affine_extension(sub: &Subsystem, ambient: &CartanData) -> Result<Subsystem> {
    if sub.affine_node.is_some() || sub.label.affine {
        return Err(Error::InvalidSubsystem(format!("{} is already affine", sub.name)));
    }
    let delta = ambient.null_root()?;
    let new_root = delta.sub(&sub.highest_root);
    let mut roots = sub.roots.clone();
    roots.push(new_root);
    let mut out = Subsystem::new_affine(&sub.name, roots, sub.roots.len(), ambient)?;
    let mut names = sub.root_names.clone();
    names.push(
        out.roots
            .last()
            .expect("appended root")
            .compressed()
            .unwrap_or_else(|| "affine".into()),
    );
    out.set_root_names(names)?;
    Ok(out)
}

/// One element found by [`stabilizer_search`]: the ShortLex-least word whose
/// element induces the recorded permutation of the targets.
#[derive(Clone, Debug, Serialize)]
pub struct StabilizerHit {
    pub element: GroupElement,
    /// `element · targets[m] = targets[perm[m]]` exactly (no δ shift).
    pub perm: Vec<usize>,
}

/// Breadth-first search for elements that stabilize the target list setwise
/// and exactly (image set equals the target set, with no δ residue).
///
/// Generators are the simple reflections `s_0 < s_1 < … < s_n` followed by
/// the supplied automorphisms, and words are explored in ShortLex order, so
/// for every achievable permutation of the targets the first (hence
/// ShortLex-least) witness is recorded. `cap` bounds the number of distinct
/// elements visited.
pub fn stabilizer_search(
    targets: &[RootVec],
    auts: &[GroupElement],
    max_len: usize,
    ambient: &Arc<CartanData>,
    cap: usize,
) -> Result<Vec<StabilizerHit>> {
    let size = ambient.size();
    let mut gens: Vec<GroupElement> = Vec::with_capacity(size + auts.len());
    for i in 0..size {
        gens.push(simple_reflection(i, ambient)?);
    }
    gens.extend(auts.iter().cloned());
    let target_index: HashMap<&RootVec, usize> =
        targets.iter().enumerate().map(|(i, r)| (r, i)).collect();
    if target_index.len() != targets.len() {
        return Err(Error::InvalidSubsystem("duplicate targets in stabilizer search".into()));
    }

    let check = |g: &GroupElement| -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(targets.len());
        for t in targets {
            perm.push(*target_index.get(&g.act(t))?);
        }
        Some(perm)
    };

    let identity = GroupElement::identity(ambient);
    let mut seen: HashSet<IntMat> = HashSet::new();
    seen.insert(identity.matrix().clone());
    let mut hits: Vec<StabilizerHit> = Vec::new();
    let mut hit_perms: HashSet<Vec<usize>> = HashSet::new();
    if let Some(perm) = check(&identity) {
        hit_perms.insert(perm.clone());
        hits.push(StabilizerHit { element: identity.clone(), perm });
    }
    let mut layer = vec![identity];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for g in &layer {
            for gen in &gens {
                let h = g.mul(gen);
                if !seen.insert(h.matrix().clone()) {
                    continue;
                }
                if seen.len() > cap {
                    return Err(Error::SearchBudgetExceeded(cap));
                }
                if let Some(perm) = check(&h) {
                    if hit_perms.insert(perm.clone()) {
                        hits.push(StabilizerHit { element: h.clone(), perm });
                    }
                }
                next.push(h);
            }
        }
        layer = next;
    }
    Ok(hits)
}

/// Canonical names for permutations of a four-node affine cycle, written as
/// words in the two diagram reflections `p1` (swap nodes 1, 3) and `p2`
/// (swap 1↔2 and 0↔3), matching the dihedral group of the square.
#[must_use]
pub fn dihedral_name(perm: &[usize]) -> Option<&'static str> {
    match perm {
        [0, 1, 2, 3] => Some("-"),
        [1, 2, 3, 0] => Some("p1p2"),
        [2, 3, 0, 1] => Some("p1p2p1p2"),
        [3, 0, 1, 2] => Some("p2p1"),
        [0, 3, 2, 1] => Some("p1"),
        [3, 2, 1, 0] => Some("p2"),
        [1, 0, 3, 2] => Some("p1p2p1"),
        [2, 1, 0, 3] => Some("p2p1p2"),
        _ => None,
    }
}

/// Table describing how a list of elements acts on a list of subsystems.
#[derive(Clone, Debug, Serialize)]
pub struct ActionTable {
    pub columns: Vec<String>,
    pub rows: Vec<ActionRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionRow {
    pub label: String,
    pub cells: Vec<String>,
}

impl ActionTable {
    /// Markdown rendering with one row per element.
    #[must_use]
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("| element | {} |\n", self.columns.join(" | ")));
        out.push_str(&format!("|---|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.rows {
            out.push_str(&format!("| {} | {} |\n", row.label, row.cells.join(" | ")));
        }
        out
    }
}

/// Names the induced action of `g` on one subsystem for table display.
#[must_use]
pub fn action_cell(g: &GroupElement, sub: &Subsystem, ambient: &CartanData) -> String {
    match sub.induced_map(g, ambient) {
        None => "not stabilized".into(),
        Some(map) if !map.shift_free() => "not stabilized".into(),
        Some(map) => {
            if map.is_identity() {
                "-".into()
            } else if map.perm.len() == 2 {
                format!("pi_{}", sub.name)
            } else if map.perm.len() == 4 {
                dihedral_name(&map.perm).map_or_else(|| map.cycles(), ToString::to_string)
            } else {
                map.cycles()
            }
        }
    }
}

/// Builds the action table of labelled elements against subsystems.
#[must_use]
pub fn action_table(
    elements: &[(String, GroupElement)],
    subsystems: &[&Subsystem],
    ambient: &CartanData,
) -> ActionTable {
    let columns = subsystems.iter().map(|s| s.name.clone()).collect();
    let rows = elements
        .iter()
        .map(|(label, g)| ActionRow {
            label: label.clone(),
            cells: subsystems.iter().map(|s| action_cell(g, s, ambient)).collect(),
        })
        .collect();
    ActionTable { columns, rows }
}

/// One commuting factor of a normalizer's complement.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizerBlock {
    pub label: String,
    pub generators: Vec<(String, GroupElement)>,
}

/// The assembled normalizer of a subsystem's reflection subgroup:
/// `N = ⟨subgroup⟩ ⋊ (block_1 × block_2 × …)`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizerPresentation {
    pub subsystem: String,
    /// Reflections through the subsystem's simple roots.
    pub subgroup_generators: Vec<(String, GroupElement)>,
    /// Affine-closed components of the centralizer.
    pub centralizer_components: Vec<Subsystem>,
    /// Exact stabilizer elements preserving the subsystem and each
    /// centralizer component setwise.
    pub complement_hits: Vec<StabilizerHit>,
    /// Normalizer elements that stabilize the subsystem but exchange
    /// isomorphic centralizer components; they lie outside the block
    /// factorization.
    pub component_mixers: Vec<StabilizerHit>,
    /// Commuting factorization of the complement.
    pub blocks: Vec<NormalizerBlock>,
    /// Conjugation-closure and commutation audit log.
    pub verification: Vec<String>,
}

/// Assembles the normalizer presentation of an affine-closed subsystem.
///
/// The complement candidates are found by an exact stabilizer search whose
/// targets are the subsystem roots *and* the centralizer-component roots —
/// augmenting the targets keeps elements apart that act identically on the
/// subsystem alone. Hits that move a subsystem root outside the subsystem do
/// not normalize its reflection group and are set aside; hits that preserve
/// the subsystem but exchange isomorphic centralizer components are
/// normalizer members that break the per-component factorization, so they
/// are reported separately as `component_mixers`. Each centralizer component
/// then contributes one block: reflections through its roots plus the
/// decomposition-preserving stabilizer elements acting trivially on every
/// other component.
pub fn assemble_normalizer(
    sub: &Subsystem,
    auts: &[GroupElement],
    max_len: usize,
    ambient: &Arc<CartanData>,
    cap: usize,
) -> Result<NormalizerPresentation> {
    let mut verification = Vec::new();
    let subgroup_generators: Vec<(String, GroupElement)> = sub
        .roots
        .iter()
        .zip(&sub.root_names)
        .map(|(r, n)| Ok((format!("s_{n}"), reflection_through(r, ambient)?)))
        .collect::<Result<_>>()?;

    let finite_comps = orthogonal_subsystem(&sub.roots, ambient)?;
    let centralizer_components: Vec<Subsystem> = finite_comps
        .iter()
        .map(|c| affine_extension(c, ambient))
        .collect::<Result<_>>()?;

    let mut targets = sub.roots.clone();
    for c in &centralizer_components {
        targets.extend(c.roots.iter().cloned());
    }
    let all_hits = stabilizer_search(&targets, auts, max_len, ambient, cap)?;

    // Classify the union stabilizers: only elements mapping the subsystem's
    // simple system to itself normalize its reflection group, and only those
    // additionally preserving each centralizer component fit into commuting
    // per-component blocks.
    let sub_set: HashSet<&RootVec> = sub.roots.iter().collect();
    let comp_sets: Vec<HashSet<&RootVec>> =
        centralizer_components.iter().map(|c| c.roots.iter().collect()).collect();
    let mut hits: Vec<StabilizerHit> = Vec::new();
    let mut component_mixers: Vec<StabilizerHit> = Vec::new();
    let mut set_aside = 0usize;
    for h in all_hits {
        if !sub.roots.iter().all(|r| sub_set.contains(&h.element.act(r))) {
            set_aside += 1;
            continue;
        }
        let split_preserving = comp_sets.iter().zip(&centralizer_components).all(
            |(set, comp)| comp.roots.iter().all(|r| set.contains(&h.element.act(r))),
        );
        if split_preserving {
            hits.push(h);
        } else {
            component_mixers.push(h);
        }
    }

    // Closure of the kept elements; for faithful target sets this is exactly
    // the group they generate.
    let nontrivial: Vec<GroupElement> =
        hits.iter().map(|h| h.element.clone()).filter(|g| !g.is_identity()).collect();
    let group = close_subgroup(&nontrivial, ambient, 4096)?;
    verification.push(format!(
        "stabilizer search: {} decomposition-preserving hits closing to a group of order {}, \
         {} component-exchanging hits, {} hits set aside (they move the {} simple system)",
        hits.len(),
        group.len(),
        component_mixers.len(),
        set_aside,
        sub.name
    ));

    // Conjugation closure: every normalizing hit (mixers included) maps each
    // listed root to a listed root and conjugates its reflection accordingly.
    let mut all_systems: Vec<&Subsystem> = vec![sub];
    all_systems.extend(centralizer_components.iter());
    for h in hits.iter().chain(component_mixers.iter()) {
        if h.element.is_identity() {
            continue;
        }
        for system in &all_systems {
            for (r, rname) in system.roots.iter().zip(&system.root_names) {
                let image = h.element.act(r);
                if !targets.contains(&image) {
                    return Err(Error::IncompleteVerification(format!(
                        "hit {} maps {} outside the stabilized root list",
                        word_string(h.element.word().unwrap_or(&[])),
                        rname
                    )));
                }
                let lhs = h.element.mul(&reflection_through(r, ambient)?).mul(&h.element.inverse());
                let rhs = reflection_through(&image, ambient)?;
                if lhs != rhs {
                    return Err(Error::IncompleteVerification(format!(
                        "conjugation closure fails for s_{rname}"
                    )));
                }
            }
        }
    }
    verification.push(format!(
        "conjugation closure holds for all {} normalizing hits over {} roots",
        hits.len() + component_mixers.len(),
        targets.len()
    ));

    // Per-component factors: group elements acting trivially on every other
    // component (their action on the subsystem itself is unconstrained).
    let mut blocks = Vec::new();
    let mut covered: Vec<GroupElement> = Vec::new();
    if centralizer_components.is_empty() {
        let gens = minimal_generating_set(&group, ambient)?;
        covered.extend(gens.iter().cloned());
        blocks.push(NormalizerBlock {
            label: "automorphisms".into(),
            generators: gens
                .into_iter()
                .map(|g| (word_string(g.word().unwrap_or(&[])), g))
                .collect(),
        });
    }
    for (i, comp) in centralizer_components.iter().enumerate() {
        let mut part: Vec<GroupElement> = group
            .iter()
            .filter(|g| {
                centralizer_components
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .all(|(_, other)| other.roots.iter().all(|r| g.fixes(r)))
            })
            .cloned()
            .collect();
        sort_shortlex(&mut part);
        let gens = minimal_generating_set(&part, ambient)?;
        covered.extend(gens.iter().cloned());
        let mut generators: Vec<(String, GroupElement)> = comp
            .roots
            .iter()
            .zip(&comp.root_names)
            .map(|(r, n)| Ok((format!("s_{n}"), reflection_through(r, ambient)?)))
            .collect::<Result<_>>()?;
        generators.extend(
            gens.into_iter().map(|g| (word_string(g.word().unwrap_or(&[])), g)),
        );
        blocks.push(NormalizerBlock { label: comp.name.clone(), generators });
    }

    // The block factors together must recover every stabilizer element.
    let covered_group = close_subgroup(&covered, ambient, 4096)?;
    let covered_set: HashSet<IntMat> =
        covered_group.iter().map(|g| g.matrix().clone()).collect();
    for g in &group {
        if !covered_set.contains(g.matrix()) {
            return Err(Error::IncompleteVerification(format!(
                "stabilizer element {} is not a product of block generators",
                word_string(g.word().unwrap_or(&[]))
            )));
        }
    }
    verification.push("block generators recover the full stabilizer group".into());

    // Cross-block commutation.
    for (i, a) in blocks.iter().enumerate() {
        for b in blocks.iter().skip(i + 1) {
            for (an, ag) in &a.generators {
                for (bn, bg) in &b.generators {
                    if ag.mul(bg) != bg.mul(ag) {
                        return Err(Error::IncompleteVerification(format!(
                            "block generators {an} and {bn} do not commute"
                        )));
                    }
                }
            }
        }
    }
    verification.push("all cross-block generator pairs commute".into());

    Ok(NormalizerPresentation {
        subsystem: sub.name.clone(),
        subgroup_generators,
        centralizer_components,
        complement_hits: hits,
        component_mixers,
        blocks,
        verification,
    })
}

/// Closure of a set of elements under multiplication, up to `bound` distinct
/// elements. Word provenance is preserved through the products.
pub fn close_subgroup(
    gens: &[GroupElement],
    ambient: &Arc<CartanData>,
    bound: usize,
) -> Result<Vec<GroupElement>> {
    let identity = GroupElement::identity(ambient);
    let mut seen: HashSet<IntMat> = HashSet::new();
    seen.insert(identity.matrix().clone());
    let mut out = vec![identity];
    let mut frontier: Vec<usize> = vec![0];
    while let Some(idx) = frontier.pop() {
        let base = out[idx].clone();
        for g in gens {
            let next = base.mul(g);
            if seen.insert(next.matrix().clone()) {
                if out.len() + 1 > bound {
                    return Err(Error::SearchBudgetExceeded(bound));
                }
                out.push(next);
                frontier.push(out.len() - 1);
            }
        }
    }
    Ok(out)
}

fn shortlex_key(g: &GroupElement) -> (usize, Vec<String>) {
    match g.word() {
        Some(w) => (w.len(), w.iter().map(crate::weylgroup::GeneratorToken::name).collect()),
        None => (usize::MAX, Vec::new()),
    }
}

fn sort_shortlex(elements: &mut [GroupElement]) {
    elements.sort_by_key(shortlex_key);
}

/// Smallest generating set of a small group, preferring ShortLex-early
/// elements: subsets are tried in increasing size and lexicographic order.
fn minimal_generating_set(
    group: &[GroupElement],
    ambient: &Arc<CartanData>,
) -> Result<Vec<GroupElement>> {
    let mut elements: Vec<GroupElement> =
        group.iter().filter(|g| !g.is_identity()).cloned().collect();
    sort_shortlex(&mut elements);
    let full: HashSet<IntMat> = group.iter().map(|g| g.matrix().clone()).collect();
    let target_order = full.len().max(1);
    if elements.is_empty() {
        return Ok(Vec::new());
    }
    for size in 1..=elements.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let candidate: Vec<GroupElement> =
                combo.iter().map(|&i| elements[i].clone()).collect();
            let closure = close_subgroup(&candidate, ambient, target_order + 1)?;
            if closure.len() == target_order {
                return Ok(candidate);
            }
            // Next combination in lexicographic order.
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] + (size - i) <= elements.len() - 1 {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() || combo.len() != size {
                break;
            }
            if combo[size - 1] >= elements.len() {
                break;
            }
        }
    }
    // Fall back to the whole list (cannot happen for genuine groups).
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroup::{diagram_automorphism, evaluate_word, GeneratorToken};

    fn d5() -> Arc<CartanData> {
        Arc::new(CartanData::load_builtin("D5~".parse().unwrap()).unwrap())
    }

    fn word(s: &[usize], data: &Arc<CartanData>) -> GroupElement {
        let tokens: Vec<GeneratorToken> = s.iter().map(|&i| GeneratorToken::S(i)).collect();
        evaluate_word(&tokens, data).unwrap()
    }

    #[test]
    fn centralizer_of_alpha0_is_a1_times_a3() {
        let data = d5();
        let seeds = vec![RootVec::simple(0, 6)];
        let comps = orthogonal_subsystem(&seeds, &data).unwrap();
        assert_eq!(comps.len(), 2);
        let mut by_rank: Vec<(usize, Vec<Vec<i64>>)> = comps
            .iter()
            .map(|c| (c.label.rank, c.roots.iter().map(|r| r.coords().to_vec()).collect()))
            .collect();
        by_rank.sort();
        assert_eq!(by_rank[0].0, 1);
        assert_eq!(by_rank[0].1, vec![vec![0, 1, 0, 0, 0, 0]]);
        assert_eq!(by_rank[1].0, 3);
        let a3_set: HashSet<Vec<i64>> = by_rank[1].1.iter().cloned().collect();
        let expected: HashSet<Vec<i64>> = [
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(a3_set, expected);
    }

    #[test]
    fn affine_extension_appends_delta_minus_highest() {
        let data = d5();
        let comps =
            orthogonal_subsystem(&[RootVec::simple(0, 6)], &data).unwrap();
        for comp in comps {
            let closed = affine_extension(&comp, &data).unwrap();
            assert!(closed.label.affine);
            assert_eq!(closed.affine_node, Some(comp.roots.len()));
            // Appended node is δ − α̃.
            let appended = closed.roots.last().unwrap();
            assert_eq!(
                appended.add(&comp.highest_root),
                data.null_root().unwrap()
            );
        }
    }

    #[test]
    fn stabilizer_of_all_simple_roots_is_trivial() {
        let data = d5();
        let targets: Vec<RootVec> = (0..6).map(|i| RootVec::simple(i, 6)).collect();
        let hits = stabilizer_search(&targets, &[], 4, &data, 1_000_000).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(hits[0].element.is_identity());
    }

    #[test]
    fn sigma12_stabilizes_the_simple_roots_cyclically() {
        let data = d5();
        let sigma12 = diagram_automorphism("sigma12", &[5, 4, 3, 2, 0, 1], &data).unwrap();
        let targets: Vec<RootVec> = (0..6).map(|i| RootVec::simple(i, 6)).collect();
        let hits = stabilizer_search(&targets, &[sigma12], 3, &data, 1_000_000).unwrap();
        // identity, sigma12, sigma12², sigma12³.
        assert_eq!(hits.len(), 4);
        assert_eq!(hits[1].perm, vec![5, 4, 3, 2, 0, 1]);
    }

    #[test]
    fn induced_map_reports_shifts() {
        let data = d5();
        // s_0 shifts nothing on {α_1}, but maps α_2 to α_0 + α_2 which is not
        // in the subsystem {α_2}.
        let sub = Subsystem::new_finite("a", vec![RootVec::simple(2, 6)], &data).unwrap();
        let s0 = simple_reflection(0, &data).unwrap();
        assert!(sub.induced_map(&s0, &data).is_none());
        let s4 = simple_reflection(4, &data).unwrap();
        assert!(sub.induced_map(&s4, &data).unwrap().is_identity());
    }

    #[test]
    fn close_subgroup_and_minimal_generators() {
        let data = d5();
        let s0 = word(&[0], &data);
        let s1 = word(&[1], &data);
        // ⟨s_0, s_1⟩ with orthogonal roots is the Klein four-group.
        let group = close_subgroup(&[s0, s1], &data, 64).unwrap();
        assert_eq!(group.len(), 4);
        let gens = minimal_generating_set(&group, &data).unwrap();
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn dihedral_names_cover_the_square_symmetries() {
        assert_eq!(dihedral_name(&[1, 2, 3, 0]), Some("p1p2"));
        assert_eq!(dihedral_name(&[2, 1, 0, 3]), Some("p2p1p2"));
        assert_eq!(dihedral_name(&[1, 2, 0, 3]), None);
    }
}
