//! Generalized Cartan matrices, their validation, and diagram classification.
//!
//! A [`CartanData`] bundles an integer generalized Cartan matrix `A` with the
//! derived data every other module needs: the marks (null-root coordinates)
//! when the matrix is affine, exact rational root lengths from a symmetrizer,
//! and the induced symmetric bilinear form. The stored orientation is
//! `A[i][j] = ⟨α_j, α̌_i⟩`: row `i` lists the pairings against the `i`-th
//! simple coroot, so marks span the right kernel (`A·c = 0`) and the simple
//! reflection acts by `s_i α_j = α_j − A[i][j] α_i`. For symmetric matrices —
//! every simply-laced system — the orientation is invisible.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::RootVec;
use crate::matrix::{primitive_integer_vector, rational_kernel, IntMat};

/// Simple-root system families supported by `load_builtin`.
///
/// Arbitrary symmetrizable matrices are accepted through [`CartanData::new`];
/// the family enum only drives builtin construction and diagram naming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
        }
    }
}

/// A family/rank/affine triple such as `D5~` (affine) or `A3` (finite).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
    pub affine: bool,
}

impl TypeLabel {
    #[must_use]
    pub fn new(family: Family, rank: usize, affine: bool) -> Self {
        Self { family, rank, affine }
    }

    /// Number of nodes in the diagram: `rank` for finite, `rank + 1` affine.
    #[must_use]
    pub fn node_count(&self) -> usize {
        self.rank + usize::from(self.affine)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.family, self.rank, if self.affine { "~" } else { "" })
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses labels like `"D5~"`, `"A3"`, `"A1~"`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::UnsupportedType(s.to_string(), msg.to_string());
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A' | 'a') => Family::A,
            Some('D' | 'd') => Family::D,
            _ => return Err(err("expected family letter A or D")),
        };
        let rest = chars.as_str();
        let (digits, affine) = match rest.strip_suffix('~') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let rank: usize = digits
            .parse()
            .map_err(|_| err("expected a decimal rank after the family letter"))?;
        Ok(Self { family, rank, affine })
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Order of the product `s_i s_j` read off a Cartan matrix bond.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BondOrder {
    Finite(u32),
    /// Bond with `A[i][j]·A[j][i] ≥ 4`; the product has infinite order.
    Infinite,
}

/// Outcome of checking a matrix (and optional marks) against the generalized
/// Cartan matrix axioms. Empty `violations` means the input is valid.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    #[must_use]
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            write!(f, "{}", self.violations.join("\n"))
        }
    }
}

/// A validated generalized Cartan matrix with derived structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    a: IntMat,
    /// Null-root coordinates `c` with `A·c = 0`, `c[0] = 1`; `None` ⇔ finite.
    marks: Option<Vec<i64>>,
    /// Squared lengths `(α_i, α_i)`, longest root per component scaled to 2.
    lengths: Vec<Rational64>,
    /// Builtin label when constructed by `load_builtin`.
    label: Option<TypeLabel>,
}

impl CartanData {
    /// Validates `matrix` and derives marks (when affine) and root lengths.
    pub fn new(matrix: IntMat) -> Result<Self> {
        Self::build(matrix, None, None)
    }

    /// Like [`CartanData::new`] but with caller-supplied marks that must
    /// exactly span the kernel with first coordinate 1.
    pub fn with_marks(matrix: IntMat, marks: Vec<i64>) -> Result<Self> {
        Self::build(matrix, Some(marks), None)
    }

    /// Constructs one of the named builtin systems.
    ///
    /// Supported: `A{n≥1}` and `D{n≥4}`, finite and affine. The affine `D`
    /// diagrams use the labelling with nodes 0 and 1 attached to node 2 and
    /// nodes `n−1`, `n` attached to node `n−2`.
    pub fn load_builtin(label: TypeLabel) -> Result<Self> {
        let unsupported = |msg: &str| Error::UnsupportedType(label.to_string(), msg.to_string());
        let n = label.rank;
        let size = label.node_count();
        let mut rows = vec![vec![0i64; size]; size];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |rows: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            rows[i][j] = -1;
            rows[j][i] = -1;
        };
        match (label.family, label.affine) {
            (Family::A, false) => {
                if n < 1 {
                    return Err(unsupported("A requires rank ≥ 1"));
                }
                for i in 0..n.saturating_sub(1) {
                    edge(&mut rows, i, i + 1);
                }
            }
            (Family::A, true) => {
                if n < 1 {
                    return Err(unsupported("A~ requires rank ≥ 1"));
                }
                if n == 1 {
                    // The rank-1 affine matrix carries the unique ∞-bond.
                    rows[0][1] = -2;
                    rows[1][0] = -2;
                } else {
                    for i in 0..n {
                        edge(&mut rows, i, i + 1);
                    }
                    edge(&mut rows, 0, n);
                }
            }
            (Family::D, false) => {
                if n < 4 {
                    return Err(unsupported("D requires rank ≥ 4"));
                }
                // Chain 0–1–…–(n-3), fork leaves n-2 and n-1 on node n-3.
                for i in 0..n - 3 {
                    edge(&mut rows, i, i + 1);
                }
                edge(&mut rows, n - 3, n - 2);
                edge(&mut rows, n - 3, n - 1);
            }
            (Family::D, true) => {
                if n < 4 {
                    return Err(unsupported("D~ requires rank ≥ 4"));
                }
                // Nodes 0,1 attached to 2; chain 2–…–(n-2); n-1,n on n-2.
                edge(&mut rows, 0, 2);
                edge(&mut rows, 1, 2);
                for i in 2..n - 2 {
                    edge(&mut rows, i, i + 1);
                }
                edge(&mut rows, n - 2, n - 1);
                edge(&mut rows, n - 2, n);
            }
        }
        let matrix = IntMat::from_rows(&rows).expect("builtin rows are square");
        Self::build(matrix, None, Some(label))
    }

    fn build(matrix: IntMat, marks: Option<Vec<i64>>, label: Option<TypeLabel>) -> Result<Self> {
        let report = validate_matrix(&matrix, marks.as_deref());
        if !report.is_valid() {
            return Err(Error::InvalidCartanMatrix(report.violations.join("\n")));
        }
        let derived_marks = derive_marks(&matrix);
        if let (Some(given), Some(derived)) = (&marks, &derived_marks) {
            // validate_matrix already checked A·c = 0 and c[0] = 1, so any
            // remaining mismatch against the primitive kernel vector means
            // the given marks are a non-primitive multiple.
            if given != derived {
                return Err(Error::InvalidCartanMatrix(format!(
                    "marks {given:?} are in the kernel but differ from the primitive vector {derived:?}"
                )));
            }
        }
        let lengths = symmetrizer_lengths(&matrix)?;
        Ok(Self { a: matrix, marks: derived_marks, lengths, label })
    }

    /// Number of nodes (matrix side length).
    #[must_use]
    pub fn size(&self) -> usize {
        self.a.n()
    }

    /// Rank of the underlying finite system: `size − 1` when affine.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.size() - usize::from(self.is_affine())
    }

    /// Cartan matrix entry `A[i][j] = ⟨α_j, α̌_i⟩`.
    #[must_use]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a.get(i, j)
    }

    /// The underlying matrix.
    #[must_use]
    pub fn matrix(&self) -> &IntMat {
        &self.a
    }

    /// Marks `c` with `A·c = 0`, `c[0] = 1`; `None` for finite type.
    #[must_use]
    pub fn marks(&self) -> Option<&[i64]> {
        self.marks.as_deref()
    }

    /// Whether the matrix has a one-dimensional kernel (affine type).
    #[must_use]
    pub fn is_affine(&self) -> bool {
        self.marks.is_some()
    }

    /// Builtin label, if this data came from `load_builtin`.
    #[must_use]
    pub fn label(&self) -> Option<TypeLabel> {
        self.label
    }

    /// The null root `δ = Σ c_i α_i` as a coordinate vector.
    pub fn null_root(&self) -> Result<RootVec> {
        let marks = self.marks.as_ref().ok_or(Error::NotAffine)?;
        Ok(RootVec::new(marks.clone()))
    }

    /// Squared length `(α_i, α_i)` of the `i`-th simple root.
    #[must_use]
    pub fn root_length(&self, i: usize) -> Rational64 {
        self.lengths[i]
    }

    /// All squared lengths.
    #[must_use]
    pub fn root_lengths(&self) -> &[Rational64] {
        &self.lengths
    }

    /// Symmetric bilinear form on simple roots:
    /// `G[i][j] = (α_i, α_j) = A[i][j]·(α_i,α_i)/2`.
    #[must_use]
    pub fn bilinear_gram(&self) -> Vec<Vec<Rational64>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational64::from_integer(self.entry(i, j)) * self.lengths[i] / 2)
                    .collect()
            })
            .collect()
    }

    /// Order of `s_i s_j` determined by `A[i][j]·A[j][i]`.
    #[must_use]
    pub fn bond_order(&self, i: usize, j: usize) -> BondOrder {
        if i == j {
            return BondOrder::Finite(1);
        }
        match self.entry(i, j) * self.entry(j, i) {
            0 => BondOrder::Finite(2),
            1 => BondOrder::Finite(3),
            2 => BondOrder::Finite(4),
            3 => BondOrder::Finite(6),
            _ => BondOrder::Infinite,
        }
    }

    /// Re-runs the axiom checks on the stored matrix and marks.
    /// Always empty for data that passed construction; exposed so callers can
    /// display the audited axiom list.
    #[must_use]
    pub fn validate(&self) -> ValidationReport {
        validate_matrix(&self.a, self.marks.as_deref())
    }
}

impl Serialize for CartanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CartanData", 4)?;
        st.serialize_field("size", &self.size())?;
        st.serialize_field("matrix", &self.a.to_rows())?;
        st.serialize_field("marks", &self.marks)?;
        st.serialize_field("label", &self.label.map(|l| l.to_string()))?;
        st.end()
    }
}

/// JSON schema for Cartan data files: `{"size", "matrix", "marks"?}`.
#[derive(Deserialize)]
struct CartanFile {
    size: usize,
    matrix: Vec<Vec<i64>>,
    #[serde(default)]
    marks: Option<Vec<i64>>,
}

impl CartanData {
    /// Parses the JSON form `{"size": n, "matrix": [[…]], "marks": […]?}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CartanFile =
            serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
        if file.matrix.len() != file.size {
            return Err(Error::ParseError(format!(
                "declared size {} but matrix has {} rows",
                file.size,
                file.matrix.len()
            )));
        }
        let m = IntMat::from_rows(&file.matrix)
            .ok_or_else(|| Error::ParseError("matrix rows must be square".into()))?;
        match file.marks {
            Some(marks) => Self::with_marks(m, marks),
            None => Self::new(m),
        }
    }
}

/// Checks the generalized Cartan matrix axioms and mark consistency, listing
/// every violation instead of stopping at the first.
#[must_use]
pub fn validate_matrix(m: &IntMat, marks: Option<&[i64]>) -> ValidationReport {
    let mut violations = Vec::new();
    let n = m.n();
    for i in 0..n {
        if m.get(i, i) != 2 {
            violations.push(format!("diagonal entry A[{i}][{i}] = {}, expected 2", m.get(i, i)));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if m.get(i, j) > 0 {
                violations.push(format!(
                    "off-diagonal entry A[{i}][{j}] = {} must be ≤ 0",
                    m.get(i, j)
                ));
            }
            if (m.get(i, j) == 0) != (m.get(j, i) == 0) {
                violations.push(format!("zero pattern is asymmetric at ({i}, {j})"));
            }
        }
    }
    if violations.is_empty() {
        if let Err(e) = symmetrizer_lengths(m) {
            violations.push(format!("{e}"));
        }
    }
    let kernel = rational_kernel(m);
    match kernel.len() {
        0 => {
            if marks.is_some() {
                violations.push("marks supplied but the matrix has a trivial kernel (finite type)".into());
            }
        }
        1 => {
            if let Some(c) = derive_marks(m) {
                if let Some(given) = marks {
                    if given.len() != n {
                        violations.push(format!("marks have length {}, expected {n}", given.len()));
                    } else {
                        let image = m.mul_vec(given);
                        if image.iter().any(|&x| x != 0) {
                            violations.push(format!("marks are not in the kernel: A·c = {image:?}"));
                        } else if given[0] != 1 {
                            violations.push(format!("marks must have c[0] = 1, got {}", given[0]));
                        }
                    }
                } else {
                    // Derived marks exist; nothing else to check.
                    let _ = c;
                }
            } else {
                violations.push(
                    "kernel vector has zero or sign-mixed entries; relabel or split components".into(),
                );
            }
        }
        k => violations.push(format!(
            "kernel dimension {k} (only finite kernels and one-dimensional affine kernels are supported)"
        )),
    }
    ValidationReport { violations }
}

/// Primitive positive kernel vector normalized to `c[0] = 1`, when the kernel
/// is one-dimensional and such a normalization exists.
fn derive_marks(m: &IntMat) -> Option<Vec<i64>> {
    let kernel = rational_kernel(m);
    if kernel.len() != 1 {
        return None;
    }
    let mut c = primitive_integer_vector(&kernel[0])?;
    if c.iter().any(|&x| x <= 0) {
        // Sign was fixed to make the first nonzero entry positive; any
        // remaining non-positive entry means the kernel is not positive.
        return None;
    }
    if c[0] != 1 {
        return None;
    }
    // Already primitive with c[0] = 1.
    let _ = &mut c;
    Some(c)
}

/// Positive squared lengths `d` with `d_i·A[i][j] = d_j·A[j][i]`, scaled so
/// the longest root in each connected component has squared length 2.
fn symmetrizer_lengths(m: &IntMat) -> Result<Vec<Rational64>> {
    let n = m.n();
    let mut lengths: Vec<Option<Rational64>> = vec![None; n];
    for start in 0..n {
        if lengths[start].is_some() {
            continue;
        }
        // Breadth-first sweep of one diagram component.
        lengths[start] = Some(Rational64::one());
        let mut component = vec![start];
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            let di = lengths[i].expect("queued nodes are assigned");
            for j in 0..n {
                if i == j || m.get(i, j) == 0 {
                    continue;
                }
                // d_i·A[i][j] = d_j·A[j][i] with both entries nonzero.
                let dj = di * Rational64::from_integer(m.get(i, j))
                    / Rational64::from_integer(m.get(j, i));
                match lengths[j] {
                    None => {
                        lengths[j] = Some(dj);
                        component.push(j);
                        queue.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable(format!(
                            "length constraint at edge ({i}, {j}) is inconsistent"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let max = component
            .iter()
            .map(|&i| lengths[i].expect("component assigned"))
            .max()
            .expect("component is nonempty");
        if max <= Rational64::zero() {
            return Err(Error::NotSymmetrizable("non-positive length assignment".into()));
        }
        let scale = Rational64::from_integer(2) / max;
        for &i in &component {
            lengths[i] = lengths[i].map(|d| d * scale);
        }
    }
    Ok(lengths.into_iter().map(|d| d.expect("all nodes assigned")).collect())
}

/// Classifies a set of roots by the graph of their pairwise bilinear values.
///
/// Preconditions: every root has squared length 2 and pairwise products lie
/// in `{0, −1, −2}` (a simply-laced simple system, possibly affine). A `−2`
/// pairing is the doubled bond of a rank-one affine pair and must be its own
/// component. Recognized component shapes: paths (`A_k`), single forks with
/// two unit branches (`D_k`), doubled pairs (`A1~`), cycles (`A_{k−1}~`) and
/// doubly forked paths (`D_{k−1}~`). Each component comes back with a
/// canonical node ordering that is invariant under permutations of the input.
pub fn classify_components(
    roots: &[RootVec],
    ambient: &CartanData,
) -> Result<Vec<(TypeLabel, Vec<RootVec>)>> {
    let k = roots.len();
    let gram = ambient.bilinear_gram();
    let pair = |u: &RootVec, v: &RootVec| crate::lattice::bilinear_with(u, v, &gram);
    let two = Rational64::from_integer(2);
    let minus_one = Rational64::from_integer(-1);
    let minus_two = Rational64::from_integer(-2);
    let mut adj = vec![Vec::new(); k];
    let mut doubled: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..k {
        if pair(&roots[i], &roots[i]) != two {
            return Err(Error::UnrecognizedDiagram(format!(
                "root #{i} has squared length {}, expected 2",
                pair(&roots[i], &roots[i])
            )));
        }
        for j in 0..k {
            if i == j {
                continue;
            }
            let p = pair(&roots[i], &roots[j]);
            if p == minus_one {
                adj[i].push(j);
            } else if p == minus_two {
                adj[i].push(j);
                doubled.insert((i, j));
            } else if !p.is_zero() {
                return Err(Error::UnrecognizedDiagram(format!(
                    "pairing (root #{i}, root #{j}) = {p}, expected 0, -1 or -2"
                )));
            }
        }
    }
    // Connected components by index.
    let mut seen = vec![false; k];
    let mut components = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    let mut out = Vec::new();
    for comp in &components {
        out.push(classify_one_component(comp, &adj, &doubled, roots)?);
    }
    // Deterministic component order: by lexicographically smallest root.
    out.sort_by(|a, b| {
        let ka = a.1.iter().min().expect("nonempty component");
        let kb = b.1.iter().min().expect("nonempty component");
        ka.cmp(kb)
    });
    Ok(out)
}

fn classify_one_component(
    comp: &[usize],
    adj: &[Vec<usize>],
    doubled: &HashSet<(usize, usize)>,
    roots: &[RootVec],
) -> Result<(TypeLabel, Vec<RootVec>)> {
    let k = comp.len();
    let degree = |i: usize| adj[i].len();
    let lex_min = |items: &[usize]| -> usize {
        *items
            .iter()
            .min_by(|&&a, &&b| roots[a].cmp(&roots[b]))
            .expect("nonempty candidate list")
    };
    let ordered = |indices: Vec<usize>| indices.into_iter().map(|i| roots[i].clone()).collect();
    let fail = |msg: String| Err(Error::UnrecognizedDiagram(msg));

    // A doubled bond is only legal as an isolated affine rank-one pair.
    if comp.iter().any(|&i| adj[i].iter().any(|&j| doubled.contains(&(i, j)))) {
        if k == 2
            && doubled.contains(&(comp[0], comp[1]))
            && doubled.contains(&(comp[1], comp[0]))
            && degree(comp[0]) == 1
            && degree(comp[1]) == 1
        {
            let start = lex_min(comp);
            let other = if start == comp[0] { comp[1] } else { comp[0] };
            return Ok((TypeLabel::new(Family::A, 1, true), ordered(vec![start, other])));
        }
        return fail("doubled bond inside a larger component".into());
    }

    let forks: Vec<usize> = comp.iter().copied().filter(|&i| degree(i) == 3).collect();
    if comp.iter().any(|&i| degree(i) > 3) {
        return fail("node of degree ≥ 4".into());
    }
    let edge_count: usize = comp.iter().map(|&i| degree(i)).sum::<usize>() / 2;

    if forks.is_empty() {
        if edge_count == k && k >= 3 {
            // Cycle: an affine A diagram. Start at the lex-smallest root and
            // walk toward its lex-smaller neighbour.
            let start = lex_min(comp);
            let next = lex_min(&adj[start]);
            let mut order = vec![start, next];
            while order.len() < k {
                let last = order[order.len() - 1];
                let prev = order[order.len() - 2];
                let step = *adj[last].iter().find(|&&x| x != prev).expect("cycle node");
                order.push(step);
            }
            return Ok((TypeLabel::new(Family::A, k - 1, true), ordered(order)));
        }
        if edge_count != k - 1 {
            return fail("disconnected or multi-edge pattern inside one component".into());
        }
        // Path: a finite A diagram (single node included).
        if k == 1 {
            return Ok((TypeLabel::new(Family::A, 1, false), ordered(vec![comp[0]])));
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&i| degree(i) == 1).collect();
        if ends.len() != 2 {
            return fail("path without exactly two endpoints".into());
        }
        let start = lex_min(&ends);
        let mut order = vec![start];
        let mut prev = usize::MAX;
        while order.len() < k {
            let last = order[order.len() - 1];
            let step = *adj[last].iter().find(|&&x| x != prev).expect("path node");
            prev = last;
            order.push(step);
        }
        return Ok((TypeLabel::new(Family::A, k, false), ordered(order)));
    }

    if forks.len() == 1 && edge_count == k - 1 {
        // Single fork: finite D when exactly two branches are single leaves.
        let fork = forks[0];
        let leaf_neighbours: Vec<usize> =
            adj[fork].iter().copied().filter(|&i| degree(i) == 1).collect();
        let required_leaves = if k == 4 { 3 } else { 2 };
        if leaf_neighbours.len() < required_leaves {
            return fail("fork whose branches are not two unit leaves".into());
        }
        let (tail_end, mut fork_leaves) = if k == 4 {
            // Star: any leaf can serve as the tail; pick the lex-smallest.
            let tail = lex_min(&leaf_neighbours);
            let rest: Vec<usize> =
                leaf_neighbours.iter().copied().filter(|&i| i != tail).collect();
            (tail, rest)
        } else {
            let tail_branch: Vec<usize> =
                adj[fork].iter().copied().filter(|&i| degree(i) != 1).collect();
            if tail_branch.len() != 1 {
                return fail("fork with more than one long branch".into());
            }
            // Walk the long branch away from the fork to its endpoint.
            let mut prev = fork;
            let mut cur = tail_branch[0];
            loop {
                let next = adj[cur].iter().copied().find(|&x| x != prev);
                match next {
                    Some(n) => {
                        prev = cur;
                        cur = n;
                    }
                    None => break,
                }
            }
            (cur, leaf_neighbours)
        };
        fork_leaves.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
        // Path from the tail end to the fork, then the two ordered leaves.
        let mut order = vec![tail_end];
        let mut prev = usize::MAX;
        while *order.last().expect("nonempty") != fork {
            let last = order[order.len() - 1];
            let step = *adj[last]
                .iter()
                .find(|&&x| x != prev && !fork_leaves.contains(&x))
                .expect("branch toward fork");
            prev = last;
            order.push(step);
        }
        order.extend(fork_leaves);
        return Ok((TypeLabel::new(Family::D, k, false), ordered(order)));
    }

    if forks.len() == 2 && edge_count == k - 1 {
        // Double fork: affine D. Both forks need two unit leaves.
        let mut fork_pair = forks.clone();
        fork_pair.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
        let leaves_of = |f: usize| -> Vec<usize> {
            let mut ls: Vec<usize> = adj[f].iter().copied().filter(|&i| degree(i) == 1).collect();
            ls.sort_by(|&a, &b| roots[a].cmp(&roots[b]));
            ls
        };
        let (near, far) = (fork_pair[0], fork_pair[1]);
        let (near_leaves, far_leaves) = (leaves_of(near), leaves_of(far));
        if near_leaves.len() != 2 || far_leaves.len() != 2 {
            return fail("double fork whose branches are not unit leaves".into());
        }
        let mut order = near_leaves;
        order.push(near);
        let mut prev = usize::MAX;
        while *order.last().expect("nonempty") != far {
            let last = order[order.len() - 1];
            let step = *adj[last]
                .iter()
                .find(|&&x| x != prev && degree(x) != 1)
                .expect("spine toward far fork");
            prev = last;
            order.push(step);
        }
        order.extend(far_leaves);
        return Ok((TypeLabel::new(Family::D, k - 1, true), ordered(order)));
    }

    fail("component is neither an A/D path, fork, cycle nor double fork".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d5_affine() -> CartanData {
        CartanData::load_builtin("D5~".parse().unwrap()).unwrap()
    }

    #[test]
    fn builtin_d5_affine_matches_reference_matrix() {
        let data = d5_affine();
        let expected = vec![
            vec![2, 0, -1, 0, 0, 0],
            vec![0, 2, -1, 0, 0, 0],
            vec![-1, -1, 2, -1, 0, 0],
            vec![0, 0, -1, 2, -1, -1],
            vec![0, 0, 0, -1, 2, 0],
            vec![0, 0, 0, -1, 0, 2],
        ];
        assert_eq!(data.matrix().to_rows(), expected);
        assert_eq!(data.marks().unwrap(), &[1, 1, 2, 2, 1, 1]);
        assert!(data.validate().is_valid());
    }

    #[test]
    fn all_builtins_validate_cleanly() {
        for label in ["A1", "A1~", "A2~", "A3", "A3~", "A5", "D4", "D4~", "D5", "D5~", "D6~"] {
            let data = CartanData::load_builtin(label.parse().unwrap()).unwrap();
            assert!(data.validate().is_valid(), "{label} failed validation");
            assert_eq!(data.is_affine(), label.ends_with('~'), "{label} affinity");
        }
    }

    #[test]
    fn perturbed_marks_are_rejected_with_kernel_violation() {
        let data = d5_affine();
        let m = data.matrix().clone();
        let report = validate_matrix(&m, Some(&[1, 1, 1, 2, 1, 1]));
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("not in the kernel")));
        assert!(CartanData::with_marks(m, vec![1, 1, 1, 2, 1, 1]).is_err());
    }

    #[test]
    fn length_ratio_three_for_mixed_bond() {
        // Rank-2 matrix with A[0][1]·A[1][0] = 3: length ratio 3 appears.
        let m = IntMat::from_rows(&[vec![2, -1], vec![-3, 2]]).unwrap();
        let data = CartanData::new(m).unwrap();
        let ratio = data.root_length(0) / data.root_length(1);
        let ratio = if ratio < Rational64::one() { ratio.recip() } else { ratio };
        assert_eq!(ratio, Rational64::from_integer(3));
        assert_eq!(data.bond_order(0, 1), BondOrder::Finite(6));
        // The Gram matrix it induces is symmetric.
        let g = data.bilinear_gram();
        assert_eq!(g[0][1], g[1][0]);
    }

    #[test]
    fn affine_rank_one_has_infinite_bond() {
        let data = CartanData::load_builtin("A1~".parse().unwrap()).unwrap();
        assert_eq!(data.bond_order(0, 1), BondOrder::Infinite);
        assert_eq!(data.marks().unwrap(), &[1, 1]);
    }

    #[test]
    fn simply_laced_bond_orders_follow_edges() {
        let data = d5_affine();
        for i in 0..6 {
            for j in 0..6 {
                if i == j {
                    continue;
                }
                let expected = if data.entry(i, j) == -1 { 3 } else { 2 };
                assert_eq!(data.bond_order(i, j), BondOrder::Finite(expected));
            }
        }
    }

    #[test]
    fn delta_is_the_marks_vector() {
        let data = d5_affine();
        assert_eq!(data.null_root().unwrap().coords(), &[1, 1, 2, 2, 1, 1]);
        let finite = CartanData::load_builtin("D5".parse().unwrap()).unwrap();
        assert!(matches!(finite.null_root(), Err(Error::NotAffine)));
    }

    #[test]
    fn classify_simple_roots_of_builtin_diagrams() {
        let data = d5_affine();
        // Finite simple roots α_1..α_5 form one D5 component.
        let roots: Vec<RootVec> = (1..6).map(|i| RootVec::simple(i, 6)).collect();
        let comps = classify_components(&roots, &data).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, TypeLabel::new(Family::D, 5, false));
        assert_eq!(comps[0].1.len(), 5);
        // All six simple roots close into the affine diagram.
        let all: Vec<RootVec> = (0..6).map(|i| RootVec::simple(i, 6)).collect();
        let comps = classify_components(&all, &data).unwrap();
        assert_eq!(comps[0].0, TypeLabel::new(Family::D, 5, true));
    }

    #[test]
    fn from_json_round_trip() {
        let text = r#"{"size": 2, "matrix": [[2, -2], [-2, 2]], "marks": [1, 1]}"#;
        let data = CartanData::from_json(text).unwrap();
        assert!(data.is_affine());
        assert!(CartanData::from_json(r#"{"size": 2, "matrix": [[2],[1]]}"#).is_err());
    }
}
