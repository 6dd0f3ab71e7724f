//! Python bindings for the `weylkit` extended affine Weyl group toolkit.
//!
//! Exposes the ambient Cartan data, group elements, the search analyses,
//! the fixture catalog, and the verification report. All arithmetic is
//! exact; matrices come back as nested `int` lists and coweights as exact
//! rational strings.
//!
//! Usage from Python:
//!
//!     from weylkit_py import Ambient, reproduce
//!     amb = Ambient("D5~")
//!     w = amb.eval("s1 s3 s2")
//!     assert w.act("a0") == [1, 1, 1, 1, 0, 0]
//!     assert reproduce("all")["summary"]["failed"] == 0

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyType;

use weylkit::{
    as_translation, assemble_normalizer, catalog, default_search_cap, enumerate_finite_roots,
    evaluate_word, orthogonal_subsystem, parse_aut_spec, parse_coweight_expr, parse_root_expr,
    parse_word, property_cases, quasi_translation_analysis, reflection_through, run_suite,
    stabilizer_search, translation_element, with_property_cases, CartanData, ElementOrder, Error,
    GroupElement, RootVec, TypeLabel, DEFAULT_KMAX, DEFAULT_MAX_LEN, DEFAULT_ROOT_CAP,
};

fn pyerr(e: Error) -> PyErr {
    match e {
        Error::ParseError(_) | Error::InvalidWord(_) | Error::InvalidSubsystem(_) => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    pythonize::pythonize(py, value).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// An ambient Cartan datum: a generalized Cartan matrix with its marks,
/// root enumeration, and word evaluation.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Ambient {
    data: Arc<CartanData>,
}

/// Accepts a root as either a coordinate list or an expression string.
fn parse_root_any(data: &Arc<CartanData>, root: &Bound<'_, PyAny>) -> PyResult<RootVec> {
    if let Ok(coords) = root.extract::<Vec<i64>>() {
        return Ok(RootVec::new(coords));
    }
    let expr: String = root.extract()?;
    parse_root_expr(&expr, data).map_err(pyerr)
}

impl Ambient {
    fn parse_root(&self, root: &Bound<'_, PyAny>) -> PyResult<RootVec> {
        parse_root_any(&self.data, root)
    }
}

#[pymethods]
impl Ambient {
    /// Load a builtin system by type label, e.g. "D5~", "A3~", "A1~", "D4".
    #[new]
    #[pyo3(signature = (label="D5~"))]
    fn new(label: &str) -> PyResult<Self> {
        let label: TypeLabel = label.parse().map_err(pyerr)?;
        let data = CartanData::load_builtin(label).map_err(pyerr)?;
        Ok(Self { data: Arc::new(data) })
    }

    /// Build from a JSON description {"size": n, "matrix": [[..]], "marks": [..]}.
    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let data = CartanData::from_json(text).map_err(pyerr)?;
        Ok(Self { data: Arc::new(data) })
    }

    fn size(&self) -> usize {
        self.data.size()
    }

    fn rank(&self) -> usize {
        self.data.rank()
    }

    fn is_affine(&self) -> bool {
        self.data.is_affine()
    }

    fn label(&self) -> Option<String> {
        self.data.label().map(|l| l.to_string())
    }

    fn matrix(&self) -> Vec<Vec<i64>> {
        self.data.matrix().to_rows()
    }

    fn marks(&self) -> Option<Vec<i64>> {
        self.data.marks().map(<[i64]>::to_vec)
    }

    /// Coordinates of the null root δ (affine systems only).
    fn null_root(&self) -> PyResult<Vec<i64>> {
        Ok(self.data.null_root().map_err(pyerr)?.coords().to_vec())
    }

    /// All finite real roots, as coordinate vectors over the simple roots.
    fn finite_roots(&self) -> PyResult<Vec<Vec<i64>>> {
        let roots = enumerate_finite_roots(&self.data, DEFAULT_ROOT_CAP).map_err(pyerr)?;
        Ok(roots.iter().map(|r| r.coords().to_vec()).collect())
    }

    /// The identity element.
    fn identity(&self) -> Element {
        Element { inner: GroupElement::identity(&self.data) }
    }

    /// Evaluate a generator word such as "s1 s3 s2" or "sigma12 s2";
    /// the rightmost token acts first.
    fn eval(&self, word: &str) -> PyResult<Element> {
        let tokens = parse_word(word, &self.data).map_err(pyerr)?;
        let inner = evaluate_word(&tokens, &self.data).map_err(pyerr)?;
        Ok(Element { inner })
    }

    /// The reflection through a real root (expression or coordinate list).
    fn reflection(&self, root: &Bound<'_, PyAny>) -> PyResult<Element> {
        let r = self.parse_root(root)?;
        Ok(Element { inner: reflection_through(&r, &self.data).map_err(pyerr)? })
    }

    /// The lattice translation by a coweight expression such as "h1 - h2".
    fn translation(&self, coweight: &str) -> PyResult<Element> {
        let mu = parse_coweight_expr(coweight, &self.data).map_err(pyerr)?;
        Ok(Element { inner: translation_element(&mu, &self.data).map_err(pyerr)? })
    }

    /// Parse a root expression into coordinates.
    fn root(&self, expr: &str) -> PyResult<Vec<i64>> {
        Ok(parse_root_expr(expr, &self.data).map_err(pyerr)?.coords().to_vec())
    }

    /// Parse a coweight expression into exact rational coordinate strings.
    fn coweight(&self, expr: &str) -> PyResult<Vec<String>> {
        let mu = parse_coweight_expr(expr, &self.data).map_err(pyerr)?;
        Ok(mu.coords().iter().map(ToString::to_string).collect())
    }

    /// Orthogonal (centralizer-supporting) subsystem of seed roots,
    /// as a list of component dictionaries.
    fn centralizer<'py>(
        &self,
        py: Python<'py>,
        seeds: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let roots: Vec<RootVec> =
            seeds.iter().map(|s| self.parse_root(s)).collect::<PyResult<_>>()?;
        let components = orthogonal_subsystem(&roots, &self.data).map_err(pyerr)?;
        to_py(py, &components)
    }

    /// Bounded setwise-stabilizer search over a target root list: one
    /// shortest witness per induced permutation.
    #[pyo3(signature = (targets, auts="none", max_len=DEFAULT_MAX_LEN))]
    fn stabilize<'py>(
        &self,
        py: Python<'py>,
        targets: Vec<Bound<'py, PyAny>>,
        auts: &str,
        max_len: usize,
    ) -> PyResult<Bound<'py, PyAny>> {
        let roots: Vec<RootVec> =
            targets.iter().map(|t| self.parse_root(t)).collect::<PyResult<_>>()?;
        let aut_elems = parse_aut_spec(auts, &self.data).map_err(pyerr)?;
        let hits = stabilizer_search(&roots, &aut_elems, max_len, &self.data, default_search_cap())
            .map_err(pyerr)?;
        to_py(py, &hits)
    }

    fn __repr__(&self) -> String {
        match self.data.label() {
            Some(l) => format!("Ambient({l})"),
            None => format!("Ambient(custom, size {})", self.data.size()),
        }
    }
}

/// An element of the extended affine Weyl group: an exact integer matrix,
/// with the generator word it was built from when one is known.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Element {
    inner: GroupElement,
}

#[pymethods]
impl Element {
    fn matrix(&self) -> Vec<Vec<i64>> {
        self.inner.matrix().to_rows()
    }

    /// The generator word, when the element carries one.
    fn word(&self) -> Option<String> {
        self.inner.word().map(weylkit::word_string)
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    /// The order of the element, or None when no power up to `cap` is the
    /// identity (translations have infinite order).
    #[pyo3(signature = (cap=1024))]
    fn order(&self, cap: u32) -> Option<u32> {
        match self.inner.order(cap) {
            ElementOrder::Finite(k) => Some(k),
            ElementOrder::ExceedsCap(_) => None,
        }
    }

    fn inverse(&self) -> Self {
        Self { inner: self.inner.inverse() }
    }

    fn pow(&self, k: i64) -> Self {
        Self { inner: self.inner.pow(k) }
    }

    /// Apply to a root (expression or coordinate list); returns coordinates.
    fn act(&self, root: &Bound<'_, PyAny>) -> PyResult<Vec<i64>> {
        let r = parse_root_any(self.inner.ambient(), root)?;
        Ok(self.inner.act(&r).coords().to_vec())
    }

    /// Apply the contragredient action to a coweight expression; returns
    /// exact rational coordinate strings.
    fn act_coweight(&self, coweight: &str) -> PyResult<Vec<String>> {
        let mu = parse_coweight_expr(coweight, self.inner.ambient()).map_err(pyerr)?;
        let image = self.inner.act_coweight(&mu).map_err(pyerr)?;
        Ok(image.coords().iter().map(ToString::to_string).collect())
    }

    /// The translation vector when this element is a lattice translation,
    /// as exact rational strings; None otherwise.
    fn as_translation(&self) -> Option<Vec<String>> {
        as_translation(&self.inner)
            .map(|mu| mu.coords().iter().map(ToString::to_string).collect())
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self { inner: self.inner.mul(&other.inner) }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        match self.inner.word() {
            Some(w) if !w.is_empty() => format!("Element({})", weylkit::word_string(w)),
            Some(_) => "Element(identity)".into(),
            None => "Element(matrix)".into(),
        }
    }
}

/// Probe the powers of a word for lattice translations and report its
/// action on the named subsystems (`geb` = gamma,eta,beta, or any subset,
/// or `none`).
#[pyfunction]
#[pyo3(signature = (word, subsystems="geb", k_max=DEFAULT_KMAX))]
fn analyze<'py>(
    py: Python<'py>,
    word: &str,
    subsystems: &str,
    k_max: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let geb = weylkit::geb_system().map_err(pyerr)?;
    let tokens = parse_word(word, &geb.ambient).map_err(pyerr)?;
    let g = evaluate_word(&tokens, &geb.ambient).map_err(pyerr)?;
    let mut subs = Vec::new();
    for name in subsystems.split(',') {
        match name.trim() {
            "geb" => subs.extend([&geb.gamma, &geb.eta, &geb.beta]),
            "gamma" => subs.push(&geb.gamma),
            "eta" => subs.push(&geb.eta),
            "beta" => subs.push(&geb.beta),
            "none" | "" => {}
            other => {
                return Err(PyValueError::new_err(format!("unknown subsystem {other:?}")));
            }
        }
    }
    let report = quasi_translation_analysis(&g, &subs, k_max);
    to_py(py, &report)
}

/// Assemble and verify the normalizer of a named subsystem (`gamma`,
/// `eta`, or `beta`) as commuting generator blocks.
#[pyfunction]
#[pyo3(signature = (subsystem, auts="cyc4", max_len=DEFAULT_MAX_LEN))]
fn normalizer<'py>(
    py: Python<'py>,
    subsystem: &str,
    auts: &str,
    max_len: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let (sub, ambient) = weylkit::named_subsystem(subsystem).map_err(pyerr)?;
    let aut_elems = parse_aut_spec(auts, &ambient).map_err(pyerr)?;
    let pres = assemble_normalizer(&sub, &aut_elems, max_len, &ambient, default_search_cap())
        .map_err(pyerr)?;
    to_py(py, &pres)
}

/// Run a verification suite ("all", "geb", "order2", "order4",
/// "directions", "examples"), optionally appending seeded randomized
/// property batches, and return the report as a dictionary.
#[pyfunction]
#[pyo3(signature = (suite="all", seeds=None, cases=1000))]
fn reproduce<'py>(
    py: Python<'py>,
    suite: &str,
    seeds: Option<Vec<u64>>,
    cases: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let mut report = run_suite(suite).map_err(pyerr)?;
    if let Some(seeds) = seeds {
        if !seeds.is_empty() {
            report =
                with_property_cases(report, property_cases(&seeds, cases).map_err(pyerr)?);
        }
    }
    to_py(py, &report)
}

/// The named elements of the builtin fixture catalog, with their words.
#[pyfunction]
fn fixtures<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    let entries = catalog().map_err(pyerr)?;
    to_py(py, &entries)
}

/// Names of the runnable verification suites.
#[pyfunction]
fn suite_names() -> Vec<String> {
    weylkit::suite_names().iter().map(ToString::to_string).collect()
}

#[pymodule]
fn weylkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ambient>()?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(normalizer, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    Ok(())
}
