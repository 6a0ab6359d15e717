//! Python bindings for the hyperlie toolkit.
//!
//! The module mirrors the library surface: catalog access, the two text
//! formats, the central-extension and semidirect constructions, and a
//! [`PyAlgebra`] class wrapping a hypercomplex Lie algebra with its
//! validity checks, Obata curvature, and holonomy summary.
//!
//! Rationals cross the boundary as strings like `"2"` or `"-1/4"`; vectors
//! are lists of such strings in basis coordinates. Basis indices in the
//! Python API are 1-based, matching the text formats.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use hyperlie_core::construct::{MuForm, Representation};
use hyperlie_core::dsl::{self, AlgebraSpec};
use hyperlie_core::rational::{format_rational, parse_rational, Rational};
use hyperlie_core::report::{self, AnalyzeOptions};
use hyperlie_core::{construct, holonomy, hyper, obata, Matrix};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_vector(values: &[String], dim: usize) -> PyResult<Vec<Rational>> {
    if values.len() != dim {
        return Err(PyValueError::new_err(format!(
            "expected {dim} coordinates, got {}",
            values.len()
        )));
    }
    values
        .iter()
        .map(|s| parse_rational(s).map_err(|e| value_error(format!("bad rational '{s}': {e}"))))
        .collect()
}

fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn check_index(label: &str, i: usize, dim: usize) -> PyResult<usize> {
    if i == 0 || i > dim {
        return Err(PyValueError::new_err(format!(
            "{label} index {i} out of range 1..={dim}"
        )));
    }
    Ok(i - 1)
}

/// A Lie algebra with an integrable quaternionic triple of complex
/// structures. Instances come from the catalog, the parsers, or the
/// construction functions; all arithmetic behind the methods is exact.
#[pyclass(name = "HypercomplexLieAlgebra", frozen)]
struct PyAlgebra {
    inner: hyper::HypercomplexLieAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// Human-readable name carried through parsing and construction.
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    /// Dimension of the underlying Lie algebra.
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __repr__(&self) -> String {
        format!(
            "HypercomplexLieAlgebra(name={:?}, dim={})",
            self.inner.name,
            self.inner.dim()
        )
    }

    /// Every violated axiom as a message string; empty means valid.
    fn validate(&self) -> Vec<String> {
        self.inner
            .validate()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    /// True when Jacobi, the quaternion relations, and integrability all hold.
    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    /// Nilpotency step of the Lie algebra, or None if not nilpotent.
    fn nilpotency_step(&self) -> Option<usize> {
        self.inner.algebra.nilpotency_step().step()
    }

    /// Steps of the ascending series of each of the three structures, in
    /// order; None marks a series that stalls below the whole algebra.
    fn j_steps(&self) -> Vec<Option<usize>> {
        let g = &self.inner.algebra;
        (1..=3)
            .map(|alpha| hyper::j_nilpotency_step(g, self.inner.structure.j(alpha)).step())
            .collect()
    }

    /// Lie bracket of two coordinate vectors.
    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        let xv = parse_vector(&x, n)?;
        let yv = parse_vector(&y, n)?;
        let z = self.inner.algebra.bracket(&xv, &yv).map_err(value_error)?;
        Ok(format_vector(&z))
    }

    /// Applies the complex structure J_alpha (alpha in 1..=3) to a vector.
    fn j_apply(&self, alpha: usize, x: Vec<String>) -> PyResult<Vec<String>> {
        if !(1..=3).contains(&alpha) {
            return Err(PyValueError::new_err(format!(
                "structure index {alpha} out of range 1..=3"
            )));
        }
        let xv = parse_vector(&x, self.inner.dim())?;
        Ok(format_vector(&self.inner.structure.j(alpha).apply(&xv)))
    }

    /// True when the Obata curvature vanishes identically.
    fn is_flat(&self) -> PyResult<bool> {
        obata::is_flat(&self.inner).map_err(value_error)
    }

    /// Curvature value R(e_i, e_j) e_k in basis coordinates, 1-based.
    fn curvature_value(&self, i: usize, j: usize, k: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        let i = check_index("basis", i, n)?;
        let j = check_index("basis", j, n)?;
        let k = check_index("basis", k, n)?;
        let conn = obata::obata_connection(&self.inner).map_err(value_error)?;
        let curv = obata::curvature(&self.inner.algebra, &conn);
        let v = curv.get(i, j).apply(&self.inner.algebra.basis_vector(k));
        Ok(format_vector(&v))
    }

    /// Dimensions of the H-solvable series, starting from the whole algebra.
    fn h_series_dims(&self) -> Vec<usize> {
        let g = &self.inner.algebra;
        hyper::h_solvable_series(g, &self.inner.structure, g.dim() + 1)
            .iter()
            .map(|s| s.dim())
            .collect()
    }

    /// Length of the H-solvable series, or None if it never reaches zero.
    fn h_solvability_step(&self) -> Option<usize> {
        hyper::h_solvability_step(&self.inner.algebra, &self.inner.structure).step()
    }

    /// True when all three structures map the commutator ideal into the
    /// center.
    fn j_commutator_central(&self) -> PyResult<bool> {
        hyper::j_commutator_central(&self.inner).map_err(value_error)
    }

    /// Holonomy summary as a dict: dim, abelian, trivial_product, in_sl_n_h,
    /// and the provenance strings of the generating curvature operators.
    fn holonomy<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let hol = holonomy::holonomy_algebra(&self.inner).map_err(value_error)?;
        let d = PyDict::new(py);
        d.set_item("dim", hol.dim())?;
        d.set_item("abelian", hol.is_abelian())?;
        d.set_item("trivial_product", hol.has_trivial_product())?;
        d.set_item("in_sl_n_h", hol.in_sl_n_h(&self.inner.structure))?;
        let names: Vec<String> = hol.generators().iter().map(|(_, s)| s.clone()).collect();
        d.set_item("generators", names)?;
        Ok(d)
    }

    /// Full analysis as the same JSON document the command line emits.
    #[pyo3(signature = (permutation = 1))]
    fn analyze_json(&self, permutation: usize) -> PyResult<String> {
        let perm = obata::CyclicPermutation::from_index(permutation).map_err(value_error)?;
        let opts = AnalyzeOptions {
            permutation: perm,
            max_iter: None,
        };
        Ok(report::analyze(&self.inner, &opts).to_json())
    }

    /// Structure equations and J tables in the text format.
    fn to_dsl(&self) -> String {
        AlgebraSpec::from_hypercomplex(&self.inner).to_dsl()
    }

    /// Structure equations and J tables in the JSON format.
    fn to_json(&self) -> String {
        AlgebraSpec::from_hypercomplex(&self.inner).to_json()
    }
}

impl PyAlgebra {
    fn wrap(inner: hyper::HypercomplexLieAlgebra) -> PyAlgebra {
        PyAlgebra { inner }
    }
}

/// Names of the built-in examples, in catalog order.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    hyperlie_core::catalog::names()
}

/// Looks up a built-in example by name.
#[pyfunction]
fn catalog(name: &str) -> PyResult<PyAlgebra> {
    hyperlie_core::catalog::entry(name)
        .map(PyAlgebra::wrap)
        .map_err(value_error)
}

/// Parses the structure-equation text format; the input must carry all
/// three J tables.
#[pyfunction]
fn parse_dsl(text: &str) -> PyResult<PyAlgebra> {
    let spec = dsl::parse_dsl(text).map_err(value_error)?;
    spec.to_hypercomplex().map(PyAlgebra::wrap).map_err(value_error)
}

/// Parses the JSON format; the input must carry all three J tables.
#[pyfunction]
fn parse_json(text: &str) -> PyResult<PyAlgebra> {
    let spec = dsl::parse_json(text).map_err(value_error)?;
    spec.to_hypercomplex().map(PyAlgebra::wrap).map_err(value_error)
}

/// Central extension of `base` by a 2-cocycle. Each term is
/// (i, j, value) with 1-based base indices i < j and a fiber vector of
/// length `fiber_dim`; omitted pairs are zero. Fails if the data is not
/// closed, not integrable, or not annihilated where required.
#[pyfunction]
fn mu_extension(
    base: PyRef<'_, PyAlgebra>,
    fiber_dim: usize,
    terms: Vec<(usize, usize, Vec<String>)>,
) -> PyResult<PyAlgebra> {
    let n = base.inner.dim();
    let mut mu = MuForm::new(n, fiber_dim);
    for (i, j, value) in &terms {
        let i = check_index("base", *i, n)?;
        let j = check_index("base", *j, n)?;
        if i == j {
            return Err(PyValueError::new_err(format!(
                "term ({}, {}) repeats an index",
                i + 1,
                j + 1
            )));
        }
        mu.set(i, j, parse_vector(value, fiber_dim)?);
    }
    construct::mu_extension(&base.inner, &mu)
        .map(PyAlgebra::wrap)
        .map_err(value_error)
}

/// Semidirect product of `base` with a flat fiber. Each generator is
/// (index, matrix) with a 1-based base index and a fiber_dim x fiber_dim
/// matrix of rational strings; omitted indices act by zero. Fails if the
/// data is not a representation commuting with the fiber structures.
#[pyfunction]
fn semidirect(
    base: PyRef<'_, PyAlgebra>,
    fiber_dim: usize,
    generators: Vec<(usize, Vec<Vec<String>>)>,
) -> PyResult<PyAlgebra> {
    let n = base.inner.dim();
    let mut rho = Representation::zero(n, fiber_dim);
    for (index, rows) in &generators {
        let i = check_index("base", *index, n)?;
        if rows.len() != fiber_dim {
            return Err(PyValueError::new_err(format!(
                "generator {index}: expected {fiber_dim} rows, got {}",
                rows.len()
            )));
        }
        let mut parsed = Vec::with_capacity(fiber_dim);
        for row in rows {
            parsed.push(parse_vector(row, fiber_dim)?);
        }
        rho.set_generator(i, Matrix::from_rows(parsed, fiber_dim));
    }
    construct::semidirect(&base.inner, &rho)
        .map(PyAlgebra::wrap)
        .map_err(value_error)
}

/// Exact-arithmetic analysis of hypercomplex nilpotent Lie algebras.
#[pymodule]
fn hyperlie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(parse_dsl, m)?)?;
    m.add_function(wrap_pyfunction!(parse_json, m)?)?;
    m.add_function(wrap_pyfunction!(mu_extension, m)?)?;
    m.add_function(wrap_pyfunction!(semidirect, m)?)?;
    Ok(())
}
