//! Python bindings. Exact rationals cross the boundary as
//! `fractions.Fraction`.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::sync::PyOnceLock;
use pyo3::types::{PyDict, PyTuple};

use siegel_core::eulerhodge as eh;
use siegel_core::hodgering::{self, GradedQuotientRing};
use siegel_core::lagrangian as lg;
use siegel_core::level;
use siegel_core::output::{render_table, table_rows, TableFormat};
use siegel_core::strata;
use siegel_core::symlambda;
use siegel_core::verify::{run_suite, Suite};
use siegel_core::{Error, Rational};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    static FRACTION: PyOnceLock<Py<PyAny>> = PyOnceLock::new();
    let cls = FRACTION.get_or_try_init(py, || {
        Ok::<_, PyErr>(py.import("fractions")?.getattr("Fraction")?.unbind())
    })?;
    cls.bind(py).call1((q.to_string(),))
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?.to_str()?.parse().map_err(err)
}

/// Polynomial in v_1..v_g with deg v_i = i.
#[pyclass(name = "LambdaPoly", module = "siegel", frozen)]
struct PyLambdaPoly(symlambda::LambdaPoly);

#[pymethods]
impl PyLambdaPoly {
    /// Builds from a mapping {exponent tuple: coefficient}.
    #[new]
    fn new(genus: usize, terms: BTreeMap<Vec<u32>, Bound<'_, PyAny>>) -> PyResult<Self> {
        let mut p = symlambda::LambdaPoly::zero(genus);
        for (e, c) in terms {
            if e.len() != genus {
                return Err(err(Error::ExponentLength {
                    expected: genus,
                    got: e.len(),
                }));
            }
            p = p
                .add(&symlambda::LambdaPoly::monomial(e, to_rational(&c)?))
                .map_err(err)?;
        }
        Ok(PyLambdaPoly(p))
    }

    #[staticmethod]
    fn generator(genus: usize, k: i64) -> Self {
        PyLambdaPoly(symlambda::LambdaPoly::generator(genus, k))
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (e, c) in self.0.terms() {
            d.set_item(PyTuple::new(py, e)?, fraction(py, c)?)?;
        }
        Ok(d)
    }

    fn coeff<'py>(&self, py: Python<'py>, exp: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.coeff(&exp))
    }

    fn homogeneous_degree(&self) -> Option<u32> {
        self.0.homogeneous_degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(PyLambdaPoly).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(PyLambdaPoly).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(PyLambdaPoly).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LambdaPoly({})", self.0)
    }
}

/// Q[v_1..v_g] modulo the Mumford relations.
#[pyclass(name = "QuotientRing", module = "siegel", frozen)]
struct PyQuotientRing(Arc<GradedQuotientRing>);

#[pymethods]
impl PyQuotientRing {
    #[new]
    fn new(g: usize) -> PyResult<Self> {
        hodgering::quotient_ring(g).map(PyQuotientRing).map_err(err)
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    fn graded_dimensions(&self) -> Vec<usize> {
        self.0.graded_dimensions()
    }

    fn total_dimension(&self) -> usize {
        self.0.total_dimension()
    }

    fn basis(&self, degree: u32) -> Vec<Vec<u32>> {
        self.0
            .piece(degree)
            .map(|p| p.basis().to_vec())
            .unwrap_or_default()
    }

    fn normal_form(&self, p: &PyLambdaPoly) -> PyResult<PyLambdaPoly> {
        self.0.normal_form(&p.0).map(PyLambdaPoly).map_err(err)
    }

    fn top_coefficient<'py>(&self, py: Python<'py>, p: &PyLambdaPoly) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.top_coefficient(&p.0).map_err(err)?)
    }

    fn square_vanishes(&self, k: usize) -> PyResult<bool> {
        hodgering::mumford_square_vanishing(&self.0, k).map_err(err)
    }

    fn ctop_identity_holds(&self) -> PyResult<bool> {
        hodgering::verify_ctop_identity(&self.0).map_err(err)
    }
}

/// Integration on the Lagrangian Grassmannian LG_g.
#[pyclass(name = "LGIntegrator", module = "siegel", frozen)]
struct PyLGIntegrator(Arc<lg::LGIntegrator>);

#[pymethods]
impl PyLGIntegrator {
    #[new]
    fn new(g: usize) -> PyResult<Self> {
        lg::lg_integrator(g).map(PyLGIntegrator).map_err(err)
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    fn integrate<'py>(&self, py: Python<'py>, exp: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.integrate(&exp).map_err(err)?)
    }

    fn integrate_poly<'py>(&self, py: Python<'py>, p: &PyLambdaPoly) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.integrate_poly(&p.0).map_err(err)?)
    }
}

/// Divisibility chain d_1 | ... | d_g.
#[pyclass(name = "PolarizationType", module = "siegel", frozen)]
struct PyPolarizationType(level::PolarizationType);

#[pymethods]
impl PyPolarizationType {
    #[new]
    fn new(degrees: Vec<i64>) -> PyResult<Self> {
        level::PolarizationType::new(&degrees)
            .map(PyPolarizationType)
            .map_err(err)
    }

    #[getter]
    fn degrees(&self) -> Vec<u64> {
        self.0.degrees().to_vec()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.0.genus()
    }

    fn degree_ratio<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &level::degree_ratio(&self.0))
    }

    fn chi<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &level::chi_level(&self.0).map_err(err)?)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Dual graph of a stable curve.
#[pyclass(name = "StableGraph", module = "siegel", frozen)]
struct PyStableGraph(strata::StableGraph);

#[pymethods]
impl PyStableGraph {
    #[new]
    #[pyo3(signature = (genera, edges, legs = Vec::new()))]
    fn new(genera: Vec<u32>, edges: Vec<(usize, usize)>, legs: Vec<(usize, u32)>) -> PyResult<Self> {
        strata::StableGraph::new(genera, edges, legs)
            .map(PyStableGraph)
            .map_err(err)
    }

    #[getter]
    fn genera(&self) -> Vec<u32> {
        self.0.genera().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn betti(&self) -> usize {
        self.0.betti()
    }

    fn total_genus(&self) -> u32 {
        self.0.total_genus()
    }

    fn in_z(&self) -> bool {
        self.0.in_z()
    }

    fn extract_partition(&self) -> PyResult<Vec<u32>> {
        self.0.extract_partition().map_err(err)
    }

    fn classify_edge(&self, edge: usize) -> PyResult<&'static str> {
        self.0.classify_edge(edge).map(|t| t.name()).map_err(err)
    }

    /// Contracted graph; stability is not re-imposed.
    fn contract_edge(&self, edge: usize) -> PyResult<Self> {
        self.0.contract_edge(edge).map(PyStableGraph).map_err(err)
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

#[pyfunction]
fn bernoulli(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &siegel_core::bernoulli(n))
}

#[pyfunction]
fn zeta_neg(py: Python<'_>, g: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &siegel_core::zeta_neg(g).map_err(err)?)
}

/// χ(A_g) by route "product", "recursive" or "gaussbonnet".
#[pyfunction]
#[pyo3(signature = (g, route = "product"))]
fn chi<'py>(py: Python<'py>, g: usize, route: &str) -> PyResult<Bound<'py, PyAny>> {
    let v = match route {
        "product" => eh::chi_product(g),
        "recursive" => eh::chi_recursive(g),
        "gaussbonnet" => eh::chi_gaussbonnet(g),
        _ => return Err(PyValueError::new_err(format!("unknown route {route:?}"))),
    };
    fraction(py, &v.map_err(err)?)
}

#[pyfunction]
fn tau(py: Python<'_>, g: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &eh::tau(g).map_err(err)?)
}

#[pyfunction]
fn proportionality_k(py: Python<'_>, g: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &eh::proportionality_k(g).map_err(err)?)
}

#[pyfunction]
fn hodge_triple_integral(py: Python<'_>, g: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &eh::hodge_triple_integral(g).map_err(err)?)
}

/// ∫ over the toroidal compactification of λ_1^{a_1}...λ_g^{a_g}.
#[pyfunction]
fn integrate_abar(py: Python<'_>, g: usize, exp: Vec<u32>) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &eh::integrate_abar(g, &exp).map_err(err)?)
}

#[pyfunction]
fn lg_integrate(py: Python<'_>, g: usize, exp: Vec<u32>) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &lg::lg_integrate(g, &exp).map_err(err)?)
}

#[pyfunction]
fn lg_betti(g: usize) -> PyResult<Vec<u64>> {
    lg::lg_betti(g).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, dualize = false))]
fn ctop_sym2(g: usize, dualize: bool) -> PyResult<PyLambdaPoly> {
    symlambda::ctop_sym2(g, dualize).map(PyLambdaPoly).map_err(err)
}

#[pyfunction]
fn giambelli_det(g: usize) -> PyResult<PyLambdaPoly> {
    symlambda::giambelli_det(g).map(PyLambdaPoly).map_err(err)
}

#[pyfunction]
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    strata::partitions_of(n)
}

#[pyfunction]
fn xi_domain_dimension(g: u32, mu: Vec<u32>) -> PyResult<i64> {
    strata::xi_domain_dimension(g, &mu).map_err(err)
}

/// Outcome counts per edge type, plus the refining root type.
#[pyfunction]
fn verify_closure_lemma(py: Python<'_>, g: u32) -> PyResult<Bound<'_, PyDict>> {
    let r = strata::verify_closure_lemma(g).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("g", r.g)?;
    d.set_item("graphs_checked", r.graphs_checked)?;
    d.set_item("contractions_checked", r.contractions_checked)?;
    let outcomes = PyDict::new(py);
    for (t, c) in &r.outcomes {
        let row = PyDict::new(py);
        row.set_item("same", c.same)?;
        row.set_item("finer", c.finer)?;
        row.set_item("outside", c.outside)?;
        row.set_item("other", c.other)?;
        outcomes.set_item(t.name(), row)?;
    }
    d.set_item("outcomes", outcomes)?;
    d.set_item("refining_root_type", r.refining_root_type.map(|t| t.name()))?;
    d.set_item("matches_listed_order", r.matches_listed_order)?;
    d.set_item("violations", r.violations)?;
    Ok(d)
}

/// Runs a named suite; returns (passed, report text).
#[pyfunction]
#[pyo3(signature = (suite, gmax = None))]
fn verify(suite: &str, gmax: Option<usize>) -> PyResult<(bool, String)> {
    let s: Suite = suite.parse().map_err(err)?;
    let reports = run_suite(s, gmax).map_err(err)?;
    let text = reports.iter().map(|r| r.to_string()).collect::<String>();
    Ok((reports.iter().all(|r| r.passed()), text))
}

#[pyfunction]
#[pyo3(signature = (gmax, format = "md"))]
fn table(gmax: usize, format: &str) -> PyResult<String> {
    let f: TableFormat = format.parse().map_err(err)?;
    Ok(render_table(&table_rows(gmax).map_err(err)?, f))
}

#[pymodule]
fn siegel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLambdaPoly>()?;
    m.add_class::<PyQuotientRing>()?;
    m.add_class::<PyLGIntegrator>()?;
    m.add_class::<PyPolarizationType>()?;
    m.add_class::<PyStableGraph>()?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_neg, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(proportionality_k, m)?)?;
    m.add_function(wrap_pyfunction!(hodge_triple_integral, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_abar, m)?)?;
    m.add_function(wrap_pyfunction!(lg_integrate, m)?)?;
    m.add_function(wrap_pyfunction!(lg_betti, m)?)?;
    m.add_function(wrap_pyfunction!(ctop_sym2, m)?)?;
    m.add_function(wrap_pyfunction!(giambelli_det, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(xi_domain_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(verify_closure_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
