//! Python bindings: plane multigraphs, their medial curve diagrams, and the
//! cross-checked curve count.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mulink::{
    curve_count, generate, medial, mu_coloring, mu_nullity, mu_regions, mu_report, mu_trace,
    mu_tutte, simplify, Family, Flat, PlaneGraph, DEFAULT_COLORING_CAP, DEFAULT_TUTTE_EDGE_BUDGET,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A plane multigraph given by its rotation system.
#[pyclass(name = "PlaneGraph", frozen)]
struct PyPlaneGraph {
    inner: PlaneGraph,
    name: String,
}

#[pymethods]
impl PyPlaneGraph {
    /// Parse the `pg v1` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPlaneGraph {
            inner: PlaneGraph::parse(text).map_err(value_err)?,
            name: "parsed".into(),
        })
    }

    /// Generate a named family, e.g. `"cycle 4"`, `"grid 3 3"`,
    /// `"random-grid 3 3"` (use `seed=` for the latter).
    #[staticmethod]
    #[pyo3(signature = (spec, seed = 0))]
    fn generate(spec: &str, seed: u64) -> PyResult<Self> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        let (name, family) = Family::parse_spec(&tokens, seed).map_err(value_err)?;
        Ok(PyPlaneGraph {
            inner: generate(family).map_err(value_err)?,
            name,
        })
    }

    #[staticmethod]
    fn empty() -> Self {
        PyPlaneGraph {
            inner: PlaneGraph::empty(),
            name: "empty".into(),
        }
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn to_pg(&self) -> String {
        self.inner.to_pg_string()
    }

    fn mirror(&self) -> Self {
        PyPlaneGraph {
            inner: self.inner.mirror(),
            name: format!("mirror({})", self.name),
        }
    }

    fn disjoint_union(&self, other: &PyPlaneGraph) -> Self {
        PyPlaneGraph {
            inner: self.inner.disjoint_union(&other.inner),
            name: format!("{} + {}", self.name, other.name),
        }
    }

    /// The medial curve diagram.
    fn medial(&self) -> PyResult<PyFlat> {
        Ok(PyFlat {
            inner: medial(&self.inner).map_err(value_err)?,
        })
    }

    /// Cross-checked curve count: every method that fits the budgets must
    /// agree, else this raises.
    fn mu(&self) -> PyResult<usize> {
        let report = mu_report(&self.inner, &self.name, DEFAULT_TUTTE_EDGE_BUDGET, false)
            .map_err(value_err)?;
        if !report.agree {
            return Err(value_err(format!("methods disagree: {report:?}")));
        }
        Ok(report.mu_trace)
    }

    /// One method only: `"trace"`, `"nullity"`, `"regions"`, `"coloring"`,
    /// or `"tutte"`.
    fn mu_by(&self, method: &str) -> PyResult<usize> {
        let g = &self.inner;
        match method {
            "trace" => mu_trace(g).map_err(value_err),
            "nullity" => mu_nullity(g).map_err(value_err),
            "regions" => mu_regions(g).map_err(value_err),
            "coloring" => mu_coloring(g, DEFAULT_COLORING_CAP).map_err(value_err),
            "tutte" => mu_tutte(g, DEFAULT_TUTTE_EDGE_BUDGET).map_err(value_err),
            other => Err(value_err(format!("unknown method `{other}`"))),
        }
    }

    /// The full cross-check as a JSON object string.
    fn report_json(&self) -> PyResult<String> {
        let report = mu_report(&self.inner, &self.name, DEFAULT_TUTTE_EDGE_BUDGET, true)
            .map_err(value_err)?;
        serde_json::to_string(&report).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "PlaneGraph({}: V={}, E={})",
            self.name,
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A curve diagram: transverse crossings plus crossing-free circles.
#[pyclass(name = "Flat", frozen)]
struct PyFlat {
    inner: Flat,
}

#[pymethods]
impl PyFlat {
    #[getter]
    fn crossings(&self) -> usize {
        self.inner.crossings()
    }

    #[getter]
    fn free_circles(&self) -> usize {
        self.inner.free_circles()
    }

    #[getter]
    fn region_count(&self) -> usize {
        self.inner.region_count()
    }

    /// Number of closed curves.
    fn curve_count(&self) -> usize {
        curve_count(&self.inner)
    }

    /// Greedy local-move reduction. Returns `(flat, moves, fully_reduced)`.
    #[pyo3(signature = (budget = 10_000))]
    fn simplify(&self, budget: usize) -> (PyFlat, usize, bool) {
        let outcome = simplify(&self.inner, budget);
        (
            PyFlat { inner: outcome.flat },
            outcome.applied.len(),
            outcome.fully_reduced,
        )
    }

    fn __repr__(&self) -> String {
        format!(
            "Flat(crossings={}, free_circles={}, curves={})",
            self.inner.crossings(),
            self.inner.free_circles(),
            curve_count(&self.inner)
        )
    }
}

#[pymodule]
fn mulink_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlaneGraph>()?;
    m.add_class::<PyFlat>()?;
    Ok(())
}
