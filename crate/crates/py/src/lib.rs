//! Python bindings. Polynomials cross the boundary as their canonical text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use num_rational::BigRational;
use pseudoknot::moves::{fuzz as run_fuzz, FuzzConfig, MoveKind, Recipe};
use pseudoknot::pseudo::{self, BaseInvariant, TangleSet};
use pseudoknot::{alexander, bracket, catalog, Pseudodiagram};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn base(name: &str) -> PyResult<BaseInvariant> {
    BaseInvariant::parse(name).map_err(err)
}

/// An oriented pseudodiagram in extended PD notation.
#[pyclass(frozen, name = "Diagram", module = "pseudoknot")]
pub struct Diagram {
    inner: Pseudodiagram,
}

#[pymethods]
impl Diagram {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: Pseudodiagram::parse(text).map_err(err)? })
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        Ok(Self { inner: catalog::catalog_get(name).map_err(err)?.diagram.clone() })
    }

    #[staticmethod]
    fn braid(strands: usize, word: Vec<i32>) -> PyResult<Self> {
        Ok(Self { inner: catalog::braid_closure(strands, &word).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_string)
    }

    #[getter]
    fn num_sites(&self) -> usize {
        self.inner.num_sites()
    }

    #[getter]
    fn num_components(&self) -> usize {
        self.inner.num_components()
    }

    #[getter]
    fn precrossings(&self) -> Vec<usize> {
        self.inner.precrossings()
    }

    fn writhe(&self) -> PyResult<i32> {
        self.inner.writhe().map_err(err)
    }

    fn mirror(&self) -> Self {
        Self { inner: self.inner.mirror() }
    }

    fn connected_sum(&self, edge: u32, other: &Diagram, other_edge: u32) -> PyResult<Self> {
        Ok(Self { inner: self.inner.connected_sum(edge, &other.inner, other_edge).map_err(err)? })
    }

    /// Replaces the precrossing at `site` by a tangle (`+1`, `-1`, `smooth`
    /// or a twist vector such as `[2,1]`).
    fn insert(&self, site: usize, tangle: &str) -> PyResult<Self> {
        let t = pseudoknot::tangle::Tangle::parse(tangle).map_err(err)?;
        Ok(Self { inner: pseudo::insert(&self.inner, site, &t).map_err(err)? })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        match self.inner.name() {
            Some(n) => format!("Diagram({n}, {} sites)", self.inner.num_sites()),
            None => format!("Diagram({} sites)", self.inner.num_sites()),
        }
    }

    fn __eq__(&self, other: &Diagram) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction(name = "bracket")]
fn kauffman_bracket(d: &Diagram) -> PyResult<String> {
    Ok(bracket::bracket(&d.inner).map_err(err)?.to_string())
}

#[pyfunction]
fn jones(d: &Diagram) -> PyResult<String> {
    Ok(bracket::jones(&d.inner).map_err(err)?.to_string())
}

#[pyfunction(name = "alexander")]
fn alexander_poly(d: &Diagram) -> PyResult<String> {
    Ok(alexander::alexander(&d.inner).map_err(err)?.to_string())
}

/// Pseudoknot invariant of a recipe such as `"+1:1/2,-1:1/2"`; `hat`
/// skips the coefficient relation check.
#[pyfunction]
#[pyo3(signature = (d, base_invariant, tangles, hat = false))]
fn invariant(d: &Diagram, base_invariant: &str, tangles: &str, hat: bool) -> PyResult<String> {
    let b = base(base_invariant)?;
    let ts = TangleSet::parse(tangles, b.var()).map_err(err)?;
    let v = if hat { pseudo::hat_invariant(&d.inner, &ts, b) } else { pseudo::pseudo_invariant(&d.inner, &ts, b) };
    Ok(v.map_err(err)?.to_string())
}

/// `(holds, sum)` for the coefficient relation of a recipe.
#[pyfunction]
fn relation(base_invariant: &str, tangles: &str) -> PyResult<(bool, String)> {
    let b = base(base_invariant)?;
    let ts = TangleSet::parse(tangles, b.var()).map_err(err)?;
    let sum = pseudo::relation_sum(&ts, b).map_err(err)?;
    Ok((sum.is_one(), sum.to_string()))
}

/// Resolution types as `(probability, label)` pairs; labels are catalog
/// names when known, fingerprint texts otherwise.
#[pyfunction]
#[pyo3(signature = (d, basis = vec!["jones".to_string(), "alexander".to_string()], p_plus = "1/2"))]
fn were_set(d: &Diagram, basis: Vec<String>, p_plus: &str) -> PyResult<Vec<(String, String)>> {
    let basis = basis.iter().map(|b| base(b)).collect::<PyResult<Vec<_>>>()?;
    let p: BigRational = p_plus.parse().map_err(|_| err(format!("bad probability {p_plus:?}")))?;
    let ws = pseudo::were_set_weighted(&d.inner, &basis, &p).map_err(err)?.identify(catalog::identify);
    Ok(ws
        .entries()
        .iter()
        .map(|e| (e.probability.to_string(), e.name.clone().unwrap_or_else(|| e.fingerprint.to_string())))
        .collect())
}

/// Catalog name matching the diagram's Jones and Alexander fingerprint.
#[pyfunction]
fn identify(d: &Diagram) -> PyResult<Option<String>> {
    let fp = pseudo::Fingerprint::of(&d.inner, &[BaseInvariant::Jones, BaseInvariant::Alexander]).map_err(err)?;
    Ok(catalog::identify(&fp))
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::names()
}

/// Random move sequences; returns `(check, passed, report)` per check.
#[pyfunction]
#[pyo3(signature = (d, iterations = 50, seed = 0, max_sites = 12, max_length = 6))]
fn fuzz(d: &Diagram, iterations: usize, seed: u64, max_sites: usize, max_length: usize) -> Vec<(String, bool, String)> {
    let cfg = FuzzConfig { kinds: MoveKind::ALL.to_vec(), iterations, seed, max_sites, max_length };
    let recipes = [
        Recipe::new(TangleSet::uniform(), BaseInvariant::Jones, true),
        Recipe::new(TangleSet::smoothing(), BaseInvariant::Jones, true),
    ];
    run_fuzz(&d.inner, &cfg, &recipes).into_iter().map(|c| (c.name.clone(), c.passed(), c.to_string())).collect()
}

/// Runs the command-line front end in-process: `(exit code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let o = pseudoknot::cli::run(std::iter::once("pseudoknot".to_string()).chain(args));
    (o.code, o.stdout, o.stderr)
}

/// Pseudoknot invariants computed by substituting rational tangles for precrossings.
#[pymodule(name = "pseudoknot")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(kauffman_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(jones, m)?)?;
    m.add_function(wrap_pyfunction!(alexander_poly, m)?)?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(relation, m)?)?;
    m.add_function(wrap_pyfunction!(were_set, m)?)?;
    m.add_function(wrap_pyfunction!(identify, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(fuzz, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
