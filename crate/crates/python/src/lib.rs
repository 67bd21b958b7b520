//! Python bindings: partitions, cores and quotients, counting series,
//! core-size laws, hook residues, orbits, sampling and verification.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tcore::counting::{core_sums_from, CountTables};
use tcore::distribution::{self, GammaParams};
use tcore::hookstats;
use tcore::sampling::{self, SamplerTable};
use tcore::verify::{run_suite, Suite};

fn value_error(e: tcore::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A partition: nonincreasing positive parts.
#[pyclass(
    name = "Partition",
    module = "tcore_py",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(tcore::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts = Vec::new()))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        tcore::Partition::new(parts)
            .map(PyPartition)
            .map_err(value_error)
    }

    /// Parses `(5,4,1)`, `5,4,1` or `5 4 1`.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        tcore::Partition::parse(s)
            .map(PyPartition)
            .map_err(value_error)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn hook_length(&self, row: usize, col: usize) -> PyResult<usize> {
        self.0
            .hook_length(tcore::Cell::new(row, col))
            .map_err(value_error)
    }

    /// Hook lengths in row-major cell order.
    fn hook_lengths(&self) -> Vec<usize> {
        self.0.hook_lengths()
    }

    fn core(&self, t: usize) -> PyResult<Self> {
        tcore::core(&self.0, t)
            .map(PyPartition)
            .map_err(value_error)
    }

    fn quotient(&self, t: usize) -> PyResult<Vec<Self>> {
        let q = tcore::quotient(&self.0, t).map_err(value_error)?;
        Ok(q.into_iter().map(PyPartition).collect())
    }

    fn is_core(&self, t: usize) -> PyResult<bool> {
        tcore::is_core(&self.0, t).map_err(value_error)
    }

    fn is_divisible(&self, t: usize) -> PyResult<bool> {
        tcore::is_divisible(&self.0, t).map_err(value_error)
    }

    /// Counts of hook lengths by residue mod `t`.
    fn residue_census(&self, t: usize) -> PyResult<Vec<u64>> {
        Ok(hookstats::residue_census(&self.0, t)
            .map_err(value_error)?
            .counts)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// `(core, quotient)` of `λ`.
#[pyfunction]
fn decompose(lam: &PyPartition, t: usize) -> PyResult<(PyPartition, Vec<PyPartition>)> {
    let d = tcore::decompose(&lam.0, t).map_err(value_error)?;
    Ok((
        PyPartition(d.core),
        d.quotient.into_iter().map(PyPartition).collect(),
    ))
}

/// The partition with the given core and quotient.
#[pyfunction]
fn compose(core: &PyPartition, quotient: Vec<PyPartition>, t: usize) -> PyResult<PyPartition> {
    let q: Vec<tcore::Partition> = quotient.into_iter().map(|p| p.0).collect();
    tcore::compose(&core.0, &q, t)
        .map(PyPartition)
        .map_err(value_error)
}

/// All partitions of `n` in reverse-lexicographic order.
#[pyfunction]
fn partitions(n: usize) -> Vec<PyPartition> {
    tcore::partitions(n).map(PyPartition).collect()
}

/// Dict of lists `p`, `c_t`, `d_t`, `C_t` for `0 ≤ n ≤ max_n`.
#[pyfunction]
fn counts<'py>(py: Python<'py>, t: usize, max_n: usize) -> PyResult<Bound<'py, PyDict>> {
    let tables = CountTables::new(t, max_n).map_err(value_error)?;
    let sums = core_sums_from(&tables.cores);
    let out = PyDict::new(py);
    out.set_item("p", tables.partitions.into_values())?;
    out.set_item("c_t", tables.cores.into_values())?;
    out.set_item("d_t", tables.divisible.into_values())?;
    out.set_item("C_t", sums.into_values())?;
    Ok(out)
}

/// `c_t(n)` by counting lattice points.
#[pyfunction]
fn lattice_core_count(t: usize, n: usize) -> PyResult<u64> {
    tcore::lattice::lattice_core_count(t, n).map_err(value_error)
}

/// `[(k, c_t(k)·d_t(n-k), p(n))]` over the support of `|core_t(λ)|`.
#[pyfunction]
fn core_size_pmf(t: usize, n: usize) -> PyResult<Vec<(usize, BigUint, BigUint)>> {
    let pmf = distribution::core_size_pmf(t, n).map_err(value_error)?;
    Ok(pmf
        .support()
        .map(|k| (k, pmf.weight(k), pmf.total().clone()))
        .collect())
}

/// `(E|core_t|, asymptote)` at `n`.
#[pyfunction]
fn expected_core_size(t: usize, n: usize) -> PyResult<(f64, f64)> {
    let e = distribution::expected_core_size(t, n).map_err(value_error)?;
    Ok((e.exact_f64(), e.asymptote))
}

/// CDF of the limiting gamma law for `t` at `x`.
#[pyfunction]
fn gamma_cdf(t: usize, x: f64) -> PyResult<f64> {
    Ok(GammaParams::for_cores(t).map_err(value_error)?.cdf(x))
}

/// Sup distance between the CDF of the scaled core size and its gamma limit.
#[pyfunction]
fn cdf_sup_distance(t: usize, n: usize) -> PyResult<f64> {
    let pmf = distribution::core_size_pmf(t, n).map_err(value_error)?;
    let g = GammaParams::for_cores(t).map_err(value_error)?;
    Ok(distribution::cdf_sup_distance(&pmf, &g))
}

/// Exact `x_i(n)` as `(numerator, denominator)` pairs.
#[pyfunction]
fn residue_distribution(t: usize, n: usize) -> PyResult<Vec<(String, String)>> {
    let x = hookstats::exact_residue_distribution(t, n).map_err(value_error)?;
    Ok(x.iter()
        .map(|r| (r.numer().to_string(), r.denom().to_string()))
        .collect())
}

/// Rows `(word, member, [C^0, …, C^max_b])` of the orbit of `ν`.
#[pyfunction]
#[pyo3(signature = (nu, t, max_b = 2))]
fn orbit(
    nu: &PyPartition,
    t: usize,
    max_b: i64,
) -> PyResult<Vec<(String, PyPartition, Vec<PyPartition>)>> {
    let rows = hookstats::orbit_table(&nu.0, t, max_b).map_err(value_error)?;
    Ok(rows
        .into_iter()
        .map(|r| {
            (
                r.word.to_string(),
                PyPartition(r.member),
                r.smoothings.into_iter().map(PyPartition).collect(),
            )
        })
        .collect())
}

/// Exact uniform sampler for partitions of `n`.
#[pyclass(name = "Sampler", module = "tcore_py", frozen)]
struct PySampler(SamplerTable);

#[pymethods]
impl PySampler {
    #[new]
    fn new(n: usize) -> Self {
        PySampler(sampling::build_sampler(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn total(&self) -> BigUint {
        self.0.total()
    }

    fn sample(&self, seed: u64, index: u64) -> PyPartition {
        PyPartition(sampling::sample_partition(&self.0, seed, index))
    }

    fn batch(&self, py: Python<'_>, seed: u64, count: usize) -> Vec<PyPartition> {
        py.detach(|| sampling::sample_batch(&self.0, seed, count))
            .into_iter()
            .map(PyPartition)
            .collect()
    }
}

type CaseRow = (String, String, bool, String);

/// Runs a verification suite; returns `(passed, [(name, params, passed, detail)])`.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = 22, seed = 0))]
fn verify(py: Python<'_>, suite: &str, max_n: usize, seed: u64) -> PyResult<(bool, Vec<CaseRow>)> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let report = py.detach(|| run_suite(suite, max_n, seed));
    let cases = report
        .cases
        .iter()
        .map(|c| (c.name.clone(), c.params.clone(), c.passed, c.detail.clone()))
        .collect();
    Ok((report.passed(), cases))
}

#[pymodule]
fn tcore_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PySampler>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(counts, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_core_count, m)?)?;
    m.add_function(wrap_pyfunction!(core_size_pmf, m)?)?;
    m.add_function(wrap_pyfunction!(expected_core_size, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_cdf, m)?)?;
    m.add_function(wrap_pyfunction!(cdf_sup_distance, m)?)?;
    m.add_function(wrap_pyfunction!(residue_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
