//! Python bindings: `import deletion_order`.

use std::cmp::Ordering;

use delorder::artinian::{artinian_all_orders, is_artinian};
use delorder::bruhat::bruhat_relation;
use delorder::cayley::{stream_in_deletion_order, successor_label, CayleyGraph};
use delorder::coxeter::{preset, CoxeterMatrix};
use delorder::duality::{duality_report, LabelMethod};
use delorder::normal_forms::{compare_elements, nf_rlex, sort_by_deletion_order};
use delorder::{word_order, Error, Word};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn word(s: &str) -> PyResult<Word> {
    s.parse().map_err(to_py)
}

fn sign(o: Ordering) -> i8 {
    o as i8
}

/// -1, 0 or 1 as `u` is below, equal to or above `v` in the deletion order.
#[pyfunction]
fn compare(u: &str, v: &str) -> PyResult<i8> {
    Ok(sign(word_order::compare(&word(u)?, &word(v)?)))
}

/// The blocks of `w` between occurrences of letter `j`.
#[pyfunction]
fn deletion_sequence(w: &str, j: u8) -> PyResult<Vec<String>> {
    Ok(word_order::deletion_sequence(&word(w)?, j)
        .blocks
        .iter()
        .map(Word::to_string)
        .collect())
}

#[pyfunction]
fn delta(w: &str, k: u8, n: u8) -> PyResult<String> {
    if k == 0 || k > n {
        return Err(PyValueError::new_err(format!("k must lie in 1..={n}")));
    }
    let w = word(w)?;
    delorder::Alphabet::new(n as usize)
        .and_then(|a| a.check_word(&w))
        .map_err(to_py)?;
    Ok(word_order::delta(&w, k, n).to_string())
}

/// Block counts per letter from the top down, or letter counts with
/// `occurrences=True`.
#[pyfunction]
#[pyo3(signature = (w, n, occurrences = false))]
fn alpha(w: &str, n: u8, occurrences: bool) -> PyResult<Vec<usize>> {
    let w = word(w)?;
    delorder::Alphabet::new(n as usize)
        .and_then(|a| a.check_word(&w))
        .map_err(to_py)?;
    let a = word_order::alpha(&w, n);
    Ok(if occurrences {
        a.occurrences()
    } else {
        a.entries
    })
}

#[pyclass(name = "CoxeterSystem", frozen)]
struct PySystem {
    inner: delorder::CoxeterSystem,
}

impl PySystem {
    fn element(&self, w: &str) -> PyResult<delorder::GroupElement> {
        self.inner.element(&word(w)?).map_err(to_py)
    }
}

#[pymethods]
impl PySystem {
    #[staticmethod]
    fn from_preset(name: &str) -> PyResult<Self> {
        Ok(PySystem {
            inner: preset(name).map_err(to_py)?,
        })
    }

    /// Rows of the Coxeter matrix, with 0 for an infinite bond.
    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PySystem {
            inner: delorder::CoxeterSystem::new(CoxeterMatrix::from_rows(&rows).map_err(to_py)?),
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// `|W|`, or None when infinite.
    fn order(&self) -> Option<u128> {
        self.inner.order()
    }

    /// Normal forms of all elements in deletion order.
    fn elements(&self) -> PyResult<Vec<String>> {
        let all = self.inner.enumerate().map_err(to_py)?;
        Ok(sort_by_deletion_order(&self.inner, all)
            .map_err(to_py)?
            .into_iter()
            .map(|(_, w)| w.to_generator_string())
            .collect())
    }

    fn nf(&self, w: &str) -> PyResult<String> {
        let g = self.element(w)?;
        Ok(nf_rlex(&self.inner, &g)
            .map_err(to_py)?
            .to_generator_string())
    }

    fn compare(&self, u: &str, v: &str) -> PyResult<i8> {
        let (g, h) = (self.element(u)?, self.element(v)?);
        Ok(sign(compare_elements(&self.inner, &g, &h).map_err(to_py)?))
    }

    /// "less", "greater", "equal" or "incomparable".
    fn bruhat(&self, u: &str, v: &str) -> PyResult<&'static str> {
        let (g, h) = (self.element(u)?, self.element(v)?);
        Ok(bruhat_relation(&self.inner, &g, &h)
            .map_err(to_py)?
            .as_str())
    }

    /// `(L, normal form)` pairs from the successor algorithm.
    fn label(&self) -> PyResult<Vec<(usize, String)>> {
        let graph = CayleyGraph::build(&self.inner).map_err(to_py)?;
        let labeling = successor_label(&graph);
        labeling
            .order
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let nf = nf_rlex(&self.inner, graph.vertex(v)).map_err(to_py)?;
                Ok((k + 1, nf.to_generator_string()))
            })
            .collect()
    }

    fn stream(&self, count: usize) -> PyResult<Vec<String>> {
        Ok(stream_in_deletion_order(&self.inner, count)
            .map_err(to_py)?
            .into_iter()
            .map(|(_, w)| w.to_generator_string())
            .collect())
    }

    fn is_artinian(&self) -> bool {
        is_artinian(&self.inner)
    }

    fn artinian_for_all_orders(&self) -> bool {
        artinian_all_orders(&self.inner).artinian_for_all_orders
    }

    /// Dict with `holds`, `order` and `defects` as `(w, L(w), L(w0 w), sum)`.
    fn duality<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = duality_report(&self.inner, "", LabelMethod::Graph).map_err(to_py)?;
        let defects: Vec<(String, usize, usize, usize)> = r
            .defects
            .iter()
            .map(|d| {
                (
                    d.element.to_generator_string(),
                    d.label,
                    d.dual_label,
                    d.sum,
                )
            })
            .collect();
        let dict = PyDict::new(py);
        dict.set_item("holds", r.holds)?;
        dict.set_item("order", r.order)?;
        dict.set_item("defects", defects)?;
        Ok(dict)
    }
}

#[pymodule]
fn deletion_order(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(deletion_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_class::<PySystem>()?;
    Ok(())
}
