//! Python bindings: `import tilelab`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tilelab_core::{
    build_gifs, build_neighbor_graph, contact_matrix, dimension_report, find_sign_path, is_irreducible,
    is_number_system, neighbor_delta_form, origin_on_boundary, represent, validate_poly, LatticeVec, Sign, Suite,
    TileError,
};

type Pair = (i64, i64);
type PathParts = (Pair, Vec<i64>, Vec<i64>);

fn err(e: TileError) -> PyErr {
    match e {
        TileError::BoxExhausted | TileError::Overflow | TileError::Io(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A validated tile polynomial `x^2 + p x + q`.
#[pyclass(frozen, name = "Tile")]
struct PyTile {
    poly: tilelab_core::TilePoly,
}

#[pymethods]
impl PyTile {
    #[new]
    fn new(p: i64, q: i64) -> PyResult<Self> {
        Ok(PyTile { poly: validate_poly(p, q).map_err(err)? })
    }

    #[getter]
    fn p(&self) -> i64 {
        self.poly.p()
    }

    #[getter]
    fn q(&self) -> i64 {
        self.poly.q()
    }

    #[getter]
    fn family(&self) -> (usize, &'static str) {
        let f = self.poly.family();
        (f.number(), f.name())
    }

    #[getter]
    fn similarity(&self) -> bool {
        self.poly.similarity()
    }

    fn is_number_system(&self) -> bool {
        is_number_system(&self.poly)
    }

    fn origin_on_boundary(&self) -> PyResult<bool> {
        Ok(origin_on_boundary(&build_neighbor_graph(&self.poly).map_err(err)?))
    }

    /// Neighbor vertices as `(gamma, delta)` pairs in table order.
    fn neighbors(&self) -> PyResult<Vec<(i64, i64)>> {
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(g.vertices().iter().map(|l| (l.gamma, l.delta)).collect())
    }

    /// Labeled edges `((gamma, delta), label, (gamma', delta'))`.
    fn edges(&self) -> PyResult<Vec<(Pair, i64, Pair)>> {
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(g.triples().into_iter().map(|(a, b, c)| ((a.gamma, a.delta), b, (c.gamma, c.delta))).collect())
    }

    fn graph_text(&self) -> PyResult<String> {
        Ok(build_neighbor_graph(&self.poly).map_err(err)?.to_text())
    }

    fn gifs_text(&self) -> PyResult<String> {
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(build_gifs(&g, &self.poly).map_err(err)?.to_text())
    }

    fn contact_matrix(&self) -> PyResult<Vec<Vec<i64>>> {
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(contact_matrix(&g, &self.poly).map_err(err)?.entries().to_vec())
    }

    fn irreducible(&self) -> PyResult<bool> {
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(is_irreducible(&contact_matrix(&g, &self.poly).map_err(err)?))
    }

    /// Dimension report as a JSON string.
    fn dimension_json(&self) -> PyResult<String> {
        Ok(dimension_report(&self.poly).map_err(err)?.to_json())
    }

    fn dimension(&self) -> PyResult<f64> {
        Ok(dimension_report(&self.poly).map_err(err)?.dim_generalized)
    }

    /// Digits `d_0, d_1, ...` with `sum d_i A^i v = gamma v + delta Av`.
    fn represent(&self, gamma: i64, delta: i64) -> PyResult<Vec<i64>> {
        Ok(represent(LatticeVec::new(gamma, delta), &self.poly).map_err(err)?.digits.0)
    }

    fn delta_form(&self, gamma: i64, delta: i64) -> PyResult<Vec<i64>> {
        Ok(neighbor_delta_form(LatticeVec::new(gamma, delta), &self.poly).map_err(err)?.0)
    }

    /// `(start, preperiod, period)` of a label path with labels of one sign,
    /// or `None`. `sign` is `"nonpositive"` or `"nonnegative"`.
    fn sign_path(&self, sign: &str) -> PyResult<Option<PathParts>> {
        let sign = match sign {
            "nonpositive" => Sign::NonPositive,
            "nonnegative" => Sign::NonNegative,
            _ => return Err(PyValueError::new_err("sign must be 'nonpositive' or 'nonnegative'")),
        };
        let g = build_neighbor_graph(&self.poly).map_err(err)?;
        Ok(find_sign_path(&g, sign).map(|sp| {
            ((sp.start.gamma, sp.start.delta), sp.labels.preperiod().0.clone(), sp.labels.period().0.clone())
        }))
    }

    fn __repr__(&self) -> String {
        format!("Tile({}, {})", self.poly.p(), self.poly.q())
    }
}

/// Runs a fixture suite; returns `(passed, report_text)`.
#[pyfunction]
fn verify(scope: &str) -> PyResult<(bool, String)> {
    let suite: Suite = scope.parse().map_err(|e: TileError| PyValueError::new_err(e.to_string()))?;
    let report = tilelab_core::verify(suite);
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn tilelab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTile>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
