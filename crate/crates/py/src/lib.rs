//! Python bindings: scenes, closure polynomials, point classification,
//! rasters as PPM bytes, circle deviation and the van Schooten check.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};

use nellipse::locus::{classify_point, color_of, signed_sum};
use nellipse::presets::{preset, presets};
use nellipse::raster::{self, Window, DEFAULT_BAND};
use nellipse::scene_io::{parse_scene_file, scene_to_json};
use nellipse::{closure_poly, elimination_oracle, LocusResult, Point, Rational, SignVector, TermOrder};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(text: &str) -> PyResult<Rational> {
    text.parse().map_err(value_error)
}

fn sign_vector(text: &str) -> PyResult<SignVector> {
    text.parse().map_err(value_error)
}

fn order(style: &str) -> PyResult<TermOrder> {
    match style {
        "graded" => Ok(TermOrder::GradedLex),
        "classic" => Ok(TermOrder::Classic),
        other => Err(PyValueError::new_err(format!("unknown style {other:?}"))),
    }
}

fn window(w: (f64, f64, f64, f64)) -> PyResult<Window> {
    Window::new(w.0, w.1, w.2, w.3).map_err(value_error)
}

/// Foci with a non-negative rational radius.
#[pyclass(name = "Scene", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyScene {
    inner: nellipse::Scene,
}

#[pymethods]
impl PyScene {
    /// Rational foci given as `("p/q", "r/s")` pairs and a radius such as `"1"`.
    #[new]
    fn new(foci: Vec<(String, String)>, s: &str) -> PyResult<Self> {
        let pts = foci
            .iter()
            .map(|(x, y)| Ok(Point::rational(rational(x)?, rational(y)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = nellipse::Scene::new(pts, rational(s)?).map_err(value_error)?;
        Ok(PyScene { inner })
    }

    /// Parses a scene document, including surd coordinates.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = parse_scene_file(text).map_err(value_error)?;
        Ok(PyScene { inner: file.scene })
    }

    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        let p = preset(name).ok_or_else(|| PyValueError::new_err(format!("unknown preset {name:?}")))?;
        Ok(PyScene { inner: p.scene })
    }

    fn to_json(&self) -> String {
        scene_to_json(&self.inner, None).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn s(&self) -> String {
        self.inner.s().to_string()
    }

    #[getter]
    fn foci(&self) -> Vec<(f64, f64)> {
        self.inner.foci_f64()
    }

    fn signed_sum(&self, x: f64, y: f64, sigma: &str) -> PyResult<f64> {
        let sg = sign_vector(sigma)?;
        if sg.len() != self.inner.n() {
            return Err(PyValueError::new_err("sign vector length does not match the foci"));
        }
        Ok(signed_sum(&self.inner, (x, y), &sg))
    }

    #[pyo3(signature = (x, y, tol = 1e-9))]
    fn classify_point(&self, x: f64, y: f64, tol: f64) -> Vec<String> {
        classify_point(&self.inner, (x, y), tol)
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Scene({})", self.to_json())
    }
}

fn equation_dict<'py>(py: Python<'py>, r: &LocusResult, style: TermOrder) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    let poly = r.closure.poly();
    let terms: Vec<(String, u32, u32)> = poly
        .ordered_terms(style)
        .into_iter()
        .map(|(m, c)| (c.to_string(), m.exps()[0], m.exps()[1]))
        .collect();
    d.set_item("text", poly.to_text(style))?;
    d.set_item("degree", r.total_degree)?;
    d.set_item("terms", terms)?;
    d.set_item("half_product_used", r.half_product_used)?;
    d.set_item("norm_applied", r.norm_applied)?;
    Ok(d)
}

/// Closure polynomial by the sign-product construction.
#[pyfunction]
#[pyo3(signature = (scene, style = "graded"))]
fn closure_equation<'py>(py: Python<'py>, scene: &PyScene, style: &str) -> PyResult<Bound<'py, PyDict>> {
    let r = closure_poly(&scene.inner).map_err(value_error)?;
    equation_dict(py, &r, order(style)?)
}

/// Closure polynomial by chained resultants.
#[pyfunction]
#[pyo3(signature = (scene, style = "graded"))]
fn oracle_equation<'py>(py: Python<'py>, scene: &PyScene, style: &str) -> PyResult<Bound<'py, PyDict>> {
    let r = elimination_oracle(&scene.inner).map_err(value_error)?;
    equation_dict(py, &r, order(style)?)
}

#[pyfunction(name = "color_of")]
fn py_color_of(sigma: &str) -> PyResult<(u8, u8, u8)> {
    let [r, g, b] = color_of(&sign_vector(sigma)?);
    Ok((r, g, b))
}

#[pyfunction]
fn preset_names() -> Vec<&'static str> {
    presets().iter().map(|p| p.name).collect()
}

/// Default window `(xmin, xmax, ymin, ymax)` of a preset.
#[pyfunction]
fn preset_window(name: &str) -> PyResult<(f64, f64, f64, f64)> {
    let w = preset(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown preset {name:?}")))?
        .window;
    Ok((w.xmin, w.xmax, w.ymin, w.ymax))
}

/// Sign-classified raster as PPM bytes.
#[pyfunction]
#[pyo3(signature = (scene, window, width, height, band = DEFAULT_BAND))]
fn classify_raster<'py>(
    py: Python<'py>,
    scene: &PyScene,
    window: (f64, f64, f64, f64),
    width: usize,
    height: usize,
    band: f64,
) -> PyResult<Bound<'py, PyBytes>> {
    let w = self::window(window)?;
    let img = py
        .detach(|| raster::classify_raster(&scene.inner, &w, width, height, band))
        .map_err(value_error)?;
    Ok(PyBytes::new(py, &img.to_ppm()))
}

/// Distance-sum hue heatmap as PPM bytes.
#[pyfunction]
fn hue_heatmap<'py>(
    py: Python<'py>,
    scene: &PyScene,
    window: (f64, f64, f64, f64),
    width: usize,
    height: usize,
) -> PyResult<Bound<'py, PyBytes>> {
    let w = self::window(window)?;
    let img = py
        .detach(|| raster::hue_heatmap(&scene.inner, &w, width, height))
        .map_err(value_error)?;
    Ok(PyBytes::new(py, &img.to_ppm()))
}

/// Circle with exact center and squared radius.
#[pyclass(name = "Circle", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCircle {
    inner: raster::Circle,
}

#[pymethods]
impl PyCircle {
    #[getter]
    fn center(&self) -> (String, String) {
        (self.inner.center.0.to_string(), self.inner.center.1.to_string())
    }

    #[getter]
    fn radius_sq(&self) -> String {
        self.inner.radius_sq.to_string()
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius()
    }

    fn __repr__(&self) -> String {
        let (cx, cy) = self.center();
        format!("Circle(center=({cx}, {cy}), radius_sq={})", self.radius_sq())
    }
}

/// Circle through three rational points `("p/q", "r/s")`.
#[pyfunction]
fn circle_through(p1: (String, String), p2: (String, String), p3: (String, String)) -> PyResult<PyCircle> {
    let pt = |p: &(String, String)| Ok::<_, PyErr>(Point::rational(rational(&p.0)?, rational(&p.1)?));
    let inner = raster::circle_through(&pt(&p1)?, &pt(&p2)?, &pt(&p3)?).map_err(value_error)?;
    Ok(PyCircle { inner })
}

#[pyfunction]
fn circumcircle() -> PyCircle {
    PyCircle {
        inner: raster::circumcircle(),
    }
}

/// Sampled maximum of the relative signed-sum residual on a circle.
#[pyfunction]
#[pyo3(signature = (scene, circle, sigmas, samples = 100_000))]
fn max_deviation<'py>(
    py: Python<'py>,
    scene: &PyScene,
    circle: &PyCircle,
    sigmas: Vec<String>,
    samples: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let sgs = sigmas.iter().map(|s| sign_vector(s)).collect::<PyResult<Vec<_>>>()?;
    let r = raster::max_deviation(&scene.inner, &circle.inner, &sgs, samples).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("max", r.max)?;
    d.set_item("argmax_theta", r.argmax_theta)?;
    d.set_item("at_point", r.at_point)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (samples = 10_000))]
fn van_schooten_check<'py>(py: Python<'py>, samples: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = raster::van_schooten_check(samples).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("samples", r.samples)?;
    d.set_item("max_min_residual", r.max_min_residual)?;
    d.set_item("uncovered", r.uncovered)?;
    d.set_item("ambiguous_off_vertex", r.ambiguous_off_vertex)?;
    d.set_item("near_vertex", r.near_vertex)?;
    let arcs: Vec<(String, String, f64, f64, usize)> = r
        .arcs
        .iter()
        .map(|a| {
            (
                a.relation.to_string(),
                a.relation.sign_vector().to_string(),
                a.start_theta,
                a.end_theta,
                a.samples,
            )
        })
        .collect();
    d.set_item("arcs", arcs)?;
    Ok(d)
}

#[pymodule]
fn nellipse_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScene>()?;
    m.add_class::<PyCircle>()?;
    m.add_function(wrap_pyfunction!(closure_equation, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_equation, m)?)?;
    m.add_function(wrap_pyfunction!(py_color_of, m)?)?;
    m.add_function(wrap_pyfunction!(preset_names, m)?)?;
    m.add_function(wrap_pyfunction!(preset_window, m)?)?;
    m.add_function(wrap_pyfunction!(classify_raster, m)?)?;
    m.add_function(wrap_pyfunction!(hue_heatmap, m)?)?;
    m.add_function(wrap_pyfunction!(circle_through, m)?)?;
    m.add_function(wrap_pyfunction!(circumcircle, m)?)?;
    m.add_function(wrap_pyfunction!(max_deviation, m)?)?;
    m.add_function(wrap_pyfunction!(van_schooten_check, m)?)?;
    Ok(())
}
