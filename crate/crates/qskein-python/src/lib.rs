//! Python bindings: thin JSON-returning wrappers over the qskein library.
//!
//! Every function returns the same deterministic JSON the CLI prints, as a
//! string; decode with `json.loads`. Invalid arguments raise `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qskein::jones_2bridge::{colored_jones, Algebra, TwoBridgeSpec};
use qskein::twist_formulas::{
    bubble_coeff, multi_twist_expansion_sl2, multi_twist_expansion_sl3, Handedness,
    TwistKindSl2,
};

fn parse_algebra(name: &str) -> PyResult<Algebra> {
    match name {
        "sl2" => Ok(Algebra::Sl2),
        "sl3" => Ok(Algebra::Sl3),
        other => Err(PyValueError::new_err(format!(
            "algebra must be \"sl2\" or \"sl3\", got {other:?}"
        ))),
    }
}

fn parse_handed(name: &str) -> PyResult<Handedness> {
    match name {
        "right" => Ok(Handedness::Right),
        "left" => Ok(Handedness::Left),
        other => Err(PyValueError::new_err(format!(
            "handed must be \"right\" or \"left\", got {other:?}"
        ))),
    }
}

/// Colored invariant of the 2-bridge link `link` (comma-separated even twist
/// counts, e.g. "2,-2"): J_{n+1} for sl2, J_{(n,0)} for sl3.
#[pyfunction]
#[pyo3(signature = (link, color, algebra = "sl2"))]
fn jones_json(link: &str, color: u32, algebra: &str) -> PyResult<String> {
    let spec = TwoBridgeSpec::parse_text(link).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let result = colored_jones(&spec, color, parse_algebra(algebra)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(serde_json::to_string(&result.to_json()).unwrap())
}

/// Expansion of an `m`-fold two-strand twist region on color `n` into
/// clasped eigenstates. `kind` is "half" or "full" (sl3: "full" only).
#[pyfunction]
#[pyo3(signature = (n, m = 1, algebra = "sl2", kind = "half", handed = "right"))]
fn twist_expansion_json(n: u32, m: u32, algebra: &str, kind: &str, handed: &str) -> PyResult<String> {
    let handed = parse_handed(handed)?;
    let expansion = match (parse_algebra(algebra)?, kind) {
        (Algebra::Sl2, "half") => multi_twist_expansion_sl2(n, m, TwistKindSl2::Half, handed),
        (Algebra::Sl2, "full") => multi_twist_expansion_sl2(n, m, TwistKindSl2::Full, handed),
        (Algebra::Sl3, "full") => multi_twist_expansion_sl3(n, m, handed),
        (Algebra::Sl3, "half") => {
            return Err(PyValueError::new_err(
                "sl3 multi-twist expansion is full-twist only",
            ))
        }
        (_, other) => {
            return Err(PyValueError::new_err(format!(
                "kind must be \"half\" or \"full\", got {other:?}"
            )))
        }
    };
    Ok(serde_json::to_string(&expansion.to_json()).unwrap())
}

/// Bubble coefficients c_t over the full range max(k, l) <= t <=
/// min(k + l, n, m), keyed by t.
#[pyfunction]
#[pyo3(signature = (n, m, k, l, algebra = "sl2"))]
fn bubble_coefficients_json(n: u32, m: u32, k: u32, l: u32, algebra: &str) -> PyResult<String> {
    let algebra = parse_algebra(algebra)?;
    if k > n.min(m) || l > n.min(m) {
        return Err(PyValueError::new_err(format!(
            "band sizes k={k}, l={l} exceed min(n, m) = {}",
            n.min(m)
        )));
    }
    let mut map = serde_json::Map::new();
    for t in k.max(l)..=(k + l).min(n).min(m) {
        let c = bubble_coeff(algebra, n, m, k, l, t)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        map.insert(t.to_string(), c.to_json());
    }
    Ok(serde_json::to_string(&serde_json::Value::Object(map)).unwrap())
}

#[pymodule]
fn qskein_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(jones_json, m)?)?;
    m.add_function(wrap_pyfunction!(twist_expansion_json, m)?)?;
    m.add_function(wrap_pyfunction!(bubble_coefficients_json, m)?)?;
    Ok(())
}
