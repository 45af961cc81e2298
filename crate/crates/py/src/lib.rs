//! Python bindings. Structured results come back as plain dicts and lists.

use nck_core::bounds::{bounds_report, small_exact};
use nck_core::catalog::{class_coverage, contains_type as core_contains_type, load_catalog, SubgroupDescriptor};
use nck_core::coverings::{exact_gamma, verify_basic_set, BasicSet, Family, FamilyParams};
use nck_core::cycle_types::{t_prime_set, t_set, u_set, CycleType, GroupId, GroupKind};
use nck_core::numtheory::{self, Interval};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde_json::json;

fn err(e: nck_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(group: &str) -> PyResult<GroupKind> {
    match group.to_ascii_lowercase().as_str() {
        "sym" | "s" => Ok(GroupKind::Sym),
        "alt" | "a" => Ok(GroupKind::Alt),
        other => Err(PyValueError::new_err(format!("group must be \"sym\" or \"alt\", got {other:?}"))),
    }
}

fn group_id(n: usize, group: &str) -> PyResult<GroupId> {
    GroupId::new(kind(group)?, n).map_err(err)
}

/// Round-trips through JSON so nested results arrive as native Python objects.
fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// Lower, upper and (when known) exact γ with the source of each bound.
#[pyfunction]
#[pyo3(signature = (n, group = "sym"))]
fn bounds<'py>(py: Python<'py>, n: usize, group: &str) -> PyResult<Bound<'py, PyAny>> {
    let r = bounds_report(group_id(n, group)?).map_err(err)?;
    let mut v = serde_json::to_value(&r).map_err(|e| PyValueError::new_err(e.to_string()))?;
    v["band"] = json!(r.band().map(|(lo, hi)| [lo.to_string(), hi.to_string()]));
    to_py(py, &v)
}

/// Exact γ over the built-in catalog (n ≤ 12), with the lexicographically first witness.
#[pyfunction]
#[pyo3(signature = (n, group = "sym"))]
fn gamma<'py>(py: Python<'py>, n: usize, group: &str) -> PyResult<Bound<'py, PyAny>> {
    let g = group_id(n, group)?;
    let r = exact_gamma(g, &load_catalog(g).map_err(err)?).map_err(err)?;
    let witness: Vec<String> = r.witness.components.iter().map(ToString::to_string).collect();
    to_py(py, &json!({ "group": g, "gamma": r.gamma, "exact": r.exact, "witness": witness }))
}

/// γ for S_3..S_12 and A_4..A_12 as two dicts keyed by degree.
#[pyfunction]
fn small_table<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (key, k) in [("sym", GroupKind::Sym), ("alt", GroupKind::Alt)] {
        let row = PyDict::new(py);
        for n in 3..=12 {
            if let Ok(g) = GroupId::new(k, n) {
                row.set_item(n, small_exact(g))?;
            }
        }
        out.set_item(key, row)?;
    }
    Ok(out)
}

/// Checks a basic set given as JSON text ({"group": "S12", "subgroups": [...]}).
#[pyfunction]
fn verify<'py>(py: Python<'py>, basic_set: &str) -> PyResult<Bound<'py, PyAny>> {
    let b = BasicSet::from_json(basic_set).map_err(err)?;
    let r = verify_basic_set(&b).map_err(err)?;
    to_py(py, &serde_json::to_value(&r).map_err(|e| PyValueError::new_err(e.to_string()))?)
}

/// Builds one of the named constructions and verifies it.
#[pyfunction]
#[pyo3(signature = (family, n = None, p = None, q = None, alpha = None, beta = None, group = None, block = None))]
#[allow(clippy::too_many_arguments)]
fn construct<'py>(
    py: Python<'py>,
    family: &str,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    alpha: Option<u32>,
    beta: Option<u32>,
    group: Option<&str>,
    block: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let params = FamilyParams { n, p, q, alpha, beta, kind: group.map(kind).transpose()?, block };
    let c = Family::from_params(family, &params).and_then(|f| f.construct()).map_err(err)?;
    let r = verify_basic_set(&c.basic_set).map_err(err)?;
    let subgroups: Vec<String> = c.basic_set.components.iter().map(ToString::to_string).collect();
    to_py(
        py,
        &json!({
            "group": c.basic_set.group,
            "subgroups": subgroups,
            "size": subgroups.len(),
            "predicted_size": c.predicted_size,
            "covered": r.covered,
            "uncovered": r.uncovered,
            "basic_set": c.basic_set.to_json().map_err(err)?,
        }),
    )
}

/// Whether some conjugate of the subgroup contains an element of the given cycle type.
#[pyfunction]
fn contains_type(n: usize, descriptor: &str, cycle_type: &str) -> PyResult<bool> {
    let d = SubgroupDescriptor::parse(n, descriptor).map_err(err)?;
    let t: CycleType = cycle_type.parse().map_err(err)?;
    core_contains_type(&d, &t).map_err(err)
}

/// Conjugacy classes of the group met by the subgroup, as strings such as "[5,3,1]+".
#[pyfunction]
#[pyo3(signature = (n, descriptor, group = "sym"))]
fn classes_met(n: usize, descriptor: &str, group: &str) -> PyResult<Vec<String>> {
    let d = SubgroupDescriptor::parse(n, descriptor).map_err(err)?;
    let cov = class_coverage(&d, group_id(n, group)?).map_err(err)?;
    Ok(cov.iter().map(ToString::to_string).collect())
}

/// Cycle types in U, T or T'(I); parts listed largest first.
#[pyfunction]
#[pyo3(signature = (n, family, interval = None))]
fn cycle_types(n: usize, family: &str, interval: Option<&str>) -> PyResult<Vec<Vec<u32>>> {
    let list = match family {
        "u" | "U" => u_set(n),
        "t" | "T" => t_set(n),
        "t_prime" | "T'" => {
            let i: Interval = match interval {
                Some(s) => s.parse(),
                None => format!("[1,{}/2)", n / 3).parse(),
            }
            .map_err(err)?;
            t_prime_set(n, &i)
        }
        other => return Err(PyValueError::new_err(format!("family must be u, t or t_prime, got {other:?}"))),
    }
    .map_err(err)?;
    Ok(list.iter().map(|t| t.parts().to_vec()).collect())
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    numtheory::euler_phi(n).map_err(err)
}

/// Integers in the interval, given like "[1,7/2)", that are coprime to n.
#[pyfunction]
fn phi_interval(interval: &str, n: u64) -> PyResult<u64> {
    let i: Interval = interval.parse().map_err(err)?;
    numtheory::phi_interval(&i, n).map_err(err)
}

#[pymodule]
pub fn nck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(small_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(contains_type, m)?)?;
    m.add_function(wrap_pyfunction!(classes_met, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_types, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_interval, m)?)?;
    Ok(())
}
