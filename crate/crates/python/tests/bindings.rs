use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn with_module<F: FnOnce(&Bound<'_, PyModule>)>(f: F) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "oddcolour_py").unwrap();
        oddcolour_py::register(&m).unwrap();
        f(&m);
    });
}

fn eval<'py>(m: &Bound<'py, PyModule>, code: &str) -> Bound<'py, PyAny> {
    let py = m.py();
    let globals = PyDict::new(py);
    globals.set_item("oc", m).unwrap();
    py.eval(&std::ffi::CString::new(code).unwrap(), Some(&globals), None).unwrap()
}

#[test]
fn chi_odd_and_solve() {
    with_module(|m| {
        assert_eq!(eval(m, "oc.chi_odd(oc.catalog('C5'))").extract::<usize>().unwrap(), 5);
        assert!(eval(m, "oc.solve(oc.catalog('C5'), 4)").is_none());
        let c: Vec<usize> = eval(m, "oc.solve(oc.catalog('C5'), 5)").extract().unwrap();
        assert_eq!(c.len(), 5);
        assert!(eval(m, "oc.is_odd_colouring(oc.catalog('C4'), [0, 1, 2, 3])").extract::<bool>().unwrap());
        assert!(!eval(m, "oc.is_odd_colouring(oc.catalog('C4'), [0, 1, 0, 1])").extract::<bool>().unwrap());
    });
}

#[test]
fn graph_methods() {
    with_module(|m| {
        let g = eval(m, "oc.Graph(4, [(0, 1), (1, 2), (2, 3)])");
        assert_eq!(g.getattr("order").unwrap().extract::<usize>().unwrap(), 4);
        assert_eq!(g.call_method0("to_graph6").unwrap().extract::<String>().unwrap(), "Ch");
        assert_eq!(eval(m, "oc.Graph.from_graph6('C~').degree(0)").extract::<usize>().unwrap(), 3);
        assert!(!eval(m, "oc.catalog('K5').is_planar()").extract::<bool>().unwrap());
        assert_eq!(eval(m, "repr(oc.catalog('octahedron'))").extract::<String>().unwrap(), "Graph(order=6, edges=12)");
    });
}

#[test]
fn planar_functions() {
    with_module(|m| {
        let c: Vec<usize> = eval(m, "oc.colour8(oc.random_triangulation(30, 5))").extract().unwrap();
        assert_eq!(c.len(), 30);
        assert!(eval(m, "oc.is_odd_colouring(oc.random_triangulation(30, 5), oc.colour8(oc.random_triangulation(30, 5)))")
            .extract::<bool>()
            .unwrap());
        assert_eq!(eval(m, "oc.discharge(oc.catalog('octahedron'))['total_after']").extract::<i64>().unwrap(), -48);
        assert!(eval(m, "oc.audit(oc.catalog('octahedron'))['confirmed']").extract::<bool>().unwrap());
        assert!(eval(m, "len(oc.odd_forest_partition(oc.catalog('octahedron'))) <= 4").extract::<bool>().unwrap());
    });
}

#[test]
fn errors_map_to_python_exceptions() {
    with_module(|m| {
        let py = m.py();
        let globals = PyDict::new(py);
        globals.set_item("oc", m).unwrap();
        let err = py.eval(c"oc.catalog('nope')", Some(&globals), None).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        let err = py.eval(c"oc.solve(oc.catalog('icosahedron'), 4, 3)", Some(&globals), None).unwrap_err();
        assert!(err.is_instance(py, &m.getattr("BudgetExhausted").unwrap().cast_into().unwrap()));
        let err = py.eval(c"oc.colour8(oc.catalog('K5'))", Some(&globals), None).unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
    });
}
