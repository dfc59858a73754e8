use pyo3::prelude::*;
use recosc::recosc as module;

#[test]
fn module_functions() {
    pyo3::append_to_inittab!(module);
    Python::initialize();
    Python::attach(|py| {
        let m = py.import("recosc").unwrap();
        let kind: String = m.call_method1("classify", (vec!["1", "1"], vec!["0", "1"])).unwrap().extract().unwrap();
        assert_eq!(kind, "eventually_positive");
        let s: String = m.call_method1("signs", (vec!["-2"], vec!["1"], 4)).unwrap().extract().unwrap();
        assert_eq!(s, "+-+-");
        let w: Option<(String, String)> = m.call_method1("empty_square_witness", (1, 7, 3, 7)).unwrap().extract().unwrap();
        assert_eq!(w, None);
        let e = m.call_method1("classify", (vec!["2/4"], vec!["1"])).unwrap_err();
        assert!(e.is_instance_of::<pyo3::exceptions::PyValueError>(py));
    });
}
