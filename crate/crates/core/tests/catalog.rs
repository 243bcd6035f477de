use jordan_flow::algebra::{act, direct_product, flags, regular_representation, trivial, StructureTensor};
use jordan_flow::catalog::{all, builtin, entry_fingerprint, fingerprint, match_tensor, reproduce_tables, Status};
use jordan_flow::flow::{random_group_element, run_flow, FlowOptions};
use jordan_flow::moment::{moment_map, soliton_check, soliton_type, SOLITON_TOL};
use jordan_flow::rational::fmt_rational;

fn show_failures(report: &jordan_flow::catalog::ReproduceReport) {
    for r in report.failures() {
        eprintln!("{} {:?} {:?} {:.3e} {:?}", r.name, r.label.as_ref().map(|l| l.to_string()), r.beta, r.residual, r.notes);
    }
}

#[test]
fn low_dimensions_reproduce() {
    let report = reproduce_tables(&[1, 2, 3], 0, &FlowOptions::default()).unwrap();
    show_failures(&report);
    assert_eq!(report.rows.len(), 25);
    assert!(report.passed());
    assert_eq!(report.distinct_strata(), 11);
}

#[test]
fn dimension_four_reproduces() {
    let report = reproduce_tables(&[4], 0, &FlowOptions::default()).unwrap();
    show_failures(&report);
    assert_eq!(report.rows.len(), 72);
    assert!(report.passed());
    assert_eq!(report.rows.iter().filter(|r| r.soliton).count(), 71);
    assert_eq!(report.distinct_strata(), 19);
    let a463 = report.rows.iter().find(|r| r.name == "A_4_63").unwrap();
    assert_eq!(a463.status, Status::Pass);
    assert_eq!(a463.label.as_ref().unwrap().beta_text(), vec!["-1", "-1/2", "0", "1/2"]);
    assert!((a463.energy - 1.5).abs() < 1e-6);
    let erratum = report.rows.iter().find(|r| r.name == "A_4_40").unwrap();
    assert!(erratum.notes.iter().any(|n| n.contains("misprinted")));
}

#[test]
fn flags_agree_up_to_errata() {
    for e in all() {
        let diff = e.flags.diff(&flags(&e.tensor));
        let errata = e.flag_errata();
        assert!(diff.iter().all(|f| errata.contains(f)), "{} {:?}", e.name, diff);
        assert_eq!(diff.len(), errata.len(), "{}", e.name);
    }
}

#[test]
fn approximate_entries_refine() {
    for (name, e) in [("A_4_16", "1/2"), ("A_4_17", "1/2"), ("A_4_25", "5/11")] {
        let entry = builtin(name).unwrap();
        assert!(entry.approximate);
        let raw = soliton_check(&entry.tensor, SOLITON_TOL).unwrap();
        assert!(raw.soliton_residual < 1e-3, "{name}");
        let t = entry.soliton_tensor().unwrap();
        let rep = soliton_check(&t, SOLITON_TOL).unwrap();
        assert!(rep.soliton_residual < 1e-8, "{name} {}", rep.soliton_residual);
        assert_eq!(fmt_rational(&soliton_type(&t).unwrap().energy), e);
    }
}

#[test]
fn fingerprint_is_invariant() {
    let a37 = builtin("A_3_7").unwrap().tensor;
    let f0 = fingerprint(&a37).unwrap();
    for seed in 0..3 {
        let g = random_group_element(3, seed);
        let f = fingerprint(&act(&g, &a37).unwrap()).unwrap();
        assert!(f.matches(&f0), "{seed}");
    }
}

#[test]
fn matching() {
    let a11 = builtin("A_1_1").unwrap().tensor;
    let mut p = a11.clone();
    for _ in 0..3 {
        p = direct_product(&p, &a11);
    }
    assert!(match_tensor(&p).unwrap().contains(&"A_4_3".to_string()));
    let limit = run_flow(&builtin("A_4_63").unwrap().tensor, &FlowOptions::default()).unwrap().terminal;
    let names = match_tensor(&limit).unwrap();
    assert!(!names.contains(&"A_4_63".to_string()));
    assert!(names.contains(&"A_4_64".to_string()), "{names:?}");
    assert!(!entry_fingerprint("A_4_63").unwrap().matches(&fingerprint(&limit).unwrap()));
}

#[test]
fn decompositions_match_fingerprints() {
    for e in all() {
        let Some(parts) = &e.decomposition else { continue };
        let mut t: Option<StructureTensor> = None;
        for p in parts {
            let f = if p == "T" { trivial(1) } else { builtin(p).unwrap().tensor };
            t = Some(match t {
                None => f,
                Some(acc) => direct_product(&acc, &f),
            });
        }
        let names = match_tensor(&t.unwrap()).unwrap();
        assert!(names.contains(&e.name), "{} {:?}", e.name, names);
    }
}

#[test]
fn regular_representation_of_a24() {
    let rr = regular_representation(&builtin("A_2_4").unwrap().tensor);
    let m = moment_map(&rr).unwrap();
    let trace = run_flow(&rr, &FlowOptions::default()).unwrap();
    let ty = trace.terminal_type.unwrap();
    assert_eq!(ty, builtin("A_4_22").unwrap().expected_type.unwrap());
    assert!(match_tensor(&rr).unwrap().contains(&"A_4_22".to_string()));
    // The moment map is not scalar: the stratum is (0<1;2,2), not (0;4).
    assert!((m[(0, 0)] - m[(2, 2)]).norm() > 0.1);
}
