mod algebra_invariants_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/algebra_invariants.rs"));
}

#[test]
fn algebra_invariants_example_runs() {
    algebra_invariants_example::run_example().expect("algebra invariants example should run");
}

mod moment_soliton_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/moment_soliton.rs"));
}

#[test]
fn moment_soliton_example_runs() {
    moment_soliton_example::run_example().expect("moment soliton example should run");
}

mod energy_flow_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/energy_flow.rs"));
}

#[test]
fn energy_flow_example_runs() {
    energy_flow_example::run_example().expect("energy flow example should run");
}

mod degeneration_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/degeneration.rs"));
}

#[test]
fn degeneration_example_runs() {
    degeneration_example::run_example().expect("degeneration example should run");
}

mod strata_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/strata.rs"));
}

#[test]
fn strata_example_runs() {
    strata_example::run_example().expect("strata example should run");
}

mod catalog_tables_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalog_tables.rs"));
}

#[test]
fn catalog_tables_example_runs() {
    catalog_tables_example::run_example().expect("catalog tables example should run");
}

mod constructions_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/constructions.rs"));
}

#[test]
fn constructions_example_runs() {
    constructions_example::run_example().expect("constructions example should run");
}

mod tensor_json_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tensor_json.rs"));
}

#[test]
fn tensor_json_example_runs() {
    tensor_json_example::run_example().expect("tensor json example should run");
}

mod fingerprints_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fingerprints.rs"));
}

#[test]
fn fingerprints_example_runs() {
    fingerprints_example::run_example().expect("fingerprints example should run");
}
