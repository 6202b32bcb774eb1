mod solve_graph {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve_graph.rs"));
}

mod verify_sequence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_sequence.rs"));
}

mod sierpinski_sequences {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sierpinski_sequences.rs"));
}

mod interval_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/interval_sweep.rs"));
}

mod removal_profiles {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/removal_profiles.rs"));
}

mod extremal_families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/extremal_families.rs"));
}

mod k_edge_bound {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/k_edge_bound.rs"));
}

#[test]
fn solve_graph_example_runs() {
    solve_graph::run_example().expect("solve_graph example should run");
}

#[test]
fn verify_sequence_example_runs() {
    verify_sequence::run_example().expect("verify_sequence example should run");
}

#[test]
fn sierpinski_sequences_example_runs() {
    sierpinski_sequences::run_example().expect("sierpinski_sequences example should run");
}

#[test]
fn interval_sweep_example_runs() {
    interval_sweep::run_example().expect("interval_sweep example should run");
}

#[test]
fn removal_profiles_example_runs() {
    removal_profiles::run_example().expect("removal_profiles example should run");
}

#[test]
fn extremal_families_example_runs() {
    extremal_families::run_example().expect("extremal_families example should run");
}

#[test]
fn k_edge_bound_example_runs() {
    k_edge_bound::run_example().expect("k_edge_bound example should run");
}
