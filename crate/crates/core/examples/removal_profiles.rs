// How single edge and vertex deletions move the Grundy domination number.

use grundy::generators::{make_h_family, Role};
use grundy::removal::{check_simplicial_twin, edge_removal_profile, vertex_removal_profile};
use grundy::solver::SolverConfig;

pub fn run_example() -> grundy::Result<()> {
    let cfg = SolverConfig::default();
    let h = make_h_family(5, 4)?;

    let edges = edge_removal_profile(&h.graph, &cfg)?.with_roles(&h);
    println!("{} (gamma_gr {}), edge deletions:", h.name, edges.base_gamma);
    for r in &edges.records {
        println!("  {:<6} {:<20} {:+}", r.element.to_string(), r.role.map_or("-".into(), |x| x.to_string()), r.delta);
    }

    let vertices = vertex_removal_profile(&h.graph, &cfg)?.with_roles(&h);
    for role in [Role::PathEnd, Role::EndNeighbor, Role::InteriorPath, Role::Identified, Role::CycleVertex] {
        println!("  vertex role {role}: deltas {:?}", vertices.deltas_for(role));
    }

    let report = check_simplicial_twin(&h.graph, &cfg)?;
    for e in &report.entries {
        println!("  vertex {} simplicial={} twin={} delta={:+}", e.vertex, e.simplicial, e.twin, e.delta);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
