// The two path-plus-cycle / path-plus-clique families and their extreme removal behaviour.

use grundy::generators::{make_g_family, make_h_family, Role};
use grundy::removal::{edge_removal_profile, vertex_removal_profile};
use grundy::solver::SolverConfig;

pub fn run_example() -> grundy::Result<()> {
    let cfg = SolverConfig::default();
    for (m, n) in [(3, 3), (4, 5), (6, 4)] {
        let h = make_h_family(m, n)?;
        let p = edge_removal_profile(&h.graph, &cfg)?.with_roles(&h);
        println!(
            "{}: gamma_gr {} (m+n-3 = {}), pendant edge delta {:?}",
            h.name,
            p.base_gamma,
            m + n - 3,
            p.deltas_for(Role::PendantEdge)
        );
    }
    for (m, n) in [(4, 3), (5, 4), (7, 3)] {
        let g = make_g_family(m, n)?;
        let p = vertex_removal_profile(&g.graph, &cfg)?.with_roles(&g);
        println!(
            "{}: gamma_gr {} (m = {m}), end-neighbour vertex delta {:?}",
            g.name,
            p.base_gamma,
            p.deltas_for(Role::EndNeighbor)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
