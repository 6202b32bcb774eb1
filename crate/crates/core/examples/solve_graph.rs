// Exact Grundy domination number of a few small graphs, with and without the memo table.

use grundy::generators::{make_cycle, make_path, random_graph};
use grundy::io::parse_edge_list;
use grundy::solver::{grundy_domination_number, SolverConfig};

pub fn run_example() -> grundy::Result<()> {
    let petersen = parse_edge_list(
        "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n",
    )?;
    let graphs = [
        ("P6", make_path(6)?),
        ("C7", make_cycle(7)?),
        ("petersen", petersen),
        ("G(14, 0.3)", random_graph(14, 0.3, 7)?),
    ];
    for (name, g) in &graphs {
        let memo = grundy_domination_number(g, &SolverConfig::default())?;
        let plain = grundy_domination_number(g, &SolverConfig::default().without_memo())?;
        assert_eq!(memo.witness, plain.witness);
        println!(
            "{name:>11}: n={:<2} gamma_gr={:<2} witness=({}) states memo/plain={}/{}",
            g.n(),
            memo.gamma_gr,
            memo.witness,
            memo.stats.explored_states,
            plain.stats.explored_states,
        );
    }

    // a tiny budget aborts with the best sequence found so far
    match grundy_domination_number(&graphs[3].1, &SolverConfig::default().with_budget(20)) {
        Err(grundy::Error::BudgetExhausted(p)) => println!("budget 20: lower bound {}", p.best_length),
        other => println!("budget 20: {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
