// Linear-time sweep on interval models, checked against the exact solver.

use grundy::interval::{
    build_endpoint_sequence, count_ab_pairs, grundy_interval, intersection_graph, random_interval_model,
    IntervalModel, IntervalSampling,
};
use grundy::solver::{grundy_domination_number, SolverConfig};

pub fn run_example() -> grundy::Result<()> {
    let m = IntervalModel::from_integers(&[(0, 2), (-1, 4), (1, 5), (3, 7), (6, 8)])?;
    let e = build_endpoint_sequence(&m);
    println!("endpoints: {e}");
    let s = grundy_interval(&m);
    let named: Vec<String> = s.iter().map(|v| format!("v{}", v + 1)).collect();
    println!("sequence: {} (ab pairs: {})", named.join(" "), count_ab_pairs(&e));

    let mut agree = 0;
    for seed in 0..50 {
        let sampling = if seed % 2 == 0 {
            IntervalSampling::Grid { max: 8 }
        } else {
            IntervalSampling::Continuous
        };
        let m = random_interval_model(3 + seed as usize % 10, seed, sampling);
        let exact = grundy_domination_number(&intersection_graph(&m), &SolverConfig::default())?;
        if exact.gamma_gr == grundy_interval(&m).len() {
            agree += 1;
        }
    }
    println!("sweep agrees with exact solver on {agree}/50 random models");

    let big = random_interval_model(200_000, 1, IntervalSampling::Continuous);
    let t = std::time::Instant::now();
    let len = grundy_interval(&big).len();
    println!("200000 intervals: gamma_gr {len} in {:?}", t.elapsed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
