// Adding k edges changes the Grundy domination number by at most k.

use grundy::generators::random_graph;
use grundy::removal::check_k_edge_bound;
use grundy::solver::SolverConfig;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> grundy::Result<()> {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = [0i64; 5];
    for seed in 0..40 {
        let g = random_graph(10, 0.25, seed)?;
        let mut missing: Vec<_> = (0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        missing.shuffle(&mut rng);
        for k in 1..worst.len() {
            let r = check_k_edge_bound(&g, &missing[..k.min(missing.len())], &cfg)?;
            worst[k] = worst[k].max(r.delta.abs());
        }
    }
    for (k, w) in worst.iter().enumerate().skip(1) {
        println!("k={k}: largest |change| seen {w}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
