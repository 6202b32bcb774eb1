//! End-to-end checks run by `grundy accept` and by the `acceptance` test target.
//!
//! Each criterion either passes, fails (a wrong value, which is a bug), or aborts (the solver ran
//! out of its state budget, which is a resource limit). The three are reported separately.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::generators::{make_g_family, make_h_family, random_graph, Role};
use crate::graph::Graph;
use crate::interval::{
    build_endpoint_sequence, count_ab_pairs, grundy_interval, intersection_graph, random_interval_model,
    IntervalModel, IntervalSampling,
};
use crate::removal::{check_k_edge_bound, check_simplicial_twin, edge_removal_profile, vertex_removal_profile};
use crate::sequence::{check_legal, is_dominating};
use crate::sierpinski::{a_sequence, build_sierpinski, decompose, grundy_formula, l_sequence};
use crate::solver::{grundy_brute_force, grundy_domination_number, SolverConfig};

pub const SCHEMA: &str = "grundy.acceptance/v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub budget: Option<u64>,
    pub random_graphs: usize,
    pub max_random_n: usize,
    pub interval_models: usize,
    pub max_interval_n: usize,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            seed: 2017,
            budget: None,
            random_graphs: 100,
            max_random_n: 10,
            interval_models: 200,
            max_interval_n: 12,
        }
    }
}

impl AcceptanceConfig {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            budget: self.budget,
            ..SolverConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Aborted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcceptanceReport {
    pub schema: String,
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
}

impl AcceptanceReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_aborted(&self) -> bool {
        self.criteria.iter().any(|c| c.status == Status::Aborted)
    }

    pub fn get(&self, id: u32) -> Option<&CriterionResult> {
        self.criteria.iter().find(|c| c.id == id)
    }
}

/// A failed check inside a criterion.
enum Outcome {
    Failed(String),
    Aborted(String),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Outcome::Aborted(e.to_string()),
            other => Outcome::Failed(other.to_string()),
        }
    }
}

type Check = std::result::Result<String, Outcome>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(Outcome::Failed(format!($($fmt)+)));
        }
    };
}

/// Seeded random graph corpus with `n` in `1..=max_n` and edge probability in `[0.1, 0.9]`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..=0.9);
            random_graph(n, p, rng.gen()).expect("probability in range")
        })
        .collect()
}

/// Seeded interval models alternating between integer-grid and continuous endpoints.
pub fn interval_corpus(seed: u64, count: usize, max_n: usize) -> Vec<IntervalModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            let sampling = if i % 2 == 0 {
                IntervalSampling::Grid {
                    max: rng.gen_range(2..=8),
                }
            } else {
                IntervalSampling::Continuous
            };
            random_interval_model(n, rng.gen(), sampling)
        })
        .collect()
}

/// The five intervals `[0,2], [-1,4], [1,5], [3,7], [6,8]`.
pub fn five_interval_model() -> IntervalModel {
    IntervalModel::from_integers(&[(0, 2), (-1, 4), (1, 5), (3, 7), (6, 8)]).expect("valid intervals")
}

fn sierpinski_vs_solver(cfg: &AcceptanceConfig) -> Check {
    let cases = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1)];
    for (p, n) in cases {
        let s = build_sierpinski(p, n)?;
        let got = grundy_domination_number(&s.graph, &cfg.solver())?.gamma_gr as u64;
        let want = grundy_formula(p as u64, n)?;
        ensure!(got == want, "S({p},{n}): solver {got}, formula {want}");
    }
    Ok(format!("{} graphs agree", cases.len()))
}

fn sierpinski_sequences() -> Check {
    let mut checked = 0;
    for p in 1..=5u32 {
        for n in 1..=5u32 {
            let s = build_sierpinski(p, n)?;
            let want = grundy_formula(p as u64, n)? as usize;
            for (name, seq) in [("A", a_sequence(p, n)?), ("L", l_sequence(p, n)?)] {
                let vs = seq.to_vertex_sequence();
                let report = check_legal(&s.graph, &vs)?;
                ensure!(report.legal, "{name}({p},{n}) illegal at position {:?}", report.first_illegal);
                ensure!(
                    is_dominating(&s.graph, &vs.to_set(s.graph.n())),
                    "{name}({p},{n}) does not dominate"
                );
                ensure!(vs.len() == want, "{name}({p},{n}) has length {}, expected {want}", vs.len());
                checked += 1;
            }
        }
    }
    let a33: Vec<String> = a_sequence(3, 3)?.labels().iter().take(9).map(ToString::to_string).collect();
    let prefix = ["000", "001", "002", "010", "012", "020", "011", "022", "100"];
    ensure!(a33 == prefix, "A(3,3) starts {a33:?}");
    ensure!(a_sequence(3, 3)?.len() == 21, "A(3,3) length");
    Ok(format!("{checked} sequences legal, dominating and of formula length"))
}

fn interval_vs_solver(cfg: &AcceptanceConfig) -> Check {
    let models = interval_corpus(cfg.seed ^ 0x1e7a, cfg.interval_models, cfg.max_interval_n);
    for (i, m) in models.iter().enumerate() {
        let g = intersection_graph(m);
        let got = grundy_interval(m).len();
        let want = grundy_domination_number(&g, &cfg.solver())?.gamma_gr;
        ensure!(got == want, "model {i}: sweep gives {got}, solver {want}");
    }
    Ok(format!("{} models agree", models.len()))
}

fn five_interval_example() -> Check {
    let m = five_interval_model();
    let e = build_endpoint_sequence(&m);
    ensure!(e.to_string() == "a2 a1 a3 b1 a4 b2 b3 a5 b4 b5", "endpoint sequence {e}");
    let s = grundy_interval(&m);
    ensure!(s.as_slice() == [0, 1, 3], "sequence {s}");
    ensure!(count_ab_pairs(&e) == 3, "pair count {}", count_ab_pairs(&e));
    Ok("endpoints, sequence (v1, v2, v4) and pair count 3 reproduced".into())
}

fn removal_bounds(cfg: &AcceptanceConfig) -> Check {
    let corpus = random_corpus(cfg.seed, cfg.random_graphs, cfg.max_random_n);
    let (mut edges, mut vertices) = (0, 0);
    for g in &corpus {
        let ep = edge_removal_profile(g, &cfg.solver())?;
        ensure!(ep.records.iter().all(|r| (-1..=1).contains(&r.delta)), "edge delta out of range");
        let vp = vertex_removal_profile(g, &cfg.solver())?;
        ensure!(vp.records.iter().all(|r| (-2..=0).contains(&r.delta)), "vertex delta out of range");
        edges += ep.records.len();
        vertices += vp.records.len();
    }
    Ok(format!("{edges} edge and {vertices} vertex deletions within bounds"))
}

fn extremal_families(cfg: &AcceptanceConfig) -> Check {
    let h = make_h_family(5, 4)?;
    let ep = edge_removal_profile(&h.graph, &cfg.solver())?.with_roles(&h);
    ensure!(ep.base_gamma == 6, "gamma(H(5,4)) = {}", ep.base_gamma);
    for (role, want) in [(Role::CycleEdge, 1), (Role::PendantEdge, 0), (Role::InteriorPathEdge, -1)] {
        ensure!(ep.deltas_for(role) == [want], "H(5,4) {role}: deltas {:?}", ep.deltas_for(role));
    }
    let g = make_g_family(5, 3)?;
    let vp = vertex_removal_profile(&g.graph, &cfg.solver())?.with_roles(&g);
    ensure!(vp.base_gamma == 5, "gamma(G(5,3)) = {}", vp.base_gamma);
    for (role, want) in [
        (Role::PathEnd, -1),
        (Role::EndNeighbor, -1),
        (Role::Identified, -1),
        (Role::CliqueVertex, 0),
        (Role::InteriorPath, -2),
    ] {
        ensure!(vp.deltas_for(role) == [want], "G(5,3) {role}: deltas {:?}", vp.deltas_for(role));
    }
    Ok("H(5,4) edge roles and G(5,3) vertex roles match".into())
}

fn simplicial_twin(cfg: &AcceptanceConfig) -> Check {
    let corpus = random_corpus(cfg.seed, cfg.random_graphs, cfg.max_random_n);
    let (mut simplicial, mut twins) = (0, 0);
    for g in &corpus {
        let r = check_simplicial_twin(g, &cfg.solver())?;
        for e in &r.entries {
            ensure!(!e.twin || e.delta == 0, "twin vertex {} has delta {}", e.vertex, e.delta);
            ensure!(!e.simplicial || e.delta >= -1, "simplicial vertex {} has delta {}", e.vertex, e.delta);
            simplicial += e.simplicial as usize;
            twins += e.twin as usize;
        }
    }
    Ok(format!("{simplicial} simplicial and {twins} twin deletions checked"))
}

fn k_edge_tightness(cfg: &AcceptanceConfig) -> Check {
    let (copies, links) = decompose(3, 2)?;
    let r = check_k_edge_bound(&copies, &links, &cfg.solver())?;
    ensure!(
        r.gamma_before == 3 && r.gamma_after == 6 && r.delta == 3 && r.k == 3,
        "3 K3 + 3 links: {} -> {} with k = {}",
        r.gamma_before,
        r.gamma_after,
        r.k
    );
    Ok("3 -> 6 with k = 3".into())
}

/// Seconds per call, best of five samples of at least 5 ms each.
fn time_per_call(f: impl Fn()) -> f64 {
    let mut reps = 1u32;
    loop {
        let t = Instant::now();
        for _ in 0..reps {
            f();
        }
        if t.elapsed() >= Duration::from_millis(5) || reps >= 1 << 20 {
            break;
        }
        reps *= 2;
    }
    (0..5)
        .map(|_| {
            let t = Instant::now();
            for _ in 0..reps {
                f();
            }
            t.elapsed().as_secs_f64() / reps as f64
        })
        .fold(f64::INFINITY, f64::min)
}

fn generation_scaling() -> Check {
    let t = Instant::now();
    let big = a_sequence(3, 9)?;
    let single = t.elapsed();
    let want = grundy_formula(3, 9)? as usize;
    ensure!(big.len() == want && big.digit_count() == 9 * want, "A(3,9) size {}", big.len());
    ensure!(single < Duration::from_secs(1), "A(3,9) took {single:?}");

    let per_unit: Vec<f64> = (5..=9u32)
        .map(|n| {
            let secs = time_per_call(|| {
                std::hint::black_box(a_sequence(3, n).expect("small parameters"));
            });
            secs / (n as f64 * 3f64.powi(n as i32))
        })
        .collect();
    let max = per_unit.iter().cloned().fold(f64::MIN, f64::max);
    let min = per_unit.iter().cloned().fold(f64::MAX, f64::min);
    let ratio = max / min;
    ensure!(ratio <= 3.0, "time / (n p^n) varies by {ratio:.2}x across n = 5..9");
    Ok(format!("A(3,9) in {single:?}; time/(n p^n) spread {ratio:.2}x"))
}

fn memo_soundness(cfg: &AcceptanceConfig) -> Check {
    let mut corpus = random_corpus(cfg.seed ^ 0x5eed, cfg.random_graphs, 12);
    corpus.extend(random_corpus(cfg.seed, cfg.random_graphs, cfg.max_random_n));
    let (mut memo_checked, mut brute_checked) = (0, 0);
    for g in &corpus {
        let memo = grundy_domination_number(g, &cfg.solver())?;
        let plain = grundy_domination_number(g, &cfg.solver().without_memo())?;
        ensure!(memo.gamma_gr == plain.gamma_gr, "memo {} vs plain {} on {g:?}", memo.gamma_gr, plain.gamma_gr);
        memo_checked += 1;
        if g.n() <= 10 {
            let brute = grundy_brute_force(g)?;
            ensure!(memo.gamma_gr == brute.gamma_gr, "solver {} vs brute force {} on {g:?}", memo.gamma_gr, brute.gamma_gr);
            brute_checked += 1;
        }
    }
    Ok(format!("{memo_checked} memo/plain and {brute_checked} solver/brute-force agreements"))
}

fn run_one(id: u32, name: &str, check: impl FnOnce() -> Check) -> CriterionResult {
    let start = Instant::now();
    let (status, detail) = match check() {
        Ok(detail) => (Status::Pass, detail),
        Err(Outcome::Failed(d)) => (Status::Fail, d),
        Err(Outcome::Aborted(d)) => (Status::Aborted, d),
    };
    CriterionResult {
        id,
        name: name.to_string(),
        status,
        detail,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs every criterion in order.
pub fn run_acceptance_suite(cfg: &AcceptanceConfig) -> AcceptanceReport {
    run_selected(cfg, &(1..=10).collect::<Vec<_>>())
}

/// Runs the criteria with the given ids (1 through 10).
pub fn run_selected(cfg: &AcceptanceConfig, ids: &[u32]) -> AcceptanceReport {
    let mut criteria = Vec::new();
    for &id in ids {
        let result = match id {
            1 => run_one(id, "sierpinski formula vs exact solver", || sierpinski_vs_solver(cfg)),
            2 => run_one(id, "A and L sequences valid up to S(5,5)", sierpinski_sequences),
            3 => run_one(id, "interval sweep vs exact solver", || interval_vs_solver(cfg)),
            4 => run_one(id, "five-interval example reproduced", five_interval_example),
            5 => run_one(id, "edge and vertex removal bounds", || removal_bounds(cfg)),
            6 => run_one(id, "extremal families by role", || extremal_families(cfg)),
            7 => run_one(id, "simplicial and twin vertex removal", || simplicial_twin(cfg)),
            8 => run_one(id, "k-edge bound tight on S(3,2)", || k_edge_tightness(cfg)),
            9 => run_one(id, "A sequence generation scaling", generation_scaling),
            10 => run_one(id, "memoization and brute-force agreement", || memo_soundness(cfg)),
            _ => continue,
        };
        criteria.push(result);
    }
    AcceptanceReport {
        schema: SCHEMA.to_string(),
        seed: cfg.seed,
        criteria,
    }
}

impl AcceptanceReport {
    /// One line per criterion.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Aborted => "ABORT",
            };
            out.push_str(&format!("[{tag}] {:>2} {} ({:.1} ms): {}\n", c.id, c.name, c.elapsed_ms, c.detail));
        }
        out
    }
}

/// Exit code for a finished suite: 0 all pass, 2 if anything aborted and nothing failed, 3 otherwise.
pub fn exit_code(report: &AcceptanceReport) -> i32 {
    if report.all_passed() {
        0
    } else if report.criteria.iter().any(|c| c.status == Status::Fail) {
        3
    } else {
        2
    }
}
