//! Exact Grundy domination number by depth-first search over dominated sets.
//!
//! Whether `v` is a legal next move depends only on the set `D` of vertices already dominated
//! (`N[v] ⊄ D`), and a chosen vertex can never be chosen again because its closed
//! neighbourhood is then inside `D`. So the longest legal continuation from a position is a
//! function of `D` alone:
//!
//! ```text
//! best(V) = 0
//! best(D) = max { 1 + best(D ∪ N[v]) : N[v] ⊄ D }
//! ```
//!
//! and `γ_gr(G) = best(∅)`. The memo table maps `D` (one `u64`) to `best(D)`, which is at most
//! `2^n` entries. Remaining length is bounded by both the number of undominated vertices and the
//! number of legal moves; a branch loop stops once that bound is met.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::VertexSequence;

/// Largest graph the bitmask search can represent.
pub const HARD_VERTEX_LIMIT: usize = 64;
pub const DEFAULT_MAX_VERTICES: usize = 24;
pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exploration {
    /// Increasing vertex index.
    #[default]
    Index,
    /// Decreasing degree, ties by index.
    DegreeDescending,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_vertices: usize,
    /// Maximum number of distinct states (memo insertions, or search nodes without memo).
    pub budget: Option<u64>,
    pub memo: bool,
    pub exploration: Exploration,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            budget: None,
            memo: true,
            exploration: Exploration::Index,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn without_memo(mut self) -> Self {
        self.memo = false;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub explored_states: u64,
    pub elapsed: Duration,
}

/// An exact answer: `witness` is a legal dominating sequence of length `gamma_gr`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub gamma_gr: usize,
    pub witness: VertexSequence,
    pub stats: SolveStats,
}

/// What was known when the budget ran out. `best_length` is a lower bound only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialSolve {
    pub best_length: usize,
    pub witness: VertexSequence,
    pub stats: SolveStats,
}

struct Aborted;

struct Search<'a> {
    closed: Vec<u64>,
    order: &'a [usize],
    full: u64,
    budget: Option<u64>,
    memo: HashMap<u64, u8>,
    explored: u64,
    path: Vec<usize>,
    best_path: Vec<usize>,
}

impl Search<'_> {
    fn legal_moves(&self, dominated: u64) -> impl Iterator<Item = usize> + '_ {
        self.order
            .iter()
            .copied()
            .filter(move |&v| self.closed[v] & !dominated != 0)
    }

    fn upper_bound(&self, dominated: u64) -> u32 {
        let undominated = (self.full & !dominated).count_ones();
        let legal = self.legal_moves(dominated).count() as u32;
        undominated.min(legal)
    }

    fn record_leaf(&mut self) {
        if self.path.len() > self.best_path.len() {
            self.best_path.clone_from(&self.path);
        }
    }

    /// Memoized `best(D)`.
    fn best(&mut self, dominated: u64) -> Result<u32, Aborted> {
        if dominated == self.full {
            self.record_leaf();
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&dominated) {
            return Ok(v as u32);
        }
        if self.budget.is_some_and(|b| self.memo.len() as u64 >= b) {
            return Err(Aborted);
        }
        let bound = self.upper_bound(dominated);
        let moves: Vec<usize> = self.legal_moves(dominated).collect();
        let mut best = 0;
        for v in moves {
            self.path.push(v);
            let r = self.best(dominated | self.closed[v]);
            self.path.pop();
            best = best.max(1 + r?);
            if best == bound {
                break;
            }
        }
        self.memo.insert(dominated, best as u8);
        self.explored = self.memo.len() as u64;
        Ok(best)
    }

    /// Lexicographically first optimal sequence with respect to the exploration order.
    fn reconstruct(&mut self) -> Result<Vec<usize>, Aborted> {
        let mut dominated = 0u64;
        let mut out = Vec::new();
        let mut remaining = self.best(0)?;
        while remaining > 0 {
            let moves: Vec<usize> = self.legal_moves(dominated).collect();
            let mut next = None;
            for v in moves {
                if self.best(dominated | self.closed[v])? + 1 == remaining {
                    next = Some(v);
                    break;
                }
            }
            let v = next.expect("memo values are exact, so some move attains the optimum");
            out.push(v);
            dominated |= self.closed[v];
            remaining -= 1;
        }
        Ok(out)
    }

    /// Plain branch and bound without a memo table; `best_path` holds the answer.
    fn exhaust(&mut self, dominated: u64) -> Result<(), Aborted> {
        self.explored += 1;
        if self.budget.is_some_and(|b| self.explored > b) {
            return Err(Aborted);
        }
        if dominated == self.full {
            self.record_leaf();
            return Ok(());
        }
        let bound = self.upper_bound(dominated) as usize;
        if self.path.len() + bound <= self.best_path.len() {
            return Ok(());
        }
        let moves: Vec<usize> = self.legal_moves(dominated).collect();
        for v in moves {
            self.path.push(v);
            let r = self.exhaust(dominated | self.closed[v]);
            self.path.pop();
            r?;
            if self.path.len() + bound <= self.best_path.len() {
                break;
            }
        }
        Ok(())
    }
}

fn exploration_order(g: &Graph, exploration: Exploration) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    if exploration == Exploration::DegreeDescending {
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    }
    order
}

/// Exact `γ_gr(G)` with a witness sequence. Deterministic for a fixed configuration.
pub fn grundy_domination_number(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let limit = config.max_vertices.min(HARD_VERTEX_LIMIT);
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), max: limit });
    }
    let start = Instant::now();
    let order = exploration_order(g, config.exploration);
    let mut search = Search {
        closed: (0..g.n()).map(|v| g.closed(v).as_mask()).collect(),
        order: &order,
        full: if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 },
        budget: config.budget,
        memo: HashMap::new(),
        explored: 0,
        path: Vec::new(),
        best_path: Vec::new(),
    };
    let outcome = if config.memo {
        search.reconstruct()
    } else {
        search.exhaust(0).map(|()| search.best_path.clone())
    };
    let stats = SolveStats {
        explored_states: search.explored,
        elapsed: start.elapsed(),
    };
    match outcome {
        Ok(witness) => Ok(SolveResult {
            gamma_gr: witness.len(),
            witness: witness.into(),
            stats,
        }),
        Err(Aborted) => Err(Error::BudgetExhausted(Box::new(PartialSolve {
            best_length: search.best_path.len(),
            witness: search.best_path.into(),
            stats,
        }))),
    }
}

/// Enumerates every legal sequence by backtracking, with no memo table and no pruning.
///
/// Kept deliberately separate from [`grundy_domination_number`] so the two can check each other.
pub fn grundy_brute_force(g: &Graph) -> Result<SolveResult> {
    if g.n() > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let start = Instant::now();
    let closed: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().collect();
            c.push(v);
            c
        })
        .collect();

    struct Enumerator {
        closed: Vec<Vec<usize>>,
        cover: Vec<u32>,
        seq: Vec<usize>,
        best: Vec<usize>,
        visited: u64,
    }

    impl Enumerator {
        fn walk(&mut self) {
            self.visited += 1;
            if self.cover.iter().all(|&c| c > 0) && self.seq.len() > self.best.len() {
                self.best = self.seq.clone();
            }
            for v in 0..self.closed.len() {
                let legal = self.closed[v].iter().any(|&u| self.cover[u] == 0);
                if !legal {
                    continue;
                }
                for &u in &self.closed[v] {
                    self.cover[u] += 1;
                }
                self.seq.push(v);
                self.walk();
                self.seq.pop();
                for &u in &self.closed[v] {
                    self.cover[u] -= 1;
                }
            }
        }
    }

    let mut e = Enumerator {
        cover: vec![0; g.n()],
        closed,
        seq: Vec::new(),
        best: Vec::new(),
        visited: 0,
    };
    e.walk();
    Ok(SolveResult {
        gamma_gr: e.best.len(),
        witness: e.best.into(),
        stats: SolveStats {
            explored_states: e.visited,
            elapsed: start.elapsed(),
        },
    })
}
