//! Grundy dominating sequences of interval graphs by a single sweep over interval endpoints.
//!
//! Coordinates are exact decimals so that coinciding endpoints are detected exactly. At a shared
//! coordinate every left endpoint comes before every right endpoint (touching closed intervals
//! intersect); endpoints of the same kind at one coordinate are ordered by vertex index.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rust_decimal::Decimal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::VertexSequence;

/// Closed interval `[left, right]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub left: Decimal,
    pub right: Decimal,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

/// One interval per vertex; vertex `i` owns `intervals()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalModel {
    intervals: Vec<Interval>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        for (vertex, iv) in intervals.iter().enumerate() {
            if iv.left > iv.right {
                return Err(Error::InvalidInterval {
                    vertex,
                    left: iv.left.to_string(),
                    right: iv.right.to_string(),
                });
            }
        }
        Ok(IntervalModel { intervals })
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Decimal, Decimal)>) -> Result<Self> {
        IntervalModel::new(pairs.into_iter().map(|(left, right)| Interval { left, right }).collect())
    }

    /// Convenience constructor for integer endpoints.
    pub fn from_integers(pairs: &[(i64, i64)]) -> Result<Self> {
        IntervalModel::from_pairs(pairs.iter().map(|&(a, b)| (Decimal::from(a), Decimal::from(b))))
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Vertices sorted by right endpoint, ties kept in index order.
    pub fn right_endpoint_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&v| self.intervals[v].right);
        order
    }

    /// Shifts every endpoint by `offset`.
    pub fn translate(&self, offset: Decimal) -> IntervalModel {
        self.map(|x| x + offset)
    }

    /// Multiplies every endpoint by a positive `factor`.
    pub fn scale(&self, factor: Decimal) -> Result<IntervalModel> {
        if factor <= Decimal::ZERO {
            return Err(Error::InvalidParameter(format!("scale factor {factor} must be positive")));
        }
        Ok(self.map(|x| x * factor))
    }

    fn map(&self, f: impl Fn(Decimal) -> Decimal) -> IntervalModel {
        IntervalModel {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval {
                    left: f(iv.left),
                    right: f(iv.right),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EndpointKind {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub kind: EndpointKind,
    pub vertex: usize,
    pub coord: Decimal,
}

/// All `2n` endpoints in sweep order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointSequence {
    events: Vec<Endpoint>,
}

impl EndpointSequence {
    pub fn events(&self) -> &[Endpoint] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

impl fmt::Display for EndpointSequence {
    /// `a` for left and `b` for right endpoints, vertices numbered from 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let tag = match e.kind {
                EndpointKind::Left => 'a',
                EndpointKind::Right => 'b',
            };
            write!(f, "{tag}{}", e.vertex + 1)?;
        }
        Ok(())
    }
}

pub fn build_endpoint_sequence(m: &IntervalModel) -> EndpointSequence {
    let mut events: Vec<Endpoint> = m
        .intervals
        .iter()
        .enumerate()
        .flat_map(|(vertex, iv)| {
            [
                Endpoint {
                    kind: EndpointKind::Left,
                    vertex,
                    coord: iv.left,
                },
                Endpoint {
                    kind: EndpointKind::Right,
                    vertex,
                    coord: iv.right,
                },
            ]
        })
        .collect();
    events.sort_by_key(|e| (e.coord, e.kind, e.vertex));
    EndpointSequence { events }
}

/// Sweep accumulator: the sequence so far and whether a left endpoint was seen since the last
/// vertex was taken.
#[derive(Clone, Debug, Default)]
pub struct SweepState {
    pub sequence: VertexSequence,
    pub new_interval: bool,
}

impl SweepState {
    pub fn step(&mut self, event: &Endpoint) {
        match event.kind {
            EndpointKind::Left => self.new_interval = true,
            EndpointKind::Right if self.new_interval => {
                self.sequence.push(event.vertex);
                self.new_interval = false;
            }
            EndpointKind::Right => {}
        }
    }
}

/// Takes the owner of every right endpoint that directly follows a run containing a left
/// endpoint. Linear in the length of the endpoint sequence.
pub fn sweep(endpoints: &EndpointSequence) -> VertexSequence {
    let mut state = SweepState::default();
    for e in endpoints.events() {
        state.step(e);
    }
    state.sequence
}

/// A Grundy dominating sequence of the intersection graph, in original vertex indices.
pub fn grundy_interval(m: &IntervalModel) -> VertexSequence {
    sweep(&build_endpoint_sequence(m))
}

/// Number of adjacent (left, right) pairs in the endpoint sequence, which equals the Grundy
/// domination number of the intersection graph.
pub fn count_ab_pairs(e: &EndpointSequence) -> usize {
    e.events
        .windows(2)
        .filter(|w| w[0].kind == EndpointKind::Left && w[1].kind == EndpointKind::Right)
        .count()
}

/// Vertices adjacent iff their closed intervals meet.
pub fn intersection_graph(m: &IntervalModel) -> Graph {
    let mut g = Graph::new(m.len());
    for (i, a) in m.intervals.iter().enumerate() {
        for (j, b) in m.intervals.iter().enumerate().skip(i + 1) {
            if a.intersects(b) {
                g.add_edge(i, j).expect("fresh pair");
            }
        }
    }
    g
}

/// How [`random_interval_model`] draws endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalSampling {
    /// Integer endpoints in `0..=max`, so coincidences are frequent.
    Grid { max: u32 },
    /// Six-decimal endpoints: left in `[0, 100)`, length in `[0, 30)`.
    Continuous,
}

pub fn random_interval_model(n: usize, seed: u64, sampling: IntervalSampling) -> IntervalModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let intervals = (0..n)
        .map(|_| match sampling {
            IntervalSampling::Grid { max } => {
                let a = rng.gen_range(0..=max as i64);
                let b = rng.gen_range(0..=max as i64);
                Interval {
                    left: Decimal::from(a.min(b)),
                    right: Decimal::from(a.max(b)),
                }
            }
            IntervalSampling::Continuous => {
                let left = rng.gen_range(0..100_000_000i64);
                let len = rng.gen_range(0..30_000_000i64);
                Interval {
                    left: Decimal::new(left, 6),
                    right: Decimal::new(left + len, 6),
                }
            }
        })
        .collect();
    IntervalModel { intervals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_complete;

    /// The five-interval example: v1..v5 = [0,2], [-1,4], [1,5], [3,7], [6,8].
    fn five_intervals() -> IntervalModel {
        IntervalModel::from_integers(&[(0, 2), (-1, 4), (1, 5), (3, 7), (6, 8)]).unwrap()
    }

    #[test]
    fn five_interval_endpoint_sequence() {
        let e = build_endpoint_sequence(&five_intervals());
        assert_eq!(e.to_string(), "a2 a1 a3 b1 a4 b2 b3 a5 b4 b5");
        assert_eq!(count_ab_pairs(&e), 3);
        assert_eq!(grundy_interval(&five_intervals()).as_slice(), [0, 1, 3]);
    }

    #[test]
    fn five_interval_graph() {
        let g = intersection_graph(&five_intervals());
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn tie_rules() {
        let one = IntervalModel::from_integers(&[(0, 1)]).unwrap();
        assert_eq!(build_endpoint_sequence(&one).to_string(), "a1 b1");
        assert_eq!(count_ab_pairs(&build_endpoint_sequence(&one)), 1);

        let twins = IntervalModel::from_integers(&[(0, 1), (0, 1)]).unwrap();
        let e = build_endpoint_sequence(&twins);
        assert_eq!(e.to_string(), "a1 a2 b1 b2");
        assert_eq!(count_ab_pairs(&e), 1);

        let touching = IntervalModel::from_integers(&[(2, 3), (0, 2)]).unwrap();
        assert_eq!(build_endpoint_sequence(&touching).to_string(), "a2 a1 b2 b1");
        assert!(intersection_graph(&touching).has_edge(0, 1));
    }

    #[test]
    fn disjoint_and_identical() {
        let disjoint = IntervalModel::from_integers(&[(4, 5), (0, 1), (2, 3)]).unwrap();
        assert_eq!(grundy_interval(&disjoint).as_slice(), [1, 2, 0]);
        assert_eq!(intersection_graph(&disjoint), Graph::new(3));

        let same = IntervalModel::from_integers(&[(1, 4); 5]).unwrap();
        assert_eq!(grundy_interval(&same).as_slice(), [0]);
        assert_eq!(intersection_graph(&same), make_complete(5).unwrap());
    }

    #[test]
    fn degenerate_intervals_allowed() {
        let m = IntervalModel::from_integers(&[(1, 1), (1, 1), (0, 2)]).unwrap();
        assert_eq!(build_endpoint_sequence(&m).to_string(), "a3 a1 a2 b1 b2 b3");
    }

    #[test]
    fn reversed_interval_rejected() {
        assert!(matches!(
            IntervalModel::from_integers(&[(0, 1), (3, 2)]),
            Err(Error::InvalidInterval { vertex: 1, .. })
        ));
    }

    #[test]
    fn random_models() {
        let a = random_interval_model(10, 5, IntervalSampling::Continuous);
        assert_eq!(a, random_interval_model(10, 5, IntervalSampling::Continuous));
        assert_eq!(random_interval_model(1, 0, IntervalSampling::Grid { max: 3 }).len(), 1);
        let ties = (0..50).any(|seed| {
            let m = random_interval_model(6, seed, IntervalSampling::Grid { max: 3 });
            let iv = m.intervals();
            (0..iv.len()).any(|i| (0..iv.len()).any(|j| i != j && iv[i].left == iv[j].right))
        });
        assert!(ties);
    }

    #[test]
    fn scaling_rejects_non_positive() {
        assert!(five_intervals().scale(Decimal::ZERO).is_err());
    }
}
