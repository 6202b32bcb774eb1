//! Legal sequences, dominating sequences and footprints.
//!
//! A sequence `(v_1, ..., v_k)` is legal when every `v_i` has a closed-neighbourhood vertex not
//! already covered by `N[v_1] ∪ ... ∪ N[v_{i-1}]`; that vertex set is what `v_i` footprints.
//! A repeated vertex always footprints nothing, so repetition shows up as illegality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An ordered list of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    pub fn new() -> Self {
        VertexSequence(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, v: usize) {
        self.0.push(v);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// The underlying vertex set of the sequence.
    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.iter().copied())
    }

    /// `self ⊕ other`; fails if the result would repeat a vertex.
    pub fn concatenate(&self, other: &VertexSequence) -> Result<VertexSequence> {
        let mut out = self.clone();
        out.0.extend_from_slice(&other.0);
        if let Some(v) = out.first_repeat() {
            return Err(Error::RepeatedVertex(v));
        }
        Ok(out)
    }

    fn first_repeat(&self) -> Option<usize> {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().copied().find(|&v| !seen.insert(v))
    }
}

impl From<Vec<usize>> for VertexSequence {
    fn from(v: Vec<usize>) -> Self {
        VertexSequence(v)
    }
}

impl FromIterator<usize> for VertexSequence {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSequence {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Free function form of [`VertexSequence::concatenate`].
pub fn concatenate(s1: &VertexSequence, s2: &VertexSequence) -> Result<VertexSequence> {
    s1.concatenate(s2)
}

/// Outcome of [`check_legal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegalityReport {
    pub legal: bool,
    /// 0-based position of the first entry that footprints nothing.
    pub first_illegal: Option<usize>,
    /// For every entry, the vertices it footprints (empty for illegal entries).
    pub footprints: Vec<Vec<usize>>,
    /// Whether the union of closed neighbourhoods is the whole vertex set.
    pub dominating: bool,
}

/// Checks legality and records what each entry footprints.
pub fn check_legal(g: &Graph, s: &VertexSequence) -> Result<LegalityReport> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let mut dominated = VertexSet::new(g.n());
    let mut footprints = Vec::with_capacity(s.len());
    let mut first_illegal = None;
    for (i, &v) in s.iter().enumerate() {
        let fresh = g.closed(v).difference(&dominated);
        if fresh.is_empty() && first_illegal.is_none() {
            first_illegal = Some(i);
        }
        dominated.union_with(&fresh);
        footprints.push(fresh.iter().collect());
    }
    Ok(LegalityReport {
        legal: first_illegal.is_none(),
        first_illegal,
        footprints,
        dominating: dominated.is_full(),
    })
}

/// True iff the closed neighbourhoods of `set` cover every vertex.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    dominated_by(g, set.iter()).is_full()
}

pub(crate) fn dominated_by(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut dominated = VertexSet::new(g.n());
    for v in vertices {
        dominated.union_with(&g.closed(v));
    }
    dominated
}

/// The map `f_S` sending each vertex to the sequence entry that footprints it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FootprintMap {
    footprinter: Vec<Option<usize>>,
}

impl FootprintMap {
    /// Footprinters of a legal sequence that need not be dominating; undominated vertices map to `None`.
    pub fn partial(g: &Graph, s: &VertexSequence) -> Result<FootprintMap> {
        let report = check_legal(g, s)?;
        if let Some(step) = report.first_illegal {
            return Err(Error::IllegalSequence { step: step + 1 });
        }
        let mut footprinter = vec![None; g.n()];
        for (&v, fp) in s.iter().zip(&report.footprints) {
            for &u in fp {
                footprinter[u] = Some(v);
            }
        }
        Ok(FootprintMap { footprinter })
    }

    pub fn footprinter(&self, u: usize) -> Option<usize> {
        self.footprinter.get(u).copied().flatten()
    }

    /// `f_S^{-1}(v)` in increasing order.
    pub fn footprinted_by(&self, v: usize) -> Vec<usize> {
        (0..self.footprinter.len())
            .filter(|&u| self.footprinter[u] == Some(v))
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.footprinter.iter().all(Option::is_some)
    }

    pub fn len(&self) -> usize {
        self.footprinter.len()
    }

    pub fn is_empty(&self) -> bool {
        self.footprinter.is_empty()
    }
}

/// Footprint map of a legal dominating sequence.
pub fn footprint_map(g: &Graph, s: &VertexSequence) -> Result<FootprintMap> {
    let map = FootprintMap::partial(g, s)?;
    if let Some(u) = map.footprinter.iter().position(Option::is_none) {
        return Err(Error::NotDominating { vertex: u });
    }
    Ok(map)
}

/// Appends the lowest-index legal vertex until the sequence dominates `g`.
pub fn extend_to_dominating(g: &Graph, s: &VertexSequence) -> Result<VertexSequence> {
    let report = check_legal(g, s)?;
    if let Some(step) = report.first_illegal {
        return Err(Error::IllegalSequence { step: step + 1 });
    }
    let mut out = s.clone();
    let mut dominated = dominated_by(g, s.iter().copied());
    // Any undominated vertex u makes u itself a legal choice, so this terminates.
    while !dominated.is_full() {
        let v = (0..g.n())
            .find(|&v| !g.closed(v).is_subset(&dominated))
            .expect("an undominated vertex is always a legal choice");
        dominated.union_with(&g.closed(v));
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path};

    fn seq(v: &[usize]) -> VertexSequence {
        v.to_vec().into()
    }

    #[test]
    fn legality_on_p4() {
        let p4 = make_path(4).unwrap();
        let r = check_legal(&p4, &seq(&[0, 1, 3])).unwrap();
        assert!(r.legal && r.dominating);
        assert_eq!(r.footprints, vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn repetition_is_illegal() {
        let p4 = make_path(4).unwrap();
        let r = check_legal(&p4, &seq(&[2, 2])).unwrap();
        assert_eq!(r.first_illegal, Some(1));
        assert!(r.footprints[1].is_empty());

        let k4 = make_complete(4).unwrap();
        let r = check_legal(&k4, &seq(&[0, 3])).unwrap();
        assert_eq!(r.first_illegal, Some(1));
        assert!(check_legal(&k4, &seq(&[4])).is_err());
    }

    #[test]
    fn empty_sequence_is_legal() {
        let r = check_legal(&make_path(3).unwrap(), &VertexSequence::new()).unwrap();
        assert!(r.legal);
        assert!(!r.dominating);
    }

    #[test]
    fn footprints() {
        let k1 = make_complete(1).unwrap();
        assert_eq!(footprint_map(&k1, &seq(&[0])).unwrap().footprinter(0), Some(0));

        let p3 = make_path(3).unwrap();
        let f = footprint_map(&p3, &seq(&[1])).unwrap();
        assert_eq!(f.footprinted_by(1), [0, 1, 2]);

        let p4 = make_path(4).unwrap();
        let f = footprint_map(&p4, &seq(&[0, 1, 3])).unwrap();
        let got: Vec<_> = (0..4).map(|u| f.footprinter(u).unwrap()).collect();
        assert_eq!(got, [0, 0, 1, 3]);

        assert!(matches!(
            footprint_map(&p4, &seq(&[0, 1])),
            Err(Error::NotDominating { vertex: 3 })
        ));
        assert!(matches!(
            footprint_map(&p4, &seq(&[1, 0])),
            Err(Error::IllegalSequence { step: 2 })
        ));
    }

    #[test]
    fn domination() {
        let k4 = make_complete(4).unwrap();
        assert!((0..4).all(|v| is_dominating(&k4, &VertexSet::from_vertices(4, [v]))));
        let p4 = make_path(4).unwrap();
        assert!(!is_dominating(&p4, &VertexSet::from_vertices(4, [0])));
        let empty = Graph::new(4);
        assert!(is_dominating(&empty, &VertexSet::full(4)));
        assert!(!is_dominating(&empty, &VertexSet::from_vertices(4, [0, 1, 3])));
    }

    #[test]
    fn greedy_completion() {
        let k1 = make_complete(1).unwrap();
        assert_eq!(extend_to_dominating(&k1, &VertexSequence::new()).unwrap(), seq(&[0]));
        let p4 = make_path(4).unwrap();
        // after 0 and 1 only vertex 3 is undominated; 2 is the lowest legal choice
        assert_eq!(extend_to_dominating(&p4, &seq(&[0])).unwrap(), seq(&[0, 1, 2]));
        assert_eq!(extend_to_dominating(&p4, &seq(&[1, 2])).unwrap(), seq(&[1, 2]));
        assert!(extend_to_dominating(&p4, &seq(&[1, 0])).is_err());
    }

    #[test]
    fn concatenation() {
        assert_eq!(concatenate(&seq(&[0]), &seq(&[])).unwrap(), seq(&[0]));
        assert_eq!(concatenate(&seq(&[]), &seq(&[1, 2])).unwrap(), seq(&[1, 2]));
        assert!(matches!(concatenate(&seq(&[0]), &seq(&[0])), Err(Error::RepeatedVertex(0))));
    }
}
