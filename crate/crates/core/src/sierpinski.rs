//! Sierpiński graphs `S_p^n` and two constructive Grundy dominating sequences for them.
//!
//! Vertices are base-`p` digit strings of length `n`. Two distinct strings `u`, `v` are adjacent
//! iff, at the first position `h` where they differ, every later digit of `u` equals `v_h` and
//! every later digit of `v` equals `u_h`. The graph index of a label is its base-`p` value, so
//! index order is lexicographic label order.
//!
//! Sequences are produced directly as labels. Building the graph is only needed to verify them.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::VertexSequence;

/// Largest supported base; digits print as `0-9a-z`.
pub const MAX_BASE: u32 = 36;
/// Largest `p^n` for which [`build_sierpinski`] materialises adjacency bitsets.
pub const MAX_GRAPH_VERTICES: u64 = 1 << 14;
/// Largest number of digits a generated label sequence may hold.
pub const MAX_SEQUENCE_DIGITS: u64 = 1 << 30;

fn check_params(p: u32, n: u32) -> Result<()> {
    if !(1..=MAX_BASE).contains(&p) {
        return Err(Error::InvalidParameter(format!("base p = {p} outside 1..={MAX_BASE}")));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("dimension n must be at least 1".into()));
    }
    Ok(())
}

fn vertex_count(p: u32, n: u32) -> Result<u64> {
    (p as u64).checked_pow(n).ok_or(Error::Overflow("p^n"))
}

fn digit_char(d: u8) -> char {
    char::from_digit(d as u32, MAX_BASE).expect("digit below MAX_BASE")
}

/// A vertex `⟨u_1 … u_n⟩` of `S_p^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SierpinskiLabel {
    p: u32,
    digits: Vec<u8>,
}

impl SierpinskiLabel {
    pub fn new(p: u32, digits: Vec<u8>) -> Result<Self> {
        check_params(p, digits.len() as u32)?;
        if let Some(&d) = digits.iter().find(|&&d| d as u32 >= p) {
            return Err(Error::InvalidParameter(format!("digit {d} not below base {p}")));
        }
        Ok(SierpinskiLabel { p, digits })
    }

    /// Parses a digit string such as `"012"`.
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| {
                c.to_digit(MAX_BASE)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidParameter(format!("bad digit {c:?} in label {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SierpinskiLabel::new(p, digits)
    }

    /// `⟨i^n⟩`.
    pub fn extreme(p: u32, n: u32, i: u8) -> Result<Self> {
        SierpinskiLabel::new(p, vec![i; n as usize])
    }

    pub fn base(&self) -> u32 {
        self.p
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_extreme(&self) -> bool {
        self.digits.windows(2).all(|w| w[0] == w[1])
    }

    /// Position in lexicographic order, i.e. the base-`p` value.
    pub fn index(&self) -> usize {
        label_index(self.p, &self.digits)
    }

    pub fn from_index(p: u32, n: u32, index: usize) -> Result<Self> {
        check_params(p, n)?;
        if index as u64 >= vertex_count(p, n)? {
            return Err(Error::InvalidParameter(format!("index {index} outside S({p},{n})")));
        }
        let mut digits = vec![0u8; n as usize];
        let mut x = index;
        for d in digits.iter_mut().rev() {
            *d = (x % p as usize) as u8;
            x /= p as usize;
        }
        Ok(SierpinskiLabel { p, digits })
    }
}

impl fmt::Display for SierpinskiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.digits.iter().try_for_each(|&d| write!(f, "{}", digit_char(d)))
    }
}

fn label_index(p: u32, digits: &[u8]) -> usize {
    digits.iter().fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// Adjacency test on raw digit strings of equal length.
fn digits_adjacent(u: &[u8], v: &[u8]) -> bool {
    let Some(h) = u.iter().zip(v).position(|(a, b)| a != b) else {
        return false;
    };
    u[h + 1..].iter().all(|&x| x == v[h]) && v[h + 1..].iter().all(|&x| x == u[h])
}

/// Adjacency in `S_p^n`. Equal labels are not adjacent.
pub fn sierpinski_adjacent(u: &SierpinskiLabel, v: &SierpinskiLabel) -> Result<bool> {
    if u.p != v.p || u.digits.len() != v.digits.len() {
        return Err(Error::InvalidParameter(format!(
            "labels {u} (p = {}) and {v} (p = {}) belong to different graphs",
            u.p, v.p
        )));
    }
    Ok(digits_adjacent(&u.digits, &v.digits))
}

/// Equal-length labels stored back to back, one byte per digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelSequence {
    p: u32,
    n: u32,
    digits: Vec<u8>,
}

impl LabelSequence {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        check_params(p, n)?;
        Ok(LabelSequence {
            p,
            n,
            digits: Vec::new(),
        })
    }

    fn with_capacity(p: u32, n: u32, labels: usize) -> Self {
        LabelSequence {
            p,
            n,
            digits: Vec::with_capacity(labels * n as usize),
        }
    }

    pub fn base(&self) -> u32 {
        self.p
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.digits.len() / self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u8] {
        let n = self.n as usize;
        &self.digits[i * n..(i + 1) * n]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, u8> {
        self.digits.chunks_exact(self.n as usize)
    }

    pub fn labels(&self) -> Vec<SierpinskiLabel> {
        self.iter()
            .map(|d| SierpinskiLabel {
                p: self.p,
                digits: d.to_vec(),
            })
            .collect()
    }

    pub fn push(&mut self, label: &SierpinskiLabel) -> Result<()> {
        if label.p != self.p || label.digits.len() != self.n as usize {
            return Err(Error::InvalidParameter(format!("label {label} does not belong to S({},{})", self.p, self.n)));
        }
        self.digits.extend_from_slice(&label.digits);
        Ok(())
    }

    /// Graph indices of the labels, in sequence order.
    pub fn to_vertex_sequence(&self) -> VertexSequence {
        self.iter().map(|d| label_index(self.p, d)).collect()
    }

    /// Total number of digits stored.
    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }
}

impl fmt::Display for LabelSequence {
    /// One label per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for label in self.iter() {
            for &d in label {
                write!(f, "{}", digit_char(d))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `S_p^n` with index `i` holding the label whose base-`p` value is `i`.
#[derive(Clone, Debug)]
pub struct SierpinskiGraph {
    pub p: u32,
    pub n: u32,
    pub graph: Graph,
}

impl SierpinskiGraph {
    pub fn label(&self, index: usize) -> SierpinskiLabel {
        SierpinskiLabel::from_index(self.p, self.n, index).expect("index within graph")
    }

    pub fn index(&self, label: &SierpinskiLabel) -> usize {
        label.index()
    }
}

/// Builds `S_p^n` from its neighbour rule.
///
/// Each label `x c^r` with trailing run `c^r` (maximal, `r < n`, preceded by digit `a ≠ c`) has the
/// neighbour `x' c a^r`; in addition every label is adjacent to all labels differing only in the
/// last digit.
pub fn build_sierpinski(p: u32, n: u32) -> Result<SierpinskiGraph> {
    check_params(p, n)?;
    let count = vertex_count(p, n)?;
    if count > MAX_GRAPH_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "S({p},{n}) has {count} vertices, more than the {MAX_GRAPH_VERTICES} supported for graph construction"
        )));
    }
    let nn = n as usize;
    let mut graph = Graph::new(count as usize);
    let mut digits = vec![0u8; nn];
    for u in 0..count as usize {
        // last-digit neighbours
        let base = u - digits[nn - 1] as usize;
        for d in 0..p as usize {
            let v = base + d;
            if v != u && !graph.has_edge(u, v) {
                graph.add_edge(u, v)?;
            }
        }
        // neighbour across the trailing run
        let c = digits[nn - 1];
        let run = digits.iter().rev().take_while(|&&x| x == c).count();
        if run < nn {
            let h = nn - run - 1;
            let a = digits[h];
            let mut w = digits.clone();
            w[h] = c;
            for x in &mut w[h + 1..] {
                *x = a;
            }
            let v = label_index(p, &w);
            if !graph.has_edge(u, v) {
                graph.add_edge(u, v)?;
            }
        }
        increment(&mut digits, p as u8);
    }
    Ok(SierpinskiGraph { p, n, graph })
}

/// `p` disjoint copies of `S_p^{n-1}` (copy `i` on the labels starting with `i`) and the
/// `C(p, 2)` edges `{⟨i j^{n-1}⟩, ⟨j i^{n-1}⟩}` that join them into `S_p^n`.
pub fn decompose(p: u32, n: u32) -> Result<(Graph, Vec<(usize, usize)>)> {
    if n < 2 {
        return Err(Error::InvalidParameter("decomposition needs n >= 2".into()));
    }
    let copy = build_sierpinski(p, n - 1)?.graph;
    let mut union = Graph::new(0);
    for _ in 0..p {
        union = union.disjoint_union(&copy);
    }
    let mut links = Vec::new();
    for i in 0..p as u8 {
        for j in i + 1..p as u8 {
            let mut a = vec![j; n as usize];
            a[0] = i;
            let mut b = vec![i; n as usize];
            b[0] = j;
            links.push((label_index(p, &a), label_index(p, &b)));
        }
    }
    Ok((union, links))
}

/// Odometer step in lexicographic order.
fn increment(digits: &mut [u8], p: u8) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return;
        }
        *d = 0;
    }
}

/// `p^{n-1} + p(p^{n-1} - 1)/2`, the Grundy domination number of `S_p^n`.
pub fn grundy_formula(p: u64, n: u32) -> Result<u64> {
    if p < 1 || n < 1 {
        return Err(Error::InvalidParameter(format!("formula needs p, n >= 1, got ({p}, {n})")));
    }
    let pw = p.checked_pow(n - 1).ok_or(Error::Overflow("p^(n-1)"))?;
    let tail = p.checked_mul(pw - 1).ok_or(Error::Overflow("p(p^(n-1) - 1)"))? / 2;
    pw.checked_add(tail).ok_or(Error::Overflow("Grundy formula"))
}

fn check_sequence_size(p: u32, n: u32) -> Result<usize> {
    let len = grundy_formula(p as u64, n)?;
    if len.saturating_mul(n as u64) > MAX_SEQUENCE_DIGITS {
        return Err(Error::InvalidParameter(format!(
            "a sequence for S({p},{n}) would need {len} labels of {n} digits"
        )));
    }
    Ok(len as usize)
}

/// `iB_p^n = (⟨i (i+1)^{n-1}⟩, ⟨i (i+2)^{n-1}⟩, …, ⟨i (p-1)^{n-1}⟩)`.
pub fn b_sequence(i: u32, p: u32, n: u32) -> Result<LabelSequence> {
    check_params(p, n)?;
    if n < 2 {
        return Err(Error::InvalidParameter("B sequences need n >= 2".into()));
    }
    if i >= p {
        return Err(Error::InvalidParameter(format!("copy index {i} not below base {p}")));
    }
    let mut out = LabelSequence::with_capacity(p, n, (p - i - 1) as usize);
    push_b_block(&mut out.digits, i as u8, p as u8, n as usize);
    Ok(out)
}

fn push_b_block(digits: &mut Vec<u8>, i: u8, p: u8, n: usize) {
    for j in i + 1..p {
        digits.push(i);
        digits.extend(std::iter::repeat_n(j, n - 1));
    }
}

/// The recursive sequence `A_p^n = ⊕_{i} (i A_p^{n-1} ⊕ i B_p^n)`, with `A_p^1 = (⟨0⟩)`.
///
/// Emits `O(n p^n)` digits and never touches the graph.
pub fn a_sequence(p: u32, n: u32) -> Result<LabelSequence> {
    check_params(p, n)?;
    check_sequence_size(p, n)?;
    let mut current = LabelSequence {
        p,
        n: 1,
        digits: vec![0],
    };
    for k in 2..=n {
        let prev_len = current.len();
        let len = p as usize * prev_len + (p as usize * (p as usize - 1)) / 2;
        let mut next = LabelSequence::with_capacity(p, k, len);
        for i in 0..p as u8 {
            for label in current.iter() {
                next.digits.push(i);
                next.digits.extend_from_slice(label);
            }
            push_b_block(&mut next.digits, i, p as u8, k as usize);
        }
        current = next;
    }
    Ok(current)
}

/// Membership in the lexicographic sequence: the last digit is `0`, or the label ends in
/// `a b^{l-1}` with `2 <= l <= n` and `b > a`.
pub fn in_l_sequence(v: &SierpinskiLabel) -> bool {
    in_l_digits(&v.digits)
}

fn in_l_digits(d: &[u8]) -> bool {
    let last = d[d.len() - 1];
    if last == 0 {
        return true;
    }
    let run = d.iter().rev().take_while(|&&x| x == last).count();
    // A shorter run would make `a = b`; only the maximal trailing run can qualify.
    run < d.len() && last > d[d.len() - run - 1]
}

/// `L_p^n`: every label passing [`in_l_sequence`], in lexicographic order.
///
/// Walks all `p^n` labels and inspects each in `O(n)`.
pub fn l_sequence(p: u32, n: u32) -> Result<LabelSequence> {
    check_params(p, n)?;
    let len = check_sequence_size(p, n)?;
    let total = vertex_count(p, n)?;
    let mut out = LabelSequence::with_capacity(p, n, len);
    let mut digits = vec![0u8; n as usize];
    for _ in 0..total {
        if in_l_digits(&digits) {
            out.digits.extend_from_slice(&digits);
        }
        increment(&mut digits, p as u8);
    }
    Ok(out)
}
