//! How the Grundy domination number reacts to deleting one edge or one vertex.
//!
//! Every `γ_gr(G - x)` is recomputed from scratch with the exact solver. The known bounds are
//! checked on every record: deleting an edge changes the value by at most one in either
//! direction, deleting a vertex lowers it by at most two and never raises it. A violation is
//! reported as [`Error::BoundViolation`], which means a bug in this crate, not a property of
//! the input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{Family, Role};
use crate::graph::Graph;
use crate::solver::{grundy_domination_number, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Element {
    Edge(usize, usize),
    Vertex(usize),
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Edge(u, v) => write!(f, "{u}-{v}"),
            Element::Vertex(u) => write!(f, "{u}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalRecord {
    pub element: Element,
    pub role: Option<Role>,
    pub gamma_after: usize,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalProfile {
    pub base_gamma: usize,
    pub records: Vec<RemovalRecord>,
}

impl RemovalProfile {
    /// Fills in role labels from a family generator.
    pub fn with_roles(mut self, family: &Family) -> Self {
        for r in &mut self.records {
            r.role = match r.element {
                Element::Edge(u, v) => family.edge_role(u, v),
                Element::Vertex(u) => family.vertex_role(u),
            };
        }
        self
    }

    /// Distinct deltas observed for elements with the given role.
    pub fn deltas_for(&self, role: Role) -> Vec<i64> {
        let mut d: Vec<i64> = self
            .records
            .iter()
            .filter(|r| r.role == Some(role))
            .map(|r| r.delta)
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn deltas(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.records.iter().map(|r| r.delta).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

fn gamma(g: &Graph, config: &SolverConfig) -> Result<usize> {
    Ok(grundy_domination_number(g, config)?.gamma_gr)
}

pub fn edge_removal_profile(g: &Graph, config: &SolverConfig) -> Result<RemovalProfile> {
    let base_gamma = gamma(g, config)?;
    let mut records = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let after = gamma(&g.remove_edge(u, v)?, config)?;
        let delta = after as i64 - base_gamma as i64;
        if !(-1..=1).contains(&delta) {
            return Err(Error::BoundViolation(format!(
                "removing edge {u}-{v} changed the Grundy domination number from {base_gamma} to {after}"
            )));
        }
        records.push(RemovalRecord {
            element: Element::Edge(u, v),
            role: None,
            gamma_after: after,
            delta,
        });
    }
    Ok(RemovalProfile { base_gamma, records })
}

pub fn vertex_removal_profile(g: &Graph, config: &SolverConfig) -> Result<RemovalProfile> {
    let base_gamma = gamma(g, config)?;
    let mut records = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        let after = gamma(&g.remove_vertex(u)?.0, config)?;
        let delta = after as i64 - base_gamma as i64;
        if !(-2..=0).contains(&delta) {
            return Err(Error::BoundViolation(format!(
                "removing vertex {u} changed the Grundy domination number from {base_gamma} to {after}"
            )));
        }
        records.push(RemovalRecord {
            element: Element::Vertex(u),
            role: None,
            gamma_after: after,
            delta,
        });
    }
    Ok(RemovalProfile { base_gamma, records })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeAdditionReport {
    pub k: usize,
    pub gamma_before: usize,
    pub gamma_after: usize,
    pub delta: i64,
}

/// Adds `edges` (all non-edges of `g`) and checks `|γ_gr(G') - γ_gr(G)| <= k`.
pub fn check_k_edge_bound(g: &Graph, edges: &[(usize, usize)], config: &SolverConfig) -> Result<EdgeAdditionReport> {
    let mut augmented = g.clone();
    for &(u, v) in edges {
        augmented.add_edge(u, v)?;
    }
    let gamma_before = gamma(g, config)?;
    let gamma_after = gamma(&augmented, config)?;
    let delta = gamma_after as i64 - gamma_before as i64;
    let k = edges.len();
    if delta.unsigned_abs() as usize > k {
        return Err(Error::BoundViolation(format!(
            "adding {k} edges changed the Grundy domination number from {gamma_before} to {gamma_after}"
        )));
    }
    Ok(EdgeAdditionReport {
        k,
        gamma_before,
        gamma_after,
        delta,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialTwinEntry {
    pub vertex: usize,
    pub simplicial: bool,
    pub twin: bool,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialTwinReport {
    pub base_gamma: usize,
    /// Only vertices that are simplicial or have a twin.
    pub entries: Vec<SimplicialTwinEntry>,
}

/// Simplicial vertices lose at most one; twin vertices lose nothing.
pub fn check_simplicial_twin(g: &Graph, config: &SolverConfig) -> Result<SimplicialTwinReport> {
    let base_gamma = gamma(g, config)?;
    let mut entries = Vec::new();
    for u in 0..g.n() {
        let simplicial = g.is_simplicial(u)?;
        let twin = g.is_twin_vertex(u)?;
        if !simplicial && !twin {
            continue;
        }
        let after = gamma(&g.remove_vertex(u)?.0, config)?;
        let delta = after as i64 - base_gamma as i64;
        if simplicial && delta < -1 {
            return Err(Error::BoundViolation(format!(
                "removing simplicial vertex {u} dropped the Grundy domination number by {}",
                -delta
            )));
        }
        if twin && delta != 0 {
            return Err(Error::BoundViolation(format!(
                "removing twin vertex {u} changed the Grundy domination number by {delta}"
            )));
        }
        entries.push(SimplicialTwinEntry {
            vertex: u,
            simplicial,
            twin,
            delta,
        });
    }
    Ok(SimplicialTwinReport { base_gamma, entries })
}
