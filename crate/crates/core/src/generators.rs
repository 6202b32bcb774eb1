//! Standard graphs, seeded random graphs, and the two extremal families for the removal bounds.
//!
//! Numbering: `make_path(m)` is `0 - 1 - ... - (m-1)`; `make_cycle(n)` adds the edge `(n-1, 0)`.
//! In both families the path occupies `0..m` with vertex `0` the degree-1 end and `m-1` the
//! vertex shared with the cycle or clique, which occupies `m-1..m+n-1`.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn make_path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
    }
    Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs at least 1 vertex".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// G(n, p): every pair becomes an edge independently with probability `p`.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {edge_probability} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_probability) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Structural role of a vertex or edge inside a family graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// The degree-1 end of the path.
    PathEnd,
    /// Path neighbour of the degree-1 end.
    EndNeighbor,
    /// Path vertex strictly between the end neighbour and the identified vertex.
    InteriorPath,
    /// Path end shared with the cycle or clique.
    Identified,
    CycleVertex,
    CliqueVertex,
    /// Path edge incident with the degree-1 end.
    PendantEdge,
    InteriorPathEdge,
    CycleEdge,
    CliqueEdge,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::PathEnd => "path-end",
            Role::EndNeighbor => "end-neighbor",
            Role::InteriorPath => "interior-path",
            Role::Identified => "identified",
            Role::CycleVertex => "cycle-vertex",
            Role::CliqueVertex => "clique-vertex",
            Role::PendantEdge => "pendant-edge",
            Role::InteriorPathEdge => "interior-path-edge",
            Role::CycleEdge => "cycle-edge",
            Role::CliqueEdge => "clique-edge",
        })
    }
}

/// A graph together with role labels for each vertex and edge.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub graph: Graph,
    pub vertex_roles: Vec<Role>,
    /// Keyed by `(u, v)` with `u < v`.
    pub edge_roles: BTreeMap<(usize, usize), Role>,
}

impl Family {
    pub fn vertex_role(&self, v: usize) -> Option<Role> {
        self.vertex_roles.get(v).copied()
    }

    pub fn edge_role(&self, u: usize, v: usize) -> Option<Role> {
        self.edge_roles.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn vertices_with(&self, role: Role) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.vertex_roles[v] == role).collect()
    }

    pub fn edges_with(&self, role: Role) -> Vec<(usize, usize)> {
        self.edge_roles.iter().filter(|(_, &r)| r == role).map(|(&e, _)| e).collect()
    }
}

fn path_roles(m: usize) -> Vec<Role> {
    (0..m)
        .map(|i| match i {
            0 => Role::PathEnd,
            _ if i == m - 1 => Role::Identified,
            1 => Role::EndNeighbor,
            _ => Role::InteriorPath,
        })
        .collect()
}

fn path_edges(m: usize) -> impl Iterator<Item = ((usize, usize), Role)> {
    (1..m).map(|i| {
        let role = if i == 1 {
            Role::PendantEdge
        } else {
            Role::InteriorPathEdge
        };
        ((i - 1, i), role)
    })
}

/// `H_{m,n}`: a degree-1 end of `P_m` identified with a vertex of `C_n`.
pub fn make_h_family(m: usize, n: usize) -> Result<Family> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidParameter(format!("H family needs m >= 3 and n >= 3, got ({m}, {n})")));
    }
    let total = m + n - 1;
    let mut vertex_roles = path_roles(m);
    vertex_roles.resize(total, Role::CycleVertex);

    let mut edge_roles: BTreeMap<_, _> = path_edges(m).collect();
    let cycle: Vec<usize> = (m - 1..total).collect();
    for i in 0..n {
        let (a, b) = (cycle[i], cycle[(i + 1) % n]);
        edge_roles.insert((a.min(b), a.max(b)), Role::CycleEdge);
    }
    let graph = Graph::from_edges(total, edge_roles.keys().copied())?;
    Ok(Family {
        name: format!("H({m},{n})"),
        graph,
        vertex_roles,
        edge_roles,
    })
}

/// `G_{m,n}`: a degree-1 end of `P_m` identified with a vertex of `K_n`.
pub fn make_g_family(m: usize, n: usize) -> Result<Family> {
    if m < 4 || n < 3 {
        return Err(Error::InvalidParameter(format!("G family needs m >= 4 and n >= 3, got ({m}, {n})")));
    }
    let total = m + n - 1;
    let mut vertex_roles = path_roles(m);
    vertex_roles.resize(total, Role::CliqueVertex);

    let mut edge_roles: BTreeMap<_, _> = path_edges(m).collect();
    for u in m - 1..total {
        for v in u + 1..total {
            edge_roles.insert((u, v), Role::CliqueEdge);
        }
    }
    let graph = Graph::from_edges(total, edge_roles.keys().copied())?;
    Ok(Family {
        name: format!("G({m},{n})"),
        graph,
        vertex_roles,
        edge_roles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.n()).map(|v| g.degree(v)).collect()
    }

    #[test]
    fn small_standard_graphs() {
        assert_eq!(make_path(2).unwrap(), make_complete(2).unwrap());
        assert_eq!(make_cycle(3).unwrap(), make_complete(3).unwrap());
        assert_eq!(make_complete(1).unwrap(), Graph::new(1));
        assert!(make_path(0).is_err());
        assert!(make_cycle(2).is_err());
        assert!(make_complete(0).is_err());
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_graph(7, 0.0, 1).unwrap(), Graph::new(7));
        assert_eq!(random_graph(7, 1.0, 1).unwrap(), make_complete(7).unwrap());
        assert_eq!(random_graph(12, 0.4, 99).unwrap(), random_graph(12, 0.4, 99).unwrap());
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn h_family_shape() {
        let h = make_h_family(3, 3).unwrap();
        assert_eq!(h.graph.n(), 5);
        // brute-force edge count over all pairs
        let pairs = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)));
        assert_eq!(pairs.filter(|&(u, v)| h.graph.has_edge(u, v)).count(), 5);
        assert_eq!(h.edges_with(Role::PendantEdge), [(0, 1)]);
        assert_eq!(h.edges_with(Role::InteriorPathEdge), [(1, 2)]);
        assert_eq!(h.edges_with(Role::CycleEdge).len(), 3);

        let h = make_h_family(5, 4).unwrap();
        let d = degrees(&h.graph);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 1);
        assert_eq!(h.edge_role(1, 0), Some(Role::PendantEdge));
        assert!(make_h_family(2, 3).is_err());
    }

    #[test]
    fn g_family_shape() {
        let g = make_g_family(4, 3).unwrap();
        assert_eq!(g.graph.n(), 6);
        assert_eq!(g.vertex_roles, [
            Role::PathEnd,
            Role::EndNeighbor,
            Role::InteriorPath,
            Role::Identified,
            Role::CliqueVertex,
            Role::CliqueVertex,
        ]);
        let d = degrees(&g.graph);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 1);
        assert!(make_g_family(3, 3).is_err());
        assert!(make_g_family(4, 2).is_err());
    }

    #[test]
    fn generators_are_symmetric() {
        let mut graphs = vec![
            make_path(6).unwrap(),
            make_cycle(7).unwrap(),
            make_complete(5).unwrap(),
            make_h_family(4, 5).unwrap().graph,
            make_g_family(6, 4).unwrap().graph,
        ];
        graphs.extend((0..20).map(|s| random_graph(15, 0.3, s).unwrap()));
        assert!(graphs.iter().all(Graph::is_symmetric_and_loopless));
    }
}
