use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::ladder::NormalMonomial;

/// Label of a line end attached to a vertex. Labels are unique within a graph
/// and are never reassigned once a port exists in a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PortId(pub u32);

impl PortId {
    pub(crate) fn shifted(self, by: u32) -> PortId {
        PortId(self.0 + by)
    }
}

impl fmt::Display for PortId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    /// Ingoing lines (gray when dangling).
    pub in_ports: Vec<PortId>,
    /// Outgoing lines (white when dangling).
    pub out_ports: Vec<PortId>,
}

/// A joined line, running out of one vertex into another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub out_port: PortId,
    pub in_port: PortId,
}

/// An acyclic graph of vertices with distinguishable lines.
///
/// Every port is either joined by exactly one edge or listed in one of the
/// dangling lists. `dangling_in` holds the gray spots and `dangling_out` the
/// white spots, both sorted by label. Values are only produced through the
/// constructors in this module or by validated decoding, so the invariants
/// always hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct DiagGraph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<Edge>,
    dangling_in: Vec<PortId>,
    dangling_out: Vec<PortId>,
}

#[derive(Deserialize)]
struct RawGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    dangling_in: Vec<PortId>,
    dangling_out: Vec<PortId>,
}

impl TryFrom<RawGraph> for DiagGraph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        let mut edges = BTreeSet::new();
        for e in raw.edges {
            if !edges.insert(e) {
                return Err(GraphError::PortReused(e.out_port.0));
            }
        }
        DiagGraph::from_parts(raw.vertices, edges, raw.dangling_in, raw.dangling_out)
    }
}

impl Default for DiagGraph {
    fn default() -> Self {
        DiagGraph::void()
    }
}

impl DiagGraph {
    /// The graph with no vertices and no lines.
    pub fn void() -> Self {
        DiagGraph {
            vertices: Vec::new(),
            edges: BTreeSet::new(),
            dangling_in: Vec::new(),
            dangling_out: Vec::new(),
        }
    }

    /// One vertex with `creators` outgoing (white) and `annihilators`
    /// ingoing (gray) lines. In-ports are labeled first, then out-ports.
    /// `make_vertex(0, 0)` is an isolated vertex, not the void graph.
    pub fn make_vertex(creators: u32, annihilators: u32) -> Self {
        let in_ports: Vec<PortId> = (0..annihilators).map(PortId).collect();
        let out_ports: Vec<PortId> = (annihilators..annihilators + creators)
            .map(PortId)
            .collect();
        DiagGraph {
            dangling_in: in_ports.clone(),
            dangling_out: out_ports.clone(),
            vertices: vec![Vertex {
                in_ports,
                out_ports,
            }],
            edges: BTreeSet::new(),
        }
    }

    /// Assembles a graph from its parts, checking every invariant.
    pub fn from_parts(
        vertices: Vec<Vertex>,
        edges: BTreeSet<Edge>,
        dangling_in: Vec<PortId>,
        dangling_out: Vec<PortId>,
    ) -> Result<Self, GraphError> {
        let g = DiagGraph {
            vertices,
            edges,
            dangling_in,
            dangling_out,
        };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(
        vertices: Vec<Vertex>,
        edges: BTreeSet<Edge>,
        dangling_in: Vec<PortId>,
        dangling_out: Vec<PortId>,
    ) -> Self {
        DiagGraph {
            vertices,
            edges,
            dangling_in,
            dangling_out,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Gray spots, sorted by label.
    pub fn dangling_in(&self) -> &[PortId] {
        &self.dangling_in
    }

    /// White spots, sorted by label.
    pub fn dangling_out(&self) -> &[PortId] {
        &self.dangling_out
    }

    pub fn is_void(&self) -> bool {
        self.vertices.is_empty()
    }

    /// One more than the largest port label, or 0 when there are no ports.
    pub fn label_span(&self) -> u32 {
        self.vertices
            .iter()
            .flat_map(|v| v.in_ports.iter().chain(&v.out_ports))
            .map(|p| p.0 + 1)
            .max()
            .unwrap_or(0)
    }

    /// Forgets the inner structure: `(white spots, gray spots)`.
    pub fn project(&self) -> NormalMonomial {
        NormalMonomial::new(self.dangling_out.len() as u32, self.dangling_in.len() as u32)
    }

    /// Index of the vertex owning each port, with the port's direction
    /// (`true` for outgoing).
    fn port_owners(&self) -> HashMap<PortId, (usize, bool)> {
        let mut owners = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for p in &v.in_ports {
                owners.insert(*p, (i, false));
            }
            for p in &v.out_ports {
                owners.insert(*p, (i, true));
            }
        }
        owners
    }

    /// `(from, to)` vertex pairs along joined lines.
    pub fn vertex_arcs(&self) -> Vec<(usize, usize)> {
        let owners = self.port_owners();
        self.edges
            .iter()
            .filter_map(|e| Some((owners.get(&e.out_port)?.0, owners.get(&e.in_port)?.0)))
            .collect()
    }

    /// Kahn's algorithm on the vertex graph induced by the edges.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for (from, to) in self.vertex_arcs() {
            succ[from].push(to);
            indegree[to] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        seen == n
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let mut labels = HashSet::new();
        for v in &self.vertices {
            for p in v.in_ports.iter().chain(&v.out_ports) {
                if !labels.insert(*p) {
                    return Err(GraphError::DuplicatePort(p.0));
                }
            }
        }
        let owners = self.port_owners();

        let mut joined = HashSet::new();
        for e in &self.edges {
            let out_ok = matches!(owners.get(&e.out_port), Some((_, true)));
            let in_ok = matches!(owners.get(&e.in_port), Some((_, false)));
            if !out_ok || !in_ok {
                return Err(GraphError::EdgeKind {
                    out_port: e.out_port.0,
                    in_port: e.in_port.0,
                });
            }
            for p in [e.out_port, e.in_port] {
                if !joined.insert(p) {
                    return Err(GraphError::PortReused(p.0));
                }
            }
        }

        for (list, outgoing) in [(&self.dangling_in, false), (&self.dangling_out, true)] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(GraphError::UnsortedDangling);
            }
            for p in list.iter() {
                let right_side = owners.get(p).map(|(_, o)| *o == outgoing).unwrap_or(false);
                if !right_side || joined.contains(p) {
                    return Err(GraphError::BadDangling(p.0));
                }
            }
        }

        let dangling: HashSet<PortId> = self
            .dangling_in
            .iter()
            .chain(&self.dangling_out)
            .copied()
            .collect();
        for p in &labels {
            if !joined.contains(p) && !dangling.contains(p) {
                return Err(GraphError::Unaccounted(p.0));
            }
        }

        if !self.is_acyclic() {
            return Err(GraphError::Cycle);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_graph() {
        let g = DiagGraph::make_vertex(2, 1);
        assert_eq!(g.vertices().len(), 1);
        assert_eq!(g.dangling_out().len(), 2);
        assert_eq!(g.dangling_in(), &[PortId(0)]);
        assert_eq!(g.dangling_out(), &[PortId(1), PortId(2)]);
        assert_eq!(g.project(), NormalMonomial::new(2, 1));
        g.validate().unwrap();
    }

    #[test]
    fn isolated_vertex_is_not_void() {
        let g = DiagGraph::make_vertex(0, 0);
        assert_eq!(g.vertices().len(), 1);
        assert_ne!(g, DiagGraph::void());
        assert_eq!(g.project(), NormalMonomial::IDENTITY);
        assert_eq!(DiagGraph::void().project(), NormalMonomial::IDENTITY);
        assert!(DiagGraph::void().is_void());
    }

    #[test]
    fn self_loop_is_a_cycle() {
        let v = Vertex {
            in_ports: vec![PortId(0)],
            out_ports: vec![PortId(1)],
        };
        let edges = [Edge {
            out_port: PortId(1),
            in_port: PortId(0),
        }]
        .into_iter()
        .collect();
        let err = DiagGraph::from_parts(vec![v], edges, vec![], vec![]).unwrap_err();
        assert_eq!(err, GraphError::Cycle);
    }

    #[test]
    fn two_vertex_cycle_rejected() {
        let v0 = Vertex {
            in_ports: vec![PortId(0)],
            out_ports: vec![PortId(1)],
        };
        let v1 = Vertex {
            in_ports: vec![PortId(2)],
            out_ports: vec![PortId(3)],
        };
        let edges = [
            Edge {
                out_port: PortId(1),
                in_port: PortId(2),
            },
            Edge {
                out_port: PortId(3),
                in_port: PortId(0),
            },
        ]
        .into_iter()
        .collect();
        assert_eq!(
            DiagGraph::from_parts(vec![v0, v1], edges, vec![], vec![]).unwrap_err(),
            GraphError::Cycle
        );
    }

    #[test]
    fn unaccounted_and_misplaced_ports() {
        let v = Vertex {
            in_ports: vec![PortId(0)],
            out_ports: vec![PortId(1)],
        };
        assert_eq!(
            DiagGraph::from_parts(vec![v.clone()], BTreeSet::new(), vec![PortId(0)], vec![])
                .unwrap_err(),
            GraphError::Unaccounted(1)
        );
        assert_eq!(
            DiagGraph::from_parts(vec![v.clone()], BTreeSet::new(), vec![PortId(1)], vec![PortId(0)])
                .unwrap_err(),
            GraphError::BadDangling(1)
        );
        let dup = Vertex {
            in_ports: vec![PortId(0)],
            out_ports: vec![PortId(0)],
        };
        assert_eq!(
            DiagGraph::from_parts(vec![dup], BTreeSet::new(), vec![], vec![]).unwrap_err(),
            GraphError::DuplicatePort(0)
        );
    }

    #[test]
    fn json_is_validated() {
        let g = DiagGraph::make_vertex(1, 2);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            r#"{"vertices":[{"in_ports":[0,1],"out_ports":[2]}],"edges":[],"dangling_in":[0,1],"dangling_out":[2]}"#
        );
        assert_eq!(serde_json::from_str::<DiagGraph>(&json).unwrap(), g);
        let broken = r#"{"vertices":[{"in_ports":[0,1],"out_ports":[2]}],"edges":[],"dangling_in":[0],"dangling_out":[2]}"#;
        assert!(serde_json::from_str::<DiagGraph>(broken).is_err());
    }
}
