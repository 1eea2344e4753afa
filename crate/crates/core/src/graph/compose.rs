use std::collections::HashSet;
use std::fmt;

use super::diagram::{DiagGraph, Edge, PortId, Vertex};
use crate::error::GraphError;

/// A partial matching between gray spots of the first factor and white spots
/// of the second, as `(gray, white)` label pairs sorted by gray label. Labels
/// refer to each factor's own numbering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(Vec<(PortId, PortId)>);

impl Matching {
    pub fn empty() -> Self {
        Matching(Vec::new())
    }

    /// Sorts the pairs by gray label. Injectivity is checked where the
    /// matching is used.
    pub fn from_pairs(mut pairs: Vec<(PortId, PortId)>) -> Self {
        pairs.sort();
        Matching(pairs)
    }

    pub fn pairs(&self) -> &[(PortId, PortId)] {
        &self.0
    }

    /// Number of joined lines.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (g, w)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}<-{}", g, w)?;
        }
        f.write_str("}")
    }
}

/// Every partial injective matching of `grays` into `whites`, ordered by size
/// and then lexicographically by `(gray, white)` pairs.
pub fn enumerate_matchings(grays: &[PortId], whites: &[PortId]) -> Vec<Matching> {
    fn extend(
        grays: &[PortId],
        whites: &[PortId],
        used: &mut [bool],
        current: &mut Vec<(PortId, PortId)>,
        out: &mut Vec<Matching>,
    ) {
        let Some((&gray, rest)) = grays.split_first() else {
            out.push(Matching(current.clone()));
            return;
        };
        extend(rest, whites, used, current, out);
        for (j, &white) in whites.iter().enumerate() {
            if used[j] {
                continue;
            }
            used[j] = true;
            current.push((gray, white));
            extend(rest, whites, used, current, out);
            current.pop();
            used[j] = false;
        }
    }

    let mut sorted_grays = grays.to_vec();
    sorted_grays.sort();
    let mut sorted_whites = whites.to_vec();
    sorted_whites.sort();
    let mut out = Vec::new();
    let mut used = vec![false; sorted_whites.len()];
    extend(&sorted_grays, &sorted_whites, &mut used, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Disjoint union of `first` and `second` plus one line per matched pair,
/// running from the white spot of `second` into the gray spot of `first`.
///
/// Ports of `first` keep their labels; ports of `second` are offset past the
/// label span of `first`. The matching must be drawn from the dangling spots
/// of the two factors.
pub(crate) fn compose_along(first: &DiagGraph, second: &DiagGraph, matching: &Matching) -> DiagGraph {
    let offset = first.label_span();
    let shift = |p: PortId| p.shifted(offset);

    let mut vertices: Vec<Vertex> = first.vertices().to_vec();
    vertices.extend(second.vertices().iter().map(|v| Vertex {
        in_ports: v.in_ports.iter().copied().map(shift).collect(),
        out_ports: v.out_ports.iter().copied().map(shift).collect(),
    }));

    let mut edges = first.edges().clone();
    edges.extend(second.edges().iter().map(|e| Edge {
        out_port: shift(e.out_port),
        in_port: shift(e.in_port),
    }));

    let mut joined_grays = Vec::with_capacity(matching.len());
    let mut joined_whites = Vec::with_capacity(matching.len());
    for &(gray, white) in matching.pairs() {
        debug_assert!(first.dangling_in().contains(&gray), "gray {} not dangling", gray);
        debug_assert!(second.dangling_out().contains(&white), "white {} not dangling", white);
        joined_grays.push(gray);
        joined_whites.push(white);
        edges.insert(Edge {
            out_port: shift(white),
            in_port: gray,
        });
    }

    let dangling_in = first
        .dangling_in()
        .iter()
        .copied()
        .filter(|p| !joined_grays.contains(p))
        .chain(second.dangling_in().iter().copied().map(shift))
        .collect();
    let dangling_out = first
        .dangling_out()
        .iter()
        .copied()
        .chain(
            second
                .dangling_out()
                .iter()
                .copied()
                .filter(|p| !joined_whites.contains(p))
                .map(shift),
        )
        .collect();

    let g = DiagGraph::from_parts_unchecked(vertices, edges, dangling_in, dangling_out);
    // New lines only run from `second` into `first`, so no closed path can appear.
    debug_assert!(g.is_acyclic(), "composition produced a cycle");
    debug_assert_eq!(g.validate(), Ok(()));
    g
}

/// Composes along one explicit matching, checking that every pair joins a
/// gray spot of `first` to a white spot of `second` and that no spot is
/// used twice.
pub fn compose(
    first: &DiagGraph,
    second: &DiagGraph,
    matching: &Matching,
) -> Result<DiagGraph, GraphError> {
    let mut grays = HashSet::new();
    let mut whites = HashSet::new();
    for &(gray, white) in matching.pairs() {
        if !first.dangling_in().contains(&gray) || !grays.insert(gray) {
            return Err(GraphError::InvalidMatching(gray.0));
        }
        if !second.dangling_out().contains(&white) || !whites.insert(white) {
            return Err(GraphError::InvalidMatching(white.0));
        }
    }
    Ok(compose_along(first, second, matching))
}

/// All compositions of `first` with `second`, one per partial matching of
/// the gray spots of `first` with the white spots of `second`, in matching
/// enumeration order.
pub fn enumerate_compositions(first: &DiagGraph, second: &DiagGraph) -> Vec<DiagGraph> {
    enumerate_matchings(first.dangling_in(), second.dangling_out())
        .iter()
        .map(|m| compose_along(first, second, m))
        .collect()
}
