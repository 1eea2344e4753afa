use std::collections::HashSet;

use super::compose::{compose_along, enumerate_matchings, Matching};
use super::diagram::{DiagGraph, PortId};
use crate::error::BuildError;

/// How a newly added vertex is attached to the graph built so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingChoice {
    /// Position in the enumeration order of all partial matchings.
    Index(usize),
    /// Explicit joins: a gray spot of the current graph (by label) and an
    /// out-line of the new vertex (by position among its out-ports).
    Pairs(Vec<(PortId, usize)>),
}

impl MatchingChoice {
    pub fn none() -> Self {
        MatchingChoice::Pairs(Vec::new())
    }
}

/// One step of an iterative construction: the shape of the new vertex and
/// how its white spots join the gray spots already present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildStep {
    pub creators: u32,
    pub annihilators: u32,
    pub matching: MatchingChoice,
}

impl BuildStep {
    pub fn new(creators: u32, annihilators: u32, matching: MatchingChoice) -> Self {
        BuildStep {
            creators,
            annihilators,
            matching,
        }
    }
}

fn resolve(
    step: usize,
    current: &DiagGraph,
    vertex: &DiagGraph,
    choice: &MatchingChoice,
) -> Result<Matching, BuildError> {
    match choice {
        MatchingChoice::Index(index) => {
            let mut all = enumerate_matchings(current.dangling_in(), vertex.dangling_out());
            let count = all.len();
            if *index >= count {
                return Err(BuildError::MatchingIndex {
                    step,
                    index: *index,
                    count,
                });
            }
            Ok(all.swap_remove(*index))
        }
        MatchingChoice::Pairs(pairs) => {
            let whites = vertex.dangling_out();
            let mut seen_gray = HashSet::new();
            let mut seen_white = HashSet::new();
            let mut resolved = Vec::with_capacity(pairs.len());
            for &(gray, white_index) in pairs {
                if !current.dangling_in().contains(&gray) {
                    return Err(BuildError::UnknownGray { step, port: gray.0 });
                }
                let white = *whites.get(white_index).ok_or(BuildError::UnknownWhite {
                    step,
                    index: white_index,
                    available: whites.len(),
                })?;
                if !seen_gray.insert(gray) || !seen_white.insert(white) {
                    return Err(BuildError::RepeatedSpot { step });
                }
                resolved.push((gray, white));
            }
            Ok(Matching::from_pairs(resolved))
        }
    }
}

/// Incremental form of [`build_iteratively`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    graph: DiagGraph,
    steps: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder {
            graph: DiagGraph::void(),
            steps: 0,
        }
    }

    pub fn graph(&self) -> &DiagGraph {
        &self.graph
    }

    /// Number of ways a vertex with `creators` out-lines can be attached.
    pub fn matching_count(&self, creators: u32) -> usize {
        let vertex = DiagGraph::make_vertex(creators, 0);
        enumerate_matchings(self.graph.dangling_in(), vertex.dangling_out()).len()
    }

    pub fn push(&mut self, step: &BuildStep) -> Result<&DiagGraph, BuildError> {
        let vertex = DiagGraph::make_vertex(step.creators, step.annihilators);
        let matching = resolve(self.steps, &self.graph, &vertex, &step.matching)?;
        self.graph = compose_along(&self.graph, &vertex, &matching);
        self.steps += 1;
        Ok(&self.graph)
    }

    pub fn finish(self) -> DiagGraph {
        self.graph
    }
}

/// Starts from the void graph and composes it on the right with one vertex
/// per step. New vertices receive labels above every existing label, so the
/// result's labels follow creation order.
pub fn build_iteratively(steps: &[BuildStep]) -> Result<DiagGraph, BuildError> {
    let mut builder = GraphBuilder::new();
    for step in steps {
        builder.push(step)?;
    }
    Ok(builder.finish())
}
