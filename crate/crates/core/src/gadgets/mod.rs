//! List-coloring gadgets with prescribed extension counts, the reduction
//! from counting CSP solutions, and the clique chain that turns list
//! colorings into essentially distinct colorings.
//!
//! Every builder numbers vertices in the order they are emitted, so the
//! identity arrangement is the emitted arrangement.

mod build;
mod clique;
mod csp;
mod verify;

pub use build::{function_gadget, indicator_gadget, multiplicity_gadget, relabel_gadget, transfer_gadget, transfer_table};
pub use clique::{canonical_clique_lists, clique_chain, clique_vertex};
pub use csp::{csp_to_listcoloring, parse_csp_file, serialize_csp_file, Constraint, CspInstance};
pub use verify::{extension_counts, verify_gadget, verify_gadget_with, GadgetReport, Mismatch};

use crate::graph::{Color, ColorLists, Graph, GraphFile, LinearArrangement, Vertex};
use crate::{Error, Result};

/// A list-coloring instance with distinguished boundary vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    graph: Graph,
    lists: ColorLists,
    boundary: Vec<Vertex>,
    arrangement: LinearArrangement,
}

impl GadgetInstance {
    pub fn new(graph: Graph, lists: ColorLists, boundary: Vec<Vertex>, arrangement: LinearArrangement) -> Result<Self> {
        lists.check_for(&graph)?;
        arrangement.check_for(&graph)?;
        let mut seen = vec![false; graph.n() + 1];
        for &b in &boundary {
            if b == 0 || b as usize > graph.n() {
                return Err(Error::InvalidGraph(format!("boundary vertex {b} outside 1..={}", graph.n())));
            }
            if std::mem::replace(&mut seen[b as usize], true) {
                return Err(Error::InvalidGraph(format!("boundary vertex {b} repeated")));
            }
        }
        Ok(GadgetInstance { graph, lists, boundary, arrangement })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lists(&self) -> &ColorLists {
        &self.lists
    }

    pub fn boundary(&self) -> &[Vertex] {
        &self.boundary
    }

    pub fn arrangement(&self) -> &LinearArrangement {
        &self.arrangement
    }

    pub fn q(&self) -> u32 {
        self.lists.q()
    }

    /// Same instance with another boundary.
    pub fn with_boundary(self, boundary: Vec<Vertex>) -> Result<Self> {
        GadgetInstance::new(self.graph, self.lists, boundary, self.arrangement)
    }

    pub fn to_graph_file(&self) -> GraphFile {
        GraphFile {
            graph: self.graph.clone(),
            q: Some(self.lists.q()),
            lists: Some(self.lists.clone()),
            order: Some(self.arrangement.clone()),
        }
    }
}

/// Accumulates vertices (numbered in creation order), lists and edges.
#[derive(Debug, Clone)]
pub(crate) struct Builder {
    q: u32,
    lists: Vec<Vec<Color>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    pub(crate) fn new(q: u32) -> Self {
        Builder { q, lists: Vec::new(), edges: Vec::new() }
    }

    pub(crate) fn vertex(&mut self, list: Vec<Color>) -> Vertex {
        self.lists.push(list);
        self.lists.len() as Vertex
    }

    pub(crate) fn full(&mut self) -> Vertex {
        self.vertex((1..=self.q).collect())
    }

    pub(crate) fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    pub(crate) fn len(&self) -> usize {
        self.lists.len()
    }

    pub(crate) fn finish(self) -> Result<(Graph, ColorLists, LinearArrangement)> {
        let n = self.lists.len();
        let graph = Graph::new(n, self.edges)?;
        let lists = ColorLists::from_lists(self.q, self.lists)?;
        Ok((graph, lists, LinearArrangement::identity(n)))
    }

    pub(crate) fn instance(self, boundary: Vec<Vertex>) -> Result<GadgetInstance> {
        let (g, l, a) = self.finish()?;
        GadgetInstance::new(g, l, boundary, a)
    }
}
