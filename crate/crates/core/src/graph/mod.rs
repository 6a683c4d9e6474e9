//! Graphs, color lists, linear arrangements and the structures derived from
//! them.

mod cut;
mod io;
mod random;
mod td;
mod transform;

pub use cut::{cut_profile, cut_profiles, cut_sizes, cutwidth_of, CutProfile};
pub use io::{parse_graph_file, parse_td_file, serialize_graph_file, serialize_td_file, GraphFile};
pub use random::{random_lists, random_permutation, seeded_random_graph, SplitMix64};
pub use td::{td_from_ordering, validate_edge_introduce_td, EdgeIntroduceTreeDecomposition, NodeKind, TdNode, TdViolation};
pub use transform::{k_stretch, stretch_arrangement};

use crate::{Error, Result};
use std::collections::HashSet;

/// Vertices are numbered `1..=n`.
pub type Vertex = u32;
/// Colors are numbered `1..=q`.
pub type Color = u32;

/// Simple undirected graph on vertices `1..=n`.
///
/// Edges keep the order and orientation they were given in; only their
/// unordered endpoint pairs are required to be distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(Error::InvalidGraph(format!("vertex {w} outside 1..={n}")));
                }
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("parallel edge {u}-{v}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n + 1] }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n as Vertex {
            for v in u + 1..=n as Vertex {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n as Vertex).map(|v| (v, v + 1)).collect();
        Graph::new(n, edges).expect("path is simple")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as Vertex).map(|v| (v, v + 1)).collect();
        edges.push((n as Vertex, 1));
        Graph::new(n, edges).expect("cycle is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n as Vertex
    }

    /// Sorted neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u as usize <= self.n && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Index of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.iter().position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for s in self.vertices() {
            if comp[s as usize] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s as usize] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in self.neighbors(v) {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Connected in the usual sense; the graph on zero vertices counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`, relabelled so that `vertices[i]`
    /// becomes `i + 1`. Edges keep their relative order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut map = vec![0 as Vertex; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            map[v as usize] = i as Vertex + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u as usize] != 0 && map[v as usize] != 0)
            .map(|&(u, v)| (map[u as usize], map[v as usize]))
            .collect();
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }
}

/// Per-vertex color lists `L(v) ⊆ [q]`, each nonempty and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorLists {
    q: u32,
    lists: Vec<Vec<Color>>,
}

impl ColorLists {
    /// Every vertex may take every color in `[q]`.
    pub fn full(n: usize, q: u32) -> Self {
        ColorLists { q, lists: vec![(1..=q).collect(); n] }
    }

    /// `lists[i]` is the list of vertex `i + 1`.
    pub fn from_lists(q: u32, lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut out = Vec::with_capacity(lists.len());
        for (i, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::InvalidLists(format!("vertex {} has an empty list", i + 1)));
            }
            if list.iter().any(|&c| c == 0 || c > q) {
                return Err(Error::InvalidLists(format!("vertex {} has a color outside 1..={q}", i + 1)));
            }
            out.push(list);
        }
        Ok(ColorLists { q, lists: out })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    /// List of vertex `v`. Panics if `v` is out of range.
    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v as usize - 1]
    }

    pub fn try_list(&self, v: Vertex) -> Option<&[Color]> {
        (v as usize).checked_sub(1).and_then(|i| self.lists.get(i)).map(Vec::as_slice)
    }

    pub fn allows(&self, v: Vertex, c: Color) -> bool {
        self.list(v).binary_search(&c).is_ok()
    }

    pub fn is_full(&self, v: Vertex) -> bool {
        self.list(v).len() == self.q as usize
    }

    /// Replaces the list of `v`.
    pub fn set_list(&mut self, v: Vertex, mut list: Vec<Color>) -> Result<()> {
        list.sort_unstable();
        list.dedup();
        if list.is_empty() || list.iter().any(|&c| c == 0 || c > self.q) {
            return Err(Error::InvalidLists(format!("invalid list {list:?} for vertex {v}")));
        }
        self.lists[v as usize - 1] = list;
        Ok(())
    }

    /// Lists of `vertices`, in order, as the lists of `1..=vertices.len()`.
    pub fn restrict(&self, vertices: &[Vertex]) -> ColorLists {
        ColorLists { q: self.q, lists: vertices.iter().map(|&v| self.list(v).to_vec()).collect() }
    }

    pub(crate) fn check_for(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.n() {
            return Err(Error::InvalidLists(format!("{} lists for {} vertices", self.lists.len(), g.n())));
        }
        Ok(())
    }
}

/// An ordering `v_1, …, v_n` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearArrangement {
    order: Vec<Vertex>,
    /// `pos[v]` is the 1-based position of `v`.
    pos: Vec<usize>,
}

impl LinearArrangement {
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![0; n + 1];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidArrangement(format!("vertex {v} outside 1..={n}")));
            }
            if pos[v as usize] != 0 {
                return Err(Error::InvalidArrangement(format!("vertex {v} appears twice")));
            }
            pos[v as usize] = i + 1;
        }
        Ok(LinearArrangement { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        LinearArrangement::new((1..=n as Vertex).collect()).expect("identity is a permutation")
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertex at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> Vertex {
        self.order[i - 1]
    }

    /// 1-based position of `v`.
    #[inline]
    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v as usize]
    }

    /// Restriction to `vertices` (original ids, any order), expressed in the
    /// relabelling used by [`Graph::induced`] with the same slice.
    pub fn restrict(&self, vertices: &[Vertex]) -> LinearArrangement {
        let mut ranked: Vec<(usize, Vertex)> =
            vertices.iter().enumerate().map(|(i, &v)| (self.position(v), i as Vertex + 1)).collect();
        ranked.sort_unstable();
        LinearArrangement::new(ranked.into_iter().map(|(_, v)| v).collect()).expect("restriction is a permutation")
    }

    pub(crate) fn check_for(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() {
            return Err(Error::InvalidArrangement(format!(
                "arrangement of {} vertices for a graph on {}",
                self.order.len(),
                g.n()
            )));
        }
        Ok(())
    }
}
