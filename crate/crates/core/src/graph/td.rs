use super::{cutwidth_of, Graph, LinearArrangement, Vertex};
use crate::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    IntroduceVertex(Vertex),
    IntroduceEdge(Vertex, Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdNode {
    pub bag: Vec<Vertex>,
    pub kind: NodeKind,
    /// 0-based indices of the children.
    pub children: Vec<usize>,
}

/// Rooted tree decomposition whose nodes are typed leaf / introduce-vertex /
/// introduce-edge / forget / join. Node `0` is the root (id 1 in files).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIntroduceTreeDecomposition {
    nodes: Vec<TdNode>,
}

/// First property a decomposition fails. Node ids are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    Empty,
    BadTree(String),
    BadBag { node: usize, msg: String },
    KindBagMismatch { node: usize, msg: String },
    UncoveredEdge(Vertex, Vertex),
    EdgeIntroducedTwice(Vertex, Vertex),
    UncoveredVertex(Vertex),
    DisconnectedVertex(Vertex),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::Empty => write!(f, "decomposition has no nodes"),
            TdViolation::BadTree(msg) => write!(f, "not a rooted tree: {msg}"),
            TdViolation::BadBag { node, msg } => write!(f, "bag of node {node}: {msg}"),
            TdViolation::KindBagMismatch { node, msg } => write!(f, "kind/bag mismatch at node {node}: {msg}"),
            TdViolation::UncoveredEdge(u, v) => write!(f, "edge {u}-{v} is never introduced"),
            TdViolation::EdgeIntroducedTwice(u, v) => write!(f, "edge {u}-{v} is introduced more than once"),
            TdViolation::UncoveredVertex(v) => write!(f, "vertex {v} is in no bag"),
            TdViolation::DisconnectedVertex(v) => write!(f, "bags containing vertex {v} are not connected"),
        }
    }
}

impl From<TdViolation> for Error {
    fn from(v: TdViolation) -> Self {
        Error::InvalidDecomposition(v.to_string())
    }
}

impl EdgeIntroduceTreeDecomposition {
    /// Builds a decomposition from nodes whose `children` indices are
    /// 0-based; node 0 is the root. No validation beyond index ranges.
    pub fn from_nodes(nodes: Vec<TdNode>) -> Result<Self> {
        let len = nodes.len();
        if nodes.iter().flat_map(|n| &n.children).any(|&c| c >= len) {
            return Err(TdViolation::BadTree("child index out of range".into()).into());
        }
        Ok(EdgeIntroduceTreeDecomposition { nodes })
    }

    pub fn nodes(&self) -> &[TdNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn max_bag(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }

    /// Max bag size minus one (0 for decompositions with only empty bags).
    pub fn width(&self) -> usize {
        self.max_bag().saturating_sub(1)
    }

    /// Node indices in an order where every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![(0usize, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                out.push(x);
            } else {
                stack.push((x, true));
                for &c in self.nodes[x].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }
}

/// Checks every structural, kind-specific and coverage property and returns
/// the width.
pub fn validate_edge_introduce_td(g: &Graph, td: &EdgeIntroduceTreeDecomposition) -> Result<usize, TdViolation> {
    let nodes = &td.nodes;
    if nodes.is_empty() {
        return Err(TdViolation::Empty);
    }
    // rooted tree: node 0 has no parent, everyone else exactly one, all reachable
    let mut parent = vec![None; nodes.len()];
    for (x, node) in nodes.iter().enumerate() {
        for &c in &node.children {
            if c == 0 {
                return Err(TdViolation::BadTree("root has a parent".into()));
            }
            if parent[c].replace(x).is_some() {
                return Err(TdViolation::BadTree(format!("node {} has two parents", c + 1)));
            }
        }
    }
    let order = td.post_order();
    if order.len() != nodes.len() {
        return Err(TdViolation::BadTree("not every node is reachable from the root".into()));
    }
    let bags: Vec<HashSet<Vertex>> = nodes.iter().map(|n| n.bag.iter().copied().collect()).collect();
    for (x, node) in nodes.iter().enumerate() {
        if bags[x].len() != node.bag.len() {
            return Err(TdViolation::BadBag { node: x + 1, msg: "repeated vertex".into() });
        }
        if let Some(&v) = node.bag.iter().find(|&&v| v == 0 || v as usize > g.n()) {
            return Err(TdViolation::BadBag { node: x + 1, msg: format!("vertex {v} outside 1..={}", g.n()) });
        }
    }
    let mut introduced: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (x, node) in nodes.iter().enumerate() {
        let mismatch = |msg: String| TdViolation::KindBagMismatch { node: x + 1, msg };
        let bag = &bags[x];
        let child_bag = |i: usize| &bags[node.children[i]];
        let arity = match node.kind {
            NodeKind::Leaf => 0,
            NodeKind::Join => 2,
            _ => 1,
        };
        if node.children.len() != arity {
            return Err(mismatch(format!("{:?} node with {} children", node.kind, node.children.len())));
        }
        match node.kind {
            NodeKind::Leaf => {}
            NodeKind::IntroduceVertex(v) => {
                let c = child_bag(0);
                if c.contains(&v) || !bag.contains(&v) || bag.len() != c.len() + 1 || !c.is_subset(bag) {
                    return Err(mismatch(format!("bag is not child bag plus vertex {v}")));
                }
            }
            NodeKind::IntroduceEdge(u, v) => {
                if bag != child_bag(0) {
                    return Err(mismatch("introduce-edge bag differs from its child".into()));
                }
                if !bag.contains(&u) || !bag.contains(&v) {
                    return Err(mismatch(format!("edge {u}-{v} endpoints not in bag")));
                }
                if !g.has_edge(u, v) {
                    return Err(mismatch(format!("{u}-{v} is not an edge of the graph")));
                }
                let key = (u.min(v), u.max(v));
                if introduced.insert(key, x).is_some() {
                    return Err(TdViolation::EdgeIntroducedTwice(key.0, key.1));
                }
            }
            NodeKind::Forget(v) => {
                let c = child_bag(0);
                if !c.contains(&v) || bag.contains(&v) || c.len() != bag.len() + 1 || !bag.is_subset(c) {
                    return Err(mismatch(format!("bag is not child bag minus vertex {v}")));
                }
            }
            NodeKind::Join => {
                if bag != child_bag(0) || bag != child_bag(1) {
                    return Err(mismatch("join children have different bags".into()));
                }
            }
        }
    }
    for &(u, v) in g.edges() {
        if !introduced.contains_key(&(u.min(v), u.max(v))) {
            return Err(TdViolation::UncoveredEdge(u, v));
        }
    }
    // occurrences of each vertex must form a connected subtree: exactly one
    // occurrence has a parent that does not contain the vertex
    let mut tops = vec![0usize; g.n() + 1];
    for (x, bag) in bags.iter().enumerate() {
        for &v in bag {
            let top = match parent[x] {
                Some(px) => !bags[px].contains(&v),
                None => true,
            };
            if top {
                tops[v as usize] += 1;
            }
        }
    }
    for v in g.vertices() {
        match tops[v as usize] {
            0 => return Err(TdViolation::UncoveredVertex(v)),
            1 => {}
            _ => return Err(TdViolation::DisconnectedVertex(v)),
        }
    }
    Ok(td.width())
}

/// Path-shaped decomposition following an arrangement. Starting from an
/// empty leaf, each `v_i` is introduced, then its edges to earlier vertices,
/// then every vertex with no neighbor after position `i` is forgotten. The
/// largest bag is `L_{i-1} ∪ {v_i}`, so the width never exceeds the
/// arrangement's cutwidth.
pub fn td_from_ordering(g: &Graph, a: &LinearArrangement) -> Result<EdgeIntroduceTreeDecomposition> {
    a.check_for(g)?;
    let mut chain: Vec<(Vec<Vertex>, NodeKind)> = vec![(Vec::new(), NodeKind::Leaf)];
    let mut bag: Vec<Vertex> = Vec::new();
    // last position among each vertex's neighbors
    let last: Vec<usize> = std::iter::once(0)
        .chain(g.vertices().map(|v| g.neighbors(v).iter().map(|&w| a.position(w)).max().unwrap_or(0)))
        .collect();
    for i in 1..=g.n() {
        let v = a.at(i);
        bag.push(v);
        chain.push((bag.clone(), NodeKind::IntroduceVertex(v)));
        let mut earlier: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| a.position(u) < i).collect();
        earlier.sort_by_key(|&u| a.position(u));
        for u in earlier {
            chain.push((bag.clone(), NodeKind::IntroduceEdge(u, v)));
        }
        let done: Vec<Vertex> = bag.iter().copied().filter(|&u| last[u as usize] <= i).collect();
        for u in done {
            bag.retain(|&w| w != u);
            chain.push((bag.clone(), NodeKind::Forget(u)));
        }
    }
    let len = chain.len();
    let nodes = chain
        .into_iter()
        .rev()
        .enumerate()
        .map(|(idx, (bag, kind))| TdNode { bag, kind, children: if idx + 1 < len { vec![idx + 1] } else { vec![] } })
        .collect();
    let td = EdgeIntroduceTreeDecomposition { nodes };
    debug_assert!(td.width() <= cutwidth_of(g, a)?);
    Ok(td)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(bag: &[Vertex], kind: NodeKind, children: &[usize]) -> TdNode {
        TdNode { bag: bag.to_vec(), kind, children: children.to_vec() }
    }

    #[test]
    fn single_bag_without_edges_is_invalid() {
        let td = EdgeIntroduceTreeDecomposition::from_nodes(vec![node(&[1, 2, 3], NodeKind::Leaf, &[])]).unwrap();
        assert!(matches!(validate_edge_introduce_td(&Graph::complete(3), &td), Err(TdViolation::UncoveredEdge(..))));
    }

    #[test]
    fn introduce_chain_for_triangle() {
        use NodeKind::*;
        let full = [1, 2, 3];
        let nodes = vec![
            node(&full, IntroduceEdge(2, 3), &[1]),
            node(&full, IntroduceEdge(1, 3), &[2]),
            node(&full, IntroduceEdge(1, 2), &[3]),
            node(&full, IntroduceVertex(3), &[4]),
            node(&[1, 2], IntroduceVertex(2), &[5]),
            node(&[1], IntroduceVertex(1), &[6]),
            node(&[], Leaf, &[]),
        ];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(nodes).unwrap();
        assert_eq!(validate_edge_introduce_td(&Graph::complete(3), &td), Ok(2));
    }

    #[test]
    fn join_children_must_match() {
        use NodeKind::*;
        let g = Graph::edgeless(2);
        let nodes = vec![
            node(&[1], Join, &[1, 2]),
            node(&[1], Leaf, &[]),
            node(&[1, 2], Leaf, &[]),
        ];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(nodes).unwrap();
        assert!(matches!(validate_edge_introduce_td(&g, &td), Err(TdViolation::KindBagMismatch { node: 1, .. })));
    }

    #[test]
    fn other_violations() {
        use NodeKind::*;
        let g = Graph::path(2);
        let twice = vec![
            node(&[1, 2], IntroduceEdge(1, 2), &[1]),
            node(&[1, 2], IntroduceEdge(2, 1), &[2]),
            node(&[1, 2], Leaf, &[]),
        ];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(twice).unwrap();
        assert_eq!(validate_edge_introduce_td(&g, &td), Err(TdViolation::EdgeIntroducedTwice(1, 2)));

        // vertex 1 appears in two branches but not at the join
        let g = Graph::edgeless(2);
        let split = vec![
            node(&[2], Join, &[1, 2]),
            node(&[2], Forget(1), &[3]),
            node(&[2], Forget(1), &[4]),
            node(&[1, 2], Leaf, &[]),
            node(&[1, 2], Leaf, &[]),
        ];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(split).unwrap();
        assert_eq!(validate_edge_introduce_td(&g, &td), Err(TdViolation::DisconnectedVertex(1)));

        let missing = vec![node(&[1], Leaf, &[])];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(missing).unwrap();
        assert_eq!(validate_edge_introduce_td(&g, &td), Err(TdViolation::UncoveredVertex(2)));

        let cyclic = vec![node(&[1, 2], IntroduceVertex(2), &[1]), node(&[1], Forget(2), &[1])];
        let td = EdgeIntroduceTreeDecomposition::from_nodes(cyclic).unwrap();
        assert!(matches!(validate_edge_introduce_td(&g, &td), Err(TdViolation::BadTree(_))));
    }

    #[test]
    fn from_ordering_examples() {
        let p3 = Graph::path(3);
        let td = td_from_ordering(&p3, &LinearArrangement::identity(3)).unwrap();
        assert_eq!(validate_edge_introduce_td(&p3, &td), Ok(1));
        let k3 = Graph::complete(3);
        let td = td_from_ordering(&k3, &LinearArrangement::identity(3)).unwrap();
        assert_eq!(validate_edge_introduce_td(&k3, &td), Ok(2));
        let c4 = Graph::cycle(4);
        let td = td_from_ordering(&c4, &LinearArrangement::identity(4)).unwrap();
        assert!(validate_edge_introduce_td(&c4, &td).unwrap() <= 2);
        let e = Graph::edgeless(3);
        let td = td_from_ordering(&e, &LinearArrangement::identity(3)).unwrap();
        assert_eq!(validate_edge_introduce_td(&e, &td), Ok(0));
    }
}
