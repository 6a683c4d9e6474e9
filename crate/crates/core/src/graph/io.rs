//! Line-oriented text formats for graphs and tree decompositions.
//!
//! Graph files:
//!
//! ```text
//! graph <n> <m>
//! edge <u> <v>            (m times)
//! q <q>                   (optional)
//! list <v> <c1> <c2> ...  (optional, per vertex; needs q)
//! order <v1> ... <vn>     (optional)
//! ```
//!
//! Tree-decomposition files (node 1 is the root):
//!
//! ```text
//! td <nodes> <maxbag> <n>
//! bag <id> <v...>
//! kind <id> leaf | iv <v> | ie <u> <v> | forget <v> | join
//! tedge <parent> <child>
//! ```
//!
//! `#` starts a comment. Serializing and re-parsing yields the same value.

use super::{ColorLists, EdgeIntroduceTreeDecomposition, Graph, LinearArrangement, NodeKind, TdNode, Vertex};
use crate::{Error, Result};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub q: Option<u32>,
    pub lists: Option<ColorLists>,
    pub order: Option<LinearArrangement>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile { graph, q: None, lists: None, order: None }
    }

    /// Lists from the file, or full lists over `q` when none were given.
    pub fn lists_or_full(&self, q: u32) -> ColorLists {
        self.lists.clone().unwrap_or_else(|| ColorLists::full(self.graph.n(), q))
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a number, found '{tok}'")))
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() != n {
        return Err(Error::parse(line, format!("'{}' takes {} arguments", toks[0], n - 1)));
    }
    Ok(())
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut q = None;
    let mut list_lines: Vec<(usize, Vertex, Vec<u32>)> = Vec::new();
    let mut order = None;
    for (ln, toks) in lines(text) {
        if header.is_none() && toks[0] != "graph" {
            return Err(Error::parse(ln, "file must start with 'graph <n> <m>'"));
        }
        match toks[0] {
            "graph" => {
                if header.is_some() {
                    return Err(Error::parse(ln, "repeated 'graph' header"));
                }
                arity(ln, &toks, 3)?;
                header = Some((num(ln, toks[1])?, num(ln, toks[2])?));
            }
            "edge" => {
                arity(ln, &toks, 3)?;
                edges.push((num(ln, toks[1])?, num(ln, toks[2])?));
            }
            "q" => {
                arity(ln, &toks, 2)?;
                if q.replace(num::<u32>(ln, toks[1])?).is_some() {
                    return Err(Error::parse(ln, "repeated 'q' line"));
                }
            }
            "list" => {
                if toks.len() < 2 {
                    return Err(Error::parse(ln, "'list' needs a vertex"));
                }
                let colors = toks[2..].iter().map(|t| num(ln, t)).collect::<Result<_>>()?;
                list_lines.push((ln, num(ln, toks[1])?, colors));
            }
            "order" => {
                if order.is_some() {
                    return Err(Error::parse(ln, "repeated 'order' line"));
                }
                let vs: Vec<Vertex> = toks[1..].iter().map(|t| num(ln, t)).collect::<Result<_>>()?;
                order = Some((ln, vs));
            }
            other => return Err(Error::parse(ln, format!("unknown directive '{other}'"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(0, "missing 'graph' header"));
    };
    if edges.len() != m {
        return Err(Error::parse(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = Graph::new(n, edges)?;
    let lists = if list_lines.is_empty() {
        None
    } else {
        let Some(qv) = q else {
            return Err(Error::parse(list_lines[0].0, "'list' requires a 'q' line"));
        };
        let mut lists = ColorLists::full(n, qv);
        let mut seen = vec![false; n + 1];
        for (ln, v, colors) in list_lines {
            if v == 0 || v as usize > n {
                return Err(Error::parse(ln, format!("vertex {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::parse(ln, format!("second list for vertex {v}")));
            }
            lists.set_list(v, colors)?;
        }
        Some(lists)
    };
    let order = match order {
        Some((ln, vs)) => {
            if vs.len() != n {
                return Err(Error::parse(ln, format!("order lists {} vertices, graph has {n}", vs.len())));
            }
            Some(LinearArrangement::new(vs)?)
        }
        None => None,
    };
    Ok(GraphFile { graph, q, lists, order })
}

pub fn serialize_graph_file(f: &GraphFile) -> String {
    let g = &f.graph;
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    let q = f.q.or(f.lists.as_ref().map(ColorLists::q));
    if let Some(q) = q {
        writeln!(out, "q {q}").unwrap();
    }
    if let Some(lists) = &f.lists {
        for v in g.vertices() {
            write!(out, "list {v}").unwrap();
            for c in lists.list(v) {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
    }
    if let Some(a) = &f.order {
        out.push_str("order");
        for v in a.order() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a decomposition file, returning it with the declared vertex count.
pub fn parse_td_file(text: &str) -> Result<(EdgeIntroduceTreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut kinds: Vec<Option<NodeKind>> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();
    let node_id = |ln: usize, tok: &str, count: usize| -> Result<usize> {
        let id: usize = num(ln, tok)?;
        if id == 0 || id > count {
            return Err(Error::parse(ln, format!("node id {id} outside 1..={count}")));
        }
        Ok(id - 1)
    };
    for (ln, toks) in lines(text) {
        if toks[0] == "td" {
            if header.is_some() {
                return Err(Error::parse(ln, "repeated 'td' header"));
            }
            arity(ln, &toks, 4)?;
            let h = (num(ln, toks[1])?, num(ln, toks[2])?, num(ln, toks[3])?);
            bags = vec![None; h.0];
            kinds = vec![None; h.0];
            children = vec![Vec::new(); h.0];
            header = Some(h);
            continue;
        }
        let Some((count, _, _)) = header else {
            return Err(Error::parse(ln, "file must start with 'td <nodes> <maxbag> <n>'"));
        };
        match toks[0] {
            "bag" => {
                if toks.len() < 2 {
                    return Err(Error::parse(ln, "'bag' needs a node id"));
                }
                let id = node_id(ln, toks[1], count)?;
                let vs = toks[2..].iter().map(|t| num(ln, t)).collect::<Result<_>>()?;
                if bags[id].replace(vs).is_some() {
                    return Err(Error::parse(ln, format!("second bag for node {}", id + 1)));
                }
            }
            "kind" => {
                if toks.len() < 3 {
                    return Err(Error::parse(ln, "'kind' needs a node id and a kind"));
                }
                let id = node_id(ln, toks[1], count)?;
                let kind = match (toks[2], toks.len()) {
                    ("leaf", 3) => NodeKind::Leaf,
                    ("join", 3) => NodeKind::Join,
                    ("iv", 4) => NodeKind::IntroduceVertex(num(ln, toks[3])?),
                    ("forget", 4) => NodeKind::Forget(num(ln, toks[3])?),
                    ("ie", 5) => NodeKind::IntroduceEdge(num(ln, toks[3])?, num(ln, toks[4])?),
                    (k, _) => return Err(Error::parse(ln, format!("malformed kind '{k}'"))),
                };
                if kinds[id].replace(kind).is_some() {
                    return Err(Error::parse(ln, format!("second kind for node {}", id + 1)));
                }
            }
            "tedge" => {
                arity(ln, &toks, 3)?;
                let parent = node_id(ln, toks[1], count)?;
                let child = node_id(ln, toks[2], count)?;
                children[parent].push(child);
            }
            other => return Err(Error::parse(ln, format!("unknown directive '{other}'"))),
        }
    }
    let Some((count, maxbag, n)) = header else {
        return Err(Error::parse(0, "missing 'td' header"));
    };
    let mut nodes = Vec::with_capacity(count);
    for (i, ((bag, kind), children)) in bags.into_iter().zip(kinds).zip(children).enumerate() {
        let bag = bag.ok_or_else(|| Error::parse(0, format!("node {} has no bag", i + 1)))?;
        let kind = kind.ok_or_else(|| Error::parse(0, format!("node {} has no kind", i + 1)))?;
        nodes.push(TdNode { bag, kind, children });
    }
    let td = EdgeIntroduceTreeDecomposition::from_nodes(nodes)?;
    if td.max_bag() != maxbag {
        return Err(Error::parse(0, format!("header declares max bag {maxbag}, found {}", td.max_bag())));
    }
    Ok((td, n))
}

pub fn serialize_td_file(td: &EdgeIntroduceTreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "td {} {} {n}", td.len(), td.max_bag()).unwrap();
    for (i, node) in td.nodes().iter().enumerate() {
        write!(out, "bag {}", i + 1).unwrap();
        for v in &node.bag {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
        let kind = match node.kind {
            NodeKind::Leaf => "leaf".to_string(),
            NodeKind::Join => "join".to_string(),
            NodeKind::IntroduceVertex(v) => format!("iv {v}"),
            NodeKind::Forget(v) => format!("forget {v}"),
            NodeKind::IntroduceEdge(u, v) => format!("ie {u} {v}"),
        };
        writeln!(out, "kind {} {kind}", i + 1).unwrap();
    }
    for (i, node) in td.nodes().iter().enumerate() {
        for &c in &node.children {
            writeln!(out, "tedge {} {}", i + 1, c + 1).unwrap();
        }
    }
    out
}
