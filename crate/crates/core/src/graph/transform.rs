use super::{Graph, LinearArrangement, Vertex};
use crate::{Error, Result};

/// Replaces every edge by a path with `k` edges. Subdivision vertices get
/// ids `n + 1, n + 2, …`, edge by edge in edge order, running from the
/// edge's first endpoint to its second.
pub fn k_stretch(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("stretch factor k must be at least 1".into()));
    }
    let n = g.n() + (k - 1) * g.m();
    let mut edges = Vec::with_capacity(k * g.m());
    let mut next = g.n() as Vertex;
    for &(u, v) in g.edges() {
        let mut prev = u;
        for _ in 1..k {
            next += 1;
            edges.push((prev, next));
            prev = next;
        }
        edges.push((prev, v));
    }
    Graph::new(n, edges)
}

/// Arrangement of `k_stretch(g, k)` with the same cutwidth as `a` on `g`.
///
/// Each original vertex is placed in its original relative order; directly
/// after it come the subdivision paths of its edges to later vertices, each
/// path contiguous and starting at the end next to the placed vertex. Every
/// cut then crosses exactly one edge per original crossing edge.
pub fn stretch_arrangement(g: &Graph, a: &LinearArrangement, k: usize) -> Result<LinearArrangement> {
    a.check_for(g)?;
    if k == 0 {
        return Err(Error::Precondition("stretch factor k must be at least 1".into()));
    }
    // subdivision vertices of edge e, from its first endpoint to its second
    let path = |e: usize| -> Vec<Vertex> {
        let base = g.n() as Vertex + (e * (k - 1)) as Vertex;
        (1..k as Vertex).map(|j| base + j).collect()
    };
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let first = if a.position(u) < a.position(v) { u } else { v };
        later[first as usize].push(e);
    }
    let mut order = Vec::with_capacity(g.n() + (k - 1) * g.m());
    for &v in a.order() {
        order.push(v);
        let mut es = later[v as usize].clone();
        let other = |e: usize| {
            let (x, y) = g.edges()[e];
            if x == v {
                y
            } else {
                x
            }
        };
        es.sort_by_key(|&e| a.position(other(e)));
        for e in es {
            let mut p = path(e);
            if g.edges()[e].0 != v {
                p.reverse();
            }
            order.extend(p);
        }
    }
    LinearArrangement::new(order)
}
