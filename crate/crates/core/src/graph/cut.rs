use super::{Graph, LinearArrangement, Vertex};
use crate::fp::BipartiteCutGraph;
use crate::{Error, Result};

/// Cut structure at position `i` of an arrangement.
///
/// `left_boundary` holds the vertices among `v_1..v_i` with a neighbor after
/// position `i`; `x = left_boundary ∪ {v_i}`; `y` the vertices after `i`
/// adjacent to `x`. All three are ordered by position, and `crossing` lists
/// the edges between `x` and `y` as `(left, right)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProfile {
    pub position: usize,
    pub left_boundary: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub crossing: Vec<(Vertex, Vertex)>,
}

impl CutProfile {
    /// Number of crossing edges at `v`.
    pub fn cut_degree(&self, v: Vertex) -> usize {
        self.crossing.iter().filter(|&&(x, y)| x == v || y == v).count()
    }

    pub fn bipartite(&self, q: u32) -> BipartiteCutGraph {
        BipartiteCutGraph::new(self.x.clone(), self.y.clone(), self.crossing.clone(), q)
            .expect("profile sides are disjoint and edges cross")
    }
}

/// Number of edges crossing each prefix cut `{v_1..v_i} | {v_{i+1}..v_n}`,
/// for `i = 1..n-1` (index `i - 1`).
pub fn cut_sizes(g: &Graph, a: &LinearArrangement) -> Result<Vec<usize>> {
    a.check_for(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    // difference array: an edge between positions i < j crosses cuts i..j-1
    let mut delta = vec![0i64; n + 1];
    for &(u, v) in g.edges() {
        let (i, j) = {
            let (pu, pv) = (a.position(u), a.position(v));
            (pu.min(pv), pu.max(pv))
        };
        delta[i] += 1;
        delta[j] -= 1;
    }
    let mut out = Vec::with_capacity(n - 1);
    let mut run = 0i64;
    for d in delta.iter().take(n).skip(1) {
        run += d;
        out.push(run as usize);
    }
    Ok(out)
}

/// Largest prefix cut of the arrangement.
pub fn cutwidth_of(g: &Graph, a: &LinearArrangement) -> Result<usize> {
    Ok(cut_sizes(g, a)?.into_iter().max().unwrap_or(0))
}

/// Cut profile at 1-based position `i`.
pub fn cut_profile(g: &Graph, a: &LinearArrangement, i: usize) -> Result<CutProfile> {
    a.check_for(g)?;
    if i == 0 || i > g.n() {
        return Err(Error::Precondition(format!("position {i} outside 1..={}", g.n())));
    }
    Ok(profile_at(g, a, i))
}

/// Profiles for every position `1..=n` (index `i - 1`).
pub fn cut_profiles(g: &Graph, a: &LinearArrangement) -> Result<Vec<CutProfile>> {
    a.check_for(g)?;
    Ok((1..=g.n()).map(|i| profile_at(g, a, i)).collect())
}

fn profile_at(g: &Graph, a: &LinearArrangement, i: usize) -> CutProfile {
    let vi = a.at(i);
    let mut left_boundary = Vec::new();
    let mut crossing = Vec::new();
    for pos in 1..=i {
        let u = a.at(pos);
        let mut right: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| a.position(w) > i).collect();
        if !right.is_empty() {
            left_boundary.push(u);
            right.sort_by_key(|&w| a.position(w));
            crossing.extend(right.into_iter().map(|w| (u, w)));
        }
    }
    let mut x = left_boundary.clone();
    if x.last() != Some(&vi) {
        x.push(vi);
    }
    let mut y: Vec<Vertex> = crossing.iter().map(|&(_, w)| w).collect();
    y.sort_by_key(|&w| a.position(w));
    y.dedup();
    CutProfile { position: i, left_boundary, x, y, crossing }
}
