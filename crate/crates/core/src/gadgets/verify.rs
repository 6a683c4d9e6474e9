use super::GadgetInstance;
use crate::graph::{Color, Graph, Vertex};
use crate::guard::{effective, GADGET_NODES};
use crate::{Error, Exec, Result};
use std::sync::atomic::{AtomicU64, Ordering};

/// Boundary coloring whose extension count differs from the expected value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub boundary: Vec<Color>,
    pub expected: u64,
    pub actual: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReport {
    /// Boundary colorings checked (those allowed by the boundary lists).
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
    /// Search nodes visited.
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a Graph,
    lists: &'a crate::graph::ColorLists,
    nodes: &'a AtomicU64,
    limit: u64,
}

impl Search<'_> {
    /// Proper extensions of `colors` to `order[i..]`.
    fn count(&self, order: &[Vertex], i: usize, colors: &mut [Color]) -> Result<u128> {
        let Some(&v) = order.get(i) else { return Ok(1) };
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::Capacity(format!("gadget enumeration exceeded {} nodes", self.limit)));
        }
        let mut total = 0u128;
        for &c in self.lists.list(v) {
            if self.g.neighbors(v).iter().any(|&w| colors[w as usize] == c) {
                continue;
            }
            colors[v as usize] = c;
            total += self.count(order, i + 1, colors)?;
        }
        colors[v as usize] = 0;
        Ok(total)
    }
}

/// Components of the graph after deleting the boundary, each in ascending
/// vertex order.
fn interior_components(g: &Graph, boundary: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut blocked = vec![false; g.n() + 1];
    boundary.iter().for_each(|&b| blocked[b as usize] = true);
    let mut seen = blocked.clone();
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

type Counts = Vec<(Vec<Color>, u128)>;

fn counts_with_nodes(inst: &GadgetInstance, exec: Exec) -> Result<(Counts, u64)> {
    let (g, lists, boundary) = (inst.graph(), inst.lists(), inst.boundary());
    let comps = interior_components(g, boundary);
    // boundary colorings allowed by the lists, in ascending key order
    let mut alphas: Vec<Vec<Color>> = vec![Vec::new()];
    for &b in boundary {
        alphas = alphas.into_iter().flat_map(|a| lists.list(b).iter().map(move |&c| [a.as_slice(), &[c]].concat())).collect();
        if alphas.len() as u128 > effective(GADGET_NODES) {
            return Err(Error::Capacity("too many boundary colorings".into()));
        }
    }
    let nodes = AtomicU64::new(0);
    let limit = u64::try_from(effective(GADGET_NODES)).unwrap_or(u64::MAX);
    let search = Search { g, lists, nodes: &nodes, limit };
    let results = exec.map_collect(alphas.len(), |i| -> Result<u128> {
        let alpha = &alphas[i];
        let mut colors = vec![0 as Color; g.n() + 1];
        for (&b, &c) in boundary.iter().zip(alpha) {
            if g.neighbors(b).iter().any(|&w| colors[w as usize] == c) {
                return Ok(0);
            }
            colors[b as usize] = c;
        }
        let mut total = 1u128;
        for comp in &comps {
            let part = search.count(comp, 0, &mut colors)?;
            total = total.checked_mul(part).ok_or_else(|| Error::Capacity("extension count overflow".into()))?;
            if total == 0 {
                break;
            }
        }
        Ok(total)
    });
    let counts = alphas.into_iter().zip(results).map(|(a, r)| r.map(|n| (a, n))).collect::<Result<Vec<_>>>()?;
    Ok((counts, nodes.into_inner()))
}

/// Exact number of extensions of every list-valid boundary coloring, in
/// ascending key order.
pub fn extension_counts(inst: &GadgetInstance, exec: Exec) -> Result<Vec<(Vec<Color>, u128)>> {
    counts_with_nodes(inst, exec).map(|r| r.0)
}

/// Compares extension counts with `expected`, a table over `[q]^|B|`
/// indexed by key. Boundary colorings outside the boundary lists are not
/// checked.
pub fn verify_gadget(inst: &GadgetInstance, expected: &[u64]) -> Result<GadgetReport> {
    verify_gadget_with(inst, expected, Exec::default())
}

pub fn verify_gadget_with(inst: &GadgetInstance, expected: &[u64], exec: Exec) -> Result<GadgetReport> {
    let (q, k) = (inst.q(), inst.boundary().len());
    if Some(expected.len() as u64) != crate::fp::assignment_count(k, q) {
        return Err(Error::Dimension(format!("expected table has {} values, need {q}^{k}", expected.len())));
    }
    let (counts, nodes) = counts_with_nodes(inst, exec)?;
    let mismatches: Vec<Mismatch> = counts
        .iter()
        .filter_map(|(alpha, actual)| {
            let want = expected[crate::fp::encode_key(alpha, q) as usize];
            (want as u128 != *actual).then(|| Mismatch { boundary: alpha.clone(), expected: want, actual: *actual })
        })
        .collect();
    Ok(GadgetReport { checked: counts.len(), passed: mismatches.is_empty(), mismatches, nodes })
}
