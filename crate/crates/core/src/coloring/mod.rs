//! Counting list colorings.
//!
//! Three counters share one notion of a table: a sparse map from mixed-radix
//! assignment keys over a vertex sequence to residues. The brute-force
//! oracles enumerate colorings directly, [`count_colorings_folklore`] runs
//! the plain cut dynamic program, and [`count_colorings_rank`] runs the
//! reduced variant whose tables stay within `(q-1)` colors on most of the cut.

mod brute;
mod folklore;
mod rank;
mod table;

pub use brute::{count_colorings_bruteforce, count_colorings_bruteforce_with, count_essentially_distinct_bruteforce};
pub use folklore::{count_colorings_folklore, count_colorings_folklore_with, folklore_trace};
pub use rank::{
    count_colorings_rank, count_colorings_rank_with, fully_reduce, iterate_cut, iterate_cut_with, rank_trace,
    reduce_vertex, ReducedState, RankStep,
};
pub use table::{Assignment, SparseTable};

use crate::fp::assignment_count;
use crate::graph::{Color, ColorLists, CutProfile, Graph, LinearArrangement, Vertex};
use crate::{Error, Exec, Result};
use std::collections::HashMap;

fn check_inputs(g: &Graph, lists: &ColorLists, a: Option<&LinearArrangement>) -> Result<()> {
    lists.check_for(g)?;
    if let Some(a) = a {
        a.check_for(g)?;
    }
    Ok(())
}

/// Domain of the table before position 1.
fn empty_profile() -> CutProfile {
    CutProfile { position: 0, left_boundary: Vec::new(), x: Vec::new(), y: Vec::new(), crossing: Vec::new() }
}

/// Re-keying from a table over `X_{i-1}` to one over `X_i` when `v_i`
/// receives a color.
struct Step {
    q: u32,
    prev_len: usize,
    /// For each vertex of `X_i`: index into `X_{i-1}`, or `None` for `v_i`.
    sources: Vec<Option<usize>>,
    /// Indices in `X_{i-1}` of the neighbors of `v_i`.
    neighbors: Vec<usize>,
    colors: Vec<Color>,
}

const CHUNK: usize = 2048;

impl Step {
    fn new(g: &Graph, lists: &ColorLists, prev: &[Vertex], next: &CutProfile, vi: Vertex) -> Result<Self> {
        let q = lists.q();
        if assignment_count(next.x.len(), q).is_none() || assignment_count(prev.len(), q).is_none() {
            return Err(Error::Capacity(format!("{q}^{} table keys overflow 64 bits", next.x.len().max(prev.len()))));
        }
        let index: HashMap<Vertex, usize> = prev.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let sources = next
            .x
            .iter()
            .map(|v| if *v == vi { Ok(None) } else { index.get(v).copied().map(Some).ok_or(()) })
            .collect::<std::result::Result<Vec<_>, ()>>()
            .map_err(|_| Error::Internal("cut domain is not contained in the previous domain".into()))?;
        let mut neighbors = Vec::new();
        for &w in g.neighbors(vi) {
            if let Some(&i) = index.get(&w) {
                neighbors.push(i);
            }
        }
        Ok(Step { q, prev_len: prev.len(), sources, neighbors, colors: lists.list(vi).to_vec() })
    }

    /// Pushes every source entry along each compatible color of `v_i`.
    fn apply<V, A>(&self, src: &[(u64, V)], exec: Exec, add: &A) -> HashMap<u64, V>
    where
        V: Clone + Send + Sync,
        A: Fn(&mut V, &V) + Sync + Send,
    {
        let chunks = src.len().div_ceil(CHUNK);
        exec.map_reduce(
            chunks,
            HashMap::new,
            |ci| {
                let mut out: HashMap<u64, V> = HashMap::new();
                let mut next = vec![0 as Color; self.sources.len()];
                for (key, val) in &src[ci * CHUNK..((ci + 1) * CHUNK).min(src.len())] {
                    let z = crate::fp::decode_key(*key, self.prev_len, self.q);
                    for &c in &self.colors {
                        if self.neighbors.iter().any(|&j| z[j] == c) {
                            continue;
                        }
                        for (slot, s) in next.iter_mut().zip(&self.sources) {
                            *slot = s.map_or(c, |j| z[j]);
                        }
                        let k = crate::fp::encode_key(&next, self.q);
                        match out.get_mut(&k) {
                            Some(acc) => add(acc, val),
                            None => {
                                out.insert(k, val.clone());
                            }
                        }
                    }
                }
                out
            },
            |a, b| merge(a, b, add),
        )
    }
}

fn merge<V, A: Fn(&mut V, &V)>(a: HashMap<u64, V>, b: HashMap<u64, V>, add: &A) -> HashMap<u64, V> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for (k, v) in small {
        match big.get_mut(&k) {
            Some(acc) => add(acc, &v),
            None => {
                big.insert(k, v);
            }
        }
    }
    big
}

/// Entries sorted by key.
fn sorted<V>(map: HashMap<u64, V>) -> Vec<(u64, V)> {
    let mut v: Vec<_> = map.into_iter().collect();
    v.sort_unstable_by_key(|e| e.0);
    v
}

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::{random_lists, random_permutation, seeded_random_graph, ColorLists, Graph, LinearArrangement, SplitMix64};

    /// Small random instance: graph, lists and arrangement from one seed.
    pub fn instance(seed: u64, n: usize, q: u32, prob: f64) -> (Graph, ColorLists, LinearArrangement) {
        let g = seeded_random_graph(n, prob, seed);
        let mut rng = SplitMix64::new(seed ^ 0x9e37_79b9);
        let lists = random_lists(n, q, &mut rng);
        let a = random_permutation(n, &mut rng);
        (g, lists, a)
    }

    /// Fig-1 style test graph on 7 vertices.
    pub fn figure_graph() -> Graph {
        Graph::new(7, vec![(1, 7), (3, 4), (3, 5), (1, 3), (6, 5), (3, 7), (2, 1)]).unwrap()
    }
}
