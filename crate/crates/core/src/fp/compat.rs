use super::{FpMatrix, PrimeModulus};
use crate::graph::{Color, ColorLists, Vertex};
use crate::{Error, Result};
use std::collections::HashSet;

/// Largest number of assignments per side that [`compatibility_matrix`]
/// will materialize.
pub const MAX_SIDE_ASSIGNMENTS: u64 = 1 << 20;
const MAX_DENSE_ENTRIES: u64 = 1 << 26;

/// Bipartite graph between the two sides of a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCutGraph {
    left: Vec<Vertex>,
    right: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    q: u32,
}

impl BipartiteCutGraph {
    /// `edges` are `(x, y)` pairs with `x` on the left and `y` on the right.
    pub fn new(left: Vec<Vertex>, right: Vec<Vertex>, edges: Vec<(Vertex, Vertex)>, q: u32) -> Result<Self> {
        let l: HashSet<_> = left.iter().copied().collect();
        let r: HashSet<_> = right.iter().copied().collect();
        if l.len() != left.len() || r.len() != right.len() {
            return Err(Error::InvalidGraph("repeated vertex on one side of the cut".into()));
        }
        if let Some(v) = l.intersection(&r).next() {
            return Err(Error::InvalidGraph(format!("vertex {v} on both sides of the cut")));
        }
        let mut seen = HashSet::new();
        for &(x, y) in &edges {
            if !l.contains(&x) || !r.contains(&y) {
                return Err(Error::InvalidGraph(format!("edge ({x},{y}) does not cross the cut")));
            }
            if !seen.insert((x, y)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({x},{y})")));
            }
        }
        Ok(BipartiteCutGraph { left, right, edges, q })
    }

    /// `t` disjoint edges `(i, t + i)`, `i = 1..=t`.
    pub fn perfect_matching(t: u32, q: u32) -> Self {
        let left: Vec<Vertex> = (1..=t).collect();
        let right: Vec<Vertex> = (t + 1..=2 * t).collect();
        let edges = (1..=t).map(|i| (i, t + i)).collect();
        BipartiteCutGraph { left, right, edges, q }
    }

    pub fn left(&self) -> &[Vertex] {
        &self.left
    }

    pub fn right(&self) -> &[Vertex] {
        &self.right
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of cut edges incident to `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(x, y)| x == v || y == v).count()
    }
}

/// `q^k`, or `None` on overflow.
pub fn assignment_count(k: usize, q: u32) -> Option<u64> {
    (q as u64).checked_pow(k.try_into().ok()?)
}

/// Mixed-radix key of an assignment: `Σ (c_j − 1) · q^{k−j}` over the
/// ordered colors `c_1..c_k` (the first vertex is the most significant digit).
pub fn encode_key(colors: &[Color], q: u32) -> u64 {
    colors.iter().fold(0u64, |acc, &c| acc * q as u64 + (c as u64 - 1))
}

/// Inverse of [`encode_key`] for an assignment to `k` vertices.
pub fn decode_key(mut key: u64, k: usize, q: u32) -> Vec<Color> {
    let mut colors = vec![0; k];
    for slot in colors.iter_mut().rev() {
        *slot = (key % q as u64) as Color + 1;
        key /= q as u64;
    }
    colors
}

fn side_assignments(side: &[Vertex], q: u32, lists: Option<&ColorLists>) -> Result<Vec<Vec<Color>>> {
    let total = assignment_count(side.len(), q).filter(|&c| c <= MAX_SIDE_ASSIGNMENTS).ok_or_else(|| {
        Error::Capacity(format!(
            "{q}^{} assignments exceed the dense limit {MAX_SIDE_ASSIGNMENTS}",
            side.len()
        ))
    })?;
    let allowed: Vec<Vec<bool>> = side
        .iter()
        .map(|&v| {
            let mut mask = vec![true; q as usize + 1];
            if let Some(lists) = lists {
                let list = lists.try_list(v).ok_or_else(|| Error::InvalidLists(format!("no list for vertex {v}")))?;
                if list.is_empty() {
                    return Err(Error::InvalidLists(format!("vertex {v} has an empty list")));
                }
                mask = vec![false; q as usize + 1];
                for &c in list {
                    if c as usize <= q as usize {
                        mask[c as usize] = true;
                    }
                }
            }
            Ok(mask)
        })
        .collect::<Result<_>>()?;
    Ok((0..total)
        .map(|key| decode_key(key, side.len(), q))
        .filter(|cs| cs.iter().zip(&allowed).all(|(&c, m)| m[c as usize]))
        .collect())
}

/// Color compatibility matrix of a cut: rows are assignments to the left
/// side, columns assignments to the right side, both in ascending mixed-radix
/// order (restricted to list-valid assignments when `lists` is given). An
/// entry is 1 iff no crossing edge has equal colors at its endpoints.
pub fn compatibility_matrix(h: &BipartiteCutGraph, lists: Option<&ColorLists>, p: PrimeModulus) -> Result<FpMatrix> {
    if h.q == 0 {
        return Err(Error::Precondition("q must be at least 1".into()));
    }
    let rows = side_assignments(&h.left, h.q, lists)?;
    let cols = side_assignments(&h.right, h.q, lists)?;
    if (rows.len() as u64).saturating_mul(cols.len() as u64) > MAX_DENSE_ENTRIES {
        return Err(Error::Capacity(format!(
            "{}x{} dense matrix exceeds {MAX_DENSE_ENTRIES} entries",
            rows.len(),
            cols.len()
        )));
    }
    let idx = |side: &[Vertex], v: Vertex| side.iter().position(|&u| u == v).expect("validated endpoint");
    let pairs: Vec<(usize, usize)> = h.edges.iter().map(|&(x, y)| (idx(&h.left, x), idx(&h.right, y))).collect();
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for x in &rows {
        for y in &cols {
            entries.push(u64::from(pairs.iter().all(|&(i, j)| x[i] != y[j])));
        }
    }
    FpMatrix::from_entries(rows.len(), cols.len(), entries, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{fp_rank, kronecker};

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn key_round_trip() {
        let cs = vec![2, 1, 3, 3];
        let k = encode_key(&cs, 3);
        assert_eq!(k, 27 + 2 * 3 + 2);
        assert_eq!(decode_key(k, 4, 3), cs);
        assert_eq!(encode_key(&[], 5), 0);
    }

    #[test]
    fn single_edge() {
        let h = BipartiteCutGraph::new(vec![1], vec![2], vec![(1, 2)], 3).unwrap();
        let m = compatibility_matrix(&h, None, pm(5)).unwrap();
        assert_eq!(m.entries(), &[0, 1, 1, 1, 0, 1, 1, 1, 0]);
    }

    #[test]
    fn no_edges_is_all_ones() {
        let h = BipartiteCutGraph::new(vec![1], vec![2], vec![], 2).unwrap();
        let m = compatibility_matrix(&h, None, pm(5)).unwrap();
        assert_eq!(m.entries(), &[1, 1, 1, 1]);
    }

    #[test]
    fn matching_is_kronecker_power() {
        for q in [2, 3] {
            let single = compatibility_matrix(&BipartiteCutGraph::perfect_matching(1, q), None, pm(5)).unwrap();
            let m = compatibility_matrix(&BipartiteCutGraph::perfect_matching(2, q), None, pm(5)).unwrap();
            assert_eq!(m, kronecker(&single, &single).unwrap());
        }
    }

    #[test]
    fn lists_restrict_rows_and_columns() {
        let lists = ColorLists::from_lists(3, vec![vec![1, 2], vec![2]]).unwrap();
        let h = BipartiteCutGraph::new(vec![1], vec![2], vec![(1, 2)], 3).unwrap();
        let m = compatibility_matrix(&h, Some(&lists), pm(2)).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(m.entries(), &[1, 0]);
        assert_eq!(fp_rank(&m), 1);
    }

    #[test]
    fn errors() {
        assert!(BipartiteCutGraph::new(vec![1], vec![1], vec![], 3).is_err());
        assert!(BipartiteCutGraph::new(vec![1], vec![2], vec![(2, 1)], 3).is_err());
        assert!(BipartiteCutGraph::new(vec![1], vec![2], vec![(1, 2), (1, 2)], 3).is_err());
        let h = BipartiteCutGraph::new(vec![1], vec![2], vec![(1, 2)], 0).unwrap();
        assert!(matches!(compatibility_matrix(&h, None, pm(2)), Err(Error::Precondition(_))));
        let big = BipartiteCutGraph::perfect_matching(21, 2);
        assert!(matches!(compatibility_matrix(&big, None, pm(2)), Err(Error::Capacity(_))));
    }
}
