use super::{check_inputs, empty_profile, SparseTable, Step};
use crate::fp::{BipartiteCutGraph, PrimeModulus};
use crate::graph::{cut_profile, ColorLists, CutProfile, Graph, LinearArrangement, Vertex};
use crate::{Error, Exec, Result};

/// Table over `X_i` together with its reduced vertices `R_i`.
///
/// Every stored key gives each reduced vertex a color other than `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedState {
    table: SparseTable,
    reduced: Vec<Vertex>,
    position: usize,
    cut: BipartiteCutGraph,
}

/// States recorded at one position of [`rank_trace`].
#[derive(Debug, Clone)]
pub struct RankStep {
    pub position: usize,
    pub after_iterate: ReducedState,
    pub after_reduce: ReducedState,
}

impl ReducedState {
    /// `cut` is the bipartite cut graph at `position`, with the table domain
    /// as its left side.
    pub fn new(table: SparseTable, mut reduced: Vec<Vertex>, position: usize, cut: BipartiteCutGraph) -> Result<Self> {
        if cut.left() != table.domain() {
            return Err(Error::Dimension("cut left side differs from the table domain".into()));
        }
        reduced.sort_unstable();
        reduced.dedup();
        if let Some(r) = reduced.iter().find(|r| !table.domain().contains(r)) {
            return Err(Error::Precondition(format!("reduced vertex {r} outside the table domain")));
        }
        let s = ReducedState { table, reduced, position, cut };
        if !s.invariant_holds() {
            return Err(Error::Precondition("a stored key colors a reduced vertex with q".into()));
        }
        Ok(s)
    }

    /// State before position 1: the empty assignment with value 1.
    pub fn initial(q: u32, p: PrimeModulus) -> Self {
        let mut table = SparseTable::new(Vec::new(), q, p).expect("empty domain");
        table.set(0, 1);
        let cut = BipartiteCutGraph::new(Vec::new(), Vec::new(), Vec::new(), q).expect("empty cut");
        ReducedState { table, reduced: Vec::new(), position: 0, cut }
    }

    pub fn table(&self) -> &SparseTable {
        &self.table
    }

    /// Reduced vertices in ascending order.
    pub fn reduced(&self) -> &[Vertex] {
        &self.reduced
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn cut(&self) -> &BipartiteCutGraph {
        &self.cut
    }

    pub fn is_reduced(&self, v: Vertex) -> bool {
        self.reduced.binary_search(&v).is_ok()
    }

    /// Unreduced vertices of the domain with exactly one cut edge.
    pub fn reducible(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> =
            self.table.domain().iter().copied().filter(|&v| !self.is_reduced(v) && self.cut.degree(v) == 1).collect();
        vs.sort_unstable();
        vs
    }

    pub fn is_fully_reduced(&self) -> bool {
        self.reducible().is_empty()
    }

    /// No stored key colors a reduced vertex with `q`.
    pub fn invariant_holds(&self) -> bool {
        let q = self.table.q();
        let idx: Vec<usize> = self
            .reduced
            .iter()
            .map(|r| self.table.domain().iter().position(|v| v == r).expect("reduced vertex in domain"))
            .collect();
        let k = self.table.domain().len();
        self.table.entries().iter().all(|&(key, _)| {
            let colors = crate::fp::decode_key(key, k, q);
            idx.iter().all(|&i| colors[i] != q)
        })
    }
}

fn check_modulus(q: u32, p: PrimeModulus) -> Result<()> {
    if q == 0 || !p.divides(q as u64 - 1) {
        return Err(Error::Precondition(format!("p = {p} does not divide q - 1 = {}", q.saturating_sub(1))));
    }
    Ok(())
}

/// Makes `v` a reduced vertex: `T'[x] = T[x] - T[x']` where `x'` recolors
/// `v` with `q`, and `T'[x] = 0` when `x(v) = q`.
pub fn reduce_vertex(s: ReducedState, v: Vertex, cut: &BipartiteCutGraph) -> Result<ReducedState> {
    let (q, p) = (s.table.q(), s.table.modulus());
    if cut.left() != s.table.domain() {
        return Err(Error::Dimension("cut left side differs from the table domain".into()));
    }
    check_modulus(q, p)?;
    let Some(idx) = s.table.domain().iter().position(|&u| u == v) else {
        return Err(Error::Precondition(format!("vertex {v} is not in the table domain")));
    };
    if s.is_reduced(v) {
        return Err(Error::Precondition(format!("vertex {v} is already reduced")));
    }
    let deg = cut.degree(v);
    if deg != 1 {
        return Err(Error::Precondition(format!("vertex {v} has cut degree {deg}, expected 1")));
    }
    let k = s.table.domain().len();
    let weight = (q as u64).pow((k - 1 - idx) as u32);
    let top = q as u64 - 1;
    let mut out = SparseTable::new(s.table.domain().to_vec(), q, p)?;
    for (key, val) in s.table.entries() {
        let digit = (key / weight) % q as u64;
        if digit != top {
            out.add(key, val);
        } else {
            let base = key - digit * weight;
            let neg = p.neg(val);
            for c in 0..top {
                out.add(base + c * weight, neg);
            }
        }
    }
    let mut reduced = s.reduced;
    reduced.push(v);
    reduced.sort_unstable();
    Ok(ReducedState { table: out, reduced, position: s.position, cut: cut.clone() })
}

/// Reduces every unreduced vertex of cut degree 1, in ascending id order.
pub fn fully_reduce(mut s: ReducedState) -> Result<ReducedState> {
    check_modulus(s.table.q(), s.table.modulus())?;
    let cut = s.cut.clone();
    for v in s.reducible() {
        s = reduce_vertex(s, v, &cut)?;
    }
    Ok(s)
}

pub fn iterate_cut(s: ReducedState, g: &Graph, lists: &ColorLists, a: &LinearArrangement) -> Result<ReducedState> {
    iterate_cut_with(s, g, lists, a, Exec::default())
}

/// Advances a fully reduced state from position `i - 1` to `i` by
/// introducing `v_i` with each color of its list.
pub fn iterate_cut_with(
    s: ReducedState,
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    exec: Exec,
) -> Result<ReducedState> {
    check_inputs(g, lists, Some(a))?;
    let (q, p) = (s.table.q(), s.table.modulus());
    if q != lists.q() {
        return Err(Error::Dimension(format!("table over {q} colors, lists over {}", lists.q())));
    }
    let i = s.position + 1;
    if i > g.n() {
        return Err(Error::Precondition(format!("state at position {} is already final", s.position)));
    }
    let prev: CutProfile = if s.position == 0 { empty_profile() } else { cut_profile(g, a, s.position)? };
    if prev.x != s.table.domain() {
        return Err(Error::Dimension(format!("table domain does not match X_{}", s.position)));
    }
    if let Some(v) = prev.x.iter().find(|&&v| !s.is_reduced(v) && prev.cut_degree(v) == 1) {
        return Err(Error::Precondition(format!("state is not fully reduced: vertex {v} has cut degree 1")));
    }
    let profile = cut_profile(g, a, i)?;
    let vi = a.at(i);
    let step = Step::new(g, lists, &prev.x, &profile, vi)?;
    let add = |x: &mut u64, y: &u64| *x = p.add(*x, *y);
    let next = step.apply(&s.table.entries(), exec, &add);
    let table = SparseTable::from_map(profile.x.clone(), q, p, next);
    let reduced: Vec<Vertex> = profile
        .x
        .iter()
        .copied()
        .filter(|&u| {
            let d = profile.cut_degree(u);
            u != vi && d < 2 && !(d == 1 && g.has_edge(u, vi))
        })
        .collect();
    let out = ReducedState::new(table, reduced, i, profile.bipartite(q))?;
    Ok(out)
}

/// Number of proper list colorings mod `p`, for `q ≥ 3` and `p | q - 1`.
pub fn count_colorings_rank(g: &Graph, lists: &ColorLists, a: &LinearArrangement, p: PrimeModulus) -> Result<u64> {
    count_colorings_rank_with(g, lists, a, p, Exec::default())
}

pub fn count_colorings_rank_with(
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    p: PrimeModulus,
    exec: Exec,
) -> Result<u64> {
    check_inputs(g, lists, Some(a))?;
    let q = lists.q();
    if q < 3 {
        return Err(Error::Precondition(format!("rank algorithm needs q >= 3, got {q}")));
    }
    check_modulus(q, p)?;
    let mut total = 1;
    for comp in g.components() {
        let part = if comp.len() == 1 {
            p.reduce(lists.list(comp[0]).len() as u64)
        } else {
            let (sg, sl, sa) = (g.induced(&comp), lists.restrict(&comp), a.restrict(&comp));
            run(&sg, &sl, &sa, p, exec, None)?
        };
        total = p.mul(total, part);
        if total == 0 {
            break;
        }
    }
    Ok(total)
}

fn run(
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    p: PrimeModulus,
    exec: Exec,
    mut trace: Option<&mut Vec<RankStep>>,
) -> Result<u64> {
    let n = g.n();
    let mut s = ReducedState::initial(lists.q(), p);
    for i in 1..=n {
        let it = iterate_cut_with(s, g, lists, a, exec)?;
        if i == n {
            return Ok(it.table.sum());
        }
        s = match trace.as_deref_mut() {
            Some(t) => {
                let red = fully_reduce(it.clone())?;
                t.push(RankStep { position: i, after_iterate: it, after_reduce: red.clone() });
                red
            }
            None => fully_reduce(it)?,
        };
    }
    Ok(1)
}

/// States after each iteration and full reduction at positions `1..n-1`,
/// on the whole graph.
pub fn rank_trace(g: &Graph, lists: &ColorLists, a: &LinearArrangement, p: PrimeModulus) -> Result<Vec<RankStep>> {
    check_inputs(g, lists, Some(a))?;
    check_modulus(lists.q(), p)?;
    let mut steps = Vec::new();
    run(g, lists, a, p, Exec::Sequential, Some(&mut steps))?;
    Ok(steps)
}
