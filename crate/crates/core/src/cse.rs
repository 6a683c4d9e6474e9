//! Connected spanning edge sets.
//!
//! [`count_cse_treedp`] counts pairs `(X, λ)` of an edge set and a labeling
//! `λ: V → [p]` constant on every component of `(V, X)`. A set with `k`
//! components is counted `p^k` times, so the total is `p · #CSE (mod p²)`.
//! Tables are therefore kept mod `p²` and the root sum is divided by `p`.

use crate::fp::PrimeModulus;
use crate::graph::{validate_edge_introduce_td, EdgeIntroduceTreeDecomposition, Graph, NodeKind, Vertex};
use crate::guard::check_subsets;
use crate::{Error, Exec, Result};
use num_bigint::BigUint;

/// Largest per-node table materialized by the dynamic program.
pub const MAX_TABLE: u64 = 1 << 24;

/// Labels in `1..=p` for an ordered bag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BagPartition {
    pub bag: Vec<Vertex>,
    pub labels: Vec<u32>,
}

impl BagPartition {
    pub fn new(bag: Vec<Vertex>, labels: Vec<u32>) -> Result<Self> {
        if bag.len() != labels.len() {
            return Err(Error::Dimension(format!("{} labels for a bag of {}", labels.len(), bag.len())));
        }
        Ok(BagPartition { bag, labels })
    }

    /// Mixed-radix key with the first bag vertex most significant.
    pub fn key(&self, p: u32) -> u64 {
        crate::fp::encode_key(&self.labels, p)
    }
}

/// Table of one decomposition node, dense over `p^|bag|` labelings,
/// values mod `p²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CseTable {
    pub node: usize,
    pub bag: Vec<Vertex>,
    pub p: u32,
    pub entries: Vec<u64>,
}

impl CseTable {
    pub fn get(&self, part: &BagPartition) -> u64 {
        self.entries[part.key(self.p) as usize]
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Whether `(V, edges)` is connected. Every edge must belong to `g`.
pub fn is_connected_spanning(g: &Graph, edges: &[(Vertex, Vertex)]) -> Result<bool> {
    let mut parent: Vec<usize> = (0..=g.n()).collect();
    let mut comps = g.n();
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("({u},{v}) is not an edge")));
        }
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    Ok(comps <= 1)
}

fn mask_connected(g: &Graph, mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..=g.n()).collect();
    let mut comps = g.n();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
    }
    comps <= 1
}

/// Exact number of connected spanning edge sets, by enumerating all `2^m`
/// subsets.
pub fn count_cse_bruteforce(g: &Graph) -> Result<BigUint> {
    count_cse_bruteforce_with(g, Exec::default())
}

pub fn count_cse_bruteforce_with(g: &Graph, exec: Exec) -> Result<BigUint> {
    check_subsets("edge-subset enumeration", g.m())?;
    let total = 1u64 << g.m();
    let chunk = 1u64 << 12;
    let chunks = total.div_ceil(chunk) as usize;
    let count = exec.map_reduce(
        chunks,
        || 0u64,
        |c| {
            let lo = c as u64 * chunk;
            (lo..(lo + chunk).min(total)).filter(|&mask| mask_connected(g, mask)).count() as u64
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// Number of connected spanning edge sets mod `p`, by cut-and-count over an
/// edge-introduce tree decomposition.
pub fn count_cse_treedp(g: &Graph, td: &EdgeIntroduceTreeDecomposition, p: PrimeModulus) -> Result<u64> {
    count_cse_treedp_with(g, td, p, Exec::default())
}

pub fn count_cse_treedp_with(
    g: &Graph,
    td: &EdgeIntroduceTreeDecomposition,
    p: PrimeModulus,
    exec: Exec,
) -> Result<u64> {
    validate_edge_introduce_td(g, td)?;
    if !g.is_connected() {
        return Ok(0);
    }
    let root = compute(td, p, exec, |_| ())?;
    let p2 = p.get() * p.get();
    let sum = root.iter().fold(0u64, |acc, &v| (acc + v) % p2);
    if sum % p.get() != 0 {
        return Err(Error::Internal(format!("root sum {sum} is not divisible by {p}")));
    }
    Ok(sum / p.get())
}

/// Tables of every node, indexed like the decomposition's nodes.
pub fn cse_tables(g: &Graph, td: &EdgeIntroduceTreeDecomposition, p: PrimeModulus) -> Result<Vec<CseTable>> {
    validate_edge_introduce_td(g, td)?;
    let mut out: Vec<Option<CseTable>> = vec![None; td.len()];
    compute(td, p, Exec::Sequential, |t| {
        let node = t.node;
        out[node] = Some(t);
    })?;
    Ok(out.into_iter().map(|t| t.expect("every node visited")).collect())
}

fn compute(
    td: &EdgeIntroduceTreeDecomposition,
    p: PrimeModulus,
    exec: Exec,
    mut observe: impl FnMut(CseTable),
) -> Result<Vec<u64>> {
    let pl = p.get() as u32;
    let p2 = p.get() * p.get();
    let nodes = td.nodes();
    let size = |k: usize| {
        crate::fp::assignment_count(k, pl)
            .filter(|&s| s <= MAX_TABLE)
            .ok_or_else(|| Error::Capacity(format!("{pl}^{k} labelings exceed the table limit {MAX_TABLE}")))
    };
    let mut tables: Vec<Option<Vec<u64>>> = vec![None; nodes.len()];
    for id in td.post_order() {
        let node = &nodes[id];
        let bag = &node.bag;
        let len = size(bag.len())? as usize;
        let child = |j: usize| -> (&Vec<Vertex>, &Vec<u64>) {
            let c = node.children[j];
            (&nodes[c].bag, tables[c].as_ref().expect("children precede parents"))
        };
        // for each child bag vertex, its index in `bag` (None for a forgotten vertex)
        let index_in = |cbag: &[Vertex]| -> Vec<Option<usize>> {
            cbag.iter().map(|v| bag.iter().position(|u| u == v)).collect()
        };
        let child_key = |labels: &[u32], map: &[Option<usize>], extra: u32| -> u64 {
            map.iter().fold(0u64, |acc, m| acc * pl as u64 + m.map_or(extra, |i| labels[i]) as u64)
        };
        let decode = |key: usize| -> Vec<u32> {
            crate::fp::decode_key(key as u64, bag.len(), pl).into_iter().map(|c| c - 1).collect()
        };
        let table: Vec<u64> = match node.kind {
            NodeKind::Leaf => vec![1; len],
            NodeKind::IntroduceVertex(_) => {
                let (cbag, ct) = child(0);
                let map = index_in(cbag);
                exec.map_collect(len, |k| ct[child_key(&decode(k), &map, 0) as usize])
            }
            NodeKind::IntroduceEdge(u, v) => {
                let (cbag, ct) = child(0);
                let map = index_in(cbag);
                let iu = bag.iter().position(|&w| w == u).expect("validated");
                let iv = bag.iter().position(|&w| w == v).expect("validated");
                exec.map_collect(len, |k| {
                    let labels = decode(k);
                    let val = ct[child_key(&labels, &map, 0) as usize];
                    if labels[iu] == labels[iv] {
                        val * 2 % p2
                    } else {
                        val
                    }
                })
            }
            NodeKind::Forget(_) => {
                let (cbag, ct) = child(0);
                let map = index_in(cbag);
                exec.map_collect(len, |k| {
                    let labels = decode(k);
                    (0..pl).fold(0u64, |acc, l| (acc + ct[child_key(&labels, &map, l) as usize]) % p2)
                })
            }
            NodeKind::Join => {
                let (lbag, lt) = child(0);
                let (rbag, rt) = child(1);
                let (lm, rm) = (index_in(lbag), index_in(rbag));
                exec.map_collect(len, |k| {
                    let labels = decode(k);
                    let a = lt[child_key(&labels, &lm, 0) as usize];
                    let b = rt[child_key(&labels, &rm, 0) as usize];
                    a * b % p2
                })
            }
        };
        for &c in &node.children {
            tables[c] = None;
        }
        observe(CseTable { node: id, bag: bag.clone(), p: pl, entries: table.clone() });
        tables[id] = Some(table);
    }
    Ok(tables[0].take().expect("root computed"))
}
