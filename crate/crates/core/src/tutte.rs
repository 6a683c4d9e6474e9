//! Exact Tutte polynomial evaluation by subset sums, and the identities that
//! connect it to stretched graphs, chromatic values and essentially distinct
//! colorings.

use crate::fp::PrimeModulus;
use crate::graph::{k_stretch, Graph, Vertex};
use crate::guard::check_subsets;
use crate::{Error, Exec, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Exact rational number.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Rank data of an edge subset: `rank = n − components`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubsetRankData {
    pub subset: Vec<(Vertex, Vertex)>,
    pub rank: usize,
    pub components: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn components_of<'a>(n: usize, edges: impl Iterator<Item = &'a (Vertex, Vertex)>) -> usize {
    let mut parent: Vec<usize> = (0..=n).collect();
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

pub fn edgeset_rank(g: &Graph, subset: &[(Vertex, Vertex)]) -> Result<EdgeSubsetRankData> {
    if let Some(&(u, v)) = subset.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::InvalidGraph(format!("({u},{v}) is not an edge")));
    }
    let components = components_of(g.n(), subset.iter());
    Ok(EdgeSubsetRankData { subset: subset.to_vec(), rank: g.n() - components, components })
}

/// Rank of the whole edge set.
pub fn graph_rank(g: &Graph) -> usize {
    g.n() - components_of(g.n(), g.edges().iter())
}

/// Number of subsets `A` with each exponent pair
/// `(r(E) − r(A), |A| − r(A))`.
fn exponent_counts(g: &Graph, exec: Exec) -> Result<BTreeMap<(u32, u32), u64>> {
    check_subsets("Tutte subset sum", g.m())?;
    let n = g.n();
    let re = graph_rank(g) as u32;
    let total = 1u64 << g.m();
    let chunk = 1u64 << 12;
    let chunks = total.div_ceil(chunk) as usize;
    Ok(exec.map_reduce(
        chunks,
        BTreeMap::new,
        |c| {
            let mut counts = BTreeMap::new();
            let lo = c as u64 * chunk;
            for mask in lo..(lo + chunk).min(total) {
                let chosen = g.edges().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
                let ra = (n - components_of(n, chosen)) as u32;
                *counts.entry((re - ra, mask.count_ones() - ra)).or_insert(0u64) += 1;
            }
            counts
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    ))
}

fn evaluate(counts: &BTreeMap<(u32, u32), u64>, x: &Rational, y: &Rational) -> Rational {
    let (xm, ym) = (x - Rational::one(), y - Rational::one());
    // 0^0 = 1 via `pow(0)`
    counts.iter().fold(Rational::zero(), |acc, (&(i, j), &c)| {
        acc + Rational::from_integer(c.into()) * xm.pow(i as i32) * ym.pow(j as i32)
    })
}

/// `T(G; x, y) = Σ_A (x−1)^{r(E)−r(A)} (y−1)^{|A|−r(A)}`.
pub fn tutte_eval(g: &Graph, x: &Rational, y: &Rational) -> Result<Rational> {
    tutte_eval_with(g, x, y, Exec::default())
}

pub fn tutte_eval_with(g: &Graph, x: &Rational, y: &Rational, exec: Exec) -> Result<Rational> {
    Ok(evaluate(&exponent_counts(g, exec)?, x, y))
}

fn to_integer(v: Rational) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::Internal(format!("expected an integer, got {v}")));
    }
    Ok(v.to_integer())
}

/// Chromatic polynomial at `t`: `(−1)^{r(G)} t^{k(G)} T(G; 1−t, 0)`.
pub fn chromatic_at(g: &Graph, t: i64) -> Result<BigInt> {
    let r = graph_rank(g);
    let k = g.n() - r;
    let tv = tutte_eval(g, &rational(1 - t, 1), &Rational::zero())?;
    let sign = if r.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    to_integer(tv * Rational::from_integer(sign * BigInt::from(t).pow(k as u32)))
}

/// Both sides of the stretch identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchReport {
    pub left: Rational,
    pub right: Rational,
    pub equal: bool,
}

/// Compares `T(^kG; a, b)` with
/// `s^{m − r(G)} · T(G; a^k, (b + a + ⋯ + a^{k−1}) / s)`, where
/// `s = 1 + a + ⋯ + a^{k−1}`.
pub fn verify_stretch_identity(g: &Graph, k: usize, a: &Rational, b: &Rational) -> Result<StretchReport> {
    if k == 0 {
        return Err(Error::Precondition("stretch factor must be positive".into()));
    }
    let s = (0..k).fold(Rational::zero(), |acc, i| acc + a.pow(i as i32));
    if s.is_zero() {
        return Err(Error::Precondition("1 + a + … + a^(k−1) is zero; the right side is undefined".into()));
    }
    let stretched = k_stretch(g, k)?;
    let left = tutte_eval(&stretched, a, b)?;
    let nullity = (g.m() - graph_rank(g)) as i32;
    let x = a.pow(k as i32);
    let y = (b + &s - Rational::one()) / &s;
    let right = s.pow(nullity) * tutte_eval(g, &x, &y)?;
    Ok(StretchReport { equal: left == right, left, right })
}

fn residue(v: &BigInt, p: PrimeModulus) -> u64 {
    v.mod_floor(&BigInt::from(p.get())).to_u64().expect("residue below p")
}

/// Residues for the stretch congruence
/// `T(^{p−1}G; 1, 2) ≡ ± T(G; 1−p, 0) (mod p)` under two sign conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    /// `T(^{p−1}G; 1, 2) mod p`.
    pub stretched: u64,
    /// `T(G; 1−p, 0) mod p`.
    pub tutte: u64,
    /// Holds with sign `(−1)^{n − r(G)}`.
    pub vertex_sign_holds: bool,
    /// Holds with sign `(−1)^{m − r(G)}`.
    pub nullity_sign_holds: bool,
}

pub fn stretch_congruence(g: &Graph, p: PrimeModulus) -> Result<CongruenceReport> {
    let k = (p.get() - 1) as usize;
    let stretched = to_integer(tutte_eval(&k_stretch(g, k)?, &Rational::one(), &rational(2, 1))?)?;
    let tv = to_integer(tutte_eval(g, &rational(1 - p.get() as i64, 1), &Rational::zero())?)?;
    let (left, t) = (residue(&stretched, p), residue(&tv, p));
    let r = graph_rank(g);
    let signed = |e: usize| if e.is_multiple_of(2) { t } else { p.neg(t) };
    Ok(CongruenceReport {
        stretched: left,
        tutte: t,
        vertex_sign_holds: left == signed(g.n() - r),
        nullity_sign_holds: left == signed(g.m() - r),
    })
}

/// Number of essentially distinct `p`-colorings mod `p`, from
/// `(−1)^{n−1} T(G; 1−p, 0) ≡ −C_p(G)`. Needs `G` connected and not
/// `(p−1)`-colorable.
pub fn essentially_distinct_mod(g: &Graph, p: PrimeModulus) -> Result<u64> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected and nonempty".into()));
    }
    let pm1 = p.get() as i64 - 1;
    if !chromatic_at(g, pm1)?.is_zero() {
        return Err(Error::Precondition(format!("graph is {pm1}-colorable")));
    }
    let t = to_integer(tutte_eval(g, &rational(1 - p.get() as i64, 1), &Rational::zero())?)?;
    let signed = if (g.n() - 1).is_multiple_of(2) { t } else { -t };
    Ok(p.neg(residue(&signed, p)))
}

/// `p! · count` as an exact integer.
pub fn factorial_times(p: u64, count: &BigInt) -> BigInt {
    (1..=p).fold(count.clone(), |acc, i| acc * BigInt::from(i))
}
