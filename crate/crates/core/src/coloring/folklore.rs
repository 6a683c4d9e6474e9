use super::{check_inputs, sorted, SparseTable, Step};
use crate::fp::PrimeModulus;
use crate::graph::{cut_profiles, ColorLists, CutProfile, Graph, LinearArrangement, Vertex};
use crate::{Exec, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Runs the cut table recurrence over one arrangement and returns the sum
/// of the last table. `observe` sees each table `T_i` after it is built.
#[allow(clippy::too_many_arguments)]
fn run<V, A, Z>(
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    zero: V,
    one: V,
    add: &A,
    is_zero: Z,
    exec: Exec,
    mut observe: impl FnMut(&CutProfile, &[(u64, V)]),
) -> Result<V>
where
    V: Clone + Send + Sync,
    A: Fn(&mut V, &V) + Sync + Send,
    Z: Fn(&V) -> bool,
{
    let mut prev: Vec<Vertex> = Vec::new();
    let mut table = vec![(0u64, one)];
    for profile in cut_profiles(g, a)? {
        let step = Step::new(g, lists, &prev, &profile, a.at(profile.position))?;
        let mut next = step.apply(&table, exec, add);
        next.retain(|_, v| !is_zero(v));
        table = sorted(next);
        observe(&profile, &table);
        prev = profile.x;
    }
    Ok(table.iter().fold(zero, |mut acc, (_, v)| {
        add(&mut acc, v);
        acc
    }))
}

/// Number of proper list colorings via the cut table recurrence
/// `T_i[x] = Σ_{z ~ x} T_{i-1}[z]`. Exact when `p` is `None`, otherwise the
/// residue mod `p`.
pub fn count_colorings_folklore(
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    p: Option<PrimeModulus>,
) -> Result<BigUint> {
    count_colorings_folklore_with(g, lists, a, p, Exec::default())
}

pub fn count_colorings_folklore_with(
    g: &Graph,
    lists: &ColorLists,
    a: &LinearArrangement,
    p: Option<PrimeModulus>,
    exec: Exec,
) -> Result<BigUint> {
    check_inputs(g, lists, Some(a))?;
    let mut total = BigUint::one();
    for comp in g.components() {
        let (sg, sl, sa) = (g.induced(&comp), lists.restrict(&comp), a.restrict(&comp));
        let part = match p {
            None => component_exact(&sg, &sl, &sa, exec)?,
            Some(p) => BigUint::from(component_mod(&sg, &sl, &sa, p, exec)?),
        };
        total *= part;
        if let Some(p) = p {
            total %= p.get();
        }
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

fn component_exact(g: &Graph, lists: &ColorLists, a: &LinearArrangement, exec: Exec) -> Result<BigUint> {
    let add = |x: &mut BigUint, y: &BigUint| *x += y;
    run(g, lists, a, BigUint::zero(), BigUint::one(), &add, BigUint::is_zero, exec, |_, _| ())
}

fn component_mod(g: &Graph, lists: &ColorLists, a: &LinearArrangement, p: PrimeModulus, exec: Exec) -> Result<u64> {
    let add = |x: &mut u64, y: &u64| *x = p.add(*x, *y);
    run(g, lists, a, 0, 1, &add, |v| *v == 0, exec, |_, _| ())
}

/// Tables `T_1, …, T_n` of the recurrence on the whole graph, reduced mod
/// `p`, each over the cut domain `X_i` ordered by position.
pub fn folklore_trace(g: &Graph, lists: &ColorLists, a: &LinearArrangement, p: PrimeModulus) -> Result<Vec<SparseTable>> {
    check_inputs(g, lists, Some(a))?;
    let q = lists.q();
    let mut out = Vec::with_capacity(g.n());
    let add = |x: &mut u64, y: &u64| *x = p.add(*x, *y);
    run(g, lists, a, 0, 1, &add, |v| *v == 0, Exec::Sequential, |prof, t| {
        out.push(SparseTable::from_map(prof.x.clone(), q, p, t.iter().copied().collect()))
    })?;
    Ok(out)
}
