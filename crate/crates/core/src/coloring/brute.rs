use super::check_inputs;
use crate::graph::{Color, ColorLists, Graph};
use crate::guard::{check_space, COLORING_SPACE};
use crate::{Exec, Result};
use num_bigint::BigUint;

fn guard(what: &str, n: usize, q: u32) -> Result<()> {
    let space = u32::try_from(n).ok().and_then(|n| (q as u128).checked_pow(n));
    check_space(what, space, COLORING_SPACE)
}

/// Number of proper list colorings, by exhaustive search.
pub fn count_colorings_bruteforce(g: &Graph, lists: &ColorLists) -> Result<BigUint> {
    count_colorings_bruteforce_with(g, lists, Exec::default())
}

pub fn count_colorings_bruteforce_with(g: &Graph, lists: &ColorLists, exec: Exec) -> Result<BigUint> {
    check_inputs(g, lists, None)?;
    guard("list-coloring enumeration", g.n(), lists.q())?;
    let n = g.n();
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    // split the search on the colors of the first two vertices
    let split = n.min(2);
    let mut prefixes: Vec<Vec<Color>> = vec![Vec::new()];
    for v in 1..=split as u32 {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| lists.list(v).iter().map(move |&c| [p.as_slice(), &[c]].concat()))
            .collect();
    }
    let total = exec.map_reduce(
        prefixes.len(),
        || 0u128,
        |i| {
            let mut colors = vec![0; n + 1];
            for (j, &c) in prefixes[i].iter().enumerate() {
                let v = j + 1;
                if g.neighbors(v as u32).iter().any(|&w| (w as usize) < v && colors[w as usize] == c) {
                    return 0;
                }
                colors[v] = c;
            }
            extend(g, &|v| lists.list(v as u32), &mut colors, split + 1)
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(total))
}

/// Counts proper extensions of `colors[1..v]` to all vertices.
fn extend<'a>(g: &Graph, list: &dyn Fn(usize) -> &'a [Color], colors: &mut [Color], v: usize) -> u128 {
    let n = colors.len() - 1;
    if v > n {
        return 1;
    }
    let mut total = 0;
    for &c in list(v) {
        if g.neighbors(v as u32).iter().any(|&w| (w as usize) < v && colors[w as usize] == c) {
            continue;
        }
        colors[v] = c;
        total += extend(g, list, colors, v + 1);
    }
    colors[v] = 0;
    total
}

/// Number of proper `q`-colorings up to permutation of the colors.
///
/// Each orbit is counted once through its canonical member: colors appear in
/// first-occurrence order along vertices `1..n`.
pub fn count_essentially_distinct_bruteforce(g: &Graph, q: u32) -> Result<BigUint> {
    guard("essentially-distinct enumeration", g.n(), q)?;
    let mut colors = vec![0; g.n() + 1];
    Ok(BigUint::from(canonical(g, q, &mut colors, 1, 0)))
}

fn canonical(g: &Graph, q: u32, colors: &mut [Color], v: usize, used: Color) -> u128 {
    if v >= colors.len() {
        return 1;
    }
    let mut total = 0;
    for c in 1..=(used + 1).min(q) {
        if g.neighbors(v as u32).iter().any(|&w| (w as usize) < v && colors[w as usize] == c) {
            continue;
        }
        colors[v] = c;
        total += canonical(g, q, colors, v + 1, used.max(c));
    }
    colors[v] = 0;
    total
}
