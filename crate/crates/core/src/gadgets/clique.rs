use crate::graph::{Color, ColorLists, Graph, LinearArrangement, Vertex};
use crate::{Error, Result};

/// Id of `u_c^i` in the output of [`clique_chain`] for an input on `n`
/// vertices: `n + (i − 1)q + c`.
pub fn clique_vertex(n: usize, q: u32, i: usize, c: Color) -> Vertex {
    (n + (i - 1) * q as usize + c as usize) as Vertex
}

/// Adds a `q`-clique `u^i` per arrangement position `i`, edges
/// `u_c^i u_{c'}^{i+1}` for `c ≠ c'`, and `u_c^i v_i` for `c ∉ L(v_i)`.
/// Original vertices keep their ids.
///
/// The arrangement is `v_1, u^1, v_2, u^2, …`; inside each clique the
/// vertices whose color is missing from `L(v_i)` come first.
pub fn clique_chain(g: &Graph, lists: &ColorLists, a: &LinearArrangement) -> Result<(Graph, LinearArrangement)> {
    lists.check_for(g)?;
    a.check_for(g)?;
    let (n, q) = (g.n(), lists.q());
    if q < 2 {
        return Err(Error::Precondition("clique chain needs q >= 2".into()));
    }
    let mut edges = g.edges().to_vec();
    let mut order = Vec::with_capacity(n * (q as usize + 1));
    for i in 1..=n {
        let vi = a.at(i);
        let u = |c: Color| clique_vertex(n, q, i, c);
        for c in 1..=q {
            for c2 in c + 1..=q {
                edges.push((u(c), u(c2)));
            }
        }
        if i > 1 {
            for c in 1..=q {
                for c2 in (1..=q).filter(|&c2| c2 != c) {
                    edges.push((clique_vertex(n, q, i - 1, c), u(c2)));
                }
            }
        }
        let (missing, present): (Vec<Color>, Vec<Color>) = (1..=q).partition(|&c| !lists.allows(vi, c));
        for &c in &missing {
            edges.push((u(c), vi));
        }
        order.push(vi);
        order.extend(missing.into_iter().chain(present).map(u));
    }
    let graph = Graph::new(n * (q as usize + 1), edges)?;
    Ok((graph, LinearArrangement::new(order)?))
}

/// Lists for the output of [`clique_chain`] that fix `u_c^1 = c` and leave
/// every other vertex free.
pub fn canonical_clique_lists(n: usize, q: u32) -> ColorLists {
    let mut lists = ColorLists::full(n * (q as usize + 1), q);
    if n > 0 {
        for c in 1..=q {
            lists.set_list(clique_vertex(n, q, 1, c), vec![c]).expect("color in range");
        }
    }
    lists
}
