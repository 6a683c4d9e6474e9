use super::{Builder, GadgetInstance};
use crate::fp::{fp_inverse, lift_representative, FpMatrix, PrimeModulus};
use crate::graph::{Color, Vertex};
use crate::{Error, Result};

/// Vertex budget for a single composed gadget.
const MAX_VERTICES: u64 = 10_000_000;

fn in_range(c: Color, q: u32) -> Result<()> {
    if c == 0 || c > q {
        return Err(Error::Precondition(format!("color {c} outside 1..={q}")));
    }
    Ok(())
}

/// Appends the relabelling path behind `bp` (list `{a, a2}`) and returns
/// `b''`, which ends up 1 when `bp = a` and 2 when `bp = a2`.
pub(crate) fn relabel_into(b: &mut Builder, bp: Vertex, a: Color, a2: Color) -> Vertex {
    debug_assert!(a != a2 && a2 != 1);
    let v1 = (a != 1).then(|| b.vertex(vec![a, 1]));
    let v2 = b.vertex(vec![1, a2]);
    let v3 = (a2 != 2).then(|| b.vertex(vec![2, a2]));
    let out = b.vertex(vec![1, 2]);
    if let Some(v1) = v1 {
        b.edge(bp, v1);
        b.edge(v2, v1);
    }
    b.edge(v2, bp);
    if let Some(v3) = v3 {
        b.edge(v2, v3);
        b.edge(v3, out);
    }
    b.edge(v2, out);
    out
}

/// Appends an indicator on the existing vertex `bv` (list `[q]`) and
/// returns its output vertex, colored 1 iff `bv` has color `a` and 2
/// otherwise.
pub(crate) fn indicator_into(b: &mut Builder, q: u32, a: Color, bv: Vertex) -> Vertex {
    // colors of the a = 1 construction, renamed by a permutation with 1 ↦ a
    let (pi, relabel): (Vec<Color>, Option<Color>) = if a == 1 || q == 2 {
        ((0..=q).collect(), None)
    } else {
        let a2 = if a == 2 { 3 } else { 2 };
        let mut pi = vec![0, a, a2];
        pi.extend((1..=q).filter(|&c| c != a && c != a2));
        (pi, Some(a2))
    };
    let s: Vec<Vertex> = (2..=q).map(|i| b.vertex(vec![pi[1], pi[i as usize]])).collect();
    let t: Vec<Vertex> = (2..=q).map(|i| b.vertex(vec![pi[1], pi[i as usize]])).collect();
    let out = b.vertex(vec![pi[1], pi[2]]);
    for &si in &s {
        b.edge(si, bv);
        b.edge(si, out);
        for &tj in &t {
            b.edge(si, tj);
        }
    }
    match relabel {
        Some(a2) => relabel_into(b, out, a, a2),
        None if a == 1 => out,
        None => {
            // q = 2, a = 2: flip the output of the a = 1 construction
            let flip = b.vertex(vec![1, 2]);
            b.edge(out, flip);
            flip
        }
    }
}

/// Appends the path `w_1, …, w_{ℓ−1}` hanging off every boundary vertex.
pub(crate) fn multiplicity_into(b: &mut Builder, boundary: &[Vertex], ell: u64) {
    let mut prev: Option<Vertex> = None;
    for i in 1..ell {
        let list = match i % 3 {
            1 => vec![2, 3],
            2 => vec![1, 3],
            _ => vec![1, 2],
        };
        let w = b.vertex(list);
        match prev {
            None => boundary.iter().for_each(|&bi| b.edge(bi, w)),
            Some(p) => b.edge(p, w),
        }
        prev = Some(w);
    }
}

/// Appends one block per boundary coloring `α` in ascending key order:
/// an indicator per boundary vertex followed by a multiplicity path of
/// length `f(α) − 1`.
pub(crate) fn function_into(b: &mut Builder, q: u32, boundary: &[Vertex], f: &[u64]) -> Result<()> {
    let k = boundary.len();
    let size = crate::fp::assignment_count(k, q).ok_or_else(|| Error::Capacity(format!("{q}^{k} boundary colorings")))?;
    if f.len() as u64 != size {
        return Err(Error::Dimension(format!("table of {} values for {q}^{k} colorings", f.len())));
    }
    if let Some(pos) = f.iter().position(|&v| v == 0) {
        return Err(Error::Precondition(format!("table value 0 at key {pos}; use a multiple of p instead")));
    }
    let per_block = k as u64 * (2 * q as u64 + 4);
    let estimate = f.iter().fold(b.len() as u64, |acc, &v| acc.saturating_add(per_block).saturating_add(v));
    if estimate > MAX_VERTICES {
        return Err(Error::Capacity(format!("gadget would have about {estimate} vertices")));
    }
    for (key, &ell) in f.iter().enumerate() {
        let alpha = crate::fp::decode_key(key as u64, k, q);
        let outs: Vec<Vertex> = boundary.iter().zip(&alpha).map(|(&bi, &ai)| indicator_into(b, q, ai, bi)).collect();
        multiplicity_into(b, &outs, ell);
    }
    Ok(())
}

/// Two-vertex relabelling gadget with boundary `(b', b'')`.
pub fn relabel_gadget(q: u32, a: Color, a2: Color) -> Result<GadgetInstance> {
    in_range(a, q)?;
    in_range(a2, q)?;
    if q < 2 {
        return Err(Error::Precondition("relabelling needs q >= 2".into()));
    }
    if a == a2 {
        return Err(Error::Precondition(format!("relabel colors must differ, got {a} twice")));
    }
    if a2 == 1 {
        return Err(Error::Precondition("the second relabel color must not be 1".into()));
    }
    let mut b = Builder::new(q);
    let bp = b.vertex(vec![a, a2]);
    let out = relabel_into(&mut b, bp, a, a2);
    b.instance(vec![bp, out])
}

/// Indicator gadget with boundary `(b, b')`: each color of `b` extends
/// uniquely, and `b'` is 1 iff `b` has color `a`.
pub fn indicator_gadget(q: u32, a: Color) -> Result<GadgetInstance> {
    if q < 2 {
        return Err(Error::Precondition("indicator needs q >= 2".into()));
    }
    in_range(a, q)?;
    let mut b = Builder::new(q);
    let bv = b.full();
    let out = indicator_into(&mut b, q, a, bv);
    b.instance(vec![bv, out])
}

/// Boundary `b_1..b_k` with lists `{1,2}`: the all-1 coloring has `ell`
/// extensions, every other coloring exactly one. Colors are drawn from `[3]`.
pub fn multiplicity_gadget(k: usize, ell: u64) -> Result<GadgetInstance> {
    if k == 0 || ell == 0 {
        return Err(Error::Precondition("multiplicity gadget needs k >= 1 and ell >= 1".into()));
    }
    let mut b = Builder::new(3);
    let boundary: Vec<Vertex> = (0..k).map(|_| b.vertex(vec![1, 2])).collect();
    multiplicity_into(&mut b, &boundary, ell);
    b.instance(boundary)
}

/// Gadget whose boundary coloring `α ∈ [q]^k` has exactly `f(α)`
/// extensions; `f` is indexed by the mixed-radix key of `α`.
pub fn function_gadget(q: u32, k: usize, f: &[u64]) -> Result<GadgetInstance> {
    if q < 3 || k == 0 {
        return Err(Error::Precondition("function gadget needs q >= 3 and k >= 1".into()));
    }
    let mut b = Builder::new(q);
    let boundary: Vec<Vertex> = (0..k).map(|_| b.full()).collect();
    function_into(&mut b, q, &boundary, f)?;
    b.instance(boundary)
}

/// Lift to `{1..p}` of the inverse over F_p of the single-edge
/// compatibility matrix, flattened by key.
pub fn transfer_table(q: u32, p: PrimeModulus) -> Result<Vec<u64>> {
    if q < 2 || p.divides(q as u64 - 1) {
        return Err(Error::Precondition(format!("single-edge matrix is singular mod {p} for q = {q}")));
    }
    let rows: Vec<Vec<u64>> = (0..q).map(|i| (0..q).map(|j| u64::from(i != j)).collect()).collect();
    let inv = fp_inverse(&FpMatrix::from_rows(&rows, p)?)?;
    let lifted = lift_representative(&inv);
    Ok((0..q as usize).flat_map(|i| (0..q as usize).map(move |j| (i, j))).map(|(i, j)| lifted.get(i, j)).collect())
}

/// Function gadget for [`transfer_table`] on boundary `(s, t)`.
pub fn transfer_gadget(q: u32, p: PrimeModulus) -> Result<GadgetInstance> {
    function_gadget(q, 2, &transfer_table(q, p)?)
}
