//! CSP instances and their reduction to list coloring mod `p`.
//!
//! File format (`#` starts a comment):
//!
//! ```text
//! csp <nvars> <q> <ncons>
//! con <arity> <v1> ... <vk> <t>
//! <c1> ... <ck>        (t satisfying tuples)
//! ```

use super::build::{function_into, transfer_table};
use super::Builder;
use crate::fp::PrimeModulus;
use crate::graph::{Color, ColorLists, Graph, LinearArrangement, Vertex};
use crate::guard::{check_space, COLORING_SPACE};
use crate::{Error, Result};
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    /// 1-based variable indices, pairwise distinct.
    pub scope: Vec<usize>,
    pub satisfying: BTreeSet<Vec<Color>>,
}

impl Constraint {
    pub fn new(scope: Vec<usize>, satisfying: impl IntoIterator<Item = Vec<Color>>) -> Self {
        Constraint { scope, satisfying: satisfying.into_iter().collect() }
    }

    pub fn is_satisfied(&self, assignment: &[Color]) -> bool {
        let tuple: Vec<Color> = self.scope.iter().map(|&v| assignment[v - 1]).collect();
        self.satisfying.contains(&tuple)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspInstance {
    n_vars: usize,
    q: u32,
    constraints: Vec<Constraint>,
}

impl CspInstance {
    pub fn new(n_vars: usize, q: u32, constraints: Vec<Constraint>) -> Result<Self> {
        if q == 0 {
            return Err(Error::Precondition("domain size must be positive".into()));
        }
        for (j, c) in constraints.iter().enumerate() {
            let j = j + 1;
            if c.scope.is_empty() {
                return Err(Error::Precondition(format!("constraint {j} has an empty scope")));
            }
            if c.scope.iter().any(|&v| v == 0 || v > n_vars) {
                return Err(Error::Precondition(format!("constraint {j} names a variable outside 1..={n_vars}")));
            }
            if c.scope.iter().collect::<BTreeSet<_>>().len() != c.scope.len() {
                return Err(Error::Precondition(format!("constraint {j} repeats a variable")));
            }
            for t in &c.satisfying {
                if t.len() != c.scope.len() || t.iter().any(|&x| x == 0 || x > q) {
                    return Err(Error::Precondition(format!("constraint {j} has a tuple outside [{q}]^{}", c.scope.len())));
                }
            }
        }
        Ok(CspInstance { n_vars, q, constraints })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Exact number of satisfying assignments.
    pub fn count_solutions_bruteforce(&self) -> Result<BigUint> {
        let space = u32::try_from(self.n_vars).ok().and_then(|n| (self.q as u128).checked_pow(n));
        check_space("CSP enumeration", space, COLORING_SPACE)?;
        let total = space.expect("checked") as u64;
        let count = (0..total)
            .filter(|&k| {
                let x = crate::fp::decode_key(k, self.n_vars, self.q);
                self.constraints.iter().all(|c| c.is_satisfied(&x))
            })
            .count();
        Ok(BigUint::from(count))
    }
}

pub fn parse_csp_file(text: &str) -> Result<CspInstance> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    });
    let num = |ln: usize, t: &str| -> Result<u64> {
        t.parse().map_err(|_| Error::parse(ln, format!("expected a number, found '{t}'")))
    };
    let (ln, head) = lines.next().ok_or_else(|| Error::parse(0, "empty CSP file"))?;
    if head.len() != 4 || head[0] != "csp" {
        return Err(Error::parse(ln, "expected 'csp <nvars> <q> <ncons>'"));
    }
    let (n, q, m) = (num(ln, head[1])? as usize, num(ln, head[2])? as u32, num(ln, head[3])? as usize);
    let mut constraints = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, toks) = lines.next().ok_or_else(|| Error::parse(0, "missing constraint"))?;
        if toks[0] != "con" || toks.len() < 3 {
            return Err(Error::parse(ln, "expected 'con <arity> <vars...> <t>'"));
        }
        let arity = num(ln, toks[1])? as usize;
        if toks.len() != arity + 3 {
            return Err(Error::parse(ln, format!("constraint of arity {arity} needs {arity} variables and a count")));
        }
        let scope = toks[2..2 + arity].iter().map(|t| num(ln, t).map(|v| v as usize)).collect::<Result<Vec<_>>>()?;
        let t = num(ln, toks[2 + arity])?;
        let mut satisfying = BTreeSet::new();
        for _ in 0..t {
            let (ln, tuple) = lines.next().ok_or_else(|| Error::parse(0, "missing satisfying tuple"))?;
            if tuple.len() != arity {
                return Err(Error::parse(ln, format!("tuple must have {arity} values")));
            }
            satisfying.insert(tuple.iter().map(|t| num(ln, t).map(|v| v as Color)).collect::<Result<Vec<_>>>()?);
        }
        constraints.push(Constraint { scope, satisfying });
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "trailing content after the last constraint"));
    }
    CspInstance::new(n, q, constraints)
}

pub fn serialize_csp_file(c: &CspInstance) -> String {
    let mut out = String::new();
    writeln!(out, "csp {} {} {}", c.n_vars, c.q, c.constraints.len()).unwrap();
    for con in &c.constraints {
        write!(out, "con {}", con.scope.len()).unwrap();
        for v in &con.scope {
            write!(out, " {v}").unwrap();
        }
        writeln!(out, " {}", con.satisfying.len()).unwrap();
        for t in &con.satisfying {
            let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", parts.join(" ")).unwrap();
        }
    }
    out
}

/// List-coloring instance whose count is congruent mod `p` to the number
/// of CSP solutions, with its arrangement.
///
/// Column `j` holds `s_{i,j}` (and `t_{i,j}` when `j` is not the last
/// column) for each variable. A transfer gadget on `(s_{i,j}, t_{i,j})`
/// plus the edge `t_{i,j} s_{i,j+1}` forces equal colors mod `p`; a
/// function gadget on the scope's `s` vertices weights violated tuples by
/// `p`. With no constraints a single column is emitted.
pub fn csp_to_listcoloring(c: &CspInstance, p: PrimeModulus) -> Result<(Graph, ColorLists, LinearArrangement)> {
    let q = c.q;
    if q < 3 {
        return Err(Error::Precondition(format!("reduction needs q >= 3, got {q}")));
    }
    if p.divides(q as u64 - 1) {
        return Err(Error::Precondition(format!("p = {p} divides q - 1 = {}", q - 1)));
    }
    let transfer = transfer_table(q, p)?;
    let columns = c.constraints.len().max(1);
    let mut b = Builder::new(q);
    let mut prev_t: Vec<Option<Vertex>> = vec![None; c.n_vars];
    for j in 0..columns {
        let mut s_col = Vec::with_capacity(c.n_vars);
        for (i, slot) in prev_t.iter_mut().enumerate() {
            let s = b.full();
            if let Some(t) = slot.take() {
                b.edge(t, s);
            }
            s_col.push(s);
            if j + 1 < columns {
                let t = b.full();
                function_into(&mut b, q, &[s, t], &transfer)?;
                *slot = Some(t);
            }
            debug_assert_eq!(s_col.len(), i + 1);
        }
        if let Some(con) = c.constraints.get(j) {
            let boundary: Vec<Vertex> = con.scope.iter().map(|&v| s_col[v - 1]).collect();
            let k = boundary.len();
            let size = crate::fp::assignment_count(k, q).ok_or_else(|| Error::Capacity("constraint table".into()))?;
            let table: Vec<u64> = (0..size)
                .map(|key| if con.satisfying.contains(&crate::fp::decode_key(key, k, q)) { 1 } else { p.get() })
                .collect();
            function_into(&mut b, q, &boundary, &table)?;
        }
    }
    b.finish()
}
