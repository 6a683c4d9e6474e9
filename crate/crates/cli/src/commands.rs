use crate::report::{Instance, Outcome, RunReport};
use crate::{ColorAlgo, Command, CseAlgo, DistinctAlgo, Failure};
use modcount::coloring::{
    count_colorings_bruteforce, count_colorings_folklore, count_colorings_rank, count_essentially_distinct_bruteforce,
};
use modcount::cse::{count_cse_bruteforce, count_cse_treedp};
use modcount::fp::{compatibility_matrix, fp_rank, BipartiteCutGraph, PrimeModulus};
use modcount::gadgets::{
    canonical_clique_lists, clique_chain, csp_to_listcoloring, function_gadget, parse_csp_file, verify_gadget,
};
use modcount::graph::{
    cut_profiles, cutwidth_of, parse_graph_file, parse_td_file, serialize_graph_file, stretch_arrangement,
    td_from_ordering, validate_edge_introduce_td, ColorLists, Graph, GraphFile, LinearArrangement,
};
use modcount::tutte::{tutte_eval, tutte_eval_with, verify_stretch_identity};
use modcount::{Error, Exec};
use serde_json::json;
use std::fmt::Display;
use std::path::Path;

type CmdResult = Result<RunReport, Failure>;

pub fn run(cmd: &Command, crosscheck: bool) -> CmdResult {
    match cmd {
        Command::Color(a) => color(a, crosscheck),
        Command::Cse(a) => cse(a, crosscheck),
        Command::Rank(a) => rank(a),
        Command::Tutte(a) => tutte(a, crosscheck),
        Command::Stretch(a) => stretch(a),
        Command::Gadget(a) => gadget(a, crosscheck),
        Command::Reduce(a) => reduce(a, crosscheck),
        Command::Distinct(a) => distinct(a, crosscheck),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphFile, Failure> {
    Ok(parse_graph_file(&read(path)?)?)
}

fn modulus(p: Option<u64>) -> Result<Option<PrimeModulus>, Failure> {
    Ok(p.map(PrimeModulus::new).transpose()?)
}

fn required(p: Option<PrimeModulus>, what: &str) -> Result<PrimeModulus, Failure> {
    p.ok_or_else(|| Failure::Domain(format!("{what} needs --mod")))
}

/// The file's arrangement, or the identity with a warning.
fn arrangement(f: &GraphFile) -> LinearArrangement {
    f.order.clone().unwrap_or_else(|| {
        eprintln!("warning: no order line; assuming the identity arrangement");
        LinearArrangement::identity(f.graph.n())
    })
}

fn resolve_q(cli: Option<u32>, f: &GraphFile) -> Result<u32, Failure> {
    match (cli, f.q) {
        (Some(a), Some(b)) if a != b => Err(Failure::Domain(format!("--q {a} disagrees with the file's q {b}"))),
        (Some(q), _) | (None, Some(q)) => Ok(q),
        (None, None) => Err(Failure::Domain("number of colors unknown: pass --q or add a q line".into())),
    }
}

fn instance(g: &Graph, width: Option<usize>) -> Instance {
    Instance { n: g.n(), m: g.m(), width }
}

fn exact(v: impl Display) -> Outcome {
    Outcome::Exact(v.to_string())
}

fn mismatch(what: &str, got: impl Display, oracle: impl Display) -> Failure {
    Failure::Domain(format!("crosscheck failed for {what}: {got} vs brute force {oracle}"))
}

fn color(a: &crate::ColorArgs, crosscheck: bool) -> CmdResult {
    let f = load_graph(&a.graph)?;
    let q = resolve_q(a.q, &f)?;
    let lists = f.lists_or_full(q);
    let order = arrangement(&f);
    let p = modulus(a.modulus)?;
    let g = &f.graph;
    let width = cutwidth_of(g, &order)?;
    let (name, result) = match a.algo {
        ColorAlgo::Brute => {
            let c = count_colorings_bruteforce(g, &lists)?;
            match p {
                Some(p) if !a.exact => ("brute", Outcome::Residue((c % p.get()).try_into().expect("below p"))),
                _ => ("brute", exact(c)),
            }
        }
        ColorAlgo::Folklore => {
            let c = count_colorings_folklore(g, &lists, &order, if a.exact { None } else { p })?;
            match p {
                Some(_) if !a.exact => ("folklore", Outcome::Residue(c.try_into().expect("below p"))),
                _ => ("folklore", exact(c)),
            }
        }
        ColorAlgo::Rank => {
            if a.exact {
                return Err(Failure::Domain("rank algorithm counts mod p only; use --algo folklore with --exact".into()));
            }
            let p = required(p, "rank algorithm")?;
            let c = count_colorings_rank(g, &lists, &order, p).map_err(|e| match e {
                Error::Precondition(msg) => Failure::Domain(format!("rank algorithm inapplicable: {msg}")),
                e => e.into(),
            })?;
            ("rank", Outcome::Residue(c))
        }
    };
    let mut report = RunReport::new(name, result.clone(), p.map(PrimeModulus::get), instance(g, Some(width))).detail("q", q);
    if crosscheck {
        let oracle = count_colorings_bruteforce(g, &lists)?;
        let expected = match (&result, p) {
            (Outcome::Residue(_), Some(p)) => Outcome::Residue((&oracle % p.get()).try_into().expect("below p")),
            _ => exact(&oracle),
        };
        if expected != result {
            return Err(mismatch("color", format!("{result:?}"), format!("{expected:?}")));
        }
        report = report.detail("crosscheck", "brute");
    }
    Ok(report)
}

fn cse(a: &crate::CseArgs, crosscheck: bool) -> CmdResult {
    let f = load_graph(&a.graph)?;
    let g = &f.graph;
    let p = modulus(a.modulus)?;
    let (name, result, width) = match a.algo {
        CseAlgo::Brute => {
            let c = count_cse_bruteforce(g)?;
            let r = match p {
                Some(p) => Outcome::Residue((c % p.get()).try_into().expect("below p")),
                None => exact(c),
            };
            ("brute", r, None)
        }
        CseAlgo::Treedp => {
            let p = required(p, "tree-decomposition algorithm")?;
            let td = match &a.td {
                Some(path) => {
                    let (td, n) = parse_td_file(&read(path)?)?;
                    if n != g.n() {
                        return Err(Failure::Domain(format!("decomposition covers {n} vertices, graph has {}", g.n())));
                    }
                    validate_edge_introduce_td(g, &td)
                        .map_err(|v| Failure::Domain(format!("invalid tree decomposition: {v:?}")))?;
                    td
                }
                None => td_from_ordering(g, &arrangement(&f))?,
            };
            let c = count_cse_treedp(g, &td, p)?;
            ("treedp", Outcome::Residue(c), Some(td.width()))
        }
    };
    let mut report = RunReport::new(name, result.clone(), p.map(PrimeModulus::get), instance(g, width));
    if crosscheck {
        let oracle = count_cse_bruteforce(g)?;
        let expected = match p {
            Some(p) => Outcome::Residue((&oracle % p.get()).try_into().expect("below p")),
            None => exact(&oracle),
        };
        if expected != result {
            return Err(mismatch("cse", format!("{result:?}"), format!("{expected:?}")));
        }
        report = report.detail("crosscheck", "brute");
    }
    Ok(report)
}

fn rank(a: &crate::RankArgs) -> CmdResult {
    let p = PrimeModulus::new(a.modulus)?;
    let (h, lists, summary) = match (a.matching, &a.bipartite) {
        (Some(t), _) => {
            let h = BipartiteCutGraph::perfect_matching(t, a.q);
            let n = 2 * t as usize;
            (h, None, Instance { n, m: t as usize, width: Some(t as usize) })
        }
        (None, Some(path)) => {
            let f = load_graph(path)?;
            let g = &f.graph;
            let left = a.left.clone();
            if let Some(v) = left.iter().find(|&&v| v == 0 || v as usize > g.n()) {
                return Err(Failure::Domain(format!("--left names vertex {v} outside 1..={}", g.n())));
            }
            let right: Vec<u32> = g.vertices().filter(|v| !left.contains(v)).collect();
            let edges: Vec<(u32, u32)> =
                g.edges().iter().map(|&(u, v)| if left.contains(&u) { (u, v) } else { (v, u) }).collect();
            let h = BipartiteCutGraph::new(left, right, edges, a.q)?;
            let lists = f.lists.clone();
            if let Some(l) = &lists {
                if l.q() != a.q {
                    return Err(Failure::Domain(format!("--q {} disagrees with the file's q {}", a.q, l.q())));
                }
            }
            (h, lists, instance(g, Some(g.m())))
        }
        (None, None) => unreachable!("clap requires one of --matching and --bipartite"),
    };
    let m = compatibility_matrix(&h, lists.as_ref(), p)?;
    let r = fp_rank(&m);
    Ok(RunReport::new("gauss", exact(r), Some(p.get()), summary)
        .detail("rows", m.rows())
        .detail("cols", m.cols())
        .detail("q", a.q))
}

fn tutte(a: &crate::TutteArgs, crosscheck: bool) -> CmdResult {
    let f = load_graph(&a.graph)?;
    let g = &f.graph;
    let v = tutte_eval(g, &a.x, &a.y)?;
    let width = f.order.as_ref().map(|o| cutwidth_of(g, o)).transpose()?;
    let mut report = RunReport::new("subset-sum", exact(&v), None, instance(g, width))
        .detail("x", a.x.to_string())
        .detail("y", a.y.to_string());
    if crosscheck {
        let seq = tutte_eval_with(g, &a.x, &a.y, Exec::Sequential)?;
        if seq != v {
            return Err(mismatch("tutte", &v, seq));
        }
        report = report.detail("crosscheck", "sequential");
    }
    Ok(report)
}

fn stretch(a: &crate::StretchArgs) -> CmdResult {
    let f = load_graph(&a.graph)?;
    let g = &f.graph;
    let rep = verify_stretch_identity(g, a.k, &a.a, &a.b)?;
    if !rep.equal {
        return Err(Failure::Domain(format!("stretch identity failed: {} vs {}", rep.left, rep.right)));
    }
    let stretched = modcount::graph::k_stretch(g, a.k)?;
    let order = stretch_arrangement(g, &arrangement(&f), a.k)?;
    let width = cutwidth_of(&stretched, &order)?;
    if let Some(out) = &a.out {
        let file = GraphFile { graph: stretched.clone(), q: None, lists: None, order: Some(order) };
        write(out, &serialize_graph_file(&file))?;
    }
    Ok(RunReport::new("subset-sum", exact(&rep.left), None, instance(&stretched, Some(width)))
        .detail("k", a.k)
        .detail("right", rep.right.to_string())
        .detail("equal", rep.equal))
}

fn gadget(a: &crate::GadgetArgs, crosscheck: bool) -> CmdResult {
    let inst = function_gadget(a.q, a.k, &a.f)?;
    let p = modulus(a.modulus)?;
    let g = inst.graph();
    let width = cutwidth_of(g, inst.arrangement())?;
    let total = count_colorings_folklore(g, inst.lists(), inst.arrangement(), p)?;
    let result = match p {
        Some(_) => Outcome::Residue(total.try_into().expect("below p")),
        None => exact(total),
    };
    let expected_total: u128 = a.f.iter().map(|&v| v as u128).sum();
    let mut report = RunReport::new("folklore", result, p.map(PrimeModulus::get), instance(g, Some(width)))
        .detail("boundary", inst.boundary().to_vec())
        .detail("table_sum", expected_total.to_string());
    if a.verify || crosscheck {
        let v = verify_gadget(&inst, &a.f)?;
        let mismatches: Vec<_> = v
            .mismatches
            .iter()
            .map(|m| json!({"boundary": m.boundary, "expected": m.expected, "actual": m.actual.to_string()}))
            .collect();
        report = report.detail(
            "verify",
            json!({"passed": v.passed, "checked": v.checked, "nodes": v.nodes, "mismatches": mismatches}),
        );
        if !v.passed {
            return Err(Failure::Domain(format!("gadget verification failed on {} boundary colorings", mismatches.len())));
        }
    }
    if let Some(out) = &a.out {
        let boundary: Vec<String> = inst.boundary().iter().map(u32::to_string).collect();
        let text = format!("# boundary {}\n{}", boundary.join(" "), serialize_graph_file(&inst.to_graph_file()));
        write(out, &text)?;
    }
    Ok(report)
}

fn reduce(a: &crate::ReduceArgs, crosscheck: bool) -> CmdResult {
    let csp = parse_csp_file(&read(&a.csp)?)?;
    let p = PrimeModulus::new(a.modulus)?;
    let (g, lists, order) = csp_to_listcoloring(&csp, p)?;
    let width = cutwidth_of(&g, &order)?;
    let frontier = cut_profiles(&g, &order)?.iter().map(|c| c.x.len()).max().unwrap_or(0);
    let count: u64 = count_colorings_folklore(&g, &lists, &order, Some(p))?.try_into().expect("below p");
    if let Some(out) = &a.out {
        let file = GraphFile { graph: g.clone(), q: Some(lists.q()), lists: Some(lists.clone()), order: Some(order) };
        write(out, &serialize_graph_file(&file))?;
    }
    let mut report = RunReport::new("folklore", Outcome::Residue(count), Some(p.get()), instance(&g, Some(width)))
        .detail("variables", csp.n_vars())
        .detail("constraints", csp.constraints().len())
        .detail("max_frontier", frontier);
    if crosscheck {
        let solutions = csp.count_solutions_bruteforce()?;
        let expected: u64 = (&solutions % p.get()).try_into().expect("below p");
        if expected != count {
            return Err(mismatch("reduce", count, expected));
        }
        report = report.detail("csp_solutions", solutions.to_string());
    }
    Ok(report)
}

fn distinct(a: &crate::DistinctArgs, crosscheck: bool) -> CmdResult {
    let f = load_graph(&a.graph)?;
    let q = resolve_q(a.q, &f)?;
    let lists: ColorLists = f.lists_or_full(q);
    let order = arrangement(&f);
    let p = modulus(a.modulus)?;
    let (h, h_order) = clique_chain(&f.graph, &lists, &order)?;
    let width = cutwidth_of(&h, &h_order)?;
    let (name, count) = match a.algo {
        DistinctAlgo::Folklore => {
            ("folklore", count_colorings_folklore(&h, &canonical_clique_lists(f.graph.n(), q), &h_order, None)?)
        }
        DistinctAlgo::Brute => ("brute", count_essentially_distinct_bruteforce(&h, q)?),
    };
    let result = match p {
        Some(p) => Outcome::Residue((&count % p.get()).try_into().expect("below p")),
        None => exact(&count),
    };
    if let Some(out) = &a.out {
        let file = GraphFile { graph: h.clone(), q: Some(q), lists: None, order: Some(h_order) };
        write(out, &serialize_graph_file(&file))?;
    }
    let mut report = RunReport::new(name, result, p.map(PrimeModulus::get), instance(&h, Some(width)))
        .detail("q", q)
        .detail("input_width", cutwidth_of(&f.graph, &order)?);
    if crosscheck {
        let oracle = count_colorings_bruteforce(&f.graph, &lists)?;
        if oracle != count {
            return Err(mismatch("distinct", &count, oracle));
        }
        report = report.detail("crosscheck", "brute");
    }
    Ok(report)
}
