//! One function per subcommand. Each returns the echoed inputs, the JSON
//! payload and the human-readable rendering.

use std::fmt::Write as _;

use degseq::enumeration::{
    count_h_family, enumerate_realizations, p_measure_report, verify_appendix, AppendixReport, CountConfig,
    InequalityCheck,
};
use degseq::graphicality::{
    is_graphic, is_graphic_tv, jms_star_sigma_margin, leg, non_graphic_sums, region_fully_graphic,
    region_satisfies_stability_bound, very_simple_region_fully_graphic, EgReport, RegionPredicate,
};
use degseq::mcmc::{sample, tv_distance_to_uniform, ChainConfig};
use degseq::splitgraph::{
    is_split_sequence, nonstability_witness, split_witness, tyshkevich_compose, verify_multiplicativity,
    SplitGraph, SplitWitness,
};
use degseq::{DegreeSequence, Error, ExactCounter, LabeledGraph, PMeasure, SimpleRegion, VerySimpleRegion};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::parse::{format_edges, format_graph};

pub struct Output {
    pub inputs: Value,
    pub result: Value,
    pub human: String,
}

pub type CmdResult = Result<Output, Error>;

fn ratio_json(r: &PMeasure) -> Value {
    let approx = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
        / r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    json!({ "exact": r.to_string(), "approx": approx })
}

fn eg_json(r: &EgReport) -> Value {
    json!({
        "graphic": r.graphic,
        "odd_sum": r.odd_sum,
        "failing_k": r.failing_k,
        "checked_ks": r.checked_ks,
    })
}

fn eg_human(r: &EgReport) -> String {
    match (r.graphic, r.odd_sum, r.failing_k) {
        (true, _, _) => "graphic".into(),
        (false, true, _) => "not graphic (odd sum)".into(),
        (false, false, Some(k)) => format!("not graphic (fails at k={k})"),
        (false, false, None) => "not graphic".into(),
    }
}

pub fn check(d: &DegreeSequence, tv: bool) -> CmdResult {
    let report = if tv { is_graphic_tv(d)? } else { is_graphic(d) };
    Ok(Output {
        inputs: json!({ "degrees": d.to_string(), "method": if tv { "tripathi-vijay" } else { "erdos-gallai" } }),
        result: eg_json(&report),
        human: eg_human(&report),
    })
}

pub fn leg_cmd(r: &SimpleRegion) -> CmdResult {
    let l = leg(r);
    let graphic = is_graphic(&l).graphic;
    Ok(Output {
        inputs: json!({ "region": r.to_string() }),
        result: json!({ "sequence": l.to_string(), "graphic": graphic, "fully_graphic": graphic }),
        human: l.to_string(),
    })
}

pub fn region(n: usize, sigma: Option<u64>, c1: u32, c2: u32, predicate: Option<RegionPredicate>) -> CmdResult {
    let mut result = Map::new();
    let mut human = String::new();
    match sigma {
        Some(sigma) => {
            let r = SimpleRegion::new(n, sigma, c1, c2)?;
            let l = leg(&r);
            let fg = region_fully_graphic(&r);
            result.insert("region".into(), json!(r.to_string()));
            result.insert("kind".into(), json!("simple"));
            result.insert("fully_graphic".into(), json!(fg));
            result.insert("leg".into(), json!(l.to_string()));
            result.insert("leg_check".into(), eg_json(&is_graphic(&l)));
            result.insert("stability_bound".into(), json!(region_satisfies_stability_bound(&r)));
            result.insert("jms_star_sigma_margin".into(), json!(jms_star_sigma_margin(n, sigma, c1, c2).to_string()));
            let _ = writeln!(human, "{r}: {}", if fg { "fully graphic" } else { "not fully graphic" });
            let _ = write!(human, "leg: {l}");
        }
        None => {
            let r = VerySimpleRegion::new(n, c1, c2)?;
            let bad = non_graphic_sums(&r);
            let fg = very_simple_region_fully_graphic(&r);
            result.insert("region".into(), json!(r.to_string()));
            result.insert("kind".into(), json!("very_simple"));
            result.insert("fully_graphic".into(), json!(fg));
            result.insert("empty".into(), json!(r.is_empty()));
            result.insert("non_graphic_sums".into(), json!(bad));
            let label = if r.is_empty() { "empty" } else if fg { "fully graphic" } else { "not fully graphic" };
            let _ = write!(human, "{r}: {label}");
            if !bad.is_empty() {
                let sums: Vec<String> = bad.iter().map(u64::to_string).collect();
                let _ = write!(human, "\nnon-graphic sums: {}", sums.join(","));
            }
        }
    }
    if let Some(p) = predicate {
        let holds = p.evaluate(n, sigma, c1, c2)?;
        result.insert(
            "predicate".into(),
            json!({ "name": p.name(), "holds": holds, "exceptional_length_bound": p.exceptional_length_bound() }),
        );
        let _ = write!(human, "\n{}: {}", p.name(), holds);
    }
    Ok(Output {
        inputs: json!({ "n": n, "sigma": sigma, "c1": c1, "c2": c2, "predicate": predicate.map(|p| p.name()) }),
        result: Value::Object(result),
        human,
    })
}

pub fn count(counter: &mut ExactCounter, d: &DegreeSequence) -> CmdResult {
    let r = counter.count(d)?;
    Ok(Output {
        inputs: json!({ "degrees": d.to_string() }),
        result: json!({ "count": r.count.to_string(), "nodes_explored": r.nodes_explored }),
        human: r.count.to_string(),
    })
}

pub fn enumerate(config: &CountConfig, d: &DegreeSequence, limit: Option<usize>) -> CmdResult {
    let graphs: Vec<String> = enumerate_realizations(d, limit, config)?.map(|g| format_edges(&g.edges())).collect();
    Ok(Output {
        inputs: json!({ "degrees": d.to_string(), "limit": limit }),
        human: if graphs.is_empty() { "no realizations".into() } else { graphs.join("\n") },
        result: json!({ "n": d.len(), "realizations": graphs, "returned": graphs.len() }),
    })
}

pub fn pmeasure(counter: &mut ExactCounter, d: &DegreeSequence) -> CmdResult {
    let r = p_measure_report(counter, d)?;
    Ok(Output {
        inputs: json!({ "degrees": d.to_string() }),
        result: json!({
            "base_count": r.base_count.to_string(),
            "minus_minus_total": r.minus_minus_total.to_string(),
            "minus_two_total": r.minus_two_total.to_string(),
            "p": ratio_json(&r.positional),
            "p_with_double_steps": ratio_json(&r.with_double_steps),
        }),
        human: format!("p = {} (with -2 moves: {})", r.positional, r.with_double_steps),
    })
}

fn inequality_json(c: &InequalityCheck) -> Value {
    json!({ "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string(), "holds": c.holds })
}

fn appendix_human(r: &AppendixReport) -> String {
    let line = |name: &str, c: &InequalityCheck| {
        format!("({name}) {} <= {}: {}", c.lhs, c.rhs, if c.holds { "holds" } else { "FAILS" })
    };
    format!(
        "|G(D)|={} ++={} --={} +-={} +2={} -2={}\n{}\n{}\n{}",
        r.base,
        r.plus_plus,
        r.minus_minus,
        r.plus_minus,
        r.plus_two,
        r.minus_two,
        line("a", &r.a),
        line("b", &r.b),
        line("c", &r.c)
    )
}

pub fn appendix(counter: &mut ExactCounter, d: &DegreeSequence) -> CmdResult {
    let r = verify_appendix(counter, d)?;
    Ok(Output {
        inputs: json!({ "degrees": d.to_string() }),
        result: json!({
            "n": r.n,
            "base": r.base.to_string(),
            "plus_plus": r.plus_plus.to_string(),
            "minus_minus": r.minus_minus.to_string(),
            "plus_minus": r.plus_minus.to_string(),
            "plus_two": r.plus_two.to_string(),
            "minus_two": r.minus_two.to_string(),
            "a": inequality_json(&r.a),
            "b": inequality_json(&r.b),
            "c": inequality_json(&r.c),
            "all_hold": r.all_hold(),
            "plus_minus_empty": r.plus_minus_empty,
            "a_needs_base_term": r.a_needs_base_term,
        }),
        human: appendix_human(&r),
    })
}

pub fn h_family(counter: &mut ExactCounter, from: usize, to: usize) -> CmdResult {
    let mut rows = Vec::new();
    let mut human = Vec::new();
    for m in from..=to {
        let r = count_h_family(counter, m)?;
        human.push(format!("m={m} h={} count={} h'={} count={}", r.h, r.count_h, r.h_prime, r.count_h_prime));
        rows.push(json!({
            "m": m,
            "h": r.h.to_string(),
            "h_prime": r.h_prime.to_string(),
            "count_h": r.count_h.to_string(),
            "count_h_prime": r.count_h_prime.to_string(),
        }));
    }
    Ok(Output { inputs: json!({ "from": from, "to": to }), result: json!({ "rows": rows }), human: human.join("\n") })
}

pub fn split_check(d: &DegreeSequence) -> CmdResult {
    let v = is_split_sequence(d)?;
    Ok(Output {
        inputs: json!({ "degrees": d.to_string() }),
        result: json!({ "is_split": v.is_split, "m": v.m, "lhs": v.lhs, "rhs": v.rhs }),
        human: format!("{} (m={}, {} vs {})", if v.is_split { "split" } else { "not split" }, v.m, v.lhs, v.rhs),
    })
}

fn witness_json(w: &SplitWitness) -> Value {
    json!({
        "region": w.region.to_string(),
        "sequence": w.sequence.to_string(),
        "ell": w.ell,
        "sigma": w.sigma,
        "c": w.c,
        "alpha": w.alpha,
        "layout": format!("{:?}", w.layout),
        "graph": format_graph(&w.split.graph),
        "clique": w.split.clique,
        "independent": w.split.independent,
    })
}

pub fn split_witness_cmd(n: usize, c1: u32, c2: u32) -> CmdResult {
    let r = VerySimpleRegion::new(n, c1, c2)?;
    let w = split_witness(&r)?;
    let human = match &w {
        Some(w) => format!("{}\nclique size {}, graph {}", w.sequence, w.ell, format_graph(&w.split.graph)),
        None => format!("{r} is fully graphic; no witness"),
    };
    Ok(Output {
        inputs: json!({ "n": n, "c1": c1, "c2": c2 }),
        result: json!({ "fully_graphic": w.is_none(), "witness": w.as_ref().map(witness_json) }),
        human,
    })
}

pub fn tyshkevich(
    counter: &mut ExactCounter,
    g: LabeledGraph,
    clique: Vec<usize>,
    h: &LabeledGraph,
    verify: bool,
) -> CmdResult {
    let n = g.vertex_count();
    let independent: Vec<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
    let inputs = json!({ "g": format_graph(&g), "clique": clique, "h": format_graph(h) });
    let split = SplitGraph::new(g, clique, independent)?;
    let k = tyshkevich_compose(&split, h);
    let mut result = json!({ "graph": format_graph(&k), "degrees": k.degree_sequence().to_string() });
    let mut human = format!("{}\n{}", format_graph(&k), k.degree_sequence());
    if verify {
        let r = verify_multiplicativity(counter, &split, h)?;
        result["multiplicativity"] = json!({
            "count_g": r.count_g.to_string(),
            "count_h": r.count_h.to_string(),
            "count_composite": r.count_composite.to_string(),
            "holds": r.holds,
        });
        let _ = write!(human, "\n{} = {} * {}: {}", r.count_composite, r.count_g, r.count_h, r.holds);
    }
    Ok(Output { inputs, result, human })
}

pub fn nonstab(counter: &mut ExactCounter, n: usize, n_prime: usize, c1: u32, c2: u32, verify: bool) -> CmdResult {
    let w = nonstability_witness(n, n_prime, c1, c2, if verify { Some(counter) } else { None })?;
    let inputs = json!({ "n": n, "n_prime": n_prime, "c1": c1, "c2": c2, "verify": verify });
    let Some(w) = w else {
        return Ok(Output {
            inputs,
            result: json!({ "fully_graphic": true, "witness": null }),
            human: format!("n={n},c1={c1},c2={c2} is fully graphic; no witness"),
        });
    };
    let p = &w.perturbation;
    let mut human = format!("e = {}\ne + 1^{{+{}}}_{{+{}}} = {}", w.e, p.i, p.j.unwrap_or(p.i), w.perturbed);
    let verification = w.verification.as_ref().map(|v| {
        let _ = write!(
            human,
            "\ncount(split) = {}, count(e) = {}, count(perturbed) = {}",
            v.count_split, v.count_e, v.count_perturbed
        );
        json!({
            "count_split": v.count_split.to_string(),
            "count_e": v.count_e.to_string(),
            "count_perturbed": v.count_perturbed.to_string(),
            "split_unique": v.split_unique,
        })
    });
    Ok(Output {
        inputs,
        result: json!({
            "fully_graphic": false,
            "m": w.m,
            "witness": witness_json(&w.witness),
            "composite": format_graph(&w.composite),
            "e": w.e.to_string(),
            "perturbation": { "i": p.i, "j": p.j },
            "perturbed": w.perturbed.to_string(),
            "verification": verification,
        }),
        human,
    })
}

/// Exact state counts above this are not enumerated for the TV distance.
const TV_STATE_LIMIT: u64 = 1_000_000;

pub fn mcmc(counter: &mut ExactCounter, d: &DegreeSequence, cfg: ChainConfig) -> CmdResult {
    let r = sample(d, &cfg)?;
    let states = counter.count(d).ok().and_then(|c| c.count.to_string().parse::<u64>().ok());
    let tv = states.filter(|&s| s <= TV_STATE_LIMIT).map(|s| tv_distance_to_uniform(&r.histogram, s as usize));
    let histogram: Map<String, Value> = r.histogram.iter().map(|(k, c)| (format_edges(k), json!(c))).collect();
    let mut human = format!(
        "{} steps, {} accepted, {} distinct states visited",
        cfg.steps,
        r.accepted,
        r.histogram.len()
    );
    if let (Some(s), Some(tv)) = (states, tv) {
        let _ = write!(human, " of {s}\nTV distance to uniform: {tv:.4}");
    }
    Ok(Output {
        inputs: json!({
            "degrees": d.to_string(),
            "steps": cfg.steps,
            "seed": cfg.seed,
            "burn_in": cfg.burn_in,
            "report_every": cfg.report_every,
        }),
        result: json!({
            "final_graph": format_graph(&r.final_graph),
            "histogram": histogram,
            "state_count": states.map(|s| s.to_string()),
            "tv_distance": tv,
            "accepted": r.accepted,
            "rejected": r.rejected,
            "snapshots": r.snapshots,
            "metadata": { "rng": r.rng, "seed": cfg.seed, "move": "ordered edge pair switch, lazy rejection" },
        }),
        human,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct SweepGrid {
    pub n_min: usize,
    pub n_max: usize,
    pub very_simple: bool,
    pub skip_empty: bool,
    pub predicate: Option<RegionPredicate>,
}

struct Cell {
    n: usize,
    sigma: Option<u64>,
    c1: u32,
    c2: u32,
}

pub fn sweep(grid: SweepGrid) -> CmdResult {
    let mut cells = Vec::new();
    for n in grid.n_min.max(1)..=grid.n_max {
        if grid.very_simple {
            for c1 in 0..n as u32 {
                for c2 in 0..=c1 {
                    cells.push(Cell { n, sigma: None, c1, c2 });
                }
            }
        } else {
            for sigma in 0..=(n * (n - 1)) as u64 {
                for c1 in 0..n as u32 {
                    for c2 in 0..=c1 {
                        cells.push(Cell { n, sigma: Some(sigma), c1, c2 });
                    }
                }
            }
        }
    }
    let rows: Vec<Option<(Value, String)>> = cells
        .par_iter()
        .map(|cell| {
            let (label, leg_seq) = classify(cell);
            if grid.skip_empty && label == "EMPTY" {
                return None;
            }
            let holds = grid.predicate.and_then(|p| p.evaluate(cell.n, cell.sigma, cell.c1, cell.c2).ok());
            let sigma = cell.sigma.map_or("-".to_string(), |s| s.to_string());
            let mut line = format!("{}\t{}\t{}\t{}\t{}", cell.n, sigma, cell.c1, cell.c2, label);
            if let Some(h) = holds {
                let _ = write!(line, "\t{h}");
            }
            let row = json!({
                "n": cell.n,
                "sigma": cell.sigma,
                "c1": cell.c1,
                "c2": cell.c2,
                "label": label,
                "leg": leg_seq,
                "predicate": holds,
            });
            Some((row, line))
        })
        .collect();
    let (rows, lines): (Vec<Value>, Vec<String>) = rows.into_iter().flatten().unzip();
    let header = if grid.predicate.is_some() { "n\tsigma\tc1\tc2\tlabel\tpredicate" } else { "n\tsigma\tc1\tc2\tlabel" };
    Ok(Output {
        inputs: json!({
            "n_min": grid.n_min,
            "n_max": grid.n_max,
            "very_simple": grid.very_simple,
            "skip_empty": grid.skip_empty,
            "predicate": grid.predicate.map(|p| p.name()),
        }),
        human: std::iter::once(header.to_string()).chain(lines).collect::<Vec<_>>().join("\n"),
        result: json!({ "rows": rows }),
    })
}

fn classify(cell: &Cell) -> (&'static str, Option<String>) {
    let label = |fg: bool| if fg { "FULLY_GRAPHIC" } else { "NOT_FULLY_GRAPHIC" };
    match cell.sigma {
        Some(sigma) => match SimpleRegion::new(cell.n, sigma, cell.c1, cell.c2) {
            Ok(r) => {
                let l = leg(&r);
                (label(is_graphic(&l).graphic), Some(l.to_string()))
            }
            Err(_) => ("EMPTY", None),
        },
        None => {
            let r = VerySimpleRegion::new(cell.n, cell.c1, cell.c2).expect("grid stays inside valid bounds");
            if r.is_empty() {
                ("EMPTY", None)
            } else {
                (label(very_simple_region_fully_graphic(&r)), None)
            }
        }
    }
}
