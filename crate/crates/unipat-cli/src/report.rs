//! Subcommand bodies. Each produces a [`Report`] holding both the CSV table
//! and the JSON document, so output format is chosen only at emission.

use std::io::Write;

use anyhow::{bail, Result};
use serde_json::{json, Value};
use unipat::oracle::{self, UnitriangularGroup};
use unipat::patterns::{antichain_counts, is_closed};
use unipat::singleroot::{
    check_subhook, k_pattern, midafi_row, n_pattern, solve_all, solve_root, verify_red_hypotheses,
    w_pattern, SearchStats,
};
use unipat::{ArmSolution, Pattern, RootSystem, RootType};

use crate::SystemArgs;

pub struct Report {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    /// A verification check failed.
    pub failed: bool,
}

impl Report {
    fn new(header: Vec<&'static str>, rows: Vec<Vec<String>>, json: Value) -> Self {
        Report {
            header,
            rows,
            json,
            failed: false,
        }
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.header)?;
        for row in &self.rows {
            out.write_record(row)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_json(&self, w: &mut dyn Write) -> Result<()> {
        serde_json::to_writer(&mut *w, &self.json)?;
        writeln!(w)?;
        Ok(())
    }
}

/// Resolves `--type`/`--rank`, also accepting the rank glued to the type (`B4`).
pub fn system(args: &SystemArgs) -> Result<RootSystem> {
    let (ty, rank) = parse_type(&args.ty, args.rank)?;
    Ok(RootSystem::of_type(ty, rank)?)
}

fn parse_type(s: &str, rank: Option<usize>) -> Result<(RootType, Option<usize>)> {
    if let Ok(ty) = s.parse::<RootType>() {
        return Ok((ty, rank));
    }
    let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let (name, digits) = s.split_at(split);
    let ty: RootType = name.parse()?;
    if !ty.is_classical() || digits.is_empty() {
        bail!("unknown root system type {s:?}");
    }
    let glued: usize = digits.parse()?;
    if rank.is_some_and(|r| r != glued) {
        bail!("--type {s} conflicts with --rank {}", rank.unwrap());
    }
    Ok((ty, Some(glued)))
}

fn list(p: &Pattern) -> String {
    p.labels()
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn header_json(rs: &RootSystem) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(1));
    m.insert("type".into(), json!(rs.root_type().to_string()));
    m.insert("rank".into(), json!(rs.rank()));
    m
}

fn with(mut m: serde_json::Map<String, Value>, key: &str, v: Value) -> Value {
    m.insert(key.into(), v);
    Value::Object(m)
}

pub fn rootsys(rs: &RootSystem) -> Result<Report> {
    let mut rows = Vec::new();
    let mut roots = Vec::new();
    for (i, r) in rs.roots().iter().enumerate() {
        let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        rows.push(vec![
            (i + 1).to_string(),
            r.height.to_string(),
            rs.format_root(i),
            coeffs.join(" "),
        ]);
        roots.push(json!({
            "idx": i + 1,
            "coords2x": r.coords2x,
            "coeffs": r.coeffs,
            "height": r.height,
            "label": rs.format_root(i),
        }));
    }
    Ok(Report::new(
        vec!["root_index", "height", "coords", "coeffs"],
        rows,
        with(header_json(rs), "roots", Value::Array(roots)),
    ))
}

pub fn antichains(rs: &RootSystem, total_only: bool) -> Result<Report> {
    let poly = antichain_counts(rs);
    let total = poly.eval(1);
    let by_size: Vec<Value> = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| json!({"k": k, "count": c}))
        .collect();
    let mut m = header_json(rs);
    m.insert("total".into(), json!(total));
    m.insert("polynomial".into(), json!(poly.to_string()));
    let json = with(m, "by_size", Value::Array(by_size));
    Ok(if total_only {
        Report::new(vec!["total"], vec![vec![total.to_string()]], json)
    } else {
        let rows = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| vec![k.to_string(), c.to_string()])
            .collect();
        Report::new(vec!["k", "count"], rows, json)
    })
}

fn root_rows(rs: &RootSystem, p: &Pattern) -> Vec<Vec<String>> {
    p.iter()
        .map(|i| {
            vec![
                (i + 1).to_string(),
                rs.height(i).to_string(),
                rs.format_root(i),
            ]
        })
        .collect()
}

pub fn kernel(rs: &RootSystem, root: &str) -> Result<Report> {
    let a = rs.parse_root(root)?;
    let k = k_pattern(rs, a);
    let mut m = header_json(rs);
    m.insert("root_index".into(), json!(a + 1));
    m.insert("coords".into(), json!(rs.format_root(a)));
    m.insert("n".into(), json!(n_pattern(rs, a).labels()));
    m.insert("w".into(), json!(w_pattern(rs, a).labels()));
    let json = with(m, "k", json!(k.labels()));
    Ok(Report::new(
        vec!["root_index", "height", "coords"],
        root_rows(rs, &k),
        json,
    ))
}

pub fn hook(rs: &RootSystem, root: &str) -> Result<Report> {
    let a = rs.parse_root(root)?;
    let pairs = rs.decompositions(a);
    let rows = pairs
        .iter()
        .map(|&(x, y)| {
            vec![
                (x + 1).to_string(),
                rs.format_root(x),
                (y + 1).to_string(),
                rs.format_root(y),
            ]
        })
        .collect();
    let mut m = header_json(rs);
    m.insert("root_index".into(), json!(a + 1));
    m.insert("coords".into(), json!(rs.format_root(a)));
    m.insert("hook".into(), json!(rs.hook(a).labels()));
    let pairs_json: Vec<Value> = pairs.iter().map(|&(x, y)| json!([x + 1, y + 1])).collect();
    Ok(Report::new(
        vec!["root_index", "coords", "partner_index", "partner_coords"],
        rows,
        with(m, "pairs", Value::Array(pairs_json)),
    ))
}

fn subhooks_field(sol: &ArmSolution) -> String {
    sol.subhooks
        .values()
        .map(|c| format!("{}:{}", c.beta + 1, list(&c.subhook)))
        .collect::<Vec<_>>()
        .join(";")
}

fn solution_json(rs: &RootSystem, sol: &ArmSolution) -> Value {
    let subhooks: Vec<Value> = sol
        .subhooks
        .values()
        .map(|c| {
            json!({
                "beta": c.beta + 1,
                "subhook": c.subhook.labels(),
                "sub_arm": c.sub_arm.labels(),
                "sub_leg": c.sub_leg.labels(),
            })
        })
        .collect();
    json!({
        "root_index": sol.alpha + 1,
        "coords": rs.format_root(sol.alpha),
        "height": rs.height(sol.alpha),
        "arm": sol.arm.labels(),
        "leg": sol.leg.labels(),
        "kernel": sol.kernel.labels(),
        "enlarged_leg": sol.enlarged_leg.labels(),
        "normal_flag": sol.normal_flag,
        "subhooks": subhooks,
    })
}

fn stats_json(s: &SearchStats) -> Value {
    json!({
        "hook_pairs": s.hook_pairs,
        "pivot": s.pivot.map(|(a, b)| [a + 1, b + 1]),
        "forced_leg": s.forced_leg,
        "free_pairs": s.free_pairs,
        "branch_space": s.branch_space().to_string(),
        "nodes": s.nodes,
        "assignments": s.assignments,
    })
}

pub fn arms(rs: &RootSystem, root: Option<&str>, jobs: usize) -> Result<Report> {
    let (sols, stats) = match root {
        Some(sel) => {
            let (sol, stats) = solve_root(rs, rs.parse_root(sel)?)?;
            (vec![sol], stats)
        }
        None => (solve_all(rs, jobs)?, None),
    };
    let rows = sols
        .iter()
        .map(|s| {
            vec![
                (s.alpha + 1).to_string(),
                rs.format_root(s.alpha),
                list(&s.arm),
                list(&s.leg),
                s.kernel.len().to_string(),
                s.normal_flag.to_string(),
                s.enlarged_leg_excess().to_string(),
                subhooks_field(s),
            ]
        })
        .collect();
    let mut m = header_json(rs);
    if let Some(st) = &stats {
        m.insert("search".into(), stats_json(st));
    }
    let arms_json: Vec<Value> = sols.iter().map(|s| solution_json(rs, s)).collect();
    Ok(Report::new(
        vec![
            "root_index",
            "coords",
            "arm",
            "leg",
            "kernel_size",
            "normal_flag",
            "enlarged_leg_excess",
            "subhooks",
        ],
        rows,
        with(m, "arms", Value::Array(arms_json)),
    ))
}

pub fn midafi(rs: &RootSystem, jobs: usize) -> Result<Report> {
    let sols = solve_all(rs, jobs)?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for sol in &sols {
        let r = midafi_row(rs, sol);
        rows.push(vec![
            (r.alpha + 1).to_string(),
            r.height.to_string(),
            rs.format_root(r.alpha),
            r.arm_size.to_string(),
            r.normal_flag.to_string(),
            r.count_exponent.to_string(),
            r.arm_size.to_string(),
            r.enlarged_leg_excess.to_string(),
        ]);
        let mut e = solution_json(rs, sol);
        let obj = e.as_object_mut().expect("object");
        obj.insert("arm_size".into(), json!(r.arm_size));
        obj.insert("count_exponent".into(), json!(r.count_exponent));
        obj.insert("degree_exponent".into(), json!(r.arm_size));
        obj.insert("enlarged_leg_excess".into(), json!(r.enlarged_leg_excess));
        obj.insert("count".into(), json!(r.count().compact()));
        obj.insert("degree".into(), json!(r.degree().compact()));
        entries.push(e);
    }
    Ok(Report::new(
        vec![
            "root_index",
            "height",
            "coords",
            "arm_size",
            "normal_flag",
            "count_exponent",
            "degree_exponent",
            "enlarged_leg_excess",
        ],
        rows,
        with(header_json(rs), "rows", Value::Array(entries)),
    ))
}

/// A named pass/fail line for the check-running subcommands.
struct CheckLine {
    scope: String,
    name: String,
    passed: bool,
    detail: String,
}

fn check_report(lines: Vec<CheckLine>, mut head: serde_json::Map<String, Value>) -> Report {
    let failed = lines.iter().any(|c| !c.passed);
    let rows = lines
        .iter()
        .map(|c| {
            vec![
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                c.scope.clone(),
                c.name.clone(),
                c.detail.replace(',', ";"),
            ]
        })
        .collect();
    let checks: Vec<Value> = lines
        .iter()
        .map(|c| json!({"scope": c.scope, "check": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    head.insert("passed".into(), json!(!failed));
    head.insert("checks".into(), Value::Array(checks));
    Report {
        header: vec!["status", "scope", "check", "detail"],
        rows,
        json: Value::Object(head),
        failed,
    }
}

pub fn oracle(rank: usize, q: u32, verify_all: bool) -> Result<Report> {
    let mut head = serde_json::Map::new();
    head.insert("schema".into(), json!(1));
    head.insert("rank".into(), json!(rank));
    head.insert("q".into(), json!(q));
    let scope = format!("A{rank} q={q}");
    if verify_all {
        let lines = oracle::verify_all(rank, q)?
            .into_iter()
            .map(|c| CheckLine {
                scope: scope.clone(),
                name: c.name,
                passed: c.passed,
                detail: c.detail,
            })
            .collect();
        return Ok(check_report(lines, head));
    }
    let g = UnitriangularGroup::new(rank, q)?;
    let order = g.order();
    let full = g.pattern_subgroup(&g.root_system().full_pattern())?;
    let classes = g.class_count(&full)?;
    head.insert("order".into(), json!(order.to_string()));
    head.insert("classes".into(), json!(classes));
    Ok(Report::new(
        vec!["rank", "q", "order", "classes"],
        vec![vec![
            rank.to_string(),
            q.to_string(),
            order.to_string(),
            classes.to_string(),
        ]],
        Value::Object(head),
    ))
}

fn systems_up_to(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for ty in RootType::ALL {
        match ty.fixed_rank() {
            Some(r) => out.push(RootSystem::new(ty, r).expect("fixed rank")),
            None => {
                for r in ty.min_rank()..=max_rank {
                    out.push(RootSystem::new(ty, r).expect("admissible rank"));
                }
            }
        }
    }
    out
}

/// `∏ (e_i + h + 1) / (e_i + 1)` over the exponents.
fn catalan_number(rs: &RootSystem) -> u128 {
    let h = rs.coxeter_number() as u128;
    let (num, den) = rs.exponents().iter().fold((1u128, 1u128), |(n, d), &e| {
        (n * (e as u128 + h + 1), d * (e as u128 + 1))
    });
    num / den
}

fn verify_system(rs: &RootSystem, jobs: usize) -> Result<Vec<CheckLine>> {
    let scope = rs.label();
    let mut lines = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        lines.push(CheckLine {
            scope: scope.clone(),
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let poly = antichain_counts(rs);
    let total = poly.eval(1) as u128;
    let want = catalan_number(rs);
    push(
        "antichain total equals the exponent product",
        total == want,
        format!("{total} vs {want}"),
    );
    push(
        "antichains have at most rank many roots",
        poly.degree().unwrap_or(0) <= rs.rank(),
        format!("largest size {}", poly.degree().unwrap_or(0)),
    );

    let full = rs.full_pattern();
    let bad = (0..rs.len())
        .filter(|&a| {
            let k = k_pattern(rs, a);
            let w = w_pattern(rs, a);
            !(k.is_disjoint(&w) && k.union(&w) == full && n_pattern(rs, a).is_subset(&k))
        })
        .count();
    push(
        "kernel and down-set partition the positive roots",
        bad == 0,
        format!("{bad} failures"),
    );

    let sols = solve_all(rs, jobs)?;
    if rs.root_type().is_classical() {
        let bad: Vec<String> = sols
            .iter()
            .filter(|s| !verify_red_hypotheses(rs, s).all())
            .map(|s| rs.format_root(s.alpha))
            .collect();
        push(
            "closed-form arms satisfy the reduction hypotheses",
            bad.is_empty(),
            format!("{} failures {}", bad.len(), bad.join(" ")),
        );
    } else {
        let bad_source = sols.iter().filter(|s| !is_closed(rs, &s.source)).count();
        push(
            "every source is closed",
            bad_source == 0,
            format!("{bad_source} failures"),
        );
        let non_normal: Vec<&ArmSolution> = sols.iter().filter(|s| !s.normal_flag).collect();
        let bad_leg = non_normal
            .iter()
            .filter(|s| !s.enlarged_leg_admissible(rs))
            .count();
        push(
            "enlarged legs are admissible",
            bad_leg == 0,
            format!("{} non-normal roots; {bad_leg} failures", non_normal.len()),
        );
        let (mut certs, mut bad_cert) = (0, 0);
        for s in &non_normal {
            if s.subhooks.len() != s.enlarged_leg_excess() {
                bad_cert += 1;
            }
            for c in s.subhooks.values() {
                certs += 1;
                if !check_subhook(rs, s, c).all() {
                    bad_cert += 1;
                }
            }
        }
        push(
            "subhook certificates pass their checks",
            bad_cert == 0,
            format!("{certs} certificates; {bad_cert} failures"),
        );
    }
    Ok(lines)
}

pub fn verify(ty: Option<&str>, rank: Option<usize>, jobs: usize) -> Result<Report> {
    let systems = match ty {
        Some(t) => {
            let (ty, rank) = parse_type(t, rank)?;
            vec![RootSystem::of_type(ty, rank)?]
        }
        None => systems_up_to(rank.unwrap_or(8)),
    };
    let mut lines = Vec::new();
    for rs in &systems {
        lines.extend(verify_system(rs, jobs)?);
    }
    let mut head = serde_json::Map::new();
    head.insert("schema".into(), json!(1));
    Ok(check_report(lines, head))
}
