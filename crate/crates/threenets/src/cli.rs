//! Batch command-line front end. Subcommands: `construct` (family -> net
//! file), `verify` (net file -> axiom and regularity report), `theorem`
//! (validators), `search` (JSON-lines stream), `latin` (net file -> latin
//! square).
//!
//! Exit codes are frozen: 0 pass, 1 precondition failure, 2 theorem or
//! axiom violation (counterexample serialized), 3 usage error. Human output
//! goes to stdout; machine JSON goes to a file via `-o` or replaces the
//! human output under `--json`. Two runs of the same command produce
//! byte-identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::curve_groups::{subgroup_and_cosets, CubicGroup};
use crate::curves::Cubic;
use crate::field::FieldSpec;
use crate::geometry::ProjPoint;
use crate::io;
use crate::nets::{
    classify_regularity, construct_conic_line, construct_projection, construct_subgroup_type,
    latin_square_of, n3_family, pasch_net_with_roles, verify_axioms, ConicLineKind,
    ConicLineParams, DualThreeNet,
};
use crate::redei::{divisibility_certificate, PowerSumStatus};
use crate::search::{enumerate_nets, SearchConstraints, SearchStatus, SearchTask};
use crate::theorems::{
    check_converse, check_n2, check_n3, check_n4, check_theorem1, waterhouse_scan, Mechanism,
    TheoremsError,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

struct Failure {
    code: i32,
    message: String,
    /// serialized counterexample for violations
    payload: Option<String>,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
            payload: None,
        }
    }

    fn precondition(msg: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_PRECONDITION,
            message: msg.into(),
            payload: None,
        }
    }

    fn from_theorem(err: TheoremsError) -> Failure {
        match err {
            TheoremsError::TheoremViolated {
                message,
                counterexample,
            } => Failure {
                code: EXIT_VIOLATION,
                message,
                payload: Some(counterexample),
            },
            other => Failure {
                code: EXIT_PRECONDITION,
                message: other.to_string(),
            payload: None,
            },
        }
    }
}

#[derive(Default)]
struct Parsed {
    command: String,
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
    switches: Vec<String>,
}

const VALUE_FLAGS: &[&str] = &[
    "--p", "--k", "--a", "--b", "--c", "--r", "--q", "--n", "--family", "--subgroup-order",
    "--coset-a", "--coset-b", "--roles", "--cubic", "--triple-index", "--check", "-o",
    "--seed", "--budget", "--jobs", "--samples", "--max-order",
];
const SWITCHES: &[&str] = &["--json", "--hyperoval"];

fn parse_args(args: &[String]) -> Result<Parsed, Failure> {
    if args.is_empty() {
        return Err(Failure::usage(USAGE));
    }
    let mut parsed = Parsed {
        command: args[0].clone(),
        ..Default::default()
    };
    let mut i = 1;
    while i < args.len() {
        let arg = &args[i];
        if SWITCHES.contains(&arg.as_str()) {
            parsed.switches.push(arg.clone());
            i += 1;
        } else if VALUE_FLAGS.contains(&arg.as_str()) {
            let value = args
                .get(i + 1)
                .ok_or_else(|| Failure::usage(format!("flag {} needs a value", arg)))?;
            parsed.flags.insert(arg.clone(), value.clone());
            i += 2;
        } else if arg.starts_with('-') {
            return Err(Failure::usage(format!("unknown flag {}", arg)));
        } else {
            parsed.positional.push(arg.clone());
            i += 1;
        }
    }
    Ok(parsed)
}

impl Parsed {
    fn json(&self) -> bool {
        self.switches.iter().any(|s| s == "--json")
    }

    fn flag_u64(&self, name: &str) -> Result<Option<u64>, Failure> {
        match self.flags.get(name) {
            None => Ok(None),
            Some(v) => v
                .parse::<u64>()
                .map(Some)
                .map_err(|_| Failure::usage(format!("{} expects an integer, got {}", name, v))),
        }
    }

    fn require_u64(&self, name: &str) -> Result<u64, Failure> {
        self.flag_u64(name)?
            .ok_or_else(|| Failure::usage(format!("missing required flag {}", name)))
    }

    fn field(&self) -> Result<FieldSpec, Failure> {
        let p = self.require_u64("--p")?;
        let k = self.flag_u64("--k")?.unwrap_or(1) as usize;
        let bound = self
            .flag_u64("--max-order")?
            .unwrap_or(crate::field::DEFAULT_MAX_ORDER);
        FieldSpec::with_bound(p, k, bound).map_err(|e| Failure::usage(e.to_string()))
    }
}

const USAGE: &str = "usage: threenets <command> [flags]

commands:
  construct --family <pasch|n3|subgroup-cubic|parabola|hyperbola|circle|lines-mult|lines-add|projection> ...
  verify <net.json> [--json]
  theorem --check <thm1|converse|n4|n3|n2|waterhouse|redei> [<net.json>] [flags] [--json]
  search --p P [--k K] --n N [--budget B] [--jobs J] [--hyperoval] [-o file] [--json]
  latin <net.json> [--json]

common flags: --p --k (field), -o <file> (write machine JSON), --json (machine JSON to stdout),
  --seed S, --budget B, --jobs J, --max-order M";

/// Entry point used by the binary; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(()) => EXIT_PASS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if let Some(payload) = f.payload {
                println!("{}", payload);
            }
            f.code
        }
    }
}

fn dispatch(args: &[String]) -> Result<(), Failure> {
    let parsed = parse_args(args)?;
    match parsed.command.as_str() {
        "construct" => cmd_construct(&parsed),
        "verify" => cmd_verify(&parsed),
        "theorem" => cmd_theorem(&parsed),
        "search" => cmd_search(&parsed),
        "latin" => cmd_latin(&parsed),
        "help" | "--help" | "-h" => {
            println!("{}", USAGE);
            Ok(())
        }
        other => Err(Failure::usage(format!("unknown command {}\n{}", other, USAGE))),
    }
}

fn load_net(parsed: &Parsed) -> Result<DualThreeNet, Failure> {
    let path = parsed
        .positional
        .first()
        .ok_or_else(|| Failure::usage("expected a net file argument"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {}", path, e)))?;
    io::net_from_str(&text).map_err(|e| Failure::usage(format!("{}: {}", path, e)))
}

fn emit(parsed: &Parsed, human: String, machine: Value) -> Result<(), Failure> {
    if let Some(path) = parsed.flags.get("-o") {
        let text = serde_json::to_string_pretty(&machine).expect("serializable");
        std::fs::write(path, text.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write {}: {}", path, e)))?;
    }
    if parsed.json() {
        println!(
            "{}",
            serde_json::to_string_pretty(&machine).expect("serializable")
        );
    } else {
        println!("{}", human);
    }
    Ok(())
}

fn net_failure(err: crate::nets::NetError) -> Failure {
    Failure::precondition(err.to_string())
}

fn cmd_construct(parsed: &Parsed) -> Result<(), Failure> {
    let family = parsed
        .flags
        .get("--family")
        .ok_or_else(|| Failure::usage("construct needs --family"))?
        .clone();
    let net = match family.as_str() {
        "pasch" => {
            let spec = parsed.field()?;
            let roles = parsed.flag_u64("--roles")?.unwrap_or(0) as usize;
            pasch_net_with_roles(&spec, roles).map_err(net_failure)?
        }
        "n3" => {
            let spec = parsed.field()?;
            let a = spec.element_from_index(parsed.require_u64("--a")? % spec.order());
            let b = spec.element_from_index(parsed.require_u64("--b")? % spec.order());
            let c = spec.element_from_index(parsed.require_u64("--c")? % spec.order());
            n3_family(&spec, &a, &b, &c).map_err(net_failure)?
        }
        "parabola" | "hyperbola" | "circle" | "lines-mult" | "lines_mult" | "lines-add"
        | "lines_add" => {
            let spec = parsed.field()?;
            let kind = ConicLineKind::parse(&family)
                .ok_or_else(|| Failure::usage(format!("unknown family {}", family)))?;
            let params = ConicLineParams {
                subgroup_order: parsed.require_u64("--subgroup-order")? as usize,
                coset_a: parsed.flag_u64("--coset-a")?,
                coset_b: parsed.flag_u64("--coset-b")?,
            };
            construct_conic_line(&spec, kind, &params).map_err(net_failure)?
        }
        "projection" => {
            let r = parsed.require_u64("--r")?;
            let q = parsed.require_u64("--q")?;
            construct_projection(r, q).map_err(net_failure)?
        }
        "subgroup-cubic" | "subgroup_cubic" => {
            let spec = parsed.field()?;
            let n = parsed.require_u64("--subgroup-order")? as usize;
            let triple_index = parsed.flag_u64("--triple-index")?.unwrap_or(0) as usize;
            let (group, _) = find_cubic_group(&spec, n, parsed.flags.get("--cubic"))?;
            let triples = subgroup_and_cosets(&group, n)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            let triple = triples.get(triple_index).ok_or_else(|| {
                Failure::precondition(format!(
                    "triple index {} out of range ({} available)",
                    triple_index,
                    triples.len()
                ))
            })?;
            construct_subgroup_type(&group, triple).map_err(net_failure)?
        }
        other => return Err(Failure::usage(format!("unknown family {}", other))),
    };
    let reg = classify_regularity(&net);
    let human = format!(
        "constructed {} net of order {} over GF({}) — {}",
        net.provenance().family,
        net.order(),
        net.spec().order(),
        reg.kind
    );
    emit(parsed, human, io::net_to_json(&net))
}

/// Deterministic cubic-with-subgroup finder: either the explicit ten
/// comma-separated coefficient indices, or the first Weierstrass cubic in
/// sweep order with a flex identity whose group admits an order-n subgroup
/// of index above two.
fn find_cubic_group(
    spec: &FieldSpec,
    n: usize,
    explicit: Option<&String>,
) -> Result<(CubicGroup, Cubic), Failure> {
    if let Some(text) = explicit {
        let indices: Result<Vec<u64>, _> = text.split(',').map(|s| s.trim().parse::<u64>()).collect();
        let indices = indices.map_err(|_| Failure::usage("--cubic expects ten integers"))?;
        if indices.len() != 10 {
            return Err(Failure::usage("--cubic expects ten comma-separated coefficients"));
        }
        let coeffs = indices
            .iter()
            .map(|&i| spec.element_from_index(i % spec.order()))
            .collect();
        let cubic = Cubic::new(coeffs).map_err(|e| Failure::usage(e.to_string()))?;
        let o = flex_point(&cubic)
            .ok_or_else(|| Failure::precondition("cubic has no rational flex"))?;
        let group = CubicGroup::new(&cubic, &o).map_err(|e| Failure::precondition(e.to_string()))?;
        return Ok((group, cubic));
    }
    let q = spec.order();
    for idx in 0..q.pow(5) {
        let mut rest = idx;
        let mut a = [0u64; 5];
        for slot in a.iter_mut() {
            *slot = rest % q;
            rest /= q;
        }
        let avals = [
            spec.element_from_index(a[0]),
            spec.element_from_index(a[1]),
            spec.element_from_index(a[2]),
            spec.element_from_index(a[3]),
            spec.element_from_index(a[4]),
        ];
        if crate::theorems::weierstrass_discriminant(spec, &avals).is_zero() {
            continue;
        }
        let cubic = crate::theorems::weierstrass_cubic(spec, &avals);
        let o = ProjPoint::from_ints(spec, 0, 1, 0);
        let Ok(group) = CubicGroup::new(&cubic, &o) else { continue };
        if group.order() % n != 0 || group.order() / n <= 2 {
            continue;
        }
        if let Ok(triples) = subgroup_and_cosets(&group, n) {
            if !triples.is_empty() {
                return Ok((group, cubic));
            }
        }
    }
    Err(Failure::precondition(format!(
        "no Weierstrass cubic over GF({}) admits an order-{} subgroup of index above two",
        q, n
    )))
}

fn flex_point(cubic: &Cubic) -> Option<ProjPoint> {
    cubic
        .rational_points()
        .into_iter()
        .find(|p| match crate::curve_groups::third_intersection(cubic, p, p) {
            Ok(third) => &third == p,
            Err(_) => false,
        })
}

fn cmd_verify(parsed: &Parsed) -> Result<(), Failure> {
    let net = load_net(parsed)?;
    let report = verify_axioms(&net).map_err(|e| Failure::precondition(e.to_string()))?;
    let reg = classify_regularity(&net);
    let machine = json!({
        "order": net.order(),
        "field": io::field_spec_to_json(net.spec()),
        "pass": report.pass,
        "lines_checked": report.lines_checked,
        "violation": report.violation.as_ref().map(|v| v.to_string()),
        "regularity": reg.kind.to_string(),
        "collinear_components": reg.collinear,
    });
    if report.pass {
        let human = format!(
            "valid dual 3-net of order {} over GF({}): {} ({} lines checked)",
            net.order(),
            net.spec().order(),
            reg.kind,
            report.lines_checked
        );
        emit(parsed, human, machine)
    } else {
        let violation = report.violation.unwrap();
        emit(
            parsed,
            format!("INVALID net: {}", violation),
            machine,
        )?;
        Err(Failure {
            code: EXIT_VIOLATION,
            message: format!("net fails the axioms: {}", violation),
            payload: Some(io::net_to_string(&net)),
        })
    }
}

fn cmd_latin(parsed: &Parsed) -> Result<(), Failure> {
    let net = load_net(parsed)?;
    let ls = latin_square_of(&net).map_err(|e| Failure::precondition(e.to_string()))?;
    let rows: Vec<String> = ls
        .cells()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let machine = json!({
        "n": ls.n(),
        "cells": ls.cells(),
        "intercalates": ls.intercalate_count(),
        "order4_class": ls.order4_class().map(|c| format!("{:?}", c)),
    });
    emit(parsed, rows.join("\n"), machine)
}

fn cmd_search(parsed: &Parsed) -> Result<(), Failure> {
    let spec = parsed.field()?;
    let n = parsed.require_u64("--n")? as usize;
    let budget = parsed.flag_u64("--budget")?.unwrap_or(10_000_000);
    let jobs = parsed.flag_u64("--jobs")?.unwrap_or(1) as usize;
    let hyperoval = parsed.switches.iter().any(|s| s == "--hyperoval");
    let task = SearchTask {
        spec,
        n,
        constraints: SearchConstraints {
            collinear: [None, None, None],
            pairwise_unions_arcs: hyperoval,
        },
    };
    let outcome = enumerate_nets(&task, budget, jobs)
        .map_err(|e| Failure::usage(e.to_string()))?;

    let mut class_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut lines = Vec::new();
    for net in &outcome.nets {
        let reg = classify_regularity(net);
        *class_counts.entry(reg.kind.to_string()).or_insert(0) += 1;
        lines.push(serde_json::to_string(&io::net_to_json(net)).expect("serializable"));
    }
    let status = match outcome.status {
        SearchStatus::Complete { nodes } => json!({"complete": true, "nodes": nodes}),
        SearchStatus::BudgetExceeded { nodes } => json!({"complete": false, "nodes": nodes}),
    };
    let summary = json!({
        "nets": outcome.nets.len(),
        "by_regularity": class_counts,
        "status": status,
    });

    if let Some(path) = parsed.flags.get("-o") {
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        std::fs::write(path, body.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write {}: {}", path, e)))?;
    }
    if parsed.json() {
        for l in &lines {
            println!("{}", l);
        }
        println!("{}", serde_json::to_string(&summary).expect("serializable"));
    } else {
        let status_text = match outcome.status {
            SearchStatus::Complete { nodes } => format!("complete ({} nodes)", nodes),
            SearchStatus::BudgetExceeded { nodes } => {
                format!("BUDGET EXCEEDED after {} nodes — results are partial", nodes)
            }
        };
        println!(
            "search over GF({}) order {}: {} nets, {}",
            task.spec.order(),
            n,
            outcome.nets.len(),
            status_text
        );
        for (k, v) in &class_counts {
            println!("  {}: {}", k, v);
        }
    }
    Ok(())
}

fn cmd_theorem(parsed: &Parsed) -> Result<(), Failure> {
    let check = parsed
        .flags
        .get("--check")
        .ok_or_else(|| Failure::usage("theorem needs --check"))?
        .clone();
    match check.as_str() {
        "thm1" => {
            let net = load_net(parsed)?;
            let cert = check_theorem1(&net).map_err(Failure::from_theorem)?;
            let machine = json!({
                "n": cert.n,
                "char_condition_met": cert.char_condition_met,
                "conic": curve_json(cert.conic.coeffs()),
                "conic_contains_all": cert.conic_contains_all,
                "nullity": cert.nullity,
                "divisibility": divisibility_json(&cert.divisibility),
            });
            let human = format!(
                "conic found through all {} points of A ∪ B (nullity {}); divisibility certificate {}{}",
                2 * cert.n,
                cert.nullity,
                if cert.divisibility.pass { "passes" } else { "FAILS" },
                if cert.char_condition_met { "" } else { " [n > p: power sums skipped]" },
            );
            emit(parsed, human, machine)
        }
        "converse" => {
            let net = load_net(parsed)?;
            let report = check_converse(&net).map_err(Failure::from_theorem)?;
            let mech = match &report.mechanism {
                Mechanism::DihedralShortOrbit { fixed_points_rational } => json!({
                    "kind": "dihedral_short_orbit",
                    "fixed_points_rational": fixed_points_rational,
                }),
                Mechanism::InvariantTangent { fixed_point } => json!({
                    "kind": "invariant_tangent",
                    "fixed_point": io::point_to_json(fixed_point),
                }),
                Mechanism::ReducedToTheorem1 => json!({"kind": "reduced_to_theorem1"}),
                Mechanism::Unclassified => json!({"kind": "unclassified"}),
            };
            let machine = json!({
                "n": report.n,
                "conic_irreducible": report.conic_irreducible,
                "line": io::line_to_json(&report.line),
                "phi_order": report.phi_order,
                "psi_order": report.psi_order,
                "psi_transitive_on_a": report.psi_transitive_on_a,
                "psi_transitive_on_b": report.psi_transitive_on_b,
                "psi_regular": report.psi_regular,
                "psi_abelian": report.psi_abelian,
                "odd_coset_all_involutions": report.odd_coset_all_involutions,
                "class": report.class.to_string(),
                "mechanism": mech,
            });
            let human = format!(
                "C is collinear; Φ has order {} ({}), Ψ order {}{}",
                report.phi_order,
                report.class,
                report.psi_order,
                if report.psi_regular { ", regular and abelian" } else { "" },
            );
            emit(parsed, human, machine)
        }
        "n4" => {
            let net = load_net(parsed)?;
            let cert = check_n4(&net).map_err(Failure::from_theorem)?;
            let machine = json!({
                "case": format!("{:?}", cert.case),
                "case_a": cert.case.is_case_a(),
                "case_c": cert.case.is_case_c(),
                "kernel_nullity": cert.kernel_nullity,
                "cubic": curve_json(cert.cubic.coeffs()),
                "letters": cert.letters.as_ref().map(|l| {
                    l.iter().map(|e| json!(e.index())).collect::<Vec<_>>()
                }),
                "relations": cert.relations,
                "relations_verified": cert.relations_verified,
                "closed_form": cert.closed_form.as_ref().map(|cf| json!({
                    "x": cf.x.iter().map(|e| json!(e.index())).collect::<Vec<_>>(),
                    "in_kernel": cf.in_kernel,
                    "lambda": cf.lambda.as_ref().map(|l| l.index()),
                    "is_zero": cf.is_zero,
                })),
                "extra_condition_holds": cert.extra_condition_holds,
                "non_a_non_c": cert.non_a_non_c.as_ref().map(|x| json!({
                    "forced_negations": x.forced_negations,
                    "d_relation": x.d_relation,
                    "second_matrix_rank": x.second_matrix_rank,
                    "odd_characteristic": x.odd_characteristic,
                })),
            });
            let human = format!(
                "order-4 net lies on a cubic (nullity {}); case {:?}, relations {}",
                cert.kernel_nullity,
                cert.case,
                if cert.relations_verified { "verified" } else { "FAILED" },
            );
            emit(parsed, human, machine)
        }
        "n3" => {
            let spec = parsed.field()?;
            let a = spec.element_from_index(parsed.require_u64("--a")? % spec.order());
            let b = spec.element_from_index(parsed.require_u64("--b")? % spec.order());
            let c = spec.element_from_index(parsed.require_u64("--c")? % spec.order());
            let report = check_n3(&spec, &a, &b, &c).map_err(Failure::from_theorem)?;
            let machine = json!({
                "b_collinear": report.b_collinear,
                "b_condition": report.b_condition,
                "c_collinear": report.c_collinear,
                "c_condition": report.c_condition,
                "conic_nullity": report.conic_nullity,
                "irreducible_conic": report.irreducible_conic.as_ref().map(|x| curve_json(x.coeffs())),
                "cubic_nullity": report.cubic_nullity,
            });
            let human = format!(
                "B collinear: {} (condition {}); irreducible conic through A ∪ C: {}; cubic nullity {}",
                report.b_collinear,
                report.b_condition,
                report.irreducible_conic.is_some(),
                report.cubic_nullity
            );
            emit(parsed, human, machine)
        }
        "n2" => {
            let net = load_net(parsed)?;
            let report = check_n2(&net).map_err(Failure::from_theorem)?;
            let machine = json!({
                "pencil_verified": report.pencil_verified,
                "projectivity": (0..3).map(|i| {
                    report.projectivity.row(i).iter().map(io::element_to_json).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            emit(
                parsed,
                "projectively equivalent to the Pasch configuration; cubic pencil verified"
                    .to_string(),
                machine,
            )
        }
        "waterhouse" => {
            let spec = parsed.field()?;
            let seed = parsed.flag_u64("--seed")?.unwrap_or(0xC0FFEE);
            let samples = parsed.flag_u64("--samples")?.unwrap_or(20_000);
            let report =
                waterhouse_scan(&spec, seed, samples).map_err(Failure::from_theorem)?;
            let mut counts = Map::new();
            for (k, v) in &report.counts {
                counts.insert(k.to_string(), json!(v));
            }
            let machine = json!({
                "q": report.q,
                "bound": report.bound,
                "counts": Value::Object(counts),
                "admissible": report.admissible,
                "missing": report.missing,
                "scanned": report.scanned,
                "nonsingular": report.nonsingular,
                "sampled": report.sampled,
                "all_admissible_realized": report.all_admissible_realized(),
            });
            let human = format!(
                "scanned {} cubics over GF({}) ({} non-singular); counts within q+1±{}; admissible counts {}",
                report.scanned,
                report.q,
                report.nonsingular,
                report.bound,
                if report.all_admissible_realized() {
                    "all realized".to_string()
                } else {
                    format!("MISSING {:?}", report.missing)
                },
            );
            emit(parsed, human, machine)
        }
        "redei" => {
            let net = load_net(parsed)?;
            let report = divisibility_certificate(&net)
                .map_err(|e| Failure::precondition(e.to_string()))?;
            let machine = divisibility_json(&report);
            let human = format!(
                "Rédei divisibility certificate over {} directions: {}",
                report.directions.len(),
                if report.pass { "passes" } else { "FAILS" }
            );
            if report.pass {
                emit(parsed, human, machine)
            } else {
                emit(parsed, human, machine)?;
                Err(Failure {
                    code: EXIT_VIOLATION,
                    message: "divisibility certificate failed".into(),
                    payload: Some(io::net_to_string(&net)),
                })
            }
        }
        other => Err(Failure::usage(format!("unknown check {}", other))),
    }
}

fn curve_json(coeffs: &[crate::field::FieldElement]) -> Value {
    json!({
        "degree": if coeffs.len() == 6 { 2 } else { 3 },
        "coeffs": coeffs.iter().map(io::element_to_json).collect::<Vec<_>>(),
    })
}

fn divisibility_json(report: &crate::redei::DivisibilityReport) -> Value {
    json!({
        "n": report.n,
        "directions": report.directions.iter().map(io::element_to_json).collect::<Vec<_>>(),
        "remainders_zero": report.rows.iter().map(|r| r.remainder_zero).collect::<Vec<_>>(),
        "final_scalar": report.final_scalar.as_ref().map(io::element_to_json),
        "sigma_equal_below_n": report.sigma_equal_below_n,
        "power_sums": match &report.power_sums {
            PowerSumStatus::Verified { count } => json!({"verified": count}),
            PowerSumStatus::SkippedCharTooSmall { n, p } => {
                json!({"skipped_char_too_small": {"n": n, "p": p}})
            }
        },
        "pass": report.pass,
    })
}
