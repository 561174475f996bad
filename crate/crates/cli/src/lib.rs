//! Command implementations for the `cograph` binary. Each command returns
//! text lines, a JSON payload and the tally of postcondition checks it ran.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cograph::cograph::{ordered_classes, pair_at, parse_catalogue, serialize, Cograph};
use cograph::difference::{
    detect_diff_torsion_forcers, enumerate_difference_cographs, motif_census_of, pattern_of, realize_difference,
    DiffVerdict, MotifCensus,
};
use cograph::enumeration::{count_cographs_with, enumerate_cographs_with};
use cograph::group::{
    chain_extend, chain_pairs, default_coset_cap, parse_word, todd_coxeter, verify_chain_group_structure, FiniteGroup,
    Presentation, Strategy,
};
use cograph::intersection::{
    enumerate_intersection_cographs, find_forbidden, intersection_edges, represent_intersection, AtomSet,
};
use cograph::pl::{
    coordinatize, enumerate_pl, from_linear_space, is_pl, minimal_spaces, pl_sum, pl_violation, pl_wedge,
    to_linear_space, CoordLabel, Minimality, PlViolation,
};
use cograph::representations::{
    distance_prelabel_points, inner_product_represent, polynomial_represent, sum_prelabel_points,
};
use cograph::sum::{
    classify_sum, enumerate_sum_cographs, wheel_build, wheel_parameters, wheel_snf_torsion, AbelianGroup, SumOutcome,
    SumVerdict,
};
use cograph::{canonical_form, Exec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Default, Clone, Serialize)]
pub struct Checks {
    pub run: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Checks {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.run += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Default)]
pub struct Output {
    pub lines: Vec<String>,
    pub json: Value,
    pub checks: Checks,
}

#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub exec: Exec,
    pub verify: bool,
}

pub fn read_patterns(path: &Path) -> Result<Vec<Cograph>> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_catalogue(&text)?.into_iter().map(|(c, _)| c).collect())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn atoms(s: &AtomSet) -> String {
    format!("{{{}}}", join(&s.iter().copied().collect::<Vec<_>>()))
}

pub fn count(ctx: Ctx, n: usize) -> Result<Output> {
    let total = count_cographs_with(n, ctx.exec)?;
    let mut out = Output { lines: vec![total.to_string()], json: json!({ "points": n, "count": total.to_string() }), ..Default::default() };
    if ctx.verify && n <= 5 {
        let listed = enumerate_cographs_with(n, false, ctx.exec)?.len();
        out.checks.check(total == listed.into(), || format!("enumeration found {listed} classes"));
    }
    Ok(out)
}

pub fn enumerate(ctx: Ctx, n: usize, force: bool) -> Result<Output> {
    let keys = enumerate_cographs_with(n, force, ctx.exec)?;
    let mut out = Output::default();
    for key in &keys {
        let c = key.to_cograph();
        if ctx.verify {
            out.checks.check(&canonical_form(&c) == key, || format!("{} is not canonical", serialize(&c)));
        }
        out.lines.push(serialize(&c));
    }
    if ctx.verify {
        let total = count_cographs_with(n, ctx.exec)?;
        out.checks.check(total == keys.len().into(), || format!("count gives {total}, enumeration {}", keys.len()));
    }
    out.json = json!({ "points": n, "cographs": out.lines });
    Ok(out)
}

fn sum_line(c: &Cograph, v: &SumVerdict) -> String {
    let mut line = format!("{} outcome={:?}", serialize(c), v.outcome);
    if let Some(w) = &v.witness {
        line.push_str(&format!(" witness={}", w.display()));
    }
    if !v.torsion_relations.is_empty() {
        line.push_str(&format!(" torsion={}", join(&v.torsion_relations.iter().map(|r| r.order).collect::<Vec<_>>())));
    }
    if v.outcome == SumOutcome::ForcesExtraEdges {
        line.push_str(&format!(" forced_edges={}", v.forced_edge_equalities.len()));
    }
    line
}

fn check_sum(checks: &mut Checks, c: &Cograph, v: &SumVerdict) {
    match (&v.outcome, &v.witness) {
        (SumOutcome::TorsionFree | SumOutcome::RequiresTorsion, Some(w)) => {
            checks.check(w.realizes(c), || format!("witness {} does not realize {}", w.display(), serialize(c)));
            checks.check(w.group.is_torsion_free() == (v.outcome == SumOutcome::TorsionFree), || format!("witness group disagrees with outcome for {}", serialize(c)));
        }
        (SumOutcome::TorsionFree | SumOutcome::RequiresTorsion, None) => checks.check(false, || format!("no witness for {}", serialize(c))),
        (_, w) => checks.check(w.is_none(), || format!("witness given for unrealizable {}", serialize(c))),
    }
}

pub fn sum_classify(ctx: Ctx, path: &Path) -> Result<Output> {
    let mut out = Output::default();
    let mut verdicts = Vec::new();
    for c in read_patterns(path)? {
        let v = classify_sum(&c);
        if ctx.verify {
            check_sum(&mut out.checks, &c, &v);
        }
        out.lines.push(sum_line(&c, &v));
        verdicts.push(json!({ "pattern": serialize(&c), "verdict": v }));
    }
    out.json = json!({ "verdicts": verdicts });
    Ok(out)
}

pub fn sum_catalogue(ctx: Ctx, n: usize, force: bool) -> Result<Output> {
    let entries = enumerate_sum_cographs(n, force, ctx.exec)?;
    let mut out = Output::default();
    for e in &entries {
        if ctx.verify {
            check_sum(&mut out.checks, &e.pattern, &e.verdict);
        }
        out.lines.push(sum_line(&e.pattern, &e.verdict));
    }
    out.json = json!({ "points": n, "entries": entries.iter().map(|e| json!({ "pattern": serialize(&e.pattern), "verdict": e.verdict })).collect::<Vec<_>>() });
    Ok(out)
}

fn wheel_line(n: usize) -> Result<(String, Value)> {
    let r = wheel_build(n)?;
    let p = &r.params;
    let term = |v: &Vec<i128>| if v.len() == 1 { v[0].to_string() } else { format!("({})", join(v)) };
    let h = if p.h.1 == 1 { p.h.0.to_string() } else { format!("{}/{}", p.h.0, p.h.1) };
    let line = format!(
        "n={} d={} t={} h={} h_mod_t={} group={} a={} b={} terms={}",
        n,
        p.d,
        p.t,
        h,
        p.h_mod_t,
        r.group.name(),
        term(&r.a),
        term(&r.b),
        r.terms.iter().map(term).collect::<Vec<_>>().join(",")
    );
    Ok((line, serde_json::to_value(&r)?))
}

pub fn wheel(ctx: Ctx, n: usize) -> Result<Output> {
    let (line, json) = wheel_line(n)?;
    let mut out = Output { lines: vec![line], json, ..Default::default() };
    if ctx.verify {
        let (t, snf) = (wheel_parameters(n)?.t, wheel_snf_torsion(n)?);
        out.checks.check(t == snf, || format!("closed form t={t}, Smith normal form t={snf}"));
    }
    Ok(out)
}

fn census_field(m: &MotifCensus) -> String {
    format!("motifs=Q{},V{},T{}", m.q, m.v, m.t)
}

pub fn diff_catalogue(ctx: Ctx, n: usize, integer_bound: i128, max_modulus: i128) -> Result<Output> {
    let entries = enumerate_difference_cographs(n, integer_bound, max_modulus, ctx.exec)?;
    let mut out = Output::default();
    for e in &entries {
        if ctx.verify {
            out.checks.check(pattern_of(&e.witness) == e.pattern, || format!("witness {} does not regenerate {}", e.witness.display(), serialize(&e.pattern)));
            out.checks.check(e.census.qs.iter().all(|q| q.kind.is_some()), || format!("unclassified Q in {}", serialize(&e.pattern)));
        }
        out.lines.push(format!(
            "{} witness={} torsion_free={} {}",
            serialize(&e.pattern),
            e.witness.display(),
            e.torsion_free,
            census_field(&e.census)
        ));
    }
    out.json = json!({ "points": n, "entries": entries.iter().map(|e| json!({ "pattern": serialize(&e.pattern), "entry": e })).collect::<Vec<_>>() });
    Ok(out)
}

pub fn diff_classify(ctx: Ctx, path: &Path, max_modulus: i128) -> Result<Output> {
    let mut out = Output::default();
    let mut all = Vec::new();
    for c in read_patterns(path)? {
        let verdict = realize_difference(&c, max_modulus);
        let forcers = detect_diff_torsion_forcers(&c);
        let census = motif_census_of(&c);
        let (kind, witness) = match &verdict {
            DiffVerdict::TorsionFree(w) => ("torsion-free", Some(w)),
            DiffVerdict::Torsion(w) => ("torsion", Some(w)),
            DiffVerdict::NotRealizable => ("not-realizable", None),
        };
        if ctx.verify {
            if let Some(w) = witness {
                out.checks.check(pattern_of(w) == c, || format!("witness {} does not realize {}", w.display(), serialize(&c)));
            }
            if matches!(verdict, DiffVerdict::TorsionFree(_)) {
                out.checks.check(forcers.is_empty(), || format!("torsion forcer on torsion-free {}", serialize(&c)));
            }
        }
        let mut line = format!("{} verdict={kind}", serialize(&c));
        if let Some(w) = witness {
            line.push_str(&format!(" witness={}", w.display()));
        }
        line.push_str(&format!(" {} forcers={}", census_field(&census), forcers.len()));
        out.lines.push(line);
        all.push(json!({ "pattern": serialize(&c), "verdict": verdict, "census": census, "forcers": forcers }));
    }
    out.json = json!({ "verdicts": all });
    Ok(out)
}

fn check_isect(checks: &mut Checks, c: &Cograph, points: &[AtomSet]) {
    let edges = intersection_edges(points);
    let regenerated = Cograph::from_labels(c.n(), &edges);
    checks.check(regenerated.as_ref() == Ok(c), || format!("point sets do not regenerate {}", serialize(c)));
}

pub fn isect_check(ctx: Ctx, path: &Path, uie: bool) -> Result<Output> {
    let mut out = Output::default();
    let mut all = Vec::new();
    for c in read_patterns(path)? {
        match represent_intersection(&c) {
            Some(rep) => {
                if ctx.verify {
                    check_isect(&mut out.checks, &c, &rep.points);
                }
                let mut line = format!("{} representable=true", serialize(&c));
                if uie {
                    line.push_str(&format!(" points={}", rep.points.iter().map(atoms).collect::<Vec<_>>().join(",")));
                }
                out.lines.push(line);
                all.push(json!({ "pattern": serialize(&c), "representation": rep }));
            }
            None => {
                let findings = find_forbidden(&c);
                if ctx.verify {
                    out.checks.check(!findings.is_empty(), || format!("no forbidden configuration found in {}", serialize(&c)));
                }
                out.lines.push(format!("{} representable=false findings={}", serialize(&c), findings.len()));
                all.push(json!({ "pattern": serialize(&c), "findings": findings }));
            }
        }
    }
    out.json = json!({ "results": all });
    Ok(out)
}

pub fn isect_catalogue(ctx: Ctx, n: usize, force: bool) -> Result<Output> {
    let entries = enumerate_intersection_cographs(n, force, ctx.exec)?;
    let mut out = Output::default();
    for e in &entries {
        if ctx.verify {
            check_isect(&mut out.checks, &e.pattern, &e.representation.points);
        }
        out.lines.push(format!(
            "{} points={}",
            serialize(&e.pattern),
            e.representation.points.iter().map(atoms).collect::<Vec<_>>().join(",")
        ));
    }
    out.json = json!({ "points": n, "entries": entries.iter().map(|e| json!({ "pattern": serialize(&e.pattern), "representation": e.representation })).collect::<Vec<_>>() });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RepresentMode {
    /// Vectors with prescribed inner products.
    Ip,
    /// A symmetric integer polynomial.
    Poly,
    /// Points of an abelian group from edge sums.
    Sum,
    /// Points on the line from edge distances.
    Dist,
}

/// Values given per class in the order classes are written on the line,
/// rearranged by class label.
fn per_label<T: Clone>(c: &Cograph, values: &[T]) -> Result<Vec<T>> {
    let classes = ordered_classes(c);
    if values.len() != classes.len() {
        bail!("{} has {} classes, got {} values", serialize(c), classes.len(), values.len());
    }
    let mut out = vec![None; classes.len()];
    for (class, v) in classes.iter().zip(values) {
        let (i, j) = class[0];
        out[c.class_of(i, j)] = Some(v.clone());
    }
    Ok(out.into_iter().map(|v| v.expect("every label is hit")).collect())
}

fn parse_values<T: std::str::FromStr>(text: &str) -> Result<Vec<T>> {
    text.split(',').map(|s| s.trim().parse::<T>().map_err(|_| anyhow!("bad value {s:?}"))).collect()
}

pub fn represent(ctx: Ctx, path: &Path, mode: RepresentMode, values: Option<&str>, modulus: i128) -> Result<Output> {
    let mut out = Output::default();
    let mut all = Vec::new();
    for c in read_patterns(path)? {
        let k = c.num_classes();
        let pairs: Vec<(usize, usize)> = (0..c.num_pairs()).map(pair_at).collect();
        match mode {
            RepresentMode::Ip => {
                let vals: Vec<BigRational> = match values {
                    Some(v) => per_label(&c, &parse_values(v)?)?,
                    None => (1..=k).map(|x| BigRational::from_integer(x.into())).collect(),
                };
                let r = inner_product_represent(&c, &vals)?;
                if ctx.verify {
                    out.checks.check(r.verify(&c), || format!("inner products do not realize {}", serialize(&c)));
                }
                out.lines.push(format!("{} dimension={}", serialize(&c), r.dimension));
                for (p, v) in r.points.iter().enumerate() {
                    out.lines.push(format!("  P{p}=({})", join(v)));
                }
                all.push(serde_json::to_value(&r)?);
            }
            RepresentMode::Poly => {
                let vals: Vec<BigInt> = match values {
                    Some(v) => per_label(&c, &parse_values(v)?)?,
                    None => (1..=k).map(BigInt::from).collect(),
                };
                let r = polynomial_represent(&c, &vals)?;
                if ctx.verify {
                    for &(i, j) in &pairs {
                        let want = &r.scale * &vals[c.class_of(i, j)];
                        let got = r.polynomial.eval(i as i64 + 1, j as i64 + 1);
                        out.checks.check(got == want, || format!("f({},{}) = {got}, expected {want}", i + 1, j + 1));
                    }
                    out.checks.check(r.polynomial.is_symmetric(), || "polynomial is not symmetric".into());
                }
                out.lines.push(format!("{} degree={} scale={} terms={}", serialize(&c), r.polynomial.degree(), r.scale, r.polynomial.terms().len()));
                all.push(serde_json::to_value(&r)?);
            }
            RepresentMode::Sum => {
                let v = values.ok_or_else(|| anyhow!("--values is required for sum mode"))?;
                let class_values: Vec<i128> = per_label(&c, &parse_values(v)?)?;
                let group = if modulus == 0 { AbelianGroup::integers() } else { AbelianGroup::cyclic(modulus) };
                let edges: Vec<Vec<i128>> = pairs.iter().map(|&(i, j)| vec![class_values[c.class_of(i, j)]]).collect();
                let w = sum_prelabel_points(&group, &edges, c.n())?;
                if ctx.verify {
                    out.checks.check(w.realizes(&c), || format!("{} does not realize {}", w.display(), serialize(&c)));
                }
                out.lines.push(format!("{} points={}", serialize(&c), w.display()));
                all.push(serde_json::to_value(&w)?);
            }
            RepresentMode::Dist => {
                let v = values.ok_or_else(|| anyhow!("--values is required for dist mode"))?;
                let class_values: Vec<BigRational> = per_label(&c, &parse_values(v)?)?;
                let edges: Vec<BigRational> = pairs.iter().map(|&(i, j)| class_values[c.class_of(i, j)].clone()).collect();
                let xs = distance_prelabel_points(&edges, c.n())?;
                if ctx.verify {
                    for (k, &(i, j)) in pairs.iter().enumerate() {
                        out.checks.check((&xs[i] - &xs[j]).abs() == edges[k], || format!("distance ({i},{j}) disagrees"));
                    }
                }
                out.lines.push(format!("{} points={}", serialize(&c), join(&xs)));
                all.push(json!(xs.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
            }
        }
    }
    out.json = json!({ "mode": format!("{mode:?}").to_lowercase(), "results": all });
    Ok(out)
}

fn check_round_trip(checks: &mut Checks, c: &Cograph) {
    let back = to_linear_space(c).and_then(|s| from_linear_space(&s));
    checks.check(back.as_ref() == Ok(c), || format!("linear space round trip changes {}", serialize(c)));
}

pub fn pl_validate(ctx: Ctx, path: &Path) -> Result<Output> {
    let mut out = Output::default();
    let mut all = Vec::new();
    for c in read_patterns(path)? {
        match pl_violation(&c) {
            None => {
                if ctx.verify {
                    check_round_trip(&mut out.checks, &c);
                }
                let s = to_linear_space(&c)?;
                out.lines.push(format!("{} pl=true space={s}", serialize(&c)));
                all.push(json!({ "pattern": serialize(&c), "space": s }));
            }
            Some(v) => {
                let text = match v {
                    PlViolation::Rule1 { p, q, r } => format!("triangle:{p},{q},{r}"),
                    PlViolation::Rule2 { p, q, r, s } => format!("quadrilateral:{p},{q},{r},{s}"),
                };
                out.lines.push(format!("{} pl=false violation={text}", serialize(&c)));
                all.push(json!({ "pattern": serialize(&c), "violation": v }));
            }
        }
    }
    out.json = json!({ "results": all });
    Ok(out)
}

pub fn pl_catalogue(ctx: Ctx, n: usize, force: bool) -> Result<Output> {
    let entries = enumerate_pl(n, force, ctx.exec)?;
    let mut out = Output::default();
    for e in &entries {
        if ctx.verify {
            check_round_trip(&mut out.checks, &e.pattern);
        }
        out.lines.push(format!("{} space={}", serialize(&e.pattern), e.space));
    }
    out.json = json!({ "points": n, "entries": entries.iter().map(|e| json!({ "pattern": serialize(&e.pattern), "space": e.space })).collect::<Vec<_>>() });
    Ok(out)
}

pub fn pl_minimal(ctx: Ctx, n: usize, reading: Minimality, force: bool) -> Result<Output> {
    let entries = minimal_spaces(n, reading, force, ctx.exec)?;
    Ok(Output {
        lines: entries.iter().map(|e| format!("{} space={}", serialize(&e.pattern), e.space)).collect(),
        json: json!({ "points": n, "reading": reading, "spaces": entries.iter().map(|e| e.space.to_string()).collect::<Vec<_>>() }),
        ..Output::default()
    })
}

pub fn pl_coordinatize(ctx: Ctx, path: &Path, x: usize, y: usize, origin: Option<usize>) -> Result<Output> {
    let mut out = Output::default();
    let mut all = Vec::new();
    for c in read_patterns(path)? {
        let coords = coordinatize(&c, x, y, origin)?;
        let labels: Vec<String> = coords
            .labels
            .iter()
            .enumerate()
            .map(|(p, l)| match l {
                Some(CoordLabel::Pair(a, b)) => format!("{p}:({a},{b})"),
                Some(CoordLabel::Single(a)) => format!("{p}:{a}"),
                None => format!("{p}:-"),
            })
            .collect();
        if ctx.verify {
            out.checks.check(coords.labels.iter().filter(|l| l.is_none()).count() <= 1, || "more than one point left unlabelled".into());
        }
        out.lines.push(format!("{} origin={} labels={}", serialize(&c), coords.origin, labels.join(";")));
        all.push(serde_json::to_value(&coords)?);
    }
    out.json = json!({ "results": all });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ComposeOp {
    Sum,
    Wedge,
}

pub fn pl_compose(ctx: Ctx, path: &Path, op: ComposeOp) -> Result<Output> {
    let pats = read_patterns(path)?;
    let [a, b] = pats.as_slice() else { bail!("compose expects exactly two patterns, got {}", pats.len()) };
    let c = match op {
        ComposeOp::Sum => pl_sum(a, b),
        ComposeOp::Wedge => pl_wedge(a, b)?,
    };
    let mut out = Output::default();
    if ctx.verify {
        out.checks.check(is_pl(&c), || "composition is not PL".into());
    }
    let space = to_linear_space(&c)?;
    out.lines.push(format!("{} space={space}", serialize(&c)));
    out.json = json!({ "pattern": serialize(&c), "space": space });
    Ok(out)
}

pub struct TcArgs {
    pub params: Option<(u64, u64, u64)>,
    pub relators: Vec<String>,
    pub subgroup: Vec<String>,
    pub strategy: Strategy,
    pub table: bool,
}

pub fn tc(ctx: Ctx, args: &TcArgs) -> Result<Output> {
    let cap = default_coset_cap();
    let pres = match (args.params, args.relators.is_empty()) {
        (Some((p, q, n)), true) => Presentation::chain_group(p, q, n)?,
        (None, false) => Presentation::from_words(&args.relators.iter().map(String::as_str).collect::<Vec<_>>())?,
        _ => bail!("give either --p, --q and --n or at least one --relator"),
    };
    let subgroup: Vec<Vec<usize>> = if args.subgroup.is_empty() {
        vec![parse_word("P")?]
    } else {
        args.subgroup.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?
    };
    let over = todd_coxeter(&pres, &subgroup, args.strategy, cap)?;
    let full = todd_coxeter(&pres, &[], args.strategy, cap)?;
    let mut out = Output::default();
    out.lines.push(format!("index={} order={}", over.index(), full.index()));
    if args.table {
        out.lines.extend(over.render().lines().map(str::to_string));
    }
    let mut payload = json!({ "relators": pres.words(), "index": over.index(), "order": full.index() });
    if ctx.verify {
        out.checks.check(over.relators_hold(&pres) && full.relators_hold(&pres), || "a relator moves a coset".into());
        out.checks.check(full.index() % over.index() == 0, || "index does not divide the order".into());
        if let (Some((p, q, n)), true) = (pres.params, args.subgroup.is_empty()) {
            let report = verify_chain_group_structure(p, q, n, args.strategy, cap)?;
            out.checks.check(report.consistent(), || format!("chain group structure fails: {report:?}"));
            payload["structure"] = serde_json::to_value(&report)?;
        }
    }
    if args.table {
        payload["table"] = serde_json::to_value(&over.table)?;
    }
    out.json = payload;
    Ok(out)
}

pub fn chains(ctx: Ctx, name: &str) -> Result<Output> {
    let g = FiniteGroup::by_name(name)?;
    let pairs = chain_pairs(&g);
    let mut out = Output::default();
    for c in &pairs {
        if ctx.verify {
            let k = 2 * g.order();
            let ok = std::panic::catch_unwind(|| chain_extend(&g, c.p, c.q, k)).map(|r| r.is_ok()).unwrap_or(false);
            out.checks.check(ok, || format!("chain from ({}, {}) fails", g.names[c.p], g.names[c.q]));
        }
        let cycle = c.cycle_length.map_or("none".to_string(), |k| k.to_string());
        out.lines.push(format!("P={} Q={} cycle={cycle}", g.names[c.p], g.names[c.q]));
    }
    out.json = json!({
        "group": g.name,
        "order": g.order(),
        "pairs": pairs.iter().map(|c| json!({ "p": g.names[c.p], "q": g.names[c.q], "cycle_length": c.cycle_length })).collect::<Vec<_>>(),
    });
    Ok(out)
}

/// Catalogue files written by `regen`, in manifest order.
pub const REGEN_FILES: [&str; 7] =
    ["counts.txt", "sum-6.txt", "diff-5.txt", "isect-4.txt", "pl.txt", "wheels.txt", "chain-groups.txt"];
pub const MANIFEST: &str = "MANIFEST.sha256";

fn text(lines: &[String]) -> String {
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

/// Builds every catalogue file in memory.
pub fn regen_contents(exec: Exec) -> Result<Vec<(String, String)>> {
    let ctx = Ctx { exec, verify: false };
    let mut files = Vec::new();

    let counts: Vec<String> = (2..=9).map(|n| Ok(format!("n={n} count={}", count_cographs_with(n, exec)?))).collect::<Result<_>>()?;
    files.push(text(&counts));
    files.push(text(&sum_catalogue(ctx, 6, false)?.lines));
    files.push(text(&diff_catalogue(ctx, 5, cograph::difference::DEFAULT_INTEGER_BOUND, cograph::difference::DEFAULT_MAX_MODULUS)?.lines));
    files.push(text(&isect_catalogue(ctx, 4, false)?.lines));

    let mut pl = Vec::new();
    for n in 1..=7 {
        let minimal = if n < 2 { 0 } else { minimal_spaces(n, Minimality::NotAnExpansion, false, exec)?.len() };
        if n < 2 {
            pl.push(format!("# n=1 count=1 minimal={minimal}"));
            continue;
        }
        let entries = pl_catalogue(ctx, n, false)?.lines;
        pl.push(format!("# n={n} count={} minimal={minimal}", entries.len()));
        pl.extend(entries);
    }
    files.push(text(&pl));

    let wheels: Vec<String> = (3..=23).map(|n| wheel_line(n).map(|(l, _)| l)).collect::<Result<_>>()?;
    files.push(text(&wheels));

    let grid: Vec<(u64, u64, u64)> =
        [2u64, 4, 6, 8].iter().flat_map(|&p| [2u64, 4, 6, 8].into_iter().flat_map(move |q| (2u64..=8).map(move |n| (p, q, n)))).collect();
    let cap = default_coset_cap();
    let rows = exec.map(grid, |(p, q, n)| {
        verify_chain_group_structure(p, q, n, Strategy::RelatorScan, cap).map(|r| {
            let formula = r.formula.map_or("excluded".to_string(), |f| f.order.to_string());
            format!(
                "p={p} q={q} n={n} index={} order={} formula={formula} s={} quotient={} consistent={}",
                r.index, r.order, r.s_order, r.quotient_order, r.consistent()
            )
        })
    });
    files.push(text(&rows.into_iter().collect::<Result<Vec<_>, _>>()?));

    Ok(REGEN_FILES.iter().map(|s| s.to_string()).zip(files).collect())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn regen(ctx: Ctx, dir: &Path) -> Result<Output> {
    let files = regen_contents(ctx.exec)?;
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut manifest = String::new();
    let mut out = Output::default();
    for (name, contents) in &files {
        fs::write(dir.join(name), contents).with_context(|| format!("writing {name}"))?;
        let digest = sha256_hex(contents.as_bytes());
        manifest.push_str(&format!("{digest}  {name}\n"));
        out.lines.push(format!("{name} lines={} sha256={digest}", contents.lines().count()));
    }
    fs::write(dir.join(MANIFEST), &manifest).context("writing manifest")?;
    if ctx.verify {
        let other = if ctx.exec == Exec::Parallel { Exec::Sequential } else { Exec::Parallel };
        let again = regen_contents(other)?;
        for ((name, a), (_, b)) in files.iter().zip(&again) {
            out.checks.check(a == b, || format!("{name} differs between execution modes"));
        }
        let wheels = &files.iter().find(|(n, _)| n == "wheels.txt").expect("wheels file").1;
        out.checks.check(wheels.lines().any(|l| l.starts_with("n=7 ") && l.contains(" t=29 ")), || "wheel n=7 lacks t=29".into());
    }
    out.json = json!({ "dir": dir.display().to_string(), "files": files.iter().map(|(n, c)| json!({ "name": n, "sha256": sha256_hex(c.as_bytes()) })).collect::<Vec<_>>() });
    Ok(out)
}
