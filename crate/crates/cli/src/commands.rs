use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use pivotlab_core::algnum::{enumerate_a_cached, AlgebraicNumber, CACHE_ENV};
use pivotlab_core::construct::{
    contradiction_check, nu_plus_from_widths, run_construction, BoundModel, ConstructionTranscript, WidthSchedule,
};
use pivotlab_core::farey::{pivot_sequence, Triangle, WIDTH_CF_OFFSET};
use pivotlab_core::num::rat::parse_rational;
use pivotlab_core::tracecalc::trace_polynomial_with_path;
use pivotlab_core::{ContinuedFraction, Endpoint, Slope, FORMAT_VERSION};
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::suites;

/// Exit status of a command that ran to completion.
pub const OK: i32 = 0;
pub const VERIFY_FAILED: i32 = 1;
pub const BUDGET: i32 = 3;

pub struct Output {
    pub doc: Value,
    pub code: i32,
    /// Extra files: path and contents.
    pub files: Vec<(PathBuf, Value)>,
}

fn done(doc: Value) -> Output {
    Output { doc, code: OK, files: Vec::new() }
}

/// Prepends the format tag, command and config hash.
pub fn stamp(cfg: &RunConfig, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("format".into(), json!(FORMAT_VERSION));
    m.insert("command".into(), json!(cfg.command));
    m.insert("config_hash".into(), json!(cfg.hash()));
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    match cfg.command.as_str() {
        "pivots" => pivots(cfg),
        "trace-poly" => trace_poly(cfg),
        "algset" => algset(cfg),
        "construct" => construct(cfg),
        "approx" => approx(cfg),
        "check" => check(cfg),
        "verify" => verify(cfg),
        other => bail!("unknown command {other:?}"),
    }
}

fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))
}

fn cache_dir(cfg: &RunConfig) -> Option<PathBuf> {
    cfg.get("cache").map(PathBuf::from).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|w| w.to_string()).collect()
}

fn parse_base(s: &str) -> Result<Triangle> {
    let v: Vec<Slope> = s.split(',').map(str::parse).collect::<pivotlab_core::Result<_>>()?;
    let [a, b, c]: [Slope; 3] = v.try_into().map_err(|_| anyhow!("base needs three slopes"))?;
    Ok(Triangle::new(a, b, c)?)
}

fn pivots(cfg: &RunConfig) -> Result<Output> {
    let am: Endpoint = cfg.require("alpha-minus")?.parse()?;
    let ap: ContinuedFraction = cfg.require("alpha-plus")?.parse()?;
    let depth: usize = cfg.parse_num("depth")?;
    let limit: usize = cfg.parse_num("non-pivots")?;
    let seq = pivot_sequence(&am, &ap, depth)?;
    let mut body = seq.to_json(limit);
    body["widths"] = json!(strings(&seq.widths()));
    body["cf_offset"] = json!(WIDTH_CF_OFFSET);
    Ok(done(stamp(cfg, body)))
}

fn trace_poly(cfg: &RunConfig) -> Result<Output> {
    let target: Slope = cfg.require("target")?.parse()?;
    let base = parse_base(cfg.require("base")?)?;
    let budget: usize = cfg.parse_num("monomial-budget")?;
    let (p, path) = trace_polynomial_with_path(&target, &base, budget)?;
    Ok(done(stamp(
        cfg,
        json!({
            "target": target.to_string(),
            "base": base.to_json(),
            "poly": p.to_string(),
            "terms": p.to_json(),
            "length": p.length()?.to_string(),
            "total_degree": p.total_degree(),
            "flip_path": path.to_string(),
        }),
    )))
}

fn algset(cfg: &RunConfig) -> Result<Output> {
    let i: usize = cfg.parse_num("index")?;
    let max: usize = cfg.parse_num("max-index")?;
    let set = enumerate_a_cached(i, cache_dir(cfg).as_deref(), max)?;
    let mut body = set.to_json();
    body["size"] = json!(set.len());
    Ok(done(stamp(cfg, body)))
}

fn schedule(cfg: &RunConfig) -> Result<WidthSchedule> {
    let stages: usize = cfg.parse_num("max-stage")?;
    let mut s = WidthSchedule::standard(stages);
    s.indices = match cfg.require("indices")? {
        "linear" => (1..=stages).collect(),
        list => list
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| anyhow!("--indices: bad entry {x:?}")))
            .collect::<Result<_>>()?,
    };
    s.filler = cfg.parse_num("filler")?;
    s.model = BoundModel::new(parse_rational(cfg.require("bound-constant")?)?)?;
    s.tail = cfg.parse_num("tail")?;
    s.max_index = cfg.parse_num("max-index")?;
    s.monomial_budget = cfg.parse_num("monomial-budget")?;
    s.cache_dir = cache_dir(cfg);
    Ok(s)
}

pub fn width_file(cfg: &RunConfig, t: &ConstructionTranscript) -> Value {
    stamp(
        cfg,
        json!({
            "schedule_hash": t.schedule.config_hash(),
            "base": t.schedule.base.to_json(),
            "widths": strings(&t.widths),
            "complete": t.aborted.is_none(),
        }),
    )
}

fn construct(cfg: &RunConfig) -> Result<Output> {
    let t = run_construction(&schedule(cfg)?)?;
    let mut doc = t.to_json();
    doc["command"] = json!(cfg.command);
    doc["run_config_hash"] = json!(cfg.hash());
    let mut files = Vec::new();
    if let Some(p) = cfg.get("widths-out") {
        files.push((PathBuf::from(p), width_file(cfg, &t)));
    }
    let code = if t.aborted.is_some() { BUDGET } else { OK };
    Ok(Output { doc, code, files })
}

fn approx(cfg: &RunConfig) -> Result<Output> {
    let w = read_json(cfg.require("widths")?)?;
    let base = Triangle::from_json(&w["base"])?;
    let widths: Vec<BigInt> = w["widths"]
        .as_array()
        .ok_or_else(|| anyhow!("width file has no widths"))?
        .iter()
        .map(|v| v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| anyhow!("bad width {v}")))
        .collect::<Result<_>>()?;
    let n_terms: usize = cfg.parse_num("terms")?;
    let n_conv: usize = cfg.parse_num("convergents")?;
    let Some((cf, arc)) = nu_plus_from_widths(&base, &widths)? else {
        bail!("width file lists no widths");
    };
    let convergents = cf.convergents(n_conv)?;
    Ok(done(stamp(
        cfg,
        json!({
            "widths_config_hash": w["config_hash"],
            "widths": strings(&widths),
            "nu_plus": cf.to_json(),
            "terms": strings(&cf.terms(n_terms)?),
            "convergents": convergents.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "enclosure": [arc.0.to_string(), arc.1.to_string()],
        }),
    )))
}

fn check(cfg: &RunConfig) -> Result<Output> {
    let t = ConstructionTranscript::from_json(&read_json(cfg.require("transcript")?)?)?;
    let parts: Vec<AlgebraicNumber> =
        cfg.require("triple")?.split(';').map(|s| AlgebraicNumber::parse(s.trim())).collect::<pivotlab_core::Result<_>>()?;
    let [x, y, z]: [AlgebraicNumber; 3] = parts.try_into().map_err(|_| anyhow!("--triple needs three numbers"))?;
    let r = contradiction_check(&t, [&x, &y, &z])?;
    let code = if r.gap_at_least_m && r.bound_below_m { OK } else { VERIFY_FAILED };
    let mut body = r.to_json();
    body["triple"] = json!([x.to_string(), y.to_string(), z.to_string()]);
    Ok(Output { doc: stamp(cfg, body), code, files: Vec::new() })
}

fn verify(cfg: &RunConfig) -> Result<Output> {
    let defect = match cfg.require("inject-defect")? {
        "none" => false,
        "flip" => true,
        other => bail!("--inject-defect: expected none or flip, got {other:?}"),
    };
    let transcript = match cfg.get("transcript") {
        Some(p) => Some(ConstructionTranscript::from_json(&read_json(p)?)?),
        None => None,
    };
    let settings = suites::Settings {
        samples: cfg.parse_num("samples")?,
        flips: cfg.parse_num("flips")?,
        seed: cfg.parse_num("seed")?,
        defect,
        transcript,
    };
    let results = suites::run_all(&settings);
    let pass = results.iter().all(|r| r.pass());
    let doc = stamp(
        cfg,
        json!({
            "pass": pass,
            "suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        }),
    );
    Ok(Output { doc, code: if pass { OK } else { VERIFY_FAILED }, files: Vec::new() })
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
