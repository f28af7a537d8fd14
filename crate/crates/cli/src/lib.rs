//! Subcommand implementations behind the `orthoscalar` binary.
//!
//! Every `cmd_*` function returns a [`CommandResult`]: a status, a JSON
//! payload with a fixed shape per subcommand, and diagnostics. Errors carry
//! the process exit code (2 for bad input, 1 for internal or numerical
//! failure).

use std::fs;
use std::path::Path;
use std::sync::Arc;

use orthoscalar::catalog::{catalog, CatalogName, Parity, Quiver};
use orthoscalar::families::{
    self, dependent_parameter_names, random_parameter_point, FamilyError, ParameterPoint,
};
use orthoscalar::functors::{apply_sequence, construct_real_root_rep_retrying, FunctorError};
use orthoscalar::io::{self, IoError};
use orthoscalar::morphism::{is_schur, split_decomposition, unitary_equivalent};
use orthoscalar::rep::{orthoscalarity_report, Character, Representation, OFF_SUPPORT_CHARACTER};
use orthoscalar::roots::{
    classify_vector, default_bound, enumerate_positive_roots, faithful_reduction_path,
    singular_reduction_path, GVector, ReflectionPath, RootClass, RootError, RootTag, Step,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

/// Equivalence tolerance used by `functor --check-inverse` and `decompose`.
pub const EQUIVALENCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    pub exit_code: i32,
}

impl CommandResult {
    pub fn ok(payload: Value) -> CommandResult {
        CommandResult { status: Status::Ok, payload, diagnostics: Vec::new(), exit_code: 0 }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": match self.status { Status::Ok => "ok", Status::Error => "error" },
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }

    pub fn into_result(self) -> CommandResult {
        CommandResult {
            status: Status::Error,
            payload: Value::Null,
            exit_code: self.exit_code(),
            diagnostics: vec![self.to_string()],
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        input(e)
    }
}

fn root_error(e: RootError) -> CliError {
    match e {
        RootError::NoPathFound(_) => internal(e),
        _ => input(e),
    }
}

fn functor_error(e: FunctorError) -> CliError {
    match e {
        FunctorError::Rep(_) | FunctorError::NotOrthoscalar { .. } => internal(e),
        FunctorError::AtStep { ref source, .. } if matches!(**source, FunctorError::Rep(_)) => internal(e),
        _ => input(e),
    }
}

/// Runs a command body, turning its error into an error result.
pub fn finish(r: Result<CommandResult, CliError>) -> CommandResult {
    r.unwrap_or_else(CliError::into_result)
}

pub fn load_graph(name: &str) -> Result<Quiver, CliError> {
    Ok(catalog(name).map_err(input)?.quiver)
}

/// Comma-separated integers in catalog vertex order.
pub fn parse_vector(q: &Quiver, text: &str) -> Result<GVector, CliError> {
    let entries: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| input(format!("bad vector entry {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    if entries.len() != q.vertex_count() {
        return Err(input(format!(
            "vector has {} entries, {} has {} vertices",
            entries.len(),
            q.name(),
            q.vertex_count()
        )));
    }
    Ok(GVector(entries))
}

/// `delta`, `k*delta` / `kdelta`, a single integer (uniform box) or an
/// explicit vector.
pub fn parse_bound(q: &Quiver, text: &str) -> Result<GVector, CliError> {
    let t = text.trim();
    if let Some(k) = t.strip_suffix("delta") {
        let delta = q.delta().ok_or_else(|| input(format!("{} has no delta", q.name())))?;
        let k = k.trim_end_matches('*');
        let k: i64 = if k.is_empty() { 1 } else { k.parse().map_err(|e| input(format!("bad multiple: {e}")))? };
        return Ok(GVector(delta.to_vec()).scaled(k));
    }
    if !t.contains(',') {
        let m: i64 = t.parse().map_err(|e| input(format!("bad bound {t:?}: {e}")))?;
        return Ok(GVector(vec![m; q.vertex_count()]));
    }
    parse_vector(q, t)
}

fn root_row(x: &GVector, class: &RootClass) -> Value {
    json!({
        "vector": x.entries(),
        "q": class.q_value,
        "L": class.l_value,
        "class": class.tag.as_str(),
    })
}

/// `roots`: classification of one vector, or enumeration up to a bound.
pub fn cmd_roots(graph: &str, bound: Option<&str>, classify: Option<&str>) -> Result<CommandResult, CliError> {
    let q = load_graph(graph)?;
    if let Some(text) = classify {
        let x = parse_vector(&q, text)?;
        let class = classify_vector(&q, &x).map_err(root_error)?;
        let mut row = root_row(&x, &class);
        row["graph"] = json!(q.name());
        return Ok(CommandResult::ok(row));
    }
    let b = match bound {
        Some(text) => parse_bound(&q, text)?,
        None => default_bound(&q),
    };
    let roots = enumerate_positive_roots(&q, &b).map_err(root_error)?;
    let rows: Vec<Value> = roots.iter().map(|(x, c)| root_row(x, c)).collect();
    Ok(CommandResult::ok(json!({
        "graph": q.name(),
        "vertices": q.ids(),
        "bound": b.entries(),
        "count": rows.len(),
        "rows": rows,
    })))
}

/// `graphs`: the catalog families with their vertex lists.
pub fn cmd_graphs(name: Option<&str>) -> Result<CommandResult, CliError> {
    let names: Vec<String> = match name {
        Some(n) => vec![n.to_string()],
        None => ["A3", "D4", "E6", "E7", "E8", "A~4", "D~4", "E6~", "E7~", "E8~"]
            .into_iter()
            .map(String::from)
            .collect(),
    };
    let mut rows = Vec::new();
    for n in names {
        let q = load_graph(&n)?;
        let odd: Vec<&str> = q.vertices_of(Parity::Odd).into_iter().map(|v| q.id(v)).collect();
        let even: Vec<&str> = q.vertices_of(Parity::Even).into_iter().map(|v| q.id(v)).collect();
        rows.push(json!({
            "name": q.name(),
            "vertices": q.ids(),
            "odd": odd,
            "even": even,
            "arrows": q.arrows().iter().map(|a| format!("{}->{}", q.id(a.tail), q.id(a.head))).collect::<Vec<_>>(),
            "delta": q.delta(),
        }));
    }
    Ok(CommandResult::ok(json!({ "rows": rows })))
}

fn step_label(q: &Quiver, s: &Step) -> String {
    match s {
        Step::Sweep(p) => p.as_str().to_string(),
        Step::Reflect(k) => format!("reflect:{}", q.id(*k)),
    }
}

fn path_payload(q: &Quiver, d: &GVector, class: &RootClass, path: &ReflectionPath) -> Value {
    json!({
        "graph": q.name(),
        "vector": d.entries(),
        "class": class.tag.as_str(),
        "path": path.steps.iter().map(|s| step_label(q, s)).collect::<Vec<_>>(),
        "terminal": path.terminal.entries(),
        "replay_ok": path.replay(q) == *d,
    })
}

/// `reduce`: the reflection path of a real root down to a simple root
/// (singular roots) or a non-faithful root (faithful regular roots).
pub fn cmd_reduce(graph: &str, vector: &str) -> Result<CommandResult, CliError> {
    let q = load_graph(graph)?;
    let d = parse_vector(&q, vector)?;
    let class = classify_vector(&q, &d).map_err(root_error)?;
    let path = match class.tag {
        RootTag::RealSingular => singular_reduction_path(&q, &d),
        RootTag::RealRegular => faithful_reduction_path(&q, &d),
        RootTag::Imaginary | RootTag::NotRoot => {
            return Err(input(format!("{d} is {} on {}; only real roots reduce", class.tag, q.name())))
        }
    }
    .map_err(root_error)?;
    Ok(CommandResult::ok(path_payload(&q, &d, &class, &path)))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

pub fn load_representation(path: &Path) -> Result<(Representation, Option<Character>), CliError> {
    Ok(io::representation_from_json(&read_text(path)?)?)
}

fn character_map(q: &Quiver, ch: &Character) -> Value {
    let mut m = Map::new();
    for v in 0..q.vertex_count() {
        m.insert(q.id(v).to_string(), json!(ch.values[v]));
    }
    Value::Object(m)
}

fn dims_map(t: &Representation) -> Value {
    let q = t.quiver();
    let mut m = Map::new();
    for v in 0..q.vertex_count() {
        m.insert(q.id(v).to_string(), json!(t.dims()[v]));
    }
    Value::Object(m)
}

/// Report of a representation: dims, character, defect and Schur flag.
fn summary(t: &Representation, tol: f64) -> Result<Value, CliError> {
    let report = orthoscalarity_report(t);
    let scale = t.scale().max(1.0);
    let schur = if t.is_zero() { false } else { is_schur(t, tol).map_err(internal)? };
    Ok(json!({
        "graph": t.quiver().name(),
        "dims": dims_map(t),
        "character": character_map(t.quiver(), &report.character),
        "defect": report.defect,
        "orthoscalar": report.defect <= tol * scale * scale,
        "schur": schur,
    }))
}

/// Parameters from a `{"family", "params"}` document, or the shorthand
/// `{"moduli": [...], "phase": φ}` for cycles. Missing dependent parameters
/// are solved for.
pub fn parse_params(family: CatalogName, text: &str) -> Result<ParameterPoint, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| input(format!("bad params JSON: {e}")))?;
    let mut point = ParameterPoint::new(family);
    if let Some(moduli) = value.get("moduli") {
        let list = moduli.as_array().ok_or_else(|| input("\"moduli\" must be an array"))?;
        for (k, m) in list.iter().enumerate() {
            point.set(&format!("m{}", k + 1), m.as_f64().ok_or_else(|| input("moduli must be numbers"))?);
        }
        if let Some(p) = value.get("phase") {
            point.set("phase", p.as_f64().ok_or_else(|| input("phase must be a number"))?);
        }
    } else {
        let params = value.get("params").unwrap_or(&value);
        let map = params.as_object().ok_or_else(|| input("params must be an object of numbers"))?;
        if let Some(f) = value.get("family").and_then(Value::as_str) {
            let declared: CatalogName = f.parse().map_err(input)?;
            if declared != family {
                return Err(input(format!("params are for {declared}, not {family}")));
            }
        }
        for (k, v) in map {
            if k == "family" {
                continue;
            }
            point.set(k, v.as_f64().ok_or_else(|| input(format!("parameter {k} must be a number")))?);
        }
    }
    let missing_dependents =
        dependent_parameter_names(family).iter().any(|name| !point.params.contains_key(*name));
    if missing_dependents {
        point = families::solve_family_constraint(&point).map_err(input)?;
    }
    Ok(point)
}

pub struct ConstructRequest<'a> {
    pub family: Option<&'a str>,
    pub params: Option<&'a str>,
    pub graph: Option<&'a str>,
    pub root: Option<&'a str>,
    pub seed: Option<u64>,
    pub out: Option<&'a Path>,
    pub tol: f64,
}

/// `construct`: a δ family member (from parameters or a seeded random
/// point) or a real-root representation (`--graph` with `--root`).
pub fn cmd_construct(req: &ConstructRequest<'_>) -> Result<CommandResult, CliError> {
    let (t, mut payload) = match (req.family, req.graph, req.root) {
        (Some(family), None, None) => {
            let family: CatalogName = family.parse().map_err(input)?;
            if !family.is_extended() {
                return Err(input(FamilyError::NotExtended(family.to_string())));
            }
            let (point, from_seed) = match (req.params, req.seed) {
                (Some(p), _) => {
                    let text = if Path::new(p).is_file() { read_text(Path::new(p))? } else { p.to_string() };
                    (parse_params(family, &text)?, false)
                }
                (None, Some(seed)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (random_parameter_point(family, &mut rng).map_err(internal)?, true)
                }
                (None, None) => return Err(input("construct needs --params or --seed")),
            };
            let t = families::construct_family(&point).map_err(|e| if from_seed { internal(e) } else { input(e) })?;
            let params: Map<String, Value> = point.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            (t, json!({ "family": family.to_string(), "params": params }))
        }
        (None, Some(graph), Some(root)) => {
            let q = Arc::new(load_graph(graph)?);
            let d = parse_vector(&q, root)?;
            let mut rng = ChaCha8Rng::seed_from_u64(req.seed.unwrap_or(0));
            let seeds = vec![1.0; q.vertex_count()];
            let (t, _) = construct_real_root_rep_retrying(q, &d, &seeds, &mut rng, 20).map_err(functor_error)?;
            (t, json!({ "root": d.entries() }))
        }
        _ => return Err(input("use either --family (with --params or --seed) or --graph with --root")),
    };
    let s = summary(&t, req.tol)?;
    merge(&mut payload, s);
    if let Some(out) = req.out {
        let ch = orthoscalarity_report(&t).character;
        write_text(out, &io::representation_to_json(&t, Some(&ch)))?;
        payload["out"] = json!(out.display().to_string());
    }
    Ok(CommandResult::ok(payload))
}

fn merge(into: &mut Value, from: Value) {
    if let (Some(a), Value::Object(b)) = (into.as_object_mut(), from) {
        a.extend(b);
    }
}

/// `verify`: orthoscalarity and Schur checks on a stored representation.
pub fn cmd_verify(path: &Path, tol: f64) -> Result<CommandResult, CliError> {
    let (t, _) = load_representation(path)?;
    Ok(CommandResult::ok(summary(&t, tol)?))
}

/// Character to feed the functors: the stored one if present, else the
/// measured one with `OFF_SUPPORT_CHARACTER` away from the support.
fn input_character(t: &Representation, stored: Option<Character>) -> Character {
    if let Some(ch) = stored {
        return ch;
    }
    let report = orthoscalarity_report(t);
    let mut ch = report.character;
    for v in 0..t.dims().len() {
        if t.dims()[v] == 0 {
            ch.values[v] = OFF_SUPPORT_CHARACTER;
        }
    }
    ch
}

/// `functor`: `k` alternating functor applications starting with `parity`;
/// optionally applies the reverse sequence and checks the input comes back
/// up to unitary equivalence.
pub fn cmd_functor(
    path: &Path,
    parity: Parity,
    k: usize,
    check_inverse: bool,
    out: Option<&Path>,
) -> Result<CommandResult, CliError> {
    let (t, stored) = load_representation(path)?;
    let chi = input_character(&t, stored);
    let parities: Vec<Parity> = (0..k).map(|i| if i % 2 == 0 { parity } else { parity.flip() }).collect();
    let (r, ch, _) = apply_sequence(&t, &chi, &parities).map_err(functor_error)?;
    let q = t.quiver();
    let mut payload = json!({
        "graph": q.name(),
        "sequence": parities.iter().map(|p| p.as_str()).collect::<Vec<_>>(),
        "input_dims": dims_map(&t),
        "dims": dims_map(&r),
        "character": character_map(q, &ch),
        "defect": orthoscalarity_report(&r).defect,
    });
    if check_inverse {
        let back: Vec<Parity> = parities.iter().rev().copied().collect();
        let (b, _, _) = apply_sequence(&r, &ch, &back).map_err(functor_error)?;
        payload["inverse_equivalent"] = json!(unitary_equivalent(&b, &t, EQUIVALENCE_TOL).equivalent);
    }
    if let Some(out) = out {
        write_text(out, &io::representation_to_json(&r, Some(&ch)))?;
        payload["out"] = json!(out.display().to_string());
    }
    Ok(CommandResult::ok(payload))
}

/// `decompose`: orthogonal splitting into indecomposable summands.
pub fn cmd_decompose(path: &Path, tol: f64) -> Result<CommandResult, CliError> {
    let (t, _) = load_representation(path)?;
    let parts = split_decomposition(&t, tol).map_err(internal)?;
    let summands: Vec<Value> = parts.iter().map(|p| summary(p, tol)).collect::<Result<_, _>>()?;
    Ok(CommandResult::ok(json!({
        "graph": t.quiver().name(),
        "count": parts.len(),
        "summands": summands,
    })))
}

/// Plain-text rendering: `rows` become a table, other payloads key/value
/// lines.
pub fn render_table(result: &CommandResult) -> String {
    if result.status == Status::Error {
        return result.diagnostics.iter().map(|d| format!("error: {d}\n")).collect();
    }
    let p = &result.payload;
    let mut out = String::new();
    if let Some(rows) = p.get("rows").and_then(Value::as_array) {
        let keys: Vec<String> = rows
            .first()
            .and_then(Value::as_object)
            .map(|o| o.keys().cloned().collect())
            .unwrap_or_default();
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| keys.iter().map(|k| cell(&r[k])).collect())
            .collect();
        let widths: Vec<usize> = keys
            .iter()
            .enumerate()
            .map(|(i, k)| cells.iter().map(|c| c[i].len()).chain([k.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: &[String]| {
            items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect::<Vec<_>>().join("  ")
        };
        out.push_str(line(&keys).trim_end());
        out.push('\n');
        for c in &cells {
            out.push_str(line(c).trim_end());
            out.push('\n');
        }
        return out;
    }
    if let Some(obj) = p.as_object() {
        for (k, v) in obj {
            out.push_str(&format!("{k}: {}\n", cell(v)));
        }
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("({})", items.iter().map(cell).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}
