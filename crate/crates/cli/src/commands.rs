//! Command dispatch: every library capability behind a deterministic,
//! machine-readable interface.

use crate::parser::{self, NamedFormula, ParseError};
use multalg_core::axioms::{check_axioms, Profile};
use multalg_core::builtins::{make_builtin, parse_builtin};
use multalg_core::eval::satisfies;
use multalg_core::ideals::characteristic;
use multalg_core::poly::{
    euclid_divide, evaluate, is_algebraically_closed_upto, roots, MultiPoly,
};
use multalg_core::qe::{
    eliminate_formula, qsatisfies, Elimination, EliminationConfig, axioms_tilde,
};
use multalg_core::term::{for_all_valuations, Valuation};
use multalg_core::textfmt;
use multalg_core::{FiniteMultiring, Formula};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct GlobalOpts {
    pub format: OutputFormat,
    pub seed: u64,
    pub max_clauses: usize,
    pub trace_path: Option<PathBuf>,
    pub defs: Vec<PathBuf>,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            format: OutputFormat::Text,
            seed: 0,
            max_clauses: 4096,
            trace_path: None,
            defs: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Check { structure: String, profile: String },
    Tables { structure: String },
    Char { structure: String },
    Eval { structure: String, poly: String, elem: String },
    Roots { structure: String, poly: String },
    Divide { structure: String, a: String, b: String },
    Closed { structure: String, max_deg: usize },
    Modelcheck { structure: String, formula: String },
    Qe { structure: String, formula: String, validate: bool },
    Axioms { structure: String, n: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    CheckFailed,
    Error,
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub human: String,
    pub payload: Value,
}

impl CommandResult {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::Error => 2,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.human.clone(),
            OutputFormat::Json => {
                serde_json::to_string_pretty(&self.payload).expect("payload serializes")
            }
        }
    }

    fn error(msg: impl Into<String>) -> CommandResult {
        let msg = msg.into();
        CommandResult {
            status: Status::Error,
            payload: json!({ "status": "error", "error": msg }),
            human: format!("error: {msg}"),
        }
    }
}

/// Loaded definition files plus lookup helpers.
struct Env {
    structures: Vec<FiniteMultiring>,
    polys: BTreeMap<String, (String, MultiPoly)>,
    formulas: BTreeMap<String, NamedFormula>,
}

fn load_env(opts: &GlobalOpts) -> Result<Env, String> {
    let mut env = Env { structures: Vec::new(), polys: BTreeMap::new(), formulas: BTreeMap::new() };
    for path in &opts.defs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let src = parser::parse_source(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        env.structures.extend(src.structures);
        env.polys.extend(src.polys);
        env.formulas.extend(src.formulas);
    }
    Ok(env)
}

fn resolve_structure(env: &Env, name: &str) -> Result<FiniteMultiring, String> {
    // definition files first, then builtins, then a file path (optionally
    // suffixed `#name` to pick one structure out of several)
    if let Some(s) = env.structures.iter().find(|s| s.name() == name) {
        return Ok(s.clone());
    }
    if let Some(kind) = parse_builtin(name) {
        return make_builtin(kind).map_err(|e| e.to_string());
    }
    let (path, pick) = match name.split_once('#') {
        Some((p, n)) => (p, Some(n)),
        None => (name, None),
    };
    if std::path::Path::new(path).is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let parsed = textfmt::parse_structures(&text).map_err(|e| e.to_string())?;
        return match pick {
            Some(n) => parsed
                .into_iter()
                .find(|s| s.name() == n)
                .ok_or_else(|| format!("{path} does not define `{n}`")),
            None if parsed.len() == 1 => Ok(parsed.into_iter().next().unwrap()),
            None => Err(format!("{path} defines {} structures; pick one with `{path}#name`", parsed.len())),
        };
    }
    Err(format!("unknown structure `{name}`"))
}

fn resolve_poly(env: &Env, s: &FiniteMultiring, text: &str) -> Result<MultiPoly, String> {
    if let Some((sname, p)) = env.polys.get(text) {
        if sname != s.name() {
            return Err(format!("polynomial `{text}` is bound over `{sname}`, not `{}`", s.name()));
        }
        return Ok(p.clone());
    }
    textfmt::parse_poly(s, text).map_err(|e| e.to_string())
}

fn resolve_formula(env: &Env, text: &str) -> Result<NamedFormula, ParseError> {
    if let Some(f) = env.formulas.get(text) {
        return Ok(f.clone());
    }
    parser::parse_formula(text)
}

pub fn run(opts: &GlobalOpts, cmd: &Command) -> CommandResult {
    let env = match load_env(opts) {
        Ok(env) => env,
        Err(e) => return CommandResult::error(e),
    };
    match cmd {
        Command::Check { structure, profile } => check_cmd(&env, structure, profile),
        Command::Tables { structure } => tables_cmd(&env, structure),
        Command::Char { structure } => char_cmd(&env, structure),
        Command::Eval { structure, poly, elem } => eval_cmd(&env, structure, poly, elem),
        Command::Roots { structure, poly } => roots_cmd(&env, structure, poly),
        Command::Divide { structure, a, b } => divide_cmd(&env, structure, a, b),
        Command::Closed { structure, max_deg } => closed_cmd(&env, structure, *max_deg),
        Command::Modelcheck { structure, formula } => modelcheck_cmd(&env, structure, formula),
        Command::Qe { structure, formula, validate } => {
            qe_cmd(opts, &env, structure, formula, *validate)
        }
        Command::Axioms { structure, n } => axioms_cmd(&env, structure, *n),
    }
}

fn check_cmd(env: &Env, structure: &str, profile: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let profile = match Profile::parse(profile) {
        Some(p) => p,
        None => return CommandResult::error(format!("unknown profile `{profile}`")),
    };
    let report = check_axioms(&s, profile);
    let pass = report.pass();
    let mut human = format!(
        "{} {} {}: {}\n",
        if pass { "PASS" } else { "FAIL" },
        s.name(),
        profile,
        if pass { "all axioms hold" } else { "axioms failed" }
    );
    for c in &report.checks {
        human.push_str(&format!(
            "  {} {}{}\n",
            if c.holds { "ok  " } else { "FAIL" },
            c.id,
            match &c.witness {
                Some(w) => format!(" witness ({})", w.join(", ")),
                None => String::new(),
            }
        ));
    }
    CommandResult {
        status: if pass { Status::Ok } else { Status::CheckFailed },
        payload: json!({
            "status": if pass { "ok" } else { "fail" },
            "command": "check",
            "report": report,
        }),
        human,
    }
}

fn tables_cmd(env: &Env, structure: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let text = textfmt::structure_to_text(&s);
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "tables",
            "structure": s.name(),
            "canonical": text,
        }),
        human: text,
    }
}

fn char_cmd(env: &Env, structure: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let c = characteristic(&s);
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "char",
            "structure": s.name(),
            "characteristic": c,
        }),
        human: format!("char({}) = {}\n", s.name(), c),
    }
}

fn eval_cmd(env: &Env, structure: &str, poly: &str, elem: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let p = match resolve_poly(env, &s, poly) {
        Ok(p) => p,
        Err(e) => return CommandResult::error(e),
    };
    let at = match s.element_by_name(elem) {
        Some(a) => a,
        None => return CommandResult::error(format!("unknown element `{elem}`")),
    };
    let value = evaluate(&s, &p, at);
    let names = s.subset_names(&value);
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "eval",
            "structure": s.name(),
            "poly": p.display(&s),
            "at": elem,
            "value": names,
        }),
        human: format!("{}({}) = {{{}}}\n", p.display(&s), elem, names.join(", ")),
    }
}

fn roots_cmd(env: &Env, structure: &str, poly: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let p = match resolve_poly(env, &s, poly) {
        Ok(p) => p,
        Err(e) => return CommandResult::error(e),
    };
    let rs = roots(&s, &p);
    let names: Vec<String> = rs.iter().map(|&e| s.display_name(e).to_string()).collect();
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "roots",
            "structure": s.name(),
            "poly": p.display(&s),
            "roots": names,
        }),
        human: format!("roots of {} in {}: {{{}}}\n", p.display(&s), s.name(), names.join(", ")),
    }
}

fn divide_cmd(env: &Env, structure: &str, a: &str, b: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    if !check_axioms(&s, Profile::Multifield).pass() {
        return CommandResult::error(format!(
            "`{}` is not a multifield; Euclidean division needs one",
            s.name()
        ));
    }
    let pa = match resolve_poly(env, &s, a) {
        Ok(p) => p,
        Err(e) => return CommandResult::error(e),
    };
    let pb = match resolve_poly(env, &s, b) {
        Ok(p) => p,
        Err(e) => return CommandResult::error(e),
    };
    let witness = match euclid_divide(&s, &pa, &pb) {
        Ok(w) => w,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let replayed = witness.replay(&s, &pa, &pb);
    let cells: Vec<Vec<String>> =
        witness.certificate.cells().iter().map(|c| s.subset_names(c)).collect();
    CommandResult {
        status: if replayed { Status::Ok } else { Status::CheckFailed },
        payload: json!({
            "status": if replayed { "ok" } else { "fail" },
            "command": "divide",
            "structure": s.name(),
            "a": pa.display(&s),
            "b": pb.display(&s),
            "quotient": witness.quotient.display(&s),
            "remainder": witness.remainder.display(&s),
            "certificate_cells": cells,
            "replayed": replayed,
        }),
        human: format!(
            "{} = ({}) * ({}) + {}   [certificate replay: {}]\n",
            pa.display(&s),
            witness.quotient.display(&s),
            pb.display(&s),
            witness.remainder.display(&s),
            if replayed { "ok" } else { "FAILED" },
        ),
    }
}

fn closed_cmd(env: &Env, structure: &str, max_deg: usize) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    if max_deg < 1 {
        return CommandResult::error("degree bound must be at least 1");
    }
    let report = is_algebraically_closed_upto(&s, max_deg);
    let witness_text = report.witness.as_ref().map(|w| w.display(&s));
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "closed",
            "structure": s.name(),
            "max_deg": max_deg,
            "closed": report.closed,
            "witness": witness_text,
        }),
        human: match witness_text {
            Some(w) => format!(
                "{} is NOT algebraically closed up to degree {max_deg}: {w} has no root\n",
                s.name()
            ),
            None => format!(
                "{} is algebraically closed up to degree {max_deg}\n",
                s.name()
            ),
        },
    }
}

fn modelcheck_cmd(env: &Env, structure: &str, formula: &str) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    let named = match resolve_formula(env, formula) {
        Ok(f) => f,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let mut failing: Option<Valuation> = None;
    let mut eval_err = None;
    let witness = for_all_valuations(s.carrier_size(), named.formula.fv(), &mut |v| {
        match satisfies(&s, &named.formula, v) {
            Ok(b) => b,
            Err(e) => {
                eval_err = Some(e.to_string());
                false
            }
        }
    });
    if let Some(e) = eval_err {
        return CommandResult::error(e);
    }
    if let Some(v) = witness {
        failing = Some(v);
    }
    let holds = failing.is_none();
    let witness_json = failing.as_ref().map(|v| valuation_json(&s, &named, v));
    CommandResult {
        status: if holds { Status::Ok } else { Status::CheckFailed },
        payload: json!({
            "status": if holds { "ok" } else { "fail" },
            "command": "modelcheck",
            "structure": s.name(),
            "formula": parser::print_formula(&named.formula, &named.var_names),
            "variables": named.var_names,
            "holds_universally": holds,
            "witness": witness_json,
        }),
        human: match &failing {
            None => format!("{} |= {}   (all valuations)\n", s.name(), formula.trim()),
            Some(v) => format!(
                "{} |/= {}   at {}\n",
                s.name(),
                formula.trim(),
                valuation_text(&s, &named, v)
            ),
        },
    }
}

fn valuation_text(s: &FiniteMultiring, named: &NamedFormula, v: &Valuation) -> String {
    let parts: Vec<String> = named
        .formula
        .fv()
        .iter()
        .map(|i| {
            let name = named
                .var_names
                .get(i as usize)
                .cloned()
                .unwrap_or_else(|| format!("x{i}"));
            let val = v.get(i).map(|e| s.display_name(e).to_string()).unwrap_or_default();
            format!("{name} = {val}")
        })
        .collect();
    parts.join(", ")
}

fn valuation_json(s: &FiniteMultiring, named: &NamedFormula, v: &Valuation) -> Value {
    let mut map = serde_json::Map::new();
    for i in named.formula.fv().iter() {
        let name =
            named.var_names.get(i as usize).cloned().unwrap_or_else(|| format!("x{i}"));
        if let Ok(e) = v.get(i) {
            map.insert(name, Value::String(s.display_name(e).to_string()));
        }
    }
    Value::Object(map)
}

fn qe_cmd(
    opts: &GlobalOpts,
    env: &Env,
    structure: &str,
    formula: &str,
    validate: bool,
) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    if !s.mul_strict() {
        return CommandResult::error(format!(
            "`{}` has multivalued multiplication; the elimination engine needs a 1-field",
            s.name()
        ));
    }
    let named = match resolve_formula(env, formula) {
        Ok(f) => f,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let cfg = EliminationConfig { max_clauses: opts.max_clauses };
    let elim = match eliminate_formula(&s, &named.formula, &cfg) {
        Ok(e) => e,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let result_text = elim.result.canonical_text(&s);
    let steps_json = trace_json(&elim);
    if let Some(path) = &opts.trace_path {
        let doc = json!({
            "structure": s.name(),
            "input": parser::print_formula(&named.formula, &named.var_names),
            "output": result_text,
            "steps": steps_json,
        });
        if let Err(e) = std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap()) {
            return CommandResult::error(format!("cannot write trace: {e}"));
        }
    }
    let validation = validate.then(|| validate_elimination(opts, &s, &named.formula, &elim));
    let mut human = format!(
        "input : {}\noutput: {}\nsteps : {} (ac: {}, infinitude: {})\n",
        parser::print_formula(&named.formula, &named.var_names),
        rename_vars(&result_text, &named.var_names),
        elim.trace.len(),
        elim.used_ac,
        elim.used_infinitude,
    );
    if let Some(v) = &validation {
        human.push_str(&format!(
            "validation on {}: {}/{} valuations agree{}\n",
            s.name(),
            v["agreed"],
            v["checked"],
            if v["agreed"] == v["checked"] { "" } else { " (steps are provisional on this model)" },
        ));
    }
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "qe",
            "structure": s.name(),
            "input": parser::print_formula(&named.formula, &named.var_names),
            "variables": named.var_names,
            "output": result_text,
            "quantifier_free": elim.result.is_quantifier_free(),
            "used_ac": elim.used_ac,
            "used_infinitude": elim.used_infinitude,
            "steps": steps_json,
            "validation": validation,
        }),
        human,
    }
}

fn trace_json(elim: &Elimination) -> Value {
    serde_json::to_value(&elim.trace).expect("trace serializes")
}

/// Renames canonical `x<i>` tokens back to the source variable names for
/// display, unless a source name itself looks like `x<digits>`.
fn rename_vars(text: &str, names: &[String]) -> String {
    let canonical_like = |n: &str| {
        n.len() >= 2 && n.starts_with('x') && n[1..].chars().all(|c| c.is_ascii_digit())
    };
    if names.iter().any(|n| canonical_like(n)) {
        return text.to_string();
    }
    let mut out = String::new();
    let mut token = String::new();
    let flush = |token: &mut String, out: &mut String| {
        if let Some(rest) = token.strip_prefix('x') {
            if let Ok(i) = rest.parse::<usize>() {
                if !rest.is_empty() && i < names.len() {
                    out.push_str(&names[i]);
                    token.clear();
                    return;
                }
            }
        }
        out.push_str(token);
        token.clear();
    };
    for c in text.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            token.push(c);
        } else {
            flush(&mut token, &mut out);
            out.push(c);
        }
    }
    flush(&mut token, &mut out);
    out
}

fn validate_elimination(
    opts: &GlobalOpts,
    s: &FiniteMultiring,
    input: &Formula,
    elim: &Elimination,
) -> Value {
    let vars = input.fv();
    let space: u64 = (s.carrier_size() as u64)
        .checked_pow(vars.len() as u32)
        .unwrap_or(u64::MAX);
    let mut checked = 0u64;
    let mut agreed = 0u64;
    let mut first_disagreement = None;
    let mut consider = |v: &Valuation| {
        checked += 1;
        let lhs = satisfies(s, input, v).unwrap_or(false);
        let rhs = qsatisfies(s, &elim.result, v);
        if lhs == rhs {
            agreed += 1;
        } else if first_disagreement.is_none() {
            let vals: Vec<String> = vars
                .iter()
                .map(|i| {
                    v.get(i).map(|e| s.display_name(e).to_string()).unwrap_or_default()
                })
                .collect();
            first_disagreement = Some(vals);
        }
    };
    if space <= 4096 {
        for_all_valuations(s.carrier_size(), vars, &mut |v| {
            consider(v);
            true
        });
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..512 {
            let mut v = Valuation::new();
            for i in vars.iter() {
                v.bind(i, rng.gen_range(0..s.carrier_size()));
            }
            consider(&v);
        }
    }
    json!({
        "checked": checked,
        "agreed": agreed,
        "exhaustive": space <= 4096,
        "first_disagreement": first_disagreement,
    })
}

fn axioms_cmd(env: &Env, structure: &str, n: u32) -> CommandResult {
    let s = match resolve_structure(env, structure) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    if n < 1 {
        return CommandResult::error("the schema bound must be at least 1");
    }
    let mut rows = Vec::new();
    let mut human = String::new();
    for (label, axiom) in axioms_tilde(&s, n) {
        let holds = qsatisfies(&s, &axiom, &Valuation::new());
        human.push_str(&format!(
            "{} {} on {}\n",
            if holds { "holds " } else { "fails " },
            label,
            s.name()
        ));
        rows.push(json!({ "axiom": label, "holds": holds }));
    }
    CommandResult {
        status: Status::Ok,
        payload: json!({
            "status": "ok",
            "command": "axioms",
            "structure": s.name(),
            "bound": n,
            "instances": rows,
        }),
        human,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_default(cmd: Command) -> CommandResult {
        run(&GlobalOpts::default(), &cmd)
    }

    #[test]
    fn char_of_krasner_is_two() {
        let r = run_default(Command::Char { structure: "K".into() });
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["characteristic"], 2);
        let r = run_default(Command::Char { structure: "Q2".into() });
        assert_eq!(r.payload["characteristic"], 0);
    }

    #[test]
    fn roots_of_one_plus_x_over_krasner() {
        let r = run_default(Command::Roots { structure: "K".into(), poly: "1 + X".into() });
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["roots"], json!(["1"]));
    }

    #[test]
    fn check_exit_codes() {
        let pass = run_default(Command::Check { structure: "K".into(), profile: "multifield".into() });
        assert_eq!(pass.exit_code(), 0);
        let fail = run_default(Command::Check {
            structure: "zmod(6)".into(),
            profile: "multidomain".into(),
        });
        assert_eq!(fail.exit_code(), 1);
        let err = run_default(Command::Check { structure: "nope".into(), profile: "multifield".into() });
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn divide_replays() {
        let r = run_default(Command::Divide {
            structure: "K".into(),
            a: "X^2".into(),
            b: "1 + X".into(),
        });
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["replayed"], json!(true));
    }

    #[test]
    fn divide_requires_a_multifield() {
        let r = run_default(Command::Divide {
            structure: "zmod(6)".into(),
            a: "X".into(),
            b: "1".into(),
        });
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn modelcheck_validity_and_failure() {
        let holds = run_default(Command::Modelcheck {
            structure: "Q2".into(),
            formula: "0 in x - x".into(),
        });
        assert_eq!(holds.exit_code(), 0);
        let fails = run_default(Command::Modelcheck {
            structure: "Q2".into(),
            formula: "0 in x".into(),
        });
        assert_eq!(fails.exit_code(), 1);
        assert!(fails.payload["witness"].is_object());
    }

    #[test]
    fn qe_emits_quantifier_free_output() {
        let r = run(
            &GlobalOpts::default(),
            &Command::Qe {
                structure: "K".into(),
                formula: "exists y. 0 in (y - x)".into(),
                validate: true,
            },
        );
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["quantifier_free"], json!(true));
        let v = &r.payload["validation"];
        assert_eq!(v["agreed"], v["checked"]);
    }

    #[test]
    fn axioms_lists_schema_instances() {
        let r = run_default(Command::Axioms { structure: "K".into(), n: 3 });
        assert_eq!(r.status, Status::Ok);
        let rows = r.payload["instances"].as_array().unwrap();
        assert_eq!(rows.len(), 5);
        // ac(1) holds on K, infinitude(3) fails on two elements
        assert_eq!(rows[0]["holds"], json!(true));
        assert_eq!(rows[4]["holds"], json!(false));
    }

    #[test]
    fn closed_reports_witnesses() {
        let r = run_default(Command::Closed { structure: "K".into(), max_deg: 5 });
        assert_eq!(r.payload["closed"], json!(true));
        let r = run_default(Command::Closed { structure: "zmod(5)".into(), max_deg: 2 });
        assert_eq!(r.payload["closed"], json!(false));
        assert!(r.payload["witness"].is_string());
    }
}
