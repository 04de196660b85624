//! Flat INI-style run configuration: parsing, validation, and a canonical
//! echo used by `--dump-config`.
//!
//! Format: `[section]` headers followed by `key = value` lines; `#` or `;`
//! start a comment line; blank lines are ignored. Scalar values accept
//! constant expressions (`2/sqrt(pi)`, `gamma(1.6)`), with the word `pi`
//! standing for the circle constant.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use phifde_core::expr::{parse, Expr};
use phifde_core::phicalc::PhiMap;
use phifde_core::solver::ProblemSpec;
use phifde_core::special::SeriesControl;
use phifde_core::volterra::SchemeKind;

/// A configuration / command-line-argument problem. Maps to exit code 2.
#[derive(Debug, Clone)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone)]
pub struct Seeds {
    pub lower: Expr,
    pub upper: Expr,
}

#[derive(Debug, Clone)]
pub struct Numerics {
    pub n_intervals: usize,
    pub scheme: SchemeKind,
    pub tol: f64,
    pub max_iter: usize,
    pub ml_abs_tol: f64,
}

impl Default for Numerics {
    fn default() -> Self {
        Numerics {
            n_intervals: 400,
            scheme: SchemeKind::ProductTrapezoid,
            tol: 1e-12,
            max_iter: 25,
            ml_abs_tol: SeriesControl::default().abs_tol,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct BoundConstants {
    pub lipschitz_l: Option<f64>,
    pub f_star: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: ProblemSpec,
    pub seeds: Option<Seeds>,
    pub numerics: Numerics,
    pub bound_constants: BoundConstants,
    pub output_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn series_control(&self) -> Result<SeriesControl, ConfigError> {
        SeriesControl::new(self.numerics.ml_abs_tol, SeriesControl::default().max_terms)
            .map_err(|e| ConfigError(format!("[numerics] ml_abs_tol: {e}")))
    }
}

/// Replace standalone `pi` words with the numeric circle constant, leaving
/// every other identifier intact.
fn substitute_pi(text: &str) -> String {
    let bytes = text.as_bytes();
    let mut out = String::with_capacity(text.len() + 16);
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len()
                && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
            {
                i += 1;
            }
            let word = &text[start..i];
            if word == "pi" {
                out.push_str("3.141592653589793");
            } else {
                out.push_str(word);
            }
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

/// Parse a constant scalar: a number or a constant expression such as
/// `2/sqrt(pi)` or `gamma(1.6)`. `label` names the source for error
/// messages (e.g. `[problem] omega` or `--delta`).
pub fn parse_scalar(label: &str, text: &str) -> Result<f64, ConfigError> {
    let expr =
        parse(&substitute_pi(text)).map_err(|e| ConfigError(format!("{label}: {e}")))?;
    if expr.uses_time() || expr.uses_state() {
        return Err(ConfigError(format!(
            "{label}: must be a constant expression (t and z are not allowed)"
        )));
    }
    let v = expr
        .eval(0.0, None)
        .map_err(|e| ConfigError(format!("{label}: {e}")))?;
    if !v.is_finite() {
        return Err(ConfigError(format!("{label}: evaluates to {v}")));
    }
    Ok(v)
}

fn parse_count(label: &str, text: &str) -> Result<usize, ConfigError> {
    text.parse::<usize>()
        .map_err(|_| ConfigError(format!("{label}: expected a positive integer, got `{text}`")))
}

fn parse_expr(label: &str, text: &str) -> Result<Expr, ConfigError> {
    parse(text).map_err(|e| ConfigError(format!("{label}: {e}")))
}

const SECTIONS: &[(&str, &[&str])] = &[
    ("problem", &["mu", "kappa", "omega", "a", "b", "z0", "rhs"]),
    ("phi", &["builtin", "expr", "expr_prime"]),
    ("seeds", &["lower", "upper"]),
    (
        "numerics",
        &["n_intervals", "scheme", "tol", "max_iter", "ml_abs_tol"],
    ),
    ("bounds", &["lipschitz_L", "f_star"]),
    ("output", &["output_dir"]),
];

fn allowed_keys(section: &str) -> Option<&'static [&'static str]> {
    SECTIONS
        .iter()
        .find(|(name, _)| *name == section)
        .map(|(_, keys)| *keys)
}

struct Raw {
    sections: BTreeMap<String, BTreeMap<String, String>>,
}

impl Raw {
    fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.sections
            .get(section)
            .and_then(|m| m.get(key))
            .map(String::as_str)
    }

    fn require(&self, section: &str, key: &str) -> Result<&str, ConfigError> {
        self.get(section, key)
            .ok_or_else(|| ConfigError(format!("[{section}] {key}: missing required key")))
    }
}

fn parse_raw(text: &str) -> Result<Raw, ConfigError> {
    let mut sections: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_start_matches('\u{feff}').trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let name = name.trim();
            if allowed_keys(name).is_none() {
                return Err(ConfigError(format!(
                    "line {line_no}: unknown section [{name}]"
                )));
            }
            sections.entry(name.to_string()).or_default();
            current = Some(name.to_string());
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError(format!(
                "line {line_no}: expected `key = value`, got `{line}`"
            )));
        };
        let key = key.trim();
        let value = value.trim();
        let Some(section) = current.as_deref() else {
            return Err(ConfigError(format!(
                "line {line_no}: key `{key}` appears before any [section] header"
            )));
        };
        let allowed = allowed_keys(section).expect("validated at header");
        if !allowed.contains(&key) {
            return Err(ConfigError(format!(
                "line {line_no}: [{section}] {key}: unknown key"
            )));
        }
        let entry = sections.get_mut(section).expect("section registered");
        if entry.insert(key.to_string(), value.to_string()).is_some() {
            return Err(ConfigError(format!(
                "line {line_no}: [{section}] {key}: duplicate key"
            )));
        }
    }
    Ok(Raw { sections })
}

fn build_phi(raw: &Raw) -> Result<PhiMap, ConfigError> {
    let builtin = raw.get("phi", "builtin");
    let expr = raw.get("phi", "expr");
    let expr_prime = raw.get("phi", "expr_prime");
    match (builtin, expr, expr_prime) {
        (None, None, None) => Ok(PhiMap::identity()),
        (Some(name), None, None) => match name {
            "identity" => Ok(PhiMap::identity()),
            "sigmoid" => Ok(PhiMap::sigmoid()),
            other => Err(ConfigError(format!(
                "[phi] builtin: expected `identity` or `sigmoid`, got `{other}`"
            ))),
        },
        (None, Some(map), Some(prime)) => {
            let map = parse_expr("[phi] expr", map)?;
            let prime = parse_expr("[phi] expr_prime", prime)?;
            PhiMap::from_exprs(map, prime, "custom")
                .map_err(|e| ConfigError(format!("[phi]: {e}")))
        }
        (None, _, _) => Err(ConfigError(
            "[phi]: expr and expr_prime must be given together".into(),
        )),
        (Some(_), _, _) => Err(ConfigError(
            "[phi]: give either builtin or expr/expr_prime, not both".into(),
        )),
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let raw = parse_raw(text)?;
    if raw.sections.get("problem").is_none() {
        return Err(ConfigError("missing required section [problem]".into()));
    }

    let problem = ProblemSpec {
        mu: parse_scalar("[problem] mu", raw.require("problem", "mu")?)?,
        kappa: parse_scalar("[problem] kappa", raw.require("problem", "kappa")?)?,
        omega: parse_scalar("[problem] omega", raw.require("problem", "omega")?)?,
        a: parse_scalar("[problem] a", raw.require("problem", "a")?)?,
        b: parse_scalar("[problem] b", raw.require("problem", "b")?)?,
        z_a: parse_scalar("[problem] z0", raw.require("problem", "z0")?)?,
        rhs: parse_expr("[problem] rhs", raw.require("problem", "rhs")?)?,
        phi: build_phi(&raw)?,
    };
    problem
        .validate()
        .map_err(|e| ConfigError(format!("[problem]: {e}")))?;

    let seeds = match (raw.get("seeds", "lower"), raw.get("seeds", "upper")) {
        (None, None) => None,
        (Some(lo), Some(hi)) => Some(Seeds {
            lower: parse_expr("[seeds] lower", lo)?,
            upper: parse_expr("[seeds] upper", hi)?,
        }),
        _ => {
            return Err(ConfigError(
                "[seeds]: lower and upper must be given together".into(),
            ))
        }
    };
    if let Some(s) = &seeds {
        for (key, e) in [("lower", &s.lower), ("upper", &s.upper)] {
            if e.uses_state() {
                return Err(ConfigError(format!(
                    "[seeds] {key}: must depend on t only"
                )));
            }
        }
    }

    let mut numerics = Numerics::default();
    if let Some(v) = raw.get("numerics", "n_intervals") {
        numerics.n_intervals = parse_count("[numerics] n_intervals", v)?;
        if numerics.n_intervals < 2 {
            return Err(ConfigError(
                "[numerics] n_intervals: must be at least 2".into(),
            ));
        }
    }
    if let Some(v) = raw.get("numerics", "scheme") {
        numerics.scheme = match v {
            "product_trapezoid" => SchemeKind::ProductTrapezoid,
            "simpson_desingularized" => SchemeKind::SimpsonDesingularized,
            other => {
                return Err(ConfigError(format!(
                    "[numerics] scheme: expected `product_trapezoid` or \
                     `simpson_desingularized`, got `{other}`"
                )))
            }
        };
    }
    if let Some(v) = raw.get("numerics", "tol") {
        numerics.tol = parse_scalar("[numerics] tol", v)?;
        if !(numerics.tol > 0.0) {
            return Err(ConfigError("[numerics] tol: must be positive".into()));
        }
    }
    if let Some(v) = raw.get("numerics", "max_iter") {
        numerics.max_iter = parse_count("[numerics] max_iter", v)?;
        if numerics.max_iter == 0 {
            return Err(ConfigError("[numerics] max_iter: must be at least 1".into()));
        }
    }
    if let Some(v) = raw.get("numerics", "ml_abs_tol") {
        numerics.ml_abs_tol = parse_scalar("[numerics] ml_abs_tol", v)?;
    }

    let mut bound_constants = BoundConstants::default();
    if let Some(v) = raw.get("bounds", "lipschitz_L") {
        let l = parse_scalar("[bounds] lipschitz_L", v)?;
        if l < 0.0 {
            return Err(ConfigError("[bounds] lipschitz_L: must be nonnegative".into()));
        }
        bound_constants.lipschitz_l = Some(l);
    }
    if let Some(v) = raw.get("bounds", "f_star") {
        let f = parse_scalar("[bounds] f_star", v)?;
        if f < 0.0 {
            return Err(ConfigError("[bounds] f_star: must be nonnegative".into()));
        }
        bound_constants.f_star = Some(f);
    }

    let output_dir = raw.get("output", "output_dir").map(PathBuf::from);

    let cfg = RunConfig {
        problem,
        seeds,
        numerics,
        bound_constants,
        output_dir,
    };
    cfg.series_control()?;
    Ok(cfg)
}

pub fn load(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
    parse_config(&text)
}

/// Canonical echo: parsing the output reproduces the same configuration
/// (expressions in canonical printed form, scalars as shortest
/// round-tripping decimals).
pub fn dump(cfg: &RunConfig) -> String {
    let mut s = String::new();
    s.push_str("[problem]\n");
    s.push_str(&format!("mu = {}\n", cfg.problem.mu));
    s.push_str(&format!("kappa = {}\n", cfg.problem.kappa));
    s.push_str(&format!("omega = {}\n", cfg.problem.omega));
    s.push_str(&format!("a = {}\n", cfg.problem.a));
    s.push_str(&format!("b = {}\n", cfg.problem.b));
    s.push_str(&format!("z0 = {}\n", cfg.problem.z_a));
    s.push_str(&format!("rhs = {}\n", cfg.problem.rhs));

    s.push_str("\n[phi]\n");
    match cfg.problem.phi.label() {
        l @ ("identity" | "sigmoid") => s.push_str(&format!("builtin = {l}\n")),
        _ => {
            s.push_str(&format!("expr = {}\n", cfg.problem.phi.phi_expr()));
            s.push_str(&format!(
                "expr_prime = {}\n",
                cfg.problem.phi.phi_prime_expr()
            ));
        }
    }

    if let Some(seeds) = &cfg.seeds {
        s.push_str("\n[seeds]\n");
        s.push_str(&format!("lower = {}\n", seeds.lower));
        s.push_str(&format!("upper = {}\n", seeds.upper));
    }

    s.push_str("\n[numerics]\n");
    s.push_str(&format!("n_intervals = {}\n", cfg.numerics.n_intervals));
    let scheme = match cfg.numerics.scheme {
        SchemeKind::ProductTrapezoid => "product_trapezoid",
        SchemeKind::SimpsonDesingularized => "simpson_desingularized",
    };
    s.push_str(&format!("scheme = {scheme}\n"));
    s.push_str(&format!("tol = {:e}\n", cfg.numerics.tol));
    s.push_str(&format!("max_iter = {}\n", cfg.numerics.max_iter));
    s.push_str(&format!("ml_abs_tol = {:e}\n", cfg.numerics.ml_abs_tol));

    if cfg.bound_constants.lipschitz_l.is_some() || cfg.bound_constants.f_star.is_some() {
        s.push_str("\n[bounds]\n");
        if let Some(l) = cfg.bound_constants.lipschitz_l {
            s.push_str(&format!("lipschitz_L = {l}\n"));
        }
        if let Some(f) = cfg.bound_constants.f_star {
            s.push_str(&format!("f_star = {f}\n"));
        }
    }

    if let Some(dir) = &cfg.output_dir {
        s.push_str("\n[output]\n");
        s.push_str(&format!("output_dir = {}\n", dir.display()));
    }
    s
}
