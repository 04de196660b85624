//! The four CLI commands, mapped onto the library engines.

use std::path::{Path, PathBuf};

use phifde_core::bounds::{a_priori_estimate, continuous_dependence_bound, BoundInputs};
use phifde_core::expr::parse;
use phifde_core::phicalc::Grid;
use phifde_core::solver::{
    run_extremal, run_extremal_unchecked, solve_linear, IterationReport, LinearForcing,
    SolverConfig, SolverError,
};
use phifde_core::special::ml_two;

use crate::config::{parse_scalar, ConfigError, RunConfig};
use crate::output;

/// Exit-code-carrying error: 2 = configuration / argument, 3 = numeric or
/// I/O failure, 4 = hypothesis (seed verification) failure.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numeric(String),
    Hypothesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Hypothesis(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Numeric(m) | CliError::Hypothesis(m) => m,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

/// Engine errors: hypothesis failures keep their own exit code, everything
/// else is a numeric failure.
fn engine_error(e: SolverError) -> CliError {
    match e {
        SolverError::HypothesisFailed { .. } => CliError::Hypothesis(e.to_string()),
        other => CliError::Numeric(other.to_string()),
    }
}

fn io_error(context: &str, e: std::io::Error) -> CliError {
    CliError::Numeric(format!("{context}: {e}"))
}

fn solver_config(cfg: &RunConfig) -> Result<SolverConfig, CliError> {
    let grid = Grid::uniform(cfg.problem.a, cfg.problem.b, cfg.numerics.n_intervals)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let mut sc = SolverConfig::new(grid, cfg.numerics.scheme);
    sc.max_iter = cfg.numerics.max_iter;
    sc.tol = cfg.numerics.tol;
    sc.ml_control = cfg.series_control()?;
    Ok(sc)
}

/// Resolve the output directory: `--out` wins, then the config's
/// `output_dir`, then the working directory.
pub fn resolve_out_dir(flag: Option<&Path>, cfg: Option<&RunConfig>) -> PathBuf {
    flag.map(Path::to_path_buf)
        .or_else(|| cfg.and_then(|c| c.output_dir.clone()))
        .unwrap_or_else(|| PathBuf::from("."))
}

pub fn cmd_solve_linear(
    cfg: &RunConfig,
    forcing_text: &str,
    verify: bool,
    out_dir: &Path,
) -> Result<(), CliError> {
    let forcing_expr = parse(forcing_text)
        .map_err(|e| CliError::Config(format!("--forcing: {e}")))?;
    let forcing = LinearForcing::new(forcing_expr)
        .map_err(|_| CliError::Config("--forcing: must depend on t only".into()))?;
    let sc = solver_config(cfg)?;
    let z = solve_linear(&cfg.problem, &forcing, &sc).map_err(engine_error)?;

    let path = out_dir.join("solution.csv");
    output::write_solution_csv(&path, &z).map_err(|e| io_error("writing solution.csv", e))?;
    println!("wrote {}", path.display());

    if verify {
        let h = forcing.expr();
        if h.uses_time() {
            return Err(CliError::Config(
                "--verify requires a constant forcing expression".into(),
            ));
        }
        let c = h
            .eval(0.0, None)
            .map_err(|e| CliError::Config(format!("--forcing: {e}")))?;
        let p = &cfg.problem;
        let ctl = cfg.series_control()?;
        let u_a = p.phi.phi_at(p.a).map_err(|e| CliError::Numeric(e.to_string()))?;
        let mut max_dev = 0.0f64;
        for i in 0..z.len() {
            let span = (p
                .phi
                .phi_at(z.grid().node(i))
                .map_err(|e| CliError::Numeric(e.to_string()))?
                - u_a)
                .max(0.0);
            let ml = ml_two(
                p.mu - p.kappa,
                p.mu + 1.0,
                -p.omega * span.powf(p.mu - p.kappa),
                ctl,
            )
            .map_err(|e| CliError::Numeric(e.to_string()))?;
            let closed = p.z_a + c * span.powf(p.mu) * ml;
            max_dev = max_dev.max((z.value(i) - closed).abs());
        }
        println!("verify: max deviation from closed form = {max_dev:e}");
        if max_dev > 1e-3 {
            return Err(CliError::Numeric(format!(
                "verification failed: max deviation {max_dev:e} exceeds 1e-3"
            )));
        }
    }
    Ok(())
}

fn run_configured_extremal(cfg: &RunConfig, force: bool) -> Result<IterationReport, CliError> {
    let seeds = cfg.seeds.as_ref().ok_or_else(|| {
        CliError::Config("[seeds]: section with lower/upper is required".into())
    })?;
    let sc = solver_config(cfg)?;
    let run = if force {
        run_extremal_unchecked(&cfg.problem, &seeds.lower, &seeds.upper, &sc)
    } else {
        run_extremal(&cfg.problem, &seeds.lower, &seeds.upper, &sc)
    };
    run.map_err(engine_error)
}

pub fn cmd_extremal(cfg: &RunConfig, force: bool, out_dir: &Path) -> Result<(), CliError> {
    let report = run_configured_extremal(cfg, force)?;

    let iterates = out_dir.join("iterates.csv");
    output::write_iterates_csv(&iterates, &report)
        .map_err(|e| io_error("writing iterates.csv", e))?;
    let errors = out_dir.join("errors.csv");
    output::write_errors_csv(&errors, &report.error_norms)
        .map_err(|e| io_error("writing errors.csv", e))?;
    let summary = out_dir.join("summary.txt");
    output::write_text(&summary, &output::iteration_summary(&report))
        .map_err(|e| io_error("writing summary.txt", e))?;

    println!(
        "wrote {}, {}, {}",
        iterates.display(),
        errors.display(),
        summary.display()
    );
    println!(
        "converged={} iterations={} final_E={:e}",
        report.converged,
        report.iterations_used,
        report.error_norms.last().expect("nonempty")
    );
    Ok(())
}

pub fn cmd_bounds(cfg: &RunConfig, delta_text: Option<&str>, out_dir: &Path) -> Result<(), CliError> {
    let _ = out_dir; // bounds prints to stdout only
    let lipschitz_l = cfg.bound_constants.lipschitz_l.ok_or_else(|| {
        CliError::Config("[bounds] lipschitz_L: required for the bounds command".into())
    })?;
    let delta = delta_text
        .map(|d| parse_scalar("--delta", d))
        .transpose()?;
    if let Some(d) = delta {
        if d < 0.0 {
            return Err(CliError::Config("--delta: must be nonnegative".into()));
        }
    }

    // F* falls back to the nodewise maximum of |F(t_i, 0)| when the config
    // does not pin an analytic value.
    let sc = solver_config(cfg)?;
    let f_star = match cfg.bound_constants.f_star {
        Some(v) => v,
        None => {
            let mut sup = 0.0f64;
            for (node, &t) in sc.grid.nodes().iter().enumerate() {
                let v = cfg.problem.rhs.eval(t, Some(0.0)).map_err(|e| {
                    CliError::Numeric(format!(
                        "evaluating rhs at node {node} (t={t}) for F*: {e}"
                    ))
                })?;
                sup = sup.max(v.abs());
            }
            sup
        }
    };

    let inputs = BoundInputs {
        lipschitz_l,
        f_star,
        monotone_m: 0.0,
        delta_z_a: 1.0,
    };
    let corrected = a_priori_estimate(&cfg.problem, &inputs, true)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    let printed = a_priori_estimate(&cfg.problem, &inputs, false)
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    // delta_z_a = 1 turns the dependence bound into its coefficient
    // E_mu(L (Phi(b)-Phi(a))^mu).
    let coefficient = continuous_dependence_bound(&cfg.problem, &inputs)
        .map_err(|e| CliError::Numeric(e.to_string()))?;

    println!("lipschitz_L = {lipschitz_l}");
    println!("f_star = {f_star}");
    println!("a_priori_corrected = {}", output::cell(corrected));
    println!("a_priori_as_printed = {}", output::cell(printed));
    println!("dependence_coefficient = {}", output::cell(coefficient));
    if let Some(d) = delta {
        println!(
            "dependence_bound(delta={d}) = {}",
            output::cell(coefficient * d)
        );
    }

    // Observed solution magnitude for comparison, when seeds allow a run.
    match cfg.seeds {
        Some(_) => {
            let report = run_configured_extremal(cfg, false)?;
            let sup = report
                .lower_iterates
                .last()
                .into_iter()
                .chain(report.upper_iterates.last())
                .flat_map(|g| g.values())
                .fold(0.0f64, |m, &v| m.max(v.abs()));
            println!("solution_sup = {}", output::cell(sup));
            println!("within_a_priori = {}", sup <= corrected + 1e-6);
        }
        None => println!("solution_sup = unavailable (no [seeds] section)"),
    }
    Ok(())
}

/// Fixed demonstration runs: the bundled config at its native coarse grid
/// (h = 0.2, desingularized Simpson) and again at N=400 with the product
/// rule, plus figure-panel data from the fine run.
pub struct ReproducePlan {
    pub config_text: &'static str,
    /// Iterate indices emitted as figure panels.
    pub panels: &'static [usize],
    /// Reference magnitudes the fine run's E_n are compared against, by
    /// iteration index (order-of-magnitude documentation in the summary).
    pub expected_magnitudes: &'static [(usize, f64)],
}

pub fn reproduce_plan(which: &str) -> Result<ReproducePlan, CliError> {
    match which {
        "example1" => Ok(ReproducePlan {
            config_text: include_str!("../configs/example1.cfg"),
            panels: &[0, 1, 2],
            expected_magnitudes: &[(1, 7.46215e-6), (2, 2.0401e-11), (3, 4.01309e-17)],
        }),
        "example2" => Ok(ReproducePlan {
            config_text: include_str!("../configs/example2.cfg"),
            panels: &[0, 2, 4],
            expected_magnitudes: &[
                (1, 4.22221e-3),
                (2, 5.94414e-5),
                (3, 5.98584e-7),
                (4, 4.38003e-9),
            ],
        }),
        other => Err(CliError::Config(format!(
            "unknown reproduction target `{other}` (expected example1 or example2)"
        ))),
    }
}

pub fn cmd_reproduce(which: &str, out_dir: &Path) -> Result<(), CliError> {
    let plan = reproduce_plan(which)?;
    let coarse_cfg = crate::config::parse_config(plan.config_text)?;

    // Fine variant: same problem, N=400 with the product rule.
    let mut fine_cfg = coarse_cfg.clone();
    fine_cfg.numerics.n_intervals = 400;
    fine_cfg.numerics.scheme = phifde_core::volterra::SchemeKind::ProductTrapezoid;

    let coarse = run_configured_extremal(&coarse_cfg, false)?;
    let fine = run_configured_extremal(&fine_cfg, false)?;

    let coarse_path = out_dir.join("errors_simpson_n5.csv");
    output::write_errors_csv(&coarse_path, &coarse.error_norms)
        .map_err(|e| io_error("writing errors_simpson_n5.csv", e))?;
    let fine_path = out_dir.join("errors_product_n400.csv");
    output::write_errors_csv(&fine_path, &fine.error_norms)
        .map_err(|e| io_error("writing errors_product_n400.csv", e))?;

    let mut written = vec![coarse_path, fine_path];
    for &n in plan.panels {
        let path = out_dir.join(format!("fig_iterates_n{n}.csv"));
        output::write_fig_csv(&path, &fine.lower_iterates[n], &fine.upper_iterates[n])
            .map_err(|e| io_error("writing figure data", e))?;
        written.push(path);
    }

    let mut summary = output::iteration_summary(&fine);
    summary.push_str("\n[coarse run: n_intervals=5, scheme=simpson_desingularized]\n");
    for (n, e) in coarse.error_norms.iter().enumerate() {
        summary.push_str(&format!("E_{n} = {}\n", output::cell(*e)));
    }
    summary.push_str("\n[fine run: n_intervals=400, scheme=product_trapezoid]\n");
    summary.push_str(
        "The expected_magnitude column lists the anticipated order of magnitude \
         for each error norm; agreement is expected in magnitude, not digit for \
         digit, because coarse singular-panel treatments differ.\n",
    );
    for (n, e) in fine.error_norms.iter().enumerate() {
        match plan.expected_magnitudes.iter().find(|(k, _)| *k == n) {
            Some((_, expected)) => summary.push_str(&format!(
                "E_{n} = {}  expected_magnitude = {expected:e}  ratio = {:.3}\n",
                output::cell(*e),
                e / expected
            )),
            None => summary.push_str(&format!("E_{n} = {}\n", output::cell(*e))),
        }
    }
    let summary_path = out_dir.join("summary.txt");
    output::write_text(&summary_path, &summary)
        .map_err(|e| io_error("writing summary.txt", e))?;
    written.push(summary_path);

    for p in &written {
        println!("wrote {}", p.display());
    }
    Ok(())
}
