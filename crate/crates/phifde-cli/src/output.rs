//! CSV and summary emitters. All files use LF line endings, dot decimal
//! separators, and 17-significant-digit scientific notation, so they are
//! byte-stable across locales and platforms.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use phifde_core::phicalc::GridFunction;
use phifde_core::solver::IterationReport;

/// Round-trip-exact float formatting for CSV cells.
pub fn cell(v: f64) -> String {
    format!("{v:.16e}")
}

fn open(path: &Path) -> std::io::Result<BufWriter<File>> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(BufWriter::new(File::create(path)?))
}

/// `t,z` rows for a single grid function.
pub fn write_solution_csv(path: &Path, z: &GridFunction) -> std::io::Result<()> {
    let mut w = open(path)?;
    writeln!(w, "t,z")?;
    for i in 0..z.len() {
        writeln!(w, "{},{}", cell(z.grid().node(i)), cell(z.value(i)))?;
    }
    w.flush()
}

/// `n,t,lower,upper` rows for every recorded iterate.
pub fn write_iterates_csv(path: &Path, report: &IterationReport) -> std::io::Result<()> {
    let mut w = open(path)?;
    writeln!(w, "n,t,lower,upper")?;
    for (n, (lo, hi)) in report
        .lower_iterates
        .iter()
        .zip(&report.upper_iterates)
        .enumerate()
    {
        for i in 0..lo.len() {
            writeln!(
                w,
                "{n},{},{},{}",
                cell(lo.grid().node(i)),
                cell(lo.value(i)),
                cell(hi.value(i))
            )?;
        }
    }
    w.flush()
}

/// `n,E_n` rows.
pub fn write_errors_csv(path: &Path, error_norms: &[f64]) -> std::io::Result<()> {
    let mut w = open(path)?;
    writeln!(w, "n,E_n")?;
    for (n, e) in error_norms.iter().enumerate() {
        writeln!(w, "{n},{}", cell(*e))?;
    }
    w.flush()
}

/// `t,lower,upper` rows for one iterate pair (figure panel data).
pub fn write_fig_csv(path: &Path, lower: &GridFunction, upper: &GridFunction) -> std::io::Result<()> {
    let mut w = open(path)?;
    writeln!(w, "t,lower,upper")?;
    for i in 0..lower.len() {
        writeln!(
            w,
            "{},{},{}",
            cell(lower.grid().node(i)),
            cell(lower.value(i)),
            cell(upper.value(i))
        )?;
    }
    w.flush()
}

/// Iteration summary. Line 1 is always `converged=<true|false>`.
pub fn iteration_summary(report: &IterationReport) -> String {
    let mut s = String::new();
    s.push_str(&format!("converged={}\n", report.converged));
    s.push_str(&format!("iterations={}\n", report.iterations_used));
    s.push_str(&format!(
        "final_E={}\n",
        cell(*report.error_norms.last().expect("nonempty"))
    ));
    s.push_str(&format!("unique_within_tol={}\n", report.unique_within_tol));
    s.push_str(&format!("seed_slack={}\n", report.seed_slack));
    s.push_str(&format!("seed_checks_skipped={}\n", report.forced));
    if report.warnings.is_empty() {
        s.push_str("warnings=none\n");
    } else {
        for w in &report.warnings {
            s.push_str(&format!("warning: {w}\n"));
        }
    }
    s
}

pub fn write_text(path: &Path, text: &str) -> std::io::Result<()> {
    let mut w = open(path)?;
    w.write_all(text.as_bytes())?;
    w.flush()
}
