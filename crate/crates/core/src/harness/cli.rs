use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use super::csv::{fmt_float, read_columns, CsvTable};
use super::grids::comparison_grids;
use super::norms::cdf_norm_between;
use super::svg::{LinePlot, Series};
use super::sweep::{eigen_table, study_table, sweep};
use super::{HarnessError, Result};
use crate::mc::{simulate, McConfig, McError, McModel, Stepping};
use crate::numerics::loglog_slope;
use crate::solution::{mean_binding_doi, mean_binding_smol, mean_diff, rel_diff, SpectralSolution};
use crate::spectral::{Geometry, Model, SpectralError};

const DEFAULT_RADIUS: f64 = 1.0;
const DEFAULT_DIFFUSIVITY: f64 = 10.0;
const DEFAULT_RB: f64 = 1e-3;
const DEFAULT_COUNT: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "doismol",
    version,
    about = "Compare the Doi and Smoluchowski models of binding to a spherical target"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Reaction radius (μm)
    #[arg(long, global = true)]
    rb: Option<f64>,
    /// Domain radius (μm)
    #[arg(long = "R", global = true)]
    radius: Option<f64>,
    /// Diffusivity (μm²/s)
    #[arg(long = "D", global = true)]
    diffusivity: Option<f64>,
    /// Doi reaction rate (1/s)
    #[arg(long, global = true)]
    lambda: Option<f64>,
    /// Initial radius (μm), defaults to R
    #[arg(long, global = true)]
    r0: Option<f64>,
    /// Number of eigenvalues
    #[arg(long, global = true)]
    count: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output CSV file (standard output if absent)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON file with any of rb, R, D, lambda, r0, count, seed
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Also write a line plot to this SVG file
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smoluchowski and Doi eigenvalues and their gaps
    Eigen,
    /// Both densities on the comparison grid
    Density {
        /// Keep every n-th time point
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Both binding-time CDFs on the comparison times
    Cdf {
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Closed-form mean binding times
    Mean,
    /// Norms and mean times over a (lambda, r_b) grid
    Sweep {
        #[arg(long, value_delimiter = ',', default_values_t = [1e5, 1e6, 1e7, 1e8, 1e9])]
        lambdas: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values_t = [1e-2, 1e-3])]
        rbs: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Brownian-dynamics estimate of the binding-time distribution
    Mc {
        #[arg(long, value_enum, default_value_t = McKind::Smol)]
        model: McKind,
        #[arg(long, default_value_t = 1000)]
        paths: usize,
        #[arg(long, default_value_t = 5e-7)]
        dt: f64,
        /// Censoring time; defaults to ten closed-form mean times
        #[arg(long)]
        t_max: Option<f64>,
        /// Use dt everywhere instead of enlarging steps away from boundaries
        #[arg(long)]
        fixed_step: bool,
    },
    /// Log-log slope of one CSV column against another
    Slope {
        #[arg(long)]
        input: PathBuf,
        /// Column for x (first column if absent)
        #[arg(long)]
        x: Option<String>,
        /// Column for y (second column if absent)
        #[arg(long)]
        y: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum McKind {
    Smol,
    Doi,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    rb: Option<f64>,
    #[serde(rename = "R")]
    radius: Option<f64>,
    #[serde(rename = "D")]
    diffusivity: Option<f64>,
    lambda: Option<f64>,
    r0: Option<f64>,
    count: Option<usize>,
    seed: Option<u64>,
}

/// Parameters after applying flag > config file > default.
#[derive(Debug, Clone)]
struct Params {
    geometry: Geometry,
    lambda: Option<f64>,
    r0: f64,
    count: usize,
    seed: u64,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
}

impl Params {
    fn resolve(common: &Common) -> Result<Self> {
        let file = match &common.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    HarnessError::Usage(format!("cannot read config {}: {e}", path.display()))
                })?;
                serde_json::from_str::<FileConfig>(&text).map_err(|e| {
                    HarnessError::Usage(format!("invalid config {}: {e}", path.display()))
                })?
            }
            None => FileConfig::default(),
        };
        let radius = common.radius.or(file.radius).unwrap_or(DEFAULT_RADIUS);
        let rb = common.rb.or(file.rb).unwrap_or(DEFAULT_RB);
        let d = common
            .diffusivity
            .or(file.diffusivity)
            .unwrap_or(DEFAULT_DIFFUSIVITY);
        let geometry =
            Geometry::new(rb, radius, d).map_err(|e| HarnessError::Usage(e.to_string()))?;
        let r0 = common.r0.or(file.r0).unwrap_or(radius);
        if !(r0 > rb && r0 <= radius) {
            return Err(HarnessError::Usage(format!(
                "r0 = {r0} must lie in (r_b, R] = ({rb}, {radius}]"
            )));
        }
        let lambda = common.lambda.or(file.lambda);
        if let Some(l) = lambda {
            if !(l > 0.0 && l.is_finite()) {
                return Err(HarnessError::Usage(format!(
                    "lambda must be positive, got {l}"
                )));
            }
        }
        Ok(Self {
            geometry,
            lambda,
            r0,
            count: common.count.or(file.count).unwrap_or(DEFAULT_COUNT),
            seed: common.seed.or(file.seed).unwrap_or(0),
            out: common.out.clone(),
            svg: common.svg.clone(),
        })
    }

    fn lambda(&self) -> Result<f64> {
        self.lambda
            .ok_or_else(|| HarnessError::Usage("--lambda is required for this command".into()))
    }

    fn emit(&self, table: &CsvTable) -> Result<()> {
        match &self.out {
            Some(path) => table.save(path),
            None => {
                let stdout = std::io::stdout();
                table.write_to(stdout.lock())?;
                Ok(())
            }
        }
    }

    fn plot(&self, plot: impl FnOnce() -> LinePlot) -> Result<()> {
        if let Some(path) = &self.svg {
            fs::write(path, plot().render())?;
        }
        Ok(())
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 on success, 2 for usage or parameter errors, 1 when
/// a computation fails.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &HarnessError) -> i32 {
    match e {
        HarnessError::Usage(_)
        | HarnessError::Spectral(SpectralError::Geometry(_))
        | HarnessError::MonteCarlo(McError::Config(_)) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<()> {
    let p = Params::resolve(&cli.common)?;
    match cli.command {
        Command::Eigen => eigen(&p),
        Command::Density { stride } => density(&p, stride),
        Command::Cdf { stride } => cdf(&p, stride),
        Command::Mean => mean(&p),
        Command::Sweep {
            lambdas,
            rbs,
            stride,
        } => run_sweep(&p, &lambdas, &rbs, stride),
        Command::Mc {
            model,
            paths,
            dt,
            t_max,
            fixed_step,
        } => monte_carlo(&p, model, paths, dt, t_max, fixed_step),
        Command::Slope { input, x, y } => slope(&p, &input, x.as_deref(), y.as_deref()),
    }
}

fn eigen(p: &Params) -> Result<()> {
    let rows = eigen_table(&p.geometry, p.lambda()?, p.count)?;
    let mut table = CsvTable::new(&["n", "alpha", "mu", "gap"]);
    for r in &rows {
        table.push(vec![
            r.n.to_string(),
            fmt_float(r.alpha),
            fmt_float(r.mu),
            fmt_float(r.gap),
        ]);
    }
    p.emit(&table)?;
    p.plot(|| LinePlot {
        title: "Eigenvalues".into(),
        x_label: "n".into(),
        y_label: "eigenvalue (1/μm²)".into(),
        log_y: true,
        series: vec![
            Series::new(
                "alpha_n",
                rows.iter().map(|r| (r.n as f64, r.alpha)).collect(),
            ),
            Series::new("mu_n", rows.iter().map(|r| (r.n as f64, r.mu)).collect()),
        ],
        ..Default::default()
    })
}

fn solutions(p: &Params, t_min: f64) -> Result<(SpectralSolution, SpectralSolution)> {
    let g = &p.geometry;
    let doi = SpectralSolution::delta(g, Model::doi_from_rate(g, p.lambda()?), p.r0, t_min)?;
    let smol = SpectralSolution::delta(g, Model::Smoluchowski, p.r0, t_min)?;
    Ok((doi, smol))
}

fn density(p: &Params, stride: usize) -> Result<()> {
    let grid = comparison_grids(&p.geometry).subsample_times(stride);
    let (doi, smol) = solutions(p, grid.t_points[0])?;
    let a = doi.density_grid(&grid.r_points, &grid.t_points)?;
    let b = smol.density_grid(&grid.r_points, &grid.t_points)?;
    if let Some(w) = a.unconverged.or(b.unconverged) {
        eprintln!("warning: series truncated at r = {}, t = {}", w.r, w.t);
    }
    let mut table = CsvTable::new(&["r", "t", "p_doi", "rho_smol", "abs_diff"]);
    let mut worst = (0.0f64, 0.0);
    let mut by_time = Vec::with_capacity(grid.t_points.len());
    for (j, &t) in grid.t_points.iter().enumerate() {
        let mut row_max = 0.0f64;
        for (i, &r) in grid.r_points.iter().enumerate() {
            let (x, y) = (a.at(i, j), b.at(i, j));
            let d = (x - y).abs();
            row_max = row_max.max(d);
            table.push_floats(&[r, t, x, y, d]);
        }
        if row_max > worst.0 {
            worst = (row_max, t);
        }
        by_time.push((t, row_max));
    }
    p.emit(&table)?;
    eprintln!("sup |p - rho| = {} at t = {}", fmt_float(worst.0), worst.1);
    p.plot(|| LinePlot {
        title: "Largest density difference over r".into(),
        x_label: "t (s)".into(),
        y_label: "max_r |p - rho|".into(),
        log_x: true,
        log_y: true,
        series: vec![Series::new("sup over r", by_time)],
    })
}

fn cdf(p: &Params, stride: usize) -> Result<()> {
    let grid = comparison_grids(&p.geometry).subsample_times(stride);
    let (doi, smol) = solutions(p, grid.t_points[0])?;
    let mut table = CsvTable::new(&["t", "cdf_doi", "cdf_smol", "abs_diff"]);
    let mut curves = (Vec::new(), Vec::new());
    for &t in &grid.t_points {
        let a = 1.0 - doi.survival_series(t)?.value;
        let b = 1.0 - smol.survival_series(t)?.value;
        table.push_floats(&[t, a, b, (a - b).abs()]);
        curves.0.push((t, a));
        curves.1.push((t, b));
    }
    p.emit(&table)?;
    let norm = cdf_norm_between(&doi, &smol, &grid.t_points)?;
    if let Some(w) = norm.unconverged {
        eprintln!("warning: series truncated at t = {}", w.t);
    }
    eprintln!(
        "sup |F_doi - F_smol| = {} at t = {}",
        fmt_float(norm.value),
        norm.t
    );
    p.plot(|| LinePlot {
        title: "Binding-time CDF".into(),
        x_label: "t (s)".into(),
        y_label: "P[T <= t]".into(),
        log_x: true,
        series: vec![
            Series::new("Doi", curves.0),
            Series::new("Smoluchowski", curves.1),
        ],
        ..Default::default()
    })
}

fn mean(p: &Params) -> Result<()> {
    let g = &p.geometry;
    let lambda = p.lambda()?;
    let mut table = CsvTable::new(&[
        "lambda",
        "r_b",
        "r0",
        "mean_doi",
        "mean_smol",
        "mean_diff",
        "rel_diff",
    ]);
    table.push_floats(&[
        lambda,
        g.r_b(),
        p.r0,
        mean_binding_doi(g, lambda, p.r0)?,
        mean_binding_smol(g, p.r0)?,
        mean_diff(g, lambda, p.r0)?,
        rel_diff(g, lambda, p.r0)?,
    ]);
    p.emit(&table)?;
    if p.svg.is_some() {
        eprintln!("note: mean has nothing to plot; --svg ignored");
    }
    Ok(())
}

fn run_sweep(p: &Params, lambdas: &[f64], rbs: &[f64], stride: usize) -> Result<()> {
    if lambdas
        .iter()
        .chain(rbs)
        .any(|&x| !(x > 0.0 && x.is_finite()))
    {
        return Err(HarnessError::Usage(
            "lambdas and rbs must be positive".into(),
        ));
    }
    let rows = sweep(lambdas, rbs, &p.geometry, p.r0, stride)?;
    for row in rows.iter().filter(|r| r.error.is_some()) {
        eprintln!(
            "warning: lambda = {}, r_b = {}: {}",
            row.lambda,
            row.r_b,
            row.error.as_deref().unwrap_or_default()
        );
    }
    p.emit(&study_table(&rows))?;
    p.plot(|| LinePlot {
        title: "Largest density difference".into(),
        x_label: "lambda (1/s)".into(),
        y_label: "sup |p - rho|".into(),
        log_x: true,
        log_y: true,
        series: rbs
            .iter()
            .map(|&rb| {
                Series::new(
                    format!("r_b = {rb}"),
                    rows.iter()
                        .filter(|r| r.r_b == rb)
                        .map(|r| (r.lambda, r.norm_density_scaled))
                        .collect(),
                )
            })
            .collect(),
    })
}

fn monte_carlo(
    p: &Params,
    kind: McKind,
    paths: usize,
    dt: f64,
    t_max: Option<f64>,
    fixed_step: bool,
) -> Result<()> {
    let g = &p.geometry;
    let (model, analytic_model, analytic_mean, lambda) = match kind {
        McKind::Smol => (
            McModel::Smoluchowski,
            Model::Smoluchowski,
            mean_binding_smol(g, p.r0)?,
            0.0,
        ),
        McKind::Doi => {
            let l = p.lambda()?;
            (
                McModel::Doi { lambda: l },
                Model::doi_from_rate(g, l),
                mean_binding_doi(g, l, p.r0)?,
                l,
            )
        }
    };
    let mut cfg = McConfig::new(
        model,
        dt,
        paths,
        p.seed,
        t_max.unwrap_or(10.0 * analytic_mean),
    );
    if fixed_step {
        cfg.stepping = Stepping::Fixed;
    }
    let sample = simulate(g, p.r0, &cfg)?;
    let mut table = CsvTable::new(&[
        "model",
        "lambda",
        "r_b",
        "n_paths",
        "n_bound",
        "mean_restricted",
        "ci95_halfwidth",
        "censoring_bias",
        "analytic_mean",
    ]);
    table.push(vec![
        analytic_model.name().to_string(),
        fmt_float(lambda),
        fmt_float(g.r_b()),
        sample.n_paths.to_string(),
        sample.n_bound.to_string(),
        fmt_float(sample.mean_restricted),
        fmt_float(sample.ci95_halfwidth),
        fmt_float(sample.censoring_bias),
        fmt_float(analytic_mean),
    ]);
    p.emit(&table)?;
    if p.svg.is_some() {
        let sol = SpectralSolution::delta(g, analytic_model, p.r0, 1e-4)?;
        let ts: Vec<f64> = (1..=200).map(|k| cfg.t_max * k as f64 / 200.0).collect();
        let analytic = ts
            .iter()
            .map(|&t| sol.cdf(t).map(|c| (t, c)))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let ecdf = ts
            .iter()
            .map(|&t| (t, crate::mc::ecdf_at(&sample, t)))
            .collect();
        p.plot(|| LinePlot {
            title: "Simulated and analytic binding-time CDF".into(),
            x_label: "t (s)".into(),
            y_label: "P[T <= t]".into(),
            series: vec![
                Series::new("simulation", ecdf),
                Series::new("series", analytic),
            ],
            ..Default::default()
        })?;
    }
    Ok(())
}

fn slope(p: &Params, input: &Path, x: Option<&str>, y: Option<&str>) -> Result<()> {
    let (header, columns) = read_columns(input)?;
    let pick = |name: Option<&str>, default: usize| -> Result<usize> {
        match name {
            Some(n) => header
                .iter()
                .position(|h| h == n)
                .ok_or_else(|| HarnessError::Usage(format!("no column named {n:?}"))),
            None if default < header.len() => Ok(default),
            None => Err(HarnessError::Usage(
                "input needs at least two columns".into(),
            )),
        }
    };
    let (ix, iy) = (pick(x, 0)?, pick(y, 1)?);
    let points: Vec<(f64, f64)> = columns[ix]
        .iter()
        .copied()
        .zip(columns[iy].iter().copied())
        .collect();
    let fit = loglog_slope(&points)?;
    let mut table = CsvTable::new(&["slope", "intercept", "residual_rms", "n_points"]);
    table.push(vec![
        fmt_float(fit.slope),
        fmt_float(fit.intercept),
        fmt_float(fit.residual_rms),
        fit.n_points.to_string(),
    ]);
    p.emit(&table)?;
    p.plot(|| LinePlot {
        title: format!("slope {:.4}", fit.slope),
        x_label: header[ix].clone(),
        y_label: header[iy].clone(),
        log_x: true,
        log_y: true,
        series: vec![
            Series::new("data", points.clone()),
            Series::new(
                "fit",
                points.iter().map(|&(x, _)| (x, fit.predict(x))).collect(),
            ),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::TempDir;

    fn run_in(dir: &TempDir, args: &[&str]) -> (i32, String) {
        let out = dir.path().join("out.csv");
        let _ = fs::remove_file(&out);
        let mut argv = vec!["doismol".to_string()];
        argv.extend(args.iter().map(|a| a.to_string()));
        argv.push("--out".into());
        argv.push(out.display().to_string());
        let code = run_cli(argv);
        (code, fs::read_to_string(&out).unwrap_or_default())
    }

    fn column(csv: &str, name: &str) -> Vec<f64> {
        let mut lines = csv.lines();
        let idx = lines
            .next()
            .unwrap()
            .split(',')
            .position(|h| h == name)
            .unwrap();
        lines
            .map(|l| l.split(',').nth(idx).unwrap().parse().unwrap())
            .collect()
    }

    #[test]
    fn eigen_table_shape() {
        let dir = TempDir::new().unwrap();
        let (code, csv) = run_in(&dir, &["eigen", "--lambda", "1e9", "--count", "7"]);
        assert_eq!(code, 0);
        assert_eq!(csv.lines().next(), Some("n,alpha,mu,gap"));
        assert_eq!(csv.lines().count(), 8);
        assert!(column(&csv, "gap").iter().all(|&g| g > 0.0));
    }

    #[test]
    fn usage_errors_exit_two() {
        let dir = TempDir::new().unwrap();
        assert_eq!(run_in(&dir, &["eigen"]).0, 2);
        assert_eq!(
            run_in(&dir, &["eigen", "--lambda", "1e9", "--rb", "2"]).0,
            2
        );
        assert_eq!(run_in(&dir, &["mean", "--lambda=-1"]).0, 2);
        assert_eq!(
            run_in(&dir, &["mean", "--lambda", "1e9", "--r0", "1e-4"]).0,
            2
        );
        assert_eq!(run_in(&dir, &["frobnicate"]).0, 2);
        assert_eq!(
            run_in(&dir, &["mc", "--rb", "0.1", "--dt", "1e-3", "--paths", "2"]).0,
            2
        );
        assert_eq!(run_cli(["doismol", "--help"]), 0);
    }

    #[test]
    fn reruns_are_byte_identical() {
        let dir = TempDir::new().unwrap();
        let args = [
            "density", "--lambda", "1e8", "--rb", "1e-2", "--stride", "500",
        ];
        let (code, first) = run_in(&dir, &args);
        assert_eq!(code, 0);
        assert_eq!(run_in(&dir, &args).1, first);
        // 107 radii times the thinned times, plus the header.
        assert_eq!((first.lines().count() - 1) % 107, 0);
        let cdf = ["cdf", "--lambda", "1e8", "--stride", "100"];
        let (code, a) = run_in(&dir, &cdf);
        assert_eq!(code, 0);
        assert_eq!(run_in(&dir, &cdf).1, a);
    }

    #[test]
    fn flags_override_config_file() {
        let dir = TempDir::new().unwrap();
        let cfg = dir.path().join("cfg.json");
        fs::write(&cfg, r#"{"rb": 0.01, "lambda": 1e6, "R": 1.0}"#).unwrap();
        let cfg = cfg.display().to_string();
        let (code, csv) = run_in(&dir, &["mean", "--config", &cfg]);
        assert_eq!(code, 0);
        assert_eq!(column(&csv, "r_b"), vec![0.01]);
        assert_eq!(column(&csv, "lambda"), vec![1e6]);
        let (_, csv) = run_in(&dir, &["mean", "--config", &cfg, "--rb", "0.001"]);
        assert_eq!(column(&csv, "r_b"), vec![0.001]);
        let bad = dir.path().join("bad.json");
        fs::write(&bad, r#"{"radius": 2}"#).unwrap();
        assert_eq!(
            run_in(&dir, &["mean", "--config", &bad.display().to_string()]).0,
            2
        );
    }

    #[test]
    fn mean_matches_library() {
        let dir = TempDir::new().unwrap();
        let (_, csv) = run_in(&dir, &["mean", "--lambda", "1e3", "--rb", "0.1"]);
        let g = Geometry::new(0.1, 1.0, 10.0).unwrap();
        assert_eq!(
            column(&csv, "mean_doi"),
            vec![mean_binding_doi(&g, 1e3, 1.0).unwrap()]
        );
        assert_eq!(
            column(&csv, "mean_smol"),
            vec![mean_binding_smol(&g, 1.0).unwrap()]
        );
    }

    #[test]
    fn slope_recovers_exponent() {
        let dir = TempDir::new().unwrap();
        let data = dir.path().join("data.csv");
        let mut table = CsvTable::new(&["lambda", "norm"]);
        for k in 0..9 {
            let x = 10f64.powf(3.0 + 0.5 * k as f64);
            table.push_floats(&[x, 7.25 * x.powf(-0.5)]);
        }
        table.save(&data).unwrap();
        let data = data.display().to_string();
        let (code, csv) = run_in(&dir, &["slope", "--input", &data]);
        assert_eq!(code, 0);
        assert!((column(&csv, "slope")[0] + 0.5).abs() < 1e-12);
        let (_, csv) = run_in(
            &dir,
            &["slope", "--input", &data, "--x", "norm", "--y", "lambda"],
        );
        assert!((column(&csv, "slope")[0] + 2.0).abs() < 1e-12);
        assert_eq!(
            run_in(&dir, &["slope", "--input", &data, "--x", "nope"]).0,
            2
        );
    }

    #[test]
    fn monte_carlo_and_plots() {
        let dir = TempDir::new().unwrap();
        let svg = dir.path().join("mc.svg").display().to_string();
        let args = [
            "mc", "--rb", "0.1", "--paths", "64", "--seed", "3", "--svg", &svg,
        ];
        let (code, csv) = run_in(&dir, &args);
        assert_eq!(code, 0);
        assert_eq!(column(&csv, "n_paths"), vec![64.0]);
        assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
        assert_eq!(run_in(&dir, &args).1, csv);
        let sweep_svg = dir.path().join("sweep.svg").display().to_string();
        let sweep = [
            "sweep",
            "--lambdas",
            "1e6,1e8",
            "--rbs",
            "1e-2",
            "--stride",
            "500",
            "--svg",
            &sweep_svg,
        ];
        let (code, csv) = run_in(&dir, &sweep);
        assert_eq!(code, 0);
        assert_eq!(csv.lines().count(), 3);
        assert!(fs::metadata(&sweep_svg).unwrap().len() > 0);
    }
}
