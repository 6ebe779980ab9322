//! Command-line front door: every figure/table-style dataset as CSV plus a
//! self-contained SVG line plot rendered from the same data.

use crate::conformable::Order;
use crate::eigenbasis::JBasis;
use crate::error::{Error, Result};
use crate::quantum;
use crate::sturm::{case4_eigensystem, SturmSpec};
use crate::susy::{self, SusySystem};
use crate::transforms::{self, TransformOrder, CATALOG_NAMES};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderingFlag {
    Symmetric,
    Asymmetric,
}

/// Inclusive index range, parsed from `k` or `a..b`.
#[derive(Debug, Clone, Copy)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl std::str::FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if lo == 0 || hi < lo {
            return Err(format!("bad range {s}: need 1 <= lo <= hi"));
        }
        Ok(NRange { lo, hi })
    }
}

impl NRange {
    fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

fn parse_grid(s: &str) -> std::result::Result<usize, String> {
    let g: usize = s.parse().map_err(|e| format!("{e}"))?;
    if g < 16 {
        return Err(format!("grid must be >= 16, got {g}"));
    }
    Ok(g)
}

#[derive(Debug, Parser)]
#[command(name = "conformable", version, about = "Conformable fractional calculus toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Derivative order alpha in (0, 1]
    #[arg(long, global = true, default_value_t = 0.5)]
    pub alpha: f64,

    /// Second order beta (defaults to alpha where it applies)
    #[arg(long, global = true)]
    pub beta: Option<f64>,

    /// Index range, e.g. `3` or `1..5`
    #[arg(long, global = true, default_value = "1..3")]
    pub n: NRange,

    /// Grid points for sampled curves (>= 16)
    #[arg(long, global = true, default_value_t = 512, value_parser = parse_grid)]
    pub grid: usize,

    /// Output directory
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,

    /// Artifact format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Verify against quadrature oracles and fail on mismatch
    #[arg(long, global = true)]
    pub check: bool,

    /// Operator ordering for the susy command
    #[arg(long, global = true, value_enum, default_value_t = OrderingFlag::Symmetric)]
    pub ordering: OrderingFlag,

    /// Case selector: Sturm-Liouville case number, or transform entry name
    #[arg(long, global = true)]
    pub case: Option<String>,

    /// Perturbation shape (linear | step_left | step_right | power:<p>),
    /// or the weight exponent p for the sturm command
    #[arg(long, global = true)]
    pub potential: Option<String>,

    /// Pass/fail tolerance override
    #[arg(long, env = "CONFORMAL_TOL", default_value_t = 1e-6, hide = true)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the eigenbasis functions on a grid
    Basis,
    /// Interior zero positions of the basis functions
    Zeros,
    /// Probability-density moment statistics per level
    Moments,
    /// Series coefficients of x^alpha in the eigenbasis
    Expand,
    /// Sturm-Liouville boundary eigensystem samples
    Sturm,
    /// Closed-form transform catalog vs quadrature
    TransformTable,
    /// One catalog entry evaluated across transform arguments
    TransformEval,
    /// First-order perturbed box states and wall asymmetry
    Perturb,
    /// Phantom trial-potential residual ranking
    Phantom,
    /// Superpotential, partner potential, and energy ladders
    Susy,
}

fn fmt_f(v: f64) -> String {
    // shortest round-trip decimal
    format!("{v}")
}

struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Csv {
    fn to_string(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| fmt_f(*v)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }

    /// Column 0 is x; every further column becomes one polyline.
    fn to_svg(&self) -> String {
        let series: Vec<(String, Vec<(f64, f64)>)> = (1..self.header.len())
            .map(|c| {
                (
                    self.header[c].clone(),
                    self.rows
                        .iter()
                        .filter(|r| r[0].is_finite() && r[c].is_finite())
                        .map(|r| (r[0], r[c]))
                        .collect(),
                )
            })
            .collect();
        svg_plot(&series)
    }
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

/// 800x600 line plot, no external assets, pure function of the data.
pub fn svg_plot(series: &[(String, Vec<(f64, f64)>)]) -> String {
    let (w, h, ml, mr, mt, mb) = (800.0, 600.0, 60.0, 20.0, 20.0, 40.0);
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for (_, pts) in series {
        for &(x, y) in pts {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    if !xmin.is_finite() || xmax <= xmin {
        xmin = 0.0;
        xmax = 1.0;
    }
    if !ymin.is_finite() || ymax <= ymin {
        ymin = 0.0;
        ymax = 1.0;
    }
    let px = |x: f64| ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
    let py = |y: f64| h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"{w}\" height=\"{h}\">"
    );
    let _ = writeln!(s, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<rect x=\"{ml}\" y=\"{mt}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>",
        w - ml - mr,
        h - mt - mb
    );
    for (lab, val) in [("x0", xmin), ("x1", xmax)] {
        let _ = lab;
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            px(val),
            h - mb + 16.0,
            fmt_f(val)
        );
    }
    for val in [ymin, ymax] {
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>",
            ml - 6.0,
            py(val) + 4.0,
            fmt_f(val)
        );
    }
    for (i, (name, pts)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut d = String::new();
        for &(x, y) in pts {
            let _ = write!(d, "{},{} ", px(x), py(y));
        }
        let _ = writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            d.trim_end()
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"13\" fill=\"{color}\">{name}</text>",
            w - mr - 120.0,
            mt + 18.0 * (i + 1) as f64
        );
    }
    s.push_str("</svg>\n");
    s
}

fn emit(out: &Path, stem: &str, csv: &Csv, format: Format) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out).map_err(|e| Error::Io(e.to_string()))?;
    let mut written = Vec::new();
    if matches!(format, Format::Csv | Format::Both) {
        let p = out.join(format!("{stem}.csv"));
        std::fs::write(&p, csv.to_string()).map_err(|e| Error::Io(e.to_string()))?;
        written.push(p);
    }
    if matches!(format, Format::Svg | Format::Both) {
        let p = out.join(format!("{stem}.svg"));
        std::fs::write(&p, csv.to_svg()).map_err(|e| Error::Io(e.to_string()))?;
        written.push(p);
    }
    Ok(written)
}

fn xgrid(points: usize) -> Vec<f64> {
    (0..points).map(|i| i as f64 / (points - 1) as f64).collect()
}

/// Execute the parsed invocation. `Ok(true)` means all requested checks
/// passed (always true when no check applies).
pub fn run(cli: &Cli) -> Result<(bool, Vec<PathBuf>)> {
    if cli.grid < 16 {
        // kept for programmatic construction; the flag parser also rejects this
        return Err(Error::DomainError(format!("--grid must be >= 16, got {}", cli.grid)));
    }
    let ord = Order::new(cli.alpha)?;
    let beta = cli.beta.unwrap_or(cli.alpha);
    let mut all_pass = true;
    let files = match &cli.command {
        Command::Basis => {
            let basis = JBasis::new(ord, cli.n.hi)?;
            let mut header = vec!["x".to_string()];
            header.extend(cli.n.iter().map(|n| format!("J{n}")));
            let mut rows = Vec::new();
            for x in xgrid(cli.grid) {
                let mut row = vec![x];
                for n in cli.n.iter() {
                    row.push(basis.eval(n, x)?);
                }
                rows.push(row);
            }
            emit(&cli.out, "basis", &Csv { header, rows }, cli.format)?
        }
        Command::Zeros => {
            let basis = JBasis::new(ord, cli.n.hi)?;
            let mut rows = Vec::new();
            for n in cli.n.iter() {
                for k in 1..n {
                    rows.push(vec![n as f64, k as f64, basis.zero_position(n, k)?]);
                }
            }
            let header = ["n", "k", "position"].map(String::from).to_vec();
            emit(&cli.out, "zeros", &Csv { header, rows }, cli.format)?
        }
        Command::Moments => {
            let basis = JBasis::new(ord, cli.n.hi)?;
            let header = ["n", "mean", "m2", "m3", "m4", "std_dev", "skewness", "kurtosis"]
                .map(String::from)
                .to_vec();
            let mut rows = Vec::new();
            for n in cli.n.iter() {
                let s = basis.moment_stats(n)?;
                rows.push(vec![
                    n as f64,
                    s.moments[0],
                    s.moments[1],
                    s.moments[2],
                    s.moments[3],
                    s.std_dev,
                    s.skewness,
                    s.kurtosis,
                ]);
            }
            emit(&cli.out, "moments", &Csv { header, rows }, cli.format)?
        }
        Command::Expand => {
            let basis = JBasis::new(ord, cli.n.hi)?;
            let a = cli.alpha;
            let exp = basis.expand(|x: f64| x.powf(a), cli.n.hi, "x^alpha")?;
            let header = ["n", "coefficient", "bessel_cn", "bessel_cn_quadrature", "rel_error"]
                .map(String::from)
                .to_vec();
            let mut rows = Vec::new();
            for n in cli.n.iter() {
                let c = exp.coefficients[n - 1];
                // cross-check the plain Fourier-Bessel integral against quadrature
                let closed = basis.fourier_bessel_cn(a, n)?;
                let z = basis.bessel_zero(n)?;
                let eta = ord.eta();
                let quad = crate::numerics::integrate(
                    |t: f64| t.powf(a) * crate::specfun::bessel_j(eta, z * t).unwrap_or(f64::NAN),
                    crate::numerics::Interval::new(0.0, 1.0)?,
                    crate::numerics::Tolerance::with_abs(1e-12),
                )?
                .value;
                let rel = (closed - quad).abs() / quad.abs().max(1e-300);
                if cli.check && rel > cli.tol {
                    all_pass = false;
                }
                rows.push(vec![n as f64, c, closed, quad, rel]);
            }
            emit(&cli.out, "expand", &Csv { header, rows }, cli.format)?
        }
        Command::Sturm => {
            let p: f64 = match &cli.potential {
                Some(s) => s
                    .parse()
                    .map_err(|_| Error::DomainError(format!("--potential {s}: expected the weight exponent p")))?,
                None => 0.25,
            };
            let spec = SturmSpec::new(cli.alpha, beta, p, false)?;
            let mut header = vec!["x".to_string()];
            header.extend(cli.n.iter().map(|n| format!("y{n}")));
            let mut eigen_rows = Vec::new();
            let mut fns = Vec::new();
            for n in cli.n.iter() {
                let (lambda, y) = case4_eigensystem(&spec, n)?;
                eigen_rows.push(vec![n as f64, lambda]);
                fns.push(y);
            }
            let mut rows = Vec::new();
            for x in xgrid(cli.grid) {
                let mut row = vec![x];
                for y in &fns {
                    row.push(y(x));
                }
                rows.push(row);
            }
            let mut files = emit(&cli.out, "sturm", &Csv { header, rows }, cli.format)?;
            let eig_header = ["n", "lambda"].map(String::from).to_vec();
            files.extend(emit(
                &cli.out,
                "sturm_eigenvalues",
                &Csv { header: eig_header, rows: eigen_rows },
                Format::Csv,
            )?);
            files
        }
        Command::TransformTable => {
            let pairs = [(cli.alpha, beta), (0.75, 0.75), (1.0, 1.0)];
            let s_values = [0.5, 1.0, 2.0, 4.0];
            let report = transforms::verify_catalog(&pairs, &s_values)?;
            let csv_text = transforms::report_to_csv(&report);
            std::fs::create_dir_all(&cli.out).map_err(|e| Error::Io(e.to_string()))?;
            let path = cli.out.join("transform_table.csv");
            std::fs::write(&path, csv_text).map_err(|e| Error::Io(e.to_string()))?;
            if cli.check {
                for row in &report {
                    if !row.flagged && !row.pass {
                        all_pass = false;
                        eprintln!(
                            "FAIL {} {} alpha={} beta={} arg={}: rel {}",
                            row.entry, row.transform, row.alpha, row.beta, row.argument, row.rel_error
                        );
                    }
                }
            }
            vec![path]
        }
        Command::TransformEval => {
            let name = cli.case.as_deref().unwrap_or("exp_decay");
            if !CATALOG_NAMES.contains(&name) {
                return Err(Error::UnknownEntry(name.into()));
            }
            let entry = transforms::table_entry(name)?;
            let tord = TransformOrder::new(cli.alpha, beta)?;
            let tf = entry.time_function(&tord);
            let header =
                ["s", "closed", "quadrature", "rel_error"].map(String::from).to_vec();
            let mut rows = Vec::new();
            for i in 0..16 {
                let s = 0.5 + 0.25 * i as f64;
                let closed = entry.laplace_canonical(&tord, s)?;
                let quad = transforms::conformable_laplace(&tf, &tord, s)?;
                let rel = (closed - quad).abs() / quad.abs().max(1e-300);
                if cli.check && !entry.laplace_flagged() && rel > cli.tol {
                    all_pass = false;
                }
                rows.push(vec![s, closed, quad, rel]);
            }
            emit(&cli.out, &format!("transform_{name}"), &Csv { header, rows }, cli.format)?
        }
        Command::Perturb => {
            let basis = JBasis::new(ord, quantum::DEFAULT_BASIS)?;
            let pert = match cli.potential.as_deref() {
                None | Some("linear") => quantum::Perturbation::linear(1.0),
                Some("step_left") => quantum::Perturbation::step_left(1.0)?,
                Some("step_right") => quantum::Perturbation::step_right(1.0)?,
                Some(s) if s.starts_with("power:") => {
                    let p: f64 = s[6..]
                        .parse()
                        .map_err(|_| Error::DomainError(format!("bad exponent in {s}")))?;
                    quantum::Perturbation::power(1.0, p)
                }
                Some(other) => {
                    return Err(Error::DomainError(format!(
                        "--potential {other}: expected linear | step_left | step_right | power:<p>"
                    )))
                }
            };
            let state = quantum::first_order_state(&basis, &pert, 1, quantum::DEFAULT_BASIS)?;
            let header = ["x", "psi0", "psi1"].map(String::from).to_vec();
            let mut rows = Vec::new();
            for x in xgrid(cli.grid) {
                rows.push(vec![x, basis.eval(1, x)?, state.eval(&basis, x)?]);
            }
            let mut files = emit(&cli.out, "perturb", &Csv { header, rows }, cli.format)?;
            let alphas: Vec<f64> = (1..=20).map(|i| 0.05 * i as f64).collect();
            let scan = quantum::wall_asymmetry_scan(&alphas)?;
            let wall_header =
                ["alpha", "left", "right", "difference"].map(String::from).to_vec();
            let wall_rows = scan
                .rows
                .iter()
                .map(|r| vec![r.alpha, r.left_correction, r.right_correction, r.difference])
                .collect();
            files.extend(emit(
                &cli.out,
                "wall_asymmetry",
                &Csv { header: wall_header, rows: wall_rows },
                Format::Csv,
            )?);
            files
        }
        Command::Phantom => {
            let fits = quantum::phantom_potential_ranking(ord)?;
            let header = ["exponent", "lambda_opt", "l2_residual", "max_residual", "baseline_l2"]
                .map(String::from)
                .to_vec();
            let rows = fits
                .iter()
                .map(|f| {
                    vec![
                        f.trial.exponent(cli.alpha),
                        f.lambda_opt,
                        f.l2_residual,
                        f.max_residual,
                        f.baseline_l2,
                    ]
                })
                .collect();
            emit(&cli.out, "phantom", &Csv { header, rows }, cli.format)?
        }
        Command::Susy => {
            let sys = Arc::new(match cli.ordering {
                OrderingFlag::Symmetric => SusySystem::symmetric_box(ord)?,
                OrderingFlag::Asymmetric => SusySystem::asymmetric_box(ord)?,
            });
            let header = ["x", "W", "V1", "V2", "theta0"].map(String::from).to_vec();
            let th0 = sys.partner_state(0)?;
            let mut rows = Vec::new();
            for x in xgrid(cli.grid) {
                if x <= 0.01 || x >= 0.99 {
                    continue; // W and V2 diverge at the walls
                }
                rows.push(vec![x, sys.w(x)?, sys.v1(x)?, sys.v2(x)?, th0.eval(x)?]);
            }
            let mut files = emit(&cli.out, "susy", &Csv { header, rows }, cli.format)?;
            let lad_header = ["n", "lambda1", "lambda2"].map(String::from).to_vec();
            let mut lad_rows = Vec::new();
            for n in 0..=4 {
                lad_rows.push(vec![n as f64, sys.ladder1(n)?, sys.ladder2(n)?]);
            }
            files.extend(emit(
                &cli.out,
                "susy_ladders",
                &Csv { header: lad_header, rows: lad_rows },
                Format::Csv,
            )?);
            if cli.check {
                let report = susy::verify_isospectral(&sys, 2)?;
                if report.worst > cli.tol.max(1e-6) {
                    all_pass = false;
                    eprintln!("isospectrality residual {}", report.worst);
                }
            }
            files
        }
    };
    Ok((all_pass, files))
}
