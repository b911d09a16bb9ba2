//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on usage or input errors, 3 when a measurement
//! fails (curve too close, resolution exhausted, oracle disagreement, …).

pub mod json;
pub mod plot;
pub mod registry;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::classify::{classify, explain, render_value, ClassifyConfig};
use crate::complex_json::{to_value as cval, vec_to_value};
use crate::curve::{default_nodes, valence, winding_number, winding_profile, BoundaryCurve};
use crate::error::{Error, Result};
use crate::factor::{
    bdu_crosscheck_with, bdu_factor, default_fit_degree, fit_through_blaschke, tc_inner_part,
};
use crate::opspace::{
    commutant_basis, density_witness, double_commutant_basis, fejer_polynomial,
    fejer_supnorm_check, fejer_wot_gap, gram_residual, malmquist_basis, model_expand,
    polynomial_algebra_dim, toeplitz_truncation, wold_components, wold_reconstruct, RANK_TOL,
};
use crate::symbol::{
    lower, parse_symbol, BlaschkeProduct, SymbolExpr, TaylorSymbol, DEFAULT_ORDER, NOISE_FLOOR,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

/// Symbol source and output options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Symbol in the DSL, e.g. "(z+0.5)^2" or "blaschke[0.5, -0.5]"
    #[arg(long, conflicts_with_all = ["coeffs", "example"])]
    pub symbol: Option<String>,
    /// JSON file holding a TaylorSymbol {"label","order","coeffs"}
    #[arg(long, conflicts_with = "example")]
    pub coeffs: Option<PathBuf>,
    /// Named example (see the `examples` subcommand)
    #[arg(long)]
    pub example: Option<String>,
    /// Truncation order N (default depends on the subcommand)
    #[arg(long)]
    pub order: Option<usize>,
    /// Output format [default: json, svg for plot]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(
    name = "hardylab",
    version,
    about = "Commutants of analytic Toeplitz operators, numerically"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal and double commutant verdicts with the rules that fired [order 256]
    Classify {
        #[command(flatten)]
        common: Common,
        /// Polar grid size K of the winding profile
        #[arg(long, default_value_t = 24)]
        grid: usize,
        /// Boundary nodes M for the Jordan test
        #[arg(long, default_value_t = 4096)]
        nodes: usize,
        /// Krylov depth m of the density witness
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Extra image point re,im whose winding is reported (repeatable)
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        at: Vec<Complex64>,
    },
    /// Winding number of the boundary curve around a point [order 256]
    Winding {
        #[command(flatten)]
        common: Common,
        /// Point re,im
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        at: Complex64,
        /// Initial boundary nodes M (power of two, at least 2N)
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// Number of preimages of a point, with the root-count cross-check [order 256]
    Valence {
        #[command(flatten)]
        common: Common,
        /// Point re,im
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        at: Complex64,
    },
    /// Windings over a K×K polar grid of the disk [order 256]
    Profile {
        #[command(flatten)]
        common: Common,
        /// Grid size K
        #[arg(long, default_value_t = 24)]
        grid: usize,
    },
    /// Factorization φ = h(z^k), and the inner part of φ − φ(λ) with --at [order 256]
    Factor {
        #[command(flatten)]
        common: Common,
        /// Grid size K of the winding cross-check
        #[arg(long, default_value_t = 24)]
        grid: usize,
        /// Point λ re,im of the disk for the inner part of φ − φ(λ)
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        at: Option<Complex64>,
    },
    /// Least-squares fit φ ≈ h(B) through a finite Blaschke product [order 256]
    Fit {
        #[command(flatten)]
        common: Common,
        /// Zeros of B as "a1re,a1im;a2re,a2im;…"
        #[arg(long, allow_hyphen_values = true)]
        blaschke: String,
        /// Degree of h [default: ceil(deg φ / order B) + 2]
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Commutant and double commutant of the N×N Toeplitz compression [order 12, at most 24]
    Commutant {
        #[command(flatten)]
        common: Common,
    },
    /// Vector orthogonal to 1, φ, …, φ^m in C^N [order 16]
    Density {
        #[command(flatten)]
        common: Common,
        /// Krylov depth m
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Components F_1 … F_n of f = Σ z^j F_{j+1}(z^n) [order 256]
    Wold {
        #[command(flatten)]
        common: Common,
        /// Number of components n
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Féjér mean σ_n(h), its sup-norm bound and the kernel gap at --at [order 256]
    Fejer {
        #[command(flatten)]
        common: Common,
        /// Index n of the Féjér mean
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Point a re,im for the gap |σ_n(h)(a) − h(a)|
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        at: Option<Complex64>,
    },
    /// Takenaka–Malmquist basis of H² ⊖ B H², and the model expansion of a symbol if one is given [order 64]
    Malmquist {
        #[command(flatten)]
        common: Common,
        /// Zeros of B as "a1re,a1im;a2re,a2im;…"
        #[arg(long, allow_hyphen_values = true)]
        blaschke: String,
        /// Depth m of the model expansion
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// SVG of the boundary curve over a raster coloured by winding number [order 256]
    Plot {
        #[command(flatten)]
        common: Common,
        /// Raster resolution
        #[arg(long, default_value_t = plot::DEFAULT_RASTER)]
        grid: usize,
        /// Boundary nodes M
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// List the named examples
    Examples {
        #[command(flatten)]
        common: Common,
    },
}

/// Parses `re,im` (or a bare real number).
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|_| format!("`{s}` is not a number pair re,im"))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("`{s}` is not a number pair re,im")),
    }
}

/// Parses `a1re,a1im;a2re,a2im;…` into a Blaschke product.
pub fn parse_blaschke(s: &str) -> Result<BlaschkeProduct> {
    let zeros = s
        .split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_complex)
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(Error::InvalidArgument)?;
    if zeros.is_empty() {
        return Err(Error::InvalidArgument(
            "--blaschke needs at least one zero".into(),
        ));
    }
    BlaschkeProduct::from_zeros(zeros)
}

struct Loaded {
    symbol: TaylorSymbol,
    probes: Vec<Complex64>,
}

fn load(c: &Common, default_order: usize) -> Result<Loaded> {
    let order = c.order.unwrap_or(default_order);
    let from_dsl = |text: &str, label: &str| -> Result<TaylorSymbol> {
        Ok(lower(&parse_symbol(text)?, order)?.with_label(label))
    };
    if let Some(text) = &c.symbol {
        return Ok(Loaded {
            symbol: from_dsl(text, text)?,
            probes: Vec::new(),
        });
    }
    if let Some(path) = &c.coeffs {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        let s: TaylorSymbol = serde_json::from_str(&raw)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        let s = if c.order.is_some() {
            s.resized(order)
        } else {
            s
        };
        return Ok(Loaded {
            symbol: s,
            probes: Vec::new(),
        });
    }
    if let Some(name) = &c.example {
        let e = registry::resolve(name).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown example `{name}`; run `hardylab examples`"))
        })?;
        return Ok(Loaded {
            symbol: from_dsl(&e.dsl, &e.name)?,
            probes: e.probes,
        });
    }
    Err(Error::InvalidArgument(
        "one of --symbol, --coeffs or --example is required".into(),
    ))
}

fn poly_string(s: &TaylorSymbol) -> String {
    SymbolExpr::polynomial(s.coeffs(), NOISE_FLOOR).to_string()
}

/// Generic `key = value` rendering of a JSON report.
fn text_of(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| format!("{k} = {}\n", render_value(x)))
            .collect(),
        other => format!("{}\n", render_value(other)),
    }
}

enum Report {
    Structured { json: Value, text: Option<String> },
    Svg(String),
}

fn structured(json: Value) -> Report {
    Report::Structured { json, text: None }
}

fn execute(cmd: &Command) -> Result<(Report, Format)> {
    let common = match cmd {
        Command::Classify { common, .. }
        | Command::Winding { common, .. }
        | Command::Valence { common, .. }
        | Command::Profile { common, .. }
        | Command::Factor { common, .. }
        | Command::Fit { common, .. }
        | Command::Commutant { common }
        | Command::Density { common, .. }
        | Command::Wold { common, .. }
        | Command::Fejer { common, .. }
        | Command::Malmquist { common, .. }
        | Command::Plot { common, .. }
        | Command::Examples { common } => common,
    };
    let is_plot = matches!(cmd, Command::Plot { .. });
    let format = common
        .format
        .unwrap_or(if is_plot { Format::Svg } else { Format::Json });
    if format == Format::Svg && !is_plot {
        return Err(Error::InvalidArgument(
            "--format svg is only available for plot".into(),
        ));
    }

    let report = match cmd {
        Command::Classify {
            common,
            grid,
            nodes,
            depth,
            at,
        } => {
            let l = load(common, DEFAULT_ORDER)?;
            let mut probes = l.probes;
            probes.extend(at.iter().copied());
            let cfg = ClassifyConfig {
                grid: *grid,
                jordan_nodes: *nodes,
                witness_depth: *depth,
                probes,
                ..Default::default()
            };
            let v = classify(&l.symbol, &cfg)?;
            Report::Structured {
                text: Some(explain(&v)),
                json: serde_json::to_value(&v).expect("verdict serializes"),
            }
        }
        Command::Winding { common, at, nodes } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let m = nodes.unwrap_or_else(|| default_nodes(s.order()));
            let n = winding_number(&BoundaryCurve::from_symbol(&s, m)?, *at)?;
            structured(json!(n))
        }
        Command::Valence { common, at } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            structured(json!(valence(&s, *at)?))
        }
        Command::Profile { common, grid } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let p = winding_profile(&s, *grid)?;
            let text: String = p
                .entries
                .iter()
                .map(|e| {
                    format!(
                        "{}\t{}\t{}\n",
                        render_value(&cval(e.a)),
                        render_value(&cval(e.w)),
                        e.n
                    )
                })
                .collect();
            Report::Structured {
                json: serde_json::to_value(&p).expect("profile serializes"),
                text: Some(text),
            }
        }
        Command::Factor { common, grid, at } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let f = bdu_factor(&s)?;
            let x = bdu_crosscheck_with(&s, *grid)?;
            let mut v = json!({
                "k": f.k,
                "h": poly_string(&f.h),
                "residual": f.residual,
                "crosscheck": x,
                "bdu": f,
            });
            if let Some(lambda) = at {
                let b = tc_inner_part(&s, *lambda)?;
                v["inner"] = serde_json::to_value(&b).expect("inner part serializes");
            }
            let mut text = format!(
                "k = {}\nh = {}\nresidual = {}\n",
                f.k,
                poly_string(&f.h),
                f.residual
            );
            text.push_str(&format!(
                "k_gcd = {}, k_wind = {}, agree = {}\n",
                x.k_gcd, x.k_wind, x.agree
            ));
            Report::Structured {
                json: v,
                text: Some(text),
            }
        }
        Command::Fit {
            common,
            blaschke,
            degree,
        } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let b = parse_blaschke(blaschke)?;
            let d = degree.unwrap_or_else(|| default_fit_degree(&s, &b));
            let f = fit_through_blaschke(&s, &b, d)?;
            let mut v = serde_json::to_value(&f).expect("fit serializes");
            v["h_poly"] = json!(poly_string(&f.h));
            structured(v)
        }
        Command::Commutant { common } => {
            let n = common.order.unwrap_or(12);
            let s = load(common, n)?.symbol;
            let t = toeplitz_truncation(&s, n)?;
            let c = commutant_basis(&t, RANK_TOL)?;
            let dc = double_commutant_basis(&c.basis, RANK_TOL)?;
            let pa = polynomial_algebra_dim(&t);
            structured(json!({
                "n": n,
                "commutant_dim": c.dim(),
                "commutant_singular_tail": c.tail(c.dim() + 2),
                "double_commutant_dim": dc.dim(),
                "double_commutant_singular_tail": dc.tail(dc.dim() + 2),
                "polynomial_algebra_dim": pa,
                "double_commutant_is_polynomial_algebra": dc.dim() == pa,
            }))
        }
        Command::Density { common, depth } => {
            let n = common.order.unwrap_or(16);
            let s = load(common, n)?.symbol;
            structured(
                serde_json::to_value(density_witness(&s, n, *depth)?).expect("witness serializes"),
            )
        }
        Command::Wold { common, degree } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let parts = wold_components(&s, *degree)?;
            let exact = wold_reconstruct(&parts, s.order()).coeffs() == s.coeffs();
            let text: String = parts
                .iter()
                .enumerate()
                .map(|(j, p)| format!("F{} = {}\n", j + 1, poly_string(p)))
                .chain(std::iter::once(format!("reconstruction exact = {exact}\n")))
                .collect();
            Report::Structured {
                json: json!({"n": degree, "components": parts, "reconstruction_exact": exact}),
                text: Some(text),
            }
        }
        Command::Fejer { common, degree, at } => {
            let h = load(common, DEFAULT_ORDER)?.symbol;
            let sigma = fejer_polynomial(&h, *degree);
            let check = fejer_supnorm_check(&h, *degree);
            let mut v = json!({"n": degree, "fejer": sigma, "supnorm": check});
            if let Some(a) = at {
                let one = TaylorSymbol::constant(Complex64::new(1.0, 0.0), 1);
                v["wot_gap"] = json!(fejer_wot_gap(&h, *degree, *a, &one)?);
                v["at"] = cval(*a);
            }
            structured(v)
        }
        Command::Malmquist {
            common,
            blaschke,
            depth,
        } => {
            let b = parse_blaschke(blaschke)?;
            let degree = common.order.unwrap_or(64);
            let e = malmquist_basis(&b, degree)?;
            let mut v = json!({
                "blaschke": b,
                "degree": degree,
                "gram_residual": gram_residual(&e),
                "vectors": e.iter().map(|x| vec_to_value(x)).collect::<Vec<_>>(),
            });
            if common.symbol.is_some() || common.coeffs.is_some() || common.example.is_some() {
                let f = load(common, degree)?.symbol;
                v["expansion"] = serde_json::to_value(model_expand(&f, &b, *depth)?)
                    .expect("expansion serializes");
            }
            structured(v)
        }
        Command::Plot {
            common,
            grid,
            nodes,
        } => {
            let s = load(common, DEFAULT_ORDER)?.symbol;
            let m = nodes.unwrap_or_else(|| default_nodes(s.order()));
            let curve = BoundaryCurve::from_symbol(&s, m)?;
            if format == Format::Svg {
                Report::Svg(plot::plot_svg(&curve, *grid))
            } else {
                let (cells, bbox) = plot::winding_raster(&curve, *grid);
                let rows: Vec<Vec<Option<i64>>> = cells.chunks(*grid).map(|r| r.to_vec()).collect();
                structured(json!({"bbox": [bbox.0, bbox.1, bbox.2, bbox.3], "rows": rows}))
            }
        }
        Command::Examples { .. } => {
            let text: String = registry::LISTING
                .iter()
                .map(|(n, d)| format!("{n:<18}{d}\n"))
                .collect();
            let list: Vec<Value> = registry::LISTING
                .iter()
                .map(|(n, d)| json!({"name": n, "symbol": d}))
                .collect();
            Report::Structured {
                json: Value::Array(list),
                text: Some(text),
            }
        }
    };
    Ok((report, format))
}

fn render(report: Report, format: Format) -> String {
    match (report, format) {
        (Report::Svg(s), _) => s,
        (Report::Structured { json: v, .. }, Format::Json) => json::to_string(&v),
        (Report::Structured { json: v, text }, _) => text.unwrap_or_else(|| text_of(&v)),
    }
}

/// Runs the command line `argv` (program name first). Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let common_out = match &cli.command {
        Command::Classify { common, .. }
        | Command::Winding { common, .. }
        | Command::Valence { common, .. }
        | Command::Profile { common, .. }
        | Command::Factor { common, .. }
        | Command::Fit { common, .. }
        | Command::Commutant { common }
        | Command::Density { common, .. }
        | Command::Wold { common, .. }
        | Command::Fejer { common, .. }
        | Command::Malmquist { common, .. }
        | Command::Plot { common, .. }
        | Command::Examples { common } => common.out.clone(),
    };
    match execute(&cli.command) {
        Ok((report, format)) => {
            let text = render(report, format);
            match common_out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        let _ = writeln!(err, "error: {}: {e}", path.display());
                        return 2;
                    }
                }
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_measurement_failure() {
                3
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hardylab").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parses_complex_pairs() {
        assert_eq!(parse_complex("0,0").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(
            parse_complex("-0.5, 1e-3").unwrap(),
            Complex64::new(-0.5, 1e-3)
        );
        assert_eq!(parse_complex("1.21").unwrap(), Complex64::new(1.21, 0.0));
        assert!(parse_complex("a,b").is_err());
        assert!(parse_complex("1,2,3").is_err());
        let b = parse_blaschke("0.5,0;-0.5,0").unwrap();
        assert_eq!(b.order(), 2);
        assert!(parse_blaschke("1.5,0").is_err());
    }

    #[test]
    fn winding_example() {
        let (code, out, _) = run_str(&["winding", "--symbol", "(z+0.5)^2", "--at", "0,0"]);
        assert_eq!((code, out.as_str()), (0, "2\n"));
        let (code, out, _) = run_str(&[
            "winding",
            "--symbol",
            "(z+0.5)^2",
            "--at",
            "1.21,0",
            "--format",
            "text",
        ]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_str(&["winding", "--symbol", "z^^2", "--at", "0,0"]).0,
            2
        );
        assert_eq!(run_str(&["winding", "--at", "0,0"]).0, 2);
        assert_eq!(run_str(&["nosuch"]).0, 2);
        // a point on the unit circle is on the curve of the identity
        let (code, _, err) = run_str(&["winding", "--symbol", "z", "--at", "1,0"]);
        assert_eq!(code, 3, "{err}");
        assert_eq!(
            run_str(&["commutant", "--symbol", "z", "--order", "30"]).0,
            2
        );
        assert_eq!(
            run_str(&["profile", "--symbol", "z", "--format", "svg"]).0,
            2
        );
        // z^2 + z^4 - 0 vanishes at ±i
        assert_eq!(
            run_str(&["factor", "--example", "zsquare-plus-z4", "--at", "0,0"]).0,
            3
        );
        let (code, out, _) = run_str(&["winding", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("--at") && out.contains("--nodes"));
    }

    #[test]
    fn classify_json() {
        let (code, out, err) = run_str(&["classify", "--symbol", "(z+0.5)^2", "--format", "json"]);
        assert_eq!(code, 0, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dcp"], "No");
        assert_eq!(v["mcp"], "No");
        assert!(v["rules"]
            .as_array()
            .unwrap()
            .iter()
            .any(|r| r["id"] == "R3"));
    }

    #[test]
    fn examples_listing() {
        let (code, out, _) = run_str(&["examples", "--format", "text"]);
        assert_eq!(code, 0);
        for name in [
            "identity",
            "halfshift",
            "cardioid",
            "power:n",
            "blaschke:[...]",
            "zsquare-plus-z4",
        ] {
            assert!(out.contains(name), "{name}");
        }
    }

    #[test]
    fn every_subcommand_runs() {
        let cases: &[&[&str]] = &[
            &["valence", "--example", "cardioid", "--at", "0,0"],
            &["profile", "--example", "halfshift", "--grid", "8"],
            &["factor", "--example", "zsquare-plus-z4", "--at", "0.5,0"],
            &[
                "fit",
                "--example",
                "power:6",
                "--blaschke",
                "0,0;0,0;0,0",
                "--degree",
                "2",
            ],
            &["commutant", "--example", "power:2", "--order", "4"],
            &["density", "--example", "cardioid"],
            &[
                "wold",
                "--symbol",
                "1+z+z^2+z^3",
                "--degree",
                "2",
                "--format",
                "text",
            ],
            &["fejer", "--symbol", "z", "--degree", "3", "--at", "0.5,0"],
            &[
                "malmquist",
                "--blaschke",
                "0,0;0.5,0",
                "--order",
                "32",
                "--symbol",
                "1",
            ],
            &["plot", "--example", "identity", "--grid", "20"],
            &[
                "plot",
                "--example",
                "identity",
                "--grid",
                "10",
                "--format",
                "json",
            ],
        ];
        for args in cases {
            let (code, out, err) = run_str(args);
            assert_eq!(code, 0, "{args:?}: {err}");
            assert!(!out.is_empty());
        }
    }

    #[test]
    fn commutant_report() {
        let (_, out, _) = run_str(&["commutant", "--example", "power:2", "--order", "4"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["commutant_dim"], 8);
        assert_eq!(v["double_commutant_dim"], 2);
        assert_eq!(v["polynomial_algebra_dim"], 2);
    }
}
