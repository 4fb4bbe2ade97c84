//! `trigon` — evaluate, verify, and certify strengthened Euler inequalities
//! for triangles in Euclidean, spherical, and hyperbolic geometry.
//!
//! Exit codes are a stable contract:
//! `0` success / holds / proven, `1` violated / refuted / check failed,
//! `2` inconclusive, `64` usage error, `65` invalid triangle data.

use clap::{Parser, Subcommand, ValueEnum};

use trigon::certify::{certify_region, CertifyOpts, CertifyStatus, SideBox};
use trigon::chains::{evaluate_chain, ChainId, Verdict, DEFAULT_TOL_REL};
use trigon::error::{Result, TrigonError};
use trigon::geometry::{core_quantities, validate_triangle, GeometryKind, Triangle};
use trigon::oracles;
use trigon::report;
use trigon::search::{comparability_scan, minimize_gap, ComparabilityRelation, SearchOpts, COMPARE_THRESHOLD};

fn parse_geometry(s: &str) -> std::result::Result<GeometryKind, String> {
    GeometryKind::parse(s).ok_or_else(|| {
        format!("unknown geometry '{s}' (use euclidean, spherical, hyperbolic, or e/s/h)")
    })
}

fn parse_chain(s: &str) -> std::result::Result<ChainId, String> {
    ChainId::parse(s).map_err(|e| e.to_string())
}

/// A `SIDE=VALUE` constraint for `sweep --fix`, e.g. `c=2`.
#[derive(Debug, Clone, Copy)]
struct FixedSide {
    dim: usize,
    value: f64,
}

fn parse_fix(s: &str) -> std::result::Result<FixedSide, String> {
    let (name, val) = s
        .split_once('=')
        .ok_or_else(|| "expected SIDE=VALUE, e.g. c=2".to_string())?;
    let dim = match name.trim() {
        "a" => 0,
        "b" => 1,
        "c" => 2,
        other => return Err(format!("unknown side '{other}' (use a, b, or c)")),
    };
    let value: f64 = val
        .trim()
        .parse()
        .map_err(|e| format!("bad value '{val}': {e}"))?;
    Ok(FixedSide { dim, value })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "trigon",
    version,
    about = "Strengthened Euler inequalities for Euclidean, spherical, and hyperbolic triangles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the core quantities of one triangle (s-values, B, Bbar, ratio, radii)
    Eval {
        /// Geometry: euclidean, spherical, hyperbolic (or e/s/h)
        #[arg(long, value_parser = parse_geometry)]
        geometry: GeometryKind,
        /// Side lengths a b c
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
        sides: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Evaluate an inequality chain term by term at one triangle
    Chain {
        /// Chain identifier, e.g. euc_orig, gen, hyp_sym_tail
        #[arg(long = "id", value_parser = parse_chain)]
        id: ChainId,
        /// Geometry override; defaults to the chain's natural geometry
        #[arg(long, value_parser = parse_geometry)]
        geometry: Option<GeometryKind>,
        /// Side lengths a b c
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
        sides: Vec<f64>,
        /// Relative tolerance for adjacent-gap verdicts
        #[arg(long, default_value_t = DEFAULT_TOL_REL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the structural identities and sign laws at one triangle
    Oracle {
        #[arg(long, value_parser = parse_geometry)]
        geometry: GeometryKind,
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
        sides: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Prove or refute a chain gap over a box of side lengths
    Certify {
        #[arg(long, value_parser = parse_chain)]
        chain: ChainId,
        /// Index of the larger term
        #[arg(long)]
        i: usize,
        /// Index of the smaller term (must exceed i)
        #[arg(long)]
        j: usize,
        /// Range LO HI for side a
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        box_a: Vec<f64>,
        /// Range LO HI for side b
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        box_b: Vec<f64>,
        /// Range LO HI for side c
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        box_c: Vec<f64>,
        #[arg(long, value_parser = parse_geometry)]
        geometry: Option<GeometryKind>,
        /// Gaps down to -tol still count as holding
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        #[arg(long, default_value_t = 64)]
        max_depth: u32,
        #[arg(long, default_value_t = 2_000_000)]
        max_boxes: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Numerically minimize the difference term_i - term_j over a side domain
    Search {
        #[arg(long, value_parser = parse_chain)]
        chain: ChainId,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Range LO HI for side a
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_a: Vec<f64>,
        /// Range LO HI for side b
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_b: Vec<f64>,
        /// Range LO HI for side c
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_c: Vec<f64>,
        #[arg(long, value_parser = parse_geometry)]
        geometry: Option<GeometryKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 60)]
        grid_n: usize,
        #[arg(long, default_value_t = 200)]
        refine_iters: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classify the order relation between two chain terms over a domain
    Compare {
        #[arg(long, value_parser = parse_chain)]
        chain: ChainId,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Range LO HI for side a
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_a: Vec<f64>,
        /// Range LO HI for side b
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_b: Vec<f64>,
        /// Range LO HI for side c
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        domain_c: Vec<f64>,
        #[arg(long, value_parser = parse_geometry)]
        geometry: Option<GeometryKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 60)]
        grid_n: usize,
        #[arg(long, default_value_t = 200)]
        refine_iters: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Sweep a chain over a 2-D side grid and emit CSV on stdout
    Sweep {
        #[arg(long, value_parser = parse_chain)]
        chain: ChainId,
        #[arg(long, value_parser = parse_geometry)]
        geometry: Option<GeometryKind>,
        /// Grid points per swept axis (at least 2)
        #[arg(long, default_value_t = 40)]
        grid: usize,
        /// Fix one side, e.g. --fix c=2; the other two sides are swept
        #[arg(long, value_parser = parse_fix, value_name = "SIDE=VALUE")]
        fix: FixedSide,
        /// Range LO HI for both swept sides (default: the geometry's sampling range)
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        range: Option<Vec<f64>>,
        #[arg(long, default_value_t = DEFAULT_TOL_REL)]
        tol: f64,
    },
    /// Recompute the recorded reference values and report agreement
    Repro {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn resolve_kind(chain: ChainId, explicit: Option<GeometryKind>) -> GeometryKind {
    explicit.unwrap_or_else(|| chain.default_kind())
}

fn triple(v: &[f64]) -> [f64; 3] {
    [v[0], v[1], v[2]]
}

fn pair(v: &[f64]) -> (f64, f64) {
    (v[0], v[1])
}

struct OracleCheck {
    name: &'static str,
    value: f64,
    pass: bool,
}

/// Run every structural check that applies to the triangle's geometry.
fn oracle_checks(t: &Triangle) -> Result<Vec<OracleCheck>> {
    let mut out = Vec::new();
    let (x, y, z) = oracles::lemma1_transfer(t);
    let min_slack = (x + y - z).min(x + z - y).min(y + z - x);
    out.push(OracleCheck {
        name: "transfer_triple_valid",
        value: min_slack,
        pass: oracles::transfer_is_valid_euclidean(t),
    });
    let (diff, ok) = oracles::lemma2_sign_check(t);
    out.push(OracleCheck {
        name: "b_vs_bbar_sign",
        value: diff,
        pass: ok,
    });
    let scale = 1.0 + x.abs() + y.abs() + z.abs();
    let psb = oracles::prop_sum_bound(t);
    let psb_pass = match t.kind() {
        GeometryKind::Euclidean => psb.abs() <= 1e-10 * scale,
        GeometryKind::Hyperbolic => psb >= -1e-10 * scale,
        GeometryKind::Spherical => psb <= 1e-10 * scale,
    };
    out.push(OracleCheck {
        name: "sum_bound_sign",
        value: psb,
        pass: psb_pass,
    });
    if t.kind() == GeometryKind::Euclidean {
        let r = oracles::ravi_decompose(t.a(), t.b(), t.c())?;
        let resid = oracles::ravi_identity_residual(r.x, r.y, r.z)?;
        out.push(OracleCheck {
            name: "ravi_identity_residual",
            value: resid,
            pass: resid.abs() <= 1e-10,
        });
        let schur = oracles::schur_like_value(r.x, r.y, r.z)?;
        out.push(OracleCheck {
            name: "schur_like_nonneg",
            value: schur,
            pass: schur >= -1e-12 * scale,
        });
    } else {
        let r1 = oracles::prop_product_identity_residual(t)?;
        out.push(OracleCheck {
            name: "product_identity_residual",
            value: r1,
            pass: r1.abs() <= 1e-10,
        });
        let r2 = oracles::sum_factorization_residual(t.kind(), t.a(), t.b(), t.c())?;
        out.push(OracleCheck {
            name: "sum_factorization_residual",
            value: r2,
            pass: r2.abs() <= 1e-10,
        });
    }
    Ok(out)
}

fn oracle_json(t: &Triangle, checks: &[OracleCheck]) -> String {
    let body: Vec<String> = checks
        .iter()
        .map(|c| {
            format!(
                "{{\"name\":\"{}\",\"value\":{},\"pass\":{}}}",
                c.name,
                report::fmt_f64(c.value),
                c.pass
            )
        })
        .collect();
    let all = checks.iter().all(|c| c.pass);
    format!(
        "{{\"geometry\":\"{}\",\"sides\":[{},{},{}],\"checks\":[{}],\"all_pass\":{}}}\n",
        t.kind().as_str(),
        report::fmt_f64(t.a()),
        report::fmt_f64(t.b()),
        report::fmt_f64(t.c()),
        body.join(","),
        all
    )
}

fn oracle_table(t: &Triangle, checks: &[OracleCheck]) -> String {
    let mut out = format!(
        "geometry  {}\nsides     a={}  b={}  c={}\n\n  check                       value                    status\n",
        t.kind(),
        report::fmt_f64(t.a()),
        report::fmt_f64(t.b()),
        report::fmt_f64(t.c())
    );
    for c in checks {
        out.push_str(&format!(
            "  {:<26}  {:>23}  {}\n",
            c.name,
            report::fmt_f64(c.value),
            if c.pass { "pass" } else { "FAIL" }
        ));
    }
    let all = checks.iter().all(|c| c.pass);
    out.push_str(&format!(
        "\n{}\n",
        if all { "all checks pass" } else { "some checks FAILED" }
    ));
    out
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Eval {
            geometry,
            sides,
            format,
        } => {
            let s = triple(&sides);
            let t = validate_triangle(geometry, s[0], s[1], s[2])?;
            let q = core_quantities(&t);
            match format {
                Format::Json => print!("{}", report::core_json(&t, &q)),
                Format::Table => print!("{}", report::core_table(&t, &q)),
            }
            Ok(0)
        }
        Cmd::Chain {
            id,
            geometry,
            sides,
            tol,
            format,
        } => {
            let kind = resolve_kind(id, geometry);
            id.check_kind(kind)?;
            let s = triple(&sides);
            let t = validate_triangle(kind, s[0], s[1], s[2])?;
            let r = evaluate_chain(id, &t, tol)?;
            match format {
                Format::Json => print!("{}", report::chain_report_json(&r)),
                Format::Table => print!("{}", report::chain_report_table(&r)),
            }
            Ok(match r.verdict {
                Verdict::Holds => 0,
                Verdict::Violated { .. } => 1,
            })
        }
        Cmd::Oracle {
            geometry,
            sides,
            format,
        } => {
            let s = triple(&sides);
            let t = validate_triangle(geometry, s[0], s[1], s[2])?;
            let checks = oracle_checks(&t)?;
            let all = checks.iter().all(|c| c.pass);
            match format {
                Format::Json => print!("{}", oracle_json(&t, &checks)),
                Format::Table => print!("{}", oracle_table(&t, &checks)),
            }
            Ok(if all { 0 } else { 1 })
        }
        Cmd::Certify {
            chain,
            i,
            j,
            box_a,
            box_b,
            box_c,
            geometry,
            tol,
            max_depth,
            max_boxes,
            format,
        } => {
            let kind = resolve_kind(chain, geometry);
            let sbox = SideBox::new(kind, pair(&box_a), pair(&box_b), pair(&box_c))?;
            let opts = CertifyOpts {
                tol,
                max_depth,
                max_boxes,
                ..CertifyOpts::default()
            };
            let cert = certify_region(chain, &sbox, i, j, &opts)?;
            match format {
                Format::Json => print!("{}", report::certificate_json(&cert)),
                Format::Table => print!("{}", report::certificate_table(&cert)),
            }
            Ok(match cert.status {
                CertifyStatus::Proven => 0,
                CertifyStatus::Refuted { .. } => 1,
                CertifyStatus::Inconclusive { .. } => 2,
            })
        }
        Cmd::Search {
            chain,
            i,
            j,
            domain_a,
            domain_b,
            domain_c,
            geometry,
            seed,
            grid_n,
            refine_iters,
            format,
        } => {
            let kind = resolve_kind(chain, geometry);
            let domain = [pair(&domain_a), pair(&domain_b), pair(&domain_c)];
            let opts = SearchOpts {
                seed,
                grid_n,
                refine_iters,
            };
            let r = minimize_gap(chain, kind, i, j, domain, &opts)?;
            match format {
                Format::Json => print!("{}", report::search_json(chain, kind, i, j, &r)),
                Format::Table => print!("{}", report::search_table(chain, kind, i, j, &r)),
            }
            Ok(if r.best_value < -COMPARE_THRESHOLD { 1 } else { 0 })
        }
        Cmd::Compare {
            chain,
            i,
            j,
            domain_a,
            domain_b,
            domain_c,
            geometry,
            seed,
            grid_n,
            refine_iters,
            format,
        } => {
            let kind = resolve_kind(chain, geometry);
            let domain = [pair(&domain_a), pair(&domain_b), pair(&domain_c)];
            let opts = SearchOpts {
                seed,
                grid_n,
                refine_iters,
            };
            let out = comparability_scan(chain, kind, i, j, domain, &opts)?;
            match format {
                Format::Json => print!("{}", report::compare_json(chain, kind, i, j, &out)),
                Format::Table => print!("{}", report::compare_table(chain, kind, i, j, &out)),
            }
            Ok(match out.relation {
                ComparabilityRelation::AlwaysGeq => 0,
                _ => 1,
            })
        }
        Cmd::Sweep {
            chain,
            geometry,
            grid,
            fix,
            range,
            tol,
        } => {
            if grid < 2 {
                return Err(TrigonError::BadBox {
                    detail: "sweep needs at least 2 grid points per axis".to_string(),
                });
            }
            let kind = resolve_kind(chain, geometry);
            let range = range.map(|v| pair(&v));
            let csv = report::sweep_csv(chain, kind, grid, fix.dim, fix.value, range, tol)?;
            print!("{csv}");
            Ok(0)
        }
        Cmd::Repro { format } => {
            let rows = report::run_repro(&report::reference_rows())?;
            let all = rows.iter().all(|r| r.pass);
            match format {
                Format::Json => print!("{}", report::repro_json(&rows)),
                Format::Table => print!("{}", report::repro_table(&rows)),
            }
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(if err.is_domain_error() { 65 } else { 64 });
        }
    }
}
