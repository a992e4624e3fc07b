//! `d5`: JSON front end for the d5slice library.
//!
//! Exit codes: 0 success, 1 mathematically degenerate input, 2 malformed input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use d5slice::algebra::{format_scalar, parse_scalar, scalar_to_f64, Scalar};
use d5slice::deformation::{
    aff_dimension, bw_sequence, t1_basis, t1_dimension_truncated, total_space_equations,
    DeformationPoint,
};
use d5slice::json::*;
use d5slice::matrix::{char_poly4, CharPoly};
use d5slice::numeric::{j_from_eigenvalues, quartic_roots, solve_j_target, CNum, Tolerances};
use d5slice::pencil::{classify, j_of_charpoly, SymPencil};
use d5slice::slice::{
    good_slice_equations, is_degenerate, j_closed_form, pencil_from_pq, variety_equations,
    SliceSpec,
};
use d5slice::Error;

#[derive(Parser)]
#[command(
    name = "d5",
    version,
    about = "D5-tilde singularities from good slices of sl(2)+sl(2)"
)]
struct Cli {
    /// Residual tolerance for numeric routines.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Relative separation below which numeric eigenvalues count as coincident.
    #[arg(long, global = true, default_value_t = 1e-8)]
    sep: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the pencil S_(X,Y).
    Classify {
        /// Pencil JSON file ({"X": .., "Y": ..}); `-` reads stdin.
        file: Option<PathBuf>,
        /// Inline X as a JSON array of rows.
        #[arg(long = "X", requires = "y")]
        x: Option<String>,
        /// Inline Y as a JSON array of rows.
        #[arg(long = "Y", requires = "x")]
        y: Option<String>,
    },
    /// j-invariant from a characteristic polynomial or a matrix A of S_(I, A).
    Jinv {
        /// "c1,c2,c3,c4" for t^4 - c1 t^3 + c2 t^2 - c3 t + c4.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "matrix")]
        charpoly: Option<String>,
        /// 4x4 matrix JSON, inline or as a file path.
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Slice equations, pencil and j for the normal form (p, q).
    Slice {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t = Emit::All)]
        emit: Emit,
    },
    /// Fiber equations (h1, h2) of the deformation over a base point.
    Deform {
        /// Request file {"p", "q", "point"}; overrides nothing given by flags.
        request: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Point JSON ({"alpha": .., ..., "mu": ..}), inline or a file path.
        #[arg(long)]
        point: Option<String>,
    },
    /// Truncated dimension of T^1 with a stability check at bound + 1.
    T1 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// BW(m) and the dimension of the affine deformation space.
    Bw {
        #[arg(long)]
        m: u32,
    },
    /// All t with j(t) = target.
    SolveJ {
        /// {"re": x, "im": y} or a real number.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// CSV of (p, q, t, j) over a rational grid.
    Sweep {
        /// "pmin:pmax:steps,qmin:qmax:steps"; steps is the number of samples per axis.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Equations,
    Pencil,
    J,
    All,
}

/// A successful run; `degenerate` selects exit code 1.
struct Report {
    body: Value,
    degenerate: bool,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report {
            body,
            degenerate: false,
        }
    }

    fn degenerate(body: Value) -> Self {
        Report {
            body,
            degenerate: true,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::NotSymmetric => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<Report, Failure>;

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| malformed(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

/// Inline JSON when the argument looks like JSON, otherwise a file path.
fn json_arg(arg: &str) -> Result<Value, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        read_text(&PathBuf::from(arg))?
    };
    Ok(parse_json(&text)?)
}

fn spec_from_args(p: &str, q: &str) -> Result<SliceSpec, Failure> {
    Ok(SliceSpec {
        p: coord_from_str(p)?,
        q: coord_from_str(q)?,
    })
}

fn cmd_classify(file: Option<PathBuf>, x: Option<String>, y: Option<String>) -> Outcome {
    let pencil = match (file, x, y) {
        (Some(f), None, None) => pencil_from_json(&parse_json(&read_text(&f)?)?)?,
        (None, Some(x), Some(y)) => SymPencil::new(
            mat4_from_json(&json_arg(&x)?)?,
            mat4_from_json(&json_arg(&y)?)?,
        )?,
        _ => return Err(malformed("give either a pencil file or both --X and --Y")),
    };
    let c = classify(&pencil);
    let body = classification_to_json(&c);
    Ok(if c.is_elliptic() {
        Report::ok(body)
    } else {
        Report::degenerate(body)
    })
}

fn cmd_jinv(charpoly: Option<String>, matrix: Option<String>, sep: f64) -> Outcome {
    let cp: CharPoly<Scalar> = match (charpoly, matrix) {
        (Some(s), None) => {
            let parts = s
                .split(',')
                .map(parse_scalar)
                .collect::<Result<Vec<_>, _>>()?;
            let [c1, c2, c3, c4]: [Scalar; 4] = parts
                .try_into()
                .map_err(|_| malformed("--charpoly needs exactly four coefficients"))?;
            CharPoly::new(c1, c2, c3, c4)
        }
        (None, Some(m)) => char_poly4(&mat4_from_json(&json_arg(&m)?)?),
        _ => return Err(malformed("give --charpoly or --matrix")),
    };
    let j = match j_of_charpoly(&cp) {
        Ok(j) => j,
        Err(Error::MultipleRoot) => {
            return Ok(Report::degenerate(
                json!({ "degenerate": true, "reason": "MultipleRoot" }),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    let mut body = Map::new();
    body.insert("j".into(), scalar_to_json(&j));
    body.insert("j_float".into(), json!(scalar_to_f64(&j)));
    let f = |r: &Scalar| CNum::new(scalar_to_f64(r), 0.0);
    // The cross-ratio value is informational; a numerically unresolved
    // spectrum simply leaves it out.
    if let Ok(z) = quartic_roots(f(&cp.c1), f(&cp.c2), f(&cp.c3), f(&cp.c4))
        .and_then(|l| j_from_eigenvalues(l, sep))
    {
        body.insert("j_cross_ratio".into(), cnum_to_json(&z));
    }
    Ok(Report::ok(Value::Object(body)))
}

fn cmd_slice(p: &str, q: &str, emit: Emit) -> Outcome {
    let spec = spec_from_args(p, q)?;
    let Some(t) = spec.t() else {
        return Ok(Report::degenerate(json!({ "degenerate": true })));
    };
    let mut body = Map::new();
    body.insert("t".into(), scalar_to_json(&t));
    let degenerate = is_degenerate(&spec);
    if degenerate {
        body.insert("degenerate".into(), json!(true));
    }
    if matches!(emit, Emit::J | Emit::All) && !degenerate {
        body.insert("j".into(), scalar_to_json(&j_closed_form(&spec)?));
    }
    if matches!(emit, Emit::Equations | Emit::All) {
        let [s1, s2] = good_slice_equations(&spec)?;
        let (g1, g2) = variety_equations(&spec)?;
        body.insert(
            "slice".into(),
            json!([mpoly_to_json(&s1), mpoly_to_json(&s2)]),
        );
        body.insert("g1".into(), mpoly_to_json(&g1));
        body.insert("g2".into(), mpoly_to_json(&g2));
    }
    if matches!(emit, Emit::Pencil | Emit::All) {
        body.insert("pencil".into(), pencil_to_json(&pencil_from_pq(&spec)?));
    }
    let body = Value::Object(body);
    Ok(if degenerate {
        Report::degenerate(body)
    } else {
        Report::ok(body)
    })
}

fn cmd_deform(
    request: Option<PathBuf>,
    p: Option<String>,
    q: Option<String>,
    point: Option<String>,
) -> Outcome {
    let (spec, point) = match (request, p, q) {
        (Some(path), None, None) => {
            let req = parse_json(&read_text(&path)?)?;
            let spec = slice_spec_from_json(&req)?;
            let point = match req.get("point") {
                Some(v) => deformation_point_from_json(v)?,
                None => DeformationPoint::zero(),
            };
            (spec, point)
        }
        (None, Some(p), Some(q)) => {
            let point = match point {
                Some(s) => deformation_point_from_json(&json_arg(&s)?)?,
                None => DeformationPoint::zero(),
            };
            (spec_from_args(&p, &q)?, point)
        }
        _ => return Err(malformed("give either a request file or both --p and --q")),
    };
    let (h1, h2) = total_space_equations(&spec, &point)?;
    Ok(Report::ok(
        json!({ "h1": mpoly_to_json(&h1), "h2": mpoly_to_json(&h2) }),
    ))
}

fn cmd_t1(p: &str, q: &str, bound: u32) -> Outcome {
    let spec = spec_from_args(p, q)?;
    if bound < 3 {
        return Err(malformed(format!(
            "--bound must be at least 3, got {bound}"
        )));
    }
    let dim = t1_dimension_truncated(&spec, bound)?;
    let next = t1_dimension_truncated(&spec, bound + 1)?;
    let basis: Vec<Value> = t1_basis(&spec)?
        .elements
        .iter()
        .map(|e| json!([e.first.to_string(), e.second.to_string()]))
        .collect();
    Ok(Report::ok(
        json!({ "dim": dim, "stable": dim == next, "bound": bound, "basis": basis }),
    ))
}

fn cmd_bw(m: u32) -> Outcome {
    let bw = bw_sequence(m)?;
    let aff = aff_dimension(m)?;
    Ok(Report::ok(json!({ "bw": bw.to_string(), "aff_dim": aff })))
}

fn cmd_solve_j(target: &str, tol: f64) -> Outcome {
    let v = match parse_json(target) {
        Ok(v) => v,
        Err(_) => {
            return Err(malformed(format!(
                "--target must be a number or {{\"re\", \"im\"}}: {target:?}"
            )))
        }
    };
    let report = solve_j_target(cnum_from_json(&v)?, tol)?;
    let roots: Vec<Value> = report
        .roots
        .iter()
        .map(|r| json!({ "t": cnum_to_json(&r.t), "relative_error": r.relative_error }))
        .collect();
    let filtered: Vec<Value> = report.filtered.iter().map(cnum_to_json).collect();
    Ok(Report::ok(json!({ "roots": roots, "filtered": filtered })))
}

fn parse_axis(s: &str) -> Result<Vec<Scalar>, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(malformed(format!(
            "grid axis must be min:max:steps, got {s:?}"
        )));
    };
    let (lo, hi) = (parse_scalar(lo)?, parse_scalar(hi)?);
    let n: usize =
        n.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
            malformed(format!("grid steps must be a positive integer, got {n:?}"))
        })?;
    if n == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - &lo) / Scalar::from_integer((n - 1).into());
    Ok((0..n)
        .map(|i| &lo + &step * Scalar::from_integer(i.into()))
        .collect())
}

enum SweepRow {
    Row(String),
    Skipped(String),
}

fn cmd_sweep(grid: &str, out: Option<PathBuf>) -> Outcome {
    let (ps, qs) = grid
        .split_once(',')
        .ok_or_else(|| malformed("grid must be \"pmin:pmax:steps,qmin:qmax:steps\""))?;
    let (ps, qs) = (parse_axis(ps)?, parse_axis(qs)?);
    let points: Vec<(&Scalar, &Scalar)> = ps
        .iter()
        .flat_map(|p| qs.iter().map(move |q| (p, q)))
        .collect();
    let rows: Vec<SweepRow> = points
        .par_iter()
        .map(|&(p, q)| {
            let t = p * q;
            let (ps, qs, ts) = (format_scalar(p), format_scalar(q), format_scalar(&t));
            match j_closed_form(&SliceSpec::finite(p.clone(), q.clone())) {
                Ok(j) => SweepRow::Row(format!(
                    "{ps},{qs},{ts},{},{:e}",
                    format_scalar(&j),
                    scalar_to_f64(&j)
                )),
                Err(_) => SweepRow::Skipped(format!("{ps},{qs},{ts}")),
            }
        })
        .collect();
    let mut csv = String::from("p,q,t,j_exact,j_float\n");
    let mut skipped = Vec::new();
    for row in &rows {
        match row {
            SweepRow::Row(line) => {
                csv.push_str(line);
                csv.push('\n');
            }
            SweepRow::Skipped(line) => skipped.push(line.as_str()),
        }
    }
    csv.push_str(&format!(
        "# skipped {} degenerate point(s) (t = 0 or t = 1/4)\n",
        skipped.len()
    ));
    for line in &skipped {
        csv.push_str(&format!("# {line}\n"));
    }
    let written = rows.len() - skipped.len();
    match out {
        Some(path) => {
            fs::write(&path, csv).map_err(|e| Failure {
                code: 1,
                message: format!("{}: {e}", path.display()),
            })?;
            Ok(Report::ok(
                json!({ "rows": written, "skipped": skipped.len(), "out": path.display().to_string() }),
            ))
        }
        None => {
            print!("{csv}");
            Ok(Report {
                body: Value::Null,
                degenerate: false,
            })
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let tol = Tolerances {
        tol: cli.tol,
        sep: cli.sep,
    };
    if !(tol.tol > 0.0 && tol.sep > 0.0) {
        return Err(malformed("--tol and --sep must be positive"));
    }
    match cli.command {
        Command::Classify { file, x, y } => cmd_classify(file, x, y),
        Command::Jinv { charpoly, matrix } => cmd_jinv(charpoly, matrix, tol.sep),
        Command::Slice { p, q, emit } => cmd_slice(&p, &q, emit),
        Command::Deform {
            request,
            p,
            q,
            point,
        } => cmd_deform(request, p, q, point),
        Command::T1 { p, q, bound } => cmd_t1(&p, &q, bound),
        Command::Bw { m } => cmd_bw(m),
        Command::SolveJ { target } => cmd_solve_j(&target, tol.tol),
        Command::Sweep { grid, out } => cmd_sweep(&grid, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            if !report.body.is_null() {
                let mut stdout = io::stdout().lock();
                let _ = writeln!(stdout, "{}", report.body);
            }
            ExitCode::from(if report.degenerate { 1 } else { 0 })
        }
        Err(f) => {
            eprintln!("d5: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
