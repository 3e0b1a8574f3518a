//! One function per subcommand. All user-facing output is produced here;
//! the compute lives in the core crate.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use critline_core::criteria::{
    lagarias_check, mertens_prefix, nyman_beurling_residual, redheffer_det, redheffer_growth,
    CriterionReport, ExtremalItem,
};
use critline_core::criteria::l_principal;
use critline_core::zeros::{refine_zero, scan_line, scan_rectangle, verify_record, ScanReport};
use critline_core::zeta::{
    functional_equation_residual, zeta, zeta_direct, zeta_eq1, zeta_eta_oracle, zeta_levelk,
    PrecisionParams,
};
use critline_core::{Cx, Error, Real};

use critline::cache;
use critline::jsonfmt::{criterion_object, eval_object, real, scan_object};

use crate::{CriteriaArgs, EvalArgs, ReportArgs, ScanArgs, VerifyArgs, ZerosArgs};
use crate::{CriteriaCommand, EngineChoice, PrecisionFlags};

pub struct Failure {
    pub code: i32,
}

pub type CmdResult = Result<(), Failure>;

/// Flag or parameter problem: message on stderr, exit 2.
pub fn usage(message: &str) -> Failure {
    eprintln!("error: {message}");
    Failure { code: 2 }
}

/// Engine failure: the error name and description on stderr. Parameter
/// errors surface as usage problems (exit 2), everything else as compute
/// errors (exit 3).
fn engine_failure(err: &Error) -> Failure {
    eprintln!("{}: {err}", err.code());
    let code = match err {
        Error::InvalidParams { .. }
        | Error::DimensionTooLarge { .. }
        | Error::AlphaOutOfRange { .. } => 2,
        _ => 3,
    };
    Failure { code }
}

impl PrecisionFlags {
    fn params(&self) -> Result<PrecisionParams<Real>, Failure> {
        let p = PrecisionParams {
            n: self.n,
            k: self.k,
            pole_radius: self.pole_radius,
            tol: self.tol,
        };
        p.validate().map_err(|e| engine_failure(&e))?;
        Ok(p)
    }
}

pub fn eval(args: &EvalArgs) -> CmdResult {
    if !args.re.is_finite() || !args.im.is_finite() {
        return Err(usage("--re and --im must be finite"));
    }
    let p = args.precision.params()?;
    let z = Cx::new(args.re, args.im);
    let result = match args.engine {
        EngineChoice::Auto => zeta(z, p),
        EngineChoice::Direct => zeta_direct(z, p),
        EngineChoice::Eq1 => zeta_eq1(z, p),
        EngineChoice::Levelk => zeta_levelk(z, p),
        EngineChoice::Eta => zeta_eta_oracle(z, p),
    }
    .map_err(|e| engine_failure(&e))?;
    println!("{}", eval_object(args.re, args.im, &result));
    Ok(())
}

pub fn zeros(args: &ZerosArgs) -> CmdResult {
    if !args.ymin.is_finite() || !args.ymax.is_finite() || args.ymin >= args.ymax {
        return Err(usage("--ymin must be finite and strictly below --ymax"));
    }
    let p = args.precision.params()?;
    let cached = cache::load(&args.out).map_err(|m| usage(&m))?;

    // A cheap ungated low-depth pass brackets candidates; refinement and
    // verification then run at the requested precision.
    let p_scan = PrecisionParams { n: p.n.min(10_000), k: 1, tol: f64::MAX, ..p };
    let brackets = scan_line(args.ymin, args.ymax, args.step, p_scan)
        .map_err(|e| engine_failure(&e))?;
    let found = brackets.len();

    let mut verified = 0usize;
    let mut failures = 0usize;
    let mut fresh = Vec::new();
    for bracket in brackets {
        let record = match refine_zero(bracket, p) {
            Ok(record) => record,
            Err(err @ (Error::NotAZero { .. } | Error::VerificationFailed { .. })) => {
                eprintln!("{}: {err}", err.code());
                failures += 1;
                continue;
            }
            Err(err) => return Err(engine_failure(&err)),
        };
        match verify_record(&record, p) {
            Ok(_) => {
                verified += 1;
                let duplicate = cached
                    .iter()
                    .chain(fresh.iter())
                    .any(|known| (known.y - record.y).abs() <= 1e-9);
                if !duplicate {
                    fresh.push(record);
                }
            }
            Err(err @ (Error::NotAZero { .. } | Error::VerificationFailed { .. })) => {
                eprintln!("{}: {err}", err.code());
                failures += 1;
            }
            Err(err) => return Err(engine_failure(&err)),
        }
    }
    fresh.sort_by(|a, b| a.y.total_cmp(&b.y));
    cache::append(&args.out, &fresh).map_err(|m| usage(&m))?;
    println!(
        "found={found} verified={verified} range=[{},{}]",
        args.ymin, args.ymax
    );
    if failures > 0 {
        return Err(Failure { code: 4 });
    }
    Ok(())
}

pub fn scan(args: &ScanArgs) -> CmdResult {
    for value in [args.xmin, args.xmax, args.ymin, args.ymax, args.dx, args.dy] {
        if !value.is_finite() {
            return Err(usage("rectangle and step flags must be finite"));
        }
    }
    let p = args.precision.params()?;
    let report = if args.ymin == args.ymax {
        // Degenerate rectangle: emit the schema with no grid points.
        ScanReport {
            x_min: args.xmin,
            x_max: args.xmax,
            y_min: args.ymin,
            y_max: args.ymax,
            dx: args.dx,
            dy: args.dy,
            rows: Vec::new(),
            minima: Vec::new(),
            off_line_violations: Vec::new(),
        }
    } else {
        scan_rectangle(args.xmin, args.xmax, args.ymin, args.ymax, args.dx, args.dy, p)
            .map_err(|e| engine_failure(&e))?
    };

    let file = File::create(&args.out)
        .map_err(|e| usage(&format!("cannot create {}: {e}", args.out.display())))?;
    let mut out = BufWriter::new(file);
    let io_failure =
        |e: std::io::Error| usage(&format!("cannot write {}: {e}", args.out.display()));
    writeln!(out, "x,y,abs_zeta,char_residual").map_err(io_failure)?;
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{}",
            real(row.x),
            real(row.y),
            real(row.abs_zeta),
            real(row.char_residual)
        )
        .map_err(io_failure)?;
    }
    out.flush().map_err(io_failure)?;

    println!("{}", scan_object(&report));
    Ok(())
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    if args.zeros.is_none() && !args.grid {
        return Err(usage("nothing to verify: pass --zeros and/or --grid"));
    }
    let p = PrecisionParams {
        n: args.n,
        k: args.k,
        pole_radius: args.pole_radius,
        tol: args.tol,
    };
    p.validate().map_err(|e| engine_failure(&e))?;

    let mut checks = 0usize;
    let mut failures = 0usize;

    if let Some(path) = &args.zeros {
        if !path.exists() {
            return Err(usage(&format!("cache {} does not exist", path.display())));
        }
        let records = cache::load(path).map_err(|m| usage(&m))?;
        for record in &records {
            checks += 1;
            match verify_record(record, p) {
                Ok(v) => println!(
                    "y={:.9} abs_zeta={:.3e} char_residual={:.3e} reflect_residual={:.3e} engine={} ok",
                    v.y, v.abs_zeta, v.char_residual, v.reflect_residual, v.engine
                ),
                Err(err @ (Error::NotAZero { .. } | Error::VerificationFailed { .. })) => {
                    failures += 1;
                    println!("y={:.9} FAIL {}: {err}", record.y, err.code());
                }
                Err(err) => return Err(engine_failure(&err)),
            }
        }
    }

    if args.grid {
        // The residual itself is the measure here, so the tail gate is off.
        let p_grid = PrecisionParams { tol: f64::MAX, ..p };
        for i in 0..9 {
            let re = -0.8 + 0.2 * i as f64;
            for im in [0.5, 2.0, 5.0, 10.0, 20.0] {
                checks += 1;
                let residual = functional_equation_residual(Cx::new(re, im), p_grid)
                    .map_err(|e| engine_failure(&e))?;
                if residual < 1e-6 {
                    println!("re={re:.1} im={im:.1} residual={residual:.3e} ok");
                } else {
                    failures += 1;
                    println!("re={re:.1} im={im:.1} residual={residual:.3e} FAIL (>= 1e-6)");
                }
            }
        }
    }

    if failures == 0 {
        println!("PASS ({checks} checks)");
        Ok(())
    } else {
        println!("FAIL ({failures} of {checks} checks)");
        Err(Failure { code: 4 })
    }
}

fn redheffer_single(n: usize) -> Result<CriterionReport, Failure> {
    let start = Instant::now();
    let det = redheffer_det(n).map_err(|e| engine_failure(&e))?;
    let mertens = *mertens_prefix(n).last().expect("n >= 1 was validated");
    let pass = det == mertens;
    Ok(CriterionReport {
        id: "redheffer",
        range: format!("n={n}"),
        pass,
        min_margin: (det - mertens) as f64,
        extremal_items: vec![ExtremalItem { n: n as u64, value: det as f64 }],
        details: format!(
            "det(A({n})) = {det} by exact elimination; sieve Mertens M({n}) = {mertens}"
        ),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

fn nyman_beurling_single(count: usize, quad_cap: u32) -> Result<CriterionReport, Failure> {
    if count == 0 || count > 64 {
        return Err(usage("--alphas must be between 1 and 64"));
    }
    let alphas: Vec<Real> = (2..=count as u64 + 1).map(|j| 1.0 / j as f64).collect();
    let start = Instant::now();
    let distance =
        nyman_beurling_residual(&alphas, quad_cap).map_err(|e| engine_failure(&e))?;
    Ok(CriterionReport {
        id: "nyman-beurling",
        range: format!("{count} alphas 1/2 .. 1/{}", count + 1),
        pass: distance.is_finite() && distance > 0.0,
        min_margin: distance,
        extremal_items: vec![ExtremalItem { n: count as u64, value: distance }],
        details: format!(
            "least-squares distance from the constant 1 on (1/{quad_cap}, 1); enlarging the \
             alpha set can only shrink it"
        ),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

fn lfunction_single(
    k: u64,
    re: f64,
    im: f64,
    precision: &PrecisionFlags,
) -> Result<CriterionReport, Failure> {
    if !re.is_finite() || !im.is_finite() {
        return Err(usage("--re and --im must be finite"));
    }
    let p = precision.params()?;
    let start = Instant::now();
    let result = l_principal(Cx::new(re, im), k, p).map_err(|e| engine_failure(&e))?;
    let margin = result.value.norm() - result.err_bound;
    Ok(CriterionReport {
        id: "lfunction",
        range: format!("k={k}, s={re}+{im}i"),
        pass: margin > 0.0,
        min_margin: margin,
        extremal_items: vec![ExtremalItem { n: k, value: result.value.norm() }],
        details: format!(
            "L(s, principal character mod {k}) = {:.6e}+{:.6e}i via {}; |L| = {:.6e}, error \
             bound {:.6e}; a positive margin certifies L(s) != 0 at this point",
            result.value.re,
            result.value.im,
            result.engine,
            result.value.norm(),
            result.err_bound,
        ),
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

pub fn criteria(args: &CriteriaArgs) -> CmdResult {
    let report = match &args.which {
        CriteriaCommand::Redheffer { n, max_n, eps } => match (n, max_n) {
            (Some(n), None) => redheffer_single(*n)?,
            (None, Some(max_n)) => {
                redheffer_growth(*max_n, *eps).map_err(|e| engine_failure(&e))?
            }
            _ => {
                return Err(usage(
                    "pass exactly one of --n (exact determinant) or --max-n (growth sweep)",
                ))
            }
        },
        CriteriaCommand::Lagarias { max_n } => {
            lagarias_check(usize::try_from(*max_n).map_err(|_| usage("--max-n is too large"))?)
                .map_err(|e| engine_failure(&e))?
        }
        CriteriaCommand::NymanBeurling { alphas, quad_cap } => {
            nyman_beurling_single(*alphas, *quad_cap)?
        }
        CriteriaCommand::Lfunction { modulus, re, im, precision } => {
            lfunction_single(*modulus, *re, *im, precision)?
        }
    };
    println!("{}", criterion_object(&report));
    if report.pass {
        Ok(())
    } else {
        Err(Failure { code: 4 })
    }
}

pub fn report(args: &ReportArgs) -> CmdResult {
    if !args.zeros.exists() {
        println!("cache {}: no records (file absent)", args.zeros.display());
        return Ok(());
    }
    let records = cache::load(&args.zeros).map_err(|m| usage(&m))?;
    if records.is_empty() {
        println!("cache {}: no records", args.zeros.display());
        return Ok(());
    }
    let y_min = records.iter().map(|r| r.y).fold(f64::INFINITY, f64::min);
    let y_max = records.iter().map(|r| r.y).fold(f64::NEG_INFINITY, f64::max);
    let worst_abs = records.iter().map(|r| r.abs_zeta).fold(0.0f64, f64::max);
    let worst_char = records.iter().map(|r| r.char_residual).fold(0.0f64, f64::max);
    println!(
        "cache {}: {} records, y in [{:.9}, {:.9}], worst abs_zeta {:.3e}, worst char_residual {:.3e}",
        args.zeros.display(),
        records.len(),
        y_min,
        y_max,
        worst_abs,
        worst_char
    );
    Ok(())
}
