use std::time::{SystemTime, UNIX_EPOCH};

use lqlab_core::arith::{is_prime, LegendreChar};
use lqlab_core::constants::{Certified, ConstantsConfig, MainTermParams, EULER_GAMMA_DIGITS, THETA};
use lqlab_core::curve::{count_near_curve, range_scan, short_interval_sum, CurveConfig, ShortIntervalInstance};
use lqlab_core::dirichlet::{verify_floor_identities, verify_many};
use lqlab_core::summatory::{dyadic_checkpoints, rh_diagnostic, trace};
use lqlab_core::{Error, Result, Settings};
use num::rational::Ratio;

use crate::args::{
    Cli, Command, ConstantsArgs, ConstantsFlags, DiagnosticArgs, IntervalArgs, NearCurveArgs, TraceArgs, VerifyArgs,
};
use crate::output::{Cell, Report};

pub struct Outcome {
    pub report: Report,
    /// A verification found a mismatch.
    pub mismatch: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            mismatch: false,
        }
    }
}

pub fn run(cli: &Cli, settings: &Settings) -> Result<Outcome> {
    let mut outcome = match &cli.command {
        Command::Verify(a) => verify(a, settings)?,
        Command::Constants(a) => constants(a, settings)?.into(),
        Command::Trace(a) => trace_cmd(a, settings)?.into(),
        Command::ShortInterval(a) => short_interval(a, settings)?.into(),
        Command::NearCurve(a) => near_curve(a, settings)?.into(),
        Command::RhDiagnostic(a) => diagnostic(a, settings)?.into(),
    };
    let r = &mut outcome.report;
    r.meta("tool", "lqlab").meta("version", env!("CARGO_PKG_VERSION"));
    r.meta("threads", cli.threads.map(|t| t as u64));
    if !cli.no_timestamp {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        r.meta("unix_time", secs);
    }
    Ok(outcome)
}

fn status(m: Option<usize>) -> (Cell, Cell) {
    match m {
        None => ("pass".into(), Cell::Empty),
        Some(n) => ("mismatch".into(), (n as u64).into()),
    }
}

fn verify(a: &VerifyArgs, s: &Settings) -> Result<Outcome> {
    let qs: Vec<u64> = match (a.q, a.all_q) {
        (Some(q), _) => {
            LegendreChar::new(q)?;
            vec![q]
        }
        (None, Some(bound)) if bound >= 3 => (3..=bound).filter(|&q| is_prime(q)).collect(),
        _ => return Err(Error::Argument("--all-q needs a bound of at least 3".into())),
    };
    let limit = usize::try_from(a.limit).map_err(|_| Error::Argument("limit too large".into()))?;
    let mut report = Report::new(&["q", "identity", "limit", "status", "first_mismatch"]);
    report
        .meta("command", "verify")
        .meta("q", a.q)
        .meta("all_q", a.all_q)
        .meta("limit", a.limit);
    let mut mismatch = false;
    for c in verify_floor_identities(limit, s)? {
        mismatch |= c.first_mismatch.is_some();
        let (st, m) = status(c.first_mismatch);
        report.row(vec![Cell::Empty, c.identity.into(), a.limit.into(), st, m]);
    }
    for r in verify_many(&qs, limit, s)? {
        for c in r.checks {
            mismatch |= c.first_mismatch.is_some();
            let (st, m) = status(c.first_mismatch);
            report.row(vec![r.q.into(), c.identity.into(), a.limit.into(), st, m]);
        }
    }
    report.meta("result", if mismatch { "mismatch" } else { "pass" });
    Ok(Outcome { report, mismatch })
}

fn config(f: &ConstantsFlags) -> ConstantsConfig {
    ConstantsConfig {
        tolerance: f.tolerance,
        p_cutoff: f.p_cutoff,
        r_cutoff: f.r_cutoff,
    }
}

fn constants_meta(report: &mut Report, p: &MainTermParams) {
    let c = &p.config;
    report
        .meta("q", p.class.q)
        .meta("branch", p.class.branch.label())
        .meta("c_q", p.class.c_q.map(u64::from))
        .meta("d_q", p.class.d_q.map(u64::from))
        .meta("main_term", format!("{:?}", p.kind()))
        .meta("tolerance", c.tolerance)
        .meta("p_cutoff", c.p_cutoff)
        .meta("r_cutoff", c.r_cutoff)
        .meta("euler_gamma", EULER_GAMMA_DIGITS)
        .meta("theta", THETA.to_string());
}

fn constants(a: &ConstantsArgs, s: &Settings) -> Result<Report> {
    let p = MainTermParams::compute(a.q, &config(&a.constants), s)?;
    let mut report = Report::new(&["q", "branch", "constant", "value", "error"]);
    report.meta("command", "constants");
    constants_meta(&mut report, &p);
    let named: [(&str, Option<Certified>); 8] = [
        ("zeta(q)", p.zeta_q),
        ("zeta'(q)", p.zeta_prime_q),
        ("P_q(1)", p.p1),
        ("P_q'/P_q(1)", p.logderiv_p1),
        ("zeta(q/2)", p.zeta_q_half),
        ("R_q(1/2)", p.r_half),
        ("leading", p.leading),
        ("bracket", p.bracket),
    ];
    for (name, c) in named {
        if let Some(c) = c {
            report.row(vec![
                a.q.into(),
                p.class.branch.label().into(),
                name.into(),
                c.value.into(),
                c.error.into(),
            ]);
        }
    }
    Ok(report)
}

fn trace_cmd(a: &TraceArgs, s: &Settings) -> Result<Report> {
    let points = dyadic_checkpoints(a.min_exp, a.max);
    if points.is_empty() {
        return Err(Error::Argument(format!(
            "no power of two in [2^{}, {}]",
            a.min_exp, a.max
        )));
    }
    let p = MainTermParams::compute(a.q, &config(&a.constants), s)?;
    let t = trace(&p, &points, &a.alpha, s)?;
    let mut report = Report::new(&["x", "value", "main", "main_error", "residual", "alpha", "normalized"]);
    report
        .meta("command", "trace")
        .meta("max", a.max)
        .meta("min_exp", u64::from(a.min_exp));
    constants_meta(&mut report, &p);
    report.meta(
        "alphas",
        t.alphas.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";"),
    );
    report.meta("fitted_exponent", t.fitted_exponent);
    for r in &t.rows {
        for (alpha, norm) in t.alphas.iter().zip(&r.normalized) {
            report.row(vec![
                r.x.into(),
                r.value.into(),
                r.main.into(),
                r.main_error.into(),
                r.residual.into(),
                (*alpha).into(),
                (*norm).into(),
            ]);
        }
    }
    Ok(report)
}

fn short_interval(a: &IntervalArgs, s: &Settings) -> Result<Report> {
    let inst = ShortIntervalInstance {
        x: a.x,
        y: a.y,
        c3: a.c3,
    };
    let sum = short_interval_sum(&inst, s)?;
    let mut report = Report::new(&["x", "y", "c3", "sum", "satisfies_general", "satisfies_sharp"]);
    report.meta("command", "short-interval");
    report.row(vec![
        a.x.into(),
        a.y.into(),
        a.c3.into(),
        sum.into(),
        inst.satisfies_general().into(),
        inst.satisfies_sharp().into(),
    ]);
    Ok(report)
}

fn near_curve(a: &NearCurveArgs, s: &Settings) -> Result<Report> {
    match (a.x, a.y, a.scale, a.n, a.delta) {
        (Some(x), Some(y), None, None, None) => scan(ShortIntervalInstance { x, y, c3: a.c3 }, s),
        (None, None, Some(scale), Some(n), Some(delta)) => {
            let exponent = Ratio::new(a.exponent.0, a.exponent.1);
            let count = count_near_curve(&CurveConfig::new(scale, exponent, n, delta), s)?;
            let mut report = Report::new(&["scale", "exponent", "n", "delta", "count"]);
            report.meta("command", "near-curve");
            report.row(vec![
                scale.into(),
                exponent.to_string().into(),
                n.into(),
                delta.into(),
                count.into(),
            ]);
            Ok(report)
        }
        _ => Err(Error::Argument(
            "give either --x and --y, or --scale, --n and --delta".into(),
        )),
    }
}

fn scan(inst: ShortIntervalInstance, s: &Settings) -> Result<Report> {
    let r = range_scan(&inst, s)?;
    let d = &r.decomposition;
    let mut report = Report::new(&[
        "n_start",
        "n_end",
        "range",
        "delta",
        "delta_guard",
        "pair_count",
        "near_count",
        "fifth_derivative",
        "filaseta_trifonov",
        "first_derivative",
        "applicable_shape",
        "near_over_shape",
        "n2_delta_ok",
    ]);
    report
        .meta("command", "near-curve")
        .meta("x", inst.x)
        .meta("y", inst.y)
        .meta("c3", inst.c3)
        .meta("short_sum", d.short_sum)
        .meta("boundary", d.boundary)
        .meta("double_count", d.double_count)
        .meta("small_n_pairs", d.small_n_pairs)
        .meta("scan_lower", d.lower)
        .meta("scan_upper", d.upper)
        .meta("trivial_bound", r.trivial_bound)
        .meta("window_bound", r.window_bound)
        .meta("interval_bound", r.interval_bound)
        .meta("ratio", r.ratio)
        .meta("satisfies_general", r.satisfies_general)
        .meta("satisfies_sharp", r.satisfies_sharp)
        .meta("windows_cover_scan", r.windows_cover_scan)
        .meta("delta_guards_hold", r.delta_guards_hold);
    for w in &d.windows {
        report.row(vec![
            w.n_start.into(),
            w.n_end.into(),
            w.range.label().into(),
            w.delta.into(),
            w.delta_guard.into(),
            w.pair_count.into(),
            w.near_count.into(),
            w.shapes.fifth_derivative.into(),
            w.shapes.filaseta_trifonov.into(),
            w.shapes.first_derivative.into(),
            w.shapes.applicable.into(),
            (w.near_count as f64 / w.shapes.applicable).into(),
            w.shapes.n2_delta_ok.into(),
        ]);
    }
    report.detail(serde_json::to_value(&r).expect("report is serializable"));
    Ok(report)
}

fn diagnostic(a: &DiagnosticArgs, s: &Settings) -> Result<Report> {
    let points: Vec<u64> = dyadic_checkpoints(a.min_exp, a.max)
        .into_iter()
        .filter(|&x| x as f64 > 4f64.exp())
        .collect();
    if points.is_empty() {
        return Err(Error::Argument(format!(
            "no power of two above e^4 in [2^{}, {}]",
            a.min_exp, a.max
        )));
    }
    let d = rh_diagnostic(a.q, &points, a.epsilon, a.c, s)?;
    let mut report = Report::new(&["x", "value", "over_quarter", "conditional_ratio", "unconditional_ratio"]);
    report
        .meta("command", "rh-diagnostic")
        .meta("q", a.q)
        .meta("max", a.max)
        .meta("min_exp", u64::from(a.min_exp))
        .meta("epsilon", d.epsilon)
        .meta("c", d.c);
    for r in &d.rows {
        report.row(vec![
            r.x.into(),
            r.value.into(),
            r.over_quarter.into(),
            r.conditional_ratio.into(),
            r.unconditional_ratio.into(),
        ]);
    }
    Ok(report)
}
