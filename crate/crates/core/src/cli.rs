//! Command-line front end.
//!
//! Data goes to the output stream and diagnostics to the error stream.
//! Exit codes: 0 when everything matched or passed, 1 on any mismatch,
//! 2 on usage or input errors, 3 when the enumeration bound was hit.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ideal::{parse_literal, primes_above, IdealHNF};
use crate::noncongruence::{
    verify, verify_range, Case, IdealRecord, IndexReport, MeasuredRecord, OrigamiRecord, Prediction, Status,
};
use crate::origami::{check_diagonal_exponent, generator_catalog, OrbitClass, Origami};
use crate::quad_order::Order;
use crate::quotient::{congruence_indices, DEFAULT_BOUND};
use crate::sl2::{nori_order_check, random_unipotent};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// Environment variable overriding the default enumeration bound.
pub const BOUND_VAR: &str = "HOMVEECH_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "homveech", version, about = "Congruence level indices of homology Veech groups of L-shaped origamis")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Largest quotient ring size to enumerate (default 1000000, or $HOMVEECH_BOUND).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: Option<u64>,
    /// Worker threads for batch runs (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting behaviour of small primes in O_D.
    Order {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        d: i64,
        /// Largest prime listed.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(2..))]
        max_prime: i64,
    },
    /// Normal form, norm and conjugate of an ideal.
    Ideal {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        d: i64,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        factor: bool,
        #[arg(long)]
        indices: bool,
    },
    /// Orbit class, spin and generator catalog of L(m, n).
    Origami {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        m: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        n: i64,
    },
    /// Compare predicted and measured index at one ideal.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        m: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        n: i64,
        #[arg(long)]
        ideal: String,
    },
    /// Compare predicted and measured index at every ideal up to a norm.
    VerifyRange {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        m: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        n: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_norm: i64,
    },
    /// Orders of random unipotently generated subgroups of SL2(F_p).
    Nori {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// One report as a flat CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub m: i64,
    pub n: i64,
    pub d: i64,
    pub class: OrbitClass,
    pub literal: String,
    pub ideal_n: i64,
    pub ideal_a: i64,
    pub ideal_m: i64,
    pub norm: i64,
    pub case: Case,
    pub factor_num: u64,
    pub factor_den: u64,
    pub predicted_index: u64,
    pub measured_index: Option<u64>,
    pub status: Status,
}

impl From<&IndexReport> for ReportRow {
    fn from(r: &IndexReport) -> Self {
        ReportRow {
            m: r.origami.m,
            n: r.origami.n,
            d: r.origami.d,
            class: r.origami.class,
            literal: r.ideal.literal.clone(),
            ideal_n: r.ideal.n,
            ideal_a: r.ideal.a,
            ideal_m: r.ideal.m,
            norm: r.ideal.norm,
            case: r.predicted.case,
            factor_num: r.predicted.factor_num,
            factor_den: r.predicted.factor_den,
            predicted_index: r.predicted.index,
            measured_index: r.measured.index,
            status: r.measured.status,
        }
    }
}

impl From<ReportRow> for IndexReport {
    fn from(r: ReportRow) -> Self {
        IndexReport {
            origami: OrigamiRecord { m: r.m, n: r.n, d: r.d, class: r.class },
            ideal: IdealRecord { literal: r.literal, n: r.ideal_n, a: r.ideal_a, m: r.ideal_m, norm: r.norm },
            predicted: Prediction {
                case: r.case,
                factor_num: r.factor_num,
                factor_den: r.factor_den,
                index: r.predicted_index,
            },
            measured: MeasuredRecord { index: r.measured_index, status: r.status },
        }
    }
}

pub fn reports_to_csv(reports: &[IndexReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(ReportRow::from(r)).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn reports_from_csv(s: &str) -> Result<Vec<IndexReport>> {
    csv::Reader::from_reader(s.as_bytes())
        .deserialize::<ReportRow>()
        .map(|r| r.map(IndexReport::from).map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn reports_to_json(reports: &[IndexReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Parse(e.to_string()))
}

pub fn reports_from_json(s: &str) -> Result<Vec<IndexReport>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Exit code summarising a batch: mismatches dominate bound hits.
pub fn exit_code(reports: &[IndexReport]) -> i32 {
    if reports.iter().any(|r| r.status() == Status::Mismatch) {
        EXIT_MISMATCH
    } else if reports.iter().any(|r| r.status() == Status::BoundExceeded) {
        EXIT_BOUND
    } else {
        EXIT_OK
    }
}

fn resolve_bound(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BOUND_VAR) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => Ok(b),
            _ => Err(Error::Parse(format!("{BOUND_VAR}={v:?} is not a positive integer"))),
        },
        Err(_) => Ok(DEFAULT_BOUND),
    }
}

/// Output of one subcommand: the text to print and the exit code.
struct Output {
    text: String,
    code: i32,
    diagnostics: Vec<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output::with_code(text, EXIT_OK)
    }

    fn with_code(text: String, code: i32) -> Self {
        Output { text, code, diagnostics: Vec::new() }
    }

    fn note(mut self, note: Option<String>) -> Self {
        self.diagnostics.extend(note);
        self
    }

    fn reports(format: Format, reports: &[IndexReport]) -> Result<Self> {
        let diagnostics = reports
            .iter()
            .filter(|r| r.is_fatal())
            .map(|r| format!("fatal: measured index exceeds the prediction: {r}"))
            .collect();
        Ok(Output { text: render_reports(format, reports)?, code: exit_code(reports), diagnostics })
    }
}

fn key_value_csv(rows: &[(&str, String)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["key", "value"]).map_err(|e| Error::Parse(e.to_string()))?;
    for (k, v) in rows {
        w.write_record([k, v.as_str()]).map_err(|e| Error::Parse(e.to_string()))?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
        .map_err(|e| Error::Parse(e.to_string()))
}

fn render_key_values(format: Format, rows: &[(&str, String)]) -> Result<String> {
    Ok(match format {
        Format::Human => rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        Format::Json => {
            let map: serde_json::Map<_, _> = rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            serde_json::to_string_pretty(&map).map_err(|e| Error::Parse(e.to_string()))? + "\n"
        }
        Format::Csv => key_value_csv(rows)?,
    })
}

fn cmd_order(format: Format, d: i64, max_prime: i64) -> Result<Output> {
    let order = Order::new(d)?;
    let mut rows = Vec::new();
    for p in crate::arith::primes_up_to(max_prime) {
        let primes = primes_above(order, p)?;
        let kind = if d % p == 0 { "ramified" } else { "split" };
        let list: Vec<String> = primes.iter().map(IdealHNF::to_string).collect();
        rows.push((p, kind, list));
    }
    let text = match format {
        Format::Human => {
            let mut s = format!("O_D with d = {d}, discriminant {}\n", order.discriminant());
            for (p, kind, list) in &rows {
                s += &format!("p = {p:>3}  {kind:<8}  {}\n", list.join(", "));
            }
            s
        }
        Format::Json => {
            let primes: Vec<_> =
                rows.iter().map(|(p, kind, list)| json!({"p": p, "kind": kind, "primes": list})).collect();
            serde_json::to_string_pretty(&json!({"d": d, "discriminant": order.discriminant(), "primes": primes}))
                .map_err(|e| Error::Parse(e.to_string()))?
                + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["p", "kind", "primes"]).map_err(io)?;
            for (p, kind, list) in &rows {
                w.write_record([p.to_string(), kind.to_string(), list.join(" ")]).map_err(io)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?)
                .map_err(|e| Error::Parse(e.to_string()))?
        }
    };
    Ok(Output::ok(text))
}

fn cmd_ideal(format: Format, d: i64, literal: &str, factor: bool, indices: bool) -> Result<Output> {
    let order = Order::new(d)?;
    let a = parse_literal(order, literal)?;
    let mut rows = vec![
        ("ideal", a.to_string()),
        ("n", a.n().to_string()),
        ("a", a.a().to_string()),
        ("m", a.m().to_string()),
        ("norm", a.norm().to_string()),
        ("conjugate", a.conjugate().to_string()),
    ];
    if factor {
        let f = a.factor()?;
        rows.push(("factorization", f.to_string()));
    }
    if indices {
        let c = congruence_indices(&a);
        rows.push(("gamma0_index", c.gamma0_index.to_string()));
        rows.push(("gamma0_to_gamma1", c.gamma0_to_gamma1.to_string()));
        rows.push(("gamma1_to_gamma", c.gamma1_to_gamma.to_string()));
        rows.push(("sl2_order", c.sl2_quotient_order.to_string()));
        rows.push(("phi", c.phi.to_string()));
    }
    Ok(Output::ok(render_key_values(format, &rows)?))
}

fn cmd_origami(format: Format, m: i64, n: i64) -> Result<Output> {
    let o = Origami::new(m, n)?;
    let mut rows = vec![
        ("origami", o.to_string()),
        ("d", o.d.to_string()),
        ("class", o.class.to_string()),
        ("spin", o.spin().to_string()),
        ("weierstrass_count", o.integral_weierstrass_count().to_string()),
        ("complementary_spin", o.complementary_spin().map_or("n/a".into(), |s| s.to_string())),
    ];
    let (catalog, mut code) = match generator_catalog(&o) {
        Ok(c) => (Some(c), EXIT_OK),
        Err(e) => {
            rows.push(("catalog", format!("invalid: {e}")));
            (None, EXIT_MISMATCH)
        }
    };
    if let Some(cat) = &catalog {
        for e in &cat.entries {
            rows.push((e.label, format!("{}  ({})", e.matrix, e.provenance)));
        }
        let status = if (m, n) == (2, 2) {
            "valid".to_string()
        } else {
            match check_diagonal_exponent(&o) {
                Ok(()) => "valid".to_string(),
                Err(e) => {
                    code = EXIT_MISMATCH;
                    format!("invalid: {e}")
                }
            }
        };
        rows.push(("catalog", status));
    }
    Ok(Output::with_code(render_key_values(format, &rows)?, code))
}

fn render_reports(format: Format, reports: &[IndexReport]) -> Result<String> {
    Ok(match format {
        Format::Human => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => reports_to_json(reports)? + "\n",
        Format::Csv => reports_to_csv(reports)?,
    })
}

fn cmd_nori(format: Format, p: i64, trials: u64, seed: u64) -> Result<Output> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut orders = Vec::new();
    let mut code = EXIT_OK;
    for trial in 0..trials {
        let count = 1 + (trial % 3) as usize;
        let gens: Vec<_> = (0..count).map(|_| random_unipotent(&mut rng, p)).collect();
        match nori_order_check(p, &gens) {
            Ok(order) => orders.push(order as i64),
            Err(Error::CorollaryViolated { order, .. }) => {
                code = EXIT_MISMATCH;
                orders.push(-(order as i64));
            }
            Err(e) => return Err(e),
        }
    }
    let allowed = [1, p, p * p * p - p];
    let tally: Vec<(i64, usize)> = allowed.iter().map(|&o| (o, orders.iter().filter(|&&x| x == o).count())).collect();
    let rows = vec![
        ("p", p.to_string()),
        ("trials", trials.to_string()),
        ("order_1", tally[0].1.to_string()),
        ("order_p", tally[1].1.to_string()),
        ("order_p3_minus_p", tally[2].1.to_string()),
        ("violations", orders.iter().filter(|&&x| x < 0).count().to_string()),
    ];
    Ok(Output::with_code(render_key_values(format, &rows)?, code))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    let bound = resolve_bound(cli.bound)?;
    match &cli.command {
        Command::Order { d, max_prime } => cmd_order(format, *d, *max_prime),
        Command::Ideal { d, ideal, factor, indices } => cmd_ideal(format, *d, ideal, *factor, *indices),
        Command::Origami { m, n } => cmd_origami(format, *m, *n),
        Command::Verify { m, n, ideal } => {
            let o = Origami::new(*m, *n)?;
            let note = catalog_note(&o)?;
            let a = parse_literal(o.order(), ideal)?;
            Output::reports(format, &[verify(&o, &a, bound)?]).map(|out| out.note(note))
        }
        Command::VerifyRange { m, n, max_norm } => {
            let o = Origami::new(*m, *n)?;
            let note = catalog_note(&o)?;
            Output::reports(format, &verify_range(&o, *max_norm, bound)?).map(|out| out.note(note))
        }
        Command::Nori { p, trials, seed } => cmd_nori(format, *p, *trials, *seed),
    }
}

/// Shapes other than `L(2,2)` whose catalog has no `F` generate a proper
/// subgroup, so their measured index may fall short of the prediction.
fn catalog_note(o: &Origami) -> Result<Option<String>> {
    let cat = generator_catalog(o)?;
    Ok(((o.m, o.n) != (2, 2) && cat.get("F").is_none()).then(|| {
        format!("note: the catalog of {o} has no F; measured indices are lower bounds (use L(d-1,2) or L(d-2,3))")
    }))
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::ValidationFailed(_) | Error::CorollaryViolated { .. } => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::PreconditionViolated(e.to_string())),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            for line in &o.diagnostics {
                let _ = writeln!(err, "{line}");
            }
            if write!(out, "{}", o.text).is_err() {
                return EXIT_USAGE;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("homveech").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--m", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["ideal", "--d", "5", "--ideal", "[3;2+w]"]).0, EXIT_USAGE);
        let (code, out, err) = call(&["ideal", "--d", "5", "--ideal", "[[["]);
        assert_eq!((code, out.as_str()), (EXIT_USAGE, ""));
        assert!(err.contains("bad ideal literal"));
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_human() {
        let (code, out, _) = call(&["verify", "--m", "2", "--n", "2", "--ideal", "P(2,0)"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("predicted 2") && out.contains("measured 2") && out.contains("match"), "{out}");
    }

    #[test]
    fn bound_flag() {
        let (code, out, _) = call(&["verify", "--m", "4", "--n", "2", "--ideal", "(7)", "--bound", "10"]);
        assert_eq!(code, EXIT_BOUND);
        assert!(out.contains("bound-exceeded"));
    }
}
