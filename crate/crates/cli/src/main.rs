use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use brieskorn::floer::{cobordism_report, jones_floer_audit, knot_data, JonesAudit};
use brieskorn::repspace::{
    casson_lambda, enumerate_rotation_vectors, realize_representation, verify_rho_invariance, RotationVector,
    RELATION_TOL,
};
use brieskorn::{Error, InvariantBundle, SeifertData};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

const SCHEMA: u32 = 1;
const CSV_HEADER: &str = "p,q,r,lambda,sign_k,r0,r2,nu,mu_bar,det,jones_logderiv,flags";

#[derive(Parser)]
#[command(name = "brieskorn", version, about = "Invariants of Brieskorn homology spheres and their Montesinos knots")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format; `--json` and `--csv` are shorthands.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    #[arg(long, global = true)]
    csv: bool,
    /// Promote report-only audit findings to exit status 2.
    #[arg(long, global = true)]
    strict: bool,
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "BRIESKORN_WORKERS")]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Irreducible SU(2) representation classes.
    Reps {
        sigma: String,
        /// Build explicit quaternion matrices and check the involution.
        #[arg(long)]
        realize: bool,
        /// Relation residual tolerance for `--realize`.
        #[arg(long, default_value_t = RELATION_TOL)]
        tol: f64,
    },
    /// Montesinos knot invariants.
    Knot {
        sigma: String,
        /// Print the PD code of the built diagram.
        #[arg(long)]
        export_pd: bool,
    },
    /// Full invariant bundle and the Jones–Floer audit.
    Audit { sigma: String },
    /// Bundles for every pairwise coprime triple in a product range.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_product: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        min_product: u64,
    },
    /// Homology cobordism obstruction from ν.
    Cobordism {
        sigma: String,
        /// Test the claim that the sphere bounds an acyclic manifold.
        #[arg(long)]
        claim_zero: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TheoremViolation { .. } => 2,
            Error::CrossingBudget { .. } => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Run = Result<(String, bool), Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        s.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

#[derive(Serialize)]
struct RepRow {
    rotation: RotationVector,
    residual: Option<f64>,
    rho_square_residual: Option<f64>,
}

#[derive(Serialize)]
struct RepsReport {
    schema: u32,
    seifert: SeifertData,
    lambda: i64,
    classes: Vec<RepRow>,
}

fn reps(data: SeifertData, realize: bool, tol: f64, format: Format) -> Run {
    let mut classes = Vec::new();
    let mut ok = true;
    for v in enumerate_rotation_vectors(&data)? {
        let (residual, rho) = if realize {
            let rep = realize_representation(&data, &v)?;
            let r = rep.relation_residual(&data);
            let w = verify_rho_invariance(&rep)?;
            ok &= r < tol && w.square_residual < tol;
            (Some(r), Some(w.square_residual))
        } else {
            (None, None)
        };
        classes.push(RepRow { rotation: v, residual, rho_square_residual: rho });
    }
    let report = RepsReport { schema: SCHEMA, lambda: casson_lambda(&data)?, seifert: data, classes };
    let out = match format {
        Format::Json => json(&report),
        _ => {
            let mut header = vec!["h", "l1", "l2", "l3"];
            if realize {
                header.extend(["residual", "rho2+1"]);
            }
            let sep = if format == Format::Csv { "," } else { "" };
            let rows: Vec<Vec<String>> = report
                .classes
                .iter()
                .map(|c| {
                    let mut row = vec![c.rotation.h_sign.to_string()];
                    row.extend(c.rotation.ell.iter().map(i64::to_string));
                    row.extend(c.residual.iter().chain(&c.rho_square_residual).map(|r| format!("{r:.1e}")));
                    row
                })
                .collect();
            if sep.is_empty() {
                format!("{}: lambda = {}\n", report.seifert, report.lambda) + &table(&header, &rows)
            } else {
                let mut s = header.join(sep) + "\n";
                for r in rows {
                    s += &(r.join(sep) + "\n");
                }
                s
            }
        }
    };
    Ok((out, ok))
}

#[derive(Serialize)]
struct KnotReport {
    schema: u32,
    seifert: SeifertData,
    crossings: usize,
    jones: brieskorn::LaurentPolynomial,
    signature: i64,
    determinant: u64,
    jones_log_derivative: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pd: Option<brieskorn::PdCode>,
}

fn knot(data: SeifertData, export_pd: bool, format: Format) -> Run {
    let k = knot_data(&data)?;
    let report = KnotReport {
        schema: SCHEMA,
        crossings: k.pd.len(),
        jones: k.jones,
        signature: k.signature,
        determinant: k.determinant,
        jones_log_derivative: k.log_derivative.to_string(),
        pd: export_pd.then_some(k.pd),
        seifert: data,
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => format!(
            "crossings,signature,det,jones_logderiv\n{},{},{},{}\n",
            report.crossings, report.signature, report.determinant, report.jones_log_derivative
        ),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "knot of {}", report.seifert);
            let _ = writeln!(s, "crossings    {}", report.crossings);
            let _ = writeln!(s, "jones        {}", report.jones.display_in("t"));
            let _ = writeln!(s, "signature    {}", report.signature);
            let _ = writeln!(s, "determinant  {}", report.determinant);
            let _ = writeln!(s, "V'(-1)/V(-1) {}", report.jones_log_derivative);
            if let Some(pd) = &report.pd {
                let _ = writeln!(s, "pd           {pd}");
            }
            s
        }
    };
    Ok((out, true))
}

#[derive(Serialize)]
struct AuditReport {
    schema: u32,
    bundle: InvariantBundle,
    jones_audit: JonesAudit,
}

fn flags(b: &InvariantBundle, audit: &JonesAudit) -> String {
    let mut f = Vec::new();
    f.push(if b.audit_flags.theorem1_ok { "t1" } else { "t1-fail" });
    f.push(if audit.strict { "t3" } else { "t3-report" });
    if audit.mullins {
        f.push("mullins");
    }
    if b.audit_flags.mirror_calibrated {
        f.push("calibrated");
    }
    f.join(";")
}

fn csv_row(b: &InvariantBundle, audit: &JonesAudit) -> String {
    let a = &b.seifert.multiplicities;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}\n",
        a[0], a[1], a[2], b.lambda, b.sign_k, b.ranks.r0, b.ranks.r2, b.nu, b.mu_bar, b.determinant,
        b.jones_log_derivative, flags(b, audit)
    )
}

fn table_row(b: &InvariantBundle, audit: &JonesAudit) -> Vec<String> {
    let a = &b.seifert.multiplicities;
    vec![
        format!("({},{},{})", a[0], a[1], a[2]),
        b.lambda.to_string(),
        b.sign_k.to_string(),
        format!("{} {} {} {}", b.ranks.r0, b.ranks.r2, b.ranks.r4, b.ranks.r6),
        b.nu.to_string(),
        b.mu_bar.to_string(),
        b.determinant.to_string(),
        b.jones_log_derivative.to_string(),
        flags(b, audit),
    ]
}

const TABLE_HEADER: [&str; 9] = ["sigma", "lambda", "sign_k", "I0 I2 I4 I6", "nu", "mu_bar", "det", "V'/V(-1)", "flags"];

fn audit(data: SeifertData, format: Format) -> Run {
    let bundle = InvariantBundle::compute(&data)?;
    let jones_audit = jones_floer_audit(&bundle);
    let ok = jones_audit.strict;
    let out = match format {
        Format::Json => json(&AuditReport { schema: SCHEMA, bundle, jones_audit }),
        Format::Csv => format!("{CSV_HEADER}\n{}", csv_row(&bundle, &jones_audit)),
        Format::Table => {
            let mut s = table(&TABLE_HEADER, &[table_row(&bundle, &jones_audit)]);
            if let Some(note) = &jones_audit.note {
                let _ = writeln!(s, "note: {note}");
            }
            s
        }
    };
    Ok((out, ok))
}

/// Pairwise coprime `2 ≤ p < q < r` with `lo ≤ pqr ≤ hi`, lexicographic.
fn sweep_triples(lo: u64, hi: u64) -> Vec<[i64; 3]> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let mut out = Vec::new();
    let mut p = 2;
    while p * (p + 1) * (p + 2) <= hi {
        let mut q = p + 1;
        while p * q * (q + 1) <= hi {
            for r in q + 1..=hi / (p * q) {
                if p * q * r >= lo && gcd(p, q) == 1 && gcd(p, r) == 1 && gcd(q, r) == 1 {
                    out.push([p as i64, q as i64, r as i64]);
                }
            }
            q += 1;
        }
        p += 1;
    }
    out
}

#[derive(Serialize)]
struct SweepReport {
    schema: u32,
    items: Vec<AuditReport>,
}

fn sweep(lo: u64, hi: u64, format: Format) -> Run {
    let results: Vec<Result<InvariantBundle, Error>> = sweep_triples(lo, hi)
        .par_iter()
        .map(|m| InvariantBundle::compute(&SeifertData::solve(m)?))
        .collect();
    let mut items = Vec::with_capacity(results.len());
    for r in results {
        let bundle = r?;
        let jones_audit = jones_floer_audit(&bundle);
        items.push(AuditReport { schema: SCHEMA, bundle, jones_audit });
    }
    let ok = items.iter().all(|i| i.jones_audit.strict);
    let out = match format {
        Format::Json => json(&SweepReport { schema: SCHEMA, items }),
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for i in &items {
                s += &csv_row(&i.bundle, &i.jones_audit);
            }
            s
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = items.iter().map(|i| table_row(&i.bundle, &i.jones_audit)).collect();
            table(&TABLE_HEADER, &rows)
        }
    };
    Ok((out, ok))
}

fn cobordism(data: SeifertData, claim_zero: bool, format: Format) -> Run {
    #[derive(Serialize)]
    struct Wrapped {
        schema: u32,
        #[serde(flatten)]
        report: brieskorn::floer::CobordismReport,
    }
    let report = cobordism_report(&data, claim_zero)?;
    let out = match format {
        Format::Json => json(&Wrapped { schema: SCHEMA, report }),
        Format::Csv => format!("sigma,nu,claim_refuted\n\"{}\",{},{}\n", report.seifert, report.nu, report.claim_refuted),
        Format::Table => report.summary + "\n",
    };
    Ok((out, true))
}

fn run(cli: Cli) -> Run {
    let format = match (cli.json, cli.csv, cli.format) {
        (true, _, _) => Format::Json,
        (_, true, _) => Format::Csv,
        (_, _, Some(f)) => f,
        _ if matches!(cli.verb, Verb::Sweep { .. }) => Format::Csv,
        _ => Format::Table,
    };
    let parse = |s: &str| s.parse::<SeifertData>().map_err(Failure::from);
    match cli.verb {
        Verb::Reps { sigma, realize, tol } => reps(parse(&sigma)?, realize, tol, format),
        Verb::Knot { sigma, export_pd } => knot(parse(&sigma)?, export_pd, format),
        Verb::Audit { sigma } => audit(parse(&sigma)?, format),
        Verb::Sweep { max_product, min_product } => {
            if let Some(n) = cli.workers {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
            }
            sweep(min_product, max_product, format)
        }
        Verb::Cobordism { sigma, claim_zero } => cobordism(parse(&sigma)?, claim_zero, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let strict = cli.strict;
    match run(cli) {
        Ok((out, ok)) => {
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if strict && !ok {
                eprintln!("strict mode: audit findings present");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
