//! `sl2chars`: evaluate SL2 characters, run the verification suites and
//! compute congruence character groups of number fields.

mod input;
mod report;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use sl2chars::datasets::{self, Status};
use sl2chars::numfield::{self, dedekind_is_pmaximal, unit_square_ideal, NumberField};
use sl2chars::verify::{self, Suite, VerifyOptions};
use sl2chars::{char_eval, CharKind, CharacterSpec, Error, Ring};

use report::{FieldRecord, Format};

/// An error with its exit code: 1 for domain failures, 2 for usage errors.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotPrime(_) => Failure::usage(e.to_string()),
            _ => Failure::domain(e.to_string()),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "sl2chars",
    version,
    about = "Linear characters of SL2 over finite rings and rings of integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a character on a matrix.
    Eval(EvalArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Congruence character groups of number fields.
    Field(FieldArgs),
    /// Recompute an embedded table of number fields.
    Reproduce(ReproduceArgs),
    /// Splitting of a prime in a number field.
    Split(SplitArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated values.
    #[arg(long)]
    tsv: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.tsv {
            Format::Tsv
        } else {
            Format::Human
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// eps2, eps3, eps4, eps4p or trivial.
    kind: String,
    /// Work over Z/N.
    #[arg(
        long = "mod",
        value_name = "N",
        required_unless_present = "dual",
        conflicts_with = "dual"
    )]
    modulus: Option<u64>,
    /// Work over F2[a]/(a^2).
    #[arg(long)]
    dual: bool,
    /// Entries a,b,c,d of [[a,b],[c,d]].
    #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
    matrix: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// formulas, decompositions, lemmas, oracle-equivalence or all.
    suite: String,
    /// Moduli for the oracle-equivalence suite (repeatable).
    #[arg(long = "n", value_name = "N")]
    moduli: Vec<u64>,
    /// Largest SL2(Z/N) the oracle may build.
    #[arg(long, default_value_t = VerifyOptions::default().max_group_size)]
    max_group_size: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FieldArgs {
    /// File with one polynomial per line: ascending coefficients, optional `: order`.
    #[arg(required_unless_present = "poly", conflicts_with = "poly")]
    file: Option<PathBuf>,
    /// Ascending coefficients of a single polynomial.
    #[arg(long, value_name = "C0,C1,...", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Units of Z[x]/(f) as ascending coefficients; reports the ideal generated by u^2 - 1.
    #[arg(
        long = "unit",
        value_name = "C0,C1,...",
        allow_hyphen_values = true,
        requires = "poly"
    )]
    units: Vec<String>,
    /// Skip the irreducibility proof.
    #[arg(long)]
    trust_irreducible: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Table id: 1, 2 or 3.
    table: u8,
    /// Also evaluate rows outside the table's default scope.
    #[arg(long)]
    extended: bool,
    #[arg(long)]
    trust_irreducible: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SplitArgs {
    /// Ascending coefficients.
    #[arg(long, value_name = "C0,C1,...", allow_hyphen_values = true)]
    poly: String,
    /// Rational prime.
    #[arg(long, short)]
    p: u64,
    /// Always compute in a Round 2 order, even when Dedekind's criterion holds.
    #[arg(long)]
    via_order: bool,
    #[arg(long)]
    trust_irreducible: bool,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Field(a) => cmd_field(a),
        Command::Reproduce(a) => cmd_reproduce(a),
        Command::Split(a) => cmd_split(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}

fn cmd_eval(a: EvalArgs) -> Result<ExitCode, Failure> {
    let kind: CharKind = a
        .kind
        .parse()
        .map_err(|_| Failure::usage(format!("unknown character `{}`", a.kind)))?;
    let ring = match a.modulus {
        Some(n) => Ring::integers_mod(n).map_err(|e| Failure::usage(e.to_string()))?,
        None => Ring::dual_f2(),
    };
    let m = input::parse_matrix(ring, &a.matrix)?;
    if !m.is_sl2() {
        return Err(Failure::domain(format!(
            "determinant is {}, not 1",
            m.det()
        )));
    }
    let spec = CharacterSpec::new(ring, kind)?;
    let v = char_eval(&spec, &m)?;
    if a.json {
        let out = serde_json::json!({
            "kind": kind.name(),
            "ring": ring.to_string(),
            "matrix": m.entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "value": v.to_string(),
            "symbol": v.symbol(),
        });
        println!("{out}");
    } else {
        match v.symbol() {
            Some(s) => println!("{v} ({s})"),
            None => println!("{v}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    let suite: Suite = a.suite.parse().map_err(Failure::usage)?;
    let mut opts = VerifyOptions {
        max_group_size: a.max_group_size,
        ..VerifyOptions::default()
    };
    if !a.moduli.is_empty() {
        opts.oracle_moduli = a.moduli;
        opts.include_dual = false;
    }
    if let Some(&n) = opts.oracle_moduli.iter().find(|&&n| n < 2) {
        return Err(Failure::usage(format!(
            "--n {n}: modulus must be at least 2"
        )));
    }
    let checks = verify::run_suite(suite, &opts).map_err(|e| match e {
        Error::GroupTooLarge { .. } => Failure::usage(format!("{e}; raise --max-group-size")),
        other => other.into(),
    })?;
    let passed = checks.iter().filter(|c| c.passed).count();
    if a.json {
        let rows: Vec<_> = checks
            .iter()
            .map(|c| serde_json::json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        let out = serde_json::json!({"suite": suite.to_string(), "passed": passed, "total": checks.len(), "checks": rows});
        println!("{out}");
    } else {
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                println!("{tag}  {}", c.name);
            } else {
                println!("{tag}  {}  ({})", c.name, c.detail);
            }
        }
        println!("{suite}: {passed}/{} passed", checks.len());
    }
    Ok(if passed == checks.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn analyze(poly: sl2chars::IntPoly, trust: bool) -> Result<sl2chars::CharGroupDescriptor, Error> {
    let field = if trust {
        NumberField::new_trusted(poly)?
    } else {
        NumberField::new(poly)?
    };
    field.character_group()
}

fn cmd_field(a: FieldArgs) -> Result<ExitCode, Failure> {
    let lines = match (&a.file, &a.poly) {
        (_, Some(p)) => vec![input::PolyLine {
            poly: input::parse_coeffs(p)?,
            expected: None,
        }],
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            input::parse_poly_file(&text)?
        }
        (None, None) => unreachable!("clap requires one of file or --poly"),
    };
    let trust = a.trust_irreducible;
    let records: Vec<FieldRecord> = lines
        .par_iter()
        .map(|l| {
            let outcome = analyze(l.poly.clone(), trust);
            FieldRecord::new(None, &l.poly, l.expected, outcome)
        })
        .collect();
    let format = a.output.format();
    print!("{}", report::field_table(&records, format));

    if !a.units.is_empty() {
        let poly = input::parse_coeffs(a.poly.as_deref().expect("clap enforces --poly"))?;
        let field = if trust {
            NumberField::new_trusted(poly)?
        } else {
            NumberField::new(poly)?
        };
        let units = a
            .units
            .iter()
            .map(|u| input::parse_coeffs(u))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = unit_square_ideal(&field, &units)?;
        print!("{}", report::unit_ideal(&ideal, format));
    }
    let failed = records
        .iter()
        .any(|r| r.error.is_some() || r.status == "mismatch");
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_reproduce(a: ReproduceArgs) -> Result<ExitCode, Failure> {
    let table = datasets::dataset(a.table)
        .ok_or_else(|| Failure::usage(format!("unknown table {} (expected 1, 2 or 3)", a.table)))?;
    let rows: Vec<_> = if a.extended {
        table.rows.iter().collect()
    } else {
        table.rows_in_scope().collect()
    };
    let trust = a.trust_irreducible;
    let records: Vec<FieldRecord> = rows
        .par_iter()
        .map(|&row| {
            let outcome = datasets::evaluate_row(row, trust);
            let mut rec = FieldRecord::new(
                Some(row.key),
                &row.poly(),
                None,
                outcome
                    .as_ref()
                    .map(|o| o.descriptor.clone())
                    .map_err(Clone::clone),
            );
            rec.expected = Some(match row.expected {
                datasets::Expected::Order(o) => o,
                datasets::Expected::Unknown { congruence } => congruence,
            });
            if let Ok(o) = &outcome {
                rec.status = o.status.to_string();
            }
            rec
        })
        .collect();
    let count = |s: Status| records.iter().filter(|r| r.status == s.to_string()).count();
    let (matched, flagged) = (count(Status::Match), count(Status::FlaggedUnknown));
    let bad = records.len() - matched - flagged;
    let mut summary = format!("{matched}/{} match", records.len());
    if flagged > 0 {
        summary += &format!(", {flagged} flagged-unknown");
    }
    if bad > 0 {
        summary += &format!(", {bad} mismatch");
    }
    let format = a.output.format();
    if format == Format::Human {
        println!(
            "table {}: {} ({} rows evaluated of {})",
            table.id,
            table.title,
            records.len(),
            table.rows.len()
        );
    }
    print!("{}", report::field_table(&records, format));
    if format == Format::Human {
        println!("{summary}");
    }
    Ok(if bad == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_split(a: SplitArgs) -> Result<ExitCode, Failure> {
    let poly = input::parse_coeffs(&a.poly)?;
    let field = if a.trust_irreducible {
        NumberField::new_trusted(poly.clone())?
    } else {
        NumberField::new(poly.clone())?
    };
    let dedekind = dedekind_is_pmaximal(&poly, a.p)?;
    let split = if a.via_order {
        numfield::prime_splitting_via_order(&poly, a.p)?
    } else {
        field.split(a.p)?
    };
    let order = numfield::round2_pmaximal_order(&poly, a.p)?;
    if a.json {
        let parts: Vec<_> = split
            .parts
            .iter()
            .map(|q| serde_json::json!({"e": q.e, "f": q.f}))
            .collect();
        let out = serde_json::json!({
            "poly": poly.to_string(),
            "p": a.p,
            "dedekind_pmaximal": dedekind,
            "index_p_part": order.index().to_string(),
            "parts": parts,
        });
        println!("{out}");
    } else {
        println!("poly: {poly}");
        println!("p: {}", a.p);
        println!(
            "Z[x]/(f) p-maximal: {}",
            if dedekind { "yes" } else { "no" }
        );
        println!("p-part of index: {}", order.index());
        println!("primes (e,f): {split}");
    }
    Ok(ExitCode::SUCCESS)
}
