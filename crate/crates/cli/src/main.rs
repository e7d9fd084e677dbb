//! `torfix`: fixed-point counts and growth classification for complex
//! torus endomorphisms.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use torfix::dynamics::{
    classify_split, ergodicity_from_split, log_spaced_points, mahler_convergence_table,
    mahler_measure, GrowthKind, DEFAULT_PRECISION_BITS,
};
use torfix::endo::{delta_n_companion, delta_n_resultant, fix_sequence, GaussianMatrix};
use torfix::family::{scan_family, FamilyRow};
use torfix::input::{DecimalInt, EndoInput};
use torfix::specsplit::{cyclotomic_split, IrreducibilityWitness};
use torfix::{Error, IntPoly};

#[derive(Parser)]
#[command(name = "torfix", version, about = "Fixed points of complex torus endomorphisms")]
struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(
        long,
        global = true,
        env = "TORFIX_PRECISION_BITS",
        default_value_t = DEFAULT_PRECISION_BITS,
        value_parser = clap::value_parser!(u32).range(53..)
    )]
    precision_bits: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Growth type, period, entropy and spectral diagnostics.
    Classify(InputArgs),
    /// Exact F(1..n_max) with its periodic and wild factors.
    Sequence {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// (1/n) log|Delta_n| at log-spaced n, and the Mahler measure.
    Mahler {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// Scan the palindromic family p_g for g in g_min..=g_max.
    ScanFamily {
        #[arg(long, default_value_t = 3)]
        g_min: usize,
        #[arg(long, default_value_t = 50)]
        g_max: usize,
        #[arg(long, default_value_t = 25)]
        prime_budget: usize,
    },
    /// Write the bundled example inputs as JSON files.
    Examples {
        #[arg(long, default_value = "torfix-examples")]
        out_dir: PathBuf,
    },
    /// Quick consistency checks on known cases.
    Selfcheck,
}

#[derive(Args)]
struct InputArgs {
    /// JSON input document; `-` reads stdin.
    #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
    input: Option<PathBuf>,

    /// Inline characteristic polynomial, ascending coefficients: `1,-3,1`.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,

    /// Reject polynomial inputs that are not monic.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    monic_check: bool,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_)) | Failure::Usage(_) => 2,
            Failure::Core(Error::Domain(_)) | Failure::Core(Error::InputValidation(_)) => 3,
            Failure::Core(Error::Internal(_)) | Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j as usize).build_global() {
            eprintln!("torfix: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("torfix: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let out = match &cli.command {
        Command::Classify(input) => classify(cli, &load(input)?)?,
        Command::Sequence { input, n_max } => sequence(cli, &load(input)?, *n_max)?,
        Command::Mahler { input, n_max } => mahler(cli, &load(input)?, *n_max)?,
        Command::ScanFamily {
            g_min,
            g_max,
            prime_budget,
        } => scan(cli, *g_min, *g_max, *prime_budget)?,
        Command::Examples { out_dir } => examples(out_dir)?,
        Command::Selfcheck => return selfcheck(cli),
    };
    emit(cli, &out)
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(args: &InputArgs) -> CliResult<EndoInput> {
    let input = match (&args.input, &args.poly) {
        (_, Some(poly)) => EndoInput::Polynomial(parse_inline_poly(poly)?),
        (Some(path), None) => {
            let text = if path == Path::new("-") {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(path)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
            };
            EndoInput::parse(&text)?
        }
        (None, None) => return Err(Failure::Usage("one of --input or --poly is required".into())),
    };
    if args.monic_check {
        if let EndoInput::Polynomial(p) = &input {
            if !p.is_monic() {
                return Err(Error::Domain(format!("polynomial {p} is not monic")).into());
            }
            if p.is_constant() {
                return Err(Error::Domain("polynomial has degree 0".into()).into());
            }
        }
    }
    Ok(input)
}

fn parse_inline_poly(s: &str) -> CliResult<IntPoly> {
    let coeffs = s
        .split(',')
        .map(|c| c.parse::<DecimalInt>().map(|d| d.0))
        .collect::<Result<Vec<BigInt>, _>>()?;
    let p = IntPoly::new(coeffs);
    if p.is_zero() {
        return Err(Error::Parse("polynomial has no nonzero coefficient".into()).into());
    }
    Ok(p)
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn kind_name(kind: GrowthKind) -> &'static str {
    match kind {
        GrowthKind::Exponential => "Exponential",
        GrowthKind::Periodic => "Periodic",
        GrowthKind::Mixed => "Mixed",
    }
}

fn classify(cli: &Cli, input: &EndoInput) -> CliResult<String> {
    let chi_r = input.chi_r()?;
    let split = cyclotomic_split(&chi_r)?;
    let class = classify_split(&split, cli.precision_bits)?;
    let ergodicity = ergodicity_from_split(&split);
    let report = class.report(input.realization());
    match cli.format {
        Format::Json => {
            let mut doc = serde_json::to_value(&report).expect("serializable");
            let obj = doc.as_object_mut().expect("object");
            obj.insert("chi_r".into(), serde_json::to_value(&chi_r).expect("serializable"));
            obj.insert("split".into(), serde_json::to_value(&split).expect("serializable"));
            obj.insert(
                "ergodicity".into(),
                serde_json::to_value(&ergodicity).expect("serializable"),
            );
            Ok(to_json_text(&doc))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "chi_r: {chi_r}");
            let _ = writeln!(s, "kind: {}", kind_name(report.kind));
            let _ = writeln!(s, "period: {}", report.period);
            let _ = writeln!(s, "forbidden residues: {:?}", report.forbidden_residues);
            let _ = writeln!(
                s,
                "entropy: {} (+/- {:.1e})",
                report.entropy.log_value, report.entropy.error_bound
            );
            let _ = writeln!(s, "cyclotomic orders: {:?}", split.cyclotomic);
            let _ = writeln!(s, "wild part: {}", split.wild);
            let _ = writeln!(s, "unit-circle roots (distinct, not roots of unity): {}", split.unit_circle_distinct);
            let _ = writeln!(s, "no root-of-unity eigenvalues: {}", ergodicity.no_root_of_unity_eigenvalues);
            if let Some(k) = ergodicity.finite_order_candidate {
                let _ = writeln!(s, "finite-order candidate: every eigenvalue is a root of unity; order divides {k} if diagonalizable");
            }
            if report.formal_input {
                let _ = writeln!(s, "note: formal input, chi_r not checked to be chi_a * conj(chi_a)");
            }
            Ok(s)
        }
        Format::Csv => Err(Failure::Usage("classify has no csv form; use json or text".into())),
    }
}

fn sequence(cli: &Cli, input: &EndoInput, n_max: u64) -> CliResult<String> {
    let chi_r = input.chi_r()?;
    let seq = fix_sequence(&chi_r, n_max, input.realization())?;
    Ok(match cli.format {
        Format::Json => to_json_text(&serde_json::to_value(&seq).expect("serializable")),
        Format::Csv => seq.to_csv(),
        Format::Text => {
            let mut s = String::new();
            for row in &seq.rows {
                let _ = writeln!(s, "F({}) = {}", row.n, row.value);
            }
            s
        }
    })
}

fn mahler(cli: &Cli, input: &EndoInput, n_max: u64) -> CliResult<String> {
    let q = input.chi_r()?;
    let table = mahler_convergence_table(&q, &log_spaced_points(n_max))?;
    let m = mahler_measure(&q, cli.precision_bits)?;
    Ok(match cli.format {
        Format::Json => to_json_text(&json!({
            "points": table.iter().map(|&(n, v)| json!({"n": n, "value": v})).collect::<Vec<_>>(),
            "m": m,
        })),
        Format::Csv => {
            let mut s = String::from("n,log_delta_over_n\n");
            for (n, v) in &table {
                let _ = writeln!(s, "{n},{v}");
            }
            let _ = writeln!(s, "m,{}", m.log_value);
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (n, v) in &table {
                let _ = writeln!(s, "{n:>8}  {v:.12}");
            }
            let _ = writeln!(s, "m = {:.15} (+/- {:.1e})", m.log_value, m.error_bound);
            s
        }
    })
}

fn witness_cells(w: &IrreducibilityWitness) -> (&'static str, String) {
    match w {
        IrreducibilityWitness::Irreducible(p) => ("irreducible", p.to_string()),
        IrreducibilityWitness::Inconclusive => ("inconclusive", String::new()),
    }
}

fn scan(cli: &Cli, g_min: usize, g_max: usize, prime_budget: usize) -> CliResult<String> {
    let rows: Vec<FamilyRow> = scan_family(g_min, g_max, prime_budget, cli.precision_bits)?;
    Ok(match cli.format {
        Format::Json => to_json_text(&serde_json::to_value(&rows).expect("serializable")),
        Format::Csv => {
            let mut s = String::from(
                "g,cyclotomic_factor,unit_circle_distinct,irreducibility,prime,log_mahler,error_bound\n",
            );
            for r in &rows {
                let (status, prime) = witness_cells(&r.irreducibility);
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.g,
                    r.has_cyclotomic_factor(),
                    r.unit_circle_distinct,
                    status,
                    prime,
                    r.mahler.log_value,
                    r.mahler.error_bound
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let (status, prime) = witness_cells(&r.irreducibility);
                let _ = writeln!(
                    s,
                    "g={:<4} cyclotomic={:<5} unit_circle={:<4} {status} {prime:<4} m={:.12}",
                    r.g,
                    r.has_cyclotomic_factor(),
                    r.unit_circle_distinct,
                    r.mahler.log_value
                );
            }
            s
        }
    })
}

fn example_inputs() -> Vec<(&'static str, EndoInput)> {
    let poly = |c: &[i64]| EndoInput::Polynomial(IntPoly::from_i64s(c));
    let gauss = |rows: &[&[(i64, i64)]]| {
        EndoInput::Gaussian(GaussianMatrix::from_i64_rows(rows).expect("square"))
    };
    vec![
        (
            "e3_gaussian",
            gauss(&[
                &[(0, 0), (0, 0), (0, -1)],
                &[(1, 0), (0, 0), (0, -2)],
                &[(0, 0), (1, 0), (-2, 0)],
            ]),
        ),
        // (t+1)^2 (t-2)^2
        ("mixed", poly(&[4, 4, -3, -2, 1])),
        ("scalar_m2_g1", gauss(&[&[(2, 0)]])),
        ("periodic_minus_one", gauss(&[&[(-1, 0)]])),
        ("golden", poly(&[-1, -1, 1])),
        ("lehmer", poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])),
    ]
}

fn examples(out_dir: &Path) -> CliResult<String> {
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Io(format!("{}: {e}", out_dir.display())))?;
    let mut listing = String::new();
    for (name, input) in example_inputs() {
        let path = out_dir.join(format!("{name}.json"));
        fs::write(&path, to_json_text(&input.to_json()))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        let _ = writeln!(listing, "{}", path.display());
    }
    Ok(listing)
}

fn selfcheck(cli: &Cli) -> CliResult<()> {
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let (_, e3) = example_inputs().remove(0);
    let chi = e3.chi_r()?;
    checks.push(("E^3 characteristic polynomial", chi == IntPoly::from_i64s(&[1, 4, 4, 0, 4, 4, 1])));
    let split = cyclotomic_split(&chi)?;
    let class = classify_split(&split, cli.precision_bits)?;
    checks.push((
        "E^3 structure",
        split.cyclotomic.is_empty()
            && split.unit_circle_distinct >= 2
            && class.kind == GrowthKind::Exponential,
    ));

    let mixed = IntPoly::from_i64s(&[4, 4, -3, -2, 1]);
    let seq = fix_sequence(&mixed, 12, torfix::endo::Realization::Formal)?;
    let pattern = seq.rows.iter().all(|r| {
        let expected = if r.n % 2 == 0 {
            BigInt::from(0)
        } else {
            (BigInt::from(2u32).pow(r.n as u32) - 1u32).pow(2u32) * 4u32
        };
        BigInt::from(r.value.clone()) == expected
    });
    checks.push(("mixed zero pattern", pattern));

    let lehmer = IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let engines = (1..=20).all(|n| {
        matches!(
            (delta_n_resultant(&lehmer, n), delta_n_companion(&lehmer, n)),
            (Ok(a), Ok(b)) if a == b
        )
    });
    checks.push(("engine agreement on Lehmer", engines));
    let m = mahler_measure(&lehmer, cli.precision_bits)?;
    checks.push(("Lehmer measure", (m.log_value - 0.162_357_612_007_738).abs() < 1e-12));

    let mut s = String::new();
    let mut all = true;
    for (name, ok) in &checks {
        all &= ok;
        let _ = writeln!(s, "{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    emit(cli, &s)?;
    if all {
        Ok(())
    } else {
        Err(Failure::Core(Error::Internal("self-check failed".into())))
    }
}
