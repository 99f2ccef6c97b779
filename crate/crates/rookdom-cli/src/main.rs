//! Command-line driver: compute rook-graph domination polynomials by any of
//! the four methods, cross-check them, evaluate totals, emit OEIS sequences,
//! and benchmark.
//!
//! Exit codes: 0 success, 1 verification failure (methods disagree),
//! 2 usage error, 3 oracle capacity exceeded.

mod render;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rookdom::closed::{domination_poly_closed, edge_cover_poly, total_dominating_sets};
use rookdom::{BoardDims, Error, IntPolynomial, Method, MethodReport};

#[derive(Parser)]
#[command(
    name = "rookdom",
    version,
    about = "Exact domination polynomials of n-by-m rook graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination polynomial of one board
    Poly(PolyArgs),
    /// Cross-check the methods against each other over a board range
    Check(CheckArgs),
    /// Evaluate the domination polynomial at an integer point
    Eval(EvalArgs),
    /// Generate OEIS sequences of square-board values
    Sequence(SequenceArgs),
    /// Time methods on one board, verifying they agree first
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Symmetric,
    Recursive,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(arg: MethodArg) -> Self {
        match arg {
            MethodArg::Closed => Method::Closed,
            MethodArg::Symmetric => Method::Symmetric,
            MethodArg::Recursive => Method::Recursive,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct PolyArgs {
    /// number of rows
    #[arg(long)]
    n: usize,
    /// number of columns
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// largest row count to check (from 1)
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// largest column count to check (from 1)
    #[arg(long, default_value_t = 5)]
    max_m: usize,
    /// boards with at most this many squares are also compared to the
    /// exhaustive oracle
    #[arg(long, default_value_t = 16)]
    oracle_cap: usize,
    /// corrupt one coefficient ("n,m,k") to exercise the failure path
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    /// number of rows
    #[arg(long)]
    n: usize,
    /// number of columns
    #[arg(long)]
    m: usize,
    /// integer evaluation point (decimal, may be negative)
    #[arg(long, allow_hyphen_values = true)]
    x: String,
}

#[derive(Args)]
struct SequenceArgs {
    /// sequence id: A368831, A287274, or A055599
    id: String,
    /// number of rows or terms to generate
    #[arg(long, default_value_t = 8)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// number of rows
    #[arg(long)]
    n: usize,
    /// number of columns
    #[arg(long)]
    m: usize,
    /// comma-separated methods to time
    #[arg(long, value_enum, value_delimiter = ',', default_value = "closed")]
    methods: Vec<MethodArg>,
    /// timing repetitions per method (the median is reported)
    #[arg(long, default_value_t = 1)]
    repeats: usize,
}

enum Failure {
    Verification(String),
    Usage(String),
    Capacity(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(s) | Failure::Usage(s) | Failure::Capacity(s) => s,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::CapacityExceeded { .. } => Failure::Capacity(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Poly(args) => cmd_poly(args),
        Command::Check(args) => cmd_check(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Sequence(args) => cmd_sequence(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn cmd_poly(args: PolyArgs) -> Result<(), Failure> {
    let dims = BoardDims::new(args.n, args.m);
    let method = Method::from(args.method);
    let poly = method.compute(dims)?;
    let len = dims.squares() + 1;
    match args.format {
        Format::Text => println!("{poly}"),
        Format::Json => {
            let out = render::PolyJson {
                n: dims.n,
                m: dims.m,
                method: method.name(),
                coeffs: render::padded_coeffs(&poly, len),
            };
            println!("{}", serde_json::to_string(&out).expect("fixed schema"));
        }
        Format::Csv => print!("{}", render::poly_csv(&poly, len)),
    }
    Ok(())
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    if args.max_n == 0 || args.max_m == 0 {
        return Err(Failure::Usage(
            "check needs --max-n and --max-m of at least 1".into(),
        ));
    }
    let fault = args.inject_fault.as_deref().map(parse_fault).transpose()?;
    let mut boards = 0usize;
    let mut mismatches = 0usize;
    for n in 1..=args.max_n {
        for m in 1..=args.max_m {
            let dims = BoardDims::new(n, m);
            boards += 1;
            let closed = Method::Closed.compute(dims)?;
            let mut symmetric = Method::Symmetric.compute(dims)?;
            let recursive = Method::Recursive.compute(dims)?;
            if let Some((fault_n, fault_m, fault_k)) = fault {
                if (fault_n, fault_m) == (n, m) {
                    symmetric.add_scaled(&IntPolynomial::monomial(1, fault_k), &BigInt::from(1));
                }
            }
            let oracle = if dims.squares() <= args.oracle_cap {
                Some(Method::Oracle.compute(dims)?)
            } else {
                None
            };
            let mut polys = vec![
                ("closed", &closed),
                ("symmetric", &symmetric),
                ("recursive", &recursive),
            ];
            if let Some(oracle) = &oracle {
                polys.push(("oracle", oracle));
            }
            let names = polys
                .iter()
                .map(|(name, _)| *name)
                .collect::<Vec<_>>()
                .join(" = ");
            match render::first_difference(&polys, dims.squares() + 1) {
                None => println!("{dims}: ok ({names})"),
                Some((k, detail)) => {
                    println!("{dims}: mismatch at k={k}: {detail}");
                    mismatches += 1;
                }
            }
        }
    }
    if mismatches > 0 {
        return Err(Failure::Verification(format!(
            "{mismatches} of {boards} boards disagreed"
        )));
    }
    println!("checked {boards} boards: all methods agree");
    Ok(())
}

fn parse_fault(spec: &str) -> Result<(usize, usize, usize), Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if let [n, m, k] = parts[..] {
        if let (Ok(n), Ok(m), Ok(k)) = (n.parse(), m.parse(), k.parse()) {
            return Ok((n, m, k));
        }
    }
    Err(Failure::Usage(format!(
        "invalid fault spec {spec:?}; expected \"n,m,k\""
    )))
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let point: BigInt = args.x.trim().parse().map_err(|_| {
        Failure::Usage(format!(
            "invalid --x value {:?}; expected a decimal integer",
            args.x
        ))
    })?;
    let dims = BoardDims::new(args.n, args.m);
    let value = domination_poly_closed(dims).eval(&point);
    if point == BigInt::from(1) {
        let total = total_dominating_sets(dims);
        if total != value {
            return Err(Failure::Verification(format!(
                "evaluation at 1 gave {value} but the total-count formula gave {total}"
            )));
        }
    }
    println!("{value}");
    Ok(())
}

fn cmd_sequence(args: SequenceArgs) -> Result<(), Failure> {
    if args.limit == 0 {
        return Err(Failure::Usage("--limit must be at least 1".into()));
    }
    match args.id.as_str() {
        // triangle of domination counts of n x n boards, row n: k = n..n^2
        "A368831" => sequence_triangle(&args, |n| domination_poly_closed(BoardDims::new(n, n))),
        // total dominating sets of n x n boards
        "A287274" => {
            let terms: Vec<String> = (1..=args.limit)
                .map(|n| total_dominating_sets(BoardDims::new(n, n)).to_string())
                .collect();
            match args.format {
                Format::Text => {
                    for term in &terms {
                        println!("{term}");
                    }
                }
                Format::Json => {
                    let out = render::TermsJson {
                        id: &args.id,
                        terms,
                    };
                    println!("{}", serde_json::to_string(&out).expect("fixed schema"));
                }
                Format::Csv => return Err(csv_unsupported()),
            }
            Ok(())
        }
        // triangle of k-subsets of the n x n board occupying every line
        "A055599" => sequence_triangle(&args, |n| edge_cover_poly(BoardDims::new(n, n))),
        other => Err(Failure::Usage(format!(
            "unknown sequence id {other:?}; expected A368831, A287274, or A055599"
        ))),
    }
}

fn sequence_triangle(
    args: &SequenceArgs,
    row_poly: impl Fn(usize) -> IntPolynomial,
) -> Result<(), Failure> {
    let rows: Vec<Vec<String>> = (1..=args.limit)
        .map(|n| render::triangle_row(&row_poly(n), n, n * n))
        .collect();
    match args.format {
        Format::Text => {
            for row in &rows {
                println!("{}", row.join(" "));
            }
        }
        Format::Json => {
            let out = render::TriangleJson { id: &args.id, rows };
            println!("{}", serde_json::to_string(&out).expect("fixed schema"));
        }
        Format::Csv => return Err(csv_unsupported()),
    }
    Ok(())
}

fn csv_unsupported() -> Failure {
    Failure::Usage("csv is not defined for sequences; use text or json".into())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    if args.repeats == 0 {
        return Err(Failure::Usage("--repeats must be at least 1".into()));
    }
    if args.methods.is_empty() {
        return Err(Failure::Usage(
            "--methods must name at least one method".into(),
        ));
    }
    let dims = BoardDims::new(args.n, args.m);
    let len = dims.squares() + 1;
    let mut runs: Vec<(Method, IntPolynomial, Vec<Duration>)> = Vec::new();
    for &arg in &args.methods {
        let method = Method::from(arg);
        let mut times = Vec::with_capacity(args.repeats);
        let mut poly = None;
        for _ in 0..args.repeats {
            let report = MethodReport::run(method, dims)?;
            times.push(report.elapsed);
            poly.get_or_insert(report.poly);
        }
        runs.push((method, poly.expect("repeats >= 1"), times));
    }

    let polys: Vec<(&str, &IntPolynomial)> = runs.iter().map(|(m, p, _)| (m.name(), p)).collect();
    if let Some((k, detail)) = render::first_difference(&polys, len) {
        return Err(Failure::Verification(format!(
            "methods disagree on {dims} at k={k}: {detail}"
        )));
    }

    let names = polys
        .iter()
        .map(|(name, _)| *name)
        .collect::<Vec<_>>()
        .join(", ");
    println!("# result");
    println!("board: {dims}");
    println!("degree: {}", runs[0].1.degree());
    println!(
        "coefficients: sha256:{}",
        render::coeff_digest(&runs[0].1, len)
    );
    println!("agreement: {names}");
    println!("# timings");
    for (method, _, times) in &mut runs {
        times.sort();
        let median = times[times.len() / 2];
        println!("{method}: median {median:?} over {} run(s)", times.len());
    }
    Ok(())
}
