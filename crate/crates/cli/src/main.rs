use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use numerals::binary;
use numerals::costmeter::{self, OpId};
use numerals::numio::{self, Numeral, NumeralKind};
use numerals::suites::{self, Mutant, Suite};
use numerals::twoscomp;
use numerals::unary;
use numerals::{BraunSeq, Error};

/// Inductive numerals, Braun sequences and step counting.
#[derive(Parser, Debug)]
#[command(name = "numerals", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a value between integer, literal and bit-string forms
    Convert {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        from: Form,
        #[arg(long)]
        to: Form,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Apply an arithmetic operation to literals
    Eval {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        op: EvalOp,
        #[arg(required = true, num_args = 1..=2)]
        literals: Vec<String>,
    },
    /// Build a Braun sequence and run a script read from standard input
    ///
    /// Script lines: `access i`, `update i v`, `cons v`, `first`, `rest`,
    /// `length`, `depth`, `list`. Blank lines and lines starting with `#`
    /// are skipped.
    Braun {
        /// Comma-separated initial elements
        #[arg(long, default_value = "")]
        init: String,
    },
    /// Print step counts of an operation on worst-case inputs as CSV
    Bench {
        #[arg(long)]
        op: String,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
    },
    /// Run property suites
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = suites::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, hide = true)]
        mutant: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Unary,
    Binary,
    Twoscomp,
    Cd,
}

impl From<Kind> for NumeralKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Unary => NumeralKind::Unary,
            Kind::Binary => NumeralKind::Binary,
            Kind::Twoscomp => NumeralKind::TwosComp,
            Kind::Cd => NumeralKind::Cd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Int,
    Literal,
    Bits,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EvalOp {
    Plus,
    Add,
    Add1,
    Mul,
    Neg,
    Sub,
}

/// Exit code 1: domain or property failure. Exit code 2: usage or parse error.
#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Convert {
            kind,
            from,
            to,
            value,
        } => convert(kind.into(), from, to, &value, &mut out),
        Command::Eval { kind, op, literals } => eval(kind.into(), op, &literals, &mut out),
        Command::Braun { init } => braun(&init, io::stdin().lock(), &mut out),
        Command::Bench { op, sizes } => bench(&op, &sizes, &mut out),
        Command::Check {
            suite,
            seed,
            mutant,
        } => check(&suite, seed, mutant.as_deref(), &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn convert(kind: NumeralKind, from: Form, to: Form, value: &str, out: &mut impl Write) -> Outcome {
    if (from == Form::Bits || to == Form::Bits) && kind != NumeralKind::TwosComp {
        return Err(usage("the bits form exists only for --kind twoscomp"));
    }
    let numeral = match from {
        Form::Int => {
            let n: i64 = value
                .trim()
                .parse()
                .map_err(|_| usage(format!("`{value}` is not an integer")))?;
            Numeral::from_int(kind, n)?
        }
        Form::Literal => numio::parse_numeral(value, kind)?,
        Form::Bits => Numeral::TwosComp(numio::parse_bits(value)?),
    };
    let text = match (to, &numeral) {
        (Form::Int, n) => n.to_int()?.to_string(),
        (Form::Literal, n) => numio::print_numeral(n),
        (Form::Bits, Numeral::TwosComp(x)) => twoscomp::render_bits(x),
        (Form::Bits, _) => unreachable!("kind checked above"),
    };
    writeln!(out, "{text}")?;
    Ok(())
}

fn unary_op(op: EvalOp, x: &Numeral) -> Option<Numeral> {
    Some(match (op, x) {
        (EvalOp::Add1, Numeral::Unary(x)) => Numeral::Unary(x.clone().succ()),
        (EvalOp::Add1, Numeral::Binary(x)) => Numeral::Binary(binary::add1(x)),
        (EvalOp::Add1, Numeral::TwosComp(x)) => Numeral::TwosComp(twoscomp::add1(x)),
        (EvalOp::Neg, Numeral::TwosComp(x)) => Numeral::TwosComp(twoscomp::neg(x)),
        _ => return None,
    })
}

fn binary_op(op: EvalOp, x: &Numeral, y: &Numeral) -> Option<Numeral> {
    use Numeral::{Binary, TwosComp, Unary};
    Some(match (op, x, y) {
        (EvalOp::Plus, Unary(x), Unary(y)) => Unary(unary::plus(x, y)),
        (EvalOp::Add, Unary(x), Unary(y)) => Unary(unary::add(x, y)),
        (EvalOp::Mul, Unary(x), Unary(y)) => Unary(unary::mult(x, y)),
        (EvalOp::Plus, Binary(x), Binary(y)) => Binary(binary::add_v1(x, y)),
        (EvalOp::Add, Binary(x), Binary(y)) => Binary(binary::add_v2(x, y)),
        (EvalOp::Mul, Binary(x), Binary(y)) => Binary(binary::mult(x, y)),
        (EvalOp::Plus | EvalOp::Add, TwosComp(x), TwosComp(y)) => TwosComp(twoscomp::add(x, y)),
        (EvalOp::Sub, TwosComp(x), TwosComp(y)) => TwosComp(twoscomp::sub(x, y)),
        _ => return None,
    })
}

fn eval(kind: NumeralKind, op: EvalOp, literals: &[String], out: &mut impl Write) -> Outcome {
    let args = literals
        .iter()
        .map(|l| numio::parse_numeral(l, kind))
        .collect::<Result<Vec<_>, _>>()?;
    let want = match op {
        EvalOp::Add1 | EvalOp::Neg => 1,
        _ => 2,
    };
    if args.len() != want {
        return Err(usage(format!(
            "operation {op:?} takes {want} literal(s), got {}",
            args.len()
        )));
    }
    let result = match args.as_slice() {
        [x] => unary_op(op, x),
        [x, y] => binary_op(op, x, y),
        _ => None,
    }
    .ok_or_else(|| usage(format!("operation {op:?} is not defined for {kind} numerals")))?;
    writeln!(out, "{result}")?;
    Ok(())
}

fn braun(init: &str, script: impl BufRead, out: &mut impl Write) -> Outcome {
    let mut seq: BraunSeq<String> = if init.trim().is_empty() {
        BraunSeq::new()
    } else {
        init.split(',').map(|t| t.trim().to_owned()).collect()
    };
    for (lineno, line) in script.lines().enumerate() {
        let line = line?;
        let words: Vec<&str> = line.split_whitespace().collect();
        let index = |w: &str| {
            w.parse::<u64>()
                .map_err(|_| usage(format!("line {}: `{w}` is not an index", lineno + 1)))
        };
        match words.as_slice() {
            [] => continue,
            [w, ..] if w.starts_with('#') => continue,
            ["access", i] => writeln!(out, "{}", seq.access(index(i)?)?)?,
            ["first"] => writeln!(out, "{}", seq.first()?)?,
            ["length"] => writeln!(out, "{}", seq.len())?,
            ["depth"] => writeln!(out, "{}", seq.depth())?,
            ["list"] => writeln!(out, "{}", seq.to_list().join(","))?,
            ["cons", v] => {
                seq = seq.cons((*v).to_owned());
                writeln!(out, "{}", seq.to_list().join(","))?;
            }
            ["rest"] => {
                seq = seq.rest()?;
                writeln!(out, "{}", seq.to_list().join(","))?;
            }
            ["update", i, v] => {
                seq = seq.update(index(i)?, (*v).to_owned())?;
                writeln!(out, "{}", seq.to_list().join(","))?;
            }
            _ => {
                return Err(usage(format!(
                    "line {}: unrecognized command `{}`",
                    lineno + 1,
                    line.trim()
                )))
            }
        }
    }
    Ok(())
}

fn bench(op: &str, sizes: &[u64], out: &mut impl Write) -> Outcome {
    let op: OpId = op.parse()?;
    let rows: Vec<(u64, u64)> = costmeter::sample(op, sizes)?
        .into_iter()
        .map(|(n, s)| (n, s.get()))
        .collect();
    out.write_all(numio::csv_emit(&rows).as_bytes())?;
    Ok(())
}

fn check(suite: &str, seed: u64, mutant: Option<&str>, out: &mut impl Write) -> Outcome {
    let suite: Suite = suite.parse()?;
    let mutant = mutant.map(str::parse::<Mutant>).transpose()?;
    let report = suites::run(suite, &suites::Config { seed, mutant });
    write!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        let names: Vec<String> = report
            .failed()
            .map(|r| format!("{}/{}", r.suite, r.name))
            .collect();
        Err(Failure::Domain(format!(
            "failing properties: {}",
            names.join(", ")
        )))
    }
}
