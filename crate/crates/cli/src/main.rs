use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hives::bridge::{hat, tilde, unhat, AssociatorRun, CommutorRun};
use hives::category::{lr_count, LrMethod};
use hives::hive::{enumerate_hives, normalize, DominantWeight, TriangleArray};
use hives::tableau::{gt_from_tableau, jdt_rectify, schutzenberger, tableau_from_gt, GtPattern, SkewTableau};
use hives::verify::{self, Limits, Suite};

/// Hives, the octahedron recurrence and tableau crystals for gl_n tensor products.
#[derive(Parser)]
#[command(name = "hives", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c_{λμ}^ν from hives and/or crystals.
    Lr {
        #[arg(allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(allow_hyphen_values = true)]
        mu: DominantWeight,
        #[arg(allow_hyphen_values = true)]
        nu: DominantWeight,
        #[arg(long, value_enum, default_value_t = Method::Hive)]
        method: Method,
        /// Also print every hive in the set.
        #[arg(long)]
        list: bool,
    },
    /// Associator: (M, N) to (P, Q), or back with --inverse.
    Assoc {
        /// Outer hive file (`-` for stdin).
        first: String,
        /// Inner hive file.
        second: String,
        #[arg(long)]
        dump_slices: bool,
        /// Print the intermediate quasi-hives Q^n..Q^0.
        #[arg(long)]
        stages: bool,
        /// Read (P, Q) and print (M, N).
        #[arg(long)]
        inverse: bool,
        /// Shift every printed array to top value 0.
        #[arg(long)]
        normalize: bool,
    },
    /// Commutor: P to P★.
    Commute {
        /// Hive file (`-` for stdin).
        input: String,
        #[arg(long)]
        dump_slices: bool,
        /// Print the quasi-hive after each flip.
        #[arg(long)]
        stages: bool,
        #[arg(long)]
        normalize: bool,
    },
    /// Conversions between hives, Gelfand-Tsetlin patterns and tableaux.
    Convert {
        #[arg(value_enum)]
        kind: Kind,
        /// Input file (`-` for stdin).
        input: String,
        /// Upper-left edge for `unhat`.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<DominantWeight>,
    },
    /// Run a verification suite and print pass/fail counts.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_part: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Hive,
    Crystal,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Hive to the pattern of its row differences.
    Hat,
    /// Hive to the pattern of its diagonal differences.
    Tilde,
    /// Pattern back to a hive, given --mu.
    Unhat,
    /// Pattern to tableau.
    Gt2tab,
    /// Tableau to pattern.
    Tab2gt,
    /// Rectify a skew tableau by jeu de taquin.
    Jdt,
    /// Schützenberger involution of a pattern.
    Xi,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Octjeu,
    Siandoct,
    Pakt,
    Propagation,
    Coboundary,
    Yb,
    Diagrams,
    All,
}

/// Exit status 1: a check or cross-check failed. Status 2: bad input.
enum Failure {
    Verification(String),
    Input(String),
}

impl From<hives::Error> for Failure {
    fn from(e: hives::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {}", e)))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path, e)))
    }
}

fn parse<T: std::str::FromStr<Err = hives::Error>>(path: &str) -> Result<T, Failure> {
    Ok(read_input(path)?.parse()?)
}

fn show(label: &str, a: &TriangleArray, norm: bool) -> String {
    let a = if norm { normalize(a) } else { a.clone() };
    format!("{}\n{}\n", label, a)
}

fn cmd_lr(lambda: &DominantWeight, mu: &DominantWeight, nu: &DominantWeight, method: Method, list: bool) -> Outcome {
    let mut out = match method {
        Method::Hive => format!("{}\n", lr_count(lambda, mu, nu, LrMethod::Hive)?),
        Method::Crystal => format!("{}\n", lr_count(lambda, mu, nu, LrMethod::Crystal)?),
        Method::Both => {
            let h = lr_count(lambda, mu, nu, LrMethod::Hive)?;
            let c = lr_count(lambda, mu, nu, LrMethod::Crystal)?;
            let line = format!("hive={} crystal={}\n", h, c);
            if h != c {
                return Err(Failure::Verification(line));
            }
            line
        }
    };
    if list {
        for p in enumerate_hives(lambda, mu, nu) {
            out.push('\n');
            out.push_str(&p.to_string());
        }
    }
    Ok(out)
}

fn cmd_assoc(first: &str, second: &str, dump: bool, stages: bool, inverse: bool, norm: bool) -> Outcome {
    let (a, b): (TriangleArray, TriangleArray) = (parse(first)?, parse(second)?);
    let (run, first_out, second_out) = if inverse {
        let run = AssociatorRun::backward(&a, &b)?;
        let pair = (run.outer_raw(), run.inner_raw());
        (run, ("M", pair.0), ("N", pair.1))
    } else {
        let run = AssociatorRun::forward(&a, &b)?;
        let pair = (run.p_raw(), run.q_raw());
        (run, ("P", pair.0), ("Q", pair.1))
    };
    let mut out = show(first_out.0, &first_out.1, norm) + &show(second_out.0, &second_out.1, norm);
    if stages {
        for (k, q) in run.stages_raw().iter().enumerate() {
            out += &show(&format!("Q^{}", run.n() - k), q, norm);
        }
    }
    if dump {
        out += &run.slices();
    }
    Ok(out)
}

fn cmd_commute(input: &str, dump: bool, stages: bool, norm: bool) -> Outcome {
    let p: TriangleArray = parse(input)?;
    let run = CommutorRun::new(&p)?;
    let mut out = show("P*", &run.star_raw(), norm);
    if stages {
        for (k, (q, r)) in run.stages_raw().iter().zip(run.embeddings()).enumerate() {
            let h: Vec<String> = r.heights().iter().map(i64::to_string).collect();
            out += &show(&format!("stage {} heights {}", k, h.join(",")), q, norm);
        }
    }
    if dump {
        out += &run.slices();
    }
    Ok(out)
}

fn cmd_convert(kind: Kind, input: &str, mu: Option<&DominantWeight>) -> Outcome {
    Ok(match kind {
        Kind::Hat => hat(&parse::<TriangleArray>(input)?)?.to_string(),
        Kind::Tilde => tilde(&parse::<TriangleArray>(input)?)?.to_string(),
        Kind::Unhat => {
            let mu = mu.ok_or_else(|| Failure::Input("unhat needs --mu".into()))?;
            unhat(&parse::<GtPattern>(input)?, mu.parts())?.to_string()
        }
        Kind::Gt2tab => tableau_from_gt(&parse::<GtPattern>(input)?)?.to_string(),
        Kind::Tab2gt => gt_from_tableau(&parse::<SkewTableau>(input)?)?.to_string(),
        Kind::Jdt => jdt_rectify(&parse::<SkewTableau>(input)?).0.to_string(),
        Kind::Xi => schutzenberger(&parse::<GtPattern>(input)?).to_string(),
    })
}

fn cmd_verify(suite: SuiteArg, limits: Limits) -> Outcome {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Axioms => vec![Suite::Axioms],
        SuiteArg::Octjeu => vec![Suite::Octjeu],
        SuiteArg::Siandoct => vec![Suite::Siandoct],
        SuiteArg::Pakt => vec![Suite::Pakt],
        SuiteArg::Propagation => vec![Suite::Propagation],
        SuiteArg::Coboundary => vec![Suite::Coboundary],
        SuiteArg::Yb => vec![Suite::Yb],
        SuiteArg::Diagrams => vec![Suite::Diagrams],
    };
    let mut out = String::new();
    let mut ok = true;
    for s in suites {
        let rep = verify::run(s, &limits)?;
        ok &= rep.passed();
        out += &format!("{}\n", rep);
    }
    if ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Lr { lambda, mu, nu, method, list } => cmd_lr(lambda, mu, nu, *method, *list),
        Command::Assoc { first, second, dump_slices, stages, inverse, normalize } => {
            cmd_assoc(first, second, *dump_slices, *stages, *inverse, *normalize)
        }
        Command::Commute { input, dump_slices, stages, normalize } => {
            cmd_commute(input, *dump_slices, *stages, *normalize)
        }
        Command::Convert { kind, input, mu } => cmd_convert(*kind, input, mu.as_ref()),
        Command::Verify { suite, max_size, max_part, seed } => cmd_verify(
            *suite,
            Limits { max_size: *max_size, max_part: *max_part, seed: *seed },
        ),
    };
    match result {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{}", out);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
