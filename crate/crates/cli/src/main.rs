use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use recosc_core::exactnum::rational::{format_rational, parse_decimal, parse_rational, to_f64};
use recosc_core::exactnum::roots::{precision_budget, set_precision_budget};
use recosc_core::io::{Footer, InputDocument, Parsed, ReportDocument, RunOptions};
use recosc_core::oscillation::{classify_recurrence, classify_spectrum, simulate_spectrum, ClassifyOptions, Report, Verdict};
use recosc_core::unitlattice::{empty_square_witness, multiples_mod1, square_always_hit, HitBranch, LgLattice};
use recosc_core::Error;

/// Sign behaviour of linear recurrence sequences.
#[derive(Parser)]
#[command(name = "recosc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a recurrence or root-form spectrum and print a JSON report.
    Analyze {
        file: PathBuf,
        /// Terms used for the simulation cross-check.
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[arg(long, default_value_t = 50)]
        relation_bound: u32,
        /// Working precision cap in bits (overrides OSC_PRECISION_BUDGET).
        #[arg(long)]
        precision_budget: Option<u32>,
        /// Leave out the timing footer.
        #[arg(long)]
        no_footer: bool,
    },
    /// Points n (xi1, xi2) mod 1 as CSV.
    Multiples {
        #[arg(long, num_args = 2, value_names = ["XI1", "XI2"], allow_hyphen_values = true)]
        xi: Vec<String>,
        /// Number of rows; defaults to one full orbit for rational input.
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
    },
    /// Centre of an open square of side 1/2 missing every multiple, or "none".
    EmptySquare {
        #[arg(long, num_args = 2, value_names = ["A1", "A2"])]
        num: Vec<i64>,
        #[arg(long, num_args = 2, value_names = ["B1", "B2"])]
        den: Vec<i64>,
    },
    /// Facts about the lattice L_g(a1, a2).
    #[command(group(ArgGroup::new("query").args(["basis", "minima", "member", "always_hit"]).required(true)))]
    Lattice {
        #[arg(long)]
        g: i64,
        #[arg(long, num_args = 2, value_names = ["A1", "A2"], allow_hyphen_values = true)]
        a: Vec<i64>,
        #[arg(long)]
        basis: bool,
        #[arg(long)]
        minima: bool,
        #[arg(long, num_args = 2, value_names = ["U1", "U2"], allow_hyphen_values = true)]
        member: Option<Vec<i64>>,
        #[arg(long)]
        always_hit: bool,
    },
    /// Sign table of the first terms.
    Simulate {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        terms: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Hypothesis(_) => 2,
        Error::PrecisionExhausted(_) => 3,
        Error::Contradiction(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Analyze { file, terms, relation_bound, precision_budget: budget, no_footer } => {
            if let Some(b) = budget {
                set_precision_budget(b);
            }
            analyze(&file, terms, relation_bound, no_footer)
        }
        Command::Multiples { xi, count, out: OutFormat::Csv } => multiples(&xi[0], &xi[1], count),
        Command::EmptySquare { num, den } => match empty_square_witness(num[0], den[0], num[1], den[1])? {
            Some((c1, c2)) => Ok(format!("{} {}\n", format_rational(&c1), format_rational(&c2))),
            None => Ok("none\n".into()),
        },
        Command::Lattice { g, a, basis, minima, member, always_hit } => lattice(g, a[0], a[1], basis, minima, member, always_hit),
        Command::Simulate { file, terms } => simulate(&file, terms),
    }
}

fn read_input(file: &PathBuf) -> Result<InputDocument, Error> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?;
    InputDocument::from_json(&text).map_err(|e| Error::InvalidInput(format!("{}: {}", file.display(), e.detail())))
}

fn analyze(file: &PathBuf, terms: usize, relation_bound: u32, no_footer: bool) -> Result<String, Error> {
    let start = Instant::now();
    let doc = read_input(file)?;
    let opts = ClassifyOptions { terms, relation_bound };
    let (mode, report) = match doc.parse()? {
        Parsed::Recurrence(r) => ("recurrence", classify_recurrence(&r, &opts)?),
        Parsed::Spectrum(None) => ("root_form", Report::new(Verdict::IdenticallyZero)),
        Parsed::Spectrum(Some(s)) => ("root_form", classify_spectrum(&s, &opts)?),
    };
    let out = ReportDocument {
        format: ReportDocument::FORMAT,
        mode: mode.into(),
        options: RunOptions { terms, relation_bound, precision_budget: precision_budget() },
        report,
        footer: (!no_footer).then(|| Footer { elapsed_ms: start.elapsed().as_millis() as u64 }),
    };
    Ok(out.to_json() + "\n")
}

fn multiples(x: &str, y: &str, count: Option<u64>) -> Result<String, Error> {
    let exact = |s: &str| !s.contains('.');
    let mut out = String::from("n,x,y\n");
    if exact(x) && exact(y) {
        let (p, q) = (parse_rational(x)?, parse_rational(y)?);
        let small = |r: &recosc_core::exactnum::Rational| -> Result<(i64, i64), Error> {
            let f = r - r.floor();
            let n = i64::try_from(f.numer()).map_err(|_| Error::InvalidInput("fraction too large".into()))?;
            let d = i64::try_from(f.denom()).map_err(|_| Error::InvalidInput("fraction too large".into()))?;
            Ok((n, d))
        };
        let ((a1, b1), (a2, b2)) = (small(&p)?, small(&q)?);
        let period = multiples_mod1(a1, b1, a2, b2)?.len() as u64;
        for n in 0..count.unwrap_or(period) {
            let px = (n as i128 * a1 as i128).rem_euclid(b1 as i128);
            let py = (n as i128 * a2 as i128).rem_euclid(b2 as i128);
            let f = |k: i128, b: i64| format_rational(&recosc_core::exactnum::rat(k as i64, b));
            out.push_str(&format!("{n},{},{}\n", f(px, b1), f(py, b2)));
        }
        return Ok(out);
    }
    let (p, q) = (to_f64(&parse_any(x)?), to_f64(&parse_any(y)?));
    out = String::from("# approximate\nn,x,y\n");
    for n in 0..count.unwrap_or(20) {
        let m = |v: f64| (n as f64 * v).rem_euclid(1.0);
        out.push_str(&format!("{n},{:.12},{:.12}\n", m(p), m(q)));
    }
    Ok(out)
}

fn parse_any(s: &str) -> Result<recosc_core::exactnum::Rational, Error> {
    if s.contains('.') {
        parse_decimal(s)
    } else {
        parse_rational(s)
    }
}

fn sqrt_text(n: i64) -> String {
    let r = (n as f64).sqrt().round() as i64;
    if r * r == n {
        r.to_string()
    } else {
        format!("sqrt({n})")
    }
}

fn lattice(g: i64, a1: i64, a2: i64, basis: bool, minima: bool, member: Option<Vec<i64>>, always_hit: bool) -> Result<String, Error> {
    let lat = LgLattice::new(g, a1, a2)?;
    if basis {
        let b = lat.reduced_basis();
        return Ok(format!("v1 = ({}, {})\nv2 = ({}, {})\ndet = {}\n", b.v1.0, b.v1.1, b.v2.0, b.v2.1, b.det()));
    }
    if minima {
        let m = lat.successive_minima();
        return Ok(format!(
            "lambda1 = {}\nlambda2 = {}\nwitnesses = ({}, {}), ({}, {})\n",
            sqrt_text(m.lambda1_sq),
            sqrt_text(m.lambda2_sq),
            m.witnesses.0 .0,
            m.witnesses.0 .1,
            m.witnesses.1 .0,
            m.witnesses.1 .1
        ));
    }
    if let Some(u) = member {
        return Ok(format!("{}\n", lat.contains((u[0], u[1]))));
    }
    debug_assert!(always_hit);
    let c = square_always_hit(g, a1, a2)?;
    let branch = match c.branch {
        HitBranch::SmallTable => "small-g table",
        HitBranch::Bender => "Bender bound",
        HitBranch::ShortVector => "short vector",
        HitBranch::Exhaustive => "exhaustive search",
    };
    Ok(if c.always_hit {
        format!("certified: {branch}\n")
    } else {
        let corner = c.empty_corner.map(|(x, y)| format!(" at corner ({x}, {y})")).unwrap_or_default();
        format!("not certified: empty square{corner} ({branch})\n")
    })
}

fn simulate(file: &PathBuf, terms: usize) -> Result<String, Error> {
    let doc = read_input(file)?;
    let summary = match doc.parse()? {
        Parsed::Recurrence(r) => {
            let s = r.sign_summary(terms);
            (s.pattern, s.positives, s.negatives, s.zeros, s.sign_changes, s.first_negative, s.first_positive, true)
        }
        Parsed::Spectrum(None) => ("0".repeat(terms), 0, 0, terms, 0, None, None, true),
        Parsed::Spectrum(Some(s)) => {
            let sim = simulate_spectrum(&s, terms)?;
            let first = |c: char| sim.pattern.find(c);
            (sim.pattern.clone(), sim.positives, sim.negatives, sim.zeros, sim.sign_changes, first('-'), first('+'), sim.complete)
        }
    };
    let (pattern, pos, neg, zeros, changes, first_neg, first_pos, complete) = summary;
    let opt = |v: Option<usize>| v.map_or("none".to_string(), |i| i.to_string());
    let mut out = format!("signs: {pattern}\nterms: {terms}\npositive: {pos}\nnegative: {neg}\nzero: {zeros}\n");
    out += &format!("sign_changes: {changes}\nfirst_positive: {}\nfirst_negative: {}\n", opt(first_pos), opt(first_neg));
    if zeros == terms {
        out += "all_zero: true\n";
    }
    if !complete {
        out += "note: remainder not simulated, signs are of the dominating and listed terms only\n";
    }
    Ok(out)
}
