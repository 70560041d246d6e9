use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riordan::genpowers::{general_power, power_pair};
use riordan::identities::{self, IdentityReport};
use riordan::recursions::{a_sequence, RecursionChecker, RecursionReport, Rule};
use riordan::sheffer::sheffer_sequence;
use riordan::{Flavor, Named, Rational, RiordanArray, Triangle, DEFAULT_ORDER};

mod spec;

#[derive(Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact Riordan arrays from pairs of umbrae"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the leading rows of an array
    Array(ArrayArgs),
    /// Multiply (gamma, alpha) by (sigma, rho)
    Mul {
        #[command(flatten)]
        array: ArrayArgs,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        rho: String,
    },
    /// Invert an array
    Inv(ArrayArgs),
    /// Rational power of an array
    Pow {
        #[command(flatten)]
        array: ArrayArgs,
        #[arg(long, allow_hyphen_values = true)]
        c: Rational,
        /// Compute through the pair of umbrae instead of the binomial series
        #[arg(long)]
        via_pair: bool,
    },
    /// Apply an array to an umbra or to a column of numbers
    Act {
        #[command(flatten)]
        array: ArrayArgs,
        /// Umbra whose moment column is transformed
        #[arg(long, conflicts_with = "column", required_unless_present = "column")]
        eta: Option<String>,
        /// Comma-separated column, padded with zeros
        #[arg(long, allow_hyphen_values = true)]
        column: Option<String>,
    },
    /// Sheffer polynomials s_n(x) = sum_k R(n,k) x^k
    Sheffer(ArrayArgs),
    /// Moments of the A-sequence
    Aseq(ArrayArgs),
    /// Check the entry recursions
    Check {
        #[command(flatten)]
        array: ArrayArgs,
        #[arg(long, value_enum, default_value_t = RuleArg::All)]
        rule: RuleArg,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
    },
    /// Run identities from the catalog
    Verify {
        #[arg(required_unless_present = "all")]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// List named umbrae and identities
    List,
}

#[derive(Args)]
struct ArrayArgs {
    #[arg(long, value_parser = parse_flavor, default_value = "exp")]
    flavor: Flavor,
    #[arg(long, default_value = "augmentation", allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, default_value = "augmentation", allow_hyphen_values = true)]
    alpha: String,
    /// Truncation order N
    #[arg(long, env = "RIORDAN_ORDER", default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Rows to print, at most N + 1 (default N + 1)
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Colrec,
    Rowrec,
    Rowrec2,
    All,
}

impl RuleArg {
    fn rules(self) -> Vec<Rule> {
        match self {
            RuleArg::Colrec => vec![Rule::ColRec],
            RuleArg::Rowrec => vec![Rule::RowRec],
            RuleArg::Rowrec2 => vec![Rule::RowRec2],
            RuleArg::All => Rule::ALL.to_vec(),
        }
    }
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse()
}

/// A usage problem (exit 2) or a failed verification (exit 1).
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<riordan::Error> for Failure {
    fn from(e: riordan::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

impl ArrayArgs {
    fn build(&self) -> Result<RiordanArray, Failure> {
        let gamma = spec::parse_spec(&self.gamma, self.order)?;
        let alpha = spec::parse_spec(&self.alpha, self.order)?;
        Ok(RiordanArray::new(self.flavor, gamma, alpha)?)
    }

    fn rows(&self) -> Result<usize, Failure> {
        let rows = self.rows.unwrap_or(self.order + 1);
        if rows > self.order + 1 {
            return Err(riordan::Error::TooManyRows {
                requested: rows,
                order: self.order,
            }
            .into());
        }
        Ok(rows)
    }
}

fn render_triangle(t: &Triangle, format: Format) -> String {
    match format {
        Format::Table => t.to_table(),
        Format::Csv => t.to_csv(),
        Format::Json => format!("{}\n", t.to_json()),
    }
}

fn render_values(values: &[Rational], format: Format) -> String {
    let cells: Vec<String> = values.iter().map(Rational::to_string).collect();
    match format {
        Format::Table => cells.iter().map(|c| format!("{c}\n")).collect(),
        Format::Csv => format!("{}\n", cells.join(",")),
        Format::Json => format!("{}\n", serde_json::to_string(&cells).unwrap()),
    }
}

fn leading(t: Triangle, rows: usize) -> Triangle {
    let flavor = t.flavor();
    Triangle::new(flavor, t.rows()[..rows].to_vec()).expect("prefix of a triangle")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Array(a) => {
            let t = a.build()?.triangle(a.rows()?)?;
            Ok(render_triangle(&t, a.format))
        }
        Command::Mul { array, sigma, rho } => {
            let left = array.build()?;
            let right = RiordanArray::new(
                array.flavor,
                spec::parse_spec(&sigma, array.order)?,
                spec::parse_spec(&rho, array.order)?,
            )?;
            let t = left.multiply(&right)?.triangle(array.rows()?)?;
            Ok(render_triangle(&t, array.format))
        }
        Command::Inv(a) => {
            let t = a.build()?.inverse().triangle(a.rows()?)?;
            Ok(render_triangle(&t, a.format))
        }
        Command::Pow { array, c, via_pair } => {
            let r = array.build()?;
            let rows = array.rows()?;
            let t = if via_pair {
                power_pair(&r, &c)?.triangle(rows)?
            } else {
                leading(general_power(&r, &c), rows)
            };
            Ok(render_triangle(&t, array.format))
        }
        Command::Act { array, eta, column } => {
            let r = array.build()?;
            let rows = array.rows()?;
            let out = match (eta, column) {
                (Some(eta), _) => {
                    let eta = spec::parse_spec(&eta, array.order)?;
                    r.act(&eta)?.moments()[..rows].to_vec()
                }
                (None, Some(column)) => {
                    let mut values = column
                        .split(',')
                        .map(|s| s.trim().parse::<Rational>())
                        .collect::<Result<Vec<_>, _>>()?;
                    values.resize(array.order + 1, Rational::zero());
                    r.act_column(&values)?[..rows].to_vec()
                }
                (None, None) => unreachable!("clap requires --eta or --column"),
            };
            Ok(render_values(&out, array.format))
        }
        Command::Sheffer(a) => {
            let r = a.build()?;
            let rows = a.rows()?;
            if rows == 0 {
                return Ok(match a.format {
                    Format::Json => "[]\n".into(),
                    _ => String::new(),
                });
            }
            let polys = sheffer_sequence(&r, rows - 1)?;
            Ok(match a.format {
                Format::Table => polys
                    .iter()
                    .enumerate()
                    .map(|(n, p)| format!("s_{n}(x) = {p}\n"))
                    .collect(),
                Format::Csv => polys
                    .iter()
                    .map(|p| {
                        let cells: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
                        format!("{}\n", cells.join(","))
                    })
                    .collect(),
                Format::Json => format!("{}\n", serde_json::to_string(&polys).unwrap()),
            })
        }
        Command::Aseq(a) => {
            let r = a.build()?;
            let rows = a.rows()?;
            Ok(render_values(&a_sequence(&r).moments()[..rows], a.format))
        }
        Command::Check { array, rule, n, k } => {
            let r = array.build()?;
            let mut checker = RecursionChecker::new(&r);
            let mut reports = Vec::new();
            for rule in rule.rules() {
                match (n, k) {
                    (Some(n), Some(k)) => reports.push(checker.check(rule, n, k)?),
                    _ => {
                        let n_max = array.rows()?.saturating_sub(1);
                        for n in 1..=n_max {
                            for k in 1..=n {
                                reports.push(checker.check(rule, n, k)?);
                            }
                        }
                    }
                }
            }
            let text = render_reports(&reports, array.format);
            if reports.iter().all(RecursionReport::holds) {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::Verify {
            name,
            all,
            n_max,
            json,
        } => {
            let names: Vec<String> = if all {
                identities::catalog()
                    .into_iter()
                    .map(String::from)
                    .collect()
            } else {
                vec![name.expect("clap requires a name without --all")]
            };
            let reports = names
                .iter()
                .map(|name| identities::run(name, n_max))
                .collect::<Result<Vec<_>, _>>()?;
            let text = if json {
                let body = if all {
                    serde_json::to_string(&reports).unwrap()
                } else {
                    serde_json::to_string(&reports[0]).unwrap()
                };
                format!("{body}\n")
            } else {
                reports.iter().map(summarize).collect()
            };
            if reports.iter().all(IdentityReport::passed) {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::List => {
            let mut out = String::from("umbrae:\n");
            for name in Named::ALL_SIMPLE {
                out.push_str(&format!("  {}\n", name.identifier()));
            }
            out.push_str("  delta(k)\nidentities:\n");
            let width = identities::CATALOG
                .iter()
                .map(|(n, _)| n.len())
                .max()
                .unwrap_or(0);
            for (name, statement) in identities::CATALOG {
                out.push_str(&format!("  {name:<width$}  {statement}\n"));
            }
            Ok(out)
        }
    }
}

fn render_reports(reports: &[RecursionReport], format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(reports).unwrap()),
        Format::Csv => {
            let mut out = String::from("rule,n,k,lhs,rhs,holds\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.rule,
                    r.n,
                    r.k,
                    r.lhs,
                    r.rhs,
                    r.holds()
                ));
            }
            out
        }
        Format::Table => reports
            .iter()
            .map(|r| {
                let terms: Vec<String> = r.terms.iter().map(Rational::to_string).collect();
                let verdict = if r.holds() { "ok" } else { "FAIL" };
                format!(
                    "{} n={} k={}: {} = {} = {}  {verdict}\n",
                    r.rule,
                    r.n,
                    r.k,
                    r.lhs,
                    terms.join(" + "),
                    r.rhs
                )
            })
            .collect(),
    }
}

fn summarize(report: &IdentityReport) -> String {
    let mut out = format!(
        "{} {} (n <= {}, {} witnesses)\n",
        report.status,
        report.name,
        report.n_max,
        report.witnesses.len()
    );
    for w in report.failures() {
        out.push_str(&format!("  {}: {} != {}\n", w.input, w.lhs, w.rhs));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            eprintln!("run `riordan --help` for usage");
            ExitCode::from(2)
        }
    }
}
