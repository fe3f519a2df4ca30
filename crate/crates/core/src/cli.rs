//! Command-line front end. Exit status: 0 success, 1 domain error or failed
//! check, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{betti_table_with_progress, default_max_degree, extremal_from_betti, reg_from_betti, DEFAULT_PRIME};
use crate::chain::{quotient_dimensions, sequential_chain};
use crate::dseq::DSequence;
use crate::error::Error;
use crate::fixed::{closure, is_borel_type, is_dfixed, is_stable, principal_ideal, PrincipalInput};
use crate::ideal::MonomialIdeal;
use crate::io::GeneratorFile;
use crate::monomial::Monomial;
use crate::regularity::{corners, reg_formula, reg_sequential, reg_stability, reg_stability_for, Method, RegularityReport};
use crate::socle::{socle_direct, socle_formula};
use crate::verify::{verify, Status};

#[derive(Parser, Debug)]
#[command(name = "dfixed", version, about = "Principal d-fixed monomial ideals: expansion, socles, regularity, Betti numbers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// d-sequence, e.g. 1,2,4,12
    #[arg(long, global = true)]
    d: Option<String>,
    /// Number of variables; defaults to the largest index mentioned.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Field characteristic for Betti numbers: 0 or a prime.
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Generator file: `n=<int>` then one monomial per line.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Sequential,
    Stability,
    Betti,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Dfixed,
    Stable,
    Borel,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// d-adic digits of a nonnegative integer.
    Decompose { value: u64 },
    /// Generators of the principal ideal ⟨u⟩_d.
    Expand { u: String },
    /// Smallest d-fixed ideal containing the given generators.
    Closure { gens: Vec<String> },
    /// Socle of S/⟨u⟩_d by the closed formulas.
    Socle {
        u: String,
        /// Also enumerate the socle directly and compare.
        #[arg(long)]
        direct: bool,
    },
    /// Regularity of ⟨u⟩_d (or of a generator file).
    Reg {
        u: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// Graded Betti numbers of S/I.
    Betti { gens: Vec<String> },
    /// Test a property of a monomial ideal.
    Check {
        gens: Vec<String>,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// The sequential chain I_0 ⊂ I_1 ⊂ … ⊂ S.
    Chain { gens: Vec<String> },
    /// Hilbert function of S/I.
    Hilbert {
        gens: Vec<String>,
        /// A single degree; otherwise degrees 0..=max-degree.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Every formula-versus-oracle comparison for ⟨u⟩_d.
    Verify { u: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::Expand { .. } => "expand",
            Command::Closure { .. } => "closure",
            Command::Socle { .. } => "socle",
            Command::Reg { .. } => "reg",
            Command::Betti { .. } => "betti",
            Command::Check { .. } => "check",
            Command::Chain { .. } => "chain",
            Command::Hilbert { .. } => "hilbert",
            Command::Verify { .. } => "verify",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// What a command produced; `ok = false` means a check failed.
struct Output {
    input: Value,
    result: Value,
    text: String,
    ok: bool,
}

/// The structured output record.
#[derive(Serialize)]
struct Record<'a> {
    command: &'a str,
    d: Option<String>,
    input: &'a Value,
    result: &'a Value,
}

struct Context<'a> {
    cli: &'a Cli,
    warnings: Vec<String>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn gens_text(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(ToString::to_string).collect()
}

impl<'a> Context<'a> {
    fn d(&self) -> Outcome<DSequence> {
        let text = self.cli.d.as_deref().ok_or_else(|| Failure::Usage("--d is required".into()))?;
        Ok(text.parse::<DSequence>()?)
    }

    fn n_for(&mut self, texts: &[&str]) -> Outcome<usize> {
        if let Some(n) = self.cli.n {
            return Ok(n);
        }
        let mut n = 1;
        for t in texts {
            n = n.max(Monomial::max_index_in(t)?);
        }
        self.warnings.push(format!("warning: --n not given; using n = {n}"));
        Ok(n)
    }

    fn principal(&mut self, u: &str) -> Outcome<PrincipalInput> {
        let d = self.d()?;
        let n = self.n_for(&[u])?;
        let m = Monomial::parse(u, n)?;
        if m.is_one() {
            return Err(Failure::Domain(Error::UnitIdeal("a principal input")));
        }
        Ok(PrincipalInput::from_monomial(d, &m)?)
    }

    fn read_file(&self) -> Outcome<Option<GeneratorFile>> {
        let Some(path) = &self.cli.file else { return Ok(None) };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let file = GeneratorFile::parse(&text)?;
        if let Some(n) = self.cli.n {
            if n != file.n {
                return Err(Failure::Usage(format!("--n {n} conflicts with n={} in the file", file.n)));
            }
        }
        Ok(Some(file))
    }

    /// Positional monomials or `--file`, never both.
    fn generator_list(&mut self, gens: &[String]) -> Outcome<GeneratorFile> {
        match (self.read_file()?, gens.is_empty()) {
            (Some(_), false) => Err(Failure::Usage("give generators or --file, not both".into())),
            (Some(file), true) => Ok(file),
            (None, true) => Err(Failure::Usage("no generators given".into())),
            (None, false) => {
                let texts: Vec<&str> = gens.iter().map(String::as_str).collect();
                let n = self.n_for(&texts)?;
                let gens = texts
                    .iter()
                    .map(|t| Monomial::parse(t, n))
                    .collect::<crate::Result<Vec<_>>>()?;
                Ok(GeneratorFile { n, gens })
            }
        }
    }

    /// With `--d` and one positional monomial, the principal ideal ⟨u⟩_d;
    /// otherwise the ideal generated by the listed monomials.
    fn target(&mut self, gens: &[String]) -> Outcome<(MonomialIdeal, Option<PrincipalInput>, Value)> {
        if self.cli.d.is_some() && gens.len() == 1 && self.cli.file.is_none() {
            let input = self.principal(&gens[0])?;
            let ideal = principal_ideal(&input)?;
            let value = json!({ "n": input.n(), "u": input.monomial().to_string() });
            return Ok((ideal, Some(input), value));
        }
        let file = self.generator_list(gens)?;
        let ideal = file.ideal();
        let value = json!({ "n": file.n, "gens": file.gens.iter().map(ToString::to_string).collect::<Vec<_>>() });
        Ok((ideal, None, value))
    }

    fn characteristic(&self) -> u64 {
        self.cli.characteristic.unwrap_or(DEFAULT_PRIME)
    }

    fn reject_file(&self) -> Outcome<()> {
        if self.cli.file.is_some() {
            Err(Failure::Usage("--file is not accepted by this command".into()))
        } else {
            Ok(())
        }
    }
}

fn run_command(ctx: &mut Context) -> Outcome<Output> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Decompose { value } => {
            ctx.reject_file()?;
            let d = ctx.d()?;
            let a = crate::dseq::check_range(*value)?;
            let digits = d.decompose(a).digits().to_vec();
            let terms: Vec<String> = digits
                .iter()
                .zip(d.entries())
                .map(|(a, d)| format!("{a}*{d}"))
                .collect();
            Ok(Output {
                input: json!({ "value": value }),
                result: json!({ "digits": digits }),
                text: format!("digits: {digits:?}\n{value} = {}\n", terms.join(" + ")),
                ok: true,
            })
        }
        Command::Expand { u } => {
            ctx.reject_file()?;
            let input = ctx.principal(u)?;
            let ideal = principal_ideal(&input)?;
            let gens = gens_text(&ideal);
            let mut text = format!("{} generators of degree {}\n", gens.len(), input.degree());
            for g in &gens {
                let _ = writeln!(text, "{g}");
            }
            Ok(Output {
                input: json!({ "n": input.n(), "u": u }),
                result: json!({ "generators": gens, "count": ideal.gens().len() }),
                text,
                ok: true,
            })
        }
        Command::Closure { gens } => {
            let d = ctx.d()?;
            let file = ctx.generator_list(gens)?;
            let ideal = closure(&file.gens, &d)?;
            let out = gens_text(&ideal);
            let mut text = format!("{} generators\n", out.len());
            for g in &out {
                let _ = writeln!(text, "{g}");
            }
            Ok(Output {
                input: json!({ "n": file.n, "gens": file.gens.iter().map(ToString::to_string).collect::<Vec<_>>() }),
                result: json!({ "generators": out }),
                text,
                ok: true,
            })
        }
        Command::Socle { u, direct } => {
            ctx.reject_file()?;
            let input = ctx.principal(u)?;
            let report = socle_formula(&input)?;
            let mut text = String::from("degree  dimension\n");
            for s in &report.degrees {
                let _ = writeln!(text, "{:>6}  {:>9}", s.degree, s.dimension);
            }
            let _ = writeln!(text, "max degree: {}", report.max_degree);
            for c in &report.components {
                let _ = writeln!(text, "{} (degree {}): {} generators", c.key, c.degree, c.ideal.gens().len());
            }
            let mut result = to_value(&report);
            let mut ok = true;
            if *direct {
                let ideal = principal_ideal(&input)?;
                let hi = report.max_degree as u32 + input.n() as u32;
                let found: Vec<(u64, u128)> = socle_direct(&ideal, 0, hi)?
                    .iter()
                    .map(|b| (b.degree as u64, b.dimension as u128))
                    .collect();
                let expected: Vec<(u64, u128)> = report.degrees.iter().map(|s| (s.degree, s.dimension)).collect();
                ok = found == expected;
                let _ = writeln!(text, "enumeration over [0, {hi}] agrees: {ok}");
                result["direct"] = json!({ "degrees": found, "agrees": ok });
            }
            Ok(Output { input: json!({ "n": input.n(), "u": u }), result, text, ok })
        }
        Command::Reg { u, method } => {
            let gens: Vec<String> = u.iter().cloned().collect();
            let (ideal, input, input_value) = ctx.target(&gens)?;
            let methods: Vec<Method> = match method {
                MethodArg::All => Method::ALL.to_vec(),
                MethodArg::Formula => vec![Method::Formula],
                MethodArg::Sequential => vec![Method::Sequential],
                MethodArg::Stability => vec![Method::Stability],
                MethodArg::Betti => vec![Method::Betti],
            };
            let mut reports: Vec<RegularityReport> = Vec::new();
            for m in methods {
                let report = match (m, &input) {
                    (Method::Formula, Some(inp)) => {
                        let mut r = reg_formula(inp)?;
                        r.corners = corners(inp)?;
                        r
                    }
                    (Method::Formula, None) => {
                        return Err(Failure::Domain(Error::Precondition(
                            "the formula method needs a principal input (--d and one monomial)".into(),
                        )))
                    }
                    (Method::Sequential, _) => reg_sequential(&ideal)?,
                    (Method::Stability, Some(inp)) => reg_stability_for(inp)?,
                    (Method::Stability, None) => reg_stability(&ideal)?,
                    (Method::Betti, _) => {
                        let known = match &input {
                            Some(inp) => Some(reg_formula(inp)?.value),
                            None => None,
                        };
                        let max = match cli.max_degree {
                            Some(m) => m,
                            None => default_max_degree(&ideal, known)?,
                        };
                        let table = betti_table_with_progress(&ideal, max, ctx.characteristic(), progress(max))?;
                        let reg = reg_from_betti(&table)?;
                        RegularityReport {
                            method: Method::Betti,
                            value: reg.ideal,
                            upper_bound_only: false,
                            x1_factor: None,
                            d_values: Vec::new(),
                            step_values: Vec::new(),
                            corners: Vec::new(),
                        }
                    }
                };
                reports.push(report);
            }
            let exact: Vec<u64> = reports.iter().filter(|r| !r.upper_bound_only).map(|r| r.value).collect();
            let reg = exact.first().copied();
            let consistent = exact.iter().all(|&v| Some(v) == reg)
                && reports.iter().all(|r| !r.upper_bound_only || reg.is_none_or(|v| r.value >= v));
            let mut text = String::new();
            for r in &reports {
                let tag = if r.upper_bound_only { " (upper bound)" } else { "" };
                let _ = writeln!(text, "{:<10} {}{tag}", r.method.to_string(), r.value);
                if !r.d_values.is_empty() {
                    let _ = writeln!(text, "           D_q: {:?}", r.d_values);
                }
                if let Some(a) = r.x1_factor {
                    let _ = writeln!(text, "           x1 factor: {a}");
                }
                for c in &r.corners {
                    let _ = writeln!(
                        text,
                        "           corner ({}, {}) beta {}{}",
                        c.position,
                        c.row,
                        c.beta,
                        if c.survives { "" } else { " dominated" }
                    );
                }
            }
            if reports.len() > 1 {
                let _ = writeln!(text, "consistent: {consistent}");
            }
            Ok(Output {
                input: input_value,
                result: json!({ "reports": to_value(&reports), "consistent": consistent }),
                text,
                ok: consistent,
            })
        }
        Command::Betti { gens } => {
            let (ideal, input, input_value) = ctx.target(gens)?;
            let max = match cli.max_degree {
                Some(m) => m,
                None => {
                    let known = match &input {
                        Some(inp) if inp.ends_at_last_variable() => Some(reg_formula(inp)?.value),
                        _ => None,
                    };
                    default_max_degree(&ideal, known)?
                }
            };
            let table = betti_table_with_progress(&ideal, max, ctx.characteristic(), progress(max))?;
            let mut text = table.to_text();
            let mut result = to_value(&table);
            if table.is_certified() && !ideal.is_zero() {
                let reg = reg_from_betti(&table)?;
                let ext = extremal_from_betti(&table)?;
                let _ = writeln!(text, "reg(I) = {}, reg(S/I) = {}", reg.ideal, reg.quotient);
                for e in &ext {
                    let _ = writeln!(text, "extremal ({}, {}) beta {}", e.i, e.row, e.beta);
                }
                result["regularity"] = to_value(&reg);
                result["extremal"] = to_value(&ext);
            }
            Ok(Output { input: input_value, result, text, ok: true })
        }
        Command::Check { gens, property } => {
            let file = ctx.generator_list(gens)?;
            let ideal = file.ideal();
            let (name, value) = match property {
                Property::Dfixed => ("dfixed", is_dfixed(&ideal, &ctx.d()?)),
                Property::Stable => ("stable", is_stable(&ideal)),
                Property::Borel => ("borel", is_borel_type(&ideal)?),
            };
            Ok(Output {
                input: json!({ "n": file.n, "gens": gens_text(&ideal), "property": name }),
                result: json!({ "holds": value }),
                text: format!("{name}: {value}\n"),
                ok: true,
            })
        }
        Command::Chain { gens } => {
            let (ideal, _, input_value) = ctx.target(gens)?;
            let chain = sequential_chain(&ideal)?;
            let limit = (ideal.n() as u32 * ideal.ideal_degree()?).max(ideal.lcm_of_generators().degree());
            let mut steps = Vec::new();
            let mut text = String::new();
            for (k, step) in chain.steps.iter().enumerate() {
                let dims = quotient_dimensions(step, limit)?;
                let top = dims.len().checked_sub(1);
                let next = &chain.ideals[k + 1];
                let _ = writeln!(
                    text,
                    "step {k}: saturate by x{} -> {} generators; quotient top degree {} (dim {})",
                    step.pivot,
                    next.gens().len(),
                    top.map_or("-".into(), |t| t.to_string()),
                    dims.last().copied().unwrap_or(0)
                );
                steps.push(json!({
                    "pivot": step.pivot,
                    "next": gens_text(next),
                    "quotient_dims": dims,
                }));
            }
            Ok(Output {
                input: input_value,
                result: json!({ "pivots": chain.pivots(), "steps": steps }),
                text,
                ok: true,
            })
        }
        Command::Hilbert { gens, degree } => {
            let (ideal, _, input_value) = ctx.target(gens)?;
            let degrees: Vec<u32> = match (degree, cli.max_degree) {
                (Some(_), Some(_)) => {
                    return Err(Failure::Usage("give --degree or --max-degree, not both".into()))
                }
                (Some(k), None) => vec![*k],
                (None, Some(m)) => (0..=m).collect(),
                (None, None) => (0..=2 * ideal.ideal_degree().unwrap_or(5)).collect(),
            };
            let values: Vec<(u32, usize)> = degrees.iter().map(|&k| (k, ideal.hilbert_function(k))).collect();
            let mut text = String::from("degree  value\n");
            for (k, v) in &values {
                let _ = writeln!(text, "{k:>6}  {v}");
            }
            Ok(Output { input: input_value, result: json!({ "values": values }), text, ok: true })
        }
        Command::Verify { u } => {
            ctx.reject_file()?;
            let input = ctx.principal(u)?;
            let report = verify(&input, ctx.characteristic())?;
            let mut text = String::new();
            for c in &report.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let _ = writeln!(text, "{tag}  {:<42} {}", c.name, c.detail);
            }
            Ok(Output {
                input: json!({ "n": input.n(), "u": u }),
                result: json!({ "checks": to_value(&report.checks), "all_passed": report.all_passed() }),
                text,
                ok: report.all_passed(),
            })
        }
    }
}

fn progress(max: u32) -> impl Fn(u32) + Sync {
    let show = std::io::stderr().is_terminal();
    move |j| {
        if show {
            eprintln!("betti: degree {j} of {max} done");
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit status.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let mut ctx = Context { cli: &cli, warnings: Vec::new() };
    let outcome = run_command(&mut ctx);
    for w in &ctx.warnings {
        let _ = writeln!(err, "{w}");
    }
    match outcome {
        Ok(output) => {
            match cli.format {
                Format::Text => {
                    let _ = write!(out, "{}", output.text);
                }
                Format::Json => {
                    let record = Record {
                        command: cli.command.name(),
                        d: cli.d.clone(),
                        input: &output.input,
                        result: &output.result,
                    };
                    // Going through `Value` sorts keys, so re-serializing a parsed record is the identity.
                    let value = to_value(&record);
                    let _ = writeln!(out, "{}", serde_json::to_string(&value).expect("json"));
                }
            }
            if output.ok {
                0
            } else {
                let _ = writeln!(err, "error: a consistency check failed");
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_from(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
