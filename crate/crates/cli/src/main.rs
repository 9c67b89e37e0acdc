use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sperner_core::analysis::{
    is_antichain, is_linear_sperner, min_unshattered_size, run_verification, shatters, Status, Suite, SuiteParams,
};
use sperner_core::cube::{Monomial, PointSet, Subset, TermOrder};
use sperner_core::families::{gen_linear_sperner, gen_mod_p, WeightSpec};
use sperner_core::ideal::{construct_q, lexgame_winner, standard_monomials_oracle, vanishing_certificate};
use sperner_core::par::Execution;

/// Largest dimension for commands that enumerate the cube.
const MAX_GEN_DIM: usize = 24;
/// Largest dimension for commands that run the linear-algebra oracle.
const MAX_ORACLE_DIM: usize = 12;

#[derive(Parser)]
#[command(name = "sperner", version, about = "Standard monomials of linear Sperner families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the points of S(a,k), or S_p(a,k) with a modulus.
    Gen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spec: String,
        /// Modulus, overriding any `p=` in the spec.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Standard monomials of the vanishing ideal.
    Sm {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "lex")]
        order: TermOrder,
    },
    /// Winner of the Lex game for a monomial.
    Lexgame {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        monomial: String,
    },
    /// A vanishing polynomial with the given leading monomial.
    Certificate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        monomial: String,
        #[arg(long, default_value = "lex")]
        order: TermOrder,
    },
    /// The polynomial Q for S(a,k) and T in H_t (T given as --monomial).
    Qpoly {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        monomial: String,
    },
    /// Shattering data: whether a set is shattered, or the smallest
    /// unshattered size when no set is given.
    Shatter {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        monomial: Option<String>,
    },
    /// Decide whether a point set is S(a,k) for positive integer weights.
    IsLinear {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_weight: Option<u64>,
        /// Moduli for the modp suite (repeatable).
        #[arg(long)]
        prime: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        /// Run instances one after another.
        #[arg(long)]
        sequential: bool,
        /// Record DegLex ballot containment as a note (theorem-main).
        #[arg(long)]
        deglex_data: bool,
        /// Print the elapsed time on stderr.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Lift the instance-size guards.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct Source {
    /// Weight spec such as `a=1,2,2;k=3` (add `;p=5` for a modulus).
    #[arg(long, conflicts_with = "points", required_unless_present = "points")]
    spec: Option<String>,
    /// Point tokens such as `110,101`.
    #[arg(long)]
    points: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

fn guard(n: usize, limit: usize, allow_large: bool, what: &str) -> Result<()> {
    if n > limit && !allow_large {
        bail!("n = {n} exceeds the limit {limit} for {what}; pass --allow-large to override");
    }
    Ok(())
}

fn parse_spec(text: &str) -> Result<WeightSpec> {
    text.parse().with_context(|| format!("malformed weight spec {text:?}"))
}

fn generate(spec: &WeightSpec) -> Result<PointSet> {
    Ok(match spec.modulus() {
        Some(_) => gen_mod_p(spec)?,
        None => gen_linear_sperner(spec),
    })
}

impl Source {
    fn load(&self, common: &Common, oracle: bool) -> Result<PointSet> {
        let (limit, what) = if oracle { (MAX_ORACLE_DIM, "oracle-based commands") } else { (MAX_GEN_DIM, "generation") };
        match (&self.spec, &self.points) {
            (Some(spec), _) => {
                let spec = parse_spec(spec)?;
                guard(spec.dim(), limit, common.allow_large, what)?;
                generate(&spec)
            }
            (None, Some(points)) => {
                let v = PointSet::parse(points, None).with_context(|| format!("malformed points {points:?}"))?;
                guard(v.dim(), limit, common.allow_large, what)?;
                Ok(v)
            }
            (None, None) => bail!("one of --spec or --points is required"),
        }
    }
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("json") + "\n"
}

/// Output text and exit status.
fn run(command: Command) -> Result<(String, u8)> {
    let out = match command {
        Command::Gen { common, spec, prime } => {
            let mut spec = parse_spec(&spec)?;
            if let Some(p) = prime {
                spec = WeightSpec::with_modulus(spec.weights().to_vec(), spec.target(), p)?;
            }
            guard(spec.dim(), MAX_GEN_DIM, common.allow_large, "generation")?;
            let v = generate(&spec)?;
            match common.format {
                Format::Table => lines(v.tokens()),
                Format::Structured => pretty(json!({ "spec": spec, "count": v.len(), "points": v })),
            }
        }
        Command::Sm { common, source, order } => {
            let v = source.load(&common, true)?;
            let sm = standard_monomials_oracle(&v, order);
            match common.format {
                Format::Table => lines(sm.monomial_tokens()),
                Format::Structured => pretty(json!({
                    "order": order,
                    "points": v.len(),
                    "count": sm.len(),
                    "standard_monomials": sm,
                })),
            }
        }
        Command::Lexgame { common, source, monomial } => {
            let v = source.load(&common, false)?;
            let w = Monomial::parse(&monomial, v.dim())?;
            let winner = lexgame_winner(&v, &w)?;
            match common.format {
                Format::Table => format!("{winner}\n"),
                Format::Structured => pretty(json!({ "monomial": w, "winner": winner })),
            }
        }
        Command::Certificate { common, source, monomial, order } => {
            let v = source.load(&common, true)?;
            let m = Monomial::parse(&monomial, v.dim())?;
            let q = vanishing_certificate(&v, &m, order)?;
            match common.format {
                Format::Table => format!("{q}\n"),
                Format::Structured => pretty(json!({ "monomial": m, "order": order, "polynomial": q })),
            }
        }
        Command::Qpoly { common, spec, monomial } => {
            let spec = parse_spec(&spec)?;
            guard(spec.dim(), MAX_GEN_DIM, common.allow_large, "generation")?;
            let t_set: Subset = monomial.parse()?;
            let q = construct_q(&spec, t_set)?;
            match common.format {
                Format::Table => format!("{q}\n"),
                Format::Structured => pretty(json!({ "spec": spec, "t": t_set.to_set_token(), "polynomial": q })),
            }
        }
        Command::Shatter { common, source, monomial } => {
            let v = source.load(&common, false)?;
            match monomial {
                Some(text) => {
                    let s: Subset = text.parse()?;
                    if s.max_element().is_some_and(|m| m > v.dim()) {
                        bail!("set {text} is not contained in [{}]", v.dim());
                    }
                    let yes = shatters(&v, s);
                    match common.format {
                        Format::Table => format!("{}\n", if yes { "shattered" } else { "not shattered" }),
                        Format::Structured => pretty(json!({ "set": s.to_set_token(), "shattered": yes })),
                    }
                }
                None => {
                    guard(v.dim(), MAX_ORACLE_DIM, common.allow_large, "the shattering scan")?;
                    let ell = min_unshattered_size(&v);
                    let antichain = is_antichain(&v);
                    match common.format {
                        Format::Table => format!("min_unshattered_size {ell}\nantichain {antichain}\n"),
                        Format::Structured => pretty(json!({
                            "points": v.len(),
                            "min_unshattered_size": ell,
                            "antichain": antichain,
                        })),
                    }
                }
            }
        }
        Command::IsLinear { common, source } => {
            let v = source.load(&common, true)?;
            let found = is_linear_sperner(&v)?;
            match common.format {
                Format::Table => match &found {
                    Some(spec) => format!("{spec}\n"),
                    None => "none\n".to_string(),
                },
                Format::Structured => pretty(json!({
                    "linear": found.is_some(),
                    "spec": found,
                    "note": "decided over positive rationals and scaled to a primitive integer vector; \
                             scaling preserves the family",
                })),
            }
        }
        Command::Verify { common, suite, n, max_weight, prime, seed, samples, sequential, deglex_data, timings } => {
            let mut params = SuiteParams::for_suite(suite);
            params.n = n.unwrap_or(params.n);
            params.max_weight = max_weight.unwrap_or(params.max_weight);
            if !prime.is_empty() {
                params.primes = prime;
            }
            params.seed = seed;
            params.samples = samples.unwrap_or(params.samples);
            params.deglex_data = deglex_data;
            params.execution = if sequential { Execution::Sequential } else { Execution::Parallel };
            let limit = if suite.uses_oracle() { MAX_ORACLE_DIM } else { MAX_GEN_DIM };
            guard(params.n, limit, common.allow_large, suite.id())?;
            let report = run_verification(suite, &params)?;
            if timings {
                eprintln!("elapsed {:.3?}", report.elapsed);
            }
            let text = match common.format {
                Format::Table => report.to_table(),
                Format::Structured => report.to_json() + "\n",
            };
            return Ok((text, if report.status == Status::Pass { 0 } else { 1 }));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!("hint: run `sperner help` or `sperner <command> --help` for usage");
            ExitCode::from(2)
        }
    }
}
