use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use collineation::catalog::{self, Params, ReproduceOptions};
use collineation::classify::{classify, label_image};
use collineation::ideal::implicitize_span;
use collineation::net::sigma3_membership;
use collineation::pencil::{build_pencil, classify_pencil, stratum_dimension, PencilBlockSpec};
use collineation::poly::{parse_poly, MonomialOrder, Ring};
use collineation::tensor::minors;
use collineation::{Error, Field, Tensor3};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "collineation", version, about = "Classify collineation varieties of order-3 tensors")]
struct Cli {
    /// Coefficient field: "qq" or "gf:p".
    // parsed after clap so that a bad environment value never masks the flag
    #[arg(long, global = true, env = "COLLINEATION_FIELD", default_value = "qq")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the k-th collineation variety of a tensor on one factor.
    Classify {
        #[command(flatten)]
        tensor: TensorArgs,
        #[arg(long, default_value_t = 1)]
        factor: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Pencils given by Kronecker blocks.
    Pencil {
        #[command(subcommand)]
        command: PencilCommand,
    },
    /// Rank of the Strassen flattening of a 3x3x3 tensor.
    Strassen {
        #[command(flatten)]
        tensor: TensorArgs,
    },
    /// Implicitize the image of a list of forms, or of the k x k minors of
    /// a tensor factor.
    Oracle {
        /// Comma-separated forms in x0, x1, ...
        #[arg(long, conflicts_with_all = ["input", "entry", "blocks"])]
        polys: Option<String>,
        /// Number of source variables; inferred from the forms by default.
        #[arg(long)]
        nvars: Option<usize>,
        #[command(flatten)]
        tensor: TensorArgs,
        #[arg(long, default_value_t = 1)]
        factor: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// The built-in catalog of normal forms.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum PencilCommand {
    /// Classify the k-th collineation variety of a block pencil.
    Classify {
        /// Blocks such as "L2+J3(1/2)+R1".
        #[arg(long)]
        blocks: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Dimensions of the closure of pencils with a given variety.
    Strata {
        #[arg(long)]
        n2: u64,
        #[arg(long)]
        n3: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        s: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Names and expectations of all entries.
    List,
    /// Classify every entry on factor 1 and compare with the expected labels.
    Reproduce {
        /// Parameter value for the one-parameter rows.
        #[arg(long, default_value = "2")]
        lambda: String,
        /// Second parameter value for the same rows.
        #[arg(long, default_value = "3")]
        lambda2: String,
        #[arg(long, default_value_t = 5)]
        cuboid_samples: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct TensorArgs {
    /// Tensor JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Catalog entry name.
    #[arg(long, conflicts_with = "input")]
    entry: Option<String>,
    /// Parameters for catalog families, e.g. "lambda=2" or "a=1,p1=0,p2=1".
    #[arg(long, default_value = "")]
    params: String,
    /// Pencil given by Kronecker blocks.
    #[arg(long, conflicts_with_all = ["input", "entry"])]
    blocks: Option<String>,
}

impl TensorArgs {
    fn given(&self) -> bool {
        self.input.is_some() || self.entry.is_some() || self.blocks.is_some()
    }

    fn load(&self, field: Field) -> anyhow::Result<Tensor3> {
        let t = if let Some(path) = &self.input {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Tensor3::parse_json(&text)?
        } else if let Some(name) = &self.entry {
            catalog::get_entry(name, &Params::parse(&self.params)?, Field::Rational)?.tensor
        } else if let Some(blocks) = &self.blocks {
            build_pencil(&PencilBlockSpec::parse(blocks, Field::Rational)?, Field::Rational)?
        } else {
            bail!(BadInput("one of --input, --entry or --blocks is required".into()));
        };
        if t.field() == field {
            Ok(t)
        } else {
            Ok(t.to_field(field)?)
        }
    }
}

/// Usage problems detected after argument parsing.
#[derive(Debug)]
struct BadInput(String);

impl std::fmt::Display for BadInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for BadInput {}

struct Outcome {
    report: Value,
    code: u8,
}

impl Outcome {
    fn ok<T: Serialize>(report: &T) -> anyhow::Result<Self> {
        Ok(Outcome {
            report: serde_json::to_value(report)?,
            code: 0,
        })
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let field: Field = cli.field.parse()?;
    match &cli.command {
        Command::Classify { tensor, factor, k } => {
            let t = tensor.load(field)?;
            let c = classify(&t, *factor, *k)?;
            let code = if c.label.is_undefined() { 1 } else { 0 };
            Ok(Outcome {
                report: serde_json::to_value(&c)?,
                code,
            })
        }
        Command::Pencil { command } => match command {
            PencilCommand::Classify { blocks, k } => {
                let spec = PencilBlockSpec::parse(blocks, field)?;
                let t = build_pencil(&spec, field)?;
                let c = classify_pencil(&t, *k)?;
                let code = if c.label.is_undefined() { 1 } else { 0 };
                let mut report = serde_json::to_value(&c)?;
                report["blocks"] = json!(spec.to_string());
                Ok(Outcome { report, code })
            }
            PencilCommand::Strata { n2, n3, k, s } => {
                let dims = stratum_dimension(*n2, *n3, *k, *s)?;
                Outcome::ok(&json!({ "n2": n2, "n3": n3, "k": k, "s": s, "dims": dims }))
            }
        },
        Command::Strassen { tensor } => {
            let t = tensor.load(field)?;
            let s = t.strassen_flattening()?;
            Outcome::ok(&json!({ "rank": s.rank, "sigma3": sigma3_membership(&t)? }))
        }
        Command::Oracle {
            polys,
            nvars,
            tensor,
            factor,
            k,
        } => {
            let forms = if let Some(text) = polys {
                parse_forms(text, *nvars, field)?
            } else if tensor.given() {
                let m = tensor.load(field)?.linear_matrix(*factor)?;
                minors(m.ring(), &m.rows(), *k)
            } else {
                bail!(BadInput("give --polys or a tensor".into()));
            };
            let image = implicitize_span(&forms)?;
            let gens: Vec<String> = image.ideal.groebner()?.iter().map(|g| g.to_string()).collect();
            Outcome::ok(&json!({
                "dim": image.hilbert.dim,
                "deg": image.hilbert.degree,
                "span": image.span_dim,
                "label": label_image(&image)?,
                "ideal": gens,
            }))
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                let list: Vec<Value> = catalog::entries()
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "table": e.table,
                            "params": e.params,
                            "expected": e.expected,
                            "strassen_rank": e.strassen_rank,
                        })
                    })
                    .collect();
                Outcome::ok(&list)
            }
            CatalogCommand::Reproduce {
                lambda,
                lambda2,
                cuboid_samples,
                jobs,
            } => {
                let parse = |s: &str| -> anyhow::Result<BigRational> {
                    let q = collineation::scalar::parse_rational(s)?;
                    if q == BigRational::from_integer(0.into()) {
                        bail!(BadInput("lambda must be nonzero".into()));
                    }
                    Ok(q)
                };
                let mut lambdas = vec![parse(lambda)?];
                let second = parse(lambda2)?;
                if second != lambdas[0] {
                    lambdas.push(second);
                }
                let opts = ReproduceOptions {
                    field,
                    lambdas,
                    cuboid_samples: *cuboid_samples,
                    seed: cli.seed,
                    jobs: *jobs,
                };
                let start = std::time::Instant::now();
                let report = catalog::reproduce_tables(&opts);
                log::info!("reproduced {} instances in {:?}", report.entries.len(), start.elapsed());
                Ok(Outcome {
                    code: if report.pass { 0 } else { 3 },
                    report: serde_json::to_value(&report)?,
                })
            }
        },
    }
}

fn parse_forms(text: &str, nvars: Option<usize>, field: Field) -> anyhow::Result<Vec<collineation::poly::Poly>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        bail!(BadInput("no forms given".into()));
    }
    let n = match nvars {
        Some(n) => n,
        None => {
            let mut max = 0;
            for p in &parts {
                let mut rest = *p;
                while let Some(pos) = rest.find('x') {
                    rest = &rest[pos + 1..];
                    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
                    if let Ok(i) = digits.parse::<usize>() {
                        max = max.max(i + 1);
                    }
                }
            }
            max.max(1)
        }
    };
    let ring = Ring::new(n, field, MonomialOrder::Grevlex);
    parts.iter().map(|p| Ok(parse_poly(&ring, p)?)).collect()
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_flat(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_text(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<BadInput>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::UndefinedCollineation(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&out.report).expect("report serializes")),
                Output::Text => {
                    let mut s = String::new();
                    render_text(&out.report, 0, &mut s);
                    print!("{s}");
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
