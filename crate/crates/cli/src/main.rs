//! Command-line entry point: exact computations, decompositions, kernels,
//! samplers, and the verification suites.
//!
//! Exit codes: 0 on success, 1 on domain errors (violated preconditions,
//! reported with the mathematical reason on standard error), 2 on usage
//! errors. Every number emitted in json/jsonl output is either an exact
//! `p/q` string or sits in a field named `approx`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use young_spectra::induced::PartitionSpec;
use young_spectra::kostka::kostka;
use young_spectra::markov::{
    kernel_cylinder, mixture_density, sample_path_with, walk_coordinates, BinarySequence,
    CylinderQuery, MixtureKernel, PlancherelKernel, TransitionKernel, TwoBlockKernel,
};
use young_spectra::numfmt::{rational_decimal, rational_exact, rational_to_f64};
use young_spectra::oracle::Oracle;
use young_spectra::partition::{Composition, Partition};
use young_spectra::rng::SplitMix64;
use young_spectra::tableau::StandardTableau;
use young_spectra::verify::{run_suite, SuiteOptions};
use young_spectra::{Error, DEFAULT_ORACLE_BOUND};

const SCHEMA: &str = "young-spectra/1";

#[derive(Parser)]
#[command(
    name = "young-spectra",
    version,
    about = "Exact Young-graph combinatorics, induced-representation decompositions, and Markov spectral measures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SampleFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelChoice {
    Plancherel,
    Twoblock,
    Mixture,
}

#[derive(Args)]
struct KernelArgs {
    /// Which transition kernel to build
    #[arg(long, value_enum)]
    kernel: KernelChoice,
    /// Binary sequence PREFIX:PERIOD driving the two-block kernel
    #[arg(long)]
    xi: Option<String>,
    /// Finite diagram of the mixture measure, e.g. "2,1"
    #[arg(long)]
    nu: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of standard tableaux of a shape (hook length formula)
    Dim {
        /// Partition, e.g. "4,2,1"; "[]" is the empty diagram
        partition: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kostka number: semistandard tableaux of a shape and content
    Kostka {
        shape: String,
        /// Content composition, e.g. "2,1,1" (order irrelevant)
        weight: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full character table of the symmetric group of degree n
    CharacterTable {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiplicity of an irreducible in the representation induced from a
    /// Young subgroup (brute-force character sum)
    InducedMult {
        lambda: String,
        /// Block sizes of the Young subgroup, e.g. "3,2,1"
        blocks: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify a partition spec (large / small) and report its type vector
    Classify {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose the induced representation of a partition spec
    Decompose {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Limit spectral weights for a spec with one infinite block
    LimitWeights {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Block sizes of the partition restricted to {1..n}
    Truncate {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two specs differ by a finite permutation
    TailEquiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Transition distribution of a kernel at one state
    Kernel {
        #[command(flatten)]
        kernel: KernelArgs,
        /// Current diagram, e.g. "2,1"
        #[arg(long)]
        shape: String,
        /// Level of the state; defaults to the cell count of the shape
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact cylinder mass of a diagram under a kernel's measure
    Cylinder {
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        shape: String,
        /// Level of the cylinder; defaults to the cell count of the shape
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Density of the mixture measure against Plancherel at the gluing level
    Density {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw seeded paths from a kernel
    Sample {
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        levels: usize,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Jsonl)]
        out: SampleFormat,
        /// Emit the full diagram path of each sample
        #[arg(long)]
        emit_path: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        /// Override the suite's default exhaustive bound
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict content-indexed suites to one diagram
        #[arg(long)]
        nu: Option<String>,
        /// Restrict level-indexed suites to one level
        #[arg(long)]
        big_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn oracle_bound() -> usize {
    match std::env::var("YS_ORACLE_BOUND") {
        Ok(text) => match text.parse::<usize>() {
            Ok(bound) => {
                if bound > DEFAULT_ORACLE_BOUND {
                    eprintln!(
                        "warning: oracle bound raised to {bound}; character tables and class \
                         enumerations grow rapidly past {DEFAULT_ORACLE_BOUND}"
                    );
                }
                bound
            }
            Err(_) => {
                eprintln!("warning: ignoring unparsable YS_ORACLE_BOUND={text:?}");
                DEFAULT_ORACLE_BOUND
            }
        },
        Err(_) => DEFAULT_ORACLE_BOUND,
    }
}

fn load_spec(path: &PathBuf) -> Result<PartitionSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn build_kernel(args: &KernelArgs) -> Result<Box<dyn TransitionKernel>, Error> {
    match args.kernel {
        KernelChoice::Plancherel => Ok(Box::new(PlancherelKernel::new())),
        KernelChoice::Twoblock => {
            let xi = args.xi.as_deref().ok_or_else(|| {
                Error::Parse("the two-block kernel needs --xi PREFIX:PERIOD".into())
            })?;
            Ok(Box::new(TwoBlockKernel::new(BinarySequence::parse(xi)?)))
        }
        KernelChoice::Mixture => {
            let nu = args
                .nu
                .as_deref()
                .ok_or_else(|| Error::Parse("the mixture kernel needs --nu PARTITION".into()))?;
            Ok(Box::new(MixtureKernel::new(Partition::parse(nu)?)?))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_rational(label: &str, value: &BigRational, format: Format) {
    match format {
        Format::Text => {
            println!("{}", rational_exact(value));
            println!("approx: {}", rational_decimal(value, 15));
        }
        Format::Json => {
            let obj = json!({
                "schema": SCHEMA,
                "command": label,
                "value": rational_exact(value),
                "approx": rational_to_f64(value),
            });
            println!("{obj}");
        }
        Format::Csv => {
            println!("value,approx");
            println!(
                "{},{}",
                csv_field(&rational_exact(value)),
                rational_decimal(value, 15)
            );
        }
    }
}

fn print_weights(
    command: &str,
    extra: &[(&str, serde_json::Value)],
    weights: &BTreeMap<Partition, BigRational>,
    format: Format,
) {
    match format {
        Format::Text => {
            for (mu, w) in weights {
                println!("{mu}\t{}\t(approx {})", rational_exact(w), rational_decimal(w, 15));
            }
        }
        Format::Json => {
            let entries: Vec<_> = weights
                .iter()
                .map(|(mu, w)| {
                    json!({
                        "mu": mu,
                        "weight": rational_exact(w),
                        "approx": rational_to_f64(w),
                    })
                })
                .collect();
            let mut obj = json!({ "schema": SCHEMA, "command": command, "weights": entries });
            for (key, value) in extra {
                obj[key] = value.clone();
            }
            println!("{obj}");
        }
        Format::Csv => {
            println!("mu,weight,approx");
            for (mu, w) in weights {
                println!(
                    "{},{},{}",
                    csv_field(&mu.to_string()),
                    csv_field(&rational_exact(w)),
                    rational_decimal(w, 15)
                );
            }
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Dim { partition, format } => {
            let p = Partition::parse(&partition)?;
            let d = p.dimension();
            match format {
                Format::Text | Format::Csv => println!("{d}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "dim",
                        "partition": p,
                        "dimension": d.to_string(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostka {
            shape,
            weight,
            format,
        } => {
            let mu = Partition::parse(&shape)?;
            let w = Composition::parse(&weight)?;
            let k = kostka(&mu, w.parts())?;
            match format {
                Format::Text | Format::Csv => println!("{k}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "kostka",
                        "shape": mu,
                        "weight": w.parts(),
                        "kostka": k.to_string(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CharacterTable { n, format } => {
            let oracle = Oracle::with_bound(oracle_bound());
            let table = oracle.character_table(n)?;
            match format {
                Format::Text => {
                    let header: Vec<String> =
                        table.classes.iter().map(|c| c.cycles.to_string()).collect();
                    println!("lambda \\ rho\t{}", header.join("\t"));
                    for lam in &table.diagrams {
                        let row: Vec<String> = table
                            .classes
                            .iter()
                            .map(|c| table.value(lam, &c.cycles).expect("present").to_string())
                            .collect();
                        println!("{lam}\t{}", row.join("\t"));
                    }
                }
                Format::Json => {
                    let classes: Vec<_> = table
                        .classes
                        .iter()
                        .map(|c| {
                            json!({
                                "cycles": c.cycles,
                                "class_size": c.class_size.to_string(),
                            })
                        })
                        .collect();
                    let values: Vec<Vec<String>> = table
                        .diagrams
                        .iter()
                        .map(|lam| {
                            table
                                .classes
                                .iter()
                                .map(|c| table.value(lam, &c.cycles).expect("present").to_string())
                                .collect()
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "command": "character-table",
                            "n": n,
                            "classes": classes,
                            "diagrams": table.diagrams,
                            "values": values,
                        })
                    );
                }
                Format::Csv => {
                    let mut header = vec!["lambda".to_string()];
                    header.extend(table.classes.iter().map(|c| csv_field(&c.cycles.to_string())));
                    println!("{}", header.join(","));
                    for lam in &table.diagrams {
                        let mut row = vec![csv_field(&lam.to_string())];
                        row.extend(table.classes.iter().map(|c| {
                            table.value(lam, &c.cycles).expect("present").to_string()
                        }));
                        println!("{}", row.join(","));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::InducedMult {
            lambda,
            blocks,
            format,
        } => {
            let lam = Partition::parse(&lambda)?;
            let blocks = Composition::parse(&blocks)?;
            let oracle = Oracle::with_bound(oracle_bound());
            let mult = oracle.induced_multiplicity(&lam, &blocks)?;
            match format {
                Format::Text | Format::Csv => println!("{mult}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "induced-mult",
                        "lambda": lam,
                        "blocks": blocks.parts(),
                        "multiplicity": mult.to_string(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { spec, format } => {
            let spec = load_spec(&spec)?;
            let classification = spec.classify();
            let tv = spec.type_vector();
            let irreducible = spec.is_irreducible().ok();
            let factor = spec.is_factor().ok();
            match format {
                Format::Text => {
                    println!("classification: {classification}");
                    println!("type: {tv}");
                    if let Some(irr) = irreducible {
                        println!("irreducible: {irr}");
                    }
                    if let Some(f) = factor {
                        println!("factor: {f}");
                    }
                }
                Format::Json | Format::Csv => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "command": "classify",
                            "classification": classification,
                            "type_vector": tv,
                            "irreducible": irreducible,
                            "factor": factor,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { spec, format } => {
            let spec = load_spec(&spec)?;
            let report = match spec.classify() {
                young_spectra::Classification::Large => spec.decompose_large()?,
                _ => spec.central_decomposition_small()?,
            };
            match format {
                Format::Text => {
                    for entry in &report.entries {
                        println!("{}\t{}\t{}", entry.mu, entry.multiplicity, entry.label);
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "command": "decompose",
                            "classification": spec.classify(),
                            "report": report,
                        })
                    );
                }
                Format::Csv => {
                    println!("mu,multiplicity,label");
                    for entry in &report.entries {
                        println!(
                            "{},{},{}",
                            csv_field(&entry.mu.to_string()),
                            entry.multiplicity,
                            csv_field(&entry.label)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LimitWeights { spec, format } => {
            let spec = load_spec(&spec)?;
            let weights = spec.limit_weights(oracle_bound())?;
            print_weights(
                "limit-weights",
                &[("shape", serde_json::to_value(spec.finite_shape()).expect("serializable"))],
                &weights,
                format,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Truncate { spec, n, format } => {
            let spec = load_spec(&spec)?;
            let blocks = spec.truncate(n);
            match format {
                Format::Text | Format::Csv => println!("{blocks}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "truncate",
                        "n": n,
                        "blocks": blocks.parts(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TailEquiv { a, b, format } => {
            let spec_a = load_spec(&a)?;
            let spec_b = load_spec(&b)?;
            let equivalent = spec_a.tail_equivalent(&spec_b)?;
            match format {
                Format::Text | Format::Csv => println!("{equivalent}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "tail-equiv",
                        "equivalent": equivalent,
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel {
            kernel,
            shape,
            level,
            format,
        } => {
            let k = build_kernel(&kernel)?;
            let shape = Partition::parse(&shape)?;
            let level = level.unwrap_or_else(|| shape.size());
            let transitions = k.transitions(level, &shape)?;
            match format {
                Format::Text => {
                    for (to, p) in &transitions {
                        println!("{to}\t{}\t(approx {})", rational_exact(p), rational_decimal(p, 15));
                    }
                }
                Format::Json => {
                    let entries: Vec<_> = transitions
                        .iter()
                        .map(|(to, p)| {
                            json!({
                                "to": to,
                                "probability": rational_exact(p),
                                "approx": rational_to_f64(p),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "command": "kernel",
                            "level": level,
                            "shape": shape,
                            "transitions": entries,
                        })
                    );
                }
                Format::Csv => {
                    println!("to,probability,approx");
                    for (to, p) in &transitions {
                        println!(
                            "{},{},{}",
                            csv_field(&to.to_string()),
                            csv_field(&rational_exact(p)),
                            rational_decimal(p, 15)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cylinder {
            kernel,
            shape,
            level,
            format,
        } => {
            let shape = Partition::parse(&shape)?;
            if let Some(level) = level {
                if level != shape.size() {
                    return Err(Error::InvalidState(format!(
                        "diagram cylinders live at their own level: {} has {} cells, got --level {level}",
                        shape,
                        shape.size()
                    )));
                }
            }
            let k = build_kernel(&kernel)?;
            let value = kernel_cylinder(k.as_ref(), &CylinderQuery::Diagram(shape))?;
            print_rational("cylinder", &value, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Density { nu, mu, format } => {
            let nu = Partition::parse(&nu)?;
            let mu = Partition::parse(&mu)?;
            let value = mixture_density(&nu, &mu)?;
            print_rational("density", &value, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            kernel,
            levels,
            count,
            seed,
            out,
            emit_path,
        } => {
            let k = build_kernel(&kernel)?;
            if out == SampleFormat::Csv {
                if emit_path {
                    println!("sample,shape,walk,path");
                } else {
                    println!("sample,shape,walk");
                }
            }
            for index in 0..count {
                let mut rng = SplitMix64::stream(seed, index);
                let path = sample_path_with(k.as_ref(), levels, &mut rng)?;
                emit_sample(index, &path, out, emit_path);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_n,
            nu,
            big_n,
            format,
        } => {
            let nu = match nu {
                Some(text) => Some(Partition::parse(&text)?),
                None => None,
            };
            let options = SuiteOptions {
                max_n,
                nu,
                big_n,
                oracle_bound: Some(oracle_bound()),
            };
            let report = match run_suite(&suite, &options) {
                Ok(r) => r,
                Err(Error::Parse(message)) => {
                    // unknown suite is a usage error
                    eprintln!("error: {message}");
                    return Ok(ExitCode::from(2));
                }
                Err(e) => return Err(e),
            };
            match format {
                Format::Text => {
                    for step in &report.steps {
                        let status = if step.passed { "PASS" } else { "FAIL" };
                        println!("  {}: {status} ({} checks)", step.label, step.cases);
                    }
                    let status = if report.passed() { "PASS" } else { "FAIL" };
                    println!("suite {}: {status} ({} checks)", report.suite, report.cases);
                    if let Some(f) = &report.failure {
                        println!("first counterexample: {f}");
                    }
                }
                Format::Json | Format::Csv => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "command": "verify",
                            "suite": report.suite,
                            "cases": report.cases,
                            "steps": report.steps,
                            "passed": report.passed(),
                            "failure": report.failure,
                        })
                    );
                }
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit_sample(index: u64, path: &StandardTableau, out: SampleFormat, emit_path: bool) {
    let walk = walk_coordinates(path).ok();
    match out {
        SampleFormat::Jsonl => {
            let mut record = json!({
                "schema": SCHEMA,
                "sample": index,
                "shape": path.shape(),
                "walk": walk,
            });
            if emit_path {
                record["path"] = serde_json::to_value(path.path()).expect("serializable");
            }
            println!("{record}");
        }
        SampleFormat::Csv => {
            let shape = csv_field(&path.shape().to_string());
            let walk_text = csv_field(
                &walk
                    .map(|w| {
                        w.iter()
                            .map(|j| j.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .unwrap_or_default(),
            );
            if emit_path {
                let path_text = csv_field(
                    &path
                        .path()
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" -> "),
                );
                println!("{index},{shape},{walk_text},{path_text}");
            } else {
                println!("{index},{shape},{walk_text}");
            }
        }
    }
}
