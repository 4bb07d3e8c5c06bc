//! Command-line front end: closed-form tables, block bundles, abacus
//! computations, and the verification campaign. JSON on stdout by default;
//! `--format table` renders aligned text from the same data.

use clap::{Parser, Subcommand, ValueEnum};
use hookblock::abacus::{p_core_and_weight, runner_diagram};
use hookblock::blockmap::{blocks, weight1_block_tables};
use hookblock::closed::{
    decomposition_matrix, ext_table, kl_check, model_schur_yoneda, model_simple_yoneda,
};
use hookblock::complex::{ext_oracle, ObjectKind};
use hookblock::error::Error;
use hookblock::functor::Lab;
use hookblock::partition::{hook_partition, HookIdx, Partition, Prime};
use hookblock::report::Status;
use hookblock::tableaux::theta_multiplicities;
use hookblock::verify::{run_suite, Suite, ORACLE_TIER};
use serde_json::json;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "hookblock", version, about = "Ext tables, Yoneda algebras and block combinatorics for degree-p polynomial functors in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum YonedaFamily {
    Schur,
    Simple,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Ext table between two hook-labelled objects
    Ext {
        #[arg(long)]
        p: u64,
        /// Source object, e.g. F:1, S:0, W:2
        #[arg(long)]
        from: String,
        /// Target object
        #[arg(long)]
        to: String,
        /// Recompute with the brute-force oracle and cross-check
        #[arg(long)]
        oracle: bool,
        /// Evaluation dimension for the oracle (defaults to p)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tier_override: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decomposition matrix [W_l : F_m]
    Decomp {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Finite model of a Yoneda algebra
    Yoneda {
        #[arg(value_enum)]
        family: YonedaFamily,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Kazhdan-Lusztig parity and sum-identity checks
    Kl {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Block structure of degree e, or the full weight-one bundle of a core
    Block {
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        p: u64,
        /// A p-core, e.g. "2,1" (omit for the block listing of degree e)
        #[arg(long)]
        core: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Multiplicities of the translated Schur functor over a core
    Theta {
        #[arg(long)]
        p: u64,
        /// The p-core, e.g. "1" (use "0" for the empty core)
        #[arg(long)]
        core: String,
        /// S:i for the hook with arm i, or S:a,b,c for an explicit partition
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Bead configuration, p-core and p-weight of a partition
    Abacus {
        #[arg(long)]
        p: u64,
        /// The partition, e.g. "4,3,3,1"
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run Hom-solver suites beyond their default prime bound
        #[arg(long)]
        tier_override: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn parse_theta_object(s: &str, p: Prime) -> Result<Partition, Error> {
    let (k, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("object {:?}", s)))?;
    if k.trim() != "S" {
        return Err(Error::Parse("theta acts on Schur objects (S:...)".into()));
    }
    if rest.contains(',') {
        rest.parse::<Partition>()
    } else {
        let i: u32 = rest
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("hook index {:?}: {}", rest, e)))?;
        Ok(hook_partition(HookIdx::new(p, i)?))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Ext { p, from, to, oracle, n, tier_override, format } => {
            let prime = Prime::new(p)?;
            let x = ObjectKind::parse(&from)?;
            let y = ObjectKind::parse(&to)?;
            let bound = prime.get() as usize - 1;
            for idx in [x.index(), y.index()] {
                if idx > bound {
                    return Err(Error::IndexRange(idx as i64, bound as i64));
                }
            }
            let table = ext_table(x, y, prime);
            if oracle {
                if p > ORACLE_TIER && !tier_override {
                    return Err(Error::TierRestricted("oracle".into(), ORACLE_TIER));
                }
                let n = n.unwrap_or(p as usize);
                let lab = Lab::new(prime, n);
                let got = ext_oracle(&lab, x, y, 2 * p as i64);
                if !got.same_dims(&table) {
                    eprintln!("oracle disagrees: {:?} vs closed {:?}", got.dims, table.dims);
                    return Ok(ExitCode::FAILURE);
                }
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string(&table).unwrap()),
                Format::Table => {
                    println!("Ext^q({}, {}) over F_{}", table.from, table.to, p);
                    if table.dims.is_empty() {
                        println!("  zero in all degrees");
                    }
                    for (q, d) in &table.dims {
                        println!("  q = {:>2}: {}", q, d);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decomp { p, format } => {
            let prime = Prime::new(p)?;
            let d = decomposition_matrix(prime);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&json!({"p": p, "matrix": d})).unwrap())
                }
                Format::Table => {
                    println!("[W_l : F_m] for p = {}", p);
                    for row in &d {
                        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        println!("  {}", cells.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Yoneda { family, p, format } => {
            let prime = Prime::new(p)?;
            let model = match family {
                YonedaFamily::Schur => model_schur_yoneda(prime),
                YonedaFamily::Simple => model_simple_yoneda(prime),
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string(&model).unwrap()),
                Format::Table => {
                    println!("{} (dimension {})", model.name, model.dim());
                    for (lbl, deg) in model.labels.iter().zip(&model.degrees) {
                        println!("  {:>14}  degree {}", lbl, deg);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kl { p, format } => {
            let prime = Prime::new(p)?;
            let rep = kl_check(prime);
            print_report_like(&rep.name, &rep.checks, format);
            Ok(if rep.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Block { e, p, core, format } => {
            let prime = Prime::new(p)?;
            match core {
                Some(core) => {
                    let core: Partition = core.parse()?;
                    if let Some(e) = e {
                        if core.weight() + p != e {
                            return Err(Error::WeightMismatch(core.weight() + p, e));
                        }
                    }
                    let bundle = weight1_block_tables(&core, prime)?;
                    match format {
                        Format::Json => println!("{}", serde_json::to_string(&bundle).unwrap()),
                        Format::Table => {
                            println!("block of {}-core {} in degree {}", p, bundle.core, bundle.e);
                            for (i, mu) in bundle.labels.iter().enumerate() {
                                println!("  mu_{} = {}", i, mu);
                            }
                            println!("decomposition matrix:");
                            for row in &bundle.decomposition {
                                let cells: Vec<String> =
                                    row.iter().map(|x| x.to_string()).collect();
                                println!("  {}", cells.join(" "));
                            }
                            println!("{} Ext tables; Yoneda models depend only on p", bundle.ext.len());
                        }
                    }
                }
                None => {
                    let e = e.ok_or_else(|| Error::Parse("need --e or --core".into()))?;
                    let bl = blocks(e, prime)?;
                    match format {
                        Format::Json => println!("{}", serde_json::to_string(&bl).unwrap()),
                        Format::Table => {
                            println!("blocks of degree {} at p = {}", e, p);
                            for (label, members) in &bl {
                                let names: Vec<String> =
                                    members.iter().map(|m| m.to_string()).collect();
                                println!(
                                    "  core {} (weight {}): {}",
                                    label.core,
                                    label.weight,
                                    names.join("; ")
                                );
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Theta { p, core, object, format } => {
            let prime = Prime::new(p)?;
            let core: Partition = core.parse()?;
            let nu = parse_theta_object(&object, prime)?;
            let mult = theta_multiplicities(&core, &nu, prime)?;
            let as_strings: std::collections::BTreeMap<String, u64> =
                mult.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "p": p,
                        "core": core.to_string(),
                        "object": nu.to_string(),
                        "multiplicities": as_strings,
                    }))
                    .unwrap()
                ),
                Format::Table => {
                    println!("theta(S_{}) over the {}-core {}:", nu, p, core);
                    for (mu, m) in &mult {
                        println!("  S_{}  x{}", mu, m);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Abacus { p, partition, format } => {
            let prime = Prime::new(p)?;
            let lam: Partition = partition.parse()?;
            let (core, weight) = p_core_and_weight(&lam, prime);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "partition": lam.to_string(),
                        "p": p,
                        "core": core.to_string(),
                        "weight": weight,
                        "quotientless": true,
                    }))
                    .unwrap()
                ),
                Format::Table => {
                    println!("bead configuration of {} on {} runners:", lam, p);
                    println!("{}", runner_diagram(&lam, prime));
                    println!("{}-core: {}   {}-weight: {}", p, core, p, weight);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { p, n, suite, seed, tier_override, format } => {
            let prime = Prime::new(p)?;
            let n = n.unwrap_or(p as usize);
            let suite = Suite::from_str(&suite)?;
            let report = run_suite(suite, prime, n, seed, tier_override)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                Format::Table => {
                    println!("suite {} at p = {}, n = {}, seed {}", report.suite, p, n, seed);
                    for c in &report.checks {
                        let tag = match c.status {
                            Status::Pass => "PASS",
                            Status::Fail => "FAIL",
                            Status::SkippedTier => "SKIP",
                        };
                        println!("  [{}] {} - {}", tag, c.id, c.details);
                    }
                    let fails = report.checks.iter().filter(|c| c.status == Status::Fail).count();
                    println!(
                        "{} checks, {} failed{}",
                        report.checks.len(),
                        fails,
                        if fails == 0 { " - all good" } else { "" }
                    );
                }
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn print_report_like(name: &str, checks: &[hookblock::report::Check], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&json!({"name": name, "checks": checks})).unwrap()
        ),
        Format::Table => {
            println!("{}", name);
            for c in checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::SkippedTier => "SKIP",
                };
                println!("  [{}] {} - {}", tag, c.id, c.details);
            }
        }
    }
}
