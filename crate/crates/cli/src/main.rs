use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use grasscat::catalog::{exchange_graph, export_dot, fixture_graph, run_check, FIXTURES};
use grasscat::cluster::{census, default_budget, enumerate, EnumerateOptions};
use grasscat::rankone::{dstar, ext_dim, ext_vanishes, hom_min_exponent, syzygy_profile};
use grasscat::subsets::weakly_separated;
use grasscat::weights::{class_of_profile, enumerate_roots, to_root_basis};
use grasscat::{Error, KSubset, Profile, Weight};

/// Rank-one modules, profiles, weights and cluster variables for Grassmannian cluster categories.
#[derive(Parser)]
#[command(name = "grasscat", version)]
struct Cli {
    /// Subset size.
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Number of points on the circle.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of clusters to visit while enumerating.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Are two k-subsets weakly separated?
    Ws { i: String, j: String },
    /// Minimal exponent vector of Hom(L_I, L_J).
    Hom { i: String, j: String },
    /// Ext^1(L_I, L_J): vanishing, dimension and the matrix D*.
    Ext { i: String, j: String },
    /// Profile of the first syzygy of L_I.
    Syzygy { i: String },
    /// Class of a profile such as 137|125|124|238.
    ProfileClass { profile: String },
    /// Quadratic form of a weight given as comma-separated coordinates.
    Qform {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Roots of a given degree.
    Roots {
        #[arg(long, short)]
        d: i64,
    },
    /// Enumerate all cluster variables (finite type only) and print the census.
    Enumerate {
        /// Also list every variable with its Laurent expansion.
        #[arg(long)]
        records: bool,
    },
    /// Run a fixture check.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FIXTURES))]
        fixture: String,
    },
    /// Graphviz text for a fixture quiver, or for the exchange graph with `enumerate`.
    ExportDot { source: String },
}

/// Failure with an exit code.
struct Exit(u8, anyhow::Error);

fn usage(e: impl Into<anyhow::Error>) -> Exit {
    Exit(2, e.into())
}

fn lib(e: Error) -> Exit {
    match e {
        Error::BudgetExhausted(_) => Exit(3, e.into()),
        Error::Invariant(_) | Error::Arithmetic(_) => Exit(1, e.into()),
        _ => Exit(2, e.into()),
    }
}

impl Cli {
    fn n(&self) -> std::result::Result<usize, Exit> {
        self.n.ok_or_else(|| usage(anyhow!("--n is required")))
    }

    fn kn(&self) -> std::result::Result<(usize, usize), Exit> {
        let k = self.k.ok_or_else(|| usage(anyhow!("--k is required")))?;
        Ok((k, self.n()?))
    }

    fn subset(&self, s: &str) -> std::result::Result<KSubset, Exit> {
        let i = KSubset::parse(s, self.n()?).map_err(lib)?;
        match self.k {
            Some(k) if k != i.k() => Err(usage(anyhow!("{s} has {} elements, not {k}", i.k()))),
            _ => Ok(i),
        }
    }
}

/// Write to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        out(&(serde_json::to_string_pretty(&value).expect("serialisable") + "\n"));
    } else {
        out(&(text + "\n"));
    }
}

fn run(cli: &Cli) -> std::result::Result<u8, Exit> {
    let json = cli.json;
    match &cli.command {
        Command::Ws { i, j } => {
            let (i, j) = (cli.subset(i)?, cli.subset(j)?);
            let ws = weakly_separated(&i, &j).map_err(lib)?;
            emit(
                json,
                json!({ "i": i, "j": j, "weakly_separated": ws }),
                format!("{i} {j}: {ws}"),
            );
        }
        Command::Hom { i, j } => {
            let (i, j) = (cli.subset(i)?, cli.subset(j)?);
            let a = hom_min_exponent(&i, &j).map_err(lib)?;
            let text = a
                .alpha
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            emit(
                json,
                json!({ "i": i, "j": j, "alpha": a.alpha }),
                format!("alpha = {text}"),
            );
        }
        Command::Ext { i, j } => {
            let (i, j) = (cli.subset(i)?, cli.subset(j)?);
            let v = ext_vanishes(&i, &j).map_err(lib)?;
            let d = ext_dim(&i, &j).map_err(lib)?;
            let m = dstar(&i, &j).map_err(lib)?;
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|r| m.row(r).iter().map(|p| p.to_string()).collect())
                .collect();
            let table = rows
                .iter()
                .map(|r| format!("  [{}]", r.join(", ")))
                .collect::<Vec<_>>();
            emit(
                json,
                json!({ "i": i, "j": j, "vanishes": v, "dim": d, "dstar": rows }),
                format!("ext vanishes: {v}\ndim: {d}\nD* =\n{}", table.join("\n")),
            );
        }
        Command::Syzygy { i } => {
            let i = cli.subset(i)?;
            let p = syzygy_profile(&i).map_err(lib)?;
            let text = if p.rank() == 0 {
                "0 (projective)".to_string()
            } else {
                p.to_string_with_offsets()
            };
            emit(json, json!({ "i": i, "syzygy": p }), text);
        }
        Command::ProfileClass { profile } => {
            let p = Profile::parse(profile, cli.n()?).map_err(lib)?;
            if let Some(k) = cli.k.filter(|&k| k != p.k()) {
                return Err(usage(anyhow!(
                    "profile layers have {} elements, not {k}",
                    p.k()
                )));
            }
            let c = class_of_profile(&p);
            emit(
                json,
                json!({ "profile": p, "class": c, "q": c.qform(), "delta": c.delta() }),
                format!("class {c}  q = {}  delta = {}", c.qform(), c.delta()),
            );
        }
        Command::Qform { weight } => {
            let k = cli.k.ok_or_else(|| usage(anyhow!("--k is required")))?;
            let x = weight
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .context("weight coordinates must be integers")
                .map_err(usage)?;
            if cli.n.is_some_and(|n| n != x.len()) {
                return Err(usage(anyhow!("weight has {} coordinates", x.len())));
            }
            let w = Weight::new(k, x).map_err(lib)?;
            let rb = to_root_basis(&w);
            emit(
                json,
                json!({ "weight": w, "q": w.qform(), "delta": w.delta(), "root_basis": rb }),
                format!(
                    "q = {}  delta = {}  root coordinates {:?} d = {}",
                    w.qform(),
                    w.delta(),
                    rb.a,
                    rb.d
                ),
            );
        }
        Command::Roots { d } => {
            let (k, n) = cli.kn()?;
            let roots = enumerate_roots(k, n, *d).map_err(lib)?;
            let text = roots.iter().map(Weight::to_string).collect::<Vec<_>>();
            emit(
                json,
                json!({ "k": k, "n": n, "degree": d, "count": roots.len(), "roots": roots }),
                format!("{} roots of degree {d}\n{}", roots.len(), text.join("\n")),
            );
        }
        Command::Enumerate { records } => {
            let (k, n) = cli.kn()?;
            let budget = cli.budget.unwrap_or_else(|| default_budget(k, n));
            let e = enumerate(k, n, &EnumerateOptions::with_budget(budget)).map_err(lib)?;
            let c = census(&e.records);
            let mut value = json!({ "k": k, "n": n, "census": c, "stats": e.stats });
            if *records {
                value["records"] = serde_json::to_value(&e.records).expect("serialisable");
            }
            let mut text = format!(
                "Gr({k},{n}): {} variables, {} clusters\n",
                c.total, e.stats.clusters
            );
            for (d, dc) in &c.degrees {
                text += &format!(
                    "  degree {d}: {} variables, {} weights\n",
                    dc.count,
                    dc.weights.len()
                );
            }
            if !c.non_roots.is_empty() {
                text += &format!("  weights with q != 2: {}\n", c.non_roots.len());
            }
            if *records {
                let names: Vec<String> = e.initial_labels.iter().map(|l| format!("P{l}")).collect();
                for r in &e.records {
                    text += &format!("  {} {}\n", r.weight, r.canonical.display_with(&names));
                }
            }
            emit(json, value, text.trim_end().to_string());
        }
        Command::Check { fixture } => {
            let r = run_check(fixture).map_err(lib)?;
            let mut text = format!("{}: {}\n", r.fixture, if r.ok { "ok" } else { "FAILED" });
            for a in &r.assertions {
                text += &format!(
                    "  [{}] {}: {}\n",
                    if a.ok { "ok" } else { "FAIL" },
                    a.name,
                    a.detail
                );
            }
            emit(
                json,
                serde_json::to_value(&r).expect("serialisable"),
                text.trim_end().to_string(),
            );
            return Ok(if r.ok { 0 } else { 1 });
        }
        Command::ExportDot { source } => {
            let g = if source == "enumerate" {
                let (k, n) = cli.kn()?;
                let budget = cli.budget.unwrap_or_else(|| default_budget(k, n));
                exchange_graph(
                    &enumerate(k, n, &EnumerateOptions::with_budget(budget)).map_err(lib)?,
                )
            } else {
                fixture_graph(source).map_err(lib)?
            };
            out(&export_dot(&g));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
