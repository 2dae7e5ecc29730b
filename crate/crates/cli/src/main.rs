mod config;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qva_core::arith::HalfInt;
use qva_core::deformation::PRESET_NAMES;
use qva_core::qalgebra::{normal_form_word, parse_word};
use qva_core::vacuum::{character, graded_dim};
use qva_core::Status;

use config::Config;
use suites::{combine, run_suites, Context, Registry};

#[derive(Parser)]
#[command(name = "qva", version, about = "Exact checks for free-field quantum vertex algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// JSON config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in parameter set; overrides l, q and p from the config.
    #[arg(long)]
    preset: Option<String>,
    /// Truncation order of the exchange series.
    #[arg(long)]
    order: Option<i64>,
    /// Largest conformal weight, e.g. 2 or 3/2.
    #[arg(long)]
    max_weight: Option<String>,
    #[arg(long)]
    mode_radius: Option<i64>,
    #[arg(long)]
    box_radius: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Run {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suite names; defaults to all.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Include wall-clock times (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Print the normal form of a word such as "X[1,0] Y[1,-1]".
    Reduce {
        word: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print graded dimensions of the vacuum module next to the character.
    Character {
        #[command(flatten)]
        common: Common,
    },
    /// Check unitarity and the Yang-Baxter equation for the braiding.
    Ybe {
        #[command(flatten)]
        common: Common,
    },
}

struct ConfigError(String);

impl From<String> for ConfigError {
    fn from(s: String) -> Self {
        ConfigError(s)
    }
}

impl From<&str> for ConfigError {
    fn from(s: &str) -> Self {
        ConfigError(s.into())
    }
}

struct Resolved {
    config: Config,
    ctx: Context,
}

fn resolve(common: &Common) -> Result<Resolved, ConfigError> {
    let mut config = match &common.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(name) = &common.preset {
        if !PRESET_NAMES.contains(&name.as_str()) {
            return Err(format!("unknown preset {name:?}; known: {}", PRESET_NAMES.join(", ")).into());
        }
    }
    if common.config.is_none() && common.preset.is_none() {
        return Err("give --config or --preset".into());
    }
    if let Some(o) = common.order {
        config.order = Some(o);
    }
    let spec = config.spec(common.preset.as_deref())?;
    let max_weight = match &common.max_weight {
        Some(t) => t.parse().map_err(|e: qva_core::QvaError| e.to_string())?,
        None => config.max_weight.as_ref().map(|w| w.resolve()).transpose()?.unwrap_or(HalfInt::from_int(2)),
    };
    if max_weight < HalfInt::ZERO {
        return Err("max_weight must be nonnegative".into());
    }
    let mode_radius = common.mode_radius.or(config.mode_radius).unwrap_or(2);
    let box_radius = common.box_radius.or(config.box_radius).unwrap_or(2);
    if mode_radius < 0 || box_radius < 0 {
        return Err("radii must be nonnegative".into());
    }
    Ok(Resolved { config, ctx: Context { spec, max_weight, mode_radius, box_radius } })
}

fn spec_json(ctx: &Context) -> serde_json::Value {
    let spec = &ctx.spec;
    let colors: Vec<u16> = spec.q().colors().collect();
    let q: Vec<Vec<String>> = colors.iter().map(|&i| colors.iter().map(|&j| spec.q().q(i, j).to_string()).collect()).collect();
    let p: Vec<Vec<Vec<String>>> = colors
        .iter()
        .map(|&i| colors.iter().map(|&j| spec.p_coeffs(i, j).iter().map(|c| c.to_string()).collect()).collect())
        .collect();
    json!({
        "l": spec.l(),
        "q": q,
        "p": p,
        "order": spec.order(),
        "max_weight": ctx.max_weight.to_string(),
        "mode_radius": ctx.mode_radius,
        "box_radius": ctx.box_radius,
    })
}

fn emit(report: &serde_json::Value, path: Option<&PathBuf>) -> Result<(), ConfigError> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| ConfigError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(names: &[String], r: &Resolved, report: Option<&PathBuf>, timings: bool) -> Result<Status, ConfigError> {
    let reg = Registry::builtin();
    for n in names {
        if reg.get(n).is_none() {
            return Err(format!("unknown suite {n:?}; known: {}", reg.names().join(", ")).into());
        }
    }
    let results = run_suites(&reg, names, &r.ctx, timings);
    let status = combine(results.iter().map(|s| s.status));
    for s in &results {
        eprintln!("{}: {}", s.name, s.status);
    }
    let out = json!({ "spec": spec_json(&r.ctx), "status": status, "suites": results });
    emit(&out, report.or(r.config.report_path.as_ref()))?;
    Ok(status)
}

fn exit_for(status: Status) -> ExitCode {
    if status == Status::Pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, ConfigError> {
    match cli.command {
        Command::Run { common, suites, report, timings } => {
            let r = resolve(&common)?;
            let names = suites
                .or_else(|| r.config.suites.clone())
                .unwrap_or_else(|| Registry::builtin().names().into_iter().map(String::from).collect());
            Ok(exit_for(run(&names, &r, report.as_ref(), timings)?))
        }
        Command::Ybe { common } => {
            let r = resolve(&common)?;
            Ok(exit_for(run(&["ybe".to_string()], &r, None, false)?))
        }
        Command::Reduce { word, common } => {
            let common = if common.config.is_none() && common.preset.is_none() {
                Common { preset: Some("clifford".into()), ..common }
            } else {
                common
            };
            let r = resolve(&common)?;
            let w = parse_word(&word).map_err(|e| e.to_string())?;
            let q = r.ctx.spec.q();
            if let Some(g) = w.iter().find(|g| g.color as usize > q.l()) {
                return Err(format!("color {} out of range for l = {}", g.color, q.l()).into());
            }
            println!("{}", normal_form_word(q, &w));
            Ok(ExitCode::SUCCESS)
        }
        Command::Character { common } => {
            let r = resolve(&common)?;
            let q = r.ctx.spec.q();
            let ch = character(q, r.ctx.max_weight);
            println!("weight\tdim\tcharacter");
            let mut ok = true;
            for tw in 0..=r.ctx.max_weight.twice() {
                let dim = graded_dim(q, HalfInt::from_twice(tw));
                ok &= dim.to_string() == ch[tw as usize].to_string();
                println!("{}\t{dim}\t{}", HalfInt::from_twice(tw), ch[tw as usize]);
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
