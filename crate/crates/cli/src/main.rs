use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use legfol::verify::{list_checks, run_suite, Config, Format, Report, Suite};

#[derive(Parser)]
#[command(name = "legfol", version, about = "Verify curvature and heat-trace identities of Legendre foliations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected suites and emit a report.
    Verify(RunArgs),
    /// Re-render a stored JSON report.
    Report {
        input: PathBuf,
        #[arg(long, value_parser = parse_format, default_value = "markdown")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate check ids with their citations.
    List(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Suite to run; repeatable. Defaults to all suites.
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value configuration file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: legfol::verify::ConfigError| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: legfol::verify::ConfigError| e.to_string())
}

impl RunArgs {
    fn resolve(&self) -> Result<Config> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Config::parse(&text).with_context(|| format!("in {}", path.display()))?
            }
            None => Config::default(),
        };
        if !self.suites.is_empty() {
            cfg.suites = self.suites.clone();
        }
        if let Some(v) = self.n_max {
            cfg.n_max = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.tol {
            cfg.tol = v;
        }
        if let Some(v) = self.kmax {
            cfg.kmax = v;
        }
        if let Some(v) = self.format {
            cfg.format = v;
        }
        if let Some(v) = &self.out {
            cfg.out = Some(v.clone());
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify(args) => {
            let cfg = args.resolve()?;
            let report = run_suite(&cfg);
            emit(&render(&report, cfg.format), cfg.out.as_deref())?;
            let s = &report.summary;
            eprintln!("{} passed, {} failed, {} reported", s.pass, s.fail, s.reported);
            Ok(report.exit_code() as u8)
        }
        Command::Report { input, format, out } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let report = Report::from_json(&text).context("parsing stored report")?;
            emit(&render(&report, format), out.as_deref())?;
            Ok(report.exit_code() as u8)
        }
        Command::List(args) => {
            let cfg = args.resolve()?;
            let lines: Vec<String> = list_checks(&cfg).into_iter().map(|s| format!("{}\t{}", s.id, s.citation)).collect();
            emit(&lines.join("\n"), cfg.out.as_deref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
