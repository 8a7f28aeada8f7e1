use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use smashcheck_core::catalog::{self, Payload, ENTRIES};
use smashcheck_core::format::{
    action_file, algebra_file, hopf_file, load_bimodule, load_hopf, parse_field_flag, parse_json, read_file,
    to_json, BuildOutput, Source,
};
use smashcheck_core::pipeline::{
    build, summary, verify_bimodule, verify_build_output, verify_hopf, BuildKind, VerifyKind,
};
use smashcheck_core::{Error, Field, VerificationReport};

#[derive(Parser)]
#[command(name = "smashcheck", version, about = "Exact verification of partial Hopf actions and their constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field of coefficients: q or fp:<p>. Files carry their own field; a
    /// given flag must agree with it.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Downgrade failed gates to warnings.
    #[arg(long, global = true)]
    force: bool,
    /// Write the verification report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Print nothing; only the exit code matters.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an input: hopf, partial-action, symmetry, envelope, morita,
    /// partial-rep, duality or build-output.
    Verify {
        kind: String,
        /// A JSON file, or catalog:<name> for a built-in entry.
        input: String,
    },
    /// Build underline-smash, twisted-smash, envelope, morita or duality-maps.
    Build {
        kind: String,
        input: String,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a catalog entry as JSON files, or `list` the entries.
    Catalog {
        name: String,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

enum Failure {
    Input(Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownEntry { .. } | Error::Field(_) | Error::Dimension(_) => {
                Failure::Input(e)
            }
            other => Failure::Runtime(other),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            if !quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            if !quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let field = cli.field.as_deref().map(parse_field_flag).transpose().map_err(input_error)?;
    match &cli.command {
        Command::Verify { kind, input } => {
            let kind: VerifyKind = kind.parse().map_err(input_error)?;
            let report = verify(kind, input, field, cli.force)?;
            emit_report(cli, &report)?;
            Ok(report.passed())
        }
        Command::Build { kind, input, out } => {
            let kind: BuildKind = kind.parse().map_err(input_error)?;
            let d = load_input(input, field)?;
            let built = build(kind, &d, input, cli.force)?;
            if let Some(path) = &cli.report {
                write(path, &built.report.to_json())?;
            }
            let Some(output) = built.output else {
                if !cli.quiet {
                    for w in &built.report.warnings {
                        eprintln!("gate: {w}");
                    }
                    for c in built.report.failures() {
                        eprintln!("failed: {} ({})", c.name, c.paper_ref);
                    }
                }
                return Ok(false);
            };
            let json = to_json(&output);
            match out {
                Some(path) => {
                    write(path, &json)?;
                    if !cli.quiet {
                        println!("{}", summary(&output));
                    }
                }
                None => {
                    if !cli.quiet {
                        println!("{json}");
                        eprintln!("{}", summary(&output));
                    }
                }
            }
            if !cli.quiet {
                for w in &built.report.warnings {
                    eprintln!("warning: {w}");
                }
                for c in built.report.failures() {
                    eprintln!("failed: {} ({})", c.name, c.paper_ref);
                }
            }
            Ok(built.report.passed())
        }
        Command::Catalog { name, out } => catalog_cmd(name, out, field.unwrap_or(Field::Rational), cli.quiet),
    }
}

fn input_error(e: Error) -> Failure {
    Failure::Input(e)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| Failure::Runtime(e.into()))
}

fn emit_report(cli: &Cli, report: &VerificationReport) -> Result<(), Failure> {
    match &cli.report {
        Some(path) => write(path, &report.to_json()),
        None => {
            if !cli.quiet {
                println!("{}", report.to_json());
            }
            Ok(())
        }
    }
}

fn catalog_name(input: &str) -> Option<&str> {
    input.strip_prefix("catalog:")
}

fn load_input(input: &str, field: Option<Field>) -> Result<smashcheck_core::actions::BimoduleData, Failure> {
    match catalog_name(input) {
        Some(name) => Ok(catalog::bimodule(field.unwrap_or(Field::Rational), name)?),
        None => Ok(load_bimodule(Path::new(input), field)?),
    }
}

fn verify(kind: VerifyKind, input: &str, field: Option<Field>, force: bool) -> Result<VerificationReport, Failure> {
    match kind {
        VerifyKind::Hopf => {
            let h = match catalog_name(input) {
                Some(name) => match catalog::lookup(field.unwrap_or(Field::Rational), name)?.payload {
                    Payload::Hopf(h) => h,
                    Payload::Bimodule { data, .. } => data.hopf,
                    Payload::SkewPair(s) => s.h,
                },
                None => load_hopf(Path::new(input), field)?,
            };
            Ok(verify_hopf(&h, input))
        }
        VerifyKind::BuildOutput => {
            let text = read_file(Path::new(input))?;
            let out: BuildOutput = parse_json(&text, input)?;
            Ok(verify_build_output(&out, input)?)
        }
        _ => {
            let d = load_input(input, field)?;
            Ok(verify_bimodule(kind, &d, input, force)?)
        }
    }
}

/// File stem for the Hopf algebra acting in a bimodule entry.
fn hopf_stem(entry: &str) -> &'static str {
    match entry {
        "kx-in-h4" => "h4star",
        "central-idempotent-kz2" => "kz2star",
        "trivial-h4-on-kx" => "h4",
        _ => "kz2",
    }
}

fn catalog_cmd(name: &str, out: &Path, field: Field, quiet: bool) -> Outcome {
    if name == "list" {
        if !quiet {
            for (n, provenance) in ENTRIES {
                println!("{n}\t{provenance}");
            }
        }
        return Ok(true);
    }
    let entry = catalog::lookup(field, name)?;
    std::fs::create_dir_all(out).map_err(|e| Failure::Runtime(e.into()))?;
    let mut written = Vec::new();
    match entry.payload {
        Payload::Hopf(h) => {
            written.push((format!("{name}.json"), to_json(&hopf_file(&h))));
        }
        Payload::SkewPair(s) => {
            written.push((format!("{name}.json"), to_json(&hopf_file(&s.h))));
        }
        Payload::Bimodule { data, .. } => {
            let stem = hopf_stem(name);
            let mut action = action_file(&data);
            action.hopf = Source::Path(format!("{stem}.json"));
            action.algebra = Source::Path("a.json".into());
            written.push((format!("{stem}.json"), to_json(&hopf_file(&data.hopf))));
            written.push(("a.json".into(), to_json(&algebra_file(&data.algebra))));
            written.push(("action.json".into(), to_json(&action)));
        }
    }
    for (file, text) in &written {
        write(&out.join(file), text)?;
        if !quiet {
            println!("{}", out.join(file).display());
        }
    }
    Ok(true)
}
