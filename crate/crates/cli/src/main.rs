use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use recbaf::harness::{random_check, render_report, render_text, HarnessError};
use recbaf::psm::{enumerate_psm, select_models, well_founded};
use recbaf::{
    cross_check, parse_framework, parse_program, run_task, translate, DefinitionMode, ElementSet, ExtensionPair, Flavor,
    Framework, ModelClass, PsmError, Query, SemanticsError, SemanticsName, Task, TaskOutput, TaskSpec,
};

const NO: u8 = 1;
const USAGE: u8 = 2;
const PARSE: u8 = 3;
const CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "recbaf", version, about = "Extensions of bipolar and recursive argumentation frameworks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an enumeration, verification or acceptance task.
    Solve(SolveArgs),
    /// Print the logic program of a framework.
    Translate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Compare complete extensions with the partial stable models of the translation.
    Check(CheckArgs),
    /// Partial stable models of a logic program file.
    Models {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "ps", value_parser = parse_with::<ModelClass>)]
        class: ModelClass,
    },
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_parser = parse_with::<SolveTask>)]
    task: SolveTask,
    #[arg(long, value_parser = parse_with::<SemanticsName>)]
    sem: SemanticsName,
    #[arg(long, default_value = "general", value_parser = parse_with::<DefinitionMode>)]
    mode: DefinitionMode,
    /// Query element for DC and DS.
    #[arg(long, conflicts_with = "set")]
    arg: Option<String>,
    /// Comma-separated query set for VE; empty for the empty set.
    #[arg(long)]
    set: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 1 when a decision task answers NO.
    #[arg(long)]
    strict_exit: bool,
}

#[derive(clap::Args)]
struct CheckArgs {
    #[arg(long, required_unless_present = "random")]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random frameworks to check instead of a file.
    #[arg(long, conflicts_with = "file")]
    random: Option<usize>,
    #[arg(long, default_value_t = 8)]
    max_elems: usize,
    /// Restrict random frameworks to these flavors.
    #[arg(long, value_delimiter = ',', value_parser = parse_with::<Flavor>)]
    flavor: Vec<Flavor>,
}

#[derive(Clone, Copy)]
struct SolveTask(Task);

impl std::str::FromStr for SolveTask {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.parse::<Task>()? {
            t @ (Task::Ee | Task::Se | Task::Dc | Task::Ds | Task::Ve) => Ok(SolveTask(t)),
            t => Err(format!("task {t} has its own subcommand")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_with<T: std::str::FromStr<Err = String>>(s: &str) -> Result<T, String> {
    s.parse()
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<SemanticsError> for Failure {
    fn from(err: SemanticsError) -> Self {
        let code = match err {
            SemanticsError::CapExceeded { .. } | SemanticsError::Psm(PsmError::CapExceeded { .. }) => CAP,
            _ => USAGE,
        };
        Failure::new(code, err.to_string())
    }
}

impl From<PsmError> for Failure {
    fn from(err: PsmError) -> Self {
        let code = if matches!(err, PsmError::CapExceeded { .. }) { CAP } else { USAGE };
        Failure::new(code, err.to_string())
    }
}

impl From<HarnessError> for Failure {
    fn from(err: HarnessError) -> Self {
        match err {
            HarnessError::Semantics(e) => e.into(),
            other => Failure::new(USAGE, other.to_string()),
        }
    }
}

/// Text to print and the exit status that goes with it.
struct Report {
    text: String,
    code: u8,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Framework, Failure> {
    let text = read(path)?;
    parse_framework(&text).map_err(|e| Failure::new(PARSE, format!("{}:{e}", path.display())))
}

fn solve(args: &SolveArgs) -> Result<Report, Failure> {
    let fw = load(&args.file)?;
    let query = match (&args.arg, &args.set) {
        (Some(name), _) => Query::Element(
            fw.id(name)
                .ok_or_else(|| Failure::new(USAGE, format!("no element named `{name}`")))?,
        ),
        (None, Some(list)) => {
            let names = list.split(',').map(str::trim).filter(|s| !s.is_empty());
            Query::Set(ElementSet::from_names(&fw, names).map_err(|e| Failure::new(USAGE, e.to_string()))?)
        }
        (None, None) => Query::None,
    };
    let spec = TaskSpec::new(args.task.0, args.sem).with_mode(args.mode).with_query(query);
    let output = run_task(&fw, &spec)?;
    let code = match output {
        TaskOutput::Decision(false) if args.strict_exit => NO,
        _ => 0,
    };
    let text = match args.format {
        Format::Text => render_text(&fw, &output),
        Format::Json => format!("{:#}\n", to_json(&fw, &spec, &output)),
    };
    Ok(Report { text, code })
}

fn to_json(fw: &Framework, spec: &TaskSpec, output: &TaskOutput) -> Value {
    let names = |s: &ElementSet| s.sorted_names(fw);
    let pair = |e: &ExtensionPair| json!({ "accepted": names(&e.accepted), "defeated": names(&e.defeated) });
    let mut doc = json!({
        "task": spec.task.to_string(),
        "semantics": spec.semantics.abbreviation(),
        "mode": spec.mode.to_string(),
    });
    match output {
        TaskOutput::Extensions(exts) => doc["extensions"] = exts.iter().map(pair).collect(),
        TaskOutput::Decision(yes) => doc["answer"] = json!(if *yes { "YES" } else { "NO" }),
        TaskOutput::Program(_) | TaskOutput::Check(_) => unreachable!("not produced by solve"),
    }
    doc
}

fn check(args: &CheckArgs) -> Result<Report, Failure> {
    if let Some(count) = args.random {
        let flavors = if args.flavor.is_empty() { Flavor::ALL.to_vec() } else { args.flavor.clone() };
        let summary = random_check(args.seed, count, args.max_elems, &flavors)?;
        let mut text = format!(
            "{}: {} frameworks, {} failures\n",
            if summary.passed() { "PASS" } else { "FAIL" },
            summary.runs,
            summary.failures.len()
        );
        for failure in &summary.failures {
            text.push_str(&render_report(&failure.framework, &failure.report));
        }
        let code = if summary.passed() { 0 } else { NO };
        return Ok(Report { text, code });
    }
    let path = args.file.as_deref().expect("clap requires --file without --random");
    let fw = load(path)?;
    let report = cross_check(&fw)?;
    let code = if report.passed() { 0 } else { NO };
    Ok(Report { text: render_report(&fw, &report), code })
}

fn models(path: &Path, class: ModelClass) -> Result<Report, Failure> {
    let text = read(path)?;
    let program = parse_program(&text).map_err(|e| Failure::new(PARSE, format!("{}:{e}", path.display())))?;
    let found = if class == ModelClass::Wf {
        vec![well_founded(&program)]
    } else {
        select_models(&enumerate_psm(&program)?, class)?
    };
    let text = found.iter().map(|m| format!("{}\n", m.display(&program))).collect();
    Ok(Report { text, code: 0 })
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Solve(args) => solve(&args),
        Command::Translate { file } => Ok(Report {
            text: translate(&load(&file)?).to_string(),
            code: 0,
        }),
        Command::Check(args) => check(&args),
        Command::Models { file, class } => models(&file, class),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.text.as_bytes()).and_then(|_| out.flush());
            ExitCode::from(report.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_task_rejects_subcommand_tasks() {
        assert!(matches!("ee".parse::<SolveTask>(), Ok(SolveTask(Task::Ee))));
        assert!("translate".parse::<SolveTask>().is_err());
        assert!("check".parse::<SolveTask>().is_err());
    }

    #[test]
    fn cap_errors_map_to_exit_4() {
        let err = SemanticsError::Psm(PsmError::CapExceeded { undefined: 40, cap: 32 });
        assert_eq!(Failure::from(err).code, CAP);
        assert_eq!(Failure::from(SemanticsError::ModeViolation).code, USAGE);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
