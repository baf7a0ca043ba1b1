//! Task runner and the direct-versus-program cross-check.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::element_set::ElementSet;
use crate::format::print_framework;
use crate::framework::{ElementId, Flavor, Framework};
use crate::generate::random_framework;
use crate::lp::translate;
use crate::semantics::{
    self, complete_extensions, DefinitionMode, EnumerationOptions, ExtensionPair, Route, SemanticsError,
    SemanticsName,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task {
    /// Enumerate all extensions.
    Ee,
    /// Some extension.
    Se,
    /// Credulous acceptance.
    Dc,
    /// Skeptical acceptance.
    Ds,
    /// Verification of a set.
    Ve,
    Translate,
    Check,
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Ee => "EE",
            Task::Se => "SE",
            Task::Dc => "DC",
            Task::Ds => "DS",
            Task::Ve => "VE",
            Task::Translate => "TRANSLATE",
            Task::Check => "CHECK",
        })
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "EE" => Ok(Task::Ee),
            "SE" => Ok(Task::Se),
            "DC" => Ok(Task::Dc),
            "DS" => Ok(Task::Ds),
            "VE" => Ok(Task::Ve),
            "TRANSLATE" => Ok(Task::Translate),
            "CHECK" => Ok(Task::Check),
            _ => Err(format!("unknown task `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Query {
    #[default]
    None,
    Element(ElementId),
    Set(ElementSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskSpec {
    pub task: Task,
    pub semantics: SemanticsName,
    pub mode: DefinitionMode,
    pub query: Query,
}

impl TaskSpec {
    pub fn new(task: Task, semantics: SemanticsName) -> Self {
        TaskSpec {
            task,
            semantics,
            mode: DefinitionMode::General,
            query: Query::None,
        }
    }

    pub fn with_mode(mut self, mode: DefinitionMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_query(mut self, query: Query) -> Self {
        self.query = query;
        self
    }

    /// DC/DS take an element, VE a set, every other task nothing.
    pub fn validate(&self) -> Result<(), HarnessError> {
        let ok = matches!(
            (self.task, &self.query),
            (Task::Dc | Task::Ds, Query::Element(_))
                | (Task::Ve, Query::Set(_))
                | (Task::Ee | Task::Se | Task::Translate | Task::Check, Query::None)
        );
        if ok {
            return Ok(());
        }
        let need = match self.task {
            Task::Dc | Task::Ds => "requires a query element",
            Task::Ve => "requires a query set",
            _ => "takes no query",
        };
        Err(HarnessError::Query(format!("task {} {need}", self.task)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Query(String),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TaskOutput {
    /// EE: all extensions; SE: at most one.
    Extensions(Vec<ExtensionPair>),
    Decision(bool),
    Program(String),
    Check(CrossCheckReport),
}

pub fn run_task(fw: &Framework, spec: &TaskSpec) -> Result<TaskOutput, HarnessError> {
    spec.validate()?;
    let (sem, mode) = (spec.semantics, spec.mode);
    Ok(match (&spec.task, &spec.query) {
        (Task::Ee, _) => TaskOutput::Extensions(extensions(fw, sem, mode)?),
        (Task::Se, _) => {
            let exts = extensions(fw, sem, mode)?;
            let least = exts.into_iter().min_by_key(|e| sorted(fw, &e.accepted));
            TaskOutput::Extensions(least.into_iter().collect())
        }
        (Task::Dc, Query::Element(x)) => TaskOutput::Decision(semantics::credulous(fw, *x, sem, mode)?),
        (Task::Ds, Query::Element(x)) => TaskOutput::Decision(semantics::skeptical(fw, *x, sem, mode)?),
        (Task::Ve, Query::Set(s)) => TaskOutput::Decision(semantics::is_extension(fw, s, sem, mode)?),
        (Task::Translate, _) => TaskOutput::Program(translate(fw).to_string()),
        (Task::Check, _) => TaskOutput::Check(cross_check(fw)?),
        _ => unreachable!("validated above"),
    })
}

fn extensions(fw: &Framework, sem: SemanticsName, mode: DefinitionMode) -> Result<Vec<ExtensionPair>, SemanticsError> {
    if sem == SemanticsName::Grounded {
        Ok(vec![semantics::grounded(fw, mode)?])
    } else {
        semantics::enumerate_extensions(fw, sem, mode)
    }
}

fn sorted(fw: &Framework, set: &ElementSet) -> Vec<String> {
    set.sorted_names(fw).into_iter().map(String::from).collect()
}

/// Complete extensions computed directly and through partial stable models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub direct: Vec<ExtensionPair>,
    pub program: Vec<ExtensionPair>,
    /// Pairs found only by the direct search.
    pub only_direct: Vec<ExtensionPair>,
    /// Pairs found only among the partial stable models.
    pub only_program: Vec<ExtensionPair>,
    /// Whether the well-founded model matches the direct grounded extension.
    pub grounded_agrees: bool,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.only_direct.is_empty() && self.only_program.is_empty() && self.grounded_agrees
    }
}

/// Compares the direct complete extensions with the partial stable models of
/// the translated program, both under the general definitions.
pub fn cross_check(fw: &Framework) -> Result<CrossCheckReport, SemanticsError> {
    let mode = DefinitionMode::General;
    let direct = complete_extensions(fw, mode, &EnumerationOptions { route: Route::Direct, ..Default::default() })?;
    let program = complete_extensions(
        fw,
        mode,
        &EnumerationOptions {
            route: Route::LogicProgram,
            ..Default::default()
        },
    )?;
    let only_direct = direct.iter().filter(|e| !program.contains(e)).cloned().collect();
    let only_program = program.iter().filter(|e| !direct.contains(e)).cloned().collect();
    let grounded_agrees = semantics::grounded(fw, mode)? == semantics::grounded_direct(fw, mode)?;
    Ok(CrossCheckReport {
        direct,
        program,
        only_direct,
        only_program,
        grounded_agrees,
    })
}

/// A failed cross-check on a generated framework.
#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub framework: Framework,
    pub report: CrossCheckReport,
}

#[derive(Debug, Clone, Default)]
pub struct RandomCheckSummary {
    pub runs: usize,
    pub failures: Vec<CheckFailure>,
}

impl RandomCheckSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cross-checks `count` seeded random frameworks, cycling through `flavors`.
pub fn random_check(
    seed: u64,
    count: usize,
    max_elems: usize,
    flavors: &[Flavor],
) -> Result<RandomCheckSummary, SemanticsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = RandomCheckSummary::default();
    for i in 0..count {
        let flavor = flavors[i % flavors.len()];
        let fw = random_framework(&mut rng, flavor, max_elems);
        let report = cross_check(&fw)?;
        summary.runs += 1;
        if !report.passed() {
            summary.failures.push(CheckFailure { framework: fw, report });
        }
    }
    Ok(summary)
}

/// Plain-text rendering of a task result.
pub fn render_text(fw: &Framework, output: &TaskOutput) -> String {
    match output {
        TaskOutput::Extensions(exts) => exts.iter().map(|e| format!("{}\n", e.accepted.display(fw))).collect(),
        TaskOutput::Decision(yes) => if *yes { "YES\n" } else { "NO\n" }.to_string(),
        TaskOutput::Program(text) => text.clone(),
        TaskOutput::Check(report) => render_report(fw, report),
    }
}

pub fn render_report(fw: &Framework, report: &CrossCheckReport) -> String {
    let mut out = format!(
        "{}: {} direct, {} program{}\n",
        if report.passed() { "PASS" } else { "FAIL" },
        report.direct.len(),
        report.program.len(),
        if report.grounded_agrees { "" } else { ", grounded mismatch" }
    );
    let pair = |e: &ExtensionPair| format!("<{}, {}>", e.accepted.display(fw), e.defeated.display(fw));
    for e in &report.only_direct {
        out.push_str(&format!("  only direct: {}\n", pair(e)));
    }
    for e in &report.only_program {
        out.push_str(&format!("  only program: {}\n", pair(e)));
    }
    if !report.passed() {
        out.push_str(&print_framework(fw));
    }
    out
}
