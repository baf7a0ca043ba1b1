//! Bipolar and recursive-bipolar argumentation frameworks: direct fixpoint
//! semantics, translation to logic programs, partial stable models and a
//! harness cross-checking the two routes.

pub mod element_set;
pub mod format;
pub mod framework;
pub mod generate;
pub mod harness;
mod lexer;
pub mod lp;
pub mod psm;
pub mod semantics;
pub mod structure;

#[cfg(test)]
mod fixtures;

pub use element_set::ElementSet;
pub use framework::{ElementId, ElementKind, Flavor, Framework, FrameworkError, Interaction, RawFramework};
pub use format::{parse_framework, print_framework, ParseError};
pub use harness::{cross_check, run_task, CrossCheckReport, Query, Task, TaskOutput, TaskSpec};
pub use lexer::Position;
pub use lp::{normalize, parse_program, translate, LogicProgram};
pub use psm::{ModelClass, PsmError, ThreeValuedInterpretation, Truth};
pub use semantics::{DefinitionMode, EnumerationOptions, ExtensionPair, Route, SemanticsError, SemanticsName};
