//! Extension semantics: defeated/acceptable operators, verification,
//! enumeration and acceptance problems.

mod operators;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::element_set::ElementSet;
use crate::framework::{ElementId, Framework, FrameworkError};
use crate::lp::translate;
use crate::psm::{self, PsmError, ThreeValuedInterpretation};
use crate::structure::admits_acyclic_mode;

pub(crate) use operators::Evaluator;

/// Default bound on the number of undecided elements the direct search enumerates.
pub const DEFAULT_ENUMERATION_CAP: usize = 22;

/// Below this many undecided elements the direct search stays sequential.
const PARALLEL_THRESHOLD: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsName {
    Grounded,
    Complete,
    Stable,
    Preferred,
}

impl SemanticsName {
    pub const ALL: [SemanticsName; 4] = [
        SemanticsName::Grounded,
        SemanticsName::Complete,
        SemanticsName::Stable,
        SemanticsName::Preferred,
    ];

    pub fn abbreviation(self) -> &'static str {
        match self {
            SemanticsName::Grounded => "gr",
            SemanticsName::Complete => "co",
            SemanticsName::Stable => "st",
            SemanticsName::Preferred => "pr",
        }
    }
}

impl fmt::Display for SemanticsName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

impl FromStr for SemanticsName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gr" | "grounded" => Ok(SemanticsName::Grounded),
            "co" | "complete" => Ok(SemanticsName::Complete),
            "st" | "stable" => Ok(SemanticsName::Stable),
            "pr" | "preferred" => Ok(SemanticsName::Preferred),
            _ => Err(format!("unknown semantics `{s}`")),
        }
    }
}

/// Which family of definitions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DefinitionMode {
    /// Definitions for support-acyclic frameworks, without the self-support clause.
    Acyclic,
    /// Definitions for arbitrary frameworks: self-supported arguments are defeated.
    #[default]
    General,
}

impl fmt::Display for DefinitionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefinitionMode::Acyclic => "acyclic",
            DefinitionMode::General => "general",
        })
    }
}

impl FromStr for DefinitionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "acyclic" => Ok(DefinitionMode::Acyclic),
            "general" => Ok(DefinitionMode::General),
            _ => Err(format!("unknown definition mode `{s}`")),
        }
    }
}

/// An extension together with the elements it defeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtensionPair {
    pub accepted: ElementSet,
    pub defeated: ElementSet,
}

impl ExtensionPair {
    pub fn is_conflict_free(&self) -> bool {
        self.accepted.is_disjoint(&self.defeated)
    }

    /// Whether accepted and defeated elements together cover the universe.
    pub fn is_total(&self, fw: &Framework) -> bool {
        self.accepted.len() + self.defeated.len() == fw.universe_len() && self.is_conflict_free()
    }

    pub(crate) fn from_interpretation(model: &ThreeValuedInterpretation) -> Self {
        ExtensionPair {
            accepted: model.true_atoms().map(|a| ElementId::from_index(a.index())).collect(),
            defeated: model.false_atoms().map(|a| ElementId::from_index(a.index())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("acyclic definitions requested for a framework with support cycles")]
    ModeViolation,
    #[error("`{0}` is not part of the element universe of this framework")]
    OutsideUniverse(String),
    #[error("{undecided} undecided elements exceed the enumeration cap of {cap}")]
    CapExceeded { undecided: usize, cap: usize },
    #[error(transparent)]
    Framework(#[from] FrameworkError),
    #[error(transparent)]
    Psm(#[from] PsmError),
}

/// How complete extensions are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Direct search, falling back to the logic-program route beyond the cap.
    #[default]
    Auto,
    /// Candidate-set search over the direct definitions only.
    Direct,
    /// Partial stable models of the translated program.
    LogicProgram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub cap: usize,
    pub route: Route,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            route: Route::Auto,
        }
    }
}

fn check_mode(fw: &Framework, mode: DefinitionMode) -> Result<(), SemanticsError> {
    if mode == DefinitionMode::Acyclic && !admits_acyclic_mode(fw) {
        return Err(SemanticsError::ModeViolation);
    }
    Ok(())
}

fn check_element(fw: &Framework, id: ElementId) -> Result<(), SemanticsError> {
    if id.index() >= fw.len() {
        return Err(FrameworkError::UnknownElement(format!("#{}", id.index())).into());
    }
    if !fw.in_universe(id) {
        return Err(SemanticsError::OutsideUniverse(fw.name(id).to_string()));
    }
    Ok(())
}

fn check_set(fw: &Framework, set: &ElementSet) -> Result<(), SemanticsError> {
    set.iter().try_for_each(|id| check_element(fw, id))
}

fn pair(s: &[bool], def: &[bool]) -> ExtensionPair {
    ExtensionPair {
        accepted: ElementSet::from_mask(s),
        defeated: ElementSet::from_mask(def),
    }
}

/// Elements defeated by `set`.
pub fn defeated(fw: &Framework, set: &ElementSet, mode: DefinitionMode) -> Result<ElementSet, SemanticsError> {
    check_mode(fw, mode)?;
    check_set(fw, set)?;
    let eval = Evaluator::new(fw, mode);
    Ok(ElementSet::from_mask(&eval.defeated(&set.to_mask(fw.universe_len()))))
}

/// Elements acceptable with respect to `set`.
pub fn acceptable(fw: &Framework, set: &ElementSet, mode: DefinitionMode) -> Result<ElementSet, SemanticsError> {
    check_mode(fw, mode)?;
    check_set(fw, set)?;
    let eval = Evaluator::new(fw, mode);
    let def = eval.defeated(&set.to_mask(fw.universe_len()));
    Ok(ElementSet::from_mask(&eval.acceptable(&def)))
}

/// Sorts extensions by cardinality, then by their lexicographically sorted names.
pub fn canonical_sort(fw: &Framework, extensions: &mut [ExtensionPair]) {
    extensions.sort_by_cached_key(|e| {
        let names: Vec<String> = e.accepted.sorted_names(fw).into_iter().map(String::from).collect();
        (e.accepted.len(), names)
    });
}

/// All complete extensions, as accepted/defeated pairs in canonical order.
pub fn complete_extensions(
    fw: &Framework,
    mode: DefinitionMode,
    options: &EnumerationOptions,
) -> Result<Vec<ExtensionPair>, SemanticsError> {
    check_mode(fw, mode)?;
    let mut out = match options.route {
        Route::LogicProgram => complete_via_program(fw)?,
        Route::Direct | Route::Auto => match complete_direct(fw, mode, options.cap) {
            Err(SemanticsError::CapExceeded { .. }) if options.route == Route::Auto => complete_via_program(fw)?,
            other => other?,
        },
    };
    canonical_sort(fw, &mut out);
    Ok(out)
}

/// Candidate search: every complete extension contains the grounded one and
/// avoids everything it defeats, so only the remaining elements are guessed.
fn complete_direct(fw: &Framework, mode: DefinitionMode, cap: usize) -> Result<Vec<ExtensionPair>, SemanticsError> {
    let eval = Evaluator::new(fw, mode);
    let (base, base_def) = eval.grounded();
    let free: Vec<usize> = (0..eval.universe()).filter(|&i| !base[i] && !base_def[i]).collect();
    if free.len() > cap || free.len() >= 64 {
        return Err(SemanticsError::CapExceeded {
            undecided: free.len(),
            cap,
        });
    }
    let check = |bits: u64| {
        let mut s = base.clone();
        for (k, &i) in free.iter().enumerate() {
            if bits >> k & 1 == 1 {
                s[i] = true;
            }
        }
        eval.complete(&s).map(|def| pair(&s, &def))
    };
    let count = 1u64 << free.len();
    Ok(if free.len() >= PARALLEL_THRESHOLD {
        (0..count).into_par_iter().filter_map(check).collect()
    } else {
        (0..count).filter_map(check).collect()
    })
}

fn complete_via_program(fw: &Framework) -> Result<Vec<ExtensionPair>, SemanticsError> {
    let program = translate(fw);
    let models = psm::enumerate_psm(&program)?;
    Ok(models.iter().map(ExtensionPair::from_interpretation).collect())
}

/// Restricts a complete set to the extensions of `sem`.
pub fn select_extensions(fw: &Framework, complete: &[ExtensionPair], sem: SemanticsName) -> Vec<ExtensionPair> {
    match sem {
        SemanticsName::Complete => complete.to_vec(),
        SemanticsName::Stable => complete.iter().filter(|e| e.is_total(fw)).cloned().collect(),
        SemanticsName::Preferred => complete
            .iter()
            .filter(|e| {
                !complete
                    .iter()
                    .any(|o| o.accepted.len() > e.accepted.len() && e.accepted.is_subset(&o.accepted))
            })
            .cloned()
            .collect(),
        SemanticsName::Grounded => complete
            .iter()
            .filter(|e| {
                !complete
                    .iter()
                    .any(|o| o.accepted.len() < e.accepted.len() && o.accepted.is_subset(&e.accepted))
            })
            .cloned()
            .collect(),
    }
}

pub fn enumerate_extensions(
    fw: &Framework,
    sem: SemanticsName,
    mode: DefinitionMode,
) -> Result<Vec<ExtensionPair>, SemanticsError> {
    enumerate_extensions_with(fw, sem, mode, &EnumerationOptions::default())
}

pub fn enumerate_extensions_with(
    fw: &Framework,
    sem: SemanticsName,
    mode: DefinitionMode,
    options: &EnumerationOptions,
) -> Result<Vec<ExtensionPair>, SemanticsError> {
    let complete = complete_extensions(fw, mode, options)?;
    Ok(select_extensions(fw, &complete, sem))
}

/// The grounded extension, read off the well-founded model of the translated program.
pub fn grounded(fw: &Framework, mode: DefinitionMode) -> Result<ExtensionPair, SemanticsError> {
    check_mode(fw, mode)?;
    let program = translate(fw);
    Ok(ExtensionPair::from_interpretation(&psm::well_founded(&program)))
}

/// The grounded extension computed by iterating the direct acceptability operator from the empty set.
pub fn grounded_direct(fw: &Framework, mode: DefinitionMode) -> Result<ExtensionPair, SemanticsError> {
    check_mode(fw, mode)?;
    let (s, def) = Evaluator::new(fw, mode).grounded();
    Ok(pair(&s, &def))
}

/// The verification problem: is `set` an extension under `sem`?
pub fn is_extension(
    fw: &Framework,
    set: &ElementSet,
    sem: SemanticsName,
    mode: DefinitionMode,
) -> Result<bool, SemanticsError> {
    check_mode(fw, mode)?;
    check_set(fw, set)?;
    let eval = Evaluator::new(fw, mode);
    let mask = set.to_mask(fw.universe_len());
    let Some(def) = eval.complete(&mask) else {
        return Ok(false);
    };
    Ok(match sem {
        SemanticsName::Complete => true,
        SemanticsName::Stable => def.iter().zip(&mask).all(|(&d, &a)| d || a),
        SemanticsName::Grounded => grounded(fw, mode)?.accepted == *set,
        SemanticsName::Preferred => {
            let complete = complete_extensions(fw, mode, &EnumerationOptions::default())?;
            !complete
                .iter()
                .any(|o| o.accepted.len() > set.len() && set.is_subset(&o.accepted))
        }
    })
}

fn extensions_for(fw: &Framework, sem: SemanticsName, mode: DefinitionMode) -> Result<Vec<ExtensionPair>, SemanticsError> {
    if sem == SemanticsName::Grounded {
        Ok(vec![grounded(fw, mode)?])
    } else {
        enumerate_extensions(fw, sem, mode)
    }
}

/// Is `element` in at least one extension?
pub fn credulous(
    fw: &Framework,
    element: ElementId,
    sem: SemanticsName,
    mode: DefinitionMode,
) -> Result<bool, SemanticsError> {
    check_element(fw, element)?;
    Ok(extensions_for(fw, sem, mode)?.iter().any(|e| e.accepted.contains(element)))
}

/// Is `element` in every extension? Vacuously true when there are none.
pub fn skeptical(
    fw: &Framework,
    element: ElementId,
    sem: SemanticsName,
    mode: DefinitionMode,
) -> Result<bool, SemanticsError> {
    check_element(fw, element)?;
    Ok(extensions_for(fw, sem, mode)?.iter().all(|e| e.accepted.contains(element)))
}

#[cfg(test)]
mod tests;
