use std::collections::BTreeSet;
use std::fmt;

use crate::framework::{ElementId, Framework, FrameworkError};

/// A set of framework elements: a candidate set, an extension, or a defeated set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(BTreeSet<ElementId>);

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from element names.
    pub fn from_names<'n, I>(fw: &Framework, names: I) -> Result<Self, FrameworkError>
    where
        I: IntoIterator<Item = &'n str>,
    {
        fw.ids(names).map(ElementSet)
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        self.0.insert(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.union(&other.0).copied().collect())
    }

    /// Names in declaration order.
    pub fn names<'f>(&self, fw: &'f Framework) -> Vec<&'f str> {
        self.iter().map(|id| fw.name(id)).collect()
    }

    /// Names sorted lexicographically; the canonical ordering key of a set.
    pub fn sorted_names<'f>(&self, fw: &'f Framework) -> Vec<&'f str> {
        let mut names = self.names(fw);
        names.sort_unstable();
        names
    }

    pub fn display<'a>(&'a self, fw: &'a Framework) -> DisplaySet<'a> {
        DisplaySet { set: self, fw }
    }

    pub(crate) fn to_mask(&self, len: usize) -> Vec<bool> {
        let mut mask = vec![false; len];
        for id in self.iter() {
            mask[id.index()] = true;
        }
        mask
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| ElementId::from_index(i))
            .collect()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl From<BTreeSet<ElementId>> for ElementSet {
    fn from(set: BTreeSet<ElementId>) -> Self {
        ElementSet(set)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// `{a, b, α1}` rendering of a set against its framework.
pub struct DisplaySet<'a> {
    set: &'a ElementSet,
    fw: &'a Framework,
}

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, name) in self.set.names(self.fw).into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(name)?;
        }
        f.write_str("}")
    }
}
