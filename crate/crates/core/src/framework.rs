//! Framework data model shared by every flavor.
//!
//! A [`Framework`] stores arguments, attack names and support names in one
//! dense index space: arguments first, then attacks, then supports, each in
//! declaration order. Under the AF and BAF flavors only arguments take part
//! in extensions, so the element universe is the argument prefix; under the
//! recursive flavors it is the whole index space.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The seven framework flavors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Af,
    Afn,
    Afd,
    Rafn,
    Asaf,
    Rafd,
    Afrad,
}

/// How supports propagate acceptance and defeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportReading {
    /// The target needs its supporter.
    Necessary,
    /// The supporter needs its target.
    Deductive,
}

/// How an attack's own status enters the picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackReading {
    /// Attacks are plain relations (AF, AFN, AFD).
    Plain,
    /// RAF-style: an attack is effective when both it and its source are in the set.
    Raf,
    /// AFRA-style: an attack is effective when it is in the set and it is
    /// defeated along with its source.
    Afra,
}

impl Flavor {
    pub const ALL: [Flavor; 7] = [
        Flavor::Af,
        Flavor::Afn,
        Flavor::Afd,
        Flavor::Rafn,
        Flavor::Asaf,
        Flavor::Rafd,
        Flavor::Afrad,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Flavor::Af => "af",
            Flavor::Afn => "afn",
            Flavor::Afd => "afd",
            Flavor::Rafn => "rafn",
            Flavor::Asaf => "asaf",
            Flavor::Rafd => "rafd",
            Flavor::Afrad => "afrad",
        }
    }

    /// Rec-BAF flavors: attacks and supports are elements and may be targets.
    pub fn is_recursive(self) -> bool {
        matches!(
            self,
            Flavor::Rafn | Flavor::Asaf | Flavor::Rafd | Flavor::Afrad
        )
    }

    pub fn is_bipolar(self) -> bool {
        matches!(self, Flavor::Afn | Flavor::Afd)
    }

    pub fn allows_supports(self) -> bool {
        self != Flavor::Af
    }

    pub fn support_reading(self) -> SupportReading {
        match self {
            Flavor::Afd | Flavor::Rafd | Flavor::Afrad => SupportReading::Deductive,
            _ => SupportReading::Necessary,
        }
    }

    pub fn attack_reading(self) -> AttackReading {
        match self {
            Flavor::Af | Flavor::Afn | Flavor::Afd => AttackReading::Plain,
            Flavor::Rafn | Flavor::Rafd => AttackReading::Raf,
            Flavor::Asaf | Flavor::Afrad => AttackReading::Afra,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.keyword().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown flavor `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Argument,
    Attack,
    Support,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementKind::Argument => "argument",
            ElementKind::Attack => "attack",
            ElementKind::Support => "support",
        })
    }
}

/// Index of an element inside one [`Framework`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub(crate) u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        ElementId(i as u32)
    }
}

/// A named attack or support, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interaction {
    pub name: String,
    pub source: String,
    pub target: String,
}

impl Interaction {
    pub fn new(name: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        Interaction {
            name: name.into(),
            source: source.into(),
            target: target.into(),
        }
    }
}

/// Unvalidated framework declaration, as read from a file or assembled by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFramework {
    pub flavor: Flavor,
    pub arguments: Vec<String>,
    pub attacks: Vec<Interaction>,
    pub supports: Vec<Interaction>,
}

impl RawFramework {
    pub fn new(flavor: Flavor) -> Self {
        RawFramework {
            flavor,
            arguments: Vec::new(),
            attacks: Vec::new(),
            supports: Vec::new(),
        }
    }

    pub fn argument(mut self, name: impl Into<String>) -> Self {
        self.arguments.push(name.into());
        self
    }

    pub fn arguments<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.arguments.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn attack(mut self, name: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.attacks.push(Interaction::new(name, source, target));
        self
    }

    pub fn support(mut self, name: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.supports.push(Interaction::new(name, source, target));
        self
    }

    pub fn build(self) -> Result<Framework, FrameworkError> {
        Framework::new(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("`{interaction}` refers to undeclared element `{endpoint}`")]
    DanglingEndpoint { interaction: String, endpoint: String },
    #[error("name `{0}` is declared more than once")]
    DuplicateName(String),
    #[error("flavor violation: {0}")]
    FlavorViolation(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("operation requires a support-acyclic framework")]
    CyclicSupports,
}

/// Checks every structural invariant of a declaration.
pub fn validate(raw: &RawFramework) -> Result<(), FrameworkError> {
    let mut kinds: HashMap<&str, ElementKind> = HashMap::new();
    let declared = raw
        .arguments
        .iter()
        .map(|a| (a.as_str(), ElementKind::Argument))
        .chain(raw.attacks.iter().map(|i| (i.name.as_str(), ElementKind::Attack)))
        .chain(raw.supports.iter().map(|i| (i.name.as_str(), ElementKind::Support)));
    for (name, kind) in declared {
        if kinds.insert(name, kind).is_some() {
            return Err(FrameworkError::DuplicateName(name.to_string()));
        }
    }
    if raw.flavor == Flavor::Af {
        if let Some(sup) = raw.supports.first() {
            return Err(FrameworkError::FlavorViolation(format!(
                "support `{}` declared in an AF",
                sup.name
            )));
        }
    }
    let interactions = raw
        .attacks
        .iter()
        .map(|i| (i, ElementKind::Attack))
        .chain(raw.supports.iter().map(|i| (i, ElementKind::Support)));
    for (inter, kind) in interactions {
        for endpoint in [&inter.source, &inter.target] {
            if !kinds.contains_key(endpoint.as_str()) {
                return Err(FrameworkError::DanglingEndpoint {
                    interaction: inter.name.clone(),
                    endpoint: endpoint.clone(),
                });
            }
        }
        if kinds[inter.source.as_str()] != ElementKind::Argument {
            return Err(FrameworkError::FlavorViolation(format!(
                "source `{}` of {kind} `{}` is not an argument",
                inter.source, inter.name
            )));
        }
        if !raw.flavor.is_recursive() && kinds[inter.target.as_str()] != ElementKind::Argument {
            return Err(FrameworkError::FlavorViolation(format!(
                "{kind} `{}` targets `{}`, which is not an argument, in a {} framework",
                inter.name, inter.target, raw.flavor
            )));
        }
    }
    Ok(())
}

/// A validated, immutable framework.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Framework {
    flavor: Flavor,
    names: Vec<String>,
    kinds: Vec<ElementKind>,
    index: HashMap<String, ElementId>,
    endpoints: Vec<Option<(ElementId, ElementId)>>,
    num_arguments: usize,
    num_attacks: usize,
    attacks_on: Vec<Vec<ElementId>>,
    attacks_from: Vec<Vec<ElementId>>,
    supports_on: Vec<Vec<ElementId>>,
    supports_from: Vec<Vec<ElementId>>,
}

impl Framework {
    pub fn new(raw: RawFramework) -> Result<Self, FrameworkError> {
        validate(&raw)?;
        let RawFramework {
            flavor,
            arguments,
            attacks,
            supports,
        } = raw;
        let num_arguments = arguments.len();
        let num_attacks = attacks.len();
        let total = num_arguments + num_attacks + supports.len();

        let mut names = Vec::with_capacity(total);
        let mut kinds = Vec::with_capacity(total);
        names.extend(arguments);
        kinds.resize(num_arguments, ElementKind::Argument);
        let mut pending = Vec::with_capacity(num_attacks + supports.len());
        for (inter, kind) in attacks
            .into_iter()
            .map(|i| (i, ElementKind::Attack))
            .chain(supports.into_iter().map(|i| (i, ElementKind::Support)))
        {
            names.push(inter.name);
            kinds.push(kind);
            pending.push((inter.source, inter.target));
        }
        let index: HashMap<String, ElementId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), ElementId::from_index(i)))
            .collect();

        let mut endpoints = vec![None; num_arguments];
        let mut attacks_on = vec![Vec::new(); total];
        let mut attacks_from = vec![Vec::new(); total];
        let mut supports_on = vec![Vec::new(); total];
        let mut supports_from = vec![Vec::new(); total];
        for (offset, (source, target)) in pending.into_iter().enumerate() {
            let id = ElementId::from_index(num_arguments + offset);
            let s = index[&source];
            let t = index[&target];
            endpoints.push(Some((s, t)));
            if kinds[id.index()] == ElementKind::Attack {
                attacks_on[t.index()].push(id);
                attacks_from[s.index()].push(id);
            } else {
                supports_on[t.index()].push(id);
                supports_from[s.index()].push(id);
            }
        }

        Ok(Framework {
            flavor,
            names,
            kinds,
            index,
            endpoints,
            num_arguments,
            num_attacks,
            attacks_on,
            attacks_from,
            supports_on,
            supports_from,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of declared elements (arguments, attacks and supports).
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Number of elements that can appear in an extension: the arguments for
    /// AF/BAF flavors, every element for Rec-BAF flavors.
    pub fn universe_len(&self) -> usize {
        if self.flavor.is_recursive() {
            self.names.len()
        } else {
            self.num_arguments
        }
    }

    pub fn universe(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.universe_len()).map(ElementId::from_index)
    }

    pub fn in_universe(&self, id: ElementId) -> bool {
        id.index() < self.universe_len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.names.len()).map(ElementId::from_index)
    }

    pub fn arguments(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.num_arguments).map(ElementId::from_index)
    }

    pub fn attacks(&self) -> impl Iterator<Item = ElementId> + '_ {
        (self.num_arguments..self.num_arguments + self.num_attacks).map(ElementId::from_index)
    }

    pub fn supports(&self) -> impl Iterator<Item = ElementId> + '_ {
        (self.num_arguments + self.num_attacks..self.names.len()).map(ElementId::from_index)
    }

    pub fn num_arguments(&self) -> usize {
        self.num_arguments
    }

    pub fn num_attacks(&self) -> usize {
        self.num_attacks
    }

    pub fn num_supports(&self) -> usize {
        self.names.len() - self.num_arguments - self.num_attacks
    }

    pub fn name(&self, id: ElementId) -> &str {
        &self.names[id.index()]
    }

    pub fn kind(&self, id: ElementId) -> ElementKind {
        self.kinds[id.index()]
    }

    pub fn id(&self, name: &str) -> Option<ElementId> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<ElementId, FrameworkError> {
        self.id(name)
            .ok_or_else(|| FrameworkError::UnknownElement(name.to_string()))
    }

    /// Source of an attack or support; `None` for arguments.
    pub fn source(&self, id: ElementId) -> Option<ElementId> {
        self.endpoints[id.index()].map(|(s, _)| s)
    }

    /// Target of an attack or support; `None` for arguments.
    pub fn target(&self, id: ElementId) -> Option<ElementId> {
        self.endpoints[id.index()].map(|(_, t)| t)
    }

    pub(crate) fn endpoints(&self, id: ElementId) -> (ElementId, ElementId) {
        self.endpoints[id.index()].expect("interaction has endpoints")
    }

    /// Attacks whose target is `id`.
    pub fn attacks_on(&self, id: ElementId) -> &[ElementId] {
        &self.attacks_on[id.index()]
    }

    /// Attacks whose source is `id`.
    pub fn attacks_from(&self, id: ElementId) -> &[ElementId] {
        &self.attacks_from[id.index()]
    }

    /// Supports whose target is `id`.
    pub fn supports_on(&self, id: ElementId) -> &[ElementId] {
        &self.supports_on[id.index()]
    }

    /// Supports whose source is `id`.
    pub fn supports_from(&self, id: ElementId) -> &[ElementId] {
        &self.supports_from[id.index()]
    }

    /// Resolves names into ids, failing on the first undeclared one.
    pub fn ids<'n, I>(&self, names: I) -> Result<BTreeSet<ElementId>, FrameworkError>
    where
        I: IntoIterator<Item = &'n str>,
    {
        names.into_iter().map(|n| self.lookup(n)).collect()
    }

    pub fn to_raw(&self) -> RawFramework {
        let interaction = |id: ElementId| {
            let (s, t) = self.endpoints(id);
            Interaction::new(self.name(id), self.name(s), self.name(t))
        };
        RawFramework {
            flavor: self.flavor,
            arguments: self.arguments().map(|a| self.name(a).to_string()).collect(),
            attacks: self.attacks().map(interaction).collect(),
            supports: self.supports().map(interaction).collect(),
        }
    }

    /// A fresh name not clashing with any declared element nor with `taken`.
    pub(crate) fn fresh_name(&self, base: &str, taken: &mut HashSet<String>) -> String {
        let mut candidate = base.to_string();
        let mut n = 1;
        while self.index.contains_key(&candidate) || taken.contains(&candidate) {
            candidate = format!("{base}_{n}");
            n += 1;
        }
        taken.insert(candidate.clone());
        candidate
    }
}
