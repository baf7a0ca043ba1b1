//! Structural analysis: support graphs, support cycles, the auxiliary BAF,
//! AFN/AFD duality and derived attacks.

use std::collections::{BTreeSet, HashSet};

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::element_set::ElementSet;
use crate::framework::{ElementId, ElementKind, Flavor, Framework, FrameworkError, RawFramework};

/// Arguments connected by argument-targeted supports.
#[derive(Debug, Clone)]
pub struct SupportGraph {
    graph: DiGraph<ElementId, ElementId>,
    nodes: Vec<NodeIndex>,
}

impl SupportGraph {
    /// Graph over the arguments of `fw`; every argument-targeted support
    /// accepted by `include` becomes one labeled edge.
    pub fn new(fw: &Framework, include: impl Fn(ElementId) -> bool) -> Self {
        let mut graph = DiGraph::new();
        let nodes: Vec<NodeIndex> = fw.arguments().map(|a| graph.add_node(a)).collect();
        for beta in fw.supports().filter(|&b| include(b)) {
            let (s, t) = endpoints(fw, beta);
            if fw.kind(t) == ElementKind::Argument {
                graph.add_edge(nodes[s.index()], nodes[t.index()], beta);
            }
        }
        SupportGraph { graph, nodes }
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Supports labeling the edges, in insertion order.
    pub fn labels(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.graph.edge_weights().copied()
    }

    /// Arguments lying on a directed cycle.
    pub fn cycle_members(&self) -> BTreeSet<ElementId> {
        cyclic_nodes(&self.graph)
    }

    /// Arguments reachable from `from` by a nonempty support path.
    pub fn reachable_from(&self, from: ElementId) -> BTreeSet<ElementId> {
        reach(&self.graph, self.nodes[from.index()], petgraph::Direction::Outgoing)
    }

    /// Arguments from which `to` is reachable by a nonempty support path.
    pub fn reaching(&self, to: ElementId) -> BTreeSet<ElementId> {
        reach(&self.graph, self.nodes[to.index()], petgraph::Direction::Incoming)
    }
}

fn endpoints(fw: &Framework, id: ElementId) -> (ElementId, ElementId) {
    (fw.source(id).unwrap(), fw.target(id).unwrap())
}

fn reach<N: Copy + Ord, E>(
    graph: &DiGraph<N, E>,
    start: NodeIndex,
    dir: petgraph::Direction,
) -> BTreeSet<N> {
    let mut seen = vec![false; graph.node_count()];
    let mut stack: Vec<NodeIndex> = graph.neighbors_directed(start, dir).collect();
    let mut out = BTreeSet::new();
    while let Some(n) = stack.pop() {
        if std::mem::replace(&mut seen[n.index()], true) {
            continue;
        }
        out.insert(graph[n]);
        stack.extend(graph.neighbors_directed(n, dir));
    }
    out
}

/// Nodes whose strongly connected component contains a cycle.
fn cyclic_nodes<N: Copy + Ord, E>(graph: &DiGraph<N, E>) -> BTreeSet<N> {
    let mut out = BTreeSet::new();
    for scc in tarjan_scc(graph) {
        let cyclic = scc.len() > 1 || graph.contains_edge(scc[0], scc[0]);
        if cyclic {
            out.extend(scc.into_iter().map(|n| graph[n]));
        }
    }
    out
}

/// Elements whose defeat propagates along support-like dependencies, as an
/// element-level graph. An argument is self-supported when it lies on a
/// cycle of this graph.
///
/// For every flavor except AFRAD cycles can only pass through arguments, so
/// the graph reduces to the argument-targeted [`SupportGraph`]. Under AFRAD an
/// argument also depends on the attack it deductively supports, and that
/// attack depends on its own source, which closes loops through attack names.
pub(crate) fn dependency_cycle_mask(fw: &Framework, active: &dyn Fn(ElementId) -> bool) -> Vec<bool> {
    let mut mask = vec![false; fw.len()];
    let members = if fw.flavor() == Flavor::Afrad {
        let mut graph: DiGraph<ElementId, ()> = DiGraph::new();
        let nodes: Vec<NodeIndex> = fw.elements().map(|e| graph.add_node(e)).collect();
        for beta in fw.supports().filter(|&b| active(b)) {
            let (s, t) = endpoints(fw, beta);
            if fw.kind(t) != ElementKind::Support {
                graph.add_edge(nodes[t.index()], nodes[s.index()], ());
            }
        }
        for alpha in fw.attacks() {
            graph.add_edge(nodes[fw.source(alpha).unwrap().index()], nodes[alpha.index()], ());
        }
        cyclic_nodes(&graph)
    } else {
        SupportGraph::new(fw, active).cycle_members()
    };
    for id in members {
        if fw.kind(id) == ElementKind::Argument {
            mask[id.index()] = true;
        }
    }
    mask
}

/// Arguments on a support cycle.
///
/// Under Rec-BAF flavors only cycles whose support names all belong to `set`
/// count; under AF/BAF flavors `set` is ignored and every support counts.
pub fn support_cycle_members(fw: &Framework, set: &ElementSet) -> Result<BTreeSet<ElementId>, FrameworkError> {
    if let Some(bad) = set.iter().find(|id| id.index() >= fw.len()) {
        return Err(FrameworkError::UnknownElement(format!("#{}", bad.index())));
    }
    let recursive = fw.flavor().is_recursive();
    let mask = dependency_cycle_mask(fw, &|b| !recursive || set.contains(b));
    Ok(ElementSet::from_mask(&mask).iter().collect())
}

/// Flattens a Rec-BAF into its auxiliary AFN: attack `a -α-> b` becomes
/// `a => α` and `α -> b`, support `a =β=> b` becomes `a => β` and `β => b`.
/// Attack and support names become arguments.
pub fn aux_baf(fw: &Framework) -> Result<Framework, FrameworkError> {
    if !fw.flavor().is_recursive() {
        return Err(FrameworkError::FlavorViolation(format!(
            "the auxiliary BAF is only defined for Rec-BAF flavors, not {}",
            fw.flavor()
        )));
    }
    let mut taken = HashSet::new();
    let mut raw = RawFramework::new(Flavor::Afn).arguments(fw.elements().map(|e| fw.name(e).to_string()));
    for alpha in fw.attacks() {
        let (s, t) = endpoints(fw, alpha);
        let name = fw.name(alpha);
        let into = fw.fresh_name(&format!("{name}_in"), &mut taken);
        let out = fw.fresh_name(&format!("{name}_out"), &mut taken);
        raw = raw.support(into, fw.name(s), name).attack(out, name, fw.name(t));
    }
    for beta in fw.supports() {
        let (s, t) = endpoints(fw, beta);
        let name = fw.name(beta);
        let into = fw.fresh_name(&format!("{name}_in"), &mut taken);
        let out = fw.fresh_name(&format!("{name}_out"), &mut taken);
        raw = raw.support(into, fw.name(s), name).support(out, name, fw.name(t));
    }
    raw.build()
}

/// Acyclicity of the support relation: of the support graph for BAFs, of the
/// auxiliary BAF for Rec-BAFs.
pub fn is_support_acyclic(fw: &Framework) -> bool {
    if fw.flavor().is_recursive() {
        let aux = aux_baf(fw).expect("Rec-BAF flavors flatten");
        is_support_acyclic(&aux)
    } else {
        SupportGraph::new(fw, |_| true).cycle_members().is_empty()
    }
}

/// Whether the acyclic-mode definitions apply: the framework is support
/// acyclic and no element is self-supported even with every support active.
pub fn admits_acyclic_mode(fw: &Framework) -> bool {
    is_support_acyclic(fw) && !dependency_cycle_mask(fw, &|_| true).contains(&true)
}

/// The dual BAF: supports reversed, AFN and AFD exchanged, attacks untouched.
pub fn reverse_supports(fw: &Framework) -> Result<Framework, FrameworkError> {
    let flavor = match fw.flavor() {
        Flavor::Afn => Flavor::Afd,
        Flavor::Afd => Flavor::Afn,
        other => {
            return Err(FrameworkError::FlavorViolation(format!(
                "support reversal is only a duality for AFN/AFD, not {other}"
            )))
        }
    };
    let mut raw = fw.to_raw();
    raw.flavor = flavor;
    for sup in &mut raw.supports {
        std::mem::swap(&mut sup.source, &mut sup.target);
    }
    raw.build()
}

/// Secondary (AFN) or mediated (AFD) attacks, excluding pairs already
/// related by a declared attack.
pub fn derived_attacks(fw: &Framework) -> Result<BTreeSet<(ElementId, ElementId)>, FrameworkError> {
    if !fw.flavor().is_bipolar() {
        return Err(FrameworkError::FlavorViolation(format!(
            "derived attacks are defined for AFN/AFD, not {}",
            fw.flavor()
        )));
    }
    if !is_support_acyclic(fw) {
        return Err(FrameworkError::CyclicSupports);
    }
    let graph = SupportGraph::new(fw, |_| true);
    let direct: BTreeSet<(ElementId, ElementId)> = fw.attacks().map(|a| endpoints(fw, a)).collect();
    let mut derived = BTreeSet::new();
    for &(a, b) in &direct {
        let related = match fw.flavor() {
            Flavor::Afn => graph.reachable_from(b),
            _ => graph.reaching(b),
        };
        derived.extend(related.into_iter().map(|c| (a, c)).filter(|p| !direct.contains(p)));
    }
    Ok(derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn set(fw: &Framework, names: &[&str]) -> ElementSet {
        ElementSet::from_names(fw, names.iter().copied()).unwrap()
    }

    fn names(fw: &Framework, ids: &BTreeSet<ElementId>) -> Vec<String> {
        let mut v: Vec<String> = ids.iter().map(|&i| fw.name(i).to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn aux_baf_flattens_recursive_attack() {
        let fw = sorbet_menu(Flavor::Rafn);
        let aux = aux_baf(&fw).unwrap();
        assert_eq!(aux.flavor(), Flavor::Afn);
        assert_eq!(aux.num_arguments(), fw.len());
        let a7 = aux.id("α7").unwrap();
        let into: Vec<_> = aux.supports_on(a7).iter().map(|&b| aux.name(aux.source(b).unwrap())).collect();
        assert_eq!(into, ["s"]);
        let out: Vec<_> = aux.attacks_from(a7).iter().map(|&r| aux.name(aux.target(r).unwrap())).collect();
        assert_eq!(out, ["α1"]);
        assert_eq!(aux.num_attacks(), fw.num_attacks());
        assert_eq!(aux.num_supports(), fw.num_attacks() + 2 * fw.num_supports());
    }

    #[test]
    fn aux_baf_of_bare_rec_baf() {
        let fw = RawFramework::new(Flavor::Asaf).arguments(["x", "y"]).build().unwrap();
        let aux = aux_baf(&fw).unwrap();
        assert_eq!(aux.num_arguments(), 2);
        assert_eq!(aux.len(), 2);
        assert!(matches!(aux_baf(&menu_afn()), Err(FrameworkError::FlavorViolation(_))));
    }

    #[test]
    fn aux_baf_of_cyclic_menu_has_argument_cycle() {
        let fw = cyclic_sorbet_menu(Flavor::Rafn);
        let aux = aux_baf(&fw).unwrap();
        let members = SupportGraph::new(&aux, |_| true).cycle_members();
        assert_eq!(names(&aux, &members), ["f", "w", "β1", "β2"]);
    }

    #[test]
    fn aux_baf_names_never_collide() {
        let fw = RawFramework::new(Flavor::Rafn)
            .arguments(["a", "r_in", "r_out"])
            .attack("r", "a", "r_in")
            .build()
            .unwrap();
        let aux = aux_baf(&fw).unwrap();
        assert_eq!(aux.len(), 4 + 2);
        assert!(aux.id("r_in_1").is_some() && aux.id("r_out_1").is_some());
    }

    #[test]
    fn acyclicity() {
        assert!(is_support_acyclic(&menu_afn()));
        assert!(!is_support_acyclic(&mutual_support_afn()));
        assert!(is_support_acyclic(&sorbet_menu(Flavor::Rafn)));
        assert!(!is_support_acyclic(&cyclic_sorbet_menu(Flavor::Rafn)));
        assert!(is_support_acyclic(&four_cycle_af()));
    }

    #[test]
    fn cycle_members_of_mutual_support() {
        let fw = mutual_support_afn();
        for s in [vec![], vec!["d"], vec!["a", "f"]] {
            let m = support_cycle_members(&fw, &set(&fw, &s)).unwrap();
            assert_eq!(names(&fw, &m), ["a", "b"]);
        }
    }

    #[test]
    fn cycle_members_depend_on_active_supports() {
        let fw = cyclic_sorbet_menu(Flavor::Rafn);
        let both = support_cycle_members(&fw, &set(&fw, &["β1", "β2", "m"])).unwrap();
        assert_eq!(names(&fw, &both), ["f", "w"]);
        let one = support_cycle_members(&fw, &set(&fw, &["β1"])).unwrap();
        assert!(one.is_empty());
    }

    #[test]
    fn afrad_loops_through_attack_names() {
        // a deductively needs attack r, whose source is a itself.
        let fw = RawFramework::new(Flavor::Afrad)
            .arguments(["a", "b"])
            .attack("r", "a", "b")
            .support("s", "a", "r")
            .build()
            .unwrap();
        assert!(is_support_acyclic(&fw));
        assert!(!admits_acyclic_mode(&fw));
        let m = support_cycle_members(&fw, &set(&fw, &["s"])).unwrap();
        assert_eq!(names(&fw, &m), ["a"]);
        assert!(support_cycle_members(&fw, &ElementSet::new()).unwrap().is_empty());
        // the same shape is harmless under the other recursive flavors
        for flavor in [Flavor::Rafn, Flavor::Asaf, Flavor::Rafd] {
            let mut raw = fw.to_raw();
            raw.flavor = flavor;
            assert!(admits_acyclic_mode(&raw.build().unwrap()));
        }
    }

    #[test]
    fn support_graph_edge_count() {
        let fw = cyclic_sorbet_menu(Flavor::Asaf);
        assert_eq!(SupportGraph::new(&fw, |_| true).edge_count(), 2);
        let fw = RawFramework::new(Flavor::Rafn)
            .arguments(["a", "b"])
            .attack("r", "a", "b")
            .support("s", "b", "r")
            .build()
            .unwrap();
        assert_eq!(SupportGraph::new(&fw, |_| true).edge_count(), 0);
    }

    #[test]
    fn reversal() {
        let fw = RawFramework::new(Flavor::Afd)
            .arguments(["a", "b"])
            .support("s", "a", "b")
            .build()
            .unwrap();
        let rev = reverse_supports(&fw).unwrap();
        assert_eq!(rev.flavor(), Flavor::Afn);
        let s = rev.id("s").unwrap();
        assert_eq!(rev.name(rev.source(s).unwrap()), "b");
        assert_eq!(rev.name(rev.target(s).unwrap()), "a");
        assert_eq!(reverse_supports(&rev).unwrap(), fw);

        let plain = RawFramework::new(Flavor::Afn)
            .arguments(["a", "b"])
            .attack("r", "a", "b")
            .build()
            .unwrap();
        let dual = reverse_supports(&plain).unwrap();
        assert_eq!(dual.flavor(), Flavor::Afd);
        assert_eq!(dual.to_raw().attacks, plain.to_raw().attacks);
        assert!(reverse_supports(&sorbet_menu(Flavor::Rafn)).is_err());
    }

    #[test]
    fn secondary_attack_in_menu() {
        let fw = menu_afn();
        let derived = derived_attacks(&fw).unwrap();
        let named: Vec<_> = derived.iter().map(|&(a, b)| (fw.name(a), fw.name(b))).collect();
        assert_eq!(named, [("meat", "white")]);
    }

    #[test]
    fn derived_attacks_edge_cases() {
        let fw = RawFramework::new(Flavor::Afn)
            .arguments(["a", "b"])
            .attack("r", "a", "b")
            .build()
            .unwrap();
        assert!(derived_attacks(&fw).unwrap().is_empty());

        let fw = RawFramework::new(Flavor::Afd)
            .arguments(["a", "b", "c"])
            .attack("r", "a", "b")
            .support("s", "c", "b")
            .build()
            .unwrap();
        let named: Vec<_> = derived_attacks(&fw)
            .unwrap()
            .iter()
            .map(|&(a, b)| (fw.name(a), fw.name(b)))
            .collect();
        assert_eq!(named, [("a", "c")]);

        assert_eq!(derived_attacks(&mutual_support_afn()), Err(FrameworkError::CyclicSupports));
    }
}
