use super::*;
use crate::fixtures::*;
use crate::framework::{Flavor, RawFramework};

fn set(fw: &Framework, names: &[&str]) -> ElementSet {
    ElementSet::from_names(fw, names.iter().copied()).unwrap()
}

fn accepted(fw: &Framework, exts: &[ExtensionPair]) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<String>> = exts
        .iter()
        .map(|e| e.accepted.sorted_names(fw).into_iter().map(String::from).collect())
        .collect();
    v.sort();
    v
}

fn expect(groups: &[&[&str]]) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<String>> = groups
        .iter()
        .map(|g| {
            let mut g: Vec<String> = g.iter().map(|s| s.to_string()).collect();
            g.sort();
            g
        })
        .collect();
    v.sort();
    v
}

fn with(base: &[&'static str], extra: &[&'static str]) -> Vec<&'static str> {
    base.iter().chain(extra).copied().collect()
}

fn ext(fw: &Framework, sem: SemanticsName) -> Vec<ExtensionPair> {
    enumerate_extensions(fw, sem, DefinitionMode::General).unwrap()
}

#[test]
fn plain_af_extensions() {
    let fw = four_cycle_af();
    let co = ext(&fw, SemanticsName::Complete);
    assert_eq!(accepted(&fw, &co), expect(&[&[], &["d"], &["a", "d"], &["b", "d"]]));
    let both = expect(&[&["a", "d"], &["b", "d"]]);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Preferred)), both);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Stable)), both);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Grounded)), expect(&[&[]]));
    let ad = co.iter().find(|e| e.accepted == set(&fw, &["a", "d"])).unwrap();
    assert_eq!(ad.defeated, set(&fw, &["b", "c"]));
}

#[test]
fn acyclic_menu_operators_and_extensions() {
    let fw = menu_afn();
    for mode in [DefinitionMode::Acyclic, DefinitionMode::General] {
        let s = set(&fw, &["fish", "white"]);
        assert_eq!(defeated(&fw, &s, mode).unwrap(), set(&fw, &["meat", "red"]));
        assert_eq!(acceptable(&fw, &s, mode).unwrap(), s);
        let co = enumerate_extensions(&fw, SemanticsName::Complete, mode).unwrap();
        assert_eq!(
            accepted(&fw, &co),
            expect(&[&[], &["red"], &["fish"], &["fish", "red"], &["fish", "white"], &["meat", "red"]])
        );
        let top = expect(&[&["fish", "red"], &["fish", "white"], &["meat", "red"]]);
        for sem in [SemanticsName::Preferred, SemanticsName::Stable] {
            assert_eq!(accepted(&fw, &enumerate_extensions(&fw, sem, mode).unwrap()), top);
        }
        assert!(grounded(&fw, mode).unwrap().accepted.is_empty());
    }
}

#[test]
fn mutual_support_is_defeated() {
    let fw = mutual_support_afn();
    for sem in SemanticsName::ALL {
        let exts = ext(&fw, sem);
        assert_eq!(exts.len(), 1, "{sem}");
        assert_eq!(exts[0].accepted, set(&fw, &["d"]));
        assert_eq!(exts[0].defeated, set(&fw, &["a", "b", "c", "e", "f"]));
    }
    assert_eq!(
        enumerate_extensions(&fw, SemanticsName::Complete, DefinitionMode::Acyclic),
        Err(SemanticsError::ModeViolation)
    );
}

#[test]
fn sorbet_menu_preferred_with_sorbet() {
    let rafn = sorbet_menu(Flavor::Rafn);
    let pr = accepted(&rafn, &ext(&rafn, SemanticsName::Preferred));
    let alphas = ["α3", "α4", "α5", "α6", "α7", "α8"];
    for extra in [["s", "m", "f", "w", "β1"], ["s", "m", "f", "r", "β1"]] {
        assert!(pr.contains(&expect(&[&with(&alphas, &extra)])[0]), "{extra:?}");
    }
    let asaf = sorbet_menu(Flavor::Asaf);
    let pr = accepted(&asaf, &ext(&asaf, SemanticsName::Preferred));
    for e in [
        ["s", "m", "f", "w", "β1", "α4", "α5", "α7", "α8"],
        ["s", "m", "f", "r", "β1", "α3", "α5", "α7", "α8"],
    ] {
        assert!(pr.contains(&expect(&[&e])[0]), "{e:?}");
    }
}

#[test]
fn sorbet_flavors_agree_on_arguments() {
    let args = |fw: &Framework| -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = ext(fw, SemanticsName::Preferred)
            .iter()
            .map(|e| {
                e.accepted
                    .iter()
                    .filter(|&x| fw.kind(x) == crate::framework::ElementKind::Argument)
                    .map(|x| fw.name(x).to_string())
                    .collect()
            })
            .collect();
        v.sort();
        v
    };
    assert_eq!(args(&sorbet_menu(Flavor::Rafn)), args(&sorbet_menu(Flavor::Asaf)));
}

const CORE: [&str; 8] = ["α3", "α4", "α5", "α6", "α7", "α8", "β1", "β2"];

#[test]
fn cyclic_rafn_extensions() {
    let fw = cyclic_sorbet_menu(Flavor::Rafn);
    let co = ext(&fw, SemanticsName::Complete);
    assert_eq!(
        accepted(&fw, &co),
        expect(&[
            &with(&CORE, &["m", "r"]),
            &with(&CORE, &["m", "r", "s"]),
            &with(&CORE, &["m", "r", "sbar", "α1", "α2"]),
        ])
    );
    let g = grounded(&fw, DefinitionMode::General).unwrap();
    assert_eq!(g.defeated, set(&fw, &["f", "w"]));
    let top = expect(&[&with(&CORE, &["m", "r", "sbar", "α1", "α2"]), &with(&CORE, &["m", "r", "s"])]);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Preferred)), top);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Stable)), top);

    let e3 = set(&fw, &with(&CORE, &["f", "w", "sbar", "α1", "α2"]));
    let e4 = set(&fw, &with(&CORE, &["f", "m", "w", "s"]));
    for candidate in [&e3, &e4] {
        let def = defeated(&fw, candidate, DefinitionMode::General).unwrap();
        assert!(def.contains(fw.id("f").unwrap()) && def.contains(fw.id("w").unwrap()));
        assert!(!is_extension(&fw, candidate, SemanticsName::Stable, DefinitionMode::General).unwrap());
    }
}

#[test]
fn cyclic_asaf_extensions() {
    let fw = cyclic_sorbet_menu(Flavor::Asaf);
    let top = expect(&[
        &["m", "r", "sbar", "α2", "α3", "α6", "β1", "β2"],
        &["m", "r", "s", "α3", "α5", "α7", "α8", "β1", "β2"],
    ]);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Preferred)), top);
    assert_eq!(accepted(&fw, &ext(&fw, SemanticsName::Stable)), top);
    let e3 = set(&fw, &["f", "w", "sbar", "α1", "α4", "α6", "β1", "β2"]);
    let e4 = set(&fw, &["f", "m", "w", "s", "α4", "α5", "α7", "α8", "β1", "β2"]);
    for candidate in [&e3, &e4] {
        let def = defeated(&fw, candidate, DefinitionMode::General).unwrap();
        assert!(def.contains(fw.id("f").unwrap()) && def.contains(fw.id("w").unwrap()));
        assert!(!is_extension(&fw, candidate, SemanticsName::Stable, DefinitionMode::General).unwrap());
    }
}

#[test]
fn routes_agree_on_fixtures() {
    let mut fws = vec![four_cycle_af(), menu_afn(), mutual_support_afn()];
    for flavor in Flavor::ALL.into_iter().filter(|f| f.is_recursive()) {
        fws.push(sorbet_menu(flavor));
        fws.push(cyclic_sorbet_menu(flavor));
    }
    for fw in &fws {
        let direct = EnumerationOptions { route: Route::Direct, ..Default::default() };
        let program = EnumerationOptions { route: Route::LogicProgram, ..Default::default() };
        let a = complete_extensions(fw, DefinitionMode::General, &direct).unwrap();
        let b = complete_extensions(fw, DefinitionMode::General, &program).unwrap();
        assert_eq!(a, b, "{}", fw.flavor());
        let g = grounded(fw, DefinitionMode::General).unwrap();
        assert_eq!(g, grounded_direct(fw, DefinitionMode::General).unwrap());
        assert_eq!(select_extensions(fw, &a, SemanticsName::Grounded), vec![g]);
    }
}

#[test]
fn empty_framework_has_one_empty_extension() {
    let fw = RawFramework::new(Flavor::Rafn).build().unwrap();
    for sem in SemanticsName::ALL {
        assert_eq!(ext(&fw, sem), vec![ExtensionPair { accepted: ElementSet::new(), defeated: ElementSet::new() }]);
    }
}

#[test]
fn unattacked_elements_are_acceptable() {
    let fw = RawFramework::new(Flavor::Asaf).arguments(["a", "b"]).build().unwrap();
    let all = set(&fw, &["a", "b"]);
    assert_eq!(acceptable(&fw, &ElementSet::new(), DefinitionMode::General).unwrap(), all);
    let fw = RawFramework::new(Flavor::Af).arguments(["g", "x", "y"]).attack("r", "x", "y").build().unwrap();
    let g = fw.id("g").unwrap();
    assert!(credulous(&fw, g, SemanticsName::Complete, DefinitionMode::General).unwrap());
    assert!(skeptical(&fw, g, SemanticsName::Complete, DefinitionMode::General).unwrap());
}

#[test]
fn acceptance_queries() {
    let fw = four_cycle_af();
    let id = |n| fw.id(n).unwrap();
    let g = DefinitionMode::General;
    assert!(credulous(&fw, id("a"), SemanticsName::Preferred, g).unwrap());
    assert!(!skeptical(&fw, id("a"), SemanticsName::Preferred, g).unwrap());
    assert!(skeptical(&fw, id("d"), SemanticsName::Stable, g).unwrap());
    assert!(!credulous(&fw, id("c"), SemanticsName::Complete, g).unwrap());
    assert!(!credulous(&fw, id("d"), SemanticsName::Grounded, g).unwrap());
    let d = mutual_support_afn();
    assert!(credulous(&d, d.id("d").unwrap(), SemanticsName::Preferred, g).unwrap());
}

#[test]
fn skeptical_is_vacuous_without_extensions() {
    let fw = RawFramework::new(Flavor::Af).arguments(["a"]).attack("r", "a", "a").build().unwrap();
    assert!(ext(&fw, SemanticsName::Stable).is_empty());
    assert!(skeptical(&fw, fw.id("a").unwrap(), SemanticsName::Stable, DefinitionMode::General).unwrap());
    assert!(!credulous(&fw, fw.id("a").unwrap(), SemanticsName::Stable, DefinitionMode::General).unwrap());
}

#[test]
fn queries_outside_universe_rejected() {
    let fw = menu_afn();
    let alpha = fw.id("α1").unwrap();
    assert_eq!(
        credulous(&fw, alpha, SemanticsName::Complete, DefinitionMode::General),
        Err(SemanticsError::OutsideUniverse("α1".into()))
    );
    let s: ElementSet = [alpha].into_iter().collect();
    assert!(is_extension(&fw, &s, SemanticsName::Complete, DefinitionMode::General).is_err());
}

#[test]
fn verification() {
    let fw = four_cycle_af();
    let g = DefinitionMode::General;
    let ad = set(&fw, &["a", "d"]);
    assert!(is_extension(&fw, &ad, SemanticsName::Stable, g).unwrap());
    assert!(is_extension(&fw, &ad, SemanticsName::Preferred, g).unwrap());
    assert!(!is_extension(&fw, &ad, SemanticsName::Grounded, g).unwrap());
    assert!(is_extension(&fw, &set(&fw, &["d"]), SemanticsName::Complete, g).unwrap());
    assert!(!is_extension(&fw, &set(&fw, &["d"]), SemanticsName::Preferred, g).unwrap());
    assert!(!is_extension(&fw, &set(&fw, &["a", "b"]), SemanticsName::Complete, g).unwrap());
    assert!(is_extension(&fw, &ElementSet::new(), SemanticsName::Grounded, g).unwrap());
}

#[test]
fn cap_falls_back_to_program_route() {
    let fw = four_cycle_af();
    let tight = EnumerationOptions { cap: 1, route: Route::Direct };
    assert!(matches!(
        complete_extensions(&fw, DefinitionMode::General, &tight),
        Err(SemanticsError::CapExceeded { undecided: 4, cap: 1 })
    ));
    let auto = EnumerationOptions { cap: 1, route: Route::Auto };
    assert_eq!(complete_extensions(&fw, DefinitionMode::General, &auto).unwrap().len(), 4);
}

#[test]
fn canonical_order() {
    let fw = four_cycle_af();
    let co = ext(&fw, SemanticsName::Complete);
    let shown: Vec<String> = co.iter().map(|e| e.accepted.display(&fw).to_string()).collect();
    assert_eq!(shown, ["{}", "{d}", "{a, d}", "{b, d}"]);
}

#[test]
fn semantics_names_parse() {
    for sem in SemanticsName::ALL {
        assert_eq!(sem.abbreviation().parse::<SemanticsName>(), Ok(sem));
    }
    assert_eq!("ACYCLIC".parse::<DefinitionMode>(), Ok(DefinitionMode::Acyclic));
    assert!("x".parse::<SemanticsName>().is_err());
}

#[test]
fn acyclic_operators_leave_support_cycle_undecided() {
    let fw = cyclic_sorbet_menu(Flavor::Rafn);
    let eval = Evaluator::new(&fw, DefinitionMode::Acyclic);
    let n = fw.universe_len();
    let found: Vec<ExtensionPair> = (0u32..1 << n)
        .filter_map(|bits| {
            let s: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            eval.complete(&s).map(|def| pair(&s, &def))
        })
        .collect();
    assert_eq!(
        accepted(&fw, &found),
        expect(&[
            &CORE,
            &with(&CORE, &["m", "r"]),
            &with(&CORE, &["m", "s"]),
            &with(&CORE, &["m", "r", "s"]),
            &with(&CORE, &["sbar", "α1", "α2"]),
            &with(&CORE, &["m", "r", "sbar", "α1", "α2"]),
        ])
    );
    assert_eq!(found[0].defeated, ElementSet::new());
}
