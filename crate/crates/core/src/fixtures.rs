//! Small reference frameworks shared by unit tests.

use crate::framework::{Flavor, Framework, RawFramework};

/// Four arguments: a and b attack each other, both attack c, c and d attack each other.
pub(crate) fn four_cycle_af() -> Framework {
    RawFramework::new(Flavor::Af)
        .arguments(["a", "b", "c", "d"])
        .attack("r1", "a", "b")
        .attack("r2", "b", "a")
        .attack("r3", "a", "c")
        .attack("r4", "b", "c")
        .attack("r5", "c", "d")
        .attack("r6", "d", "c")
        .build()
        .unwrap()
}

/// Menu: fish/meat and white/red are incompatible, white wine needs fish.
pub(crate) fn menu_afn() -> Framework {
    RawFramework::new(Flavor::Afn)
        .arguments(["fish", "meat", "white", "red"])
        .attack("α1", "fish", "meat")
        .attack("α2", "meat", "fish")
        .attack("α3", "red", "white")
        .attack("α4", "white", "red")
        .support("β1", "fish", "white")
        .build()
        .unwrap()
}

/// Menu with sorbet options whose presence disables the fish/meat incompatibility.
pub(crate) fn sorbet_menu_raw(flavor: Flavor) -> RawFramework {
    RawFramework::new(flavor)
        .arguments(["m", "f", "w", "r", "s", "sbar"])
        .attack("α1", "f", "m")
        .attack("α2", "m", "f")
        .attack("α3", "r", "w")
        .attack("α4", "w", "r")
        .attack("α5", "s", "sbar")
        .attack("α6", "sbar", "s")
        .attack("α7", "s", "α1")
        .attack("α8", "s", "α2")
        .support("β1", "f", "w")
}

pub(crate) fn sorbet_menu(flavor: Flavor) -> Framework {
    sorbet_menu_raw(flavor).build().unwrap()
}

/// The sorbet menu with an extra support from white back to fish, closing a support cycle.
pub(crate) fn cyclic_sorbet_menu(flavor: Flavor) -> Framework {
    sorbet_menu_raw(flavor)
        .support("β2", "w", "f")
        .build()
        .unwrap()
}

/// a and b support each other, b supports c, c attacks d, d attacks e, e supports f.
pub(crate) fn mutual_support_afn() -> Framework {
    RawFramework::new(Flavor::Afn)
        .arguments(["a", "b", "c", "d", "e", "f"])
        .attack("r1", "c", "d")
        .attack("r2", "d", "e")
        .support("s1", "a", "b")
        .support("s2", "b", "a")
        .support("s3", "b", "c")
        .support("s4", "e", "f")
        .build()
        .unwrap()
}
