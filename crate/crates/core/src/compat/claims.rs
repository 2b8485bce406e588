//! Published verdicts, keyed by canonical statistic name, so that a checker
//! run can be compared against what is expected of it.

use crate::cyc::CycStatId;
use crate::perm::StatId;

const LINEAR_COMPATIBLE: &[&str] = &[
    "Des", "des", "maj", "comaj", "(des,maj)", "Pk", "pk", "Val", "val", "Lpk", "lpk", "Rpk", "rpk",
    "Epk", "epk", "udr", "(pk,des)", "(lpk,des)", "(udr,des)",
];

const LINEAR_INCOMPATIBLE: &[&str] = &["Ddes", "ddes", "br"];

const CYCLIC_COMPATIBLE: &[&str] = &[
    "cDes",
    "cdes",
    "cPk",
    "cpk",
    "(cpk,cdes)",
    "ocmaj",
    "cbr",
    "cval",
    "(cval,cdes)",
    "ind:Des",
    "ind:des",
    "ind:Pk",
    "ind:pk",
    "ind:Val",
    "ind:val",
    "ind:epk",
    "ind:(val,des)",
    "ind:(epk,des)",
    "(ind:val,ind:des)",
    "(ind:epk,ind:des)",
];

const CYCLIC_INCOMPATIBLE: &[&str] = &[
    "ind:cmaj",
    "ind:(cdes,cmaj)",
    "ind:maj",
    "ind:(des,maj)",
    "ind:comaj",
    "ind:ccomaj",
    "ind:(des,comaj)",
    "ind:(cdes,ccomaj)",
    "ind:Ddes",
    "ind:ddes",
    "ind:br",
    "ind:(br,des)",
    "ind:Lpk",
    "ind:Epk",
    "ind:lpk",
    "ind:udr",
    "ind:(lpk,des)",
    "ind:(udr,des)",
    "ind:(Pk,Val)",
    "ind:(pk,val)",
];

/// Pairs claimed equivalent (`true`) or claimed not equivalent (`false`).
const CYCLIC_EQUIVALENCES: &[(&str, &str, bool)] = &[
    ("ind:Des", "cDes", true),
    ("ind:des", "cdes", true),
    ("ind:Pk", "cPk", true),
    ("ind:pk", "cpk", true),
    ("ind:val", "cval", true),
    ("cval", "cpk", true),
    ("ind:epk", "cpk", true),
    ("ind:maj", "ind:cmaj", true),
    ("ind:(des,maj)", "(cdes,ind:cmaj)", true),
    ("ocmaj", "cDes", true),
    ("ind:br", "cbr", false),
];

fn canonical_linear(names: &[&str], st: &StatId) -> bool {
    names
        .iter()
        .any(|n| n.parse::<StatId>().map(|s| &s == st).unwrap_or(false))
}

fn canonical_cyclic(names: &[&str], cst: &CycStatId) -> bool {
    names
        .iter()
        .any(|n| n.parse::<CycStatId>().map(|s| &s == cst).unwrap_or(false))
}

/// `Some(true)` if `st` is known to be shuffle-compatible, `Some(false)` if
/// known not to be.
pub fn expected_sc(st: &StatId) -> Option<bool> {
    if canonical_linear(LINEAR_COMPATIBLE, st) {
        Some(true)
    } else if canonical_linear(LINEAR_INCOMPATIBLE, st) {
        Some(false)
    } else {
        None
    }
}

pub fn expected_csc(cst: &CycStatId) -> Option<bool> {
    if canonical_cyclic(CYCLIC_COMPATIBLE, cst) {
        Some(true)
    } else if canonical_cyclic(CYCLIC_INCOMPATIBLE, cst) {
        Some(false)
    } else {
        None
    }
}

/// Known answer for equivalence of two cyclic statistics, in either order.
pub fn expected_equiv(a: &CycStatId, b: &CycStatId) -> Option<bool> {
    let parse = |s: &str| s.parse::<CycStatId>().ok();
    CYCLIC_EQUIVALENCES.iter().find_map(|(x, y, holds)| {
        let (x, y) = (parse(x)?, parse(y)?);
        ((&x == a && &y == b) || (&x == b && &y == a)).then_some(*holds)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_parses() {
        for n in LINEAR_COMPATIBLE.iter().chain(LINEAR_INCOMPATIBLE) {
            assert!(n.parse::<StatId>().is_ok(), "{n}");
        }
        for n in CYCLIC_COMPATIBLE.iter().chain(CYCLIC_INCOMPATIBLE) {
            assert!(n.parse::<CycStatId>().is_ok(), "{n}");
        }
        for (a, b, _) in CYCLIC_EQUIVALENCES {
            assert!(a.parse::<CycStatId>().is_ok() && b.parse::<CycStatId>().is_ok(), "{a} {b}");
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(expected_sc(&"des".parse().unwrap()), Some(true));
        assert_eq!(expected_csc(&"cpk,cdes".parse().unwrap()), Some(true));
        assert_eq!(expected_csc(&"ind:cmajL".parse().unwrap()), Some(false));
        assert_eq!(expected_csc(&"ind:rpk".parse().unwrap()), None);
        let (a, b) = ("ind:cmaj".parse().unwrap(), "ind:maj".parse().unwrap());
        assert_eq!(expected_equiv(&a, &b), Some(true));
    }
}
