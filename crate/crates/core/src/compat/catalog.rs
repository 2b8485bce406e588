//! Stored non-compatibility counterexamples for induced cyclic statistics,
//! each replayed from scratch.

use serde::Serialize;

use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::error::{Error, Result};
use crate::perm::{Multiset, Perm, StatId, StatValue};
use crate::shuffle::{cyc_distribution, cyclic_shuffles, Distribution};

pub const CATALOG_NAMES: &[&str] = &[
    "cmaj", "cdes_cmaj", "Ddes", "ddes", "br", "br_des", "Lpk", "Epk", "lpk", "udr", "lpk_des",
    "udr_des", "Pk_Val", "pk_val",
];

/// What the printed example claims about the target multiset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Claim {
    /// Appears exactly this many times on each side.
    Counts { first: u64, second: u64 },
    /// Appears on the first side and not on the second.
    PresentAbsent,
    /// Only that the two distributions differ.
    Differ,
}

impl Claim {
    fn holds(self, a: u64, b: u64) -> bool {
        match self {
            Claim::Counts { first, second } => a == first && b == second,
            Claim::PresentAbsent => a > 0 && b == 0,
            Claim::Differ => true,
        }
    }
}

struct Entry {
    stat: CycStatId,
    first: (&'static [u32], &'static [u32]),
    second: (&'static [u32], &'static [u32]),
    target: Option<Vec<StatValue>>,
    claim: Claim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub name: String,
    pub stat: String,
    pub first: (String, String),
    pub second: (String, String),
    pub claim: Claim,
    pub target: Option<StatValue>,
    pub target_counts: Option<(u64, u64)>,
    pub inputs_agree: bool,
    pub distributions_differ: bool,
    pub first_difference: Option<(StatValue, u64, u64)>,
    /// Whether the printed data validated and confirmed the claim as given.
    pub literal_ok: bool,
    pub repaired: bool,
    pub notes: Vec<String>,
    pub confirmed: bool,
}

fn ints(v: &[i64]) -> Vec<StatValue> {
    v.iter().map(|&x| StatValue::Int(x)).collect()
}

fn rep<T: Clone>(items: &[(T, usize)]) -> Vec<T> {
    items
        .iter()
        .flat_map(|(v, k)| std::iter::repeat_n(v.clone(), *k))
        .collect()
}

fn set(v: &[u32]) -> StatValue {
    StatValue::set(v.to_vec())
}

fn int_pair(a: i64, b: i64) -> StatValue {
    StatValue::pair(StatValue::Int(a), StatValue::Int(b))
}

fn sets(v: &[&[u32]]) -> Vec<StatValue> {
    v.iter().map(|s| set(s)).collect()
}

const CMAJ_PI: &[u32] = &[1, 4, 7, 6, 9, 10, 8, 2, 5, 3];
const CMAJ_SIGMA: &[u32] = &[1, 3, 5, 4, 7, 6, 9, 10, 8, 2];
const BR_PI: &[u32] = &[2, 5, 6, 7, 3, 4, 8, 9];
const BR_SIGMA: &[u32] = &[2, 4, 5, 6, 7, 3, 8, 9];
const LPK_PI: &[u32] = &[8, 7, 5, 1, 6, 4, 3, 9];
const LPK_SIGMA: &[u32] = &[5, 3, 1, 8, 7, 6, 4, 9];
const PEAK_PI: &[u32] = &[11, 6, 3, 7, 1, 4, 12, 10, 2, 9, 6, 8];
const PEAK_PI_PRIME: &[u32] = &[13, 7, 2, 9, 5, 3, 10, 4, 8, 12, 6, 11];

fn induced(name: &str) -> CycStatId {
    CycStatId::induced(name).expect("catalog statistic names are valid")
}

fn entry(name: &str) -> Option<Entry> {
    let e = match name {
        "cmaj" => Entry {
            stat: induced("cmajL"),
            first: (CMAJ_PI, &[11]),
            second: (CMAJ_SIGMA, &[11]),
            target: Some(ints(&[22, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35])),
            claim: Claim::PresentAbsent,
        },
        "cdes_cmaj" => Entry {
            stat: induced("(cdesL,cmajL)"),
            first: (CMAJ_PI, &[11]),
            second: (CMAJ_SIGMA, &[11]),
            target: None,
            claim: Claim::Differ,
        },
        "Ddes" => Entry {
            stat: induced("Ddes"),
            first: (&[1, 2, 3, 4], &[5]),
            second: (&[1, 3, 2, 4], &[5]),
            target: Some(rep(&[(set(&[]), 5)])),
            claim: Claim::Counts { first: 3, second: 2 },
        },
        "ddes" => Entry {
            stat: induced("ddes"),
            first: (&[1, 2, 3, 4], &[5]),
            second: (&[1, 3, 2, 4], &[5]),
            target: Some(ints(&[0; 5])),
            claim: Claim::Counts { first: 3, second: 2 },
        },
        "br" => Entry {
            stat: induced("br"),
            first: (BR_PI, &[1]),
            second: (BR_SIGMA, &[1]),
            target: Some(ints(&[5, 5, 5, 5, 6, 6, 6, 6, 7])),
            claim: Claim::Counts { first: 4, second: 2 },
        },
        "br_des" => Entry {
            stat: induced("(br,des)"),
            first: (BR_PI, &[1]),
            second: (BR_SIGMA, &[1]),
            target: None,
            claim: Claim::Differ,
        },
        "Lpk" => Entry {
            stat: induced("Lpk"),
            first: (PEAK_PI, &[13]),
            second: (PEAK_PI_PRIME, &[1]),
            target: Some(sets(&[
                &[1, 5, 8, 11],
                &[2, 6, 9, 12],
                &[3, 7, 10],
                &[1, 4, 8, 11],
                &[2, 5, 9, 12],
                &[1, 3, 6, 10],
                &[1, 4, 7, 11],
                &[2, 5, 8, 12],
                &[3, 6, 9],
                &[1, 4, 7, 10],
                &[2, 5, 8, 11],
                &[1, 3, 6, 9, 12],
                &[1, 4, 7, 10],
            ])),
            claim: Claim::PresentAbsent,
        },
        "Epk" => Entry {
            stat: induced("Epk"),
            first: (PEAK_PI, &[13]),
            second: (PEAK_PI_PRIME, &[1]),
            target: Some(sets(&[
                &[1, 4, 7, 10],
                &[1, 4, 8, 11],
                &[2, 5, 8, 11],
                &[2, 5, 8, 12],
                &[2, 5, 9, 12],
                &[2, 6, 9, 12],
                &[3, 6, 9, 13],
                &[3, 7, 10, 13],
                &[1, 3, 6, 9, 12],
                &[1, 3, 6, 10, 13],
                &[1, 4, 7, 10, 13],
                &[1, 4, 7, 11, 13],
                &[1, 5, 8, 11, 13],
            ])),
            claim: Claim::PresentAbsent,
        },
        "lpk" => Entry {
            stat: induced("lpk"),
            first: (LPK_PI, &[2]),
            second: (LPK_SIGMA, &[2]),
            target: Some(ints(&[3; 9])),
            claim: Claim::PresentAbsent,
        },
        "udr" => Entry {
            stat: induced("udr"),
            first: (LPK_PI, &[2]),
            second: (LPK_SIGMA, &[2]),
            target: Some(ints(&[6, 6, 6, 6, 6, 6, 7, 7, 7])),
            claim: Claim::PresentAbsent,
        },
        "lpk_des" => Entry {
            stat: induced("(lpk,des)"),
            first: (LPK_PI, &[2]),
            second: (LPK_SIGMA, &[2]),
            target: Some(rep(&[(int_pair(3, 5), 6), (int_pair(3, 6), 3)])),
            claim: Claim::PresentAbsent,
        },
        "udr_des" => Entry {
            stat: induced("(udr,des)"),
            first: (LPK_PI, &[2]),
            second: (LPK_SIGMA, &[2]),
            target: Some(rep(&[
                (int_pair(6, 5), 3),
                (int_pair(6, 6), 3),
                (int_pair(7, 5), 3),
            ])),
            claim: Claim::PresentAbsent,
        },
        "Pk_Val" => Entry {
            stat: induced("(Pk,Val)"),
            first: (&[2, 1, 4], &[5, 3, 6]),
            second: (&[1, 2, 3], &[5, 4, 6]),
            target: Some(
                [
                    (&[][..], &[][..]),
                    (&[], &[5]),
                    (&[2], &[]),
                    (&[3], &[2]),
                    (&[4], &[3]),
                    (&[5], &[4]),
                ]
                .iter()
                .map(|(a, b)| StatValue::pair(set(a), set(b)))
                .collect(),
            ),
            claim: Claim::PresentAbsent,
        },
        "pk_val" => Entry {
            stat: induced("(pk,val)"),
            first: (&[2, 1, 4], &[5, 3, 6]),
            second: (&[1, 2, 3], &[5, 4, 6]),
            target: Some(rep(&[
                (int_pair(0, 0), 1),
                (int_pair(0, 1), 1),
                (int_pair(1, 0), 1),
                (int_pair(1, 1), 3),
            ])),
            claim: Claim::PresentAbsent,
        },
        _ => return None,
    };
    Some(e)
}

struct Evaluation {
    inputs_agree: bool,
    first_dist: Distribution,
    second_dist: Distribution,
}

fn evaluate(stat: &CycStatId, first: (&Perm, &Perm), second: (&Perm, &Perm)) -> Result<Evaluation> {
    let cyc = |p: &Perm| CycPerm::new(p);
    let inputs_agree = ceval(stat, &cyc(first.0)) == ceval(stat, &cyc(second.0))
        && ceval(stat, &cyc(first.1)) == ceval(stat, &cyc(second.1));
    let first_dist = cyc_distribution(stat, &cyclic_shuffles(&cyc(first.0), &cyc(first.1))?);
    let second_dist = cyc_distribution(stat, &cyclic_shuffles(&cyc(second.0), &cyc(second.1))?);
    Ok(Evaluation {
        inputs_agree,
        first_dist,
        second_dist,
    })
}

/// Replacements of one occurrence of a repeated letter by a missing one,
/// scanning positions left to right and missing letters in increasing order.
fn single_letter_repairs(letters: &[u32]) -> Vec<Vec<u32>> {
    let n = letters.len() as u32;
    let missing: Vec<u32> = (1..=n).filter(|l| !letters.contains(l)).collect();
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        if letters.iter().filter(|&&x| x == *l).count() > 1 {
            for &m in &missing {
                let mut fixed = letters.to_vec();
                fixed[i] = m;
                out.push(fixed);
            }
        }
    }
    out
}

fn show(letters: &[u32]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn multiset_distance(a: &Multiset, b: &Multiset) -> u64 {
    let (x, y): (Vec<_>, Vec<_>) = (a.iter_expanded().collect(), b.iter_expanded().collect());
    let mut common = 0;
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    (x.len() + y.len() - 2 * common) as u64
}

/// Reconstruct the stored example, recompute both distributions and check
/// the printed claim, falling back to a documented repair when the printed
/// data cannot be valid.
pub fn verify_counterexample(name: &str) -> Result<CounterexampleReport> {
    let e = entry(name).ok_or_else(|| Error::CatalogMiss(name.to_string()))?;
    let mut notes = Vec::new();
    let target = e.target.clone().map(StatValue::multiset);

    let second = (Perm::new(e.second.0.to_vec())?, Perm::new(e.second.1.to_vec())?);
    let literal_first = Perm::new(e.first.0.to_vec());
    let sigma = Perm::new(e.first.1.to_vec())?;

    let mut first = match &literal_first {
        Ok(p) => p.clone(),
        Err(err) => {
            notes.push(format!("printed permutation {} rejected: {err}", show(e.first.0)));
            Perm::empty()
        }
    };
    let mut literal_ok = literal_first.is_ok();
    let mut repaired = false;

    let mut eval = if literal_first.is_ok() {
        Some(evaluate(&e.stat, (&first, &sigma), (&second.0, &second.1))?)
    } else {
        None
    };

    let claim_holds = |ev: &Evaluation, t: &Option<StatValue>| -> bool {
        let differ = ev.first_dist != ev.second_dist;
        let counts_ok = match t {
            Some(t) => e.claim.holds(ev.first_dist.count(t), ev.second_dist.count(t)),
            None => true,
        };
        ev.inputs_agree && differ && counts_ok
    };

    if let Some(ev) = &eval {
        literal_ok = claim_holds(ev, &target);
    }

    if eval.is_none() {
        for letters in single_letter_repairs(e.first.0) {
            let candidate = Perm::new(letters).expect("repair yields a permutation");
            let ev = evaluate(&e.stat, (&candidate, &sigma), (&second.0, &second.1))?;
            if claim_holds(&ev, &target) {
                notes.push(format!("repaired to {candidate} by a single-letter substitution"));
                first = candidate;
                eval = Some(ev);
                repaired = true;
                break;
            }
        }
    }

    let mut final_target = target.clone();
    if let (Some(ev), Some(StatValue::Multiset(printed))) = (&eval, &target) {
        if !repaired && !literal_ok && ev.inputs_agree && ev.first_dist != ev.second_dist {
            let first_count = ev.first_dist.count(target.as_ref().unwrap());
            let second_count = ev.second_dist.count(target.as_ref().unwrap());
            notes.push(format!(
                "printed multiset {printed} occurs {first_count} vs {second_count} times"
            ));
            if let Some(sum) = sum_rule_violation(&e.stat, printed, first.len() + sigma.len()) {
                notes.push(sum);
            }
            let nearest = ev
                .first_dist
                .entries()
                .iter()
                .filter(|(v, c)| *c > 0 && e.claim.holds(*c, ev.second_dist.count(v)))
                .filter_map(|(v, _)| v.as_multiset().map(|m| (multiset_distance(m, printed), v)))
                .min();
            if let Some((dist, v)) = nearest {
                notes.push(format!(
                    "nearest separating multiset (distance {dist}): {v}"
                ));
                final_target = Some(v.clone());
                repaired = true;
            }
        }
    }

    let ev = eval.ok_or_else(|| {
        Error::InvalidPerm(format!("no valid repair of {} found", show(e.first.0)))
    })?;
    let target_counts = final_target
        .as_ref()
        .map(|t| (ev.first_dist.count(t), ev.second_dist.count(t)));
    let confirmed = claim_holds(&ev, &final_target);

    Ok(CounterexampleReport {
        name: name.to_string(),
        stat: e.stat.name(),
        first: (first.to_string(), sigma.to_string()),
        second: (second.0.to_string(), second.1.to_string()),
        claim: e.claim,
        target: final_target,
        target_counts,
        inputs_agree: ev.inputs_agree,
        distributions_differ: ev.first_dist != ev.second_dist,
        first_difference: ev.first_dist.first_difference(&ev.second_dist),
        literal_ok,
        repaired,
        notes,
        confirmed,
    })
}

/// For the induced cmaj statistic every element of a cyclic shuffle
/// distribution sums to `C(n, 2) * cdes`; explain when a printed multiset
/// cannot.
fn sum_rule_violation(stat: &CycStatId, printed: &Multiset, n: usize) -> Option<String> {
    if *stat != CycStatId::Induced(StatId::CmajL) {
        return None;
    }
    let sum: i64 = printed.iter_expanded().filter_map(|v| v.as_int()).sum();
    let unit = (n * (n + 1) / 2) as i64;
    (sum % unit != 0).then(|| {
        format!("its sum {sum} is not a multiple of C({},2) = {unit}", n + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert_eq!(
            verify_counterexample("nope"),
            Err(Error::CatalogMiss("nope".into()))
        );
    }

    #[test]
    fn ddes_counts() {
        let r = verify_counterexample("Ddes").unwrap();
        assert!(r.literal_ok && r.confirmed && !r.repaired);
        assert_eq!(r.target_counts, Some((3, 2)));
    }

    #[test]
    fn pk_val_small() {
        let r = verify_counterexample("pk_val").unwrap();
        assert!(r.literal_ok && r.confirmed);
        let r = verify_counterexample("Pk_Val").unwrap();
        assert!(r.literal_ok && r.confirmed);
    }

    #[test]
    fn repairs_enumerate_in_order() {
        let r = single_letter_repairs(&[2, 1, 2]);
        assert_eq!(r, vec![vec![3, 1, 2], vec![2, 1, 3]]);
    }
}
