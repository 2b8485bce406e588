//! Exhaustive deciders for shuffle-compatibility, cyclic
//! shuffle-compatibility, refinement and equivalence of statistics, and the
//! lifting-lemma conditions.

pub mod catalog;
mod claims;
mod lifting;

pub use catalog::{verify_counterexample, CounterexampleReport, CATALOG_NAMES};
pub use claims::{expected_csc, expected_equiv, expected_sc};
pub use lifting::{lifting_bijection, lifting_check, LiftingReport};

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::perm::{eval, Perm, StatId, StatValue, Symmetry};
use crate::shuffle::{cyc_distribution, cyclic_shuffles_unchecked, distribution, shuffles_unchecked, Distribution};

/// Two disjoint permutations whose letters partition `[m+n]`: the letters in
/// `letter_split` arranged like `pattern_p`, the rest arranged like
/// `pattern_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternPair {
    pub pattern_p: Perm,
    pub pattern_q: Perm,
    pub letter_split: Vec<u32>,
}

impl PatternPair {
    pub fn m(&self) -> usize {
        self.pattern_p.len()
    }

    pub fn n(&self) -> usize {
        self.pattern_q.len()
    }

    pub fn instantiate(&self) -> (Perm, Perm) {
        let total = (self.m() + self.n()) as u32;
        let rest: Vec<u32> = (1..=total)
            .filter(|l| !self.letter_split.contains(l))
            .collect();
        let place = |pat: &Perm, letters: &[u32]| {
            Perm::from_vec_unchecked(
                pat.letters()
                    .iter()
                    .map(|&r| letters[r as usize - 1])
                    .collect(),
            )
        };
        (
            place(&self.pattern_p, &self.letter_split),
            place(&self.pattern_q, &rest),
        )
    }
}

impl fmt::Display for PatternPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.instantiate();
        write!(f, "{p} | {q}")
    }
}

/// Pattern pairs of shape `(m, n)`: letter split in lexicographic order,
/// then `pattern_p`, then `pattern_q`. With `rooted`, both patterns are
/// restricted to those starting with 1, which picks one linear
/// representative per cyclic class.
pub fn pattern_pairs(m: usize, n: usize, rooted: bool) -> impl Iterator<Item = PatternPair> {
    let patterns = move |k: usize| -> Vec<Perm> {
        if rooted {
            Perm::all_rooted(k).collect()
        } else {
            Perm::all(k).collect()
        }
    };
    let (ps, qs) = (patterns(m), patterns(n));
    (1..=(m + n) as u32).combinations(m).flat_map(move |split| {
        let qs = qs.clone();
        ps.clone().into_iter().flat_map(move |pp| {
            let split = split.clone();
            qs.clone().into_iter().map(move |pq| PatternPair {
                pattern_p: pp.clone(),
                pattern_q: pq,
                letter_split: split.clone(),
            })
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Compatible,
    Incompatible,
}

/// Two pattern pairs with equal statistic values on each side whose
/// shuffle distributions differ at `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatWitness {
    pub first: (String, String),
    pub second: (String, String),
    pub value: StatValue,
    pub count_first: u64,
    pub count_second: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub stat: String,
    pub cyclic: bool,
    pub verdict: Verdict,
    pub max_checked: usize,
    pub pairs_checked: u64,
    pub witness: Option<CompatWitness>,
}

impl CompatReport {
    pub fn is_compatible(&self) -> bool {
        self.verdict == Verdict::Compatible
    }
}

type GroupKey = (StatValue, StatValue);

/// Shapes `(m, n)` with `m, n >= 1` and `m + n <= max_n`, by size then `m`.
pub fn shapes_up_to(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n)
        .flat_map(|s| (1..s).map(move |m| (m, s - m)))
        .collect()
}

/// Shared driver: walks the shapes in order, groups pairs by their values
/// and compares each distribution with the first one seen in its group.
fn check_generic<K, D>(
    shapes: &[(usize, usize)],
    rooted: bool,
    key: K,
    dist: D,
) -> (u64, Option<CompatWitness>)
where
    K: Fn(&Perm, &Perm) -> GroupKey,
    D: Fn(&Perm, &Perm) -> Distribution,
{
    let mut checked = 0;
    for &(m, n) in shapes {
        {
            let mut groups: HashMap<GroupKey, (PatternPair, Distribution)> = HashMap::new();
            for pair in pattern_pairs(m, n, rooted) {
                checked += 1;
                let (p, q) = pair.instantiate();
                let d = dist(&p, &q);
                match groups.get(&key(&p, &q)) {
                    None => {
                        groups.insert(key(&p, &q), (pair, d));
                    }
                    Some((first, d0)) => {
                        if let Some((value, a, b)) = d0.first_difference(&d) {
                            let (p0, q0) = first.instantiate();
                            return (
                                checked,
                                Some(CompatWitness {
                                    first: (p0.to_string(), q0.to_string()),
                                    second: (p.to_string(), q.to_string()),
                                    value,
                                    count_first: a,
                                    count_second: b,
                                }),
                            );
                        }
                    }
                }
            }
        }
    }
    (checked, None)
}

fn report(stat: String, cyclic: bool, max_n: usize, res: (u64, Option<CompatWitness>)) -> CompatReport {
    CompatReport {
        stat,
        cyclic,
        verdict: if res.1.is_some() {
            Verdict::Incompatible
        } else {
            Verdict::Compatible
        },
        max_checked: max_n,
        pairs_checked: res.0,
        witness: res.1,
    }
}

/// Shuffle-compatibility of `st` over all pairs with `m + n <= max_n`.
pub fn check_sc(st: &StatId, max_n: usize) -> CompatReport {
    let res = check_generic(
        &shapes_up_to(max_n),
        false,
        |p, q| (eval(st, p), eval(st, q)),
        |p, q| distribution(st, &shuffles_unchecked(p.letters(), q.letters())),
    );
    report(st.name(), false, max_n, res)
}

/// Cyclic shuffle-compatibility of `cst` over all pairs of cyclic
/// permutations with `m + n <= max_n`.
pub fn check_csc(cst: &CycStatId, max_n: usize) -> CompatReport {
    let mut r = check_csc_shapes(cst, &shapes_up_to(max_n));
    r.max_checked = max_n;
    r
}

/// [`check_csc`] restricted to the listed shapes; `max_checked` is the
/// largest size among them.
pub fn check_csc_shapes(cst: &CycStatId, shapes: &[(usize, usize)]) -> CompatReport {
    let max_n = shapes.iter().map(|(m, n)| m + n).max().unwrap_or(0);
    let res = check_generic(
        shapes,
        true,
        |p, q| (ceval(cst, &CycPerm::new(p)), ceval(cst, &CycPerm::new(q))),
        |p, q| {
            cyc_distribution(
                cst,
                &cyclic_shuffles_unchecked(&CycPerm::new(p), &CycPerm::new(q)),
            )
        },
    );
    report(cst.name(), true, max_n, res)
}

/// Recompute both distributions of a witness and check they differ as
/// recorded.
pub fn replay_witness(cst: &CycStatId, w: &CompatWitness) -> crate::Result<bool> {
    let dist = |pq: &(String, String)| -> crate::Result<Distribution> {
        let (p, q): (CycPerm, CycPerm) = (pq.0.parse()?, pq.1.parse()?);
        Ok(cyc_distribution(cst, &crate::shuffle::cyclic_shuffles(&p, &q)?))
    };
    let (a, b) = (dist(&w.first)?, dist(&w.second)?);
    Ok(a.count(&w.value) == w.count_first && b.count(&w.value) == w.count_second && a != b)
}

/// Linear counterpart of [`replay_witness`].
pub fn replay_linear_witness(st: &StatId, w: &CompatWitness) -> crate::Result<bool> {
    let dist = |pq: &(String, String)| -> crate::Result<Distribution> {
        let (p, q): (Perm, Perm) = (pq.0.parse()?, pq.1.parse()?);
        Ok(distribution(st, &crate::shuffle::shuffles(&p, &q)?))
    };
    let (a, b) = (dist(&w.first)?, dist(&w.second)?);
    Ok(a.count(&w.value) == w.count_first && b.count(&w.value) == w.count_second && a != b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equivalent,
    Refines,
}

/// Two objects that agree on the first statistic but not on the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivWitness {
    pub first: String,
    pub second: String,
    /// Which statistic they agree on.
    pub agree_on: String,
    pub differ_on: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivReport {
    pub left: String,
    pub right: String,
    pub relation: Relation,
    pub holds: bool,
    pub max_checked: usize,
    pub objects_checked: u64,
    pub witness: Option<EquivWitness>,
}

/// First pair of items with equal `f` values but different `g` values.
fn refinement_failure<T>(
    items: &[T],
    f: impl Fn(&T) -> StatValue,
    g: impl Fn(&T) -> StatValue,
) -> Option<(usize, usize)> {
    let mut seen: HashMap<StatValue, (usize, StatValue)> = HashMap::new();
    for (i, item) in items.iter().enumerate() {
        let gv = g(item);
        match seen.get(&f(item)) {
            Some((j, g0)) if *g0 != gv => return Some((*j, i)),
            Some(_) => {}
            None => {
                seen.insert(f(item), (i, gv));
            }
        }
    }
    None
}

fn partition_report<T: fmt::Display>(
    left: String,
    right: String,
    relation: Relation,
    max_n: usize,
    per_n: impl Fn(usize) -> Vec<T>,
    f: impl Fn(&T) -> StatValue,
    g: impl Fn(&T) -> StatValue,
) -> EquivReport {
    let mut checked = 0;
    let mut witness = None;
    for n in 1..=max_n {
        let items = per_n(n);
        checked += items.len() as u64;
        let mut found = refinement_failure(&items, &f, &g).map(|ij| (ij, &left, &right));
        if found.is_none() && relation == Relation::Equivalent {
            found = refinement_failure(&items, &g, &f).map(|ij| (ij, &right, &left));
        }
        if let Some(((i, j), agree, differ)) = found {
            witness = Some(EquivWitness {
                first: items[i].to_string(),
                second: items[j].to_string(),
                agree_on: agree.clone(),
                differ_on: differ.clone(),
            });
            break;
        }
    }
    EquivReport {
        left,
        right,
        relation,
        holds: witness.is_none(),
        max_checked: max_n,
        objects_checked: checked,
        witness,
    }
}

fn cyclic_partition(a: &CycStatId, b: &CycStatId, relation: Relation, max_n: usize) -> EquivReport {
    partition_report(
        a.name(),
        b.name(),
        relation,
        max_n,
        |n| CycPerm::all(n).collect(),
        |c| ceval(a, c),
        |c| ceval(b, c),
    )
}

/// Whether `a` and `b` induce the same partition of cyclic permutations of
/// each length up to `max_n`.
pub fn check_equiv(a: &CycStatId, b: &CycStatId, max_n: usize) -> EquivReport {
    cyclic_partition(a, b, Relation::Equivalent, max_n)
}

/// Whether equal `a` values force equal `b` values.
pub fn check_refines(a: &CycStatId, b: &CycStatId, max_n: usize) -> EquivReport {
    cyclic_partition(a, b, Relation::Refines, max_n)
}

/// Whether `st1(π^f) = st1(σ^f)` exactly when `st2(π) = st2(σ)`, over all
/// permutations of each length up to `max_n`.
pub fn check_f_equiv(st1: &StatId, st2: &StatId, f: Symmetry, max_n: usize) -> EquivReport {
    partition_report(
        format!("{}∘{}", st1.name(), f),
        st2.name(),
        Relation::Equivalent,
        max_n,
        |n| Perm::all(n).collect(),
        |p| eval(st1, &p.apply(f)),
        |p| eval(st2, p),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{binomial, factorial};

    #[test]
    fn pattern_pair_counts() {
        for s in 2..=6usize {
            for m in 1..s {
                let n = s - m;
                let count = pattern_pairs(m, n, false).count() as u64;
                let expected = factorial(m as u64) * factorial(n as u64) * binomial(s as u64, m as u64);
                assert_eq!(count, u64::try_from(expected).unwrap());
            }
        }
    }

    #[test]
    fn pattern_pairs_partition_letters() {
        for pair in pattern_pairs(2, 3, false) {
            let (p, q) = pair.instantiate();
            assert!(p.is_disjoint(&q));
            assert_eq!(p.standardize(), pair.pattern_p);
            assert_eq!(q.standardize(), pair.pattern_q);
            let mut all: Vec<u32> = p.letters().iter().chain(q.letters()).copied().collect();
            all.sort_unstable();
            assert_eq!(all, vec![1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn linear_checks() {
        assert!(check_sc(&StatId::DesSet, 5).is_compatible());
        let r = check_sc(&StatId::Ddes, 5);
        assert_eq!(r.verdict, Verdict::Incompatible);
        assert!(replay_linear_witness(&StatId::Ddes, r.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn cyclic_checks() {
        assert!(check_csc(&CycStatId::CDes, 5).is_compatible());
        let ddes = CycStatId::Induced(StatId::DdesSet);
        let r = check_csc(&ddes, 5);
        assert_eq!(r.verdict, Verdict::Incompatible);
        assert!(replay_witness(&ddes, r.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn small_equivalences() {
        let des: CycStatId = "ind:des".parse().unwrap();
        assert!(check_equiv(&des, &CycStatId::Cdes, 5).holds);
        assert!(check_refines(&CycStatId::CDes, &CycStatId::Cpk, 5).holds);
        let r = check_refines(&CycStatId::Cpk, &CycStatId::CDes, 5);
        assert!(!r.holds);
        assert!(r.witness.is_some());
        assert!(check_f_equiv(&StatId::PkSet, &StatId::ValSet, Symmetry::Complement, 5).holds);
        assert!(!check_f_equiv(&StatId::PkSet, &StatId::ValSet, Symmetry::Reverse, 5).holds);
    }
}
