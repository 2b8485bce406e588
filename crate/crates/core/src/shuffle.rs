//! Shuffles, descent-constrained shuffles, cyclic shuffles and
//! distributions of statistics over them.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::error::Result;
use crate::perm::{eval, Multiset, Perm, StatId, StatValue};

/// All interleavings of `p` and `q`. The positions taken by `p` run through
/// the `m`-subsets of `[m+n]` in lexicographic order, so `71 ⧢ 25` comes out
/// as `7125, 7215, 7251, 2715, 2751, 2571`.
pub fn shuffles(p: &Perm, q: &Perm) -> Result<Vec<Perm>> {
    p.check_disjoint(q)?;
    Ok(shuffles_unchecked(p.letters(), q.letters()))
}

pub(crate) fn shuffles_unchecked(p: &[u32], q: &[u32]) -> Vec<Perm> {
    let (m, n) = (p.len(), q.len());
    (0..m + n)
        .combinations(m)
        .map(|positions| {
            let mut out = Vec::with_capacity(m + n);
            let (mut i, mut j) = (0, 0);
            for slot in 0..m + n {
                if i < m && positions[i] == slot {
                    out.push(p[i]);
                    i += 1;
                } else {
                    out.push(q[j]);
                    j += 1;
                }
            }
            Perm::from_vec_unchecked(out)
        })
        .collect()
}

/// Shuffles with exactly `k` descents.
pub fn shuffles_with_des(p: &Perm, q: &Perm, k: i64) -> Result<Vec<Perm>> {
    Ok(shuffles(p, q)?
        .into_iter()
        .filter(|t| eval(&StatId::Des, t) == StatValue::Int(k))
        .collect())
}

/// Cyclic classes containing a shuffle of some rotation of `a` with some
/// rotation of `b`, sorted by canonical representative.
pub fn cyclic_shuffles(a: &CycPerm, b: &CycPerm) -> Result<Vec<CycPerm>> {
    a.rep().check_disjoint(b.rep())?;
    Ok(cyclic_shuffles_unchecked(a, b))
}

pub(crate) fn cyclic_shuffles_unchecked(a: &CycPerm, b: &CycPerm) -> Vec<CycPerm> {
    let mut out = BTreeSet::new();
    let rots_b = b.orbit();
    for ra in a.orbit() {
        for rb in &rots_b {
            for t in shuffles_unchecked(ra.letters(), rb.letters()) {
                out.insert(CycPerm::new(&t));
            }
        }
    }
    out.into_iter().collect()
}

/// Multiset of statistic values over a finite set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Distribution(Multiset);

impl Distribution {
    pub fn entries(&self) -> &[(StatValue, u64)] {
        self.0.entries()
    }

    pub fn total(&self) -> u64 {
        self.0.total()
    }

    pub fn count(&self, value: &StatValue) -> u64 {
        self.0.count(value)
    }

    pub fn as_multiset(&self) -> &Multiset {
        &self.0
    }

    pub fn first_difference(&self, other: &Distribution) -> Option<(StatValue, u64, u64)> {
        self.0.first_difference(&other.0)
    }
}

impl FromIterator<StatValue> for Distribution {
    fn from_iter<I: IntoIterator<Item = StatValue>>(iter: I) -> Self {
        Distribution(iter.into_iter().collect())
    }
}

impl std::fmt::Display for Distribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn distribution<'a, I>(st: &StatId, perms: I) -> Distribution
where
    I: IntoIterator<Item = &'a Perm>,
{
    perms.into_iter().map(|p| eval(st, p)).collect()
}

pub fn cyc_distribution<'a, I>(cst: &CycStatId, classes: I) -> Distribution
where
    I: IntoIterator<Item = &'a CycPerm>,
{
    classes.into_iter().map(|c| ceval(cst, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::binomial;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_order_of_worked_example() {
        let got: Vec<String> = shuffles(&p("71"), &p("25"))
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, ["7125", "7215", "7251", "2715", "2751", "2571"]);
        assert_eq!(shuffles(&p("312"), &Perm::empty()).unwrap(), vec![p("312")]);
        assert!(shuffles(&p("12"), &p("23")).is_err());
    }

    #[test]
    fn cyclic_shuffle_example() {
        let got: BTreeSet<CycPerm> =
            cyclic_shuffles(&"63".parse().unwrap(), &"24".parse().unwrap())
                .unwrap()
                .into_iter()
                .collect();
        let want: BTreeSet<CycPerm> = ["6324", "6234", "6243", "6342", "6432", "6423"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            cyclic_shuffles(&"1".parse().unwrap(), &"2".parse().unwrap())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn des_filter_partitions() {
        let (a, b) = (p("31"), p("524"));
        let all = shuffles(&a, &b).unwrap();
        let total: usize = (0..=5)
            .map(|k| shuffles_with_des(&a, &b, k).unwrap().len())
            .sum();
        assert_eq!(total, all.len());
        assert!(shuffles_with_des(&a, &b, -1).unwrap().is_empty());
        assert_eq!(num_bigint::BigInt::from(all.len()), binomial(5, 2));
    }

    #[test]
    fn des_distribution_s3() {
        let s3: Vec<Perm> = Perm::all(3).collect();
        let d = distribution(&StatId::Des, &s3);
        assert_eq!(d.to_string(), "{{0, 1^4, 2}}");
        assert_eq!(d.total(), 6);
        assert_eq!(distribution(&StatId::Des, &[]).total(), 0);
    }
}
