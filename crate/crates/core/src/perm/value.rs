use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::util::least_rotation;

/// Value of a linear or cyclic statistic, always held in canonical form so
/// that derived equality and ordering are meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatValue {
    Int(i64),
    /// Ascending.
    IntSet(Vec<u32>),
    Comp(Vec<u32>),
    Pair(Box<StatValue>, Box<StatValue>),
    Multiset(Multiset),
    /// Stored as its lexicographically least rotation.
    CycWord(Vec<i64>),
}

impl StatValue {
    pub fn set(mut elems: Vec<u32>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        StatValue::IntSet(elems)
    }

    pub fn pair(a: StatValue, b: StatValue) -> Self {
        StatValue::Pair(Box::new(a), Box::new(b))
    }

    pub fn cyc_word(word: &[i64]) -> Self {
        StatValue::CycWord(least_rotation(word))
    }

    pub fn multiset<I: IntoIterator<Item = StatValue>>(items: I) -> Self {
        StatValue::Multiset(items.into_iter().collect())
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            StatValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_multiset(&self) -> Option<&Multiset> {
        match self {
            StatValue::Multiset(m) => Some(m),
            _ => None,
        }
    }
}

impl From<i64> for StatValue {
    fn from(v: i64) -> Self {
        StatValue::Int(v)
    }
}

/// A finite multiset, stored as a sorted list of `(value, multiplicity)`
/// with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset(Vec<(StatValue, u64)>);

impl Multiset {
    pub fn new() -> Self {
        Multiset(Vec::new())
    }

    pub fn from_counts(counts: BTreeMap<StatValue, u64>) -> Self {
        Multiset(counts.into_iter().filter(|(_, c)| *c > 0).collect())
    }

    pub fn entries(&self) -> &[(StatValue, u64)] {
        &self.0
    }

    pub fn count(&self, value: &StatValue) -> u64 {
        self.0
            .binary_search_by(|(v, _)| v.cmp(value))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|(_, c)| c).sum()
    }

    /// Number of distinct elements.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elements with multiplicity, in ascending order.
    pub fn iter_expanded(&self) -> impl Iterator<Item = &StatValue> {
        self.0
            .iter()
            .flat_map(|(v, c)| std::iter::repeat_n(v, *c as usize))
    }

    /// First value (in canonical order) whose multiplicities differ, with the
    /// two counts.
    pub fn first_difference(&self, other: &Multiset) -> Option<(StatValue, u64, u64)> {
        let keys: Vec<&StatValue> = self
            .0
            .iter()
            .map(|(v, _)| v)
            .merge(other.0.iter().map(|(v, _)| v))
            .dedup()
            .collect();
        keys.into_iter().find_map(|v| {
            let (a, b) = (self.count(v), other.count(v));
            (a != b).then(|| (v.clone(), a, b))
        })
    }
}

impl FromIterator<StatValue> for Multiset {
    fn from_iter<I: IntoIterator<Item = StatValue>>(iter: I) -> Self {
        let mut counts = BTreeMap::new();
        for v in iter {
            *counts.entry(v).or_insert(0) += 1;
        }
        Multiset::from_counts(counts)
    }
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(v) => write!(f, "{v}"),
            StatValue::IntSet(s) => write!(f, "{{{}}}", s.iter().join(",")),
            StatValue::Comp(c) => write!(f, "({})", c.iter().join(",")),
            StatValue::Pair(a, b) => write!(f, "({a},{b})"),
            StatValue::Multiset(m) => write!(f, "{m}"),
            StatValue::CycWord(w) => write!(f, "[{}]", w.iter().join(",")),
        }
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .0
            .iter()
            .map(|(v, c)| {
                if *c == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{c}")
                }
            })
            .join(", ");
        write!(f, "{{{{{body}}}}}")
    }
}

impl Serialize for StatValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StatValue::Int(v) => s.serialize_i64(*v),
            StatValue::IntSet(v) | StatValue::Comp(v) => v.serialize(s),
            StatValue::CycWord(w) => w.serialize(s),
            StatValue::Pair(a, b) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(a)?;
                seq.serialize_element(b)?;
                seq.end()
            }
            StatValue::Multiset(m) => m.serialize(s),
        }
    }
}

struct Entry<'a>(&'a StatValue, u64);

impl Serialize for Entry<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("value", self.0)?;
        map.serialize_entry("count", &self.1)?;
        map.end()
    }
}

impl Serialize for Multiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|(v, c)| Entry(v, *c)))
    }
}
