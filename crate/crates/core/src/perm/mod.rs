//! Linear permutations over arbitrary distinct positive letters, their
//! symmetries, descent compositions and the registry of linear statistics.

pub(crate) mod stats;
mod value;

pub use stats::{eval, eval_named, StatId};
pub use value::{Multiset, StatValue};

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A composition: a sequence of positive parts.
pub type Composition = Vec<u32>;

/// A sequence of distinct positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

/// The three length-preserving involutions studied alongside shuffles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    ReverseComplement,
}

impl Perm {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(&z) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::InvalidPerm(format!("letter {z} is not positive")));
        }
        let mut seen = letters.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPerm(format!("letter {} repeats", w[0])));
        }
        Ok(Perm(letters))
    }

    /// Caller guarantees distinct positive letters.
    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(Perm::new(letters.clone()).is_ok());
        Perm(letters)
    }

    pub fn empty() -> Self {
        Perm(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_letter(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn contains(&self, letter: u32) -> bool {
        self.0.contains(&letter)
    }

    pub fn is_disjoint(&self, other: &Perm) -> bool {
        self.0.iter().all(|l| !other.0.contains(l))
    }

    /// Fails with `NotDisjoint` naming the first shared letter.
    pub fn check_disjoint(&self, other: &Perm) -> Result<()> {
        match self.0.iter().find(|l| other.0.contains(l)) {
            Some(&l) => Err(Error::NotDisjoint(l)),
            None => Ok(()),
        }
    }

    /// Relabel letters to `1..=n` keeping their relative order.
    pub fn standardize(&self) -> Perm {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        Perm(
            self.0
                .iter()
                .map(|l| sorted.binary_search(l).unwrap() as u32 + 1)
                .collect(),
        )
    }

    pub fn reversal(&self) -> Perm {
        Perm(self.0.iter().rev().copied().collect())
    }

    /// Swap the i-th smallest and i-th largest letters.
    pub fn complement(&self) -> Perm {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let n = sorted.len();
        Perm(
            self.0
                .iter()
                .map(|l| sorted[n - 1 - sorted.binary_search(l).unwrap()])
                .collect(),
        )
    }

    pub fn apply(&self, f: Symmetry) -> Perm {
        match f {
            Symmetry::Reverse => self.reversal(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reversal().complement(),
        }
    }

    /// The rotation moving the last `k` letters to the front.
    pub fn rotate_right(&self, k: usize) -> Perm {
        let n = self.len();
        if n == 0 {
            return Perm::empty();
        }
        let k = k % n;
        Perm(self.0[n - k..].iter().chain(&self.0[..n - k]).copied().collect())
    }

    /// Letters shifted by `offset`.
    pub fn shifted(&self, offset: u32) -> Perm {
        Perm(self.0.iter().map(|l| l + offset).collect())
    }

    /// Descent composition: lengths of the maximal increasing runs.
    pub fn descent_composition(&self) -> Composition {
        let des = stats::descent_set(&self.0);
        comp_of_set(&des, self.len() as u32).expect("descents lie in [n-1]")
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        (1..=n as u32).permutations(n).map(Perm)
    }

    /// All permutations of `[n]` whose first letter is 1, in lexicographic
    /// order: one representative per rotation class.
    pub fn all_rooted(n: usize) -> Box<dyn Iterator<Item = Perm>> {
        if n == 0 {
            return Box::new(std::iter::once(Perm::empty()));
        }
        Box::new(
            (2..=n as u32)
                .permutations(n - 1)
                .map(|rest| Perm(std::iter::once(1).chain(rest).collect())),
        )
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 10) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(" "))
        }
    }
}

/// Accepts whitespace- or comma-separated letters; a string with no
/// separators is read one digit per letter, so `"179624"` is length 6 and
/// the single letter 11 is written `"11,"`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        let letters: Vec<u32> = if !separated && s.len() > 1 {
            tokens[0]
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("`{c}` is not a digit")))
                })
                .collect::<Result<_>>()?
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("`{t}` is not a positive integer")))
                })
                .collect::<Result<_>>()?
        };
        Perm::new(letters)
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" => Ok(Symmetry::Reverse),
            "c" => Ok(Symmetry::Complement),
            "rc" | "cr" => Ok(Symmetry::ReverseComplement),
            other => Err(Error::Parse(format!("unknown symmetry `{other}`"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Reverse => "r",
            Symmetry::Complement => "c",
            Symmetry::ReverseComplement => "rc",
        })
    }
}

/// `Comp S` for `S ⊆ [n-1]`.
pub fn comp_of_set(set: &[u32], n: u32) -> Result<Composition> {
    if n == 0 {
        return match set.first() {
            Some(&e) => Err(Error::ElementOutOfRange { elem: e, max: 0 }),
            None => Ok(Vec::new()),
        };
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::ElementOutOfRange { elem: bad, max: n - 1 });
    }
    let mut parts = Vec::with_capacity(sorted.len() + 1);
    let mut prev = 0;
    for s in sorted {
        parts.push(s - prev);
        prev = s;
    }
    parts.push(n - prev);
    Ok(parts)
}

/// `Des L`: partial sums of all parts but the last.
pub fn des_of_comp(comp: &[u32]) -> Vec<u32> {
    let mut acc = 0;
    let mut out = Vec::new();
    for &p in comp.iter().take(comp.len().saturating_sub(1)) {
        acc += p;
        out.push(acc);
    }
    out
}

/// Permutation of `[n]` with the given descent set: the increasing runs are
/// laid out as blocks of consecutive values, highest block first.
pub fn perm_with_descent_set(n: u32, set: &[u32]) -> Result<Perm> {
    let comp = comp_of_set(set, n)?;
    let mut top = n;
    let mut letters = Vec::with_capacity(n as usize);
    for part in comp {
        letters.extend(top - part + 1..=top);
        top -= part;
    }
    Ok(Perm(letters))
}
