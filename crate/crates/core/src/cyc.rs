//! Cyclic permutations, induced multiset statistics, cyclic descent
//! compositions, the ordered cyclic major index and the lifting maps.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::stats::{split_top_level, strip_parens};
use crate::perm::{eval, Perm, StatId, StatValue};
use crate::util::least_rotation;

/// Rotation class of a permutation, held by the rotation that starts with
/// its minimum letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycPerm {
    rep: Perm,
}

impl CycPerm {
    pub fn new(p: &Perm) -> Self {
        let rep = match p.letters().iter().position_min() {
            Some(i) => p.rotate_right(p.len() - i),
            None => Perm::empty(),
        };
        CycPerm { rep }
    }

    pub fn rep(&self) -> &Perm {
        &self.rep
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    /// All `n` rotations, starting from the canonical representative.
    pub fn orbit(&self) -> Vec<Perm> {
        rotations_from(&self.rep)
    }

    /// `start, start', start'', ...` where each step moves the last letter to
    /// the front.
    pub fn rotations_ordered(&self, start: &Perm) -> Result<Vec<Perm>> {
        if CycPerm::new(start) != *self {
            return Err(Error::NotInOrbit(start.to_string()));
        }
        Ok(rotations_from(start))
    }

    /// The orbit member starting with `letter`.
    pub fn lift_s(&self, letter: u32) -> Result<Perm> {
        let i = self
            .rep
            .letters()
            .iter()
            .position(|&l| l == letter)
            .ok_or(Error::NotALetter(letter))?;
        Ok(self.rep.rotate_right(self.len() - i))
    }

    /// The orbit member starting with the maximum letter, with that letter
    /// removed.
    pub fn lift_m(&self) -> Result<Perm> {
        let max = self
            .rep
            .max_letter()
            .ok_or_else(|| Error::InvalidPerm("lift_M needs a nonempty cyclic permutation".into()))?;
        let lifted = self.lift_s(max)?;
        Ok(Perm::from_vec_unchecked(lifted.letters()[1..].to_vec()))
    }

    /// All cyclic permutations of `[n]`, one per class, in lexicographic
    /// order of their representatives.
    pub fn all(n: usize) -> impl Iterator<Item = CycPerm> {
        Perm::all_rooted(n).map(|rep| CycPerm { rep })
    }

    pub fn apply(&self, f: crate::perm::Symmetry) -> CycPerm {
        CycPerm::new(&self.rep.apply(f))
    }
}

fn rotations_from(start: &Perm) -> Vec<Perm> {
    if start.is_empty() {
        return vec![Perm::empty()];
    }
    let mut out = Vec::with_capacity(start.len());
    let mut cur = start.clone();
    for _ in 0..start.len() {
        let next = cur.rotate_right(1);
        out.push(cur);
        cur = next;
    }
    out
}

impl From<Perm> for CycPerm {
    fn from(p: Perm) -> Self {
        CycPerm::new(&p)
    }
}

impl fmt::Display for CycPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl FromStr for CycPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(s);
        Ok(CycPerm::new(&inner.parse()?))
    }
}

/// A composition up to cyclic shift, stored as its least rotation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycComposition(Vec<u32>);

impl CycComposition {
    pub fn new(parts: &[u32]) -> Self {
        CycComposition(least_rotation(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_value(&self) -> StatValue {
        StatValue::CycWord(self.0.iter().map(|&p| p as i64).collect())
    }
}

impl fmt::Display for CycComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// A cyclic statistic: an induced multiset or one of the intrinsic ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycStatId {
    Induced(StatId),
    Cdes,
    Cpk,
    Cval,
    Cbr,
    CComp,
    CDes,
    CPk,
    Ocmaj,
    Pair(Box<CycStatId>, Box<CycStatId>),
}

impl CycStatId {
    pub fn pair(a: CycStatId, b: CycStatId) -> Self {
        CycStatId::Pair(Box::new(a), Box::new(b))
    }

    pub fn induced(name: &str) -> Result<Self> {
        Ok(CycStatId::Induced(parse_induced(name)?))
    }

    pub fn name(&self) -> String {
        match self {
            CycStatId::Induced(StatId::Pair(a, b)) => format!("ind:({},{})", a.name(), b.name()),
            CycStatId::Induced(st) => format!("ind:{}", st.name()),
            CycStatId::Cdes => "cdes".into(),
            CycStatId::Cpk => "cpk".into(),
            CycStatId::Cval => "cval".into(),
            CycStatId::Cbr => "cbr".into(),
            CycStatId::CComp => "cComp".into(),
            CycStatId::CDes => "cDes".into(),
            CycStatId::CPk => "cPk".into(),
            CycStatId::Ocmaj => "ocmaj".into(),
            CycStatId::Pair(a, b) => format!("({},{})", a.name(), b.name()),
        }
    }
}

impl fmt::Display for CycStatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Inside `ind:` a cyclic linear-representative statistic may drop its
/// trailing `L`, so `ind:cmaj` means `ind:cmajL`.
fn parse_induced(s: &str) -> Result<StatId> {
    let s = strip_parens(s);
    if let Some((a, b)) = split_top_level(s) {
        return Ok(StatId::pair(parse_induced(a)?, parse_induced(b)?));
    }
    StatId::lookup(s)
        .or_else(|| StatId::lookup(&format!("{s}L")))
        .ok_or_else(|| Error::UnknownStat(format!("ind:{s}")))
}

/// Accepted forms: `cdes`, `cpk`, `cval`, `cbr`, `cComp`, `cDes`, `cPk`,
/// `ocmaj`, `ind:<linear name>`, `ind:(a,b)` for an induced pair, and
/// comma-joined pairs of any of these.
impl FromStr for CycStatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = strip_parens(s);
        if let Some((a, b)) = split_top_level(s) {
            return Ok(CycStatId::pair(a.parse()?, b.parse()?));
        }
        if let Some(rest) = s.strip_prefix("ind:") {
            return CycStatId::induced(rest);
        }
        Ok(match s {
            "cdes" => CycStatId::Cdes,
            "cpk" => CycStatId::Cpk,
            "cval" => CycStatId::Cval,
            "cbr" => CycStatId::Cbr,
            "cComp" => CycStatId::CComp,
            "cDes" => CycStatId::CDes,
            "cPk" => CycStatId::CPk,
            "ocmaj" => CycStatId::Ocmaj,
            other => return Err(Error::UnknownStat(other.to_string())),
        })
    }
}

/// Multiset of `st` over every rotation.
pub fn induced(st: &StatId, c: &CycPerm) -> StatValue {
    StatValue::multiset(c.orbit().iter().map(|p| eval(st, p)))
}

pub fn ceval(cst: &CycStatId, c: &CycPerm) -> StatValue {
    let rep = c.rep();
    match cst {
        CycStatId::Induced(st) => induced(st, c),
        CycStatId::Cdes => eval(&StatId::CdesL, rep),
        CycStatId::Cpk => eval(&StatId::CpkL, rep),
        CycStatId::Cval => eval(&StatId::CvalL, rep),
        CycStatId::Cbr => eval(&StatId::CbrL, rep),
        CycStatId::CComp => ccomp(c).to_value(),
        CycStatId::CDes => induced(&StatId::CDesL, c),
        CycStatId::CPk => induced(&StatId::CPkL, c),
        CycStatId::Ocmaj => ocmaj(c),
        CycStatId::Pair(a, b) => StatValue::pair(ceval(a, c), ceval(b, c)),
    }
}

pub fn ceval_named(name: &str, c: &CycPerm) -> Result<StatValue> {
    Ok(ceval(&name.parse()?, c))
}

fn cdes_set(p: &Perm) -> Vec<u32> {
    match eval(&StatId::CDesL, p) {
        StatValue::IntSet(s) => s,
        _ => unreachable!("cDesL is set-valued"),
    }
}

/// Cyclic gaps between consecutive elements of a sorted subset of `[n]`.
fn cyclic_gaps(sorted: &[u32], n: u32) -> Vec<u32> {
    match sorted.len() {
        0 => Vec::new(),
        1 => vec![n],
        k => (0..k)
            .map(|i| {
                if i + 1 < k {
                    sorted[i + 1] - sorted[i]
                } else {
                    sorted[0] + n - sorted[k - 1]
                }
            })
            .collect(),
    }
}

pub fn ccomp(c: &CycPerm) -> CycComposition {
    match c.len() {
        0 => CycComposition::default(),
        1 => CycComposition(vec![1]),
        n => CycComposition::new(&cyclic_gaps(&cdes_set(c.rep()), n as u32)),
    }
}

/// Whether `set` is the cyclic descent set of some permutation of length `n`.
pub fn non_escher(set: &[u32], n: u32) -> Result<bool> {
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::ElementOutOfRange { elem: bad, max: n });
    }
    let distinct = set.iter().unique().count() as u32;
    Ok(if n <= 1 {
        distinct == 0
    } else {
        distinct > 0 && distinct < n
    })
}

/// `S + i` with values taken in `[n]`.
pub fn cyclic_shift(set: &[u32], i: u32, n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = set.iter().map(|&s| (s - 1 + i) % n + 1).collect();
    out.sort_unstable();
    out
}

/// `[cmaj π⁽¹⁾, …, cmaj π⁽ⁿ⁾]` along the rotation order, as a cyclic word.
pub fn ocmaj(c: &CycPerm) -> StatValue {
    let word: Vec<i64> = c
        .orbit()
        .iter()
        .map(|p| eval(&StatId::CmajL, p).as_int().unwrap())
        .collect();
    StatValue::cyc_word(&word)
}

/// Recover `cComp` from an `ocmaj` word. Consecutive entries differ by
/// `cdes - n·[π⁽ⁱ⁾ ends in a cyclic descent]`, so a drop at `s` marks the
/// cyclic descent `n + 1 - s` of the first rotation.
pub fn reconstruct_ccomp(word: &[i64], n: usize) -> Result<CycComposition> {
    if word.len() != n {
        return Err(Error::MalformedWord(format!(
            "expected {n} entries, found {}",
            word.len()
        )));
    }
    match n {
        0 => return Ok(CycComposition::default()),
        1 => return Ok(CycComposition(vec![1])),
        _ => {}
    }
    let next = |s: usize| word[(s + 1) % n];
    if let Some(s) = (0..n).find(|&s| word[s] == next(s)) {
        return Err(Error::MalformedWord(format!(
            "entries {} and {} are equal",
            s + 1,
            (s + 1) % n + 1
        )));
    }
    let mut descents: Vec<u32> = (0..n)
        .filter(|&s| word[s] > next(s))
        .map(|s| (n - s) as u32)
        .collect();
    descents.sort_unstable();
    if descents.is_empty() {
        return Err(Error::MalformedWord("no cyclic descent".into()));
    }
    Ok(CycComposition::new(&cyclic_gaps(&descents, n as u32)))
}
