use std::fmt;
use std::str::FromStr;

use super::{Perm, StatValue};
use crate::error::{Error, Result};

/// A statistic from the closed linear registry, or a pair of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatId {
    DesSet,
    Des,
    Maj,
    Comaj,
    PkSet,
    Pk,
    ValSet,
    Val,
    LpkSet,
    Lpk,
    RpkSet,
    Rpk,
    EpkSet,
    Epk,
    DdesSet,
    Ddes,
    Br,
    Udr,
    CDesL,
    CdesL,
    CPkL,
    CpkL,
    CValL,
    CvalL,
    CmajL,
    CcomajL,
    CbrL,
    Pair(Box<StatId>, Box<StatId>),
}

const REGISTRY: &[(&str, StatId)] = &[
    ("Des", StatId::DesSet),
    ("des", StatId::Des),
    ("maj", StatId::Maj),
    ("comaj", StatId::Comaj),
    ("Pk", StatId::PkSet),
    ("pk", StatId::Pk),
    ("Val", StatId::ValSet),
    ("val", StatId::Val),
    ("Lpk", StatId::LpkSet),
    ("lpk", StatId::Lpk),
    ("Rpk", StatId::RpkSet),
    ("rpk", StatId::Rpk),
    ("Epk", StatId::EpkSet),
    ("epk", StatId::Epk),
    ("Ddes", StatId::DdesSet),
    ("ddes", StatId::Ddes),
    ("br", StatId::Br),
    ("udr", StatId::Udr),
    ("cDesL", StatId::CDesL),
    ("cdesL", StatId::CdesL),
    ("cPkL", StatId::CPkL),
    ("cpkL", StatId::CpkL),
    ("cValL", StatId::CValL),
    ("cvalL", StatId::CvalL),
    ("cmajL", StatId::CmajL),
    ("ccomajL", StatId::CcomajL),
    ("cbrL", StatId::CbrL),
];

impl StatId {
    pub fn pair(a: StatId, b: StatId) -> Self {
        StatId::Pair(Box::new(a), Box::new(b))
    }

    /// Every non-pair statistic of the registry, in registry order.
    pub fn registry() -> impl Iterator<Item = StatId> {
        REGISTRY.iter().map(|(_, s)| s.clone())
    }

    pub fn name(&self) -> String {
        match self {
            StatId::Pair(a, b) => format!("({},{})", a.name(), b.name()),
            other => REGISTRY
                .iter()
                .find(|(_, s)| s == other)
                .map(|(n, _)| n.to_string())
                .expect("every base statistic is registered"),
        }
    }

    /// Look up a single registry name (no pairs).
    pub fn lookup(name: &str) -> Option<StatId> {
        REGISTRY
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| s.clone())
    }
}

impl fmt::Display for StatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Split `s` at its first comma that is not inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Strip one pair of parentheses enclosing the whole string.
pub(crate) fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return inner.trim();
        }
    }
    s
}

/// Names are case-sensitive; `des,maj` and `(des,maj)` give pairs, which
/// associate to the right when more than two are joined.
impl FromStr for StatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = strip_parens(s);
        if let Some((a, b)) = split_top_level(s) {
            return Ok(StatId::pair(a.parse()?, b.parse()?));
        }
        StatId::lookup(s).ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

pub fn eval_named(name: &str, p: &Perm) -> Result<StatValue> {
    Ok(eval(&name.parse()?, p))
}

pub fn eval(st: &StatId, p: &Perm) -> StatValue {
    eval_slice(st, p.letters())
}

fn count(set: Vec<u32>) -> StatValue {
    StatValue::Int(set.len() as i64)
}

pub(crate) fn eval_slice(st: &StatId, w: &[u32]) -> StatValue {
    let n = w.len() as i64;
    match st {
        StatId::DesSet => StatValue::IntSet(descent_set(w)),
        StatId::Des => count(descent_set(w)),
        StatId::Maj => StatValue::Int(descent_set(w).iter().map(|&i| i as i64).sum()),
        StatId::Comaj => StatValue::Int(descent_set(w).iter().map(|&i| n - i as i64).sum()),
        StatId::PkSet => StatValue::IntSet(peak_set(w)),
        StatId::Pk => count(peak_set(w)),
        StatId::ValSet => StatValue::IntSet(valley_set(w)),
        StatId::Val => count(valley_set(w)),
        StatId::LpkSet => StatValue::IntSet(left_peak_set(w)),
        StatId::Lpk => count(left_peak_set(w)),
        StatId::RpkSet => StatValue::IntSet(right_peak_set(w)),
        StatId::Rpk => count(right_peak_set(w)),
        StatId::EpkSet => StatValue::IntSet(exterior_peak_set(w)),
        StatId::Epk => count(exterior_peak_set(w)),
        StatId::DdesSet => StatValue::IntSet(double_descent_set(w)),
        StatId::Ddes => count(double_descent_set(w)),
        StatId::Br => StatValue::Int(biruns(w)),
        StatId::Udr => StatValue::Int(biruns(w) + i64::from(w.len() >= 2 && w[0] > w[1])),
        StatId::CDesL => StatValue::IntSet(cyclic_descent_set(w)),
        StatId::CdesL => count(cyclic_descent_set(w)),
        StatId::CPkL => StatValue::IntSet(cyclic_peak_set(w)),
        StatId::CpkL => count(cyclic_peak_set(w)),
        StatId::CValL => StatValue::IntSet(cyclic_valley_set(w)),
        StatId::CvalL => count(cyclic_valley_set(w)),
        StatId::CmajL => {
            StatValue::Int(cyclic_descent_set(w).iter().map(|&i| i as i64).sum())
        }
        StatId::CcomajL => {
            StatValue::Int(cyclic_descent_set(w).iter().map(|&i| n - i as i64).sum())
        }
        StatId::CbrL => {
            StatValue::Int((cyclic_peak_set(w).len() + cyclic_valley_set(w).len()) as i64)
        }
        StatId::Pair(a, b) => StatValue::pair(eval_slice(a, w), eval_slice(b, w)),
    }
}

pub(crate) fn descent_set(w: &[u32]) -> Vec<u32> {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| i as u32)
        .collect()
}

fn interior(w: &[u32], keep: impl Fn(u32, u32, u32) -> bool) -> Vec<u32> {
    (1..w.len().saturating_sub(1))
        .filter(|&i| keep(w[i - 1], w[i], w[i + 1]))
        .map(|i| i as u32 + 1)
        .collect()
}

fn peak_set(w: &[u32]) -> Vec<u32> {
    interior(w, |a, b, c| a < b && b > c)
}

fn valley_set(w: &[u32]) -> Vec<u32> {
    interior(w, |a, b, c| a > b && b < c)
}

fn double_descent_set(w: &[u32]) -> Vec<u32> {
    interior(w, |a, b, c| a > b && b > c)
}

fn left_peak_set(w: &[u32]) -> Vec<u32> {
    let mut s = peak_set(w);
    if w.len() >= 2 && w[0] > w[1] {
        s.insert(0, 1);
    }
    s
}

fn right_peak_set(w: &[u32]) -> Vec<u32> {
    let n = w.len();
    let mut s = peak_set(w);
    if n >= 2 && w[n - 2] < w[n - 1] {
        s.push(n as u32);
    }
    s
}

/// Peaks with zeros padded at both ends; a single letter is its own peak.
fn exterior_peak_set(w: &[u32]) -> Vec<u32> {
    if w.len() == 1 {
        return vec![1];
    }
    let mut s = left_peak_set(w);
    s.extend(right_peak_set(w));
    s.sort_unstable();
    s.dedup();
    s
}

/// Maximal monotone runs: one more than the number of turning points.
fn biruns(w: &[u32]) -> i64 {
    match w.len() {
        0 => 0,
        1 => 1,
        _ => {
            1 + (1..w.len() - 1)
                .filter(|&i| (w[i - 1] < w[i]) != (w[i] < w[i + 1]))
                .count() as i64
        }
    }
}

fn cyclic_descent_set(w: &[u32]) -> Vec<u32> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    (0..n)
        .filter(|&i| w[i] > w[(i + 1) % n])
        .map(|i| i as u32 + 1)
        .collect()
}

fn cyclic_interior(w: &[u32], keep: impl Fn(u32, u32, u32) -> bool) -> Vec<u32> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    (0..n)
        .filter(|&i| keep(w[(i + n - 1) % n], w[i], w[(i + 1) % n]))
        .map(|i| i as u32 + 1)
        .collect()
}

fn cyclic_peak_set(w: &[u32]) -> Vec<u32> {
    cyclic_interior(w, |a, b, c| a < b && b > c)
}

fn cyclic_valley_set(w: &[u32]) -> Vec<u32> {
    cyclic_interior(w, |a, b, c| a > b && b < c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(name: &str, p: &str) -> StatValue {
        eval_named(name, &p.parse().unwrap()).unwrap()
    }

    fn set(v: &[u32]) -> StatValue {
        StatValue::set(v.to_vec())
    }

    #[test]
    fn worked_row_713942658() {
        let p = "713942658";
        assert_eq!(ev("val", p), StatValue::Int(3));
        assert_eq!(ev("Ddes", p), set(&[5]));
        assert_eq!(ev("ddes", p), StatValue::Int(1));
        assert_eq!(ev("Lpk", p), set(&[1, 4, 7]));
        assert_eq!(ev("lpk", p), StatValue::Int(3));
        assert_eq!(ev("Rpk", p), set(&[4, 7, 9]));
        assert_eq!(ev("rpk", p), StatValue::Int(3));
        assert_eq!(ev("Epk", p), set(&[1, 4, 7, 9]));
        assert_eq!(ev("epk", p), StatValue::Int(4));
        assert_eq!(ev("br", p), StatValue::Int(6));
        assert_eq!(ev("udr", p), StatValue::Int(7));
    }

    #[test]
    fn small_cases() {
        assert_eq!(ev("cDesL", "179624"), set(&[3, 4, 6]));
        assert_eq!(ev("maj", "21"), StatValue::Int(1));
        assert_eq!(ev("cmajL", "12"), StatValue::Int(2));
        assert_eq!(ev("cPkL", "12"), set(&[2]));
        assert_eq!(ev("Epk", "5"), set(&[1]));
        for name in StatId::registry().map(|s| s.name()) {
            let v = ev(&name, "");
            assert!(v == StatValue::Int(0) || v == set(&[]), "{name}");
        }
    }

    #[test]
    fn parse_names_and_pairs() {
        assert_eq!("des".parse::<StatId>().unwrap(), StatId::Des);
        assert_eq!(
            "(lpk,des)".parse::<StatId>().unwrap(),
            StatId::pair(StatId::Lpk, StatId::Des)
        );
        assert_eq!(
            "des,maj".parse::<StatId>().unwrap().name(),
            "(des,maj)"
        );
        assert_eq!(
            "DES".parse::<StatId>(),
            Err(Error::UnknownStat("DES".into()))
        );
        for st in StatId::registry() {
            assert_eq!(st.name().parse::<StatId>().unwrap(), st);
        }
    }

    #[test]
    fn des_distribution_on_s3() {
        let mut counts = [0; 3];
        for p in Perm::all(3) {
            counts[eval(&StatId::Des, &p).as_int().unwrap() as usize] += 1;
        }
        assert_eq!(counts, [1, 4, 1]);
    }
}
