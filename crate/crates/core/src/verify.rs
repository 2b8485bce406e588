//! Named exhaustive verifications of the algebraic identities, with
//! dimension counts and the attained `(cpk, cdes)` range.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::compat::pattern_pairs;
use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::error::{Error, Result};
use crate::perm::{eval, Perm, StatId};
use crate::qsym::{
    compositions, cyclic_peak_sets, expand_monomials, non_escher_sets, verify_fcyc_mult,
    verify_kcyc_mult, QSymElem,
};
use crate::series::{
    cdes_pform, cdes_series, cpk_series, gauss_binom, majdes_rhs, u_image, v_cpkcdes, v_image,
    verify_adin_cdes, w_cpk, Poly, SeriesElem,
};
use crate::shuffle::{cyclic_shuffles, shuffles};

pub const THEOREM_NAMES: [&str; 11] = [
    "fqsym",
    "fcycmult",
    "kcycmult",
    "pkdes-hom",
    "cpkcdes-hom",
    "cpk-forms",
    "cdes-forms",
    "maj-gf",
    "majdes-gf",
    "adin-cdes",
    "dims",
];

/// Default size bound for each named check.
pub fn default_max_size(name: &str) -> usize {
    match name {
        "pkdes-hom" | "cpkcdes-hom" => 5,
        "fqsym" | "fcycmult" | "kcycmult" | "adin-cdes" => 6,
        "maj-gf" | "majdes-gf" => 7,
        _ => 8,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: String,
    pub max_size: usize,
    pub params_checked: u64,
    pub holds: bool,
    /// The first parameter set where the identity failed.
    pub first_failure: Option<String>,
}

struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn shapes(max_size: usize, min_part: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_size)
        .flat_map(|s| (0..=s).map(move |m| (m, s - m)))
        .filter(move |&(m, n)| m >= min_part && n >= min_part)
}

/// Truncation for a product of size `s`, honouring an explicit override.
fn trunc_for(s: usize, trunc: Option<usize>) -> usize {
    trunc.unwrap_or(2 * s + 2)
}

/// Theorems that reduce to a statement about one pair of permutations.
pub const PAIR_THEOREMS: [&str; 5] = ["pkdes-hom", "cpkcdes-hom", "maj-gf", "majdes-gf", "adin-cdes"];

/// Check a pair-level theorem on one pair of disjoint permutations.
pub fn verify_theorem_pair(name: &str, p: &Perm, q: &Perm, trunc: Option<usize>) -> Result<bool> {
    p.check_disjoint(q)?;
    let t = trunc_for(p.len() + q.len(), trunc);
    match name {
        "pkdes-hom" => pkdes_pair(p, q, t),
        "cpkcdes-hom" => cpkcdes_pair(p, q, t),
        "maj-gf" => maj_pair(p, q),
        "majdes-gf" => Ok(majdes_pair(p, q)?.is_none()),
        "adin-cdes" => verify_adin_cdes(p, q),
        other if THEOREM_NAMES.contains(&other) => Err(Error::RangeViolation(format!(
            "`{other}` is not a statement about a pair of permutations"
        ))),
        other => Err(Error::Parse(format!("unknown theorem `{other}`"))),
    }
}

pub fn verify_theorem(name: &str, max_size: usize, trunc: Option<usize>) -> Result<TheoremReport> {
    let mut tally = Tally::new();
    match name {
        "fqsym" => fqsym(max_size, &mut tally),
        "fcycmult" => fcycmult(max_size, &mut tally)?,
        "kcycmult" => kcycmult(max_size, &mut tally)?,
        "pkdes-hom" => pkdes_hom(max_size, trunc, &mut tally)?,
        "cpkcdes-hom" => cpkcdes_hom(max_size, trunc, &mut tally)?,
        "cpk-forms" => cpk_forms(max_size, trunc.unwrap_or(20), &mut tally)?,
        "cdes-forms" => cdes_forms(max_size, trunc.unwrap_or(20), &mut tally)?,
        "maj-gf" => maj_gf(max_size, &mut tally),
        "majdes-gf" => majdes_gf(max_size, &mut tally),
        "adin-cdes" => adin_cdes(max_size, &mut tally)?,
        "dims" => {
            for n in 2..=max_size {
                for stat in DIM_STATS {
                    let d = dims(stat, n, trunc)?;
                    tally.record(d.holds(), || format!("{stat} at n={n}: {d:?}"));
                }
            }
        }
        other => return Err(Error::Parse(format!("unknown theorem `{other}`"))),
    }
    Ok(TheoremReport {
        name: name.to_string(),
        max_size,
        params_checked: tally.checked,
        holds: tally.failure.is_none(),
        first_failure: tally.failure,
    })
}

fn fqsym(max_size: usize, tally: &mut Tally) {
    for (m, n) in shapes(max_size, 0) {
        let k = m + n;
        for a in compositions(m as u32) {
            for b in compositions(n as u32) {
                let (fa, fb) = (QSymElem::fundamental(&a), QSymElem::fundamental(&b));
                let ok = expand_monomials(&(&fa * &fb), k) == &expand_monomials(&fa, k) * &expand_monomials(&fb, k);
                tally.record(ok, || format!("F{a:?}·F{b:?}"));
            }
        }
    }
}

fn fcycmult(max_size: usize, tally: &mut Tally) -> Result<()> {
    for (m, n) in shapes(max_size, 0) {
        for a in non_escher_sets(m as u32) {
            for b in non_escher_sets(n as u32) {
                let ok = verify_fcyc_mult(m as u32, n as u32, &a, &b)?;
                tally.record(ok, || format!("m={m} A={a:?} n={n} B={b:?}"));
            }
        }
    }
    Ok(())
}

fn kcycmult(max_size: usize, tally: &mut Tally) -> Result<()> {
    for (m, n) in shapes(max_size, 0) {
        for a in cyclic_peak_sets(m as u32) {
            for b in cyclic_peak_sets(n as u32) {
                let ok = verify_kcyc_mult(m as u32, n as u32, &a, &b)?;
                tally.record(ok, || format!("m={m} A={a:?} n={n} B={b:?}"));
            }
        }
    }
    Ok(())
}

fn pkdes_pair(p: &Perm, q: &Perm, t: usize) -> Result<bool> {
    let size = (p.len() + q.len()) as u32;
    let lhs = u_image(p, t).hadamard(&u_image(q, t))?;
    let rhs = crate::series::sum_images(&shuffles(p, q)?, size, size, t, |s| u_image(s, t))?;
    lhs.agrees(&rhs)
}

fn cpkcdes_pair(p: &Perm, q: &Perm, t: usize) -> Result<bool> {
    let size = (p.len() + q.len()) as u32;
    let (a, b) = (CycPerm::new(p), CycPerm::new(q));
    let lhs = v_image(&a, t).hadamard(&v_image(&b, t))?;
    let rhs = crate::series::sum_images(&cyclic_shuffles(&a, &b)?, size, size, t, |c| v_image(c, t))?;
    lhs.agrees(&rhs)
}

fn pkdes_hom(max_size: usize, trunc: Option<usize>, tally: &mut Tally) -> Result<()> {
    for (m, n) in shapes(max_size, 1) {
        let t = trunc_for(m + n, trunc);
        for pair in pattern_pairs(m, n, false) {
            let (p, q) = pair.instantiate();
            tally.record(pkdes_pair(&p, &q, t)?, || pair.to_string());
        }
    }
    Ok(())
}

fn cpkcdes_hom(max_size: usize, trunc: Option<usize>, tally: &mut Tally) -> Result<()> {
    for (m, n) in shapes(max_size, 1) {
        let t = trunc_for(m + n, trunc);
        for pair in pattern_pairs(m, n, true) {
            let (p, q) = pair.instantiate();
            tally.record(cpkcdes_pair(&p, &q, t)?, || pair.to_string());
        }
    }
    Ok(())
}

fn cpk_forms(max_size: usize, trunc: usize, tally: &mut Tally) -> Result<()> {
    for n in 2..=max_size as u32 {
        for j in 1..=n / 2 {
            let s = cpk_series(n, j, trunc)?;
            tally.record(w_cpk(n, j, trunc)?.matches(&s), || format!("w_cpk n={n} j={j}"));
            for k in j..=n - j {
                let v1 = v_cpkcdes(n, j, k, trunc)?.at_y(1);
                tally.record(v1.agrees(&s)?, || format!("v|y=1 n={n} j={j} k={k}"));
            }
        }
    }
    Ok(())
}

fn cdes_forms(max_size: usize, trunc: usize, tally: &mut Tally) -> Result<()> {
    let mut params = vec![(0, 0), (1, 0)];
    params.extend((2..=max_size as u32).flat_map(|n| (1..n).map(move |k| (n, k))));
    for (n, k) in params {
        let ok = cdes_pform(n, k, trunc)?.matches(&cdes_series(n, k, trunc)?);
        tally.record(ok, || format!("cdes n={n} k={k}"));
    }
    for n in 2..=max_size as u32 {
        for j in 1..=n / 2 {
            for k in j..=n - j {
                let v0 = v_cpkcdes(n, j, k, trunc)?.at_y(0);
                tally.record(v0.agrees(&cdes_series(n, k, trunc)?)?, || {
                    format!("v|y=0 n={n} j={j} k={k}")
                });
            }
        }
    }
    Ok(())
}

fn q_monomial(k: i64) -> Poly {
    Poly::monomial(k as usize, num_traits::One::one())
}

fn maj_pair(p: &Perm, q: &Perm) -> Result<bool> {
    let lhs = shuffles(p, q)?.iter().fold(Poly::zero(), |acc, t| {
        &acc + &q_monomial(eval(&StatId::Maj, t).as_int().unwrap())
    });
    let shift = eval(&StatId::Maj, p).as_int().unwrap() + eval(&StatId::Maj, q).as_int().unwrap();
    let rhs = &q_monomial(shift) * &gauss_binom((p.len() + q.len()) as i64, p.len() as i64);
    Ok(lhs == rhs)
}

/// The first `k` where the `des = k` part of the shuffle fails, if any.
fn majdes_pair(p: &Perm, q: &Perm) -> Result<Option<i64>> {
    let mut by_des: BTreeMap<i64, Poly> = BTreeMap::new();
    for t in shuffles(p, q)? {
        let entry = by_des.entry(eval(&StatId::Des, &t).as_int().unwrap()).or_default();
        *entry = &*entry + &q_monomial(eval(&StatId::Maj, &t).as_int().unwrap());
    }
    // One value of k past each end checks the empty classes.
    Ok((-1..=(p.len() + q.len()) as i64).find(|&k| {
        by_des.get(&k).cloned().unwrap_or_default() != majdes_rhs(p, q, k)
    }))
}

fn maj_gf(max_size: usize, tally: &mut Tally) {
    for (m, n) in shapes(max_size, 0) {
        for pair in pattern_pairs(m, n, false) {
            let (p, q) = pair.instantiate();
            tally.record(maj_pair(&p, &q).expect("disjoint"), || pair.to_string());
        }
    }
}

fn majdes_gf(max_size: usize, tally: &mut Tally) {
    for (m, n) in shapes(max_size, 0) {
        for pair in pattern_pairs(m, n, false) {
            let (p, q) = pair.instantiate();
            let bad = majdes_pair(&p, &q).expect("disjoint");
            tally.record(bad.is_none(), || format!("{pair} k={}", bad.unwrap()));
        }
    }
}

fn adin_cdes(max_size: usize, tally: &mut Tally) -> Result<()> {
    for (m, n) in shapes(max_size, 1) {
        for pair in pattern_pairs(m, n, false) {
            let (p, q) = pair.instantiate();
            tally.record(verify_adin_cdes(&p, &q)?, || pair.to_string());
        }
    }
    Ok(())
}

pub const DIM_STATS: [&str; 3] = ["cdes", "cpk", "cpk,cdes"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsReport {
    pub stat: String,
    pub n: usize,
    pub expected: usize,
    /// Distinct statistic values over the cyclic permutations of `[n]`.
    pub by_classes: usize,
    /// Pairwise-distinct formula images in degree `n`.
    pub by_formula: usize,
}

impl DimsReport {
    pub fn holds(&self) -> bool {
        self.expected == self.by_classes && self.expected == self.by_formula
    }
}

fn distinct_images(images: Vec<SeriesElem>) -> usize {
    images.iter().map(|s| s.coeffs().to_vec()).collect::<BTreeSet<_>>().len()
}

/// Dimension of the degree-`n` component for `cdes`, `cpk` or `(cpk,cdes)`.
pub fn dims(stat: &str, n: usize, trunc: Option<usize>) -> Result<DimsReport> {
    if n < 2 {
        return Err(Error::RangeViolation(format!("dims needs n >= 2 (got {n})")));
    }
    let t = trunc.unwrap_or(n + 2);
    let nn = n as u32;
    let cst: CycStatId = stat.parse()?;
    let (expected, images) = match stat.replace(' ', "").as_str() {
        "cdes" => (n - 1, (1..nn).map(|k| cdes_series(nn, k, t)).collect::<Result<Vec<_>>>()?),
        "cpk" => (n / 2, (1..=nn / 2).map(|j| cpk_series(nn, j, t)).collect::<Result<Vec<_>>>()?),
        "cpk,cdes" | "(cpk,cdes)" => (
            n * n / 4,
            (1..=nn / 2)
                .flat_map(|j| (j..=nn - j).map(move |k| (j, k)))
                .map(|(j, k)| v_cpkcdes(nn, j, k, t))
                .collect::<Result<Vec<_>>>()?,
        ),
        other => return Err(Error::UnknownStat(other.to_string())),
    };
    let by_classes = CycPerm::all(n).map(|c| ceval(&cst, &c)).unique().count();
    Ok(DimsReport {
        stat: cst.name(),
        n,
        expected,
        by_classes,
        by_formula: distinct_images(images),
    })
}

/// `(cpk, cdes)` pairs attained over the cyclic permutations of `[n]`,
/// against `{(j, k) : 1 ≤ j ≤ ⌊n/2⌋, j ≤ k ≤ n-j}`.
pub fn cpkcdes_range(n: usize) -> (BTreeSet<(i64, i64)>, BTreeSet<(i64, i64)>) {
    let attained = CycPerm::all(n)
        .map(|c| {
            (
                ceval(&CycStatId::Cpk, &c).as_int().unwrap(),
                ceval(&CycStatId::Cdes, &c).as_int().unwrap(),
            )
        })
        .collect();
    let n = n as i64;
    let predicted = (1..=n / 2).flat_map(|j| (j..=n - j).map(move |k| (j, k))).collect();
    (attained, predicted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_checks() {
        let p: Perm = "31".parse().unwrap();
        let q: Perm = "524".parse().unwrap();
        for name in PAIR_THEOREMS {
            assert!(verify_theorem_pair(name, &p, &q, None).unwrap(), "{name}");
        }
        assert!(matches!(verify_theorem_pair("dims", &p, &q, None), Err(Error::RangeViolation(_))));
        assert!(matches!(verify_theorem_pair("maj-gf", &p, &p, None), Err(Error::NotDisjoint(_))));
    }

    #[test]
    fn shapes_cover_sizes() {
        let s: Vec<_> = shapes(3, 1).collect();
        assert_eq!(s, vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(shapes(2, 0).count(), 6);
    }

    #[test]
    fn small_runs() {
        for name in THEOREM_NAMES {
            let r = verify_theorem(name, 4, None).unwrap();
            assert!(r.holds, "{r:?}");
            assert!(r.params_checked > 0, "{name}");
        }
        assert!(verify_theorem("nope", 3, None).is_err());
    }

    #[test]
    fn dims_example() {
        let d = dims("cpk,cdes", 6, None).unwrap();
        assert_eq!((d.expected, d.by_classes, d.by_formula), (9, 9, 9));
        assert!(dims("cdes", 1, None).is_err());
    }

    #[test]
    fn explicit_trunc_too_small() {
        assert!(matches!(
            verify_theorem("pkdes-hom", 3, Some(3)),
            Err(Error::TruncationMismatch { .. })
        ));
    }
}
