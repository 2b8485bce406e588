//! Quasisymmetric functions in the fundamental basis, a finite-variable
//! monomial expansion used as an oracle, cyclic fundamentals and the peak
//! algebra on the formal basis `K`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cyc::{ccomp, cyclic_shift, non_escher, CycPerm};
use crate::error::{Error, Result};
use crate::perm::{comp_of_set, des_of_comp, eval, perm_with_descent_set, Perm, StatId, StatValue};
use crate::shuffle::{cyclic_shuffles, shuffles_unchecked};

pub type Rational = BigRational;

fn int_set(v: StatValue) -> Vec<u32> {
    match v {
        StatValue::IntSet(s) => s,
        other => unreachable!("expected a set, got {other}"),
    }
}

/// Finite rational combination of fundamentals `F_{n,L}`, keyed by the
/// composition `L` (its degree is the sum of parts).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QSymElem {
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl QSymElem {
    pub fn zero() -> Self {
        QSymElem::default()
    }

    /// `F` of the empty composition.
    pub fn one() -> Self {
        QSymElem::fundamental(&[])
    }

    pub fn fundamental(comp: &[u32]) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(comp.to_vec(), Rational::one());
        QSymElem { coeffs }
    }

    /// `F_{n,S}` for `S ⊆ [n-1]`.
    pub fn fundamental_set(n: u32, set: &[u32]) -> Result<Self> {
        Ok(QSymElem::fundamental(&comp_of_set(set, n)?))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, comp: &[u32]) -> Rational {
        self.coeffs.get(comp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, comp: Vec<u32>, c: Rational) {
        let entry = self.coeffs.entry(comp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return QSymElem::zero();
        }
        QSymElem {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

fn descent_comp(p: &Perm) -> Vec<u32> {
    p.descent_composition()
}

type ConstCache<K> = OnceLock<RwLock<HashMap<K, Arc<BTreeMap<Vec<u32>, u64>>>>>;

static F_CACHE: ConstCache<(Vec<u32>, Vec<u32>)> = OnceLock::new();

/// Structure constants of `F_A F_B`, from shuffling the descending-block
/// permutation of `A` with that of `B` shifted above it.
fn fundamental_product(a: &[u32], b: &[u32]) -> Arc<BTreeMap<Vec<u32>, u64>> {
    let cache = F_CACHE.get_or_init(Default::default);
    let key = (a.to_vec(), b.to_vec());
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let m: u32 = a.iter().sum();
    let n: u32 = b.iter().sum();
    let p = perm_with_descent_set(m, &des_of_comp(a)).expect("valid composition");
    let q = perm_with_descent_set(n, &des_of_comp(b))
        .expect("valid composition")
        .shifted(m);
    let mut out = BTreeMap::new();
    for t in shuffles_unchecked(p.letters(), q.letters()) {
        *out.entry(descent_comp(&t)).or_insert(0) += 1;
    }
    let out = Arc::new(out);
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert(out)
        .clone()
}

impl Add for &QSymElem {
    type Output = QSymElem;
    fn add(self, rhs: &QSymElem) -> QSymElem {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Neg for &QSymElem {
    type Output = QSymElem;
    fn neg(self) -> QSymElem {
        self.scale(&-Rational::one())
    }
}

impl Sub for &QSymElem {
    type Output = QSymElem;
    fn sub(self, rhs: &QSymElem) -> QSymElem {
        self + &-rhs
    }
}

impl Mul for &QSymElem {
    type Output = QSymElem;
    fn mul(self, rhs: &QSymElem) -> QSymElem {
        let mut out = QSymElem::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                let c = ca * cb;
                for (comp, k) in fundamental_product(a, b).iter() {
                    out.add_term(comp.clone(), &c * Rational::from_integer(BigInt::from(*k)));
                }
            }
        }
        out
    }
}

pub fn f_mult(a: &QSymElem, b: &QSymElem) -> QSymElem {
    a * b
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let body = self
            .coeffs
            .iter()
            .map(|(k, v)| format!("{v}·F({})", k.iter().join(",")))
            .join(" + ");
        f.write_str(&body)
    }
}

struct Term<'a>(&'a [u32], &'a Rational);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.0.iter().sum::<u32>())?;
        map.serialize_entry("composition", self.0)?;
        map.serialize_entry("coeff", &self.1.to_string())?;
        map.end()
    }
}

impl Serialize for QSymElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(k, v)| Term(k, v)))
    }
}

/// Polynomial in `x_1, …, x_k` with rational coefficients, keyed by exponent
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyKVars {
    pub k: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyKVars {
    pub fn zero(k: usize) -> Self {
        PolyKVars {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Mul for &PolyKVars {
    type Output = PolyKVars;
    fn mul(self, rhs: &PolyKVars) -> PolyKVars {
        assert_eq!(self.k, rhs.k, "variable counts must match");
        let mut out = PolyKVars::zero(self.k);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Index chains `1 <= i_1 <= … <= i_n <= k`, strict after each position in
/// `strict`.
fn chains(n: usize, k: u32, strict: &[u32], out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let lo = match cur.last() {
        None => 1,
        Some(&prev) if strict.contains(&(cur.len() as u32)) => prev + 1,
        Some(&prev) => prev,
    };
    for i in lo..=k {
        cur.push(i);
        chains(n, k, strict, out, cur);
        cur.pop();
    }
}

/// Evaluate in `k` variables: `F_{n,L}` becomes the sum of
/// `x_{i_1} ⋯ x_{i_n}` over chains with strict rises at `Des L`.
pub fn expand_monomials(e: &QSymElem, k: usize) -> PolyKVars {
    let mut out = PolyKVars::zero(k);
    for (comp, c) in e.terms() {
        let n = comp.iter().sum::<u32>() as usize;
        let strict = des_of_comp(comp);
        let mut found = Vec::new();
        chains(n, k as u32, &strict, &mut found, &mut Vec::new());
        for chain in found {
            let mut exps = vec![0; k];
            for i in chain {
                exps[i as usize - 1] += 1;
            }
            out.add_term(exps, c.clone());
        }
    }
    out
}

/// Rank over ℚ of the monomial expansions of `elems` in `k` variables.
pub fn expansion_rank(elems: &[QSymElem], k: usize) -> usize {
    let rows: Vec<PolyKVars> = elems.iter().map(|e| expand_monomials(e, k)).collect();
    let monomials: Vec<&Vec<u32>> = rows
        .iter()
        .flat_map(|r| r.terms.keys())
        .sorted()
        .dedup()
        .collect();
    let mut matrix: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            monomials
                .iter()
                .map(|m| r.terms.get(*m).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..monomials.len() {
        let Some(pivot) = (rank..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot);
        let head = matrix[rank].clone();
        for row in matrix.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &head[col];
            for (x, h) in row.iter_mut().zip(&head).skip(col) {
                *x -= &factor * h;
            }
        }
        rank += 1;
    }
    rank
}

/// All compositions of `n`.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..n - 1)
        .map(|_| [false, true])
        .multi_cartesian_product()
        .map(|cuts| {
            let set: Vec<u32> = (1..n).filter(|&i| cuts[i as usize - 1]).collect();
            comp_of_set(&set, n).expect("subset of [n-1]")
        })
        .collect()
}

/// `F^cyc_{n,S} = Σ_{i∈[n]} F_{n,(S+i)∩[n-1]}`, with `F^cyc_{0,∅} = 1`.
pub fn f_cyc(n: u32, set: &[u32]) -> Result<QSymElem> {
    if !non_escher(set, n)? {
        return Err(Error::EscherSet {
            set: set.to_vec(),
            n,
        });
    }
    if n == 0 {
        return Ok(QSymElem::one());
    }
    let mut out = QSymElem::zero();
    for i in 1..=n {
        let shifted: Vec<u32> = cyclic_shift(set, i, n).into_iter().filter(|&s| s < n).collect();
        out = &out + &QSymElem::fundamental_set(n, &shifted)?;
    }
    Ok(out)
}

/// A permutation of `[n]` whose cyclic descent set is exactly `set`.
pub fn perm_with_cyclic_descent_set(n: u32, set: &[u32]) -> Result<Perm> {
    if !non_escher(set, n)? {
        return Err(Error::EscherSet {
            set: set.to_vec(),
            n,
        });
    }
    if n <= 1 {
        return Ok(Perm::identity(n as usize));
    }
    // Shift a non-member to position n. The descending-block permutation of
    // the shifted set ends below where it starts, then rotate back.
    let gap = (1..=n).find(|x| !set.contains(x)).expect("set is not all of [n]");
    let i = n - gap;
    let p = perm_with_descent_set(n, &cyclic_shift(set, i, n))?;
    Ok(p.rotate_right((n - i) as usize % n as usize))
}

fn fcyc_of_class(c: &CycPerm) -> QSymElem {
    let set = int_set(eval(&StatId::CDesL, c.rep()));
    f_cyc(c.len() as u32, &set).expect("cyclic descent sets are non-Escher")
}

/// Terms `F^cyc_{m+n, cDes[τ]}` over `[τ] ∈ [π] ⧢ [σ]`, in class order.
pub fn fcyc_mult_rhs_terms(m: u32, n: u32, a: &[u32], b: &[u32]) -> Result<Vec<QSymElem>> {
    let p = perm_with_cyclic_descent_set(m, a)?;
    let q = perm_with_cyclic_descent_set(n, b)?.shifted(m);
    Ok(cyclic_shuffles(&CycPerm::new(&p), &CycPerm::new(&q))?
        .iter()
        .map(fcyc_of_class)
        .collect())
}

pub fn verify_fcyc_mult(m: u32, n: u32, a: &[u32], b: &[u32]) -> Result<bool> {
    let lhs = &f_cyc(m, a)? * &f_cyc(n, b)?;
    let rhs = fcyc_mult_rhs_terms(m, n, a, b)?
        .iter()
        .fold(QSymElem::zero(), |acc, t| &acc + t);
    Ok(lhs == rhs)
}

/// All non-Escher subsets of `[n]`, by size then lexicographically.
pub fn non_escher_sets(n: u32) -> Vec<Vec<u32>> {
    (0..=n)
        .flat_map(|k| (1..=n).combinations(k as usize))
        .filter(|s| non_escher(s, n).unwrap())
        .collect()
}

/// Finite rational combination of the formal peak basis `K_{n,P}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PkAlgElem {
    coeffs: BTreeMap<(u32, Vec<u32>), Rational>,
}

/// Whether `set` is the peak set of some permutation of length `n`.
pub fn is_peak_set(set: &[u32], n: u32) -> bool {
    set.iter().all(|&s| s >= 2 && s < n) && set.windows(2).all(|w| w[0] + 1 < w[1])
}

/// Whether `set` is the cyclic peak set of some permutation of length `n`.
pub fn is_cyclic_peak_set(set: &[u32], n: u32) -> bool {
    if n <= 1 {
        return set.is_empty();
    }
    if set.is_empty() || !set.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    let inside = set.iter().all(|&s| (1..=n).contains(&s));
    let apart = (0..set.len()).all(|i| {
        let (a, b) = (set[i], set[(i + 1) % set.len()]);
        set.len() == 1 || (a % n) + 1 != b
    });
    inside && apart && !(n == 2 && set.len() == 2)
}

/// First permutation of `[n]` in lexicographic order with the given peak
/// set.
pub fn perm_with_peak_set(n: u32, set: &[u32]) -> Result<Perm> {
    let target = StatValue::set(set.to_vec());
    Perm::all(n as usize)
        .find(|p| eval(&StatId::PkSet, p) == target)
        .ok_or(Error::InvalidPeakSet {
            set: set.to_vec(),
            n,
        })
}

/// First permutation of `[n]` in lexicographic order with the given cyclic
/// peak set.
pub fn perm_with_cyclic_peak_set(n: u32, set: &[u32]) -> Result<Perm> {
    let target = StatValue::set(set.to_vec());
    Perm::all(n as usize)
        .find(|p| eval(&StatId::CPkL, p) == target)
        .ok_or(Error::InvalidPeakSet {
            set: set.to_vec(),
            n,
        })
}

static K_CACHE: ConstCache<(u32, Vec<u32>, u32, Vec<u32>)> = OnceLock::new();

fn peak_product(m: u32, a: &[u32], n: u32, b: &[u32]) -> Arc<BTreeMap<Vec<u32>, u64>> {
    let cache = K_CACHE.get_or_init(Default::default);
    let key = (m, a.to_vec(), n, b.to_vec());
    if let Some(hit) = cache.read().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let p = perm_with_peak_set(m, a).expect("validated peak set");
    let q = perm_with_peak_set(n, b).expect("validated peak set").shifted(m);
    let mut out = BTreeMap::new();
    for t in shuffles_unchecked(p.letters(), q.letters()) {
        *out.entry(int_set(eval(&StatId::PkSet, &t))).or_insert(0) += 1;
    }
    let out = Arc::new(out);
    cache
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert(out)
        .clone()
}

impl PkAlgElem {
    pub fn zero() -> Self {
        PkAlgElem::default()
    }

    pub fn one() -> Self {
        PkAlgElem::k(0, &[]).expect("empty peak set")
    }

    /// The basis element `K_{n,P}`.
    pub fn k(n: u32, set: &[u32]) -> Result<Self> {
        if !is_peak_set(set, n) {
            return Err(Error::InvalidPeakSet {
                set: set.to_vec(),
                n,
            });
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert((n, set.to_vec()), Rational::one());
        Ok(PkAlgElem { coeffs })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Vec<u32>), &Rational)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, key: (u32, Vec<u32>), c: Rational) {
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for &PkAlgElem {
    type Output = PkAlgElem;
    fn add(self, rhs: &PkAlgElem) -> PkAlgElem {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Mul for &PkAlgElem {
    type Output = PkAlgElem;
    fn mul(self, rhs: &PkAlgElem) -> PkAlgElem {
        let mut out = PkAlgElem::zero();
        for ((m, a), ca) in &self.coeffs {
            for ((n, b), cb) in &rhs.coeffs {
                let c = ca * cb;
                for (set, k) in peak_product(*m, a, *n, b).iter() {
                    out.add_term(
                        (m + n, set.clone()),
                        &c * Rational::from_integer(BigInt::from(*k)),
                    );
                }
            }
        }
        out
    }
}

pub fn pk_product(a: &PkAlgElem, b: &PkAlgElem) -> PkAlgElem {
    a * b
}

impl fmt::Display for PkAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let body = self
            .coeffs
            .iter()
            .map(|((n, s), v)| format!("{v}·K({n};{{{}}})", s.iter().join(",")))
            .join(" + ");
        f.write_str(&body)
    }
}

/// `K^cyc_{n,P} = Σ_{i∈[n]} K_{n,(P+i)∖{1,n}}`, with `K^cyc_{0,∅} = 1`.
pub fn k_cyc(n: u32, set: &[u32]) -> Result<PkAlgElem> {
    if !is_cyclic_peak_set(set, n) {
        return Err(Error::InvalidPeakSet {
            set: set.to_vec(),
            n,
        });
    }
    if n == 0 {
        return Ok(PkAlgElem::one());
    }
    let mut out = PkAlgElem::zero();
    for i in 1..=n {
        let linear: Vec<u32> = cyclic_shift(set, i, n)
            .into_iter()
            .filter(|&s| s != 1 && s != n)
            .collect();
        out = &out + &PkAlgElem::k(n, &linear)?;
    }
    Ok(out)
}

/// All cyclic peak sets of length `n`, by size then lexicographically.
pub fn cyclic_peak_sets(n: u32) -> Vec<Vec<u32>> {
    (0..=n)
        .flat_map(|k| (1..=n).combinations(k as usize))
        .filter(|s| is_cyclic_peak_set(s, n))
        .collect()
}

/// Whether `K^cyc_{m,[A]} K^cyc_{n,[B]}` equals the sum of
/// `K^cyc_{m+n,cPk[τ]}` over the cyclic shuffles.
pub fn verify_kcyc_mult(m: u32, n: u32, a: &[u32], b: &[u32]) -> Result<bool> {
    let lhs = &k_cyc(m, a)? * &k_cyc(n, b)?;
    let p = perm_with_cyclic_peak_set(m, a)?;
    let q = perm_with_cyclic_peak_set(n, b)?.shifted(m);
    let mut rhs = PkAlgElem::zero();
    for c in cyclic_shuffles(&CycPerm::new(&p), &CycPerm::new(&q))? {
        let set = int_set(eval(&StatId::CPkL, c.rep()));
        rhs = &rhs + &k_cyc(m + n, &set)?;
    }
    Ok(lhs == rhs)
}

/// Cyclic descent composition of the class realising `set`.
pub fn ccomp_of_set(n: u32, set: &[u32]) -> Result<crate::cyc::CycComposition> {
    Ok(ccomp(&CycPerm::new(&perm_with_cyclic_descent_set(n, set)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(c: &[u32]) -> QSymElem {
        QSymElem::fundamental(c)
    }

    #[test]
    fn small_products() {
        assert_eq!(&f(&[1]) * &f(&[1]), &f(&[2]) + &f(&[1, 1]));
        assert_eq!(&f(&[2, 1]) * &QSymElem::one(), f(&[2, 1]));
        assert_eq!(&QSymElem::one() * &f(&[3]), f(&[3]));
    }

    #[test]
    fn monomial_examples() {
        let e = expand_monomials(&f(&[1, 1]), 2);
        let terms: Vec<_> = e.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, &vec![1, 1]);
        let e = expand_monomials(&f(&[4]), 1);
        assert_eq!(e.terms().next().unwrap().0, &vec![4]);
        assert_eq!(expand_monomials(&f(&[1, 1, 1]), 2).terms().count(), 0);
    }

    #[test]
    fn fcyc_basics() {
        assert_eq!(f_cyc(1, &[]).unwrap(), f(&[1]));
        assert_eq!(f_cyc(0, &[]).unwrap(), QSymElem::one());
        assert!(matches!(f_cyc(3, &[]), Err(Error::EscherSet { .. })));
        for n in 2..=6 {
            for s in non_escher_sets(n) {
                let base = f_cyc(n, &s).unwrap();
                for i in 1..n {
                    assert_eq!(f_cyc(n, &cyclic_shift(&s, i, n)).unwrap(), base);
                }
                let p = perm_with_cyclic_descent_set(n, &s).unwrap();
                assert_eq!(eval(&StatId::CDesL, &p), StatValue::set(s.clone()));
                let by_rotation = CycPerm::new(&p)
                    .orbit()
                    .iter()
                    .fold(QSymElem::zero(), |acc, r| &acc + &f(&r.descent_composition()));
                assert_eq!(by_rotation, base);
            }
        }
    }

    #[test]
    fn perturbed_rhs_is_rejected() {
        let (a, b) = (vec![1], vec![2]);
        let lhs = &f_cyc(2, &a).unwrap() * &f_cyc(2, &b).unwrap();
        let terms = fcyc_mult_rhs_terms(2, 2, &a, &b).unwrap();
        let dropped = terms[1..].iter().fold(QSymElem::zero(), |acc, t| &acc + t);
        assert_ne!(lhs, dropped);
        assert!(verify_fcyc_mult(2, 2, &a, &b).unwrap());
        assert!(verify_fcyc_mult(0, 3, &[], &[1]).unwrap());
    }

    #[test]
    fn peak_sets_are_realisable() {
        for n in 0..=7u32 {
            let mut linear: Vec<Vec<u32>> = Perm::all(n as usize)
                .map(|p| int_set(eval(&StatId::PkSet, &p)))
                .unique()
                .collect();
            linear.sort();
            let mut expected: Vec<Vec<u32>> = (0..=n)
                .flat_map(|k| (1..=n).combinations(k as usize))
                .filter(|s| is_peak_set(s, n))
                .collect();
            expected.sort();
            assert_eq!(linear, expected, "n = {n}");

            let mut cyclic: Vec<Vec<u32>> = Perm::all(n as usize)
                .map(|p| int_set(eval(&StatId::CPkL, &p)))
                .unique()
                .collect();
            cyclic.sort();
            let mut expected = cyclic_peak_sets(n);
            expected.sort();
            assert_eq!(cyclic, expected, "n = {n}");
        }
    }

    #[test]
    fn kcyc_shift_invariant_and_symmetric() {
        for n in 2..=6 {
            for s in cyclic_peak_sets(n) {
                let base = k_cyc(n, &s).unwrap();
                for i in 1..n {
                    assert_eq!(k_cyc(n, &cyclic_shift(&s, i, n)).unwrap(), base);
                }
            }
        }
        let a = PkAlgElem::k(3, &[2]).unwrap();
        let b = PkAlgElem::k(2, &[]).unwrap();
        assert_eq!(&a * &b, &b * &a);
        assert!(PkAlgElem::k(4, &[2, 3]).is_err());
    }

    #[test]
    fn independence_oracle() {
        for n in 1..=5u32 {
            let fs: Vec<QSymElem> = compositions(n).iter().map(|c| f(c)).collect();
            assert_eq!(fs.len(), 1 << (n - 1));
            assert_eq!(expansion_rank(&fs, n as usize), fs.len());
        }
        // Too few variables collapse F_{3,(1,1,1)}.
        let fs: Vec<QSymElem> = compositions(3).iter().map(|c| f(c)).collect();
        assert!(expansion_rank(&fs, 2) < 4);
        for n in 2..=6u32 {
            let classes: Vec<QSymElem> = non_escher_sets(n)
                .iter()
                .map(|s| f_cyc(n, s).unwrap())
                .unique_by(|e| e.to_string())
                .collect();
            assert_eq!(expansion_rank(&classes, n as usize), classes.len());
        }
    }

    #[test]
    fn json_shape() {
        let e = &f(&[1]) + &f(&[1]);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"n":1,"composition":[1],"coeff":"2"}]"#
        );
    }
}
