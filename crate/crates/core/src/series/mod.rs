//! Truncated power series in `t` with coefficients in ℚ[y], graded by a
//! power of `x`, and the explicit shuffle-algebra images for `(pk,des)`,
//! `(cpk,cdes)`, `cpk` and `cdes`.

mod poly;
mod qid;

use std::fmt;

use serde::Serialize;

use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::error::{Error, Result};
use crate::perm::{eval, Perm, StatId};
use crate::qsym::Rational;
use crate::util::{binomial, binomial_signed};

pub use poly::{BiPoly, Poly, QPoly};
pub use qid::{
    adin_cdes_lhs, adin_cdes_rhs, gauss_binom, majdes_rhs, majdes_rhs_as_printed,
    verify_adin_cdes, verify_maj_gf, verify_majdes_gf, verify_majdes_gf_as_printed,
};

use poly::{rat, times_power};

pub const DEFAULT_TRUNC: usize = 24;

/// `Σ_{p ≤ T} c_p(y) t^p · x^n`, where `c_p` is known to be a polynomial in
/// `p` of degree at most `degree_bound` for every `p ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesElem {
    pub x_grade: u32,
    coeffs: Vec<Poly>,
    pub degree_bound: u32,
}

fn range(msg: String) -> Error {
    Error::RangeViolation(msg)
}

impl SeriesElem {
    /// Expansion of `num / (1-t)^e · x^grade` through `t^trunc`. With
    /// `deg_t num < e` every coefficient is a polynomial in `p` of degree
    /// `e - 1`, which becomes the degree bound.
    pub fn from_rational(num: &BiPoly, e: u32, x_grade: u32, trunc: usize) -> Self {
        assert!(e >= 1 && num.t_coeffs().len() <= e as usize, "numerator degree too high");
        let kernel: Vec<Rational> = (0..=trunc)
            .map(|p| Rational::from_integer(binomial(p as u64 + e as u64 - 1, e as u64 - 1)))
            .collect();
        let coeffs = (0..=trunc)
            .map(|p| {
                num.t_coeffs()
                    .iter()
                    .take(p + 1)
                    .enumerate()
                    .fold(Poly::zero(), |acc, (i, c)| &acc + &c.scale(&kernel[p - i]))
            })
            .collect();
        SeriesElem {
            x_grade,
            coeffs,
            degree_bound: e - 1,
        }
    }

    /// The Hadamard unit `1/(1-t)`.
    pub fn unit(trunc: usize) -> Self {
        SeriesElem::from_rational(&BiPoly::one(), 1, 0, trunc)
    }

    pub fn zero(x_grade: u32, degree_bound: u32, trunc: usize) -> Self {
        SeriesElem {
            x_grade,
            coeffs: vec![Poly::zero(); trunc + 1],
            degree_bound,
        }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> &Poly {
        &self.coeffs[p]
    }

    fn check_trunc(&self) -> Result<()> {
        let need = self.degree_bound as usize + 1;
        if self.trunc() < need {
            return Err(Error::TruncationMismatch {
                have: self.trunc(),
                need,
            });
        }
        Ok(())
    }

    fn same_grade(&self, other: &SeriesElem) -> Result<()> {
        if self.x_grade != other.x_grade {
            return Err(range(format!(
                "x-grades differ ({} vs {})",
                self.x_grade, other.x_grade
            )));
        }
        Ok(())
    }

    pub fn plus(&self, other: &SeriesElem) -> Result<SeriesElem> {
        self.same_grade(other)?;
        let t = self.trunc().min(other.trunc());
        Ok(SeriesElem {
            x_grade: self.x_grade,
            coeffs: (0..=t).map(|p| &self.coeffs[p] + &other.coeffs[p]).collect(),
            degree_bound: self.degree_bound.max(other.degree_bound),
        })
    }

    pub fn scale(&self, c: i64) -> SeriesElem {
        let c = rat(c);
        SeriesElem {
            x_grade: self.x_grade,
            coeffs: self.coeffs.iter().map(|p| p.scale(&c)).collect(),
            degree_bound: self.degree_bound,
        }
    }

    /// Coefficientwise product in `t`, ordinary product in `x` and `y`.
    pub fn hadamard(&self, other: &SeriesElem) -> Result<SeriesElem> {
        let t = self.trunc().min(other.trunc());
        let d = self.degree_bound + other.degree_bound;
        if t < d as usize + 1 {
            return Err(Error::TruncationMismatch {
                have: t,
                need: d as usize + 1,
            });
        }
        Ok(SeriesElem {
            x_grade: self.x_grade + other.x_grade,
            coeffs: (0..=t).map(|p| &self.coeffs[p] * &other.coeffs[p]).collect(),
            degree_bound: d,
        })
    }

    /// Exact equality: both sides are polynomial in `p` of bounded degree,
    /// so agreement on `p = 0..=d` decides it.
    pub fn agrees(&self, other: &SeriesElem) -> Result<bool> {
        self.check_trunc()?;
        other.check_trunc()?;
        if self.x_grade != other.x_grade {
            return Ok(false);
        }
        let d = self.degree_bound.max(other.degree_bound) as usize;
        let t = self.trunc().min(other.trunc());
        if t < d + 1 {
            return Err(Error::TruncationMismatch { have: t, need: d + 1 });
        }
        Ok((0..=t).all(|p| self.coeffs[p] == other.coeffs[p]))
    }

    pub fn at_y(&self, y: i64) -> SeriesElem {
        let y = rat(y);
        SeriesElem {
            x_grade: self.x_grade,
            coeffs: self.coeffs.iter().map(|c| Poly::constant(c.eval(&y))).collect(),
            degree_bound: self.degree_bound,
        }
    }
}

impl fmt::Display for SeriesElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| format!("({})t^{p}", c.to_string().replace('q', "y")))
            .collect();
        write!(f, "x^{} [{} + O(t^{})]", self.x_grade, terms.join(" + "), self.trunc() + 1)
    }
}

/// A function `p ↦ value·x^n` recorded by a descriptor and its table of
/// values for `p = 0..=T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PSeqElem {
    pub x_grade: u32,
    pub descriptor: String,
    #[serde(serialize_with = "ser_rationals")]
    values: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl PSeqElem {
    pub fn tabulate(x_grade: u32, descriptor: String, trunc: usize, f: impl Fn(u64) -> Rational) -> Self {
        PSeqElem {
            x_grade,
            descriptor,
            values: (0..=trunc as u64).map(f).collect(),
        }
    }

    pub fn value_at(&self, p: usize) -> Option<&Rational> {
        self.values.get(p)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Pointwise product, the counterpart of the Hadamard product.
    pub fn pointwise(&self, other: &PSeqElem) -> PSeqElem {
        PSeqElem {
            x_grade: self.x_grade + other.x_grade,
            descriptor: format!("({})·({})", self.descriptor, other.descriptor),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Whether the `t^p` coefficients of `s` are the constants `value_at(p)`.
    pub fn matches(&self, s: &SeriesElem) -> bool {
        self.x_grade == s.x_grade
            && self.values.len() <= s.coeffs().len()
            && self
                .values
                .iter()
                .zip(s.coeffs())
                .all(|(v, c)| c.as_constant().as_ref() == Some(v))
    }
}

fn y_plus_t() -> BiPoly {
    BiPoly::linear_t(&[0, 1], &[1])
}

fn one_plus_yt() -> BiPoly {
    BiPoly::linear_t(&[1], &[0, 1])
}

fn one_plus_y() -> BiPoly {
    BiPoly::linear_t(&[1, 1], &[])
}

fn one_plus_t() -> BiPoly {
    BiPoly::linear_t(&[1], &[1])
}

fn t_pow(a: usize) -> BiPoly {
    BiPoly::monomial(a, 0)
}

/// Numerator of `u^{(pk,des)}_{n,j,k}` over `(1-t)^{n+1}`.
pub fn u_numerator(n: u32, j: u32, k: u32) -> Result<BiPoly> {
    if n < 1 || 2 * j > n - 1 || k < j || k + j + 1 > n {
        return Err(range(format!("u_{{{n},{j},{k}}} needs n >= 1, j <= (n-1)/2, j <= k <= n-j-1")));
    }
    Ok(&(&(&t_pow(j as usize + 1) * &y_plus_t().pow(k - j)) * &one_plus_yt().pow(n - j - k - 1))
        * &one_plus_y().pow(2 * j + 1))
}

pub fn u_pkdes(n: u32, j: u32, k: u32, trunc: usize) -> Result<SeriesElem> {
    Ok(SeriesElem::from_rational(&u_numerator(n, j, k)?, n + 1, n, trunc))
}

/// Image of a linear permutation in the `(pk,des)` shuffle algebra.
pub fn u_image(p: &Perm, trunc: usize) -> SeriesElem {
    if p.is_empty() {
        return SeriesElem::unit(trunc);
    }
    let j = eval(&StatId::Pk, p).as_int().unwrap() as u32;
    let k = eval(&StatId::Des, p).as_int().unwrap() as u32;
    u_pkdes(p.len() as u32, j, k, trunc).expect("attained (pk,des) pairs are in range")
}

fn check_v_range(n: u32, j: u32, k: u32) -> Result<()> {
    if n < 2 || j < 1 || 2 * j > n || k < j || k + j > n {
        return Err(range(format!("v_{{{n},{j},{k}}} needs n >= 2, 1 <= j <= n/2, j <= k <= n-j")));
    }
    Ok(())
}

/// Numerator of `v^{(cpk,cdes)}_{n,j,k}` as the four-term combination of
/// `u` numerators.
pub fn v_numerator(n: u32, j: u32, k: u32) -> Result<BiPoly> {
    check_v_range(n, j, k)?;
    let terms = [
        (j, j as i64 - 1, k as i64),
        (j, j as i64 - 1, k as i64 - 1),
        (k - j, j as i64, k as i64 - 1),
        (n - j - k, j as i64, k as i64),
    ];
    let mut out = BiPoly::default();
    for (c, jj, kk) in terms {
        if c == 0 {
            continue;
        }
        out = &out + &u_numerator(n, jj as u32, kk as u32)?.scale(c as i64);
    }
    Ok(out)
}

/// Numerator of the closed product form of `v^{(cpk,cdes)}_{n,j,k}`.
pub fn v_closed_numerator(n: u32, j: u32, k: u32) -> Result<BiPoly> {
    check_v_range(n, j, k)?;
    let (jj, kk, nn) = (j as i64, k as i64, n as i64);
    let first = &(&(&y_plus_t() * &one_plus_yt()) * &one_plus_y()) * &one_plus_t();
    let mixed = &one_plus_yt().scale(kk - jj) + &y_plus_t().scale(nn - jj - kk);
    let second = &(&mixed * &t_pow(1)) * &one_plus_y().pow(2);
    let bracket = &first.scale(jj) + &second;
    let base = &(&bracket * &t_pow(j as usize)) * &one_plus_y().pow(2 * j - 1);
    let with_a = times_power(&base, &y_plus_t(), kk - jj - 1);
    with_a
        .and_then(|b| times_power(&b, &one_plus_yt(), nn - jj - kk - 1))
        .ok_or_else(|| range(format!("closed form of v_{{{n},{j},{k}}} is not a polynomial numerator")))
}

pub fn v_cpkcdes(n: u32, j: u32, k: u32, trunc: usize) -> Result<SeriesElem> {
    Ok(SeriesElem::from_rational(&v_numerator(n, j, k)?, n + 1, n, trunc))
}

pub fn v_cpkcdes_closed(n: u32, j: u32, k: u32, trunc: usize) -> Result<SeriesElem> {
    Ok(SeriesElem::from_rational(&v_closed_numerator(n, j, k)?, n + 1, n, trunc))
}

/// Image of a cyclic permutation in the `(cpk,cdes)` cyclic shuffle algebra.
pub fn v_image(c: &CycPerm, trunc: usize) -> SeriesElem {
    match c.len() {
        0 => SeriesElem::unit(trunc),
        1 => SeriesElem::from_rational(&(&t_pow(1) * &one_plus_y()), 2, 1, trunc),
        n => {
            let j = ceval(&CycStatId::Cpk, c).as_int().unwrap() as u32;
            let k = ceval(&CycStatId::Cdes, c).as_int().unwrap() as u32;
            v_cpkcdes(n as u32, j, k, trunc).expect("attained (cpk,cdes) pairs are in range")
        }
    }
}

/// `(k t^k + (n-k) t^{k+1}) / (1-t)^{n+1} · x^n`; also the images
/// `1/(1-t)` for `n = 0` and `t/(1-t)^2 · x` for `(n, k) = (1, 0)`.
pub fn cdes_series(n: u32, k: u32, trunc: usize) -> Result<SeriesElem> {
    match (n, k) {
        (0, 0) => return Ok(SeriesElem::unit(trunc)),
        (1, 0) => {}
        _ if n >= 2 && (1..n).contains(&k) => {}
        _ => return Err(range(format!("cdes image needs 1 <= k <= n-1 (got n={n}, k={k})"))),
    }
    let num = &t_pow(k as usize).scale(k as i64) + &t_pow(k as usize + 1).scale((n - k) as i64);
    Ok(SeriesElem::from_rational(&num, n + 1, n, trunc))
}

/// `p ↦ C(p+n-k-1, n-1)·p`, with the constant `1` for `n = 0`.
pub fn cdes_pform(n: u32, k: u32, trunc: usize) -> Result<PSeqElem> {
    cdes_series(n, k, 0)?;
    if n == 0 {
        return Ok(PSeqElem::tabulate(0, "1".into(), trunc, |_| rat(1)));
    }
    let descriptor = format!("C(p+{},{})·p", n as i64 - k as i64 - 1, n - 1);
    Ok(PSeqElem::tabulate(n, descriptor, trunc, move |p| {
        let top = p as i64 + n as i64 - k as i64 - 1;
        Rational::from_integer(binomial_signed(top, n as i64 - 1) * p)
    }))
}

fn check_cpk_range(n: u32, j: u32) -> Result<()> {
    if n < 2 || j < 1 || 2 * j > n {
        return Err(range(format!("cpk image needs n >= 2, 1 <= j <= n/2 (got n={n}, j={j})")));
    }
    Ok(())
}

/// `(j(1+t)^2 + 2(n-2j)t)(4t)^j(1+t)^{n-2j-1} / (1-t)^{n+1} · x^n`.
pub fn cpk_series(n: u32, j: u32, trunc: usize) -> Result<SeriesElem> {
    check_cpk_range(n, j)?;
    let bracket = &one_plus_t().pow(2).scale(j as i64) + &t_pow(1).scale(2 * (n as i64 - 2 * j as i64));
    let base = &bracket * &t_pow(j as usize).scale(4i64.pow(j));
    let num = times_power(&base, &one_plus_t(), n as i64 - 2 * j as i64 - 1)
        .ok_or_else(|| range(format!("cpk image for n={n}, j={j} is not polynomial")))?;
    Ok(SeriesElem::from_rational(&num, n + 1, n, trunc))
}

/// The p-indexed form `w^{cpk}_{n,j}`.
pub fn w_cpk(n: u32, j: u32, trunc: usize) -> Result<PSeqElem> {
    check_cpk_range(n, j)?;
    let (n, j) = (n as i64, j as i64);
    let four_j = num_bigint::BigInt::from(4).pow(j as u32);
    let descriptor = format!("w^cpk_{{{n},{j}}}(p)");
    Ok(PSeqElem::tabulate(n as u32, descriptor, trunc, move |p| {
        let p = p as i64;
        let first: num_bigint::BigInt = (0..=p - j)
            .map(|k| binomial_signed(n + k, k) * binomial_signed(n - 2 * j + 1, p - j - k))
            .sum();
        let second: num_bigint::BigInt = (0..=p - 1 - j)
            .map(|k| binomial_signed(n + k, k) * binomial_signed(n - 2 * j - 1, p - j - k - 1))
            .sum();
        Rational::from_integer(&four_j * (first * j + second * (2 * (n - 2 * j))))
    }))
}

/// The four-term census of `(pk, des)` over the rotations of `[π]`: the
/// multiplicities of `(j-1,k)`, `(j-1,k-1)`, `(j,k-1)` and `(j,k)`, or
/// `None` if some rotation falls outside these four.
pub fn rotation_census(c: &CycPerm) -> Option<[u32; 4]> {
    let j = ceval(&CycStatId::Cpk, c).as_int()?;
    let k = ceval(&CycStatId::Cdes, c).as_int()?;
    let mut out = [0; 4];
    for r in c.orbit() {
        let pk = eval(&StatId::Pk, &r).as_int()?;
        let des = eval(&StatId::Des, &r).as_int()?;
        let slot = [(j - 1, k), (j - 1, k - 1), (j, k - 1), (j, k)]
            .iter()
            .position(|&pair| pair == (pk, des))?;
        out[slot] += 1;
    }
    Some(out)
}

/// Sum of `image` over a list, in a given grade.
pub(crate) fn sum_images<T>(
    items: &[T],
    x_grade: u32,
    degree_bound: u32,
    trunc: usize,
    image: impl Fn(&T) -> SeriesElem,
) -> Result<SeriesElem> {
    items
        .iter()
        .try_fold(SeriesElem::zero(x_grade, degree_bound, trunc), |acc, it| acc.plus(&image(it)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_small() {
        let u = u_pkdes(1, 0, 0, 6).unwrap();
        // t(1+y)/(1-t)^2: coefficient of t^p is p(1+y).
        for p in 0..=6 {
            assert_eq!(u.coeff(p), &Poly::from_ints([p as i64, p as i64]));
        }
        for n in 1..=6 {
            for j in 0..=(n - 1) / 2 {
                for k in j..n - j {
                    assert!(u_pkdes(n, j, k, 8).unwrap().coeff(0).is_zero());
                }
            }
        }
        assert!(u_pkdes(3, 1, 0, 8).is_err());
    }

    #[test]
    fn hadamard_unit_and_mismatch() {
        let one = SeriesElem::unit(8);
        let u = u_pkdes(3, 1, 1, 8).unwrap();
        assert!(one.hadamard(&u).unwrap().agrees(&u).unwrap());
        let short = u_pkdes(3, 1, 1, 3).unwrap();
        assert!(matches!(
            short.hadamard(&u),
            Err(Error::TruncationMismatch { have: 3, need: 7 })
        ));
        assert!(matches!(
            short.agrees(&short),
            Err(Error::TruncationMismatch { have: 3, need: 4 })
        ));
    }

    #[test]
    fn closed_form_matches_four_terms() {
        for n in 2..=8 {
            for j in 1..=n / 2 {
                for k in j..=n - j {
                    assert_eq!(
                        v_numerator(n, j, k).unwrap(),
                        v_closed_numerator(n, j, k).unwrap(),
                        "n={n} j={j} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn cdes_length_one_square() {
        let a = cdes_series(1, 0, 10).unwrap();
        let sq = a.hadamard(&a).unwrap();
        // [1] ⧢ [2] is the single class [12], with cdes 1.
        assert!(sq.agrees(&cdes_series(2, 1, 10).unwrap()).unwrap());
    }

    #[test]
    fn forms_agree_small() {
        let s = cdes_series(4, 3, 20).unwrap();
        let w = cdes_pform(4, 3, 20).unwrap();
        assert!(w.matches(&s));
        assert_eq!(w.value_at(1), Some(&rat(0)));
        assert_eq!(w.value_at(3), Some(&rat(3)));
        assert!(w_cpk(4, 2, 20).unwrap().matches(&cpk_series(4, 2, 20).unwrap()));
        assert!(cpk_series(5, 3, 10).is_err());
    }

    #[test]
    fn least_monomial_of_v() {
        for n in 2..=8 {
            for j in 1..=n / 2 {
                for k in j..=n - j {
                    let lm = v_numerator(n, j, k).unwrap().least_monomial();
                    assert_eq!(lm, Some((j as usize, (k - j) as usize)));
                }
            }
        }
    }
}
