use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::qsym::Rational;

pub(crate) fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Dense univariate polynomial over ℚ, lowest degree first, no trailing
/// zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly(Vec<Rational>);

/// Polynomials in `q`.
pub type QPoly = Poly;

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Poly::new(coeffs.into_iter().map(rat).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c·v^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Coefficients up to and including degree `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.0.iter().take(n + 1).cloned().collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 if c.is_one() => "q".to_string(),
                1 => format!("{c}q"),
                _ if c.is_one() => format!("q^{k}"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

/// Polynomial in `t` whose coefficients are polynomials in `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly(Vec<Poly>);

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly(coeffs)
    }

    pub fn one() -> Self {
        BiPoly(vec![Poly::one()])
    }

    pub fn constant(c: i64) -> Self {
        BiPoly::new(vec![Poly::from_ints([c])])
    }

    /// `t^a y^b`.
    pub fn monomial(a: usize, b: usize) -> Self {
        let mut v = vec![Poly::zero(); a + 1];
        v[a] = Poly::monomial(b, Rational::one());
        BiPoly(v)
    }

    /// `c0 + c1·t` with `c0, c1` polynomials in `y` given as integer lists.
    pub fn linear_t(c0: &[i64], c1: &[i64]) -> Self {
        BiPoly::new(vec![
            Poly::from_ints(c0.iter().copied()),
            Poly::from_ints(c1.iter().copied()),
        ])
    }

    pub fn t_coeffs(&self) -> &[Poly] {
        &self.0
    }

    pub fn t_coeff(&self, k: usize) -> Poly {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = rat(c);
        BiPoly::new(self.0.iter().map(|p| p.scale(&c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Substitute a value for `y`.
    pub fn at_y(&self, y: &Rational) -> Self {
        BiPoly::new(self.0.iter().map(|p| Poly::constant(p.eval(y))).collect())
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self`.
    /// Requires either the leading or the constant `t`-coefficient of `d` to
    /// be a nonzero constant in `y`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let lead = d.0.last()?.as_constant().filter(|c| !c.is_zero());
        if let Some(lead) = lead {
            let dd = d.0.len() - 1;
            let mut rem = self.0.clone();
            if rem.len() <= dd {
                return self.is_zero().then(BiPoly::default);
            }
            let mut quot = vec![Poly::zero(); rem.len() - dd];
            for i in (0..quot.len()).rev() {
                let q = rem[i + dd].scale(&(Rational::one() / &lead));
                for (k, dk) in d.0.iter().enumerate() {
                    rem[i + k] = &rem[i + k] - &(&q * dk);
                }
                quot[i] = q;
            }
            return rem.iter().all(Poly::is_zero).then(|| BiPoly::new(quot));
        }
        let low = d.0[0].as_constant().filter(|c| !c.is_zero())?;
        let top = self.0.len().saturating_sub(d.0.len() - 1);
        let mut rem = self.0.clone();
        let mut quot = vec![Poly::zero(); top];
        for i in 0..top {
            let q = rem[i].scale(&(Rational::one() / &low));
            for (k, dk) in d.0.iter().enumerate() {
                if i + k < rem.len() {
                    rem[i + k] = &rem[i + k] - &(&q * dk);
                }
            }
            quot[i] = q;
        }
        rem.iter().all(Poly::is_zero).then(|| BiPoly::new(quot))
    }

    /// Least monomial `t^a y^b`, ordering by the exponent of `t` first.
    pub fn least_monomial(&self) -> Option<(usize, usize)> {
        let a = self.0.iter().position(|p| !p.is_zero())?;
        Some((a, self.0[a].lowest_degree()?))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.0.len().max(rhs.0.len());
        BiPoly::new((0..len).map(|i| &self.t_coeff(i) + &rhs.t_coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::default();
        }
        let mut out = vec![Poly::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

/// `base^e`, dividing exactly when `e` is negative.
pub(crate) fn times_power(num: &BiPoly, base: &BiPoly, e: i64) -> Option<BiPoly> {
    if e >= 0 {
        return Some(num * &base.pow(e as u32));
    }
    (0..e.unsigned_abs()).try_fold(num.clone(), |acc, _| acc.div_exact(base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arithmetic() {
        let a = Poly::from_ints([1, 1]);
        assert_eq!(a.pow(2), Poly::from_ints([1, 2, 1]));
        assert_eq!((&a - &a), Poly::zero());
        assert_eq!(a.eval(&rat(2)), rat(3));
        assert_eq!(Poly::from_ints([0, 0, 3]).to_string(), "3q^2");
    }

    #[test]
    fn exact_division() {
        let y_plus_t = BiPoly::linear_t(&[0, 1], &[1]);
        let one_plus_yt = BiPoly::linear_t(&[1], &[0, 1]);
        let prod = &(&y_plus_t * &one_plus_yt) * &BiPoly::monomial(2, 1);
        let q = prod.div_exact(&y_plus_t).unwrap();
        assert_eq!(q, &one_plus_yt * &BiPoly::monomial(2, 1));
        assert_eq!(q.div_exact(&one_plus_yt).unwrap(), BiPoly::monomial(2, 1));
        assert!(BiPoly::monomial(1, 0).div_exact(&y_plus_t).is_none());
        assert!(BiPoly::constant(1).div_exact(&one_plus_yt).is_none());
    }
}
