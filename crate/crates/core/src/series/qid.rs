use num_traits::One;

use crate::cyc::{ceval, CycPerm, CycStatId};
use crate::error::{Error, Result};
use crate::perm::{eval, Perm, StatId};
use crate::qsym::Rational;
use crate::shuffle::{cyclic_shuffles, shuffles, shuffles_with_des};
use crate::util::binomial;

use super::poly::{rat, QPoly};

fn stat(st: StatId, p: &Perm) -> i64 {
    eval(&st, p).as_int().expect("integer statistic")
}

fn q_pow(k: i64) -> QPoly {
    QPoly::monomial(k as usize, Rational::one())
}

/// Gaussian binomial `[a, b]_q`, zero unless `0 ≤ b ≤ a`.
pub fn gauss_binom(a: i64, b: i64) -> QPoly {
    if b < 0 || a < 0 || b > a {
        return QPoly::zero();
    }
    // row[b] = [r, b] via [r, b] = [r-1, b-1] + q^b [r-1, b]
    let mut row = vec![QPoly::one()];
    for r in 1..=a as usize {
        let mut next = vec![QPoly::one(); r + 1];
        for c in 1..r {
            next[c] = &row[c - 1] + &(&q_pow(c as i64) * &row[c]);
        }
        row = next;
    }
    row.swap_remove(b as usize)
}

fn generating(perms: &[Perm]) -> QPoly {
    perms
        .iter()
        .fold(QPoly::zero(), |acc, t| &acc + &q_pow(stat(StatId::Maj, t)))
}

/// `Σ_{τ ∈ π⧢σ} q^{maj τ} = q^{maj π + maj σ} [m+n, m]_q`.
pub fn verify_maj_gf(p: &Perm, q: &Perm) -> Result<bool> {
    let lhs = generating(&shuffles(p, q)?);
    let (m, n) = (p.len() as i64, q.len() as i64);
    let rhs = &q_pow(stat(StatId::Maj, p) + stat(StatId::Maj, q)) * &gauss_binom(m + n, m);
    Ok(lhs == rhs)
}

fn majdes_form(p: &Perm, q: &Perm, k: i64, swapped: bool) -> QPoly {
    let (m, n) = (p.len() as i64, q.len() as i64);
    let (i, j) = (stat(StatId::Des, p), stat(StatId::Des, q));
    if k < i || k < j {
        return QPoly::zero();
    }
    let (a, b) = if swapped {
        (gauss_binom(m - i + j, k - i), gauss_binom(n - j + i, k - j))
    } else {
        (gauss_binom(m - j + i, k - j), gauss_binom(n - i + j, k - i))
    };
    let shift = stat(StatId::Maj, p) + stat(StatId::Maj, q) + (k - i) * (k - j);
    &q_pow(shift) * &(&a * &b)
}

/// `q^{maj π + maj σ + (k-i)(k-j)} [m-i+j, k-i]_q [n-j+i, k-j]_q` with
/// `i = des π`, `j = des σ`.
pub fn majdes_rhs(p: &Perm, q: &Perm, k: i64) -> QPoly {
    majdes_form(p, q, k, true)
}

/// The same product with the Gaussian binomials `[m-j+i, k-j][n-i+j, k-i]`.
pub fn majdes_rhs_as_printed(p: &Perm, q: &Perm, k: i64) -> QPoly {
    majdes_form(p, q, k, false)
}

pub fn verify_majdes_gf(p: &Perm, q: &Perm, k: i64) -> Result<bool> {
    Ok(generating(&shuffles_with_des(p, q, k)?) == majdes_rhs(p, q, k))
}

pub fn verify_majdes_gf_as_printed(p: &Perm, q: &Perm, k: i64) -> Result<bool> {
    Ok(generating(&shuffles_with_des(p, q, k)?) == majdes_rhs_as_printed(p, q, k))
}

/// `Σ_{[τ] ∈ [π]⧢[σ]} q^{cdes[τ]}`.
pub fn adin_cdes_lhs(p: &Perm, q: &Perm) -> Result<QPoly> {
    let classes = cyclic_shuffles(&CycPerm::new(p), &CycPerm::new(q))?;
    Ok(classes.iter().fold(QPoly::zero(), |acc, c| {
        &acc + &q_pow(ceval(&CycStatId::Cdes, c).as_int().unwrap())
    }))
}

/// `(1-q)^{m+n} Σ_k C(k+m-cdes π-1, m-1) C(k+n-cdes σ-1, n-1) k q^k`
/// through `q^order`.
pub fn adin_cdes_rhs(p: &Perm, q: &Perm, order: usize) -> Result<QPoly> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::RangeViolation("both permutations must be nonempty".into()));
    }
    p.check_disjoint(q)?;
    let (m, n) = (p.len() as u64, q.len() as u64);
    let cp = ceval(&CycStatId::Cdes, &CycPerm::new(p)).as_int().unwrap() as u64;
    let cq = ceval(&CycStatId::Cdes, &CycPerm::new(q)).as_int().unwrap() as u64;
    let series = QPoly::new(
        (0..=order as u64)
            .map(|k| {
                let c = binomial(k + m - cp - 1, m - 1) * binomial(k + n - cq - 1, n - 1) * k;
                rat(c)
            })
            .collect(),
    );
    let factor = QPoly::new(vec![rat(1), rat(-1)]).pow((m + n) as u32);
    Ok((&series * &factor).truncate(order))
}

/// Adin et al.'s formula for the `cdes` distribution over `[π]⧢[σ]`,
/// compared through `q^{2(m+n)+2}`.
pub fn verify_adin_cdes(p: &Perm, q: &Perm) -> Result<bool> {
    let order = 2 * (p.len() + q.len()) + 2;
    let rhs = adin_cdes_rhs(p, q, order)?;
    Ok(adin_cdes_lhs(p, q)? == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn gauss_values() {
        assert_eq!(gauss_binom(2, 1), QPoly::from_ints([1, 1]));
        assert_eq!(gauss_binom(5, 0), QPoly::one());
        assert_eq!(gauss_binom(2, 3), QPoly::zero());
        for a in 0..=12 {
            for b in 0..=a {
                let g = gauss_binom(a, b);
                assert_eq!(g.eval(&rat(1)), rat(binomial(a as u64, b as u64)));
                assert_eq!(g, gauss_binom(a, a - b));
            }
        }
        assert_eq!(gauss_binom(4, 2).eval(&rat(1)), rat(BigInt::from(6)));
    }

    #[test]
    fn small_identities() {
        assert!(verify_maj_gf(&p("21"), &p("3")).unwrap());
        assert!(verify_maj_gf(&Perm::empty(), &p("21")).unwrap());
        assert!(verify_majdes_gf(&p("21"), &p("3"), 1).unwrap());
        assert!(!verify_majdes_gf_as_printed(&p("21"), &p("3"), 1).unwrap());
        assert!(verify_majdes_gf(&p("21"), &p("3"), -1).unwrap());
        assert!(verify_maj_gf(&p("12"), &p("23")).is_err());
    }

    #[test]
    fn adin_small() {
        assert_eq!(adin_cdes_lhs(&p("1"), &p("2")).unwrap(), q_pow(1));
        assert!(verify_adin_cdes(&p("1"), &p("2")).unwrap());
        assert!(verify_adin_cdes(&p("132"), &p("54")).unwrap());
        assert!(adin_cdes_rhs(&Perm::empty(), &p("1"), 4).is_err());
    }
}
