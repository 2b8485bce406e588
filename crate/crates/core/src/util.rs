//! Small combinatorial helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Lexicographically least rotation of a word. Quadratic, which is fine at
/// the lengths this crate works with.
pub fn least_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = 0;
    for start in 1..n {
        let cmp = (0..n)
            .map(|i| word[(start + i) % n].cmp(&word[(best + i) % n]))
            .find(|o| o.is_ne());
        if cmp == Some(std::cmp::Ordering::Less) {
            best = start;
        }
    }
    word[best..].iter().chain(&word[..best]).cloned().collect()
}

/// Binomial coefficient `C(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with a possibly negative upper index, using
/// `C(n, k) = n (n-1) ... (n-k+1) / k!`. Zero for negative `k`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial(n as u64, k as u64);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_rotation_picks_smallest() {
        assert_eq!(least_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(least_rotation(&[2, 1, 2, 1]), vec![1, 2, 1, 2]);
        assert_eq!(least_rotation::<u32>(&[]), Vec::<u32>::new());
        assert_eq!(least_rotation(&[1, 1, 0, 1]), vec![0, 1, 1, 1]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial_signed(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_signed(-2, 2), BigInt::from(3));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
