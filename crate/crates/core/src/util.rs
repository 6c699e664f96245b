//! Small shared helpers: deterministic integer sequences and binomials.

use num_bigint::BigInt;
use num_traits::One;

/// Deterministic pseudo-random stream (splitmix64).  Used wherever the
/// artifact needs "random" rational data: evaluation points, test Gram
/// matrices, spot-check vectors.  Same seed, same stream, on every run.
#[derive(Debug, Clone)]
pub struct DetSeq {
    state: u64,
}

impl DetSeq {
    pub fn new(seed: u64) -> Self {
        DetSeq { state: seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(0x2545f4914f6cdd1d) }
    }

    /// Derive an independent stream from a label, e.g. per candidate or
    /// per evaluation point.
    pub fn derive(&self, label: u64) -> Self {
        DetSeq::new(self.state ^ label.wrapping_mul(0xff51afd7ed558ccd))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Small signed integer in `[-bound, bound]`.
    pub fn small(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        self.below(span) as i64 - bound
    }

    /// Small nonzero signed integer in `[-bound, bound] \ {0}`.
    pub fn small_nonzero(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.small(bound);
            if v != 0 {
                return v;
            }
        }
    }
}

/// Binomial coefficient as `BigInt`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorisation of `n` as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut res = n;
    for (p, _) in factorize(n) {
        res = res / p * (p - 1);
    }
    res
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detseq_is_reproducible() {
        let mut a = DetSeq::new(7);
        let mut b = DetSeq::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1200), 320);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(14, 7), BigInt::from(3432));
        assert_eq!(binomial(5, 6), BigInt::from(0));
    }
}
