//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator, which is exactly the representation contract the
//! rest of the crate relies on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Reduce into `[0, 1)`, i.e. the image in ℚ/ℤ.
pub fn mod1(x: &Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// Floor as `BigInt`.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling as `BigInt`.
pub fn ceil_int(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

/// `⌊√n⌋` for a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// `⌊√x⌋` for a nonnegative rational: `⌊ ⌊√(p·q)⌋ / q ⌋` for `x = p/q`.
pub fn floor_sqrt(x: &Rat) -> BigInt {
    assert!(!x.is_negative());
    let p = x.numer();
    let q = x.denom();
    isqrt(&(p * q)).div_floor(q)
}

/// Largest integer `k` with `k ≤ s + √r` (`r ≥ 0`).  Exact: candidate from
/// integer square roots, then corrected by rational comparison.
pub fn floor_shift_sqrt(r: &Rat, s: &Rat) -> BigInt {
    assert!(!r.is_negative());
    let mut k = floor_int(&(s + Rat::from_integer(floor_sqrt(r))));
    // k ≤ s + √r  ⟺  k - s ≤ √r  ⟺  k - s ≤ 0  ∨  (k-s)² ≤ r
    let le = |k: &BigInt| -> bool {
        let d = Rat::from_integer(k.clone()) - s;
        !d.is_positive() || &d * &d <= *r
    };
    while !le(&k) {
        k -= 1;
    }
    loop {
        let k1 = &k + 1;
        if le(&k1) {
            k = k1;
        } else {
            break;
        }
    }
    k
}

/// Smallest integer `k` with `k ≥ s - √r` (`r ≥ 0`).
pub fn ceil_shift_sqrt(r: &Rat, s: &Rat) -> BigInt {
    // k ≥ s - √r ⟺ -k ≤ -s + √r
    -floor_shift_sqrt(r, &(-s))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod1_normalises() {
        assert_eq!(mod1(&rat(-1, 4)), rat(3, 4));
        assert_eq!(mod1(&rat(9, 4)), rat(1, 4));
        assert!(mod1(&rat_int(5)).is_zero());
    }

    #[test]
    fn exact_sqrt_bounds() {
        // floor(√(17/3)) = 2
        assert_eq!(floor_sqrt(&rat(17, 3)), BigInt::from(2));
        // floor(1/2 + √2) = 1, ceil(1/2 - √2) = 0 ... check against direct reasoning
        assert_eq!(floor_shift_sqrt(&rat_int(2), &rat(1, 2)), BigInt::from(1));
        assert_eq!(ceil_shift_sqrt(&rat_int(2), &rat(1, 2)), BigInt::from(0));
        // boundary exactness: k ≤ 3 + √4 must give exactly 5
        assert_eq!(floor_shift_sqrt(&rat_int(4), &rat_int(3)), BigInt::from(5));
        assert_eq!(ceil_shift_sqrt(&rat_int(4), &rat_int(3)), BigInt::from(1));
    }

    #[test]
    fn denominator_lcm_works() {
        let xs = [rat(1, 6), rat(3, 4), rat_int(2)];
        assert_eq!(denominator_lcm(xs.iter()), BigInt::from(12));
    }
}
