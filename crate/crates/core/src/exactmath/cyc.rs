//! Exact cyclotomic arithmetic.
//!
//! A `Cyc` is an element of ℚ(ζ_M) stored as the canonical residue of its
//! coefficient polynomial modulo the M-th cyclotomic polynomial: a sparse
//! map exponent → ℚ with every exponent < φ(M).  Zero testing is therefore
//! map emptiness and equality is map equality after lifting both operands
//! to the lcm conductor.  Square roots of positive rationals embed via
//! Gauss sums, so Weil matrix entries like e(-σ/8)/√|D| stay exact.

use super::rat::{mod1, rat, Rat};
use crate::util::{euler_phi, factorize, gcd_u64, lcm_u64};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Reduction data for one conductor: φ(M) and the rewrite rows expressing
/// x^k (φ(M) ≤ k < M) in the canonical basis x^0..x^{φ(M)-1}.
struct CycTable {
    phi: u64,
    rewrite: Vec<Vec<BigInt>>,
}

fn table_cache() -> &'static Mutex<HashMap<u64, Arc<CycTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the M-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    // Φ_m = Π_{d | m} (x^d - 1)^{μ(m/d)}, computed by polynomial division:
    // start from x^m - 1 and divide by Φ_d for every proper divisor d.
    let mut poly = vec![BigInt::zero(); m as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[m as usize] = BigInt::one();
    for d in crate::util::divisors(m) {
        if d == m {
            continue;
        }
        let div = cyclotomic_polynomial_small(d);
        poly = poly_div_exact(&poly, &div);
    }
    poly
}

// Memoised helper (Φ_d for divisors is reused heavily while building tables).
fn cyclotomic_polynomial_small(m: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.as_ref().clone();
    }
    let p = cyclotomic_polynomial(m);
    cache.lock().unwrap().insert(m, Arc::new(p.clone()));
    p
}

/// Exact division of integer polynomials (remainder must vanish).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=(dn - dd)).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        // den is monic in every use here
        quot[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

fn table_for(m: u64) -> Arc<CycTable> {
    if let Some(t) = table_cache().lock().unwrap().get(&m) {
        return t.clone();
    }
    let phi = euler_phi(m);
    let cp = cyclotomic_polynomial(m);
    debug_assert_eq!(cp.len() as u64, phi + 1);
    // x^phi ≡ -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    let base: Vec<BigInt> = (0..phi as usize).map(|j| -cp[j].clone()).collect();
    let mut rewrite = Vec::with_capacity((m - phi) as usize);
    rewrite.push(base);
    for _ in 1..(m - phi) {
        let prev = rewrite.last().unwrap();
        // multiply by x, fold the overflow term through row 0
        let mut next = vec![BigInt::zero(); phi as usize];
        for j in 0..(phi as usize - 1) {
            next[j + 1] = prev[j].clone();
        }
        let top = prev[phi as usize - 1].clone();
        if !top.is_zero() {
            for j in 0..phi as usize {
                let t = &rewrite[0][j] * &top;
                next[j] += t;
            }
        }
        rewrite.push(next);
    }
    let t = Arc::new(CycTable { phi, rewrite });
    table_cache().lock().unwrap().insert(m, t.clone());
    t
}

/// An element of the cyclotomic field ℚ(ζ_M), exact.
#[derive(Debug, Clone)]
pub struct Cyc {
    conductor: u64,
    coeffs: BTreeMap<u64, Rat>,
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc { conductor: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Cyc::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyc { conductor: 1, coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Cyc::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// e(x) = e^{2πix} for rational x; the conductor is the reduced
    /// denominator of x.
    pub fn e(x: &Rat) -> Self {
        let x = mod1(x);
        let den = x.denom().clone();
        let num = x.numer().clone();
        let m: u64 = u64::try_from(den).expect("conductor too large");
        let a: u64 = u64::try_from(num).expect("impossible after mod1");
        let mut raw = BTreeMap::new();
        raw.insert(a % m.max(1), Rat::one());
        Cyc::reduce(m.max(1), raw)
    }

    /// e(a/m); the m-th root of unity ζ_m^a.
    pub fn root_of_unity(a: i64, m: u64) -> Self {
        assert!(m >= 1);
        Cyc::e(&rat(a, m as i64))
    }

    /// √r for a positive rational r, embedded via Gauss sums:
    /// √2 = ζ₈ + ζ₈⁻¹ and √p = (p|·)-weighted Gauss sum for odd p.
    pub fn sqrt_rat(r: &Rat) -> Self {
        assert!(r.is_positive(), "sqrt of non-positive rational");
        // √(p/q) = √(pq)/q
        let pq = r.numer() * r.denom();
        let root_int = sqrt_positive_int(&pq);
        &root_int * &Cyc::from_rat(Rat::new(BigInt::one(), r.denom().clone()))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    /// The rational number this element equals, if it is rational.
    pub fn try_rational(&self) -> Option<Rat> {
        if self.coeffs.is_empty() {
            return Some(Rat::zero());
        }
        if self.coeffs.len() == 1 {
            if let Some(c) = self.coeffs.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn as_rational(&self) -> Rat {
        self.try_rational().unwrap_or_else(|| panic!("not a rational cyclotomic: {self:?}"))
    }

    fn reduce(m: u64, raw: BTreeMap<u64, Rat>) -> Cyc {
        let t = table_for(m);
        let mut out: BTreeMap<u64, Rat> = BTreeMap::new();
        for (k, c) in raw {
            if c.is_zero() {
                continue;
            }
            let k = k % m;
            if k < t.phi {
                merge(&mut out, k, c);
            } else {
                let row = &t.rewrite[(k - t.phi) as usize];
                for (j, w) in row.iter().enumerate() {
                    if !w.is_zero() {
                        merge(&mut out, j as u64, &c * Rat::from_integer(w.clone()));
                    }
                }
            }
        }
        Cyc { conductor: m, coeffs: out }
    }

    fn lifted_coeffs(&self, m: u64) -> BTreeMap<u64, Rat> {
        debug_assert!(m % self.conductor == 0);
        let f = m / self.conductor;
        self.coeffs.iter().map(|(k, c)| (k * f, c.clone())).collect()
    }

    pub fn lift_to(&self, m: u64) -> Cyc {
        if m == self.conductor {
            return self.clone();
        }
        Cyc::reduce(m, self.lifted_coeffs(m))
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        let m = lcm_u64(self.conductor, other.conductor);
        let mut raw = self.lifted_coeffs(m);
        for (k, c) in other.lifted_coeffs(m) {
            merge(&mut raw, k, c);
        }
        // both operands already reduced; lifting may still leave exponents
        // ≥ φ(m), so run the reduction pass
        Cyc::reduce(m, raw)
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        if self.is_zero() || other.is_zero() {
            return Cyc::zero();
        }
        let m = lcm_u64(self.conductor, other.conductor);
        let a = self.lifted_coeffs(m);
        let b = other.lifted_coeffs(m);
        let mut raw: BTreeMap<u64, Rat> = BTreeMap::new();
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                merge(&mut raw, (ka + kb) % m, ca * cb);
            }
        }
        Cyc::reduce(m, raw)
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        if r.is_zero() {
            return Cyc::zero();
        }
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Galois twist ζ_M ↦ ζ_M^j for gcd(j, M) = 1.
    pub fn galois(&self, j: u64) -> Cyc {
        assert_eq!(gcd_u64(j, self.conductor), 1);
        let raw = self
            .coeffs
            .iter()
            .map(|(k, c)| ((k * (j % self.conductor)) % self.conductor, c.clone()))
            .collect();
        Cyc::reduce(self.conductor, raw)
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Cyc {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    pub fn inv(&self) -> Result<Cyc, super::MathError> {
        if self.is_zero() {
            return Err(super::MathError::DivisionByZero);
        }
        if let Some(r) = self.try_rational() {
            return Ok(Cyc::from_rat(r.recip()));
        }
        // fast path for c·ζ^k: 1/(c ζ^k) = c⁻¹ ζ^{M-k}; detectable when the
        // product with its conjugate-by-sign guess is rational is overkill,
        // so use the general extended gcd with Φ_M.
        let m = self.conductor;
        let phi = table_for(m).phi as usize;
        let mut a = vec![Rat::zero(); phi + 1];
        for (j, c) in cyclotomic_polynomial(m).iter().enumerate() {
            a[j] = Rat::from_integer(c.clone());
        }
        let mut b = vec![Rat::zero(); phi];
        for (k, c) in &self.coeffs {
            b[*k as usize] = c.clone();
        }
        let (g, _, v) = poly_ext_gcd(&a, &b);
        // g must be a nonzero constant (Φ_M is irreducible over ℚ)
        let g0 = g[0].clone();
        assert!(g.iter().skip(1).all(|c| c.is_zero()) && !g0.is_zero());
        let raw: BTreeMap<u64, Rat> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64, c / &g0))
            .collect();
        Ok(Cyc::reduce(m, raw))
    }

    pub fn pow(&self, e: i64) -> Cyc {
        if e == 0 {
            return Cyc::one();
        }
        let base = if e < 0 { self.inv().expect("pow of zero") } else { self.clone() };
        let mut acc = Cyc::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        acc
    }

    /// Iterate the canonical coefficients (exponent, value), exponents < φ(M).
    pub fn coeffs(&self) -> impl Iterator<Item = (&u64, &Rat)> {
        self.coeffs.iter()
    }
}

fn merge(map: &mut BTreeMap<u64, Rat>, k: u64, c: Rat) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// √n for a positive integer, as a cyclotomic number.
fn sqrt_positive_int(n: &BigInt) -> Cyc {
    assert!(n.is_positive());
    let n64: u64 = u64::try_from(n.clone()).expect("sqrt argument too large");
    let mut square_part = BigInt::one();
    let mut res = Cyc::one();
    for (p, e) in factorize(n64) {
        for _ in 0..(e / 2) {
            square_part *= BigInt::from(p);
        }
        if e % 2 == 1 {
            res = res.mul(&sqrt_prime(p));
        }
    }
    res.scale(&Rat::from_integer(square_part))
}

/// √p for a prime, via the quadratic Gauss sum.
fn sqrt_prime(p: u64) -> Cyc {
    if p == 2 {
        // ζ₈ + ζ₈⁻¹ = √2
        return Cyc::root_of_unity(1, 8).add(&Cyc::root_of_unity(-1, 8));
    }
    // g = Σ_k (k|p) ζ_p^k equals √p for p ≡ 1 (4) and i√p for p ≡ 3 (4)
    let mut g = Cyc::zero();
    for k in 1..p {
        let symbol = legendre(k, p);
        let term = Cyc::root_of_unity(k as i64, p);
        g = if symbol == 1 { g.add(&term) } else { g.sub(&term) };
    }
    if p % 4 == 1 {
        g
    } else {
        g.mul(&Cyc::root_of_unity(-1, 4))
    }
}

fn legendre(mut a: u64, p: u64) -> i64 {
    a %= p;
    let mut r = 1u64;
    let mut base = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == p - 1 {
        -1
    } else {
        0
    }
}

/// Extended gcd for dense rational polynomials: returns (g, u, v) with
/// u·a + v·b = g.
fn poly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let trim = |p: &mut Vec<Rat>| {
        while p.len() > 1 && p.last().unwrap().is_zero() {
            p.pop();
        }
    };
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut u0 = vec![Rat::one()];
    let mut u1 = vec![Rat::zero()];
    let mut v0 = vec![Rat::zero()];
    let mut v1 = vec![Rat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let nu = poly_sub(&u0, &poly_mul(&q, &u1));
        let nv = poly_sub(&v0, &poly_mul(&q, &v1));
        r0 = r1;
        r1 = r;
        trim(&mut r1);
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    (r0, u0, v0)
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); a.len() - b.len() + 1];
    let lead = b[db].clone();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=db {
            let t = &b[j] * &c;
            rem[k + j] -= t;
        }
    }
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = lcm_u64(self.conductor, other.conductor);
        self.lift_to(m).coeffs == other.lift_to(m).coeffs
    }
}

impl Eq for Cyc {}

impl std::fmt::Display for Cyc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*z{}^{}", c, self.conductor, k)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        Cyc::add(self, rhs)
    }
}

impl std::ops::Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        Cyc::sub(self, rhs)
    }
}

impl std::ops::Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        Cyc::mul(self, rhs)
    }
}

impl std::ops::Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::rat_int;

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(Cyc::root_of_unity(0, 1), Cyc::one());
        assert_eq!(Cyc::root_of_unity(1, 2), Cyc::from_int(-1));
        let z8 = Cyc::root_of_unity(1, 8);
        assert_eq!(z8.pow(8), Cyc::one());
        assert_eq!(z8.pow(4), Cyc::from_int(-1));
        // conductor divides the given order
        assert_eq!(Cyc::root_of_unity(2, 8).conductor(), 4);
    }

    #[test]
    fn vanishing_sums_reduce_to_zero() {
        // 1 + ζ₃ + ζ₃² = 0
        let s = Cyc::one()
            .add(&Cyc::root_of_unity(1, 3))
            .add(&Cyc::root_of_unity(2, 3));
        assert!(s.is_zero());
        // cross-conductor: ζ₁₂⁴ equals ζ₃
        assert_eq!(Cyc::root_of_unity(4, 12), Cyc::root_of_unity(1, 3));
        // 1 + ζ₁₂⁴ + ζ₁₂⁸ = 0 inside conductor 12
        let t = Cyc::one()
            .add(&Cyc::root_of_unity(4, 12))
            .add(&Cyc::root_of_unity(8, 12));
        assert!(t.is_zero());
    }

    #[test]
    fn sqrt_embeddings_square_back() {
        for n in [2i64, 3, 5, 6, 7, 10, 12, 125] {
            let s = Cyc::sqrt_rat(&rat_int(n));
            assert_eq!(s.mul(&s), Cyc::from_int(n), "sqrt({n})² ≠ {n}");
        }
        let s = Cyc::sqrt_rat(&rat(4, 9));
        assert_eq!(s, Cyc::from_rat(rat(2, 3)));
    }

    #[test]
    fn inverse_and_pow() {
        let x = Cyc::root_of_unity(3, 7).scale(&rat(2, 5)).add(&Cyc::one());
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(&xi), Cyc::one());
        assert_eq!(x.pow(-2), xi.mul(&xi));
    }

    #[test]
    fn galois_and_conj() {
        let x = Cyc::root_of_unity(1, 5).add(&Cyc::root_of_unity(2, 5).scale(&rat_int(3)));
        let y = x.conj();
        // conjugation is an involution
        assert_eq!(y.conj(), x);
        // x·x̄ is rational and positive for nonzero x: here just rationality
        let n = x.mul(&y);
        // norm-like value lies in the real subfield; check Galois stability under k ↦ -k
        assert_eq!(n.conj(), n);
    }

    #[test]
    fn try_rational_detects() {
        let x = Cyc::root_of_unity(1, 4);
        assert!(x.try_rational().is_none());
        assert_eq!(x.pow(2).try_rational(), Some(rat_int(-1)));
        // ζ₅ + ζ₅² + ζ₅³ + ζ₅⁴ = -1
        let mut s = Cyc::zero();
        for k in 1..5 {
            s = s.add(&Cyc::root_of_unity(k, 5));
        }
        assert_eq!(s.try_rational(), Some(rat_int(-1)));
    }
}
