use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly;
use super::LinalgError;

/// Which exact field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Arithmetic context for an exact field.
///
/// Elements are plain values; every operation goes through the context so that
/// prime fields do not need to carry their modulus in each element.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// `num/den`; `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: i64, den: i64) -> Option<Self::Elem> {
        let d = self.from_i64(den);
        self.inv(&d).map(|di| self.mul(&self.from_i64(num), &di))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc -= a * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(a, b));
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    /// Distinct roots in the field of a polynomial given by ascending coefficients.
    fn roots(&self, poly: &[Self::Elem]) -> Vec<Self::Elem>;

    /// Uniform-ish small element: an integer in `[-bound, bound]` mapped into the field.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem {
        self.from_i64(rng.gen_range(-bound..=bound))
    }

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem, LinalgError>;

    /// Canonical representative in `[0, p)` for prime fields.
    fn residue(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: i64, den: i64) -> Option<BigRational> {
        if den == 0 {
            None
        } else {
            Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
        }
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn sub_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc -= a * b;
    }

    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc += a * b;
    }

    fn roots(&self, poly: &[BigRational]) -> Vec<BigRational> {
        rational_roots(poly)
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }
}

/// The prime field `F_p` for a word-size prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(LinalgError::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let p = self.p as u64;
        let mut base = a as u64 % p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn sub_mul_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        let prod = *a as u64 * *b as u64 % self.p as u64;
        *acc = ((*acc as u64 + self.p as u64 - prod) % self.p as u64) as u32;
    }

    fn add_mul_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        let prod = *a as u64 * *b as u64 % self.p as u64;
        *acc = ((*acc as u64 + prod) % self.p as u64) as u32;
    }

    fn roots(&self, poly: &[u32]) -> Vec<u32> {
        prime_roots(*self, poly)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> u32 {
        if bound as u64 >= self.p as u64 {
            rng.gen_range(0..self.p)
        } else {
            self.from_i64(rng.gen_range(-bound..=bound))
        }
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn residue(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }

    fn parse(&self, s: &str) -> Result<u32, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                self.from_ratio(n, d).ok_or_else(bad)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                let r = n.mod_floor(&BigInt::from(self.p));
                Ok(r.to_u32().expect("reduced residue fits"))
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest magnitude we are willing to factor by trial division when hunting
/// rational roots.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > TRIAL_DIVISION_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
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
    Some(small)
}

fn rational_roots(poly: &[BigRational]) -> Vec<BigRational> {
    let f = Rationals;
    let mut coeffs = poly.to_vec();
    poly::trim(&f, &mut coeffs);
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip the zero root
    let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..lead_zeros);
    }
    if coeffs.len() <= 1 {
        return roots;
    }
    // clear denominators
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    for q in &qs {
        for p in &ps {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                if roots.contains(&cand) {
                    continue;
                }
                if poly::eval(&f, &coeffs, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

const BRUTE_FORCE_PRIME_LIMIT: u32 = 1 << 12;

fn prime_roots(field: PrimeField, poly: &[u32]) -> Vec<u32> {
    let mut coeffs = poly.to_vec();
    poly::trim(&field, &mut coeffs);
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let p = field.modulus();
    if p <= BRUTE_FORCE_PRIME_LIMIT {
        return (0..p)
            .filter(|x| field.is_zero(&poly::eval(&field, &coeffs, x)))
            .collect();
    }
    // g = gcd(f, x^p - x) is the product of the distinct linear factors of f.
    let x = vec![0, 1];
    let xp = poly::pow_mod(&field, &x, p as u64, &coeffs);
    let xp_minus_x = poly::sub(&field, &xp, &x);
    let g = poly::gcd(&field, &coeffs, &xp_minus_x);
    let mut roots = Vec::new();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x5eed);
    split_linear_factors(field, g, &mut roots, &mut rng);
    roots.sort();
    roots
}

/// Cantor–Zassenhaus equal-degree splitting for a product of distinct linear factors (odd p).
fn split_linear_factors<R: Rng>(field: PrimeField, g: Vec<u32>, out: &mut Vec<u32>, rng: &mut R) {
    let deg = poly::degree(&g);
    match deg {
        None | Some(0) => {}
        Some(1) => {
            let root = field.neg(&field.div(&g[0], &g[1]).unwrap());
            out.push(root);
        }
        Some(_) => {
            let p = field.modulus() as u64;
            loop {
                let a = rng.gen_range(0..field.modulus());
                let shifted = vec![a, 1];
                let h = poly::pow_mod(&field, &shifted, (p - 1) / 2, &g);
                let h1 = poly::sub(&field, &h, &[1]);
                let d = poly::gcd(&field, &g, &h1);
                let dd = poly::degree(&d).unwrap_or(0);
                if dd > 0 && dd < deg.unwrap() {
                    let (q, _) = poly::divrem(&field, &g, &d);
                    split_linear_factors(field, d, out, rng);
                    split_linear_factors(field, q, out, rng);
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        Rationals.from_ratio(n, d).unwrap()
    }

    #[test]
    fn rational_parse_and_format() {
        let f = Rationals;
        assert_eq!(f.parse("3/2").unwrap(), q(3, 2));
        assert_eq!(f.parse(" -4 ").unwrap(), q(-4, 1));
        assert_eq!(f.format(&q(6, 4)), "3/2");
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn prime_field_inverse_and_parse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert_eq!(f.parse("1/2").unwrap(), 4);
    }

    #[test]
    fn rational_roots_of_products() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let poly = vec![q(0, 1), q(-3, 2), q(5, 2), q(1, 1)];
        assert_eq!(Rationals.roots(&poly), vec![q(-3, 1), q(0, 1), q(1, 2)]);
        // t^2 - 2 has no rational roots
        assert!(Rationals.roots(&[q(-2, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn prime_roots_small_and_large() {
        let f = PrimeField::new(5).unwrap();
        // t^2 - 1
        assert_eq!(f.roots(&[4, 0, 1]), vec![1, 4]);
        let big = PrimeField::new(1_000_003).unwrap();
        // (t - 2)(t - 10)(t^2 + 1) ; -1 is a non-residue mod 1_000_003 (≡ 3 mod 4)
        let lin = poly::mul(&big, &[big.neg(&2), 1], &[big.neg(&10), 1]);
        let full = poly::mul(&big, &lin, &[1, 0, 1]);
        assert_eq!(big.roots(&full), vec![2, 10]);
    }
}
