//! Coefficient rings: the integers, integers modulo n, prime fields, and
//! finite products of prime fields.
//!
//! A [`RingSpec`] owns all arithmetic; elements are plain data tagged by shape
//! (an arbitrary-precision integer, a canonical residue, or a tuple of
//! residues) and only make sense relative to the ring that produced them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("unrecognized ring spec `{0}` (expected Z, Zmod:n, Fp:p, or Prod:p1x...xpk)")]
    Parse(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("product ring needs at least one prime factor")]
    EmptyProduct,
}

/// A supported coefficient ring. All rings here are commutative, and every
/// ring except the integers is finite.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
    PrimeField(u64),
    /// Product of prime fields, one factor per listed prime. Repeats allowed.
    PrimeProduct(Vec<u64>),
}

/// An element of some [`RingSpec`]. `Int` belongs to the integers, `Residue`
/// to a modular ring or prime field (canonical representative in `[0, n)`),
/// `Tuple` to a product of prime fields (componentwise canonical residues).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingElement {
    Int(BigInt),
    Residue(u64),
    Tuple(Vec<u64>),
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec::Integers
    }

    pub fn integers_mod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        Ok(RingSpec::PrimeField(p))
    }

    pub fn prime_product(primes: Vec<u64>) -> Result<Self, RingError> {
        if primes.is_empty() {
            return Err(RingError::EmptyProduct);
        }
        for &p in &primes {
            if !is_prime(p) {
                return Err(RingError::NotPrime(p));
            }
        }
        Ok(RingSpec::PrimeProduct(primes))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::PrimeField(_))
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, RingSpec::Integers)
    }

    pub fn cardinality(&self) -> Option<BigInt> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => Some(BigInt::from(*n)),
            RingSpec::PrimeProduct(ps) => {
                Some(ps.iter().fold(BigInt::from(1u8), |acc, p| acc * p))
            }
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> RingElement {
        match self {
            RingSpec::Integers => RingElement::Int(BigInt::from(k)),
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                RingElement::Residue(residue_i64(k, *n))
            }
            RingSpec::PrimeProduct(ps) => {
                RingElement::Tuple(ps.iter().map(|&p| residue_i64(k, p)).collect())
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        match self {
            RingSpec::Integers => RingElement::Int(v.clone()),
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                RingElement::Residue(residue_bigint(v, *n))
            }
            RingSpec::PrimeProduct(ps) => {
                RingElement::Tuple(ps.iter().map(|&p| residue_bigint(v, p)).collect())
            }
        }
    }

    /// Canonical integer lift of a residue. Only defined for the integers and
    /// single-modulus rings; a product has no single lift.
    pub fn lift(&self, a: &RingElement) -> BigInt {
        match (self, a) {
            (RingSpec::Integers, RingElement::Int(v)) => v.clone(),
            (RingSpec::IntegersMod(_), RingElement::Residue(r))
            | (RingSpec::PrimeField(_), RingElement::Residue(r)) => BigInt::from(*r),
            _ => panic!("no canonical integer lift for {a:?} in {self}"),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (RingSpec::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x + y)
            }
            (RingSpec::IntegersMod(n), RingElement::Residue(x), RingElement::Residue(y))
            | (RingSpec::PrimeField(n), RingElement::Residue(x), RingElement::Residue(y)) => {
                RingElement::Residue(addm(*x, *y, *n))
            }
            (RingSpec::PrimeProduct(ps), RingElement::Tuple(x), RingElement::Tuple(y)) => {
                RingElement::Tuple(
                    ps.iter()
                        .zip(x.iter().zip(y))
                        .map(|(&p, (&u, &v))| addm(u, v, p))
                        .collect(),
                )
            }
            _ => panic!("element shape does not match ring {self}"),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match (self, a) {
            (RingSpec::Integers, RingElement::Int(x)) => RingElement::Int(-x),
            (RingSpec::IntegersMod(n), RingElement::Residue(x))
            | (RingSpec::PrimeField(n), RingElement::Residue(x)) => {
                RingElement::Residue(negm(*x, *n))
            }
            (RingSpec::PrimeProduct(ps), RingElement::Tuple(x)) => RingElement::Tuple(
                ps.iter().zip(x).map(|(&p, &u)| negm(u, p)).collect(),
            ),
            _ => panic!("element shape does not match ring {self}"),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (RingSpec::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x * y)
            }
            (RingSpec::IntegersMod(n), RingElement::Residue(x), RingElement::Residue(y))
            | (RingSpec::PrimeField(n), RingElement::Residue(x), RingElement::Residue(y)) => {
                RingElement::Residue(mulm(*x, *y, *n))
            }
            (RingSpec::PrimeProduct(ps), RingElement::Tuple(x), RingElement::Tuple(y)) => {
                RingElement::Tuple(
                    ps.iter()
                        .zip(x.iter().zip(y))
                        .map(|(&p, (&u, &v))| mulm(u, v, p))
                        .collect(),
                )
            }
            _ => panic!("element shape does not match ring {self}"),
        }
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Int(v) => v.is_zero(),
            RingElement::Residue(r) => *r == 0,
            RingElement::Tuple(t) => t.iter().all(|&r| r == 0),
        }
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        match (self, a) {
            (RingSpec::Integers, RingElement::Int(v)) => {
                let one = BigInt::from(1);
                if v == &one || v == &(-one.clone()) {
                    Some(RingElement::Int(v.clone()))
                } else {
                    None
                }
            }
            (RingSpec::IntegersMod(n), RingElement::Residue(r))
            | (RingSpec::PrimeField(n), RingElement::Residue(r)) => {
                invm(*r, *n).map(RingElement::Residue)
            }
            (RingSpec::PrimeProduct(ps), RingElement::Tuple(t)) => {
                let mut out = Vec::with_capacity(t.len());
                for (&p, &r) in ps.iter().zip(t) {
                    out.push(invm(r, p)?);
                }
                Some(RingElement::Tuple(out))
            }
            _ => panic!("element shape does not match ring {self}"),
        }
    }

    /// Every element of a finite ring, in a fixed order. `None` for the
    /// integers.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                Some((0..*n).map(RingElement::Residue).collect())
            }
            RingSpec::PrimeProduct(ps) => {
                let mut out = vec![vec![]];
                for &p in ps {
                    let mut next = Vec::with_capacity(out.len() * p as usize);
                    for prefix in &out {
                        for r in 0..p {
                            let mut t: Vec<u64> = prefix.clone();
                            t.push(r);
                            next.push(t);
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(RingElement::Tuple).collect())
            }
        }
    }

    /// A uniform random element for finite rings; for the integers, uniform
    /// in `[-int_bound, int_bound]`.
    pub fn random_element(&self, rng: &mut impl Rng, int_bound: i64) -> RingElement {
        match self {
            RingSpec::Integers => RingElement::Int(BigInt::from(
                rng.gen_range(-int_bound..=int_bound),
            )),
            RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => {
                RingElement::Residue(rng.gen_range(0..*n))
            }
            RingSpec::PrimeProduct(ps) => {
                RingElement::Tuple(ps.iter().map(|&p| rng.gen_range(0..p)).collect())
            }
        }
    }

    /// Ring elements that generate the ring as a module over the integers.
    /// One element suffices except for products, which use the componentwise
    /// idempotents.
    pub fn additive_generators(&self) -> Vec<RingElement> {
        match self {
            RingSpec::PrimeProduct(ps) => (0..ps.len())
                .map(|k| {
                    RingElement::Tuple(
                        (0..ps.len()).map(|j| u64::from(j == k)).collect(),
                    )
                })
                .collect(),
            _ => vec![self.one()],
        }
    }

    /// Number of prime-field factors for products, 1 otherwise.
    pub fn product_width(&self) -> usize {
        match self {
            RingSpec::PrimeProduct(ps) => ps.len(),
            _ => 1,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Zmod:{n}"),
            RingSpec::PrimeField(p) => write!(f, "Fp:{p}"),
            RingSpec::PrimeProduct(ps) => {
                write!(f, "Prod:")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, RingError> {
        if s == "Z" {
            return Ok(RingSpec::Integers);
        }
        if let Some(rest) = s.strip_prefix("Zmod:") {
            let n: u64 = rest.parse().map_err(|_| RingError::Parse(s.to_string()))?;
            return RingSpec::integers_mod(n);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest.parse().map_err(|_| RingError::Parse(s.to_string()))?;
            return RingSpec::prime_field(p);
        }
        if let Some(rest) = s.strip_prefix("Prod:") {
            let mut primes = Vec::new();
            for part in rest.split('x') {
                let p: u64 = part.parse().map_err(|_| RingError::Parse(s.to_string()))?;
                primes.push(p);
            }
            return RingSpec::prime_product(primes);
        }
        Err(RingError::Parse(s.to_string()))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(v) => write!(f, "{v}"),
            RingElement::Residue(r) => write!(f, "{r}"),
            RingElement::Tuple(t) => {
                write!(f, "(")?;
                for (i, r) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn residue_i64(k: i64, n: u64) -> u64 {
    let n_i = n as i128;
    (((k as i128 % n_i) + n_i) % n_i) as u64
}

fn residue_bigint(v: &BigInt, n: u64) -> u64 {
    let m = v % BigInt::from(n);
    let m = if m.is_negative() { m + BigInt::from(n) } else { m };
    m.to_u64().expect("reduced residue fits u64")
}

fn addm(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

fn negm(a: u64, n: u64) -> u64 {
    if a == 0 {
        0
    } else {
        n - a
    }
}

fn mulm(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Inverse of `a` modulo `n` when gcd(a, n) = 1.
fn invm(a: u64, n: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, n as i128);
    if g != 1 {
        return None;
    }
    let n_i = n as i128;
    Some((((x % n_i) + n_i) % n_i) as u64)
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Deterministic Miller-Rabin for u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powm(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, n);
        }
        base = mulm(base, base, n);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["Z", "Zmod:4", "Fp:5", "Prod:2x3", "Prod:7"] {
            let ring: RingSpec = s.parse().unwrap();
            assert_eq!(ring.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_bad_specs() {
        assert_eq!("Zmod:1".parse::<RingSpec>(), Err(RingError::BadModulus(1)));
        assert_eq!("Fp:4".parse::<RingSpec>(), Err(RingError::NotPrime(4)));
        assert_eq!("Prod:2x9".parse::<RingSpec>(), Err(RingError::NotPrime(9)));
        assert!(matches!("Qp:5".parse::<RingSpec>(), Err(RingError::Parse(_))));
        assert!(matches!("Prod:".parse::<RingSpec>(), Err(RingError::Parse(_))));
    }

    #[test]
    fn canonical_arithmetic_mod_4() {
        let r = RingSpec::integers_mod(4).unwrap();
        let three = r.from_i64(3);
        assert_eq!(r.add(&three, &three), r.from_i64(2));
        assert_eq!(r.mul(&three, &three), r.from_i64(1));
        assert_eq!(r.neg(&r.from_i64(1)), three);
        assert_eq!(r.from_i64(-1), three);
    }

    #[test]
    fn product_arithmetic_is_componentwise() {
        let r = RingSpec::prime_product(vec![2, 3]).unwrap();
        let a = RingElement::Tuple(vec![1, 2]);
        let b = RingElement::Tuple(vec![1, 1]);
        assert_eq!(r.add(&a, &b), RingElement::Tuple(vec![0, 0]));
        assert_eq!(r.mul(&a, &b), a);
        // 1 maps to (1, 1), and its integer multiples sweep the whole ring.
        assert_eq!(r.one(), RingElement::Tuple(vec![1, 1]));
        assert_eq!(r.from_i64(3), RingElement::Tuple(vec![1, 0]));
    }

    #[test]
    fn inverses() {
        let f5 = RingSpec::prime_field(5).unwrap();
        assert_eq!(f5.inverse(&f5.from_i64(2)), Some(f5.from_i64(3)));
        let z4 = RingSpec::integers_mod(4).unwrap();
        assert_eq!(z4.inverse(&z4.from_i64(3)), Some(z4.from_i64(3)));
        assert_eq!(z4.inverse(&z4.from_i64(2)), None);
        let z = RingSpec::integers();
        assert_eq!(z.inverse(&z.from_i64(-1)), Some(z.from_i64(-1)));
        assert_eq!(z.inverse(&z.from_i64(2)), None);
    }

    #[test]
    fn element_enumeration_counts() {
        assert_eq!(RingSpec::integers().elements(), None);
        assert_eq!(RingSpec::integers_mod(6).unwrap().elements().unwrap().len(), 6);
        let prod = RingSpec::prime_product(vec![2, 3]).unwrap();
        assert_eq!(prod.elements().unwrap().len(), 6);
        assert_eq!(prod.cardinality(), Some(BigInt::from(6)));
    }

    #[test]
    fn additive_generators_span_products() {
        let prod = RingSpec::prime_product(vec![2, 3]).unwrap();
        let gens = prod.additive_generators();
        assert_eq!(
            gens,
            vec![RingElement::Tuple(vec![1, 0]), RingElement::Tuple(vec![0, 1])]
        );
        assert_eq!(RingSpec::integers().additive_generators(), vec![RingElement::Int(BigInt::from(1))]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(!is_prime(6_700_417u64 * 3));
    }
}
