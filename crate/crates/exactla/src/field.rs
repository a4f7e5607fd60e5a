use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::LinAlgError;

/// The base field of a computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The prime field GF(p).
    Gf(u64),
    /// The rational numbers.
    Q,
}

/// An element of a [`Field`]. GF(p) elements are kept as canonical residues
/// `0..p`, rationals as normalized fractions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Gf(u64),
    Q(BigRational),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % p) as u128;
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl Field {
    pub fn gf(p: u64) -> Result<Field, LinAlgError> {
        if is_prime(p) {
            Ok(Field::Gf(p))
        } else {
            Err(LinAlgError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Gf(p) => *p,
            Field::Q => 0,
        }
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Gf(p) => Some(*p),
            Field::Q => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Gf(_) => Scalar::Gf(0),
            Field::Q => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Gf(_) => Scalar::Gf(1),
            Field::Q => Scalar::Q(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Gf(p) => Scalar::Gf(v.rem_euclid(*p as i64) as u64),
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        if den == 0 {
            return Err(LinAlgError::DivisionByZero);
        }
        match self {
            Field::Gf(_) => {
                let d = self.from_i64(den);
                let inv = self.inv(&d).ok_or(LinAlgError::DivisionByZero)?;
                Ok(self.mul(&self.from_i64(num), &inv))
            }
            Field::Q => Ok(Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))),
        }
    }

    /// Every element of a finite field, in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Gf(p) => Some((0..*p).map(Scalar::Gf).collect()),
            Field::Q => None,
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Gf(p), Scalar::Gf(v)) => v < p,
            (Field::Q, Scalar::Q(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Gf(p), Scalar::Gf(x), Scalar::Gf(y)) => Scalar::Gf((x + y) % p),
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Gf(p), Scalar::Gf(x), Scalar::Gf(y)) => Scalar::Gf((x + p - y) % p),
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Gf(p), Scalar::Gf(x), Scalar::Gf(y)) => {
                Scalar::Gf(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Gf(p), Scalar::Gf(x)) => Scalar::Gf((p - x) % p),
            (Field::Q, Scalar::Q(x)) => Scalar::Q(-x),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (Field::Gf(p), Scalar::Gf(x)) => Some(Scalar::Gf(pow_mod(*x, p - 2, *p))),
            (Field::Q, Scalar::Q(x)) => Some(Scalar::Q(x.recip())),
            _ => panic!("scalar from a different field"),
        }
    }

    /// `acc += a * b`, in place.
    pub fn add_mul_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        match (self, acc, a, b) {
            (Field::Gf(p), Scalar::Gf(z), Scalar::Gf(x), Scalar::Gf(y)) => {
                *z = ((*z as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            (Field::Q, Scalar::Q(z), Scalar::Q(x), Scalar::Q(y)) => {
                *z += x * y;
            }
            _ => panic!("scalar from a different field"),
        }
    }

    /// Parses `"n"` or `"n/d"`; GF(p) accepts any integer and reduces it.
    pub fn parse(&self, s: &str) -> Result<Scalar, LinAlgError> {
        let t = s.trim();
        let bad = || LinAlgError::Parse(s.to_string());
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(LinAlgError::DivisionByZero);
        }
        match self {
            Field::Q => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Gf(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64_digits().1.first().copied().unwrap_or(0)
                };
                let n = Scalar::Gf(reduce(&num));
                let d = Scalar::Gf(reduce(&den));
                let di = self.inv(&d).ok_or(LinAlgError::DivisionByZero)?;
                Ok(self.mul(&n, &di))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf(p) => write!(f, "GF({p})"),
            Field::Q => write!(f, "Q"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Gf(v) => *v == 0,
            Scalar::Q(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Gf(v) => *v == 1,
            Scalar::Q(x) => x.is_one(),
        }
    }

    /// Canonical text form: residues for GF(p), `"num/den"` for rationals.
    pub fn to_fraction_string(&self) -> String {
        match self {
            Scalar::Gf(v) => v.to_string(),
            Scalar::Q(x) => format!("{}/{}", x.numer(), x.denom()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Gf(_) => false,
            Scalar::Q(x) => x.is_negative(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Gf(v) => write!(f, "{v}"),
            Scalar::Q(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Scalar::Q(x) => write!(f, "{}/{}", x.numer(), x.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_recognised() {
        assert!(Field::gf(2).is_ok());
        assert!(Field::gf(7).is_ok());
        assert_eq!(Field::gf(6), Err(LinAlgError::NotPrime(6)));
        assert_eq!(Field::gf(1), Err(LinAlgError::NotPrime(1)));
    }

    #[test]
    fn gf_inverse_table() {
        for p in [2u64, 3, 5, 7] {
            let f = Field::Gf(p);
            for x in 1..p {
                let a = Scalar::Gf(x);
                let i = f.inv(&a).unwrap();
                assert!(f.mul(&a, &i).is_one());
            }
        }
    }

    #[test]
    fn rational_strings_round_trip() {
        let q = Field::Q;
        let x = q.parse("3/7").unwrap();
        assert_eq!(x.to_fraction_string(), "3/7");
        assert_eq!(q.parse(&x.to_fraction_string()).unwrap(), x);
        assert_eq!(q.parse("-6/4").unwrap().to_fraction_string(), "-3/2");
        assert_eq!(q.parse("5").unwrap().to_fraction_string(), "5/1");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn gf_parse_reduces() {
        let f = Field::Gf(5);
        assert_eq!(f.parse("-1").unwrap(), Scalar::Gf(4));
        assert_eq!(f.parse("1/2").unwrap(), Scalar::Gf(3));
    }
}
