//! Exact scalar arithmetic over the two supported fields: the rationals and
//! prime fields of odd or even characteristic.
//!
//! Every scalar carries its field so that mixed-field arithmetic is caught
//! immediately (it panics: mixing fields is a programming error, not a data
//! error). Rational values are kept in lowest terms with a positive
//! denominator by `num_rational::BigRational`; prime-field values are residues
//! in `[0, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// The coefficient field of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Rationals,
    /// A prime field; the modulus is checked for primality on construction.
    Prime(u64),
}

impl Field {
    /// Builds a prime field, rejecting composite or zero/one moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime_u64(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Invalid(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(BigRational::zero()),
            Field::Prime(p) => FieldElem::Mod { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(BigRational::one()),
            Field::Prime(p) => FieldElem::Mod { value: 1 % p, modulus: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(BigRational::from(BigInt::from(v))),
            Field::Prime(p) => {
                let r = v.rem_euclid(*p as i64 as i64);
                // rem_euclid on i64 needs p to fit; moduli above i64::MAX are
                // rejected at parse time, so the cast is safe for our inputs.
                let r = if r < 0 { r + *p as i64 } else { r };
                FieldElem::Mod { value: r as u64 % p, modulus: *p }
            }
        }
    }

    /// Parses a scalar in the canonical text form: an optional minus sign and
    /// decimal digits, with an optional `/denominator` part over the
    /// rationals. Rationals must be in lowest terms with a positive
    /// denominator; prime-field residues must lie in `[0, p)`. Leading zeros
    /// and a leading `+` are rejected so that parsing inverts serialization.
    pub fn parse_scalar(&self, s: &str) -> Result<FieldElem, Error> {
        let bad = |msg: &str| Error::Invalid(format!("scalar {s:?}: {msg}"));
        match self {
            Field::Rationals => {
                let (num_str, den_str) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let numer = parse_int_strict(num_str).ok_or_else(|| bad("malformed integer"))?;
                match den_str {
                    None => Ok(FieldElem::Rat(BigRational::from(numer))),
                    Some(d) => {
                        let denom = parse_int_strict(d).ok_or_else(|| bad("malformed denominator"))?;
                        if denom.is_negative() || denom.is_zero() {
                            return Err(bad("denominator must be positive"));
                        }
                        if numer.gcd(&denom) != BigInt::one() {
                            return Err(bad("not in lowest terms"));
                        }
                        Ok(FieldElem::Rat(BigRational::new_raw(numer, denom)))
                    }
                }
            }
            Field::Prime(p) => {
                let v = parse_int_strict(s).ok_or_else(|| bad("malformed residue"))?;
                if v.is_negative() {
                    return Err(bad("residues must be non-negative"));
                }
                let v: u64 = v.try_into().map_err(|_| bad("residue out of range"))?;
                if v >= *p {
                    return Err(bad(&format!("residue must lie in [0, {p})")));
                }
                Ok(FieldElem::Mod { value: v, modulus: *p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "prime field of order {p}"),
        }
    }
}

/// Strict integer syntax: `0` or `-?[1-9][0-9]*`. No `+`, no leading zeros,
/// no whitespace. Returns `None` on any deviation.
fn parse_int_strict(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

/// One exact scalar. Binary operations panic if the operands belong to
/// different fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElem {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rat(_) => Field::Rationals,
            FieldElem::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::Mod { value, modulus } => *value == 1 % modulus,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElem> {
        match self {
            FieldElem::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(FieldElem::Rat(r.recip()))
                }
            }
            FieldElem::Mod { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(FieldElem::Mod {
                        value: pow_mod(*value, modulus - 2, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn div(&self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero")
    }
}

fn check_same_field(a: &FieldElem, b: &FieldElem) {
    debug_assert_eq!(a.field(), b.field(), "mixed-field arithmetic");
    if a.field() != b.field() {
        panic!("mixed-field arithmetic: {} vs {}", a.field(), b.field());
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        check_same_field(self, rhs);
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod { value: add_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        check_same_field(self, rhs);
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a - b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                let v = if a >= b { a - b } else { modulus - (b - a) };
                FieldElem::Mod { value: v, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        check_same_field(self, rhs);
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(-a),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

/// Total order inside a single field: numeric order over the rationals,
/// residue order over a prime field. Used only to make set-valued outputs
/// deterministic; comparing across fields panics.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        check_same_field(self, other);
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => a.cmp(b),
            (FieldElem::Mod { value: a, .. }, FieldElem::Mod { value: b, .. }) => a.cmp(b),
            _ => unreachable!(),
        }
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin over the witness set that is exact for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_stays_reduced() {
        let f = Field::Rationals;
        let half = f.parse_scalar("1/2").unwrap();
        let third = f.parse_scalar("1/3").unwrap();
        let sum = &half + &third;
        assert_eq!(sum.to_string(), "5/6");
        let prod = &half * &third;
        assert_eq!(prod.to_string(), "1/6");
        assert_eq!((&half - &half).to_string(), "0");
        assert_eq!(half.inv().unwrap().to_string(), "2");
    }

    #[test]
    fn scalar_parsing_rejects_non_canonical_forms() {
        let f = Field::Rationals;
        assert!(f.parse_scalar("2/4").is_err(), "not lowest terms");
        assert!(f.parse_scalar("1/-2").is_err(), "negative denominator");
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("+3").is_err());
        assert!(f.parse_scalar("03").is_err());
        assert!(f.parse_scalar("-0").is_err());
        assert!(f.parse_scalar("").is_err());
        assert!(f.parse_scalar("0/5").is_err());
        assert_eq!(f.parse_scalar("-7/3").unwrap().to_string(), "-7/3");
        assert_eq!(f.parse_scalar("5/1").unwrap().to_string(), "5");
    }

    #[test]
    fn prime_field_parsing_enforces_residue_range() {
        let f = Field::prime(97).unwrap();
        assert!(f.parse_scalar("97").is_err());
        assert!(f.parse_scalar("-1").is_err());
        assert_eq!(f.parse_scalar("96").unwrap().to_string(), "96");
    }

    #[test]
    fn prime_field_arithmetic_wraps() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!((&a + &b).to_string(), "2");
        assert_eq!((&a * &b).to_string(), "6");
        assert_eq!((&b - &a).to_string(), "6");
        assert_eq!(a.inv().unwrap().to_string(), "3");
        assert_eq!((-&a).to_string(), "2");
    }

    #[test]
    fn primality_check_matches_small_table() {
        let primes: Vec<u64> = (2..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn from_i64_handles_negatives_in_prime_fields() {
        let f = Field::prime(11).unwrap();
        assert_eq!(f.from_i64(-3).to_string(), "8");
        assert_eq!(f.from_i64(-22).to_string(), "0");
    }
}
