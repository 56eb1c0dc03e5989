//! Univariate polynomial helpers used by the semisimple-quotient splitter.
//!
//! The only consumers are minimal polynomials of commuting elements, so the
//! feature set is deliberately small: exact arithmetic, gcd (for squarefree
//! parts), and extraction of the roots lying in the base field. Over the
//! rationals the roots come from the classical numerator/denominator divisor
//! test after clearing denominators; over a prime field the search is an
//! exhaustive scan, which is why moduli are capped for this one analysis.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Largest prime modulus for which root extraction (and hence simple-block
/// splitting) is attempted; the scan is linear in the modulus.
pub const MAX_EXHAUSTIVE_MODULUS: u64 = 1 << 20;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    /// `t - root`.
    pub fn linear(field: Field, root: &FieldElem) -> Poly {
        Poly::new(field, vec![-root, field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
            out.push(&a + &b);
        }
        Poly::new(self.field, out)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(self.field, out)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divmod(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        let lead_inv = rhs.leading().unwrap().inv().expect("nonzero leading coefficient");
        if rem.len() <= dr {
            return (Poly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dr];
        for i in (dr..rem.len()).rev() {
            let c = &rem[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dr] = c.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i - dr + j] = &rem[i - dr + j] - &(&c * b);
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut acc = self.field.zero();
                // i·c by repeated addition stays exact in any characteristic.
                for _ in 0..i {
                    acc = &acc + c;
                }
                acc
            })
            .collect();
        Poly::new(self.field, out)
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest squarefree divisor: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divmod(&g).0.monic()
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All roots of `p` lying in its base field, with multiplicity stripped
/// (the intended inputs are squarefree), and the root-free cofactor left
/// over after deflation. Errors only over prime fields above the scan cap.
pub fn base_field_roots(p: &Poly) -> Result<(Vec<FieldElem>, Poly)> {
    match p.field {
        Field::Rationals => Ok(rational_roots(p)),
        Field::Prime(modulus) => prime_roots(p, modulus),
    }
}

fn rational_roots(p: &Poly) -> (Vec<FieldElem>, Poly) {
    let mut roots = Vec::new();
    let mut current = p.monic();
    loop {
        if current.degree().unwrap_or(0) == 0 {
            break;
        }
        // Root zero first: strip factors of t directly.
        if current.coeffs[0].is_zero() {
            let zero = p.field.zero();
            roots.push(zero.clone());
            current = current.divmod(&Poly::linear(p.field, &zero)).0;
            continue;
        }
        match find_one_rational_root(&current) {
            Some(root) => {
                current = current.divmod(&Poly::linear(p.field, &root)).0;
                roots.push(root);
            }
            None => break,
        }
    }
    (roots, current.monic())
}

/// One rational root of a polynomial with nonzero constant term, by the
/// divisor test on the integer model: any root `u/v` in lowest terms has
/// `u | a_0` and `v | a_d`.
fn find_one_rational_root(p: &Poly) -> Option<FieldElem> {
    let (int_coeffs, _) = integer_model(p);
    let a0 = int_coeffs.first().unwrap().clone();
    let lead = int_coeffs.last().unwrap().clone();
    debug_assert!(!a0.is_zero());
    let numerators = divisors(&a0.magnitude().clone());
    let denominators = divisors(&lead.magnitude().clone());
    for v in &denominators {
        for u in &numerators {
            if u.gcd(v) != BigUint::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let numer = BigInt::from(u.clone()) * sign;
                let cand = FieldElem::Rat(BigRational::new(numer, BigInt::from(v.clone())));
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Clears denominators: returns integer coefficients (lowest degree first)
/// of a scalar multiple of `p`, plus the common denominator used.
fn integer_model(p: &Poly) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        let FieldElem::Rat(r) = c else { unreachable!("rational model of a prime-field poly") };
        lcm = lcm.lcm(r.denom());
    }
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let FieldElem::Rat(r) = c else { unreachable!() };
            (r * BigRational::from(lcm.clone())).to_integer()
        })
        .collect();
    (coeffs, lcm)
}

fn prime_roots(p: &Poly, modulus: u64) -> Result<(Vec<FieldElem>, Poly)> {
    if modulus > MAX_EXHAUSTIVE_MODULUS {
        return Err(Error::Unsupported(format!(
            "root search over a prime field is exhaustive and requires the modulus to be at most {MAX_EXHAUSTIVE_MODULUS}; got {modulus}"
        )));
    }
    let field = p.field;
    let mut roots = Vec::new();
    let mut current = p.monic();
    let want = current.degree().unwrap_or(0);
    for lambda in 0..modulus {
        if roots.len() == want || current.degree().unwrap_or(0) == 0 {
            break;
        }
        let cand = FieldElem::Mod { value: lambda, modulus };
        if current.eval(&cand).is_zero() {
            current = current.divmod(&Poly::linear(field, &cand)).0;
            roots.push(cand);
        }
    }
    Ok((roots, current.monic()))
}

/// All positive divisors of `n` (which must be nonzero), via full
/// factorization: trial division for small factors, then Pollard's rho.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero());
    let factors = factorize(n.clone());
    let mut out = vec![BigUint::one()];
    for (prime, mult) in factors {
        let mut extended = Vec::with_capacity(out.len() * (mult as usize + 1));
        for d in &out {
            let mut power = BigUint::one();
            for _ in 0..=mult {
                extended.push(d * &power);
                power *= &prime;
            }
        }
        out = extended;
    }
    out.sort();
    out
}

fn factorize(mut n: BigUint) -> Vec<(BigUint, u32)> {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let push = |p: BigUint, factors: &mut Vec<(BigUint, u32)>| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            factors.push((p, 1));
        }
    };
    for small in 2u64..=4096 {
        let sp = BigUint::from(small);
        if &sp * &sp > n {
            break;
        }
        while (&n % &sp).is_zero() {
            n /= &sp;
            push(sp.clone(), &mut factors);
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut factors);
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    factors.sort();
    factors
}

/// Miller–Rabin with the first twelve prime witnesses: exact below 3.3e24,
/// an industry-standard strong-pseudoprime test beyond.
fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return crate::field::is_prime_u64(small);
    }
    let one = BigUint::one();
    let two = &one + &one;
    if (n % &two).is_zero() {
        return false;
    }
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-style rho with deterministic restarts; `n` must be odd, composite,
/// and free of factors below 4096.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u64..64 {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u64);
        let mut y = x.clone();
        loop {
            x = f(&x);
            y = f(&f(&y));
            if x == y {
                break; // cycle without factor; retry with the next c
            }
            let diff = if x > y { &x - &y } else { &y - &x };
            let d = diff.gcd(n);
            if d > one && &d < n {
                return d;
            }
        }
    }
    unreachable!("rho exhausted its restarts; inputs of this size are not expected")
}
