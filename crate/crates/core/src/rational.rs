//! Exact rationals and univariate polynomials in the level `k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{LieError, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q` exactly. Decimal notation is rejected.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || LieError::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// A polynomial in the formal level `k` with exact rational coefficients.
/// `coeffs[i]` is the coefficient of `k^i`; no trailing zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LevelPoly {
    coeffs: Vec<Q>,
}

impl LevelPoly {
    pub fn zero() -> Self {
        LevelPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `k`.
    pub fn k() -> Self {
        Self::from_coeffs(vec![Q::zero(), Q::one()])
    }

    /// `a*k + b`
    pub fn affine(a: Q, b: Q) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LevelPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.coeffs.len() {
            0 => Some(Q::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, k: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * k + c;
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LevelPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `k`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Q::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        LevelPoly { coeffs }
    }

    pub fn add_assign_ref(&mut self, other: &LevelPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Q::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Division with remainder over Q.
    pub fn div_rem(&self, divisor: &LevelPoly) -> (LevelPoly, LevelPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (LevelPoly::from_coeffs(quot), LevelPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &LevelPoly) -> LevelPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LevelPoly) -> LevelPoly {
        let (quot, rem) = self.div_rem(divisor);
        assert!(rem.is_zero(), "inexact polynomial division");
        quot
    }

    /// All distinct rational roots, in increasing order.
    pub fn rational_roots(&self) -> Result<Vec<Q>> {
        if self.is_zero() {
            return Err(LieError::RootFinding("zero polynomial has every root".into()));
        }
        let mut roots = Vec::new();
        let mut ints = self.primitive_integer_coeffs();
        // strip the factor k^m
        let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            roots.push(Q::zero());
            ints.drain(..lead_zeros);
        }
        if ints.len() >= 2 {
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            let poly = LevelPoly::from_coeffs(ints.iter().map(|c| Q::from_integer(c.clone())).collect());
            for p in &ps {
                for d in &qs {
                    if !p.gcd(d).is_one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let cand = Q::new(p * BigInt::from(sign), d.clone());
                        if poly.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Integer coefficients of a positive rational multiple with content 1.
    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.to_u128().ok_or_else(|| {
        LieError::RootFinding(format!("coefficient {n} too large for divisor enumeration"))
    })?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut rest = n;
    let mut p: u128 = 2;
    let mut steps: u64 = 0;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
        steps += 1;
        if steps > 20_000_000 {
            return Err(LieError::RootFinding(format!("could not factor {n}")));
        }
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    let mut divs = vec![1u128];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut m = *d;
            for _ in 0..=e {
                next.push(m);
                m *= p;
            }
        }
        divs = next;
    }
    Ok(divs.into_iter().map(BigInt::from).collect())
}

impl Add for &LevelPoly {
    type Output = LevelPoly;
    fn add(self, rhs: &LevelPoly) -> LevelPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &LevelPoly {
    type Output = LevelPoly;
    fn sub(self, rhs: &LevelPoly) -> LevelPoly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Neg for &LevelPoly {
    type Output = LevelPoly;
    fn neg(self) -> LevelPoly {
        LevelPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LevelPoly {
    type Output = LevelPoly;
    fn mul(self, rhs: &LevelPoly) -> LevelPoly {
        if self.is_zero() || rhs.is_zero() {
            return LevelPoly::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LevelPoly::from_coeffs(coeffs)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for LevelPoly {
    /// Highest power first, e.g. `2k + 4`, `k + 3/2`, `-1/2*k^2 + k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "k".to_string(),
                _ => format!("k^{i}"),
            };
            if i == 0 {
                write!(f, "{}", fmt_q(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else if is_integer(&abs) {
                write!(f, "{}{var}", fmt_q(&abs))?;
            } else {
                write!(f, "{}*{var}", fmt_q(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_q("-5/3").unwrap(), qf(-5, 3));
        assert_eq!(parse_q("4").unwrap(), q(4));
        assert_eq!(parse_q(" 6/-4 ").unwrap(), qf(-3, 2));
        assert!(parse_q("1.5").is_err());
        assert!(parse_q("1/0").is_err());
        assert_eq!(fmt_q(&qf(-9, 2)), "-9/2");
    }

    #[test]
    fn display_polynomials() {
        assert_eq!(LevelPoly::affine(q(2), q(4)).to_string(), "2k + 4");
        assert_eq!(LevelPoly::affine(q(1), qf(3, 2)).to_string(), "k + 3/2");
        assert_eq!(LevelPoly::affine(qf(-1, 2), q(0)).to_string(), "-1/2*k");
        assert_eq!(LevelPoly::zero().to_string(), "0");
        let p = LevelPoly::from_coeffs(vec![q(-1), q(0), q(3)]);
        assert_eq!(p.to_string(), "3k^2 - 1");
    }

    #[test]
    fn gcd_and_roots() {
        // (k + 2)(2k - 1)(k - 3)
        let a = LevelPoly::affine(q(1), q(2));
        let b = LevelPoly::affine(q(2), q(-1));
        let c = LevelPoly::affine(q(1), q(-3));
        let p = &(&a * &b) * &c;
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![q(-2), qf(1, 2), q(3)]
        );
        let g = p.gcd(&(&a * &c));
        assert_eq!(g, (&a * &c).monic());
        // k^2 + 1 has no rational roots; k^2 (k+1) has 0 and -1
        let irr = LevelPoly::from_coeffs(vec![q(1), q(0), q(1)]);
        assert!(irr.rational_roots().unwrap().is_empty());
        let kk = LevelPoly::from_coeffs(vec![q(0), q(0), q(1), q(1)]);
        assert_eq!(kk.rational_roots().unwrap(), vec![q(-1), q(0)]);
    }

    #[test]
    fn division_round_trip() {
        let a = LevelPoly::from_coeffs(vec![qf(1, 3), q(-2), q(5), q(1)]);
        let b = LevelPoly::affine(q(3), qf(1, 2));
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(&(&quot * &b) + &rem, a);
        assert!(rem.degree().unwrap_or(0) < 1);
    }
}
