//! Coefficient domains: the prime field `F_p` and the dual numbers
//! `F_p[ε]/(ε²)`.
//!
//! Residues are kept canonical in `[0, p)` with `p < 2^31`, so every product
//! fits a `u64` before reduction.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// An odd prime below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division; `p < 2^31` keeps this under 50k steps.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` modulo `p` by the extended Euclidean algorithm.
fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some(t0.rem_euclid(p as i64) as u32)
}

/// The operations shared by both coefficient domains.
///
/// Polynomial and matrix code is written once against this trait. Only
/// units may be used as elimination pivots, which is what makes the same
/// routines valid over the local ring of dual numbers.
pub trait Scalar:
    Copy
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn from_fp(x: Fp) -> Self;
    fn prime(&self) -> Prime;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    /// The image under ε ↦ 0 (the identity on `Fp`).
    fn constant_part(&self) -> Fp;

    fn zero(p: Prime) -> Self {
        Self::from_fp(Fp::zero(p))
    }
    fn one(p: Prime) -> Self {
        Self::from_fp(Fp::one(p))
    }
    fn from_i64(p: Prime, v: i64) -> Self {
        Self::from_fp(Fp::new(p, v))
    }
    fn is_one(&self) -> bool {
        *self == Self::one(self.prime())
    }
}

/// An element of `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    prime: Prime,
}

impl Fp {
    pub fn new(p: Prime, v: i64) -> Fp {
        Fp { value: p.reduce(v), prime: p }
    }

    #[inline]
    pub fn from_residue(p: Prime, v: u32) -> Fp {
        debug_assert!(v < p.get());
        Fp { value: v, prime: p }
    }

    pub fn zero(p: Prime) -> Fp {
        Fp { value: 0, prime: p }
    }

    pub fn one(p: Prime) -> Fp {
        Fp { value: 1, prime: p }
    }

    /// Canonical residue in `[0, p)`.
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(self) -> i64 {
        let p = self.prime.get() as i64;
        let v = self.value as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::one(self.prime);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.prime, rhs.prime);
        let p = self.prime.get();
        let s = self.value + rhs.value;
        Fp { value: if s >= p { s - p } else { s }, prime: self.prime }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.prime, rhs.prime);
        let p = self.prime.get();
        let v = if self.value >= rhs.value { self.value - rhs.value } else { self.value + p - rhs.value };
        Fp { value: v, prime: self.prime }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.prime, rhs.prime);
        let v = (self.value as u64 * rhs.value as u64) % self.prime.get() as u64;
        Fp { value: v as u32, prime: self.prime }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp { value: self.prime.get() - self.value, prime: self.prime }
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl Scalar for Fp {
    fn from_fp(x: Fp) -> Self {
        x
    }
    fn prime(&self) -> Prime {
        self.prime
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_unit(&self) -> bool {
        self.value != 0
    }
    fn inv(&self) -> Result<Fp> {
        inv_mod(self.value, self.prime.get())
            .map(|v| Fp { value: v, prime: self.prime })
            .ok_or(Error::DivisionByZero)
    }
    fn constant_part(&self) -> Fp {
        *self
    }
}

/// `a + bε` with `ε² = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dual {
    pub a: Fp,
    pub b: Fp,
}

impl Dual {
    pub fn new(a: Fp, b: Fp) -> Dual {
        debug_assert_eq!(a.prime(), b.prime());
        Dual { a, b }
    }

    /// The ε-coefficient.
    pub fn eps_part(self) -> Fp {
        self.b
    }

    pub fn eps(p: Prime) -> Dual {
        Dual { a: Fp::zero(p), b: Fp::one(p) }
    }
}

impl fmt::Debug for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}ε", self.a, self.b)
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}e)", self.a.symmetric(), self.b.symmetric())
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        Dual { a: self.a * rhs.a, b: self.a * rhs.b + self.b * rhs.a }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual { a: -self.a, b: -self.b }
    }
}

impl AddAssign for Dual {
    fn add_assign(&mut self, rhs: Dual) {
        *self = *self + rhs;
    }
}

impl SubAssign for Dual {
    fn sub_assign(&mut self, rhs: Dual) {
        *self = *self - rhs;
    }
}

impl MulAssign for Dual {
    fn mul_assign(&mut self, rhs: Dual) {
        *self = *self * rhs;
    }
}

impl Scalar for Dual {
    fn from_fp(x: Fp) -> Self {
        Dual { a: x, b: Fp::zero(x.prime()) }
    }
    fn prime(&self) -> Prime {
        self.a.prime()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }
    /// `(a + bε)⁻¹ = a⁻¹ − a⁻²bε`.
    fn inv(&self) -> Result<Dual> {
        let ai = self.a.inv().map_err(|_| Error::NotAUnit)?;
        Ok(Dual { a: ai, b: -(ai * ai * self.b) })
    }
    fn constant_part(&self) -> Fp {
        self.a
    }
}
