//! Exact scalar arithmetic over the rationals and odd prime fields.
//!
//! Every geometric object in this crate is generic over [`Field`]. Elements
//! carry enough information to recover their field (a GF(p) element stores its
//! modulus), so constants such as `0`, `1` and `2` are always produced from an
//! existing element with [`Field::int_like`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus for which square roots are found by scanning residues.
const EXHAUSTIVE_SQRT_BOUND: u64 = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidField(format!(
                "characteristic must be an odd prime, got {p}"
            )));
        }
        if p > (1 << 62) {
            return Err(Error::InvalidField(format!("modulus {p} is too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .or_else(|| s.strip_prefix("GF"))
            .ok_or_else(|| Error::InvalidField(format!("expected Q or F<p>, got {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus in {s:?}")))?;
        FieldSpec::prime(p)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact field element. Implemented for [`Fp`] and [`BigRational`].
pub trait Field:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn field_spec(&self) -> FieldSpec;

    /// The image of an integer in the field described by `spec`.
    fn from_int(spec: &FieldSpec, n: i64) -> Result<Self>;

    /// Parses `"7"`, `"-3"` or `"3/2"`.
    fn parse(spec: &FieldSpec, s: &str) -> Result<Self>;

    fn is_zero(&self) -> bool;

    fn inv(&self) -> Option<Self>;

    /// A square root when one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Floating-point approximation; only meaningful over the rationals.
    fn to_f64(&self) -> Option<f64>;

    fn int_like(&self, n: i64) -> Self {
        Self::from_int(&self.field_spec(), n).expect("integer embeds in its own field")
    }

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// `y` with `2y = self`; total because the characteristic is odd.
    fn halve(&self) -> Self {
        self.clone() / self.int_like(2)
    }
}

/// Returns a square root of `x` if `x` is a square.
pub fn is_square<F: Field>(x: &F) -> Option<F> {
    x.sqrt()
}

pub fn halve<F: Field>(x: &F) -> F {
    x.halve()
}

/// Every element of GF(p) in canonical order `0, 1, ..., p-1`.
pub fn enumerate_field(spec: &FieldSpec) -> Result<Vec<Fp>> {
    match spec {
        FieldSpec::Rationals => Err(Error::InfiniteField(
            "cannot enumerate the rationals".to_string(),
        )),
        FieldSpec::Prime(p) => Ok((0..*p).map(|v| Fp::new(v, *p)).collect()),
    }
}

/// Checks that every scalar belongs to the same field and returns it.
pub fn common_spec<'a, F: Field>(xs: impl IntoIterator<Item = &'a F>) -> Result<FieldSpec> {
    let mut it = xs.into_iter();
    let first = it
        .next()
        .map(|x| x.field_spec())
        .ok_or_else(|| Error::Domain("no scalars".to_string()))?;
    for x in it {
        let s = x.field_spec();
        if s != first {
            return Err(Error::FieldMismatch(first, s));
        }
    }
    Ok(first)
}

// ---------------------------------------------------------------------------
// GF(p)

/// Element of GF(p) stored as its canonical residue together with `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// Reduces `value` modulo `modulus`. The modulus is trusted; use
    /// [`FieldSpec::prime`] to validate user input.
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(n: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let r = (n as i128).rem_euclid(m);
        Fp {
            value: r as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_quadratic_residue(&self) -> bool {
        self.value == 0 || self.pow((self.modulus - 1) / 2).value == 1
    }

    fn sqrt_by_search(&self) -> Option<Fp> {
        (0..self.modulus)
            .map(|v| Fp::new(v, self.modulus))
            .find(|r| *r * *r == *self)
    }

    fn sqrt_tonelli_shanks(&self) -> Option<Fp> {
        let p = self.modulus;
        if self.value == 0 {
            return Some(*self);
        }
        if !self.is_quadratic_residue() {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::new(2, p);
        while z.is_quadratic_residue() {
            z = z + Fp::new(1, p);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed GF({}) and GF({}) arithmetic",
            self.modulus, other.modulus
        );
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_F{}", self.value, self.modulus)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fp {
            value: (s % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - (rhs.value - self.value)
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let prod = self.value as u128 * rhs.value as u128;
        Fp {
            value: (prod % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp {
                value: self.modulus - self.value,
                modulus: self.modulus,
            }
        }
    }
}

impl Field for Fp {
    fn field_spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.modulus)
    }

    fn from_int(spec: &FieldSpec, n: i64) -> Result<Self> {
        match spec {
            FieldSpec::Prime(p) => Ok(Fp::from_i64(n, *p)),
            FieldSpec::Rationals => Err(Error::FieldMismatch(FieldSpec::Prime(0), *spec)),
        }
    }

    fn parse(spec: &FieldSpec, s: &str) -> Result<Self> {
        let p = match spec {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => {
                return Err(Error::Parse("GF(p) scalar requested over Q".to_string()))
            }
        };
        let q = parse_rational(s)?;
        let num = bigint_mod(q.numer(), p);
        let den = bigint_mod(q.denom(), p);
        let den = Fp::new(den, p)
            .inv()
            .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {p}")))?;
        Ok(Fp::new(num, p) * den)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp {
            value: t0.rem_euclid(self.modulus as i128) as u64,
            modulus: self.modulus,
        })
    }

    fn sqrt(&self) -> Option<Self> {
        if self.modulus <= EXHAUSTIVE_SQRT_BOUND {
            self.sqrt_by_search()
        } else {
            self.sqrt_tonelli_shanks()
        }
    }

    fn to_f64(&self) -> Option<f64> {
        None
    }

    fn int_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.modulus)
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r
    };
    r.to_u64().expect("residue fits in u64")
}

// ---------------------------------------------------------------------------
// Q

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Field for BigRational {
    fn field_spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn from_int(spec: &FieldSpec, n: i64) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => Ok(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(_) => Err(Error::FieldMismatch(FieldSpec::Rationals, *spec)),
        }
    }

    fn parse(spec: &FieldSpec, s: &str) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => parse_rational(s),
            FieldSpec::Prime(_) => Err(Error::Parse(
                "rational scalar requested over GF(p)".to_string(),
            )),
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn sqrt(&self) -> Option<Self> {
        let n = perfect_square(self.numer())?;
        let d = perfect_square(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }

    fn int_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }
}
