//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Every algebraic object in the crate is generic over a [`Field`]. The field
//! value is carried around at runtime (a prime field needs its modulus), and
//! scalars are plain values of the associated [`Field::Elem`] type.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F_{p}"),
        }
    }
}

/// A field with exact arithmetic.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, String>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += b * c`
    fn add_mul_assign(&self, acc: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *acc = self.add(acc, &self.mul(b, c));
    }

    /// `acc -= b * c`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(b, c));
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn sign(&self, odd: bool) -> Self::Elem {
        if odd {
            self.from_i64(-1)
        } else {
            self.one()
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An exact rational number.
///
/// Values whose reduced numerator and denominator fit in `i64` are stored
/// inline; everything else falls back to a heap-allocated `BigRational`. The
/// representation is canonical (lowest terms, positive denominator, inline
/// whenever possible), so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small { num: 0, den: 1 };
    pub const ONE: Rat = Rat::Small { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Rat {
        if n == i64::MIN {
            return Rat::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        Rat::Small { num: n, den: 1 }
    }

    pub fn from_big(r: BigRational) -> Rat {
        // BigRational is always reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rat::Small { num: n, den: d },
            _ => Rat::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    /// Reduces `num/den` held in i128, falling back to big integers on overflow.
    fn from_i128(num: i128, den: i128) -> Rat {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rat::Small { num: n as i64, den: d as i64 }
        } else {
            Rat::from_big(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    /// True when the value is stored without big-integer allocation.
    pub fn is_inline(&self) -> bool {
        matches!(self, Rat::Small { .. })
    }

    pub fn add(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small { num: 0, .. }, _) => other.clone(),
            (_, Rat::Small { num: 0, .. }) => self.clone(),
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                if b == d {
                    Rat::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let n = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                    Rat::from_i128(n, *b as i128 * *d as i128)
                }
            }
            _ => Rat::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small { num, den } => Rat::Small { num: -num, den: *den },
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        match (self, other) {
            (Rat::Small { num: 0, .. }, _) | (_, Rat::Small { num: 0, .. }) => Rat::ZERO,
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                if *b == 1 && *d == 1 {
                    let p = *a as i128 * *c as i128;
                    if p > i64::MIN as i128 && p <= i64::MAX as i128 {
                        return Rat::Small { num: p as i64, den: 1 };
                    }
                }
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn recip(&self) -> Rat {
        match self {
            Rat::Small { num: 0, .. } => panic!("division by zero in Q"),
            Rat::Small { num, den } => {
                if *num < 0 {
                    Rat::Small { num: -den, den: -num }
                } else {
                    Rat::Small { num: *den, den: *num }
                }
            }
            Rat::Big(b) => Rat::from_big(b.recip()),
        }
    }

    /// Parses `"n"`, `"p/q"` or a finite decimal such as `"-0.25"`.
    pub fn parse(s: &str) -> Result<Rat, String> {
        let t = s.trim();
        if t.is_empty() {
            return Err("empty rational".into());
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {t:?}"))?;
            let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {t:?}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            return Ok(Rat::from_big(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = t.split_once('.') {
            let neg = int.trim_start().starts_with('-');
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(format!("bad decimal {t:?}"));
            }
            let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
                "" => BigInt::zero(),
                digits => digits.parse().map_err(|_| format!("bad decimal {t:?}"))?,
            };
            let frac_part: BigInt = frac.parse().map_err(|_| format!("bad decimal {t:?}"))?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let mut value = BigRational::new(int_part * &scale + frac_part, scale);
            if neg {
                value = -value;
            }
            return Ok(Rat::from_big(value));
        }
        let n: BigInt = t.parse().map_err(|_| format!("bad rational {t:?}"))?;
        Ok(Rat::from_big(BigRational::from_integer(n)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small { num, den: 1 } => write!(f, "{num}"),
            Rat::Small { num, den } => write!(f, "{num}/{den}"),
            Rat::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn from_i64(&self, n: i64) -> Rat {
        Rat::from_int(n)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn inv(&self, a: &Rat) -> Rat {
        a.recip()
    }
    fn parse_elem(&self, s: &str) -> Result<Rat, String> {
        Rat::parse(s)
    }
    fn format_elem(&self, a: &Rat) -> String {
        a.to_string()
    }
    fn is_one(&self, a: &Rat) -> bool {
        matches!(a, Rat::Small { num: 1, den: 1 })
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Largest modulus accepted for `F_p`.
pub const MAX_PRIME: u64 = (1 << 32) - 1;

/// The prime field `F_p`, elements stored as residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, String> {
        if p > MAX_PRIME {
            return Err(format!("p = {p} exceeds the supported maximum {MAX_PRIME}"));
        }
        if !is_prime(p) {
            return Err(format!("p must be prime (got {p})"));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "division by zero in F_{}", self.p);
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        self.reduce_i128(s0)
    }
    fn parse_elem(&self, s: &str) -> Result<u64, String> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n = self.parse_elem(n)?;
            let d = self.parse_elem(d)?;
            if d == 0 {
                return Err(format!("denominator of {t:?} vanishes mod {}", self.p));
            }
            return Ok(self.div(&n, &d));
        }
        let n: BigInt = t.parse().map_err(|_| format!("bad integer {t:?} for F_{}", self.p))?;
        let r = n.mod_floor(&BigInt::from(self.p));
        Ok(r.to_u64().expect("residue fits"))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}
