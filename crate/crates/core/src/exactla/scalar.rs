//! Exact scalars: rationals with a machine-word fast path, and residues modulo a prime.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinAlgError;

/// An exact rational number.
///
/// Values whose reduced numerator and denominator fit in an `i64` are always
/// stored as `Small`, so structural equality coincides with numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    /// Reduced fraction `n/d` with `d > 0` and `n != i64::MIN`.
    Small(i64, i64),
    /// Reduced fraction that does not fit the small representation.
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// The integer `n`.
    pub fn int(n: i64) -> Rat {
        if n == i64::MIN {
            Rat::Big(Box::new(BigRational::from_integer(BigInt::from(n))))
        } else {
            Rat::Small(n, 1)
        }
    }

    /// The fraction `n/d`; `d` must be nonzero.
    pub fn frac(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        if n == 0 {
            return Rat::Small(0, 1);
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Rat::Small(n as i64, d as i64)
        } else {
            Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    /// Converts a (reduced) big rational, demoting to the small form when possible.
    pub fn from_big(b: BigRational) -> Rat {
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            if n != i64::MIN {
                return Rat::Small(n, d);
            }
        }
        Rat::Big(Box::new(b))
    }

    /// Arbitrary-precision copy of the value.
    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Rat::from_i128(*a as i128 + *c as i128, 1);
                }
                Rat::from_i128(
                    *a as i128 * *d as i128 + *c as i128 * *b as i128,
                    *b as i128 * *d as i128,
                )
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::Small(-a, *b),
            Rat::Big(x) => Rat::from_big(-(**x).clone()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Rat> {
        match self {
            Rat::Small(0, _) => None,
            Rat::Small(a, b) => Some(if *a < 0 { Rat::Small(-b, -a) } else { Rat::Small(*b, *a) }),
            Rat::Big(x) => Some(Rat::from_big(x.recip())),
        }
    }

    /// Nearest `f64`, used only for numeric root location.
    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(a, b) => *a as f64 / *b as f64,
            Rat::Big(x) => x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.to_big().numer().clone()
    }

    pub fn denom(&self) -> BigInt {
        self.to_big().denom().clone()
    }

    /// Parses `n` or `n/d` with arbitrary-size integers.
    pub fn parse(s: &str) -> Option<Rat> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::from_big(BigRational::new(n, d)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(x) if x.denom().is_one() => write!(f, "{}", x.numer()),
            Rat::Big(x) => write!(f, "{}/{}", x.numer(), x.denom()),
        }
    }
}

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals ℚ.
    Rational,
    /// The prime field 𝔽_p.
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The field of characteristic `c` (0 for ℚ).
    pub fn with_characteristic(c: u64) -> Result<Field, LinAlgError> {
        if c == 0 {
            return Ok(Field::Rational);
        }
        if c > (1u64 << 31) || !is_prime(c as u32) {
            return Err(LinAlgError::BadCharacteristic(c));
        }
        Ok(Field::Prime(c as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    /// Image of an integer.
    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::int(n)),
            Field::Prime(p) => Scalar::P { v: n.rem_euclid(p as i64) as u32, p },
        }
    }

    /// Image of a rational; fails when the denominator vanishes mod p.
    pub fn rat(self, r: &Rat) -> Result<Scalar, LinAlgError> {
        match self {
            Field::Rational => Ok(Scalar::Q(r.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u32().unwrap_or(0);
                let d = r.denom().mod_floor(&pb).to_u32().unwrap_or(0);
                if d == 0 {
                    return Err(LinAlgError::DenominatorVanishes(r.to_string(), p));
                }
                let n = Scalar::P { v: n, p };
                let d = Scalar::P { v: d, p };
                Ok(n.div(&d))
            }
        }
    }

    /// Parses an integer or `p/q` literal into this field.
    pub fn parse(self, s: &str) -> Result<Scalar, LinAlgError> {
        let r = Rat::parse(s).ok_or_else(|| LinAlgError::BadLiteral(s.to_string()))?;
        self.rat(&r)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of ℚ or of 𝔽_p. Mixing fields in one operation is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    P { v: u32, p: u32 },
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => {
                Scalar::P { v: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P { v: a, p }, Scalar::P { v: b, p: q }) if p == q => {
                Scalar::P { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P { v, p } => Scalar::P { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(a) => a.inv().map(Scalar::Q),
            Scalar::P { v: 0, .. } => None,
            Scalar::P { v, p } => {
                Some(Scalar::P { v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32, p: *p })
            }
        }
    }

    /// Quotient; panics on division by zero.
    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv().expect("division by zero"))
    }

    /// `self - a*b`, the elimination kernel.
    #[inline]
    pub fn sub_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.sub(&a.mul(b))
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::P { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::P { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}


/// Sign of a rational (`-1`, `0`, `1`).
pub fn rat_signum(r: &Rat) -> i32 {
    match r {
        Rat::Small(n, _) => n.signum() as i32,
        Rat::Big(x) => {
            if x.is_negative() {
                -1
            } else if x.is_zero() {
                0
            } else {
                1
            }
        }
    }
}
