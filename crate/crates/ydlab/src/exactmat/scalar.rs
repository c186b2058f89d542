use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, YdError};

/// An exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in `i64` stay unboxed; anything
/// larger is promoted to a [`BigRational`]. The representation is canonical,
/// so derived equality is equality of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        ExactScalar(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar(Repr::Small(n, 1))
    }

    /// `p/q` reduced; panics on `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_i128(p as i128, q as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        let (n, d) = (r.numer(), r.denom());
        match (n.to_i64(), d.to_i64()) {
            (Some(n), Some(d)) => ExactScalar(Repr::Small(n, d)),
            _ => ExactScalar(Repr::Big(r)),
        }
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => ExactScalar(Repr::Small(n, d)),
            _ => ExactScalar(Repr::Big(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(0, _), _) => o.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Self::zero(),
            (Repr::Small(1, 1), _) => o.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128(-(*n as i128), *d as i128),
            Repr::Big(r) => Self::from_big(-r.clone()),
        }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    /// Panics on division by zero, like integer division.
    pub fn div_ref(&self, o: &Self) -> Self {
        self.mul_ref(&o.recip().expect("division by zero"))
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                self.$f(&o)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &'a ExactScalar) -> ExactScalar {
                self.$f(o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl<'a> Neg for &'a ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        ExactScalar::one()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(YdError::MalformedInput(format!("bad rational literal {whole:?}")));
    }
    BigInt::from_str(s).map_err(|_| YdError::MalformedInput(format!("bad rational literal {whole:?}")))
}

impl FromStr for ExactScalar {
    type Err = YdError;

    /// Accepts `"p"` or `"p/q"` with decimal `p`, `q` and `q > 0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (parse_int(p, s)?, parse_int(q, s)?),
            None => (parse_int(t, s)?, BigInt::one()),
        };
        if !q.is_positive() {
            return Err(YdError::MalformedInput(format!(
                "denominator must be positive in {s:?}"
            )));
        }
        Ok(Self::from_big(BigRational::new(p, q)))
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = ExactScalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational literal \"p\" or \"p/q\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExactScalar, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExactScalar, E> {
        Ok(ExactScalar::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExactScalar, E> {
        i64::try_from(v)
            .map(ExactScalar::from_int)
            .map_err(|_| E::custom("integer out of range; use a string literal"))
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(p: &str, q: &str) -> BigRational {
        BigRational::new(p.parse().unwrap(), q.parse().unwrap())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(ExactScalar::ratio(2, 4), ExactScalar::ratio(1, 2));
        assert_eq!(ExactScalar::ratio(3, -6), ExactScalar::ratio(-1, 2));
        assert_eq!("2/4".parse::<ExactScalar>().unwrap().to_string(), "1/2");
        assert_eq!("-6/3".parse::<ExactScalar>().unwrap().to_string(), "-2");
    }

    #[test]
    fn rejects_bad_literals() {
        for s in ["1/0", "1/-2", "", "x", "1.5", "1//2", "--1"] {
            assert!(s.parse::<ExactScalar>().is_err(), "{s}");
        }
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = ExactScalar::from_int(i64::MAX);
        let sq = &a * &a;
        assert_eq!(sq.to_big(), big("85070591730234615847396907784232501249", "1"));
        let back = &sq / &a;
        assert_eq!(back, a);
        assert!(matches!(back.0, Repr::Small(..)));
        let m = ExactScalar::from_int(i64::MIN);
        assert_eq!((-&m).to_big(), big("9223372036854775808", "1"));
    }

    #[test]
    fn agrees_with_bigrational() {
        let vals = [(1, 3), (-7, 12), (5, 1), (0, 1), (i64::MAX, 3), (-1, i64::MAX)];
        for &(p, q) in &vals {
            for &(r, s) in &vals {
                let x = ExactScalar::ratio(p, q);
                let y = ExactScalar::ratio(r, s);
                let (bx, by) = (x.to_big(), y.to_big());
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                if !y.is_zero() {
                    assert_eq!((&x / &y).to_big(), &bx / &by);
                }
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let x = ExactScalar::ratio(-22, 7);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "\"-22/7\"");
        assert_eq!(serde_json::from_str::<ExactScalar>(&s).unwrap(), x);
        assert_eq!(serde_json::from_str::<ExactScalar>("3").unwrap(), ExactScalar::from_int(3));
    }
}
