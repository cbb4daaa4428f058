//! Exact scalar arithmetic: arbitrary-precision rationals and quadratic
//! extensions `Q(sqrt(d))` for a fixed square-free integer `d`.
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere. A quadratic element with vanishing irrational part collapses
//! to the rational variant, so `Rat` embeds compatibly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = BigRational;

/// An element of the ground field: either a rational or `x + y*sqrt(d)`.
///
/// Invariant: the `Quad` variant always has `y != 0`; a vanishing
/// irrational part is normalized away to `Rat`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(Rat),
    Quad { x: Rat, y: Rat, d: i64 },
}

pub fn rat_i64(n: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(den))
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        FieldElem::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::Rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        FieldElem::Rat(rat_i64(num, den))
    }

    pub fn from_rat(r: Rat) -> Self {
        FieldElem::Rat(r)
    }

    /// `x + y*sqrt(d)`, normalizing `y = 0` to the rational variant.
    pub fn quad(x: Rat, y: Rat, d: i64) -> Self {
        if y.is_zero() {
            FieldElem::Rat(x)
        } else {
            FieldElem::Quad { x, y, d }
        }
    }

    /// `sqrt(d)` as a field element.
    pub fn sqrt_of(d: i64) -> Self {
        FieldElem::Quad { x: Rat::zero(), y: Rat::one(), d }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElem::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldElem::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldElem::Rat(_))
    }

    /// Rational part (the coefficient of 1).
    pub fn rat_part(&self) -> &Rat {
        match self {
            FieldElem::Rat(r) => r,
            FieldElem::Quad { x, .. } => x,
        }
    }

    /// Returns the rational value, or `None` for a proper quadratic element.
    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            FieldElem::Rat(r) => Some(r),
            FieldElem::Quad { .. } => None,
        }
    }

    /// The discriminant of the quadratic extension this element lives in.
    pub fn quad_disc(&self) -> Option<i64> {
        match self {
            FieldElem::Rat(_) => None,
            FieldElem::Quad { d, .. } => Some(*d),
        }
    }

    /// Galois conjugate `x - y*sqrt(d)`; identity on rationals.
    pub fn conj(&self) -> Self {
        match self {
            FieldElem::Rat(r) => FieldElem::Rat(r.clone()),
            FieldElem::Quad { x, y, d } => FieldElem::Quad { x: x.clone(), y: -y.clone(), d: *d },
        }
    }

    fn parts(&self, d: i64) -> (Rat, Rat) {
        match self {
            FieldElem::Rat(r) => (r.clone(), Rat::zero()),
            FieldElem::Quad { x, y, d: dd } => {
                assert_eq!(*dd, d, "mixed quadratic extensions: sqrt({dd}) vs sqrt({d})");
                (x.clone(), y.clone())
            }
        }
    }

    fn common_disc(&self, other: &Self) -> Option<i64> {
        match (self.quad_disc(), other.quad_disc()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "mixed quadratic extensions: sqrt({a}) vs sqrt({b})");
                Some(a)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match self.common_disc(other) {
            None => FieldElem::Rat(self.rat_part() + other.rat_part()),
            Some(d) => {
                let (ax, ay) = self.parts(d);
                let (bx, by) = other.parts(d);
                FieldElem::quad(ax + bx, ay + by, d)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElem::Rat(r) => FieldElem::Rat(-r.clone()),
            FieldElem::Quad { x, y, d } => {
                FieldElem::Quad { x: -x.clone(), y: -y.clone(), d: *d }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match self.common_disc(other) {
            None => FieldElem::Rat(self.rat_part() * other.rat_part()),
            Some(d) => {
                let (ax, ay) = self.parts(d);
                let (bx, by) = other.parts(d);
                let dd = Rat::from_integer(BigInt::from(d));
                FieldElem::quad(&ax * &bx + &dd * &ay * &by, &ax * &by + &ay * &bx, d)
            }
        }
    }

    /// Multiplicative inverse; `None` on zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            FieldElem::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(FieldElem::Rat(r.recip()))
                }
            }
            FieldElem::Quad { x, y, d } => {
                // (x + y sqrt d)^{-1} = (x - y sqrt d) / (x^2 - d y^2)
                let dd = Rat::from_integer(BigInt::from(*d));
                let norm = x * x - &dd * y * y;
                if norm.is_zero() {
                    // impossible for square-free d != square, kept for safety
                    return None;
                }
                Some(FieldElem::quad(x / &norm, -y / &norm, *d))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = FieldElem::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.mul(&FieldElem::from_int(n))
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

macro_rules! fe_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl std::ops::$tr for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                self.$imp(rhs)
            }
        }
        impl std::ops::$tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$imp(&rhs)
            }
        }
    };
}
fe_binop!(Add, add, add);
fe_binop!(Sub, sub, sub);
fe_binop!(Mul, mul, mul);

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}
impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(r) => fmt_rat(r, f),
            FieldElem::Quad { x, y, d } => {
                if !x.is_zero() {
                    fmt_rat(x, f)?;
                    if y.is_positive() {
                        write!(f, "+")?;
                    }
                }
                if y.is_one() {
                    // plain sqrt
                } else if (-y.clone()).is_one() {
                    write!(f, "-")?;
                } else {
                    fmt_rat(y, f)?;
                    write!(f, "*")?;
                }
                write!(f, "sqrt({d})")
            }
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    // guard against pathological inputs before BigInt parsing
    if s.len() > 4096 {
        return Err(Error::Parse("numeral too long".into()));
    }
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim())
                .map_err(|e| Error::Parse(format!("bad numerator {num:?}: {e}")))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|e| Error::Parse(format!("bad denominator {den:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Splits `p/q*sqrt(d)`-style terms: returns (rational coefficient, Some(d)).
fn parse_term(s: &str) -> Result<(Rat, Option<i64>), Error> {
    let s = s.trim();
    if let Some(pos) = s.find("sqrt(") {
        if !s.ends_with(')') {
            return Err(Error::Parse(format!("unterminated sqrt in {s:?}")));
        }
        let inner = &s[pos + 5..s.len() - 1];
        if inner.len() > 18 {
            return Err(Error::Parse("sqrt argument too long".into()));
        }
        let d: i64 = inner
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad sqrt argument {inner:?}: {e}")))?;
        if d <= 1 {
            return Err(Error::Parse(format!("sqrt argument must be > 1, got {d}")));
        }
        let coeff_str = s[..pos].trim().trim_end_matches('*').trim();
        let coeff = match coeff_str {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            c => parse_rat(c)?,
        };
        Ok((coeff, Some(d)))
    } else {
        Ok((parse_rat(s)?, None))
    }
}

impl FromStr for FieldElem {
    type Err = Error;

    /// Parses `"p/q"`, `"sqrt(d)"`, `"p/q*sqrt(d)"` and sums/differences of
    /// one rational and one sqrt term, e.g. `"-1/2+3/4*sqrt(3)"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // split on a top-level '+'/'-' that is not a leading sign and not
        // inside sqrt((-)d); sqrt arguments are positive so only the leading
        // sign of each term matters.
        let bytes = s.as_bytes();
        let mut split_at = None;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'*'
                && bytes[i - 1] != b'/'
                && bytes[i - 1] != b'('
                && bytes[i - 1] != b'+'
                && bytes[i - 1] != b'-'
            {
                split_at = Some(i);
            }
        }
        match split_at {
            None => {
                let (c, d) = parse_term(s)?;
                Ok(match d {
                    None => FieldElem::Rat(c),
                    Some(d) => FieldElem::quad(Rat::zero(), c, d),
                })
            }
            Some(i) => {
                let (a, da) = parse_term(&s[..i])?;
                let sign = if bytes[i] == b'-' { -Rat::one() } else { Rat::one() };
                let (b, db) = parse_term(&s[i + 1..])?;
                let b = sign * b;
                match (da, db) {
                    (None, Some(d)) => Ok(FieldElem::quad(a, b, d)),
                    (Some(d), None) => Ok(FieldElem::quad(b, a, d)),
                    (None, None) => Ok(FieldElem::Rat(a + b)),
                    (Some(d1), Some(d2)) if d1 == d2 => {
                        Ok(FieldElem::quad(Rat::zero(), a + b, d1))
                    }
                    _ => Err(Error::Parse(format!("mixed radicals in {s:?}"))),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in [
            "0", "1", "-3", "5/7", "-5/7", "sqrt(3)", "-sqrt(3)", "2*sqrt(5)",
            "1/2+3/4*sqrt(3)", "-1/2-3/4*sqrt(3)", "1-sqrt(2)", "7+sqrt(2)",
        ] {
            let v = fe(s);
            let back = fe(&v.to_string());
            assert_eq!(v, back, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "sqrt(1)", "sqrt(-4)", "a+b", "1+sqrt(2)+sqrt(3)", "--3"] {
            assert!(s.parse::<FieldElem>().is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn quad_collapse() {
        let a = fe("sqrt(3)");
        let b = fe("-sqrt(3)");
        assert_eq!(a.add(&b), FieldElem::zero());
        assert!(a.add(&b).is_rational());
        // sqrt(3)^2 = 3
        assert_eq!(a.mul(&a), FieldElem::from_int(3));
    }

    #[test]
    fn quad_inverse() {
        let a = fe("1/2+3/4*sqrt(3)");
        let i = a.inv().unwrap();
        assert!(a.mul(&i).is_one());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat_i64(n, d))
    }

    fn arb_fe() -> impl Strategy<Value = FieldElem> {
        prop_oneof![
            arb_rat().prop_map(FieldElem::Rat),
            (arb_rat(), arb_rat()).prop_map(|(x, y)| FieldElem::quad(x, y, 3)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // field axioms on random triples
        #[test]
        fn field_axioms(a in arb_fe(), b in arb_fe(), c in arb_fe()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), FieldElem::zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn display_parse_roundtrip(a in arb_fe()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<FieldElem>().unwrap(), a);
        }
    }
}
