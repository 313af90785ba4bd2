use crate::scalars::{Field, Ring};
use crate::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact rational number, the coefficient field at a fixed numeric `d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Parses "p/q" or "p" with optional sign.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num)
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
        let d = BigInt::from_str(den)
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rat(BigRational::new(n, d)))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        num::ToPrimitive::to_f64(n).unwrap_or(f64::NAN)
            / num::ToPrimitive::to_f64(d).unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Field for Rat {
    fn from_int(n: i64) -> Self {
        Rat(BigRational::from(BigInt::from(n)))
    }

    fn inv(&self) -> Result<Self, Error> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn real_sign(&self) -> Option<i8> {
        Some(if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        })
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self, Error> {
        match v {
            Value::String(s) => Rat::parse(s),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(Rat::from_int(i))
                } else {
                    Err(Error::Parse(format!("non-integer number `{n}` for rational")))
                }
            }
            other => Err(Error::Parse(format!("expected rational, got {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        assert_eq!(Rat::parse("3/2").unwrap(), Rat::new(3, 2));
        assert_eq!(Rat::parse("-7").unwrap(), Rat::from_int(-7));
        assert_eq!(Rat::parse("4/-6").unwrap(), Rat::new(-2, 3));
        assert_eq!(Rat::new(10, 4).to_string(), "5/2");
        assert_eq!(Rat::from_int(3).to_string(), "3");
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("x").is_err());
    }

    #[test]
    fn json_round_trip() {
        for r in [Rat::new(-3, 7), Rat::from_int(0), Rat::from_int(12)] {
            assert_eq!(Rat::from_json(&r.to_json()).unwrap(), r);
        }
    }

    proptest! {
        #[test]
        fn field_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50,
                      q in 1i64..20) {
            let x = Rat::new(a, q);
            let y = Rat::new(b, q + 1);
            let z = Rat::new(c, q + 2);
            // associativity and distributivity
            prop_assert_eq!(
                (x.clone() + y.clone()) + z.clone(),
                x.clone() + (y.clone() + z.clone())
            );
            prop_assert_eq!(
                (x.clone() * y.clone()) * z.clone(),
                x.clone() * (y.clone() * z.clone())
            );
            prop_assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y.clone() + x.clone() * z.clone()
            );
            // inverses
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv().unwrap(), Rat::one());
            }
        }
    }
}
