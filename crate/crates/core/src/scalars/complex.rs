use crate::scalars::{Field, Ring};
use crate::Error;
use serde_json::Value;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Absolute tolerance used for equality and zero tests.
pub const TOL: f64 = 1e-9;

/// Complex double-precision scalar with tolerance-based comparison.
#[derive(Clone, Copy, Debug)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    pub fn real(re: f64) -> Self {
        C64 { re, im: 0.0 }
    }

    pub fn i() -> Self {
        C64 { re: 0.0, im: 1.0 }
    }

    pub fn norm_sq(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
}

impl PartialEq for C64 {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, TOL)
    }
}

impl fmt::Display for C64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for C64 {
    type Output = C64;
    fn add(self, rhs: C64) -> C64 {
        C64::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for C64 {
    type Output = C64;
    fn sub(self, rhs: C64) -> C64 {
        C64::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for C64 {
    type Output = C64;
    fn mul(self, rhs: C64) -> C64 {
        C64::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for C64 {
    type Output = C64;
    fn neg(self) -> C64 {
        C64::new(-self.re, -self.im)
    }
}

impl Ring for C64 {
    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }

    fn one() -> Self {
        C64::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re.abs() <= TOL && self.im.abs() <= TOL
    }
}

impl Field for C64 {
    fn from_int(n: i64) -> Self {
        C64::real(n as f64)
    }

    fn inv(&self) -> Result<Self, Error> {
        let n = self.norm_sq();
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(C64::new(self.re / n, -self.im / n))
    }

    fn conj(&self) -> Self {
        C64::new(self.re, -self.im)
    }

    fn real_sign(&self) -> Option<i8> {
        if self.im.abs() > TOL {
            return None;
        }
        Some(if self.re.abs() <= TOL {
            0
        } else if self.re > 0.0 {
            1
        } else {
            -1
        })
    }

    fn to_json(&self) -> Value {
        serde_json::json!([self.re, self.im])
    }

    fn from_json(v: &Value) -> Result<Self, Error> {
        match v {
            Value::Array(parts) if parts.len() == 2 => {
                let re = parts[0]
                    .as_f64()
                    .ok_or_else(|| Error::Parse("complex re part not a number".into()))?;
                let im = parts[1]
                    .as_f64()
                    .ok_or_else(|| Error::Parse("complex im part not a number".into()))?;
                Ok(C64::new(re, im))
            }
            Value::Number(n) => Ok(C64::real(
                n.as_f64()
                    .ok_or_else(|| Error::Parse("bad number for complex".into()))?,
            )),
            other => Err(Error::Parse(format!("expected [re, im], got {other}"))),
        }
    }
}
