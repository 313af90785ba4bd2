//! Dense univariate polynomials over a coefficient field.
//!
//! Used in two places: rational functions in the loop parameter `d`
//! ([`crate::scalars::RatFn`]) and characteristic matrices for the Smith
//! normal form behind the similarity test in [`crate::fiber`].

use crate::scalars::{Field, Ring};
use crate::Error;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial stored by ascending powers; no trailing zero coefficients,
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![K::zero(), K::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        Poly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(K::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_value(&self) -> Option<K> {
        match self.coeffs.len() {
            0 => Some(K::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut out = K::zero();
        for c in self.coeffs.iter().rev() {
            out = out * x.clone() + c.clone();
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
        .normalized()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn divmod(&self, rhs: &Self) -> Result<(Self, Self), Error> {
        let lead = rhs.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inv()?;
        let dr = rhs.degree().expect("nonzero");
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some(dn) = rem.degree() {
            if dn < dr {
                break;
            }
            let factor = rem.leading().expect("nonzero").clone() * lead_inv.clone();
            let term = Poly::constant(factor).shift(dn - dr);
            quo = quo + term.clone();
            rem = rem - term * rhs.clone();
        }
        Ok((quo, rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic normalization; errors on the zero polynomial.
    pub fn monic(&self) -> Result<Self, Error> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&lead.inv()?))
    }

    /// Monic greatest common divisor by the Euclidean algorithm;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly { coeffs: long }.normalized()
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        self + (-rhs)
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly { coeffs }.normalized()
    }
}

impl<K: Field> Ring for Poly<K> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "d")?,
                1 => write!(f, "{c}*d")?,
                _ if c.is_one() => write!(f, "d^{i}")?,
                _ => write!(f, "{c}*d^{i}")?,
            }
        }
        Ok(())
    }
}
