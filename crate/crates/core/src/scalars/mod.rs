//! Coefficient fields and quantum-integer arithmetic.
//!
//! Three backends implement the [`Field`] trait: [`RatFn`] (rational
//! functions in the loop parameter `d` over the rationals, the generic
//! mode), [`Rat`] (exact rationals at a fixed numeric `d`) and [`C64`]
//! (complex doubles compared with an absolute tolerance). Everything
//! downstream — morphisms, Gram matrices, fiber functors — is generic over
//! the backend.

mod complex;
pub mod poly;
mod rat;
mod ratfn;

pub use complex::C64;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfn::RatFn;

use crate::Error;
use serde_json::Value;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring with identity; the base requirement for matrix
/// entries (polynomials are rings but not fields).
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A field of scalars with conjugation and a partial notion of real sign.
///
/// `real_sign` returns `Some(-1 | 0 | 1)` when the element is recognizably
/// a real number (always for [`Rat`], for [`C64`] when the imaginary part
/// vanishes within tolerance, for [`RatFn`] only on constants) and `None`
/// otherwise.
pub trait Field: Ring {
    fn from_int(n: i64) -> Self;
    fn inv(&self) -> Result<Self, Error>;
    fn conj(&self) -> Self;
    fn real_sign(&self) -> Option<i8>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, Error>;

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_int(p) * Self::from_int(q).inv().expect("nonzero")
    }

    fn div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    fn powi(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out * base.clone();
        }
        Ok(out)
    }
}

/// Loop parameters of the category: `d_L` for anticlockwise loops, `d_R`
/// for clockwise ones. One-parameter mode has `d_L = d_R = d`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldContext<K: Field> {
    d_left: K,
    d_right: K,
}

impl<K: Field> FieldContext<K> {
    pub fn one_param(d: K) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::Domain("loop parameter d must be nonzero".into()));
        }
        Ok(Self {
            d_left: d.clone(),
            d_right: d,
        })
    }

    pub fn two_param(d_left: K, d_right: K) -> Result<Self, Error> {
        if d_left.is_zero() || d_right.is_zero() {
            return Err(Error::Domain("loop parameters must be nonzero".into()));
        }
        Ok(Self { d_left, d_right })
    }

    pub fn d_left(&self) -> &K {
        &self.d_left
    }

    pub fn d_right(&self) -> &K {
        &self.d_right
    }

    pub fn is_one_param(&self) -> bool {
        self.d_left == self.d_right
    }

    /// The single loop parameter; errors when `d_L != d_R`.
    pub fn d(&self) -> Result<&K, Error> {
        if self.is_one_param() {
            Ok(&self.d_left)
        } else {
            Err(Error::TwoParameterContext)
        }
    }
}

impl FieldContext<RatFn> {
    /// Generic mode: `d` is the indeterminate of `Q(d)`.
    pub fn generic() -> Self {
        Self {
            d_left: RatFn::var(),
            d_right: RatFn::var(),
        }
    }
}

/// The quantum integer `[n]`: `[1] = 1`, `[2] = d`, `[n+1] = d[n] - [n-1]`.
pub fn quantum_integer<K: Field>(n: u32, d: &K) -> Result<K, Error> {
    if n == 0 {
        return Err(Error::Domain("quantum integer [n] requires n >= 1".into()));
    }
    let mut prev = K::zero(); // [0]
    let mut cur = K::one(); // [1]
    for _ in 1..n {
        let next = d.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Quantum integer evaluated at the context's single loop parameter.
pub fn quantum_integer_ctx<K: Field>(n: u32, ctx: &FieldContext<K>) -> Result<K, Error> {
    quantum_integer(n, ctx.d()?)
}

/// True iff `[n](d) != 0` for all `2 <= n <= level`, for both loop
/// parameters of the context. Always true in generic mode.
pub fn is_generic<K: Field>(ctx: &FieldContext<K>, level: u32) -> bool {
    let check = |d: &K| {
        for n in 2..=level {
            match quantum_integer(n, d) {
                Ok(v) if !v.is_zero() => {}
                _ => return false,
            }
        }
        true
    };
    check(&ctx.d_left) && (ctx.is_one_param() || check(&ctx.d_right))
}

/// Errors with the first failing level when the context is not generic.
pub fn ensure_generic<K: Field>(ctx: &FieldContext<K>, level: u32) -> Result<(), Error> {
    let d = ctx.d()?;
    for n in 2..=level {
        if quantum_integer(n, d)?.is_zero() {
            return Err(Error::NotGeneric { level: n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integer_base_cases() {
        let d = Rat::from_int(2);
        assert_eq!(quantum_integer(1, &d).unwrap(), Rat::one());
        assert_eq!(quantum_integer(2, &d).unwrap(), d);
        assert!(quantum_integer(0, &d).is_err());
    }

    #[test]
    fn quantum_integer_symbolic_level_three() {
        // [3] = d^2 - 1
        let d = RatFn::var();
        let expected = d.clone() * d.clone() - RatFn::one();
        assert_eq!(quantum_integer(3, &d).unwrap(), expected);
    }

    #[test]
    fn quantum_integer_at_two_counts() {
        // [n](2) = n by induction
        let d = Rat::from_int(2);
        assert_eq!(quantum_integer(5, &d).unwrap(), Rat::from_int(5));
        assert_eq!(quantum_integer(12, &d).unwrap(), Rat::from_int(12));
    }

    #[test]
    fn quantum_integer_q_identity() {
        // [n](q + q^-1) * (q - q^-1) = q^n - q^-n for rational q
        for (p, q) in [(3i64, 1i64), (5, 2), (7, 3)] {
            let qv = Rat::from_ratio(p, q);
            let d = qv.clone() + qv.inv().unwrap();
            for n in 1..8u32 {
                let lhs = quantum_integer(n, &d).unwrap()
                    * (qv.clone() - qv.inv().unwrap());
                let rhs = qv.powi(n as i64).unwrap() - qv.powi(-(n as i64)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn genericity_checks() {
        let generic = FieldContext::generic();
        assert!(is_generic(&generic, 10));

        // [3](1) = 0
        let degenerate = FieldContext::one_param(Rat::from_int(1)).unwrap();
        assert!(!is_generic(&degenerate, 3));
        assert_eq!(
            ensure_generic(&degenerate, 3),
            Err(Error::NotGeneric { level: 3 })
        );

        let two = FieldContext::one_param(Rat::from_int(2)).unwrap();
        assert!(is_generic(&two, 20));
    }

    #[test]
    fn context_modes() {
        let two = FieldContext::two_param(Rat::from_int(3), Rat::from_int(5)).unwrap();
        assert!(!two.is_one_param());
        assert!(two.d().is_err());
        assert!(FieldContext::one_param(Rat::zero()).is_err());
    }
}
