use crate::scalars::poly::Poly;
use crate::scalars::{Field, Rat, Ring};
use crate::Error;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monic gcd of rational-coefficient polynomials via a primitive PRS over
/// the integers; avoids the coefficient blowup of naive Euclid over `Q`.
fn poly_gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() {
        return if b.is_zero() {
            Poly::zero()
        } else {
            b.monic().expect("nonzero")
        };
    }
    if b.is_zero() {
        return a.monic().expect("nonzero");
    }
    let mut u = primitive_int(a);
    let mut v = primitive_int(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = pseudo_rem(&u, &v);
        u = v;
        v = make_primitive(r);
    }
    let coeffs = u
        .into_iter()
        .map(|c| Rat::from_big(num::BigRational::from(c)))
        .collect();
    Poly::from_coeffs(coeffs).monic().expect("nonzero")
}

/// Clears denominators and strips content; coefficients ascending.
fn primitive_int(p: &Poly<Rat>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.as_big().denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.as_big().numer() * (&lcm / c.as_big().denom()))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
    if v.last().expect("nonempty").is_negative() {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

/// Remainder of `lc(v)^(deg u - deg v + 1) * u` divided by `v`; exact over
/// the integers.
fn pseudo_rem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let dv = v.len() - 1;
    let lv = v.last().expect("nonzero divisor").clone();
    let mut r = u.to_vec();
    while r.len() > dv {
        let lead = r.last().expect("nonempty").clone();
        if lead.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - dv;
        for c in r.iter_mut() {
            *c = &*c * &lv;
        }
        for (k, vc) in v.iter().enumerate() {
            let idx = shift + k;
            let delta = &lead * vc;
            r[idx] = &r[idx] - delta;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Rational function in the loop parameter `d` over the rationals.
///
/// Kept reduced: `gcd(num, den) = 1` and the denominator is monic. This is
/// the generic-mode coefficient field; conjugation is the identity.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFn {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl RatFn {
    /// The indeterminate `d`.
    pub fn var() -> Self {
        RatFn {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(num: Poly<Rat>) -> Self {
        RatFn {
            num,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.divmod(&g).expect("gcd nonzero").0,
                den.divmod(&g).expect("gcd nonzero").0,
            )
        };
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        RatFn {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    /// Normalizes an already-coprime pair to a monic denominator.
    fn normalized_monic(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        RatFn {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn numerator(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rat> {
        &self.den
    }

    /// Evaluates at a rational point; errors when the point is a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat, Error> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) * den.inv()?)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        // Knuth's trick: with g0 = gcd(d1, d2) the only common factor the
        // sum can share with d1 d2 / g0 divides g0, so one small gcd on the
        // numerator finishes the reduction.
        let g0 = poly_gcd(&self.den, &rhs.den);
        if g0.is_constant() {
            let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
            if num.is_zero() {
                return RatFn::zero();
            }
            return RatFn {
                num,
                den: self.den * rhs.den,
            };
        }
        let d1r = self.den.divmod(&g0).expect("gcd nonzero").0;
        let d2r = rhs.den.divmod(&g0).expect("gcd nonzero").0;
        let t = self.num * d2r.clone() + rhs.num * d1r.clone();
        if t.is_zero() {
            return RatFn::zero();
        }
        let g1 = poly_gcd(&t, &g0);
        if g1.is_constant() {
            return RatFn::normalized_monic(t, d1r * g0 * d2r);
        }
        let num = t.divmod(&g1).expect("gcd nonzero").0;
        let den = d1r * g0.divmod(&g1).expect("gcd nonzero").0 * d2r;
        RatFn::normalized_monic(num, den)
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        self + (-rhs)
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        // cross-reduce; both inputs are reduced, so the product then is too
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_constant() {
            (self.num, rhs.den)
        } else {
            (
                self.num.divmod(&g1).expect("gcd nonzero").0,
                rhs.den.divmod(&g1).expect("gcd nonzero").0,
            )
        };
        let (n2, d1) = if g2.is_constant() {
            (rhs.num, self.den)
        } else {
            (
                rhs.num.divmod(&g2).expect("gcd nonzero").0,
                self.den.divmod(&g2).expect("gcd nonzero").0,
            )
        };
        RatFn::normalized_monic(n1 * n2, d1 * d2)
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ring for RatFn {
    fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn one() -> Self {
        RatFn {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Field for RatFn {
    fn from_int(n: i64) -> Self {
        RatFn::from_poly(Poly::constant(Rat::from_int(n)))
    }

    fn inv(&self) -> Result<Self, Error> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn::reduced(self.den.clone(), self.num.clone()))
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn real_sign(&self) -> Option<i8> {
        if self.num.is_zero() {
            return Some(0);
        }
        if self.num.is_constant() && self.den.is_constant() {
            let v = self.num.constant_value()? * self.den.constant_value()?.inv().ok()?;
            return v.real_sign();
        }
        None
    }

    fn to_json(&self) -> Value {
        let ser = |p: &Poly<Rat>| {
            Value::Array(p.coeffs().iter().map(Field::to_json).collect())
        };
        serde_json::json!({ "num": ser(&self.num), "den": ser(&self.den) })
    }

    fn from_json(v: &Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected rational function object, got {v}")))?;
        let parse = |key: &str| -> Result<Poly<Rat>, Error> {
            let arr = obj
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing `{key}` coefficient array")))?;
            let coeffs = arr.iter().map(Rat::from_json).collect::<Result<_, _>>()?;
            Ok(Poly::from_coeffs(coeffs))
        };
        RatFn::new(parse("num")?, parse("den")?)
    }
}
