//! The scalar field Q(q): rational functions in `q` with integer
//! coefficients, kept in a canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::CoeffError;

/// An element of Q(q), stored as `num/den` with both in Z[q].
///
/// Canonical form is maintained by every constructor and operation:
/// the fraction is gcd-reduced (including integer content), the
/// denominator is nonzero with positive leading coefficient, and zero
/// is exactly `0/1`. Consequently two values are equal iff their
/// representations are identical, and `==` is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatQ {
    num: IntPoly,
    den: IntPoly,
}

impl RatQ {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "RatQ with zero denominator");
        if num.is_zero() {
            return RatQ { num, den: IntPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        RatQ::from_reduced(num, den)
    }

    /// Wrap an already gcd-reduced fraction, normalizing only the sign.
    fn from_reduced(mut num: IntPoly, mut den: IntPoly) -> Self {
        if den.lead_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatQ { num, den }
    }

    pub fn zero() -> Self {
        RatQ { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatQ { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatQ { num: IntPoly::from_i64(n), den: IntPoly::one() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        RatQ::new(IntPoly::from_i64(num), IntPoly::from_i64(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatQ::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatQ { num: p, den: IntPoly::one() }
    }

    /// `q^n` for any integer n.
    pub fn q_pow(n: i64) -> Self {
        if n >= 0 {
            RatQ { num: IntPoly::monomial(BigInt::one(), n as usize), den: IntPoly::one() }
        } else {
            RatQ { num: IntPoly::one(), den: IntPoly::monomial(BigInt::one(), (-n) as usize) }
        }
    }

    pub fn q() -> Self {
        RatQ::q_pow(1)
    }

    /// `q - q^-1 = (q^2-1)/q`.
    pub fn q_minus_q_inv() -> Self {
        RatQ::q() - RatQ::q_pow(-1)
    }

    /// `q + q^-1 = (q^2+1)/q`.
    pub fn q_plus_q_inv() -> Self {
        RatQ::q() + RatQ::q_pow(-1)
    }

    /// The quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)`.
    pub fn q_int(n: i64) -> Self {
        (RatQ::q_pow(n) - RatQ::q_pow(-n)) / RatQ::q_minus_q_inv()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn checked_inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(RatQ::from_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        // powers of a reduced fraction are reduced
        RatQ::from_reduced(base.num.pow(e), base.den.pow(e))
    }

    /// Evaluate at `q = q0`. The binding must satisfy `q0 != 0` and
    /// `q0^4 != 1`; a vanishing denominator at a legal point is a pole.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        check_q_binding(q0)?;
        let den = self.den.eval(q0);
        if den.is_zero() {
            return Err(CoeffError::PoleAtSpecialization);
        }
        Ok(self.num.eval(q0) / den)
    }

    /// True when the value is a constant (no `q` dependence).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0) {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    /// Render suitable for use as a factor in a product, e.g. `(q^2+1)/q`.
    /// Returns the sign separately so callers can typeset `a - b`.
    pub fn sign_factor_string(&self) -> (bool, String) {
        let negative = self.num.lead_is_negative();
        let num = if negative { self.num.neg() } else { self.num.clone() };
        let num_str = if num.term_count() > 1 {
            format!("({})", num)
        } else {
            num.to_string()
        };
        if self.den.is_one() {
            return (negative, num_str);
        }
        let den_str = if self.den.term_count() > 1 || !self.den.leading_coeff().is_one() {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        (negative, format!("{}/{}", num_str, den_str))
    }

    /// Magnitude equal to one (so the factor can be omitted in a product).
    pub fn is_unit_magnitude(&self) -> bool {
        self.den.is_one() && self.num.term_count() == 1 && self.num.leading_coeff().abs().is_one() && self.num.degree() == Some(0)
    }

    pub fn is_negative_lead(&self) -> bool {
        self.num.lead_is_negative()
    }
}

/// Reject bindings where the defining assumption `q^4 != 1`, `q != 0` fails.
pub fn check_q_binding(q0: &BigRational) -> Result<(), CoeffError> {
    if q0.is_zero() {
        return Err(CoeffError::ForbiddenSpecialization);
    }
    let q2 = q0 * q0;
    if (&q2 * &q2).is_one() {
        return Err(CoeffError::ForbiddenSpecialization);
    }
    Ok(())
}

/// Sum of reduced fractions by Knuth's scheme: with g = gcd(d1, d2) the
/// only reduction left to perform is against g itself.
fn add_reduced(a: &RatQ, b: &RatQ, negate_b: bool) -> RatQ {
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    let bnum = if negate_b { b.num.neg() } else { b.num.clone() };
    if a.den.is_one() && b.den.is_one() {
        return RatQ { num: a.num.add(&bnum), den: IntPoly::one() };
    }
    // equal denominators: only the sum needs reducing against them
    if a.den == b.den {
        let t = a.num.add(&bnum);
        if t.is_zero() {
            return RatQ::zero();
        }
        let g2 = t.gcd(&a.den);
        return RatQ::from_reduced(
            t.exact_div(&g2).expect("gcd divides"),
            a.den.exact_div(&g2).expect("gcd divides"),
        );
    }
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = a.num.mul(&b.den).add(&bnum.mul(&a.den));
        if num.is_zero() {
            return RatQ::zero();
        }
        return RatQ::from_reduced(num, a.den.mul(&b.den));
    }
    let d2g = b.den.exact_div(&g).expect("gcd divides");
    let d1g = a.den.exact_div(&g).expect("gcd divides");
    let t = a.num.mul(&d2g).add(&bnum.mul(&d1g));
    if t.is_zero() {
        return RatQ::zero();
    }
    let g2 = t.gcd(&g);
    let num = t.exact_div(&g2).expect("gcd divides");
    let den = d1g.mul(&b.den.exact_div(&g2).expect("gcd divides"));
    RatQ::from_reduced(num, den)
}

/// Product of reduced fractions with cross-reduction, so the result needs
/// no further gcd.
fn mul_reduced(a: &RatQ, b: &RatQ) -> RatQ {
    if a.is_zero() || b.is_zero() {
        return RatQ::zero();
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let (n1, d2) = if g1.is_one() {
        (a.num.clone(), b.den.clone())
    } else {
        (
            a.num.exact_div(&g1).expect("gcd divides"),
            b.den.exact_div(&g1).expect("gcd divides"),
        )
    };
    let (n2, d1) = if g2.is_one() {
        (b.num.clone(), a.den.clone())
    } else {
        (
            b.num.exact_div(&g2).expect("gcd divides"),
            a.den.exact_div(&g2).expect("gcd divides"),
        )
    };
    RatQ::from_reduced(n1.mul(&n2), d1.mul(&d2))
}

impl Add for &RatQ {
    type Output = RatQ;
    fn add(self, rhs: &RatQ) -> RatQ {
        add_reduced(self, rhs, false)
    }
}

impl Sub for &RatQ {
    type Output = RatQ;
    fn sub(self, rhs: &RatQ) -> RatQ {
        add_reduced(self, rhs, true)
    }
}

impl Mul for &RatQ {
    type Output = RatQ;
    fn mul(self, rhs: &RatQ) -> RatQ {
        mul_reduced(self, rhs)
    }
}

impl Div for &RatQ {
    type Output = RatQ;
    fn div(self, rhs: &RatQ) -> RatQ {
        assert!(!rhs.is_zero(), "division of scalars by zero");
        mul_reduced(self, &RatQ { num: rhs.den.clone(), den: rhs.num.clone() })
    }
}

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RatQ {
            type Output = RatQ;
            fn $method(self, rhs: RatQ) -> RatQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatQ> for RatQ {
            type Output = RatQ;
            fn $method(self, rhs: &RatQ) -> RatQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatQ> for &RatQ {
            type Output = RatQ;
            fn $method(self, rhs: RatQ) -> RatQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        -&self
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (neg, s) = self.sign_factor_string();
        write!(f, "{}{}", if neg { "-" } else { "" }, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        // q + q^-1 = (q^2+1)/q
        let s = RatQ::q() + RatQ::q_pow(-1);
        assert_eq!(s.to_string(), "(q^2+1)/q");
        // (q - q^-1)(q + q^-1) = q^2 - q^-2
        let p = RatQ::q_minus_q_inv() * RatQ::q_plus_q_inv();
        assert_eq!(p, RatQ::q_pow(2) - RatQ::q_pow(-2));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(RatQ::zero().checked_inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn canonical_form_is_structural_equality() {
        // 2q/2 and q have identical representations
        let a = RatQ::new(IntPoly::from_i64(2).mul(&IntPoly::var()), IntPoly::from_i64(2));
        assert_eq!(a, RatQ::q());
        // denominator sign normalization
        let b = RatQ::new(IntPoly::var(), IntPoly::from_i64(-1));
        assert_eq!(b, -RatQ::q());
    }

    #[test]
    fn specialization() {
        use num_bigint::BigInt;
        let two = BigRational::from_integer(BigInt::from(2));
        let v = RatQ::q_plus_q_inv().specialize(&two).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(2)));

        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            RatQ::q_minus_q_inv().specialize(&one),
            Err(CoeffError::ForbiddenSpecialization)
        );

        // pole at a legal point
        let pole = RatQ::one() / (RatQ::q_pow(2) - RatQ::from_int(4));
        assert_eq!(pole.specialize(&two), Err(CoeffError::PoleAtSpecialization));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(RatQ::q_int(1), RatQ::one());
        assert_eq!(RatQ::q_int(2), RatQ::q_plus_q_inv());
        assert_eq!(RatQ::q_int(0), RatQ::zero());
        assert_eq!(RatQ::q_int(-2), -RatQ::q_plus_q_inv());
    }
}
