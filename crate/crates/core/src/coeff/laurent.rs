//! Laurent polynomials in the three commuting variables `a`, `b`, `c`
//! with coefficients in Q(q).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::ratq::{check_q_binding, RatQ};
use super::CoeffError;

/// Exponent triple for a monomial `a^a b^b c^c`; exponents may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbcMono {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl AbcMono {
    pub const ONE: AbcMono = AbcMono { a: 0, b: 0, c: 0 };

    pub fn new(a: i64, b: i64, c: i64) -> Self {
        AbcMono { a, b, c }
    }

    pub fn mul(&self, other: &Self) -> Self {
        AbcMono { a: self.a + other.a, b: self.b + other.b, c: self.c + other.c }
    }

    pub fn inv(&self) -> Self {
        AbcMono { a: -self.a, b: -self.b, c: -self.c }
    }

    pub fn is_one(&self) -> bool {
        *self == AbcMono::ONE
    }

    fn push_str(&self, out: &mut Vec<String>) {
        for (name, e) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            match e {
                0 => {}
                1 => out.push(name.to_string()),
                _ => out.push(format!("{}^{}", name, e)),
            }
        }
    }
}

impl fmt::Display for AbcMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        self.push_str(&mut parts);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A sparse Laurent polynomial in `a`, `b`, `c` over Q(q).
///
/// No stored coefficient is zero, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentABC {
    terms: BTreeMap<AbcMono, RatQ>,
}

/// Optional exact bindings for `q`, `a`, `b`, `c`. Unbound variables stay
/// symbolic, so partial specialization returns a symbolic residue.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub q: Option<BigRational>,
    pub a: Option<BigRational>,
    pub b: Option<BigRational>,
    pub c: Option<BigRational>,
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::from_integer(1.into());
    let base = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl LaurentABC {
    pub fn zero() -> Self {
        LaurentABC { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentABC::monomial(AbcMono::ONE, RatQ::one())
    }

    pub fn scalar(c: RatQ) -> Self {
        LaurentABC::monomial(AbcMono::ONE, c)
    }

    pub fn monomial(m: AbcMono, c: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentABC { terms }
    }

    /// `a^i b^j c^k` with coefficient 1.
    pub fn mono(i: i64, j: i64, k: i64) -> Self {
        LaurentABC::monomial(AbcMono::new(i, j, k), RatQ::one())
    }

    pub fn var_a() -> Self {
        LaurentABC::mono(1, 0, 0)
    }

    pub fn var_b() -> Self {
        LaurentABC::mono(0, 1, 0)
    }

    pub fn var_c() -> Self {
        LaurentABC::mono(0, 0, 1)
    }

    /// `a + a^-1` and cyclic friends, which appear throughout.
    pub fn sym_a() -> Self {
        LaurentABC::mono(1, 0, 0).add(&LaurentABC::mono(-1, 0, 0))
    }

    pub fn sym_b() -> Self {
        LaurentABC::mono(0, 1, 0).add(&LaurentABC::mono(0, -1, 0))
    }

    pub fn sym_c() -> Self {
        LaurentABC::mono(0, 0, 1).add(&LaurentABC::mono(0, 0, -1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&AbcMono::ONE).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AbcMono, &RatQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &AbcMono) -> RatQ {
        self.terms.get(m).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn insert_add(&mut self, m: AbcMono, c: RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentABC { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentABC::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return LaurentABC::zero();
        }
        LaurentABC { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentABC::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply a permutation/transform to every monomial's exponents.
    pub fn map_monomials(&self, f: impl Fn(AbcMono) -> AbcMono) -> Self {
        let mut out = LaurentABC::zero();
        for (m, c) in &self.terms {
            out.insert_add(f(*m), c.clone());
        }
        out
    }

    /// Evaluate under the given bindings. Unbound variables remain symbolic,
    /// so the result is again a Laurent polynomial (a scalar one when all of
    /// `a`, `b`, `c` are bound). Bound values must be nonzero; a bound `q`
    /// must satisfy `q^4 != 1`.
    pub fn specialize(&self, bindings: &Bindings) -> Result<LaurentABC, CoeffError> {
        for v in [&bindings.a, &bindings.b, &bindings.c].into_iter().flatten() {
            if v.is_zero() {
                return Err(CoeffError::ZeroBinding);
            }
        }
        if let Some(q0) = &bindings.q {
            check_q_binding(q0)?;
        }
        let mut out = LaurentABC::zero();
        for (m, c) in &self.terms {
            let mut coeff = match &bindings.q {
                Some(q0) => RatQ::from_rational(&c.specialize(q0)?),
                None => c.clone(),
            };
            let mut mono = *m;
            if let Some(v) = &bindings.a {
                coeff = coeff * RatQ::from_rational(&pow_rational(v, m.a));
                mono.a = 0;
            }
            if let Some(v) = &bindings.b {
                coeff = coeff * RatQ::from_rational(&pow_rational(v, m.b));
                mono.b = 0;
            }
            if let Some(v) = &bindings.c {
                coeff = coeff * RatQ::from_rational(&pow_rational(v, m.c));
                mono.c = 0;
            }
            out.insert_add(mono, coeff);
        }
        Ok(out)
    }

    /// Fully-bound specialization down to a single scalar in Q(q).
    pub fn specialize_abc(
        &self,
        a: &BigRational,
        b: &BigRational,
        c: &BigRational,
    ) -> Result<RatQ, CoeffError> {
        let bound = self.specialize(&Bindings {
            q: None,
            a: Some(a.clone()),
            b: Some(b.clone()),
            c: Some(c.clone()),
        })?;
        Ok(bound.coeff(&AbcMono::ONE))
    }
}

impl Add for &LaurentABC {
    type Output = LaurentABC;
    fn add(self, rhs: &LaurentABC) -> LaurentABC {
        LaurentABC::add(self, rhs)
    }
}

impl Sub for &LaurentABC {
    type Output = LaurentABC;
    fn sub(self, rhs: &LaurentABC) -> LaurentABC {
        LaurentABC::sub(self, rhs)
    }
}

impl Mul for &LaurentABC {
    type Output = LaurentABC;
    fn mul(self, rhs: &LaurentABC) -> LaurentABC {
        LaurentABC::mul(self, rhs)
    }
}

impl Neg for &LaurentABC {
    type Output = LaurentABC;
    fn neg(self) -> LaurentABC {
        LaurentABC::neg(self)
    }
}

impl fmt::Display for LaurentABC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (neg, coeff) = c.sign_factor_string();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", coeff)?;
            } else if c.is_unit_magnitude() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", coeff, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn unit_pair_cancels() {
        let p = LaurentABC::var_a().mul(&LaurentABC::mono(-1, 0, 0));
        assert!(p.is_one());
    }

    #[test]
    fn symmetric_product_expands() {
        // (b + b^-1)(c + c^-1) = bc + bc^-1 + b^-1 c + b^-1 c^-1
        let p = LaurentABC::sym_b().mul(&LaurentABC::sym_c());
        assert_eq!(p.term_count(), 4);
        for (i, j) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            assert!(p.coeff(&AbcMono::new(0, i, j)).is_one());
        }
    }

    #[test]
    fn additive_inverse() {
        let s = LaurentABC::var_a().add(&LaurentABC::var_a().neg());
        assert!(s.is_zero());
    }

    #[test]
    fn partial_specialization_leaves_residue() {
        // a*q^2 at q=3, a=1/2 -> 9/2
        let el = LaurentABC::monomial(AbcMono::new(1, 0, 0), RatQ::q_pow(2));
        let out = el
            .specialize(&Bindings { q: Some(rat(3, 1)), a: Some(rat(1, 2)), b: None, c: None })
            .unwrap();
        assert_eq!(out.coeff(&AbcMono::ONE), RatQ::from_ratio(9, 2));

        // binding only q leaves a symbolic
        let out = el
            .specialize(&Bindings { q: Some(rat(3, 1)), a: None, b: None, c: None })
            .unwrap();
        assert_eq!(out.coeff(&AbcMono::new(1, 0, 0)), RatQ::from_int(9));

        // zero binding rejected
        assert_eq!(
            el.specialize(&Bindings { q: None, a: Some(rat(0, 1)), b: None, c: None }),
            Err(CoeffError::ZeroBinding)
        );
    }
}
