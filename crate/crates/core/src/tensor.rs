//! The algebra U ⊗ F[a^{±1}, b^{±1}, c^{±1}].
//!
//! Elements reuse the PBW monomial keys of U with Laurent-polynomial
//! coefficients; the Laurent factors commute with everything, so this
//! representation is lossless and the U rewriting engine is reused
//! unchanged. The module houses the canonical images of the Askey-Wilson
//! generators, the induced Z-grading with its projections, and the two
//! automorphisms: the order-2 swap and the order-3 cycle (the latter only
//! defined on the subalgebra generated by x, y, z and the Laurent part).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use thiserror::Error;

use crate::coeff::{AbcMono, CoeffError, LaurentABC, RatQ};
use crate::uqsl2::{EquitableMono, PbwMono, UElement, UGen};

/// Errors from tensor-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("element lies outside U' ⊗ F[a^±1,b^±1,c^±1]: equitable monomial {0} has a negative y exponent")]
    NotInUPrime(String),
}

/// Names for the built-in tensor elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorName {
    /// Image of A: `x⊗a + y⊗a^-1 + nu_z⊗bc^-1`.
    ANat,
    /// Image of B: `y⊗b + z⊗b^-1 + nu_x⊗ca^-1`.
    BNat,
    /// Image of C: `z⊗c + x⊗c^-1 + nu_y⊗ab^-1`.
    CNat,
    /// Image of alpha: `Λ⊗(a+a^-1) + 1⊗(b+b^-1)(c+c^-1)`.
    AlphaNat,
    BetaNat,
    GammaNat,
    /// Image of the Casimir element of the Askey-Wilson algebra.
    OmegaNat,
    /// Degree-1 component of ANat.
    R,
    /// Degree-(-1) component of BNat.
    L,
    /// `y^-1 ⊗ a`.
    Theta,
    /// `y^-1 ⊗ b^-1`.
    Vartheta,
    /// `Λ ⊗ 1`.
    Lambda1,
}

/// An element of U ⊗ F[a^{±1}, b^{±1}, c^{±1}]: a finitely supported map
/// from PBW monomials to Laurent polynomials. No stored coefficient is
/// zero, so `==` decides equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<PbwMono, LaurentABC>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        TensorElement::tensor(&UElement::one(), &LaurentABC::one())
    }

    /// `u ⊗ l`.
    pub fn tensor(u: &UElement, l: &LaurentABC) -> Self {
        let mut out = TensorElement::zero();
        for (m, c) in u.terms() {
            out.insert_add(*m, l.scale(c));
        }
        out
    }

    pub fn from_u(u: &UElement) -> Self {
        TensorElement::tensor(u, &LaurentABC::one())
    }

    pub fn from_laurent(l: &LaurentABC) -> Self {
        TensorElement::tensor(&UElement::one(), l)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&PbwMono::ONE).map_or(false, |l| l.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMono, &LaurentABC)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMono) -> LaurentABC {
        self.terms.get(m).cloned().unwrap_or_else(LaurentABC::zero)
    }

    pub fn insert_add(&mut self, m: PbwMono, l: LaurentABC) {
        if l.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(l);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&l);
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
        for (m, l) in &other.terms {
            out.insert_add(*m, l.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, l) in &other.terms {
            out.insert_add(*m, l.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TensorElement { terms: self.terms.iter().map(|(m, l)| (*m, l.neg())).collect() }
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement { terms: self.terms.iter().map(|(m, l)| (*m, l.scale(c))).collect() }
    }

    pub fn scale_laurent(&self, l: &LaurentABC) -> Self {
        let mut out = TensorElement::zero();
        for (m, x) in &self.terms {
            out.insert_add(*m, x.mul(l));
        }
        out
    }

    /// Product: the U parts multiply through the PBW rewriting engine and
    /// the Laurent parts multiply commutatively.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TensorElement::zero();
        for (m1, l1) in &self.terms {
            for (m2, l2) in &other.terms {
                let l12 = l1.mul(l2);
                let u = crate::uqsl2::mono_mul(*m1, *m2);
                for (m, c) in u.terms() {
                    out.insert_add(*m, l12.scale(c));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = TensorElement::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Inverse when the element is `c · k^s ⊗ m` with a single Laurent
    /// monomial and invertible coefficient.
    pub fn try_invert(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, l) = self.terms.iter().next().unwrap();
        if m.e != 0 || m.f != 0 || l.term_count() != 1 {
            return None;
        }
        let (am, c) = l.terms().next().unwrap();
        let inv = LaurentABC::monomial(am.inv(), c.checked_inv().ok()?);
        Some(TensorElement {
            terms: BTreeMap::from([(PbwMono::new(0, -m.k, 0), inv)]),
        })
    }

    /// Projection onto the homogeneous component of degree `n` of the
    /// grading induced from U (the Laurent part has degree 0).
    pub fn grade_project(&self, n: i64) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, l)| (*m, l.clone()))
                .collect(),
        }
    }

    pub fn support_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|m| m.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous(&self, n: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    /// Regroup as a map from Laurent monomials to elements of U.
    pub fn by_abc_monomial(&self) -> BTreeMap<AbcMono, UElement> {
        let mut out: BTreeMap<AbcMono, UElement> = BTreeMap::new();
        for (m, l) in &self.terms {
            for (am, c) in l.terms() {
                out.entry(*am).or_default().insert_add(*m, c.clone());
            }
        }
        out.retain(|_, u| !u.is_zero());
        out
    }

    /// Bind a, b, c to nonzero rationals, collapsing into U.
    pub fn specialize_abc(
        &self,
        a: &BigRational,
        b: &BigRational,
        c: &BigRational,
    ) -> Result<UElement, CoeffError> {
        let mut out = UElement::zero();
        for (m, l) in &self.terms {
            out.insert_add(*m, l.specialize_abc(a, b, c)?);
        }
        Ok(out)
    }

    /// The built-in named elements, in canonical form.
    pub fn named(name: TensorName) -> Self {
        let u = |g: UGen| UElement::named(g);
        match name {
            TensorName::ANat => TensorElement::tensor(&u(UGen::X), &LaurentABC::mono(1, 0, 0))
                .add(&TensorElement::tensor(&u(UGen::Y), &LaurentABC::mono(-1, 0, 0)))
                .add(&TensorElement::tensor(&u(UGen::NuZ), &LaurentABC::mono(0, 1, -1))),
            TensorName::BNat => TensorElement::tensor(&u(UGen::Y), &LaurentABC::mono(0, 1, 0))
                .add(&TensorElement::tensor(&u(UGen::Z), &LaurentABC::mono(0, -1, 0)))
                .add(&TensorElement::tensor(&u(UGen::NuX), &LaurentABC::mono(-1, 0, 1))),
            TensorName::CNat => TensorElement::tensor(&u(UGen::Z), &LaurentABC::mono(0, 0, 1))
                .add(&TensorElement::tensor(&u(UGen::X), &LaurentABC::mono(0, 0, -1)))
                .add(&TensorElement::tensor(&u(UGen::NuY), &LaurentABC::mono(1, -1, 0))),
            TensorName::AlphaNat => {
                TensorElement::tensor(&u(UGen::Lambda), &LaurentABC::sym_a()).add(
                    &TensorElement::from_laurent(&LaurentABC::sym_b().mul(&LaurentABC::sym_c())),
                )
            }
            TensorName::BetaNat => {
                TensorElement::tensor(&u(UGen::Lambda), &LaurentABC::sym_b()).add(
                    &TensorElement::from_laurent(&LaurentABC::sym_c().mul(&LaurentABC::sym_a())),
                )
            }
            TensorName::GammaNat => {
                TensorElement::tensor(&u(UGen::Lambda), &LaurentABC::sym_c()).add(
                    &TensorElement::from_laurent(&LaurentABC::sym_a().mul(&LaurentABC::sym_b())),
                )
            }
            TensorName::OmegaNat => {
                let lam = u(UGen::Lambda);
                let qp2 = RatQ::q_plus_q_inv().pow(2);
                TensorElement::from_laurent(&LaurentABC::scalar(qp2))
                    .sub(&TensorElement::from_laurent(&LaurentABC::sym_a().pow(2)))
                    .sub(&TensorElement::from_laurent(&LaurentABC::sym_b().pow(2)))
                    .sub(&TensorElement::from_laurent(&LaurentABC::sym_c().pow(2)))
                    .sub(&TensorElement::tensor(
                        &lam,
                        &LaurentABC::sym_a().mul(&LaurentABC::sym_b()).mul(&LaurentABC::sym_c()),
                    ))
                    .sub(&TensorElement::from_u(&lam.pow(2)))
            }
            // R = nu_z ⊗ bc^-1 - q^-1 nu_z y^-1 ⊗ a
            TensorName::R => {
                let nz = u(UGen::NuZ);
                TensorElement::tensor(&nz, &LaurentABC::mono(0, 1, -1)).sub(
                    &TensorElement::tensor(
                        &nz.mul(&UElement::k_pow(-1)).scale(&RatQ::q_pow(-1)),
                        &LaurentABC::mono(1, 0, 0),
                    ),
                )
            }
            // L = nu_x ⊗ a^-1 c - q^-1 y^-1 nu_x ⊗ b^-1
            TensorName::L => {
                let nx = u(UGen::NuX);
                TensorElement::tensor(&nx, &LaurentABC::mono(-1, 0, 1)).sub(
                    &TensorElement::tensor(
                        &UElement::k_pow(-1).mul(&nx).scale(&RatQ::q_pow(-1)),
                        &LaurentABC::mono(0, -1, 0),
                    ),
                )
            }
            TensorName::Theta => {
                TensorElement::tensor(&UElement::k_pow(-1), &LaurentABC::mono(1, 0, 0))
            }
            TensorName::Vartheta => {
                TensorElement::tensor(&UElement::k_pow(-1), &LaurentABC::mono(0, -1, 0))
            }
            TensorName::Lambda1 => TensorElement::from_u(&u(UGen::Lambda)),
        }
    }

    /// The order-2 automorphism determined by
    /// `e⊗1 ↦ f⊗a^-1 b^-1 c`, `f⊗1 ↦ e⊗abc^-1`, `k⊗1 ↦ k^-1⊗1`,
    /// `a ↦ b`, `b ↦ a`, `c ↦ c`, applied monomial-wise and renormalized.
    pub fn sigma_swap(&self) -> Self {
        let mut out = TensorElement::zero();
        for (m, l) in &self.terms {
            // e^r k^s f^t ↦ f^r k^-s e^t · (a^-1 b^-1 c)^r (a b c^-1)^t
            let r = m.e;
            let s = m.k;
            let t = m.f;
            // k^-s e^t = q^{-2st} e^t k^-s
            let right = UElement::monomial(
                PbwMono::new(t, -s, 0),
                RatQ::q_pow(-2 * s * t as i64),
            );
            let u_part = UElement::monomial(PbwMono::new(0, 0, r), RatQ::one()).mul(&right);
            let d = t as i64 - r as i64;
            let l_part = l.map_monomials(|am| AbcMono::new(am.b + d, am.a + d, am.c - d));
            for (um, uc) in u_part.terms() {
                out.insert_add(*um, l_part.scale(uc));
            }
        }
        out
    }

    /// The order-3 automorphism `x ↦ y ↦ z ↦ x`, `a ↦ b ↦ c ↦ a`, defined
    /// on U' ⊗ F[a^±1,b^±1,c^±1] only. Every U coefficient is expanded over
    /// the equitable basis; a negative y exponent anywhere is an error.
    pub fn rho_cycle(&self) -> Result<Self, TensorError> {
        thread_local! {
            static RHO_IMAGE_CACHE: RefCell<HashMap<EquitableMono, UElement>> =
                RefCell::new(HashMap::new());
        }
        let mut out = TensorElement::zero();
        for (am, u) in self.by_abc_monomial() {
            let exp = u.to_equitable();
            if !exp.all_y_nonnegative() {
                let bad = exp
                    .terms()
                    .find(|(m, _)| m.y < 0)
                    .map(|(m, _)| m.to_string())
                    .unwrap_or_default();
                return Err(TensorError::NotInUPrime(bad));
            }
            let image_mono = AbcMono::new(am.c, am.a, am.b);
            let l = LaurentABC::monomial(image_mono, RatQ::one());
            for (em, c) in exp.terms() {
                let img = RHO_IMAGE_CACHE.with(|cache| {
                    cache
                        .borrow_mut()
                        .entry(*em)
                        .or_insert_with(|| {
                            // x^h y^i z^j ↦ y^h z^i x^j, renormalized
                            UElement::k_pow(em.x as i64)
                                .mul(&UElement::named(UGen::Z).pow(em.y as u32))
                                .mul(&UElement::named(UGen::X).pow(em.z))
                        })
                        .clone()
                });
                for (um, uc) in img.terms() {
                    out.insert_add(*um, l.scale(&(uc * c)));
                }
            }
        }
        Ok(out)
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::add(self, rhs)
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::sub(self, rhs)
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        TensorElement::mul(self, rhs)
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement::neg(self)
    }
}

impl fmt::Display for TensorElement {
    /// Canonical expansion over (PBW monomial) x (abc monomial) pairs, in
    /// the stable order (PBW key, then abc key).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, l) in &self.terms {
            for (am, c) in l.terms() {
                let (neg, coeff) = c.sign_factor_string();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else {
                    write!(f, " {} ", if neg { "-" } else { "+" })?;
                }
                let mut parts = Vec::new();
                if !c.is_unit_magnitude() {
                    parts.push(coeff);
                }
                if !m.is_one() {
                    parts.push(m.to_string());
                }
                if !am.is_one() {
                    parts.push(am.to_string());
                }
                if parts.is_empty() {
                    write!(f, "1")?;
                } else {
                    write!(f, "{}", parts.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: TensorName) -> TensorElement {
        TensorElement::named(n)
    }

    #[test]
    fn scalars_are_central() {
        let a = TensorElement::from_laurent(&LaurentABC::var_a());
        let e = TensorElement::from_u(&UElement::gen_e());
        assert_eq!(a.mul(&e), e.mul(&a));
        assert_eq!(
            a.mul(&e),
            TensorElement::tensor(&UElement::gen_e(), &LaurentABC::var_a())
        );
    }

    #[test]
    fn theta_is_invertible() {
        let theta = named(TensorName::Theta);
        let inv = theta.try_invert().unwrap();
        assert!(theta.mul(&inv).is_one());
        assert_eq!(
            inv,
            TensorElement::tensor(&UElement::k_pow(1), &LaurentABC::mono(-1, 0, 0))
        );
    }

    #[test]
    fn r_and_theta_match_projections() {
        let a_nat = named(TensorName::ANat);
        assert_eq!(a_nat.grade_project(1), named(TensorName::R));
        let theta = named(TensorName::Theta);
        let expected0 = theta.add(&theta.try_invert().unwrap());
        assert_eq!(a_nat.grade_project(0), expected0);
        assert!(a_nat.grade_project(-1).is_zero());
    }

    #[test]
    fn q_commutation_of_components() {
        let r = named(TensorName::R);
        let vt = named(TensorName::Vartheta);
        assert_eq!(r.mul(&vt), vt.mul(&r).scale(&RatQ::q_pow(2)));
        let l = named(TensorName::L);
        let th = named(TensorName::Theta);
        assert_eq!(l.mul(&th), th.mul(&l).scale(&RatQ::q_pow(-2)));
    }

    #[test]
    fn sigma_is_an_involution_on_generators() {
        for el in [
            TensorElement::from_u(&UElement::gen_e()),
            TensorElement::from_u(&UElement::gen_f()),
            TensorElement::from_u(&UElement::k_pow(1)),
            TensorElement::from_u(&UElement::k_pow(-2)),
            named(TensorName::ANat),
            named(TensorName::CNat),
        ] {
            assert_eq!(el.sigma_swap().sigma_swap(), el);
        }
    }

    #[test]
    fn sigma_on_named_elements() {
        // y⊗1 ↦ y^-1⊗1 and Λ⊗1 is fixed
        let y = TensorElement::from_u(&UElement::k_pow(1));
        assert_eq!(y.sigma_swap(), TensorElement::from_u(&UElement::k_pow(-1)));
        let lam = named(TensorName::Lambda1);
        assert_eq!(lam.sigma_swap(), lam);
        assert_eq!(named(TensorName::ANat).sigma_swap(), named(TensorName::BNat));
        assert_eq!(named(TensorName::BNat).sigma_swap(), named(TensorName::ANat));
    }

    #[test]
    fn rho_rejects_y_inverse() {
        let yi = TensorElement::from_u(&UElement::k_pow(-1));
        assert!(matches!(yi.rho_cycle(), Err(TensorError::NotInUPrime(_))));
    }

    #[test]
    fn rho_cycles_named_elements() {
        assert_eq!(named(TensorName::ANat).rho_cycle().unwrap(), named(TensorName::BNat));
        assert_eq!(named(TensorName::BNat).rho_cycle().unwrap(), named(TensorName::CNat));
        assert_eq!(named(TensorName::CNat).rho_cycle().unwrap(), named(TensorName::ANat));
        let lam = named(TensorName::Lambda1);
        assert_eq!(lam.rho_cycle().unwrap(), lam);
    }
}
