//! Change of basis between the PBW basis `e^r k^s f^t` and the equitable
//! monomial basis `x^h y^i z^j` (h, j >= 0, i in Z) of U.
//!
//! The conversion uses triangular elimination along the rank filtration:
//! the monomial `x^h y^i z^j` equals `(-1)^h (q-q^-1)^{h+j} q^{-h^2}
//! e^h k^{i-h} f^j` plus terms of strictly smaller rank `e + f`, so
//! repeatedly stripping a maximal-rank PBW term determines the expansion
//! uniquely and terminates.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::coeff::RatQ;

use super::UElement;

/// An equitable basis monomial `x^x y^y z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquitableMono {
    pub x: u32,
    pub y: i64,
    pub z: u32,
}

impl EquitableMono {
    pub const ONE: EquitableMono = EquitableMono { x: 0, y: 0, z: 0 };

    pub fn new(x: u32, y: i64, z: u32) -> Self {
        EquitableMono { x, y, z }
    }
}

impl fmt::Display for EquitableMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.x {
            0 => {}
            1 => parts.push("x".to_string()),
            n => parts.push(format!("x^{}", n)),
        }
        match self.y {
            0 => {}
            1 => parts.push("y".to_string()),
            n => parts.push(format!("y^{}", n)),
        }
        match self.z {
            0 => {}
            1 => parts.push("z".to_string()),
            n => parts.push(format!("z^{}", n)),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finitely supported expansion over the equitable monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EquitableExpansion {
    terms: BTreeMap<EquitableMono, RatQ>,
}

impl EquitableExpansion {
    pub fn zero() -> Self {
        EquitableExpansion { terms: BTreeMap::new() }
    }

    pub fn monomial(m: EquitableMono, c: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        EquitableExpansion { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EquitableMono, &RatQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &EquitableMono) -> RatQ {
        self.terms.get(m).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn insert_add(&mut self, m: EquitableMono, c: RatQ) {
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

    /// All `y` exponents nonnegative, i.e. membership in the expansion
    /// lattice of the subalgebra generated by x, y, z.
    pub fn all_y_nonnegative(&self) -> bool {
        self.terms.keys().all(|m| m.y >= 0)
    }
}

impl fmt::Display for EquitableExpansion {
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
            if *m == EquitableMono::ONE {
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

thread_local! {
    static MONO_ELEMENT_CACHE: RefCell<HashMap<EquitableMono, UElement>> =
        RefCell::new(HashMap::new());
}

/// PBW normal form of `x^h y^i z^j`, memoized: the triangular elimination
/// revisits the same monomials constantly.
fn equitable_mono_element(m: EquitableMono) -> UElement {
    if let Some(hit) = MONO_ELEMENT_CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return hit;
    }
    let el = if m.x > 0 {
        UElement::named(super::UGen::X)
            .mul(&equitable_mono_element(EquitableMono::new(m.x - 1, m.y, m.z)))
    } else if m.y != 0 {
        let step = if m.y > 0 { 1 } else { -1 };
        UElement::k_pow(step)
            .mul(&equitable_mono_element(EquitableMono::new(0, m.y - step, m.z)))
    } else if m.z > 0 {
        UElement::named(super::UGen::Z)
            .mul(&equitable_mono_element(EquitableMono::new(0, 0, m.z - 1)))
    } else {
        UElement::one()
    };
    MONO_ELEMENT_CACHE.with(|c| c.borrow_mut().insert(m, el.clone()));
    el
}

/// Leading PBW coefficient of `x^h y^i z^j`, namely the coefficient of
/// `e^h k^{i-h} f^j`: `(-1)^h (q-q^-1)^{h+j} q^{-h^2}`.
fn leading_coeff(h: u32, j: u32) -> RatQ {
    let sign = if h % 2 == 0 { RatQ::one() } else { -RatQ::one() };
    let h64 = h as i64;
    sign * RatQ::q_minus_q_inv().pow((h + j) as i64) * RatQ::q_pow(-(h64 * h64))
}

impl UElement {
    /// Expand over the equitable monomial basis `x^h y^i z^j`.
    /// Inverse to `from_equitable`; the expansion is unique.
    pub fn to_equitable(&self) -> EquitableExpansion {
        let mut rest = self.clone();
        let mut out = EquitableExpansion::zero();
        while !rest.is_zero() {
            let (&m, _) = rest
                .terms()
                .max_by_key(|(m, _)| (m.rank(), **m))
                .expect("nonzero element has a maximal term");
            let c = rest.coeff(&m);
            let coef = c / leading_coeff(m.e, m.f);
            let em = EquitableMono::new(m.e, m.k + m.e as i64, m.f);
            out.insert_add(em, coef.clone());
            rest = rest.sub(&equitable_mono_element(em).scale(&coef));
            debug_assert!(rest.coeff(&m).is_zero(), "leading term must cancel");
        }
        out
    }

    /// Multiply out an equitable expansion back to PBW normal form.
    pub fn from_equitable(exp: &EquitableExpansion) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in exp.terms() {
            out.add_scaled(&equitable_mono_element(*m), c);
        }
        out
    }

    /// Membership in the subalgebra generated by x, y, z (without y^-1):
    /// every equitable monomial in the expansion has `y` exponent >= 0.
    pub fn in_u_prime(&self) -> bool {
        self.to_equitable().all_y_nonnegative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqsl2::UGen;

    #[test]
    fn basis_monomials_round_trip() {
        let y = UElement::k_pow(1);
        let exp = y.to_equitable();
        assert_eq!(exp.term_count(), 1);
        assert!(exp.coeff(&EquitableMono::new(0, 1, 0)).is_one());

        let x = UElement::named(UGen::X);
        let exp = x.to_equitable();
        assert_eq!(exp.term_count(), 1);
        assert!(exp.coeff(&EquitableMono::new(1, 0, 0)).is_one());
        assert_eq!(UElement::from_equitable(&exp), x);
    }

    #[test]
    fn e_expands_as_scaled_one_minus_xy() {
        // e = q/(q - q^-1) (1 - xy)
        let c = RatQ::q() / RatQ::q_minus_q_inv();
        let exp = UElement::gen_e().to_equitable();
        assert_eq!(exp.term_count(), 2);
        assert_eq!(exp.coeff(&EquitableMono::ONE), c);
        assert_eq!(exp.coeff(&EquitableMono::new(1, 1, 0)), -c);
    }

    #[test]
    fn empty_expansion_is_zero() {
        assert!(UElement::from_equitable(&EquitableExpansion::zero()).is_zero());
    }

    #[test]
    fn u_prime_membership() {
        assert!(UElement::k_pow(1).in_u_prime());
        assert!(!UElement::k_pow(-1).in_u_prime());
        assert!(UElement::named(UGen::NuY).in_u_prime());
        assert!(UElement::named(UGen::NuX).in_u_prime());
        assert!(UElement::named(UGen::NuZ).in_u_prime());
        assert!(UElement::named(UGen::Lambda).in_u_prime());
    }
}
