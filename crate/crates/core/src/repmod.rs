//! Finite-dimensional modules L(n, eps) realized as exact rational
//! matrices at a rational value of q.
//!
//! These modules act as an independent numeric oracle for the symbolic
//! engine: every registry identity, evaluated through a module, must
//! produce equal matrices. Matrices are exact rationals throughout, so
//! the oracle introduces no tolerance of its own.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{check_q_binding, CoeffError};
use crate::identities::Identity;
use crate::uqsl2::UElement;

/// A small dense matrix over the exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        QMatrix { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        QMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        QMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QMatrix { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = QMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QMatrix::identity(self.n);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    /// True when the matrix is `c * I`.
    pub fn is_scalar(&self, c: &BigRational) -> bool {
        self == &QMatrix::identity(self.n).scale(c)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The (n+1)-dimensional module with highest-weight sign eps at a fixed
/// rational q.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub n: u32,
    pub eps: i8,
    pub q: BigRational,
    mat_e: QMatrix,
    mat_f: QMatrix,
    mat_k: QMatrix,
    mat_k_inv: QMatrix,
}

fn pow_q(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// `[m]_q = (q^m - q^-m)/(q - q^-1)` at a rational point.
fn q_int_at(m: i64, q: &BigRational) -> BigRational {
    (pow_q(q, m) - pow_q(q, -m)) / (q - q.recip())
}

/// Build the module from its defining action:
/// `k v_i = eps q^{n-2i} v_i`, `f v_i = [i+1]_q v_{i+1}`,
/// `e v_i = eps [n-i+1]_q v_{i-1}`.
pub fn build_module(n: u32, eps: i8, q: &BigRational) -> Result<ModuleRep, CoeffError> {
    assert!(eps == 1 || eps == -1, "eps must be +1 or -1");
    check_q_binding(q)?;
    let dim = n as usize + 1;
    let eps_r = BigRational::from_integer(BigInt::from(eps));
    let mut mat_k = QMatrix::zeros(dim);
    let mut mat_k_inv = QMatrix::zeros(dim);
    let mut mat_e = QMatrix::zeros(dim);
    let mut mat_f = QMatrix::zeros(dim);
    for i in 0..dim {
        let w = pow_q(q, n as i64 - 2 * i as i64);
        mat_k.set(i, i, &eps_r * &w);
        mat_k_inv.set(i, i, (&eps_r * &w).recip());
        if i + 1 < dim {
            // f v_i = [i+1] v_{i+1}
            mat_f.set(i + 1, i, q_int_at(i as i64 + 1, q));
        }
        if i >= 1 {
            // e v_i = eps [n-i+1] v_{i-1}
            mat_e.set(i - 1, i, &eps_r * q_int_at(n as i64 - i as i64 + 1, q));
        }
    }
    Ok(ModuleRep { n, eps, q: q.clone(), mat_e, mat_f, mat_k, mat_k_inv })
}

impl ModuleRep {
    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    pub fn mat_e(&self) -> &QMatrix {
        &self.mat_e
    }

    pub fn mat_f(&self) -> &QMatrix {
        &self.mat_f
    }

    pub fn mat_k(&self) -> &QMatrix {
        &self.mat_k
    }

    pub fn mat_k_inv(&self) -> &QMatrix {
        &self.mat_k_inv
    }

    /// `k^s` as a matrix for any integer s.
    fn k_power(&self, s: i64) -> QMatrix {
        if s >= 0 {
            self.mat_k.pow(s as u32)
        } else {
            self.mat_k_inv.pow((-s) as u32)
        }
    }

    /// Evaluate an element of U on this module. Coefficients are
    /// specialized at the module's q; a vanishing denominator there is a
    /// pole error.
    pub fn represent(&self, u: &UElement) -> Result<QMatrix, CoeffError> {
        let mut out = QMatrix::zeros(self.dim());
        for (m, c) in u.terms() {
            let scalar = c.specialize(&self.q)?;
            let mat = self
                .mat_e
                .pow(m.e)
                .mul(&self.k_power(m.k))
                .mul(&self.mat_f.pow(m.f));
            out = out.add(&mat.scale(&scalar));
        }
        Ok(out)
    }

    /// The scalar by which the normalized Casimir element acts:
    /// `eps (q^{n+1} + q^{-n-1})`.
    pub fn casimir_scalar(&self) -> BigRational {
        let e = BigRational::from_integer(BigInt::from(self.eps));
        e * (pow_q(&self.q, self.n as i64 + 1) + pow_q(&self.q, -(self.n as i64) - 1))
    }

    /// Check the defining relations as matrix identities.
    pub fn relations_hold(&self) -> bool {
        let id = QMatrix::identity(self.dim());
        if self.mat_k.mul(&self.mat_k_inv) != id {
            return false;
        }
        let q2 = pow_q(&self.q, 2);
        if self.mat_k.mul(&self.mat_e) != self.mat_e.mul(&self.mat_k).scale(&q2) {
            return false;
        }
        if self.mat_k.mul(&self.mat_f) != self.mat_f.mul(&self.mat_k).scale(&q2.recip()) {
            return false;
        }
        let comm = self.mat_e.mul(&self.mat_f).sub(&self.mat_f.mul(&self.mat_e));
        let rhs = self
            .mat_k
            .sub(&self.mat_k_inv)
            .scale(&(&self.q - self.q.recip()).recip());
        comm == rhs
    }

    /// Evaluate both sides of a registry identity; equal matrices pass.
    pub fn numeric_identity_check(&self, ident: &Identity) -> Result<bool, CoeffError> {
        let lhs = self.represent(&ident.lhs)?;
        let rhs = self.represent(&ident.rhs)?;
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatQ;
    use crate::uqsl2::{PbwMono, UGen};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn weight_diagonal() {
        let m = build_module(1, 1, &rat(2, 1)).unwrap();
        assert_eq!(m.mat_k().get(0, 0), &rat(2, 1));
        assert_eq!(m.mat_k().get(1, 1), &rat(1, 2));
        assert!(m.relations_hold());
    }

    #[test]
    fn one_dimensional_module() {
        let m = build_module(0, -1, &rat(3, 1)).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.mat_k().get(0, 0), &rat(-1, 1));
        assert!(m.mat_e().is_zero());
        assert!(m.mat_f().is_zero());
    }

    #[test]
    fn forbidden_q() {
        assert_eq!(
            build_module(2, 1, &rat(1, 1)).unwrap_err(),
            CoeffError::ForbiddenSpecialization
        );
        assert_eq!(
            build_module(2, 1, &rat(0, 1)).unwrap_err(),
            CoeffError::ForbiddenSpecialization
        );
    }

    #[test]
    fn casimir_acts_as_scalar() {
        // on L(1, +1) at q=2 the normalized Casimir acts as 17/4
        let m = build_module(1, 1, &rat(2, 1)).unwrap();
        let lam = m.represent(&UElement::named(UGen::Lambda)).unwrap();
        assert_eq!(m.casimir_scalar(), rat(17, 4));
        assert!(lam.is_scalar(&rat(17, 4)));
    }

    #[test]
    fn kk_inverse_is_identity() {
        let m = build_module(3, -1, &rat(3, 2)).unwrap();
        let u = UElement::k_pow(1).mul(&UElement::k_pow(-1));
        assert_eq!(m.represent(&u).unwrap(), QMatrix::identity(4));
    }

    #[test]
    fn representation_is_multiplicative() {
        let m = build_module(2, 1, &rat(2, 1)).unwrap();
        let u = UElement::named(UGen::X);
        let v = UElement::named(UGen::NuY);
        let lhs = m.represent(&u.mul(&v)).unwrap();
        let rhs = m.represent(&u).unwrap().mul(&m.represent(&v).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pole_is_reported() {
        let m = build_module(1, 1, &rat(2, 1)).unwrap();
        let u = UElement::monomial(
            PbwMono::ONE,
            RatQ::one() / (RatQ::q_pow(2) - RatQ::from_int(4)),
        );
        assert_eq!(m.represent(&u).unwrap_err(), CoeffError::PoleAtSpecialization);
    }
}
