//! The universal Askey-Wilson algebra.
//!
//! Generators A, B, C with central elements alpha, beta, gamma defined by
//!
//! ```text
//! A + (qBC - q^-1 CB)/(q^2 - q^-2) = alpha/(q + q^-1),
//! B + (qCA - q^-1 AC)/(q^2 - q^-2) = beta /(q + q^-1),
//! C + (qAB - q^-1 BA)/(q^2 - q^-2) = gamma/(q + q^-1).
//! ```
//!
//! Elements are kept in normal form over the basis
//! `A^i B^j C^k alpha^r beta^s gamma^t`. The reordering rules
//!
//! ```text
//! BA = q^2 AB - q(q - q^-1) gamma + q(q^2 - q^-2) C
//! CB = q^2 BC - q(q - q^-1) alpha + q(q^2 - q^-2) A
//! CA = q^-2 AC + q^-1(q - q^-1) beta - q^-1(q^2 - q^-2) B
//! ```
//!
//! each replace a descending adjacent pair by an ascending one plus
//! strictly shorter words, so rewriting terminates; confluence onto the
//! basis is asserted by randomized association checks in the suites.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::coeff::RatQ;
use crate::linalg::solve_sparse_ratq;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("expansion bound {0} too small for the requested element")]
    BoundTooSmall(u32),
}

/// A basis monomial `A^a B^b C^c alpha^alpha beta^beta gamma^gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DeltaMono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl DeltaMono {
    pub const ONE: DeltaMono = DeltaMono { a: 0, b: 0, c: 0, alpha: 0, beta: 0, gamma: 0 };

    pub fn new(a: u32, b: u32, c: u32, alpha: u32, beta: u32, gamma: u32) -> Self {
        DeltaMono { a, b, c, alpha, beta, gamma }
    }

    /// Total exponent sum.
    pub fn total(&self) -> u32 {
        self.a + self.b + self.c + self.alpha + self.beta + self.gamma
    }

    /// Filtration degree: deg A = deg B = deg C = 1, central letters 0.
    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    pub fn is_one(&self) -> bool {
        *self == DeltaMono::ONE
    }

    fn mul_central(&self, alpha: u32, beta: u32, gamma: u32) -> Self {
        DeltaMono {
            alpha: self.alpha + alpha,
            beta: self.beta + beta,
            gamma: self.gamma + gamma,
            ..*self
        }
    }
}

impl fmt::Display for DeltaMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("al", self.alpha),
            ("be", self.beta),
            ("ga", self.gamma),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                n => parts.push(format!("{}^{}", name, n)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Letters accepted in unnormalized input words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaGen {
    A,
    B,
    C,
    Alpha,
    Beta,
    Gamma,
    Omega,
}

/// An unnormalized expression over the algebra.
#[derive(Clone, Debug)]
pub enum DeltaWord {
    Gen(DeltaGen),
    Scalar(RatQ),
    Neg(Box<DeltaWord>),
    Sum(Vec<DeltaWord>),
    Prod(Vec<DeltaWord>),
    Pow(Box<DeltaWord>, u32),
}

impl DeltaWord {
    pub fn gen(g: DeltaGen) -> Self {
        DeltaWord::Gen(g)
    }

    pub fn normalize(&self) -> DeltaElement {
        match self {
            DeltaWord::Gen(g) => DeltaElement::named(*g),
            DeltaWord::Scalar(c) => DeltaElement::scalar(c.clone()),
            DeltaWord::Neg(w) => w.normalize().neg(),
            DeltaWord::Sum(ws) => {
                let mut acc = DeltaElement::zero();
                for w in ws {
                    acc = acc.add(&w.normalize());
                }
                acc
            }
            DeltaWord::Prod(ws) => {
                let mut acc = DeltaElement::one();
                for w in ws {
                    acc = acc.mul(&w.normalize());
                }
                acc
            }
            DeltaWord::Pow(w, n) => w.normalize().pow(*n),
        }
    }
}

/// An element in normal form: a finitely supported map from basis
/// monomials to Q(q); no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DeltaElement {
    terms: BTreeMap<DeltaMono, RatQ>,
}

impl DeltaElement {
    pub fn zero() -> Self {
        DeltaElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        DeltaElement::monomial(DeltaMono::ONE, RatQ::one())
    }

    pub fn scalar(c: RatQ) -> Self {
        DeltaElement::monomial(DeltaMono::ONE, c)
    }

    pub fn monomial(m: DeltaMono, c: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        DeltaElement { terms }
    }

    pub fn gen_a() -> Self {
        DeltaElement::monomial(DeltaMono::new(1, 0, 0, 0, 0, 0), RatQ::one())
    }

    pub fn gen_b() -> Self {
        DeltaElement::monomial(DeltaMono::new(0, 1, 0, 0, 0, 0), RatQ::one())
    }

    pub fn gen_c() -> Self {
        DeltaElement::monomial(DeltaMono::new(0, 0, 1, 0, 0, 0), RatQ::one())
    }

    pub fn gen_alpha() -> Self {
        DeltaElement::monomial(DeltaMono::new(0, 0, 0, 1, 0, 0), RatQ::one())
    }

    pub fn gen_beta() -> Self {
        DeltaElement::monomial(DeltaMono::new(0, 0, 0, 0, 1, 0), RatQ::one())
    }

    pub fn gen_gamma() -> Self {
        DeltaElement::monomial(DeltaMono::new(0, 0, 0, 0, 0, 1), RatQ::one())
    }

    /// The Casimir element
    /// `qABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - qA alpha - q^-1 B beta - qC gamma`.
    pub fn omega() -> Self {
        let mut t = BTreeMap::new();
        t.insert(DeltaMono::new(1, 1, 1, 0, 0, 0), RatQ::q());
        t.insert(DeltaMono::new(2, 0, 0, 0, 0, 0), RatQ::q_pow(2));
        t.insert(DeltaMono::new(0, 2, 0, 0, 0, 0), RatQ::q_pow(-2));
        t.insert(DeltaMono::new(0, 0, 2, 0, 0, 0), RatQ::q_pow(2));
        t.insert(DeltaMono::new(1, 0, 0, 1, 0, 0), -RatQ::q());
        t.insert(DeltaMono::new(0, 1, 0, 0, 1, 0), -RatQ::q_pow(-1));
        t.insert(DeltaMono::new(0, 0, 1, 0, 0, 1), -RatQ::q());
        DeltaElement { terms: t }
    }

    pub fn named(g: DeltaGen) -> Self {
        match g {
            DeltaGen::A => DeltaElement::gen_a(),
            DeltaGen::B => DeltaElement::gen_b(),
            DeltaGen::C => DeltaElement::gen_c(),
            DeltaGen::Alpha => DeltaElement::gen_alpha(),
            DeltaGen::Beta => DeltaElement::gen_beta(),
            DeltaGen::Gamma => DeltaElement::gen_gamma(),
            DeltaGen::Omega => DeltaElement::omega(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&DeltaMono::ONE).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeltaMono, &RatQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &DeltaMono) -> RatQ {
        self.terms.get(m).cloned().unwrap_or_else(RatQ::zero)
    }

    pub fn insert_add(&mut self, m: DeltaMono, c: RatQ) {
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
        DeltaElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return DeltaElement::zero();
        }
        DeltaElement { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.insert_add(*m, x * c);
        }
    }

    /// Product, reduced to the basis. Central letters commute freely; the
    /// noncommutative part reorders through the three rewriting rules.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = DeltaElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let nc = nc_mono_mul(m1.a, m1.b, m1.c, *m2);
                let coeff = c1 * c2;
                for (m, c) in &nc.terms {
                    out.insert_add(m.mul_central(m1.alpha, m1.beta, m1.gamma), c * &coeff);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = DeltaElement::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn try_invert(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !m.is_one() {
            return None;
        }
        Some(DeltaElement::scalar(c.checked_inv().ok()?))
    }

    /// Maximal filtration degree over the support (deg A=B=C=1, Omega
    /// would count 3; central letters 0). Zero for the zero element.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
}

thread_local! {
    static LEFT_B_CACHE: RefCell<HashMap<(u32, u32, u32), DeltaElement>> = RefCell::new(HashMap::new());
    static LEFT_C_CACHE: RefCell<HashMap<(u32, u32, u32), DeltaElement>> = RefCell::new(HashMap::new());
}

fn nc_mono(a: u32, b: u32, c: u32) -> DeltaMono {
    DeltaMono::new(a, b, c, 0, 0, 0)
}

/// `B * A^a B^b C^c` in normal form.
fn left_b(a: u32, b: u32, c: u32) -> DeltaElement {
    if a == 0 {
        return DeltaElement::monomial(nc_mono(0, b + 1, c), RatQ::one());
    }
    if let Some(hit) = LEFT_B_CACHE.with(|m| m.borrow().get(&(a, b, c)).cloned()) {
        return hit;
    }
    // BA = q^2 AB - q(q-q^-1) gamma + q(q^2-q^-2) C, applied to A * rest
    let rest = left_b(a - 1, b, c);
    let mut out = shift_a(&rest, 1).scale(&RatQ::q_pow(2));
    let tail = nc_mono(a - 1, b, c);
    out.insert_add(
        DeltaMono { gamma: 1, ..tail },
        -(RatQ::q() * RatQ::q_minus_q_inv()),
    );
    out.add_scaled(
        &left_c(a - 1, b, c),
        &(RatQ::q() * (RatQ::q_pow(2) - RatQ::q_pow(-2))),
    );
    LEFT_B_CACHE.with(|m| m.borrow_mut().insert((a, b, c), out.clone()));
    out
}

/// `C * A^a B^b C^c` in normal form.
fn left_c(a: u32, b: u32, c: u32) -> DeltaElement {
    if a == 0 && b == 0 {
        return DeltaElement::monomial(nc_mono(0, 0, c + 1), RatQ::one());
    }
    if let Some(hit) = LEFT_C_CACHE.with(|m| m.borrow().get(&(a, b, c)).cloned()) {
        return hit;
    }
    let out = if a > 0 {
        // CA = q^-2 AC + q^-1(q-q^-1) beta - q^-1(q^2-q^-2) B
        let rest = left_c(a - 1, b, c);
        let mut out = shift_a(&rest, 1).scale(&RatQ::q_pow(-2));
        let tail = nc_mono(a - 1, b, c);
        out.insert_add(
            DeltaMono { beta: 1, ..tail },
            RatQ::q_pow(-1) * RatQ::q_minus_q_inv(),
        );
        out.add_scaled(
            &left_b(a - 1, b, c),
            &-(RatQ::q_pow(-1) * (RatQ::q_pow(2) - RatQ::q_pow(-2))),
        );
        out
    } else {
        // CB = q^2 BC - q(q-q^-1) alpha + q(q^2-q^-2) A
        let rest = left_c(0, b - 1, c);
        let mut out = left_b_elem(&rest).scale(&RatQ::q_pow(2));
        let tail = nc_mono(0, b - 1, c);
        out.insert_add(
            DeltaMono { alpha: 1, ..tail },
            -(RatQ::q() * RatQ::q_minus_q_inv()),
        );
        out.insert_add(nc_mono(1, b - 1, c), RatQ::q() * (RatQ::q_pow(2) - RatQ::q_pow(-2)));
        out
    };
    LEFT_C_CACHE.with(|m| m.borrow_mut().insert((a, b, c), out.clone()));
    out
}

fn shift_a(u: &DeltaElement, n: u32) -> DeltaElement {
    DeltaElement {
        terms: u
            .terms
            .iter()
            .map(|(m, c)| (DeltaMono { a: m.a + n, ..*m }, c.clone()))
            .collect(),
    }
}

fn left_b_elem(u: &DeltaElement) -> DeltaElement {
    let mut out = DeltaElement::zero();
    for (m, c) in &u.terms {
        for (nm, ncoef) in &left_b(m.a, m.b, m.c).terms {
            out.insert_add(nm.mul_central(m.alpha, m.beta, m.gamma), ncoef * c);
        }
    }
    out
}

fn left_c_elem(u: &DeltaElement) -> DeltaElement {
    let mut out = DeltaElement::zero();
    for (m, c) in &u.terms {
        for (nm, ncoef) in &left_c(m.a, m.b, m.c).terms {
            out.insert_add(nm.mul_central(m.alpha, m.beta, m.gamma), ncoef * c);
        }
    }
    out
}

/// Normal form of `A^a B^b C^c * m2`.
fn nc_mono_mul(a: u32, b: u32, c: u32, m2: DeltaMono) -> DeltaElement {
    let mut acc = DeltaElement::monomial(m2, RatQ::one());
    for _ in 0..c {
        acc = left_c_elem(&acc);
    }
    for _ in 0..b {
        acc = left_b_elem(&acc);
    }
    if a > 0 {
        acc = shift_a(&acc, a);
    }
    acc
}

impl Add for &DeltaElement {
    type Output = DeltaElement;
    fn add(self, rhs: &DeltaElement) -> DeltaElement {
        DeltaElement::add(self, rhs)
    }
}

impl Sub for &DeltaElement {
    type Output = DeltaElement;
    fn sub(self, rhs: &DeltaElement) -> DeltaElement {
        DeltaElement::sub(self, rhs)
    }
}

impl Mul for &DeltaElement {
    type Output = DeltaElement;
    fn mul(self, rhs: &DeltaElement) -> DeltaElement {
        DeltaElement::mul(self, rhs)
    }
}

impl Neg for &DeltaElement {
    type Output = DeltaElement;
    fn neg(self) -> DeltaElement {
        DeltaElement::neg(self)
    }
}

impl fmt::Display for DeltaElement {
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

/// Generators of the modular group action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PslGen {
    Rho,
    Sigma,
}

/// The order-3 automorphism `A ↦ B ↦ C ↦ A`, `alpha ↦ beta ↦ gamma ↦ alpha`.
pub fn rho(d: &DeltaElement) -> DeltaElement {
    let mut out = DeltaElement::zero();
    for (m, c) in d.terms() {
        // A^i B^j C^k ↦ B^i C^j A^k, centrals cycle
        let nc = DeltaElement::gen_b()
            .pow(m.a)
            .mul(&DeltaElement::gen_c().pow(m.b))
            .mul(&DeltaElement::gen_a().pow(m.c));
        for (nm, ncoef) in nc.terms() {
            out.insert_add(nm.mul_central(m.gamma, m.alpha, m.beta), ncoef * c);
        }
    }
    out
}

/// The image of C under the order-2 automorphism: forced by the defining
/// relation for gamma once A and B swap and gamma is fixed:
/// `sigma(C) = gamma/(q+q^-1) - (qBA - q^-1 AB)/(q^2 - q^-2)`.
pub fn sigma_c_image() -> DeltaElement {
    let ab = DeltaElement::gen_a().mul(&DeltaElement::gen_b());
    let ba = DeltaElement::gen_b().mul(&DeltaElement::gen_a());
    let denom = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
    DeltaElement::gen_gamma()
        .scale(&RatQ::q_plus_q_inv().inv())
        .sub(&ba.scale(&RatQ::q()).sub(&ab.scale(&RatQ::q_pow(-1))).scale(&denom))
}

/// The order-2 automorphism `A ↔ B`, `alpha ↔ beta`, gamma fixed.
pub fn sigma(d: &DeltaElement) -> DeltaElement {
    let sc = sigma_c_image();
    let mut out = DeltaElement::zero();
    for (m, c) in d.terms() {
        let nc = DeltaElement::gen_b()
            .pow(m.a)
            .mul(&DeltaElement::gen_a().pow(m.b))
            .mul(&sc.pow(m.c));
        for (nm, ncoef) in nc.terms() {
            out.insert_add(nm.mul_central(m.beta, m.alpha, m.gamma), ncoef * c);
        }
    }
    out
}

/// Apply a word in the modular group generators, leftmost first.
pub fn psl2_act(word: &[PslGen], d: &DeltaElement) -> DeltaElement {
    let mut acc = d.clone();
    for g in word {
        acc = match g {
            PslGen::Rho => rho(&acc),
            PslGen::Sigma => sigma(&acc),
        };
    }
    acc
}

/// A monomial of the alternative basis
/// `A^i B^j C^k Omega^l alpha^r beta^s gamma^t` with `ijk = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaMono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub omega: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl OmegaMono {
    /// Expand into the primary basis.
    pub fn expand(&self) -> DeltaElement {
        let head = DeltaElement::monomial(
            DeltaMono::new(self.a, self.b, self.c, self.alpha, self.beta, self.gamma),
            RatQ::one(),
        );
        head.mul(&DeltaElement::omega().pow(self.omega))
    }
}

impl fmt::Display for OmegaMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("Om", self.omega),
            ("al", self.alpha),
            ("be", self.beta),
            ("ga", self.gamma),
        ] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                n => parts.push(format!("{}^{}", name, n)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Enumerate the alternative-basis monomials considered at a given bound:
/// `ijk = 0` and `i+j+k+3l+r+s+t <= bound`. (The filtration alone leaves
/// the central exponents unbounded, so they participate in the bound.)
fn omega_monomials(bound: u32) -> Vec<OmegaMono> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for a in 0..=total {
            for b in 0..=(total - a) {
                for c in 0..=(total - a - b) {
                    if a != 0 && b != 0 && c != 0 {
                        continue;
                    }
                    let rest = total - a - b - c;
                    for omega in 0..=(rest / 3) {
                        let rest2 = rest - 3 * omega;
                        for alpha in 0..=rest2 {
                            for beta in 0..=(rest2 - alpha) {
                                let gamma = rest2 - alpha - beta;
                                out.push(OmegaMono { a, b, c, omega, alpha, beta, gamma });
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Expansion of an element over the alternative basis with the Casimir
/// element adjoined, computed by an exact linear solve against all basis
/// monomials within the bound. Callers retry with a larger bound on
/// `BoundTooSmall`; the returned expansion is verified by re-expansion.
pub fn to_omega_basis(
    d: &DeltaElement,
    bound: u32,
) -> Result<BTreeMap<OmegaMono, RatQ>, DeltaError> {
    let monos = omega_monomials(bound);
    let mut row_index: BTreeMap<DeltaMono, usize> = BTreeMap::new();
    let index_of = |m: DeltaMono, rows: &mut BTreeMap<DeltaMono, usize>| {
        let next = rows.len();
        *rows.entry(m).or_insert(next)
    };
    let mut columns = Vec::with_capacity(monos.len());
    let expansions: Vec<DeltaElement> = monos.iter().map(|w| w.expand()).collect();
    for exp in &expansions {
        let mut col = BTreeMap::new();
        for (m, c) in exp.terms() {
            col.insert(index_of(*m, &mut row_index), c.clone());
        }
        columns.push(col);
    }
    let mut rhs = BTreeMap::new();
    for (m, c) in d.terms() {
        rhs.insert(index_of(*m, &mut row_index), c.clone());
    }
    let solution = solve_sparse_ratq(&columns, &rhs).ok_or(DeltaError::BoundTooSmall(bound))?;

    let mut out = BTreeMap::new();
    let mut check = DeltaElement::zero();
    for ((w, c), exp) in monos.into_iter().zip(solution).zip(&expansions) {
        if !c.is_zero() {
            check.add_scaled(exp, &c);
            out.insert(w, c);
        }
    }
    assert_eq!(&check, d, "alternative-basis expansion must reproduce the input");
    Ok(out)
}

/// `to_omega_basis` with iterative deepening starting from the input's
/// own weight.
pub fn to_omega_basis_auto(d: &DeltaElement) -> Result<BTreeMap<OmegaMono, RatQ>, DeltaError> {
    let start = d
        .terms()
        .map(|(m, _)| m.total())
        .max()
        .unwrap_or(0);
    let mut bound = start;
    loop {
        match to_omega_basis(d, bound) {
            Ok(out) => return Ok(out),
            Err(_) if bound < start + 9 => bound += 3,
            Err(e) => return Err(e),
        }
    }
}

/// Rebuild an element from an alternative-basis expansion.
pub fn from_omega_basis(exp: &BTreeMap<OmegaMono, RatQ>) -> DeltaElement {
    let mut out = DeltaElement::zero();
    for (w, c) in exp {
        out.add_scaled(&w.expand(), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm() -> RatQ {
        RatQ::q_minus_q_inv()
    }

    #[test]
    fn reordering_rules() {
        let a = DeltaElement::gen_a();
        let b = DeltaElement::gen_b();
        let c = DeltaElement::gen_c();
        let q2m2 = RatQ::q_pow(2) - RatQ::q_pow(-2);

        // BA = q^2 AB - q(q-q^-1) gamma + q(q^2-q^-2) C
        let ba = b.mul(&a);
        let expect = a
            .mul(&b)
            .scale(&RatQ::q_pow(2))
            .sub(&DeltaElement::gen_gamma().scale(&(RatQ::q() * qm())))
            .add(&c.scale(&(RatQ::q() * &q2m2)));
        assert_eq!(ba, expect);

        // CB = q^2 BC - q(q-q^-1) alpha + q(q^2-q^-2) A
        let cb = c.mul(&b);
        let expect = b
            .mul(&c)
            .scale(&RatQ::q_pow(2))
            .sub(&DeltaElement::gen_alpha().scale(&(RatQ::q() * qm())))
            .add(&a.scale(&(RatQ::q() * &q2m2)));
        assert_eq!(cb, expect);

        // CA = q^-2 AC + q^-1(q-q^-1) beta - q^-1(q^2-q^-2) B
        let ca = c.mul(&a);
        let expect = a
            .mul(&c)
            .scale(&RatQ::q_pow(-2))
            .add(&DeltaElement::gen_beta().scale(&(RatQ::q_pow(-1) * qm())))
            .sub(&b.scale(&(RatQ::q_pow(-1) * &q2m2)));
        assert_eq!(ca, expect);
    }

    #[test]
    fn defining_relations_normalize_to_central_letters() {
        // (q+q^-1)(A + (qBC - q^-1 CB)/(q^2-q^-2)) = alpha, and cyclic
        let a = DeltaElement::gen_a();
        let b = DeltaElement::gen_b();
        let c = DeltaElement::gen_c();
        let denom = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
        let comb = |x: &DeltaElement, u: &DeltaElement, v: &DeltaElement| {
            x.add(
                &u.mul(v)
                    .scale(&RatQ::q())
                    .sub(&v.mul(u).scale(&RatQ::q_pow(-1)))
                    .scale(&denom),
            )
            .scale(&RatQ::q_plus_q_inv())
        };
        assert_eq!(comb(&a, &b, &c), DeltaElement::gen_alpha());
        assert_eq!(comb(&b, &c, &a), DeltaElement::gen_beta());
        assert_eq!(comb(&c, &a, &b), DeltaElement::gen_gamma());
    }

    #[test]
    fn central_letters_commute() {
        let a = DeltaElement::gen_a();
        let al = DeltaElement::gen_alpha();
        assert_eq!(al.mul(&a), a.mul(&al));
        assert_eq!(a.mul(&DeltaElement::one()), a);
    }

    #[test]
    fn casimir_is_central() {
        let om = DeltaElement::omega();
        for g in [DeltaElement::gen_a(), DeltaElement::gen_b(), DeltaElement::gen_c()] {
            assert!(om.commutator(&g).is_zero(), "Omega must commute with generators");
        }
    }

    #[test]
    fn modular_action_on_generators() {
        assert_eq!(rho(&DeltaElement::gen_a()), DeltaElement::gen_b());
        assert_eq!(rho(&DeltaElement::gen_b()), DeltaElement::gen_c());
        assert_eq!(rho(&DeltaElement::gen_c()), DeltaElement::gen_a());
        assert_eq!(sigma(&DeltaElement::gen_a()), DeltaElement::gen_b());
        assert_eq!(sigma(&DeltaElement::gen_gamma()), DeltaElement::gen_gamma());

        // sigma^2 = 1 on C (whose image is not a single monomial)
        let c = DeltaElement::gen_c();
        assert_eq!(sigma(&sigma(&c)), c);
        // rho^3 = 1 on a mixed monomial
        let m = DeltaElement::monomial(DeltaMono::new(1, 2, 0, 1, 0, 0), RatQ::one());
        assert_eq!(rho(&rho(&rho(&m))), m);
    }

    #[test]
    fn sigma_central_images_are_theorems() {
        // sigma maps the alpha-relation combination
        // (q+q^-1)(A + (qBC - q^-1 CB)/(q^2-q^-2)) to
        // (q+q^-1)(B + (qA sigma(C) - q^-1 sigma(C) A)/(q^2-q^-2)); normalizing
        // the image must produce beta, so sigma(alpha) = beta is a theorem.
        let a = DeltaElement::gen_a();
        let sc = sigma_c_image();
        let denom = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inv();
        let lhs = DeltaElement::gen_b()
            .add(
                &a.mul(&sc)
                    .scale(&RatQ::q())
                    .sub(&sc.mul(&a).scale(&RatQ::q_pow(-1)))
                    .scale(&denom),
            )
            .scale(&RatQ::q_plus_q_inv());
        assert_eq!(lhs, DeltaElement::gen_beta());
        assert_eq!(sigma(&DeltaElement::gen_alpha()), DeltaElement::gen_beta());
        assert_eq!(sigma(&DeltaElement::gen_beta()), DeltaElement::gen_alpha());
    }

    #[test]
    fn casimir_fixed_by_modular_group() {
        let om = DeltaElement::omega();
        assert_eq!(rho(&om), om);
        assert_eq!(sigma(&om), om);
    }

    #[test]
    fn omega_basis_round_trips() {
        // A is already an alternative-basis monomial
        let out = to_omega_basis(&DeltaElement::gen_a(), 2).unwrap();
        assert_eq!(out.len(), 1);
        let (w, c) = out.iter().next().unwrap();
        assert_eq!((w.a, w.omega), (1, 0));
        assert!(c.is_one());

        // the expansion of Omega maps back to the single monomial Omega
        let out = to_omega_basis(&DeltaElement::omega(), 3).unwrap();
        assert_eq!(out.len(), 1);
        let (w, c) = out.iter().next().unwrap();
        assert_eq!(w.omega, 1);
        assert!(c.is_one());
        assert_eq!(from_omega_basis(&out), DeltaElement::omega());
    }

    #[test]
    fn abc_in_omega_basis() {
        // ABC = q^-1 Omega - q A^2 - q^-3 B^2 - q C^2 + A alpha + q^-2 B beta + C gamma
        let abc = DeltaElement::monomial(DeltaMono::new(1, 1, 1, 0, 0, 0), RatQ::one());
        let out = to_omega_basis(&abc, 3).unwrap();
        let get = |a, b, c, om, al, be, ga| {
            out.get(&OmegaMono { a, b, c, omega: om, alpha: al, beta: be, gamma: ga })
                .cloned()
                .unwrap_or_else(RatQ::zero)
        };
        assert_eq!(get(0, 0, 0, 1, 0, 0, 0), RatQ::q_pow(-1));
        assert_eq!(get(2, 0, 0, 0, 0, 0, 0), -RatQ::q());
        assert_eq!(get(0, 2, 0, 0, 0, 0, 0), -RatQ::q_pow(-3));
        assert_eq!(get(0, 0, 2, 0, 0, 0, 0), -RatQ::q());
        assert_eq!(get(1, 0, 0, 0, 1, 0, 0), RatQ::one());
        assert_eq!(get(0, 1, 0, 0, 0, 1, 0), RatQ::q_pow(-2));
        assert_eq!(get(0, 0, 1, 0, 0, 0, 1), RatQ::one());
        assert_eq!(out.len(), 7);
    }

    #[test]
    fn bound_too_small_is_reported() {
        let abc = DeltaElement::monomial(DeltaMono::new(1, 1, 1, 0, 0, 0), RatQ::one());
        assert_eq!(to_omega_basis(&abc, 2), Err(DeltaError::BoundTooSmall(2)));
        assert!(to_omega_basis_auto(&abc).is_ok());
    }
}
