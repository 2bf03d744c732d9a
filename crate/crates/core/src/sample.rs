//! Seeded random element generators for the property suites.
//!
//! Everything here is deterministic given the seed, so suite reports are
//! reproducible byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{check_q_binding, AbcMono, LaurentABC, RatQ};
use crate::delta::{DeltaElement, DeltaMono};
use crate::tensor::TensorElement;
use crate::uqsl2::{EquitableExpansion, EquitableMono, PbwMono, UElement, UGen};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small scalar: an integer in [-3, 3] times a power of q in [-2, 2],
/// never zero.
pub fn rand_ratq(rng: &mut impl Rng) -> RatQ {
    let mut n = 0i64;
    while n == 0 {
        n = rng.gen_range(-3..=3);
    }
    RatQ::from_int(n) * RatQ::q_pow(rng.gen_range(-2..=2))
}

pub fn rand_pbw_mono(rng: &mut impl Rng, max_ef: u32, max_k: i64) -> PbwMono {
    PbwMono::new(
        rng.gen_range(0..=max_ef),
        rng.gen_range(-max_k..=max_k),
        rng.gen_range(0..=max_ef),
    )
}

pub fn rand_u_element(rng: &mut impl Rng, max_terms: usize, max_ef: u32, max_k: i64) -> UElement {
    let mut out = UElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.insert_add(rand_pbw_mono(rng, max_ef, max_k), rand_ratq(rng));
    }
    out
}

/// A random homogeneous element of the given grading degree.
pub fn rand_homogeneous_u(rng: &mut impl Rng, degree: i64, max_terms: usize) -> UElement {
    let mut out = UElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let t = rng.gen_range(0..=2u32);
        let e = t as i64 + degree;
        if e < 0 {
            continue;
        }
        out.insert_add(
            PbwMono::new(e as u32, rng.gen_range(-2..=2), t),
            rand_ratq(rng),
        );
    }
    out
}

/// The letters used for random-word association tests.
pub const WORD_LETTERS: [UGen; 13] = [
    UGen::E,
    UGen::F,
    UGen::K,
    UGen::KInv,
    UGen::X,
    UGen::Y,
    UGen::YInv,
    UGen::Z,
    UGen::NuX,
    UGen::NuY,
    UGen::NuZ,
    UGen::Phi,
    UGen::Lambda,
];

pub fn rand_letters(rng: &mut impl Rng, len: usize) -> Vec<UGen> {
    (0..len)
        .map(|_| WORD_LETTERS[rng.gen_range(0..WORD_LETTERS.len())])
        .collect()
}

pub fn rand_abc_mono(rng: &mut impl Rng, max: i64) -> AbcMono {
    AbcMono::new(
        rng.gen_range(-max..=max),
        rng.gen_range(-max..=max),
        rng.gen_range(-max..=max),
    )
}

pub fn rand_tensor_element(rng: &mut impl Rng, max_terms: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.insert_add(
            rand_pbw_mono(rng, 2, 2),
            LaurentABC::monomial(rand_abc_mono(rng, 2), rand_ratq(rng)),
        );
    }
    out
}

/// A random element of U' ⊗ F[a^±1,b^±1,c^±1], built from equitable
/// monomials with nonnegative y exponents.
pub fn rand_uprime_tensor(rng: &mut impl Rng, max_terms: usize) -> TensorElement {
    let mut out = TensorElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let em = EquitableMono::new(
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        );
        let u = UElement::from_equitable(&EquitableExpansion::monomial(em, rand_ratq(rng)));
        let l = LaurentABC::monomial(rand_abc_mono(rng, 2), RatQ::one());
        out = out.add(&TensorElement::tensor(&u, &l));
    }
    out
}

pub fn rand_delta_mono(rng: &mut impl Rng, max_exp: u32) -> DeltaMono {
    DeltaMono::new(
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
    )
}

pub fn rand_delta_element(rng: &mut impl Rng, max_terms: usize, max_exp: u32) -> DeltaElement {
    let mut out = DeltaElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        out.insert_add(rand_delta_mono(rng, max_exp), rand_ratq(rng));
    }
    out
}

/// A random rational q with q nonzero and q^4 != 1.
pub fn rand_q(rng: &mut impl Rng) -> BigRational {
    loop {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=9);
        if num == 0 {
            continue;
        }
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        if check_q_binding(&q).is_ok() {
            return q;
        }
    }
}
