//! Dense integer-coefficient polynomials in the single variable `q`.
//!
//! These are the raw material for the scalar field: a scalar is a reduced
//! fraction of two `IntPoly` values. Negative powers of `q` never appear
//! here; they are cleared into the numerator or denominator of the fraction.
//!
//! Coefficients are stored as machine integers while they fit and promoted
//! to arbitrary precision on overflow; every operation checks. The small
//! representation is canonical, so equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// A polynomial in `q` with integer coefficients.
///
/// Coefficients are in ascending degree order with no trailing zeros; the
/// zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    repr: Repr,
}

impl Default for IntPoly {
    fn default() -> Self {
        IntPoly::zero()
    }
}

fn trim_small(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn trim_big(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Demote to machine integers when every coefficient fits.
fn normalize_big(v: Vec<BigInt>) -> Repr {
    let v = trim_big(v);
    if v.iter().all(|c| c.to_i64().is_some()) {
        Repr::Small(v.iter().map(|c| c.to_i64().unwrap()).collect())
    } else {
        Repr::Big(v)
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

mod small {
    //! Checked machine-integer kernels; `None` means overflow.

    pub fn add(a: &[i64], b: &[i64], negate_b: bool) -> Option<Vec<i64>> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            let y = if negate_b { y.checked_neg()? } else { y };
            out.push(x.checked_add(y)?);
        }
        Some(super::trim_small(out))
    }

    pub fn mul(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
        if a.is_empty() || b.is_empty() {
            return Some(Vec::new());
        }
        let mut acc = vec![0i128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let p = (x as i128).checked_mul(y as i128)?;
                acc[i + j] = acc[i + j].checked_add(p)?;
            }
        }
        let mut out = Vec::with_capacity(acc.len());
        for v in acc {
            out.push(i64::try_from(v).ok()?);
        }
        Some(super::trim_small(out))
    }

    pub fn mul_scalar(a: &[i64], c: i64) -> Option<Vec<i64>> {
        a.iter().map(|&x| x.checked_mul(c)).collect::<Option<Vec<_>>>().map(super::trim_small)
    }

    pub fn neg(a: &[i64]) -> Option<Vec<i64>> {
        a.iter().map(|&x| x.checked_neg()).collect()
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(a: &[i64]) -> u64 {
        let mut g: u64 = 0;
        for &c in a {
            g = gcd_u64(g, c.unsigned_abs());
            if g == 1 {
                break;
            }
        }
        g
    }

    fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    pub fn divide_content(a: &[i64], g: u64) -> Option<Vec<i64>> {
        if g <= 1 {
            return Some(a.to_vec());
        }
        let g = i64::try_from(g).ok()?;
        Some(a.iter().map(|&x| x / g).collect())
    }

    /// Exact division; `None` on overflow or when not divisible.
    /// The outer `Option` is overflow, the inner is divisibility.
    #[allow(clippy::option_option)]
    pub fn exact_div(a: &[i64], d: &[i64]) -> Option<Option<Vec<i64>>> {
        let dd = d.len() - 1;
        let ld = *d.last().unwrap();
        let mut rem = a.to_vec();
        if a.len() < d.len() {
            return Some(None);
        }
        let mut quot = vec![0i64; a.len() - d.len() + 1];
        loop {
            let rl = super::trim_small(rem.clone());
            if rl.is_empty() {
                break;
            }
            rem = rl;
            if rem.len() < d.len() {
                return Some(None);
            }
            let lr = *rem.last().unwrap();
            if lr % ld != 0 {
                return Some(None);
            }
            let c = lr / ld;
            let shift = rem.len() - 1 - dd;
            quot[shift] = c;
            for (i, &dc) in d.iter().enumerate() {
                let sub = dc.checked_mul(c)?;
                rem[shift + i] = rem[shift + i].checked_sub(sub)?;
            }
        }
        Some(Some(super::trim_small(quot)))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { repr: Repr::Small(Vec::new()) }
    }

    pub fn one() -> Self {
        IntPoly { repr: Repr::Small(vec![1]) }
    }

    /// The variable `q`.
    pub fn var() -> Self {
        IntPoly { repr: Repr::Small(vec![0, 1]) }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { repr: normalize_big(vec![c]) }
    }

    pub fn from_i64(c: i64) -> Self {
        if c == 0 {
            IntPoly::zero()
        } else {
            IntPoly { repr: Repr::Small(vec![c]) }
        }
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        match c.to_i64() {
            Some(s) => {
                let mut v = vec![0i64; deg + 1];
                v[deg] = s;
                IntPoly { repr: Repr::Small(v) }
            }
            None => {
                let mut v = vec![BigInt::zero(); deg + 1];
                v[deg] = c;
                IntPoly { repr: Repr::Big(v) }
            }
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPoly { repr: normalize_big(coeffs) }
    }

    fn big_coeffs(&self) -> Vec<BigInt> {
        match &self.repr {
            Repr::Small(v) => to_big(v),
            Repr::Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small(v) => v.is_empty(),
            Repr::Big(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Small(v) if v.as_slice() == [1])
    }

    fn len(&self) -> usize {
        match &self.repr {
            Repr::Small(v) => v.len(),
            Repr::Big(v) => v.len(),
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        match &self.repr {
            Repr::Small(v) => BigInt::from(v.get(deg).copied().unwrap_or(0)),
            Repr::Big(v) => v.get(deg).cloned().unwrap_or_else(BigInt::zero),
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        match &self.repr {
            Repr::Small(v) => BigInt::from(v.last().copied().unwrap_or(0)),
            Repr::Big(v) => v.last().cloned().unwrap_or_else(BigInt::zero),
        }
    }

    pub fn lead_is_negative(&self) -> bool {
        match &self.repr {
            Repr::Small(v) => v.last().map_or(false, |&c| c < 0),
            Repr::Big(v) => v.last().map_or(false, |c| c.is_negative()),
        }
    }

    /// Lowest degree with a nonzero coefficient (the `q`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        match &self.repr {
            Repr::Small(v) => v.iter().position(|&c| c != 0),
            Repr::Big(v) => v.iter().position(|c| !c.is_zero()),
        }
    }

    /// The polynomial viewed as a single term `c * q^k`, when it is one.
    pub fn as_monomial(&self) -> Option<(BigInt, usize)> {
        let deg = self.degree()?;
        match &self.repr {
            Repr::Small(v) => {
                if v[..deg].iter().all(|&c| c == 0) {
                    Some((BigInt::from(v[deg]), deg))
                } else {
                    None
                }
            }
            Repr::Big(v) => {
                if v[..deg].iter().all(|c| c.is_zero()) {
                    Some((v[deg].clone(), deg))
                } else {
                    None
                }
            }
        }
    }

    /// Multiply by `q^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        match &self.repr {
            Repr::Small(v) => {
                let mut out = vec![0i64; n];
                out.extend_from_slice(v);
                IntPoly { repr: Repr::Small(out) }
            }
            Repr::Big(v) => {
                let mut out = vec![BigInt::zero(); n];
                out.extend_from_slice(v);
                IntPoly { repr: Repr::Big(out) }
            }
        }
    }

    /// Divide by `q^n`; `None` when the valuation is too small.
    pub fn unshift(&self, n: usize) -> Option<Self> {
        if n == 0 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.valuation()? < n {
            return None;
        }
        Some(match &self.repr {
            Repr::Small(v) => IntPoly { repr: Repr::Small(v[n..].to_vec()) },
            Repr::Big(v) => IntPoly { repr: Repr::Big(v[n..].to_vec()) },
        })
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Small(v) => match small::neg(v) {
                Some(out) => IntPoly { repr: Repr::Small(out) },
                None => IntPoly { repr: normalize_big(to_big(v).iter().map(|c| -c).collect()) },
            },
            Repr::Big(v) => IntPoly { repr: normalize_big(v.iter().map(|c| -c).collect()) },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &other.repr) {
            if let Some(out) = small::add(a, b, false) {
                return IntPoly { repr: Repr::Small(out) };
            }
        }
        let a = self.big_coeffs();
        let b = other.big_coeffs();
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        let zero = BigInt::zero();
        for i in 0..n {
            out.push(a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero));
        }
        IntPoly { repr: normalize_big(out) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &other.repr) {
            if let Some(out) = small::add(a, b, true) {
                return IntPoly { repr: Repr::Small(out) };
            }
        }
        let a = self.big_coeffs();
        let b = other.big_coeffs();
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        let zero = BigInt::zero();
        for i in 0..n {
            out.push(a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero));
        }
        IntPoly { repr: normalize_big(out) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &other.repr) {
            if let Some(out) = small::mul(a, b) {
                return IntPoly { repr: Repr::Small(out) };
            }
        }
        let a = self.big_coeffs();
        let b = other.big_coeffs();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPoly { repr: normalize_big(out) }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return IntPoly::zero();
        }
        if let (Repr::Small(a), Some(s)) = (&self.repr, c.to_i64()) {
            if let Some(out) = small::mul_scalar(a, s) {
                return IntPoly { repr: Repr::Small(out) };
            }
        }
        IntPoly { repr: normalize_big(self.big_coeffs().iter().map(|x| x * c).collect()) }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.big_coeffs().into_iter().rev() {
            acc = acc * x + BigRational::from_integer(c);
        }
        acc
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        match &self.repr {
            Repr::Small(v) => BigInt::from(small::content(v)),
            Repr::Big(v) => {
                let mut g = BigInt::zero();
                for c in v {
                    g = g.gcd(c);
                    if g.is_one() {
                        break;
                    }
                }
                g
            }
        }
    }

    /// Divide out the content, leaving the leading coefficient sign intact.
    pub fn primitive_part(&self) -> Self {
        match &self.repr {
            Repr::Small(v) => {
                let g = small::content(v);
                if g <= 1 {
                    return self.clone();
                }
                match small::divide_content(v, g) {
                    Some(out) => IntPoly { repr: Repr::Small(out) },
                    None => {
                        let g = self.content();
                        IntPoly {
                            repr: normalize_big(to_big(v).iter().map(|c| c / &g).collect()),
                        }
                    }
                }
            }
            Repr::Big(v) => {
                let g = self.content();
                if g.is_zero() || g.is_one() {
                    return self.clone();
                }
                IntPoly { repr: normalize_big(v.iter().map(|c| c / &g).collect()) }
            }
        }
    }

    /// Pseudo-remainder of `self` by `d` (`d` nonzero). The result has
    /// degree below `deg d`; it equals `lc(d)^m * self  mod  d` for some m.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let ld = d.leading_coeff();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading_coeff();
            r = r.mul_scalar(&ld).sub(&d.shift(dr - dd).mul_scalar(&lr));
            debug_assert!(r.degree().map_or(true, |nd| nd < dr));
        }
        r
    }

    fn pos_normalized(&self) -> Self {
        if self.lead_is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Gcd over Z[q], normalized to a positive leading coefficient.
    /// Monomial operands reduce to a valuation comparison; a modular
    /// degree bound detects coprime pairs cheaply; the remaining cases run
    /// a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.pos_normalized();
        }
        if other.is_zero() {
            return self.pos_normalized();
        }
        if self.is_one() || other.is_one() {
            return IntPoly::one();
        }
        // gcd(p, c*q^k) = gcd(content(p), c) * q^min(val(p), k)
        if let Some((c, k)) = self.as_monomial() {
            let g = other.content().gcd(&c);
            let v = other.valuation().unwrap_or(0).min(k);
            return IntPoly::monomial(g, v);
        }
        if let Some((c, k)) = other.as_monomial() {
            let g = self.content().gcd(&c);
            let v = self.valuation().unwrap_or(0).min(k);
            return IntPoly::monomial(g, v);
        }
        // The gcd degree over Q is bounded by the gcd degree mod p when p
        // divides neither leading coefficient; degree 0 there means the
        // polynomial parts are coprime and only contents remain.
        if modular::coprime_filter(self, other) {
            return IntPoly::constant(self.content().gcd(&other.content()));
        }
        let c = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().pos_normalized().mul_scalar(&c)
    }

    /// Exact division; `None` when `d` does not divide `self` over Z[q].
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // dividing by c*q^k is a shift plus a scalar division
        if let Some((c, k)) = d.as_monomial() {
            let shifted = self.unshift(k)?;
            if c.is_one() {
                return Some(shifted);
            }
            let out: Option<Vec<BigInt>> = shifted
                .big_coeffs()
                .into_iter()
                .map(|x| {
                    let (quot, rem) = x.div_rem(&c);
                    rem.is_zero().then_some(quot)
                })
                .collect();
            return Some(IntPoly { repr: normalize_big(out?) });
        }
        if self.len() < d.len() {
            return None;
        }
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &d.repr) {
            if let Some(out) = small::exact_div(a, b) {
                return out.map(|v| IntPoly { repr: Repr::Small(v) });
            }
        }
        let dvec = d.big_coeffs();
        let dd = dvec.len() - 1;
        let ld = dvec.last().unwrap().clone();
        let mut rem = self.big_coeffs();
        let mut quot = vec![BigInt::zero(); self.len() - d.len() + 1];
        loop {
            rem = trim_big(rem);
            if rem.is_empty() {
                break;
            }
            if rem.len() < dvec.len() {
                return None;
            }
            let (c, r) = rem.last().unwrap().div_rem(&ld);
            if !r.is_zero() {
                return None;
            }
            let shift = rem.len() - 1 - dd;
            for (i, dc) in dvec.iter().enumerate() {
                let delta = dc * &c;
                rem[shift + i] -= delta;
            }
            quot[shift] = c;
        }
        Some(IntPoly { repr: normalize_big(quot) })
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        match &self.repr {
            Repr::Small(v) => v.iter().filter(|&&c| c != 0).count(),
            Repr::Big(v) => v.iter().filter(|c| !c.is_zero()).count(),
        }
    }
}

/// Polynomial arithmetic modulo the Mersenne prime 2^31 - 1, used only as
/// a sound coprimality certificate.
mod modular {
    use super::{IntPoly, Repr};
    use num_bigint::Sign;

    const P: u64 = (1 << 31) - 1;

    fn mul_p(a: u64, b: u64) -> u64 {
        (a * b) % P
    }

    fn inv_p(a: u64) -> u64 {
        // Fermat: a^(p-2) mod p
        let mut acc = 1u64;
        let mut base = a % P;
        let mut e = P - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_p(acc, base);
            }
            base = mul_p(base, base);
            e >>= 1;
        }
        acc
    }

    fn coeff_mod_p(x: &num_bigint::BigInt) -> u64 {
        let (sign, digits) = x.to_u32_digits();
        let mut acc: u64 = 0;
        for d in digits.iter().rev() {
            acc = ((acc << 32) | *d as u64) % P;
        }
        if sign == Sign::Minus && acc != 0 {
            P - acc
        } else {
            acc
        }
    }

    fn poly_mod_p(p: &IntPoly) -> Vec<u64> {
        let mut v: Vec<u64> = match &p.repr {
            Repr::Small(v) => v.iter().map(|&c| c.rem_euclid(P as i64) as u64).collect(),
            Repr::Big(v) => v.iter().map(coeff_mod_p).collect(),
        };
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// True when the polynomial parts of `a` and `b` are provably coprime:
    /// neither leading coefficient vanishes mod p and the gcd of the
    /// reductions has degree zero.
    pub(super) fn coprime_filter(a: &IntPoly, b: &IntPoly) -> bool {
        let mut x = poly_mod_p(a);
        let mut y = poly_mod_p(b);
        if x.len() != a.len() || y.len() != b.len() {
            return false; // a leading coefficient vanished mod p
        }
        while !y.is_empty() {
            // x mod y in F_p[q]
            let ly_inv = inv_p(*y.last().unwrap());
            while x.len() >= y.len() && !x.is_empty() {
                let shift = x.len() - y.len();
                let factor = mul_p(*x.last().unwrap(), ly_inv);
                for (i, c) in y.iter().enumerate() {
                    let sub = mul_p(factor, *c);
                    let idx = shift + i;
                    x[idx] = (x[idx] + P - sub) % P;
                }
                while x.last() == Some(&0) {
                    x.pop();
                }
            }
            std::mem::swap(&mut x, &mut y);
        }
        x.len() == 1
    }
}

impl fmt::Display for IntPoly {
    /// Compact form, highest degree first: `2*q^3-q+5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for deg in (0..self.len()).rev() {
            let c = self.coeff(deg);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (deg, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", mag)?,
                (_, true) => write!(f, "q^{}", deg)?,
                (_, false) => write!(f, "{}*q^{}", mag, deg)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_and_degree() {
        // (q - 1)(q + 1) = q^2 - 1
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).degree(), Some(2));
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn gcd_primitive_prs() {
        // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
        // content is folded in: gcd(2q, 4) = 2
        assert_eq!(p(&[0, 2]).gcd(&p(&[4])), p(&[2]));
        // sign normalization
        assert_eq!(p(&[1, -1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // non-monomial pair with a true common factor
        let a = p(&[-1, 0, 1]).mul(&p(&[1, 1, 1]));
        let b = p(&[-1, 0, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let n = p(&[-1, 0, 1]);
        assert_eq!(n.exact_div(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(n.exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(n.exact_div(&p(&[2])), None);
        assert_eq!(n.exact_div(&p(&[0, 0, 0, 1])), None);
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = p(&[i64::MAX, 1]);
        let sum = big.add(&p(&[1]));
        // coefficient exceeded i64 and must survive exactly
        assert_eq!(sum.coeff(0), BigInt::from(i64::MAX) + 1);
        let back = sum.sub(&p(&[1]));
        assert_eq!(back, big);
        // squaring large values round-trips through the big representation
        let sq = big.mul(&big);
        assert_eq!(sq.exact_div(&big), Some(big));
    }

    #[test]
    fn display_compact() {
        assert_eq!(p(&[5, -1, 0, 2]).to_string(), "2*q^3-q+5");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
