//! Dense univariate polynomials over F_q.
//!
//! Coefficients are little-endian (constant term first) and trailing zeros are
//! always trimmed, so the zero polynomial has an empty coefficient vector. This
//! ordering is used for every polynomial type in the crate.

use crate::field::fq::{Fq, FqElem};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FqPoly {
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn zero() -> Self {
        FqPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FqPoly { coeffs: vec![1] }
    }

    pub fn constant(c: FqElem) -> Self {
        FqPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        FqPoly { coeffs: vec![0, 1] }
    }

    pub fn monomial(c: FqElem, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        FqPoly::new(v)
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FqElem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self, f: &Fq) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FqPoly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self, f: &Fq) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        FqPoly::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Fq) -> Self {
        FqPoly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: FqElem, f: &Fq) -> Self {
        FqPoly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return FqPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        FqPoly { coeffs: v }
    }

    pub fn mul(&self, other: &Self, f: &Fq) -> Self {
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FqPoly::new(out)
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn divrem(&self, divisor: &Self, f: &Fq) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((FqPoly::zero(), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lc_inv);
            let s = top - dd;
            quot[s] = factor;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[s + j] = f.sub(rem[s + j], f.mul(factor, b));
            }
        }
        rem.truncate(dd);
        Some((FqPoly::new(quot), FqPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self, f: &Fq) -> Self {
        self.divrem(divisor, f).expect("division by zero polynomial").1
    }

    pub fn monic(&self, f: &Fq) -> Self {
        match f.inv(self.leading()) {
            Some(inv) => self.scale(inv, f),
            None => FqPoly::zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self, f: &Fq) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Inverse modulo `modulus`, if `self` is a unit there.
    pub fn inv_mod(&self, modulus: &Self, f: &Fq) -> Option<Self> {
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus, f));
        let (mut s0, mut s1) = (FqPoly::zero(), FqPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f)?;
            let s = s0.sub(&q.mul(&s1, f), f);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = f.inv(r0.leading())?;
        Some(s0.scale(c, f).rem(modulus, f))
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self, f: &Fq) -> Self {
        self.mul(other, f).rem(modulus, f)
    }

    pub fn powmod(&self, mut exp: u64, modulus: &Self, f: &Fq) -> Self {
        let mut base = self.rem(modulus, f);
        let mut acc = FqPoly::one().rem(modulus, f);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mulmod(&base, modulus, f);
            }
            base = base.mulmod(&base, modulus, f);
            exp >>= 1;
        }
        acc
    }

    pub fn derivative(&self, f: &Fq) -> Self {
        FqPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: FqElem, f: &Fq) -> FqElem {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self(inner) mod modulus`, by Horner's rule.
    pub fn compose_mod(&self, inner: &Self, modulus: &Self, f: &Fq) -> Self {
        let inner = inner.rem(modulus, f);
        let mut acc = FqPoly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mulmod(&inner, modulus, f).add(&FqPoly::constant(c), f);
        }
        acc.rem(modulus, f)
    }

    /// Distinct-degree irreducibility test: `self` of degree `d` is irreducible
    /// iff `gcd(x^{q^i} - x, self) = 1` for all `1 <= i <= d/2`. Exits at the
    /// first nontrivial factor, which for random inputs is usually of small degree.
    pub fn is_irreducible(&self, f: &Fq) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let x = FqPoly::x();
        let mut power = x.clone();
        for _ in 1..=d / 2 {
            power = power.powmod(f.q() as u64, self, f);
            if self.gcd(&power.sub(&x, f), f).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Formats with variable `var`, highest degree first, e.g. `x^3 + 2*x + 1`.
    pub fn display(&self, var: &str, f: &Fq) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = f.display(c);
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            terms.push(match (i, c) {
                (0, _) => cs,
                (_, 1) => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fq {
        Fq::prime(2).unwrap()
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(FqPoly::new(vec![1, 0, 0]).degree(), Some(0));
        assert_eq!(FqPoly::new(vec![0, 0]).degree(), None);
        assert!(FqPoly::zero().is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Fq::prime(5).unwrap();
        let a = FqPoly::new(vec![3, 1, 4, 1, 2, 2]);
        let b = FqPoly::new(vec![1, 0, 3]);
        let (q, r) = a.divrem(&b, &f).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(a.divrem(&FqPoly::zero(), &f).is_none());
    }

    #[test]
    fn irreducibility_small_cases() {
        let f = f2();
        assert!(FqPoly::new(vec![1, 1, 0, 1]).is_irreducible(&f));
        assert!(!FqPoly::new(vec![1, 0, 1]).is_irreducible(&f));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!FqPoly::new(vec![1, 0, 1, 0, 1]).is_irreducible(&f));
        assert!(FqPoly::new(vec![1, 1, 0, 0, 1]).is_irreducible(&f));
    }

    #[test]
    fn irreducibility_matches_root_and_factor_search_over_f25() {
        // Brute force: a monic quadratic over F_25 is irreducible iff it has no root.
        let f = Fq::extension(5, &[1, 1, 1]).unwrap();
        for b in (0..25).step_by(3) {
            for c in 0..25 {
                let poly = FqPoly::new(vec![c, b, 1]);
                let has_root = (0..25).any(|x| poly.eval(x, &f) == 0);
                assert_eq!(poly.is_irreducible(&f), !has_root, "b={b} c={c}");
            }
        }
    }

    #[test]
    fn inverse_modulo() {
        let f = Fq::prime(7).unwrap();
        let m = FqPoly::new(vec![3, 0, 0, 1]);
        let a = FqPoly::new(vec![1, 2, 5]);
        let inv = a.inv_mod(&m, &f).unwrap();
        assert_eq!(a.mulmod(&inv, &m, &f), FqPoly::one());
    }

    #[test]
    fn display_format() {
        let f = f2();
        assert_eq!(FqPoly::new(vec![1, 0, 1, 1]).display("x", &f), "x^3 + x^2 + 1");
        let f5 = Fq::prime(5).unwrap();
        assert_eq!(FqPoly::new(vec![0, 3]).display("x", &f5), "3*x");
        assert_eq!(FqPoly::zero().display("x", &f5), "0");
    }
}
