//! L[y] and its truncations `W_k = L[y]/(y - γ_x)^k`.
//!
//! Elements of W_k are stored on the monomial basis `1, y, ..., y^{k-1}`, so the
//! Frobenius of L acts on them coefficient by coefficient.

use crate::error::{Error, Result};
use crate::field::{FieldTower, FqPoly, LElem};
use crate::linalg::Ring;

/// A polynomial in `y` over L; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YPoly {
    coeffs: Vec<LElem>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<LElem>) -> Self {
        while coeffs.last().is_some_and(LElem::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: LElem) -> Self {
        YPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[LElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn coeff_or_zero(&self, i: usize, tower: &FieldTower) -> LElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| tower.zero())
    }

    pub fn add(&self, other: &Self, tower: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPoly::new(
            (0..n)
                .map(|i| tower.add(&self.coeff_or_zero(i, tower), &other.coeff_or_zero(i, tower)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, tower: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPoly::new(
            (0..n)
                .map(|i| tower.sub(&self.coeff_or_zero(i, tower), &other.coeff_or_zero(i, tower)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self, tower: &FieldTower) -> Self {
        if self.is_zero() || other.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![tower.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = tower.add(&out[i + j], &tower.mul(a, b));
            }
        }
        YPoly::new(out)
    }

    /// `f^{[t]}`: Frobenius applied to every coefficient.
    pub fn twist(&self, t: i64, tower: &FieldTower) -> Self {
        YPoly::new(self.coeffs.iter().map(|c| tower.frobenius(c, t)).collect())
    }

    /// Remainder modulo a monic polynomial of degree at least 1.
    pub fn rem_monic(&self, modulus: &YPoly, tower: &FieldTower) -> Vec<LElem> {
        let k = modulus.degree().expect("nonzero modulus");
        let mut rem = self.coeffs.clone();
        if rem.len() > k {
            for top in (k..rem.len()).rev() {
                let c = rem[top].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, m) in modulus.coeffs[..k].iter().enumerate() {
                    if m.is_zero() {
                        continue;
                    }
                    rem[top - k + j] = tower.sub(&rem[top - k + j], &tower.mul(&c, m));
                }
            }
        }
        rem.resize(k, tower.zero());
        rem
    }

    /// `(y - c)^k`.
    pub fn linear_power(c: &LElem, k: usize, tower: &FieldTower) -> YPoly {
        let factor = YPoly::new(vec![tower.neg(c), tower.one()]);
        (0..k).fold(YPoly::constant(tower.one()), |acc, _| acc.mul(&factor, tower))
    }
}

/// An element of W_k: exactly `k` coefficients on `1, y, ..., y^{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WkElem {
    coeffs: Vec<LElem>,
}

impl WkElem {
    pub fn coeffs(&self) -> &[LElem] {
        &self.coeffs
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LElem::is_zero)
    }

    pub fn to_ypoly(&self) -> YPoly {
        YPoly::new(self.coeffs.clone())
    }
}

/// The ring W_k for a fixed γ and precision `k`.
#[derive(Debug, Clone)]
pub struct WkRing<'a> {
    tower: &'a FieldTower,
    gamma: LElem,
    k: usize,
    mu: YPoly,
}

impl<'a> WkRing<'a> {
    pub fn new(tower: &'a FieldTower, gamma: &LElem, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Malformed("precision k must be at least 1".into()));
        }
        let mu = YPoly::linear_power(gamma, k, tower);
        Ok(WkRing {
            tower,
            gamma: gamma.clone(),
            k,
            mu,
        })
    }

    pub fn tower(&self) -> &'a FieldTower {
        self.tower
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gamma(&self) -> &LElem {
        &self.gamma
    }

    /// μ = (y - γ)^k.
    pub fn mu(&self) -> &YPoly {
        &self.mu
    }

    /// Remainder of `f` modulo μ.
    pub fn reduce(&self, f: &YPoly) -> WkElem {
        WkElem {
            coeffs: f.rem_monic(&self.mu, self.tower),
        }
    }

    /// μ^{[-t]} = (y - γ^{[-t]})^k.
    pub fn shifted_modulus(&self, t: i64) -> YPoly {
        let g = self.tower.frobenius(&self.gamma, -t);
        YPoly::linear_power(&g, self.k, self.tower)
    }

    /// `f^{[t]} mod μ`, computed as `(f mod μ^{[-t]})^{[t]}` so that only `k`
    /// coefficients are twisted.
    pub fn frobenius_shift_reduce(&self, f: &YPoly, t: i64) -> WkElem {
        if t.rem_euclid(self.tower.n() as i64) == 0 {
            return self.reduce(f);
        }
        let modulus = self.shifted_modulus(t);
        let rem = f.rem_monic(&modulus, self.tower);
        WkElem {
            coeffs: rem.iter().map(|c| self.tower.frobenius(c, t)).collect(),
        }
    }

    pub fn from_l(&self, c: &LElem) -> WkElem {
        self.reduce(&YPoly::constant(c.clone()))
    }

    /// The class of `y`.
    pub fn y(&self) -> WkElem {
        self.reduce(&YPoly::new(vec![self.tower.zero(), self.tower.one()]))
    }

    /// ι_k(f) = f(y) mod μ for `f` in F_q[x].
    pub fn embed(&self, f: &FqPoly) -> WkElem {
        let t = self.tower;
        let poly = YPoly::new(f.coeffs().iter().map(|&c| t.from_fq(c)).collect());
        self.reduce(&poly)
    }

    pub fn from_coeffs(&self, coeffs: Vec<LElem>) -> Result<WkElem> {
        if coeffs.len() != self.k {
            return Err(Error::PrecisionMismatch(coeffs.len(), self.k));
        }
        Ok(WkElem { coeffs })
    }

    fn check(&self, a: &WkElem) -> Result<()> {
        if a.precision() != self.k {
            return Err(Error::PrecisionMismatch(a.precision(), self.k));
        }
        Ok(())
    }

    pub fn checked_add(&self, a: &WkElem, b: &WkElem) -> Result<WkElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::add(self, a, b))
    }

    pub fn checked_mul(&self, a: &WkElem, b: &WkElem) -> Result<WkElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::mul(self, a, b))
    }
}

impl Ring for WkRing<'_> {
    type Elem = WkElem;

    fn zero(&self) -> WkElem {
        WkElem {
            coeffs: vec![self.tower.zero(); self.k],
        }
    }

    fn one(&self) -> WkElem {
        self.from_l(&self.tower.one())
    }

    fn add(&self, a: &WkElem, b: &WkElem) -> WkElem {
        WkElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.tower.add(x, y)).collect(),
        }
    }

    fn sub(&self, a: &WkElem, b: &WkElem) -> WkElem {
        WkElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.tower.sub(x, y)).collect(),
        }
    }

    fn neg(&self, a: &WkElem) -> WkElem {
        WkElem {
            coeffs: a.coeffs.iter().map(|x| self.tower.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &WkElem, b: &WkElem) -> WkElem {
        if self.k == 1 {
            return WkElem {
                coeffs: vec![self.tower.mul(&a.coeffs[0], &b.coeffs[0])],
            };
        }
        self.reduce(&a.to_ypoly().mul(&b.to_ypoly(), self.tower))
    }

    fn is_zero(&self, a: &WkElem) -> bool {
        a.is_zero()
    }
}

/// The exact polynomial ring L[y].
#[derive(Debug, Clone, Copy)]
pub struct YPolyRing<'a> {
    pub tower: &'a FieldTower,
}

impl Ring for YPolyRing<'_> {
    type Elem = YPoly;

    fn zero(&self) -> YPoly {
        YPoly::zero()
    }

    fn one(&self) -> YPoly {
        YPoly::constant(self.tower.one())
    }

    fn add(&self, a: &YPoly, b: &YPoly) -> YPoly {
        a.add(b, self.tower)
    }

    fn sub(&self, a: &YPoly, b: &YPoly) -> YPoly {
        a.sub(b, self.tower)
    }

    fn neg(&self, a: &YPoly) -> YPoly {
        YPoly::new(a.coeffs.iter().map(|c| self.tower.neg(c)).collect())
    }

    fn mul(&self, a: &YPoly, b: &YPoly) -> YPoly {
        a.mul(b, self.tower)
    }

    fn is_zero(&self, a: &YPoly) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tower() -> FieldTower {
        FieldTower::from_parts(3, None, &[2, 1, 0, 0, 1]).unwrap()
    }

    fn random_ypoly(t: &FieldTower, rng: &mut ChaCha8Rng, deg: usize) -> YPoly {
        YPoly::new((0..=deg).map(|_| t.random(rng)).collect())
    }

    #[test]
    fn reduce_examples() {
        let t = tower();
        let gamma = t.from_coeffs(&[1, 2, 0, 1]).unwrap();
        let y = YPoly::new(vec![t.zero(), t.one()]);
        let w1 = WkRing::new(&t, &gamma, 1).unwrap();
        assert_eq!(w1.reduce(&y).coeffs(), std::slice::from_ref(&gamma));
        for k in 1..4 {
            let w = WkRing::new(&t, &gamma, k).unwrap();
            assert!(w.reduce(w.mu()).is_zero());
        }
        let w2 = WkRing::new(&t, &gamma, 2).unwrap();
        let y2 = y.mul(&y, &t);
        let two = t.from_fq(2);
        let expect = vec![t.neg(&t.square(&gamma)), t.mul(&two, &gamma)];
        assert_eq!(w2.reduce(&y2).coeffs(), expect.as_slice());
    }

    #[test]
    fn nilpotency_index_is_k() {
        let t = tower();
        let gamma = t.generator();
        for k in 1..5 {
            let w = WkRing::new(&t, &gamma, k).unwrap();
            let e = w.sub(&w.y(), &w.from_l(&gamma));
            let mut acc = w.one();
            for i in 1..=k {
                acc = w.mul(&acc, &e);
                assert_eq!(acc.is_zero(), i == k, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn precision_mismatch_rejected() {
        let t = tower();
        let g = t.generator();
        let w2 = WkRing::new(&t, &g, 2).unwrap();
        let w3 = WkRing::new(&t, &g, 3).unwrap();
        assert_eq!(
            w2.checked_mul(&w2.one(), &w3.one()),
            Err(Error::PrecisionMismatch(3, 2))
        );
        assert!(WkRing::new(&t, &g, 0).is_err());
    }

    #[test]
    fn shift_reduce_matches_naive_path() {
        let t = tower();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let gamma = t.random(&mut rng);
            let k = rng.gen_range(1..=4);
            let w = WkRing::new(&t, &gamma, k).unwrap();
            let deg = rng.gen_range(0..=30);
            let f = random_ypoly(&t, &mut rng, deg);
            let shift = rng.gen_range(0..=4);
            assert_eq!(w.frobenius_shift_reduce(&f, shift), w.reduce(&f.twist(shift, &t)));
        }
    }

    #[test]
    fn shift_reduce_at_k1_is_evaluate_then_twist() {
        let t = tower();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let gamma = t.random(&mut rng);
        let w = WkRing::new(&t, &gamma, 1).unwrap();
        let f = random_ypoly(&t, &mut rng, 7);
        let point = t.frobenius(&gamma, -2);
        let val = f.coeffs().iter().rev().fold(t.zero(), |acc, c| t.add(&t.mul(&acc, &point), c));
        assert_eq!(w.frobenius_shift_reduce(&f, 2).coeffs(), &[t.frobenius(&val, 2)]);
        assert_eq!(w.frobenius_shift_reduce(&f, 0), w.reduce(&f));
    }
}
