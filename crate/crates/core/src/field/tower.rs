//! The field L = F_q[t]/(ℓ(t)) together with its q-power Frobenius.

use std::fmt;

use rand::Rng;

use crate::counters::OpCounters;
use crate::error::{Error, Result};
use crate::field::fq::{Fq, FqElem};
use crate::field::linsolve::IncrementalEchelon;
use crate::field::poly::FqPoly;

/// An element of L: `n` coefficients over F_q on the basis `1, t, ..., t^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LElem(pub(crate) Vec<FqElem>);

impl LElem {
    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_poly(&self) -> FqPoly {
        FqPoly::new(self.0.clone())
    }
}

/// F_p ⊆ F_q ⊆ L with the data needed for fast Frobenius maps.
pub struct FieldTower {
    fq: Fq,
    ell: FqPoly,
    n: usize,
    /// Nonzero `(j, -ℓ_j)` for `j < n`: `t^n = sum (-ℓ_j) t^j`.
    ell_tail: Vec<(usize, FqElem)>,
    /// `t^{q^{2^j}} mod ℓ`.
    frob_iterates: Vec<LElem>,
    /// Matrix of the F_q-linear map `c -> c^{q^{2^j}}`, column-major.
    frob_mats: Vec<Vec<FqElem>>,
    counters: OpCounters,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("fq", &self.fq)
            .field("ell", &self.ell)
            .field("n", &self.n)
            .finish()
    }
}

impl FieldTower {
    /// Builds the tower from raw data: characteristic `p`, the optional defining
    /// polynomial `f` of F_q over F_p (absent means `q = p`), and ℓ with
    /// coefficients in F_q.
    pub fn from_parts(p: u32, f: Option<&[u32]>, ell: &[FqElem]) -> Result<Self> {
        let fq = match f {
            Some(f) => Fq::extension(p, f)?,
            None => Fq::prime(p)?,
        };
        if let Some(bad) = ell.iter().find(|&&c| !fq.is_valid(c)) {
            return Err(Error::Malformed(format!(
                "coefficient {bad} of ℓ is not an element of F_{}",
                fq.q()
            )));
        }
        FieldTower::new(fq, FqPoly::new(ell.to_vec()))
    }

    pub fn new(fq: Fq, ell: FqPoly) -> Result<Self> {
        let n = match ell.degree() {
            None | Some(0) => {
                return Err(Error::InvalidModulus("ℓ must have degree at least 1".into()))
            }
            Some(n) => n,
        };
        if !ell.is_monic() {
            return Err(Error::InvalidModulus("ℓ must be monic".into()));
        }
        if !ell.is_irreducible(&fq) {
            return Err(Error::Reducible(ell.display("t", &fq)));
        }
        let ell_tail = (0..n)
            .filter(|&j| ell.coeff(j) != 0)
            .map(|j| (j, fq.neg(ell.coeff(j))))
            .collect();
        let mut tower = FieldTower {
            fq,
            ell,
            n,
            ell_tail,
            frob_iterates: Vec::new(),
            frob_mats: Vec::new(),
            counters: OpCounters::default(),
        };
        tower.precompute_frobenius();
        Ok(tower)
    }

    fn precompute_frobenius(&mut self) {
        let n = self.n;
        let levels = (usize::BITS - (n - 1).leading_zeros()) as usize;
        if levels == 0 {
            return;
        }
        let t_poly = FqPoly::x();
        let s = t_poly.powmod(self.fq.q() as u64, &self.ell, &self.fq);
        let s = self.from_poly(&s);
        let mut mat = Vec::with_capacity(n * n);
        let mut power = self.one();
        for _ in 0..n {
            mat.extend_from_slice(&power.0);
            power = self.mul_raw(&power, &s);
        }
        self.frob_iterates.push(s);
        self.frob_mats.push(mat);
        for _ in 1..levels {
            let prev = self.frob_mats.last().expect("nonempty");
            let mut next = Vec::with_capacity(n * n);
            for col in 0..n {
                let v = self.apply_matrix(prev, &prev[col * n..(col + 1) * n]);
                next.extend_from_slice(&v);
            }
            let image_of_t = LElem(next[n..2 * n].to_vec());
            self.frob_iterates.push(image_of_t);
            self.frob_mats.push(next);
        }
    }

    pub fn fq(&self) -> &Fq {
        &self.fq
    }

    pub fn ell(&self) -> &FqPoly {
        &self.ell
    }

    /// Degree of L over F_q.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.fq.q()
    }

    pub fn counters(&self) -> &OpCounters {
        &self.counters
    }

    /// `t^q mod ℓ`.
    pub fn frob_image(&self) -> Option<&LElem> {
        self.frob_iterates.first()
    }

    pub fn zero(&self) -> LElem {
        LElem(vec![0; self.n])
    }

    pub fn one(&self) -> LElem {
        self.from_fq(1)
    }

    pub fn from_fq(&self, c: FqElem) -> LElem {
        let mut v = vec![0; self.n];
        v[0] = c;
        LElem(v)
    }

    /// The class of `t`.
    pub fn generator(&self) -> LElem {
        self.from_poly(&FqPoly::x())
    }

    /// Reduces a polynomial in `t` modulo ℓ.
    pub fn from_poly(&self, f: &FqPoly) -> LElem {
        let r = f.rem(&self.ell, &self.fq);
        let mut v = r.into_coeffs();
        v.resize(self.n, 0);
        LElem(v)
    }

    /// Element from little-endian F_q coefficients in `t`, reducing modulo ℓ
    /// when more than `n` are supplied.
    pub fn from_coeffs(&self, coeffs: &[FqElem]) -> Result<LElem> {
        if let Some(bad) = coeffs.iter().find(|&&c| !self.fq.is_valid(c)) {
            return Err(Error::Malformed(format!(
                "{bad} is not an element of F_{}",
                self.q()
            )));
        }
        Ok(self.from_poly(&FqPoly::new(coeffs.to_vec())))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> LElem {
        LElem((0..self.n).map(|_| rng.gen_range(0..self.q())).collect())
    }

    pub fn is_in_fq(&self, c: &LElem) -> bool {
        c.0[1..].iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &LElem, b: &LElem) -> LElem {
        LElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.fq.add(x, y)).collect())
    }

    pub fn sub(&self, a: &LElem, b: &LElem) -> LElem {
        LElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.fq.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &LElem) -> LElem {
        LElem(a.0.iter().map(|&x| self.fq.neg(x)).collect())
    }

    pub fn scale(&self, a: &LElem, c: FqElem) -> LElem {
        LElem(a.0.iter().map(|&x| self.fq.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &LElem, b: &LElem) -> LElem {
        self.counters.l_mul();
        self.mul_raw(a, b)
    }

    fn mul_raw(&self, a: &LElem, b: &LElem) -> LElem {
        let n = self.n;
        if self.fq.lazy_accumulation() {
            let p = self.fq.p() as u64;
            let mut prod = vec![0u64; 2 * n - 1];
            for (i, &x) in a.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let x = x as u64;
                for (slot, &y) in prod[i..i + n].iter_mut().zip(&b.0) {
                    *slot += x * y as u64;
                }
            }
            for d in (n..2 * n - 1).rev() {
                let c = prod[d] % p;
                if c == 0 {
                    continue;
                }
                for &(j, nl) in &self.ell_tail {
                    prod[d - n + j] += c * nl as u64;
                }
            }
            LElem(prod[..n].iter().map(|&c| (c % p) as u32).collect())
        } else {
            let f = &self.fq;
            let mut prod = vec![0u32; 2 * n - 1];
            for (i, &x) in a.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (slot, &y) in prod[i..i + n].iter_mut().zip(&b.0) {
                    *slot = f.add(*slot, f.mul(x, y));
                }
            }
            for d in (n..2 * n - 1).rev() {
                let c = prod[d];
                if c == 0 {
                    continue;
                }
                for &(j, nl) in &self.ell_tail {
                    prod[d - n + j] = f.add(prod[d - n + j], f.mul(c, nl));
                }
            }
            prod.truncate(n);
            LElem(prod)
        }
    }

    pub fn square(&self, a: &LElem) -> LElem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: &LElem) -> Option<LElem> {
        if a.is_zero() {
            return None;
        }
        a.to_poly()
            .inv_mod(&self.ell, &self.fq)
            .map(|p| self.from_poly(&p))
    }

    pub fn div(&self, a: &LElem, b: &LElem) -> Option<LElem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &LElem, mut exp: u64) -> LElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    fn apply_matrix(&self, mat: &[FqElem], v: &[FqElem]) -> Vec<FqElem> {
        let n = self.n;
        if self.fq.lazy_accumulation() {
            let p = self.fq.p() as u64;
            let mut acc = vec![0u64; n];
            for (col, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let c = c as u64;
                for (slot, &m) in acc.iter_mut().zip(&mat[col * n..(col + 1) * n]) {
                    *slot += c * m as u64;
                }
            }
            acc.into_iter().map(|x| (x % p) as u32).collect()
        } else {
            let f = &self.fq;
            let mut acc = vec![0u32; n];
            for (col, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (slot, &m) in acc.iter_mut().zip(&mat[col * n..(col + 1) * n]) {
                    *slot = f.add(*slot, f.mul(c, m));
                }
            }
            acc
        }
    }

    /// `c^{q^t}`; negative `t` is taken modulo `n`.
    ///
    /// Uses the precomputed matrices of `c -> c^{q^{2^j}}`, one matrix-vector
    /// product per set bit of `t mod n`.
    pub fn frobenius(&self, c: &LElem, t: i64) -> LElem {
        let t = t.rem_euclid(self.n as i64) as usize;
        if t == 0 {
            return c.clone();
        }
        self.counters.frobenius();
        let mut v = c.0.clone();
        for (j, mat) in self.frob_mats.iter().enumerate() {
            if (t >> j) & 1 == 1 {
                v = self.apply_matrix(mat, &v);
            }
        }
        LElem(v)
    }

    /// `c(s)` for `c, s` in L, by Horner's rule.
    pub fn compose(&self, c: &LElem, s: &LElem) -> LElem {
        let mut acc = self.zero();
        for &coef in c.0.iter().rev() {
            acc = self.mul(&acc, s);
            acc.0[0] = self.fq.add(acc.0[0], coef);
        }
        acc
    }

    /// Same map as [`frobenius`](Self::frobenius), computed by modular
    /// composition: `t^{q^t}` is assembled from the iterates `t^{q^{2^j}}`, then
    /// `c^{q^t} = c(t^{q^t})`.
    pub fn frobenius_by_composition(&self, c: &LElem, t: i64) -> LElem {
        let t = t.rem_euclid(self.n as i64) as usize;
        if t == 0 {
            return c.clone();
        }
        self.counters.frobenius();
        let mut image = self.generator();
        for (j, s) in self.frob_iterates.iter().enumerate() {
            if (t >> j) & 1 == 1 {
                image = self.compose(&image, s);
            }
        }
        self.compose(c, &image)
    }

    /// `c^{q^t}` by `t mod n` successive exponentiations by `q`.
    pub fn frobenius_naive(&self, c: &LElem, t: i64) -> LElem {
        let t = t.rem_euclid(self.n as i64);
        (0..t).fold(c.clone(), |acc, _| self.pow(&acc, self.q() as u64))
    }

    /// `N_{L/F_q}(c) = c · c^{[1]} ··· c^{[n-1]}`.
    pub fn norm(&self, c: &LElem) -> FqElem {
        let mut acc = c.clone();
        for i in 1..self.n {
            acc = self.mul(&acc, &self.frobenius(c, i as i64));
        }
        debug_assert!(self.is_in_fq(&acc));
        acc.0[0]
    }

    /// Minimal polynomial over F_q, from the first linear dependency among
    /// `1, c, c^2, ...`.
    pub fn minimal_polynomial(&self, c: &LElem) -> FqPoly {
        let mut echelon = IncrementalEchelon::new(self.n);
        let mut power = self.one();
        loop {
            if let Some(comb) = echelon.insert(&self.fq, &power.0) {
                // c^d = sum comb_i c^i
                let mut coeffs: Vec<FqElem> = comb.iter().map(|&x| self.fq.neg(x)).collect();
                coeffs.push(1);
                return FqPoly::new(coeffs);
            }
            power = self.mul(&power, c);
        }
    }

    /// Evaluates a polynomial over F_q at an element of L.
    pub fn eval_poly(&self, f: &FqPoly, c: &LElem) -> LElem {
        let mut acc = self.zero();
        for &coef in f.coeffs().iter().rev() {
            acc = self.mul(&acc, c);
            acc.0[0] = self.fq.add(acc.0[0], coef);
        }
        acc
    }

    pub fn display(&self, c: &LElem) -> String {
        c.to_poly().display("t", &self.fq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf8() -> FieldTower {
        FieldTower::from_parts(2, None, &[1, 1, 0, 1]).unwrap()
    }

    fn elem(tower: &FieldTower, c: &[u32]) -> LElem {
        tower.from_coeffs(c).unwrap()
    }

    #[test]
    fn worked_example_tower() {
        let tower = gf8();
        assert_eq!(tower.q(), 2);
        assert_eq!(tower.n(), 3);
        // t^2 = t^2
        assert_eq!(tower.frob_image().unwrap(), &elem(&tower, &[0, 0, 1]));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(
            FieldTower::from_parts(2, None, &[1, 0, 1]),
            Err(Error::Reducible(_))
        ));
        assert!(matches!(
            FieldTower::from_parts(4, None, &[1, 1, 1]),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            FieldTower::from_parts(3, None, &[1, 1, 2]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(FieldTower::from_parts(3, None, &[1]).is_err());
    }

    #[test]
    fn quadratic_over_f25_from_exhaustive_search() {
        // Oracle: the first monic quadratic over F_25 (in encoding order) without a root.
        let fq = Fq::extension(5, &[1, 1, 1]).unwrap();
        let (c0, c1) = (0..25u32)
            .flat_map(|b| (0..25u32).map(move |c| (c, b)))
            .find(|&(c, b)| (0..25).all(|x| FqPoly::new(vec![c, b, 1]).eval(x, &fq) != 0))
            .unwrap();
        let tower = FieldTower::from_parts(5, Some(&[1, 1, 1]), &[c0, c1, 1]).unwrap();
        assert_eq!(tower.q(), 25);
        assert_eq!(tower.n(), 2);
    }

    #[test]
    fn frobenius_examples() {
        let tower = gf8();
        let c = elem(&tower, &[1, 1]);
        assert_eq!(tower.frobenius(&c, 1), elem(&tower, &[1, 0, 1]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let c = tower.random(&mut rng);
            assert_eq!(tower.frobenius(&c, 3), c);
            assert_eq!(tower.frobenius(&tower.frobenius(&c, -2), 2), c);
        }
    }

    #[test]
    fn norm_examples() {
        let tower = gf8();
        assert_eq!(tower.norm(&tower.one()), 1);
        assert_eq!(tower.norm(&tower.generator()), 1);
        assert_eq!(tower.norm(&tower.zero()), 0);
    }

    #[test]
    fn minimal_polynomials() {
        let tower = gf8();
        let mp = tower.minimal_polynomial(&elem(&tower, &[1, 1]));
        assert_eq!(mp, FqPoly::new(vec![1, 0, 1, 1]));
        let five = FieldTower::from_parts(5, None, &[2, 4, 4, 0, 1]).unwrap();
        assert_eq!(
            five.minimal_polynomial(&five.from_fq(3)),
            FqPoly::new(vec![2, 1])
        );
        let gamma = five.from_coeffs(&[3, 1, 1, 1]).unwrap();
        assert_eq!(five.minimal_polynomial(&gamma), FqPoly::new(vec![2, 4, 1]));
    }
}
