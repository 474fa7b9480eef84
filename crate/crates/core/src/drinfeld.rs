//! Drinfeld modules `φ: F_q[x] -> L{τ}` of rank `r`, given by
//! `φ_x = γ_x + Δ_1 τ + ... + Δ_r τ^r`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldTower, FqPoly, LElem, SubfieldDecomposition};
use crate::skew::{self, SkewPoly};

#[derive(Debug, Clone)]
pub struct DrinfeldModule {
    tower: Arc<FieldTower>,
    gamma_x: LElem,
    /// Δ_1, ..., Δ_r.
    deltas: Vec<LElem>,
    phi_x: SkewPoly,
    decomp: SubfieldDecomposition,
}

impl DrinfeldModule {
    pub fn new(tower: Arc<FieldTower>, gamma_x: LElem, deltas: Vec<LElem>) -> Result<Self> {
        let last = deltas.last().ok_or(Error::EmptyDeltas)?;
        if last.is_zero() {
            return Err(Error::ZeroLeadingDelta);
        }
        let n = tower.n();
        if gamma_x.coeffs().len() != n || deltas.iter().any(|d| d.coeffs().len() != n) {
            return Err(Error::Malformed("element of L with wrong length".into()));
        }
        let mut coeffs = vec![gamma_x.clone()];
        coeffs.extend(deltas.iter().cloned());
        let phi_x = SkewPoly::new(coeffs);
        let decomp = SubfieldDecomposition::new(&tower, &gamma_x);
        Ok(DrinfeldModule {
            tower,
            gamma_x,
            deltas,
            phi_x,
            decomp,
        })
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn tower_arc(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn rank(&self) -> usize {
        self.deltas.len()
    }

    pub fn gamma_x(&self) -> &LElem {
        &self.gamma_x
    }

    /// Δ_1, ..., Δ_r.
    pub fn deltas(&self) -> &[LElem] {
        &self.deltas
    }

    /// Δ_i with the convention Δ_0 = γ_x.
    pub fn delta(&self, i: usize) -> &LElem {
        if i == 0 {
            &self.gamma_x
        } else {
            &self.deltas[i - 1]
        }
    }

    /// Λ_i = -Δ_i / Δ_r for `0 <= i < r`.
    pub fn lambda(&self, i: usize) -> LElem {
        let t = &*self.tower;
        let q = t.div(self.delta(i), self.delta(self.rank())).expect("Δ_r != 0");
        t.neg(&q)
    }

    pub fn phi_x(&self) -> &SkewPoly {
        &self.phi_x
    }

    pub fn decomposition(&self) -> &SubfieldDecomposition {
        &self.decomp
    }

    /// Degree of 𝔭.
    pub fn m(&self) -> usize {
        self.decomp.m()
    }

    /// The characteristic 𝔭 of the module (minimal polynomial of γ_x).
    pub fn p_poly(&self) -> &FqPoly {
        self.decomp.p_poly()
    }

    pub fn is_prime_field(&self) -> bool {
        self.m() == self.tower.n()
    }

    /// φ_a by Horner's rule in φ_x.
    pub fn phi_eval(&self, a: &FqPoly) -> SkewPoly {
        let t = &*self.tower;
        let mut acc = SkewPoly::zero();
        for &c in a.coeffs().iter().rev() {
            acc = skew::mul(t, &acc, &self.phi_x).add(&SkewPoly::constant(t.from_fq(c)), t);
        }
        acc
    }

    /// φ_{x^i} for `i = 0..=max`, coefficient by coefficient from
    /// `f_{i+1,j} = sum_{s=0}^{r} Δ_s^{[j-s]} f_{i,j-s}` (with Δ_0 = γ_x).
    pub fn phi_x_powers_recurrence(&self, max: usize) -> Vec<SkewPoly> {
        let t = &*self.tower;
        let r = self.rank();
        let mut out = vec![SkewPoly::one(t)];
        let mut cur: Vec<LElem> = vec![t.one()];
        for _ in 0..max {
            let len = cur.len() + r;
            let mut next = vec![t.zero(); len];
            for (j, slot) in next.iter_mut().enumerate() {
                for s in 0..=r.min(j) {
                    let Some(prev) = cur.get(j - s) else { continue };
                    if prev.is_zero() {
                        continue;
                    }
                    let d = t.frobenius(self.delta(s), (j - s) as i64);
                    *slot = t.add(slot, &t.mul(&d, prev));
                }
            }
            out.push(SkewPoly::new(next.clone()));
            cur = next;
        }
        out
    }

    /// φ_a assembled from the recurrence for the φ_{x^i}.
    pub fn phi_eval_recurrence(&self, a: &FqPoly) -> SkewPoly {
        let t = &*self.tower;
        let Some(deg) = a.degree() else {
            return SkewPoly::zero();
        };
        let powers = self.phi_x_powers_recurrence(deg);
        powers
            .iter()
            .zip(a.coeffs())
            .fold(SkewPoly::zero(), |acc, (p, &c)| {
                acc.add(&p.scale_left(&t.from_fq(c), t), t)
            })
    }

    /// Whether `u` commutes with φ_x.
    pub fn is_endomorphism(&self, u: &SkewPoly) -> bool {
        let t = &*self.tower;
        skew::mul(t, u, &self.phi_x) == skew::mul(t, &self.phi_x, u)
    }

    /// τ^n.
    pub fn frobenius_endo(&self) -> SkewPoly {
        SkewPoly::tau_pow(&self.tower, self.tower.n())
    }

    pub fn is_frobenius(&self, u: &SkewPoly) -> bool {
        u.is_tau_pow(&self.tower, self.tower.n())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// q = 2, ℓ = t^3 + t + 1, φ_x = t τ^4 + (t^2 + t) τ^3 + τ^2 + t^2 τ + t + 1.
    pub(crate) fn worked_example() -> DrinfeldModule {
        let tower = Arc::new(FieldTower::from_parts(2, None, &[1, 1, 0, 1]).unwrap());
        let e = |c: &[u32]| tower.from_coeffs(c).unwrap();
        let deltas = vec![e(&[0, 0, 1]), e(&[1]), e(&[0, 1, 1]), e(&[0, 1])];
        DrinfeldModule::new(tower.clone(), e(&[1, 1]), deltas).unwrap()
    }

    /// q = 5, ℓ = t^4 + 4t^2 + 4t + 2, rank 5.
    pub(crate) fn rank_five_example() -> DrinfeldModule {
        let tower = Arc::new(FieldTower::from_parts(5, None, &[2, 4, 4, 0, 1]).unwrap());
        let e = |c: &[u32]| tower.from_coeffs(c).unwrap();
        let deltas = vec![
            e(&[0, 4, 4, 4]),
            e(&[4, 4, 3]),
            e(&[3, 4]),
            e(&[1, 1, 3, 1]),
            e(&[2, 0, 1, 4]),
        ];
        DrinfeldModule::new(tower.clone(), e(&[1, 1, 4, 1]), deltas).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::worked_example;
    use super::*;

    #[test]
    fn worked_example_module() {
        let m = worked_example();
        assert_eq!(m.rank(), 4);
        assert_eq!(m.m(), 3);
        assert!(m.is_prime_field());
        assert_eq!(m.p_poly(), &FqPoly::new(vec![1, 0, 1, 1]));
        assert_eq!(
            m.phi_x().display(m.tower()),
            "t*τ^4 + (t^2 + t)*τ^3 + τ^2 + t^2*τ + t + 1"
        );
    }

    #[test]
    fn rejects_zero_leading_delta() {
        let tower = Arc::new(FieldTower::from_parts(2, None, &[1, 1, 0, 1]).unwrap());
        let g = tower.generator();
        assert_eq!(
            DrinfeldModule::new(tower.clone(), g.clone(), vec![g.clone(), tower.zero()]).unwrap_err(),
            Error::ZeroLeadingDelta
        );
        assert_eq!(
            DrinfeldModule::new(tower, g, vec![]).unwrap_err(),
            Error::EmptyDeltas
        );
    }

    #[test]
    fn phi_eval_small_cases() {
        let m = worked_example();
        let t = m.tower();
        assert_eq!(m.phi_eval(&FqPoly::x()), *m.phi_x());
        assert_eq!(m.phi_eval(&FqPoly::one()), SkewPoly::one(t));
        let x2 = FqPoly::monomial(1, 2);
        let sq = skew::mul(t, m.phi_x(), m.phi_x());
        assert_eq!(m.phi_eval(&x2), sq);
        assert_eq!(m.phi_eval_recurrence(&x2), sq);
    }

    #[test]
    fn endomorphism_membership() {
        let m = worked_example();
        let t = m.tower();
        assert!(m.is_endomorphism(&m.frobenius_endo()));
        assert!(m.is_endomorphism(&m.phi_eval(&FqPoly::new(vec![1, 1, 1]))));
        assert!(!m.is_endomorphism(&SkewPoly::tau_pow(t, 1)));
        assert_eq!(m.frobenius_endo().degree(), Some(3));
    }
}
