//! The bivariate model `L ≃ F_q[x, t]/(𝔭(x), g(x, t))` attached to an element
//! γ of L, where 𝔭 is the minimal polynomial of γ and `x` maps to γ.

use crate::field::fq::FqElem;
use crate::field::linsolve;
use crate::field::poly::FqPoly;
use crate::field::tower::{FieldTower, LElem};

/// A polynomial in `t` whose coefficients are polynomials in `x` of degree `< m`,
/// little-endian in `t`.
pub type Bivariate = Vec<FqPoly>;

#[derive(Debug, Clone)]
pub struct SubfieldDecomposition {
    m: usize,
    rel_degree: usize,
    p_poly: FqPoly,
    /// `g_0, ..., g_{n/m}` with `g = sum g_j(x) t^j` and `g_{n/m} = 1`.
    g: Bivariate,
    gamma: LElem,
    /// Column `j'·m + i` holds the coordinates of `γ^i t^{j'}` in the `t`-basis.
    basis: Vec<Vec<FqElem>>,
    basis_inv: Vec<Vec<FqElem>>,
}

impl SubfieldDecomposition {
    pub fn new(tower: &FieldTower, gamma: &LElem) -> Self {
        let f = tower.fq();
        let n = tower.n();
        let p_poly = tower.minimal_polynomial(gamma);
        let m = p_poly.degree().expect("minimal polynomial is nonzero");
        let rel_degree = n / m;
        let mut columns = Vec::with_capacity(n);
        let mut t_power = tower.one();
        for _ in 0..rel_degree {
            let mut cur = t_power.clone();
            for _ in 0..m {
                columns.push(cur.coeffs().to_vec());
                cur = tower.mul(&cur, gamma);
            }
            t_power = tower.mul(&t_power, &tower.generator());
        }
        let basis: Vec<Vec<FqElem>> = (0..n)
            .map(|row| columns.iter().map(|col| col[row]).collect())
            .collect();
        let basis_inv = linsolve::inverse(f, &basis).expect("γ^i t^j basis is invertible");
        let mut decomp = SubfieldDecomposition {
            m,
            rel_degree,
            p_poly,
            g: Vec::new(),
            gamma: gamma.clone(),
            basis,
            basis_inv,
        };
        let top = decomp.alpha(tower, &t_power);
        let mut g: Bivariate = top.iter().map(|h| h.neg(f)).collect();
        g.push(FqPoly::one());
        decomp.g = g;
        decomp
    }

    /// Degree of 𝔭.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `n / m`, the degree of `g` in `t`.
    pub fn rel_degree(&self) -> usize {
        self.rel_degree
    }

    /// The minimal polynomial 𝔭 of γ.
    pub fn p_poly(&self) -> &FqPoly {
        &self.p_poly
    }

    pub fn g(&self) -> &Bivariate {
        &self.g
    }

    pub fn gamma(&self) -> &LElem {
        &self.gamma
    }

    pub fn basis_matrix(&self) -> &[Vec<FqElem>] {
        &self.basis
    }

    pub fn basis_matrix_inv(&self) -> &[Vec<FqElem>] {
        &self.basis_inv
    }

    /// α: coordinates of `c` as `sum_{j'} h_{j'}(x) t^{j'}` with `deg h_{j'} < m`.
    pub fn alpha(&self, tower: &FieldTower, c: &LElem) -> Bivariate {
        let coords = linsolve::mat_vec(tower.fq(), &self.basis_inv, c.coeffs());
        coords
            .chunks(self.m)
            .map(|chunk| FqPoly::new(chunk.to_vec()))
            .collect()
    }

    /// α⁻¹.
    pub fn alpha_inv(&self, tower: &FieldTower, h: &Bivariate) -> LElem {
        let mut coords = vec![0; tower.n()];
        for (j, hj) in h.iter().enumerate().take(self.rel_degree) {
            for i in 0..self.m {
                coords[j * self.m + i] = hj.coeff(i);
            }
        }
        let v = linsolve::mat_vec(tower.fq(), &self.basis, &coords);
        LElem(v)
    }
}
