//! Independent checks on characteristic polynomials.

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::field::linsolve::{self, LinearSolution};
use crate::field::{FqElem, FqPoly};
use crate::skew::{self, SkewPoly};

use super::CharPolyResult;

/// Whether `u^r + sum_i φ_{a_i} u^i = 0` in L{τ}.
pub fn verify_charpoly(module: &DrinfeldModule, u: &SkewPoly, result: &CharPolyResult) -> bool {
    let t = module.tower();
    let r = module.rank();
    if result.coeffs().len() != r {
        return false;
    }
    let mut power = SkewPoly::one(t);
    let mut acc = SkewPoly::zero();
    for a in result.coeffs() {
        acc = acc.add(&skew::mul(t, &module.phi_eval(a), &power), t);
        power = skew::mul(t, &power, u);
    }
    acc.add(&power, t).is_zero()
}

/// Degree bounds `floor(d (r - i) / r)` on `a_0, ..., a_{r-1}` for an
/// endomorphism of τ-degree `d`.
pub fn degree_bounds(d: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| d * (r - i) / r).collect()
}

/// Solves for the characteristic polynomial as an F_q-linear system in the
/// unknown coefficients `a_{i,j}`, from `u^r + sum a_{i,j} φ_{x^j} u^i = 0`.
///
/// Returns `Ok(None)` when the solution is not unique. An inconsistent system
/// is reported as an internal error.
pub fn charpoly_linear_system_oracle(module: &DrinfeldModule, u: &SkewPoly) -> Result<Option<CharPolyResult>> {
    let t = module.tower();
    let fq = t.fq();
    let n = t.n();
    let r = module.rank();
    let d = u.degree().ok_or(Error::ZeroEndomorphism)?;
    let bounds = degree_bounds(d, r);
    let phi_powers = module.phi_x_powers_recurrence(bounds[0]);
    let mut u_powers = vec![SkewPoly::one(t)];
    for _ in 0..r {
        let next = skew::mul(t, u_powers.last().expect("nonempty"), u);
        u_powers.push(next);
    }

    let rows = (r * d + 1) * n;
    let flatten = |f: &SkewPoly| -> Vec<FqElem> {
        let mut v = vec![0; rows];
        for (deg, c) in f.coeffs().iter().enumerate() {
            v[deg * n..(deg + 1) * n].copy_from_slice(c.coeffs());
        }
        v
    };

    let mut columns: Vec<Vec<FqElem>> = Vec::new();
    for (i, &b) in bounds.iter().enumerate() {
        for phi in phi_powers.iter().take(b + 1) {
            columns.push(flatten(&skew::mul(t, phi, &u_powers[i])));
        }
    }
    let rhs: Vec<FqElem> = flatten(&u_powers[r]).into_iter().map(|c| fq.neg(c)).collect();
    let matrix: Vec<Vec<FqElem>> = (0..rows)
        .map(|row| columns.iter().map(|col| col[row]).collect())
        .collect();

    match linsolve::solve(fq, &matrix, &rhs) {
        LinearSolution::Unique(sol) => {
            let mut coeffs = Vec::with_capacity(r);
            let mut offset = 0;
            for &b in &bounds {
                coeffs.push(FqPoly::new(sol[offset..offset + b + 1].to_vec()));
                offset += b + 1;
            }
            Ok(Some(CharPolyResult::new(coeffs)))
        }
        LinearSolution::NotUnique => Ok(None),
        LinearSolution::Inconsistent => Err(Error::Internal(
            "characteristic polynomial system is inconsistent".into(),
        )),
    }
}
