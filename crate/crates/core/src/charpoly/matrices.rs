//! Matrices of endomorphisms acting on `L{τ}τ / I^k`, on the basis
//! `τ^r, ..., τ^1` (descending order: index `a` stands for `τ^{r-a}`).
//!
//! Row `a` of an endomorphism matrix holds the coefficients of `τ^{r-a} u`.
//! With this ordering the stack `[κ_r; ...; κ_1]` is the identity and the
//! companion matrices chain without any reordering.

use crate::drinfeld::DrinfeldModule;
use crate::error::Result;
use crate::field::{FieldTower, LElem};
use crate::linalg::{mat_mul, product_chain, Matrix, Ring};
use crate::skew::{self, SkewPoly};
use crate::wk::{WkElem, WkRing, YPoly, YPolyRing};

/// A coefficient vector on `τ^r, ..., τ^1`.
pub type KappaVector = Vec<WkElem>;

/// Λ_0..Λ_{r-1} and Δ_r^{-1}, the data behind every companion matrix.
#[derive(Debug, Clone)]
pub struct CompanionData {
    lambdas: Vec<LElem>,
    inv_delta_r: LElem,
}

impl CompanionData {
    pub fn new(module: &DrinfeldModule) -> Self {
        let t = module.tower();
        let r = module.rank();
        CompanionData {
            lambdas: (0..r).map(|i| module.lambda(i)).collect(),
            inv_delta_r: t.inv(module.delta(r)).expect("Δ_r != 0"),
        }
    }

    fn rank(&self) -> usize {
        self.lambdas.len()
    }

    /// First row of `A_t` over W_k: `(Λ_{r-1}^{[t]}, ..., Λ_1^{[t]}, Λ_0^{[t]} + y/Δ_r^{[t]})`.
    fn first_row(&self, wk: &WkRing<'_>, t: i64) -> Vec<WkElem> {
        let tower = wk.tower();
        let r = self.rank();
        let twisted: Vec<LElem> = self.lambdas.iter().map(|l| tower.frobenius(l, t)).collect();
        let inv = tower.frobenius(&self.inv_delta_r, t);
        (0..r)
            .map(|c| {
                if c + 1 < r {
                    wk.from_l(&twisted[r - 1 - c])
                } else {
                    wk.reduce(&YPoly::new(vec![twisted[0].clone(), inv.clone()]))
                }
            })
            .collect()
    }

    /// `B^{[t]}` over L[y].
    fn twisted_b(&self, tower: &FieldTower, t: i64) -> Matrix<YPoly> {
        let r = self.rank();
        let mut m = Matrix::zero(&YPolyRing { tower }, r, r);
        for c in 0..r {
            let entry = if c + 1 < r {
                YPoly::constant(tower.frobenius(&self.lambdas[r - 1 - c], t))
            } else {
                YPoly::new(vec![
                    tower.frobenius(&self.lambdas[0], t),
                    tower.frobenius(&self.inv_delta_r, t),
                ])
            };
            m.set(0, c, entry);
        }
        for i in 1..r {
            m.set(i, i - 1, YPoly::constant(tower.one()));
        }
        m
    }
}

fn shifted_identity_rows<R: Ring>(ring: &R, first: Vec<R::Elem>) -> Matrix<R::Elem> {
    let r = first.len();
    let mut m = Matrix::zero(ring, r, r);
    for (c, v) in first.into_iter().enumerate() {
        m.set(0, c, v);
    }
    for i in 1..r {
        m.set(i, i - 1, ring.one());
    }
    m
}

/// The order-`t` companion matrix `A_t mod μ`.
pub fn companion_matrix(module: &DrinfeldModule, wk: &WkRing<'_>, t: i64) -> Matrix<WkElem> {
    let data = CompanionData::new(module);
    shifted_identity_rows(wk, data.first_row(wk, t))
}

/// `B^{[t]}` over L[y]; `B` has first row `(Λ_{r-1}, ..., Λ_1, Λ_0 + y/Δ_r)`.
pub fn b_matrix(module: &DrinfeldModule, t: i64) -> Matrix<YPoly> {
    CompanionData::new(module).twisted_b(module.tower(), t)
}

fn unit_vector(wk: &WkRing<'_>, r: usize, t: usize) -> KappaVector {
    (0..r)
        .map(|a| if a == r - t { wk.one() } else { wk.zero() })
        .collect()
}

/// κ̄_1, ..., κ̄_upto (index `t - 1` holds κ̄_t).
pub fn kappa_sequence(module: &DrinfeldModule, wk: &WkRing<'_>, upto: usize) -> Vec<KappaVector> {
    let r = module.rank();
    let data = CompanionData::new(module);
    let mut out: Vec<KappaVector> = (1..=r.min(upto)).map(|t| unit_vector(wk, r, t)).collect();
    for t in r + 1..=upto {
        let s = t - r;
        let row = data.first_row(wk, s as i64);
        // κ_t = sum_c row[c] κ_{s + r - 1 - c}
        let mut acc: KappaVector = vec![wk.zero(); r];
        for (c, coef) in row.iter().enumerate() {
            let prev = &out[s + r - 1 - c - 1];
            for (slot, v) in acc.iter_mut().zip(prev) {
                *slot = wk.add(slot, &wk.mul(coef, v));
            }
        }
        out.push(acc);
    }
    out
}

fn scale_l(wk: &WkRing<'_>, c: &LElem, v: &WkElem) -> WkElem {
    let t = wk.tower();
    wk.from_coeffs(v.coeffs().iter().map(|x| t.mul(c, x)).collect())
        .expect("same precision")
}

/// Matrix of `u` from the κ̄ recurrence: row for `τ^i u` is
/// `sum_j u_j^{[i]} κ̄_{i+j}`.
pub fn endo_matrix_recurrence(module: &DrinfeldModule, u: &SkewPoly, wk: &WkRing<'_>) -> Matrix<WkElem> {
    let t = module.tower();
    let r = module.rank();
    let d = u.degree().unwrap_or(0);
    let kappas = kappa_sequence(module, wk, d + r);
    let mut m = Matrix::zero(wk, r, r);
    for i in 1..=r {
        let mut row: KappaVector = vec![wk.zero(); r];
        for (j, uj) in u.coeffs().iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            let c = t.frobenius(uj, i as i64);
            for (slot, v) in row.iter_mut().zip(&kappas[i + j - 1]) {
                *slot = wk.add(slot, &scale_l(wk, &c, v));
            }
        }
        for (col, v) in row.into_iter().enumerate() {
            m.set(r - i, col, v);
        }
    }
    m
}

/// Same matrix as [`endo_matrix_recurrence`], written as the banded product
/// `U · K` with `U` the `r x (d+r)` matrix of twisted coefficients of `u` and
/// `K` the stack `κ̄_1, ..., κ̄_{d+r}`.
pub fn endo_matrix_banded(module: &DrinfeldModule, u: &SkewPoly, wk: &WkRing<'_>) -> Result<Matrix<WkElem>> {
    let t = module.tower();
    let r = module.rank();
    let d = u.degree().unwrap_or(0);
    let kappas = kappa_sequence(module, wk, d + r);
    let width = d + r;
    let banded = Matrix::from_fn(r, width, |a, col| {
        let i = r - a;
        match (col + 1).checked_sub(i) {
            Some(j) if j <= d => wk.from_l(&t.frobenius(&u.coeff(j, t), i as i64)),
            _ => wk.zero(),
        }
    });
    let stack = Matrix::from_rows(kappas)?;
    mat_mul(wk, &banded, &stack)
}

/// Powers `φ_x^{2^j}` for `j = 0..levels`.
fn phi_x_dyadic_powers(module: &DrinfeldModule, levels: usize) -> Vec<SkewPoly> {
    let t = module.tower();
    let mut out = vec![module.phi_x().clone()];
    for _ in 1..levels {
        let last = out.last().expect("nonempty");
        out.push(skew::mul(t, last, last));
    }
    out
}

fn decompose_rec(
    module: &DrinfeldModule,
    f: &SkewPoly,
    k: usize,
    powers: &[SkewPoly],
) -> Result<Vec<SkewPoly>> {
    if k == 1 {
        return Ok(vec![f.clone()]);
    }
    let half = k / 2;
    let divisor = &powers[half.trailing_zeros() as usize];
    let (quot, rem) = skew::right_divmod(module.tower(), f, divisor)?;
    let mut out = decompose_rec(module, &rem, half, powers)?;
    out.extend(decompose_rec(module, &quot, half, powers)?);
    Ok(out)
}

/// Writes `f = sum_i f_i φ_x^i` with every `deg f_i < r`, by divide and
/// conquer on right divisions by `φ_x^{K/2}`. Trailing zero parts are dropped
/// (at least one part is always returned).
pub fn decompose_phi_basis(module: &DrinfeldModule, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
    let r = module.rank();
    let d = f.degree().unwrap_or(0);
    let mut k = 1usize;
    while d >= k * r {
        k *= 2;
    }
    let levels = k.trailing_zeros() as usize;
    let powers = phi_x_dyadic_powers(module, levels.max(1));
    let mut parts = decompose_rec(module, f, k, &powers)?;
    while parts.len() > 1 && parts.last().is_some_and(SkewPoly::is_zero) {
        parts.pop();
    }
    Ok(parts)
}

/// Matrix of `u` by Euclidean division: for each `i`, `τ^i u = τ g`,
/// `g = sum g_s φ_x^s`, and the entry at `τ^j` is `sum_s (g_s^{[1]})_{j-1} y^s`.
pub fn endo_matrix_euclidean(module: &DrinfeldModule, u: &SkewPoly, wk: &WkRing<'_>) -> Result<Matrix<WkElem>> {
    let t = module.tower();
    let r = module.rank();
    let mut m = Matrix::zero(wk, r, r);
    for i in 1..=r {
        let f = skew::mul(t, &SkewPoly::tau_pow(t, i), u);
        // f = F τ with F_j = f_{j+1}; τ g = F τ for g = F^{[-1]}.
        let g = SkewPoly::new(f.coeffs().iter().skip(1).map(|c| t.frobenius(c, -1)).collect());
        let parts = decompose_phi_basis(module, &g)?;
        for j in 1..=r {
            let poly = YPoly::new(
                parts
                    .iter()
                    .map(|gs| t.frobenius(&gs.coeff(j - 1, t), 1))
                    .collect(),
            );
            m.set(r - i, r - j, wk.reduce(&poly));
        }
    }
    Ok(m)
}

/// Split of `n` used by the baby-step giant-step product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BsgsSplit {
    /// Baby-step length `n* = ceil(sqrt(n k))`.
    pub step: usize,
    /// Number of giant steps `n_1 = floor(n / n*)`.
    pub giants: usize,
    /// Remainder `n_0 = n mod n*`.
    pub rest: usize,
}

impl BsgsSplit {
    pub fn new(n: usize, k: usize) -> Self {
        let nk = n * k;
        let mut step = (nk as f64).sqrt() as usize;
        while step * step < nk {
            step += 1;
        }
        while step > 1 && (step - 1) * (step - 1) >= nk {
            step -= 1;
        }
        let step = step.max(1);
        BsgsSplit {
            step,
            giants: n / step,
            rest: n % step,
        }
    }
}

/// `Ā = Ā_n ··· Ā_1` for the Frobenius endomorphism by baby steps and giant
/// steps: one exact product `C = B^{[n*+n_0]} ··· B^{[n_0+1]}` over L[y], whose
/// Frobenius shifts `C^{[i n*]} mod μ` are obtained by reducing `C` modulo
/// `μ^{[-i n*]}` and twisting only the short remainders.
pub fn frobenius_matrix_bsgs(module: &DrinfeldModule, wk: &WkRing<'_>) -> Result<Matrix<WkElem>> {
    let tower = module.tower();
    let n = tower.n();
    let r = module.rank();
    let data = CompanionData::new(module);
    let split = BsgsSplit::new(n, wk.k());

    let c0 = if split.rest == 0 {
        Matrix::identity(wk, r)
    } else {
        let baby: Vec<Matrix<WkElem>> = (1..=split.rest)
            .map(|t| shifted_identity_rows(wk, data.first_row(wk, t as i64)))
            .collect();
        product_chain(wk, &baby)?
    };
    if split.giants == 0 {
        return Ok(c0);
    }

    let yring = YPolyRing { tower };
    let steps: Vec<Matrix<YPoly>> = (split.rest + 1..=split.rest + split.step)
        .map(|t| data.twisted_b(tower, t as i64))
        .collect();
    let giant = product_chain(&yring, &steps)?;

    let mut acc = c0;
    for i in 0..split.giants {
        let shift = (i * split.step) as i64;
        let shifted = if shift == 0 {
            giant.map(|e| wk.reduce(e))
        } else {
            let modulus = wk.shifted_modulus(shift);
            giant.map(|e| {
                let rem = e.rem_monic(&modulus, tower);
                wk.from_coeffs(rem.iter().map(|c| tower.frobenius(c, shift)).collect())
                    .expect("k coefficients")
            })
        };
        acc = mat_mul(wk, &shifted, &acc)?;
    }
    Ok(acc)
}

/// `Ā_n ··· Ā_1` by multiplying all companion matrices one after another.
pub fn frobenius_matrix_plain(module: &DrinfeldModule, wk: &WkRing<'_>) -> Result<Matrix<WkElem>> {
    let r = module.rank();
    let data = CompanionData::new(module);
    let mut acc = Matrix::identity(wk, r);
    for t in 1..=module.tower().n() {
        let a = shifted_identity_rows(wk, data.first_row(wk, t as i64));
        acc = mat_mul(wk, &a, &acc)?;
    }
    Ok(acc)
}
