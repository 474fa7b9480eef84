//! Bringing coefficients from W_k back to F_q[x].

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::field::{Fq, FqPoly};
use crate::wk::{WkElem, WkRing};

/// The root `x̂` of 𝔭 in `F_q[y]/𝔭(y)^k` lifting `y mod 𝔭`, by Newton iteration.
pub fn hensel_lift_root(p_poly: &FqPoly, k: usize, fq: &Fq) -> Result<FqPoly> {
    let modulus = pow_poly(p_poly, k, fq);
    let deriv = p_poly.derivative(fq);
    let mut root = FqPoly::x().rem(&modulus, fq);
    let mut precision = 1usize;
    while precision < k {
        let value = p_poly.compose_mod(&root, &modulus, fq);
        let slope = deriv.compose_mod(&root, &modulus, fq);
        let inv = slope
            .inv_mod(&modulus, fq)
            .ok_or_else(|| Error::Internal("𝔭 is not separable".into()))?;
        root = root.sub(&value.mulmod(&inv, &modulus, fq), fq);
        precision *= 2;
    }
    if !p_poly.compose_mod(&root, &modulus, fq).is_zero() {
        return Err(Error::Internal("Hensel lifting did not converge".into()));
    }
    Ok(root)
}

pub(crate) fn pow_poly(f: &FqPoly, k: usize, fq: &Fq) -> FqPoly {
    (0..k).fold(FqPoly::one(), |acc, _| acc.mul(f, fq))
}

/// χ_k: W_k → F_q[y]/𝔭(y)^k. Each y-coefficient goes through α, only the
/// `t^0` part survives, and `x` is replaced by `x̂`.
pub fn chi_k(module: &DrinfeldModule, wk: &WkRing<'_>, c: &WkElem, root: &FqPoly) -> FqPoly {
    let tower = module.tower();
    let fq = tower.fq();
    let decomp = module.decomposition();
    let modulus = pow_poly(module.p_poly(), wk.k(), fq);
    let mut acc = FqPoly::zero();
    for cj in c.coeffs().iter().rev() {
        acc = acc.shift(1).rem(&modulus, fq);
        if !cj.is_zero() {
            let h0 = decomp.alpha(tower, cj).into_iter().next().unwrap_or_else(FqPoly::zero);
            acc = acc.add(&h0.compose_mod(root, &modulus, fq), fq);
        }
    }
    acc
}

/// `a_0` of the Frobenius characteristic polynomial in the prime-field case,
/// `(-1)^{n(r+1)+r} N(Δ_r)^{-1} 𝔭`.
pub fn a0_prime_field(module: &DrinfeldModule) -> Result<FqPoly> {
    if !module.is_prime_field() {
        return Err(Error::NotPrimeFieldCase);
    }
    let tower = module.tower();
    let fq = tower.fq();
    let n = tower.n();
    let r = module.rank();
    let norm = tower.norm(module.delta(r));
    let mut c = fq.inv(norm).ok_or(Error::ZeroLeadingDelta)?;
    if (n * (r + 1) + r) % 2 == 1 {
        c = fq.neg(c);
    }
    Ok(module.p_poly().scale(c, fq))
}
