//! The skew polynomial ring L{τ} with `τ c = c^q τ`.

use crate::error::{Error, Result};
use crate::field::{FieldTower, LElem};

/// `sum c_i τ^i`, trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    coeffs: Vec<LElem>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<LElem>) -> Self {
        while coeffs.last().is_some_and(LElem::is_zero) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: LElem) -> Self {
        SkewPoly::new(vec![c])
    }

    pub fn one(tower: &FieldTower) -> Self {
        SkewPoly::constant(tower.one())
    }

    /// `c τ^i`.
    pub fn monomial(tower: &FieldTower, c: LElem, i: usize) -> Self {
        let mut v = vec![tower.zero(); i];
        v.push(c);
        SkewPoly::new(v)
    }

    /// `τ^i`.
    pub fn tau_pow(tower: &FieldTower, i: usize) -> Self {
        SkewPoly::monomial(tower, tower.one(), i)
    }

    pub fn coeffs(&self) -> &[LElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, tower: &FieldTower) -> LElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| tower.zero())
    }

    /// τ-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&LElem> {
        self.coeffs.last()
    }

    /// Whether this is exactly `τ^i`.
    pub fn is_tau_pow(&self, tower: &FieldTower, i: usize) -> bool {
        self.coeffs.len() == i + 1
            && self.coeffs[i] == tower.one()
            && self.coeffs[..i].iter().all(LElem::is_zero)
    }

    pub fn add(&self, other: &Self, tower: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::new(
            (0..n)
                .map(|i| tower.add(&self.coeff(i, tower), &other.coeff(i, tower)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, tower: &FieldTower) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::new(
            (0..n)
                .map(|i| tower.sub(&self.coeff(i, tower), &other.coeff(i, tower)))
                .collect(),
        )
    }

    /// Left multiplication by a scalar: `c · self`.
    pub fn scale_left(&self, c: &LElem, tower: &FieldTower) -> Self {
        SkewPoly::new(self.coeffs.iter().map(|a| tower.mul(c, a)).collect())
    }

    /// Coefficient-wise Frobenius twist `sum c_i^{[t]} τ^i`.
    pub fn twist(&self, t: i64, tower: &FieldTower) -> Self {
        SkewPoly::new(self.coeffs.iter().map(|c| tower.frobenius(c, t)).collect())
    }

    /// Formats as `t*τ^4 + (t^2 + t)*τ^3 + ... + t + 1`.
    pub fn display(&self, tower: &FieldTower) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let raw = tower.display(c);
            if i == 0 {
                terms.push(raw);
                continue;
            }
            let cs = if raw.contains(' ') { format!("({raw})") } else { raw };
            let mono = match i {
                1 => "τ".to_string(),
                _ => format!("τ^{i}"),
            };
            terms.push(match cs.as_str() {
                "1" => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

/// Product in L{τ}: `(sum f_i τ^i)(sum g_j τ^j) = sum f_i g_j^{[i]} τ^{i+j}`.
pub fn mul(tower: &FieldTower, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
    if f.is_zero() || g.is_zero() {
        return SkewPoly::zero();
    }
    let mut out = vec![tower.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, fi) in f.coeffs.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        for (j, gj) in g.coeffs.iter().enumerate() {
            if gj.is_zero() {
                continue;
            }
            let term = tower.mul(fi, &tower.frobenius(gj, i as i64));
            out[i + j] = tower.add(&out[i + j], &term);
        }
    }
    SkewPoly::new(out)
}

/// Right Euclidean division: `f = quotient · g + remainder` with
/// `deg remainder < deg g`.
pub fn right_divmod(tower: &FieldTower, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
    let dg = g.degree().ok_or(Error::DivisionByZero)?;
    let lc_inv = tower.inv(g.leading().expect("nonzero")).expect("nonzero leading coefficient");
    let mut rem = f.coeffs.clone();
    if rem.len() <= dg {
        return Ok((SkewPoly::zero(), f.clone()));
    }
    let mut quot = vec![tower.zero(); rem.len() - dg];
    for top in (dg..rem.len()).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let s = top - dg;
        // c τ^s g has leading coefficient c · lc(g)^{[s]}
        let c = tower.mul(&rem[top], &tower.frobenius(&lc_inv, s as i64));
        for (j, gj) in g.coeffs.iter().enumerate().take(dg) {
            if gj.is_zero() {
                continue;
            }
            let term = tower.mul(&c, &tower.frobenius(gj, s as i64));
            rem[s + j] = tower.sub(&rem[s + j], &term);
        }
        rem[top] = tower.zero();
        quot[s] = c;
    }
    rem.truncate(dg);
    Ok((SkewPoly::new(quot), SkewPoly::new(rem)))
}

/// `f^e` by binary powering; `f^0 = 1`.
pub fn pow(tower: &FieldTower, f: &SkewPoly, mut e: u64) -> SkewPoly {
    let mut base = f.clone();
    let mut acc = SkewPoly::one(tower);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(tower, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(tower, &base, &base);
        }
    }
    acc
}
