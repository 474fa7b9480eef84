//! Characteristic polynomials of endomorphisms: build the matrix of `u` on
//! W_k-coefficient vectors, take its characteristic polynomial over W_k and
//! descend through χ_k.

mod descent;
mod matrices;
mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::field::{Fq, FqPoly};
use crate::linalg::{berkowitz_charpoly, Matrix};
use crate::skew::SkewPoly;
use crate::wk::{WkElem, WkRing};

pub use descent::{a0_prime_field, chi_k, hensel_lift_root};
pub use matrices::{
    b_matrix, companion_matrix, decompose_phi_basis, endo_matrix_banded, endo_matrix_euclidean,
    endo_matrix_recurrence, frobenius_matrix_bsgs, frobenius_matrix_plain, kappa_sequence, BsgsSplit,
    KappaVector,
};
pub use oracle::{charpoly_linear_system_oracle, degree_bounds, verify_charpoly};

/// How the matrix of the endomorphism is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Recurrence,
    Euclidean,
    /// Baby-step giant-step; only for the Frobenius endomorphism.
    Bsgs,
    /// Bsgs for τ^n, recurrence otherwise.
    Auto,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Recurrence,
        Algorithm::Euclidean,
        Algorithm::Bsgs,
        Algorithm::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recurrence => "recurrence",
            Algorithm::Euclidean => "euclidean",
            Algorithm::Bsgs => "bsgs",
            Algorithm::Auto => "auto",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharPolyOptions {
    /// Truncation order; `None` follows the [`PrecisionPlan`].
    pub k: Option<usize>,
    /// Reject `u` that does not commute with φ_x.
    pub check_endomorphism: bool,
}

impl Default for CharPolyOptions {
    fn default() -> Self {
        CharPolyOptions {
            k: None,
            check_endomorphism: true,
        }
    }
}

/// `Z^r + sum_{i<r} a_i Z^i` with `a_i` in F_q[x].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPolyResult {
    coeffs: Vec<FqPoly>,
}

impl CharPolyResult {
    /// From `a_0, ..., a_{r-1}`.
    pub fn new(coeffs: Vec<FqPoly>) -> Self {
        CharPolyResult { coeffs }
    }

    /// `a_0, ..., a_{r-1}`.
    pub fn coeffs(&self) -> &[FqPoly] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether `deg a_i <= d (r - i) / r` for all `i`.
    pub fn degree_bounds_hold(&self, d: usize) -> bool {
        let bounds = degree_bounds(d, self.rank());
        self.coeffs
            .iter()
            .zip(bounds)
            .all(|(a, b)| a.degree().is_none_or(|deg| deg <= b))
    }

    /// `Z^4 + x*Z^2 + x*Z + x^3 + x^2 + 1`.
    pub fn display(&self, fq: &Fq) -> String {
        let r = self.rank();
        let mut terms = vec![z_power(r)];
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = a.display("x", fq);
            terms.push(match i {
                0 => s,
                _ if a == &FqPoly::one() => z_power(i),
                _ if s.contains(' ') => format!("({s})*{}", z_power(i)),
                _ => format!("{s}*{}", z_power(i)),
            });
        }
        terms.join(" + ")
    }
}

fn z_power(i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => "Z".into(),
        _ => format!("Z^{i}"),
    }
}

/// Truncation order for an endomorphism of τ-degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionPlan {
    pub k: usize,
    pub d: usize,
    /// Prime field and `u = τ^n`: `k = 1` and `a_0` from the norm formula.
    pub shortcut: bool,
}

impl PrecisionPlan {
    pub fn new(module: &DrinfeldModule, u: &SkewPoly) -> Result<Self> {
        let d = u.degree().ok_or(Error::ZeroEndomorphism)?;
        let m = module.m();
        if module.is_prime_field() && module.is_frobenius(u) {
            return Ok(PrecisionPlan { k: 1, d, shortcut: true });
        }
        Ok(PrecisionPlan {
            k: (d + 1).div_ceil(m),
            d,
            shortcut: false,
        })
    }
}

/// The matrix of `u` over W_k by the requested method. `Auto` resolves as in
/// [`charpoly_endomorphism`].
pub fn endo_matrix(
    module: &DrinfeldModule,
    u: &SkewPoly,
    wk: &WkRing<'_>,
    algorithm: Algorithm,
) -> Result<Matrix<WkElem>> {
    let frob = module.is_frobenius(u);
    match resolve(algorithm, frob)? {
        Algorithm::Recurrence => Ok(endo_matrix_recurrence(module, u, wk)),
        Algorithm::Euclidean => endo_matrix_euclidean(module, u, wk),
        _ => frobenius_matrix_bsgs(module, wk),
    }
}

fn resolve(algorithm: Algorithm, frobenius: bool) -> Result<Algorithm> {
    match (algorithm, frobenius) {
        (Algorithm::Bsgs, false) => Err(Error::BsgsRequiresFrobenius),
        (Algorithm::Auto, true) => Ok(Algorithm::Bsgs),
        (Algorithm::Auto, false) => Ok(Algorithm::Recurrence),
        (a, _) => Ok(a),
    }
}

/// `CharPoly(u)` for an endomorphism `u` of φ.
pub fn charpoly_endomorphism(
    module: &DrinfeldModule,
    u: &SkewPoly,
    algorithm: Algorithm,
    options: CharPolyOptions,
) -> Result<CharPolyResult> {
    if u.is_zero() {
        return Err(Error::ZeroEndomorphism);
    }
    if options.check_endomorphism && !module.is_endomorphism(u) {
        return Err(Error::NotEndomorphism);
    }
    resolve(algorithm, module.is_frobenius(u))?;
    let plan = PrecisionPlan::new(module, u)?;
    let k = options.k.unwrap_or(plan.k);
    if k < plan.k {
        return Err(Error::PrecisionTooLow {
            requested: k,
            minimum: plan.k,
        });
    }
    let shortcut = plan.shortcut && k == 1;

    let tower = module.tower();
    let fq = tower.fq();
    let wk = WkRing::new(tower, module.gamma_x(), k)?;
    let matrix = endo_matrix(module, u, &wk, algorithm)?;
    let char_wk = berkowitz_charpoly(&wk, &matrix)?;
    let root = hensel_lift_root(module.p_poly(), k, fq)?;

    let r = module.rank();
    let bounds = degree_bounds(plan.d, r);
    let mut coeffs = Vec::with_capacity(r);
    for (i, c) in char_wk.iter().take(r).enumerate() {
        let a = if shortcut && i == 0 {
            a0_prime_field(module)?
        } else {
            chi_k(module, &wk, c, &root)
        };
        if a.degree().is_some_and(|deg| deg > bounds[i]) {
            return Err(Error::Internal(format!(
                "coefficient a_{i} has degree {:?} above the bound {}",
                a.degree(),
                bounds[i]
            )));
        }
        coeffs.push(a);
    }
    Ok(CharPolyResult::new(coeffs))
}

/// `CharPoly(τ^n)`.
pub fn charpoly_frobenius(module: &DrinfeldModule, algorithm: Algorithm) -> Result<CharPolyResult> {
    charpoly_endomorphism(
        module,
        &module.frobenius_endo(),
        algorithm,
        CharPolyOptions {
            k: None,
            check_endomorphism: false,
        },
    )
}
