//! Seeded generation of towers, Drinfeld modules and endomorphisms.

use std::sync::Arc;

use rand::Rng;

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::field::fq::prime_factors;
use crate::field::{FieldTower, Fq, FqPoly, LElem};
use crate::skew::{self, SkewPoly};

/// F_q for `q = p^e`, with the lexicographically first monic irreducible
/// defining polynomial when `e > 1`.
pub fn field_of_order(q: u32) -> Result<Fq> {
    let factors = prime_factors(q as u64);
    let [p] = factors[..] else {
        return Err(Error::Unsupported(format!("q = {q} is not a prime power")));
    };
    let mut e = 0;
    let mut rest = q as u64;
    while rest > 1 {
        rest /= p;
        e += 1;
    }
    let p = p as u32;
    if e == 1 {
        return Fq::prime(p);
    }
    let base = Fq::prime(p)?;
    let count = (p as u64).pow(e as u32);
    for idx in 0..count {
        let mut coeffs = digits(idx, p, e);
        coeffs.push(1);
        let f = FqPoly::new(coeffs);
        if f.is_irreducible(&base) {
            return Fq::extension(p, f.coeffs());
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {e} over F_{p}")))
}

fn digits(mut v: u64, base: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (v % base as u64) as u32;
            v /= base as u64;
            d
        })
        .collect()
}

/// Uniform monic irreducible polynomial of degree `n` over F_q, by rejection.
pub fn random_irreducible<R: Rng + ?Sized>(fq: &Fq, n: usize, rng: &mut R) -> FqPoly {
    loop {
        let mut coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..fq.q())).collect();
        coeffs.push(1);
        let f = FqPoly::new(coeffs);
        if f.is_irreducible(fq) {
            return f;
        }
    }
}

/// A random element of L whose minimal polynomial over F_q has degree exactly
/// `m`, as the trace to F_{q^m} of uniform elements, rejected until it generates.
pub fn random_gamma<R: Rng + ?Sized>(tower: &FieldTower, m: usize, rng: &mut R) -> Result<LElem> {
    let n = tower.n();
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Unsupported(format!("m = {m} must divide n = {n}")));
    }
    loop {
        let c = tower.random(rng);
        let trace = (0..n / m).fold(tower.zero(), |acc, i| {
            tower.add(&acc, &tower.frobenius(&c, (i * m) as i64))
        });
        if tower.minimal_polynomial(&trace).degree() == Some(m) {
            return Ok(trace);
        }
    }
}

/// A random rank-`r` module over a fresh random tower of degree `n` over `fq`,
/// with γ_x of degree `m`.
pub fn random_module<R: Rng + ?Sized>(fq: &Fq, n: usize, r: usize, m: usize, rng: &mut R) -> Result<DrinfeldModule> {
    if r == 0 {
        return Err(Error::EmptyDeltas);
    }
    let ell = random_irreducible(fq, n, rng);
    let tower = Arc::new(FieldTower::new(fq.clone(), ell)?);
    random_module_on(&tower, r, m, rng)
}

/// A random rank-`r` module on a given tower.
pub fn random_module_on<R: Rng + ?Sized>(
    tower: &Arc<FieldTower>,
    r: usize,
    m: usize,
    rng: &mut R,
) -> Result<DrinfeldModule> {
    let gamma = random_gamma(tower, m, rng)?;
    let mut deltas: Vec<LElem> = (0..r).map(|_| tower.random(rng)).collect();
    while deltas[r - 1].is_zero() {
        deltas[r - 1] = tower.random(rng);
    }
    DrinfeldModule::new(tower.clone(), gamma, deltas)
}

/// A random polynomial over F_q of degree at most `deg`.
pub fn random_fq_poly<R: Rng + ?Sized>(fq: &Fq, deg: usize, rng: &mut R) -> FqPoly {
    FqPoly::new((0..=deg).map(|_| rng.gen_range(0..fq.q())).collect())
}

/// Shapes of endomorphisms used for differential testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndoShape {
    Frobenius,
    /// φ_a for a random nonzero `a` of degree at most the given bound.
    Phi(usize),
    /// φ_a · τ^n.
    PhiTimesFrobenius(usize),
}

pub fn random_endomorphism<R: Rng + ?Sized>(module: &DrinfeldModule, shape: EndoShape, rng: &mut R) -> SkewPoly {
    let fq = module.tower().fq();
    let nonzero = |rng: &mut R, deg: usize| loop {
        let a = random_fq_poly(fq, deg, rng);
        if !a.is_zero() {
            return a;
        }
    };
    match shape {
        EndoShape::Frobenius => module.frobenius_endo(),
        EndoShape::Phi(deg) => module.phi_eval(&nonzero(rng, deg)),
        EndoShape::PhiTimesFrobenius(deg) => {
            let a = nonzero(rng, deg);
            skew::mul(module.tower(), &module.phi_eval(&a), &module.frobenius_endo())
        }
    }
}
