//! The base field F_q = F_p[z]/(f(z)).
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_0 + c_1 z + ...` is the canonical representative modulo `f`. For `e = 1`
//! this is just the residue modulo `p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::poly::FqPoly;

/// An element of F_q in base-`p` digit encoding.
pub type FqElem = u32;

/// Largest supported characteristic (products must fit comfortably in `u64`).
pub const MAX_PRIME: u32 = (1 << 31) - 1;
/// Largest supported non-prime field size; extension fields use log/exp tables.
pub const MAX_EXTENSION_ORDER: u32 = 1 << 20;
/// Extension fields up to this order also get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1 << 10;

#[derive(Clone)]
struct ExtTables {
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`, doubled to skip a reduction.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// The field F_q, either a prime field or `F_p[z]/(f)`.
#[derive(Clone)]
pub struct Fq {
    p: u32,
    e: usize,
    q: u32,
    /// Defining polynomial over F_p, monic, little-endian. `[0, 1]` for prime fields.
    modulus: Vec<u32>,
    tables: Option<ExtTables>,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fq")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Fq {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Fq {
    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p > MAX_PRIME {
            return Err(Error::Unsupported(format!("characteristic {p} exceeds 2^31 - 1")));
        }
        Ok(Fq {
            p,
            e: 1,
            q: p,
            modulus: vec![0, 1],
            tables: None,
        })
    }

    /// The extension F_p[z]/(f). `f` is little-endian over F_p and must be monic
    /// and irreducible. A degree-one `f` yields the prime field.
    pub fn extension(p: u32, f: &[u32]) -> Result<Self> {
        let base = Fq::prime(p)?;
        let fpoly = FqPoly::new(f.iter().map(|&c| c % p).collect());
        let e = match fpoly.degree() {
            None | Some(0) => {
                return Err(Error::InvalidModulus("f must have degree at least 1".into()))
            }
            Some(e) => e,
        };
        if fpoly.leading() != 1 {
            return Err(Error::InvalidModulus("f must be monic".into()));
        }
        if e == 1 {
            return Ok(base);
        }
        if !fpoly.is_irreducible(&base) {
            return Err(Error::Reducible("f".into()));
        }
        let q = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if q > MAX_EXTENSION_ORDER as u64 {
            return Err(Error::Unsupported(format!(
                "extension field order {p}^{e} exceeds {MAX_EXTENSION_ORDER}"
            )));
        }
        let mut fq = Fq {
            p,
            e,
            q: q as u32,
            modulus: fpoly.coeffs().to_vec(),
            tables: None,
        };
        fq.build_tables();
        Ok(fq)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let neg: Vec<u32> = (0..q).map(|a| self.neg_digits(a)).collect();
        let add = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(a, b);
                }
            }
            t
        });
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (2..q)
            .find(|&g| factors.iter().all(|&l| self.pow_digits(g, order / l) != 1))
            .unwrap_or(1);
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = cur;
            exp[i + (q - 1) as usize] = cur;
            log[cur as usize] = i as u32;
            cur = self.mul_digits(cur, generator);
        }
        self.tables = Some(ExtTables { exp, log, neg, add });
    }

    fn to_digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.e];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn pack_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let (mut r, mut pw) = (0u32, 1u32);
        for _ in 0..self.e {
            r += ((a % p + b % p) % p) * pw;
            pw = pw.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        r
    }

    fn neg_digits(&self, mut a: u32) -> u32 {
        let p = self.p;
        let (mut r, mut pw) = (0u32, 1u32);
        for _ in 0..self.e {
            r += ((p - a % p) % p) * pw;
            pw = pw.wrapping_mul(p);
            a /= p;
        }
        r
    }

    fn mul_digits(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let e = self.e;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for j in 0..e {
                let m = self.modulus[j] as u64;
                prod[d - e + j] = (prod[d - e + j] + (p - c) * m) % p;
            }
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.pack_digits(&digits)
    }

    fn pow_digits(&self, a: u32, mut exp: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_digits(acc, base);
            }
            base = self.mul_digits(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Degree of F_q over F_p.
    pub fn e(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial of F_q over F_p (little-endian, `[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        match &self.tables {
            None => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Some(t) => match &t.add {
                Some(add) => add[(a * self.q + b) as usize],
                None => self.add_digits(a, b),
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        match &self.tables {
            None => {
                if a == 0 {
                    0
                } else {
                    self.p - a
                }
            }
            Some(t) => t.neg[a as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        match &self.tables {
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
            Some(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            None => Some(self.pow(a, (self.p - 2) as u64)),
            Some(t) => {
                let l = t.log[a as usize];
                Some(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
            }
        }
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Option<FqElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FqElem, mut exp: u64) -> FqElem {
        let (mut base, mut acc) = (a, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FqElem {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Element with the given coefficients over F_p (little-endian in `z`).
    pub fn from_digits(&self, digits: &[u32]) -> Result<FqElem> {
        if digits.len() > self.e {
            return Err(Error::Malformed(format!(
                "F_q element has {} digits, expected at most {}",
                digits.len(),
                self.e
            )));
        }
        let mut d = vec![0u32; self.e];
        for (slot, &c) in d.iter_mut().zip(digits) {
            *slot = c % self.p;
        }
        Ok(self.pack_digits(&d))
    }

    /// Coefficients over F_p, little-endian, always of length `e`.
    pub fn digits(&self, a: FqElem) -> Vec<u32> {
        self.to_digits(a)
    }

    pub fn is_valid(&self, a: FqElem) -> bool {
        a < self.q
    }

    /// Human-readable form: an integer for prime fields, a polynomial in `z` otherwise.
    pub fn display(&self, a: FqElem) -> String {
        if self.e == 1 {
            return a.to_string();
        }
        FqPoly::new(self.to_digits(a)).display("z", &Fq::prime(self.p).expect("prime"))
    }

    pub(crate) fn lazy_accumulation(&self) -> bool {
        self.e == 1 && self.p < (1 << 16)
    }
}
