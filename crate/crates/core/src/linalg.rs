//! Dense matrices over a commutative ring, balanced chain products and
//! Berkowitz's division-free characteristic polynomial.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::field::{FieldTower, LElem};

/// A commutative ring whose elements need a context (the tower, a modulus, ...)
/// to be operated on.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

impl Ring for FieldTower {
    type Elem = LElem;

    fn zero(&self) -> LElem {
        FieldTower::zero(self)
    }

    fn one(&self) -> LElem {
        FieldTower::one(self)
    }

    fn add(&self, a: &LElem, b: &LElem) -> LElem {
        FieldTower::add(self, a, b)
    }

    fn sub(&self, a: &LElem, b: &LElem) -> LElem {
        FieldTower::sub(self, a, b)
    }

    fn neg(&self, a: &LElem) -> LElem {
        FieldTower::neg(self, a)
    }

    fn mul(&self, a: &LElem, b: &LElem) -> LElem {
        FieldTower::mul(self, a, b)
    }

    fn is_zero(&self, a: &LElem) -> bool {
        a.is_zero()
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| ring.zero())
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, size: usize) -> Self {
        Matrix::from_fn(size, size, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<F, T>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Sub-matrix of rows `r0..` and columns `c0..`.
    fn trailing(&self, r0: usize, c0: usize) -> Self {
        Matrix::from_fn(self.rows - r0, self.cols - c0, |i, j| self.get(i + r0, j + c0).clone())
    }
}

pub fn mat_add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} + {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| ring.add(x, y)).collect(),
    })
}

/// Schoolbook matrix product.
pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} * {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Matrix::zero(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if ring.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(l, j);
                if ring.is_zero(y) {
                    continue;
                }
                let cur = out.get(i, j);
                let v = ring.add(cur, &ring.mul(x, y));
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// Ordered product `M_s ··· M_1` of `matrices = [M_1, ..., M_s]`, computed by a
/// balanced product tree.
pub fn product_chain<R: Ring>(ring: &R, matrices: &[Matrix<R::Elem>]) -> Result<Matrix<R::Elem>> {
    match matrices {
        [] => Err(Error::EmptyChain),
        [single] => {
            if !single.is_square() {
                return Err(Error::DimensionMismatch("chain matrices must be square".into()));
            }
            Ok(single.clone())
        }
        _ => {
            let mid = matrices.len() / 2;
            let low = product_chain(ring, &matrices[..mid])?;
            let high = product_chain(ring, &matrices[mid..])?;
            mat_mul(ring, &high, &low)
        }
    }
}

/// `det(Z I - M)` as little-endian coefficients (length `size + 1`, monic),
/// by Berkowitz's algorithm. Uses only ring operations, so it is valid over
/// rings with zero divisors.
pub fn berkowitz_charpoly<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
    }
    let n = m.rows;
    // Descending coefficient vector of the trailing principal submatrix,
    // built from the bottom-right corner outwards.
    let mut vec = vec![ring.one()];
    for start in (0..n).rev() {
        let sub = m.trailing(start, start);
        let size = sub.rows;
        let a = sub.get(0, 0).clone();
        let row: Vec<R::Elem> = (1..size).map(|j| sub.get(0, j).clone()).collect();
        let inner = sub.trailing(1, 1);
        // diag[0] = 1, diag[1] = -a, diag[i+2] = -R A^i C
        let mut diag = vec![ring.one(), ring.neg(&a)];
        let mut col: Vec<R::Elem> = (1..size).map(|i| sub.get(i, 0).clone()).collect();
        for _ in 0..size.saturating_sub(1) {
            let dot = row
                .iter()
                .zip(&col)
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
            diag.push(ring.neg(&dot));
            col = (0..inner.rows)
                .map(|i| {
                    (0..inner.cols).fold(ring.zero(), |acc, j| {
                        ring.add(&acc, &ring.mul(inner.get(i, j), &col[j]))
                    })
                })
                .collect();
        }
        // Toeplitz (size+1) x size lower-triangular product with `vec`.
        let next: Vec<R::Elem> = (0..=size)
            .map(|i| {
                (0..size.min(i + 1)).fold(ring.zero(), |acc, j| match vec.get(j) {
                    Some(v) => ring.add(&acc, &ring.mul(&diag[i - j], v)),
                    None => acc,
                })
            })
            .collect();
        vec = next;
    }
    vec.reverse();
    Ok(vec)
}

/// Evaluates a polynomial (little-endian coefficients) at a square matrix.
pub fn eval_poly_at_matrix<R: Ring>(
    ring: &R,
    coeffs: &[R::Elem],
    m: &Matrix<R::Elem>,
) -> Result<Matrix<R::Elem>> {
    let n = m.rows;
    let mut acc = Matrix::zero(ring, n, n);
    for c in coeffs.iter().rev() {
        acc = mat_mul(ring, &acc, m)?;
        for i in 0..n {
            let v = ring.add(acc.get(i, i), c);
            acc.set(i, i, v);
        }
    }
    Ok(acc)
}

/// `det(Z I - M)` by summing over all permutations. Exponential; an oracle
/// for small matrices only.
pub fn leibniz_charpoly<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let size = m.rows();
    let entry = |i: usize, j: usize| -> Vec<R::Elem> {
        let neg = ring.neg(m.get(i, j));
        if i == j {
            vec![neg, ring.one()]
        } else {
            vec![neg]
        }
    };
    let poly_mul = |a: &[R::Elem], b: &[R::Elem]| -> Vec<R::Elem> {
        let mut out = vec![ring.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
            }
        }
        out
    };
    let mut total = vec![ring.zero(); size + 1];
    for perm in permutations(size) {
        let mut term = vec![ring.one()];
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j));
        }
        let odd = inversions(&perm) % 2 == 1;
        for (slot, c) in total.iter_mut().zip(term) {
            *slot = if odd { ring.sub(slot, &c) } else { ring.add(slot, &c) };
        }
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fq;

    /// F_q viewed as a ring, for small hand-checkable cases.
    struct Scalars(Fq);

    impl Ring for Scalars {
        type Elem = u32;
        fn zero(&self) -> u32 {
            0
        }
        fn one(&self) -> u32 {
            1
        }
        fn add(&self, a: &u32, b: &u32) -> u32 {
            self.0.add(*a, *b)
        }
        fn sub(&self, a: &u32, b: &u32) -> u32 {
            self.0.sub(*a, *b)
        }
        fn neg(&self, a: &u32) -> u32 {
            self.0.neg(*a)
        }
        fn mul(&self, a: &u32, b: &u32) -> u32 {
            self.0.mul(*a, *b)
        }
        fn is_zero(&self, a: &u32) -> bool {
            *a == 0
        }
    }

    #[test]
    fn identity_charpoly_is_binomial() {
        let ring = Scalars(Fq::prime(7).unwrap());
        let id = Matrix::identity(&ring, 4);
        // (Z - 1)^4 = Z^4 - 4Z^3 + 6Z^2 - 4Z + 1
        assert_eq!(berkowitz_charpoly(&ring, &id).unwrap(), vec![1, 3, 6, 3, 1]);
    }

    #[test]
    fn two_by_two_trace_and_determinant() {
        let ring = Scalars(Fq::prime(11).unwrap());
        let m = Matrix::from_rows(vec![vec![2, 3], vec![5, 7]]).unwrap();
        // Z^2 - 9 Z + (14 - 15)
        assert_eq!(berkowitz_charpoly(&ring, &m).unwrap(), vec![10, 2, 1]);
        let zero = eval_poly_at_matrix(&ring, &[10, 2, 1], &m).unwrap();
        assert_eq!(zero, Matrix::zero(&ring, 2, 2));
    }

    #[test]
    fn products_and_errors() {
        let ring = Scalars(Fq::prime(5).unwrap());
        let m = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let id = Matrix::identity(&ring, 2);
        assert_eq!(mat_mul(&ring, &m, &id).unwrap(), m);
        assert_eq!(mat_mul(&ring, &m, &Matrix::zero(&ring, 2, 2)).unwrap(), Matrix::zero(&ring, 2, 2));
        let wide = Matrix::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert!(mat_mul(&ring, &wide, &wide).is_err());
        assert_eq!(product_chain(&ring, &[]), Err(Error::EmptyChain));
        assert_eq!(product_chain(&ring, std::slice::from_ref(&m)).unwrap(), m);
        let chain = vec![m.clone(), id.clone(), m.clone()];
        assert_eq!(product_chain(&ring, &chain).unwrap(), mat_mul(&ring, &m, &m).unwrap());
        assert!(berkowitz_charpoly(&ring, &wide).is_err());
    }
}
