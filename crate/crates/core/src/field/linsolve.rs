//! Gaussian elimination over F_q on dense row-major matrices.

use crate::field::fq::{Fq, FqElem};

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<FqElem>),
    /// Consistent, but the solution space has positive dimension.
    NotUnique,
    Inconsistent,
}

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in place,
/// considering only the first `pivot_cols` columns for pivots. Returns the pivot
/// column of each leading row.
fn rref(f: &Fq, rows: &mut [Vec<FqElem>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if pv != 0 {
                    *v = f.sub(*v, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &Fq, a: &[Vec<FqElem>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut rows = a.to_vec();
    rref(f, &mut rows, cols).len()
}

pub fn solve(f: &Fq, a: &[Vec<FqElem>], b: &[FqElem]) -> LinearSolution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<FqElem>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(f, &mut rows, cols);
    if rows[pivots.len()..].iter().any(|r| r[cols] != 0) {
        return LinearSolution::Inconsistent;
    }
    if pivots.len() < cols {
        return LinearSolution::NotUnique;
    }
    let mut x = vec![0; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols];
    }
    LinearSolution::Unique(x)
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(f: &Fq, a: &[Vec<FqElem>]) -> Option<Vec<Vec<FqElem>>> {
    let n = a.len();
    let mut rows: Vec<Vec<FqElem>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    if rref(f, &mut rows, n).len() < n {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(f: &Fq, a: &[Vec<FqElem>], v: &[FqElem]) -> Vec<FqElem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

/// Incrementally maintained echelon basis that records, for every stored vector,
/// how it was obtained from the inserted vectors. Used to detect the first linear
/// dependency in a Krylov sequence.
#[derive(Debug, Clone)]
pub struct IncrementalEchelon {
    dim: usize,
    /// (pivot column, normalized vector, combination of inserted vectors)
    rows: Vec<(usize, Vec<FqElem>, Vec<FqElem>)>,
    inserted: usize,
}

impl IncrementalEchelon {
    pub fn new(dim: usize) -> Self {
        IncrementalEchelon {
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    /// Inserts `v`. If it is dependent on the previously inserted vectors
    /// `v_0, ..., v_{s-1}`, returns coefficients `c` with `v = sum c_i v_i`.
    pub fn insert(&mut self, f: &Fq, v: &[FqElem]) -> Option<Vec<FqElem>> {
        assert_eq!(v.len(), self.dim);
        let idx = self.inserted;
        self.inserted += 1;
        let mut vec = v.to_vec();
        // combination such that vec = v_idx - sum(comb_i v_i)
        let mut comb = vec![0u32; idx + 1];
        comb[idx] = 1;
        for (pc, row, rcomb) in &self.rows {
            let c = vec[*pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in vec.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in comb.iter_mut().zip(rcomb) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        match vec.iter().position(|&x| x != 0) {
            Some(pc) => {
                let inv = f.inv(vec[pc]).expect("nonzero");
                vec.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                self.rows.push((pc, vec, comb));
                None
            }
            None => {
                // 0 = v_idx + sum_{i<idx} comb_i v_i
                Some(comb[..idx].iter().map(|&c| f.neg(c)).collect())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_unique_and_detects_degenerate() {
        let f = Fq::prime(5).unwrap();
        let a = vec![vec![1, 2], vec![3, 4], vec![1, 1]];
        let x = [2u32, 3];
        let b = mat_vec(&f, &a, &x);
        assert_eq!(solve(&f, &a, &b), LinearSolution::Unique(x.to_vec()));
        let dup = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(solve(&f, &dup, &[1, 2]), LinearSolution::NotUnique);
        assert_eq!(solve(&f, &dup, &[1, 3]), LinearSolution::Inconsistent);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Fq::prime(7).unwrap();
        let a = vec![vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]];
        let inv = inverse(&f, &a).unwrap();
        for i in 0..3 {
            let col: Vec<u32> = (0..3).map(|j| inv[j][i]).collect();
            let e = mat_vec(&f, &a, &col);
            let expect: Vec<u32> = (0..3).map(|j| u32::from(i == j)).collect();
            assert_eq!(e, expect);
        }
        assert!(inverse(&f, &[vec![1, 2], vec![2, 4]]).is_none());
        assert_eq!(rank(&f, &a), 3);
    }

    #[test]
    fn echelon_finds_dependency() {
        let f = Fq::prime(3).unwrap();
        let mut e = IncrementalEchelon::new(3);
        assert!(e.insert(&f, &[1, 0, 0]).is_none());
        assert!(e.insert(&f, &[0, 1, 1]).is_none());
        // 2*(1,0,0) + 1*(0,1,1)
        assert_eq!(e.insert(&f, &[2, 1, 1]), Some(vec![2, 1]));
    }
}
