//! Smith normal form of an integer matrix by elementary operations.
//!
//! Exact arithmetic over `i128` with every addition and multiplication
//! checked; overflow is reported as [`CoreError::Overflow`], never wrapped.
//! Only the elementary divisors are needed, so no transform matrices are
//! accumulated.

use crate::error::CoreError;
use alloc::vec::Vec;

pub(crate) struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl Matrix {
    pub(crate) fn new(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub(crate) fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[i] -= q * row[k]
    fn row_sub(&mut self, i: usize, k: usize, q: i128) -> Result<(), CoreError> {
        for c in 0..self.cols {
            let delta = q.checked_mul(self.get(k, c)).ok_or(CoreError::Overflow)?;
            let v = self.get(i, c).checked_sub(delta).ok_or(CoreError::Overflow)?;
            self.set(i, c, v);
        }
        Ok(())
    }

    /// col[j] -= q * col[k]
    fn col_sub(&mut self, j: usize, k: usize, q: i128) -> Result<(), CoreError> {
        for r in 0..self.rows {
            let delta = q.checked_mul(self.get(r, k)).ok_or(CoreError::Overflow)?;
            let v = self.get(r, j).checked_sub(delta).ok_or(CoreError::Overflow)?;
            self.set(r, j, v);
        }
        Ok(())
    }

    /// row[k] += row[i]
    fn row_add(&mut self, k: usize, i: usize) -> Result<(), CoreError> {
        for c in 0..self.cols {
            let v = self.get(k, c).checked_add(self.get(i, c)).ok_or(CoreError::Overflow)?;
            self.set(k, c, v);
        }
        Ok(())
    }

    fn min_abs_in_corner(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for r in k..self.rows {
            for c in k..self.cols {
                let v = self.get(r, c);
                if v == 0 {
                    continue;
                }
                let a = v.unsigned_abs() as i128;
                match best {
                    Some((b, _, _)) if b <= a => {}
                    _ => best = Some((a, r, c)),
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }
}

/// Diagonalizes the matrix and returns the nonzero elementary divisors
/// `d_1 | d_2 | ... | d_r`, all positive. The number returned is the rank.
pub(crate) fn elementary_divisors(mut m: Matrix) -> Result<Vec<i128>, CoreError> {
    let n = m.rows.min(m.cols);
    let mut divisors = Vec::new();
    for k in 0..n {
        let Some((pr, pc)) = m.min_abs_in_corner(k) else {
            break;
        };
        m.swap_rows(k, pr);
        m.swap_cols(k, pc);
        loop {
            // Clear column k with the pivot; a nonzero remainder becomes the
            // new, strictly smaller pivot (Euclid), so this terminates.
            let mut dirty = false;
            for i in k + 1..m.rows {
                if m.get(i, k) != 0 {
                    let q = m.get(i, k) / m.get(k, k);
                    m.row_sub(i, k, q)?;
                    if m.get(i, k) != 0 {
                        m.swap_rows(k, i);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            for j in k + 1..m.cols {
                if m.get(k, j) != 0 {
                    let q = m.get(k, j) / m.get(k, k);
                    m.col_sub(j, k, q)?;
                    if m.get(k, j) != 0 {
                        m.swap_cols(k, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: the pivot must divide every remaining entry.
            // Folding an offending row into row k reduces the pivot next
            // round.
            let mut offender = None;
            'scan: for i in k + 1..m.rows {
                for j in k + 1..m.cols {
                    if m.get(i, j) % m.get(k, k) != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    m.row_add(k, i)?;
                }
                None => break,
            }
        }
        let d = m.get(k, k).unsigned_abs() as i128;
        divisors.push(d);
    }
    Ok(divisors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn from_rows(rows: &[&[i128]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::new(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn diagonal_already() {
        let m = from_rows(&[&[3]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![3]);
    }

    #[test]
    fn zero_matrix_has_no_divisors() {
        let m = from_rows(&[&[0, 0], &[0, 0]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![]);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // Z/2 + Z/3 = Z/6, so SNF of diag(2, 3) is diag(1, 6).
        let m = from_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![1, 6]);
    }

    #[test]
    fn classic_two_by_two() {
        let m = from_rows(&[&[2, 4], &[6, 8]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![2, 4]);
    }

    #[test]
    fn rank_deficient() {
        let m = from_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![1]);
    }

    #[test]
    fn negative_entries() {
        let m = from_rows(&[&[-6, 6], &[6, -6]]);
        assert_eq!(elementary_divisors(m).unwrap(), vec![6]);
    }

    #[test]
    fn overflow_is_reported() {
        let m = from_rows(&[&[i128::MAX, i128::MAX - 1], &[3, i128::MIN + 2]]);
        assert_eq!(elementary_divisors(m), Err(CoreError::Overflow));
    }

    #[test]
    fn divisors_invariant_under_row_and_col_ops() {
        // Shuffling by elementary operations must not change the divisors.
        let base: &[&[i128]] = &[&[4, 0, 2], &[0, 6, 3], &[2, 3, 9]];
        let reference = elementary_divisors(from_rows(base)).unwrap();

        let mut m = from_rows(base);
        m.row_add(0, 2).unwrap();
        m.col_sub(1, 0, -3).unwrap();
        m.swap_rows(0, 1);
        m.swap_cols(0, 2);
        m.row_sub(2, 0, 5).unwrap();
        assert_eq!(elementary_divisors(m).unwrap(), reference);
    }
}
