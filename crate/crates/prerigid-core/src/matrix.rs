//! Dense matrices over the exact rationals.
//!
//! This is the linear-algebra substrate for every "Linear" hom-space:
//! composition is matrix product, tensor is the Kronecker product, and the
//! bijectivity certificates reduce to exact rank computations. Everything is
//! row-major; a morphism `X → Y` between spaces of dimensions `m` and `n` is
//! an `n × m` matrix acting on column vectors.

use crate::prelude::*;
use crate::rational::{one, zero, Rat};
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl core::fmt::Debug for Mat {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Outcome of solving `A·x = b` when both existence and uniqueness matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Mat),
    NoSolution,
    NonUnique,
}

impl Mat {
    pub fn from_data(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Integer-entry constructor, mostly for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(r, c, |i, j| crate::rational::rat(rows[i][j]))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::from_data(rows, cols, vec![zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { one() } else { zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    /// Entries are 0/1 with exactly one 1 in every row and column.
    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one_v = one();
        for r in 0..self.rows {
            let mut ones = 0usize;
            for c in 0..self.cols {
                let v = self.at(r, c);
                if *v == one_v {
                    ones += 1;
                } else if !v.is_zero() {
                    return false;
                }
            }
            if ones != 1 {
                return false;
            }
        }
        for c in 0..self.cols {
            let count = (0..self.rows).filter(|&r| *self.at(r, c) == one_v).count();
            if count != 1 {
                return false;
            }
        }
        true
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, k: &Rat) -> Mat {
        Mat::from_data(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * k).collect(),
        )
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        Mat::from_data(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.add(&rhs.scale(&-one()))
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product. Row-major block layout, so `(A ⊗ B) ⊗ C` and
    /// `A ⊗ (B ⊗ C)` are the same concrete matrix.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..rhs.rows {
                    for c in 0..rhs.cols {
                        let b = rhs.at(r, c);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + r, j * rhs.cols + c, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Permutation matrix sending basis vector `e_(i,j)` of an `m ⊗ n` space
    /// to `e_(j,i)` of the `n ⊗ m` space.
    pub fn twist(m: usize, n: usize) -> Mat {
        let mut out = Mat::zero(n * m, m * n);
        for i in 0..m {
            for j in 0..n {
                out.set(j * m + i, i * n + j, one());
            }
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows + rhs.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, rhs);
        out
    }

    /// Copy `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.at(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(rows, cols, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    pub fn hstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            out.paste(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Mat::zero(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            out.paste(r0, 0, b);
            r0 += b.rows;
        }
        out
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_col(v: &[Rat]) -> Mat {
        Mat::from_data(v.len(), 1, v.to_owned())
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot_row else { continue };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = one() / m.at(row, col).clone();
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(&factor * m.at(row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one column per free variable, in reduced
    /// form: the free coordinate of each basis vector is 1 and the free
    /// coordinates of the other basis vectors vanish there. Deterministic.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, -r.at(prow, fc).clone());
            }
        }
        out
    }

    /// Solve `self · X = rhs`, demanding the solution be unique.
    pub fn solve_unique(&self, rhs: &Mat) -> SolveOutcome {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let aug = Mat::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return SolveOutcome::NoSolution;
        }
        if pivots.len() < self.cols {
            return SolveOutcome::NonUnique;
        }
        let mut x = Mat::zero(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, r.at(prow, self.cols + c).clone());
            }
        }
        SolveOutcome::Unique(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        match self.solve_unique(&Mat::identity(self.rows)) {
            SolveOutcome::Unique(inv) => Some(inv),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn rref_and_rank() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let id = Mat::identity(3);
        assert_eq!(id.rank(), 3);
        assert_eq!(Mat::zero(2, 5).rank(), 0);
    }

    #[test]
    fn kernel_annihilates() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_unique_cases() {
        let a = Mat::from_ints(&[&[2, 0], &[0, 4]]);
        let b = Mat::from_ints(&[&[1], &[2]]);
        match a.solve_unique(&b) {
            SolveOutcome::Unique(x) => {
                assert_eq!(*x.at(0, 0), frac(1, 2));
                assert_eq!(*x.at(1, 0), frac(1, 2));
            }
            other => panic!("expected unique solution, got {other:?}"),
        }
        let sing = Mat::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            sing.solve_unique(&Mat::from_ints(&[&[1], &[2]])),
            SolveOutcome::NoSolution
        );
        assert_eq!(
            sing.solve_unique(&Mat::from_ints(&[&[1], &[1]])),
            SolveOutcome::NonUnique
        );
    }

    #[test]
    fn twist_is_permutation_and_involution() {
        let t = Mat::twist(2, 3);
        assert!(t.is_permutation());
        assert!(Mat::twist(3, 2).mul(&t).is_identity());
    }

    #[test]
    fn scalar_kron() {
        let a = Mat::from_fn(1, 1, |_, _| rat(3));
        let b = Mat::from_fn(1, 1, |_, _| rat(5));
        assert_eq!(*a.kron(&b).at(0, 0), rat(15));
    }

    fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-2i64..=2, rows * cols)
            .prop_map(move |v| Mat::from_data(rows, cols, v.into_iter().map(rat).collect()))
    }

    proptest! {
        // (A ⊗ B)(C ⊗ D) = AC ⊗ BD for composable shapes up to dim 3.
        #[test]
        fn kron_interchange(
            a in small_mat(2, 3), c in small_mat(3, 2),
            b in small_mat(3, 2), d in small_mat(2, 3),
        ) {
            let lhs = a.kron(&b).mul(&c.kron(&d));
            let rhs = a.mul(&c).kron(&b.mul(&d));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_is_associative(
            a in small_mat(2, 1), b in small_mat(1, 2), c in small_mat(2, 2),
        ) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn rank_bounded_and_kernel_complements(m in small_mat(3, 4)) {
            let r = m.rank();
            prop_assert!(r <= 3);
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols() + r, 4);
            prop_assert!(m.mul(&k).is_zero());
        }
    }
}
