//! Dense vectors and matrices with exact entries, plus the reduced row
//! echelon machinery every higher-level procedure rests on.
//!
//! Pivoting is fixed: scan columns left to right, pick the first row at or
//! below the current pivot row with a nonzero entry, normalize it, and
//! clear the column above and below.  The same input always yields the
//! same echelon form, pivot columns, and kernel basis.

use std::fmt;
use std::ops::Index;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};

/// A coordinate vector with entries from one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    spec: FieldSpec,
    entries: Vec<FieldElement>,
}

impl Vector {
    /// Builds a vector after checking every entry belongs to `spec`.
    pub fn new(spec: FieldSpec, entries: Vec<FieldElement>) -> Result<Vector, Error> {
        for e in &entries {
            spec.require_same(e.spec())?;
        }
        Ok(Vector { spec, entries })
    }

    /// Literal constructor: maps integers into the field.
    pub fn from_ints(spec: FieldSpec, entries: &[i64]) -> Vector {
        Vector {
            spec,
            entries: entries
                .iter()
                .map(|&n| FieldElement::from_integer(spec, n))
                .collect(),
        }
    }

    pub fn zero(spec: FieldSpec, len: usize) -> Vector {
        Vector {
            spec,
            entries: vec![FieldElement::zero(spec); len],
        }
    }

    /// The standard basis vector with a single 1 in coordinate `i`.
    pub fn unit(spec: FieldSpec, len: usize, i: usize) -> Vector {
        assert!(i < len, "unit coordinate out of range");
        let mut v = Vector::zero(spec, len);
        v.entries[i] = FieldElement::one(spec);
        v
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    /// Index of the last nonzero coordinate, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.entries.iter().rposition(|e| !e.is_zero())
    }

    pub fn add(&self, rhs: &Vector) -> Result<Vector, Error> {
        self.spec.require_same(rhs.spec)?;
        self.require_len(rhs.len())?;
        Ok(Vector {
            spec: self.spec,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Vector) -> Result<Vector, Error> {
        self.spec.require_same(rhs.spec)?;
        self.require_len(rhs.len())?;
        Ok(Vector {
            spec: self.spec,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Vector, Error> {
        self.spec.require_same(c.spec())?;
        Ok(Vector {
            spec: self.spec,
            entries: self.entries.iter().map(|e| e.times(c)).collect(),
        })
    }

    fn require_len(&self, other: usize) -> Result<(), Error> {
        if self.len() == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other,
            })
        }
    }
}

impl Index<usize> for Vector {
    type Output = FieldElement;

    fn index(&self, i: usize) -> &FieldElement {
        &self.entries[i]
    }
}

/// Space-separated canonical scalars, e.g. `1 0 1`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A dense row-major matrix over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Output of [`Matrix::rref`]: the echelon form together with the pivot
/// columns in increasing order.  `rank` always equals `pivot_cols.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    /// Builds a matrix from row-major entries after checking the entry
    /// count and that every entry belongs to `spec`.
    pub fn new(
        spec: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Matrix, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        for e in &entries {
            spec.require_same(e.spec())?;
        }
        Ok(Matrix {
            spec,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix whose rows are the given vectors, each of length
    /// `cols`.
    pub fn from_rows(spec: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Matrix, Error> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for v in rows {
            spec.require_same(v.spec())?;
            if v.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: v.len(),
                });
            }
            entries.extend(v.entries().iter().cloned());
        }
        Matrix::new(spec, rows.len(), cols, entries)
    }

    /// Builds a matrix whose columns are the given vectors, each of length
    /// `rows`.
    pub fn from_columns(spec: FieldSpec, rows: usize, cols: &[Vector]) -> Result<Matrix, Error> {
        let mut entries = Vec::with_capacity(rows * cols.len());
        for v in cols {
            spec.require_same(v.spec())?;
            if v.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    actual: v.len(),
                });
            }
        }
        for r in 0..rows {
            for v in cols {
                entries.push(v[r].clone());
            }
        }
        Matrix::new(spec, rows, cols.len(), entries)
    }

    /// Literal constructor: maps integer rows into the field.  Panics on
    /// ragged input; the column count of an empty slice is zero.
    pub fn from_int_rows(spec: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let vectors: Vec<Vector> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer rows");
                Vector::from_ints(spec, r)
            })
            .collect();
        Matrix::from_rows(spec, cols, &vectors).expect("literal rows are uniform")
    }

    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            spec,
            rows,
            cols,
            entries: vec![FieldElement::zero(spec); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(spec, n, n);
        for i in 0..n {
            m.entries[i * n + i] = FieldElement::one(spec);
        }
        m
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vector {
        assert!(r < self.rows, "row out of range");
        Vector {
            spec: self.spec,
            entries: self.entries[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> Vector {
        assert!(c < self.cols, "column out of range");
        Vector {
            spec: self.spec,
            entries: (0..self.rows)
                .map(|r| self.entries[r * self.cols + c].clone())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entries[r * self.cols + c].clone());
            }
        }
        Matrix {
            spec: self.spec,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.spec.require_same(rhs.spec)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: rhs.rows,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = FieldElement::zero(self.spec);
                for k in 0..self.cols {
                    acc = acc.plus(&self.at(r, k).times(rhs.at(k, c)));
                }
                entries.push(acc);
            }
        }
        Matrix::new(self.spec, self.rows, rhs.cols, entries)
    }

    pub fn mul_vector(&self, v: &Vector) -> Result<Vector, Error> {
        self.spec.require_same(v.spec())?;
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let entries = (0..self.rows)
            .map(|r| {
                let mut acc = FieldElement::zero(self.spec);
                for c in 0..self.cols {
                    acc = acc.plus(&self.at(r, c).times(&v[c]));
                }
                acc
            })
            .collect();
        Ok(Vector {
            spec: self.spec,
            entries,
        })
    }

    /// Reduced row echelon form under the fixed pivoting rule.
    pub fn rref(&self) -> RrefResult {
        let (m, n) = (self.rows, self.cols);
        let mut g = self.entries.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..n {
            if pivot_row == m {
                break;
            }
            let Some(src) = (pivot_row..m).find(|&r| !g[idx(r, col)].is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..n {
                    g.swap(idx(src, c), idx(pivot_row, c));
                }
            }
            let inv = g[idx(pivot_row, col)].recip();
            for c in col..n {
                let scaled = g[idx(pivot_row, c)].times(&inv);
                g[idx(pivot_row, c)] = scaled;
            }
            for r in 0..m {
                if r == pivot_row || g[idx(r, col)].is_zero() {
                    continue;
                }
                let factor = g[idx(r, col)].clone();
                for c in col..n {
                    let delta = g[idx(pivot_row, c)].times(&factor);
                    let reduced = g[idx(r, c)].minus(&delta);
                    g[idx(r, c)] = reduced;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        RrefResult {
            rref: Matrix {
                spec: self.spec,
                rows: m,
                cols: n,
                entries: g,
            },
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A canonical basis of the solution space of `A·x = 0`: one vector
    /// per free column in increasing column order, each with a 1 at its
    /// free column and 0 at every other free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let RrefResult {
            rref, pivot_cols, ..
        } = self.rref();
        let n = self.cols;
        let mut row_of = vec![usize::MAX; n];
        for (r, &c) in pivot_cols.iter().enumerate() {
            row_of[c] = r;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if row_of[free] != usize::MAX {
                continue;
            }
            let mut entries = vec![FieldElement::zero(self.spec); n];
            entries[free] = FieldElement::one(self.spec);
            for &pc in &pivot_cols {
                entries[pc] = rref.at(row_of[pc], free).neg();
            }
            basis.push(Vector {
                spec: self.spec,
                entries,
            });
        }
        basis
    }

    /// One solution of `A·x = b` with every free coordinate set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>, Error> {
        self.spec.require_same(b.spec())?;
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            entries.extend(self.entries[r * self.cols..(r + 1) * self.cols].iter().cloned());
            entries.push(b[r].clone());
        }
        let aug = Matrix {
            spec: self.spec,
            rows: self.rows,
            cols: self.cols + 1,
            entries,
        };
        let RrefResult {
            rref, pivot_cols, ..
        } = aug.rref();
        if pivot_cols.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElement::zero(self.spec); self.cols];
        for (r, &c) in pivot_cols.iter().enumerate() {
            x[c] = rref.at(r, self.cols).clone();
        }
        Ok(Some(Vector {
            spec: self.spec,
            entries: x,
        }))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;

    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        self.at(r, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn rref_matches_hand_elimination_over_gf2() {
        // Hand elimination: add row 1 to row 2, then add the new row 2
        // back to row 1.
        let a = Matrix::from_int_rows(gf(2), &[&[1, 1, 0], &[1, 0, 1]]);
        let out = a.rref();
        assert_eq!(out.rref, Matrix::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(out.pivot_cols, vec![0, 1]);
        assert_eq!(out.rank, 2);
    }

    #[test]
    fn rref_of_zero_matrix_is_itself() {
        let z = Matrix::zeros(q(), 2, 2);
        let out = z.rref();
        assert_eq!(out.rref, z);
        assert!(out.pivot_cols.is_empty());
        assert_eq!(out.rank, 0);
    }

    #[test]
    fn rref_is_idempotent() {
        let samples = [
            Matrix::from_int_rows(gf(2), &[&[1, 1, 0], &[1, 0, 1]]),
            Matrix::from_int_rows(gf(3), &[&[1, 2], &[2, 1], &[0, 1]]),
            Matrix::from_int_rows(q(), &[&[2, 4, 6], &[1, 2, 3], &[0, 0, 5]]),
        ];
        for a in samples {
            let once = a.rref();
            let twice = once.rref.rref();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn rref_swaps_rows_deterministically() {
        let a = Matrix::from_int_rows(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(a.rref().rref, Matrix::identity(q(), 2));
    }

    #[test]
    fn rref_normalizes_rational_pivots() {
        let a = Matrix::from_int_rows(q(), &[&[2, 4], &[1, 3]]);
        // Eliminating by hand: r1/2 = (1,2); r2 - r1 = (0,1); clear above.
        let out = a.rref();
        assert_eq!(out.rref, Matrix::identity(q(), 2));
        assert_eq!(out.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn kernel_agrees_with_brute_force_over_gf2() {
        // All solutions of x + y = 0 over GF(2), found by trying all four
        // vectors with independent arithmetic.
        let a = Matrix::from_int_rows(gf(2), &[&[1, 1]]);
        let mut by_hand = Vec::new();
        for x in 0..2i64 {
            for y in 0..2i64 {
                if (x + y) % 2 == 0 && (x, y) != (0, 0) {
                    by_hand.push(Vector::from_ints(gf(2), &[x, y]));
                }
            }
        }
        assert_eq!(a.kernel_basis(), by_hand);
    }

    #[test]
    fn kernel_vectors_satisfy_the_system_over_q() {
        let a = Matrix::from_int_rows(q(), &[&[1, 2, 3]]);
        let basis = a.kernel_basis();
        assert_eq!(
            basis,
            vec![
                Vector::from_ints(q(), &[-2, 1, 0]),
                Vector::from_ints(q(), &[-3, 0, 1]),
            ]
        );
        for v in &basis {
            assert!(a.mul_vector(v).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_detects_dependent_rows() {
        // Row 3 is the sum of rows 1 and 2.
        let a = Matrix::from_int_rows(gf(2), &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(a.row(0).add(&a.row(1)).unwrap(), a.row(2));
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn rank_is_invariant_under_transpose() {
        let samples = [
            Matrix::from_int_rows(gf(2), &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            Matrix::from_int_rows(q(), &[&[1, 2], &[2, 4], &[3, 7]]),
            Matrix::zeros(gf(3), 3, 2),
        ];
        for a in samples {
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }

    #[test]
    fn matmul_matches_entrywise_integer_arithmetic() {
        let a = Matrix::from_int_rows(gf(2), &[&[1, 1], &[0, 1]]);
        // (A²)ᵢⱼ computed as plain integer dot products reduced mod 2:
        // [[1·1+1·0, 1·1+1·1], [0·1+1·0, 0·1+1·1]] = [[1, 0], [0, 1]].
        assert_eq!(a.matmul(&a).unwrap(), Matrix::identity(gf(2), 2));
    }

    #[test]
    fn solve_returns_the_free_coordinates_zeroed_solution() {
        let a = Matrix::from_int_rows(gf(2), &[&[1, 1]]);
        let b = Vector::from_ints(gf(2), &[1]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(x, Vector::from_ints(gf(2), &[1, 0]));
        assert_eq!(a.mul_vector(&x).unwrap(), b);
    }

    #[test]
    fn solve_reports_inconsistent_systems() {
        let a = Matrix::from_int_rows(q(), &[&[1], &[2]]);
        let b = Vector::from_ints(q(), &[1, 3]);
        assert_eq!(a.solve(&b).unwrap(), None);
    }

    #[test]
    fn empty_shapes_behave() {
        let wide = Matrix::zeros(gf(2), 0, 3);
        assert_eq!(wide.rank(), 0);
        assert_eq!(
            wide.kernel_basis(),
            vec![
                Vector::unit(gf(2), 3, 0),
                Vector::unit(gf(2), 3, 1),
                Vector::unit(gf(2), 3, 2),
            ]
        );

        let tall = Matrix::zeros(gf(2), 3, 0);
        assert_eq!(tall.rank(), 0);
        assert!(tall.kernel_basis().is_empty());
        assert_eq!(
            tall.solve(&Vector::zero(gf(2), 3)).unwrap(),
            Some(Vector::zero(gf(2), 0))
        );

        let point = Matrix::zeros(q(), 0, 0);
        assert_eq!(point.rref().rank, 0);
        assert_eq!(
            point.solve(&Vector::zero(q(), 0)).unwrap(),
            Some(Vector::zero(q(), 0))
        );
    }

    #[test]
    fn construction_validates_shape_and_field() {
        let bad_count = Matrix::new(
            gf(2),
            2,
            2,
            vec![FieldElement::one(gf(2)); 3],
        );
        assert_eq!(
            bad_count,
            Err(Error::DimensionMismatch {
                expected: 4,
                actual: 3
            })
        );
        let bad_field = Matrix::new(gf(2), 1, 1, vec![FieldElement::one(gf(3))]);
        assert_eq!(bad_field, Err(Error::MismatchedField(gf(2), gf(3))));
        let ragged = Matrix::from_rows(
            q(),
            2,
            &[Vector::from_ints(q(), &[1, 2]), Vector::from_ints(q(), &[1])],
        );
        assert!(ragged.is_err());
    }

    #[test]
    fn vector_arithmetic_checks_lengths_and_fields() {
        let u = Vector::from_ints(gf(3), &[1, 2]);
        let v = Vector::from_ints(gf(3), &[2, 2]);
        assert_eq!(u.add(&v).unwrap(), Vector::from_ints(gf(3), &[0, 1]));
        assert_eq!(
            u.scale(&FieldElement::from_integer(gf(3), 2)).unwrap(),
            Vector::from_ints(gf(3), &[2, 1])
        );
        assert!(u.add(&Vector::from_ints(gf(3), &[1])).is_err());
        assert!(u.add(&Vector::from_ints(gf(5), &[1, 1])).is_err());
    }

    #[test]
    fn last_nonzero_finds_the_trailing_coordinate() {
        assert_eq!(Vector::from_ints(q(), &[0, 3, 0, 2, 0]).last_nonzero(), Some(3));
        assert_eq!(Vector::zero(q(), 4).last_nonzero(), None);
        assert_eq!(Vector::zero(q(), 0).last_nonzero(), None);
    }

    #[test]
    fn columns_and_transpose_are_consistent() {
        let a = Matrix::from_int_rows(gf(5), &[&[1, 2, 3], &[4, 0, 1]]);
        assert_eq!(a.column(1), Vector::from_ints(gf(5), &[2, 0]));
        assert_eq!(a.transpose().row(1), a.column(1));
        assert_eq!(a.transpose().transpose(), a);
        let from_cols =
            Matrix::from_columns(gf(5), 2, &[a.column(0), a.column(1), a.column(2)]).unwrap();
        assert_eq!(from_cols, a);
    }
}
