//! Dense row-major matrices over the rationals.

use std::fmt;

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::ONE);
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r.iter().map(|&v| Rational::from_int(v)));
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix from rational rows. `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Appends a row. Panics on a length mismatch.
    pub fn push_row(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.entries.extend_from_slice(row);
        self.rows += 1;
    }

    /// Matrix with row `r` removed.
    pub fn without_row(&self, r: usize) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len().saturating_sub(self.cols));
        for (i, row) in self.row_iter().enumerate() {
            if i != r {
                entries.extend_from_slice(row);
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rational::ZERO, |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(Rational::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry scanning columns left to
    /// right; zero rows end up at the bottom.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, col).recip();
            if !inv.is_one() {
                for c in col..m.cols {
                    let v = m.get(pivot_row, c) * &inv;
                    m.set(pivot_row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let p = m.get(pivot_row, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&factor * p);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Rows kept in echelon form so that independence of a new row can be tested
/// without recomputing the rank.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn residue(&self, row: &[Rational]) -> Vec<Rational> {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let mut r = row.to_vec();
        for (pivot, basis) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let factor = r[*pivot].clone();
            for (x, b) in r.iter_mut().zip(basis) {
                if !b.is_zero() {
                    *x = &*x - &(&factor * b);
                }
            }
        }
        r
    }

    pub fn is_independent(&self, row: &[Rational]) -> bool {
        self.residue(row).iter().any(|x| !x.is_zero())
    }

    /// Adds `row` if it raises the rank; returns whether it did.
    pub fn insert(&mut self, row: &[Rational]) -> bool {
        let mut r = self.residue(row);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].recip();
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, basis) in self.rows.iter_mut() {
            if basis[pivot].is_zero() {
                continue;
            }
            let factor = basis[pivot].clone();
            for (x, p) in basis.iter_mut().zip(&r) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

impl fmt::Display for RationalMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
