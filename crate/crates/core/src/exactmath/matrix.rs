use num_traits::{One, Zero};

use super::{ExactError, Rational};

/// Dense row-major rational matrix.
///
/// [`Matrix::at`] and [`Matrix::set`] take 1-based indices so code that
/// transcribes entry formulas `x_{i,j}` reads the same as the formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn is_upper_triangular(&self) -> bool {
        (1..=self.rows).all(|i| (1..i.min(self.cols + 1)).all(|j| self.at(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (1..=self.rows.min(self.cols)).map(|i| self.at(i, i).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::ShapeMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Solves `M v = b` for square upper-triangular `M` by back-substitution.
    /// Entries below the diagonal are ignored.
    pub fn upper_tri_solve(&self, b: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch(format!(
                "triangular solve needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if b.len() != self.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "right side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let n = self.rows;
        if let Some(i) = (1..=n).find(|&i| self.at(i, i).is_zero()) {
            return Err(ExactError::SingularDiagonal { index: i });
        }
        let mut v = vec![Rational::zero(); n];
        for i in (1..=n).rev() {
            let mut acc = b[i - 1].clone();
            for j in i + 1..=n {
                acc -= self.at(i, j) * &v[j - 1];
            }
            v[i - 1] = acc / self.at(i, i);
        }
        Ok(v)
    }
}
