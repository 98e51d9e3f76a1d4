use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::Poly;

/// Dense row-major matrix over `Q[t]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    /// Panics unless `entries.len() == rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix::from_entries(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from coefficient lists, lowest power first.
    pub fn from_int_coeffs(rows: &[&[&[i64]]]) -> Self {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|c| Poly::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[dst] += f * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, f: &Poly) {
        for c in 0..self.cols {
            let v = &self[(src, c)] * f;
            self[(dst, c)] = &self[(dst, c)] + &v;
        }
    }

    /// `col[dst] += f * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, f: &Poly) {
        for r in 0..self.rows {
            let v = &self[(r, src)] * f;
            self[(r, dst)] = &self[(r, dst)] + &v;
        }
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Poly::zero();
                for l in 0..self.cols {
                    acc = &acc + &(&self[(i, l)] * &rhs[(l, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// The matrix of constant terms, i.e. the specialisation `t = 0`.
    pub fn at_zero(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Poly::constant_term).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (r, c): (usize, usize)) -> &Poly {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Poly {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank over `Q` of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..rows {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            let src = m[rank].clone();
            for (dst, v) in m[r].iter_mut().zip(&src).skip(c) {
                *dst -= &f * v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
