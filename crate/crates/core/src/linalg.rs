//! Dense matrices over a small field, with entries encoded as table indices.

use crate::gf::{Field, FieldElement, FieldTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Entries decoded back to field elements, row by row.
    pub fn to_elements(&self, field: &Field) -> Vec<Vec<FieldElement>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| field.element(v as u128))
                    .collect()
            })
            .collect()
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix, t: &FieldTable) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let acc = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(0u16, |acc, (&a, &b)| t.add(acc, t.mul(a, b)));
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn rank(&self, t: &FieldTable) -> usize {
        let mut m = self.clone();
        m.row_reduce(t).len()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self, t: &FieldTable) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..self.cols {
                    self.data.swap(sel * self.cols + k, pr * self.cols + k);
                }
            }
            let inv = t.inv(self.get(pr, c));
            for k in c..self.cols {
                let v = t.mul(self.get(pr, k), inv);
                self.set(pr, k, v);
            }
            for r in 0..self.rows {
                let f = self.get(r, c);
                if r != pr && f != 0 {
                    let nf = t.neg(f);
                    for k in c..self.cols {
                        let v = t.add(self.get(r, k), t.mul(nf, self.get(pr, k)));
                        self.set(r, k, v);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    /// A nonzero vector `x` with `self * x = 0`, if the columns are dependent.
    pub fn null_vector(&self, t: &FieldTable) -> Option<Vec<u16>> {
        let mut m = self.clone();
        let pivots = m.row_reduce(t);
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut x = vec![0u16; self.cols];
        x[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = t.neg(m.get(r, free));
        }
        Some(x)
    }
}
