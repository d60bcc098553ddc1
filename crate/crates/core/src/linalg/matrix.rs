use std::fmt;

use super::Prime;

/// Dense matrix over F_p, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    prime: Prime,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize, prime: Prime) -> Self {
        FieldMatrix { rows, cols, prime, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, prime: Prime) -> Self {
        let mut m = Self::zeros(n, n, prime);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing entries mod p.
    pub fn from_rows(rows: &[Vec<i64>], prime: Prime) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c, prime);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, prime.reduce(x));
            }
        }
        m
    }

    /// Builds a matrix from its columns (each of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<u32>], prime: Prime) -> Self {
        let mut m = Self::zeros(rows, cols.len(), prime);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x % prime.get());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.prime.get();
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.prime);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        assert_eq!(self.prime, other.prime, "characteristic mismatch");
        let p = self.prime;
        let mut out = Self::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = p.add(out.data[idx], p.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    /// Places `blocks` side by side; all must have the same row count.
    pub fn hstack(rows: usize, blocks: &[&FieldMatrix], prime: Prime) -> FieldMatrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols, prime);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "row mismatch in hstack");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j));
                }
            }
            off += b.cols;
        }
        out
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let p = self.prime;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = p.inv(self.get(r, c));
            for j in 0..self.cols {
                let v = p.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = p.sub(self.get(i, j), p.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Basis of the null space, one column per basis vector.
    pub fn kernel(&self) -> FieldMatrix {
        let p = self.prime;
        let mut red = self.clone();
        let pivots = red.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len(), p);
        for (b, &f) in free.iter().enumerate() {
            k.set(f, b, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, b, p.neg(red.get(r, f)));
            }
        }
        k
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldMatrix<{}x{} mod {}>[", self.rows, self.cols, self.prime.get())?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}
