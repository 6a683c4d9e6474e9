use super::PrimeModulus;
use crate::{Error, Result};

/// Dense row-major matrix with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    modulus: PrimeModulus,
}

impl FpMatrix {
    /// Builds a matrix from row-major entries, reducing each modulo `p`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<u64>, modulus: PrimeModulus) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| modulus.reduce(e)).collect();
        Ok(FpMatrix { rows, cols, entries, modulus })
    }

    pub fn from_rows(rows: &[Vec<u64>], modulus: PrimeModulus) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::from_entries(rows.len(), cols, rows.concat(), modulus)
    }

    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        FpMatrix { rows, cols, entries: vec![0; rows * cols], modulus }
    }

    pub fn identity(dim: usize, modulus: PrimeModulus) -> Self {
        let mut m = Self::zeros(dim, dim, modulus);
        for i in 0..dim {
            m.entries[i * dim + i] = 1 % modulus.get();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = self.modulus.reduce(v);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.get(), other.modulus.get()));
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.modulus;
        let mut out = Self::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = p.add(out.entries[idx], p.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let p = self.modulus;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, p.reduce(b))))
            })
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c) % self.modulus.get()))
    }

    /// Row-reduces a copy to reduced echelon form, returning it with the
    /// pivot columns. Pivots are the first nonzero entry in each column.
    fn echelon(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.entries.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let inv = p.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c);
                m.entries[row * m.cols + c] = p.mul(v, inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = p.sub(m.get(r, c), p.mul(factor, m.get(row, c)));
                    m.entries[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }
}

/// Rank over `F_p`. The input is left untouched.
pub fn fp_rank(m: &FpMatrix) -> usize {
    m.echelon().1.len()
}

/// Kronecker product: the block matrix whose `(i, j)` block is `a[i,j] · b`.
pub fn kronecker(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch(a.modulus.get(), b.modulus.get()));
    }
    let p = a.modulus;
    let (rows, cols) = (a.rows * b.rows, a.cols * b.cols);
    let mut out = FpMatrix::zeros(rows, cols, p);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let s = a.get(ar, ac);
            if s == 0 {
                continue;
            }
            for br in 0..b.rows {
                let base = (ar * b.rows + br) * cols + ac * b.cols;
                for bc in 0..b.cols {
                    out.entries[base + bc] = p.mul(s, b.get(br, bc));
                }
            }
        }
    }
    Ok(out)
}

/// Inverse over `F_p` by Gauss-Jordan elimination on `[m | I]`.
pub fn fp_inverse(m: &FpMatrix) -> Result<FpMatrix> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!("inverse of non-square {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let p = m.modulus;
    let mut aug = FpMatrix::zeros(n, 2 * n, p);
    for r in 0..n {
        for c in 0..n {
            aug.entries[r * 2 * n + c] = m.get(r, c);
        }
        aug.entries[r * 2 * n + n + r] = 1 % p.get();
    }
    let (red, pivots) = aug.echelon();
    let rank = pivots.iter().take_while(|&&c| c < n).count();
    if rank < n {
        return Err(Error::Singular { p: p.get(), rank, dim: n });
    }
    let mut inv = FpMatrix::zeros(n, n, p);
    for r in 0..n {
        for c in 0..n {
            inv.entries[r * n + c] = red.get(r, n + c);
        }
    }
    Ok(inv)
}

/// Integer matrix whose entries are representatives in `{1, …, p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u64>,
}

impl LiftedMatrix {
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn max(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

/// Lifts every residue to its representative in `{1, …, p}`; residue 0
/// becomes `p`.
pub fn lift_representative(m: &FpMatrix) -> LiftedMatrix {
    let p = m.modulus.get();
    LiftedMatrix {
        rows: m.rows,
        cols: m.cols,
        entries: m.entries.iter().map(|&e| if e == 0 { p } else { e }).collect(),
    }
}
