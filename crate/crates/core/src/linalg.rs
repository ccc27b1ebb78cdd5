//! Dense linear algebra over a prime field `F_p`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    p: u64,
}

pub const DEFAULT_MODULUS: u64 = 101;

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        // products of two residues must fit in u64
        if !prime || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        // Fermat
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_MODULUS }
    }
}

/// Row-major dense matrix with entries reduced modulo the field's prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// `self * other`.
    pub fn mul(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = f.add(out.get(i, j), f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, f: Field, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0, |acc, c| f.add(acc, f.mul(self.get(r, c), v[c]))))
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivots are chosen as the first nonzero entry at or below the current
    /// row, so the result is deterministic.
    pub fn rref(&mut self, f: Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: Field) -> usize {
        self.clone().rref(f).len()
    }
}

/// A subspace of `F_p^dim` with a basis in reduced form: basis vector `k` has
/// a 1 at `coordinates[k]` and 0 at every other listed coordinate. The
/// coefficients of a member vector are therefore its entries at
/// `coordinates`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub dim: usize,
    pub basis: Vec<Vec<u64>>,
    pub coordinates: Vec<usize>,
}

impl Subspace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coefficients of `v` in the basis; `v` must lie in the subspace.
    pub fn coefficients(&self, v: &[u64]) -> Vec<u64> {
        self.coordinates.iter().map(|&c| v[c]).collect()
    }

    /// Span of the given vectors.
    pub fn span(f: Field, dim: usize, vectors: &[Vec<u64>]) -> Subspace {
        let mut m = Matrix::zeros(vectors.len(), dim);
        for (r, v) in vectors.iter().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                m.set(r, c, x % f.modulus());
            }
        }
        let pivots = m.rref(f);
        let basis = (0..pivots.len())
            .map(|r| (0..dim).map(|c| m.get(r, c)).collect())
            .collect();
        Subspace {
            dim,
            basis,
            coordinates: pivots,
        }
    }

    /// Kernel of `m` (vectors `x` with `m x = 0`).
    pub fn kernel(f: Field, m: &Matrix) -> Subspace {
        let mut r = m.clone();
        let pivots = r.rref(f);
        let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0; m.cols()];
                v[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.sub(0, r.get(row, fc));
                }
                v
            })
            .collect();
        Subspace {
            dim: m.cols(),
            basis,
            coordinates: free,
        }
    }

    /// Indices of standard basis vectors completing this subspace to the
    /// whole space, chosen greedily in increasing order.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        // in RREF the non-pivot standard vectors complete the row space
        (0..self.dim).filter(|c| !self.coordinates.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(101).is_ok());
    }

    #[test]
    fn inverses() {
        let f = Field::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::new(7).unwrap();
        let mut m = Matrix::zeros(2, 3);
        for (c, v) in [1, 2, 3].into_iter().enumerate() {
            m.set(0, c, v);
            m.set(1, c, 2 * v);
        }
        assert_eq!(m.rank(f), 1);
        let k = Subspace::kernel(f, &m);
        assert_eq!(k.rank(), 2);
        for v in &k.basis {
            assert!(m.apply(f, v).iter().all(|&x| x == 0));
            assert_eq!(k.coefficients(v).iter().filter(|&&x| x == 1).count(), 1);
        }
    }

    #[test]
    fn span_and_complement() {
        let f = Field::new(2).unwrap();
        let s = Subspace::span(f, 3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.complement_coordinates().len(), 1);
        let v = vec![1, 0, 1];
        let c = s.coefficients(&v);
        let mut back = vec![0; 3];
        for (k, b) in s.basis.iter().enumerate() {
            for i in 0..3 {
                back[i] = f.add(back[i], f.mul(c[k], b[i]));
            }
        }
        assert_eq!(back, v);
    }
}
