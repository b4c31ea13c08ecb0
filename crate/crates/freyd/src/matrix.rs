//! Dense matrices over a [`RingSpec`], stored row-major.
//!
//! Zero-row and zero-column matrices are first-class citizens: presentations
//! of free and zero modules, empty differentials, and degenerate blocks all
//! reduce to them, so every operation must tolerate an empty dimension.

use std::fmt;

use num_bigint::BigInt;

use crate::ring::{RingElement, RingSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub ring: RingSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<RingElement>,
}

impl Matrix {
    pub fn zero(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(
        ring: &RingSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RingElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), rows, cols, entries }
    }

    /// Build from integer rows, reducing each entry into the ring. All rows
    /// must have equal length; an empty slice gives a 0 by 0 matrix.
    pub fn from_int_rows(ring: &RingSpec, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix literal"
        );
        Matrix::from_fn(ring, rows.len(), cols, |i, j| ring.from_i64(rows[i][j]))
    }

    pub fn from_rows(ring: &RingSpec, rows: &[Vec<RingElement>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix literal"
        );
        Matrix::from_fn(ring, rows.len(), cols, |i, j| rows[i][j].clone())
    }

    /// Build a matrix whose columns are the given vectors, each of length
    /// `rows`. An empty list gives `rows` by 0.
    pub fn from_cols(ring: &RingSpec, rows: usize, cols: &[Vec<RingElement>]) -> Self {
        assert!(
            cols.iter().all(|c| c.len() == rows),
            "column length does not match row count"
        );
        Matrix::from_fn(ring, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<RingElement> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<RingElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.neg(self.get(i, j))
        })
    }

    pub fn scale(&self, c: &RingElement) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.ring.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch in mul");
        Matrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = self.ring.zero();
            for l in 0..self.cols {
                let term = self.ring.mul(self.get(i, l), other.get(l, j));
                acc = self.ring.add(&acc, &term);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[RingElement]) -> Vec<RingElement> {
        assert_eq!(self.cols, v.len(), "vector length mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for l in 0..self.cols {
                    let term = self.ring.mul(self.get(i, l), &v[l]);
                    acc = self.ring.add(&acc, &term);
                }
                acc
            })
            .collect()
    }

    /// Kronecker product: block (i, j) of the result is `self[i][j] * other`.
    /// Row `i * other.rows + r`, column `j * other.cols + c`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            &self.ring,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (ia, ib) = (i / other.rows, i % other.rows);
                let (ja, jb) = (j / other.cols, j % other.cols);
                self.ring.mul(self.get(ia, ja), other.get(ib, jb))
            },
        )
    }

    /// Lift entries to integer matrices via the canonical representative.
    /// Defined for the integers and single-modulus rings.
    pub fn lift_integers(&self) -> Matrix {
        let z = RingSpec::integers();
        Matrix::from_fn(&z, self.rows, self.cols, |i, j| {
            RingElement::Int(self.ring.lift(self.get(i, j)))
        })
    }

    /// For a product-of-fields ring, the matrix of `k`-th components over the
    /// corresponding prime field.
    pub fn component(&self, k: usize) -> Matrix {
        let RingSpec::PrimeProduct(ps) = &self.ring else {
            panic!("component projection only applies to product rings");
        };
        let field = RingSpec::PrimeField(ps[k]);
        Matrix::from_fn(&field, self.rows, self.cols, |i, j| {
            let RingElement::Tuple(t) = self.get(i, j) else {
                panic!("product ring matrix holds non-tuple entry");
            };
            RingElement::Residue(t[k])
        })
    }

    /// Reassemble a product-ring matrix from per-factor component matrices.
    pub fn from_components(ring: &RingSpec, parts: &[Matrix]) -> Matrix {
        let RingSpec::PrimeProduct(ps) = ring else {
            panic!("component assembly only applies to product rings");
        };
        assert_eq!(parts.len(), ps.len());
        let (rows, cols) = (parts[0].rows, parts[0].cols);
        Matrix::from_fn(ring, rows, cols, |i, j| {
            RingElement::Tuple(
                parts
                    .iter()
                    .map(|m| {
                        let RingElement::Residue(r) = m.get(i, j) else {
                            panic!("component matrix holds non-residue entry");
                        };
                        *r
                    })
                    .collect(),
            )
        })
    }

    pub fn entry_bigint(&self, i: usize, j: usize) -> BigInt {
        self.ring.lift(self.get(i, j))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Concatenate matrices side by side. `parts` may be empty, producing a
/// `rows` by 0 matrix; otherwise every part must have `rows` rows.
pub fn hstack(ring: &RingSpec, rows: usize, parts: &[Matrix]) -> Matrix {
    assert!(parts.iter().all(|m| m.rows == rows), "row count mismatch in hstack");
    let cols: usize = parts.iter().map(|m| m.cols).sum();
    let mut out = Matrix::zero(ring, rows, cols);
    let mut offset = 0;
    for part in parts {
        for i in 0..rows {
            for j in 0..part.cols {
                out.set(i, offset + j, part.get(i, j).clone());
            }
        }
        offset += part.cols;
    }
    out
}

/// Stack matrices vertically. `parts` may be empty, producing 0 by `cols`.
pub fn vstack(ring: &RingSpec, cols: usize, parts: &[Matrix]) -> Matrix {
    assert!(parts.iter().all(|m| m.cols == cols), "column count mismatch in vstack");
    let rows: usize = parts.iter().map(|m| m.rows).sum();
    let mut out = Matrix::zero(ring, rows, cols);
    let mut offset = 0;
    for part in parts {
        for i in 0..part.rows {
            for j in 0..cols {
                out.set(offset + i, j, part.get(i, j).clone());
            }
        }
        offset += part.rows;
    }
    out
}

/// Direct sum of matrices along the diagonal.
pub fn block_diag(ring: &RingSpec, parts: &[Matrix]) -> Matrix {
    let rows: usize = parts.iter().map(|m| m.rows).sum();
    let cols: usize = parts.iter().map(|m| m.cols).sum();
    let mut out = Matrix::zero(ring, rows, cols);
    let (mut ro, mut co) = (0, 0);
    for part in parts {
        for i in 0..part.rows {
            for j in 0..part.cols {
                out.set(ro + i, co + j, part.get(i, j).clone());
            }
        }
        ro += part.rows;
        co += part.cols;
    }
    out
}
