use std::fmt;

use serde::{Deserialize, Serialize};

use super::echelon::{Echelon, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix over Q(q).
///
/// Tensor factors use row-major indexing: in `A ⊗ B` the pair `(i1, i2)`
/// maps to `i1 * dim(B) + i2`, so the first factor is most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl SymMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// The matrix unit `e_{i,j}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn diagonal(diag: Vec<Scalar>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn parse_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|t| Scalar::parse(t.as_ref())).collect())
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        Self::from_rows(parsed)
    }

    /// The flip `v ⊗ w ↦ w ⊗ v` on `V ⊗ V`, `dim V = n`.
    pub fn flip(n: usize) -> Self {
        let mut m = Self::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                m.set(j * n + i, i * n + j, Scalar::one());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols).map(<[Scalar]>::to_vec).collect()
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// Matrix product; skips zero entries on both sides.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let rhs_rows: Vec<Vec<(usize, &Scalar)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter_map(|j| {
                        let v = other.get(k, j);
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, row) in rhs_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in row {
                    let prod = if a.is_one() { (*b).clone() } else { a.mul_ref(b) };
                    *out.entry_mut(i, *j) += &prod;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.nonzeros() {
            out.set(j, i, v.clone());
        }
        out
    }

    /// Kronecker product under the row-major convention.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        let rhs: Vec<_> = other.nonzeros().collect();
        for (i1, j1, a) in self.nonzeros() {
            for (i2, j2, b) in &rhs {
                out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul_ref(b));
            }
        }
        out
    }

    /// `self^{⊗k}`; the 1x1 identity for `k = 0`.
    pub fn kron_power(&self, k: usize) -> Self {
        let mut acc = Self::identity(1);
        for _ in 0..k {
            acc = acc.kron(self);
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn column(&self, j: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            for i in 0..self.rows {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *out.entry(i).or_default() += &a.mul_ref(x);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Row-major flattening used when treating matrices as vectors.
    pub fn to_sparse_vec(&self) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v.clone()))
            .collect()
    }

    pub fn from_sparse_vec(rows: usize, cols: usize, v: &SparseVec) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (k, x) in v {
            m.data[*k] = x.clone();
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.rows);
        for j in 0..self.cols {
            ech.insert(self.column(j));
        }
        ech.rank()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        // row-reduce [A | I] treating rows as sparse vectors over 2n columns
        let mut ech = Echelon::new(2 * n);
        for i in 0..n {
            let mut row: SparseVec = (0..n)
                .filter_map(|j| {
                    let v = self.get(i, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            row.insert(n + i, Scalar::one());
            ech.insert(row);
        }
        let mut out = Self::zeros(n, n);
        for (p, row) in ech.rows() {
            if *p >= n {
                return Err(Error::InvalidArgument("matrix is singular".into()));
            }
            for (k, v) in row.range(n..) {
                out.set(*p, k - n, v.clone());
            }
        }
        if ech.rank() < n || ech.rows().any(|(p, _)| *p >= n) {
            return Err(Error::InvalidArgument("matrix is singular".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}

/// Wire form of a matrix: a dimension plus rows of Scalar-grammar strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: Vec<Vec<String>>,
}

impl From<&SymMatrix> for MatrixDoc {
    fn from(m: &SymMatrix) -> Self {
        Self {
            rows: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}
