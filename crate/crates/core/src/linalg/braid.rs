use serde::Serialize;

use super::echelon::{Echelon, SparseVec};
use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, UniPoly};

/// Side length `n` of an operator on `V ⊗ V` (`n² x n²`).
pub(crate) fn pair_dim(op: &SymMatrix) -> Result<usize> {
    if !op.is_square() {
        return Err(Error::DimensionMismatch("operator on V⊗V must be square".into()));
    }
    let n = (op.rows() as f64).sqrt().round() as usize;
    if n * n != op.rows() || n == 0 {
        return Err(Error::DimensionMismatch(format!(
            "{} is not a perfect square",
            op.rows()
        )));
    }
    Ok(n)
}

/// `I^{⊗left} ⊗ op ⊗ I^{⊗right}` for an operator on `V^{⊗2}`.
pub fn embed_pair(op: &SymMatrix, n: usize, left: usize, right: usize) -> SymMatrix {
    let l = SymMatrix::identity(n.pow(left as u32));
    let r = SymMatrix::identity(n.pow(right as u32));
    l.kron(op).kron(&r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidCheck {
    pub holds: bool,
    /// Input basis vector `v_i ⊗ v_j ⊗ v_k` (0-based) where the sides differ.
    pub counterexample: Option<(usize, usize, usize)>,
}

/// Checks `(1⊗R)(R⊗1)(1⊗R) = (R⊗1)(1⊗R)(R⊗1)` on `V^{⊗3}`.
pub fn check_braid(op: &SymMatrix) -> Result<BraidCheck> {
    let n = pair_dim(op)?;
    let r1 = embed_pair(op, n, 0, 1);
    let r2 = embed_pair(op, n, 1, 0);
    let lhs = r2.mul(&r1).mul(&r2);
    let rhs = r1.mul(&r2).mul(&r1);
    for col in 0..lhs.cols() {
        if lhs.column(col) != rhs.column(col) {
            return Ok(BraidCheck {
                holds: false,
                counterexample: Some((col / (n * n), (col / n) % n, col % n)),
            });
        }
    }
    Ok(BraidCheck {
        holds: true,
        counterexample: None,
    })
}

/// A finite-dimensional space with an invertible solution of the braid
/// equation.
///
/// `rtt` is the R-matrix in the form used by the RTT presentation; the
/// braiding proper is `braiding = rtt ∘ τ`. Every braided-algebra
/// construction reads `braiding`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedSpace {
    dim: usize,
    rtt: SymMatrix,
    braiding: SymMatrix,
}

impl BraidedSpace {
    /// From an RTT-form matrix; the braiding is `rtt ∘ τ`.
    pub fn from_rtt(rtt: SymMatrix) -> Result<Self> {
        let n = pair_dim(&rtt)?;
        let braiding = rtt.mul(&SymMatrix::flip(n));
        Self::validated(n, rtt, braiding)
    }

    /// From the braiding itself; `rtt = braiding ∘ τ`.
    pub fn from_braiding(braiding: SymMatrix) -> Result<Self> {
        let n = pair_dim(&braiding)?;
        let rtt = braiding.mul(&SymMatrix::flip(n));
        Self::validated(n, rtt, braiding)
    }

    /// The flip braiding on an `n`-dimensional space (classical case).
    pub fn flip(n: usize) -> Self {
        let t = SymMatrix::flip(n);
        Self {
            dim: n,
            rtt: SymMatrix::identity(n * n),
            braiding: t,
        }
    }

    fn validated(dim: usize, rtt: SymMatrix, braiding: SymMatrix) -> Result<Self> {
        if braiding.rank() != dim * dim {
            return Err(Error::InvalidArgument("braiding is not invertible".into()));
        }
        let check = check_braid(&braiding)?;
        if !check.holds {
            let (i, j, k) = check.counterexample.unwrap();
            return Err(Error::InvalidArgument(format!(
                "braid equation fails on v{}⊗v{}⊗v{}",
                i + 1,
                j + 1,
                k + 1
            )));
        }
        Ok(Self { dim, rtt, braiding })
    }

    /// Skip validation; used to build deliberately broken spaces in tests and
    /// for operators that are checked separately.
    pub fn unchecked(rtt: SymMatrix, braiding: SymMatrix) -> Result<Self> {
        let dim = pair_dim(&braiding)?;
        if rtt.rows() != braiding.rows() {
            return Err(Error::DimensionMismatch("rtt and braiding sizes differ".into()));
        }
        Ok(Self { dim, rtt, braiding })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rtt(&self) -> &SymMatrix {
        &self.rtt
    }

    pub fn braiding(&self) -> &SymMatrix {
        &self.braiding
    }
}

/// `Ψ^{m,n}` on `V^{⊗(m+n)}` together with its source data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingExtension {
    pub m: usize,
    pub n: usize,
    pub operator: SymMatrix,
}

/// Moves the first `m`-block past the last `n`-block by adjacent braidings:
/// the last factor of the first block travels right first.
pub fn extend_braiding(space: &BraidedSpace, m: usize, n: usize) -> BraidingExtension {
    let mut steps = Vec::new();
    for a in (0..m).rev() {
        for j in 0..n {
            steps.push(a + j);
        }
    }
    BraidingExtension {
        m,
        n,
        operator: compose_adjacent(space, m + n, &steps),
    }
}

/// Same operator assembled column-first: each factor of the second block
/// travels left across the whole first block in turn.
pub fn extend_braiding_column_first(space: &BraidedSpace, m: usize, n: usize) -> BraidingExtension {
    let mut steps = Vec::new();
    for b in 0..n {
        for p in (b..m + b).rev() {
            steps.push(p);
        }
    }
    BraidingExtension {
        m,
        n,
        operator: compose_adjacent(space, m + n, &steps),
    }
}

/// Apply the braiding at tensor positions `(p, p+1)` for each `p` in order.
pub fn compose_adjacent(space: &BraidedSpace, k: usize, steps: &[usize]) -> SymMatrix {
    let n = space.dim;
    let mut acc = SymMatrix::identity(n.pow(k as u32));
    for &p in steps {
        let step = embed_pair(&space.braiding, n, p, k - p - 2);
        acc = step.mul(&acc);
    }
    acc
}

/// Least-degree monic annihilating polynomial, by linear dependence of
/// successive powers.
pub fn minimal_poly(op: &SymMatrix) -> Result<UniPoly> {
    if !op.is_square() {
        return Err(Error::DimensionMismatch(
            "minimal polynomial of non-square matrix".into(),
        ));
    }
    let size = op.rows() * op.cols();
    let max_deg = op.rows();
    let mut ech = Echelon::new(size + max_deg + 1);
    let mut power = SymMatrix::identity(op.rows());
    for k in 0..=max_deg {
        let mut v = power.to_sparse_vec();
        v.insert(size + k, Scalar::one());
        let r = ech.reduce(&v);
        if r.keys().next().is_none_or(|&p| p >= size) {
            let mut coeffs = vec![Scalar::zero(); k + 1];
            for (idx, c) in r.range(size..) {
                coeffs[idx - size] = c.clone();
            }
            return UniPoly::from_coeffs(coeffs).monic();
        }
        ech.insert(v);
        power = power.mul(op);
    }
    unreachable!("Cayley-Hamilton bounds the degree")
}

/// Echelon basis of the column space.
pub fn image_subspace(op: &SymMatrix) -> Vec<SparseVec> {
    let mut ech = Echelon::new(op.rows());
    for j in 0..op.cols() {
        ech.insert(op.column(j));
    }
    ech.basis()
}

/// Basis of `{X : XA = AX for every listed A}`.
pub fn solve_commutant(actions: &[SymMatrix]) -> Result<Vec<SymMatrix>> {
    let Some(first) = actions.first() else {
        return Err(Error::InvalidArgument("no action matrices".into()));
    };
    let n = first.rows();
    if actions.iter().any(|a| a.rows() != n || a.cols() != n) {
        return Err(Error::DimensionMismatch(
            "action matrices must be square of one size".into(),
        ));
    }
    // unknown X_{kl} sits at coordinate k*n + l
    let mut ech = Echelon::new(n * n);
    for a in actions {
        let nz: Vec<(usize, usize, Scalar)> = a.nonzeros().map(|(i, j, v)| (i, j, v.clone())).collect();
        for i in 0..n {
            for j in 0..n {
                // (AX - XA)_{ij} = Σ_k A_ik X_kj - Σ_k X_ik A_kj
                let mut row = SparseVec::new();
                for (r, c, v) in &nz {
                    if *r == i {
                        *row.entry(c * n + j).or_default() += v;
                    }
                    if *c == j {
                        *row.entry(i * n + r).or_default() -= v;
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(ech
        .nullspace()
        .iter()
        .map(|v| SymMatrix::from_sparse_vec(n, n, v))
        .collect())
}

/// Is `target` in the span of `basis`?
pub fn in_span(basis: &[SymMatrix], target: &SymMatrix) -> bool {
    let mut ech = Echelon::new(target.rows() * target.cols());
    for b in basis {
        ech.insert(b.to_sparse_vec());
    }
    ech.contains(&target.to_sparse_vec())
}
