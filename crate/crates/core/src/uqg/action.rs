use std::collections::BTreeMap;

use super::cartan::CartanData;
use super::presentation::{Generator, UqPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec, SymMatrix};
use crate::ncalg::{NCPoly, NCWord};
use crate::scalar::Scalar;

/// Finite coalgebra on a labelled basis whose element 0 is the group-like
/// unit. `coproduct[c]` lists `(coefficient, left, right)` basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCoalgebra {
    labels: Vec<String>,
    coproduct: Vec<Vec<(Scalar, usize, usize)>>,
    counit: Vec<Scalar>,
}

impl GeneratorCoalgebra {
    /// Basis `{1, E_i, F_i, K_i, K_i^-1}`; generator `g` sits at
    /// `1 + g.letter(n)`.
    pub fn quantum(p: &UqPresentation) -> Self {
        let n = p.rank();
        let idx = |g: Option<Generator>| g.map_or(0, |g| 1 + g.letter(n) as usize);
        let mut labels = vec!["1".to_string()];
        let mut coproduct = vec![vec![(Scalar::one(), 0, 0)]];
        let mut counit = vec![Scalar::one()];
        for g in p.generators() {
            labels.push(g.to_string());
            coproduct.push(
                p.coproduct(g)
                    .into_iter()
                    .map(|(c, a, b)| (c, idx(a), idx(b)))
                    .collect(),
            );
            counit.push(p.counit(g));
        }
        Self {
            labels,
            coproduct,
            counit,
        }
    }

    /// Basis `{1} ∪ g` with `1` group-like and the Lie generators primitive.
    pub fn classical(labels: &[String]) -> Self {
        let mut all = vec!["1".to_string()];
        all.extend(labels.iter().cloned());
        let mut coproduct = vec![vec![(Scalar::one(), 0, 0)]];
        let mut counit = vec![Scalar::one()];
        for i in 1..=labels.len() {
            coproduct.push(vec![(Scalar::one(), i, 0), (Scalar::one(), 0, i)]);
            counit.push(Scalar::zero());
        }
        Self {
            labels: all,
            coproduct,
            counit,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, c: usize) -> &str {
        &self.labels[c]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coproduct(&self, c: usize) -> &[(Scalar, usize, usize)] {
        &self.coproduct[c]
    }

    pub fn counit(&self, c: usize) -> &Scalar {
        &self.counit[c]
    }

    /// Replace one coproduct row; used to build deliberately broken
    /// coalgebras.
    pub fn with_coproduct(mut self, c: usize, terms: Vec<(Scalar, usize, usize)>) -> Self {
        self.coproduct[c] = terms;
        self
    }

    pub fn check_coassociativity(&self) -> bool {
        (0..self.len()).all(|c| {
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right = left.clone();
            for (x, a, b) in &self.coproduct[c] {
                for (y, a1, a2) in &self.coproduct[*a] {
                    *left.entry((*a1, *a2, *b)).or_default() += &x.mul_ref(y);
                }
                for (y, b1, b2) in &self.coproduct[*b] {
                    *right.entry((*a, *b1, *b2)).or_default() += &x.mul_ref(y);
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            left == right
        })
    }

    pub fn check_counit(&self) -> bool {
        (0..self.len()).all(|c| {
            let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
            let mut right = left.clone();
            for (x, a, b) in &self.coproduct[c] {
                *left.entry(*b).or_default() += &x.mul_ref(&self.counit[*a]);
                *right.entry(*a).or_default() += &x.mul_ref(&self.counit[*b]);
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            let target = BTreeMap::from([(c, Scalar::one())]);
            left == target && right == target
        })
    }
}

/// A coalgebra acting on `V` by matrices, extended to `V^{⊗k}` through the
/// coproduct: `σ(c)(v ⊗ w) = Σ σ(c_(1))(v) ⊗ σ(c_(2))(w)`.
#[derive(Debug, Clone)]
pub struct MeasuringAction {
    coalgebra: GeneratorCoalgebra,
    matrices: Vec<SymMatrix>,
    dim: usize,
}

impl MeasuringAction {
    /// `matrices[c]` is the action of basis element `c` on `V`; the unit's
    /// entry must be the identity.
    pub fn new(coalgebra: GeneratorCoalgebra, matrices: Vec<SymMatrix>) -> Result<Self> {
        if matrices.len() != coalgebra.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for a coalgebra of dimension {}",
                matrices.len(),
                coalgebra.len()
            )));
        }
        let dim = matrices[0].rows();
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices differ in size".into()));
        }
        if !matrices[0].is_identity() {
            return Err(Error::InvalidArgument("the unit must act as the identity".into()));
        }
        Ok(Self {
            coalgebra,
            matrices,
            dim,
        })
    }

    pub fn coalgebra(&self) -> &GeneratorCoalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, c: usize) -> &SymMatrix {
        &self.matrices[c]
    }

    pub fn with_coalgebra(&self, coalgebra: GeneratorCoalgebra) -> Result<Self> {
        Self::new(coalgebra, self.matrices.clone())
    }

    /// `σ(c)` applied to a basis word of `V^{⊗k}`, as a coordinate vector.
    pub fn act_word(&self, c: usize, w: &[u16]) -> SparseVec {
        let n = self.dim;
        match w {
            [] => {
                let e = self.coalgebra.counit(c);
                if e.is_zero() {
                    SparseVec::new()
                } else {
                    SparseVec::from([(0, e.clone())])
                }
            }
            [l] => self.matrices[c].column(*l as usize),
            [l, rest @ ..] => {
                let stride = n.pow(rest.len() as u32);
                let mut out = SparseVec::new();
                for (coef, a, b) in self.coalgebra.coproduct(c) {
                    let head = self.matrices[*a].column(*l as usize);
                    if head.is_empty() {
                        continue;
                    }
                    let tail = self.act_word(*b, rest);
                    for (i, x) in &head {
                        let cx = coef.mul_ref(x);
                        for (j, y) in &tail {
                            let e = out.entry(i * stride + j).or_default();
                            *e += &cx.mul_ref(y);
                        }
                    }
                }
                out.retain(|_, v| !v.is_zero());
                out
            }
        }
    }

    /// `σ(c)` on `V^{⊗k}`.
    pub fn tensor_action(&self, c: usize, k: usize) -> SymMatrix {
        let n = self.dim;
        let size = n.pow(k as u32);
        let mut m = SymMatrix::zeros(size, size);
        for col in 0..size {
            let w = NCWord::from_index(col, n, k);
            for (row, v) in self.act_word(c, w.letters()) {
                m.set(row, col, v);
            }
        }
        m
    }

    /// `σ(c)` on an element of `TV`, degree by degree.
    pub fn act_poly(&self, c: usize, p: &NCPoly) -> NCPoly {
        let n = self.dim;
        let mut out = NCPoly::zero();
        for (w, coef) in p.terms() {
            for (idx, v) in self.act_word(c, w.letters()) {
                out.add_term(NCWord::from_index(idx, n, w.len()), &v.mul_ref(coef));
            }
        }
        out
    }
}

/// Generator matrices for `U_q(g)` on a space `V`.
#[derive(Debug, Clone)]
pub struct Representation {
    presentation: UqPresentation,
    matrices: BTreeMap<Generator, SymMatrix>,
    dim: usize,
}

impl Representation {
    /// `K_i^-1` is computed by inversion when not supplied.
    pub fn new(presentation: UqPresentation, mut matrices: BTreeMap<Generator, SymMatrix>) -> Result<Self> {
        let n = presentation.rank();
        let dim = matrices
            .values()
            .next()
            .map(SymMatrix::rows)
            .ok_or_else(|| Error::InvalidArgument("no generator matrices".into()))?;
        for i in 0..n {
            if !matrices.contains_key(&Generator::KInv(i)) {
                let k = matrices
                    .get(&Generator::K(i))
                    .ok_or_else(|| Error::InvalidArgument(format!("missing K_{}", i + 1)))?;
                let inv = k.inverse()?;
                matrices.insert(Generator::KInv(i), inv);
            }
        }
        for g in presentation.generators() {
            let m = matrices
                .get(&g)
                .ok_or_else(|| Error::InvalidArgument(format!("missing {g}")))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!("{g} is not {dim}x{dim}")));
            }
        }
        if let Some(g) = matrices.keys().find(|g| g.index() >= n) {
            return Err(Error::UnknownSymbol(g.to_string()));
        }
        Ok(Self {
            presentation,
            matrices,
            dim,
        })
    }

    pub fn from_cartan(cartan: CartanData, matrices: BTreeMap<Generator, SymMatrix>) -> Result<Self> {
        Self::new(UqPresentation::from_cartan(cartan)?, matrices)
    }

    pub fn presentation(&self) -> &UqPresentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: Generator) -> &SymMatrix {
        &self.matrices[&g]
    }

    pub fn with_matrix(&self, g: Generator, m: SymMatrix) -> Result<Self> {
        let mut matrices = self.matrices.clone();
        matrices.insert(g, m);
        Self::new(self.presentation.clone(), matrices)
    }

    /// Evaluate a polynomial in the generators.
    pub fn eval(&self, p: &NCPoly) -> SymMatrix {
        let n = self.presentation.rank();
        let mut acc = SymMatrix::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            let mut m = SymMatrix::identity(self.dim);
            for &l in w.letters() {
                m = m.mul(&self.matrices[&Generator::from_letter(l, n)]);
            }
            acc = acc.add(&m.scale(c));
        }
        acc
    }

    /// The measuring action of the generating coalgebra.
    pub fn action(&self) -> MeasuringAction {
        let coalgebra = GeneratorCoalgebra::quantum(&self.presentation);
        let mut mats = vec![SymMatrix::identity(self.dim)];
        mats.extend(
            self.presentation
                .generators()
                .iter()
                .map(|g| self.matrices[g].clone()),
        );
        MeasuringAction::new(coalgebra, mats).expect("validated at construction")
    }

    /// Basis index of `g` in [`Representation::action`].
    pub fn action_index(&self, g: Generator) -> usize {
        1 + g.letter(self.presentation.rank()) as usize
    }

    /// Action of `g` on `V^{⊗k}` via the iterated coproduct.
    pub fn coproduct_action(&self, g: Generator, k: usize) -> SymMatrix {
        self.action().tensor_action(self.action_index(g), k)
    }

    /// Linear independence of the `4n` generator matrices.
    pub fn generators_independent(&self) -> bool {
        let mut ech = Echelon::new(self.dim * self.dim);
        self.matrices.values().all(|m| ech.insert(m.to_sparse_vec()))
    }
}
