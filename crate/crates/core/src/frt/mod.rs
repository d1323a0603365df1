//! The FRT bialgebra `A(R)`: generators `t_ij`, relations spanning
//! `im(α - β)`, the matrix-coalgebra coproduct, and the finite-degree
//! pairing with represented `U_q(g)` words.

mod pairing;

use serde::Serialize;

pub use pairing::{check_duality, pairing, DualityReport, DualityWitness, Pairing};

use crate::error::Result;
use crate::linalg::{check_braid, image_subspace, BraidedSpace, Echelon, SparseVec, SymMatrix};
use crate::ncalg::{complete_rewrite, hilbert, Alphabet, HilbertReport, NCPoly, NCWord, RelationSet};
use crate::scalar::Scalar;

/// Which stored matrix plays the role of `R` in `α` and `β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RSource {
    /// The braiding `Ψ = rtt ∘ τ`; the relations say `Ψ` commutes with `T⊗T`.
    Braiding,
    /// The RTT-form matrix itself.
    Rtt,
}

#[derive(Debug, Clone)]
pub struct FRTPresentation {
    n: usize,
    source: RSource,
    relations: RelationSet,
    rank: usize,
}

/// `α` and `β` on `T(V*⊗V)` in degree 2, indexed by `t_aj t_bl` with
/// `a, j` the first factor: `α(t_aj t_bl) = Σ X_(ab),(cd) t_cj t_dl` and
/// `β(t_aj t_bl) = Σ t_ac t_bd X_(cd),(jl)`.
pub fn alpha_beta(x: &SymMatrix, n: usize) -> (SymMatrix, SymMatrix) {
    let n2 = n * n;
    let size = n2 * n2;
    let t = |i: usize, j: usize| i * n + j;
    let word = |x1: usize, x2: usize| x1 * n2 + x2;
    let mut alpha = SymMatrix::zeros(size, size);
    let mut beta = SymMatrix::zeros(size, size);
    for a in 0..n {
        for b in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let col = word(t(a, j), t(b, l));
                    for c in 0..n {
                        for d in 0..n {
                            let xa = x.get(a * n + b, c * n + d);
                            if !xa.is_zero() {
                                let e = alpha.entry_mut(word(t(c, j), t(d, l)), col);
                                *e += xa;
                            }
                            let xb = x.get(c * n + d, j * n + l);
                            if !xb.is_zero() {
                                let e = beta.entry_mut(word(t(a, c), t(b, d)), col);
                                *e += xb;
                            }
                        }
                    }
                }
            }
        }
    }
    (alpha, beta)
}

impl FRTPresentation {
    pub fn new(space: &BraidedSpace, source: RSource) -> Self {
        let n = space.dim();
        let x = match source {
            RSource::Braiding => space.braiding(),
            RSource::Rtt => space.rtt(),
        };
        let (alpha, beta) = alpha_beta(x, n);
        let image = image_subspace(&alpha.sub(&beta));
        let rank = image.len();
        let polys = image.iter().map(|v| NCPoly::from_vector(v, n * n, 2)).collect();
        let relations = RelationSet::new(Alphabet::T(n), polys).expect("image vectors are quadratic");
        Self {
            n,
            source,
            relations,
            rank,
        }
    }

    /// Replace the relation set; used for mutation tests.
    pub fn with_relations(&self, relations: RelationSet) -> Self {
        Self {
            rank: relations.len(),
            relations,
            ..self.clone()
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> RSource {
        self.source
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// `rank(α - β)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Letter of `t_ij` (0-based).
    pub fn t(&self, i: usize, j: usize) -> u16 {
        (i * self.n + j) as u16
    }

    /// `Δ(w) = Σ_k t_{i⃗k⃗} ⊗ t_{k⃗j⃗}` for a `t`-word.
    pub fn coproduct_word(&self, w: &NCWord) -> Vec<(NCWord, NCWord)> {
        let n = self.n;
        let k = w.len();
        NCWord::all(n, k)
            .map(|mid| {
                let mut left = Vec::with_capacity(k);
                let mut right = Vec::with_capacity(k);
                for (&l, &m) in w.letters().iter().zip(mid.letters()) {
                    let (i, j) = (l as usize / n, l as usize % n);
                    left.push(self.t(i, m as usize));
                    right.push(self.t(m as usize, j));
                }
                (NCWord::new(left), NCWord::new(right))
            })
            .collect()
    }

    /// `ε(t_{i⃗j⃗}) = Π δ_ij`.
    pub fn counit_word(&self, w: &NCWord) -> Scalar {
        let n = self.n;
        if w.letters().iter().all(|&l| l as usize / n == l as usize % n) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn counit(&self, p: &NCPoly) -> Scalar {
        p.terms().map(|(w, c)| c.mul_ref(&self.counit_word(w))).sum()
    }

    /// `Δ(p)` for a homogeneous `p` of degree `k`, as a vector on
    /// `W^{⊗k} ⊗ W^{⊗k}` with `W = span(t_ij)`.
    fn coproduct_vector(&self, p: &NCPoly, k: usize) -> SparseVec {
        let m = self.n * self.n;
        let stride = m.pow(k as u32);
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            for (l, r) in self.coproduct_word(w) {
                let e = out.entry(l.index(m) * stride + r.index(m)).or_default();
                *e += c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// α, β built from the braiding.
pub fn frt_relations(space: &BraidedSpace) -> FRTPresentation {
    FRTPresentation::new(space, RSource::Braiding)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoidealEntry {
    pub relation: String,
    pub coproduct_ok: bool,
    pub counit_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoidealReport {
    pub entries: Vec<CoidealEntry>,
    pub all_pass: bool,
}

/// `Δ(r) ∈ J₂⊗W² + W²⊗J₂` and `ε(r) = 0` for every relation, where `J₂` is
/// the relation span. Membership is tested by applying `π⊗π` with `π` the
/// echelon remainder modulo `J₂`, whose kernel is exactly that sum.
pub fn frt_coideal_check(p: &FRTPresentation) -> CoidealReport {
    let m = p.n * p.n;
    let w2 = m * m;
    let mut ech = Echelon::new(w2);
    for r in p.relations.relations() {
        ech.insert(r.to_vector(m));
    }
    let proj: Vec<SparseVec> = (0..w2)
        .map(|i| ech.reduce(&SparseVec::from([(i, Scalar::one())])))
        .collect();
    let entries: Vec<CoidealEntry> = p
        .relations
        .relations()
        .iter()
        .map(|r| {
            let delta = p.coproduct_vector(r, 2);
            let mut image = SparseVec::new();
            for (idx, c) in &delta {
                let (x, y) = (idx / w2, idx % w2);
                for (i, a) in &proj[x] {
                    let ca = c.mul_ref(a);
                    for (j, b) in &proj[y] {
                        *image.entry(i * w2 + j).or_default() += &ca.mul_ref(b);
                    }
                }
            }
            image.retain(|_, v| !v.is_zero());
            CoidealEntry {
                relation: p.relations.display_relation(r),
                coproduct_ok: image.is_empty(),
                counit_ok: p.counit(r).is_zero(),
            }
        })
        .collect();
    let all_pass = entries.iter().all(|e| e.coproduct_ok && e.counit_ok);
    CoidealReport { entries, all_pass }
}

/// Graded dimensions of `T(V*⊗V)/⟨rel⟩` through `max_degree`.
pub fn frt_hilbert(p: &FRTPresentation, max_degree: usize) -> Result<HilbertReport> {
    let rs = complete_rewrite(&p.relations, max_degree.max(2))?;
    let mut report = hilbert(&rs, max_degree);
    report.dims.truncate(max_degree + 1);
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct FrtReport {
    pub n: usize,
    pub source: RSource,
    pub relation_count: usize,
    pub relations: Vec<String>,
    pub coideal: CoidealReport,
    pub hilbert: HilbertReport,
    pub warnings: Vec<String>,
}

/// Relations, coideal check and Hilbert function in one report.
pub fn frt_report(space: &BraidedSpace, source: RSource, max_degree: usize) -> Result<FrtReport> {
    let p = FRTPresentation::new(space, source);
    let coideal = frt_coideal_check(&p);
    let hilbert = frt_hilbert(&p, max_degree)?;
    let mut warnings = Vec::new();
    if !check_braid(space.braiding())?.holds {
        warnings.push("R does not satisfy the braid equation; flatness is not expected".into());
    }
    if p.relations.is_empty() {
        warnings.push("empty relation set: A(R) is the free algebra on the t_ij".into());
    }
    Ok(FrtReport {
        n: p.n,
        source,
        relation_count: p.rank,
        relations: p.relations.display_lines(),
        coideal,
        hilbert,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin_sl;

    #[test]
    fn one_dimensional_case_is_commutative() {
        let space = BraidedSpace::unchecked(
            SymMatrix::diagonal(vec![Scalar::parse("q^3 + 2").unwrap()]),
            SymMatrix::diagonal(vec![Scalar::parse("q^3 + 2").unwrap()]),
        )
        .unwrap();
        let p = frt_relations(&space);
        assert_eq!(p.rank(), 0);
        assert!(frt_coideal_check(&p).all_pass);
        assert_eq!(frt_hilbert(&p, 4).unwrap().dims, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn sl2_quantum_matrices() {
        let (_, space) = builtin_sl(2).unwrap();
        let p = frt_relations(&space);
        assert_eq!(p.rank(), 6);
        assert!(frt_coideal_check(&p).all_pass);
        assert_eq!(frt_hilbert(&p, 3).unwrap().dims, vec![1, 4, 10, 20]);
        let lines = p.relations().display_lines();
        assert!(lines.contains(&"t_11t_12 = q t_12t_11".to_string()), "{lines:?}");
    }

    #[test]
    fn rank_is_scale_invariant() {
        let (_, space) = builtin_sl(2).unwrap();
        for c in ["2", "q^3", "(q + 1)/(q^2 - 3)"] {
            let c = Scalar::parse(c).unwrap();
            let scaled = BraidedSpace::unchecked(space.rtt().scale(&c), space.braiding().scale(&c)).unwrap();
            assert_eq!(frt_relations(&scaled).rank(), 6);
        }
    }

    #[test]
    fn counit_kills_relations_and_coproduct_counit_law() {
        let (_, space) = builtin_sl(2).unwrap();
        let p = frt_relations(&space);
        for r in p.relations().relations() {
            assert!(p.counit(r).is_zero());
        }
        for l in 0..4u16 {
            let w = NCWord::new(vec![l]);
            let left: Vec<NCWord> = p
                .coproduct_word(&w)
                .into_iter()
                .filter(|(a, _)| p.counit_word(a).is_one())
                .map(|(_, b)| b)
                .collect();
            assert_eq!(left, vec![w.clone()]);
            let right: Vec<NCWord> = p
                .coproduct_word(&w)
                .into_iter()
                .filter(|(_, b)| p.counit_word(b).is_one())
                .map(|(a, _)| a)
                .collect();
            assert_eq!(right, vec![w]);
        }
    }

    #[test]
    fn perturbed_relation_breaks_coideal() {
        let (_, space) = builtin_sl(2).unwrap();
        let p = frt_relations(&space);
        let mut polys = p.relations().relations().to_vec();
        polys[0] = NCPoly::parse("t_11t_22 + 3 t_12t_21 - q t_21t_11", Alphabet::T(2)).unwrap();
        let bad = p.with_relations(RelationSet::new(Alphabet::T(2), polys).unwrap());
        assert!(!frt_coideal_check(&bad).all_pass);
    }
}
