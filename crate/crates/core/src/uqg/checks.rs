use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::action::{GeneratorCoalgebra, MeasuringAction, Representation};
use crate::error::Result;
use crate::linalg::{extend_braiding, BraidedSpace, MatrixDoc, SymMatrix};
use crate::ncalg::{NCPoly, NCWord, RelationSet, RewriteSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub checks: Vec<RelationCheck>,
    pub all_pass: bool,
}

/// Evaluate every defining relation on the generator matrices.
pub fn check_representation(rep: &Representation) -> RepresentationReport {
    let checks: Vec<RelationCheck> = rep
        .presentation()
        .relations()
        .iter()
        .map(|r| {
            let m = rep.eval(&r.poly);
            let holds = m.is_zero();
            RelationCheck {
                relation: r.label.clone(),
                holds,
                residual: (!holds).then(|| MatrixDoc::from(&m)),
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.holds);
    RepresentationReport { checks, all_pass }
}

/// `m(S⊗1)Δ(g) = ε(g)·1` on `V`, per generator.
pub fn check_antipode(rep: &Representation) -> Vec<(String, bool)> {
    let p = rep.presentation();
    let n = p.rank();
    p.generators()
        .into_iter()
        .map(|g| {
            let mut acc = SymMatrix::zeros(rep.dim(), rep.dim());
            for (c, a, b) in p.coproduct(g) {
                let s = a.map_or_else(|| NCPoly::word(&[]), |a| p.antipode(a));
                let right = b.map_or_else(|| NCPoly::word(&[]), |b| NCPoly::word(&[b.letter(n)]));
                acc = acc.add(&rep.eval(&s.mul(&right)).scale(&c));
            }
            let target = SymMatrix::scalar_identity(rep.dim(), &p.counit(g));
            (g.to_string(), acc == target)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorBraidCheck {
    pub generator: String,
    /// `Ψ` commutes with the action on `V⊗V`.
    pub degree2: bool,
    /// `Ψ^{2,1}` and `Ψ^{1,2}` commute with the action on `V^{⊗3}`.
    pub degree3: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<MatrixDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreservesReport {
    pub generators: Vec<GeneratorBraidCheck>,
    pub all_pass: bool,
}

/// Whether every coalgebra element commutes with the braiding on `V⊗V`
/// and with its block extensions on `V^{⊗3}`.
///
/// This is the equation form `a ∘ (1_H ⊗ R) = R ∘ a` of admissibility for
/// actions. The usual commutative-square picture is sometimes labelled
/// `R ⊗ 1_B` on the module side as well; that label belongs to coactions
/// and is not what is checked here.
pub fn check_preserves_r(action: &MeasuringAction, space: &BraidedSpace) -> PreservesReport {
    let psi = space.braiding();
    let psi21 = extend_braiding(space, 2, 1).operator;
    let psi12 = extend_braiding(space, 1, 2).operator;
    let generators: Vec<GeneratorBraidCheck> = (1..action.coalgebra().len())
        .map(|c| {
            let a2 = action.tensor_action(c, 2);
            let comm = psi.commutator(&a2);
            let a3 = action.tensor_action(c, 3);
            let degree3 = psi21.commutator(&a3).is_zero() && psi12.commutator(&a3).is_zero();
            GeneratorBraidCheck {
                generator: action.coalgebra().label(c).to_string(),
                degree2: comm.is_zero(),
                degree3,
                residual: (!comm.is_zero()).then(|| MatrixDoc::from(&comm)),
            }
        })
        .collect();
    let all_pass = generators.iter().all(|g| g.degree2 && g.degree3);
    PreservesReport { generators, all_pass }
}

/// `σ(c)(w)` reduced in the quotient.
pub fn act_on_quotient(
    action: &MeasuringAction,
    rs: &RewriteSystem,
    c: usize,
    word: &NCWord,
) -> Result<NCPoly> {
    let p = action.act_poly(c, &NCPoly::monomial(word.clone(), crate::Scalar::one()));
    rs.normal_form(&p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealCheck {
    pub generator: String,
    pub relation: String,
    pub preserved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub checks: Vec<IdealCheck>,
    pub all_pass: bool,
}

/// `σ(c)(r) ∈ span(rels)` for every generator and relation.
pub fn check_ideal_preserved(action: &MeasuringAction, rels: &RelationSet) -> IdealReport {
    let mut checks = Vec::new();
    for c in 1..action.coalgebra().len() {
        for r in rels.relations() {
            let img = action.act_poly(c, r);
            checks.push(IdealCheck {
                generator: action.coalgebra().label(c).to_string(),
                relation: rels.display_relation(r),
                preserved: rels.spans(&img),
            });
        }
    }
    let all_pass = checks.iter().all(|c| c.preserved);
    IdealReport { checks, all_pass }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasuringCounterexample {
    pub generator: String,
    pub left: String,
    pub right: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasuringReport {
    pub max_degree: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub identities_checked: usize,
    pub counterexamples: Vec<MeasuringCounterexample>,
}

impl MeasuringReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Pairs of irreducible words with total degree at most `max_degree`.
fn word_pairs(rs: &RewriteSystem, max_degree: usize) -> Vec<(NCWord, NCWord)> {
    let by_degree: Vec<Vec<NCWord>> = (0..=max_degree).map(|d| rs.irreducible_words(d)).collect();
    let mut out = Vec::new();
    for total in 0..=max_degree {
        for da in 0..=total {
            for a in &by_degree[da] {
                for b in &by_degree[total - da] {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// Verify `σ(c)(aa') = Σ σ(c_(1))(a) σ(c_(2))(a')` in the quotient for
/// every basis element `c` and monomial pairs `(a, a')`.
///
/// All pairs are used when there are at most `max(500, samples)` of them;
/// otherwise `samples` pairs are drawn with a seeded generator.
pub fn check_measuring(
    action: &MeasuringAction,
    rs: &RewriteSystem,
    samples: usize,
    max_degree: usize,
    seed: u64,
) -> Result<MeasuringReport> {
    if max_degree > rs.bound() {
        return Err(crate::Error::DegreeBound {
            requested: max_degree,
            bound: rs.bound(),
        });
    }
    let pairs = word_pairs(rs, max_degree);
    let exhaustive = pairs.len() <= samples.max(500);
    let chosen: Vec<&(NCWord, NCWord)> = if exhaustive {
        pairs.iter().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = sample(&mut rng, pairs.len(), samples).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| &pairs[i]).collect()
    };
    let alpha = rs.alphabet();
    let show = |p: &NCPoly| p.display_with(alpha, rs.order());
    let word = |w: &NCWord| NCPoly::monomial(w.clone(), crate::Scalar::one());
    let mut counterexamples = Vec::new();
    let mut identities = 0;
    let coalg = action.coalgebra();
    for c in 1..coalg.len() {
        for (a, b) in &chosen {
            let prod = rs.normal_form(&word(a).mul(&word(b)))?;
            let lhs = rs.normal_form(&action.act_poly(c, &prod))?;
            let mut rhs = NCPoly::zero();
            for (coef, c1, c2) in coalg.coproduct(c) {
                let x = rs.normal_form(&action.act_poly(*c1, &word(a)))?;
                if x.is_zero() {
                    continue;
                }
                let y = rs.normal_form(&action.act_poly(*c2, &word(b)))?;
                rhs = rhs.add(&rs.normal_form(&x.mul(&y))?.scale(coef));
            }
            identities += 1;
            if lhs != rhs {
                counterexamples.push(MeasuringCounterexample {
                    generator: coalg.label(c).to_string(),
                    left: alpha.word_name(a),
                    right: alpha.word_name(b),
                    lhs: show(&lhs),
                    rhs: show(&rhs),
                });
            }
        }
    }
    Ok(MeasuringReport {
        max_degree,
        seed,
        exhaustive,
        pairs_checked: chosen.len(),
        identities_checked: identities,
        counterexamples,
    })
}

/// Leibniz rule for Lie-algebra actions on a quotient: the measuring check
/// run with every generator primitive. Always exhaustive.
pub fn check_derivation_measuring(
    lie_actions: &[SymMatrix],
    rs: &RewriteSystem,
    max_degree: usize,
) -> Result<MeasuringReport> {
    let labels: Vec<String> = (1..=lie_actions.len()).map(|i| format!("X_{i}")).collect();
    let coalgebra = GeneratorCoalgebra::classical(&labels);
    let dim = rs.generators();
    let mut mats = vec![SymMatrix::identity(dim)];
    mats.extend(lie_actions.iter().cloned());
    let action = MeasuringAction::new(coalgebra, mats)?;
    check_measuring(&action, rs, usize::MAX, max_degree, 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    pub generator_matrices_independent: bool,
    pub note: String,
}

/// Linear independence of the generator matrices: necessary for the
/// generating coalgebra to act faithfully, not shown here to be sufficient.
pub fn check_faithful_on_generators(rep: &Representation) -> FaithfulnessReport {
    FaithfulnessReport {
        generator_matrices_independent: rep.generators_independent(),
        note: "linear independence of the generator matrices is necessary for faithfulness on the \
               generating coalgebra; it is not claimed to be sufficient"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{builtin_sl, classical_sl2_actions};
    use crate::linalg::{solve_commutant, BraidedSpace};
    use crate::ncalg::{complete_rewrite, relations_from_image};
    use crate::scalar::{Scalar, UniPoly};
    use crate::uqg::{CartanData, Generator};
    use std::collections::BTreeMap;

    fn sym_q(n: usize, d: usize) -> (Representation, BraidedSpace, RewriteSystem) {
        let (rep, space) = builtin_sl(n).unwrap();
        let rels = relations_from_image(&space, &UniPoly::parse("x - q").unwrap());
        let rs = complete_rewrite(&rels, d).unwrap();
        (rep, space, rs)
    }

    #[test]
    fn sl2_relations_hold_and_perturbation_fails() {
        let (rep, _) = builtin_sl(2).unwrap();
        assert!(check_representation(&rep).all_pass);
        let mut e = rep.matrix(Generator::E(0)).clone();
        e.set(0, 0, Scalar::one());
        let bad = rep.with_matrix(Generator::E(0), e).unwrap();
        let report = check_representation(&bad);
        let kek = report
            .checks
            .iter()
            .find(|c| c.relation == "K_1E_1K_1^-1 = q^2 E_1")
            .unwrap();
        assert!(!kek.holds && kek.residual.is_some());
    }

    #[test]
    fn trivial_representation_passes() {
        let z = SymMatrix::zeros(1, 1);
        let mats = BTreeMap::from([
            (Generator::E(0), z.clone()),
            (Generator::F(0), z),
            (Generator::K(0), SymMatrix::identity(1)),
        ]);
        let rep = Representation::from_cartan(CartanData::type_a(1).unwrap(), mats).unwrap();
        assert!(check_representation(&rep).all_pass);
    }

    #[test]
    fn coproduct_action_matches_table() {
        let (rep, _) = builtin_sl(2).unwrap();
        let e = rep.matrix(Generator::E(0));
        let k = rep.matrix(Generator::K(0));
        let expected = e.kron(k).add(&SymMatrix::identity(2).kron(e));
        assert_eq!(rep.coproduct_action(Generator::E(0), 2), expected);
        assert_eq!(rep.coproduct_action(Generator::K(0), 3), k.kron_power(3));
        assert!(rep.coproduct_action(Generator::E(0), 0).is_zero());
        assert!(rep.coproduct_action(Generator::K(0), 0).is_identity());
        assert!(check_antipode(&rep).iter().all(|(_, ok)| *ok));
        assert!(check_faithful_on_generators(&rep).generator_matrices_independent);
    }

    #[test]
    fn braiding_preserved_but_rtt_is_not() {
        let (rep, space) = builtin_sl(2).unwrap();
        let action = rep.action();
        assert!(check_preserves_r(&action, &space).all_pass);
        let raw = BraidedSpace::unchecked(space.rtt().clone(), space.rtt().clone()).unwrap();
        let report = check_preserves_r(&action, &raw);
        let e = report.generators.iter().find(|g| g.generator == "E_1").unwrap();
        assert!(!e.degree2 && e.residual.is_some());
        let id = BraidedSpace::unchecked(SymMatrix::identity(4), SymMatrix::identity(4)).unwrap();
        assert!(check_preserves_r(&action, &id).all_pass);
    }

    #[test]
    fn commutant_of_sl2_action() {
        let (rep, space) = builtin_sl(2).unwrap();
        let actions: Vec<SymMatrix> = rep
            .presentation()
            .generators()
            .into_iter()
            .map(|g| rep.coproduct_action(g, 2))
            .collect();
        let basis = solve_commutant(&actions).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(crate::linalg::in_span(&basis, space.braiding()));
        assert!(!crate::linalg::in_span(&basis, space.rtt()));
    }

    #[test]
    fn action_on_quantum_plane() {
        let (rep, _, rs) = sym_q(2, 3);
        let action = rep.action();
        let e = rep.action_index(Generator::E(0));
        let got = act_on_quotient(&action, &rs, e, &NCWord::new(vec![0, 0])).unwrap();
        let expected = NCPoly::monomial(NCWord::new(vec![1, 0]), Scalar::parse("q + q^-1").unwrap());
        assert_eq!(got, expected);
        assert!(act_on_quotient(&action, &rs, e, &NCWord::unit())
            .unwrap()
            .is_zero());
        let k = rep.action_index(Generator::K(0));
        let w = NCWord::new(vec![1, 0, 0]);
        let kw = act_on_quotient(&action, &rs, k, &w).unwrap();
        assert_eq!(kw.len(), 1);
        assert!(kw.terms().all(|(x, _)| x == &w));
    }

    #[test]
    fn ideals_preserved_for_both_polynomials() {
        let (rep, space) = builtin_sl(2).unwrap();
        for f in ["x - q", "x + q^-1"] {
            let rels = relations_from_image(&space, &UniPoly::parse(f).unwrap());
            assert!(check_ideal_preserved(&rep.action(), &rels).all_pass, "{f}");
        }
    }

    #[test]
    fn measuring_holds_and_mutation_breaks_it() {
        let (rep, _, rs) = sym_q(2, 3);
        let action = rep.action();
        let report = check_measuring(&action, &rs, 100, 3, 7).unwrap();
        assert!(report.exhaustive && report.passed());
        let e = rep.action_index(Generator::E(0));
        let k = rep.action_index(Generator::K(0));
        let swapped = action
            .coalgebra()
            .clone()
            .with_coproduct(e, vec![(Scalar::one(), k, e), (Scalar::one(), e, 0)]);
        let broken = action.with_coalgebra(swapped).unwrap();
        let report = check_measuring(&broken, &rs, 100, 3, 7).unwrap();
        assert!(!report.passed());
        let first = &report.counterexamples[0];
        assert_eq!(first.left.len() + first.right.len(), 6, "{first:?}");
    }

    #[test]
    fn sampling_is_seeded() {
        // free algebra on three letters: 547 pairs up to degree 4
        let (rep, _) = builtin_sl(3).unwrap();
        let rs =
            complete_rewrite(&crate::ncalg::RelationSet::empty(crate::ncalg::Alphabet::X(3)), 4).unwrap();
        let action = rep.action();
        let a = check_measuring(&action, &rs, 20, 4, 11).unwrap();
        let b = check_measuring(&action, &rs, 20, 4, 11).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a, b);
        assert!(a.passed());
    }

    #[test]
    fn classical_derivations() {
        let rels = relations_from_image(&BraidedSpace::flip(2), &UniPoly::parse("x - 1").unwrap());
        let rs = complete_rewrite(&rels, 4).unwrap();
        let report = check_derivation_measuring(&classical_sl2_actions(), &rs, 4).unwrap();
        assert!(report.exhaustive && report.passed());
        let zero = [SymMatrix::zeros(2, 2)];
        assert!(check_derivation_measuring(&zero, &rs, 3).unwrap().passed());
        let gc = GeneratorCoalgebra::classical(&["X".into()]);
        assert!(gc.check_coassociativity() && gc.check_counit());
    }
}
