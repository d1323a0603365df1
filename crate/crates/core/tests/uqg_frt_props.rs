use std::collections::BTreeMap;

use braidalg::builtins::{builtin_adjoint_sl2, builtin_sl};
use braidalg::frt::{check_duality, frt_coideal_check, frt_relations, Pairing, RSource};
use braidalg::ncalg::NCWord;
use braidalg::uqg::{
    check_antipode, check_preserves_r, check_representation, CartanData, Generator, GeneratorCoalgebra,
    Representation, UqPresentation,
};
use braidalg::{BraidedSpace, Scalar, SymMatrix};
use proptest::prelude::*;

/// `ρ_{j+k}(g) = Σ ρ_j(g_(1)) ⊗ ρ_k(g_(2))`.
fn assert_degree_compatible(rep: &Representation, j: usize, k: usize) {
    let p = rep.presentation();
    let n = rep.dim();
    let on = |g: Option<Generator>, d: usize| match g {
        None => SymMatrix::identity(n.pow(d as u32)),
        Some(g) => rep.coproduct_action(g, d),
    };
    for g in Generator::all(p.rank()) {
        let mut sum = SymMatrix::zeros(n.pow((j + k) as u32), n.pow((j + k) as u32));
        for (c, a, b) in p.coproduct(g) {
            sum = sum.add(&on(a, j).kron(&on(b, k)).scale(&c));
        }
        assert_eq!(rep.coproduct_action(g, j + k), sum, "{g} on {j}+{k}");
    }
}

#[test]
fn coproduct_action_is_degree_compatible() {
    let (sl2, _) = builtin_sl(2).unwrap();
    let (sl3, _) = builtin_sl(3).unwrap();
    let (adj, _) = builtin_adjoint_sl2().unwrap();
    for (j, k) in [(1, 1), (1, 2), (2, 1)] {
        assert_degree_compatible(&sl2, j, k);
        assert_degree_compatible(&adj, j, k);
    }
    assert_degree_compatible(&sl3, 1, 1);
    let k = sl2.matrix(Generator::K(0));
    assert_eq!(sl2.coproduct_action(Generator::K(0), 3), k.kron(k).kron(k));
}

#[test]
fn generator_coalgebras_are_coalgebras() {
    for label in ["A1", "A2", "A3", "B2", "C2", "G2"] {
        let Ok(cartan) = CartanData::from_label(label) else {
            continue;
        };
        let c = GeneratorCoalgebra::quantum(&UqPresentation::from_cartan(cartan).unwrap());
        assert!(c.check_coassociativity() && c.check_counit(), "{label}");
    }
    let classical = GeneratorCoalgebra::classical(&["e".into(), "f".into(), "h".into()]);
    assert!(classical.check_coassociativity() && classical.check_counit());
}

#[test]
fn antipode_on_builtins() {
    for n in 2..=3 {
        let (rep, _) = builtin_sl(n).unwrap();
        assert!(check_antipode(&rep).iter().all(|(_, ok)| *ok));
    }
}

#[test]
fn frt_of_flip_is_commutative_matrix_algebra() {
    let p = frt_relations(&BraidedSpace::flip(2));
    assert_eq!(p.rank(), 6);
    assert!(frt_coideal_check(&p).all_pass);
}

fn qpow() -> impl Strategy<Value = i32> {
    -3i32..=3
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Conjugating by a diagonal change of basis keeps every relation and,
    // with the R-matrix conjugated alike, admissibility.
    #[test]
    fn diagonal_conjugation_preserves_checks(a in qpow(), b in qpow()) {
        let (rep, space) = builtin_sl(2).unwrap();
        let d = SymMatrix::diagonal(vec![Scalar::q_pow(a), Scalar::q_pow(b)]);
        let di = d.inverse().unwrap();
        let mats: BTreeMap<_, _> = [Generator::E(0), Generator::F(0), Generator::K(0)]
            .into_iter()
            .map(|g| (g, d.mul(rep.matrix(g)).mul(&di)))
            .collect();
        let conj = Representation::from_cartan(CartanData::type_a(1).unwrap(), mats).unwrap();
        prop_assert!(check_representation(&conj).all_pass);
        let dd = d.kron(&d);
        let psi = dd.mul(space.braiding()).mul(&dd.inverse().unwrap());
        let space2 = BraidedSpace::from_braiding(psi).unwrap();
        prop_assert!(check_preserves_r(&conj.action(), &space2).all_pass);
    }

    #[test]
    fn frt_relations_are_scale_invariant(k in qpow(), c in 1i64..=3) {
        let (_, space) = builtin_sl(2).unwrap();
        let s = Scalar::q_pow(k).mul_ref(&Scalar::from_int(c));
        let scaled = BraidedSpace::from_braiding(space.braiding().scale(&s)).unwrap();
        prop_assert_eq!(
            frt_relations(&scaled).relations().display_lines(),
            frt_relations(&space).relations().display_lines()
        );
    }

    // Pairing is multiplicative in the U-word via matrix products.
    #[test]
    fn pairing_of_concatenation(
        u in prop::collection::vec(0u16..4, 0..=2),
        v in prop::collection::vec(0u16..4, 0..=2),
        t in prop::collection::vec(0u16..4, 1..=2),
    ) {
        let (rep, _) = builtin_sl(2).unwrap();
        let p = Pairing::new(&rep);
        let k = t.len();
        let uv: Vec<u16> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(p.word_action(&uv, k), p.word_action(&u, k).mul(&p.word_action(&v, k)));
        let unit = p.pair_word(&[], &NCWord::new(t.clone()));
        let diag = t.iter().all(|&l| l / 2 == l % 2);
        prop_assert_eq!(unit.is_one(), diag);
    }
}

#[test]
fn duality_detects_every_single_entry_mutation_of_e() {
    let (rep, space) = builtin_sl(2).unwrap();
    for (i, j) in [(0, 0), (1, 1), (0, 1)] {
        let mut e = rep.matrix(Generator::E(0)).clone();
        e.set(i, j, Scalar::one());
        let bad = rep.with_matrix(Generator::E(0), e).unwrap();
        let admissible = check_preserves_r(&bad.action(), &space).all_pass;
        let annihilates = check_duality(&bad, &space, RSource::Braiding, 3)
            .annihilation_failures
            .is_empty();
        assert_eq!(admissible, annihilates, "entry ({i},{j})");
    }
}
