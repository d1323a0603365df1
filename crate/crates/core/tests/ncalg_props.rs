use braidalg::builtins::{builtin_sl, sp4_relations};
use braidalg::ncalg::{
    complete_rewrite, hilbert, quotient_dims_linear, relations_from_image, Alphabet, NCWord,
};
use braidalg::{NCPoly, RelationSet, RewriteSystem, Scalar, UniPoly};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        2 => Just(Scalar::zero()),
        2 => (-2i64..=2).prop_map(Scalar::from_int),
        1 => (-2i32..=2).prop_map(Scalar::q_pow),
    ]
}

fn quadratic(n: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec(coeff(), n * n).prop_map(move |cs| {
        NCPoly::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (NCWord::from_index(i, n, 2), c)),
        )
    })
}

fn binomial(n: usize) -> impl Strategy<Value = NCPoly> {
    let word = move || (0..n * n).prop_map(move |i| NCWord::from_index(i, n, 2));
    (word(), word(), -2i32..=2, any::<bool>()).prop_map(|(a, b, k, neg)| {
        let c = if neg {
            Scalar::q_pow(k).neg_ref()
        } else {
            Scalar::q_pow(k)
        };
        NCPoly::monomial(a, Scalar::one()).sub(&NCPoly::monomial(b, c))
    })
}

fn poly(n: usize, max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0..n as u16, 0..=max_len), coeff()), 0..4)
        .prop_map(|terms| NCPoly::from_terms(terms.into_iter().map(|(w, c)| (NCWord::new(w), c))))
}

fn sym_q(n: usize, bound: usize) -> RewriteSystem {
    let (_, space) = builtin_sl(n).unwrap();
    complete_rewrite(
        &relations_from_image(&space, &UniPoly::parse("x - q").unwrap()),
        bound,
    )
    .unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn completion_matches_linear_oracle_dense(rels in prop::collection::vec(quadratic(2), 1..=3)) {
        let set = RelationSet::new(Alphabet::X(2), rels).unwrap();
        let rs = complete_rewrite(&set, 4).unwrap();
        prop_assert_eq!(hilbert(&rs, 4).dims, quotient_dims_linear(&set, 4));
    }

    // Dense generic relations on three letters make exact coefficients
    // explode; binomial relations keep every overlap but stay small.
    #[test]
    fn completion_matches_linear_oracle_binomial(rels in prop::collection::vec(binomial(3), 1..=4)) {
        let set = RelationSet::new(Alphabet::X(3), rels).unwrap();
        let rs = complete_rewrite(&set, 4).unwrap();
        prop_assert_eq!(hilbert(&rs, 4).dims, quotient_dims_linear(&set, 4));
    }

    #[test]
    fn normal_form_sym_q(a in poly(3, 2), b in poly(3, 2)) {
        let rs = sym_q(3, 4);
        let na = rs.normal_form(&a).unwrap();
        prop_assert_eq!(rs.normal_form(&na).unwrap(), na.clone());
        for (w, _) in na.terms() {
            prop_assert!(rs.is_irreducible(w));
        }
        let nb = rs.normal_form(&b).unwrap();
        prop_assert_eq!(rs.normal_form(&na.mul(&nb)).unwrap(), rs.normal_form(&a.mul(&b)).unwrap());
    }

    #[test]
    fn normal_form_sp4(a in poly(4, 2), b in poly(4, 2)) {
        let rs = complete_rewrite(&sp4_relations(), 4).unwrap();
        let na = rs.normal_form(&a).unwrap();
        prop_assert_eq!(rs.normal_form(&na).unwrap(), na.clone());
        let nb = rs.normal_form(&b).unwrap();
        prop_assert_eq!(rs.normal_form(&na.mul(&nb)).unwrap(), rs.normal_form(&a.mul(&b)).unwrap());
    }
}

#[test]
fn relations_reduce_to_zero() {
    let rs = sym_q(4, 3);
    for r in rs.relations().relations() {
        assert!(rs.normal_form(r).unwrap().is_zero());
    }
    let sp4 = complete_rewrite(&sp4_relations(), 3).unwrap();
    for r in sp4.relations().relations() {
        assert!(sp4.normal_form(r).unwrap().is_zero());
    }
}

#[test]
fn quantum_symmetric_and_exterior_dimensions() {
    for n in 1..=4 {
        let (_, space) = match n {
            1 => (None, braidalg::BraidedSpace::flip(1)),
            _ => {
                let (r, s) = builtin_sl(n).unwrap();
                (Some(r), s)
            }
        };
        let q = if n == 1 { "x - 1" } else { "x - q" };
        let e = if n == 1 { "x + 1" } else { "x + q^-1" };
        let sym = relations_from_image(&space, &UniPoly::parse(q).unwrap());
        let ext = relations_from_image(&space, &UniPoly::parse(e).unwrap());
        let hs = hilbert(&complete_rewrite(&sym, 5).unwrap(), 5).dims;
        let he = hilbert(&complete_rewrite(&ext, 5).unwrap(), 5).dims;
        for d in 0..=5 {
            assert_eq!(hs[d], binom(n + d - 1, d), "Sym n={n} d={d}");
            assert_eq!(he[d], binom(n, d), "Λ n={n} d={d}");
        }
        assert_eq!(he.iter().sum::<usize>(), 1 << n);
    }
}

#[test]
fn hilbert_beyond_bound_uses_oracle() {
    let rs = sym_q(2, 2);
    let report = hilbert(&rs, 4);
    assert_eq!(report.dims, vec![1, 2, 3, 4, 5]);
    assert_eq!(report.fallback_degrees, vec![3, 4]);
}
