use braidalg::builtins::{builtin_adjoint_sl2, builtin_sl};
use braidalg::linalg::{
    check_braid, compose_adjacent, extend_braiding, extend_braiding_column_first, in_span, solve_commutant,
};
use braidalg::{BraidedSpace, Scalar, SymMatrix};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        2 => (-2i64..=2).prop_map(Scalar::from_int),
        1 => (-2i32..=2).prop_map(Scalar::q_pow),
    ]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(prop::collection::vec(entry(), cols), rows)
        .prop_map(|r| SymMatrix::from_rows(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product(
        a in matrix(2, 2), b in matrix(2, 3), c in matrix(2, 2), d in matrix(3, 2),
    ) {
        let lhs = a.kron(&b).mul(&c.kron(&d));
        prop_assert_eq!(lhs, a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn inverse_when_full_rank(a in matrix(3, 3)) {
        match a.inverse() {
            Ok(inv) => {
                prop_assert_eq!(a.rank(), 3);
                prop_assert!(a.mul(&inv).is_identity());
                prop_assert!(inv.mul(&a).is_identity());
            }
            Err(_) => prop_assert!(a.rank() < 3),
        }
    }

    #[test]
    fn commutant_members_commute(a in matrix(3, 3), b in matrix(3, 3)) {
        let basis = solve_commutant(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(in_span(&basis, &SymMatrix::identity(3)));
        for x in &basis {
            prop_assert!(x.mul(&a) == a.mul(x));
            prop_assert!(x.mul(&b) == b.mul(x));
        }
    }

    #[test]
    fn flip_of_random_diagonal_braids(d in prop::collection::vec(-2i32..=2, 4)) {
        let diag = SymMatrix::diagonal(d.into_iter().map(Scalar::q_pow).collect());
        let psi = SymMatrix::flip(2).mul(&diag);
        prop_assert!(check_braid(&psi).unwrap().holds);
    }
}

fn spaces() -> Vec<BraidedSpace> {
    vec![
        builtin_sl(2).unwrap().1,
        builtin_sl(3).unwrap().1,
        builtin_adjoint_sl2().unwrap().1,
        BraidedSpace::flip(2),
    ]
}

#[test]
fn extension_recipes_agree() {
    for space in spaces() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            if space.dim().pow((m + n) as u32) > 100 {
                continue;
            }
            let a = extend_braiding(&space, m, n);
            let b = extend_braiding_column_first(&space, m, n);
            assert_eq!(a.operator, b.operator, "Ψ^({m},{n})");
        }
        let one = extend_braiding(&space, 1, 1).operator;
        assert_eq!(&one, space.braiding());
    }
}

#[test]
fn extension_is_natural_in_blocks() {
    // Ψ^{2,1} = (Ψ ⊗ 1)(1 ⊗ Ψ) on V⊗V⊗V
    let space = builtin_sl(2).unwrap().1;
    let id = SymMatrix::identity(2);
    let psi = space.braiding();
    let expected = psi.kron(&id).mul(&id.kron(psi));
    assert_eq!(extend_braiding(&space, 2, 1).operator, expected);
    assert_eq!(compose_adjacent(&space, 3, &[1, 0]), expected);
}
