//! Built-in representations, braidings and relation sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{BraidedSpace, SymMatrix};
use crate::ncalg::{Alphabet, RelationSet};
use crate::scalar::{q_integer, Scalar};
use crate::uqg::{CartanData, Generator, Representation};

/// Vector representation of `U_q(sl_n)` and its Hecke braiding.
///
/// `K_i = q^-1 e_ii + q e_{i+1,i+1} + Σ_{k≠i,i+1} e_kk`, `E_i = e_{i+1,i}`,
/// `F_i = e_{i,i+1}`; the RTT-form matrix is
/// `q Σ e_ii⊗e_ii + Σ_{i≠j} e_ii⊗e_jj + (q - q^-1) Σ_{i<j} e_ij⊗e_ji`
/// and the braiding is that matrix composed with the flip.
pub fn builtin_sl(n: usize) -> Result<(Representation, BraidedSpace)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sl_n needs n >= 2, got {n}")));
    }
    let q = Scalar::q();
    let qinv = Scalar::q_pow(-1);
    let mut mats = BTreeMap::new();
    for i in 0..n - 1 {
        let mut diag = vec![Scalar::one(); n];
        diag[i] = qinv.clone();
        diag[i + 1] = q.clone();
        mats.insert(Generator::K(i), SymMatrix::diagonal(diag));
        mats.insert(Generator::E(i), SymMatrix::unit(n, i + 1, i));
        mats.insert(Generator::F(i), SymMatrix::unit(n, i, i + 1));
    }
    let rep = Representation::from_cartan(CartanData::type_a(n - 1)?, mats)?;
    Ok((rep, BraidedSpace::from_rtt(sl_rtt(n))?))
}

/// The RTT-form R-matrix for `sl_n`.
pub fn sl_rtt(n: usize) -> SymMatrix {
    let nn = n * n;
    let mut r = SymMatrix::zeros(nn, nn);
    let q = Scalar::q();
    let diff = q.sub_ref(&Scalar::q_pow(-1));
    for i in 0..n {
        for j in 0..n {
            let ii_jj = i * n + j;
            r.set(ii_jj, ii_jj, if i == j { q.clone() } else { Scalar::one() });
            if i < j {
                // e_ij ⊗ e_ji maps v_j ⊗ v_i to v_i ⊗ v_j
                r.set(i * n + j, j * n + i, diff.clone());
            }
        }
    }
    r
}

/// Parse `sl:n` style builtin names.
pub fn parse_builtin(name: &str) -> Result<usize> {
    let rest = name
        .strip_prefix("sl:")
        .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
    rest.parse()
        .map_err(|_| Error::InvalidArgument(format!("bad builtin `{name}`")))
}

/// The six printed relations of `Sym_q sp_4`.
pub const SP4_RELATIONS: [&str; 6] = [
    "x_1 x_2 = q x_2 x_1",
    "x_1 x_3 = q x_3 x_1",
    "x_2 x_4 = q x_4 x_2",
    "x_3 x_4 = q x_4 x_3",
    "x_1 x_4 = q^2 x_4 x_1",
    "x_2 x_3 = q^2 x_3 x_2 + (q - q^-1) x_1 x_4",
];

pub fn sp4_relations() -> RelationSet {
    RelationSet::parse(Alphabet::X(4), &SP4_RELATIONS).expect("fixed relations parse")
}

/// Relations printed for the adjoint example, kept verbatim for side-by-side
/// reporting; `x_2 x_3 = -q^2 x_2 x_3` has the same word on both sides.
pub const ADJOINT_PRINTED: [&str; 6] = [
    "x_1 x_1 = 0",
    "x_3 x_3 = 0",
    "x_2 x_2 = (q^2 - 1)/(q + q^-1) x_1 x_3",
    "x_1 x_2 = -q^2 x_2 x_1",
    "x_2 x_3 = -q^2 x_2 x_3",
    "x_1 x_3 = -x_3 x_1",
];

/// Three-dimensional representation of `U_q(sl_2)` on `x_1, x_2, x_3`
/// (weights -2, 0, 2) with the braiding `q^2 P_4 - q^-2 P_2 + q^-4 P_0`,
/// where `P_λ` projects onto the highest-weight-λ summand of `V⊗V`.
pub fn builtin_adjoint_sl2() -> Result<(Representation, BraidedSpace)> {
    let two = q_integer(2, &Scalar::q())?;
    let mut e = SymMatrix::zeros(3, 3);
    e.set(1, 0, Scalar::one());
    e.set(2, 1, two.clone());
    let mut f = SymMatrix::zeros(3, 3);
    f.set(1, 2, Scalar::one());
    f.set(0, 1, two);
    let k = SymMatrix::diagonal(vec![Scalar::q_pow(-2), Scalar::one(), Scalar::q_pow(2)]);
    let mats = BTreeMap::from([(Generator::E(0), e), (Generator::F(0), f), (Generator::K(0), k)]);
    let rep = Representation::from_cartan(CartanData::type_a(1)?, mats)?;

    // quantum Casimir FE + (qK + q^-1 K^-1)/(q - q^-1)^2 on V⊗V
    let fe = rep
        .coproduct_action(Generator::F(0), 2)
        .mul(&rep.coproduct_action(Generator::E(0), 2));
    let kk = rep.coproduct_action(Generator::K(0), 2);
    let kinv = rep.coproduct_action(Generator::KInv(0), 2);
    let denom = Scalar::q().sub_ref(&Scalar::q_pow(-1)).pow(2)?;
    let cas = fe.add(
        &kk.scale(&Scalar::q())
            .add(&kinv.scale(&Scalar::q_pow(-1)))
            .scale(&denom.inv()?),
    );
    let eigen = |lambda: i32| -> Result<Scalar> {
        Scalar::q_pow(lambda + 1)
            .add_ref(&Scalar::q_pow(-lambda - 1))
            .div(&denom)
    };
    let weights = [4, 2, 0];
    let values = weights.map(|l| eigen(l).expect("nonzero denominator"));
    let id = SymMatrix::identity(9);
    let projector = |k: usize| -> Result<SymMatrix> {
        let mut p = id.clone();
        for (j, cj) in values.iter().enumerate() {
            if j != k {
                let factor = cas.sub(&id.scale(cj)).scale(&values[k].sub_ref(cj).inv()?);
                p = p.mul(&factor);
            }
        }
        Ok(p)
    };
    let psi = projector(0)?
        .scale(&Scalar::q_pow(2))
        .sub(&projector(1)?.scale(&Scalar::q_pow(-2)))
        .add(&projector(2)?.scale(&Scalar::q_pow(-4)));
    Ok((rep, BraidedSpace::from_braiding(psi)?))
}

/// `e = e_12`, `f = e_21`, `h = e_11 - e_22` acting on `C^2`.
pub fn classical_sl2_actions() -> Vec<SymMatrix> {
    let h = SymMatrix::diagonal(vec![Scalar::one(), Scalar::from_int(-1)]);
    vec![SymMatrix::unit(2, 0, 1), SymMatrix::unit(2, 1, 0), h]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{check_braid, minimal_poly};
    use crate::uqg::check_representation;

    #[test]
    fn sl2_matches_printed_formulas() {
        let (rep, space) = builtin_sl(2).unwrap();
        assert_eq!(
            rep.matrix(Generator::K(0)),
            &SymMatrix::diagonal(vec![Scalar::q_pow(-1), Scalar::q()])
        );
        assert_eq!(rep.matrix(Generator::E(0)), &SymMatrix::unit(2, 1, 0));
        let rtt = space.rtt();
        assert_eq!(rtt.get(0, 0), &Scalar::q());
        assert_eq!(rtt.get(1, 2), &Scalar::parse("q - q^-1").unwrap());
        assert_eq!(rtt.nonzeros().count(), 5);
    }

    #[test]
    fn adjoint_is_a_braided_representation() {
        let (rep, space) = builtin_adjoint_sl2().unwrap();
        assert!(check_representation(&rep).all_pass);
        assert!(check_braid(space.braiding()).unwrap().holds);
        let mp = minimal_poly(space.braiding()).unwrap();
        assert_eq!(mp.degree(), Some(3));
        assert!(mp.eval(&Scalar::q_pow(-2).neg_ref()).is_zero());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(parse_builtin("sl:3").unwrap(), 3);
        assert!(parse_builtin("so:3").is_err());
        assert!(builtin_sl(1).is_err());
    }
}
