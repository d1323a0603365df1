use std::cell::RefCell;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{FRTPresentation, RSource};
use crate::linalg::{BraidedSpace, SymMatrix};
use crate::ncalg::{Alphabet, NCPoly, NCWord};
use crate::scalar::Scalar;
use crate::uqg::{MeasuringAction, Representation, UqPresentation};

/// `⟨u, t_{i⃗j⃗}⟩ = (ρ_k(u))_{i⃗, j⃗}` with `ρ_k` the coproduct action on
/// `V^{⊗k}`. Matrices are memoized per `(u, k)` inside this value.
pub struct Pairing<'a> {
    presentation: &'a UqPresentation,
    action: MeasuringAction,
    n: usize,
    memo: RefCell<HashMap<(Vec<u16>, usize), SymMatrix>>,
}

impl<'a> Pairing<'a> {
    pub fn new(rep: &'a Representation) -> Self {
        Self {
            presentation: rep.presentation(),
            action: rep.action(),
            n: rep.dim(),
            memo: RefCell::new(HashMap::new()),
        }
    }

    /// `ρ_k(u)` for a generator word `u`.
    pub fn word_action(&self, u: &[u16], k: usize) -> SymMatrix {
        let key = (u.to_vec(), k);
        if let Some(m) = self.memo.borrow().get(&key) {
            return m.clone();
        }
        let m = match u {
            [] => SymMatrix::identity(self.n.pow(k as u32)),
            [l] => self.action.tensor_action(1 + *l as usize, k),
            [head @ .., last] => self.word_action(head, k).mul(&self.word_action(&[*last], k)),
        };
        self.memo.borrow_mut().insert(key, m.clone());
        m
    }

    /// Pairing with a single `t`-word.
    pub fn pair_word(&self, u: &[u16], t: &NCWord) -> Scalar {
        let n = self.n;
        let (mut row, mut col) = (0, 0);
        for &l in t.letters() {
            row = row * n + l as usize / n;
            col = col * n + l as usize % n;
        }
        self.word_action(u, t.len()).get(row, col).clone()
    }

    /// Bilinear extension to polynomials in the `t_ij`.
    pub fn pair(&self, u: &[u16], p: &NCPoly) -> Scalar {
        p.terms().map(|(w, c)| c.mul_ref(&self.pair_word(u, w))).sum()
    }

    fn u_name(&self, u: &[u16]) -> String {
        Alphabet::U(self.presentation.rank()).word_name(&NCWord::new(u.to_vec()))
    }
}

/// Shorthand for [`Pairing::pair`].
pub fn pairing(rep: &Representation, u: &[u16], t: &NCPoly) -> Scalar {
    Pairing::new(rep).pair(u, t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityWitness {
    pub u: String,
    pub element: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub max_degree: usize,
    pub relation_source: RSource,
    pub relation_count: usize,
    pub annihilation_checks: usize,
    pub annihilation_failures: Vec<DualityWitness>,
    pub coproduct_checks: usize,
    pub coproduct_failures: Vec<DualityWitness>,
    pub product_checks: usize,
    pub product_plain_pass: bool,
    pub product_op_pass: bool,
    /// `plain`: `⟨uv, a⟩ = Σ ⟨u, a_(1)⟩⟨v, a_(2)⟩`; `op` swaps the factors.
    pub orientation: String,
    pub all_pass: bool,
}

const COMPAT_SAMPLES: usize = 200;

fn all_words(letters: usize, max_len: usize) -> Vec<Vec<u16>> {
    (0..=max_len)
        .flat_map(|k| NCWord::all(letters, k).map(|w| w.letters().to_vec()))
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, letters: usize, len: usize) -> Vec<u16> {
    (0..len).map(|_| rng.gen_range(0..letters) as u16).collect()
}

/// The finite-degree content of `P_R(V) ≅ A(R)°`: every generator word of
/// length ≤ `max_degree` annihilates the FRT relations, and the pairing is
/// compatible with both coproducts on seeded samples.
pub fn check_duality(
    rep: &Representation,
    space: &BraidedSpace,
    source: RSource,
    max_degree: usize,
) -> DualityReport {
    let frt = FRTPresentation::new(space, source);
    let pairing = Pairing::new(rep);
    let p = rep.presentation();
    let letters = 4 * p.rank();
    let tletters = frt.n * frt.n;
    let tname = |w: &NCWord| Alphabet::T(frt.n).word_name(w);

    let mut annihilation_failures = Vec::new();
    let mut annihilation_checks = 0;
    for u in all_words(letters, max_degree) {
        for r in frt.relations().relations() {
            annihilation_checks += 1;
            let v = pairing.pair(&u, r);
            if !v.is_zero() {
                annihilation_failures.push(DualityWitness {
                    u: pairing.u_name(&u),
                    element: frt.relations().display_relation(r),
                    value: v.to_string(),
                });
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut coproduct_failures = Vec::new();
    for _ in 0..COMPAT_SAMPLES {
        let len = rng.gen_range(0..=max_degree);
        let u = random_word(&mut rng, letters, len);
        let total = rng.gen_range(0..=max_degree);
        let split = rng.gen_range(0..=total);
        let a = NCWord::new(random_word(&mut rng, tletters, split));
        let b = NCWord::new(random_word(&mut rng, tletters, total - split));
        let lhs = pairing.pair_word(&u, &a.concat(&b));
        let rhs: Scalar = p
            .coproduct_word(&NCWord::new(u.clone()))
            .iter()
            .map(|(k, c)| {
                c.mul_ref(&pairing.pair_word(k[0].letters(), &a))
                    .mul_ref(&pairing.pair_word(k[1].letters(), &b))
            })
            .sum();
        if lhs != rhs {
            coproduct_failures.push(DualityWitness {
                u: pairing.u_name(&u),
                element: format!("{} · {}", tname(&a), tname(&b)),
                value: lhs.sub_ref(&rhs).to_string(),
            });
        }
    }

    let (mut plain, mut op) = (true, true);
    for _ in 0..COMPAT_SAMPLES {
        let total = rng.gen_range(0..=max_degree);
        let split = rng.gen_range(0..=total);
        let u = random_word(&mut rng, letters, split);
        let v = random_word(&mut rng, letters, total - split);
        let len = rng.gen_range(0..=max_degree);
        let a = NCWord::new(random_word(&mut rng, tletters, len));
        let uv: Vec<u16> = u.iter().chain(&v).copied().collect();
        let lhs = pairing.pair_word(&uv, &a);
        let (mut sum_plain, mut sum_op) = (Scalar::zero(), Scalar::zero());
        for (a1, a2) in frt.coproduct_word(&a) {
            sum_plain += &pairing.pair_word(&u, &a1).mul_ref(&pairing.pair_word(&v, &a2));
            sum_op += &pairing.pair_word(&v, &a1).mul_ref(&pairing.pair_word(&u, &a2));
        }
        plain &= lhs == sum_plain;
        op &= lhs == sum_op;
    }
    let orientation = match (plain, op) {
        (true, true) => "plain and op",
        (true, false) => "plain",
        (false, true) => "op",
        (false, false) => "none",
    };
    let all_pass = annihilation_failures.is_empty() && coproduct_failures.is_empty() && (plain || op);
    DualityReport {
        max_degree,
        relation_source: source,
        relation_count: frt.rank(),
        annihilation_checks,
        annihilation_failures,
        coproduct_checks: COMPAT_SAMPLES,
        coproduct_failures,
        product_checks: COMPAT_SAMPLES,
        product_plain_pass: plain,
        product_op_pass: op,
        orientation: orientation.into(),
        all_pass,
    }
}
