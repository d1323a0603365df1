use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::cartan::CartanData;
use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, MonomialOrder, NCPoly, NCWord};
use crate::scalar::{q_binomial, Scalar};

/// A generator of `U_q(g)`; indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Generator {
    /// Letter in the `4n`-letter alphabet: blocks E, F, K, K^-1.
    pub fn letter(self, n: usize) -> u16 {
        let (block, i) = match self {
            Generator::E(i) => (0, i),
            Generator::F(i) => (1, i),
            Generator::K(i) => (2, i),
            Generator::KInv(i) => (3, i),
        };
        (block * n + i) as u16
    }

    pub fn from_letter(l: u16, n: usize) -> Self {
        let (block, i) = (l as usize / n, l as usize % n);
        match block {
            0 => Generator::E(i),
            1 => Generator::F(i),
            2 => Generator::K(i),
            _ => Generator::KInv(i),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => i,
        }
    }

    /// All `4n` generators in letter order.
    pub fn all(n: usize) -> Vec<Generator> {
        (0..4 * n).map(|l| Self::from_letter(l as u16, n)).collect()
    }

    /// Accepts `E_1`, `F_2`, `K_1`, `K_1^-1`, `Kinv_1`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_suffix("^-1").map(|k| k.replacen("K_", "Kinv_", 1));
        let name = t.as_deref().unwrap_or(text.trim());
        Alphabet::U(n)
            .letter(name)
            .map(|l| Self::from_letter(l as u16, n))
            .ok_or_else(|| Error::UnknownSymbol(text.to_string()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::E(i) => write!(f, "E_{}", i + 1),
            Generator::F(i) => write!(f, "F_{}", i + 1),
            Generator::K(i) => write!(f, "K_{}", i + 1),
            Generator::KInv(i) => write!(f, "K_{}^-1", i + 1),
        }
    }
}

/// One defining relation `lhs = rhs`, stored as `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UqRelation {
    pub label: String,
    pub poly: NCPoly,
}

/// Element of `C ⊗ C` (or `C^{⊗3}`) as a map from word tuples.
pub type TensorTerms = BTreeMap<Vec<NCWord>, Scalar>;

#[derive(Debug, Clone)]
pub struct UqPresentation {
    cartan: CartanData,
    relations: Vec<UqRelation>,
}

impl UqPresentation {
    pub fn from_cartan(cartan: CartanData) -> Result<Self> {
        let n = cartan.rank();
        let alpha = Alphabet::U(n);
        let order = MonomialOrder::descending(4 * n);
        let g = |x: Generator| NCPoly::word(&[x.letter(n)]);
        let w = |xs: &[Generator]| NCPoly::word(&xs.iter().map(|x| x.letter(n)).collect::<Vec<_>>());
        let show = |p: &NCPoly| p.display_with(alpha, &order);
        let mut relations = Vec::new();
        let mut push = |lhs: NCPoly, rhs: NCPoly, rhs_text: Option<String>| {
            let label = format!("{} = {}", show(&lhs), rhs_text.unwrap_or_else(|| show(&rhs)));
            relations.push(UqRelation {
                label,
                poly: lhs.sub(&rhs),
            });
        };
        use Generator::*;
        let one = NCPoly::scalar(Scalar::one());
        for i in 0..n {
            push(w(&[K(i), KInv(i)]), one.clone(), None);
            push(w(&[KInv(i), K(i)]), one.clone(), None);
        }
        for i in 0..n {
            for j in i + 1..n {
                push(w(&[K(i), K(j)]), w(&[K(j), K(i)]), None);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let a = cartan.a(i, j);
                let qa = cartan.q_i(i).pow(a)?;
                push(w(&[K(i), E(j), KInv(i)]), g(E(j)).scale(&qa), None);
                push(w(&[K(i), F(j), KInv(i)]), g(F(j)).scale(&qa.inv()?), None);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = w(&[E(i), F(j)]).sub(&w(&[F(j), E(i)]));
                if i == j {
                    let qi = cartan.q_i(i);
                    let c = qi.sub_ref(&qi.inv()?).inv()?;
                    let rhs = g(K(i)).sub(&g(KInv(i))).scale(&c);
                    let qt = q_text(cartan.d(i));
                    let text = format!("({} - {})/({qt} - {qt}^-1)", K(i), KInv(i));
                    push(lhs, rhs, Some(text));
                } else {
                    push(lhs, NCPoly::zero(), None);
                }
            }
        }
        for make in [E as fn(usize) -> Generator, F] {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        push(serre(&cartan, i, j, make)?, NCPoly::zero(), None);
                    }
                }
            }
        }
        Ok(Self { cartan, relations })
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::U(self.rank())
    }

    pub fn relations(&self) -> &[UqRelation] {
        &self.relations
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(self.rank())
    }

    /// `Δ(g)` as `(coefficient, left, right)` with `None` for the unit.
    pub fn coproduct(&self, g: Generator) -> Vec<(Scalar, Option<Generator>, Option<Generator>)> {
        let one = Scalar::one();
        match g {
            Generator::E(i) => vec![
                (one.clone(), Some(g), Some(Generator::K(i))),
                (one, None, Some(g)),
            ],
            Generator::F(i) => vec![
                (one.clone(), Some(g), None),
                (one, Some(Generator::KInv(i)), Some(g)),
            ],
            Generator::K(_) | Generator::KInv(_) => vec![(one, Some(g), Some(g))],
        }
    }

    pub fn counit(&self, g: Generator) -> Scalar {
        match g {
            Generator::K(_) | Generator::KInv(_) => Scalar::one(),
            _ => Scalar::zero(),
        }
    }

    pub fn antipode(&self, g: Generator) -> NCPoly {
        let n = self.rank();
        let w = |xs: &[Generator]| NCPoly::word(&xs.iter().map(|x| x.letter(n)).collect::<Vec<_>>());
        match g {
            Generator::K(i) => w(&[Generator::KInv(i)]),
            Generator::KInv(i) => w(&[Generator::K(i)]),
            Generator::E(i) => w(&[g, Generator::KInv(i)]).neg(),
            Generator::F(i) => w(&[Generator::K(i), g]).neg(),
        }
    }

    /// `Δ` extended multiplicatively to words of the free algebra.
    pub fn coproduct_word(&self, w: &NCWord) -> TensorTerms {
        let n = self.rank();
        let mut acc: TensorTerms = BTreeMap::new();
        acc.insert(vec![NCWord::unit(), NCWord::unit()], Scalar::one());
        for &l in w.letters() {
            let mut next = TensorTerms::new();
            for (c, a, b) in self.coproduct(Generator::from_letter(l, n)) {
                let wa = a.map_or_else(NCWord::unit, |x| NCWord::new(vec![x.letter(n)]));
                let wb = b.map_or_else(NCWord::unit, |x| NCWord::new(vec![x.letter(n)]));
                for (k, v) in &acc {
                    let key = vec![k[0].concat(&wa), k[1].concat(&wb)];
                    add_into(&mut next, key, v.mul_ref(&c));
                }
            }
            acc = next;
        }
        acc
    }

    /// `(Δ⊗1)Δ(g) = (1⊗Δ)Δ(g)` on every generator.
    pub fn check_coassociativity(&self) -> bool {
        self.generators().into_iter().all(|g| {
            let n = self.rank();
            let dg = self.coproduct_word(&NCWord::new(vec![g.letter(n)]));
            let mut left = TensorTerms::new();
            let mut right = TensorTerms::new();
            for (k, c) in &dg {
                for (k2, c2) in self.coproduct_word(&k[0]) {
                    add_into(
                        &mut left,
                        vec![k2[0].clone(), k2[1].clone(), k[1].clone()],
                        c.mul_ref(&c2),
                    );
                }
                for (k2, c2) in self.coproduct_word(&k[1]) {
                    add_into(
                        &mut right,
                        vec![k[0].clone(), k2[0].clone(), k2[1].clone()],
                        c.mul_ref(&c2),
                    );
                }
            }
            left == right
        })
    }

    /// `(ε⊗1)Δ(g) = g = (1⊗ε)Δ(g)` on every generator.
    pub fn check_counit(&self) -> bool {
        let n = self.rank();
        let eps = |w: &NCWord| -> Scalar {
            w.letters()
                .iter()
                .map(|&l| self.counit(Generator::from_letter(l, n)))
                .fold(Scalar::one(), |a, b| a.mul_ref(&b))
        };
        self.generators().into_iter().all(|g| {
            let w = NCWord::new(vec![g.letter(n)]);
            let target = NCPoly::monomial(w.clone(), Scalar::one());
            let dg = self.coproduct_word(&w);
            let left = NCPoly::from_terms(dg.iter().map(|(k, c)| (k[1].clone(), c.mul_ref(&eps(&k[0])))));
            let right = NCPoly::from_terms(dg.iter().map(|(k, c)| (k[0].clone(), c.mul_ref(&eps(&k[1])))));
            left == target && right == target
        })
    }

    /// Display a polynomial in the generator alphabet.
    pub fn display(&self, p: &NCPoly) -> String {
        p.display_with(self.alphabet(), &MonomialOrder::descending(4 * self.rank()))
    }
}

fn q_text(d: u32) -> String {
    if d == 1 {
        "q".into()
    } else {
        format!("q^{d}")
    }
}

fn add_into(map: &mut TensorTerms, key: Vec<NCWord>, c: Scalar) {
    let e = map.entry(key.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// `Σ_r (-1)^r [[1-a_ij, r]]_{q_i} X_i^{1-a_ij-r} X_j X_i^r`.
fn serre(c: &CartanData, i: usize, j: usize, make: fn(usize) -> Generator) -> Result<NCPoly> {
    let n = c.rank();
    let m = 1 - c.a(i, j);
    let qi = c.q_i(i);
    let (xi, xj) = (make(i).letter(n), make(j).letter(n));
    let mut out = NCPoly::zero();
    for r in 0..=m {
        let mut coeff = q_binomial(m, r, &qi)?;
        if r % 2 == 1 {
            coeff = coeff.neg_ref();
        }
        let mut word = vec![xi; (m - r) as usize];
        word.push(xj);
        word.extend(std::iter::repeat_n(xi, r as usize));
        out.add_term(NCWord::new(word), &coeff);
    }
    Ok(out)
}

/// Serializable summary of a presentation.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationDoc {
    pub rank: usize,
    pub relations: Vec<String>,
    pub coproduct: Vec<String>,
    pub counit: Vec<String>,
    pub antipode: Vec<String>,
}

impl From<&UqPresentation> for PresentationDoc {
    fn from(p: &UqPresentation) -> Self {
        let gens = p.generators();
        let side = |x: Option<Generator>| x.map_or("1".to_string(), |g| g.to_string());
        Self {
            rank: p.rank(),
            relations: p.relations().iter().map(|r| r.label.clone()).collect(),
            coproduct: gens
                .iter()
                .map(|&g| {
                    let terms: Vec<String> = p
                        .coproduct(g)
                        .into_iter()
                        .map(|(_, a, b)| format!("{} ⊗ {}", side(a), side(b)))
                        .collect();
                    format!("Δ({g}) = {}", terms.join(" + "))
                })
                .collect(),
            counit: gens
                .iter()
                .map(|&g| format!("ε({g}) = {}", p.counit(g)))
                .collect(),
            antipode: gens
                .iter()
                .map(|&g| format!("S({g}) = {}", p.display(&p.antipode(g))))
                .collect(),
        }
    }
}
