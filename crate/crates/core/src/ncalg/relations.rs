use serde::Serialize;

use super::poly::{format_terms, Alphabet, MonomialOrder, NCPoly, NCWord};
use crate::error::{Error, Result};
use crate::linalg::{image_subspace, BraidedSpace, Echelon, SparseVec, SymMatrix};
use crate::scalar::{Scalar, UniPoly};

/// Quadratic relations, echelonized so that each relation has leading
/// coefficient 1 on a distinct leading word and no relation mentions
/// another's leading word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    alphabet: Alphabet,
    order: MonomialOrder,
    relations: Vec<NCPoly>,
}

impl RelationSet {
    pub fn new(alphabet: Alphabet, relations: Vec<NCPoly>) -> Result<Self> {
        let order = MonomialOrder::descending(alphabet.size());
        Self::with_order(alphabet, order, relations)
    }

    pub fn with_order(alphabet: Alphabet, order: MonomialOrder, relations: Vec<NCPoly>) -> Result<Self> {
        let n = alphabet.size();
        if order.len() != n {
            return Err(Error::InvalidArgument(
                "monomial order size differs from alphabet".into(),
            ));
        }
        for r in &relations {
            if !r.is_homogeneous_of(2) {
                return Err(Error::NotHomogeneous(r.to_string()));
            }
            if r.terms()
                .any(|(w, _)| w.letters().iter().any(|&l| l as usize >= n))
            {
                return Err(Error::InvalidArgument(format!(
                    "relation {r} leaves the alphabet"
                )));
            }
        }
        // coordinates: degree-2 words from largest to smallest, so the
        // echelon pivot of each row is its leading word
        let mut words: Vec<NCWord> = NCWord::all(n, 2).collect();
        words.sort_by(|a, b| order.compare(b, a));
        let coord_of = |w: &NCWord| words.iter().position(|x| x == w).unwrap();
        let mut ech = Echelon::new(words.len());
        for r in &relations {
            let v: SparseVec = r.terms().map(|(w, c)| (coord_of(w), c.clone())).collect();
            ech.insert(v);
        }
        let relations = ech
            .basis()
            .iter()
            .map(|v| NCPoly::from_terms(v.iter().map(|(k, c)| (words[*k].clone(), c.clone()))))
            .collect();
        Ok(Self {
            alphabet,
            order,
            relations,
        })
    }

    /// Parse relation strings, each either `lhs = rhs` or a single
    /// expression meaning `expr = 0`.
    pub fn parse<S: AsRef<str>>(alphabet: Alphabet, texts: &[S]) -> Result<Self> {
        let polys = texts
            .iter()
            .map(|t| parse_relation(t.as_ref(), alphabet))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, polys)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            order: MonomialOrder::descending(alphabet.size()),
            relations: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> usize {
        self.alphabet.size()
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Membership of a degree-2 element in the span of the relations.
    pub fn spans(&self, p: &NCPoly) -> bool {
        let n = self.generators();
        let mut ech = Echelon::new(n * n);
        for r in &self.relations {
            ech.insert(r.to_vector(n));
        }
        ech.contains(&p.to_vector(n))
    }

    /// Display as `lead = rest`, e.g. `x_1x_2 = q x_2x_1`.
    pub fn display_relation(&self, r: &NCPoly) -> String {
        let terms = r.sorted_terms(&self.order);
        let Some(((lead, lc), rest)) = terms.split_first() else {
            return "0 = 0".into();
        };
        let lc_inv = lc.inv().expect("nonzero lead");
        let rhs: Vec<(NCWord, Scalar)> = rest
            .iter()
            .map(|(w, c)| ((*w).clone(), c.mul_ref(&lc_inv).neg_ref()))
            .collect();
        let rhs_ref: Vec<(&NCWord, &Scalar)> = rhs.iter().map(|(w, c)| (w, c)).collect();
        format!(
            "{} = {}",
            self.alphabet.word_name(lead),
            format_terms(&rhs_ref, self.alphabet)
        )
    }

    pub fn display_lines(&self) -> Vec<String> {
        self.relations.iter().map(|r| self.display_relation(r)).collect()
    }
}

fn parse_relation(text: &str, alphabet: Alphabet) -> Result<NCPoly> {
    match text.split_once('=') {
        Some((l, r)) => {
            let lhs = NCPoly::parse(l, alphabet)?;
            let rhs = NCPoly::parse(r, alphabet).map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::Syntax {
                    pos: pos + l.chars().count() + 1,
                    msg,
                },
                other => other,
            })?;
            Ok(lhs.sub(&rhs))
        }
        None => NCPoly::parse(text, alphabet),
    }
}

/// Evaluate a polynomial at a square matrix.
pub fn eval_at_matrix(f: &UniPoly, op: &SymMatrix) -> SymMatrix {
    let n = op.rows();
    let mut acc = SymMatrix::zeros(n, n);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(op).add(&SymMatrix::scalar_identity(n, c));
    }
    acc
}

/// Relations spanning `f(Ψ)(V ⊗ V)`, written in `x_1 .. x_n`.
pub fn relations_from_image(space: &BraidedSpace, f: &UniPoly) -> RelationSet {
    let n = space.dim();
    let op = eval_at_matrix(f, space.braiding());
    let polys = image_subspace(&op)
        .iter()
        .map(|v| NCPoly::from_vector(v, n, 2))
        .collect();
    RelationSet::new(Alphabet::X(n), polys).expect("image vectors are quadratic")
}

/// Serializable view used in reports.
#[derive(Debug, Clone, Serialize)]
pub struct RelationListing {
    pub count: usize,
    pub relations: Vec<String>,
}

impl From<&RelationSet> for RelationListing {
    fn from(r: &RelationSet) -> Self {
        Self {
            count: r.len(),
            relations: r.display_lines(),
        }
    }
}
