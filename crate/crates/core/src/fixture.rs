//! JSON fixtures: R-matrices, representations and relation lists, with
//! entries written in the scalar grammar.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{BraidedSpace, SymMatrix};
use crate::ncalg::{Alphabet, MonomialOrder, RelationSet};
use crate::scalar::Scalar;
use crate::uqg::{CartanData, Generator, Representation};

/// A matrix entry: a scalar-grammar string or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

impl Entry {
    fn to_scalar(&self) -> Result<Scalar> {
        match self {
            Entry::Text(s) => Scalar::parse(s),
            Entry::Int(n) => Ok(Scalar::from_int(*n)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RForm {
    /// The operator `Ψ` itself.
    #[default]
    Braiding,
    /// RTT form; the braiding is this matrix composed with the flip.
    Rtt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixFixture {
    pub dim: usize,
    pub entries: Vec<Vec<Entry>>,
    #[serde(default)]
    pub form: RForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanFixture {
    pub matrix: Vec<Vec<i64>>,
    pub d: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFixture {
    pub cartan: CartanFixture,
    pub dim: usize,
    /// Generator name (`E_1`, `F_1`, `K_1`, optionally `K_1^-1`) to rows.
    pub generators: BTreeMap<String, Vec<Vec<Entry>>>,
    /// Braided structure on the same space, when the fixture carries one.
    #[serde(default)]
    pub rmatrix: Option<RMatrixFixture>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsFixture {
    pub generators: usize,
    pub relations: Vec<String>,
    /// Letters from largest to smallest, 1-based; default `x_1 > x_2 > ...`.
    #[serde(default)]
    pub precedence: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Rmatrix(RMatrixFixture),
    Representation(RepresentationFixture),
    Relations(RelationsFixture),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub source: Option<String>,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Fixture {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: Fixture = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Fixture(m) => Error::Fixture(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    fn validate(&self) -> Result<()> {
        match &self.payload {
            Payload::Rmatrix(r) => r.matrix().map(|_| ()),
            Payload::Representation(r) => r.representation().map(|_| ()),
            Payload::Relations(r) => r.relation_set().map(|_| ()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Rmatrix(_) => "rmatrix",
            Payload::Representation(_) => "representation",
            Payload::Relations(_) => "relations",
        }
    }
}

fn matrix_of(rows: &[Vec<Entry>], size: usize, what: &str) -> Result<SymMatrix> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(Error::Fixture(format!("{what}: expected a {size}x{size} matrix")));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, e)| {
                    e.to_scalar()
                        .map_err(|err| Error::Fixture(format!("{what}[{i}][{j}]: {err}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SymMatrix::from_rows(parsed)
}

impl RMatrixFixture {
    /// The stored matrix as written.
    pub fn matrix(&self) -> Result<SymMatrix> {
        if self.dim == 0 {
            return Err(Error::Fixture("dim must be positive".into()));
        }
        matrix_of(&self.entries, self.dim * self.dim, "entries")
    }

    /// `(rtt, braiding)` without checking the braid equation.
    pub fn operators(&self) -> Result<(SymMatrix, SymMatrix)> {
        let m = self.matrix()?;
        let flip = SymMatrix::flip(self.dim);
        Ok(match self.form {
            RForm::Braiding => (m.mul(&flip), m),
            RForm::Rtt => (m.clone(), m.mul(&flip)),
        })
    }

    pub fn space_unchecked(&self) -> Result<BraidedSpace> {
        let (rtt, braiding) = self.operators()?;
        BraidedSpace::unchecked(rtt, braiding)
    }

    /// Validated braided space (invertible, braid equation holds).
    pub fn space(&self) -> Result<BraidedSpace> {
        let (_, braiding) = self.operators()?;
        BraidedSpace::from_braiding(braiding)
    }
}

impl RepresentationFixture {
    pub fn representation(&self) -> Result<Representation> {
        let cartan = CartanData::new(self.cartan.matrix.clone(), self.cartan.d.clone())?;
        let n = cartan.rank();
        let mut mats = BTreeMap::new();
        for (name, rows) in &self.generators {
            let g = Generator::parse(name, n).map_err(|e| Error::Fixture(e.to_string()))?;
            mats.insert(g, matrix_of(rows, self.dim, name)?);
        }
        Representation::from_cartan(cartan, mats)
    }

    pub fn space(&self) -> Result<Option<BraidedSpace>> {
        self.rmatrix.as_ref().map(|r| r.space_unchecked()).transpose()
    }
}

impl RelationsFixture {
    pub fn relation_set(&self) -> Result<RelationSet> {
        let alphabet = Alphabet::X(self.generators);
        let polys = self
            .relations
            .iter()
            .map(|t| RelationSet::parse(alphabet, &[t]).map(|r| r.relations().to_vec()))
            .collect::<Result<Vec<_>>>()?
            .concat();
        let order = match &self.precedence {
            None => MonomialOrder::descending(self.generators),
            Some(p) => {
                let letters: Vec<u16> = p.iter().map(|&i| i.wrapping_sub(1) as u16).collect();
                MonomialOrder::from_precedence(&letters)
                    .filter(|o| o.len() == self.generators)
                    .ok_or_else(|| {
                        Error::Fixture("precedence is not a permutation of the generators".into())
                    })?
            }
        };
        RelationSet::with_order(alphabet, order, polys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_fixture() {
        let f = Fixture::from_json(
            r#"{"kind": "rmatrix", "name": "flip", "dim": 2,
                "entries": [[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]}"#,
        )
        .unwrap();
        let Payload::Rmatrix(r) = &f.payload else { panic!() };
        assert_eq!(r.space().unwrap().braiding(), &SymMatrix::flip(2));
    }

    #[test]
    fn diagnostics() {
        let e = Fixture::from_json(r#"{"kind": "rmatrix", "dim": 2, "entries": [[1]]}"#).unwrap_err();
        assert!(e.to_string().contains("4x4"), "{e}");
        let e = Fixture::from_json(r#"{"kind": "rmatrix", "dim": 1, "entries": [["q +"]]}"#).unwrap_err();
        assert!(e.to_string().contains("entries[0][0]"), "{e}");
        assert!(Fixture::from_json(r#"{"kind": "rmatrix", "dim": 2"#).is_err());
        assert!(Fixture::from_json(r#"{"kind": "tensor"}"#).is_err());
    }

    #[test]
    fn representation_fixture() {
        let f = Fixture::from_json(
            r#"{"kind": "representation",
                "cartan": {"matrix": [[2]], "d": [1]}, "dim": 2,
                "generators": {"E_1": [[0,0],[1,0]], "F_1": [[0,1],[0,0]], "K_1": [["q^-1",0],[0,"q"]]}}"#,
        )
        .unwrap();
        let Payload::Representation(r) = &f.payload else {
            panic!()
        };
        let rep = r.representation().unwrap();
        assert_eq!(rep.matrix(Generator::KInv(0)).get(0, 0), &Scalar::q());
    }

    #[test]
    fn relations_fixture_with_precedence() {
        let f = RelationsFixture {
            generators: 2,
            relations: vec!["x_1 x_2 = q x_2 x_1".into()],
            precedence: Some(vec![2, 1]),
        };
        let rs = f.relation_set().unwrap();
        assert_eq!(rs.display_lines(), vec!["x_2x_1 = q^-1 x_1x_2"]);
    }
}
