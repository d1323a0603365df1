use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: coordinate index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Scalar>;

pub(crate) fn axpy(target: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    for (k, x) in v {
        let prod = c.mul_ref(x);
        let e = target.entry(*k).or_default();
        *e += &prod;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

pub(crate) fn scale_vec(v: &SparseVec, c: &Scalar) -> SparseVec {
    v.iter()
        .map(|(k, x)| (*k, x.mul_ref(c)))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Reduced row echelon form grown one vector at a time.
///
/// Every stored row has a leading 1 at its pivot (its lowest nonzero
/// coordinate) and zeros at every other pivot. Pivots are chosen
/// lowest-index-first, so the basis produced for a fixed span and insertion
/// order is deterministic.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> + '_ {
        self.rows.iter()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    pub fn is_pivot(&self, k: usize) -> bool {
        self.rows.contains_key(&k)
    }

    /// Remainder of `v` modulo the span; zero at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let coeffs: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(k, _)| self.rows.contains_key(k))
            .map(|(k, x)| (*k, x.clone()))
            .collect();
        let mut out = v.clone();
        for (p, c) in coeffs {
            axpy(&mut out, &c.neg_ref(), &self.rows[&p]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let r = scale_vec(&r, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &c.neg_ref(), &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        (0..self.dim)
            .filter(|k| !self.rows.contains_key(k))
            .map(|free| {
                let mut v = SparseVec::new();
                v.insert(free, Scalar::one());
                for (p, row) in &self.rows {
                    if let Some(c) = row.get(&free) {
                        v.insert(*p, c.neg_ref());
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, &str)]) -> SparseVec {
        entries
            .iter()
            .map(|(k, t)| (*k, Scalar::parse(t).unwrap()))
            .collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = Echelon::new(3);
        a.insert(v(&[(0, "1"), (1, "q")]));
        a.insert(v(&[(0, "2"), (2, "1")]));
        let mut b = Echelon::new(3);
        b.insert(v(&[(0, "3"), (1, "q"), (2, "1")]));
        b.insert(v(&[(1, "-2*q"), (2, "1")]));
        assert_eq!(a.basis(), b.basis());
        assert_eq!(a.rank(), 2);
        assert!(!a.insert(v(&[(0, "3"), (1, "3*q")])));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let mut e = Echelon::new(4);
        e.insert(v(&[(0, "1"), (1, "-q"), (3, "q^2")]));
        e.insert(v(&[(1, "1"), (2, "q+1")]));
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for (_, row) in e.rows() {
                let dot: Scalar = row
                    .iter()
                    .filter_map(|(k, x)| n.get(k).map(|y| x.mul_ref(y)))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }
}
