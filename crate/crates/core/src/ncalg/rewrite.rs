use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::oracle::quotient_dims_linear;
use super::poly::{Alphabet, MonomialOrder, NCPoly, NCWord};
use super::relations::RelationSet;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `lead -> rhs` with every word of `rhs` smaller than `lead`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lead: NCWord,
    pub rhs: NCPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStatus {
    pub degree: usize,
    /// Overlap ambiguities examined at this degree.
    pub ambiguities: usize,
    /// Rules added to resolve them.
    pub new_rules: usize,
    pub confluent: bool,
}

/// Rewriting rules for a quadratic algebra, completed through a degree
/// bound; inside that bound reduction is confluent and irreducible words
/// form a basis of the quotient.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: MonomialOrder,
    relations: RelationSet,
    rules: Vec<Rule>,
    by_lead: HashMap<NCWord, usize>,
    lead_lengths: BTreeSet<usize>,
    bound: usize,
    status: Vec<DegreeStatus>,
}

impl RewriteSystem {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn generators(&self) -> usize {
        self.alphabet.size()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn status(&self) -> &[DegreeStatus] {
        &self.status
    }

    /// Confluent at every degree up to the bound.
    pub fn is_confluent(&self) -> bool {
        self.status.iter().all(|s| s.confluent)
    }

    /// Highest degree at which new rules were needed (2 if none).
    pub fn terminal_degree(&self) -> usize {
        self.status
            .iter()
            .filter(|s| s.new_rules > 0)
            .map(|s| s.degree)
            .max()
            .unwrap_or(2)
    }

    fn insert_rule(&mut self, rule: Rule) {
        self.lead_lengths.insert(rule.lead.len());
        self.by_lead.insert(rule.lead.clone(), self.rules.len());
        self.rules.push(rule);
    }

    /// Leftmost occurrence of a rule lead inside `w`: (position, rule).
    fn find_redex(&self, w: &[u16]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&idx) = self.by_lead.get(&w[start..start + len]) {
                    return Some((start, idx));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &NCWord) -> bool {
        self.find_redex(w.letters()).is_none()
    }

    /// Full reduction with no degree check.
    fn reduce(&self, p: &NCPoly) -> NCPoly {
        let mut work: BTreeMap<(usize, Vec<u16>), Scalar> = BTreeMap::new();
        for (w, c) in p.terms() {
            work.insert(self.order.key(w), c.clone());
        }
        let mut out = NCPoly::zero();
        while let Some((key, c)) = work.pop_last() {
            let w = self.order.unkey(&key);
            match self.find_redex(w.letters()) {
                None => out.add_term(w, &c),
                Some((pos, idx)) => {
                    let rule = &self.rules[idx];
                    let left = &w.letters()[..pos];
                    let right = &w.letters()[pos + rule.lead.len()..];
                    for (rw, rc) in rule.rhs.sandwich(left, right).terms() {
                        let k = self.order.key(rw);
                        let e = work.entry(k).or_default();
                        *e += &rc.mul_ref(&c);
                        if e.is_zero() {
                            let k = self.order.key(rw);
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }

    /// Irreducible representative of `p` modulo the ideal.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        if let Some(d) = p.max_degree() {
            if d > self.bound {
                return Err(Error::DegreeBound {
                    requested: d,
                    bound: self.bound,
                });
            }
        }
        Ok(self.reduce(p))
    }

    /// Irreducible words of length `d`, in increasing monomial order.
    pub fn irreducible_words(&self, d: usize) -> Vec<NCWord> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::<u16>::new()];
        let n = self.generators() as u16;
        while let Some(w) = stack.pop() {
            if w.len() == d {
                out.push(NCWord::new(w));
                continue;
            }
            for l in 0..n {
                let mut next = w.clone();
                next.push(l);
                if !self.has_suffix_lead(&next) {
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| self.order.compare(a, b));
        out
    }

    fn has_suffix_lead(&self, w: &[u16]) -> bool {
        self.lead_lengths
            .iter()
            .take_while(|&&len| len <= w.len())
            .any(|&len| self.by_lead.contains_key(&w[w.len() - len..]))
    }

    fn count_irreducible(&self, max_degree: usize) -> Vec<usize> {
        // DFS counting, pruning at the first reducible suffix
        let mut counts = vec![0usize; max_degree + 1];
        let n = self.generators() as u16;
        let mut stack = vec![Vec::<u16>::new()];
        while let Some(w) = stack.pop() {
            counts[w.len()] += 1;
            if w.len() == max_degree {
                continue;
            }
            for l in 0..n {
                let mut next = w.clone();
                next.push(l);
                if !self.has_suffix_lead(&next) {
                    stack.push(next);
                }
            }
        }
        counts
    }

    /// Rules listed as `lead = rhs`.
    pub fn display_rules(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| {
                let rel = NCPoly::monomial(r.lead.clone(), Scalar::one()).sub(&r.rhs);
                self.relations.display_relation(&rel)
            })
            .collect()
    }
}

/// Bounded-degree overlap completion.
///
/// Degrees are processed in increasing order; at degree `d` every overlap of
/// two rule leads producing a word of length `d` is reduced both ways, and a
/// nonzero difference becomes a new rule of degree `d`.
pub fn complete_rewrite(rels: &RelationSet, max_degree: usize) -> Result<RewriteSystem> {
    if max_degree < 2 {
        return Err(Error::InvalidArgument(format!(
            "completion degree must be at least 2, got {max_degree}"
        )));
    }
    for r in rels.relations() {
        if !r.is_homogeneous_of(2) {
            return Err(Error::NotHomogeneous(r.to_string()));
        }
    }
    let order = rels.order().clone();
    let mut rs = RewriteSystem {
        alphabet: rels.alphabet(),
        order: order.clone(),
        relations: rels.clone(),
        rules: Vec::new(),
        by_lead: HashMap::new(),
        lead_lengths: BTreeSet::new(),
        bound: max_degree,
        status: vec![DegreeStatus {
            degree: 2,
            ambiguities: 0,
            new_rules: 0,
            confluent: true,
        }],
    };
    for r in rels.relations() {
        let (lead, lc) = r.leading(&order).expect("nonzero relation");
        let lead = lead.clone();
        let monic = r.scale(&lc.inv()?);
        let rhs = NCPoly::monomial(lead.clone(), Scalar::one()).sub(&monic);
        rs.insert_rule(Rule { lead, rhs });
    }

    for d in 3..=max_degree {
        let existing = rs.rules.len();
        let mut ambiguities = Vec::new();
        for i in 0..existing {
            for j in 0..existing {
                let u = rs.rules[i].lead.letters();
                let v = rs.rules[j].lead.letters();
                for k in 1..u.len().min(v.len()) {
                    if u.len() + v.len() - k == d && u[u.len() - k..] == v[..k] {
                        ambiguities.push((i, j, k));
                    }
                }
            }
        }
        let mut added = 0;
        for &(i, j, k) in &ambiguities {
            let (u, v) = (&rs.rules[i], &rs.rules[j]);
            let left_path = u.rhs.sandwich(&[], &v.lead.letters()[k..]);
            let right_path = v.rhs.sandwich(&u.lead.letters()[..u.lead.len() - k], &[]);
            let diff = rs.reduce(&left_path.sub(&right_path));
            if diff.is_zero() {
                continue;
            }
            let (lead, lc) = diff.leading(&order).expect("nonzero");
            let lead = lead.clone();
            let monic = diff.scale(&lc.inv()?);
            let rhs = NCPoly::monomial(lead.clone(), Scalar::one()).sub(&monic);
            rs.insert_rule(Rule { lead, rhs });
            added += 1;
        }
        if added > 0 {
            // inter-reduce the right sides of this degree's new rules
            for idx in existing..rs.rules.len() {
                let rhs = rs.rules[idx].rhs.clone();
                let reduced = rs.reduce(&rhs);
                rs.rules[idx].rhs = reduced;
            }
        }
        rs.status.push(DegreeStatus {
            degree: d,
            ambiguities: ambiguities.len(),
            new_rules: added,
            confluent: true,
        });
    }
    Ok(rs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub dims: Vec<usize>,
    /// Degrees whose value came from the linear-algebra quotient instead of
    /// irreducible-word counting.
    pub fallback_degrees: Vec<usize>,
    pub warnings: Vec<String>,
}

/// Graded dimensions of the quotient for degrees `0..=max_degree`.
pub fn hilbert(rs: &RewriteSystem, max_degree: usize) -> HilbertReport {
    let counted_to = max_degree.min(rs.bound);
    let mut dims = rs.count_irreducible(counted_to);
    let mut fallback_degrees = Vec::new();
    let mut warnings = Vec::new();
    for s in rs
        .status
        .iter()
        .filter(|s| !s.confluent && s.degree <= counted_to)
    {
        warnings.push(format!("not confluent at degree {}", s.degree));
        fallback_degrees.push(s.degree);
    }
    if max_degree > rs.bound {
        warnings.push(format!(
            "degrees above completion bound {} use the linear-algebra quotient",
            rs.bound
        ));
        fallback_degrees.extend(rs.bound + 1..=max_degree);
    }
    if !fallback_degrees.is_empty() {
        let lin = quotient_dims_linear(&rs.relations, max_degree);
        dims.resize(max_degree + 1, 0);
        for &d in &fallback_degrees {
            dims[d] = lin[d];
        }
    }
    let n = rs.generators();
    if max_degree >= 1 && dims[1] < n {
        warnings.push(format!("V does not inject: degree-1 dimension {} < {n}", dims[1]));
    }
    if max_degree >= 2 && dims[2] == 0 {
        warnings.push("relations span all of V⊗V; the quotient is trivial above degree 1".into());
    }
    HilbertReport {
        dims,
        fallback_degrees,
        warnings,
    }
}
