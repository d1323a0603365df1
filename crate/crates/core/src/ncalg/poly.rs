use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCWord(Vec<u16>);

impl NCWord {
    pub fn new(letters: Vec<u16>) -> Self {
        Self(letters)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Tensor-power coordinate of the word in `V^{⊗len}`, `dim V = n`.
    pub fn index(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * n + l as usize)
    }

    pub fn from_index(mut idx: usize, n: usize, len: usize) -> Self {
        let mut v = vec![0u16; len];
        for slot in v.iter_mut().rev() {
            *slot = (idx % n) as u16;
            idx /= n;
        }
        Self(v)
    }

    /// Every word of length `len` over `n` letters, in index order.
    pub fn all(n: usize, len: usize) -> impl Iterator<Item = NCWord> {
        (0..n.pow(len as u32)).map(move |i| Self::from_index(i, n, len))
    }
}

impl Borrow<[u16]> for NCWord {
    fn borrow(&self) -> &[u16] {
        &self.0
    }
}

// Storage order: shorter first, then lexicographic by letter index.
impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// How generator letters are named in printed relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alphabet {
    /// `x_1 .. x_n`
    X(usize),
    /// `t_{ij}`, `1 <= i, j <= n`, flattened as `(i-1) * n + (j-1)`.
    T(usize),
    /// `E_i, F_i, K_i, K_i^-1` for rank `n`, in that block order.
    U(usize),
}

impl Alphabet {
    pub fn size(&self) -> usize {
        match *self {
            Alphabet::X(n) => n,
            Alphabet::T(n) => n * n,
            Alphabet::U(n) => 4 * n,
        }
    }

    pub fn name(&self, letter: u16) -> String {
        match *self {
            Alphabet::X(_) => format!("x_{}", letter + 1),
            Alphabet::T(n) => {
                let (i, j) = (letter as usize / n + 1, letter as usize % n + 1);
                if n < 10 {
                    format!("t_{i}{j}")
                } else {
                    format!("t_{{{i},{j}}}")
                }
            }
            Alphabet::U(n) => {
                let (block, i) = (letter as usize / n, letter as usize % n + 1);
                match block {
                    0 => format!("E_{i}"),
                    1 => format!("F_{i}"),
                    2 => format!("K_{i}"),
                    _ => format!("K_{i}^-1"),
                }
            }
        }
    }

    pub fn letter(&self, name: &str) -> Option<usize> {
        let sub = |prefix: &str| -> Option<Vec<usize>> {
            let rest = name.strip_prefix(prefix)?;
            let inner = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .unwrap_or(rest);
            if inner.contains(',') {
                inner.split(',').map(|p| p.parse().ok()).collect()
            } else {
                Some(vec![inner.parse().ok()?])
            }
        };
        match *self {
            Alphabet::X(n) => {
                let v = sub("x_")?;
                match v.as_slice() {
                    [i] if (1..=n).contains(i) => Some(i - 1),
                    _ => None,
                }
            }
            Alphabet::T(n) => {
                let v = sub("t_")?;
                let (i, j) = match v.as_slice() {
                    [i, j] => (*i, *j),
                    // t_12 style: exactly two digits when n < 10
                    [ij] if n < 10 && (11..=99).contains(ij) => (ij / 10, ij % 10),
                    _ => return None,
                };
                ((1..=n).contains(&i) && (1..=n).contains(&j)).then(|| (i - 1) * n + (j - 1))
            }
            Alphabet::U(n) => {
                let (block, rest) = if let Some(r) = name.strip_prefix("Kinv_") {
                    (3, r)
                } else {
                    let (head, r) = name.split_at(name.find('_')? + 1);
                    let block = match head {
                        "E_" => 0,
                        "F_" => 1,
                        "K_" => 2,
                        _ => return None,
                    };
                    (block, r)
                };
                let i: usize = rest.trim_start_matches('{').trim_end_matches('}').parse().ok()?;
                (1..=n).contains(&i).then(|| block * n + i - 1)
            }
        }
    }

    pub fn word_name(&self, w: &NCWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters().iter().map(|&l| self.name(l)).collect()
    }
}

/// Degree-lexicographic order with a per-letter precedence; a larger rank
/// means a larger letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialOrder {
    rank: Vec<u16>,
}

impl MonomialOrder {
    /// Descending index precedence: letter 0 is the largest.
    pub fn descending(n: usize) -> Self {
        Self {
            rank: (0..n).map(|i| (n - 1 - i) as u16).collect(),
        }
    }

    pub fn ascending(n: usize) -> Self {
        Self {
            rank: (0..n as u16).collect(),
        }
    }

    /// `precedence[k]` lists letters from largest to smallest.
    pub fn from_precedence(precedence: &[u16]) -> Option<Self> {
        let n = precedence.len();
        let mut rank = vec![u16::MAX; n];
        for (pos, &l) in precedence.iter().enumerate() {
            if l as usize >= n || rank[l as usize] != u16::MAX {
                return None;
            }
            rank[l as usize] = (n - 1 - pos) as u16;
        }
        Some(Self { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, letter: u16) -> u16 {
        self.rank[letter as usize]
    }

    pub fn compare(&self, a: &NCWord, b: &NCWord) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.letters().iter().zip(b.letters()) {
                let c = self.rank(*x).cmp(&self.rank(*y));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }

    /// Key whose natural order is this monomial order.
    pub(crate) fn key(&self, w: &NCWord) -> (usize, Vec<u16>) {
        (w.len(), w.letters().iter().map(|&l| self.rank(l)).collect())
    }

    pub(crate) fn unkey(&self, key: &(usize, Vec<u16>)) -> NCWord {
        let mut inverse = vec![0u16; self.rank.len()];
        for (l, &r) in self.rank.iter().enumerate() {
            inverse[r as usize] = l as u16;
        }
        NCWord::new(key.1.iter().map(|&r| inverse[r as usize]).collect())
    }
}

/// A noncommutative polynomial with Q(q) coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(NCWord::unit(), c)
    }

    pub fn monomial(w: NCWord, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    pub fn word(letters: &[u16]) -> Self {
        Self::monomial(NCWord::new(letters.to_vec()), Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (NCWord, Scalar)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in iter {
            p.add_term(w, &c);
        }
        p
    }

    /// Parse relation-style text over the given alphabet, e.g.
    /// `x_2x_3 - q^2 x_3x_2 - (q - q^-1) x_1x_4`.
    pub fn parse(text: &str, alphabet: Alphabet) -> crate::Result<Self> {
        crate::expr::parse(text)?.eval_ncpoly(&|name| alphabet.letter(name))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &Scalar)> + '_ {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &NCWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&NCWord::unit()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: NCWord, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &c1.mul_ref(c2));
            }
        }
        out
    }

    /// Left and right multiplication by words.
    pub fn sandwich(&self, left: &[u16], right: &[u16]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut v = left.to_vec();
                    v.extend_from_slice(w.letters());
                    v.extend_from_slice(right);
                    (NCWord::new(v), c.clone())
                })
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(NCWord::len).max()
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.len() == d)
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&NCWord, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Coordinates in `V^{⊗d}` for a homogeneous polynomial of degree `d`.
    pub fn to_vector(&self, n: usize) -> crate::linalg::SparseVec {
        self.terms.iter().map(|(w, c)| (w.index(n), c.clone())).collect()
    }

    pub fn from_vector(v: &crate::linalg::SparseVec, n: usize, degree: usize) -> Self {
        Self::from_terms(
            v.iter()
                .map(|(k, c)| (NCWord::from_index(*k, n, degree), c.clone())),
        )
    }

    /// Terms listed from largest to smallest word in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&NCWord, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn display_with(&self, alphabet: Alphabet, order: &MonomialOrder) -> String {
        format_terms(&self.sorted_terms(order), alphabet)
    }
}

fn format_coeff_term(c: &Scalar, word: &str, first: bool) -> String {
    let cs = c.to_string();
    let simple = c.is_laurent() && c.numerator().len() == 1;
    let (neg, body) = match cs.strip_prefix('-') {
        Some(rest) if simple => (true, rest.to_string()),
        _ => (false, cs),
    };
    let sign = match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    let coeff = if word.is_empty() {
        if simple {
            body
        } else {
            format!("({body})")
        }
    } else if body == "1" {
        String::new()
    } else if simple {
        format!("{body} ")
    } else {
        format!("({body}) ")
    };
    format!("{sign}{coeff}{word}")
}

pub(crate) fn format_terms(terms: &[(&NCWord, &Scalar)], alphabet: Alphabet) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in terms.iter().enumerate() {
        let word = if w.is_empty() {
            String::new()
        } else {
            alphabet.word_name(w)
        };
        let mut t = format_coeff_term(c, &word, i == 0);
        if word.is_empty() && c.is_one() {
            t = if i == 0 { "1".into() } else { " + 1".into() };
        }
        out.push_str(&t);
    }
    out
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self
            .terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
            .map_or(1, |m| m as usize + 1);
        let order = MonomialOrder::descending(n);
        write!(f, "{}", self.display_with(Alphabet::X(n), &order))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_relation_text() {
        let a = Alphabet::X(4);
        let p = NCPoly::parse("x_2x_3 - q^2 x_3x_2 - (q - q^-1) x_1x_4", a).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_homogeneous_of(2));
        let order = MonomialOrder::descending(4);
        assert_eq!(
            p.display_with(a, &order),
            "(-q + q^-1) x_1x_4 + x_2x_3 - q^2 x_3x_2"
        );
    }

    #[test]
    fn t_alphabet_names() {
        let a = Alphabet::T(2);
        assert_eq!(a.name(1), "t_12");
        assert_eq!(a.letter("t_21"), Some(2));
        assert_eq!(a.letter("t_{2,2}"), Some(3));
        assert_eq!(a.letter("t_31"), None);
        let p = NCPoly::parse("t_11t_12 - q t_12t_11", a).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn order_descending_makes_x1_largest() {
        let o = MonomialOrder::descending(2);
        let w12 = NCWord::new(vec![0, 1]);
        let w21 = NCWord::new(vec![1, 0]);
        assert_eq!(o.compare(&w12, &w21), Ordering::Greater);
        let k = o.key(&w21);
        assert_eq!(o.unkey(&k), w21);
    }

    #[test]
    fn word_index_roundtrip() {
        for w in NCWord::all(3, 3) {
            assert_eq!(NCWord::from_index(w.index(3), 3, 3), w);
        }
    }
}
