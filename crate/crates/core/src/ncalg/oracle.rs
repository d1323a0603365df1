use super::poly::NCWord;
use super::relations::RelationSet;
use crate::linalg::Echelon;

/// Graded dimensions of `TV/J` computed without rewriting: in degree `d` the
/// ideal is spanned by `V^{⊗i} ⊗ rel ⊗ V^{⊗(d-2-i)}`, and its rank is
/// subtracted from `n^d`.
pub fn quotient_dims_linear(rels: &RelationSet, max_degree: usize) -> Vec<usize> {
    let n = rels.generators();
    (0..=max_degree)
        .map(|d| {
            let total = n.pow(d as u32);
            if d < 2 || rels.is_empty() {
                return total;
            }
            total - ideal_component(rels, d).rank()
        })
        .collect()
}

/// Echelon basis of the degree-`d` component of the two-sided ideal.
pub fn ideal_component(rels: &RelationSet, d: usize) -> Echelon {
    let n = rels.generators();
    let mut ech = Echelon::new(n.pow(d as u32));
    if d < 2 {
        return ech;
    }
    for i in 0..=d - 2 {
        for left in NCWord::all(n, i) {
            for right in NCWord::all(n, d - 2 - i) {
                for r in rels.relations() {
                    let p = r.sandwich(left.letters(), right.letters());
                    ech.insert(p.to_vector(n));
                }
            }
        }
    }
    ech
}
