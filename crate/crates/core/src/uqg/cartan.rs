use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Cartan matrix with symmetrizers `d_i` making `(d_i a_ij)` symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
    d: Vec<u32>,
}

impl CartanData {
    pub fn new(matrix: Vec<Vec<i64>>, d: Vec<u32>) -> Result<Self> {
        let n = matrix.len();
        let bad = |m: String| Err(Error::InvalidCartan(m));
        if n == 0 {
            return bad("rank must be positive".into());
        }
        if d.len() != n {
            return bad(format!("{} symmetrizers for rank {n}", d.len()));
        }
        if matrix.iter().any(|r| r.len() != n) {
            return bad("matrix is not square".into());
        }
        if d.contains(&0) {
            return bad("symmetrizers must be positive".into());
        }
        if d.iter().fold(0u32, |g, &x| g.gcd(&x)) != 1 {
            return bad("symmetrizers must be coprime".into());
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return bad(format!("a_{0}{0} = {1}, expected 2", i + 1, matrix[i][i]));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (matrix[i][j], matrix[j][i]);
                if a > 0 {
                    return bad(format!("a_{}{} = {a} is positive", i + 1, j + 1));
                }
                if (a == 0) != (b == 0) {
                    return bad(format!(
                        "a_{0}{1} and a_{1}{0} disagree on vanishing",
                        i + 1,
                        j + 1
                    ));
                }
                if d[i] as i64 * a != d[j] as i64 * b {
                    return bad(format!("d_{0} a_{0}{1} != d_{1} a_{1}{0}", i + 1, j + 1));
                }
            }
        }
        Ok(Self { matrix, d })
    }

    /// Type `A_n` (`sl_{n+1}`).
    pub fn type_a(n: usize) -> Result<Self> {
        let m = chain(n, |_| (-1, -1));
        Self::new(m, vec![1; n])
    }

    /// Type `B_n`, short simple root last.
    pub fn type_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCartan("B_n needs n >= 2".into()));
        }
        let m = chain(n, |i| if i + 2 == n { (-1, -2) } else { (-1, -1) });
        let mut d = vec![2; n];
        d[n - 1] = 1;
        Self::new(m, d)
    }

    /// Type `C_n`, long simple root last.
    pub fn type_c(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCartan("C_n needs n >= 2".into()));
        }
        let m = chain(n, |i| if i + 2 == n { (-2, -1) } else { (-1, -1) });
        let mut d = vec![1; n];
        d[n - 1] = 2;
        Self::new(m, d)
    }

    /// Type `D_n`, fork at node `n-2`.
    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidCartan("D_n needs n >= 4".into()));
        }
        let mut m = chain(n - 1, |_| (-1, -1));
        for row in &mut m {
            row.push(0);
        }
        let mut last = vec![0; n];
        last[n - 3] = -1;
        last[n - 1] = 2;
        m[n - 3][n - 1] = -1;
        m.push(last);
        Self::new(m, vec![1; n])
    }

    /// Parse a type label such as `A2`, `C2`, `D4`.
    pub fn from_label(label: &str) -> Result<Self> {
        let (t, rank) = label.split_at(1);
        let n: usize = rank
            .parse()
            .map_err(|_| Error::InvalidCartan(format!("bad type label `{label}`")))?;
        match t {
            "A" | "a" => Self::type_a(n),
            "B" | "b" => Self::type_b(n),
            "C" | "c" => Self::type_c(n),
            "D" | "d" => Self::type_d(n),
            _ => Err(Error::InvalidCartan(format!("unsupported type `{t}`"))),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn d(&self, i: usize) -> u32 {
        self.d[i]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn symmetrizers(&self) -> &[u32] {
        &self.d
    }

    /// `q_i = q^{d_i}`.
    pub fn q_i(&self, i: usize) -> Scalar {
        Scalar::q_pow(self.d[i] as i32)
    }
}

/// Path Dynkin diagram; `link(i)` gives `(a_{i,i+1}, a_{i+1,i})`.
fn chain(n: usize, link: impl Fn(usize) -> (i64, i64)) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            let (a, b) = link(i);
            m[i][i + 1] = a;
            m[i + 1][i] = b;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_types_validate() {
        for label in ["A1", "A3", "B2", "B3", "C2", "C4", "D4", "D5"] {
            CartanData::from_label(label).unwrap();
        }
        let c2 = CartanData::type_c(2).unwrap();
        assert_eq!(c2.matrix(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(c2.symmetrizers(), &[1, 2]);
    }

    #[test]
    fn rejects_bad_data() {
        assert!(CartanData::new(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
        assert!(CartanData::new(vec![vec![2, 1], vec![1, 2]], vec![1, 1]).is_err());
        assert!(CartanData::new(vec![vec![2, 0], vec![-1, 2]], vec![1, 1]).is_err());
        assert!(CartanData::new(vec![vec![2]], vec![2]).is_err());
        assert!(CartanData::new(vec![vec![3]], vec![1]).is_err());
    }
}
