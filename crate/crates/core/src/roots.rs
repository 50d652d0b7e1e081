//! Root systems for the nine simple types, built by closing the simple
//! roots under root strings, plus the table of invariant degrees.
//!
//! Positive roots are kept in a canonical order (height, then lexicographic
//! on simple-root coordinates) so that orbit data files are portable and do
//! not depend on any external system's internal numbering.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::linalg::Rat;
use num_rational::Ratio;
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::str::FromStr for TypeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "E" | "e" => Ok(TypeLabel::E),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

fn valid_rank(label: TypeLabel, rank: usize) -> bool {
    match label {
        TypeLabel::A => rank >= 1,
        TypeLabel::B => rank >= 2,
        TypeLabel::C => rank >= 3,
        TypeLabel::D => rank >= 4,
        TypeLabel::E => (6..=8).contains(&rank),
        TypeLabel::F => rank == 4,
        TypeLabel::G => rank == 2,
    }
}

/// Cartan matrix with `cartan[i][j] = <alpha_j, alpha_i^vee>`, Bourbaki
/// numbering of the nodes.
fn cartan_matrix(label: TypeLabel, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match label {
        TypeLabel::A => {
            for i in 1..rank {
                link(i - 1, i);
            }
        }
        TypeLabel::B => {
            for i in 1..rank {
                link(i - 1, i);
            }
            // last simple root is short
            a[rank - 1][rank - 2] = -2;
        }
        TypeLabel::C => {
            for i in 1..rank {
                link(i - 1, i);
            }
            // last simple root is long
            a[rank - 2][rank - 1] = -2;
        }
        TypeLabel::D => {
            for i in 1..rank - 1 {
                link(i - 1, i);
            }
            link(rank - 3, rank - 1);
        }
        TypeLabel::E => {
            // chain 1-3-4-5-..., branch node 2 attached to 4
            link(0, 2);
            for i in 3..rank {
                link(i - 1, i);
            }
            link(1, 3);
        }
        TypeLabel::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2; // alpha3 short, alpha2 long
        }
        TypeLabel::G => {
            link(0, 1);
            a[0][1] = -3; // alpha1 short, alpha2 long
        }
    }
    a
}

/// Invariant degrees, ascending. Shipped as a static table; the constructor
/// checks the sum rule sum(d_i) = (dim g + rank)/2.
pub fn degrees(label: TypeLabel, rank: usize) -> Result<Vec<usize>, Error> {
    if !valid_rank(label, rank) {
        return Err(Error::InvalidType(format!("{label}{rank}")));
    }
    let mut d = match label {
        TypeLabel::A => (2..=rank + 1).collect::<Vec<_>>(),
        TypeLabel::B | TypeLabel::C => (1..=rank).map(|i| 2 * i).collect(),
        TypeLabel::D => {
            let mut v: Vec<usize> = (1..rank).map(|i| 2 * i).collect();
            v.push(rank);
            v
        }
        TypeLabel::E => match rank {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        TypeLabel::F => vec![2, 6, 8, 12],
        TypeLabel::G => vec![2, 6],
    };
    d.sort_unstable();
    Ok(d)
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub label: TypeLabel,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots as coordinate vectors over the simple roots, ordered
    /// by (height, lexicographic).
    pub positive: Vec<Vec<i64>>,
    pub degrees: Vec<usize>,
    /// Half square lengths (alpha_i, alpha_i)/2 of the simple roots,
    /// normalized so short roots have value 1.
    pub simple_norm: Vec<Rat>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self, Error> {
        if !valid_rank(label, rank) {
            return Err(Error::InvalidType(format!("{label}{rank}")));
        }
        let cartan = cartan_matrix(label, rank);
        let positive = close_positive_roots(&cartan, rank);
        let degrees = degrees(label, rank)?;
        let simple_norm = symmetrize(&cartan, rank);
        let index = positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let rs = RootSystem { label, rank, cartan, positive, degrees, simple_norm, index };
        let dim = rs.dim();
        let sum: usize = rs.degrees.iter().sum();
        assert_eq!(2 * sum, dim + rank, "degree sum rule violated for {label}{rank}");
        Ok(rs)
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.positive.len() + self.rank
    }

    /// Dimension of a Borel subalgebra, (dim g + rank)/2.
    pub fn borel_dim(&self) -> usize {
        self.positive.len() + self.rank
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// `<beta, alpha_i^vee>` for a root (or any weight) in coordinates.
    pub fn pairing(&self, coords: &[i64], i: usize) -> i64 {
        coords.iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Half square length (beta, beta)/2 of a root.
    pub fn norm_half(&self, coords: &[i64]) -> Rat {
        let mut s = Rat::new(BigInt::from(0), BigInt::from(1));
        for i in 0..self.rank {
            for j in 0..self.rank {
                if coords[i] != 0 && coords[j] != 0 {
                    // (alpha_i, alpha_j) = simple_norm[i] * cartan[i][j]
                    s += &self.simple_norm[i]
                        * Ratio::from_integer(BigInt::from(self.cartan[i][j] * coords[i] * coords[j]));
                }
            }
        }
        s / Ratio::from_integer(BigInt::from(2))
    }

    pub fn height(coords: &[i64]) -> i64 {
        coords.iter().sum()
    }
}

/// Positive solution of d_i * cartan[i][j] = d_j * cartan[j][i], short = 1.
fn symmetrize(cartan: &[Vec<i64>], rank: usize) -> Vec<Rat> {
    let one = || Ratio::from_integer(BigInt::from(1));
    let mut d: Vec<Option<Rat>> = vec![None; rank];
    d[0] = Some(one());
    // propagate along edges of the Dynkin diagram
    for _ in 0..rank {
        for i in 0..rank {
            for j in 0..rank {
                if i != j && cartan[i][j] != 0 {
                    if let (Some(di), None) = (d[i].clone(), &d[j]) {
                        let ratio = Ratio::new(BigInt::from(cartan[i][j]), BigInt::from(cartan[j][i]));
                        d[j] = Some(di * ratio);
                    }
                }
            }
        }
    }
    let mut vals: Vec<Rat> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = vals.iter().min().expect("nonempty").clone();
    for v in vals.iter_mut() {
        *v /= &min;
    }
    vals
}

/// Closure of the simple roots under root strings: beta + alpha_i is a root
/// iff p - <beta, alpha_i^vee> > 0 where p is the depth of the string
/// through beta in direction -alpha_i.
fn close_positive_roots(cartan: &[Vec<i64>], rank: usize) -> Vec<Vec<i64>> {
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    let mut simples = Vec::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        known.insert(c.clone(), ());
        simples.push(c);
    }
    by_height.push(simples);
    let mut h = 1usize;
    while h < by_height.len() {
        let current = by_height[h].clone();
        for beta in current {
            for i in 0..rank {
                let mut down = beta.clone();
                let mut p = 0i64;
                loop {
                    down[i] -= 1;
                    if down.iter().all(|&c| c == 0) {
                        break; // string hit zero, which is not a root
                    }
                    // beta - k alpha_i is a root only while it stays positive
                    if down.iter().all(|&c| c >= 0) && known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        while by_height.len() <= h + 1 {
                            by_height.push(Vec::new());
                        }
                        by_height[h + 1].push(up);
                    }
                }
            }
        }
        h += 1;
    }
    let mut all: Vec<Vec<i64>> = known.into_keys().collect();
    all.sort_by_key(|c| (RootSystem::height(c), c.clone()));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_match_known_counts() {
        let a1 = RootSystem::new(TypeLabel::A, 1).unwrap();
        assert_eq!(a1.num_positive(), 1);
        assert_eq!(a1.dim(), 3);
        let g2 = RootSystem::new(TypeLabel::G, 2).unwrap();
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.dim(), 14);
        let e8 = RootSystem::new(TypeLabel::E, 8).unwrap();
        assert_eq!(e8.num_positive(), 120);
        assert_eq!(e8.dim(), 248);
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        assert!(RootSystem::new(TypeLabel::B, 1).is_err());
        assert!(RootSystem::new(TypeLabel::C, 2).is_err());
        assert!(RootSystem::new(TypeLabel::D, 3).is_err());
        assert!(RootSystem::new(TypeLabel::E, 9).is_err());
        assert!(RootSystem::new(TypeLabel::F, 3).is_err());
        assert!(degrees(TypeLabel::G, 3).is_err());
    }

    #[test]
    fn degree_tables_and_sum_rule() {
        assert_eq!(degrees(TypeLabel::A, 2).unwrap(), vec![2, 3]);
        assert_eq!(degrees(TypeLabel::G, 2).unwrap(), vec![2, 6]);
        assert_eq!(
            degrees(TypeLabel::E, 8).unwrap(),
            vec![2, 8, 12, 14, 18, 20, 24, 30]
        );
        // sum rule for all nine types at the ranks exercised in this crate
        let cases = [
            (TypeLabel::A, 1),
            (TypeLabel::A, 2),
            (TypeLabel::A, 3),
            (TypeLabel::B, 2),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::D, 4),
            (TypeLabel::E, 6),
            (TypeLabel::E, 7),
            (TypeLabel::E, 8),
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
        ];
        for (t, r) in cases {
            let rs = RootSystem::new(t, r).unwrap();
            let sum: usize = rs.degrees.iter().sum();
            assert_eq!(sum, rs.borel_dim(), "{t}{r}");
            assert_eq!(rs.degrees[0], 2, "{t}{r}");
        }
    }

    #[test]
    fn root_lists_are_clean() {
        for (t, r) in [
            (TypeLabel::A, 3),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::D, 4),
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
        ] {
            let rs = RootSystem::new(t, r).unwrap();
            let mut seen = std::collections::HashSet::new();
            for root in &rs.positive {
                assert!(seen.insert(root.clone()), "duplicate root in {t}{r}");
                assert!(root.iter().all(|&c| c >= 0));
                // every non-simple positive root is a simple root plus a positive root
                if RootSystem::height(root) > 1 {
                    let mut found = false;
                    for i in 0..rs.rank {
                        if root[i] > 0 {
                            let mut lower = root.clone();
                            lower[i] -= 1;
                            if rs.is_positive_root(&lower) {
                                found = true;
                                break;
                            }
                        }
                    }
                    assert!(found, "{t}{r}: root {root:?} has no simple predecessor");
                }
            }
        }
    }

    #[test]
    fn expected_counts_for_classical_families() {
        assert_eq!(RootSystem::new(TypeLabel::A, 3).unwrap().num_positive(), 6);
        assert_eq!(RootSystem::new(TypeLabel::B, 3).unwrap().num_positive(), 9);
        assert_eq!(RootSystem::new(TypeLabel::C, 3).unwrap().num_positive(), 9);
        assert_eq!(RootSystem::new(TypeLabel::D, 4).unwrap().num_positive(), 12);
        assert_eq!(RootSystem::new(TypeLabel::F, 4).unwrap().num_positive(), 24);
        assert_eq!(RootSystem::new(TypeLabel::E, 6).unwrap().num_positive(), 36);
        assert_eq!(RootSystem::new(TypeLabel::E, 7).unwrap().num_positive(), 63);
    }

    #[test]
    fn norms_distinguish_long_and_short() {
        let g2 = RootSystem::new(TypeLabel::G, 2).unwrap();
        let short = g2.norm_half(&[1, 0]);
        let long = g2.norm_half(&[0, 1]);
        assert_eq!(short, Ratio::from_integer(BigInt::from(1)));
        assert_eq!(long, Ratio::from_integer(BigInt::from(3)));
        let b2 = RootSystem::new(TypeLabel::B, 2).unwrap();
        assert_eq!(b2.norm_half(&[0, 1]), Ratio::from_integer(BigInt::from(1)));
        assert_eq!(b2.norm_half(&[1, 0]), Ratio::from_integer(BigInt::from(2)));
    }
}
