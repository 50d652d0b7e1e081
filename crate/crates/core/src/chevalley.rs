//! Lie algebras over Q with exact integer structure constants.
//!
//! Two constructions are provided: a Chevalley basis built from a root
//! system (signs fixed by the extraspecial-pair convention, so the result
//! is deterministic), and an algebra spanned by explicit matrices with
//! structure constants recovered by solving in the span. The Killing form
//! is always the trace form of the adjoint representation, computed from
//! the structure constants themselves.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{rat, vec_zero, Rat, RatMatrix};
use crate::roots::RootSystem;

/// Coordinate vector over the basis of a [`LieAlgebra`].
pub type Element = Vec<Rat>;

#[derive(Debug, Clone)]
enum Basis {
    /// x_beta (positive roots, canonical order), then y_beta, then h_1..h_l.
    Chevalley,
    /// Arbitrary basis, e.g. a matrix realization.
    Generic,
}

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub dim: usize,
    pub rank: usize,
    pub root_system: Option<RootSystem>,
    basis: Basis,
    /// bracket table for i < j: [b_i, b_j] = sum of (k, c).
    table: Vec<Vec<(usize, Rat)>>,
    killing: RatMatrix,
}

impl LieAlgebra {
    /// Chevalley-basis algebra of a root system.
    pub fn from_root_system(rs: RootSystem) -> Self {
        let npos = rs.num_positive();
        let rank = rs.rank;
        let dim = rs.dim();
        let signs = SignTable::build(&rs);

        let mut table: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); dim * dim];
        let x = |i: usize| i;
        let y = |i: usize| npos + i;
        let h = |i: usize| 2 * npos + i;

        let mut put = |i: usize, j: usize, entries: Vec<(usize, Rat)>| {
            debug_assert!(i < j);
            table[i * dim + j] = entries;
        };

        // [x_a, x_b] and [y_a, y_b]
        for a in 0..npos {
            for b in a + 1..npos {
                let sum: Vec<i64> =
                    rs.positive[a].iter().zip(&rs.positive[b]).map(|(p, q)| p + q).collect();
                if let Some(s) = rs.positive_index(&sum) {
                    let n = signs.n_pos(a, b);
                    if !n.is_zero() {
                        put(x(a), x(b), vec![(x(s), n.clone())]);
                        put(y(a), y(b), vec![(y(s), -n)]);
                    }
                }
            }
        }
        // [x_a, y_b]
        for a in 0..npos {
            for b in 0..npos {
                if a == b {
                    // [x_alpha, y_alpha] = coroot of alpha in the h basis
                    let alpha = &rs.positive[a];
                    let d_alpha = rs.norm_half(alpha);
                    let mut entries = Vec::new();
                    for i in 0..rank {
                        let mut ci = Rat::from_integer(alpha[i].into());
                        if ci.is_zero() {
                            continue;
                        }
                        ci *= &rs.simple_norm[i];
                        ci /= &d_alpha;
                        entries.push((h(i), ci));
                    }
                    put(x(a), y(a), entries);
                    continue;
                }
                let diff: Vec<i64> =
                    rs.positive[a].iter().zip(&rs.positive[b]).map(|(p, q)| p - q).collect();
                let neg: Vec<i64> = diff.iter().map(|c| -c).collect();
                let target = if let Some(s) = rs.positive_index(&diff) {
                    Some(x(s))
                } else {
                    rs.positive_index(&neg).map(y)
                };
                if let Some(t) = target {
                    let n = signs.n_mixed_idx(&rs, a, b);
                    if !n.is_zero() {
                        let (i, j, v) = if x(a) < y(b) {
                            (x(a), y(b), n)
                        } else {
                            (y(b), x(a), -n)
                        };
                        put(i, j, vec![(t, v)]);
                    }
                }
            }
        }
        // [h_i, x_a], [h_i, y_a]; x,y indices always precede h indices
        for i in 0..rank {
            for a in 0..npos {
                let p = rs.pairing(&rs.positive[a], i);
                if p != 0 {
                    put(x(a), h(i), vec![(x(a), rat(-p))]);
                    put(y(a), h(i), vec![(y(a), rat(p))]);
                }
            }
        }

        let mut alg = LieAlgebra {
            dim,
            rank,
            root_system: Some(rs),
            basis: Basis::Chevalley,
            table,
            killing: RatMatrix::zero(0, 0),
        };
        alg.killing = alg.compute_killing();
        alg
    }

    /// Algebra spanned by the given matrices; fails if the span is not
    /// closed under the commutator. `rank` is the abstract rank.
    pub fn from_matrices(mats: &[RatMatrix], rank: usize) -> Result<Self, Error> {
        let k = mats.len();
        let n = mats[0].rows();
        assert!(mats.iter().all(|m| m.rows() == n && m.cols() == n));
        let flat: Vec<Vec<Rat>> = mats
            .iter()
            .map(|m| (0..n).flat_map(|i| m.row(i).to_vec()).collect())
            .collect();
        // coordinates in the original (not echelonized) basis: solve B^T c = v
        let bt = RatMatrix::from_rows(flat.clone()).transpose();
        let mut table: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); k * k];
        for i in 0..k {
            for j in i + 1..k {
                let comm = mat_comm(&mats[i], &mats[j]);
                let v: Vec<Rat> = (0..n).flat_map(|r| comm.row(r).to_vec()).collect();
                let coords = bt
                    .solve(&v)
                    .ok_or_else(|| Error::NotInSubalgebra("matrix span not bracket-closed".into()))?;
                table[i * k + j] = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(t, c)| (t, c))
                    .collect();
            }
        }
        let mut alg = LieAlgebra {
            dim: k,
            rank,
            root_system: None,
            basis: Basis::Generic,
            table,
            killing: RatMatrix::zero(0, 0),
        };
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    // -- basis bookkeeping -------------------------------------------------

    pub fn num_positive(&self) -> usize {
        self.root_system.as_ref().map_or(0, |rs| rs.num_positive())
    }

    pub fn x_index(&self, a: usize) -> usize {
        debug_assert!(matches!(self.basis, Basis::Chevalley));
        a
    }

    pub fn y_index(&self, a: usize) -> usize {
        debug_assert!(matches!(self.basis, Basis::Chevalley));
        self.num_positive() + a
    }

    pub fn h_index(&self, i: usize) -> usize {
        debug_assert!(matches!(self.basis, Basis::Chevalley));
        2 * self.num_positive() + i
    }

    pub fn is_chevalley(&self) -> bool {
        matches!(self.basis, Basis::Chevalley)
    }

    /// Indices of the Cartan part of a Chevalley basis.
    pub fn cartan_indices(&self) -> std::ops::Range<usize> {
        let n = self.num_positive();
        2 * n..2 * n + self.rank
    }

    pub fn zero_element(&self) -> Element {
        vec_zero(self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero_element();
        v[i] = Rat::one();
        v
    }

    /// Sum of the positive-root vectors with the given coordinates over the
    /// simple roots. Every listed root must be a positive root.
    pub fn element_from_positive_roots(&self, roots: &[Vec<i64>]) -> Result<Element, Error> {
        let rs = self.root_system.as_ref().expect("needs a root system");
        let mut v = self.zero_element();
        for r in roots {
            let idx = rs
                .positive_index(r)
                .ok_or_else(|| Error::NotInSubalgebra(format!("{r:?} is not a positive root")))?;
            v[self.x_index(idx)] += Rat::one();
        }
        Ok(v)
    }

    // -- bracket and adjoint ----------------------------------------------

    fn table_at(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.table[i * self.dim + j]
    }

    /// Structure constants of [b_i, b_j] for any i, j.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.table_at(i, j).to_vec(),
            Ordering::Equal => Vec::new(),
            Ordering::Greater => {
                self.table_at(j, i).iter().map(|(k, c)| (*k, -c)).collect()
            }
        }
    }

    pub fn bracket(&self, a: &[Rat], b: &[Rat]) -> Element {
        let mut out = self.zero_element();
        let sa: Vec<usize> = (0..self.dim).filter(|&i| !a[i].is_zero()).collect();
        let sb: Vec<usize> = (0..self.dim).filter(|&j| !b[j].is_zero()).collect();
        for &i in &sa {
            for &j in &sb {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                let entries = self.table_at(lo, hi);
                if entries.is_empty() {
                    continue;
                }
                let mut f = &a[i] * &b[j];
                if sign < 0 {
                    f = -f;
                }
                for (k, c) in entries {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    /// Matrix of ad(a) acting on coordinates: ad(a) * b = [a, b].
    pub fn ad_matrix(&self, a: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for i in (0..self.dim).filter(|&i| !a[i].is_zero()) {
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                for (k, c) in self.table_at(lo, hi) {
                    let mut v = &a[i] * c;
                    if sign < 0 {
                        v = -v;
                    }
                    let cur = m.get(*k, j).clone();
                    m.set(*k, j, cur + v);
                }
            }
        }
        m
    }

    /// Sparse triples (row, col, coeff) of ad(a).
    pub fn ad_sparse(&self, a: &[Rat]) -> Vec<(usize, usize, Rat)> {
        let mut acc: HashMap<(usize, usize), Rat> = HashMap::new();
        for i in (0..self.dim).filter(|&i| !a[i].is_zero()) {
            for j in 0..self.dim {
                if i == j {
                    continue;
                }
                let (lo, hi, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                for (k, c) in self.table_at(lo, hi) {
                    let mut v = &a[i] * c;
                    if sign < 0 {
                        v = -v;
                    }
                    *acc.entry((*k, j)).or_insert_with(Rat::zero) += v;
                }
            }
        }
        let mut out: Vec<(usize, usize, Rat)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    pub fn apply_ad(&self, a: &[Rat], v: &[Rat]) -> Element {
        self.bracket(a, v)
    }

    /// True iff ad(a)^bound kills every basis vector, with the cheap bound
    /// 2 * d_max steps.
    pub fn is_ad_nilpotent(&self, a: &[Rat]) -> bool {
        let bound = 2 * self
            .root_system
            .as_ref()
            .map_or(self.dim, |rs| *rs.degrees.last().unwrap());
        for j in 0..self.dim {
            let mut v = self.basis_element(j);
            let mut steps = 0;
            while !crate::linalg::vec_is_zero(&v) {
                if steps > bound {
                    return false;
                }
                v = self.bracket(a, &v);
                steps += 1;
            }
        }
        true
    }

    // -- Killing form -------------------------------------------------------

    fn compute_killing(&self) -> RatMatrix {
        let ads: Vec<Vec<(usize, usize, Rat)>> =
            (0..self.dim).map(|i| self.ad_sparse(&self.basis_element(i))).collect();
        let maps: Vec<HashMap<(usize, usize), Rat>> = ads
            .iter()
            .map(|tr| tr.iter().map(|(r, c, v)| ((*r, *c), v.clone())).collect())
            .collect();
        let mut k = RatMatrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut s = Rat::zero();
                for (r, c, v) in &ads[i] {
                    if let Some(w) = maps[j].get(&(*c, *r)) {
                        s += v * w;
                    }
                }
                k.set(i, j, s.clone());
                k.set(j, i, s);
            }
        }
        k
    }

    pub fn killing_gram(&self) -> &RatMatrix {
        &self.killing
    }

    pub fn killing_pair(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for i in (0..self.dim).filter(|&i| !a[i].is_zero()) {
            for j in (0..self.dim).filter(|&j| !b[j].is_zero()) {
                let k = self.killing.get(i, j);
                if !k.is_zero() {
                    s += &a[i] * &b[j] * k;
                }
            }
        }
        s
    }

    /// Covector kappa(a, .) as coordinates on the dual basis.
    pub fn killing_covector(&self, a: &[Rat]) -> Vec<Rat> {
        self.killing.mul_vec(a)
    }

    /// Matrix M with M[j][k] = kappa(xi, [b_j, b_k]), assembled in one pass
    /// over the structure constants. This is the Kirillov form of kappa(xi,.)
    /// on all of g.
    pub fn kirillov_matrix(&self, xi: &[Rat]) -> RatMatrix {
        let u = self.killing_covector(xi);
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for k in j + 1..self.dim {
                let mut s = Rat::zero();
                for (t, c) in self.table_at(j, k) {
                    if !u[*t].is_zero() {
                        s += c * &u[*t];
                    }
                }
                if !s.is_zero() {
                    m.set(k, j, -s.clone());
                    m.set(j, k, s);
                }
            }
        }
        m
    }

    /// Weight of basis vector `i` under ad of a Cartan element, for a
    /// Chevalley basis. `h` must be supported on the Cartan indices.
    pub fn cartan_weight(&self, h: &[Rat], i: usize) -> Rat {
        let rs = self.root_system.as_ref().expect("chevalley basis");
        let n = rs.num_positive();
        if i >= 2 * n {
            return Rat::zero();
        }
        let (root, sign) = if i < n { (&rs.positive[i], 1) } else { (&rs.positive[i - n], -1) };
        let mut s = Rat::zero();
        for c in 0..self.rank {
            let hc = &h[2 * n + c];
            if !hc.is_zero() {
                s += hc * rat(rs.pairing(root, c));
            }
        }
        if sign < 0 {
            -s
        } else {
            s
        }
    }

    /// True iff `h` is supported on the Cartan part of a Chevalley basis.
    pub fn in_cartan(&self, h: &[Rat]) -> bool {
        if !self.is_chevalley() {
            return false;
        }
        let n = self.num_positive();
        h.iter().take(2 * n).all(|c| c.is_zero())
    }
}

fn mat_comm(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    let mut out = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Rat::zero();
            for k in 0..n {
                let (x, y) = (a.get(i, k), b.get(k, j));
                if !x.is_zero() && !y.is_zero() {
                    s += x * y;
                }
                let (x, y) = (b.get(i, k), a.get(k, j));
                if !x.is_zero() && !y.is_zero() {
                    s -= x * y;
                }
            }
            out.set(i, j, s);
        }
    }
    out
}

/// Structure-constant signs via the extraspecial pair convention: for each
/// non-simple positive root the pair (alpha, beta) with minimal alpha gets
/// N = p+1 > 0, and every other pair is forced by the Jacobi identity.
struct SignTable {
    /// N for pairs of positive roots (a < b in canonical order) whose sum
    /// is a positive root.
    n: HashMap<(usize, usize), Rat>,
    norm: Vec<Rat>,
}

impl SignTable {
    fn build(rs: &RootSystem) -> SignTable {
        let npos = rs.num_positive();
        let norm: Vec<Rat> = rs.positive.iter().map(|r| rs.norm_half(r)).collect();
        let mut t = SignTable { n: HashMap::new(), norm };
        // process targets in canonical (height-increasing) order
        for g in 0..npos {
            let gamma = &rs.positive[g];
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for a in 0..npos {
                let rest: Vec<i64> = gamma.iter().zip(&rs.positive[a]).map(|(x, y)| x - y).collect();
                if rest.iter().all(|&c| c >= 0) {
                    if let Some(b) = rs.positive_index(&rest) {
                        if a < b {
                            pairs.push((a, b));
                        }
                    }
                }
            }
            if pairs.is_empty() {
                continue;
            }
            pairs.sort_unstable();
            let (a1, b1) = pairs[0];
            let p = string_depth(rs, a1, b1);
            t.n.insert((a1, b1), rat(p + 1));
            for &(a, b) in &pairs[1..] {
                let v = t.special_pair(rs, a, b, a1, g);
                t.n.insert((a, b), v);
            }
        }
        t
    }

    /// N for positive-root indices in any order.
    fn n_pos(&self, a: usize, b: usize) -> Rat {
        if a < b {
            self.n.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
        } else {
            -self.n_pos(b, a)
        }
    }

    /// N_{alpha, -beta} for positive indices a, b with alpha != beta.
    fn n_mixed_idx(&self, rs: &RootSystem, a: usize, b: usize) -> Rat {
        let diff: Vec<i64> = rs.positive[a].iter().zip(&rs.positive[b]).map(|(x, y)| x - y).collect();
        if let Some(nu) = rs.positive_index(&diff) {
            // alpha = beta + nu: N_{alpha,-beta} = -(d_nu / d_alpha) N_{beta,nu}
            let r = &self.norm[nu] / &self.norm[a];
            -(r * self.n_pos(b, nu))
        } else {
            let neg: Vec<i64> = diff.iter().map(|c| -c).collect();
            if let Some(nu) = rs.positive_index(&neg) {
                // beta = alpha + nu: N_{alpha,-beta} = -(d_nu / d_beta) N_{alpha,nu}
                let r = &self.norm[nu] / &self.norm[b];
                -(r * self.n_pos(a, nu))
            } else {
                Rat::zero()
            }
        }
    }

    /// General N over signed roots, (sign, index) encoding.
    fn n_signed(&self, rs: &RootSystem, a: (i8, usize), b: (i8, usize)) -> Rat {
        match (a.0, b.0) {
            (1, 1) => self.n_pos(a.1, b.1),
            (-1, -1) => -self.n_pos(a.1, b.1),
            (1, -1) => self.n_mixed_idx(rs, a.1, b.1),
            (-1, 1) => -self.n_mixed_idx(rs, b.1, a.1),
            _ => unreachable!(),
        }
    }

    /// Jacobi identity on (x_{-alpha1}, x_alpha, x_beta) solves for
    /// N_{alpha,beta} of a non-extraspecial special pair.
    fn special_pair(&self, rs: &RootSystem, a: usize, b: usize, a1: usize, gamma: usize) -> Rat {
        let signed_index = |coords: &Vec<i64>| -> Option<(i8, usize)> {
            if let Some(i) = rs.positive_index(coords) {
                return Some((1, i));
            }
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            rs.positive_index(&neg).map(|i| (-1, i))
        };
        let diff = |p: usize, q: usize| -> Vec<i64> {
            rs.positive[p].iter().zip(&rs.positive[q]).map(|(x, y)| x - y).collect()
        };
        let mut rhs = Rat::zero();
        // term [[x_{-a1}, x_a], x_b]
        if let Some(tau) = signed_index(&diff(a, a1)) {
            let n1 = self.n_signed(rs, (-1, a1), (1, a));
            let n2 = self.n_signed(rs, tau, (1, b));
            rhs += n1 * n2;
        }
        // term [[x_b, x_{-a1}], x_a]
        if let Some(tau) = signed_index(&diff(b, a1)) {
            let n1 = self.n_signed(rs, (1, b), (-1, a1));
            let n2 = self.n_signed(rs, tau, (1, a));
            rhs += n1 * n2;
        }
        let denom = self.n_signed(rs, (1, gamma), (-1, a1));
        debug_assert!(!denom.is_zero(), "gamma - alpha1 = beta1 must be a root");
        -(rhs / denom)
    }
}

/// Largest k with beta - k*alpha a root (positive or negative).
fn string_depth(rs: &RootSystem, a: usize, b: usize) -> i64 {
    let mut k = 0i64;
    let mut cur: Vec<i64> = rs.positive[b].clone();
    loop {
        for (c, d) in cur.iter_mut().zip(&rs.positive[a]) {
            *c -= d;
        }
        let neg: Vec<i64> = cur.iter().map(|c| -c).collect();
        if rs.is_positive_root(&cur) || rs.is_positive_root(&neg) {
            k += 1;
        } else {
            return k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::TypeLabel;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn build(label: TypeLabel, rank: usize) -> LieAlgebra {
        LieAlgebra::from_root_system(RootSystem::new(label, rank).unwrap())
    }

    fn jacobi_defect(l: &LieAlgebra, i: usize, j: usize, k: usize) -> Element {
        let (bi, bj, bk) = (l.basis_element(i), l.basis_element(j), l.basis_element(k));
        let mut s = l.bracket(&l.bracket(&bi, &bj), &bk);
        for (x, y) in s.iter_mut().zip(l.bracket(&l.bracket(&bj, &bk), &bi)) {
            *x += y;
        }
        for (x, y) in s.iter_mut().zip(l.bracket(&l.bracket(&bk, &bi), &bj)) {
            *x += y;
        }
        s
    }

    #[test]
    fn sl2_relations() {
        let l = build(TypeLabel::A, 1);
        assert_eq!(l.dim, 3);
        let e = l.basis_element(l.x_index(0));
        let f = l.basis_element(l.y_index(0));
        let h = l.basis_element(l.h_index(0));
        assert_eq!(l.bracket(&h, &e), crate::linalg::vec_scale(&rat(2), &e));
        assert_eq!(l.bracket(&h, &f), crate::linalg::vec_scale(&rat(-2), &f));
        assert_eq!(l.bracket(&e, &f), h);
    }

    #[test]
    fn a2_jacobi_on_all_triples() {
        let l = build(TypeLabel::A, 2);
        assert_eq!(l.dim, 8);
        let mut count = 0;
        for i in 0..l.dim {
            for j in i + 1..l.dim {
                for k in j + 1..l.dim {
                    assert!(crate::linalg::vec_is_zero(&jacobi_defect(&l, i, j, k)));
                    count += 1;
                }
            }
        }
        assert_eq!(count, 56);
    }

    #[test]
    fn b2_and_g2_jacobi_exhaustive() {
        for (t, r) in [(TypeLabel::B, 2), (TypeLabel::G, 2)] {
            let l = build(t, r);
            for i in 0..l.dim {
                for j in i + 1..l.dim {
                    for k in j + 1..l.dim {
                        assert!(
                            crate::linalg::vec_is_zero(&jacobi_defect(&l, i, j, k)),
                            "{t}{r}: jacobi fails on ({i},{j},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_integers() {
        for (t, r) in [(TypeLabel::A, 3), (TypeLabel::B, 3), (TypeLabel::C, 3), (TypeLabel::D, 4), (TypeLabel::G, 2), (TypeLabel::F, 4)] {
            let l = build(t, r);
            for i in 0..l.dim {
                for j in i + 1..l.dim {
                    for (_, c) in l.bracket_basis(i, j) {
                        assert!(c.is_integer(), "{t}{r}: non-integer constant {c} at [{i},{j}]");
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_is_alternating_and_matches_ad() {
        let l = build(TypeLabel::B, 2);
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        for _ in 0..10 {
            let a: Element = (0..l.dim).map(|_| rat(rng.gen_range(-5..=5))).collect();
            let b: Element = (0..l.dim).map(|_| rat(rng.gen_range(-5..=5))).collect();
            assert!(crate::linalg::vec_is_zero(&l.bracket(&a, &a)));
            assert_eq!(l.ad_matrix(&a).mul_vec(&b), l.bracket(&a, &b));
            let neg = crate::linalg::vec_scale(&rat(-1), &l.bracket(&b, &a));
            assert_eq!(l.bracket(&a, &b), neg);
        }
    }

    #[test]
    fn killing_values_on_sl2() {
        let l = build(TypeLabel::A, 1);
        let e = l.basis_element(l.x_index(0));
        let h = l.basis_element(l.h_index(0));
        assert_eq!(l.killing_pair(&h, &h), rat(8));
        assert_eq!(l.killing_pair(&e, &e), rat(0));
    }

    #[test]
    fn killing_symmetric_invariant_nondegenerate() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for (t, r) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2)] {
            let l = build(t, r);
            assert_eq!(l.killing_gram().rank(), l.dim, "{t}{r}: killing degenerate");
            for root in 0..l.num_positive() {
                let x = l.basis_element(l.x_index(root));
                assert_eq!(l.killing_pair(&x, &x), rat(0));
            }
            for _ in 0..8 {
                let a: Element = (0..l.dim).map(|_| rat(rng.gen_range(-3..=3))).collect();
                let b: Element = (0..l.dim).map(|_| rat(rng.gen_range(-3..=3))).collect();
                let c: Element = (0..l.dim).map(|_| rat(rng.gen_range(-3..=3))).collect();
                assert_eq!(l.killing_pair(&a, &b), l.killing_pair(&b, &a));
                assert_eq!(
                    l.killing_pair(&l.bracket(&a, &b), &c),
                    l.killing_pair(&a, &l.bracket(&b, &c))
                );
            }
        }
    }

    #[test]
    fn kirillov_matrix_matches_direct_evaluation() {
        let l = build(TypeLabel::A, 2);
        let mut rng = ChaCha20Rng::seed_from_u64(6);
        let xi: Element = (0..l.dim).map(|_| rat(rng.gen_range(-4..=4))).collect();
        let m = l.kirillov_matrix(&xi);
        for j in 0..l.dim {
            for k in 0..l.dim {
                let br = l.bracket(&l.basis_element(j), &l.basis_element(k));
                assert_eq!(*m.get(j, k), l.killing_pair(&xi, &br));
            }
        }
    }

    #[test]
    fn matrix_construction_recovers_sl2() {
        // e, h, f as 2x2 matrices
        let e = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let h = RatMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let f = RatMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        let l = LieAlgebra::from_matrices(&[e, h, f], 1).unwrap();
        assert_eq!(l.dim, 3);
        let he = l.bracket(&l.basis_element(1), &l.basis_element(0));
        assert_eq!(he, crate::linalg::vec_scale(&rat(2), &l.basis_element(0)));
        let ef = l.bracket(&l.basis_element(0), &l.basis_element(2));
        assert_eq!(ef, l.basis_element(1));
        // not closed: span of e alone plus something outside a subalgebra
        let bad = LieAlgebra::from_matrices(
            &[RatMatrix::from_i64(&[&[0, 1], &[0, 0]]), RatMatrix::from_i64(&[&[0, 0], &[1, 0]])],
            1,
        );
        assert!(bad.is_err());
    }
}
