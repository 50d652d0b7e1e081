//! Exact dense linear algebra over the rationals.
//!
//! Elimination is fraction-free (Bareiss) on integer-cleared rows, so the
//! intermediate entries are minors of the input and stay of moderate size
//! even on the 248-column systems coming from E8. Subspaces are stored in
//! reduced row-echelon form, so equality of subspaces is structural
//! equality of the stored bases.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = Ratio<BigInt>;

pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

// -- plain vector helpers -------------------------------------------------

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Dense matrix of exact rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    a: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, a: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        RatMatrix { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| vec_dot(self.row(i), v)).collect()
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut z = clear_denominators(self);
        bareiss_echelon(&mut z).len()
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut z = clear_denominators(self);
        let pivots = bareiss_echelon(&mut z);
        // back-substitution over Q on the integer echelon form
        let mut rows: Vec<Vec<Rat>> = z
            .iter()
            .take(pivots.len())
            .map(|r| r.iter().map(|x| Ratio::from_integer(x.clone())).collect())
            .collect();
        for k in (0..pivots.len()).rev() {
            let c = pivots[k];
            let inv = rows[k][c].clone();
            for x in rows[k].iter_mut() {
                if !x.is_zero() {
                    *x /= &inv;
                }
            }
            for i in 0..k {
                if !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let (head, tail) = rows.split_at_mut(k);
                    let rk = &tail[0];
                    for (x, y) in head[i].iter_mut().zip(rk.iter()) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
        }
        let mut out = RatMatrix::zero(rows.len(), self.cols);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, v) in r.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        (out, pivots)
    }

    /// Canonical basis of the right null space.
    pub fn kernel(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut vecs = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_zero(self.cols);
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            vecs.push(v);
        }
        SubspaceBasis::from_vectors(self.cols, vecs)
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut aug = RatMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec_zero(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Scale each row to integers (lcm of denominators); preserves the row space.
fn clear_denominators(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let mut l = BigInt::one();
            for x in m.row(i) {
                let d = x.denom();
                l = num_integer::lcm(l, d.clone());
            }
            m.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free forward elimination in place; returns the pivot columns.
/// Entries produced at step k are k-minors of the input, so growth stays
/// polynomial in the bit size of the data.
fn bareiss_echelon(a: &mut Vec<Vec<BigInt>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest nonzero entry as pivot keeps the minors small
        let mut pick: Option<usize> = None;
        for i in r..rows {
            if !a[i][c].is_zero()
                && pick.is_none_or(|p| a[i][c].abs() < a[p][c].abs())
            {
                pick = Some(i);
            }
        }
        let Some(p) = pick else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() && a[r][c].is_one() && prev.is_one() {
                continue;
            }
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Subspace of Q^n held as a reduced row-echelon basis. Two equal subspaces
/// have identical stored bases, so `==` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vecs: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis { ambient, vecs: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec_zero(ambient);
                    v[i] = Rat::one();
                    v
                })
                .collect(),
        )
    }

    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<Rat>>) -> Self {
        assert!(vecs.iter().all(|v| v.len() == ambient), "ambient dimension mismatch");
        if vecs.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = RatMatrix::from_rows(vecs).rref();
        let vecs = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        SubspaceBasis { ambient, vecs, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vecs
    }

    pub fn vector(&self, i: usize) -> &[Rat] {
        &self.vecs[i]
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.vecs.is_empty()
    }

    /// Residual of `v` after reduction against the basis; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.vecs.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vecs.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn linear_combination(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec_zero(self.ambient);
        for (c, row) in coords.iter().zip(&self.vecs) {
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x += c * y;
                    }
                }
            }
        }
        v
    }

    /// Orthogonal complement for the standard dot product. The form is
    /// anisotropic over Q, so `perp(perp(S)) = S` and dimensions add up.
    pub fn perp(&self) -> SubspaceBasis {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        RatMatrix::from_rows(self.vecs.clone()).kernel()
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        if self.is_zero() {
            RatMatrix::zero(0, self.ambient)
        } else {
            RatMatrix::from_rows(self.vecs.clone())
        }
    }
}

/// Span of the union of the given subspaces.
pub fn span_sum(spaces: &[&SubspaceBasis]) -> Result<SubspaceBasis, Error> {
    let ambient = spaces.first().map_or(0, |s| s.ambient);
    if spaces.iter().any(|s| s.ambient != ambient) {
        return Err(Error::AmbientMismatch);
    }
    let vecs: Vec<Vec<Rat>> = spaces.iter().flat_map(|s| s.vecs.iter().cloned()).collect();
    Ok(SubspaceBasis::from_vectors(ambient, vecs))
}

/// Intersection via orthogonal complements of the stacked system.
pub fn intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch);
    }
    let s = span_sum(&[&a.perp(), &b.perp()])?;
    Ok(s.perp())
}


/// Incremental reduced row-echelon accumulator. Rows are reduced against the
/// current basis as they arrive, so rank saturation is cheap to detect.
#[derive(Debug, Clone)]
pub struct RrefAccumulator {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RrefAccumulator {
    pub fn new(ambient: usize) -> Self {
        RrefAccumulator { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce and insert; returns true if the rank grew.
    pub fn add_row(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].clone();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x /= &inv;
            }
        }
        // eliminate the new pivot from existing rows, keep pivot order sorted
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let pos = self.pivots.binary_search(&p).unwrap_err();
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    pub fn into_subspace(self) -> SubspaceBasis {
        SubspaceBasis::from_vectors(self.ambient, self.rows)
    }
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = RatMatrix::zero(a.rows(), b.cols());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            for j in 0..b.cols() {
                let y = b.get(k, j);
                if !y.is_zero() {
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + x * y);
                }
            }
        }
    }
    out
}
