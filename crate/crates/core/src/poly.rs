//! Sparse multivariate polynomials over Q, just enough for exact
//! determinants of small matrices whose entries are linear forms.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::Rat;

/// Terms keyed by exponent vectors; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    /// Linear form with the given coefficients on the variables.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let nvars = coeffs.len();
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0u32; nvars];
                exp[i] = 1;
                terms.insert(exp, c.clone());
            }
        }
        MPoly { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        debug_assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn sub_assign(&mut self, other: &MPoly) {
        debug_assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.terms.entry(exp).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    out.terms.remove(&exp);
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &p) in point.iter().zip(e) {
                for _ in 0..p {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

/// Determinant by cofactor expansion along the first row; `bound` guards
/// against factorial blow-up on large orders.
pub fn poly_det(m: &[Vec<MPoly>], bound: usize) -> Result<MPoly, Error> {
    let n = m.len();
    if n > bound {
        return Err(Error::MatrixOrder(n));
    }
    if n == 0 {
        return Err(Error::MatrixOrder(0));
    }
    let nvars = m[0][0].nvars;
    debug_assert!(m.iter().all(|r| r.len() == n));
    Ok(det_rec(m, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>(), nvars))
}

fn det_rec(m: &[Vec<MPoly>], rows: &[usize], cols: &[usize], nvars: usize) -> MPoly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = MPoly::zero(nvars);
    let r = rows[0];
    let rest: Vec<usize> = rows[1..].to_vec();
    for (pos, &c) in cols.iter().enumerate() {
        if m[r][c].is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, &x)| x).collect();
        let minor = det_rec(m, &rest, &sub_cols, nvars);
        let term = m[r][c].mul(&minor);
        if pos % 2 == 0 {
            acc.add_assign(&term);
        } else {
            acc.sub_assign(&term);
        }
    }
    acc
}

/// Largest k such that some k x k submatrix has a not-identically-zero
/// determinant; this realizes the freedom of reordering the two bases.
pub fn minor_rank(m: &[Vec<MPoly>], bound: usize) -> Result<usize, Error> {
    let n = m.len();
    if n > bound {
        return Err(Error::MatrixOrder(n));
    }
    let nvars = if n == 0 { 0 } else { m[0][0].nvars };
    for k in (1..=n).rev() {
        for rows in combinations(n, k) {
            for cols in combinations(n, k) {
                if !det_rec(m, &rows, &cols, nvars).is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn lin(c: &[i64]) -> MPoly {
        MPoly::linear(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn one_by_one() {
        let z = MPoly::zero(2);
        assert!(poly_det(&[vec![z]], 6).unwrap().is_zero());
        let p = lin(&[1, -1]);
        assert!(!poly_det(&[vec![p]], 6).unwrap().is_zero());
    }

    #[test]
    fn two_by_two_singular_and_not() {
        // [[x, y], [x, y]] is singular, [[x, y], [y, x]] is not
        let x = lin(&[1, 0]);
        let y = lin(&[0, 1]);
        let singular = vec![vec![x.clone(), y.clone()], vec![x.clone(), y.clone()]];
        assert!(poly_det(&singular, 6).unwrap().is_zero());
        assert_eq!(minor_rank(&singular, 6).unwrap(), 1);
        let regular = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        let d = poly_det(&regular, 6).unwrap();
        assert!(!d.is_zero());
        // x^2 - y^2 at (2, 1) is 3
        assert_eq!(d.eval(&[rat(2), rat(1)]), rat(3));
        assert_eq!(minor_rank(&regular, 6).unwrap(), 2);
    }

    #[test]
    fn order_bound_is_enforced() {
        let x = lin(&[1]);
        let row = vec![x.clone(); 7];
        let m = vec![row; 7];
        assert!(matches!(poly_det(&m, 6), Err(Error::MatrixOrder(7))));
    }

    #[test]
    fn rank_of_rank_deficient_matrix() {
        // rows 1 and 3 proportional: rank 2 of order 3
        let x = lin(&[1, 0]);
        let y = lin(&[0, 1]);
        let two_x = {
            let mut p = x.clone();
            p.add_assign(&x);
            p
        };
        let two_y = {
            let mut p = y.clone();
            p.add_assign(&y);
            p
        };
        let m = vec![
            vec![x.clone(), y.clone(), x.clone()],
            vec![y.clone(), x.clone(), y.clone()],
            vec![two_x, two_y, x.clone()],
        ];
        let d = poly_det(&m, 6).unwrap();
        let _ = d;
        assert_eq!(minor_rank(&m, 6).unwrap(), 3);
        let singular = vec![
            vec![x.clone(), y.clone(), MPoly::zero(2)],
            vec![x.clone(), y.clone(), MPoly::zero(2)],
            vec![y.clone(), x.clone(), MPoly::zero(2)],
        ];
        assert!(poly_det(&singular, 6).unwrap().is_zero());
        assert_eq!(minor_rank(&singular, 6).unwrap(), 2);
    }
}
