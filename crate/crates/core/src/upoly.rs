//! Small univariate polynomial utilities over Q: minimal polynomials of
//! exact matrices, rational root extraction, squarefreeness. Used for
//! semisimplicity tests and eigenvalue searches.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{mat_mul, Rat, RatMatrix, RrefAccumulator};

/// Coefficients low-to-high; always kept with nonzero leading coefficient.
pub type Poly = Vec<Rat>;

pub fn poly_trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn poly_deg(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

pub fn poly_eval(p: &Poly, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn poly_derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![];
    }
    poly_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn poly_rem(mut a: Poly, b: &Poly) -> Poly {
    let db = poly_deg(b);
    let lead = b.last().expect("nonzero divisor").clone();
    while a.len() > db && !a.is_empty() {
        let da = a.len() - 1;
        let f = a.last().unwrap() / &lead;
        for i in 0..=db {
            let idx = da - db + i;
            let t = &f * &b[i];
            a[idx] -= t;
        }
        a = poly_trim(a);
        if a.len() <= db {
            break;
        }
    }
    a
}

/// Monic gcd over Q.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = poly_trim(a.clone());
    let mut y = poly_trim(b.clone());
    while !y.is_empty() {
        let r = poly_rem(x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

pub fn is_squarefree(p: &Poly) -> bool {
    if poly_deg(p) <= 1 {
        return true;
    }
    poly_deg(&poly_gcd(p, &poly_derivative(p))) == 0
}

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependence among the vectorized powers I, A, A^2, ...
pub fn min_poly(a: &RatMatrix) -> Poly {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut acc = RrefAccumulator::new(n * n);
    let mut powers: Vec<RatMatrix> = vec![RatMatrix::identity(n)];
    let flatten = |m: &RatMatrix| -> Vec<Rat> {
        (0..n).flat_map(|i| m.row(i).to_vec()).collect()
    };
    acc.add_row(&flatten(&powers[0]));
    loop {
        let next = mat_mul(powers.last().unwrap(), a);
        let v = flatten(&next);
        powers.push(next);
        if !acc.add_row(&v) {
            // A^d is a combination of lower powers: solve for coefficients
            let d = powers.len() - 1;
            let mut sys = RatMatrix::zero(n * n, d);
            for (j, p) in powers.iter().take(d).enumerate() {
                for (i, val) in flatten(p).into_iter().enumerate() {
                    sys.set(i, j, val);
                }
            }
            let rhs = flatten(&powers[d]);
            let sol = sys.solve(&rhs).expect("dependence just detected");
            let mut poly: Poly = sol.into_iter().map(|c| -c).collect();
            poly.push(Rat::one());
            return poly_trim(poly);
        }
    }
}

/// All rational roots of p, by the rational root theorem on the
/// integer-cleared coefficients.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let p = poly_trim(p.clone());
    if p.is_empty() {
        return vec![];
    }
    // clear denominators
    let mut l = BigInt::one();
    for c in &p {
        l = num_integer::lcm(l, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut roots = Vec::new();
    // strip zero roots
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
    }
    let a0 = ints[low].abs();
    let an = ints.last().unwrap().abs();
    let mut candidates = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            candidates.push(Rat::new(num.clone(), den.clone()));
            candidates.push(Rat::new(-num.clone(), den));
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if poly_eval(&p, &c).is_zero() {
            roots.push(c);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn min_poly_of_diagonal() {
        let m = RatMatrix::from_i64(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, -1]]);
        let p = min_poly(&m);
        // (x-2)(x+1) = x^2 - x - 2
        assert_eq!(p, vec![rat(-2), rat(-1), rat(1)]);
        assert!(is_squarefree(&p));
        assert_eq!(rational_roots(&p), vec![rat(-1), rat(2)]);
    }

    #[test]
    fn min_poly_of_nilpotent_is_power() {
        let m = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let p = min_poly(&m);
        assert_eq!(p, vec![rat(0), rat(0), rat(1)]);
        assert!(!is_squarefree(&p));
    }

    #[test]
    fn gcd_and_roots() {
        // p = (x-1)^2 (x+3)
        let p = vec![rat(3), rat(-5), rat(1), rat(1)];
        assert!(!is_squarefree(&p));
        assert_eq!(rational_roots(&p), vec![rat(-3), rat(1)]);
    }
}
