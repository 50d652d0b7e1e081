//! Kirillov-form ranks, certified index computation, the shifted-centralizer
//! subspaces V_{x,y}, witness search for the rank-sum criterion, and exact
//! invariant gradients in type A.
//!
//! A certificate here is a witness: a functional whose stabilizer dimension
//! equals the rank proves the index equals the rank (the reverse inequality
//! is Vinberg's). Failure to find a witness is reported as inconclusive,
//! never as a refutation.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::centralizer::{centralizer, is_regular, Subalgebra};
use crate::chevalley::{Element, LieAlgebra};
use crate::error::Error;
use crate::linalg::{
    mat_mul, rat, vec_is_zero, Rat, RatMatrix, RrefAccumulator, SubspaceBasis,
};
use crate::orbits::{ClassicalKind, MatrixRealization};

/// Knobs for the randomized searches; all randomness flows from `seed`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub samples: usize,
    pub coord_bound: i64,
    pub t_extra: usize,
    pub retries: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 1, samples: 32, coord_bound: 20, t_extra: 3, retries: 50 }
    }
}

impl SearchConfig {
    /// Task-local rng: the global seed xor a stable hash of the task label.
    pub fn rng_for(&self, label: &str) -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(self.seed ^ fnv1a(label))
    }
}

/// Stable 64-bit FNV-1a, so seed splitting does not depend on process state.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn random_element(l: &LieAlgebra, rng: &mut ChaCha20Rng, bound: i64) -> Element {
    (0..l.dim).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

/// Gram matrix of the Kirillov form of kappa(xi, .) restricted to s.
pub fn kirillov_gram(l: &LieAlgebra, s: &Subalgebra, xi: &Element) -> RatMatrix {
    let m = l.kirillov_matrix(xi);
    let b = s.basis.basis_matrix();
    mat_mul(&mat_mul(&b, &m), &b.transpose())
}

pub fn kirillov_rank(l: &LieAlgebra, s: &Subalgebra, xi: &Element) -> usize {
    kirillov_gram(l, s, xi).rank()
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct IndexCertificate {
    pub subalgebra_dim: usize,
    pub stabilizer_dim: usize,
    pub certified: bool,
    pub samples_used: usize,
    /// Coordinates of the best witness functional.
    #[serde(skip)]
    pub witness: Element,
}

/// Sample functionals with small integer coordinates and track the minimal
/// stabilizer dimension. `certified` means the minimum hit the rank of g,
/// which is exact by Vinberg's lower bound; `false` is inconclusive.
pub fn certified_index(
    l: &LieAlgebra,
    s: &Subalgebra,
    cfg: &SearchConfig,
    label: &str,
) -> IndexCertificate {
    let mut rng = cfg.rng_for(label);
    let mut best: Option<(usize, Element)> = None;
    let mut used = 0;
    for _ in 0..cfg.samples.max(1) {
        used += 1;
        let xi = random_element(l, &mut rng, cfg.coord_bound);
        let rank = kirillov_rank(l, s, &xi);
        let stab = s.dim() - rank;
        if best.as_ref().is_none_or(|(b, _)| stab < *b) {
            best = Some((stab, xi));
        }
        if best.as_ref().unwrap().0 == l.rank {
            break;
        }
    }
    let (stabilizer_dim, witness) = best.expect("at least one sample");
    IndexCertificate {
        subalgebra_dim: s.dim(),
        stabilizer_dim,
        certified: stabilizer_dim == l.rank,
        samples_used: used,
        witness,
    }
}

#[derive(Debug, Clone)]
pub struct BolsinovSubspace {
    pub basis: SubspaceBasis,
    pub t_samples: Vec<i64>,
}

/// V_{x,y} as the span of the centralizers g^{x+ty} over d_max + extra
/// distinct integer t with x + t y regular; irregular values are skipped.
pub fn vxy(l: &LieAlgebra, x: &Element, y: &Element, t_extra: usize) -> Result<BolsinovSubspace, Error> {
    if !is_regular(l, x) {
        return Err(Error::DegenerateDirection("base point x is not regular".into()));
    }
    let d_max = *l
        .root_system
        .as_ref()
        .map(|rs| rs.degrees.last().unwrap())
        .unwrap_or(&l.dim);
    let needed = d_max + t_extra;
    let mut acc = RrefAccumulator::new(l.dim);
    let mut samples = Vec::new();
    let mut dim_at_dmax = None;
    let mut t = 0i64;
    let grid_bound = 10 * (needed as i64) + 100;
    while samples.len() < needed {
        t += 1;
        if t > grid_bound {
            return Err(Error::DegenerateDirection(format!(
                "only {} regular shift values of {} found in the grid",
                samples.len(),
                needed
            )));
        }
        let shifted: Element =
            x.iter().zip(y).map(|(a, b)| a + &rat(t) * b).collect();
        let gz = centralizer(l, &[&shifted]);
        if gz.dim() != l.rank {
            continue;
        }
        samples.push(t);
        for v in gz.basis.vectors() {
            acc.add_row(v);
        }
        if samples.len() == d_max {
            dim_at_dmax = Some(acc.rank());
        }
    }
    // d_max distinct regular values already span V; further values must not
    // change the dimension
    assert_eq!(
        dim_at_dmax.unwrap_or(acc.rank()),
        acc.rank(),
        "V_{{x,y}} dimension not stable under extra shift samples"
    );
    Ok(BolsinovSubspace { basis: acc.into_subspace(), t_samples: samples })
}

/// Total isotropy of g^y + V_{x,y} for the Kirillov form of y.
pub fn isotropy_check(l: &LieAlgebra, x: &Element, y: &Element, t_extra: usize) -> Result<bool, Error> {
    let v = vxy(l, x, y, t_extra)?;
    let gy = centralizer(l, &[y]);
    let total = crate::linalg::span_sum(&[&gy.basis, &v.basis])?;
    let m = l.kirillov_matrix(y);
    let b = total.basis_matrix();
    let gram = mat_mul(&mat_mul(&b, &m), &b.transpose());
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            if !gram.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, serde::Serialize)]
pub enum BolsinovOutcome {
    /// Witness x found: dim V_{x,a} = (dim G.a)/2 + rank, which certifies
    /// ind g^a = rank; the sum-dimension cross-check is included.
    Certified {
        dim_v: usize,
        dim_sum: usize,
        trials_used: usize,
    },
    /// No witness within the trial budget; explicitly not a counterexample.
    Inconclusive { trials: usize },
}

pub fn bolsinov_condition5(
    l: &LieAlgebra,
    a: &Element,
    trials: usize,
    cfg: &SearchConfig,
    label: &str,
) -> Result<BolsinovOutcome, Error> {
    let mut rng = cfg.rng_for(label);
    let ga = centralizer(l, &[a]);
    let orbit_dim = l.dim - ga.dim();
    let target_v = orbit_dim / 2 + l.rank;
    let target_sum = (l.dim + ga.dim()) / 2;
    for trial in 0..trials {
        // draw until regular, bounded by the retry budget
        let mut x = None;
        for _ in 0..cfg.retries {
            let cand = random_element(l, &mut rng, cfg.coord_bound);
            if is_regular(l, &cand) {
                x = Some(cand);
                break;
            }
        }
        let Some(x) = x else { continue };
        let v = match vxy(l, &x, a, cfg.t_extra) {
            Ok(v) => v,
            Err(Error::DegenerateDirection(_)) => continue,
            Err(e) => return Err(e),
        };
        if v.basis.dim() != target_v {
            continue;
        }
        let sum = crate::linalg::span_sum(&[&ga.basis, &v.basis])?;
        if sum.dim() != target_sum {
            continue;
        }
        return Ok(BolsinovOutcome::Certified {
            dim_v: v.basis.dim(),
            dim_sum: sum.dim(),
            trials_used: trial + 1,
        });
    }
    Ok(BolsinovOutcome::Inconclusive { trials })
}

// -- type A invariants ------------------------------------------------------

/// Characteristic polynomial coefficients of an n x n matrix: returns
/// c_1..c_n with det(tI - M) = t^n - c_1 t^{n-1} + ... using the
/// Faddeev-LeVerrier recurrence (exact over Q).
fn char_poly_coeffs(m: &RatMatrix) -> Vec<Rat> {
    let n = m.rows();
    let mut coeffs = Vec::with_capacity(n);
    let mut aux = m.clone();
    for k in 1..=n {
        let mut tr = Rat::zero();
        for i in 0..n {
            tr += aux.get(i, i);
        }
        let c = tr / rat(k as i64);
        coeffs.push(c.clone());
        if k == n {
            break;
        }
        // aux <- M (aux - c I)
        let mut shifted = aux;
        for i in 0..n {
            let v = shifted.get(i, i).clone();
            shifted.set(i, i, v - &c);
        }
        aux = mat_mul(m, &shifted);
    }
    coeffs
}

/// The invariant f of degree d evaluated at the matrix: the coefficient
/// c_d of the characteristic polynomial.
fn invariant_value(m: &RatMatrix, degree: usize) -> Rat {
    char_poly_coeffs(m)[degree - 1].clone()
}

/// Exact gradients of the fundamental invariants of sl_n at z, via
/// univariate interpolation along each coordinate direction and the Killing
/// identification of g with its dual. Returns one element per invariant, in
/// degree order 2..n.
pub fn phi_at(real: &MatrixRealization, z: &Element) -> Result<Vec<Element>, Error> {
    if real.kind != ClassicalKind::Sl {
        return Err(Error::TypeAOnly);
    }
    let l = &real.algebra;
    let n = real.n;
    let z_mat = real.element_to_matrix(z);
    let mut grads = Vec::new();
    for degree in 2..=n {
        let mut differential = vec![Rat::zero(); l.dim];
        for (j, dir) in real.mats.iter().enumerate() {
            // g(t) = f(z + t b_j) has degree <= d; interpolate at 0..d and
            // read off the t^1 coefficient
            let nodes: Vec<i64> = (0..=degree as i64).collect();
            let values: Vec<Rat> = nodes
                .iter()
                .map(|&t| {
                    let mut m = z_mat.clone();
                    for r in 0..n {
                        for c in 0..n {
                            let v = dir.get(r, c);
                            if !v.is_zero() {
                                let cur = m.get(r, c).clone();
                                m.set(r, c, cur + rat(t) * v);
                            }
                        }
                    }
                    invariant_value(&m, degree)
                })
                .collect();
            differential[j] = interpolate_coefficient(&nodes, &values, 1);
        }
        // gradient: kappa(phi, .) = differential
        let phi = l
            .killing_gram()
            .solve(&differential)
            .expect("killing form is nondegenerate");
        grads.push(phi);
    }
    Ok(grads)
}

/// Coefficient of t^k of the polynomial through (nodes, values), solved from
/// the Vandermonde system.
fn interpolate_coefficient(nodes: &[i64], values: &[Rat], k: usize) -> Rat {
    interpolate_all(nodes, values).remove(k)
}

fn interpolate_all(nodes: &[i64], values: &[Rat]) -> Vec<Rat> {
    let deg = nodes.len();
    let mut vand = RatMatrix::zero(deg, deg);
    for (r, &t) in nodes.iter().enumerate() {
        let mut p = Rat::from_integer(1.into());
        for c in 0..deg {
            vand.set(r, c, p.clone());
            p *= rat(t);
        }
    }
    vand.solve(values).expect("distinct nodes")
}

/// Gradients of the whole shifted family F_x at the point z: the t-expansion
/// coefficients of phi_i(x + t z), obtained by vector interpolation.
fn shifted_gradients(
    real: &MatrixRealization,
    x: &Element,
    z: &Element,
) -> Result<Vec<Element>, Error> {
    let l = &real.algebra;
    let n = real.n;
    let mut out = Vec::new();
    for degree in 2..=n {
        let idx = degree - 2;
        // phi_i(x + t z) is a polynomial of degree d_i - 1 in t
        let nodes: Vec<i64> = (0..degree as i64).collect();
        let mut value_rows: Vec<Vec<Element>> = Vec::new();
        for &t in &nodes {
            let shifted: Element = x.iter().zip(z).map(|(a, b)| a + &rat(t) * b).collect();
            value_rows.push(phi_at(real, &shifted)?);
        }
        for m in 0..degree {
            let mut coeff = vec![Rat::zero(); l.dim];
            for (c, _) in coeff.clone().iter().enumerate() {
                let vals: Vec<Rat> =
                    value_rows.iter().map(|grads| grads[idx][c].clone()).collect();
                coeff[c] = interpolate_coefficient(&nodes, &vals, m);
            }
            out.push(coeff);
        }
    }
    Ok(out)
}

/// Exact Poisson-commutativity of the argument-shift family of sl_n at
/// random rational points: all pairwise brackets <z, [grad p, grad q]>
/// must vanish identically.
pub fn mf_commute_check(
    real: &MatrixRealization,
    x: &Element,
    points: usize,
    cfg: &SearchConfig,
    label: &str,
) -> Result<bool, Error> {
    if real.kind != ClassicalKind::Sl {
        return Err(Error::TypeAOnly);
    }
    let l = &real.algebra;
    let mut rng = cfg.rng_for(label);
    for _ in 0..points {
        let z = random_element(l, &mut rng, 5);
        let grads = shifted_gradients(real, x, &z)?;
        for (i, p) in grads.iter().enumerate() {
            for q in grads.iter().skip(i) {
                let br = l.bracket(p, q);
                if vec_is_zero(&br) {
                    continue;
                }
                if !l.killing_pair(&z, &br).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::center_of;
    use crate::orbits::{classical_realization, nilpotent_from_partition, Partition};
    use crate::roots::{RootSystem, TypeLabel};

    fn build(label: TypeLabel, rank: usize) -> LieAlgebra {
        LieAlgebra::from_root_system(RootSystem::new(label, rank).unwrap())
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn kirillov_rank_examples() {
        let l = build(TypeLabel::A, 1);
        let s = Subalgebra { basis: SubspaceBasis::full(3) };
        assert_eq!(kirillov_rank(&l, &s, &l.zero_element()), 0);
        // generic functional on sl2 itself: rank 2, stabilizer dim 1 = rank
        let xi = l.basis_element(l.h_index(0));
        assert_eq!(kirillov_rank(&l, &s, &xi), 2);
        // abelian subalgebra: the Cartan of sl3
        let l3 = build(TypeLabel::A, 2);
        let cartan = Subalgebra {
            basis: SubspaceBasis::from_vectors(
                l3.dim,
                vec![l3.basis_element(l3.h_index(0)), l3.basis_element(l3.h_index(1))],
            ),
        };
        let mut rng = cfg().rng_for("abelian");
        let xi = random_element(&l3, &mut rng, 9);
        assert_eq!(kirillov_rank(&l3, &cartan, &xi), 0);
    }

    #[test]
    fn kirillov_rank_is_even() {
        let l = build(TypeLabel::B, 2);
        let mut rng = cfg().rng_for("even-rank");
        for _ in 0..10 {
            let e = l.basis_element(l.x_index(rng.gen_range(0..l.num_positive())));
            let s = centralizer(&l, &[&e]);
            let xi = random_element(&l, &mut rng, 9);
            assert_eq!(kirillov_rank(&l, &s, &xi) % 2, 0);
        }
    }

    #[test]
    fn certified_index_on_regular_and_sl2() {
        // regular nilpotent: g^e abelian of rank dimension, certified at once
        for (t, r) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2)] {
            let l = build(t, r);
            let simples: Vec<Vec<i64>> = (0..r)
                .map(|i| {
                    let mut v = vec![0i64; r];
                    v[i] = 1;
                    v
                })
                .collect();
            let e = l.element_from_positive_roots(&simples).unwrap();
            let ge = centralizer(&l, &[&e]);
            assert_eq!(ge.dim(), r);
            let cert = certified_index(&l, &ge, &cfg(), "regular");
            assert!(cert.certified);
            assert_eq!(cert.stabilizer_dim, r);
        }
        let l = build(TypeLabel::A, 1);
        let e = l.basis_element(l.x_index(0));
        let ge = centralizer(&l, &[&e]);
        let cert = certified_index(&l, &ge, &cfg(), "sl2");
        assert!(cert.certified && cert.stabilizer_dim == 1);
    }

    #[test]
    fn vinberg_bound_and_parity_hold_for_samples() {
        let l = build(TypeLabel::B, 2);
        let mut rng = cfg().rng_for("vinberg");
        for a in 0..l.num_positive() {
            let e = l.basis_element(l.x_index(a));
            let s = centralizer(&l, &[&e]);
            for _ in 0..5 {
                let xi = random_element(&l, &mut rng, 15);
                let stab = s.dim() - kirillov_rank(&l, &s, &xi);
                assert!(stab >= l.rank);
                assert_eq!(stab % 2, s.dim() % 2);
            }
        }
    }

    #[test]
    fn vxy_degenerate_and_trivial_directions() {
        let l = build(TypeLabel::A, 1);
        let x = l.basis_element(l.h_index(0));
        // y = 0: V = g^x of dimension rank
        let v = vxy(&l, &x, &l.zero_element(), 3).unwrap();
        assert_eq!(v.basis.dim(), 1);
        assert_eq!(v.basis, centralizer(&l, &[&x]).basis);
        // y = x: all centralizers coincide
        let v = vxy(&l, &x, &x, 3).unwrap();
        assert_eq!(v.basis, centralizer(&l, &[&x]).basis);
        // x not regular
        assert!(vxy(&l, &l.zero_element(), &x, 3).is_err());
        // sl2: x regular semisimple, y regular nilpotent: V has dim b_g = 2
        let y = l.basis_element(l.x_index(0));
        let v = vxy(&l, &x, &y, 3).unwrap();
        assert_eq!(v.basis.dim(), 2);
        // g^x is contained in V_{x,y}
        assert!(v.basis.contains_subspace(&centralizer(&l, &[&x]).basis));
    }

    #[test]
    fn isotropy_examples() {
        let l = build(TypeLabel::A, 2);
        let x = {
            let mut v = l.zero_element();
            v[l.h_index(0)] = rat(1);
            v[l.h_index(1)] = rat(5);
            v
        };
        assert!(is_regular(&l, &x));
        assert!(isotropy_check(&l, &x, &l.zero_element(), 3).unwrap());
        // y a random nilpotent: single root vector
        let y = l.basis_element(l.x_index(3));
        assert!(isotropy_check(&l, &x, &y, 3).unwrap());
    }

    #[test]
    fn bolsinov_zero_direction_certifies_immediately() {
        let l = build(TypeLabel::A, 2);
        let out = bolsinov_condition5(&l, &l.zero_element(), 5, &cfg(), "zero").unwrap();
        match out {
            BolsinovOutcome::Certified { dim_v, dim_sum, .. } => {
                assert_eq!(dim_v, l.rank);
                assert_eq!(dim_sum, l.dim);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn bolsinov_on_sl2_regular_nilpotent() {
        let l = build(TypeLabel::A, 1);
        let a = l.basis_element(l.x_index(0));
        let out = bolsinov_condition5(&l, &a, 10, &cfg(), "sl2-nilpotent").unwrap();
        match out {
            BolsinovOutcome::Certified { dim_v, dim_sum, .. } => {
                assert_eq!(dim_v, 2); // half of the 2-dim orbit plus rank 1
                assert_eq!(dim_sum, 2);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn bolsinov_on_g2_subregular() {
        let l = build(TypeLabel::G, 2);
        // subregular nilpotent: dim g^a = 4 (orbit dimension 10)
        let mut a = None;
        'search: for i in 0..l.num_positive() {
            for j in i + 1..l.num_positive() {
                let mut v = l.zero_element();
                v[l.x_index(i)] = rat(1);
                v[l.x_index(j)] = rat(1);
                if centralizer(&l, &[&v]).dim() == 4 {
                    a = Some(v);
                    break 'search;
                }
            }
        }
        let a = a.expect("subregular representative");
        let out = bolsinov_condition5(&l, &a, 50, &cfg(), "g2-subreg").unwrap();
        match out {
            BolsinovOutcome::Certified { dim_v, dim_sum, trials_used } => {
                assert_eq!(dim_v, 5 + 2);
                assert_eq!(dim_sum, (14 + 4) / 2);
                assert!(trials_used <= 50);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn vxa_meets_centralizer_in_rank_dimension() {
        // dim(g^a
        //  intersect V_{x,a}) = rank for regular x, on Bolsinov witnesses
        let l = build(TypeLabel::A, 2);
        let mut rng = cfg().rng_for("vxa-intersect");
        for a_idx in 0..l.num_positive() {
            let a = l.basis_element(l.x_index(a_idx));
            let ga = centralizer(&l, &[&a]);
            for _ in 0..3 {
                let x = random_element(&l, &mut rng, 10);
                if !is_regular(&l, &x) {
                    continue;
                }
                let v = vxy(&l, &x, &a, 3).unwrap();
                let int = crate::linalg::intersect(&ga.basis, &v.basis).unwrap();
                assert_eq!(int.dim(), l.rank);
            }
        }
    }

    #[test]
    fn bracket_images_of_v_agree() {
        // [x, V_{x,y}] = [y, V_{x,y}] for regular x
        let l = build(TypeLabel::A, 2);
        let mut rng = cfg().rng_for("bracket-images");
        let mut done = 0;
        while done < 5 {
            let x = random_element(&l, &mut rng, 8);
            if !is_regular(&l, &x) {
                continue;
            }
            let y = random_element(&l, &mut rng, 8);
            let v = vxy(&l, &x, &y, 3).unwrap();
            let img = |w: &Element| {
                SubspaceBasis::from_vectors(
                    l.dim,
                    v.basis.vectors().iter().map(|u| l.bracket(w, u)).collect(),
                )
            };
            assert_eq!(img(&x), img(&y));
            done += 1;
        }
    }

    #[test]
    fn phi_examples() {
        let real = classical_realization(TypeLabel::A, 2).unwrap();
        let l = &real.algebra;
        // z = 0: all gradients vanish (homogeneity, degrees >= 2)
        for phi in phi_at(&real, &l.zero_element()).unwrap() {
            assert!(vec_is_zero(&phi));
        }
        // z regular semisimple: gradients span g^z
        let mut rng = cfg().rng_for("phi-regular");
        let z = loop {
            let cand = random_element(l, &mut rng, 5);
            if is_regular(l, &cand) {
                break cand;
            }
        };
        let grads = phi_at(&real, &z).unwrap();
        let gz = centralizer(l, &[&z]);
        let span = SubspaceBasis::from_vectors(l.dim, grads.clone());
        assert_eq!(span, gz.basis);
        // gradients centralize z
        for g in &grads {
            assert!(vec_is_zero(&l.bracket(&z, g)));
        }
        // z nilpotent: gradients lie in the center of g^z
        let e = nilpotent_from_partition(&real, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        let ge = centralizer(l, &[&e]);
        let z_center = center_of(l, &ge);
        for g in phi_at(&real, &e).unwrap() {
            assert!(z_center.contains(&g));
        }
        // type check
        let so5 = classical_realization(TypeLabel::B, 2).unwrap();
        assert!(matches!(phi_at(&so5, &so5.algebra.zero_element()), Err(Error::TypeAOnly)));
    }

    #[test]
    fn mf_family_commutes_on_sl2_and_sl3() {
        let real = classical_realization(TypeLabel::A, 1).unwrap();
        let mut rng = cfg().rng_for("mf-sl2");
        let x = random_element(&real.algebra, &mut rng, 5);
        assert!(mf_commute_check(&real, &x, 5, &cfg(), "mf-sl2").unwrap());

        let real3 = classical_realization(TypeLabel::A, 2).unwrap();
        let x = random_element(&real3.algebra, &mut rng, 5);
        assert!(mf_commute_check(&real3, &x, 3, &cfg(), "mf-sl3").unwrap());
    }
}
