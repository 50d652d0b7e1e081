//! Weight-graded pipeline for nilpotent orbit representatives given as sums
//! of positive root vectors in a Chevalley basis.
//!
//! For such representatives the sl2-triple element h can be found inside
//! the Cartan subalgebra, every ambient basis vector is an ad-h
//! eigenvector, and all the big kernels (g^e, g^f, the center, torus weight
//! spaces) split into small blocks indexed by weights. This is what keeps
//! the E7/E8 computations fast and exact.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::centralizer::{SL2Triple, Subalgebra};
use crate::chevalley::{Element, LieAlgebra};
use crate::error::Error;
use crate::linalg::{rat, vec_is_zero, Rat, RatMatrix, RrefAccumulator, SubspaceBasis};

/// Subspace whose canonical basis vectors are pure for the ad-h grading.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub space: SubspaceBasis,
    /// ad-h weight of each canonical basis vector.
    pub weights: Vec<i64>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subalgebra(&self) -> Subalgebra {
        Subalgebra { basis: self.space.clone() }
    }
}

/// Everything the per-orbit machinery needs about e: the triple, the
/// grading, graded bases of g^e and g^f, and the center of g^e.
#[derive(Debug, Clone)]
pub struct OrbitContext<'a> {
    pub l: &'a LieAlgebra,
    pub triple: SL2Triple,
    /// ad-h weight of every ambient basis vector.
    pub ambient_weights: Vec<i64>,
    pub ge: GradedBasis,
    pub gf: GradedBasis,
    pub center: SubspaceBasis,
}

impl<'a> OrbitContext<'a> {
    /// Build the context for e = sum of root vectors over the given
    /// positive roots (all coefficients 1).
    pub fn for_root_sum(l: &'a LieAlgebra, roots: &[Vec<i64>]) -> Result<Self, Error> {
        let rs = l.root_system.as_ref().ok_or(Error::NotNilpotent)?;
        let e = l.element_from_positive_roots(roots)?;
        // particular Cartan solution of beta_i(h) = 2
        let rows: Vec<Vec<Rat>> = roots
            .iter()
            .map(|beta| (0..l.rank).map(|i| rat(rs.pairing(beta, i))).collect())
            .collect();
        let sys = RatMatrix::from_rows(rows);
        let rhs = vec![rat(2); roots.len()];
        let h0_cartan = sys
            .solve(&rhs)
            .ok_or_else(|| Error::NotNilpotent)?;
        let freedom = sys.kernel();
        // provisional grading weights from h0 (rational is fine here)
        let h0 = cartan_element(l, &h0_cartan);
        let w0: Vec<Rat> = (0..l.dim).map(|i| l.cartan_weight(&h0, i)).collect();
        let ge0 = graded_kernel_rat(l, &e, &w0, rat(2));
        // correct h0 inside the Cartan solution space to be orthogonal to
        // g^e, which pins the Jacobson-Morozov h
        let h = if freedom.dim() == 0 {
            orthogonality_check(l, &h0, &ge0)?;
            h0
        } else {
            let k = freedom.dim();
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            let free_elems: Vec<Element> =
                freedom.vectors().iter().map(|c| cartan_element(l, c)).collect();
            for u in ge0.iter().flat_map(|(_, s)| s.vectors()) {
                let cov = l.killing_covector(u);
                rows.push(
                    free_elems
                        .iter()
                        .map(|fe| crate::linalg::vec_dot(&cov, fe))
                        .collect::<Vec<Rat>>(),
                );
                rhs.push(-crate::linalg::vec_dot(&cov, &h0));
            }
            let sys = RatMatrix::from_rows(rows);
            let coeffs = sys.solve(&rhs).ok_or(Error::NotNilpotent)?;
            let mut h = h0.clone();
            for (c, fe) in coeffs.iter().zip(&free_elems) {
                if !c.is_zero() {
                    for (x, y) in h.iter_mut().zip(fe) {
                        *x += c * y;
                    }
                }
            }
            debug_assert_eq!(coeffs.len(), k);
            h
        };
        Self::for_root_sum_with_h(l, roots, &h)
    }

    /// Same, but with the Cartan element h prescribed (it must satisfy
    /// [h, e] = 2e and be a valid sl2 h for e).
    pub fn for_root_sum_with_h(
        l: &'a LieAlgebra,
        roots: &[Vec<i64>],
        h: &Element,
    ) -> Result<Self, Error> {
        let e = l.element_from_positive_roots(roots)?;
        if !l.in_cartan(h) {
            return Err(Error::BadSpectrum);
        }
        let mut ambient_weights = Vec::with_capacity(l.dim);
        for i in 0..l.dim {
            let w = l.cartan_weight(h, i);
            if !w.is_integer() {
                return Err(Error::BadSpectrum);
            }
            ambient_weights.push(int_of(&w)?);
        }
        // g^e blockwise: ad e shifts weight by exactly 2
        let ge = graded_kernel(l, &e, &ambient_weights, 2);
        // f: solve [e, f] = h inside the weight -2 block
        let f = solve_f_in_block(l, &e, h, &ambient_weights)?;
        let triple = SL2Triple { e: e.clone(), h: h.clone(), f: f.clone() };
        if !triple.verify(l) {
            return Err(Error::NotNilpotent);
        }
        let gf = graded_kernel(l, &f, &ambient_weights, -2);
        let center = graded_center(l, &ge);
        Ok(OrbitContext {
            l,
            triple,
            ambient_weights,
            ge: flatten_graded(l.dim, ge),
            gf: flatten_graded(l.dim, gf),
            center,
        })
    }

    pub fn dim_centralizer(&self) -> usize {
        self.ge.dim()
    }

    pub fn dim_center(&self) -> usize {
        self.center.dim()
    }

    /// Cartan part of g^e: also inside g^f, hence toral.
    pub fn cartan_torus(&self) -> SubspaceBasis {
        let l = self.l;
        let rs = l.root_system.as_ref().expect("chevalley");
        // e is supported on root vectors; h' in the Cartan centralizes e
        // iff beta(h') = 0 for every support root
        let roots: Vec<&Vec<i64>> = self
            .triple
            .e
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| &rs.positive[i])
            .collect();
        let rows: Vec<Vec<Rat>> = roots
            .iter()
            .map(|beta| (0..l.rank).map(|i| rat(rs.pairing(beta, i))).collect())
            .collect();
        let ker = RatMatrix::from_rows(rows).kernel();
        let vecs: Vec<Element> = ker.vectors().iter().map(|c| cartan_element(l, c)).collect();
        SubspaceBasis::from_vectors(l.dim, vecs)
    }

    /// Batch form of the center-membership criterion of the blowup theory:
    /// {v in g^e : [v, g^f] inside [e, g]} must equal the center. Exploits
    /// weight purity: kappa([v, f_i], e_j) can only be nonzero when the
    /// three weights cancel.
    pub fn center_criterion_agrees(&self) -> bool {
        let l = self.l;
        for (vi, v) in self.ge.space.vectors().iter().enumerate() {
            let expected = self.center.contains(v);
            let wv = self.ge.weights[vi];
            let mut pass = true;
            'outer: for (fi, fvec) in self.gf.space.vectors().iter().enumerate() {
                let wf = self.gf.weights[fi];
                // kappa([v, f_i], e_j) = 0 unless wv + wf + we = 0
                let we_target = -(wv + wf);
                if !self.ge.weights.iter().any(|&w| w == we_target) {
                    continue;
                }
                let br = l.bracket(v, fvec);
                if vec_is_zero(&br) {
                    continue;
                }
                let cov = l.killing_covector(&br);
                for (ei, evec) in self.ge.space.vectors().iter().enumerate() {
                    if self.ge.weights[ei] != we_target {
                        continue;
                    }
                    if !crate::linalg::vec_dot(&cov, evec).is_zero() {
                        pass = false;
                        break 'outer;
                    }
                }
            }
            if pass != expected {
                return false;
            }
        }
        true
    }
}

fn int_of(r: &Rat) -> Result<i64, Error> {
    i64::try_from(&r.to_integer()).map_err(|_| Error::BadSpectrum)
}

pub fn cartan_element(l: &LieAlgebra, coords: &[Rat]) -> Element {
    let mut v = l.zero_element();
    for (i, c) in coords.iter().enumerate() {
        v[l.h_index(i)] = c.clone();
    }
    v
}

/// Kernel of ad(a) computed per weight block, for `a` of pure weight
/// `shift`; returns weight -> basis of the kernel block.
fn graded_kernel(
    l: &LieAlgebra,
    a: &Element,
    weights: &[i64],
    shift: i64,
) -> BTreeMap<i64, SubspaceBasis> {
    let w_rat: Vec<Rat> = weights.iter().map(|&w| rat(w)).collect();
    graded_kernel_rat(l, a, &w_rat, rat(shift))
        .into_iter()
        .map(|(w, s)| (int_of(&w).expect("integer weights"), s))
        .collect()
}

fn graded_kernel_rat(
    l: &LieAlgebra,
    a: &Element,
    weights: &[Rat],
    shift: Rat,
) -> BTreeMap<Rat, SubspaceBasis> {
    let mut buckets: BTreeMap<Rat, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        buckets.entry(w.clone()).or_default().push(i);
    }
    let mut out = BTreeMap::new();
    for (w, cols) in &buckets {
        let target = w + &shift;
        let target_rows = buckets.get(&target).cloned().unwrap_or_default();
        // matrix of ad a restricted: block (target rows) x (cols)
        let mut m = RatMatrix::zero(target_rows.len(), cols.len());
        for (cj, &col) in cols.iter().enumerate() {
            let br = l.bracket(a, &l.basis_element(col));
            for (ri, &row) in target_rows.iter().enumerate() {
                if !br[row].is_zero() {
                    m.set(ri, cj, br[row].clone());
                }
            }
            debug_assert!(
                br.iter()
                    .enumerate()
                    .all(|(k, v)| v.is_zero() || target_rows.contains(&k)),
                "bracket left its weight block"
            );
        }
        let ker = m.kernel();
        if ker.dim() == 0 {
            continue;
        }
        let vecs: Vec<Element> = ker
            .vectors()
            .iter()
            .map(|small| {
                let mut v = l.zero_element();
                for (cj, &col) in cols.iter().enumerate() {
                    v[col] = small[cj].clone();
                }
                v
            })
            .collect();
        out.insert(w.clone(), SubspaceBasis::from_vectors(l.dim, vecs));
    }
    out
}

/// Merge per-weight blocks into one canonical subspace with per-vector
/// weights. Supports are disjoint across blocks, so sorting by pivot keeps
/// the union in reduced echelon form.
fn flatten_graded(ambient: usize, parts: BTreeMap<i64, SubspaceBasis>) -> GradedBasis {
    let mut tagged: Vec<(usize, i64, Element)> = Vec::new();
    for (w, s) in &parts {
        for v in s.vectors() {
            let pivot = v.iter().position(|c| !c.is_zero()).expect("nonzero basis vector");
            tagged.push((pivot, *w, v.clone()));
        }
    }
    tagged.sort_by_key(|(p, _, _)| *p);
    let weights: Vec<i64> = tagged.iter().map(|(_, w, _)| *w).collect();
    let vecs: Vec<Element> = tagged.iter().map(|(_, _, v)| v.clone()).collect();
    let space = SubspaceBasis::from_vectors(ambient, vecs.clone());
    // the merged set is already reduced: from_vectors must not change it
    debug_assert_eq!(space.vectors(), &vecs[..]);
    GradedBasis { space, weights }
}

fn solve_f_in_block(
    l: &LieAlgebra,
    e: &Element,
    h: &Element,
    weights: &[i64],
) -> Result<Element, Error> {
    let cols: Vec<usize> = (0..l.dim).filter(|&i| weights[i] == -2).collect();
    let rows: Vec<usize> = (0..l.dim).filter(|&i| weights[i] == 0).collect();
    let mut m = RatMatrix::zero(rows.len(), cols.len());
    for (cj, &col) in cols.iter().enumerate() {
        let br = l.bracket(e, &l.basis_element(col));
        for (ri, &row) in rows.iter().enumerate() {
            if !br[row].is_zero() {
                m.set(ri, cj, br[row].clone());
            }
        }
    }
    let rhs: Vec<Rat> = rows.iter().map(|&r| h[r].clone()).collect();
    let sol = m.solve(&rhs).ok_or(Error::NotNilpotent)?;
    let mut f = l.zero_element();
    for (cj, &col) in cols.iter().enumerate() {
        f[col] = sol[cj].clone();
    }
    Ok(f)
}

/// Center of g^e from its graded blocks: a graded vector is central iff it
/// kills every block basis vector.
fn graded_center(l: &LieAlgebra, ge: &BTreeMap<i64, SubspaceBasis>) -> SubspaceBasis {
    let mut central: Vec<Element> = Vec::new();
    let all: Vec<&Element> = ge.values().flat_map(|s| s.vectors()).collect();
    for block in ge.values() {
        let k = block.dim();
        let mut acc = RrefAccumulator::new(k);
        'rows: for u in &all {
            let brs: Vec<Element> =
                block.vectors().iter().map(|v| l.bracket(v, u)).collect();
            for r in 0..l.dim {
                if brs.iter().all(|b| b[r].is_zero()) {
                    continue;
                }
                let row: Vec<Rat> = brs.iter().map(|b| b[r].clone()).collect();
                acc.add_row(&row);
                if acc.rank() == k {
                    break 'rows;
                }
            }
        }
        let coords = acc.into_subspace().basis_matrix().kernel();
        for c in coords.vectors() {
            central.push(block.linear_combination(c));
        }
    }
    SubspaceBasis::from_vectors(l.dim, central)
}

fn orthogonality_check(l: &LieAlgebra, h: &Element, ge: &BTreeMap<Rat, SubspaceBasis>) -> Result<(), Error> {
    let cov = l.killing_covector(h);
    for s in ge.values() {
        for u in s.vectors() {
            if !crate::linalg::vec_dot(&cov, u).is_zero() {
                return Err(Error::NotNilpotent);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::{center_of, centralizer};
    use crate::roots::{RootSystem, TypeLabel};

    fn build(label: TypeLabel, rank: usize) -> LieAlgebra {
        LieAlgebra::from_root_system(RootSystem::new(label, rank).unwrap())
    }

    #[test]
    fn graded_pipeline_agrees_with_generic_path() {
        for (t, r, roots) in [
            (TypeLabel::A, 2, vec![vec![1, 0], vec![0, 1]]),
            (TypeLabel::A, 2, vec![vec![1, 0]]),
            (TypeLabel::B, 2, vec![vec![0, 1]]),
            (TypeLabel::G, 2, vec![vec![1, 0]]),
            (TypeLabel::G, 2, vec![vec![0, 1]]),
            (TypeLabel::D, 4, vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]),
        ] {
            let l = build(t, r);
            let ctx = OrbitContext::for_root_sum(&l, &roots).unwrap();
            assert!(ctx.triple.verify(&l), "{t}{r}");
            let e = l.element_from_positive_roots(&roots).unwrap();
            let ge = centralizer(&l, &[&e]);
            assert_eq!(ctx.ge.space, ge.basis, "{t}{r}: g^e mismatch");
            let z = center_of(&l, &ge);
            assert_eq!(ctx.center, z, "{t}{r}: center mismatch");
            let gf = centralizer(&l, &[&ctx.triple.f]);
            assert_eq!(ctx.gf.space, gf.basis, "{t}{r}: g^f mismatch");
            // weights attached to basis vectors are correct
            for (v, &w) in ctx.ge.space.vectors().iter().zip(&ctx.ge.weights) {
                let hv = l.bracket(&ctx.triple.h, v);
                assert_eq!(hv, crate::linalg::vec_scale(&rat(w), v));
            }
            assert!(ctx.center_criterion_agrees(), "{t}{r}");
        }
    }

    #[test]
    fn cartan_torus_is_torus_in_reductive_part() {
        let l = build(TypeLabel::B, 2);
        let ctx = OrbitContext::for_root_sum(&l, &[vec![0, 1]]).unwrap();
        let t = ctx.cartan_torus();
        assert_eq!(t.dim(), 1);
        for v in t.vectors() {
            assert!(vec_is_zero(&l.bracket(v, &ctx.triple.e)));
            assert!(vec_is_zero(&l.bracket(v, &ctx.triple.f)));
            assert!(crate::centralizer::is_ad_semisimple(&l, v));
        }
    }

    #[test]
    fn rejects_non_root_sums() {
        let l = build(TypeLabel::A, 2);
        assert!(OrbitContext::for_root_sum(&l, &[vec![5, 5]]).is_err());
    }
}
