//! Nilpotent-orbit data: partitions and rigidity for the classical types,
//! matrix realizations of sl/so/sp with partition nilpotents compatible
//! with the defining bilinear form, the induced-orbit dimension formula,
//! and the orbit table file format for the exceptional types.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{One, Zero};

use crate::chevalley::{Element, LieAlgebra};
use crate::error::Error;
use crate::linalg::{rat, ratio, Rat, RatMatrix, SubspaceBasis};
use crate::roots::TypeLabel;

/// Decreasing partition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::BadPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Dual (transposed) partition.
    pub fn dual(&self) -> Partition {
        let m = self.0[0];
        Partition((1..=m).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// All partitions of n, for the sweep drivers.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    Sl,
    So,
    Sp,
}

/// Partition validity for the matrix algebra: so needs even parts with even
/// multiplicity, sp needs odd parts with even multiplicity.
pub fn partition_valid(kind: ClassicalKind, p: &Partition) -> bool {
    match kind {
        ClassicalKind::Sl => true,
        ClassicalKind::So => p.parts().iter().all(|&m| m % 2 == 1 || p.multiplicity(m) % 2 == 0),
        ClassicalKind::Sp => p.parts().iter().all(|&m| m % 2 == 0 || p.multiplicity(m) % 2 == 0),
    }
}

/// Kempken-Spaltenstein rigidity for types B and D: smallest part 1,
/// consecutive parts differing by at most one, and no odd part of
/// multiplicity exactly two.
pub fn rigid_bd(p: &Partition, label: TypeLabel) -> Result<bool, Error> {
    let n = p.n();
    match label {
        TypeLabel::B if n % 2 == 1 => {}
        TypeLabel::D if n % 2 == 0 => {}
        _ => {
            return Err(Error::BadPartition(format!("{p} is not a type {label} partition")));
        }
    }
    if !partition_valid(ClassicalKind::So, p) {
        return Err(Error::BadPartition(format!("{p}: even parts need even multiplicity")));
    }
    let parts = p.parts();
    if *parts.last().unwrap() != 1 {
        return Ok(false);
    }
    for w in parts.windows(2) {
        if w[0] - w[1] > 1 {
            return Ok(false);
        }
    }
    for &m in parts {
        if m % 2 == 1 && p.multiplicity(m) == 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether powers of e generate the center of its centralizer in types B/D:
/// they fail to exactly when the two largest parts are odd and the third is
/// strictly smaller than the second.
pub fn powers_generate_center_bd(p: &Partition) -> bool {
    let parts = p.parts();
    let n1 = parts[0];
    let n2 = parts.get(1).copied().unwrap_or(1);
    let n3 = parts.get(2).copied().unwrap_or(0);
    !(n1 % 2 == 1 && n2 % 2 == 1 && n3 < n2)
}

/// Codimension-preserving induction: dim of the induced orbit.
pub fn induced_dim(dim_g: usize, dim_levi: usize, dim_orbit_in_levi: usize) -> Result<usize, Error> {
    (dim_g + dim_orbit_in_levi)
        .checked_sub(dim_levi)
        .ok_or_else(|| Error::BadPartition("induced dimension would be negative".into()))
}

/// A classical Lie algebra of matrices together with its defining data.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    pub kind: ClassicalKind,
    pub n: usize,
    pub algebra: LieAlgebra,
    pub mats: Vec<RatMatrix>,
    /// Gram matrix of the invariant bilinear form for so/sp.
    pub form: Option<RatMatrix>,
}

impl MatrixRealization {
    pub fn element_to_matrix(&self, v: &Element) -> RatMatrix {
        let mut m = RatMatrix::zero(self.n, self.n);
        for (c, b) in v.iter().zip(&self.mats) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    let x = b.get(i, j);
                    if !x.is_zero() {
                        let cur = m.get(i, j).clone();
                        m.set(i, j, cur + c * x);
                    }
                }
            }
        }
        m
    }

    pub fn matrix_to_element(&self, m: &RatMatrix) -> Option<Element> {
        let flat: Vec<Vec<Rat>> = self
            .mats
            .iter()
            .map(|b| (0..self.n).flat_map(|i| b.row(i).to_vec()).collect())
            .collect();
        let bt = RatMatrix::from_rows(flat).transpose();
        let v: Vec<Rat> = (0..self.n).flat_map(|i| m.row(i).to_vec()).collect();
        bt.solve(&v)
    }

    /// Projection of an n x n matrix onto the algebra: trace adjustment for
    /// sl, (anti-)symmetrization with respect to the form for so/sp.
    pub fn project(&self, m: &RatMatrix) -> RatMatrix {
        match self.kind {
            ClassicalKind::Sl => {
                let mut tr = Rat::zero();
                for i in 0..self.n {
                    tr += m.get(i, i);
                }
                tr /= rat(self.n as i64);
                let mut out = m.clone();
                for i in 0..self.n {
                    let v = out.get(i, i).clone();
                    out.set(i, i, v - &tr);
                }
                out
            }
            ClassicalKind::So | ClassicalKind::Sp => {
                // theta(M) = -J^{-1} M^T J fixes the algebra pointwise
                let j = self.form.as_ref().unwrap();
                let jinv = invert_form(j);
                let theta = crate::linalg::mat_mul(
                    &crate::linalg::mat_mul(&jinv, &m.transpose()),
                    j,
                );
                let mut out = RatMatrix::zero(self.n, self.n);
                let half = ratio(1, 2);
                for i in 0..self.n {
                    for k in 0..self.n {
                        let v = (m.get(i, k) - theta.get(i, k)) * &half;
                        out.set(i, k, v);
                    }
                }
                out
            }
        }
    }
}

fn invert_form(j: &RatMatrix) -> RatMatrix {
    // forms used here are antidiagonal with +-1 entries; invert directly
    let n = j.rows();
    let mut inv = RatMatrix::zero(n, n);
    for i in 0..n {
        let v = j.get(i, n - 1 - i);
        assert!(!v.is_zero());
        inv.set(n - 1 - i, i, Rat::one() / v);
    }
    inv
}

/// Split bilinear form: antidiagonal ones for so, antidiagonal +-1 for sp.
fn standard_form(kind: ClassicalKind, n: usize) -> RatMatrix {
    let mut j = RatMatrix::zero(n, n);
    for i in 0..n {
        let v = match kind {
            ClassicalKind::So => Rat::one(),
            ClassicalKind::Sp => {
                if i < n / 2 {
                    Rat::one()
                } else {
                    -Rat::one()
                }
            }
            ClassicalKind::Sl => unreachable!(),
        };
        j.set(i, n - 1 - i, v);
    }
    j
}

/// Matrix realization for a classical simple type at the given rank.
pub fn classical_realization(label: TypeLabel, rank: usize) -> Result<MatrixRealization, Error> {
    let (kind, n, rk) = match label {
        TypeLabel::A if rank >= 1 => (ClassicalKind::Sl, rank + 1, rank),
        TypeLabel::B if rank >= 2 => (ClassicalKind::So, 2 * rank + 1, rank),
        TypeLabel::C if rank >= 3 => (ClassicalKind::Sp, 2 * rank, rank),
        TypeLabel::D if rank >= 4 => (ClassicalKind::So, 2 * rank, rank),
        _ => return Err(Error::InvalidType(format!("{label}{rank} is not classical here"))),
    };
    realization(kind, n, rk)
}

/// Matrix realization by kind and matrix size.
pub fn realization(kind: ClassicalKind, n: usize, rank: usize) -> Result<MatrixRealization, Error> {
    let (mats, form) = match kind {
        ClassicalKind::Sl => {
            let mut mats = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut m = RatMatrix::zero(n, n);
                        m.set(i, j, Rat::one());
                        mats.push(m);
                    }
                }
            }
            for i in 0..n - 1 {
                let mut m = RatMatrix::zero(n, n);
                m.set(i, i, Rat::one());
                m.set(i + 1, i + 1, -Rat::one());
                mats.push(m);
            }
            (mats, None)
        }
        ClassicalKind::So | ClassicalKind::Sp => {
            let j = standard_form(kind, n);
            // kernel of X^T J + J X = 0 over the n^2 matrix coordinates
            let mut sys = RatMatrix::zero(n * n, n * n);
            for a in 0..n {
                for b in 0..n {
                    let row = a * n + b;
                    // (X^T J)_{ab} = X_{sigma(b), a} J_{sigma(b), b}
                    let sb = n - 1 - b;
                    let cur = sys.get(row, sb * n + a).clone();
                    sys.set(row, sb * n + a, cur + j.get(sb, b).clone());
                    // (J X)_{ab} = J_{a, sigma(a)} X_{sigma(a), b}
                    let sa = n - 1 - a;
                    let cur = sys.get(row, sa * n + b).clone();
                    sys.set(row, sa * n + b, cur + j.get(a, sa).clone());
                }
            }
            let ker = sys.kernel();
            let mats = ker
                .vectors()
                .iter()
                .map(|v| {
                    let mut m = RatMatrix::zero(n, n);
                    for (idx, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            m.set(idx / n, idx % n, c.clone());
                        }
                    }
                    m
                })
                .collect();
            (mats, Some(j))
        }
    };
    let algebra = LieAlgebra::from_matrices(&mats, rank)?;
    Ok(MatrixRealization { kind, n, algebra, mats, form })
}

/// Block model of a partition sl2-triple with an invariant form: returns
/// (e, h, f, gram) in the model basis, with per-block sign choices that
/// leave the middles of odd so-blocks balanced for hyperbolic pairing.
struct BlockModel {
    e: RatMatrix,
    h: RatMatrix,
    f: RatMatrix,
    gram: RatMatrix,
    /// hyperbolic pairs (u, v) with <u,v> = 1 plus at most one unit vector,
    /// all as model coordinate vectors
    pairs: Vec<(Vec<Rat>, Vec<Rat>)>,
    unit: Option<Vec<Rat>>,
}

fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn build_block_model(kind: ClassicalKind, p: &Partition) -> Result<BlockModel, Error> {
    let n = p.n();
    let mut e = RatMatrix::zero(n, n);
    let mut h = RatMatrix::zero(n, n);
    let mut f = RatMatrix::zero(n, n);
    let mut gram = RatMatrix::zero(n, n);
    let mut pairs: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut middles: Vec<(usize, i64)> = Vec::new(); // (coordinate, sign)

    // which parts are single blocks and which are cross-paired
    let single_parity = match kind {
        ClassicalKind::So => 1,
        ClassicalKind::Sp => 0,
        ClassicalKind::Sl => unreachable!(),
    };
    let mut singles: Vec<usize> = Vec::new();
    let mut paired: Vec<usize> = Vec::new();
    let queue: BTreeMap<usize, usize> =
        p.parts().iter().fold(BTreeMap::new(), |mut m, &x| {
            *m.entry(x).or_insert(0) += 1;
            m
        });
    for (&m, &mult) in queue.iter() {
        if m % 2 == single_parity {
            for _ in 0..mult {
                singles.push(m);
            }
        } else {
            if mult % 2 != 0 {
                return Err(Error::BadPartition(format!(
                    "{p}: part {m} needs even multiplicity"
                )));
            }
            for _ in 0..mult / 2 {
                paired.push(m);
            }
        }
    }
    singles.sort_unstable_by(|a, b| b.cmp(a));
    paired.sort_unstable_by(|a, b| b.cmp(a));

    // middle signs alternate so they pair up hyperbolically
    let mut next_sign = 1i64;

    let mut base = 0usize;
    let mut fill_sl2 = |e: &mut RatMatrix, h: &mut RatMatrix, f: &mut RatMatrix, base: usize, m: usize| {
        // e v_i = v_{i-1}, h v_i = (m+1-2i) v_i, f v_i = i(m-i) v_{i+1}, 1-based i
        for i in 2..=m {
            e.set(base + i - 2, base + i - 1, Rat::one());
        }
        for i in 1..=m {
            h.set(base + i - 1, base + i - 1, rat(m as i64 + 1 - 2 * i as i64));
        }
        for i in 1..m {
            f.set(base + i, base + i - 1, rat((i * (m - i)) as i64));
        }
    };

    for m in singles {
        let s = if m % 2 == 1 {
            // choose the sign so that the middle self-pairing is +-1 as scheduled
            let mid = (m + 1) / 2;
            let natural = if mid % 2 == 0 { 1 } else { -1 };
            let want = next_sign;
            next_sign = -next_sign;
            want * natural
        } else {
            1
        };
        fill_sl2(&mut e, &mut h, &mut f, base, m);
        for i in 1..=m {
            let j = m + 1 - i;
            let sign = if i % 2 == 0 { s } else { -s };
            gram.set(base + i - 1, base + j - 1, rat(sign));
        }
        for i in 1..=m {
            let j = m + 1 - i;
            if i < j {
                // (v_i, s(-1)^i v_j) is a hyperbolic or symplectic pair
                let sign = if i % 2 == 0 { s } else { -s };
                let mut v = unit_vec(n, base + j - 1);
                v[base + j - 1] = rat(sign);
                pairs.push((unit_vec(n, base + i - 1), v));
            } else if i == j {
                let sign = if i % 2 == 0 { s } else { -s };
                middles.push((base + i - 1, sign));
            }
        }
        base += m;
    }
    for m in paired {
        // two blocks V (at base) and W (at base + m), pairing V with W
        fill_sl2(&mut e, &mut h, &mut f, base, m);
        fill_sl2(&mut e, &mut h, &mut f, base + m, m);
        for i in 1..=m {
            let j = m + 1 - i;
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            gram.set(base + i - 1, base + m + j - 1, rat(sign));
            let back = match kind {
                ClassicalKind::So => sign,
                ClassicalKind::Sp => -sign,
                ClassicalKind::Sl => unreachable!(),
            };
            gram.set(base + m + j - 1, base + i - 1, rat(back));
        }
        for i in 1..=m {
            let j = m + 1 - i;
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            let mut v = unit_vec(n, base + m + j - 1);
            v[base + m + j - 1] = rat(sign);
            pairs.push((unit_vec(n, base + i - 1), v));
        }
        base += 2 * m;
    }

    // combine +1/-1 middles into hyperbolic pairs; at most one +1 remains
    let mut unit = None;
    let mut plus: Vec<usize> = middles.iter().filter(|(_, s)| *s > 0).map(|(i, _)| *i).collect();
    let mut minus: Vec<usize> = middles.iter().filter(|(_, s)| *s < 0).map(|(i, _)| *i).collect();
    while !plus.is_empty() && !minus.is_empty() {
        let (a, b) = (plus.pop().unwrap(), minus.pop().unwrap());
        // u = w + w' and v = (w - w')/2 are isotropic with <u, v> = 1
        let mut u = vec![Rat::zero(); n];
        u[a] = Rat::one();
        u[b] = Rat::one();
        let mut v = vec![Rat::zero(); n];
        v[a] = ratio(1, 2);
        v[b] = -ratio(1, 2);
        pairs.push((u, v));
    }
    match (plus.len(), minus.len()) {
        (0, 0) => {}
        (1, 0) => unit = Some(unit_vec(n, plus[0])),
        _ => {
            return Err(Error::BadPartition(format!(
                "{p}: middle signs failed to balance"
            )))
        }
    }
    Ok(BlockModel { e, h, f, gram, pairs, unit })
}

/// sl2-triple (e, h, f) of Jordan type `p` inside the realization, with e
/// compatible with the defining form. The returned elements are coordinates
/// in the realization basis.
pub fn partition_triple(
    real: &MatrixRealization,
    p: &Partition,
) -> Result<(Element, Element, Element), Error> {
    if p.n() != real.n {
        return Err(Error::BadPartition(format!("{p} does not sum to {}", real.n)));
    }
    if !partition_valid(real.kind, p) {
        return Err(Error::BadPartition(format!("{p} invalid for this realization")));
    }
    let (e_m, h_m, f_m) = match real.kind {
        ClassicalKind::Sl => {
            let n = real.n;
            let mut e = RatMatrix::zero(n, n);
            let mut h = RatMatrix::zero(n, n);
            let mut f = RatMatrix::zero(n, n);
            let mut base = 0;
            for &m in p.parts() {
                for i in 2..=m {
                    e.set(base + i - 2, base + i - 1, Rat::one());
                }
                for i in 1..=m {
                    h.set(base + i - 1, base + i - 1, rat(m as i64 + 1 - 2 * i as i64));
                }
                for i in 1..m {
                    f.set(base + i, base + i - 1, rat((i * (m - i)) as i64));
                }
                base += m;
            }
            (e, h, f)
        }
        ClassicalKind::So | ClassicalKind::Sp => {
            let model = build_block_model(real.kind, p)?;
            // columns of W list hyperbolic halves, then the unit, then the
            // mirrored halves, so that W^T gram W is the standard form
            let n = real.n;
            let mut w = RatMatrix::zero(n, n);
            let r = model.pairs.len();
            debug_assert_eq!(2 * r + usize::from(model.unit.is_some()), n);
            for (idx, (u, v)) in model.pairs.iter().enumerate() {
                for (row, val) in u.iter().enumerate() {
                    w.set(row, idx, val.clone());
                }
                for (row, val) in v.iter().enumerate() {
                    w.set(row, n - 1 - idx, val.clone());
                }
            }
            if let Some(unit) = &model.unit {
                for (row, val) in unit.iter().enumerate() {
                    w.set(row, r, val.clone());
                }
            }
            // check the base change reproduces the standard form exactly
            let j = crate::linalg::mat_mul(
                &crate::linalg::mat_mul(&w.transpose(), &model.gram),
                &w,
            );
            let expected = standard_form(real.kind, n);
            if j != expected {
                return Err(Error::BadPartition(format!("{p}: base change failed")));
            }
            let winv = invert(&w).ok_or_else(|| Error::BadPartition("singular base change".into()))?;
            let conj = |m: &RatMatrix| crate::linalg::mat_mul(&crate::linalg::mat_mul(&winv, m), &w);
            (conj(&model.e), conj(&model.h), conj(&model.f))
        }
    };
    let e = real
        .matrix_to_element(&e_m)
        .ok_or_else(|| Error::BadPartition(format!("{p}: e not in the algebra")))?;
    let h = real
        .matrix_to_element(&h_m)
        .ok_or_else(|| Error::BadPartition(format!("{p}: h not in the algebra")))?;
    let f = real
        .matrix_to_element(&f_m)
        .ok_or_else(|| Error::BadPartition(format!("{p}: f not in the algebra")))?;
    Ok((e, h, f))
}

pub fn nilpotent_from_partition(real: &MatrixRealization, p: &Partition) -> Result<Element, Error> {
    partition_triple(real, p).map(|(e, _, _)| e)
}

fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.rows();
    let mut aug = RatMatrix::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Rat::one());
    }
    let (r, pivots) = aug.rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    let mut inv = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Some(inv)
}

/// Expected centralizer dimension from the partition, used as a cross-check
/// against the kernel computation (never instead of it).
pub fn centralizer_dim_formula(kind: ClassicalKind, p: &Partition) -> usize {
    let s: usize = p.parts().iter().enumerate().map(|(i, &m)| (2 * i + 1) * m).sum();
    let odd = p.parts().iter().filter(|&&m| m % 2 == 1).count();
    match kind {
        ClassicalKind::Sl => s - 1,
        ClassicalKind::So => (s - odd) / 2,
        ClassicalKind::Sp => (s + odd) / 2,
    }
}

/// True iff z(g^e) equals the span of the projections of the powers of e.
pub fn center_powers_check(real: &MatrixRealization, e: &Element) -> bool {
    let l = &real.algebra;
    let ge = crate::centralizer::centralizer(l, &[e]);
    let z = crate::centralizer::center_of(l, &ge);
    let e_m = real.element_to_matrix(e);
    let mut power = RatMatrix::identity(real.n);
    let mut vecs: Vec<Element> = Vec::new();
    for _ in 1..real.n {
        power = crate::linalg::mat_mul(&power, &e_m);
        let proj = real.project(&power);
        if let Some(v) = real.matrix_to_element(&proj) {
            if !crate::linalg::vec_is_zero(&v) {
                vecs.push(v);
            }
        }
    }
    let span = SubspaceBasis::from_vectors(l.dim, vecs);
    span == z
}

// -- orbit table ----------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitRep {
    /// Positive roots in simple-root coordinates; e is the sum of their
    /// root vectors.
    Roots(Vec<Vec<i64>>),
    Partition(Partition),
}

#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub label: String,
    pub rep: OrbitRep,
    pub expected_dim_centralizer: usize,
    pub expected_dim_center: usize,
    pub rigid: bool,
    /// Generator of t in coordinates over the canonical basis of g^e.
    pub torus_t: Option<Vec<Rat>>,
    /// Basis of t1 in coordinates over the canonical basis of g^e.
    pub torus_t1: Option<Vec<Vec<Rat>>>,
}

/// Parse the orbit table format: records are blocks of `key = value` lines
/// separated by blank lines, `#` starts a comment.
pub fn parse_orbit_table(text: &str) -> Result<Vec<OrbitRecord>, Error> {
    let mut records = Vec::new();
    let mut fields: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut start_line = 0usize;
    let flush = |fields: &mut BTreeMap<String, (usize, String)>,
                 records: &mut Vec<OrbitRecord>,
                 start_line: usize|
     -> Result<(), Error> {
        if fields.is_empty() {
            return Ok(());
        }
        let rec = record_from_fields(fields, start_line)?;
        records.push(rec);
        fields.clear();
        Ok(())
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            flush(&mut fields, &mut records, start_line)?;
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse { line: lineno + 1, msg: "expected `key = value`".into() });
        };
        if fields.is_empty() {
            start_line = lineno + 1;
        }
        let key = key.trim().to_string();
        if fields.insert(key.clone(), (lineno + 1, value.trim().to_string())).is_some() {
            return Err(Error::Parse { line: lineno + 1, msg: format!("duplicate key `{key}`") });
        }
    }
    flush(&mut fields, &mut records, start_line)?;
    Ok(records)
}

fn record_from_fields(
    fields: &BTreeMap<String, (usize, String)>,
    start_line: usize,
) -> Result<OrbitRecord, Error> {
    let get = |key: &str| -> Result<(usize, &str), Error> {
        fields
            .get(key)
            .map(|(l, v)| (*l, v.as_str()))
            .ok_or(Error::Parse { line: start_line, msg: format!("missing key `{key}`") })
    };
    let (l, ty) = get("type")?;
    let type_label: TypeLabel =
        ty.parse().map_err(|_| Error::Parse { line: l, msg: format!("bad type `{ty}`") })?;
    let (l, rk) = get("rank")?;
    let rank: usize =
        rk.parse().map_err(|_| Error::Parse { line: l, msg: format!("bad rank `{rk}`") })?;
    let (_, label) = get("label")?;
    let rep = match (fields.get("rep_roots"), fields.get("rep_partition")) {
        (Some((l, v)), None) => OrbitRep::Roots(parse_int_vectors(v, *l)?),
        (None, Some((l, v))) => {
            let parts: Result<Vec<usize>, _> =
                v.split(',').map(|x| x.trim().parse::<usize>()).collect();
            let parts = parts.map_err(|_| Error::Parse { line: *l, msg: format!("bad partition `{v}`") })?;
            OrbitRep::Partition(
                Partition::new(parts)
                    .map_err(|e| Error::Parse { line: *l, msg: e.to_string() })?,
            )
        }
        _ => {
            return Err(Error::Parse {
                line: start_line,
                msg: "need exactly one of rep_roots / rep_partition".into(),
            })
        }
    };
    let parse_count = |key: &str| -> Result<usize, Error> {
        let (l, v) = get(key)?;
        v.parse().map_err(|_| Error::Parse { line: l, msg: format!("bad count `{v}`") })
    };
    let (l, rigid) = get("rigid")?;
    let rigid = match rigid {
        "true" => true,
        "false" => false,
        other => return Err(Error::Parse { line: l, msg: format!("bad bool `{other}`") }),
    };
    let torus_t = match fields.get("torus_t") {
        Some((l, v)) => Some(parse_rat_vector(v, *l)?),
        None => None,
    };
    let torus_t1 = match fields.get("torus_t1") {
        Some((l, v)) => Some(
            v.split(';')
                .map(|part| parse_rat_vector(part, *l))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };
    Ok(OrbitRecord {
        type_label,
        rank,
        label: label.to_string(),
        rep,
        expected_dim_centralizer: parse_count("dim_centralizer")?,
        expected_dim_center: parse_count("dim_center")?,
        rigid,
        torus_t,
        torus_t1,
    })
}

fn parse_int_vectors(v: &str, line: usize) -> Result<Vec<Vec<i64>>, Error> {
    v.split(';')
        .map(|part| {
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse { line, msg: format!("bad integer `{x}`") })
                })
                .collect()
        })
        .collect()
}

fn parse_rat_vector(v: &str, line: usize) -> Result<Vec<Rat>, Error> {
    v.split(',')
        .map(|x| {
            let x = x.trim();
            if let Some((num, den)) = x.split_once('/') {
                let n: i64 = num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse { line, msg: format!("bad rational `{x}`") })?;
                let d: i64 = den
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse { line, msg: format!("bad rational `{x}`") })?;
                Ok(ratio(n, d))
            } else {
                let n: i64 =
                    x.parse().map_err(|_| Error::Parse { line, msg: format!("bad integer `{x}`") })?;
                Ok(rat(n))
            }
        })
        .collect()
}

pub fn load_orbit_table_text(path: &Path) -> Result<Vec<OrbitRecord>, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_orbit_table(&text)
}
