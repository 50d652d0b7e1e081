//! Per-orbit verification engine: torus selection inside the reductive part
//! of a centralizer, weight decomposition of g^e, exact pairing-matrix
//! determinants, the two sufficient conditions for the index, and the
//! end-to-end verdict for an orbit record.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;

use crate::centralizer::{centralizer, is_ad_semisimple, Subalgebra};
use crate::chevalley::{Element, LieAlgebra};
use crate::error::Error;
use crate::graded::OrbitContext;
use crate::index::{certified_index, IndexCertificate, SearchConfig};
use crate::linalg::{rat, vec_is_zero, Rat, RatMatrix, SubspaceBasis};
use crate::orbits::{OrbitRecord, OrbitRep};
use crate::poly::{minor_rank as poly_minor_rank, poly_det, MPoly};

/// Commutative subalgebras t inside t1 of semisimple elements of g^e; the
/// first generator spans t.
#[derive(Debug, Clone)]
pub struct TorusPair {
    pub gens: Vec<Element>,
}

impl TorusPair {
    pub fn t_gen(&self) -> &Element {
        &self.gens[0]
    }

    pub fn dim_t1(&self) -> usize {
        self.gens.len()
    }
}

/// Pick or validate a torus pair for the orbit. A record-supplied spec wins;
/// otherwise the Cartan part of g^e (inside g^f automatically) is used, and
/// as a last resort a greedy search over the reductive part.
pub fn find_tori(
    ctx: &OrbitContext,
    record: Option<&OrbitRecord>,
    cfg: &SearchConfig,
) -> Result<TorusPair, Error> {
    let l = ctx.l;
    if let Some(rec) = record {
        if let Some(t_coords) = &rec.torus_t {
            let gens = torus_from_spec(ctx, t_coords, rec.torus_t1.as_deref())?;
            let pair = TorusPair { gens };
            validate_torus(ctx, &pair)?;
            return Ok(pair);
        }
    }
    let cartan_part = ctx.cartan_torus();
    if cartan_part.dim() >= 1 {
        let take = cartan_part.dim().min(4);
        let gens: Vec<Element> = cartan_part.vectors().iter().take(take).cloned().collect();
        let pair = TorusPair { gens };
        validate_torus(ctx, &pair)?;
        return Ok(pair);
    }
    // greedy search over the reductive part with small integer coordinates
    let r = crate::linalg::intersect(&ctx.ge.space, &ctx.gf.space)?;
    if r.dim() == 0 {
        return Err(Error::TorusSearch("reductive part of the centralizer is zero".into()));
    }
    let mut rng = cfg.rng_for("torus-search");
    for _ in 0..cfg.retries {
        let coords: Vec<Rat> =
            (0..r.dim()).map(|_| rat(rng.gen_range(-2..=2))).collect();
        let cand = r.linear_combination(&coords);
        if vec_is_zero(&cand) {
            continue;
        }
        if is_ad_semisimple(l, &cand) {
            let pair = TorusPair { gens: vec![cand] };
            validate_torus(ctx, &pair)?;
            return Ok(pair);
        }
    }
    Err(Error::TorusSearch(format!(
        "no semisimple element found in {} retries",
        cfg.retries
    )))
}

fn torus_from_spec(
    ctx: &OrbitContext,
    t_coords: &[Rat],
    t1_coords: Option<&[Vec<Rat>]>,
) -> Result<Vec<Element>, Error> {
    let dim_ge = ctx.ge.dim();
    let to_ambient = |coords: &[Rat]| -> Result<Element, Error> {
        if coords.len() != dim_ge {
            return Err(Error::TorusSearch(format!(
                "torus spec has {} coordinates, g^e has dimension {}",
                coords.len(),
                dim_ge
            )));
        }
        Ok(ctx.ge.space.linear_combination(coords))
    };
    let t = to_ambient(t_coords)?;
    let mut gens = vec![t.clone()];
    if let Some(rows) = t1_coords {
        let first = to_ambient(&rows[0])?;
        if first != t {
            return Err(Error::TorusSearch(
                "torus_t1 must list the t generator first".into(),
            ));
        }
        for row in &rows[1..] {
            gens.push(to_ambient(row)?);
        }
    }
    Ok(gens)
}

fn validate_torus(ctx: &OrbitContext, pair: &TorusPair) -> Result<(), Error> {
    let l = ctx.l;
    if pair.gens.is_empty() || vec_is_zero(pair.t_gen()) {
        return Err(Error::TorusSearch("t must be nonzero".into()));
    }
    if pair.gens.len() > 4 {
        return Err(Error::TorusSearch("t1 dimension exceeds 4".into()));
    }
    for g in &pair.gens {
        if !ctx.ge.space.contains(g) || !ctx.gf.space.contains(g) {
            return Err(Error::TorusSearch("generator not in the reductive part".into()));
        }
        if !l.in_cartan(g) && !is_ad_semisimple(l, g) {
            return Err(Error::TorusSearch("generator is not semisimple".into()));
        }
    }
    for (i, a) in pair.gens.iter().enumerate() {
        for b in pair.gens.iter().skip(i + 1) {
            if !vec_is_zero(&l.bracket(a, b)) {
                return Err(Error::TorusSearch("generators do not commute".into()));
            }
        }
    }
    Ok(())
}

/// Simultaneous weight decomposition of g^e under the t1 generators.
#[derive(Debug, Clone)]
pub struct WeightDecomposition {
    pub t1_dim: usize,
    pub ge_dim: usize,
    /// weight vector on the generators -> weight space, in ambient
    /// coordinates; includes the zero weight.
    pub spaces: Vec<(Vec<Rat>, SubspaceBasis)>,
}

impl WeightDecomposition {
    pub fn space_of(&self, w: &[Rat]) -> Option<&SubspaceBasis> {
        self.spaces.iter().find(|(v, _)| v == w).map(|(_, s)| s)
    }

    /// z_{g^e}(t): every weight vanishing on the t generator.
    pub fn le_dim(&self) -> usize {
        self.spaces
            .iter()
            .filter(|(w, _)| w[0].is_zero())
            .map(|(_, s)| s.dim())
            .sum()
    }

    /// z_{g^e}(t1): the zero weight space.
    pub fn l1e(&self) -> Option<&SubspaceBasis> {
        self.spaces.iter().find(|(w, _)| w.iter().all(|c| c.is_zero())).map(|(_, s)| s)
    }

    pub fn le_subspace(&self, ambient: usize) -> SubspaceBasis {
        let vecs: Vec<Element> = self
            .spaces
            .iter()
            .filter(|(w, _)| w[0].is_zero())
            .flat_map(|(_, s)| s.vectors().iter().cloned())
            .collect();
        SubspaceBasis::from_vectors(ambient, vecs)
    }

    /// Weights with nonzero restriction to t, one representative per +-pair
    /// (the one whose first nonzero coordinate is positive).
    pub fn positive_t_weights(&self) -> Vec<&(Vec<Rat>, SubspaceBasis)> {
        self.spaces
            .iter()
            .filter(|(w, _)| {
                !w[0].is_zero() && w.iter().find(|c| !c.is_zero()).is_some_and(|c| c > &Rat::zero())
            })
            .collect()
    }

    /// Every nonzero weight appears with its negative at equal multiplicity.
    pub fn symmetric_under_negation(&self) -> bool {
        self.spaces.iter().all(|(w, s)| {
            if w.iter().all(|c| c.is_zero()) {
                return true;
            }
            let neg: Vec<Rat> = w.iter().map(|c| -c.clone()).collect();
            self.space_of(&neg).is_some_and(|n| n.dim() == s.dim())
        })
    }

    /// dim g^e - dim l^e - 2 * (sum of multiplicities of the positive
    /// weights); zero when no weight was missed.
    pub fn bookkeeping_s(&self) -> i64 {
        let pos: usize = self.positive_t_weights().iter().map(|(_, s)| s.dim()).sum();
        self.ge_dim as i64 - self.le_dim() as i64 - 2 * pos as i64
    }
}

/// Decompose g^e into simultaneous weight spaces of the torus generators.
/// Cartan generators use blockwise kernels; the general path goes through
/// minimal polynomials and eigen-kernels of the restricted actions.
pub fn weight_decompose(ctx: &OrbitContext, torus: &TorusPair) -> Result<WeightDecomposition, Error> {
    let l = ctx.l;
    if torus.gens.iter().all(|g| l.in_cartan(g)) {
        return Ok(weight_decompose_cartan(ctx, torus));
    }
    weight_decompose_general(ctx, torus)
}

fn weight_decompose_cartan(ctx: &OrbitContext, torus: &TorusPair) -> WeightDecomposition {
    let l = ctx.l;
    // refined key: (ad-h weight, t1 weights) per ambient basis index
    let mut buckets: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    for i in 0..l.dim {
        let mut key = vec![rat(ctx.ambient_weights[i])];
        for g in &torus.gens {
            key.push(l.cartan_weight(g, i));
        }
        buckets.entry(key).or_default().push(i);
    }
    let index_key: BTreeMap<usize, Vec<Rat>> = buckets
        .iter()
        .flat_map(|(k, idxs)| idxs.iter().map(move |&i| (i, k.clone())))
        .collect();
    let e = &ctx.triple.e;
    let mut grouped: BTreeMap<Vec<Rat>, Vec<Element>> = BTreeMap::new();
    for (key, cols) in &buckets {
        // ad e raises the h-weight by 2 and fixes the torus weights
        let mut target = key.clone();
        target[0] = &target[0] + &rat(2);
        let target_rows: Vec<usize> = buckets.get(&target).cloned().unwrap_or_default();
        let mut m = RatMatrix::zero(target_rows.len(), cols.len());
        for (cj, &col) in cols.iter().enumerate() {
            let br = l.bracket(e, &l.basis_element(col));
            for (ri, &row) in target_rows.iter().enumerate() {
                if !br[row].is_zero() {
                    m.set(ri, cj, br[row].clone());
                }
            }
            debug_assert!(br
                .iter()
                .enumerate()
                .all(|(r, v)| v.is_zero() || index_key[&r] == target));
        }
        let ker = m.kernel();
        if ker.dim() == 0 {
            continue;
        }
        let lambda: Vec<Rat> = key[1..].to_vec();
        let entry = grouped.entry(lambda).or_default();
        for small in ker.vectors() {
            let mut v = l.zero_element();
            for (cj, &col) in cols.iter().enumerate() {
                v[col] = small[cj].clone();
            }
            entry.push(v);
        }
    }
    let spaces: Vec<(Vec<Rat>, SubspaceBasis)> = grouped
        .into_iter()
        .map(|(w, vecs)| (w, SubspaceBasis::from_vectors(l.dim, vecs)))
        .collect();
    let ge_dim = ctx.ge.dim();
    debug_assert_eq!(spaces.iter().map(|(_, s)| s.dim()).sum::<usize>(), ge_dim);
    WeightDecomposition { t1_dim: torus.gens.len(), ge_dim, spaces }
}

fn weight_decompose_general(
    ctx: &OrbitContext,
    torus: &TorusPair,
) -> Result<WeightDecomposition, Error> {
    let l = ctx.l;
    let k = ctx.ge.dim();
    // matrices of ad(gen) restricted to g^e, in g^e coordinates
    let mut restricted = Vec::new();
    for g in &torus.gens {
        let mut m = RatMatrix::zero(k, k);
        for (j, v) in ctx.ge.space.vectors().iter().enumerate() {
            let br = l.bracket(g, v);
            let coords = ctx
                .ge
                .space
                .coordinates(&br)
                .ok_or_else(|| Error::TorusSearch("torus does not normalize g^e".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        restricted.push(m);
    }
    // simultaneous eigenspaces by iterated refinement
    let mut parts: Vec<(Vec<Rat>, SubspaceBasis)> =
        vec![(vec![], SubspaceBasis::full(k))];
    for m in &restricted {
        let mp = crate::upoly::min_poly(m);
        let roots = crate::upoly::rational_roots(&mp);
        if !crate::upoly::is_squarefree(&mp) {
            return Err(Error::BadSpectrum);
        }
        let mut next = Vec::new();
        for (w, space) in &parts {
            let mut found = 0;
            for lam in &roots {
                // kernel of (m - lam) restricted to the part
                let b = space.basis_matrix();
                let mut shifted = crate::linalg::mat_mul(m, &b.transpose());
                for (col, v) in space.vectors().iter().enumerate() {
                    for row in 0..k {
                        let cur = shifted.get(row, col).clone();
                        shifted.set(row, col, cur - lam * &v[row]);
                    }
                }
                let ker = shifted.kernel();
                if ker.dim() == 0 {
                    continue;
                }
                found += ker.dim();
                let vecs: Vec<Vec<Rat>> = ker
                    .vectors()
                    .iter()
                    .map(|c| space.linear_combination(c))
                    .collect();
                let mut wl = w.clone();
                wl.push(lam.clone());
                next.push((wl, SubspaceBasis::from_vectors(k, vecs)));
            }
            if found != space.dim() {
                return Err(Error::BadSpectrum);
            }
        }
        parts = next;
    }
    let spaces: Vec<(Vec<Rat>, SubspaceBasis)> = parts
        .into_iter()
        .map(|(w, s)| {
            let vecs: Vec<Element> = s
                .vectors()
                .iter()
                .map(|c| ctx.ge.space.linear_combination(c))
                .collect();
            (w, SubspaceBasis::from_vectors(l.dim, vecs))
        })
        .collect();
    Ok(WeightDecomposition { t1_dim: torus.gens.len(), ge_dim: k, spaces })
}

/// Matrix of brackets between the bases of a +-weight pair; entries are
/// elements of z_{g^e}(t1) stored by their coordinates there.
#[derive(Debug, Clone)]
pub struct PairingMatrix {
    pub weight: Vec<Rat>,
    pub order: usize,
    pub entries: Vec<Vec<Vec<Rat>>>,
}

impl PairingMatrix {
    pub fn to_poly(&self) -> Vec<Vec<MPoly>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| MPoly::linear(e)).collect())
            .collect()
    }
}

pub fn pairing_matrices(
    ctx: &OrbitContext,
    wd: &WeightDecomposition,
) -> Result<Vec<PairingMatrix>, Error> {
    let l = ctx.l;
    let l1e = wd
        .l1e()
        .ok_or_else(|| Error::TorusSearch("zero weight space is empty".into()))?
        .clone();
    let mut out = Vec::new();
    for (w, vs) in wd.positive_t_weights() {
        let neg: Vec<Rat> = w.iter().map(|c| -c.clone()).collect();
        let ws = wd
            .space_of(&neg)
            .ok_or_else(|| Error::TorusSearch(format!("missing opposite weight of {w:?}")))?;
        if ws.dim() != vs.dim() {
            return Err(Error::TorusSearch(format!(
                "weight multiplicities differ at {w:?}: {} vs {}",
                vs.dim(),
                ws.dim()
            )));
        }
        let m = vs.dim();
        let mut entries = vec![vec![Vec::new(); m]; m];
        for (kk, v) in vs.vectors().iter().enumerate() {
            for (ll, u) in ws.vectors().iter().enumerate() {
                let br = l.bracket(v, u);
                let coords = l1e.coordinates(&br).ok_or_else(|| {
                    Error::TorusSearch("pairing bracket left z_{g^e}(t1)".into())
                })?;
                entries[kk][ll] = coords;
            }
        }
        out.push(PairingMatrix { weight: w.clone(), order: m, entries });
    }
    Ok(out)
}

pub const MATRIX_ORDER_BOUND: usize = 6;

pub fn qi_nonzero(pm: &PairingMatrix) -> Result<bool, Error> {
    Ok(!poly_det(&pm.to_poly(), MATRIX_ORDER_BOUND)?.is_zero())
}

pub fn minor_rank(pm: &PairingMatrix) -> Result<usize, Error> {
    poly_minor_rank(&pm.to_poly(), MATRIX_ORDER_BOUND)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct QiReport {
    pub weight: Vec<String>,
    pub order: usize,
    pub nonzero: bool,
    pub minor_rank: usize,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Prop57Report {
    pub dim_t1: usize,
    pub dim_le: usize,
    pub dim_l1e: usize,
    pub bookkeeping_s: i64,
    pub weight_symmetric: bool,
    pub matrices: Vec<QiReport>,
    pub condition1: bool,
    pub condition2: bool,
    pub le_index_certified: bool,
}

/// Run the weight/pairing analysis for a chosen torus pair.
pub fn prop57_check(
    ctx: &OrbitContext,
    torus: &TorusPair,
    cfg: &SearchConfig,
    label: &str,
) -> Result<Prop57Report, Error> {
    let l = ctx.l;
    let wd = weight_decompose(ctx, torus)?;
    let mats = pairing_matrices(ctx, &wd)?;
    let mut reports = Vec::new();
    for pm in &mats {
        let nonzero = qi_nonzero(pm)?;
        let rank = minor_rank(pm)?;
        reports.push(QiReport {
            weight: pm.weight.iter().map(|c| c.to_string()).collect(),
            order: pm.order,
            nonzero,
            minor_rank: rank,
        });
    }
    let condition1 = !reports.is_empty() && reports.iter().all(|r| r.nonzero);
    let condition2 = (0..reports.len()).any(|j| {
        reports.iter().enumerate().all(|(i, r)| i == j || r.nonzero)
            && reports[j].minor_rank + 1 >= reports[j].order
    });
    // the hypothesis ind l^e = rank, certified by sampling on l^e
    let le = wd.le_subspace(l.dim);
    let le_cert = certified_index(l, &Subalgebra { basis: le }, cfg, &format!("{label}::le"));
    Ok(Prop57Report {
        dim_t1: wd.t1_dim,
        dim_le: wd.le_dim(),
        dim_l1e: wd.l1e().map_or(0, |s| s.dim()),
        bookkeeping_s: wd.bookkeeping_s(),
        weight_symmetric: wd.symmetric_under_negation(),
        matrices: reports,
        condition1,
        condition2,
        le_index_certified: le_cert.certified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum VerdictStatus {
    /// An index witness was found; the index equals the rank, exactly.
    Certified,
    /// The structural conditions of the paper path hold but no index
    /// witness was found.
    StructureConfirmed,
    Inconclusive,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct OrbitVerdict {
    pub label: String,
    pub algebra: String,
    pub dim_g: usize,
    pub rank: usize,
    pub dim_centralizer: usize,
    pub dim_center: usize,
    pub rigid: bool,
    pub index: IndexCertificate,
    /// Sufficient condition: one-dimensional centers settle the index.
    pub center_dim_one: bool,
    pub prop57: Option<Prop57Report>,
    pub center_criterion_agrees: bool,
    pub status: VerdictStatus,
}

/// Full pipeline for one exceptional orbit record: build e and its graded
/// context, check the recorded dimensions, certify the index, and run the
/// torus analysis when a torus is available.
pub fn verify_orbit(
    l: &LieAlgebra,
    record: &OrbitRecord,
    cfg: &SearchConfig,
) -> Result<OrbitVerdict, Error> {
    let roots = match &record.rep {
        OrbitRep::Roots(r) => r,
        OrbitRep::Partition(_) => {
            return Err(Error::RecordValidation {
                label: record.label.clone(),
                msg: "partition records go through the classical sweep".into(),
            })
        }
    };
    let ctx = OrbitContext::for_root_sum(l, roots).map_err(|e| e.at_stage("build"))?;
    if ctx.dim_centralizer() != record.expected_dim_centralizer {
        return Err(Error::RecordValidation {
            label: record.label.clone(),
            msg: format!(
                "dim g^e = {} but the record expects {}",
                ctx.dim_centralizer(),
                record.expected_dim_centralizer
            ),
        });
    }
    if ctx.dim_center() != record.expected_dim_center {
        return Err(Error::RecordValidation {
            label: record.label.clone(),
            msg: format!(
                "dim z(g^e) = {} but the record expects {}",
                ctx.dim_center(),
                record.expected_dim_center
            ),
        });
    }
    let cert = certified_index(l, &ctx.ge.subalgebra(), cfg, &record.label);
    let center_dim_one = ctx.dim_center() == 1;
    let prop57 = match find_tori(&ctx, Some(record), cfg) {
        Ok(torus) => Some(prop57_check(&ctx, &torus, cfg, &record.label).map_err(|e| e.at_stage("prop57"))?),
        Err(Error::TorusSearch(_)) => None,
        Err(e) => return Err(e.at_stage("torus")),
    };
    let agrees = ctx.center_criterion_agrees();
    let structure_ok = center_dim_one
        || prop57
            .as_ref()
            .is_some_and(|p| (p.condition1 || p.condition2) && p.le_index_certified);
    let status = if cert.certified {
        VerdictStatus::Certified
    } else if structure_ok {
        VerdictStatus::StructureConfirmed
    } else {
        VerdictStatus::Inconclusive
    };
    Ok(OrbitVerdict {
        label: record.label.clone(),
        algebra: format!("{}{}", record.type_label, record.rank),
        dim_g: l.dim,
        rank: l.rank,
        dim_centralizer: ctx.dim_centralizer(),
        dim_center: ctx.dim_center(),
        rigid: record.rigid,
        index: cert,
        center_dim_one,
        prop57,
        center_criterion_agrees: agrees,
        status,
    })
}

/// Parse and validate an orbit table: every representative must reproduce
/// the recorded centralizer and center dimensions. All mismatches are
/// reported together.
pub fn load_orbit_table(path: &std::path::Path) -> Result<Vec<OrbitRecord>, Error> {
    let records = crate::orbits::load_orbit_table_text(path)?;
    let mut algebras: BTreeMap<(String, usize), LieAlgebra> = BTreeMap::new();
    let mut failures = Vec::new();
    for rec in &records {
        match &rec.rep {
            OrbitRep::Roots(roots) => {
                let key = (rec.type_label.to_string(), rec.rank);
                if !algebras.contains_key(&key) {
                    let rs = crate::roots::RootSystem::new(rec.type_label, rec.rank)?;
                    algebras.insert(key.clone(), LieAlgebra::from_root_system(rs));
                }
                let l = &algebras[&key];
                match OrbitContext::for_root_sum(l, roots) {
                    Ok(ctx) => {
                        if ctx.dim_centralizer() != rec.expected_dim_centralizer {
                            failures.push(format!(
                                "{}: dim g^e = {}, expected {}",
                                rec.label,
                                ctx.dim_centralizer(),
                                rec.expected_dim_centralizer
                            ));
                        } else if ctx.dim_center() != rec.expected_dim_center {
                            failures.push(format!(
                                "{}: dim z = {}, expected {}",
                                rec.label,
                                ctx.dim_center(),
                                rec.expected_dim_center
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{}: {}", rec.label, e)),
                }
            }
            OrbitRep::Partition(p) => {
                let real = crate::orbits::classical_realization(rec.type_label, rec.rank)?;
                match crate::orbits::nilpotent_from_partition(&real, p) {
                    Ok(e) => {
                        let ge = centralizer(&real.algebra, &[&e]);
                        if ge.dim() != rec.expected_dim_centralizer {
                            failures.push(format!(
                                "{}: dim g^e = {}, expected {}",
                                rec.label,
                                ge.dim(),
                                rec.expected_dim_centralizer
                            ));
                        } else {
                            let z = crate::centralizer::center_of(&real.algebra, &ge);
                            if z.dim() != rec.expected_dim_center {
                                failures.push(format!(
                                    "{}: dim z = {}, expected {}",
                                    rec.label,
                                    z.dim(),
                                    rec.expected_dim_center
                                ));
                            }
                        }
                    }
                    Err(e) => failures.push(format!("{}: {}", rec.label, e)),
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(records)
    } else {
        Err(Error::RecordValidation { label: "table".into(), msg: failures.join("; ") })
    }
}
