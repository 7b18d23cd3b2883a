//! The pencil of alternating forms attached to a class-two algebra with
//! two-dimensional derived subalgebra, and its congruence invariants.
//!
//! For such an algebra the bracket descends to V = L/L² and is encoded by
//! the pair (B₁, B₂) of alternating forms reading off the two coordinates
//! of `[u, v]` in the deterministic RREF basis of L². The basis-independent
//! data of the pencil {α·B₁ + β·B₂} — its generic rank, the directions
//! where the rank drops, the drop ranks, and the ranks of each degenerate
//! member restricted to the radical of another — make up the
//! [`Fingerprint`] used for catalog matching.
//!
//! Over GF(p) the p+1 directions are enumerated exactly. Over Q the search
//! is Las Vegas: the generic rank is the maximum over a fixed sample of
//! directions, drop candidates are the rational roots of the gcd of a
//! sample of g×g minor polynomials of B₁ + λ·B₂, and every reported drop
//! is verified by exact elimination. Randomness affects only whether an
//! irrational drop direction is *resolved*; when the minor gcd keeps
//! positive degree after the verified roots are removed, the fingerprint
//! carries `nondrop_flag` instead of guessing.

use crate::field::{FieldDescriptor, Scalar};
use crate::lie::StructureConstants;
use crate::matrix::Matrix;
use crate::poly::{poly_gcd, rational_roots, UniPoly};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use thiserror::Error;

/// Largest prime modulus the direction enumeration will sweep.
pub const DEFAULT_PRIME_CAP: u64 = 101;

/// Fixed seed for the Q-side sampling; fingerprints must be reproducible
/// across processes.
const Q_SAMPLE_SEED: u64 = 0x6E69_6C32_7631;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PencilError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("prime field GF({p}) exceeds the direction-enumeration cap {cap}")]
    FieldCapExceeded { p: u64, cap: u64 },
}

/// A projective direction [α:β], normalized to (1, λ) or (0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    alpha: Scalar,
    beta: Scalar,
}

impl Direction {
    pub fn finite(field: &FieldDescriptor, lambda: Scalar) -> Self {
        Direction {
            alpha: field.one(),
            beta: lambda,
        }
    }

    pub fn infinity(field: &FieldDescriptor) -> Self {
        Direction {
            alpha: field.zero(),
            beta: field.one(),
        }
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn is_infinity(&self) -> bool {
        is_zero_scalar(&self.alpha)
    }

    /// Finite directions sorted by λ, the infinite direction last.
    fn sort_key(&self) -> (bool, Scalar) {
        (self.is_infinity(), self.beta.clone())
    }
}

fn is_zero_scalar(s: &Scalar) -> bool {
    match s {
        Scalar::Fp(v) => *v == 0,
        Scalar::Q(r) => r.is_zero(),
    }
}

impl PartialOrd for Direction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Direction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}:{}]", self.alpha, self.beta)
    }
}

/// The pair (B₁, B₂) on V = L/L², with the bases that produced it.
#[derive(Debug, Clone)]
pub struct AlternatingPencil {
    field: FieldDescriptor,
    dim_v: usize,
    b1: Matrix,
    b2: Matrix,
    /// RREF basis of L² (two rows of length n).
    derived_basis: Matrix,
    /// Indices of the standard vectors spanning the complement of L².
    complement: Vec<usize>,
}

impl AlternatingPencil {
    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn b1(&self) -> &Matrix {
        &self.b1
    }

    pub fn b2(&self) -> &Matrix {
        &self.b2
    }

    pub fn derived_basis(&self) -> &Matrix {
        &self.derived_basis
    }

    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    /// The member α·B₁ + β·B₂.
    pub fn member(&self, dir: &Direction) -> Matrix {
        self.b1
            .linear_comb(&dir.alpha, &self.b2, &dir.beta)
            .expect("pencil matrices share shape and field")
    }

    /// rank(α·B₁ + β·B₂); always even.
    pub fn rank_at(&self, dir: &Direction) -> usize {
        let r = self.member(dir).rank();
        debug_assert_eq!(r % 2, 0, "alternating forms have even rank");
        r
    }
}

/// Extracts the pencil of a class-2 algebra with dim L² = 2, using the
/// deterministic RREF basis of L² and the standard complement of V.
pub fn extract(l: &StructureConstants) -> Result<AlternatingPencil, PencilError> {
    let derived = l.derived_subalgebra();
    if derived.dim() != 2 {
        return Err(PencilError::HypothesisViolated(format!(
            "dim L² = {}, need 2",
            derived.dim()
        )));
    }
    if l.nilpotency_class() != Some(2) {
        return Err(PencilError::HypothesisViolated(
            "nilpotency class is not 2".into(),
        ));
    }
    let field = *l.field();
    let complement: Vec<usize> = (0..l.n()).filter(|i| !derived.pivots().contains(i)).collect();
    let dim_v = complement.len();
    let mut b1 = Matrix::zero(dim_v, dim_v, field);
    let mut b2 = Matrix::zero(dim_v, dim_v, field);
    for a in 0..dim_v {
        for b in (a + 1)..dim_v {
            let w = l.bracket_basis(complement[a], complement[b]);
            let coords = derived
                .coordinates(&w)
                .expect("brackets lie in the derived subalgebra");
            b1.set(a, b, coords[0].clone());
            b1.set(b, a, field.neg(&coords[0]));
            b2.set(a, b, coords[1].clone());
            b2.set(b, a, field.neg(&coords[1]));
        }
    }
    Ok(AlternatingPencil {
        field,
        dim_v,
        b1,
        b2,
        derived_basis: derived.basis().clone(),
        complement,
    })
}

/// Outcome of the drop-direction search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropReport {
    pub generic_rank: usize,
    /// Directions with rank strictly below the generic rank, sorted.
    pub drops: Vec<(Direction, usize)>,
    /// Q only: a minor-gcd factor survived root removal, so a drop at an
    /// irrational direction may exist.
    pub nondrop_flag: bool,
}

/// Finds the generic rank and all rank-dropping directions.
pub fn drop_directions(p: &AlternatingPencil, cap: u64) -> Result<DropReport, PencilError> {
    match p.field {
        FieldDescriptor::Prime(q) => {
            if q > cap {
                return Err(PencilError::FieldCapExceeded { p: q, cap });
            }
            let mut dirs: Vec<Direction> = (0..q)
                .map(|t| Direction::finite(&p.field, Scalar::Fp(t)))
                .collect();
            dirs.push(Direction::infinity(&p.field));
            let ranks: Vec<usize> = dirs.iter().map(|d| p.rank_at(d)).collect();
            let generic = ranks.iter().copied().max().unwrap_or(0);
            let drops: Vec<(Direction, usize)> = dirs
                .into_iter()
                .zip(ranks)
                .filter(|(_, r)| *r < generic)
                .collect();
            debug_assert!(drops.len() <= p.dim_v);
            Ok(DropReport {
                generic_rank: generic,
                drops,
                nondrop_flag: false,
            })
        }
        FieldDescriptor::Rationals => Ok(drop_directions_q(p)),
    }
}

fn q_of(i: i64, j: i64) -> Scalar {
    Scalar::Q(BigRational::new(BigInt::from(i), BigInt::from(j)))
}

fn drop_directions_q(p: &AlternatingPencil) -> DropReport {
    let field = p.field;
    let mut rng = SplitMix64::new(Q_SAMPLE_SEED);
    let mut samples: Vec<Scalar> = vec![
        q_of(0, 1),
        q_of(1, 1),
        q_of(-1, 1),
        q_of(2, 1),
        q_of(-2, 1),
        q_of(3, 1),
        q_of(1, 2),
        q_of(-1, 2),
    ];
    for _ in 0..8 {
        samples.push(q_of(rng.small_int(50), 1 + rng.below(9) as i64));
    }
    let infinity = Direction::infinity(&field);
    let rank_inf = p.rank_at(&infinity);
    let mut generic = rank_inf;
    let mut generic_at: Option<Scalar> = None;
    for t in &samples {
        let r = p.rank_at(&Direction::finite(&field, t.clone()));
        if r > generic {
            generic_at = Some(t.clone());
            generic = r;
        } else if r == generic && generic_at.is_none() {
            generic_at = Some(t.clone());
        }
    }
    if generic == 0 {
        return DropReport {
            generic_rank: 0,
            drops: Vec::new(),
            nondrop_flag: false,
        };
    }
    // at most dim_v/2 directions can be degenerate, so some finite sample
    // is generic whenever any finite direction is
    let t0 = generic_at.unwrap_or_else(|| samples[0].clone());
    let mut drops: Vec<(Direction, usize)> = Vec::new();
    if rank_inf < generic {
        drops.push((infinity, rank_inf));
    }
    let (finite_drops, nondrop_flag) = finite_drop_search(p, generic, &t0, &mut rng);
    for (lam, r) in finite_drops {
        drops.push((Direction::finite(&field, Scalar::Q(lam)), r));
    }
    drops.sort_by(|a, b| a.0.cmp(&b.0));
    DropReport {
        generic_rank: generic,
        drops,
        nondrop_flag,
    }
}

/// Finds the finite rational drop directions as verified rational roots of
/// the gcd of g×g minor polynomials of B₁ + λ·B₂.
///
/// Every finite drop annihilates *every* g×g minor, so it divides already
/// the first (rank-revealing, hence nonzero) minor polynomial. Further
/// minors from the sample (at most 40, per the Las Vegas design) are
/// consulted only while the gcd retains factors beyond the verified roots;
/// once the residual is constant the drop set is provably complete and the
/// loop stops. If the sample is exhausted with a positive-degree residual,
/// `nondrop_flag` is raised: a drop at an irrational direction may exist.
fn finite_drop_search(
    p: &AlternatingPencil,
    g: usize,
    t0: &Scalar,
    rng: &mut SplitMix64,
) -> (Vec<(BigRational, usize)>, bool) {
    let q = FieldDescriptor::Rationals;
    let n = p.dim_v;
    // integer-cleared pencil D·B1, D·B2 (a constant scale does not move roots)
    let mut denom_lcm = BigInt::one();
    for m in [&p.b1, &p.b2] {
        for r in 0..n {
            for c in 0..n {
                denom_lcm = denom_lcm.lcm(m.get(r, c).as_rational().unwrap().denom());
            }
        }
    }
    let clear = |m: &Matrix| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (m.get(r, c).as_rational().unwrap() * BigRational::from(denom_lcm.clone()))
                            .to_integer()
                    })
                    .collect()
            })
            .collect()
    };
    let a1 = clear(&p.b1);
    let a2 = clear(&p.b2);

    // rank-revealing row and column sets at the generic sample point; the
    // resulting minor is generically nonsingular, so the gcd has degree ≤ g
    let m0 = p.member(&Direction::finite(&q, t0.clone()));
    let rows0 = m0.transpose().rref().1;
    let cols0 = select_rows(&m0, &rows0).rref().1;
    debug_assert_eq!(rows0.len(), g);
    debug_assert_eq!(cols0.len(), g);

    let total = n_choose(n, g).saturating_mul(n_choose(n, g));
    let sample_count = total.min(40) as usize;
    let all = if total <= 40 {
        Some(all_minor_indices(n, g))
    } else {
        None
    };
    let mut gcd = UniPoly::zero(q);
    let mut seen: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut verified: Vec<(BigRational, usize)> = Vec::new();
    let mut refuted: Vec<BigRational> = Vec::new();
    let mut residual_positive = false;
    let mut nonzero_minors = 0usize;
    for idx in 0..sample_count {
        let (rows, cols) = match &all {
            Some(list) => list[idx].clone(),
            None if idx == 0 => (rows0.clone(), cols0.clone()),
            None => (random_subset(n, g, rng), random_subset(n, g, rng)),
        };
        if seen.contains(&(rows.clone(), cols.clone())) {
            continue;
        }
        seen.push((rows.clone(), cols.clone()));
        let poly = minor_polynomial(&a1, &a2, &rows, &cols, g);
        if poly.is_zero() {
            continue;
        }
        nonzero_minors += 1;
        let next = poly_gcd(&gcd, &poly);
        let changed = next != gcd;
        gcd = next;
        if gcd.degree() == Some(0) {
            residual_positive = false;
            break;
        }
        // A single minor carries factors of its own on top of the common
        // drop divisor; root extraction on those can be expensive, so it
        // waits until the gcd has either stabilized across two minors,
        // shrunk to a quadratic squarefree part (solved exactly), or the
        // sample is exhausted.
        let sq = gcd.squarefree_part();
        let settled = (!changed && nonzero_minors >= 2)
            || sq.degree().is_some_and(|d| d <= 2)
            || idx + 1 == sample_count;
        if !settled {
            residual_positive = true;
            continue;
        }
        for lam in rational_roots(&sq).unwrap_or_default() {
            if verified.iter().any(|(v, _)| *v == lam) || refuted.contains(&lam) {
                continue;
            }
            let r = p.rank_at(&Direction::finite(&q, Scalar::Q(lam.clone())));
            if r < g {
                verified.push((lam, r));
            } else {
                refuted.push(lam);
            }
        }
        // strip the verified roots (with multiplicity) and stop when
        // nothing unexplained remains
        let mut residual = gcd.clone();
        for (lam, _) in &verified {
            let linear = UniPoly::new(vec![Scalar::Q(-lam.clone()), q.one()], q);
            loop {
                let (quo, rem) = residual.divrem(&linear);
                if rem.is_zero() && !quo.is_zero() {
                    residual = quo;
                } else {
                    break;
                }
            }
        }
        residual_positive = residual.degree().is_some_and(|d| d > 0);
        if !residual_positive {
            break;
        }
    }
    (verified, residual_positive)
}

fn select_rows(m: &Matrix, rows: &[usize]) -> Matrix {
    Matrix::from_rows(
        rows.iter().map(|&r| m.row_vec(r)).collect(),
        m.cols(),
        *m.field(),
    )
}

fn n_choose(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn all_minor_indices(n: usize, g: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let subsets = all_subsets(n, g);
    let mut out = Vec::new();
    for r in &subsets {
        for c in &subsets {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

fn all_subsets(n: usize, g: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if g > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..g).collect();
    loop {
        out.push(cur.clone());
        let mut i = g;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - g {
                break;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..g {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn random_subset(n: usize, g: usize, rng: &mut SplitMix64) -> Vec<usize> {
    let mut set: Vec<usize> = Vec::with_capacity(g);
    while set.len() < g {
        let v = rng.below(n as u64) as usize;
        if !set.contains(&v) {
            set.push(v);
        }
    }
    set.sort_unstable();
    set
}

/// det of (A₁ + λ·A₂)[rows, cols] as a polynomial in λ, by interpolation
/// at λ = 0..=g (degree ≤ g, so g+1 points reconstruct it exactly).
fn minor_polynomial(
    a1: &[Vec<BigInt>],
    a2: &[Vec<BigInt>],
    rows: &[usize],
    cols: &[usize],
    g: usize,
) -> UniPoly {
    let mut values = Vec::with_capacity(g + 1);
    for t in 0..=g {
        let tt = BigInt::from(t);
        let sub: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| &a1[r][c] + &tt * &a2[r][c]).collect())
            .collect();
        values.push(det_bareiss(sub));
    }
    if values.iter().all(|v| v.is_zero()) {
        return UniPoly::zero(FieldDescriptor::Rationals);
    }
    interpolate(&values)
}

/// Fraction-free Bareiss determinant.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = t;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Lagrange interpolation through the points (i, values[i]).
fn interpolate(values: &[BigInt]) -> UniPoly {
    let q = FieldDescriptor::Rationals;
    let mut acc = UniPoly::zero(q);
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = UniPoly::new(vec![q.one()], q);
        let mut denom = BigRational::one();
        for j in 0..values.len() {
            if i == j {
                continue;
            }
            let lin = UniPoly::new(
                vec![Scalar::Q(BigRational::from(BigInt::from(-(j as i64)))), q.one()],
                q,
            );
            basis = basis.mul(&lin);
            denom *= BigRational::from(BigInt::from(i as i64 - j as i64));
        }
        let scale = Scalar::Q(BigRational::from(v.clone()) / denom);
        let scaled = UniPoly::new(
            basis.coeffs().iter().map(|c| q.mul(c, &scale)).collect(),
            q,
        );
        acc = acc.add(&scaled);
    }
    acc
}

/// Isomorphism-invariant summary of the pencil (plus ambient dimensions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub n: usize,
    pub dim_center: usize,
    pub dim_derived: usize,
    pub dim_v: usize,
    pub generic_rank: usize,
    /// Sorted multiset of drop ranks.
    pub drops: Vec<usize>,
    /// Sorted multiset over ordered pairs (w, w′) of distinct drop
    /// directions of rank(B_{w′} restricted to radical(B_w)).
    pub cross: Vec<usize>,
    pub nondrop_flag: bool,
}

impl Fingerprint {
    /// Canonical JSON object (sorted keys).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "dim_center": self.dim_center,
            "dim_derived": self.dim_derived,
            "dim_v": self.dim_v,
            "generic_rank": self.generic_rank,
            "drops": self.drops,
            "cross": self.cross,
            "nondrop_flag": self.nondrop_flag,
        })
    }
}

/// rank of B_{w′} restricted to the radical of B_w.
///
/// For R = ker(B_w), a vector v ∈ R lies in the radical of the restricted
/// form exactly when B_{w′}·v lands in Im(B_w), so the kernel of the block
/// map (v, u) ↦ (B_w·v, B_{w′}·v + B_w·u) has dimension
/// dim radical(B_{w′}|R) + dim R, which rearranges to
/// rank(B_{w′}|R) = rank(block) − 2·rank(B_w) — three rank computations,
/// no radical basis needed.
pub fn cross_restriction_rank(
    p: &AlternatingPencil,
    w: &Direction,
    rank_w: usize,
    w2: &Direction,
) -> usize {
    let n = p.dim_v;
    let f = p.field;
    let bw = p.member(w);
    let bw2 = p.member(w2);
    let mut block = Matrix::zero(2 * n, 2 * n, f);
    for r in 0..n {
        for c in 0..n {
            block.set(r, c, bw.get(r, c).clone());
            block.set(n + r, c, bw2.get(r, c).clone());
            block.set(n + r, n + c, bw.get(r, c).clone());
        }
    }
    block.rank() - 2 * rank_w
}

/// Computes the full fingerprint of a class-2 algebra with dim L² = 2.
pub fn fingerprint(l: &StructureConstants) -> Result<Fingerprint, PencilError> {
    fingerprint_with_cap(l, DEFAULT_PRIME_CAP)
}

pub fn fingerprint_with_cap(l: &StructureConstants, cap: u64) -> Result<Fingerprint, PencilError> {
    let pencil = extract(l)?;
    let report = drop_directions(&pencil, cap)?;
    let mut cross = Vec::new();
    for (w, rank_w) in &report.drops {
        for (w2, _) in &report.drops {
            if w2 == w {
                continue;
            }
            cross.push(cross_restriction_rank(&pencil, w, *rank_w, w2));
        }
    }
    cross.sort_unstable();
    let mut drops: Vec<usize> = report.drops.iter().map(|(_, r)| *r).collect();
    drops.sort_unstable();
    Ok(Fingerprint {
        n: l.n(),
        dim_center: l.center().dim(),
        dim_derived: 2,
        dim_v: pencil.dim_v(),
        generic_rank: report.generic_rank,
        drops,
        cross,
        nondrop_flag: report.nondrop_flag,
    })
}
