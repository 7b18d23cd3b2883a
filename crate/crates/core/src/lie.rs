//! Structure-constant Lie algebras and their basic invariants.
//!
//! An algebra is a field, a dimension n and the bracket table `[e_i, e_j]`
//! for i < j (antisymmetry is structural: only i < j is stored and the
//! diagonal is identically zero, which is the right notion of "alternating"
//! in characteristic 2 as well). Basis indices are 0-based in code; the
//! file format and error messages use the paper-style 1-based numbering.

use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{Matrix, RrefBuilder, Subspace};
use crate::rng::SplitMix64;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LieError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("change of basis requires an invertible matrix")]
    SingularMatrix,
    #[error("subspace is not contained in the center")]
    NotCentral,
    #[error("no independent pair of alternating forms found after {0} attempts")]
    BadLuck(usize),
}

/// A Jacobi-identity failure, reported as data (1-based triple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jacobi identity fails at triple ({}, {}, {})",
            self.triple.0, self.triple.1, self.triple.2
        )
    }
}

/// Basis-free summary of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub n: usize,
    pub dim_derived: usize,
    pub dim_center: usize,
    /// `None` when the algebra is not nilpotent; 0 for abelian.
    pub nilpotency_class: Option<usize>,
    /// Z(L) ⊆ L².
    pub is_stem: bool,
    /// dim L² when L² = Z(L) (generalized Heisenberg), absent otherwise.
    pub gen_heisenberg_rank: Option<usize>,
}

pub struct StructureConstants {
    field: FieldDescriptor,
    n: usize,
    /// Row `pair_index(i, j)` holds the coordinates of `[e_i, e_j]`, i < j.
    table: Vec<Vec<Scalar>>,
    // memoized invariants; reset on table mutation
    derived_cache: OnceLock<Subspace>,
    center_cache: OnceLock<Subspace>,
    class_cache: OnceLock<Option<usize>>,
}

impl Clone for StructureConstants {
    fn clone(&self) -> Self {
        StructureConstants {
            field: self.field,
            n: self.n,
            table: self.table.clone(),
            derived_cache: self.derived_cache.clone(),
            center_cache: self.center_cache.clone(),
            class_cache: self.class_cache.clone(),
        }
    }
}

impl PartialEq for StructureConstants {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.table == other.table
    }
}

impl Eq for StructureConstants {}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureConstants")
            .field("field", &self.field)
            .field("n", &self.n)
            .field("table", &self.table)
            .finish()
    }
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl StructureConstants {
    pub fn abelian(n: usize, field: FieldDescriptor) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        StructureConstants {
            field,
            n,
            table: vec![vec![field.zero(); n]; pairs],
            derived_cache: OnceLock::new(),
            center_cache: OnceLock::new(),
            class_cache: OnceLock::new(),
        }
    }

    fn invalidate_caches(&mut self) {
        self.derived_cache = OnceLock::new();
        self.center_cache = OnceLock::new();
        self.class_cache = OnceLock::new();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// Overwrites `[e_i, e_j]` (0-based, i < j).
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        assert!(i < j && j < self.n, "set_bracket requires i < j < n");
        assert_eq!(value.len(), self.n);
        let idx = pair_index(i, j, self.n);
        self.table[idx] = value;
        self.invalidate_caches();
    }

    /// Adds `coeff·e_k` to `[e_i, e_j]` (0-based, i < j).
    pub fn add_bracket_term(&mut self, i: usize, j: usize, k: usize, coeff: Scalar) {
        assert!(i < j && j < self.n && k < self.n);
        let idx = pair_index(i, j, self.n);
        self.table[idx][k] = self.field.add(&self.table[idx][k], &coeff);
        self.invalidate_caches();
    }

    /// `[e_i, e_j]` for any i, j, with the structural sign.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        if i == j {
            return vec![self.field.zero(); self.n];
        }
        if i < j {
            self.table[pair_index(i, j, self.n)].clone()
        } else {
            let f = &self.field;
            self.table[pair_index(j, i, self.n)]
                .iter()
                .map(|c| f.neg(c))
                .collect()
        }
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        if u.len() != self.n || v.len() != self.n {
            return Err(LieError::DimensionMismatch(format!(
                "expected vectors of length {}, got {} and {}",
                self.n,
                u.len(),
                v.len()
            )));
        }
        let f = &self.field;
        if u.iter().chain(v.iter()).any(|s| !scalar_matches(f, s)) {
            return Err(LieError::FieldMismatch);
        }
        let mut out = vec![f.zero(); self.n];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                // coefficient of e_i∧e_j in u∧v
                let c = f.sub(&f.mul(&u[i], &v[j]), &f.mul(&u[j], &v[i]));
                if f.is_zero(&c) {
                    continue;
                }
                let w = &self.table[pair_index(i, j, self.n)];
                for k in 0..self.n {
                    if f.is_zero(&w[k]) {
                        continue;
                    }
                    out[k] = f.add(&out[k], &f.mul(&c, &w[k]));
                }
            }
        }
        Ok(out)
    }

    /// `[u, e_k]`, exploiting the sparsity of the second argument.
    fn bracket_with_basis(&self, u: &[Scalar], k: usize) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.n];
        for i in 0..self.n {
            if i == k || f.is_zero(&u[i]) {
                continue;
            }
            let (lo, hi, flip) = if i < k { (i, k, false) } else { (k, i, true) };
            let row = &self.table[pair_index(lo, hi, self.n)];
            for t in 0..self.n {
                if f.is_zero(&row[t]) {
                    continue;
                }
                let term = f.mul(&u[i], &row[t]);
                out[t] = if flip {
                    f.sub(&out[t], &term)
                } else {
                    f.add(&out[t], &term)
                };
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple, reporting the
    /// first violation (1-based) as data.
    ///
    /// When the derived subalgebra is central every double bracket
    /// vanishes, so the identity holds without scanning triples; that
    /// covers the class-two algebras this crate revolves around.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let derived = self.derived_subalgebra();
        let central = (0..derived.dim()).all(|r| {
            let row = derived.basis().row_vec(r);
            (0..self.n).all(|k| {
                self.bracket_with_basis(&row, k)
                    .iter()
                    .all(|v| self.field.is_zero(v))
            })
        });
        if central {
            return Ok(());
        }
        let f = &self.field;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for k in (j + 1)..self.n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let a = self.bracket(&self.bracket_basis(i, j), &ek).unwrap();
                    let b = self.bracket(&self.bracket_basis(j, k), &ei).unwrap();
                    let c = self.bracket(&self.bracket_basis(k, i), &ej).unwrap();
                    let mut residual = vec![f.zero(); self.n];
                    let mut nonzero = false;
                    for t in 0..self.n {
                        residual[t] = f.add(&f.add(&a[t], &b[t]), &c[t]);
                        nonzero |= !f.is_zero(&residual[t]);
                    }
                    if nonzero {
                        return Err(JacobiViolation {
                            triple: (i + 1, j + 1, k + 1),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        v
    }

    /// L² = span of all `[e_i, e_j]` (memoized).
    pub fn derived_subalgebra(&self) -> Subspace {
        self.derived_cache
            .get_or_init(|| Subspace::from_rows(self.table.clone(), self.n, self.field))
            .clone()
    }

    /// Z(L), computed as the kernel of v ↦ ([e_i, v])_i stacked (memoized).
    pub fn center(&self) -> Subspace {
        self.center_cache
            .get_or_init(|| {
                let f = self.field;
                let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.n * self.n);
                for i in 0..self.n {
                    // ad(e_i): column j holds [e_i, e_j]
                    let cols: Vec<Vec<Scalar>> =
                        (0..self.n).map(|j| self.bracket_basis(i, j)).collect();
                    for k in 0..self.n {
                        rows.push((0..self.n).map(|j| cols[j][k].clone()).collect());
                    }
                }
                Matrix::from_rows(rows, self.n, f).kernel()
            })
            .clone()
    }

    /// L ⊇ L² ⊇ [L², L] ⊇ … until stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.n, self.field)];
        // the second term is the derived subalgebra, already memoized
        let derived = self.derived_subalgebra();
        if derived == series[0] {
            return series;
        }
        let mut done = derived.dim() == 0;
        series.push(derived);
        while !done {
            let prev = series.last().unwrap();
            let mut b = RrefBuilder::new(self.n, self.field);
            for row in prev.basis_rows() {
                for j in 0..self.n {
                    b.insert(self.bracket_with_basis(&row, j));
                }
            }
            let next = b.into_subspace();
            if next == *series.last().unwrap() {
                break;
            }
            done = next.dim() == 0;
            series.push(next);
        }
        series
    }

    /// `None` when not nilpotent; 0 for the abelian algebras, otherwise the
    /// smallest c with L^(c+1) = 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        *self.class_cache.get_or_init(|| {
            if self.derived_subalgebra().dim() == 0 {
                return Some(0);
            }
            let series = self.lower_central_series();
            let last = series.last().unwrap();
            if last.dim() != 0 {
                return None;
            }
            Some(series.len() - 1)
        })
    }

    pub fn report(&self) -> AlgebraReport {
        let derived = self.derived_subalgebra();
        let center = self.center();
        let is_stem = center.is_contained_in(&derived);
        let gen_heisenberg_rank = if derived == center && derived.dim() > 0 {
            Some(derived.dim())
        } else {
            None
        };
        AlgebraReport {
            n: self.n,
            dim_derived: derived.dim(),
            dim_center: center.dim(),
            nilpotency_class: self.nilpotency_class(),
            is_stem,
            gen_heisenberg_rank,
        }
    }

    /// New structure constants after the change of variables `S`:
    /// bracket′(u, v) = S⁻¹·bracket(S·u, S·v).
    pub fn change_of_basis(&self, s: &Matrix) -> Result<StructureConstants, LieError> {
        if *s.field() != self.field {
            return Err(LieError::FieldMismatch);
        }
        if s.rows() != self.n || s.cols() != self.n {
            return Err(LieError::DimensionMismatch(format!(
                "change of basis needs a {n}x{n} matrix",
                n = self.n
            )));
        }
        let s_inv = s.inverse().map_err(|_| LieError::SingularMatrix)?;
        let st = s.transpose();
        let mut out = StructureConstants::abelian(self.n, self.field);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let si = st.row(i); // column i of S
                let sj = st.row(j);
                let w = self.bracket(si, sj)?;
                let w = s_inv.mul_vec(&w).expect("dimensions agree");
                out.set_bracket(i, j, w);
            }
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &StructureConstants) -> Result<StructureConstants, LieError> {
        if self.field != other.field {
            return Err(LieError::FieldMismatch);
        }
        let n = self.n + other.n;
        let f = &self.field;
        let mut out = StructureConstants::abelian(n, self.field);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let mut w = self.table[pair_index(i, j, self.n)].clone();
                w.extend(vec![f.zero(); other.n]);
                out.set_bracket(i, j, w);
            }
        }
        for i in 0..other.n {
            for j in (i + 1)..other.n {
                let mut w = vec![f.zero(); self.n];
                w.extend(other.table[pair_index(i, j, other.n)].clone());
                out.set_bracket(self.n + i, self.n + j, w);
            }
        }
        Ok(out)
    }

    /// L/N for a central subspace N, on the deterministic complement basis
    /// (standard vectors at non-pivot indices of N, in index order).
    pub fn quotient_by_central(&self, nsub: &Subspace) -> Result<StructureConstants, LieError> {
        if nsub.ambient_dim() != self.n || *nsub.field() != self.field {
            return Err(LieError::DimensionMismatch("quotient subspace ambient".into()));
        }
        if !nsub.is_contained_in(&self.center()) {
            return Err(LieError::NotCentral);
        }
        let complement: Vec<usize> = (0..self.n).filter(|i| !nsub.pivots().contains(i)).collect();
        let m = complement.len();
        let mut out = StructureConstants::abelian(m, self.field);
        for a in 0..m {
            for b in (a + 1)..m {
                let w = self.bracket_basis(complement[a], complement[b]);
                let reduced = nsub.reduce(&w);
                let v: Vec<Scalar> = complement.iter().map(|&c| reduced[c].clone()).collect();
                out.set_bracket(a, b, v);
            }
        }
        Ok(out)
    }

    /// The [N1, Lemma 3.3] recognizer: a class-2 algebra with dim L² = 1 is
    /// H(m)⊕A(k); returns (m, k).
    pub fn heisenberg_split(&self) -> Option<(usize, usize)> {
        let derived = self.derived_subalgebra();
        if derived.dim() != 1 || self.nilpotency_class() != Some(2) {
            return None;
        }
        let complement: Vec<usize> = (0..self.n).filter(|i| !derived.pivots().contains(i)).collect();
        let dim_v = complement.len();
        let f = self.field;
        let mut form = Matrix::zero(dim_v, dim_v, f);
        for a in 0..dim_v {
            for b in 0..dim_v {
                let w = self.bracket_basis(complement[a], complement[b]);
                let coeff = derived.coordinates(&w).expect("brackets lie in L²")[0].clone();
                form.set(a, b, coeff);
            }
        }
        let rank = form.rank();
        debug_assert_eq!(rank % 2, 0);
        Some((rank / 2, dim_v - rank))
    }

    /// Deterministic class-two sample: two independent random alternating
    /// forms B₁, B₂ on F^dim_v, assembled as `[u, v] = B₁(u,v)·z + B₂(u,v)·z₁`
    /// with z, z₁ the last two basis vectors. Always Jacobi-valid.
    pub fn random_class2(
        dim_v: usize,
        field: FieldDescriptor,
        seed: u64,
    ) -> Result<StructureConstants, LieError> {
        assert!(dim_v >= 3);
        let mut rng = SplitMix64::new(seed);
        let f = &field;
        for _attempt in 0..1000 {
            let draw = |rng: &mut SplitMix64| -> Vec<Scalar> {
                (0..dim_v * (dim_v - 1) / 2).map(|_| rng.scalar(f)).collect()
            };
            let b1 = draw(&mut rng);
            let b2 = draw(&mut rng);
            // independence of B1, B2 as matrices
            let stack = Matrix::from_rows(vec![b1.clone(), b2.clone()], b1.len(), field);
            if stack.rank() != 2 {
                continue;
            }
            let n = dim_v + 2;
            let mut out = StructureConstants::abelian(n, field);
            let mut t = 0;
            for i in 0..dim_v {
                for j in (i + 1)..dim_v {
                    let mut w = vec![f.zero(); n];
                    w[dim_v] = b1[t].clone();
                    w[dim_v + 1] = b2[t].clone();
                    out.set_bracket(i, j, w);
                    t += 1;
                }
            }
            return Ok(out);
        }
        Err(LieError::BadLuck(1000))
    }
}

fn scalar_matches(f: &FieldDescriptor, s: &Scalar) -> bool {
    matches!(
        (f, s),
        (FieldDescriptor::Rationals, Scalar::Q(_)) | (FieldDescriptor::Prime(_), Scalar::Fp(_))
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    /// Heisenberg H(1): [e1, e2] = e3.
    fn heisenberg1(field: FieldDescriptor) -> StructureConstants {
        let mut l = StructureConstants::abelian(3, field);
        l.add_bracket_term(0, 1, 2, field.one());
        l
    }

    #[test]
    fn bracket_of_heisenberg_generators() {
        let l = heisenberg1(q());
        let out = l.bracket(&l.basis_vector(0), &l.basis_vector(1)).unwrap();
        assert_eq!(out, l.basis_vector(2));
    }

    #[test]
    fn bracket_alternates() {
        let l = heisenberg1(q());
        let f = q();
        let v = vec![f.from_i64(2), f.from_i64(-3), f.from_i64(5)];
        let out = l.bracket(&v, &v).unwrap();
        assert!(out.iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn bracket_expands_bilinearly() {
        // L_{5,8}: [x1,x2]=x4, [x1,x3]=x5; bracket(x1+x2, x2+x3) = x4+x5
        let f = q();
        let mut l = StructureConstants::abelian(5, f);
        l.add_bracket_term(0, 1, 3, f.one());
        l.add_bracket_term(0, 2, 4, f.one());
        let mut u = vec![f.zero(); 5];
        u[0] = f.one();
        u[1] = f.one();
        let mut v = vec![f.zero(); 5];
        v[1] = f.one();
        v[2] = f.one();
        let out = l.bracket(&u, &v).unwrap();
        let mut expected = vec![f.zero(); 5];
        expected[3] = f.one();
        expected[4] = f.one();
        assert_eq!(out, expected);
    }

    #[test]
    fn validate_accepts_sl2_like_table() {
        // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1 is a Lie algebra over Q
        let f = q();
        let mut l = StructureConstants::abelian(3, f);
        l.add_bracket_term(0, 1, 2, f.one());
        l.add_bracket_term(0, 2, 1, f.one());
        l.add_bracket_term(1, 2, 0, f.one());
        assert_eq!(l.validate(), Ok(()));
        // and it is not nilpotent: the series stabilizes at the full space
        assert_eq!(l.nilpotency_class(), None);
    }

    #[test]
    fn validate_reports_first_violation() {
        // [e1,e2]=e2, [e1,e3]=e2, [e2,e3]=e1 breaks Jacobi at (1,2,3)
        let f = q();
        let mut l = StructureConstants::abelian(3, f);
        l.add_bracket_term(0, 1, 1, f.one());
        l.add_bracket_term(0, 2, 1, f.one());
        l.add_bracket_term(1, 2, 0, f.one());
        let err = l.validate().unwrap_err();
        assert_eq!(err.triple, (1, 2, 3));
        assert!(err.residual.iter().any(|x| !f.is_zero(x)));
    }

    #[test]
    fn abelian_invariants() {
        let a = StructureConstants::abelian(4, q());
        assert_eq!(a.derived_subalgebra().dim(), 0);
        assert_eq!(a.center().dim(), 4);
        assert_eq!(a.nilpotency_class(), Some(0));
        let r = a.report();
        assert!(!r.is_stem || r.dim_center == 0);
        assert_eq!(r.gen_heisenberg_rank, None);
    }

    #[test]
    fn heisenberg_invariants() {
        for field in [q(), FieldDescriptor::prime(2).unwrap()] {
            let l = heisenberg1(field);
            assert_eq!(l.validate(), Ok(()));
            let r = l.report();
            assert_eq!((r.dim_derived, r.dim_center), (1, 1));
            assert_eq!(r.nilpotency_class, Some(2));
            assert!(r.is_stem);
            assert_eq!(r.gen_heisenberg_rank, Some(1));
        }
    }

    #[test]
    fn change_of_basis_identity_and_swap() {
        let l = heisenberg1(q());
        let id = Matrix::identity(3, q());
        assert_eq!(l.change_of_basis(&id).unwrap(), l);

        // swapping e1 and e2 flips the sign of the bracket
        let s = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]], q());
        let swapped = l.change_of_basis(&s).unwrap();
        let out = swapped.bracket_basis(0, 1);
        assert_eq!(out[2], q().from_i64(-1));

        let singular = Matrix::zero(3, 3, q());
        assert_eq!(l.change_of_basis(&singular), Err(LieError::SingularMatrix));
    }

    #[test]
    fn report_is_basis_invariant() {
        let l = heisenberg1(q());
        for seed in 0..10u64 {
            let s = crate::matrix::random_invertible(3, q(), seed);
            let m = l.change_of_basis(&s).unwrap();
            assert_eq!(m.validate(), Ok(()));
            assert_eq!(m.report(), l.report());
        }
    }

    #[test]
    fn direct_sum_blocks() {
        let h = heisenberg1(q());
        let a = StructureConstants::abelian(2, q());
        let s = h.direct_sum(&a).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.derived_subalgebra().dim(), 1);
        assert_eq!(s.center().dim(), 3);
        assert_eq!(
            s.center().dim(),
            h.center().dim() + a.center().dim()
        );
        assert_eq!(
            h.direct_sum(&StructureConstants::abelian(1, FieldDescriptor::prime(3).unwrap())),
            Err(LieError::FieldMismatch)
        );
    }

    #[test]
    fn central_quotient() {
        let l = heisenberg1(q());
        let z = l.derived_subalgebra();
        let quot = l.quotient_by_central(&z).unwrap();
        assert_eq!(quot.n(), 2);
        assert_eq!(quot.derived_subalgebra().dim(), 0);

        // a non-central subspace is rejected
        let e1 = Subspace::from_rows(vec![l.basis_vector(0)], 3, q());
        assert_eq!(l.quotient_by_central(&e1), Err(LieError::NotCentral));
    }

    #[test]
    fn quotient_by_full_center_is_abelian() {
        let l = heisenberg1(q());
        let quot = l.quotient_by_central(&l.center()).unwrap();
        assert_eq!(quot.derived_subalgebra().dim(), 0);
        assert_eq!(quot.n(), 2);
        assert_eq!(quot.validate(), Ok(()));
    }

    #[test]
    fn random_class2_contract() {
        for field in [q(), FieldDescriptor::prime(3).unwrap()] {
            for seed in [0u64, 7, 42] {
                let l = StructureConstants::random_class2(4, field, seed).unwrap();
                assert_eq!(l.validate(), Ok(()));
                assert_eq!(l.n(), 6);
                assert_eq!(l.derived_subalgebra().dim(), 2);
                assert_eq!(l.nilpotency_class(), Some(2));
                assert!(l.derived_subalgebra().is_contained_in(&l.center()));
                assert_eq!(
                    l,
                    StructureConstants::random_class2(4, field, seed).unwrap()
                );
            }
        }
    }

    #[test]
    fn heisenberg_split_recognizer() {
        // H(1) ⊕ A(2): m = 1, k = 2
        let l = heisenberg1(q())
            .direct_sum(&StructureConstants::abelian(2, q()))
            .unwrap();
        assert_eq!(l.heisenberg_split(), Some((1, 2)));
        // dim L² = 2 input is rejected
        let two = StructureConstants::random_class2(4, q(), 1).unwrap();
        assert_eq!(two.heisenberg_split(), None);
    }
}
