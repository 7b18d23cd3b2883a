//! Dense exact matrices and subspaces over a [`FieldDescriptor`].
//!
//! Row reduction is fully deterministic: columns are scanned left to right
//! and the topmost available row with a nonzero entry becomes the pivot.
//! [`Subspace`] stores its basis in reduced row-echelon form, so two
//! subspaces are equal exactly when their basis matrices are entry-wise
//! equal. That syntactic equality is relied on throughout the crate
//! (center = derived-subalgebra tests, fingerprint comparisons).

use crate::field::{FieldDescriptor, Scalar};
use crate::rng::SplitMix64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
}

/// A rows×cols matrix in row-major order; every entry belongs to `field`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldDescriptor) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldDescriptor) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldDescriptor) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            field,
            data,
        }
    }

    /// Builds from small integers; handy in tests and constructors.
    pub fn from_i64(rows: &[&[i64]], field: FieldDescriptor) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            cols,
            field,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} · {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix cols {} vs vector {}",
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) || f.is_zero(&v[j]) {
                    continue;
                }
                out[i] = f.add(&out[i], &f.mul(a, &v[j]));
            }
        }
        Ok(out)
    }

    /// `a·self + b·rhs`, used for pencil members.
    pub fn linear_comb(&self, a: &Scalar, rhs: &Matrix, b: &Scalar) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch("linear_comb shapes".into()));
        }
        let f = &self.field;
        let mut out = Matrix::zero(self.rows, self.cols, self.field);
        for i in 0..self.rows * self.cols {
            out.data[i] = f.add(&f.mul(a, &self.data[i]), &f.mul(b, &rhs.data[i]));
        }
        Ok(out)
    }

    /// Reduced row-echelon form together with the pivot columns.
    ///
    /// RREF is unique for a given row space, so the rational fast path
    /// (fraction-free integer echelon followed by rational normalization
    /// of the surviving rows) returns exactly what direct rational
    /// elimination would.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if self.field == FieldDescriptor::Rationals {
            return self.rref_via_integers();
        }
        self.rref_direct()
    }

    fn rref_direct(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field;
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            // topmost row (at or below pivot_row) with a nonzero entry
            let hit = (pivot_row..m.rows).find(|&r| !f.is_zero(m.get(r, col)));
            let Some(r0) = hit else { continue };
            if r0 != pivot_row {
                for c in 0..m.cols {
                    let a = m.get(r0, c).clone();
                    let b = m.get(pivot_row, c).clone();
                    m.set(r0, c, b);
                    m.set(pivot_row, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("nonzero pivot");
            for c in col..m.cols {
                let v = f.mul(m.get(pivot_row, c), &inv);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Per-row denominator-cleared integer copy (row scaling preserves the
    /// row space and the rank).
    fn integer_rows(&self) -> Vec<Vec<num_bigint::BigInt>> {
        use num_integer::Integer;
        use num_rational::BigRational;
        (0..self.rows)
            .map(|r| {
                let mut lcm = num_bigint::BigInt::from(1);
                for c in 0..self.cols {
                    lcm = lcm.lcm(self.get(r, c).as_rational().expect("rational matrix").denom());
                }
                (0..self.cols)
                    .map(|c| {
                        (self.get(r, c).as_rational().unwrap() * BigRational::from(lcm.clone()))
                            .to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Fraction-free (Bareiss) echelon over the integers, returning the
    /// echelon rows and pivot columns.
    fn integer_echelon(&self) -> (Vec<Vec<num_bigint::BigInt>>, Vec<usize>) {
        use num_traits::Zero;
        let mut m = self.integer_rows();
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut prev = num_bigint::BigInt::from(1);
        let mut pr = 0usize;
        for col in 0..self.cols {
            if pr >= rows {
                break;
            }
            let Some(r0) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pr, r0);
            for r in (pr + 1)..rows {
                for c in (col + 1)..self.cols {
                    let num = &m[r][c] * &m[pr][col] - &m[r][col] * &m[pr][c];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    m[r][c] = num / &prev;
                }
                m[r][col] = num_bigint::BigInt::zero();
            }
            prev = m[pr][col].clone();
            pivots.push(col);
            pr += 1;
        }
        m.truncate(pivots.len());
        (m, pivots)
    }

    fn rref_via_integers(&self) -> (Matrix, Vec<usize>) {
        use num_rational::BigRational;
        let (ech, pivots) = self.integer_echelon();
        // rational back-elimination on the compacted echelon rows only
        let f = self.field;
        let mut small = Matrix::from_rows(
            ech.into_iter()
                .map(|row| row.into_iter().map(|v| Scalar::Q(BigRational::from(v))).collect())
                .collect(),
            self.cols,
            f,
        );
        let k = small.rows();
        for (row, &col) in pivots.iter().enumerate() {
            let inv = f.inv(small.get(row, col)).expect("nonzero pivot");
            for c in col..self.cols {
                let v = f.mul(small.get(row, c), &inv);
                small.set(row, c, v);
            }
            for r in 0..row {
                if f.is_zero(small.get(r, col)) {
                    continue;
                }
                let factor = small.get(r, col).clone();
                for c in col..self.cols {
                    let v = f.sub(small.get(r, c), &f.mul(&factor, small.get(row, c)));
                    small.set(r, c, v);
                }
            }
        }
        // pad back to the original row count with zero rows
        let mut out = Matrix::zero(self.rows, self.cols, f);
        for r in 0..k {
            for c in 0..self.cols {
                out.set(r, c, small.get(r, c).clone());
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.field == FieldDescriptor::Rationals {
            return self.integer_echelon().1.len();
        }
        self.rref_direct().1.len()
    }

    /// Null space `{v : M·v = 0}` as a subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, fc));
            }
            basis.push(v);
        }
        Subspace::from_rows(basis, self.cols, f)
    }

    /// Inverse via Gauss-Jordan.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let f = self.field;
        // augment [self | I] and reduce
        let mut aug = Matrix::zero(n, 2 * n, f);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::SingularMatrix);
        }
        let mut inv = Matrix::zero(n, n, f);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }
}

/// Deterministic invertible matrix: a pure function of `(n, field, seed)`.
/// Over the rationals the entries are integers in `-9..=9`.
pub fn random_invertible(n: usize, field: FieldDescriptor, seed: u64) -> Matrix {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    loop {
        let mut m = Matrix::zero(n, n, field);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, rng.scalar(&field));
            }
        }
        if m.rank() == n {
            return m;
        }
    }
}

/// A subspace of F^ambient, stored as an RREF basis with no zero rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldDescriptor,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldDescriptor) -> Self {
        Subspace {
            ambient,
            field,
            basis: Matrix::zero(0, ambient, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldDescriptor) -> Self {
        Self::from_rows(
            (0..ambient)
                .map(|i| {
                    let mut v = vec![field.zero(); ambient];
                    v[i] = field.one();
                    v
                })
                .collect(),
            ambient,
            field,
        )
    }

    /// Span of the given vectors, reduced to an RREF basis.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, ambient: usize, field: FieldDescriptor) -> Self {
        if field == FieldDescriptor::Rationals && !rows.is_empty() {
            // batch reduction through the integer fast path
            let n = rows.len();
            let (rref, pivots) = Matrix::from_rows(rows, ambient, field).rref();
            let basis = Matrix::from_rows(
                (0..pivots.len().min(n)).map(|r| rref.row_vec(r)).collect(),
                ambient,
                field,
            );
            return Subspace {
                ambient,
                field,
                basis,
                pivots,
            };
        }
        let mut b = RrefBuilder::new(ambient, field);
        for r in rows {
            b.insert(r);
        }
        b.into_subspace()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&w[p]) {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.ambient {
                let s = f.sub(&w[c], &f.mul(&factor, self.basis.get(row, c)));
                w[c] = s;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(rows, self.ambient, self.field)
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    /// Because the basis is in RREF these are just the entries of `v` at
    /// the pivot positions (checked by re-reduction).
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Deterministic complement inside the full space: the standard basis
    /// vectors at non-pivot indices, in index order.
    pub fn standard_complement(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        (0..self.ambient)
            .filter(|i| !self.pivots.contains(i))
            .map(|i| {
                let mut v = vec![f.zero(); self.ambient];
                v[i] = f.one();
                v
            })
            .collect()
    }

    /// Deterministic complement of `self` inside `larger`: rows of
    /// `larger`'s RREF basis that extend `self`, greedily in order.
    pub fn complement_in(&self, larger: &Subspace) -> Vec<Vec<Scalar>> {
        let mut b = RrefBuilder::new(self.ambient, self.field);
        for r in self.basis_rows() {
            b.insert(r);
        }
        let mut out = Vec::new();
        for row in larger.basis_rows() {
            if b.insert(row.clone()) {
                out.push(row);
            }
        }
        out
    }
}

/// Incremental RREF span builder.
pub struct RrefBuilder {
    ambient: usize,
    field: FieldDescriptor,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(ambient: usize, field: FieldDescriptor) -> Self {
        RrefBuilder {
            ambient,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector into the span; returns true if it was independent.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        for (row, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..self.ambient {
                let s = f.sub(&v[c], &f.mul(&factor, &self.rows[row][c]));
                v[c] = s;
            }
        }
        let Some(lead) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[lead]).expect("nonzero lead");
        for c in 0..self.ambient {
            v[c] = f.mul(&v[c], &inv);
        }
        // clear the new pivot column from the existing rows
        for row in &mut self.rows {
            if f.is_zero(&row[lead]) {
                continue;
            }
            let factor = row[lead].clone();
            for c in 0..self.ambient {
                let s = f.sub(&row[c], &f.mul(&factor, &v[c]));
                row[c] = s;
            }
        }
        let at = self.pivots.iter().position(|&p| p > lead).unwrap_or(self.pivots.len());
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&w[p]) {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.ambient {
                let s = f.sub(&w[c], &f.mul(&factor, &self.rows[row][c]));
                w[c] = s;
            }
        }
        w.iter().all(|x| f.is_zero(x))
    }

    pub fn into_subspace(self) -> Subspace {
        let basis = Matrix::from_rows(self.rows, self.ambient, self.field);
        Subspace {
            ambient: self.ambient,
            field: self.field,
            basis,
            pivots: self.pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    #[test]
    fn rank_identity_gf5() {
        assert_eq!(Matrix::identity(3, gf(5)).rank(), 3);
    }

    #[test]
    fn rank_zero_matrix_over_q() {
        assert_eq!(Matrix::zero(4, 2, FieldDescriptor::rationals()).rank(), 0);
    }

    #[test]
    fn rank_of_standard_symplectic_form() {
        // x1∧y1 + x2∧y2 + x3∧y3 in basis (x1,x2,x3,y1,y2,y3)
        let f = FieldDescriptor::rationals();
        let m = Matrix::from_i64(
            &[
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
                &[-1, 0, 0, 0, 0, 0],
                &[0, -1, 0, 0, 0, 0],
                &[0, 0, -1, 0, 0, 0],
            ],
            f,
        );
        assert_eq!(m.rank(), 6);
    }

    #[test]
    fn kernel_identity_and_zero() {
        let f = gf(7);
        assert_eq!(Matrix::identity(4, f).kernel().dim(), 0);
        let z = Matrix::zero(5, 5, f);
        let k = z.kernel();
        assert_eq!(k.dim(), 5);
        assert_eq!(k, Subspace::full(5, f));
    }

    #[test]
    fn kernel_of_single_wedge_form() {
        // x1∧x2 on a 4-dim space: kernel is span(e3, e4)
        let f = FieldDescriptor::rationals();
        let m = Matrix::from_i64(
            &[
                &[0, 1, 0, 0],
                &[-1, 0, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 0, 0],
            ],
            f,
        );
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        let e3 = vec![f.zero(), f.zero(), f.one(), f.zero()];
        let e4 = vec![f.zero(), f.zero(), f.zero(), f.one()];
        assert!(k.contains(&e3) && k.contains(&e4));
    }

    #[test]
    fn random_invertible_is_deterministic_and_invertible() {
        let f = gf(2);
        let a = random_invertible(1, f, 12345);
        assert_eq!(a, Matrix::identity(1, f));
        for seed in [0u64, 1, 7, 99] {
            let m = random_invertible(4, gf(3), seed);
            assert_eq!(m, random_invertible(4, gf(3), seed));
            assert_eq!(m.rank(), 4);
            let inv = m.inverse().unwrap();
            assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(4, gf(3)));
        }
        let q = random_invertible(5, FieldDescriptor::rationals(), 3);
        let inv = q.inverse().unwrap();
        assert_eq!(q.mul(&inv).unwrap(), Matrix::identity(5, FieldDescriptor::rationals()));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = gf(5);
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]], f);
        assert_eq!(m.inverse(), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn complement_rules() {
        let f = FieldDescriptor::rationals();
        let s = Subspace::from_rows(vec![vec![f.one(), f.one()]], 2, f);
        let comp = s.standard_complement();
        assert_eq!(comp, vec![vec![f.zero(), f.one()]]);
        let full = Subspace::full(2, f);
        let ext = s.complement_in(&full);
        assert_eq!(ext.len(), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6, 0usize..3, any::<u64>()).prop_map(|(r, c, fi, seed)| {
            let field = match fi {
                0 => FieldDescriptor::rationals(),
                1 => gf(2),
                _ => gf(5),
            };
            let mut rng = SplitMix64::new(seed);
            let mut m = Matrix::zero(r, c, field);
            for i in 0..r {
                for j in 0..c {
                    let mut v = rng.scalar(&field);
                    if field == FieldDescriptor::rationals() {
                        // exercise genuine fractions
                        let den = field.from_i64(1 + rng.below(4) as i64);
                        v = field.div(&v, &den).unwrap();
                    }
                    m.set(i, j, v);
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn rational_fast_paths_agree_with_direct_elimination(m in arb_matrix()) {
            if *m.field() == FieldDescriptor::rationals() {
                let (direct, piv_d) = m.rref_direct();
                let (fast, piv_f) = m.rref_via_integers();
                prop_assert_eq!(&piv_d, &piv_f);
                prop_assert_eq!(direct, fast);
                prop_assert_eq!(m.rank(), piv_d.len());
            }
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn kernel_vectors_annihilate(m in arb_matrix()) {
            let k = m.kernel();
            for row in k.basis_rows() {
                let image = m.mul_vec(&row).unwrap();
                prop_assert!(image.iter().all(|v| m.field().is_zero(v)));
            }
        }
    }
}
