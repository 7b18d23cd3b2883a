//! Schur multiplier dimensions, two ways.
//!
//! The oracle computes dim M(L) = dim H²(L; F) with trivial coefficients
//! from the Chevalley–Eilenberg complex C¹ → C² → C³ on sorted basis
//! subsets: (d¹f)(x,y) = −f([x,y]) and
//! (d²c)(x,y,z) = −c([x,y],z) + c([x,z],y) − c([y,z],x).
//! Dimension counts do not depend on the sign convention; this one is fixed
//! so the matrices are reproducible. The closed formulas come from the
//! classification's corollary and only apply to the H-families.

use crate::catalog::{dimension, CatalogError, FamilyParams, FamilyTag};
use crate::lie::StructureConstants;
use crate::matrix::Matrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HomologyError {
    #[error(transparent)]
    BadParams(#[from] CatalogError),
    #[error("no closed multiplier formula for family {0}")]
    UnsupportedFamily(FamilyTag),
}

/// Dimensions and ranks of the truncated cochain complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplexDims {
    pub n: usize,
    pub dim_c1: usize,
    pub dim_c2: usize,
    pub dim_c3: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn pair_pos(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// d¹: C¹ → C², rows indexed by 2-subsets.
fn d1_matrix(l: &StructureConstants) -> Matrix {
    let n = l.n();
    let f = *l.field();
    let ps = pairs(n);
    let mut m = Matrix::zero(ps.len(), n, f);
    for (row, &(i, j)) in ps.iter().enumerate() {
        let w = l.bracket_basis(i, j);
        for (col, val) in w.iter().enumerate() {
            m.set(row, col, f.neg(val));
        }
    }
    m
}

/// d²: C² → C³, rows indexed by 3-subsets, columns by 2-subsets.
fn d2_matrix(l: &StructureConstants) -> Matrix {
    let n = l.n();
    let f = *l.field();
    let cols = pairs(n).len();
    let ts = triples(n);
    let mut m = Matrix::zero(ts.len(), cols, f);
    // adds coeff · c(e_a, e_b) to the row, with the wedge sign
    let add = |m: &mut Matrix, row: usize, a: usize, b: usize, coeff: &crate::field::Scalar| {
        if a == b {
            return;
        }
        let (col, signed) = if a < b {
            (pair_pos(a, b, n), coeff.clone())
        } else {
            (pair_pos(b, a, n), f.neg(coeff))
        };
        let v = f.add(m.get(row, col), &signed);
        m.set(row, col, v);
    };
    for (row, &(i, j, k)) in ts.iter().enumerate() {
        // −c([e_i,e_j], e_k)
        for (a, val) in l.bracket_basis(i, j).iter().enumerate() {
            if !f.is_zero(val) {
                add(&mut m, row, a, k, &f.neg(val));
            }
        }
        // +c([e_i,e_k], e_j)
        for (a, val) in l.bracket_basis(i, k).iter().enumerate() {
            if !f.is_zero(val) {
                add(&mut m, row, a, j, val);
            }
        }
        // −c([e_j,e_k], e_i)
        for (a, val) in l.bracket_basis(j, k).iter().enumerate() {
            if !f.is_zero(val) {
                add(&mut m, row, a, i, &f.neg(val));
            }
        }
    }
    m
}

/// Assembles the complex dimensions; `rank_d1` always equals dim L².
pub fn cochain_dims(l: &StructureConstants) -> CochainComplexDims {
    let n = l.n();
    let d1 = d1_matrix(l);
    let d2 = d2_matrix(l);
    CochainComplexDims {
        n,
        dim_c1: n,
        dim_c2: n * n.saturating_sub(1) / 2,
        dim_c3: if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 },
        rank_d1: d1.rank(),
        rank_d2: d2.rank(),
    }
}

/// Numerical check that d² ∘ d¹ = 0 (the composite matrix vanishes).
pub fn composite_is_zero(l: &StructureConstants) -> bool {
    let d1 = d1_matrix(l);
    let d2 = d2_matrix(l);
    match d2.mul(&d1) {
        Ok(c) => c.is_zero(),
        Err(_) => false,
    }
}

/// dim M(L) = dim ker d² − rank d¹, by exact elimination.
pub fn schur_multiplier_dim(l: &StructureConstants) -> usize {
    let dims = cochain_dims(l);
    dims.dim_c2 - dims.rank_d2 - dims.rank_d1
}

/// The corollary's closed formulas: (n−1)(n−4)/2 + 1 for H1, H2 and
/// H8 = H(1)⊕H(k₁); (n−3)(n−2)/2 − 2 for H3..H7 and H8 with m ≥ 2.
pub fn multiplier_formula(tag: FamilyTag, params: &FamilyParams) -> Result<usize, HomologyError> {
    let n = dimension(tag, params)?;
    match tag {
        FamilyTag::H1 | FamilyTag::H2 => Ok((n - 1) * (n - 4) / 2 + 1),
        FamilyTag::H8 => {
            if params.m == Some(1) {
                Ok((n - 1) * (n - 4) / 2 + 1)
            } else {
                Ok((n - 3) * (n - 2) / 2 - 2)
            }
        }
        FamilyTag::H3 | FamilyTag::H4 | FamilyTag::H5 | FamilyTag::H6 | FamilyTag::H7 => {
            Ok((n - 3) * (n - 2) / 2 - 2)
        }
        other => Err(HomologyError::UnsupportedFamily(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make;
    use crate::field::FieldDescriptor;
    use crate::matrix::random_invertible;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    #[test]
    fn abelian_multiplier_is_wedge_square() {
        for field in [q(), gf(2), gf(5)] {
            for n in [1usize, 3, 5] {
                let a = StructureConstants::abelian(n, field);
                assert_eq!(schur_multiplier_dim(&a), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn heisenberg_one_multiplier() {
        for field in [q(), gf(2), gf(3)] {
            let h = make(FamilyTag::H, &FamilyParams::m(1), field).unwrap();
            assert_eq!(schur_multiplier_dim(&h), 2);
        }
    }

    #[test]
    fn h1_m3_multiplier_is_15() {
        for field in [q(), gf(2)] {
            let l = make(FamilyTag::H1, &FamilyParams::m(3), field).unwrap();
            assert_eq!(schur_multiplier_dim(&l), 15);
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(
            multiplier_formula(FamilyTag::H2, &FamilyParams::m(3)).unwrap(),
            21
        );
        assert_eq!(
            multiplier_formula(FamilyTag::H8, &FamilyParams::mk1(1, 2)).unwrap(),
            15
        );
        assert_eq!(
            multiplier_formula(FamilyTag::H5, &FamilyParams::mk1(2, 2)).unwrap(),
            26
        );
        assert!(matches!(
            multiplier_formula(FamilyTag::L58, &FamilyParams::none()),
            Err(HomologyError::UnsupportedFamily(FamilyTag::L58))
        ));
        assert!(multiplier_formula(FamilyTag::H3, &FamilyParams::mk(4, 3)).is_err());
    }

    #[test]
    fn rank_d1_is_derived_dimension() {
        for (tag, params) in [
            (FamilyTag::H1, FamilyParams::m(3)),
            (FamilyTag::H4, FamilyParams::mk(2, 2)),
            (FamilyTag::L58, FamilyParams::none()),
        ] {
            let l = make(tag, &params, gf(3)).unwrap();
            let dims = cochain_dims(&l);
            assert_eq!(dims.rank_d1, l.derived_subalgebra().dim());
        }
    }

    #[test]
    fn composite_vanishes() {
        for field in [q(), gf(2), gf(5)] {
            let l = make(FamilyTag::H4, &FamilyParams::mk(2, 2), field).unwrap();
            assert!(composite_is_zero(&l));
            let r = StructureConstants::random_class2(4, field, 11).unwrap();
            assert!(composite_is_zero(&r));
        }
    }

    #[test]
    fn multiplier_is_basis_invariant() {
        let l = make(FamilyTag::H4, &FamilyParams::mk(2, 2), gf(3)).unwrap();
        let base = schur_multiplier_dim(&l);
        for seed in 0..5u64 {
            let s = random_invertible(l.n(), gf(3), seed);
            assert_eq!(schur_multiplier_dim(&l.change_of_basis(&s).unwrap()), base);
        }
    }
}
