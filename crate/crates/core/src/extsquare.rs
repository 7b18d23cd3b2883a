//! Explicit model of the nonabelian exterior square L∧L for nilpotency
//! class ≤ 2, the exterior center Z^∧(L), and the capability and
//! unicentrality predicates.
//!
//! The model lives on the wedge coordinate space spanned by e_i∧e_j
//! (i < j) and quotients by the relation family
//!
//! ```text
//!     [e_a, e_b]∧e_c − e_a∧[e_b, e_c] + e_b∧[e_a, e_c]
//! ```
//!
//! over all basis triples, expanded through the structure constants with
//! e_i∧e_i = 0 and e_j∧e_i = −e_i∧e_j. (Equivalent sources display the
//! expansion with the opposite overall sign; both sides of their identities
//! vanish, so nothing downstream changes. This orientation is pinned by the
//! requirement that H(1) has an empty relation space.) The model is only
//! claimed for class ≤ 2, where L∧L is abelian and the wedge span of
//! degree-one generators is closed; higher class is rejected.
//!
//! The guard for relation completeness is the extension
//! 0 → M(L) → L∧L → L² → 0: the quotient dimension must equal
//! dim M(L) + dim L², which the test suites check against the
//! Chevalley–Eilenberg oracle.

use crate::field::{FieldDescriptor, Scalar};
use crate::lie::StructureConstants;
use crate::matrix::{Matrix, RrefBuilder, Subspace};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExtSquareError {
    #[error("exterior-square model requires nilpotency class <= 2 (found {0})")]
    ClassTooHigh(String),
}

/// The wedge model: relation space, quotient dimension, and the map
/// e_i∧e_j ↦ [e_i, e_j] that factors through the quotient.
#[derive(Debug, Clone)]
pub struct ExteriorSquare {
    pub n: usize,
    pub wedge_dim: usize,
    pub relation_space: Subspace,
    pub quotient_dim: usize,
    /// n × wedge_dim matrix sending wedge coordinates to L.
    pub commutator_map: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorCenterReport {
    pub basis: Subspace,
    /// Z^∧(L) = 0.
    pub is_capable: bool,
    /// Z^∧(L) = Z(L).
    pub is_unicentral: bool,
}

fn pair_pos(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn check_class(l: &StructureConstants) -> Result<(), ExtSquareError> {
    match l.nilpotency_class() {
        Some(c) if c <= 2 => Ok(()),
        Some(c) => Err(ExtSquareError::ClassTooHigh(format!("class {c}"))),
        None => Err(ExtSquareError::ClassTooHigh("not nilpotent".into())),
    }
}

/// Adds `coeff·(e_a∧e_b)` into a wedge-coordinate vector.
fn add_wedge(
    f: &FieldDescriptor,
    v: &mut [Scalar],
    n: usize,
    a: usize,
    b: usize,
    coeff: &Scalar,
) {
    if a == b || f.is_zero(coeff) {
        return;
    }
    let (pos, val) = if a < b {
        (pair_pos(a, b, n), coeff.clone())
    } else {
        (pair_pos(b, a, n), f.neg(coeff))
    };
    v[pos] = f.add(&v[pos], &val);
}

pub fn exterior_square(l: &StructureConstants) -> Result<ExteriorSquare, ExtSquareError> {
    check_class(l)?;
    let n = l.n();
    let f = *l.field();
    let wedge_dim = n * n.saturating_sub(1) / 2;
    let mut relations = RrefBuilder::new(wedge_dim, f);
    for a in 0..n {
        for b in (a + 1)..n {
            let t_ab = l.bracket_basis(a, b);
            for c in 0..n {
                let mut v = vec![f.zero(); wedge_dim];
                // [e_a, e_b]∧e_c
                for (u, coeff) in t_ab.iter().enumerate() {
                    add_wedge(&f, &mut v, n, u, c, coeff);
                }
                // − e_a∧[e_b, e_c]
                for (u, coeff) in l.bracket_basis(b, c).iter().enumerate() {
                    add_wedge(&f, &mut v, n, a, u, &f.neg(coeff));
                }
                // + e_b∧[e_a, e_c]
                for (u, coeff) in l.bracket_basis(a, c).iter().enumerate() {
                    add_wedge(&f, &mut v, n, b, u, coeff);
                }
                relations.insert(v);
            }
        }
    }
    let relation_space = relations.into_subspace();
    let quotient_dim = wedge_dim - relation_space.dim();
    let mut commutator_map = Matrix::zero(n, wedge_dim, f);
    for i in 0..n {
        for j in (i + 1)..n {
            let w = l.bracket_basis(i, j);
            let col = pair_pos(i, j, n);
            for (k, val) in w.iter().enumerate() {
                commutator_map.set(k, col, val.clone());
            }
        }
    }
    Ok(ExteriorSquare {
        n,
        wedge_dim,
        relation_space,
        quotient_dim,
        commutator_map,
    })
}

/// Z^∧(L) = {v : v∧e_j lies in the relation space for every j}, solved as
/// one linear system over the quotient coordinates.
pub fn exterior_center(l: &StructureConstants) -> Result<ExteriorCenterReport, ExtSquareError> {
    let sq = exterior_square(l)?;
    let n = sq.n;
    let f = *l.field();
    // rows: for each j and each basis vector e_a, the reduction of
    // e_a∧e_j modulo the relation space; stacking the transposes gives the
    // linear conditions on v.
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..n {
        // column a = reduce(e_a∧e_j)
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for a in 0..n {
            let mut v = vec![f.zero(); sq.wedge_dim];
            add_wedge(&f, &mut v, n, a, j, &f.one());
            cols.push(sq.relation_space.reduce(&v));
        }
        for coord in 0..sq.wedge_dim {
            if cols.iter().all(|c| f.is_zero(&c[coord])) {
                continue;
            }
            rows.push((0..n).map(|a| cols[a][coord].clone()).collect());
        }
    }
    let basis = if rows.is_empty() {
        Subspace::full(n, f)
    } else {
        Matrix::from_rows(rows, n, f).kernel()
    };
    let center = l.center();
    let is_capable = basis.dim() == 0;
    let is_unicentral = basis == center;
    Ok(ExteriorCenterReport {
        basis,
        is_capable,
        is_unicentral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, FamilyParams, FamilyTag};
    use crate::homology::schur_multiplier_dim;
    use crate::matrix::random_invertible;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    #[test]
    fn heisenberg_relations_cancel() {
        let h = make(FamilyTag::H, &FamilyParams::m(1), q()).unwrap();
        let sq = exterior_square(&h).unwrap();
        assert_eq!(sq.relation_space.dim(), 0);
        assert_eq!(sq.quotient_dim, 3);
        // 3 = dim M + dim L² = 2 + 1
        assert_eq!(sq.quotient_dim, schur_multiplier_dim(&h) + 1);
        let report = exterior_center(&h).unwrap();
        assert!(report.is_capable);
        assert!(!report.is_unicentral);
    }

    #[test]
    fn abelian_has_no_relations() {
        let a = StructureConstants::abelian(4, gf(3));
        let sq = exterior_square(&a).unwrap();
        assert_eq!(sq.relation_space.dim(), 0);
        assert_eq!(sq.quotient_dim, 6);
    }

    #[test]
    fn h1_extension_count() {
        let l = make(FamilyTag::H1, &FamilyParams::m(3), q()).unwrap();
        let sq = exterior_square(&l).unwrap();
        assert_eq!(sq.quotient_dim, 17); // 15 + 2
    }

    #[test]
    fn commutator_map_annihilates_relations() {
        for (tag, params) in [
            (FamilyTag::H1, FamilyParams::m(3)),
            (FamilyTag::H4, FamilyParams::mk(2, 2)),
            (FamilyTag::L58, FamilyParams::none()),
        ] {
            let l = make(tag, &params, gf(5)).unwrap();
            let sq = exterior_square(&l).unwrap();
            for row in sq.relation_space.basis_rows() {
                let image = sq.commutator_map.mul_vec(&row).unwrap();
                assert!(image.iter().all(|v| gf(5).is_zero(v)));
            }
        }
    }

    #[test]
    fn exterior_center_is_inside_center() {
        for seed in 0..5u64 {
            let l = StructureConstants::random_class2(4, gf(3), seed).unwrap();
            let report = exterior_center(&l).unwrap();
            assert!(report.basis.is_contained_in(&l.center()));
        }
    }

    #[test]
    fn h3_is_unicentral() {
        let l = make(FamilyTag::H3, &FamilyParams::mk(4, 2), q()).unwrap();
        let report = exterior_center(&l).unwrap();
        assert!(report.is_unicentral);
        assert_eq!(report.basis.dim(), 2);
    }

    #[test]
    fn non_unicentral_families_have_z_spanning_the_exterior_center() {
        // (family, params, 0-based index of the spanning central vector).
        // For H1 and H2 it is z; for H8(1,k₁) = H(1)⊕H(k₁) it is the
        // center of the H(k₁) factor (H(1) is capable, so its own central
        // direction is not exterior-central).
        let cases = [
            (FamilyTag::H1, FamilyParams::m(3), 6),
            (FamilyTag::H2, FamilyParams::m(3), 7),
            (FamilyTag::H8, FamilyParams::mk1(1, 2), 7),
        ];
        for field in [q(), gf(2), gf(3)] {
            for (tag, params, z_index) in &cases {
                let l = make(*tag, params, field).unwrap();
                let report = exterior_center(&l).unwrap();
                assert_eq!(report.basis.dim(), 1, "{tag} over {field}");
                assert!(report.basis.contains(&l.basis_vector(*z_index)));
                assert!(!report.is_capable && !report.is_unicentral);
            }
        }
    }

    #[test]
    fn class_three_is_rejected() {
        // filiform: [e1,e2]=e3, [e1,e3]=e4
        let f = q();
        let mut l = StructureConstants::abelian(4, f);
        l.add_bracket_term(0, 1, 2, f.one());
        l.add_bracket_term(0, 2, 3, f.one());
        assert_eq!(l.validate(), Ok(()));
        assert_eq!(l.nilpotency_class(), Some(3));
        assert!(matches!(
            exterior_square(&l),
            Err(ExtSquareError::ClassTooHigh(_))
        ));
        assert!(exterior_center(&l).is_err());
    }

    /// The multiplier dimension follows the exterior center: families with
    /// Z^∧ = H² take the (n−3)(n−2)/2 − 2 value, the ones with dim Z^∧ = 1
    /// take (n−1)(n−4)/2 + 1.
    #[test]
    fn multiplier_dichotomy_tracks_the_exterior_center() {
        let cases = [
            (FamilyTag::H1, FamilyParams::m(3)),
            (FamilyTag::H2, FamilyParams::m(3)),
            (FamilyTag::H4, FamilyParams::mk(2, 2)),
            (FamilyTag::H5, FamilyParams::mk1(2, 2)),
            (FamilyTag::H8, FamilyParams::mk1(1, 2)),
            (FamilyTag::H8, FamilyParams::mk1(2, 2)),
        ];
        for field in [q(), gf(3)] {
            for (tag, params) in &cases {
                let l = make(*tag, params, field).unwrap();
                let n = l.n();
                let report = exterior_center(&l).unwrap();
                let expected = if report.is_unicentral {
                    (n - 3) * (n - 2) / 2 - 2
                } else {
                    assert_eq!(report.basis.dim(), 1);
                    (n - 1) * (n - 4) / 2 + 1
                };
                assert_eq!(
                    schur_multiplier_dim(&l),
                    expected,
                    "{tag}{} over {field}",
                    params.render()
                );
            }
        }
    }

    #[test]
    fn zwedge_dimension_is_basis_invariant() {
        let l = make(FamilyTag::H4, &FamilyParams::mk(2, 2), gf(3)).unwrap();
        let base = exterior_center(&l).unwrap().basis.dim();
        for seed in 0..5u64 {
            let s = random_invertible(l.n(), gf(3), seed);
            let m = l.change_of_basis(&s).unwrap();
            assert_eq!(exterior_center(&m).unwrap().basis.dim(), base);
        }
    }
}
