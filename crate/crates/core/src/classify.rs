//! The classification decision procedure: hypothesis validation, the
//! stem ⊕ abelian split, and fingerprint matching against the catalog.
//!
//! Matching works by invariants rather than by mechanizing the sequence of
//! basis changes from the source argument: the input's fingerprint is
//! compared against the fingerprint of every catalog candidate of the same
//! dimension. That simultaneously *tests* the classification – a miss
//! (`NoMatch`) or a collision (`Ambiguous`) is reported loudly instead of
//! being massaged away.
//!
//! The ε/η-parameterized dimension-6 families are the one deliberate
//! exception: their parameters are only canonical up to reductions the
//! source leaves to its references (for instance L622(ε) ≅ L622(c²·ε)),
//! so when every matching candidate belongs to those families the result
//! carries `matched_by = parameter_unresolved` with the first matching
//! candidate as representative. Over Q, where the parameter cannot be
//! swept, any dimension-6 stem resolves this way directly.

use crate::catalog::{dimension, enumerate, make, FamilyParams, FamilyTag};
use crate::field::FieldDescriptor;
use crate::lie::{JacobiViolation, StructureConstants};
use crate::matrix::RrefBuilder;
use crate::pencil::{fingerprint, Fingerprint, PencilError};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ClassifyError {
    #[error("input is not a Lie algebra: {0}")]
    NotALieAlgebra(JacobiViolation),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// Why the class-two, dim-L²-two hypotheses fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    NotClass2,
    DerivedDimNot2,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NotClass2 => write!(f, "nilpotency class is not 2"),
            RejectReason::DerivedDimNot2 => write!(f, "derived subalgebra dimension is not 2"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoMatchReason {
    /// No catalog fingerprint matches: over a finite field this would
    /// contradict the classification and deserves loud reporting.
    NonCatalog,
    /// Over Q the pencil degenerates at an irrational direction the
    /// fingerprint does not resolve.
    UnresolvedRationalDrop,
    /// Stems of dimension < 5 cannot satisfy the hypotheses; seeing one
    /// indicates an internal error.
    StemTooSmall,
}

impl fmt::Display for NoMatchReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoMatchReason::NonCatalog => write!(f, "no catalog entry matches the fingerprint"),
            NoMatchReason::UnresolvedRationalDrop => {
                write!(f, "possible irrational drop direction left unresolved")
            }
            NoMatchReason::StemTooSmall => write!(f, "stem dimension below 5"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchedBy {
    ExactFingerprint,
    ParameterUnresolved,
}

impl MatchedBy {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatchedBy::ExactFingerprint => "exact_fingerprint",
            MatchedBy::ParameterUnresolved => "parameter_unresolved",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub family: FamilyTag,
    pub params: FamilyParams,
    pub abelian_dim: usize,
    pub matched_by: MatchedBy,
    pub field: FieldDescriptor,
}

impl ClassificationResult {
    /// `H3[m=4,k=2] ⊕ A(0)`.
    pub fn render(&self) -> String {
        format!(
            "{}{} ⊕ A({})",
            self.family.name(),
            self.params.render(),
            self.abelian_dim
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.name(),
            "params": self.params.to_json(),
            "abelian_dim": self.abelian_dim,
            "matched_by": self.matched_by.as_str(),
            "field": self.field.to_json(),
        })
    }
}

/// Full outcome of `classify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyOutcome {
    Classified(ClassificationResult),
    Reject(RejectReason),
    NoMatch(NoMatchReason),
    /// Multiple catalog entries share the input's fingerprint. Over finite
    /// fields this would falsify fingerprint completeness and is reported,
    /// never silently resolved.
    Ambiguous(Vec<(FamilyTag, FamilyParams)>),
}

/// ok iff nilpotency class is exactly 2 and dim L² = 2.
pub fn validate_hypotheses(l: &StructureConstants) -> Result<(), RejectReason> {
    if l.nilpotency_class() != Some(2) {
        return Err(RejectReason::NotClass2);
    }
    if l.derived_subalgebra().dim() != 2 {
        return Err(RejectReason::DerivedDimNot2);
    }
    Ok(())
}

/// Splits L ≅ H ⊕ A(s) with H stem: H is spanned by a deterministic
/// complement of Z(L) in L together with L², and s = dim Z(L) − 2.
pub fn split_stem(l: &StructureConstants) -> Result<(StructureConstants, usize), ClassifyError> {
    let center = l.center();
    let derived = l.derived_subalgebra();
    if derived.dim() != 2 || !derived.is_contained_in(&center) {
        return Err(ClassifyError::Internal(
            "split_stem called without validated hypotheses".into(),
        ));
    }
    let abelian_dim = center.dim() - 2;
    let field = *l.field();
    // complement W of Z(L) in L: standard vectors extending the center,
    // greedily in index order
    let mut builder = RrefBuilder::new(l.n(), field);
    for row in center.basis_rows() {
        builder.insert(row);
    }
    let mut w_indices = Vec::new();
    for i in 0..l.n() {
        if builder.insert(l.basis_vector(i)) {
            w_indices.push(i);
        }
    }
    // H basis: W vectors then the RREF basis of L²
    let t = w_indices.len();
    let h_dim = t + 2;
    let mut h = StructureConstants::abelian(h_dim, field);
    for a in 0..t {
        for b in (a + 1)..t {
            let w = l.bracket_basis(w_indices[a], w_indices[b]);
            let coords = derived
                .coordinates(&w)
                .ok_or_else(|| ClassifyError::Internal("bracket outside L²".into()))?;
            let mut v = vec![field.zero(); h_dim];
            v[t] = coords[0].clone();
            v[t + 1] = coords[1].clone();
            h.set_bracket(a, b, v);
        }
    }
    // asserted post-condition: H is stem with Z(H) = H², dim 2
    let report = h.report();
    if report.gen_heisenberg_rank != Some(2) || report.nilpotency_class != Some(2) {
        return Err(ClassifyError::Internal(format!(
            "split produced a non-stem part: {report:?}"
        )));
    }
    Ok((h, abelian_dim))
}

fn catalog_fingerprint(
    tag: FamilyTag,
    params: &FamilyParams,
    field: FieldDescriptor,
) -> Result<Fingerprint, ClassifyError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Fingerprint>>> = OnceLock::new();
    let key = format!("{field}|{tag}{}", params.render());
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let l = make(tag, params, field)
        .map_err(|e| ClassifyError::Internal(format!("catalog entry failed to build: {e}")))?;
    let fp = fingerprint(&l)?;
    cache.lock().unwrap().insert(key, fp.clone());
    Ok(fp)
}

/// Matches a stem algebra against every catalog candidate of its dimension.
pub fn classify_stem(h: &StructureConstants) -> Result<ClassifyOutcome, ClassifyError> {
    let field = *h.field();
    let n = h.n();
    if n < 5 {
        return Ok(ClassifyOutcome::NoMatch(NoMatchReason::StemTooSmall));
    }
    if field == FieldDescriptor::Rationals && n == 6 {
        // the ε/η families cannot be swept over Q; report the family with
        // the parameter left unresolved
        return Ok(ClassifyOutcome::Classified(ClassificationResult {
            family: FamilyTag::L622,
            params: FamilyParams::none(),
            abelian_dim: 0,
            matched_by: MatchedBy::ParameterUnresolved,
            field,
        }));
    }
    let fp = fingerprint(h)?;
    let mut matches = Vec::new();
    for (tag, params) in enumerate(n, &field) {
        if catalog_fingerprint(tag, &params, field)? == fp {
            matches.push((tag, params));
        }
    }
    match matches.len() {
        0 => Ok(ClassifyOutcome::NoMatch(if fp.nondrop_flag {
            NoMatchReason::UnresolvedRationalDrop
        } else {
            NoMatchReason::NonCatalog
        })),
        1 => {
            let (family, params) = matches.pop().unwrap();
            Ok(ClassifyOutcome::Classified(ClassificationResult {
                family,
                params,
                abelian_dim: 0,
                matched_by: MatchedBy::ExactFingerprint,
                field,
            }))
        }
        _ => {
            if matches.iter().all(|(t, _)| t.has_free_field_parameter()) {
                let (family, params) = matches.swap_remove(0);
                Ok(ClassifyOutcome::Classified(ClassificationResult {
                    family,
                    params,
                    abelian_dim: 0,
                    matched_by: MatchedBy::ParameterUnresolved,
                    field,
                }))
            } else {
                Ok(ClassifyOutcome::Ambiguous(matches))
            }
        }
    }
}

/// The complete decision procedure: validate, split, match.
pub fn classify(l: &StructureConstants) -> Result<ClassifyOutcome, ClassifyError> {
    if let Err(v) = l.validate() {
        return Err(ClassifyError::NotALieAlgebra(v));
    }
    if let Err(reason) = validate_hypotheses(l) {
        return Ok(ClassifyOutcome::Reject(reason));
    }
    let (h, abelian_dim) = split_stem(l)?;
    match classify_stem(&h)? {
        ClassifyOutcome::Classified(mut result) => {
            result.abelian_dim = abelian_dim;
            debug_assert!(
                result.matched_by == MatchedBy::ParameterUnresolved
                    || dimension(result.family, &result.params).unwrap() + result.abelian_dim
                        == l.n()
            );
            Ok(ClassifyOutcome::Classified(result))
        }
        other => Ok(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::random_invertible;
    use crate::pencil::fingerprint;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    #[test]
    fn hypotheses_examples() {
        let h1 = make(FamilyTag::H, &FamilyParams::m(1), q()).unwrap();
        assert_eq!(validate_hypotheses(&h1), Err(RejectReason::DerivedDimNot2));
        let a5 = StructureConstants::abelian(5, q());
        assert_eq!(validate_hypotheses(&a5), Err(RejectReason::NotClass2));
        let l622 = make(FamilyTag::L622, &FamilyParams::eps(gf(3).from_i64(1)), gf(3)).unwrap();
        assert_eq!(validate_hypotheses(&l622), Ok(()));
    }

    #[test]
    fn split_stem_on_a_stem_is_trivial() {
        let l = make(FamilyTag::H1, &FamilyParams::m(3), gf(5)).unwrap();
        let (h, s) = split_stem(&l).unwrap();
        assert_eq!(s, 0);
        assert_eq!(h.n(), 8);
        assert_eq!(fingerprint(&h).unwrap(), fingerprint(&l).unwrap());
    }

    #[test]
    fn split_stem_strips_abelian_summand() {
        let stem = make(FamilyTag::H1, &FamilyParams::m(3), q()).unwrap();
        let l = stem
            .direct_sum(&StructureConstants::abelian(2, q()))
            .unwrap();
        let (h, s) = split_stem(&l).unwrap();
        assert_eq!(s, 2);
        assert_eq!(h.n(), 8);
        assert_eq!(fingerprint(&h).unwrap(), fingerprint(&stem).unwrap());

        let l58 = make(FamilyTag::L58, &FamilyParams::none(), q()).unwrap();
        let l = l58.direct_sum(&StructureConstants::abelian(1, q())).unwrap();
        let (h, s) = split_stem(&l).unwrap();
        assert_eq!((h.n(), s), (5, 1));
    }

    #[test]
    fn classify_round_trip_h3_over_gf5() {
        let l = make(FamilyTag::H3, &FamilyParams::mk(4, 2), gf(5)).unwrap();
        for seed in 0..10u64 {
            let s = random_invertible(l.n(), gf(5), seed);
            let m = l.change_of_basis(&s).unwrap();
            let out = classify(&m).unwrap();
            match out {
                ClassifyOutcome::Classified(r) => {
                    assert_eq!(r.family, FamilyTag::H3);
                    assert_eq!(r.params, FamilyParams::mk(4, 2));
                    assert_eq!(r.abelian_dim, 0);
                    assert_eq!(r.matched_by, MatchedBy::ExactFingerprint);
                }
                other => panic!("expected classification, got {other:?}"),
            }
        }
    }

    #[test]
    fn h8_is_never_confused_with_h5() {
        let l = make(FamilyTag::H8, &FamilyParams::mk1(2, 2), gf(3)).unwrap();
        match classify(&l).unwrap() {
            ClassifyOutcome::Classified(r) => {
                assert_eq!(r.family, FamilyTag::H8);
                assert_eq!(r.params, FamilyParams::mk1(2, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn classify_with_abelian_padding() {
        let l = make(FamilyTag::H4, &FamilyParams::mk(2, 2), gf(2))
            .unwrap()
            .direct_sum(&StructureConstants::abelian(3, gf(2)))
            .unwrap();
        match classify(&l).unwrap() {
            ClassifyOutcome::Classified(r) => {
                assert_eq!(r.family, FamilyTag::H4);
                assert_eq!(r.params, FamilyParams::mk(2, 2));
                assert_eq!(r.abelian_dim, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn classify_rejects_wrong_hypotheses() {
        let h3 = make(FamilyTag::H, &FamilyParams::m(3), q()).unwrap();
        assert_eq!(
            classify(&h3).unwrap(),
            ClassifyOutcome::Reject(RejectReason::DerivedDimNot2)
        );
        let a6 = StructureConstants::abelian(6, q());
        assert_eq!(
            classify(&a6).unwrap(),
            ClassifyOutcome::Reject(RejectReason::NotClass2)
        );
    }

    #[test]
    fn scrambled_l1_with_padding_over_gf3() {
        let l = make(FamilyTag::L1, &FamilyParams::none(), gf(3))
            .unwrap()
            .direct_sum(&StructureConstants::abelian(2, gf(3)))
            .unwrap();
        for seed in [3u64, 17] {
            let s = random_invertible(l.n(), gf(3), seed);
            let m = l.change_of_basis(&s).unwrap();
            match classify(&m).unwrap() {
                ClassifyOutcome::Classified(r) => {
                    assert_eq!(r.family, FamilyTag::L1);
                    assert_eq!(r.abelian_dim, 2);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    /// H7 with r = m is the same algebra as H4(m+k1, m); the classifier
    /// resolves it to the canonical H4 form.
    #[test]
    fn h7_with_r_equal_m_classifies_as_h4() {
        for field in [q(), gf(2), gf(5)] {
            let l = make(FamilyTag::H7, &FamilyParams::mk1r(2, 2, 2), field).unwrap();
            match classify(&l).unwrap() {
                ClassifyOutcome::Classified(r) => {
                    assert_eq!(r.family, FamilyTag::H4);
                    assert_eq!(r.params, FamilyParams::mk(4, 2));
                    assert_eq!(r.matched_by, MatchedBy::ExactFingerprint);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    /// H7(m,k1,r) ≅ H7(k1+r, m−r, r): the classifier resolves the larger
    /// twin to the canonical smaller one.
    #[test]
    fn h7_twins_classify_to_the_canonical_representative() {
        for field in [gf(2), gf(3), q()] {
            let l = make(FamilyTag::H7, &FamilyParams::mk1r(4, 2, 1), field).unwrap();
            match classify(&l).unwrap() {
                ClassifyOutcome::Classified(r) => {
                    assert_eq!(r.family, FamilyTag::H7);
                    assert_eq!(r.params, FamilyParams::mk1r(3, 3, 1));
                    assert_eq!(r.matched_by, MatchedBy::ExactFingerprint);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn epsilon_families_resolve_up_to_parameter() {
        // L622(1) ≅ L622(4) over GF(5): the sweep finds both, the result is
        // parameter_unresolved with a fingerprint-verified representative
        let f = gf(5);
        let l = make(FamilyTag::L622, &FamilyParams::eps(f.from_i64(4)), f).unwrap();
        match classify(&l).unwrap() {
            ClassifyOutcome::Classified(r) => {
                assert_eq!(r.matched_by, MatchedBy::ParameterUnresolved);
                assert!(r.family.has_free_field_parameter());
                let rep = make(r.family, &r.params, f).unwrap();
                assert_eq!(fingerprint(&rep).unwrap(), fingerprint(&l).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dim6_stems_over_q_are_parameter_unresolved() {
        let l = make(FamilyTag::L672, &FamilyParams::eta(q().from_i64(0)), q()).unwrap();
        match classify(&l).unwrap() {
            ClassifyOutcome::Classified(r) => {
                assert_eq!(r.matched_by, MatchedBy::ParameterUnresolved);
                assert!(r.family.has_free_field_parameter());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn classification_json_shape() {
        let l = make(FamilyTag::H3, &FamilyParams::mk(4, 2), gf(5)).unwrap();
        let ClassifyOutcome::Classified(r) = classify(&l).unwrap() else {
            panic!("expected classification");
        };
        let json = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"abelian_dim":0,"family":"H3","field":{"kind":"Fp","p":5},"matched_by":"exact_fingerprint","params":{"k":2,"m":4}}"#
        );
    }
}
