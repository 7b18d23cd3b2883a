//! Constructors for the named algebras of the classification, parameter
//! validation, dimension formulas, and enumeration by dimension.
//!
//! Frozen basis orders (1-based, z and z₁ always last):
//!
//! | family | basis | relations |
//! |--------|-------|-----------|
//! | A(n)   | x₁..x_n (via `m = n`) | none |
//! | H(m)   | x₁..x_m, y₁..y_m, z | [xᵢ,yᵢ]=z |
//! | H1(m)  | x₁..x_m, y₁..y_m, z, z₁ | [xᵢ,yᵢ]=z, [x₁,x₂]=z₁ |
//! | H2(m)  | x₁..x_m, y₁..y_m, q, z, z₁ | [xᵢ,yᵢ]=z, [q,x₁]=z₁ |
//! | H3(m,k)| x, y, q₁..q_k, z, z₁ | [xᵢ,yᵢ]=z, [x₁,x₂]=[qⱼ,x_{j+2}]=z₁ |
//! | H4(m,k)| x, y, q₁..q_k, z, z₁ | [xᵢ,yᵢ]=z, [qⱼ,xⱼ]=z₁ |
//! | H5(m,k₁)| x, y, q, q′, z, z₁ | [xᵢ,yᵢ]=z, [x₁,x₂]=[qⱼ,q′ⱼ]=z₁ |
//! | H6(m,k₁,r)| x, y, q, q′, p₁..p_r, z, z₁ | [xᵢ,yᵢ]=z, [x₁,x₂]=[qⱼ,q′ⱼ]=[p_s,x_{s+2}]=z₁ |
//! | H7(m,k₁,r)| x, y, q, q′, p₁..p_r, z, z₁ | [xᵢ,yᵢ]=z, [qⱼ,q′ⱼ]=[p_t,x_t]=z₁ |
//! | H8(m,k₁)| x, y, q, q′, z, z₁ | [xᵢ,yᵢ]=z, [qⱼ,q′ⱼ]=z₁ |
//! | L58    | x₁..x₅ | [x₁,x₂]=x₄, [x₁,x₃]=x₅ |
//! | L622(ε)| x₁..x₆ | [x₁,x₂]=x₅, [x₁,x₃]=x₆, [x₂,x₄]=εx₆, [x₃,x₄]=x₅ |
//! | L672(η)| x₁..x₆ | [x₁,x₂]=x₅, [x₁,x₃]=x₆, [x₂,x₄]=ηx₆, [x₃,x₄]=x₅+x₆ |
//! | L1     | x₁..x₇ | [x₁,x₂]=x₆, [x₁,x₄]=x₇=[x₃,x₅] |
//! | L2     | x₁..x₇ | [x₁,x₂]=x₆=[x₃,x₄], [x₁,x₅]=x₇=[x₂,x₃] |
//!
//! Note on H6: the printed presentation sends `[p_s, x_{s+2}]` to z, while
//! every analogous family sends such pairs to z₁. With z the algebra is
//! not stem — `y_{s+2} + p_s` is central but lies outside L², so the
//! printed table cannot be a member of the classification it appears in
//! (it decomposes as H5(m,k₁) plus an abelian summand away from
//! characteristic 2). The constructor therefore uses z₁, which restores
//! Z = L² and matches how the parallel case is normalized.
//!
//! Three redundancies in the raw family list are normalized away by
//! [`enumerate`] (but not by [`make`], which accepts the full parameter
//! ranges): H8(m,k₁) ≅ H8(k₁,m), so only m ≤ k₁ is listed;
//! H7(m,k₁,m) ≅ H4(m+k₁,m) (swap the two central generators and relabel),
//! so H7 is listed only for r < m; and H7(m,k₁,r) ≅ H7(k₁+r, m−r, r)
//! under the same swap, so only the lexicographically smaller twin is
//! listed.

use crate::field::{FieldDescriptor, Scalar};
use crate::lie::StructureConstants;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CatalogError {
    #[error("BadParams: {family}: {constraint}")]
    BadParams { family: FamilyTag, constraint: String },
    #[error("family {0} does not take parameter {1}")]
    UnexpectedParam(FamilyTag, &'static str),
}

/// The closed set of family names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    A,
    H,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    L58,
    L622,
    L672,
    L1,
    L2,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 15] = [
        FamilyTag::A,
        FamilyTag::H,
        FamilyTag::H1,
        FamilyTag::H2,
        FamilyTag::H3,
        FamilyTag::H4,
        FamilyTag::H5,
        FamilyTag::H6,
        FamilyTag::H7,
        FamilyTag::H8,
        FamilyTag::L58,
        FamilyTag::L622,
        FamilyTag::L672,
        FamilyTag::L1,
        FamilyTag::L2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::A => "A",
            FamilyTag::H => "H",
            FamilyTag::H1 => "H1",
            FamilyTag::H2 => "H2",
            FamilyTag::H3 => "H3",
            FamilyTag::H4 => "H4",
            FamilyTag::H5 => "H5",
            FamilyTag::H6 => "H6",
            FamilyTag::H7 => "H7",
            FamilyTag::H8 => "H8",
            FamilyTag::L58 => "L58",
            FamilyTag::L622 => "L622",
            FamilyTag::L672 => "L672",
            FamilyTag::L1 => "L1",
            FamilyTag::L2 => "L2",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.iter().copied().find(|t| t.name() == s)
    }

    /// Families whose parameter (ε or η) is only canonical up to the field
    /// reductions the source leaves open.
    pub fn has_free_field_parameter(&self) -> bool {
        matches!(self, FamilyTag::L622 | FamilyTag::L672)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter tuple; the meaning of each slot depends on the family.
/// For A and H the size parameter is carried in `m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyParams {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub k1: Option<usize>,
    pub r: Option<usize>,
    pub epsilon: Option<Scalar>,
    pub eta: Option<Scalar>,
}

impl FamilyParams {
    pub fn m(m: usize) -> Self {
        FamilyParams {
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn mk(m: usize, k: usize) -> Self {
        FamilyParams {
            m: Some(m),
            k: Some(k),
            ..Default::default()
        }
    }

    pub fn mk1(m: usize, k1: usize) -> Self {
        FamilyParams {
            m: Some(m),
            k1: Some(k1),
            ..Default::default()
        }
    }

    pub fn mk1r(m: usize, k1: usize, r: usize) -> Self {
        FamilyParams {
            m: Some(m),
            k1: Some(k1),
            r: Some(r),
            ..Default::default()
        }
    }

    pub fn eps(e: Scalar) -> Self {
        FamilyParams {
            epsilon: Some(e),
            ..Default::default()
        }
    }

    pub fn eta(e: Scalar) -> Self {
        FamilyParams {
            eta: Some(e),
            ..Default::default()
        }
    }

    pub fn none() -> Self {
        FamilyParams::default()
    }

    /// Canonical JSON object; numeric slots as numbers, ε/η as exact
    /// coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        if let Some(m) = self.m {
            map.insert("m".into(), m.into());
        }
        if let Some(k) = self.k {
            map.insert("k".into(), k.into());
        }
        if let Some(k1) = self.k1 {
            map.insert("k1".into(), k1.into());
        }
        if let Some(r) = self.r {
            map.insert("r".into(), r.into());
        }
        if let Some(e) = &self.epsilon {
            map.insert("eps".into(), e.to_canonical_string().into());
        }
        if let Some(e) = &self.eta {
            map.insert("eta".into(), e.to_canonical_string().into());
        }
        serde_json::Value::Object(map)
    }

    /// `[m=4,k=2]`-style rendering used by the CLI.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(k1) = self.k1 {
            parts.push(format!("k1={k1}"));
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(e) = &self.epsilon {
            parts.push(format!("eps={e}"));
        }
        if let Some(e) = &self.eta {
            parts.push(format!("eta={e}"));
        }
        if parts.is_empty() {
            String::new()
        } else {
            format!("[{}]", parts.join(","))
        }
    }
}

fn bad(family: FamilyTag, constraint: &str) -> CatalogError {
    CatalogError::BadParams {
        family,
        constraint: constraint.to_string(),
    }
}

struct Checked {
    m: usize,
    k: usize,
    k1: usize,
    r: usize,
}

/// Validates the constraint set of T-style families and returns the
/// numeric parameters with absent slots as 0.
fn check_params(tag: FamilyTag, p: &FamilyParams) -> Result<Checked, CatalogError> {
    let m = p.m.unwrap_or(0);
    let k = p.k.unwrap_or(0);
    let k1 = p.k1.unwrap_or(0);
    let r = p.r.unwrap_or(0);
    let need = |cond: bool, msg: &str| -> Result<(), CatalogError> {
        if cond {
            Ok(())
        } else {
            Err(bad(tag, msg))
        }
    };
    match tag {
        FamilyTag::A => {
            need(p.m.is_some(), "A takes its dimension through m")?;
        }
        FamilyTag::H => {
            need(p.m.is_some() && m >= 1, "H requires m >= 1")?;
        }
        FamilyTag::H1 | FamilyTag::H2 => {
            need(p.m.is_some() && m >= 3, "requires m >= 3")?;
        }
        FamilyTag::H3 => {
            need(p.m.is_some() && m >= 4, "requires m >= 4")?;
            need(p.k.is_some() && k >= 2, "requires k >= 2")?;
            need(k + 2 <= m, "requires k <= m-2")?;
        }
        FamilyTag::H4 => {
            need(p.m.is_some() && m >= 2, "requires m >= 2")?;
            need(p.k.is_some() && k >= 2, "requires k >= 2")?;
            need(k <= m, "requires k <= m")?;
        }
        FamilyTag::H5 => {
            need(p.m.is_some() && m >= 2, "requires m >= 2")?;
            need(p.k1.is_some() && k1 >= 2, "requires k1 >= 2")?;
        }
        FamilyTag::H6 => {
            need(p.m.is_some() && m >= 4, "requires m >= 4")?;
            need(p.k1.is_some() && k1 >= 2, "requires k1 >= 2")?;
            need(p.r.is_some() && r >= 1, "requires r >= 1")?;
            need(r + 2 <= m, "requires r <= m-2")?;
        }
        FamilyTag::H7 => {
            need(p.m.is_some() && m >= 2, "requires m >= 2")?;
            need(p.k1.is_some() && k1 >= 2, "requires k1 >= 2")?;
            need(p.r.is_some() && r >= 1, "requires r >= 1")?;
            need(r <= m, "requires r <= m")?;
        }
        FamilyTag::H8 => {
            need(p.m.is_some() && m >= 1, "requires m >= 1")?;
            need(p.k1.is_some() && k1 >= 2, "requires k1 >= 2")?;
        }
        FamilyTag::L58 | FamilyTag::L1 | FamilyTag::L2 => {}
        FamilyTag::L622 => {
            need(p.epsilon.is_some(), "requires eps")?;
        }
        FamilyTag::L672 => {
            need(p.eta.is_some(), "requires eta")?;
        }
    }
    Ok(Checked { m, k, k1, r })
}

/// Dimension of `make(tag, params)` without building it.
pub fn dimension(tag: FamilyTag, params: &FamilyParams) -> Result<usize, CatalogError> {
    let c = check_params(tag, params)?;
    Ok(match tag {
        FamilyTag::A => c.m,
        FamilyTag::H => 2 * c.m + 1,
        FamilyTag::H1 => 2 * c.m + 2,
        FamilyTag::H2 => 2 * c.m + 3,
        FamilyTag::H3 | FamilyTag::H4 => 2 * c.m + c.k + 2,
        FamilyTag::H5 | FamilyTag::H8 => 2 * c.m + 2 * c.k1 + 2,
        FamilyTag::H6 | FamilyTag::H7 => 2 * c.m + 2 * c.k1 + c.r + 2,
        FamilyTag::L58 => 5,
        FamilyTag::L622 | FamilyTag::L672 => 6,
        FamilyTag::L1 | FamilyTag::L2 => 7,
    })
}

/// Builds the bracket table of the family's presentation in its frozen
/// basis order; all unlisted brackets are zero.
pub fn make(
    tag: FamilyTag,
    params: &FamilyParams,
    field: FieldDescriptor,
) -> Result<StructureConstants, CatalogError> {
    let c = check_params(tag, params)?;
    let n = dimension(tag, params)?;
    let one = field.one();
    let mut l = StructureConstants::abelian(n, field);
    // set [a, b] += coeff·e_t with 1-based symbol indices
    let rel = |l: &mut StructureConstants, a: usize, b: usize, t: usize, coeff: Scalar| {
        if a < b {
            l.add_bracket_term(a - 1, b - 1, t - 1, coeff);
        } else {
            l.add_bracket_term(b - 1, a - 1, t - 1, field.neg(&coeff));
        }
    };
    let (m, k, k1, r) = (c.m, c.k, c.k1, c.r);
    match tag {
        FamilyTag::A => {}
        FamilyTag::H => {
            let z = 2 * m + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
        }
        FamilyTag::H1 => {
            let z = 2 * m + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            rel(&mut l, 1, 2, z + 1, one.clone());
        }
        FamilyTag::H2 => {
            let q = 2 * m + 1;
            let z = 2 * m + 2;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            rel(&mut l, q, 1, z + 1, one.clone());
        }
        FamilyTag::H3 => {
            let z = 2 * m + k + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            rel(&mut l, 1, 2, z + 1, one.clone());
            for j in 1..=k {
                rel(&mut l, 2 * m + j, j + 2, z + 1, one.clone());
            }
        }
        FamilyTag::H4 => {
            let z = 2 * m + k + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            for j in 1..=k {
                rel(&mut l, 2 * m + j, j, z + 1, one.clone());
            }
        }
        FamilyTag::H5 | FamilyTag::H8 => {
            let z = 2 * m + 2 * k1 + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            if tag == FamilyTag::H5 {
                rel(&mut l, 1, 2, z + 1, one.clone());
            }
            for j in 1..=k1 {
                rel(&mut l, 2 * m + j, 2 * m + k1 + j, z + 1, one.clone());
            }
        }
        FamilyTag::H6 | FamilyTag::H7 => {
            let z = 2 * m + 2 * k1 + r + 1;
            for i in 1..=m {
                rel(&mut l, i, m + i, z, one.clone());
            }
            for j in 1..=k1 {
                rel(&mut l, 2 * m + j, 2 * m + k1 + j, z + 1, one.clone());
            }
            if tag == FamilyTag::H6 {
                rel(&mut l, 1, 2, z + 1, one.clone());
                for s in 1..=r {
                    rel(&mut l, 2 * m + 2 * k1 + s, s + 2, z + 1, one.clone());
                }
            } else {
                for t in 1..=r {
                    rel(&mut l, 2 * m + 2 * k1 + t, t, z + 1, one.clone());
                }
            }
        }
        FamilyTag::L58 => {
            rel(&mut l, 1, 2, 4, one.clone());
            rel(&mut l, 1, 3, 5, one.clone());
        }
        FamilyTag::L622 => {
            let eps = params.epsilon.clone().expect("checked");
            rel(&mut l, 1, 2, 5, one.clone());
            rel(&mut l, 1, 3, 6, one.clone());
            rel(&mut l, 2, 4, 6, eps);
            rel(&mut l, 3, 4, 5, one.clone());
        }
        FamilyTag::L672 => {
            let eta = params.eta.clone().expect("checked");
            rel(&mut l, 1, 2, 5, one.clone());
            rel(&mut l, 1, 3, 6, one.clone());
            rel(&mut l, 2, 4, 6, eta);
            rel(&mut l, 3, 4, 5, one.clone());
            rel(&mut l, 3, 4, 6, one.clone());
        }
        FamilyTag::L1 => {
            rel(&mut l, 1, 2, 6, one.clone());
            rel(&mut l, 1, 4, 7, one.clone());
            rel(&mut l, 3, 5, 7, one.clone());
        }
        FamilyTag::L2 => {
            rel(&mut l, 1, 2, 6, one.clone());
            rel(&mut l, 3, 4, 6, one.clone());
            rel(&mut l, 1, 5, 7, one.clone());
            rel(&mut l, 2, 3, 7, one.clone());
        }
    }
    Ok(l)
}

/// Upper bound accepted by [`enumerate`].
pub const ENUMERATE_MAX_DIM: usize = 64;

/// Every stem family instance of dimension exactly `n`, sorted
/// deterministically (tag order, then parameters).
///
/// Over a finite field the ε/η parameters of L622/L672 range over all field
/// elements; over Q those two families are emitted once each with the
/// parameter left unspecified. The normalizations H8: m ≤ k₁ and H7: r < m
/// keep the list free of the known coincidences (see the module docs).
pub fn enumerate(n: usize, field: &FieldDescriptor) -> Vec<(FamilyTag, FamilyParams)> {
    assert!(n <= ENUMERATE_MAX_DIM, "enumerate capped at dimension 64");
    let mut out: Vec<(FamilyTag, FamilyParams)> = Vec::new();
    // H1: n = 2m+2, m >= 3
    if n >= 8 && n % 2 == 0 {
        out.push((FamilyTag::H1, FamilyParams::m((n - 2) / 2)));
    }
    // H2: n = 2m+3, m >= 3
    if n >= 9 && n % 2 == 1 {
        out.push((FamilyTag::H2, FamilyParams::m((n - 3) / 2)));
    }
    // H3: n = 2m+k+2, m >= 4, 2 <= k <= m-2
    for m in 4..=n {
        if let Some(k) = (n).checked_sub(2 * m + 2) {
            if (2..=m.saturating_sub(2)).contains(&k) {
                out.push((FamilyTag::H3, FamilyParams::mk(m, k)));
            }
        }
    }
    // H4: n = 2m+k+2, m >= 2, 2 <= k <= m
    for m in 2..=n {
        if let Some(k) = n.checked_sub(2 * m + 2) {
            if (2..=m).contains(&k) {
                out.push((FamilyTag::H4, FamilyParams::mk(m, k)));
            }
        }
    }
    // H5: n = 2m+2k1+2, m >= 2, k1 >= 2
    for m in 2..=n {
        if let Some(rest) = n.checked_sub(2 * m + 2) {
            if rest % 2 == 0 && rest / 2 >= 2 {
                out.push((FamilyTag::H5, FamilyParams::mk1(m, rest / 2)));
            }
        }
    }
    // H6: n = 2m+2k1+r+2, m >= 4, k1 >= 2, 1 <= r <= m-2
    for m in 4..=n {
        for k1 in 2..=n {
            if let Some(r) = n.checked_sub(2 * m + 2 * k1 + 2) {
                if (1..=m.saturating_sub(2)).contains(&r) {
                    out.push((FamilyTag::H6, FamilyParams::mk1r(m, k1, r)));
                }
            }
        }
    }
    // H7: n = 2m+2k1+r+2, m >= 2, k1 >= 2, 1 <= r <= m. Two presentations
    // of the same algebra are skipped: the r = m slice (it is H4(m+k1, m)
    // in disguise) and the larger member of each twin pair
    // H7(m,k1,r) ≅ H7(k1+r, m−r, r) (relabel after swapping z and z₁).
    for m in 2..=n {
        for k1 in 2..=n {
            if let Some(r) = n.checked_sub(2 * m + 2 * k1 + 2) {
                if !(1..m).contains(&r) {
                    continue;
                }
                let twin = (k1 + r, m - r, r);
                if m - r >= 2 && twin < (m, k1, r) {
                    continue;
                }
                out.push((FamilyTag::H7, FamilyParams::mk1r(m, k1, r)));
            }
        }
    }
    // H8: n = 2m+2k1+2, m >= 1, k1 >= 2, normalized to m <= k1.
    for m in 1..=n {
        if let Some(rest) = n.checked_sub(2 * m + 2) {
            if rest % 2 == 0 {
                let k1 = rest / 2;
                if k1 >= 2 && m <= k1 {
                    out.push((FamilyTag::H8, FamilyParams::mk1(m, k1)));
                }
            }
        }
    }
    if n == 5 {
        out.push((FamilyTag::L58, FamilyParams::none()));
    }
    if n == 6 {
        match field.elements() {
            Some(elems) => {
                for e in &elems {
                    out.push((FamilyTag::L622, FamilyParams::eps(e.clone())));
                }
                for e in elems {
                    out.push((FamilyTag::L672, FamilyParams::eta(e)));
                }
            }
            None => {
                out.push((FamilyTag::L622, FamilyParams::none()));
                out.push((FamilyTag::L672, FamilyParams::none()));
            }
        }
    }
    if n == 7 {
        out.push((FamilyTag::L1, FamilyParams::none()));
        out.push((FamilyTag::L2, FamilyParams::none()));
    }
    out.sort_by(|a, b| {
        (a.0, &a.1.m, &a.1.k, &a.1.k1, &a.1.r, &a.1.epsilon, &a.1.eta).cmp(&(
            b.0, &b.1.m, &b.1.k, &b.1.k1, &b.1.r, &b.1.epsilon, &b.1.eta,
        ))
    });
    out
}
