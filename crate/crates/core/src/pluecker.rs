//! Plücker embedding of Grassmannian points, the star action of α on wedge
//! products, and membership tests for distance balls and Schubert varieties.
//!
//! Conventions: matrix column multi-indices are 1-based (as in the minor
//! notation det U[i_1,...,i_k]), wedge exponents are 0-based (α^0 ... α^{n-1});
//! the shift by one connects them. Plücker coordinates are listed in
//! lexicographic multi-index order and normalized so the first nonzero
//! coordinate is 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{inv_mod, ExtElem, ExtField};
use crate::linalg::{MatFq, Subspace};

/// k strictly increasing column indices in [1, n].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>, ambient: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidParameter("empty multi-index".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "multi-index must be strictly increasing".into(),
            ));
        }
        if indices[0] < 1 || *indices.last().unwrap() > ambient {
            return Err(Error::InvalidParameter(format!(
                "multi-index out of range 1..={ambient}"
            )));
        }
        Ok(MultiIndex(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The bound index (t+1,...,k, n-t+1,...,n) describing the radius-2t ball
    /// around rs[I_k | 0]. For t above the Grassmannian diameter the index of
    /// the saturated ball is returned.
    pub fn ball_bound(t: usize, k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::DimensionMismatch(format!("k={k}, n={n}")));
        }
        if t > k {
            return Err(Error::RadiusOutOfRange { t, k });
        }
        let t = t.min(n - k);
        let indices: Vec<usize> = (t + 1..=k).chain(n - t + 1..=n).collect();
        MultiIndex::new(indices, n)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The order from the ball description: (i ≤ j) iff i = j or, at the first
/// position where they differ, i carries the smaller value.
pub fn multiindex_leq(a: &MultiIndex, b: &MultiIndex) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "multi-indices of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.0 <= b.0)
}

/// Componentwise dominance: a_l <= b_l for every position.
pub fn multiindex_dominated(a: &MultiIndex, b: &MultiIndex) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "multi-indices of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x <= y))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All k-element multi-indices over [1, n] in lexicographic order — the
/// coordinate order of every Plücker vector.
pub fn multi_indices(k: usize, n: usize) -> Vec<MultiIndex> {
    combinations(n, k).into_iter().map(MultiIndex).collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Position of a multi-index in the lexicographic enumeration.
fn lex_rank(indices: &[usize], n: usize) -> usize {
    let k = indices.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &c) in indices.iter().enumerate() {
        for j in prev + 1..c {
            rank += binomial(n - j, k - pos - 1);
        }
        prev = c;
    }
    rank
}

/// A projective Plücker vector: all C(n, k) maximal minors in lexicographic
/// multi-index order, first nonzero coordinate normalized to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlueckerPoint {
    q: u64,
    n: usize,
    k: usize,
    coords: Vec<u64>,
}

impl PlueckerPoint {
    pub fn new(q: u64, k: usize, n: usize, mut coords: Vec<u64>) -> Result<Self> {
        if coords.len() != binomial(n, k) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                binomial(n, k),
                coords.len()
            )));
        }
        for c in &mut coords {
            *c %= q;
        }
        let Some(first) = coords.iter().copied().find(|&c| c != 0) else {
            return Err(Error::ZeroSubspace);
        };
        if first != 1 {
            let inv = inv_mod(first, q);
            for c in &mut coords {
                *c = *c * inv % q;
            }
        }
        Ok(PlueckerPoint { q, n, k, coords })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, index: &MultiIndex) -> Result<u64> {
        if index.len() != self.k || *index.indices().last().unwrap() > self.n {
            return Err(Error::DimensionMismatch("multi-index does not fit".into()));
        }
        Ok(self.coords[lex_rank(index.indices(), self.n)])
    }

    /// The "12,13,14,23,24,34" legend matching the coordinate order.
    pub fn index_legend(&self) -> String {
        multi_indices(self.k, self.n)
            .iter()
            .map(|mi| {
                mi.indices()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for PlueckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(":"))
    }
}

/// The Plücker embedding: all maximal minors of the canonical basis. The
/// result does not depend on the basis choice (a basis change scales every
/// minor by the same nonzero determinant).
pub fn pluecker_embed(u: &Subspace) -> PlueckerPoint {
    let q = u.q();
    let k = u.dim();
    let n = u.ambient_dim();
    let basis = u.basis();
    let coords: Vec<u64> = combinations(n, k)
        .into_iter()
        .map(|cols| {
            let entries: Vec<u64> = (0..k)
                .flat_map(|r| cols.iter().map(move |&c| basis.get(r, c - 1)))
                .collect();
            MatFq::new(q, k, k, entries)
                .and_then(|m| m.determinant())
                .expect("square minor of a valid basis")
        })
        .collect();
    PlueckerPoint::new(q, k, n, coords).expect("a rank-k basis has a nonzero pivot minor")
}

/// An element of the k-th exterior power, written over the monomial basis
/// α^{i_1} ∧ ... ∧ α^{i_k} with 0-based, strictly increasing exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeElement {
    q: u64,
    n: usize,
    k: usize,
    coeffs: BTreeMap<Vec<usize>, u64>,
}

impl WedgeElement {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Nonzero coefficients, keyed by sorted 0-based exponent tuples.
    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (tuple, &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            let slots: Vec<String> = tuple.iter().map(|e| format!("a^{e}")).collect();
            write!(f, "({})", slots.join("∧"))?;
        }
        Ok(())
    }
}

/// Expand v_1 ∧ ... ∧ v_k over the monomial basis, with sorting-permutation
/// signs (trivial over F_2, required for odd q). Monomials with repeated
/// exponents vanish.
fn wedge_rows(q: u64, rows: &[Vec<u64>]) -> BTreeMap<Vec<usize>, u64> {
    let mut acc: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    acc.insert(Vec::new(), 1);
    for row in rows {
        let mut next: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (tuple, &c) in &acc {
            for (e, &lambda) in row.iter().enumerate() {
                if lambda == 0 || tuple.contains(&e) {
                    continue;
                }
                let greater = tuple.iter().filter(|&&t| t > e).count();
                let mut sorted = tuple.clone();
                let pos = sorted.partition_point(|&t| t < e);
                sorted.insert(pos, e);
                let mut term = c * lambda % q;
                if greater % 2 == 1 {
                    term = (q - term) % q;
                }
                let entry = next.entry(sorted).or_insert(0);
                *entry = (*entry + term) % q;
            }
        }
        next.retain(|_, &mut v| v != 0);
        acc = next;
    }
    acc
}

/// φ'(U): the wedge of the basis rows read as field elements.
pub fn wedge_from_subspace(u: &Subspace) -> WedgeElement {
    let rows: Vec<Vec<u64>> = (0..u.dim()).map(|r| u.basis().row(r).to_vec()).collect();
    WedgeElement {
        q: u.q(),
        n: u.ambient_dim(),
        k: u.dim(),
        coeffs: wedge_rows(u.q(), &rows),
    }
}

/// The star action: multiply every wedge slot by β and re-expand.
pub fn wedge_star(x: &WedgeElement, beta: &ExtElem, field: &ExtField) -> Result<WedgeElement> {
    if x.q != field.q() || x.n != field.n() {
        return Err(Error::FieldMismatch(format!(
            "wedge element over F_{}^{} in field F_{}^{}",
            x.q,
            x.n,
            field.q(),
            field.n()
        )));
    }
    if beta.is_zero() {
        return Err(Error::ZeroElement);
    }
    let q = x.q;
    let mut coeffs: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for (tuple, &c) in &x.coeffs {
        let rows: Vec<Vec<u64>> = tuple
            .iter()
            .map(|&e| {
                field
                    .mul(&field.alpha_power(e as i64), beta)
                    .map(|v| v.coords().to_vec())
            })
            .collect::<Result<_>>()?;
        for (t, v) in wedge_rows(q, &rows) {
            let entry = coeffs.entry(t).or_insert(0);
            *entry = (*entry + c * v) % q;
        }
    }
    coeffs.retain(|_, &mut v| v != 0);
    Ok(WedgeElement {
        q,
        n: x.n,
        k: x.k,
        coeffs,
    })
}

/// One star step with β = α: each α^{i_j} moves to α^{i_j+1}, exponents
/// reaching n re-expand through the modulus.
pub fn wedge_star_alpha(x: &WedgeElement, field: &ExtField) -> Result<WedgeElement> {
    wedge_star(x, &field.alpha_power(1), field)
}

/// Read the wedge coefficients off in lexicographic order as a projective
/// Plücker vector (0-based exponents shift to 1-based column indices).
pub fn wedge_to_point(x: &WedgeElement) -> Result<PlueckerPoint> {
    let mut coords = vec![0u64; binomial(x.n, x.k)];
    for (tuple, &c) in &x.coeffs {
        let shifted: Vec<usize> = tuple.iter().map(|e| e + 1).collect();
        coords[lex_rank(&shifted, x.n)] = c;
    }
    PlueckerPoint::new(x.q, x.k, x.n, coords)
}

/// The Plücker orbit: φ'(U), φ'(U)*α, φ'(U)*α², ... deduplicated
/// projectively. Elementwise this equals the embedding of the matrix orbit.
pub fn pluecker_orbit(u: &Subspace, field: &ExtField) -> Result<Vec<PlueckerPoint>> {
    if u.q() != field.q() || u.ambient_dim() != field.n() {
        return Err(Error::FieldMismatch(format!(
            "subspace of F_{}^{} in field F_{}^{}",
            u.q(),
            u.ambient_dim(),
            field.q(),
            field.n()
        )));
    }
    let mut wedge = wedge_from_subspace(u);
    let first = wedge_to_point(&wedge)?;
    let mut points = vec![first.clone()];
    loop {
        wedge = wedge_star_alpha(&wedge, field)?;
        let point = wedge_to_point(&wedge)?;
        if point == first {
            return Ok(points);
        }
        points.push(point);
        if points.len() as u64 > field.order_of_poly() {
            return Err(Error::Internal(
                "Plücker orbit did not close within the generator order".into(),
            ));
        }
    }
}

/// First Plücker coordinate of V that violates the radius-2t ball condition
/// around rs[I_k | 0], or None if V lies in the ball.
pub fn ball_center0_violation(v: &Subspace, t: usize) -> Result<Option<MultiIndex>> {
    let k = v.dim();
    let n = v.ambient_dim();
    if t > k {
        return Err(Error::RadiusOutOfRange { t, k });
    }
    let bound = MultiIndex::ball_bound(t, k, n)?;
    let point = pluecker_embed(v);
    for mi in multi_indices(k, n) {
        if !multiindex_leq(&mi, &bound)? && point.coord(&mi)? != 0 {
            return Ok(Some(mi));
        }
    }
    Ok(None)
}

/// Ball membership around the standard center rs[I_k | 0], decided purely
/// from vanishing Plücker coordinates.
pub fn ball_membership_center0(v: &Subspace, t: usize) -> Result<bool> {
    Ok(ball_center0_violation(v, t)?.is_none())
}

/// Extend the canonical basis of U to a full basis of F_q^n by appending
/// unit vectors at the non-pivot positions. The result G is invertible and
/// satisfies rs[I_k | 0]·G = U.
pub fn extend_to_basis(u: &Subspace) -> Result<MatFq> {
    let n = u.ambient_dim();
    let pivots = u.pivot_columns();
    let mut rows: Vec<Vec<u64>> = (0..u.dim()).map(|r| u.basis().row(r).to_vec()).collect();
    for c in 0..n {
        if !pivots.contains(&c) {
            let mut unit = vec![0u64; n];
            unit[c] = 1;
            rows.push(unit);
        }
    }
    MatFq::from_rows(u.q(), &rows)
}

/// Ball membership by the direct criterion dim(U ∩ V) >= k - t.
pub fn ball_membership(v: &Subspace, center: &Subspace, t: usize) -> Result<bool> {
    let k = center.dim();
    if v.dim() != k {
        return Err(Error::DimensionMismatch(
            "ball membership needs equal dimensions".into(),
        ));
    }
    if t > k {
        return Err(Error::RadiusOutOfRange { t, k });
    }
    Ok(center.intersection_dim(v)? + t >= k)
}

/// Ball membership by translating the center to rs[I_k | 0]: find G with
/// U = rs[I_k | 0]·G and test V·G^{-1} against the standard ball.
pub fn ball_membership_via_center(v: &Subspace, center: &Subspace, t: usize) -> Result<bool> {
    let k = center.dim();
    if v.dim() != k {
        return Err(Error::DimensionMismatch(
            "ball membership needs equal dimensions".into(),
        ));
    }
    if t > k {
        return Err(Error::RadiusOutOfRange { t, k });
    }
    let g = extend_to_basis(center)?;
    let moved = v.apply(&g.inverse()?)?;
    ball_membership_center0(&moved, t)
}

/// A full flag V_1 ⊂ V_2 ⊂ ... ⊂ V_n with dim V_i = i.
#[derive(Debug, Clone)]
pub struct Flag {
    subspaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(subspaces: Vec<Subspace>) -> Result<Self> {
        if subspaces.is_empty() {
            return Err(Error::MalformedFlag("empty flag".into()));
        }
        let n = subspaces[0].ambient_dim();
        let q = subspaces[0].q();
        if subspaces.len() != n {
            return Err(Error::MalformedFlag(format!(
                "expected {n} nested subspaces, got {}",
                subspaces.len()
            )));
        }
        for (i, s) in subspaces.iter().enumerate() {
            if s.q() != q || s.ambient_dim() != n {
                return Err(Error::MalformedFlag("mixed ambient spaces".into()));
            }
            if s.dim() != i + 1 {
                return Err(Error::MalformedFlag(format!(
                    "member {} has dimension {}, expected {}",
                    i + 1,
                    s.dim(),
                    i + 1
                )));
            }
            if i > 0 && subspaces[i - 1].intersection_dim(s)? != i {
                return Err(Error::MalformedFlag(format!(
                    "member {} does not contain member {}",
                    i + 1,
                    i
                )));
            }
        }
        Ok(Flag { subspaces })
    }

    /// The standard flag: V_i spanned by the first i unit vectors.
    pub fn standard(q: u64, n: usize) -> Result<Self> {
        let id = MatFq::identity(q, n)?;
        let subspaces = (1..=n)
            .map(|i| {
                let rows: Vec<Vec<u64>> = (0..i).map(|r| id.row(r).to_vec()).collect();
                Subspace::from_vectors(q, &rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Flag::new(subspaces)
    }

    /// A flag whose k-th member is the given subspace, completed with unit
    /// vectors at the non-pivot positions.
    pub fn through(u: &Subspace) -> Result<Self> {
        let full = extend_to_basis(u)?;
        let subspaces = (1..=u.ambient_dim())
            .map(|i| {
                let rows: Vec<Vec<u64>> = (0..i).map(|r| full.row(r).to_vec()).collect();
                Subspace::from_vectors(u.q(), &rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Flag::new(subspaces)
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspaces.len()
    }

    pub fn q(&self) -> u64 {
        self.subspaces[0].q()
    }

    /// V_i, 1-based.
    pub fn member(&self, i: usize) -> Result<&Subspace> {
        self.subspaces
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::MalformedFlag(format!("no member {i}")))
    }

    /// An n×n matrix whose first j rows span V_j for every j.
    pub fn adapted_basis(&self) -> Result<MatFq> {
        let n = self.ambient_dim();
        let q = self.q();
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
        for member in &self.subspaces {
            let mut extended = false;
            for r in 0..member.dim() {
                let candidate = member.basis().row(r).to_vec();
                let mut trial = rows.clone();
                trial.push(candidate.clone());
                if MatFq::from_rows(q, &trial)?.rank() == rows.len() + 1 {
                    rows.push(candidate);
                    extended = true;
                    break;
                }
            }
            if !extended {
                return Err(Error::MalformedFlag(
                    "flag member adds no new direction".into(),
                ));
            }
        }
        MatFq::from_rows(q, &rows)
    }
}

/// Schubert membership by the defining conditions dim(V ∩ V_{i_s}) >= s.
pub fn schubert_membership(v: &Subspace, flag: &Flag, index: &MultiIndex) -> Result<bool> {
    if flag.ambient_dim() != v.ambient_dim() || flag.q() != v.q() {
        return Err(Error::MalformedFlag("flag/ambient mismatch".into()));
    }
    if index.len() != v.dim() {
        return Err(Error::DimensionMismatch(format!(
            "multi-index of length {} for a {}-dimensional subspace",
            index.len(),
            v.dim()
        )));
    }
    for (s, &i) in index.indices().iter().enumerate() {
        if v.intersection_dim(flag.member(i)?)? < s + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first Plücker coordinate (in the flag-adapted basis) violating the
/// Schubert vanishing conditions, or None when V lies in the variety.
///
/// In the adapted basis the variety is cut out by x_j = 0 for every j not
/// componentwise dominated by the defining index; on ball indices this
/// coincides with the first-position order used by `multiindex_leq`.
pub fn schubert_violation(
    v: &Subspace,
    flag: &Flag,
    index: &MultiIndex,
) -> Result<Option<MultiIndex>> {
    if flag.ambient_dim() != v.ambient_dim() || flag.q() != v.q() {
        return Err(Error::MalformedFlag("flag/ambient mismatch".into()));
    }
    if index.len() != v.dim() {
        return Err(Error::DimensionMismatch(format!(
            "multi-index of length {} for a {}-dimensional subspace",
            index.len(),
            v.dim()
        )));
    }
    let adapted = flag.adapted_basis()?;
    let moved = v.apply(&adapted.inverse()?)?;
    let point = pluecker_embed(&moved);
    for mi in multi_indices(v.dim(), v.ambient_dim()) {
        if !multiindex_dominated(&mi, index)? && point.coord(&mi)? != 0 {
            return Ok(Some(mi));
        }
    }
    Ok(None)
}

/// Schubert membership by vanishing Plücker coordinates in a flag-adapted
/// basis; agrees with `schubert_membership` on every input.
pub fn schubert_membership_vanishing(
    v: &Subspace,
    flag: &Flag,
    index: &MultiIndex,
) -> Result<bool> {
    Ok(schubert_violation(v, flag, index)?.is_none())
}

/// Check the single-exchange Grassmann-Plücker quadratic relations.
pub fn grassmann_pluecker_ok(point: &PlueckerPoint) -> bool {
    let k = point.k();
    let n = point.ambient_dim();
    let q = point.q();
    if k < 2 {
        return true;
    }
    // signed lookup of p_{base ∪ {extra}}: zero on repeats, sign of sorting
    let signed = |base: &[usize], extra: usize| -> u64 {
        if base.contains(&extra) {
            return 0;
        }
        let greater = base.iter().filter(|&&b| b > extra).count();
        let mut tuple = base.to_vec();
        let pos = tuple.partition_point(|&b| b < extra);
        tuple.insert(pos, extra);
        let value = point.coords()[lex_rank(&tuple, n)];
        if greater % 2 == 1 {
            (q - value) % q
        } else {
            value
        }
    };
    for base in combinations(n, k - 1) {
        for exchange in combinations(n, k + 1) {
            let mut acc = 0u64;
            for (l, &jl) in exchange.iter().enumerate() {
                let mut rest = exchange.clone();
                rest.remove(l);
                let term = signed(&base, jl) * point.coords()[lex_rank(&rest, n)] % q;
                acc = if l % 2 == 0 {
                    (acc + term) % q
                } else {
                    (acc + q - term) % q
                };
            }
            if acc != 0 {
                return false;
            }
        }
    }
    true
}
