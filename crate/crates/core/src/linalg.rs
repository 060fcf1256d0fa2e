//! Matrices over F_q, reduced row echelon form, companion matrices, and
//! subspaces of F_q^n as Grassmannian points under the right GL_n action.
//!
//! The row-vector convention is used throughout: vectors multiply matrices
//! from the left (v ↦ vA), and companion matrices carry the polynomial
//! coefficients in their last row.

use std::fmt;

use crate::error::{Error, Result};
use crate::factor;
use crate::gf::{check_prime, digits_of, inv_mod, parse_digits, PolyFq};

/// A dense rows×cols matrix over F_q, entries row-major in [0, q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatFq {
    q: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatFq {
    pub fn new(q: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        check_prime(q)?;
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(MatFq {
            q,
            rows,
            cols,
            entries: entries.into_iter().map(|e| e % q).collect(),
        })
    }

    pub fn from_rows(q: u64, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        MatFq::new(q, rows.len(), cols, rows.concat())
    }

    pub fn zero(q: u64, rows: usize, cols: usize) -> Result<Self> {
        MatFq::new(q, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(q: u64, n: usize) -> Result<Self> {
        let mut m = MatFq::zero(q, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        Ok(m)
    }

    /// One row per line, each row a digit string like "100110".
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_digits(q, l))
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("no rows".into()));
        }
        MatFq::from_rows(q, &rows)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.q;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| digits_of(self.row(r), self.q))
            .collect()
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::FieldMismatch(format!(
                "F_{} vs F_{}",
                self.q, other.q
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let q = self.q;
        let mut out = MatFq::zero(q, self.rows, rhs.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.get(i, j) + a * rhs.get(k, j)) % q;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix power by repeated squaring; requires a square matrix.
    pub fn pow(&self, mut e: u128) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("pow of non-square matrix".into()));
        }
        let mut acc = MatFq::identity(self.q, self.rows)?;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The unique reduced row echelon form and the rank.
    pub fn rref(&self) -> (Self, usize) {
        let q = self.q;
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for c in 0..m.cols {
                let tmp = m.get(pivot_row, c);
                m.set(pivot_row, c, m.get(r, c));
                m.set(r, c, tmp);
            }
            let inv = inv_mod(m.get(pivot_row, col), q);
            for c in 0..m.cols {
                m.set(pivot_row, c, m.get(pivot_row, c) * inv % q);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && m.get(r2, col) != 0 {
                    let f = m.get(r2, col);
                    for c in 0..m.cols {
                        let v = (m.get(r2, c) + q - f * m.get(pivot_row, c) % q) % q;
                        m.set(r2, c, v);
                    }
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "inverse of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let q = self.q;
        // augmented [self | I], reduce, read off the right block
        let mut aug = MatFq::zero(q, n, 2 * n)?;
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (red, _) = aug.rref();
        for i in 0..n {
            for j in 0..n {
                if red.get(i, j) != u64::from(i == j) {
                    return Err(Error::SingularMatrix);
                }
            }
        }
        let mut inv = MatFq::zero(q, n, n)?;
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let q = self.q;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return Ok(0);
            };
            if r != col {
                for c in 0..n {
                    let tmp = m.get(col, c);
                    m.set(col, c, m.get(r, c));
                    m.set(r, c, tmp);
                }
                det = det * (q - 1) % q;
            }
            let pivot = m.get(col, col);
            det = det * pivot % q;
            let inv = inv_mod(pivot, q);
            for r2 in col + 1..n {
                if m.get(r2, col) != 0 {
                    let f = m.get(r2, col) * inv % q;
                    for c in col..n {
                        let v = (m.get(r2, c) + q - f * m.get(col, c) % q) % q;
                        m.set(r2, c, v);
                    }
                }
            }
        }
        Ok(det)
    }

    /// det(xI - A), computed by fraction-free (Bareiss) elimination over
    /// F_q[x]; valid in positive characteristic.
    pub fn characteristic_polynomial(&self) -> Result<PolyFq> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "characteristic polynomial of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let q = self.q;
        // b[i][j] = x·[i==j] - A[i][j]
        let mut b: Vec<Vec<PolyFq>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let diag = if i == j { 1 } else { 0 };
                        PolyFq::new(q, vec![(q - self.get(i, j)) % q, diag]).unwrap()
                    })
                    .collect()
            })
            .collect();
        let mut negate = false;
        let mut prev = PolyFq::one(q)?;
        for k in 0..n.saturating_sub(1) {
            if b[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !b[i][k].is_zero()) else {
                    return PolyFq::zero(q);
                };
                b.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = b[i][j].mul(&b[k][k]).sub(&b[i][k].mul(&b[k][j]));
                    let (quot, rem) = num.divmod(&prev)?;
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    b[i][j] = quot;
                }
            }
            prev = b[k][k].clone();
        }
        let mut det = b[n - 1][n - 1].clone();
        if negate {
            det = PolyFq::zero(q)?.sub(&det);
        }
        Ok(det)
    }

    /// Smallest m >= 1 with A^m = I.
    ///
    /// When the characteristic polynomial is irreducible this equals the
    /// polynomial order; otherwise the order is found by reducing the
    /// |GL_n| exponent prime by prime, with an iterative fallback capped
    /// at q^n when the group order overflows.
    pub fn order(&self) -> Result<u64> {
        if !self.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let cp = self.characteristic_polynomial()?;
        if cp.is_irreducible()? {
            return cp.order();
        }
        let n = self.rows as u32;
        let q = self.q;
        // |GL_n(q)| = q^(n(n-1)/2) · ∏_{i=1..n} (q^i - 1), factored piecewise
        let push = |p: u64, e: u32, primes: &mut Vec<(u64, u32)>| match primes
            .iter_mut()
            .find(|(pp, _)| *pp == p)
        {
            Some((_, ee)) => *ee += e,
            None => primes.push((p, e)),
        };
        let mut primes: Vec<(u64, u32)> = Vec::new();
        if q.checked_pow(n).is_some() {
            push(q, n * (n - 1) / 2, &mut primes);
            for i in 1..=n {
                for (p, e) in factor::factorize(q.pow(i) - 1) {
                    push(p, e, &mut primes);
                }
            }
            let group_exp = primes.iter().try_fold(1u128, |acc, &(p, e)| {
                acc.checked_mul((p as u128).checked_pow(e)?)
            });
            if let Some(total) = group_exp {
                let identity = MatFq::identity(q, self.rows)?;
                if self.pow(total)? == identity {
                    let mut e = total;
                    for &(p, _) in &primes {
                        while e % p as u128 == 0 && self.pow(e / p as u128)? == identity {
                            e /= p as u128;
                        }
                    }
                    return u64::try_from(e)
                        .map_err(|_| Error::TooLarge("matrix order exceeds u64".into()));
                }
            }
        }
        let cap = q.checked_pow(n).unwrap_or(u64::MAX);
        let identity = MatFq::identity(q, self.rows)?;
        let mut acc = self.clone();
        for m in 1..=cap {
            if acc == identity {
                return Ok(m);
            }
            acc = acc.mul(self)?;
        }
        Err(Error::OrderSearchExceeded(cap))
    }

    /// A square matrix is irreducible exactly when its characteristic
    /// polynomial is irreducible.
    pub fn is_irreducible_matrix(&self) -> Result<bool> {
        self.characteristic_polynomial()?.is_irreducible()
    }
}

impl fmt::Display for MatFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", digits_of(self.row(r), self.q))?;
        }
        Ok(())
    }
}

/// Row vector times matrix.
pub fn vector_mul(v: &[u64], m: &MatFq) -> Result<Vec<u64>> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} times {}x{} matrix",
            v.len(),
            m.rows(),
            m.cols()
        )));
    }
    let q = m.q();
    let mut out = vec![0u64; m.cols()];
    for (i, &vi) in v.iter().enumerate() {
        if vi % q == 0 {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = (*o + vi % q * m.get(i, j)) % q;
        }
    }
    Ok(out)
}

/// Companion matrix of a monic polynomial, coefficients in the last row:
/// rows 0..n-2 are the shifted unit vectors, the last row is
/// (-c_0, ..., -c_{n-1}).
pub fn companion_matrix(p: &PolyFq) -> Result<MatFq> {
    let n = p
        .degree()
        .ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
    if n == 0 {
        return Err(Error::InvalidPolynomial("constant polynomial".into()));
    }
    if !p.is_monic() {
        return Err(Error::InvalidPolynomial(
            "companion form needs a monic polynomial".into(),
        ));
    }
    let q = p.q();
    let mut m = MatFq::zero(q, n, n)?;
    for i in 0..n - 1 {
        m.set(i, i + 1, 1);
    }
    for j in 0..n {
        m.set(n - 1, j, (q - p.coeff(j) % q) % q);
    }
    Ok(m)
}

/// A point of the Grassmannian G_q(k, n), canonically stored as its unique
/// reduced-row-echelon-form basis. Equality and hashing use that canonical
/// basis byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: MatFq,
}

impl Subspace {
    /// Canonicalize arbitrary spanning rows: reduce, drop zero rows. The
    /// zero row space is rejected.
    pub fn from_rows(rows: &MatFq) -> Result<Self> {
        let (red, rank) = rows.rref();
        if rank == 0 {
            return Err(Error::ZeroSubspace);
        }
        let mut entries = Vec::with_capacity(rank * red.cols());
        for r in 0..rank {
            entries.extend_from_slice(red.row(r));
        }
        Ok(Subspace {
            basis: MatFq::new(rows.q(), rank, red.cols(), entries)?,
        })
    }

    pub fn from_vectors(q: u64, vectors: &[Vec<u64>]) -> Result<Self> {
        Self::from_rows(&MatFq::from_rows(q, vectors)?)
    }

    /// Rows as digit strings, e.g. ["1000", "0110"].
    pub fn parse(q: u64, rows: &str) -> Result<Self> {
        let text = rows.replace(',', "\n");
        Self::from_rows(&MatFq::parse(q, &text)?)
    }

    pub fn q(&self) -> u64 {
        self.basis.q()
    }

    /// Ambient dimension n.
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Subspace dimension k.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatFq {
        &self.basis
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.basis.row_strings()
    }

    /// Pivot columns of the canonical basis (0-based).
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let c = (0..self.ambient_dim())
                .find(|&c| self.basis.get(r, c) != 0)
                .expect("canonical basis has no zero rows");
            out.push(c);
        }
        out
    }

    /// Membership by reduction against the canonical basis.
    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        let q = self.q();
        let mut v: Vec<u64> = v.iter().map(|&x| x % q).collect();
        for (r, &pc) in self.pivot_columns().iter().enumerate() {
            if v[pc] != 0 {
                let f = v[pc];
                for (c, entry) in v.iter_mut().enumerate() {
                    *entry = (*entry + q - f * self.basis.get(r, c) % q) % q;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// All q^k - 1 nonzero vectors of the subspace, in a deterministic order.
    pub fn nonzero_vectors(&self) -> Vec<Vec<u64>> {
        let q = self.q();
        let k = self.dim();
        let n = self.ambient_dim();
        let mut out = Vec::with_capacity((q as usize).pow(k as u32) - 1);
        let mut coeffs = vec![0u64; k];
        loop {
            // odometer increment
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
            }
            let mut v = vec![0u64; n];
            for (r, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, vj) in v.iter_mut().enumerate() {
                    *vj = (*vj + c * self.basis.get(r, j)) % q;
                }
            }
            out.push(v);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.q() != other.q() || self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "G_{}(.,{}) vs G_{}(.,{})",
                self.q(),
                self.ambient_dim(),
                other.q(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    /// dim(U ∩ V) = dim U + dim V - rank of the stacked bases.
    pub fn intersection_dim(&self, other: &Self) -> Result<usize> {
        self.check_compatible(other)?;
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(self.dim() + other.dim());
        rows.extend((0..self.dim()).map(|r| self.basis.row(r).to_vec()));
        rows.extend((0..other.dim()).map(|r| other.basis.row(r).to_vec()));
        let stacked = MatFq::from_rows(self.q(), &rows)?;
        Ok(self.dim() + other.dim() - stacked.rank())
    }

    /// Subspace distance: dim U + dim V - 2 dim(U ∩ V).
    pub fn distance(&self, other: &Self) -> Result<usize> {
        Ok(self.dim() + other.dim() - 2 * self.intersection_dim(other)?)
    }

    /// The right action U ↦ rs(U·A) for invertible A.
    pub fn apply(&self, a: &MatFq) -> Result<Self> {
        if a.rows() != self.ambient_dim() || a.cols() != self.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "action matrix must be {0}x{0}",
                self.ambient_dim()
            )));
        }
        if !a.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Self::from_rows(&self.basis.mul(a)?)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

/// Every point of G_q(k, n), enumerated by pivot-column set (lexicographic)
/// and then by free entries. Sizes are Gaussian binomials; intended for the
/// small sweeps used in verification.
pub fn grassmannian(q: u64, k: usize, n: usize) -> Result<Vec<Subspace>> {
    check_prime(q)?;
    if k == 0 || k > n {
        return Err(Error::DimensionMismatch(format!(
            "G_{q}({k},{n}) is empty or degenerate"
        )));
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions: right of each pivot, excluding pivot columns
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = pivots.clone();
                (pivots[r] + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut vals = vec![0u64; free.len()];
        loop {
            let mut m = MatFq::zero(q, k, n)?;
            for (r, &p) in pivots.iter().enumerate() {
                m.set(r, p, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                m.set(r, c, v);
            }
            out.push(Subspace { basis: m });
            // odometer over free values
            let mut i = vals.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                vals[i] += 1;
                if vals[i] < q {
                    break;
                }
                vals[i] = 0;
            }
            if vals.iter().all(|&v| v == 0) {
                break;
            }
        }
        // next pivot combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}
