//! Arithmetic in F_q (q prime) and in extension fields F_{q^n} = F_q[x]/(p(x)).
//!
//! An extension-field element is stored as its length-n coefficient vector
//! over F_q: the vector (v_1, ..., v_n) stands for v_1 + v_2 α + ... + v_n α^{n-1}
//! where α is a root of the defining polynomial. The classical vector-space
//! isomorphism between F_q^n and F_{q^n} is therefore the identity on this
//! representation; no separate conversion step exists or is needed.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::factor;

/// Default cap on the field size for which a discrete-log table is built.
pub const DEFAULT_LOG_CAP: u64 = 1 << 20;

pub(crate) fn check_prime(q: u64) -> Result<()> {
    if factor::is_prime(q) {
        Ok(())
    } else {
        Err(Error::NonPrimeModulus(q))
    }
}

/// Multiplicative inverse modulo a prime.
pub(crate) fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    // Fermat: a^(q-2) mod q.
    let mut acc = 1u64;
    let mut base = a % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

/// A polynomial over F_q, coefficients ascending by degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFq {
    q: u64,
    coeffs: Vec<u64>,
}

impl PolyFq {
    /// Build a polynomial from ascending coefficients; values are reduced mod q.
    pub fn new(q: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_prime(q)?;
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(PolyFq { q, coeffs })
    }

    pub fn zero(q: u64) -> Result<Self> {
        Self::new(q, vec![])
    }

    pub fn one(q: u64) -> Result<Self> {
        Self::new(q, vec![1])
    }

    /// The monomial x.
    pub fn x(q: u64) -> Result<Self> {
        Self::new(q, vec![0, 1])
    }

    /// Accepts either an ascending coefficient list ("1,1,0,0,0,0,1") or a
    /// human form ("x^6+x+1", "2x^3+x+2").
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        check_prime(q)?;
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.contains('x') {
            return Self::parse_human(q, &s);
        }
        let coeffs = s
            .split(',')
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::new(q, coeffs)
    }

    fn parse_human(q: u64, s: &str) -> Result<Self> {
        let s = s.replace('*', "");
        let mut acc: HashMap<usize, i64> = HashMap::new();
        let mut rest = s.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        while !rest.is_empty() {
            let end = rest
                .char_indices()
                .skip(1)
                .find(|&(i, c)| (c == '+' || c == '-') && !rest[..i].ends_with('^'))
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            let (coeff, deg) = Self::parse_term(term)?;
            *acc.entry(deg).or_insert(0) += sign * coeff as i64;
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        let max_deg = acc.keys().copied().max().unwrap_or(0);
        let mut coeffs = vec![0u64; max_deg + 1];
        for (deg, val) in acc {
            coeffs[deg] = val.rem_euclid(q as i64) as u64;
        }
        Self::new(q, coeffs)
    }

    fn parse_term(term: &str) -> Result<(u64, usize)> {
        if term.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        match term.find('x') {
            None => {
                let c = term
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad term {term:?}")))?;
                Ok((c, 0))
            }
            Some(pos) => {
                let coeff = if pos == 0 {
                    1
                } else {
                    term[..pos]
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad term {term:?}")))?
                };
                let tail = &term[pos + 1..];
                let deg = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?
                };
                Ok((coeff, deg))
            }
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn coeff(&self, deg: usize) -> u64 {
        self.coeffs.get(deg).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let q = self.q;
        let x = x % q;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x + c) % q)
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.q, other.q, "polynomials over different prime fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let q = self.q;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = (self.coeff(i) + other.coeff(i)) % q;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFq { q, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let q = self.q;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = (self.coeff(i) + q - other.coeff(i)) % q;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFq { q, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let q = self.q;
        if self.is_zero() || other.is_zero() {
            return PolyFq { q, coeffs: vec![] };
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % q;
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFq { q, coeffs }
    }

    /// Long division; divisor must be nonzero.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.assert_same_field(divisor);
        let q = self.q;
        if divisor.is_zero() {
            return Err(Error::InvalidPolynomial("division by zero".into()));
        }
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = inv_mod(*divisor.coeffs.last().unwrap(), q);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = *rem.last().unwrap();
            if c != 0 {
                let f = c * lead_inv % q;
                let shift = rem.len() - 1 - dd;
                quot[shift] = f;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = (rem[shift + i] + q - f * dc % q) % q;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        while quot.last() == Some(&0) {
            quot.pop();
        }
        Ok((PolyFq { q, coeffs: quot }, PolyFq { q, coeffs: rem }))
    }

    pub fn rem(&self, modulus: &Self) -> Result<Self> {
        Ok(self.divmod(modulus)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.assert_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if let Some(&lead) = a.coeffs.last() {
            if lead != 1 {
                let inv = inv_mod(lead, a.q);
                for c in &mut a.coeffs {
                    *c = *c * inv % a.q;
                }
            }
        }
        Ok(a)
    }

    /// self^exp mod modulus, by repeated squaring.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = PolyFq::one(self.q)?.rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Deterministic irreducibility test: gcd(x^{q^i} - x, p) must be constant
    /// for every i up to deg/2, and x^{q^deg} must reduce to x.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            None | Some(0) => {
                return Err(Error::InvalidPolynomial(
                    "irreducibility is only defined for degree >= 1".into(),
                ))
            }
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let x = PolyFq::x(self.q)?;
        for i in 1..=n / 2 {
            let e = self
                .q
                .checked_pow(i as u32)
                .ok_or_else(|| Error::TooLarge(format!("q^{i} overflows u64")))?;
            let xq = x.pow_mod(e, self)?;
            let g = xq.sub(&x).gcd(self)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        let e = self
            .q
            .checked_pow(n as u32)
            .ok_or_else(|| Error::TooLarge(format!("q^{n} overflows u64")))?;
        Ok(x.pow_mod(e, self)? == x.rem(self)?)
    }

    /// Smallest e >= 1 with x^e = 1 mod self. Requires an irreducible
    /// polynomial with nonzero constant term; e divides q^deg - 1, so only
    /// divisors of q^deg - 1 are tested, in increasing order.
    pub fn order(&self) -> Result<u64> {
        if !self.is_irreducible()? {
            return Err(Error::ReduciblePolynomial);
        }
        if self.constant_term() == 0 {
            return Err(Error::InvalidPolynomial(
                "order requires a nonzero constant term".into(),
            ));
        }
        let n = self.degree().unwrap();
        let size = self
            .q
            .checked_pow(n as u32)
            .ok_or_else(|| Error::TooLarge(format!("q^{n} overflows u64")))?;
        let x = PolyFq::x(self.q)?;
        let one = PolyFq::one(self.q)?;
        for e in factor::divisors(size - 1) {
            if x.pow_mod(e, self)? == one {
                return Ok(e);
            }
        }
        Err(Error::Internal("order not found among divisors".into()))
    }

    /// True iff the order equals q^deg - 1.
    pub fn is_primitive(&self) -> Result<bool> {
        let n = self
            .degree()
            .ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
        let size = self
            .q
            .checked_pow(n as u32)
            .ok_or_else(|| Error::TooLarge(format!("q^{n} overflows u64")))?;
        Ok(self.order()? == size - 1)
    }
}

impl fmt::Display for PolyFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{deg}")?,
                _ => write!(f, "{c}x^{deg}")?,
            }
        }
        Ok(())
    }
}

/// An element of F_{q^n}: the coefficient vector of 1, α, ..., α^{n-1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    q: u64,
    coords: Vec<u64>,
}

impl ExtElem {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Low-degree-first digit string, e.g. "000110" for α^3 + α^4.
    pub fn digits(&self) -> String {
        digits_of(&self.coords, self.q)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

pub(crate) fn digits_of(coords: &[u64], q: u64) -> String {
    if q <= 10 {
        coords
            .iter()
            .map(|&c| char::from_digit(c as u32, 10).unwrap())
            .collect()
    } else {
        coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn parse_digits(q: u64, text: &str) -> Result<Vec<u64>> {
    let vals: Vec<u64> = if q <= 10 && !text.contains(',') {
        text.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(u64::from)
                    .ok_or_else(|| Error::Parse(format!("bad digit {ch:?}")))
            })
            .collect::<Result<Vec<u64>>>()?
    } else {
        text.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad value {tok:?}")))
            })
            .collect::<Result<Vec<u64>>>()?
    };
    if vals.iter().any(|&v| v >= q) {
        return Err(Error::Parse(format!("value out of range for F_{q}")));
    }
    if vals.is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    Ok(vals)
}

/// The extension field F_{q^n} defined by an irreducible modulus of degree n.
///
/// The polynomial order and primitivity are computed once at construction;
/// the discrete-log table is built lazily (and race-free) on first use and
/// only when q^n stays at or below the configured cap.
pub struct ExtField {
    q: u64,
    n: usize,
    modulus: PolyFq,
    order_of_poly: u64,
    primitive: bool,
    log_cap: u64,
    log_table: OnceLock<HashMap<Vec<u64>, u64>>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtField")
            .field("q", &self.q)
            .field("n", &self.n)
            .field("modulus", &self.modulus.to_string())
            .field("order_of_poly", &self.order_of_poly)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl Clone for ExtField {
    fn clone(&self) -> Self {
        ExtField {
            q: self.q,
            n: self.n,
            modulus: self.modulus.clone(),
            order_of_poly: self.order_of_poly,
            primitive: self.primitive,
            log_cap: self.log_cap,
            log_table: OnceLock::new(),
        }
    }
}

impl ExtField {
    pub fn new(modulus: PolyFq) -> Result<Self> {
        Self::with_log_cap(modulus, DEFAULT_LOG_CAP)
    }

    pub fn with_log_cap(modulus: PolyFq, log_cap: u64) -> Result<Self> {
        let n = modulus
            .degree()
            .ok_or_else(|| Error::InvalidPolynomial("zero modulus".into()))?;
        if n == 0 {
            return Err(Error::InvalidPolynomial("constant modulus".into()));
        }
        if modulus.constant_term() == 0 {
            return Err(Error::InvalidPolynomial(
                "modulus must have nonzero constant term".into(),
            ));
        }
        if !modulus.is_irreducible()? {
            return Err(Error::ReduciblePolynomial);
        }
        let q = modulus.q();
        let size = q
            .checked_pow(n as u32)
            .ok_or_else(|| Error::TooLarge(format!("q^{n} overflows u64")))?;
        let order_of_poly = modulus.order()?;
        debug_assert_eq!((size - 1) % order_of_poly, 0);
        Ok(ExtField {
            q,
            n,
            modulus,
            order_of_poly,
            primitive: order_of_poly == size - 1,
            log_cap,
            log_table: OnceLock::new(),
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &PolyFq {
        &self.modulus
    }

    pub fn order_of_poly(&self) -> u64 {
        self.order_of_poly
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// q^n.
    pub fn size(&self) -> u64 {
        self.q.pow(self.n as u32)
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<ExtElem> {
        if coords.len() != self.n {
            return Err(Error::FieldMismatch(format!(
                "expected {} coordinates, got {}",
                self.n,
                coords.len()
            )));
        }
        Ok(ExtElem {
            q: self.q,
            coords: coords.into_iter().map(|c| c % self.q).collect(),
        })
    }

    pub fn parse_element(&self, text: &str) -> Result<ExtElem> {
        self.element(parse_digits(self.q, text)?)
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem {
            q: self.q,
            coords: vec![0; self.n],
        }
    }

    pub fn one(&self) -> ExtElem {
        let mut coords = vec![0; self.n];
        coords[0] = 1;
        ExtElem { q: self.q, coords }
    }

    fn check_member(&self, a: &ExtElem) -> Result<()> {
        if a.q != self.q || a.coords.len() != self.n {
            return Err(Error::FieldMismatch(format!(
                "element of F_{}^{} used in F_{}^{}",
                a.q,
                a.coords.len(),
                self.q,
                self.n
            )));
        }
        Ok(())
    }

    fn elem_from_poly(&self, p: &PolyFq) -> ExtElem {
        let mut coords = vec![0u64; self.n];
        coords[..p.coeffs().len()].copy_from_slice(p.coeffs());
        ExtElem { q: self.q, coords }
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(ExtElem {
            q: self.q,
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| (x + y) % self.q)
                .collect(),
        })
    }

    /// Product in F_{q^n}: multiply as polynomials in α, reduce by the modulus.
    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        let pa = PolyFq::new(self.q, a.coords.clone())?;
        let pb = PolyFq::new(self.q, b.coords.clone())?;
        let prod = pa.mul(&pb).rem(&self.modulus)?;
        Ok(self.elem_from_poly(&prod))
    }

    /// α^i for any integer i, reduced modulo the order of the modulus.
    pub fn alpha_power(&self, i: i64) -> ExtElem {
        let e = i.rem_euclid(self.order_of_poly as i64) as u64;
        let x = PolyFq::x(self.q).unwrap();
        let p = x.pow_mod(e, &self.modulus).unwrap();
        self.elem_from_poly(&p)
    }

    /// The unique b in [0, q^n - 2] with α^b = v. Requires a primitive modulus,
    /// a nonzero element, and a field no larger than the log cap.
    pub fn discrete_log(&self, v: &ExtElem) -> Result<u64> {
        self.check_member(v)?;
        if !self.primitive {
            return Err(Error::NotPrimitive);
        }
        if v.is_zero() {
            return Err(Error::ZeroElement);
        }
        let size = self.size();
        if size > self.log_cap {
            return Err(Error::LogTableCapExceeded {
                size,
                cap: self.log_cap,
            });
        }
        let table = self.log_table.get_or_init(|| {
            let mut map = HashMap::with_capacity((size - 1) as usize);
            let mut cur = self.one();
            for i in 0..size - 1 {
                map.insert(cur.coords.clone(), i);
                cur = self.mul(&cur, &self.alpha_power(1)).unwrap();
            }
            map
        });
        table
            .get(&v.coords)
            .copied()
            .ok_or_else(|| Error::Internal("element missing from log table".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2x6() -> ExtField {
        ExtField::new(PolyFq::parse(2, "x^6+x+1").unwrap()).unwrap()
    }

    #[test]
    fn parse_both_formats() {
        let a = PolyFq::parse(2, "1,1,0,0,0,0,1").unwrap();
        let b = PolyFq::parse(2, "x^6+x+1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x^6+x+1");
        let c = PolyFq::parse(3, "2x^3+x+2").unwrap();
        assert_eq!(c.coeffs(), &[2, 1, 0, 2]);
        assert_eq!(c.to_string(), "2x^3+x+2");
        let d = PolyFq::parse(3, "x^2-x-1").unwrap();
        assert_eq!(d.coeffs(), &[2, 2, 1]);
        assert!(PolyFq::parse(2, "x^^2").is_err());
        assert!(PolyFq::parse(2, "").is_err());
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert!(matches!(
            PolyFq::new(4, vec![1, 1, 1]),
            Err(Error::NonPrimeModulus(4))
        ));
        assert!(matches!(
            PolyFq::new(1, vec![1]),
            Err(Error::NonPrimeModulus(1))
        ));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(PolyFq::parse(2, "x^2+x+1")
            .unwrap()
            .is_irreducible()
            .unwrap());
        assert!(!PolyFq::parse(2, "x^2+1").unwrap().is_irreducible().unwrap());
        assert!(PolyFq::parse(2, "x^4+x^3+x^2+x+1")
            .unwrap()
            .is_irreducible()
            .unwrap());
        assert!(PolyFq::parse(2, "x").unwrap().is_irreducible().unwrap());
        assert!(PolyFq::one(2).unwrap().is_irreducible().is_err());
        assert!(PolyFq::zero(2).unwrap().is_irreducible().is_err());
    }

    #[test]
    fn poly_orders() {
        assert_eq!(PolyFq::parse(2, "x^4+x+1").unwrap().order().unwrap(), 15);
        assert_eq!(PolyFq::parse(2, "x^4+x^3+1").unwrap().order().unwrap(), 15);
        assert_eq!(
            PolyFq::parse(2, "x^4+x^3+x^2+x+1")
                .unwrap()
                .order()
                .unwrap(),
            5
        );
        assert_eq!(PolyFq::parse(2, "x^6+x+1").unwrap().order().unwrap(), 63);
        // reducible and p(0)=0 inputs are rejected
        assert!(matches!(
            PolyFq::parse(2, "x^2+1").unwrap().order(),
            Err(Error::ReduciblePolynomial)
        ));
        assert!(PolyFq::parse(2, "x").unwrap().order().is_err());
    }

    #[test]
    fn primitivity() {
        assert!(PolyFq::parse(2, "x^6+x+1").unwrap().is_primitive().unwrap());
        assert!(PolyFq::parse(2, "x^4+x+1").unwrap().is_primitive().unwrap());
        assert!(!PolyFq::parse(2, "x^4+x^3+x^2+x+1")
            .unwrap()
            .is_primitive()
            .unwrap());
    }

    #[test]
    fn alpha_powers_match_worked_example() {
        let f = f2x6();
        assert_eq!(f.alpha_power(0).coords(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(f.alpha_power(9).coords(), &[0, 0, 0, 1, 1, 0]);
        assert_eq!(f.alpha_power(18).coords(), &[1, 1, 1, 1, 0, 0]);
        // negative exponents reduce modulo the order
        assert_eq!(f.alpha_power(-54), f.alpha_power(9));
        assert_eq!(f.alpha_power(63), f.alpha_power(0));
    }

    #[test]
    fn alpha_21_is_110111() {
        // The subfield F_4 inside F_64 is {0, 1, α^21, α^42}; its generator
        // must satisfy w^2 = 1 + w. Three routes agree on α^21 = (110111).
        let f = f2x6();
        let via_pow = f.alpha_power(21);
        let mut via_iter = f.one();
        for _ in 0..21 {
            via_iter = f.mul(&via_iter, &f.alpha_power(1)).unwrap();
        }
        let via_mul = f.mul(&f.alpha_power(10), &f.alpha_power(11)).unwrap();
        assert_eq!(via_pow, via_iter);
        assert_eq!(via_pow, via_mul);
        assert_eq!(via_pow.coords(), &[1, 1, 0, 1, 1, 1]);
        let sq = f.mul(&via_pow, &via_pow).unwrap();
        assert_eq!(sq, f.add(&f.one(), &via_pow).unwrap());
        // (111000) is α^26, not α^21
        assert_eq!(f.alpha_power(26).coords(), &[1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn ext_mul_examples() {
        let f = f2x6();
        let prod = f.mul(&f.alpha_power(3), &f.alpha_power(6)).unwrap();
        assert_eq!(prod, f.alpha_power(9));
        assert_eq!(prod.coords(), &[0, 0, 0, 1, 1, 0]);
        let a = f.element(vec![1, 0, 1, 1, 0, 1]).unwrap();
        assert_eq!(f.mul(&a, &f.one()).unwrap(), a);
        let mismatched = ExtField::new(PolyFq::parse(2, "x^4+x+1").unwrap()).unwrap();
        assert!(f.mul(&a, &mismatched.one()).is_err());
    }

    #[test]
    fn discrete_log_examples() {
        let f = f2x6();
        assert_eq!(f.discrete_log(&f.one()).unwrap(), 0);
        assert_eq!(
            f.discrete_log(&f.element(vec![0, 0, 0, 1, 1, 0]).unwrap())
                .unwrap(),
            9
        );
        assert_eq!(
            f.discrete_log(&f.element(vec![1, 1, 0, 1, 1, 1]).unwrap())
                .unwrap(),
            21
        );
        assert_eq!(
            f.discrete_log(&f.element(vec![1, 1, 1, 0, 0, 0]).unwrap())
                .unwrap(),
            26
        );
        assert!(matches!(f.discrete_log(&f.zero()), Err(Error::ZeroElement)));
    }

    #[test]
    fn discrete_log_guards() {
        let nonprim = ExtField::new(PolyFq::parse(2, "x^4+x^3+x^2+x+1").unwrap()).unwrap();
        assert!(matches!(
            nonprim.discrete_log(&nonprim.one()),
            Err(Error::NotPrimitive)
        ));
        let capped = ExtField::with_log_cap(PolyFq::parse(2, "x^6+x+1").unwrap(), 32).unwrap();
        assert!(matches!(
            capped.discrete_log(&capped.one()),
            Err(Error::LogTableCapExceeded { size: 64, cap: 32 })
        ));
    }

    #[test]
    fn field_construction_guards() {
        assert!(matches!(
            ExtField::new(PolyFq::parse(2, "x^2+1").unwrap()),
            Err(Error::ReduciblePolynomial)
        ));
        assert!(ExtField::new(PolyFq::parse(2, "x").unwrap()).is_err());
        assert!(ExtField::new(PolyFq::parse(2, "1").unwrap()).is_err());
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<PolyFq>();
        assert_send_sync::<ExtElem>();
        assert_send_sync::<ExtField>();
    }

    #[test]
    fn element_digits_round_trip() {
        let f = f2x6();
        let v = f.parse_element("000110").unwrap();
        assert_eq!(v, f.alpha_power(9));
        assert_eq!(v.digits(), "000110");
        assert!(f.parse_element("0001").is_err());
        assert!(f.parse_element("00021?").is_err());
        let f3 = ExtField::new(PolyFq::parse(3, "x^2+1").unwrap()).unwrap();
        assert_eq!(f3.parse_element("21").unwrap().coords(), &[2, 1]);
    }
}
