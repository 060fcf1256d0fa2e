//! Shared helpers for the integration suites: independent oracles and
//! deterministic random generators.

#![allow(dead_code)]

use orbitcodes::{MatFq, PolyFq, Subspace};
use rand::rngs::StdRng;
use rand::Rng;

/// All monic polynomials of the given degree over F_q.
pub fn monic_polys(q: u64, degree: usize) -> Vec<PolyFq> {
    let mut out = Vec::new();
    let count = (q as usize).pow(degree as u32);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = idx;
        for _ in 0..degree {
            coeffs.push((rest % q as usize) as u64);
            rest /= q as usize;
        }
        coeffs.push(1);
        out.push(PolyFq::new(q, coeffs).unwrap());
    }
    out
}

/// Irreducibility by exhaustive trial division against all lower-degree
/// monic divisors — independent of the library's gcd-based test.
pub fn oracle_irreducible(p: &PolyFq) -> bool {
    let Some(n) = p.degree() else { return false };
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for divisor in monic_polys(p.q(), d) {
            if p.rem(&divisor).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

/// All irreducible monic polynomials of a degree, by the oracle.
pub fn oracle_irreducibles(q: u64, degree: usize) -> Vec<PolyFq> {
    monic_polys(q, degree)
        .into_iter()
        .filter(oracle_irreducible)
        .collect()
}

pub fn rand_matrix(rng: &mut StdRng, q: u64, rows: usize, cols: usize) -> MatFq {
    let entries: Vec<u64> = (0..rows * cols).map(|_| rng.random_range(0..q)).collect();
    MatFq::new(q, rows, cols, entries).unwrap()
}

pub fn rand_invertible(rng: &mut StdRng, q: u64, n: usize) -> MatFq {
    loop {
        let m = rand_matrix(rng, q, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A uniformly random k-dimensional subspace of F_q^n (by rank-k rejection).
pub fn rand_subspace(rng: &mut StdRng, q: u64, k: usize, n: usize) -> Subspace {
    loop {
        let m = rand_matrix(rng, q, k, n);
        if m.rank() == k {
            return Subspace::from_rows(&m).unwrap();
        }
    }
}
