#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use symdet::fedder::fedder_colon;
use symdet::gbengine::{frobenius_max_ideal, is_member, Budget, Ideal};
use symdet::invariants::RingDescriptor;
use symdet::polycore::{Field, MatrixKind, Monomial, PolyRing, Polynomial, PrimeField, VariableTable};
use symdet::fedder::defining_ideal;

pub const UNLIMITED: Budget = Budget::unlimited();

pub fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn sym_ring<F: Field>(field: F, n: usize) -> Arc<PolyRing<F>> {
    PolyRing::grevlex(field, VariableTable::new(MatrixKind::Symmetric, n).unwrap())
}

/// Exponent vectors of total degree `deg` with every entry below `bound`.
pub fn bounded_monomials(nvars: usize, deg: u32, bound: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, left: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest = (cur.len() - k - 1) as u32 * (bound - 1);
        let lo = left.saturating_sub(rest);
        for e in lo..bound.min(left + 1) {
            cur[k] = e;
            go(k + 1, left - e, bound, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    go(0, deg, bound, &mut vec![0; nvars], &mut out);
    out
}

/// `ν(q)` straight from the definition: the largest `r` such that some
/// product `u f`, with `u` a monomial of degree `r` and `f` a generator of
/// `(I^[q] : I)`, falls outside `m^[q]`, decided by Gröbner membership.
/// Multipliers with an exponent `>= q` already lie in `m^[q]` and are skipped.
/// `None` when `(I^[q] : I) ⊆ m^[q]`.
pub fn brute_force_nu(desc: &RingDescriptor, p: u64, q: u64) -> Option<u64> {
    let ideal = defining_ideal(desc, fp(p)).unwrap();
    let ring = ideal.ring().clone();
    let j = fedder_colon(&ideal, q, &UNLIMITED).unwrap();
    let frob = frobenius_max_ideal(&ring, q);
    let one = ring.field().one();
    let escapes = |r: u32| {
        bounded_monomials(ring.nvars(), r, q as u32).into_iter().any(|e| {
            let u = Monomial::from_exponents(e);
            j.gens().iter().any(|f| !is_member(&f.mul_term(&u, &one), &frob, &UNLIMITED).unwrap())
        })
    };
    if !escapes(0) {
        return None;
    }
    let mut r = 0;
    while escapes(r + 1) {
        r += 1;
    }
    Some(r as u64)
}

/// A random polynomial with up to `terms` terms of degree at most `max_deg`.
pub fn random_poly<F: Field, R: Rng>(rng: &mut R, ring: &Arc<PolyRing<F>>, terms: usize, max_deg: u32) -> Polynomial<F> {
    let n = ring.nvars();
    let field = ring.field();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut exps = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            exps[rng.gen_range(0..n)] += 1;
        }
        out.push((Monomial::from_exponents(exps), field.from_i64(rng.gen_range(-3..=3))));
    }
    ring.from_terms(out)
}

pub fn random_ideal<F: Field, R: Rng>(rng: &mut R, ring: &Arc<PolyRing<F>>, gens: usize) -> Ideal<F> {
    loop {
        let gens: Vec<_> = (0..gens).map(|_| random_poly(rng, ring, 3, 3)).filter(|f| !f.is_zero()).collect();
        if !gens.is_empty() {
            return Ideal::new(ring, gens).unwrap();
        }
    }
}
