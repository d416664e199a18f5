use std::sync::{Arc, OnceLock};

use super::buchberger::buchberger;
use super::reduce::{divide_exact, reduce, Budget};
use crate::error::{Error, Result};
use crate::polycore::{Field, Monomial, PolyRing, Polynomial};

/// An ideal given by generators, with its reduced Gröbner basis in the
/// ring's order computed on first use.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let probe = ring.zero();
        for g in &gens {
            probe.checked(g)?;
        }
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn principal(f: &Polynomial<F>) -> Self {
        Ideal { ring: f.ring().clone(), gens: vec![f.clone()], gb: OnceLock::new() }
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    /// The maximal homogeneous ideal generated by the matrix variables.
    pub fn maximal(ring: &Arc<PolyRing<F>>) -> Self {
        let gens = (0..ring.table().matrix_vars()).map(|k| ring.var(k)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Reduced monic Gröbner basis, cached after the first successful run.
    pub fn groebner_basis(&self, budget: &Budget) -> Result<&[Polynomial<F>]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.gens, budget)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// The cached basis, if it has been computed.
    pub fn cached_basis(&self) -> Option<&[Polynomial<F>]> {
        self.gb.get().map(|v| v.as_slice())
    }

    /// The same ideal in another order on the same variables.
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Self> {
        let gens = self.gens.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    /// Sum of ideals.
    pub fn plus(&self, other: &Ideal<F>) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product of ideals.
    pub fn times(&self, other: &Ideal<F>) -> Result<Self> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                f.checked(g)?;
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn is_unit_ideal(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner_basis(budget)?.iter().any(|g| g.is_unit()))
    }
}

/// `f` reduces to zero against the Gröbner basis of `ideal`.
pub fn is_member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>, budget: &Budget) -> Result<bool> {
    ideal.ring.zero().checked(f)?;
    if f.is_zero() {
        return Ok(true);
    }
    let gb = ideal.groebner_basis(budget)?;
    Ok(reduce(f, gb, budget)?.is_zero())
}

/// `big ⊇ small`: every generator of `small` lies in `big`.
pub fn ideal_contains<F: Field>(big: &Ideal<F>, small: &Ideal<F>, budget: &Budget) -> Result<bool> {
    for g in &small.gens {
        if !is_member(g, big, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality through the reduced Gröbner bases in the shared order.
pub fn ideal_eq<F: Field>(a: &Ideal<F>, b: &Ideal<F>, budget: &Budget) -> Result<bool> {
    a.ring.zero().checked(&b.ring.zero())?;
    Ok(a.groebner_basis(budget)? == b.groebner_basis(budget)?)
}

/// `true` when `q = p^e` for the characteristic `p > 0`.
pub fn is_power_of(q: u64, p: u64) -> bool {
    if p < 2 || q == 0 {
        return false;
    }
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

/// The Frobenius power `I^[q]`, generated by the `q`-th powers of the
/// generators.
pub fn bracket_power<F: Field>(ideal: &Ideal<F>, q: u64) -> Result<Ideal<F>> {
    let p = ideal.ring.field().characteristic();
    if p == 0 {
        return Err(Error::InvalidArgument("Frobenius powers need a field of positive characteristic".into()));
    }
    if !is_power_of(q, p) {
        return Err(Error::InvalidArgument(format!("{q} is not a power of the characteristic {p}")));
    }
    let gens = ideal.gens.iter().map(|g| g.frobenius_pow(q)).collect();
    Ideal::new(&ideal.ring, gens)
}

/// `m_S^[q]`, the ideal of `q`-th powers of the matrix variables.
pub fn frobenius_max_ideal<F: Field>(ring: &Arc<PolyRing<F>>, q: u64) -> Ideal<F> {
    let nvars = ring.nvars();
    let gens = (0..ring.table().matrix_vars())
        .map(|k| ring.term(Monomial::var(nvars, k).pow(q as u32), ring.field().one()))
        .collect();
    Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
}

/// `f ∉ m_S^[q]`: some term of `f` has every exponent below `q`. Membership in
/// a monomial ideal is decided term by term.
pub fn outside_frobenius_max<F: Field>(f: &Polynomial<F>, q: u64) -> bool {
    f.terms().iter().any(|(m, _)| m.exponents().iter().all(|&e| (e as u64) < q))
}

/// `A ∩ B`, eliminating `w` from `w·A + (1 - w)·B`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    a.ring.zero().checked(&b.ring.zero())?;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(&a.ring));
    }
    let ext = a.ring.with_eliminated_aux(&["w"]);
    let w = ext.var(ext.nvars() - 1);
    let one_minus_w = ext.one().sub(&w);
    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    gens.extend(a.gens.iter().map(|f| w.mul(&f.extend_to(&ext))));
    gens.extend(b.gens.iter().map(|f| one_minus_w.mul(&f.extend_to(&ext))));
    let gb = buchberger(&gens, budget)?;
    let kept = gb.iter().filter_map(|g| g.restrict_to(&a.ring)).collect();
    Ideal::new(&a.ring, kept)
}

/// `(I : g)` for a single nonzero element, as `(I ∩ (g)) / g`.
pub fn colon_by<F: Field>(ideal: &Ideal<F>, g: &Polynomial<F>, budget: &Budget) -> Result<Ideal<F>> {
    ideal.ring.zero().checked(g)?;
    if g.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero ideal".into()));
    }
    if g.is_unit() {
        return Ok(ideal.clone());
    }
    let meet = intersect(ideal, &Ideal::principal(g), budget)?;
    let gens = meet
        .gens
        .iter()
        .map(|h| {
            divide_exact(h, g)
                .ok_or_else(|| Error::InvalidArgument("internal error: intersection element not divisible".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ideal.ring, gens)
}

/// `(I : J) = { f : f·J ⊆ I }`, intersected over the generators of `J`.
pub fn colon<F: Field>(i: &Ideal<F>, j: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    i.ring.zero().checked(&j.ring.zero())?;
    let mut acc: Option<Ideal<F>> = None;
    for g in j.gens.iter().filter(|g| !g.is_zero()) {
        let part = colon_by(i, g, budget)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part, budget)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("colon by the zero ideal".into()))
}

/// `(I : f^∞)`, iterating colons until the ideal stops growing.
pub fn saturate<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>, budget: &Budget) -> Result<Ideal<F>> {
    ideal.ring.zero().checked(f)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("saturation by zero".into()));
    }
    if f.is_unit() {
        return Ok(ideal.clone());
    }
    let mut current = ideal.clone();
    loop {
        let next = colon_by(&current, f, budget)?;
        if ideal_eq(&next, &current, budget)? {
            return Ok(current);
        }
        current = next;
    }
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 - z·f)` with a fresh variable `z`.
pub fn radical_member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>, budget: &Budget) -> Result<bool> {
    ideal.ring.zero().checked(f)?;
    if f.is_zero() {
        return Ok(true);
    }
    let ext = ideal.ring.with_eliminated_aux(&["z"]);
    let z = ext.var(ext.nvars() - 1);
    let mut gens: Vec<Polynomial<F>> = ideal.gens.iter().map(|g| g.extend_to(&ext)).collect();
    gens.push(ext.one().sub(&z.mul(&f.extend_to(&ext))));
    let gb = buchberger(&gens, budget)?;
    Ok(gb.iter().any(|g| g.is_unit()))
}
