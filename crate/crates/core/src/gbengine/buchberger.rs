use std::cmp::Ordering;

use super::reduce::{reduce, Budget};
use crate::error::{Error, Result};
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn pair_cmp(ord: &MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| ord.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

struct State<F: Field> {
    polys: Vec<Polynomial<F>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    current: Vec<Polynomial<F>>,
}

impl<F: Field> State<F> {
    fn basis(&self) -> &[Polynomial<F>] {
        &self.current
    }

    // Gebauer-Moeller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lm().clone();
        let mut candidates: Vec<(usize, Monomial)> =
            self.active.iter().map(|&g| (g, lh.lcm(self.polys[g].lm()))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = candidates.pop() {
            let coprime = lh.is_coprime(self.polys[g].lm());
            let dominated = candidates.iter().any(|(_, l2)| l2.divides(&l)) || kept.iter().any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(polys[p.i].lm()) != p.lcm
                && lh.lcm(polys[p.j].lm()) != p.lcm)
        });
        for (g, l) in kept {
            if !lh.is_coprime(self.polys[g].lm()) {
                self.pairs.push(Pair { i: g, j: h, lcm: l });
            }
        }
        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(h);
        self.current = self.active.iter().map(|&k| self.polys[k].clone()).collect();
    }

    fn take_pair(&mut self, ord: &MonomialOrder) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| pair_cmp(ord, &self.pairs[a], &self.pairs[b]))?;
        Some(self.pairs.swap_remove(best))
    }
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    // both operands are monic
    let field = f.field();
    let one = field.one();
    let minus_one = field.neg(&one);
    let left = f.mul_term(&f.lm().quotient_of(lcm), &one);
    left.add_scaled(g, &minus_one, &g.lm().quotient_of(lcm))
}

/// Reduced, monic Gröbner basis of `gens` in their ring's order, sorted by
/// descending leading monomial.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], budget: &Budget) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    for g in gens {
        first.checked(g)?;
    }
    let ring = first.ring().clone();
    let ord = ring.order().clone();

    let mut inputs: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    if inputs.iter().any(|g| g.is_unit()) {
        return Ok(vec![ring.one()]);
    }
    // small leading monomials first tends to keep intermediate bases short
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));

    let mut st = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), current: Vec::new() };
    for g in inputs {
        budget.check()?;
        let r = reduce(&g, st.basis(), budget)?;
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }

    while let Some(pair) = st.take_pair(&ord) {
        budget.check()?;
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j], &pair.lcm);
        let r = reduce(&s, st.basis(), budget)?;
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }

    // interreduce the (already minimal) basis
    let minimal = st.current;
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial<F>> =
            minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, p)| p.clone()).collect();
        let r = reduce(g, &others, budget)?;
        if r.is_zero() || r.lm() != g.lm() {
            return Err(Error::InvalidArgument("internal error: basis was not minimal".into()));
        }
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    Ok(reduced)
}

/// Checks the Buchberger criterion directly: every S-polynomial of `basis`
/// reduces to zero. Independent of the pair-pruning in [`buchberger`].
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> Result<bool> {
    let budget = Budget::unlimited();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (basis[i].monic(), basis[j].monic());
            let lcm = f.lm().lcm(g.lm());
            if !reduce(&s_polynomial(&f, &g, &lcm), basis, &budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
