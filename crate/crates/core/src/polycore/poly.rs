use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::table::VariableTable;
use crate::error::{Error, Result};

/// A polynomial ring: coefficient field, variables, and the active order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    table: VariableTable,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, table: VariableTable, order: MonomialOrder) -> Result<Arc<Self>> {
        if order.nvars() != table.len() {
            return Err(Error::MismatchedTables);
        }
        Ok(Arc::new(PolyRing { field, table, order }))
    }

    /// Ring over `table` with grevlex in row-major priority.
    pub fn grevlex(field: F, table: VariableTable) -> Arc<Self> {
        let order = MonomialOrder::grevlex(table.len());
        Arc::new(PolyRing { field, table, order })
    }

    /// Ring over `table` with the lex order `x[1,1] > x[1,2] > ... > x[n,n]`.
    pub fn diagonal(field: F, table: VariableTable) -> Arc<Self> {
        let order = MonomialOrder::diagonal(table.len());
        Arc::new(PolyRing { field, table, order })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn table(&self) -> &VariableTable {
        &self.table
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.table.len()
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        PolyRing::new(self.field.clone(), self.table.clone(), order)
    }

    /// Adds trailing auxiliary variables and an order eliminating them.
    pub fn with_eliminated_aux(&self, names: &[&str]) -> Arc<Self> {
        let table = self.table.with_aux(names);
        let order = MonomialOrder::eliminating_trailing(table.len(), names.len());
        Arc::new(PolyRing { field: self.field.clone(), table, order })
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> Polynomial<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn from_i64(self: &Arc<Self>, c: i64) -> Polynomial<F> {
        self.constant(self.field.from_i64(c))
    }

    pub fn var(self: &Arc<Self>, k: usize) -> Polynomial<F> {
        self.term(Monomial::var(self.nvars(), k), self.field.one())
    }

    pub fn term(self: &Arc<Self>, m: Monomial, c: F::Elem) -> Polynomial<F> {
        assert_eq!(m.nvars(), self.nvars());
        let terms = if self.field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: self.clone(), terms }
    }

    /// The variable `x[i,j]` with the table's transpose convention applied.
    pub fn entry_var(self: &Arc<Self>, i: usize, j: usize) -> Result<Polynomial<F>> {
        let (k, negated) = self.table.resolve(i, j)?;
        let v = self.var(k);
        Ok(if negated { v.neg() } else { v })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(self: &Arc<Self>, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Polynomial<F> {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = self.field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Polynomial { ring: self.clone(), terms }
    }

    /// Wraps terms that are already distinct, nonzero and sorted descending.
    pub(crate) fn from_terms_sorted(self: &Arc<Self>, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        debug_assert!(terms.windows(2).all(|w| self.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: self.clone(), terms }
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A polynomial with terms sorted strictly descending under the ring order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", super::parse::print_poly(self))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::print_poly(self))
    }
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Debug, Clone)]
pub enum ArithOp<'a, F: Field> {
    Add(&'a Polynomial<F>),
    Sub(&'a Polynomial<F>),
    Mul(&'a Polynomial<F>),
    Pow(u64),
}

/// Checked arithmetic entry point.
pub fn poly_arith<F: Field>(f: &Polynomial<F>, op: ArithOp<'_, F>) -> Result<Polynomial<F>> {
    match op {
        ArithOp::Add(g) => f.checked(g).map(|_| f.add(g)),
        ArithOp::Sub(g) => f.checked(g).map(|_| f.sub(g)),
        ArithOp::Mul(g) => f.checked(g).map(|_| f.mul(g)),
        ArithOp::Pow(k) => Ok(f.pow(k)),
    }
}

impl<F: Field> Polynomial<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Least total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    /// Panics on zero; for internal use where nonzero is established.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }

    pub fn checked(&self, other: &Self) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            return Ok(());
        }
        if self.ring.field != other.ring.field {
            Err(Error::MismatchedFields)
        } else if self.ring.table != other.ring.table {
            Err(Error::MismatchedTables)
        } else {
            Err(Error::MismatchedOrders)
        }
    }

    fn assert_compatible(&self, other: &Self) {
        if let Err(e) = self.checked(other) {
            panic!("polynomial operands from different rings: {e}");
        }
    }

    fn with_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Self {
        let k = &self.ring.field;
        self.with_terms(self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return self.with_terms(Vec::new());
        }
        self.with_terms(self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect())
    }

    /// Multiplies by `c * m`; order is preserved since the order is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return self.with_terms(Vec::new());
        }
        self.with_terms(self.terms.iter().map(|(n, a)| (n.mul(m), k.mul(a, c))).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.field().is_one(self.lc()) {
            return self.clone();
        }
        let inv = self.field().inv(self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// `self + c * m * g` by a single merge.
    pub fn add_scaled(&self, g: &Self, c: &F::Elem, m: &Monomial) -> Self {
        self.assert_compatible(g);
        let k = &self.ring.field;
        let ord = &self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(n, x)| (n.mul(m), k.mul(x, c))).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m1, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = k.add(c1, &c2);
                    if !k.is_zero(&s) {
                        out.push((m1.clone(), s));
                    }
                }
            }
        }
        self.with_terms(out)
    }

    pub fn add(&self, g: &Self) -> Self {
        let one = self.field().one();
        self.add_scaled(g, &one, &Monomial::one(self.ring.nvars()))
    }

    pub fn sub(&self, g: &Self) -> Self {
        let minus_one = self.field().neg(&self.field().one());
        self.add_scaled(g, &minus_one, &Monomial::one(self.ring.nvars()))
    }

    pub fn mul(&self, g: &Self) -> Self {
        self.assert_compatible(g);
        if self.is_zero() || g.is_zero() {
            return self.ring.zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return g.mul_term(m, c);
        }
        if g.terms.len() == 1 {
            let (m, c) = &g.terms[0];
            return self.mul_term(m, c);
        }
        let k = &self.ring.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * g.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &g.terms {
                let prod = k.mul(c1, c2);
                let mono = m1.mul(m2);
                match acc.get_mut(&mono) {
                    Some(v) => *v = k.add(v, &prod),
                    None => {
                        acc.insert(mono, prod);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !k.is_zero(c)).collect();
        let ord = &self.ring.order;
        terms.sort_unstable_by(|a, b| ord.cmp(&b.0, &a.0));
        self.with_terms(terms)
    }

    /// Power by repeated squaring, in any characteristic.
    pub fn pow_by_squaring(&self, mut k: u64) -> Self {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Term-wise `q`-th power; valid when `q` is a power of the characteristic.
    pub fn frobenius_pow(&self, q: u64) -> Self {
        let k = &self.ring.field;
        let e = u32::try_from(q).expect("exponent fits in u32");
        self.with_terms(self.terms.iter().map(|(m, c)| (m.pow(e), k.pow(c, q))).collect())
    }

    /// `self^k`. In characteristic `p`, the `p`-power part of `k` is taken
    /// term-wise.
    pub fn pow(&self, k: u64) -> Self {
        let p = self.field().characteristic();
        if p > 1 && k > 1 {
            let mut q = 1u64;
            let mut rest = k;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            if q > 1 {
                return self.pow_by_squaring(rest).frobenius_pow(q);
            }
        }
        self.pow_by_squaring(k)
    }

    /// Re-expresses the polynomial in `ring`, which must share field and
    /// variables (orders may differ).
    pub fn to_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Self> {
        if self.ring.field != ring.field {
            return Err(Error::MismatchedFields);
        }
        if self.ring.table != ring.table {
            return Err(Error::MismatchedTables);
        }
        if self.ring.order == ring.order {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Embeds into a ring with extra trailing auxiliary variables.
    pub fn extend_to(&self, ring: &Arc<PolyRing<F>>) -> Self {
        let extra = ring.nvars() - self.ring.nvars();
        ring.from_terms(self.terms.iter().map(|(m, c)| (m.extended(extra), c.clone())))
    }

    /// Restricts to a ring with fewer trailing variables; `None` if some
    /// term involves a dropped variable.
    pub fn restrict_to(&self, ring: &Arc<PolyRing<F>>) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.truncated(ring.nvars())?, c.clone()));
        }
        Some(ring.from_terms(terms))
    }

    /// Evaluates term-wise substitution of each variable by a polynomial.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Self {
        let ring = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.constant(c.clone());
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[k].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// Leading term of a nonzero polynomial under an explicit order.
pub fn leading_term<F: Field>(f: &Polynomial<F>, ord: &MonomialOrder) -> Result<(Monomial, F::Elem)> {
    if ord.nvars() != f.ring.nvars() {
        return Err(Error::MismatchedTables);
    }
    f.terms
        .iter()
        .max_by(|a, b| ord.cmp(&a.0, &b.0))
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or(Error::ZeroPolynomial)
}
