use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A power product, stored densely over the ring's variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[k] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
            degree: self.degree * k,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Every exponent is at most one.
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Appends `extra` zero exponents.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(exps.len() + extra, 0);
        Monomial { exps, degree: self.degree }
    }

    /// Keeps the first `nvars` exponents; `None` if a dropped one is nonzero.
    pub fn truncated(&self, nvars: usize) -> Option<Monomial> {
        if self.exps[nvars..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial::from_exponents(self.exps[..nvars].to_vec()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Grevlex on the `block` highest-priority variables, ties broken by
    /// grevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

/// A monomial order: a kind plus a variable priority list, highest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    identity: bool,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidArgument("priority is not a permutation".into()));
            }
        }
        if let OrderKind::Elimination { block } = kind {
            if block > priority.len() {
                return Err(Error::InvalidArgument("elimination block too large".into()));
            }
        }
        let identity = priority.iter().enumerate().all(|(k, &v)| k == v);
        Ok(MonomialOrder { kind, priority, identity })
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).collect()).unwrap()
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, (0..nvars).collect()).unwrap()
    }

    /// Lex over the row-major variable listing `x[1,1] > x[1,2] > ... > x[n,n]`.
    pub fn diagonal(nvars: usize) -> Self {
        Self::lex(nvars)
    }

    /// Block order eliminating the trailing `aux` variables of an `nvars`
    /// ring: they are ranked first, grevlex inside each block.
    pub fn eliminating_trailing(nvars: usize, aux: usize) -> Self {
        let base = nvars - aux;
        let priority = (base..nvars).chain(0..base).collect();
        Self::new(OrderKind::Elimination { block: aux }, priority).unwrap()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    #[inline]
    fn at(&self, m: &Monomial, rank: usize) -> u32 {
        if self.identity {
            m.exps[rank]
        } else {
            m.exps[self.priority[rank]]
        }
    }

    fn lex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for r in lo..hi {
            match self.at(a, r).cmp(&self.at(b, r)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn grevlex_range(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize, da: u32, db: u32) -> Ordering {
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for r in (lo..hi).rev() {
            match self.at(a, r).cmp(&self.at(b, r)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Compares two monomials of the same ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.priority.len();
        match self.kind {
            OrderKind::Lex => self.lex_range(a, b, 0, n),
            OrderKind::GrevLex => self.grevlex_range(a, b, 0, n, a.degree, b.degree),
            OrderKind::Elimination { block } => {
                let da: u32 = (0..block).map(|r| self.at(a, r)).sum();
                let db: u32 = (0..block).map(|r| self.at(b, r)).sum();
                match self.grevlex_range(a, b, 0, block, da, db) {
                    Ordering::Equal => {
                        self.grevlex_range(a, b, block, n, a.degree - da, b.degree - db)
                    }
                    o => o,
                }
            }
        }
    }
}

/// Checked comparison; fails when the monomials or the order disagree on
/// the number of variables.
pub fn mono_cmp(a: &Monomial, b: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() || a.nvars() != ord.nvars() {
        return Err(Error::MismatchedTables);
    }
    Ok(ord.cmp(a, b))
}
