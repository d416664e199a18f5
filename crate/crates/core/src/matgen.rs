//! Generic symmetric, skew-symmetric and unconstrained matrices, their
//! minors and Pfaffians, and the special polynomials built from them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{leading_term, Field, MatrixKind, MonomialOrder, PolyRing, Polynomial, VariableTable};

/// Sizes `(a_1, ..., a_u)` of the minors in a product of minors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument("shape entries must be positive".into()));
        }
        Ok(Shape(sizes))
    }

    /// The staircase `(1, 2, ..., n)`.
    pub fn staircase(n: usize) -> Self {
        Shape((1..=n).collect())
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Shape::new(v)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad shape entry `{a}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(sizes)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An `n x n` matrix whose entries are the variables of its ring.
#[derive(Debug, Clone)]
pub struct GenericMatrix<F: Field> {
    kind: MatrixKind,
    n: usize,
    ring: Arc<PolyRing<F>>,
    entries: Vec<Polynomial<F>>,
}

/// Builds the generic matrix of `kind` over a grevlex ring.
pub fn build_matrix<F: Field>(field: F, kind: MatrixKind, n: usize) -> Result<GenericMatrix<F>> {
    let table = VariableTable::new(kind, n)?;
    GenericMatrix::over(PolyRing::grevlex(field, table))
}

impl<F: Field> GenericMatrix<F> {
    /// The matrix of the ring's variable table. Auxiliary variables are ignored.
    pub fn over(ring: Arc<PolyRing<F>>) -> Result<Self> {
        let table = ring.table();
        let (kind, n) = (table.kind(), table.n());
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(if kind == MatrixKind::Skew && i == j {
                    ring.zero()
                } else {
                    ring.entry_var(i, j)?
                });
            }
        }
        Ok(GenericMatrix { kind, n, ring, entries })
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn check_indices(&self, idx: &[usize]) -> Result<()> {
        for (k, &i) in idx.iter().enumerate() {
            if i == 0 || i > self.n {
                return Err(Error::InvalidArgument(format!("index {i} outside 1..={}", self.n)));
            }
            if idx[..k].contains(&i) {
                return Err(Error::InvalidArgument(format!("index {i} repeated")));
            }
        }
        Ok(())
    }

    /// Determinant of the submatrix on `rows x cols` (1-based, taken in the
    /// given order).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial<F>> {
        let mut cache = MinorCache::default();
        self.minor_cached(rows, cols, &mut cache)
    }

    fn minor_cached(&self, rows: &[usize], cols: &[usize], cache: &mut MinorCache<F>) -> Result<Polynomial<F>> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "minor needs equally many rows and columns, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        self.check_indices(rows)?;
        self.check_indices(cols)?;
        Ok(self.det(rows, cols, cache))
    }

    // Cofactor expansion along the first listed row.
    fn det(&self, rows: &[usize], cols: &[usize], cache: &mut MinorCache<F>) -> Polynomial<F> {
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(hit) = cache.0.get(&key) {
            return hit.clone();
        }
        let mut acc = self.ring.zero();
        let mut rest_cols = Vec::with_capacity(cols.len() - 1);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.entry(rows[0], c);
            if a.is_zero() {
                continue;
            }
            rest_cols.clear();
            rest_cols.extend(cols.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, &c)| c));
            let sub = self.det(&rows[1..], &rest_cols, cache);
            let term = a.mul(&sub);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        cache.0.insert(key, acc.clone());
        acc
    }

    /// Pfaffian of the principal submatrix on `rows`, expanding along the
    /// first index.
    pub fn pfaffian(&self, rows: &[usize]) -> Result<Polynomial<F>> {
        if self.kind != MatrixKind::Skew {
            return Err(Error::InvalidArgument("Pfaffians need a skew-symmetric matrix".into()));
        }
        if rows.len() % 2 == 1 {
            return Err(Error::InvalidArgument("Pfaffians need an even index set".into()));
        }
        self.check_indices(rows)?;
        let mut cache = HashMap::new();
        Ok(self.pf(rows, &mut cache))
    }

    fn pf(&self, rows: &[usize], cache: &mut HashMap<Vec<usize>, Polynomial<F>>) -> Polynomial<F> {
        if rows.is_empty() {
            return self.ring.one();
        }
        if let Some(hit) = cache.get(rows) {
            return hit.clone();
        }
        let first = rows[0];
        let mut acc = self.ring.zero();
        for j in 1..rows.len() {
            let rest: Vec<usize> = rows[1..].iter().copied().filter(|&r| r != rows[j]).collect();
            let term = self.entry(first, rows[j]).mul(&self.pf(&rest, cache));
            acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        cache.insert(rows.to_vec(), acc.clone());
        acc
    }

    /// Generators of `I_t` (t-minors) or, for skew matrices, of `Pf_2t`
    /// (2t-Pfaffians). Each generator is scaled to leading coefficient 1
    /// under the diagonal order; symmetric transposes appear once.
    pub fn ideal_gens(&self, t: usize) -> Result<Vec<Polynomial<F>>> {
        let mut out: Vec<Polynomial<F>> = Vec::new();
        let mut push = |f: Polynomial<F>| {
            if !f.is_zero() {
                let f = normalize_diagonal(&f);
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        };
        match self.kind {
            MatrixKind::Skew => {
                if t == 0 || 2 * t > self.n {
                    return Err(Error::InvalidArgument(format!(
                        "Pfaffian size 2t = {} must lie in 2..={}",
                        2 * t,
                        self.n
                    )));
                }
                let mut cache = HashMap::new();
                for rows in combinations(self.n, 2 * t) {
                    push(self.pf(&rows, &mut cache));
                }
            }
            MatrixKind::Symmetric | MatrixKind::Generic => {
                if t == 0 || t > self.n {
                    return Err(Error::InvalidArgument(format!("minor size {t} must lie in 1..={}", self.n)));
                }
                let subsets = combinations(self.n, t);
                let mut cache = MinorCache::default();
                for (a, rows) in subsets.iter().enumerate() {
                    for (b, cols) in subsets.iter().enumerate() {
                        if self.kind == MatrixKind::Symmetric && b < a {
                            continue;
                        }
                        push(self.det(rows, cols, &mut cache));
                    }
                }
            }
        }
        Ok(out)
    }
}

struct MinorCache<F: Field>(HashMap<(Vec<usize>, Vec<usize>), Polynomial<F>>);

impl<F: Field> Default for MinorCache<F> {
    fn default() -> Self {
        MinorCache(HashMap::new())
    }
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for l in i..k {
            cur[l] = cur[l - 1] + 1;
        }
    }
}

/// Scales `f` so its leading coefficient under the diagonal order is 1.
pub fn normalize_diagonal<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let ord = MonomialOrder::diagonal(f.ring().nvars());
    match leading_term(f, &ord) {
        Ok((_, c)) => {
            let inv = f.field().inv(&c).expect("nonzero coefficient");
            f.scale(&inv)
        }
        Err(_) => f.clone(),
    }
}

/// The product of the bottom-left `i`-minors `d_i`, `i = 1..n`.
#[derive(Debug, Clone)]
pub struct DiagonalProduct<F: Field> {
    pub product: Polynomial<F>,
    pub factors: Vec<Polynomial<F>>,
    pub shape: Shape,
}

/// Minor on rows `n-a+1..n` and columns `1..a`.
pub fn bottom_left_minor<F: Field>(m: &GenericMatrix<F>, a: usize) -> Result<Polynomial<F>> {
    if a == 0 || a > m.n() {
        return Err(Error::InvalidArgument(format!("bottom-left minor size {a} outside 1..={}", m.n())));
    }
    let rows: Vec<usize> = (m.n() - a + 1..=m.n()).collect();
    let cols: Vec<usize> = (1..=a).collect();
    m.minor(&rows, &cols)
}

pub fn diagonal_product<F: Field>(m: &GenericMatrix<F>) -> Result<DiagonalProduct<F>> {
    if m.kind() != MatrixKind::Symmetric {
        return Err(Error::InvalidArgument("the diagonal product is defined for symmetric matrices".into()));
    }
    let mut cache = MinorCache::default();
    let n = m.n();
    let mut factors = Vec::with_capacity(n);
    for a in 1..=n {
        let rows: Vec<usize> = (n - a + 1..=n).collect();
        let cols: Vec<usize> = (1..=a).collect();
        factors.push(m.minor_cached(&rows, &cols, &mut cache)?);
    }
    let product = factors.iter().fold(m.ring().one(), |acc, d| acc.mul(d));
    Ok(DiagonalProduct { product, factors, shape: Shape::staircase(n) })
}

/// Generators of the prime `p` (the `(t-1)`-minors of the first `t-1` rows)
/// and its distinguished element `d`, the top-left `(t-1)`-minor.
#[derive(Debug, Clone)]
pub struct PrimeData<F: Field> {
    pub gens: Vec<Polynomial<F>>,
    pub d: Polynomial<F>,
}

pub fn prime_p_data<F: Field>(m: &GenericMatrix<F>, t: usize) -> Result<PrimeData<F>> {
    if m.kind() != MatrixKind::Symmetric {
        return Err(Error::InvalidArgument("prime data is defined for symmetric matrices".into()));
    }
    if t < 2 || t > m.n() {
        return Err(Error::InvalidArgument(format!("t = {t} must lie in 2..={}", m.n())));
    }
    let rows: Vec<usize> = (1..t).collect();
    let mut cache = MinorCache::default();
    let mut gens = Vec::new();
    for cols in combinations(m.n(), t - 1) {
        let g = normalize_diagonal(&m.minor_cached(&rows, &cols, &mut cache)?);
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    let d = m.minor_cached(&rows, &rows, &mut cache)?;
    Ok(PrimeData { gens, d })
}
