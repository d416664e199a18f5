use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::polycore::{Field, Monomial, Polynomial};

/// Wall-clock allowance for Gröbner computations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn within(d: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + d) }
    }

    pub fn seconds(s: u64) -> Self {
        Self::within(Duration::from_secs(s))
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

/// Outcome of reducing a polynomial modulo a list of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult<F: Field> {
    pub remainder: Polynomial<F>,
    pub reduced_to_zero: bool,
}

fn find_divisor<'a, F: Field>(m: &Monomial, basis: &'a [Polynomial<F>]) -> Option<&'a Polynomial<F>> {
    basis.iter().find(|g| g.lm().divides(m))
}

/// Full reduction of `f` by `basis` in the ring's order: the remainder has no
/// monomial divisible by a leading monomial of `basis`.
pub(crate) fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], budget: &Budget) -> Result<Polynomial<F>> {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut steps = 0usize;
    while !p.is_zero() {
        steps += 1;
        if steps % 512 == 0 {
            budget.check()?;
        }
        let (m, c) = {
            let (m, c) = &p.terms()[0];
            (m.clone(), c.clone())
        };
        match find_divisor(&m, basis) {
            Some(g) => {
                let factor = field.neg(&field.div(&c, g.lc()).expect("nonzero leading coefficient"));
                let shift = g.lm().quotient_of(&m);
                p = p.add_scaled(g, &factor, &shift);
            }
            None => {
                rem.push((m.clone(), c));
                p = p.ring().from_terms_sorted(p.terms()[1..].to_vec());
            }
        }
    }
    Ok(f.ring().from_terms_sorted(rem))
}

/// Division with remainder; basis elements must be nonzero and share the
/// ring of `f`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Result<ReductionResult<F>> {
    for g in basis {
        f.checked(g)?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
    }
    let remainder = reduce(f, basis, &Budget::unlimited())?;
    let reduced_to_zero = remainder.is_zero();
    Ok(ReductionResult { remainder, reduced_to_zero })
}

/// `f / g` when `g` divides `f` exactly.
pub fn divide_exact<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Option<Polynomial<F>> {
    f.checked(g).ok()?;
    if g.is_zero() {
        return None;
    }
    let field = f.field().clone();
    let mut p = f.clone();
    let mut quotient: Vec<(Monomial, F::Elem)> = Vec::new();
    while !p.is_zero() {
        let (m, c) = &p.terms()[0];
        if !g.lm().divides(m) {
            return None;
        }
        let coef = field.div(c, g.lc()).expect("nonzero leading coefficient");
        let shift = g.lm().quotient_of(m);
        p = p.add_scaled(g, &field.neg(&coef), &shift);
        quotient.push((shift, coef));
    }
    // quotient terms come out in descending order already
    Some(f.ring().from_terms_sorted(quotient))
}
