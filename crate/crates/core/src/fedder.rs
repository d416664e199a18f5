//! F-purity certificates via Fedder's criterion, the `ν(q)` estimator for
//! the F-pure threshold, and ideal-level checks of the containments the
//! F-purity and canonical-module arguments rest on.
//!
//! A certificate for `R = F_p[X]/I_t` carries the witness `D`, the product
//! of the bottom-left minors of sizes `1..n`, and four obligations:
//!
//! * `squarefree-initial`: the diagonal-order initial monomial of `D` is squarefree;
//! * `gamma-equals-height`: `γ_t(1, ..., n)` equals the height of `I_t`;
//! * `witness-outside-frobenius-max`: `D^(p-1) ∉ m^[p]`;
//! * `witness-times-ideal-in-bracket`: `D^(p-1) g ∈ I_t^[p]` for each generator `g`.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gbengine::{
    bracket_power, colon, is_member, is_power_of, outside_frobenius_max, radical_member, Budget, Ideal,
};
use crate::invariants::{self, Exact, RingDescriptor, RingKind};
use crate::matgen::{bottom_left_minor, build_matrix, diagonal_product, prime_p_data, GenericMatrix, Shape};
use crate::polycore::{
    leading_term, print_monomial, print_poly, Field, MatrixKind, Monomial, MonomialOrder, PrimeField, Polynomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pending,
    Pass,
    Fail,
    /// The time budget ran out; not a failure.
    Inconclusive,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pending => "pending",
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::NotApplicable => "n/a",
        })
    }
}

fn status_of(outcome: Result<bool>) -> Result<Status> {
    match outcome {
        Ok(true) => Ok(Status::Pass),
        Ok(false) => Ok(Status::Fail),
        Err(Error::Timeout) => Ok(Status::Inconclusive),
        Err(e) => Err(e),
    }
}

/// Combined status: any fail wins, then inconclusive, then pending.
pub fn overall<'a>(statuses: impl IntoIterator<Item = &'a Status>) -> Status {
    let mut worst = Status::Pass;
    for s in statuses {
        worst = match (worst, *s) {
            (_, Status::Fail) | (Status::Fail, _) => Status::Fail,
            (_, Status::Inconclusive) | (Status::Inconclusive, _) => Status::Inconclusive,
            (_, Status::Pending) | (Status::Pending, _) => Status::Pending,
            (w, _) => w,
        };
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObligationName {
    SquarefreeInitial,
    GammaEqualsHeight,
    WitnessOutsideFrobeniusMax,
    WitnessTimesIdealInBracket,
}

impl ObligationName {
    pub const ALL: [ObligationName; 4] = [
        ObligationName::SquarefreeInitial,
        ObligationName::GammaEqualsHeight,
        ObligationName::WitnessOutsideFrobeniusMax,
        ObligationName::WitnessTimesIdealInBracket,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ObligationName::SquarefreeInitial => "squarefree-initial",
            ObligationName::GammaEqualsHeight => "gamma-equals-height",
            ObligationName::WitnessOutsideFrobeniusMax => "witness-outside-frobenius-max",
            ObligationName::WitnessTimesIdealInBracket => "witness-times-ideal-in-bracket",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obligation {
    pub name: ObligationName,
    pub status: Status,
    pub millis: u64,
}

/// The F-purity witness for one `(n, t, p)` and its proof obligations.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub descriptor: RingDescriptor,
    pub p: u64,
    pub matrix: GenericMatrix<PrimeField>,
    pub witness: Polynomial<PrimeField>,
    pub initial_monomial: Monomial,
    pub shape: Shape,
    pub gamma: u64,
    pub height: u64,
    pub obligations: Vec<Obligation>,
}

impl Certificate {
    pub fn is_degenerate(&self) -> bool {
        self.descriptor.is_degenerate()
    }

    pub fn status(&self) -> Status {
        overall(self.obligations.iter().map(|o| &o.status))
    }

    pub fn is_verified(&self) -> bool {
        self.obligations.len() == ObligationName::ALL.len() && self.obligations.iter().all(|o| o.status == Status::Pass)
    }

    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            descriptor: self.descriptor,
            p: self.p,
            witness: print_poly(&self.witness),
            initial_monomial: print_monomial(self.witness.ring(), &self.initial_monomial),
            shape: self.shape.clone(),
            gamma: self.gamma,
            height: self.height,
            degenerate: self.is_degenerate(),
            obligations: self.obligations.clone(),
            verified: self.is_verified(),
        }
    }
}

/// Serialized form of a [`Certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub tool_version: String,
    pub descriptor: RingDescriptor,
    pub p: u64,
    pub witness: String,
    pub initial_monomial: String,
    pub shape: Shape,
    pub gamma: u64,
    pub height: u64,
    pub degenerate: bool,
    pub obligations: Vec<Obligation>,
    pub verified: bool,
}

fn symmetric_matrix<F: Field>(field: F, n: u64) -> Result<GenericMatrix<F>> {
    build_matrix(field, MatrixKind::Symmetric, n as usize)
}

pub fn build_certificate(n: u64, t: u64, p: u64) -> Result<Certificate> {
    let descriptor = RingDescriptor::symmetric(n, t)?;
    let field = PrimeField::new(p)?;
    let matrix = symmetric_matrix(field, n)?;
    let dp = diagonal_product(&matrix)?;
    let diag = MonomialOrder::diagonal(matrix.ring().nvars());
    let (initial_monomial, _) = leading_term(&dp.product, &diag)?;
    let gamma = invariants::gamma(&dp.shape, t);
    let (_, height) = invariants::dim_and_height(&descriptor);
    let obligations = ObligationName::ALL
        .iter()
        .map(|&name| Obligation { name, status: Status::Pending, millis: 0 })
        .collect();
    Ok(Certificate {
        descriptor,
        p,
        matrix,
        witness: dp.product,
        initial_monomial,
        shape: dp.shape,
        gamma,
        height,
        obligations,
    })
}

fn timed(f: impl FnOnce() -> Result<Status>) -> Result<(Status, u64)> {
    let start = Instant::now();
    let s = f()?;
    Ok((s, start.elapsed().as_millis() as u64))
}

/// Runs the four obligations. Budget exhaustion yields `Inconclusive`.
pub fn verify_certificate(mut cert: Certificate, budget: &Budget) -> Result<Certificate> {
    let p = cert.p;
    let t = cert.descriptor.t as usize;
    let powered = cert.witness.pow(p - 1);
    let mut results = Vec::with_capacity(4);
    for name in ObligationName::ALL {
        let (status, millis) = match name {
            ObligationName::SquarefreeInitial => timed(|| Ok(bool_status(cert.initial_monomial.is_squarefree())))?,
            ObligationName::GammaEqualsHeight => timed(|| Ok(bool_status(cert.gamma == cert.height)))?,
            ObligationName::WitnessOutsideFrobeniusMax => {
                timed(|| Ok(bool_status(outside_frobenius_max(&powered, p))))?
            }
            ObligationName::WitnessTimesIdealInBracket => timed(|| {
                let ideal = Ideal::new(cert.matrix.ring(), cert.matrix.ideal_gens(t)?)?;
                let bracket = bracket_power(&ideal, p)?;
                status_of((|| {
                    for g in ideal.gens() {
                        if !is_member(&powered.mul(g), &bracket, budget)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })())
            })?,
        };
        results.push(Obligation { name, status, millis });
    }
    results.sort_by_key(|o| o.name);
    cert.obligations = results;
    Ok(cert)
}

fn bool_status(b: bool) -> Status {
    if b {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// One term of the `ν(q)` sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuRecord {
    pub q: u64,
    pub nu: u64,
    pub lower: Exact,
    pub upper: Exact,
    /// `false` when `(I^[q] : I) ⊆ m^[q]`, i.e. Fedder's test fails at `q`.
    pub f_pure: bool,
}

/// The defining ideal of `desc` over `F_p`, in a grevlex ring.
pub fn defining_ideal(desc: &RingDescriptor, field: PrimeField) -> Result<Ideal<PrimeField>> {
    let (kind, size) = match desc.kind {
        RingKind::Symmetric => (MatrixKind::Symmetric, desc.t as usize),
        RingKind::Pfaffian => (MatrixKind::Skew, desc.t as usize),
    };
    let m = build_matrix(field, kind, desc.n as usize)?;
    Ideal::new(m.ring(), m.ideal_gens(size)?)
}

/// `(I^[q] : I)`.
pub fn fedder_colon(ideal: &Ideal<PrimeField>, q: u64, budget: &Budget) -> Result<Ideal<PrimeField>> {
    colon(&bracket_power(ideal, q)?, ideal, budget)
}

/// Largest `r` with `m^r f ⊄ m^[q]`, or `None` when `f ∈ m^[q]`. A term
/// `u` of `f` survives multiplication by `m` exactly while every exponent
/// stays below `q`, and distinct terms never cancel under a monomial shift.
pub fn generator_slack<F: Field>(f: &Polynomial<F>, q: u64) -> Option<u64> {
    let nvars = f.ring().table().matrix_vars();
    f.terms()
        .iter()
        .filter(|(m, _)| m.exponents().iter().all(|&e| (e as u64) < q))
        .map(|(m, _)| m.exponents()[..nvars].iter().map(|&e| q - 1 - e as u64).sum())
        .max()
}

fn nu_record(q: u64, best: Option<u64>) -> NuRecord {
    let nu = best.unwrap_or(0);
    NuRecord {
        q,
        nu,
        lower: Exact::new(nu as i64, q as i64),
        upper: Exact::new(nu as i64 + 1, q as i64),
        f_pure: best.is_some(),
    }
}

/// `ν(q)` from an already computed `J = (I^[q] : I)`.
pub fn nu_from_colon(j: &Ideal<PrimeField>, q: u64) -> NuRecord {
    nu_record(q, j.gens().iter().filter_map(|f| generator_slack(f, q)).max())
}

/// `ν(p^e)`: the largest `r` with `m^r (I^[q] : I) ⊄ m^[q]`.
pub fn nu(desc: &RingDescriptor, p: u64, e: u32, budget: &Budget) -> Result<NuRecord> {
    if desc.is_degenerate() {
        return Err(Error::InvalidArgument("t = 1: R is a field, ν is not defined".into()));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("need e >= 1".into()));
    }
    let field = PrimeField::new(p)?;
    let q = p.checked_pow(e).ok_or_else(|| Error::InvalidArgument("p^e overflows".into()))?;
    debug_assert!(is_power_of(q, p));
    let ideal = defining_ideal(desc, field)?;
    let j = fedder_colon(&ideal, q, budget)?;
    Ok(nu_from_colon(&j, q))
}

/// `ν(q)/q` for `q = p, ..., p^e_max` next to the closed-form threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FptEstimate {
    pub descriptor: RingDescriptor,
    pub p: u64,
    pub closed_form: Exact,
    pub records: Vec<NuRecord>,
    /// Per record: closed form lies in `(ν/q, (ν+1)/q]`.
    pub bracketed: Vec<bool>,
    /// Per record: closed form equals `ν/(q-1)`.
    pub q_minus_one: Vec<bool>,
    pub skipped: Option<String>,
}

impl FptEstimate {
    pub fn all_bracketed(&self) -> bool {
        self.bracketed.iter().all(|&b| b)
    }
}

/// `ν/(q-1)`.
pub fn normalized(rec: &NuRecord) -> Exact {
    Exact::new(rec.nu as i64, rec.q as i64 - 1)
}

pub fn in_bracket(value: Exact, rec: &NuRecord) -> bool {
    rec.lower < value && value <= rec.upper
}

pub fn estimate_fpt(desc: &RingDescriptor, p: u64, e_max: u32, budget: &Budget) -> Result<FptEstimate> {
    if e_max == 0 {
        return Err(Error::InvalidArgument("need e_max >= 1".into()));
    }
    let closed_form = invariants::fpt(desc);
    if desc.is_degenerate() {
        return Ok(FptEstimate {
            descriptor: *desc,
            p,
            closed_form,
            records: Vec::new(),
            bracketed: Vec::new(),
            q_minus_one: Vec::new(),
            skipped: Some("degenerate: R = k".into()),
        });
    }
    let mut records = Vec::new();
    for e in 1..=e_max {
        records.push(nu(desc, p, e, budget)?);
    }
    let bracketed = records.iter().map(|r| in_bracket(closed_form, r)).collect();
    let q_minus_one = records.iter().map(|r| normalized(r) == closed_form).collect();
    Ok(FptEstimate { descriptor: *desc, p, closed_form, records, bracketed, q_minus_one, skipped: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonLemmaOutcome {
    pub shape: Shape,
    pub gamma: u64,
    /// `h (p - 1)`.
    pub threshold: u64,
    pub status: Status,
}

/// For each shape, realizes `Δ` as a product of bottom-left minors and, when
/// `γ_t(Δ) >= h (p-1)`, checks `Δ g ∈ I_t^[p]` for every generator `g`.
pub fn verify_colon_lemma(n: u64, t: u64, p: u64, shapes: &[Shape], budget: &Budget) -> Result<Vec<ColonLemmaOutcome>> {
    let desc = RingDescriptor::symmetric(n, t)?;
    for s in shapes {
        if let Some(&a) = s.sizes().iter().find(|&&a| a as u64 > n) {
            return Err(Error::InvalidArgument(format!("shape {s} needs a {a}-minor of a {n}x{n} matrix")));
        }
    }
    let (_, h) = invariants::dim_and_height(&desc);
    let threshold = h * (p - 1);
    let m = symmetric_matrix(PrimeField::new(p)?, n)?;
    let ideal = Ideal::new(m.ring(), m.ideal_gens(t as usize)?)?;
    let bracket = bracket_power(&ideal, p)?;
    let mut out = Vec::with_capacity(shapes.len());
    for shape in shapes {
        let gamma = invariants::gamma(shape, t);
        let status = if gamma < threshold {
            Status::NotApplicable
        } else {
            let mut delta = m.ring().one();
            for &a in shape.sizes() {
                delta = delta.mul(&bottom_left_minor(&m, a)?);
            }
            status_of((|| {
                for g in ideal.gens() {
                    if !is_member(&delta.mul(g), &bracket, budget)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })())?
        };
        out.push(ColonLemmaOutcome { shape: shape.clone(), gamma, threshold, status });
    }
    Ok(out)
}

/// Outcome of the ideal-level consequences of `p^(2) = (d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondSymbolicReport {
    pub n: u64,
    pub t: u64,
    pub coefficients: String,
    pub d: String,
    /// `d ∈ p`.
    pub d_in_prime: Status,
    /// `p^2 ⊆ (d) + I_t`.
    pub square_in_principal: Status,
    /// `d ∉ p^2 + I_t`, by degrees and by reduction.
    pub d_not_in_square: Status,
    /// Every generator of `p` lies in `√((d) + I_t)`.
    pub prime_in_radical: Status,
}

impl SecondSymbolicReport {
    pub fn statuses(&self) -> [Status; 4] {
        [self.d_in_prime, self.square_in_principal, self.d_not_in_square, self.prime_in_radical]
    }

    pub fn status(&self) -> Status {
        overall(self.statuses().iter())
    }
}

fn all_members<F: Field>(fs: &[Polynomial<F>], ideal: &Ideal<F>, budget: &Budget) -> Result<bool> {
    for f in fs {
        if !is_member(f, ideal, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `d ∈ p`, `p^2 ⊆ (d) + I_t`, `d ∉ p^2 + I_t` and `p ⊆ √((d) + I_t)`
/// in the polynomial ring over `field`.
pub fn verify_second_symbolic<F: Field>(field: F, n: u64, t: u64, budget: &Budget) -> Result<SecondSymbolicReport> {
    RingDescriptor::symmetric(n, t)?;
    if t < 2 {
        return Err(Error::InvalidArgument("need t >= 2".into()));
    }
    let coefficients = field.descriptor().to_string();
    let m = symmetric_matrix(field, n)?;
    let ring: &Arc<_> = m.ring();
    let i_t = Ideal::new(ring, m.ideal_gens(t as usize)?)?;
    let pd = prime_p_data(&m, t as usize)?;
    let prime = Ideal::new(ring, pd.gens.clone())?;

    let d_in_prime = status_of(is_member(&pd.d, &prime, budget))?;

    let principal_plus = Ideal::principal(&pd.d).plus(&i_t)?;
    let mut squares = Vec::new();
    for (a, f) in pd.gens.iter().enumerate() {
        for g in &pd.gens[a..] {
            squares.push(f.mul(g));
        }
    }
    let square_in_principal = status_of(all_members(&squares, &principal_plus, budget))?;

    // every generator of p^2 + I_t is homogeneous of degree >= t > deg d
    let square_plus = Ideal::new(ring, squares)?.plus(&i_t)?;
    let min_gen_degree = square_plus.gens().iter().filter_map(|g| g.min_degree()).min();
    let by_degree = pd.d.degree().map(|dd| min_gen_degree.is_none_or(|m| dd < m)).unwrap_or(false);
    let d_not_in_square = match status_of(is_member(&pd.d, &square_plus, budget).map(|inside| !inside))? {
        Status::Pass if by_degree => Status::Pass,
        Status::Pass | Status::Fail => Status::Fail,
        other => other,
    };

    let prime_in_radical = status_of((|| {
        for g in &pd.gens {
            if !radical_member(g, &principal_plus, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    })())?;

    Ok(SecondSymbolicReport {
        n,
        t,
        coefficients,
        d: print_poly(&pd.d),
        d_in_prime,
        square_in_principal,
        d_not_in_square,
        prime_in_radical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, Rationals};

    const B: Budget = Budget::unlimited();

    #[test]
    fn certificate_for_3x3_example() {
        let cert = build_certificate(3, 2, 2).unwrap();
        assert_eq!(print_monomial(cert.witness.ring(), &cert.initial_monomial), "x[1,1]*x[1,2]*x[1,3]*x[2,2]*x[2,3]*x[3,3]");
        assert_eq!(cert.status(), Status::Pending);
        let cert = verify_certificate(cert, &B).unwrap();
        assert!(cert.is_verified(), "{:?}", cert.obligations);
    }

    #[test]
    fn certificate_for_2x2_hypersurface() {
        let cert = build_certificate(2, 2, 3).unwrap();
        assert_eq!(cert.witness, parse_poly("x[1,1]*x[1,2]*x[2,2] - x[1,2]^3", cert.matrix.ring()).unwrap());
        assert_eq!((cert.gamma, cert.height), (1, 1));
        assert!(verify_certificate(cert, &B).unwrap().is_verified());
        assert!(verify_certificate(build_certificate(3, 3, 2).unwrap(), &B).unwrap().is_verified());
    }

    #[test]
    fn degenerate_certificate() {
        let cert = build_certificate(1, 1, 5).unwrap();
        assert!(cert.is_degenerate());
        assert!(build_certificate(2, 3, 2).is_err());
        assert!(build_certificate(2, 2, 4).is_err());
    }

    #[test]
    fn expired_budget_is_inconclusive() {
        let cert = build_certificate(3, 2, 3).unwrap();
        let cert = verify_certificate(cert, &Budget::within(std::time::Duration::ZERO)).unwrap();
        let last = cert.obligations.iter().find(|o| o.name == ObligationName::WitnessTimesIdealInBracket).unwrap();
        assert_eq!(last.status, Status::Inconclusive);
        assert_eq!(cert.status(), Status::Inconclusive);
    }

    #[test]
    fn nu_values_for_2x2() {
        let d = RingDescriptor::symmetric(2, 2).unwrap();
        assert_eq!(nu(&d, 3, 1, &B).unwrap().nu, 2);
        assert_eq!(nu(&d, 2, 1, &B).unwrap().nu, 1);
        assert!(nu(&RingDescriptor::symmetric(2, 1).unwrap(), 2, 1, &B).is_err());
        assert!(nu(&d, 4, 1, &B).is_err());
    }

    #[test]
    fn nu_for_four_pfaffian() {
        let d = RingDescriptor::pfaffian(4, 2).unwrap();
        let rec = nu(&d, 5, 1, &B).unwrap();
        assert_eq!(rec.nu, 16);
        assert!(rec.f_pure);
    }

    #[test]
    fn estimates() {
        let d = RingDescriptor::symmetric(2, 2).unwrap();
        let est = estimate_fpt(&d, 3, 2, &B).unwrap();
        let ratios: Vec<Exact> = est.records.iter().map(|r| r.lower).collect();
        assert_eq!(ratios, [Exact::new(2, 3), Exact::new(8, 9)]);
        assert!(est.all_bracketed());
        assert!(est.q_minus_one.iter().all(|&b| b));
        let est = estimate_fpt(&d, 2, 2, &B).unwrap();
        let ratios: Vec<Exact> = est.records.iter().map(|r| r.lower).collect();
        assert_eq!(ratios, [Exact::new(1, 2), Exact::new(3, 4)]);
        let skipped = estimate_fpt(&RingDescriptor::symmetric(3, 1).unwrap(), 2, 2, &B).unwrap();
        assert!(skipped.skipped.is_some() && skipped.records.is_empty());
        assert_eq!(skipped.closed_form, Exact::integer(0));
    }

    #[test]
    fn colon_lemma() {
        let out = verify_colon_lemma(2, 2, 3, &[Shape::new(vec![2, 2]).unwrap()], &B).unwrap();
        assert_eq!(out[0].status, Status::Pass);
        let out = verify_colon_lemma(3, 2, 2, &[Shape::staircase(3), Shape::new(vec![1]).unwrap()], &B).unwrap();
        assert_eq!(out[0].gamma, 3);
        assert_eq!(out[0].status, Status::Pass);
        assert_eq!(out[1].status, Status::NotApplicable);
        assert!(verify_colon_lemma(3, 2, 2, &[Shape::new(vec![4]).unwrap()], &B).is_err());
    }

    #[test]
    fn second_symbolic_3x3() {
        let rep = verify_second_symbolic(Rationals, 3, 2, &B).unwrap();
        assert_eq!(rep.d, "x[1,1]");
        assert_eq!(rep.status(), Status::Pass, "{rep:?}");
        assert!(verify_second_symbolic(Rationals, 3, 1, &B).is_err());
    }

    #[test]
    fn slack_of_a_term() {
        let d = RingDescriptor::symmetric(2, 2).unwrap();
        let i = defining_ideal(&d, PrimeField::new(3).unwrap()).unwrap();
        let det = &i.gens()[0];
        assert_eq!(generator_slack(&det.pow(2), 3), Some(2));
        assert_eq!(generator_slack(&det.pow(3), 3), None);
    }

    #[test]
    fn overall_status() {
        assert_eq!(overall(&[Status::Pass, Status::NotApplicable]), Status::Pass);
        assert_eq!(overall(&[Status::Pass, Status::Inconclusive]), Status::Inconclusive);
        assert_eq!(overall(&[Status::Inconclusive, Status::Fail]), Status::Fail);
    }
}
