//! Closed-form invariants of symmetric determinantal rings `k[X]/I_t(X)` and
//! Pfaffian rings `k[X]/Pf_2t(X)`, plus the shape criterion deciding when a
//! product of minors lies in a symbolic power of `I_t`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matgen::Shape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Symmetric,
    Pfaffian,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingKind::Symmetric => "symmetric",
            RingKind::Pfaffian => "pfaffian",
        })
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(RingKind::Symmetric),
            "pfaffian" | "skew" => Ok(RingKind::Pfaffian),
            other => Err(Error::InvalidArgument(format!("unknown ring kind `{other}`"))),
        }
    }
}

/// `(kind, n, t)`: `k[X]/I_t` for symmetric `X`, or `k[X]/Pf_2t` for skew `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub kind: RingKind,
    pub n: u64,
    pub t: u64,
}

impl RingDescriptor {
    pub fn new(kind: RingKind, n: u64, t: u64) -> Result<Self> {
        let ok = match kind {
            RingKind::Symmetric => 1 <= t && t <= n,
            RingKind::Pfaffian => 1 <= t && 2 * t <= n,
        };
        if !ok {
            let need = match kind {
                RingKind::Symmetric => "1 <= t <= n",
                RingKind::Pfaffian => "t >= 1 and 2t <= n",
            };
            return Err(Error::InvalidArgument(format!("{kind} ring with n = {n}, t = {t}: need {need}")));
        }
        Ok(RingDescriptor { kind, n, t })
    }

    pub fn symmetric(n: u64, t: u64) -> Result<Self> {
        Self::new(RingKind::Symmetric, n, t)
    }

    pub fn pfaffian(n: u64, t: u64) -> Result<Self> {
        Self::new(RingKind::Pfaffian, n, t)
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn ambient_vars(&self) -> u64 {
        match self.kind {
            RingKind::Symmetric => self.n * (self.n + 1) / 2,
            RingKind::Pfaffian => self.n * (self.n - 1) / 2,
        }
    }

    /// `t = 1`: `I_1` and `Pf_2` are the maximal ideal and `R = k`.
    pub fn is_degenerate(&self) -> bool {
        self.t == 1
    }
}

/// Exact rational printed as `a/b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Rational64);

impl Exact {
    pub fn new(num: i64, den: i64) -> Self {
        Exact(Rational64::new(num, den))
    }

    pub fn integer(v: i64) -> Self {
        Exact(Rational64::from_integer(v))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Exact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad rational `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        if den == 0 {
            return Err(bad());
        }
        Ok(Exact::new(num, den))
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn require_symmetric(desc: &RingDescriptor) -> Result<()> {
    if desc.kind != RingKind::Symmetric {
        return Err(Error::InvalidArgument("this invariant is only tabulated for symmetric rings".into()));
    }
    Ok(())
}

/// Krull dimension of `R` and height of its defining ideal.
pub fn dim_and_height(desc: &RingDescriptor) -> (u64, u64) {
    let (n, t) = (desc.n, desc.t);
    let dim = match desc.kind {
        RingKind::Symmetric => n * (t - 1) - (t - 1) * (t.saturating_sub(2)) / 2,
        // the Pfaffian ideal has height C(n - 2t + 2, 2)
        RingKind::Pfaffian => {
            let m = n - 2 * t + 2;
            desc.ambient_vars() - m * (m - 1) / 2
        }
    };
    (dim, desc.ambient_vars() - dim)
}

/// The a-invariant of the standard graded ring `R`.
pub fn a_invariant(desc: &RingDescriptor) -> i64 {
    let (n, t) = (desc.n as i64, desc.t as i64);
    match desc.kind {
        RingKind::Symmetric if (n - t) % 2 == 0 => -(t - 1) * n / 2,
        RingKind::Symmetric => -(t - 1) * (n + 1) / 2,
        RingKind::Pfaffian => -n * (t - 1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ClassGroup {
    /// `Z/2Z`, generated by the class of the prime `p`.
    CyclicOfOrderTwo { generator: String },
    /// `t` outside `2..=n`; no class group statement is made.
    Degenerate { reason: String },
    /// Not tabulated for this ring family.
    NotReported,
}

/// Gorenstein property (`n ≡ t mod 2`) and the divisor class group.
pub fn gorenstein_and_class_group(desc: &RingDescriptor) -> (bool, ClassGroup) {
    match desc.kind {
        RingKind::Pfaffian => (true, ClassGroup::NotReported),
        RingKind::Symmetric if desc.t == 1 => (
            true,
            ClassGroup::Degenerate { reason: "t = 1: R is the coefficient field".into() },
        ),
        RingKind::Symmetric => (
            (desc.n - desc.t) % 2 == 0,
            ClassGroup::CyclicOfOrderTwo { generator: "[p]".into() },
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CanonicalModule {
    /// `R(shift)`.
    Free { shift: i64 },
    /// `p(shift)`, the twist of the height-one prime `p`.
    PrimeTwisted { shift: i64 },
}

/// Graded canonical module of `R`; needs `2 <= t <= n` in the symmetric case.
pub fn canonical_module(desc: &RingDescriptor) -> Result<CanonicalModule> {
    match desc.kind {
        RingKind::Pfaffian => Ok(CanonicalModule::Free { shift: a_invariant(desc) }),
        RingKind::Symmetric => {
            if desc.t < 2 {
                return Err(Error::InvalidArgument("canonical module is tabulated for 2 <= t <= n".into()));
            }
            let (n, t) = (desc.n as i64, desc.t as i64);
            Ok(if (n - t) % 2 == 0 {
                CanonicalModule::Free { shift: -(t - 1) * n / 2 }
            } else {
                CanonicalModule::PrimeTwisted { shift: -(t - 1) * (n - 1) / 2 }
            })
        }
    }
}

/// `γ_t(shape) = Σ max(0, a_i - t + 1)`.
pub fn gamma(shape: &Shape, t: u64) -> u64 {
    shape.sizes().iter().map(|&a| (a as u64 + 1).saturating_sub(t)).sum()
}

/// Whether a product of minors of the given shape lies in `I_t^(k)` of an
/// `n x n` symmetric matrix.
pub fn symbolic_member_product(shape: &Shape, t: u64, k: u64, n: u64) -> bool {
    shape.sizes().iter().all(|&a| a as u64 <= n) && gamma(shape, t) >= k
}

/// The F-pure threshold of the maximal homogeneous ideal. Also the log
/// canonical threshold in characteristic zero.
pub fn fpt(desc: &RingDescriptor) -> Exact {
    let (n, t) = (desc.n as i64, desc.t as i64);
    match desc.kind {
        RingKind::Symmetric => Exact::new(n * (t - 1), 2),
        RingKind::Pfaffian => Exact::integer(n * (t - 1)),
    }
}

pub fn lct(desc: &RingDescriptor) -> Exact {
    fpt(desc)
}

/// Order of the canonical class in the class group.
pub const CANONICAL_CLASS_ORDER: u64 = 2;

/// Generating degree `D = (t-1) n` of the second symbolic power of `ω_R` in
/// the non-Gorenstein symmetric case.
pub fn omega2_degree(desc: &RingDescriptor) -> Result<u64> {
    require_symmetric(desc)?;
    if desc.t < 2 {
        return Err(Error::InvalidArgument("need 2 <= t <= n".into()));
    }
    if (desc.n - desc.t) % 2 == 0 {
        return Err(Error::InvalidArgument("R is Gorenstein; D is only defined when n and t differ in parity".into()));
    }
    // ω^(2) = p^(2)(-(t-1)(n-1)) and p^(2) = (d) ≅ R(-(t-1))
    let twist = (desc.t - 1) * (desc.n - 1);
    Ok((desc.t - 1) + twist)
}

/// Every tabulated invariant of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub kind: RingKind,
    pub n: u64,
    pub t: u64,
    pub dim: u64,
    pub height: u64,
    pub a_invariant: i64,
    pub gorenstein: bool,
    pub class_group: ClassGroup,
    pub canonical_module: Option<CanonicalModule>,
    pub fpt: Exact,
    pub lct: Exact,
    pub omega2_degree: Option<u64>,
    pub degenerate: Option<String>,
}

pub fn report(desc: &RingDescriptor) -> InvariantReport {
    let (dim, height) = dim_and_height(desc);
    let (gorenstein, class_group) = gorenstein_and_class_group(desc);
    let degenerate = desc.is_degenerate().then(|| "degenerate: R = k".to_string());
    let omega2 = if desc.kind == RingKind::Symmetric && !gorenstein {
        omega2_degree(desc).ok()
    } else {
        None
    };
    InvariantReport {
        kind: desc.kind,
        n: desc.n,
        t: desc.t,
        dim,
        height,
        a_invariant: a_invariant(desc),
        gorenstein,
        class_group,
        canonical_module: canonical_module(desc).ok(),
        fpt: fpt(desc),
        lct: lct(desc),
        omega2_degree: omega2,
        degenerate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: u64, t: u64) -> RingDescriptor {
        RingDescriptor::symmetric(n, t).unwrap()
    }

    #[test]
    fn descriptor_ranges() {
        assert!(RingDescriptor::symmetric(3, 4).is_err());
        assert!(RingDescriptor::symmetric(3, 0).is_err());
        assert!(RingDescriptor::pfaffian(3, 2).is_err());
        assert!(RingDescriptor::pfaffian(4, 2).is_ok());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_and_height(&sym(3, 2)), (3, 3));
        for n in 1..=10 {
            assert_eq!(dim_and_height(&sym(n, 1)), (0, n * (n + 1) / 2));
            // I_n is principal
            assert_eq!(dim_and_height(&sym(n, n)).1, 1);
        }
        assert_eq!(dim_and_height(&RingDescriptor::pfaffian(4, 2).unwrap()).1, 1);
        assert_eq!(dim_and_height(&RingDescriptor::pfaffian(5, 2).unwrap()).1, 3);
        assert_eq!(dim_and_height(&RingDescriptor::pfaffian(5, 1).unwrap()), (0, 10));
    }

    #[test]
    fn a_invariants() {
        assert_eq!(a_invariant(&sym(2, 2)), -1);
        assert_eq!(a_invariant(&sym(3, 2)), -2);
        assert_eq!(a_invariant(&RingDescriptor::pfaffian(4, 2).unwrap()), -4);
    }

    #[test]
    fn gorenstein_parity() {
        assert!(gorenstein_and_class_group(&sym(2, 2)).0);
        assert!(!gorenstein_and_class_group(&sym(3, 2)).0);
        assert!(gorenstein_and_class_group(&sym(4, 2)).0);
        assert!(matches!(gorenstein_and_class_group(&sym(3, 1)).1, ClassGroup::Degenerate { .. }));
    }

    #[test]
    fn canonical_modules() {
        assert_eq!(canonical_module(&sym(2, 2)).unwrap(), CanonicalModule::Free { shift: -1 });
        assert_eq!(canonical_module(&sym(3, 2)).unwrap(), CanonicalModule::PrimeTwisted { shift: -1 });
        assert_eq!(canonical_module(&sym(4, 3)).unwrap(), CanonicalModule::PrimeTwisted { shift: -3 });
        assert!(canonical_module(&sym(4, 1)).is_err());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(&Shape::new(vec![5]).unwrap(), 5), 1);
        assert_eq!(gamma(&Shape::new(vec![1]).unwrap(), 2), 0);
        assert_eq!(gamma(&Shape::staircase(3), 2), 3);
    }

    #[test]
    fn symbolic_membership() {
        let (_, h) = dim_and_height(&sym(3, 2));
        assert!(symbolic_member_product(&Shape::staircase(3), 2, h, 3));
        assert!(!symbolic_member_product(&Shape::new(vec![4]).unwrap(), 1, 0, 3));
        assert!(!symbolic_member_product(&Shape::new(vec![2]).unwrap(), 3, 1, 3));
        assert!(symbolic_member_product(&Shape::new(vec![2]).unwrap(), 3, 0, 3));
    }

    #[test]
    fn thresholds() {
        assert_eq!(fpt(&sym(3, 2)), Exact::new(3, 2));
        assert_eq!(fpt(&sym(2, 2)), Exact::integer(1));
        assert_eq!(fpt(&RingDescriptor::pfaffian(5, 2).unwrap()), Exact::integer(5));
        assert_eq!(fpt(&sym(4, 1)), Exact::integer(0));
        assert_eq!(lct(&sym(5, 3)), fpt(&sym(5, 3)));
    }

    #[test]
    fn omega2() {
        assert_eq!(omega2_degree(&sym(3, 2)).unwrap(), 3);
        assert_eq!(omega2_degree(&sym(4, 3)).unwrap(), 8);
        assert_eq!(omega2_degree(&sym(5, 2)).unwrap(), 5);
        assert!(omega2_degree(&sym(4, 2)).is_err());
        assert_eq!(fpt(&sym(4, 3)), Exact::integer(4));
    }

    #[test]
    fn exact_text_round_trip() {
        assert_eq!(Exact::new(3, 2).to_string(), "3/2");
        assert_eq!(Exact::integer(1).to_string(), "1/1");
        assert_eq!("6/4".parse::<Exact>().unwrap(), Exact::new(3, 2));
        assert!("1/0".parse::<Exact>().is_err());
    }

    #[test]
    fn report_fields_are_consistent() {
        for n in 1..=12 {
            for t in 1..=n {
                let d = sym(n, t);
                let r = report(&d);
                assert_eq!(r.dim + r.height, n * (n + 1) / 2);
                assert_eq!(r.fpt, r.lct);
                if r.gorenstein {
                    assert_eq!(r.fpt, Exact::integer(-r.a_invariant));
                } else {
                    let d = r.omega2_degree.unwrap() as i64;
                    assert_eq!(r.fpt, Exact::new(d, CANONICAL_CLASS_ORDER as i64));
                }
                if let Some(CanonicalModule::Free { shift }) = r.canonical_module {
                    assert_eq!(shift, r.a_invariant);
                }
            }
        }
    }
}
