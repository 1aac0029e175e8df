//! Bookkeeping for symplectic 2-handle attachment along the bindings of a
//! rational open book: framing feasibility and formulas, the boundary
//! transform, canonical-class pairings computed two independent ways,
//! homology self-intersections, adjunction values, and the area-ratio
//! constraint for two-binding plans.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Integer, Rational};
use crate::openbook::{ContactType, RationalOpenBook};
use crate::seifert::SeifertData;
use crate::{Error, Result};

/// Framing and boundary pair for a prescribed target multiplicity.
///
/// Given a binding with oriented pair `(alpha, beta)`, monodromy order `n`
/// and multiplicity `p`, a target `abar` is realizable iff
/// `F = (n/p - abar)/alpha > 0` and `abar * beta = 1 (mod alpha)`; the
/// companion `bbar = (1 - abar*beta)/alpha` then satisfies
/// `abar*beta + alpha*bbar = 1`.
pub fn framing_for_target(
    alpha: &Integer,
    beta: &Integer,
    n: &Integer,
    p: &Integer,
    abar: &Integer,
) -> Result<(Rational, Integer)> {
    if alpha.is_zero() {
        return Err(Error::FixedComponent);
    }
    if !p.is_positive() {
        return Err(Error::Precondition("multiplicity must be positive".into()));
    }
    let framing = (Rational::new(n.clone(), p.clone()) - rat_int(abar)) / rat_int(alpha);
    if !framing.is_positive() {
        return Err(Error::InfeasibleFraming);
    }
    let numer = Integer::one() - abar * beta;
    if !(&numer % alpha).is_zero() {
        return Err(Error::CongruenceFailed);
    }
    Ok((framing, numer / alpha))
}

/// An attachment plan: one 2-handle per binding of the open book, each
/// with a feasible target multiplicity.
#[derive(Debug, Clone)]
pub struct AttachmentPlan {
    pub book: RationalOpenBook,
    pub targets: Vec<Integer>,
    /// Page-relative framings, all positive.
    pub framings: Vec<Rational>,
    /// Companion coefficients `bbar_i` with `abar_i b_i + a_i bbar_i = 1`.
    pub target_betas: Vec<Integer>,
}

impl AttachmentPlan {
    pub fn new(book: RationalOpenBook, targets: Vec<Integer>) -> Result<Self> {
        if targets.len() != book.bindings.len() {
            return Err(Error::Precondition("one target per binding is required".into()));
        }
        let n = book.spec.n.clone();
        let mut framings = Vec::with_capacity(targets.len());
        let mut target_betas = Vec::with_capacity(targets.len());
        for (binding, abar) in book.bindings.iter().zip(&targets) {
            let (alpha, beta) = &binding.oriented;
            let (framing, bbar) = framing_for_target(alpha, beta, &n, &binding.multiplicity, abar)?;
            framings.push(framing);
            target_betas.push(bbar);
        }
        Ok(AttachmentPlan { book, targets, framings, target_betas })
    }
}

/// Boundary transform of a plan: bindings replaced by their targets,
/// interior fibers negated. The result is raw data; callers normalize.
/// A target multiplicity of zero is permitted and produces the fixed
/// component `(0, 1)`.
pub fn transform_boundary(plan: &AttachmentPlan) -> Result<SeifertData> {
    let mut fibers = Vec::new();
    for (abar, bbar) in plan.targets.iter().zip(&plan.target_betas) {
        if abar.is_zero() && bbar.is_negative() {
            // (0, -1) and (0, 1) present the same fixed component
            fibers.push((Integer::zero(), Integer::one()));
        } else {
            fibers.push((abar.clone(), bbar.clone()));
        }
    }
    for (a, b) in &plan.book.spec.interior {
        fibers.push((a.clone(), -b.clone()));
    }
    SeifertData::new(plan.book.spec.genus, fibers)
}

/// Framing with respect to a longitude against which the circle orbits
/// have slope `s`: the handle framing is `s - abar/alpha`.
pub fn framing_wrt_slope(s: &Rational, alpha: &Integer, abar: &Integer) -> Result<Rational> {
    if alpha.is_zero() {
        return Err(Error::FixedComponent);
    }
    Ok(s - Rational::new(abar.clone(), alpha.clone()))
}

/// Slope of the regular fibers relative to the zero-framing of a
/// null-homologous binding of multiplicity one: `n/alpha`, valid exactly
/// when the Euler number is `-1/(n*alpha)`.
pub fn zero_framing_slope(n: &Integer, alpha: &Integer, euler: &Rational) -> Result<Rational> {
    if alpha.is_zero() || n.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let hypothesis = -Rational::new(Integer::one(), n * alpha);
    if euler != &hypothesis {
        return Err(Error::Precondition(format!(
            "Euler number {euler} is not -1/({n}*{alpha})"
        )));
    }
    Ok(Rational::new(n.clone(), alpha.clone()))
}

/// Canonical-class pairing from the page data:
/// `-chi - sum p_i (1 + F_i)` over the bindings.
pub fn canonical_pairing_page(chi: &Integer, bindings: &[(Integer, Rational)]) -> Rational {
    let mut total = -rat_int(chi);
    for (p, framing) in bindings {
        total -= rat_int(p) * (Rational::one() + framing);
    }
    total
}

/// Canonical-class pairing from the Seifert data on both ends:
/// `n (s + r - 2 - sum 1/alpha_i - sum 1/alpha_j) - sum p_i (1 - abar_i/alpha_i)`,
/// with `s` bindings `(alpha_i, abar_i, p_i)` and `r` interior
/// multiplicities `alpha_j`. Must agree with [`canonical_pairing_page`] on
/// matching data.
pub fn canonical_pairing_seifert(
    n: &Integer,
    bindings: &[(Integer, Integer, Integer)],
    interior: &[Integer],
) -> Result<Rational> {
    let s = bindings.len() as i64;
    let r = interior.len() as i64;
    let mut bracket = Rational::from_integer(Integer::from(s + r - 2));
    for (alpha, _, _) in bindings {
        if alpha.is_zero() {
            return Err(Error::ZeroAlphaFiber);
        }
        bracket -= Rational::new(Integer::one(), alpha.clone());
    }
    for alpha in interior {
        if alpha.is_zero() {
            return Err(Error::ZeroAlphaFiber);
        }
        bracket -= Rational::new(Integer::one(), alpha.clone());
    }
    let mut total = rat_int(n) * bracket;
    for (alpha, abar, p) in bindings {
        total -= rat_int(p) * (Rational::one() - Rational::new(abar.clone(), alpha.clone()));
    }
    Ok(total)
}

/// Self-intersection of the page class closed up by multiples of the core
/// disks: `sum p_i (n - abar_i p_i) / alpha_i`.
pub fn page_class_self_intersection(
    n: &Integer,
    bindings: &[(Integer, Integer, Integer)],
) -> Result<Rational> {
    let mut total = Rational::zero();
    for (alpha, abar, p) in bindings {
        if alpha.is_zero() {
            return Err(Error::ZeroAlphaFiber);
        }
        total += rat_int(p) * Rational::new(n - abar * p, alpha.clone());
    }
    Ok(total)
}

/// The sphere configuration whose adjunction defect is requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereKind {
    /// Unicuspidal sphere whose cusp link is the `(p, q)` torus knot.
    Cusp(Integer, Integer),
    /// Embedded sphere.
    Smooth,
}

/// Canonical pairing of a sphere from adjunction:
/// `(p-1)(q-1) - 2 - self_int` for a unicuspidal sphere, `-2 - self_int`
/// for an embedded one.
pub fn adjunction_defect(kind: &SphereKind, self_int: &Integer) -> Result<Integer> {
    match kind {
        SphereKind::Cusp(p, q) => {
            if !(p > &Integer::one() && q > p && p.gcd(q).is_one()) {
                return Err(Error::InvalidPuiseux(format!(
                    "({p}, {q}) must satisfy 1 < p < q with gcd 1"
                )));
            }
            Ok((p - Integer::one()) * (q - Integer::one()) - Integer::from(2) - self_int)
        }
        SphereKind::Smooth => Ok(Integer::from(-2) - self_int),
    }
}

/// Open interval of achievable area ratios; `hi = None` means unbounded
/// above. A degenerate interval (`hi == Some(lo)`) records a constant
/// ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioInterval {
    pub lo: Rational,
    pub hi: Option<Rational>,
}

impl RatioInterval {
    pub fn contains(&self, r: &Rational) -> bool {
        match &self.hi {
            Some(hi) if hi == &self.lo => r == &self.lo,
            Some(hi) => &self.lo < r && r < hi,
            None => &self.lo < r,
        }
    }
}

/// Range of the ratio `p1 F1 / p2 F2 = (1/alpha1 - abar1 x)/(1/alpha2 - abar2 y)`
/// over the real relaxation `x, y > 0`, `x + y = total`, with both
/// numerator and denominator positive.
///
/// The ratio is a Moebius function of `y`, hence monotone (or constant) on
/// the feasible segment; the returned interval is the exact image.
pub fn area_ratio_interval(
    alpha1: &Integer,
    abar1: &Integer,
    alpha2: &Integer,
    abar2: &Integer,
    total: &Rational,
) -> Result<RatioInterval> {
    if alpha1.is_zero() || alpha2.is_zero() {
        return Err(Error::ZeroAlphaFiber);
    }
    if !total.is_positive() {
        return Err(Error::Precondition("the slope-sum budget must be positive".into()));
    }
    // numerator A + B y, denominator C + D y on the segment y in (0, total)
    let a = Rational::new(Integer::one(), alpha1.clone()) - rat_int(abar1) * total;
    let b = rat_int(abar1);
    let c = Rational::new(Integer::one(), alpha2.clone());
    let d = -rat_int(abar2);
    let mut lo = Rational::zero();
    let mut hi = total.clone();
    for (u, v) in [(&a, &b), (&c, &d)] {
        if v.is_zero() {
            if !u.is_positive() {
                return Err(Error::EmptyFeasibleSet);
            }
        } else {
            let root = -u / v;
            if v.is_positive() {
                if root > lo {
                    lo = root;
                }
            } else if root < hi {
                hi = root;
            }
        }
    }
    if lo >= hi {
        return Err(Error::EmptyFeasibleSet);
    }
    let det = &b * &c - &a * &d;
    let value_at = |y: &Rational| -> Option<Rational> {
        let den = &c + &d * y;
        if den.is_zero() {
            None
        } else {
            Some((&a + &b * y) / den)
        }
    };
    if det.is_zero() {
        let mid = (&lo + &hi) / Rational::from_integer(Integer::from(2));
        let v = value_at(&mid).ok_or(Error::EmptyFeasibleSet)?;
        return Ok(RatioInterval { lo: v.clone(), hi: Some(v) });
    }
    let ends = [value_at(&lo), value_at(&hi)];
    match ends {
        [Some(r0), Some(r1)] => {
            let (lo, hi) = if r0 <= r1 { (r0, r1) } else { (r1, r0) };
            Ok(RatioInterval { lo, hi: Some(hi) })
        }
        [Some(r), None] | [None, Some(r)] => Ok(RatioInterval { lo: r, hi: None }),
        [None, None] => Err(Error::EmptyFeasibleSet),
    }
}

/// The full record of a handle attachment: framings, boundary data,
/// class weights, and the canonical pairing computed two independent
/// ways (their agreement is enforced).
#[derive(Debug, Clone)]
pub struct CobordismReport {
    pub m_in: SeifertData,
    pub m_out: SeifertData,
    pub order: Integer,
    pub targets: Vec<Integer>,
    pub target_betas: Vec<Integer>,
    pub framings_page: Vec<Rational>,
    /// Framings against caller-provided slopes, when given.
    pub framings_slope: Option<Vec<Rational>>,
    pub chi: Integer,
    /// The positive class weights (multiplicities), defined up to one
    /// overall positive scale.
    pub omega_class_weights: Vec<Integer>,
    /// Coefficient of the overall positive scale in the canonical pairing.
    pub canonical_pairing: Rational,
    /// Sign of the pairing: -1, 0, or 1. The sign transfers to a closed
    /// manifold glued from this piece only when both fillings carry exact
    /// forms; the report carries the flag and asserts nothing beyond that.
    pub sign: i8,
    pub contact: ContactType,
}

/// Assembles the cobordism report for a plan, optionally with per-binding
/// slopes for longitude-relative framings.
pub fn cobordism_report(
    plan: &AttachmentPlan,
    slopes: Option<&[Rational]>,
) -> Result<CobordismReport> {
    let book = &plan.book;
    let n = book.spec.n.clone();
    let m_in = book.spec.manifold()?;
    let m_out = transform_boundary(plan)?;

    let page_data: Vec<(Integer, Rational)> = book
        .bindings
        .iter()
        .zip(&plan.framings)
        .map(|(b, f)| (b.multiplicity.clone(), f.clone()))
        .collect();
    let from_page = canonical_pairing_page(&book.chi, &page_data);

    let seifert_data: Vec<(Integer, Integer, Integer)> = book
        .bindings
        .iter()
        .zip(&plan.targets)
        .map(|(b, abar)| (b.oriented.0.clone(), abar.clone(), b.multiplicity.clone()))
        .collect();
    let interior: Vec<Integer> = book.spec.interior.iter().map(|(a, _)| a.clone()).collect();
    let from_seifert = canonical_pairing_seifert(&n, &seifert_data, &interior)?;
    if from_page != from_seifert {
        return Err(Error::InternalCheck(format!(
            "canonical pairing disagrees: page route {from_page}, boundary route {from_seifert}"
        )));
    }

    let framings_slope = match slopes {
        None => None,
        Some(values) => {
            if values.len() != book.bindings.len() {
                return Err(Error::Precondition("one slope per binding is required".into()));
            }
            let mut out = Vec::with_capacity(values.len());
            for ((binding, abar), s) in book.bindings.iter().zip(&plan.targets).zip(values) {
                out.push(framing_wrt_slope(s, &binding.oriented.0, abar)?);
            }
            Some(out)
        }
    };

    let sign = if from_page.is_zero() {
        0
    } else if from_page.is_positive() {
        1
    } else {
        -1
    };
    Ok(CobordismReport {
        m_in,
        m_out,
        order: n,
        targets: plan.targets.clone(),
        target_betas: plan.target_betas.clone(),
        framings_page: plan.framings.clone(),
        framings_slope,
        chi: book.chi.clone(),
        omega_class_weights: book.bindings.iter().map(|b| b.multiplicity.clone()).collect(),
        canonical_pairing: from_page,
        sign,
        contact: book.contact_type()?,
    })
}
