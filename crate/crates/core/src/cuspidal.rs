//! Arithmetic of rational unicuspidal curves with one Puiseux pair: the
//! dual pair, the self-intersection bound `m_{p,q}`, multiplicity-sequence
//! invariants and the competing sum-of-squares bound, blow-up behaviour,
//! the classification of the surgered manifolds `M_{p,q,m}`, the
//! fillability criterion, and the curve-family catalog.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, mod_inverse, rat_int, Integer, Rational};
use crate::seifert::{LensSpace, SeifertData};
use crate::{Error, Result};

fn check_pair(p: &Integer, q: &Integer) -> Result<()> {
    if !(p > &Integer::one() && q > p && p.gcd(q).is_one()) {
        return Err(Error::InvalidPuiseux(format!(
            "({p}, {q}) must satisfy 1 < p < q with gcd(p, q) = 1"
        )));
    }
    Ok(())
}

/// A coprime pair `1 < p < q` with its dual pair `(p', q')`: the unique
/// positive solution of `p q' + q p' = p q + 1` with `0 < p' < p` and
/// `0 < q' < q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxPair {
    pub p: Integer,
    pub q: Integer,
    pub p_dual: Integer,
    pub q_dual: Integer,
}

impl PuiseuxPair {
    pub fn new(p: Integer, q: Integer) -> Result<Self> {
        let (p_dual, q_dual) = dual_pair(&p, &q)?;
        Ok(PuiseuxPair { p, q, p_dual, q_dual })
    }

    pub fn from_ints(p: i64, q: i64) -> Result<Self> {
        PuiseuxPair::new(int(p), int(q))
    }
}

/// The dual pair `(p', q')`: `q'` is the inverse of `p` modulo `q`, and
/// `p' = (pq + 1 - p q')/q`.
pub fn dual_pair(p: &Integer, q: &Integer) -> Result<(Integer, Integer)> {
    check_pair(p, q)?;
    let q_dual = mod_inverse(p, q)?.expect("coprime by precondition");
    let p_dual = (p * q + Integer::one() - p * &q_dual) / q;
    debug_assert!(p_dual.is_positive() && p_dual < *p);
    debug_assert_eq!(p * &q_dual + q * &p_dual, p * q + Integer::one());
    Ok((p_dual, q_dual))
}

/// The largest integer not exceeding `pq + max(p/(p - p'), q/(q - q'))`.
pub fn m_bound(p: &Integer, q: &Integer) -> Result<Integer> {
    let (p_dual, q_dual) = dual_pair(p, q)?;
    let left = Rational::new(p.clone(), p - p_dual);
    let right = Rational::new(q.clone(), q - q_dual);
    let bound = rat_int(&(p * q)) + left.max(right);
    Ok(bound.floor().to_integer())
}

/// Multiplicity-sequence invariants of the cusp with link the `(p, q)`
/// torus knot: the sequence itself, the sum of squares of its entries, and
/// the last entry (which exceeds 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspInvariants {
    pub multiplicity_sequence: Vec<Integer>,
    pub sum_of_squares: Integer,
    pub last_entry: Integer,
}

impl CuspInvariants {
    /// The competing self-intersection bound `M + 2 l + 1`.
    pub fn gs_bound(&self) -> Integer {
        &self.sum_of_squares + int(2) * &self.last_entry + Integer::one()
    }
}

/// Builds the multiplicity sequence by the Euclidean recursion: emit the
/// smaller entry, replace `(p, q)` by `sorted(p, q - p)`, stop when the
/// smaller entry reaches 1.
pub fn cusp_invariants(p: &Integer, q: &Integer) -> Result<CuspInvariants> {
    check_pair(p, q)?;
    let mut seq = Vec::new();
    let (mut a, mut b) = (p.clone(), q.clone());
    while a > Integer::one() {
        seq.push(a.clone());
        let r = &b - &a;
        if r < a {
            b = std::mem::replace(&mut a, r);
        } else {
            b = r;
        }
    }
    let sum_of_squares = seq.iter().map(|m| m * m).sum();
    let last_entry = seq.last().expect("p > 1 yields a nonempty sequence").clone();
    Ok(CuspInvariants { multiplicity_sequence: seq, sum_of_squares, last_entry })
}

/// `M + 2 l + 1` for the `(p, q)` cusp.
pub fn gs_bound(p: &Integer, q: &Integer) -> Result<Integer> {
    Ok(cusp_invariants(p, q)?.gs_bound())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundComparison {
    Less,
    Equal,
}

/// Compares the self-intersection bound against the sum-of-squares bound;
/// the former never exceeds the latter.
pub fn compare_bounds(p: &Integer, q: &Integer) -> Result<BoundComparison> {
    let a = m_bound(p, q)?;
    let b = gs_bound(p, q)?;
    if a == b {
        Ok(BoundComparison::Equal)
    } else if a < b {
        Ok(BoundComparison::Less)
    } else {
        Err(Error::InternalCheck(format!(
            "bound {a} exceeds the sum-of-squares bound {b} for ({p}, {q})"
        )))
    }
}

/// One blow-up at the cusp: the proper transform has pair
/// `sorted(p, q - p)`, or is smooth (`None`) when `q - p = 1`.
pub fn blowup_pair(p: &Integer, q: &Integer) -> Result<Option<PuiseuxPair>> {
    check_pair(p, q)?;
    let r = q - p;
    if r.is_one() {
        return Ok(None);
    }
    let (a, b) = if &r < p { (r, p.clone()) } else { (p.clone(), r) };
    Ok(Some(PuiseuxPair::new(a, b)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeryCase {
    Below,
    AtProduct,
    Above,
}

/// The boundary manifold of a curve neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Manifold {
    Seifert(SeifertData),
    ConnectedSum(LensSpace, LensSpace),
}

/// Contact type of the invariant structure on the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CuspContact {
    Transverse,
    /// Dividing circle isolating the fiber of the stated multiplicity.
    NonTransverse { isolated_multiplicity: Integer },
    FixedComponent,
}

/// Classification of `M_{p,q,m}`, the reversed boundary of a neighborhood
/// of a unicuspidal curve of self-intersection `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpqmClass {
    pub case: SurgeryCase,
    pub manifold: Manifold,
    pub contact: CuspContact,
}

/// Classifies `M_{p,q,m}`:
///
/// * `m < pq`: `M((pq-m, pq-m+1), (p, -p'), (q, -q'))`, transverse;
/// * `m = pq`: the connected sum `L(p, p') # L(q, q')`, with a fixed
///   component of the circle action;
/// * `m > pq`: `M((m-pq, m-pq-1), (p, -p'), (q, -q'))`, non-transverse
///   with a dividing circle isolating the `(m-pq)`-fiber.
pub fn classify_mpqm(p: &Integer, q: &Integer, m: &Integer) -> Result<MpqmClass> {
    let (p_dual, q_dual) = dual_pair(p, q)?;
    if !m.is_positive() {
        return Err(Error::Precondition("self-intersection must be positive".into()));
    }
    let product = p * q;
    if m == &product {
        return Ok(MpqmClass {
            case: SurgeryCase::AtProduct,
            manifold: Manifold::ConnectedSum(
                LensSpace::from_pair(p.clone(), p_dual),
                LensSpace::from_pair(q.clone(), q_dual),
            ),
            contact: CuspContact::FixedComponent,
        });
    }
    let first = if m < &product {
        (&product - m, &product - m + Integer::one())
    } else {
        (m - &product, m - &product - Integer::one())
    };
    let data = SeifertData::new(
        0,
        vec![first, (p.clone(), -p_dual), (q.clone(), -q_dual)],
    )?;
    if m < &product {
        Ok(MpqmClass {
            case: SurgeryCase::Below,
            manifold: Manifold::Seifert(data),
            contact: CuspContact::Transverse,
        })
    } else {
        Ok(MpqmClass {
            case: SurgeryCase::Above,
            manifold: Manifold::Seifert(data),
            contact: CuspContact::NonTransverse { isolated_multiplicity: m - product },
        })
    }
}

/// Fillability regimes for the invariant contact structure on `M_{p,q,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fillability {
    /// `m <= pq`: the structure is transverse (fillable on general grounds).
    Transverse,
    /// `pq < m <= m_{p,q}`: fillable via the pair-sum criterion.
    WithinBound,
    /// `m > m_{p,q}`: beyond the criterion; the question is open here.
    BeyondBound,
}

pub fn fillability_verdict(p: &Integer, q: &Integer, m: &Integer) -> Result<Fillability> {
    check_pair(p, q)?;
    if !m.is_positive() {
        return Err(Error::Precondition("self-intersection must be positive".into()));
    }
    if m <= &(p * q) {
        Ok(Fillability::Transverse)
    } else if m <= &m_bound(p, q)? {
        Ok(Fillability::WithinBound)
    } else {
        Ok(Fillability::BeyondBound)
    }
}

/// What the catalog expects the classification to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedManifold {
    Seifert(SeifertData),
    ConnectedSum,
    /// A lens space whose presentation starts with the unit fiber `(1, 2)`.
    LensWithUnitFiber,
}

/// One catalog entry: a known curve of degree `d` with one Puiseux pair
/// `(p, q)` and self-intersection `d^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: u8,
    pub label: String,
    pub p: Integer,
    pub q: Integer,
    pub d: Integer,
    pub expected: ExpectedManifold,
}

fn fibonacci(k: u32) -> Integer {
    let mut a = Integer::zero();
    let mut b = Integer::one();
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Materializes the catalog of plane-curve families for degrees up to
/// `max_d` and odd recursion indices up to `max_j`.
pub fn family_catalog(max_d: i64, max_j: i64) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    // family 1: (d-1, d), sharp at m = d^2
    for d in 3..=max_d {
        let expected = ExpectedManifold::Seifert(SeifertData::from_pairs(
            0,
            &[(d, d - 1), (d - 1, -1), (d, 1 - d)],
        )?);
        out.push(CatalogEntry {
            family: 1,
            label: format!("d={d}"),
            p: int(d - 1),
            q: int(d),
            d: int(d),
            expected,
        });
    }
    // family 2: (delta, 4 delta - 1) of even degree 2 delta, sharp
    for delta in 2..=(max_d / 2) {
        let expected = ExpectedManifold::Seifert(SeifertData::from_pairs(
            0,
            &[(delta, delta - 1), (delta, 1 - delta), (4 * delta - 1, -4)],
        )?);
        out.push(CatalogEntry {
            family: 2,
            label: format!("delta={delta}"),
            p: int(delta),
            q: int(4 * delta - 1),
            d: int(2 * delta),
            expected,
        });
    }
    // families 3 and 4: Fibonacci-indexed, odd j >= 5
    let mut j = 5u32;
    while i64::from(j) <= max_j {
        let (f_prev2, f_j, f_next2) = (fibonacci(j - 2), fibonacci(j), fibonacci(j + 2));
        out.push(CatalogEntry {
            family: 3,
            label: format!("j={j}"),
            p: &f_prev2 * &f_prev2,
            q: &f_j * &f_j,
            d: &f_prev2 * &f_j,
            expected: ExpectedManifold::ConnectedSum,
        });
        out.push(CatalogEntry {
            family: 4,
            label: format!("j={j}"),
            p: f_prev2,
            q: f_next2,
            d: f_j,
            expected: ExpectedManifold::LensWithUnitFiber,
        });
        j += 2;
    }
    // families 5 and 6: the two sporadic members
    if max_d >= 8 {
        out.push(CatalogEntry {
            family: 5,
            label: "d=8".into(),
            p: int(3),
            q: int(22),
            d: int(8),
            expected: ExpectedManifold::Seifert(SeifertData::from_pairs(
                0,
                &[(2, -1), (3, 2), (22, 7)],
            )?),
        });
    }
    if max_d >= 16 {
        out.push(CatalogEntry {
            family: 6,
            label: "d=16".into(),
            p: int(6),
            q: int(43),
            d: int(16),
            expected: ExpectedManifold::Seifert(SeifertData::from_pairs(
                0,
                &[(2, -1), (6, 5), (43, 7)],
            )?),
        });
    }
    Ok(out)
}

/// Checks one catalog entry: the classification at `m = d^2` matches the
/// expected manifold and `d^2` does not exceed the bound.
pub fn verify_catalog_entry(entry: &CatalogEntry) -> Result<bool> {
    let m = &entry.d * &entry.d;
    if m > m_bound(&entry.p, &entry.q)? {
        return Ok(false);
    }
    let class = classify_mpqm(&entry.p, &entry.q, &m)?;
    match (&entry.expected, &class.manifold) {
        (ExpectedManifold::Seifert(expected), Manifold::Seifert(got)) => {
            got.same_seifert(expected)
        }
        (ExpectedManifold::ConnectedSum, Manifold::ConnectedSum(l1, l2)) => {
            let (p_dual, q_dual) = dual_pair(&entry.p, &entry.q)?;
            let e1 = LensSpace::from_pair(entry.p.clone(), p_dual);
            let e2 = LensSpace::from_pair(entry.q.clone(), q_dual);
            Ok(l1.lens_equal(&e1)? && l2.lens_equal(&e2)?)
        }
        (ExpectedManifold::LensWithUnitFiber, Manifold::Seifert(got)) => {
            let first_is_unit = got.fibers().first() == Some(&(Integer::one(), int(2)));
            let exceptional = got.normalize()?.fibers.len();
            Ok(first_is_unit && exceptional <= 2)
        }
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(p: i64, q: i64) -> (Integer, Integer) {
        (int(p), int(q))
    }

    #[test]
    fn dual_pair_pinned() {
        let (p, q) = ip(4, 5);
        assert_eq!(dual_pair(&p, &q).unwrap(), (int(1), int(4)));
        let (p, q) = ip(3, 22);
        assert_eq!(dual_pair(&p, &q).unwrap(), (int(1), int(15)));
        let (p, q) = ip(3, 5);
        assert_eq!(dual_pair(&p, &q).unwrap(), (int(2), int(2)));
        assert!(dual_pair(&int(2), &int(4)).is_err());
        assert!(dual_pair(&int(1), &int(5)).is_err());
    }

    #[test]
    fn m_bound_pinned() {
        let cases = [((2, 3), 9), ((5, 6), 36), ((2, 7), 16), ((3, 10), 33), ((2, 13), 28)];
        for ((p, q), want) in cases {
            assert_eq!(m_bound(&int(p), &int(q)).unwrap(), int(want));
        }
    }

    #[test]
    fn cusp_invariants_pinned() {
        let inv = cusp_invariants(&int(2), &int(3)).unwrap();
        assert_eq!(inv.multiplicity_sequence, vec![int(2)]);
        assert_eq!(inv.sum_of_squares, int(4));
        assert_eq!(inv.last_entry, int(2));

        let inv = cusp_invariants(&int(2), &int(13)).unwrap();
        assert_eq!(inv.multiplicity_sequence, vec![int(2); 6]);
        assert_eq!(inv.sum_of_squares, int(24));

        let inv = cusp_invariants(&int(3), &int(5)).unwrap();
        assert_eq!(inv.multiplicity_sequence, vec![int(3), int(2)]);
        assert_eq!(inv.sum_of_squares, int(13));
        assert_eq!(inv.gs_bound(), int(18));
    }

    #[test]
    fn compare_bounds_pinned() {
        assert_eq!(gs_bound(&int(2), &int(13)).unwrap(), int(29));
        assert_eq!(compare_bounds(&int(2), &int(13)).unwrap(), BoundComparison::Less);
        assert_eq!(compare_bounds(&int(3), &int(5)).unwrap(), BoundComparison::Equal);
        assert_eq!(compare_bounds(&int(4), &int(9)).unwrap(), BoundComparison::Less);
    }

    #[test]
    fn blowup_pinned() {
        let t = blowup_pair(&int(2), &int(13)).unwrap().unwrap();
        assert_eq!((t.p, t.q, t.p_dual, t.q_dual), (int(2), int(11), int(1), int(6)));
        let t = blowup_pair(&int(3), &int(5)).unwrap().unwrap();
        assert_eq!((t.p, t.q), (int(2), int(3)));
        assert!(blowup_pair(&int(2), &int(3)).unwrap().is_none());
    }

    #[test]
    fn classify_pinned() {
        let c = classify_mpqm(&int(2), &int(3), &int(5)).unwrap();
        assert_eq!(c.case, SurgeryCase::Below);
        assert_eq!(c.contact, CuspContact::Transverse);
        match &c.manifold {
            Manifold::Seifert(s) => {
                let expect = SeifertData::from_pairs(0, &[(1, 2), (2, -1), (3, -2)]).unwrap();
                assert!(s.same_seifert(&expect).unwrap());
            }
            _ => panic!("expected a fibered manifold"),
        }

        let c = classify_mpqm(&int(2), &int(3), &int(6)).unwrap();
        assert_eq!(c.case, SurgeryCase::AtProduct);
        match &c.manifold {
            Manifold::ConnectedSum(l1, l2) => {
                assert!(l1.lens_equal(&LensSpace::from_ints(2, 1)).unwrap());
                assert!(l2.lens_equal(&LensSpace::from_ints(3, 2)).unwrap());
            }
            _ => panic!("expected a connected sum"),
        }

        let c = classify_mpqm(&int(3), &int(22), &int(64)).unwrap();
        assert_eq!(c.case, SurgeryCase::Below);
        match &c.manifold {
            Manifold::Seifert(s) => {
                let expect = SeifertData::from_pairs(0, &[(2, -1), (3, 2), (22, 7)]).unwrap();
                assert!(s.same_seifert(&expect).unwrap());
            }
            _ => panic!("expected a fibered manifold"),
        }

        let c = classify_mpqm(&int(2), &int(13), &int(25)).unwrap();
        match &c.manifold {
            Manifold::Seifert(s) => {
                assert_eq!(s.fibers()[0], (int(1), int(2)));
                assert_eq!(s.fibers()[1], (int(2), int(-1)));
                assert_eq!(s.fibers()[2], (int(13), int(-7)));
                // one-unit-below-product data is always a lens space
                assert!(s.lens_from_two_fibers().is_ok());
            }
            _ => panic!("expected a fibered manifold"),
        }
    }

    #[test]
    fn classify_above_product() {
        let c = classify_mpqm(&int(2), &int(3), &int(9)).unwrap();
        assert_eq!(c.case, SurgeryCase::Above);
        assert_eq!(c.contact, CuspContact::NonTransverse { isolated_multiplicity: int(3) });
        match &c.manifold {
            Manifold::Seifert(s) => {
                let expect = SeifertData::from_pairs(0, &[(3, 2), (2, -1), (3, -2)]).unwrap();
                assert!(s.same_seifert(&expect).unwrap());
            }
            _ => panic!("expected a fibered manifold"),
        }
    }

    #[test]
    fn fillability_pinned() {
        assert_eq!(
            fillability_verdict(&int(2), &int(3), &int(9)).unwrap(),
            Fillability::WithinBound
        );
        assert_eq!(
            fillability_verdict(&int(2), &int(3), &int(10)).unwrap(),
            Fillability::BeyondBound
        );
        assert_eq!(
            fillability_verdict(&int(2), &int(3), &int(5)).unwrap(),
            Fillability::Transverse
        );
    }

    #[test]
    fn catalog_pinned() {
        let catalog = family_catalog(16, 11).unwrap();
        for entry in &catalog {
            assert!(verify_catalog_entry(entry).unwrap(), "family {} {}", entry.family, entry.label);
        }
        // spot checks of the materialized parameters
        assert!(catalog.iter().any(|e| e.family == 1 && e.p == int(2) && e.q == int(3)));
        assert!(catalog.iter().any(|e| e.family == 2 && e.p == int(2) && e.q == int(7)));
        assert!(catalog
            .iter()
            .any(|e| e.family == 3 && e.p == int(4) && e.q == int(25) && e.d == int(10)));
        assert!(catalog.iter().any(|e| e.family == 4 && e.p == int(2) && e.q == int(13)));
        assert!(catalog.iter().any(|e| e.family == 6 && e.p == int(6) && e.q == int(43)));
    }

    #[test]
    fn delta_invariant_identity() {
        // sum m_i (m_i - 1) = (p-1)(q-1) over the multiplicity sequence
        for p in 2i64..20 {
            for q in (p + 1)..40 {
                if !int(p).gcd(&int(q)).is_one() {
                    continue;
                }
                let inv = cusp_invariants(&int(p), &int(q)).unwrap();
                let sum: Integer = inv
                    .multiplicity_sequence
                    .iter()
                    .map(|m| m * (m - Integer::one()))
                    .sum();
                assert_eq!(sum, int((p - 1) * (q - 1)), "({p}, {q})");
            }
        }
    }

    #[test]
    fn bound_inequality_window() {
        // -1 < m_bound - pq - max(...) <= 0 on a subrange; the full sweep
        // lives in the acceptance suite
        for p in 2i64..12 {
            for q in (p + 1)..30 {
                if !int(p).gcd(&int(q)).is_one() {
                    continue;
                }
                let (pd, qd) = dual_pair(&int(p), &int(q)).unwrap();
                let target = rat_int(&int(p * q))
                    + Rational::new(int(p), int(p) - pd).max(Rational::new(int(q), int(q) - qd));
                let m = rat_int(&m_bound(&int(p), &int(q)).unwrap());
                let diff = &m - &target;
                assert!(diff > Rational::new(int(-1), int(1)) && !diff.is_positive());
            }
        }
    }

    #[test]
    fn lens_pattern_one_below_product() {
        // at m = pq - 1 the leading pair is (1, 2): a lens space
        for p in 2i64..10 {
            for q in (p + 1)..16 {
                if !int(p).gcd(&int(q)).is_one() {
                    continue;
                }
                let m = int(p * q - 1);
                let c = classify_mpqm(&int(p), &int(q), &m).unwrap();
                match c.manifold {
                    Manifold::Seifert(s) => {
                        assert_eq!(s.fibers()[0], (int(1), int(2)));
                        assert!(s.lens_from_two_fibers().is_ok());
                    }
                    _ => panic!("expected a fibered manifold"),
                }
            }
        }
    }
}
