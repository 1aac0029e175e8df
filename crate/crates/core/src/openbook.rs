//! Rational open books with periodic monodromy on Seifert manifolds:
//! feasibility of the isotropy weights, the monodromy-to-Seifert
//! dictionary, construction with prescribed binding data, multiplicities,
//! page topology, and the combinatorial type of the supported invariant
//! contact structure.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, mod_inverse, rat_int, Integer, Rational};
use crate::seifert::SeifertData;
use crate::{Error, Result};

/// One binding component of an open-book specification: its fiber pair,
/// the isotropy weight `c` at the binding's base point, and the integer
/// share `b` of the background twisting assigned to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingSpec {
    pub pair: (Integer, Integer),
    pub c: Integer,
    pub b: Integer,
}

/// Full specification of an open book on the Seifert manifold whose fibers
/// are the bindings together with the interior fibers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBookSpec {
    pub genus: u32,
    /// Interior fibers `(alpha_j, beta_j)` with `0 < beta_j < alpha_j`.
    pub interior: Vec<(Integer, Integer)>,
    pub bindings: Vec<BindingSpec>,
    /// Monodromy order; a common multiple of the interior multiplicities.
    pub n: Integer,
}

impl OpenBookSpec {
    pub fn validate(&self) -> Result<()> {
        if self.bindings.is_empty() {
            return Err(Error::InvalidOpenBook("at least one binding is required".into()));
        }
        if !self.n.is_positive() {
            return Err(Error::InvalidOpenBook("monodromy order must be positive".into()));
        }
        for (a, b) in &self.interior {
            if !(a >= &int(2) && b > &Integer::zero() && b < a) {
                return Err(Error::InvalidOpenBook(format!(
                    "interior fiber ({a}, {b}) must satisfy 0 < beta < alpha"
                )));
            }
            if !a.gcd(b).is_one() {
                return Err(Error::InvalidOpenBook(format!(
                    "interior fiber ({a}, {b}) not coprime"
                )));
            }
            if !(&self.n % a).is_zero() {
                return Err(Error::InvalidOpenBook(format!(
                    "order {} is not a multiple of interior multiplicity {a}",
                    self.n
                )));
            }
        }
        let mut sum = Rational::zero();
        for (a, b) in &self.interior {
            sum += Rational::new(b.clone(), a.clone());
        }
        for binding in &self.bindings {
            let (a, b) = &binding.pair;
            if a.is_zero() {
                if !b.is_one() {
                    return Err(Error::InvalidOpenBook(
                        "fixed-component binding must be (0, 1)".into(),
                    ));
                }
            } else if !a.gcd(b).is_one() {
                return Err(Error::InvalidOpenBook(format!("binding pair ({a}, {b}) not coprime")));
            }
            let c = &binding.c;
            if self.n.is_one() {
                if !c.is_zero() {
                    return Err(Error::InvalidOpenBook(
                        "order 1 requires a zero isotropy weight".into(),
                    ));
                }
            } else if !(c > &Integer::zero() && c < &self.n && self.n.gcd(c).is_one()) {
                return Err(Error::InvalidOpenBook(format!(
                    "weight {c} must lie in (0, {}) and be coprime to it",
                    self.n
                )));
            }
            sum += Rational::new(c.clone(), self.n.clone());
        }
        if !sum.denom().is_one() {
            return Err(Error::WeightCondition(format!(
                "interior slopes plus weights sum to {sum}, not an integer"
            )));
        }
        let b_total: Integer = self.bindings.iter().map(|b| b.b.clone()).sum();
        if rat_int(&b_total) != sum {
            return Err(Error::InvalidOpenBook(format!(
                "background shares sum to {b_total}, expected {sum}"
            )));
        }
        Ok(())
    }

    /// The Seifert manifold carrying the open book: bindings then interior.
    pub fn manifold(&self) -> Result<SeifertData> {
        let mut fibers: Vec<(Integer, Integer)> =
            self.bindings.iter().map(|b| b.pair.clone()).collect();
        fibers.extend(self.interior.iter().cloned());
        SeifertData::new(self.genus, fibers)
    }
}

/// Orientation of a binding relative to the circle orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    WithFiber,
    AgainstFiber,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::WithFiber => write!(f, "+"),
            Orientation::AgainstFiber => write!(f, "-"),
        }
    }
}

/// A binding component of a constructed rational open book.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBookBinding {
    /// The fiber pair as given in the specification.
    pub pair: (Integer, Integer),
    /// The pair in the signed convention consumed by handle attachment:
    /// negative `alpha` means the binding runs against the fiber.
    pub oriented: (Integer, Integer),
    /// Multiplicity of the page boundary around the binding; positive.
    pub multiplicity: Integer,
    /// `None` exactly for a fixed component.
    pub orientation: Option<Orientation>,
    pub(crate) c: Integer,
    pub(crate) b_share: Integer,
    pub(crate) p_signed: Integer,
    pub(crate) p_prime: Integer,
}

/// A rational open book with periodic monodromy, as constructed from an
/// [`OpenBookSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalOpenBook {
    pub spec: OpenBookSpec,
    pub bindings: Vec<OpenBookBinding>,
    /// Euler characteristic of a page.
    pub chi: Integer,
}

/// Contact type of the supported invariant contact structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContactType {
    Transverse,
    /// One dividing circle per listed binding index, each bounding a disk
    /// around that binding's base point.
    NonTransverse { dividing: Vec<usize> },
}

impl RationalOpenBook {
    pub fn order(&self) -> &Integer {
        &self.spec.n
    }

    /// Contact type per the orientation pattern. Requires a fixed-point
    /// free action whenever some binding runs against the fibers, since
    /// only then is the dividing-set description valid.
    pub fn contact_type(&self) -> Result<ContactType> {
        let dividing: Vec<usize> = self
            .bindings
            .iter()
            .enumerate()
            .filter(|(_, b)| b.orientation == Some(Orientation::AgainstFiber))
            .map(|(i, _)| i)
            .collect();
        if dividing.is_empty() {
            return Ok(ContactType::Transverse);
        }
        if self.bindings.iter().any(|b| b.orientation.is_none()) {
            return Err(Error::FixedComponent);
        }
        Ok(ContactType::NonTransverse { dividing })
    }

    /// The data a monodromy reconstruction consumes, one entry per binding.
    pub fn monodromy_bindings(&self) -> Vec<MonodromyBinding> {
        self.bindings
            .iter()
            .map(|b| MonodromyBinding {
                c: b.c.clone(),
                p: b.p_signed.clone(),
                p_prime: b.p_prime.clone(),
            })
            .collect()
    }
}

/// Searches integer weights `c_i` with `0 < c_i < n_i`, `gcd(n_i, c_i) = 1`
/// and `sum c_i/n_i` an integer; lexicographically first solution.
pub fn dagger_solve(orders: &[Integer]) -> Result<Option<Vec<Integer>>> {
    let mut iter = DaggerIter::new(orders)?;
    Ok(iter.next())
}

/// All solutions of the weight condition, in lexicographic order.
pub fn dagger_enumerate(orders: &[Integer]) -> Result<Vec<Vec<Integer>>> {
    Ok(DaggerIter::new(orders)?.collect())
}

struct DaggerIter {
    orders: Vec<Integer>,
    candidates: Vec<Vec<Integer>>,
    state: Vec<usize>,
    done: bool,
}

impl DaggerIter {
    fn new(orders: &[Integer]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::WeightCondition("no isotropy orders given".into()));
        }
        let mut candidates = Vec::with_capacity(orders.len());
        for n in orders {
            if n < &int(2) {
                return Err(Error::WeightCondition(format!("order {n} must be at least 2")));
            }
            let mut row = Vec::new();
            let mut c = Integer::one();
            while &c < n {
                if n.gcd(&c).is_one() {
                    row.push(c.clone());
                }
                c += 1;
            }
            candidates.push(row);
        }
        Ok(DaggerIter {
            orders: orders.to_vec(),
            candidates,
            state: vec![0; orders.len()],
            done: false,
        })
    }
}

impl Iterator for DaggerIter {
    type Item = Vec<Integer>;

    fn next(&mut self) -> Option<Vec<Integer>> {
        while !self.done {
            let pick: Vec<Integer> = self
                .state
                .iter()
                .zip(&self.candidates)
                .map(|(&i, row)| row[i].clone())
                .collect();
            // advance odometer
            let mut pos = self.state.len();
            loop {
                if pos == 0 {
                    self.done = true;
                    break;
                }
                pos -= 1;
                self.state[pos] += 1;
                if self.state[pos] < self.candidates[pos].len() {
                    break;
                }
                self.state[pos] = 0;
            }
            let mut sum = Rational::zero();
            for (c, n) in pick.iter().zip(&self.orders) {
                sum += Rational::new(c.clone(), n.clone());
            }
            if sum.denom().is_one() {
                return Some(pick);
            }
        }
        None
    }
}

/// Binding data for the monodromy-to-Seifert dictionary: the isotropy
/// weight at the binding point and the meridian coordinates `(p, p')`
/// (the signed `p` carries the binding orientation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyBinding {
    pub c: Integer,
    pub p: Integer,
    pub p_prime: Integer,
}

// k in [0, n) with k*c = -1 mod n, and l with n*l - k*c = 1.
fn solve_kl(n: &Integer, c: &Integer) -> Result<(Integer, Integer)> {
    if n.is_one() {
        return Ok((Integer::zero(), Integer::one()));
    }
    let inv = mod_inverse(c, n)?
        .ok_or_else(|| Error::WeightCondition(format!("gcd({n}, {c}) must be 1")))?;
    let k = (n - inv).mod_floor(n);
    let l = (Integer::one() + &k * c) / n;
    Ok((k, l))
}

/// Reconstructs the Seifert manifold carrying an open book of order `n`
/// with interior orbifold data `(n_j, c_j)` and the given binding data.
///
/// The result lists the background `(1, -b)` term first, then the interior
/// fibers, then one pair per binding; a binding whose pair degenerates
/// comes out as the fixed component `(0, 1)`.
pub fn monodromy_to_seifert(
    genus: u32,
    n: &Integer,
    interior: &[(Integer, Integer)],
    bindings: &[MonodromyBinding],
) -> Result<SeifertData> {
    if bindings.is_empty() {
        return Err(Error::InvalidOpenBook("at least one binding is required".into()));
    }
    if !n.is_positive() {
        return Err(Error::InvalidOpenBook("monodromy order must be positive".into()));
    }
    let mut b_sum = Rational::zero();
    for (nj, cj) in interior {
        if !(nj >= &int(2) && cj > &Integer::zero() && cj < nj && nj.gcd(cj).is_one()) {
            return Err(Error::WeightCondition(format!(
                "interior datum ({nj}, {cj}) must satisfy 0 < c < n with gcd 1"
            )));
        }
        b_sum += Rational::new(cj.clone(), nj.clone());
    }
    for binding in bindings {
        if n.is_one() {
            if !binding.c.is_zero() {
                return Err(Error::WeightCondition("order 1 requires weight 0".into()));
            }
        } else if !(binding.c > Integer::zero() && &binding.c < n && n.gcd(&binding.c).is_one()) {
            return Err(Error::WeightCondition(format!(
                "binding weight {} must lie in (0, {n}) with gcd 1",
                binding.c
            )));
        }
        if !binding.p.gcd(&binding.p_prime).is_one() {
            return Err(Error::WeightCondition(format!(
                "meridian coordinates ({}, {}) must be coprime",
                binding.p, binding.p_prime
            )));
        }
        b_sum += Rational::new(binding.c.clone(), n.clone());
    }
    if !b_sum.denom().is_one() {
        return Err(Error::WeightCondition(format!("weights sum to {b_sum}, not an integer")));
    }
    let b = b_sum.to_integer();

    let mut fibers = vec![(Integer::one(), -b)];
    fibers.extend(interior.iter().cloned());
    for binding in bindings {
        let (k, l) = solve_kl(n, &binding.c)?;
        let alpha = &k * &binding.p + n * &binding.p_prime;
        let beta = &l * &binding.p + &binding.c * &binding.p_prime;
        if alpha.is_zero() && !beta.is_one() {
            return Err(Error::InternalCheck(format!(
                "fixed-component binding produced beta = {beta}, expected 1"
            )));
        }
        fibers.push((alpha, beta));
    }
    SeifertData::new(genus, fibers)
}

/// Euler characteristic of a page: an `n`-fold cover of the base with
/// one boundary circle per binding, branched over the interior points of
/// the given multiplicities.
pub fn page_euler_char(
    n: &Integer,
    genus: u32,
    bindings: usize,
    interior_multiplicities: &[Integer],
) -> Result<Integer> {
    let constant = int(2) - int(2) * int(genus as i64)
        - int(bindings as i64)
        - int(interior_multiplicities.len() as i64);
    let mut chi = rat_int(n) * rat_int(&constant);
    for a in interior_multiplicities {
        if a.is_zero() {
            return Err(Error::ZeroAlphaFiber);
        }
        chi += Rational::new(n.clone(), a.clone());
    }
    if !chi.denom().is_one() {
        return Err(Error::NonIntegral(format!("page Euler characteristic {chi}")));
    }
    Ok(chi.to_integer())
}

/// Builds the rational open book described by a full specification.
///
/// Per binding, the signed multiplicity is `n beta + n alpha b - alpha c`;
/// its absolute value is the page multiplicity and its sign against the
/// sign of `alpha` gives the binding orientation.
pub fn open_book_multi(spec: OpenBookSpec) -> Result<RationalOpenBook> {
    spec.validate()?;
    let n = spec.n.clone();
    let mut bindings = Vec::with_capacity(spec.bindings.len());
    for binding in &spec.bindings {
        let (alpha, beta) = binding.pair.clone();
        let p_signed = &n * &beta + &n * &alpha * &binding.b - &alpha * &binding.c;
        if p_signed.is_zero() {
            return Err(Error::ZeroOrientationQuantity);
        }
        let orientation = if alpha.is_zero() {
            None
        } else if p_signed.is_positive() == alpha.is_positive() {
            Some(Orientation::WithFiber)
        } else {
            Some(Orientation::AgainstFiber)
        };
        // the sign of the oriented alpha records the binding orientation
        let oriented = match orientation {
            Some(Orientation::WithFiber) if alpha.is_negative() => (-&alpha, -&beta),
            Some(Orientation::AgainstFiber) if alpha.is_positive() => (-&alpha, -&beta),
            _ => (alpha.clone(), beta.clone()),
        };
        let (k, l) = solve_kl(&n, &binding.c)?;
        let beta_rel = &beta + &binding.b * &alpha;
        let p_prime = &l * &alpha - &k * &beta_rel;
        if &k * &p_signed + &n * &p_prime != alpha {
            return Err(Error::InternalCheck(
                "meridian coordinates do not reproduce the binding pair".into(),
            ));
        }
        bindings.push(OpenBookBinding {
            pair: binding.pair.clone(),
            oriented,
            multiplicity: p_signed.abs(),
            orientation,
            c: binding.c.clone(),
            b_share: binding.b.clone(),
            p_signed,
            p_prime,
        });
    }
    let interior_mults: Vec<Integer> = spec.interior.iter().map(|(a, _)| a.clone()).collect();
    let chi = page_euler_char(&n, spec.genus, spec.bindings.len(), &interior_mults)?;
    Ok(RationalOpenBook { spec, bindings, chi })
}

/// Feasibility data for a connected-binding open book on the manifold
/// split as one distinguished fiber plus normalized interior fibers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleResult {
    /// Least common multiple of the interior multiplicities: the only
    /// possible monodromy order.
    pub n: Integer,
    /// Numerator of the interior slope sum over `n`.
    pub m: Integer,
    /// The open book, present exactly when `gcd(n, m) = 1`.
    pub book: Option<RationalOpenBook>,
}

/// Decides whether the distinguished fiber can serve as the connected
/// binding of a rational open book with periodic monodromy, and builds the
/// book when it can.
pub fn open_book_single(
    genus: u32,
    pair: (Integer, Integer),
    interior: &[(Integer, Integer)],
) -> Result<SingleResult> {
    let (alpha, beta) = pair;
    let mut n = Integer::one();
    let mut slope_sum = Rational::zero();
    for (a, b) in interior {
        if !(a >= &int(2) && b > &Integer::zero() && b < a && a.gcd(b).is_one()) {
            return Err(Error::InvalidOpenBook(format!(
                "interior fiber ({a}, {b}) must satisfy 0 < beta < alpha"
            )));
        }
        n = n.lcm(a);
        slope_sum += Rational::new(b.clone(), a.clone());
    }
    if alpha.is_zero() && !beta.is_one() {
        return Err(Error::InvalidSeifert("fixed component must be (0, 1)".into()));
    }
    if !alpha.is_zero() && !alpha.gcd(&beta).is_one() {
        return Err(Error::InvalidSeifert(format!("pair ({alpha}, {beta}) is not coprime")));
    }
    let m = (&slope_sum * rat_int(&n)).to_integer();
    if !n.gcd(&m).is_one() {
        return Ok(SingleResult { n, m, book: None });
    }
    if !alpha.is_zero() {
        let e = -(Rational::new(beta.clone(), alpha.clone()) + &slope_sum);
        if e.is_zero() {
            return Err(Error::Precondition(
                "Euler number must be nonzero for a fibered binding".into(),
            ));
        }
    }
    let c = if n.is_one() { Integer::zero() } else { (-&m).mod_floor(&n) };
    let b = (rat_int(&m) + rat_int(&c)) / rat_int(&n);
    debug_assert!(b.denom().is_one());
    let spec = OpenBookSpec {
        genus,
        interior: interior.to_vec(),
        bindings: vec![BindingSpec { pair: (alpha, beta), c, b: b.to_integer() }],
        n: n.clone(),
    };
    let book = open_book_multi(spec)?;
    Ok(SingleResult { n, m, book: Some(book) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn spec(interior: &[(i64, i64)], bindings: &[((i64, i64), i64, i64)], n: i64) -> OpenBookSpec {
        OpenBookSpec {
            genus: 0,
            interior: interior.iter().map(|&(a, b)| (int(a), int(b))).collect(),
            bindings: bindings
                .iter()
                .map(|&((a, b), c, bb)| BindingSpec {
                    pair: (int(a), int(b)),
                    c: int(c),
                    b: int(bb),
                })
                .collect(),
            n: int(n),
        }
    }

    #[test]
    fn dagger_pinned() {
        assert_eq!(dagger_solve(&[int(2), int(2)]).unwrap(), Some(vec![int(1), int(1)]));
        assert_eq!(dagger_solve(&[int(2), int(2), int(2)]).unwrap(), None);
        assert_eq!(
            dagger_solve(&[int(2), int(3), int(6)]).unwrap(),
            Some(vec![int(1), int(1), int(1)])
        );
        assert!(dagger_solve(&[]).is_err());
    }

    #[test]
    fn dagger_enumeration_is_exhaustive() {
        let all = dagger_enumerate(&[int(2), int(3), int(6)]).unwrap();
        // brute force oracle
        let mut expect = Vec::new();
        for c2 in 1..2i64 {
            for c3 in 1..3i64 {
                if !int(c3).gcd(&int(3)).is_one() {
                    continue;
                }
                for c6 in 1..6i64 {
                    if !int(c6).gcd(&int(6)).is_one() {
                        continue;
                    }
                    let s = rat(c2, 2) + rat(c3, 3) + rat(c6, 6);
                    if s.denom().is_one() {
                        expect.push(vec![int(c2), int(c3), int(c6)]);
                    }
                }
            }
        }
        assert_eq!(all, expect);
    }

    #[test]
    fn monodromy_to_seifert_pinned() {
        // single binding of a torus-knot exterior fibration
        let out = monodromy_to_seifert(
            0,
            &int(6),
            &[(int(2), int(1)), (int(3), int(2))],
            &[MonodromyBinding { c: int(5), p: int(1), p_prime: int(0) }],
        )
        .unwrap();
        let expect = SeifertData::from_pairs(0, &[(1, -1), (2, 1), (3, 2)]).unwrap();
        assert!(out.same_seifert(&expect).unwrap());
        assert_eq!(out.euler_number().unwrap(), rat(-1, 6));

        // fixed-component binding: p = n, p' = -k
        let out = monodromy_to_seifert(
            0,
            &int(6),
            &[(int(2), int(1)), (int(3), int(2))],
            &[MonodromyBinding { c: int(5), p: int(6), p_prime: int(-1) }],
        )
        .unwrap();
        assert_eq!(out.fibers().last().unwrap(), &(int(0), int(1)));
    }

    #[test]
    fn euler_matches_multiplicity_formula() {
        let out = monodromy_to_seifert(
            0,
            &int(8),
            &[(int(2), int(1))],
            &[
                MonodromyBinding { c: int(7), p: int(61), p_prime: int(-7) },
                MonodromyBinding { c: int(5), p: int(1), p_prime: int(0) },
            ],
        )
        .unwrap();
        // e = -(1/n) sum p_i/alpha_i over the reconstructed binding pairs
        let fibers = out.fibers();
        let alpha1 = &fibers[2].0;
        let alpha2 = &fibers[3].0;
        let expect =
            -(Rational::new(int(61), alpha1 * int(8))) - Rational::new(int(1), alpha2 * int(8));
        assert_eq!(out.euler_number().unwrap(), expect);
    }

    #[test]
    fn open_book_multi_pinned() {
        // two-binding book on the quaternionic example manifold
        let book =
            open_book_multi(spec(&[(2, 1), (2, 1)], &[((-2, 1), 1, 0), ((1, -1), 1, 2)], 2))
                .unwrap();
        assert_eq!(book.bindings[0].multiplicity, int(4));
        assert_eq!(book.bindings[1].multiplicity, int(1));
        assert_eq!(book.bindings[0].orientation, Some(Orientation::AgainstFiber));
        assert_eq!(book.bindings[1].orientation, Some(Orientation::WithFiber));
        assert_eq!(book.bindings[0].oriented, (int(-2), int(1)));
        assert_eq!(book.bindings[1].oriented, (int(1), int(-1)));

        let book =
            open_book_multi(spec(&[(2, 1)], &[((13, 6), 7, 1), ((3, -1), 5, 1)], 8)).unwrap();
        assert_eq!(book.bindings[0].multiplicity, int(61));
        assert_eq!(book.bindings[1].multiplicity, int(1));
        assert_eq!(book.bindings[0].orientation, Some(Orientation::WithFiber));

        let book =
            open_book_multi(spec(&[(13, 7)], &[((1, 0), 51, 1), ((2, -1), 25, 1)], 52)).unwrap();
        assert_eq!(book.bindings[0].multiplicity, int(1));
        assert_eq!(book.bindings[1].multiplicity, int(2));
        assert_eq!(book.bindings[1].oriented, (int(2), int(-1)));
        assert_eq!(book.chi, int(-48));
    }

    #[test]
    fn open_book_single_pinned() {
        let r =
            open_book_single(0, (int(1), int(-1)), &[(int(2), int(1)), (int(3), int(2))]).unwrap();
        assert_eq!((r.n.clone(), r.m.clone()), (int(6), int(7)));
        let book = r.book.unwrap();
        assert_eq!(book.bindings[0].multiplicity, int(1));
        assert_eq!(book.bindings[0].orientation, Some(Orientation::WithFiber));

        let r =
            open_book_single(0, (int(-3), int(4)), &[(int(3), int(1)), (int(2), int(1))]).unwrap();
        assert_eq!(r.n, int(6));
        let book = r.book.unwrap();
        assert_eq!(book.bindings[0].multiplicity, int(9));
        assert_eq!(book.bindings[0].orientation, Some(Orientation::AgainstFiber));
        assert_eq!(book.bindings[0].oriented, (int(-3), int(4)));

        let r =
            open_book_single(0, (int(1), int(0)), &[(int(2), int(1)), (int(6), int(1))]).unwrap();
        assert_eq!((r.n, r.m), (int(6), int(4)));
        assert!(r.book.is_none());
    }

    #[test]
    fn page_euler_char_pinned() {
        assert_eq!(page_euler_char(&int(52), 0, 2, &[int(13)]).unwrap(), int(-48));
        assert_eq!(page_euler_char(&int(6), 0, 1, &[int(2), int(3)]).unwrap(), int(-1));
        assert_eq!(page_euler_char(&int(1), 0, 1, &[]).unwrap(), int(1));
    }

    #[test]
    fn contact_type_pinned() {
        let book =
            open_book_multi(spec(&[(13, 7)], &[((1, 0), 51, 1), ((2, -1), 25, 1)], 52)).unwrap();
        assert_eq!(book.contact_type().unwrap(), ContactType::Transverse);

        let book =
            open_book_multi(spec(&[(2, 1), (2, 1)], &[((-2, 1), 1, 0), ((1, -1), 1, 2)], 2))
                .unwrap();
        assert_eq!(
            book.contact_type().unwrap(),
            ContactType::NonTransverse { dividing: vec![0] }
        );
    }

    #[test]
    fn same_reversed_bindings_same_contact_type() {
        // two different open books on the same manifold, with the same
        // against-fiber binding, produce identical dividing data
        let delta = 7i64;
        let book1 = open_book_multi(spec(
            &[(4 * delta - 3, 3 * delta - 2)],
            &[((1, 0), 3 * delta - 2, 1), ((delta - 3, -(delta - 2)), 2 * delta - 2, 1)],
            4 * delta - 3,
        ))
        .unwrap();
        let book2 = open_book_multi(spec(
            &[(4 * delta - 3, 3 * delta - 2)],
            &[((1, 0), 5 * delta - 4, 1), ((delta - 3, -(delta - 2)), 5 * delta - 4, 1)],
            8 * delta - 6,
        ))
        .unwrap();
        assert!(book1
            .spec
            .manifold()
            .unwrap()
            .same_seifert(&book2.spec.manifold().unwrap())
            .unwrap());
        assert_eq!(book1.contact_type().unwrap(), book2.contact_type().unwrap());
    }

    #[test]
    fn round_trip_through_monodromy() {
        for s in [
            spec(&[(2, 1), (2, 1)], &[((-2, 1), 1, 0), ((1, -1), 1, 2)], 2),
            spec(&[(2, 1)], &[((13, 6), 7, 1), ((3, -1), 5, 1)], 8),
            spec(&[(13, 7)], &[((1, 0), 51, 1), ((2, -1), 25, 1)], 52),
            spec(&[(2, 1)], &[((13, 6), 3, 1), ((1, 0), 3, 1)], 4),
        ] {
            let book = open_book_multi(s.clone()).unwrap();
            let rebuilt =
                monodromy_to_seifert(s.genus, &s.n, &s.interior, &book.monodromy_bindings())
                    .unwrap();
            assert!(rebuilt.same_seifert(&s.manifold().unwrap()).unwrap());
        }
    }

    #[test]
    fn multiplicity_magnitude_identity() {
        let book =
            open_book_multi(spec(&[(2, 1)], &[((13, 6), 7, 1), ((3, -1), 5, 1)], 8)).unwrap();
        for b in &book.bindings {
            let (alpha, beta) = &b.pair;
            let q = Rational::new(beta.clone(), alpha.clone()) + rat_int(&b.b_share)
                - Rational::new(b.c.clone(), book.spec.n.clone());
            let expect = (rat_int(&book.spec.n) * rat_int(&alpha.abs()) * q).numer().abs();
            assert_eq!(b.multiplicity, expect);
        }
    }
}
