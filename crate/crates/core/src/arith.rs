//! Arbitrary-precision integer and exact rational arithmetic, plus the
//! number-theoretic and matrix primitives the rest of the crate consumes.
//!
//! Everything here is exact. Rationals are normalized at construction
//! (lowest terms, positive denominator), so equality is structural.

// index loops mirror the row/column operations of the elimination algorithms
#![allow(clippy::needless_range_loop)]

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small integers.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(int(num), int(den))
}

/// Rational with denominator 1.
pub fn rat_int(v: &Integer) -> Rational {
    Rational::from_integer(v.clone())
}

/// Reciprocal of an integer as a rational; errors on zero.
pub fn recip(v: &Integer) -> Result<Rational> {
    if v.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(Integer::one(), v.clone()))
}

/// Extended Euclidean algorithm.
///
/// Returns `(g, x, y)` with `g = gcd(|a|, |b|) > 0` and `a*x + b*y = g`.
pub fn egcd(a: &Integer, b: &Integer) -> Result<(Integer, Integer, Integer)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (Integer::one(), Integer::zero());
    let (mut y0, mut y1) = (Integer::zero(), Integer::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let x = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x);
        let y = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y);
    }
    if r0.is_negative() {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    Ok((r0, x0, y0))
}

/// Inverse of `a` modulo `n >= 2`, as the representative in `(0, n)`.
///
/// Returns `None` exactly when `gcd(a, n) != 1`.
pub fn mod_inverse(a: &Integer, n: &Integer) -> Result<Option<Integer>> {
    if *n < int(2) {
        return Err(Error::ModulusTooSmall);
    }
    let (g, x, _) = egcd(a, n)?;
    if !g.is_one() {
        return Ok(None);
    }
    Ok(Some(x.mod_floor(n)))
}

/// Negative (Hirzebruch-Jung) continued fraction expansion.
///
/// For coprime `num > den >= 1` returns `[a_1, ..., a_k]`, all `a_i >= 2`,
/// with `num/den = a_1 - 1/(a_2 - 1/(... - 1/a_k))`.
pub fn neg_cf(num: &Integer, den: &Integer) -> Result<Vec<Integer>> {
    if !(num > den && den >= &Integer::one()) || !num.gcd(den).is_one() {
        return Err(Error::ContinuedFractionInput);
    }
    let mut out = Vec::new();
    let (mut n, mut d) = (num.clone(), den.clone());
    loop {
        let a = n.div_ceil(&d);
        let r = &a * &d - &n;
        out.push(a);
        if r.is_zero() {
            return Ok(out);
        }
        n = std::mem::replace(&mut d, r);
    }
}

/// Evaluates `a_1 - 1/(a_2 - 1/(... - 1/a_k))` exactly.
pub fn eval_neg_cf(seq: &[Integer]) -> Result<Rational> {
    let (num, den) = continuant_pair(seq);
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Continuant pair `(K(a_1..a_k), K(a_2..a_k))` of the recurrence
/// `K(a_i..a_k) = a_i * K(a_{i+1}..a_k) - K(a_{i+2}..a_k)`, `K() = 1`.
///
/// The fraction `K(a_1..a_k)/K(a_2..a_k)` is the continued fraction value,
/// and the two entries are always coprime.
pub fn continuant_pair(seq: &[Integer]) -> (Integer, Integer) {
    let mut k2 = Integer::zero();
    let mut k1 = Integer::one();
    for a in seq.iter().rev() {
        let k0 = a * &k1 - &k2;
        k2 = std::mem::replace(&mut k1, k0);
    }
    (k1, k2)
}

/// Rectangular matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Integer>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::MatrixShape("dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::MatrixShape("entry count does not match dimensions"));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("rows have unequal lengths"));
        }
        let data = rows.iter().flatten().map(|&v| int(v)).collect();
        IntMatrix::new(r, c, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        IntMatrix::new(rows, cols, vec![Integer::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, Integer::one());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Integer {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Integer) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape("inner dimensions do not match"));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Integer> {
        if !self.is_square() {
            return Err(Error::NonSquare);
        }
        let n = self.rows;
        let mut m: Vec<Vec<Integer>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = 1i8;
        let mut prev = Integer::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Integer::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = Integer::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Decides negative definiteness of a symmetric matrix exactly, via the
    /// signs of the leading principal minors. A zero leading minor already
    /// rules out strict definiteness.
    pub fn is_negative_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        let n = self.rows;
        let mut m: Vec<Vec<Integer>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut prev = Integer::one();
        for k in 0..n {
            // pivot after k fraction-free steps equals the (k+1)-st leading minor
            if m[k][k].is_zero() {
                return Ok(false);
            }
            let want_negative = k % 2 == 0;
            if m[k][k].is_negative() != want_negative {
                return Ok(false);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = Integer::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(true)
    }

    /// Elementary divisors `d_1 | d_2 | ...` of the Smith normal form,
    /// nonnegative, zeros last; the sequence has length `min(rows, cols)`.
    pub fn smith_elementary_divisors(&self) -> Vec<Integer> {
        if let Some(divs) = self.smith_divisors_i128() {
            return divs;
        }
        let (divs, _, _) = smith_bigint(self, false);
        divs
    }

    /// Smith normal form with unimodular transforms: returns `(d, p, q)`
    /// with `p * self * q` diagonal, diagonal entries `d`.
    pub fn smith_with_transforms(&self) -> (Vec<Integer>, IntMatrix, IntMatrix) {
        let (divs, p, q) = smith_bigint(self, true);
        (divs, p.expect("transform tracked"), q.expect("transform tracked"))
    }

    fn smith_divisors_i128(&self) -> Option<Vec<Integer>> {
        let mut m = Vec::with_capacity(self.data.len());
        for v in &self.data {
            m.push(i64::try_from(v).ok()? as i128);
        }
        smith_i128(&mut m, self.rows, self.cols).map(|d| d.into_iter().map(Integer::from).collect())
    }
}

/// Solves `Q x = a` exactly over the rationals for square nonsingular `Q`.
pub fn solve_rational(q: &IntMatrix, a: &[Rational]) -> Result<Vec<Rational>> {
    if !q.is_square() {
        return Err(Error::NonSquare);
    }
    let n = q.rows();
    if a.len() != n {
        return Err(Error::MatrixShape("right-hand side length mismatch"));
    }
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| rat_int(q.get(r, c)))
                .chain(std::iter::once(a[r].clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(k, pivot);
        let inv = m[k][k].clone();
        for j in k..=n {
            let v = &m[k][j] / &inv;
            m[k][j] = v;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in k..=n {
                let v = &m[i][j] - &f * &m[k][j];
                m[i][j] = v;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

// ---------------------------------------------------------------------------
// Smith normal form internals
// ---------------------------------------------------------------------------

// Fast path over i128; returns None if any intermediate overflows.
fn smith_i128(m: &mut [i128], rows: usize, cols: usize) -> Option<Vec<i128>> {
    let idx = |r: usize, c: usize| r * cols + c;
    let steps = rows.min(cols);
    for t in 0..steps {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    let v = m[idx(r, c)];
                    if v != 0 {
                        let better = match best {
                            None => true,
                            Some((br, bc)) => v.abs() < m[idx(br, bc)].abs(),
                        };
                        if better {
                            best = Some((r, c));
                        }
                    }
                }
            }
            let (pr, pc) = match best {
                Some(p) => p,
                None => break 'pivot, // submatrix is zero; remaining divisors are 0
            };
            if pr != t {
                for c in 0..cols {
                    m.swap(idx(t, c), idx(pr, c));
                }
            }
            if pc != t {
                for r in 0..rows {
                    m.swap(idx(r, t), idx(r, pc));
                }
            }
            if m[idx(t, t)] < 0 {
                for c in 0..cols {
                    m[idx(t, c)] = m[idx(t, c)].checked_neg()?;
                }
            }
            let mut dirty = false;
            for r in t + 1..rows {
                let v = m[idx(r, t)];
                if v != 0 {
                    let q = v / m[idx(t, t)];
                    if q != 0 {
                        for c in t..cols {
                            let s = q.checked_mul(m[idx(t, c)])?;
                            m[idx(r, c)] = m[idx(r, c)].checked_sub(s)?;
                        }
                    }
                    if m[idx(r, t)] != 0 {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                let v = m[idx(t, c)];
                if v != 0 {
                    let q = v / m[idx(t, t)];
                    if q != 0 {
                        for r in t..rows {
                            let s = q.checked_mul(m[idx(r, t)])?;
                            m[idx(r, c)] = m[idx(r, c)].checked_sub(s)?;
                        }
                    }
                    if m[idx(t, c)] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            let p = m[idx(t, t)];
            let mut fixed = true;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if m[idx(r, c)] % p != 0 {
                        for cc in 0..cols {
                            m[idx(t, cc)] = m[idx(t, cc)].checked_add(m[idx(r, cc)])?;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
    }
    Some((0..steps).map(|t| m[idx(t, t)]).collect())
}

struct SmithState {
    m: Vec<Vec<Integer>>,
    rows: usize,
    cols: usize,
    p: Option<Vec<Vec<Integer>>>,
    q: Option<Vec<Vec<Integer>>>,
}

impl SmithState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.m.swap(i, j);
        if let Some(p) = &mut self.p {
            p.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.m[r].swap(i, j);
        }
        if let Some(q) = &mut self.q {
            for r in 0..self.cols {
                q[r].swap(i, j);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.m[i] {
            *v = -std::mem::take(v);
        }
        if let Some(p) = &mut self.p {
            for v in &mut p[i] {
                *v = -std::mem::take(v);
            }
        }
    }

    // row_i += k * row_j
    fn add_row(&mut self, i: usize, j: usize, k: &Integer) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.m[i][c] + k * &self.m[j][c];
            self.m[i][c] = v;
        }
        if let Some(p) = &mut self.p {
            for c in 0..self.rows {
                let v = &p[i][c] + k * &p[j][c];
                p[i][c] = v;
            }
        }
    }

    // col_i += k * col_j
    fn add_col(&mut self, i: usize, j: usize, k: &Integer) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.m[r][i] + k * &self.m[r][j];
            self.m[r][i] = v;
        }
        if let Some(q) = &mut self.q {
            for r in 0..self.cols {
                let v = &q[r][i] + k * &q[r][j];
                q[r][i] = v;
            }
        }
    }
}

fn smith_bigint(
    a: &IntMatrix,
    track: bool,
) -> (Vec<Integer>, Option<IntMatrix>, Option<IntMatrix>) {
    let rows = a.rows();
    let cols = a.cols();
    let m: Vec<Vec<Integer>> = (0..rows)
        .map(|r| (0..cols).map(|c| a.get(r, c).clone()).collect())
        .collect();
    let eye = |n: usize| -> Vec<Vec<Integer>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Integer::one() } else { Integer::zero() })
                    .collect()
            })
            .collect()
    };
    let mut st = SmithState {
        m,
        rows,
        cols,
        p: track.then(|| eye(rows)),
        q: track.then(|| eye(cols)),
    };
    let steps = rows.min(cols);
    for t in 0..steps {
        'pivot: loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if !st.m[r][c].is_zero() {
                        let better = match best {
                            None => true,
                            Some((br, bc)) => st.m[r][c].abs() < st.m[br][bc].abs(),
                        };
                        if better {
                            best = Some((r, c));
                        }
                    }
                }
            }
            let (pr, pc) = match best {
                Some(p) => p,
                None => break 'pivot,
            };
            st.swap_rows(t, pr);
            st.swap_cols(t, pc);
            if st.m[t][t].is_negative() {
                st.negate_row(t);
            }
            let mut dirty = false;
            for r in t + 1..rows {
                if !st.m[r][t].is_zero() {
                    let q = -(&st.m[r][t] / &st.m[t][t]);
                    st.add_row(r, t, &q);
                    if !st.m[r][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                if !st.m[t][c].is_zero() {
                    let q = -(&st.m[t][c] / &st.m[t][t]);
                    st.add_col(c, t, &q);
                    if !st.m[t][c].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            let pivot = st.m[t][t].clone();
            let mut fixed = true;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(&st.m[r][c] % &pivot).is_zero() {
                        st.add_row(t, r, &Integer::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
    }
    let divisors: Vec<Integer> = (0..steps).map(|t| st.m[t][t].clone()).collect();
    let pack = |g: Vec<Vec<Integer>>, n: usize| {
        IntMatrix::new(n, n, g.into_iter().flatten().collect()).expect("square transform")
    };
    (
        divisors,
        st.p.map(|p| pack(p, rows)),
        st.q.map(|q| pack(q, cols)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn egcd_pinned() {
        let cases = [
            ((6, 4), (2, 1, -1)),
            ((13, 6), (1, 1, -2)),
            ((5, 0), (5, 1, 0)),
        ];
        for ((a, b), (g, x, y)) in cases {
            assert_eq!(egcd(&int(a), &int(b)).unwrap(), (int(g), int(x), int(y)));
        }
        assert!(matches!(egcd(&int(0), &int(0)), Err(Error::GcdOfZeros)));
    }

    #[test]
    fn mod_inverse_pinned() {
        assert_eq!(mod_inverse(&int(2), &int(13)).unwrap(), Some(int(7)));
        assert_eq!(mod_inverse(&int(1), &int(97)).unwrap(), Some(int(1)));
        assert_eq!(mod_inverse(&int(4), &int(6)).unwrap(), None);
        assert!(mod_inverse(&int(3), &int(1)).is_err());
    }

    #[test]
    fn mod_inverse_exhaustive_check() {
        // brute-force oracle on a small modulus
        let n = int(13);
        for a in 1..13 {
            let inv = mod_inverse(&int(a), &n).unwrap().unwrap();
            assert!(inv > Integer::zero() && inv < n);
            assert_eq!((int(a) * inv).mod_floor(&n), Integer::one());
        }
    }

    #[test]
    fn neg_cf_pinned() {
        assert_eq!(neg_cf(&int(3), &int(1)).unwrap(), vec![int(3)]);
        assert_eq!(
            neg_cf(&int(13), &int(6)).unwrap(),
            vec![int(3), int(2), int(2), int(2), int(2), int(2)]
        );
        assert_eq!(
            neg_cf(&int(25), &int(19)).unwrap(),
            vec![int(2), int(2), int(2), int(7)]
        );
        assert!(neg_cf(&int(4), &int(2)).is_err());
        assert!(neg_cf(&int(2), &int(3)).is_err());
    }

    #[test]
    fn smith_pinned() {
        let id = IntMatrix::identity(2).unwrap();
        assert_eq!(id.smith_elementary_divisors(), vec![int(1), int(1)]);
        let d = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]).unwrap();
        assert_eq!(d.smith_elementary_divisors(), vec![int(2), int(4)]);
        // presentation of the first homology of the base example manifold
        let m = IntMatrix::from_rows(&[
            vec![2, 0, 0, 1],
            vec![0, 2, 0, -1],
            vec![0, 0, 2, -1],
            vec![1, 1, 1, 0],
        ])
        .unwrap();
        assert_eq!(
            m.smith_elementary_divisors(),
            vec![int(1), int(1), int(2), int(2)]
        );
    }

    #[test]
    fn determinant_pinned() {
        let m = IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(3));
        let z = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(z.determinant().unwrap(), int(0));
    }

    #[test]
    fn negative_definiteness() {
        let m = IntMatrix::from_rows(&[vec![-2, 0], vec![0, -2]]).unwrap();
        assert!(m.is_negative_definite().unwrap());
        let m = IntMatrix::from_rows(&[vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(!m.is_negative_definite().unwrap());
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!m.is_negative_definite().unwrap());
    }

    #[test]
    fn solve_rational_pinned() {
        let q = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let a = vec![rat(3, 1), rat(2, 1)];
        assert_eq!(solve_rational(&q, &a).unwrap(), vec![rat(1, 1), rat(1, 1)]);
        let s = IntMatrix::from_rows(&[vec![1, 1], vec![2, 2]]).unwrap();
        assert!(solve_rational(&s, &a).is_err());
    }

    proptest! {
        #[test]
        fn egcd_identity(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(a != 0 || b != 0);
            let (g, x, y) = egcd(&int(a), &int(b)).unwrap();
            prop_assert!(g > Integer::zero());
            prop_assert_eq!(&int(a) * &x + &int(b) * &y, g.clone());
            prop_assert!((int(a) % &g).is_zero() && (int(b) % &g).is_zero());
        }

        #[test]
        fn mod_inverse_iff_coprime(a in 0i64..500, n in 2i64..300) {
            let inv = mod_inverse(&int(a), &int(n)).unwrap();
            let coprime = int(a).gcd(&int(n)).is_one();
            prop_assert_eq!(inv.is_some(), coprime);
            if let Some(x) = inv {
                prop_assert_eq!((int(a) * x).mod_floor(&int(n)), Integer::one());
            }
        }

        #[test]
        fn neg_cf_round_trip(num in 2i64..2_000, den in 1i64..2_000) {
            prop_assume!(num > den && int(num).gcd(&int(den)).is_one());
            let seq = neg_cf(&int(num), &int(den)).unwrap();
            prop_assert!(seq.iter().all(|a| *a >= int(2)));
            prop_assert_eq!(eval_neg_cf(&seq).unwrap(), rat(num, den));
        }

        #[test]
        fn smith_chain_and_determinant(entries in proptest::collection::vec(-9i64..9, 16)) {
            let m = IntMatrix::new(4, 4, entries.iter().map(|&v| int(v)).collect()).unwrap();
            let divs = m.smith_elementary_divisors();
            prop_assert_eq!(divs.len(), 4);
            let mut seen_zero = false;
            for w in divs.windows(2) {
                prop_assert!(!w[0].is_negative() && !w[1].is_negative());
                if w[0].is_zero() { seen_zero = true; }
                if seen_zero {
                    prop_assert!(w[1].is_zero());
                } else if !w[1].is_zero() {
                    prop_assert!((&w[1] % &w[0]).is_zero());
                }
            }
            let det = m.determinant().unwrap();
            if !det.is_zero() {
                let prod: Integer = divs.iter().product();
                prop_assert_eq!(prod, det.abs());
            }
        }

        #[test]
        fn smith_transforms_diagonalize(entries in proptest::collection::vec(-9i64..9, 12)) {
            let m = IntMatrix::new(3, 4, entries.iter().map(|&v| int(v)).collect()).unwrap();
            let (divs, p, q) = m.smith_with_transforms();
            prop_assert_eq!(p.determinant().unwrap().abs(), Integer::one());
            prop_assert_eq!(q.determinant().unwrap().abs(), Integer::one());
            let d = p.mul(&m).unwrap().mul(&q).unwrap();
            for r in 0..3 {
                for c in 0..4 {
                    let expect = if r == c { divs[r].clone() } else { Integer::zero() };
                    prop_assert_eq!(d.get(r, c).clone(), expect);
                }
            }
            // against the plain path
            prop_assert_eq!(divs, m.smith_elementary_divisors());
        }
    }
}
