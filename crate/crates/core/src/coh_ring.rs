//! Exact arithmetic in the integral cohomology ring of a Bott tower:
//!
//! ```text
//! Z[x_0, ..., x_{n-1}] / (x_j^2 + x_j h_j),   h_j = sum_{k<j} a_{jk} x_k
//! ```
//!
//! Every element is stored in normal form on the basis of squarefree
//! monomials. Generator indices are 0-based in the API; the text form
//! prints them 1-based (`x1` is generator 0).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported number of generators; a monomial is a 64-bit subset.
pub const MAX_GENERATORS: usize = 64;

/// A squarefree monomial, stored as the bit set of its generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The monomial `x_i`. Panics if `i >= MAX_GENERATORS`.
    pub fn generator(i: usize) -> Self {
        assert!(i < MAX_GENERATORS, "generator index {i} out of range");
        Monomial(1 << i)
    }

    /// Product of distinct generators; `None` if an index repeats or is too large.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Option<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i >= MAX_GENERATORS || bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Monomial(bits))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GENERATORS && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        Monomial(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Monomial(self.0 & !(1 << i))
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }
}

/// Degree first, then lexicographic on the ascending index list.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial with arbitrary exponents, the input to [`RingPresentation::reduce`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RawMonomial {
    exponents: Vec<u32>,
}

impl RawMonomial {
    pub fn from_exponents(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        RawMonomial { exponents }
    }

    /// Product of the listed generators, with repetition.
    pub fn from_factors(factors: &[usize]) -> Self {
        let mut exponents = Vec::new();
        for &i in factors {
            if exponents.len() <= i {
                exponents.resize(i + 1, 0);
            }
            exponents[i] += 1;
        }
        RawMonomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// An element of the ring in normal form: a map from squarefree monomials to
/// nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    terms: BTreeMap<Monomial, BigInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        RingElement::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        RingElement::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut e = RingElement::zero();
        e.add_term(m, c.into());
        e
    }

    /// The generator `x_i`.
    pub fn generator(i: usize) -> Self {
        RingElement::term(Monomial::generator(i), 1)
    }

    /// The linear form `sum_k coeffs[k] * x_k`.
    pub fn linear(coeffs: &[BigInt]) -> Self {
        let mut e = RingElement::zero();
        for (k, c) in coeffs.iter().enumerate() {
            e.add_term(Monomial::generator(k), c.clone());
        }
        e
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut e = RingElement::zero();
        for (m, c) in terms {
            e.add_term(m, c.into());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in serialization order: by degree, then lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &RingElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (m, d) in other.terms() {
            self.add_term(m, d * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        let mut e = RingElement::zero();
        e.add_scaled(self, c);
        e
    }

    /// Largest generator index that occurs, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.max_index()).max()
    }

    /// The homogeneous part made of monomials with exactly `k` generators.
    pub fn graded_component(&self, k: usize) -> RingElement {
        RingElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// True when every term has degree exactly one.
    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficient of `x_k` for `k < n`.
    pub fn linear_coefficients(&self, n: usize) -> Vec<BigInt> {
        (0..n)
            .map(|k| self.coefficient(Monomial::generator(k)))
            .collect()
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        for (m, c) in rhs.terms() {
            self.add_term(m, c.clone());
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        let mut e = self.clone();
        e += rhs;
        e
    }
}

impl Add for RingElement {
    type Output = RingElement;

    fn add(mut self, rhs: RingElement) -> RingElement {
        self += &rhs;
        self
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        let mut e = self.clone();
        e.add_scaled(rhs, &BigInt::from(-1));
        e
    }
}

impl Sub for RingElement {
    type Output = RingElement;

    fn sub(self, rhs: RingElement) -> RingElement {
        &self - &rhs
    }
}

/// The relations `x_j^2 = -x_j h_j` of a ring on `n` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    // rows[j][k] = a_{jk}, k < j
    rows: Vec<Vec<BigInt>>,
}

impl RingPresentation {
    /// The presentation with all `h_j = 0`, i.e. the ring of `(P^1)^n`.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::from_rows((0..n).map(|j| vec![BigInt::zero(); j]).collect())
    }

    /// Build from the strictly lower-triangular coefficient rows; `rows[j]`
    /// must have exactly `j` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if rows.len() > MAX_GENERATORS {
            return Err(Error::DimensionTooLarge {
                n: rows.len(),
                max: MAX_GENERATORS,
            });
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j {
                return Err(Error::InvalidPresentation(format!(
                    "row {} has {} entries, expected {}",
                    j + 1,
                    row.len(),
                    j
                )));
            }
        }
        Ok(RingPresentation { rows })
    }

    /// Build from the twisting classes `h_j`, each linear in `x_0..x_{j-1}`.
    pub fn new(h: Vec<RingElement>) -> Result<Self> {
        let mut rows = Vec::with_capacity(h.len());
        for (j, hj) in h.iter().enumerate() {
            if !hj.is_linear() {
                return Err(Error::InvalidPresentation(format!(
                    "h{} is not linear",
                    j + 1
                )));
            }
            if let Some(k) = hj.max_index() {
                if k >= j {
                    return Err(Error::InvalidPresentation(format!(
                        "h{} involves x{}",
                        j + 1,
                        k + 1
                    )));
                }
            }
            rows.push(hj.linear_coefficients(j));
        }
        Self::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `a_{jk}` for `k < j`.
    pub fn coefficient(&self, j: usize, k: usize) -> &BigInt {
        &self.rows[j][k]
    }

    /// The twisting class `h_j`.
    pub fn h(&self, j: usize) -> RingElement {
        RingElement::linear(&self.rows[j])
    }

    pub fn generator(&self, j: usize) -> Result<RingElement> {
        self.check_index(j)?;
        Ok(RingElement::generator(j))
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.n() {
            Err(Error::PresentationMismatch {
                index: j,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Fails if `e` mentions a generator outside this presentation.
    pub fn check(&self, e: &RingElement) -> Result<()> {
        match e.max_index() {
            Some(k) => self.check_index(k),
            None => Ok(()),
        }
    }

    /// Normal form of an arbitrary polynomial. Squares are eliminated
    /// highest index first via `x_j^2 -> -x_j h_j`; since `h_j` only involves
    /// lower generators this terminates.
    pub fn reduce<I>(&self, raw: I) -> Result<RingElement>
    where
        I: IntoIterator<Item = (RawMonomial, BigInt)>,
    {
        let mut pending: HashMap<RawMonomial, BigInt> = HashMap::new();
        for (m, c) in raw {
            if let Some(k) = m.exponents().iter().rposition(|&e| e > 0) {
                self.check_index(k)?;
            }
            *pending.entry(m).or_default() += c;
        }
        let mut out = RingElement::zero();
        while !pending.is_empty() {
            let mut next: HashMap<RawMonomial, BigInt> = HashMap::new();
            for (m, c) in pending {
                if c.is_zero() {
                    continue;
                }
                let squared = m.exponents().iter().rposition(|&e| e >= 2);
                let Some(j) = squared else {
                    let sq = Monomial::from_indices(
                        m.exponents()
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e == 1)
                            .map(|(i, _)| i),
                    )
                    .expect("squarefree monomial within range");
                    out.add_term(sq, c);
                    continue;
                };
                // x_j^2 * rest -> -sum_k a_{jk} x_j x_k * rest
                let mut base = m.exponents().to_vec();
                base[j] -= 1;
                for (k, a) in self.rows[j].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut e = base.clone();
                    e[k] += 1;
                    *next.entry(RawMonomial::from_exponents(e)).or_default() -= a * &c;
                }
            }
            pending = next;
        }
        Ok(out)
    }

    /// `x_j * m` in normal form.
    fn monomial_times_generator(
        &self,
        m: Monomial,
        j: usize,
        cache: &mut HashMap<(Monomial, usize), RingElement>,
    ) -> RingElement {
        if !m.contains(j) {
            return RingElement::term(m.with(j), 1);
        }
        if let Some(hit) = cache.get(&(m, j)) {
            return hit.clone();
        }
        // x_j * (x_j * m') = -h_j * (x_j * m') = -sum_k a_{jk} x_k * m
        let mut out = RingElement::zero();
        for (k, a) in self.rows[j].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let part = self.monomial_times_generator(m, k, cache);
            out.add_scaled(&part, &-a);
        }
        cache.insert((m, j), out.clone());
        out
    }

    fn times_generator(
        &self,
        e: &RingElement,
        j: usize,
        cache: &mut HashMap<(Monomial, usize), RingElement>,
    ) -> RingElement {
        let mut out = RingElement::zero();
        for (m, c) in e.terms() {
            if !m.contains(j) {
                out.add_term(m.with(j), c.clone());
            } else {
                out.add_scaled(&self.monomial_times_generator(m, j, cache), c);
            }
        }
        out
    }

    /// `x_j * e` in normal form.
    pub fn mul_generator(&self, e: &RingElement, j: usize) -> Result<RingElement> {
        self.check_index(j)?;
        self.check(e)?;
        Ok(self.times_generator(e, j, &mut HashMap::new()))
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let mut cache = HashMap::new();
        let mut out = RingElement::zero();
        for (mb, cb) in b.terms() {
            let mut part = a.clone();
            for j in mb.indices() {
                part = self.times_generator(&part, j, &mut cache);
                if part.is_zero() {
                    break;
                }
            }
            out.add_scaled(&part, cb);
        }
        Ok(out)
    }

    /// Total Chern class `prod_j (1 + 2 x_j + h_j)`.
    pub fn total_chern(&self) -> RingElement {
        let two = BigInt::from(2);
        let mut c = RingElement::one();
        for j in 0..self.n() {
            let mut factor = RingElement::one();
            factor.add_term(Monomial::generator(j), two.clone());
            factor += &self.h(j);
            c = self
                .multiply(&c, &factor)
                .expect("factors lie in the presentation");
        }
        c
    }

    /// Whether every coefficient of `e` is even.
    pub fn is_even(e: &RingElement) -> bool {
        e.terms().all(|(_, c)| is_even(c))
    }
}

pub(crate) fn is_even(c: &BigInt) -> bool {
    (c % 2u32).is_zero()
}

/// Sum of absolute coefficients; handy for bounding growth in tests.
pub fn l1_norm(e: &RingElement) -> BigInt {
    e.terms().map(|(_, c)| c.abs()).sum()
}
