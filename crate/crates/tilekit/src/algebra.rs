//! Exact arithmetic: big rationals, sparse multivariate Laurent polynomials in
//! the variables `x_i`, `y_i`, `q`, `t`, and the `t`-Pochhammer symbol.
//!
//! Nothing in this module touches floating point. Every weight, generating
//! polynomial, and partition function in the crate is an exact polynomial
//! identity, so exact arithmetic is the only honest substrate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by `num_rational`).
pub type Rational = BigRational;

/// Builds the rational `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Raises a rational to an integer power, failing on `0^{-n}`.
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 {
        if base.is_zero() {
            return Err(Error::DivisionByZero("zero to a negative power".into()));
        }
        let inv = base.recip();
        Ok(pow_nonneg(&inv, exp.unsigned_abs()))
    } else {
        Ok(pow_nonneg(base, exp as u64))
    }
}

fn pow_nonneg(base: &Rational, mut exp: u64) -> Rational {
    let mut acc = Rational::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Variable families, ordered so that canonical output lists `x` before `y`
/// before `q` before `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
    Q,
    T,
}

/// An interned variable: a family plus an index (`0` for the scalar families
/// `q` and `t`, `1..=m` for `x_i` and `y_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub const fn x(i: u32) -> Var {
        Var { family: Family::X, index: i }
    }
    pub const fn y(i: u32) -> Var {
        Var { family: Family::Y, index: i }
    }
    pub const fn q() -> Var {
        Var { family: Family::Q, index: 0 }
    }
    pub const fn t() -> Var {
        Var { family: Family::T, index: 0 }
    }

    /// Parses the text form produced by `Display` (`x3`, `y1`, `q`, `t`).
    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "q" => return Some(Var::q()),
            "t" => return Some(Var::t()),
            _ => {}
        }
        let (head, tail) = s.split_at(1);
        let index: u32 = tail.parse().ok()?;
        match head {
            "x" => Some(Var::x(index)),
            "y" => Some(Var::y(index)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x{}", self.index),
            Family::Y => write!(f, "y{}", self.index),
            Family::Q => write!(f, "q"),
            Family::T => write!(f, "t"),
        }
    }
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs with no zero
/// exponents stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    /// The monomial `v^e` (or `1` when `e == 0`).
    pub fn var_pow(v: Var, e: i64) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `v` (zero if absent).
    pub fn exponent(&self, v: Var) -> i64 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Sorted `(variable, exponent)` pairs.
    pub fn pairs(&self) -> &[(Var, i64)] {
        &self.0
    }

    /// Total degree (sum of exponents, may be negative).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((a, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self^e` for any integer `e` (monomials are invertible).
    pub fn pow(&self, e: i64) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, x)| (v, x * e)).collect())
    }

    /// Evaluates at an assignment.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational> {
        let mut acc = Rational::one();
        for &(v, e) in &self.0 {
            let val = assignment
                .get(&v)
                .ok_or_else(|| Error::UnassignedVariable(v.to_string()))?;
            acc *= rat_pow(val, e)?;
        }
        Ok(acc)
    }

    /// Sort key for canonical output: graded by total degree, then
    /// lexicographic by variable family and index (larger exponent on an
    /// earlier variable sorts later, so `x1` follows `x2` within a degree).
    fn canonical_key(&self) -> (i64, Vec<(Var, i64)>) {
        (self.degree(), self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A variable assignment for evaluation.
pub type Assignment = BTreeMap<Var, Rational>;

/// A sparse multivariate Laurent polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var_pow(v, 1), Rational::one())
    }

    /// The single term `c * m` (zero polynomial if `c == 0`).
    pub fn term(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// The monomial `m` with coefficient one.
    pub fn monomial(m: Monomial) -> Poly {
        Poly::term(m, Rational::one())
    }

    /// Builds a polynomial from `(monomial, integer count)` pairs, summing
    /// repeats.
    pub fn from_counts<I: IntoIterator<Item = (Monomial, u64)>>(counts: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in counts {
            p.add_term(m, Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Returns the single monomial if this polynomial is `c * m`.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// `self^e`; negative `e` is only allowed for single-term polynomials.
    pub fn pow(&self, e: i64) -> Result<Poly> {
        if e < 0 {
            let (m, c) = self.as_monomial().ok_or(Error::NegativePowerOfPolynomial)?;
            return Ok(Poly::term(m.pow(e), rat_pow(c, e)?));
        }
        let mut acc = Poly::one();
        let mut sq = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact evaluation; every variable must be assigned.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += m.evaluate(assignment)? * c;
        }
        Ok(acc)
    }

    /// Substitutes the assigned variables and keeps the others symbolic.
    pub fn specialize(&self, assignment: &Assignment) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match assignment.get(&v) {
                    Some(val) => coeff *= rat_pow(val, e)?,
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        Ok(out)
    }

    /// Multiplies every term by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// For a polynomial in the single variable `v` with nonnegative
    /// exponents, returns the dense coefficient list (constant term first).
    /// Returns `None` if any other variable or a negative power appears.
    pub fn univariate_coefficients(&self, v: Var) -> Option<Vec<Rational>> {
        let mut out: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let e = match m.pairs() {
                [] => 0,
                [(w, e)] if *w == v && *e >= 0 => *e as usize,
                _ => return None,
            };
            if out.len() <= e {
                out.resize(e + 1, Rational::zero());
            }
            out[e] = c.clone();
        }
        Some(out)
    }

    /// Builds `Σ c_i v^i` from a dense coefficient list.
    pub fn from_univariate(v: Var, coeffs: &[Rational]) -> Poly {
        let mut p = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var_pow(v, i as i64), c.clone());
        }
        p
    }

    /// Terms in canonical order (graded, then lexicographic by family/index).
    pub fn canonical_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| m.canonical_key());
        v
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, e.g. `1 + 2*t + t^2` or `-1/2*x1*y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, rhs: &Poly) {
        *self = &*self * rhs;
    }
}

/// The `t`-Pochhammer symbol `(x;t)_n = ∏_{i=0}^{n-1} (1 - x t^i)`.
pub fn pochhammer(x: &Rational, t: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut tp = Rational::one();
    for _ in 0..n {
        acc *= Rational::one() - x * &tp;
        tp *= t;
    }
    acc
}

/// `∏_{ℓ=0}^{k-1} ∏_{1≤i≤j≤m} (1 + t^ℓ x_i y_j)`, the closed form of the
/// Aztec-diamond generating polynomial.
pub fn aztec_product(m: u32, k: u32) -> Poly {
    let mut acc = Poly::one();
    for l in 0..k {
        for i in 1..=m {
            for j in i..=m {
                let mono = Monomial::from_pairs([(Var::x(i), 1), (Var::y(j), 1), (Var::t(), l as i64)]);
                let factor = &Poly::one() + &Poly::monomial(mono);
                acc = &acc * &factor;
            }
        }
    }
    acc
}

/// The all-ones assignment for `x_1..x_m, y_1..y_m` (and `q`), leaving `t`
/// symbolic when passed to [`Poly::specialize`].
pub fn all_ones(m: u32) -> Assignment {
    let mut a = Assignment::new();
    for i in 1..=m {
        a.insert(Var::x(i), Rational::one());
        a.insert(Var::y(i), Rational::one());
    }
    a.insert(Var::q(), Rational::one());
    a
}

/// Writes a univariate polynomial in `t` as `c*(1+t^a)^e*...` when it
/// factors completely into a constant times powers of `1 + t^ℓ` (ℓ ≥ 1).
/// Returns `None` otherwise. Used for the compact CLI rendering of
/// all-ones specializations such as `8*(1+t)^3`.
pub fn factor_binomial_product(p: &Poly) -> Option<String> {
    let mut coeffs = p.univariate_coefficients(Var::t())?;
    if coeffs.is_empty() {
        return None;
    }
    let mut factors: Vec<(usize, u32)> = Vec::new();
    let mut l = 1;
    while coeffs.len() > 1 {
        if l >= coeffs.len() {
            return None;
        }
        let mut count = 0;
        while let Some(q) = divide_by_one_plus_t_pow(&coeffs, l) {
            coeffs = q;
            count += 1;
        }
        if count > 0 {
            factors.push((l, count));
        }
        l += 1;
    }
    let c = &coeffs[0];
    let mut s = c.to_string();
    for (l, e) in factors {
        let base = if l == 1 { "(1+t)".to_string() } else { format!("(1+t^{l})") };
        if e == 1 {
            s.push_str(&format!("*{base}"));
        } else {
            s.push_str(&format!("*{base}^{e}"));
        }
    }
    Some(s)
}

fn divide_by_one_plus_t_pow(coeffs: &[Rational], l: usize) -> Option<Vec<Rational>> {
    if coeffs.len() <= l {
        return None;
    }
    let n = coeffs.len() - 1;
    let mut rem: Vec<Rational> = coeffs.to_vec();
    let mut quot = vec![Rational::zero(); n - l + 1];
    for d in (l..=n).rev() {
        let c = rem[d].clone();
        if c.is_zero() {
            continue;
        }
        quot[d - l] = c.clone();
        rem[d] -= &c;
        rem[d - l] -= &c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

/// Converts a rational to `f64` (for statistics and geometry only).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
