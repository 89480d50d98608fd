//! Sparse bivariate polynomials with exact rational coefficients.
//!
//! The two trackers `x` and `y` record the Hodge indices `p` and `q` of a
//! Hodge–Poincaré polynomial. Terms are kept in graded-lexicographic order
//! (total degree first, then descending `x` exponent, so `x` prints before
//! `y`), which fixes both the leading term used by exact division and the
//! canonical text rendering.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exponent pair of a bivariate monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exp {
    pub p: u32,
    pub q: u32,
}

impl Exp {
    pub fn total(&self) -> u32 {
        self.p + self.q
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.q).cmp(&(other.total(), other.q))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse exact-coefficient polynomial in the trackers `x`, `y`.
///
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct BiPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, rational::int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The tracker `x`.
    pub fn x() -> Self {
        Self::monomial(1, 0, rational::int(1))
    }

    /// The tracker `y`.
    pub fn y() -> Self {
        Self::monomial(0, 1, rational::int(1))
    }

    /// `c * x^p * y^q`.
    pub fn monomial(p: u32, q: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp { p, q }, c);
        }
        Self { terms }
    }

    /// `x^p * y^q` with unit coefficient.
    pub fn unit_monomial(p: u32, q: u32) -> Self {
        Self::monomial(p, q, rational::int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^p * y^q` (zero when absent).
    pub fn coeff(&self, p: u32, q: u32) -> Rational {
        self.terms
            .get(&Exp { p, q })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Largest total degree among the terms; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Exp::total)
    }

    fn leading(&self) -> Option<(Exp, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn insert_add(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Drop every term of total degree above `max_total_degree`.
    pub fn truncate_total_degree(&self, max_total_degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() <= max_total_degree)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / den`, or [`Error::NotDivisible`].
    ///
    /// Leading-term elimination in graded-lex order; fails fast on the first
    /// leading term the divisor's leading term does not divide. A failure is
    /// a bug signal upstream, never a numerical event.
    pub fn exact_div(&self, den: &BiPoly) -> Result<BiPoly> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let (de, dc) = den.leading().expect("nonzero divisor has a leading term");
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((re, rc)) = rem.leading() {
            if re.p < de.p || re.q < de.q {
                return Err(Error::NotDivisible { p: re.p, q: re.q });
            }
            let e = Exp {
                p: re.p - de.p,
                q: re.q - de.q,
            };
            let c = rc / &dc;
            // rem -= c * x^e * den, cancelling the leading term exactly.
            for (fe, fc) in den.terms.iter() {
                rem.insert_add(
                    Exp {
                        p: fe.p + e.p,
                        q: fe.q + e.q,
                    },
                    -(fc * &c),
                );
            }
            quot.insert_add(e, c);
        }
        Ok(quot)
    }

    /// Specialize `x = y = t`: the coefficient of `t^n` is the sum of the
    /// coefficients in total degree `n`.
    pub fn diagonal(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            out.insert_add(e.total(), c.clone());
        }
        out
    }

    /// Swap the trackers; a Hodge-symmetric polynomial is a fixed point.
    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp { p: e.q, q: e.p }, c.clone()))
                .collect(),
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: Self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.insert_add(
                    Exp {
                        p: a.p + b.p,
                        q: a.q + b.q,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

/// Canonical rendering: terms ascending by (total degree, p), coefficients as
/// integers or `a/b`, unit coefficients and unit exponents elided.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if e.p == 1 {
                factors.push("x".to_string());
            } else if e.p > 1 {
                factors.push(format!("x^{}", e.p));
            }
            if e.q == 1 {
                factors.push("y".to_string());
            } else if e.q > 1 {
                factors.push(format!("y^{}", e.q));
            }
            if factors.is_empty() {
                write!(f, "{}", rational::render(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::render(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Univariate polynomial in the diagonal tracker `t`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(n: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        Self { coeffs }
    }

    /// Build from integer coefficients listed by ascending exponent.
    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (n, &c) in cs.iter().enumerate() {
            out.insert_add(n as u32, rational::int(c));
        }
        out
    }

    fn insert_add(&mut self, n: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(n) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: u32) -> Rational {
        self.coeffs.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: Self) -> UniPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.insert_add(*n, c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: Self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                out.insert_add(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let var = match n {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            if var.is_empty() {
                write!(f, "{}", rational::render(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else if abs.is_integer() {
                write!(f, "{}{var}", rational::render(&abs))?;
            } else {
                write!(f, "{}*{var}", rational::render(&abs))?;
            }
        }
        Ok(())
    }
}

/// Rational function with the fixed denominator `(1 - xy)(1 - x^2 y^2)`.
///
/// The denominator is never materialized as a general divisor: the only
/// permitted eliminations are exact division and truncated series expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructuredRatFun {
    numerator: BiPoly,
}

impl StructuredRatFun {
    pub fn new(numerator: BiPoly) -> Self {
        Self { numerator }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    /// `(1 - xy)(1 - x^2 y^2)`, the shared denominator of the closed forms.
    pub fn denominator() -> BiPoly {
        let one = BiPoly::one();
        let xy = BiPoly::unit_monomial(1, 1);
        let x2y2 = BiPoly::unit_monomial(2, 2);
        &(&one - &xy) * &(&one - &x2y2)
    }

    /// The exact polynomial quotient; `NotDivisible` signals a wrongly
    /// assembled numerator.
    pub fn exact(&self) -> Result<BiPoly> {
        self.numerator.exact_div(&Self::denominator())
    }

    /// Series expansion of the quotient up to the given total degree,
    /// via the truncated geometric series of both denominator factors.
    pub fn expand_truncated(&self, max_total_degree: u32) -> BiPoly {
        let d = max_total_degree;
        let mut geo1 = BiPoly::zero();
        let mut k = 0;
        while 2 * k <= d {
            geo1 = &geo1 + &BiPoly::unit_monomial(k, k);
            k += 1;
        }
        let mut geo2 = BiPoly::zero();
        let mut j = 0;
        while 4 * j <= d {
            geo2 = &geo2 + &BiPoly::unit_monomial(2 * j, 2 * j);
            j += 1;
        }
        let prod = &(&self.numerator * &geo1) * &geo2;
        prod.truncate_total_degree(d)
    }
}
