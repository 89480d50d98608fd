//! The weighted commutative ring `Q[alpha, beta, gamma]` with
//! `deg(alpha, beta, gamma) = (2, 4, 6)`, the Zagier recursion producing the
//! Mumford relations, and exact degreewise Hilbert dimensions of the
//! quotients by the relation ideals.
//!
//! Dimensions are computed per degree by exact rank: enumerate the monomials
//! of that degree, span the relations landing there, and subtract the rank.
//! The ring has three variables and bounded degree, so no normal-form or
//! Gröbner machinery is needed. Degree slices are independent and run in
//! parallel.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;
use rayon::prelude::*;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::tables::GradedDims;

/// Monomial `alpha^a * beta^b * gamma^c`.
///
/// Its degree is `2a + 4b + 6c` and its Hodge type is balanced:
/// `(a + 2b + 3c, a + 2b + 3c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AbgMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl AbgMonomial {
    pub const ONE: AbgMonomial = AbgMonomial { a: 0, b: 0, c: 0 };

    pub fn degree(&self) -> u32 {
        2 * self.a + 4 * self.b + 6 * self.c
    }

    fn mul(&self, other: &Self) -> Self {
        AbgMonomial {
            a: self.a + other.a,
            b: self.b + other.b,
            c: self.c + other.c,
        }
    }
}

/// Graded lexicographic with `alpha < beta < gamma`.
impl Ord for AbgMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.c, self.b, self.a).cmp(&(
            other.degree(),
            other.c,
            other.b,
            other.a,
        ))
    }
}

impl PartialOrd for AbgMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Q[alpha, beta, gamma]`; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct AbgPoly {
    terms: BTreeMap<AbgMonomial, Rational>,
}

impl AbgPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(AbgMonomial::ONE, rational::int(1))
    }

    pub fn alpha() -> Self {
        Self::monomial(AbgMonomial { a: 1, b: 0, c: 0 }, rational::int(1))
    }

    pub fn beta() -> Self {
        Self::monomial(AbgMonomial { a: 0, b: 1, c: 0 }, rational::int(1))
    }

    pub fn gamma() -> Self {
        Self::monomial(AbgMonomial { a: 0, b: 0, c: 1 }, rational::int(1))
    }

    pub fn monomial(m: AbgMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (AbgMonomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: AbgMonomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    fn insert_add(&mut self, m: AbgMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// The common degree of all terms, if the element is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(AbgMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl Add for &AbgPoly {
    type Output = AbgPoly;
    fn add(self, rhs: Self) -> AbgPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl Mul for &AbgPoly {
    type Output = AbgPoly;
    fn mul(self, rhs: Self) -> AbgPoly {
        let mut out = AbgPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for AbgPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        use num_traits::Signed;
        for (i, (m, c)) in self.terms.iter().enumerate() {
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
            for (name, e) in [("alpha", m.a), ("beta", m.b), ("gamma", m.c)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", rational::render(&abs))?;
            } else if abs == rational::int(1) {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::render(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The recursion `z_{k+1} = alpha z_k + k^2 beta z_{k-1} + 2k(k-1) gamma z_{k-2}`
/// with `z_0 = 1` and `z_k = 0` for `k < 0`. The result is homogeneous of
/// degree `2k`.
pub fn zagier_zeta(k: i64) -> AbgPoly {
    if k < 0 {
        return AbgPoly::zero();
    }
    // z[j] for j = k, k-1, k-2 rolling.
    let mut prev2 = AbgPoly::zero(); // z_{-2}
    let mut prev1 = AbgPoly::zero(); // z_{-1}
    let mut cur = AbgPoly::one(); // z_0
    for j in 0..k {
        let jr = rational::int(j);
        let next = &(&(&AbgPoly::alpha() * &cur)
            + &(&AbgPoly::beta() * &prev1).scale(&(&jr * &jr)))
            + &(&AbgPoly::gamma() * &prev2).scale(&rational::int(2 * j * (j - 1)));
        prev2 = prev1;
        prev1 = cur;
        cur = next;
    }
    cur
}

/// Generators `[z_k, z_{k+1}, z_{k+2}]` of the k-th relation ideal.
pub fn ideal_generators(k: u32) -> [AbgPoly; 3] {
    let k = i64::from(k);
    [zagier_zeta(k), zagier_zeta(k + 1), zagier_zeta(k + 2)]
}

/// All monomials of the given weighted degree, ascending.
pub fn monomials_of_degree(degree: u32) -> Vec<AbgMonomial> {
    let mut out = Vec::new();
    for c in 0..=degree / 6 {
        for b in 0..=(degree - 6 * c) / 4 {
            let rem = degree - 6 * c - 4 * b;
            if rem % 2 == 0 {
                out.push(AbgMonomial { a: rem / 2, b, c });
            }
        }
    }
    out.sort();
    out
}

/// Dimension of each degree slice of `Q[alpha, beta, gamma] / I_k` up to
/// `max_degree`, where `I_k = (z_k, z_{k+1}, z_{k+2})`.
pub fn quotient_dims(k: u32, max_degree: u32) -> GradedDims {
    let gens = ideal_generators(k);
    let slice_dims: Vec<(u32, u64)> = (0..=max_degree)
        .into_par_iter()
        .map(|d| (d, quotient_dim_in_degree(&gens, d)))
        .collect();
    let mut out = GradedDims::new();
    for (d, v) in slice_dims {
        out.insert_add(d, v);
    }
    out
}

fn quotient_dim_in_degree(gens: &[AbgPoly; 3], degree: u32) -> u64 {
    if degree % 2 != 0 {
        return 0;
    }
    let basis = monomials_of_degree(degree);
    if basis.is_empty() {
        return 0;
    }
    let index: BTreeMap<AbgMonomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for gen in gens {
        let Some(gdeg) = gen.homogeneous_degree() else {
            continue;
        };
        if gdeg > degree {
            continue;
        }
        for m in monomials_of_degree(degree - gdeg) {
            let shifted = gen * &AbgPoly::monomial(m, rational::int(1));
            let mut row = vec![Rational::zero(); basis.len()];
            for (mono, c) in shifted.terms() {
                row[index[&mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = linalg::rank_rational(&rows);
    (basis.len() - rank) as u64
}

/// Re-express quotient dimensions as a Hodge-diagonal polynomial: each
/// degree-`d` class has type `(d/2, d/2)`. Any odd-degree dimension is a bug
/// upstream and is reported as an error.
pub fn quotient_hodge_poly(k: u32, max_degree: u32) -> Result<BiPoly> {
    let dims = quotient_dims(k, max_degree);
    let mut out = BiPoly::zero();
    for (d, v) in dims.iter() {
        if d % 2 != 0 {
            return Err(Error::OddDegreePresent { degree: d, dim: v });
        }
        out = &out + &BiPoly::monomial(d / 2, d / 2, rational::int(v as i64));
    }
    Ok(out)
}
