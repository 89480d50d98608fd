//! Dimension containers: Hodge tables, graded dimensions, and
//! (degree, weight)-graded dimensions.
//!
//! All values are exact nonnegative counts; only nonzero entries are stored.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};

use crate::bipoly::{BiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::rational;

/// Map `(p, q) -> h^{p,q}`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct HodgeTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl HodgeTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The table of a point: a single class of type (0, 0).
    pub fn point() -> Self {
        let mut t = Self::new();
        t.insert_add(0, 0, 1);
        t
    }

    pub fn from_entries(entries: &[(u32, u32, u64)]) -> Self {
        let mut t = Self::new();
        for &(p, q, d) in entries {
            t.insert_add(p, q, d);
        }
        t
    }

    /// Read the coefficients of a polynomial as dimensions. Fails if any
    /// coefficient is not a nonnegative integer.
    pub fn from_bipoly(poly: &BiPoly) -> Result<Self> {
        let mut t = Self::new();
        for (e, c) in poly.terms() {
            let ok = c.is_integer() && !c.is_negative();
            let value = ok.then(|| c.numer().to_u64()).flatten();
            match value {
                Some(d) => t.insert_add(e.p, e.q, d),
                None => {
                    return Err(Error::NotATable {
                        p: e.p,
                        q: e.q,
                        value: rational::render(c),
                    })
                }
            }
        }
        Ok(t)
    }

    pub fn to_bipoly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p, q), &d) in &self.entries {
            out = &out + &BiPoly::monomial(p, q, rational::int(d as i64));
        }
        out
    }

    pub fn insert_add(&mut self, p: u32, q: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.entries.entry((p, q)).or_insert(0) += dim;
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// `h^{p-dp, q-dq}`, zero when the shift goes negative.
    pub fn get_shifted(&self, p: u32, q: u32, dp: u32, dq: u32) -> u64 {
        if p < dp || q < dq {
            0
        } else {
            self.get(p - dp, q - dq)
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(p, q), &d)| (p, q, d))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Sum of entries with `p + q = n`.
    pub fn dim_in_degree(&self, n: u32) -> u64 {
        self.entries
            .iter()
            .filter(|(&(p, q), _)| p + q == n)
            .map(|(_, &d)| d)
            .sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.keys().map(|&(p, q)| p + q).max().unwrap_or(0)
    }

    /// Betti-number vector, degrees `0..=max`.
    pub fn betti(&self, max_degree: u32) -> Vec<u64> {
        (0..=max_degree).map(|n| self.dim_in_degree(n)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(p, q), &d)| self.get(q, p) == d)
    }

    /// Poincaré duality against complex dimension `dim`: `h^{p,q} = h^{dim-p, dim-q}`.
    pub fn satisfies_duality(&self, dim: u32) -> bool {
        self.entries.iter().all(|(&(p, q), &d)| {
            p <= dim && q <= dim && self.get(dim - p, dim - q) == d
        })
    }

    /// Tensor product of tables (Künneth at the dimension level).
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (&(p1, q1), &d1) in &self.entries {
            for (&(p2, q2), &d2) in &other.entries {
                out.insert_add(p1 + p2, q1 + q2, d1 * d2);
            }
        }
        out
    }
}

/// Map `degree -> dimension`, finitely supported.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GradedDims {
    dims: BTreeMap<u32, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u32, u64)]) -> Self {
        let mut g = Self::new();
        for &(d, v) in pairs {
            g.insert_add(d, v);
        }
        g
    }

    pub fn insert_add(&mut self, degree: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.dims.entry(degree).or_insert(0) += dim;
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    /// `dims[degree - shift]`, zero when the shift goes negative.
    pub fn get_shifted(&self, degree: u32, shift: u32) -> u64 {
        if degree < shift {
            0
        } else {
            self.get(degree - shift)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.dims.keys().next_back().copied()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Dense vector of dimensions for degrees `0..=max`.
    pub fn to_vec(&self, max_degree: u32) -> Vec<u64> {
        (0..=max_degree).map(|d| self.get(d)).collect()
    }
}

/// Map `(degree, weight) -> dimension`, finitely supported.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WeightedDims {
    dims: BTreeMap<(u32, u32), u64>,
}

impl WeightedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: &[(u32, u32, u64)]) -> Self {
        let mut w = Self::new();
        for &(n, wt, d) in entries {
            w.insert_add(n, wt, d);
        }
        w
    }

    pub fn insert_add(&mut self, degree: u32, weight: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.dims.entry((degree, weight)).or_insert(0) += dim;
    }

    pub fn get(&self, degree: u32, weight: u32) -> u64 {
        self.dims.get(&(degree, weight)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.dims.iter().map(|(&(n, w), &d)| (n, w, d))
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Marginal over weights: `degree -> dimension`.
    pub fn degree_marginal(&self) -> GradedDims {
        let mut g = GradedDims::new();
        for (&(n, _), &d) in &self.dims {
            g.insert_add(n, d);
        }
        g
    }

    /// Generating series in the weight: `sum dim * t^w`.
    pub fn weight_series(&self) -> UniPoly {
        let mut u = UniPoly::zero();
        for (&(_, w), &d) in &self.dims {
            u = &u + &UniPoly::monomial(w, rational::int(d as i64));
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn hodge_table_from_poly_rejects_non_dimensions() {
        let p = &BiPoly::one() - &BiPoly::monomial(1, 1, int(2));
        assert!(matches!(
            HodgeTable::from_bipoly(&p),
            Err(Error::NotATable { p: 1, q: 1, .. })
        ));
        let fr = BiPoly::monomial(0, 0, ratio(1, 2));
        assert!(HodgeTable::from_bipoly(&fr).is_err());
    }

    #[test]
    fn hodge_table_marginals() {
        let t = HodgeTable::from_entries(&[(2, 1, 2), (1, 2, 2), (0, 0, 1)]);
        assert_eq!(t.dim_in_degree(3), 4);
        assert_eq!(t.total(), 5);
        assert!(t.is_symmetric());
        assert_eq!(t.betti(3), vec![1, 0, 0, 4]);
    }

    #[test]
    fn table_product_is_kunneth() {
        let point = HodgeTable::point();
        let t = HodgeTable::from_entries(&[(1, 1, 2)]);
        assert_eq!(point.product(&t), t);
        assert_eq!(t.product(&t), HodgeTable::from_entries(&[(2, 2, 4)]));
    }

    #[test]
    fn weighted_dims_series() {
        let w = WeightedDims::from_entries(&[(3, 2, 1), (3, 3, 2), (0, 0, 1)]);
        assert_eq!(w.weight_series().to_string(), "1 + t^2 + 2t^3");
        assert_eq!(w.degree_marginal().get(3), 3);
    }
}
