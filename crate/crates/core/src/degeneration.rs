//! Weight spectral sequence bookkeeping for a two-component SNC
//! degeneration, Gysin-kernel and specialization-rank computations, and the
//! assembled mixed tables `(n, w, p, q) -> dim` for the limit fiber, the
//! Gieseker central fiber, and the Simpson moduli space.
//!
//! Everything here is dimension-level: inputs are dimension tables and
//! differential ranks, outputs are exact dimension tables. Subtractions are
//! never clamped; a negative intermediate raises an error because it can
//! only come from a transcription bug.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::closed_forms::{base_hp, smooth_hp};
use crate::error::{Error, Result};
use crate::rational::int;
use crate::tables::{GradedDims, HodgeTable, WeightedDims};

/// Which weight spectral sequence to run: the limit (three-term) complex of
/// the nearby fiber or the (two-term) complex of the central fiber itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Limit,
    Central,
}

/// Dimension tables and differential-rank data for a degeneration whose
/// central fiber has two smooth components `Y1`, `Y2` crossing along `Y12`.
///
/// `restriction_ranks[q]` is the rank of `H^q(Y1) + H^q(Y2) -> H^q(Y12)`;
/// `gysin_ranks[q]` is the rank of `H^{q-2}(Y12)(-1) -> H^q(Y1) + H^q(Y2)`
/// (keyed by the target degree `q`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SncInput {
    pub y1: GradedDims,
    pub y2: GradedDims,
    pub y12: GradedDims,
    pub restriction_ranks: BTreeMap<u32, u64>,
    pub gysin_ranks: BTreeMap<u32, u64>,
}

impl SncInput {
    /// The curve degeneration: `Y1` a projective line, `Y2` a smooth curve
    /// of genus `g - 1`, meeting at two points. Restriction has rank 1 on
    /// `H^0`; the Gysin map has rank 1 into `H^2`.
    pub fn curve(genus: u32) -> Self {
        assert!(genus >= 2);
        let h = genus - 1;
        SncInput {
            y1: GradedDims::from_pairs(&[(0, 1), (2, 1)]),
            y2: GradedDims::from_pairs(&[(0, 1), (1, 2 * h as u64), (2, 1)]),
            y12: GradedDims::from_pairs(&[(0, 2)]),
            restriction_ranks: BTreeMap::from([(0, 1)]),
            gysin_ranks: BTreeMap::from([(2, 1)]),
        }
    }

    /// The moduli degeneration: dimension tables and ranks for the
    /// two-component central fiber of the genus-`g` family of moduli
    /// spaces, derived from the fibration structure of the components over
    /// the genus-`(g-1)` space and the known limit weight table.
    pub fn moduli(genus: u32) -> Result<Self> {
        assert!(genus >= 2);
        let base = HodgeTable::from_bipoly(&base_hp(genus)?)?;
        let smooth = HodgeTable::from_bipoly(&smooth_hp(genus)?)?;
        let top = 6 * genus - 6;
        let b = |d: i64| -> u64 {
            if d < 0 {
                0
            } else {
                base.dim_in_degree(d as u32)
            }
        };
        let mut y1 = GradedDims::new();
        let mut y2 = GradedDims::new();
        let mut y12 = GradedDims::new();
        let mut restriction_ranks = BTreeMap::new();
        let mut gysin_ranks = BTreeMap::new();
        for q in 0..=top {
            let qi = q as i64;
            // The intersection is a product-of-lines bundle, the second
            // component a projective-space bundle over the base space.
            let v12 = b(qi) + 2 * b(qi - 2) + b(qi - 4);
            let v2 = b(qi) + b(qi - 2) + b(qi - 4) + b(qi - 6);
            // Weight-q part of H^q of the nearby fiber.
            let pure = grade_w_n_dim(&smooth, &base, q)?;
            let v1 = pure + b(qi - 2) + b(qi - 4);
            let rest = b(qi) + b(qi - 2) + b(qi - 4);
            let gys = b(qi - 2) + b(qi - 4) + b(qi - 6);
            if v1 > 0 {
                y1.insert_add(q, v1);
            }
            if v2 > 0 {
                y2.insert_add(q, v2);
            }
            if v12 > 0 {
                y12.insert_add(q, v12);
            }
            if rest > 0 {
                restriction_ranks.insert(q, rest);
            }
            if gys > 0 {
                gysin_ranks.insert(q, gys);
            }
        }
        Ok(SncInput {
            y1,
            y2,
            y12,
            restriction_ranks,
            gysin_ranks,
        })
    }

    fn restriction_rank(&self, q: u32) -> u64 {
        self.restriction_ranks.get(&q).copied().unwrap_or(0)
    }

    fn gysin_rank(&self, q: u32) -> u64 {
        self.gysin_ranks.get(&q).copied().unwrap_or(0)
    }

    fn max_degree(&self) -> u32 {
        [
            self.y1.max_degree().unwrap_or(0),
            self.y2.max_degree().unwrap_or(0),
            self.y12.max_degree().unwrap_or(0) + 2,
        ]
        .into_iter()
        .max()
        .unwrap()
    }
}

/// Sum over `p + q = n` of the weight-`n` part of `H^n` of the nearby
/// fiber: `h^{p,q}(smooth) - h^{p-2,q-1}(base) - h^{p-1,q-2}(base)`.
fn grade_w_n_dim(smooth: &HodgeTable, base: &HodgeTable, n: u32) -> Result<u64> {
    let mut total = 0u64;
    for p in 0..=n {
        let q = n - p;
        total += grade_w_n_entry(smooth, base, p, q)?;
    }
    Ok(total)
}

fn grade_w_n_entry(smooth: &HodgeTable, base: &HodgeTable, p: u32, q: u32) -> Result<u64> {
    let v = smooth.get(p, q) as i128
        - base.get_shifted(p, q, 2, 1) as i128
        - base.get_shifted(p, q, 1, 2) as i128;
    u64::try_from(v).map_err(|_| Error::NegativeDimension {
        context: format!("weight-(p+q) slice at (p,q)=({p},{q})"),
    })
}

/// E2 page of the chosen weight spectral sequence, reported as
/// `(n, w) -> dim` with `E2^{p,q}` contributing to degree `n = p + q` and
/// weight `w = q`.
pub fn ss_e2(input: &SncInput, side: Side) -> Result<WeightedDims> {
    let mut out = WeightedDims::new();
    for q in 0..=input.max_degree() {
        let middle = input.y1.get(q) + input.y2.get(q);
        let rest = input.restriction_rank(q);
        if rest > middle.min(input.y12.get(q)) {
            return Err(Error::InconsistentRanks {
                context: format!(
                    "restriction rank {rest} in degree {q} exceeds its bound {}",
                    middle.min(input.y12.get(q))
                ),
            });
        }
        let gys = match side {
            Side::Central => 0,
            Side::Limit => {
                let gys = input.gysin_rank(q);
                let source = input.y12.get_shifted(q, 2);
                if gys > source.min(middle) {
                    return Err(Error::InconsistentRanks {
                        context: format!(
                            "Gysin rank {gys} into degree {q} exceeds its bound {}",
                            source.min(middle)
                        ),
                    });
                }
                // Kernel of the Gysin differential: contributes weight q to
                // degree q - 1.
                if q >= 1 {
                    out.insert_add(q - 1, q, source - gys);
                }
                gys
            }
        };
        if rest + gys > middle {
            return Err(Error::InconsistentRanks {
                context: format!(
                    "ranks {rest} + {gys} in degree {q} exceed the middle term {middle}"
                ),
            });
        }
        out.insert_add(q, q, middle - rest - gys);
        out.insert_add(q + 1, q, input.y12.get(q) - rest);
    }
    Ok(out)
}

/// Kernel dimensions of the fiberwise Gysin map out of the cohomology of a
/// product of two lines, per degree 0..4: one line in `H^2`, nothing else.
pub fn fiber_gysin_kernel_dims() -> [u64; 5] {
    [0, 0, 1, 0, 0]
}

/// Fiber type of a Leray–Hirsch product table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fiber {
    /// A product of two projective lines.
    P1xP1,
    /// Projective 3-space.
    P3,
    /// The smooth quadric 3-fold compactifying SL2.
    Sl2Bar,
}

impl Fiber {
    pub fn hodge_table(&self) -> HodgeTable {
        match self {
            Fiber::P1xP1 => HodgeTable::from_entries(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]),
            // Both threefolds have one class in each even degree.
            Fiber::P3 | Fiber::Sl2Bar => {
                HodgeTable::from_entries(&[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)])
            }
        }
    }
}

/// Hodge table of a fiber bundle with the given fiber over the given base,
/// assuming the Leray–Hirsch identification holds (it does for all bundles
/// appearing here: the base is simply connected and the fiber classes
/// extend).
pub fn leray_hirsch_table(base: &HodgeTable, fiber: Fiber) -> HodgeTable {
    base.product(&fiber.hodge_table())
}

/// Dimension of the kernel of the Gysin map from the component intersection
/// into the central fiber in degree `n`: the base space's cohomology in
/// degree `n - 4`, carried by the difference of the two ruling classes.
pub fn gysin_kernel_dims(genus: u32, n: u32) -> Result<u64> {
    assert!(genus >= 2);
    if n < 4 {
        return Ok(0);
    }
    let base = HodgeTable::from_bipoly(&base_hp(genus)?)?;
    Ok(base.dim_in_degree(n - 4))
}

/// Kernel and cokernel dimensions of the specialization map in degree `n`:
/// the kernel is the image of the Gysin map (three base blocks), the
/// cokernel is the top weight piece of the limit.
pub fn specialization_ranks(genus: u32, n: u32) -> Result<(u64, u64)> {
    assert!(genus >= 2);
    let base = HodgeTable::from_bipoly(&base_hp(genus)?)?;
    let b = |d: i64| -> u64 {
        if d < 0 {
            0
        } else {
            base.dim_in_degree(d as u32)
        }
    };
    let n = n as i64;
    let kernel = b(n - 2) + b(n - 4) + b(n - 6);
    let cokernel = b(n - 3);
    Ok((kernel, cokernel))
}

/// Full mixed dimension table `(n, w, p, q) -> dim` of one space.
///
/// Invariants: `p + q = w` for every entry, `h^{p,q} = h^{q,p}` within each
/// `(n, w)`, and the weight spread is `{n-1, n, n+1}` for the limit table,
/// `{n-1, n}` for the two compact central fibers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedTable {
    space: String,
    genus: u32,
    entries: BTreeMap<(u32, u32, u32, u32), u64>,
}

#[derive(Serialize)]
struct MixedTableDoc<'a> {
    space: &'a str,
    genus: u32,
    entries: Vec<MixedEntry>,
}

#[derive(Serialize)]
struct MixedEntry {
    n: u32,
    w: u32,
    p: u32,
    q: u32,
    dim: u64,
}

impl MixedTable {
    fn new(space: &str, genus: u32) -> Self {
        Self {
            space: space.to_string(),
            genus,
            entries: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &str {
        &self.space
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    fn insert_add(&mut self, n: u32, w: u32, p: u32, q: u32, dim: u64) {
        if dim == 0 {
            return;
        }
        debug_assert_eq!(p + q, w);
        *self.entries.entry((n, w, p, q)).or_insert(0) += dim;
    }

    pub fn get(&self, n: u32, w: u32, p: u32, q: u32) -> u64 {
        self.entries.get(&(n, w, p, q)).copied().unwrap_or(0)
    }

    /// Entries in lexicographic `(n, w, p, q)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u32, u32, u64)> + '_ {
        self.entries
            .iter()
            .map(|(&(n, w, p, q), &d)| (n, w, p, q, d))
    }

    pub fn max_n(&self) -> u32 {
        self.entries.keys().map(|&(n, ..)| n).max().unwrap_or(0)
    }

    /// Betti numbers: per-degree totals over all weights and types.
    pub fn betti(&self, max_n: u32) -> Vec<u64> {
        let mut out = vec![0u64; max_n as usize + 1];
        for (&(n, ..), &d) in &self.entries {
            if n <= max_n {
                out[n as usize] += d;
            }
        }
        out
    }

    /// Marginal `(n, w) -> dim`.
    pub fn weighted_marginal(&self) -> WeightedDims {
        let mut out = WeightedDims::new();
        for (&(n, w, ..), &d) in &self.entries {
            out.insert_add(n, w, d);
        }
        out
    }

    /// Collapse to the Hodge–Poincaré polynomial: sum of `dim * x^p y^q`.
    pub fn collapse_xy(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(_, _, p, q), &d) in &self.entries {
            out = &out + &BiPoly::monomial(p, q, int(d as i64));
        }
        out
    }

    pub fn is_hodge_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(n, w, p, q), &d)| self.get(n, w, q, p) == d)
    }

    /// JSON document with entries sorted by `(n, w, p, q)`.
    pub fn to_json_string(&self) -> String {
        let doc = MixedTableDoc {
            space: &self.space,
            genus: self.genus,
            entries: self
                .entries()
                .map(|(n, w, p, q, dim)| MixedEntry { n, w, p, q, dim })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("static schema serializes")
    }

    /// CSV mirror with header `n,w,p,q,dim`, same ordering.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("n,w,p,q,dim\n");
        for (n, w, p, q, d) in self.entries() {
            out.push_str(&format!("{n},{w},{p},{q},{d}\n"));
        }
        out
    }
}

/// Mixed table of the limit fiber: weights spread over `{n-1, n, n+1}`.
///
/// The weight-`n` slice subtracts the two base shifts from the smooth-table
/// entry; the weight-`(n-1)` slice is the base table shifted by `(1,1)`;
/// the weight-`(n+1)` slice is forced by the monodromy pairing to be the
/// base table shifted by `(2,2)`.
pub fn limit_mixed_table(genus: u32) -> Result<MixedTable> {
    assert!(genus >= 2);
    let smooth = HodgeTable::from_bipoly(&smooth_hp(genus)?)?;
    let base = HodgeTable::from_bipoly(&base_hp(genus)?)?;
    let top = 6 * genus - 6;
    let mut table = MixedTable::new("limit", genus);
    for n in 0..=top {
        for p in 0..=n {
            let q = n - p;
            table.insert_add(n, n, p, q, grade_w_n_entry(&smooth, &base, p, q)?);
        }
        if n >= 1 {
            let w = n - 1;
            for p in 0..=w {
                let q = w - p;
                table.insert_add(n, w, p, q, base.get_shifted(p, q, 1, 1));
            }
        }
        let w = n + 1;
        for p in 0..=w {
            let q = w - p;
            table.insert_add(n, w, p, q, base.get_shifted(p, q, 2, 2));
        }
    }
    Ok(table)
}

/// Mixed table of the Gieseker central fiber: weights `{n-1, n}`. The
/// weight-`n` slice adds the three Tate-twisted base blocks to the limit's
/// weight-`n` slice; the weight-`(n-1)` slice equals the limit's.
pub fn gieseker_mixed_table(genus: u32) -> Result<MixedTable> {
    assert!(genus >= 2);
    let limit = limit_mixed_table(genus)?;
    let base = HodgeTable::from_bipoly(&base_hp(genus)?)?;
    let top = 6 * genus - 6;
    let mut table = MixedTable::new("gieseker", genus);
    for n in 0..=top {
        for p in 0..=n {
            let q = n - p;
            let blocks: u64 = (1..=3)
                .map(|j| base.get_shifted(p, q, j, j))
                .sum();
            table.insert_add(n, n, p, q, limit.get(n, n, p, q) + blocks);
        }
        if n >= 1 {
            let w = n - 1;
            for p in 0..=w {
                let q = w - p;
                table.insert_add(n, w, p, q, limit.get(n, w, p, q));
            }
        }
    }
    Ok(table)
}

/// Mixed table of the Simpson moduli space: the weight-at-most-`n` part of
/// the limit table.
pub fn simpson_mixed_table(genus: u32) -> Result<MixedTable> {
    assert!(genus >= 2);
    let limit = limit_mixed_table(genus)?;
    let mut table = MixedTable::new("simpson", genus);
    for (n, w, p, q, d) in limit.entries() {
        if w <= n {
            table.insert_add(n, w, p, q, d);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::UniPoly;
    use crate::closed_forms::{gieseker_hp, simpson_hp, smooth_betti};
    use crate::exterior::simpson_model_wdims;

    #[test]
    fn curve_spectral_sequence() {
        for g in 2..=6u32 {
            let input = SncInput::curve(g);
            let limit = ss_e2(&input, Side::Limit).unwrap();
            assert_eq!(limit.get(1, 0), 1, "g={g}");
            assert_eq!(limit.get(1, 1), 2 * (g as u64 - 1));
            assert_eq!(limit.get(1, 2), 1);
            // H^1 marginal equals the first Betti number of the nearby curve.
            let h1: u64 = (0..=2).map(|w| limit.get(1, w)).sum();
            assert_eq!(h1, 2 * g as u64);
            let central = ss_e2(&input, Side::Central).unwrap();
            assert_eq!(central.get(1, 0), 1);
            assert_eq!(central.get(1, 1), 2 * (g as u64 - 1));
            assert_eq!(central.get(1, 2), 0);
        }
    }

    #[test]
    fn zero_ranks_reproduce_e1() {
        let mut input = SncInput::curve(3);
        input.restriction_ranks.clear();
        input.gysin_ranks.clear();
        let e2 = ss_e2(&input, Side::Limit).unwrap();
        // Middle column dims are just the component sums.
        assert_eq!(e2.get(0, 0), 2);
        assert_eq!(e2.get(1, 1), 4);
        assert_eq!(e2.get(2, 2), 2);
        // Boundary columns are the untouched intersection dims.
        assert_eq!(e2.get(1, 0), 2);
        assert_eq!(e2.get(1, 2), 2);
    }

    #[test]
    fn inconsistent_ranks_are_rejected() {
        let mut input = SncInput::curve(2);
        input.restriction_ranks.insert(0, 5);
        assert!(matches!(
            ss_e2(&input, Side::Limit),
            Err(Error::InconsistentRanks { .. })
        ));
        let mut input = SncInput::curve(2);
        input.gysin_ranks.insert(2, 3);
        assert!(matches!(
            ss_e2(&input, Side::Limit),
            Err(Error::InconsistentRanks { .. })
        ));
    }

    #[test]
    fn moduli_spectral_sequence_marginals_match_betti() {
        for g in 2..=3u32 {
            let input = SncInput::moduli(g).unwrap();
            let e2 = ss_e2(&input, Side::Limit).unwrap();
            let betti = smooth_betti(g).unwrap();
            for (n, &b) in betti.iter().enumerate() {
                let total: u64 = (0..=(n as u32 + 1))
                    .map(|w| e2.get(n as u32, w))
                    .sum();
                assert_eq!(total, b, "g={g} n={n}");
            }
        }
    }

    #[test]
    fn moduli_spectral_sequence_reproduces_limit_table() {
        // The generic E2 computation on the derived component tables must
        // agree with the limit table's (n, w) marginals slice by slice.
        for g in 2..=4u32 {
            let e2 = ss_e2(&SncInput::moduli(g).unwrap(), Side::Limit).unwrap();
            let marginal = limit_mixed_table(g).unwrap().weighted_marginal();
            assert_eq!(e2, marginal, "g={g}");
        }
    }

    #[test]
    fn moduli_central_sequence_reproduces_gieseker_table() {
        for g in 2..=4u32 {
            let e2 = ss_e2(&SncInput::moduli(g).unwrap(), Side::Central).unwrap();
            let marginal = gieseker_mixed_table(g).unwrap().weighted_marginal();
            assert_eq!(e2, marginal, "g={g}");
        }
    }

    #[test]
    fn fiber_kernel_is_one_line_in_h2() {
        assert_eq!(fiber_gysin_kernel_dims(), [0, 0, 1, 0, 0]);
    }

    #[test]
    fn leray_hirsch_over_a_point() {
        let point = HodgeTable::point();
        assert_eq!(
            leray_hirsch_table(&point, Fiber::P3),
            HodgeTable::from_entries(&[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)])
        );
        assert_eq!(
            leray_hirsch_table(&point, Fiber::P1xP1),
            HodgeTable::from_entries(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)])
        );
        // The quadric threefold has one class per even degree, like P^3.
        assert_eq!(
            leray_hirsch_table(&point, Fiber::Sl2Bar),
            leray_hirsch_table(&point, Fiber::P3)
        );
    }

    #[test]
    fn leray_hirsch_degree_five_slice() {
        // Base slice with h^{2,1} = h^{1,2} = 2 (genus-3 case), fiber a
        // product of lines: the (3,2) entry of the degree-5 slice is 4.
        let base = HodgeTable::from_entries(&[(2, 1, 2), (1, 2, 2)]);
        let total = leray_hirsch_table(&base, Fiber::P1xP1);
        assert_eq!(total.get(3, 2), 4);
        assert_eq!(total.total(), base.total() * 4);
    }

    #[test]
    fn gysin_kernel_dims_examples() {
        assert_eq!(gysin_kernel_dims(2, 4).unwrap(), 1);
        assert_eq!(gysin_kernel_dims(2, 5).unwrap(), 0);
        assert_eq!(gysin_kernel_dims(2, 3).unwrap(), 0);
        assert_eq!(gysin_kernel_dims(3, 7).unwrap(), 4);
        for n in 0..=12u32 {
            let expected = if n == 4 { 1 } else { 0 };
            assert_eq!(gysin_kernel_dims(2, n).unwrap(), expected);
        }
    }

    #[test]
    fn specialization_rank_examples() {
        assert_eq!(specialization_ranks(2, 2).unwrap(), (1, 0));
        assert_eq!(specialization_ranks(2, 3).unwrap(), (0, 1));
        assert_eq!(specialization_ranks(2, 0).unwrap(), (0, 0));
    }

    #[test]
    fn limit_table_genus_two() {
        let t = limit_mixed_table(2).unwrap();
        assert_eq!(t.get(2, 2, 1, 1), 1);
        assert_eq!(t.get(3, 2, 1, 1), 1);
        assert_eq!(t.get(3, 4, 2, 2), 1);
        assert_eq!(t.get(3, 3, 2, 1), 1);
        assert_eq!(t.get(3, 3, 1, 2), 1);
        assert_eq!(t.get(0, 0, 0, 0), 1);
        assert_eq!(t.betti(6), vec![1, 0, 1, 4, 1, 0, 1]);
    }

    #[test]
    fn limit_table_betti_match_smooth() {
        for g in 2..=4u32 {
            let t = limit_mixed_table(g).unwrap();
            assert_eq!(t.betti(6 * g - 6), smooth_betti(g).unwrap(), "g={g}");
        }
    }

    #[test]
    fn limit_table_monodromy_pairing() {
        for g in 2..=4u32 {
            let t = limit_mixed_table(g).unwrap();
            for n in 0..=6 * g - 6 {
                let above: u64 = (0..=n + 1).map(|p| t.get(n, n + 1, p, n + 1 - p)).sum();
                let below: u64 = if n >= 1 {
                    (0..=n - 1).map(|p| t.get(n, n - 1, p, n - 1 - p)).sum()
                } else {
                    0
                };
                assert_eq!(above, below, "g={g} n={n}");
            }
        }
    }

    #[test]
    fn gieseker_table_genus_two() {
        let t = gieseker_mixed_table(2).unwrap();
        assert_eq!(
            t.collapse_xy().diagonal(),
            UniPoly::from_int_coeffs(&[1, 0, 3, 2, 2, 0, 2])
        );
        let n2w2: u64 = (0..=2).map(|p| t.get(2, 2, p, 2 - p)).sum();
        assert_eq!(n2w2, 2);
        let n3w2: u64 = (0..=2).map(|p| t.get(3, 2, p, 2 - p)).sum();
        assert_eq!(n3w2, 1);
    }

    #[test]
    fn gieseker_table_collapses_to_closed_form() {
        for g in 2..=4u32 {
            let t = gieseker_mixed_table(g).unwrap();
            assert_eq!(t.collapse_xy(), gieseker_hp(g).unwrap(), "g={g}");
        }
    }

    #[test]
    fn simpson_table_genus_two() {
        let t = simpson_mixed_table(2).unwrap();
        assert_eq!(t.betti(6), vec![1, 0, 1, 3, 1, 0, 1]);
        assert_eq!(
            t.collapse_xy().diagonal(),
            UniPoly::from_int_coeffs(&[1, 0, 2, 2, 1, 0, 1])
        );
        assert_eq!(t.get(6, 6, 3, 3), 1);
        assert_eq!(t.entries().count(), 7);
    }

    #[test]
    fn simpson_table_collapses_to_closed_form() {
        for g in 2..=4u32 {
            let t = simpson_mixed_table(g).unwrap();
            assert_eq!(t.collapse_xy(), simpson_hp(g).unwrap(), "g={g}");
        }
    }

    #[test]
    fn simpson_table_matches_ring_model() {
        for g in 2..=4u32 {
            let t = simpson_mixed_table(g).unwrap();
            assert_eq!(t.weighted_marginal(), simpson_model_wdims(g), "g={g}");
        }
    }

    #[test]
    fn tables_are_hodge_symmetric() {
        for g in 2..=4u32 {
            for t in [
                limit_mixed_table(g).unwrap(),
                gieseker_mixed_table(g).unwrap(),
                simpson_mixed_table(g).unwrap(),
            ] {
                assert!(t.is_hodge_symmetric(), "g={g} space={}", t.space());
            }
        }
    }

    #[test]
    fn difference_of_tables_is_three_base_blocks() {
        for g in 2..=4u32 {
            let gie = gieseker_mixed_table(g).unwrap().collapse_xy();
            let sim = simpson_mixed_table(g).unwrap().collapse_xy();
            let shift = &(&BiPoly::unit_monomial(1, 1) + &BiPoly::unit_monomial(2, 2))
                + &BiPoly::unit_monomial(3, 3);
            let base = crate::closed_forms::base_hp(g).unwrap();
            assert_eq!(&gie - &sim, &base * &shift, "g={g}");
        }
    }

    #[test]
    fn specialization_bookkeeping_is_consistent() {
        // b_n(central) - ker(sp_n) + coker(sp_n) = b_n(limit).
        for g in 2..=4u32 {
            let gie = gieseker_mixed_table(g).unwrap();
            let lim = limit_mixed_table(g).unwrap();
            let top = 6 * g - 6;
            let bg = gie.betti(top);
            let bl = lim.betti(top);
            for n in 0..=top {
                let (ker, coker) = specialization_ranks(g, n).unwrap();
                assert_eq!(
                    bg[n as usize] - ker + coker,
                    bl[n as usize],
                    "g={g} n={n}"
                );
            }
        }
    }

    #[test]
    fn json_and_csv_schemas() {
        let t = simpson_mixed_table(2).unwrap();
        let json = t.to_json_string();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["space"], "simpson");
        assert_eq!(doc["genus"], 2);
        assert_eq!(doc["entries"].as_array().unwrap().len(), 7);
        assert_eq!(doc["entries"][0]["n"], 0);
        assert_eq!(doc["entries"][0]["dim"], 1);
        let csv = t.to_csv_string();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,w,p,q,dim"));
        assert_eq!(lines.next(), Some("0,0,0,0,1"));
        assert_eq!(csv.lines().count(), 8);
    }
}
