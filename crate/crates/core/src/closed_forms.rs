//! Closed-form Hodge–Poincaré polynomials for the three moduli spaces
//! attached to a degenerating family of curves: the smooth fiber, the
//! central fiber of the Gieseker family, and the Simpson moduli space of the
//! nodal curve, plus the smooth model of the normalized curve that all three
//! assemblies consume.
//!
//! Each form is assembled as a polynomial numerator over the fixed
//! denominator `(1 - xy)(1 - x^2 y^2)` and eliminated by a single exact
//! division; a `NotDivisible` error can only mean the numerator was
//! transcribed wrongly.

use crate::bipoly::{BiPoly, StructuredRatFun};
use crate::error::Result;
use crate::rational::int;
use crate::tables::HodgeTable;

fn xy(p: u32, q: u32) -> BiPoly {
    BiPoly::unit_monomial(p, q)
}

/// `(1 + x y^2)^e (1 + x^2 y)^e`.
fn hodge_factor(e: u32) -> BiPoly {
    let a = &BiPoly::one() + &xy(1, 2);
    let b = &BiPoly::one() + &xy(2, 1);
    &a.pow(e) * &b.pow(e)
}

/// `x^g y^g (1 + x)^e (1 + y)^e`.
fn tail_factor(genus: u32, e: u32) -> BiPoly {
    let c = &BiPoly::one() + &BiPoly::x();
    let d = &BiPoly::one() + &BiPoly::y();
    &(&xy(genus, genus) * &c.pow(e)) * &d.pow(e)
}

/// Rational-function form for the smooth fiber of genus `g`:
/// `((1 + xy^2)^g (1 + x^2 y)^g - x^g y^g (1 + x)^g (1 + y)^g) / ((1-xy)(1-x^2y^2))`.
pub fn smooth_form(genus: u32) -> StructuredRatFun {
    assert!(genus >= 1, "smooth moduli space requires genus >= 1");
    let num = &hodge_factor(genus) - &tail_factor(genus, genus);
    StructuredRatFun::new(num)
}

/// Rational-function form for the Gieseker central fiber of genus `g`.
pub fn gieseker_form(genus: u32) -> StructuredRatFun {
    assert!(genus >= 2, "nodal moduli spaces require genus >= 2");
    let lead = &(&BiPoly::one() + &xy(1, 1).scale(&int(2))) * &(&BiPoly::one() + &xy(2, 2));
    let one_plus_xy = &BiPoly::one() + &xy(1, 1);
    let tail = &(&one_plus_xy * &one_plus_xy) + &BiPoly::constant(int(2));
    let num = &(&hodge_factor(genus - 1) * &lead) - &(&tail_factor(genus, genus - 1) * &tail);
    StructuredRatFun::new(num)
}

/// Rational-function form for the Simpson moduli space of genus `g`.
pub fn simpson_form(genus: u32) -> StructuredRatFun {
    assert!(genus >= 2, "nodal moduli spaces require genus >= 2");
    let lead = &(&BiPoly::one() + &xy(1, 1)) + &xy(3, 3);
    let tail = &BiPoly::constant(int(2)) + &xy(1, 1);
    let num = &(&hodge_factor(genus - 1) * &lead) - &(&tail_factor(genus, genus - 1) * &tail);
    StructuredRatFun::new(num)
}

/// Hodge–Poincaré polynomial of the smooth-fiber moduli space, genus >= 1.
pub fn smooth_hp(genus: u32) -> Result<BiPoly> {
    smooth_form(genus).exact()
}

/// Hodge–Poincaré polynomial of the moduli space over the normalized curve
/// (genus `g - 1`); this is the base of every fibered piece downstream.
pub fn base_hp(genus: u32) -> Result<BiPoly> {
    assert!(genus >= 2, "the normalized curve has genus `genus - 1` >= 1");
    smooth_hp(genus - 1)
}

/// Hodge–Poincaré polynomial of the Gieseker central fiber, genus >= 2.
pub fn gieseker_hp(genus: u32) -> Result<BiPoly> {
    gieseker_form(genus).exact()
}

/// Hodge–Poincaré polynomial of the Simpson moduli space, genus >= 2.
pub fn simpson_hp(genus: u32) -> Result<BiPoly> {
    simpson_form(genus).exact()
}

/// `h^{p,q}` table of the smooth-fiber moduli space.
pub fn smooth_hodge_table(genus: u32) -> Result<HodgeTable> {
    assert!(genus >= 2, "Betti/Hodge tables are for genus >= 2");
    HodgeTable::from_bipoly(&smooth_hp(genus)?)
}

/// Betti numbers `b_0..b_{6g-6}` of the smooth-fiber moduli space; purity
/// makes `b_n` the sum of `h^{p,q}` over `p + q = n`.
pub fn smooth_betti(genus: u32) -> Result<Vec<u64>> {
    Ok(smooth_hodge_table(genus)?.betti(6 * genus - 6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::UniPoly;
    use crate::rational::Rational;

    #[test]
    fn genus_one_smooth_space_is_a_point() {
        assert_eq!(smooth_hp(1).unwrap(), BiPoly::one());
        assert_eq!(base_hp(2).unwrap(), BiPoly::one());
    }

    #[test]
    fn base_delegates_to_lower_genus() {
        assert_eq!(base_hp(3).unwrap(), smooth_hp(2).unwrap());
    }

    #[test]
    fn genus_two_diagonals() {
        let smooth = smooth_hp(2).unwrap().diagonal();
        assert_eq!(smooth, UniPoly::from_int_coeffs(&[1, 0, 1, 4, 1, 0, 1]));
        let gieseker = gieseker_hp(2).unwrap().diagonal();
        assert_eq!(gieseker, UniPoly::from_int_coeffs(&[1, 0, 3, 2, 2, 0, 2]));
        let simpson = simpson_hp(2).unwrap().diagonal();
        assert_eq!(simpson, UniPoly::from_int_coeffs(&[1, 0, 2, 2, 1, 0, 1]));
    }

    #[test]
    fn genus_two_hodge_numbers() {
        let p = smooth_hp(2).unwrap();
        assert_eq!(p.coeff(2, 1), crate::rational::int(2));
        assert_eq!(p.coeff(1, 2), crate::rational::int(2));
        assert_eq!(p.coeff(1, 1), crate::rational::int(1));
        assert_eq!(p.coeff(0, 0), crate::rational::int(1));
        assert_eq!(gieseker_hp(2).unwrap().coeff(0, 0), crate::rational::int(1));
    }

    #[test]
    fn simpson_total_dimension_genus_two() {
        let total = simpson_hp(2).unwrap().diagonal().eval_one();
        assert_eq!(total, crate::rational::int(7));
    }

    #[test]
    fn closed_forms_match_their_series_expansions() {
        for g in 2..=4 {
            for (form, poly) in [
                (smooth_form(g), smooth_hp(g).unwrap()),
                (gieseker_form(g), gieseker_hp(g).unwrap()),
                (simpson_form(g), simpson_hp(g).unwrap()),
            ] {
                let d = poly.total_degree();
                assert_eq!(form.expand_truncated(d), poly);
            }
        }
    }

    #[test]
    fn proof_forms_agree_with_closed_forms() {
        // Both nodal forms differ from the smooth form by an explicit
        // multiple of the base polynomial.
        for g in 2..=6 {
            let p = smooth_hp(g).unwrap();
            let q = base_hp(g).unwrap();
            let xy = |a: u32, b: u32| BiPoly::unit_monomial(a, b);
            let gieseker_shift =
                &(&(&(&xy(1, 1).scale(&crate::rational::int(2)) - &xy(2, 1)) - &xy(1, 2))
                    + &xy(2, 2))
                    + &xy(3, 3);
            assert_eq!(gieseker_hp(g).unwrap(), &p + &(&q * &gieseker_shift));
            let simpson_shift = &(&xy(1, 1) - &xy(2, 1)) - &xy(1, 2);
            assert_eq!(simpson_hp(g).unwrap(), &p + &(&q * &simpson_shift));
        }
    }

    #[test]
    fn difference_identity() {
        // gieseker - simpson = base * (xy + x^2y^2 + x^3y^3), exactly.
        for g in 2..=6 {
            let shift = &(&BiPoly::unit_monomial(1, 1) + &BiPoly::unit_monomial(2, 2))
                + &BiPoly::unit_monomial(3, 3);
            let lhs = &gieseker_hp(g).unwrap() - &simpson_hp(g).unwrap();
            assert_eq!(lhs, &base_hp(g).unwrap() * &shift);
        }
    }

    #[test]
    fn poincare_duality_on_smooth_tables() {
        for g in 2..=6 {
            let t = smooth_hodge_table(g).unwrap();
            assert!(t.satisfies_duality(3 * g - 3));
            assert!(t.is_symmetric());
        }
    }

    #[test]
    fn betti_vector_shape() {
        let b = smooth_betti(2).unwrap();
        assert_eq!(b, vec![1, 0, 1, 4, 1, 0, 1]);
        assert_eq!(smooth_betti(5).unwrap().len(), 25);
    }

    #[test]
    fn coefficients_are_dimensions_up_to_genus_eight() {
        for g in 2..=8 {
            for poly in [
                smooth_hp(g).unwrap(),
                gieseker_hp(g).unwrap(),
                simpson_hp(g).unwrap(),
            ] {
                for (_, c) in poly.terms() {
                    assert!(c.is_integer());
                    assert!(*c > Rational::from_integer(0.into()));
                }
            }
        }
    }

    #[test]
    fn top_diagonal_coefficients() {
        for (g, expected) in [(2u32, (1, 2, 1)), (3, (1, 2, 1)), (4, (1, 2, 1))] {
            let top = 3 * g - 3;
            let s = smooth_hp(g).unwrap().coeff(top, top);
            let gi = gieseker_hp(g).unwrap().coeff(top, top);
            let si = simpson_hp(g).unwrap().coeff(top, top);
            assert_eq!(s, crate::rational::int(expected.0));
            assert_eq!(gi, crate::rational::int(expected.1));
            assert_eq!(si, crate::rational::int(expected.2));
        }
    }
}
