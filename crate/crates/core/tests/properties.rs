//! Property tests for the algebraic kernels: ring axioms, the
//! division/multiplication round trip, truncation consistency, the diagonal
//! homomorphism, and exterior-algebra sign laws.

use proptest::prelude::*;

use nodal_hodge::bipoly::{BiPoly, StructuredRatFun};
use nodal_hodge::exterior::{ext_mul, wedge_table, ExtElement};
use nodal_hodge::rational::ratio;
use nodal_hodge::tables::HodgeTable;

fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), (-4i64..=4, 1i64..=3)), 0..=5).prop_map(
        |terms| {
            let mut out = BiPoly::zero();
            for ((p, q), (num, den)) in terms {
                out = &out + &BiPoly::monomial(p, q, ratio(num, den));
            }
            out
        },
    )
}

fn arb_odd_ext(num_gens: u32) -> impl Strategy<Value = ExtElement> {
    prop::collection::vec((1u32..=num_gens, -3i64..=3), 1..=4).prop_map(move |gens| {
        let mut out = ExtElement::zero(num_gens);
        for (i, c) in gens {
            out = out.add(&ExtElement::generator(num_gens, i).scale(&ratio(c, 1)));
        }
        out
    })
}

proptest! {
    #[test]
    fn mul_commutative_associative(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn add_mul_distribute(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn division_inverts_multiplication(a in arb_bipoly(), b in arb_bipoly()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).exact_div(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn truncated_expansion_matches_exact_quotient(q in arb_bipoly(), d in 0u32..=10) {
        // Build a rational function known to be exactly divisible.
        let num = &q * &StructuredRatFun::denominator();
        let f = StructuredRatFun::new(num);
        prop_assert_eq!(f.exact().unwrap(), q.clone());
        prop_assert_eq!(f.expand_truncated(d), q.truncate_total_degree(d));
    }

    #[test]
    fn diagonal_is_a_ring_homomorphism(a in arb_bipoly(), b in arb_bipoly()) {
        prop_assert_eq!((&a * &b).diagonal(), &a.diagonal() * &b.diagonal());
        prop_assert_eq!((&a + &b).diagonal(), &a.diagonal() + &b.diagonal());
    }

    #[test]
    fn odd_exterior_elements_square_to_zero(v in arb_odd_ext(6)) {
        prop_assert!(ext_mul(&v, &v).is_zero());
    }

    #[test]
    fn exterior_product_anticommutes_on_odd_elements(
        v in arb_odd_ext(6),
        w in arb_odd_ext(6),
    ) {
        let vw = ext_mul(&v, &w);
        let wv = ext_mul(&w, &v);
        prop_assert_eq!(vw, wv.scale(&ratio(-1, 1)));
    }

    #[test]
    fn wedge_table_totals_are_binomial(dim_a in 0u64..=3, dim_b in 0u64..=3, k in 0u32..=4) {
        let mut v = HodgeTable::new();
        v.insert_add(2, 1, dim_a);
        v.insert_add(1, 2, dim_b);
        let n = dim_a + dim_b;
        let binom = |n: u64, k: u64| -> u64 {
            if k > n { return 0; }
            let k = k.min(n - k);
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        };
        prop_assert_eq!(wedge_table(&v, k).total(), binom(n, k as u64));
    }
}

#[test]
fn hodge_symmetric_inputs_produce_symmetric_wedges() {
    let v = HodgeTable::from_entries(&[(2, 1, 3), (1, 2, 3)]);
    for k in 0..=4 {
        assert!(wedge_table(&v, k).is_symmetric(), "k={k}");
    }
}

#[test]
fn division_rejects_non_multiples() {
    let a = &BiPoly::one() + &BiPoly::x();
    let b = &BiPoly::one() + &BiPoly::unit_monomial(1, 1);
    assert!(a.exact_div(&b).is_err());
}
