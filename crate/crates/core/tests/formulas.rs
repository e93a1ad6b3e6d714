use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polycensus::census::{
    burnside_sum, count_mgons, count_polygons, quadrilaterals_nearest, quadrilaterals_piecewise,
    totient_power_sum, triangles_nearest,
};
use polycensus::model::Symmetry;
use polycensus::Count;
use proptest::prelude::*;

#[test]
fn triangle_rounding_agrees_with_closed_form() {
    for n in 3..=10_000u64 {
        assert_eq!(triangles_nearest(n).unwrap(), count_mgons(n, 3), "n = {n}");
    }
}

#[test]
fn quadrilateral_rounding_agrees_with_closed_form() {
    for n in 4..=10_000u64 {
        let closed = count_mgons(n, 4);
        assert_eq!(quadrilaterals_nearest(n).unwrap(), closed, "n = {n}");
        let exact = quadrilaterals_piecewise(n);
        assert!(exact.is_integer(), "n = {n}");
        assert_eq!(exact.to_integer(), closed.to_bigint(), "n = {n}");
    }
}

#[test]
fn burnside_sums_divisible_by_group_order() {
    for n in 3..=120u64 {
        for symmetry in [Symmetry::Dihedral, Symmetry::Cyclic] {
            let order = symmetry.group_order(n as usize) as u64;
            let total = burnside_sum(n, None, symmetry).unwrap().into_biguint();
            assert!((total % order).is_zero(), "n={n} {symmetry:?}");
            for m in 3..=n {
                let s = burnside_sum(n, Some(m), symmetry).unwrap().into_biguint();
                assert!((s % order).is_zero(), "n={n} m={m} {symmetry:?}");
            }
        }
    }
}

#[test]
fn polygon_count_of_large_perimeter_has_expected_size() {
    // p(n) is within a factor (1 ± 2^(-n/2 + 1) n) of 2^(n-1)/n
    let n = 5_000u64;
    let p = count_polygons(n).unwrap();
    let leading = BigRational::new(BigInt::from(1) << (n - 1), BigInt::from(n));
    let ratio = BigRational::from_integer(p.to_bigint()) / leading;
    let err = (ratio - BigRational::from_integer(BigInt::from(1))).abs();
    assert!(err < BigRational::new(BigInt::from(1), BigInt::from(1) << 2000u32));
}

proptest! {
    #[test]
    fn totient_power_sum_integrality(n in 3u64..20_000) {
        prop_assert!((totient_power_sum(n).into_biguint() % n).is_zero());
    }

    #[test]
    fn mgons_positive_and_bounded_by_subsets(n in 3u64..150, m in 3u64..150) {
        prop_assume!(m <= n);
        // every m-gon orbit has a representative among the C(n,m) subsets
        let p = count_mgons(n, m);
        prop_assert!(p <= polycensus::numtheory::binomial(n, m as i64));
        prop_assert!(p > Count::zero() || m == 3 && n == 4);
    }
}
