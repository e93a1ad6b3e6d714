use polycensus::census::{
    count_mgons, count_mgons_cyclic, count_mgons_via_burnside, count_polygons,
    count_polygons_cyclic, count_polygons_via_burnside,
};
use polycensus::model::{dihedral_group, Symmetry};
use polycensus::oracle::{fix_profile, orbit_census, TupleSet};
use polycensus::{fix_mgons, fix_polygons, Count};

#[test]
fn fix_formulas_match_exhaustive_scan() {
    for n in 3..=16usize {
        for sigma in dihedral_group(n) {
            let class = sigma.classify();
            let profile = fix_profile(&sigma).unwrap();
            assert_eq!(
                fix_polygons(n as u64, class).unwrap(),
                Count::from(profile.count(TupleSet::Good, None)),
                "n={n} {sigma} ({class})"
            );
            for m in 3..=n {
                assert_eq!(
                    fix_mgons(n as u64, m as u64, class).unwrap(),
                    Count::from(profile.count(TupleSet::Good, Some(m))),
                    "n={n} m={m} {sigma} ({class})"
                );
            }
        }
    }
}

#[test]
fn dihedral_counts_match_orbit_enumeration() {
    for n in 3..=18usize {
        let census = orbit_census(n, Symmetry::Dihedral).unwrap();
        let n64 = n as u64;
        assert_eq!(
            count_polygons(n64).unwrap(),
            Count::from(census.total()),
            "p({n})"
        );
        assert_eq!(
            count_polygons_via_burnside(n64).unwrap(),
            Count::from(census.total())
        );
        for m in 3..=n {
            let expected = Count::from(census.weight(m));
            assert_eq!(count_mgons(n64, m as u64), expected, "p({m},{n})");
            assert_eq!(count_mgons_via_burnside(n64, m as u64).unwrap(), expected);
        }
    }
}

#[test]
fn cyclic_counts_match_orbit_enumeration() {
    for n in 3..=18usize {
        let census = orbit_census(n, Symmetry::Cyclic).unwrap();
        let n64 = n as u64;
        assert_eq!(
            count_polygons_cyclic(n64).unwrap(),
            Count::from(census.total()),
            "p'({n})"
        );
        for m in 3..=n {
            assert_eq!(
                count_mgons_cyclic(n64, m as u64),
                Count::from(census.weight(m)),
                "p'({m},{n})"
            );
        }
    }
}

#[test]
fn cyclic_spot_values_from_enumeration() {
    let c12 = orbit_census(12, Symmetry::Cyclic).unwrap();
    assert_eq!(c12.weight(3), 4);
    let c8 = orbit_census(8, Symmetry::Cyclic).unwrap();
    assert_eq!(c8.weight(4), 6);
    let c10 = orbit_census(10, Symmetry::Cyclic).unwrap();
    assert_eq!(count_polygons_cyclic(10).unwrap(), Count::from(c10.total()));
}
