mod common;

use capax::capacities::{capacity, capacity_lattice, capacity_polar, Method};
use capax::contact::{contact_from_capacity, smallest_prime_factor};
use capax::toric_geometry::polar_slice;
use capax::{CapacityConfig, Rational, ToricDomain};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational(max: i64) -> impl Strategy<Value = Rational> {
    (1..=max * 6, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn domain() -> impl Strategy<Value = ToricDomain> {
    prop_oneof![
        prop::collection::vec(rational(6), 1..=3).prop_map(|a| ToricDomain::ellipsoid(a).unwrap()),
        prop::collection::vec(rational(6), 1..=3).prop_map(|a| ToricDomain::polydisk(a).unwrap()),
        (rational(6), 1usize..=3).prop_map(|(a, d)| ToricDomain::ball(a, d).unwrap()),
        (any::<u64>(), 1usize..=3).prop_map(|(seed, d)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ToricDomain::polytope(random_polytope(&mut rng, d, 8)).unwrap()
        }),
    ]
}

fn cfg() -> CapacityConfig {
    CapacityConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_and_polar_agree(d in domain(), k in 1u64..=10) {
        let l = capacity_lattice(&d, k, &cfg()).unwrap();
        let p = capacity_polar(&d, k, &cfg()).unwrap();
        prop_assert_eq!(&l.value, &p.value);
        prop_assert_eq!(d.support_lattice(&l.witness), l.value.clone());
        prop_assert_eq!(l.witness.iter().sum::<u64>(), k);
        // the polar witness is a corner of the slice at c_k reaching k
        prop_assert!(polar_slice(&d, p.value.clone()).unwrap().contains(&p.witness_z));
        prop_assert!(p.corner().iter().sum::<u64>() >= k);
    }

    #[test]
    fn subadditive(d in domain(), k in 1u64..=6, l in 1u64..=6) {
        let c = |n| capacity(&d, n, Method::Lattice, &cfg()).unwrap().c_k;
        prop_assert!(c(k + l) <= c(k) + c(l));
        prop_assert!(c(k) <= c(k + 1));
    }

    #[test]
    fn conformal(d in domain(), s in rational(4), k in 1u64..=6) {
        let scaled = d.scale(&s).unwrap();
        let c = capacity_polar(&d, k, &cfg()).unwrap().value;
        let cs = capacity_polar(&scaled, k, &cfg()).unwrap().value;
        prop_assert_eq!(cs, &s * &c);
    }

    #[test]
    fn slices_grow_with_t(d in domain(), t in rational(10), dt in rational(4)) {
        let small = polar_slice(&d, t.clone()).unwrap().max_lattice_functional().unwrap();
        let big = polar_slice(&d, &t + &dt).unwrap().max_lattice_functional().unwrap();
        prop_assert!(small.value <= big.value);
        prop_assert!(d.support_lattice(&small.corner) <= t);
    }

    #[test]
    fn contact_capacity_is_the_least_admissible_odd(c in rational(30), norm in (1i64..=20, 2i64..=21)) {
        prop_assume!(norm.0 < norm.1);
        let norm = Rational::new(norm.0, norm.1);
        let ell = contact_from_capacity(&c, &norm);
        let admissible = |l: u64| {
            Rational::from(l) / Rational::from(smallest_prime_factor(l).unwrap()) * norm.clone() < Rational::one()
        };
        prop_assert!(ell % 2 == 1 && ell >= 3);
        prop_assert!(Rational::from(ell) >= c);
        prop_assert!(admissible(ell));
        let start = c.ceil_i64().max(3) as u64;
        for l in (start..ell).filter(|l| l % 2 == 1) {
            prop_assert!(!admissible(l), "{} is smaller and admissible", l);
        }
        // raising c within (ℓ−2, ℓ] leaves [c] unchanged
        let bump = (Rational::from(ell) - &c) / Rational::from(2u64);
        prop_assert_eq!(contact_from_capacity(&(&c + &bump), &norm), ell);
    }

    #[test]
    fn domain_json_round_trips(d in domain()) {
        let text = serde_json::to_string(&d).unwrap();
        let back: ToricDomain = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, d);
    }
}

#[test]
fn hull_oracle_sanity() {
    let sq: Vec<Vec<Rational>> = [(0, 0), (2, 0), (0, 2), (2, 2)]
        .iter()
        .map(|&(a, b)| vec![r(a, 1), r(b, 1)])
        .collect();
    assert!(in_hull(&[r(1, 1), r(1, 1)], &sq));
    assert!(in_hull(&[r(2, 1), r(1, 3)], &sq));
    assert!(!in_hull(&[r(5, 2), r(1, 1)], &sq));
    let mut with_inner = sq.clone();
    with_inner.push(vec![r(1, 1), r(2, 1)]);
    assert_eq!(extreme_points(&with_inner), sq.iter().cloned().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    assert_eq!(downward_closed_vertices(&[vec![r(3, 1), r(1, 1)]]).len(), 4);
    assert_eq!(brute_capacity(&sq, 3), r(6, 1));
    assert_eq!(brute_lattice_max(&sq, &r(5, 1)), 2);
}
