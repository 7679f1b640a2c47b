//! Independent oracles and randomized invariants for the public API.

use peisert_core::character::DirichletCharacter;
use peisert_core::charsums::{jacobi_exact, qbinom};
use peisert_core::graph::{build_graph, k3_formula, k4_formula};
use peisert_core::hypergeometric::{
    apply_generator, f32_exact, orbit, transform, transform_sign, F32Evaluator, HypTuple,
};
use peisert_core::{GaussianInt, UnitGroup};
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 7] = [17, 41, 73, 89, 97, 113, 137];

fn group(p: u64) -> UnitGroup {
    UnitGroup::new(p, 1, false).unwrap()
}

fn in_x() -> impl Strategy<Value = HypTuple> {
    let domain = HypTuple::domain();
    (0..domain.len()).prop_map(move |i| domain[i])
}

/// Census by direct enumeration over all 4-subsets with `x - y ∈ H`.
fn naive_k4(p: u64) -> u64 {
    let g = group(p);
    let n = p as i64;
    let member = |d: i64| g.dlog(g.reduce(d)).is_some_and(|k| k % 4 < 2);
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !member(b - a) {
                continue;
            }
            for c in b + 1..n {
                if !(member(c - a) && member(c - b)) {
                    continue;
                }
                for d in c + 1..n {
                    if member(d - a) && member(d - b) && member(d - c) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[test]
fn k4_census_matches_subset_enumeration() {
    for p in [17, 41] {
        let census = build_graph(p, 1, false).unwrap().k4_brute();
        assert_eq!(census, naive_k4(p));
    }
}

#[test]
fn formulas_beyond_the_reference_table() {
    for p in [113, 137, 193] {
        let graph = build_graph(p, 1, false).unwrap();
        assert_eq!(graph.k3_brute(), k3_formula(p, 1).unwrap(), "k3 at {p}");
        assert_eq!(graph.k4_brute(), k4_formula(p, 1).unwrap(), "k4 at {p}");
        assert_eq!(
            graph.k4_from_local().unwrap(),
            graph.k4_brute(),
            "local chain at {p}"
        );
    }
}

#[test]
fn rho_is_a_norm_p_element_with_fixed_residue() {
    // J(χ₄, χ₄) ≡ -1 (mod 2 + 2i) for p ≡ 1 (mod 4).
    for p in SMALL_PRIMES {
        let g = group(p);
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        let rho = jacobi_exact(chi4, chi4).unwrap();
        assert_eq!(rho.norm(), p as i64);
        let shifted = rho + GaussianInt::ONE;
        assert_eq!((shifted.re - shifted.im).rem_euclid(4), 0, "{rho} at {p}");
        assert_eq!(shifted.re.rem_euclid(2), 0);
    }
}

#[test]
fn table_orbit_representatives_are_distinct_orbits() {
    let reps = [
        [1, 1, 1, 0, 0],
        [3, 3, 3, 0, 0],
        [1, 3, 3, 2, 0],
        [3, 1, 1, 2, 0],
        [1, 1, 3, 0, 0],
    ];
    let orbits: Vec<_> = reps
        .iter()
        .map(|r| orbit(HypTuple::new(*r)).unwrap())
        .collect();
    for (i, a) in orbits.iter().enumerate() {
        for b in &orbits[i + 1..] {
            assert!(a.iter().all(|t| !b.contains(t)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transforms_preserve_value(t in in_x(), i in 1u8..=7, pi in 0usize..5) {
        let g = group(SMALL_PRIMES[pi]);
        let evaluator = F32Evaluator::new(&g).unwrap();
        let image = transform(i, t).unwrap();
        let sign = transform_sign(i, t, evaluator.table()).unwrap();
        prop_assert_eq!(evaluator.value(t), evaluator.value(image).scale(sign));
    }

    #[test]
    fn generator_cycles_return_to_start(t in in_x(), i in 1u8..=7) {
        let image = apply_generator(i, t).unwrap();
        prop_assert!(image.in_domain());
        // Some power of f_i returns to t within the group order.
        let mut u = image;
        let mut steps = 1;
        while u != t && steps < 24 {
            u = apply_generator(i, u).unwrap();
            steps += 1;
        }
        prop_assert_eq!(u, t);
    }

    #[test]
    fn conjugate_tuple_gives_conjugate_value(t in in_x()) {
        let g = group(41);
        let negated = HypTuple::new(t.entries().map(|v| -(v as i64)));
        prop_assert_eq!(f32_exact(negated, &g).unwrap(), f32_exact(t, &g).unwrap().conj());
    }

    #[test]
    fn jacobi_norm_is_p(pi in 0usize..7, a in 1i64..4, b in 1i64..4) {
        prop_assume!((a + b) % 4 != 0);
        let g = group(SMALL_PRIMES[pi]);
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        let j = jacobi_exact(chi4.pow(a), chi4.pow(b)).unwrap();
        prop_assert_eq!(j.norm(), SMALL_PRIMES[pi] as i64);
    }

    #[test]
    fn binomial_swap_symmetry(pi in 0usize..7, a in 0i64..4, b in 0i64..4) {
        let g = group(SMALL_PRIMES[pi]);
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        let (a, b) = (chi4.pow(a), chi4.pow(b));
        prop_assert_eq!(qbinom(a, b).unwrap(), qbinom(a, a * b.conj()).unwrap());
    }

    #[test]
    fn translations_and_unit_scalings_preserve_edges(shift in 0u64..73, k in 0u64..18) {
        let graph = build_graph(73, 1, false).unwrap();
        prop_assert!(graph.translation_preserves_edges(shift));
        // Multiplying by a fourth power of g maps H onto itself.
        let s = graph.group().power(4 * k);
        prop_assert!(graph.edges().all(|(u, v)| graph.adjacent(graph.group().mul(u, s), graph.group().mul(v, s))));
    }
}
