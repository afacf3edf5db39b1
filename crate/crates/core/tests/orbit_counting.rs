use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transfer_core::graph::{cycle_graph, path_graph};
use transfer_core::markov::binomial;
use transfer_core::orbits::{bell_number, color_orbits, orbit_count_f};
use transfer_core::Graph;

#[test]
fn bell_prefix() {
    let expect = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
    for (n, b) in expect.iter().enumerate() {
        assert_eq!(bell_number(n), BigInt::from(*b));
    }
}

#[test]
fn paths_give_bell_numbers() {
    for n in 2..=9 {
        let g = path_graph(n).unwrap();
        assert_eq!(orbit_count_f(&g), bell_number(n - 1), "P{n}");
        assert_eq!(BigInt::from(color_orbits(&g).len()), bell_number(n - 1));
    }
}

#[test]
fn cycles_give_alternating_bell_sums() {
    for n in 3..=9 {
        let expect: BigInt = (1..n)
            .map(|i| if (n - 1 - i) % 2 == 0 { bell_number(i) } else { -bell_number(i) })
            .sum();
        let g = cycle_graph(n).unwrap();
        assert_eq!(orbit_count_f(&g), expect, "C{n}");
        assert_eq!(BigInt::from(color_orbits(&g).len()), expect);
    }
}

#[test]
fn bell_recurrence() {
    for n in 0..=10 {
        let rhs: BigInt = (1..=n + 1)
            .map(|i| {
                let term = binomial(n, i - 1) * bell_number(i);
                if (n + 1 - i) % 2 == 0 { term } else { -term }
            })
            .sum();
        assert_eq!(bell_number(n), rhs, "n={n}");
    }
}

#[test]
fn deletion_contraction_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.8);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::new(n, edges).unwrap();
        assert_eq!(orbit_count_f(&g), BigInt::from(color_orbits(&g).len()), "{g}");
    }
}

#[test]
fn edgeless_and_complete() {
    assert_eq!(orbit_count_f(&Graph::empty(4)), BigInt::from(15));
    assert_eq!(orbit_count_f(&Graph::complete(5)), BigInt::from(1));
}
