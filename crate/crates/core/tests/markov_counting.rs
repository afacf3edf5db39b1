use num_bigint::BigInt;
use num_traits::Signed;
use transfer_core::markov::{
    binomial, brute_force_order_preserving, build_transition_matrix, count_chains_bounded,
    count_surjective_order_preserving, ehrhart_order_polytope, ehrhart_polynomial, enumerate_base_states,
    structure_formula_entry, BasePoset,
};

fn cross_poset() -> BasePoset {
    BasePoset::from_bits(&[&[1, 0], &[1, 1]]).unwrap()
}

/// Bases whose surjective maps always use an interval of labels per level.
fn interval_forcing() -> Vec<BasePoset> {
    vec![BasePoset::chain(), BasePoset::from_bits(&[&[1, 1], &[1, 1]]).unwrap()]
}

#[test]
fn structure_formula_reconstructs_every_entry() {
    let mut checked = 0;
    for m in 1..=3 {
        let states = enumerate_base_states(m);
        for p in BasePoset::all(m) {
            let mtx = build_transition_matrix(&p);
            for i in 0..states.len() {
                for j in 0..states.len() {
                    let formula = structure_formula_entry(&p, &states, i, j).unwrap();
                    assert_eq!(&formula, mtx.entry(i, j), "m={m} {:?} ({i},{j})", p.cover_matrix());
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 1 + 4 * 9 + 64 * 169);
}

#[test]
fn cross_matrix_entries() {
    let mtx = build_transition_matrix(&cross_poset());
    let shown: Vec<Vec<String>> =
        (0..3).map(|i| (0..3).map(|j| mtx.entry(i, j).to_string()).collect()).collect();
    assert_eq!(shown[0][1], "y + xy^2");
    assert_eq!(shown[0][0], "1 + xy");
    assert_eq!(mtx.num_monomials(), 19);
}

#[test]
fn chain_identity() {
    let mtx = build_transition_matrix(&BasePoset::chain());
    for n in 1..=6 {
        for k in 0..=6 {
            let sum: BigInt = (1..=k + 1).map(|i| binomial(k + 1, i) * binomial(n - 1, i - 1)).sum();
            assert_eq!(binomial(n + k, k), sum);
            assert_eq!(ehrhart_order_polytope(&mtx, n - 1, k), sum, "n={n} k={k}");
        }
    }
}

#[test]
fn surjective_counts_on_interval_forcing_bases() {
    for p in interval_forcing() {
        let mtx = build_transition_matrix(&p);
        for n in 0..=2 {
            for k in 1..=4 {
                let brute = brute_force_order_preserving(&p, n, k, true).unwrap();
                assert_eq!(count_surjective_order_preserving(&mtx, n, k), brute, "{:?} n={n} k={k}", p.cover_matrix());
                let all = brute_force_order_preserving(&p, n, k, false).unwrap();
                assert_eq!(ehrhart_order_polytope(&mtx, n, k - 1), all);
            }
        }
    }
}

#[test]
fn gapped_levels_escape_the_state_model() {
    // frozen: surjective maps onto [3] of two levels, model vs enumeration
    let cases = [(vec![&[1u8, 0][..], &[0, 1][..]], 8, 12), (vec![&[1, 0][..], &[1, 1][..]], 8, 10)];
    for (rows, model, brute) in cases {
        let p = BasePoset::from_bits(&rows).unwrap();
        let mtx = build_transition_matrix(&p);
        assert_eq!(count_surjective_order_preserving(&mtx, 1, 3), BigInt::from(model));
        assert_eq!(brute_force_order_preserving(&p, 1, 3, true).unwrap(), BigInt::from(brute));
    }
}

#[test]
fn bounded_counts_grow_with_the_bound() {
    for p in BasePoset::all(2) {
        let mtx = build_transition_matrix(&p);
        for n in 0..=2 {
            let counts: Vec<BigInt> = (1..=5).map(|k| count_chains_bounded(&mtx, n, k)).collect();
            assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
        }
    }
}

#[test]
fn ehrhart_coefficients_are_positive() {
    for p in interval_forcing() {
        let mtx = build_transition_matrix(&p);
        for n in 0..=2 {
            let coeffs = ehrhart_polynomial(&mtx, n).unwrap();
            assert!(coeffs.iter().all(|c| c.is_positive()), "{:?} n={n}: {coeffs:?}", p.cover_matrix());
        }
    }
}
