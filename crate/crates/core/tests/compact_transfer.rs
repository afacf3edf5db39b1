mod common;

use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use transfer_core::graph::{automorphism_group, cycle_graph, layered_path_product, path_graph};
use transfer_core::oracle::{enumerate_proper_colorings, PartialColoring};
use transfer_core::orbits::IndependentPartition;
use transfer_core::transfer::l_row_from;
use transfer_core::{oracle, Graph, Permutation};

#[test]
fn p3_matrix_and_value_at_four() {
    let m = full_ctm(&p3());
    assert_eq!(m.l.rows(), p3_l().as_slice());
    let at4 = m.l.eval(&BigInt::from(4));
    assert_eq!(at4, vec![vec![BigInt::from(7), BigInt::from(10)], vec![BigInt::from(5), BigInt::from(11)]]);
}

#[test]
fn c5_matrix_and_weights() {
    let m = full_ctm(&c5());
    assert_eq!(m.orbit_set.sk_orbits.len(), 11);
    let idx = c5_index_map(&m);
    let reference = c5_reference_l();
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            assert_eq!(m.l.get(i, j), &reference[a][b], "entry ({a}, {b})");
        }
        assert_eq!(m.weights[i], c5_reference_weights()[a]);
    }
}

#[test]
fn column_degree_equals_color_count() {
    for g in [p3(), c5(), cycle_graph(4).unwrap(), Graph::complete(3), path_graph(4).unwrap()] {
        let m = full_ctm(&g);
        for i in 0..m.orbit_count() {
            for (j, class) in m.orbit_set.orbits.iter().enumerate() {
                assert_eq!(m.l.get(i, j).degree(), Some(class.colors));
            }
        }
        for k in g.num_vertices()..g.num_vertices() + 3 {
            for row in m.l.eval(&BigInt::from(k)) {
                assert!(row.iter().all(|x| *x >= BigInt::from(0)));
            }
        }
    }
}

#[test]
fn every_member_gives_the_same_row() {
    for g in [cycle_graph(4).unwrap(), cycle_graph(6).unwrap(), path_graph(5).unwrap()] {
        let m = full_ctm(&g);
        for (i, class) in m.orbit_set.orbits.iter().enumerate() {
            for member in &class.members {
                let row = l_row_from(&m.orbit_set, member, g.num_vertices()).unwrap();
                assert_eq!(row.as_slice(), m.l.rows()[i].as_slice());
            }
        }
    }
}

/// `m_i · s_i↓ · L_ij(k)` = colorings of `G × P_2` with layer partitions in
/// classes `i` and `j`.
#[test]
fn orbit_size_identity() {
    for g in [p3(), cycle_graph(4).unwrap(), Graph::complete(3)] {
        let n = g.num_vertices();
        let m = full_ctm(&g);
        let index = m.orbit_set.class_index();
        let product = layered_path_product(&g, 2).unwrap();
        for k in n..=n + 2 {
            let p = m.orbit_count();
            let mut counts = vec![vec![0u64; p]; p];
            for c in enumerate_proper_colorings(&product, k) {
                let i = index[&IndependentPartition::from_labels(&c[..n])];
                let j = index[&IndependentPartition::from_labels(&c[n..])];
                counts[i][j] += 1;
            }
            for i in 0..p {
                for j in 0..p {
                    let lhs = m.weights[i].eval_i64(k as i64) * m.l.get(i, j).eval_i64(k as i64);
                    assert_eq!(lhs, BigInt::from(counts[i][j]), "k={k} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn trivial_group_also_counts_correctly() {
    let g = p3();
    let m = transfer_core::build_l(&g, &[Permutation::identity(3)]).unwrap();
    assert_eq!(m.orbit_count(), 2);
    let g = cycle_graph(4).unwrap();
    let m = transfer_core::build_l(&g, &[Permutation::identity(4)]).unwrap();
    assert_eq!(m.orbit_count(), 4);
    for n in 1..=3 {
        assert_eq!(m.chromatic_product_path(n).unwrap(), full_ctm(&g).chromatic_product_path(n).unwrap());
    }
}

#[test]
fn restricted_power_matches_layered_enumeration() {
    let m = full_ctm(&p3());
    assert_eq!(m.restricted_count_power(0, 0, 1, 4).unwrap(), BigInt::from(7));
    // P3 × P6, first layer (1,2,1), last layer partition {{0,2},{1}}
    let product = layered_path_product(&p3(), 6).unwrap();
    let fixed = PartialColoring::prefix(&product, &[1, 2, 1]).unwrap();
    let target = IndependentPartition::from_labels(&[0, 1, 0]);
    let direct = oracle::count_extensions_where(&product, &fixed, 3, |c| {
        IndependentPartition::from_labels(&c[15..]) == target
    })
    .unwrap();
    assert_eq!(m.restricted_count_power(0, 0, 5, 3).unwrap(), BigInt::from(direct));
    for k in 3..6 {
        let at = m.l.eval(&BigInt::from(k));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.restricted_count_power(i, j, 1, k).unwrap(), at[i][j]);
            }
        }
    }
}

#[test]
fn builds_c6_quickly() {
    let start = Instant::now();
    let m = full_ctm(&cycle_graph(6).unwrap());
    assert_eq!(m.orbit_set.sk_orbits.len(), 41);
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn rejects_foreign_generators() {
    let g = p3();
    let bad = Permutation::new(vec![1, 0, 2]).unwrap();
    assert!(transfer_core::build_l(&g, &[bad]).is_err());
    assert!(automorphism_group(&g, None).unwrap().len() == 2);
}
