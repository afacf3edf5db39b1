#![allow(dead_code)]

use transfer_core::graph::{automorphism_group, cycle_graph, path_graph};
use transfer_core::orbits::IndependentPartition;
use transfer_core::poly::{BivarPolynomial, IntPolynomial, RationalGenFun};
use transfer_core::{build_l, CompactTransferMatrix, Graph};

/// Polynomial from descending integer coefficients.
pub fn kp(desc: &[i64]) -> IntPolynomial {
    IntPolynomial::from_descending(desc)
}

pub fn full_ctm(g: &Graph) -> CompactTransferMatrix {
    build_l(g, &automorphism_group(g, None).unwrap()).unwrap()
}

pub fn p3() -> Graph {
    path_graph(3).unwrap()
}

pub fn c5() -> Graph {
    cycle_graph(5).unwrap()
}

pub fn p3_l() -> Vec<Vec<IntPolynomial>> {
    vec![
        vec![kp(&[1, -3, 3]), kp(&[1, -6, 13, -10])],
        vec![kp(&[1, -4, 5]), kp(&[1, -6, 14, -13])],
    ]
}

/// Reference representatives of the three `C5` classes (as block labels)
/// in reference order: all singletons, `1|24|35`, `1|2|4|35`.
pub fn c5_reference_representatives() -> Vec<IndependentPartition> {
    [[0, 1, 2, 3, 4], [0, 1, 2, 1, 2], [0, 1, 2, 3, 2]]
        .iter()
        .map(|l| IndependentPartition::from_labels(l))
        .collect()
}

pub fn c5_reference_l() -> Vec<Vec<IntPolynomial>> {
    vec![
        vec![kp(&[1, -15, 95, -325, 609, -501]), kp(&[5, -40, 125, -150]), kp(&[5, -55, 250, -565, 535])],
        vec![kp(&[1, -15, 93, -301, 510, -360]), kp(&[5, -36, 96, -93]), kp(&[5, -53, 224, -449, 357])],
        vec![kp(&[1, -15, 94, -313, 559, -428]), kp(&[5, -38, 110, -119]), kp(&[5, -54, 237, -506, 441])],
    ]
}

pub fn c5_reference_weights() -> Vec<IntPolynomial> {
    let ff = IntPolynomial::falling_factorial;
    vec![ff(5), ff(3).scale(&5.into()), ff(4).scale(&5.into())]
}

/// `k(k−1)(k−2)(p₁z + p₀) / (q₂z² + q₁z + q₀)`.
pub fn c5_reference_xi() -> RationalGenFun {
    let factor = IntPolynomial::falling_factorial(3);
    let p0 = kp(&[1, -2, 2]);
    let p1 = kp(&[-1, 11, -44, 73, -42, 14]);
    let q0 = kp(&[1]);
    let q1 = kp(&[-1, 10, -46, 124, -198, 148]);
    let q2 = kp(&[1, -19, 159, -767, 2339, -4627, 5800, -4212, 1362]);
    RationalGenFun::new(
        BivarPolynomial::new(vec![&factor * &p0, &factor * &p1]),
        BivarPolynomial::new(vec![q0, q1, q2]),
    )
    .unwrap()
}

/// Index of each reference `C5` class in our ordering.
pub fn c5_index_map(ctm: &CompactTransferMatrix) -> Vec<usize> {
    c5_reference_representatives()
        .iter()
        .map(|r| ctm.orbit_set.class_of(r).expect("reference representative is a partition"))
        .collect()
}
