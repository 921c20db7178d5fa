#![allow(dead_code)]

use rigidity_core::lefschetz::{FixedPointComponent, ManifoldFixture};

fn comp(sign: i64, n: &[i64], m: &[i64]) -> FixedPointComponent {
    FixedPointComponent::new(sign, n.to_vec(), m.to_vec())
}

fn fixture(name: &str, d: usize, l: usize, components: Vec<FixedPointComponent>) -> ManifoldFixture {
    ManifoldFixture { name: name.into(), d, l, components }
}

pub fn s2() -> ManifoldFixture {
    fixture("s2", 1, 0, vec![comp(1, &[1], &[]), comp(1, &[-1], &[])])
}

pub fn s4() -> ManifoldFixture {
    fixture("s4", 2, 0, vec![comp(1, &[1, 2], &[]), comp(1, &[1, -2], &[])])
}

pub fn s6() -> ManifoldFixture {
    fixture("s6", 3, 0, vec![comp(1, &[1, 2, 3], &[]), comp(1, &[1, 2, -3], &[])])
}

pub fn s2xs2() -> ManifoldFixture {
    fixture(
        "s2xs2",
        2,
        1,
        vec![comp(1, &[1, 2], &[0]), comp(1, &[1, -2], &[0]), comp(1, &[-1, 2], &[0]), comp(1, &[-1, -2], &[0])],
    )
}

pub fn onepoint() -> ManifoldFixture {
    fixture("onepoint", 1, 0, vec![comp(1, &[1], &[])])
}

pub fn anomalous() -> ManifoldFixture {
    fixture("anomalous", 1, 2, vec![comp(1, &[1], &[1, -1]), comp(1, &[-1], &[2, 0])])
}

pub fn rigid() -> Vec<ManifoldFixture> {
    vec![s2(), s4(), s6(), s2xs2()]
}

pub fn all() -> Vec<ManifoldFixture> {
    vec![s2(), s4(), s6(), s2xs2(), onepoint(), anomalous()]
}
