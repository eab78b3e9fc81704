//! Shared helpers for unit tests.

use rand::prelude::*;

use crate::linalg::{vec_norm, CMatrix, CVector, C64};

pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let raw = CMatrix::from_fn(dim, dim, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    (&raw + raw.adjoint()).scale(0.5)
}

pub fn random_state(dim: usize, rng: &mut impl Rng) -> CVector {
    let raw = CVector::from_fn(dim, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let n = vec_norm(&raw);
    raw.scale(1.0 / n)
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}
