//! Ground-truth propagation of i·ħ·dψ/dt = H(t)·ψ.
//!
//! The stepper samples H at the midpoint of each substep and applies the
//! exact exponential of that frozen Hamiltonian, so every step is exactly
//! unitary and the only error is the O(step²) midpoint sampling error. This
//! module shares nothing with the series pipeline beyond the base linear
//! algebra, which is what makes it usable as an independent oracle.

use crate::error::{Error, Result};
use crate::linalg::{
    expi_action_with, hermitian_eigendecompose, hermiticity_deviation, vec_norm, CMatrix, CVector,
    C64, HERMITICITY_TOL,
};

/// A propagated trajectory on a time grid.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<CVector>,
    /// Substep size actually used.
    pub step_used: f64,
    /// Per-time norm difference between the `substeps` and `2*substeps`
    /// solutions.
    pub estimated_error: Vec<f64>,
}

impl Trajectory {
    pub fn state_at(&self, k: usize) -> &CVector {
        &self.states[k]
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::Numerical {
            module: "oracle".into(),
            t: grid.first().copied().unwrap_or(0.0),
            msg: "time grid needs at least 2 points".into(),
        });
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::Numerical {
                module: "oracle".into(),
                t: w[0],
                msg: "time grid must be strictly increasing".into(),
            });
        }
    }
    Ok(())
}

fn propagate(
    h_of_t: &dyn Fn(f64) -> CMatrix,
    psi0: &CVector,
    grid: &[f64],
    substeps: usize,
    hbar: f64,
) -> Result<Vec<CVector>> {
    let mut states = Vec::with_capacity(grid.len());
    let mut psi = psi0.clone();
    states.push(psi.clone());
    for w in grid.windows(2) {
        let dt = (w[1] - w[0]) / substeps as f64;
        for s in 0..substeps {
            let t_mid = w[0] + (s as f64 + 0.5) * dt;
            let h = h_of_t(t_mid);
            let dev = hermiticity_deviation(&h);
            if dev >= HERMITICITY_TOL {
                return Err(Error::NotHermitian {
                    context: format!("H(t = {t_mid})"),
                    deviation: dev,
                    tol: HERMITICITY_TOL,
                });
            }
            let eig = hermitian_eigendecompose(&h, &format!("H(t = {t_mid})"))?;
            psi = expi_action_with(&eig, dt, &psi, hbar);
        }
        states.push(psi.clone());
    }
    Ok(states)
}

/// Evolve ψ0 across `grid` under H(t), with `substeps` midpoint-exponential
/// steps per grid interval. The error estimate comes from re-running with
/// doubled substeps.
pub fn evolve_exact(
    h_of_t: &dyn Fn(f64) -> CMatrix,
    psi0: &CVector,
    grid: &[f64],
    substeps: usize,
    hbar: f64,
) -> Result<Trajectory> {
    check_grid(grid)?;
    let substeps = substeps.max(1);
    let coarse = propagate(h_of_t, psi0, grid, substeps, hbar)?;
    let fine = propagate(h_of_t, psi0, grid, 2 * substeps, hbar)?;
    let estimated_error = coarse
        .iter()
        .zip(fine.iter())
        .map(|(a, b)| vec_norm(&(a - b)))
        .collect();
    Ok(Trajectory {
        times: grid.to_vec(),
        states: coarse,
        step_used: (grid[1] - grid[0]) / substeps as f64,
        estimated_error,
    })
}

/// Exact 2x2 propagator exp(-(i/ħ)Ht) for H = [[e1, v12], [conj(v12), e2]].
///
/// Splits H into its trace part and a traceless rest, and uses the
/// closed-form exponential of the latter (rotation-angle formula).
pub fn rabi_closed_form(e1: f64, e2: f64, v12: C64, t: f64, hbar: f64) -> CMatrix {
    let mean = 0.5 * (e1 + e2);
    let delta = 0.5 * (e1 - e2);
    let omega = (delta * delta + v12.norm_sqr()).sqrt();
    let angle = omega * t / hbar;
    let global = C64::from_polar(1.0, -mean * t / hbar);

    let (c, s) = (angle.cos(), angle.sin());
    // exp(-i angle n·sigma) = cos(angle) I - i sin(angle) n·sigma,
    // with n·sigma = [[delta, v12], [conj(v12), -delta]] / omega.
    let (f, g) = if omega == 0.0 {
        (C64::new(1.0, 0.0), C64::ZERO)
    } else {
        (C64::new(c, 0.0), C64::new(0.0, -s / omega))
    };
    let mut u = CMatrix::zeros(2, 2);
    u[(0, 0)] = global * (f + g * delta);
    u[(0, 1)] = global * g * v12;
    u[(1, 0)] = global * g * v12.conj();
    u[(1, 1)] = global * (f - g * delta);
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn two_level_h(e1: f64, e2: f64, v12: C64) -> CMatrix {
        CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(e1, 0.0), v12, v12.conj(), C64::new(e2, 0.0)],
        )
    }

    fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn constant_h_matches_direct_exponential() {
        let h = two_level_h(0.4, -0.2, C64::new(0.9, 0.3));
        let psi0 = CVector::from_vec(vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]);
        let grid = linspace(0.0, 3.0, 31);
        let traj = evolve_exact(&|_| h.clone(), &psi0, &grid, 3, 1.0).unwrap();
        let direct = crate::linalg::expi_action(&h, 3.0, &psi0, 1.0).unwrap();
        assert!(vec_norm(&(traj.states.last().unwrap() - direct)) < 1e-10);
    }

    #[test]
    fn rabi_diagonal_limit() {
        let u = rabi_closed_form(0.3, -0.7, C64::ZERO, 2.0, 1.0);
        assert!((u[(0, 0)] - C64::from_polar(1.0, -0.6)).norm() < 1e-14);
        assert!((u[(1, 1)] - C64::from_polar(1.0, 1.4)).norm() < 1e-14);
        assert!(u[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn rabi_pauli_x_half_turn() {
        // exp(-i sigma_x pi) = -I
        let u = rabi_closed_form(0.0, 0.0, C64::ONE, std::f64::consts::PI, 1.0);
        let minus_eye = CMatrix::identity(2, 2).scale(-1.0);
        assert!(max_abs_diff(&u, &minus_eye) < 1e-14);
    }

    #[test]
    fn rabi_unitary_and_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let e1 = rng.gen_range(-1.0..1.0);
            let e2 = rng.gen_range(-1.0..1.0);
            let v12 = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let t = rng.gen_range(0.2..4.0);
            let u = rabi_closed_form(e1, e2, v12, t, 1.0);
            let gram = u.adjoint() * &u;
            assert!(max_abs_diff(&gram, &CMatrix::identity(2, 2)) < 1e-14);

            let h = two_level_h(e1, e2, v12);
            let psi0 = crate::testutil::random_state(2, &mut rng);
            let grid = linspace(0.0, t, 41);
            let traj = evolve_exact(&|_| h.clone(), &psi0, &grid, 8, 1.0).unwrap();
            let direct = &u * &psi0;
            assert!(vec_norm(&(traj.states.last().unwrap() - direct)) < 1e-9);
        }
    }

    #[test]
    fn step_halving_is_second_order() {
        // Smoothly driven two-level Hamiltonian; Richardson ratio close to 4.
        let h = |t: f64| {
            two_level_h(
                0.3 * (0.7 * t).sin(),
                -0.2,
                C64::new((0.5 * t).cos(), 0.2 * (0.3 * t).sin()),
            )
        };
        let psi0 = CVector::from_vec(vec![C64::ONE, C64::ZERO]);
        let grid = linspace(0.0, 4.0, 9);
        let reference = propagate(&h, &psi0, &grid, 256, 1.0).unwrap();
        let coarse = propagate(&h, &psi0, &grid, 4, 1.0).unwrap();
        let fine = propagate(&h, &psi0, &grid, 8, 1.0).unwrap();
        let err_c = vec_norm(&(coarse.last().unwrap() - reference.last().unwrap()));
        let err_f = vec_norm(&(fine.last().unwrap() - reference.last().unwrap()));
        let ratio = err_c / err_f;
        assert!(
            (ratio - 4.0).abs() < 1.0,
            "Richardson ratio {ratio} outside 4 ± 1"
        );
    }

    #[test]
    fn rejects_non_hermitian_sample() {
        let h = |t: f64| {
            if t > 1.0 {
                CMatrix::from_row_slice(2, 2, &[C64::ZERO, C64::ONE, C64::new(0.5, 0.0), C64::ZERO])
            } else {
                CMatrix::zeros(2, 2)
            }
        };
        let psi0 = CVector::from_vec(vec![C64::ONE, C64::ZERO]);
        let grid = linspace(0.0, 2.0, 5);
        let err = evolve_exact(&h, &psi0, &grid, 1, 1.0).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("H(t = "), "diagnostic should name the time: {msg}");
    }

    #[test]
    fn norm_drift_stays_tiny() {
        let h = |t: f64| two_level_h((0.9 * t).cos(), -0.4, C64::new(1.0, 0.1 * t.sin()));
        let psi0 = CVector::from_vec(vec![C64::ONE, C64::ZERO]);
        let grid = linspace(0.0, 10.0, 101);
        let traj = evolve_exact(&h, &psi0, &grid, 50, 1.0).unwrap();
        for s in &traj.states {
            assert!((vec_norm(s) - 1.0).abs() < 1e-12);
        }
    }
}
