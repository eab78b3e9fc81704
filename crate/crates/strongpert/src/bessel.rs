//! First-kind Bessel functions of integer order.
//!
//! Evaluation strategy: ascending power series when |order| <= |z| (the series
//! converges quickly and without cancellation trouble in that regime), and
//! downward recurrence normalized by the completeness identity
//! J0 + 2*(J2 + J4 + ...) = 1 when |order| > |z|, where upward recurrence
//! would be unstable. No external dependency is involved.

const MAX_SERIES_ITER: usize = 400;
const RESCALE_LIMIT: f64 = 1e250;

/// Largest accepted |order|.
pub const MAX_ORDER: i32 = 10_000;

/// J_order(z) for integer order.
///
/// Panics if |order| > 10_000 or z is not finite.
pub fn bessel_j(order: i32, z: f64) -> f64 {
    assert!(
        order.abs() <= MAX_ORDER,
        "bessel_j: |order| = {} exceeds {MAX_ORDER}",
        order.abs()
    );
    assert!(z.is_finite(), "bessel_j: z = {z} is not finite");

    // J_{-m}(z) = (-1)^m J_m(z) and J_m(-z) = (-1)^m J_m(z).
    let mut sign = 1.0;
    let n = if order < 0 {
        if order % 2 != 0 {
            sign = -sign;
        }
        order.unsigned_abs() as usize
    } else {
        order as usize
    };
    let x = if z < 0.0 {
        if n % 2 != 0 {
            sign = -sign;
        }
        -z
    } else {
        z
    };

    if x == 0.0 {
        return if n == 0 { sign } else { 0.0 };
    }

    let value = if (n as f64) <= x {
        ascending_series(n, x)
    } else {
        normalized_descent(x, n)[n]
    };
    sign * value
}

/// All of J_0(z) ... J_nmax(z) in one normalized downward recurrence.
///
/// Shared by the momentum-lattice code, which needs whole rows of orders at
/// once. Agrees with [`bessel_j`] to machine precision on overlapping inputs.
pub fn bessel_j_row(z: f64, nmax: usize) -> Vec<f64> {
    assert!(nmax as i32 <= MAX_ORDER, "bessel_j_row: nmax too large");
    assert!(z.is_finite(), "bessel_j_row: z = {z} is not finite");
    let x = z.abs();
    if x == 0.0 {
        let mut row = vec![0.0; nmax + 1];
        row[0] = 1.0;
        return row;
    }
    let mut row = normalized_descent(x, nmax);
    row.truncate(nmax + 1);
    if z < 0.0 {
        for (m, v) in row.iter_mut().enumerate() {
            if m % 2 != 0 {
                *v = -*v;
            }
        }
    }
    row
}

fn ascending_series(n: usize, x: f64) -> f64 {
    // J_n(x) = sum_k (-1)^k / (k! (n+k)!) (x/2)^{2k+n}
    let half = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / k as f64;
    }
    let mut sum = term;
    let x2 = -half * half;
    for k in 1..=MAX_SERIES_ITER {
        term *= x2 / (k as f64 * (n + k) as f64);
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs().max(f64::MIN_POSITIVE) && k > 2 {
            break;
        }
    }
    sum
}

fn descent_start(x: f64, nmax: usize) -> usize {
    let base = nmax.max(x.ceil() as usize);
    let margin = 18 + (2.0 * (base as f64 + 40.0).sqrt()).ceil() as usize;
    let start = base + margin;
    start + (start % 2)
}

/// Downward recurrence from a high starting order, normalized with
/// J0 + 2*sum_{k>=1} J_{2k} = 1. Returns orders 0..=start.
fn normalized_descent(x: f64, nmax: usize) -> Vec<f64> {
    let start = descent_start(x, nmax);
    let mut row = vec![0.0; start + 2];
    row[start + 1] = 0.0;
    row[start] = 1e-300;
    let mut norm = if start % 2 == 0 { 2.0 * row[start] } else { 0.0 };
    for k in (1..=start).rev() {
        row[k - 1] = (2.0 * k as f64 / x) * row[k] - row[k + 1];
        if k - 1 > 0 && (k - 1) % 2 == 0 {
            norm += 2.0 * row[k - 1];
        }
        if row[k - 1].abs() > RESCALE_LIMIT {
            let s = 1.0 / RESCALE_LIMIT;
            for v in row[k - 1..].iter_mut() {
                *v *= s;
            }
            norm *= s;
        }
    }
    norm += row[0];
    let inv = 1.0 / norm;
    for v in row.iter_mut() {
        *v *= inv;
    }
    row
}
