use super::SolveError;

/// Number of eigenvalues of a symmetric tridiagonal matrix strictly below
/// `lambda`, by the Sturm sequence of LDLT pivots.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let guard = 1e-300;
    let mut count = 0usize;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `k` eigenvalues of a symmetric tridiagonal matrix by bisection.
pub fn tridiag_eigenvalues(diag: &[f64], off: &[f64], k: usize) -> Result<Vec<f64>, SolveError> {
    let n = diag.len();
    if k > n {
        return Err(SolveError::TooManyStates {
            requested: k,
            resolvable: n,
        });
    }
    // Gershgorin bounds
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let el = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let er = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - el - er);
        hi = hi.max(diag[i] + el + er);
    }
    let span = (hi - lo).max(1.0);
    lo -= 1e-12 * span;
    hi += 1e-12 * span;

    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1e-30) || a >= b {
                break;
            }
            if sturm_count(diag, off, mid) <= j {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

/// Eigenvector by inverse iteration with the converged eigenvalue, two
/// iterations with renormalization; the caller reorthogonalizes
/// near-degenerate pairs.
pub fn inverse_iteration(diag: &[f64], off: &[f64], eigenvalue: f64) -> Vec<f64> {
    let n = diag.len();
    // deterministic, sign-alternating start avoids accidental orthogonality
    let mut v: Vec<f64> = (0..n)
        .map(|i| {
            let t = (i as f64 + 1.0) * 0.7511;
            (t.sin() + 0.25).signum() * (0.5 + (t * 1.3).cos().abs())
        })
        .collect();
    normalize(&mut v);
    // small spectral-scale shift keeps the factorization finite at an exact eigenvalue
    let scale: f64 = diag
        .iter()
        .map(|d| d.abs())
        .fold(0.0, f64::max)
        .max(1.0);
    let shift = eigenvalue + 1e-13 * scale;
    for _ in 0..3 {
        v = solve_shifted(diag, off, shift, &v);
        normalize(&mut v);
    }
    v
}

/// Solve (T - shift I) x = b for tridiagonal symmetric T via LU with partial
/// pivoting (standard inverse-iteration kernel).
fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, b: &[f64]) -> Vec<f64> {
    let n = diag.len();
    // Working bands: sub (a), main (d), sup (c), and a fill band (e) for pivoting.
    let mut d: Vec<f64> = diag.iter().map(|&x| x - shift).collect();
    let mut c: Vec<f64> = off.to_vec();
    let mut a: Vec<f64> = off.to_vec();
    let mut e = vec![0.0f64; n];
    let mut x: Vec<f64> = b.to_vec();

    for i in 0..n - 1 {
        if a[i].abs() > d[i].abs() {
            // swap row i and i+1
            d.swap_elems(i, i + 1, &mut c, &mut e, &mut a, &mut x);
        }
        let piv = if d[i] == 0.0 { 1e-300 } else { d[i] };
        let m = a[i] / piv;
        d[i + 1] -= m * c[i];
        if i + 1 < n - 1 {
            c[i + 1] -= m * e[i];
        }
        x[i + 1] -= m * x[i];
    }
    // back substitution
    let last = n - 1;
    let piv = if d[last] == 0.0 { 1e-300 } else { d[last] };
    x[last] /= piv;
    if n >= 2 {
        let i = n - 2;
        let piv = if d[i] == 0.0 { 1e-300 } else { d[i] };
        x[i] = (x[i] - c[i] * x[i + 1]) / piv;
    }
    for i in (0..n.saturating_sub(2)).rev() {
        let piv = if d[i] == 0.0 { 1e-300 } else { d[i] };
        x[i] = (x[i] - c[i] * x[i + 1] - e[i] * x[i + 2]) / piv;
    }
    x
}

trait SwapRows {
    #[allow(clippy::too_many_arguments)]
    fn swap_elems(
        &mut self,
        i: usize,
        j: usize,
        c: &mut [f64],
        e: &mut [f64],
        a: &mut [f64],
        x: &mut [f64],
    );
}

impl SwapRows for Vec<f64> {
    fn swap_elems(
        &mut self,
        i: usize,
        j: usize,
        c: &mut [f64],
        e: &mut [f64],
        a: &mut [f64],
        x: &mut [f64],
    ) {
        // rows i (pivot candidate) and j = i+1 of the banded system:
        // row i:   [d_i, c_i, e_i]
        // row i+1: [a_i, d_{i+1}, c_{i+1}]
        let n = self.len();
        let (di, ci, ei) = (self[i], c[i], e[i]);
        let (ai, dj, cj) = (a[i], self[j], if j < n - 1 { c[j] } else { 0.0 });
        self[i] = ai;
        c[i] = dj;
        e[i] = cj;
        a[i] = di;
        self[j] = ci;
        if j < n - 1 {
            c[j] = ei;
        }
        x.swap(i, j);
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts_two_by_two() {
        // [[1, -1], [-1, 3]] has eigenvalues 2 -/+ sqrt(2)
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn chain_eigenvalues_match_closed_form() {
        // free chain: eigenvalues 2 - 2 cos(k pi/(n+1)) for d=2, e=-1
        let n = 40;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let got = tridiag_eigenvalues(&d, &e, n).unwrap();
        for (k, g) in got.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((g - exact).abs() < 1e-11, "k={k}: {g} vs {exact}");
        }
    }

    #[test]
    fn inverse_iteration_recovers_chain_mode() {
        let n = 64;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let evs = tridiag_eigenvalues(&d, &e, 2).unwrap();
        let v = inverse_iteration(&d, &e, evs[1]);
        // second mode ~ sin(2 pi i/(n+1)), compare up to sign
        let mut dot = 0.0;
        let mut norm = 0.0;
        for i in 0..n {
            let exact = (2.0 * std::f64::consts::PI * (i + 1) as f64 / (n + 1) as f64).sin();
            dot += exact * v[i];
            norm += exact * exact;
        }
        let overlap = dot.abs() / norm.sqrt();
        assert!((overlap - 1.0).abs() < 1e-8, "overlap {overlap}");
    }
}
