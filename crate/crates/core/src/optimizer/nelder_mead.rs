//! Derivative-free simplex minimization.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    pub max_iter: usize,
    /// Converged once every vertex is within this distance (max-norm) of the best.
    pub x_tol: f64,
    /// Or once the vertex values spread by less than `f_tol · max(|f_best|, 1e-300)`.
    pub f_tol: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        Self {
            max_iter: 5000,
            x_tol: 1e-9,
            f_tol: 1e-14,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NelderMeadResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Max-norm distance from the best vertex to the farthest one at exit.
    pub diameter: f64,
}

/// Minimizes `f` from `x0` with an initial simplex of per-coordinate `steps`.
///
/// Non-finite objective values are treated as `+∞`.
pub fn nelder_mead<F>(f: F, x0: &[f64], steps: &[f64], opts: &NelderMeadOptions) -> NelderMeadResult
where
    F: Fn(&[f64]) -> f64,
{
    let n = x0.len();
    assert_eq!(steps.len(), n, "one step per coordinate");
    let eval = |x: &[f64]| {
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    if n == 0 {
        return NelderMeadResult {
            x: Vec::new(),
            f: eval(x0),
            iterations: 0,
            converged: true,
            diameter: 0.0,
        };
    }

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), eval(x0)));
    for k in 0..n {
        let mut x = x0.to_vec();
        x[k] += steps[k];
        let v = eval(&x);
        simplex.push((x, v));
    }

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut iterations = 0;
    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = spread_x(&simplex);
        let (best, worst) = (simplex[0].1, simplex[n].1);
        let f_spread = worst - best;
        if diameter <= opts.x_tol
            || (best.is_finite() && f_spread <= opts.f_tol * best.abs().max(1e-300))
        {
            converged = true;
            break;
        }
        if iterations >= opts.max_iter {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / n as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[n].0)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let xr = along(alpha);
        let fr = eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(gamma);
            let fe = eval(&xe);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < simplex[n].1 {
            let xc = along(alpha * rho);
            let fc = eval(&xc);
            (xc, fc)
        } else {
            let xc = along(-rho);
            let fc = eval(&xc);
            (xc, fc)
        };
        if fc < fr.min(simplex[n].1) {
            simplex[n] = (xc, fc);
            continue;
        }
        let x_best = simplex[0].0.clone();
        for (x, v) in simplex.iter_mut().skip(1) {
            for (xi, bi) in x.iter_mut().zip(&x_best) {
                *xi = bi + sigma * (*xi - bi);
            }
            *v = eval(x);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let diameter = spread_x(&simplex);
    let (x, f) = simplex.swap_remove(0);
    NelderMeadResult {
        x,
        f,
        iterations,
        converged,
        diameter,
    }
}

fn spread_x(simplex: &[(Vec<f64>, f64)]) -> f64 {
    let best = &simplex[0].0;
    simplex[1..]
        .iter()
        .flat_map(|(x, _)| x.iter().zip(best).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max)
}
