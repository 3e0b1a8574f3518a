//! Adaptive Gauss-Legendre quadrature on (0, 1) with interior breakpoints.

use crate::{Error, Result, Scalar};
use num_complex::Complex;

/// Absolute tolerance targeted by [`integrate_01`] (calibrated for `f64`).
pub const QUAD_TOL: f64 = 1e-13;
/// Bisection depth cap per panel before giving up.
pub const QUAD_DEPTH_CAP: u32 = 40;

/// Order of the fixed rule applied on every panel; exact through degree 29.
const GL_ORDER: usize = 15;

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
///
/// Computed on construction by Newton iteration on the Legendre recurrence,
/// so the table carries the full precision of the scalar type.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T: Scalar> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Scalar> GaussLegendre<T> {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2, "rule order must be at least 2");
        let mut nodes = Vec::with_capacity(order);
        let mut weights = Vec::with_capacity(order);
        let n = order;
        for i in 0..n {
            // Chebyshev-style initial guess, then Newton on P_n.
            let guess = (T::PI() * (T::from_usize_lit(i) + T::from_f64_lit(0.75))
                / (T::from_usize_lit(n) + T::from_f64_lit(0.5)))
            .cos();
            let mut x = guess;
            let mut dp = T::one();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let step = p / d;
                x = x - step;
                if step.abs() <= T::epsilon() * (T::one() + x.abs()) {
                    let (_, d2) = legendre_with_derivative(n, x);
                    dp = d2;
                    break;
                }
            }
            let two = T::one() + T::one();
            let w = two / ((T::one() - x * x) * dp * dp);
            nodes.push(x);
            weights.push(w);
        }
        GaussLegendre { nodes, weights }
    }

    /// Applies the rule to `f` on `[a, b]`.
    pub fn integrate<F>(&self, f: &F, a: T, b: T) -> Complex<T>
    where
        F: Fn(T) -> Complex<T>,
    {
        let half = T::from_f64_lit(0.5);
        let mid = (a + b) * half;
        let rad = (b - a) * half;
        let mut acc = Complex::new(T::zero(), T::zero());
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(mid + rad * *x) * Complex::new(*w, T::zero());
        }
        acc * Complex::new(rad, T::zero())
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative<T: Scalar>(n: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    for k in 2..=n {
        let kf = T::from_usize_lit(k);
        let two = T::one() + T::one();
        let next = ((two * kf - T::one()) * x * p - (kf - T::one()) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let nf = T::from_usize_lit(n);
    let d = nf * (x * p - p_prev) / (x * x - T::one());
    (p, d)
}

/// Integrates a complex-valued function over (0, 1) to the default absolute
/// tolerance [`QUAD_TOL`].
///
/// `breakpoints` lists interior abscissas where the integrand is allowed to
/// be non-smooth; the initial panel decomposition follows them. Inputs
/// outside (0, 1) are ignored.
pub fn integrate_01<T, F>(f: F, breakpoints: &[T]) -> Result<Complex<T>>
where
    T: Scalar,
    F: Fn(T) -> Complex<T>,
{
    integrate_01_with(f, breakpoints, T::from_f64_lit(QUAD_TOL), QUAD_DEPTH_CAP)
}

/// [`integrate_01`] with an explicit absolute tolerance and depth cap.
pub fn integrate_01_with<T, F>(
    f: F,
    breakpoints: &[T],
    tol: T,
    depth_cap: u32,
) -> Result<Complex<T>>
where
    T: Scalar,
    F: Fn(T) -> Complex<T>,
{
    let rule = GaussLegendre::new(GL_ORDER);
    let mut edges: Vec<T> = Vec::with_capacity(breakpoints.len() + 2);
    edges.push(T::zero());
    let one = T::one();
    let mut interior: Vec<T> = breakpoints
        .iter()
        .copied()
        .filter(|b| *b > T::zero() && *b < one)
        .collect();
    interior.sort_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
    interior.dedup();
    edges.extend(interior);
    edges.push(one);

    let mut total = Complex::new(T::zero(), T::zero());
    for pair in edges.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b <= a {
            continue;
        }
        // Panel tolerance proportional to length keeps the summed error
        // within the global absolute budget.
        let panel_tol = tol * (b - a).max(T::from_f64_lit(1e-3));
        total = total + adapt(&rule, &f, a, b, panel_tol, 0, depth_cap)?;
    }
    Ok(total)
}

fn adapt<T, F>(
    rule: &GaussLegendre<T>,
    f: &F,
    a: T,
    b: T,
    tol: T,
    depth: u32,
    depth_cap: u32,
) -> Result<Complex<T>>
where
    T: Scalar,
    F: Fn(T) -> Complex<T>,
{
    let half = T::from_f64_lit(0.5);
    let mid = (a + b) * half;
    let whole = rule.integrate(f, a, b);
    let left = rule.integrate(f, a, mid);
    let right = rule.integrate(f, mid, b);
    let refined = left + right;
    let err = (whole - refined).norm();
    if err <= tol {
        return Ok(refined);
    }
    if depth >= depth_cap {
        return Err(Error::NoConvergence {
            residual: err.to_f64().unwrap_or(f64::NAN),
            depth_cap,
        });
    }
    let child_tol = tol * half;
    Ok(adapt(rule, f, a, mid, child_tol, depth + 1, depth_cap)?
        + adapt(rule, f, mid, b, child_tol, depth + 1, depth_cap)?)
}
