//! One-dimensional minimization: coarse grid followed by golden-section
//! refinement inside the bracketing grid cell pair.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
pub fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, tol: f64) -> Minimum {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (a + b);
    Minimum { x, value: f(x) }
}

/// Minimizes `f` over the open interval `(lo, hi)`.
///
/// `resolution` interior points are sampled first; the best one and its two
/// neighbours bound the golden-section search. Grid values are kept if the
/// refinement does not improve on them.
pub fn grid_then_golden<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    resolution: usize,
    tol: f64,
) -> Minimum {
    let resolution = resolution.max(2);
    let step = (hi - lo) / (resolution + 1) as f64;
    let (best_k, best_v) = (1..=resolution)
        .map(|k| (k, f(lo + step * k as f64)))
        .fold((0, f64::INFINITY), |acc, (k, v)| if v < acc.1 { (k, v) } else { acc });
    let a = lo + step * (best_k - 1) as f64;
    let b = lo + step * (best_k + 1) as f64;
    let refined = golden_section(&f, a, b, tol);
    if refined.value <= best_v {
        refined
    } else {
        Minimum {
            x: lo + step * best_k as f64,
            value: best_v,
        }
    }
}

/// Minimizes a function of period `period` over one period starting at 0.
pub fn periodic_minimum<F: Fn(f64) -> f64>(f: F, period: f64, resolution: usize, tol: f64) -> Minimum {
    let resolution = resolution.max(3);
    let step = period / resolution as f64;
    let (best_k, best_v) = (0..resolution)
        .map(|k| (k, f(step * k as f64)))
        .fold((0, f64::INFINITY), |acc, (k, v)| if v < acc.1 { (k, v) } else { acc });
    let centre = step * best_k as f64;
    let refined = golden_section(&f, centre - step, centre + step, tol);
    let m = if refined.value <= best_v {
        refined
    } else {
        Minimum {
            x: centre,
            value: best_v,
        }
    };
    Minimum {
        x: m.x.rem_euclid(period),
        value: m.value,
    }
}

/// Bisection for a sign change of `f` on `[a, b]`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    while b - a > tol {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_minimum() {
        let m = grid_then_golden(|x| (x - 0.3).powi(2), 0.0, 1.0, 16, 1e-10);
        assert!((m.x - 0.3).abs() < 1e-8);
    }

    #[test]
    fn boundary_minimum_of_concave_function() {
        let m = grid_then_golden(|x| -(x - 0.5).powi(2), 0.0, 1.0, 16, 1e-10);
        assert!(m.x < 0.07 || m.x > 0.93);
    }

    #[test]
    fn periodic_wraps() {
        let m = periodic_minimum(|x| -(2.0 * x).cos(), std::f64::consts::PI, 8, 1e-12);
        assert!(m.x.min(std::f64::consts::PI - m.x) < 1e-6);
    }

    #[test]
    fn bisect_root() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-13).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
        assert!(bisect(|x| x * x + 1.0, 0.0, 2.0, 1e-3).is_none());
    }
}
