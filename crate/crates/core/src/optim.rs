//! Scalar search routines: golden-section maximization and bracketed
//! bisection. Both are deterministic and bounded by an iteration cap.

use crate::scalar::Real;

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
///
/// Returns `(x_max, f_max)`. `tol` bounds the final bracket width.
pub fn golden_section_max<T: Real, F: Fn(T) -> T>(
    f: F,
    mut lo: T,
    mut hi: T,
    tol: T,
    max_iter: usize,
) -> (T, T) {
    let inv_phi = T::lit(0.618_033_988_749_894_8);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    for _ in 0..max_iter {
        if (hi - lo).abs() <= tol {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Bisection on a bracketing interval: `f(lo)` and `f(hi)` must have
/// opposite signs. Returns the midpoint of the final bracket.
pub fn bisect_root<T: Real, F: Fn(T) -> T>(
    f: F,
    mut lo: T,
    mut hi: T,
    tol: T,
    max_iter: usize,
) -> T {
    let mut f_lo = f(lo);
    let half = T::one() / T::two();
    for _ in 0..max_iter {
        let mid = (lo + hi) * half;
        if (hi - lo).abs() <= tol || mid == lo || mid == hi {
            return mid;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return mid;
        }
        if (f_lo < T::zero()) != (f_mid < T::zero()) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    (lo + hi) * half
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_peak() {
        let (x, fx) = golden_section_max(|x: f64| -(x - 0.3).powi(2), 0.0, 1.0, 1e-10, 200);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(fx.abs() < 1e-15);
    }

    #[test]
    fn boundary_maximum_is_found() {
        let (x, _) = golden_section_max(|x: f64| -x, 0.0, 1.0, 1e-10, 200);
        assert!(x < 1e-8);
    }

    #[test]
    fn bisection_locates_a_root() {
        let r = bisect_root(|x: f64| x * x - 2.0, 0.0, 2.0, 1e-12, 200);
        assert!((r - 2f64.sqrt()).abs() < 1e-11);
    }
}
