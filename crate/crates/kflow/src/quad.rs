//! Adaptive quadrature and root/min bracketing.
//!
//! The ceilings integrated here have integrable power singularities
//! (exponent γ < 1/2) at isolated points. The adaptive Gauss–Kronrod driver
//! below subdivides geometrically toward such endpoints, which is slow but
//! robust; callers split the domain at every known singular point first.

/// G7-K15 nodes on [0,1] half-interval (positive abscissae).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        if i == 7 {
            let fc = f(c);
            kronrod += wk * fc;
            gauss += WG[3] * fc;
        } else {
            let f1 = f(c - h * x);
            let f2 = f(c + h * x);
            kronrod += wk * (f1 + f2);
            if i % 2 == 1 {
                gauss += WG[i / 2] * (f1 + f2);
            }
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h)
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]`.
///
/// Returns `(value, error_estimate)`. Integrable endpoint singularities are
/// handled by deep geometric refinement (max depth 60).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    if a == b {
        return (0.0, 0.0);
    }
    let mut stack = vec![(a, b, 0u32)];
    let mut total = crate::circle::Kahan::new();
    let mut err_total = 0.0f64;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (val, err) = gk15(&f, lo, hi);
        let local_tol = tol * ((hi - lo) / (b - a)).max(1e-12);
        if err <= local_tol.max(1e-16 * val.abs()) || depth >= 60 || (hi - lo) < 1e-15 {
            total.add(val);
            err_total += err;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    (total.value(), err_total)
}

/// Integrate `f` over `[0,1]` when `f` is singular exactly at `points`.
///
/// The domain is cut at every singular point; a tiny guard interval around
/// each cut is handled by the adaptive refinement of the open pieces.
pub fn integrate_unit_with_singularities<F: Fn(f64) -> f64>(
    f: F,
    points: &[f64],
    tol: f64,
) -> (f64, f64) {
    let mut cuts: Vec<f64> = points.iter().map(|&p| crate::circle::wrap_unit(p)).collect();
    cuts.push(0.0);
    cuts.push(1.0);
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    let mut total = 0.0;
    let mut err = 0.0;
    let per_piece_tol = tol / cuts.len() as f64;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi - lo < 1e-14 {
            continue;
        }
        // keep the guard tiny relative to the piece so the lost mass of an
        // integrable power singularity stays below tolerance
        let guard = ((hi - lo) * 1e-13).max(1e-15);
        let (v, e) = integrate(&f, lo + guard, hi - guard, per_piece_tol);
        total += v;
        err += e;
    }
    (total, err)
}

/// Bisection for a root of `f` on `[lo, hi]`, assuming `f(lo) < 0 < f(hi)`.
///
/// Shrinks the bracket until its width is below `width_tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, width_tol: f64) -> crate::Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let flo = f(lo);
    let fhi = f(hi);
    if !(flo < 0.0 && fhi > 0.0) {
        return Err(crate::Error::BisectionFailure { lo, hi });
    }
    while hi - lo > width_tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section minimization of a strictly unimodal function on `[lo, hi]`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, width_tol: f64) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > width_tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn smooth_integral_is_exact() {
        let (v, _) = integrate(|x| x * x, 0.0, 1.0, 1e-12);
        assert_relative_eq!(v, 1.0 / 3.0, max_relative = 1e-12);
        let (v, _) = integrate(|x| (2.0 * std::f64::consts::PI * x).cos(), 0.0, 1.0, 1e-12);
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn power_singularity_at_endpoint() {
        // ∫_0^1 x^{-1/3} dx = 3/2
        let (v, _) = integrate(|x| x.powf(-1.0 / 3.0), 0.0, 1.0, 1e-10);
        assert_relative_eq!(v, 1.5, max_relative = 1e-8);
    }

    #[test]
    fn interior_singularity_split() {
        // ∫_0^1 |x-1/2|^{-1/3} dx = 2 * (1/2)^{2/3} * 3/2
        let exact = 3.0 * 0.5f64.powf(2.0 / 3.0);
        let (v, _) =
            integrate_unit_with_singularities(|x| (x - 0.5).abs().powf(-1.0 / 3.0), &[0.5], 1e-10);
        assert_relative_eq!(v, exact, max_relative = 1e-7);
    }

    #[test]
    fn bisect_finds_root() {
        let r = bisect(|x| x * x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert_relative_eq!(r, 2f64.powf(1.0 / 3.0), max_relative = 1e-10);
        assert!(bisect(|x| x + 10.0, 0.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn golden_min_locates_parabola_vertex() {
        let (x, fx) = golden_min(|x| (x - 0.37) * (x - 0.37) + 1.0, 0.0, 1.0, 1e-10);
        assert_relative_eq!(x, 0.37, epsilon = 1e-8);
        assert_relative_eq!(fx, 1.0, epsilon = 1e-12);
    }
}
