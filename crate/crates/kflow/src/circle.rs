//! Circle arithmetic helpers shared by every module.

/// Wrap a real number into `[0, 1)`.
///
/// `x - x.floor()` can round to exactly `1.0` when `x` is a hair below an
/// integer, so the result is canonicalized.
#[inline]
pub fn wrap_unit(x: f64) -> f64 {
    let mut y = x - x.floor();
    if y >= 1.0 {
        y -= 1.0;
    }
    if y < 0.0 {
        y = 0.0;
    }
    y
}

/// Distance from `x` to the nearest integer, i.e. `‖x‖` on the circle.
#[inline]
pub fn dist_to_zero(x: f64) -> f64 {
    let y = wrap_unit(x);
    y.min(1.0 - y)
}

/// Circle distance between two points of `[0,1)`.
#[inline]
pub fn circle_dist(a: f64, b: f64) -> f64 {
    dist_to_zero(a - b)
}

/// Neumaier compensated accumulator: exact enough for ergodic sums of
/// millions of terms without drift.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    #[inline]
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_handles_negative_and_near_integer() {
        assert_eq!(wrap_unit(-0.25), 0.75);
        assert_eq!(wrap_unit(3.5), 0.5);
        let y = wrap_unit(-1e-18);
        assert!((0.0..1.0).contains(&y));
    }

    #[test]
    fn circle_distance_is_symmetric_and_short_way() {
        assert!((circle_dist(0.1, 0.9) - 0.2).abs() < 1e-15);
        assert!((circle_dist(0.9, 0.1) - 0.2).abs() < 1e-15);
        assert_eq!(circle_dist(0.3, 0.3), 0.0);
    }

    #[test]
    fn kahan_beats_naive_on_many_small_terms() {
        let mut k = Kahan::new();
        for _ in 0..10_000_000 {
            k.add(0.1);
        }
        assert!((k.value() - 1_000_000.0).abs() < 1e-7);
    }
}
