//! Outward-rounded interval arithmetic for the certification engine.
//!
//! The operations here never claim more than the floating-point evaluation
//! can justify: every computed endpoint is pushed two ulps outward unless it
//! is *provably exact* (for example `0 + 0`, negation, or a product that is
//! confined to one side of zero and lands exactly on it). Two ulps cover the
//! half-ulp rounding of IEEE arithmetic and the roughly one-ulp accuracy of
//! the library `sin`/`sinh` with room to spare.
//!
//! Non-finite intermediate results saturate to `[-f64::MAX, f64::MAX]`
//! endpoints. Saturation keeps every certification *decision* sound: the
//! engine only ever concludes from `lo >= -tol` (proved nonnegative) or
//! `hi < -tol` (candidate violation, which is then re-checked at a concrete
//! point), and a saturated endpoint can never satisfy either test falsely.

use crate::geometry::GeometryKind;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A closed interval `[lo, hi]` of f64 values with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalScalar {
    lo: f64,
    hi: f64,
}

/// Round a lower-bound candidate two ulps down; non-finite values saturate.
fn down2(x: f64) -> f64 {
    if !x.is_finite() {
        return -f64::MAX;
    }
    let y = x.next_down().next_down();
    if y.is_finite() {
        y
    } else {
        -f64::MAX
    }
}

/// Round an upper-bound candidate two ulps up; non-finite values saturate.
fn up2(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::MAX;
    }
    let y = x.next_up().next_up();
    if y.is_finite() {
        y
    } else {
        f64::MAX
    }
}

impl IntervalScalar {
    /// Build `[lo, hi]`. A malformed pair (NaN, or `lo > hi`) collapses to
    /// the widest interval rather than producing an unsound one.
    pub fn new(lo: f64, hi: f64) -> IntervalScalar {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            IntervalScalar { lo, hi }
        } else {
            IntervalScalar::widest()
        }
    }

    /// The degenerate interval `[x, x]`. The f64 value itself is represented
    /// exactly, so no inflation is applied.
    pub fn point(x: f64) -> IntervalScalar {
        if x.is_finite() {
            IntervalScalar { lo: x, hi: x }
        } else {
            IntervalScalar::widest()
        }
    }

    /// `[-f64::MAX, f64::MAX]`: the "know nothing" interval.
    pub fn widest() -> IntervalScalar {
        IntervalScalar {
            lo: -f64::MAX,
            hi: f64::MAX,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// A point inside the interval, midway between the endpoints.
    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() {
            m.clamp(self.lo, self.hi)
        } else {
            // Endpoints at opposite saturation extremes.
            0.0f64.clamp(self.lo, self.hi)
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &IntervalScalar) -> Option<IntervalScalar> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(IntervalScalar { lo, hi })
        } else {
            None
        }
    }

    /// Split at the midpoint into two halves covering the original interval.
    pub fn bisect(&self) -> (IntervalScalar, IntervalScalar) {
        let m = self.midpoint();
        (
            IntervalScalar {
                lo: self.lo,
                hi: m,
            },
            IntervalScalar {
                lo: m,
                hi: self.hi,
            },
        )
    }

    /// Exact halving: multiplication by 0.5 only rounds when the result is
    /// subnormal, which the exactness test below detects.
    pub fn half(self) -> IntervalScalar {
        let lo = self.lo * 0.5;
        let hi = self.hi * 0.5;
        IntervalScalar {
            lo: if lo * 2.0 == self.lo { lo } else { down2(lo) },
            hi: if hi * 2.0 == self.hi { hi } else { up2(hi) },
        }
    }

    /// `x^2`, with the sharp lower bound 0 when the interval straddles zero.
    pub fn square(self) -> IntervalScalar {
        if self.contains_zero() {
            let m = (self.lo * self.lo).max(self.hi * self.hi);
            IntervalScalar {
                lo: 0.0,
                hi: up2(m),
            }
        } else {
            let (a, b) = (self.lo.abs(), self.hi.abs());
            let (m, big) = (a.min(b), a.max(b));
            IntervalScalar {
                lo: down2(m * m),
                hi: up2(big * big),
            }
        }
    }

    /// Square root. An interval entirely below zero has no real square root
    /// and collapses to the widest interval (which decides nothing).
    pub fn sqrt(self) -> IntervalScalar {
        if self.hi < 0.0 {
            return IntervalScalar::widest();
        }
        let lo = if self.lo <= 0.0 {
            0.0
        } else {
            down2(self.lo.sqrt()).max(0.0)
        };
        IntervalScalar {
            lo,
            hi: up2(self.hi.sqrt()),
        }
    }

    /// Interval sine. Detects whether a crest (`pi/2 + 2k*pi`) or trough
    /// (`-pi/2 + 2k*pi`) may lie inside the argument range — the containment
    /// test is widened outward so rounding in locating the extremum can only
    /// widen the result — and clamps to `[-1, 1]`, which is exact.
    pub fn sin(self) -> IntervalScalar {
        if !self.lo.is_finite() || !self.hi.is_finite() || self.width() >= TAU {
            return IntervalScalar { lo: -1.0, hi: 1.0 };
        }
        let lw = down2(self.lo);
        let hw = up2(self.hi);
        let crest_inside = {
            let k = ((lw - FRAC_PI_2) / TAU).ceil();
            down2(FRAC_PI_2 + k * TAU) <= hw
        };
        let trough_inside = {
            let k = ((lw + FRAC_PI_2) / TAU).ceil();
            down2(-FRAC_PI_2 + k * TAU) <= hw
        };
        let s_lo = self.lo.sin();
        let s_hi = self.hi.sin();
        let hi = if crest_inside {
            1.0
        } else {
            up2(s_lo.max(s_hi)).min(1.0)
        };
        let lo = if trough_inside {
            -1.0
        } else {
            down2(s_lo.min(s_hi)).max(-1.0)
        };
        IntervalScalar { lo, hi }
    }

    /// Interval hyperbolic sine: monotone, exact at zero.
    pub fn sinh(self) -> IntervalScalar {
        let lo = if self.lo == 0.0 {
            0.0
        } else {
            down2(self.lo.sinh())
        };
        let hi = if self.hi == 0.0 {
            0.0
        } else {
            up2(self.hi.sinh())
        };
        IntervalScalar { lo, hi }
    }

    /// The s-map on intervals: `x/2`, `sin(x/2)`, or `sinh(x/2)`.
    pub fn s_map(self, kind: GeometryKind) -> IntervalScalar {
        let h = self.half();
        match kind {
            GeometryKind::Euclidean => h,
            GeometryKind::Spherical => h.sin(),
            GeometryKind::Hyperbolic => h.sinh(),
        }
    }

    /// True when every value of the interval is `>= 0`.
    pub fn certainly_nonneg(&self) -> bool {
        self.lo >= 0.0
    }

    /// True when every value of the interval is `<= 0`.
    fn certainly_nonpos(&self) -> bool {
        self.hi <= 0.0
    }
}

impl Add for IntervalScalar {
    type Output = IntervalScalar;

    fn add(self, rhs: IntervalScalar) -> IntervalScalar {
        let lo_cand = self.lo + rhs.lo;
        let hi_cand = self.hi + rhs.hi;
        IntervalScalar {
            // 0 + 0 is the only sum this implementation treats as exact.
            lo: if self.lo == 0.0 && rhs.lo == 0.0 {
                0.0
            } else {
                down2(lo_cand)
            },
            hi: if self.hi == 0.0 && rhs.hi == 0.0 {
                0.0
            } else {
                up2(hi_cand)
            },
        }
    }
}

impl Sub for IntervalScalar {
    type Output = IntervalScalar;

    fn sub(self, rhs: IntervalScalar) -> IntervalScalar {
        self + (-rhs)
    }
}

impl Neg for IntervalScalar {
    type Output = IntervalScalar;

    fn neg(self) -> IntervalScalar {
        // Negation of f64 values is always exact.
        IntervalScalar {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for IntervalScalar {
    type Output = IntervalScalar;

    fn mul(self, rhs: IntervalScalar) -> IntervalScalar {
        let cands = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let mut lo_cand = f64::INFINITY;
        let mut hi_cand = f64::NEG_INFINITY;
        for c in cands {
            if c.is_nan() {
                return IntervalScalar::widest();
            }
            lo_cand = lo_cand.min(c);
            hi_cand = hi_cand.max(c);
        }
        // Sign analysis: when the true product range is confined to one side
        // of zero, a zero endpoint is a sound exact bound on that side.
        let prod_nonneg = (self.certainly_nonneg() && rhs.certainly_nonneg())
            || (self.certainly_nonpos() && rhs.certainly_nonpos());
        let prod_nonpos = (self.certainly_nonneg() && rhs.certainly_nonpos())
            || (self.certainly_nonpos() && rhs.certainly_nonneg());
        IntervalScalar {
            lo: if lo_cand == 0.0 && prod_nonneg {
                0.0
            } else {
                down2(lo_cand)
            },
            hi: if hi_cand == 0.0 && prod_nonpos {
                0.0
            } else {
                up2(hi_cand)
            },
        }
    }
}

impl Div for IntervalScalar {
    type Output = IntervalScalar;

    fn div(self, rhs: IntervalScalar) -> IntervalScalar {
        if rhs.contains_zero() {
            return IntervalScalar::widest();
        }
        let cands = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let mut lo_cand = f64::INFINITY;
        let mut hi_cand = f64::NEG_INFINITY;
        for c in cands {
            if c.is_nan() {
                return IntervalScalar::widest();
            }
            lo_cand = lo_cand.min(c);
            hi_cand = hi_cand.max(c);
        }
        let quot_nonneg = (self.certainly_nonneg() && rhs.lo > 0.0)
            || (self.certainly_nonpos() && rhs.hi < 0.0);
        let quot_nonpos = (self.certainly_nonpos() && rhs.lo > 0.0)
            || (self.certainly_nonneg() && rhs.hi < 0.0);
        IntervalScalar {
            lo: if lo_cand == 0.0 && quot_nonneg {
                0.0
            } else {
                down2(lo_cand)
            },
            hi: if hi_cand == 0.0 && quot_nonpos {
                0.0
            } else {
                up2(hi_cand)
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> IntervalScalar {
        IntervalScalar::new(lo, hi)
    }

    #[test]
    fn arithmetic_contains_pointwise_results() {
        let a = iv(1.0, 2.0);
        let b = iv(0.25, 0.75);
        for (x, y) in [(1.0, 0.25), (2.0, 0.75), (1.5, 0.5), (1.25, 0.3)] {
            assert!((a + b).contains(x + y));
            assert!((a - b).contains(x - y));
            assert!((a * b).contains(x * y));
            assert!((a / b).contains(x / y));
            assert!(a.square().contains(x * x));
            assert!(a.half().contains(x / 2.0));
            assert!(a.sqrt().contains(x.sqrt()));
            assert!(a.sin().contains(x.sin()));
            assert!(a.sinh().contains(x.sinh()));
        }
    }

    #[test]
    fn exact_zero_rules() {
        let z = IntervalScalar::point(0.0);
        assert_eq!((z + z).lo(), 0.0);
        assert_eq!((z + z).hi(), 0.0);
        let pos = iv(0.0, 3.0);
        // Nonnegative times nonnegative keeps the exact zero lower bound.
        assert_eq!((pos * pos).lo(), 0.0);
        assert!((pos * pos).hi() >= 9.0);
        // Squares of straddling intervals start exactly at zero.
        assert_eq!(iv(-2.0, 1.0).square().lo(), 0.0);
        // Negation is exact.
        let a = iv(1.0, 2.0);
        assert_eq!((-a).lo(), -2.0);
        assert_eq!((-a).hi(), -1.0);
    }

    #[test]
    fn inflation_is_outward() {
        let a = iv(1.0, 1.0);
        let b = iv(3.0, 3.0);
        let s = a + b;
        assert!(s.lo() < 4.0 && s.hi() > 4.0);
        let p = a * b;
        assert!(p.lo() < 3.0 && p.hi() > 3.0);
    }

    #[test]
    fn division_by_zero_straddling_interval_saturates() {
        let a = iv(1.0, 2.0);
        let d = iv(-1.0, 1.0);
        let q = a / d;
        assert_eq!(q.lo(), -f64::MAX);
        assert_eq!(q.hi(), f64::MAX);
    }

    #[test]
    fn sine_crest_and_trough_detection() {
        // [1, 2] contains pi/2: upper bound must be exactly 1.
        assert_eq!(iv(1.0, 2.0).sin().hi(), 1.0);
        assert!(iv(1.0, 2.0).sin().lo() <= 2.0f64.sin());
        // [4, 5] contains 3*pi/2: lower bound must be exactly -1.
        assert_eq!(iv(4.0, 5.0).sin().lo(), -1.0);
        // [0.1, 0.2] contains neither: bounds from the endpoints.
        let s = iv(0.1, 0.2).sin();
        assert!(s.lo() > 0.0 && s.hi() < 0.21);
        // Very wide interval: full range.
        assert_eq!(iv(0.0, 100.0).sin(), iv(-1.0, 1.0));
    }

    #[test]
    fn s_map_matches_pointwise() {
        for kind in GeometryKind::ALL {
            for x in [0.3, 1.0, 2.5] {
                let point = crate::geometry::s_value(kind, x).unwrap();
                assert!(IntervalScalar::point(x).s_map(kind).contains(point));
            }
        }
    }

    #[test]
    fn bisect_and_intersect() {
        let a = iv(0.0, 4.0);
        let (l, r) = a.bisect();
        assert_eq!(l.hi(), r.lo());
        assert_eq!(l.lo(), 0.0);
        assert_eq!(r.hi(), 4.0);
        assert_eq!(a.intersect(&iv(3.0, 5.0)), Some(iv(3.0, 4.0)));
        assert_eq!(a.intersect(&iv(5.0, 6.0)), None);
    }
}
