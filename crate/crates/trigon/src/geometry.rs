//! Geometries, triangle validation, and the core quantities shared by every
//! inequality chain.
//!
//! The whole crate is organized around one substitution: the *s-map*
//!
//! * Euclidean:  `s(x) = x / 2`
//! * Spherical:  `s(x) = sin(x / 2)`
//! * Hyperbolic: `s(x) = sinh(x / 2)`
//!
//! Applied to the sides `a, b, c` of a triangle it produces the building
//! blocks
//!
//! * `B  = s(a+b-c) * s(a+c-b) * s(b+c-a)` (positive for every valid triangle),
//! * `Bbar = (s(a)+s(b)-s(c)) * (s(a)+s(c)-s(b)) * (s(b)+s(c)-s(a))`,
//! * `euler_ratio = 2 * s(a)*s(b)*s(c) / B`,
//!
//! where `euler_ratio` equals `R/r` (Euclidean), `tan R / tan r` (spherical),
//! or `tanh R / tanh r` (hyperbolic) whenever both radii exist, and remains a
//! well-defined total function on the validity domain even where a radius
//! does not.

use crate::error::{Result, TrigonError};
use std::fmt;

/// Absolute slack kept away from every boundary of the validity domain.
///
/// Sides must exceed it, triangle-inequality slacks must exceed it, and
/// spherical sides must stay more than this margin below pi.
pub const DEGENERACY_MARGIN: f64 = 1e-9;

/// The three constant-curvature geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl GeometryKind {
    /// All three kinds, in canonical order.
    pub const ALL: [GeometryKind; 3] = [
        GeometryKind::Euclidean,
        GeometryKind::Spherical,
        GeometryKind::Hyperbolic,
    ];

    /// Canonical lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            GeometryKind::Euclidean => "euclidean",
            GeometryKind::Spherical => "spherical",
            GeometryKind::Hyperbolic => "hyperbolic",
        }
    }

    /// Parse a kind from its name; single-letter shorthands are accepted.
    pub fn parse(name: &str) -> Option<GeometryKind> {
        match name.trim().to_ascii_lowercase().as_str() {
            "euclidean" | "e" | "euc" => Some(GeometryKind::Euclidean),
            "spherical" | "s" | "sph" => Some(GeometryKind::Spherical),
            "hyperbolic" | "h" | "hyp" => Some(GeometryKind::Hyperbolic),
            _ => None,
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A validated triangle: construction goes through [`validate_triangle`],
/// so every `Triangle` in existence satisfies the domain constraints of its
/// geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    kind: GeometryKind,
    sides: [f64; 3],
}

impl Triangle {
    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn a(&self) -> f64 {
        self.sides[0]
    }

    pub fn b(&self) -> f64 {
        self.sides[1]
    }

    pub fn c(&self) -> f64 {
        self.sides[2]
    }
}

/// Validate `(a, b, c)` as the sides of a triangle in the given geometry.
///
/// Requirements (all strict, with an absolute slack of [`DEGENERACY_MARGIN`]):
/// sides finite and positive; the triangle inequality in all three
/// orientations; and, for spherical geometry only, every side below pi.
/// Spherical triangles face no perimeter constraint here — triangles with
/// perimeter at or above 2*pi are valid, they merely have no circumcircle or
/// incircle (see [`circumradius`], [`inradius`]).
pub fn validate_triangle(kind: GeometryKind, a: f64, b: f64, c: f64) -> Result<Triangle> {
    let named = [("a", a), ("b", b), ("c", c)];
    for (side, value) in named {
        if !value.is_finite() || value <= DEGENERACY_MARGIN {
            return Err(TrigonError::NonPositiveSide { side, value });
        }
    }
    if kind == GeometryKind::Spherical {
        for (side, value) in named {
            if value >= std::f64::consts::PI - DEGENERACY_MARGIN {
                return Err(TrigonError::SphericalDomainViolated { side, value });
            }
        }
    }
    let slacks = [a + b - c, a + c - b, b + c - a];
    let min_slack = slacks.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_slack <= DEGENERACY_MARGIN {
        return Err(TrigonError::TriangleInequalityViolated {
            a,
            b,
            c,
            margin: min_slack,
        });
    }
    Ok(Triangle {
        kind,
        sides: [a, b, c],
    })
}

/// The s-map without input checking. Callers inside the crate apply it to
/// quantities already known to be finite.
pub(crate) fn s_map(kind: GeometryKind, x: f64) -> f64 {
    match kind {
        GeometryKind::Euclidean => x / 2.0,
        GeometryKind::Spherical => (x / 2.0).sin(),
        GeometryKind::Hyperbolic => (x / 2.0).sinh(),
    }
}

/// The checked s-map: `x/2`, `sin(x/2)`, or `sinh(x/2)`.
pub fn s_value(kind: GeometryKind, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(TrigonError::NonFiniteInput { value: x });
    }
    Ok(s_map(kind, x))
}

/// `B = s(a+b-c) * s(a+c-b) * s(b+c-a)` — strictly positive on the validity
/// domain of every geometry.
pub fn quantity_b(t: &Triangle) -> f64 {
    let [a, b, c] = t.sides();
    let k = t.kind();
    s_map(k, a + b - c) * s_map(k, a + c - b) * s_map(k, b + c - a)
}

/// `Bbar = (s(a)+s(b)-s(c)) * (s(a)+s(c)-s(b)) * (s(b)+s(c)-s(a))`.
///
/// Positive for every Euclidean and spherical triangle. For hyperbolic
/// triangles it can be negative: `Bbar > 0` holds exactly when the triangle
/// has a circumcircle, equivalently when the transferred triple
/// `(s(a), s(b), s(c))` satisfies the Euclidean triangle inequality (see
/// [`crate::oracles::lemma1_transfer`]).
pub fn quantity_b_bar(t: &Triangle) -> f64 {
    let [a, b, c] = t.sides();
    let k = t.kind();
    let (sa, sb, sc) = (s_map(k, a), s_map(k, b), s_map(k, c));
    (sa + sb - sc) * (sa + sc - sb) * (sb + sc - sa)
}

/// `euler_ratio = 2 * s(a)*s(b)*s(c) / B`.
///
/// Equals the radius ratio `R/r`, `tan R / tan r`, or `tanh R / tanh r`
/// whenever both radii exist, and is a total function on the validity domain
/// regardless. It is at least 2 for every valid triangle, with equality only
/// in the equilateral limit.
pub fn euler_ratio(t: &Triangle) -> f64 {
    let [a, b, c] = t.sides();
    let k = t.kind();
    2.0 * s_map(k, a) * s_map(k, b) * s_map(k, c) / quantity_b(t)
}

/// The circumradius measure before inversion: `id/tan/tanh of R` equals
/// `2 s(a)s(b)s(c) / sqrt(s(a+b+c) * B)`.
fn circum_measure(t: &Triangle) -> Result<f64> {
    let [a, b, c] = t.sides();
    let k = t.kind();
    let s_sum = s_map(k, a + b + c);
    if s_sum <= 0.0 {
        // Spherical perimeter >= 2*pi: the square root below has no real value.
        return Err(TrigonError::RadiusUndefined {
            what: "circumradius",
            detail: format!(
                "perimeter {} reaches 2*pi, so s(a+b+c) = {} is not positive",
                a + b + c,
                s_sum
            ),
        });
    }
    Ok(2.0 * s_map(k, a) * s_map(k, b) * s_map(k, c) / (s_sum * quantity_b(t)).sqrt())
}

/// The circumradius `R`, when the triangle has a circumcircle.
///
/// * Euclidean: always defined, `R = measure`.
/// * Spherical: defined iff the perimeter stays below `2*pi`; `R = atan(measure)`.
/// * Hyperbolic: defined iff `measure = tanh R < 1`; thin hyperbolic
///   triangles have no circumscribed circle and return
///   [`TrigonError::RadiusUndefined`].
pub fn circumradius(t: &Triangle) -> Result<f64> {
    let m = circum_measure(t)?;
    match t.kind() {
        GeometryKind::Euclidean => Ok(m),
        GeometryKind::Spherical => Ok(m.atan()),
        GeometryKind::Hyperbolic => {
            if m >= 1.0 {
                Err(TrigonError::RadiusUndefined {
                    what: "circumradius",
                    detail: format!(
                        "tanh R would have to equal {m}, but tanh is bounded by 1; \
                         this triangle has no circumscribed circle"
                    ),
                })
            } else {
                Ok(m.atanh())
            }
        }
    }
}

/// The inradius `r`: `id/tan/tanh of r` equals `sqrt(B / s(a+b+c))`.
///
/// Defined for every Euclidean and hyperbolic triangle; for spherical
/// triangles it requires the perimeter to stay below `2*pi`.
pub fn inradius(t: &Triangle) -> Result<f64> {
    let [a, b, c] = t.sides();
    let k = t.kind();
    let s_sum = s_map(k, a + b + c);
    if s_sum <= 0.0 {
        return Err(TrigonError::RadiusUndefined {
            what: "inradius",
            detail: format!(
                "perimeter {} reaches 2*pi, so s(a+b+c) = {} is not positive",
                a + b + c,
                s_sum
            ),
        });
    }
    let m = (quantity_b(t) / s_sum).sqrt();
    match k {
        GeometryKind::Euclidean => Ok(m),
        GeometryKind::Spherical => Ok(m.atan()),
        GeometryKind::Hyperbolic => {
            if m >= 1.0 {
                // Unreachable for real triangles (the incircle always exists in
                // hyperbolic geometry), kept as an honest guard against rounding.
                Err(TrigonError::RadiusUndefined {
                    what: "inradius",
                    detail: format!("tanh r would have to equal {m}"),
                })
            } else {
                Ok(m.atanh())
            }
        }
    }
}

/// Alternative squared circumradius measures for the curved geometries:
/// returns `(sin_type_sq, tan_type_sq)` where
///
/// * `sin_type_sq = sin^2 R` (spherical) or `sinh^2 R` (hyperbolic)
///   `= 4 (s(a)s(b)s(c))^2 / (Bbar * (s(a)+s(b)+s(c)))`,
/// * `tan_type_sq = tan^2 R` (spherical) or `tanh^2 R` (hyperbolic)
///   `= 4 (s(a)s(b)s(c))^2 / (B * s(a+b+c))`.
///
/// They satisfy `1/sin^2 - 1/tan^2 = 1` (spherical) and
/// `1/tanh^2 - 1/sinh^2 = 1` (hyperbolic). Euclidean geometry has no such
/// pair and returns [`TrigonError::UnsupportedKind`]. A hyperbolic triangle
/// without a circumcircle (`Bbar <= 0`) returns
/// [`TrigonError::RadiusUndefined`], as does a spherical triangle with
/// perimeter at or above `2*pi`.
pub fn circum_measure_squared_alt(t: &Triangle) -> Result<(f64, f64)> {
    let k = t.kind();
    if k == GeometryKind::Euclidean {
        return Err(TrigonError::UnsupportedKind {
            kind: k,
            what: "the sin-type/tan-type circumradius measure pair",
        });
    }
    let [a, b, c] = t.sides();
    let (sa, sb, sc) = (s_map(k, a), s_map(k, b), s_map(k, c));
    let sss = sa * sb * sc;
    let b_bar = quantity_b_bar(t);
    if b_bar <= 0.0 {
        return Err(TrigonError::RadiusUndefined {
            what: "sin-type circumradius measure",
            detail: format!(
                "Bbar = {b_bar} is not positive; this triangle has no circumscribed circle"
            ),
        });
    }
    let s_sum = s_map(k, a + b + c);
    if s_sum <= 0.0 {
        return Err(TrigonError::RadiusUndefined {
            what: "tan-type circumradius measure",
            detail: format!("s(a+b+c) = {s_sum} is not positive"),
        });
    }
    let sin_type_sq = 4.0 * sss * sss / (b_bar * (sa + sb + sc));
    let tan_type_sq = 4.0 * sss * sss / (quantity_b(t) * s_sum);
    Ok((sin_type_sq, tan_type_sq))
}

/// The bundle of core quantities for one triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreQuantities {
    pub s_a: f64,
    pub s_b: f64,
    pub s_c: f64,
    pub big_b: f64,
    pub big_b_bar: f64,
    pub euler_ratio: f64,
    /// `None` when the triangle has no circumcircle.
    pub circumradius: Option<f64>,
    /// `None` when the triangle has no incircle (spherical, perimeter >= 2*pi).
    pub inradius: Option<f64>,
}

/// Evaluate every core quantity at once. Radii that do not exist are reported
/// as `None` rather than as errors.
pub fn core_quantities(t: &Triangle) -> CoreQuantities {
    let [a, b, c] = t.sides();
    let k = t.kind();
    CoreQuantities {
        s_a: s_map(k, a),
        s_b: s_map(k, b),
        s_c: s_map(k, c),
        big_b: quantity_b(t),
        big_b_bar: quantity_b_bar(t),
        euler_ratio: euler_ratio(t),
        circumradius: circumradius(t).ok(),
        inradius: inradius(t).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_345_core_values() {
        let t = validate_triangle(GeometryKind::Euclidean, 3.0, 4.0, 5.0).unwrap();
        assert_eq!(quantity_b(&t), 6.0);
        assert_eq!(euler_ratio(&t), 2.5);
        assert_eq!(circumradius(&t).unwrap(), 2.5);
        assert_eq!(inradius(&t).unwrap(), 1.0);
        let q = core_quantities(&t);
        assert_eq!(q.s_a, 1.5);
        assert_eq!(q.big_b_bar, quantity_b_bar(&t));
        assert_eq!(q.circumradius, Some(2.5));
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        assert!(matches!(
            validate_triangle(GeometryKind::Euclidean, 0.0, 1.0, 1.0),
            Err(TrigonError::NonPositiveSide { side: "a", .. })
        ));
        assert!(matches!(
            validate_triangle(GeometryKind::Euclidean, 1.0, f64::NAN, 1.0),
            Err(TrigonError::NonPositiveSide { side: "b", .. })
        ));
        assert!(matches!(
            validate_triangle(GeometryKind::Euclidean, 1.0, 1.0, 2.0),
            Err(TrigonError::TriangleInequalityViolated { .. })
        ));
        assert!(matches!(
            validate_triangle(GeometryKind::Spherical, 1.0, 1.0, 3.2),
            Err(TrigonError::SphericalDomainViolated { side: "c", .. })
        ));
        // Hyperbolic sides have no upper bound.
        assert!(validate_triangle(GeometryKind::Hyperbolic, 10.0, 10.0, 10.0).is_ok());
    }

    #[test]
    fn spherical_large_perimeter_triangle_is_valid_but_radius_free() {
        let t = validate_triangle(GeometryKind::Spherical, 2.9, 2.9, 2.9).unwrap();
        assert!(matches!(
            circumradius(&t),
            Err(TrigonError::RadiusUndefined { .. })
        ));
        assert!(matches!(
            inradius(&t),
            Err(TrigonError::RadiusUndefined { .. })
        ));
        let q = core_quantities(&t);
        assert_eq!(q.circumradius, None);
        assert_eq!(q.inradius, None);
        // The euler_ratio remains a total function there.
        assert!(q.euler_ratio.is_finite() && q.euler_ratio >= 2.0);
    }

    #[test]
    fn thin_hyperbolic_triangle_has_no_circumcircle() {
        let t = validate_triangle(GeometryKind::Hyperbolic, 1.99, 1.0, 1.0).unwrap();
        assert!(quantity_b_bar(&t) < 0.0);
        assert!(matches!(
            circumradius(&t),
            Err(TrigonError::RadiusUndefined { .. })
        ));
        // The incircle still exists.
        assert!(inradius(&t).unwrap() > 0.0);
    }

    #[test]
    fn euclidean_alt_measures_unsupported() {
        let t = validate_triangle(GeometryKind::Euclidean, 3.0, 4.0, 5.0).unwrap();
        assert!(matches!(
            circum_measure_squared_alt(&t),
            Err(TrigonError::UnsupportedKind { .. })
        ));
    }
}
