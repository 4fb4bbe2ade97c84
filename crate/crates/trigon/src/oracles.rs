//! Structural identities and transfer maps used to cross-check the chain
//! machinery: the s-map transfer to Euclidean triples, sign laws, exact
//! factorizations, and the Ravi substitution with its polynomial identities.
//!
//! Everything here is an *independent* route to quantities the chains also
//! compute, which is what makes these functions useful as oracles in the
//! test suites.

use crate::error::{Result, TrigonError};
use crate::geometry::{s_map, validate_triangle, GeometryKind, Triangle};

/// The transferred triple `(s(a), s(b), s(c))`.
///
/// For every *spherical* triangle this triple satisfies the strict Euclidean
/// triangle inequality (the half-angle sine is strictly subadditive on the
/// relevant domain). For *hyperbolic* triangles it need not: `sinh` is
/// strictly superadditive, so thin triangles — e.g. sides `(1.99, 1, 1)` —
/// transfer outside the Euclidean cone. The triple is a valid Euclidean side
/// triple exactly when `Bbar > 0`, equivalently when the triangle has a
/// circumcircle. No validity assertion is made here; combine with
/// [`transfer_is_valid_euclidean`] when the distinction matters.
pub fn lemma1_transfer(t: &Triangle) -> (f64, f64, f64) {
    let [a, b, c] = t.sides();
    let k = t.kind();
    (s_map(k, a), s_map(k, b), s_map(k, c))
}

/// Whether the transferred triple passes Euclidean triangle validation.
pub fn transfer_is_valid_euclidean(t: &Triangle) -> bool {
    let (sa, sb, sc) = lemma1_transfer(t);
    validate_triangle(GeometryKind::Euclidean, sa, sb, sc).is_ok()
}

/// The sign law relating `B` and `Bbar`: returns `(B - Bbar, conforms)`.
///
/// Expected sign of the difference: zero for Euclidean (the two products are
/// the same expression there), `>= 0` for hyperbolic, `<= 0` for spherical,
/// each within `1e-12 * max(1, |B|)`.
pub fn lemma2_sign_check(t: &Triangle) -> (f64, bool) {
    let big_b = crate::geometry::quantity_b(t);
    let diff = big_b - crate::geometry::quantity_b_bar(t);
    let tol = 1e-12 * big_b.abs().max(1.0);
    let conforms = match t.kind() {
        GeometryKind::Euclidean => diff.abs() <= tol,
        GeometryKind::Hyperbolic => diff >= -tol,
        GeometryKind::Spherical => diff <= tol,
    };
    (diff, conforms)
}

/// The per-factor sum bound, with sides sorted descending internally so that
/// `a >= b >= c`: returns `s(b+c-a) - (s(b) + s(c) - s(a))`.
///
/// Sign law: `>= 0` for hyperbolic, `<= 0` for spherical, `0` for Euclidean
/// (up to rounding on the order of 1e-16).
pub fn prop_sum_bound(t: &Triangle) -> f64 {
    let mut sides = t.sides();
    sides.sort_by(|p, q| q.partial_cmp(p).unwrap());
    let [a, b, c] = sides;
    let k = t.kind();
    s_map(k, b + c - a) - (s_map(k, b) + s_map(k, c) - s_map(k, a))
}

/// Scaled residual of the exact two-factor product identity (sides taken in
/// the triangle's stored order):
///
/// ```text
/// lhs  = s(a+b-c)*s(a+c-b) - (s(a)+s(b)-s(c))*(s(a)+s(c)-s(b))
/// corr = +4*s(b)*s(c)*sinh((b-c)/4)^2   (hyperbolic)
///      = -4*s(b)*s(c)*sin((b-c)/4)^2    (spherical)
/// ```
///
/// Returns `(lhs - corr) / max(1, |lhs|, |corr|)`, which is zero up to
/// rounding. Euclidean geometry has no correction term of this shape and
/// returns [`TrigonError::UnsupportedKind`].
pub fn prop_product_identity_residual(t: &Triangle) -> Result<f64> {
    let k = t.kind();
    if k == GeometryKind::Euclidean {
        return Err(TrigonError::UnsupportedKind {
            kind: k,
            what: "the product-form correction identity",
        });
    }
    let [a, b, c] = t.sides();
    let (sa, sb, sc) = (s_map(k, a), s_map(k, b), s_map(k, c));
    let lhs = s_map(k, a + b - c) * s_map(k, a + c - b) - (sa + sb - sc) * (sa + sc - sb);
    let q = (b - c) / 4.0;
    let corr = match k {
        GeometryKind::Hyperbolic => 4.0 * sb * sc * q.sinh() * q.sinh(),
        GeometryKind::Spherical => -4.0 * sb * sc * q.sin() * q.sin(),
        GeometryKind::Euclidean => unreachable!(),
    };
    Ok((lhs - corr) / lhs.abs().max(corr.abs()).max(1.0))
}

/// Scaled residual of the exact perimeter factorization, for arbitrary
/// positive arguments (no triangle inequality required):
///
/// ```text
/// spherical:  s(a)+s(b)+s(c) - s(a+b+c) = 4*sin((a+b)/4)*sin((a+c)/4)*sin((b+c)/4)
/// hyperbolic: s(a+b+c) - s(a)-s(b)-s(c) = 4*sinh((a+b)/4)*sinh((a+c)/4)*sinh((b+c)/4)
/// ```
///
/// Euclidean geometry returns [`TrigonError::UnsupportedKind`]: there the
/// perimeter sum telescopes exactly and no factorization of this shape exists.
pub fn sum_factorization_residual(kind: GeometryKind, a: f64, b: f64, c: f64) -> Result<f64> {
    if kind == GeometryKind::Euclidean {
        return Err(TrigonError::UnsupportedKind {
            kind,
            what: "the perimeter sum factorization",
        });
    }
    for (name, value) in [("a", a), ("b", b), ("c", c)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(TrigonError::NonPositiveInput { name, value });
        }
    }
    let (sa, sb, sc) = (s_map(kind, a), s_map(kind, b), s_map(kind, c));
    let (lhs, rhs) = match kind {
        GeometryKind::Spherical => (
            sa + sb + sc - s_map(kind, a + b + c),
            4.0 * ((a + b) / 4.0).sin() * ((a + c) / 4.0).sin() * ((b + c) / 4.0).sin(),
        ),
        GeometryKind::Hyperbolic => (
            s_map(kind, a + b + c) - sa - sb - sc,
            4.0 * ((a + b) / 4.0).sinh() * ((a + c) / 4.0).sinh() * ((b + c) / 4.0).sinh(),
        ),
        GeometryKind::Euclidean => unreachable!(),
    };
    Ok((lhs - rhs) / lhs.abs().max(rhs.abs()).max(1.0))
}

/// The Ravi substitution variables of a Euclidean triangle:
/// `x = (b+c-a)/2`, `y = (a+c-b)/2`, `z = (a+b-c)/2`, all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RaviTriple {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Decompose sides `(a, b, c)` into Ravi variables. The inputs must form a
/// valid Euclidean triangle; e.g. `(3, 4, 5)` maps to `(3, 2, 1)`.
pub fn ravi_decompose(a: f64, b: f64, c: f64) -> Result<RaviTriple> {
    validate_triangle(GeometryKind::Euclidean, a, b, c)?;
    Ok(RaviTriple {
        x: (b + c - a) / 2.0,
        y: (a + c - b) / 2.0,
        z: (a + b - c) / 2.0,
    })
}

fn check_positive_xyz(x: f64, y: f64, z: f64) -> Result<()> {
    for (name, value) in [("x", x), ("y", y), ("z", z)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(TrigonError::NonPositiveInput { name, value });
        }
    }
    Ok(())
}

/// Scaled residual of the polynomial identity used by the Euclidean
/// certificates: the nine-term expansion
///
/// ```text
/// E9 = x^3 y^2 + x^2 y^3 - 2 x^2 y^2 z + x^3 z^2 - 2 x^2 y z^2
///      - 2 x y^2 z^2 + y^3 z^2 + x^2 z^3 + y^2 z^3
/// ```
///
/// equals the manifestly nonnegative factorization
///
/// ```text
/// F = x^2 (y+z)(y-z)^2 + y^2 (x+z)(x-z)^2 + z^2 (x+y)(x-y)^2,
/// ```
///
/// so `(E9 - F) / max(1, |E9|, |F|)` is zero up to rounding. Both sides
/// evaluate to 96 at `(3, 2, 1)`.
pub fn ravi_identity_residual(x: f64, y: f64, z: f64) -> Result<f64> {
    check_positive_xyz(x, y, z)?;
    let e9 = x.powi(3) * y.powi(2) + x.powi(2) * y.powi(3) - 2.0 * x.powi(2) * y.powi(2) * z
        + x.powi(3) * z.powi(2)
        - 2.0 * x.powi(2) * y * z.powi(2)
        - 2.0 * x * y.powi(2) * z.powi(2)
        + y.powi(3) * z.powi(2)
        + x.powi(2) * z.powi(3)
        + y.powi(2) * z.powi(3);
    let f = x * x * (y + z) * (y - z) * (y - z)
        + y * y * (x + z) * (x - z) * (x - z)
        + z * z * (x + y) * (x - y) * (x - y);
    Ok((e9 - f) / e9.abs().max(f.abs()).max(1.0))
}

/// The Schur-like cyclic expression
///
/// ```text
/// C = x^2 y^2 (x-z)(y-z) + y^2 z^2 (y-x)(z-x) + x^2 z^2 (x-y)(z-y),
/// ```
///
/// nonnegative on the positive orthant (value 71 at `(3, 2, 1)`).
pub fn schur_like_value(x: f64, y: f64, z: f64) -> Result<f64> {
    check_positive_xyz(x, y, z)?;
    Ok(x * x * y * y * (x - z) * (y - z)
        + y * y * z * z * (y - x) * (z - x)
        + x * x * z * z * (x - y) * (z - y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{circumradius, quantity_b_bar};

    #[test]
    fn ravi_decompose_reference_points() {
        let r = ravi_decompose(3.0, 4.0, 5.0).unwrap();
        assert_eq!((r.x, r.y, r.z), (3.0, 2.0, 1.0));
        let r = ravi_decompose(2.0, 2.0, 0.4).unwrap();
        assert!((r.x - 0.2).abs() < 1e-15 && (r.y - 0.2).abs() < 1e-15 && (r.z - 1.8).abs() < 1e-15);
        assert!(ravi_decompose(1.0, 1.0, 2.5).is_err());
    }

    #[test]
    fn polynomial_identities_at_reference_points() {
        assert_eq!(ravi_identity_residual(3.0, 2.0, 1.0).unwrap(), 0.0);
        assert_eq!(schur_like_value(3.0, 2.0, 1.0).unwrap(), 71.0);
        assert!(ravi_identity_residual(0.2, 0.2, 1.8).unwrap().abs() < 1e-15);
        assert!((schur_like_value(0.2, 0.2, 1.8).unwrap() - 0.004096).abs() < 1e-17);
        assert!(matches!(
            schur_like_value(1.0, -1.0, 1.0),
            Err(TrigonError::NonPositiveInput { name: "y", .. })
        ));
    }

    #[test]
    fn hyperbolic_transfer_characterization() {
        // Thin triangle: no circumcircle, Bbar < 0, transfer invalid.
        let thin = validate_triangle(GeometryKind::Hyperbolic, 1.99, 1.0, 1.0).unwrap();
        assert!(!transfer_is_valid_euclidean(&thin));
        assert!(quantity_b_bar(&thin) < 0.0);
        assert!(circumradius(&thin).is_err());
        // Fat triangle: all three hold.
        let fat = validate_triangle(GeometryKind::Hyperbolic, 1.0, 1.0, 1.0).unwrap();
        assert!(transfer_is_valid_euclidean(&fat));
        assert!(quantity_b_bar(&fat) > 0.0);
        assert!(circumradius(&fat).is_ok());
    }

    #[test]
    fn sign_laws_and_residuals_spot_checks() {
        let h = validate_triangle(GeometryKind::Hyperbolic, 2.0, 2.0, 0.4).unwrap();
        let (diff, ok) = lemma2_sign_check(&h);
        assert!(ok && diff > 0.03);
        let s = validate_triangle(GeometryKind::Spherical, 3.0, 3.0, 1.5).unwrap();
        let (diff, ok) = lemma2_sign_check(&s);
        assert!(ok && diff < -0.2);
        assert!(prop_sum_bound(&h).abs() < 1e-15);
        let h2 = validate_triangle(GeometryKind::Hyperbolic, 2.5, 2.0, 1.0).unwrap();
        assert!(prop_sum_bound(&h2) > 0.15);
        assert!(prop_product_identity_residual(&h).unwrap().abs() < 1e-14);
        assert!(sum_factorization_residual(GeometryKind::Hyperbolic, 2.0, 2.0, 0.4)
            .unwrap()
            .abs()
            < 1e-14);
        let e = validate_triangle(GeometryKind::Euclidean, 3.0, 4.0, 5.0).unwrap();
        assert!(prop_product_identity_residual(&e).is_err());
    }
}
