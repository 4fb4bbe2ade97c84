//! Inequality chains: term catalog, evaluation, and verdicts.
//!
//! A *chain* is a finite decreasing sequence of scalar terms attached to a
//! triangle, each term built from the s-mapped sides. The claim a chain makes
//! is `term_0 >= term_1 >= ... >= term_k`, a strengthening ladder between the
//! Euler-type ratio at the top and the constant 2 at the bottom. Evaluation
//! reports every term, every adjacent gap, and a verdict under a relative
//! tolerance.

use crate::error::{Result, TrigonError};
use crate::geometry::{s_map, GeometryKind, Triangle};
use crate::interval::IntervalScalar;

/// Default relative tolerance used by chain verdicts.
pub const DEFAULT_TOL_REL: f64 = 1e-12;

/// The individual term formulas a chain can use. All are functions of the
/// s-mapped sides `s(a), s(b), s(c)` (plus, for `Ratio` and `Middle`, s-maps
/// of side combinations).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    /// `2*s(a)*s(b)*s(c) / B` — the Euler-type radius ratio.
    Ratio,
    /// `(s(a)*s(b)*s(c) + s(a)^3 + s(b)^3 + s(c)^3) / (2*s(a)*s(b)*s(c))`.
    CubicSum,
    /// `s(a)/s(b) + s(b)/s(c) + s(c)/s(a) - 1`.
    CyclicMinusOne,
    /// `(2/3) * (s(a)/s(b) + s(b)/s(c) + s(c)/s(a))`.
    TwoThirdsCyclic,
    /// `(1/2) * (sum of all six ratios s(x)/s(y), x != y) - 1`.
    HalfSymMinusOne,
    /// `(1/3) * (sum of all six ratios s(x)/s(y), x != y)`.
    ThirdSym,
    /// `2*s((a+b)/2)*s((a+c)/2)*s((b+c)/2) / (s(a)*s(b)*s(c))`.
    Middle,
    /// The constant `2`.
    Two,
}

impl TermKind {
    /// Stable snake_case identifier used in reports.
    pub fn name(self) -> &'static str {
        match self {
            TermKind::Ratio => "ratio",
            TermKind::CubicSum => "cubic_sum",
            TermKind::CyclicMinusOne => "cyclic_minus_one",
            TermKind::TwoThirdsCyclic => "two_thirds_cyclic",
            TermKind::HalfSymMinusOne => "half_sym_minus_one",
            TermKind::ThirdSym => "third_sym",
            TermKind::Middle => "middle",
            TermKind::Two => "two",
        }
    }

    /// ASCII rendering of the defining formula.
    pub fn formula(self) -> &'static str {
        match self {
            TermKind::Ratio => "2*s(a)*s(b)*s(c) / (s(a+b-c)*s(a+c-b)*s(b+c-a))",
            TermKind::CubicSum => "(s(a)*s(b)*s(c) + s(a)^3 + s(b)^3 + s(c)^3) / (2*s(a)*s(b)*s(c))",
            TermKind::CyclicMinusOne => "s(a)/s(b) + s(b)/s(c) + s(c)/s(a) - 1",
            TermKind::TwoThirdsCyclic => "(2/3) * (s(a)/s(b) + s(b)/s(c) + s(c)/s(a))",
            TermKind::HalfSymMinusOne => {
                "(1/2) * (s(a)/s(b) + s(b)/s(a) + s(b)/s(c) + s(c)/s(b) + s(a)/s(c) + s(c)/s(a)) - 1"
            }
            TermKind::ThirdSym => {
                "(1/3) * (s(a)/s(b) + s(b)/s(a) + s(b)/s(c) + s(c)/s(b) + s(a)/s(c) + s(c)/s(a))"
            }
            TermKind::Middle => "2*s((a+b)/2)*s((a+c)/2)*s((b+c)/2) / (s(a)*s(b)*s(c))",
            TermKind::Two => "2",
        }
    }
}

/// The chain catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainId {
    /// Euclidean original strengthening: ratio >= cubic_sum >= cyclic-1 >= (2/3)cyclic >= 2.
    EucOrig,
    /// Spherical analogue of the original strengthening (for tan R / tan r).
    SphOrig,
    /// Hyperbolic tail of the original strengthening, without the ratio link.
    HypOrigTail,
    /// The short ratio >= middle >= 2 chain, available in all three geometries.
    Gen,
    /// Euclidean symmetric-sum strengthening, including the middle term.
    EucSym,
    /// Spherical symmetric-sum strengthening.
    SphSym,
    /// Hyperbolic tail of the symmetric-sum strengthening.
    HypSymTail,
    /// Exploratory: the hyperbolic original chain *with* the ratio prepended.
    HypOrigRatioExt,
    /// Exploratory: the hyperbolic symmetric chain *with* the ratio prepended.
    HypSymRatioExt,
    /// Exploratory: the spherical symmetric chain *with* the middle term inserted.
    SphSymProdExt,
}

impl ChainId {
    /// Every chain in catalog order.
    pub const ALL: [ChainId; 10] = [
        ChainId::EucOrig,
        ChainId::SphOrig,
        ChainId::HypOrigTail,
        ChainId::Gen,
        ChainId::EucSym,
        ChainId::SphSym,
        ChainId::HypSymTail,
        ChainId::HypOrigRatioExt,
        ChainId::HypSymRatioExt,
        ChainId::SphSymProdExt,
    ];

    /// Stable lowercase identifier (CLI `--chain` value).
    pub fn id(self) -> &'static str {
        match self {
            ChainId::EucOrig => "euc_orig",
            ChainId::SphOrig => "sph_orig",
            ChainId::HypOrigTail => "hyp_orig_tail",
            ChainId::Gen => "gen",
            ChainId::EucSym => "euc_sym",
            ChainId::SphSym => "sph_sym",
            ChainId::HypSymTail => "hyp_sym_tail",
            ChainId::HypOrigRatioExt => "hyp_orig_ratio_ext",
            ChainId::HypSymRatioExt => "hyp_sym_ratio_ext",
            ChainId::SphSymProdExt => "sph_sym_prod_ext",
        }
    }

    /// Parse a chain identifier.
    pub fn parse(name: &str) -> Result<ChainId> {
        let lowered = name.trim().to_ascii_lowercase();
        ChainId::ALL
            .into_iter()
            .find(|c| c.id() == lowered)
            .ok_or(TrigonError::UnknownChain { name: name.to_string() })
    }

    /// The term sequence, outermost (largest) first.
    pub fn term_kinds(self) -> &'static [TermKind] {
        use TermKind::*;
        match self {
            ChainId::EucOrig | ChainId::SphOrig | ChainId::HypOrigRatioExt => {
                &[Ratio, CubicSum, CyclicMinusOne, TwoThirdsCyclic, Two]
            }
            ChainId::HypOrigTail => &[CubicSum, CyclicMinusOne, TwoThirdsCyclic, Two],
            ChainId::Gen => &[Ratio, Middle, Two],
            ChainId::EucSym => &[Ratio, CubicSum, HalfSymMinusOne, ThirdSym, Middle, Two],
            ChainId::SphSym | ChainId::HypSymRatioExt => {
                &[Ratio, CubicSum, HalfSymMinusOne, ThirdSym, Two]
            }
            ChainId::HypSymTail => &[CubicSum, HalfSymMinusOne, ThirdSym, Two],
            ChainId::SphSymProdExt => &[Ratio, CubicSum, HalfSymMinusOne, ThirdSym, Middle, Two],
        }
    }

    /// Geometries the chain is defined for.
    pub fn allowed_kinds(self) -> &'static [GeometryKind] {
        match self {
            ChainId::EucOrig | ChainId::EucSym => &[GeometryKind::Euclidean],
            ChainId::SphOrig | ChainId::SphSym | ChainId::SphSymProdExt => {
                &[GeometryKind::Spherical]
            }
            ChainId::HypOrigTail
            | ChainId::HypSymTail
            | ChainId::HypOrigRatioExt
            | ChainId::HypSymRatioExt => &[GeometryKind::Hyperbolic],
            ChainId::Gen => &GeometryKind::ALL,
        }
    }

    /// The geometry assumed when none is given.
    pub fn default_kind(self) -> GeometryKind {
        self.allowed_kinds()[0]
    }

    /// Whether the full chain is backed by a proved theorem, as opposed to
    /// the exploratory extensions kept for counterexample study.
    ///
    /// Caveat for [`ChainId::HypOrigTail`]: the catalog lists it as
    /// theorem-backed, but random sampling over thin obtuse hyperbolic
    /// triangles turns up violations of its first link
    /// (`cubic_sum >= cyclic_minus_one`) — for example sides
    /// `(3, 3.3722, 0.4)` give `cubic_sum - cyclic_minus_one ~ -0.11`. The
    /// evaluation and certification machinery reports such regions honestly;
    /// see the README for the full discussion.
    pub fn theorem_backed(self) -> bool {
        !matches!(
            self,
            ChainId::HypOrigRatioExt | ChainId::HypSymRatioExt | ChainId::SphSymProdExt
        )
    }

    /// One-line description for CLI listings.
    pub fn description(self) -> &'static str {
        match self {
            ChainId::EucOrig => "Euclidean strengthening of R >= 2r via cubic and cyclic sums",
            ChainId::SphOrig => "spherical strengthening of tan R >= 2 tan r via cubic and cyclic sums",
            ChainId::HypOrigTail => "hyperbolic tail of the cubic/cyclic strengthening (no ratio link)",
            ChainId::Gen => "ratio >= middle-product >= 2 in all three geometries",
            ChainId::EucSym => "Euclidean strengthening via the full symmetric ratio sum",
            ChainId::SphSym => "spherical strengthening via the full symmetric ratio sum",
            ChainId::HypSymTail => "hyperbolic tail of the symmetric-sum strengthening",
            ChainId::HypOrigRatioExt => "exploratory: hyperbolic cubic/cyclic chain with the ratio prepended",
            ChainId::HypSymRatioExt => "exploratory: hyperbolic symmetric chain with the ratio prepended",
            ChainId::SphSymProdExt => "exploratory: spherical symmetric chain with the middle product inserted",
        }
    }

    /// Check a geometry against the chain, with a typed error on mismatch.
    pub fn check_kind(self, kind: GeometryKind) -> Result<()> {
        if self.allowed_kinds().contains(&kind) {
            Ok(())
        } else {
            Err(TrigonError::KindMismatch {
                chain: self.id(),
                kind,
            })
        }
    }
}

/// The scalar abstraction the term formulas are written against, so the same
/// code path serves plain f64 evaluation and outward-rounded interval
/// evaluation.
pub(crate) trait TriScalar: Copy {
    fn from_f64(x: f64) -> Self;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn div(self, o: Self) -> Self;
    fn half(self) -> Self;
    fn s_map(self, kind: GeometryKind) -> Self;
}

impl TriScalar for f64 {
    fn from_f64(x: f64) -> f64 {
        x
    }
    fn add(self, o: f64) -> f64 {
        self + o
    }
    fn sub(self, o: f64) -> f64 {
        self - o
    }
    fn mul(self, o: f64) -> f64 {
        self * o
    }
    fn div(self, o: f64) -> f64 {
        self / o
    }
    fn half(self) -> f64 {
        self * 0.5
    }
    fn s_map(self, kind: GeometryKind) -> f64 {
        s_map(kind, self)
    }
}

impl TriScalar for IntervalScalar {
    fn from_f64(x: f64) -> IntervalScalar {
        IntervalScalar::point(x)
    }
    fn add(self, o: IntervalScalar) -> IntervalScalar {
        self + o
    }
    fn sub(self, o: IntervalScalar) -> IntervalScalar {
        self - o
    }
    fn mul(self, o: IntervalScalar) -> IntervalScalar {
        self * o
    }
    fn div(self, o: IntervalScalar) -> IntervalScalar {
        self / o
    }
    fn half(self) -> IntervalScalar {
        IntervalScalar::half(self)
    }
    fn s_map(self, kind: GeometryKind) -> IntervalScalar {
        IntervalScalar::s_map(self, kind)
    }
}

/// Evaluate one term formula over any scalar kind. `sides` are the raw sides
/// `(a, b, c)`; the s-map is applied inside so that interval arguments get
/// outward rounding at every step.
pub(crate) fn term_value_t<T: TriScalar>(
    kind: GeometryKind,
    sides: [T; 3],
    term: TermKind,
) -> T {
    let [a, b, c] = sides;
    let sa = a.s_map(kind);
    let sb = b.s_map(kind);
    let sc = c.s_map(kind);
    let sss = sa.mul(sb).mul(sc);
    let one = T::from_f64(1.0);
    let two = T::from_f64(2.0);
    let three = T::from_f64(3.0);
    match term {
        TermKind::Ratio => {
            let f1 = a.add(b).sub(c).s_map(kind);
            let f2 = a.add(c).sub(b).s_map(kind);
            let f3 = b.add(c).sub(a).s_map(kind);
            two.mul(sss).div(f1.mul(f2).mul(f3))
        }
        TermKind::CubicSum => {
            let cubes = sa.mul(sa).mul(sa).add(sb.mul(sb).mul(sb)).add(sc.mul(sc).mul(sc));
            sss.add(cubes).div(two.mul(sss))
        }
        TermKind::CyclicMinusOne => {
            sa.div(sb).add(sb.div(sc)).add(sc.div(sa)).sub(one)
        }
        TermKind::TwoThirdsCyclic => {
            let cyc = sa.div(sb).add(sb.div(sc)).add(sc.div(sa));
            two.div(three).mul(cyc)
        }
        TermKind::HalfSymMinusOne => {
            let sym = sym_sum(sa, sb, sc);
            sym.half().sub(one)
        }
        TermKind::ThirdSym => sym_sum(sa, sb, sc).div(three),
        TermKind::Middle => {
            let m1 = a.add(b).half().s_map(kind);
            let m2 = a.add(c).half().s_map(kind);
            let m3 = b.add(c).half().s_map(kind);
            two.mul(m1).mul(m2).mul(m3).div(sss)
        }
        TermKind::Two => two,
    }
}

/// The sum of all six ratios `s(x)/s(y)` with `x != y`.
fn sym_sum<T: TriScalar>(sa: T, sb: T, sc: T) -> T {
    sa.div(sb)
        .add(sb.div(sa))
        .add(sb.div(sc))
        .add(sc.div(sb))
        .add(sa.div(sc))
        .add(sc.div(sa))
}

/// Evaluate one chain term on a validated triangle.
pub fn term_value(chain: ChainId, t: &Triangle, index: usize) -> Result<f64> {
    chain.check_kind(t.kind())?;
    let kinds = chain.term_kinds();
    let term = *kinds.get(index).ok_or(TrigonError::IndexOutOfRange {
        index,
        len: kinds.len(),
    })?;
    Ok(term_value_t(t.kind(), t.sides(), term))
}

/// `term_i - term_j` for any pair of distinct indices.
pub(crate) fn term_diff(chain: ChainId, t: &Triangle, i: usize, j: usize) -> Result<f64> {
    if i == j {
        return Err(TrigonError::InvalidIndexPair { i, j });
    }
    Ok(term_value(chain, t, i)? - term_value(chain, t, j)?)
}

/// The claimed-nonnegative gap `term_i - term_j` for `i < j`.
pub fn gap_value(chain: ChainId, t: &Triangle, i: usize, j: usize) -> Result<f64> {
    if i >= j {
        return Err(TrigonError::InvalidIndexPair { i, j });
    }
    term_diff(chain, t, i, j)
}

/// Verdict of a chain evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every adjacent gap is nonnegative within tolerance.
    Holds,
    /// Some adjacent gap is negative beyond tolerance; `first_violation` is
    /// the index of the leftmost failing gap.
    Violated { first_violation: usize },
}

/// Full evaluation record for one triangle under one chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub chain: ChainId,
    pub geometry: GeometryKind,
    pub sides: [f64; 3],
    /// Term values, outermost first.
    pub terms: Vec<f64>,
    /// `gaps[i] = terms[i] - terms[i+1]`.
    pub gaps: Vec<f64>,
    pub verdict: Verdict,
}

/// Evaluate every term and adjacent gap of a chain. A gap `g_i` counts as a
/// violation when `g_i < -tol_rel * max(1, |terms[i]|)`.
pub fn evaluate_chain(chain: ChainId, t: &Triangle, tol_rel: f64) -> Result<ChainReport> {
    chain.check_kind(t.kind())?;
    let kind = t.kind();
    let sides = t.sides();
    let terms: Vec<f64> = chain
        .term_kinds()
        .iter()
        .map(|&term| term_value_t(kind, sides, term))
        .collect();
    let gaps: Vec<f64> = terms.windows(2).map(|w| w[0] - w[1]).collect();
    let mut verdict = Verdict::Holds;
    for (i, &g) in gaps.iter().enumerate() {
        let scale = terms[i].abs().max(1.0);
        if !(g >= -tol_rel * scale) {
            verdict = Verdict::Violated { first_violation: i };
            break;
        }
    }
    Ok(ChainReport {
        chain,
        geometry: kind,
        sides,
        terms,
        gaps,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_triangle;

    #[test]
    fn catalog_ids_round_trip() {
        for chain in ChainId::ALL {
            assert_eq!(ChainId::parse(chain.id()).unwrap(), chain);
            assert!(chain.term_kinds().len() >= 3);
            assert_eq!(*chain.term_kinds().last().unwrap(), TermKind::Two);
            assert!(chain.allowed_kinds().contains(&chain.default_kind()));
        }
        assert!(matches!(
            ChainId::parse("nope"),
            Err(TrigonError::UnknownChain { .. })
        ));
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let t = validate_triangle(GeometryKind::Spherical, 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            evaluate_chain(ChainId::EucOrig, &t, DEFAULT_TOL_REL),
            Err(TrigonError::KindMismatch { .. })
        ));
        assert!(evaluate_chain(ChainId::Gen, &t, DEFAULT_TOL_REL).is_ok());
    }

    #[test]
    fn equilateral_gen_terms_are_all_two() {
        for kind in GeometryKind::ALL {
            for side in [0.1, 0.5, 1.0, 2.0] {
                let t = validate_triangle(kind, side, side, side).unwrap();
                let r = evaluate_chain(ChainId::Gen, &t, DEFAULT_TOL_REL).unwrap();
                for v in &r.terms {
                    assert!(
                        (v - 2.0).abs() <= 1e-12,
                        "{kind} side {side}: term {v} != 2"
                    );
                }
                assert_eq!(r.verdict, Verdict::Holds);
            }
        }
    }

    #[test]
    fn euclidean_345_chain_values() {
        let t = validate_triangle(GeometryKind::Euclidean, 3.0, 4.0, 5.0).unwrap();
        let r = evaluate_chain(ChainId::EucSym, &t, DEFAULT_TOL_REL).unwrap();
        let expect = [2.5, 2.3, 2.2, 2.1333333333333333, 2.1, 2.0];
        assert_eq!(r.terms.len(), expect.len());
        for (got, want) in r.terms.iter().zip(expect) {
            assert!((got - want).abs() <= 1e-14 * want.abs().max(1.0), "{got} vs {want}");
        }
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.gaps.len(), 5);
        assert!((term_value(ChainId::EucSym, &t, 4).unwrap() - 2.1).abs() < 1e-15);
    }

    #[test]
    fn gap_and_diff_index_contracts() {
        let t = validate_triangle(GeometryKind::Euclidean, 3.0, 4.0, 5.0).unwrap();
        assert!(matches!(
            gap_value(ChainId::EucOrig, &t, 2, 2),
            Err(TrigonError::InvalidIndexPair { .. })
        ));
        assert!(matches!(
            gap_value(ChainId::EucOrig, &t, 3, 1),
            Err(TrigonError::InvalidIndexPair { .. })
        ));
        assert!(matches!(
            term_value(ChainId::EucOrig, &t, 9),
            Err(TrigonError::IndexOutOfRange { .. })
        ));
        let g = gap_value(ChainId::EucOrig, &t, 0, 1).unwrap();
        assert!((g - 0.2).abs() < 1e-14);
        // term_diff accepts either order.
        let d = term_diff(ChainId::EucOrig, &t, 1, 0).unwrap();
        assert!((d + 0.2).abs() < 1e-14);
    }

    #[test]
    fn interval_terms_contain_f64_terms() {
        let t = validate_triangle(GeometryKind::Spherical, 0.75, 0.75, 1.0).unwrap();
        for (idx, &term) in ChainId::SphSymProdExt.term_kinds().iter().enumerate() {
            let point = term_value(ChainId::SphSymProdExt, &t, idx).unwrap();
            let sides = t.sides().map(IntervalScalar::point);
            let iv = term_value_t(t.kind(), sides, term);
            assert!(
                iv.contains(point),
                "term {idx} interval [{}, {}] misses {point}",
                iv.lo(),
                iv.hi()
            );
        }
    }
}
