//! Rigorous certification of chain gaps over side boxes by interval
//! branch-and-bound.
//!
//! Given a chain, a gap `term_i - term_j` (`i < j`), and a box of sides, the
//! engine proves one of three outcomes for the valid triangles inside the
//! box:
//!
//! * `Proven` — every valid triangle in the box satisfies `gap >= -tol`,
//!   established either by outward-rounded interval evaluation of the gap or
//!   by a polynomial positivity kernel (an exact sum-of-squares style
//!   certificate evaluated in interval arithmetic);
//! * `Refuted` — a concrete witness triangle was found whose gap, evaluated
//!   in plain f64 on validated sides, is below `-tol`;
//! * `Inconclusive` — some sub-boxes hit the depth, width, or budget limits
//!   undecided.
//!
//! Determinism: the root box is deterministically pre-split into a fixed
//! list of sub-boxes which are processed independently (in parallel, with a
//! fixed per-sub-box budget) and merged in sub-box order, so results and
//! statistics are identical for every thread count.

use crate::chains::{term_value_t, ChainId, TermKind};
use crate::error::{Result, TrigonError};
use crate::geometry::{validate_triangle, GeometryKind, DEGENERACY_MARGIN};
use crate::interval::IntervalScalar;
use rayon::prelude::*;

/// Cushion used when classifying boxes against the validity boundary: a box
/// is discarded as empty only when it is empty by at least this much.
const CLASSIFY_EPS: f64 = 1e-12;

/// Number of sub-boxes the root is pre-split into before parallel processing.
const PRE_SPLIT_TARGET: usize = 64;

/// A box of triangle sides in one geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideBox {
    kind: GeometryKind,
    sides: [IntervalScalar; 3],
}

impl SideBox {
    /// Build a box from `(lo, hi)` pairs for each side. The pairs must be
    /// finite with `lo <= hi`.
    pub fn new(
        kind: GeometryKind,
        a: (f64, f64),
        b: (f64, f64),
        c: (f64, f64),
    ) -> Result<SideBox> {
        let mut sides = [IntervalScalar::point(0.0); 3];
        for (slot, (name, (lo, hi))) in sides
            .iter_mut()
            .zip([("a", a), ("b", b), ("c", c)])
        {
            if !lo.is_finite() || !hi.is_finite() || lo > hi {
                return Err(TrigonError::BadBox {
                    detail: format!("side {name} range [{lo}, {hi}] is not a finite interval"),
                });
            }
            *slot = IntervalScalar::new(lo, hi);
        }
        Ok(SideBox { kind, sides })
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    pub fn sides(&self) -> [IntervalScalar; 3] {
        self.sides
    }
}

/// Options controlling the branch-and-bound run.
#[derive(Debug, Clone)]
pub struct CertifyOpts {
    /// Gaps down to `-tol` still count as holding (default 0: prove `>= 0`).
    pub tol: f64,
    /// Maximum bisection depth per sub-box.
    pub max_depth: u32,
    /// Global box budget, divided evenly across sub-boxes.
    pub max_boxes: u64,
    /// Worker threads; `None` consults the `TRIGON_THREADS` environment
    /// variable, and failing that lets the thread pool pick.
    pub threads: Option<usize>,
    /// Boxes whose sides are all narrower than this stop splitting.
    pub min_width: f64,
}

impl Default for CertifyOpts {
    fn default() -> CertifyOpts {
        CertifyOpts {
            tol: 0.0,
            max_depth: 64,
            max_boxes: 2_000_000,
            threads: None,
            min_width: 1e-6,
        }
    }
}

/// A concrete violating triangle found during refutation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub sides: [f64; 3],
    /// The gap value at the witness, evaluated in plain f64 — negative
    /// beyond tolerance by construction.
    pub gap: f64,
}

/// Outcome of a certification run.
#[derive(Debug, Clone, PartialEq)]
pub enum CertifyStatus {
    Proven,
    Refuted { witness: Witness },
    Inconclusive { undecided: u64 },
}

/// Full record of a certification run.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub chain: ChainId,
    pub i: usize,
    pub j: usize,
    pub status: CertifyStatus,
    pub boxes_processed: u64,
    pub max_depth_reached: u32,
}

fn check_pair(chain: ChainId, i: usize, j: usize) -> Result<(TermKind, TermKind)> {
    let kinds = chain.term_kinds();
    for index in [i, j] {
        if index >= kinds.len() {
            return Err(TrigonError::IndexOutOfRange {
                index,
                len: kinds.len(),
            });
        }
    }
    if i >= j {
        return Err(TrigonError::InvalidIndexPair { i, j });
    }
    Ok((kinds[i], kinds[j]))
}

/// Clip a box to the hard validity bounds of the geometry (sides at least
/// the degeneracy margin; spherical sides at most `pi` minus the margin).
fn clip_to_bounds(sbox: &SideBox) -> Result<[IntervalScalar; 3]> {
    let upper = match sbox.kind {
        GeometryKind::Spherical => std::f64::consts::PI - DEGENERACY_MARGIN,
        _ => f64::MAX,
    };
    let bounds = IntervalScalar::new(DEGENERACY_MARGIN, upper);
    let mut clipped = [IntervalScalar::point(0.0); 3];
    for (slot, side) in clipped.iter_mut().zip(sbox.sides) {
        *slot = side
            .intersect(&bounds)
            .ok_or(TrigonError::EmptyIntersection)?;
    }
    Ok(clipped)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    /// Certainly contains no valid triangle.
    Empty,
    /// May straddle the validity boundary.
    Partial,
    /// Certainly consists of valid triangles only.
    Full,
}

/// Classify a (pre-clipped) box against the triangle-inequality constraints
/// by corner arithmetic, with an outward cushion so `Empty` and `Full` are
/// only reported when certain.
fn classify(kind: GeometryKind, sides: &[IntervalScalar; 3]) -> Class {
    let m = DEGENERACY_MARGIN;
    let [a, b, c] = sides;
    let slack_min = [
        a.lo() + b.lo() - c.hi(),
        a.lo() + c.lo() - b.hi(),
        b.lo() + c.lo() - a.hi(),
    ];
    let slack_max = [
        a.hi() + b.hi() - c.lo(),
        a.hi() + c.hi() - b.lo(),
        b.hi() + c.hi() - a.lo(),
    ];
    if slack_max.iter().any(|&s| s <= m - CLASSIFY_EPS) {
        return Class::Empty;
    }
    let mut full = slack_min.iter().all(|&s| s >= m + CLASSIFY_EPS);
    for side in sides {
        if side.lo() < m + CLASSIFY_EPS {
            full = false;
        }
        if kind == GeometryKind::Spherical
            && side.hi() > std::f64::consts::PI - m - CLASSIFY_EPS
        {
            full = false;
        }
    }
    if full {
        Class::Full
    } else {
        Class::Partial
    }
}

/// Outward-rounded interval enclosure of `term_i - term_j` over a box,
/// clipped to the validity bounds. Errors with
/// [`TrigonError::EmptyIntersection`] when the box certainly contains no
/// valid triangle.
pub fn eval_gap_interval(
    chain: ChainId,
    sbox: &SideBox,
    i: usize,
    j: usize,
) -> Result<IntervalScalar> {
    chain.check_kind(sbox.kind)?;
    let (term_i, term_j) = check_pair(chain, i, j)?;
    let sides = clip_to_bounds(sbox)?;
    if classify(sbox.kind, &sides) == Class::Empty {
        return Err(TrigonError::EmptyIntersection);
    }
    let vi = term_value_t(sbox.kind, sides, term_i);
    let vj = term_value_t(sbox.kind, sides, term_j);
    Ok(vi - vj)
}

#[derive(Debug, Clone, Copy)]
struct WorkBox {
    sides: [IntervalScalar; 3],
    depth: u32,
}

impl WorkBox {
    fn widest_dim(&self) -> usize {
        let widths = self.sides.map(|iv| iv.width());
        let mut best = 0;
        for d in 1..3 {
            if widths[d] > widths[best] {
                best = d;
            }
        }
        best
    }

    fn max_width(&self) -> f64 {
        self.sides.iter().map(|iv| iv.width()).fold(0.0, f64::max)
    }
}

/// Deterministically pre-split the root into at least `target` sub-boxes by
/// repeatedly bisecting the widest dimension of the widest box (ties broken
/// by lowest index).
fn pre_split(root: WorkBox, target: usize) -> Vec<WorkBox> {
    let mut boxes = vec![root];
    while boxes.len() < target {
        let mut best = 0;
        let mut best_width = -1.0;
        for (idx, wb) in boxes.iter().enumerate() {
            let w = wb.max_width();
            if w > best_width {
                best_width = w;
                best = idx;
            }
        }
        if best_width <= 0.0 {
            break;
        }
        let wb = boxes[best];
        let dim = wb.widest_dim();
        let (left, right) = wb.sides[dim].bisect();
        let mut lw = wb;
        lw.sides[dim] = left;
        lw.depth += 1;
        let mut rw = wb;
        rw.sides[dim] = right;
        rw.depth += 1;
        boxes[best] = lw;
        boxes.insert(best + 1, rw);
    }
    boxes
}

#[derive(Debug, Default, Clone)]
struct SubOutcome {
    refuted: Option<Witness>,
    undecided: u64,
    boxes: u64,
    max_depth: u32,
}

struct GapProblem {
    kind: GeometryKind,
    term_i: TermKind,
    term_j: TermKind,
    kernel: Option<Kernel>,
    tol: f64,
    max_depth: u32,
    min_width: f64,
    budget: u64,
}

impl GapProblem {
    fn point_gap(&self, sides: [f64; 3]) -> Option<f64> {
        let t = validate_triangle(self.kind, sides[0], sides[1], sides[2]).ok()?;
        let vi = term_value_t(self.kind, t.sides(), self.term_i);
        let vj = term_value_t(self.kind, t.sides(), self.term_j);
        Some(vi - vj)
    }

    /// Sequential depth-first processing of one sub-box, left half first.
    fn process(&self, root: WorkBox) -> SubOutcome {
        let mut out = SubOutcome::default();
        let mut stack = vec![root];
        while let Some(wb) = stack.pop() {
            if out.boxes >= self.budget {
                out.undecided += 1 + stack.len() as u64;
                break;
            }
            out.boxes += 1;
            out.max_depth = out.max_depth.max(wb.depth);
            let class = classify(self.kind, &wb.sides);
            if class == Class::Empty {
                continue;
            }
            let vi = term_value_t(self.kind, wb.sides, self.term_i);
            let vj = term_value_t(self.kind, wb.sides, self.term_j);
            let gap = vi - vj;
            if gap.lo() >= -self.tol {
                continue; // proved on this box
            }
            if class == Class::Full && gap.hi() < -self.tol {
                // The whole box looks violating; confirm at the midpoint in
                // plain f64 before claiming a refutation.
                let mid = wb.sides.map(|iv| iv.midpoint());
                if let Some(g) = self.point_gap(mid) {
                    if g < -self.tol {
                        out.refuted = Some(Witness { sides: mid, gap: g });
                        break;
                    }
                }
            }
            if let Some(kernel) = self.kernel {
                let sbox = SideBox {
                    kind: self.kind,
                    sides: wb.sides,
                };
                if kernel(&sbox) {
                    continue; // proved by the polynomial certificate
                }
            }
            if wb.depth >= self.max_depth || wb.max_width() < self.min_width {
                out.undecided += 1;
                continue;
            }
            let dim = wb.widest_dim();
            let (left, right) = wb.sides[dim].bisect();
            let mut rw = wb;
            rw.sides[dim] = right;
            rw.depth += 1;
            let mut lw = wb;
            lw.sides[dim] = left;
            lw.depth += 1;
            stack.push(rw);
            stack.push(lw);
        }
        out
    }
}

/// Resolve the worker thread count: explicit option, then the
/// `TRIGON_THREADS` environment variable, then the pool default.
fn resolve_threads(opt: Option<usize>) -> Option<usize> {
    if let Some(n) = opt {
        if n > 0 {
            return Some(n);
        }
    }
    if let Ok(s) = std::env::var("TRIGON_THREADS") {
        if let Ok(n) = s.trim().parse::<usize>() {
            if n > 0 {
                return Some(n);
            }
        }
    }
    None
}

/// Certify `term_i >= term_j - tol` for every valid triangle in the box.
pub fn certify_region(
    chain: ChainId,
    sbox: &SideBox,
    i: usize,
    j: usize,
    opts: &CertifyOpts,
) -> Result<Certificate> {
    chain.check_kind(sbox.kind)?;
    let (term_i, term_j) = check_pair(chain, i, j)?;
    if !(opts.tol >= 0.0) || !opts.min_width.is_sign_positive() {
        return Err(TrigonError::BadBox {
            detail: "tolerance and minimum width must be nonnegative".to_string(),
        });
    }
    let clipped = clip_to_bounds(sbox)?;
    if classify(sbox.kind, &clipped) == Class::Empty {
        return Err(TrigonError::EmptyIntersection);
    }
    let sub_boxes = pre_split(
        WorkBox {
            sides: clipped,
            depth: 0,
        },
        PRE_SPLIT_TARGET,
    );
    let budget = (opts.max_boxes / sub_boxes.len() as u64).max(1000);
    let problem = GapProblem {
        kind: sbox.kind,
        term_i,
        term_j,
        kernel: kernel_for(chain, sbox.kind, i, j),
        tol: opts.tol,
        max_depth: opts.max_depth,
        min_width: opts.min_width,
        budget,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = resolve_threads(opts.threads) {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| TrigonError::BadBox {
        detail: format!("failed to build worker pool: {e}"),
    })?;
    // Every sub-box runs to completion regardless of what the others find,
    // so the merged statistics do not depend on thread scheduling.
    let outcomes: Vec<SubOutcome> =
        pool.install(|| sub_boxes.par_iter().map(|wb| problem.process(*wb)).collect());
    let mut boxes_processed = 0;
    let mut max_depth_reached = 0;
    let mut undecided = 0;
    let mut witness = None;
    for out in &outcomes {
        boxes_processed += out.boxes;
        max_depth_reached = max_depth_reached.max(out.max_depth);
        undecided += out.undecided;
        if witness.is_none() {
            witness = out.refuted;
        }
    }
    let status = if let Some(w) = witness {
        CertifyStatus::Refuted { witness: w }
    } else if undecided > 0 {
        CertifyStatus::Inconclusive { undecided }
    } else {
        CertifyStatus::Proven
    };
    Ok(Certificate {
        chain,
        i,
        j,
        status,
        boxes_processed,
        max_depth_reached,
    })
}

// ---------------------------------------------------------------------------
// Polynomial positivity kernels.
//
// Each kernel encodes an exact algebraic identity `gap = NUM / DEN` where
// NUM is written in a form with no catastrophic cancellation (sums of
// products of squares and positive factors) and DEN is a product of
// quantities positive on the guarded region. The kernel returns true only
// when interval evaluation shows `NUM.lo >= 0` and `DEN.lo > 0`, which
// soundly proves `gap >= 0` on the whole box. All kernels are specific to
// Euclidean geometry and check their own guards, returning false (never an
// unsound true) when a guard fails.
// ---------------------------------------------------------------------------

type Kernel = fn(&SideBox) -> bool;

/// Look up the positivity kernel for a chain gap, if one exists.
pub(crate) fn kernel_for(chain: ChainId, kind: GeometryKind, i: usize, j: usize) -> Option<Kernel> {
    if kind != GeometryKind::Euclidean {
        return None;
    }
    use ChainId::*;
    match (chain, i, j) {
        (Gen, 0, 1) => Some(k_ratio_middle),
        (Gen, 0, 2) => Some(k_ratio_two),
        (Gen, 1, 2) => Some(k_k1),
        (EucSym, 2, 3) | (EucSym, 3, 4) | (EucSym, 4, 5) => Some(k_k1),
        (EucOrig, 0, 1) | (EucSym, 0, 1) => Some(k_ratio_cubic),
        (EucOrig, 1, 2) => Some(k_cubic_cyclic),
        (EucOrig, 2, 3) | (EucOrig, 3, 4) => Some(k_cyclic_tail),
        (EucSym, 1, 2) => Some(k_cubic_halfsym),
        _ => None,
    }
}

/// Positive Euclidean side intervals, or `None`.
fn euclid_sides(sbox: &SideBox) -> Option<[IntervalScalar; 3]> {
    if sbox.kind != GeometryKind::Euclidean {
        return None;
    }
    if sbox.sides.iter().all(|iv| iv.lo() > 0.0) {
        Some(sbox.sides)
    } else {
        None
    }
}

/// Ravi variables `x = (b+c-a)/2`, `y = (a+c-b)/2`, `z = (a+b-c)/2`,
/// guarded to be certainly positive (i.e. the box is strictly inside the
/// triangle-inequality cone).
fn ravi_vars(s: &[IntervalScalar; 3]) -> Option<[IntervalScalar; 3]> {
    let [a, b, c] = *s;
    let x = (b + c - a).half();
    let y = (a + c - b).half();
    let z = (a + b - c).half();
    if x.lo() > 0.0 && y.lo() > 0.0 && z.lo() > 0.0 {
        Some([x, y, z])
    } else {
        None
    }
}

/// Squared Ravi differences computed directly from the sides (`x - y = b - a`
/// and cyclic), which is exact where the halved forms would round.
fn ravi_diff_squares(s: &[IntervalScalar; 3]) -> [IntervalScalar; 3] {
    let [a, b, c] = *s;
    [(b - a).square(), (c - a).square(), (c - b).square()]
}

/// `K1 = a(b-c)^2 + b(a-c)^2 + c(a-b)^2 >= 0` over `abc > 0`. A positive
/// multiple of K1 is the numerator of gen(middle, two), euc_sym
/// (half_sym, third_sym), (third_sym, middle), and (middle, two).
fn k_k1(sbox: &SideBox) -> bool {
    let Some([a, b, c]) = euclid_sides(sbox) else {
        return false;
    };
    let num = a * (b - c).square() + b * (a - c).square() + c * (a - b).square();
    let den = a * b * c;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// `(a+b+c) * (a^2 c + a b^2 + b c^2 - 3abc)` rewritten as a positive
/// combination of squares; numerator of euc_orig (cyclic-1, (2/3)cyclic)
/// and ((2/3)cyclic, two).
fn k_cyclic_tail(sbox: &SideBox) -> bool {
    let Some([a, b, c]) = euclid_sides(sbox) else {
        return false;
    };
    let dab2 = (a - b).square();
    let dac2 = (a - c).square();
    let dbc2 = (b - c).square();
    let num = (c.square() * dab2).half()
        + b * c * dac2
        + (b.square() * dac2).half()
        + a * c * dab2
        + a * b * dbc2
        + (a.square() * dbc2).half();
    let den = a * b * c;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// Schur's inequality (degree 1) in the form
/// `(a+b+c) * Schur = bc(b-c)^2 + ac(a-c)^2 + ab(a-b)^2
///  + ((a-b)^2(a+b-c)^2 + (b-c)^2(b+c-a)^2 + (a-c)^2(a-b+c)^2) / 2`;
/// numerator of euc_sym (cubic, half_sym).
fn k_cubic_halfsym(sbox: &SideBox) -> bool {
    let Some([a, b, c]) = euclid_sides(sbox) else {
        return false;
    };
    let dab2 = (a - b).square();
    let dac2 = (a - c).square();
    let dbc2 = (b - c).square();
    let sab = a + b - c;
    let sbc = b + c - a;
    let sac = a + c - b;
    let num = b * c * dbc2
        + a * c * dac2
        + a * b * dab2
        + (dab2 * sab.square()).half()
        + (dbc2 * sbc.square()).half()
        + (dac2 * sac.square()).half();
    let den = a * b * c;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// euc_orig (cubic, cyclic-1) via the Ravi substitution:
/// `(x+y+z) * E = z^2(x-y)^2 + 2yz(x-z)^2 + y^2(x-z)^2 + 2xz(x-y)^2
///  + 2xy(y-z)^2 + x^2(y-z)^2`, positive multiple of the gap numerator.
fn k_cubic_cyclic(sbox: &SideBox) -> bool {
    let Some(sides) = euclid_sides(sbox) else {
        return false;
    };
    let Some([x, y, z]) = ravi_vars(&sides) else {
        return false;
    };
    let [dxy2, dxz2, dyz2] = ravi_diff_squares(&sides);
    let two = IntervalScalar::point(2.0);
    let num = z.square() * dxy2
        + two * y * z * dxz2
        + y.square() * dxz2
        + two * x * z * dxy2
        + two * x * y * dyz2
        + x.square() * dyz2;
    let den = x * y * z;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// gen (ratio, middle) via Ravi: the gap numerator is
/// `(x+y+z) * (x^2 a (y-z)^2 + y^2 b (x-z)^2 + z^2 c (x-y)^2)` over
/// `4xyz * abc`.
fn k_ratio_middle(sbox: &SideBox) -> bool {
    let Some(sides) = euclid_sides(sbox) else {
        return false;
    };
    let [a, b, c] = sides;
    let Some([x, y, z]) = ravi_vars(&sides) else {
        return false;
    };
    let [dxy2, dxz2, dyz2] = ravi_diff_squares(&sides);
    let f = x.square() * a * dyz2 + y.square() * b * dxz2 + z.square() * c * dxy2;
    let num = (a + b + c).half() * f;
    let den = x * y * z * a * b * c;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// gen (ratio, two) via Ravi: numerator `x(y-z)^2 + y(x-z)^2 + z(x-y)^2`
/// over `4xyz`.
fn k_ratio_two(sbox: &SideBox) -> bool {
    let Some(sides) = euclid_sides(sbox) else {
        return false;
    };
    let Some([x, y, z]) = ravi_vars(&sides) else {
        return false;
    };
    let [dxy2, dxz2, dyz2] = ravi_diff_squares(&sides);
    let num = x * dyz2 + y * dxz2 + z * dxy2;
    let den = x * y * z;
    num.lo() >= 0.0 && den.lo() > 0.0
}

/// euc_orig / euc_sym (ratio, cubic) via Ravi: the gap numerator times
/// `(x+y+z)^2` expands into the sixteen-term nonnegative combination below
/// (over denominator `(x+y+z)^2 * 4xyz * abc`).
fn k_ratio_cubic(sbox: &SideBox) -> bool {
    let Some(sides) = euclid_sides(sbox) else {
        return false;
    };
    let [a, b, c] = sides;
    let Some([x, y, z]) = ravi_vars(&sides) else {
        return false;
    };
    let [dxy2, dxz2, dyz2] = ravi_diff_squares(&sides);
    let two = IntervalScalar::point(2.0);
    let six = IntervalScalar::point(6.0);
    let x2 = x.square();
    let x4 = x2.square();
    let x5 = x4 * x;
    let y2 = y.square();
    let y4 = y2.square();
    let y5 = y4 * y;
    let z2 = z.square();
    let z4 = z2.square();
    let z5 = z4 * z;
    let num = six * y * z5 * dxy2
        + two * y2 * z4 * dxy2
        + two * y4 * z2 * dxz2
        + six * y5 * z * dxz2
        + six * x * z5 * dxy2
        + two * x * y * z4 * dxy2
        + two * x * y4 * z * dxz2
        + six * x * y5 * dxz2
        + two * x2 * z4 * dxy2
        + two * x2 * y4 * dxz2
        + two * x4 * z2 * dyz2
        + two * x4 * y * z * dyz2
        + two * x4 * y2 * dyz2
        + six * x5 * z * dyz2
        + six * x5 * y * dyz2
        + (x2 + y2 + z2) * dxy2 * dxz2 * dyz2;
    let den = x * y * z * a * b * c;
    num.lo() >= 0.0 && den.lo() > 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_box(kind: GeometryKind, a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> SideBox {
        SideBox::new(kind, a, b, c).unwrap()
    }

    #[test]
    fn kernels_accept_reference_boxes() {
        // A comfortably valid box around (3, 4, 5).
        let sbox = full_box(
            GeometryKind::Euclidean,
            (2.9, 3.1),
            (3.9, 4.1),
            (4.9, 5.1),
        );
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4)] {
            let k = kernel_for(ChainId::EucOrig, GeometryKind::Euclidean, i, j).unwrap();
            assert!(k(&sbox), "euc_orig kernel ({i},{j}) rejected a valid box");
        }
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)] {
            let k = kernel_for(ChainId::EucSym, GeometryKind::Euclidean, i, j).unwrap();
            assert!(k(&sbox), "euc_sym kernel ({i},{j}) rejected a valid box");
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let k = kernel_for(ChainId::Gen, GeometryKind::Euclidean, i, j).unwrap();
            assert!(k(&sbox), "gen kernel ({i},{j}) rejected a valid box");
        }
        // Kernels never fire outside Euclidean geometry.
        assert!(kernel_for(ChainId::Gen, GeometryKind::Spherical, 1, 2).is_none());
        // Ravi-guarded kernels reject boxes reaching outside the cone.
        let thin = full_box(GeometryKind::Euclidean, (1.0, 3.0), (1.0, 1.1), (1.0, 1.1));
        assert!(!k_cubic_cyclic(&thin));
    }

    #[test]
    fn gen_middle_two_proves_on_a_wide_box() {
        let sbox = full_box(
            GeometryKind::Euclidean,
            (0.5, 2.5),
            (0.5, 2.5),
            (0.5, 2.5),
        );
        let cert = certify_region(ChainId::Gen, &sbox, 1, 2, &CertifyOpts::default()).unwrap();
        assert_eq!(cert.status, CertifyStatus::Proven);
        assert!(cert.boxes_processed >= 64);
    }

    #[test]
    fn refutation_produces_a_checked_witness() {
        let sbox = full_box(
            GeometryKind::Hyperbolic,
            (1.9, 2.1),
            (1.9, 2.1),
            (0.35, 0.45),
        );
        let cert =
            certify_region(ChainId::HypOrigRatioExt, &sbox, 0, 3, &CertifyOpts::default())
                .unwrap();
        match cert.status {
            CertifyStatus::Refuted { witness } => {
                assert!(witness.gap < 0.0);
                let t = validate_triangle(
                    GeometryKind::Hyperbolic,
                    witness.sides[0],
                    witness.sides[1],
                    witness.sides[2],
                )
                .unwrap();
                let g = crate::chains::gap_value(ChainId::HypOrigRatioExt, &t, 0, 3).unwrap();
                assert!(g < 0.0, "witness gap {g} not negative on re-evaluation");
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn invalid_boxes_are_rejected() {
        assert!(matches!(
            SideBox::new(GeometryKind::Euclidean, (2.0, 1.0), (1.0, 2.0), (1.0, 2.0)),
            Err(TrigonError::BadBox { .. })
        ));
        // Entirely outside the triangle-inequality cone.
        let empty = full_box(GeometryKind::Euclidean, (5.0, 5.1), (1.0, 1.1), (1.0, 1.1));
        assert!(matches!(
            certify_region(ChainId::EucOrig, &empty, 0, 1, &CertifyOpts::default()),
            Err(TrigonError::EmptyIntersection)
        ));
        // Spherical clipping leaves nothing when sides start beyond pi.
        let beyond = SideBox::new(GeometryKind::Spherical, (3.2, 3.3), (1.0, 1.1), (1.0, 1.1))
            .unwrap();
        assert!(matches!(
            eval_gap_interval(ChainId::Gen, &beyond, 0, 1),
            Err(TrigonError::EmptyIntersection)
        ));
        let sbox = full_box(GeometryKind::Euclidean, (1.0, 2.0), (1.0, 2.0), (1.0, 2.0));
        assert!(matches!(
            certify_region(ChainId::EucOrig, &sbox, 3, 1, &CertifyOpts::default()),
            Err(TrigonError::InvalidIndexPair { .. })
        ));
        assert!(matches!(
            certify_region(ChainId::EucOrig, &sbox, 0, 9, &CertifyOpts::default()),
            Err(TrigonError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn interval_gap_contains_point_gap() {
        let sbox = full_box(
            GeometryKind::Euclidean,
            (2.9, 3.1),
            (3.9, 4.1),
            (4.9, 5.1),
        );
        let gap = eval_gap_interval(ChainId::EucOrig, &sbox, 0, 1).unwrap();
        // (3,4,5) gives ratio - cubic = 0.2.
        assert!(gap.contains(0.2));
    }
}
