//! Deterministic counterexample search: minimize a term difference over a
//! side domain with a dense grid scan followed by Nelder-Mead refinement.
//!
//! The whole search is sequential and seeded, so for fixed inputs the result
//! is byte-for-byte reproducible regardless of machine or thread settings.

use crate::chains::{term_value_t, ChainId, TermKind};
use crate::error::{Result, TrigonError};
use crate::geometry::{validate_triangle, GeometryKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gap magnitude below which a search minimum counts as "significantly
/// negative" for comparability classification.
pub const COMPARE_THRESHOLD: f64 = 1e-9;

/// Options controlling the search.
#[derive(Debug, Clone)]
pub struct SearchOpts {
    /// Seed for the extra random multistart points.
    pub seed: u64,
    /// Grid resolution per dimension (inclusive endpoints).
    pub grid_n: usize,
    /// Nelder-Mead iterations per start.
    pub refine_iters: usize,
}

impl Default for SearchOpts {
    fn default() -> SearchOpts {
        SearchOpts {
            seed: 0,
            grid_n: 60,
            refine_iters: 200,
        }
    }
}

/// Result of a minimization run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchResult {
    /// Objective value at `best_triangle`, re-evaluated at the final point.
    pub best_value: f64,
    pub best_triangle: [f64; 3],
    /// Number of objective evaluations performed.
    pub evaluations: u64,
}

/// How two chain terms relate over a domain, as judged by minimizing both
/// differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComparabilityRelation {
    /// `term_i >= term_j` throughout (no significantly negative gap found).
    AlwaysGeq,
    /// `term_i <= term_j` throughout.
    AlwaysLeq,
    /// Both signs occur; the witnesses realize each.
    Incomparable {
        /// Sides where `term_i - term_j > 0`.
        witness_pos: [f64; 3],
        /// Sides where `term_i - term_j < 0`.
        witness_neg: [f64; 3],
    },
    /// Reserved for callers that cannot classify; the scan itself always
    /// returns one of the three variants above.
    Undetermined,
}

/// Outcome of a two-directional comparability scan.
#[derive(Debug, Clone, PartialEq)]
pub struct CompareOutcome {
    pub relation: ComparabilityRelation,
    /// Minimization of `term_i - term_j`.
    pub forward: SearchResult,
    /// Minimization of `term_j - term_i`.
    pub reverse: SearchResult,
}

fn check_domain(domain: &[(f64, f64); 3]) -> Result<()> {
    for (name, (lo, hi)) in ["a", "b", "c"].iter().zip(domain) {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(TrigonError::BadBox {
                detail: format!("domain {name} range [{lo}, {hi}] is not a finite interval"),
            });
        }
    }
    Ok(())
}

fn check_terms(chain: ChainId, i: usize, j: usize) -> Result<(TermKind, TermKind)> {
    let kinds = chain.term_kinds();
    for index in [i, j] {
        if index >= kinds.len() {
            return Err(TrigonError::IndexOutOfRange {
                index,
                len: kinds.len(),
            });
        }
    }
    if i == j {
        return Err(TrigonError::InvalidIndexPair { i, j });
    }
    Ok((kinds[i], kinds[j]))
}

/// Lexicographic comparison of side triples, used to break value ties so the
/// reported minimizer is unique.
fn lex_less(p: &[f64; 3], q: &[f64; 3]) -> bool {
    for d in 0..3 {
        if p[d] < q[d] {
            return true;
        }
        if p[d] > q[d] {
            return false;
        }
    }
    false
}

struct Objective {
    kind: GeometryKind,
    term_i: TermKind,
    term_j: TermKind,
    domain: [(f64, f64); 3],
    evaluations: u64,
    best_value: f64,
    best_point: Option<[f64; 3]>,
}

impl Objective {
    /// Evaluate `term_i - term_j`, with +infinity as the penalty for points
    /// outside the domain box or the triangle validity domain.
    fn eval(&mut self, p: [f64; 3]) -> f64 {
        self.evaluations += 1;
        for d in 0..3 {
            if !(p[d] >= self.domain[d].0 && p[d] <= self.domain[d].1) {
                return f64::INFINITY;
            }
        }
        let Ok(t) = validate_triangle(self.kind, p[0], p[1], p[2]) else {
            return f64::INFINITY;
        };
        let v = term_value_t(self.kind, t.sides(), self.term_i)
            - term_value_t(self.kind, t.sides(), self.term_j);
        let v = if v.is_nan() { f64::INFINITY } else { v };
        if v < self.best_value || (v == self.best_value && match &self.best_point {
            Some(bp) => lex_less(&p, bp),
            None => true,
        }) {
            self.best_value = v;
            self.best_point = Some(p);
        }
        v
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 || hi == lo {
        return vec![0.5 * (lo + hi)];
    }
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k == n - 1 {
                hi
            } else {
                lo + step * k as f64
            }
        })
        .collect()
}

/// One Nelder-Mead run (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5) from a start point, stopping at the iteration budget or when
/// the simplex diameter falls below 1e-12.
fn nelder_mead(obj: &mut Objective, start: [f64; 3], iters: usize) {
    let mut simplex: Vec<([f64; 3], f64)> = Vec::with_capacity(4);
    let fv = obj.eval(start);
    simplex.push((start, fv));
    for d in 0..3 {
        let (lo, hi) = obj.domain[d];
        let span = hi - lo;
        let h = if span > 0.0 {
            0.05 * span
        } else {
            (start[d].abs() * 1e-3).max(1e-6)
        };
        let mut v = start;
        v[d] = (v[d] + h).min(hi.max(start[d]));
        if v[d] == start[d] {
            v[d] = (start[d] - h).max(lo.min(start[d]));
        }
        let fv = obj.eval(v);
        simplex.push((v, fv));
    }
    let sort_simplex = |s: &mut Vec<([f64; 3], f64)>| {
        s.sort_by(|p, q| {
            p.1.total_cmp(&q.1).then_with(|| {
                if lex_less(&p.0, &q.0) {
                    std::cmp::Ordering::Less
                } else if lex_less(&q.0, &p.0) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
        });
    };
    for _ in 0..iters {
        sort_simplex(&mut simplex);
        let diameter = simplex
            .iter()
            .skip(1)
            .map(|(v, _)| {
                (0..3)
                    .map(|d| (v[d] - simplex[0].0[d]).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if diameter < 1e-12 {
            break;
        }
        let worst = simplex[3];
        let mut centroid = [0.0; 3];
        for (v, _) in simplex.iter().take(3) {
            for d in 0..3 {
                centroid[d] += v[d] / 3.0;
            }
        }
        let shifted = |alpha: f64| {
            let mut p = [0.0; 3];
            for d in 0..3 {
                p[d] = centroid[d] + alpha * (centroid[d] - worst.0[d]);
            }
            p
        };
        let reflect = shifted(1.0);
        let fr = obj.eval(reflect);
        if fr < simplex[0].1 {
            let expand = shifted(2.0);
            let fe = obj.eval(expand);
            simplex[3] = if fe < fr { (expand, fe) } else { (reflect, fr) };
        } else if fr < simplex[2].1 {
            simplex[3] = (reflect, fr);
        } else {
            let (contract, fc) = if fr < worst.1 {
                let p = shifted(0.5);
                let f = obj.eval(p);
                (p, f)
            } else {
                let p = shifted(-0.5);
                let f = obj.eval(p);
                (p, f)
            };
            if fc < worst.1.min(fr) {
                simplex[3] = (contract, fc);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].0;
                for k in 1..4 {
                    let mut v = [0.0; 3];
                    for d in 0..3 {
                        v[d] = best[d] + 0.5 * (simplex[k].0[d] - best[d]);
                    }
                    let f = obj.eval(v);
                    simplex[k] = (v, f);
                }
            }
        }
    }
}

fn minimize_terms(
    kind: GeometryKind,
    term_i: TermKind,
    term_j: TermKind,
    domain: [(f64, f64); 3],
    opts: &SearchOpts,
) -> Result<SearchResult> {
    let mut obj = Objective {
        kind,
        term_i,
        term_j,
        domain,
        evaluations: 0,
        best_value: f64::INFINITY,
        best_point: None,
    };
    // Phase 1: deterministic dense grid.
    let axes: Vec<Vec<f64>> = domain
        .iter()
        .map(|&(lo, hi)| linspace(lo, hi, opts.grid_n.max(1)))
        .collect();
    for &a in &axes[0] {
        for &b in &axes[1] {
            for &c in &axes[2] {
                obj.eval([a, b, c]);
            }
        }
    }
    // Phase 2: Nelder-Mead from the grid best plus two seeded random valid
    // points.
    let mut starts: Vec<[f64; 3]> = Vec::new();
    if let Some(p) = obj.best_point {
        starts.push(p);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..2 {
        for _attempt in 0..10_000 {
            let p = [
                sample_in(&mut rng, domain[0]),
                sample_in(&mut rng, domain[1]),
                sample_in(&mut rng, domain[2]),
            ];
            if validate_triangle(kind, p[0], p[1], p[2]).is_ok() {
                starts.push(p);
                break;
            }
        }
    }
    if starts.is_empty() {
        return Err(TrigonError::EmptyDomain);
    }
    for start in starts {
        nelder_mead(&mut obj, start, opts.refine_iters);
    }
    let best_point = obj.best_point.ok_or(TrigonError::EmptyDomain)?;
    // Re-evaluate at the winner so the reported value is exactly the plain
    // evaluation at the reported sides.
    let evaluations = obj.evaluations;
    let best_value = obj.eval(best_point);
    Ok(SearchResult {
        best_value,
        best_triangle: best_point,
        evaluations: evaluations + 1,
    })
}

fn sample_in(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    if hi > lo {
        rng.gen_range(lo..hi)
    } else {
        lo
    }
}

/// Minimize `term_i - term_j` (any pair of distinct indices) over a side
/// domain. Errors with [`TrigonError::EmptyDomain`] when no valid triangle
/// is found in the domain at the configured resolution.
pub fn minimize_gap(
    chain: ChainId,
    kind: GeometryKind,
    i: usize,
    j: usize,
    domain: [(f64, f64); 3],
    opts: &SearchOpts,
) -> Result<SearchResult> {
    chain.check_kind(kind)?;
    let (term_i, term_j) = check_terms(chain, i, j)?;
    check_domain(&domain)?;
    minimize_terms(kind, term_i, term_j, domain, opts)
}

/// Classify the order relation between two chain terms over a domain by
/// minimizing the difference in both directions.
pub fn comparability_scan(
    chain: ChainId,
    kind: GeometryKind,
    i: usize,
    j: usize,
    domain: [(f64, f64); 3],
    opts: &SearchOpts,
) -> Result<CompareOutcome> {
    chain.check_kind(kind)?;
    let (term_i, term_j) = check_terms(chain, i, j)?;
    check_domain(&domain)?;
    let forward = minimize_terms(kind, term_i, term_j, domain, opts)?;
    let reverse = minimize_terms(kind, term_j, term_i, domain, opts)?;
    let neg_forward = forward.best_value < -COMPARE_THRESHOLD;
    let neg_reverse = reverse.best_value < -COMPARE_THRESHOLD;
    let relation = match (neg_forward, neg_reverse) {
        (false, _) => ComparabilityRelation::AlwaysGeq,
        (true, false) => ComparabilityRelation::AlwaysLeq,
        (true, true) => ComparabilityRelation::Incomparable {
            witness_pos: reverse.best_triangle,
            witness_neg: forward.best_triangle,
        },
    };
    Ok(CompareOutcome {
        relation,
        forward,
        reverse,
    })
}
