//! Random digraph models and the probabilistic experiments: seeded
//! Erdos-Renyi digraphs, degree-moment summaries, the tree-pattern
//! exploration bound, and the heavy-tailed fractional-moment study of the
//! rooted two-path.

use num::rational::BigRational;
use num::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::inequalities::check_main_bound;
use crate::ratio::{rational_to_f64, uint_ratio};
use crate::report::{BoundReport, Value, REL_GUARD};
use crate::tree::{enumerate_directed_trees, Orient, RootedDirectedTree};

/// Seeded Erdos-Renyi digraph: every ordered pair `i != j` becomes an arc
/// independently with probability `p` (ChaCha8, pairs in row-major order).
pub fn gen_erdos_renyi_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if n > crate::digraph::MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "digraph vertex count",
            max: crate::digraph::MAX_VERTICES,
            got: n,
        });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "arc probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen::<f64>() < p {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// Uniformly random directed tree on `k` vertices: a random parent array
/// with independently oriented arcs.
pub fn random_tree(k: usize, rng: &mut impl Rng) -> RootedDirectedTree {
    let links = (1..k)
        .map(|i| {
            let p = rng.gen_range(0..i);
            let o = if rng.gen::<bool>() { Orient::In } else { Orient::Out };
            (p, o)
        })
        .collect();
    RootedDirectedTree::new(links).expect("parents precede children")
}

/// Exact means of `deg_in^{h-1}`, `deg_out^{h-1}` and `d^{h-1}` over the
/// host's vertices.
#[derive(Clone, Debug)]
pub struct DegreeMomentSummary {
    pub n: usize,
    pub order: usize,
    pub mean_in_pow: BigRational,
    pub mean_out_pow: BigRational,
    pub mean_total_pow: BigRational,
}

impl DegreeMomentSummary {
    /// `mean_in + mean_out <= mean_total <= 2^{h-1} (mean_in + mean_out)`.
    pub fn sandwich_holds(&self) -> bool {
        let sum = &self.mean_in_pow + &self.mean_out_pow;
        let scale = BigRational::from_integer(num::BigInt::from(2).pow(self.order as u32 - 1));
        sum <= self.mean_total_pow && self.mean_total_pow <= scale * sum
    }
}

pub fn degree_moment_summary(host: &Digraph, h: usize) -> Result<DegreeMomentSummary> {
    if h < 2 {
        return Err(Error::InvalidArgument("moment order h must be >= 2".into()));
    }
    let n = host.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("moment summary needs a nonempty host".into()));
    }
    let e = (h - 1) as u32;
    let sum = |f: &dyn Fn(usize) -> usize| -> BigUint {
        (0..n).map(|v| BigUint::from(f(v)).pow(e)).sum()
    };
    let nn = BigUint::from(n);
    Ok(DegreeMomentSummary {
        n,
        order: h,
        mean_in_pow: uint_ratio(sum(&|v| host.deg_in(v)), nn.clone()),
        mean_out_pow: uint_ratio(sum(&|v| host.deg_out(v)), nn.clone()),
        mean_total_pow: uint_ratio(sum(&|v| host.deg_total(v)), nn),
    })
}

/// Star bound over the whole family of `k`-vertex trees: each tree's count
/// against the larger pure-degree moment sum, with the smallest slack
/// reported.
#[derive(Clone, Debug)]
pub struct ExplorationReport {
    pub reports: Vec<BoundReport>,
    pub worst_slack: BigRational,
    pub all_hold: bool,
}

pub fn exploration_bound_report(host: &Digraph, k: usize) -> Result<ExplorationReport> {
    if k < 2 {
        return Err(Error::InvalidArgument("pattern size k must be >= 2".into()));
    }
    let trees = enumerate_directed_trees(k - 1)?;
    let reports: Vec<BoundReport> = trees
        .iter()
        .map(|t| check_main_bound(t, host))
        .collect();
    let worst_slack = reports
        .iter()
        .map(|r| match r.slack() {
            Value::Exact(s) => s,
            Value::Approx(_) => unreachable!("star bound is exact"),
        })
        .min()
        .expect("at least one tree");
    let all_hold = reports.iter().all(|r| r.holds);
    Ok(ExplorationReport {
        reports,
        worst_slack,
        all_hold,
    })
}

/// Truncation point of the discrete power-law degree distribution.
pub const PARETO_TRUNCATION: u64 = 1_000_000;

/// Outcome of the heavy-tailed two-path experiment.
#[derive(Clone, Debug, Serialize)]
pub struct HeavyTailReport {
    pub d_root: usize,
    pub tail_exponent: f64,
    pub r: f64,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
    /// Degree distribution is truncated at this value; the sampled law keeps
    /// finite r-moments while the first moment diverges without truncation.
    pub truncation: u64,
    /// Samples where the count exceeded its local-norm envelope (must be 0).
    pub envelope_violations: usize,
    /// Empirical mean of `hom^r` over samples.
    pub mean_hom_r: f64,
    /// Empirical mean of `D^r` over all neighbour draws.
    pub mean_deg_r: f64,
    /// Subadditivity reference bound `d_root * mean_deg_r`.
    pub subadditive_bound: f64,
    /// `mean_hom_r / (d_root^r * mean_deg_r)`, recorded as data only.
    pub normalized_ratio: f64,
    pub envelope_holds: bool,
    pub fractional_bound_holds: bool,
}

/// Samples the rooted two-path model: a root of out-degree `d_root` whose
/// out-neighbour out-degrees are i.i.d. discrete power-law draws with the
/// given tail exponent. Per sample the count is the degree sum and the
/// envelope is `d_root^{1-1/p} (sum D_u^p)^{1/p}`; the envelope must
/// dominate sample-wise, and the empirical `r`-moment of the count must
/// stay within 5% of the subadditivity bound `d_root * E[D^r]`.
pub fn heavy_tail_experiment(
    d_root: usize,
    tail_exponent: &BigRational,
    r: &BigRational,
    p: &BigRational,
    samples: usize,
    seed: u64,
) -> Result<HeavyTailReport> {
    if d_root == 0 || samples == 0 {
        return Err(Error::InvalidArgument(
            "need a positive root degree and at least one sample".into(),
        ));
    }
    let te_f = rational_to_f64(tail_exponent);
    let r_f = rational_to_f64(r);
    let p_f = rational_to_f64(p);
    if !(0.0 < te_f && te_f < 1.0) {
        return Err(Error::InvalidArgument("tail exponent must lie in (0, 1)".into()));
    }
    if r >= tail_exponent || r_f <= 0.0 {
        return Err(Error::InvalidArgument(
            "fractional moment r must lie in (0, tail exponent)".into(),
        ));
    }
    if p_f <= 1.0 {
        return Err(Error::InvalidArgument("envelope exponent p must exceed 1".into()));
    }
    let p_int: Option<u32> = if p.denom() == &num::BigInt::from(1) {
        u32::try_from(p.numer().clone()).ok()
    } else {
        None
    };

    // cumulative weights of P(D = d) ~ d^{-(1 + tail)}
    let mut cdf = Vec::with_capacity(PARETO_TRUNCATION as usize);
    let mut acc = 0.0f64;
    for d in 1..=PARETO_TRUNCATION {
        acc += (d as f64).powf(-(1.0 + te_f));
        cdf.push(acc);
    }
    let total = acc;

    struct SampleStats {
        violated: bool,
        hom_r: f64,
        deg_r_sum: f64,
    }

    let stats: Vec<SampleStats> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
            let degrees: Vec<u64> = (0..d_root)
                .map(|_| {
                    let x: f64 = rng.gen::<f64>() * total;
                    cdf.partition_point(|&c| c <= x) as u64 + 1
                })
                .collect();
            let hom: u64 = degrees.iter().sum();
            let violated = match p_int {
                Some(pi) => {
                    // exact form of hom <= d^{1-1/p} (sum D^p)^{1/p}:
                    // hom^p <= d^{p-1} * sum D^p
                    let lhs = BigUint::from(hom).pow(pi);
                    let psum: BigUint =
                        degrees.iter().map(|&d| BigUint::from(d).pow(pi)).sum();
                    let rhs = BigUint::from(d_root).pow(pi - 1) * psum;
                    lhs > rhs
                }
                None => {
                    let psum: f64 = degrees.iter().map(|&d| (d as f64).powf(p_f)).sum();
                    let env = (d_root as f64).powf(1.0 - 1.0 / p_f) * psum.powf(1.0 / p_f);
                    (hom as f64) > env * (1.0 + REL_GUARD)
                }
            };
            SampleStats {
                violated,
                hom_r: (hom as f64).powf(r_f),
                deg_r_sum: degrees.iter().map(|&d| (d as f64).powf(r_f)).sum(),
            }
        })
        .collect();

    let envelope_violations = stats.iter().filter(|s| s.violated).count();
    let mean_hom_r = stats.iter().map(|s| s.hom_r).sum::<f64>() / samples as f64;
    let mean_deg_r =
        stats.iter().map(|s| s.deg_r_sum).sum::<f64>() / (samples * d_root) as f64;
    let subadditive_bound = d_root as f64 * mean_deg_r;
    Ok(HeavyTailReport {
        d_root,
        tail_exponent: te_f,
        r: r_f,
        p: p_f,
        samples,
        seed,
        truncation: PARETO_TRUNCATION,
        envelope_violations,
        mean_hom_r,
        mean_deg_r,
        subadditive_bound,
        normalized_ratio: mean_hom_r / ((d_root as f64).powf(r_f) * mean_deg_r),
        envelope_holds: envelope_violations == 0,
        fractional_bound_holds: mean_hom_r <= subadditive_bound * 1.05,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};

    #[test]
    fn erdos_renyi_extremes() {
        assert_eq!(gen_erdos_renyi_digraph(8, 0.0, 1).unwrap().arc_count(), 0);
        assert_eq!(gen_erdos_renyi_digraph(8, 1.0, 1).unwrap().arc_count(), 56);
        assert!(gen_erdos_renyi_digraph(8, 1.5, 1).is_err());
        assert!(gen_erdos_renyi_digraph(65, 0.5, 1).is_err());
    }

    #[test]
    fn erdos_renyi_density_concentrates() {
        let mut arcs = 0u64;
        let runs = 1000u64;
        let n = 30usize;
        for seed in 0..runs {
            arcs += gen_erdos_renyi_digraph(n, 0.2, seed).unwrap().arc_count() as u64;
        }
        let density = arcs as f64 / (runs as f64 * (n * (n - 1)) as f64);
        assert!((density - 0.2).abs() < 0.02, "density {density}");
    }

    #[test]
    fn erdos_renyi_is_seed_deterministic() {
        let a = gen_erdos_renyi_digraph(20, 0.3, 99).unwrap();
        let b = gen_erdos_renyi_digraph(20, 0.3, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn moment_summary_closed_forms() {
        // complete loopless host: every degree is n-1, total 2n-2
        let n = 5usize;
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let host = Digraph::from_arcs(n, &arcs).unwrap();
        for h in 2..=4usize {
            let s = degree_moment_summary(&host, h).unwrap();
            let e = (h - 1) as u32;
            assert_eq!(
                s.mean_in_pow,
                BigRational::from_integer(num::BigInt::from(n as u32 - 1).pow(e))
            );
            assert_eq!(
                s.mean_total_pow,
                BigRational::from_integer(num::BigInt::from(2 * (n as u32 - 1)).pow(e))
            );
            assert!(s.sandwich_holds());
        }
        // single arc at h = 2: means 1/2, 1/2, 1
        let host = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let s = degree_moment_summary(&host, 2).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(s.mean_in_pow, half);
        assert_eq!(s.mean_out_pow, half);
        assert_eq!(s.mean_total_pow, BigRational::one());
        assert!(degree_moment_summary(&host, 1).is_err());
        assert!(degree_moment_summary(&Digraph::empty(0).unwrap(), 2).is_err());
    }

    #[test]
    fn moment_sandwich_on_random_hosts() {
        for seed in 0..500u64 {
            let n = 1 + (seed % 8) as usize;
            let host = gen_erdos_renyi_digraph(n, 0.4, seed).unwrap();
            for h in 2..=5usize {
                assert!(
                    degree_moment_summary(&host, h).unwrap().sandwich_holds(),
                    "seed {seed} h {h}"
                );
            }
        }
    }

    #[test]
    fn exploration_bound_never_fails() {
        for seed in 0..60u64 {
            let n = 1 + (seed % 8) as usize;
            let host = gen_erdos_renyi_digraph(n, 0.5, seed).unwrap();
            let rep = exploration_bound_report(&host, 4).unwrap();
            assert!(rep.all_hold, "seed {seed}");
            assert!(rep.worst_slack >= BigRational::zero());
            assert_eq!(rep.reports.len(), 8);
        }
        assert!(exploration_bound_report(&Digraph::empty(2).unwrap(), 1).is_err());
    }

    #[test]
    fn exploration_bound_attained_on_source_sink_host() {
        // on the two-level host the dominating side is attained by a pure
        // star pattern
        let host = crate::order::source_sink_host(3, 2).unwrap();
        let rep = exploration_bound_report(&host, 3).unwrap();
        assert!(rep.all_hold);
        assert!(rep.worst_slack.is_zero());
    }

    #[test]
    fn heavy_tail_small_run() {
        let te = BigRational::new(1.into(), 2.into());
        let r = BigRational::new(3.into(), 10.into());
        let p = BigRational::from_integer(4.into());
        let rep = heavy_tail_experiment(5, &te, &r, &p, 2000, 42).unwrap();
        assert!(rep.envelope_holds);
        assert_eq!(rep.envelope_violations, 0);
        assert!(rep.fractional_bound_holds);
        assert!(rep.normalized_ratio.is_finite());
    }

    #[test]
    fn heavy_tail_single_neighbour_is_tight() {
        // d_root = 1: hom = D, so E[hom^r] = E[D^r] and the bound is tight
        let te = BigRational::new(1.into(), 2.into());
        let r = BigRational::new(1.into(), 4.into());
        let p = BigRational::from_integer(2.into());
        let rep = heavy_tail_experiment(1, &te, &r, &p, 500, 3).unwrap();
        assert!(rep.envelope_holds);
        assert!((rep.mean_hom_r - rep.subadditive_bound).abs() < 1e-12);
    }

    #[test]
    fn heavy_tail_fractional_p() {
        let te = BigRational::new(1.into(), 2.into());
        let r = BigRational::new(1.into(), 4.into());
        let p = BigRational::new(3.into(), 2.into());
        let rep = heavy_tail_experiment(4, &te, &r, &p, 500, 9).unwrap();
        assert!(rep.envelope_holds);
    }

    #[test]
    fn heavy_tail_parameter_validation() {
        let te = BigRational::new(1.into(), 2.into());
        let half = BigRational::new(1.into(), 2.into());
        let p = BigRational::from_integer(2.into());
        // r must stay below the tail exponent
        assert!(heavy_tail_experiment(3, &te, &half, &p, 10, 0).is_err());
        assert!(heavy_tail_experiment(3, &te, &BigRational::new(1.into(), 4.into()), &BigRational::one(), 10, 0).is_err());
        assert!(heavy_tail_experiment(0, &te, &BigRational::new(1.into(), 4.into()), &p, 10, 0).is_err());
    }
}
