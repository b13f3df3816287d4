//! Step kernels and their configuration products, with the matching
//! inhomogeneous random digraph sampler.
//!
//! A step kernel is a block-constant arc-probability function: an N-by-N
//! matrix of rational values in `[0, 1]` plus rational block masses summing
//! to one. Its configuration product against a pattern digraph is a finite
//! weighted sum evaluated in exact rational arithmetic, and for the kernel
//! of a host digraph it equals the homomorphism density exactly.

use num::rational::BigRational;
use num::{BigUint, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::homcount::hom_density;
use crate::ratio::{format_rational, parse_rational, rational_to_f64};

/// Block-constant kernel: `values[i][j]` is the arc probability from block
/// `i` to block `j`, `masses[i]` the probability of block `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct StepKernel {
    blocks: usize,
    values: Vec<BigRational>,
    masses: Vec<BigRational>,
}

impl StepKernel {
    pub fn new(values: Vec<Vec<BigRational>>, masses: Vec<BigRational>) -> Result<Self> {
        let blocks = masses.len();
        if blocks == 0 {
            return Err(Error::InvalidArgument("kernel needs at least one block".into()));
        }
        if values.len() != blocks || values.iter().any(|row| row.len() != blocks) {
            return Err(Error::InvalidArgument(format!(
                "kernel values must form a {blocks}x{blocks} matrix"
            )));
        }
        let flat: Vec<BigRational> = values.into_iter().flatten().collect();
        if flat
            .iter()
            .any(|v| v < &BigRational::zero() || v > &BigRational::one())
        {
            return Err(Error::InvalidArgument(
                "kernel values must lie in [0, 1]".into(),
            ));
        }
        if masses.iter().any(|m| m < &BigRational::zero()) {
            return Err(Error::InvalidArgument("block masses must be nonnegative".into()));
        }
        let total: BigRational = masses.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!(
                "block masses must sum to 1 exactly, got {}",
                format_rational(&total)
            )));
        }
        Ok(StepKernel {
            blocks,
            values: flat,
            masses,
        })
    }

    /// The step kernel of a host digraph: one block per vertex with uniform
    /// masses, values the 0/1 adjacency indicator.
    pub fn of_host(h: &Digraph) -> Result<Self> {
        let n = h.vertex_count();
        if n == 0 {
            return Err(Error::InvalidArgument("kernel of an empty digraph".into()));
        }
        let uniform = BigRational::new(BigUint::one().into(), n.into());
        let values = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if h.has_arc(i, j) {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        StepKernel::new(values, vec![uniform; n])
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn value(&self, i: usize, j: usize) -> &BigRational {
        &self.values[i * self.blocks + j]
    }

    pub fn mass(&self, i: usize) -> &BigRational {
        &self.masses[i]
    }

    /// Splits every block into two sub-blocks of half the mass with copied
    /// values. Configuration products are invariant under this refinement.
    pub fn split_blocks(&self) -> StepKernel {
        let n = self.blocks;
        let half = BigRational::new(BigUint::one().into(), 2.into());
        let values = (0..2 * n)
            .map(|i| (0..2 * n).map(|j| self.value(i / 2, j / 2).clone()).collect())
            .collect();
        let masses = (0..2 * n).map(|i| self.mass(i / 2) * &half).collect();
        StepKernel::new(values, masses).expect("refinement preserves validity")
    }

    /// Kernel file format: first line `N`, second line the N block masses,
    /// then N lines of N values, all rationals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty kernel input".into()))?
            .parse()
            .map_err(|_| Error::Parse("kernel header must be the block count N".into()))?;
        let mass_line = lines
            .next()
            .ok_or_else(|| Error::Parse("missing kernel mass line".into()))?;
        let masses: Vec<BigRational> = mass_line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<_>>()?;
        if masses.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} block masses, got {}",
                masses.len()
            )));
        }
        let mut values = Vec::with_capacity(n);
        for (i, line) in lines.enumerate() {
            if i >= n {
                return Err(Error::Parse(format!("more than {n} kernel value rows")));
            }
            let row: Vec<BigRational> = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "kernel value row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            values.push(row);
        }
        if values.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} kernel value rows, got {}",
                values.len()
            )));
        }
        StepKernel::new(values, masses).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.blocks);
        s.push_str(
            &self
                .masses
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" "),
        );
        s.push('\n');
        for i in 0..self.blocks {
            let row: Vec<String> = (0..self.blocks)
                .map(|j| format_rational(self.value(i, j)))
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Configuration product of a pattern digraph against a step kernel: the
/// sum over all block assignments of the product of arc values times the
/// product of block masses, evaluated exactly.
///
/// For the kernel of a host digraph this is the homomorphism density:
///
/// ```
/// use dihom::kernels::{config_product, directed_triangle, StepKernel};
/// use dihom::RootedDirectedTree;
/// use num::rational::BigRational;
///
/// let kernel = StepKernel::of_host(&directed_triangle()).unwrap();
/// let path = RootedDirectedTree::oriented_path_from_signs("++").unwrap();
/// let u = config_product(&path.as_digraph(), &kernel);
/// assert_eq!(u, BigRational::new(1.into(), 9.into()));
/// ```
pub fn config_product(pattern: &Digraph, kernel: &StepKernel) -> BigRational {
    let k = pattern.vertex_count();
    let mut total = BigRational::zero();
    let mut assignment = vec![0usize; k];
    // depth-first over assignments, pruning zero partial products
    fn go(
        pattern: &Digraph,
        kernel: &StepKernel,
        depth: usize,
        assignment: &mut [usize],
        partial: &BigRational,
        total: &mut BigRational,
    ) {
        if depth == assignment.len() {
            *total += partial;
            return;
        }
        'blocks: for x in 0..kernel.blocks() {
            let mut factor = kernel.mass(x).clone();
            if factor.is_zero() {
                continue;
            }
            assignment[depth] = x;
            for earlier in 0..depth {
                let y = assignment[earlier];
                if pattern.has_arc(earlier, depth) {
                    let v = kernel.value(y, x);
                    if v.is_zero() {
                        continue 'blocks;
                    }
                    factor *= v;
                }
                if pattern.has_arc(depth, earlier) {
                    let v = kernel.value(x, y);
                    if v.is_zero() {
                        continue 'blocks;
                    }
                    factor *= v;
                }
            }
            let next = partial * &factor;
            go(pattern, kernel, depth + 1, assignment, &next, total);
        }
    }
    go(
        pattern,
        kernel,
        0,
        &mut assignment,
        &BigRational::one(),
        &mut total,
    );
    total
}

/// Samples the inhomogeneous random loopless digraph: vertex labels drawn
/// from the block masses, then each ordered pair `(i, j)`, `i != j`, becomes
/// an arc independently with the block-pair value. Deterministic in `seed`
/// (ChaCha8; labels first, then pairs in row-major order).
pub fn sample_step_digraph(n: usize, kernel: &StepKernel, seed: u64) -> Result<Digraph> {
    if n == 0 || n > crate::digraph::MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "sample vertex count",
            max: crate::digraph::MAX_VERTICES,
            got: n,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cumulative: Vec<f64> = kernel
        .masses
        .iter()
        .scan(BigRational::zero(), |acc, m| {
            *acc += m;
            Some(rational_to_f64(acc))
        })
        .collect();
    let labels: Vec<usize> = (0..n)
        .map(|_| {
            let x: f64 = rng.gen();
            cumulative
                .iter()
                .position(|&c| x < c)
                .unwrap_or(kernel.blocks() - 1)
        })
        .collect();
    let probs: Vec<f64> = kernel.values.iter().map(rational_to_f64).collect();
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let p = probs[labels[i] * kernel.blocks() + labels[j]];
            if rng.gen::<f64>() < p {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// Result of a Monte-Carlo density check for one pattern and kernel.
#[derive(Clone, Debug, serde::Serialize)]
pub struct McReport {
    pub pattern: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Mean homomorphism density over the trials (exact mean, reported as f64).
    pub mean_t: f64,
    /// The configuration product the densities concentrate around.
    pub expected: f64,
    pub abs_err: f64,
    pub std_err: f64,
    /// Three standard errors plus a fixed 0.01 slack.
    pub tolerance: f64,
    pub pass: bool,
    /// Whether the single allowed retry at 4x trials was taken.
    pub reran: bool,
}

/// Averages `t(pattern, G_n)` over seeded samples and compares against the
/// configuration product. Per-trial seeds are `seed ^ trial`; the per-trial
/// densities are summed exactly, so the outcome is independent of worker
/// count. A failing run is retried once at 4x trials before reporting.
pub fn mc_density_check(
    pattern: &Digraph,
    kernel: &StepKernel,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<McReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let expected = config_product(pattern, kernel);
    let run = |trials: usize, reran: bool| -> Result<McReport> {
        use rayon::prelude::*;
        let densities: Vec<BigRational> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_step_digraph(n, kernel, seed ^ t as u64)?;
                hom_density(pattern, &g)
            })
            .collect::<Result<_>>()?;
        let count = BigRational::from_integer(trials.into());
        let sum: BigRational = densities.iter().sum();
        let mean = &sum / &count;
        let var = if trials > 1 {
            let sq_sum: BigRational = densities.iter().map(|d| d * d).sum();
            let centered = sq_sum - &sum * &sum / &count;
            centered / BigRational::from_integer((trials - 1).into())
        } else {
            BigRational::zero()
        };
        let std_err = (rational_to_f64(&var).max(0.0) / trials as f64).sqrt();
        let abs_err = rational_to_f64(&(&mean - &expected).abs());
        let tolerance = 3.0 * std_err + 0.01;
        Ok(McReport {
            pattern: String::new(),
            n,
            trials,
            seed,
            mean_t: rational_to_f64(&mean),
            expected: rational_to_f64(&expected),
            abs_err,
            std_err,
            tolerance,
            pass: abs_err <= tolerance,
            reran,
        })
    };
    let first = run(trials, false)?;
    if first.pass {
        Ok(first)
    } else {
        run(trials * 4, true)
    }
}

/// Convenience: the exact identity between a configuration product over a
/// host's kernel and the homomorphism density into that host.
pub fn density_identity_gap(pattern: &Digraph, host: &Digraph) -> Result<BigRational> {
    let kernel = StepKernel::of_host(host)?;
    Ok(config_product(pattern, &kernel) - hom_density(pattern, host)?)
}

/// Directed triangle, the standard small example host.
pub fn directed_triangle() -> Digraph {
    Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).expect("static arcs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcount::hom_general;
    use crate::tree::RootedDirectedTree as Tree;

    fn uniform_kernel(n: usize, value: BigRational) -> StepKernel {
        let mass = BigRational::new(BigUint::one().into(), n.into());
        StepKernel::new(vec![vec![value; n]; n], vec![mass; n]).unwrap()
    }

    #[test]
    fn kernel_validation() {
        let half = BigRational::new(1.into(), 2.into());
        assert!(StepKernel::new(vec![vec![half.clone()]], vec![BigRational::one()]).is_ok());
        // masses must sum to one
        assert!(StepKernel::new(vec![vec![half.clone()]], vec![half.clone()]).is_err());
        // values must stay in [0,1]
        let two = BigRational::from_integer(2.into());
        assert!(StepKernel::new(vec![vec![two]], vec![BigRational::one()]).is_err());
    }

    #[test]
    fn single_arc_uniform_kernel() {
        let c = BigRational::new(1.into(), 3.into());
        let k = uniform_kernel(4, c.clone());
        let arc = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(config_product(&arc, &k), c);
    }

    #[test]
    fn arcless_pattern_integrates_to_one() {
        let k = uniform_kernel(3, BigRational::new(1.into(), 2.into()));
        let pattern = Digraph::empty(4).unwrap();
        assert_eq!(config_product(&pattern, &k), BigRational::one());
    }

    #[test]
    fn two_path_on_the_triangle_kernel() {
        let k = StepKernel::of_host(&directed_triangle()).unwrap();
        let p = Tree::oriented_path_from_signs("++").unwrap();
        assert_eq!(
            config_product(&p.as_digraph(), &k),
            BigRational::new(1.into(), 9.into())
        );
    }

    #[test]
    fn host_kernel_matches_density_for_three_arc_trees() {
        for t in crate::tree::enumerate_directed_trees(3).unwrap() {
            for host in crate::digraph::enumerate_hosts(3).unwrap() {
                assert!(
                    density_identity_gap(&t.as_digraph(), &host).unwrap().is_zero(),
                    "tree {} host {:?}",
                    t.to_literal(),
                    host
                );
            }
        }
    }

    #[test]
    fn single_arc_host_kernel() {
        let host = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let k = StepKernel::of_host(&host).unwrap();
        assert_eq!(k.blocks(), 2);
        let ones: usize = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .filter(|&(i, j)| k.value(i, j).is_one())
            .count();
        assert_eq!(ones, 1);
    }

    #[test]
    fn block_duplication_invariance() {
        let host = directed_triangle();
        let k = StepKernel::of_host(&host).unwrap();
        let split = k.split_blocks();
        let split_again = split.split_blocks();
        for pattern in crate::tree::enumerate_directed_trees(2).unwrap() {
            let d = pattern.as_digraph();
            let base = config_product(&d, &k);
            assert_eq!(config_product(&d, &split), base);
            assert_eq!(config_product(&d, &split_again), base);
        }
    }

    #[test]
    fn kernel_text_round_trip() {
        let k = StepKernel::of_host(&directed_triangle()).unwrap().split_blocks();
        let back = StepKernel::parse(&k.to_text()).unwrap();
        assert_eq!(k, back);
        assert!(StepKernel::parse("").is_err());
        assert!(StepKernel::parse("2\n1/2 1/3\n0 0\n0 0\n").is_err());
    }

    #[test]
    fn sampler_extremes() {
        let zero = uniform_kernel(2, BigRational::zero());
        let one = uniform_kernel(2, BigRational::one());
        for seed in 0..20 {
            assert_eq!(sample_step_digraph(10, &zero, seed).unwrap().arc_count(), 0);
            assert_eq!(sample_step_digraph(10, &one, seed).unwrap().arc_count(), 90);
        }
    }

    #[test]
    fn sampler_is_seed_deterministic_and_loopless() {
        let k = StepKernel::of_host(&directed_triangle()).unwrap();
        for seed in 0..10 {
            let a = sample_step_digraph(12, &k, seed).unwrap();
            let b = sample_step_digraph(12, &k, seed).unwrap();
            assert_eq!(a, b);
            for v in 0..12 {
                assert!(!a.has_arc(v, v));
            }
        }
    }

    #[test]
    fn sampler_density_concentrates() {
        // arc probability 1/2: the 2000-run empirical density sits within
        // 0.02 of 1/2 by binomial concentration
        let k = uniform_kernel(2, BigRational::new(1.into(), 2.into()));
        let mut arcs = 0u64;
        let runs = 2000u64;
        let n = 20usize;
        for seed in 0..runs {
            arcs += sample_step_digraph(n, &k, seed).unwrap().arc_count() as u64;
        }
        let density = arcs as f64 / (runs as f64 * (n * (n - 1)) as f64);
        assert!((density - 0.5).abs() < 0.02, "density {density}");
    }

    #[test]
    fn mc_check_zero_kernel() {
        let zero = uniform_kernel(2, BigRational::zero());
        let p = Tree::oriented_path_from_signs("++").unwrap();
        let r = mc_density_check(&p.as_digraph(), &zero, 10, 20, 7).unwrap();
        assert!(r.pass);
        assert_eq!(r.mean_t, 0.0);
        assert_eq!(r.expected, 0.0);
    }

    #[test]
    fn mc_check_triangle_two_path() {
        let k = StepKernel::of_host(&directed_triangle()).unwrap();
        let p = Tree::oriented_path_from_signs("++").unwrap();
        let r = mc_density_check(&p.as_digraph(), &k, 30, 500, 1).unwrap();
        assert!(
            r.pass,
            "mean {} expected {} err {} tol {}",
            r.mean_t, r.expected, r.abs_err, r.tolerance
        );
        assert!((r.expected - 1.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_pattern_identity() {
        // the density identity also covers disconnected patterns
        let pattern = Digraph::from_arcs(4, &[(0, 1), (3, 2)]).unwrap();
        for host in crate::digraph::enumerate_hosts(2).unwrap() {
            assert!(density_identity_gap(&pattern, &host).unwrap().is_zero());
        }
        let _ = hom_general(&pattern, &directed_triangle());
    }
}
