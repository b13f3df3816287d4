//! Checkers that evaluate both sides of each tree/star/degree-moment
//! inequality on a concrete instance and report the exact slack.
//!
//! Everything with integer or rational data is compared exactly. The two
//! checkers with fractional Hölder exponents ([`check_star_holder`] and the
//! pointwise envelope) evaluate their right-hand side in binary64 and carry
//! the [`crate::report::REL_GUARD`] band; where an exact power
//! comparison exists it is used to certify verdicts inside the band.

use num::rational::BigRational;
use num::{BigUint, One, ToPrimitive};

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};
use crate::homcount::{
    hom_rooted, hom_tail, hom_tree, hom_weighted, star_moment_sum, NonnegMatrix, TailCount,
    WeightVector,
};
use crate::ratio::{biguint_to_f64, rational_to_f64, uint_ratio};
use crate::report::{within_guard, BoundReport, Value, REL_GUARD};
use crate::tree::{unrooted_tree_code, Orient, RootedDirectedTree};

/// Sum of `d(v)^exponent` over vertices with total degree at least `delta`.
pub fn tail_moment_sum(host: &Digraph, exponent: u32, delta: usize) -> BigUint {
    (0..host.vertex_count())
        .filter(|&v| host.deg_total(v) >= delta)
        .map(|v| BigUint::from(host.deg_total(v)).pow(exponent))
        .sum()
}

/// The tree-vs-pure-star bound: `hom(T, H)` against the larger of the two
/// pure-star counts of the same size.
pub fn check_main_bound(t: &RootedDirectedTree, host: &Digraph) -> BoundReport {
    let k = t.vertex_count();
    let lhs = hom_tree(t, host);
    let in_star = star_moment_sum(k - 1, 0, host);
    let out_star = star_moment_sum(0, k - 1, host);
    let rhs = in_star.max(out_star);
    BoundReport::exact_counts(format!("main(k={k})"), lhs, rhs)
}

/// Hölder bound for mixed stars: `hom(S_{n-k,k}, H)` against
/// `(sum deg_in^n)^{(n-k)/n} (sum deg_out^n)^{k/n}`.
///
/// Verdicts within the guard band are re-certified by comparing `lhs^n`
/// against the exact integer product of powers.
pub fn check_star_holder(n: usize, k: usize, host: &Digraph) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("star exponent n must be >= 1".into()));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!("need n >= k >= 0, got n={n} k={k}")));
    }
    let lhs = star_moment_sum(n - k, k, host);
    let s_in = star_moment_sum(n, 0, host);
    let s_out = star_moment_sum(0, n, host);
    let label = format!("star-holder(n={n},k={k})");
    if k == 0 || k == n {
        let rhs = if k == 0 { s_in } else { s_out };
        return Ok(BoundReport::exact_counts(label, lhs, rhs));
    }
    let lhs_f = biguint_to_f64(&lhs);
    let rhs_f =
        biguint_to_f64(&s_in).powf((n - k) as f64 / n as f64) * biguint_to_f64(&s_out).powf(k as f64 / n as f64);
    let holds = if within_guard(lhs_f, rhs_f) {
        // exact certificate: lhs^n <= s_in^(n-k) * s_out^k
        lhs.pow(n as u32) <= s_in.pow((n - k) as u32) * s_out.pow(k as u32)
    } else {
        lhs_f <= rhs_f
    };
    Ok(BoundReport {
        label,
        lhs: Value::from_uint(lhs),
        rhs: Value::Approx(rhs_f),
        holds,
    })
}

/// The four single-orientation reallocations of the pendant leaves at two
/// skeleton leaves `a`, `b`, with the exponents of the geometric mean.
#[derive(Clone, Debug)]
pub struct LeafReallocation {
    /// `[all at a incoming, all at a outgoing, all at b incoming, all at b outgoing]`.
    pub candidates: [RootedDirectedTree; 4],
    /// Deleted-leaf multiplicities `(i_a, o_a, i_b, o_b)`, aligned with the
    /// candidates; their sum is the total number of moved leaves.
    pub exponents: [usize; 4],
    pub moved: usize,
}

/// Vertices that survive deleting all leaves of the tree and have exactly
/// one surviving neighbour.
pub fn skeleton_leaves(t: &RootedDirectedTree) -> Vec<usize> {
    let d = t.as_digraph();
    let k = t.vertex_count();
    let is_leaf: Vec<bool> = (0..k).map(|v| d.deg_total(v) == 1).collect();
    let mut result = Vec::new();
    for v in 0..k {
        if is_leaf[v] {
            continue;
        }
        let surviving = bits(d.underlying_mask(v)).filter(|&u| !is_leaf[u]).count();
        if surviving == 1 {
            result.push(v);
        }
    }
    result
}

/// Builds the four leaf-reallocation candidates for skeleton leaves `a`, `b`.
///
/// Every candidate keeps the arc count and has one more leaf than `t`: all
/// moved pendant leaves sit at a single vertex in a single orientation, and
/// the other vertex becomes a leaf.
pub fn leaf_reallocation_candidates(
    t: &RootedDirectedTree,
    a: usize,
    b: usize,
) -> Result<LeafReallocation> {
    if a == b {
        return Err(Error::InvalidArgument(
            "leaf reallocation needs two distinct skeleton leaves".into(),
        ));
    }
    let sk = skeleton_leaves(t);
    for v in [a, b] {
        if !sk.contains(&v) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not a skeleton leaf"
            )));
        }
    }
    let d = t.as_digraph();
    let k = t.vertex_count();
    let mut deleted = vec![false; k];
    let mut exps = [0usize; 4]; // i_a, o_a, i_b, o_b
    for leaf in 0..k {
        if leaf == a || leaf == b || d.deg_total(leaf) != 1 {
            continue;
        }
        let nbr = bits(d.underlying_mask(leaf)).next().expect("leaf neighbour");
        if nbr != a && nbr != b {
            continue;
        }
        deleted[leaf] = true;
        let incoming = d.has_arc(leaf, nbr);
        let idx = match (nbr == a, incoming) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        exps[idx] += 1;
    }
    let moved: usize = exps.iter().sum();
    if moved == 0 {
        return Err(Error::InvalidArgument(
            "no pendant leaves at the chosen skeleton leaves".into(),
        ));
    }
    let kept: Vec<usize> = (0..k).filter(|&v| !deleted[v]).collect();
    let base: Vec<(usize, usize)> = d
        .arcs()
        .filter(|&(u, v)| !deleted[u] && !deleted[v])
        .map(|(u, v)| {
            let pos = |x| kept.iter().position(|&y| y == x).unwrap();
            (pos(u), pos(v))
        })
        .collect();
    let pos_a = kept.iter().position(|&y| y == a).unwrap();
    let pos_b = kept.iter().position(|&y| y == b).unwrap();
    let kept_n = kept.len();

    let build = |target: usize, orient: Orient| -> Result<RootedDirectedTree> {
        let mut arcs = base.clone();
        for extra in 0..moved {
            let leaf = kept_n + extra;
            match orient {
                Orient::In => arcs.push((leaf, target)),
                Orient::Out => arcs.push((target, leaf)),
            }
        }
        let dg = Digraph::from_arcs(kept_n + moved, &arcs)?;
        RootedDirectedTree::from_digraph(&dg, 0)
    };
    let candidates = [
        build(pos_a, Orient::In)?,
        build(pos_a, Orient::Out)?,
        build(pos_b, Orient::In)?,
        build(pos_b, Orient::Out)?,
    ];
    Ok(LeafReallocation {
        candidates,
        exponents: exps,
        moved,
    })
}

/// The geometric-mean reallocation bound: `hom(T, H)` against the weighted
/// geometric mean of the four candidates' counts, verified exactly as
/// `lhs^m <= prod counts_i^{e_i}`.
pub fn check_geometric_mean(
    t: &RootedDirectedTree,
    a: usize,
    b: usize,
    host: &Digraph,
) -> Result<BoundReport> {
    let re = leaf_reallocation_candidates(t, a, b)?;
    let lhs = hom_tree(t, host);
    let counts: Vec<BigUint> = re.candidates.iter().map(|c| hom_tree(c, host)).collect();

    let mut product = BigUint::one();
    for (count, &e) in counts.iter().zip(&re.exponents) {
        product *= count.pow(e as u32);
    }
    let holds = lhs.pow(re.moved as u32) <= product;

    // the max form follows from the geometric mean
    let max_positive = counts
        .iter()
        .zip(&re.exponents)
        .filter(|&(_, &e)| e > 0)
        .map(|(c, _)| c.clone())
        .max()
        .expect("moved >= 1");
    debug_assert!(!holds || lhs <= max_positive);

    let weighted: Vec<&BigUint> = counts
        .iter()
        .zip(&re.exponents)
        .filter(|&(_, &e)| e > 0)
        .map(|(c, _)| c)
        .collect();
    let rhs = if weighted.iter().all(|c| *c == weighted[0]) {
        Value::from_uint(weighted[0].clone())
    } else {
        let mean = counts
            .iter()
            .zip(&re.exponents)
            .map(|(c, &e)| biguint_to_f64(c).powf(e as f64 / re.moved as f64))
            .product();
        Value::Approx(mean)
    };
    Ok(BoundReport {
        label: "geom-mean".into(),
        lhs: Value::from_uint(lhs),
        rhs,
        holds,
    })
}

/// Tail-truncated bound with constant 4: weighted count against
/// `4 sum d(v)^{k-1+|alpha|}` over vertices of total degree at least `delta`.
pub fn check_tail_bound(
    t: &RootedDirectedTree,
    host: &Digraph,
    delta: usize,
    alpha: &WeightVector,
) -> Result<BoundReport> {
    let k = t.vertex_count();
    let label = format!("tail(delta={delta})");
    match hom_tail(t, host, delta, alpha)? {
        TailCount::Exact(lhs) => {
            let total: u32 = alpha
                .total()
                .to_integer()
                .to_u32()
                .ok_or_else(|| Error::InvalidArgument("weight total too large".into()))?;
            let rhs = BigUint::from(4u32) * tail_moment_sum(host, (k - 1) as u32 + total, delta);
            Ok(BoundReport::exact_counts(label, lhs, rhs))
        }
        TailCount::Approx(lhs) => {
            let e = (k - 1) as f64 + rational_to_f64(&alpha.total());
            let rhs: f64 = 4.0
                * (0..host.vertex_count())
                    .filter(|&v| host.deg_total(v) >= delta)
                    .map(|v| (host.deg_total(v) as f64).powf(e))
                    .sum::<f64>();
            let holds = lhs <= rhs || within_guard(lhs, rhs);
            Ok(BoundReport {
                label,
                lhs: Value::Approx(lhs),
                rhs: Value::Approx(rhs),
                holds,
            })
        }
    }
}

/// Unweighted tail bound with constant 2: `hom_delta(T, H)` against
/// `2 sum d(v)^{k-1}` over vertices of total degree at least `delta`.
pub fn check_tail_bound_unweighted(
    t: &RootedDirectedTree,
    host: &Digraph,
    delta: usize,
) -> BoundReport {
    let k = t.vertex_count();
    let alpha = WeightVector::zeros(k);
    let lhs = match hom_tail(t, host, delta, &alpha).expect("zero weights are valid") {
        TailCount::Exact(x) => x,
        TailCount::Approx(_) => unreachable!("zero weights are integral"),
    };
    let rhs = BigUint::from(2u32) * tail_moment_sum(host, (k - 1) as u32, delta);
    BoundReport::exact_counts(format!("tail-unweighted(delta={delta})"), lhs, rhs)
}

/// Iterated pointwise envelope for rooted counts, one report per host
/// vertex: `hom((T,o),(H,v))` against the leaves-to-root bound built from
/// local in/out p-sums. Exponents are per parent arc, indexed by child
/// vertex (`exponents[c - 1]` for vertex `c`).
pub fn check_pointwise_envelope(
    t: &RootedDirectedTree,
    host: &Digraph,
    exponents: &[BigRational],
) -> Result<Vec<BoundReport>> {
    let k = t.vertex_count();
    if exponents.len() != k - 1 {
        return Err(Error::InvalidArgument(format!(
            "need one exponent per non-root vertex ({} expected, got {})",
            k - 1,
            exponents.len()
        )));
    }
    if exponents.iter().any(|p| p < &BigRational::one()) {
        return Err(Error::InvalidArgument("envelope exponents must be >= 1".into()));
    }
    let n = host.vertex_count();
    let ps: Vec<f64> = exponents.iter().map(rational_to_f64).collect();
    let children = t.children_table();
    let mut env: Vec<Vec<f64>> = vec![Vec::new(); k];
    for x in (0..k).rev() {
        let mut e = vec![1.0f64; n];
        for &(c, orient) in &children[x] {
            let p = ps[c - 1];
            for (v, ev) in e.iter_mut().enumerate() {
                let (deg, mask) = match orient {
                    Orient::Out => (host.deg_out(v), host.out_mask(v)),
                    Orient::In => (host.deg_in(v), host.in_mask(v)),
                };
                let psum: f64 = bits(mask).map(|u| env[c][u].powf(p)).sum();
                *ev *= (deg as f64).powf(1.0 - 1.0 / p) * psum.powf(1.0 / p);
            }
        }
        env[x] = e;
    }
    let mut reports = Vec::with_capacity(n);
    for v in 0..n {
        let lhs = hom_rooted(t, host, v)?;
        let lhs_f = biguint_to_f64(&lhs);
        let rhs = env[0][v];
        let holds = rhs >= lhs_f * (1.0 - REL_GUARD);
        reports.push(BoundReport {
            label: format!("envelope(v={v})"),
            lhs: Value::from_uint(lhs),
            rhs: Value::Approx(rhs),
            holds,
        });
    }
    Ok(reports)
}

/// [`check_pointwise_envelope`] with a single exponent on every arc.
pub fn check_pointwise_envelope_uniform(
    t: &RootedDirectedTree,
    host: &Digraph,
    p: &BigRational,
) -> Result<Vec<BoundReport>> {
    check_pointwise_envelope(t, host, &vec![p.clone(); t.vertex_count() - 1])
}

/// Weighted tree bound: `hom(T, A)` against the larger of the column- and
/// row-sum power sums, all exact rationals.
pub fn check_weighted_tree(t: &RootedDirectedTree, a: &NonnegMatrix) -> BoundReport {
    let k = t.vertex_count();
    let lhs = hom_weighted(t, a);
    let col: BigRational = a.col_sums().iter().map(|c| pow_rational(c, k - 1)).sum();
    let row: BigRational = a.row_sums().iter().map(|r| pow_rational(r, k - 1)).sum();
    let rhs = col.max(row);
    BoundReport::exact(format!("weighted-tree(k={k})"), lhs, rhs)
}

/// Sharp path bound for matrix powers: `sum(A^p)` against
/// `(sum c_i^p)^{1/2} (sum r_i^p)^{1/2}`, certified exactly by squaring.
pub fn check_mv_path(p: u32, a: &NonnegMatrix) -> Result<BoundReport> {
    if p == 0 {
        return Err(Error::InvalidArgument("path power p must be >= 1".into()));
    }
    let lhs = a.power(p)?.sum();
    let col: BigRational = a.col_sums().iter().map(|c| pow_rational(c, p as usize)).sum();
    let row: BigRational = a.row_sums().iter().map(|r| pow_rational(r, p as usize)).sum();
    let product = &col * &row;
    let holds = &lhs * &lhs <= product;
    Ok(BoundReport {
        label: format!("mv-path(p={p})"),
        lhs: Value::Exact(lhs),
        rhs: Value::Approx(rational_to_f64(&product).sqrt()),
        holds,
    })
}

/// Per-vertex moment domination: `hom(T, H)/|V(H)|` against the larger mean
/// degree power. A rescaling of [`check_main_bound`].
pub fn check_moment_domination(t: &RootedDirectedTree, host: &Digraph) -> Result<BoundReport> {
    let n = host.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("moment domination needs a nonempty host".into()));
    }
    let k = t.vertex_count();
    let lhs = uint_ratio(hom_tree(t, host), BigUint::from(n));
    let mean_in = uint_ratio(star_moment_sum(k - 1, 0, host), BigUint::from(n));
    let mean_out = uint_ratio(star_moment_sum(0, k - 1, host), BigUint::from(n));
    Ok(BoundReport::exact(
        format!("moment-domination(h={k})"),
        lhs,
        mean_in.max(mean_out),
    ))
}

fn pow_rational(r: &BigRational, e: usize) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = r.clone();
    for _ in 1..e {
        acc *= r;
    }
    acc
}

/// One step of the reallocation iteration: the tree before the step, the
/// candidate chosen to continue with, and the step's geometric-mean report.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub tree: RootedDirectedTree,
    pub chosen: RootedDirectedTree,
    pub report: BoundReport,
}

/// Runs the leaf-reallocation iteration until the tree is a star, greedily
/// keeping the candidate with the largest count (ties broken by canonical
/// tree code). Every step is itself a checked bound, so the final
/// star dominates the starting tree on this host.
pub fn leaf_reallocation_trace(
    t: &RootedDirectedTree,
    host: &Digraph,
) -> Result<Vec<TraceStep>> {
    let mut current = t.clone();
    let mut steps = Vec::new();
    for _ in 0..t.vertex_count() {
        if current.is_star() {
            break;
        }
        let sk = skeleton_leaves(&current);
        if sk.len() < 2 {
            break;
        }
        let (a, b) = (sk[0], sk[1]);
        let re = leaf_reallocation_candidates(&current, a, b)?;
        let report = check_geometric_mean(&current, a, b, host)?;
        let chosen = re
            .candidates
            .iter()
            .max_by(|x, y| {
                hom_tree(x, host)
                    .cmp(&hom_tree(y, host))
                    .then_with(|| unrooted_tree_code(&y.as_digraph()).cmp(&unrooted_tree_code(&x.as_digraph())))
            })
            .expect("four candidates")
            .clone();
        steps.push(TraceStep {
            tree: current.clone(),
            chosen: chosen.clone(),
            report,
        });
        current = chosen;
    }
    Ok(steps)
}

/// Empirical ratio `lhs / sum_{d >= delta} d^{k-1+|alpha|}` behind the tail
/// bound, recorded as data by the suites ([`None`] when the moment sum is
/// zero). The constant-4 question stays open; nothing below 4 is asserted.
pub fn tail_ratio(report: &BoundReport) -> Option<f64> {
    let rhs = report.rhs.as_f64();
    if rhs <= 0.0 {
        return None;
    }
    Some(report.lhs.as_f64() / (rhs / 4.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcount::hom_general;
    use crate::tree::RootedDirectedTree as Tree;
    use num::Zero;

    fn appendix_host() -> Digraph {
        Digraph::from_rows(&["01100", "00111", "11000", "10000", "10000"]).unwrap()
    }

    fn seeded_digraph(n: usize, seed: u64) -> Digraph {
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                state = state.wrapping_mul(6364136223846793005).wrapping_add(99991);
                if state >> 63 == 1 {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    fn seeded_tree(k: usize, seed: u64) -> Tree {
        let mut state = seed.wrapping_mul(0x2545F4914F6CDD1D) | 1;
        let links = (1..k)
            .map(|i| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let p = (state >> 33) as usize % i;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let o = if state >> 63 == 1 { Orient::In } else { Orient::Out };
                (p, o)
            })
            .collect();
        Tree::new(links).unwrap()
    }

    #[test]
    fn main_bound_on_the_five_vertex_witness() {
        let host = appendix_host();
        // degree profile of the witness host, asserted before use
        let prof = host.degree_profile();
        assert_eq!(prof.deg_out, vec![2, 3, 2, 1, 1]);
        assert_eq!(prof.deg_in, vec![3, 2, 2, 1, 1]);
        let t = Tree::oriented_path_from_signs("+++").unwrap();
        let r = check_main_bound(&t, &host);
        assert!(r.holds);
        assert_eq!(r.lhs, Value::from_usize(37));
        assert_eq!(r.rhs, Value::from_usize(45)); // 8+27+8+1+1 on both sides
    }

    #[test]
    fn main_bound_single_arc_is_tight() {
        for seed in 0..20u64 {
            let host = seeded_digraph(5, seed);
            let t = Tree::star(0, 1).unwrap();
            let r = check_main_bound(&t, &host);
            assert!(r.holds);
            assert_eq!(r.lhs, Value::from_usize(host.arc_count()));
            assert_eq!(r.slack(), Value::Exact(BigRational::zero()));
        }
    }

    #[test]
    fn main_bound_star_is_one_side() {
        for seed in 0..20u64 {
            let host = seeded_digraph(4, seed);
            let r = check_main_bound(&Tree::star(0, 3).unwrap(), &host);
            assert!(r.holds);
        }
        // zero slack when the pattern is the dominating pure star and the
        // host favours that orientation
        let host = Tree::star(0, 3).unwrap().as_digraph();
        let r = check_main_bound(&Tree::star(0, 3).unwrap(), &host);
        assert_eq!(r.slack(), Value::Exact(BigRational::zero()));
    }

    #[test]
    fn star_holder_degenerate_exponents_are_equalities() {
        let host = seeded_digraph(5, 7);
        for (n, k) in [(3, 0), (3, 3), (1, 0), (4, 4)] {
            let r = check_star_holder(n, k, &host).unwrap();
            assert!(r.holds);
            assert_eq!(r.slack(), Value::Exact(BigRational::zero()));
            assert!(r.rhs.is_exact());
        }
        assert!(check_star_holder(0, 0, &host).is_err());
        assert!(check_star_holder(2, 3, &host).is_err());
    }

    #[test]
    fn star_holder_mixed_example() {
        let host = Digraph::from_rows(&["000", "000", "110"]).unwrap();
        let r = check_star_holder(3, 1, &host).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Value::from_usize(0));
        // (sum deg_in^3)^(2/3) (sum deg_out^3)^(1/3) = 2^(2/3) * 8^(1/3)
        let expect = 2f64.powf(2.0 / 3.0) * 2.0;
        assert!((r.rhs.as_f64() - expect).abs() < 1e-12);
    }

    #[test]
    fn leaf_reallocation_on_the_mixed_path() {
        // P_{+-+}: skeleton is the single arc v2 -> v1, both skeleton leaves
        let t = Tree::oriented_path_from_signs("+-+").unwrap();
        let sk = skeleton_leaves(&t);
        assert_eq!(sk, vec![1, 2]);
        let re = leaf_reallocation_candidates(&t, 1, 2).unwrap();
        assert_eq!(re.moved, 2);
        assert_eq!(re.exponents, [1, 0, 0, 1]);
        for cand in &re.candidates {
            assert_eq!(cand.arc_count(), 3);
            assert_eq!(cand.leaves().len(), t.leaves().len() + 1);
        }
        // all four are stars here
        let expected = [
            Tree::star(3, 0).unwrap(),
            Tree::star(1, 2).unwrap(),
            Tree::star(2, 1).unwrap(),
            Tree::star(0, 3).unwrap(),
        ];
        for (cand, exp) in re.candidates.iter().zip(&expected) {
            assert!(cand
                .as_digraph()
                .is_isomorphic_to(&exp.as_digraph())
                .unwrap());
        }
    }

    #[test]
    fn leaf_reallocation_rejects_stars_and_bad_vertices() {
        let star = Tree::star(1, 2).unwrap();
        assert!(skeleton_leaves(&star).is_empty());
        assert!(leaf_reallocation_candidates(&star, 0, 1).is_err());
        let t = Tree::oriented_path_from_signs("+-+").unwrap();
        assert!(leaf_reallocation_candidates(&t, 1, 1).is_err());
        assert!(leaf_reallocation_candidates(&t, 0, 1).is_err());
    }

    #[test]
    fn geometric_mean_zero_host() {
        let t = Tree::oriented_path_from_signs("+-+").unwrap();
        let host = Digraph::empty(3).unwrap();
        let r = check_geometric_mean(&t, 1, 2, &host).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Value::from_usize(0));
        assert_eq!(r.rhs, Value::from_usize(0));
    }

    #[test]
    fn geometric_mean_random_spot_checks() {
        let mut checked = 0;
        for seed in 0..200u64 {
            let k = 4 + (seed % 3) as usize;
            let t = seeded_tree(k, seed);
            let sk = skeleton_leaves(&t);
            if sk.len() < 2 {
                continue;
            }
            let host = seeded_digraph(1 + (seed % 5) as usize, seed ^ 0xfeed);
            let r = check_geometric_mean(&t, sk[0], sk[1], &host).unwrap();
            assert!(r.holds, "seed {seed}: {r}");
            checked += 1;
        }
        assert!(checked > 50);
    }

    #[test]
    fn tail_bound_reduces_to_main_style_bound() {
        for seed in 0..50u64 {
            let k = 1 + (seed % 5) as usize;
            let t = seeded_tree(k, seed);
            let host = seeded_digraph(1 + (seed % 6) as usize, seed + 17);
            let r = check_tail_bound(&t, &host, 0, &WeightVector::zeros(k)).unwrap();
            assert!(r.holds, "seed {seed}");
            let u = check_tail_bound_unweighted(&t, &host, 0);
            assert!(u.holds, "seed {seed}");
            // the unweighted lhs is the plain count
            assert_eq!(u.lhs, Value::from_uint(hom_tree(&t, &host)));
        }
    }

    #[test]
    fn tail_bound_empty_truncation() {
        let t = seeded_tree(3, 5);
        let host = seeded_digraph(4, 5);
        let max_d = (0..4).map(|v| host.deg_total(v)).max().unwrap();
        let r = check_tail_bound(&t, &host, max_d + 1, &WeightVector::zeros(3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Value::from_usize(0));
        assert_eq!(r.rhs, Value::from_usize(0));
    }

    #[test]
    fn envelope_p1_collapses_to_the_recursion() {
        for seed in 0..30u64 {
            let k = 2 + (seed % 4) as usize;
            let t = seeded_tree(k, seed);
            let host = seeded_digraph(1 + (seed % 5) as usize, seed ^ 0xaa);
            let reports =
                check_pointwise_envelope_uniform(&t, &host, &BigRational::one()).unwrap();
            for r in reports {
                assert!(r.holds, "seed {seed}");
                assert!(
                    within_guard(r.lhs.as_f64(), r.rhs.as_f64()),
                    "p=1 must be equality: {r}"
                );
            }
        }
    }

    #[test]
    fn envelope_two_path_matches_closed_form() {
        let t = Tree::oriented_path_from_signs("++").unwrap();
        let p = BigRational::from_integer(2.into());
        for seed in 0..20u64 {
            let host = seeded_digraph(6, seed);
            let reports = check_pointwise_envelope_uniform(&t, &host, &p).unwrap();
            for (v, r) in reports.iter().enumerate() {
                let psum: f64 = host
                    .out_neighbors(v)
                    .map(|u| (host.deg_out(u) as f64).powi(2))
                    .sum();
                let expect = (host.deg_out(v) as f64).sqrt() * psum.sqrt();
                assert!((r.rhs.as_f64() - expect).abs() <= 1e-9 * expect.max(1.0));
                assert!(r.holds);
            }
        }
    }

    #[test]
    fn envelope_rejects_bad_exponents() {
        let t = Tree::star(0, 2).unwrap();
        let host = seeded_digraph(3, 1);
        let half = BigRational::new(1.into(), 2.into());
        assert!(check_pointwise_envelope_uniform(&t, &host, &half).is_err());
        assert!(check_pointwise_envelope(&t, &host, &[BigRational::one()]).is_err());
    }

    #[test]
    fn weighted_tree_zero_matrix() {
        let t = seeded_tree(3, 1);
        let r = check_weighted_tree(&t, &NonnegMatrix::zero(3));
        assert!(r.holds);
        assert_eq!(r.lhs, Value::Exact(BigRational::zero()));
        assert_eq!(r.rhs, Value::Exact(BigRational::zero()));
    }

    #[test]
    fn weighted_tree_bridges_to_main_bound() {
        for seed in 0..20u64 {
            let host = seeded_digraph(4, seed);
            let t = seeded_tree(4, seed);
            let r = check_weighted_tree(&t, &NonnegMatrix::from_digraph(&host));
            let m = check_main_bound(&t, &host);
            assert_eq!(r.lhs.as_exact(), m.lhs.as_exact());
            assert_eq!(r.rhs.as_exact(), m.rhs.as_exact());
        }
    }

    #[test]
    fn mv_path_holds_and_is_sharper_than_max() {
        for seed in 0..60u64 {
            let n = 2 + (seed % 3) as usize;
            let mut state = seed | 1;
            let entries: Vec<BigRational> = (0..n * n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
                    BigRational::new(((state >> 33) % 7).into(), 2.into())
                })
                .collect();
            let a = NonnegMatrix::new(n, entries).unwrap();
            for p in 1..=3u32 {
                let r = check_mv_path(p, &a).unwrap();
                assert!(r.holds, "seed {seed} p {p}");
                // sqrt(XY) <= max(X, Y)
                let col: BigRational =
                    a.col_sums().iter().map(|c| pow_rational(c, p as usize)).sum();
                let row: BigRational =
                    a.row_sums().iter().map(|x| pow_rational(x, p as usize)).sum();
                let max = col.clone().max(row.clone());
                assert!(&col * &row <= &max * &max);
            }
        }
        assert!(check_mv_path(0, &NonnegMatrix::zero(2)).is_err());
    }

    #[test]
    fn moment_domination_rescales_main() {
        for seed in 0..30u64 {
            let host = seeded_digraph(1 + (seed % 8) as usize, seed);
            let t = seeded_tree(2 + (seed % 4) as usize, seed);
            let r = check_moment_domination(&t, &host).unwrap();
            assert!(r.holds, "seed {seed}");
            let m = check_main_bound(&t, &host);
            let n = BigRational::from_integer(host.vertex_count().into());
            assert_eq!(
                r.lhs.as_exact().unwrap() * &n,
                m.lhs.as_exact().unwrap().clone()
            );
        }
        assert!(check_moment_domination(&seeded_tree(2, 0), &Digraph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn trace_reaches_a_dominating_star() {
        for seed in 0..40u64 {
            let k = 4 + (seed % 4) as usize;
            let t = seeded_tree(k, seed);
            let host = seeded_digraph(1 + (seed % 5) as usize, seed ^ 0xbeef);
            let steps = leaf_reallocation_trace(&t, &host).unwrap();
            assert!(steps.len() <= k);
            for s in &steps {
                assert!(s.report.holds, "seed {seed}");
            }
            let last = steps.last().map(|s| s.chosen.clone()).unwrap_or_else(|| t.clone());
            assert!(last.is_star());
            assert_eq!(last.arc_count(), t.arc_count());
            assert!(hom_tree(&t, &host) <= hom_tree(&last, &host));
            // and the star count agrees with the brute-force oracle
            assert_eq!(
                hom_tree(&last, &host),
                hom_general(&last.as_digraph(), &host)
            );
        }
    }

    #[test]
    fn moment_domination_is_tight_on_the_pure_in_host() {
        // host with m sources into a centre, pattern the pure in-star: the
        // count is exactly the in-degree moment sum, so both sides agree
        for m in 1..=5usize {
            for h in 2..=4usize {
                let host = crate::order::source_sink_host(m, 0).unwrap();
                let t = Tree::star(h - 1, 0).unwrap();
                let r = check_moment_domination(&t, &host).unwrap();
                assert!(r.holds);
                assert_eq!(r.slack(), Value::Exact(BigRational::zero()));
                // lhs = m^{h-1} / (m+1)
                let expect = BigRational::new(
                    num::BigInt::from(m).pow(h as u32 - 1),
                    (m as u32 + 1).into(),
                );
                assert_eq!(r.lhs.as_exact().unwrap(), &expect);
            }
        }
    }

    #[test]
    fn tail_ratio_is_data_not_a_bound() {
        let t = seeded_tree(3, 2);
        let host = seeded_digraph(5, 2);
        let r = check_tail_bound(&t, &host, 0, &WeightVector::zeros(3)).unwrap();
        if let Some(ratio) = tail_ratio(&r) {
            assert!(ratio <= 4.0 + 1e-9);
        }
    }
}
