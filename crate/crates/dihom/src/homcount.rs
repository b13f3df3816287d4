//! Exact homomorphism counting kernels.
//!
//! [`hom_general`] is the brute-force oracle: a backtracking count that works
//! for any pattern digraph. [`hom_tree`] and its rooted/weighted/truncated
//! variants run bottom-up message passing over a tree pattern, which is what
//! every sweep and checker calls in anger; the two routes are verified
//! against each other across the test suite.

use num::rational::BigRational;
use num::{BigUint, One, Zero};

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};
use crate::ratio::uint_ratio;
use crate::tree::{Orient, RootedDirectedTree};

/// Number of homomorphisms `pattern -> host`: vertex maps sending every arc
/// of the pattern onto an arc of the host.
///
/// Disconnected patterns factor over their components. The empty pattern has
/// exactly one (empty) homomorphism.
pub fn hom_general(pattern: &Digraph, host: &Digraph) -> BigUint {
    let mut total = BigUint::one();
    for comp in connected_components(pattern) {
        let sub = induced_subgraph(pattern, &comp);
        total *= count_component(&sub, host);
        if total.is_zero() {
            break;
        }
    }
    total
}

/// Number of injective homomorphisms `pattern -> host`.
pub fn emb_injective(pattern: &Digraph, host: &Digraph) -> BigUint {
    if pattern.vertex_count() > host.vertex_count() {
        return BigUint::zero();
    }
    let plan = SearchPlan::for_pattern(pattern);
    let mut count = BigUint::zero();
    let mut images = vec![0usize; pattern.vertex_count()];
    backtrack_injective(&plan, host, 0, 0, &mut images, &mut count);
    count
}

/// Number of injective homomorphisms of the tree that send the root to `v`.
pub fn emb_rooted(t: &RootedDirectedTree, host: &Digraph, v: usize) -> Result<BigUint> {
    if v >= host.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v,
            n: host.vertex_count(),
        });
    }
    let pattern = t.as_digraph();
    if pattern.vertex_count() > host.vertex_count() {
        return Ok(BigUint::zero());
    }
    let plan = SearchPlan::for_pattern(&pattern);
    // the tree's root is vertex 0, which the plan visits first
    debug_assert_eq!(plan.order[0], 0);
    let mut count = BigUint::zero();
    let mut images = vec![0usize; pattern.vertex_count()];
    images[0] = v;
    backtrack_injective(&plan, host, 1, 1u64 << v, &mut images, &mut count);
    Ok(count)
}

/// Calls `f` with every homomorphism `pattern -> host`, as a slice of images
/// indexed by pattern vertex. Intended for small instances and oracles.
pub fn for_each_hom(pattern: &Digraph, host: &Digraph, mut f: impl FnMut(&[usize])) {
    let plan = SearchPlan::for_pattern(pattern);
    let mut images = vec![0usize; pattern.vertex_count()];
    enumerate_maps(&plan, host, 0, &mut images, &mut f);
}

/// `hom(T, host)` by bottom-up message passing; agrees with
/// [`hom_general`] on the tree's digraph.
///
/// ```
/// use dihom::{Digraph, RootedDirectedTree};
/// use dihom::homcount::hom_tree;
///
/// let host = Digraph::from_rows(&["000", "000", "110"]).unwrap();
/// let star = RootedDirectedTree::star(0, 3).unwrap();
/// assert_eq!(hom_tree(&star, &host), 8u32.into());
/// ```
pub fn hom_tree(t: &RootedDirectedTree, host: &Digraph) -> BigUint {
    if let Some(v) = hom_tree_u128(t, host) {
        return BigUint::from(v);
    }
    tree_messages(t, host).remove(0).into_iter().sum()
}

/// Number of homomorphisms sending the tree's root to `v`.
pub fn hom_rooted(t: &RootedDirectedTree, host: &Digraph, v: usize) -> Result<BigUint> {
    if v >= host.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v,
            n: host.vertex_count(),
        });
    }
    Ok(tree_messages(t, host).remove(0).swap_remove(v))
}

/// Fixed-width fast path for sweeps; `None` when `host_n^k` may not fit.
pub fn hom_tree_u128(t: &RootedDirectedTree, host: &Digraph) -> Option<u128> {
    let n = host.vertex_count();
    let k = t.vertex_count();
    let bits_per_vertex = 64 - (n as u64).leading_zeros() as usize;
    if k * bits_per_vertex > 120 {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let children = t.children_table();
    let mut msgs: Vec<Vec<u128>> = vec![Vec::new(); k];
    for x in (0..k).rev() {
        let mut f = vec![1u128; n];
        for &(c, orient) in &children[x] {
            let child = &msgs[c];
            for (v, fv) in f.iter_mut().enumerate() {
                let mask = match orient {
                    Orient::Out => host.out_mask(v),
                    Orient::In => host.in_mask(v),
                };
                let mut s = 0u128;
                for u in bits(mask) {
                    s += child[u];
                }
                *fv *= s;
            }
            msgs[c] = Vec::new();
        }
        msgs[x] = f;
    }
    Some(msgs[0].iter().sum())
}

fn tree_messages(t: &RootedDirectedTree, host: &Digraph) -> Vec<Vec<BigUint>> {
    let n = host.vertex_count();
    let k = t.vertex_count();
    let children = t.children_table();
    let mut msgs: Vec<Vec<BigUint>> = vec![Vec::new(); k];
    for x in (0..k).rev() {
        let mut f = vec![BigUint::one(); n];
        for &(c, orient) in &children[x] {
            for (v, fv) in f.iter_mut().enumerate() {
                let mask = match orient {
                    Orient::Out => host.out_mask(v),
                    Orient::In => host.in_mask(v),
                };
                let mut s = BigUint::zero();
                for u in bits(mask) {
                    s += &msgs[c][u];
                }
                *fv *= s;
            }
        }
        msgs[x] = f;
    }
    msgs
}

/// Weight vector: one nonnegative rational exponent per pattern-tree vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    entries: Vec<BigRational>,
}

impl WeightVector {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.iter().any(|e| e < &BigRational::zero()) {
            return Err(Error::InvalidArgument(
                "weight vector entries must be nonnegative".into(),
            ));
        }
        Ok(WeightVector { entries })
    }

    pub fn zeros(k: usize) -> Self {
        WeightVector {
            entries: vec![BigRational::zero(); k],
        }
    }

    pub fn from_integers(values: &[u32]) -> Self {
        WeightVector {
            entries: values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// `|alpha|`, the sum of all entries.
    pub fn total(&self) -> BigRational {
        self.entries.iter().sum()
    }

    /// All entries as integers, when the vector is integral.
    pub fn as_integers(&self) -> Option<Vec<u32>> {
        self.entries
            .iter()
            .map(|e| {
                if e.denom().is_one() {
                    u32::try_from(e.numer().clone()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.entries.iter().map(crate::ratio::rational_to_f64).collect()
    }
}

/// A tail-truncated weighted count: exact for integral weight vectors,
/// binary64 (flagged) otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum TailCount {
    Exact(BigUint),
    Approx(f64),
}

impl TailCount {
    pub fn as_f64(&self) -> f64 {
        match self {
            TailCount::Exact(x) => crate::ratio::biguint_to_f64(x),
            TailCount::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, TailCount::Exact(_))
    }
}

/// Tail-truncated weighted homomorphism count: the sum over homomorphisms
/// whose root image has total degree at least `delta` of the product of
/// `d(image(x))^alpha_x` over tree vertices.
pub fn hom_tail(
    t: &RootedDirectedTree,
    host: &Digraph,
    delta: usize,
    alpha: &WeightVector,
) -> Result<TailCount> {
    let k = t.vertex_count();
    if alpha.len() != k {
        return Err(Error::InvalidArgument(format!(
            "weight vector has {} entries for a tree on {k} vertices",
            alpha.len()
        )));
    }
    let n = host.vertex_count();
    let children = t.children_table();
    if let Some(ints) = alpha.as_integers() {
        let mut msgs: Vec<Vec<BigUint>> = vec![Vec::new(); k];
        for x in (0..k).rev() {
            let mut f: Vec<BigUint> = (0..n)
                .map(|v| BigUint::from(host.deg_total(v)).pow(ints[x]))
                .collect();
            for &(c, orient) in &children[x] {
                for (v, fv) in f.iter_mut().enumerate() {
                    let mask = match orient {
                        Orient::Out => host.out_mask(v),
                        Orient::In => host.in_mask(v),
                    };
                    let mut s = BigUint::zero();
                    for u in bits(mask) {
                        s += &msgs[c][u];
                    }
                    *fv *= s;
                }
            }
            msgs[x] = f;
        }
        let total = (0..n)
            .filter(|&v| host.deg_total(v) >= delta)
            .map(|v| msgs[0][v].clone())
            .sum();
        Ok(TailCount::Exact(total))
    } else {
        let exps = alpha.to_f64s();
        let mut msgs: Vec<Vec<f64>> = vec![Vec::new(); k];
        for x in (0..k).rev() {
            let mut f: Vec<f64> = (0..n)
                .map(|v| (host.deg_total(v) as f64).powf(exps[x]))
                .collect();
            for &(c, orient) in &children[x] {
                for (v, fv) in f.iter_mut().enumerate() {
                    let mask = match orient {
                        Orient::Out => host.out_mask(v),
                        Orient::In => host.in_mask(v),
                    };
                    let s: f64 = bits(mask).map(|u| msgs[c][u]).sum();
                    *fv *= s;
                }
            }
            msgs[x] = f;
        }
        let total = (0..n)
            .filter(|&v| host.deg_total(v) >= delta)
            .map(|v| msgs[0][v])
            .sum();
        Ok(TailCount::Approx(total))
    }
}

/// Star count by the centre-degree identity: the sum over host vertices of
/// `deg_in^a * deg_out^b`, with `0^0 = 1`. Always equals
/// `hom_general(S_{a,b}, host)`.
pub fn star_hom(a: usize, b: usize, host: &Digraph) -> Result<BigUint> {
    if a + b == 0 {
        return Err(Error::DegenerateStar);
    }
    Ok(star_moment_sum(a, b, host))
}

/// The moment sum behind [`star_hom`], with no arity restriction (`a = b = 0`
/// gives the vertex count).
pub fn star_moment_sum(a: usize, b: usize, host: &Digraph) -> BigUint {
    (0..host.vertex_count())
        .map(|v| {
            BigUint::from(host.deg_in(v)).pow(a as u32)
                * BigUint::from(host.deg_out(v)).pow(b as u32)
        })
        .sum()
}

/// Nonnegative square matrix of exact rationals, read as a weighted digraph.
#[derive(Clone, Debug, PartialEq)]
pub struct NonnegMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl NonnegMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e < &BigRational::zero()) {
            return Err(Error::InvalidArgument(
                "matrix entries must be nonnegative".into(),
            ));
        }
        Ok(NonnegMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        NonnegMatrix {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn constant(n: usize, c: BigRational) -> Result<Self> {
        Self::new(n, vec![c; n * n])
    }

    /// The 0/1 matrix of a digraph.
    pub fn from_digraph(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let mut entries = vec![BigRational::zero(); n * n];
        for (u, v) in d.arcs() {
            entries[u * n + v] = BigRational::one();
        }
        NonnegMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn matmul(&self, other: &NonnegMatrix) -> Result<NonnegMatrix> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("matrix size mismatch".into()));
        }
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        NonnegMatrix::new(n, entries)
    }

    /// `A^p` for `p >= 1` by repeated multiplication.
    pub fn power(&self, p: u32) -> Result<NonnegMatrix> {
        if p == 0 {
            return Err(Error::InvalidArgument("matrix power needs p >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..p {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Sum of all entries.
    pub fn sum(&self) -> BigRational {
        self.entries.iter().sum()
    }

    /// Parses `n` on the first line, then n rows of n rationals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix input".into()))?
            .parse()
            .map_err(|_| Error::Parse("matrix header must be the size n".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for (i, line) in lines.enumerate() {
            if i >= n {
                return Err(Error::Parse(format!("more than {n} matrix rows")));
            }
            let row: Vec<&str> = line.split_whitespace().collect();
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for e in row {
                entries.push(crate::ratio::parse_rational(e)?);
            }
        }
        if entries.len() != n * n {
            return Err(Error::Parse(format!(
                "expected {n} matrix rows, got {}",
                entries.len() / n.max(1)
            )));
        }
        NonnegMatrix::new(n, entries).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| crate::ratio::format_rational(self.get(i, j)))
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Weighted homomorphism count over a nonnegative matrix: the sum over all
/// vertex maps of the product of arc weights. For a directed path on `p+1`
/// vertices this is the total sum of `A^p`.
pub fn hom_weighted(t: &RootedDirectedTree, a: &NonnegMatrix) -> BigRational {
    let n = a.size();
    let k = t.vertex_count();
    let children = t.children_table();
    let mut msgs: Vec<Vec<BigRational>> = vec![Vec::new(); k];
    for x in (0..k).rev() {
        let mut f = vec![BigRational::one(); n];
        for &(c, orient) in &children[x] {
            for (v, fv) in f.iter_mut().enumerate() {
                let mut s = BigRational::zero();
                for u in 0..n {
                    let w = match orient {
                        Orient::Out => a.get(v, u),
                        Orient::In => a.get(u, v),
                    };
                    if !w.is_zero() {
                        s += w * &msgs[c][u];
                    }
                }
                *fv *= s;
            }
        }
        msgs[x] = f;
    }
    msgs[0].iter().sum()
}

/// Exact homomorphism density `t(D, H) = hom(D, H) / |V(H)|^{|V(D)|}`.
pub fn hom_density(pattern: &Digraph, host: &Digraph) -> Result<BigRational> {
    let n = host.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "homomorphism density needs a nonempty host".into(),
        ));
    }
    let denom = BigUint::from(n).pow(pattern.vertex_count() as u32);
    Ok(uint_ratio(hom_general(pattern, host), denom))
}

/// Table of pair-pinned counts for the pruned tree `T(a,b)`: entry `(u, w)`
/// counts homomorphisms of `T` minus its pendant leaves at `a` and `b` that
/// send `a` to `u` and `b` to `w`. The deleted leaf multiplicities are kept
/// so the full count can be rebuilt from degree powers.
#[derive(Clone, Debug)]
pub struct PairCounts {
    n: usize,
    counts: Vec<BigUint>,
    pub in_leaves_a: usize,
    pub out_leaves_a: usize,
    pub in_leaves_b: usize,
    pub out_leaves_b: usize,
}

impl PairCounts {
    pub fn entry(&self, u: usize, w: usize) -> &BigUint {
        &self.counts[u * self.n + w]
    }

    /// Row marginal `R(u)`: homomorphisms of the pruned tree with `a -> u`.
    pub fn row_marginal(&self, u: usize) -> BigUint {
        (0..self.n).map(|w| self.entry(u, w).clone()).sum()
    }

    /// Column marginal `L(w)`: homomorphisms of the pruned tree with `b -> w`.
    pub fn col_marginal(&self, w: usize) -> BigUint {
        (0..self.n).map(|u| self.entry(u, w).clone()).sum()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().cloned().sum()
    }

    /// Rebuilds `hom(T, host)` from the table and the deleted leaf counts:
    /// the bilinear expansion over images of `a` and `b` weighted by
    /// `deg_in(u)^{i_a} deg_out(u)^{o_a} deg_in(w)^{i_b} deg_out(w)^{o_b}`.
    pub fn reconstruct_hom(&self, host: &Digraph) -> BigUint {
        let mut total = BigUint::zero();
        for u in 0..self.n {
            let fu = BigUint::from(host.deg_in(u)).pow(self.in_leaves_a as u32)
                * BigUint::from(host.deg_out(u)).pow(self.out_leaves_a as u32);
            if fu.is_zero() {
                continue;
            }
            for w in 0..self.n {
                let nw = self.entry(u, w);
                if nw.is_zero() {
                    continue;
                }
                let fw = BigUint::from(host.deg_in(w)).pow(self.in_leaves_b as u32)
                    * BigUint::from(host.deg_out(w)).pow(self.out_leaves_b as u32);
                total += nw * &fu * fw;
            }
        }
        total
    }
}

/// Deletes the pendant leaves of `t` at the distinct vertices `a` and `b`
/// and tabulates the homomorphism counts of the remaining tree with the
/// images of `a` and `b` pinned.
pub fn pair_counts(
    t: &RootedDirectedTree,
    a: usize,
    b: usize,
    host: &Digraph,
) -> Result<PairCounts> {
    let k = t.vertex_count();
    if a == b {
        return Err(Error::InvalidArgument(
            "pair counts need two distinct vertices".into(),
        ));
    }
    for v in [a, b] {
        if v >= k {
            return Err(Error::VertexOutOfRange { v, n: k });
        }
    }
    let d = t.as_digraph();
    let mut deleted = vec![false; k];
    let mut in_a = 0;
    let mut out_a = 0;
    let mut in_b = 0;
    let mut out_b = 0;
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
        match (nbr == a, incoming) {
            (true, true) => in_a += 1,
            (true, false) => out_a += 1,
            (false, true) => in_b += 1,
            (false, false) => out_b += 1,
        }
    }
    let kept: Vec<usize> = (0..k).filter(|&v| !deleted[v]).collect();
    let pruned = induced_subgraph(&d, &kept);
    let pos = |v: usize| kept.iter().position(|&x| x == v).expect("kept vertex");
    let (pa, pb) = (pos(a), pos(b));

    let n = host.vertex_count();
    let mut counts = vec![BigUint::zero(); n * n];
    for_each_hom(&pruned, host, |images| {
        counts[images[pa] * n + images[pb]] += 1u32;
    });
    Ok(PairCounts {
        n,
        counts,
        in_leaves_a: in_a,
        out_leaves_a: out_a,
        in_leaves_b: in_b,
        out_leaves_b: out_b,
    })
}

// ---------------------------------------------------------------------------
// backtracking machinery

/// Visit order and adjacency constraints for backtracking: vertices are
/// taken component by component in BFS order, and each slot lists the
/// already-placed neighbours it must respect.
struct SearchPlan {
    order: Vec<usize>,
    /// per slot: (earlier pattern vertex, true when the pattern arc points
    /// from that vertex to this slot's vertex)
    constraints: Vec<Vec<(usize, bool)>>,
}

impl SearchPlan {
    fn for_pattern(pattern: &Digraph) -> SearchPlan {
        let n = pattern.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut slot_of = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                slot_of[u] = order.len();
                order.push(u);
                for v in bits(pattern.underlying_mask(u)) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut constraints = vec![Vec::new(); n];
        for (slot, &v) in order.iter().enumerate() {
            for u in bits(pattern.underlying_mask(v)) {
                if slot_of[u] < slot {
                    if pattern.has_arc(u, v) {
                        constraints[slot].push((u, true));
                    }
                    if pattern.has_arc(v, u) {
                        constraints[slot].push((u, false));
                    }
                }
            }
        }
        SearchPlan { order, constraints }
    }

    fn candidates(&self, host: &Digraph, slot: usize, images: &[usize]) -> u64 {
        let mut mask = full_mask(host.vertex_count());
        for &(u, forward) in &self.constraints[slot] {
            let hu = images[u];
            mask &= if forward {
                host.out_mask(hu)
            } else {
                host.in_mask(hu)
            };
        }
        mask
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in bits(d.underlying_mask(u)) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn induced_subgraph(d: &Digraph, vertices: &[usize]) -> Digraph {
    let mut arcs = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            if d.has_arc(u, v) {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(vertices.len(), &arcs).expect("induced subgraph")
}

/// Backtracking count for one connected pattern, summing candidate counts at
/// the last slot instead of descending.
fn count_component(pattern: &Digraph, host: &Digraph) -> BigUint {
    let k = pattern.vertex_count();
    if k == 0 {
        return BigUint::one();
    }
    let plan = SearchPlan::for_pattern(pattern);
    let mut count = BigUint::zero();
    let mut images = vec![0usize; k];
    fn go(
        plan: &SearchPlan,
        host: &Digraph,
        slot: usize,
        images: &mut [usize],
        count: &mut BigUint,
    ) {
        let mask = plan.candidates(host, slot, images);
        if slot + 1 == plan.order.len() {
            *count += mask.count_ones() as u64;
            return;
        }
        for v in bits(mask) {
            images[plan.order[slot]] = v;
            go(plan, host, slot + 1, images, count);
        }
    }
    go(&plan, host, 0, &mut images, &mut count);
    count
}

fn backtrack_injective(
    plan: &SearchPlan,
    host: &Digraph,
    slot: usize,
    used: u64,
    images: &mut [usize],
    count: &mut BigUint,
) {
    if slot == plan.order.len() {
        *count += 1u32;
        return;
    }
    let mask = plan.candidates(host, slot, images) & !used;
    if slot + 1 == plan.order.len() {
        *count += mask.count_ones() as u64;
        return;
    }
    for v in bits(mask) {
        images[plan.order[slot]] = v;
        backtrack_injective(plan, host, slot + 1, used | (1 << v), images, count);
    }
}

fn enumerate_maps(
    plan: &SearchPlan,
    host: &Digraph,
    slot: usize,
    images: &mut [usize],
    f: &mut impl FnMut(&[usize]),
) {
    if slot == plan.order.len() {
        f(images);
        return;
    }
    let mask = plan.candidates(host, slot, images);
    for v in bits(mask) {
        images[plan.order[slot]] = v;
        enumerate_maps(plan, host, slot + 1, images, f);
    }
}
