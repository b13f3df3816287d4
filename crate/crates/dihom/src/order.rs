//! Exhaustive search in the homomorphism order on directed trees.
//!
//! Two patterns are compared by sweeping every labelled loopless host up to
//! a vertex bound, recording the first host on which each strict inequality
//! appears. A pair with strict hosts in both directions is incomparable and
//! the two hosts form a checkable certificate.
//!
//! The crate ships a witness appendix: a curated table certifying pairwise
//! incomparability of all eight 3-arc tree types, which
//! [`verify_witness_table`] recomputes entry by entry.

use num::bigint::BigInt;
use num::{BigUint, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::digraph::{host_count, host_from_index, Digraph, HOST_ENUM_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::homcount::{hom_tree, hom_tree_u128, star_hom, star_moment_sum};
use crate::report::{BoundReport, Value};
use crate::tree::RootedDirectedTree;

const SCAN_CHUNK: u64 = 8192;

/// A certificate of strict incomparability: one host per direction, with
/// the counts that realize the strict inequalities.
#[derive(Clone, Debug)]
pub struct WitnessRecord {
    pub left: RootedDirectedTree,
    pub right: RootedDirectedTree,
    pub host_gt: Digraph,
    /// `(hom(left), right side count)` on `host_gt`; strictly decreasing.
    pub counts_gt: (BigUint, BigUint),
    pub host_lt: Digraph,
    /// `(hom(left), right side count)` on `host_lt`; strictly increasing.
    pub counts_lt: (BigUint, BigUint),
    /// When set, the right side count is `max(hom(right), hom(right^rev))`.
    pub reversal_symmetrized: bool,
}

impl WitnessRecord {
    fn right_count(&self, host: &Digraph) -> BigUint {
        let plain = hom_tree(&self.right, host);
        if self.reversal_symmetrized {
            plain.max(hom_tree(&self.right.reverse(), host))
        } else {
            plain
        }
    }

    /// Recomputes both counts from the stored hosts and checks strictness.
    pub fn verify(&self) -> bool {
        let gt_l = hom_tree(&self.left, &self.host_gt);
        let gt_r = self.right_count(&self.host_gt);
        let lt_l = hom_tree(&self.left, &self.host_lt);
        let lt_r = self.right_count(&self.host_lt);
        (gt_l, gt_r) == self.counts_gt
            && (lt_l, lt_r) == self.counts_lt
            && self.counts_gt.0 > self.counts_gt.1
            && self.counts_lt.0 < self.counts_lt.1
    }

    pub fn to_json(&self) -> serde_json::Value {
        let host = |h: &Digraph, counts: &(BigUint, BigUint)| {
            json!({
                "n": h.vertex_count(),
                "matrix": matrix_rows(h),
                "counts": [counts.0.to_string(), counts.1.to_string()],
            })
        };
        json!({
            "pair": [self.left.to_literal(), self.right.to_literal()],
            "reversal_symmetrized": self.reversal_symmetrized,
            "host_gt": host(&self.host_gt, &self.counts_gt),
            "host_lt": host(&self.host_lt, &self.counts_lt),
        })
    }
}

pub fn matrix_rows(h: &Digraph) -> Vec<String> {
    (0..h.vertex_count())
        .map(|i| {
            (0..h.vertex_count())
                .map(|j| if h.has_arc(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect()
}

/// Outcome of a bounded sweep. The bounded verdicts only speak about hosts
/// with at most `n_max` vertices; the order over all hosts stays open.
#[derive(Clone, Debug)]
pub enum OrderVerdict {
    IncomparableWitnessed(Box<WitnessRecord>),
    /// `hom(left) >= right side` on every searched host, strictly at least once.
    DominatesUpTo(usize),
    /// `hom(left) <= right side` on every searched host, strictly at least once.
    DominatedUpTo(usize),
    /// Equality on every searched host.
    EqualUpTo(usize),
}

impl OrderVerdict {
    pub fn summary(&self) -> String {
        match self {
            OrderVerdict::IncomparableWitnessed(w) => format!(
                "incomparable (hosts on {} and {} vertices)",
                w.host_gt.vertex_count(),
                w.host_lt.vertex_count()
            ),
            OrderVerdict::DominatesUpTo(n) => format!("dominates up to n={n}"),
            OrderVerdict::DominatedUpTo(n) => format!("dominated up to n={n}"),
            OrderVerdict::EqualUpTo(n) => format!("equal up to n={n}"),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            OrderVerdict::IncomparableWitnessed(w) => json!({
                "verdict": "incomparable",
                "witness": w.to_json(),
            }),
            OrderVerdict::DominatesUpTo(n) => json!({"verdict": "dominates", "n_max": n}),
            OrderVerdict::DominatedUpTo(n) => json!({"verdict": "dominated", "n_max": n}),
            OrderVerdict::EqualUpTo(n) => json!({"verdict": "equal", "n_max": n}),
        }
    }
}

fn check_sweep_size(t: &RootedDirectedTree, n_max: usize) -> Result<()> {
    let bits = 64 - (n_max as u64).leading_zeros() as usize;
    if t.vertex_count() * bits > 120 {
        return Err(Error::SizeLimit {
            what: "sweep pattern vertex count",
            max: 120 / bits,
            got: t.vertex_count(),
        });
    }
    Ok(())
}

fn validate_n_max(n_max: usize) -> Result<()> {
    if n_max == 0 || n_max > HOST_ENUM_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "host sweep vertex bound",
            max: HOST_ENUM_MAX_VERTICES,
            got: n_max,
        });
    }
    Ok(())
}

/// First-hit scan of one host size: minimal enumeration indices where the
/// left count is strictly larger (`gt`) and strictly smaller (`lt`).
///
/// The scan is chunked and runs on the current rayon pool; merging first
/// hits by minimal index makes the result identical for any worker count.
fn scan_level(
    n: usize,
    need_gt: bool,
    need_lt: bool,
    counts: &(impl Fn(&Digraph) -> (u128, u128) + Sync),
) -> (Option<u64>, Option<u64>) {
    let total = host_count(n).expect("validated size");
    let chunks = (total + SCAN_CHUNK - 1) / SCAN_CHUNK;
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * SCAN_CHUNK;
            let end = (start + SCAN_CHUNK).min(total);
            let mut first_gt = None;
            let mut first_lt = None;
            for idx in start..end {
                let host = host_from_index(n, idx).expect("index in range");
                let (ca, cb) = counts(&host);
                if need_gt && first_gt.is_none() && ca > cb {
                    first_gt = Some(idx);
                }
                if need_lt && first_lt.is_none() && ca < cb {
                    first_lt = Some(idx);
                }
                if (!need_gt || first_gt.is_some()) && (!need_lt || first_lt.is_some()) {
                    break;
                }
            }
            (first_gt, first_lt)
        })
        .reduce(
            || (None, None),
            |a, b| (merge_min(a.0, b.0), merge_min(a.1, b.1)),
        )
}

fn merge_min(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

fn sweep(
    left: &RootedDirectedTree,
    right: &RootedDirectedTree,
    n_max: usize,
    reversal_symmetrized: bool,
    counts: impl Fn(&Digraph) -> (u128, u128) + Sync,
) -> OrderVerdict {
    let mut first_gt: Option<(usize, u64)> = None;
    let mut first_lt: Option<(usize, u64)> = None;
    for n in 1..=n_max {
        let (g, l) = scan_level(n, first_gt.is_none(), first_lt.is_none(), &counts);
        if first_gt.is_none() {
            first_gt = g.map(|idx| (n, idx));
        }
        if first_lt.is_none() {
            first_lt = l.map(|idx| (n, idx));
        }
        if first_gt.is_some() && first_lt.is_some() {
            break;
        }
    }
    match (first_gt, first_lt) {
        (Some((ng, ig)), Some((nl, il))) => {
            let host_gt = host_from_index(ng, ig).expect("recorded index");
            let host_lt = host_from_index(nl, il).expect("recorded index");
            let mut record = WitnessRecord {
                left: left.clone(),
                right: right.clone(),
                counts_gt: (BigUint::zero(), BigUint::zero()),
                counts_lt: (BigUint::zero(), BigUint::zero()),
                host_gt,
                host_lt,
                reversal_symmetrized,
            };
            record.counts_gt = (
                hom_tree(left, &record.host_gt),
                record.right_count(&record.host_gt),
            );
            record.counts_lt = (
                hom_tree(left, &record.host_lt),
                record.right_count(&record.host_lt),
            );
            OrderVerdict::IncomparableWitnessed(Box::new(record))
        }
        (Some(_), None) => OrderVerdict::DominatesUpTo(n_max),
        (None, Some(_)) => OrderVerdict::DominatedUpTo(n_max),
        (None, None) => OrderVerdict::EqualUpTo(n_max),
    }
}

/// Compares `hom(a, .)` and `hom(b, .)` over every loopless host on at most
/// `n_max` vertices, in enumeration order with smaller sizes first.
pub fn compare_over_hosts(
    a: &RootedDirectedTree,
    b: &RootedDirectedTree,
    n_max: usize,
) -> Result<OrderVerdict> {
    validate_n_max(n_max)?;
    check_sweep_size(a, n_max)?;
    check_sweep_size(b, n_max)?;
    Ok(sweep(a, b, n_max, false, |host| {
        (
            hom_tree_u128(a, host).expect("size checked"),
            hom_tree_u128(b, host).expect("size checked"),
        )
    }))
}

/// Compares `hom(t, .)` against `max(hom(s, .), hom(s reversed, .))`, the
/// reversal-symmetrized order.
pub fn compare_maxorder(
    t: &RootedDirectedTree,
    s: &RootedDirectedTree,
    n_max: usize,
) -> Result<OrderVerdict> {
    if t.vertex_count() != s.vertex_count() {
        return Err(Error::InvalidArgument(
            "reversal-symmetrized comparison needs same-size patterns".into(),
        ));
    }
    validate_n_max(n_max)?;
    check_sweep_size(t, n_max)?;
    check_sweep_size(s, n_max)?;
    let s_rev = s.reverse();
    Ok(sweep(t, s, n_max, true, |host| {
        let ct = hom_tree_u128(t, host).expect("size checked");
        let cs = hom_tree_u128(s, host).expect("size checked");
        let cr = hom_tree_u128(&s_rev, host).expect("size checked");
        (ct, cs.max(cr))
    }))
}

/// One family-sweep row: comparison of `trees[i]` against `trees[j]`.
#[derive(Clone, Debug)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub verdict: OrderVerdict,
}

/// Pairwise comparison table for a family of same-size trees. Plain order
/// compares unordered pairs; the reversal-symmetrized order is asymmetric,
/// so there both ordered pairs are reported.
pub fn sweep_family(
    trees: &[RootedDirectedTree],
    n_max: usize,
    maxorder: bool,
) -> Result<Vec<PairVerdict>> {
    let mut rows = Vec::new();
    for i in 0..trees.len() {
        for j in 0..trees.len() {
            if i == j || (!maxorder && j < i) {
                continue;
            }
            let verdict = if maxorder {
                compare_maxorder(&trees[i], &trees[j], n_max)?
            } else {
                compare_over_hosts(&trees[i], &trees[j], n_max)?
            };
            rows.push(PairVerdict { i, j, verdict });
        }
    }
    Ok(rows)
}

/// Exact difference of the two length-3 path counts together with its
/// edge-sum form: `hom(P_+-+) - hom(P_+++)` equals the sum over arcs
/// `x -> y` of `deg_in(y) deg_out(x) - deg_in(x) deg_out(y)`.
#[derive(Clone, Debug)]
pub struct DeltaIdentity {
    pub from_counts: BigInt,
    pub from_edge_sum: BigInt,
    pub equal: bool,
}

pub fn path_delta_identity(host: &Digraph) -> DeltaIdentity {
    let ppp = RootedDirectedTree::oriented_path_from_signs("+++").expect("static literal");
    let pmp = RootedDirectedTree::oriented_path_from_signs("+-+").expect("static literal");
    let from_counts =
        BigInt::from(hom_tree(&pmp, host)) - BigInt::from(hom_tree(&ppp, host));
    let mut from_edge_sum = BigInt::zero();
    for (x, y) in host.arcs() {
        let term = host.deg_in(y) as i64 * host.deg_out(x) as i64
            - host.deg_in(x) as i64 * host.deg_out(y) as i64;
        from_edge_sum += term;
    }
    let equal = from_counts == from_edge_sum;
    DeltaIdentity {
        from_counts,
        from_edge_sum,
        equal,
    }
}

/// The two-level host with `m` sources pointing at a centre and `n` sinks
/// pointed at by it: arcs `u -> centre` for each source and `centre -> w`
/// for each sink. Mixed-star counts on it have the closed form `m^a n^b`.
pub fn source_sink_host(m: usize, n: usize) -> Result<Digraph> {
    let mut arcs = Vec::with_capacity(m + n);
    for u in 1..=m {
        arcs.push((u, 0));
    }
    for w in m + 1..=m + n {
        arcs.push((0, w));
    }
    Digraph::from_arcs(m + n + 1, &arcs)
}

/// Closed-form checks for stars of total size `h` on the source/sink hosts:
///
/// * mixed stars on the two-level host count exactly `m^a n^{h-a}` for
///   `1 <= a <= h-1` (only the centre contributes);
/// * mixed stars vanish on the pure in-host for `1 <= c <= h-1`, while the
///   pure in-star collects at least `m^h` there (the sinks' side dually).
///
/// Identity rows report `holds = (lhs == rhs)`.
pub fn star_incomparability_suite(h: usize, m: usize, n: usize) -> Result<Vec<BoundReport>> {
    if h == 0 {
        return Err(Error::InvalidArgument("star size h must be >= 1".into()));
    }
    let host_mn = source_sink_host(m, n)?;
    let host_in = source_sink_host(m, 0)?;
    let host_out = source_sink_host(0, n)?;
    let mut reports = Vec::new();

    let identity = |label: String, lhs: BigUint, rhs: BigUint| {
        let holds = lhs == rhs;
        BoundReport {
            label,
            lhs: Value::from_uint(lhs),
            rhs: Value::from_uint(rhs),
            holds,
        }
    };

    for a in 1..h {
        let lhs = star_hom(a, h - a, &host_mn)?;
        let rhs = BigUint::from(m).pow(a as u32) * BigUint::from(n).pow((h - a) as u32);
        reports.push(identity(
            format!("star-on-two-level(a={a},b={},m={m},n={n})", h - a),
            lhs,
            rhs,
        ));
    }
    for c in 1..h {
        reports.push(identity(
            format!("star-vanishes-on-in-host(c={c},m={m})"),
            star_hom(c, h - c, &host_in)?,
            BigUint::zero(),
        ));
        reports.push(identity(
            format!("star-vanishes-on-out-host(c={c},n={n})"),
            star_hom(h - c, c, &host_out)?,
            BigUint::zero(),
        ));
    }
    reports.push(BoundReport::exact_counts(
        format!("pure-in-star-on-in-host(h={h},m={m})"),
        BigUint::from(m).pow(h as u32),
        star_hom(h, 0, &host_in)?,
    ));
    reports.push(BoundReport::exact_counts(
        format!("pure-out-star-on-out-host(h={h},n={n})"),
        BigUint::from(n).pow(h as u32),
        star_hom(0, h, &host_out)?,
    ));
    Ok(reports)
}

/// One row of the bundled witness appendix, after verification.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub pair: (&'static str, &'static str),
    pub record: WitnessRecord,
}

struct TableEntry {
    a: &'static str,
    b: &'static str,
    gt_host: &'static [&'static str],
    gt_counts: (u64, u64),
    lt_host: &'static [&'static str],
    lt_counts: (u64, u64),
}

/// Witness hosts for every unordered pair of the eight 3-arc directed tree
/// types, with the counts each host realizes. Rows are `(A, B, H_>, counts
/// on H_>, H_<, counts on H_<)` with `hom(A) > hom(B)` on `H_>` and
/// `hom(A) < hom(B)` on `H_<`. All entries are recomputed before use.
const WITNESS_TABLE: &[TableEntry] = &[
    TableEntry { a: "S 0 3", b: "S 3 0", gt_host: &["000", "000", "110"], gt_counts: (8, 2), lt_host: &["000", "100", "100"], lt_counts: (2, 8) },
    TableEntry { a: "S 0 3", b: "S 1 2", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0110", "1000", "1000", "1000"], lt_counts: (11, 14) },
    TableEntry { a: "S 0 3", b: "S 2 1", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0001", "0001", "0001", "0110"], lt_counts: (11, 20) },
    TableEntry { a: "S 0 3", b: "P +++", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0001", "0011", "0101", "0110"], lt_counts: (25, 28) },
    TableEntry { a: "S 0 3", b: "P ++-", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["001", "001", "010"], lt_counts: (3, 4) },
    TableEntry { a: "S 0 3", b: "P +-+", gt_host: &["000", "000", "110"], gt_counts: (8, 4), lt_host: &["000", "100", "100"], lt_counts: (2, 4) },
    TableEntry { a: "S 0 3", b: "P -++", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0001", "0011", "0101", "0110"], lt_counts: (25, 26) },
    TableEntry { a: "S 3 0", b: "S 1 2", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0000", "0001", "0001", "1110"], lt_counts: (11, 20) },
    TableEntry { a: "S 3 0", b: "S 2 1", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0111", "1000", "1000", "0000"], lt_counts: (11, 14) },
    TableEntry { a: "S 3 0", b: "P +++", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0000", "0011", "0101", "1110"], lt_counts: (25, 28) },
    TableEntry { a: "S 3 0", b: "P ++-", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0000", "0011", "0101", "1110"], lt_counts: (25, 26) },
    TableEntry { a: "S 3 0", b: "P +-+", gt_host: &["000", "100", "100"], gt_counts: (8, 4), lt_host: &["000", "000", "110"], lt_counts: (2, 4) },
    TableEntry { a: "S 3 0", b: "P -++", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["000", "001", "110"], lt_counts: (3, 4) },
    TableEntry { a: "S 2 1", b: "S 1 2", gt_host: &["001", "001", "010"], gt_counts: (5, 3), lt_host: &["000", "001", "110"], lt_counts: (3, 5) },
    TableEntry { a: "S 1 2", b: "P +++", gt_host: &["000", "001", "100"], gt_counts: (1, 0), lt_host: &["0110", "1000", "0100", "0100"], lt_counts: (8, 9) },
    TableEntry { a: "S 1 2", b: "P ++-", gt_host: &["011", "100", "000"], gt_counts: (5, 3), lt_host: &["000", "100", "110"], lt_counts: (1, 2) },
    TableEntry { a: "S 1 2", b: "P +-+", gt_host: &["001", "001", "110"], gt_counts: (10, 8), lt_host: &["00", "10"], lt_counts: (0, 1) },
    TableEntry { a: "S 1 2", b: "P -++", gt_host: &["011", "100", "000"], gt_counts: (5, 4), lt_host: &["011", "001", "000"], lt_counts: (1, 2) },
    TableEntry { a: "S 2 1", b: "P +++", gt_host: &["000", "001", "100"], gt_counts: (1, 0), lt_host: &["0111", "1000", "0100", "0000"], lt_counts: (8, 9) },
    TableEntry { a: "S 2 1", b: "P ++-", gt_host: &["010", "100", "100"], gt_counts: (5, 4), lt_host: &["000", "100", "110"], lt_counts: (1, 2) },
    TableEntry { a: "S 2 1", b: "P +-+", gt_host: &["001", "001", "110"], gt_counts: (10, 8), lt_host: &["00", "10"], lt_counts: (0, 1) },
    TableEntry { a: "S 2 1", b: "P -++", gt_host: &["010", "100", "100"], gt_counts: (5, 3), lt_host: &["000", "100", "110"], lt_counts: (1, 2) },
    TableEntry { a: "P +++", b: "P ++-", gt_host: &["0000", "0001", "0100", "1110"], gt_counts: (9, 8), lt_host: &["000", "001", "100"], lt_counts: (0, 1) },
    TableEntry { a: "P +++", b: "P -++", gt_host: &["0001", "0001", "0100", "1100"], gt_counts: (10, 9), lt_host: &["000", "001", "100"], lt_counts: (0, 1) },
    TableEntry { a: "P ++-", b: "P +-+", gt_host: &["0001", "0011", "0101", "0110"], gt_counts: (32, 31), lt_host: &["00", "10"], lt_counts: (0, 1) },
    TableEntry { a: "P ++-", b: "P -++", gt_host: &["001", "001", "010"], gt_counts: (4, 3), lt_host: &["000", "001", "110"], lt_counts: (3, 4) },
    TableEntry { a: "P +-+", b: "P -++", gt_host: &["00", "10"], gt_counts: (1, 0), lt_host: &["0000", "0011", "0101", "1110"], lt_counts: (31, 32) },
    // the last pair needs a 5-vertex host for the strict > direction
    TableEntry { a: "P +++", b: "P +-+", gt_host: &["01100", "00111", "11000", "10000", "10000"], gt_counts: (37, 36), lt_host: &["00", "10"], lt_counts: (0, 1) },
];

/// Recomputes every row of the bundled witness table and returns the
/// verified rows; the first mismatching row aborts with its pair named.
pub fn verify_witness_table() -> Result<Vec<TableRow>> {
    let mut rows = Vec::with_capacity(WITNESS_TABLE.len());
    for entry in WITNESS_TABLE {
        let left = RootedDirectedTree::parse_literal(entry.a)?;
        let right = RootedDirectedTree::parse_literal(entry.b)?;
        let host_gt = Digraph::from_rows(entry.gt_host)?;
        let host_lt = Digraph::from_rows(entry.lt_host)?;
        let record = WitnessRecord {
            counts_gt: (
                BigUint::from(entry.gt_counts.0),
                BigUint::from(entry.gt_counts.1),
            ),
            counts_lt: (
                BigUint::from(entry.lt_counts.0),
                BigUint::from(entry.lt_counts.1),
            ),
            left,
            right,
            host_gt,
            host_lt,
            reversal_symmetrized: false,
        };
        if !record.verify() {
            return Err(Error::InvalidArgument(format!(
                "witness table row {} vs {} does not recompute: got {}>{} and {}<{}",
                entry.a,
                entry.b,
                hom_tree(&record.left, &record.host_gt),
                hom_tree(&record.right, &record.host_gt),
                hom_tree(&record.left, &record.host_lt),
                hom_tree(&record.right, &record.host_lt),
            )));
        }
        rows.push(TableRow {
            pair: (entry.a, entry.b),
            record,
        });
    }
    // the five-vertex witness also pins the path-difference identity
    let five = Digraph::from_rows(WITNESS_TABLE.last().expect("static table").gt_host)?;
    let delta = path_delta_identity(&five);
    if !delta.equal || delta.from_counts != BigInt::from(-1) {
        return Err(Error::InvalidArgument(format!(
            "path delta identity on the 5-vertex witness: counts {} edge sum {}",
            delta.from_counts, delta.from_edge_sum
        )));
    }
    Ok(rows)
}

/// Pure-star moment sums used when presenting sweep rows.
pub fn star_sides(k: usize, host: &Digraph) -> (BigUint, BigUint) {
    (
        star_moment_sum(k - 1, 0, host),
        star_moment_sum(0, k - 1, host),
    )
}
