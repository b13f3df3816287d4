//! Loopless simple digraphs as adjacency bit-matrices.
//!
//! A [`Digraph`] stores one 64-bit word per row, so the vertex count is
//! capped at 64. Out-rows and in-rows are kept in sync so both directed
//! neighbourhoods are O(1) bitmask lookups, which is what the counting
//! kernels and the exhaustive host sweeps live on.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hard cap on vertices: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;
/// Brute-force canonicalization is limited to this many vertices.
pub const CANONICAL_MAX_VERTICES: usize = 8;
/// Exhaustive host enumeration is limited to this many vertices (2^20 hosts).
pub const HOST_ENUM_MAX_VERTICES: usize = 5;

/// A finite directed simple loopless graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "digraph vertex count",
                max: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    /// Builds a digraph from a list of arcs `u -> v`. Loops are rejected,
    /// duplicate arcs collapse.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::empty(n)?;
        for &(u, v) in arcs {
            g.insert_arc(u, v)?;
        }
        Ok(g)
    }

    /// Builds a digraph from 0/1 row strings such as `["010", "001", "000"]`.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let n = rows.len();
        let mut g = Digraph::empty(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "adjacency row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, c) in row.bytes().enumerate() {
                match c {
                    b'0' => {}
                    b'1' => g.insert_arc(i, j)?,
                    _ => {
                        return Err(Error::Parse(format!(
                            "adjacency entry ({i},{j}) is not 0/1"
                        )))
                    }
                }
            }
        }
        Ok(g)
    }

    fn insert_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.out[u] >> v) & 1 == 1
    }

    /// Bitmask of out-neighbours of `v`.
    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// Bitmask of in-neighbours of `v`.
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn deg_out(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn deg_in(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    /// Total degree `deg_in + deg_out`.
    pub fn deg_total(&self, v: usize) -> usize {
        self.deg_in(v) + self.deg_out(v)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.out[u]).map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.out[v])
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.inn[v])
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(
                "permutation length does not match vertex count".into(),
            ));
        }
        let arcs: Vec<(usize, usize)> =
            self.arcs().map(|(u, v)| (perm[u], perm[v])).collect();
        Digraph::from_arcs(self.n, &arcs)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            deg_in: (0..self.n).map(|v| self.deg_in(v)).collect(),
            deg_out: (0..self.n).map(|v| self.deg_out(v)).collect(),
        }
    }

    /// Mask of vertices adjacent to `v` in the underlying undirected graph.
    pub fn underlying_mask(&self, v: usize) -> u64 {
        self.out[v] | self.inn[v]
    }

    /// Whether the underlying undirected graph is connected (true for n <= 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.underlying_mask(v);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Canonical byte encoding, identical for isomorphic digraphs: the
    /// minimum over all vertex relabelings of the row-major adjacency bit
    /// string, prefixed by the vertex count.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        if self.n > CANONICAL_MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "canonical form vertex count",
                max: CANONICAL_MAX_VERTICES,
                got: self.n,
            });
        }
        Ok(pack_code(self.n, self.canonical_code()))
    }

    /// Canonical form plus a relabeled copy realizing it.
    pub fn canonical_digraph(&self) -> Result<(Vec<u8>, Digraph)> {
        if self.n > CANONICAL_MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "canonical form vertex count",
                max: CANONICAL_MAX_VERTICES,
                got: self.n,
            });
        }
        let (code, perm) = self.canonical_code_perm();
        // perm[i] is the original vertex placed at canonical position i.
        let mut inverse = vec![0usize; self.n];
        for (pos, &orig) in perm.iter().enumerate() {
            inverse[orig] = pos;
        }
        Ok((pack_code(self.n, code), self.permuted(&inverse)?))
    }

    fn canonical_code(&self) -> u128 {
        self.canonical_code_perm().0
    }

    fn canonical_code_perm(&self) -> (u128, Vec<usize>) {
        let n = self.n;
        if n == 0 {
            return (0, Vec::new());
        }
        let mut best = u128::MAX;
        let mut best_perm = vec![0usize; n];
        'perms: for perm in permutations(n).chunks(n) {
            let mut code = 0u128;
            for i in 0..n {
                let row = self.out[perm[i] as usize];
                let base = 127 - i * n;
                for j in 0..n {
                    if (row >> perm[j]) & 1 == 1 {
                        code |= 1 << (base - j);
                    }
                }
                // rows fill most-significant-first; once the finished prefix
                // exceeds the best, no completion can win
                let shift = base + 1 - n;
                if (code >> shift) > (best >> shift) {
                    continue 'perms;
                }
            }
            if code < best {
                best = code;
                for (slot, &p) in best_perm.iter_mut().zip(perm) {
                    *slot = p as usize;
                }
            }
        }
        (best, best_perm)
    }

    /// Isomorphism test via degree-multiset pruning and canonical forms.
    pub fn is_isomorphic_to(&self, other: &Digraph) -> Result<bool> {
        if self.n != other.n {
            return Ok(false);
        }
        let mut a = degree_pairs(self);
        let mut b = degree_pairs(other);
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    /// Matrix text form: first line `n`, then n lines of n 0/1 entries.
    pub fn to_matrix_string(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|j| if self.has_arc(i, j) { "1" } else { "0" })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Edge-list text form: first line `n m`, then one `u v` line per arc.
    pub fn to_edge_list_string(&self) -> String {
        let arcs: Vec<(usize, usize)> = self.arcs().collect();
        let mut s = format!("{} {}\n", self.n, arcs.len());
        for (u, v) in arcs {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses either the matrix form (`n` then an n-by-n 0/1 matrix) or the
    /// edge-list form (`n m` then m arcs `u v`), decided by the first line.
    pub fn parse(text: &str) -> Result<Digraph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty digraph input".into()))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        match head.len() {
            1 => {
                let n = parse_usize(head[0])?;
                Self::parse_matrix_body(n, lines)
            }
            2 => {
                let n = parse_usize(head[0])?;
                let m = parse_usize(head[1])?;
                Self::parse_edge_list_body(n, m, lines)
            }
            _ => Err(Error::Parse(format!(
                "expected `n` or `n m` on the first line, got `{header}`"
            ))),
        }
    }

    fn parse_matrix_body<'a>(
        n: usize,
        lines: impl Iterator<Item = &'a str>,
    ) -> Result<Digraph> {
        let mut g = Digraph::empty(n).map_err(reparse)?;
        let mut rows = 0usize;
        for line in lines {
            let i = rows;
            if i >= n {
                return Err(Error::Parse(format!("more than {n} matrix rows")));
            }
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != n {
                return Err(Error::Parse(format!(
                    "matrix row {i} has {} entries, expected {n}",
                    entries.len()
                )));
            }
            for (j, e) in entries.iter().enumerate() {
                match *e {
                    "0" => {}
                    "1" => {
                        if i == j {
                            return Err(Error::Parse(format!("loop at vertex {i}")));
                        }
                        g.insert_arc(i, j).map_err(reparse)?;
                    }
                    other => {
                        return Err(Error::Parse(format!(
                            "matrix entry ({i},{j}) is `{other}`, expected 0 or 1"
                        )))
                    }
                }
            }
            rows += 1;
        }
        if rows != n {
            return Err(Error::Parse(format!("expected {n} matrix rows, got {rows}")));
        }
        Ok(g)
    }

    fn parse_edge_list_body<'a>(
        n: usize,
        m: usize,
        lines: impl Iterator<Item = &'a str>,
    ) -> Result<Digraph> {
        let mut g = Digraph::empty(n).map_err(reparse)?;
        let mut count = 0usize;
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse(format!("expected `u v`, got `{line}`")));
            }
            let u = parse_usize(toks[0])?;
            let v = parse_usize(toks[1])?;
            g.insert_arc(u, v).map_err(reparse)?;
            count += 1;
        }
        if count != m {
            return Err(Error::Parse(format!("expected {m} arcs, got {count}")));
        }
        Ok(g)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

fn reparse(e: Error) -> Error {
    Error::Parse(e.to_string())
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("`{s}` is not a nonnegative integer")))
}

fn degree_pairs(g: &Digraph) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .map(|v| (g.deg_in(v), g.deg_out(v)))
        .collect()
}

fn pack_code(n: usize, code: u128) -> Vec<u8> {
    let nbytes = (n * n + 7) / 8;
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(n as u8);
    out.extend_from_slice(&code.to_be_bytes()[..nbytes]);
    out
}

/// Iterator over the set bit positions of a word.
pub fn bits(word: u64) -> Bits {
    Bits(word)
}

pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// All permutations of `0..n`, flattened, generated once per size.
fn permutations(n: usize) -> &'static [u8] {
    static TABLES: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let mut tables = Vec::with_capacity(CANONICAL_MAX_VERTICES + 1);
        for n in 0..=CANONICAL_MAX_VERTICES {
            let mut flat = Vec::new();
            let mut items: Vec<u8> = (0..n as u8).collect();
            heap_permutations(&mut items, n, &mut flat);
            tables.push(flat);
        }
        tables
    });
    &tables[n]
}

fn heap_permutations(items: &mut Vec<u8>, k: usize, out: &mut Vec<u8>) {
    if k <= 1 {
        out.extend_from_slice(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Per-vertex in/out/total degrees of a digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub deg_in: Vec<usize>,
    pub deg_out: Vec<usize>,
}

impl DegreeProfile {
    pub fn total(&self, v: usize) -> usize {
        self.deg_in[v] + self.deg_out[v]
    }

    pub fn sum_in(&self) -> usize {
        self.deg_in.iter().sum()
    }

    pub fn sum_out(&self) -> usize {
        self.deg_out.iter().sum()
    }
}

/// Number of labelled loopless digraphs on `n` vertices: `2^(n(n-1))`.
pub fn host_count(n: usize) -> Result<u64> {
    check_host_size(n)?;
    Ok(1u64 << (n * (n - 1)))
}

fn check_host_size(n: usize) -> Result<()> {
    if n == 0 || n > HOST_ENUM_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "host enumeration vertex count",
            max: HOST_ENUM_MAX_VERTICES,
            got: n,
        });
    }
    Ok(())
}

/// The host at a given enumeration index.
///
/// Index bits spell the off-diagonal adjacency cells in row-major order,
/// most significant bit first, so ascending index is lexicographic order of
/// the off-diagonal bit string; sweeps are reproducible and resumable by
/// index.
pub fn host_from_index(n: usize, index: u64) -> Result<Digraph> {
    check_host_size(n)?;
    let m = n * (n - 1);
    if index >= (1u64 << m) {
        return Err(Error::InvalidArgument(format!(
            "host index {index} out of range for n={n}"
        )));
    }
    let mut g = Digraph::empty(n)?;
    let mut p = 0usize;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if (index >> (m - 1 - p)) & 1 == 1 {
                g.insert_arc(i, j)?;
            }
            p += 1;
        }
    }
    Ok(g)
}

/// Streams all labelled loopless digraphs on `n` vertices in index order.
pub fn enumerate_hosts(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    let count = host_count(n)?;
    Ok((0..count).map(move |i| host_from_index(n, i).expect("index in range")))
}

/// One host per isomorphism class, the representative with the smallest
/// enumeration index. Materializes the whole sweep; practical for n <= 4.
pub fn enumerate_hosts_canonical(n: usize) -> Result<Vec<Digraph>> {
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for host in enumerate_hosts(n)? {
        if seen.insert(host.canonical_form()?) {
            reps.push(host);
        }
    }
    Ok(reps)
}
