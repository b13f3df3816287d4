//! Rooted directed trees: orientations of undirected trees with a
//! distinguished root.
//!
//! Vertex 0 is the root; every other vertex `v` stores its parent (with a
//! smaller index) and the orientation of the connecting arc. Stars and
//! oriented paths are the two constructor families used throughout, and
//! [`enumerate_directed_trees`] produces one representative per isomorphism
//! class of the underlying digraph.

use std::collections::BTreeMap;

use crate::digraph::{bits, Digraph};
use crate::error::{Error, Result};

/// Maximum arc count accepted by [`enumerate_directed_trees`].
pub const TREE_ENUM_MAX_ARCS: usize = 8;

/// Orientation of the arc between a vertex and its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orient {
    /// Arc points from the parent to the child.
    Out,
    /// Arc points from the child to the parent.
    In,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Out => Orient::In,
            Orient::In => Orient::Out,
        }
    }
}

/// A directed tree rooted at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedDirectedTree {
    /// `links[i]` is the parent and arc orientation of vertex `i + 1`.
    links: Vec<(usize, Orient)>,
}

impl RootedDirectedTree {
    /// Builds a tree from parent links; `links[i]` must point to a vertex
    /// with index at most `i`.
    pub fn new(links: Vec<(usize, Orient)>) -> Result<Self> {
        for (i, &(p, _)) in links.iter().enumerate() {
            if p > i {
                return Err(Error::NotATree(format!(
                    "parent {p} of vertex {} is not an earlier vertex",
                    i + 1
                )));
            }
        }
        if links.len() + 1 > crate::digraph::MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "tree vertex count",
                max: crate::digraph::MAX_VERTICES,
                got: links.len() + 1,
            });
        }
        Ok(RootedDirectedTree { links })
    }

    /// The one-vertex tree.
    pub fn single_vertex() -> Self {
        RootedDirectedTree { links: Vec::new() }
    }

    /// The star `S_{a,b}`: a centre (the root) with `a` incoming and `b`
    /// outgoing pendant arcs, on `a + b + 1` vertices.
    pub fn star(a: usize, b: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::DegenerateStar);
        }
        let mut links = Vec::with_capacity(a + b);
        links.extend(std::iter::repeat((0, Orient::In)).take(a));
        links.extend(std::iter::repeat((0, Orient::Out)).take(b));
        RootedDirectedTree::new(links)
    }

    /// The oriented path `v0 - v1 - ... - vk` rooted at `v0`, where sign `+`
    /// at position i means the arc points forward `v_i -> v_{i+1}`.
    pub fn oriented_path(signs: &[Orient]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptyPath);
        }
        RootedDirectedTree::new(signs.iter().enumerate().map(|(i, &o)| (i, o)).collect())
    }

    /// Parses a sign string such as `++-` into an oriented path.
    pub fn oriented_path_from_signs(signs: &str) -> Result<Self> {
        let orients: Vec<Orient> = signs
            .chars()
            .map(|c| match c {
                '+' => Ok(Orient::Out),
                '-' => Ok(Orient::In),
                other => Err(Error::Parse(format!("path sign `{other}` is not + or -"))),
            })
            .collect::<Result<_>>()?;
        if orients.is_empty() {
            return Err(Error::EmptyPath);
        }
        Self::oriented_path(&orients)
    }

    pub fn vertex_count(&self) -> usize {
        self.links.len() + 1
    }

    pub fn arc_count(&self) -> usize {
        self.links.len()
    }

    /// Parent link of a non-root vertex.
    pub fn parent(&self, v: usize) -> Option<(usize, Orient)> {
        if v == 0 {
            None
        } else {
            Some(self.links[v - 1])
        }
    }

    /// Children of every vertex, as `(child, orientation)` pairs.
    pub fn children_table(&self) -> Vec<Vec<(usize, Orient)>> {
        let mut table = vec![Vec::new(); self.vertex_count()];
        for (i, &(p, o)) in self.links.iter().enumerate() {
            table[p].push((i + 1, o));
        }
        table
    }

    /// Degree of a vertex in the underlying undirected tree.
    pub fn degree(&self, v: usize) -> usize {
        let child_count = self
            .links
            .iter()
            .filter(|&&(p, _)| p == v)
            .count();
        child_count + usize::from(v != 0)
    }

    /// Vertices of total degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// Whether the tree is a star: some vertex is adjacent to all others.
    pub fn is_star(&self) -> bool {
        let k = self.vertex_count();
        k <= 2 || (0..k).any(|v| self.degree(v) == k - 1)
    }

    pub fn as_digraph(&self) -> Digraph {
        let arcs: Vec<(usize, usize)> = self
            .links
            .iter()
            .enumerate()
            .map(|(i, &(p, o))| match o {
                Orient::Out => (p, i + 1),
                Orient::In => (i + 1, p),
            })
            .collect();
        Digraph::from_arcs(self.vertex_count(), &arcs).expect("valid tree arcs")
    }

    /// Reads a directed tree off a digraph by BFS from `root`. Fails when
    /// the digraph is not an orientation of a tree.
    pub fn from_digraph(d: &Digraph, root: usize) -> Result<Self> {
        let n = d.vertex_count();
        if root >= n {
            return Err(Error::VertexOutOfRange { v: root, n });
        }
        if n == 0 {
            return Err(Error::NotATree("empty digraph".into()));
        }
        if d.arc_count() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} arcs on {n} vertices",
                d.arc_count()
            )));
        }
        for u in 0..n {
            for v in bits(d.out_mask(u)) {
                if d.has_arc(v, u) {
                    return Err(Error::NotATree(format!(
                        "arcs in both directions between {u} and {v}"
                    )));
                }
            }
        }
        let mut order = vec![root];
        let mut label = vec![usize::MAX; n];
        label[root] = 0;
        let mut links = Vec::with_capacity(n - 1);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in bits(d.underlying_mask(u)) {
                if label[v] != usize::MAX {
                    continue;
                }
                label[v] = order.len();
                order.push(v);
                let orient = if d.has_arc(u, v) { Orient::Out } else { Orient::In };
                links.push((label[u], orient));
            }
        }
        if order.len() != n {
            return Err(Error::NotATree("underlying graph is disconnected".into()));
        }
        RootedDirectedTree::new(links)
    }

    /// The same underlying directed tree re-rooted at `v`.
    pub fn rerooted(&self, v: usize) -> Result<Self> {
        Self::from_digraph(&self.as_digraph(), v)
    }

    /// The tree with every arc reversed.
    pub fn reverse(&self) -> Self {
        RootedDirectedTree {
            links: self.links.iter().map(|&(p, o)| (p, o.flip())).collect(),
        }
    }

    /// Arc-list literal, e.g. `0>1,0>2,3>0`.
    pub fn to_literal(&self) -> String {
        if self.arc_count() == 0 {
            return "0".into();
        }
        self.as_digraph()
            .arcs()
            .map(|(u, v)| format!("{u}>{v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a tree literal: `S a b`, `P +-+`, an arc list `0>1,2>1`, or
    /// `0` for the one-vertex tree.
    ///
    /// ```
    /// use dihom::RootedDirectedTree;
    ///
    /// let t = RootedDirectedTree::parse_literal("P +-+").unwrap();
    /// assert_eq!(t.vertex_count(), 4);
    /// let d = t.as_digraph();
    /// assert!(d.has_arc(0, 1) && d.has_arc(2, 1) && d.has_arc(2, 3));
    /// ```
    pub fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.as_slice() {
            ["S", a, b] => {
                let a: usize = a
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad star parameter `{a}`")))?;
                let b: usize = b
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad star parameter `{b}`")))?;
                if a + b == 0 {
                    return Err(Error::Parse("star S 0 0 has no leaves".into()));
                }
                Self::star(a, b)
            }
            ["P", signs] => Self::oriented_path_from_signs(signs),
            ["0"] => Ok(Self::single_vertex()),
            [one] if one.contains('>') => Self::parse_arc_list(one),
            _ => Err(Error::Parse(format!(
                "cannot parse tree literal `{s}` (expected `S a b`, `P +-+`, or `u>v,...`)"
            ))),
        }
    }

    fn parse_arc_list(s: &str) -> Result<Self> {
        let mut arcs = Vec::new();
        let mut max_v = 0usize;
        for part in s.split(',') {
            let (u, v) = part
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("bad arc `{part}`")))?;
            let u: usize = u
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex `{u}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex `{v}`")))?;
            max_v = max_v.max(u).max(v);
            arcs.push((u, v));
        }
        let n = max_v + 1;
        if arcs.len() + 1 != n {
            return Err(Error::Parse(format!(
                "arc list has {} arcs but vertices 0..{max_v} need {}",
                arcs.len(),
                n - 1
            )));
        }
        let d = Digraph::from_arcs(n, &arcs).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_digraph(&d, 0).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical code of the tree *as an unrooted digraph*: the minimum over
    /// all rootings of a recursive sorted-subtree encoding. Equal codes are
    /// equivalent to digraph isomorphism for trees of any size, which keeps
    /// deduplication cheap where brute-force canonicalization is capped.
    pub fn unrooted_code(&self) -> Vec<u8> {
        let d = self.as_digraph();
        unrooted_tree_code(&d)
    }
}

fn rooted_code(d: &Digraph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut pieces: Vec<Vec<u8>> = Vec::new();
    for u in bits(d.underlying_mask(v)) {
        if Some(u) == parent {
            continue;
        }
        let mark = if d.has_arc(v, u) { b'>' } else { b'<' };
        let mut piece = vec![mark];
        piece.extend(rooted_code(d, u, Some(v)));
        pieces.push(piece);
    }
    pieces.sort();
    let mut code = vec![b'('];
    for p in pieces {
        code.extend(p);
    }
    code.push(b')');
    code
}

/// Centroids of an undirected tree given by adjacency lists: the one or two
/// vertices minimizing the largest remaining component. An isomorphism maps
/// centroids to centroids, so restricting rootings to them keeps the
/// minimum code canonical.
fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![1usize; n];
    let mut below_max = vec![0usize; n];
    // children sizes via an explicit post-order from vertex 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
            below_max[parent[v]] = below_max[parent[v]].max(size[v]);
        }
    }
    let heaviest = |v: usize| below_max[v].max(n - size[v]);
    let best = (0..n).map(heaviest).min().expect("nonempty tree");
    (0..n).filter(|&v| heaviest(v) == best).collect()
}

/// Minimum rooted code over the centroid rootings of a tree-shaped digraph;
/// equal codes are equivalent to digraph isomorphism for trees of any size.
pub fn unrooted_tree_code(d: &Digraph) -> Vec<u8> {
    let adj: Vec<Vec<usize>> = (0..d.vertex_count())
        .map(|v| bits(d.underlying_mask(v)).collect())
        .collect();
    centroids(&adj)
        .into_iter()
        .map(|v| rooted_code(d, v, None))
        .min()
        .expect("nonempty tree")
}

/// Canonical code of the shape of an unrooted undirected tree given by a
/// parent array (parent[i] is the parent of vertex i+1).
fn free_tree_code(parents: &[usize]) -> Vec<u8> {
    let k = parents.len() + 1;
    let mut adj = vec![Vec::new(); k];
    for (i, &p) in parents.iter().enumerate() {
        adj[p].push(i + 1);
        adj[i + 1].push(p);
    }
    fn code_at(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
        let mut pieces: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| code_at(adj, u, v))
            .collect();
        pieces.sort();
        let mut code = vec![b'('];
        for p in pieces {
            code.extend(p);
        }
        code.push(b')');
        code
    }
    centroids(&adj)
        .into_iter()
        .map(|v| code_at(&adj, v, usize::MAX))
        .min()
        .expect("nonempty tree")
}

/// All directed trees with `k_arcs` arcs, one representative per isomorphism
/// class of the underlying unrooted digraph, in a deterministic order.
///
/// Classes are deduplicated by [`unrooted_tree_code`]; the output is sorted
/// by brute-force canonical form where that is available (up to 8 vertices)
/// and by the tree code at 9 vertices.
pub fn enumerate_directed_trees(k_arcs: usize) -> Result<Vec<RootedDirectedTree>> {
    if k_arcs == 0 || k_arcs > TREE_ENUM_MAX_ARCS {
        return Err(Error::SizeLimit {
            what: "tree enumeration arc count",
            max: TREE_ENUM_MAX_ARCS,
            got: k_arcs,
        });
    }
    // one parent array per shape of the underlying undirected tree
    let mut shapes: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    let mut parents = vec![0usize; k_arcs];
    enumerate_parent_arrays(&mut parents, 0, &mut |p| {
        shapes.entry(free_tree_code(p)).or_insert_with(|| p.to_vec());
    });

    let mut classes: BTreeMap<Vec<u8>, Digraph> = BTreeMap::new();
    for parents in shapes.values() {
        for mask in 0u32..(1 << k_arcs) {
            let links: Vec<(usize, Orient)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    let o = if (mask >> i) & 1 == 1 { Orient::In } else { Orient::Out };
                    (p, o)
                })
                .collect();
            let d = RootedDirectedTree::new(links)?.as_digraph();
            let code = unrooted_tree_code(&d);
            classes.entry(code).or_insert(d);
        }
    }

    let mut keyed: Vec<(Vec<u8>, RootedDirectedTree)> = classes
        .into_iter()
        .map(|(code, d)| {
            if d.vertex_count() <= crate::digraph::CANONICAL_MAX_VERTICES {
                let (key, canon) = d.canonical_digraph()?;
                Ok((key, RootedDirectedTree::from_digraph(&canon, 0)?))
            } else {
                let tree = RootedDirectedTree::from_digraph(&d, 0)?;
                Ok((code, tree))
            }
        })
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

fn enumerate_parent_arrays(
    parents: &mut Vec<usize>,
    i: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if i == parents.len() {
        f(parents);
        return;
    }
    for p in 0..=i {
        parents[i] = p;
        enumerate_parent_arrays(parents, i + 1, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn star_construction() {
        let s = RootedDirectedTree::star(0, 3).unwrap();
        assert_eq!(s.vertex_count(), 4);
        let d = s.as_digraph();
        assert!((1..4).all(|v| d.has_arc(0, v)));
        let s = RootedDirectedTree::star(3, 0).unwrap();
        assert!((1..4).all(|v| s.as_digraph().has_arc(v, 0)));
        let s = RootedDirectedTree::star(1, 0).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert!(s.as_digraph().has_arc(1, 0));
        assert!(matches!(
            RootedDirectedTree::star(0, 0),
            Err(Error::DegenerateStar)
        ));
    }

    #[test]
    fn oriented_path_construction() {
        let p = RootedDirectedTree::oriented_path_from_signs("+++").unwrap();
        let d = p.as_digraph();
        assert!(d.has_arc(0, 1) && d.has_arc(1, 2) && d.has_arc(2, 3));
        let p = RootedDirectedTree::oriented_path_from_signs("+-+").unwrap();
        let d = p.as_digraph();
        assert!(d.has_arc(0, 1) && d.has_arc(2, 1) && d.has_arc(2, 3));
        let single = RootedDirectedTree::oriented_path_from_signs("+").unwrap();
        let star01 = RootedDirectedTree::star(0, 1).unwrap();
        assert!(single
            .as_digraph()
            .is_isomorphic_to(&star01.as_digraph())
            .unwrap());
        assert!(matches!(
            RootedDirectedTree::oriented_path(&[]),
            Err(Error::EmptyPath)
        ));
    }

    #[test]
    fn from_digraph_rejects_non_trees() {
        let cycle = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(RootedDirectedTree::from_digraph(&cycle, 0).is_err());
        let disconnected = Digraph::from_arcs(4, &[(0, 1), (2, 3), (3, 2)]).unwrap();
        assert!(RootedDirectedTree::from_digraph(&disconnected, 0).is_err());
        let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(RootedDirectedTree::from_digraph(&two_cycle, 0).is_err());
    }

    #[test]
    fn reroot_preserves_the_digraph() {
        let t = RootedDirectedTree::parse_literal("0>1,2>1,1>3").unwrap();
        let d = t.as_digraph();
        for v in 0..t.vertex_count() {
            let r = t.rerooted(v).unwrap();
            assert!(r.as_digraph().is_isomorphic_to(&d).unwrap());
        }
    }

    #[test]
    fn literal_round_trip() {
        for lit in ["S 0 3", "S 3 0", "S 1 2", "P +-+", "0>1,2>1,1>3", "0"] {
            let t = RootedDirectedTree::parse_literal(lit).unwrap();
            let back = RootedDirectedTree::parse_literal(&t.to_literal()).unwrap();
            assert!(t
                .as_digraph()
                .is_isomorphic_to(&back.as_digraph())
                .unwrap());
        }
        assert!(RootedDirectedTree::parse_literal("S 0 0").is_err());
        assert!(RootedDirectedTree::parse_literal("Q x").is_err());
        assert!(RootedDirectedTree::parse_literal("0>1,1>2,3>4").is_err());
    }

    #[test]
    fn reversing_star_swaps_orientations() {
        let s = RootedDirectedTree::star(1, 3).unwrap();
        let rev = s.reverse();
        let expect = RootedDirectedTree::star(3, 1).unwrap();
        assert!(rev
            .as_digraph()
            .is_isomorphic_to(&expect.as_digraph())
            .unwrap());
    }

    #[test]
    fn enumeration_counts_small() {
        assert_eq!(enumerate_directed_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_directed_trees(2).unwrap().len(), 3);
        assert_eq!(enumerate_directed_trees(3).unwrap().len(), 8);
        assert!(enumerate_directed_trees(0).is_err());
        assert!(enumerate_directed_trees(9).is_err());
    }

    #[test]
    fn enumeration_k2_matches_brute_force() {
        // brute force: all orientations of all parent arrays on 3 vertices,
        // deduplicated by brute-force canonical form
        let mut forms = HashSet::new();
        for parents in [[0usize, 0], [0, 1]] {
            for mask in 0..4u32 {
                let links: Vec<(usize, Orient)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| {
                        (p, if (mask >> i) & 1 == 1 { Orient::In } else { Orient::Out })
                    })
                    .collect();
                let d = RootedDirectedTree::new(links).unwrap().as_digraph();
                forms.insert(d.canonical_form().unwrap());
            }
        }
        assert_eq!(forms.len(), 3);
        let expected = [
            RootedDirectedTree::star(0, 2).unwrap(),
            RootedDirectedTree::star(2, 0).unwrap(),
            RootedDirectedTree::oriented_path_from_signs("++").unwrap(),
        ];
        let enumerated = enumerate_directed_trees(2).unwrap();
        for e in &expected {
            assert!(enumerated
                .iter()
                .any(|t| t.as_digraph().is_isomorphic_to(&e.as_digraph()).unwrap()));
        }
    }

    #[test]
    fn enumeration_k3_contains_all_eight_types() {
        let trees = enumerate_directed_trees(3).unwrap();
        let expected = [
            RootedDirectedTree::star(0, 3).unwrap(),
            RootedDirectedTree::star(3, 0).unwrap(),
            RootedDirectedTree::star(1, 2).unwrap(),
            RootedDirectedTree::star(2, 1).unwrap(),
            RootedDirectedTree::oriented_path_from_signs("+++").unwrap(),
            RootedDirectedTree::oriented_path_from_signs("++-").unwrap(),
            RootedDirectedTree::oriented_path_from_signs("+-+").unwrap(),
            RootedDirectedTree::oriented_path_from_signs("-++").unwrap(),
        ];
        for e in &expected {
            assert!(trees
                .iter()
                .any(|t| t.as_digraph().is_isomorphic_to(&e.as_digraph()).unwrap()));
        }
    }

    #[test]
    fn unrooted_code_dedupe_agrees_with_canonical_form() {
        // on all trees with up to 4 arcs the cheap tree code induces exactly
        // the same classes as brute-force digraph canonicalization
        for k in 1..=4usize {
            let mut by_code: HashSet<Vec<u8>> = HashSet::new();
            let mut by_canon: HashSet<Vec<u8>> = HashSet::new();
            let mut parents = vec![0usize; k];
            enumerate_parent_arrays(&mut parents, 0, &mut |p| {
                for mask in 0u32..(1 << k) {
                    let links: Vec<(usize, Orient)> = p
                        .iter()
                        .enumerate()
                        .map(|(i, &q)| {
                            (q, if (mask >> i) & 1 == 1 { Orient::In } else { Orient::Out })
                        })
                        .collect();
                    let d = RootedDirectedTree::new(links).unwrap().as_digraph();
                    by_code.insert(unrooted_tree_code(&d));
                    by_canon.insert(d.canonical_form().unwrap());
                }
            });
            assert_eq!(by_code.len(), by_canon.len());
            assert_eq!(enumerate_directed_trees(k).unwrap().len(), by_canon.len());
        }
    }

    #[test]
    fn enumeration_reaches_the_size_cap() {
        // the larger sizes exercise the tree-code ordering path (9 vertices
        // sit beyond the brute-force canonicalization cap)
        let mut previous = 8;
        for k in 4..=8usize {
            let trees = enumerate_directed_trees(k).unwrap();
            assert!(trees.len() > previous);
            previous = trees.len();
            let codes: HashSet<Vec<u8>> =
                trees.iter().map(|t| t.unrooted_code()).collect();
            assert_eq!(codes.len(), trees.len());
            for t in &trees {
                assert_eq!(t.arc_count(), k);
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_directed_trees(4).unwrap();
        let b = enumerate_directed_trees(4).unwrap();
        let lits_a: Vec<String> = a.iter().map(|t| t.to_literal()).collect();
        let lits_b: Vec<String> = b.iter().map(|t| t.to_literal()).collect();
        assert_eq!(lits_a, lits_b);
    }
}
