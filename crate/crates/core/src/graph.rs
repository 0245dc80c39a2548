//! Finite simple graphs with contiguous vertex ids.
//!
//! A [`Graph`] on `n` vertices always has vertex set `{0, .., n-1}`. Every
//! operation that carves out a piece of a graph (induced subgraph, unit
//! sphere) relabels the piece back to contiguous ids and returns a
//! [`VertexMap`] so callers can translate results back to the parent. This
//! keeps all downstream algorithms free of partial vertex sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An undirected simple graph: no loops, no multi-edges, vertices `0..n`.
///
/// Adjacency lists are kept sorted, so neighbor iteration is deterministic
/// and set operations (intersections during clique enumeration) are linear
/// merges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices (0-graph; `n = 0` is the empty graph).
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], size: 0 }
    }

    /// Build from an edge list. Rejects out-of-range endpoints, self-loops,
    /// and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert edge `{u, v}`. Errors on loops, range, and duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(Error::DuplicateEdge(u, v)),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.size += 1;
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    /// True for the empty graph (no vertices).
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Iterator over all vertex ids.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Degree of `v`. Panics if `v` is out of range (same contract as slice
    /// indexing); use [`Graph::check_vertex`] first for untrusted ids.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Validate an externally supplied vertex id.
    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// The subgraph induced on `verts` (duplicates collapse; any id out of
    /// range is an error), relabeled to `0..k` in ascending id order.
    pub fn induced_subgraph<I>(&self, verts: I) -> Result<(Graph, VertexMap)>
    where
        I: IntoIterator<Item = usize>,
    {
        let chosen: BTreeSet<usize> = verts.into_iter().collect();
        if let Some(&v) = chosen.iter().next_back() {
            self.check_vertex(v)?;
        }
        let forward: Vec<usize> = chosen.iter().copied().collect();
        Ok((self.induced_on_sorted(&forward), VertexMap { forward }))
    }

    /// Induced subgraph on an already sorted, deduplicated, in-range id list.
    /// Internal fast path used by the recursive geometry code.
    pub(crate) fn induced_on_sorted(&self, forward: &[usize]) -> Graph {
        let mut sub = Graph::new(forward.len());
        for (i, &p) in forward.iter().enumerate() {
            // Merge adj[p] against forward; both are sorted.
            let mut local = intersect_sorted(&self.adj[p], forward);
            for w in local.iter_mut() {
                *w = forward.binary_search(w).expect("member of forward");
            }
            sub.size += local.len();
            sub.adj[i] = local;
        }
        sub.size /= 2;
        sub
    }

    /// The unit sphere of `v`: the subgraph induced on the neighbors of `v`,
    /// relabeled to contiguous ids. An isolated vertex has an empty sphere.
    pub fn unit_sphere(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        let forward = self.adj[v].clone();
        Ok((self.induced_on_sorted(&forward), VertexMap { forward }))
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            seen[start] = true;
            queue.push(start);
            while let Some(u) = queue.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// True if the graph is connected (and nonempty).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Maps vertex ids of a derived graph (subgraph, sphere) back to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<usize>,
}

impl VertexMap {
    /// Identity map on `0..n` (for operations that relabel nothing).
    pub fn identity(n: usize) -> Self {
        VertexMap { forward: (0..n).collect() }
    }

    /// Wrap an ascending parent-id list produced by a restriction.
    pub(crate) fn from_sorted(forward: Vec<usize>) -> Self {
        debug_assert!(forward.windows(2).all(|w| w[0] < w[1]));
        VertexMap { forward }
    }

    /// Parent id of derived vertex `sub`.
    pub fn parent(&self, sub: usize) -> usize {
        self.forward[sub]
    }

    /// Derived id of parent vertex `p`, if `p` survived the restriction.
    pub fn child(&self, p: usize) -> Option<usize> {
        self.forward.binary_search(&p).ok()
    }

    /// Parent ids in derived-id order.
    pub fn as_slice(&self) -> &[usize] {
        &self.forward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Intersection of two ascending slices, ascending.
pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
