//! Clique (Whitney) complexes: the simplicial structure a graph carries.
//!
//! The k-simplices of a graph are its complete subgraphs on k+1 vertices, so
//! the complex is determined by adjacency alone — nothing is glued on. This
//! module enumerates that structure once into layered, lexicographically
//! sorted tables (with face indices precomputed for the calculus in
//! [`crate::forms`]), and verifies the combinatorial identities that relate
//! global simplex counts to per-vertex counts over unit spheres.

use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, Graph};
use crate::morse::VertexFunction;

/// A k-simplex: k+1 distinct vertices, stored strictly ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    verts: Vec<usize>,
}

impl Simplex {
    /// Build from an ascending vertex list; rejects empty, unsorted, or
    /// repeated input. Use [`Simplex::from_unordered`] for raw user input.
    pub fn new(verts: Vec<usize>) -> Result<Self> {
        if verts.is_empty() {
            return Err(Error::Input("a simplex needs at least one vertex".into()));
        }
        for w in verts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex(w[0]));
            }
            if w[0] > w[1] {
                return Err(Error::Input(format!(
                    "simplex vertices must be ascending (got {} before {})",
                    w[0], w[1]
                )));
            }
        }
        Ok(Simplex { verts })
    }

    /// Sort an arbitrary vertex list into a simplex, returning the sign of
    /// the permutation that sorted it (+1 even, -1 odd). Repeats are errors.
    ///
    /// This is how antisymmetry enters the file formats: a form entry listed
    /// on `(2 1 0)` means the value on `(0 1 2)` times the sign computed here.
    pub fn from_unordered(verts: Vec<usize>) -> Result<(Self, i8)> {
        let mut indexed: Vec<(usize, usize)> = verts.into_iter().enumerate().collect();
        indexed.sort_by_key(|&(_, v)| v);
        // Count inversions of the original positions to get the parity.
        let mut sign = 1i8;
        for i in 0..indexed.len() {
            for j in i + 1..indexed.len() {
                if indexed[i].0 > indexed[j].0 {
                    sign = -sign;
                }
            }
        }
        let sorted: Vec<usize> = indexed.into_iter().map(|(_, v)| v).collect();
        Ok((Simplex::new(sorted)?, sign))
    }

    pub(crate) fn from_sorted_unchecked(verts: Vec<usize>) -> Self {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Simplex { verts }
    }

    /// Dimension: one less than the number of vertices.
    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// The i-th face: this simplex with vertex position `i` removed.
    pub fn face(&self, i: usize) -> Simplex {
        let mut verts = self.verts.clone();
        verts.remove(i);
        Simplex { verts }
    }
}

impl std::fmt::Debug for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The clique complex of a graph, enumerated level by level.
///
/// Layer k holds every k-simplex in lexicographic order, so simplices have
/// stable dense indices: forms and chains are plain coefficient vectors
/// aligned with a layer. Face indices (with alternating signs) are
/// precomputed at construction, since the exterior derivative, the boundary
/// operator, and the incidence matrices all read the same table.
pub struct CliqueComplex {
    layers: Vec<Vec<Simplex>>,
    /// `faces[k]` (k >= 1) is flat with stride k+1: entry `j*(k+1)+i` is the
    /// layer-(k-1) index of face i of simplex j, paired with sign (-1)^i.
    faces: Vec<Vec<(u32, i8)>>,
    truncated: Option<usize>,
}

impl CliqueComplex {
    /// Simplices of dimension `k` (empty slice beyond the top dimension).
    pub fn layer(&self, k: usize) -> &[Simplex] {
        self.layers.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn layers(&self) -> &[Vec<Simplex>] {
        &self.layers
    }

    /// The f-vector `(v_0, v_1, ...)`.
    pub fn fvec(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Largest dimension with simplices; `None` for the empty complex.
    pub fn top_dim(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    /// `Some(cap)` if enumeration was cut off at dimension `cap` and the
    /// graph has simplices beyond it. Alternating sums over a truncated
    /// complex would be silently wrong, so the verifiers refuse them.
    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated
    }

    /// Position of the ascending vertex list `verts` in its layer.
    pub fn index_of(&self, verts: &[usize]) -> Option<usize> {
        if verts.is_empty() {
            return None;
        }
        let layer = self.layer(verts.len() - 1);
        layer.binary_search_by(|s| s.verts.as_slice().cmp(verts)).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s.verts()).is_some()
    }

    /// Face-index table for layer `k` (see field docs). Empty for `k = 0`.
    pub(crate) fn face_table(&self, k: usize) -> &[(u32, i8)] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    fn err_if_truncated(&self) -> Result<()> {
        match self.truncated {
            Some(cap) => Err(Error::Truncated(cap)),
            None => Ok(()),
        }
    }
}

/// Visit every clique of `g` (as an ascending vertex slice) in depth-first
/// lexicographic order. With `cap = Some(d)`, enumeration stops at dimension
/// `d`; the return value reports whether anything beyond the cap was cut off.
pub(crate) fn visit_cliques(
    g: &Graph,
    cap: Option<usize>,
    visit: &mut impl FnMut(&[usize]),
) -> bool {
    fn rec(
        g: &Graph,
        prefix: &mut Vec<usize>,
        cands: &[usize],
        cap: Option<usize>,
        visit: &mut impl FnMut(&[usize]),
        cut: &mut bool,
    ) {
        visit(prefix);
        if cap == Some(prefix.len() - 1) {
            if !cands.is_empty() {
                *cut = true;
            }
            return;
        }
        for (i, &w) in cands.iter().enumerate() {
            // Common neighbors of the extended prefix that stay above w.
            let next = intersect_sorted(&cands[i + 1..], g.neighbors(w));
            prefix.push(w);
            rec(g, prefix, &next, cap, visit, cut);
            prefix.pop();
        }
    }

    let mut cut = false;
    let mut prefix = Vec::with_capacity(16);
    for v in g.vertices() {
        let above: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        prefix.push(v);
        rec(g, &mut prefix, &above, cap, visit, &mut cut);
        prefix.pop();
    }
    cut
}

/// Build the clique complex of `g`, optionally capped at `max_dim`.
///
/// Every simplex up to the cap is present and every layer is lexicographically
/// sorted. Capping marks the complex truncated only if simplices actually got
/// cut off.
pub fn clique_complex(g: &Graph, max_dim: Option<usize>) -> CliqueComplex {
    let mut layers: Vec<Vec<Simplex>> = Vec::new();
    let cut = visit_cliques(g, max_dim, &mut |clique| {
        let k = clique.len() - 1;
        if layers.len() <= k {
            layers.push(Vec::new());
        }
        layers[k].push(Simplex::from_sorted_unchecked(clique.to_vec()));
    });
    debug_assert!(layers
        .iter()
        .all(|layer| layer.windows(2).all(|w| w[0] < w[1])));

    // Faces of layer k are found by binary search in the sorted layer k-1.
    let mut faces: Vec<Vec<(u32, i8)>> = vec![Vec::new()];
    for k in 1..layers.len() {
        let mut table = Vec::with_capacity(layers[k].len() * (k + 1));
        let mut buf = Vec::with_capacity(k);
        for s in &layers[k] {
            for i in 0..=k {
                buf.clear();
                buf.extend(s.verts().iter().copied());
                buf.remove(i);
                let idx = layers[k - 1]
                    .binary_search_by(|t| t.verts.as_slice().cmp(&buf))
                    .expect("face of a clique is a clique");
                table.push((idx as u32, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        faces.push(table);
    }

    CliqueComplex { layers, faces, truncated: cut.then(|| max_dim.unwrap()) }
}

/// The f-vector of the full clique complex without storing simplices.
/// Used by everything that only needs counts (Euler characteristics of exit
/// sets and spheres), where building tables would dominate the cost.
pub fn clique_fvec(g: &Graph) -> Vec<usize> {
    let mut counts: Vec<usize> = Vec::new();
    visit_cliques(g, None, &mut |clique| {
        let k = clique.len() - 1;
        if counts.len() <= k {
            counts.push(0);
        }
        counts[k] += 1;
    });
    counts
}

/// Alternating sum of an f-vector.
fn alternating_sum(fvec: &[usize]) -> i64 {
    let mut chi = 0i64;
    for (k, &v) in fvec.iter().enumerate() {
        let v = i64::try_from(v).expect("simplex count fits i64");
        if k % 2 == 0 {
            chi += v;
        } else {
            chi -= v;
        }
    }
    chi
}

/// Euler characteristic χ = Σ (-1)^k v_k of a complete complex.
/// A truncated complex is refused rather than silently miscounted.
pub fn euler_characteristic(c: &CliqueComplex) -> Result<i64> {
    c.err_if_truncated()?;
    Ok(alternating_sum(&c.fvec()))
}

/// Euler characteristic of a graph's clique complex, by counting alone.
pub fn graph_euler_characteristic(g: &Graph) -> i64 {
    alternating_sum(&clique_fvec(g))
}

/// Local simplex counts `(V_0(v), V_1(v), ...)`: the f-vector of the clique
/// complex of the unit sphere S(v). Empty for an isolated vertex. `V_{-1} = 1`
/// by convention and is not stored.
pub fn local_counts(g: &Graph, v: usize) -> Result<Vec<usize>> {
    let (sphere, _) = g.unit_sphere(v)?;
    Ok(clique_fvec(&sphere))
}

/// One level of a counting identity: the sum of per-vertex local counts
/// against the multiple of a global simplex count it must equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingRow {
    pub k: usize,
    pub local_sum: usize,
    pub expected: usize,
}

impl CountingRow {
    pub fn holds(&self) -> bool {
        self.local_sum == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingReport {
    pub rows: Vec<CountingRow>,
}

impl CountingReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(CountingRow::holds)
    }
}

/// Check the transfer equations Σ_v V_{k-1}(v) = (k+1)·v_k for every k ≥ 1
/// with v_k > 0. Each k-simplex contains k+1 vertices and appears in the
/// sphere of each as a (k-1)-simplex, which is exactly what the left side
/// counts. `c` must be the (untruncated) clique complex of `g`.
pub fn check_transfer(g: &Graph, c: &CliqueComplex) -> Result<CountingReport> {
    c.err_if_truncated()?;
    let fvec = c.fvec();
    let top = match c.top_dim() {
        Some(t) => t,
        None => return Ok(CountingReport { rows: Vec::new() }),
    };
    let mut local_sums = vec![0usize; top + 1]; // slot k holds Σ_v V_{k-1}(v)
    for v in g.vertices() {
        for (j, cnt) in local_counts(g, v)?.iter().enumerate() {
            local_sums[j + 1] += cnt;
        }
    }
    let rows = (1..=top)
        .map(|k| CountingRow { k, local_sum: local_sums[k], expected: (k + 1) * fvec[k] })
        .collect();
    Ok(CountingReport { rows })
}

/// Check the intermediate equations Σ_v W_k(v) = k·v_{k+1} for k ≥ 1, where
/// W_k(v) counts k-simplices in S(v) with at least one vertex below v and one
/// above v under the injective function `f`. Each (k+1)-simplex is seen from
/// each of its vertices except its minimum and maximum — k vantage points.
pub fn check_intermediate(
    g: &Graph,
    c: &CliqueComplex,
    f: &VertexFunction,
) -> Result<CountingReport> {
    c.err_if_truncated()?;
    f.check_order(g)?;
    let fvec = c.fvec();
    let top = match c.top_dim() {
        Some(t) => t,
        None => return Ok(CountingReport { rows: Vec::new() }),
    };
    let mut local_sums = vec![0usize; top + 1];
    for v in g.vertices() {
        for (k, cnt) in crate::morse::mixed_counts(g, f, v)?.iter().enumerate() {
            if k <= top {
                local_sums[k] += cnt;
            }
        }
    }
    let rows = (1..=top)
        .map(|k| CountingRow {
            k,
            local_sum: local_sums[k],
            expected: k * fvec.get(k + 1).copied().unwrap_or(0),
        })
        .collect();
    Ok(CountingReport { rows })
}
