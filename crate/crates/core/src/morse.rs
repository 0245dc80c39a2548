//! Injective vertex functions and their critical-point theory: exit sets,
//! Poincaré-Hopf indices, the symmetric index, and the exhaustive
//! sphere-like (Reeb) checker.
//!
//! Indices depend only on how `f` orders vertices, never on the values
//! themselves, so random functions are permutations and the sphere-like
//! search can enumerate orderings.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, Graph, VertexMap};
use crate::rational::{rat_int, Rational};
use crate::simplicial::{graph_euler_characteristic, visit_cliques};

/// An injective rational-valued function on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<Rational>,
}

impl VertexFunction {
    /// Wrap per-vertex values, rejecting any tie (injectivity is what makes
    /// exit sets and indices well defined; we refuse rather than tie-break).
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::NotInjective(u, v, values[u].to_string()));
            }
        }
        Ok(VertexFunction { values })
    }

    pub fn from_integers(vals: &[i64]) -> Result<Self> {
        VertexFunction::new(vals.iter().map(|&x| rat_int(x)).collect())
    }

    /// Number of vertices the function is defined on.
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// True if `f(u) < f(v)`.
    pub fn is_below(&self, u: usize, v: usize) -> bool {
        self.values[u] < self.values[v]
    }

    /// Rank of each vertex: `ranks()[v]` = number of vertices with smaller
    /// value. Replacing values by ranks changes no exit set and no index.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| self.values[a].cmp(&self.values[b]));
        let mut ranks = vec![0; self.values.len()];
        for (r, &v) in order.iter().enumerate() {
            ranks[v] = r;
        }
        ranks
    }

    /// The function −f (swaps exit and entrance sets everywhere).
    pub fn negated(&self) -> VertexFunction {
        VertexFunction { values: self.values.iter().map(|x| -x).collect() }
    }

    /// Ensure the function covers exactly the vertices of `g`.
    pub fn check_order(&self, g: &Graph) -> Result<()> {
        if self.order() == g.order() {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "function defined on {} vertices but graph has {}",
                self.order(),
                g.order()
            )))
        }
    }
}

/// A deterministic random injective function: the values are a seeded
/// shuffle of 1..=n.
pub fn random_injective_function(g: &Graph, seed: u64) -> VertexFunction {
    let mut vals: Vec<i64> = (1..=g.order() as i64).collect();
    vals.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    VertexFunction::from_integers(&vals).expect("a permutation is injective")
}

/// The exit set S_f^−(v): the subgraph of the unit sphere induced on
/// neighbors with strictly smaller f-value.
pub fn exit_set(g: &Graph, f: &VertexFunction, v: usize) -> Result<(Graph, VertexMap)> {
    f.check_order(g)?;
    g.check_vertex(v)?;
    let below: Vec<usize> =
        g.neighbors(v).iter().copied().filter(|&w| f.is_below(w, v)).collect();
    Ok((g.induced_on_sorted(&below), VertexMap::from_sorted(below)))
}

/// The entrance set S_f^+(v): neighbors with strictly larger f-value.
pub fn entrance_set(g: &Graph, f: &VertexFunction, v: usize) -> Result<(Graph, VertexMap)> {
    f.check_order(g)?;
    g.check_vertex(v)?;
    let above: Vec<usize> =
        g.neighbors(v).iter().copied().filter(|&w| f.is_below(v, w)).collect();
    Ok((g.induced_on_sorted(&above), VertexMap::from_sorted(above)))
}

/// The Poincaré-Hopf index i_f(v) = 1 − χ(S_f^−(v)). A vertex is critical
/// iff its index is nonzero; the global minimum always has index 1.
pub fn index(g: &Graph, f: &VertexFunction, v: usize) -> Result<i64> {
    let (exit, _) = exit_set(g, f, v)?;
    Ok(1 - graph_euler_characteristic(&exit))
}

/// The counts W_k(v): k-simplices of the unit sphere S(v) containing both a
/// vertex below and a vertex above v. Returned with the same length as
/// `local_counts(g, v)` (zero-padded), so V_k = V_k^− + V_k^+ + W_k lines up
/// index by index. W_0 is always 0.
pub fn mixed_counts(g: &Graph, f: &VertexFunction, v: usize) -> Result<Vec<usize>> {
    f.check_order(g)?;
    let (sphere, map) = g.unit_sphere(v)?;
    let below: Vec<bool> =
        map.as_slice().iter().map(|&p| f.is_below(p, v)).collect();
    let mut counts: Vec<usize> = Vec::new();
    visit_cliques(&sphere, None, &mut |clique| {
        let k = clique.len() - 1;
        if counts.len() <= k {
            counts.push(0);
        }
        let has_below = clique.iter().any(|&w| below[w]);
        let has_above = clique.iter().any(|&w| !below[w]);
        if has_below && has_above {
            counts[k] += 1;
        }
    });
    Ok(counts)
}

/// Everything Morse-local about one vertex under one function.
#[derive(Debug, Clone)]
pub struct MorseLocalData {
    pub vertex: usize,
    pub exit_sphere: Graph,
    pub exit_map: VertexMap,
    pub entrance_sphere: Graph,
    pub entrance_map: VertexMap,
    /// W_k(v), aligned with the sphere's local counts.
    pub mixed_counts: Vec<usize>,
    pub index: i64,
}

pub fn morse_local_data(g: &Graph, f: &VertexFunction, v: usize) -> Result<MorseLocalData> {
    let (exit_sphere, exit_map) = exit_set(g, f, v)?;
    let (entrance_sphere, entrance_map) = entrance_set(g, f, v)?;
    let mixed = mixed_counts(g, f, v)?;
    let index = 1 - graph_euler_characteristic(&exit_sphere);
    Ok(MorseLocalData {
        vertex: v,
        exit_sphere,
        exit_map,
        entrance_sphere,
        entrance_map,
        mixed_counts: mixed,
        index,
    })
}

/// Result of checking Σ_v i_f(v) = χ(G) for one function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareHopfReport {
    pub indices: Vec<i64>,
    /// Vertices with nonzero index, ascending.
    pub critical_vertices: Vec<usize>,
    pub index_sum: i64,
    pub euler_characteristic: i64,
}

impl PoincareHopfReport {
    pub fn pass(&self) -> bool {
        self.index_sum == self.euler_characteristic
    }
}

/// Compute every index and compare the sum with χ(G) exactly.
pub fn poincare_hopf_verify(g: &Graph, f: &VertexFunction) -> Result<PoincareHopfReport> {
    f.check_order(g)?;
    let mut indices = Vec::with_capacity(g.order());
    for v in g.vertices() {
        indices.push(index(g, f, v)?);
    }
    let critical_vertices = g.vertices().filter(|&v| indices[v] != 0).collect();
    let index_sum = indices.iter().sum();
    Ok(PoincareHopfReport {
        indices,
        critical_vertices,
        index_sum,
        euler_characteristic: graph_euler_characteristic(g),
    })
}

/// The symmetric index j_f(v) = (i_f(v) + i_{−f}(v)) / 2, an exact rational
/// (possibly a half-integer). On 1-dimensional graphs with boundary it
/// equals the curvature for every injective f.
pub fn symmetric_index(g: &Graph, f: &VertexFunction, v: usize) -> Result<Rational> {
    let neg = f.negated();
    let sum = index(g, f, v)? + index(g, &neg, v)?;
    Ok(Rational::new(sum.into(), 2.into()))
}

/// Exhaustive sphere-like (Reeb) check.
///
/// A graph is sphere-like iff it is empty, or every unit sphere is
/// sphere-like and the minimum number of critical points over all n!
/// injective-function orderings is exactly 2. Each recursion level refuses
/// graphs larger than `order_limit` instead of guessing — the quantifier
/// over all orderings admits nothing cheaper than enumeration.
pub fn sphere_like(g: &Graph, order_limit: usize) -> Result<bool> {
    let mut memo: HashMap<Vec<usize>, bool> = HashMap::new();
    sphere_like_set(g, g.vertices().collect(), order_limit, &mut memo)
}

fn sphere_like_set(
    g: &Graph,
    set: Vec<usize>,
    limit: usize,
    memo: &mut HashMap<Vec<usize>, bool>,
) -> Result<bool> {
    if set.is_empty() {
        return Ok(true);
    }
    if let Some(&known) = memo.get(&set) {
        return Ok(known);
    }
    if set.len() > limit {
        return Err(Error::TooLarge { order: set.len(), limit });
    }
    let mut result = true;
    for &v in &set {
        let sphere = intersect_sorted(g.neighbors(v), &set);
        if !sphere_like_set(g, sphere, limit, memo)? {
            result = false;
            break;
        }
    }
    if result {
        result = min_critical_points(&g.induced_on_sorted(&set)) == 2;
    }
    memo.insert(set, result);
    Ok(result)
}

/// Minimum number of critical points over all orderings of the vertices of
/// `h` (order ≥ 1). Per vertex, the index depends only on which neighbors
/// lie below, so indices are precomputed per below-subset and each ordering
/// costs one table lookup per vertex.
fn min_critical_points(h: &Graph) -> usize {
    let n = h.order();
    let index_tables: Vec<Vec<i64>> = h
        .vertices()
        .map(|v| {
            let nbrs = h.neighbors(v);
            (0..1usize << nbrs.len())
                .map(|mask| {
                    let below: Vec<usize> = nbrs
                        .iter()
                        .enumerate()
                        .filter(|&(bit, _)| mask >> bit & 1 == 1)
                        .map(|(_, &w)| w)
                        .collect();
                    1 - graph_euler_characteristic(&h.induced_on_sorted(&below))
                })
                .collect()
        })
        .collect();

    // The vertex of lowest rank always has index 1, so the minimum is ≥ 1
    // and the search can stop early if 1 is ever reached.
    let mut best = usize::MAX;
    let mut rank = vec![0usize; n];
    permute(n, &mut |perm| {
        for (r, &v) in perm.iter().enumerate() {
            rank[v] = r;
        }
        let mut critical = 0;
        for v in 0..n {
            let mut mask = 0usize;
            for (bit, &w) in h.neighbors(v).iter().enumerate() {
                if rank[w] < rank[v] {
                    mask |= 1 << bit;
                }
            }
            if index_tables[v][mask] != 0 {
                critical += 1;
                if critical >= best {
                    break;
                }
            }
        }
        best = best.min(critical);
        best == 1
    });
    best
}

/// Heap's algorithm: call `visit` on every permutation of `0..n` until it
/// returns true (stop signal).
fn permute(n: usize, visit: &mut impl FnMut(&[usize]) -> bool) {
    let mut items: Vec<usize> = (0..n).collect();
    if visit(&items) {
        return;
    }
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            if visit(&items) {
                return;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
