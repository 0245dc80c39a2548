//! Inductive dimension, curvature, and the interior/boundary structure of a
//! graph, plus the Gauss-Bonnet verifier.
//!
//! Everything here is local: dimension averages over unit spheres, curvature
//! is an alternating series over sphere simplex counts, and classification
//! recurses through spheres of spheres. All values are exact rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{intersect_sorted, Graph};
use crate::rational::{rat_int, Rational};
use crate::simplicial::{graph_euler_characteristic, local_counts};

/// Inductive dimension: dim(∅) = −1 and
/// dim(G) = 1 + (Σ_v dim(S(v))) / |V|.
///
/// The average makes this fractional in general — a graph can be, say, 5/3
/// dimensional. Recursion runs over vertex subsets of `g` (a sphere of a
/// sphere is an intersection of neighborhoods), memoized per top-level call
/// on the exact vertex set, with closed forms for the two ends of the
/// spectrum: a clique on m vertices has dimension m−1 and a nonempty
/// edgeless set has dimension 0, both provable by induction on the recursion
/// itself. The fast paths keep complete graphs from costing 2^n.
pub fn dimension(g: &Graph) -> Rational {
    let mut memo: HashMap<Vec<usize>, Rational> = HashMap::new();
    dim_of_set(g, g.vertices().collect(), &mut memo)
}

fn dim_of_set(g: &Graph, set: Vec<usize>, memo: &mut HashMap<Vec<usize>, Rational>) -> Rational {
    if set.is_empty() {
        return rat_int(-1);
    }
    if let Some(d) = memo.get(&set) {
        return d.clone();
    }
    let mut all_adjacent = true;
    let mut none_adjacent = true;
    'scan: for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                none_adjacent = false;
            } else {
                all_adjacent = false;
            }
            if !all_adjacent && !none_adjacent {
                break 'scan;
            }
        }
    }
    let d = if all_adjacent {
        // Clique: each sphere is the clique minus one vertex.
        rat_int(set.len() as i64 - 1)
    } else if none_adjacent {
        // Edgeless: every sphere is empty, so 1 + (−1) = 0.
        rat_int(0)
    } else {
        let mut sum = Rational::zero();
        for &v in &set {
            let sphere = intersect_sorted(g.neighbors(v), &set);
            sum += dim_of_set(g, sphere, memo);
        }
        rat_int(1) + sum / rat_int(set.len() as i64)
    };
    memo.insert(set, d.clone());
    d
}

/// Curvature K(v) = Σ_{k≥0} (−1)^k V_{k−1}(v)/(k+1), with V_{−1}(v) = 1:
/// K(v) = 1 − V_0(v)/2 + V_1(v)/3 − V_2(v)/4 + …
/// where V_j(v) counts the j-simplices of the unit sphere. The sum is finite
/// (spheres are finite) and exact.
pub fn curvature(g: &Graph, v: usize) -> Result<Rational> {
    let counts = local_counts(g, v)?;
    let mut k = rat_int(1);
    for (j, &cnt) in counts.iter().enumerate() {
        let term = Rational::new(BigInt::from(cnt), BigInt::from(j + 2));
        if j % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    Ok(k)
}

/// Result of checking Σ_v K(v) = χ(G) on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussBonnetReport {
    pub curvatures: Vec<Rational>,
    pub total: Rational,
    pub euler_characteristic: i64,
}

impl GaussBonnetReport {
    pub fn pass(&self) -> bool {
        self.total == rat_int(self.euler_characteristic)
    }
}

/// Compute every curvature and the Euler characteristic and compare exactly.
/// The identity is a theorem, so a failing report indicates a bug, not a
/// property of the graph.
pub fn gauss_bonnet_verify(g: &Graph) -> GaussBonnetReport {
    let curvatures: Vec<Rational> = g
        .vertices()
        .map(|v| curvature(g, v).expect("vertex ids from the graph are valid"))
        .collect();
    let mut total = rat_int(0);
    for k in &curvatures {
        total += k;
    }
    GaussBonnetReport { curvatures, total, euler_characteristic: graph_euler_characteristic(g) }
}

/// How a vertex sits in a graph viewed as k-dimensional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Interior,
    Boundary,
    /// Neither definition applies; the graph is not k-dimensional at `v`.
    Neither,
}

/// Classify `v` in a graph treated as k-dimensional (`k` is passed, not
/// inferred, so the contract is total even on graphs of fractional
/// dimension).
///
/// Seed case k = 1: Interior iff S(v) is two non-adjacent vertices (an edge
/// in the sphere would create a triangle, contradicting 1-dimensionality);
/// Boundary iff S(v) is a single vertex.
///
/// For k ≥ 2 the sphere must be connected of dimension k−1; then `v` is
/// Interior when every sphere vertex is Interior one level down, and
/// Boundary when every sphere vertex is Interior or Boundary with both
/// classes present. Everything else is Neither, including the undefined
/// corner of a disconnected sphere of the right dimension.
pub fn classify_vertex(g: &Graph, v: usize, k: usize) -> Result<VertexClass> {
    if k < 1 {
        return Err(Error::Input("classification level k must be at least 1".into()));
    }
    let (sphere, _) = g.unit_sphere(v)?;
    Ok(classify_sphere(&sphere, k))
}

fn classify_sphere(sphere: &Graph, k: usize) -> VertexClass {
    if k == 1 {
        return match (sphere.order(), sphere.size()) {
            (2, 0) => VertexClass::Interior,
            (1, _) => VertexClass::Boundary,
            _ => VertexClass::Neither,
        };
    }
    if !sphere.is_connected() || dimension(sphere) != rat_int(k as i64 - 1) {
        return VertexClass::Neither;
    }
    let mut interior = 0usize;
    let mut boundary = 0usize;
    for w in sphere.vertices() {
        let (inner, _) = sphere.unit_sphere(w).expect("vertex ids from the graph are valid");
        match classify_sphere(&inner, k - 1) {
            VertexClass::Interior => interior += 1,
            VertexClass::Boundary => boundary += 1,
            VertexClass::Neither => return VertexClass::Neither,
        }
    }
    if boundary == 0 {
        VertexClass::Interior
    } else if interior > 0 {
        VertexClass::Boundary
    } else {
        VertexClass::Neither
    }
}

/// The boundary dG of `g` at level `k`: all Boundary-classified vertices,
/// plus a flag that is true iff no vertex classified as Neither (i.e. `g`
/// genuinely is a k-dimensional graph with boundary).
pub fn boundary_vertices(g: &Graph, k: usize) -> Result<(Vec<usize>, bool)> {
    let mut boundary = Vec::new();
    let mut is_graph_with_boundary = true;
    for v in g.vertices() {
        match classify_vertex(g, v, k)? {
            VertexClass::Boundary => boundary.push(v),
            VertexClass::Interior => {}
            VertexClass::Neither => is_graph_with_boundary = false,
        }
    }
    Ok((boundary, is_graph_with_boundary))
}
