//! Discrete forms and chains on a clique complex, the exterior derivative
//! and boundary operators, orientations and the orientability decision,
//! Betti numbers, and the Green-Stokes verifier.
//!
//! The canonical orientation of every simplex is ascending vertex order; all
//! signs are taken relative to it. A form or chain is stored as a dense
//! coefficient vector aligned with its complex layer (the layer is sorted,
//! so indices are stable), which keeps d and ∂ as single passes over the
//! precomputed face tables.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::rational::{rat_int, Rational};
use crate::simplicial::{CliqueComplex, Simplex};

/// A k-form: an antisymmetric rational function on the k-simplices,
/// represented by its values on the canonical (ascending) representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    level: usize,
    values: Vec<Rational>,
}

impl Form {
    /// The zero k-form on `c`.
    pub fn zero(c: &CliqueComplex, level: usize) -> Form {
        Form { level, values: vec![Rational::zero(); c.layer(level).len()] }
    }

    /// Build a form from `(vertex tuple, value)` entries. Tuples may be in
    /// any order — the permutation sign folds into the value (antisymmetry).
    /// Entries naming a simplex twice, or one absent from the complex, are
    /// rejected. Unmentioned simplices get 0.
    pub fn from_entries(
        c: &CliqueComplex,
        level: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Form> {
        let mut form = Form::zero(c, level);
        let mut seen = vec![false; form.values.len()];
        for (tuple, value) in entries {
            let (simplex, sign) = Simplex::from_unordered(tuple)?;
            if simplex.dim() != level {
                return Err(Error::DegreeMismatch { expected: level, got: simplex.dim() });
            }
            let idx = c
                .index_of(simplex.verts())
                .ok_or_else(|| Error::Input(format!("simplex {simplex} is not in the complex")))?;
            if seen[idx] {
                return Err(Error::Input(format!("duplicate entry for simplex {simplex}")));
            }
            seen[idx] = true;
            form.values[idx] = if sign < 0 { -value } else { value };
        }
        Ok(form)
    }

    /// A form with every coefficient drawn uniformly from the integers
    /// −9..=9 by a seeded generator (the reproducible random-form recipe
    /// used by the property checks).
    pub fn random_int(c: &CliqueComplex, level: usize, seed: u64) -> Form {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values =
            (0..c.layer(level).len()).map(|_| rat_int(rng.random_range(-9..=9))).collect();
        Form { level, values }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Coefficients in layer order (canonical representatives).
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Evaluate on an arbitrary vertex tuple, applying the permutation sign.
    pub fn value_on(&self, c: &CliqueComplex, tuple: Vec<usize>) -> Result<Rational> {
        let (simplex, sign) = Simplex::from_unordered(tuple)?;
        if simplex.dim() != self.level {
            return Err(Error::DegreeMismatch { expected: self.level, got: simplex.dim() });
        }
        let idx = c
            .index_of(simplex.verts())
            .ok_or_else(|| Error::Input(format!("simplex {simplex} is not in the complex")))?;
        let v = self.values[idx].clone();
        Ok(if sign < 0 { -v } else { v })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_aligned(&self, c: &CliqueComplex) -> Result<()> {
        if self.values.len() == c.layer(self.level).len() {
            Ok(())
        } else {
            Err(Error::Input("form does not belong to this complex".into()))
        }
    }
}

/// A k-chain: an integer formal sum of k-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    level: usize,
    coeffs: Vec<i64>,
}

impl Chain {
    pub fn zero(c: &CliqueComplex, level: usize) -> Chain {
        Chain { level, coeffs: vec![0; c.layer(level).len()] }
    }

    /// Build a chain from `(vertex tuple, coefficient)` entries; tuple order
    /// contributes its permutation sign, duplicates and foreign simplices
    /// are rejected.
    pub fn from_entries(
        c: &CliqueComplex,
        level: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, i64)>,
    ) -> Result<Chain> {
        let mut chain = Chain::zero(c, level);
        let mut seen = vec![false; chain.coeffs.len()];
        for (tuple, coeff) in entries {
            let (simplex, sign) = Simplex::from_unordered(tuple)?;
            if simplex.dim() != level {
                return Err(Error::DegreeMismatch { expected: level, got: simplex.dim() });
            }
            let idx = c
                .index_of(simplex.verts())
                .ok_or_else(|| Error::Input(format!("simplex {simplex} is not in the complex")))?;
            if seen[idx] {
                return Err(Error::Input(format!("duplicate entry for simplex {simplex}")));
            }
            seen[idx] = true;
            chain.coeffs[idx] = i64::from(sign) * coeff;
        }
        Ok(chain)
    }

    pub fn random_int(c: &CliqueComplex, level: usize, seed: u64) -> Chain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = (0..c.layer(level).len()).map(|_| rng.random_range(-9..=9)).collect();
        Chain { level, coeffs }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The simplices carrying nonzero coefficients, in layer order.
    pub fn support<'c>(&self, c: &'c CliqueComplex) -> Vec<(&'c Simplex, i64)> {
        let layer = c.layer(self.level);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a != 0)
            .map(|(i, &a)| (&layer[i], a))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    fn check_aligned(&self, c: &CliqueComplex) -> Result<()> {
        if self.coeffs.len() == c.layer(self.level).len() {
            Ok(())
        } else {
            Err(Error::Input("chain does not belong to this complex".into()))
        }
    }
}

/// The exterior derivative: (df)(x_0..x_{k+1}) = Σ_i (−1)^i f(..x̂_i..).
/// Level 0 → 1 is the gradient, 1 → 2 the curl, 2 → 3 the divergence.
/// Beyond the top dimension the result is the (empty) zero form.
pub fn exterior_derivative(c: &CliqueComplex, f: &Form) -> Result<Form> {
    f.check_aligned(c)?;
    let k1 = f.level + 1;
    let mut out = Form::zero(c, k1);
    let stride = k1 + 1;
    let table = c.face_table(k1);
    for (j, acc) in out.values.iter_mut().enumerate() {
        for &(idx, sign) in &table[j * stride..(j + 1) * stride] {
            if sign > 0 {
                *acc += &f.values[idx as usize];
            } else {
                *acc -= &f.values[idx as usize];
            }
        }
    }
    Ok(out)
}

/// The boundary operator: ∂(x_0..x_k) = Σ_i (−1)^i (..x̂_i..), extended
/// linearly. Defined for k ≥ 1.
pub fn boundary(c: &CliqueComplex, ch: &Chain) -> Result<Chain> {
    ch.check_aligned(c)?;
    if ch.level == 0 {
        return Err(Error::Input("a 0-chain has no boundary".into()));
    }
    let mut out = Chain::zero(c, ch.level - 1);
    let stride = ch.level + 1;
    let table = c.face_table(ch.level);
    for (j, &a) in ch.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for &(idx, sign) in &table[j * stride..(j + 1) * stride] {
            let slot = &mut out.coeffs[idx as usize];
            *slot = slot
                .checked_add(i64::from(sign) * a)
                .expect("chain coefficients stay far below i64 range");
        }
    }
    Ok(out)
}

/// The evaluation pairing ⟨f, Σ a_σ σ⟩ = Σ a_σ f(σ) — the discrete integral
/// of `f` over the chain.
pub fn pairing(c: &CliqueComplex, f: &Form, ch: &Chain) -> Result<Rational> {
    f.check_aligned(c)?;
    ch.check_aligned(c)?;
    if f.level != ch.level {
        return Err(Error::DegreeMismatch { expected: f.level, got: ch.level });
    }
    let mut acc = Rational::zero();
    for (value, &a) in f.values.iter().zip(&ch.coeffs) {
        if a != 0 {
            acc += value * rat_int(a);
        }
    }
    Ok(acc)
}

/// An orientation: ±1 on every top-level simplex of a pure k-complex, such
/// that induced signs cancel on every shared (k−1)-face. Constructed only
/// in valid states (via [`orientation_search`] or the checked constructor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    level: usize,
    signs: Vec<i8>,
}

impl Orientation {
    /// Validate an explicit sign assignment against the complex: the
    /// complex must be pure at `level`, the signs ±1 and aligned with the
    /// top layer, and every shared face must cancel.
    pub fn new(c: &CliqueComplex, level: usize, signs: Vec<i8>) -> Result<Orientation> {
        if signs.len() != c.layer(level).len() {
            return Err(Error::Input("one sign per top-level simplex required".into()));
        }
        if !signs.iter().all(|&s| s == 1 || s == -1) {
            return Err(Error::Input("orientation signs must be +1 or -1".into()));
        }
        let cofaces = pure_complex_cofaces(c, level)?;
        for (face_idx, entry) in cofaces.iter().enumerate() {
            if let [(a, sa), (b, sb)] = entry[..] {
                if i64::from(signs[a]) * i64::from(sa) + i64::from(signs[b]) * i64::from(sb) != 0 {
                    let face = &c.layer(level - 1)[face_idx];
                    return Err(Error::NotGeometric(format!(
                        "signs do not cancel on shared face {face}"
                    )));
                }
            }
        }
        Ok(Orientation { level, signs })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Signs in top-layer order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// Outcome of the orientability decision.
#[derive(Debug, Clone)]
pub enum OrientationOutcome {
    Orientable(Orientation),
    /// A cyclic run of top-level simplices, consecutive ones sharing a
    /// (k−1)-face, whose cancellation constraints force a sign to be both
    /// +1 and −1.
    NotOrientable { witness: Vec<Simplex> },
}

/// Check that the complex is pure at `level` (top dimension is `level` and
/// nothing of lower dimension is maximal) and that no (level−1)-face lies
/// in three or more top simplices. Returns, per (level−1)-simplex, its list
/// of (top simplex index, induced sign) cofaces.
fn pure_complex_cofaces(c: &CliqueComplex, level: usize) -> Result<Vec<Vec<(usize, i8)>>> {
    if level == 0 {
        return Err(Error::NotGeometric(
            "orientation at level 0 is not meaningful (no faces to cancel on)".into(),
        ));
    }
    if c.top_dim() != Some(level) {
        return Err(Error::NotGeometric(format!(
            "complex has top dimension {:?}, expected {level}",
            c.top_dim()
        )));
    }
    // Purity: every simplex below the top must have a coface.
    for j in 1..=level {
        let mut covered = vec![false; c.layer(j - 1).len()];
        let stride = j + 1;
        let table = c.face_table(j);
        for &(idx, _) in table {
            covered[idx as usize] = true;
        }
        debug_assert_eq!(table.len(), c.layer(j).len() * stride);
        if let Some(pos) = covered.iter().position(|&cov| !cov) {
            let s = &c.layer(j - 1)[pos];
            return Err(Error::NotGeometric(format!(
                "complex is not pure: {s} is maximal with dimension {} < {level}",
                j - 1
            )));
        }
    }
    let mut cofaces: Vec<Vec<(usize, i8)>> = vec![Vec::new(); c.layer(level - 1).len()];
    let stride = level + 1;
    for (j, window) in c.face_table(level).chunks_exact(stride).enumerate() {
        for &(idx, sign) in window {
            cofaces[idx as usize].push((j, sign));
        }
    }
    if let Some((face_idx, entry)) = cofaces.iter().enumerate().find(|(_, e)| e.len() > 2) {
        let face = &c.layer(level - 1)[face_idx];
        return Err(Error::NotGeometric(format!(
            "face {face} lies in {} top simplices; gluing beyond pairs needs chains",
            entry.len()
        )));
    }
    Ok(cofaces)
}

/// Search for an orientation of the pure k-complex: propagate cancellation
/// constraints across shared faces by breadth-first search, fixing +1 on
/// the first simplex of each face-connected component. Either a consistent
/// assignment exists (returned), or some cycle of simplices forces a
/// contradiction (returned as the witness).
pub fn orientation_search(c: &CliqueComplex, k: usize) -> Result<OrientationOutcome> {
    let cofaces = pure_complex_cofaces(c, k)?;
    let n = c.layer(k).len();

    // Face-adjacency with the constraint sign: s[b] must equal edge * s[a].
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n];
    for entry in &cofaces {
        if let [(a, sa), (b, sb)] = entry[..] {
            // s[a]*sa + s[b]*sb = 0  ⇔  s[b] = -sa*sb * s[a].
            let edge = -sa * sb;
            adj[a].push((b, edge));
            adj[b].push((a, edge));
        }
    }

    let mut signs: Vec<i8> = vec![0; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if signs[root] != 0 {
            continue;
        }
        signs[root] = 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for &(b, edge) in &adj[a] {
                let required = edge * signs[a];
                if signs[b] == 0 {
                    signs[b] = required;
                    parent[b] = Some(a);
                    queue.push_back(b);
                } else if signs[b] != required {
                    return Ok(OrientationOutcome::NotOrientable {
                        witness: conflict_cycle(c, k, &parent, a, b),
                    });
                }
            }
        }
    }
    Ok(OrientationOutcome::Orientable(Orientation { level: k, signs }))
}

/// The cycle witnessing a contradiction: the tree paths from the clashing
/// simplices `a` and `b` to their lowest common ancestor, joined by the
/// face they share.
fn conflict_cycle(
    c: &CliqueComplex,
    k: usize,
    parent: &[Option<usize>],
    a: usize,
    b: usize,
) -> Vec<Simplex> {
    let chain_to_root = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let mut up_a = chain_to_root(a);
    let mut up_b = chain_to_root(b);
    // Trim the common tail above the lowest common ancestor, keeping it once.
    while up_a.len() > 1
        && up_b.len() > 1
        && up_a[up_a.len() - 1] == up_b[up_b.len() - 1]
        && up_a[up_a.len() - 2] == up_b[up_b.len() - 2]
    {
        up_a.pop();
        up_b.pop();
    }
    up_b.pop(); // drop the shared ancestor from one side
    up_b.reverse();
    up_a.extend(up_b);
    up_a.into_iter().map(|i| c.layer(k)[i].clone()).collect()
}

/// The volume chain of an orientation: each top simplex with its sign.
pub fn volume_chain(o: &Orientation) -> Chain {
    Chain { level: o.level, coeffs: o.signs.iter().map(|&s| i64::from(s)).collect() }
}

/// Result of checking Green-Stokes ⟨df, G⟩ = ⟨f, ∂G⟩ on a volume chain G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StokesReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub boundary_chain: Chain,
}

impl StokesReport {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Verify Green-Stokes for a (k−1)-form against an orientation at level k:
/// integrate df over the oriented volume and f over its boundary.
pub fn stokes_verify(c: &CliqueComplex, o: &Orientation, f: &Form) -> Result<StokesReport> {
    if f.level + 1 != o.level {
        return Err(Error::DegreeMismatch { expected: o.level - 1, got: f.level });
    }
    let vol = volume_chain(o);
    vol.check_aligned(c)?;
    let df = exterior_derivative(c, f)?;
    let boundary_chain = boundary(c, &vol)?;
    let lhs = pairing(c, &df, &vol)?;
    let rhs = pairing(c, f, &boundary_chain)?;
    Ok(StokesReport { lhs, rhs, boundary_chain })
}

/// What the support of a boundary chain spans.
#[derive(Debug, Clone)]
pub enum BoundaryGraph {
    /// All coefficients were ±1: the support simplices span an honest graph
    /// (vertices and pairwise edges of the support), relabeled contiguously.
    Spanned { graph: Graph, map: VertexMap },
    /// Some simplex carries a coefficient outside {−1, 0, 1} — the boundary
    /// is a genuine chain, not a graph.
    NotAGraph { simplex: Simplex, coefficient: i64 },
}

/// Interpret a boundary chain as a graph if its coefficients allow it.
pub fn boundary_as_graph(c: &CliqueComplex, ch: &Chain) -> Result<BoundaryGraph> {
    ch.check_aligned(c)?;
    let layer = c.layer(ch.level);
    let mut verts: Vec<usize> = Vec::new();
    let mut edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (i, &a) in ch.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if a.abs() != 1 {
            return Ok(BoundaryGraph::NotAGraph { simplex: layer[i].clone(), coefficient: a });
        }
        let vs = layer[i].verts();
        verts.extend_from_slice(vs);
        for (p, &u) in vs.iter().enumerate() {
            for &w in &vs[p + 1..] {
                edges.insert((u, w));
            }
        }
    }
    verts.sort_unstable();
    verts.dedup();
    let mut graph = Graph::new(verts.len());
    for (u, w) in edges {
        let lu = verts.binary_search(&u).expect("endpoint collected");
        let lw = verts.binary_search(&w).expect("endpoint collected");
        graph.add_edge(lu, lw).expect("edges deduplicated");
    }
    Ok(BoundaryGraph::Spanned { graph, map: VertexMap::from_sorted(verts) })
}

/// Betti numbers b_k = v_k − rank(D_k) − rank(D_{k−1}), where D_k is the
/// incidence matrix of the exterior derivative Ω^k → Ω^{k+1} and ranks are
/// exact. Refuses truncated complexes (their top-degree ranks are wrong).
pub fn betti_numbers(c: &CliqueComplex) -> Result<Vec<usize>> {
    if let Some(cap) = c.truncated_at() {
        return Err(Error::Truncated(cap));
    }
    let fvec = c.fvec();
    let mut ranks = Vec::with_capacity(fvec.len());
    for k in 0..fvec.len() {
        let rows = fvec.get(k + 1).copied().unwrap_or(0);
        let mut d = crate::linalg::IntMatrix::zero(rows, fvec[k]);
        let stride = k + 2;
        for (j, window) in c.face_table(k + 1).chunks_exact(stride).enumerate() {
            for &(idx, sign) in window {
                d.set(j, idx as usize, i64::from(sign));
            }
        }
        ranks.push(d.rank());
    }
    Ok((0..fvec.len())
        .map(|k| fvec[k] - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect())
}

/// Result of checking Euler-Poincaré: Σ(−1)^k b_k = Σ(−1)^k v_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPoincareReport {
    pub betti: Vec<usize>,
    pub fvec: Vec<usize>,
    /// Σ(−1)^k b_k.
    pub cohomological: i64,
    /// Σ(−1)^k v_k.
    pub combinatorial: i64,
}

impl EulerPoincareReport {
    pub fn pass(&self) -> bool {
        self.cohomological == self.combinatorial
    }
}

pub fn euler_poincare_verify(c: &CliqueComplex) -> Result<EulerPoincareReport> {
    let betti = betti_numbers(c)?;
    let fvec = c.fvec();
    let alt = |xs: &[usize]| {
        xs.iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    };
    Ok(EulerPoincareReport {
        cohomological: alt(&betti),
        combinatorial: alt(&fvec),
        betti,
        fvec,
    })
}
