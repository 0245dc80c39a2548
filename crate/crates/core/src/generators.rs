//! Deterministic constructors for the graph families used throughout the
//! test corpus: paths, cycles, complete and bipartite graphs, stars, wheels,
//! grids, generalized Petersen graphs, random trees and G(n,p), the platonic
//! test solids, the snub cube, the triangulated cylinder, and the Möbius
//! band (the square of an odd cycle).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed request for a named family: `name params... [seed]`.
/// Only the random families (`tree_random`, `erdos_renyi`) accept a seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

/// The registered family names, in display order.
pub fn family_names() -> &'static [&'static str] {
    &[
        "path",
        "cycle",
        "complete",
        "complete_bipartite",
        "star",
        "wheel",
        "grid",
        "petersen",
        "tree_random",
        "erdos_renyi",
        "tetrahedron",
        "octahedron",
        "icosahedron",
        "truncated_cube",
        "snub_cube",
        "cylinder",
        "moebius",
    ]
}

/// Dispatch a spec to its family constructor, enforcing arity and bounds.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let bad_arity = |expected: &str| {
        Err(Error::Generator(format!(
            "{} expects {expected}, got {} parameter(s)",
            spec.name,
            spec.params.len()
        )))
    };
    let p = &spec.params;
    if spec.seed.is_some() && !matches!(spec.name.as_str(), "tree_random" | "erdos_renyi") {
        return Err(Error::Generator(format!("{} is deterministic; drop the seed", spec.name)));
    }
    let seed = spec.seed.unwrap_or(0);
    match spec.name.as_str() {
        "path" => match p[..] {
            [n] => path(n),
            _ => bad_arity("1 parameter (n)"),
        },
        "cycle" => match p[..] {
            [n] => cycle(n),
            _ => bad_arity("1 parameter (n)"),
        },
        "complete" => match p[..] {
            [n] => Ok(complete(n)),
            _ => bad_arity("1 parameter (n)"),
        },
        "complete_bipartite" => match p[..] {
            [m, n] => complete_bipartite(m, n),
            _ => bad_arity("2 parameters (m, n)"),
        },
        "star" => match p[..] {
            [n] => star(n),
            _ => bad_arity("1 parameter (n)"),
        },
        "wheel" => match p[..] {
            [n] => wheel(n),
            _ => bad_arity("1 parameter (n)"),
        },
        "grid" => match p[..] {
            [m, n] => grid(m, n),
            _ => bad_arity("2 parameters (m, n)"),
        },
        "petersen" => match p[..] {
            [n, k] => petersen(n, k),
            _ => bad_arity("2 parameters (n, k)"),
        },
        "tree_random" => match p[..] {
            [n] => tree_random(n, seed),
            _ => bad_arity("1 parameter (n)"),
        },
        "erdos_renyi" => match p[..] {
            [n, num, den] => erdos_renyi(n, num, den, seed),
            _ => bad_arity("3 parameters (n, p_numerator, p_denominator)"),
        },
        "tetrahedron" => match p[..] {
            [] => Ok(tetrahedron()),
            _ => bad_arity("no parameters"),
        },
        "octahedron" => match p[..] {
            [] => Ok(octahedron()),
            _ => bad_arity("no parameters"),
        },
        "icosahedron" => match p[..] {
            [] => Ok(icosahedron()),
            _ => bad_arity("no parameters"),
        },
        "truncated_cube" => match p[..] {
            [] => Ok(truncated_cube()),
            _ => bad_arity("no parameters"),
        },
        "snub_cube" => match p[..] {
            [] => Ok(snub_cube()),
            _ => bad_arity("no parameters"),
        },
        "cylinder" => match p[..] {
            [n] => cylinder(n),
            _ => bad_arity("1 parameter (n)"),
        },
        "moebius" => match p[..] {
            [m] => moebius(m),
            _ => bad_arity("1 parameter (m)"),
        },
        other => Err(Error::Generator(format!(
            "unknown family {other:?}; known families: {}",
            family_names().join(", ")
        ))),
    }
}

/// The path P_n on n ≥ 1 vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("path needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

/// The cycle C_n, n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator("cycle needs n >= 3".into()));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

/// The complete graph K_n (n = 0 gives the empty graph).
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("distinct fresh pairs");
        }
    }
    g
}

/// The complete bipartite graph K_{m,n}: sides 0..m and m..m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::Generator("complete_bipartite needs m, n >= 1".into()));
    }
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v)?;
        }
    }
    Ok(g)
}

/// The star S_n: center 0 joined to n ≥ 1 leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("star needs n >= 1 leaves".into()));
    }
    let mut g = Graph::new(n + 1);
    for leaf in 1..=n {
        g.add_edge(0, leaf)?;
    }
    Ok(g)
}

/// The wheel W_n: hub 0 joined to the rim cycle 1..=n, n ≥ 4.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Generator("wheel needs a rim of n >= 4".into()));
    }
    let mut g = Graph::new(n + 1);
    for i in 0..n {
        g.add_edge(0, 1 + i)?;
        g.add_edge(1 + i, 1 + (i + 1) % n)?;
    }
    Ok(g)
}

/// The m × n lattice grid (4-neighbor), vertex (r, c) at id r·n + c.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::Generator("grid needs m, n >= 1".into()));
    }
    let mut g = Graph::new(m * n);
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                g.add_edge(v, v + 1)?;
            }
            if r + 1 < m {
                g.add_edge(v, v + n)?;
            }
        }
    }
    Ok(g)
}

/// The generalized Petersen graph GP(n, k): outer cycle u_i, spokes u_i–v_i,
/// inner star polygon v_i–v_{i+k}. Requires n ≥ 3 and 1 ≤ k < n/2.
pub fn petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(Error::Generator("petersen needs n >= 3 and 1 <= k < n/2".into()));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(i, n + i)?;
        g.add_edge(n + i, n + (i + k) % n)?;
    }
    Ok(g)
}

/// A random tree on n ≥ 1 vertices: vertex i ≥ 1 attaches to a uniformly
/// chosen earlier vertex. Deterministic for a fixed seed.
pub fn tree_random(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("tree_random needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(rng.random_range(0..i), i)?;
    }
    Ok(g)
}

/// G(n, p) with exact rational p = num/den: each pair u < v (in
/// lexicographic order) becomes an edge independently with probability p.
pub fn erdos_renyi(n: usize, num: usize, den: usize, seed: u64) -> Result<Graph> {
    if den == 0 || num > den {
        return Err(Error::Generator("erdos_renyi needs 0 <= num/den <= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..den) < num {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// K_4: the smallest 3-dimensional complex among our solids.
pub fn tetrahedron() -> Graph {
    complete(4)
}

/// The octahedron K_{2,2,2}: six vertices, antipodal pairs (0,1), (2,3),
/// (4,5) non-adjacent, everything else joined. All unit spheres are C_4.
pub fn octahedron() -> Graph {
    let mut g = Graph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 1 || u % 2 != 0 {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// The icosahedron: 12 vertices, 5-regular, all unit spheres C_5.
pub fn icosahedron() -> Graph {
    Graph::from_edges(
        12,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (1, 6),
            (1, 10),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 7),
            (3, 8),
            (4, 5),
            (4, 8),
            (4, 9),
            (5, 9),
            (5, 10),
            (6, 7),
            (6, 10),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 9),
            (8, 11),
            (9, 10),
            (9, 11),
            (10, 11),
        ],
    )
    .expect("verified icosahedron adjacency")
}

/// The truncated cube: each cube corner v becomes a triangle on the ids
/// 3v+d (d the incident axis); cube edges survive between matching corner
/// vertices. 24 vertices, 36 edges, 8 triangles, χ = −4, dimension 5/3.
pub fn truncated_cube() -> Graph {
    let mut g = Graph::new(24);
    for v in 0..8 {
        for d in 0..3 {
            for e in d + 1..3 {
                g.add_edge(3 * v + d, 3 * v + e).expect("fresh corner pair");
            }
            let u = v ^ (1 << d);
            if v < u {
                g.add_edge(3 * v + d, 3 * u + d).expect("fresh cube edge");
            }
        }
    }
    g
}

/// The snub cube: a verified hardcoded adjacency (5-regular, 24 vertices,
/// 60 edges, 32 triangles, χ = −4). As a 2-complex it is an orientable
/// surface whose boundary is the six square rims, 6 disjoint copies of C_4.
pub fn snub_cube() -> Graph {
    Graph::from_edges(
        24,
        &[
            (0, 4),
            (0, 8),
            (0, 17),
            (0, 20),
            (0, 21),
            (1, 5),
            (1, 9),
            (1, 16),
            (1, 20),
            (1, 21),
            (2, 6),
            (2, 10),
            (2, 19),
            (2, 22),
            (2, 23),
            (3, 7),
            (3, 11),
            (3, 18),
            (3, 22),
            (3, 23),
            (4, 8),
            (4, 12),
            (4, 14),
            (4, 20),
            (5, 9),
            (5, 13),
            (5, 15),
            (5, 21),
            (6, 10),
            (6, 12),
            (6, 14),
            (6, 22),
            (7, 11),
            (7, 13),
            (7, 15),
            (7, 23),
            (8, 14),
            (8, 17),
            (8, 18),
            (9, 15),
            (9, 16),
            (9, 19),
            (10, 12),
            (10, 16),
            (10, 19),
            (11, 13),
            (11, 17),
            (11, 18),
            (12, 16),
            (12, 20),
            (13, 17),
            (13, 21),
            (14, 18),
            (14, 22),
            (15, 19),
            (15, 23),
            (16, 20),
            (17, 21),
            (18, 22),
            (19, 23),
        ],
    )
    .expect("verified snub cube adjacency")
}

/// The triangulated cylinder on two n-cycles (n ≥ 4): rims a_i = i and
/// b_i = n+i with edges a_i–a_{i+1}, b_i–b_{i+1}, a_i–b_i, a_i–b_{i+1}.
/// χ = 0, orientable, and every vertex is a boundary point at k = 2.
pub fn cylinder(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Generator("cylinder needs rims of n >= 4".into()));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        g.add_edge(i, j)?;
        g.add_edge(n + i, n + j)?;
        g.add_edge(i, n + i)?;
        g.add_edge(i, n + j)?;
    }
    Ok(g)
}

/// The Möbius band as the square of the odd cycle C_{2m+1}, m ≥ 3: each
/// vertex joins its neighbors at distance 1 and 2. A pure 2-complex with
/// χ = 0 that admits no orientation.
pub fn moebius(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::Generator("moebius needs m >= 3".into()));
    }
    let n = 2 * m + 1;
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(i, (i + 2) % n)?;
    }
    Ok(g)
}
