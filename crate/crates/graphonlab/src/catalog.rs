//! Builders for the named pattern graphs (stars, paths, cycles, complete
//! graphs, unions of independent edges) and edge-subset enumeration.
//!
//! A "subgraph" here always means an edge-subgraph: the full vertex set is
//! kept and only a subset of the edges is taken. Isolated vertices matter
//! for labeling but never change a homomorphism density.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Star with `k` edges: center 0 joined to `k` leaves.
pub fn star(k: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(Error::BadSize(format!("star needs k >= 1, got {k}")));
    }
    SimpleGraph::new(k + 1, (1..=k).map(|leaf| (0, leaf)))
}

/// Path with `k` edges on `k + 1` vertices.
pub fn path(k: usize) -> Result<SimpleGraph> {
    if k < 1 {
        return Err(Error::BadSize(format!("path needs k >= 1, got {k}")));
    }
    SimpleGraph::new(k + 1, (0..k).map(|i| (i, i + 1)))
}

/// Cycle with `k` edges on `k` vertices.
pub fn cycle(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::BadSize(format!("cycle needs k >= 3, got {k}")));
    }
    SimpleGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::BadSize(format!("complete graph needs n >= 1, got {n}")));
    }
    SimpleGraph::new(n, (0..n).tuple_combinations())
}

/// `k` vertex-disjoint copies of a single edge.
pub fn independent_edges(k: usize) -> SimpleGraph {
    SimpleGraph::new(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
        .expect("disjoint edges are always a valid simple graph")
}

/// Vertex-disjoint union; the second graph's labels are shifted by
/// `|V(first)|`.
pub fn disjoint_union(first: &SimpleGraph, second: &SimpleGraph) -> SimpleGraph {
    let shift = first.vertex_count();
    let edges = first
        .edges()
        .iter()
        .copied()
        .chain(second.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    SimpleGraph::new(shift + second.vertex_count(), edges)
        .expect("shifted union of two valid graphs is valid")
}

/// Extends `f` by one new vertex joined to the existing vertex `w` by a
/// single pendant edge.
pub fn pendant_extension(f: &SimpleGraph, w: usize) -> Result<SimpleGraph> {
    let n = f.vertex_count();
    if w >= n {
        return Err(Error::BadVertex { v: w, n });
    }
    SimpleGraph::new(n + 1, f.edges().iter().copied().chain([(w, n)]))
}

/// All `C(m, k)` subsets of `E(g)` with exactly `k` edges, in lexicographic
/// order over the canonical edge list. Each subset is an edge list; pair it
/// with the full vertex set of `g` to get the corresponding edge-subgraph.
pub fn k_edge_subgraphs(
    g: &SimpleGraph,
    k: usize,
) -> Result<impl Iterator<Item = Vec<(usize, usize)>> + '_> {
    let m = g.edge_count();
    if k > m {
        return Err(Error::BadK { k, m });
    }
    Ok(g.edges().iter().copied().combinations(k))
}

/// Whether `g` contains a 4-cycle as a (not necessarily induced) subgraph:
/// some vertex pair has at least two common neighbors.
pub fn contains_c4(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            let common = neighbors[u].iter().filter(|w| neighbors[v].contains(w)).count();
            if common >= 2 {
                return true;
            }
        }
    }
    false
}

/// Whether `g` contains a triangle: some edge whose endpoints share a
/// neighbor.
pub fn contains_triangle(g: &SimpleGraph) -> bool {
    g.edges().iter().any(|&(u, v)| {
        let nu = g.neighbors(u);
        g.neighbors(v).iter().any(|w| nu.contains(w))
    })
}

/// Resolves a builtin template name: `P<k>` (path), `S<k>` (star),
/// `C<k>` (cycle), `K<n>` (complete), or `mxP1:<k>` for `k` independent
/// edges.
pub fn builtin(name: &str) -> Result<SimpleGraph> {
    if let Some(count) = name.strip_prefix("mxP1:") {
        let k: usize = count
            .parse()
            .map_err(|_| Error::Parse(format!("bad edge count in builtin {name:?}")))?;
        if k < 1 {
            return Err(Error::BadSize("mxP1 needs at least one edge".into()));
        }
        return Ok(independent_edges(k));
    }
    let Some((family, size)) = name.split_at_checked(1) else {
        return Err(Error::Parse("empty builtin graph name".into()));
    };
    let size: usize = size
        .parse()
        .map_err(|_| Error::Parse(format!("unknown builtin graph {name:?}")))?;
    match family {
        "P" => path(size),
        "S" => star(size),
        "C" => cycle(size),
        "K" => complete(size),
        _ => Err(Error::Parse(format!("unknown builtin graph {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
        if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        (0..a.vertex_count())
            .permutations(a.vertex_count())
            .any(|perm| a.relabel(&perm).unwrap() == *b)
    }

    #[test]
    fn named_families() {
        let p1 = path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (2, 1));

        let c4 = cycle(4).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);

        assert_eq!(complete(4).unwrap().edge_count(), 6);
        let s3 = star(3).unwrap();
        assert_eq!(s3.edges(), &[(0, 1), (0, 2), (0, 3)]);

        assert!(isomorphic(&path(2).unwrap(), &star(2).unwrap()));
        assert!(!isomorphic(&path(3).unwrap(), &star(3).unwrap()));
    }

    #[test]
    fn size_preconditions() {
        assert!(matches!(star(0), Err(Error::BadSize(_))));
        assert!(matches!(path(0), Err(Error::BadSize(_))));
        assert!(matches!(cycle(2), Err(Error::BadSize(_))));
        assert!(matches!(complete(0), Err(Error::BadSize(_))));
    }

    #[test]
    fn union_shifts_labels() {
        let two_edges = disjoint_union(&path(1).unwrap(), &path(1).unwrap());
        assert_eq!(two_edges.vertex_count(), 4);
        assert_eq!(two_edges.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(two_edges, independent_edges(2));

        let f = cycle(3).unwrap();
        assert_eq!(disjoint_union(&f, &SimpleGraph::edgeless(0)), f);
    }

    #[test]
    fn pendant_extensions() {
        // attaching at an endpoint of P2 gives P3, at the center gives S3
        let p2 = path(2).unwrap();
        assert!(isomorphic(&pendant_extension(&p2, 0).unwrap(), &path(3).unwrap()));
        assert!(isomorphic(&pendant_extension(&p2, 1).unwrap(), &star(3).unwrap()));

        let single = SimpleGraph::edgeless(1);
        assert_eq!(pendant_extension(&single, 0).unwrap(), path(1).unwrap());

        assert!(matches!(
            pendant_extension(&p2, 3),
            Err(Error::BadVertex { .. })
        ));
    }

    #[test]
    fn c4_edge_pairs_split_into_adjacent_and_opposite() {
        let c4 = cycle(4).unwrap();
        let pairs: Vec<_> = k_edge_subgraphs(&c4, 2).unwrap().collect();
        assert_eq!(pairs.len(), 6);
        let share_vertex = |pair: &Vec<(usize, usize)>| {
            let (a, b) = (pair[0], pair[1]);
            a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
        };
        assert_eq!(pairs.iter().filter(|p| share_vertex(p)).count(), 4);
        assert_eq!(pairs.iter().filter(|p| !share_vertex(p)).count(), 2);
    }

    #[test]
    fn subset_extremes() {
        let g = complete(4).unwrap();
        let empty: Vec<_> = k_edge_subgraphs(&g, 0).unwrap().collect();
        assert_eq!(empty, vec![vec![]]);
        let full: Vec<_> = k_edge_subgraphs(&g, 6).unwrap().collect();
        assert_eq!(full, vec![g.edges().to_vec()]);
        assert!(matches!(k_edge_subgraphs(&g, 7), Err(Error::BadK { .. })));
    }

    #[test]
    fn subset_counts_match_binomials() {
        let graphs = [
            complete(4).unwrap(),
            cycle(5).unwrap(),
            star(7).unwrap(),
            path(8).unwrap(),
        ];
        for g in &graphs {
            let m = g.edge_count();
            for k in 0..=m {
                let count = k_edge_subgraphs(g, k).unwrap().count();
                let expected: usize = crate::scalar::binomial_big(m, k).try_into().unwrap();
                assert_eq!(count, expected, "C({m}, {k})");
            }
        }
    }

    /// Reference C4 detector: scan ordered 4-tuples of distinct vertices.
    fn contains_c4_brute(g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        (0..n).permutations(4.min(n)).any(|quad| {
            quad.len() == 4
                && g.has_edge(quad[0], quad[1])
                && g.has_edge(quad[1], quad[2])
                && g.has_edge(quad[2], quad[3])
                && g.has_edge(quad[3], quad[0])
        })
    }

    fn graph_from_bits(n: usize, bits: u32) -> SimpleGraph {
        let pairs: Vec<_> = (0..n).tuple_combinations::<(usize, usize)>().collect();
        SimpleGraph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(idx, _)| bits >> idx & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    }

    #[test]
    fn c4_detector_goldens() {
        assert!(contains_c4(&cycle(4).unwrap()));
        assert!(contains_c4(&complete(4).unwrap()));
        assert!(!contains_c4(&complete(3).unwrap()));
        assert!(!contains_c4(&star(5).unwrap()));
        assert!(!contains_c4(&cycle(5).unwrap()));
        assert!(!contains_c4(&cycle(6).unwrap().relabel(&[3, 1, 5, 0, 2, 4]).unwrap()));
    }

    #[test]
    fn c4_detector_agrees_with_brute_force() {
        // exhaustive up to 5 vertices
        for n in 0..=5usize {
            let pair_count = n * n.saturating_sub(1) / 2;
            for bits in 0..(1u32 << pair_count) {
                let g = graph_from_bits(n, bits);
                assert_eq!(contains_c4(&g), contains_c4_brute(&g), "n={n} bits={bits:b}");
            }
        }
        // seeded sample for 6 and 7 vertices
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..2000 {
            let n = if rng.random_bool(0.5) { 6 } else { 7 };
            let pair_count = n * (n - 1) / 2;
            let bits: u32 = rng.random_range(0..(1u32 << pair_count));
            let g = graph_from_bits(n, bits);
            assert_eq!(contains_c4(&g), contains_c4_brute(&g));
        }
    }

    #[test]
    fn triangle_detector() {
        assert!(contains_triangle(&complete(3).unwrap()));
        assert!(contains_triangle(&complete(5).unwrap()));
        assert!(!contains_triangle(&cycle(4).unwrap()));
        assert!(!contains_triangle(&star(4).unwrap()));
        assert!(!contains_triangle(&independent_edges(3)));
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("P3").unwrap(), path(3).unwrap());
        assert_eq!(builtin("S2").unwrap(), star(2).unwrap());
        assert_eq!(builtin("C4").unwrap(), cycle(4).unwrap());
        assert_eq!(builtin("K6").unwrap(), complete(6).unwrap());
        assert_eq!(builtin("mxP1:3").unwrap(), independent_edges(3));
        assert!(builtin("Q3").is_err());
        assert!(builtin("C2").is_err());
        assert!(builtin("mxP1:x").is_err());
        assert!(builtin("").is_err());
    }
}
