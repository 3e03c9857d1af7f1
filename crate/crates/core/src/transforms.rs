//! Structural operations: permutation-graph encoding, axis remainder,
//! contraction, edge-bundle blow-up, and explicit extremal witnesses.

use crate::error::{Error, Result};
use crate::hypergraph::OrderedGraph;
use crate::matrix::{DMatrix, DPermutation, IntervalPartition};
use crate::perm::Permutation;

/// Encodes a permutation `a_1..a_k` as the ordered matching on `[2k]`
/// with edges `{i, k + a_i}`.
pub fn permutation_graph(pi: &Permutation) -> OrderedGraph {
    let k = pi.len() as u32;
    let mut edges: Vec<(u32, u32)> = pi
        .values()
        .iter()
        .enumerate()
        .map(|(i, &a)| (i as u32 + 1, k + a))
        .collect();
    edges.sort_unstable();
    OrderedGraph::new_unchecked(2 * k, edges)
}

/// Removes the given axis (1-based), keeping an edge in the projection
/// whenever some host edge projects to it. Collisions collapse.
pub fn remainder(m: &DMatrix, axis: usize) -> Result<DMatrix> {
    let d = m.dims();
    if d < 2 {
        return Err(Error::invalid("remainder needs at least 2 axes"));
    }
    if axis == 0 || axis > d {
        return Err(Error::invalid(format!("axis {axis} out of range 1..={d}")));
    }
    let drop = axis - 1;
    let sides: Vec<u32> = m
        .sides()
        .iter()
        .enumerate()
        .filter(|&(t, _)| t != drop)
        .map(|(_, &s)| s)
        .collect();
    let mut edges: Vec<Vec<u32>> = m
        .edges()
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .filter(|&(t, _)| t != drop)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect();
    edges.sort();
    edges.dedup();
    Ok(DMatrix::new_unchecked(sides, edges))
}

/// Quotients an equal-sided matrix by one interval partition applied to
/// every axis: a block tuple is an edge of the result iff its cell meets
/// the matrix.
pub fn contract(m: &DMatrix, parts: &IntervalPartition) -> Result<DMatrix> {
    if !m.is_cube() {
        return Err(Error::invalid(format!(
            "contraction needs equal sides, got {:?}",
            m.sides()
        )));
    }
    if m.sides()[0] != parts.ground_size() {
        return Err(Error::invalid(format!(
            "partition of [{}] does not match side {}",
            parts.ground_size(),
            m.sides()[0]
        )));
    }
    let r = parts.interval_count() as u32;
    let mut edges: Vec<Vec<u32>> = m
        .edges()
        .iter()
        .map(|e| e.iter().map(|&c| parts.block_of(c)).collect())
        .collect();
    edges.sort();
    edges.dedup();
    Ok(DMatrix::new_unchecked(vec![r; m.dims()], edges))
}

/// Replaces every edge of the matching encoding of `pi` with a bundle of
/// `b = k(m-1)+1` parallel edges, wired order-preservingly: the r-th
/// initial vertex of bundle i connects to the r-th final vertex of the
/// block at position `a_i`. The result is again a permutation graph, on
/// `2(k^2(m-1)+k)` vertices, and any selection of one edge per bundle is
/// order-isomorphic to the original matching.
pub fn blow_up(pi: &Permutation, m: u32) -> OrderedGraph {
    let k = pi.len() as u32;
    let b = k * (m.saturating_sub(1)) + 1;
    let kb = k * b;
    let mut edges = Vec::with_capacity(kb as usize);
    for (i, &a) in pi.values().iter().enumerate() {
        let i = i as u32;
        for r in 1..=b {
            edges.push((i * b + r, kb + (a - 1) * b + r));
        }
    }
    edges.sort_unstable();
    OrderedGraph::new_unchecked(2 * kb, edges)
}

/// The edges of bundle i (1-based) of `blow_up(pi, m)`, in order.
pub fn blow_up_bundle(pi: &Permutation, m: u32, i: usize) -> Vec<(u32, u32)> {
    let k = pi.len() as u32;
    let b = k * (m.saturating_sub(1)) + 1;
    let kb = k * b;
    let a = pi.at(i);
    let i = i as u32 - 1;
    (1..=b)
        .map(|r| (i * b + r, kb + (a - 1) * b + r))
        .collect()
}

/// The matrix of all edges with first coordinate 1: it has n^(d-1) edges
/// and avoids every d-dimensional permutation with more than one edge,
/// because two pattern edges would need two distinct axis-1 images.
pub fn lower_bound_construction(n: u32, d: usize) -> DMatrix {
    assert!(n >= 1 && d >= 1, "need n >= 1 and d >= 1");
    let mut edges = Vec::new();
    let mut edge = vec![1u32; d];
    loop {
        edges.push(edge.clone());
        // Advance the suffix after the fixed first coordinate.
        let mut t = d;
        loop {
            if t == 1 {
                edges.sort();
                return DMatrix::new_unchecked(vec![n; d], edges);
            }
            t -= 1;
            if edge[t] < n {
                edge[t] += 1;
                break;
            }
            edge[t] = 1;
        }
    }
}

/// Turns a set partition of `[n]` into the graph of increasing paths
/// spanned by its blocks: consecutive elements of a block are joined.
pub fn partition_to_path_graph(n: u32, blocks: &[Vec<u32>]) -> Result<OrderedGraph> {
    let mut seen = vec![false; n as usize];
    for block in blocks {
        if block.is_empty() {
            return Err(Error::violation("empty block"));
        }
        for &v in block {
            if v == 0 || v > n {
                return Err(Error::violation(format!("element {v} out of range 1..={n}")));
            }
            if seen[v as usize - 1] {
                return Err(Error::violation(format!("element {v} in two blocks")));
            }
            seen[v as usize - 1] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::violation("blocks do not cover [n]"));
    }
    let mut edges = Vec::new();
    for block in blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            edges.push((pair[0], pair[1]));
        }
    }
    OrderedGraph::new(n, edges)
}

/// An explicit d-dimensional permutation of `[k^d]` that is also a
/// d-dimensional k-grid: block `(j_1..j_d)` holds the single edge whose
/// axis-t coordinate is `(j_t - 1) k^(d-1) + rank`, with the rank read off
/// the other block indices in mixed radix so that every axis is a
/// bijection.
pub fn grid_permutation(k: u32, d: usize) -> DPermutation {
    assert!(k >= 1 && d >= 1, "need k >= 1 and d >= 1");
    let side_wide = (k as u64).checked_pow(d as u32).expect("k^d overflows");
    assert!(side_wide <= 1 << 20, "k^d too large to materialize");
    let side = side_wide as u32;
    let stride = side / k;
    let mut edges = Vec::with_capacity(side as usize);
    let mut block = vec![1u32; d];
    loop {
        let mut edge = Vec::with_capacity(d);
        for t in 0..d {
            let mut rank = 0u32;
            let mut scale = 1u32;
            for s in 0..d {
                if s == t {
                    continue;
                }
                rank += (block[s] - 1) * scale;
                scale *= k;
            }
            edge.push((block[t] - 1) * stride + rank + 1);
        }
        edges.push(edge);
        let mut t = d;
        loop {
            if t == 0 {
                edges.sort();
                let matrix = DMatrix::new_unchecked(vec![side; d], edges);
                return DPermutation::new_unchecked(matrix);
            }
            t -= 1;
            if block[t] < k {
                block[t] += 1;
                break;
            }
            block[t] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::{contains_graph, contains_matrix, find_grid};
    use crate::matrix::enumerate_d_permutations;

    fn dm(sides: &[u32], edges: &[&[u32]]) -> DMatrix {
        DMatrix::new(sides.to_vec(), edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn permutation_graph_small() {
        let g1 = permutation_graph(&Permutation::parse("1").unwrap());
        assert_eq!(g1.vertex_count(), 2);
        assert_eq!(g1.edges(), &[(1, 2)]);

        let g12 = permutation_graph(&Permutation::parse("12").unwrap());
        assert_eq!(g12.edges(), &[(1, 3), (2, 4)]);

        let g21 = permutation_graph(&Permutation::parse("21").unwrap());
        assert_eq!(g21.edges(), &[(1, 4), (2, 3)]);
    }

    #[test]
    fn remainder_definition() {
        let m = dm(&[2, 2, 3], &[&[1, 2, 3], &[2, 1, 3]]);
        let r = remainder(&m, 3).unwrap();
        assert_eq!(r.sides(), &[2, 2]);
        assert_eq!(r.edges(), &[vec![1, 2], vec![2, 1]]);

        let m2 = dm(&[1, 2, 1], &[&[1, 1, 1], &[1, 2, 1]]);
        let collapsed = remainder(&m2, 2).unwrap();
        assert_eq!(collapsed.edges(), &[vec![1, 1]]);
    }

    #[test]
    fn remainder_of_permutation_is_permutation() {
        for (k, d) in [(2u32, 2usize), (3, 2), (2, 3), (3, 3)] {
            for p in enumerate_d_permutations(k, d, None).unwrap() {
                for axis in 1..=d {
                    let r = remainder(p.matrix(), axis).unwrap();
                    let rp = DPermutation::new(r).unwrap();
                    assert_eq!(rp.order(), k);
                }
            }
        }
    }

    #[test]
    fn contract_examples() {
        let parts = IntervalPartition::new(4, vec![2, 4]).unwrap();
        let m = dm(&[4, 4], &[&[1, 3], &[2, 4]]);
        let n = contract(&m, &parts).unwrap();
        assert_eq!(n.sides(), &[2, 2]);
        assert_eq!(n.edges(), &[vec![1, 2]]);

        let singles = IntervalPartition::singletons(4).unwrap();
        assert_eq!(contract(&m, &singles).unwrap(), m);
    }

    #[test]
    fn contract_composes() {
        let m = dm(&[6, 6], &[&[1, 4], &[3, 2], &[5, 6], &[6, 1]]);
        let fine = IntervalPartition::new(6, vec![1, 3, 4, 6]).unwrap();
        let coarse = IntervalPartition::new(4, vec![2, 4]).unwrap();
        let two_step = contract(&contract(&m, &fine).unwrap(), &coarse).unwrap();
        let one_step = contract(&m, &fine.compose(&coarse).unwrap()).unwrap();
        assert_eq!(two_step, one_step);
    }

    #[test]
    fn blow_up_identity_at_m1() {
        let pi = Permutation::parse("12").unwrap();
        assert_eq!(blow_up(&pi, 1), permutation_graph(&pi));
    }

    #[test]
    fn blow_up_is_permutation_graph() {
        for (text, m) in [("12", 2u32), ("21", 2), ("231", 3)] {
            let pi = Permutation::parse(text).unwrap();
            let k = pi.len() as u32;
            let b = k * (m - 1) + 1;
            let g = blow_up(&pi, m);
            assert_eq!(g.vertex_count(), 2 * k * b);
            assert_eq!(g.edge_count() as u32, k * b);
            // Every vertex has degree exactly one across the bipartition.
            let mut degree = vec![0u32; g.vertex_count() as usize];
            for &(a, bb) in g.edges() {
                assert!(a <= k * b && bb > k * b);
                degree[a as usize - 1] += 1;
                degree[bb as usize - 1] += 1;
            }
            assert!(degree.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn blow_up_twelve_vertices() {
        let pi = Permutation::parse("12").unwrap();
        let g = blow_up(&pi, 2);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(blow_up_bundle(&pi, 2, 1), vec![(1, 7), (2, 8), (3, 9)]);
        assert_eq!(blow_up_bundle(&pi, 2, 2), vec![(4, 10), (5, 11), (6, 12)]);
    }

    #[test]
    fn lower_bound_sizes_and_avoidance() {
        assert_eq!(
            lower_bound_construction(3, 2).edges(),
            &[vec![1, 1], vec![1, 2], vec![1, 3]]
        );
        assert_eq!(lower_bound_construction(1, 4).len(), 1);

        let w = lower_bound_construction(2, 3);
        assert_eq!(w.len(), 4);
        for p in enumerate_d_permutations(2, 3, None).unwrap() {
            assert!(contains_matrix(p.matrix(), &w).unwrap().is_none());
        }
    }

    #[test]
    fn path_graph_examples() {
        let g = partition_to_path_graph(3, &[vec![1, 3], vec![2]]).unwrap();
        assert_eq!(g.edges(), &[(1, 3)]);

        let nest = partition_to_path_graph(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        let p21 = permutation_graph(&Permutation::parse("21").unwrap());
        assert!(contains_graph(&p21, &nest).is_some());

        let singles = partition_to_path_graph(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(singles.edge_count(), 0);

        assert!(partition_to_path_graph(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(partition_to_path_graph(3, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn grid_permutation_validates() {
        let p = grid_permutation(2, 2);
        assert!(p.validate().is_ok());
        assert_eq!(p.order(), 4);
        assert_eq!(
            p.matrix().edges(),
            &[vec![1, 1], vec![2, 3], vec![3, 2], vec![4, 4]]
        );
        let parts = find_grid(p.matrix(), 2).unwrap().unwrap();
        assert_eq!(parts[0].boundaries(), &[2, 4]);

        let p3 = grid_permutation(2, 3);
        assert!(p3.validate().is_ok());
        assert!(find_grid(p3.matrix(), 2).unwrap().is_some());
    }
}
