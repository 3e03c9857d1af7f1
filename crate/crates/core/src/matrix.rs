//! d-dimensional 0-1 matrices, d-dimensional permutations, and interval
//! partitions.
//!
//! A matrix is stored sparsely as a sorted set of 1-based coordinate tuples
//! ("edges"). Sorted order is the canonical form relied on by serialization
//! and by deterministic search.

use std::fmt;

use crate::error::{Error, Result};

/// A d-dimensional 0-1 matrix: side lengths `n_1..n_d` plus a sorted set of
/// d-tuples with `1 <= e_t <= n_t`.
///
/// A side length of 0 is permitted and forces the edge set to be empty; it
/// only arises from degenerate solver queries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DMatrix {
    sides: Vec<u32>,
    edges: Vec<Vec<u32>>,
}

impl DMatrix {
    /// Builds a matrix, sorting the edges into canonical order.
    /// Rejects out-of-range coordinates, arity mismatches, and duplicates.
    pub fn new(sides: Vec<u32>, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        if sides.is_empty() {
            return Err(Error::violation("matrix must have at least one axis"));
        }
        edges.sort();
        let m = DMatrix { sides, edges };
        m.validate()?;
        Ok(m)
    }

    /// Builds a matrix without checking invariants. The caller guarantees
    /// that `edges` is sorted, duplicate-free, and in range.
    pub fn new_unchecked(sides: Vec<u32>, edges: Vec<Vec<u32>>) -> Self {
        DMatrix { sides, edges }
    }

    /// An empty matrix with the given equal sides.
    pub fn empty(side: u32, dims: usize) -> Self {
        DMatrix {
            sides: vec![side; dims],
            edges: Vec::new(),
        }
    }

    /// Re-checks every invariant, returning the first violation.
    pub fn validate(&self) -> Result<()> {
        if self.sides.is_empty() {
            return Err(Error::violation("matrix must have at least one axis"));
        }
        let d = self.sides.len();
        for edge in &self.edges {
            if edge.len() != d {
                return Err(Error::violation(format!(
                    "edge {:?} has {} coordinates, expected {}",
                    edge,
                    edge.len(),
                    d
                )));
            }
            for (t, (&c, &side)) in edge.iter().zip(&self.sides).enumerate() {
                if c == 0 || c > side {
                    return Err(Error::violation(format!(
                        "coordinate out of range: axis {} value {} not in 1..={}",
                        t + 1,
                        c,
                        side
                    )));
                }
            }
        }
        for pair in self.edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::violation(format!("duplicate edge {:?}", pair[0])));
            }
            if pair[0] > pair[1] {
                return Err(Error::violation("edges not in lexicographic order"));
            }
        }
        Ok(())
    }

    /// Number of axes d.
    pub fn dims(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[u32] {
        &self.sides
    }

    /// True when all sides are equal (the shape required by grids and
    /// contraction).
    pub fn is_cube(&self) -> bool {
        self.sides.windows(2).all(|w| w[0] == w[1])
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// The size |M|: number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, edge: &[u32]) -> bool {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).is_ok()
    }
}

impl fmt::Display for DMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::matrix_to_text(self))
    }
}

/// A d-dimensional permutation of `[k]`: a k^d-cube matrix in which every
/// axis value is hit by exactly one edge. Generalizes permutation matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPermutation {
    matrix: DMatrix,
}

impl DPermutation {
    /// Validates the one-edge-per-hyperplane invariant and wraps the matrix.
    pub fn new(matrix: DMatrix) -> Result<Self> {
        let d = matrix.dims();
        let k = matrix.sides()[0];
        if k == 0 {
            return Err(Error::violation("permutation order must be positive"));
        }
        if !matrix.is_cube() {
            return Err(Error::violation(format!(
                "permutation sides must all equal {k}, got {:?}",
                matrix.sides()
            )));
        }
        if matrix.len() != k as usize {
            return Err(Error::violation(format!(
                "permutation of [{k}] must have exactly {k} edges, got {}",
                matrix.len()
            )));
        }
        for t in 0..d {
            let mut used = vec![false; k as usize];
            for edge in matrix.edges() {
                let v = edge[t] as usize - 1;
                if used[v] {
                    return Err(Error::violation(format!(
                        "axis {} value {} used twice",
                        t + 1,
                        edge[t]
                    )));
                }
                used[v] = true;
            }
        }
        Ok(DPermutation { matrix })
    }

    pub fn new_unchecked(matrix: DMatrix) -> Self {
        DPermutation { matrix }
    }

    /// The order k.
    pub fn order(&self) -> u32 {
        self.matrix.sides()[0]
    }

    pub fn dims(&self) -> usize {
        self.matrix.dims()
    }

    pub fn matrix(&self) -> &DMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix {
        self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        self.matrix.validate()?;
        DPermutation::new(self.matrix.clone()).map(|_| ())
    }
}

impl TryFrom<DMatrix> for DPermutation {
    type Error = Error;

    fn try_from(matrix: DMatrix) -> Result<Self> {
        DPermutation::new(matrix)
    }
}

/// Enumerates every d-dimensional permutation of `[k]` in lexicographic
/// order of edge lists. There are exactly `(k!)^(d-1)` of them; the call
/// fails if that exceeds `cap` (default 1_000_000).
pub fn enumerate_d_permutations(k: u32, d: usize, cap: Option<u64>) -> Result<Vec<DPermutation>> {
    if k == 0 || d == 0 {
        return Err(Error::invalid("k and d must be at least 1"));
    }
    let cap = cap.unwrap_or(1_000_000);
    let total = checked_count(k, d)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::cap(format!("(k!)^(d-1) exceeds cap {cap} at k={k}, d={d}")))?;

    let kk = k as usize;
    let mut out = Vec::with_capacity(total as usize);
    // Edge j (sorted by axis-1 coordinate) is (j, c_2(j), .., c_d(j)).
    // Choosing the column vectors (c_2(j),..,c_d(j)) for j = 1..k in
    // ascending lexicographic order yields the edge lists in lexicographic
    // order directly.
    let mut used = vec![vec![false; kk]; d - 1];
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(kk);
    fill_columns(k, d, &mut used, &mut cols, &mut out);
    debug_assert_eq!(out.len() as u64, total);
    Ok(out)
}

fn checked_count(k: u32, d: usize) -> Option<u64> {
    let mut fact: u64 = 1;
    for i in 2..=k as u64 {
        fact = fact.checked_mul(i)?;
    }
    let mut total: u64 = 1;
    for _ in 1..d {
        total = total.checked_mul(fact)?;
    }
    Some(total)
}

fn fill_columns(
    k: u32,
    d: usize,
    used: &mut [Vec<bool>],
    cols: &mut Vec<Vec<u32>>,
    out: &mut Vec<DPermutation>,
) {
    if cols.len() == k as usize {
        let edges: Vec<Vec<u32>> = cols
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut edge = Vec::with_capacity(d);
                edge.push(j as u32 + 1);
                edge.extend_from_slice(col);
                edge
            })
            .collect();
        let matrix = DMatrix::new_unchecked(vec![k; d], edges);
        out.push(DPermutation::new_unchecked(matrix));
        return;
    }
    let mut col = vec![0u32; d - 1];
    fill_column_axis(k, d, 0, used, &mut col, cols, out);
}

fn fill_column_axis(
    k: u32,
    d: usize,
    axis: usize,
    used: &mut [Vec<bool>],
    col: &mut Vec<u32>,
    cols: &mut Vec<Vec<u32>>,
    out: &mut Vec<DPermutation>,
) {
    if axis == d - 1 {
        cols.push(col.clone());
        fill_columns(k, d, used, cols, out);
        cols.pop();
        return;
    }
    for v in 1..=k {
        if used[axis][v as usize - 1] {
            continue;
        }
        used[axis][v as usize - 1] = true;
        col[axis] = v;
        fill_column_axis(k, d, axis + 1, used, col, cols, out);
        used[axis][v as usize - 1] = false;
    }
}

/// A partition of `[n]` into consecutive nonempty intervals, stored as the
/// increasing list of right endpoints (the last endpoint is n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPartition {
    n: u32,
    boundaries: Vec<u32>,
}

impl IntervalPartition {
    pub fn new(n: u32, boundaries: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::violation("interval partition needs n >= 1"));
        }
        if boundaries.is_empty() {
            return Err(Error::violation("interval partition needs at least one interval"));
        }
        let mut prev = 0u32;
        for &b in &boundaries {
            if b <= prev {
                return Err(Error::violation(format!(
                    "boundary {b} does not increase past {prev}"
                )));
            }
            prev = b;
        }
        if prev != n {
            return Err(Error::violation(format!(
                "last boundary {prev} must equal n={n}"
            )));
        }
        Ok(IntervalPartition { n, boundaries })
    }

    /// The partition of `[n]` into n singleton intervals.
    pub fn singletons(n: u32) -> Result<Self> {
        IntervalPartition::new(n, (1..=n).collect())
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    /// Number of intervals r.
    pub fn interval_count(&self) -> usize {
        self.boundaries.len()
    }

    /// Right endpoints of the intervals, ending in n.
    pub fn boundaries(&self) -> &[u32] {
        &self.boundaries
    }

    /// The interval `(lo, hi)` (inclusive, 1-based) with index `i` (1-based).
    pub fn interval(&self, i: usize) -> (u32, u32) {
        let hi = self.boundaries[i - 1];
        let lo = if i == 1 { 1 } else { self.boundaries[i - 2] + 1 };
        (lo, hi)
    }

    /// Index (1-based) of the interval containing `x`.
    pub fn block_of(&self, x: u32) -> u32 {
        debug_assert!(x >= 1 && x <= self.n);
        (self.boundaries.partition_point(|&b| b < x) + 1) as u32
    }

    /// Composes with a coarsening of the quotient: `coarser` partitions
    /// `[r]` where r is this partition's interval count. The result
    /// partitions `[n]` into `coarser.interval_count()` intervals.
    pub fn compose(&self, coarser: &IntervalPartition) -> Result<IntervalPartition> {
        if coarser.ground_size() as usize != self.interval_count() {
            return Err(Error::invalid(format!(
                "coarsening partitions [{}], expected [{}]",
                coarser.ground_size(),
                self.interval_count()
            )));
        }
        let boundaries = coarser
            .boundaries()
            .iter()
            .map(|&b| self.boundaries[b as usize - 1])
            .collect();
        IntervalPartition::new(self.n, boundaries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formed_identity() {
        let m = DMatrix::new(vec![2, 2], vec![vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.validate().is_ok());
    }

    #[test]
    fn coordinate_out_of_range() {
        let err = DMatrix::new(vec![2, 2], vec![vec![3, 1]]).unwrap_err();
        assert!(err.to_string().contains("coordinate out of range"));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = DMatrix::new(vec![2, 2], vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("duplicate edge"));
    }

    #[test]
    fn edges_canonicalized() {
        let m = DMatrix::new(vec![2, 2], vec![vec![2, 2], vec![1, 1]]).unwrap();
        assert_eq!(m.edges(), &[vec![1, 1], vec![2, 2]]);
    }

    #[test]
    fn axis_value_used_twice() {
        let m = DMatrix::new(vec![2, 2], vec![vec![1, 1], vec![1, 2]]).unwrap();
        let err = DPermutation::new(m).unwrap_err();
        assert_eq!(err.to_string(), "axis 1 value 1 used twice");
    }

    #[test]
    fn permutation_edge_count() {
        for (k, d) in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
            for p in enumerate_d_permutations(k, d, None).unwrap() {
                assert_eq!(p.matrix().len(), k as usize);
                assert!(p.validate().is_ok());
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_d_permutations(2, 2, None).unwrap().len(), 2);
        assert_eq!(enumerate_d_permutations(1, 3, None).unwrap().len(), 1);
        assert_eq!(enumerate_d_permutations(3, 3, None).unwrap().len(), 36);
        assert_eq!(
            enumerate_d_permutations(1, 3, None).unwrap()[0].matrix().edges(),
            &[vec![1, 1, 1]]
        );
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let perms = enumerate_d_permutations(3, 2, None).unwrap();
        for w in perms.windows(2) {
            assert!(w[0].matrix().edges() < w[1].matrix().edges());
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_d_permutations(10, 4, Some(100)),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn interval_partition_basics() {
        let p = IntervalPartition::new(6, vec![2, 4, 6]).unwrap();
        assert_eq!(p.interval_count(), 3);
        assert_eq!(p.interval(1), (1, 2));
        assert_eq!(p.interval(3), (5, 6));
        assert_eq!(p.block_of(1), 1);
        assert_eq!(p.block_of(4), 2);
        assert_eq!(p.block_of(5), 3);
        assert!(IntervalPartition::new(6, vec![2, 4]).is_err());
        assert!(IntervalPartition::new(6, vec![2, 2, 6]).is_err());
    }

    #[test]
    fn interval_partition_compose() {
        let fine = IntervalPartition::new(6, vec![1, 3, 4, 6]).unwrap();
        let coarse = IntervalPartition::new(4, vec![2, 4]).unwrap();
        let composed = fine.compose(&coarse).unwrap();
        assert_eq!(composed.boundaries(), &[3, 6]);
    }
}
