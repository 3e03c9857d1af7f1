//! Ordered hypergraphs and ordered graphs on a fixed vertex set `[n]`.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered hypergraph: vertex set `[n]` and a multiset of nonempty
/// vertex subsets. Repeated subsets are distinct edges (multiplicity);
/// edge indices carry no identity beyond that.
///
/// Canonical form keeps each edge sorted ascending and the edge list
/// sorted lexicographically (equal edges adjacent).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedHypergraph {
    vertex_count: u32,
    edges: Vec<Vec<u32>>,
}

impl OrderedHypergraph {
    /// Builds a hypergraph, sorting edges into canonical form. Each edge
    /// must be a nonempty duplicate-free subset of `[n]`.
    pub fn new(vertex_count: u32, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        for edge in &mut edges {
            edge.sort_unstable();
        }
        edges.sort();
        let h = OrderedHypergraph {
            vertex_count,
            edges,
        };
        h.validate()?;
        Ok(h)
    }

    pub fn new_unchecked(vertex_count: u32, edges: Vec<Vec<u32>>) -> Self {
        OrderedHypergraph {
            vertex_count,
            edges,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for edge in &self.edges {
            if edge.is_empty() {
                return Err(Error::violation("empty edge"));
            }
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::violation(format!(
                        "duplicate vertex {} in edge",
                        pair[0]
                    )));
                }
                if pair[0] > pair[1] {
                    return Err(Error::violation("edge vertices not sorted"));
                }
            }
            for &v in edge {
                if v == 0 || v > self.vertex_count {
                    return Err(Error::violation(format!(
                        "vertex {} out of range 1..={}",
                        v, self.vertex_count
                    )));
                }
            }
        }
        for pair in self.edges.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::violation("edges not in lexicographic order"));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// True iff no subset occurs more than once.
    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Sorted list of vertices that occur in at least one edge.
    pub fn used_vertices(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.edges.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The order v(H): number of distinct vertices used by edges.
    pub fn order(&self) -> u32 {
        self.used_vertices().len() as u32
    }

    /// The size e(H): number of edges counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.edges.len() as u32
    }

    /// The weight i(H): total number of vertex-edge incidences.
    pub fn weight(&self) -> u32 {
        self.edges.iter().map(|e| e.len() as u32).sum()
    }

    /// True when every vertex of `[n]` appears in some edge (the covering
    /// canonical form used when counting on a fixed vertex set).
    pub fn is_covering(&self) -> bool {
        self.order() == self.vertex_count
    }
}

impl fmt::Display for OrderedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::hypergraph_to_text(self))
    }
}

/// An ordered graph on `[n]`: a set of 2-element subsets. Isolated
/// vertices are permitted; the vertex set is part of the structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

impl OrderedGraph {
    pub fn new(vertex_count: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let g = OrderedGraph {
            vertex_count,
            edges,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn new_unchecked(vertex_count: u32, edges: Vec<(u32, u32)>) -> Self {
        OrderedGraph {
            vertex_count,
            edges,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for &(a, b) in &self.edges {
            if a == b {
                return Err(Error::violation(format!("loop at vertex {a}")));
            }
            if a == 0 || b > self.vertex_count {
                return Err(Error::violation(format!(
                    "edge ({a},{b}) out of range 1..={}",
                    self.vertex_count
                )));
            }
        }
        for pair in self.edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::violation(format!(
                    "duplicate edge {{{},{}}}",
                    pair[0].0, pair[0].1
                )));
            }
            if pair[0] > pair[1] {
                return Err(Error::violation("edges not in lexicographic order"));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    /// The same structure as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> OrderedHypergraph {
        let edges = self.edges.iter().map(|&(a, b)| vec![a, b]).collect();
        OrderedHypergraph::new_unchecked(self.vertex_count, edges)
    }
}

impl fmt::Display for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::graph_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_quantities() {
        // v, e, i on a multiset with a repeated edge.
        let h =
            OrderedHypergraph::new(3, vec![vec![1, 3], vec![2], vec![1, 3]]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 3);
        assert_eq!(h.weight(), 5);
        assert!(!h.is_simple());
        assert!(h.is_covering());
    }

    #[test]
    fn hypergraph_rejects_bad_edges() {
        assert!(OrderedHypergraph::new(3, vec![vec![]]).is_err());
        assert!(OrderedHypergraph::new(3, vec![vec![4]]).is_err());
        assert!(OrderedHypergraph::new(3, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn non_covering_detected() {
        let h = OrderedHypergraph::new(3, vec![vec![1, 3]]).unwrap();
        assert!(!h.is_covering());
        assert_eq!(h.order(), 2);
    }

    #[test]
    fn graph_canonicalizes_and_rejects() {
        let g = OrderedGraph::new(4, vec![(3, 1), (2, 4)]).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 4)]);
        assert!(g.has_edge(4, 2));
        assert!(OrderedGraph::new(4, vec![(1, 1)]).is_err());
        assert!(OrderedGraph::new(4, vec![(1, 5)]).is_err());
        assert!(OrderedGraph::new(4, vec![(1, 2), (2, 1)]).is_err());
    }
}
