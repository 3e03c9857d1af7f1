//! Decision procedures for the three containment relations, plus grid
//! detection.
//!
//! All matchers are depth-first backtracking searches over pattern edges,
//! maintaining per-axis partial monotone maps with forward pruning on the
//! number of host values left per axis. Witnesses are lexicographically
//! least by concatenated injection value lists, obtained by pinning values
//! position by position and re-running the existence search.

use crate::error::{Error, Result};
use crate::hypergraph::{OrderedGraph, OrderedHypergraph};
use crate::matrix::{DMatrix, IntervalPartition};

/// An embedding of a pattern matrix into a host matrix: one full increasing
/// injection per axis, given as value lists (`maps[t][x-1]` is the image of
/// coordinate x on axis t+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixEmbedding {
    pub maps: Vec<Vec<u32>>,
}

impl MatrixEmbedding {
    /// Checks that this is a valid embedding witnessing `pattern ≺ host`.
    pub fn check(&self, pattern: &DMatrix, host: &DMatrix) -> bool {
        if self.maps.len() != pattern.dims() || pattern.dims() != host.dims() {
            return false;
        }
        for (t, map) in self.maps.iter().enumerate() {
            if map.len() != pattern.sides()[t] as usize {
                return false;
            }
            let mut prev = 0u32;
            for &v in map {
                if v <= prev || v > host.sides()[t] {
                    return false;
                }
                prev = v;
            }
        }
        pattern.edges().iter().all(|e| {
            let image: Vec<u32> = e
                .iter()
                .enumerate()
                .map(|(t, &x)| self.maps[t][x as usize - 1])
                .collect();
            host.contains_edge(&image)
        })
    }

    /// Composes `self: A -> B` with `outer: B -> C` into an embedding
    /// `A -> C`.
    pub fn compose(&self, outer: &MatrixEmbedding) -> MatrixEmbedding {
        let maps = self
            .maps
            .iter()
            .zip(&outer.maps)
            .map(|(inner, out)| inner.iter().map(|&v| out[v as usize - 1]).collect())
            .collect();
        MatrixEmbedding { maps }
    }
}

/// An embedding of a pattern graph into a host graph: one full increasing
/// vertex injection (`vertex_map[v-1]` is the image of vertex v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEmbedding {
    pub vertex_map: Vec<u32>,
}

impl GraphEmbedding {
    pub fn check(&self, pattern: &OrderedGraph, host: &OrderedGraph) -> bool {
        if self.vertex_map.len() != pattern.vertex_count() as usize {
            return false;
        }
        let mut prev = 0u32;
        for &v in &self.vertex_map {
            if v <= prev || v > host.vertex_count() {
                return false;
            }
            prev = v;
        }
        pattern.edges().iter().all(|&(a, b)| {
            host.has_edge(
                self.vertex_map[a as usize - 1],
                self.vertex_map[b as usize - 1],
            )
        })
    }

    pub fn compose(&self, outer: &GraphEmbedding) -> GraphEmbedding {
        GraphEmbedding {
            vertex_map: self
                .vertex_map
                .iter()
                .map(|&v| outer.vertex_map[v as usize - 1])
                .collect(),
        }
    }
}

/// An embedding of a pattern hypergraph into a host hypergraph: an
/// increasing injection on the pattern's used vertices (as sorted
/// (vertex, image) pairs) plus an injection from pattern edge indices to
/// host edge indices (0-based positions in the canonical edge lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphEmbedding {
    pub vertex_map: Vec<(u32, u32)>,
    pub edge_map: Vec<usize>,
}

impl HypergraphEmbedding {
    fn image_of(&self, v: u32) -> Option<u32> {
        self.vertex_map
            .binary_search_by_key(&v, |&(a, _)| a)
            .ok()
            .map(|i| self.vertex_map[i].1)
    }

    pub fn check(&self, pattern: &OrderedHypergraph, host: &OrderedHypergraph) -> bool {
        let used = pattern.used_vertices();
        if self.vertex_map.len() != used.len() {
            return false;
        }
        let mut prev_dom = 0u32;
        let mut prev_img = 0u32;
        for (&(v, fv), &u) in self.vertex_map.iter().zip(&used) {
            if v != u || (prev_dom > 0 && v <= prev_dom) || (prev_img > 0 && fv <= prev_img) {
                return false;
            }
            prev_dom = v;
            prev_img = fv;
        }
        if self.edge_map.len() != pattern.edges().len() {
            return false;
        }
        let mut seen = vec![false; host.edges().len()];
        for (pe, &he) in pattern.edges().iter().zip(&self.edge_map) {
            if he >= host.edges().len() || seen[he] {
                return false;
            }
            seen[he] = true;
            let target = &host.edges()[he];
            for &v in pe {
                match self.image_of(v) {
                    Some(fv) if target.binary_search(&fv).is_ok() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn compose(&self, outer: &HypergraphEmbedding) -> HypergraphEmbedding {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|&(v, fv)| (v, outer.image_of(fv).expect("composable embeddings")))
            .collect();
        let edge_map = self.edge_map.iter().map(|&i| outer.edge_map[i]).collect();
        HypergraphEmbedding {
            vertex_map,
            edge_map,
        }
    }
}

/// A witness for any of the three containment relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    Matrix(MatrixEmbedding),
    Graph(GraphEmbedding),
    Hypergraph(HypergraphEmbedding),
}

// ---------------------------------------------------------------------------
// Per-axis partial monotone maps.
//
// An assignment x -> v is accepted only if it keeps the partial map
// extendable to a full increasing injection [k] -> [n]: neighbouring gaps
// must leave room for the unassigned coordinates between and outside them.

#[derive(Debug, Clone)]
struct AxisMap {
    k: u32,
    n: u32,
    vals: Vec<Option<u32>>,
}

enum Assign {
    Matched,
    Inserted,
    Rejected,
}

impl AxisMap {
    fn new(k: u32, n: u32) -> AxisMap {
        AxisMap {
            k,
            n,
            vals: vec![None; k as usize],
        }
    }

    fn try_assign(&mut self, x: u32, v: u32) -> Assign {
        debug_assert!(x >= 1 && x <= self.k);
        if let Some(w) = self.vals[x as usize - 1] {
            return if w == v { Assign::Matched } else { Assign::Rejected };
        }
        if v < x || self.n - v < self.k - x {
            return Assign::Rejected;
        }
        for xp in (1..x).rev() {
            if let Some(vp) = self.vals[xp as usize - 1] {
                if v <= vp || v - vp < x - xp {
                    return Assign::Rejected;
                }
                break;
            }
        }
        for xs in x + 1..=self.k {
            if let Some(vs) = self.vals[xs as usize - 1] {
                if vs <= v || vs - v < xs - x {
                    return Assign::Rejected;
                }
                break;
            }
        }
        self.vals[x as usize - 1] = Some(v);
        Assign::Inserted
    }

    fn unassign(&mut self, x: u32) {
        self.vals[x as usize - 1] = None;
    }
}

// ---------------------------------------------------------------------------
// Matrix matcher.

struct MatrixMatcher<'a> {
    pattern: &'a [Vec<u32>],
    host: &'a [Vec<u32>],
    axes: Vec<AxisMap>,
}

impl<'a> MatrixMatcher<'a> {
    fn new(
        pattern: &'a [Vec<u32>],
        p_sides: &[u32],
        host: &'a [Vec<u32>],
        h_sides: &[u32],
    ) -> Option<MatrixMatcher<'a>> {
        if p_sides.iter().zip(h_sides).any(|(&k, &n)| k > n) {
            return None;
        }
        let axes = p_sides
            .iter()
            .zip(h_sides)
            .map(|(&k, &n)| AxisMap::new(k, n))
            .collect();
        Some(MatrixMatcher {
            pattern,
            host,
            axes,
        })
    }

    /// Maps pattern edge `pe` onto host edge `he`; on success returns the
    /// axes whose assignment is new and must be undone by the caller.
    fn try_map(&mut self, pe: &[u32], he: &[u32]) -> Option<Vec<usize>> {
        let mut inserted = Vec::new();
        for (t, (&x, &v)) in pe.iter().zip(he).enumerate() {
            match self.axes[t].try_assign(x, v) {
                Assign::Matched => {}
                Assign::Inserted => inserted.push(t),
                Assign::Rejected => {
                    for &u in &inserted {
                        self.axes[u].unassign(pe[u]);
                    }
                    return None;
                }
            }
        }
        Some(inserted)
    }

    fn dfs(&mut self, idx: usize, skip: Option<usize>) -> bool {
        let idx = if Some(idx) == skip { idx + 1 } else { idx };
        if idx >= self.pattern.len() {
            return true;
        }
        let pe = &self.pattern[idx];
        for hi in 0..self.host.len() {
            let he = &self.host[hi];
            if let Some(inserted) = self.try_map(pe, he) {
                if self.dfs(idx + 1, skip) {
                    return true;
                }
                for &t in &inserted {
                    self.axes[t].unassign(pe[t]);
                }
            }
        }
        false
    }

    fn seed_pins(&mut self, pins: &[Vec<Option<u32>>]) -> bool {
        for (t, axis_pins) in pins.iter().enumerate() {
            for (i, pin) in axis_pins.iter().enumerate() {
                if let Some(v) = pin {
                    match self.axes[t].try_assign(i as u32 + 1, *v) {
                        Assign::Rejected => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

fn matrix_exists(
    p_edges: &[Vec<u32>],
    p_sides: &[u32],
    h_edges: &[Vec<u32>],
    h_sides: &[u32],
    pins: Option<&[Vec<Option<u32>>]>,
    forced: Option<&[u32]>,
) -> bool {
    let Some(mut m) = MatrixMatcher::new(p_edges, p_sides, h_edges, h_sides) else {
        return false;
    };
    if p_edges.len() > h_edges.len() {
        return false;
    }
    if let Some(pins) = pins {
        if !m.seed_pins(pins) {
            return false;
        }
    }
    match forced {
        None => m.dfs(0, None),
        Some(edge) => {
            // Some pattern edge must land on the given host edge.
            for p in 0..p_edges.len() {
                let pe = p_edges[p].clone();
                if let Some(inserted) = m.try_map(&pe, edge) {
                    if m.dfs(0, Some(p)) {
                        return true;
                    }
                    for &t in &inserted {
                        m.axes[t].unassign(pe[t]);
                    }
                }
            }
            false
        }
    }
}

pub(crate) fn matrix_embeds(pattern: &DMatrix, h_sides: &[u32], h_edges: &[Vec<u32>]) -> bool {
    matrix_exists(pattern.edges(), pattern.sides(), h_edges, h_sides, None, None)
}

/// Existence restricted to embeddings that use `forced` as the image of
/// some pattern edge. Sound for incremental avoidance checks: when the
/// host minus `forced` is known to avoid the pattern, any embedding into
/// the extended host must use it.
pub(crate) fn matrix_embeds_using(
    pattern: &DMatrix,
    h_sides: &[u32],
    h_edges: &[Vec<u32>],
    forced: &[u32],
) -> bool {
    matrix_exists(
        pattern.edges(),
        pattern.sides(),
        h_edges,
        h_sides,
        None,
        Some(forced),
    )
}

/// Decides `pattern ≺ host` for d-dimensional matrices and returns the
/// lexicographically least embedding when one exists.
pub fn contains_matrix(pattern: &DMatrix, host: &DMatrix) -> Result<Option<MatrixEmbedding>> {
    if pattern.dims() != host.dims() {
        return Err(Error::DimensionMismatch {
            pattern: pattern.dims(),
            host: host.dims(),
        });
    }
    if !matrix_embeds(pattern, host.sides(), host.edges()) {
        return Ok(None);
    }
    let d = pattern.dims();
    let mut pins: Vec<Vec<Option<u32>>> = pattern
        .sides()
        .iter()
        .map(|&k| vec![None; k as usize])
        .collect();
    for t in 0..d {
        let k = pattern.sides()[t];
        let n = host.sides()[t];
        for x in 1..=k {
            let lower = if x == 1 {
                1
            } else {
                pins[t][x as usize - 2].unwrap() + 1
            };
            let upper = n - (k - x);
            let mut fixed = false;
            for v in lower..=upper {
                pins[t][x as usize - 1] = Some(v);
                if matrix_exists(
                    pattern.edges(),
                    pattern.sides(),
                    host.edges(),
                    host.sides(),
                    Some(&pins),
                    None,
                ) {
                    fixed = true;
                    break;
                }
            }
            if !fixed {
                // Unreachable: existence was established above.
                return Ok(None);
            }
        }
    }
    let maps = pins
        .into_iter()
        .map(|axis| axis.into_iter().map(|v| v.unwrap()).collect())
        .collect();
    Ok(Some(MatrixEmbedding { maps }))
}

// ---------------------------------------------------------------------------
// Graph matcher: the single-axis specialization.

struct GraphMatcher<'a> {
    pattern: &'a [(u32, u32)],
    host: &'a [(u32, u32)],
    axis: AxisMap,
}

impl<'a> GraphMatcher<'a> {
    fn new(
        pattern: &'a [(u32, u32)],
        p_n: u32,
        host: &'a [(u32, u32)],
        h_n: u32,
    ) -> Option<GraphMatcher<'a>> {
        if p_n > h_n {
            return None;
        }
        Some(GraphMatcher {
            pattern,
            host,
            axis: AxisMap::new(p_n, h_n),
        })
    }

    fn try_map(&mut self, pe: (u32, u32), he: (u32, u32)) -> Option<Vec<u32>> {
        let mut inserted = Vec::new();
        for (x, v) in [(pe.0, he.0), (pe.1, he.1)] {
            match self.axis.try_assign(x, v) {
                Assign::Matched => {}
                Assign::Inserted => inserted.push(x),
                Assign::Rejected => {
                    for &u in &inserted {
                        self.axis.unassign(u);
                    }
                    return None;
                }
            }
        }
        Some(inserted)
    }

    fn dfs(&mut self, idx: usize, skip: Option<usize>) -> bool {
        let idx = if Some(idx) == skip { idx + 1 } else { idx };
        if idx >= self.pattern.len() {
            return true;
        }
        let pe = self.pattern[idx];
        for hi in 0..self.host.len() {
            let he = self.host[hi];
            if let Some(inserted) = self.try_map(pe, he) {
                if self.dfs(idx + 1, skip) {
                    return true;
                }
                for &x in &inserted {
                    self.axis.unassign(x);
                }
            }
        }
        false
    }
}

fn graph_exists(
    p_edges: &[(u32, u32)],
    p_n: u32,
    h_edges: &[(u32, u32)],
    h_n: u32,
    pins: &[Option<u32>],
    forced: Option<(u32, u32)>,
) -> bool {
    let Some(mut m) = GraphMatcher::new(p_edges, p_n, h_edges, h_n) else {
        return false;
    };
    if p_edges.len() > h_edges.len() {
        return false;
    }
    for (i, pin) in pins.iter().enumerate() {
        if let Some(v) = pin {
            if let Assign::Rejected = m.axis.try_assign(i as u32 + 1, *v) {
                return false;
            }
        }
    }
    match forced {
        None => m.dfs(0, None),
        Some(edge) => {
            for p in 0..p_edges.len() {
                let pe = p_edges[p];
                if let Some(inserted) = m.try_map(pe, edge) {
                    if m.dfs(0, Some(p)) {
                        return true;
                    }
                    for &x in &inserted {
                        m.axis.unassign(x);
                    }
                }
            }
            false
        }
    }
}

pub(crate) fn graph_embeds(pattern: &OrderedGraph, h_n: u32, h_edges: &[(u32, u32)]) -> bool {
    graph_exists(pattern.edges(), pattern.vertex_count(), h_edges, h_n, &[], None)
}

pub(crate) fn graph_embeds_using(
    pattern: &OrderedGraph,
    h_n: u32,
    h_edges: &[(u32, u32)],
    forced: (u32, u32),
) -> bool {
    graph_exists(
        pattern.edges(),
        pattern.vertex_count(),
        h_edges,
        h_n,
        &[],
        Some(forced),
    )
}

/// Decides the ordered subgraph relation and returns the lexicographically
/// least increasing vertex injection when the pattern is contained.
pub fn contains_graph(pattern: &OrderedGraph, host: &OrderedGraph) -> Option<GraphEmbedding> {
    if !graph_embeds(pattern, host.vertex_count(), host.edges()) {
        return None;
    }
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    let mut pins: Vec<Option<u32>> = vec![None; k as usize];
    for x in 1..=k {
        let lower = if x == 1 {
            1
        } else {
            pins[x as usize - 2].unwrap() + 1
        };
        let upper = n - (k - x);
        let mut fixed = false;
        for v in lower..=upper {
            pins[x as usize - 1] = Some(v);
            if graph_exists(
                pattern.edges(),
                k,
                host.edges(),
                n,
                &pins,
                None,
            ) {
                fixed = true;
                break;
            }
        }
        if !fixed {
            return None;
        }
    }
    Some(GraphEmbedding {
        vertex_map: pins.into_iter().map(|v| v.unwrap()).collect(),
    })
}

// ---------------------------------------------------------------------------
// Hypergraph matcher.

struct HgMatcher<'a> {
    p_edges: &'a [Vec<u32>],
    h_edges: &'a [Vec<u32>],
    pverts: Vec<u32>,
    f: Vec<Option<u32>>,
    used_host: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> HgMatcher<'a> {
    fn new(p_edges: &'a [Vec<u32>], h_edges: &'a [Vec<u32>]) -> HgMatcher<'a> {
        let mut pverts: Vec<u32> = p_edges.iter().flatten().copied().collect();
        pverts.sort_unstable();
        pverts.dedup();
        // Large edges are most constrained; try them first.
        let mut order: Vec<usize> = (0..p_edges.len()).collect();
        order.sort_by(|&a, &b| {
            p_edges[b]
                .len()
                .cmp(&p_edges[a].len())
                .then_with(|| p_edges[a].cmp(&p_edges[b]))
        });
        let f = vec![None; pverts.len()];
        HgMatcher {
            p_edges,
            h_edges,
            pverts,
            f,
            used_host: vec![false; h_edges.len()],
            order,
        }
    }

    fn rank_of(&self, v: u32) -> usize {
        self.pverts.binary_search(&v).expect("pattern vertex")
    }

    fn bounds(&self, rank: usize) -> (u32, u32) {
        let mut lo = 0u32;
        for r in (0..rank).rev() {
            if let Some(v) = self.f[r] {
                lo = v;
                break;
            }
        }
        let mut hi = u32::MAX;
        for r in rank + 1..self.f.len() {
            if let Some(v) = self.f[r] {
                hi = v;
                break;
            }
        }
        (lo, hi)
    }

    /// Assigns the vertices of pattern edge `pe` into host edge `he`,
    /// starting from position `vpos`, then continues with the next edge.
    fn assign_vertices(&mut self, pe: usize, he: usize, vpos: usize, oi: usize) -> bool {
        let edge = &self.p_edges[pe];
        if vpos == edge.len() {
            return self.dfs(oi + 1);
        }
        let rank = self.rank_of(edge[vpos]);
        let target = &self.h_edges[he];
        if let Some(fv) = self.f[rank] {
            if target.binary_search(&fv).is_err() {
                return false;
            }
            return self.assign_vertices(pe, he, vpos + 1, oi);
        }
        let (lo, hi) = self.bounds(rank);
        for ci in 0..target.len() {
            let c = target[ci];
            if c <= lo {
                continue;
            }
            if c >= hi {
                break;
            }
            self.f[rank] = Some(c);
            if self.assign_vertices(pe, he, vpos + 1, oi) {
                return true;
            }
            self.f[rank] = None;
        }
        false
    }

    fn dfs(&mut self, oi: usize) -> bool {
        if oi == self.order.len() {
            return true;
        }
        let pe = self.order[oi];
        let need = self.p_edges[pe].len();
        for he in 0..self.h_edges.len() {
            if self.used_host[he] || self.h_edges[he].len() < need {
                continue;
            }
            self.used_host[he] = true;
            if self.assign_vertices(pe, he, 0, oi) {
                return true;
            }
            self.used_host[he] = false;
        }
        false
    }

    fn seed_pins(&mut self, pins: &[Option<u32>]) -> bool {
        let mut prev = 0u32;
        for (r, pin) in pins.iter().enumerate() {
            if let Some(v) = pin {
                if *v <= prev {
                    return false;
                }
                prev = *v;
                self.f[r] = Some(*v);
            } else if prev > 0 {
                // Pins are assigned front to back; a gap never precedes one.
                break;
            }
        }
        true
    }
}

fn hg_exists(
    p_edges: &[Vec<u32>],
    h_edges: &[Vec<u32>],
    pins: &[Option<u32>],
    forced: Option<usize>,
) -> bool {
    if p_edges.len() > h_edges.len() {
        return false;
    }
    match forced {
        None => {
            let mut m = HgMatcher::new(p_edges, h_edges);
            if !m.seed_pins(pins) {
                return false;
            }
            m.dfs(0)
        }
        Some(hidx) => {
            for p in 0..p_edges.len() {
                let mut m = HgMatcher::new(p_edges, h_edges);
                if !m.seed_pins(pins) {
                    return false;
                }
                // Move edge p to the front of the search order and pin its
                // host edge.
                m.order.retain(|&x| x != p);
                m.order.insert(0, p);
                if m.h_edges[hidx].len() >= m.p_edges[p].len() {
                    m.used_host[hidx] = true;
                    if m.assign_vertices(p, hidx, 0, 0) {
                        return true;
                    }
                }
            }
            false
        }
    }
}

pub(crate) fn hypergraph_embeds(pattern: &OrderedHypergraph, h_edges: &[Vec<u32>]) -> bool {
    hg_exists(pattern.edges(), h_edges, &[], None)
}

pub(crate) fn hypergraph_embeds_using(
    pattern: &OrderedHypergraph,
    h_edges: &[Vec<u32>],
    forced_idx: usize,
) -> bool {
    hg_exists(pattern.edges(), h_edges, &[], Some(forced_idx))
}

/// Decides ordered hypergraph containment. Supports non-simple patterns
/// inside simple hosts. The witness minimizes the vertex images
/// lexicographically, then the edge images.
pub fn contains_hypergraph(
    pattern: &OrderedHypergraph,
    host: &OrderedHypergraph,
) -> Option<HypergraphEmbedding> {
    if !hypergraph_embeds(pattern, host.edges()) {
        return None;
    }
    let pverts = pattern.used_vertices();
    let mut hverts: Vec<u32> = host.edges().iter().flatten().copied().collect();
    hverts.sort_unstable();
    hverts.dedup();

    let mut pins: Vec<Option<u32>> = vec![None; pverts.len()];
    for r in 0..pverts.len() {
        let mut fixed = false;
        for (ui, &u) in hverts.iter().enumerate() {
            if r > 0 && u <= pins[r - 1].unwrap() {
                continue;
            }
            if hverts.len() - ui < pverts.len() - r {
                break;
            }
            pins[r] = Some(u);
            if hg_exists(pattern.edges(), host.edges(), &pins, None) {
                fixed = true;
                break;
            }
        }
        if !fixed {
            return None;
        }
    }
    let images: Vec<u32> = pins.iter().map(|v| v.unwrap()).collect();

    // With f fixed, pick the lexicographically least injective edge map.
    let candidates: Vec<Vec<usize>> = pattern
        .edges()
        .iter()
        .map(|pe| {
            (0..host.edges().len())
                .filter(|&he| {
                    pe.iter().all(|&v| {
                        let fv = images[pverts.binary_search(&v).unwrap()];
                        host.edges()[he].binary_search(&fv).is_ok()
                    })
                })
                .collect()
        })
        .collect();
    let mut edge_map = vec![usize::MAX; candidates.len()];
    let mut used = vec![false; host.edges().len()];
    if !least_matching(&candidates, 0, &mut used, &mut edge_map) {
        return None;
    }
    Some(HypergraphEmbedding {
        vertex_map: pverts.into_iter().zip(images).collect(),
        edge_map,
    })
}

fn least_matching(
    candidates: &[Vec<usize>],
    i: usize,
    used: &mut [bool],
    out: &mut [usize],
) -> bool {
    if i == candidates.len() {
        return true;
    }
    for &c in &candidates[i] {
        if !used[c] {
            used[c] = true;
            out[i] = c;
            if least_matching(candidates, i + 1, used, out) {
                return true;
            }
            used[c] = false;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Grid detection.

/// Searches for a k-grid contained in `host`: interval partitions of each
/// axis into k intervals such that every one of the k^d cells meets the
/// host. Picking one edge per cell then yields a sub-structure that is a
/// d-dimensional k-grid, so success is exactly grid containment. Returns
/// the lexicographically least boundary lists, axis by axis.
pub fn find_grid(host: &DMatrix, k: u32) -> Result<Option<Vec<IntervalPartition>>> {
    if !host.is_cube() {
        return Err(Error::invalid(format!(
            "grid detection needs equal sides, got {:?}",
            host.sides()
        )));
    }
    if k == 0 {
        return Err(Error::invalid("grid order k must be at least 1"));
    }
    let n = host.sides()[0];
    if k > n {
        return Ok(None);
    }
    let d = host.dims();
    let mut chosen: Vec<IntervalPartition> = Vec::with_capacity(d);
    if grid_axis(host, k, n, d, &mut chosen) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn grid_axis(host: &DMatrix, k: u32, n: u32, d: usize, chosen: &mut Vec<IntervalPartition>) -> bool {
    let t = chosen.len();
    if t == d {
        return true;
    }
    let mut cuts: Vec<u32> = Vec::with_capacity(k as usize - 1);
    grid_cuts(host, k, n, d, chosen, &mut cuts)
}

fn grid_cuts(
    host: &DMatrix,
    k: u32,
    n: u32,
    d: usize,
    chosen: &mut Vec<IntervalPartition>,
    cuts: &mut Vec<u32>,
) -> bool {
    if cuts.len() == k as usize - 1 {
        let mut boundaries = cuts.clone();
        boundaries.push(n);
        let part = IntervalPartition::new(n, boundaries).expect("valid cuts");
        chosen.push(part);
        if slabs_covered(host, k, chosen) && grid_axis(host, k, n, d, chosen) {
            return true;
        }
        chosen.pop();
        return false;
    }
    let i = cuts.len() as u32 + 1; // choosing the i-th cut
    let lo = cuts.last().map_or(i, |&c| c + 1);
    let hi = n - (k - i);
    for c in lo..=hi {
        cuts.push(c);
        if grid_cuts(host, k, n, d, chosen, cuts) {
            return true;
        }
        cuts.pop();
    }
    false
}

/// With partitions fixed for the first `chosen.len()` axes, every
/// combination of blocks on those axes must already meet the host.
fn slabs_covered(host: &DMatrix, k: u32, chosen: &[IntervalPartition]) -> bool {
    let t = chosen.len();
    let total = (k as usize).pow(t as u32);
    let mut hit = vec![false; total];
    let mut hits = 0usize;
    for edge in host.edges() {
        let mut idx = 0usize;
        for (part, &coord) in chosen.iter().zip(edge) {
            idx = idx * k as usize + (part.block_of(coord) as usize - 1);
        }
        if !hit[idx] {
            hit[idx] = true;
            hits += 1;
            if hits == total {
                return true;
            }
        }
    }
    hits == total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::enumerate_d_permutations;
    use crate::transforms::permutation_graph;
    use crate::Permutation;

    fn dm(sides: &[u32], edges: &[&[u32]]) -> DMatrix {
        DMatrix::new(sides.to_vec(), edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn matrix_example_with_least_witness() {
        let pattern = dm(&[2, 2], &[&[1, 1], &[2, 2]]);
        let host = dm(&[3, 3], &[&[1, 1], &[2, 3], &[3, 2]]);
        let emb = contains_matrix(&pattern, &host).unwrap().unwrap();
        assert_eq!(emb.maps, vec![vec![1, 2], vec![1, 3]]);
        assert!(emb.check(&pattern, &host));
    }

    #[test]
    fn matrix_reflexive() {
        for p in enumerate_d_permutations(3, 2, None).unwrap() {
            let emb = contains_matrix(p.matrix(), p.matrix()).unwrap().unwrap();
            assert!(emb.check(p.matrix(), p.matrix()));
        }
    }

    #[test]
    fn matrix_avoids() {
        let pattern = dm(&[2, 2], &[&[1, 2], &[2, 1]]);
        let host = dm(&[3, 3], &[&[1, 1], &[2, 2], &[3, 3]]);
        assert!(contains_matrix(&pattern, &host).unwrap().is_none());
    }

    #[test]
    fn matrix_dimension_mismatch() {
        let pattern = dm(&[2, 2], &[&[1, 1]]);
        let host = dm(&[2, 2, 2], &[&[1, 1, 1]]);
        assert!(matches!(
            contains_matrix(&pattern, &host),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn unused_pattern_coordinates_still_need_room() {
        // Pattern uses coordinates 1 and 3 only; a 2-sided host is too
        // small for a full injection [3] -> [2].
        let pattern = dm(&[3, 3], &[&[1, 1], &[3, 3]]);
        let host = dm(&[2, 2], &[&[1, 1], &[2, 2]]);
        assert!(contains_matrix(&pattern, &host).unwrap().is_none());
        let host3 = dm(&[3, 3], &[&[1, 1], &[2, 2], &[3, 3]]);
        assert!(contains_matrix(&pattern, &host3).unwrap().is_some());
    }

    #[test]
    fn graph_examples() {
        let p12 = permutation_graph(&Permutation::parse("12").unwrap());
        let host = OrderedGraph::new(4, vec![(1, 3), (2, 4), (1, 2)]).unwrap();
        let emb = contains_graph(&p12, &host).unwrap();
        assert_eq!(emb.vertex_map, vec![1, 2, 3, 4]);

        let small = OrderedGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(contains_graph(&p12, &small).is_none());

        let single = OrderedGraph::new(2, vec![(1, 2)]).unwrap();
        assert!(contains_graph(&single, &host).is_some());
    }

    #[test]
    fn hypergraph_examples() {
        let pattern = OrderedHypergraph::new(2, vec![vec![1, 2]]).unwrap();
        let host = OrderedHypergraph::new(3, vec![vec![1, 3], vec![2]]).unwrap();
        let emb = contains_hypergraph(&pattern, &host).unwrap();
        assert_eq!(emb.vertex_map, vec![(1, 1), (2, 3)]);
        assert!(emb.check(&pattern, &host));

        let identity = contains_hypergraph(&host, &host).unwrap();
        assert!(identity.check(&host, &host));

        // Two singleton edges cannot map into one host edge: g is injective.
        let two = OrderedHypergraph::new(2, vec![vec![1], vec![2]]).unwrap();
        let one = OrderedHypergraph::new(2, vec![vec![1, 2]]).unwrap();
        assert!(contains_hypergraph(&two, &one).is_none());
    }

    #[test]
    fn non_simple_pattern_in_simple_host() {
        let pattern =
            OrderedHypergraph::new(2, vec![vec![1, 2], vec![1, 2]]).unwrap();
        let host =
            OrderedHypergraph::new(3, vec![vec![1, 2, 3], vec![1, 3]]).unwrap();
        let emb = contains_hypergraph(&pattern, &host).unwrap();
        assert!(emb.check(&pattern, &host));
    }

    #[test]
    fn grid_full_and_missing_cell() {
        let full = dm(&[2, 2], &[&[1, 1], &[1, 2], &[2, 1], &[2, 2]]);
        let parts = find_grid(&full, 2).unwrap().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].boundaries(), &[1, 2]);

        let three = dm(&[2, 2], &[&[1, 1], &[1, 2], &[2, 1]]);
        assert!(find_grid(&three, 2).unwrap().is_none());
    }

    #[test]
    fn grid_order_one() {
        let m = dm(&[3, 3], &[&[2, 2]]);
        assert!(find_grid(&m, 1).unwrap().is_some());
        let empty = DMatrix::empty(3, 2);
        assert!(find_grid(&empty, 1).unwrap().is_none());
    }

    #[test]
    fn size_necessary_condition() {
        // Each pattern edge needs its own host edge.
        let pattern = dm(&[2, 2], &[&[1, 1], &[2, 2]]);
        let host = dm(&[4, 4], &[&[2, 2]]);
        assert!(contains_matrix(&pattern, &host).unwrap().is_none());
    }

    #[test]
    fn transitivity_by_composition() {
        let a = dm(&[2, 2], &[&[1, 1], &[2, 2]]);
        let b = dm(&[3, 3], &[&[1, 1], &[2, 3], &[3, 2]]);
        let c = dm(&[5, 5], &[&[1, 2], &[2, 1], &[3, 5], &[4, 4], &[5, 3]]);
        let ab = contains_matrix(&a, &b).unwrap().unwrap();
        let bc = contains_matrix(&b, &c).unwrap().unwrap();
        let ac = ab.compose(&bc);
        assert!(ac.check(&a, &c));
    }
}
