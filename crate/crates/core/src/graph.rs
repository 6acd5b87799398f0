//! Finite simple undirected graphs with validated construction and the
//! structural queries the covering and spectral layers build on: 3-path
//! enumeration, pendant vertices, connectivity, and BFS distances to a
//! vertex set.

use std::collections::VecDeque;
use std::fmt;

/// Errors raised while constructing a [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// A path on three vertices `first - middle - last` (length 2).
///
/// Canonical orientation has `first < last`, so each undirected 3-path is
/// represented exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path3 {
    pub first: usize,
    pub middle: usize,
    pub last: usize,
}

impl Path3 {
    /// Canonicalizes the endpoint order; `a` and `b` are the ends.
    pub fn new(a: usize, middle: usize, b: usize) -> Path3 {
        Path3 {
            first: a.min(b),
            middle,
            last: a.max(b),
        }
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.first, self.middle, self.last]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.first == v || self.middle == v || self.last == v
    }
}

impl fmt::Display for Path3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.first, self.middle, self.last)
    }
}

/// Hop distance from a vertex to a vertex set, with an explicit sentinel for
/// the unreachable case (never a large integer).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Hops(usize),
    Unreachable,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Hops(_))
    }

    pub fn hops(&self) -> Option<usize> {
        match *self {
            Distance::Hops(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// A finite simple undirected loopless graph over dense 0-based vertex ids.
///
/// Values are immutable after construction and safe to share across threads;
/// every query is pure. Adjacency is kept as per-vertex sorted neighbor
/// lists, and the normalized edge list (`u < v`, ascending) is retained for
/// deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a validated graph from a vertex count and an edge list.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        // Neighbor lists come out sorted because the edge list is, but a
        // vertex collects neighbors from both orientations.
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edge list: `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Enumerates every 3-path of the graph, one canonical entry each,
    /// ordered by (middle, first, last). The count is Σ_v C(deg(v), 2).
    pub fn enumerate_p3(&self) -> Vec<Path3> {
        let mut paths = Vec::new();
        for mid in 0..self.n {
            let nb = &self.adj[mid];
            for i in 0..nb.len() {
                for j in (i + 1)..nb.len() {
                    paths.push(Path3 {
                        first: nb[i],
                        middle: mid,
                        last: nb[j],
                    });
                }
            }
        }
        paths
    }

    /// Vertices of degree exactly 1, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Connectivity check; the empty graph counts as connected by convention.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// BFS hop distance from `v` to the nearest member of `set`.
    ///
    /// Members of the set are at distance 0; `Unreachable` if no member can
    /// be reached (in particular whenever `set` is empty).
    pub fn distance_to_set(&self, set: &[usize], v: usize) -> Distance {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        self.distances_from_set(set)[v]
    }

    /// Multi-source BFS: distance of every vertex to the nearest set member.
    pub fn distances_from_set(&self, set: &[usize]) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.n];
        let mut queue = VecDeque::new();
        for &s in set {
            assert!(s < self.n, "vertex {s} out of range for n = {}", self.n);
            if dist[s] != Distance::Hops(0) {
                dist[s] = Distance::Hops(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = match dist[u] {
                Distance::Hops(d) => d,
                Distance::Unreachable => unreachable!(),
            };
            for &w in &self.adj[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Hops(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}
