//! 3-coverings of a graph: a vertex set hitting every 3-path.
//!
//! This module provides the ground-truth validity oracle (direct enumeration
//! of all 3-paths), minimum-covering searches (bounded brute force and
//! branch-and-bound), and the structural checkers: classification of
//! non-covered edges into the three permitted shapes (2-pendant, handle,
//! triangle), per-vertex case analysis, and the distance properties every
//! valid covering satisfies.

use crate::graph::{Distance, Graph, Path3};
use serde::Serialize;
use std::fmt;

/// Default vertex-count bound for the subset-enumeration search.
pub const DEFAULT_BRUTEFORCE_BOUND: usize = 20;

/// Hard cap for the bitmask subset enumeration.
pub const BRUTEFORCE_HARD_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    VertexOutOfRange { vertex: usize, n: usize },
    SizeBoundExceeded { n: usize, bound: usize },
    NotACovering,
    NotConnected,
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoverError::VertexOutOfRange { vertex, n } => {
                write!(f, "cover vertex {vertex} out of range for graph on {n} vertices")
            }
            CoverError::SizeBoundExceeded { n, bound } => {
                write!(f, "graph on {n} vertices exceeds brute-force bound {bound}")
            }
            CoverError::NotACovering => write!(f, "the given set is not a valid 3-covering"),
            CoverError::NotConnected => write!(f, "operation requires a connected graph"),
        }
    }
}

impl std::error::Error for CoverError {}

/// Which covering notion a [`CoverSet`] is meant for: 2-coverings are
/// classical vertex covers (every edge met), 3-coverings hit every 3-path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverKind {
    #[serde(rename = "2-covering")]
    Two,
    #[serde(rename = "3-covering")]
    Three,
}

/// A candidate or verified covering set: sorted, duplicate-free vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSet {
    members: Vec<usize>,
    kind: CoverKind,
}

impl CoverSet {
    /// Builds a cover set for a graph on `n` vertices. Members are sorted
    /// and deduplicated; out-of-range ids are rejected.
    pub fn new(
        members: impl IntoIterator<Item = usize>,
        n: usize,
        kind: CoverKind,
    ) -> Result<CoverSet, CoverError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(CoverError::VertexOutOfRange { vertex: v, n });
        }
        Ok(CoverSet { members, kind })
    }

    pub fn three(members: impl IntoIterator<Item = usize>, n: usize) -> Result<CoverSet, CoverError> {
        CoverSet::new(members, n, CoverKind::Three)
    }

    pub fn two(members: impl IntoIterator<Item = usize>, n: usize) -> Result<CoverSet, CoverError> {
        CoverSet::new(members, n, CoverKind::Two)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn kind(&self) -> CoverKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// True iff every 3-path of `g` contains a member of `q`.
///
/// Direct brute force over the enumerated 3-paths; this is the ground-truth
/// oracle everything else is checked against.
pub fn is_3_covering(g: &Graph, q: &CoverSet) -> bool {
    g.enumerate_p3()
        .iter()
        .all(|p| p.vertices().iter().any(|&v| q.contains(v)))
}

/// True iff `q` is a classical vertex cover: every edge has an endpoint in `q`.
pub fn is_2_covering(g: &Graph, q: &CoverSet) -> bool {
    g.edges().iter().all(|&(u, v)| q.contains(u) || q.contains(v))
}

fn p3_targets(g: &Graph) -> Vec<Vec<usize>> {
    g.enumerate_p3().iter().map(|p| p.vertices().to_vec()).collect()
}

fn edge_targets(g: &Graph) -> Vec<Vec<usize>> {
    g.edges().iter().map(|&(u, v)| vec![u, v]).collect()
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order;
/// false once exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - k {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum hitting set by subset enumeration in increasing size,
/// lexicographic within a size, so the result is the lexicographically
/// smallest among the minimum solutions.
fn min_hitting_set_bruteforce(
    n: usize,
    targets: &[Vec<usize>],
    bound: usize,
) -> Result<Vec<usize>, CoverError> {
    let bound = bound.min(BRUTEFORCE_HARD_CAP);
    if n > bound {
        return Err(CoverError::SizeBoundExceeded { n, bound });
    }
    let masks: Vec<u64> = targets
        .iter()
        .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let qmask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if masks.iter().all(|&t| t & qmask != 0) {
                return Ok(combo);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set hits every target");
}

/// Greedy packing of pairwise vertex-disjoint unhit targets; its size is a
/// lower bound on how many more vertices any hitting set needs.
fn packing_lower_bound(targets: &[Vec<usize>], hit: &[bool], in_cover: &[bool]) -> usize {
    let mut used = vec![false; in_cover.len()];
    let mut count = 0;
    for (i, t) in targets.iter().enumerate() {
        if hit[i] {
            continue;
        }
        if t.iter().all(|&v| !used[v]) {
            for &v in t {
                used[v] = true;
            }
            count += 1;
        }
    }
    count
}

struct BranchBound<'a> {
    targets: &'a [Vec<usize>],
    incident: Vec<Vec<usize>>,
    best: Vec<usize>,
    in_cover: Vec<bool>,
    hit_count: Vec<usize>,
    current: Vec<usize>,
}

impl<'a> BranchBound<'a> {
    fn new(n: usize, targets: &'a [Vec<usize>], initial: Vec<usize>) -> BranchBound<'a> {
        let mut incident = vec![Vec::new(); n];
        for (i, t) in targets.iter().enumerate() {
            for &v in t {
                incident[v].push(i);
            }
        }
        BranchBound {
            targets,
            incident,
            best: initial,
            in_cover: vec![false; n],
            hit_count: vec![0; targets.len()],
            current: Vec::new(),
        }
    }

    fn add(&mut self, v: usize) {
        self.in_cover[v] = true;
        self.current.push(v);
        for &i in &self.incident[v] {
            self.hit_count[i] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.in_cover[v] = false;
        self.current.pop();
        for &i in &self.incident[v] {
            self.hit_count[i] -= 1;
        }
    }

    fn search(&mut self) {
        if self.current.len() >= self.best.len() {
            return;
        }
        let unhit = match self.hit_count.iter().position(|&c| c == 0) {
            None => {
                // Strict improvement only, so the result is deterministic.
                self.best = self.current.clone();
                return;
            }
            Some(i) => i,
        };
        let hit: Vec<bool> = self.hit_count.iter().map(|&c| c > 0).collect();
        let lb = packing_lower_bound(self.targets, &hit, &self.in_cover);
        if self.current.len() + lb >= self.best.len() {
            return;
        }
        let branch = self.targets[unhit].clone();
        for v in branch {
            self.add(v);
            self.search();
            self.remove(v);
        }
    }
}

/// Greedy hitting set (most-hits-first, smallest id on ties); used as the
/// initial upper bound for the branch-and-bound search.
fn greedy_hitting_set(n: usize, targets: &[Vec<usize>]) -> Vec<usize> {
    let mut hit = vec![false; targets.len()];
    let mut chosen = Vec::new();
    while hit.iter().any(|&h| !h) {
        let mut gain = vec![0usize; n];
        for (i, t) in targets.iter().enumerate() {
            if !hit[i] {
                for &v in t {
                    gain[v] += 1;
                }
            }
        }
        let v = (0..n).max_by_key(|&v| (gain[v], std::cmp::Reverse(v))).unwrap();
        chosen.push(v);
        for (i, t) in targets.iter().enumerate() {
            if !hit[i] && t.contains(&v) {
                hit[i] = true;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

fn min_hitting_set_exact(n: usize, targets: &[Vec<usize>]) -> Vec<usize> {
    if targets.is_empty() {
        return Vec::new();
    }
    let initial = greedy_hitting_set(n, targets);
    let mut bb = BranchBound::new(n, targets, initial);
    bb.search();
    let mut best = bb.best;
    best.sort_unstable();
    best
}

/// Minimum 3-covering by exhaustive subset enumeration, smallest size first,
/// lexicographically smallest member list among minima. Bounded by
/// [`DEFAULT_BRUTEFORCE_BOUND`] vertices.
pub fn min_3_covering_bruteforce(g: &Graph) -> Result<CoverSet, CoverError> {
    min_3_covering_bruteforce_with_bound(g, DEFAULT_BRUTEFORCE_BOUND)
}

/// Same as [`min_3_covering_bruteforce`] with an explicit vertex-count bound
/// (capped at 64 for the bitmask representation).
pub fn min_3_covering_bruteforce_with_bound(g: &Graph, bound: usize) -> Result<CoverSet, CoverError> {
    let members = min_hitting_set_bruteforce(g.vertex_count(), &p3_targets(g), bound)?;
    CoverSet::three(members, g.vertex_count())
}

/// Minimum 2-covering (vertex cover) by the same bounded enumeration.
pub fn min_2_covering_bruteforce_with_bound(g: &Graph, bound: usize) -> Result<CoverSet, CoverError> {
    let members = min_hitting_set_bruteforce(g.vertex_count(), &edge_targets(g), bound)?;
    CoverSet::two(members, g.vertex_count())
}

pub fn min_2_covering_bruteforce(g: &Graph) -> Result<CoverSet, CoverError> {
    min_2_covering_bruteforce_with_bound(g, DEFAULT_BRUTEFORCE_BOUND)
}

/// Minimum 3-covering by branch-and-bound over the 3-path hitting-set
/// formulation: pick an unhit 3-path (x, y, z), branch on adding x, y or z,
/// prune on the incumbent size and a disjoint-path packing bound.
pub fn min_3_covering_exact(g: &Graph) -> CoverSet {
    let members = min_hitting_set_exact(g.vertex_count(), &p3_targets(g));
    CoverSet::three(members, g.vertex_count()).expect("members come from the graph")
}

/// Minimum 2-covering by the same branch-and-bound.
pub fn min_2_covering_exact(g: &Graph) -> CoverSet {
    let members = min_hitting_set_exact(g.vertex_count(), &edge_targets(g));
    CoverSet::two(members, g.vertex_count()).expect("members come from the graph")
}

/// Why a non-covered edge is inadmissible for a 3-covering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// Fits none of the three permitted non-covered shapes.
    Unclassifiable,
    /// Shares exactly one vertex with another non-covered edge, which
    /// always leaves a 3-path uncovered.
    SharesVertexWith { edge: (usize, usize) },
}

/// Verdict for a single edge under a candidate cover. A non-covered edge may
/// satisfy handle and triangle simultaneously (a multi-class label on one
/// edge, not two edges); pendant is exclusive of the other two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    /// At least one endpoint is in the cover.
    Covered,
    /// Neither endpoint covered, but the edge fits permitted shapes.
    NonCovered {
        /// Final edge of a 2-pendant path: one endpoint pendant, the other
        /// adjacent to a cover vertex.
        pendant2: bool,
        /// Middle edge of a 4-vertex path whose two ends are distinct cover
        /// vertices.
        handle: bool,
        /// Edge of a triangle whose third vertex is in the cover.
        triangle: bool,
    },
    Violation(ViolationKind),
}

impl EdgeClass {
    pub fn is_violation(&self) -> bool {
        matches!(self, EdgeClass::Violation(_))
    }
}

/// Per-edge verdict produced by [`classify_noncovered_edges`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub edge: (usize, usize),
    pub class: EdgeClass,
}

fn q_neighbors(g: &Graph, q: &CoverSet, v: usize) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&w| q.contains(w)).collect()
}

/// Shape flags (pendant2, handle, triangle) for a non-covered edge {u, v}.
fn noncovered_edge_flags(g: &Graph, q: &CoverSet, u: usize, v: usize) -> (bool, bool, bool) {
    let u_pendant = g.degree(u) == 1;
    let v_pendant = g.degree(v) == 1;
    let qu = q_neighbors(g, q, u);
    let qv = q_neighbors(g, q, v);

    let pendant2 = (v_pendant && !qu.is_empty()) || (u_pendant && !qv.is_empty());

    let handle = !u_pendant
        && !v_pendant
        && !qu.is_empty()
        && !qv.is_empty()
        && (qu.len() > 1 || qv.len() > 1 || qu[0] != qv[0]);

    let triangle = qu.iter().any(|w| qv.contains(w));

    (pendant2, handle, triangle)
}

/// Classifies every edge of `g` with respect to `q`.
///
/// `q` need not be a valid covering: inadmissible edges come back as
/// violations, which is what makes the characterization check testable in
/// both directions. Two distinct non-covered edges sharing a vertex are
/// marked as violations regardless of their individual shape.
pub fn classify_noncovered_edges(g: &Graph, q: &CoverSet) -> Vec<EdgeClassification> {
    let mut out: Vec<EdgeClassification> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let class = if q.contains(u) || q.contains(v) {
                EdgeClass::Covered
            } else {
                let (pendant2, handle, triangle) = noncovered_edge_flags(g, q, u, v);
                if pendant2 || handle || triangle {
                    EdgeClass::NonCovered { pendant2, handle, triangle }
                } else {
                    EdgeClass::Violation(ViolationKind::Unclassifiable)
                }
            };
            EdgeClassification { edge: (u, v), class }
        })
        .collect();

    // Disjointness: non-covered edges may never share exactly one vertex.
    // Distinct edges of a simple graph cannot share two.
    let noncovered: Vec<usize> = (0..out.len())
        .filter(|&i| !matches!(out[i].class, EdgeClass::Covered))
        .collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for &i in &noncovered {
        let (u, v) = out[i].edge;
        incident[u].push(i);
        incident[v].push(i);
    }
    for bucket in incident {
        if bucket.len() < 2 {
            continue;
        }
        for &i in &bucket {
            let other = bucket.iter().copied().find(|&j| j != i).unwrap();
            out[i].class = EdgeClass::Violation(ViolationKind::SharesVertexWith {
                edge: out[other].edge,
            });
        }
    }
    out
}

/// The case analysis a valid 3-covering induces on a single vertex. A vertex
/// can satisfy several cases at once; all satisfied cases are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum VertexCase {
    /// The vertex is in the cover.
    InQ,
    /// Pendant vertex whose neighbor is in the cover.
    PendantOf1Path,
    /// Pendant vertex two steps from the cover.
    PendantOf2Path,
    /// Middle vertex of a 2-pendant path: one cover neighbor, one pendant
    /// non-covered neighbor.
    MiddleOf2PendantPath,
    /// Middle of a 3-path whose two ends are both in the cover.
    VPath,
    /// Endpoint of the middle edge of a handle path.
    HandleMiddleEndpoint,
    /// Endpoint of a triangle edge.
    TriangleEdgeEndpoint,
}

/// All cases of the vertex case analysis that `v` satisfies under the valid
/// 3-covering `q`. Errors if `q` is not a covering.
pub fn classify_vertex(g: &Graph, q: &CoverSet, v: usize) -> Result<Vec<VertexCase>, CoverError> {
    if !is_3_covering(g, q) {
        return Err(CoverError::NotACovering);
    }
    assert!(v < g.vertex_count(), "vertex {v} out of range");
    let mut cases = Vec::new();
    if q.contains(v) {
        cases.push(VertexCase::InQ);
        return Ok(cases);
    }
    let pendant = g.degree(v) == 1;
    if pendant {
        let y = g.neighbors(v)[0];
        if q.contains(y) {
            cases.push(VertexCase::PendantOf1Path);
        } else if !q_neighbors(g, q, y).is_empty() {
            cases.push(VertexCase::PendantOf2Path);
        }
        return Ok(cases);
    }
    let qn = q_neighbors(g, q, v);
    if !qn.is_empty()
        && g.neighbors(v)
            .iter()
            .any(|&w| !q.contains(w) && g.degree(w) == 1)
    {
        cases.push(VertexCase::MiddleOf2PendantPath);
    }
    if qn.len() >= 2 {
        cases.push(VertexCase::VPath);
    }
    let mut handle_end = false;
    let mut triangle_end = false;
    for &w in g.neighbors(v) {
        if q.contains(w) {
            continue;
        }
        let (_, h, t) = noncovered_edge_flags(g, q, v, w);
        handle_end |= h;
        triangle_end |= t;
    }
    if handle_end {
        cases.push(VertexCase::HandleMiddleEndpoint);
    }
    if triangle_end {
        cases.push(VertexCase::TriangleEdgeEndpoint);
    }
    Ok(cases)
}

/// A counterexample witness attached to a failed check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Vertex(usize),
    Edge(usize, usize),
    Path(usize, usize, usize),
}

impl Witness {
    pub fn path(p: &Path3) -> Witness {
        Witness::Path(p.first, p.middle, p.last)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Edge(u, v) => write!(f, "edge {{{u}, {v}}}"),
            Witness::Path(x, y, z) => write!(f, "path {x}-{y}-{z}"),
        }
    }
}

/// Outcome of a structural check: an identifier, a pass flag, and the list
/// of counterexample witnesses (pass iff the list is empty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl TheoremReport {
    fn new(theorem: &str, witnesses: Vec<Witness>) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            pass: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Distance properties of a valid 3-covering on a connected graph: no vertex
/// lies farther than 2 from the cover, and every vertex at distance exactly
/// 2 is pendant.
pub fn check_distance_theorems(g: &Graph, q: &CoverSet) -> Result<TheoremReport, CoverError> {
    if !g.is_connected() {
        return Err(CoverError::NotConnected);
    }
    if !is_3_covering(g, q) {
        return Err(CoverError::NotACovering);
    }
    let dist = g.distances_from_set(q.members());
    let mut witnesses = Vec::new();
    for v in g.vertices() {
        match dist[v] {
            Distance::Hops(d) if d > 2 => witnesses.push(Witness::Vertex(v)),
            Distance::Hops(2) if g.degree(v) != 1 => witnesses.push(Witness::Vertex(v)),
            Distance::Unreachable => witnesses.push(Witness::Vertex(v)),
            _ => {}
        }
    }
    Ok(TheoremReport::new("covering-distance-bound", witnesses))
}

/// The edge characterization: `q` leaves only admissible non-covered edges
/// (2-pendant, handle, triangle; pairwise vertex-disjoint).
///
/// On connected graphs with at least 3 vertices this holds exactly when `q`
/// is a 3-covering, which is the headline equivalence the verification
/// corpus exercises.
pub fn characterization_holds(g: &Graph, q: &CoverSet) -> Result<bool, CoverError> {
    if !g.is_connected() {
        return Err(CoverError::NotConnected);
    }
    Ok(classify_noncovered_edges(g, q)
        .iter()
        .all(|c| !c.class.is_violation()))
}
