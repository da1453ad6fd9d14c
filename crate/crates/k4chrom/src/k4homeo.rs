//! K4-homeomorphs: the complete graph on four vertices with each edge
//! subdivided into a path.
//!
//! `K4Homeomorph` stores the six path lengths `(a, b, c, d, e, f)`. The
//! branch vertices are labeled 0..4; path slot `i` runs between the vertex
//! pair `EDGE_ENDPOINTS[i]`. Every cycle of the graph is the subdivision of
//! one of K4's seven cycles (four triangles, three quadrilaterals), so girth
//! and cycle structure reduce to closed forms over the six lengths.
//!
//! Two homeomorphs are isomorphic as graphs iff one's length tuple is carried
//! to the other's by a permutation of the four branch vertices: branch
//! vertices are the only vertices of degree three, so any isomorphism
//! restricts to a bijection on them and maps subdivided paths to subdivided
//! paths of equal length. `canonical` picks the lexicographically least
//! tuple of the induced orbit, making isomorphism a simple equality test.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest accepted path length; keeps every derived sum comfortably in u64.
pub const MAX_PATH_LENGTH: u64 = 1_000_000_000;

/// Branch-vertex pair spanned by each path slot, in tuple order.
///
/// Slot order is the tuple order `(a, b, c, d, e, f)`:
/// a = 0-1, b = 1-3, c = 0-3, d = 2-3, e = 1-2, f = 0-2.
pub const EDGE_ENDPOINTS: [(usize, usize); 6] = [(0, 1), (1, 3), (0, 3), (2, 3), (1, 2), (0, 2)];

/// Path slots incident to each branch vertex, listed in the fixed order the
/// essential polynomial's triangle terms use (vertices 2, 3, 0, 1).
///
/// The triangle avoiding a vertex uses exactly the three paths *not* in its
/// star, so its length is the total size minus the star sum.
pub const VERTEX_STARS: [[usize; 3]; 4] = [[5, 3, 4], [3, 2, 1], [0, 5, 2], [0, 4, 1]];

/// The three perfect matchings of K4 by path slot, in the fixed order the
/// essential polynomial's quadrilateral terms use.
///
/// A quadrilateral omits exactly one matching, so its length is the total
/// size minus the matching sum.
pub const OPPOSITE_PAIRS: [[usize; 2]; 3] = [[0, 3], [5, 1], [2, 4]];

/// A K4-homeomorph, stored as its six path lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct K4Homeomorph {
    params: [u64; 6],
}

impl K4Homeomorph {
    /// Validates and wraps a length tuple. Every length must lie in
    /// `1..=MAX_PATH_LENGTH`.
    pub fn new(params: [i64; 6]) -> Result<Self> {
        let mut out = [0u64; 6];
        for (i, &v) in params.iter().enumerate() {
            if v < 1 {
                return Err(Error::InvalidPathLength {
                    position: i,
                    value: v,
                });
            }
            if v as u64 > MAX_PATH_LENGTH {
                return Err(Error::SizeOutOfRange {
                    size: v as u64,
                    reason: format!("path length at position {i} exceeds {MAX_PATH_LENGTH}"),
                });
            }
            out[i] = v as u64;
        }
        Ok(Self { params: out })
    }

    /// Infallible constructor for lengths already known to be valid.
    ///
    /// Panics (debug) on a zero length; used internally where tuples come
    /// from arithmetic on already-validated tuples.
    pub(crate) fn from_valid(params: [u64; 6]) -> Self {
        debug_assert!(params.iter().all(|&v| (1..=MAX_PATH_LENGTH).contains(&v)));
        Self { params }
    }

    /// The six path lengths in tuple order.
    pub fn params(&self) -> [u64; 6] {
        self.params
    }

    /// Number of edges of the subdivided graph: the sum of path lengths.
    pub fn size(&self) -> u64 {
        self.params.iter().sum()
    }

    /// Number of vertices of the subdivided graph.
    ///
    /// Four branch vertices plus `len - 1` interior vertices per path:
    /// `4 + (size - 6) = size - 2`.
    pub fn order(&self) -> u64 {
        self.size() - 2
    }

    /// `(order, size)` = (vertex count, edge count).
    pub fn order_and_size(&self) -> (u64, u64) {
        (self.order(), self.size())
    }

    /// Lengths of the seven cycles, in the fixed order: the four subdivided
    /// triangles (complements of `VERTEX_STARS`), then the three subdivided
    /// quadrilaterals (complements of `OPPOSITE_PAIRS`).
    pub fn cycle_lengths(&self) -> [u64; 7] {
        let s = self.size();
        let mut out = [0u64; 7];
        for (i, star) in VERTEX_STARS.iter().enumerate() {
            out[i] = s - star.iter().map(|&e| self.params[e]).sum::<u64>();
        }
        for (i, pair) in OPPOSITE_PAIRS.iter().enumerate() {
            out[4 + i] = s - pair.iter().map(|&e| self.params[e]).sum::<u64>();
        }
        out
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> u64 {
        *self.cycle_lengths().iter().min().expect("seven cycles")
    }

    /// How many of the seven cycles attain the girth.
    pub fn girth_cycle_count(&self) -> usize {
        let cycles = self.cycle_lengths();
        let g = *cycles.iter().min().expect("seven cycles");
        cycles.iter().filter(|&&c| c == g).count()
    }

    /// Number of paths of length exactly one (undivided K4 edges).
    pub fn unit_path_count(&self) -> usize {
        self.params.iter().filter(|&&v| v == 1).count()
    }

    /// All tuples obtained by permuting the four branch vertices.
    ///
    /// The 24 results enumerate the isomorphism class; they need not be
    /// distinct when the tuple has symmetry.
    pub fn relabelings(&self) -> impl Iterator<Item = K4Homeomorph> + '_ {
        EDGE_PERMUTATIONS.iter().map(move |perm| {
            let mut out = [0u64; 6];
            for (slot, &src) in perm.iter().enumerate() {
                out[slot] = self.params[src];
            }
            K4Homeomorph { params: out }
        })
    }

    /// The lexicographically least tuple among all relabelings: a canonical
    /// form for the isomorphism class.
    pub fn canonical(&self) -> K4Homeomorph {
        self.relabelings().min().expect("24 relabelings")
    }

    /// Number of distinct tuples in the isomorphism class.
    pub fn orbit_size(&self) -> usize {
        let mut orbit: Vec<[u64; 6]> = self.relabelings().map(|g| g.params).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit.len()
    }

    /// Graph isomorphism, decided by comparing canonical forms.
    pub fn is_isomorphic(&self, other: &K4Homeomorph) -> bool {
        self.canonical() == other.canonical()
    }

    /// Expands to the explicit subdivided graph on `order()` vertices.
    ///
    /// Vertices 0..4 are the branch vertices; interior path vertices are
    /// numbered consecutively from 4, path by path in slot order. Refuses
    /// tuples whose expansion would be unreasonably large.
    pub fn expand(&self) -> Result<SimpleGraph> {
        let size = self.size();
        if size > 1_000_000 {
            return Err(Error::SizeOutOfRange {
                size,
                reason: "explicit expansion is supported up to 10^6 edges".into(),
            });
        }
        let mut edges = Vec::with_capacity(size as usize);
        let mut next = 4usize;
        for (slot, &(u, v)) in EDGE_ENDPOINTS.iter().enumerate() {
            let len = self.params[slot] as usize;
            let mut prev = u;
            for _ in 1..len {
                edges.push(ordered(prev, next));
                prev = next;
                next += 1;
            }
            edges.push(ordered(prev, v));
        }
        edges.sort_unstable();
        Ok(SimpleGraph {
            order: next,
            edges,
        })
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The edge permutation induced by each of the 24 branch-vertex
/// permutations: entry `perm[slot]` is the slot whose length moves into
/// `slot` under the relabeling.
static EDGE_PERMUTATIONS: LazyLock<Vec<[usize; 6]>> = LazyLock::new(|| {
    let mut perms = Vec::with_capacity(24);
    let vertices = [0usize, 1, 2, 3];
    permute(&vertices, &mut |sigma| {
        let mut perm = [0usize; 6];
        for (slot, &(u, v)) in EDGE_ENDPOINTS.iter().enumerate() {
            perm[slot] = slot_of(sigma[u], sigma[v]);
        }
        perms.push(perm);
    });
    perms.sort_unstable();
    perms.dedup();
    assert_eq!(perms.len(), 24, "S4 acts faithfully on the six slots");
    perms
});

/// Slot index of the path between branch vertices `a` and `b`.
fn slot_of(a: usize, b: usize) -> usize {
    let want = ordered(a, b);
    EDGE_ENDPOINTS
        .iter()
        .position(|&(u, v)| (u, v) == want)
        .expect("every branch-vertex pair is a slot")
}

/// Calls `f` with every permutation of `items` (Heap's algorithm).
fn permute<T: Copy, F: FnMut(&[T])>(items: &[T], f: &mut F) {
    let mut items = items.to_vec();
    let n = items.len();
    let mut c = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// An explicit simple graph: vertex count plus a sorted list of normalized
/// edges `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; loops and duplicate edges are
    /// refused, as are endpoints at or above `order`.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u} in simple graph")));
            }
            if u >= order || v >= order {
                return Err(Error::Parse(format!(
                    "edge ({u}, {v}) exceeds vertex count {order}"
                )));
            }
            normalized.push(ordered(u, v));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate edge in simple graph".into()));
        }
        Ok(Self {
            order,
            edges: normalized,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// The normalized, sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex degrees.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

// ---- Text and JSON forms ----

impl fmt::Display for K4Homeomorph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params;
        write!(
            f,
            "K4({},{},{},{},{},{})",
            p[0], p[1], p[2], p[3], p[4], p[5]
        )
    }
}

impl FromStr for K4Homeomorph {
    type Err = Error;

    /// Accepts `K4(a,b,c,d,e,f)`, `(a,b,c,d,e,f)`, or six integers
    /// separated by commas and/or whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(rest) = body.strip_prefix("K4").or_else(|| body.strip_prefix("k4")) {
            body = rest.trim_start();
        }
        if let Some(rest) = body.strip_prefix('(') {
            body = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse("unclosed '(' in homeomorph".into()))?;
        }
        let fields: Vec<&str> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if fields.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six path lengths, found {}",
                fields.len()
            )));
        }
        let mut params = [0i64; 6];
        for (i, field) in fields.iter().enumerate() {
            params[i] = field
                .parse()
                .map_err(|_| Error::Parse(format!("bad path length {field:?}")))?;
        }
        Self::new(params)
    }
}

impl Serialize for K4Homeomorph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.params.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for K4Homeomorph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let params = <[i64; 6]>::deserialize(deserializer)?;
        Self::new(params).map_err(D::Error::custom)
    }
}
