//! Boundary walks and the surface invariants they determine.
//!
//! Thickening a fat graph yields an oriented surface whose boundary
//! components correspond to orbits of the permutation
//!
//! ```text
//! boundary_next(d) = sigma1(sigma0_inv(d))
//! ```
//!
//! i.e. step backwards around the current vertex, then jump across that
//! edge. Each orbit, read as a cyclic sequence of darts, is one boundary
//! walk. With `V` vertices, `E` edges and `B` boundary walks the thickened
//! surface has Euler characteristic `V - E + B`; capping every boundary
//! circle with a disc gives the closed surface of genus `(2 - chi) / 2`
//! when the graph is connected.

use serde::Serialize;

use crate::graph::{Dart, FatGraph};

/// One boundary component, as the cyclic sequence of darts it traverses.
/// Stored starting from its smallest dart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryWalk {
    darts: Vec<Dart>,
}

impl BoundaryWalk {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Number of darts in the walk. A length-2 walk is a bigon.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

impl FatGraph {
    /// The dart that follows `d` along its boundary walk.
    pub fn boundary_next(&self, d: Dart) -> Dart {
        self.sigma1(self.sigma0_inv(d))
    }
}

/// All boundary walks. Every dart lies on exactly one walk. Walks are
/// emitted starting at their smallest dart, sorted by that dart.
pub fn boundary_walks(g: &FatGraph) -> Vec<BoundaryWalk> {
    let n = g.dart_count();
    let mut seen = vec![false; n];
    let mut walks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            seen[d] = true;
            darts.push(d);
            d = g.boundary_next(d);
            if d == start {
                break;
            }
        }
        walks.push(BoundaryWalk { darts });
    }
    walks
}

/// Number of boundary walks of length two.
pub fn bigon_count(g: &FatGraph) -> usize {
    boundary_walks(g).iter().filter(|w| w.len() == 2).count()
}

/// Whether two sequences agree as cyclic words: same length and `b` is
/// some rotation of `a`. Useful for comparing walks that were written
/// down from different starting darts.
pub fn cyclically_equal<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|shift| (0..a.len()).all(|i| a[i] == b[(i + shift) % b.len()]))
}

/// True when the underlying graph is connected: every dart is reachable
/// from dart 0 by steps along `sigma0` and `sigma1`.
pub fn is_connected(g: &FatGraph) -> bool {
    connected_components(g).len() == 1
}

/// Dart sets of the connected components, each sorted ascending; the
/// component list is ordered by smallest dart.
pub fn connected_components(g: &FatGraph) -> Vec<Vec<Dart>> {
    let n = g.dart_count();
    let mut component = vec![usize::MAX; n];
    let mut components: Vec<Vec<Dart>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        let mut head = 0;
        while head < members.len() {
            let d = members[head];
            head += 1;
            for next in [g.sigma0(d), g.sigma1(d)] {
                if component[next] == usize::MAX {
                    component[next] = id;
                    members.push(next);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Counts and derived topology of the thickened surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    /// Number of vertices.
    pub vertices: usize,
    /// Number of edges.
    pub edges: usize,
    /// Number of boundary walks.
    pub boundary_components: usize,
    /// `vertices - edges + boundary_components`.
    pub euler_characteristic: i64,
    /// Genus of the closed surface obtained by capping each boundary walk
    /// with a disc. Only defined for connected graphs.
    pub genus: Option<u64>,
    /// Whether the graph is connected.
    pub connected: bool,
}

/// Computes all surface invariants in one pass.
///
/// For a connected graph the Euler characteristic `V - E + B` is even
/// (capping boundaries gives a closed oriented surface), so the genus
/// `(2 - chi) / 2` is a nonnegative integer. That parity is asserted here;
/// it cannot fail for a validly constructed graph.
pub fn surface_invariants(g: &FatGraph) -> SurfaceInvariants {
    let vertices = g.vertex_count();
    let edges = g.edge_count();
    let boundary_components = boundary_walks(g).len();
    let euler_characteristic = vertices as i64 - edges as i64 + boundary_components as i64;
    let connected = is_connected(g);
    let genus = if connected {
        let two_g = 2 - euler_characteristic;
        assert!(
            two_g >= 0 && two_g % 2 == 0,
            "connected fat graph produced odd or positive Euler excess: chi = {euler_characteristic}"
        );
        Some((two_g / 2) as u64)
    } else {
        None
    };
    SurfaceInvariants {
        vertices,
        edges,
        boundary_components,
        euler_characteristic,
        genus,
        connected,
    }
}
