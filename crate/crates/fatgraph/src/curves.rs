//! Decomposition of a fat graph into straight-ahead curves.
//!
//! At a vertex of degree `2h` the darts opposite each other in the rotation
//! pair up into `h` *strands*: dart `x` is paired with `sigma0^h(x)`. A
//! closed curve follows edges and always leaves a vertex along the strand
//! it entered on, i.e. the successor of a dart `d` is
//!
//! ```text
//! successor(d) = sigma0^h(sigma1(d))    where 2h = degree(vertex of sigma1(d))
//! ```
//!
//! The successor is a permutation of the darts, so its orbits partition
//! them; an orbit and its edge-wise reversal describe the same unoriented
//! curve and are merged. This is only defined when every vertex has even
//! degree at least four.
//!
//! A graph is a *filling representation* when it is connected, every vertex
//! degree is even and at least four, and every curve is simple (visits no
//! vertex twice). Filling representations are exactly the graphs arising
//! from filling systems of curves on the capped surface, and they are
//! minimal fillings when the thickened surface has a single boundary walk.

use serde::Serialize;

use crate::boundary::{bigon_count, boundary_walks, is_connected};
use crate::error::CurveError;
use crate::graph::{Dart, FatGraph};

/// One unoriented closed curve, reported in a fixed direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Curve {
    /// The successor orbit, starting at the smallest dart lying on the
    /// curve in either direction.
    pub darts: Vec<Dart>,
    /// True when the curve visits no vertex twice.
    pub simple: bool,
}

impl Curve {
    /// Number of edges the curve traverses.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// The full curve system of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveDecomposition {
    /// Curves ordered by their smallest dart.
    pub curves: Vec<Curve>,
    /// For each dart, the index of the curve it lies on.
    pub curve_of: Vec<usize>,
    /// For each vertex `v` of degree `2h`, the `h` curve indices of the
    /// strands through `v`; entry `j` covers the strand of the `j`-th dart
    /// in the stored vertex cycle.
    pub strand_curves: Vec<Vec<usize>>,
}

impl CurveDecomposition {
    pub fn curve_count(&self) -> usize {
        self.curves.len()
    }

    pub fn all_simple(&self) -> bool {
        self.curves.iter().all(|c| c.simple)
    }

    /// Sorted multiset of curve lengths.
    pub fn length_multiset(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.curves.iter().map(Curve::len).collect();
        lengths.sort_unstable();
        lengths
    }
}

impl FatGraph {
    /// The dart that follows `d` along its curve.
    ///
    /// Callers must ensure the vertex receiving `d` has even degree.
    pub fn curve_next(&self, d: Dart) -> Dart {
        let mut x = self.sigma1(d);
        let h = self.degree(self.vertex_of(x)) / 2;
        for _ in 0..h {
            x = self.sigma0(x);
        }
        x
    }
}

/// Decomposes the graph into straight-ahead curves.
///
/// Fails with [`CurveError::NotDecorated`] when some vertex has odd degree
/// or degree two, naming the first offending vertex.
pub fn standard_curves(g: &FatGraph) -> Result<CurveDecomposition, CurveError> {
    for v in 0..g.vertex_count() {
        let degree = g.degree(v);
        if degree % 2 != 0 || degree < 4 {
            return Err(CurveError::NotDecorated { vertex: v, degree });
        }
    }

    let n = g.dart_count();
    let mut curve_of = vec![usize::MAX; n];
    let mut curves = Vec::new();
    for start in 0..n {
        if curve_of[start] != usize::MAX {
            continue;
        }
        // `start` is the smallest dart not yet covered, hence the smallest
        // dart on this curve in either direction.
        let id = curves.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            darts.push(d);
            curve_of[d] = id;
            curve_of[g.sigma1(d)] = id;
            d = g.curve_next(d);
            if d == start {
                break;
            }
        }
        let mut visited = Vec::with_capacity(darts.len());
        for &d in &darts {
            visited.push(g.vertex_of(d));
        }
        visited.sort_unstable();
        let simple = visited.windows(2).all(|w| w[0] != w[1]);
        curves.push(Curve { darts, simple });
    }

    let strand_curves = g
        .vertex_cycles()
        .iter()
        .map(|cycle| {
            let h = cycle.len() / 2;
            (0..h)
                .map(|j| {
                    debug_assert_eq!(curve_of[cycle[j]], curve_of[cycle[j + h]]);
                    curve_of[cycle[j]]
                })
                .collect()
        })
        .collect();

    Ok(CurveDecomposition {
        curves,
        curve_of,
        strand_curves,
    })
}

/// Summary of whether a graph represents a filling curve system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingReport {
    /// Connected, all degrees even and at least four, all curves simple.
    pub is_filling_representation: bool,
    /// Filling with exactly one boundary walk.
    pub is_minimal: bool,
    /// Number of length-2 boundary walks.
    pub bigon_count: usize,
    /// Number of curves, when the curve system is defined.
    pub curve_count: Option<usize>,
    /// Whether every curve is simple, when the curve system is defined.
    pub all_simple: Option<bool>,
}

/// Classifies a graph as a filling representation, tolerating graphs where
/// the curve system is undefined (those are simply not fillings).
pub fn classify_filling(g: &FatGraph) -> FillingReport {
    let connected = is_connected(g);
    let decomposition = standard_curves(g).ok();
    let curve_count = decomposition.as_ref().map(CurveDecomposition::curve_count);
    let all_simple = decomposition.as_ref().map(CurveDecomposition::all_simple);
    let is_filling_representation = connected && all_simple == Some(true);
    let boundary_components = boundary_walks(g).len();
    FillingReport {
        is_filling_representation,
        is_minimal: is_filling_representation && boundary_components == 1,
        bigon_count: bigon_count(g),
        curve_count,
        all_simple,
    }
}
