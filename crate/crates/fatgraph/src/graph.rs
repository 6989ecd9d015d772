//! Core representation of a fat graph (also called a ribbon graph).
//!
//! A fat graph is a finite set of *darts* (directed edge ends) together with
//! two permutations:
//!
//! * `sigma0`, whose cycles are the vertices: at each vertex the outgoing
//!   darts are arranged in a cyclic (counterclockwise) order, and `sigma0`
//!   sends a dart to the next one around its vertex;
//! * `sigma1`, a fixed-point-free involution that swaps the two darts of
//!   every edge.
//!
//! Thickening each vertex to a disc and each edge to a band glued along the
//! cyclic orders produces an oriented surface with boundary, so a fat graph
//! carries strictly more structure than its underlying graph: the rotations
//! determine boundary components, Euler characteristic and genus.
//!
//! Darts are dense indices `0..dart_count`, assigned in order of first
//! appearance when a graph is built from named cycles. Every dart keeps its
//! user-facing name so traversals can be reported in the input's vocabulary.

use std::collections::HashMap;

use crate::error::{BuildError, RelabelError};

/// Index of a dart. Darts are dense: a graph with `n` darts uses `0..n`.
pub type Dart = usize;

/// An immutable fat graph. Use [`FatGraph::build`] or
/// [`FatGraph::from_plus_minus`] to construct one; all constructors validate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatGraph {
    sigma0: Vec<Dart>,
    sigma0_inv: Vec<Dart>,
    sigma1: Vec<Dart>,
    vertex_of: Vec<usize>,
    /// Vertex cycles, each rotated to start at its smallest dart and the
    /// whole list sorted by that dart. Rotation does not change `sigma0`.
    vertices: Vec<Vec<Dart>>,
    names: Vec<String>,
}

impl FatGraph {
    /// Builds a graph from vertex cycles of dart names plus an explicit
    /// reversal pairing. Each pair `(a, b)` declares `a` and `b` to be the
    /// two darts of one edge; listing both orientations of a pair is
    /// allowed as long as they agree.
    ///
    /// Dart indices are assigned in order of first appearance in `cycles`,
    /// reading cycles left to right. Empty cycles are ignored.
    pub fn build(cycles: &[Vec<String>], pairing: &[(String, String)]) -> Result<Self, BuildError> {
        let mut index: HashMap<&str, Dart> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        for cycle in cycles {
            for name in cycle {
                if index.insert(name.as_str(), names.len()).is_some() {
                    return Err(BuildError::DuplicateDart(name.clone()));
                }
                names.push(name.clone());
            }
        }
        let n = names.len();
        if n == 0 {
            return Err(BuildError::EmptyGraph);
        }

        const UNSET: usize = usize::MAX;
        let mut sigma1 = vec![UNSET; n];
        for (a, b) in pairing {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| BuildError::UnknownDartInPairing(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| BuildError::UnknownDartInPairing(b.clone()))?;
            if ia == ib {
                return Err(BuildError::FixedPointInPairing(a.clone()));
            }
            for (x, y) in [(ia, ib), (ib, ia)] {
                if sigma1[x] != UNSET && sigma1[x] != y {
                    return Err(BuildError::ConflictingPairing(names[x].clone()));
                }
                sigma1[x] = y;
            }
        }
        if let Some(d) = sigma1.iter().position(|&p| p == UNSET) {
            return Err(BuildError::UnpairedDart(names[d].clone()));
        }

        let index_cycles: Vec<Vec<Dart>> = cycles
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.iter().map(|name| index[name.as_str()]).collect())
            .collect();
        Ok(Self::assemble(index_cycles, sigma1, names))
    }

    /// Builds a graph whose pairing is implied by dart names: every name
    /// must end in `+` or `-`, and the two darts `stem+` / `stem-` form an
    /// edge. A dart whose partner name is absent is unpaired.
    pub fn from_plus_minus(cycles: &[Vec<String>]) -> Result<Self, BuildError> {
        let mut pairing = Vec::new();
        let mut present: HashMap<&str, ()> = HashMap::new();
        for cycle in cycles {
            for name in cycle {
                present.insert(name.as_str(), ());
            }
        }
        for cycle in cycles {
            for name in cycle {
                let stem = match name.strip_suffix('+') {
                    Some(stem) => stem,
                    None => match name.strip_suffix('-') {
                        Some(_) => continue,
                        None => return Err(BuildError::UnpairedDart(name.clone())),
                    },
                };
                let partner = format!("{stem}-");
                if !present.contains_key(partner.as_str()) {
                    return Err(BuildError::UnpairedDart(name.clone()));
                }
                pairing.push((name.clone(), partner));
            }
        }
        Self::build(cycles, &pairing)
    }

    /// Builds a graph directly from index cycles and an involution.
    /// `names` may be omitted, in which case edges are named `g1, g2, ...`
    /// in order of their smaller dart and darts get `+`/`-` suffixes.
    pub fn from_parts(
        cycles: Vec<Vec<Dart>>,
        sigma1: Vec<Dart>,
        names: Option<Vec<String>>,
    ) -> Result<Self, BuildError> {
        let n = sigma1.len();
        if n == 0 {
            return Err(BuildError::EmptyGraph);
        }
        let mut seen = vec![false; n];
        for cycle in &cycles {
            for &d in cycle {
                if d >= n || seen[d] {
                    return Err(BuildError::DuplicateDart(d.to_string()));
                }
                seen[d] = true;
            }
        }
        if let Some(d) = seen.iter().position(|&s| !s) {
            return Err(BuildError::UnpairedDart(d.to_string()));
        }
        for d in 0..n {
            let p = sigma1[d];
            if p >= n || sigma1[p] != d {
                return Err(BuildError::UnpairedDart(d.to_string()));
            }
            if p == d {
                return Err(BuildError::FixedPointInPairing(d.to_string()));
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(BuildError::UnpairedDart(format!(
                        "{} names for {} darts",
                        names.len(),
                        n
                    )));
                }
                let mut uniq: HashMap<&str, usize> = HashMap::new();
                for (d, name) in names.iter().enumerate() {
                    if uniq.insert(name.as_str(), d).is_some() {
                        return Err(BuildError::DuplicateDart(name.clone()));
                    }
                }
                names
            }
            None => generated_names(&sigma1),
        };
        let cycles = cycles.into_iter().filter(|c| !c.is_empty()).collect();
        Ok(Self::assemble(cycles, sigma1, names))
    }

    /// Internal assembly once all validation has passed.
    fn assemble(cycles: Vec<Vec<Dart>>, sigma1: Vec<Dart>, names: Vec<String>) -> Self {
        let n = names.len();
        let mut sigma0 = vec![0; n];
        let mut sigma0_inv = vec![0; n];
        let mut vertex_of = vec![0; n];
        let mut vertices: Vec<Vec<Dart>> = cycles.into_iter().map(rotate_to_min).collect();
        vertices.sort_by_key(|c| c[0]);
        for (v, cycle) in vertices.iter().enumerate() {
            for (i, &d) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                sigma0[d] = next;
                sigma0_inv[next] = d;
                vertex_of[d] = v;
            }
        }
        FatGraph {
            sigma0,
            sigma0_inv,
            sigma1,
            vertex_of,
            vertices,
            names,
        }
    }

    /// Number of darts. Always twice the number of edges.
    pub fn dart_count(&self) -> usize {
        self.sigma1.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Next dart counterclockwise around the vertex of `d`.
    pub fn sigma0(&self, d: Dart) -> Dart {
        self.sigma0[d]
    }

    /// Previous dart around the vertex of `d`.
    pub fn sigma0_inv(&self, d: Dart) -> Dart {
        self.sigma0_inv[d]
    }

    /// The other dart of the edge carrying `d`.
    pub fn sigma1(&self, d: Dart) -> Dart {
        self.sigma1[d]
    }

    /// Vertex cycles in a deterministic order: every cycle starts at its
    /// smallest dart and cycles are sorted by that dart.
    pub fn vertex_cycles(&self) -> &[Vec<Dart>] {
        &self.vertices
    }

    /// Index (into [`FatGraph::vertex_cycles`]) of the vertex holding `d`.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Degree of vertex `v`: the number of darts leaving it. Loops at `v`
    /// contribute two.
    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].len()
    }

    /// Name of dart `d`.
    pub fn name(&self, d: Dart) -> &str {
        &self.names[d]
    }

    /// All dart names, indexed by dart.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks up a dart by name.
    pub fn dart(&self, name: &str) -> Option<Dart> {
        self.names.iter().position(|n| n == name)
    }

    /// Translates a cycle of darts into names.
    pub fn name_cycle(&self, darts: &[Dart]) -> Vec<String> {
        darts.iter().map(|&d| self.names[d].clone()).collect()
    }

    /// True when every vertex has even degree at least four. Only such
    /// graphs decompose into the straight-ahead curve system.
    pub fn is_decorated(&self) -> bool {
        self.vertices
            .iter()
            .all(|c| c.len() >= 4 && c.len() % 2 == 0)
    }

    /// Applies a dart permutation: dart `d` becomes `perm[d]`, rotations
    /// and pairing are conjugated, names travel with their darts. The
    /// result is isomorphic to `self` by construction.
    pub fn relabel(&self, perm: &[Dart]) -> Result<FatGraph, RelabelError> {
        let n = self.dart_count();
        let err = RelabelError::NotABijection { expected: n };
        if perm.len() != n {
            return Err(err);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(err);
            }
            seen[p] = true;
        }
        let cycles = self
            .vertices
            .iter()
            .map(|c| c.iter().map(|&d| perm[d]).collect())
            .collect();
        let mut sigma1 = vec![0; n];
        let mut names = vec![String::new(); n];
        for d in 0..n {
            sigma1[perm[d]] = perm[self.sigma1[d]];
            names[perm[d]] = self.names[d].clone();
        }
        Ok(Self::assemble(cycles, sigma1, names))
    }

    /// The mirror image: every vertex rotation is reversed. The mirror is a
    /// valid fat graph but in general not isomorphic to the original, since
    /// isomorphisms here preserve the rotations' direction.
    pub fn mirror(&self) -> FatGraph {
        let cycles = self
            .vertices
            .iter()
            .map(|c| {
                let mut r = c.clone();
                r.reverse();
                r
            })
            .collect();
        Self::assemble(cycles, self.sigma1.clone(), self.names.clone())
    }
}

/// Rotates a cycle so its smallest element comes first.
fn rotate_to_min(cycle: Vec<Dart>) -> Vec<Dart> {
    let min_at = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &d)| d)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut rotated = Vec::with_capacity(cycle.len());
    rotated.extend_from_slice(&cycle[min_at..]);
    rotated.extend_from_slice(&cycle[..min_at]);
    rotated
}

/// Names edges `g1, g2, ...` in order of their smaller dart: that dart is
/// called `gK+` and its partner `gK-`.
fn generated_names(sigma1: &[Dart]) -> Vec<String> {
    let mut names = vec![String::new(); sigma1.len()];
    let mut k = 0;
    for d in 0..sigma1.len() {
        if d < sigma1[d] {
            k += 1;
            names[d] = format!("g{k}+");
            names[sigma1[d]] = format!("g{k}-");
        }
    }
    names
}

/// Convenience used throughout tests and constructions: turns `&[&[&str]]`
/// style literals into owned cycles.
pub fn cycles_of(cycles: &[&[&str]]) -> Vec<Vec<String>> {
    cycles
        .iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect()
}
