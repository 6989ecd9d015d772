//! Canonical codes and isomorphism testing.
//!
//! Two fat graphs are isomorphic when some dart bijection conjugates both
//! the rotation and the pairing, i.e. it preserves the cyclic order at
//! every vertex and matches edges to edges. Mirror images reverse the
//! rotations and do *not* count as isomorphic; [`are_isomorphic_up_to_reflection`]
//! offers the coarser notion explicitly.
//!
//! The canonical code of a connected graph is computed by relabelling the
//! darts by breadth-first discovery order from every possible root (the
//! neighbours of `d` are explored as `sigma0(d)` then `sigma1(d)`) and
//! keeping the lexicographically smallest transcript of the relabelled
//! permutations. A relabelling from a root is unique, so two connected
//! graphs are isomorphic exactly when their codes are equal: the code is a
//! complete invariant, and decoding it yields a canonical representative
//! of the class.

use crate::boundary::{connected_components, is_connected};
use crate::error::IsoError;
use crate::graph::{Dart, FatGraph};

/// A complete isomorphism invariant of a connected fat graph.
///
/// Codes are plain byte strings: the dart count followed by the rotation
/// and pairing images of each dart in canonical order. They order first by
/// dart count, then lexicographically, and serialize as lowercase hex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub(crate) fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex of the code bytes, the form used in reports.
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    /// Number of darts of the encoded graph.
    pub fn dart_count(&self) -> usize {
        u32::from_le_bytes(self.0[..4].try_into().unwrap()) as usize
    }

    /// Rebuilds the canonical representative the code describes, with
    /// generated edge names.
    pub fn to_graph(&self) -> FatGraph {
        let n = self.dart_count();
        let mut sigma0 = Vec::with_capacity(n);
        let mut sigma1 = Vec::with_capacity(n);
        let body = &self.0[4..];
        for i in 0..n {
            sigma0.push(decode_entry(body, n, 2 * i));
            sigma1.push(decode_entry(body, n, 2 * i + 1));
        }
        let cycles = permutation_cycles(&sigma0);
        FatGraph::from_parts(cycles, sigma1, None)
            .expect("a canonical code always decodes to a valid graph")
    }
}

fn entry_width(n: usize) -> usize {
    if n <= 256 {
        1
    } else if n <= 65536 {
        2
    } else {
        4
    }
}

fn decode_entry(body: &[u8], n: usize, k: usize) -> usize {
    match entry_width(n) {
        1 => body[k] as usize,
        2 => u16::from_le_bytes(body[2 * k..2 * k + 2].try_into().unwrap()) as usize,
        _ => u32::from_le_bytes(body[4 * k..4 * k + 4].try_into().unwrap()) as usize,
    }
}

fn encode(n: usize, entries: &[usize]) -> Vec<u8> {
    let width = entry_width(n);
    let mut out = Vec::with_capacity(4 + entries.len() * width);
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for &e in entries {
        match width {
            1 => out.push(e as u8),
            2 => out.extend_from_slice(&(e as u16).to_le_bytes()),
            _ => out.extend_from_slice(&(e as u32).to_le_bytes()),
        }
    }
    out
}

/// Splits a permutation into its cycles, each rotated to its minimum and
/// sorted by minimum.
fn permutation_cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            seen[d] = true;
            cycle.push(d);
            d = perm[d];
            if d == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    cycles
}

/// Reusable scratch space for code computation, shared with the census.
pub(crate) struct CodeBuilder {
    label: Vec<usize>,
    order: Vec<Dart>,
    cur: Vec<usize>,
    best: Vec<usize>,
}

impl CodeBuilder {
    pub fn new() -> Self {
        CodeBuilder {
            label: Vec::new(),
            order: Vec::new(),
            cur: Vec::new(),
            best: Vec::new(),
        }
    }

    /// Minimum rooted code of a connected dart set. `roots` must list the
    /// darts of one connected component.
    pub fn component_code(
        &mut self,
        sigma0: &[usize],
        sigma1: &[usize],
        roots: &[Dart],
    ) -> Vec<u8> {
        let n = roots.len();
        self.best.clear();
        for &root in roots {
            self.label.clear();
            self.label.resize(sigma0.len(), usize::MAX);
            self.order.clear();
            self.label[root] = 0;
            self.order.push(root);
            let mut head = 0;
            while head < self.order.len() {
                let d = self.order[head];
                head += 1;
                for nb in [sigma0[d], sigma1[d]] {
                    if self.label[nb] == usize::MAX {
                        self.label[nb] = self.order.len();
                        self.order.push(nb);
                    }
                }
            }
            debug_assert_eq!(self.order.len(), n);
            self.cur.clear();
            for i in 0..n {
                let d = self.order[i];
                self.cur.push(self.label[sigma0[d]]);
                self.cur.push(self.label[sigma1[d]]);
            }
            if self.best.is_empty() || self.cur < self.best {
                std::mem::swap(&mut self.best, &mut self.cur);
            }
        }
        encode(n, &self.best)
    }
}

fn sigma_tables(g: &FatGraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.dart_count();
    let mut sigma0 = Vec::with_capacity(n);
    let mut sigma1 = Vec::with_capacity(n);
    for d in 0..n {
        sigma0.push(g.sigma0(d));
        sigma1.push(g.sigma1(d));
    }
    (sigma0, sigma1)
}

/// Canonical code of a connected graph. Fails with
/// [`IsoError::Disconnected`] otherwise.
pub fn canonical_code(g: &FatGraph) -> Result<CanonicalCode, IsoError> {
    if !is_connected(g) {
        return Err(IsoError::Disconnected);
    }
    let (sigma0, sigma1) = sigma_tables(g);
    let roots: Vec<Dart> = (0..g.dart_count()).collect();
    Ok(CanonicalCode(CodeBuilder::new().component_code(
        &sigma0, &sigma1, &roots,
    )))
}

/// Canonical codes of every connected component, sorted. Two graphs are
/// isomorphic exactly when these lists coincide.
pub fn component_codes(g: &FatGraph) -> Vec<CanonicalCode> {
    let (sigma0, sigma1) = sigma_tables(g);
    let mut builder = CodeBuilder::new();
    let mut codes: Vec<CanonicalCode> = connected_components(g)
        .iter()
        .map(|comp| CanonicalCode(builder.component_code(&sigma0, &sigma1, comp)))
        .collect();
    codes.sort();
    codes
}

/// Whether two connected graphs are isomorphic. Fails with
/// [`IsoError::Disconnected`] when either input is disconnected; use
/// [`are_isomorphic_components`] for the general case.
pub fn are_isomorphic(g: &FatGraph, h: &FatGraph) -> Result<bool, IsoError> {
    Ok(canonical_code(g)? == canonical_code(h)?)
}

/// Whether two graphs, connected or not, are isomorphic: their sorted
/// component code lists must coincide.
pub fn are_isomorphic_components(g: &FatGraph, h: &FatGraph) -> bool {
    component_codes(g) == component_codes(h)
}

/// Whether two graphs agree up to orientation: isomorphic as they stand or
/// after mirroring one of them.
pub fn are_isomorphic_up_to_reflection(g: &FatGraph, h: &FatGraph) -> bool {
    are_isomorphic_components(g, h) || are_isomorphic_components(g, &h.mirror())
}
