//! Exhaustive census of four-regular fat graphs on a given number of
//! vertices.
//!
//! The rotation system is fixed: vertex `v` owns darts `4v..4v+4` in cyclic
//! order, so graphs correspond to fixed-point-free involutions on the dart
//! set (`(4v-1)!!` of them) and every four-regular fat graph on `v`
//! vertices appears. Each candidate's invariants are computed on raw
//! arrays, filters are applied (all of them are isomorphism-invariant),
//! and survivors are deduplicated by canonical code into a sorted map, so
//! the output order is deterministic and independent of how the work is
//! split across threads.
//!
//! The census is sharded by the partner of dart 0 (`4v - 1` shards); with
//! `jobs > 1` shards run on a rayon pool and the per-shard maps are merged
//! by key, which yields bit-identical results to a sequential run.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::CensusError;
use crate::graph::{Dart, FatGraph};
use crate::iso::{CanonicalCode, CodeBuilder};

/// Vertex ceiling used when `FATGRAPH_ENUM_LIMIT` is not set.
pub const DEFAULT_VERTEX_LIMIT: usize = 5;

/// Current vertex ceiling for the census. `(4v-1)!!` grows fast; the
/// default of 5 keeps full runs in the minutes range, and the environment
/// variable `FATGRAPH_ENUM_LIMIT` overrides it for bigger machines.
pub fn vertex_limit() -> usize {
    std::env::var("FATGRAPH_ENUM_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_VERTEX_LIMIT)
}

/// Isomorphism-invariant predicates a census class must satisfy.
/// `None` fields are unconstrained. `lengths` is compared against the
/// sorted multiset of curve lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusFilter {
    pub connected: bool,
    pub curves: Option<usize>,
    pub min_curves: Option<usize>,
    pub boundaries: Option<usize>,
    pub simple: Option<bool>,
    pub lengths: Option<Vec<usize>>,
}

impl CensusFilter {
    pub fn matches(&self, s: &ClassSummary) -> bool {
        if self.connected && !s.connected {
            return false;
        }
        if let Some(c) = self.curves {
            if s.curve_count != c {
                return false;
            }
        }
        if let Some(c) = self.min_curves {
            if s.curve_count < c {
                return false;
            }
        }
        if let Some(b) = self.boundaries {
            if s.boundary_components != b {
                return false;
            }
        }
        if let Some(simple) = self.simple {
            if s.all_simple != simple {
                return false;
            }
        }
        if let Some(lengths) = &self.lengths {
            if &s.curve_lengths != lengths {
                return false;
            }
        }
        true
    }
}

/// Invariants shared by every member of an isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub boundary_components: usize,
    /// Number of length-2 boundary walks.
    pub bigons: usize,
    pub curve_count: usize,
    pub all_simple: bool,
    /// Sorted multiset of curve lengths.
    pub curve_lengths: Vec<usize>,
    /// Genus of the capped surface; absent for disconnected graphs.
    pub genus: Option<u64>,
}

/// One isomorphism class found by the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusClass {
    /// Sorted canonical codes of the connected components; a single code
    /// for connected classes.
    pub codes: Vec<CanonicalCode>,
    pub summary: ClassSummary,
    /// Number of labelled graphs (pairings) in this class.
    pub labeled_count: u64,
}

impl CensusClass {
    /// Stable textual key: component code hexes joined by `.`.
    pub fn key_hex(&self) -> String {
        self.codes
            .iter()
            .map(CanonicalCode::to_hex)
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Rebuilds a canonical representative graph of the class.
    pub fn representative(&self) -> FatGraph {
        let mut cycles: Vec<Vec<Dart>> = Vec::new();
        let mut sigma1: Vec<Dart> = Vec::new();
        for code in &self.codes {
            let g = code.to_graph();
            let offset = sigma1.len();
            for cycle in g.vertex_cycles() {
                cycles.push(cycle.iter().map(|&d| d + offset).collect());
            }
            for d in 0..g.dart_count() {
                sigma1.push(g.sigma1(d) + offset);
            }
        }
        FatGraph::from_parts(cycles, sigma1, None)
            .expect("census codes decode to valid graphs")
    }
}

/// The standard rotation: dart `d` belongs to vertex `d / 4` and the four
/// darts of a vertex form one cycle.
fn std_sigma0(n: usize) -> Vec<Dart> {
    (0..n).map(|d| (d & !3) | ((d + 1) & 3)).collect()
}

fn std_sigma0_inv(d: Dart) -> Dart {
    (d & !3) | ((d + 3) & 3)
}

/// Scratch buffers reused across the census inner loop. Visited marks use
/// monotonically increasing stamps instead of clearing, so one candidate
/// costs no allocations.
struct Scratch {
    mark: Vec<u64>,
    vertex_mark: Vec<u64>,
    stamp: u64,
    queue: Vec<Dart>,
    builder: CodeBuilder,
    component: Vec<Dart>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            mark: vec![0; n],
            vertex_mark: vec![0; n / 4],
            stamp: 0,
            queue: Vec::with_capacity(n),
            builder: CodeBuilder::new(),
            component: Vec::with_capacity(n),
        }
    }

    fn next_stamp(&mut self) -> u64 {
        self.stamp += 1;
        self.stamp
    }
}

/// Invariants of one labelled candidate, computed on raw arrays. Curves
/// use the degree-4 specialization of the straight-ahead rule: the next
/// dart is the one opposite the arriving dart, `sigma1(d) ^ 2`.
fn summarize(sigma1: &[Dart], scratch: &mut Scratch) -> ClassSummary {
    let n = sigma1.len();

    // Connectivity by search from dart 0.
    let stamp = scratch.next_stamp();
    scratch.queue.clear();
    scratch.queue.push(0);
    scratch.mark[0] = stamp;
    let mut head = 0;
    while head < scratch.queue.len() {
        let d = scratch.queue[head];
        head += 1;
        for next in [(d & !3) | ((d + 1) & 3), sigma1[d]] {
            if scratch.mark[next] != stamp {
                scratch.mark[next] = stamp;
                scratch.queue.push(next);
            }
        }
    }
    let connected = scratch.queue.len() == n;

    // Boundary walks.
    let stamp = scratch.next_stamp();
    let mut boundary_components = 0;
    let mut bigons = 0;
    for start in 0..n {
        if scratch.mark[start] == stamp {
            continue;
        }
        let mut len = 0;
        let mut d = start;
        loop {
            scratch.mark[d] = stamp;
            len += 1;
            d = sigma1[std_sigma0_inv(d)];
            if d == start {
                break;
            }
        }
        boundary_components += 1;
        if len == 2 {
            bigons += 1;
        }
    }

    // Curves, merging each orbit with its reversal.
    let stamp = scratch.next_stamp();
    let mut curve_lengths = Vec::new();
    let mut all_simple = true;
    for start in 0..n {
        if scratch.mark[start] == stamp {
            continue;
        }
        let vstamp = scratch.next_stamp();
        let mut len = 0;
        let mut simple = true;
        let mut d = start;
        loop {
            scratch.mark[d] = stamp;
            scratch.mark[sigma1[d]] = stamp;
            let v = d >> 2;
            if scratch.vertex_mark[v] == vstamp {
                simple = false;
            }
            scratch.vertex_mark[v] = vstamp;
            len += 1;
            d = sigma1[d] ^ 2;
            if d == start {
                break;
            }
        }
        curve_lengths.push(len);
        all_simple &= simple;
    }
    curve_lengths.sort_unstable();

    let vertices = n / 4;
    let edges = n / 2;
    let genus = if connected {
        let chi = vertices as i64 - edges as i64 + boundary_components as i64;
        Some(((2 - chi) / 2) as u64)
    } else {
        None
    };
    ClassSummary {
        vertices,
        edges,
        connected,
        boundary_components,
        bigons,
        curve_count: curve_lengths.len(),
        all_simple,
        curve_lengths,
        genus,
    }
}

/// Canonical key of a candidate: one code per connected component, sorted.
fn class_codes(
    sigma0: &[Dart],
    sigma1: &[Dart],
    connected: bool,
    scratch: &mut Scratch,
) -> Vec<CanonicalCode> {
    let n = sigma1.len();
    if connected {
        scratch.component.clear();
        scratch.component.extend(0..n);
        let bytes = scratch.builder.component_code(sigma0, sigma1, &scratch.component);
        return vec![CanonicalCode::from_bytes(bytes)];
    }
    let stamp = scratch.next_stamp();
    let mut codes = Vec::new();
    for start in 0..n {
        if scratch.mark[start] == stamp {
            continue;
        }
        scratch.component.clear();
        scratch.component.push(start);
        scratch.mark[start] = stamp;
        let mut head = 0;
        while head < scratch.component.len() {
            let d = scratch.component[head];
            head += 1;
            for next in [sigma0[d], sigma1[d]] {
                if scratch.mark[next] != stamp {
                    scratch.mark[next] = stamp;
                    scratch.component.push(next);
                }
            }
        }
        scratch.component.sort_unstable();
        let bytes = scratch.builder.component_code(sigma0, sigma1, &scratch.component);
        codes.push(CanonicalCode::from_bytes(bytes));
    }
    codes.sort();
    codes
}

type ClassMap = BTreeMap<Vec<CanonicalCode>, (ClassSummary, u64)>;

/// Enumerates all fixed-point-free involutions extending the partial
/// assignment in `sigma1`, invoking `f` on each complete one.
fn complete_involutions<F: FnMut(&[Dart])>(sigma1: &mut [Dart], f: &mut F) {
    const UNSET: Dart = usize::MAX;
    let i = match sigma1.iter().position(|&p| p == UNSET) {
        None => {
            f(sigma1);
            return;
        }
        Some(i) => i,
    };
    for j in i + 1..sigma1.len() {
        if sigma1[j] != UNSET {
            continue;
        }
        sigma1[i] = j;
        sigma1[j] = i;
        complete_involutions(sigma1, f);
        sigma1[i] = UNSET;
        sigma1[j] = UNSET;
    }
}

fn run_shard(n: usize, partner_of_zero: usize, filter: &CensusFilter) -> ClassMap {
    const UNSET: Dart = usize::MAX;
    let sigma0 = std_sigma0(n);
    let mut scratch = Scratch::new(n);
    let mut map = ClassMap::new();
    let mut sigma1 = vec![UNSET; n];
    sigma1[0] = partner_of_zero;
    sigma1[partner_of_zero] = 0;
    complete_involutions(&mut sigma1, &mut |assignment: &[Dart]| {
        let summary = summarize(assignment, &mut scratch);
        if !filter.matches(&summary) {
            return;
        }
        let codes = class_codes(&sigma0, assignment, summary.connected, &mut scratch);
        match map.get_mut(&codes) {
            Some((existing, count)) => {
                debug_assert_eq!(existing, &summary);
                *count += 1;
            }
            None => {
                map.insert(codes, (summary, 1));
            }
        }
    });
    map
}

fn merge_maps(mut into: ClassMap, from: ClassMap) -> ClassMap {
    for (codes, (summary, count)) in from {
        match into.get_mut(&codes) {
            Some((existing, total)) => {
                debug_assert_eq!(existing, &summary);
                *total += count;
            }
            None => {
                into.insert(codes, (summary, count));
            }
        }
    }
    into
}

/// Enumerates all four-regular fat graphs on `vertices` vertices matching
/// `filter`, one entry per isomorphism class, sorted by canonical code.
/// `jobs <= 1` runs sequentially; larger values use that many threads with
/// identical output.
pub fn enumerate(
    vertices: usize,
    filter: &CensusFilter,
    jobs: usize,
) -> Result<Vec<CensusClass>, CensusError> {
    if vertices == 0 {
        return Err(CensusError::EmptyCensus);
    }
    let limit = vertex_limit();
    if vertices > limit {
        return Err(CensusError::TooLarge { vertices, limit });
    }
    let n = 4 * vertices;
    let shards: Vec<usize> = (1..n).collect();
    let merged = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build thread pool");
        pool.install(|| {
            shards
                .par_iter()
                .map(|&p| run_shard(n, p, filter))
                .reduce(ClassMap::new, merge_maps)
        })
    } else {
        shards
            .into_iter()
            .map(|p| run_shard(n, p, filter))
            .fold(ClassMap::new(), merge_maps)
    };
    Ok(merged
        .into_iter()
        .map(|(codes, (summary, labeled_count))| CensusClass {
            codes,
            summary,
            labeled_count,
        })
        .collect())
}

/// One row of the classification table: all classes sharing a curve
/// count, boundary count, simplicity flag and length multiset.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub curve_count: usize,
    pub boundary_components: usize,
    pub all_simple: bool,
    pub curve_lengths: Vec<usize>,
    pub class_count: u64,
    pub labeled_count: u64,
    /// Classes in this row without any length-2 boundary walk.
    pub bigon_free_classes: u64,
    pub representatives: Vec<Representative>,
}

/// A class representative inside a table row.
#[derive(Debug, Clone, Serialize)]
pub struct Representative {
    /// Canonical code in hex.
    pub code: String,
    /// Number of length-2 boundary walks.
    pub bigons: usize,
    pub genus: Option<u64>,
    /// The representative graph in the interchange JSON shape.
    pub graph: serde_json::Value,
}

/// Histogram of all connected classes on `vertices` vertices, keyed by
/// `(curve count, boundary count, simplicity, curve lengths)`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationTable {
    pub vertices: usize,
    pub total_classes: u64,
    pub total_labeled: u64,
    pub rows: Vec<TableRow>,
}

impl ClassificationTable {
    /// Plain-text rendering with aligned columns; representatives are
    /// reported by code only.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!(
            "connected 4-regular fat graphs on {} vertices: {} classes ({} labelled graphs)",
            self.vertices, self.total_classes, self.total_labeled
        ));
        lines.push(format!(
            "{:<7} {:<11} {:<7} {:<14} {:>8} {:>10} {:>11}",
            "curves", "boundaries", "simple", "lengths", "classes", "labelled", "bigon-free"
        ));
        for row in &self.rows {
            let lengths = row
                .curve_lengths
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",");
            lines.push(format!(
                "{:<7} {:<11} {:<7} {:<14} {:>8} {:>10} {:>11}",
                row.curve_count,
                row.boundary_components,
                if row.all_simple { "yes" } else { "no" },
                lengths,
                row.class_count,
                row.labeled_count,
                row.bigon_free_classes
            ));
        }
        lines.join("\n")
    }
}

/// Builds the classification table for connected graphs on `vertices`
/// vertices.
pub fn classify_table(vertices: usize, jobs: usize) -> Result<ClassificationTable, CensusError> {
    let filter = CensusFilter {
        connected: true,
        ..CensusFilter::default()
    };
    let classes = enumerate(vertices, &filter, jobs)?;
    let mut rows: BTreeMap<(usize, usize, bool, Vec<usize>), TableRow> = BTreeMap::new();
    let mut total_classes = 0;
    let mut total_labeled = 0;
    for class in &classes {
        let s = &class.summary;
        total_classes += 1;
        total_labeled += class.labeled_count;
        let key = (
            s.curve_count,
            s.boundary_components,
            s.all_simple,
            s.curve_lengths.clone(),
        );
        let row = rows.entry(key).or_insert_with(|| TableRow {
            curve_count: s.curve_count,
            boundary_components: s.boundary_components,
            all_simple: s.all_simple,
            curve_lengths: s.curve_lengths.clone(),
            class_count: 0,
            labeled_count: 0,
            bigon_free_classes: 0,
            representatives: Vec::new(),
        });
        row.class_count += 1;
        row.labeled_count += class.labeled_count;
        if s.bigons == 0 {
            row.bigon_free_classes += 1;
        }
        row.representatives.push(Representative {
            code: class.key_hex(),
            bigons: s.bigons,
            genus: s.genus,
            graph: crate::io::graph_to_json_value(&class.representative())
                .expect("generated names are representable"),
        });
    }
    Ok(ClassificationTable {
        vertices,
        total_classes,
        total_labeled,
        rows: rows.into_values().collect(),
    })
}
