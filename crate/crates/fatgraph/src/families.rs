//! Named graphs and parametric families of filling pairs.
//!
//! The families here realize pairs of simple closed curves that jointly
//! fill a closed oriented surface: `g2_pair(k)` and `g3_pair(k)` produce
//! two-curve fillings of the genus-2 and genus-3 surfaces whose thickened
//! neighbourhood has exactly `k` boundary walks, and
//! [`connect_sum_gamma`] splices a fixed genus-2 filling onto an existing
//! pair at its anchor vertex, raising the genus by two while keeping the
//! boundary walks intact. Iterating the splice from the two base families
//! ([`filling_pair`]) covers every genus `g >= 2` and every admissible
//! boundary count.
//!
//! The splice and its boundary bookkeeping rely on a *normal labelling*:
//! the graph's edges are named `e1..em` and `f1..fm` so that the two
//! curves traverse them in index order, and some vertex reads
//! `(e1+, f1+, em-, fm-)`. Every two-curve filling admits such a labelling
//! with any vertex as the anchor; [`normalize_pair`] computes one.

use crate::boundary::boundary_walks;
use crate::curves::standard_curves;
use crate::error::FamilyError;
use crate::graph::FatGraph;

fn e_plus(i: usize) -> String {
    format!("e{i}+")
}
fn e_minus(i: usize) -> String {
    format!("e{i}-")
}
fn f_plus(i: usize) -> String {
    format!("f{i}+")
}
fn f_minus(i: usize) -> String {
    format!("f{i}-")
}

/// The theta graph: two trivalent vertices joined by three edges, with
/// opposite rotations. Its thickening is a three-holed sphere.
pub fn theta() -> FatGraph {
    FatGraph::from_plus_minus(&[
        vec!["e1+".into(), "e3+".into(), "e2+".into()],
        vec!["e1-".into(), "e2-".into(), "e3-".into()],
    ])
    .expect("valid by construction")
}

/// The theta graph with both vertices rotating the same way: one boundary
/// walk of length six, a one-holed torus.
pub fn theta_bar() -> FatGraph {
    FatGraph::from_plus_minus(&[
        vec!["e1+".into(), "e2+".into(), "e3+".into()],
        vec!["e1-".into(), "e2-".into(), "e3-".into()],
    ])
    .expect("valid by construction")
}

/// The four-vertex filling pair of the genus-2 surface whose complement is
/// two discs: curves `(e1, e2, e3, e4)` and `(f1, f2, f3, f4)` crossing at
/// every vertex. Coincides with [`g2_pair`]`(2)`.
pub fn f2_two_disc_pair() -> FatGraph {
    FatGraph::from_plus_minus(&[
        vec![e_plus(1), f_plus(1), e_minus(4), f_minus(4)],
        vec![e_plus(2), f_plus(2), e_minus(1), f_minus(1)],
        vec![e_plus(3), f_minus(3), e_minus(2), f_plus(4)],
        vec![e_plus(4), f_minus(2), e_minus(3), f_plus(3)],
    ])
    .expect("valid by construction")
}

/// The fixed genus-2 summand used by [`connect_sum_gamma`]: a six-vertex,
/// twelve-edge pair with curves `(x1..x6)` and `(y1..y6)` and four
/// boundary walks.
pub fn gamma() -> FatGraph {
    FatGraph::from_plus_minus(&[
        vec!["y1+".into(), "x6-".into(), "y6-".into(), "x1+".into()],
        vec!["y2+".into(), "x3+".into(), "y1-".into(), "x2-".into()],
        vec!["y3+".into(), "x2+".into(), "y2-".into(), "x1-".into()],
        vec!["y4+".into(), "x3-".into(), "y3-".into(), "x4+".into()],
        vec!["y5+".into(), "x6+".into(), "y4-".into(), "x5-".into()],
        vec!["y6+".into(), "x5+".into(), "y5-".into(), "x4-".into()],
    ])
    .expect("valid by construction")
}

/// A two-curve filling of the genus-2 surface with exactly `k >= 2`
/// boundary walks: `k + 2` vertices and `2k + 4` edges.
pub fn g2_pair(k: usize) -> Result<FatGraph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::KTooSmall {
            family: "g2_pair",
            min: 2,
            k,
        });
    }
    let mut cycles = Vec::new();
    if k % 2 == 0 {
        let m = k / 2 + 1;
        let last = 2 * m;
        cycles.push(vec![e_plus(1), f_plus(1), e_minus(last), f_minus(last)]);
        for i in 2..=m {
            cycles.push(vec![e_plus(i), f_plus(i), e_minus(i - 1), f_minus(i - 1)]);
        }
        for i in m + 1..=last {
            cycles.push(vec![
                e_plus(i),
                f_minus(3 * m - i),
                e_minus(i - 1),
                f_plus(3 * m - i + 1),
            ]);
        }
    } else {
        let n = (k - 1) / 2;
        let last = 2 * n + 3;
        cycles.push(vec![e_plus(1), f_plus(1), e_minus(last), f_minus(last)]);
        for i in 2..=2 * n + 2 {
            cycles.push(vec![
                e_plus(i),
                f_minus(2 * n + 3 - i),
                e_minus(i - 1),
                f_plus(2 * n + 4 - i),
            ]);
        }
        cycles.push(vec![
            e_plus(last),
            f_plus(last),
            e_minus(last - 1),
            f_minus(last - 1),
        ]);
    }
    Ok(FatGraph::from_plus_minus(&cycles).expect("valid by construction"))
}

/// A two-curve filling of the genus-3 surface with exactly `k >= 1`
/// boundary walks: `k + 4` vertices and `2k + 8` edges.
pub fn g3_pair(k: usize) -> Result<FatGraph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::KTooSmall {
            family: "g3_pair",
            min: 1,
            k,
        });
    }
    let mut cycles = Vec::new();
    // Both parities share the chain of crossings after the anchor; they
    // differ in where the chain stops and how the tail vertices close up.
    let (chain_end, bridge, last) = if k % 2 == 1 {
        let m = (k + 1) / 2;
        (2 * m + 1, 2 * m + 2, 2 * m + 3)
    } else {
        let m = k / 2;
        (m + 2, m + 3, 2 * m + 4)
    };
    cycles.push(vec![e_plus(1), f_plus(1), e_minus(last), f_minus(last)]);
    for i in 2..=chain_end {
        cycles.push(vec![e_plus(i), f_minus(i), e_minus(i - 1), f_plus(i + 1)]);
    }
    cycles.push(vec![
        e_plus(bridge),
        f_minus(1),
        e_minus(bridge - 1),
        f_plus(2),
    ]);
    for i in bridge + 1..=last {
        cycles.push(vec![e_plus(i), f_plus(i), e_minus(i - 1), f_minus(i - 1)]);
    }
    Ok(FatGraph::from_plus_minus(&cycles).expect("valid by construction"))
}

/// Checks the normal labelling and returns the curve length `m`
/// (= vertex count): edges named `e1..em` / `f1..fm`, every degree four,
/// exactly two simple curves, and an anchor vertex `(e1+, f1+, em-, fm-)`.
fn normal_info(g: &FatGraph) -> Result<usize, FamilyError> {
    let m = g.vertex_count();
    if m < 2 {
        return Err(FamilyError::BadAnchor(
            "a normally labelled pair needs at least two vertices".into(),
        ));
    }
    for v in 0..m {
        if g.degree(v) != 4 {
            return Err(FamilyError::NotPair(format!(
                "vertex {v} has degree {}, expected 4",
                g.degree(v)
            )));
        }
    }
    for i in 1..=m {
        for name in [e_plus(i), e_minus(i), f_plus(i), f_minus(i)] {
            if g.dart(&name).is_none() {
                return Err(FamilyError::BadAnchor(format!("missing dart `{name}`")));
            }
        }
    }
    let a = g.dart("e1+").expect("checked above");
    let around: Vec<&str> = [
        a,
        g.sigma0(a),
        g.sigma0(g.sigma0(a)),
        g.sigma0(g.sigma0(g.sigma0(a))),
    ]
    .iter()
    .map(|&d| g.name(d))
    .collect();
    if around != [e_plus(1), f_plus(1), e_minus(m), f_minus(m)] {
        return Err(FamilyError::BadAnchor(format!(
            "vertex at `e1+` reads ({}), expected (e1+, f1+, e{m}-, f{m}-)",
            around.join(", ")
        )));
    }
    let curves = standard_curves(g).map_err(|e| FamilyError::NotPair(e.to_string()))?;
    if curves.curve_count() != 2 {
        return Err(FamilyError::NotPair(format!(
            "expected 2 curves, found {}",
            curves.curve_count()
        )));
    }
    if !curves.all_simple() {
        return Err(FamilyError::NotPair("a curve visits a vertex twice".into()));
    }
    Ok(m)
}

/// Renames a two-simple-curve, four-regular graph into normal labelling
/// with `vertex` as the anchor: the curve through the vertex's smallest
/// dart becomes `e1..em` from that dart on, the other curve `f1..fm`.
/// Rotations and pairing are untouched, so the result is isomorphic to the
/// input, and renaming an already normal graph at its anchor is the
/// identity.
pub fn normalize_pair(g: &FatGraph, vertex: usize) -> Result<FatGraph, FamilyError> {
    if vertex >= g.vertex_count() {
        return Err(FamilyError::BadAnchor(format!(
            "vertex {vertex} out of range (graph has {})",
            g.vertex_count()
        )));
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) != 4 {
            return Err(FamilyError::NotPair(format!(
                "vertex {v} has degree {}, expected 4",
                g.degree(v)
            )));
        }
    }
    let curves = standard_curves(g).map_err(|e| FamilyError::NotPair(e.to_string()))?;
    if curves.curve_count() != 2 {
        return Err(FamilyError::NotPair(format!(
            "expected 2 curves, found {}",
            curves.curve_count()
        )));
    }
    if !curves.all_simple() {
        return Err(FamilyError::NotPair("a curve visits a vertex twice".into()));
    }

    // Both curves pass through every vertex exactly once (the two strands
    // at a vertex lie on different curves), so each has length m and the
    // anchor pattern (e1+, f1+, em-, fm-) appears automatically.
    let m = g.vertex_count();
    let a = g.vertex_cycles()[vertex][0];
    let b = g.sigma0(a);
    let mut names = vec![String::new(); g.dart_count()];
    for (start, plus, minus) in [
        (a, e_plus as fn(usize) -> String, e_minus as fn(usize) -> String),
        (b, f_plus, f_minus),
    ] {
        let mut d = start;
        for i in 1..=m {
            names[d] = plus(i);
            names[g.sigma1(d)] = minus(i);
            d = g.curve_next(d);
        }
        debug_assert_eq!(d, start);
    }
    debug_assert!(names.iter().all(|n| !n.is_empty()));
    let sigma1 = (0..g.dart_count()).map(|d| g.sigma1(d)).collect();
    let renamed = FatGraph::from_parts(g.vertex_cycles().to_vec(), sigma1, Some(names))
        .expect("renaming preserves validity");
    debug_assert!(m < 2 || normal_info(&renamed).is_ok());
    Ok(renamed)
}

/// Splices [`gamma`] onto a normally labelled pair at its anchor vertex.
///
/// The anchor vertex and gamma's vertex `(y1+, x6-, y6-, x1+)` are deleted;
/// edges `e1`/`x1`, `em`/`x6`, `f1`/`y6` and `fm`/`y1` are concatenated
/// across the gap into edges named `x1-*e1`, `e{m}*x6-`, `y6*f1` and
/// `f{m}*y1`, and the remaining gamma edges keep their names. The result
/// has four more vertices, each curve grows by four edges, the boundary
/// walk count is unchanged and the genus rises by two.
pub fn connect_sum_gamma(g: &FatGraph) -> Result<FatGraph, FamilyError> {
    let m = normal_info(g)?;
    let anchor = g.vertex_of(g.dart("e1+").expect("normal labelling checked"));
    let e_last = e_plus(m);
    let f_last = f_plus(m);
    let spliced_e1 = "x1-*e1".to_string();
    let spliced_em = format!("e{m}*x6-");
    let spliced_f1 = "y6*f1".to_string();
    let spliced_fm = format!("f{m}*y1");
    let substitute = |name: &str| -> String {
        if name == "e1-" {
            format!("{spliced_e1}-")
        } else if name == e_last {
            format!("{spliced_em}+")
        } else if name == "f1-" {
            format!("{spliced_f1}-")
        } else if name == f_last {
            format!("{spliced_fm}+")
        } else {
            name.to_string()
        }
    };

    let mut cycles: Vec<Vec<String>> = Vec::with_capacity(m + 4);
    for (v, cycle) in g.vertex_cycles().iter().enumerate() {
        if v == anchor {
            continue;
        }
        cycles.push(cycle.iter().map(|&d| substitute(g.name(d))).collect());
    }
    cycles.push(vec![
        "y2+".into(),
        "x3+".into(),
        format!("{spliced_fm}-"),
        "x2-".into(),
    ]);
    cycles.push(vec![
        "y3+".into(),
        "x2+".into(),
        "y2-".into(),
        format!("{spliced_e1}+"),
    ]);
    cycles.push(vec!["y4+".into(), "x3-".into(), "y3-".into(), "x4+".into()]);
    cycles.push(vec![
        "y5+".into(),
        format!("{spliced_em}-"),
        "y4-".into(),
        "x5-".into(),
    ]);
    cycles.push(vec![
        format!("{spliced_f1}+"),
        "x5+".into(),
        "y5-".into(),
        "x4-".into(),
    ]);
    Ok(FatGraph::from_plus_minus(&cycles).expect("splice of a normally labelled pair is valid"))
}

/// Predicts the boundary walks of [`connect_sum_gamma`]`(g)` from the
/// walks of `g` alone, by rewriting each passage through the anchor
/// vertex.
///
/// Every walk of a normally labelled pair steps through the anchor in one
/// of four dart pairs; each pair is replaced by the detour the splice
/// inserts, and all other darts pass through unchanged (the spliced edges
/// inherit the concatenated names). The walks come back as name cycles and
/// should be compared cyclically.
pub fn predict_boundaries(g: &FatGraph) -> Result<Vec<Vec<String>>, FamilyError> {
    let m = normal_info(g)?;
    let spliced_em = format!("e{m}*x6-");
    let spliced_fm = format!("f{m}*y1");
    let heads = [
        "f1+".to_string(),
        e_minus(m),
        f_minus(m),
        "e1+".to_string(),
    ];
    let tails = [
        "e1-".to_string(),
        "f1-".to_string(),
        e_plus(m),
        f_plus(m),
    ];
    let detours: [Vec<String>; 4] = [
        vec![
            "y6*f1+".into(),
            "x4+".into(),
            "y3+".into(),
            "x1-*e1-".into(),
        ],
        vec![
            format!("{spliced_em}-"),
            "y5-".into(),
            "x5-".into(),
            "y4+".into(),
            "x4-".into(),
            "y5+".into(),
            "x5+".into(),
            "y6*f1-".into(),
        ],
        vec![
            format!("{spliced_fm}-"),
            "x3-".into(),
            "y4-".into(),
            format!("{spliced_em}+"),
        ],
        vec![
            "x1-*e1+".into(),
            "y2+".into(),
            "x2+".into(),
            "y3-".into(),
            "x3+".into(),
            "y2-".into(),
            "x2-".into(),
            format!("{spliced_fm}+"),
        ],
    ];

    let mut predicted = Vec::new();
    for walk in boundary_walks(g) {
        let names: Vec<&str> = walk.darts().iter().map(|&d| g.name(d)).collect();
        let len = names.len();
        let start = (0..len)
            .find(|&i| !tails.iter().any(|t| t == names[i]))
            .ok_or_else(|| {
                FamilyError::RuleNotApplicable("walk consists entirely of rule tails".into())
            })?;
        let mut result = Vec::new();
        let mut i = 0;
        while i < len {
            let cur = names[(start + i) % len];
            if let Some(r) = heads.iter().position(|h| h == cur) {
                let next = names[(start + i + 1) % len];
                if next != tails[r] {
                    return Err(FamilyError::RuleNotApplicable(format!(
                        "`{cur}` is followed by `{next}`, expected `{}`",
                        tails[r]
                    )));
                }
                result.extend(detours[r].iter().cloned());
                i += 2;
            } else if tails.iter().any(|t| t == cur) {
                return Err(FamilyError::RuleNotApplicable(format!(
                    "`{cur}` appears without its rule head"
                )));
            } else {
                result.push(cur.to_string());
                i += 1;
            }
        }
        predicted.push(result);
    }
    Ok(predicted)
}

/// Validated `(genus, boundary walks)` parameters for [`filling_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub genus: usize,
    pub boundaries: usize,
}

impl FamilyParams {
    /// Admissible parameters: genus at least two, at least one boundary
    /// walk, excluding one boundary walk on even genus (in particular the
    /// genus-2 minimal case, which no two-curve filling realizes).
    pub fn new(genus: usize, boundaries: usize) -> Result<Self, FamilyError> {
        if genus < 2 {
            return Err(FamilyError::GenusTooSmall { genus });
        }
        if boundaries < 1 {
            return Err(FamilyError::KTooSmall {
                family: "filling_pair",
                min: 1,
                k: boundaries,
            });
        }
        if boundaries == 1 && genus == 2 {
            return Err(FamilyError::Excluded21);
        }
        if boundaries == 1 && genus % 2 == 0 {
            return Err(FamilyError::EvenGenusKOne { genus });
        }
        Ok(FamilyParams { genus, boundaries })
    }

    /// Vertex count of the constructed pair: the curves cross
    /// `2·genus - 2 + boundaries` times.
    pub fn vertex_count(&self) -> usize {
        2 * self.genus - 2 + self.boundaries
    }

    /// Edge count: twice the vertex count.
    pub fn edge_count(&self) -> usize {
        2 * self.vertex_count()
    }
}

/// A two-curve filling of the genus-`g` surface with exactly `k` boundary
/// walks, for every admissible `(g, k)` (see [`FamilyParams::new`]).
///
/// Starts from [`g2_pair`] or [`g3_pair`] according to the parity of `g`
/// and splices [`gamma`] on `(g - base) / 2` times, renaming to normal
/// labelling between rounds.
pub fn filling_pair(genus: usize, boundaries: usize) -> Result<FatGraph, FamilyError> {
    let params = FamilyParams::new(genus, boundaries)?;
    let base = if genus % 2 == 0 { 2 } else { 3 };
    let mut g = if base == 2 {
        g2_pair(boundaries)?
    } else {
        g3_pair(boundaries)?
    };
    for _ in 0..(genus - base) / 2 {
        g = connect_sum_gamma(&g)?;
        g = normalize_pair(&g, 0)?;
    }
    debug_assert_eq!(g.vertex_count(), params.vertex_count());
    Ok(g)
}
