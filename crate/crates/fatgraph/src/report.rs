//! Aggregated per-graph report used by the command line.

use serde::Serialize;

use crate::boundary::{boundary_walks, surface_invariants, SurfaceInvariants};
use crate::curves::{classify_filling, standard_curves, FillingReport};
use crate::graph::FatGraph;

#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub length: usize,
    pub simple: bool,
    pub darts: Vec<String>,
}

/// Everything the `report` subcommand prints, in one serializable value.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub invariants: SurfaceInvariants,
    pub decorated: bool,
    pub walks: Vec<Vec<String>>,
    /// Curve decomposition, absent when some degree is odd or below four.
    pub curves: Option<Vec<CurveReport>>,
    pub filling: FillingReport,
}

pub fn report(g: &FatGraph) -> Report {
    let walks = boundary_walks(g)
        .iter()
        .map(|w| g.name_cycle(w.darts()))
        .collect();
    let curves = standard_curves(g).ok().map(|dec| {
        dec.curves
            .iter()
            .map(|c| CurveReport {
                length: c.len(),
                simple: c.simple,
                darts: g.name_cycle(&c.darts),
            })
            .collect()
    });
    Report {
        invariants: surface_invariants(g),
        decorated: g.is_decorated(),
        walks,
        curves,
        filling: classify_filling(g),
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let inv = &self.invariants;
        let mut lines = vec![
            format!("vertices              {}", inv.vertices),
            format!("edges                 {}", inv.edges),
            format!("boundary components   {}", inv.boundary_components),
            format!("euler characteristic  {}", inv.euler_characteristic),
            format!(
                "genus                 {}",
                match inv.genus {
                    Some(g) => g.to_string(),
                    None => "n/a (disconnected)".to_string(),
                }
            ),
            format!(
                "connected             {}",
                if inv.connected { "yes" } else { "no" }
            ),
            format!(
                "decorated             {}",
                if self.decorated { "yes" } else { "no" }
            ),
            format!("bigons                {}", self.filling.bigon_count),
        ];
        lines.push("boundary walks:".to_string());
        for (i, walk) in self.walks.iter().enumerate() {
            lines.push(format!(
                "  {} (length {}): {}",
                i + 1,
                walk.len(),
                walk.join(" ")
            ));
        }
        match &self.curves {
            None => lines.push("curves: undefined (some vertex degree is odd or below 4)".into()),
            Some(curves) => {
                lines.push("curves:".to_string());
                for (i, c) in curves.iter().enumerate() {
                    lines.push(format!(
                        "  {} (length {}, {}): {}",
                        i + 1,
                        c.length,
                        if c.simple { "simple" } else { "not simple" },
                        c.darts.join(" ")
                    ));
                }
            }
        }
        lines.push(format!(
            "filling pair          {}",
            if self.filling.is_filling_representation {
                if self.filling.is_minimal {
                    "yes (minimal: one boundary walk)"
                } else {
                    "yes"
                }
            } else {
                "no"
            }
        ));
        lines.join("\n")
    }
}
