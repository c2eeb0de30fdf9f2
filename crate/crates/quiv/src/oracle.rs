//! Brute-force enumeration of hom-sets and test catalogues.
//!
//! This is the ground truth the universal properties are certified against:
//! [`enumerate_homs`] tries every pair of a vertex function and an edge
//! function and keeps the pairs whose squares commute, with no shortcuts.
//! Size caps fail loudly instead of truncating, since a truncated
//! enumeration would silently weaken a uniqueness certificate.

use thiserror::Error;

use crate::quiver::{Quiver, QuiverMorphism};
use crate::set::{FiniteSet, FunctionRange, Label, SetFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} search space has {required} candidates, exceeding the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u64,
    },
}

/// Bounds on the candidate search space of [`enumerate_homs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCaps {
    max_vertex_maps: u64,
    max_edge_maps: u64,
    max_total_pairs: u64,
}

impl SizeCaps {
    /// All three caps must be positive.
    pub fn new(max_vertex_maps: u64, max_edge_maps: u64, max_total_pairs: u64) -> SizeCaps {
        assert!(
            max_vertex_maps > 0 && max_edge_maps > 0 && max_total_pairs > 0,
            "size caps must be positive"
        );
        SizeCaps {
            max_vertex_maps,
            max_edge_maps,
            max_total_pairs,
        }
    }

    pub fn max_vertex_maps(&self) -> u64 {
        self.max_vertex_maps
    }

    pub fn max_edge_maps(&self) -> u64 {
        self.max_edge_maps
    }

    pub fn max_total_pairs(&self) -> u64 {
        self.max_total_pairs
    }
}

impl Default for SizeCaps {
    fn default() -> SizeCaps {
        SizeCaps::new(1_000_000, 1_000_000, 1_000_000)
    }
}

/// `base^exponent` in `u128`, saturating on overflow. Saturation only makes
/// the cap check stricter.
fn saturating_pow(base: usize, exponent: usize) -> u128 {
    let exponent = u32::try_from(exponent).unwrap_or(u32::MAX);
    (base as u128).checked_pow(exponent).unwrap_or(u128::MAX)
}

/// Every quiver map from `g` to `h`, in lexicographic order: vertex
/// functions in enumeration order, and for each vertex function the edge
/// functions in enumeration order.
pub fn enumerate_homs(
    g: &Quiver,
    h: &Quiver,
    caps: &SizeCaps,
) -> Result<Vec<QuiverMorphism>, OracleError> {
    let vertex_candidates = saturating_pow(h.vertices().len(), g.vertices().len());
    if vertex_candidates > u128::from(caps.max_vertex_maps) {
        return Err(OracleError::CapExceeded {
            what: "vertex map",
            required: vertex_candidates,
            cap: caps.max_vertex_maps,
        });
    }
    let edge_candidates = saturating_pow(h.edges().len(), g.edges().len());
    if edge_candidates > u128::from(caps.max_edge_maps) {
        return Err(OracleError::CapExceeded {
            what: "edge map",
            required: edge_candidates,
            cap: caps.max_edge_maps,
        });
    }
    let total = vertex_candidates.saturating_mul(edge_candidates);
    if total > u128::from(caps.max_total_pairs) {
        return Err(OracleError::CapExceeded {
            what: "candidate pair",
            required: total,
            cap: caps.max_total_pairs,
        });
    }

    let mut found = Vec::new();
    for fv in FunctionRange::new(g.vertices(), h.vertices()) {
        for fe in FunctionRange::new(g.edges(), h.edges()) {
            if squares_commute(g, h, &fv, &fe) {
                found.push(QuiverMorphism::new_unchecked(
                    g.clone(),
                    h.clone(),
                    fv.clone(),
                    fe,
                ));
            }
        }
    }
    Ok(found)
}

/// The raw defining condition, checked edge by edge on the mapping tables.
fn squares_commute(g: &Quiver, h: &Quiver, fv: &SetFunction, fe: &SetFunction) -> bool {
    g.edges().iter().all(|e| {
        let image = fe.apply(e);
        fv.apply(g.source().apply(e)) == h.source().apply(image)
            && fv.apply(g.target().apply(e)) == h.target().apply(image)
    })
}

/// All sets of size `0..=max_size` with canonical labels `s0, s1, ...`.
pub fn set_catalogue(max_size: usize) -> Vec<FiniteSet> {
    (0..=max_size)
        .map(|n| {
            FiniteSet::new((0..n).map(|i| Label::new(format!("s{i}")).expect("canonical label")))
                .expect("canonical labels are distinct")
        })
        .collect()
}

/// Every quiver with at most `max_vertices` vertices and `max_edges` edges,
/// up to labelled structure: vertices `v0..`, edges `e0..`, and all source
/// and target assignments.
///
/// The order is deterministic: vertex count, then edge count, then source
/// assignments, then target assignments, each in enumeration order. The
/// empty quiver comes first and edgeless quivers are included. No
/// deduplication up to isomorphism is attempted; redundancy keeps the
/// enumeration trivially correct.
pub fn quiver_catalogue(max_vertices: usize, max_edges: usize) -> Vec<Quiver> {
    let mut catalogue = Vec::new();
    for n in 0..=max_vertices {
        let vertices =
            FiniteSet::new((0..n).map(|i| Label::new(format!("v{i}")).expect("canonical label")))
                .expect("canonical labels are distinct");
        for m in 0..=max_edges {
            let edges = FiniteSet::new(
                (0..m).map(|i| Label::new(format!("e{i}")).expect("canonical label")),
            )
            .expect("canonical labels are distinct");
            for source in FunctionRange::new(&edges, &vertices) {
                for target in FunctionRange::new(&edges, &vertices) {
                    catalogue.push(
                        Quiver::new(vertices.clone(), edges.clone(), source.clone(), target)
                            .expect("enumerated structure maps have the right carriers"),
                    );
                }
            }
        }
    }
    catalogue
}
