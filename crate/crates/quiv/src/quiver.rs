//! Quivers and quiver maps: the category the rest of the crate studies.
//!
//! A [`Quiver`] is a quadruple `(V, E, source, target)` with `source` and
//! `target` total functions from the edge set to the vertex set. A
//! [`QuiverMorphism`] is a pair of set functions — one on vertices, one on
//! edges — that makes the two squares
//!
//! ```text
//!   E_G --edge_map--> E_H          E_G --edge_map--> E_H
//!    |                 |            |                 |
//!  source_G         source_H      target_G         target_H
//!    |                 |            |                 |
//!    v                 v            v                 v
//!   V_G -vertex_map-> V_H          V_G -vertex_map-> V_H
//! ```
//!
//! commute. Construction validates both squares elementwise, so a value of
//! type [`QuiverMorphism`] is always a genuine quiver map.

use std::fmt;

use thiserror::Error;

use crate::set::{FiniteSet, Label, SetError, SetFunction};

/// Which of the two structure maps a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureMap {
    Source,
    Target,
}

impl fmt::Display for StructureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureMap::Source => f.write_str("source"),
            StructureMap::Target => f.write_str("target"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("{map} map must be a function from the edge set to the vertex set; it is {found}")]
    CarrierMismatch { map: StructureMap, found: String },
    #[error("{role} must be {expected}, found {found}")]
    DomainMismatch {
        role: &'static str,
        expected: FiniteSet,
        found: FiniteSet,
    },
    #[error("{which} square fails at edge {edge}: the vertex map sends its {which} to {lhs}, but the {which} of the mapped edge is {rhs}")]
    SquareViolation {
        edge: Label,
        which: StructureMap,
        lhs: Label,
        rhs: Label,
    },
}

/// A finite directed multigraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quiver {
    vertices: FiniteSet,
    edges: FiniteSet,
    source: SetFunction,
    target: SetFunction,
}

impl Quiver {
    pub fn new(
        vertices: FiniteSet,
        edges: FiniteSet,
        source: SetFunction,
        target: SetFunction,
    ) -> Result<Quiver, QuiverError> {
        for (map, function) in [
            (StructureMap::Source, &source),
            (StructureMap::Target, &target),
        ] {
            if function.domain() != &edges || function.codomain() != &vertices {
                return Err(QuiverError::CarrierMismatch {
                    map,
                    found: format!("{} -> {}", function.domain(), function.codomain()),
                });
            }
        }
        Ok(Quiver {
            vertices,
            edges,
            source,
            target,
        })
    }

    /// The vertex set: the object part of the vertex functor.
    pub fn vertices(&self) -> &FiniteSet {
        &self.vertices
    }

    /// The edge set: the object part of the edge functor.
    pub fn edges(&self) -> &FiniteSet {
        &self.edges
    }

    pub fn source(&self) -> &SetFunction {
        &self.source
    }

    pub fn target(&self) -> &SetFunction {
        &self.target
    }
}

/// A validated quiver map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuiverMorphism {
    dom: Quiver,
    cod: Quiver,
    vertex_map: SetFunction,
    edge_map: SetFunction,
}

impl QuiverMorphism {
    /// Validates that `(vertex_map, edge_map)` is a quiver map from `dom` to
    /// `cod`, checking both commuting squares on every edge in canonical
    /// order (source square first).
    pub fn new(
        dom: Quiver,
        cod: Quiver,
        vertex_map: SetFunction,
        edge_map: SetFunction,
    ) -> Result<QuiverMorphism, QuiverError> {
        if vertex_map.domain() != dom.vertices() {
            return Err(QuiverError::DomainMismatch {
                role: "the vertex map's domain",
                expected: dom.vertices().clone(),
                found: vertex_map.domain().clone(),
            });
        }
        if vertex_map.codomain() != cod.vertices() {
            return Err(QuiverError::DomainMismatch {
                role: "the vertex map's codomain",
                expected: cod.vertices().clone(),
                found: vertex_map.codomain().clone(),
            });
        }
        if edge_map.domain() != dom.edges() {
            return Err(QuiverError::DomainMismatch {
                role: "the edge map's domain",
                expected: dom.edges().clone(),
                found: edge_map.domain().clone(),
            });
        }
        if edge_map.codomain() != cod.edges() {
            return Err(QuiverError::DomainMismatch {
                role: "the edge map's codomain",
                expected: cod.edges().clone(),
                found: edge_map.codomain().clone(),
            });
        }
        for edge in dom.edges().iter() {
            let image = edge_map.apply(edge);
            let checks = [
                (StructureMap::Source, dom.source(), cod.source()),
                (StructureMap::Target, dom.target(), cod.target()),
            ];
            for (which, dom_map, cod_map) in checks {
                let lhs = vertex_map.apply(dom_map.apply(edge));
                let rhs = cod_map.apply(image);
                if lhs != rhs {
                    return Err(QuiverError::SquareViolation {
                        edge: edge.clone(),
                        which,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    });
                }
            }
        }
        Ok(QuiverMorphism {
            dom,
            cod,
            vertex_map,
            edge_map,
        })
    }

    /// Skips the square checks. Only for enumeration code that has already
    /// verified them.
    pub(crate) fn new_unchecked(
        dom: Quiver,
        cod: Quiver,
        vertex_map: SetFunction,
        edge_map: SetFunction,
    ) -> QuiverMorphism {
        QuiverMorphism {
            dom,
            cod,
            vertex_map,
            edge_map,
        }
    }

    /// The identity map on `g`.
    pub fn identity(g: &Quiver) -> QuiverMorphism {
        QuiverMorphism {
            dom: g.clone(),
            cod: g.clone(),
            vertex_map: SetFunction::identity(g.vertices()),
            edge_map: SetFunction::identity(g.edges()),
        }
    }

    /// The composite `self . earlier`, defined when `earlier`'s codomain is
    /// the same quiver as `self`'s domain. The result is composed
    /// componentwise and re-validated.
    pub fn after(&self, earlier: &QuiverMorphism) -> Result<QuiverMorphism, QuiverError> {
        if earlier.cod != self.dom {
            return Err(QuiverError::DomainMismatch {
                role: "the earlier map's codomain vertex set",
                expected: self.dom.vertices().clone(),
                found: earlier.cod.vertices().clone(),
            });
        }
        let vertex_map = self.vertex_map.after(&earlier.vertex_map)?;
        let edge_map = self.edge_map.after(&earlier.edge_map)?;
        Ok(
            QuiverMorphism::new(earlier.dom.clone(), self.cod.clone(), vertex_map, edge_map)
                .expect("componentwise composite of quiver maps is a quiver map"),
        )
    }

    pub fn dom(&self) -> &Quiver {
        &self.dom
    }

    pub fn cod(&self) -> &Quiver {
        &self.cod
    }

    /// The vertex component: the morphism part of the vertex functor.
    pub fn vertex_map(&self) -> &SetFunction {
        &self.vertex_map
    }

    /// The edge component: the morphism part of the edge functor.
    pub fn edge_map(&self) -> &SetFunction {
        &self.edge_map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::enumerate_functions;

    fn set(names: &[&str]) -> FiniteSet {
        FiniteSet::from_names(names.iter().copied()).unwrap()
    }

    fn label(name: &str) -> Label {
        Label::new(name).unwrap()
    }

    fn function(dom: &[&str], cod: &[&str], table: &[(&str, &str)]) -> SetFunction {
        SetFunction::from_pairs(
            set(dom),
            set(cod),
            table.iter().map(|(x, y)| (label(x), label(y))),
        )
        .unwrap()
    }

    /// Two vertices 0, 1; a loop `e` at 0 and two parallel edges `f`, `g`
    /// from 0 to 1.
    fn loop_and_parallel_pair() -> Quiver {
        Quiver::new(
            set(&["0", "1"]),
            set(&["e", "f", "g"]),
            function(
                &["e", "f", "g"],
                &["0", "1"],
                &[("e", "0"), ("f", "0"), ("g", "0")],
            ),
            function(
                &["e", "f", "g"],
                &["0", "1"],
                &[("e", "0"), ("f", "1"), ("g", "1")],
            ),
        )
        .unwrap()
    }

    /// One vertex 2 with two loops h, i.
    fn two_loops() -> Quiver {
        Quiver::new(
            set(&["2"]),
            set(&["h", "i"]),
            function(&["h", "i"], &["2"], &[("h", "2"), ("i", "2")]),
            function(&["h", "i"], &["2"], &[("h", "2"), ("i", "2")]),
        )
        .unwrap()
    }

    #[test]
    fn quiver_construction_checks_structure_map_carriers() {
        let err = Quiver::new(
            set(&["0"]),
            set(&["e"]),
            function(&["e"], &["0"], &[("e", "0")]),
            function(&["x"], &["0"], &[("x", "0")]),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            QuiverError::CarrierMismatch {
                map: StructureMap::Target,
                ..
            }
        ));
    }

    #[test]
    fn collapsing_map_between_the_example_quivers_is_valid() {
        let g = loop_and_parallel_pair();
        let h = two_loops();
        let fv = function(&["0", "1"], &["2"], &[("0", "2"), ("1", "2")]);
        let fe = function(
            &["e", "f", "g"],
            &["h", "i"],
            &[("e", "h"), ("f", "i"), ("g", "i")],
        );
        let phi = QuiverMorphism::new(g.clone(), h.clone(), fv, fe).unwrap();
        assert_eq!(phi.vertex_map().apply(&label("0")), &label("2"));
        assert_eq!(phi.edge_map().apply(&label("g")), &label("i"));
    }

    #[test]
    fn identity_pair_is_always_valid() {
        let g = loop_and_parallel_pair();
        let id = QuiverMorphism::new(
            g.clone(),
            g.clone(),
            SetFunction::identity(g.vertices()),
            SetFunction::identity(g.edges()),
        )
        .unwrap();
        assert_eq!(id, QuiverMorphism::identity(&g));
    }

    #[test]
    fn square_violation_names_the_first_offending_edge() {
        // Two vertices 2, 3; a loop h at 2 and an edge i from 2 to 3.
        let h = Quiver::new(
            set(&["2", "3"]),
            set(&["h", "i"]),
            function(&["h", "i"], &["2", "3"], &[("h", "2"), ("i", "2")]),
            function(&["h", "i"], &["2", "3"], &[("h", "2"), ("i", "3")]),
        )
        .unwrap();
        let g = loop_and_parallel_pair();
        // Sending the loop e to the non-loop i breaks the target square:
        // the vertex map fixes e's target at 2 while i's target is 3.
        let fv = function(&["0", "1"], &["2", "3"], &[("0", "2"), ("1", "3")]);
        let fe = function(
            &["e", "f", "g"],
            &["h", "i"],
            &[("e", "i"), ("f", "i"), ("g", "i")],
        );
        let err = QuiverMorphism::new(g, h.clone(), fv, fe).unwrap_err();
        assert_eq!(
            err,
            QuiverError::SquareViolation {
                edge: label("e"),
                which: StructureMap::Target,
                lhs: label("2"),
                rhs: label("3"),
            }
        );
        let message = err.to_string();
        assert!(message.contains("edge e"), "message was: {message}");

        // With the constant vertex map every edge's target square fails;
        // the report still names e, the first edge in canonical order.
        let g = loop_and_parallel_pair();
        let collapse = function(&["0", "1"], &["2", "3"], &[("0", "2"), ("1", "2")]);
        let fe = function(
            &["e", "f", "g"],
            &["h", "i"],
            &[("e", "i"), ("f", "i"), ("g", "i")],
        );
        let err = QuiverMorphism::new(g, h, collapse, fe).unwrap_err();
        assert!(matches!(
            err,
            QuiverError::SquareViolation {
                ref edge,
                which: StructureMap::Target,
                ..
            } if edge == &label("e")
        ));
    }

    #[test]
    fn morphism_construction_checks_carriers() {
        let g = loop_and_parallel_pair();
        let h = two_loops();
        let fv = function(&["0"], &["2"], &[("0", "2")]);
        let fe = function(
            &["e", "f", "g"],
            &["h", "i"],
            &[("e", "h"), ("f", "i"), ("g", "i")],
        );
        let err = QuiverMorphism::new(g, h, fv, fe).unwrap_err();
        assert!(matches!(err, QuiverError::DomainMismatch { .. }));
    }

    #[test]
    fn validation_agrees_with_the_elementwise_definition() {
        let g = loop_and_parallel_pair();
        let h = two_loops();
        for fv in enumerate_functions(g.vertices(), h.vertices()) {
            for fe in enumerate_functions(g.edges(), h.edges()) {
                let by_definition = g.edges().iter().all(|e| {
                    fv.apply(g.source().apply(e)) == h.source().apply(fe.apply(e))
                        && fv.apply(g.target().apply(e)) == h.target().apply(fe.apply(e))
                });
                let validated =
                    QuiverMorphism::new(g.clone(), h.clone(), fv.clone(), fe.clone()).is_ok();
                assert_eq!(validated, by_definition);
            }
        }
    }

    #[test]
    fn composition_is_componentwise_and_unital() {
        let g = loop_and_parallel_pair();
        let h = two_loops();
        let phi = QuiverMorphism::new(
            g.clone(),
            h.clone(),
            function(&["0", "1"], &["2"], &[("0", "2"), ("1", "2")]),
            function(
                &["e", "f", "g"],
                &["h", "i"],
                &[("e", "h"), ("f", "i"), ("g", "i")],
            ),
        )
        .unwrap();

        let left = QuiverMorphism::identity(&h).after(&phi).unwrap();
        assert_eq!(left, phi);
        let right = phi.after(&QuiverMorphism::identity(&g)).unwrap();
        assert_eq!(right, phi);

        // Post-compose with the swap of the two loops.
        let swap = QuiverMorphism::new(
            h.clone(),
            h.clone(),
            SetFunction::identity(h.vertices()),
            function(&["h", "i"], &["h", "i"], &[("h", "i"), ("i", "h")]),
        )
        .unwrap();
        let composite = swap.after(&phi).unwrap();
        assert_eq!(
            composite.vertex_map().apply(&label("0")),
            phi.vertex_map().apply(&label("0"))
        );
        assert_eq!(composite.edge_map().apply(&label("e")), &label("i"));
        assert_eq!(composite.edge_map().apply(&label("f")), &label("h"));
    }

    #[test]
    fn composition_requires_matching_middle_quiver() {
        let g = loop_and_parallel_pair();
        let h = two_loops();
        let id_g = QuiverMorphism::identity(&g);
        let id_h = QuiverMorphism::identity(&h);
        assert!(matches!(
            id_h.after(&id_g),
            Err(QuiverError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn quiver_equality_is_componentwise() {
        let g = loop_and_parallel_pair();
        assert_eq!(g, loop_and_parallel_pair());

        // Retargeting one edge produces a different quiver.
        let retargeted = Quiver::new(
            set(&["0", "1"]),
            set(&["e", "f", "g"]),
            function(
                &["e", "f", "g"],
                &["0", "1"],
                &[("e", "0"), ("f", "0"), ("g", "0")],
            ),
            function(
                &["e", "f", "g"],
                &["0", "1"],
                &[("e", "1"), ("f", "1"), ("g", "1")],
            ),
        )
        .unwrap();
        assert_ne!(g, retargeted);
        assert_ne!(g, two_loops());
    }
}
