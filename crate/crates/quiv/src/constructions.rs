//! The four quiver constructions on a finite set, as functors.
//!
//! Each of the following sends a set `S` to a quiver and a function to a
//! quiver map, and each is adjoint to one of the projection functors:
//!
//! * [`empty_quiver`] — `S` as an independent set of vertices, no edges;
//!   left adjoint to the vertex projection.
//! * [`independent_edges`] — `|S|` pairwise disjoint arrows
//!   `(0,s) -> (1,s)`; left adjoint to the edge projection.
//! * [`complete_quiver`] — the complete digraph with one edge `(s,t)` per
//!   ordered pair, loops included; right adjoint to the vertex projection.
//! * [`bouquet`] — a single vertex carrying every element of `S` as a loop;
//!   right adjoint to the edge projection.
//!
//! The action on functions is the unique one making the corresponding
//! structure map ([`vertex_unit`], [`edge_unit`], [`vertex_counit`],
//! [`edge_counit`]) natural; the adjunction checker certifies that by
//! comparing each action against the factorization it induces.

use std::fmt;

use crate::quiver::{Quiver, QuiverMorphism};
use crate::set::{pairing, Coordinate, FiniteSet, Label, SetFunction, Tag};

/// The quiver with vertex set `s` and no edges.
pub fn empty_quiver(s: &FiniteSet) -> Quiver {
    Quiver::new(
        s.clone(),
        FiniteSet::empty(),
        SetFunction::empty_into(s),
        SetFunction::empty_into(s),
    )
    .expect("the empty functions have the right carriers")
}

/// The quiver of `|s|` disjoint arrows: vertices `{0,1} x s`, edges `s`,
/// with edge `s` running `(0,s) -> (1,s)`.
pub fn independent_edges(s: &FiniteSet) -> Quiver {
    Quiver::new(
        s.tagged_double(),
        s.clone(),
        s.inclusion(Tag::Zero),
        s.inclusion(Tag::One),
    )
    .expect("the inclusions have the right carriers")
}

/// The complete digraph on `s`: one edge `(u,v)` for every ordered pair,
/// loops included.
pub fn complete_quiver(s: &FiniteSet) -> Quiver {
    Quiver::new(
        s.clone(),
        s.square(),
        s.projection(Coordinate::First),
        s.projection(Coordinate::Second),
    )
    .expect("the projections have the right carriers")
}

/// The bouquet on `s`: one vertex, and every element of `s` as a loop.
pub fn bouquet(s: &FiniteSet) -> Quiver {
    Quiver::new(
        FiniteSet::point(),
        s.clone(),
        SetFunction::to_point(s),
        SetFunction::to_point(s),
    )
    .expect("the constant functions have the right carriers")
}

/// `f: S -> T` as a map of empty quivers: `f` on vertices, nothing on edges.
pub fn empty_quiver_map(f: &SetFunction) -> QuiverMorphism {
    let edge_map = SetFunction::empty_into(&FiniteSet::empty());
    QuiverMorphism::new(
        empty_quiver(f.domain()),
        empty_quiver(f.codomain()),
        f.clone(),
        edge_map,
    )
    .expect("squares over an empty edge set hold vacuously")
}

/// `f: S -> T` as a map of independent edge sets: `f` on edges and
/// `(j,s) -> (j,f(s))` on vertices.
pub fn independent_edges_map(f: &SetFunction) -> QuiverMorphism {
    let dom = independent_edges(f.domain());
    let cod = independent_edges(f.codomain());
    let mut vertex_pairs = Vec::with_capacity(2 * f.domain().len());
    for tag in [Tag::Zero, Tag::One] {
        let tag = tag.label();
        for s in f.domain().iter() {
            vertex_pairs.push((Label::pair(&tag, s), Label::pair(&tag, f.apply(s))));
        }
    }
    let vertex_map =
        SetFunction::from_pairs(dom.vertices().clone(), cod.vertices().clone(), vertex_pairs)
            .expect("tagging preserves distinctness and lands in the tagged double");
    QuiverMorphism::new(dom, cod, vertex_map, f.clone())
        .expect("tag-preserving vertex maps commute with the inclusions")
}

/// `f: S -> T` as a map of complete digraphs: `f` on vertices and
/// `(u,v) -> (f(u),f(v))` on edges.
pub fn complete_quiver_map(f: &SetFunction) -> QuiverMorphism {
    let dom = complete_quiver(f.domain());
    let cod = complete_quiver(f.codomain());
    let first = f
        .after(&f.domain().projection(Coordinate::First))
        .expect("projection lands in the domain of f");
    let second = f
        .after(&f.domain().projection(Coordinate::Second))
        .expect("projection lands in the domain of f");
    let edge_map = pairing(&first, &second).expect("both composites share carriers");
    QuiverMorphism::new(dom, cod, f.clone(), edge_map)
        .expect("componentwise pair maps commute with the projections")
}

/// `f: S -> T` as a map of bouquets: `f` on edges, identity on the single
/// vertex.
pub fn bouquet_map(f: &SetFunction) -> QuiverMorphism {
    QuiverMorphism::new(
        bouquet(f.domain()),
        bouquet(f.codomain()),
        SetFunction::identity(&FiniteSet::point()),
        f.clone(),
    )
    .expect("every square through the one-point set commutes")
}

/// The unit `S -> V(empty_quiver(S))` of the vertex reflection. The vertex
/// set of the empty quiver on `S` is `S` itself, so this is the identity.
pub fn vertex_unit(s: &FiniteSet) -> SetFunction {
    SetFunction::identity(s)
}

/// The unit `S -> E(independent_edges(S))` of the edge reflection; the
/// identity on `S`.
pub fn edge_unit(s: &FiniteSet) -> SetFunction {
    SetFunction::identity(s)
}

/// The counit `V(complete_quiver(S)) -> S` of the vertex coreflection; the
/// identity on `S`.
pub fn vertex_counit(s: &FiniteSet) -> SetFunction {
    SetFunction::identity(s)
}

/// The counit `E(bouquet(S)) -> S` of the edge coreflection; the identity
/// on `S`.
pub fn edge_counit(s: &FiniteSet) -> SetFunction {
    SetFunction::identity(s)
}

/// One of the four adjoint constructions, for dispatch in the law checker
/// and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Construction {
    /// Independent set of vertices; the left adjoint `I` of `I -| V`.
    IndependentVertices,
    /// Independent set of edges; the left adjoint `M` of `M -| E`.
    IndependentEdges,
    /// Complete digraph; the right adjoint `K` of `V -| K`.
    Complete,
    /// Bouquet of loops; the right adjoint `B` of `E -| B`.
    Bouquet,
}

impl Construction {
    pub const ALL: [Construction; 4] = [
        Construction::IndependentVertices,
        Construction::IndependentEdges,
        Construction::Complete,
        Construction::Bouquet,
    ];

    pub fn on_set(self, s: &FiniteSet) -> Quiver {
        match self {
            Construction::IndependentVertices => empty_quiver(s),
            Construction::IndependentEdges => independent_edges(s),
            Construction::Complete => complete_quiver(s),
            Construction::Bouquet => bouquet(s),
        }
    }

    pub fn on_function(self, f: &SetFunction) -> QuiverMorphism {
        match self {
            Construction::IndependentVertices => empty_quiver_map(f),
            Construction::IndependentEdges => independent_edges_map(f),
            Construction::Complete => complete_quiver_map(f),
            Construction::Bouquet => bouquet_map(f),
        }
    }

    /// Whether the construction is a left adjoint (a reflection) rather
    /// than a right adjoint (a coreflection).
    pub fn is_reflection(self) -> bool {
        matches!(
            self,
            Construction::IndependentVertices | Construction::IndependentEdges
        )
    }

    /// The adjunction the construction participates in, written with the
    /// left adjoint first.
    pub fn adjunction_symbol(self) -> &'static str {
        match self {
            Construction::IndependentVertices => "I -| V",
            Construction::IndependentEdges => "M -| E",
            Construction::Complete => "V -| K",
            Construction::Bouquet => "E -| B",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Construction::IndependentVertices => "independent vertices",
            Construction::IndependentEdges => "independent edges",
            Construction::Complete => "complete digraph",
            Construction::Bouquet => "bouquet",
        };
        f.write_str(name)
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

    fn pair(a: &str, b: &str) -> Label {
        Label::pair(&label(a), &label(b))
    }

    #[test]
    fn empty_quiver_has_no_edges() {
        let q = empty_quiver(&set(&["0", "1"]));
        assert_eq!(q.vertices(), &set(&["0", "1"]));
        assert!(q.edges().is_empty());

        assert_eq!(empty_quiver(&FiniteSet::empty()).vertices().len(), 0);
        assert_eq!(empty_quiver(&set(&["a", "b", "c"])).vertices().len(), 3);
    }

    #[test]
    fn independent_edges_are_disjoint_arrows() {
        let q = independent_edges(&set(&["a"]));
        assert_eq!(q.vertices().len(), 2);
        assert_eq!(q.edges(), &set(&["a"]));
        assert_eq!(q.source().apply(&label("a")), &pair("0", "a"));
        assert_eq!(q.target().apply(&label("a")), &pair("1", "a"));

        assert_eq!(
            independent_edges(&FiniteSet::empty()),
            empty_quiver(&FiniteSet::empty())
        );

        let two = independent_edges(&set(&["a", "b"]));
        assert_eq!(two.vertices().len(), 4);
        assert_eq!(two.edges().len(), 2);
        // Sources and targets are injective with disjoint images.
        let sources: Vec<_> = two.edges().iter().map(|e| two.source().apply(e)).collect();
        let targets: Vec<_> = two.edges().iter().map(|e| two.target().apply(e)).collect();
        assert_eq!(sources.len(), 2);
        assert!(sources.iter().all(|s| !targets.contains(s)));
    }

    #[test]
    fn complete_quiver_has_one_edge_per_ordered_pair() {
        let q = complete_quiver(&set(&["0", "1"]));
        assert_eq!(q.vertices(), &set(&["0", "1"]));
        let edges: Vec<_> = q.edges().iter().map(Label::as_str).collect();
        assert_eq!(edges, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        // The loop at 0 and the edge 0 -> 1.
        assert_eq!(q.source().apply(&pair("0", "0")), &label("0"));
        assert_eq!(q.target().apply(&pair("0", "0")), &label("0"));
        assert_eq!(q.source().apply(&pair("0", "1")), &label("0"));
        assert_eq!(q.target().apply(&pair("0", "1")), &label("1"));

        assert_eq!(complete_quiver(&FiniteSet::empty()).edges().len(), 0);
        assert_eq!(complete_quiver(&set(&["a", "b", "c"])).edges().len(), 9);
    }

    #[test]
    fn source_target_pairs_of_the_complete_quiver_cover_the_square() {
        let s = set(&["x", "y", "z"]);
        let q = complete_quiver(&s);
        let mut seen = std::collections::BTreeSet::new();
        for e in q.edges().iter() {
            seen.insert((q.source().apply(e).clone(), q.target().apply(e).clone()));
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn bouquet_is_a_single_vertex_of_loops() {
        let q = bouquet(&set(&["e", "f", "g", "h"]));
        assert_eq!(q.vertices(), &FiniteSet::point());
        assert_eq!(q.edges().len(), 4);
        for e in q.edges().iter() {
            assert_eq!(q.source().apply(e), q.target().apply(e));
        }

        let lonely = bouquet(&FiniteSet::empty());
        assert_eq!(lonely.vertices().len(), 1);
        assert!(lonely.edges().is_empty());

        assert_eq!(bouquet(&set(&["a"])).edges().len(), 1);
    }

    #[test]
    fn degenerate_constructions_collapse_to_the_empty_quiver() {
        let empty = FiniteSet::empty();
        assert_eq!(empty_quiver(&empty), complete_quiver(&empty));
        assert_eq!(empty_quiver(&empty), independent_edges(&empty));
        assert_ne!(empty_quiver(&empty), bouquet(&empty));
        assert_ne!(empty_quiver(&set(&["a"])), complete_quiver(&set(&["a"])));
    }

    #[test]
    fn actions_on_identities_are_identity_maps() {
        let s = set(&["a", "b"]);
        let id = SetFunction::identity(&s);
        for construction in Construction::ALL {
            let mapped = construction.on_function(&id);
            assert_eq!(mapped, QuiverMorphism::identity(&construction.on_set(&s)));
        }
    }

    #[test]
    fn complete_map_sends_pairs_componentwise() {
        let f = SetFunction::from_pairs(
            set(&["0", "1"]),
            set(&["0"]),
            [(label("0"), label("0")), (label("1"), label("0"))],
        )
        .unwrap();
        let mapped = complete_quiver_map(&f);
        assert_eq!(mapped.edge_map().apply(&pair("0", "1")), &pair("0", "0"));
    }

    #[test]
    fn empty_quiver_map_is_forced_on_edges() {
        let f = SetFunction::from_pairs(set(&["a"]), set(&["x", "y"]), [(label("a"), label("x"))])
            .unwrap();
        let mapped = empty_quiver_map(&f);
        assert_eq!(mapped.vertex_map(), &f);
        assert!(mapped.edge_map().domain().is_empty());
    }

    #[test]
    fn independent_edges_map_tags_consistently() {
        let f = SetFunction::from_pairs(
            set(&["a", "b"]),
            set(&["c"]),
            [(label("a"), label("c")), (label("b"), label("c"))],
        )
        .unwrap();
        let mapped = independent_edges_map(&f);
        assert_eq!(mapped.edge_map(), &f);
        assert_eq!(mapped.vertex_map().apply(&pair("0", "a")), &pair("0", "c"));
        assert_eq!(mapped.vertex_map().apply(&pair("1", "b")), &pair("1", "c"));
    }

    #[test]
    fn projections_recover_the_function_exactly() {
        let sets = [
            FiniteSet::empty(),
            set(&["a"]),
            set(&["a", "b"]),
            set(&["x", "y", "z"]),
        ];
        for s in &sets {
            for t in &sets {
                for f in enumerate_functions(s, t) {
                    assert_eq!(empty_quiver_map(&f).vertex_map(), &f);
                    assert_eq!(independent_edges_map(&f).edge_map(), &f);
                    assert_eq!(complete_quiver_map(&f).vertex_map(), &f);
                    assert_eq!(bouquet_map(&f).edge_map(), &f);
                }
            }
        }
    }

    #[test]
    fn actions_preserve_composition() {
        let sets = [FiniteSet::empty(), set(&["a"]), set(&["x", "y"])];
        for a in &sets {
            for b in &sets {
                for c in &sets {
                    for f in enumerate_functions(a, b) {
                        for g in enumerate_functions(b, c) {
                            let gf = g.after(&f).unwrap();
                            for construction in Construction::ALL {
                                let composed = construction
                                    .on_function(&g)
                                    .after(&construction.on_function(&f))
                                    .unwrap();
                                assert_eq!(composed, construction.on_function(&gf));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn units_and_counits_read_as_identities() {
        let s = set(&["0", "1"]);
        assert_eq!(vertex_unit(&s), SetFunction::identity(&s));
        assert_eq!(vertex_unit(&s).codomain(), empty_quiver(&s).vertices());
        assert_eq!(edge_unit(&s).codomain(), independent_edges(&s).edges());
        assert_eq!(vertex_counit(&s).domain(), complete_quiver(&s).vertices());
        assert_eq!(edge_counit(&s).domain(), bouquet(&s).edges());

        assert_eq!(edge_counit(&FiniteSet::empty()).domain().len(), 0);
        assert_eq!(
            edge_unit(&set(&["a", "b"])),
            SetFunction::identity(&set(&["a", "b"]))
        );
    }
}
