//! End-to-end certification of the four universal properties over the
//! generated catalogues: the law checker, per-instance uniqueness
//! certificates, the retraction identities, and the hom-set cardinality
//! formulas.

use quiv::adjunction::{check_all_adjunction_laws, factorize, LawKind};
use quiv::constructions::Construction;
use quiv::oracle::{enumerate_homs, quiver_catalogue, set_catalogue, SizeCaps};
use quiv::set::{enumerate_functions, FiniteSet, SetFunction};
use quiv::{Quiver, QuiverMorphism};

fn carrier(kind: Construction, g: &Quiver) -> &FiniteSet {
    match kind {
        Construction::IndependentVertices | Construction::Complete => g.vertices(),
        Construction::IndependentEdges | Construction::Bouquet => g.edges(),
    }
}

#[test]
fn the_law_suite_passes_for_all_four_adjunctions() {
    let sets = set_catalogue(2);
    let quivers = quiver_catalogue(2, 2);
    let report = check_all_adjunction_laws(&sets, &quivers, &SizeCaps::default()).unwrap();
    assert!(report.all_passed(), "{report}");
    assert_eq!(
        report.rows.len(),
        Construction::ALL.len() * LawKind::ALL.len()
    );
    for law in LawKind::ALL {
        assert!(report.rows.iter().any(|row| row.law == law));
    }
}

#[test]
fn every_assignment_factors_uniquely() {
    // For every set, catalogue quiver and assignment, the mediating
    // morphism is valid, satisfies the factorization identity, and is the
    // only morphism in the full hom-set that does.
    let sets = set_catalogue(2);
    let quivers = quiver_catalogue(2, 2);
    let caps = SizeCaps::default();
    let mut certified = 0usize;
    for kind in Construction::ALL {
        for s in &sets {
            for g in &quivers {
                let assignments = if kind.is_reflection() {
                    enumerate_functions(s, carrier(kind, g))
                } else {
                    enumerate_functions(carrier(kind, g), s)
                };
                for phi in assignments {
                    let result = factorize(kind, g, &phi).unwrap();
                    assert!(result.identity_witness());
                    let certificate = result.certify_unique(&caps).unwrap();
                    assert_eq!(certificate.uniqueness_witness(), Some(1));
                    assert_eq!(certificate.mediating(), result.mediating());
                    certified += 1;
                }
            }
        }
    }
    // 157 + 137 + 117 + 109 instances for the four adjunctions, summing
    // the closed-form assignment counts over the catalogue.
    assert_eq!(certified, 520);
}

#[test]
fn composing_with_the_construction_retracts_to_the_identity_on_objects() {
    for s in set_catalogue(3) {
        assert_eq!(quiv::empty_quiver(&s).vertices(), &s);
        assert_eq!(quiv::independent_edges(&s).edges(), &s);
        assert_eq!(quiv::complete_quiver(&s).vertices(), &s);
        assert_eq!(quiv::bouquet(&s).edges(), &s);
    }
}

#[test]
fn composing_with_the_construction_retracts_to_the_identity_on_morphisms() {
    let sets = set_catalogue(3);
    for s in &sets {
        for t in &sets {
            for f in enumerate_functions(s, t) {
                assert_eq!(
                    Construction::IndependentVertices
                        .on_function(&f)
                        .vertex_map(),
                    &f
                );
                assert_eq!(
                    Construction::IndependentEdges.on_function(&f).edge_map(),
                    &f
                );
                assert_eq!(Construction::Complete.on_function(&f).vertex_map(), &f);
                assert_eq!(Construction::Bouquet.on_function(&f).edge_map(), &f);
            }
        }
    }
}

#[test]
fn constructions_are_functorial_over_the_set_catalogue() {
    let sets = set_catalogue(2);
    for kind in Construction::ALL {
        for s in &sets {
            let identity = SetFunction::identity(s);
            assert_eq!(
                kind.on_function(&identity),
                QuiverMorphism::identity(&kind.on_set(s))
            );
        }
        for a in &sets {
            for b in &sets {
                for c in &sets {
                    for f in enumerate_functions(a, b) {
                        for g in enumerate_functions(b, c) {
                            let composed = kind.on_function(&g).after(&kind.on_function(&f));
                            assert_eq!(composed.unwrap(), kind.on_function(&g.after(&f).unwrap()));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hom_set_cardinalities_match_the_closed_formulas() {
    let sets = set_catalogue(2);
    let quivers = quiver_catalogue(2, 2);
    let caps = SizeCaps::default();
    for s in &sets {
        for g in &quivers {
            let from_vertices = enumerate_homs(&quiv::empty_quiver(s), g, &caps).unwrap();
            assert_eq!(
                from_vertices.len() as u128,
                (g.vertices().len() as u128).pow(s.len() as u32)
            );

            let from_edges = enumerate_homs(&quiv::independent_edges(s), g, &caps).unwrap();
            assert_eq!(
                from_edges.len() as u128,
                (g.edges().len() as u128).pow(s.len() as u32)
            );

            let into_complete = enumerate_homs(g, &quiv::complete_quiver(s), &caps).unwrap();
            assert_eq!(
                into_complete.len() as u128,
                (s.len() as u128).pow(g.vertices().len() as u32)
            );

            let into_bouquet = enumerate_homs(g, &quiv::bouquet(s), &caps).unwrap();
            assert_eq!(
                into_bouquet.len() as u128,
                (s.len() as u128).pow(g.edges().len() as u32)
            );
        }
    }
}

#[test]
fn worked_example_counts() {
    // The two-vertex quiver with a loop at 0 and a parallel pair 0 -> 1.
    let g = quiv::format::parse_quiver("vertex 0\nvertex 1\nedge e 0 0\nedge f 0 1\nedge g 0 1\n")
        .unwrap()
        .quiver;
    let caps = SizeCaps::default();

    let i2 = quiv::empty_quiver(&FiniteSet::from_names(["a", "b"]).unwrap());
    assert_eq!(enumerate_homs(&i2, &g, &caps).unwrap().len(), 4);

    let b2 = quiv::bouquet(&FiniteSet::from_names(["h", "i"]).unwrap());
    assert_eq!(enumerate_homs(&g, &b2, &caps).unwrap().len(), 8);

    let k2 = quiv::complete_quiver(&FiniteSet::from_names(["0", "1"]).unwrap());
    assert_eq!(enumerate_homs(&g, &k2, &caps).unwrap().len(), 4);
}
