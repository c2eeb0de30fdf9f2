//! Universal-property factorizations and the adjunction law checker.
//!
//! Every function into (or out of) the vertex or edge set of a quiver
//! factors through exactly one quiver map involving the matching
//! construction:
//!
//! * [`reflect_vertices`]: `phi: S -> V(G)` factors through
//!   `empty_quiver(S)` — the mediating map composed with the vertex unit
//!   recovers `phi`.
//! * [`reflect_edges`]: `phi: S -> E(G)` factors through
//!   `independent_edges(S)`.
//! * [`coreflect_vertices`]: `phi: V(G) -> S` factors through
//!   `complete_quiver(S)`.
//! * [`coreflect_edges`]: `phi: E(G) -> S` factors through `bouquet(S)`.
//!
//! Existence and the factorization identity are checked at construction;
//! uniqueness — the claim that no other morphism of the hom-set satisfies
//! the same identity — is certified against the brute-force oracle with
//! [`FactorizationResult::certify_unique`]. [`check_adjunction_laws`] runs
//! the full suite over catalogues: hom-set bijections, naturality in both
//! arguments, naturality of the structure maps and of the derived opposite
//! structure maps, and the triangle identities.

use std::fmt;

use thiserror::Error;

use crate::constructions::Construction;
use crate::oracle::{enumerate_homs, OracleError, SizeCaps};
use crate::quiver::{Quiver, QuiverMorphism};
use crate::set::{enumerate_functions, pairing, FiniteSet, Label, SetFunction, Tag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjunctionError {
    #[error("{role} must be {expected}, found {found}")]
    DomainMismatch {
        role: &'static str,
        expected: FiniteSet,
        found: FiniteSet,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("uniqueness check failed for {kind}: {found} morphisms satisfy the factorization triangle, expected exactly the constructed one")]
    UniquenessFailure { kind: Construction, found: usize },
}

/// A mediating morphism together with the evidence for its universal
/// property.
///
/// `identity_witness` records that the factorization triangle was checked
/// at construction (it is always `true` on a successfully built value).
/// `uniqueness_witness` is absent until [`certify_unique`] has swept the
/// full hom-set; when present it is always `1`.
///
/// [`certify_unique`]: FactorizationResult::certify_unique
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    kind: Construction,
    mediating: QuiverMorphism,
    identity_witness: bool,
    uniqueness_witness: Option<usize>,
}

impl FactorizationResult {
    fn checked(kind: Construction, mediating: QuiverMorphism) -> FactorizationResult {
        let result = FactorizationResult {
            kind,
            mediating,
            identity_witness: false,
            uniqueness_witness: None,
        };
        assert_eq!(
            triangle_composite(kind, &result.mediating),
            result.assigned(),
            "factorization triangle must hold for the constructed mediating morphism"
        );
        FactorizationResult {
            identity_witness: true,
            ..result
        }
    }

    pub fn kind(&self) -> Construction {
        self.kind
    }

    pub fn mediating(&self) -> &QuiverMorphism {
        &self.mediating
    }

    pub fn into_mediating(self) -> QuiverMorphism {
        self.mediating
    }

    pub fn identity_witness(&self) -> bool {
        self.identity_witness
    }

    pub fn uniqueness_witness(&self) -> Option<usize> {
        self.uniqueness_witness
    }

    /// The set function the mediating morphism factors. For the two
    /// reflections this is the matching component of the mediating morphism
    /// read as `S -> V(G)` (resp. `S -> E(G)`); for the two coreflections,
    /// as `V(G) -> S` (resp. `E(G) -> S`).
    pub fn assigned(&self) -> SetFunction {
        match self.kind {
            Construction::IndependentVertices | Construction::Complete => {
                self.mediating.vertex_map().clone()
            }
            Construction::IndependentEdges | Construction::Bouquet => {
                self.mediating.edge_map().clone()
            }
        }
    }

    /// Certifies uniqueness by exhaustive enumeration: sweeps every
    /// morphism of the relevant hom-set, counts those satisfying the
    /// factorization triangle, and demands that exactly one does and that
    /// it equals the constructed mediating morphism.
    pub fn certify_unique(&self, caps: &SizeCaps) -> Result<FactorizationResult, AdjunctionError> {
        let candidates = enumerate_homs(self.mediating.dom(), self.mediating.cod(), caps)?;
        let assigned = self.assigned();
        let satisfying: Vec<&QuiverMorphism> = candidates
            .iter()
            .filter(|candidate| triangle_composite(self.kind, candidate) == assigned)
            .collect();
        if satisfying.len() != 1 || satisfying[0] != &self.mediating {
            return Err(AdjunctionError::UniquenessFailure {
                kind: self.kind,
                found: satisfying.len(),
            });
        }
        Ok(FactorizationResult {
            uniqueness_witness: Some(1),
            ..self.clone()
        })
    }
}

/// The composite the universal property equates with the factored function:
/// the projected component of `candidate` composed with the unit (for
/// reflections) or the counit (for coreflections), both of which are
/// identities on the underlying set.
fn triangle_composite(kind: Construction, candidate: &QuiverMorphism) -> SetFunction {
    match kind {
        Construction::IndependentVertices => {
            let unit = SetFunction::identity(candidate.dom().vertices());
            candidate
                .vertex_map()
                .after(&unit)
                .expect("unit lands in the domain vertex set")
        }
        Construction::IndependentEdges => {
            let unit = SetFunction::identity(candidate.dom().edges());
            candidate
                .edge_map()
                .after(&unit)
                .expect("unit lands in the domain edge set")
        }
        Construction::Complete => {
            let counit = SetFunction::identity(candidate.cod().vertices());
            counit
                .after(candidate.vertex_map())
                .expect("vertex map lands in the counit's domain")
        }
        Construction::Bouquet => {
            let counit = SetFunction::identity(candidate.cod().edges());
            counit
                .after(candidate.edge_map())
                .expect("edge map lands in the counit's domain")
        }
    }
}

/// Factors `phi: S -> V(g)` through the empty quiver on `S`: the mediating
/// morphism has vertex map `phi` and the empty edge map.
pub fn reflect_vertices(
    g: &Quiver,
    phi: &SetFunction,
) -> Result<FactorizationResult, AdjunctionError> {
    if phi.codomain() != g.vertices() {
        return Err(AdjunctionError::DomainMismatch {
            role: "the codomain of the vertex assignment",
            expected: g.vertices().clone(),
            found: phi.codomain().clone(),
        });
    }
    let dom = crate::constructions::empty_quiver(phi.domain());
    let mediating = QuiverMorphism::new(
        dom,
        g.clone(),
        phi.clone(),
        SetFunction::empty_into(g.edges()),
    )
    .expect("squares over an empty edge set hold vacuously");
    Ok(FactorizationResult::checked(
        Construction::IndependentVertices,
        mediating,
    ))
}

/// Factors `phi: S -> E(g)` through the independent edges on `S`: the
/// mediating morphism has edge map `phi` and sends the vertex `(0,s)` to the
/// source of `phi(s)` and `(1,s)` to its target.
pub fn reflect_edges(
    g: &Quiver,
    phi: &SetFunction,
) -> Result<FactorizationResult, AdjunctionError> {
    if phi.codomain() != g.edges() {
        return Err(AdjunctionError::DomainMismatch {
            role: "the codomain of the edge assignment",
            expected: g.edges().clone(),
            found: phi.codomain().clone(),
        });
    }
    let dom = crate::constructions::independent_edges(phi.domain());
    let mut vertex_pairs = Vec::with_capacity(2 * phi.domain().len());
    for s in phi.domain().iter() {
        let image = phi.apply(s);
        vertex_pairs.push((
            Label::pair(&Tag::Zero.label(), s),
            g.source().apply(image).clone(),
        ));
        vertex_pairs.push((
            Label::pair(&Tag::One.label(), s),
            g.target().apply(image).clone(),
        ));
    }
    let vertex_map =
        SetFunction::from_pairs(dom.vertices().clone(), g.vertices().clone(), vertex_pairs)
            .expect("tagged labels are distinct and their images are vertices");
    let mediating = QuiverMorphism::new(dom, g.clone(), vertex_map, phi.clone())
        .expect("endpoints of assigned edges make both squares commute");
    Ok(FactorizationResult::checked(
        Construction::IndependentEdges,
        mediating,
    ))
}

/// Factors `phi: V(g) -> S` through the complete digraph on `S`: the
/// mediating morphism has vertex map `phi` and sends each edge to the pair
/// of its relabelled endpoints.
pub fn coreflect_vertices(
    g: &Quiver,
    phi: &SetFunction,
) -> Result<FactorizationResult, AdjunctionError> {
    if phi.domain() != g.vertices() {
        return Err(AdjunctionError::DomainMismatch {
            role: "the domain of the vertex relabelling",
            expected: g.vertices().clone(),
            found: phi.domain().clone(),
        });
    }
    let cod = crate::constructions::complete_quiver(phi.codomain());
    let through_source = phi
        .after(g.source())
        .expect("the source map lands in the vertex set");
    let through_target = phi
        .after(g.target())
        .expect("the target map lands in the vertex set");
    let edge_map = pairing(&through_source, &through_target)
        .expect("both composites run from the edge set to the same set");
    let mediating = QuiverMorphism::new(g.clone(), cod, phi.clone(), edge_map)
        .expect("pairs of relabelled endpoints commute with the projections");
    Ok(FactorizationResult::checked(
        Construction::Complete,
        mediating,
    ))
}

/// Factors `phi: E(g) -> S` through the bouquet on `S`: the mediating
/// morphism has edge map `phi` and collapses every vertex to the bouquet's
/// single vertex.
pub fn coreflect_edges(
    g: &Quiver,
    phi: &SetFunction,
) -> Result<FactorizationResult, AdjunctionError> {
    if phi.domain() != g.edges() {
        return Err(AdjunctionError::DomainMismatch {
            role: "the domain of the edge relabelling",
            expected: g.edges().clone(),
            found: phi.domain().clone(),
        });
    }
    let cod = crate::constructions::bouquet(phi.codomain());
    let mediating = QuiverMorphism::new(
        g.clone(),
        cod,
        SetFunction::to_point(g.vertices()),
        phi.clone(),
    )
    .expect("every square through the one-point set commutes");
    Ok(FactorizationResult::checked(
        Construction::Bouquet,
        mediating,
    ))
}

/// Dispatches to the factorization matching `kind`.
pub fn factorize(
    kind: Construction,
    g: &Quiver,
    phi: &SetFunction,
) -> Result<FactorizationResult, AdjunctionError> {
    match kind {
        Construction::IndependentVertices => reflect_vertices(g, phi),
        Construction::IndependentEdges => reflect_edges(g, phi),
        Construction::Complete => coreflect_vertices(g, phi),
        Construction::Bouquet => coreflect_edges(g, phi),
    }
}

/// The laws the checker verifies for each adjunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LawKind {
    /// Factorization is a bijection between the set of assignments and the
    /// enumerated hom-set, with the predicted cardinality.
    HomBijection,
    /// The bijection commutes with composition by quiver maps.
    NaturalityInQuiver,
    /// The bijection commutes with composition by set functions.
    NaturalityInSet,
    /// The unit (or counit) is a natural transformation.
    StructureMapNaturality,
    /// The derived opposite structure map — the factorization of the
    /// identity — is a natural transformation.
    DerivedMapNaturality,
    /// Both triangle identities, using the derived opposite structure map.
    TriangleIdentities,
}

impl LawKind {
    pub const ALL: [LawKind; 6] = [
        LawKind::HomBijection,
        LawKind::NaturalityInQuiver,
        LawKind::NaturalityInSet,
        LawKind::StructureMapNaturality,
        LawKind::DerivedMapNaturality,
        LawKind::TriangleIdentities,
    ];
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LawKind::HomBijection => "hom-set bijection",
            LawKind::NaturalityInQuiver => "naturality in the quiver argument",
            LawKind::NaturalityInSet => "naturality in the set argument",
            LawKind::StructureMapNaturality => "structure map naturality",
            LawKind::DerivedMapNaturality => "derived map naturality",
            LawKind::TriangleIdentities => "triangle identities",
        };
        f.write_str(name)
    }
}

/// One failed check: the instance it happened on and both sides of the
/// equation that should have held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of one law over one adjunction: how many elementary
/// instances were checked, and every violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawRow {
    pub construction: Construction,
    pub law: LawKind,
    pub instances: usize,
    pub violations: Vec<LawViolation>,
}

impl LawRow {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Aggregated results of [`check_adjunction_laws`], row per law.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LawReport {
    pub rows: Vec<LawRow>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(LawRow::passed)
    }

    pub fn total_instances(&self) -> usize {
        self.rows.iter().map(|row| row.instances).sum()
    }

    pub fn merge(&mut self, other: LawReport) {
        self.rows.extend(other.rows);
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "{:<7} {:<36} {:>7} instances  {}",
                row.construction.adjunction_symbol(),
                row.law.to_string(),
                row.instances,
                if row.passed() { "ok" } else { "FAIL" }
            )?;
            for violation in &row.violations {
                writeln!(
                    f,
                    "    {}: {} != {}",
                    violation.instance, violation.lhs, violation.rhs
                )?;
            }
        }
        let failed: usize = self.rows.iter().filter(|row| !row.passed()).count();
        if failed == 0 {
            write!(
                f,
                "all adjunction laws hold ({} instances)",
                self.total_instances()
            )
        } else {
            write!(f, "{failed} law(s) violated")
        }
    }
}

/// Runs the law suite for one adjunction over the given catalogues.
/// Violations are collected into the report rather than returned as errors;
/// the only hard error is an oracle cap overflow.
pub fn check_adjunction_laws(
    kind: Construction,
    sets: &[FiniteSet],
    quivers: &[Quiver],
    caps: &SizeCaps,
) -> Result<LawReport, OracleError> {
    let checker = LawChecker::new(kind, sets, quivers, caps)?;
    Ok(LawReport {
        rows: checker.run(),
    })
}

/// Runs [`check_adjunction_laws`] for all four adjunctions and concatenates
/// the reports.
pub fn check_all_adjunction_laws(
    sets: &[FiniteSet],
    quivers: &[Quiver],
    caps: &SizeCaps,
) -> Result<LawReport, OracleError> {
    let mut report = LawReport::default();
    for kind in Construction::ALL {
        report.merge(check_adjunction_laws(kind, sets, quivers, caps)?);
    }
    Ok(report)
}

/// Shared precomputed state for one adjunction's law suite.
struct LawChecker<'a> {
    kind: Construction,
    sets: &'a [FiniteSet],
    quivers: &'a [Quiver],
    /// `free[si]` is the construction applied to `sets[si]`.
    free: Vec<Quiver>,
    /// `assignments[si][gi]` are the set functions being factored:
    /// `S -> U(G)` for reflections, `U(G) -> S` for coreflections.
    assignments: Vec<Vec<Vec<SetFunction>>>,
    /// `mediated[si][gi][k]` is the factorization of `assignments[si][gi][k]`.
    mediated: Vec<Vec<Vec<QuiverMorphism>>>,
    /// `free_homs[si][gi]` is the enumerated hom-set the bijection targets:
    /// `hom(F_S, G)` for reflections, `hom(G, F_S)` for coreflections.
    free_homs: Vec<Vec<Vec<QuiverMorphism>>>,
    /// `quiver_homs[gi][hi]` is the enumerated `hom(quivers[gi], quivers[hi])`.
    quiver_homs: Vec<Vec<Vec<QuiverMorphism>>>,
    /// `derived[gi]` is the factorization of the identity on `U(G)`: the
    /// derived counit at `G` for reflections, the derived unit for
    /// coreflections.
    derived: Vec<QuiverMorphism>,
}

impl<'a> LawChecker<'a> {
    fn new(
        kind: Construction,
        sets: &'a [FiniteSet],
        quivers: &'a [Quiver],
        caps: &SizeCaps,
    ) -> Result<LawChecker<'a>, OracleError> {
        let free: Vec<Quiver> = sets.iter().map(|s| kind.on_set(s)).collect();
        let mut assignments = Vec::with_capacity(sets.len());
        let mut mediated = Vec::with_capacity(sets.len());
        let mut free_homs = Vec::with_capacity(sets.len());
        for (si, s) in sets.iter().enumerate() {
            let mut per_set_assignments = Vec::with_capacity(quivers.len());
            let mut per_set_mediated = Vec::with_capacity(quivers.len());
            let mut per_set_homs = Vec::with_capacity(quivers.len());
            for g in quivers {
                let functions = if kind.is_reflection() {
                    enumerate_functions(s, carrier(kind, g))
                } else {
                    enumerate_functions(carrier(kind, g), s)
                };
                let factored: Vec<QuiverMorphism> = functions
                    .iter()
                    .map(|phi| {
                        factorize(kind, g, phi)
                            .expect("catalogue assignments have matching carriers")
                            .into_mediating()
                    })
                    .collect();
                per_set_homs.push(if kind.is_reflection() {
                    enumerate_homs(&free[si], g, caps)?
                } else {
                    enumerate_homs(g, &free[si], caps)?
                });
                per_set_assignments.push(functions);
                per_set_mediated.push(factored);
            }
            assignments.push(per_set_assignments);
            mediated.push(per_set_mediated);
            free_homs.push(per_set_homs);
        }
        let mut quiver_homs = Vec::with_capacity(quivers.len());
        for g in quivers {
            let mut row = Vec::with_capacity(quivers.len());
            for h in quivers {
                row.push(enumerate_homs(g, h, caps)?);
            }
            quiver_homs.push(row);
        }
        let derived = quivers
            .iter()
            .map(|g| {
                factorize(kind, g, &SetFunction::identity(carrier(kind, g)))
                    .expect("the identity assignment has matching carriers")
                    .into_mediating()
            })
            .collect();
        Ok(LawChecker {
            kind,
            sets,
            quivers,
            free,
            assignments,
            mediated,
            free_homs,
            quiver_homs,
            derived,
        })
    }

    fn run(&self) -> Vec<LawRow> {
        vec![
            self.hom_bijection(),
            self.naturality_in_quiver(),
            self.naturality_in_set(),
            self.structure_map_naturality(),
            self.derived_map_naturality(),
            self.triangle_identities(),
        ]
    }

    fn row(&self, law: LawKind, instances: usize, violations: Vec<LawViolation>) -> LawRow {
        LawRow {
            construction: self.kind,
            law,
            instances,
            violations,
        }
    }

    fn factor(&self, g: &Quiver, phi: &SetFunction) -> QuiverMorphism {
        factorize(self.kind, g, phi)
            .expect("assignments built from catalogue data have matching carriers")
            .into_mediating()
    }

    fn hom_bijection(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        for (si, s) in self.sets.iter().enumerate() {
            for (gi, g) in self.quivers.iter().enumerate() {
                instances += 1;
                let instance = || format!("S={s}, G#{gi}");
                let functions = &self.assignments[si][gi];
                let homs = &self.free_homs[si][gi];
                let image: std::collections::BTreeSet<&QuiverMorphism> =
                    self.mediated[si][gi].iter().collect();
                if image.len() != functions.len() {
                    violations.push(LawViolation {
                        instance: instance(),
                        lhs: format!("{} distinct factorizations", image.len()),
                        rhs: format!("{} assignments", functions.len()),
                    });
                    continue;
                }
                let hom_set: std::collections::BTreeSet<&QuiverMorphism> = homs.iter().collect();
                if image != hom_set {
                    violations.push(LawViolation {
                        instance: instance(),
                        lhs: "factorization image".to_string(),
                        rhs: "enumerated hom-set".to_string(),
                    });
                    continue;
                }
                let predicted = if self.kind.is_reflection() {
                    (carrier(self.kind, g).len() as u128).pow(s.len() as u32)
                } else {
                    (s.len() as u128).pow(carrier(self.kind, g).len() as u32)
                };
                if predicted != homs.len() as u128 {
                    violations.push(LawViolation {
                        instance: instance(),
                        lhs: format!("predicted cardinality {predicted}"),
                        rhs: format!("enumerated cardinality {}", homs.len()),
                    });
                }
            }
        }
        self.row(LawKind::HomBijection, instances, violations)
    }

    fn naturality_in_quiver(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        for (si, s) in self.sets.iter().enumerate() {
            for (gi, _) in self.quivers.iter().enumerate() {
                for (hi, h) in self.quivers.iter().enumerate() {
                    // Reflections are natural along psi: G -> H; coreflections
                    // along psi: H -> G.
                    let psis = if self.kind.is_reflection() {
                        &self.quiver_homs[gi][hi]
                    } else {
                        &self.quiver_homs[hi][gi]
                    };
                    for (pi, psi) in psis.iter().enumerate() {
                        for (fi, phi) in self.assignments[si][gi].iter().enumerate() {
                            instances += 1;
                            let (lhs, rhs) = if self.kind.is_reflection() {
                                let transported = component(self.kind, psi)
                                    .after(phi)
                                    .expect("component runs from U(G)");
                                (
                                    self.factor(h, &transported),
                                    psi.after(&self.mediated[si][gi][fi])
                                        .expect("mediating lands in G"),
                                )
                            } else {
                                let transported = phi
                                    .after(component(self.kind, psi))
                                    .expect("component lands in U(G)");
                                (
                                    self.factor(h, &transported),
                                    self.mediated[si][gi][fi]
                                        .after(psi)
                                        .expect("psi lands in G"),
                                )
                            };
                            if lhs != rhs {
                                violations.push(LawViolation {
                                    instance: format!(
                                        "S={s}, G#{gi}, H#{hi}, psi#{pi}, assignment#{fi}"
                                    ),
                                    lhs: format!("{}", lhs.vertex_map()),
                                    rhs: format!("{}", rhs.vertex_map()),
                                });
                            }
                        }
                    }
                }
            }
        }
        self.row(LawKind::NaturalityInQuiver, instances, violations)
    }

    fn naturality_in_set(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        for (si, s) in self.sets.iter().enumerate() {
            for t in self.sets {
                // Reflections are natural along u: T -> S (contravariant
                // side); coreflections along u: S -> T.
                let us = if self.kind.is_reflection() {
                    enumerate_functions(t, s)
                } else {
                    enumerate_functions(s, t)
                };
                for (ui, u) in us.iter().enumerate() {
                    for (gi, g) in self.quivers.iter().enumerate() {
                        for (fi, phi) in self.assignments[si][gi].iter().enumerate() {
                            instances += 1;
                            let (lhs, rhs) = if self.kind.is_reflection() {
                                let transported =
                                    phi.after(u).expect("u lands in the assignment's domain");
                                (
                                    self.factor(g, &transported),
                                    self.mediated[si][gi][fi]
                                        .after(&self.kind.on_function(u))
                                        .expect("construction on u lands in F_S"),
                                )
                            } else {
                                let transported =
                                    u.after(phi).expect("assignment lands in u's domain");
                                (
                                    self.factor(g, &transported),
                                    self.kind
                                        .on_function(u)
                                        .after(&self.mediated[si][gi][fi])
                                        .expect("mediating lands in F_S"),
                                )
                            };
                            if lhs != rhs {
                                violations.push(LawViolation {
                                    instance: format!(
                                        "S={s}, T={t}, u#{ui}, G#{gi}, assignment#{fi}"
                                    ),
                                    lhs: format!("{}", lhs.edge_map()),
                                    rhs: format!("{}", rhs.edge_map()),
                                });
                            }
                        }
                    }
                }
            }
        }
        self.row(LawKind::NaturalityInSet, instances, violations)
    }

    fn structure_map_naturality(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        for s in self.sets {
            for t in self.sets {
                for (ui, u) in enumerate_functions(s, t).iter().enumerate() {
                    instances += 1;
                    let mapped = component(self.kind, &self.kind.on_function(u)).clone();
                    // Units: U(F(u)) . unit_S == unit_T . u.
                    // Counits: u . counit_S == counit_T . U(F(u)).
                    let (lhs, rhs) = if self.kind.is_reflection() {
                        (
                            mapped
                                .after(&SetFunction::identity(s))
                                .expect("unit is the identity on S"),
                            SetFunction::identity(t)
                                .after(u)
                                .expect("unit is the identity on T"),
                        )
                    } else {
                        (
                            u.after(&SetFunction::identity(s))
                                .expect("counit is the identity on S"),
                            SetFunction::identity(t)
                                .after(&mapped)
                                .expect("counit is the identity on T"),
                        )
                    };
                    if lhs != rhs {
                        violations.push(LawViolation {
                            instance: format!("S={s}, T={t}, u#{ui}"),
                            lhs: format!("{lhs}"),
                            rhs: format!("{rhs}"),
                        });
                    }
                }
            }
        }
        self.row(LawKind::StructureMapNaturality, instances, violations)
    }

    fn derived_map_naturality(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        for (gi, _) in self.quivers.iter().enumerate() {
            for (hi, _) in self.quivers.iter().enumerate() {
                for (pi, psi) in self.quiver_homs[gi][hi].iter().enumerate() {
                    instances += 1;
                    let transported = self.kind.on_function(component(self.kind, psi));
                    // Derived counit: psi . derived_G == derived_H . F(U(psi)).
                    // Derived unit: derived_H . psi == F(U(psi)) . derived_G.
                    let (lhs, rhs) = if self.kind.is_reflection() {
                        (
                            psi.after(&self.derived[gi])
                                .expect("derived map lands in G"),
                            self.derived[hi]
                                .after(&transported)
                                .expect("transport lands in F_U(H)"),
                        )
                    } else {
                        (
                            self.derived[hi].after(psi).expect("psi lands in H"),
                            transported
                                .after(&self.derived[gi])
                                .expect("derived map lands in F_U(G)"),
                        )
                    };
                    if lhs != rhs {
                        violations.push(LawViolation {
                            instance: format!("G#{gi}, H#{hi}, psi#{pi}"),
                            lhs: format!("{}", lhs.vertex_map()),
                            rhs: format!("{}", rhs.vertex_map()),
                        });
                    }
                }
            }
        }
        self.row(LawKind::DerivedMapNaturality, instances, violations)
    }

    fn triangle_identities(&self) -> LawRow {
        let mut violations = Vec::new();
        let mut instances = 0;
        // First triangle, one instance per quiver: the projected derived map
        // composed with the structure map is the identity on U(G).
        for (gi, g) in self.quivers.iter().enumerate() {
            instances += 1;
            let identity = SetFunction::identity(carrier(self.kind, g));
            let lhs = triangle_composite(self.kind, &self.derived[gi]);
            if lhs != identity {
                violations.push(LawViolation {
                    instance: format!("G#{gi}"),
                    lhs: format!("{lhs}"),
                    rhs: format!("{identity}"),
                });
            }
        }
        // Second triangle, one instance per set: on the free object itself,
        // the derived map composed with the construction applied to the
        // structure map is the identity morphism.
        for (si, s) in self.sets.iter().enumerate() {
            instances += 1;
            let free = &self.free[si];
            let structure = self.kind.on_function(&SetFunction::identity(s));
            let derived_at_free =
                self.factor(free, &SetFunction::identity(carrier(self.kind, free)));
            let composite = if self.kind.is_reflection() {
                derived_at_free.after(&structure)
            } else {
                structure.after(&derived_at_free)
            }
            .expect("triangle legs share the free object");
            if composite != QuiverMorphism::identity(free) {
                violations.push(LawViolation {
                    instance: format!("S={s}"),
                    lhs: format!("{}", composite.edge_map()),
                    rhs: format!("{}", QuiverMorphism::identity(free).edge_map()),
                });
            }
        }
        self.row(LawKind::TriangleIdentities, instances, violations)
    }
}

/// The carrier the adjunction factors through: the vertex set for the
/// vertex-side constructions, the edge set for the edge-side ones.
fn carrier(kind: Construction, g: &Quiver) -> &FiniteSet {
    match kind {
        Construction::IndependentVertices | Construction::Complete => g.vertices(),
        Construction::IndependentEdges | Construction::Bouquet => g.edges(),
    }
}

/// The matching component of a morphism: what the vertex (resp. edge)
/// functor does to it.
fn component(kind: Construction, phi: &QuiverMorphism) -> &SetFunction {
    match kind {
        Construction::IndependentVertices | Construction::Complete => phi.vertex_map(),
        Construction::IndependentEdges | Construction::Bouquet => phi.edge_map(),
    }
}
