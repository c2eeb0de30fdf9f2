//! Finite sets of labels and total functions between them.
//!
//! These are the building blocks everything else is assembled from: a
//! [`FiniteSet`] is an immutable, canonically sorted set of distinct
//! [`Label`]s, and a [`SetFunction`] is a total map between two finite sets.
//! The module also provides the structured sets used by the quiver
//! constructions: the one-point set, the tagged double `{0,1} x S` with its
//! two inclusions, and the square `S^2` with its two projections.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Characters that plain labels may not contain. `(`, `)` and `,` are
/// reserved for the pair encoding, `#` starts a comment in the text formats,
/// and whitespace separates tokens.
const RESERVED: [char; 4] = ['(', ')', ',', '#'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("labels must be non-empty")]
    EmptyLabel,
    #[error("label {0:?} contains the reserved character {1:?}")]
    ReservedChar(String, char),
    #[error("duplicate label {0}")]
    DuplicateLabel(Label),
    #[error("element {0} has no image")]
    MissingImage(Label),
    #[error("element {0} has more than one image")]
    DuplicateSource(Label),
    #[error("mapping key {0} is not an element of the domain")]
    UnknownSource(Label),
    #[error("image {image} of {element} is not an element of the codomain")]
    ImageOutsideCodomain { element: Label, image: Label },
    #[error("carrier mismatch: expected {expected}, found {found}")]
    DomainMismatch {
        expected: FiniteSet,
        found: FiniteSet,
    },
}

/// An element label.
///
/// Plain labels come from [`Label::new`] and may not contain whitespace or
/// the reserved characters. Labels of constructed sets (`{0,1} x S`, `S^2`)
/// are built with [`Label::pair`], which wraps two existing labels as
/// `(left,right)`. Because plain labels cannot contain the delimiters, the
/// pair encoding is unambiguous even when nested.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Result<Label, SetError> {
        let text = text.into();
        if text.is_empty() {
            return Err(SetError::EmptyLabel);
        }
        for ch in text.chars() {
            if ch.is_whitespace() || RESERVED.contains(&ch) {
                return Err(SetError::ReservedChar(text, ch));
            }
        }
        Ok(Label(text))
    }

    /// The label `(left,right)` naming an ordered pair.
    pub fn pair(left: &Label, right: &Label) -> Label {
        Label(format!("({},{})", left.0, right.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The tag component of the tagged double `{0,1} x S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Zero,
    One,
}

impl Tag {
    pub fn label(self) -> Label {
        match self {
            Tag::Zero => Label("0".to_string()),
            Tag::One => Label("1".to_string()),
        }
    }
}

/// Selects a coordinate of the square `S^2`. Projections are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    First,
    Second,
}

/// A finite set of distinct labels, stored lexicographically sorted.
///
/// Equality is label-set equality; because the stored order is canonical,
/// the derived `Eq` implements exactly that.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSet {
    elements: Vec<Label>,
}

impl FiniteSet {
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Result<FiniteSet, SetError> {
        let mut elements: Vec<Label> = labels.into_iter().collect();
        elements.sort();
        for window in elements.windows(2) {
            if window[0] == window[1] {
                return Err(SetError::DuplicateLabel(window[0].clone()));
            }
        }
        Ok(FiniteSet { elements })
    }

    /// Convenience constructor from plain label text.
    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<FiniteSet, SetError> {
        let labels = names
            .into_iter()
            .map(Label::new)
            .collect::<Result<Vec<_>, _>>()?;
        FiniteSet::new(labels)
    }

    pub fn empty() -> FiniteSet {
        FiniteSet::default()
    }

    /// The one-point set `{1}`.
    pub fn point() -> FiniteSet {
        FiniteSet {
            elements: vec![Label("1".to_string())],
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.elements.binary_search(label).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.elements.iter()
    }

    pub(crate) fn nth(&self, index: usize) -> &Label {
        &self.elements[index]
    }

    /// The tagged double `{0,1} x S`, with elements labelled `(0,s)` and `(1,s)`.
    pub fn tagged_double(&self) -> FiniteSet {
        let mut elements = Vec::with_capacity(2 * self.len());
        for tag in [Tag::Zero, Tag::One] {
            let tag = tag.label();
            for s in self.iter() {
                elements.push(Label::pair(&tag, s));
            }
        }
        FiniteSet::new(elements).expect("tagged labels are distinct")
    }

    /// The inclusion `s -> (j,s)` of `S` into its tagged double.
    pub fn inclusion(&self, tag: Tag) -> SetFunction {
        let tag = tag.label();
        let mapping = self
            .iter()
            .map(|s| (s.clone(), Label::pair(&tag, s)))
            .collect();
        SetFunction {
            domain: self.clone(),
            codomain: self.tagged_double(),
            mapping,
        }
    }

    /// The square `S^2`, with one element `(s,t)` per ordered pair.
    pub fn square(&self) -> FiniteSet {
        let mut elements = Vec::with_capacity(self.len() * self.len());
        for s in self.iter() {
            for t in self.iter() {
                elements.push(Label::pair(s, t));
            }
        }
        FiniteSet::new(elements).expect("pair labels are distinct")
    }

    /// The projection `S^2 -> S` onto the chosen coordinate.
    pub fn projection(&self, coordinate: Coordinate) -> SetFunction {
        let mut mapping = BTreeMap::new();
        for s in self.iter() {
            for t in self.iter() {
                let component = match coordinate {
                    Coordinate::First => s,
                    Coordinate::Second => t,
                };
                mapping.insert(Label::pair(s, t), component.clone());
            }
        }
        SetFunction {
            domain: self.square(),
            codomain: self.clone(),
            mapping,
        }
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, label) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

/// A total function between two finite sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetFunction {
    domain: FiniteSet,
    codomain: FiniteSet,
    mapping: BTreeMap<Label, Label>,
}

impl SetFunction {
    /// Validates totality and that every image lies in the codomain.
    pub fn new(
        domain: FiniteSet,
        codomain: FiniteSet,
        mapping: BTreeMap<Label, Label>,
    ) -> Result<SetFunction, SetError> {
        for element in domain.iter() {
            match mapping.get(element) {
                None => return Err(SetError::MissingImage(element.clone())),
                Some(image) if !codomain.contains(image) => {
                    return Err(SetError::ImageOutsideCodomain {
                        element: element.clone(),
                        image: image.clone(),
                    })
                }
                Some(_) => {}
            }
        }
        if mapping.len() != domain.len() {
            let stray = mapping
                .keys()
                .find(|key| !domain.contains(key))
                .expect("length mismatch implies a stray key");
            return Err(SetError::UnknownSource(stray.clone()));
        }
        Ok(SetFunction {
            domain,
            codomain,
            mapping,
        })
    }

    /// Builds a function from `(element, image)` pairs, rejecting repeated
    /// elements.
    pub fn from_pairs(
        domain: FiniteSet,
        codomain: FiniteSet,
        pairs: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<SetFunction, SetError> {
        let mut mapping = BTreeMap::new();
        for (element, image) in pairs {
            if mapping.insert(element.clone(), image).is_some() {
                return Err(SetError::DuplicateSource(element));
            }
        }
        SetFunction::new(domain, codomain, mapping)
    }

    pub fn identity(s: &FiniteSet) -> SetFunction {
        let mapping = s.iter().map(|x| (x.clone(), x.clone())).collect();
        SetFunction {
            domain: s.clone(),
            codomain: s.clone(),
            mapping,
        }
    }

    /// The empty function from the empty set into `codomain`.
    pub fn empty_into(codomain: &FiniteSet) -> SetFunction {
        SetFunction {
            domain: FiniteSet::empty(),
            codomain: codomain.clone(),
            mapping: BTreeMap::new(),
        }
    }

    /// The constant function collapsing `domain` to the one-point set.
    pub fn to_point(domain: &FiniteSet) -> SetFunction {
        let point = FiniteSet::point();
        let one = point.nth(0).clone();
        let mapping = domain.iter().map(|x| (x.clone(), one.clone())).collect();
        SetFunction {
            domain: domain.clone(),
            codomain: point,
            mapping,
        }
    }

    pub fn domain(&self) -> &FiniteSet {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSet {
        &self.codomain
    }

    /// Applies the function. Panics if `element` is not in the domain;
    /// totality is guaranteed for domain elements at construction.
    pub fn apply(&self, element: &Label) -> &Label {
        self.mapping
            .get(element)
            .unwrap_or_else(|| panic!("{element} is not in the domain {}", self.domain))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &Label)> {
        self.mapping.iter()
    }

    /// The composite `self . earlier` (apply `earlier` first).
    pub fn after(&self, earlier: &SetFunction) -> Result<SetFunction, SetError> {
        if earlier.codomain != self.domain {
            return Err(SetError::DomainMismatch {
                expected: self.domain.clone(),
                found: earlier.codomain.clone(),
            });
        }
        let mapping = earlier
            .mapping
            .iter()
            .map(|(x, y)| (x.clone(), self.mapping[y].clone()))
            .collect();
        Ok(SetFunction {
            domain: earlier.domain.clone(),
            codomain: self.codomain.clone(),
            mapping,
        })
    }
}

impl fmt::Display for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.mapping.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}->{y}")?;
        }
        write!(f, "}}: {} -> {}", self.domain, self.codomain)
    }
}

/// The pairing `<f,g>: X -> T^2` of two functions with equal domain `X` and
/// equal codomain `T`, sending `x` to `(f(x),g(x))`.
pub fn pairing(f: &SetFunction, g: &SetFunction) -> Result<SetFunction, SetError> {
    if f.domain != g.domain {
        return Err(SetError::DomainMismatch {
            expected: f.domain.clone(),
            found: g.domain.clone(),
        });
    }
    if f.codomain != g.codomain {
        return Err(SetError::DomainMismatch {
            expected: f.codomain.clone(),
            found: g.codomain.clone(),
        });
    }
    let mapping = f
        .domain
        .iter()
        .map(|x| (x.clone(), Label::pair(f.apply(x), g.apply(x))))
        .collect();
    Ok(SetFunction {
        domain: f.domain.clone(),
        codomain: f.codomain.square(),
        mapping,
    })
}

/// All total functions from `domain` to `codomain`, ordered lexicographically
/// by the tuple of images along the sorted domain.
///
/// There are exactly `|codomain|^|domain|` of them: one empty function when
/// the domain is empty, and none when the domain is non-empty but the
/// codomain is empty.
pub fn enumerate_functions(domain: &FiniteSet, codomain: &FiniteSet) -> Vec<SetFunction> {
    FunctionRange::new(domain, codomain).collect()
}

/// Streaming enumeration of the functions `domain -> codomain`, in the same
/// order as [`enumerate_functions`].
pub struct FunctionRange {
    domain: FiniteSet,
    codomain: FiniteSet,
    next: Option<Vec<usize>>,
}

impl FunctionRange {
    pub fn new(domain: &FiniteSet, codomain: &FiniteSet) -> FunctionRange {
        let next = if domain.is_empty() {
            Some(Vec::new())
        } else if codomain.is_empty() {
            None
        } else {
            Some(vec![0; domain.len()])
        };
        FunctionRange {
            domain: domain.clone(),
            codomain: codomain.clone(),
            next,
        }
    }
}

impl Iterator for FunctionRange {
    type Item = SetFunction;

    fn next(&mut self) -> Option<SetFunction> {
        let mut indices = self.next.take()?;
        let mapping = self
            .domain
            .iter()
            .zip(indices.iter())
            .map(|(x, &i)| (x.clone(), self.codomain.nth(i).clone()))
            .collect();
        let item = SetFunction {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            mapping,
        };
        // Odometer step: the image of the last (largest) domain element
        // varies fastest.
        let mut slot = indices.len();
        while slot > 0 {
            slot -= 1;
            indices[slot] += 1;
            if indices[slot] < self.codomain.len() {
                self.next = Some(indices);
                break;
            }
            indices[slot] = 0;
        }
        Some(item)
    }
}
