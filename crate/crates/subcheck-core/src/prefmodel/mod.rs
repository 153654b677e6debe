//! Domain types for universes and preference lists: construction,
//! validation, canonicalization, and the text format parser.
//!
//! A [`PreferenceList`] is an ordered sequence of indifference classes, best
//! class first, together covering every *acceptable* set exactly once. The
//! empty set is always acceptable and always sits in the last class; nothing
//! an owner would reject outright is listed. Class order is the strict part
//! of the relation, co-membership the symmetric part.

mod altset;
mod parse;

pub use altset::{AltSet, Members};
pub use parse::{parse_preference_list, ParseError};

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The finite set of alternatives, with a fixed index order.
///
/// Index `i` corresponds to `names()[i]` for the lifetime of the instance;
/// all [`AltSet`] values over this universe use that indexing.
#[derive(Clone, Debug)]
pub struct Universe {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Universe {
    /// Builds a universe from alternative names.
    ///
    /// Names must be non-empty, pairwise distinct, and match
    /// `[A-Za-z0-9_]+` so that every universe can be written back out in the
    /// text format.
    pub fn new(names: Vec<String>) -> Result<Self, ValidationError> {
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(ValidationError::InvalidName { name: name.clone() });
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(ValidationError::DuplicateName { name: name.clone() });
            }
        }
        Ok(Universe { names, index })
    }

    /// Number of alternatives.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn empty_set(&self) -> AltSet {
        AltSet::empty(self.size())
    }

    /// Convenience constructor for a set given member names.
    pub fn set_of(&self, members: &[&str]) -> Result<AltSet, ValidationError> {
        let mut set = self.empty_set();
        for name in members {
            let i = self
                .index_of(name)
                .ok_or_else(|| ValidationError::UnknownAlternative {
                    name: (*name).to_owned(),
                })?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Renders a set in the text format, members in universe index order.
    pub fn render_set(&self, set: &AltSet) -> String {
        let mut out = String::from("{");
        for (n, i) in set.iter().enumerate() {
            if n > 0 {
                out.push(',');
            }
            out.push_str(self.name(i));
        }
        out.push('}');
        out
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A maximal family of mutually indifferent acceptable sets.
///
/// Members are pairwise distinct and stored in canonical [`AltSet`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndifferenceClass {
    members: Vec<AltSet>,
}

impl IndifferenceClass {
    pub fn members(&self) -> &[AltSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A weak preference relation in list form: every acceptable set, arranged
/// into indifference classes ordered best first.
///
/// Invariants enforced at construction:
///
/// * the classes partition the acceptable sets (no set appears twice);
/// * the empty set appears exactly once, in the last class;
/// * every member is a set over the list's universe.
///
/// The instance is immutable after construction and safe to share across
/// threads.
#[derive(Clone, Debug)]
pub struct PreferenceList {
    universe: Universe,
    classes: Vec<IndifferenceClass>,
    /// All acceptable sets, class-major, canonical order within a class.
    /// This is the list `L` the violation search iterates.
    flat: Vec<AltSet>,
    /// Start offset of each class in `flat`, plus a final total-length entry.
    class_offsets: Vec<usize>,
    rank_by_set: BTreeMap<AltSet, usize>,
    max_class: usize,
}

impl PreferenceList {
    /// Builds a validated list from classes of sets (best class first).
    ///
    /// Members of each class may be given in any order; they are stored
    /// canonically. If the empty set is absent it is appended as a final
    /// singleton class; if present anywhere but the last class the list is
    /// rejected, since everything listed must be at least as good as the
    /// empty set.
    pub fn from_classes(
        universe: Universe,
        classes: Vec<Vec<AltSet>>,
    ) -> Result<Self, ValidationError> {
        let width = universe.size();
        let mut sorted: Vec<Vec<AltSet>> = Vec::with_capacity(classes.len() + 1);
        for class in classes {
            if class.is_empty() {
                return Err(ValidationError::EmptyClass);
            }
            for set in &class {
                if set.width() != width {
                    return Err(ValidationError::WidthMismatch {
                        expected: width,
                        found: set.width(),
                    });
                }
            }
            let mut class = class;
            class.sort();
            sorted.push(class);
        }

        // Locate the empty set and append it if missing.
        let empty = universe.empty_set();
        let mut empty_class = None;
        for (rank, class) in sorted.iter().enumerate() {
            if class.contains(&empty) {
                empty_class = Some(rank);
                break;
            }
        }
        match empty_class {
            Some(rank) if rank + 1 != sorted.len() => return Err(ValidationError::EmptySetNotLast),
            Some(_) => {}
            None => sorted.push(alloc::vec![empty]),
        }

        let mut rank_by_set = BTreeMap::new();
        let mut flat = Vec::new();
        let mut class_offsets = Vec::with_capacity(sorted.len() + 1);
        let mut max_class = 0;
        for (rank, class) in sorted.iter().enumerate() {
            class_offsets.push(flat.len());
            max_class = max_class.max(class.len());
            for set in class {
                if rank_by_set.insert(set.clone(), rank).is_some() {
                    return Err(ValidationError::DuplicateSet {
                        set: universe.render_set(set),
                    });
                }
                flat.push(set.clone());
            }
        }
        class_offsets.push(flat.len());

        Ok(PreferenceList {
            universe,
            classes: sorted
                .into_iter()
                .map(|members| IndifferenceClass { members })
                .collect(),
            flat,
            class_offsets,
            rank_by_set,
            max_class,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// `u`: the number of alternatives.
    pub fn universe_size(&self) -> usize {
        self.universe.size()
    }

    /// `ℓ`: the number of acceptable sets, empty set included.
    pub fn set_count(&self) -> usize {
        self.flat.len()
    }

    /// `s`: the size of the largest indifference class.
    pub fn max_class_size(&self) -> usize {
        self.max_class
    }

    pub fn classes(&self) -> &[IndifferenceClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Every acceptable set in search order: by class rank, canonical order
    /// within a class.
    pub fn list(&self) -> &[AltSet] {
        &self.flat
    }

    pub(crate) fn class_offsets(&self) -> &[usize] {
        &self.class_offsets
    }

    /// The 0-based class rank of `set` (0 = best), or `None` when `set` is
    /// unacceptable. Constant-ish lookup against an index built at
    /// construction.
    pub fn class_rank(&self, set: &AltSet) -> Option<usize> {
        self.rank_by_set.get(set).copied()
    }

    pub fn is_acceptable(&self, set: &AltSet) -> bool {
        self.class_rank(set).is_some()
    }

    /// Emits the list in the text format: a `universe:` header (omitted for
    /// an empty universe), then one line of classes joined by ` / `, sets
    /// within a class joined by ` ~ `, members in universe index order.
    ///
    /// Parsing the result reproduces the list exactly, including
    /// alternatives that appear in no acceptable set.
    pub fn canonical_form(&self) -> String {
        let mut out = String::new();
        if self.universe.size() > 0 {
            out.push_str("universe: ");
            for (i, name) in self.universe.names().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(name);
            }
            out.push('\n');
        }
        for (rank, class) in self.classes.iter().enumerate() {
            if rank > 0 {
                out.push_str(" / ");
            }
            for (n, set) in class.members().iter().enumerate() {
                if n > 0 {
                    out.push_str(" ~ ");
                }
                out.push_str(&self.universe.render_set(set));
            }
        }
        out
    }
}

impl PartialEq for PreferenceList {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.classes == other.classes
    }
}

impl Eq for PreferenceList {}

impl fmt::Display for PreferenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_form())
    }
}

/// A structurally well-formed input that does not describe a valid
/// preference list or universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    /// The same set is listed twice (within one class or across classes).
    DuplicateSet { set: String },
    /// The empty set appears above the bottom class.
    EmptySetNotLast,
    /// A universe header is in effect and a set mentions a name outside it.
    UnknownAlternative { name: String },
    /// Universe names must be pairwise distinct.
    DuplicateName { name: String },
    /// Universe names must match `[A-Za-z0-9_]+`.
    InvalidName { name: String },
    /// A class with no members was supplied to `from_classes`.
    EmptyClass,
    /// A set's bit width does not match the universe.
    WidthMismatch { expected: usize, found: usize },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::DuplicateSet { set } => {
                write!(f, "set {set} is listed more than once")
            }
            ValidationError::EmptySetNotLast => {
                write!(f, "the empty set {{}} must be in the last class")
            }
            ValidationError::UnknownAlternative { name } => {
                write!(f, "alternative '{name}' is not in the declared universe")
            }
            ValidationError::DuplicateName { name } => {
                write!(f, "alternative '{name}' declared twice")
            }
            ValidationError::InvalidName { name } => {
                write!(f, "invalid alternative name '{name}'")
            }
            ValidationError::EmptyClass => write!(f, "indifference class with no members"),
            ValidationError::WidthMismatch { expected, found } => {
                write!(
                    f,
                    "set over {found} alternatives in a universe of {expected}"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ValidationError {}

/// Any failure to turn text into a [`PreferenceList`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrefError {
    /// Malformed syntax, with position.
    Syntax(ParseError),
    /// Well-formed text describing an invalid list.
    Invalid(ValidationError),
}

impl fmt::Display for PrefError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefError::Syntax(e) => e.fmt(f),
            PrefError::Invalid(e) => e.fmt(f),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PrefError {}

impl From<ParseError> for PrefError {
    fn from(e: ParseError) -> Self {
        PrefError::Syntax(e)
    }
}

impl From<ValidationError> for PrefError {
    fn from(e: ValidationError) -> Self {
        PrefError::Invalid(e)
    }
}
