use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

const WORD_BITS: usize = 64;

/// A subset of a [`Universe`](super::Universe), stored as a fixed-width
/// bit vector.
///
/// Bit `i` is set exactly when alternative `i` (by universe index) is a
/// member. No bit at or beyond the width is ever set. Sets are totally
/// ordered by their integer value with alternative 0 in the least
/// significant position; this is the *canonical order* used wherever a
/// deterministic ordering of sets is required (class members, witness
/// tie-breaking, output).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AltSet {
    width: usize,
    words: Vec<u64>,
}

fn words_for(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

impl AltSet {
    /// The empty set over a universe of `width` alternatives.
    pub fn empty(width: usize) -> Self {
        AltSet {
            width,
            words: vec![0; words_for(width)],
        }
    }

    /// Builds a set from member indices. Panics if an index is out of range.
    pub fn from_indices(width: usize, indices: &[usize]) -> Self {
        let mut set = AltSet::empty(width);
        for &i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `width` bits of `bits`.
    ///
    /// Panics if `width > 64` or if `bits` has a bit set at or beyond `width`.
    pub fn from_bits(width: usize, bits: u64) -> Self {
        assert!(width <= 64, "from_bits supports widths up to 64");
        if width < 64 {
            assert!(bits >> width == 0, "bit set beyond universe width");
        }
        let mut set = AltSet::empty(width);
        if width > 0 {
            set.words[0] = bits;
        } else {
            assert!(bits == 0);
        }
        set
    }

    /// Overwrites the contents with the low `width` bits of `bits`,
    /// reusing the allocation. Width must be at most 64.
    pub(crate) fn assign_bits(&mut self, bits: u64) {
        debug_assert!(self.width <= 64);
        if let Some(w) = self.words.first_mut() {
            *w = bits;
        } else {
            debug_assert!(bits == 0);
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        debug_assert!(index < self.width);
        self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.width, "alternative index out of range");
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.width, "alternative index out of range");
        self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
    }

    /// `self ⊆ other`, word-parallel.
    pub fn is_subset_of(&self, other: &AltSet) -> bool {
        debug_assert_eq!(self.width, other.width, "sets from different universes");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Iterates member indices in ascending order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl BitOrAssign<&AltSet> for AltSet {
    /// Union in place.
    fn bitor_assign(&mut self, rhs: &AltSet) {
        debug_assert_eq!(self.width, rhs.width, "sets from different universes");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a |= b;
        }
    }
}

impl BitAndAssign<&AltSet> for AltSet {
    /// Intersection in place.
    fn bitand_assign(&mut self, rhs: &AltSet) {
        debug_assert_eq!(self.width, rhs.width, "sets from different universes");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a &= b;
        }
    }
}

impl SubAssign<&AltSet> for AltSet {
    /// Difference in place.
    fn sub_assign(&mut self, rhs: &AltSet) {
        debug_assert_eq!(self.width, rhs.width, "sets from different universes");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a &= !b;
        }
    }
}

impl BitOr<&AltSet> for &AltSet {
    type Output = AltSet;
    fn bitor(self, rhs: &AltSet) -> AltSet {
        let mut out = self.clone();
        out |= rhs;
        out
    }
}

impl BitAnd<&AltSet> for &AltSet {
    type Output = AltSet;
    fn bitand(self, rhs: &AltSet) -> AltSet {
        let mut out = self.clone();
        out &= rhs;
        out
    }
}

impl Sub<&AltSet> for &AltSet {
    type Output = AltSet;
    fn sub(self, rhs: &AltSet) -> AltSet {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl PartialOrd for AltSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AltSet {
    /// Canonical order: by width, then by integer value (most significant
    /// word decides first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltSet{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over member indices, ascending.
pub struct Members<'a> {
    set: &'a AltSet,
    word: usize,
    bits: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * WORD_BITS + tz)
    }
}
