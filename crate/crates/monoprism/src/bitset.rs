//! Fixed-capacity vertex sets backed by a single `u64`.
//!
//! Every set carries the order of the graph it belongs to, so that set
//! complement and "is this the full vertex set" queries are well defined.
//! The one-word representation caps graphs at 64 vertices, which is plenty
//! here: prisms double the base order, so base graphs stop at 32.

/// Largest number of vertices a [`VertexSet`] (and hence a graph) can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices drawn from `{0, 1, .., capacity-1}`.
///
/// `Copy` on purpose: sets are a single machine word plus a capacity tag, and
/// the algorithms in this crate pass them around freely.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    capacity: u8,
}

impl VertexSet {
    /// The empty set over a universe of `capacity` vertices.
    pub fn empty(capacity: usize) -> Self {
        assert!(
            capacity <= MAX_VERTICES,
            "vertex universe of {capacity} exceeds the {MAX_VERTICES}-vertex cap"
        );
        VertexSet {
            bits: 0,
            capacity: capacity as u8,
        }
    }

    /// The full set `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        VertexSet::empty(capacity).complement()
    }

    /// The singleton `{v}`.
    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut s = VertexSet::empty(capacity);
        s.insert(v);
        s
    }

    /// Builds a set from vertex indices.
    pub fn from_indices(capacity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::empty(capacity);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Number of vertices in the universe this set ranges over.
    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    fn mask(&self) -> u64 {
        if self.capacity == 64 {
            u64::MAX
        } else {
            (1u64 << self.capacity) - 1
        }
    }

    fn check_member(&self, v: usize) {
        assert!(
            v < self.capacity as usize,
            "vertex {v} out of range for a {}-vertex universe",
            self.capacity
        );
    }

    fn check_compatible(&self, other: &VertexSet) {
        debug_assert_eq!(
            self.capacity, other.capacity,
            "sets over different vertex universes"
        );
    }

    pub fn insert(&mut self, v: usize) {
        self.check_member(v);
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.check_member(v);
        self.bits &= !(1u64 << v);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.check_member(v);
        self.bits >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == self.mask()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_compatible(other);
        VertexSet {
            bits: self.bits | other.bits,
            capacity: self.capacity,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_compatible(other);
        VertexSet {
            bits: self.bits & other.bits,
            capacity: self.capacity,
        }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_compatible(other);
        VertexSet {
            bits: self.bits & !other.bits,
            capacity: self.capacity,
        }
    }

    /// Complement within the universe, i.e. `{0, .., capacity-1} \ self`.
    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & self.mask(),
            capacity: self.capacity,
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_compatible(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check_compatible(other);
        self.bits & other.bits == 0
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order. Takes the set by value (it is `Copy`), so
    /// the iterator borrows nothing.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    /// Members collected into a `Vec`, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `true` if `self` precedes `other` when both are written as ascending
    /// vertex lists and compared lexicographically. Used to make witness
    /// tie-breaking deterministic.
    pub fn lex_precedes(&self, other: &VertexSet) -> bool {
        self.check_compatible(other);
        let diff = self.bits ^ other.bits;
        if diff == 0 {
            return false;
        }
        let first = 1u64 << diff.trailing_zeros();
        // The smallest differing vertex decides, except that a set which is a
        // strict "prefix" of the other (runs out first) comes first.
        if self.bits & first != 0 {
            // self owns the smallest differing vertex; self precedes unless it
            // only has that vertex because other already ended.
            other.bits & (first - 1) != other.bits
        } else {
            self.bits & (first - 1) == self.bits
        }
    }

    /// Raw bitmap, exposed for subset enumeration loops.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Rebuilds a set from a raw bitmap. Bits at or above `capacity` must be
    /// zero.
    pub fn from_bits(capacity: usize, bits: u64) -> Self {
        let s = VertexSet::empty(capacity);
        assert!(bits & !s.mask() == 0, "bitmap has bits outside the universe");
        VertexSet {
            bits,
            capacity: s.capacity,
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
