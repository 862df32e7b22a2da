//! Subsets of a ground set `[n]` encoded as bit masks.
//!
//! Element `i` (0-based) is bit `i`. Ordering is the integer order of the
//! mask, which is the canonical iteration order used throughout the crate.

use std::fmt;

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 32;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `[n]`, i.e. `{0, …, n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement inside `[n]`.
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Subset) -> bool {
        other.is_subset(self)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Renumber the elements of `self ∩ ambient` by their position inside
    /// `ambient`. Used to move between `[n]` and the ground set of a minor.
    pub fn compress(self, ambient: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in ambient.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, ambient: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in ambient.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    /// 1-based element list, the external representation.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// All subsets of `set`, in increasing mask order.
pub fn subsets_of(set: Subset) -> impl Iterator<Item = Subset> {
    // Enumerate submasks upward: s -> (s - set) & set.
    let mask = set.0;
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(Subset(cur))
    })
}

/// All `k`-subsets of `[n]` in increasing mask order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Subset::EMPTY];
    }
    // Gosper's hack.
    let mut out = Vec::new();
    let limit: u64 = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        out.push(Subset(s as u32));
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// All `k`-subsets of an arbitrary set, in increasing mask order.
pub fn k_subsets_of(set: Subset, k: usize) -> Vec<Subset> {
    k_subsets(set.len(), k)
        .into_iter()
        .map(|s| s.expand(set))
        .collect()
}
