//! Weyl group elements as root permutations.

use std::hash::{Hash, Hasher};

/// An element of a Weyl group, stored as the permutation it induces on the
/// roots of its [`RootSystem`](super::RootSystem).
///
/// Equality and hashing use the permutation only; the cached length is the
/// number of positive roots sent to negative roots.
#[derive(Clone, Debug)]
pub struct WeylElement {
    perm: Vec<u16>,
    length: usize,
}

impl WeylElement {
    pub(crate) fn from_parts(perm: Vec<u16>, length: usize) -> Self {
        WeylElement { perm, length }
    }

    /// Image of root `r` is `perm()[r]`.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    /// By length, then permutation; gives deterministic iteration orders.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.perm.cmp(&other.perm))
    }
}
