//! Permutations of `0..n` and canonically sorted sets of them.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (i, &x) in image.iter().enumerate() {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image of {i} is {x}, outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{x} is hit twice")));
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(image.clone()).is_ok());
        Permutation { image }
    }

    /// Transposition of `i` and `j` on `0..n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(i, j);
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    /// `f ∘ self ∘ f⁻¹`.
    pub fn conjugate_by(&self, f: &Permutation) -> Self {
        let mut image = vec![0; self.len()];
        for x in 0..self.len() {
            image[f.image[x]] = f.image[self.image[x]];
        }
        Permutation { image }
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|(i, &x)| *i == x).count()
    }

    /// Order as an element of the symmetric group (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut ord = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.image {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A set of permutations kept in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSet {
    elements: Vec<Permutation>,
    generators: Option<Vec<Permutation>>,
}

impl PermSet {
    pub fn from_elements(mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermSet {
            elements,
            generators: None,
        }
    }

    pub fn with_generators(mut self, generators: Vec<Permutation>) -> Self {
        self.generators = Some(generators);
        self
    }

    pub fn trivial(n: usize) -> Self {
        PermSet::from_elements(vec![Permutation::identity(n)])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the set is exactly `{identity}`.
    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_identity()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[Permutation]> {
        self.generators.as_deref()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    /// Closure under composition and inverse, and presence of the identity.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return false;
        };
        if !self.contains(&Permutation::identity(first.len())) {
            return false;
        }
        self.elements
            .iter()
            .all(|f| self.contains(&f.inverse()) && self.elements.iter().all(|g| self.contains(&f.compose(g))))
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
