use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (src, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::NotAPermutation(format!(
                    "image {img} of {src} is out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::NotAPermutation(format!(
                    "image {img} occurs twice (degree {n})"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Composition with the right factor applied first:
    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (src, &img) in self.images.iter().enumerate() {
            images[img] = src;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle notation on moved points, e.g. `(0 1 2)(3 4)`. The identity
    /// prints as `e`.
    pub fn cycle_notation(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            loop {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.images[x];
                if x == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}
