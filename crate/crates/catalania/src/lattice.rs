//! Weight lattice plumbing: partitions, affine weights with level, simple and
//! affine reflections, permutations, and words over the affine index set.
//!
//! Conventions. The finite weight lattice has basis `e_1..e_n`; an affine
//! weight additionally carries the coefficient `m` of the loop grading `delta`
//! and an integer `level` (the eigenvalue of the canonical central element).
//! Index `i` in `0..n` names a simple reflection: `alpha_i = e_i - e_{i+1}`
//! for `1 <= i < n` and `alpha_0 = e_n - e_1 + delta`. The epsilon indices in
//! the API are 1-based; `gamma[k]` stores the coefficient of `e_{k+1}`.
//!
//! Index `0` and index `n` name the same node of the affine cycle; operations
//! taking a twist or letter index reduce `n` to `0` rather than rejecting it.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A partition: weakly decreasing non-negative parts, stored without trailing
/// zeros. Comparison and hashing use the normalized form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates weak decrease and non-negativity; trailing zeros are trimmed.
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition {
                    reason: format!("parts must be weakly decreasing, got {} < {}", w[0], w[1]),
                });
            }
        }
        if let Some(&last) = parts.last() {
            if last < 0 {
                return Err(Error::InvalidPartition {
                    reason: format!("parts must be non-negative, got {last}"),
                });
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based; zero beyond the stored length.
    pub fn part(&self, i: usize) -> i64 {
        assert!(i >= 1, "parts are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First part (zero for the empty partition).
    pub fn first(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.parts.len() > n {
            return Err(Error::PartitionTooLong {
                len: self.parts.len(),
                n,
            });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// The difference vector `(l_1 - l_2, ..., l_{n-1} - l_n, l_n)`.
    ///
    /// Entry `j` (1-based) is the multiplicity of the `j`-th fundamental
    /// weight in `lambda`, so `lambda = sum_j m_j(lambda) w_j`. Index `n`
    /// doubles as index `0` wherever the affine node is meant.
    pub fn m_vector(&self, n: usize) -> Result<Vec<i64>> {
        let padded = self.padded(n)?;
        let mut m = Vec::with_capacity(n);
        for j in 0..n {
            if j + 1 < n {
                m.push(padded[j] - padded[j + 1]);
            } else {
                m.push(padded[n - 1]);
            }
        }
        Ok(m)
    }

    /// All partitions with at most `max_parts` parts and size at most
    /// `max_size`, in increasing lexicographic order on the part vectors.
    pub fn enumerate(max_parts: usize, max_size: i64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::new()];
        while let Some(cur) = stack.pop() {
            out.push(Partition { parts: cur.clone() });
            if cur.len() < max_parts {
                let used: i64 = cur.iter().sum();
                let cap = cur.last().copied().unwrap_or(max_size);
                let mut next = cap.min(max_size - used);
                // push larger parts first so the stack pops in lex order
                while next >= 1 {
                    let mut ext = cur.clone();
                    ext.push(next);
                    stack.push(ext);
                    next -= 1;
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`; the empty string (or `"0"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("invalid partition part {t:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Partition::new(parts)
    }
}

/// An affine weight: finite part `gamma` in the epsilon basis, the exponent
/// `m` of `delta`, and the `level` (coefficient of the central character).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    gamma: Vec<i64>,
    m: i64,
    level: i64,
}

impl AffineWeight {
    pub fn new(gamma: Vec<i64>, m: i64, level: i64) -> Self {
        AffineWeight { gamma, m, level }
    }

    /// The weight `lambda` at the given level, with `m = 0`.
    pub fn from_partition(lambda: &Partition, n: usize, level: i64) -> Result<Self> {
        Ok(AffineWeight {
            gamma: lambda.padded(n)?,
            m: 0,
            level,
        })
    }

    pub fn rank(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    fn check_index(&self, i: usize) -> Result<()> {
        let n = self.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if i == 0 && n < 2 {
            return Err(Error::RankTooSmall { n });
        }
        Ok(())
    }

    /// The integer `p` governing the `i`-th string through this weight:
    /// `gamma_i - gamma_{i+1}` for finite `i`, and
    /// `level + gamma_n - gamma_1` for `i = 0`.
    pub fn coroot_pairing(&self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        let n = self.rank();
        if i == 0 {
            Ok(self.level + self.gamma[n - 1] - self.gamma[0])
        } else {
            Ok(self.gamma[i - 1] - self.gamma[i])
        }
    }

    /// The simple (or affine, `i = 0`) reflection: subtracts
    /// `coroot_pairing(i)` times `alpha_i`. The level never changes.
    pub fn reflect(&self, i: usize) -> Result<AffineWeight> {
        let p = self.coroot_pairing(i)?;
        let mut out = self.clone();
        let n = self.rank();
        if i == 0 {
            // alpha_0 = e_n - e_1 + delta
            out.gamma[0] += p;
            out.gamma[n - 1] -= p;
            out.m -= p;
        } else {
            out.gamma[i - 1] -= p;
            out.gamma[i] += p;
        }
        Ok(out)
    }
}

/// A word over the affine index set `{0, 1, ..., n-1}`.
///
/// Words are stored in functor order: the last letter is applied first when
/// the word drives a composition of operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation: `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The longest element: `w(i) = n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The longest element of the parabolic generated by `s_a, ..., s_b`: it
    /// reverses the letters `a..=b+1` and fixes the rest. An empty interval
    /// (`a > b`) gives the identity.
    pub fn longest_in_interval(n: usize, a: usize, b: usize) -> Result<Self> {
        if a > b {
            return Ok(Permutation::identity(n));
        }
        if a < 1 || b > n.saturating_sub(1) {
            return Err(Error::InvalidInterval { a, b, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images[a - 1..=b].reverse();
        Ok(Permutation { images })
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidPermutation {
                    reason: format!("{images:?} is not a permutation of 1..={n}"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of adjacent transpositions for a word over `{1, ..., n-1}`.
    /// Affine letters (`0`) are rejected: only finite permutations live here.
    pub fn from_word(n: usize, word: &Word) -> Result<Self> {
        let mut w = Permutation::identity(n);
        for &letter in word.letters() {
            if letter == 0 || letter >= n {
                return Err(Error::InvalidWordLetter {
                    letter,
                    n,
                    reason: "a finite permutation needs letters in 1..n".into(),
                });
            }
            w = w.right_mul_s(letter)?;
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// True iff `w(i) > w(i+1)`, i.e. right multiplication by `s_i` shortens.
    pub fn descent(&self, i: usize) -> Result<bool> {
        let n = self.n();
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(self.images[i - 1] > self.images[i])
    }

    /// `w * s_i`: swaps the entries at positions `i` and `i+1`.
    pub fn right_mul_s(&self, i: usize) -> Result<Permutation> {
        let n = self.n();
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// Group product: `(self * other)(i) = self(other(i))`.
    pub fn mul(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let images = (1..=self.n()).map(|i| self.image(other.image(i))).collect();
        Ok(Permutation { images })
    }

    /// Deterministic reduced word: repeatedly strip the smallest descent.
    ///
    /// The returned word multiplies out to `w` and has length `w.length()`.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let n = w.n();
        let mut stripped = Vec::new();
        'outer: loop {
            for i in 1..n {
                if w.images[i - 1] > w.images[i] {
                    w.images.swap(i - 1, i);
                    stripped.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        stripped.reverse();
        Word::new(stripped)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coroot_pairing_examples() {
        let w = AffineWeight::new(vec![2, 0, 0], 0, 0);
        assert_eq!(w.coroot_pairing(1).unwrap(), 2);

        let w = AffineWeight::new(vec![1, 1, 1], 0, 1);
        assert_eq!(w.coroot_pairing(0).unwrap(), 1);

        let w = AffineWeight::new(vec![1, 0, 0], 0, 0);
        assert_eq!(w.coroot_pairing(0).unwrap(), -1);
    }

    #[test]
    fn reflect_examples() {
        // s_0 sends e_1 to e_n + delta at level 0
        let w = AffineWeight::new(vec![1, 0, 0], 0, 0);
        let r = w.reflect(0).unwrap();
        assert_eq!(r, AffineWeight::new(vec![0, 0, 1], 1, 0));
        assert_eq!(r.reflect(0).unwrap(), w);

        let w = AffineWeight::new(vec![1, 0], 0, 0);
        assert_eq!(w.reflect(1).unwrap(), AffineWeight::new(vec![0, 1], 0, 0));

        // level-1 step across the affine wall
        let w = AffineWeight::new(vec![1, 1, 1, 1], 0, 1);
        let r = w.reflect(0).unwrap();
        assert_eq!(r, AffineWeight::new(vec![2, 1, 1, 0], -1, 1));
        assert_eq!(r.reflect(0).unwrap(), w);
    }

    #[test]
    fn reflect_bad_index() {
        let w = AffineWeight::new(vec![1, 0], 0, 0);
        assert!(w.reflect(2).is_err());
    }

    #[test]
    fn m_vector_examples() {
        let l = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(l.m_vector(3).unwrap(), vec![1, 1, 1]);

        let l = Partition::new(vec![2, 2, 0]).unwrap();
        assert_eq!(l.m_vector(3).unwrap(), vec![0, 2, 0]);

        let l = Partition::new(vec![5]).unwrap();
        assert_eq!(l.m_vector(4).unwrap(), vec![5, 0, 0, 0]);
    }

    #[test]
    fn m_vector_rejects_long_partition() {
        let l = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(l.m_vector(2).is_err());
    }

    #[test]
    fn partition_normalizes_trailing_zeros() {
        let a = Partition::new(vec![2, 1, 0, 0]).unwrap();
        let b = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2,1");
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), b);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn descent_examples() {
        let w0 = Permutation::longest(3);
        assert!(w0.descent(1).unwrap());
        assert!(!Permutation::identity(3).descent(1).unwrap());
        let w = Permutation::from_images(vec![2, 1, 3]).unwrap();
        assert!(!w.descent(2).unwrap());
        assert!(w.descent(3).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::longest(2).reduced_word().letters(), &[1]);
        let w0 = Permutation::longest(3);
        let word = w0.reduced_word();
        assert_eq!(word.letters(), &[1, 2, 1]);
        assert_eq!(Permutation::from_word(3, &word).unwrap(), w0);
    }

    #[test]
    fn longest_in_interval_examples() {
        assert_eq!(
            Permutation::longest_in_interval(3, 1, 2).unwrap(),
            Permutation::longest(3)
        );
        let w = Permutation::longest_in_interval(6, 3, 5).unwrap();
        assert_eq!(w.images(), &[1, 2, 6, 5, 4, 3]);
        assert_eq!(w.length(), 6);
        assert_eq!(
            Permutation::longest_in_interval(4, 3, 2).unwrap(),
            Permutation::identity(4)
        );
        assert!(Permutation::longest_in_interval(4, 0, 2).is_err());
        assert!(Permutation::longest_in_interval(4, 2, 4).is_err());
    }

    #[test]
    fn word_from_affine_letter_rejected() {
        assert!(Permutation::from_word(3, &Word::new(vec![1, 0])).is_err());
    }

    #[test]
    fn partition_enumeration_small() {
        let all = Partition::enumerate(2, 2);
        let strs: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["", "1", "1,1", "2"]);
        assert_eq!(Partition::enumerate(3, 4).len(), 1 + 1 + 2 + 3 + 4);
    }

    fn arb_weight(n: usize) -> impl Strategy<Value = AffineWeight> {
        (
            proptest::collection::vec(-4i64..=4, n),
            -3i64..=3,
            0i64..=3,
        )
            .prop_map(|(gamma, m, level)| AffineWeight::new(gamma, m, level))
    }

    proptest! {
        #[test]
        fn reflect_is_an_involution(w in arb_weight(4), i in 0usize..4) {
            let r = w.reflect(i).unwrap();
            prop_assert_eq!(r.reflect(i).unwrap(), w.clone());
            prop_assert_eq!(r.level(), w.level());
        }

        #[test]
        fn m_vector_reconstructs_partition(parts in proptest::collection::vec(0i64..=6, 0..4)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(sorted).unwrap();
            let n = 4;
            let m = lambda.m_vector(n).unwrap();
            // lambda = sum_j m_j * (1,...,1 (j ones), 0,...)
            let mut rebuilt = vec![0i64; n];
            for (j, &mj) in m.iter().enumerate() {
                for entry in rebuilt.iter_mut().take(j + 1) {
                    *entry += mj;
                }
            }
            prop_assert_eq!(rebuilt, lambda.padded(n).unwrap());
        }

        #[test]
        fn reduced_word_is_reduced(images in Just(()).prop_perturb(|_, mut rng| {
            use proptest::prelude::Rng;
            let mut v: Vec<usize> = (1..=6).collect();
            for i in (1..v.len()).rev() {
                let j = rng.gen_range(0..=i);
                v.swap(i, j);
            }
            v
        })) {
            let w = Permutation::from_images(images).unwrap();
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(6, &word).unwrap(), w.clone());
            // descents are exactly the positions where the next entry drops
            for i in 1..6 {
                prop_assert_eq!(w.descent(i).unwrap(), w.image(i) > w.image(i + 1));
            }
        }
    }
}
