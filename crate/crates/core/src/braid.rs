//! Braid words and the symmetric group.
//!
//! Composition convention shared by every module: a word is read left to
//! right and the leftmost letter acts first. In one-line notation that makes
//! appending the letter `i` a swap of the entries at positions `i` and `i+1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in the standard generators of the braid group on `strands` strands.
///
/// Letter `g` stands for `σ_|g|` when positive and `σ_|g|^-1` when negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidDiagram("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: g, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("identity braid is valid")
    }

    /// Parses the comma-separated letter syntax, e.g. `"1,-2,1"`. The empty
    /// string is the identity braid.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut letters = Vec::new();
        if !text.is_empty() {
            let mut column = 1;
            for tok in text.split(',') {
                let g = i32::from_str(tok.trim()).map_err(|_| Error::Parse {
                    line: 1,
                    column,
                    message: format!("expected a signed generator, found {:?}", tok.trim()),
                })?;
                letters.push(g);
                column += tok.len() + 1;
            }
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// The underlying permutation; crossing signs are ignored.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &g in &self.letters {
            p.swap_positions(g.unsigned_abs() as usize);
        }
        p
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Same generators with every sign flipped.
    pub fn negated(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }

    /// The group inverse.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Embeds into a braid group with more strands (new strands on the right).
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Underlying permutation of a braid word.
pub fn perm_of_word(w: &BraidWord) -> Permutation {
    w.permutation()
}

pub fn writhe_word(w: &BraidWord) -> i64 {
    w.writhe()
}

/// Positive half twist: the lexicographically smallest reduced word of the
/// longest element.
pub fn half_twist_word(n: usize) -> BraidWord {
    Permutation::longest(n).reduced_word()
}

/// Positive full twist, the half twist squared.
pub fn full_twist_word(n: usize) -> BraidWord {
    let ht = half_twist_word(n);
    ht.concat(&ht).expect("same strand count")
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u16).collect() }
    }

    /// The order-reversing permutation `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Self { images: (1..=n as u16).rev().collect() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images: images.iter().map(|&x| x as u16).collect() })
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// Right multiplication by the simple transposition `s_i` (1-based):
    /// swaps the entries at positions `i` and `i+1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.swap_positions(i);
        p
    }

    /// Whether right multiplication by `s_i` lengthens the permutation.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Number of inversions, i.e. the crossing count of a permutation braid.
    pub fn coxeter_length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The lexicographically smallest reduced word.
    ///
    /// The first letter of any reduced word is a left descent, and what
    /// remains is a reduced word of the shortened permutation, so taking the
    /// smallest left descent at each step yields the lexicographic minimum.
    pub fn reduced_word(&self) -> BraidWord {
        let n = self.images.len();
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(self.coxeter_length());
        loop {
            let mut pos = vec![0usize; n + 1];
            for (k, &x) in rest.images.iter().enumerate() {
                pos[x as usize] = k;
            }
            // value i+1 sitting left of value i is a left descent
            let Some(i) = (1..n).find(|&i| pos[i + 1] < pos[i]) else { break };
            letters.push(i as i32);
            for x in rest.images.iter_mut() {
                if *x as usize == i {
                    *x += 1;
                } else if *x as usize == i + 1 {
                    *x -= 1;
                }
            }
        }
        BraidWord::new(n.max(1), letters).expect("reduced word letters are in range")
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        // (self then other) in the leftmost-acts-first convention
        if self.strands() != other.strands() {
            return Err(Error::StrandMismatch { left: self.strands(), right: other.strands() });
        }
        let mut p = self.clone();
        for g in other.reduced_word().letters() {
            p.swap_positions(*g as usize);
        }
        Ok(p)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize - 1;
            }
        }
        cycles
    }

    /// Every element of `S_n`, in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u16> = (1..=n as u16).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
