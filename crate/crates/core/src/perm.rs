//! Permutations of `[n]` in one-line notation, words in simple reflections and the
//! Demazure (0-Hecke) product.
//!
//! Everything is 1-indexed: `window[0]` is `w(1)` and the letter `a` of a word stands for the
//! simple transposition `s_a = (a, a+1)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self, Error> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".to_string()));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(alloc::format!("{:?}", window)));
            }
            seen[v] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n).collect() }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Self { window: (1..=n).rev().collect() }
    }

    /// The permutation `1 n n-1 ... 2`.
    pub fn one_then_reversed(n: usize) -> Self {
        let mut window = Vec::with_capacity(n);
        if n > 0 {
            window.push(1);
            window.extend((2..=n).rev());
        }
        Self { window }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `w · s_a`: swaps the entries in positions `a` and `a+1`.
    pub fn times_simple(&self, a: usize) -> Result<Self, Error> {
        self.check_letter(a)?;
        let mut window = self.window.clone();
        window.swap(a - 1, a);
        Ok(Self { window })
    }

    /// True iff `l(w · s_a) > l(w)`.
    pub fn ascends_at(&self, a: usize) -> bool {
        self.window[a - 1] < self.window[a]
    }

    fn check_letter(&self, a: usize) -> Result<(), Error> {
        if a == 0 || a >= self.n() {
            return Err(Error::LetterOutOfRange { letter: a, n: self.n() });
        }
        Ok(())
    }

    /// Bruhat order via the rank-matrix criterion: `u <= w` iff for all `i, j`,
    /// `#{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}`.
    pub fn bruhat_le(&self, other: &Self) -> bool {
        bruhat_le_slices(&self.window, &other.window)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Self::identity(n)) }
    }
}

pub(crate) fn bruhat_le_slices(u: &[usize], w: &[usize]) -> bool {
    let n = u.len();
    // cu[j] / cw[j]: number of a <= i with value >= j, updated row by row.
    let mut cu = [0u8; 34];
    let mut cw = [0u8; 34];
    debug_assert!(n < 33);
    for i in 0..n {
        for c in &mut cu[1..=u[i]] {
            *c += 1;
        }
        for c in &mut cw[1..=w[i]] {
            *c += 1;
        }
        for j in 1..=n {
            if cu[j] > cw[j] {
                return false;
            }
        }
    }
    true
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.window.clone();
        let n = w.len();
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && w[i - 1] > w[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while w[j] < w[i - 1] {
                    j -= 1;
                }
                w.swap(i - 1, j);
                w[i..].reverse();
                self.next = Some(Permutation { window: w });
            }
        }
        Some(current)
    }
}

/// One-line notation; digits without separators when `n <= 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.window {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(alloc::format!("bad permutation {:?}", s));
        let window: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(window)
    }
}

/// A word `(s_{a_1}, ..., s_{a_m})` in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, n: usize) -> Result<(), Error> {
        match self.letters.iter().find(|&&a| a == 0 || a >= n) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }

    /// Ordered product `s_{a_1} ... s_{a_m}` (no absorption).
    pub fn product(&self, n: usize) -> Result<Permutation, Error> {
        self.check_rank(n)?;
        let mut w = Permutation::identity(n);
        for &a in &self.letters {
            w.window.swap(a - 1, a);
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
            .map_err(|_| Error::Parse(alloc::format!("bad word {:?}", s)))
    }
}

/// Demazure product: fold from the identity, multiplying by `s_a` only when it increases
/// the length.
pub fn demazure_product(word: &Word, n: usize) -> Result<Permutation, Error> {
    word.check_rank(n)?;
    let mut w = Permutation::identity(n);
    for &a in &word.letters {
        if w.ascends_at(a) {
            w.window.swap(a - 1, a);
        }
    }
    Ok(w)
}

pub fn is_reduced_word(word: &Word, w: &Permutation) -> bool {
    match demazure_product(word, w.n()) {
        Ok(p) => word.len() == w.length() && &p == w,
        Err(_) => false,
    }
}
