//! The staircase shape for `S_n`, pipe dreams and their exhaustive enumeration.
//!
//! The staircase is read row by row from the top, each row from right to left; the box in
//! row `r`, column `c` carries the letter `s_{r+c-1}`. Reading all boxes gives the triangular
//! word, and a pipe dream realizes the Demazure product of the letters at its crosses.

use alloc::vec::Vec;
use core::fmt;


use crate::error::Error;
use crate::perm::{bruhat_le_slices, demazure_product, Permutation, Word};
use crate::poly::{var_names, MultiPolynomial};

/// Ranks up to this bound fit the `u128` box masks used internally.
pub const MAX_RANK: usize = 16;

/// Enumeration guard on the rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimit(pub usize);

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit(9)
    }
}

impl SearchLimit {
    pub fn check(self, n: usize) -> Result<(), Error> {
        let limit = self.0.min(MAX_RANK);
        if n > limit {
            return Err(Error::RankLimit { n, limit });
        }
        Ok(())
    }
}

/// A box `(row, col)` of the staircase, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl BoxPos {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// Index `a` of the simple reflection `s_a` sitting in this box.
    pub fn letter(self) -> usize {
        self.row + self.col - 1
    }
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Staircase boxes `row + col <= n` in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    n: usize,
    boxes: Vec<BoxPos>,
}

impl Staircase {
    pub fn new(n: usize) -> Self {
        let mut boxes = Vec::new();
        for row in 1..n {
            for col in (1..=n - row).rev() {
                boxes.push(BoxPos::new(row, col));
            }
        }
        Self { n, boxes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Boxes in reading order.
    pub fn boxes(&self) -> &[BoxPos] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && b.row + b.col <= self.n
    }

    /// Position of `b` in reading order.
    pub fn index_of(&self, b: BoxPos) -> Option<usize> {
        if !self.contains(b) {
            return None;
        }
        // rows 1..row-1 contribute (n-1) + (n-2) + ... + (n-row+1) boxes
        let before: usize = (1..b.row).map(|r| self.n - r).sum();
        Some(before + (self.n - b.row - b.col))
    }

    pub fn mask_of(&self, boxes: &[BoxPos]) -> u128 {
        boxes
            .iter()
            .map(|&b| 1u128 << self.index_of(b).expect("box inside staircase"))
            .fold(0, |a, m| a | m)
    }

    /// Boxes of `mask`, sorted by `(row, col)`.
    pub fn boxes_of(&self, mask: u128) -> Vec<BoxPos> {
        let mut out: Vec<BoxPos> = (0..self.boxes.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.boxes[i])
            .collect();
        out.sort();
        out
    }

    pub fn full_mask(&self) -> u128 {
        if self.boxes.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.boxes.len()) - 1
        }
    }

    /// Demazure product of the letters at the positions in `mask`, in reading order.
    pub fn demazure_of_mask(&self, mask: u128) -> Permutation {
        let letters = (0..self.boxes.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.boxes[i].letter())
            .collect();
        demazure_product(&Word::new(letters), self.n.max(1)).expect("staircase letters in range")
    }
}

/// `(s_{n-1}, ..., s_1, s_{n-1}, ..., s_2, ..., s_{n-1})`.
pub fn triangular_word(n: usize) -> Word {
    Word::new(Staircase::new(n).boxes.iter().map(|b| b.letter()).collect())
}

/// A pipe dream, stored as its sorted list of cross positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PipeDream {
    n: usize,
    crosses: Vec<BoxPos>,
}

impl PipeDream {
    pub fn new(n: usize, mut crosses: Vec<BoxPos>) -> Result<Self, Error> {
        if let Some(b) = crosses.iter().find(|b| b.row == 0 || b.col == 0 || b.row + b.col > n) {
            return Err(Error::BoxOutOfRange { row: b.row, col: b.col, n });
        }
        crosses.sort();
        crosses.dedup();
        Ok(Self { n, crosses })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &[BoxPos] {
        &self.crosses
    }

    pub fn elbows(&self) -> Vec<BoxPos> {
        let mut out: Vec<BoxPos> = Staircase::new(self.n)
            .boxes
            .into_iter()
            .filter(|b| self.crosses.binary_search(b).is_err())
            .collect();
        out.sort();
        out
    }

    pub fn permutation(&self) -> Permutation {
        let st = Staircase::new(self.n);
        st.demazure_of_mask(st.mask_of(&self.crosses))
    }

    pub fn is_pipe_dream_for(&self, w: &Permutation) -> bool {
        w.n() == self.n.max(1) && &self.permutation() == w
    }

    pub fn is_reduced_for(&self, w: &Permutation) -> bool {
        self.is_pipe_dream_for(w) && self.crosses.len() == w.length()
    }

    /// `prod_{(i,j) in crosses} (x_i - y_j)` over the variables of [`grothendieck_vars`].
    pub fn weight(&self) -> MultiPolynomial {
        let vars = grothendieck_vars(self.n);
        let mut acc = MultiPolynomial::one(vars.clone());
        for b in &self.crosses {
            acc = &acc * &cross_factor(&vars, *b);
        }
        acc
    }
}

pub(crate) fn cross_factor(vars: &[alloc::string::String], b: BoxPos) -> MultiPolynomial {
    let x = MultiPolynomial::var(vars.to_vec(), &alloc::format!("x{}", b.row));
    let y = MultiPolynomial::var(vars.to_vec(), &alloc::format!("y{}", b.col));
    &x - &y
}

/// `x1..x_{n-1}, y1..y_{n-1}, b` with `b` standing for β.
pub fn grothendieck_vars(n: usize) -> Vec<alloc::string::String> {
    let mut names = Vec::new();
    for i in 1..n {
        names.push(alloc::format!("x{}", i));
    }
    for j in 1..n {
        names.push(alloc::format!("y{}", j));
    }
    names.push("b".into());
    var_names(&names)
}

/// `Pipes(w)`: every pipe dream of `w`, reduced and nonreduced, in canonical order
/// (by number of crosses, then lexicographic cross list).
#[derive(Clone, Debug)]
pub struct PipeDreamSet {
    w: Permutation,
    dreams: Vec<PipeDream>,
}

impl PipeDreamSet {
    pub fn enumerate(w: &Permutation, limit: SearchLimit) -> Result<Self, Error> {
        let n = w.n();
        limit.check(n)?;
        let st = Staircase::new(n);
        let masks = search_masks(&st, w);
        let mut dreams: Vec<PipeDream> = masks
            .into_iter()
            .map(|m| PipeDream { n, crosses: st.boxes_of(m) })
            .collect();
        dreams.sort_by(|a, b| a.crosses.len().cmp(&b.crosses.len()).then_with(|| a.crosses.cmp(&b.crosses)));
        Ok(Self { w: w.clone(), dreams })
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn dreams(&self) -> &[PipeDream] {
        &self.dreams
    }

    pub fn len(&self) -> usize {
        self.dreams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dreams.is_empty()
    }

    pub fn reduced(&self) -> impl Iterator<Item = &PipeDream> {
        let l = self.w.length();
        self.dreams.iter().filter(move |p| p.crosses.len() == l)
    }

    /// Codimension of the interior face labelled by `p`: its number of crosses minus `l(w)`.
    pub fn codim(&self, p: &PipeDream) -> usize {
        p.crosses.len() - self.w.length()
    }

    /// Number of pipe dreams with `l(w) + k` crosses, indexed by `k`.
    pub fn census(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in &self.dreams {
            let k = self.codim(p);
            if out.len() <= k {
                out.resize(k + 1, 0);
            }
            out[k] += 1;
        }
        out
    }
}

pub fn enumerate_pipe_dreams(w: &Permutation) -> Result<Vec<PipeDream>, Error> {
    PipeDreamSet::enumerate(w, SearchLimit::default()).map(|s| s.dreams)
}

/// Depth-first search over boxes in reading order with the running Demazure product `u`.
/// A branch survives only while `u <= w` and `w <= u * (all remaining letters)` in Bruhat
/// order; both follow from monotonicity of the Demazure product.
fn search_masks(st: &Staircase, w: &Permutation) -> Vec<u128> {
    let n = w.n();
    let letters: Vec<usize> = st.boxes().iter().map(|b| b.letter()).collect();
    let mut target = [0usize; MAX_RANK];
    target[..n].copy_from_slice(w.window());
    let mut start = [0usize; MAX_RANK];
    for (i, v) in start.iter_mut().enumerate().take(n) {
        *v = i + 1;
    }
    let mut out = Vec::new();
    let ctx = Search { n, letters: &letters, target };
    ctx.descend(0, start, 0, &mut out);
    out
}

struct Search<'a> {
    n: usize,
    letters: &'a [usize],
    target: [usize; MAX_RANK],
}

impl Search<'_> {
    fn feasible(&self, pos: usize, u: &[usize; MAX_RANK]) -> bool {
        let n = self.n;
        if !bruhat_le_slices(&u[..n], &self.target[..n]) {
            return false;
        }
        let mut top = *u;
        for &a in &self.letters[pos..] {
            if top[a - 1] < top[a] {
                top.swap(a - 1, a);
            }
        }
        bruhat_le_slices(&self.target[..n], &top[..n])
    }

    fn descend(&self, pos: usize, u: [usize; MAX_RANK], mask: u128, out: &mut Vec<u128>) {
        if !self.feasible(pos, &u) {
            return;
        }
        if pos == self.letters.len() {
            if u[..self.n] == self.target[..self.n] {
                out.push(mask);
            }
            return;
        }
        // elbow
        self.descend(pos + 1, u, mask, out);
        // cross
        let a = self.letters[pos];
        let mut v = u;
        if v[a - 1] < v[a] {
            v.swap(a - 1, a);
        }
        self.descend(pos + 1, v, mask | 1u128 << pos, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn b(r: usize, c: usize) -> BoxPos {
        BoxPos::new(r, c)
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn triangular_words() {
        assert_eq!(triangular_word(2).letters, vec![1]);
        assert_eq!(triangular_word(4).letters, vec![3, 2, 1, 3, 2, 3]);
        let w5 = triangular_word(5).letters;
        assert_eq!(w5.len(), 10);
        assert_eq!(&w5[7..], &[4, 3, 4]);
        assert_eq!(w5, vec![4, 3, 2, 1, 4, 3, 2, 4, 3, 4]);
    }

    #[test]
    fn reading_index_matches_order() {
        for n in 1..=7 {
            let st = Staircase::new(n);
            for (i, &bx) in st.boxes().iter().enumerate() {
                assert_eq!(st.index_of(bx), Some(i));
            }
            assert_eq!(st.len(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn permutation_of_examples() {
        assert_eq!(PipeDream::new(4, vec![]).unwrap().permutation(), Permutation::identity(4));
        let pd = PipeDream::new(4, vec![b(1, 3), b(1, 2), b(2, 2)]).unwrap();
        assert_eq!(pd.permutation(), p("1432"));
        let all = PipeDream::new(4, Staircase::new(4).boxes().to_vec()).unwrap();
        assert_eq!(all.permutation(), p("4321"));
        assert!(PipeDream::new(4, vec![b(2, 3)]).is_err());
    }

    #[test]
    fn validity_predicates() {
        let w = p("1432");
        let pd = PipeDream::new(4, vec![b(1, 3), b(1, 2), b(2, 2)]).unwrap();
        assert!(pd.is_pipe_dream_for(&w) && pd.is_reduced_for(&w));
        let four = enumerate_pipe_dreams(&w).unwrap().into_iter().find(|d| d.crosses().len() == 4).unwrap();
        assert!(four.is_pipe_dream_for(&w) && !four.is_reduced_for(&w));
        let empty = PipeDream::new(4, vec![]).unwrap();
        assert!(!empty.is_pipe_dream_for(&w) && !empty.is_reduced_for(&w));
    }

    #[test]
    fn census_1432() {
        let set = PipeDreamSet::enumerate(&p("1432"), SearchLimit::default()).unwrap();
        assert_eq!(set.len(), 11);
        assert_eq!(set.census(), vec![5, 5, 1]);
        assert_eq!(enumerate_pipe_dreams(&Permutation::identity(3)).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            let st = Staircase::new(n);
            let mut by_perm: std::collections::BTreeMap<Permutation, Vec<Vec<BoxPos>>> = Default::default();
            for mask in 0..=st.full_mask() {
                by_perm.entry(st.demazure_of_mask(mask)).or_default().push(st.boxes_of(mask));
            }
            for w in Permutation::all(n) {
                let mut expected = by_perm.remove(&w).unwrap_or_default();
                expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                let got: Vec<Vec<BoxPos>> =
                    enumerate_pipe_dreams(&w).unwrap().into_iter().map(|d| d.crosses).collect();
                assert_eq!(got, expected, "w = {}", w);
            }
        }
    }

    #[test]
    fn reduced_are_minimal() {
        for w in Permutation::all(5) {
            let set = PipeDreamSet::enumerate(&w, SearchLimit::default()).unwrap();
            let min = set.dreams().iter().map(|d| d.crosses().len()).min().unwrap();
            assert_eq!(min, w.length());
            assert!(set.reduced().count() >= 1);
        }
    }

    #[test]
    fn catalan_reduced_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for n in 2..=8 {
            let set = PipeDreamSet::enumerate(&Permutation::one_then_reversed(n), SearchLimit::default()).unwrap();
            assert_eq!(set.reduced().count(), catalan[n - 1], "n = {}", n);
        }
    }

    #[test]
    fn weights() {
        let vars = grothendieck_vars(4);
        assert_eq!(PipeDream::new(4, vec![]).unwrap().weight(), MultiPolynomial::one(vars));
        assert_eq!(PipeDream::new(4, vec![b(1, 1)]).unwrap().weight().to_string(), "x1 - y1");
        let pd = PipeDream::new(4, vec![b(1, 3), b(1, 2), b(2, 2)]).unwrap();
        let vars = grothendieck_vars(4);
        let v = |s: &str| MultiPolynomial::var(vars.clone(), s);
        let expected = &(&(&v("x1") - &v("y3")) * &(&v("x1") - &v("y2"))) * &(&v("x2") - &v("y2"));
        assert_eq!(pd.weight(), expected);
    }

    #[test]
    fn limit_guard() {
        let w = Permutation::identity(10);
        assert_eq!(
            PipeDreamSet::enumerate(&w, SearchLimit::default()).unwrap_err(),
            Error::RankLimit { n: 10, limit: 9 }
        );
        assert_eq!(
            PipeDreamSet::enumerate(&Permutation::longest(17), SearchLimit(40)).unwrap_err(),
            Error::RankLimit { n: 17, limit: MAX_RANK }
        );
        let longest = PipeDreamSet::enumerate(&Permutation::longest(10), SearchLimit(10)).unwrap();
        assert_eq!(longest.len(), 1);
    }
}
