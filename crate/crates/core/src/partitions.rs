//! Partitions, Young diagrams and the shape-level combinatorics built on them.
//!
//! A [`Partition`] is stored without trailing zeros, so `[3,1,0]` and `[3,1]`
//! are the same value. The textual form is `[5,3,2]`, with `[]` for the empty
//! partition. Exponent notation such as `(5,3,1^3)` or `(5,3,1³)` is accepted
//! when parsing but never produced.
//!
//! Partitions are totally ordered lexicographically on their parts. This is
//! the order used whenever a deterministic listing is needed; "reverse-lex"
//! elsewhere in the crate means lexicographically decreasing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the sequence is not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return validation(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `[n]` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, with zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// The conjugate partition: `(λ†)_i = #{j | λ_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// All boxes of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Whether the diagram contains the given box.
    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row - 1) >= cell.col
    }

    /// Hook length of every box: the box itself plus the boxes to its right and below it.
    pub fn hook_lengths(&self) -> BTreeMap<Cell, usize> {
        let t = self.transpose();
        self.cells()
            .map(|b| {
                let arm = self.part(b.row - 1) - b.col;
                let leg = t.part(b.col - 1) - b.row;
                (b, arm + leg + 1)
            })
            .collect()
    }

    /// Content `col − row` of every box.
    pub fn contents(&self) -> BTreeMap<Cell, i64> {
        self.cells().map(|b| (b, b.content())).collect()
    }

    /// Arm/leg coordinates of the diagonal boxes.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let t = self.transpose();
        let rank = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count();
        let arms = (0..rank).map(|i| self.parts[i] - i - 1).collect();
        let legs = (0..rank).map(|i| t.parts[i] - i - 1).collect();
        FrobeniusCoords { arms, legs }
    }

    /// Inverse of [`Partition::frobenius`].
    pub fn from_frobenius(f: &FrobeniusCoords) -> Partition {
        let r = f.rank();
        let mut parts: Vec<usize> = (0..r).map(|i| f.arms[i] + i + 1).collect();
        // rows below the Durfee square come from the legs
        let mut row = r + 1;
        loop {
            let len = f.legs.iter().enumerate().filter(|&(j, &b)| b + j + 1 >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition { parts }
    }

    /// `inner ⊆ self`, i.e. `inner_i ≤ self_i` for all `i`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise sum `λ + μ`.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (0..n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// `λ ∪ μ`: all parts of both, sorted decreasingly.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `Nλ`, every part multiplied by `factor`.
    pub fn scale(&self, factor: usize) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }

    /// Multiplicity `m_i` of each part value `i`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Boxes that can be removed leaving a partition.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i + 1, self.parts[i]))
            .collect()
    }

    /// Partitions obtained by deleting a single corner box, lexicographically decreasing.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        self.removable_cells()
            .into_iter()
            .rev()
            .map(|c| {
                let mut parts = self.parts.clone();
                parts[c.row - 1] -= 1;
                Partition::from_unsorted(parts)
            })
            .collect()
    }

    /// Partitions obtained by adding a single box, lexicographically decreasing.
    pub fn add_one_box(&self) -> Vec<Partition> {
        add_strips(self, 1, Orientation::Horizontal)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴' => Some(4),
        '⁵' => Some(5),
        '⁶' => Some(6),
        '⁷' => Some(7),
        '⁸' => Some(8),
        '⁹' => Some(9),
        _ => None,
    }
}

fn parse_entry(entry: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad partition entry {entry:?}"));
    if let Some((base, exp)) = entry.split_once('^') {
        let base = base.trim().parse().map_err(|_| bad())?;
        let exp = exp.trim().parse().map_err(|_| bad())?;
        return Ok((base, exp));
    }
    let split = entry.find(|c| superscript_digit(c).is_some());
    match split {
        None => Ok((entry.parse().map_err(|_| bad())?, 1)),
        Some(at) => {
            let base = entry[..at].trim().parse().map_err(|_| bad())?;
            let mut exp = 0usize;
            for c in entry[at..].chars() {
                let d = superscript_digit(c).ok_or_else(bad)?;
                exp = exp * 10 + d as usize;
            }
            Ok((base, exp))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" {
            return Ok(Partition::empty());
        }
        let inner = match (s.chars().next(), s.chars().last()) {
            (Some('['), Some(']')) | (Some('('), Some(')')) => &s[1..s.len() - 1],
            _ => s,
        };
        let mut parts = Vec::new();
        for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (base, exp) = parse_entry(entry)?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| match e {
            Error::Validation(m) => Error::Parse(m),
            other => other,
        })
    }
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col − row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Frobenius coordinates `(a_1, …, a_r | b_1, …, b_r)`: arm and leg lengths of the diagonal boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return validation(format!(
                "arms and legs differ in length ({} vs {})",
                arms.len(),
                legs.len()
            ));
        }
        for (name, seq) in [("arms", &arms), ("legs", &legs)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return validation(format!("{name} {seq:?} are not strictly decreasing"));
            }
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Size of the encoded partition, `r + Σa + Σb`.
    pub fn size(&self) -> usize {
        self.rank() + self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>()
    }

    /// Coordinates of the transposed partition.
    pub fn swapped(&self) -> FrobeniusCoords {
        FrobeniusCoords {
            arms: self.legs.clone(),
            legs: self.arms.clone(),
        }
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return validation(format!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Boxes of `outer` not in `inner`, row-major.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|r| {
                ((self.inner.part(r) + 1)..=self.outer.part(r)).map(move |c| Cell::new(r + 1, c))
            })
            .collect()
    }

    /// At most one box in each column; equivalently `outer_{i+1} ≤ inner_i`.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// At most one box in each row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i) + 1)
    }

    /// The transposed skew shape `outer† / inner†`.
    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }
}

/// Shorthand for [`SkewShape::cells`] on a freshly validated shape.
pub fn skew_cells(shape: &SkewShape) -> Vec<Cell> {
    shape.cells()
}

/// Whether a strip has at most one box per column or per row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// All `μ ⊇ λ` such that `μ/λ` is a strip of `m` boxes, lexicographically decreasing.
pub fn add_strips(lambda: &Partition, m: usize, orientation: Orientation) -> Vec<Partition> {
    match orientation {
        Orientation::Horizontal => {
            let mut out = Vec::new();
            let mut current = Vec::with_capacity(lambda.len() + 1);
            horizontal_rec(lambda, 0, m, &mut current, &mut out);
            out
        }
        Orientation::Vertical => {
            let mut out: Vec<Partition> = add_strips(&lambda.transpose(), m, Orientation::Horizontal)
                .iter()
                .map(Partition::transpose)
                .collect();
            out.sort_by(|a, b| b.cmp(a));
            out
        }
    }
}

fn horizontal_rec(
    lambda: &Partition,
    row: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > lambda.len() {
        if remaining == 0 {
            out.push(Partition::from_unsorted(current.clone()));
        }
        return;
    }
    let low = lambda.part(row);
    // interlacing: the new row may not pass the old row above it
    let cap = if row == 0 {
        low + remaining
    } else {
        (low + remaining).min(lambda.part(row - 1))
    };
    if row == lambda.len() {
        // last possible new row has to absorb whatever is left
        if low + remaining <= cap {
            current.push(low + remaining);
            horizontal_rec(lambda, row + 1, 0, current, out);
            current.pop();
        }
        return;
    }
    for len in (low..=cap).rev() {
        current.push(len);
        horizontal_rec(lambda, row + 1, remaining - (len - low), current, out);
        current.pop();
    }
}

/// Iterator over all partitions of `n` in lexicographically decreasing order,
/// starting from `[n]` and ending at `[1^n]`.
#[derive(Clone, Debug)]
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(p: &[usize]) -> Option<Vec<usize>> {
    // rightmost part greater than one
    let idx = p.iter().rposition(|&x| x > 1)?;
    let mut next = p[..idx].to_vec();
    let new_part = p[idx] - 1;
    next.push(new_part);
    // the freed box plus the trailing ones, refilled greedily
    let mut left = p.len() - idx;
    while left > 0 {
        let take = left.min(new_part);
        next.push(take);
        left -= take;
    }
    Some(next)
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: usize) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |p| p.len() <= max_len)
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    // p(n) via the usual coin-change recurrence
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Compares by size first, then lexicographically decreasing. This is the
/// listing order for graded output.
pub fn graded_order(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("[5,3,2]").transpose(), p("[3,3,2,1,1]"));
        assert_eq!(p("[]").transpose(), p("[]"));
        assert_eq!(p("[1,1,1,1]").transpose(), p("[4]"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("[5,3,2]").to_string(), "[5,3,2]");
        assert_eq!(p("[]").to_string(), "[]");
        assert_eq!(p("(5,3,1^3)"), p("[5,3,1,1,1]"));
        assert_eq!(p("(5,3,1³)"), p("[5,3,1,1,1]"));
        assert_eq!(p("[3,1,0,0]"), p("[3,1]"));
        assert_eq!(p("∅"), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[3,0,1]".parse::<Partition>().is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f = p("[5,3,2]").frobenius();
        assert_eq!(f.arms(), &[4, 1]);
        assert_eq!(f.legs(), &[2, 1]);
        let f = p("[1]").frobenius();
        assert_eq!((f.arms(), f.legs()), (&[0][..], &[0][..]));
        let g = FrobeniusCoords::new(vec![0], vec![3]).unwrap();
        assert_eq!(Partition::from_frobenius(&g), p("[1,1,1,1]"));
        assert_eq!(Partition::empty().frobenius().rank(), 0);
    }

    #[test]
    fn frobenius_rejects_malformed() {
        assert!(FrobeniusCoords::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![2], vec![2, 0]).is_err());
        assert!(FrobeniusCoords::new(vec![0, 1], vec![1, 0]).is_err());
    }

    #[test]
    fn hooks_and_contents() {
        let hooks: Vec<usize> = p("[5,3,2]").hook_lengths().into_values().collect();
        assert_eq!(hooks, vec![7, 6, 4, 2, 1, 4, 3, 1, 2, 1]);
        let contents: Vec<i64> = p("[4,2,1]").contents().into_values().collect();
        assert_eq!(contents, vec![0, 1, 2, 3, -1, 0, -2]);
        let h = p("[1]").hook_lengths();
        assert_eq!(h.len(), 1);
        assert_eq!(h[&Cell::new(1, 1)], 1);
    }

    #[test]
    fn containment_and_skew_cells() {
        assert!(p("[5,3,2]").contains(&p("[3,1]")));
        assert!(!p("[2,2]").contains(&p("[3]")));
        let s = SkewShape::new(p("[3,2]"), p("[1]")).unwrap();
        assert_eq!(
            skew_cells(&s),
            vec![Cell::new(1, 2), Cell::new(1, 3), Cell::new(2, 1), Cell::new(2, 2)]
        );
        assert!(SkewShape::new(p("[2,2]"), p("[3]")).is_err());
    }

    #[test]
    fn strips() {
        let lam = p("[2,2,1]");
        assert_eq!(
            add_strips(&lam, 1, Orientation::Horizontal),
            vec![p("[3,2,1]"), p("[2,2,2]"), p("[2,2,1,1]")]
        );
        assert_eq!(
            add_strips(&lam, 2, Orientation::Horizontal),
            vec![p("[4,2,1]"), p("[3,2,2]"), p("[3,2,1,1]"), p("[2,2,2,1]")]
        );
        assert_eq!(add_strips(&Partition::empty(), 4, Orientation::Horizontal), vec![p("[4]")]);
        assert_eq!(add_strips(&Partition::empty(), 3, Orientation::Vertical), vec![p("[1,1,1]")]);
        assert_eq!(add_strips(&lam, 0, Orientation::Vertical), vec![lam.clone()]);
        let s = SkewShape::new(p("[3,2]"), p("[1]")).unwrap();
        assert!(!s.is_horizontal_strip());
        assert!(!s.is_vertical_strip());
        assert!(SkewShape::new(p("[3,1]"), p("[1]")).unwrap().is_horizontal_strip());
    }

    #[test]
    fn sum_union() {
        assert_eq!(p("[3,1]").sum(&p("[2,2]")), p("[5,3]"));
        assert_eq!(p("[3,1]").union(&p("[2,2]")), p("[3,2,2,1]"));
        assert_eq!(p("[4,1]").sum(&Partition::empty()), p("[4,1]"));
    }

    #[test]
    fn partition_generation() {
        let all: Vec<Partition> = partitions_of(4).collect();
        assert_eq!(
            all,
            vec![p("[4]"), p("[3,1]"), p("[2,2]"), p("[2,1,1]"), p("[1,1,1,1]")]
        );
        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        for n in 0..=15 {
            let v: Vec<Partition> = partitions_of(n).collect();
            assert_eq!(v.len(), partition_count(n));
            assert!(v.windows(2).all(|w| w[0] > w[1]));
            assert!(v.iter().all(|q| q.size() == n));
        }
    }

    #[test]
    fn corners() {
        assert_eq!(p("[3,2]").remove_one_box(), vec![p("[3,1]"), p("[2,2]")]);
        assert!(Partition::empty().remove_one_box().is_empty());
    }
}
