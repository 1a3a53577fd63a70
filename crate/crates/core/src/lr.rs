//! Littlewood–Richardson coefficients.
//!
//! `c^ν_{λμ}` is the number of fillings of the skew shape `ν/λ` with `μ_i`
//! copies of `i` that are semistandard (rows weakly increase, columns strictly
//! increase) and whose reading word (rows right to left, top to bottom) is a
//! lattice word: every prefix contains at least as many `i` as `i+1`.
//!
//! The counter fills cells in reading order, so each placement can be checked
//! against the lattice condition with one comparison on running counts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::cache::{MemoCache, DEFAULT_CAPACITY};
use crate::error::{validation, Result};
use crate::partitions::{add_strips, Orientation, Partition, SkewShape};

/// A request for `c^ν_{λμ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrQuery {
    pub nu: Partition,
    pub lambda: Partition,
    pub mu: Partition,
}

impl LrQuery {
    pub fn new(nu: Partition, lambda: Partition, mu: Partition) -> Self {
        LrQuery { nu, lambda, mu }
    }

    pub fn coefficient(&self) -> u64 {
        lr_coefficient(&self.nu, &self.lambda, &self.mu)
    }

    /// The query with `λ` and `μ` exchanged.
    pub fn swapped(&self) -> LrQuery {
        LrQuery::new(self.nu.clone(), self.mu.clone(), self.lambda.clone())
    }
}

/// A formal sum of partitions with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in lexicographically decreasing order of partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.iter().map(|(p, _)| p.clone()).collect()
    }
}

impl FromIterator<(Partition, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (p, m) in iter {
            d.add(p, m);
        }
        d
    }
}

/// A Littlewood–Richardson tableau: the entries of each row of `ν/λ`, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl LrTableau {
    /// Entries read right to left along each row, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    pub fn reading_word_string(&self) -> String {
        self.reading_word().iter().map(|d| d.to_string()).collect()
    }
}

fn cache() -> &'static MemoCache<(Partition, Partition, Partition), u64> {
    static CACHE: OnceLock<MemoCache<(Partition, Partition, Partition), u64>> = OnceLock::new();
    CACHE.get_or_init(|| MemoCache::new(DEFAULT_CAPACITY))
}

pub(crate) fn cache_resize(capacity: usize) {
    cache().resize(capacity);
}

/// `c^ν_{λμ}`. Zero whenever sizes or containments rule the shape out.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // c is symmetric in λ, μ; filling the smaller content is cheaper
    let (inner, content) = if lambda.size() < mu.size() || (lambda.size() == mu.size() && lambda < mu) {
        (mu, lambda)
    } else {
        (lambda, mu)
    };
    if let Some(v) = fast_path(nu, inner, content) {
        return v;
    }
    let key = (nu.clone(), inner.clone(), content.clone());
    cache().get_or_insert_with(key, || count_lr_tableaux(nu, inner, content))
}

fn fast_path(nu: &Partition, inner: &Partition, content: &Partition) -> Option<u64> {
    if content.is_empty() {
        return Some((nu == inner) as u64);
    }
    if inner.is_empty() {
        return Some((nu == content) as u64);
    }
    let shape = SkewShape::new(nu.clone(), inner.clone()).ok()?;
    if content.len() == 1 {
        return Some(shape.is_horizontal_strip() as u64);
    }
    if content.first() == 1 {
        return Some(shape.is_vertical_strip() as u64);
    }
    None
}

/// Number of LR tableaux of shape `ν/λ` and content `μ`, computed directly
/// without exchanging `λ` and `μ` or consulting the cache.
pub fn count_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    let mut count = 0u64;
    walk_lr_tableaux(nu, lambda, mu, |_| count += 1);
    count
}

/// Every LR tableau of shape `ν/λ` and content `μ`, in the order the
/// backtracking search finds them (smaller entries first, reading order).
pub fn enumerate_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> Vec<LrTableau> {
    let mut out = Vec::new();
    walk_lr_tableaux(nu, lambda, mu, |grid| {
        let rows = (0..nu.len())
            .map(|r| grid[r][lambda.part(r)..nu.part(r)].to_vec())
            .collect();
        out.push(LrTableau {
            outer: nu.clone(),
            inner: lambda.clone(),
            rows,
        });
    });
    out
}

struct Walker<'a, F: FnMut(&[Vec<usize>])> {
    lambda: &'a Partition,
    mu: &'a Partition,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[Vec<usize>])> Walker<'_, F> {
    fn step(&mut self, idx: usize) {
        if idx == self.cells.len() {
            (self.visit)(&self.grid);
            return;
        }
        let (r, c) = self.cells[idx];
        // entries weakly increase to the right; we are moving leftwards
        let mut hi = self.mu.len();
        if let Some(&right) = self.grid[r].get(c + 1) {
            if right > 0 {
                hi = hi.min(right);
            }
        }
        // strictly increase downwards when the box above is part of the skew shape
        let mut lo = 1;
        if r > 0 && c >= self.lambda.part(r - 1) {
            lo = self.grid[r - 1][c] + 1;
        }
        for v in lo..=hi {
            let i = v - 1;
            if self.counts[i] >= self.mu.part(i) {
                continue;
            }
            if i > 0 && self.counts[i] + 1 > self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][c] = v;
            self.step(idx + 1);
            self.grid[r][c] = 0;
            self.counts[i] -= 1;
        }
    }
}

fn walk_lr_tableaux<F: FnMut(&[Vec<usize>])>(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    visit: F,
) {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return;
    }
    let cells = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut walker = Walker {
        lambda,
        mu,
        cells,
        grid: (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect(),
        counts: vec![0; mu.len()],
        visit,
    };
    walker.step(0);
}

/// `V_λ ⊗ V_μ = ⊕_ν V_ν^{c^ν_{λμ}}`.
pub fn tensor_expand(lambda: &Partition, mu: &Partition) -> Decomposition {
    let n = lambda.size() + mu.size();
    let max_first = lambda.first() + mu.first();
    let max_len = lambda.len() + mu.len();
    let mut out = Decomposition::new();
    let mut current = Vec::new();
    candidates(lambda, mu, n, max_first, max_len, &mut current, &mut |nu| {
        let c = lr_coefficient(&nu, lambda, mu);
        out.add(nu, c);
    });
    out
}

/// Partitions of `n` containing both `a` and `b`, within the given bounds.
fn candidates(
    a: &Partition,
    b: &Partition,
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    emit: &mut impl FnMut(Partition),
) {
    let row = current.len();
    if remaining == 0 {
        if row >= a.len() && row >= b.len() {
            emit(Partition::from_unsorted(current.clone()));
        }
        return;
    }
    if row == max_len {
        return;
    }
    let floor = a.part(row).max(b.part(row)).max(1);
    let cap = max_part.min(remaining);
    if floor > cap {
        return;
    }
    for len in (floor..=cap).rev() {
        current.push(len);
        candidates(a, b, remaining - len, len, max_len, current, emit);
        current.pop();
    }
}

/// Partitions of the given size contained in `outer`, lexicographically decreasing.
pub fn subpartitions(outer: &Partition, size: usize) -> Vec<Partition> {
    fn rec(outer: &Partition, remaining: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        let row = cur.len();
        let hi = outer.part(row).min(cap).min(remaining);
        for len in (1..=hi).rev() {
            cur.push(len);
            rec(outer, remaining - len, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= outer.size() {
        rec(outer, size, usize::MAX, &mut Vec::new(), &mut out);
    }
    out
}

/// Restriction of `M_ν` from `S_{n+m}` to `S_n × S_m`: the coefficient of
/// `(λ, μ)` is `c^ν_{λμ}`. With `split = None`, every split `n + m = |ν|` is included.
pub fn restrict_branch(
    nu: &Partition,
    split: Option<(usize, usize)>,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    let total = nu.size();
    let splits: Vec<(usize, usize)> = match split {
        Some((n, m)) if n + m != total => {
            return validation(format!("split ({n},{m}) does not add up to |{nu}| = {total}"))
        }
        Some(s) => vec![s],
        None => (0..=total).map(|n| (n, total - n)).collect(),
    };
    let mut out = BTreeMap::new();
    for (n, m) in splits {
        for lambda in subpartitions(nu, n) {
            for mu in subpartitions(nu, m) {
                let c = lr_coefficient(nu, &lambda, &mu);
                if c > 0 {
                    out.insert((lambda.clone(), mu), c);
                }
            }
        }
    }
    Ok(out)
}

/// Restriction to `S_{n-1}`: remove one corner box in every possible way.
pub fn single_box_restriction(nu: &Partition) -> Vec<Partition> {
    nu.remove_one_box()
}

/// Induction product with the trivial (`horizontal`) or sign (`vertical`)
/// representation of `S_m`: the Pieri rule.
pub fn pieri(lambda: &Partition, m: usize, orientation: Orientation) -> Vec<Partition> {
    add_strips(lambda, m, orientation)
}

/// `c^{Nν}_{Nλ,Nμ}`.
pub fn stretched_coefficient(query: &LrQuery, factor: usize) -> Result<u64> {
    if factor == 0 {
        return validation("stretch factor must be at least 1");
    }
    Ok(lr_coefficient(
        &query.nu.scale(factor),
        &query.lambda.scale(factor),
        &query.mu.scale(factor),
    ))
}
