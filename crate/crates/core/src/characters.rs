//! Characters of the symmetric group and dimension formulas.
//!
//! Character values come from the Murnaghan–Nakayama recursion: remove a
//! border strip of length `ρ_1` from `λ` in every possible way, weight by
//! `(-1)^{height}`, and recurse on the remaining cycles. Border strips are
//! handled on beta-sets, where removing a strip of length `k` is moving one
//! bead from position `b` to the free position `b − k`.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cache::{MemoCache, DEFAULT_CAPACITY};
use crate::error::{validation, Error, Result};
use crate::linalg::integer_determinant;
use crate::partitions::{partitions_of, Partition};

/// Largest `n` for which a full character table is built by default.
pub const DEFAULT_MAX_TABLE_N: usize = 14;

/// Character values are `i64`; every irreducible of `S_n` with `n` up to this
/// bound has dimension below `2^63`.
pub const MAX_CHARACTER_DEGREE: usize = 32;

/// A conjugacy class of `S_n`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassPartition(pub Partition);

impl ClassPartition {
    pub fn new(cycle_type: Partition) -> Self {
        ClassPartition(cycle_type)
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// Order of the centralizer, `z_ρ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        z(&self.0)
    }

    /// Number of permutations of this cycle type, `n!/z_ρ`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / self.z()
    }

    /// Sign of any permutation in the class.
    pub fn sign(&self) -> i64 {
        class_sign(&self.0)
    }
}

impl From<Partition> for ClassPartition {
    fn from(p: Partition) -> Self {
        ClassPartition(p)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `z_ρ = Π i^{m_i} m_i!`.
pub fn z(rho: &Partition) -> BigUint {
    rho.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        })
}

/// `(-1)^{n − ℓ(ρ)}`.
pub fn class_sign(rho: &Partition) -> i64 {
    if (rho.size() - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn cache() -> &'static MemoCache<(Partition, Partition), i64> {
    static CACHE: OnceLock<MemoCache<(Partition, Partition), i64>> = OnceLock::new();
    CACHE.get_or_init(|| MemoCache::new(DEFAULT_CAPACITY))
}

pub(crate) fn cache_resize(capacity: usize) {
    cache().resize(capacity);
}

/// `χ_λ(c_ρ)`, the value of the irreducible character `λ` on the class of cycle type `ρ`.
pub fn mn_character(lambda: &Partition, rho: &ClassPartition) -> Result<i64> {
    let rho = rho.cycle_type();
    if lambda.size() != rho.size() {
        return validation(format!(
            "character of {lambda} (degree {}) on class {rho} (degree {})",
            lambda.size(),
            rho.size()
        ));
    }
    if lambda.size() > MAX_CHARACTER_DEGREE {
        return Err(Error::ResourceLimit {
            what: "character degree",
            requested: lambda.size(),
            limit: MAX_CHARACTER_DEGREE,
        });
    }
    Ok(mn_rec(lambda, rho.parts()))
}

pub(crate) fn character(lambda: &Partition, rho: &Partition) -> i64 {
    debug_assert_eq!(lambda.size(), rho.size());
    mn_rec(lambda, rho.parts())
}

fn mn_rec(lambda: &Partition, rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    if lambda.len() == 1 {
        return 1;
    }
    if lambda.first() == 1 {
        // sign representation
        return class_sign(&Partition::from_unsorted(rho.to_vec()));
    }
    if rho.iter().all(|&r| r == 1) {
        return hook_dimension_u64(lambda) as i64;
    }
    let key = (lambda.clone(), Partition::from_unsorted(rho.to_vec()));
    if let Some(v) = cache().get(&key) {
        return v;
    }
    let k = rho[0];
    let rest = &rho[1..];
    let v: i64 = remove_border_strips(lambda, k)
        .into_iter()
        .map(|(mu, height)| {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            sign * mn_rec(&mu, rest)
        })
        .sum();
    cache().insert(key, v);
    v
}

/// All ways to remove a border strip of `k` boxes, with each strip's height
/// (number of rows minus one).
pub fn remove_border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        out.push((Partition::from_unsorted(parts), height));
    }
    out
}

fn hook_dimension_u64(lambda: &Partition) -> u64 {
    dim_sym_hook(lambda)
        .to_u64()
        .expect("dimension exceeds u64 within the supported degree range")
}

/// `dim M_λ = n! / Π hook(b)`.
pub fn dim_sym_hook(lambda: &Partition) -> BigUint {
    let hooks: BigUint = lambda
        .hook_lengths()
        .into_values()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    factorial(lambda.size()) / hooks
}

/// `dim M_λ = n! · det[1/(λ_i − i + j)!]`, with `1/r! = 0` for `r < 0`.
///
/// Row `i` is multiplied by `(λ_i − i + L)!` (`L = ℓ(λ)`) so every entry is
/// a falling factorial and the determinant is taken over the integers.
pub fn dim_sym_det(lambda: &Partition) -> BigUint {
    let len = lambda.len();
    if len == 0 {
        return BigUint::one();
    }
    let mut matrix = Vec::with_capacity(len);
    let mut scale = BigInt::one();
    for i in 1..=len {
        let top = lambda.part(i - 1) as i64 - i as i64 + len as i64;
        // λ_i − i + L ≥ 0 always holds for a partition
        let top = top as usize;
        scale *= BigInt::from(factorial(top));
        let row = (1..=len)
            .map(|j| {
                let r = lambda.part(i - 1) as i64 - i as i64 + j as i64;
                if r < 0 {
                    BigInt::zero()
                } else {
                    // (top)! / r! as a product of top − r consecutive integers
                    ((r as usize + 1)..=top).fold(BigInt::one(), |acc, x| acc * BigInt::from(x))
                }
            })
            .collect();
        matrix.push(row);
    }
    let det = integer_determinant(&matrix);
    let value = BigInt::from(factorial(lambda.size())) * det / scale;
    value
        .to_biguint()
        .expect("determinantal dimension is non-negative")
}

/// Dimension of the irreducible polynomial representation `V_λ(Cⁿ)` by the
/// hook-content formula `Π (n + cont(b)) / hook(b)`; zero when `ℓ(λ) > n`.
pub fn dim_gl(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    for b in lambda.cells() {
        num *= BigUint::from((n as i64 + b.content()) as u64);
    }
    let den = lambda
        .hook_lengths()
        .into_values()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    num / den
}

/// Kronecker coefficient `g_{λμν}`: multiplicity of `M_ν` in `M_λ ⊗ M_μ`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return BigUint::zero();
    }
    assert!(
        n <= MAX_CHARACTER_DEGREE,
        "kronecker coefficient beyond supported degree {MAX_CHARACTER_DEGREE}"
    );
    let n_fact = BigInt::from(factorial(n));
    let mut total = BigInt::zero();
    for rho in partitions_of(n) {
        let a = character(lambda, &rho);
        if a == 0 {
            continue;
        }
        let b = character(mu, &rho);
        if b == 0 {
            continue;
        }
        let c = character(nu, &rho);
        let size = &n_fact / BigInt::from(z(&rho));
        total += size * BigInt::from(a) * BigInt::from(b) * BigInt::from(c);
    }
    let (q, r) = (&total / &n_fact, &total % &n_fact);
    debug_assert!(r.is_zero(), "character inner product is not integral");
    q.to_biguint().expect("kronecker coefficient is non-negative")
}

/// The full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    n: usize,
    irreps: Vec<Partition>,
    classes: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row labels, lexicographically decreasing.
    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    /// Column labels (cycle types), lexicographically decreasing.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        let i = self.irreps.iter().position(|p| p == lambda)?;
        let j = self.classes.iter().position(|p| p == rho)?;
        Some(self.values[i][j])
    }

    /// Rows are irreducibles, columns are classes, both in reverse-lex order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("irrep");
        for c in &self.classes {
            write!(out, ",\"{c}\"").unwrap();
        }
        out.push('\n');
        for (lambda, row) in self.irreps.iter().zip(&self.values) {
            write!(out, "\"{lambda}\"").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Character table of `S_n` with the default size cap.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with_limit(n, DEFAULT_MAX_TABLE_N)
}

pub fn character_table_with_limit(n: usize, max_n: usize) -> Result<CharacterTable> {
    let limit = max_n.min(MAX_CHARACTER_DEGREE);
    if n > limit {
        return Err(Error::ResourceLimit {
            what: "character table degree",
            requested: n,
            limit,
        });
    }
    let parts: Vec<Partition> = partitions_of(n).collect();
    let values = parts
        .iter()
        .map(|lambda| parts.iter().map(|rho| character(lambda, rho)).collect())
        .collect();
    Ok(CharacterTable {
        n,
        irreps: parts.clone(),
        classes: parts,
        values,
    })
}

/// `⟨f, g⟩ = (1/n!) Σ_ρ (n!/z_ρ) f(ρ) g(ρ)` for class functions given as integer
/// values on cycle types. Returned as an exact integer when divisible.
pub fn inner_product_numerator(n: usize, f: impl Fn(&Partition) -> i64, g: impl Fn(&Partition) -> i64) -> BigInt {
    let n_fact = BigInt::from(factorial(n));
    partitions_of(n)
        .map(|rho| {
            let size = &n_fact / BigInt::from(z(&rho));
            size * BigInt::from(f(&rho)) * BigInt::from(g(&rho))
        })
        .sum()
}
