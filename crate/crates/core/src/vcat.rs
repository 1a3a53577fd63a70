//! Isomorphism classes in the category of polynomial functors / sequences of
//! symmetric group representations.
//!
//! A [`VObject`] is a formal sum `Σ m_λ S_λ` with non-negative multiplicities.
//! The degree-`d` piece is the part supported on partitions of `d`. Infinite
//! objects are never materialized: operations that produce them take a
//! maximum degree and record it as the object's truncation degree, and terms
//! above a truncation degree are never stored.
//!
//! When two truncated objects are combined the result is valid up to the
//! smaller truncation degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{character, dim_gl, dim_sym_hook, factorial, kronecker};
use crate::error::{validation, Error, Result};
use crate::lr::{lr_coefficient, restrict_branch, subpartitions, tensor_expand};
use crate::partitions::{graded_order, partitions_of, Partition};

pub use crate::plethysm::{compose, compose_with, ComposeOptions};

/// A graded-finite object, given by the multiplicity of each simple `S_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VObject {
    terms: BTreeMap<Partition, BigUint>,
    truncation: Option<usize>,
}

impl VObject {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The simple object `S_λ`.
    pub fn simple(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, BigUint::one());
        v
    }

    /// `C⟨n⟩`: the regular representation of `S_n` placed in degree `n`.
    pub fn regular(n: usize) -> Self {
        partitions_of(n).map(|l| (l.clone(), dim_sym_hook(&l))).collect()
    }

    /// Builds an object from terms, dropping zeros and anything above `truncation`.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Partition, BigUint)>,
        truncation: Option<usize>,
    ) -> Self {
        let mut v = VObject {
            terms: BTreeMap::new(),
            truncation,
        };
        for (p, m) in terms {
            v.add_term(p, m);
        }
        v
    }

    /// Adds `mult · S_λ`, ignoring terms above the truncation degree.
    pub fn add_term(&mut self, lambda: Partition, mult: BigUint) {
        if mult.is_zero() || self.truncation.is_some_and(|d| lambda.size() > d) {
            return;
        }
        *self.terms.entry(lambda).or_default() += mult;
    }

    pub fn get(&self, lambda: &Partition) -> BigUint {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms ordered by degree, then lexicographically decreasing.
    pub fn terms(&self) -> Vec<(&Partition, &BigUint)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_order(a.0, b.0));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.terms().into_iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(D)` when this is the truncation to degrees `≤ D` of a larger object.
    pub fn truncation_degree(&self) -> Option<usize> {
        self.truncation
    }

    /// Restricts to degrees `≤ d` and records the truncation.
    pub fn truncate(&self, d: usize) -> VObject {
        let truncation = Some(self.truncation.map_or(d, |t| t.min(d)));
        VObject::from_terms(self.terms.clone(), truncation)
    }

    /// The same terms with no truncation recorded.
    pub fn as_finite(&self) -> VObject {
        VObject::from_terms(self.terms.clone(), None)
    }

    pub fn degree_piece(&self, d: usize) -> VObject {
        VObject::from_terms(
            self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, m)| (p.clone(), m.clone())),
            None,
        )
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).min()
    }

    /// Direct sum.
    pub fn add(&self, other: &VObject) -> VObject {
        let truncation = combine_truncation(self.truncation, other.truncation);
        let mut out = VObject::from_terms(self.terms.clone(), truncation);
        for (p, m) in &other.terms {
            out.add_term(p.clone(), m.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigUint) -> VObject {
        VObject::from_terms(
            self.terms.iter().map(|(p, m)| (p.clone(), m * k)),
            self.truncation,
        )
    }

    /// `dim V_d = Σ_{|λ|=d} m_λ dim M_λ`.
    pub fn dimension_in_degree(&self, d: usize) -> BigUint {
        self.terms
            .iter()
            .filter(|(p, _)| p.size() == d)
            .map(|(p, m)| m * dim_sym_hook(p))
            .sum()
    }

    /// Total dimension over all stored degrees.
    pub fn total_dimension(&self) -> BigUint {
        self.terms.iter().map(|(p, m)| m * dim_sym_hook(p)).sum()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(VObjectJson::from(self)).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&VObjectJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<VObject> {
        let raw: VObjectJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

impl FromIterator<(Partition, BigUint)> for VObject {
    fn from_iter<I: IntoIterator<Item = (Partition, BigUint)>>(iter: I) -> Self {
        VObject::from_terms(iter, None)
    }
}

impl fmt::Display for VObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        }
        for (i, (p, m)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "S{p}")?;
            } else {
                write!(f, "{m}·S{p}")?;
            }
        }
        if let Some(d) = self.truncation {
            write!(f, " (degrees ≤ {d})")?;
        }
        Ok(())
    }
}

/// Parses the display format, e.g. `S[2] + 2·S[1,1] (degrees ≤ 4)`, or the JSON schema.
/// Terms may also be written `2*[1,1]`, `[2]`, or `C<n>` for the regular object.
impl FromStr for VObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return VObject::from_json(s);
        }
        let (body, truncation) = match s.rfind("(degrees") {
            Some(i) => {
                let tail = s[i + "(degrees".len()..].trim();
                let d = tail
                    .strip_prefix('≤')
                    .or_else(|| tail.strip_prefix("<="))
                    .and_then(|t| t.strip_suffix(')'))
                    .and_then(|t| t.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad truncation suffix in {s:?}")))?;
                (s[..i].trim(), Some(d))
            }
            None => (s, None),
        };
        let mut out = VObject::from_terms(Vec::new(), truncation);
        if body == "0" || body.is_empty() {
            return Ok(out);
        }
        for term in body.split('+').map(str::trim) {
            let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (coeff, rest) = term.split_at(split);
            let mult: BigUint = if coeff.is_empty() {
                BigUint::one()
            } else {
                coeff.parse().map_err(|_| Error::Parse(format!("bad multiplicity in {term:?}")))?
            };
            let rest = rest.trim_start_matches(['·', '*', ' ']);
            if let Some(n) = rest
                .strip_prefix("C<")
                .and_then(|r| r.strip_suffix('>'))
                .or_else(|| rest.strip_prefix("C⟨").and_then(|r| r.strip_suffix('⟩')))
            {
                let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad term {term:?}")))?;
                for (p, m) in regular(n).terms {
                    out.add_term(p, m * &mult);
                }
                continue;
            }
            let rest = rest.strip_prefix('S').unwrap_or(rest);
            if rest.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            out.add_term(rest.parse()?, mult);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    multiplicity: String,
}

#[derive(Serialize, Deserialize)]
struct VObjectJson {
    truncation_degree: Option<usize>,
    terms: Vec<TermJson>,
}

impl From<&VObject> for VObjectJson {
    fn from(v: &VObject) -> Self {
        VObjectJson {
            truncation_degree: v.truncation,
            terms: v
                .terms()
                .into_iter()
                .map(|(p, m)| TermJson {
                    partition: p.parts().to_vec(),
                    multiplicity: m.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<VObjectJson> for VObject {
    type Error = Error;
    fn try_from(raw: VObjectJson) -> Result<Self> {
        let mut v = VObject {
            terms: BTreeMap::new(),
            truncation: raw.truncation_degree,
        };
        for t in raw.terms {
            let p = Partition::new(t.partition)?;
            if raw.truncation_degree.is_some_and(|d| p.size() > d) {
                return validation(format!("term {p} lies above the truncation degree"));
            }
            let m: BigUint = t
                .multiplicity
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {:?}", t.multiplicity)))?;
            v.add_term(p, m);
        }
        Ok(v)
    }
}

/// A signed combination of simples, i.e. a class in the Grothendieck group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualVObject {
    terms: BTreeMap<Partition, BigInt>,
    truncation: Option<usize>,
}

impl VirtualVObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda: Partition, mult: BigInt) {
        if self.truncation.is_some_and(|d| lambda.size() > d) {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += mult;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncation_degree(&self) -> Option<usize> {
        self.truncation
    }

    /// `self + sign · v`.
    pub fn accumulate(&mut self, v: &VObject, negative: bool) {
        self.truncation = combine_truncation(self.truncation, v.truncation);
        if let Some(d) = self.truncation {
            self.terms.retain(|p, _| p.size() <= d);
        }
        for (p, m) in v.iter() {
            let m = BigInt::from(m.clone());
            self.add_term(p.clone(), if negative { -m } else { m });
        }
    }

    pub fn terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_order(a.0, b.0));
        v
    }

    /// The actual object, if every multiplicity is non-negative.
    pub fn to_object(&self) -> Option<VObject> {
        if self.terms.values().any(Signed::is_negative) {
            return None;
        }
        Some(VObject::from_terms(
            self.terms
                .iter()
                .map(|(p, m)| (p.clone(), m.to_biguint().unwrap())),
            self.truncation,
        ))
    }
}

impl From<&VObject> for VirtualVObject {
    fn from(v: &VObject) -> Self {
        let mut out = VirtualVObject::zero();
        out.accumulate(v, false);
        out
    }
}

/// An object of the square of the category: formal sum of external products `S_μ ⊠ S_ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiVObject {
    terms: BTreeMap<(Partition, Partition), BigUint>,
}

impl BiVObject {
    pub fn add_term(&mut self, left: Partition, right: Partition, mult: BigUint) {
        if !mult.is_zero() {
            *self.terms.entry((left, right)).or_default() += mult;
        }
    }

    pub fn get(&self, left: &Partition, right: &Partition) -> BigUint {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigUint)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub(crate) fn combine_truncation(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => {
            if x != y {
                log::warn!("combining truncations at degrees {x} and {y}; keeping {}", x.min(y));
            }
            Some(x.min(y))
        }
        (x, None) => x,
        (None, y) => y,
    }
}

pub fn simple(lambda: Partition) -> VObject {
    VObject::simple(lambda)
}

pub fn regular(n: usize) -> VObject {
    VObject::regular(n)
}

/// Induction (Day convolution) tensor product: `[S_ν](V ⊗ W) = Σ c^ν_{λμ} V(λ) W(μ)`.
pub fn tensor(v: &VObject, w: &VObject) -> VObject {
    let truncation = combine_truncation(v.truncation, w.truncation);
    let mut out = VObject {
        terms: BTreeMap::new(),
        truncation,
    };
    for (lambda, a) in &v.terms {
        for (mu, b) in &w.terms {
            if truncation.is_some_and(|d| lambda.size() + mu.size() > d) {
                continue;
            }
            let ab = a * b;
            for (nu, c) in tensor_expand(lambda, mu).iter() {
                out.add_term(nu.clone(), &ab * BigUint::from(c));
            }
        }
    }
    out
}

/// Degreewise tensor product, with Kronecker coefficients as multiplicities.
pub fn pointwise_tensor(v: &VObject, w: &VObject) -> VObject {
    let truncation = combine_truncation(v.truncation, w.truncation);
    let mut out = VObject {
        terms: BTreeMap::new(),
        truncation,
    };
    for (lambda, a) in &v.terms {
        for (mu, b) in &w.terms {
            if lambda.size() != mu.size() {
                continue;
            }
            let ab = a * b;
            for nu in partitions_of(lambda.size()) {
                let g = kronecker(lambda, mu, &nu);
                if !g.is_zero() {
                    out.add_term(nu, &ab * g);
                }
            }
        }
    }
    out
}

/// Co-addition: `S_λ ↦ Σ c^λ_{μν} S_μ ⊠ S_ν`.
pub fn coaddition(v: &VObject) -> BiVObject {
    let mut out = BiVObject::default();
    for (lambda, m) in &v.terms {
        let branches = restrict_branch(lambda, None).expect("full split list is always valid");
        for ((mu, nu), c) in branches {
            out.add_term(mu, nu, m * BigUint::from(c));
        }
    }
    out
}

/// Co-multiplication: `S_λ ↦ Σ g_{λμν} S_μ ⊠ S_ν`.
pub fn comultiplication(v: &VObject) -> BiVObject {
    let mut out = BiVObject::default();
    for (lambda, m) in &v.terms {
        let n = lambda.size();
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let g = kronecker(lambda, &mu, &nu);
                if !g.is_zero() {
                    out.add_term(mu.clone(), nu, m * g);
                }
            }
        }
    }
    out
}

/// Perfect matchings on `2n` points as a representation: `Σ_{λ⊢n} S_{2λ}`.
pub fn matchings(n: usize) -> VObject {
    partitions_of(n).map(|l| (l.scale(2), BigUint::one())).collect()
}

/// `S_λ ↦ S_{λ†}` termwise (twist each degree by the sign character).
pub fn transpose_object(v: &VObject) -> VObject {
    VObject::from_terms(
        v.terms.iter().map(|(p, m)| (p.transpose(), m.clone())),
        v.truncation,
    )
}

/// The dual object. On isomorphism classes of graded-finite objects this is the identity.
pub fn dual(v: &VObject) -> VObject {
    v.clone()
}

/// `(W∘V)†`, computed as `W∘V†` when `V` lives in even degrees and as
/// `W†∘V†` when it lives in odd degrees.
pub fn compose_transpose(w: &VObject, v: &VObject, max_degree: usize) -> Result<VObject> {
    let parities: Vec<usize> = v.terms.keys().map(|p| p.size() % 2).collect();
    let Some(&parity) = parities.first() else {
        return compose(w, v, max_degree);
    };
    if parities.iter().any(|&q| q != parity) {
        return validation("compose_transpose needs the inner object in degrees of a single parity");
    }
    let vt = transpose_object(v);
    if parity == 0 {
        compose(w, &vt, max_degree)
    } else {
        compose(&transpose_object(w), &vt, max_degree)
    }
}

/// Schur derivative `D S_λ = Σ S_μ` over `μ` obtained by removing one box.
pub fn schur_derivative(v: &VObject) -> VObject {
    let mut out = VObject {
        terms: BTreeMap::new(),
        truncation: v.truncation.map(|d| d.saturating_sub(1)),
    };
    for (lambda, m) in &v.terms {
        for mu in lambda.remove_one_box() {
            out.add_term(mu, m.clone());
        }
    }
    out
}

/// Higher derivative (skewing): `D_ν S_λ = Σ_μ c^λ_{μν} S_μ`.
pub fn higher_derivative(nu: &Partition, v: &VObject) -> VObject {
    let k = nu.size();
    let mut out = VObject {
        terms: BTreeMap::new(),
        truncation: v.truncation.map(|d| d.saturating_sub(k)),
    };
    for (lambda, m) in &v.terms {
        if lambda.size() < k {
            continue;
        }
        for mu in subpartitions(lambda, lambda.size() - k) {
            let c = lr_coefficient(lambda, &mu, nu);
            if c > 0 {
                out.add_term(mu, m * BigUint::from(c));
            }
        }
    }
    out
}

/// `dim V(Cⁿ) = Σ V(λ) dim V_λ(Cⁿ)`.
pub fn evaluate_at_rank(v: &VObject, n: usize) -> BigUint {
    v.terms.iter().map(|(p, m)| m * dim_gl(p, n)).sum()
}

/// `ℓ(V)`: the largest number of rows among the stored terms (0 for the zero object).
pub fn ell(v: &VObject) -> usize {
    v.terms.keys().map(Partition::len).max().unwrap_or(0)
}

/// Drops every term with more than `n` rows (the simples killed by evaluation on `Cⁿ`).
pub fn truncate_rows(v: &VObject, n: usize) -> VObject {
    VObject::from_terms(
        v.terms
            .iter()
            .filter(|(p, _)| p.len() <= n)
            .map(|(p, m)| (p.clone(), m.clone())),
        v.truncation,
    )
}

/// Coefficients of `H_V(t) = Σ dim(V_n) tⁿ/n!` for `n ≤ order`. For a
/// truncated object the sequence stops at the truncation degree.
pub fn hilbert_series(v: &VObject, order: usize) -> Vec<BigRational> {
    let top = v.truncation.map_or(order, |d| d.min(order));
    (0..=top)
        .map(|n| {
            BigRational::new(
                BigInt::from(v.dimension_in_degree(n)),
                BigInt::from(factorial(n)),
            )
        })
        .collect()
}

/// `λ! = Π m_i(λ)!`.
pub fn class_factorial(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .into_values()
        .fold(BigUint::one(), |acc, m| acc * factorial(m))
}

/// Coefficients of the enhanced Hilbert series `Σ_λ trace(c_λ | V) t^λ / λ!`
/// for `|λ| ≤ order`, keyed by cycle type. Zero coefficients are omitted.
pub fn enhanced_hilbert(v: &VObject, order: usize) -> BTreeMap<Partition, BigRational> {
    let top = v.truncation.map_or(order, |d| d.min(order));
    let mut out = BTreeMap::new();
    for n in 0..=top {
        let piece: Vec<(&Partition, &BigUint)> =
            v.terms.iter().filter(|(p, _)| p.size() == n).collect();
        if piece.is_empty() {
            continue;
        }
        for rho in partitions_of(n) {
            let trace: BigInt = piece
                .iter()
                .map(|(mu, m)| BigInt::from((*m).clone()) * BigInt::from(character(mu, &rho)))
                .sum();
            if !trace.is_zero() {
                let coeff = BigRational::new(trace, BigInt::from(class_factorial(&rho)));
                out.insert(rho, coeff);
            }
        }
    }
    out
}

/// Product of two enhanced Hilbert series, using `t^λ t^μ = t^{λ∪μ}`, kept to `|λ| ≤ order`.
pub fn enhanced_product(
    a: &BTreeMap<Partition, BigRational>,
    b: &BTreeMap<Partition, BigRational>,
    order: usize,
) -> BTreeMap<Partition, BigRational> {
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            if la.size() + lb.size() > order {
                continue;
            }
            let key = la.union(lb);
            let entry = out.entry(key.clone()).or_insert_with(BigRational::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}
