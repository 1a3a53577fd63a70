//! Composition of objects (plethysm) through the power-sum basis.
//!
//! Both arguments are rewritten in power sums with `s_λ = Σ_ρ χ_λ(ρ)/z_ρ · p_ρ`.
//! Plethysm by `p_k` is the ring map `p_σ ↦ p_{kσ}` fixing scalars, and the
//! outer argument acts through `p_ρ[V] = Π p_{ρ_i}[V]`. The result is converted
//! back with `p_ρ = Σ_ν χ_ν(ρ) s_ν`; every Schur coefficient must come out as a
//! non-negative integer.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::characters::{character, z};
use crate::error::{validation, Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::vcat::VObject;

/// A symmetric function in the power-sum basis, truncated by degree.
type PowerSums = BTreeMap<Partition, BigRational>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComposeOptions {
    /// Permit an inner object with an `S_∅` term. Both objects must then be
    /// finite, since every term of the outer object feeds degree 0.
    pub allow_constant: bool,
}

/// `W ∘ V` up to `max_degree`.
pub fn compose(w: &VObject, v: &VObject, max_degree: usize) -> Result<VObject> {
    compose_with(w, v, max_degree, ComposeOptions::default())
}

pub fn compose_with(
    w: &VObject,
    v: &VObject,
    max_degree: usize,
    options: ComposeOptions,
) -> Result<VObject> {
    let has_constant = !v.get(&Partition::empty()).is_zero();
    if has_constant {
        if !options.allow_constant {
            return validation(
                "inner object has a degree-0 term; composition would have infinite multiplicities",
            );
        }
        if v.truncation_degree().is_some() || w.truncation_degree().is_some() {
            return validation("an inner object with a degree-0 term needs finite inner and outer objects");
        }
    }
    let min_inner = v.min_degree().unwrap_or(0);
    let mut top = max_degree;
    if let Some(d) = v.truncation_degree() {
        top = top.min(d);
    }
    if let (Some(d), true) = (w.truncation_degree(), min_inner >= 1) {
        top = top.min((d + 1) * min_inner - 1);
    }

    let inner = to_power_sums(v, top);
    let outer = to_power_sums(w, usize::MAX);

    let mut products = ProductMemo {
        inner: &inner,
        top,
        adams: HashMap::new(),
        products: HashMap::new(),
    };
    let mut total = PowerSums::new();
    for (rho, coeff) in &outer {
        if min_inner >= 1 && rho.size() * min_inner > top {
            continue;
        }
        let prod = products.product(rho.parts());
        for (sigma, x) in prod.iter() {
            add_into(&mut total, sigma.clone(), coeff * x);
        }
    }
    from_power_sums(&total, top)
}

/// Schur expansion → power sums, dropping degrees above `top`.
fn to_power_sums(v: &VObject, top: usize) -> PowerSums {
    let mut out = PowerSums::new();
    for (lambda, m) in v.iter() {
        let n = lambda.size();
        if n > top {
            continue;
        }
        let m = BigInt::from(m.clone());
        for rho in partitions_of(n) {
            let chi = character(lambda, &rho);
            if chi == 0 {
                continue;
            }
            let c = BigRational::new(&m * BigInt::from(chi), BigInt::from(z(&rho)));
            add_into(&mut out, rho, c);
        }
    }
    out
}

fn from_power_sums(f: &PowerSums, top: usize) -> Result<VObject> {
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
    for (rho, c) in f {
        by_degree.entry(rho.size()).or_default().push((rho, c));
    }
    let mut out = VObject::from_terms(Vec::new(), Some(top));
    for (n, entries) in by_degree {
        for nu in partitions_of(n) {
            let coeff: BigRational = entries
                .iter()
                .map(|(rho, c)| *c * BigRational::from_integer(character(&nu, rho).into()))
                .sum();
            if coeff.is_zero() {
                continue;
            }
            if !coeff.is_integer() || coeff.is_negative() {
                return Err(Error::Integrity(format!(
                    "plethysm produced coefficient {coeff} for S{nu}"
                )));
            }
            let m: BigUint = coeff.to_integer().to_biguint().unwrap();
            out.add_term(nu, m);
        }
    }
    Ok(out)
}

fn add_into(acc: &mut PowerSums, key: Partition, value: BigRational) {
    if value.is_zero() {
        return;
    }
    let entry = acc.entry(key.clone()).or_insert_with(BigRational::zero);
    *entry += value;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn multiply(a: &PowerSums, b: &PowerSums, top: usize) -> PowerSums {
    let mut out = PowerSums::new();
    for (s, x) in a {
        for (t, y) in b {
            if s.size() + t.size() <= top {
                add_into(&mut out, s.union(t), x * y);
            }
        }
    }
    out
}

/// `p_k[f]`: every power sum `p_σ` becomes `p_{kσ}`.
fn adams(k: usize, f: &PowerSums, top: usize) -> PowerSums {
    f.iter()
        .filter(|(s, _)| s.size() * k <= top)
        .map(|(s, c)| (s.scale(k), c.clone()))
        .collect()
}

struct ProductMemo<'a> {
    inner: &'a PowerSums,
    top: usize,
    adams: HashMap<usize, PowerSums>,
    products: HashMap<Vec<usize>, PowerSums>,
}

impl ProductMemo<'_> {
    /// `Π p_{ρ_i}[V]`, sharing work between partitions with a common prefix.
    fn product(&mut self, parts: &[usize]) -> PowerSums {
        if parts.is_empty() {
            return [(Partition::empty(), BigRational::from_integer(1.into()))]
                .into_iter()
                .collect();
        }
        if let Some(p) = self.products.get(parts) {
            return p.clone();
        }
        let prefix = self.product(&parts[..parts.len() - 1]);
        let k = parts[parts.len() - 1];
        let (inner, top) = (self.inner, self.top);
        let factor = self.adams.entry(k).or_insert_with(|| adams(k, inner, top));
        let result = multiply(&prefix, factor, top);
        self.products.insert(parts.to_vec(), result.clone());
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vcat::{regular, simple, tensor};
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn obj(terms: &[(&str, u32)]) -> VObject {
        terms.iter().map(|(s, m)| (p(s), BigUint::from(*m))).collect()
    }

    #[test]
    fn sym2_of_sym2() {
        let r = compose(&simple(p("[2]")), &simple(p("[2]")), 4).unwrap();
        assert_eq!(r.as_finite(), obj(&[("[4]", 1), ("[2,2]", 1)]));
        assert_eq!(r.truncation_degree(), Some(4));
    }

    #[test]
    fn sym2_of_wedge2() {
        let r = compose(&simple(p("[2]")), &simple(p("[1,1]")), 4).unwrap();
        assert_eq!(r.as_finite(), obj(&[("[2,2]", 1), ("[1,1,1,1]", 1)]));
    }

    #[test]
    fn identity_inner() {
        let w = obj(&[("[3,1]", 2), ("[2]", 1), ("[]", 1)]);
        assert_eq!(compose(&w, &simple(p("[1]")), 6).unwrap().as_finite(), w);
    }

    #[test]
    fn constant_inner_needs_opt_in() {
        let v = obj(&[("[]", 1), ("[1]", 1)]);
        assert!(compose(&simple(p("[2]")), &v, 4).is_err());
        let opts = ComposeOptions { allow_constant: true };
        // Sym²(1 + x) = 1 + x + Sym²x
        let r = compose_with(&simple(p("[2]")), &v, 4, opts).unwrap();
        assert_eq!(r.as_finite(), obj(&[("[]", 1), ("[1]", 1), ("[2]", 1)]));
        assert!(compose_with(&simple(p("[2]")).truncate(3), &v, 4, opts).is_err());
        assert!(compose_with(&simple(p("[2]")), &v.truncate(3), 4, opts).is_err());
    }

    #[test]
    fn truncation_is_respected() {
        let sym: VObject = (0..=3).map(|n| (Partition::row(n), BigUint::one())).collect();
        let r = compose(&sym.truncate(3), &simple(p("[1]")), 10).unwrap();
        assert_eq!(r.truncation_degree(), Some(3));
        let r = compose(&simple(p("[3]")), &regular(2), 5).unwrap();
        assert!(r.is_zero());
        // Sym³(C⟨2⟩) has total dimension 6!/3! = 120
        let r = compose(&simple(p("[3]")), &regular(2), 6).unwrap();
        assert_eq!(r.total_dimension(), BigUint::from(120u32));
    }

    #[test]
    fn multiplicative_in_outer() {
        let v = obj(&[("[1]", 1), ("[2]", 1)]);
        let w1 = simple(p("[2]"));
        let w2 = simple(p("[1,1]"));
        let lhs = compose(&tensor(&w1, &w2), &v, 6).unwrap();
        let rhs = tensor(&compose(&w1, &v, 6).unwrap(), &compose(&w2, &v, 6).unwrap());
        assert_eq!(lhs, rhs.truncate(6));
    }
}
