//! Polynomial twisted commutative algebras `Sym(F)` and free modules over them,
//! handled through their truncated decompositions.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::characters::{dim_gl, factorial};
use crate::error::{validation, Result};
use crate::partitions::{partitions_with_max_len, Partition};
use crate::plethysm::compose;
use crate::vcat::{evaluate_at_rank, regular, VObject};

/// `Sym(F)` for a finite object `F` concentrated in positive degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialTcaSpec {
    generators: VObject,
    aux_dimension: Option<usize>,
}

impl PolynomialTcaSpec {
    pub fn sym_of(generators: VObject) -> Result<Self> {
        if generators.truncation_degree().is_some() {
            return validation("tca generators must be a finite object");
        }
        if !generators.get(&Partition::empty()).is_zero() {
            return validation("tca generators must not have a degree-0 term");
        }
        Ok(PolynomialTcaSpec {
            generators,
            aux_dimension: None,
        })
    }

    /// `Sym(C⟨1⟩)`, the univariate polynomial ring with one degree.
    pub fn sym_c1() -> Self {
        Self::sym_u1(1)
    }

    /// `Sym(U⟨1⟩)` with `dim U = u`.
    pub fn sym_u1(u: usize) -> Self {
        PolynomialTcaSpec {
            generators: VObject::from_terms([(Partition::row(1), BigUint::from(u))], None),
            aux_dimension: Some(u),
        }
    }

    /// `Sym(C⟨k⟩)`.
    pub fn sym_ck(k: usize) -> Result<Self> {
        if k == 0 {
            return validation("C⟨0⟩ sits in degree 0");
        }
        Self::sym_of(regular(k))
    }

    pub fn generators(&self) -> &VObject {
        &self.generators
    }

    pub fn aux_dimension(&self) -> Option<usize> {
        self.aux_dimension
    }

    fn cauchy_rank(&self) -> Option<usize> {
        let u = self.aux_dimension?;
        let expected = VObject::from_terms([(Partition::row(1), BigUint::from(u))], None);
        (self.generators == expected).then_some(u)
    }
}

/// Decomposition of `Sym(F)` in degrees `≤ max_degree`.
///
/// For `F = U⟨1⟩` this is the Cauchy decomposition `Σ_{ℓ(λ) ≤ dim U} dim V_λ(U) · S_λ`;
/// otherwise `Sym ∘ F` is computed by plethysm.
pub fn tca_decompose(spec: &PolynomialTcaSpec, max_degree: usize) -> Result<VObject> {
    match spec.cauchy_rank() {
        Some(u) => Ok(cauchy(u, max_degree)),
        None => tca_decompose_generic(spec, max_degree),
    }
}

/// Always goes through plethysm, even when the Cauchy formula applies.
pub fn tca_decompose_generic(spec: &PolynomialTcaSpec, max_degree: usize) -> Result<VObject> {
    compose(&sym_series(max_degree), &spec.generators, max_degree)
}

fn cauchy(u: usize, max_degree: usize) -> VObject {
    let mut out = VObject::from_terms(Vec::new(), Some(max_degree));
    for n in 0..=max_degree {
        for lambda in partitions_with_max_len(n, u) {
            let m = dim_gl(&lambda, u);
            out.add_term(lambda, m);
        }
    }
    out
}

/// `Sym = Σ_n S_(n)` truncated to degrees `≤ max_degree`.
pub fn sym_series(max_degree: usize) -> VObject {
    VObject::from_terms(
        (0..=max_degree).map(|n| (Partition::row(n), BigUint::one())),
        Some(max_degree),
    )
}

/// `(kn)!/n!`: unordered collections of `n` ordered `k`-tuples partitioning `kn` symbols.
/// This is the dimension of the degree-`kn` piece of `Sym(C⟨k⟩)`.
pub fn hypermatching_count(k: usize, n: usize) -> BigUint {
    factorial(k * n) / factorial(n)
}

/// Generator objects `Λ^i(C⟨1⟩) = S_(1^i)` of the Koszul resolution of `C` over `Sym(C⟨1⟩)`.
pub fn koszul_generators(n_terms: usize) -> Vec<VObject> {
    (0..n_terms).map(|i| VObject::simple(Partition::column(i))).collect()
}

/// The free module `A ⊗ G` with its generators placed in internal degree `-twist`,
/// so that `twist = -d` is the module `(A ⊗ G)(-d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleSpec {
    pub tca: PolynomialTcaSpec,
    pub generator_object: VObject,
    pub twist: i64,
}

impl FreeModuleSpec {
    pub fn new(tca: PolynomialTcaSpec, generator_object: VObject, twist: i64) -> Result<Self> {
        if generator_object.truncation_degree().is_some() {
            return validation("free module generators must be a finite object");
        }
        Ok(FreeModuleSpec {
            tca,
            generator_object,
            twist,
        })
    }
}

/// Dimensions of `(A ⊗ G)(Cʳ)` in internal degrees `0..=order`.
///
/// The algebra is graded by the number of generator factors, so
/// `dim A_a(Cʳ) = C(N + a − 1, a)` with `N = dim F(Cʳ)`, and degree `d` of the
/// module is `dim A_{d + twist}(Cʳ) · dim G(Cʳ)`.
pub fn free_module_hilbert(spec: &FreeModuleSpec, rank: usize, order: usize) -> Vec<BigUint> {
    let g = evaluate_at_rank(&spec.generator_object, rank);
    let n = evaluate_at_rank(&spec.tca.generators, rank);
    (0..=order)
        .map(|d| {
            let a = d as i64 + spec.twist;
            if a < 0 || g.is_zero() {
                return BigUint::zero();
            }
            let a = BigUint::from(a as u64);
            if n.is_zero() {
                return if a.is_zero() { g.clone() } else { BigUint::zero() };
            }
            binomial(&n + &a - 1u32, a) * &g
        })
        .collect()
}

/// `degree,dimension` rows for a Hilbert sequence.
pub fn hilbert_csv(seq: &[BigUint]) -> String {
    let mut out = String::from("degree,dimension\n");
    for (d, m) in seq.iter().enumerate() {
        out.push_str(&format!("{d},{m}\n"));
    }
    out
}
