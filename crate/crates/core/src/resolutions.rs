//! Koszul complexes over `Sym(Cʳ)` with degreewise exactness checks, and the
//! Eisenbud–Fløystad–Weyman construction of pure resolutions at the level of
//! multiplicities.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::dim_gl;
use crate::error::{validation, Error, Result};
use crate::linalg::QMatrix;
use crate::lr::lr_coefficient;
use crate::partitions::{Partition, SkewShape};

/// `d_0 < d_1 < … < d_n`, normalized so that `d_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Shifts the sequence so that it starts at 0.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let Some(&d0) = degrees.first() else {
            return validation("degree sequence is empty");
        };
        if degrees.windows(2).any(|w| w[0] >= w[1]) {
            return validation(format!("degree sequence {degrees:?} is not strictly increasing"));
        }
        Ok(DegreeSequence {
            degrees: degrees.into_iter().map(|d| d - d0).collect(),
        })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `n`, the index of the last term.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    /// `e_i = d_i − d_{i−1}` for `i = 1..=n`.
    pub fn gaps(&self) -> Vec<usize> {
        self.degrees.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The data `(α, β, e, d, α(d,·))` of the EFW construction, with its validity report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureResolutionPlan {
    pub alpha: Partition,
    pub beta: Partition,
    pub n_rows: usize,
    pub e: Vec<usize>,
    pub d: DegreeSequence,
    pub shapes: Vec<Partition>,
    pub report: ValidityReport,
}

/// Per-step checks of a plan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepCheck {
    pub index: usize,
    /// `α(d,i) / α(d,i−1)` is a horizontal strip of size `e_i`.
    pub horizontal_strip: bool,
    /// `c^{α(d,i)}_{α(d,i−1), (e_i)}`; the map `F_i → F_{i−1}` is unique up to scalar when this is 1.
    pub pieri_multiplicity: u64,
    /// `c^{α(d,i)}_{α(d,i−2), (d_i − d_{i−2})}`; must vanish for the composite to be zero.
    pub obstruction: Option<u64>,
}

impl StepCheck {
    pub fn passes(&self) -> bool {
        self.horizontal_strip && self.pieri_multiplicity == 1 && self.obstruction.unwrap_or(0) == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub steps: Vec<StepCheck>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.steps.iter().all(StepCheck::passes)
    }

    pub fn failures(&self) -> Vec<&StepCheck> {
        self.steps.iter().filter(|s| !s.passes()).collect()
    }
}

/// Builds the plan for `α ⊂ β` with `β_1 > α_1`, `β_i = α_i` for `i ≥ 2`, over `n_rows` rows.
pub fn efw_plan(alpha: &Partition, beta: &Partition, n_rows: usize) -> Result<PureResolutionPlan> {
    if n_rows == 0 {
        return validation("n_rows must be at least 1");
    }
    if alpha.len() > n_rows {
        return validation(format!("ℓ(α) = {} exceeds n_rows = {n_rows}", alpha.len()));
    }
    if beta.first() <= alpha.first() {
        return validation(format!("β_1 = {} must exceed α_1 = {}", beta.first(), alpha.first()));
    }
    if (1..n_rows.max(beta.len())).any(|i| beta.part(i) != alpha.part(i)) {
        return validation("β_i must equal α_i for i ≥ 2");
    }
    let a: Vec<usize> = (0..n_rows).map(|i| alpha.part(i)).collect();
    let mut e = vec![beta.first() - a[0]];
    for i in 1..n_rows {
        e.push(a[i - 1] - a[i] + 1);
    }
    let mut degrees = vec![0];
    for &ei in &e {
        degrees.push(degrees.last().unwrap() + ei);
    }
    let shapes = (0..=n_rows)
        .map(|i| {
            let parts = (0..n_rows).map(|j| if j < i { a[j] + e[j] } else { a[j] }).collect();
            Partition::new(parts).expect("EFW shapes are partitions")
        })
        .collect();
    let mut plan = PureResolutionPlan {
        alpha: alpha.clone(),
        beta: beta.clone(),
        n_rows,
        e,
        d: DegreeSequence { degrees },
        shapes,
        report: ValidityReport::default(),
    };
    plan.report = validate_plan(&plan);
    Ok(plan)
}

/// Reverses the construction, choosing the `α` with `α_n = 0`.
pub fn plan_from_degree_sequence(d: &DegreeSequence) -> Result<PureResolutionPlan> {
    let n = d.length();
    if n == 0 {
        return validation("degree sequence needs at least two terms");
    }
    let e = d.gaps();
    let alpha_parts: Vec<usize> = (0..n).map(|i| e[i + 1..].iter().map(|x| x - 1).sum()).collect();
    let alpha = Partition::new(alpha_parts)?;
    let mut beta_parts = alpha.parts().to_vec();
    if beta_parts.is_empty() {
        beta_parts.push(0);
    }
    beta_parts[0] = alpha.first() + e[0];
    efw_plan(&alpha, &Partition::new(beta_parts)?, n)
}

pub fn validate_plan(p: &PureResolutionPlan) -> ValidityReport {
    let degrees = p.d.degrees();
    let steps = (1..p.shapes.len())
        .map(|i| {
            let (outer, inner) = (&p.shapes[i], &p.shapes[i - 1]);
            let e = degrees[i] - degrees[i - 1];
            let horizontal_strip = SkewShape::new(outer.clone(), inner.clone())
                .map(|s| s.size() == e && s.is_horizontal_strip())
                .unwrap_or(false);
            let pieri_multiplicity = lr_coefficient(outer, inner, &Partition::row(e));
            let obstruction = (i >= 2).then(|| {
                let gap = degrees[i] - degrees[i - 2];
                lr_coefficient(outer, &p.shapes[i - 2], &Partition::row(gap))
            });
            StepCheck {
                index: i,
                horizontal_strip,
                pieri_multiplicity,
                obstruction,
            }
        })
        .collect();
    ValidityReport { steps }
}

/// Betti numbers of a pure complex: homological index, internal degree, rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub entries: Vec<BettiEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub index: usize,
    pub degree: usize,
    #[serde(serialize_with = "as_string")]
    pub dimension: BigUint,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl BettiTable {
    /// `(d_i, dim)` per homological index.
    pub fn pairs(&self) -> Vec<(usize, BigUint)> {
        self.entries.iter().map(|e| (e.degree, e.dimension.clone())).collect()
    }

    /// One internal degree per homological index with degrees strictly increasing.
    pub fn is_pure(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].degree < w[1].degree)
    }

    fn grid(&self) -> (Vec<usize>, Vec<Vec<String>>) {
        let degrees: Vec<usize> = self
            .entries
            .iter()
            .map(|e| e.degree)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let rows = self
            .entries
            .iter()
            .map(|e| {
                let mut row = vec![e.index.to_string()];
                row.extend(degrees.iter().map(|&d| {
                    if d == e.degree {
                        e.dimension.to_string()
                    } else {
                        "0".to_string()
                    }
                }));
                row
            })
            .collect();
        (degrees, rows)
    }

    /// Rows are homological indices, columns internal degrees.
    pub fn to_csv(&self) -> String {
        let (degrees, rows) = self.grid();
        let mut out = String::from("index");
        for d in &degrees {
            out.push_str(&format!(",{d}"));
        }
        out.push('\n');
        for row in rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let (degrees, rows) = self.grid();
        let mut header = vec!["i\\d".to_string()];
        header.extend(degrees.iter().map(ToString::to_string));
        let mut all = vec![header];
        all.extend(rows);
        let cols = all[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| all.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &all {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `i ↦ (d_i, dim S_{α(d,i)}(Cʳ))`.
pub fn plan_betti_table(p: &PureResolutionPlan, rank: usize) -> BettiTable {
    BettiTable {
        entries: p
            .shapes
            .iter()
            .zip(p.d.degrees())
            .enumerate()
            .map(|(index, (shape, &degree))| BettiEntry {
                index,
                degree,
                dimension: dim_gl(shape, rank),
            })
            .collect(),
    }
}

/// One internal degree of a complex `F_top → … → F_1 → F_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePiece {
    pub degree: usize,
    /// `dims[i] = dim F_{i,D}`.
    pub dims: Vec<usize>,
    /// `differentials[i-1]` is `∂_i : F_i → F_{i−1}`, with rows indexing the target.
    pub differentials: Vec<QMatrix>,
}

/// A bounded complex of finite-dimensional graded vector spaces, stored degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    rank: usize,
    pieces: Vec<DegreePiece>,
}

impl GradedComplex {
    pub fn new(rank: usize, pieces: Vec<DegreePiece>) -> Result<Self> {
        for p in &pieces {
            if p.differentials.len() + 1 != p.dims.len() {
                return validation(format!("degree {}: need one differential per spot", p.degree));
            }
            for (k, m) in p.differentials.iter().enumerate() {
                if m.rows() != p.dims[k] || m.cols() != p.dims[k + 1] {
                    return validation(format!(
                        "degree {}: ∂_{} has shape {}x{}, expected {}x{}",
                        p.degree,
                        k + 1,
                        m.rows(),
                        m.cols(),
                        p.dims[k],
                        p.dims[k + 1]
                    ));
                }
            }
        }
        Ok(GradedComplex { rank, pieces })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pieces(&self) -> &[DegreePiece] {
        &self.pieces
    }

    pub fn piece(&self, degree: usize) -> Option<&DegreePiece> {
        self.pieces.iter().find(|p| p.degree == degree)
    }

    /// Replaces `∂_index` in the given internal degree.
    pub fn set_differential(&mut self, degree: usize, index: usize, m: QMatrix) -> Result<()> {
        let Some(p) = self.pieces.iter_mut().find(|p| p.degree == degree) else {
            return validation(format!("no internal degree {degree}"));
        };
        if index == 0 || index > p.differentials.len() {
            return validation(format!("no differential ∂_{index}"));
        }
        let old = &p.differentials[index - 1];
        if (old.rows(), old.cols()) != (m.rows(), m.cols()) {
            return validation("replacement differential has the wrong shape");
        }
        p.differentials[index - 1] = m;
        Ok(())
    }

    /// `Σ_i (−1)^i dim F_{i,D}`.
    pub fn euler_characteristic(&self, degree: usize) -> BigInt {
        self.piece(degree).map_or_else(BigInt::zero, |p| {
            p.dims
                .iter()
                .enumerate()
                .map(|(i, &d)| if i % 2 == 0 { BigInt::from(d) } else { -BigInt::from(d) })
                .sum()
        })
    }
}

/// Exponent vectors of degree `k` in `n` variables, lexicographically decreasing (`x₁ᵏ` first).
fn monomials(n: usize, k: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in monomials(n - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `i`-subsets of `0..n` in colexicographic order.
fn wedge_basis(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, i: usize) -> Vec<Vec<usize>> {
        if i == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for top in i - 1..n {
            for mut s in rec(top, i - 1) {
                s.push(top);
                out.push(s);
            }
        }
        out
    }
    if i > n {
        return Vec::new();
    }
    rec(n, i)
}

fn koszul_piece(rank: usize, degree: usize) -> DegreePiece {
    let top = rank.min(degree);
    let bases: Vec<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = (0..=top)
        .map(|i| (monomials(rank, degree - i), wedge_basis(rank, i)))
        .collect();
    let dims: Vec<usize> = bases.iter().map(|(m, w)| m.len() * w.len()).collect();
    let mut differentials = Vec::with_capacity(top);
    for i in 1..=top {
        let (src_m, src_w) = &bases[i];
        let (tgt_m, tgt_w) = &bases[i - 1];
        let tgt_m_index: HashMap<&Vec<usize>, usize> =
            tgt_m.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let tgt_w_index: HashMap<&Vec<usize>, usize> =
            tgt_w.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut mat = QMatrix::zeros(dims[i - 1], dims[i]);
        for (mi, mono) in src_m.iter().enumerate() {
            for (wi, wedge) in src_w.iter().enumerate() {
                let col = mi * src_w.len() + wi;
                // v_{j_1} ∧ … ∧ v_{j_i} ↦ Σ_s (−1)^s x_{j_s} ⊗ (omit j_s), s = 1..i
                for (pos, &var) in wedge.iter().enumerate() {
                    let mut m = mono.clone();
                    m[var] += 1;
                    let mut w = wedge.clone();
                    w.remove(pos);
                    let row = tgt_m_index[&m] * tgt_w.len() + tgt_w_index[&w];
                    let sign = if (pos + 1) % 2 == 0 { 1 } else { -1 };
                    mat.set(row, col, BigRational::from_integer(sign.into()));
                }
            }
        }
        differentials.push(mat);
    }
    DegreePiece {
        degree,
        dims,
        differentials,
    }
}

/// The Koszul complex `Sym^{D−i}(Cʳ) ⊗ Λ^i(Cʳ)` resolving `C` over `Sym(Cʳ)`, in internal
/// degrees `0..=max_internal_degree`. Degrees are built in parallel.
pub fn koszul_complex(rank: usize, max_internal_degree: usize) -> Result<GradedComplex> {
    if rank == 0 {
        return validation("Koszul complex needs rank ≥ 1");
    }
    let pieces = (0..=max_internal_degree)
        .into_par_iter()
        .map(|d| koszul_piece(rank, d))
        .collect();
    Ok(GradedComplex { rank, pieces })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub spot: usize,
    pub degree: usize,
    pub dimension: usize,
}

/// Nonzero homology of a complex, by homological spot and internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub rank: usize,
    pub max_degree: Option<usize>,
    pub nonzero: Vec<HomologyEntry>,
}

impl HomologyReport {
    /// `H_i = 0` for `i ≥ 1`.
    pub fn is_acyclic(&self) -> bool {
        self.nonzero.iter().all(|e| e.spot == 0)
    }

    /// Acyclic with `H_0 = C` in degree 0, as for a resolution of the residue field.
    pub fn resolves_residue_field(&self) -> bool {
        self.nonzero
            == [HomologyEntry {
                spot: 0,
                degree: 0,
                dimension: 1,
            }]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    fn describe(entries: &[&HomologyEntry]) -> String {
        if entries.is_empty() {
            return "0".to_string();
        }
        entries
            .iter()
            .map(|e| format!("{}·(degree {})", e.dimension, e.degree))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spots: BTreeSet<usize> = self.nonzero.iter().map(|e| e.spot).filter(|&s| s > 0).collect();
        if spots.is_empty() {
            write!(f, "H_i = 0 for i ≥ 1; ")?;
        }
        for s in spots.iter().rev() {
            let entries: Vec<_> = self.nonzero.iter().filter(|e| e.spot == *s).collect();
            write!(f, "H_{s} = {}; ", Self::describe(&entries))?;
        }
        let h0: Vec<_> = self.nonzero.iter().filter(|e| e.spot == 0).collect();
        write!(f, "H_0 = {}", Self::describe(&h0))
    }
}

/// Homology by rank–nullity over exact rationals; fails if some `∂_i ∂_{i+1} ≠ 0`.
pub fn exactness_report(c: &GradedComplex) -> Result<HomologyReport> {
    let per_degree: Vec<Result<Vec<HomologyEntry>>> = c
        .pieces
        .par_iter()
        .map(|p| {
            for k in 1..p.differentials.len() {
                if !p.differentials[k - 1].mul(&p.differentials[k]).is_zero() {
                    return Err(Error::Integrity(format!(
                        "∂_{}∘∂_{} ≠ 0 in internal degree {}",
                        k,
                        k + 1,
                        p.degree
                    )));
                }
            }
            let ranks: Vec<usize> = p.differentials.iter().map(QMatrix::rank).collect();
            let rank_of = |i: usize| if i == 0 || i > ranks.len() { 0 } else { ranks[i - 1] };
            Ok((0..p.dims.len())
                .filter_map(|i| {
                    let h = p.dims[i] - rank_of(i) - rank_of(i + 1);
                    (h > 0).then_some(HomologyEntry {
                        spot: i,
                        degree: p.degree,
                        dimension: h,
                    })
                })
                .collect())
        })
        .collect();
    let mut nonzero = Vec::new();
    for r in per_degree {
        nonzero.extend(r?);
    }
    nonzero.sort_by_key(|e| (e.spot, e.degree));
    Ok(HomologyReport {
        rank: c.rank,
        max_degree: c.pieces.iter().map(|p| p.degree).max(),
        nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_plan() {
        let plan = efw_plan(&p("[1]"), &p("[3]"), 2).unwrap();
        assert_eq!(plan.e, vec![2, 2]);
        assert_eq!(plan.d.degrees(), &[0, 2, 4]);
        assert_eq!(plan.shapes, vec![p("[1]"), p("[3]"), p("[3,2]")]);
        assert!(plan.report.is_valid());
        assert_eq!(plan.report.steps[1].obstruction, Some(0));
        let betti = plan_betti_table(&plan, 2).pairs();
        let expected: Vec<(usize, BigUint)> =
            vec![(0, 2u32.into()), (2, 4u32.into()), (4, 2u32.into())];
        assert_eq!(betti, expected);
    }

    #[test]
    fn koszul_plan() {
        for n in 1..=4 {
            let plan = efw_plan(&Partition::empty(), &p("[1]"), n).unwrap();
            assert_eq!(plan.e, vec![1; n]);
            assert_eq!(plan.d.degrees(), (0..=n).collect::<Vec<_>>());
            for (i, s) in plan.shapes.iter().enumerate() {
                assert_eq!(*s, Partition::column(i));
            }
            assert!(plan.report.is_valid());
            let betti = plan_betti_table(&plan, n);
            for e in &betti.entries {
                assert_eq!(e.dimension, num_integer::binomial(BigUint::from(n), BigUint::from(e.index)));
            }
            let back = plan_from_degree_sequence(&plan.d).unwrap();
            assert_eq!(back.alpha, Partition::empty());
            assert_eq!(back.beta, p("[1]"));
        }
    }

    #[test]
    fn reverse_construction() {
        let d = DegreeSequence::new(vec![3, 5, 7]).unwrap();
        assert_eq!(d.degrees(), &[0, 2, 4]);
        let plan = plan_from_degree_sequence(&d).unwrap();
        assert_eq!((plan.alpha.clone(), plan.beta.clone()), (p("[1]"), p("[3]")));
        assert!(DegreeSequence::new(vec![0, 2, 2]).is_err());
    }

    #[test]
    fn malformed_pairs() {
        assert!(efw_plan(&p("[2]"), &p("[2]"), 2).is_err());
        assert!(efw_plan(&p("[2,1]"), &p("[3,2]"), 2).is_err());
        assert!(efw_plan(&p("[1,1,1]"), &p("[2,1,1]"), 2).is_err());
    }

    #[test]
    fn betti_formats() {
        let plan = efw_plan(&p("[1]"), &p("[3]"), 2).unwrap();
        let t = plan_betti_table(&plan, 2);
        assert_eq!(t.to_csv(), "index,0,2,4\n0,2,0,0\n1,0,4,0\n2,0,0,2\n");
        assert!(t.is_pure());
        assert!(t.to_text().starts_with("i\\d  0  2  4\n"));
        let zero = plan_betti_table(&plan, 0);
        assert!(zero.entries.iter().all(|e| e.dimension.is_zero()));
    }

    #[test]
    fn bases() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(
            wedge_basis(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(wedge_basis(4, 2)[3], vec![0, 3]);
    }

    #[test]
    fn koszul_rank2_degree2() {
        let c = koszul_complex(2, 2).unwrap();
        let piece = c.piece(2).unwrap();
        assert_eq!(piece.dims, vec![3, 4, 1]);
        let ranks: Vec<usize> = piece.differentials.iter().map(QMatrix::rank).collect();
        assert_eq!(ranks, vec![3, 1]);
    }

    #[test]
    fn koszul_exact() {
        for n in 1..=3 {
            let c = koszul_complex(n, 6).unwrap();
            let report = exactness_report(&c).unwrap();
            assert!(report.resolves_residue_field(), "rank {n}: {report}");
            assert_eq!(report.to_string(), "H_i = 0 for i ≥ 1; H_0 = 1·(degree 0)");
            for d in 0..=6 {
                let expected = if d == 0 { 1 } else { 0 };
                assert_eq!(c.euler_characteristic(d), BigInt::from(expected));
            }
        }
    }

    #[test]
    fn corrupted_differential() {
        let mut c = koszul_complex(3, 3).unwrap();
        let shape = {
            let m = &c.piece(3).unwrap().differentials[1];
            (m.rows(), m.cols())
        };
        c.set_differential(3, 2, QMatrix::zeros(shape.0, shape.1)).unwrap();
        let report = exactness_report(&c).unwrap();
        assert!(!report.is_acyclic());
        let mut bad = koszul_complex(2, 2).unwrap();
        let ones = QMatrix::from_i64_rows(&[vec![1], vec![1], vec![1], vec![1]]);
        bad.set_differential(2, 2, ones).unwrap();
        assert!(matches!(exactness_report(&bad), Err(Error::Integrity(_))));
    }

    #[test]
    fn zero_complex() {
        let c = GradedComplex::new(
            1,
            vec![DegreePiece {
                degree: 0,
                dims: vec![0, 0],
                differentials: vec![QMatrix::zeros(0, 0)],
            }],
        )
        .unwrap();
        assert!(exactness_report(&c).unwrap().nonzero.is_empty());
    }
}
