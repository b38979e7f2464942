//! The three tilting collections in split form, and their verification.
//!
//! Over a separable closure each twisted variety becomes a flag variety
//! `G/P` and the tilting bundle splits into homogeneous pieces; every
//! statement checked here is a statement about those pieces:
//!
//! * Severi–Brauer `SB(A)`, `deg A = n`: `ℙ^{n−1} = SL_n/P_{α_1}`, summands
//!   `ℐ^{⊗i} = 𝒪(−iλ_1) ⊗ (V^*)^{⊗i}` for `0 ≤ i < n`.
//! * Generalized Severi–Brauer `SB(r, A)`: `Gr(r, n) = SL_n/P_{α_r}`,
//!   summands `Σ^a(U) ⊗ (V^*)^{⊗d(a)}` for `a` in the `r × (n−r)` box.
//! * Involution variety `I(A, σ)`, `deg A = 2n`: the quadric
//!   `Spin_{2n}/P_{α_1}`, summands `𝒪(−jλ_1)` for `0 ≤ j ≤ 2n−3` (odd `j`
//!   carrying the `V^*` factor of `ℐ`) and the two half-spin pieces of
//!   `𝒥 ⊗ 𝒪(−2λ_1)^{⊗(n−1)}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bott::bott_classify;
use crate::bundles::{
    dual_glweight, ext_dims_traced, glweight_to_weight, EquivariantBundle, GLWeight, GradedDims,
    PieceCohomology,
};
use crate::csa::CsaLabel;
use crate::endo::TriangularDirection;
use crate::error::{invalid, Error, Result};
use crate::rootdata::{Parabolic, RootDatum, Weight};
use crate::util::ser_biguint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CollectionFamily {
    #[serde(rename = "sb")]
    SeveriBrauer { n: usize },
    #[serde(rename = "gsb")]
    GeneralizedSeveriBrauer { n: usize, r: usize },
    #[serde(rename = "inv")]
    Involution { n: usize },
}

impl CollectionFamily {
    /// Number of summands, which is also the rank of `K_0` of the split variety.
    pub fn expected_size(&self) -> usize {
        match *self {
            CollectionFamily::SeveriBrauer { n } => n,
            CollectionFamily::GeneralizedSeveriBrauer { n, r } => {
                let c = crate::util::binomial(n as u64, r as u64);
                num_traits::ToPrimitive::to_usize(&c).expect("small binomial")
            }
            CollectionFamily::Involution { n } => 2 * n,
        }
    }
}

impl fmt::Display for CollectionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CollectionFamily::SeveriBrauer { n } => write!(f, "SB(A), deg A = {n}"),
            CollectionFamily::GeneralizedSeveriBrauer { n, r } => {
                write!(f, "SB({r}, A), deg A = {n}")
            }
            CollectionFamily::Involution { n } => write!(f, "I(A, σ), deg A = {}", 2 * n),
        }
    }
}

/// What a summand is, beyond its weights. The involution audit sorts pairs
/// into vanishing families with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SummandKind {
    /// `𝒪(−jλ_1)`, possibly with a trivial vector-space factor.
    Line { twist: i64 },
    /// `Σ^a(U)` on a Grassmannian.
    Schur { diagram: GLWeight },
    /// Half-spin piece of `𝒥`: `1` for the `λ_{n−1}` piece, `2` for `λ_n`.
    HalfSpin { index: u8 },
    /// Anything added by hand (negative controls).
    Extra,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub label: String,
    pub bundle: EquivariantBundle,
    pub tits: CsaLabel,
    pub order_index: usize,
    /// Summands sharing a Tits algebra form one diagonal block of `End(𝒯)`.
    pub block: usize,
    pub kind: SummandKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltingCollection {
    pub family: CollectionFamily,
    pub datum: RootDatum,
    pub parabolic: Parabolic,
    pub summands: Vec<Summand>,
}

impl TiltingCollection {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.summands.iter().map(|s| s.block + 1).max().unwrap_or(0)
    }

    /// Append a summand as its own diagonal block. Used to build negative
    /// controls.
    pub fn push_extra(&mut self, label: &str, bundle: EquivariantBundle, tits: CsaLabel) {
        let block = self.block_count();
        let order_index = self.summands.len();
        self.summands.push(Summand {
            label: label.to_string(),
            bundle,
            tits,
            order_index,
            block,
            kind: SummandKind::Extra,
        });
    }
}

fn line_weight(rank: usize, twist: i64) -> Weight {
    let mut c = vec![0i64; rank];
    if rank > 0 {
        c[0] = -twist;
    }
    Weight::new(c)
}

/// `𝒯 = 𝒪 ⊕ ℐ ⊕ ℐ^{⊗2} ⊕ … ⊕ ℐ^{⊗(n−1)}` on `SB(A)`, `deg A = n`.
pub fn build_sb(n: usize) -> Result<TiltingCollection> {
    if n == 0 {
        return Err(invalid("Severi–Brauer collection needs n ≥ 1"));
    }
    let rank = n - 1;
    let datum = RootDatum::type_a(rank)?;
    let parabolic = if rank == 0 {
        Parabolic::group(0)
    } else {
        Parabolic::new(rank, [1])?
    };
    let nn = BigUint::from(n);
    let summands = (0..n)
        .map(|i| {
            let bundle =
                EquivariantBundle::irreducible(&datum, &parabolic, line_weight(rank, i as i64))?
                    .with_scalar(Pow::pow(&nn, i as u32))?;
            let label = match i {
                0 => "𝒪".to_string(),
                1 => "ℐ".to_string(),
                i => format!("ℐ^⊗{i}"),
            };
            Ok(Summand {
                label,
                bundle,
                tits: CsaLabel::tensor_power(n as u64, i as u32),
                order_index: i,
                block: i,
                kind: SummandKind::Line { twist: i as i64 },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TiltingCollection {
        family: CollectionFamily::SeveriBrauer { n },
        datum,
        parabolic,
        summands,
    })
}

/// Young diagrams with at most `rows` rows and at most `cols` columns, as
/// weakly decreasing vectors of length `rows`.
pub fn box_diagrams(rows: usize, cols: u64) -> Vec<Vec<i64>> {
    fn go(rows: usize, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=cap {
            prefix.push(v);
            go(rows, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols as i64, &mut Vec::new(), &mut out);
    out
}

/// `𝒯 = ⊕_a Σ^a(ℐ)` on `SB(r, A)`, `deg A = n`, with `a` running over the
/// `r × (n−r)` box. Summands are ordered by `d(a)`, ties lexicographically
/// descending.
pub fn build_gsb(n: usize, r: usize) -> Result<TiltingCollection> {
    if r == 0 || r >= n {
        return Err(invalid(format!(
            "generalized Severi–Brauer needs 0 < r < n, got n={n}, r={r}"
        )));
    }
    let datum = RootDatum::type_a(n - 1)?;
    let parabolic = Parabolic::new(n - 1, [r])?;
    let mut diagrams = box_diagrams(r, (n - r) as u64);
    diagrams.sort_by(|a, b| {
        let da: i64 = a.iter().sum();
        let db: i64 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let nn = BigUint::from(n);
    let summands = diagrams
        .into_iter()
        .enumerate()
        .map(|(idx, parts)| {
            let a = GLWeight::new(parts)?;
            let d = a.size() as u32;
            let w = glweight_to_weight(&dual_glweight(&a), n)?;
            let bundle = EquivariantBundle::irreducible(&datum, &parabolic, w)?
                .with_scalar(Pow::pow(&nn, d))?;
            Ok(Summand {
                label: format!("Σ^{a}(ℐ)"),
                bundle,
                tits: CsaLabel::tensor_power(n as u64, d),
                order_index: idx,
                block: idx,
                kind: SummandKind::Schur { diagram: a },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TiltingCollection {
        family: CollectionFamily::GeneralizedSeveriBrauer { n, r },
        datum,
        parabolic,
        summands,
    })
}

/// Highest weights of the two half-spin summands of
/// `𝒥 ⊗ 𝒪(−2λ_1)^{⊗(n−1)}`: `−(2n−2)λ_1 + λ_{n−1}` and `−(2n−2)λ_1 + λ_n`.
/// Each is a rank `2^{n−2}` bundle (a half-spin representation of the
/// `D_{n−1}` Levi factor twisted by a character).
pub fn spin_summand_weights(n: usize) -> Result<[Weight; 2]> {
    if n < 3 {
        return Err(Error::UnsupportedRank(format!(
            "rank D_n requires n ≥ 3 (got {n})"
        )));
    }
    let make = |k: usize| {
        let mut c = vec![0i64; n];
        c[0] = -(2 * n as i64 - 2);
        c[k - 1] = 1;
        Weight::new(c)
    };
    Ok([make(n - 1), make(n)])
}

/// The involution-variety collection for `deg A = 2n`, `n ≥ 3`.
pub fn build_inv(n: usize) -> Result<TiltingCollection> {
    if n < 3 {
        return Err(Error::UnsupportedRank(format!(
            "rank D_n requires n ≥ 3 (got {n})"
        )));
    }
    let datum = RootDatum::type_d(n)?;
    let parabolic = Parabolic::new(n, [1])?;
    let degree = 2 * n as u64;
    let mut summands = Vec::with_capacity(2 * n);
    for i in 0..=(n - 2) {
        for (twist, with_i) in [(2 * i as i64, false), (2 * i as i64 + 1, true)] {
            let mut bundle =
                EquivariantBundle::irreducible(&datum, &parabolic, line_weight(n, twist))?;
            let (label, tits) = if with_i {
                bundle = bundle.with_scalar(BigUint::from(degree))?;
                let label = match i {
                    0 => "ℐ".to_string(),
                    1 => "ℐ⊗𝒪(−2λ₁)".to_string(),
                    i => format!("ℐ⊗𝒪(−2λ₁)^⊗{i}"),
                };
                (label, CsaLabel::tensor_power(degree, 1))
            } else {
                let label = match i {
                    0 => "𝒪".to_string(),
                    1 => "𝒪(−2λ₁)".to_string(),
                    i => format!("𝒪(−2λ₁)^⊗{i}"),
                };
                (label, CsaLabel::base_field(degree))
            };
            let idx = summands.len();
            summands.push(Summand {
                label,
                bundle,
                tits,
                order_index: idx,
                block: idx,
                kind: SummandKind::Line { twist },
            });
        }
    }
    let clifford = CsaLabel::even_clifford(degree)?;
    let spin_scalar = BigUint::one() << (n - 1);
    let block = summands.len();
    for (k, w) in spin_summand_weights(n)?.into_iter().enumerate() {
        let bundle = EquivariantBundle::irreducible(&datum, &parabolic, w)?
            .with_scalar(spin_scalar.clone())?;
        let idx = summands.len();
        let sign = if k == 0 { "₊" } else { "₋" };
        summands.push(Summand {
            label: format!("𝒥{sign}⊗𝒪(−2λ₁)^⊗{}", n - 1),
            bundle,
            tits: clifford,
            order_index: idx,
            block,
            kind: SummandKind::HalfSpin { index: k as u8 + 1 },
        });
    }
    Ok(TiltingCollection {
        family: CollectionFamily::Involution { n },
        datum,
        parabolic,
        summands,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    HigherExt {
        source: usize,
        target: usize,
        degree: usize,
        #[serde(serialize_with = "ser_biguint")]
        dim: BigUint,
    },
    NotTriangular {
        source: usize,
        target: usize,
        #[serde(serialize_with = "ser_biguint")]
        dim: BigUint,
    },
    DiagonalMismatch {
        block: usize,
        #[serde(serialize_with = "ser_biguint")]
        expected: BigUint,
        #[serde(serialize_with = "ser_biguint")]
        found: BigUint,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::HigherExt {
                source,
                target,
                degree,
                dim,
            } => write!(f, "Ext^{degree}(T{source}, T{target}) has dimension {dim}"),
            Failure::NotTriangular {
                source,
                target,
                dim,
            } => write!(
                f,
                "Hom(T{source}, T{target}) = {dim} breaks one-sided triangularity"
            ),
            Failure::DiagonalMismatch {
                block,
                expected,
                found,
            } => write!(
                f,
                "diagonal block {block} has Hom dimension {found}, Tits algebra has {expected}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Tilting,
    Failure { witness: Failure },
}

impl Verdict {
    pub fn is_tilting(&self) -> bool {
        matches!(self, Verdict::Tilting)
    }
}

/// How the BWB weights met during verification classified.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WeightAudit {
    pub total: usize,
    pub singular: usize,
    pub dominant: usize,
    /// Non-singular weights with cohomology in positive degree.
    pub other: usize,
}

impl WeightAudit {
    fn record(&mut self, pc: &PieceCohomology) {
        self.total += 1;
        match pc.result.degree() {
            None => self.singular += 1,
            Some(0) => self.dominant += 1,
            Some(_) => self.other += 1,
        }
    }

    pub fn all_singular_or_dominant(&self) -> bool {
        self.other == 0
    }
}

/// The seven groups of vanishing statements for the involution variety,
/// sorted by which kinds of summands meet in `Ext(source, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingFamily {
    /// `H^i(𝒪(±jλ_1))`
    LineLine,
    /// `H^i(𝒥_1^* ⊗ 𝒪(jλ_1))`
    Spin1DualLine,
    /// `H^i(𝒥_1 ⊗ 𝒪(−jλ_1))`
    LineSpin1,
    /// `H^i(𝒥_2^* ⊗ 𝒪(jλ_1))`
    Spin2DualLine,
    /// `H^i(𝒥_2 ⊗ 𝒪(−jλ_1))`
    LineSpin2,
    /// `H^i(𝒥_1 ⊗ 𝒥_2^*)`
    Spin2ToSpin1,
    /// `H^i(𝒥_2 ⊗ 𝒥_1^*)`
    Spin1ToSpin2,
}

impl VanishingFamily {
    pub const ALL: [VanishingFamily; 7] = [
        VanishingFamily::LineLine,
        VanishingFamily::Spin1DualLine,
        VanishingFamily::LineSpin1,
        VanishingFamily::Spin2DualLine,
        VanishingFamily::LineSpin2,
        VanishingFamily::Spin2ToSpin1,
        VanishingFamily::Spin1ToSpin2,
    ];

    fn of(source: &SummandKind, target: &SummandKind) -> Option<Self> {
        use SummandKind::*;
        Some(match (source, target) {
            (Line { .. }, Line { .. }) => VanishingFamily::LineLine,
            (HalfSpin { index: 1 }, Line { .. }) => VanishingFamily::Spin1DualLine,
            (Line { .. }, HalfSpin { index: 1 }) => VanishingFamily::LineSpin1,
            (HalfSpin { index: 2 }, Line { .. }) => VanishingFamily::Spin2DualLine,
            (Line { .. }, HalfSpin { index: 2 }) => VanishingFamily::LineSpin2,
            (HalfSpin { index: 2 }, HalfSpin { index: 1 }) => VanishingFamily::Spin2ToSpin1,
            (HalfSpin { index: 1 }, HalfSpin { index: 2 }) => VanishingFamily::Spin1ToSpin2,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: VanishingFamily,
    pub pairs: usize,
    pub holds: bool,
}

/// Extra bookkeeping for the involution variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionAudit {
    pub families: Vec<FamilyCheck>,
    /// The four named weight families `±jλ_1`, `±(−λ_n + jλ_1)`,
    /// `±(−λ_{n−1} + jλ_1)`, `±(λ_{n−1} − λ_n)` for `−(2n−2) < j ≤ 0`,
    /// classified directly.
    pub named_weights_checked: usize,
    pub named_weights_singular_or_dominant: bool,
    pub spin_ranks: Vec<u64>,
}

impl InvolutionAudit {
    pub fn all_families_hold(&self) -> bool {
        self.families.iter().all(|f| f.holds && f.pairs > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtReport {
    /// `pairwise[i][j] = Ext^•(T_i, T_j)` with full multiplicities.
    pub pairwise: Vec<Vec<GradedDims>>,
    pub verdict: Verdict,
    pub failures: Vec<Failure>,
    pub triangular_direction: Option<TriangularDirection>,
    pub weights: WeightAudit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionAudit>,
}

impl ExtReport {
    pub fn hom_matrix(&self) -> Vec<Vec<BigUint>> {
        self.pairwise
            .iter()
            .map(|row| row.iter().map(GradedDims::hom).collect())
            .collect()
    }
}

pub fn verify(c: &TiltingCollection) -> Result<ExtReport> {
    verify_with_jobs(c, None)
}

/// Verify with an explicit worker count. `None` uses the global pool. The
/// report does not depend on the worker count.
pub fn verify_with_jobs(c: &TiltingCollection, jobs: Option<usize>) -> Result<ExtReport> {
    let n = c.summands.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let compute = || -> Result<Vec<(GradedDims, Vec<PieceCohomology>)>> {
        pairs
            .par_iter()
            .map(|&(i, j)| ext_dims_traced(&c.summands[i].bundle, &c.summands[j].bundle))
            .collect()
    };
    let results = match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| invalid(format!("cannot start worker pool: {e}")))?
            .install(compute)?,
        None => compute()?,
    };

    let mut pairwise: Vec<Vec<GradedDims>> = vec![Vec::with_capacity(n); n];
    let mut weights = WeightAudit::default();
    let mut family_stats: BTreeMap<VanishingFamily, (usize, bool)> = BTreeMap::new();
    let mut failures = Vec::new();
    for (&(i, j), (dims, trace)) in pairs.iter().zip(results) {
        trace.iter().for_each(|pc| weights.record(pc));
        let higher = dims.first_higher();
        if let Some((degree, dim)) = higher {
            failures.push(Failure::HigherExt {
                source: i,
                target: j,
                degree,
                dim: dim.clone(),
            });
        }
        if let Some(fam) = VanishingFamily::of(&c.summands[i].kind, &c.summands[j].kind) {
            let e = family_stats.entry(fam).or_insert((0, true));
            e.0 += 1;
            e.1 &= higher.is_none();
        }
        pairwise[i].push(dims);
    }

    let hom: Vec<Vec<BigUint>> = pairwise
        .iter()
        .map(|row| row.iter().map(GradedDims::hom).collect())
        .collect();
    let lower_witness = first_nonzero(&hom, |i, j| i < j);
    let upper_witness = first_nonzero(&hom, |i, j| i > j);
    let triangular_direction = match (lower_witness, upper_witness) {
        (None, _) => Some(TriangularDirection::Lower),
        (Some(_), None) => Some(TriangularDirection::Upper),
        (Some((i, j)), Some(_)) => {
            failures.push(Failure::NotTriangular {
                source: i,
                target: j,
                dim: hom[i][j].clone(),
            });
            None
        }
    };

    for block in 0..c.block_count() {
        let members: Vec<usize> = c
            .summands
            .iter()
            .filter(|s| s.block == block)
            .map(|s| s.order_index)
            .collect();
        let Some(&first) = members.first() else {
            continue;
        };
        let expected = c.summands[first].tits.f_dimension();
        let found: BigUint = members
            .iter()
            .flat_map(|&i| members.iter().map(move |&j| (i, j)))
            .map(|(i, j)| &hom[i][j])
            .sum();
        if found != expected {
            failures.push(Failure::DiagonalMismatch {
                block,
                expected,
                found,
            });
        }
    }

    let involution = match c.family {
        CollectionFamily::Involution { n: rank } => Some(involution_audit(c, rank, &family_stats)?),
        _ => None,
    };

    let verdict = match failures.first() {
        None => Verdict::Tilting,
        Some(f) => Verdict::Failure { witness: f.clone() },
    };
    Ok(ExtReport {
        pairwise,
        verdict,
        failures,
        triangular_direction,
        weights,
        involution,
    })
}

fn first_nonzero(
    m: &[Vec<BigUint>],
    keep: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if keep(i, j) && !v.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// The raw weights named in the vanishing argument for the quadric.
pub fn named_involution_weights(n: usize) -> Result<Vec<Weight>> {
    let l1 = Weight::fundamental(n, 1)?;
    let lp = Weight::fundamental(n, n - 1)?;
    let lm = Weight::fundamental(n, n)?;
    let mut out = Vec::new();
    for j in -(2 * n as i64 - 3)..=0 {
        let base = j * &l1;
        for w in [base.clone(), &base - &lm, &base - &lp] {
            out.push(-&w);
            out.push(w);
        }
    }
    let d = &lp - &lm;
    out.push(-&d);
    out.push(d);
    Ok(out)
}

fn involution_audit(
    c: &TiltingCollection,
    n: usize,
    stats: &BTreeMap<VanishingFamily, (usize, bool)>,
) -> Result<InvolutionAudit> {
    let families = VanishingFamily::ALL
        .iter()
        .map(|&family| {
            let (pairs, holds) = stats.get(&family).copied().unwrap_or((0, true));
            FamilyCheck {
                family,
                pairs,
                holds,
            }
        })
        .collect();
    let named = named_involution_weights(n)?;
    let mut ok = true;
    for w in &named {
        ok &= bott_classify(&c.datum, w)?.is_singular_or_dominant();
    }
    let spin_ranks = c
        .summands
        .iter()
        .filter(|s| matches!(s.kind, SummandKind::HalfSpin { .. }))
        .map(|s| {
            let levi = s.bundle.rank() / s.bundle.scalar_mult();
            num_traits::ToPrimitive::to_u64(&levi).expect("spin rank fits u64")
        })
        .collect();
    Ok(InvolutionAudit {
        families,
        named_weights_checked: named.len(),
        named_weights_singular_or_dominant: ok,
        spin_ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tits_dims(c: &TiltingCollection) -> Vec<BigUint> {
        c.summands.iter().map(|s| s.tits.f_dimension()).collect()
    }

    #[test]
    fn sb_shapes() {
        let c = build_sb(1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.summands[0].tits, CsaLabel::base_field(1));
        let c = build_sb(2).unwrap();
        assert_eq!(
            tits_dims(&c),
            vec![BigUint::from(1u32), BigUint::from(4u32)]
        );
        assert_eq!(c.summands[1].bundle.scalar_mult(), &BigUint::from(2u32));
        let c = build_sb(4).unwrap();
        let expect: Vec<BigUint> = [1u32, 16, 256, 4096]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(tits_dims(&c), expect);
        assert!(build_sb(0).is_err());
    }

    #[test]
    fn gsb_shapes() {
        let sb = build_sb(2).unwrap();
        let gsb = build_gsb(2, 1).unwrap();
        assert_eq!(sb.summands.len(), gsb.summands.len());
        for (a, b) in sb.summands.iter().zip(&gsb.summands) {
            assert_eq!(a.bundle, b.bundle);
            assert_eq!(a.tits, b.tits);
        }
        let c = build_gsb(4, 2).unwrap();
        let diagrams: Vec<Vec<i64>> = c
            .summands
            .iter()
            .map(|s| match &s.kind {
                SummandKind::Schur { diagram } => diagram.parts().to_vec(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            diagrams,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![2, 0],
                vec![1, 1],
                vec![2, 1],
                vec![2, 2]
            ]
        );
        assert_eq!(build_gsb(5, 2).unwrap().len(), 10);
        assert!(build_gsb(4, 0).is_err());
        assert!(build_gsb(4, 4).is_err());
    }

    #[test]
    fn gsb_transpose_symmetry() {
        for n in 2..=7 {
            for r in 1..n {
                assert_eq!(
                    build_gsb(n, r).unwrap().len(),
                    build_gsb(n, n - r).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn inv_shapes() {
        let c = build_inv(3).unwrap();
        let weights: Vec<Vec<i64>> = c
            .summands
            .iter()
            .map(|s| s.bundle.pieces().keys().next().unwrap().coords().to_vec())
            .collect();
        assert_eq!(
            weights,
            vec![
                vec![0, 0, 0],
                vec![-1, 0, 0],
                vec![-2, 0, 0],
                vec![-3, 0, 0],
                vec![-4, 1, 0],
                vec![-4, 0, 1],
            ]
        );
        assert_eq!(build_inv(4).unwrap().len(), 8);
        let c4 = build_inv(4).unwrap();
        for s in &c4.summands[6..] {
            assert_eq!(
                s.bundle.rank() / s.bundle.scalar_mult(),
                BigUint::from(4u32)
            );
        }
        assert!(matches!(build_inv(2), Err(Error::UnsupportedRank(_))));
    }

    #[test]
    fn sb_verifies() {
        for n in 1..=5 {
            let r = verify(&build_sb(n).unwrap()).unwrap();
            assert!(r.verdict.is_tilting(), "n={n}: {:?}", r.failures);
            assert_eq!(r.triangular_direction, Some(TriangularDirection::Lower));
        }
    }

    #[test]
    fn inv3_verifies() {
        let r = verify(&build_inv(3).unwrap()).unwrap();
        assert!(r.verdict.is_tilting(), "{:?}", r.failures);
        assert!(r.weights.all_singular_or_dominant());
        let audit = r.involution.unwrap();
        assert!(audit.all_families_hold());
        assert!(audit.named_weights_singular_or_dominant);
        assert_eq!(audit.spin_ranks, vec![2, 2]);
    }

    #[test]
    fn corrupted_sb_fails() {
        for n in [3usize, 4] {
            let mut c = build_sb(n).unwrap();
            let bundle = EquivariantBundle::irreducible(
                &c.datum,
                &c.parabolic,
                line_weight(n - 1, n as i64),
            )
            .unwrap();
            c.push_extra("𝒪(−nλ₁)", bundle, CsaLabel::base_field(n as u64));
            let r = verify(&c).unwrap();
            match r.verdict {
                Verdict::Failure {
                    witness:
                        Failure::HigherExt {
                            source,
                            target,
                            degree,
                            ..
                        },
                } => {
                    assert_eq!((source, target, degree), (0, n, n - 1));
                }
                other => panic!("expected a higher-Ext failure, got {other:?}"),
            }
        }
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let c = build_gsb(5, 2).unwrap();
        assert_eq!(
            verify_with_jobs(&c, Some(1)).unwrap(),
            verify_with_jobs(&c, Some(4)).unwrap()
        );
    }
}
