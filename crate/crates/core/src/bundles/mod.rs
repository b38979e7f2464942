//! Homogeneous bundles on `G/P` as formal sums of Levi-irreducible pieces.
//!
//! A piece is recorded by its highest weight, which is dominant for the
//! parabolic. `𝒪_{G/P}(λ)` is the bundle whose global sections are `V(λ)`
//! for dominant `λ`, so `𝒪(−λ_1)` on `ℙ^{n−1}` is the tautological line.
//! Extensions are computed piece by piece on `E^∨ ⊗ F` with Borel–Weil–Bott.

pub mod lr;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

pub use lr::{
    dual_glweight, glweight_to_weight, lr_tensor, schur_dim, weight_to_glweight, GLWeight,
};

use crate::bott::{bott_classify, dot_descend, CohomologyResult, Descent};
use crate::error::{invalid, Error, Result};
use crate::rootdata::{Parabolic, RootDatum, RootFamily, Weight};

/// Rank of `𝒪_{G/P}(λ)`: the Weyl dimension of `λ` over the Levi factor.
pub fn levi_rank(datum: &RootDatum, parabolic: &Parabolic, lam: &Weight) -> Result<BigUint> {
    datum.check_weight(lam)?;
    if !datum.is_dominant_for(parabolic, lam) {
        return Err(invalid(format!("{lam} is not dominant for the parabolic")));
    }
    Ok(datum.weyl_dim_over(lam, datum.levi_positive_roots(parabolic)))
}

/// True when the Levi representation of `lam` is one-dimensional.
pub fn is_levi_character(parabolic: &Parabolic, lam: &Weight) -> bool {
    parabolic
        .levi_indices()
        .iter()
        .all(|&j| lam.coords()[j] == 0)
}

/// Highest weight of the dual Levi representation, `−w_0^L(λ)`.
pub fn levi_dual(datum: &RootDatum, parabolic: &Parabolic, lam: &Weight) -> Weight {
    let levi = parabolic.levi_indices();
    let mut x = lam.clone();
    // descend to the lowest weight with ordinary Levi reflections
    while let Some(&j) = levi.iter().find(|&&j| x.coords()[j] > 0) {
        x = datum.reflect(j, &x);
    }
    -x
}

/// Weights of a minuscule Levi representation, or `None` if `lam` is not
/// minuscule for the Levi factor (its orbit is smaller than its dimension).
fn minuscule_weights(
    datum: &RootDatum,
    parabolic: &Parabolic,
    lam: &Weight,
) -> Option<Vec<Weight>> {
    let dim = levi_rank(datum, parabolic, lam).ok()?;
    let levi = parabolic.levi_indices();
    let mut seen: BTreeSet<Weight> = BTreeSet::from([lam.clone()]);
    let mut frontier = vec![lam.clone()];
    while let Some(x) = frontier.pop() {
        for &j in &levi {
            let y = datum.reflect(j, &x);
            if seen.insert(y.clone()) {
                if BigUint::from(seen.len()) > dim {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    (BigUint::from(seen.len()) == dim).then(|| seen.into_iter().collect())
}

/// Brauer–Klimyk over the Levi factor, `μ` minuscule:
/// `V(λ) ⊗ V(μ) = Σ_{ν ∈ W_L μ} ± V(w.(λ + ν))`.
fn klimyk_minuscule(
    datum: &RootDatum,
    parabolic: &Parabolic,
    lam: &Weight,
    mu_weights: &[Weight],
) -> Result<Vec<(Weight, u64)>> {
    let levi = parabolic.levi_indices();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for nu in mu_weights {
        let start = lam + nu;
        if let Descent::Regular { weight, steps } = dot_descend(datum, &start, &levi, |c| c[0]) {
            let sign = if steps % 2 == 0 { 1 } else { -1 };
            *acc.entry(weight).or_insert(0) += sign;
        }
    }
    let mut out = Vec::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m > 0 => out.push((w, m as u64)),
            _ => {
                return Err(Error::UnsupportedDecomposition(format!(
                    "negative Klimyk multiplicity at {w}"
                )))
            }
        }
    }
    Ok(out)
}

/// Grassmannian route: both pieces live on the `GL_r` block of the Levi of
/// `P_{α_r}` in type A.
fn grassmannian_block(datum: &RootDatum, parabolic: &Parabolic) -> Option<usize> {
    if datum.family() != RootFamily::A || parabolic.marked().len() != 1 {
        return None;
    }
    parabolic.marked().iter().next().copied()
}

/// Decompose the tensor product of two Levi-irreducible pieces.
pub fn tensor_pieces(
    datum: &RootDatum,
    parabolic: &Parabolic,
    p: &Weight,
    q: &Weight,
) -> Result<Vec<(Weight, u64)>> {
    if is_levi_character(parabolic, p) || is_levi_character(parabolic, q) {
        return Ok(vec![(p + q, 1)]);
    }
    if let Some(r) = grassmannian_block(datum, parabolic) {
        if let (Some(a), Some(b)) = (weight_to_glweight(p, r), weight_to_glweight(q, r)) {
            let n = datum.rank() + 1;
            return lr_tensor(&a, &b)?
                .into_iter()
                .map(|(nu, c)| Ok((glweight_to_weight(&nu, n)?, c)))
                .collect();
        }
    }
    if let Some(ws) = minuscule_weights(datum, parabolic, q) {
        return klimyk_minuscule(datum, parabolic, p, &ws);
    }
    if let Some(ws) = minuscule_weights(datum, parabolic, p) {
        return klimyk_minuscule(datum, parabolic, q, &ws);
    }
    Err(Error::UnsupportedDecomposition(format!(
        "{p} ⊗ {q} on {} needs a general Levi plethysm",
        datum.name()
    )))
}

/// A `G`-equivariant bundle on `G/P`: `scalar_mult` copies of a direct sum of
/// Levi-irreducible pieces. The scalar factor records a trivial vector-space
/// tensor factor such as `V^*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantBundle {
    datum: RootDatum,
    parabolic: Parabolic,
    pieces: BTreeMap<Weight, u64>,
    scalar_mult: BigUint,
}

impl EquivariantBundle {
    pub fn new(
        datum: &RootDatum,
        parabolic: &Parabolic,
        pieces: impl IntoIterator<Item = (Weight, u64)>,
        scalar_mult: BigUint,
    ) -> Result<Self> {
        if parabolic.rank() != datum.rank() {
            return Err(Error::DimensionMismatch {
                expected: datum.rank(),
                got: parabolic.rank(),
            });
        }
        if scalar_mult.is_zero() {
            return Err(invalid("scalar multiplicity must be positive"));
        }
        let mut map = BTreeMap::new();
        for (w, m) in pieces {
            datum.check_weight(&w)?;
            if !datum.is_dominant_for(parabolic, &w) {
                return Err(invalid(format!(
                    "piece {w} is not dominant for the parabolic"
                )));
            }
            if m == 0 {
                continue;
            }
            *map.entry(w).or_insert(0) += m;
        }
        if map.is_empty() {
            return Err(invalid("bundle has no pieces"));
        }
        Ok(EquivariantBundle {
            datum: datum.clone(),
            parabolic: parabolic.clone(),
            pieces: map,
            scalar_mult,
        })
    }

    /// The irreducible bundle `𝒪_{G/P}(λ)`.
    pub fn irreducible(datum: &RootDatum, parabolic: &Parabolic, lam: Weight) -> Result<Self> {
        Self::new(datum, parabolic, [(lam, 1)], BigUint::one())
    }

    pub fn with_scalar(mut self, scalar_mult: BigUint) -> Result<Self> {
        if scalar_mult.is_zero() {
            return Err(invalid("scalar multiplicity must be positive"));
        }
        self.scalar_mult = scalar_mult;
        Ok(self)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn pieces(&self) -> &BTreeMap<Weight, u64> {
        &self.pieces
    }

    pub fn scalar_mult(&self) -> &BigUint {
        &self.scalar_mult
    }

    pub fn rank(&self) -> BigUint {
        let levi: BigUint = self
            .pieces
            .iter()
            .map(|(w, &m)| {
                levi_rank(&self.datum, &self.parabolic, w).expect("pieces are dominant") * m
            })
            .sum();
        levi * &self.scalar_mult
    }

    pub fn dual(&self) -> EquivariantBundle {
        EquivariantBundle {
            datum: self.datum.clone(),
            parabolic: self.parabolic.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|(w, &m)| (levi_dual(&self.datum, &self.parabolic, w), m))
                .collect(),
            scalar_mult: self.scalar_mult.clone(),
        }
    }

    fn check_compatible(&self, other: &EquivariantBundle) -> Result<()> {
        if self.datum != other.datum || self.parabolic != other.parabolic {
            return Err(invalid("bundles live on different flag varieties"));
        }
        Ok(())
    }
}

impl fmt::Display for EquivariantBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, &m) in &self.pieces {
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "𝒪({w})")?;
        }
        if !self.scalar_mult.is_one() {
            write!(f, " ×{}", self.scalar_mult)?;
        }
        Ok(())
    }
}

pub fn tensor(e: &EquivariantBundle, f: &EquivariantBundle) -> Result<EquivariantBundle> {
    e.check_compatible(f)?;
    let mut pieces: BTreeMap<Weight, u64> = BTreeMap::new();
    for (p, &mp) in &e.pieces {
        for (q, &mq) in &f.pieces {
            for (w, c) in tensor_pieces(&e.datum, &e.parabolic, p, q)? {
                *pieces.entry(w).or_insert(0) += c * mp * mq;
            }
        }
    }
    EquivariantBundle::new(
        &e.datum,
        &e.parabolic,
        pieces,
        &e.scalar_mult * &f.scalar_mult,
    )
}

/// Dimensions of `Ext^i`, indexed by degree. Only non-zero degrees are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedDims(BTreeMap<usize, BigUint>);

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    pub fn add(&mut self, degree: usize, dim: BigUint) {
        if dim.is_zero() {
            return;
        }
        *self.0.entry(degree).or_insert_with(BigUint::zero) += dim;
    }

    pub fn get(&self, degree: usize) -> BigUint {
        self.0.get(&degree).cloned().unwrap_or_default()
    }

    pub fn hom(&self) -> BigUint {
        self.get(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Lowest positive degree with a non-zero group.
    pub fn first_higher(&self) -> Option<(usize, &BigUint)> {
        self.0.iter().find(|(&d, _)| d > 0).map(|(&d, v)| (d, v))
    }

    pub fn top(&self) -> Option<(usize, &BigUint)> {
        self.0.iter().next_back().map(|(&d, v)| (d, v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.0.iter().map(|(&d, v)| (d, v))
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.0
            .iter()
            .map(|(&d, v)| {
                let v = BigInt::from(v.clone());
                if d % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
}

impl Serialize for GradedDims {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (d, v) in &self.0 {
            map.serialize_key(&d.to_string())?;
            match num_traits::ToPrimitive::to_u64(v) {
                Some(x) => map.serialize_value(&x)?,
                None => map.serialize_value(&v.to_string())?,
            }
        }
        map.end()
    }
}

/// One Levi-irreducible piece of `E^∨ ⊗ F` and its cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceCohomology {
    pub weight: Weight,
    pub multiplicity: u64,
    pub result: CohomologyResult,
}

pub fn ext_dims(e: &EquivariantBundle, f: &EquivariantBundle) -> Result<GradedDims> {
    Ok(ext_dims_traced(e, f)?.0)
}

/// `Ext^•(E, F) = H^•(E^∨ ⊗ F)` together with every weight encountered.
pub fn ext_dims_traced(
    e: &EquivariantBundle,
    f: &EquivariantBundle,
) -> Result<(GradedDims, Vec<PieceCohomology>)> {
    e.check_compatible(f)?;
    let datum = &e.datum;
    let parabolic = &e.parabolic;
    let scalar = &e.scalar_mult * &f.scalar_mult;
    let mut dims = GradedDims::new();
    let mut trace = Vec::new();
    for (p, &mp) in &e.pieces {
        let p_dual = levi_dual(datum, parabolic, p);
        for (q, &mq) in &f.pieces {
            for (w, c) in tensor_pieces(datum, parabolic, &p_dual, q)? {
                let result = bott_classify(datum, &w)?;
                let multiplicity = c * mp * mq;
                if let CohomologyResult::NonSingular { degree, dim, .. } = &result {
                    dims.add(*degree, dim * multiplicity * &scalar);
                }
                trace.push(PieceCohomology {
                    weight: w,
                    multiplicity,
                    result,
                });
            }
        }
    }
    Ok((dims, trace))
}
