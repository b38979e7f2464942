//! Borel–Weil–Bott as a classifier on integral weights.
//!
//! `bott_classify` walks the dot action down to the dominant chamber one
//! simple reflection at a time. A zero pairing with a simple coroot at any
//! step means `λ + ρ` lies on a wall, and the associated bundle has no
//! cohomology at all. Otherwise the number of steps is the length of the
//! Weyl element and the endpoint is the highest weight of the unique
//! non-vanishing cohomology group.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::rootdata::{RootDatum, Weight};
use crate::util::ser_biguint;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyResult {
    Singular,
    NonSingular {
        degree: usize,
        dominant: Weight,
        #[serde(serialize_with = "ser_biguint")]
        dim: BigUint,
    },
}

impl CohomologyResult {
    pub fn is_singular(&self) -> bool {
        matches!(self, CohomologyResult::Singular)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::Singular => None,
            CohomologyResult::NonSingular { degree, .. } => Some(*degree),
        }
    }

    /// Singular, or non-singular with cohomology only in degree zero.
    pub fn is_singular_or_dominant(&self) -> bool {
        matches!(self.degree(), None | Some(0))
    }
}

pub(crate) enum Descent {
    Singular,
    Regular { weight: Weight, steps: usize },
}

/// Dot-action descent using only the simple reflections in `indices`
/// (0-based). `pivot` picks one index among those with negative pairing.
pub(crate) fn dot_descend(
    datum: &RootDatum,
    lam: &Weight,
    indices: &[usize],
    mut pivot: impl FnMut(&[usize]) -> usize,
) -> Descent {
    let mut mu = lam.clone();
    let mut steps = 0usize;
    let bound = datum.positive_roots().len();
    loop {
        let c = mu.coords();
        if indices.iter().any(|&j| c[j] + 1 == 0) {
            return Descent::Singular;
        }
        let negative: Vec<usize> = indices.iter().copied().filter(|&j| c[j] + 1 < 0).collect();
        if negative.is_empty() {
            return Descent::Regular { weight: mu, steps };
        }
        let j = pivot(&negative);
        assert!(
            negative.contains(&j),
            "pivot rule returned an index without negative pairing"
        );
        mu = datum.dot_reflect(j, &mu);
        steps += 1;
        assert!(
            steps <= bound,
            "dot descent exceeded the number of positive roots"
        );
    }
}

/// Classify `lam` with the lowest-index pivot rule.
pub fn bott_classify(datum: &RootDatum, lam: &Weight) -> Result<CohomologyResult> {
    bott_classify_with(datum, lam, |cands| cands[0])
}

/// Classify `lam`, letting `pivot` choose which negative simple pairing to
/// reflect along. The result does not depend on the rule.
pub fn bott_classify_with(
    datum: &RootDatum,
    lam: &Weight,
    pivot: impl FnMut(&[usize]) -> usize,
) -> Result<CohomologyResult> {
    datum.check_weight(lam)?;
    let all: Vec<usize> = (0..datum.rank()).collect();
    Ok(match dot_descend(datum, lam, &all, pivot) {
        Descent::Singular => CohomologyResult::Singular,
        Descent::Regular { weight, steps } => {
            debug_assert_eq!(steps, negative_root_count(datum, lam));
            let dim = datum.weyl_dim(&weight)?;
            CohomologyResult::NonSingular {
                degree: steps,
                dominant: weight,
                dim,
            }
        }
    })
}

/// Number of positive roots `α` with `⟨λ + ρ, α^∨⟩ < 0`.
pub fn negative_root_count(datum: &RootDatum, lam: &Weight) -> usize {
    let shifted = lam + &Weight::rho(datum.rank());
    datum
        .positive_roots()
        .iter()
        .filter(|alpha| crate::rootdata::pairing(shifted.coords(), alpha) < 0)
        .count()
}

/// Singularity tested directly against every positive coroot.
pub fn is_singular_direct(datum: &RootDatum, lam: &Weight) -> bool {
    let shifted = lam + &Weight::rho(datum.rank());
    datum
        .positive_roots()
        .iter()
        .any(|alpha| crate::rootdata::pairing(shifted.coords(), alpha) == 0)
}

/// `ε`-coordinates of `GL_n` to fundamental coordinates of `A_{n-1}`.
pub fn epsilon_to_fundamental(eps: &[i64]) -> Result<Weight> {
    if eps.len() < 2 {
        return Err(invalid("epsilon weight needs at least two entries"));
    }
    Ok(Weight::new(eps.windows(2).map(|p| p[0] - p[1]).collect()))
}

/// Bott's algorithm for `GL_n` in `ε`-coordinates: add `δ = (n−1, …, 0)`,
/// reject repeated entries, count inversions, sort.
pub fn bott_typea_epsilon(eps: &[i64]) -> Result<CohomologyResult> {
    let n = eps.len();
    if n < 2 {
        return Err(invalid("epsilon weight needs at least two entries"));
    }
    let x: Vec<i64> = eps
        .iter()
        .enumerate()
        .map(|(i, &e)| e + (n - 1 - i) as i64)
        .collect();
    let mut inversions = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if x[i] == x[j] {
                return Ok(CohomologyResult::Singular);
            }
            if x[i] < x[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = x.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    // dim V = ∏_{i<j} (x_i − x_j)/(j − i) on the sorted, strictly decreasing x
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            num *= (sorted[i] - sorted[j]) as u64;
            den *= (j - i) as u64;
        }
    }
    let dominant_eps: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &s)| s - (n - 1 - i) as i64)
        .collect();
    Ok(CohomologyResult::NonSingular {
        degree: inversions,
        dominant: epsilon_to_fundamental(&dominant_eps)?,
        dim: num / den,
    })
}
