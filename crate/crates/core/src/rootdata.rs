//! Root systems of types A and D in the basis of fundamental weights.
//!
//! Simple roots are numbered following Bourbaki. In type D the fork sits at
//! the end of the diagram, so `λ_{r-1}` and `λ_r` are the two half-spin
//! weights. Public indices of simple roots are 1-based, matching the usual
//! mathematical notation; coordinate vectors are plain 0-based slices.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootFamily {
    A,
    D,
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootFamily::A => write!(f, "A"),
            RootFamily::D => write!(f, "D"),
        }
    }
}

/// An integral weight, stored as its coefficients on the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The weight with every fundamental coordinate equal to one.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    /// The fundamental weight `λ_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(invalid(format!(
                "fundamental weight index {i} outside 1..={rank}"
            )));
        }
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Ok(Weight(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True when every fundamental coordinate is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}λ{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}λ{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// A parabolic subgroup `P_I ⊇ B`, given by its set `I` of marked simple roots.
///
/// `I = ∅` is the whole group and `I = S` is the Borel. The Levi factor of
/// `P_I` has simple roots `S \ I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Parabolic {
    rank: usize,
    marked: BTreeSet<usize>,
}

impl Parabolic {
    pub fn new(rank: usize, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if let Some(&bad) = marked.iter().find(|&&i| i == 0 || i > rank) {
            return Err(invalid(format!("parabolic index {bad} outside 1..={rank}")));
        }
        Ok(Parabolic { rank, marked })
    }

    pub fn group(rank: usize) -> Self {
        Parabolic {
            rank,
            marked: BTreeSet::new(),
        }
    }

    pub fn borel(rank: usize) -> Self {
        Parabolic {
            rank,
            marked: (1..=rank).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Marked indices, 1-based.
    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn is_marked(&self, i: usize) -> bool {
        self.marked.contains(&i)
    }

    /// 0-based indices of the Levi simple roots `S \ I`.
    pub fn levi_indices(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&j| !self.marked.contains(&(j + 1)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootDatum {
    family: RootFamily,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Type `A_0` is accepted as the trivial group, so that a point is the
    /// flag variety of a degree-one algebra.
    pub fn new(family: RootFamily, rank: usize) -> Result<Self> {
        match family {
            RootFamily::D if rank < 3 => {
                return Err(Error::UnsupportedRank(format!(
                    "rank D_n requires n ≥ 3 (got {rank})"
                )))
            }
            _ => {}
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |a: usize, b: usize| {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        };
        match family {
            RootFamily::A => {
                for i in 1..rank {
                    link(i - 1, i);
                }
            }
            RootFamily::D => {
                for i in 1..rank - 1 {
                    link(i - 1, i);
                }
                link(rank - 3, rank - 1);
            }
        }
        let positive_roots = generate_positive_roots(&cartan);
        Ok(RootDatum {
            family,
            rank,
            cartan,
            positive_roots,
        })
    }

    pub fn type_a(rank: usize) -> Result<Self> {
        Self::new(RootFamily::A, rank)
    }

    pub fn type_d(rank: usize) -> Result<Self> {
        Self::new(RootFamily::D, rank)
    }

    pub fn family(&self) -> RootFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// The simple root `α_i` (1-based) expressed in fundamental coordinates,
    /// i.e. column `i` of the Cartan matrix.
    pub fn simple_root_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight(
            (0..self.rank).map(|j| self.cartan[j][i - 1]).collect(),
        ))
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(invalid(format!(
                "simple root index {i} outside 1..={}",
                self.rank
            )));
        }
        Ok(())
    }

    /// `⟨w, α^∨⟩` for a root `α` given in simple-root coordinates.
    pub fn coroot_pairing(&self, w: &Weight, alpha: &[i64]) -> Result<i64> {
        self.check_weight(w)?;
        if alpha.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: alpha.len(),
            });
        }
        Ok(pairing(w.coords(), alpha))
    }

    /// The dot action `s_i.w = s_i(w + ρ) − ρ` of a simple reflection.
    pub fn simple_dot_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(w)?;
        Ok(self.dot_reflect(i - 1, w))
    }

    pub(crate) fn dot_reflect(&self, j: usize, w: &Weight) -> Weight {
        let shift = w.0[j] + 1;
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(k, &c)| c - shift * self.cartan[k][j])
                .collect(),
        )
    }

    /// Ordinary (linear) action of the simple reflection `s_{j+1}`.
    pub(crate) fn reflect(&self, j: usize, w: &Weight) -> Weight {
        let shift = w.0[j];
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(k, &c)| c - shift * self.cartan[k][j])
                .collect(),
        )
    }

    pub fn is_dominant_for(&self, parabolic: &Parabolic, w: &Weight) -> bool {
        w.rank() == self.rank
            && w.0
                .iter()
                .enumerate()
                .all(|(j, &c)| parabolic.is_marked(j + 1) || c >= 0)
    }

    /// Dimension of the irreducible representation with highest weight `w`.
    pub fn weyl_dim(&self, w: &Weight) -> Result<BigUint> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(invalid(format!(
                "weyl_dim needs a dominant weight, got {w}"
            )));
        }
        Ok(self.weyl_dim_over(w, self.positive_roots.iter()))
    }

    /// Weyl's product formula restricted to the given positive roots. The
    /// caller guarantees `⟨w + ρ, α^∨⟩ > 0` on each of them.
    pub(crate) fn weyl_dim_over<'a>(
        &self,
        w: &Weight,
        roots: impl Iterator<Item = &'a Vec<i64>>,
    ) -> BigUint {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for alpha in roots {
            let height: i64 = alpha.iter().sum();
            let p = pairing(w.coords(), alpha) + height;
            debug_assert!(p > 0, "weyl_dim_over on a non-dominant weight");
            num *= p as u64;
            den *= height as u64;
        }
        num / den
    }

    /// Positive roots of the Levi factor of `parabolic`.
    pub fn levi_positive_roots<'a>(
        &'a self,
        parabolic: &'a Parabolic,
    ) -> impl Iterator<Item = &'a Vec<i64>> + 'a {
        self.positive_roots.iter().filter(move |alpha| {
            alpha
                .iter()
                .enumerate()
                .all(|(j, &a)| a == 0 || !parabolic.is_marked(j + 1))
        })
    }
}

pub(crate) fn pairing(coords: &[i64], alpha: &[i64]) -> i64 {
    coords.iter().zip(alpha).map(|(c, a)| c * a).sum()
}

// Simply laced: β + α_i is a root exactly when ⟨β, α_i^∨⟩ = −1.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let p: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                if p == -1 {
                    let mut gamma = beta.clone();
                    gamma[i] += 1;
                    if seen.insert(gamma.clone()) {
                        next.push(gamma);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}
