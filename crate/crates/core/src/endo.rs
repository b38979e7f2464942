//! Shape of `End(𝒯)`: Hom dimensions between summands, the Tits algebras on
//! the diagonal, and the global-dimension bound for block-triangular rings
//! with semisimple diagonal.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bundles::GradedDims;
use crate::csa::CsaLabel;
use crate::error::{Error, Result};
use crate::tilting::{verify, ExtReport, TiltingCollection};
use crate::util::{ser_bigint, ser_bigint_matrix, ser_biguint_matrix};

/// Which side of the diagonal may carry non-zero Hom spaces.
/// `Lower` means `Hom(T_i, T_j) = 0` whenever `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangularDirection {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoStructure {
    /// One label per diagonal block, in collection order.
    pub blocks: Vec<CsaLabel>,
    /// Diagonal block of each summand.
    pub block_of: Vec<usize>,
    /// `hom_dims[i][j] = dim Hom(T_i, T_j)` with full multiplicities.
    #[serde(serialize_with = "ser_biguint_matrix")]
    pub hom_dims: Vec<Vec<BigUint>>,
    pub triangular_direction: TriangularDirection,
}

impl EndoStructure {
    pub fn summand_count(&self) -> usize {
        self.hom_dims.len()
    }

    /// Incidence matrix of the strictly off-diagonal part (between distinct
    /// blocks).
    pub fn off_diagonal_incidence(&self) -> Vec<Vec<u8>> {
        let n = self.hom_dims.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        u8::from(
                            self.block_of[i] != self.block_of[j] && !self.hom_dims[i][j].is_zero(),
                        )
                    })
                    .collect()
            })
            .collect()
    }

    /// Smallest `k` with `N^k = 0` for the off-diagonal incidence matrix `N`,
    /// or `None` if no power up to the size vanishes.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.hom_dims.len();
        let base = self.off_diagonal_incidence();
        let mut power = identity_u8(n);
        for k in 1..=n.max(1) {
            power = bool_product(&power, &base);
            if power.iter().all(|row| row.iter().all(|&x| x == 0)) {
                return Some(k);
            }
        }
        None
    }
}

fn identity_u8(n: usize) -> Vec<Vec<u8>> {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

fn bool_product(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| u8::from((0..n).any(|k| a[i][k] != 0 && b[k][j] != 0)))
                .collect()
        })
        .collect()
}

pub fn endo_structure(c: &TiltingCollection) -> Result<EndoStructure> {
    let report = verify(c)?;
    endo_structure_from_report(c, &report)
}

/// Build the structure from an existing report; fails unless the verdict is
/// `Tilting`.
pub fn endo_structure_from_report(
    c: &TiltingCollection,
    report: &ExtReport,
) -> Result<EndoStructure> {
    if !report.verdict.is_tilting() {
        return Err(Error::Precondition(format!(
            "collection is not tilting: {}",
            report
                .failures
                .first()
                .map(|f| f.to_string())
                .unwrap_or_default()
        )));
    }
    let direction = report
        .triangular_direction
        .expect("tilting implies a direction");
    let mut blocks = Vec::new();
    for s in &c.summands {
        if s.block == blocks.len() {
            blocks.push(s.tits);
        }
    }
    Ok(EndoStructure {
        blocks,
        block_of: c.summands.iter().map(|s| s.block).collect(),
        hom_dims: report.hom_matrix(),
        triangular_direction: direction,
    })
}

/// Upper bound for `gldim End(𝒯)`. Each step of the recursion
/// `gldim ≤ max(pdim_R B + 1, gldim R)` over a semisimple corner adds at most
/// one, so a ring with `k` summands has global dimension at most `k − 1`.
/// Summands are counted before merging the half-spin pair.
pub fn gldim_bound(s: &EndoStructure) -> usize {
    s.summand_count().saturating_sub(1)
}

/// `χ(T_i, T_j) = Σ_k (−1)^k dim Ext^k(T_i, T_j)`.
pub fn euler_matrix(c: &TiltingCollection) -> Result<Vec<Vec<BigInt>>> {
    Ok(euler_matrix_from_report(&verify(c)?))
}

pub fn euler_matrix_from_report(report: &ExtReport) -> Vec<Vec<BigInt>> {
    report
        .pairwise
        .iter()
        .map(|row| row.iter().map(GradedDims::euler_characteristic).collect())
        .collect()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoSummary {
    pub structure: EndoStructure,
    pub gldim_bound: usize,
    pub nilpotency_index: Option<usize>,
    #[serde(serialize_with = "ser_bigint_matrix")]
    pub euler_matrix: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "ser_bigint")]
    pub euler_determinant: BigInt,
}

pub fn summarize(c: &TiltingCollection, report: &ExtReport) -> Result<EndoSummary> {
    let structure = endo_structure_from_report(c, report)?;
    let euler = euler_matrix_from_report(report);
    let det = determinant(&euler);
    debug_assert!(!det.is_negative());
    Ok(EndoSummary {
        gldim_bound: gldim_bound(&structure),
        nilpotency_index: structure.nilpotency_index(),
        euler_determinant: det,
        euler_matrix: euler,
        structure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilting::{build_gsb, build_inv, build_sb};

    fn big(rows: &[&[u32]]) -> Vec<Vec<BigUint>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
            .collect()
    }

    #[test]
    fn sb2_structure() {
        let s = endo_structure(&build_sb(2).unwrap()).unwrap();
        assert_eq!(
            s.blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            ["F", "A"]
        );
        assert_eq!(s.hom_dims, big(&[&[1, 0], &[4, 4]]));
        assert_eq!(s.triangular_direction, TriangularDirection::Lower);
        let e = euler_matrix(&build_sb(2).unwrap()).unwrap();
        assert_eq!(determinant(&e), BigInt::from(4));
    }

    #[test]
    fn sb1_structure() {
        let c = build_sb(1).unwrap();
        let s = endo_structure(&c).unwrap();
        assert_eq!(s.hom_dims, big(&[&[1]]));
        assert_eq!(gldim_bound(&s), 0);
        assert_eq!(euler_matrix(&c).unwrap(), vec![vec![BigInt::one()]]);
    }

    #[test]
    fn sb4_bound() {
        let s = endo_structure(&build_sb(4).unwrap()).unwrap();
        assert_eq!(gldim_bound(&s), 3);
        assert_eq!(s.nilpotency_index().map(|k| k <= 4), Some(true));
    }

    #[test]
    fn inv3_blocks() {
        let s = endo_structure(&build_inv(3).unwrap()).unwrap();
        let labels: Vec<String> = s.blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(labels, ["F", "A", "F", "A", "C₀(A,σ)"]);
        assert_eq!(gldim_bound(&s), 5);
    }

    #[test]
    fn euler_equals_hom_for_verified_collections() {
        let mut cs = Vec::new();
        for n in 1..=5 {
            cs.push(build_sb(n).unwrap());
            for r in 1..n {
                cs.push(build_gsb(n, r).unwrap());
            }
        }
        cs.push(build_inv(3).unwrap());
        cs.push(build_inv(4).unwrap());
        for c in cs {
            let report = verify(&c).unwrap();
            let sum = summarize(&c, &report).unwrap();
            let hom: Vec<Vec<BigInt>> = sum
                .structure
                .hom_dims
                .iter()
                .map(|r| r.iter().map(|x| BigInt::from(x.clone())).collect())
                .collect();
            assert_eq!(sum.euler_matrix, hom, "{}", c.family);
            let diag: BigInt = (0..hom.len()).map(|i| hom[i][i].clone()).product();
            assert_eq!(sum.euler_determinant, diag);
            assert!(sum.euler_determinant > BigInt::zero());
        }
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m: Vec<Vec<BigInt>> = [[2, -1, 0], [3, 0, 4], [1, 5, -2]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        // 2(0·−2 − 4·5) − (−1)(3·−2 − 4·1) + 0 = −40 − 10
        assert_eq!(determinant(&m), BigInt::from(-50));
        let z = vec![
            vec![BigInt::zero(), BigInt::one()],
            vec![BigInt::one(), BigInt::zero()],
        ];
        assert_eq!(determinant(&z), BigInt::from(-1));
    }

    #[test]
    fn precondition_enforced() {
        let mut c = build_sb(3).unwrap();
        let b = crate::bundles::EquivariantBundle::irreducible(
            &c.datum,
            &c.parabolic,
            crate::rootdata::Weight::new(vec![-3, 0]),
        )
        .unwrap();
        c.push_extra("bad", b, CsaLabel::base_field(3));
        assert!(matches!(endo_structure(&c), Err(Error::Precondition(_))));
    }
}
