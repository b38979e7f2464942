//! `K_*` of the twisted variety as a sum over the diagonal Tits algebras.
//! Higher K-groups are only named, never evaluated.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::csa::CsaLabel;
use crate::tilting::TiltingCollection;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KDecomposition {
    pub factors: Vec<CsaLabel>,
    /// Rank of `K_0` after splitting: one per matrix-algebra factor, two for
    /// `C₀(A,σ)`.
    pub k0_rank_split: u64,
}

/// Read the factors off the diagonal blocks in collection order; the
/// half-spin pair contributes a single `C₀(A,σ)`.
pub fn k0_decomposition(c: &TiltingCollection) -> KDecomposition {
    let mut seen = BTreeSet::new();
    let factors: Vec<CsaLabel> = c
        .summands
        .iter()
        .filter(|s| seen.insert(s.block))
        .map(|s| s.tits)
        .collect();
    let k0_rank_split = factors.iter().map(CsaLabel::split_components).sum();
    KDecomposition {
        factors,
        k0_rank_split,
    }
}

impl fmt::Display for KDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, label) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "K_*({label})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csa::CsaKind;
    use crate::tilting::{build_gsb, build_inv, build_sb};

    fn exponents(k: &KDecomposition) -> Vec<u32> {
        k.factors
            .iter()
            .map(|l| match l.kind() {
                CsaKind::BaseField => 0,
                CsaKind::TensorPower { exponent } => exponent,
                CsaKind::EvenClifford => u32::MAX,
            })
            .collect()
    }

    #[test]
    fn sb3() {
        let k = k0_decomposition(&build_sb(3).unwrap());
        assert_eq!(k.to_string(), "K_*(F) ⊕ K_*(A) ⊕ K_*(A^⊗2)");
        assert_eq!(k.k0_rank_split, 3);
    }

    #[test]
    fn gsb42() {
        let k = k0_decomposition(&build_gsb(4, 2).unwrap());
        let mut e = exponents(&k);
        e.sort();
        assert_eq!(e, vec![0, 1, 2, 2, 3, 4]);
        assert_eq!(k.k0_rank_split, 6);
    }

    #[test]
    fn inv3() {
        let k = k0_decomposition(&build_inv(3).unwrap());
        assert_eq!(
            k.to_string(),
            "K_*(F) ⊕ K_*(A) ⊕ K_*(F) ⊕ K_*(A) ⊕ K_*(C₀(A,σ))"
        );
        assert_eq!(k.k0_rank_split, 6);
    }

    #[test]
    fn rank_matches_summands() {
        for n in 1..=6 {
            let c = build_sb(n).unwrap();
            assert_eq!(k0_decomposition(&c).k0_rank_split as usize, c.len());
            for r in 1..n {
                let c = build_gsb(n, r).unwrap();
                assert_eq!(k0_decomposition(&c).k0_rank_split as usize, c.len());
            }
            if n >= 3 {
                let c = build_inv(n).unwrap();
                assert_eq!(k0_decomposition(&c).k0_rank_split as usize, c.len());
            }
        }
    }

    #[test]
    fn factor_multiset_ignores_tie_order() {
        let c = build_gsb(5, 2).unwrap();
        let mut swapped = c.clone();
        // two summands with d(a) = 2 sit next to each other
        let pos = swapped
            .summands
            .windows(2)
            .position(|w| w[0].tits == w[1].tits)
            .expect("a tie exists");
        swapped.summands.swap(pos, pos + 1);
        let mut a = exponents(&k0_decomposition(&c));
        let mut b = exponents(&k0_decomposition(&swapped));
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
