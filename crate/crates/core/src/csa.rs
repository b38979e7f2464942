//! Symbolic central simple algebras and their dimension bookkeeping.
//!
//! Brauer classes are never constructed; a label only names the algebra
//! (`F`, `A^{⊗i}` or the even Clifford algebra `C₀(A,σ)`) and knows its
//! dimension over the base field.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CsaKind {
    BaseField,
    TensorPower { exponent: u32 },
    EvenClifford,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CsaLabel {
    kind: CsaKind,
    base_degree: u64,
}

impl CsaLabel {
    pub fn base_field(base_degree: u64) -> Self {
        CsaLabel {
            kind: CsaKind::BaseField,
            base_degree,
        }
    }

    /// `A^{⊗i}`; the zeroth power is the base field.
    pub fn tensor_power(base_degree: u64, exponent: u32) -> Self {
        let kind = if exponent == 0 {
            CsaKind::BaseField
        } else {
            CsaKind::TensorPower { exponent }
        };
        CsaLabel { kind, base_degree }
    }

    /// `C₀(A,σ)` for `A` of even degree.
    pub fn even_clifford(base_degree: u64) -> Result<Self> {
        if base_degree == 0 || !base_degree.is_multiple_of(2) {
            return Err(invalid(format!(
                "even Clifford algebra needs an even degree, got {base_degree}"
            )));
        }
        Ok(CsaLabel {
            kind: CsaKind::EvenClifford,
            base_degree,
        })
    }

    pub fn kind(&self) -> CsaKind {
        self.kind
    }

    pub fn base_degree(&self) -> u64 {
        self.base_degree
    }

    pub fn f_dimension(&self) -> BigUint {
        tits_dimension(self)
    }

    /// Simple components after extending scalars to a splitting field.
    pub fn split_components(&self) -> u64 {
        match self.kind {
            CsaKind::EvenClifford => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CsaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CsaKind::BaseField => write!(f, "F"),
            CsaKind::TensorPower { exponent: 1 } => write!(f, "A"),
            CsaKind::TensorPower { exponent } => write!(f, "A^⊗{exponent}"),
            CsaKind::EvenClifford => write!(f, "C₀(A,σ)"),
        }
    }
}

impl Serialize for CsaLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (kind, exponent) = match self.kind {
            CsaKind::BaseField => ("base_field", Some(0)),
            CsaKind::TensorPower { exponent } => ("tensor_power", Some(exponent)),
            CsaKind::EvenClifford => ("even_clifford", None),
        };
        let mut st = s.serialize_struct("CsaLabel", 6)?;
        st.serialize_field("label", &self.to_string())?;
        st.serialize_field("kind", kind)?;
        st.serialize_field("exponent", &exponent)?;
        st.serialize_field("base_degree", &self.base_degree)?;
        let dim = self.f_dimension();
        match num_traits::ToPrimitive::to_u64(&dim) {
            Some(x) => st.serialize_field("f_dimension", &x)?,
            None => st.serialize_field("f_dimension", &dim.to_string())?,
        }
        st.serialize_field("split_components", &self.split_components())?;
        st.end()
    }
}

/// Reduced dimension `dim_F(M) / n` of a module over a degree-`n` algebra.
pub fn rdim(dim_f: &BigUint, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(invalid("degree must be positive"));
    }
    let n_big = BigUint::from(n);
    if !(dim_f % &n_big).is_zero() {
        return Err(Error::Divisibility {
            dim: dim_f.to_string(),
            degree: n,
        });
    }
    Ok(dim_f / n_big)
}

/// `(dim Sym(A,σ), dim Skew(A,σ))` for an orthogonal involution on a
/// degree-`2n` algebra.
pub fn involution_dims(two_n: u64) -> Result<(u64, u64)> {
    if two_n == 0 || !two_n.is_multiple_of(2) {
        return Err(invalid(format!(
            "involution degree must be positive and even, got {two_n}"
        )));
    }
    Ok((two_n * (two_n + 1) / 2, two_n * (two_n - 1) / 2))
}

pub fn tits_dimension(label: &CsaLabel) -> BigUint {
    let n = BigUint::from(label.base_degree);
    match label.kind {
        CsaKind::BaseField => BigUint::one(),
        CsaKind::TensorPower { exponent } => Pow::pow(&n, 2 * exponent),
        CsaKind::EvenClifford => BigUint::one() << (label.base_degree - 1),
    }
}
