use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serializer;

/// Dimensions serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
pub(crate) fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn ser_biguint_matrix<S: Serializer>(
    m: &[Vec<BigUint>],
    s: S,
) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Value>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v.to_u64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(v.to_string()),
                })
                .collect()
        })
        .collect();
    serde::Serialize::serialize(&rows, s)
}

pub(crate) fn ser_bigint_matrix<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Value>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(v.to_string()),
                })
                .collect()
        })
        .collect();
    serde::Serialize::serialize(&rows, s)
}

/// Binomial coefficient `C(n, k)` for non-negative arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
