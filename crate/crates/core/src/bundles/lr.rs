//! Rational `GL_r` highest weights and the Littlewood–Richardson rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;

use crate::bott::epsilon_to_fundamental;
use crate::error::{invalid, Error, Result};
use crate::rootdata::Weight;

/// A weakly decreasing integer vector: the highest weight of a rational
/// representation of `GL_r`, entries possibly negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GLWeight(Vec<i64>);

impl GLWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("GL weight must have at least one part"));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(invalid(format!(
                "GL weight {parts:?} is not weakly decreasing"
            )));
        }
        Ok(GLWeight(parts))
    }

    pub fn zero(len: usize) -> Self {
        GLWeight(vec![0; len])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d(a) = a_1 + … + a_r`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn shifted(&self, k: i64) -> GLWeight {
        GLWeight(self.0.iter().map(|a| a + k).collect())
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `Σ^a(U)^∨ = Σ^{a*}(U)` with `a* = (−a_r, …, −a_1)`.
pub fn dual_glweight(a: &GLWeight) -> GLWeight {
    GLWeight(a.0.iter().rev().map(|x| -x).collect())
}

/// Dimension of the `GL_r` irreducible with highest weight `a`.
pub fn schur_dim(a: &GLWeight) -> BigUint {
    let r = a.len();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..r {
        for j in i + 1..r {
            num *= (a.0[i] - a.0[j] + (j - i) as i64) as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// Embed `c` as the `ε`-weight `(c_1, …, c_r, 0, …, 0)` of `GL_n` and convert
/// to fundamental coordinates of `A_{n−1}`. The result is dominant for the
/// maximal parabolic `P_{α_r}`.
pub fn glweight_to_weight(c: &GLWeight, n: usize) -> Result<Weight> {
    if c.len() >= n {
        return Err(invalid(format!(
            "GL_{} weight does not fit a Grassmannian block of GL_{n}",
            c.len()
        )));
    }
    let mut eps = c.0.clone();
    eps.resize(n, 0);
    epsilon_to_fundamental(&eps)
}

/// Inverse of [`glweight_to_weight`] on weights whose coordinates beyond
/// index `r` vanish.
pub fn weight_to_glweight(w: &Weight, r: usize) -> Option<GLWeight> {
    let c = w.coords();
    if r == 0 || r > c.len() || c[r..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut parts = vec![0i64; r];
    parts[r - 1] = c[r - 1];
    for k in (0..r - 1).rev() {
        parts[k] = c[k] + parts[k + 1];
    }
    Some(GLWeight(parts))
}

type Partition = Vec<u64>;
type LrKey = (Partition, Partition, usize);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, BTreeMap<Partition, u64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Σ^a ⊗ Σ^b = ⊕ c^ν_{ab} Σ^ν` for `GL_r`. Both weights are shifted to
/// partitions, multiplied with the Littlewood–Richardson rule (restricted to
/// at most `r` rows) and shifted back.
pub fn lr_tensor(a: &GLWeight, b: &GLWeight) -> Result<BTreeMap<GLWeight, u64>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let r = a.len();
    let sa = *a.0.last().expect("non-empty");
    let sb = *b.0.last().expect("non-empty");
    let pa: Partition = a.0.iter().map(|&x| (x - sa) as u64).collect();
    let pb: Partition = b.0.iter().map(|&x| (x - sb) as u64).collect();
    let products = lr_partitions(&pa, &pb, r);
    Ok(products
        .into_iter()
        .map(|(nu, c)| {
            (
                GLWeight(nu.iter().map(|&x| x as i64 + sa + sb).collect()),
                c,
            )
        })
        .collect())
}

/// Littlewood–Richardson product of two partitions (padded to `rows`),
/// keeping only shapes with at most `rows` rows. Results are cached.
pub fn lr_partitions(lam: &[u64], mu: &[u64], rows: usize) -> BTreeMap<Partition, u64> {
    let mut key_lam = lam.to_vec();
    key_lam.resize(rows.max(lam.len()), 0);
    let mut key_mu = mu.to_vec();
    key_mu.resize(rows.max(mu.len()), 0);
    let key = (key_lam, key_mu, rows);
    if let Some(hit) = lr_cache().lock().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let result = lr_enumerate(&key.0, &key.1, rows);
    lr_cache()
        .lock()
        .expect("lr cache poisoned")
        .insert(key, result.clone());
    result
}

// Place μ_1 ones, then μ_2 twos, … as horizontal strips. Letter i lands at the
// right end of its row, so the reverse reading word stays a lattice word iff
// for every row k the running total of i's through row k is at most the
// running total of (i−1)'s strictly above row k.
fn lr_enumerate(lam: &[u64], mu: &[u64], rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if lam.iter().skip(rows).any(|&x| x > 0) || mu.iter().skip(rows).any(|&x| x > 0) {
        return out;
    }
    let mut shape: Vec<u64> = lam.iter().take(rows).copied().collect();
    shape.resize(rows, 0);
    let letters: Vec<u64> = mu.iter().take(rows).copied().filter(|&m| m > 0).collect();
    let prev = vec![0u64; rows];
    place_letter(&letters, 0, &shape, &prev, &mut out);
    out
}

fn place_letter(
    letters: &[u64],
    idx: usize,
    shape: &[u64],
    prev_counts: &[u64],
    out: &mut BTreeMap<Partition, u64>,
) {
    if idx == letters.len() {
        *out.entry(shape.to_vec()).or_insert(0) += 1;
        return;
    }
    let mut counts = vec![0u64; shape.len()];
    let mut new_shape = shape.to_vec();
    distribute(
        letters,
        idx,
        shape,
        prev_counts,
        0,
        letters[idx],
        0,
        0,
        &mut counts,
        &mut new_shape,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    letters: &[u64],
    idx: usize,
    shape: &[u64],
    prev_counts: &[u64],
    row: usize,
    remaining: u64,
    placed_before: u64,
    prev_before: u64,
    counts: &mut Vec<u64>,
    new_shape: &mut Vec<u64>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        place_letter(letters, idx + 1, new_shape, counts, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    // horizontal strip: the new row may not overhang the old row above
    let cap_strip = if row == 0 {
        remaining
    } else {
        shape[row - 1] - shape[row]
    };
    let cap_lattice = if idx == 0 {
        remaining
    } else {
        prev_before - placed_before
    };
    let cap = remaining.min(cap_strip).min(cap_lattice);
    for x in 0..=cap {
        counts[row] = x;
        new_shape[row] = shape[row] + x;
        distribute(
            letters,
            idx,
            shape,
            prev_counts,
            row + 1,
            remaining - x,
            placed_before + x,
            prev_before + prev_counts[row],
            counts,
            new_shape,
            out,
        );
    }
    counts[row] = 0;
    new_shape[row] = shape[row];
}
