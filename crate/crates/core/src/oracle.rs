//! Slow, independent reference computations. Nothing here calls into the
//! dot-action, Weyl-formula or Littlewood–Richardson code paths; the test
//! suites and `selftest` compare those against these.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bundles::GLWeight;

/// `χ(ℙ^{n−1}, 𝒪(j)) = (j+1)(j+2)…(j+n−1) / (n−1)!` for any integer `j`.
pub fn projective_euler_characteristic(n: usize, j: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 1..n as i64 {
        num *= j + k;
        den *= k;
    }
    num / den
}

/// Cohomology of `𝒪(j)` on `ℙ^{n−1}` from the classical computation:
/// sections `C(j+n−1, n−1)` in degree 0 for `j ≥ 0`, the Serre-dual count
/// `C(−j−1, n−1)` in degree `n−1` for `j ≤ −n`, nothing in between.
pub fn projective_cohomology(n: usize, j: i64) -> Option<(usize, BigUint)> {
    let m = n as i64 - 1;
    if j >= 0 {
        Some((0, binomial_i(j + m, m)))
    } else if j <= -(n as i64) {
        Some((n - 1, binomial_i(-j - 1, m)))
    } else {
        None
    }
}

fn binomial_i(top: i64, k: i64) -> BigUint {
    crate::util::binomial(top as u64, k as u64)
}

/// `dim` of the `GL_n` irreducible indexed by a partition, by the
/// hook-content formula `∏ (n + c(u)) / h(u)`.
pub fn hook_content_dim(partition: &[u64], n: u64) -> BigUint {
    let rows: Vec<u64> = partition.iter().copied().filter(|&p| p > 0).collect();
    if rows.len() as u64 > n {
        return BigUint::zero();
    }
    let col_len = |j: u64| rows.iter().filter(|&&r| r > j).count() as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &len) in rows.iter().enumerate() {
        let i = i as u64;
        for j in 0..len {
            num *= n + j - i;
            let hook = (len - j - 1) + (col_len(j) - i - 1) + 1;
            den *= hook;
        }
    }
    num / den
}

/// Content vectors of all semistandard tableaux of shape `partition` with
/// entries in `1..=r`.
pub fn ssyt_weights(partition: &[u64], r: usize) -> Vec<Vec<i64>> {
    let cells: Vec<(usize, usize)> = partition
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        r: usize,
        fill: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if k == cells.len() {
            let mut w = vec![0i64; r];
            for &v in fill.values() {
                w[v - 1] += 1;
            }
            out.push(w);
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { fill[&(i, j - 1)] } else { 1 };
        let lo_col = if i > 0 { fill[&(i - 1, j)] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=r {
            fill.insert((i, j), v);
            go(k + 1, cells, r, fill, out);
        }
        fill.remove(&(i, j));
    }
    go(0, &cells, r, &mut fill, &mut out);
    out
}

fn permutations(r: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let r = used.len();
        if prefix.len() == r {
            let mut inv = 0;
            for a in 0..r {
                for b in a + 1..r {
                    if prefix[a] > prefix[b] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..r {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

/// Tensor product multiplicities from characters: expand
/// `s_a · a_{b+δ} = Σ_ν c_ν a_{ν+δ}` and read `c_ν` off the strictly
/// decreasing monomials. Exponential; meant for `r ≤ 3` and small entries.
pub fn character_tensor(a: &GLWeight, b: &GLWeight) -> BTreeMap<GLWeight, u64> {
    let r = a.len();
    assert_eq!(r, b.len());
    let sa = *a.parts().last().expect("non-empty");
    let sb = *b.parts().last().expect("non-empty");
    let pa: Vec<u64> = a.parts().iter().map(|&x| (x - sa) as u64).collect();
    let bd: Vec<i64> = b
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - sb + (r - 1 - i) as i64)
        .collect();
    let mut coeff: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let perms = permutations(r);
    for wt in ssyt_weights(&pa, r) {
        for (sigma, sign) in &perms {
            let e: Vec<i64> = (0..r).map(|i| wt[i] + bd[sigma[i]]).collect();
            if e.windows(2).all(|p| p[0] > p[1]) {
                *coeff.entry(e).or_insert(0) += sign;
            }
        }
    }
    coeff
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(e, c)| {
            assert!(c > 0, "negative multiplicity in character expansion");
            let nu: Vec<i64> = e
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (r - 1 - i) as i64 + sa + sb)
                .collect();
            (GLWeight::new(nu).expect("decreasing"), c as u64)
        })
        .collect()
}

/// Coefficients of the Gaussian binomial `[n choose r]_q`: entry `k` counts
/// partitions of `k` inside an `r × (n−r)` box.
pub fn gaussian_binomial_coefficients(n: usize, r: usize) -> Vec<u64> {
    // [n choose r] = ∏_{i=1}^{r} (1 − q^{n−r+i}) / (1 − q^i), as an exact
    // polynomial division carried out one factor at a time.
    let mut poly = vec![1i64];
    for i in 1..=r {
        let up = n - r + i;
        let mut next = vec![0i64; poly.len() + up];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + up] -= c;
        }
        // divide by (1 − q^i)
        let mut quot = vec![0i64; next.len() - i];
        let mut rem = next;
        for k in 0..quot.len() {
            let c = rem[k];
            quot[k] = c;
            rem[k] -= c;
            rem[k + i] += c;
        }
        debug_assert!(rem.iter().all(|&x| x == 0));
        poly = quot;
    }
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
    poly.into_iter().map(|c| c as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        assert_eq!(projective_euler_characteristic(2, -2), BigInt::from(-1));
        assert_eq!(projective_euler_characteristic(3, 2), BigInt::from(6));
        assert_eq!(projective_euler_characteristic(4, -2), BigInt::zero());
        assert_eq!(projective_cohomology(2, -2), Some((1, BigUint::one())));
        assert_eq!(projective_cohomology(2, 3), Some((0, BigUint::from(4u32))));
        assert_eq!(projective_cohomology(4, -3), None);
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content_dim(&[1], 5), BigUint::from(5u32));
        assert_eq!(hook_content_dim(&[2, 1], 3), BigUint::from(8u32));
        assert_eq!(hook_content_dim(&[1, 1, 1, 1], 3), BigUint::zero());
    }

    #[test]
    fn character_oracle_small() {
        let g = |p: &[i64]| GLWeight::new(p.to_vec()).unwrap();
        let out = character_tensor(&g(&[1, 0]), &g(&[1, 0]));
        assert_eq!(
            out.into_iter().collect::<Vec<_>>(),
            vec![(g(&[1, 1]), 1), (g(&[2, 0]), 1)]
        );
        let out = character_tensor(&g(&[1, 0]), &g(&[0, -1]));
        assert_eq!(
            out.into_iter().collect::<Vec<_>>(),
            vec![(g(&[0, 0]), 1), (g(&[1, -1]), 1)]
        );
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial_coefficients(4, 2), vec![1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial_coefficients(5, 1), vec![1, 1, 1, 1, 1]);
    }
}
