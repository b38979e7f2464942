//! The acceptance suite: ten exhaustive or randomized checks with time
//! budgets. Shared by the `acceptance` integration test and `tilt selftest`.
//!
//! Criteria 6 and 7 reuse collections verified by criteria 3–5 when those
//! ran first; their budget covers only their own work.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bott::{bott_classify, bott_classify_with, bott_typea_epsilon, epsilon_to_fundamental};
use crate::bundles::{ext_dims, lr_tensor, schur_dim, EquivariantBundle, GLWeight};
use crate::csa::{CsaKind, CsaLabel};
use crate::endo::{endo_structure_from_report, gldim_bound, TriangularDirection};
use crate::error::Result;
use crate::ktheory::k0_decomposition;
use crate::oracle;
use crate::rootdata::{Parabolic, RootDatum, Weight};
use crate::tilting::{
    build_gsb, build_inv, build_sb, verify, CollectionFamily, ExtReport, Failure, TiltingCollection,
};
use crate::util::binomial;

const SEED: u64 = 0x5eed_7117;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {:<34} {:>8.3}s / {:>4}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

/// Verified collections kept between criteria.
#[derive(Default)]
pub struct Suite {
    quick: bool,
    verified: HashMap<CollectionFamily, (TiltingCollection, ExtReport)>,
}

type Check = fn(&mut Suite) -> Result<std::result::Result<String, String>>;

const CRITERIA: [(u8, &str, u64, Check); 10] = [
    (1, "BWB vs epsilon oracle", 5, c1_epsilon_oracle),
    (2, "projective space cohomology", 10, c2_projective),
    (3, "Severi-Brauer collections", 30, c3_sb),
    (4, "generalized Severi-Brauer", 120, c4_gsb),
    (5, "involution varieties", 60, c5_inv),
    (6, "global dimension bound", 1, c6_gldim),
    (7, "K-theory decompositions", 1, c7_ktheory),
    (8, "negative control", 5, c8_negative),
    (9, "Littlewood-Richardson properties", 30, c9_lr),
    (10, "pivot independence", 5, c10_pivot),
];

impl Suite {
    /// `quick` halves the `n`-ranges.
    pub fn new(quick: bool) -> Self {
        Suite {
            quick,
            verified: HashMap::new(),
        }
    }

    pub fn ids() -> impl Iterator<Item = u8> {
        CRITERIA.iter().map(|c| c.0)
    }

    pub fn run(&mut self, id: u8) -> Outcome {
        let &(id, name, secs, check) = CRITERIA
            .iter()
            .find(|c| c.0 == id)
            .expect("criterion id in 1..=10");
        let start = Instant::now();
        let result = check(self);
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(secs);
        let (mut passed, mut detail) = match result {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        if passed && elapsed > budget {
            passed = false;
            detail = format!("over time budget; {detail}");
        }
        Outcome {
            id,
            name,
            passed,
            detail,
            elapsed,
            budget,
        }
    }

    pub fn run_all(&mut self) -> Vec<Outcome> {
        Self::ids().map(|id| self.run(id)).collect()
    }

    fn upto(&self, full: usize, quick: usize) -> usize {
        if self.quick {
            quick
        } else {
            full
        }
    }

    fn verified(&mut self, c: TiltingCollection) -> Result<&(TiltingCollection, ExtReport)> {
        use std::collections::hash_map::Entry;
        Ok(match self.verified.entry(c.family) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let r = verify(&c)?;
                e.insert((c, r))
            }
        })
    }
}

fn fail<T>(msg: String) -> Result<std::result::Result<T, String>> {
    Ok(Err(msg))
}

fn c1_epsilon_oracle(_: &mut Suite) -> Result<std::result::Result<String, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples = 10_000;
    for _ in 0..samples {
        let n = rng.gen_range(2..=5);
        let eps: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
        let datum = RootDatum::type_a(n - 1)?;
        let ours = bott_classify(&datum, &epsilon_to_fundamental(&eps)?)?;
        let oracle = bott_typea_epsilon(&eps)?;
        if ours != oracle {
            return fail(format!("ε = {eps:?}: {ours:?} vs oracle {oracle:?}"));
        }
    }
    Ok(Ok(format!("{samples} samples agree")))
}

fn c2_projective(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let top = s.upto(10, 5);
    let mut checked = 0;
    for n in 2..=top {
        let datum = RootDatum::type_a(n - 1)?;
        let p = Parabolic::new(n - 1, [1])?;
        let trivial = EquivariantBundle::irreducible(&datum, &p, Weight::zero(n - 1))?;
        for j in -(2 * n as i64)..=2 * n as i64 {
            let line =
                EquivariantBundle::irreducible(&datum, &p, j * &Weight::fundamental(n - 1, 1)?)?;
            let h = ext_dims(&trivial, &line)?;
            let nonzero: Vec<(usize, BigUint)> = h.iter().map(|(k, d)| (k, d.clone())).collect();
            let expected = oracle::projective_cohomology(n, j);
            let ok = match (&expected, nonzero.as_slice()) {
                (None, []) => true,
                (Some(e), [got]) => e == got,
                _ => false,
            };
            let chi = oracle::projective_euler_characteristic(n, j);
            if !ok || h.euler_characteristic() != chi {
                return fail(format!(
                    "ℙ^{}, 𝒪({j}): got {nonzero:?}, expected {expected:?}, χ = {chi}",
                    n - 1
                ));
            }
            checked += 1;
        }
    }
    Ok(Ok(format!("{checked} line bundles on ℙ^1..ℙ^{}", top - 1)))
}

fn c3_sb(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let top = s.upto(8, 4);
    for n in 1..=top {
        let (_, r) = s.verified(build_sb(n)?)?;
        if !r.verdict.is_tilting() {
            return fail(format!("SB n = {n}: {:?}", r.verdict));
        }
        if r.triangular_direction != Some(TriangularDirection::Lower) {
            return fail(format!("SB n = {n}: Hom matrix not lower triangular"));
        }
        let hom = r.hom_matrix();
        for (i, row) in hom.iter().enumerate() {
            let want: BigUint = Pow::pow(BigUint::from(n), 2 * i as u32);
            if row[i] != want {
                return fail(format!(
                    "SB n = {n}: Hom(T{i}, T{i}) = {}, want {want}",
                    row[i]
                ));
            }
        }
    }
    Ok(Ok(format!("n = 1..{top} tilting")))
}

fn c4_gsb(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let top = s.upto(6, 3);
    let mut count = 0;
    for n in 2..=top {
        for r in 1..n {
            let (c, rep) = s.verified(build_gsb(n, r)?)?;
            if !rep.verdict.is_tilting() {
                return fail(format!("GSB ({n},{r}): {:?}", rep.verdict));
            }
            if BigUint::from(c.len()) != binomial(n as u64, r as u64) {
                return fail(format!("GSB ({n},{r}): {} summands", c.len()));
            }
            count += 1;
        }
    }
    Ok(Ok(format!("{count} Grassmannians with n ≤ {top} tilting")))
}

fn c5_inv(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let top = s.upto(6, 4);
    for n in 3..=top {
        let (c, r) = s.verified(build_inv(n)?)?;
        if !r.verdict.is_tilting() {
            return fail(format!("INV n = {n}: {:?}", r.verdict));
        }
        if c.len() != 2 * n {
            return fail(format!("INV n = {n}: {} summands", c.len()));
        }
        let audit = r.involution.as_ref().expect("involution audit");
        if !audit.all_families_hold() {
            return fail(format!(
                "INV n = {n}: vanishing families {:?}",
                audit.families
            ));
        }
        if !r.weights.all_singular_or_dominant() || !audit.named_weights_singular_or_dominant {
            return fail(format!(
                "INV n = {n}: weight outside singular ∪ dominant ({:?})",
                r.weights
            ));
        }
        let spin = 1u64 << (n - 2);
        if audit.spin_ranks != [spin, spin] {
            return fail(format!("INV n = {n}: spin ranks {:?}", audit.spin_ranks));
        }
    }
    Ok(Ok(format!("n = 3..{top} tilting, seven families hold")))
}

fn all_families(s: &Suite) -> Result<Vec<TiltingCollection>> {
    let mut out = Vec::new();
    for n in 1..=s.upto(8, 4) {
        out.push(build_sb(n)?);
    }
    for n in 2..=s.upto(6, 3) {
        for r in 1..n {
            out.push(build_gsb(n, r)?);
        }
    }
    for n in 3..=s.upto(6, 4) {
        out.push(build_inv(n)?);
    }
    Ok(out)
}

fn c6_gldim(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let collections = all_families(s)?;
    let total = collections.len();
    for c in collections {
        let (c, r) = s.verified(c)?;
        let e = endo_structure_from_report(c, r)?;
        if gldim_bound(&e) != c.len() - 1 {
            return fail(format!("{}: bound {}", c.family, gldim_bound(&e)));
        }
        match e.nilpotency_index() {
            Some(k) if k <= e.blocks.len() => {}
            other => return fail(format!("{}: nilpotency {other:?}", c.family)),
        }
    }
    Ok(Ok(format!(
        "{total} collections, off-diagonal part nilpotent"
    )))
}

fn exponent(l: &CsaLabel) -> Option<u32> {
    match l.kind() {
        CsaKind::BaseField => Some(0),
        CsaKind::TensorPower { exponent } => Some(exponent),
        CsaKind::EvenClifford => None,
    }
}

fn c7_ktheory(s: &mut Suite) -> Result<std::result::Result<String, String>> {
    let top = s.upto(6, 3);
    let mut count = 0;
    for n in 1..=top {
        let c = build_sb(n)?;
        let k = k0_decomposition(&c);
        let want: Vec<CsaLabel> = (0..n as u32)
            .map(|i| CsaLabel::tensor_power(n as u64, i))
            .collect();
        if k.factors != want || k.k0_rank_split != c.len() as u64 {
            return fail(format!("SB n = {n}: {k}"));
        }
        count += 1;
        for r in 1..n {
            let c = build_gsb(n, r)?;
            let k = k0_decomposition(&c);
            let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
            for l in &k.factors {
                match exponent(l) {
                    Some(e) => *histogram.entry(e).or_insert(0) += 1,
                    None => return fail(format!("GSB ({n},{r}): unexpected {l}")),
                }
            }
            let gauss = oracle::gaussian_binomial_coefficients(n, r);
            let want: BTreeMap<u32, u64> = gauss
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(d, &c)| (d as u32, c))
                .collect();
            if histogram != want || k.k0_rank_split != c.len() as u64 {
                return fail(format!("GSB ({n},{r}): {k}"));
            }
            count += 1;
        }
    }
    for n in 3..=top.max(3) {
        let c = build_inv(n)?;
        let k = k0_decomposition(&c);
        let deg = 2 * n as u64;
        let mut want = Vec::new();
        for _ in 0..n - 1 {
            want.push(CsaLabel::base_field(deg));
            want.push(CsaLabel::tensor_power(deg, 1));
        }
        want.push(CsaLabel::even_clifford(deg)?);
        if k.factors != want || k.k0_rank_split != c.len() as u64 {
            return fail(format!("INV n = {n}: {k}"));
        }
        count += 1;
    }
    Ok(Ok(format!("{count} decompositions match")))
}

fn c8_negative(_: &mut Suite) -> Result<std::result::Result<String, String>> {
    for n in [3usize, 4] {
        let mut c = build_sb(n)?;
        let w = -(n as i64) * &Weight::fundamental(n - 1, 1)?;
        let extra = EquivariantBundle::irreducible(&c.datum, &c.parabolic, w)?
            .with_scalar(Pow::pow(BigUint::from(n), n as u32))?;
        c.push_extra("O(-n)", extra, CsaLabel::tensor_power(n as u64, n as u32));
        let r = verify(&c)?;
        if r.verdict.is_tilting() {
            return fail(format!("n = {n}: corrupted collection verified"));
        }
        let top = r.failures.iter().find(|f| {
            matches!(f, Failure::HigherExt { degree, dim, .. } if *degree == n - 1 && !dim.is_zero())
        });
        if top.is_none() {
            return fail(format!(
                "n = {n}: no top-degree witness in {:?}",
                r.failures
            ));
        }
    }
    Ok(Ok(
        "corrupted SB(3), SB(4) rejected with Ext^{n-1} witness".into()
    ))
}

fn random_glweight(rng: &mut ChaCha8Rng, r: usize) -> GLWeight {
    let mut v: Vec<i64> = (0..r).map(|_| rng.gen_range(-4..=4)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    GLWeight::new(v).expect("sorted")
}

fn c9_lr(_: &mut Suite) -> Result<std::result::Result<String, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let pairs = 500;
    let mut oracle_checked = 0;
    for _ in 0..pairs {
        let r = rng.gen_range(1..=4);
        let a = random_glweight(&mut rng, r);
        let b = random_glweight(&mut rng, r);
        let ab = lr_tensor(&a, &b)?;
        let total: BigUint = ab
            .iter()
            .map(|(nu, &c)| schur_dim(nu) * BigUint::from(c))
            .sum();
        if total != schur_dim(&a) * schur_dim(&b) {
            return fail(format!("{a} ⊗ {b}: dimension {total}"));
        }
        if lr_tensor(&b, &a)? != ab {
            return fail(format!("{a} ⊗ {b} not commutative"));
        }
        let k = rng.gen_range(-3..=3);
        let shifted: BTreeMap<GLWeight, u64> =
            ab.iter().map(|(nu, &c)| (nu.shifted(k), c)).collect();
        if lr_tensor(&a.shifted(k), &b)? != shifted {
            return fail(format!("{a} ⊗ {b} not shift invariant by {k}"));
        }
        if r <= 3 {
            if oracle::character_tensor(&a, &b) != ab {
                return fail(format!("{a} ⊗ {b} disagrees with character oracle"));
            }
            oracle_checked += 1;
        }
    }
    Ok(Ok(format!(
        "{pairs} pairs, {oracle_checked} against the character oracle"
    )))
}

fn c10_pivot(_: &mut Suite) -> Result<std::result::Result<String, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let mut singular = 0;
    for family in ["A", "D"] {
        for _ in 0..1000 {
            let datum = if family == "A" {
                RootDatum::type_a(rng.gen_range(1..=6))?
            } else {
                RootDatum::type_d(rng.gen_range(3..=6))?
            };
            let w = Weight::new((0..datum.rank()).map(|_| rng.gen_range(-6..=6)).collect());
            let base = bott_classify(&datum, &w)?;
            let last = bott_classify_with(&datum, &w, |c| c[c.len() - 1])?;
            let mut pick = ChaCha8Rng::seed_from_u64(rng.gen());
            let random = bott_classify_with(&datum, &w, |c| c[pick.gen_range(0..c.len())])?;
            if base != last || base != random {
                return fail(format!("{} {w}: pivot rules disagree", datum.family()));
            }
            singular += usize::from(base.is_singular());
        }
    }
    Ok(Ok(format!(
        "2000 weights, {singular} singular, three pivot rules agree"
    )))
}

/// `χ(E, F)` for line bundles on projective space, used by the property
/// tests as well.
pub fn projective_line_euler(n: usize, j: i64) -> Result<BigInt> {
    let datum = RootDatum::type_a(n - 1)?;
    let p = Parabolic::new(n - 1, [1])?;
    let trivial = EquivariantBundle::irreducible(&datum, &p, Weight::zero(n - 1))?;
    let line = EquivariantBundle::irreducible(&datum, &p, j * &Weight::fundamental(n - 1, 1)?)?;
    Ok(ext_dims(&trivial, &line)?.euler_characteristic())
}
