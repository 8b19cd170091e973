//! The verification suite: every structural claim about the action, checked
//! per genus, with enumeration-backed checks gated by a genus ceiling.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{
    apply_generator, apply_generator_mut, apply_word, generator_count, permutation_of,
    word_for_permutation, GeneratorWord,
};
use crate::error::{Error, Result};
use crate::gf2::{arf, evaluate, intersection, BitRow, HomologyClass, SpinMatrix};
use crate::normal_form::{classify, fixed_point, max_class_index, normal_bar_m};
use crate::orbit::{
    apply_generator_key, census, check_reduce_against_partition, enumerate_orbits,
    enumerate_sp_orbits, verify_isotropy, OrbitPartition, MAX_ENUMERATION_GENUS, MAX_SP_GENUS,
};

/// Genus at or below which the algebraic checks run over every matrix.
pub const EXHAUSTIVE_ALGEBRA_GENUS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub genus: usize,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub genera: Vec<usize>,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest genus for which orbit enumeration runs.
    pub max_enumeration_genus: usize,
    /// Random samples per genus for the algebraic checks above
    /// [`EXHAUSTIVE_ALGEBRA_GENUS`].
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_enumeration_genus: 8,
            samples: 512,
            seed: 0x5eed,
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, genus: usize) -> SpinMatrix {
    SpinMatrix::from_columns((0..genus).map(|_| (rng.gen(), rng.gen()))).expect("genus >= 1")
}

pub fn random_class<R: Rng>(rng: &mut R, genus: usize) -> HomologyClass {
    let a = BitRow::from_bits((0..genus).map(|_| rng.gen()));
    let b = BitRow::from_bits((0..genus).map(|_| rng.gen()));
    HomologyClass::from_rows(a, b).expect("rows have equal length")
}

pub fn random_word<R: Rng>(rng: &mut R, genus: usize, len: usize) -> GeneratorWord {
    let n = generator_count(genus);
    GeneratorWord::new((0..len).map(|_| rng.gen_range(1..=n)).collect())
}

fn rng_for(seed: u64, genus: usize, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (genus as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn fail(check: &str, detail: String) -> Error {
    Error::CheckFailed {
        check: check.into(),
        detail,
    }
}

/// Matrices to test at genus `g`: all of them up to
/// [`EXHAUSTIVE_ALGEBRA_GENUS`], otherwise `samples` random ones.
fn test_matrices(genus: usize, samples: usize, seed: u64, salt: u64) -> Vec<SpinMatrix> {
    if genus <= EXHAUSTIVE_ALGEBRA_GENUS {
        SpinMatrix::all(genus).expect("small genus").collect()
    } else {
        let mut rng = rng_for(seed, genus, salt);
        (0..samples)
            .map(|_| random_matrix(&mut rng, genus))
            .collect()
    }
}

/// Involution, far commutation, and braid relations of the generators, and
/// independence of the action from the word chosen for a permutation.
/// Returns the number of matrices checked.
pub fn check_generator_relations(genus: usize, samples: usize, seed: u64) -> Result<u64> {
    const CHECK: &str = "generator-relations";
    let n = generator_count(genus);
    let mats = test_matrices(genus, samples, seed, 1);
    let mut rng = rng_for(seed, genus, 2);
    let act = |m: &SpinMatrix, w: &[usize]| {
        let mut r = m.clone();
        for &i in w {
            apply_generator_mut(&mut r, i);
        }
        r
    };
    for m in &mats {
        for i in 1..=n {
            if act(m, &[i, i]) != *m {
                return Err(fail(CHECK, format!("sigma_{i}^2 moves {m}")));
            }
            for j in i + 1..=n {
                if j == i + 1 {
                    if act(m, &[i, j, i]) != act(m, &[j, i, j]) {
                        return Err(fail(CHECK, format!("braid relation {i},{j} fails on {m}")));
                    }
                } else if act(m, &[i, j]) != act(m, &[j, i]) {
                    return Err(fail(
                        CHECK,
                        format!("sigma_{i}, sigma_{j} do not commute on {m}"),
                    ));
                }
            }
        }
        let word = random_word(&mut rng, genus, 4 * n);
        let normal = word_for_permutation(&permutation_of(&word, genus)?)?;
        if apply_word(m, &word)? != apply_word(m, &normal)? {
            return Err(fail(
                CHECK,
                format!("words {word} and {normal} give the same permutation but act differently on {m}"),
            ));
        }
    }
    Ok(mats.len() as u64)
}

/// `c(x+y) = c(x) + c(y) + x·y` on random classes, and `c` recovers the
/// matrix entries on the basis. Returns the number of cases checked.
pub fn check_quadratic_refinement(genus: usize, samples: usize, seed: u64) -> Result<u64> {
    const CHECK: &str = "quadratic-refinement";
    let mats = test_matrices(genus, samples, seed, 3);
    let mut rng = rng_for(seed, genus, 4);
    for m in &mats {
        let (x, y) = (random_class(&mut rng, genus), random_class(&mut rng, genus));
        let lhs = evaluate(m, &(&x + &y))?;
        let rhs = evaluate(m, &x)? + evaluate(m, &y)? + intersection(&x, &y)?;
        if lhs != rhs {
            return Err(fail(CHECK, format!("fails for {m} at x={x}, y={y}")));
        }
        for k in 1..=genus {
            if evaluate(m, &HomologyClass::alpha(genus, k)?)? != m.alpha_value(k)
                || evaluate(m, &HomologyClass::beta(genus, k)?)? != m.beta_value(k)
            {
                return Err(fail(CHECK, format!("basis value {k} of {m} not recovered")));
            }
        }
    }
    if genus <= EXHAUSTIVE_ALGEBRA_GENUS {
        let classes: Vec<HomologyClass> = (0..1u64 << (2 * genus))
            .map(|k| HomologyClass::from_key(genus, k))
            .collect::<Result<_>>()?;
        for m in &mats {
            for x in &classes {
                for y in &classes {
                    let lhs = evaluate(m, &(x + y))?;
                    let rhs = evaluate(m, x)? + evaluate(m, y)? + intersection(x, y)?;
                    if lhs != rhs {
                        return Err(fail(CHECK, format!("fails for {m} at x={x}, y={y}")));
                    }
                }
            }
        }
        return Ok((mats.len() * classes.len() * classes.len()) as u64);
    }
    Ok(mats.len() as u64)
}

/// The Arf invariant is preserved by every generator.
pub fn check_arf_invariance(genus: usize, samples: usize, seed: u64) -> Result<u64> {
    let mats = test_matrices(genus, samples, seed, 5);
    for m in &mats {
        for i in 1..=generator_count(genus) {
            let moved = apply_generator(m, i)?;
            if arf(&moved) != arf(m) {
                return Err(fail(
                    "arf-invariance",
                    format!("sigma_{i} changes Arf of {m}"),
                ));
            }
        }
    }
    Ok(mats.len() as u64)
}

/// Keys of every spin matrix fixed by all generators.
pub fn fixed_keys(genus: usize) -> Result<Vec<u64>> {
    if genus > MAX_ENUMERATION_GENUS {
        return Err(Error::UnsupportedGenus {
            genus,
            reason: "too large for exhaustive enumeration",
        });
    }
    let n = generator_count(genus);
    Ok((0..1u64 << (2 * genus))
        .filter(|&k| (1..=n).all(|i| apply_generator_key(k, genus, i) == k))
        .collect())
}

struct Suite<'a> {
    genus: usize,
    opts: &'a VerifyOptions,
    out: Vec<CheckResult>,
}

impl Suite<'_> {
    fn record(&mut self, check: &'static str, outcome: Result<String>) {
        let (status, detail) = match outcome {
            Ok(detail) => (Status::Pass, detail),
            Err(Error::CheckFailed { detail, .. }) => (Status::Fail, detail),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.out.push(CheckResult {
            genus: self.genus,
            check,
            status,
            detail,
        });
    }

    fn skip(&mut self, check: &'static str, detail: String) {
        self.out.push(CheckResult {
            genus: self.genus,
            check,
            status: Status::Skip,
            detail,
        });
    }
}

fn ensure(check: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(check, detail()))
    }
}

/// Runs every check for one genus.
pub fn verify_genus(genus: usize, opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut s = Suite {
        genus,
        opts,
        out: Vec::new(),
    };
    if genus == 0 {
        s.record("input", Err(Error::ZeroGenus));
        return s.out;
    }
    let (samples, seed) = (opts.samples, opts.seed);
    let cases = |n: u64| {
        if genus <= EXHAUSTIVE_ALGEBRA_GENUS {
            format!("{n} cases, exhaustive")
        } else {
            format!("{n} random cases")
        }
    };

    s.record(
        "generator-relations",
        check_generator_relations(genus, samples, seed).map(cases),
    );
    s.record(
        "quadratic-refinement",
        check_quadratic_refinement(genus, samples, seed).map(cases),
    );
    s.record(
        "arf-invariance",
        check_arf_invariance(genus, samples, seed).map(cases),
    );

    let enumerable = genus <= s.opts.max_enumeration_genus.min(MAX_ENUMERATION_GENUS);
    let too_large = || {
        format!(
            "enumeration skipped: genus {genus} exceeds --max-g {}",
            opts.max_enumeration_genus
        )
    };

    s.record("fixed-point", check_fixed_point(genus, enumerable));

    if genus >= 3 {
        s.record(
            "normal-form-membership",
            check_normal_form_membership(genus),
        );
        s.record("isotropy-generators", check_isotropy(genus, None));
    }

    if !enumerable {
        for check in [
            "orbit-count",
            "orbit-sizes",
            "isotropy-order",
            "reduce-oracle",
            "arf-census",
        ] {
            if genus >= 3 || check == "orbit-count" {
                s.skip(check, too_large());
            }
        }
        if genus <= MAX_SP_GENUS {
            s.skip("sp-arf-classification", too_large());
        }
        return s.out;
    }

    let partition = match enumerate_orbits(genus) {
        Ok(p) => p,
        Err(e) => {
            s.record("orbit-count", Err(e));
            return s.out;
        }
    };
    s.record("orbit-count", check_orbit_count(&partition));
    if genus >= 3 {
        s.record("orbit-sizes", check_orbit_sizes(&partition));
        s.record("isotropy-order", check_isotropy(genus, Some(&partition)));
        s.record(
            "reduce-oracle",
            check_reduce_against_partition(&partition).map(|n| format!("{n} matrices agree")),
        );
        s.record("arf-census", check_arf_census(&partition));
    }
    if genus <= MAX_SP_GENUS {
        s.record("sp-arf-classification", check_sp(&partition));
    }
    s.out
}

fn check_fixed_point(genus: usize, enumerable: bool) -> Result<String> {
    const CHECK: &str = "fixed-point";
    let candidate = fixed_point(genus);
    if let Some(f) = &candidate {
        ensure(CHECK, genus % 2 == 1, || {
            format!("even genus has candidate {f}")
        })?;
        for i in 1..=generator_count(genus) {
            ensure(CHECK, apply_generator(f, i)? == *f, || {
                format!("sigma_{i} moves {f}")
            })?;
        }
    } else {
        ensure(CHECK, genus.is_multiple_of(2), || {
            "odd genus without candidate".into()
        })?;
    }
    if !enumerable {
        return Ok(match candidate {
            Some(f) => format!("{f} fixed by all generators; uniqueness not enumerated"),
            None => "no candidate for even genus; absence not enumerated".into(),
        });
    }
    let found = fixed_keys(genus)?;
    let expected: Vec<u64> = candidate.iter().filter_map(SpinMatrix::key).collect();
    ensure(CHECK, found == expected, || {
        format!(
            "exhaustive scan found {} fixed matrices, expected {}",
            found.len(),
            expected.len()
        )
    })?;
    Ok(match candidate {
        Some(f) => format!("{f} is the unique fixed matrix"),
        None => "no fixed matrix".into(),
    })
}

fn check_normal_form_membership(genus: usize) -> Result<String> {
    let max = max_class_index(genus);
    for m in 0..=max {
        let bar = normal_bar_m(genus, m)?;
        let got = classify(&bar)?;
        ensure("normal-form-membership", got == m, || {
            format!("normal form {bar} for class {m} reduces to class {got}")
        })?;
    }
    Ok(format!("classes 0..={max} confirmed"))
}

fn check_isotropy(genus: usize, partition: Option<&OrbitPartition>) -> Result<String> {
    let check = if partition.is_some() {
        "isotropy-order"
    } else {
        "isotropy-generators"
    };
    for m in 0..=max_class_index(genus) {
        let r = verify_isotropy(genus, m, partition)?;
        if !r.passes {
            let mut why = Vec::new();
            let unexpected: Vec<_> = r
                .moving
                .iter()
                .filter(|&&i| Some(i) != r.expected_moving)
                .collect();
            if !unexpected.is_empty() {
                why.push(format!("generators {unexpected:?} move it"));
            }
            if let Some(i) = r.expected_moving.filter(|i| r.fixing.contains(i)) {
                why.push(format!("sigma_{i} fixes it"));
            }
            if r.tau_fixes == Some(false) {
                why.push("tau moves it".into());
            }
            if r.tau_swaps_halves == Some(false) {
                why.push("tau does not swap the halves".into());
            }
            if !r.in_class {
                why.push("not in the class of M_m".into());
            }
            if let Some(o) = r
                .observed_order
                .as_ref()
                .filter(|o| **o != r.predicted_order)
            {
                why.push(format!("stabilizer order {o} != {}", r.predicted_order));
            }
            return Err(fail(
                check,
                format!("class {m}, {}: {}", r.matrix, why.join("; ")),
            ));
        }
    }
    Ok(format!("classes 0..={}", max_class_index(genus)))
}

fn check_orbit_count(p: &OrbitPartition) -> Result<String> {
    let genus = p.genus();
    let count = p.orbit_count();
    if genus < 3 {
        ensure("orbit-count", count == 2, || {
            format!("{count} orbits, expected 2")
        })?;
        return Ok(format!(
            "{count} orbits (derived by enumeration, outside the classification range)"
        ));
    }
    let expected = max_class_index(genus) + 1;
    ensure("orbit-count", count == expected, || {
        format!("{count} orbits, expected {expected}")
    })?;
    Ok(format!("{count} orbits"))
}

fn check_orbit_sizes(p: &OrbitPartition) -> Result<String> {
    let rows = census(p)?;
    let total: u64 = rows.iter().map(|r| r.size).sum();
    ensure("orbit-sizes", total == 1 << (2 * p.genus()), || {
        format!("sizes sum to {total}")
    })?;
    if let Some(r) = rows.iter().find(|r| !r.matches) {
        return Err(fail(
            "orbit-sizes",
            format!(
                "class {} has {} elements, expected {}",
                r.class_index, r.size, r.predicted_size
            ),
        ));
    }
    Ok(rows
        .iter()
        .map(|r| r.size.to_string())
        .collect::<Vec<_>>()
        .join(","))
}

fn check_arf_census(p: &OrbitPartition) -> Result<String> {
    let rows = census(p)?;
    for r in &rows {
        ensure("arf-census", r.arf as usize == r.class_index % 2, || {
            format!("class {} has Arf {}", r.class_index, r.arf)
        })?;
    }
    Ok(rows
        .iter()
        .map(|r| r.arf.to_string())
        .collect::<Vec<_>>()
        .join(","))
}

fn check_sp(p: &OrbitPartition) -> Result<String> {
    const CHECK: &str = "sp-arf-classification";
    let genus = p.genus();
    let sp = enumerate_sp_orbits(genus)?;
    let even = (1u64 << (genus - 1)) * ((1 << genus) + 1);
    let odd = (1u64 << (genus - 1)) * ((1 << genus) - 1);
    ensure(CHECK, sp.orbit_count() == 2, || {
        format!("{} orbits", sp.orbit_count())
    })?;
    let arf_of = |idx: usize| crate::orbit::arf_key(sp.representatives()[idx] as u64, genus);
    for idx in 0..2 {
        let a = arf_of(idx);
        let ok = sp
            .labels()
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == sp.representatives()[idx])
            .all(|(k, _)| crate::orbit::arf_key(k as u64, genus) == a);
        ensure(CHECK, ok, || format!("Arf varies on orbit {idx}"))?;
        let want = if a == 0 { even } else { odd };
        ensure(CHECK, sp.sizes()[idx] == want, || {
            format!(
                "Arf {a} orbit has {} elements, expected {want}",
                sp.sizes()[idx]
            )
        })?;
    }
    let refines = p
        .labels()
        .iter()
        .zip(sp.labels())
        .all(|(&l, &s)| sp.labels()[l as usize] == s);
    ensure(CHECK, refines, || {
        "an orbit meets both symplectic orbits".into()
    })?;
    if genus == 2 {
        ensure(CHECK, p.labels() == sp.labels(), || {
            "partitions differ at genus 2".into()
        })?;
    }
    Ok(format!("sizes {even},{odd}"))
}

/// Runs the suite over `genera` in ascending order.
pub fn verify_range(genera: &[usize], opts: &VerifyOptions) -> RunReport {
    let start = Instant::now();
    let mut genera = genera.to_vec();
    genera.sort_unstable();
    genera.dedup();
    let checks = genera.iter().flat_map(|&g| verify_genus(g, opts)).collect();
    RunReport {
        command: "verify".into(),
        genera,
        checks,
        wall_time: start.elapsed(),
    }
}
