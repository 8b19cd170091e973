//! Exhaustive orbit enumeration, the orbit census, and isotropy checks.
//!
//! A spin matrix of genus `g` is packed into the key `top | bottom << g`,
//! with column `k` stored in bit `k - 1` of each row.

use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::braid::{apply_word, generator_count, permutation_of, tau_word};
use crate::error::{Error, Result};
use crate::gf2::{low_mask, SpinMatrix};
use crate::normal_form::{canonical_m, classify, max_class_index, normal_bar_m, reduce};

/// Largest genus for which every spin matrix is enumerated.
pub const MAX_ENUMERATION_GENUS: usize = 12;

/// Largest genus for the symplectic-group comparison, which walks all transvections.
pub const MAX_SP_GENUS: usize = 6;

fn check_enumerable(genus: usize, max: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    if genus > max {
        return Err(Error::UnsupportedGenus {
            genus,
            reason: "too large for exhaustive enumeration",
        });
    }
    Ok(())
}

/// `σ_i` acting on a packed key.
#[inline]
pub fn apply_generator_key(key: u64, genus: usize, i: usize) -> u64 {
    let mask = low_mask(genus);
    let mut top = key & mask;
    let mut bot = key >> genus;
    if i == 1 {
        if bot & 1 == 0 {
            top ^= 1;
        }
    } else if i == 2 * genus + 1 {
        if (bot >> (genus - 1)) & 1 == 0 {
            top ^= 1 << (genus - 1);
        }
    } else if i.is_multiple_of(2) {
        let k = i / 2 - 1;
        if (top >> k) & 1 == 0 {
            bot ^= 1 << k;
        }
    } else {
        let k = i / 2 - 1;
        if (bot >> k) & 1 == (bot >> (k + 1)) & 1 {
            top ^= 3 << k;
        }
    }
    top | (bot << genus)
}

/// The Arf invariant of a packed key.
#[inline]
pub fn arf_key(key: u64, genus: usize) -> u8 {
    ((key & low_mask(genus) & (key >> genus)).count_ones() & 1) as u8
}

/// The transvection along the nonzero class `gamma` (packed like a key,
/// `a | b << g`) acting on a packed spin matrix.
#[inline]
pub fn transvection_key(key: u64, gamma: u64, genus: usize) -> u64 {
    let mask = low_mask(genus);
    let (top, bot) = (key & mask, key >> genus);
    let (ga, gb) = (gamma & mask, gamma >> genus);
    let value = (ga & gb).count_ones() + (ga & top).count_ones() + (gb & bot).count_ones();
    if value & 1 == 1 {
        key
    } else {
        (top ^ gb) | ((bot ^ ga) << genus)
    }
}

fn find(parent: &[AtomicU32], mut x: u32) -> u32 {
    loop {
        let p = parent[x as usize].load(Ordering::Relaxed);
        if p == x {
            return x;
        }
        let gp = parent[p as usize].load(Ordering::Relaxed);
        if gp != p {
            let _ = parent[x as usize].compare_exchange_weak(
                p,
                gp,
                Ordering::Relaxed,
                Ordering::Relaxed,
            );
        }
        x = gp;
    }
}

fn union(parent: &[AtomicU32], a: u32, b: u32) {
    let (mut a, mut b) = (a, b);
    loop {
        a = find(parent, a);
        b = find(parent, b);
        if a == b {
            return;
        }
        let (hi, lo) = if a > b { (a, b) } else { (b, a) };
        if parent[hi as usize]
            .compare_exchange(hi, lo, Ordering::AcqRel, Ordering::Relaxed)
            .is_ok()
        {
            return;
        }
    }
}

/// Connected components of the graph on `0..n` with edges `k -> step(k, j)`
/// for `j < moves`, labelled by their least member.
fn components<F>(n: usize, moves: usize, step: F) -> Vec<u32>
where
    F: Fn(u64, usize) -> u64 + Sync,
{
    let parent: Vec<AtomicU32> = (0..n as u32).map(AtomicU32::new).collect();
    (0..n as u64).into_par_iter().for_each(|k| {
        for j in 0..moves {
            let t = step(k, j);
            if t != k {
                union(&parent, k as u32, t as u32);
            }
        }
    });
    let roots: Vec<u32> = (0..n as u32)
        .into_par_iter()
        .map(|k| find(&parent, k))
        .collect();
    roots
}

/// The partition of all `2^{2g}` spin matrices into orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    genus: usize,
    labels: Vec<u32>,
    representatives: Vec<u32>,
    sizes: Vec<u64>,
}

impl OrbitPartition {
    fn from_labels(genus: usize, labels: Vec<u32>) -> Self {
        let representatives: Vec<u32> = labels
            .iter()
            .enumerate()
            .filter(|&(k, &l)| k as u32 == l)
            .map(|(_, &l)| l)
            .collect();
        let mut sizes = vec![0u64; representatives.len()];
        for &l in &labels {
            let idx = representatives
                .binary_search(&l)
                .expect("label is a representative");
            sizes[idx] += 1;
        }
        OrbitPartition {
            genus,
            labels,
            representatives,
            sizes,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }

    /// Least key of each orbit, ascending.
    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Least key in the orbit of every key.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Position of the orbit containing `key` in [`Self::representatives`].
    pub fn orbit_of(&self, key: u64) -> usize {
        let l = self.labels[key as usize];
        self.representatives
            .binary_search(&l)
            .expect("label is a representative")
    }

    pub fn orbit_of_matrix(&self, m: &SpinMatrix) -> Result<usize> {
        if m.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: m.genus(),
                right: self.genus,
            });
        }
        Ok(self.orbit_of(m.key().expect("enumerable genus fits a key")))
    }
}

/// Orbits of the generators on all spin matrices, via a parallel union-find
/// on the current rayon pool.
pub fn enumerate_orbits(genus: usize) -> Result<OrbitPartition> {
    check_enumerable(genus, MAX_ENUMERATION_GENUS)?;
    let n = 1usize << (2 * genus);
    let gens = generator_count(genus);
    let labels = components(n, gens, |k, j| apply_generator_key(k, genus, j + 1));
    Ok(OrbitPartition::from_labels(genus, labels))
}

/// Sequential breadth-first enumeration of the same partition.
pub fn enumerate_orbits_bfs(genus: usize) -> Result<OrbitPartition> {
    check_enumerable(genus, MAX_ENUMERATION_GENUS)?;
    let n = 1usize << (2 * genus);
    let gens = generator_count(genus);
    let mut labels = vec![u32::MAX; n];
    let mut queue = Vec::new();
    for start in 0..n {
        if labels[start] != u32::MAX {
            continue;
        }
        labels[start] = start as u32;
        queue.push(start as u64);
        while let Some(k) = queue.pop() {
            for i in 1..=gens {
                let t = apply_generator_key(k, genus, i) as usize;
                if labels[t] == u32::MAX {
                    labels[t] = start as u32;
                    queue.push(t as u64);
                }
            }
        }
    }
    Ok(OrbitPartition::from_labels(genus, labels))
}

/// Orbits of the full symplectic group, generated by all transvections.
pub fn enumerate_sp_orbits(genus: usize) -> Result<OrbitPartition> {
    check_enumerable(genus, MAX_SP_GENUS)?;
    let n = 1usize << (2 * genus);
    let labels = components(n, n - 1, |k, j| transvection_key(k, j as u64 + 1, genus));
    Ok(OrbitPartition::from_labels(genus, labels))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Closed-form size of the orbit of `M_m`.
pub fn predicted_orbit_size(genus: usize, m: usize) -> BigUint {
    if m == 0 {
        binomial(2 * genus + 2, genus + 1) / 2u32
    } else {
        binomial(2 * genus + 2, genus + 1 - 2 * m)
    }
}

/// Closed-form order of the isotropy subgroup of `M̄_m` in `S_{2g+2}`.
pub fn predicted_isotropy_order(genus: usize, m: usize) -> BigUint {
    if m == 0 {
        let f = factorial(genus + 1);
        &f * &f * 2u32
    } else {
        factorial(genus + 1 + 2 * m) * factorial(genus + 1 - 2 * m)
    }
}

fn serialize_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

fn serialize_decimal_opt<S: Serializer>(
    n: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_str_radix(10)),
        None => s.serialize_none(),
    }
}

/// One orbit in the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub genus: usize,
    pub class_index: usize,
    pub representative: SpinMatrix,
    pub size: u64,
    #[serde(serialize_with = "serialize_decimal")]
    pub stabilizer_order: BigUint,
    pub arf: u8,
    #[serde(serialize_with = "serialize_decimal")]
    pub predicted_size: BigUint,
    pub matches: bool,
}

/// Assigns each orbit of `partition` the class index of the representative
/// it contains and tabulates sizes, stabilizer orders, and Arf invariants.
///
/// Fails if the representatives do not hit every orbit exactly once or if
/// the Arf invariant is not constant on some orbit.
pub fn census(partition: &OrbitPartition) -> Result<Vec<CensusRow>> {
    let genus = partition.genus();
    let fail = |detail: String| Error::CheckFailed {
        check: "census".into(),
        detail,
    };
    let mut class_of_orbit = vec![None; partition.orbit_count()];
    for m in 0..=max_class_index(genus) {
        let rep = canonical_m(genus, m)?;
        let idx = partition.orbit_of_matrix(&rep)?;
        if let Some(prev) = class_of_orbit[idx] {
            return Err(fail(format!("M_{prev} and M_{m} share an orbit")));
        }
        class_of_orbit[idx] = Some(m);
    }
    if let Some(idx) = class_of_orbit.iter().position(Option::is_none) {
        let key = partition.representatives()[idx];
        return Err(fail(format!(
            "orbit of {} contains no representative",
            SpinMatrix::from_key(genus, key as u64)?
        )));
    }

    let mut arf_of_orbit: Vec<Option<u8>> = vec![None; partition.orbit_count()];
    for (key, _) in partition.labels().iter().enumerate() {
        let idx = partition.orbit_of(key as u64);
        let a = arf_key(key as u64, genus);
        match arf_of_orbit[idx] {
            None => arf_of_orbit[idx] = Some(a),
            Some(b) if b != a => {
                return Err(fail(format!("Arf invariant varies on orbit {idx}")));
            }
            _ => {}
        }
    }

    let group = factorial(2 * genus + 2);
    let mut rows: Vec<CensusRow> = class_of_orbit
        .iter()
        .enumerate()
        .map(|(idx, m)| {
            let m = m.expect("every orbit classified");
            let size = partition.sizes()[idx];
            let predicted = predicted_orbit_size(genus, m);
            CensusRow {
                genus,
                class_index: m,
                representative: canonical_m(genus, m).expect("class index in range"),
                size,
                stabilizer_order: &group / size,
                arf: arf_of_orbit[idx].expect("orbit is non-empty"),
                matches: predicted == BigUint::from(size),
                predicted_size: predicted,
            }
        })
        .collect();
    rows.sort_by_key(|r| r.class_index);
    Ok(rows)
}

/// Checks on every spin matrix that replaying the reduction word reaches the
/// reported representative and that the class index agrees with the
/// enumerated partition; returns the number of matrices checked.
pub fn check_reduce_against_partition(partition: &OrbitPartition) -> Result<u64> {
    let genus = partition.genus();
    let rows = census(partition)?;
    let mut class_of_orbit = vec![0usize; partition.orbit_count()];
    for row in &rows {
        let key = row
            .representative
            .key()
            .expect("enumerable genus fits a key");
        class_of_orbit[partition.orbit_of(key)] = row.class_index;
    }
    let n = partition.labels().len() as u64;
    (0..n).into_par_iter().try_for_each(|key| {
        let m = SpinMatrix::from_key(genus, key)?;
        let trace = reduce(&m)?;
        let got = trace.class_index;
        if apply_word(&m, &trace.total_word)? != canonical_m(genus, got)? {
            return Err(Error::CheckFailed {
                check: "reduce-oracle".into(),
                detail: format!("replaying the word for {m} does not reach M_{got}"),
            });
        }
        let want = class_of_orbit[partition.orbit_of(key)];
        if got != want {
            return Err(Error::CheckFailed {
                check: "reduce-oracle".into(),
                detail: format!("{m} reduced to M_{got} but lies in the orbit of M_{want}"),
            });
        }
        Ok(())
    })?;
    Ok(n)
}

/// Which generators fix `M̄_m`, compared against the expected isotropy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropyReport {
    pub genus: usize,
    pub class_index: usize,
    pub matrix: SpinMatrix,
    pub fixing: Vec<usize>,
    pub moving: Vec<usize>,
    pub expected_moving: Option<usize>,
    pub tau_fixes: Option<bool>,
    pub tau_swaps_halves: Option<bool>,
    pub in_class: bool,
    #[serde(serialize_with = "serialize_decimal")]
    pub predicted_order: BigUint,
    #[serde(serialize_with = "serialize_decimal_opt")]
    pub observed_order: Option<BigUint>,
    pub passes: bool,
}

/// Checks the isotropy of `M̄_m`: exactly the generators other than
/// `σ_{g+1+2m}` fix it, `τ` fixes `M̄_0` and swaps the two halves of
/// `{1, …, 2g+2}`, and `M̄_m` lies in the class of `M_m`.
///
/// Given a partition, also compares the stabilizer order `(2g+2)!/|orbit|`
/// with the order of the subgroup generated by the fixing elements.
pub fn verify_isotropy(
    genus: usize,
    m: usize,
    partition: Option<&OrbitPartition>,
) -> Result<IsotropyReport> {
    let matrix = normal_bar_m(genus, m)?;
    let gens = generator_count(genus);
    let (fixing, moving): (Vec<usize>, Vec<usize>) = (1..=gens)
        .partition(|&i| crate::braid::apply_generator(&matrix, i).expect("in range") == matrix);
    let expected_moving = Some(genus + 1 + 2 * m).filter(|&i| i <= gens);

    let (tau_fixes, tau_swaps_halves) = if m == 0 {
        let tau = tau_word(genus);
        let fixes = apply_word(&matrix, &tau)? == matrix;
        let perm = permutation_of(&tau, genus)?;
        let half = genus + 1;
        let swaps = (1..=half).all(|k| perm.image(k) > half);
        (Some(fixes), Some(swaps))
    } else {
        (None, None)
    };

    let in_class = match partition {
        Some(p) => p.orbit_of_matrix(&matrix)? == p.orbit_of_matrix(&canonical_m(genus, m)?)?,
        None => classify(&matrix)? == m,
    };

    let predicted_order = predicted_isotropy_order(genus, m);
    let observed_order = match partition {
        Some(p) => {
            let size = p.sizes()[p.orbit_of_matrix(&matrix)?];
            Some(factorial(2 * genus + 2) / size)
        }
        None => None,
    };

    let moving_ok = moving == expected_moving.into_iter().collect::<Vec<_>>();
    let passes = moving_ok
        && tau_fixes.unwrap_or(true)
        && tau_swaps_halves.unwrap_or(true)
        && in_class
        && observed_order
            .as_ref()
            .is_none_or(|o| *o == predicted_order);

    Ok(IsotropyReport {
        genus,
        class_index: m,
        matrix,
        fixing,
        moving,
        expected_moving,
        tau_fixes,
        tau_swaps_halves,
        in_class,
        predicted_order,
        observed_order,
        passes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::apply_generator;
    use crate::gf2::{arf, dehn_twist, HomologyClass};

    #[test]
    fn packed_generators_match_matrix_action() {
        for g in 1..=4 {
            for key in 0..1u64 << (2 * g) {
                let m = SpinMatrix::from_key(g, key).unwrap();
                for i in 1..=generator_count(g) {
                    let want = apply_generator(&m, i).unwrap().key().unwrap();
                    assert_eq!(
                        apply_generator_key(key, g, i),
                        want,
                        "g={g} key={key} i={i}"
                    );
                }
                assert_eq!(arf_key(key, g), arf(&m).as_u8());
            }
        }
    }

    #[test]
    fn packed_transvections_match_dehn_twist() {
        for g in 1..=3 {
            for key in 0..1u64 << (2 * g) {
                let m = SpinMatrix::from_key(g, key).unwrap();
                for gamma in 1..1u64 << (2 * g) {
                    let c = HomologyClass::from_key(g, gamma).unwrap();
                    let want = dehn_twist(&m, &c).unwrap().key().unwrap();
                    assert_eq!(transvection_key(key, gamma, g), want);
                }
            }
        }
    }

    #[test]
    fn union_find_matches_bfs() {
        for g in 1..=7 {
            assert_eq!(
                enumerate_orbits(g).unwrap(),
                enumerate_orbits_bfs(g).unwrap(),
                "g={g}"
            );
        }
    }

    #[test]
    fn labels_are_orbit_minima() {
        let p = enumerate_orbits(4).unwrap();
        for (key, &l) in p.labels().iter().enumerate() {
            assert!(l as usize <= key);
            assert_eq!(p.labels()[l as usize], l);
        }
        assert_eq!(p.sizes().iter().sum::<u64>(), 1 << 8);
    }

    #[test]
    fn small_genus_counts() {
        assert_eq!(enumerate_orbits(1).unwrap().orbit_count(), 2);
        assert_eq!(enumerate_orbits(2).unwrap().orbit_count(), 2);
        let mut sizes = enumerate_orbits(3).unwrap().sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 28, 35]);
    }

    #[test]
    fn census_genus_three() {
        let rows = census(&enumerate_orbits(3).unwrap()).unwrap();
        let summary: Vec<_> = rows
            .iter()
            .map(|r| (r.class_index, r.size, r.arf))
            .collect();
        assert_eq!(summary, vec![(0, 35, 0), (1, 28, 1), (2, 1, 0)]);
        assert!(rows.iter().all(|r| r.matches));
        assert_eq!(rows[2].stabilizer_order, factorial(8));
    }

    #[test]
    fn predicted_sizes_sum_to_total() {
        for g in 1..=30 {
            let total: BigUint = (0..=max_class_index(g))
                .map(|m| predicted_orbit_size(g, m))
                .sum();
            assert_eq!(total, BigUint::one() << (2 * g));
        }
    }

    #[test]
    fn isotropy_orders_times_sizes() {
        for g in 3..=30 {
            for m in 0..=max_class_index(g) {
                assert_eq!(
                    predicted_isotropy_order(g, m) * predicted_orbit_size(g, m),
                    factorial(2 * g + 2)
                );
            }
        }
    }

    #[test]
    fn isotropy_with_partition() {
        for g in 3..=6 {
            let p = enumerate_orbits(g).unwrap();
            for m in 0..=max_class_index(g) {
                let r = verify_isotropy(g, m, Some(&p)).unwrap();
                assert!(r.passes, "{r:?}");
            }
        }
    }

    #[test]
    fn sp_orbits_split_by_arf() {
        for g in 1..=4 {
            let p = enumerate_sp_orbits(g).unwrap();
            assert_eq!(p.orbit_count(), 2);
            let even = (1u64 << (g - 1)) * ((1 << g) + 1);
            let odd = (1u64 << (g - 1)) * ((1 << g) - 1);
            assert_eq!(p.sizes(), &[even, odd]);
        }
    }

    #[test]
    fn reduce_agrees_with_enumeration() {
        for g in 3..=6 {
            let p = enumerate_orbits(g).unwrap();
            assert_eq!(check_reduce_against_partition(&p).unwrap(), 1 << (2 * g));
        }
    }

    #[test]
    fn genus_limits() {
        assert!(enumerate_orbits(0).is_err());
        assert!(enumerate_orbits(MAX_ENUMERATION_GENUS + 1).is_err());
        assert!(enumerate_sp_orbits(MAX_SP_GENUS + 1).is_err());
    }
}
