//! The action of the symmetric group `S_{2g+2}` on spin matrices.
//!
//! The adjacent transposition `σ_i = (i, i+1)` acts as a Dehn twist:
//! `σ_1 ↦ T_{β_1}`, `σ_{2g+1} ↦ T_{β_g}`, `σ_{2m} ↦ T_{α_m}` and
//! `σ_{2j+1} ↦ T_{β_j + β_{j+1}}`. Words are right actions folded
//! left to right, so `M ∘ (w1 w2) = (M ∘ w1) ∘ w2`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{BasisLabel, SpinMatrix};

/// Number of generators `2g + 1` for genus `g`.
pub fn generator_count(genus: usize) -> usize {
    2 * genus + 1
}

/// A generator `σ_i`, validated against a genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorIndex(usize);

impl GeneratorIndex {
    pub fn new(index: usize, genus: usize) -> Result<Self> {
        check_generator(index, genus)?;
        Ok(GeneratorIndex(index))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// The class whose twist realizes this generator.
    pub fn twist_label(self, genus: usize) -> BasisLabel {
        let i = self.0;
        if i == 1 {
            BasisLabel::Beta(1)
        } else if i == 2 * genus + 1 {
            BasisLabel::Beta(genus)
        } else if i.is_multiple_of(2) {
            BasisLabel::Alpha(i / 2)
        } else {
            BasisLabel::BetaPair((i - 1) / 2)
        }
    }
}

fn check_generator(index: usize, genus: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    let max = generator_count(genus);
    if index == 0 || index > max {
        return Err(Error::GeneratorOutOfRange { index, max });
    }
    Ok(())
}

/// A finite sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(Vec<usize>);

impl GeneratorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        GeneratorWord(letters)
    }

    pub fn empty() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &GeneratorWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn validate(&self, genus: usize) -> Result<()> {
        self.0.iter().try_for_each(|&i| check_generator(i, genus))
    }
}

impl From<Vec<usize>> for GeneratorWord {
    fn from(letters: Vec<usize>) -> Self {
        GeneratorWord(letters)
    }
}

/// Comma-separated indices, e.g. `8,10`; the empty word prints as the empty string.
impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(GeneratorWord::empty());
        }
        text.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GeneratorWord)
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Applies `σ_i` in place following the generator action table.
///
/// Panics if `i` is out of range; see [`apply_generator`] for the checked form.
pub fn apply_generator_mut(m: &mut SpinMatrix, i: usize) {
    let g = m.genus();
    assert!(
        i >= 1 && i <= 2 * g + 1,
        "generator {i} out of range for genus {g}"
    );
    if i == 1 {
        if m.beta_value(1).is_zero() {
            m.flip_alpha(1);
        }
    } else if i == 2 * g + 1 {
        if m.beta_value(g).is_zero() {
            m.flip_alpha(g);
        }
    } else if i.is_multiple_of(2) {
        let k = i / 2;
        if m.alpha_value(k).is_zero() {
            m.flip_beta(k);
        }
    } else {
        let j = (i - 1) / 2;
        if m.beta_value(j) == m.beta_value(j + 1) {
            m.flip_alpha(j);
            m.flip_alpha(j + 1);
        }
    }
}

pub fn apply_generator(m: &SpinMatrix, i: usize) -> Result<SpinMatrix> {
    check_generator(i, m.genus())?;
    let mut out = m.clone();
    apply_generator_mut(&mut out, i);
    Ok(out)
}

pub fn apply_word(m: &SpinMatrix, word: &GeneratorWord) -> Result<SpinMatrix> {
    word.validate(m.genus())?;
    let mut out = m.clone();
    for &i in word.letters() {
        apply_generator_mut(&mut out, i);
    }
    Ok(out)
}

/// `true` if every generator fixes `m`.
pub fn is_fixed_by_all(m: &SpinMatrix) -> bool {
    (1..=generator_count(m.genus())).all(|i| {
        let mut x = m.clone();
        apply_generator_mut(&mut x, i);
        x == *m
    })
}

/// The word for the flip `τ = (1, 2g+2)(2, 2g+1)…(g+1, g+2)`, written as the
/// product over `i = 1..=g+1` of `σ_i σ_{i+1} … σ_{2g+2-i} … σ_{i+1} σ_i`.
pub fn tau_word(genus: usize) -> GeneratorWord {
    let mut word = GeneratorWord::empty();
    for i in 1..=genus + 1 {
        let peak = 2 * genus + 2 - i;
        for s in i..peak {
            word.push(s);
        }
        word.push(peak);
        for s in (i..peak).rev() {
            word.push(s);
        }
    }
    word
}

/// A bijection on `{1, …, n}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `images[k-1]` is the image of `k`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i, i+1)` on `{1, …, n}`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Product of disjoint-or-not cycles, applied in the order given.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for cycle in cycles {
            let mut c = Permutation::identity(n);
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry outside 1..={n}"
                    )));
                }
                c.images[x - 1] = y;
            }
            let c = Permutation::from_images(c.images)?;
            p = p.then(&c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self` first, then `other`: `k ↦ other(self(k))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.image(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, x) in self.images.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let images = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// The permutation of `S_{2g+2}` a word projects to, composed in application order.
pub fn permutation_of(word: &GeneratorWord, genus: usize) -> Result<Permutation> {
    word.validate(genus)?;
    let n = 2 * genus + 2;
    let mut images: Vec<usize> = (1..=n).collect();
    // `p.then(σ_i)` relabels the values i and i+1.
    for &i in word.letters() {
        for x in images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    Ok(Permutation { images })
}

/// A word whose permutation is `p`, from a deterministic bubble sort.
pub fn word_for_permutation(p: &Permutation) -> Result<GeneratorWord> {
    let p = Permutation::from_images(p.images.clone())?;
    let n = p.degree();
    if n < 2 {
        return Ok(GeneratorWord::empty());
    }
    // Sorting the image list by position swaps: p ∘ t_1 ∘ … ∘ t_r = id, hence
    // p = t_1 then t_2 … then t_r in application order.
    let mut images = p.images;
    let mut word = GeneratorWord::empty();
    loop {
        let mut swapped = false;
        for k in 0..n - 1 {
            if images[k] > images[k + 1] {
                images.swap(k, k + 1);
                word.push(k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(word)
}
