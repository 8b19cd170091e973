//! Bit-packed linear algebra over Z/2 for the first homology of a closed
//! genus-g surface.
//!
//! A homology class is stored as two bit rows `a` and `b` holding the
//! coefficients of the symplectic basis `α_1..α_g` and `β_1..β_g`. A spin
//! structure is stored as its [`SpinMatrix`]: the values `c(α_k)` on the top
//! row and `c(β_k)` on the bottom row.
//!
//! Column `k` (1-based) lives in bit `k - 1` of a row. Rows are packed into
//! 64-bit words, spilling onto further words for genus above 64.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Largest genus whose spin matrices fit a single `u64` key.
pub const MAX_PACKED_GENUS: usize = 32;

/// An element of Z/2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2(bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub const fn new(bit: bool) -> Self {
        Z2(bit)
    }

    pub const fn is_one(self) -> bool {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        !self.0
    }

    pub const fn as_u8(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Z2 {
    fn from(bit: bool) -> Self {
        Z2(bit)
    }
}

impl From<Z2> for u8 {
    fn from(x: Z2) -> u8 {
        x.as_u8()
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Z2 {
    type Output = Z2;
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Z2 {
    fn add_assign(&mut self, rhs: Z2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Z2 {
    type Output = Z2;
    fn mul(self, rhs: Z2) -> Z2 {
        Z2(self.0 & rhs.0)
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

impl Serialize for Z2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.as_u8())
    }
}

/// A fixed-length vector over Z/2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: smallvec![0; len.div_ceil(64).max(1)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut row = BitRow::zeros(bits.len());
        for (k, bit) in bits.into_iter().enumerate() {
            if bit {
                row.words[k / 64] |= 1 << (k % 64);
            }
        }
        row
    }

    /// Low `len` bits of `word`; `len <= 64`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64, "from_word supports at most 64 bits, got {len}");
        let mut row = BitRow::zeros(len);
        row.words[0] = word & low_mask(len);
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 0-based position `k`.
    pub fn get(&self, k: usize) -> bool {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    pub fn set(&mut self, k: usize, bit: bool) {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        let mask = 1u64 << (k % 64);
        if bit {
            self.words[k / 64] |= mask;
        } else {
            self.words[k / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, k: usize) {
        assert!(k < self.len, "bit {k} out of range for length {}", self.len);
        self.words[k / 64] ^= 1 << (k % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// First word of the packed representation (bits 0..64).
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Parity of the coordinate-wise product, i.e. the standard dot product.
    pub fn dot(&self, other: &BitRow) -> Z2 {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Z2(ones & 1 == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |k| self.get(k))
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

fn parse_row(text: &str) -> Result<BitRow> {
    let bits = text
        .chars()
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse(format!(
                "unexpected character {other:?} in bit row {text:?}"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BitRow::from_bits(bits))
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A class `Σ a_k α_k + b_k β_k` in `H_1(Σ_g; Z/2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomologyClass {
    a: BitRow,
    b: BitRow,
}

impl HomologyClass {
    pub fn zero(genus: usize) -> Self {
        HomologyClass {
            a: BitRow::zeros(genus),
            b: BitRow::zeros(genus),
        }
    }

    pub fn from_rows(a: BitRow, b: BitRow) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::GenusMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if a.is_empty() {
            return Err(Error::ZeroGenus);
        }
        Ok(HomologyClass { a, b })
    }

    /// `α_i`, 1-based.
    pub fn alpha(genus: usize, i: usize) -> Result<Self> {
        check_column(genus, i)?;
        let mut x = HomologyClass::zero(genus);
        x.a.set(i - 1, true);
        Ok(x)
    }

    /// `β_i`, 1-based.
    pub fn beta(genus: usize, i: usize) -> Result<Self> {
        check_column(genus, i)?;
        let mut x = HomologyClass::zero(genus);
        x.b.set(i - 1, true);
        Ok(x)
    }

    /// Unpacks `a` from the low `genus` bits of `key` and `b` from the next `genus`.
    pub fn from_key(genus: usize, key: u64) -> Result<Self> {
        check_packable(genus)?;
        Ok(HomologyClass {
            a: BitRow::from_word(genus, key),
            b: BitRow::from_word(genus, key >> genus),
        })
    }

    pub fn genus(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &BitRow {
        &self.a
    }

    pub fn b(&self) -> &BitRow {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl Add<&HomologyClass> for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        assert_eq!(
            self.genus(),
            rhs.genus(),
            "genus mismatch in class addition"
        );
        let mut out = self.clone();
        out.a.xor_assign(&rhs.a);
        out.b.xor_assign(&rhs.b);
        out
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// A spin structure, recorded by its values on the symplectic basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinMatrix {
    top: BitRow,
    bottom: BitRow,
}

impl SpinMatrix {
    pub fn zero(genus: usize) -> Self {
        SpinMatrix {
            top: BitRow::zeros(genus),
            bottom: BitRow::zeros(genus),
        }
    }

    pub fn from_rows(top: BitRow, bottom: BitRow) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Parse(format!(
                "rows have unequal lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top.is_empty() {
            return Err(Error::ZeroGenus);
        }
        Ok(SpinMatrix { top, bottom })
    }

    /// Builds a matrix from `(c(α_k), c(β_k))` column pairs.
    pub fn from_columns<I: IntoIterator<Item = (bool, bool)>>(columns: I) -> Result<Self> {
        let (top, bottom): (Vec<bool>, Vec<bool>) = columns.into_iter().unzip();
        SpinMatrix::from_rows(BitRow::from_bits(top), BitRow::from_bits(bottom))
    }

    /// Parses `topRow/bottomRow`, e.g. `11111/10111`, and checks the genus.
    pub fn parse_with_genus(text: &str, genus: usize) -> Result<Self> {
        let m: SpinMatrix = text.parse()?;
        if m.genus() != genus {
            return Err(Error::Parse(format!(
                "matrix {text:?} has {} columns, expected genus {genus}",
                m.genus()
            )));
        }
        Ok(m)
    }

    /// Top row in the low `genus` bits, bottom row in the next `genus`.
    pub fn from_key(genus: usize, key: u64) -> Result<Self> {
        check_packable(genus)?;
        Ok(SpinMatrix {
            top: BitRow::from_word(genus, key),
            bottom: BitRow::from_word(genus, key >> genus),
        })
    }

    /// Dense enumeration key; `None` above [`MAX_PACKED_GENUS`].
    pub fn key(&self) -> Option<u64> {
        let g = self.genus();
        (g <= MAX_PACKED_GENUS).then(|| self.top.low_word() | (self.bottom.low_word() << g))
    }

    pub fn genus(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &BitRow {
        &self.top
    }

    pub fn bottom(&self) -> &BitRow {
        &self.bottom
    }

    /// `c(α_k)`, 1-based column.
    pub fn alpha_value(&self, k: usize) -> Z2 {
        Z2(self.top.get(k - 1))
    }

    /// `c(β_k)`, 1-based column.
    pub fn beta_value(&self, k: usize) -> Z2 {
        Z2(self.bottom.get(k - 1))
    }

    /// Column `k` (1-based) as `(c(α_k), c(β_k))`.
    pub fn column(&self, k: usize) -> (bool, bool) {
        (self.top.get(k - 1), self.bottom.get(k - 1))
    }

    pub fn set_column(&mut self, k: usize, column: (bool, bool)) {
        self.top.set(k - 1, column.0);
        self.bottom.set(k - 1, column.1);
    }

    pub fn flip_alpha(&mut self, k: usize) {
        self.top.flip(k - 1);
    }

    pub fn flip_beta(&mut self, k: usize) {
        self.bottom.flip(k - 1);
    }

    pub fn columns(&self) -> impl Iterator<Item = (bool, bool)> + '_ {
        (1..=self.genus()).map(move |k| self.column(k))
    }

    /// All `2^{2g}` spin matrices in key order.
    pub fn all(genus: usize) -> Result<impl Iterator<Item = SpinMatrix>> {
        check_packable(genus)?;
        Ok((0..1u64 << (2 * genus))
            .map(move |key| SpinMatrix::from_key(genus, key).expect("genus checked above")))
    }
}

impl fmt::Display for SpinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl fmt::Debug for SpinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinMatrix({self})")
    }
}

impl FromStr for SpinMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (top, bottom) = text
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected `topRow/bottomRow`, got {text:?}")))?;
        let top = parse_row(top)?;
        let bottom = parse_row(bottom)?;
        if top.len() != bottom.len() {
            return Err(Error::Parse(format!(
                "rows of {text:?} have unequal lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        SpinMatrix::from_rows(top, bottom)
    }
}

impl Serialize for SpinMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The twist classes used by the generators: `α_i`, `β_i`, or `β_j + β_{j+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    Alpha(usize),
    Beta(usize),
    BetaPair(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Alpha(i) => write!(f, "alpha_{i}"),
            BasisLabel::Beta(i) => write!(f, "beta_{i}"),
            BasisLabel::BetaPair(j) => write!(f, "beta_{j}+beta_{}", j + 1),
        }
    }
}

pub fn class_of(label: BasisLabel, genus: usize) -> Result<HomologyClass> {
    match label {
        BasisLabel::Alpha(i) => HomologyClass::alpha(genus, i),
        BasisLabel::Beta(i) => HomologyClass::beta(genus, i),
        BasisLabel::BetaPair(j) => {
            if j == 0 || j + 1 > genus {
                return Err(Error::IndexOutOfRange { index: j, genus });
            }
            let mut x = HomologyClass::beta(genus, j)?;
            x.b.set(j, true);
            Ok(x)
        }
    }
}

fn check_column(genus: usize, i: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    if i == 0 || i > genus {
        return Err(Error::IndexOutOfRange { index: i, genus });
    }
    Ok(())
}

fn check_packable(genus: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    if genus > MAX_PACKED_GENUS {
        return Err(Error::UnsupportedGenus {
            genus,
            reason: "packed keys hold at most 32 columns",
        });
    }
    Ok(())
}

fn check_same_genus(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::GenusMismatch { left, right });
    }
    Ok(())
}

/// The mod-2 intersection pairing `x · y`.
pub fn intersection(x: &HomologyClass, y: &HomologyClass) -> Result<Z2> {
    check_same_genus(x.genus(), y.genus())?;
    Ok(x.a.dot(&y.b) + x.b.dot(&y.a))
}

/// `c(x) = Σ a_k b_k + Σ (a_k c(α_k) + b_k c(β_k))`.
pub fn evaluate(m: &SpinMatrix, x: &HomologyClass) -> Result<Z2> {
    check_same_genus(m.genus(), x.genus())?;
    Ok(x.a.dot(&x.b) + x.a.dot(&m.top) + x.b.dot(&m.bottom))
}

/// `Arf(c) = Σ c(α_k) c(β_k)`.
pub fn arf(m: &SpinMatrix) -> Z2 {
    m.top.dot(&m.bottom)
}

/// The spin structure `c ∘ T_γ`.
///
/// `c(T_γ x) = c(x) + (x·γ)(c(γ) + 1)`. On the basis, `α_k · γ = b_k(γ)` and
/// `β_k · γ = a_k(γ)`, so when `c(γ) = 0` the top row picks up `b(γ)` and the
/// bottom row picks up `a(γ)`; when `c(γ) = 1` nothing changes.
pub fn dehn_twist(m: &SpinMatrix, gamma: &HomologyClass) -> Result<SpinMatrix> {
    let shift = evaluate(m, gamma)? + Z2::ONE;
    let mut out = m.clone();
    if shift.is_one() {
        out.top.xor_assign(&gamma.b);
        out.bottom.xor_assign(&gamma.a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> SpinMatrix {
        text.parse().unwrap()
    }

    /// `x + (x·γ)γ`, the transvection on homology.
    fn transvect(x: &HomologyClass, gamma: &HomologyClass) -> HomologyClass {
        if intersection(x, gamma).unwrap().is_one() {
            x + gamma
        } else {
            x.clone()
        }
    }

    #[test]
    fn z2_field_laws() {
        for a in [Z2::ZERO, Z2::ONE] {
            assert_eq!(a + a, Z2::ZERO);
            for b in [Z2::ZERO, Z2::ONE] {
                assert_eq!((a + b).is_one(), a.is_one() ^ b.is_one());
                assert_eq!((a * b).is_one(), a.is_one() & b.is_one());
            }
        }
    }

    #[test]
    fn intersection_on_basis() {
        let a1 = HomologyClass::alpha(3, 1).unwrap();
        let a2 = HomologyClass::alpha(3, 2).unwrap();
        let b1 = HomologyClass::beta(3, 1).unwrap();
        assert_eq!(intersection(&a1, &b1).unwrap(), Z2::ONE);
        assert_eq!(intersection(&a1, &a2).unwrap(), Z2::ZERO);

        let x = &HomologyClass::alpha(2, 1).unwrap() + &HomologyClass::beta(2, 2).unwrap();
        assert_eq!(intersection(&x, &x).unwrap(), Z2::ZERO);
    }

    #[test]
    fn genus_mismatch_is_rejected() {
        let x = HomologyClass::alpha(2, 1).unwrap();
        let y = HomologyClass::alpha(3, 1).unwrap();
        assert_eq!(
            intersection(&x, &y),
            Err(Error::GenusMismatch { left: 2, right: 3 })
        );
        assert!(evaluate(&SpinMatrix::zero(3), &x).is_err());
        assert!(dehn_twist(&SpinMatrix::zero(3), &x).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let x = &HomologyClass::alpha(3, 1).unwrap() + &HomologyClass::beta(3, 1).unwrap();
        let mat = m("111/101");
        assert_eq!(evaluate(&mat, &x).unwrap(), Z2::ONE);
        // quadratic refinement route: c(α_1) + c(β_1) + α_1·β_1 = 1 + 1 + 1
        assert_eq!(
            mat.alpha_value(1) + mat.beta_value(1) + Z2::ONE,
            evaluate(&mat, &x).unwrap()
        );
        assert_eq!(evaluate(&mat, &HomologyClass::zero(3)).unwrap(), Z2::ZERO);

        let y = &HomologyClass::alpha(2, 1).unwrap() + &HomologyClass::beta(2, 1).unwrap();
        assert_eq!(evaluate(&SpinMatrix::zero(2), &y).unwrap(), Z2::ONE);
    }

    #[test]
    fn arf_examples() {
        assert_eq!(arf(&m("111/101")), Z2::ZERO);
        assert_eq!(arf(&SpinMatrix::zero(4)), Z2::ZERO);
        assert_eq!(arf(&m("1000/1000")), Z2::ONE);
    }

    #[test]
    fn twist_examples() {
        // γ = α_2 with c(α_2) = 0: only c(β_2) flips.
        let mat = m("101/110");
        let out = dehn_twist(&mat, &HomologyClass::alpha(3, 2).unwrap()).unwrap();
        assert_eq!(out, m("101/100"));

        assert_eq!(dehn_twist(&mat, &HomologyClass::zero(3)).unwrap(), mat);

        // γ = β_1 + β_2 with c(β_1) + c(β_2) = 0: c(α_1), c(α_2) flip.
        let mat = m("010/110");
        let gamma = class_of(BasisLabel::BetaPair(1), 3).unwrap();
        assert_eq!(dehn_twist(&mat, &gamma).unwrap(), m("100/110"));
    }

    #[test]
    fn class_of_labels() {
        let x = class_of(BasisLabel::Alpha(2), 3).unwrap();
        assert_eq!(x.to_string(), "010/000");
        let x = class_of(BasisLabel::BetaPair(1), 3).unwrap();
        assert_eq!(x.to_string(), "000/110");
        let x = class_of(BasisLabel::Beta(3), 3).unwrap();
        assert_eq!(x.to_string(), "000/001");

        assert!(class_of(BasisLabel::Alpha(0), 3).is_err());
        assert!(class_of(BasisLabel::Beta(4), 3).is_err());
        assert!(class_of(BasisLabel::BetaPair(3), 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        let mat = m("11111/10111");
        assert_eq!(mat.genus(), 5);
        assert_eq!(mat.to_string(), "11111/10111");
        assert_eq!(mat.column(2), (true, false));

        assert!("111/10".parse::<SpinMatrix>().is_err());
        assert!("1a1/101".parse::<SpinMatrix>().is_err());
        assert!("111101".parse::<SpinMatrix>().is_err());
        assert!("/".parse::<SpinMatrix>().is_err());
        assert!(SpinMatrix::parse_with_genus("111/101", 4).is_err());
    }

    #[test]
    fn wide_rows_span_several_words() {
        let g = 70;
        let mut mat = SpinMatrix::zero(g);
        mat.flip_alpha(70);
        mat.flip_beta(65);
        assert_eq!(mat.column(70), (true, false));
        assert_eq!(mat.column(65), (false, true));
        assert_eq!(mat.key(), None);
        let text = mat.to_string();
        assert_eq!(text.parse::<SpinMatrix>().unwrap(), mat);

        let x = HomologyClass::from_rows(BitRow::zeros(g), {
            let mut b = BitRow::zeros(g);
            b.set(69, true);
            b
        })
        .unwrap();
        // x = β_70, c(β_70) = 0, so the twist flips c(α_70).
        let out = dehn_twist(&mat, &x).unwrap();
        assert_eq!(out.column(70), (false, false));
    }

    #[test]
    fn keys_round_trip() {
        for mat in SpinMatrix::all(3).unwrap() {
            let key = mat.key().unwrap();
            assert_eq!(SpinMatrix::from_key(3, key).unwrap(), mat);
        }
        assert_eq!(SpinMatrix::all(3).unwrap().count(), 64);
    }

    #[test]
    fn basis_values_reproduce_matrix() {
        for mat in SpinMatrix::all(3).unwrap() {
            for k in 1..=3 {
                let a = HomologyClass::alpha(3, k).unwrap();
                let b = HomologyClass::beta(3, k).unwrap();
                assert_eq!(evaluate(&mat, &a).unwrap(), mat.alpha_value(k));
                assert_eq!(evaluate(&mat, &b).unwrap(), mat.beta_value(k));
            }
        }
    }

    #[test]
    fn twist_matches_homology_transvection_exhaustively() {
        // Independent route: evaluate c on T_γ applied to each basis class.
        for g in 1..=3 {
            for mat in SpinMatrix::all(g).unwrap() {
                for key in 0..1u64 << (2 * g) {
                    let gamma = HomologyClass::from_key(g, key).unwrap();
                    let out = dehn_twist(&mat, &gamma).unwrap();
                    for k in 1..=g {
                        let a = HomologyClass::alpha(g, k).unwrap();
                        let b = HomologyClass::beta(g, k).unwrap();
                        let ta = evaluate(&mat, &transvect(&a, &gamma)).unwrap();
                        let tb = evaluate(&mat, &transvect(&b, &gamma)).unwrap();
                        assert_eq!(out.alpha_value(k), ta);
                        assert_eq!(out.beta_value(k), tb);
                    }
                }
            }
        }
    }
}
