//! Orbit representatives, alternative normal forms, and the traced reduction
//! of an arbitrary spin matrix to its representative.
//!
//! Columns are 1-based throughout. A column is written `(c(α_k), c(β_k))`.

use std::fmt;

use serde::Serialize;

use crate::braid::{apply_generator_mut, GeneratorWord};
use crate::error::{Error, Result};
use crate::gf2::SpinMatrix;

const C00: (bool, bool) = (false, false);
const C10: (bool, bool) = (true, false);
const C01: (bool, bool) = (false, true);
const C11: (bool, bool) = (true, true);

/// Largest class index `⌈g/2⌉`.
pub fn max_class_index(genus: usize) -> usize {
    genus.div_ceil(2)
}

/// The `2 × (2i-1)` block with an all-ones top row and bottom row `1,0,1,…,0,1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockA {
    index: usize,
}

impl BlockA {
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::IndexOutOfRange { index, genus: 0 });
        }
        Ok(BlockA { index })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn width(&self) -> usize {
        2 * self.index - 1
    }

    pub fn columns(&self) -> impl Iterator<Item = (bool, bool)> {
        (0..self.width()).map(|k| (true, k % 2 == 0))
    }
}

/// Column-wise concatenation of blocks; `A_0` is empty.
#[derive(Default)]
struct Columns(Vec<(bool, bool)>);

impl Columns {
    fn block(mut self, i: usize) -> Self {
        if i > 0 {
            self.0.extend(BlockA { index: i }.columns());
        }
        self
    }

    fn cols(mut self, cols: &[(bool, bool)]) -> Self {
        self.0.extend_from_slice(cols);
        self
    }

    fn finish(self, genus: usize) -> SpinMatrix {
        assert_eq!(self.0.len(), genus, "assembled width does not match genus");
        SpinMatrix::from_columns(self.0).expect("non-empty columns")
    }
}

fn check_class(genus: usize, m: usize) -> Result<()> {
    if genus == 0 {
        return Err(Error::ZeroGenus);
    }
    let max = max_class_index(genus);
    if m > max {
        return Err(Error::ClassOutOfRange { m, genus, max });
    }
    Ok(())
}

/// The orbit representative `M_m = (A_m | 0)`; `M_0` is the zero matrix.
pub fn canonical_m(genus: usize, m: usize) -> Result<SpinMatrix> {
    check_class(genus, m)?;
    let used = if m == 0 { 0 } else { 2 * m - 1 };
    Ok(Columns::default()
        .block(m)
        .cols(&vec![C00; genus - used])
        .finish(genus))
}

/// The alternative representative `M̄_m`, whose isotropy group is generated by
/// every `σ_i` except `σ_{g+1+2m}` (plus the flip `τ` when `m = 0`).
pub fn normal_bar_m(genus: usize, m: usize) -> Result<SpinMatrix> {
    if genus < 3 {
        return Err(Error::UnsupportedGenus {
            genus,
            reason: "normal forms are defined for genus at least 3",
        });
    }
    check_class(genus, m)?;
    let (half, odd) = (m / 2, m % 2 == 1);
    let cols = Columns::default();
    let cols = match genus % 4 {
        3 => {
            let k = (genus + 1) / 4;
            if m == 2 * k {
                cols.block(2 * k)
            } else if m == 2 * k - 1 {
                cols.block(2 * k - 1).cols(&[C10, C01])
            } else if odd {
                cols.block(k + half)
                    .cols(&[C10, C01, C10])
                    .block(k - half - 1)
            } else {
                cols.block(k + half).cols(&[C00]).block(k - half)
            }
        }
        1 => {
            let k = (genus - 1) / 4;
            if m == 2 * k + 1 {
                cols.block(2 * k + 1)
            } else if m == 2 * k {
                cols.block(2 * k).cols(&[C10, C01])
            } else if odd {
                cols.block(k + half + 1).cols(&[C00]).block(k - half)
            } else {
                cols.block(k + half).cols(&[C10, C01, C10]).block(k - half)
            }
        }
        0 => {
            let k = genus / 4;
            if m == 2 * k {
                cols.block(2 * k).cols(&[C10])
            } else if m == 2 * k - 1 {
                cols.block(2 * k).cols(&[C11])
            } else if odd {
                cols.block(k + half + 1).block(k - half)
            } else {
                cols.block(k + half).cols(&[C10, C10]).block(k - half)
            }
        }
        _ => {
            let k = (genus - 2) / 4;
            if m == 2 * k + 1 {
                cols.block(2 * k + 1).cols(&[C10])
            } else if m == 2 * k {
                cols.block(2 * k + 1).cols(&[C11])
            } else if odd {
                cols.block(k + half + 1).cols(&[C10, C10]).block(k - half)
            } else {
                cols.block(k + half + 1).block(k - half + 1)
            }
        }
    };
    Ok(cols.finish(genus))
}

/// The unique spin matrix fixed by every generator, which exists exactly for odd genus:
/// odd columns `(1,1)`, even columns `(1,0)`.
pub fn fixed_point(genus: usize) -> Option<SpinMatrix> {
    (genus % 2 == 1).then(|| Columns::default().block(genus.div_ceil(2)).finish(genus))
}

/// The elementary single-generator moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `σ_{2i}`, needs `c(α_i) = 0`; toggles `c(β_i)`.
    A(usize),
    /// `σ_1`, needs `c(β_1) = 0`; toggles `c(α_1)`.
    B,
    /// `σ_{2j+1}`, needs `c(β_j) = c(β_{j+1})`; moves a top-row 1 between columns j, j+1.
    C1(usize),
    /// `σ_{2j+1}`, needs `c(β_j) = c(β_{j+1})`; toggles both top entries.
    C2(usize),
    /// `σ_{2g+1}`, needs `c(β_g) = 0`; toggles `c(α_g)`.
    D,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::A(i) => write!(f, "a({i})"),
            Move::B => f.write_str("b"),
            Move::C1(j) => write!(f, "c1({j})"),
            Move::C2(j) => write!(f, "c2({j})"),
            Move::D => f.write_str("d"),
        }
    }
}

/// The one-letter word realizing `mv` on `m`, after checking the move's guard.
pub fn move_word(m: &SpinMatrix, mv: Move) -> Result<GeneratorWord> {
    let g = m.genus();
    let reject = |reason: String| Error::MoveNotApplicable {
        mv: mv.to_string(),
        reason,
    };
    let letter = match mv {
        Move::A(i) => {
            if i == 0 || i > g {
                return Err(Error::IndexOutOfRange { index: i, genus: g });
            }
            if m.alpha_value(i).is_one() {
                return Err(reject(format!("c(alpha_{i}) = 1")));
            }
            2 * i
        }
        Move::B => {
            if m.beta_value(1).is_one() {
                return Err(reject("c(beta_1) = 1".into()));
            }
            1
        }
        Move::C1(j) | Move::C2(j) => {
            if j == 0 || j >= g {
                return Err(Error::IndexOutOfRange { index: j, genus: g });
            }
            if m.beta_value(j) != m.beta_value(j + 1) {
                return Err(reject(format!("c(beta_{j}) != c(beta_{})", j + 1)));
            }
            2 * j + 1
        }
        Move::D => {
            if m.beta_value(g).is_one() {
                return Err(reject(format!("c(beta_{g}) = 1")));
            }
            2 * g + 1
        }
    };
    Ok(GeneratorWord::new(vec![letter]))
}

/// What a trace step accomplished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// Clear bottom-row entries over zero top entries.
    A,
    /// Slide a `(1,0)` column to the front and delete it.
    B,
    /// Slide `(1,0)` columns left until they are contiguous.
    C1,
    /// Cancel adjacent column pairs.
    C2,
    /// Slide a `(1,0)` column to the back and delete it.
    D,
    /// Move a `(1,1)` column left across `(0,0)` columns.
    Transport,
    /// Same as `Transport` but leaving the crossed columns as `(0,1)`.
    Shift,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::A => "a",
            StepKind::B => "b",
            StepKind::C1 => "c1",
            StepKind::C2 => "c2",
            StepKind::D => "d",
            StepKind::Transport => "transport",
            StepKind::Shift => "shift",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(rename = "move")]
    pub kind: StepKind,
    pub word: GeneratorWord,
    pub after: SpinMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub genus: usize,
    pub input: SpinMatrix,
    pub steps: Vec<TraceStep>,
    pub class_index: usize,
    pub total_word: GeneratorWord,
}

impl ReductionTrace {
    pub fn result(&self) -> &SpinMatrix {
        self.steps.last().map_or(&self.input, |s| &s.after)
    }

    /// One line per step: `<move> <word> -> <matrix>`.
    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(|s| format!("{} {} -> {}\n", s.kind, s.word, s.after))
            .collect()
    }
}

/// The class index of `m`, i.e. the `m` with `m ~ M_m`.
pub fn classify(m: &SpinMatrix) -> Result<usize> {
    reduce(m).map(|t| t.class_index)
}

/// Reduces `m` to its orbit representative `M_m`, recording every word applied.
///
/// The strategy sweeps left to right, growing an alternating block `A_r` at
/// the front. For the next free `(1,1)` column, an odd number of `(1,0)`
/// columns in front of it lets it join the block. Otherwise it cancels with
/// the following free `(1,1)` column when that gap is also even, or else with
/// the last column of the block. Each step checks its effect on the columns
/// before continuing.
pub fn reduce(m: &SpinMatrix) -> Result<ReductionTrace> {
    let genus = m.genus();
    if genus < 3 {
        return Err(Error::UnsupportedGenus {
            genus,
            reason: "reduction requires genus at least 3",
        });
    }
    let mut r = Reducer {
        current: m.clone(),
        steps: Vec::new(),
        total: GeneratorWord::empty(),
    };
    r.clear_beta()?;

    let mut block = 0usize;
    let mut last_metric: Option<(usize, usize)> = None;
    loop {
        let start = if block == 0 { 1 } else { 2 * block };
        let pending: Vec<usize> = (start..=genus).filter(|&k| r.is(k, C11)).collect();
        let Some(&first) = pending.first() else { break };

        let metric = (pending.len(), first);
        if last_metric.is_some_and(|prev| metric >= prev) {
            return Err(Error::ReductionInvariant {
                step: "loop".into(),
                detail: format!("progress measure {metric:?} did not drop below {last_metric:?}"),
            });
        }
        last_metric = Some(metric);

        if block == 0 {
            let leading: Vec<usize> = (1..first).filter(|&k| r.is(k, C10)).collect();
            for p in leading {
                r.sweep_left(p)?;
            }
            r.transport(first, 1)?;
            block = 1;
            continue;
        }

        let end = 2 * block - 1;
        let gap = r.count(end + 1, first, C10);
        if gap % 2 == 1 {
            r.gather(end + 1, first)?;
            r.cancel_pairs(end + 2, gap - 1)?;
            r.transport(first, end + 2)?;
            block += 1;
        } else if pending.len() >= 2 && r.count(first + 1, pending[1], C10).is_multiple_of(2) {
            r.fuse(first, pending[1])?;
        } else {
            r.fuse(end, first)?;
            block -= 1;
        }
    }

    if block == 0 {
        let rest: Vec<usize> = (1..=genus).filter(|&k| r.is(k, C10)).collect();
        for p in rest {
            r.sweep_left(p)?;
        }
    } else {
        let rest: Vec<usize> = (2 * block..=genus)
            .rev()
            .filter(|&k| r.is(k, C10))
            .collect();
        for q in rest {
            r.sweep_right(q)?;
        }
    }

    let target = canonical_m(genus, block)?;
    if r.current != target {
        return Err(Error::ReductionInvariant {
            step: "finish".into(),
            detail: format!("ended at {} instead of {target}", r.current),
        });
    }
    Ok(ReductionTrace {
        genus,
        input: m.clone(),
        steps: r.steps,
        class_index: block,
        total_word: r.total,
    })
}

struct Reducer {
    current: SpinMatrix,
    steps: Vec<TraceStep>,
    total: GeneratorWord,
}

impl Reducer {
    fn genus(&self) -> usize {
        self.current.genus()
    }

    fn is(&self, k: usize, col: (bool, bool)) -> bool {
        self.current.column(k) == col
    }

    fn count(&self, lo: usize, hi: usize, col: (bool, bool)) -> usize {
        (lo..hi).filter(|&k| self.is(k, col)).count()
    }

    fn with_columns(&self, edits: &[(usize, (bool, bool))]) -> SpinMatrix {
        let mut m = self.current.clone();
        for &(k, col) in edits {
            m.set_column(k, col);
        }
        m
    }

    /// Applies `moves` one at a time, then checks the result against `expected`.
    fn run(&mut self, kind: StepKind, moves: &[Move], expected: SpinMatrix) -> Result<()> {
        let mut word = GeneratorWord::empty();
        for &mv in moves {
            let part = move_word(&self.current, mv).map_err(|e| Error::ReductionInvariant {
                step: kind.to_string(),
                detail: format!("on {}: {e}", self.current),
            })?;
            for &i in part.letters() {
                apply_generator_mut(&mut self.current, i);
            }
            word.extend_from(&part);
        }
        if self.current != expected {
            return Err(Error::ReductionInvariant {
                step: kind.to_string(),
                detail: format!("word {word} gave {} instead of {expected}", self.current),
            });
        }
        if !word.is_empty() {
            self.total.extend_from(&word);
            self.steps.push(TraceStep {
                kind,
                word,
                after: self.current.clone(),
            });
        }
        Ok(())
    }

    /// `(0,1)` columns become `(0,0)`.
    fn clear_beta(&mut self) -> Result<()> {
        let cols: Vec<usize> = (1..=self.genus()).filter(|&k| self.is(k, C01)).collect();
        let moves: Vec<Move> = cols.iter().map(|&k| Move::A(k)).collect();
        let edits: Vec<_> = cols.iter().map(|&k| (k, C00)).collect();
        self.run(StepKind::A, &moves, self.with_columns(&edits))
    }

    /// Deletes the `(1,0)` column `p`; columns `1..p` must be `(0,0)`.
    fn sweep_left(&mut self, p: usize) -> Result<()> {
        let mut moves: Vec<Move> = (1..p).rev().map(Move::C1).collect();
        moves.push(Move::B);
        self.run(StepKind::B, &moves, self.with_columns(&[(p, C00)]))
    }

    /// Deletes the `(1,0)` column `q`; columns after `q` must be `(0,0)`.
    fn sweep_right(&mut self, q: usize) -> Result<()> {
        let mut moves: Vec<Move> = (q..self.genus()).map(Move::C1).collect();
        moves.push(Move::D);
        self.run(StepKind::D, &moves, self.with_columns(&[(q, C00)]))
    }

    /// Slides the `(1,0)` columns of `start..stop` left so they fill
    /// `start..start+l`; returns `l`. The range must hold only `(0,0)` and `(1,0)`.
    fn gather(&mut self, start: usize, stop: usize) -> Result<usize> {
        let mut moves = Vec::new();
        let mut next = start;
        for k in start..stop {
            if self.is(k, C10) {
                moves.extend((next..k).rev().map(Move::C1));
                next += 1;
            }
        }
        let edits: Vec<_> = (start..stop)
            .map(|k| (k, if k < next { C10 } else { C00 }))
            .collect();
        self.run(StepKind::C1, &moves, self.with_columns(&edits))?;
        Ok(next - start)
    }

    /// Cancels the contiguous `(1,0)` columns `start..start+count` in pairs.
    fn cancel_pairs(&mut self, start: usize, count: usize) -> Result<()> {
        debug_assert!(count.is_multiple_of(2));
        let moves: Vec<Move> = (start..start + count).step_by(2).map(Move::C2).collect();
        let edits: Vec<_> = (start..start + count).map(|k| (k, C00)).collect();
        self.run(StepKind::C2, &moves, self.with_columns(&edits))
    }

    fn shift_moves(q: usize, t: usize) -> Vec<Move> {
        (t..q)
            .map(Move::A)
            .chain((t..q).rev().map(Move::C1))
            .collect()
    }

    /// Moves the `(1,1)` column `q` to `t < q` across `(0,0)` columns,
    /// leaving `t+1..=q` as `(0,1)`.
    fn shift(&mut self, q: usize, t: usize) -> Result<()> {
        let mut edits = vec![(t, C11)];
        edits.extend((t + 1..=q).map(|k| (k, C01)));
        self.run(
            StepKind::Shift,
            &Self::shift_moves(q, t),
            self.with_columns(&edits),
        )
    }

    /// Moves the `(1,1)` column `q` to `t <= q` across `(0,0)` columns;
    /// all other columns keep their values.
    fn transport(&mut self, q: usize, t: usize) -> Result<()> {
        if q == t {
            return Ok(());
        }
        let mut moves = Self::shift_moves(q, t);
        moves.extend((t + 1..=q).map(Move::A));
        let mut edits = vec![(t, C11)];
        edits.extend((t + 1..=q).map(|k| (k, C00)));
        self.run(StepKind::Transport, &moves, self.with_columns(&edits))
    }

    /// Cancels the `(1,1)` columns `p < q`, separated by an even number of
    /// `(1,0)` columns and otherwise `(0,0)`, leaving `p..=q` as `(0,0)`.
    fn fuse(&mut self, p: usize, q: usize) -> Result<()> {
        let between = self.gather(p + 1, q)?;
        self.cancel_pairs(p + 1, between)?;
        if q > p + 1 {
            self.shift(q, p + 1)?;
        }
        self.run(
            StepKind::C2,
            &[Move::C2(p)],
            self.with_columns(&[(p, C01), (p + 1, C01)]),
        )?;
        let moves: Vec<Move> = (p..=q).map(Move::A).collect();
        let edits: Vec<_> = (p..=q).map(|k| (k, C00)).collect();
        self.run(StepKind::A, &moves, self.with_columns(&edits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{apply_generator, apply_word, generator_count};
    use crate::gf2::arf;

    fn m(text: &str) -> SpinMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn block_shape() {
        let a1 = BlockA::new(1).unwrap();
        assert_eq!(a1.columns().collect::<Vec<_>>(), vec![C11]);
        for i in 1..=6 {
            let a = BlockA::new(i).unwrap();
            let cols: Vec<_> = a.columns().collect();
            assert_eq!(cols.len(), 2 * i - 1);
            assert_eq!(cols.iter().filter(|&&c| c == C11).count(), i);
            assert_eq!(cols.iter().filter(|&&c| c == C10).count(), i - 1);
            assert_eq!(cols.first(), Some(&C11));
            assert_eq!(cols.last(), Some(&C11));
        }
        assert!(BlockA::new(0).is_err());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_m(3, 2).unwrap(), m("111/101"));
        assert_eq!(canonical_m(5, 0).unwrap(), m("00000/00000"));
        assert_eq!(canonical_m(6, 1).unwrap(), m("100000/100000"));
        assert_eq!(canonical_m(6, 3).unwrap(), m("111110/101010"));
        assert!(matches!(
            canonical_m(5, 4),
            Err(Error::ClassOutOfRange { .. })
        ));
        assert!(canonical_m(0, 0).is_err());
    }

    #[test]
    fn normal_bar_examples() {
        assert_eq!(normal_bar_m(3, 0).unwrap(), m("101/101"));
        assert_eq!(normal_bar_m(4, 0).unwrap(), m("1111/1001"));
        assert_eq!(normal_bar_m(5, 0).unwrap(), m("11011/10101"));
        assert_eq!(normal_bar_m(4, 2).unwrap(), m("1111/1010"));
        assert_eq!(normal_bar_m(5, 3).unwrap(), fixed_point(5).unwrap());
        assert_eq!(normal_bar_m(7, 4).unwrap(), fixed_point(7).unwrap());
        assert!(normal_bar_m(2, 0).is_err());
        assert!(normal_bar_m(6, 4).is_err());
    }

    #[test]
    fn normal_bar_has_full_width_for_all_classes() {
        for g in 3..=20 {
            for k in 0..=max_class_index(g) {
                assert_eq!(normal_bar_m(g, k).unwrap().genus(), g);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(fixed_point(3), Some(m("111/101")));
        assert_eq!(fixed_point(4), None);
        assert_eq!(fixed_point(5), Some(m("11111/10101")));
        for g in [3, 5, 7, 9] {
            let f = fixed_point(g).unwrap();
            for i in 1..=generator_count(g) {
                assert_eq!(apply_generator(&f, i).unwrap(), f);
            }
        }
    }

    #[test]
    fn move_examples() {
        let zero = m("000/000");
        let word = move_word(&zero, Move::B).unwrap();
        assert_eq!(word.letters(), &[1]);
        assert_eq!(apply_word(&zero, &word).unwrap(), m("100/000"));

        let mat = m("010/110");
        let word = move_word(&mat, Move::C1(1)).unwrap();
        assert_eq!(word.letters(), &[3]);
        assert_eq!(apply_word(&mat, &word).unwrap(), m("100/110"));

        let mat = m("110/000");
        let word = move_word(&mat, Move::C2(1)).unwrap();
        assert_eq!(apply_word(&mat, &word).unwrap(), m("000/000"));

        let mat = m("000/000");
        assert_eq!(move_word(&mat, Move::A(2)).unwrap().letters(), &[4]);
        assert_eq!(move_word(&mat, Move::D).unwrap().letters(), &[7]);
    }

    #[test]
    fn move_guards() {
        let mat = m("111/111");
        for mv in [Move::A(1), Move::B, Move::D] {
            assert!(matches!(
                move_word(&mat, mv),
                Err(Error::MoveNotApplicable { .. })
            ));
        }
        assert!(move_word(&m("000/100"), Move::C1(1)).is_err());
        assert!(move_word(&m("000/100"), Move::C2(1)).is_err());
        assert!(move_word(&mat, Move::C1(3)).is_err());
        assert!(move_word(&mat, Move::A(4)).is_err());
    }

    #[test]
    fn genus_five_trace() {
        let trace = reduce(&m("11111/10111")).unwrap();
        assert_eq!(trace.class_index, 2);
        assert_eq!(trace.total_word.letters(), &[9, 8, 10]);
        let mats: Vec<String> = trace.steps.iter().map(|s| s.after.to_string()).collect();
        assert_eq!(mats, vec!["11100/10111", "11100/10100"]);
    }

    #[test]
    fn genus_six_trace() {
        let trace = reduce(&m("111111/101101")).unwrap();
        assert_eq!(trace.class_index, 0);
        assert_eq!(
            trace.total_word.to_string(),
            "7,6,8,9,7,5,4,6,8,10,11,9,7,5,3,2,4,6,8,10,12"
        );
        let mats: Vec<String> = trace.steps.iter().map(|s| s.after.to_string()).collect();
        for printed in [
            "110011/100001",
            "100001/100001",
            "110000/111111",
            "000000/000000",
        ] {
            assert!(
                mats.iter().any(|x| x == printed),
                "{printed} missing from {mats:?}"
            );
        }
    }

    #[test]
    fn canonical_inputs_give_empty_traces() {
        for g in 3..=9 {
            for k in 0..=max_class_index(g) {
                let trace = reduce(&canonical_m(g, k).unwrap()).unwrap();
                assert_eq!(trace.class_index, k);
                assert!(trace.steps.is_empty());
                assert!(trace.total_word.is_empty());
            }
        }
    }

    #[test]
    fn reduce_rejects_small_genus() {
        assert!(matches!(
            reduce(&m("11/10")),
            Err(Error::UnsupportedGenus { genus: 2, .. })
        ));
    }

    #[test]
    fn representatives_have_arf_parity_of_class() {
        for g in 1..=12 {
            for k in 0..=max_class_index(g) {
                assert_eq!(arf(&canonical_m(g, k).unwrap()).as_u8() as usize, k % 2);
            }
        }
    }

    #[test]
    fn trace_text_lines() {
        let trace = reduce(&m("11111/10111")).unwrap();
        assert_eq!(
            trace.to_text(),
            "c2 9 -> 11100/10111\na 8,10 -> 11100/10100\n"
        );
    }
}
