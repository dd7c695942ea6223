//! Dyck words, generalized nonnegative paths, and cyclic-shift lemmas.
//!
//! A Dyck word of semilength `n` is a sequence of `n` up steps (`U`) and `n`
//! down steps (`D`) in which every prefix has at least as many `U`s as `D`s.
//! Words are stored as compact bit sequences (`U` = 1, `D` = 0); the string
//! form `"UUDD..."` is used for I/O. Enumeration is lexicographic with
//! `U < D`, so `U^n D^n` comes first and `(UD)^n` last.

use crate::composition::Composition;
use crate::{Error, Result};
use bitvec::vec::BitVec;
use std::fmt;

/// One lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `U`, encoded as bit 1.
    Up,
    /// `D`, encoded as bit 0.
    Down,
}

impl Step {
    fn from_bit(b: bool) -> Self {
        if b {
            Step::Up
        } else {
            Step::Down
        }
    }

    fn bit(self) -> bool {
        matches!(self, Step::Up)
    }

    /// `'U'` or `'D'`.
    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A Dyck word: balanced, never dipping below the axis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyckWord {
    steps: BitVec,
}

impl DyckWord {
    /// The empty word (semilength 0).
    pub fn empty() -> Self {
        DyckWord { steps: BitVec::new() }
    }

    /// Builds a word from steps, validating balance and nonnegativity.
    pub fn new(steps: &[Step]) -> Result<Self> {
        let mut height: i64 = 0;
        for s in steps {
            height += if s.bit() { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse("prefix dips below the axis".into()));
            }
        }
        if height != 0 {
            return Err(Error::Parse(format!("unbalanced word: final height {height}")));
        }
        Ok(DyckWord {
            steps: steps.iter().map(|s| s.bit()).collect(),
        })
    }

    /// Parses `"UUDD..."`; accepts only `U` and `D`.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = parse_steps(text)?;
        DyckWord::new(&steps)
    }

    /// Number of `U` steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Total number of steps (`2n`).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The steps in order.
    pub fn steps(&self) -> Vec<Step> {
        self.steps.iter().map(|b| Step::from_bit(*b)).collect()
    }

    /// Number of contiguous `U^r D` occurrences; equivalently the number of
    /// maximal `U`-runs of length at least `r`.
    pub fn count_factor(&self, r: usize) -> usize {
        assert!(r >= 1, "factor length must be positive");
        count_factor_bits(&self.steps, r)
    }

    /// Lengths of the maximal `U`-runs, in order. Errors on the empty word.
    pub fn rise_composition(&self) -> Result<Composition> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut parts = Vec::new();
        let mut run = 0usize;
        for b in self.steps.iter() {
            if *b {
                run += 1;
            } else if run > 0 {
                parts.push(run);
                run = 0;
            }
        }
        debug_assert_eq!(run, 0, "a Dyck word ends with D");
        Composition::new(parts)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.steps.iter() {
            f.write_str(if *b { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord({self})")
    }
}

impl PartialOrd for DyckWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyckWord {
    /// Lexicographic with `U < D`, then by length.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        cmp_steps(&self.steps, &other.steps)
    }
}

/// A nonnegative lattice path with `ups` up steps and `ups - end_height`
/// down steps; a Dyck word is the case `end_height = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenPath {
    steps: BitVec,
    end_height: usize,
}

impl GenPath {
    /// Builds a path from steps, validating nonnegativity of every prefix.
    pub fn new(steps: &[Step]) -> Result<Self> {
        let mut height: i64 = 0;
        for s in steps {
            height += if s.bit() { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse("prefix dips below the axis".into()));
            }
        }
        Ok(GenPath {
            steps: steps.iter().map(|s| s.bit()).collect(),
            end_height: height as usize,
        })
    }

    /// Parses `"UUD..."`.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = parse_steps(text)?;
        GenPath::new(&steps)
    }

    /// Final height (`#U - #D`).
    pub fn end_height(&self) -> usize {
        self.end_height
    }

    /// Number of up steps.
    pub fn ups(&self) -> usize {
        (self.steps.len() + self.end_height) / 2
    }

    /// Number of down steps.
    pub fn downs(&self) -> usize {
        self.ups() - self.end_height
    }

    /// The steps in order.
    pub fn steps(&self) -> Vec<Step> {
        self.steps.iter().map(|b| Step::from_bit(*b)).collect()
    }

    /// Number of `U^r D` occurrences; a trailing run of `U`s with no
    /// closing `D` does not count.
    pub fn count_factor(&self, r: usize) -> usize {
        assert!(r >= 1, "factor length must be positive");
        count_factor_bits(&self.steps, r)
    }
}

impl fmt::Display for GenPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.steps.iter() {
            f.write_str(if *b { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenPath({self})")
    }
}

impl PartialOrd for GenPath {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GenPath {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        cmp_steps(&self.steps, &other.steps)
    }
}

fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.chars()
        .map(|c| match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            other => Err(Error::Parse(format!("unexpected character {other:?}"))),
        })
        .collect()
}

fn cmp_steps(a: &BitVec, b: &BitVec) -> std::cmp::Ordering {
    // U (bit 1) sorts before D (bit 0), so compare inverted bits.
    for (x, y) in a.iter().zip(b.iter()) {
        let ord = (!*x).cmp(&!*y);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

// Occurrences of U^r D. A trailing U-run without its closing D (possible
// for generalized paths, never for Dyck words) is not an occurrence.
fn count_factor_bits(bits: &BitVec, r: usize) -> usize {
    let mut count = 0usize;
    let mut run = 0usize;
    for b in bits.iter() {
        if *b {
            run += 1;
        } else {
            if run >= r {
                count += 1;
            }
            run = 0;
        }
    }
    count
}

/// Streams every Dyck word of semilength `n` exactly once, lexicographically
/// with `U < D`; the total count is the Catalan number `C_n`.
pub fn enumerate_dyck(n: usize) -> DyckEnum {
    let mut bits: BitVec = BitVec::with_capacity(2 * n);
    for _ in 0..n {
        bits.push(true);
    }
    for _ in 0..n {
        bits.push(false);
    }
    DyckEnum {
        n,
        current: Some(bits),
    }
}

/// Iterator state for [`enumerate_dyck`].
pub struct DyckEnum {
    n: usize,
    current: Option<BitVec>,
}

impl Iterator for DyckEnum {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let bits = self.current.take()?;
        let word = DyckWord { steps: bits.clone() };
        self.current = next_word(bits, self.n);
        Some(word)
    }
}

/// Lexicographic successor: flip the rightmost feasible U to D, then refill
/// the suffix with all remaining Us followed by all remaining Ds.
fn next_word(mut bits: BitVec, n: usize) -> Option<BitVec> {
    let mut ups = n;
    let mut downs = n;
    for i in (0..bits.len()).rev() {
        // Maintain ups/downs as the counts strictly before position i.
        if bits[i] {
            ups -= 1;
        } else {
            downs -= 1;
        }
        // Placing a D at i needs a spare D and a prefix that stays
        // nonnegative after the extra down step.
        if bits[i] && downs < n && ups >= downs + 1 {
            bits.set(i, false);
            let mut pos = i + 1;
            for _ in 0..(n - ups) {
                bits.set(pos, true);
                pos += 1;
            }
            for _ in 0..(n - downs - 1) {
                bits.set(pos, false);
                pos += 1;
            }
            debug_assert_eq!(pos, 2 * n);
            return Some(bits);
        }
    }
    None
}

/// Enumerates every nonnegative path with `ups` up steps ending at height
/// `end_height` (so `ups - end_height` down steps), lexicographically.
pub fn enumerate_gen_paths(ups: usize, end_height: usize) -> Vec<GenPath> {
    if end_height > ups {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    gen_paths_rec(ups, ups - end_height, 0, &mut steps, &mut out);
    out
}

fn gen_paths_rec(ups: usize, downs: usize, height: usize, steps: &mut Vec<Step>, out: &mut Vec<GenPath>) {
    if ups == 0 && downs == 0 {
        out.push(GenPath::new(steps).expect("construction maintains validity"));
        return;
    }
    if ups > 0 {
        steps.push(Step::Up);
        gen_paths_rec(ups - 1, downs, height + 1, steps, out);
        steps.pop();
    }
    if downs > 0 && height > 0 {
        steps.push(Step::Down);
        gen_paths_rec(ups, downs - 1, height - 1, steps, out);
        steps.pop();
    }
}

/// Start indices whose rotation of `s` is `k`-dominating: every nonempty
/// prefix has strictly more `U`s than `k` times its `D`s. Indices are
/// positions of the underlying sequence, so a periodic sequence reports
/// repeated rotations with multiplicity; the count is `max(#U - k * #D, 0)`.
pub fn dominating_shifts(s: &[Step], k: usize) -> Vec<usize> {
    let len = s.len();
    let mut hits = Vec::new();
    'outer: for start in 0..len {
        let mut ups = 0i64;
        let mut downs = 0i64;
        for j in 0..len {
            match s[(start + j) % len] {
                Step::Up => ups += 1,
                Step::Down => downs += 1,
            }
            if ups <= (k as i64) * downs {
                continue 'outer;
            }
        }
        hits.push(start);
    }
    hits
}

/// Like [`dominating_shifts`] but keeps only the first index of each
/// distinct rotation.
pub fn distinct_dominating_shifts(s: &[Step], k: usize) -> Vec<usize> {
    let mut seen: Vec<Vec<Step>> = Vec::new();
    let mut out = Vec::new();
    for start in dominating_shifts(s, k) {
        let rot: Vec<Step> = (0..s.len()).map(|j| s[(start + j) % s.len()]).collect();
        if !seen.contains(&rot) {
            seen.push(rot);
            out.push(start);
        }
    }
    out
}

/// Circle/square markers for the balanced-shift lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    /// A marked vertex.
    Circle,
    /// An extended leaf.
    Square,
}

/// The unique rotation start of a sequence of `k` circles and `k+1` squares
/// in which no proper prefix has more squares than circles.
pub fn unique_balanced_shift(s: &[Marker]) -> Result<usize> {
    let circles = s.iter().filter(|m| matches!(m, Marker::Circle)).count();
    let squares = s.len() - circles;
    if squares != circles + 1 {
        return Err(Error::BadCounts { circles, squares });
    }
    let len = s.len();
    let mut hits = Vec::new();
    'outer: for start in 0..len {
        let mut balance = 0i64; // circles minus squares
        for j in 0..len - 1 {
            balance += match s[(start + j) % len] {
                Marker::Circle => 1,
                Marker::Square => -1,
            };
            if balance < 0 {
                continue 'outer;
            }
        }
        hits.push(start);
    }
    assert_eq!(hits.len(), 1, "cycle lemma: exactly one balanced shift must exist");
    Ok(hits[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::catalan;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn enumeration_counts_are_catalan() {
        for n in 0..=10 {
            let count = enumerate_dyck(n).count();
            assert_eq!(BigInt::from(count), catalan(n as u32), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for n in 0..=8 {
            let words: Vec<DyckWord> = enumerate_dyck(n).collect();
            for w in &words {
                assert_eq!(w.semilength(), n);
                DyckWord::new(&w.steps()).expect("every enumerated word is valid");
            }
            let mut sorted = words.clone();
            sorted.sort();
            assert_eq!(words, sorted, "lexicographic order, n = {n}");
            assert!(words.windows(2).all(|p| p[0] != p[1]), "no duplicates");
        }
    }

    #[test]
    fn enumeration_endpoints() {
        let words: Vec<DyckWord> = enumerate_dyck(3).collect();
        assert_eq!(words.first().unwrap().to_string(), "UUUDDD");
        assert_eq!(words.last().unwrap().to_string(), "UDUDUD");
        assert_eq!(words.len(), 5);
        assert_eq!(enumerate_dyck(0).count(), 1);
    }

    #[test]
    fn count_factor_examples() {
        let w = DyckWord::parse("UDUUDUUDDD").unwrap();
        assert_eq!(w.count_factor(1), 3);
        assert_eq!(w.count_factor(2), 2);
        assert_eq!(DyckWord::empty().count_factor(1), 0);
        let v = DyckWord::parse("UUUDDD").unwrap();
        assert_eq!(v.count_factor(3), 1);
        assert_eq!(v.count_factor(2), 1);
        assert_eq!(v.count_factor(1), 1);
    }

    #[test]
    fn rise_composition_examples() {
        let w = DyckWord::parse("UUDDUD").unwrap();
        assert_eq!(w.rise_composition().unwrap().parts(), &[2, 1]);
        let v = DyckWord::parse("UUUUDDDD").unwrap();
        assert_eq!(v.rise_composition().unwrap().parts(), &[4]);
        let u = DyckWord::parse("UDUUDUUDDD").unwrap();
        assert_eq!(u.rise_composition().unwrap().parts(), &[1, 2, 2]);
        assert_eq!(DyckWord::empty().rise_composition(), Err(Error::EmptyWord));
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert!(DyckWord::parse("UDX").is_err());
        assert!(DyckWord::parse("UDD").is_err());
        assert!(DyckWord::parse("UUD").is_err());
        assert!(DyckWord::parse("DU").is_err());
    }

    #[test]
    fn dominating_shift_counts() {
        let s = GenPath::parse("UUUDD").unwrap().steps();
        assert_eq!(dominating_shifts(&s, 1).len(), 1);
        let s = parse_steps("UDUD").unwrap();
        assert_eq!(dominating_shifts(&s, 1).len(), 0);
        // k + j ups and k downs with k = 1 give exactly j dominating shifts.
        for j in 1..=4 {
            let mut steps = vec![Step::Up; 1 + j];
            steps.push(Step::Down);
            assert_eq!(dominating_shifts(&steps, 1).len(), j);
        }
    }

    #[test]
    fn dominating_shifts_multiplicity_on_periodic_input() {
        // UUD repeated twice: 6 positions, #U - #D = 2 shifts with
        // multiplicity, but only one distinct rotation.
        let s = parse_steps("UUDUUD").unwrap();
        assert_eq!(dominating_shifts(&s, 1).len(), 2);
        assert_eq!(distinct_dominating_shifts(&s, 1).len(), 1);
    }

    #[test]
    fn balanced_shift_examples() {
        use Marker::*;
        assert_eq!(unique_balanced_shift(&[Square]).unwrap(), 0);
        assert_eq!(unique_balanced_shift(&[Circle, Square, Square]).unwrap(), 0);
        let s = [Square, Circle, Square, Circle, Square];
        let idx = unique_balanced_shift(&s).unwrap();
        // Verify uniqueness by exhaustion.
        let mut valid = Vec::new();
        for start in 0..s.len() {
            let mut bal = 0i64;
            let mut ok = true;
            for j in 0..s.len() - 1 {
                bal += if matches!(s[(start + j) % s.len()], Circle) { 1 } else { -1 };
                if bal < 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                valid.push(start);
            }
        }
        assert_eq!(valid, vec![idx]);
        assert_eq!(
            unique_balanced_shift(&[Circle, Square]),
            Err(Error::BadCounts { circles: 1, squares: 1 })
        );
    }

    #[test]
    fn gen_path_enumeration_small() {
        // Paths with 2 ups ending at height 1: UUD, UDU.
        let paths = enumerate_gen_paths(2, 1);
        let strs: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["UUD", "UDU"]);
        // End height equal to ups gives the single all-up path.
        assert_eq!(enumerate_gen_paths(3, 3).len(), 1);
        assert!(GenPath::parse("UDD").is_err());
    }

    proptest! {
        #[test]
        fn count_factor_is_monotone_in_r(n in 0usize..7, idx in 0usize..1000) {
            let words: Vec<DyckWord> = enumerate_dyck(n).collect();
            let w = &words[idx % words.len()];
            for r in 1..n.max(2) {
                prop_assert!(w.count_factor(r) >= w.count_factor(r + 1));
            }
        }

        #[test]
        fn dominating_shift_count_matches_cycle_lemma(bits in proptest::collection::vec(any::<bool>(), 1..12), k in 1usize..4) {
            let steps: Vec<Step> = bits.iter().map(|&b| if b { Step::Up } else { Step::Down }).collect();
            let ups = steps.iter().filter(|s| matches!(s, Step::Up)).count() as i64;
            let downs = steps.len() as i64 - ups;
            let expected = (ups - (k as i64) * downs).max(0) as usize;
            prop_assert_eq!(dominating_shifts(&steps, k).len(), expected);
        }
    }
}
