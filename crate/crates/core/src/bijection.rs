//! The Lalanne-Kreweras involution, the peak-complementing tree bijection
//! built from it, and the fiber maps from cyclic compositions to elevated
//! paths.
//!
//! The tree bijection explains why counting trees with `2k+1` edges, `k`
//! leaves and `m` good leaves is symmetric under `m <-> k+1-m`: peel the
//! tree into a marked necklace, turn the necklace into a Dyck word of
//! semilength `k`, complement its peak count with any Narayana-symmetric
//! involution, and reassemble with the same marks.

use crate::composition::CyclicComposition;
use crate::dyck::{dominating_shifts, DyckWord, GenPath, Step};
use crate::necklace::{
    comp_from_dyck_plus, comp_to_dyck_plus, marked_necklace_from_tree, tree_from_marked_necklace,
    MarkedNecklace,
};
use crate::trees::PlaneTree;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// The Lalanne-Kreweras involution on Dyck words.
///
/// Writing a word as alternating runs `U^{a_1} D^{b_1} ... U^{a_r} D^{b_r}`,
/// record the proper partial sums of the `a_i` and of the `b_i` as two
/// subsets of `{1, ..., n-1}`. The involution replaces the pair `(A, B)`
/// with `(complement of B, complement of A)` and reads the runs back off.
/// It sends a word with `p` peaks to one with `n+1-p` peaks.
pub fn lalanne_kreweras(w: &DyckWord) -> DyckWord {
    let n = w.semilength();
    if n == 0 {
        return DyckWord::empty();
    }
    let mut rises = Vec::new();
    let mut falls = Vec::new();
    for step in w.steps() {
        match step {
            Step::Up => {
                if falls.is_empty() || *falls.last().unwrap() > 0 {
                    rises.push(0usize);
                    falls.push(0usize);
                }
                *rises.last_mut().unwrap() += 1;
            }
            Step::Down => *falls.last_mut().unwrap() += 1,
        }
    }
    let proper_sums = |runs: &[usize]| -> BTreeSet<usize> {
        runs[..runs.len() - 1]
            .iter()
            .scan(0, |acc, &r| {
                *acc += r;
                Some(*acc)
            })
            .collect()
    };
    let rise_sums = proper_sums(&rises);
    let fall_sums = proper_sums(&falls);
    let runs_from = |sums: &BTreeSet<usize>| -> Vec<usize> {
        let mut runs = Vec::new();
        let mut prev = 0;
        for &s in sums.iter().chain(std::iter::once(&n)) {
            runs.push(s - prev);
            prev = s;
        }
        runs
    };
    let new_rises = runs_from(&(1..n).filter(|x| !fall_sums.contains(x)).collect());
    let new_falls = runs_from(&(1..n).filter(|x| !rise_sums.contains(x)).collect());
    debug_assert_eq!(new_rises.len(), new_falls.len());
    let mut steps = Vec::with_capacity(2 * n);
    for (&a, &b) in new_rises.iter().zip(&new_falls) {
        steps.extend(std::iter::repeat(Step::Up).take(a));
        steps.extend(std::iter::repeat(Step::Down).take(b));
    }
    DyckWord::new(&steps).expect("complementing partial sums preserves dominance")
}

/// An involution on Dyck words sending `p` peaks to `semilength + 1 - p`.
pub trait NarayanaSwap {
    fn swap(&self, w: &DyckWord) -> DyckWord;
}

/// [`lalanne_kreweras`] as a swap strategy.
#[derive(Debug, Clone, Copy, Default)]
pub struct LalanneKreweras;

impl NarayanaSwap for LalanneKreweras {
    fn swap(&self, w: &DyckWord) -> DyckWord {
        lalanne_kreweras(w)
    }
}

/// Every intermediate object of the tree bijection, for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryTrace {
    pub input: PlaneTree,
    pub necklace: MarkedNecklace,
    pub word: DyckWord,
    pub swapped: DyckWord,
    pub image_necklace: MarkedNecklace,
    pub output: PlaneTree,
}

/// Peak-complementing bijection on plane trees with `k` leaves and `2k+1`
/// edges, exchanging `m` good leaves with `k+1-m`. See the module docs for
/// the pipeline; the word-level involution is pluggable.
pub fn symmetry_bijection_with<S: NarayanaSwap>(tree: &PlaneTree, swap: &S) -> Result<SymmetryTrace> {
    let necklace = match marked_necklace_from_tree(tree) {
        Ok(neck) => neck,
        Err(Error::NoLeaves) => return Err(Error::BadProfile("tree has no leaves".into())),
        Err(Error::BadShape(msg)) => return Err(Error::BadProfile(msg)),
        Err(other) => return Err(other),
    };
    let word = comp_to_dyck_plus(&necklace.class())?;
    let swapped = swap.swap(&word);
    let k = word.semilength();
    assert_eq!(
        swapped.count_factor(1),
        k + 1 - word.count_factor(1),
        "swap strategy complements the peak count"
    );
    let image_parts = comp_from_dyck_plus(&swapped)?;
    let marks: Vec<usize> = necklace.marks().collect();
    let image_necklace = MarkedNecklace::new(image_parts.parts(), &marks)?;
    let output = tree_from_marked_necklace(&image_necklace);
    Ok(SymmetryTrace {
        input: tree.clone(),
        necklace,
        word,
        swapped,
        image_necklace,
        output,
    })
}

/// [`symmetry_bijection_with`] using the Lalanne-Kreweras involution.
pub fn symmetry_bijection(tree: &PlaneTree) -> Result<SymmetryTrace> {
    symmetry_bijection_with(tree, &LalanneKreweras)
}

/// Image class of a cyclic composition of `2k+j` into `k` parts (`j >= 1`):
/// each strictly positive rotation of the composition word, with its leading
/// `U` dropped, gives a path with `k+j-1` up steps ending at height `j-1`.
/// The class has `j * ord / k` distinct members and preserves the statistic
/// "parts of size at least 2 = complete `UD`-factors".
pub fn elevated_class(class: &CyclicComposition, j: usize) -> Result<Vec<GenPath>> {
    let parts = class.canonical();
    let k = parts.len();
    if j == 0 {
        return Err(Error::BadShape("need j >= 1".into()));
    }
    if class.sum() != 2 * k + j {
        return Err(Error::BadShape(format!(
            "sum {} with {k} parts, need sum 2k+{j}",
            class.sum()
        )));
    }
    let mut steps = Vec::new();
    for &p in parts {
        for _ in 1..p {
            steps.push(Step::Up);
        }
        steps.push(Step::Down);
    }
    let shifts = dominating_shifts(&steps, 1);
    assert_eq!(shifts.len(), j, "cycle lemma: j more U than D");
    let total = steps.len();
    let mut seen = BTreeSet::new();
    for s in shifts {
        let rotated: Vec<Step> = (0..total).map(|i| steps[(s + i) % total]).collect();
        assert_eq!(rotated[0], Step::Up, "strictly positive words start with U");
        let path = GenPath::new(&rotated[1..]).expect("dominating rotations stay nonnegative");
        debug_assert_eq!(path.end_height(), j - 1);
        seen.insert(path);
    }
    assert_eq!(seen.len() * k, j * class.order(), "class size is j * ord / k");
    Ok(seen.into_iter().collect())
}
