//! Cyclic compositions as necklaces of extended leaves, their markings, and
//! the bijections tying them to Dyck words and plane trees.
//!
//! A cyclic composition of `2k+1` into `k` parts is drawn as a necklace of
//! `k` extended leaves whose lengths are the parts. Writing each part `p` as
//! `U^{p-1} D` gives a cyclic word with one more `U` than `D`, which has a
//! unique rotation that stays strictly positive; dropping its first `U`
//! yields a Dyck word of semilength `k`, and parts of size at least 2
//! correspond to `UD`-factors. A dual construction handles compositions of
//! `2k-1` into `k` parts. Marking `k-1` non-leaf vertices of a necklace
//! selects a plane tree whose extended-leaf decomposition returns the
//! necklace; both directions are implemented here.

use crate::composition::{cyclic_of, Composition, CyclicComposition};
use crate::dyck::{dominating_shifts, unique_balanced_shift, DyckWord, Marker, Step};
use crate::trees::{FlatTree, PlaneTree};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Letters of `U^{p1-1} D U^{p2-1} D ...` for the given parts.
fn composition_word(parts: &[usize]) -> Vec<Step> {
    let mut steps = Vec::new();
    for &p in parts {
        for _ in 1..p {
            steps.push(Step::Up);
        }
        steps.push(Step::Down);
    }
    steps
}

/// Index `r` such that rotating `parts` left by `r` makes the composition
/// word strictly positive on every nonempty prefix. Requires one more `U`
/// than `D` overall; the rotation exists, is unique, and starts at a part
/// boundary because such words end in `D`.
fn dominating_part_rotation(parts: &[usize]) -> usize {
    let steps = composition_word(parts);
    let shifts = dominating_shifts(&steps, 1);
    assert_eq!(shifts.len(), 1, "one more U than D forces a unique shift");
    let letter = shifts[0];
    let mut boundary = 0;
    for (i, &p) in parts.iter().enumerate() {
        if boundary == letter {
            return i;
        }
        boundary += p;
    }
    unreachable!("dominating shift lands on a part boundary");
}

/// Dyck word of a cyclic composition of `2k+1` into `k` parts: take the
/// strictly positive rotation of the composition word and drop its leading
/// `U`. Parts of size at least 2 map to `UD`-factors.
pub fn comp_to_dyck_plus(class: &CyclicComposition) -> Result<DyckWord> {
    let parts = class.canonical();
    let k = parts.len();
    if class.sum() != 2 * k + 1 {
        return Err(Error::BadShape(format!(
            "sum {} with {k} parts, need sum 2k+1",
            class.sum()
        )));
    }
    let r = dominating_part_rotation(parts);
    let mut rotated: Vec<usize> = parts[r..].to_vec();
    rotated.extend_from_slice(&parts[..r]);
    let steps = composition_word(&rotated);
    assert_eq!(steps[0], Step::Up, "strictly positive words start with U");
    DyckWord::new(&steps[1..])
}

/// Inverse of [`comp_to_dyck_plus`]: prepend `U`, then read off one part per
/// `D` (part = 1 + number of `U`s since the previous `D`). The returned
/// linear composition is the strictly positive rotation of its class.
pub fn comp_from_dyck_plus(w: &DyckWord) -> Result<Composition> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut steps = vec![Step::Up];
    steps.extend(w.steps());
    let mut parts = Vec::new();
    let mut run = 0;
    for step in steps {
        match step {
            Step::Up => run += 1,
            Step::Down => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Composition::new(parts)
}

/// Dyck word of a cyclic composition of `2k-1` into `k` parts: take the
/// unique rotation of the composition word whose proper prefixes never have
/// more `D`s than `U`s and drop its trailing `D`.
pub fn comp_to_dyck_minus(class: &CyclicComposition) -> Result<DyckWord> {
    let parts = class.canonical();
    let k = parts.len();
    if k == 0 || class.sum() != 2 * k - 1 {
        return Err(Error::BadShape(format!(
            "sum {} with {k} parts, need sum 2k-1",
            class.sum()
        )));
    }
    let steps = composition_word(parts);
    let seq: Vec<Marker> = steps
        .iter()
        .map(|&s| if s == Step::Up { Marker::Circle } else { Marker::Square })
        .collect();
    let shift = unique_balanced_shift(&seq)?;
    let rotated: Vec<Step> = (0..steps.len()).map(|i| steps[(shift + i) % steps.len()]).collect();
    assert_eq!(*rotated.last().unwrap(), Step::Down, "balanced rotations end in D");
    DyckWord::new(&rotated[..rotated.len() - 1])
}

/// Inverse of [`comp_to_dyck_minus`]: append `D`, then read off one part per
/// `D`. Always defined; the empty word maps to the one-part composition [1].
pub fn comp_from_dyck_minus(w: &DyckWord) -> Composition {
    let mut steps = w.steps();
    steps.push(Step::Down);
    let mut parts = Vec::new();
    let mut run = 0;
    for step in steps {
        match step {
            Step::Up => run += 1,
            Step::Down => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Composition::new(parts).expect("all parts are positive")
}

/// A necklace of `k` extended leaves with lengths summing to `2k+1`, with
/// `k-1` of its non-leaf vertices marked.
///
/// Lengths are stored in the strictly positive rotation (see
/// [`comp_to_dyck_plus`]); this is unambiguous because such compositions are
/// always primitive. Non-leaf vertices are labelled `1..=2k+1` block by
/// block, each leaf's block running from its top vertex inward.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedNecklace {
    lengths: Vec<usize>,
    marks: BTreeSet<usize>,
}

impl MarkedNecklace {
    /// Builds a marked necklace from lengths in any rotation and mark labels
    /// in that rotation's frame; both are normalised to the canonical
    /// rotation.
    pub fn new(lengths: &[usize], marks: &[usize]) -> Result<Self> {
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(Error::BadShape("lengths must be positive and nonempty".into()));
        }
        let k = lengths.len();
        let n: usize = lengths.iter().sum();
        if n != 2 * k + 1 {
            return Err(Error::BadShape(format!("lengths sum to {n}, need 2k+1 = {}", 2 * k + 1)));
        }
        let set: BTreeSet<usize> = marks.iter().copied().collect();
        if set.len() != marks.len() {
            return Err(Error::BadMarking("duplicate mark".into()));
        }
        if set.len() != k - 1 {
            return Err(Error::BadMarking(format!("{} marks, need k-1 = {}", set.len(), k - 1)));
        }
        if set.iter().any(|&m| m < 1 || m > n) {
            return Err(Error::BadMarking(format!("mark out of range 1..={n}")));
        }
        let r = dominating_part_rotation(lengths);
        let offset: usize = lengths[..r].iter().sum();
        let mut canonical: Vec<usize> = lengths[r..].to_vec();
        canonical.extend_from_slice(&lengths[..r]);
        let marks = set.into_iter().map(|m| (m - 1 + n - offset) % n + 1).collect();
        Ok(MarkedNecklace { lengths: canonical, marks })
    }

    /// Extended-leaf lengths in the canonical rotation.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Marked labels, ascending.
    pub fn marks(&self) -> impl Iterator<Item = usize> + '_ {
        self.marks.iter().copied()
    }

    /// Number of extended leaves.
    pub fn num_parts(&self) -> usize {
        self.lengths.len()
    }

    /// Number of non-leaf vertices (= sum of lengths).
    pub fn sum(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Number of parts of size at least 2.
    pub fn parts_ge2(&self) -> usize {
        self.lengths.iter().filter(|&&p| p >= 2).count()
    }

    /// Splits a label into (leaf index, depth below that leaf's top vertex).
    pub fn locate(&self, label: usize) -> (usize, usize) {
        assert!(label >= 1 && label <= self.sum(), "label in range");
        let mut rest = label - 1;
        for (i, &p) in self.lengths.iter().enumerate() {
            if rest < p {
                return (i, rest);
            }
            rest -= p;
        }
        unreachable!("labels are bounded by the length sum");
    }

    /// The underlying cyclic composition.
    pub fn class(&self) -> CyclicComposition {
        let comp = Composition::new(self.lengths.clone()).expect("positive parts");
        cyclic_of(&comp)
    }
}

impl fmt::Display for MarkedNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lengths: Vec<String> = self.lengths.iter().map(|p| p.to_string()).collect();
        let marks: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        write!(f, "[{} | {}]", lengths.join(","), marks.join(","))
    }
}

impl fmt::Debug for MarkedNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarkedNecklace({self})")
    }
}

/// All markings of the necklace with the given lengths: every
/// `(k-1)`-subset of the `2k+1` labels, in the canonical frame.
pub fn enumerate_markings(lengths: &[usize]) -> Result<Vec<MarkedNecklace>> {
    // Canonicalise the frame once via an unmarked validity probe.
    let probe: Vec<usize> = (1..lengths.len()).collect();
    let canonical = MarkedNecklace::new(lengths, &probe)?.lengths.clone();
    let k = canonical.len();
    let n = 2 * k + 1;
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        next: usize,
        n: usize,
        want: usize,
        current: &mut Vec<usize>,
        lengths: &[usize],
        out: &mut Vec<MarkedNecklace>,
    ) {
        if current.len() == want {
            out.push(MarkedNecklace::new(lengths, current).expect("valid marking"));
            return;
        }
        for label in next..=(n + 1 + current.len() - want) {
            current.push(label);
            extend(label + 1, n, want, current, lengths, out);
            current.pop();
        }
    }
    extend(1, n, k - 1, &mut current, &canonical, &mut out);
    Ok(out)
}

/// Number of distinct markings of an arbitrary necklace class: `k-1` marked
/// labels on the `n` vertices, counted up to simultaneous rotation of
/// lengths and labels. Serves as the enumeration route against the closed
/// count `(ord/k) C(n, k-1)` and against grouping Dyck words by cyclic rise
/// composition.
pub fn marked_class_count(class: &CyclicComposition) -> usize {
    let parts = class.canonical();
    let k = parts.len();
    let n: usize = parts.iter().sum();
    // Each rotation frame pairs a lengths arrangement with the label shift
    // that carries canonical-frame labels into it.
    let mut frames: Vec<(Vec<usize>, usize)> = Vec::with_capacity(k);
    let mut offset = 0usize;
    for r in 0..k {
        let mut lens: Vec<usize> = parts[r..].to_vec();
        lens.extend_from_slice(&parts[..r]);
        frames.push((lens, offset));
        offset += parts[r];
    }
    fn visit(
        next: usize,
        n: usize,
        want: usize,
        subset: &mut Vec<usize>,
        frames: &[(Vec<usize>, usize)],
        seen: &mut BTreeSet<(Vec<usize>, Vec<usize>)>,
    ) {
        if subset.len() == want {
            let key = frames
                .iter()
                .map(|(lens, offset)| {
                    let mut marks: Vec<usize> =
                        subset.iter().map(|&x| (x + n - offset) % n).collect();
                    marks.sort_unstable();
                    (lens.clone(), marks)
                })
                .min()
                .expect("nonempty class has at least one frame");
            seen.insert(key);
            return;
        }
        for x in next..n + 1 + subset.len() - want {
            subset.push(x);
            visit(x + 1, n, want, subset, frames, seen);
            subset.pop();
        }
    }
    let mut seen = BTreeSet::new();
    visit(0, n, k - 1, &mut Vec::new(), &frames, &mut seen);
    seen.len()
}

/// Arena for growing a tree by hanging chains of vertices below marked
/// attachment points.
struct Builder {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    marks: Vec<usize>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            parent: vec![None],
            children: vec![Vec::new()],
            depth: vec![0],
            marks: vec![0],
        }
    }

    /// Hangs a chain of `len` new vertices below `top` (as its right-most
    /// child), returning the vertex ids at depths `0..=len` below `top`,
    /// starting with `top` itself.
    fn attach_chain(&mut self, top: usize, len: usize) -> Vec<usize> {
        let mut ids = vec![top];
        let mut cur = top;
        for _ in 0..len {
            let id = self.parent.len();
            self.parent.push(Some(cur));
            self.children.push(Vec::new());
            self.depth.push(self.depth[cur] + 1);
            self.marks.push(0);
            self.children[cur].push(id);
            ids.push(id);
            cur = id;
        }
        ids
    }

    /// The unique deepest vertex carrying an unused mark.
    fn deepest_marked(&self) -> usize {
        let best = (0..self.marks.len())
            .filter(|&v| self.marks[v] > 0)
            .max_by_key(|&v| self.depth[v])
            .expect("an unused mark remains");
        let ties = (0..self.marks.len())
            .filter(|&v| self.marks[v] > 0 && self.depth[v] == self.depth[best])
            .count();
        assert_eq!(ties, 1, "deepest marked vertex is unique");
        best
    }

    fn to_tree(&self) -> PlaneTree {
        fn build(b: &Builder, id: usize) -> PlaneTree {
            PlaneTree::new(b.children[id].iter().map(|&c| build(b, c)).collect())
        }
        build(self, 0)
    }
}

/// The plane tree selected by a marked necklace.
///
/// Reading one circle per mark and one square per leaf around the necklace,
/// the unique rotation whose proper prefixes have at least as many circles
/// as squares picks the starting leaf. Its top vertex becomes the root, and
/// each subsequent leaf (in cyclic order) is attached by identifying its top
/// vertex with the deepest still-marked vertex, consuming that mark.
pub fn tree_from_marked_necklace(neck: &MarkedNecklace) -> PlaneTree {
    let k = neck.num_parts();
    let lengths = neck.lengths();
    let mut marks_at: Vec<Vec<usize>> = vec![Vec::new(); k];
    for label in neck.marks() {
        let (leaf, pos) = neck.locate(label);
        marks_at[leaf].push(pos);
    }

    let start = if k == 1 {
        0
    } else {
        let mut seq = Vec::new();
        let mut owner = Vec::new();
        for i in 0..k {
            for _ in 0..marks_at[i].len() {
                seq.push(Marker::Circle);
                owner.push(i);
            }
            seq.push(Marker::Square);
            owner.push(i);
        }
        let shift = unique_balanced_shift(&seq).expect("k-1 circles and k squares");
        assert_eq!(seq[shift], Marker::Circle, "rotation starts at a mark");
        owner[shift]
    };

    let mut builder = Builder::new();
    let ids = builder.attach_chain(0, lengths[start]);
    for &pos in &marks_at[start] {
        builder.marks[ids[pos]] += 1;
    }
    for step in 1..k {
        let i = (start + step) % k;
        let at = builder.deepest_marked();
        builder.marks[at] -= 1;
        let ids = builder.attach_chain(at, lengths[i]);
        for &pos in &marks_at[i] {
            builder.marks[ids[pos]] += 1;
        }
    }
    assert!(builder.marks.iter().all(|&m| m == 0), "every mark is consumed");

    let tree = builder.to_tree();
    let expect: Vec<usize> = (0..k).map(|s| lengths[(start + s) % k]).collect();
    let got = crate::trees::extended_leaf_decomposition(&tree).expect("built tree has leaves");
    assert_eq!(got.lengths, expect, "decomposition returns the necklace");
    tree
}

/// Inverse of [`tree_from_marked_necklace`]: detach extended leaves right to
/// left; detaching a leaf marks its top vertex on the right-most earlier
/// extended leaf containing that vertex.
pub fn marked_necklace_from_tree(tree: &PlaneTree) -> Result<MarkedNecklace> {
    let flat = FlatTree::from_tree(tree);
    let leaves = flat.leaves();
    if leaves.is_empty() {
        return Err(Error::NoLeaves);
    }
    let k = leaves.len();
    let paths: Vec<Vec<usize>> = leaves.iter().map(|&l| flat.extended_leaf_path(l)).collect();
    let lengths: Vec<usize> = paths.iter().map(|p| p.len() - 1).collect();
    let n: usize = lengths.iter().sum();
    if n != 2 * k + 1 {
        return Err(Error::BadShape(format!("{n} edges with {k} leaves, need 2k+1 = {}", 2 * k + 1)));
    }
    let offsets: Vec<usize> = lengths
        .iter()
        .scan(0, |acc, &p| {
            let start = *acc;
            *acc += p;
            Some(start)
        })
        .collect();
    let mut marks = Vec::new();
    for i in (1..k).rev() {
        let top = paths[i][0];
        let j = (0..i)
            .rev()
            .find(|&j| paths[j].contains(&top))
            .expect("a top vertex is shared with an earlier extended leaf");
        let pos = paths[j].iter().position(|&v| v == top).unwrap();
        assert!(pos < lengths[j], "shared vertex is not the earlier leaf's leaf vertex");
        marks.push(offsets[j] + pos + 1);
    }
    MarkedNecklace::new(&lengths, &marks)
}
