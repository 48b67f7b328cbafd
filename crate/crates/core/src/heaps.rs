//! Monomer–dimer heaps: settling, canonical words, pyramids, and the
//! correspondence with closed Motzkin paths.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec::{self, Parallelism};
use crate::paths::{self, Letter, LetterKind, MotzkinPath, PathWord};

/// A monomer `m_i` on column `i`, or a dimer `d_i` on columns `i-1, i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Monomer(u32),
    Dimer(u32),
}

impl Piece {
    pub fn m(i: u32) -> Piece {
        Piece::Monomer(i)
    }

    pub fn d(i: u32) -> Result<Piece> {
        if i == 0 {
            return Err(Error::Index("dimer index must be at least 1".into()));
        }
        Ok(Piece::Dimer(i))
    }

    /// Inclusive column range.
    pub fn support(self) -> (u32, u32) {
        match self {
            Piece::Monomer(i) => (i, i),
            Piece::Dimer(i) => (i - 1, i),
        }
    }

    pub fn min_col(self) -> u32 {
        self.support().0
    }

    pub fn max_col(self) -> u32 {
        self.support().1
    }

    pub fn intersects(self, other: Piece) -> bool {
        let (a0, a1) = self.support();
        let (b0, b1) = other.support();
        a0 <= b1 && b0 <= a1
    }

    pub fn is_dimer(self) -> bool {
        matches!(self, Piece::Dimer(_))
    }

    fn kind_str(self) -> &'static str {
        match self {
            Piece::Monomer(_) => "m",
            Piece::Dimer(_) => "d",
        }
    }

    fn index(self) -> u32 {
        match self {
            Piece::Monomer(i) | Piece::Dimer(i) => i,
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind_str(), self.index())
    }
}

impl FromStr for Piece {
    type Err = Error;

    fn from_str(s: &str) -> Result<Piece> {
        let bad = || Error::Parse(format!("bad piece {s:?}"));
        if !s.is_char_boundary(1) {
            return Err(bad());
        }
        let (k, idx) = s.split_at(1);
        let i: u32 = idx.parse().map_err(|_| bad())?;
        match k {
            "m" => Ok(Piece::m(i)),
            "d" => Piece::d(i),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HeapWord {
    pieces: Vec<Piece>,
}

impl HeapWord {
    pub fn new(pieces: Vec<Piece>) -> HeapWord {
        HeapWord { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

impl fmt::Display for HeapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for HeapWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<HeapWord> {
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(HeapWord::new)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placed {
    pub piece: Piece,
    pub level: u32,
}

/// A settled configuration, stored level by level and left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Heap {
    placed: Vec<Placed>,
}

impl Heap {
    pub fn placed(&self) -> &[Placed] {
        &self.placed
    }

    pub fn len(&self) -> usize {
        self.placed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placed.is_empty()
    }

    pub fn dimers(&self) -> usize {
        self.placed.iter().filter(|p| p.piece.is_dimer()).count()
    }

    pub fn monomers(&self) -> usize {
        self.len() - self.dimers()
    }

    pub fn max_col(&self) -> Option<u32> {
        self.placed.iter().map(|p| p.piece.max_col()).max()
    }

    /// Pieces with nothing overlapping above them.
    pub fn maximal_pieces(&self) -> Vec<Piece> {
        self.placed
            .iter()
            .filter(|p| {
                !self.placed.iter().any(|q| q.level > p.level && q.piece.intersects(p.piece))
            })
            .map(|p| p.piece)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let pieces: Vec<Value> = self
            .placed
            .iter()
            .map(|p| json!({"kind": p.piece.kind_str(), "i": p.piece.index(), "level": p.level}))
            .collect();
        json!({ "pieces": pieces })
    }

    /// Rows from the top level down; `m` for a monomer, `<` `>` for the two
    /// halves of a dimer, `.` for an empty cell.
    pub fn to_ascii(&self) -> String {
        let Some(width) = self.max_col().map(|c| c as usize + 1) else {
            return String::from("(empty)\n");
        };
        let top = self.placed.iter().map(|p| p.level).max().unwrap();
        let mut out = String::new();
        for level in (0..=top).rev() {
            let mut row = vec!['.'; width];
            for p in self.placed.iter().filter(|p| p.level == level) {
                match p.piece {
                    Piece::Monomer(i) => row[i as usize] = 'm',
                    Piece::Dimer(i) => {
                        row[i as usize - 1] = '<';
                        row[i as usize] = '>';
                    }
                }
            }
            let cells: Vec<String> = row.iter().map(char::to_string).collect();
            out.push_str(&format!("{level:>3} | {}\n", cells.join(" ")));
        }
        let cols: Vec<String> = (0..width).map(|c| (c % 10).to_string()).collect();
        out.push_str(&format!("    + {}\n", cols.join(" ")));
        out
    }
}

impl fmt::Display for Heap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.placed.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}@{}", p.piece, p.level)?;
        }
        Ok(())
    }
}

/// Drops pieces left to right, each as far down as earlier pieces allow.
pub fn settle(w: &HeapWord) -> Heap {
    let mut heights: Vec<u32> = Vec::new();
    let mut placed = Vec::with_capacity(w.len());
    for &piece in &w.pieces {
        let (lo, hi) = piece.support();
        if heights.len() <= hi as usize {
            heights.resize(hi as usize + 1, 0);
        }
        let cols = &mut heights[lo as usize..=hi as usize];
        let level = cols.iter().copied().max().unwrap();
        cols.fill(level + 1);
        placed.push(Placed { piece, level });
    }
    placed.sort_by_key(|p| (p.level, p.piece.min_col()));
    Heap { placed }
}

pub fn canonical_word(h: &Heap) -> HeapWord {
    HeapWord::new(h.placed.iter().map(|p| p.piece).collect())
}

pub fn heaps_equivalent(w1: &HeapWord, w2: &HeapWord) -> bool {
    settle(w1) == settle(w2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pyramid {
    No,
    Yes(Piece),
}

pub fn is_pyramid(h: &Heap) -> Pyramid {
    match h.maximal_pieces().as_slice() {
        [summit] => Pyramid::Yes(*summit),
        _ => Pyramid::No,
    }
}

/// Reads a closed path word right to left, dropping `b`s and sending
/// `a_i ↦ d_{i+1}`, `c_i ↦ m_i`.
pub fn motzkin_to_heap(w: &PathWord) -> Result<HeapWord> {
    if !w.is_closed() {
        return Err(Error::Domain(format!(
            "path word runs from level {} to {}, not a closed path",
            w.start_level(),
            w.end_level()
        )));
    }
    let pieces = w
        .letters()
        .iter()
        .rev()
        .filter_map(|l| match l.kind {
            LetterKind::A => Some(Piece::Dimer(l.height + 1)),
            LetterKind::B => None,
            LetterKind::C => Some(Piece::Monomer(l.height)),
        })
        .collect();
    Ok(HeapWord::new(pieces))
}

struct Rebuild<'a> {
    pieces: Vec<Piece>,
    below: Vec<Vec<usize>>,
    used: Vec<bool>,
    letters: Vec<Letter>,
    found: &'a mut Vec<Vec<Letter>>,
}

impl Rebuild<'_> {
    fn search(&mut self, g: u32, remaining: usize) {
        if self.found.len() > 1 {
            return;
        }
        if remaining == 0 {
            if g == 0 {
                self.found.push(self.letters.clone());
            }
            return;
        }
        for idx in 0..self.pieces.len() {
            if self.used[idx] || self.below[idx].iter().any(|&j| !self.used[j]) {
                continue;
            }
            let (top, letter, next_g) = match self.pieces[idx] {
                Piece::Monomer(i) => (i, Letter::c(i), i),
                Piece::Dimer(i) => (i, Letter::a(i - 1), i - 1),
            };
            if g > top {
                continue;
            }
            let mark = self.letters.len();
            self.letters.extend((g + 1..=top).map(Letter::b));
            self.letters.push(letter);
            self.used[idx] = true;
            self.search(next_g, remaining - 1);
            self.used[idx] = false;
            self.letters.truncate(mark);
        }
    }
}

/// Inverse of [`motzkin_to_heap`] by exhaustive search over destruction
/// orders. Fails unless exactly one closed path maps onto `h`.
pub fn heap_to_motzkin(h: &Heap) -> Result<MotzkinPath> {
    match is_pyramid(h) {
        Pyramid::Yes(Piece::Monomer(0)) | Pyramid::Yes(Piece::Dimer(1)) => {}
        Pyramid::Yes(other) => {
            return Err(Error::NotInImage(format!("summit is {other}, expected m0 or d1")));
        }
        Pyramid::No => return Err(Error::NotInImage("heap is not a pyramid".into())),
    }
    let pieces: Vec<Piece> = h.placed.iter().map(|p| p.piece).collect();
    let below = h
        .placed
        .iter()
        .map(|p| {
            h.placed
                .iter()
                .enumerate()
                .filter(|(_, q)| q.level < p.level && q.piece.intersects(p.piece))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let n = pieces.len();
    Rebuild { pieces, below, used: vec![false; n], letters: Vec::new(), found: &mut found }.search(0, n);
    match found.len() {
        1 => {
            let mut letters = found.pop().unwrap();
            letters.reverse();
            Ok(PathWord::new(letters)?.to_path())
        }
        0 => Err(Error::BijectionViolation(format!("no closed path maps to {h}"))),
        _ => Err(Error::BijectionViolation(format!("several closed paths map to {h}"))),
    }
}

/// Alphabet `m_0..m_{cols-1}, d_1..d_{cols-1}` over `cols` needles.
pub fn needle_alphabet(cols: u32) -> Vec<Piece> {
    (0..cols).map(Piece::Monomer).chain((1..cols).map(Piece::Dimer)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceOracleReport {
    pub max_len: usize,
    pub words: u64,
    pub classes: u64,
    /// Words whose commutation class and settled heap disagree, by length.
    pub mismatches: Vec<(usize, u64)>,
}

impl TraceOracleReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn decode(mut code: u64, len: usize, alphabet: &[Piece]) -> Vec<Piece> {
    let k = alphabet.len() as u64;
    let mut out = vec![alphabet[0]; len];
    for slot in out.iter_mut().rev() {
        *slot = alphabet[(code % k) as usize];
        code /= k;
    }
    out
}

fn encode(word: &[Piece], alphabet: &[Piece]) -> u64 {
    let k = alphabet.len() as u64;
    word.iter().fold(0, |acc, p| acc * k + alphabet.iter().position(|a| a == p).unwrap() as u64)
}

/// Compares heap equivalence with the closure of adjacent swaps of
/// disjoint-support pieces, over every word of length `0..=max_len`.
pub fn trace_oracle(cols: u32, max_len: usize, mode: Parallelism) -> TraceOracleReport {
    let alphabet = needle_alphabet(cols);
    let k = alphabet.len() as u64;
    let mut report = TraceOracleReport { max_len, words: 0, classes: 0, mismatches: Vec::new() };
    for len in 0..=max_len {
        let total = k.pow(len as u32);
        let mut class = vec![u32::MAX; total as usize];
        let mut next_class = 0u32;
        let mut queue = VecDeque::new();
        for start in 0..total {
            if class[start as usize] != u32::MAX {
                continue;
            }
            class[start as usize] = next_class;
            queue.push_back(start);
            while let Some(code) = queue.pop_front() {
                let word = decode(code, len, &alphabet);
                for j in 0..len.saturating_sub(1) {
                    if word[j] == word[j + 1] || word[j].intersects(word[j + 1]) {
                        continue;
                    }
                    let mut swapped = word.clone();
                    swapped.swap(j, j + 1);
                    let c = encode(&swapped, &alphabet) as usize;
                    if class[c] == u32::MAX {
                        class[c] = next_class;
                        queue.push_back(c as u64);
                    }
                }
            }
            next_class += 1;
        }
        let canon: Vec<u64> = exec::map_range(mode, total as usize, |code| {
            let w = HeapWord::new(decode(code as u64, len, &alphabet));
            encode(canonical_word(&settle(&w)).pieces(), &alphabet)
        });
        let mut by_class: HashMap<u32, u64> = HashMap::new();
        let mut by_heap: HashMap<u64, u32> = HashMap::new();
        let mut bad = 0u64;
        for (code, &key) in canon.iter().enumerate() {
            let c = class[code];
            let a = *by_class.entry(c).or_insert(key);
            let b = *by_heap.entry(key).or_insert(c);
            if a != key || b != c {
                bad += 1;
            }
        }
        report.words += total;
        report.classes += next_class as u64;
        if bad > 0 {
            report.mismatches.push((len, bad));
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub max_len: usize,
    pub paths: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_one_path(p: &MotzkinPath) -> Result<(Heap, Vec<String>)> {
    let word = paths::path_word(p);
    let heap = settle(&motzkin_to_heap(&word)?);
    let mut fails = Vec::new();
    let summit = is_pyramid(&heap);
    if !matches!(summit, Pyramid::Yes(Piece::Monomer(0)) | Pyramid::Yes(Piece::Dimer(1))) {
        fails.push(format!("{p}: image is not a pyramid with summit m0 or d1"));
    }
    if heap.max_col().is_some_and(|c| c > p.max_height()) {
        fails.push(format!("{p}: heap leaves the interval [0, {}]", p.max_height()));
    }
    if p.is_dyck() && (heap.monomers() > 0 || summit != Pyramid::Yes(Piece::Dimer(1))) {
        fails.push(format!("{p}: Dyck path image is not an all-dimer pyramid over d1"));
    }
    if p.len() != 2 * heap.dimers() + heap.monomers() {
        fails.push(format!("{p}: length differs from 2d+m"));
    }
    match heap_to_motzkin(&heap) {
        Ok(back) if back == *p => {}
        Ok(back) => fails.push(format!("{p}: reconstructed as {back}")),
        Err(e) => fails.push(format!("{p}: {e}")),
    }
    Ok((heap, fails))
}

/// Checks the path ↔ pyramid correspondence on every nonempty closed path
/// of length at most `max_len`.
pub fn check_path_heap_bijection(max_len: usize, mode: Parallelism) -> Result<BijectionReport> {
    let mut all = Vec::new();
    for n in 1..=max_len {
        all.extend(paths::enumerate_paths_with(mode, 0, 0, n)?);
    }
    let results = exec::map(mode, &all, check_one_path);
    let mut failures = Vec::new();
    let mut seen = BTreeSet::new();
    for (p, r) in all.iter().zip(results) {
        let (heap, fails) = r?;
        failures.extend(fails);
        if !seen.insert(canonical_word(&heap).to_string()) {
            failures.push(format!("{p}: image coincides with another path's heap"));
        }
    }
    Ok(BijectionReport { max_len, paths: all.len(), failures })
}
