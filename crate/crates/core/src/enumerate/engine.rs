//! Bitmask backtracking over Hamiltonian paths with clue anchoring.
//!
//! A search grows a contiguous run of values outward from an anchor cell.
//! The head extends upward to `mn`; once it gets there the tail extends
//! downward to 1. The anchor is the lowest clue, so no clues remain when the
//! tail phase starts. After each step the free region is checked for cells
//! that can no longer be threaded (degree pruning) and for splits that leave
//! a piece unreachable or of the wrong size (connectivity pruning).

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::BoardDims;
use crate::model::{ClueSet, Value};

use super::SearchControl;

pub(crate) type Mask = u128;

const NONE: u8 = u8::MAX;
const TICK: u64 = 1 << 14;
const TARGET_TASKS: usize = 768;
const MAX_SPLIT_LEVELS: usize = 16;

#[inline]
fn bit(i: u8) -> Mask {
    1u128 << i
}

pub(crate) struct Geometry {
    cols: u32,
    full: Mask,
    not_first_col: Mask,
    not_last_col: Mask,
    nbr: Vec<([u8; 4], u8)>,
    nbr_mask: Vec<Mask>,
    // ring around each cell: up, up-right, right, down-right, down, down-left, left, up-left
    ring: Vec<[u8; 8]>,
    row: Vec<u8>,
    col: Vec<u8>,
}

impl Geometry {
    pub(crate) fn new(dims: BoardDims) -> Self {
        let (rows, cols) = (dims.rows(), dims.cols());
        let cells = rows * cols;
        let full = if cells == 128 { Mask::MAX } else { (1u128 << cells) - 1 };
        let mut first_col = 0;
        let mut last_col = 0;
        for r in 0..rows {
            first_col |= 1u128 << (r * cols);
            last_col |= 1u128 << (r * cols + cols - 1);
        }
        let at = |r: isize, c: isize| -> u8 {
            if r < 0 || c < 0 || r >= rows as isize || c >= cols as isize {
                NONE
            } else {
                (r as usize * cols + c as usize) as u8
            }
        };
        let mut nbr = Vec::with_capacity(cells);
        let mut nbr_mask = Vec::with_capacity(cells);
        let mut ring = Vec::with_capacity(cells);
        let mut row = Vec::with_capacity(cells);
        let mut col = Vec::with_capacity(cells);
        for i in 0..cells {
            let (r, c) = ((i / cols) as isize, (i % cols) as isize);
            let mut list = [NONE; 4];
            let mut len = 0u8;
            let mut mask = 0;
            for (dr, dc) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                let j = at(r + dr, c + dc);
                if j != NONE {
                    list[len as usize] = j;
                    len += 1;
                    mask |= bit(j);
                }
            }
            nbr.push((list, len));
            nbr_mask.push(mask);
            ring.push([
                at(r - 1, c),
                at(r - 1, c + 1),
                at(r, c + 1),
                at(r + 1, c + 1),
                at(r + 1, c),
                at(r + 1, c - 1),
                at(r, c - 1),
                at(r - 1, c - 1),
            ]);
            row.push(r as u8);
            col.push(c as u8);
        }
        Geometry {
            cols: cols as u32,
            full,
            not_first_col: full & !first_col,
            not_last_col: full & !last_col,
            nbr,
            nbr_mask,
            ring,
            row,
            col,
        }
    }

    #[inline]
    fn neighbors(&self, i: u8) -> &[u8] {
        let (list, len) = &self.nbr[i as usize];
        &list[..*len as usize]
    }

    #[inline]
    fn distance(&self, a: u8, b: u8) -> usize {
        let (a, b) = (a as usize, b as usize);
        (self.row[a].abs_diff(self.row[b]) + self.col[a].abs_diff(self.col[b])) as usize
    }

    #[inline]
    fn expand(&self, x: Mask) -> Mask {
        (x | (x << self.cols) | (x >> self.cols) | ((x << 1) & self.not_first_col) | ((x >> 1) & self.not_last_col))
            & self.full
    }

    #[inline]
    fn flood(&self, seed: Mask, within: Mask) -> Mask {
        let mut comp = seed & within;
        loop {
            let next = self.expand(comp) & within;
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    /// Whether removing `cell` from `free` could disconnect the free cells
    /// around it. Conservative: `false` only when the free orthogonal
    /// neighbors stay linked through free diagonal cells.
    #[inline]
    fn may_split(&self, cell: u8, free: Mask) -> bool {
        let ring = &self.ring[cell as usize];
        let on = |k: usize| ring[k] != NONE && free & bit(ring[k]) != 0;
        let orth = [on(0), on(2), on(4), on(6)];
        let count = orth.iter().filter(|&&b| b).count();
        if count <= 1 {
            return false;
        }
        let mut joins = 0;
        for k in 0..4 {
            if orth[k] && orth[(k + 1) % 4] && on(2 * k + 1) {
                joins += 1;
            }
        }
        let groups = if joins == 4 { 1 } else { count - joins };
        groups > 1
    }
}

/// A board plus clue constraints, ready to search.
pub(crate) struct Problem {
    geo: Geometry,
    n: usize,
    clue_at: Vec<u8>,
    cell_for: Vec<u8>,
    next_clue: Vec<u8>,
    clue_mask: Mask,
    feasible: bool,
}

/// Where a search starts: `value` is placed on `cell` before any move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Root {
    pub cell: u8,
    pub value: u8,
}

#[derive(Clone, Debug)]
struct Prefix {
    root: usize,
    moves: Vec<u8>,
}

impl Problem {
    pub(crate) fn new(clues: &ClueSet) -> Self {
        let dims = clues.dims();
        let n = dims.cells();
        let mut clue_at = vec![0u8; n];
        let mut cell_for = vec![NONE; n + 2];
        let mut clue_mask = 0;
        for (cell, v) in clues.iter() {
            let i = dims.index(cell) as u8;
            clue_at[i as usize] = v;
            cell_for[v as usize] = i;
            clue_mask |= bit(i);
        }
        let mut next_clue = vec![0u8; n + 2];
        let mut upcoming = 0u8;
        for v in (0..=n).rev() {
            next_clue[v] = upcoming;
            if v >= 1 && cell_for[v] != NONE {
                upcoming = v as u8;
            }
        }
        let feasible = crate::model::clue_screen(clues);
        Problem { geo: Geometry::new(dims), n, clue_at, cell_for, next_clue, clue_mask, feasible }
    }

    /// Roots for this problem: the lowest clue, or value 1 on every cell when
    /// there are no clues.
    pub(crate) fn default_roots(&self) -> Vec<Root> {
        match (1..=self.n).find(|&v| self.cell_for[v] != NONE) {
            Some(v) => vec![Root { cell: self.cell_for[v], value: v as u8 }],
            None => (0..self.n).map(|c| Root { cell: c as u8, value: 1 }).collect(),
        }
    }

    fn walker(&self, root: Root) -> Option<Walker<'_>> {
        if !self.feasible {
            return None;
        }
        let v = root.value as usize;
        if self.clue_at[root.cell as usize] != 0 && self.clue_at[root.cell as usize] != root.value {
            return None;
        }
        if self.cell_for[v] != NONE && self.cell_for[v] != root.cell {
            return None;
        }
        // no clue may sit below the anchor
        if (1..v).any(|u| self.cell_for[u] != NONE) {
            return None;
        }
        // with an odd cell count, odd values take the larger (white) class
        if self.n % 2 == 1 {
            let (r, c) = (self.geo.row[root.cell as usize], self.geo.col[root.cell as usize]);
            let white = (r + c) % 2 == 0;
            if white != (v % 2 == 1) {
                return None;
            }
        }
        let mut values = vec![0u8; self.n];
        values[root.cell as usize] = root.value;
        let mut w = Walker {
            p: self,
            values,
            free: self.geo.full & !bit(root.cell),
            head: root.cell,
            hi: root.value,
            tail: root.cell,
            lo: root.value,
            split: false,
            nodes: 0,
        };
        w.split = w.check_components()?;
        if !w.quick_viable() {
            return None;
        }
        Some(w)
    }
}

enum Flow {
    Continue,
    Stop,
}

struct Walker<'p> {
    p: &'p Problem,
    values: Vec<u8>,
    free: Mask,
    head: u8,
    hi: u8,
    tail: u8,
    lo: u8,
    // free cells currently form two pieces, one per end
    split: bool,
    nodes: u64,
}

impl<'p> Walker<'p> {
    #[inline]
    fn complete(&self) -> bool {
        self.hi as usize == self.p.n && self.lo == 1
    }

    #[inline]
    fn head_active(&self) -> bool {
        (self.hi as usize) < self.p.n
    }

    fn candidates(&self) -> ([u8; 4], usize) {
        let mut out = [NONE; 4];
        let mut len = 0;
        let geo = &self.p.geo;
        if self.head_active() {
            let next = self.hi as usize + 1;
            let forced = self.p.cell_for[next];
            if forced != NONE {
                if self.free & bit(forced) != 0 && geo.nbr_mask[self.head as usize] & bit(forced) != 0 {
                    out[0] = forced;
                    len = 1;
                }
            } else {
                for &c in geo.neighbors(self.head) {
                    if self.free & bit(c) != 0 && self.p.clue_at[c as usize] == 0 {
                        out[len] = c;
                        len += 1;
                    }
                }
            }
        } else {
            for &c in geo.neighbors(self.tail) {
                if self.free & bit(c) != 0 {
                    out[len] = c;
                    len += 1;
                }
            }
        }
        (out, len)
    }

    /// Places the next value on `cell`; returns the end it replaced.
    #[inline]
    fn apply(&mut self, cell: u8) -> u8 {
        self.free &= !bit(cell);
        if self.head_active() {
            self.hi += 1;
            self.values[cell as usize] = self.hi;
            std::mem::replace(&mut self.head, cell)
        } else {
            self.lo -= 1;
            self.values[cell as usize] = self.lo;
            std::mem::replace(&mut self.tail, cell)
        }
    }

    #[inline]
    fn undo(&mut self, cell: u8, prev: u8) {
        self.free |= bit(cell);
        let v = self.values[cell as usize];
        self.values[cell as usize] = 0;
        if v == self.hi && cell == self.head {
            self.hi -= 1;
            self.head = prev;
        } else {
            self.lo += 1;
            self.tail = prev;
        }
    }

    /// Cheap local tests after a step: clue reachability, adjacency of both
    /// ends to free cells, and the degree bound.
    #[inline]
    fn quick_viable(&self) -> bool {
        let p = self.p;
        let geo = &p.geo;
        let free = self.free;
        if free == 0 {
            return true;
        }
        let head_left = p.n - self.hi as usize;
        let tail_left = self.lo as usize - 1;
        if head_left > 0 {
            let w = p.next_clue[self.hi as usize];
            if w != 0 && geo.distance(self.head, p.cell_for[w as usize]) > (w - self.hi) as usize {
                return false;
            }
        }
        let head_adj = if head_left > 0 { geo.nbr_mask[self.head as usize] } else { 0 };
        let tail_adj = if tail_left > 0 { geo.nbr_mask[self.tail as usize] } else { 0 };
        if head_left > 0 && free & head_adj == 0 {
            return false;
        }
        if tail_left > 0 && free & tail_adj == 0 {
            return false;
        }
        // count, for each free cell, how many path neighbors it could still use
        let cols = geo.cols;
        let sources = [
            free << cols,
            free >> cols,
            (free << 1) & geo.not_first_col,
            (free >> 1) & geo.not_last_col,
            head_adj,
            tail_adj,
        ];
        let mut ones: Mask = 0;
        let mut twos: Mask = 0;
        for s in sources {
            twos |= ones & s;
            ones |= s;
        }
        if free & !ones != 0 {
            return false;
        }
        let ends = (head_left > 0) as u32 + (tail_left > 0) as u32;
        (free & !twos).count_ones() <= ends
    }

    /// Full component analysis of the free region. `None` when some free
    /// cell can no longer be covered; otherwise whether the free cells fall
    /// into two pieces, one for each end.
    fn check_components(&self) -> Option<bool> {
        let p = self.p;
        let geo = &p.geo;
        let free = self.free;
        if free == 0 {
            return Some(false);
        }
        let head_left = p.n - self.hi as usize;
        let tail_left = self.lo as usize - 1;
        let head_adj = if head_left > 0 { geo.nbr_mask[self.head as usize] & free } else { 0 };
        let tail_adj = if tail_left > 0 { geo.nbr_mask[self.tail as usize] & free } else { 0 };
        if (head_left > 0 && head_adj == 0) || (tail_left > 0 && tail_adj == 0) {
            return None;
        }
        let first = geo.flood(free & free.wrapping_neg(), free);
        if first == free {
            return Some(false);
        }
        // two pieces at most, each served by a different end
        if head_left == 0 || tail_left == 0 {
            return None;
        }
        let second = free & !first;
        if geo.flood(second & second.wrapping_neg(), second) != second {
            return None;
        }
        let fits = |h: Mask, t: Mask| {
            h & head_adj != 0 && t & tail_adj != 0 && h.count_ones() as usize == head_left && t & p.clue_mask == 0
        };
        (fits(first, second) || fits(second, first)).then_some(true)
    }

    /// Viability after stepping onto `moved`, with the new split flag.
    #[inline]
    fn viable_after(&self, moved: u8) -> Option<bool> {
        if !self.quick_viable() {
            return None;
        }
        // a single connected region stays connected when the removed cell's
        // free neighbors are linked around it
        if self.split || self.p.geo.may_split(moved, self.free) {
            return self.check_components();
        }
        Some(false)
    }

    fn search<V: FnMut(&[Value]) -> bool>(&mut self, visit: &mut V, control: &SearchControl) -> Result<Flow> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(TICK) && control.is_cancelled() {
            return Err(Error::Cancelled);
        }
        if self.complete() {
            return Ok(if visit(&self.values) { Flow::Continue } else { Flow::Stop });
        }
        let (cands, len) = self.candidates();
        let was_split = self.split;
        for &c in &cands[..len] {
            let prev = self.apply(c);
            let flow = match self.viable_after(c) {
                Some(split) => {
                    self.split = split;
                    let flow = self.search(visit, control);
                    self.split = was_split;
                    flow?
                }
                None => Flow::Continue,
            };
            self.undo(c, prev);
            if let Flow::Stop = flow {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }

    fn replay(&mut self, moves: &[u8]) {
        if moves.is_empty() {
            return;
        }
        for &c in moves {
            self.apply(c);
        }
        self.split = self.check_components().expect("prefix was viable");
    }

    /// One-level expansion for work splitting; `None` when the prefix is
    /// already a complete solution.
    fn children(&mut self) -> Option<Vec<u8>> {
        if self.complete() {
            return None;
        }
        let (cands, len) = self.candidates();
        let mut out = Vec::with_capacity(len);
        for &c in &cands[..len] {
            let prev = self.apply(c);
            if self.viable_after(c).is_some() {
                out.push(c);
            }
            self.undo(c, prev);
        }
        Some(out)
    }
}

/// Splits the search below `roots` into independent prefixes. The split
/// depends only on the problem, never on the thread count, so per-task
/// results are reproducible.
fn split(problem: &Problem, roots: &[Root]) -> Vec<Prefix> {
    let mut frontier: Vec<(Prefix, bool)> = Vec::new();
    for (i, &root) in roots.iter().enumerate() {
        if problem.walker(root).is_some() {
            frontier.push((Prefix { root: i, moves: Vec::new() }, false));
        }
    }
    for _ in 0..MAX_SPLIT_LEVELS {
        if frontier.len() >= TARGET_TASKS || frontier.iter().all(|(_, done)| *done) {
            break;
        }
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for (prefix, done) in frontier {
            if done {
                next.push((prefix, true));
                continue;
            }
            let mut w = problem.walker(roots[prefix.root]).expect("root was viable");
            w.replay(&prefix.moves);
            match w.children() {
                None => next.push((prefix, true)),
                Some(kids) => {
                    for c in kids {
                        let mut moves = prefix.moves.clone();
                        moves.push(c);
                        next.push((Prefix { root: prefix.root, moves }, false));
                    }
                }
            }
        }
        frontier = next;
    }
    frontier.into_iter().map(|(p, _)| p).collect()
}

/// Runs the search under every root in parallel. Each task folds its
/// solutions into a fresh accumulator; results come back in a fixed order
/// tagged with their root index. `visit` returns `false` to end its task.
pub(crate) fn run<A, I, F>(
    problem: &Problem,
    roots: &[Root],
    init: I,
    visit: F,
    control: &SearchControl,
) -> Result<Vec<(usize, A)>>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[Value]) -> bool + Sync,
{
    let tasks = split(problem, roots);
    let total = tasks.len();
    let done = AtomicUsize::new(0);
    tasks
        .par_iter()
        .map(|prefix| {
            if control.is_cancelled() {
                return Err(Error::Cancelled);
            }
            let mut acc = init();
            let mut w = problem.walker(roots[prefix.root]).expect("root was viable");
            w.replay(&prefix.moves);
            w.search(&mut |values: &[Value]| visit(&mut acc, values), control)?;
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            control.report(finished, total);
            Ok((prefix.root, acc))
        })
        .collect()
}

/// Like [`run`] but folds all tasks into accumulators created per worker
/// split and combined with `merge`. Suited to large accumulators whose
/// merge is associative and commutative.
pub(crate) fn run_fold<A, I, F, M>(
    problem: &Problem,
    roots: &[Root],
    init: I,
    visit: F,
    merge: M,
    control: &SearchControl,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[Value]) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let tasks = split(problem, roots);
    let total = tasks.len();
    let done = AtomicUsize::new(0);
    tasks
        .par_iter()
        .try_fold(&init, |mut acc, prefix| {
            if control.is_cancelled() {
                return Err(Error::Cancelled);
            }
            let mut w = problem.walker(roots[prefix.root]).expect("root was viable");
            w.replay(&prefix.moves);
            w.search(
                &mut |values: &[Value]| {
                    visit(&mut acc, values);
                    true
                },
                control,
            )?;
            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
            control.report(finished, total);
            Ok(acc)
        })
        .try_reduce(&init, |a, b| Ok(merge(a, b)))
}

/// Counts solutions, stopping early once `cap` are known to exist.
pub(crate) fn count(problem: &Problem, roots: &[Root], cap: Option<u64>, control: &SearchControl) -> Result<Vec<(usize, u64)>> {
    let found = AtomicU64::new(0);
    run(
        problem,
        roots,
        || 0u64,
        |acc, _| {
            *acc += 1;
            match cap {
                None => true,
                Some(cap) => found.fetch_add(1, Ordering::Relaxed) + 1 < cap,
            }
        },
        control,
    )
}
