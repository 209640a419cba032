//! Exhaustive, clue-constrained enumeration of solutions and circuits.

mod engine;

use std::collections::BinaryHeap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::construct::CyclicPath;
use crate::error::Result;
use crate::grid::{BoardDims, Cell, Symmetry};
use crate::model::{ClueSet, Solution, SolveOutcome, Value};

use engine::{Problem, Root};

type ProgressFn = dyn Fn(usize, usize) + Send + Sync;

/// Cooperative cancellation and progress reporting for long searches.
///
/// Cancellation is polled between branch expansions; a cancelled search
/// returns [`crate::Error::Cancelled`]. The progress callback receives
/// `(finished_tasks, total_tasks)` from worker threads.
#[derive(Clone, Default)]
pub struct SearchControl {
    cancel: Arc<AtomicBool>,
    progress: Option<Arc<ProgressFn>>,
}

impl SearchControl {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_progress(mut self, f: impl Fn(usize, usize) + Send + Sync + 'static) -> Self {
        self.progress = Some(Arc::new(f));
        self
    }

    pub fn cancel(&self) {
        self.cancel.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.cancel.load(Ordering::Relaxed)
    }

    pub(crate) fn report(&self, done: usize, total: usize) {
        if let Some(f) = &self.progress {
            f(done, total);
        }
    }
}

impl fmt::Debug for SearchControl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchControl")
            .field("cancelled", &self.is_cancelled())
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

/// Keeps the `limit` lexicographically smallest value arrays seen.
struct Smallest {
    limit: usize,
    heap: BinaryHeap<Vec<Value>>,
}

impl Smallest {
    fn new(limit: usize) -> Self {
        Smallest { limit, heap: BinaryHeap::new() }
    }

    fn offer(&mut self, values: &[Value]) {
        if self.limit == 0 {
            return;
        }
        if self.heap.len() < self.limit {
            self.heap.push(values.to_vec());
        } else if let Some(top) = self.heap.peek() {
            if values < top.as_slice() {
                self.heap.pop();
                self.heap.push(values.to_vec());
            }
        }
    }

    fn absorb(&mut self, other: Smallest) {
        for v in other.heap {
            self.offer(&v);
        }
    }

    fn into_sorted(self) -> Vec<Vec<Value>> {
        self.heap.into_sorted_vec()
    }
}

/// Configurable clue-constrained search.
#[derive(Debug)]
pub struct Solver<'a> {
    clues: &'a ClueSet,
    cap: Option<u64>,
    retain: usize,
    control: SearchControl,
}

impl<'a> Solver<'a> {
    pub fn new(clues: &'a ClueSet) -> Self {
        Solver { clues, cap: None, retain: 0, control: SearchControl::default() }
    }

    /// Stop counting once this many solutions are known.
    pub fn cap(mut self, cap: Option<u64>) -> Self {
        self.cap = cap;
        self
    }

    /// Number of canonical-order solutions to keep.
    pub fn retain(mut self, retain: usize) -> Self {
        self.retain = retain;
        self
    }

    pub fn control(mut self, control: SearchControl) -> Self {
        self.control = control;
        self
    }

    pub fn run(self) -> Result<SolveOutcome> {
        let dims = self.clues.dims();
        let problem = Problem::new(self.clues);
        let roots = problem.default_roots();
        let (total, kept) = if self.retain == 0 {
            let counts = engine::count(&problem, &roots, self.cap, &self.control)?;
            (counts.into_iter().map(|(_, c)| c).sum::<u64>(), Vec::new())
        } else {
            let cap = self.cap;
            let retain = self.retain;
            let parts = engine::run(
                &problem,
                &roots,
                || (0u64, Smallest::new(retain)),
                |(count, best), values| {
                    *count += 1;
                    best.offer(values);
                    cap.is_none_or(|c| *count < c)
                },
                &self.control,
            )?;
            let mut best = Smallest::new(retain);
            let mut total = 0;
            for (_, (count, part)) in parts {
                total += count;
                best.absorb(part);
            }
            (total, best.into_sorted())
        };
        let capped = self.cap.is_some_and(|c| total >= c);
        let count = match self.cap {
            Some(c) if capped => c,
            _ => total,
        };
        let solutions = kept.into_iter().map(|v| Solution::from_values_unchecked(dims, v)).collect();
        Ok(SolveOutcome { count, capped, solutions })
    }
}

/// Counts the solutions matching `clues` (up to `count_cap`) and keeps the
/// first `retain` of them in lexicographic row-major order.
pub fn solve(clues: &ClueSet, count_cap: Option<u64>, retain: usize) -> SolveOutcome {
    Solver::new(clues).cap(count_cap).retain(retain).run().expect("uncancellable search")
}

/// True iff exactly one solution matches `clues`.
pub fn defines_puzzle(clues: &ClueSet) -> bool {
    solve(clues, Some(2), 0).is_unique()
}

/// Folds every solution matching `clues` into an accumulator.
///
/// Work is split into tasks that run in parallel, each folding into an
/// accumulator from `init`; partial accumulators are combined with `merge`.
/// The grouping of solutions into accumulators depends on scheduling, so the
/// result is reproducible only when `merge` is associative and commutative
/// (sums, saturating counts, sorted collections).
pub fn fold_solutions<A, I, V, M>(clues: &ClueSet, control: &SearchControl, init: I, visit: V, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[Value]) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let problem = Problem::new(clues);
    let roots = problem.default_roots();
    engine::run_fold(&problem, &roots, init, visit, merge, control)
}

/// Start cells grouped into orbits under the board's symmetries; each
/// representative is weighted by its orbit size.
fn start_orbits(dims: BoardDims) -> Vec<(Root, u64)> {
    let syms = Symmetry::all_for(dims);
    let mut out = Vec::new();
    for cell in dims.iter_cells() {
        let idx = dims.index(cell);
        let mut orbit: Vec<usize> = syms.iter().map(|s| dims.index(s.map(dims, cell))).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit[0] == idx {
            out.push((Root { cell: idx as u8, value: 1 }, orbit.len() as u64));
        }
    }
    out
}

/// Number of solutions of the empty puzzle, i.e. directed Hamiltonian paths.
pub fn count_hamiltonian_paths(dims: BoardDims) -> u64 {
    count_hamiltonian_paths_with(dims, &SearchControl::default()).expect("uncancellable search")
}

pub fn count_hamiltonian_paths_with(dims: BoardDims, control: &SearchControl) -> Result<u64> {
    let problem = Problem::new(&ClueSet::new(dims));
    let orbits = start_orbits(dims);
    let roots: Vec<Root> = orbits.iter().map(|(r, _)| *r).collect();
    let counts = engine::count(&problem, &roots, None, control)?;
    Ok(counts.into_iter().map(|(i, c)| c * orbits[i].1).sum())
}

/// Pins a circuit to start at (0,0) and leave toward (0,1); it must close
/// through (1,0). `None` when the board is a single row or column.
fn circuit_clues(dims: BoardDims) -> Option<ClueSet> {
    if dims.rows() < 2 || dims.cols() < 2 {
        return None;
    }
    let pairs = [(Cell::new(0, 0), 1), (Cell::new(0, 1), 2), (Cell::new(1, 0), dims.cells())];
    Some(ClueSet::from_pairs(dims, pairs).expect("distinct in-bounds clues"))
}

/// Number of undirected Hamiltonian circuits of the grid graph.
pub fn count_hamiltonian_circuits(dims: BoardDims) -> u64 {
    circuit_clues(dims).map_or(0, |clues| solve(&clues, None, 0).count)
}

/// Every Hamiltonian circuit in canonical form, in lexicographic order of
/// their labelings.
pub fn all_circuits(dims: BoardDims) -> Vec<CyclicPath> {
    let Some(clues) = circuit_clues(dims) else {
        return Vec::new();
    };
    let out = solve(&clues, None, usize::MAX);
    out.solutions.iter().map(|s| CyclicPath::new(dims, s.path()).expect("closed path")).collect()
}

/// Every solution of the empty `dims` puzzle exactly once, ascending in
/// lexicographic row-major order.
///
/// Solutions are produced one group at a time (all solutions with a given
/// value in the top-left cell), so only a single group is held in memory.
pub fn all_solutions(dims: BoardDims) -> AllSolutions {
    AllSolutions::new(dims, SearchControl::default())
}

pub struct AllSolutions {
    dims: BoardDims,
    next_value: usize,
    group: std::vec::IntoIter<Vec<Value>>,
    control: SearchControl,
}

impl AllSolutions {
    pub fn new(dims: BoardDims, control: SearchControl) -> Self {
        AllSolutions { dims, next_value: 1, group: Vec::new().into_iter(), control }
    }

    fn load_group(&mut self, first: usize) -> Result<Vec<Vec<Value>>> {
        let clues = ClueSet::from_pairs(self.dims, [(Cell::new(0, 0), first)])?;
        let mut group = fold_solutions(
            &clues,
            &self.control,
            Vec::new,
            |acc: &mut Vec<Vec<Value>>, v| acc.push(v.to_vec()),
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        )?;
        group.sort_unstable();
        Ok(group)
    }
}

impl Iterator for AllSolutions {
    type Item = Solution;

    fn next(&mut self) -> Option<Solution> {
        loop {
            if let Some(v) = self.group.next() {
                return Some(Solution::from_values_unchecked(self.dims, v));
            }
            if self.next_value > self.dims.cells() {
                return None;
            }
            let first = self.next_value;
            self.next_value += 1;
            // a cancelled control ends the stream early
            self.group = self.load_group(first).ok()?.into_iter();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_valid_solution, matches};

    fn dims(r: usize, c: usize) -> BoardDims {
        BoardDims::new(r, c).unwrap()
    }

    fn clues(d: BoardDims, pairs: &[((usize, usize), usize)]) -> ClueSet {
        ClueSet::from_pairs(d, pairs.iter().map(|&((r, c), v)| (Cell::new(r, c), v))).unwrap()
    }

    #[test]
    fn three_by_three_example_is_unique() {
        let d = dims(3, 3);
        let out = solve(&clues(d, &[((2, 1), 6), ((1, 2), 2)]), None, 5);
        assert_eq!(out.count, 1);
        assert!(!out.capped);
        assert_eq!(out.solutions[0].values(), &[9, 4, 3, 8, 5, 2, 7, 6, 1]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(solve(&ClueSet::new(dims(1, 1)), None, 0).count, 1);
        assert_eq!(solve(&clues(dims(2, 2), &[((1, 0), 2), ((0, 1), 4)]), None, 0).count, 2);
        assert_eq!(count_hamiltonian_paths(dims(1, 1)), 1);
        assert_eq!(count_hamiltonian_paths(dims(2, 2)), 8);
        assert_eq!(count_hamiltonian_circuits(dims(3, 3)), 0);
        assert_eq!(count_hamiltonian_circuits(dims(2, 2)), 1);
        assert_eq!(count_hamiltonian_circuits(dims(2, 3)), 1);
        assert_eq!(count_hamiltonian_circuits(dims(1, 4)), 0);
        assert_eq!(count_hamiltonian_circuits(dims(4, 1)), 0);
    }

    #[test]
    fn symmetric_count_matches_plain_count() {
        for (r, c) in [(2, 3), (3, 3), (3, 4), (4, 4), (2, 5), (4, 5)] {
            let d = dims(r, c);
            assert_eq!(count_hamiltonian_paths(d), solve(&ClueSet::new(d), None, 0).count, "{d}");
        }
    }

    #[test]
    fn cap_and_retention() {
        let d = dims(3, 4);
        let empty = ClueSet::new(d);
        let full = solve(&empty, None, usize::MAX);
        assert_eq!(full.count, 124);
        assert_eq!(full.solutions.len(), 124);
        assert!(full.solutions.windows(2).all(|w| w[0] < w[1]));
        let capped = solve(&empty, Some(10), 3);
        assert!(capped.capped);
        assert_eq!(capped.count, 10);
        assert_eq!(capped.solutions.len(), 3);
        let first3 = solve(&empty, None, 3);
        assert_eq!(&first3.solutions[..], &full.solutions[..3]);
        let big_cap = solve(&empty, Some(1000), 0);
        assert!(!big_cap.capped);
        assert_eq!(big_cap.count, 124);
    }

    #[test]
    fn defines_examples() {
        assert!(defines_puzzle(&clues(dims(3, 4), &[((0, 0), 4), ((1, 0), 5), ((2, 0), 12)])));
        let d = dims(4, 4);
        for cell in d.iter_cells() {
            for v in 1..=16 {
                let c = ClueSet::from_pairs(d, [(cell, v)]).unwrap();
                assert!(!defines_puzzle(&c));
            }
        }
    }

    #[test]
    fn all_solutions_order_and_validity() {
        let sols: Vec<Solution> = all_solutions(dims(1, 2)).collect();
        assert_eq!(sols.iter().map(|s| s.values().to_vec()).collect::<Vec<_>>(), vec![vec![1, 2], vec![2, 1]]);
        for (r, c) in [(2, 2), (3, 3), (2, 4), (3, 4)] {
            let d = dims(r, c);
            let sols: Vec<Solution> = all_solutions(d).collect();
            assert_eq!(sols.len() as u64, count_hamiltonian_paths(d));
            assert!(sols.windows(2).all(|w| w[0] < w[1]));
            assert!(sols.iter().all(|s| is_valid_solution(d, s.values()).unwrap()));
        }
    }

    #[test]
    fn infeasible_clues_count_zero() {
        let d = dims(3, 3);
        assert_eq!(solve(&clues(d, &[((0, 0), 2)]), None, 1).count, 0);
        assert_eq!(solve(&clues(d, &[((0, 0), 1), ((2, 2), 3)]), None, 1).count, 0);
    }

    #[test]
    fn anchored_at_middle_value() {
        // lowest clue above 1 exercises the two-ended search
        let d = dims(4, 4);
        let c = clues(d, &[((1, 1), 7), ((3, 3), 12)]);
        let out = solve(&c, None, usize::MAX);
        let brute: Vec<Solution> = all_solutions(d).filter(|s| matches(s, &c).unwrap()).collect();
        assert_eq!(out.count as usize, brute.len());
        assert_eq!(out.solutions, brute);
    }

    #[test]
    fn cancellation() {
        let control = SearchControl::new();
        control.cancel();
        assert!(count_hamiltonian_paths_with(dims(5, 5), &control).is_err());
    }

    #[test]
    fn circuits_are_canonical() {
        let d = dims(4, 4);
        let cs = all_circuits(d);
        assert_eq!(cs.len(), 6);
        for c in &cs {
            assert_eq!(c.cells()[0], Cell::new(0, 0));
            assert_eq!(c.cells()[1], Cell::new(0, 1));
        }
    }
}
