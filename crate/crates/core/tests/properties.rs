//! Property tests for the invariants that tie the modules together.

mod common;

use std::sync::OnceLock;

use numbrix::cli::{format_puzzle, parse_puzzle, PuzzleDocument};
use numbrix::{
    all_solutions, apply_symmetry, cell_color, clue_screen, is_valid_solution, matches, neighbors, reverse_clues, reverse_solution, solve, BoardDims,
    Cell, ClueSet, Color, Solution, Symmetry,
};
use proptest::prelude::*;

/// Boards up to 4×5 with their full solution lists, computed once.
fn catalogue() -> &'static Vec<(BoardDims, Vec<Solution>)> {
    static CACHE: OnceLock<Vec<(BoardDims, Vec<Solution>)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for m in 1..=4 {
            for n in 1..=5 {
                let d = BoardDims::new(m, n).unwrap();
                out.push((d, all_solutions(d).collect()));
            }
        }
        out
    })
}

fn board() -> impl Strategy<Value = usize> {
    0..catalogue().len()
}

/// A solution and a clue subset drawn from it.
fn consistent_clues() -> impl Strategy<Value = (Solution, ClueSet)> {
    (board(), any::<prop::sample::Index>(), prop::collection::vec(any::<bool>(), 20)).prop_map(|(b, pick, mask)| {
        let (d, sols) = &catalogue()[b];
        let s = sols[pick.index(sols.len())].clone();
        let cells = d.iter_cells().zip(mask).filter(|(_, keep)| *keep).map(|(c, _)| c);
        let c = s.clues_at(cells);
        (s, c)
    })
}

/// An arbitrary well-formed clue set (frequently infeasible).
fn arbitrary_clues() -> impl Strategy<Value = ClueSet> {
    (board(), prop::collection::vec((0usize..20, 1usize..=20), 0..5)).prop_map(|(b, raw)| {
        let d = catalogue()[b].0;
        let mut c = ClueSet::new(d);
        for (i, v) in raw {
            let _ = c.insert(d.cell(i % d.cells()), (v - 1) % d.cells() + 1);
        }
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adjacency_is_symmetric_and_alternates_colour(m in 1usize..8, n in 1usize..8, r in 0usize..8, c in 0usize..8) {
        let d = BoardDims::new(m, n).unwrap();
        let cell = Cell::new(r % m, c % n);
        let nb = neighbors(d, cell).unwrap();
        prop_assert!(nb.len() <= 4);
        for x in nb {
            prop_assert_eq!(x.manhattan(cell), 1);
            prop_assert!(neighbors(d, x).unwrap().contains(&cell));
            prop_assert_ne!(cell_color(x), cell_color(cell));
        }
    }

    #[test]
    fn reversal_is_an_involution((s, c) in consistent_clues()) {
        let r = reverse_solution(&s);
        prop_assert!(is_valid_solution(s.dims(), r.values()).unwrap());
        prop_assert_eq!(reverse_solution(&r), s.clone());
        prop_assert_eq!(reverse_clues(&reverse_clues(&c)), c.clone());
        prop_assert!(matches(&r, &reverse_clues(&c)).unwrap());
    }

    #[test]
    fn reversal_preserves_counts(c in arbitrary_clues()) {
        prop_assert_eq!(solve(&c, None, 0).count, solve(&reverse_clues(&c), None, 0).count);
    }

    #[test]
    fn symmetries_preserve_counts((s, c) in consistent_clues(), k in 0usize..8) {
        let d = s.dims();
        let syms = Symmetry::all_for(d);
        let sym = syms[k % syms.len()];
        let image = apply_symmetry(&s, sym).unwrap();
        let mapped = image.clues_at(c.iter().map(|(cell, _)| sym.map(d, cell)));
        prop_assert_eq!(solve(&c, None, 0).count, solve(&mapped, None, 0).count);
    }

    #[test]
    fn screen_never_rejects_a_solvable_set(c in arbitrary_clues()) {
        if solve(&c, Some(1), 0).count > 0 {
            prop_assert!(clue_screen(&c));
        }
    }

    #[test]
    fn consistent_sets_are_solved_by_their_source((s, c) in consistent_clues()) {
        let out = solve(&c, None, usize::MAX);
        prop_assert!(out.count >= 1);
        prop_assert!(out.solutions.contains(&s));
        prop_assert!(out.solutions.iter().all(|t| matches(t, &c).unwrap()));
        prop_assert!(out.solutions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn adding_a_clue_never_adds_solutions((s, c) in consistent_clues(), pick in any::<prop::sample::Index>()) {
        let d = s.dims();
        let cell = d.cell(pick.index(d.cells()));
        let mut more = c.clone();
        if more.get(cell).is_none() {
            more.insert(cell, s.value_at(cell) as usize).unwrap();
        }
        let before = solve(&c, None, 0).count;
        let after = solve(&more, None, 0).count;
        prop_assert!(after <= before && after >= 1);
    }

    #[test]
    fn puzzle_text_round_trips(c in arbitrary_clues()) {
        let doc = PuzzleDocument::from_clues(c.clone());
        let text = format_puzzle(&doc);
        let back = parse_puzzle(&text).unwrap();
        prop_assert_eq!(back.clues(), &c);
        prop_assert_eq!(format_puzzle(&back), text);
    }

    #[test]
    fn caps_bound_counts(c in arbitrary_clues(), cap in 1u64..20) {
        let full = solve(&c, None, 0).count;
        let capped = solve(&c, Some(cap), 0);
        prop_assert_eq!(capped.count, full.min(cap));
        prop_assert_eq!(capped.capped, full >= cap);
    }
}

#[test]
fn odd_values_sit_on_white_when_both_sides_are_odd() {
    for (d, sols) in catalogue() {
        if d.rows() % 2 == 0 || d.cols() % 2 == 0 {
            continue;
        }
        for s in sols {
            for cell in d.iter_cells() {
                assert_eq!(s.value_at(cell) % 2 == 1, cell_color(cell) == Color::White);
            }
        }
    }
}

#[test]
fn defining_sizes_are_upward_closed() {
    use numbrix::{find_defining_set, SearchControl};
    for (d, _) in catalogue() {
        let n = d.cells().min(3);
        let found: Vec<bool> = (0..=n).map(|k| find_defining_set(*d, k, &SearchControl::new()).unwrap().is_some()).collect();
        for k in 0..n {
            assert!(!found[k] || found[k + 1], "{d}: size {k} defines but {} does not", k + 1);
        }
    }
}

#[test]
fn minimum_never_exceeds_the_block_bound() {
    use numbrix::min_clue_number;
    for m in 3..=5 {
        for n in m..=6 {
            let d = BoardDims::new(m, n).unwrap();
            let bound = m.div_ceil(2);
            let report = min_clue_number(d, bound).unwrap();
            assert!(report.k_min.is_some_and(|k| k <= bound), "{d}");
        }
    }
}
