//! The search engine against independent brute-force enumeration.

mod common;

use common::{clues, dims, naive_solutions, permutation_solutions_3x3};
use numbrix::{all_solutions, count_hamiltonian_paths, defines_puzzle, solve, Cell, ClueSet, Solution};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn values(sols: &[Solution]) -> Vec<Vec<u8>> {
    sols.iter().map(|s| s.values().to_vec()).collect()
}

#[test]
fn three_by_three_matches_permutation_check() {
    let perms = permutation_solutions_3x3();
    assert_eq!(perms.len(), 40);
    let engine: Vec<Solution> = all_solutions(dims(3, 3)).collect();
    assert_eq!(values(&engine), perms);
}

#[test]
fn path_counts_match_naive_enumeration() {
    for m in 1..=4 {
        for n in m..=5 {
            let d = dims(m, n);
            let naive = naive_solutions(d, &ClueSet::new(d));
            assert_eq!(count_hamiltonian_paths(d), naive.len() as u64, "{d}");
            let engine: Vec<Solution> = all_solutions(d).collect();
            assert_eq!(values(&engine), naive, "{d}");
        }
    }
}

#[test]
fn known_path_counts() {
    let expected = [((1, 1), 1), ((2, 2), 8), ((2, 3), 16), ((3, 3), 40), ((3, 4), 124), ((4, 4), 552), ((3, 5), 264), ((5, 5), 8648), ((6, 6), 458696)];
    for ((m, n), count) in expected {
        assert_eq!(count_hamiltonian_paths(dims(m, n)), count, "{m}x{n}");
        assert_eq!(count_hamiltonian_paths(dims(n, m)), count, "{n}x{m}");
    }
}

/// Random clue sets: half taken from a random solution (so feasible), half
/// arbitrary (mostly infeasible).
#[test]
fn random_clue_sets_match_naive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, n) in [(2, 4), (3, 3), (3, 4), (4, 4), (3, 5), (4, 5)] {
        let d = dims(m, n);
        let all: Vec<Solution> = all_solutions(d).collect();
        let cells: Vec<Cell> = d.iter_cells().collect();
        for round in 0..40 {
            let k = rng.gen_range(0..=4);
            let chosen: Vec<Cell> = cells.choose_multiple(&mut rng, k).copied().collect();
            let c = if round % 2 == 0 {
                all.choose(&mut rng).unwrap().clues_at(chosen)
            } else {
                let mut vals: Vec<usize> = (1..=d.cells()).collect();
                vals.shuffle(&mut rng);
                ClueSet::from_pairs(d, chosen.into_iter().zip(vals)).unwrap()
            };
            let naive = naive_solutions(d, &c);
            let out = solve(&c, None, usize::MAX);
            assert_eq!(out.count as usize, naive.len(), "{d}\n{c}");
            assert_eq!(values(&out.solutions), naive, "{d}\n{c}");
            assert_eq!(defines_puzzle(&c), naive.len() == 1);
        }
    }
}

#[test]
fn three_clues_define_some_seven_by_seven_puzzles() {
    let d = dims(7, 7);
    for pairs in [[((3, 3), 1), ((0, 1), 6), ((2, 0), 31)], [((2, 2), 1), ((1, 4), 20), ((1, 5), 7)]] {
        let c = clues(d, &pairs);
        let naive = naive_solutions(d, &c);
        assert_eq!(naive.len(), 1, "{c}");
        let out = solve(&c, None, 1);
        assert!(out.is_unique());
        assert_eq!(out.solutions[0].values(), &naive[0][..]);
    }
}
