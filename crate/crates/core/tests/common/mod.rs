//! Independent brute-force oracles. They share no code with the search
//! engine: plain recursion over cell coordinates, checking clues only when a
//! value is placed.

#![allow(dead_code)]

use numbrix::{BoardDims, Cell, ClueSet};

/// Every solution matching `clues`, as row-major value arrays, sorted.
/// A solution is a Hamiltonian path, so it is grown from each possible
/// start cell one orthogonal step at a time.
pub fn naive_solutions(dims: BoardDims, clues: &ClueSet) -> Vec<Vec<u8>> {
    let (m, n) = (dims.rows(), dims.cols());
    let total = m * n;
    let mut wanted = vec![0u8; total];
    let mut where_value = vec![None; total + 1];
    for (cell, v) in clues.iter() {
        wanted[cell.row * n + cell.col] = v;
        where_value[v as usize] = Some(cell.row * n + cell.col);
    }
    let mut out = Vec::new();
    let mut grid = vec![0u8; total];
    let starts: Vec<usize> = match where_value[1] {
        Some(i) => vec![i],
        None => (0..total).collect(),
    };
    for s in starts {
        if wanted[s] != 0 && wanted[s] != 1 {
            continue;
        }
        grid[s] = 1;
        extend(m, n, s, 1, &wanted, &where_value, &mut grid, &mut out);
        grid[s] = 0;
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(m: usize, n: usize, at: usize, v: usize, wanted: &[u8], where_value: &[Option<usize>], grid: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    let total = m * n;
    if v == total {
        out.push(grid.clone());
        return;
    }
    let next = v + 1;
    // a clue ahead must still be reachable in time
    if let Some(target) = (next..=total).find_map(|w| where_value[w].map(|c| (w, c))) {
        let (w, c) = target;
        let dist = (at / n).abs_diff(c / n) + (at % n).abs_diff(c % n);
        if dist > w - v {
            return;
        }
    }
    let (r, c) = (at / n, at % n);
    let mut steps = Vec::with_capacity(4);
    if r > 0 {
        steps.push(at - n);
    }
    if r + 1 < m {
        steps.push(at + n);
    }
    if c > 0 {
        steps.push(at - 1);
    }
    if c + 1 < n {
        steps.push(at + 1);
    }
    for s in steps {
        if grid[s] != 0 {
            continue;
        }
        let ok = if wanted[s] != 0 {
            wanted[s] as usize == next
        } else {
            where_value[next].is_none()
        };
        if !ok {
            continue;
        }
        grid[s] = next as u8;
        extend(m, n, s, next, wanted, where_value, grid, out);
        grid[s] = 0;
    }
}

/// All solutions of a 3×3 board found by testing every permutation of 1..=9.
pub fn permutation_solutions_3x3() -> Vec<Vec<u8>> {
    let mut perm: Vec<u8> = (1..=9).collect();
    let mut out = Vec::new();
    permute(&mut perm, 0, &mut out);
    out.sort();
    out
}

fn permute(p: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == p.len() {
        let mut pos = [0usize; 10];
        for (i, &v) in p.iter().enumerate() {
            pos[v as usize] = i;
        }
        let adjacent = (1..9).all(|v| {
            let (a, b) = (pos[v], pos[v + 1]);
            (a / 3).abs_diff(b / 3) + (a % 3).abs_diff(b % 3) == 1
        });
        if adjacent {
            out.push(p.clone());
        }
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

pub fn dims(m: usize, n: usize) -> BoardDims {
    BoardDims::new(m, n).unwrap()
}

pub fn clues(d: BoardDims, pairs: &[((usize, usize), usize)]) -> ClueSet {
    ClueSet::from_pairs(d, pairs.iter().map(|&((r, c), v)| (Cell::new(r, c), v))).unwrap()
}
