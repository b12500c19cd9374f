//! Classical solvers and game-property predicates.

use rand::seq::SliceRandom;

use crate::game::{Game, QueryLedger, WinTable};
use crate::sampling::RngSeed;

/// Exact win table by bottom-up dynamic programming:
/// `w_j = 1` iff some legal move `j -> i` reaches a losing `i`.
pub fn solve_classical(game: &Game) -> WinTable {
    let mut table = WinTable::all_losing(game.n());
    resolve_from(game, &mut table, 1);
    table
}

/// Recompute `w_j` for `j >= from` in place, trusting `w_0..w_{from-1}`.
///
/// A change to row `j` of the game can only affect positions `>= j`, so
/// after editing row `j` of a solved game this restores an exact table at
/// a fraction of the cost of [`solve_classical`].
pub fn resolve_from(game: &Game, table: &mut WinTable, from: usize) {
    debug_assert_eq!(game.n(), table.n());
    for j in from.max(1)..=game.n() {
        let row = game.row(j);
        // Row bits at positions >= j are zero, so stale w bits above j
        // never leak into the test.
        let win = row
            .iter()
            .zip(table.words())
            .any(|(&moves, &w)| moves & !w != 0);
        table.set(j, win);
    }
}

/// Order in which the instrumented solver probes the bits of one row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanOrder {
    #[default]
    Ascending,
    Descending,
    /// An independent uniformly random permutation per row.
    SeededRandom(RngSeed),
}

/// Dynamic programming that reads the game only through counted oracle
/// calls, probing each row in `order` and abandoning the row as soon as a
/// move to a known losing position is found.
pub fn solve_classical_instrumented(
    game: &Game,
    ledger: &mut QueryLedger,
    order: ScanOrder,
) -> WinTable {
    scan(game, ledger, order, true)
}

/// Same as [`solve_classical_instrumented`] but never exits a row early, so
/// it reads every one of the `n(n+1)/2` bits exactly once.
pub fn solve_classical_full_scan(game: &Game, ledger: &mut QueryLedger) -> WinTable {
    scan(game, ledger, ScanOrder::Ascending, false)
}

fn scan(game: &Game, ledger: &mut QueryLedger, order: ScanOrder, early_exit: bool) -> WinTable {
    let n = game.n();
    let mut table = WinTable::all_losing(n);
    let mut rng = match order {
        ScanOrder::SeededRandom(seed) => Some(seed.rng()),
        _ => None,
    };
    let mut perm: Vec<usize> = Vec::new();
    for j in 1..=n {
        let mut win = false;
        let mut probe = |i: usize| {
            let edge = game
                .get_counted(ledger, j, i)
                .expect("scan stays inside the triangle");
            if edge && !table.get(i) {
                win = true;
            }
            early_exit && win
        };
        match order {
            ScanOrder::Ascending => {
                for i in 0..j {
                    if probe(i) {
                        break;
                    }
                }
            }
            ScanOrder::Descending => {
                for i in (0..j).rev() {
                    if probe(i) {
                        break;
                    }
                }
            }
            ScanOrder::SeededRandom(_) => {
                perm.clear();
                perm.extend(0..j);
                perm.shuffle(rng.as_mut().unwrap());
                for &i in &perm {
                    if probe(i) {
                        break;
                    }
                }
            }
        }
        table.set(j, win);
    }
    table
}

/// Number of winning moves available at position `j`.
pub fn winning_move_count(game: &Game, table: &WinTable, j: usize) -> usize {
    game.row(j)
        .iter()
        .zip(table.words())
        .map(|(&moves, &w)| (moves & !w).count_ones() as usize)
        .sum()
}

/// Every position has at most one winning move. `table` must be the exact
/// solution of `game`.
pub fn is_sensitive(game: &Game, table: &WinTable) -> bool {
    (1..=game.n()).all(|j| winning_move_count(game, table, j) <= 1)
}

/// `|n/2 - #winning positions| <= k/2`. `table` must be exact.
pub fn is_balanced(table: &WinTable, k: usize) -> bool {
    table.is_balanced(k)
}

/// `Win(Γ) = 0`.
pub fn is_losing(table: &WinTable) -> bool {
    table.is_losing()
}
