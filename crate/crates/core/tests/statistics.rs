//! Seeded statistical checks of the samplers, the Grover subroutine and the
//! lemma-1 estimator.

use subgame_core::experiments::{
    crucial_bit_census, exact_flip_win_probability, lemma1_mechanism, lemma1_trials,
};
use subgame_core::quantum::{grover_is_zero_among, grover_search_sim, grover_success_probability};
use subgame_core::{
    bit_count, flat_index, flip_random_bit, sample_iid, sample_lsb, solve_classical, Game,
    LsbConfig, Mode, QueryLedger, RngSeed, WinTable,
};

fn within_sigmas(count: usize, trials: usize, p: f64, sigmas: f64) -> bool {
    let mean = trials as f64 * p;
    let sd = (trials as f64 * p * (1.0 - p)).sqrt();
    (count as f64 - mean).abs() <= sigmas * sd
}

#[test]
fn flip_positions_are_uniform() {
    let game = sample_iid(20, 0.5, RngSeed::new(1)).unwrap();
    let draws = 100_000;
    let mut hits = vec![0usize; bit_count(20)];
    for s in 0..draws {
        let (_, flip) = flip_random_bit(&game, RngSeed::new(2).stream(s)).unwrap();
        hits[flat_index(flip.j, flip.i)] += 1;
    }
    let p = 1.0 / 210.0;
    for (flat, &h) in hits.iter().enumerate() {
        assert!(within_sigmas(h, draws as usize, p, 5.0), "position {flat}: {h}");
    }
}

#[test]
fn iid_edge_count_mean_is_binomial() {
    let (n, p, reps) = (60usize, 0.3, 400u64);
    let m = bit_count(n) as f64;
    let total: usize = (0..reps)
        .map(|s| sample_iid(n, p, RngSeed::new(5).stream(s)).unwrap().stats().edge_count)
        .sum();
    let mean = total as f64 / reps as f64;
    let sd_of_mean = (m * p * (1.0 - p) / reps as f64).sqrt();
    assert!((mean - m * p).abs() <= 4.0 * sd_of_mean, "{mean}");
}

#[test]
fn lsb_structure() {
    for n in [10usize, 37, 100, 200] {
        let cfg = LsbConfig::minimal(n);
        for s in 0..30 {
            let sample = sample_lsb(cfg, RngSeed::new(n as u64).stream(s)).unwrap();
            let (g, labels) = (&sample.game, &sample.labels);
            for j in 1..=n {
                let losing_successors = (0..j).filter(|&i| g.get(j, i).unwrap() && !labels.get(i)).count();
                if labels.get(j) {
                    assert_eq!(losing_successors, 1, "winning {j} needs exactly one losing successor");
                } else {
                    assert_eq!(losing_successors, 0, "losing {j} connects to a losing position");
                }
            }
        }
    }
}

#[test]
fn lsb_pinned_win_count() {
    let cfg = LsbConfig {
        win_count: Some(7),
        ..LsbConfig::new(12, 2)
    };
    for s in 0..20 {
        assert_eq!(sample_lsb(cfg, RngSeed::new(s)).unwrap().labels.win_count(), 7);
    }
}

#[test]
fn model_subroutine_is_a_fair_coin() {
    let g = Game::from_subtraction_set(8, &[1, 3]);
    let w = solve_classical(&g);
    // Row 5 reaches 4 (losing) and 2 (losing).
    let trials = 10_000;
    let mut ledger = QueryLedger::new();
    let ones = (0..trials)
        .filter(|&s| grover_is_zero_among(&g, &w, 5, Mode::Model, RngSeed::new(s), &mut ledger).unwrap())
        .count();
    assert!(within_sigmas(ones, trials as usize, 0.5, 3.0), "{ones}");
    // ceil(sqrt 5) + 1 = 4 per call.
    assert_eq!(ledger.gamma_queries(), 4 * trials);
}

#[test]
fn statevector_subroutine_succeeds_at_least_half_the_time() {
    // j = 4 with exactly one move into a losing position.
    let g = Game::from_fn(4, |j, i| j != 4 || i == 2);
    let w = WinTable::from_bits(&[0, 1, 0, 1, 0]).unwrap();
    let trials = 10_000;
    let mut ledger = QueryLedger::new();
    let ones = (0..trials)
        .filter(|&s| {
            grover_is_zero_among(&g, &w, 4, Mode::Statevector, RngSeed::new(s), &mut ledger).unwrap()
        })
        .count();
    assert!(ones as f64 / trials as f64 >= 0.5, "{ones}");
}

#[test]
fn statevector_subroutine_success_across_domains() {
    // Worst case for the budget: a single solution in a large register.
    for j in [7usize, 31, 100, 257] {
        let g = Game::from_fn(j, |row, i| row == j && i == j / 2);
        let w = WinTable::from_bits(&vec![0; j + 1]).unwrap();
        let trials = 2000;
        let mut ledger = QueryLedger::new();
        let ones = (0..trials)
            .filter(|&s| {
                grover_is_zero_among(&g, &w, j, Mode::Statevector, RngSeed::new(s), &mut ledger).unwrap()
            })
            .count();
        assert!(ones as f64 / trials as f64 >= 0.5, "j = {j}: {ones}/{trials}");
    }
}

#[test]
fn grover_sim_padding_domain_matches_formula_over_register() {
    // m = 5 pads to M = 8; statistics follow the register size.
    let trials = 20_000;
    let hits = (0..trials)
        .filter(|&s| grover_search_sim(|x| x == 3, 5, 2, RngSeed::new(s)).verified)
        .count();
    let p = grover_success_probability(8, 1, 2).unwrap();
    assert!(within_sigmas(hits, trials as usize, p, 3.0), "{hits} vs {p}");
}

#[test]
fn lemma1_mechanism_always_flips_the_game() {
    let mut fired = 0;
    for n in [20usize, 60, 200] {
        let trials = lemma1_trials(n, 4000, n % 2, RngSeed::new(n as u64)).unwrap();
        for t in &trials {
            if t.mechanism {
                fired += 1;
                assert!(t.win_after, "n = {n}, sample {}", t.sample_index);
            }
        }
    }
    assert!(fired > 100, "mechanism fired only {fired} times");
}

#[test]
fn mechanism_check_on_exhaustive_flips() {
    // Every qualifying flip of every bit of a few LSB games.
    for s in 0..20 {
        let sample = sample_lsb(LsbConfig::new(30, 0), RngSeed::new(s)).unwrap();
        for j in 1..=30 {
            for i in 0..j {
                let mut h = sample.game.clone();
                let old_value = h.flip(j, i).unwrap();
                let flip = subgame_core::BitFlip {
                    j,
                    i,
                    old_value,
                    new_value: !old_value,
                };
                if lemma1_mechanism(&sample.game, &sample.labels, &flip) {
                    assert!(solve_classical(&h).win());
                }
            }
        }
    }
}

#[test]
fn census_matches_per_game_flip_frequency() {
    let sample = sample_lsb(LsbConfig::new(40, 0), RngSeed::new(17)).unwrap();
    let exact = exact_flip_win_probability(&sample.game);
    assert_eq!(exact, crucial_bit_census(&sample.game) as f64 / bit_count(40) as f64);
    let draws = 20_000;
    let wins = (0..draws)
        .filter(|&s| {
            let (h, _) = flip_random_bit(&sample.game, RngSeed::new(18).stream(s)).unwrap();
            solve_classical(&h).win()
        })
        .count();
    assert!(within_sigmas(wins, draws as usize, exact, 3.0), "{wins} vs {exact}");
}
