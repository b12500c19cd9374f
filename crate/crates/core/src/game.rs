//! Subtraction game representation.
//!
//! A game on `n` stones is a lower-triangular bit matrix: bit `(j, i)` with
//! `0 <= i < j <= n` is set iff a player facing `j` stones may leave `i`.
//! Only those `n(n+1)/2` bits exist. Internally every row starts on a fresh
//! 64-bit word so the solvers can work a word at a time; unused high bits of
//! a row's last word are always zero.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Number of meaningful bits in a game on `n` stones.
#[inline]
pub fn bit_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Row-major flat index of bit `(j, i)`; rows start at `j = 1`.
#[inline]
pub fn flat_index(j: usize, i: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Inverse of [`flat_index`].
pub fn position_of(flat: usize) -> (usize, usize) {
    // Largest j with j(j-1)/2 <= flat.
    let mut j = (((8 * flat + 1) as f64).sqrt() as usize).div_ceil(2);
    while j * (j - 1) / 2 > flat {
        j -= 1;
    }
    while (j + 1) * j / 2 <= flat {
        j += 1;
    }
    (j, flat - j * (j - 1) / 2)
}

/// Counter of oracle reads of game bits.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct QueryLedger {
    gamma_queries: u64,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn gamma_queries(&self) -> u64 {
        self.gamma_queries
    }

    /// Charge `count` queries without reading anything. Used by cost models
    /// that account for oracle calls they do not perform literally.
    pub fn charge(&mut self, count: u64) {
        self.gamma_queries += count;
    }
}

/// The rules of one Subtraction game.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Game {
    n: usize,
    // offsets[j] is the first word of row j; offsets[n + 1] is the total.
    offsets: Vec<usize>,
    words: Vec<u64>,
}

impl std::fmt::Debug for Game {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Game(n={}, ", self.n)?;
        for j in 1..=self.n {
            if j > 1 {
                f.write_str("|")?;
            }
            for i in 0..j {
                f.write_str(if self.bit(j, i) { "1" } else { "0" })?;
            }
        }
        f.write_str(")")
    }
}

impl Game {
    /// The game on `n` stones with no legal moves at all.
    pub fn zero(n: usize) -> Self {
        let mut offsets = Vec::with_capacity(n + 2);
        offsets.push(0);
        offsets.push(0);
        for j in 1..=n {
            let next = offsets[j] + words_for(j);
            offsets.push(next);
        }
        let total = offsets[n + 1];
        Self {
            n,
            offsets,
            words: vec![0; total],
        }
    }

    /// The game where every move is legal (all meaningful bits set).
    pub fn full(n: usize) -> Self {
        let mut game = Self::zero(n);
        for j in 1..=n {
            let row = game.row_mut(j);
            let last = row.len() - 1;
            row.fill(u64::MAX);
            if j % WORD != 0 {
                row[last] = (1u64 << (j % WORD)) - 1;
            }
        }
        game
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut game = Self::zero(n);
        for j in 1..=n {
            for i in 0..j {
                if f(j, i) {
                    game.put(j, i, true);
                }
            }
        }
        game
    }

    /// Classic subtraction game: removing `s` stones is legal for every `s`
    /// in `set`.
    pub fn from_subtraction_set(n: usize, set: &[usize]) -> Self {
        Self::from_fn(n, |j, i| set.contains(&(j - i)))
    }

    /// Build from bits in flat row-major order. `bits.len()` must equal
    /// `bit_count(n)`.
    pub fn from_flat_bits(n: usize, bits: &[bool]) -> Result<Self> {
        if bits.len() != bit_count(n) {
            return Err(Error::InvalidArgument(format!(
                "expected {} bits for n = {n}, got {}",
                bit_count(n),
                bits.len()
            )));
        }
        let mut it = bits.iter();
        Ok(Self::from_fn(n, |_, _| *it.next().unwrap()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of meaningful bits, `n(n+1)/2`.
    pub fn bit_count(&self) -> usize {
        bit_count(self.n)
    }

    fn check(&self, j: usize, i: usize) -> Result<()> {
        if i < j && j <= self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { j, i, n: self.n })
        }
    }

    #[inline]
    pub(crate) fn bit(&self, j: usize, i: usize) -> bool {
        debug_assert!(i < j && j <= self.n);
        (self.words[self.offsets[j] + i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    fn put(&mut self, j: usize, i: usize, value: bool) {
        let word = &mut self.words[self.offsets[j] + i / WORD];
        let mask = 1u64 << (i % WORD);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Raw read of bit `(j, i)`. Not charged to any ledger.
    pub fn get(&self, j: usize, i: usize) -> Result<bool> {
        self.check(j, i)?;
        Ok(self.bit(j, i))
    }

    /// Oracle read of bit `(j, i)`: charges exactly one query per call.
    pub fn get_counted(&self, ledger: &mut QueryLedger, j: usize, i: usize) -> Result<bool> {
        self.check(j, i)?;
        ledger.gamma_queries += 1;
        Ok(self.bit(j, i))
    }

    pub fn set(&mut self, j: usize, i: usize, value: bool) -> Result<()> {
        self.check(j, i)?;
        self.put(j, i, value);
        Ok(())
    }

    /// Invert bit `(j, i)` and return its previous value.
    pub fn flip(&mut self, j: usize, i: usize) -> Result<bool> {
        self.check(j, i)?;
        let old = self.bit(j, i);
        self.put(j, i, !old);
        Ok(old)
    }

    /// Words holding row `j` (bit `i` of the row is bit `i % 64` of word
    /// `i / 64`). Bits at positions `>= j` are zero.
    #[inline]
    pub fn row(&self, j: usize) -> &[u64] {
        &self.words[self.offsets[j]..self.offsets[j + 1]]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, j: usize) -> &mut [u64] {
        let (start, end) = (self.offsets[j], self.offsets[j + 1]);
        &mut self.words[start..end]
    }

    /// Out-degree of position `j`, i.e. `|Adj[j]|`.
    pub fn degree(&self, j: usize) -> usize {
        self.row(j).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterator over all meaningful bits in flat row-major order.
    pub fn flat_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.n).flat_map(move |j| (0..j).map(move |i| self.bit(j, i)))
    }

    /// Number of meaningful bits in which two games of equal size differ.
    pub fn hamming_distance(&self, other: &Game) -> Option<usize> {
        (self.n == other.n).then(|| {
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| (a ^ b).count_ones() as usize)
                .sum()
        })
    }

    pub fn stats(&self) -> GameStats {
        let degrees: Vec<usize> = (1..=self.n).map(|j| self.degree(j)).collect();
        let edge_count = degrees.iter().sum();
        GameStats {
            degrees,
            edge_count,
        }
    }
}

/// Degree profile of a game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameStats {
    /// `degrees[j - 1]` is the out-degree of position `j`.
    pub degrees: Vec<usize>,
    /// Total number of legal moves, `|E|`.
    pub edge_count: usize,
}

impl GameStats {
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `sum_j sqrt(deg j)`, the Grover cost of searching each row's
    /// adjacency list.
    pub fn sqrt_degree_sum(&self) -> f64 {
        self.degrees.iter().map(|&d| (d as f64).sqrt()).sum()
    }

    /// `sqrt(n |E|)`, the Cauchy-Schwarz upper bound on [`sqrt_degree_sum`].
    ///
    /// [`sqrt_degree_sum`]: GameStats::sqrt_degree_sum
    pub fn cauchy_schwarz_bound(&self) -> f64 {
        ((self.n() * self.edge_count) as f64).sqrt()
    }
}

/// Win/lose bit for every position `0..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WinTable {
    n: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for WinTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.to_vec()).finish()
    }
}

impl Serialize for WinTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl WinTable {
    /// All positions losing.
    pub(crate) fn all_losing(n: usize) -> Self {
        Self {
            n,
            words: vec![0; words_for(n + 1)],
        }
    }

    /// Build from explicit bits `w_0..w_n`. Rejects an empty slice or
    /// `w_0 = 1`.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        match bits.first() {
            None => return Err(Error::InvalidArgument("win table needs w_0".into())),
            Some(&b) if b != 0 => {
                return Err(Error::InvalidArgument("w_0 must be 0".into()))
            }
            _ => {}
        }
        let mut table = Self::all_losing(bits.len() - 1);
        for (j, &b) in bits.iter().enumerate().skip(1) {
            table.set(j, b != 0);
        }
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, j: usize) -> bool {
        (self.words[j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, j: usize, value: bool) {
        debug_assert!(j > 0 || !value, "w_0 is always 0");
        let mask = 1u64 << (j % WORD);
        if value {
            self.words[j / WORD] |= mask;
        } else {
            self.words[j / WORD] &= !mask;
        }
    }

    /// Packed bits; bit `j % 64` of word `j / 64` is `w_j`.
    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// `Win(Γ) = w_n`.
    pub fn win(&self) -> bool {
        self.get(self.n)
    }

    pub fn is_losing(&self) -> bool {
        !self.win()
    }

    /// Number of winning positions among `1..=n`.
    pub fn win_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|n/2 - sum w_j| <= k/2`, evaluated as `|n - 2 sum w_j| <= k`.
    pub fn is_balanced(&self, k: usize) -> bool {
        (self.n as i128 - 2 * self.win_count() as i128).unsigned_abs() <= k as u128
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..=self.n).map(|j| self.get(j) as u8).collect()
    }
}
