//! Construction of a near-minimal word containing every square of length
//! `2n` over `Σ_k`, together with the lower bound `k^n + n·C(n,k)` that any
//! such word must meet.
//!
//! The construction walks a De Bruijn word `s` of order `n-1`. At step `j`
//! it considers each extension `i` of the current seed window: if the square
//! of `s[j..j+n-2]·i` has not occurred yet, the candidate is accepted and
//! its fractional power `(s[j..j+n-2]·i)^{1 + delta/n}` is appended; then
//! the seed symbol `s[j]` is appended, and at the very end the seed's last
//! `n-2` symbols. The result always has length
//! `k^n + n·C(n,k) + k^{n-1} + n - 2` with exactly one acceptance per
//! conjugacy class.
//!
//! Every square occurs in the result, but not necessarily exactly once: the
//! tail of an accepted block together with the following seed symbols can
//! recreate a square a second time (at `k = 2, n = 3` with seed `00110`,
//! `(001)^2` occurs at positions 5 and 8). Coverage verification therefore
//! distinguishes containment from exact-once multiplicity.

use crate::debruijn::{generate_classic_db, CircularSequence};
use crate::error::{Error, Result};
use crate::words::{all_words, conjugacy_class_count, AlphabetParams, Symbol, Word};

/// One accepted candidate: at (1-based) step `step`, extending the seed
/// window by `symbol` was accepted and `block` was appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acceptance {
    pub step: usize,
    pub symbol: Symbol,
    pub block: Word,
}

/// The three summands of the constructed word's length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthBreakdown {
    /// `k^n`: one symbol per square of `Σ_k^{2n}`.
    pub squares_part: u64,
    /// `n·C(n,k)`: n extra symbols per accepted candidate.
    pub accept_part: u64,
    /// `k^{n-1} + n - 2`: the full seed, spread over the (b) steps and tail.
    pub seed_part: u64,
}

impl LengthBreakdown {
    pub fn total(&self) -> u64 {
        self.squares_part + self.accept_part + self.seed_part
    }
}

/// Everything a run of the construction produced: the word itself, the
/// accept decisions, the seed that drove them, and the length accounting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareConstructionReport {
    word: Word,
    accepted: Vec<Acceptance>,
    seed: Word,
    length_breakdown: LengthBreakdown,
}

impl SquareConstructionReport {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn accepted(&self) -> &[Acceptance] {
        &self.accepted
    }

    pub fn seed(&self) -> &Word {
        &self.seed
    }

    pub fn length_breakdown(&self) -> &LengthBreakdown {
        &self.length_breakdown
    }
}

/// The prefix of length `total_length` of the infinite repetition `xxx...`.
/// Powers below one are rejected.
pub fn fractional_power(x: &Word, total_length: usize) -> Result<Word> {
    if x.is_empty() {
        return Err(Error::EmptyWord("fractional power"));
    }
    if total_length < x.len() {
        return Err(Error::PowerBelowOne {
            requested: total_length,
            base: x.len(),
        });
    }
    let symbols = (0..total_length)
        .map(|i| x.symbols()[i % x.len()])
        .collect();
    Ok(Word::from_symbols_unchecked(symbols, x.k()))
}

/// Checks that `seed` is a linearized De Bruijn word of order `n-1`: length
/// `k^{n-1} + n - 2`, the trailing `n-2` symbols repeating the leading ones,
/// and the trimmed circular form covering `Σ_k^{n-1}` exactly once.
fn validate_seed(seed: &Word, params: &AlphabetParams) -> Result<()> {
    let k = params.k();
    let n = params.n() as usize;
    let order = n - 1;
    if seed.k() != k {
        return Err(Error::InvalidSeed(format!(
            "seed alphabet size {} does not match k = {k}",
            seed.k()
        )));
    }
    let seed_space = AlphabetParams::new(k, order as u32)?;
    let expected = seed_space.enumerable("seed validation")? + n - 2;
    if seed.len() != expected {
        return Err(Error::InvalidSeed(format!(
            "length {} but a linearized De Bruijn word of order {order} has length {expected}",
            seed.len()
        )));
    }
    let wrap = n - 2;
    if seed.symbols()[seed.len() - wrap..] != seed.symbols()[..wrap] {
        return Err(Error::InvalidSeed(
            "tail does not repeat the leading symbols".into(),
        ));
    }
    let circular = Word::new(seed.symbols()[..seed.len() - wrap].to_vec(), k)?;
    let covers = CircularSequence::new(circular, order)?
        .is_debruijn_of(&all_words(&seed_space)?)?;
    if !covers {
        return Err(Error::InvalidSeed(format!(
            "factors of length {order} do not cover the alphabet exactly once"
        )));
    }
    Ok(())
}

fn encode(symbols: &[Symbol], k: u64) -> usize {
    symbols
        .iter()
        .fold(0u64, |acc, &s| acc * k + s as u64)
        .try_into()
        .expect("code fits usize")
}

/// Appends one symbol and records the square it completes, if any.
fn push_symbol(w: &mut Vec<Symbol>, square_seen: &mut [bool], s: Symbol, n: usize, k: u64) {
    w.push(s);
    if w.len() >= 2 * n {
        let (first, second) = w[w.len() - 2 * n..].split_at(n);
        if first == second {
            square_seen[encode(first, k)] = true;
        }
    }
}

/// Runs the square-covering construction for `Σ_k^{2n}` squares.
///
/// `seed` must be a linearized De Bruijn word of order `n-1` (length
/// `k^{n-1} + n - 2`); when absent, the classic greedy word is used.
/// Requires `n >= 2`.
pub fn generate_square_word(
    params: &AlphabetParams,
    seed: Option<&Word>,
) -> Result<SquareConstructionReport> {
    if params.n() < 2 {
        return Err(Error::OrderTooSmall {
            op: "square word construction",
            min: 2,
            got: params.n(),
        });
    }
    let total = params.enumerable("square word construction")?;
    let k = params.k();
    let n = params.n() as usize;
    let seed_space = AlphabetParams::new(k, params.n() - 1)?;
    let seed = match seed {
        Some(given) => given.clone(),
        None => generate_classic_db(&seed_space)?,
    };
    validate_seed(&seed, params)?;

    let steps = seed_space.total_words() as usize; // k^{n-1}
    let mut w: Vec<Symbol> = Vec::with_capacity(2 * total + steps + n);
    let mut square_seen = vec![false; total];
    let mut accepted = Vec::new();

    for j in 1..=steps {
        let window = &seed.symbols()[j - 1..j + n - 2];
        for i in 0..k {
            let mut root = window.to_vec();
            root.push(i);
            if square_seen[encode(&root, k as u64)] {
                continue;
            }
            let root = Word::new(root, k)?;
            let period = root.delta().expect("root is non-empty");
            let block = fractional_power(&root, n + period)?;
            for &s in block.symbols() {
                push_symbol(&mut w, &mut square_seen, s, n, k as u64);
            }
            accepted.push(Acceptance {
                step: j,
                symbol: i,
                block,
            });
        }
        push_symbol(&mut w, &mut square_seen, seed.symbols()[j - 1], n, k as u64);
    }
    for idx in steps..steps + n - 2 {
        push_symbol(&mut w, &mut square_seen, seed.symbols()[idx], n, k as u64);
    }

    let length_breakdown = LengthBreakdown {
        squares_part: total as u64,
        accept_part: params.n() as u64 * conjugacy_class_count(params),
        seed_part: (steps + n - 2) as u64,
    };
    debug_assert_eq!(w.len() as u64, length_breakdown.total());

    Ok(SquareConstructionReport {
        word: Word::from_symbols_unchecked(w, k),
        accepted,
        seed,
        length_breakdown,
    })
}

/// Lower bound on the length of any word containing every square of
/// `Σ_k^{2n}`: `k^n + n·C(n,k)`, itself at least `2·k^n`.
pub fn square_lower_bound(params: &AlphabetParams) -> u64 {
    let kn = u64::try_from(params.total_words()).expect("k^n exceeds u64");
    kn + params.n() as u64 * conjugacy_class_count(params)
}

/// An exact reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// How far the construction lands from the lower bound. The excess is
/// exactly the seed length: `achieved = lower + k^{n-1} + n - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionGap {
    pub lower: u64,
    pub achieved: u64,
    /// `achieved / k^n`, exactly.
    pub ratio: Ratio,
}

pub fn construction_gap(params: &AlphabetParams) -> Result<ConstructionGap> {
    let lower = square_lower_bound(params);
    let report = generate_square_word(params, None)?;
    let achieved = report.word().len() as u64;
    let kn = u64::try_from(params.total_words()).expect("k^n exceeds u64");
    Ok(ConstructionGap {
        lower,
        achieved,
        ratio: Ratio::new(achieved, kn),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, k: u32) -> Word {
        let symbols = text.bytes().map(|b| (b - b'0') as Symbol).collect();
        Word::new(symbols, k).unwrap()
    }

    fn occurrences(haystack: &Word, needle: &Word) -> Vec<usize> {
        let h = haystack.symbols();
        let n = needle.symbols();
        (0..=h.len().saturating_sub(n.len()))
            .filter(|&i| &h[i..i + n.len()] == n)
            .map(|i| i + 1)
            .collect()
    }

    #[test]
    fn fractional_power_examples() {
        assert_eq!(
            fractional_power(&word("000", 2), 4).unwrap(),
            word("0000", 2)
        );
        assert_eq!(
            fractional_power(&word("001", 2), 6).unwrap(),
            word("001001", 2)
        );
        assert_eq!(
            fractional_power(&word("011", 2), 3).unwrap(),
            word("011", 2)
        );
        assert_eq!(
            fractional_power(&word("011", 2), 2),
            Err(Error::PowerBelowOne {
                requested: 2,
                base: 3
            })
        );
        assert!(fractional_power(&Word::new(vec![], 2).unwrap(), 0).is_err());
    }

    #[test]
    fn worked_binary_n3_run() {
        let params = AlphabetParams::new(2, 3).unwrap();
        let seed = word("00110", 2);
        let report = generate_square_word(&params, Some(&seed)).unwrap();
        assert_eq!(report.word(), &word("0000001001001101101111110", 2));
        assert_eq!(report.word().len(), 25);
        assert_eq!(
            report.length_breakdown(),
            &LengthBreakdown {
                squares_part: 8,
                accept_part: 12,
                seed_part: 5
            }
        );

        let steps: Vec<(usize, Symbol)> = report
            .accepted()
            .iter()
            .map(|a| (a.step, a.symbol))
            .collect();
        assert_eq!(steps, vec![(1, 0), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(report.accepted()[0].block, word("0000", 2));
        assert_eq!(report.accepted()[1].block, word("001001", 2));
        assert_eq!(report.accepted()[2].block, word("011011", 2));
        assert_eq!(report.accepted()[3].block, word("1111", 2));
    }

    #[test]
    fn worked_run_repeats_two_squares() {
        // Block boundaries recreate (001)^2 and (011)^2 a second time; the
        // construction guarantees containment, not exact multiplicity.
        let params = AlphabetParams::new(2, 3).unwrap();
        let report = generate_square_word(&params, Some(&word("00110", 2))).unwrap();
        assert_eq!(
            occurrences(report.word(), &word("001001", 2)),
            vec![5, 8]
        );
        assert_eq!(
            occurrences(report.word(), &word("011011", 2)),
            vec![12, 15]
        );
        for square in ["000000", "010010", "100100", "110110", "101101", "111111"] {
            assert_eq!(occurrences(report.word(), &word(square, 2)).len(), 1);
        }
    }

    #[test]
    fn binary_n2_run() {
        let params = AlphabetParams::new(2, 2).unwrap();
        let report = generate_square_word(&params, Some(&word("01", 2))).unwrap();
        assert_eq!(report.word().len(), 12);
        assert_eq!(report.accepted().len(), 3);
        for square in ["0000", "0101", "1010", "1111"] {
            assert!(!occurrences(report.word(), &word(square, 2)).is_empty());
        }
    }

    #[test]
    fn seed_validation() {
        let params = AlphabetParams::new(2, 2).unwrap();
        // Wrong length: order-1 seeds must have length k^1 + 0 = 2.
        assert!(matches!(
            generate_square_word(&params, Some(&word("010", 2))),
            Err(Error::InvalidSeed(_))
        ));

        let params3 = AlphabetParams::new(2, 3).unwrap();
        // Correct length but broken wrap symbol (tail 1 vs head 0).
        assert!(matches!(
            generate_square_word(&params3, Some(&word("00111", 2))),
            Err(Error::InvalidSeed(_))
        ));
        // Correct length and wrap, but the circular factors repeat.
        assert!(matches!(
            generate_square_word(&params3, Some(&word("01010", 2))),
            Err(Error::InvalidSeed(_))
        ));
        // Alphabet mismatch.
        assert!(matches!(
            generate_square_word(&params3, Some(&word("00110", 3))),
            Err(Error::InvalidSeed(_))
        ));

        assert!(matches!(
            generate_square_word(&AlphabetParams::new(2, 1).unwrap(), None),
            Err(Error::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn all_n3_seeds_agree_on_length_and_containment() {
        let params = AlphabetParams::new(2, 3).unwrap();
        for seed in ["00110", "01100", "11001", "10011"] {
            let report = generate_square_word(&params, Some(&word(seed, 2))).unwrap();
            assert_eq!(report.word().len(), 25, "seed {seed}");
            assert_eq!(report.accepted().len(), 4, "seed {seed}");
            for root in ["000", "001", "010", "011", "100", "101", "110", "111"] {
                let square = fractional_power(&word(root, 2), 6).unwrap();
                assert!(
                    !occurrences(report.word(), &square).is_empty(),
                    "seed {seed} missing {square:?}"
                );
            }
        }
    }

    #[test]
    fn default_seed_matches_explicit_greedy_seed() {
        let params = AlphabetParams::new(3, 3).unwrap();
        let greedy = generate_classic_db(&AlphabetParams::new(3, 2).unwrap()).unwrap();
        let implicit = generate_square_word(&params, None).unwrap();
        let explicit = generate_square_word(&params, Some(&greedy)).unwrap();
        assert_eq!(implicit.word(), explicit.word());
        assert_eq!(implicit.seed(), &greedy);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(square_lower_bound(&AlphabetParams::new(2, 3).unwrap()), 20);
        assert_eq!(square_lower_bound(&AlphabetParams::new(2, 2).unwrap()), 10);
        // n = 1: k + k·k, at least 2k.
        for k in 2..=6 {
            let params = AlphabetParams::new(k, 1).unwrap();
            assert_eq!(square_lower_bound(&params), (k + k * k) as u64);
        }
    }

    #[test]
    fn lower_bound_dominates_twice_total() {
        for (k, n) in [(2u32, 1u32), (2, 10), (3, 6), (5, 4), (11, 2)] {
            let params = AlphabetParams::new(k, n).unwrap();
            assert!(square_lower_bound(&params) as u128 >= 2 * params.total_words());
        }
    }

    #[test]
    fn gap_examples() {
        let gap = construction_gap(&AlphabetParams::new(2, 3).unwrap()).unwrap();
        assert_eq!((gap.lower, gap.achieved), (20, 25));
        assert_eq!(gap.ratio, Ratio::new(25, 8));
        assert_eq!(gap.ratio.to_string(), "25/8");

        let gap = construction_gap(&AlphabetParams::new(2, 2).unwrap()).unwrap();
        assert_eq!((gap.lower, gap.achieved), (10, 12));
        assert_eq!(gap.ratio.to_string(), "3");
    }

    #[test]
    fn gap_excess_is_exactly_the_seed_length() {
        for (k, n) in [(2u32, 2u32), (2, 6), (3, 4), (4, 3), (5, 2)] {
            let params = AlphabetParams::new(k, n).unwrap();
            let gap = construction_gap(&params).unwrap();
            let seed_len = (params.total_words() / k as u128) as u64 + n as u64 - 2;
            assert_eq!(gap.achieved, gap.lower + seed_len, "k={k} n={n}");
        }
    }
}
