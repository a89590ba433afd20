//! Independent brute-force verification. Nothing here shares factor
//! bookkeeping with the generators: coverage reports are computed by a
//! plain sliding-window scan, and the shortest-cover search enumerates
//! words breadth-first. Generators are trusted only as far as this module
//! can confirm.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::words::{AlphabetParams, Symbol, Word};

/// Exact occurrence accounting of a target set within one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    targets: BTreeSet<Word>,
    found_once: BTreeSet<Word>,
    found_multiple: BTreeMap<Word, Vec<usize>>,
    missing: BTreeSet<Word>,
    extraneous: BTreeSet<Word>,
    verdict: bool,
}

impl CoverageReport {
    pub fn targets(&self) -> &BTreeSet<Word> {
        &self.targets
    }

    /// Targets that occur exactly once.
    pub fn found_once(&self) -> &BTreeSet<Word> {
        &self.found_once
    }

    /// Targets that occur more than once, with all (1-based) positions.
    pub fn found_multiple(&self) -> &BTreeMap<Word, Vec<usize>> {
        &self.found_multiple
    }

    /// Targets that never occur.
    pub fn missing(&self) -> &BTreeSet<Word> {
        &self.missing
    }

    /// Distinct factors of the target length that are not targets.
    pub fn extraneous(&self) -> &BTreeSet<Word> {
        &self.extraneous
    }

    /// True iff every target occurs exactly once.
    pub fn verdict(&self) -> bool {
        self.verdict
    }

    /// True iff every target occurs at least once.
    pub fn covers_all(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Slides a window of the targets' common length over `w` (wrapping iff
/// `circular`) and reports, per target, whether it occurred exactly once.
/// Overlapping occurrences count separately.
pub fn verify_coverage(w: &Word, targets: &[Word], circular: bool) -> Result<CoverageReport> {
    let targets: BTreeSet<Word> = targets.iter().cloned().collect();
    let len = match targets.iter().next() {
        None => return Err(Error::EmptyTargets),
        Some(first) => first.len(),
    };
    if len == 0 {
        return Err(Error::EmptyWord("coverage target"));
    }
    for t in &targets {
        if t.len() != len {
            return Err(Error::MixedTargetLengths(len, t.len()));
        }
    }
    if len > w.len() {
        return Err(Error::TargetTooLong {
            target_len: len,
            word_len: w.len(),
        });
    }

    let symbols = w.symbols();
    let mut positions: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
    let mut push = |factor: Word, position: usize| {
        positions.entry(factor).or_default().push(position);
    };
    if circular {
        for start in 0..symbols.len() {
            let factor: Vec<Symbol> = (0..len)
                .map(|i| symbols[(start + i) % symbols.len()])
                .collect();
            push(Word::from_symbols_unchecked(factor, w.k()), start + 1);
        }
    } else {
        for start in 0..=symbols.len() - len {
            let factor = symbols[start..start + len].to_vec();
            push(Word::from_symbols_unchecked(factor, w.k()), start + 1);
        }
    }

    let mut found_once = BTreeSet::new();
    let mut found_multiple = BTreeMap::new();
    let mut missing = BTreeSet::new();
    for target in &targets {
        match positions.get(target) {
            None => {
                missing.insert(target.clone());
            }
            Some(at) if at.len() == 1 => {
                found_once.insert(target.clone());
            }
            Some(at) => {
                found_multiple.insert(target.clone(), at.clone());
            }
        }
    }
    let extraneous: BTreeSet<Word> = positions
        .keys()
        .filter(|factor| !targets.contains(*factor))
        .cloned()
        .collect();
    let verdict = found_multiple.is_empty() && missing.is_empty();

    Ok(CoverageReport {
        targets,
        found_once,
        found_multiple,
        missing,
        extraneous,
        verdict,
    })
}

/// Outcome of [`exhaustive_min_cover`]: the minimal length and the
/// lexicographically least word attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCover {
    pub length: usize,
    pub witness: Word,
}

/// Largest `k^n` the default search accepts. The state space is exponential
/// in `k^n`; anything bigger needs the forced variant and patience.
pub const MIN_COVER_GATE: u64 = 4;

/// Hard cap for the forced variant: the covered-set bitmap lives in a u64.
const MIN_COVER_HARD_CAP: u64 = 24;

/// Finds the shortest word over `Σ_k` containing every square of length
/// `2n`, by breadth-first search over (suffix, covered-set) states.
/// Gated to `k^n <= 4`; see [`exhaustive_min_cover_forced`] to override.
///
/// `budget` bounds the number of states expanded; exhausting it returns an
/// explicit inconclusive error rather than a wrong answer.
pub fn exhaustive_min_cover(params: &AlphabetParams, budget: u64) -> Result<MinCover> {
    let size = params.total_words();
    if size > MIN_COVER_GATE as u128 {
        return Err(Error::CeilingExceeded {
            what: "exhaustive shortest-cover search",
            size,
            ceiling: MIN_COVER_GATE,
        });
    }
    exhaustive_min_cover_forced(params, budget)
}

/// [`exhaustive_min_cover`] without the small-instance gate (the covered-set
/// bitmap still caps `k^n` at 24).
pub fn exhaustive_min_cover_forced(params: &AlphabetParams, budget: u64) -> Result<MinCover> {
    let size = params.total_words();
    if size > MIN_COVER_HARD_CAP as u128 {
        return Err(Error::CeilingExceeded {
            what: "exhaustive shortest-cover search",
            size,
            ceiling: MIN_COVER_HARD_CAP,
        });
    }
    let total = size as usize;
    let k = params.k();
    let n = params.n() as usize;
    let full: u64 = (1u64 << total) - 1;
    let suffix_cap = 2 * n - 1;

    struct Node {
        parent: usize,
        symbol: Symbol,
        suffix: Vec<Symbol>,
        covered: u64,
    }

    let mut nodes = vec![Node {
        parent: usize::MAX,
        symbol: 0,
        suffix: Vec::new(),
        covered: 0,
    }];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut visited: HashSet<(Vec<Symbol>, u64)> = HashSet::new();
    visited.insert((Vec::new(), 0));
    let mut depth_of = vec![0usize];
    let mut explored = 0u64;

    while let Some(index) = queue.pop_front() {
        if explored == budget {
            return Err(Error::Inconclusive { explored, budget });
        }
        explored += 1;
        let depth = depth_of[index];
        for symbol in 0..k {
            let (suffix, covered) = {
                let node = &nodes[index];
                let mut suffix = node.suffix.clone();
                suffix.push(symbol);
                let mut covered = node.covered;
                if suffix.len() == 2 * n {
                    let (first, second) = suffix.split_at(n);
                    if first == second {
                        let code = first.iter().fold(0u64, |acc, &s| acc * k as u64 + s as u64);
                        covered |= 1 << code;
                    }
                }
                if suffix.len() > suffix_cap {
                    suffix.remove(0);
                }
                (suffix, covered)
            };
            if !visited.insert((suffix.clone(), covered)) {
                continue;
            }
            nodes.push(Node {
                parent: index,
                symbol,
                suffix,
                covered,
            });
            depth_of.push(depth + 1);
            let new_index = nodes.len() - 1;
            if covered == full {
                // First full-coverage state in BFS order: minimal length,
                // lexicographically least witness.
                let mut symbols = Vec::with_capacity(depth + 1);
                let mut cursor = new_index;
                while cursor != 0 {
                    symbols.push(nodes[cursor].symbol);
                    cursor = nodes[cursor].parent;
                }
                symbols.reverse();
                return Ok(MinCover {
                    length: depth + 1,
                    witness: Word::from_symbols_unchecked(symbols, k),
                });
            }
            queue.push_back(new_index);
        }
    }
    unreachable!("a covering word always exists, so BFS cannot exhaust the state space");
}

/// Mechanized form of the spacing argument behind the lower bound: list the
/// square occurrences of `w` in order; whenever consecutive occurrences have
/// roots in different conjugacy classes, at least `n` of the length-`2n`
/// windows strictly between them must be non-squares (equivalently, the
/// positions differ by at least `n + 1`).
///
/// Errors unless `w` contains every square of `Σ_k^{2n}`.
pub fn verify_nonsquare_gap_counting(w: &Word, params: &AlphabetParams) -> Result<bool> {
    let n = params.n() as usize;
    let k = params.k() as u64;
    let total = params.enumerable("square occurrence scan")?;
    let symbols = w.symbols();
    if symbols.len() < 2 * n {
        return Err(Error::SquaresNotCovered {
            missing: total,
            total,
        });
    }

    // (1-based position, root code) of every square window.
    let mut occurrences: Vec<(usize, u64)> = Vec::new();
    for start in 0..=symbols.len() - 2 * n {
        let (first, second) = symbols[start..start + 2 * n].split_at(n);
        if first == second {
            let code = first.iter().fold(0u64, |acc, &s| acc * k + s as u64);
            occurrences.push((start + 1, code));
        }
    }

    let distinct: HashSet<u64> = occurrences.iter().map(|&(_, code)| code).collect();
    if distinct.len() != total {
        return Err(Error::SquaresNotCovered {
            missing: total - distinct.len(),
            total,
        });
    }

    let mut class_of: HashMap<u64, u64> = HashMap::new();
    let mut class = |code: u64| -> u64 {
        *class_of.entry(code).or_insert_with(|| {
            let word = decode(code, params);
            (0..n)
                .map(|p| {
                    word.rotate(p)
                        .expect("p < n")
                        .symbols()
                        .iter()
                        .fold(0u64, |acc, &s| acc * k + s as u64)
                })
                .min()
                .expect("n >= 1")
        })
    };

    Ok(occurrences.windows(2).all(|pair| {
        let (p, before) = pair[0];
        let (q, after) = pair[1];
        class(before) == class(after) || q - p >= n + 1
    }))
}

fn decode(mut code: u64, params: &AlphabetParams) -> Word {
    let k = params.k() as u64;
    let mut symbols = vec![0 as Symbol; params.n() as usize];
    for slot in symbols.iter_mut().rev() {
        *slot = (code % k) as Symbol;
        code /= k;
    }
    Word::from_symbols_unchecked(symbols, params.k())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::squares::{fractional_power, generate_square_word};
    use crate::words::all_words;

    fn word(text: &str, k: u32) -> Word {
        let symbols = text.bytes().map(|b| (b - b'0') as Symbol).collect();
        Word::new(symbols, k).unwrap()
    }

    fn squares_of(params: &AlphabetParams) -> Vec<Word> {
        all_words(params)
            .unwrap()
            .iter()
            .map(|v| fractional_power(v, 2 * v.len()).unwrap())
            .collect()
    }

    #[test]
    fn coverage_of_the_25_symbol_square_word() {
        // All 8 squares occur, but two of them occur twice (block
        // boundaries recreate them), so the exact-once verdict is false.
        let params = AlphabetParams::new(2, 3).unwrap();
        let w = word("0000001001001101101111110", 2);
        let report = verify_coverage(&w, &squares_of(&params), false).unwrap();
        assert!(report.covers_all());
        assert!(!report.verdict());
        assert_eq!(report.found_once().len(), 6);
        assert_eq!(
            report.found_multiple().get(&word("001001", 2)),
            Some(&vec![5, 8])
        );
        assert_eq!(
            report.found_multiple().get(&word("011011", 2)),
            Some(&vec![12, 15])
        );
    }

    #[test]
    fn coverage_of_the_primitive_db_word() {
        let params = AlphabetParams::new(2, 4).unwrap();
        let w = word("000111011001000", 2);
        let targets = crate::words::primitive_words(&params).unwrap();
        let report = verify_coverage(&w, &targets, false).unwrap();
        assert!(report.verdict());
        assert_eq!(report.found_once().len(), 12);
        assert!(report.extraneous().is_empty());
    }

    #[test]
    fn overlapping_occurrences_count_separately() {
        let report = verify_coverage(&word("0000", 2), &[word("00", 2)], false).unwrap();
        assert!(!report.verdict());
        assert_eq!(
            report.found_multiple().get(&word("00", 2)),
            Some(&vec![1, 2, 3])
        );
    }

    #[test]
    fn circular_scan_wraps() {
        let params = AlphabetParams::new(2, 2).unwrap();
        let report =
            verify_coverage(&word("0011", 2), &all_words(&params).unwrap(), true).unwrap();
        assert!(report.verdict());

        // The same word read linearly misses the wrap factor 10.
        let linear =
            verify_coverage(&word("0011", 2), &all_words(&params).unwrap(), false).unwrap();
        assert!(!linear.verdict());
        assert_eq!(linear.missing().len(), 1);
    }

    #[test]
    fn extraneous_factors_are_reported_but_do_not_fail_the_verdict() {
        let targets = vec![word("00", 2), word("01", 2)];
        let report = verify_coverage(&word("1001", 2), &targets, false).unwrap();
        assert!(report.verdict());
        assert_eq!(report.extraneous().len(), 1);
        assert!(report.extraneous().contains(&word("10", 2)));
    }

    #[test]
    fn coverage_input_validation() {
        assert_eq!(
            verify_coverage(&word("0011", 2), &[], false),
            Err(Error::EmptyTargets)
        );
        assert_eq!(
            verify_coverage(&word("0011", 2), &[word("00", 2), word("000", 2)], false),
            Err(Error::MixedTargetLengths(2, 3))
        );
        assert_eq!(
            verify_coverage(&word("01", 2), &[word("000", 2)], false),
            Err(Error::TargetTooLong {
                target_len: 3,
                word_len: 2
            })
        );
    }

    #[test]
    fn min_cover_binary_n1() {
        let params = AlphabetParams::new(2, 1).unwrap();
        let result = exhaustive_min_cover(&params, 1 << 20).unwrap();
        assert_eq!(result.length, 4);
        assert_eq!(result.witness, word("0011", 2));
        let report =
            verify_coverage(&result.witness, &squares_of(&params), false).unwrap();
        assert!(report.covers_all());
    }

    #[test]
    fn min_cover_budget_exhaustion_is_inconclusive() {
        let params = AlphabetParams::new(2, 2).unwrap();
        assert!(matches!(
            exhaustive_min_cover(&params, 3),
            Err(Error::Inconclusive {
                explored: 3,
                budget: 3
            })
        ));
    }

    #[test]
    fn min_cover_gate() {
        let params = AlphabetParams::new(2, 3).unwrap();
        assert!(matches!(
            exhaustive_min_cover(&params, 1 << 20),
            Err(Error::CeilingExceeded { .. })
        ));
        // The forced variant runs it anyway (k^n = 8 is still tiny).
        let result = exhaustive_min_cover_forced(&params, 1 << 24).unwrap();
        let report =
            verify_coverage(&result.witness, &squares_of(&params), false).unwrap();
        assert!(report.covers_all());
        assert!(result.length as u64 >= crate::squares::square_lower_bound(&params));
    }

    #[test]
    fn gap_counting_on_the_25_symbol_word() {
        let params = AlphabetParams::new(2, 3).unwrap();
        let w = word("0000001001001101101111110", 2);
        assert!(verify_nonsquare_gap_counting(&w, &params).unwrap());
    }

    #[test]
    fn gap_counting_on_constructed_words() {
        for (k, n) in [(2u32, 2u32), (2, 5), (3, 3), (4, 2)] {
            let params = AlphabetParams::new(k, n).unwrap();
            let report = generate_square_word(&params, None).unwrap();
            assert!(
                verify_nonsquare_gap_counting(report.word(), &params).unwrap(),
                "k={k} n={n}"
            );
        }
    }

    #[test]
    fn gap_counting_requires_full_coverage() {
        // 00000 contains only the square of 00.
        let params = AlphabetParams::new(2, 2).unwrap();
        assert!(matches!(
            verify_nonsquare_gap_counting(&word("00000", 2), &params),
            Err(Error::SquaresNotCovered {
                missing: 3,
                total: 4
            })
        ));
    }
}
