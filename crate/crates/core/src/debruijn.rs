//! Classic greedy De Bruijn sequence generation over the full `Σ_k^m`, and
//! factor bookkeeping for circular sequences checked against arbitrary
//! dictionaries.

use crate::error::{Error, Result};
use crate::words::{AlphabetParams, Symbol, Word};

/// A word read cyclically: factor extraction wraps modulo the length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularSequence {
    word: Word,
    order: usize,
}

impl CircularSequence {
    /// Wraps a non-empty word for factor queries of length `order`.
    pub fn new(word: Word, order: usize) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord("circular form"));
        }
        if order < 1 || order > word.len() {
            return Err(Error::OrderExceedsLength {
                order,
                len: word.len(),
            });
        }
        Ok(CircularSequence { word, order })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `|word|` factors of length `order`, read cyclically with
    /// multiplicity, in position order.
    pub fn factors(&self) -> Vec<Word> {
        let symbols = self.word.symbols();
        let n = symbols.len();
        (0..n)
            .map(|start| {
                let factor: Vec<Symbol> =
                    (0..self.order).map(|i| symbols[(start + i) % n]).collect();
                Word::from_symbols_unchecked(factor, self.word.k())
            })
            .collect()
    }

    /// True iff the circular factors are exactly `dict`, each exactly once
    /// and nothing else. Every dictionary word must have length `order`.
    pub fn is_debruijn_of(&self, dict: &[Word]) -> Result<bool> {
        for word in dict {
            if word.len() != self.order {
                return Err(Error::DictionaryLengthMismatch {
                    expected: self.order,
                    found: word.len(),
                });
            }
        }
        let mut wanted: Vec<&Word> = dict.iter().collect();
        wanted.sort_unstable();
        wanted.dedup();
        if wanted.len() != self.len() {
            return Ok(false);
        }
        let mut factors = self.factors();
        factors.sort_unstable();
        let distinct = factors.windows(2).all(|pair| pair[0] != pair[1]);
        Ok(distinct && factors.iter().zip(wanted).all(|(f, w)| f == w))
    }
}

/// Greedy prefer-largest De Bruijn generator over the full `Σ_k^m` with
/// `m = params.n()`: write `m` zeros, then repeatedly append the largest
/// symbol whose trailing `m`-gram has not occurred yet.
///
/// The output is the linear word of length `k^m + m - 1`; it begins with
/// `0^m`, ends with `0^{m-1}`, and contains every word of `Σ_k^m` exactly
/// once as an ordinary (non-wrapping) factor.
pub fn generate_classic_db(params: &AlphabetParams) -> Result<Word> {
    let total = params.enumerable("classic De Bruijn generation")?;
    let k = params.k();
    let m = params.n() as usize;

    let mut output: Vec<Symbol> = vec![0; m];
    let mut seen = vec![false; total];
    seen[0] = true; // the initial 0^m gram
    let context_span = total / k as usize; // k^{m-1}
    let mut context: usize = 0;

    'grow: loop {
        for i in (0..k).rev() {
            let gram = context * k as usize + i as usize;
            if !seen[gram] {
                seen[gram] = true;
                output.push(i);
                context = gram % context_span;
                continue 'grow;
            }
        }
        break;
    }
    Ok(Word::from_symbols_unchecked(output, k))
}
