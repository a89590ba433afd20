//! Greedy generation of a De Bruijn sequence over the primitive words of
//! `Σ_k^n`, together with the auxiliary forced-extension construction used
//! to reason about it.
//!
//! The generator writes `0^{n-1}` and then repeatedly appends the largest
//! symbol whose trailing `n`-gram is primitive and has not occurred before,
//! stopping when no symbol qualifies. The resulting word has length
//! `count_primitive(n, k) + n - 1`, every window is primitive and distinct,
//! every primitive word occurs, and the word ends in `0^{n-1}`; trimming
//! that tail yields a circular De Bruijn sequence of the primitive words.

use crate::debruijn::CircularSequence;
use crate::error::{Error, Result};
use crate::words::{is_primitive_slice, AlphabetParams, Symbol, Word};

/// Why a candidate symbol was passed over at one step of the greedy scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    /// Appending the symbol would create a non-primitive window.
    NotPrimitive,
    /// The window it would create has already occurred.
    AlreadySeen,
}

/// One decision point of the greedy loop. The scan runs from `k-1` downward
/// and stops at the first acceptable symbol, so `rejected` holds exactly the
/// symbols above `chosen` (or the whole alphabet on the terminating step,
/// where `chosen` is `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub chosen: Option<Symbol>,
    pub rejected: Vec<(Symbol, RejectReason)>,
}

/// The full run of the greedy generator: the output word plus every
/// accept/reject decision, for auditing the context in/out-degree counting
/// that makes the generator work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    params: AlphabetParams,
    output: Word,
    steps: Vec<GreedyStep>,
}

impl GreedyTrace {
    pub fn params(&self) -> &AlphabetParams {
        &self.params
    }

    pub fn output(&self) -> &Word {
        &self.output
    }

    pub fn steps(&self) -> &[GreedyStep] {
        &self.steps
    }

    /// The `n-1` symbols that preceded the decision at `step`.
    pub fn context(&self, step: usize) -> Word {
        let n = self.params.n() as usize;
        let window = &self.output.symbols()[step..step + n - 1];
        Word::from_symbols_unchecked(window.to_vec(), self.params.k())
    }
}

/// Runs the greedy generator over the primitive words of `Σ_k^n`.
///
/// Requires `n >= 2`: the greedy context has length `n - 1`, which must not
/// be empty for the termination rule to make sense.
pub fn generate_primitive_db(params: &AlphabetParams) -> Result<GreedyTrace> {
    if params.n() < 2 {
        return Err(Error::OrderTooSmall {
            op: "primitive De Bruijn generation",
            min: 2,
            got: params.n(),
        });
    }
    let total = params.enumerable("primitive De Bruijn generation")?;
    let k = params.k();
    let n = params.n() as usize;

    let mut output: Vec<Symbol> = vec![0; n - 1];
    let mut seen = vec![false; total];
    let context_span = total / k as usize; // k^{n-1}
    let mut context: usize = 0; // code of the last n-1 symbols
    let mut steps = Vec::new();
    let mut window = vec![0 as Symbol; n];

    loop {
        let mut rejected = Vec::new();
        let mut chosen = None;
        window[..n - 1].copy_from_slice(&output[output.len() - (n - 1)..]);
        for i in (0..k).rev() {
            window[n - 1] = i;
            if !is_primitive_slice(&window) {
                rejected.push((i, RejectReason::NotPrimitive));
                continue;
            }
            let gram = context * k as usize + i as usize;
            if seen[gram] {
                rejected.push((i, RejectReason::AlreadySeen));
                continue;
            }
            seen[gram] = true;
            output.push(i);
            context = gram % context_span;
            chosen = Some(i);
            break;
        }
        let done = chosen.is_none();
        steps.push(GreedyStep { chosen, rejected });
        if done {
            break;
        }
    }

    Ok(GreedyTrace {
        params: *params,
        output: Word::from_symbols_unchecked(output, k),
        steps,
    })
}

/// Deletes the trailing `0^{n-1}` of a greedy run and returns the result as
/// a circular sequence, which is a De Bruijn sequence of the primitive
/// dictionary.
pub fn to_circular_db(trace: &GreedyTrace) -> Result<CircularSequence> {
    let n = trace.params.n() as usize;
    let symbols = trace.output.symbols();
    if symbols.len() < n {
        return Err(Error::MalformedTrace(format!(
            "output of length {} is too short for order {n}",
            symbols.len()
        )));
    }
    let (head, tail) = symbols.split_at(symbols.len() - (n - 1));
    if tail.iter().any(|&s| s != 0) {
        return Err(Error::MalformedTrace(
            "output does not end with 0^(n-1)".into(),
        ));
    }
    let circular = Word::from_symbols_unchecked(head.to_vec(), trace.params.k());
    CircularSequence::new(circular, n)
}

/// Default step budget for [`build_fu`]: `k^n + n`, saturating.
fn default_budget(params: &AlphabetParams) -> u64 {
    let total = params.total_words();
    u64::try_from(total)
        .unwrap_or(u64::MAX)
        .saturating_add(params.n() as u64)
}

/// Extends a primitive word `u` of length `n >= 2` one letter at a time,
/// always choosing the smallest letter that keeps the trailing `n`-window
/// primitive, and stopping as soon as the trailing `n-1` symbols are all
/// zero.
///
/// The result starts with `u`, ends with `0^{n-1}`, every window of length
/// `n` is primitive, and every appended letter is 0 or 1.
pub fn build_fu(u: &Word) -> Result<Word> {
    let params = AlphabetParams::new(u.k(), u.len() as u32)?;
    build_fu_with_budget(u, default_budget(&params))
}

/// [`build_fu`] with an explicit bound on the number of appended symbols.
/// The construction always terminates on valid input; exhausting the budget
/// reports a defect rather than looping forever.
pub fn build_fu_with_budget(u: &Word, budget: u64) -> Result<Word> {
    let n = u.len();
    if n < 2 {
        return Err(Error::OrderTooSmall {
            op: "forced extension",
            min: 2,
            got: n as u32,
        });
    }
    if !u.is_primitive()? {
        return Err(Error::NotPrimitive(u.to_string()));
    }
    let k = u.k();
    let mut symbols = u.symbols().to_vec();
    let mut appended = 0u64;
    loop {
        if symbols[symbols.len() - (n - 1)..].iter().all(|&s| s == 0) {
            return Ok(Word::from_symbols_unchecked(symbols, k));
        }
        if appended == budget {
            return Err(Error::StepBudgetExhausted(budget));
        }
        let start = symbols.len() - (n - 1);
        let mut window: Vec<Symbol> = symbols[start..].to_vec();
        window.push(0);
        let next = (0..k).find(|&c| {
            window[n - 1] = c;
            is_primitive_slice(&window)
        });
        // One of the letters 0 and 1 always completes a primitive window.
        let next = next.expect("some letter extends the window primitively");
        symbols.push(next);
        appended += 1;
    }
}
