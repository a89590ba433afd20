//! Core alphabet and word machinery: primitivity, rotations, least rotation
//! periods, conjugacy classes, and the counting formulas built on Euler's
//! phi function.

use std::fmt;

use crate::error::{Error, Result};

/// A single letter of `Σ_k = {0, 1, ..., k-1}`.
pub type Symbol = u32;

/// Enumeration-backed operations refuse to touch spaces larger than this
/// many words (`2^24`). Formula-backed operations have no such limit.
pub const ENUMERATION_CEILING: u64 = 1 << 24;

/// A finite word over `Σ_k`, stored as an explicit list of symbols so that
/// any alphabet size and any length are handled uniformly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    k: u32,
}

impl Word {
    /// Builds a word, checking that every symbol lies in `[0, k)`.
    pub fn new(symbols: Vec<Symbol>, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::AlphabetTooSmall(k));
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= k) {
            return Err(Error::SymbolOutOfRange { symbol, k });
        }
        Ok(Word { symbols, k })
    }

    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>, k: u32) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < k));
        Word { symbols, k }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// True iff the word is not `x^p` for any word `x` and integer `p >= 2`.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.symbols.is_empty() {
            return Err(Error::EmptyWord("primitivity status"));
        }
        Ok(is_primitive_slice(&self.symbols))
    }

    /// The rotation `w[p+1..n]w[1..p]`; `rotate(w, 0) = rotate(w, |w|) = w`.
    pub fn rotate(&self, p: usize) -> Result<Word> {
        let n = self.symbols.len();
        if p > n {
            return Err(Error::RotationOutOfRange { offset: p, len: n });
        }
        let mut rotated = Vec::with_capacity(n);
        rotated.extend_from_slice(&self.symbols[p..]);
        rotated.extend_from_slice(&self.symbols[..p]);
        Ok(Word::from_symbols_unchecked(rotated, self.k))
    }

    /// Least rotation period: the smallest `p >= 1` with `rotate(w, p) = w`.
    ///
    /// Always divides `|w|`, and equals `|w|` exactly when `w` is primitive.
    pub fn delta(&self) -> Result<usize> {
        let n = self.symbols.len();
        if n == 0 {
            return Err(Error::EmptyWord("rotation period"));
        }
        for p in 1..n {
            if (0..n).all(|i| self.symbols[(i + p) % n] == self.symbols[i]) {
                return Ok(p);
            }
        }
        Ok(n)
    }

    /// The lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Word {
        let n = self.symbols.len();
        let mut best = self.clone();
        for p in 1..n {
            let candidate = self.rotate(p).expect("p < n is in range");
            if candidate < best {
                best = candidate;
            }
        }
        best
    }
}

/// Divisor-check primitivity test on a raw symbol slice.
pub(crate) fn is_primitive_slice(symbols: &[Symbol]) -> bool {
    let n = symbols.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|i| symbols[i] == symbols[i - d]) {
            return false;
        }
    }
    true
}

impl fmt::Display for Word {
    /// Digits for `k <= 10`, comma-separated integers above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({}, k={})", self, self.k)
    }
}

/// The `(k, n)` pair governing generation: alphabet size and word length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphabetParams {
    k: u32,
    n: u32,
}

impl AlphabetParams {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::AlphabetTooSmall(k));
        }
        if n < 1 {
            return Err(Error::OrderTooSmall {
                op: "alphabet parameters",
                min: 1,
                got: n,
            });
        }
        Ok(AlphabetParams { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `k^n` as a u128 (never overflows for representable inputs).
    pub fn total_words(&self) -> u128 {
        (self.k as u128)
            .checked_pow(self.n)
            .expect("k^n exceeds u128")
    }

    /// Checks `k^n` against [`ENUMERATION_CEILING`] and returns it as usize.
    pub(crate) fn enumerable(&self, what: &'static str) -> Result<usize> {
        let size = self.total_words();
        if size > ENUMERATION_CEILING as u128 {
            return Err(Error::CeilingExceeded {
                what,
                size,
                ceiling: ENUMERATION_CEILING,
            });
        }
        Ok(size as usize)
    }
}

/// A rotation orbit of `Σ_k^n`: the lexicographically least member is the
/// canonical representative; the orbit size equals `delta` of any member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    representative: Word,
    members: Vec<Word>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    /// Members in ascending lexicographic order.
    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Euler's phi: the number of integers in `[1, d]` coprime with `d`.
pub fn euler_phi(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::PhiOutOfDomain(d));
    }
    let mut remaining = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            phi -= phi / p;
            while remaining % p == 0 {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    Ok(phi)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function by trial division.
fn mobius(n: u64) -> i64 {
    let mut remaining = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            remaining /= p;
            if remaining % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if remaining > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of conjugacy classes of `Σ_k^n` via the closed formula
/// `C(n,k) = (1/n) Σ_{d|n} phi(d) k^{n/d}`.
pub fn conjugacy_class_count(params: &AlphabetParams) -> u64 {
    let n = params.n() as u64;
    let k = params.k() as u128;
    let mut total: u128 = 0;
    for d in divisors(n) {
        let phi = euler_phi(d).expect("d >= 1") as u128;
        let power = k.checked_pow((n / d) as u32).expect("k^(n/d) exceeds u128");
        total += phi * power;
    }
    let count = total / n as u128;
    u64::try_from(count).expect("conjugacy class count exceeds u64")
}

/// Number of primitive words in `Σ_k^n`, via Moebius inversion
/// `Σ_{d|n} mu(d) k^{n/d}`.
pub fn count_primitive(params: &AlphabetParams) -> u64 {
    let n = params.n() as u64;
    let k = params.k() as i128;
    let mut total: i128 = 0;
    for d in divisors(n) {
        let power = k.checked_pow((n / d) as u32).expect("k^(n/d) exceeds i128");
        total += mobius(d) as i128 * power;
    }
    u64::try_from(total).expect("primitive word count exceeds u64")
}

fn decode(mut code: u64, params: &AlphabetParams) -> Word {
    let n = params.n() as usize;
    let k = params.k() as u64;
    let mut symbols = vec![0 as Symbol; n];
    for slot in symbols.iter_mut().rev() {
        *slot = (code % k) as Symbol;
        code /= k;
    }
    Word::from_symbols_unchecked(symbols, params.k())
}

fn encode(symbols: &[Symbol], k: u64) -> u64 {
    symbols.iter().fold(0, |acc, &s| acc * k + s as u64)
}

/// All of `Σ_k^n` in lexicographic order. Subject to the enumeration ceiling.
pub fn all_words(params: &AlphabetParams) -> Result<Vec<Word>> {
    let total = params.enumerable("word enumeration")?;
    Ok((0..total as u64).map(|c| decode(c, params)).collect())
}

/// All primitive words of `Σ_k^n` in lexicographic order.
pub fn primitive_words(params: &AlphabetParams) -> Result<Vec<Word>> {
    let mut words = all_words(params)?;
    words.retain(|w| is_primitive_slice(w.symbols()));
    Ok(words)
}

/// Partitions `Σ_k^n` into rotation orbits, sorted by representative.
pub fn conjugacy_classes(params: &AlphabetParams) -> Result<Vec<ConjugacyClass>> {
    let total = params.enumerable("conjugacy class enumeration")?;
    let k = params.k() as u64;
    let mut visited = vec![false; total];
    let mut classes = Vec::new();
    for code in 0..total as u64 {
        if visited[code as usize] {
            continue;
        }
        let word = decode(code, params);
        let mut member_codes: Vec<u64> = (0..word.len())
            .map(|p| encode(word.rotate(p).expect("in range").symbols(), k))
            .collect();
        member_codes.sort_unstable();
        member_codes.dedup();
        for &m in &member_codes {
            visited[m as usize] = true;
        }
        let members: Vec<Word> = member_codes.iter().map(|&m| decode(m, params)).collect();
        classes.push(ConjugacyClass {
            representative: members[0].clone(),
            members,
        });
    }
    Ok(classes)
}
