//! Alphabets, finite words, ultimately periodic words and samples.
//!
//! An omega-word is always represented here as an ultimately periodic word
//! `u(v)^ω` in a canonical form, so that two values denote the same omega-word
//! exactly when they are structurally equal. This makes [`UpWord`] usable as a
//! map key, which [`Sample`] relies on.

use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A finite, totally ordered set of symbols. The declaration order of the
/// symbols is the ordering used by shortlex comparisons.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet);
            }
        }
        Ok(Arc::new(Alphabet { symbols }))
    }

    /// The two-symbol alphabet `{a, b}` used throughout the tests.
    pub fn ab() -> Arc<Self> {
        Alphabet::new(['a', 'b']).unwrap()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, symbol: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == symbol)
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }
}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A finite word over a fixed alphabet, stored as symbol indices.
#[derive(Debug, Clone)]
pub struct FiniteWord {
    alphabet: Arc<Alphabet>,
    symbols: Vec<usize>,
}

impl FiniteWord {
    pub fn epsilon(alphabet: &Arc<Alphabet>) -> Self {
        FiniteWord { alphabet: alphabet.clone(), symbols: Vec::new() }
    }

    pub fn from_indices(alphabet: &Arc<Alphabet>, symbols: Vec<usize>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet.len()));
        FiniteWord { alphabet: alphabet.clone(), symbols }
    }

    pub fn parse(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            symbols.push(alphabet.index_of(c).ok_or(Error::SymbolNotInAlphabet(c))?);
        }
        Ok(FiniteWord { alphabet: alphabet.clone(), symbols })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn push(&mut self, symbol: usize) {
        debug_assert!(symbol < self.alphabet.len());
        self.symbols.push(symbol);
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        debug_assert!(same_alphabet(&self.alphabet, &other.alphabet));
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        FiniteWord { alphabet: self.alphabet.clone(), symbols }
    }

    /// Lengths of the non-empty suffixes of `self`, longest first.
    fn nonempty_suffix_lens(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.symbols.len()).rev()
    }
}

impl PartialEq for FiniteWord {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(same_alphabet(&self.alphabet, &other.alphabet));
        self.symbols == other.symbols
    }
}

impl Eq for FiniteWord {}

impl PartialOrd for FiniteWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The intrinsic ordering of finite words is shortlex: shorter words first,
/// ties broken lexicographically by alphabet order.
impl Ord for FiniteWord {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert!(same_alphabet(&self.alphabet, &other.alphabet));
        self.symbols
            .len()
            .cmp(&other.symbols.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.symbol(s))?;
        }
        Ok(())
    }
}

/// Shortlex comparison of two finite words over the same alphabet.
pub fn shortlex_cmp(x: &FiniteWord, y: &FiniteWord) -> Result<Ordering> {
    if !same_alphabet(&x.alphabet, &y.alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(x.cmp(y))
}

/// An ultimately periodic omega-word `u(v)^ω`, kept in canonical form: the
/// period is primitive, the prefix is the shortest possible, and for a purely
/// periodic word the period is its lexicographically least rotation. Two
/// `UpWord`s are structurally equal iff they denote the same omega-word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UpWord {
    prefix: FiniteWord,
    period: FiniteWord,
}

impl UpWord {
    /// Canonicalizes `u(v)^ω`. Errors if the period is empty.
    pub fn new(prefix: FiniteWord, period: FiniteWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if !same_alphabet(&prefix.alphabet, &period.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut u = prefix.symbols;
        let mut v = period.symbols;

        // Reduce the period to its primitive root.
        let root = primitive_root_len(&v);
        v.truncate(root);

        // Strip prefix symbols that rotate into the period: u'σ(wσ)^ω = u'(σw)^ω.
        while let Some(&last) = u.last() {
            if last == *v.last().unwrap() {
                u.pop();
                let moved = v.pop().unwrap();
                v.insert(0, moved);
            } else {
                break;
            }
        }

        // A purely periodic word gets the least rotation of its period.
        if u.is_empty() {
            v = least_rotation(&v);
        }

        let alphabet = prefix.alphabet;
        Ok(UpWord {
            prefix: FiniteWord { alphabet: alphabet.clone(), symbols: u },
            period: FiniteWord { alphabet, symbols: v },
        })
    }

    /// Parses the `u(v)` notation, e.g. `ab(ba)` or `(ab)`.
    pub fn parse(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let open = text
            .find('(')
            .ok_or_else(|| Error::InvalidInput(format!("missing '(' in word {text:?}")))?;
        if !text.ends_with(')') {
            return Err(Error::InvalidInput(format!("missing ')' in word {text:?}")));
        }
        let prefix = FiniteWord::parse(&text[..open], alphabet)?;
        let period = FiniteWord::parse(&text[open + 1..text.len() - 1], alphabet)?;
        UpWord::new(prefix, period)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.prefix.alphabet
    }

    pub fn prefix(&self) -> &FiniteWord {
        &self.prefix
    }

    pub fn period(&self) -> &FiniteWord {
        &self.period
    }

    /// `|u| + |v|`, the length of the representation.
    pub fn len(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The symbol at position `i` of the omega-word.
    pub fn symbol_at(&self, i: usize) -> usize {
        if i < self.prefix.len() {
            self.prefix.symbols[i]
        } else {
            self.period.symbols[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `len` symbols of the omega-word.
    pub fn unfold(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.symbol_at(i)).collect()
    }

    /// Prepends a finite word: `x · u(v)^ω = (xu)(v)^ω`, canonicalized.
    pub fn prepend(&self, x: &FiniteWord) -> UpWord {
        UpWord::new(x.concat(&self.prefix), self.period.clone()).unwrap()
    }

    /// The set of omega-word suffixes of `self`: `u'(v)^ω` for each non-empty
    /// suffix `u'` of `u`, and `(v₂v₁)^ω` for each split `v = v₁v₂` with `v₁`
    /// non-empty. At most `|u| + |v|` distinct words.
    pub fn suffixes(&self) -> Vec<UpWord> {
        let mut out = Vec::new();
        for start in self.prefix.proper_suffix_ranges() {
            let u = FiniteWord {
                alphabet: self.prefix.alphabet.clone(),
                symbols: self.prefix.symbols[self.prefix.len() - start..].to_vec(),
            };
            out.push(UpWord::new(u, self.period.clone()).unwrap());
        }
        for cut in 1..=self.period.len() {
            let mut rotated = self.period.symbols[cut..].to_vec();
            rotated.extend_from_slice(&self.period.symbols[..cut]);
            let v = FiniteWord { alphabet: self.period.alphabet.clone(), symbols: rotated };
            out.push(UpWord::new(FiniteWord::epsilon(&self.prefix.alphabet), v).unwrap());
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, self.period)
    }
}

/// Canonicalizes the pair `(u, v)` into a [`UpWord`].
pub fn up_canonicalize(prefix: FiniteWord, period: FiniteWord) -> Result<UpWord> {
    UpWord::new(prefix, period)
}

/// Denotational equality of two ultimately periodic words, decided by
/// comparing the first `max(|u₁|,|u₂|) + |v₁|·|v₂|` symbols.
pub fn up_equal(w1: &UpWord, w2: &UpWord) -> Result<bool> {
    if !same_alphabet(w1.alphabet(), w2.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let bound = w1.prefix.len().max(w2.prefix.len()) + w1.period.len() * w2.period.len();
    Ok((0..bound).all(|i| w1.symbol_at(i) == w2.symbol_at(i)))
}

fn primitive_root_len(v: &[usize]) -> usize {
    let n = v.len();
    for p in 1..n {
        if n % p == 0 && v.iter().zip(v.iter().cycle().skip(p)).take(n).all(|(a, b)| a == b) {
            return p;
        }
    }
    n
}

fn least_rotation(v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let mut best = 0;
    for start in 1..n {
        for i in 0..n {
            let a = v[(start + i) % n];
            let b = v[(best + i) % n];
            match a.cmp(&b) {
                Ordering::Less => {
                    best = start;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    (0..n).map(|i| v[(best + i) % n]).collect()
}

/// A labeled example: an omega-word plus a boolean classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledExample {
    pub word: UpWord,
    pub label: bool,
}

/// A finite set of labeled examples in which no word carries two labels.
/// Keyed by the canonical form of the words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    alphabet: Arc<Alphabet>,
    examples: BTreeMap<UpWord, bool>,
}

impl Sample {
    pub fn new(alphabet: &Arc<Alphabet>) -> Self {
        Sample { alphabet: alphabet.clone(), examples: BTreeMap::new() }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Adds an example; rejects a word already present with the other label.
    pub fn insert(&mut self, word: UpWord, label: bool) -> Result<()> {
        if !same_alphabet(&self.alphabet, word.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        match self.examples.insert(word.clone(), label) {
            Some(old) if old != label => Err(Error::InconsistentSample(word.to_string())),
            _ => Ok(()),
        }
    }

    pub fn label_of(&self, word: &UpWord) -> Option<bool> {
        self.examples.get(word).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = LabeledExample> + '_ {
        self.examples.iter().map(|(w, &l)| LabeledExample { word: w.clone(), label: l })
    }

    pub fn words(&self) -> impl Iterator<Item = &UpWord> + '_ {
        self.examples.keys()
    }

    /// Number of labeled examples.
    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    /// The length of the sample: the sum of `|u| + |v|` over its examples.
    pub fn length(&self) -> usize {
        self.examples.keys().map(|w| w.len()).sum()
    }

    /// Union of two samples; fails on conflicting labels.
    pub fn union(&self, other: &Sample) -> Result<Sample> {
        let mut out = self.clone();
        for ex in other.iter() {
            out.insert(ex.word, ex.label)?;
        }
        Ok(out)
    }

    /// The sample with every label complemented.
    pub fn complement_labels(&self) -> Sample {
        Sample {
            alphabet: self.alphabet.clone(),
            examples: self.examples.iter().map(|(w, &l)| (w.clone(), !l)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, alphabet: &Arc<Alphabet>) -> FiniteWord {
        FiniteWord::parse(text, alphabet).unwrap()
    }

    #[test]
    fn shortlex_examples() {
        let ab = Alphabet::ab();
        assert_eq!(
            shortlex_cmp(&word("b", &ab), &word("aa", &ab)).unwrap(),
            Ordering::Less,
            "length dominates"
        );
        assert_eq!(shortlex_cmp(&word("ab", &ab), &word("ba", &ab)).unwrap(), Ordering::Less);
        assert_eq!(shortlex_cmp(&word("a", &ab), &word("a", &ab)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn shortlex_uses_alphabet_order_not_char_order() {
        let ba = Alphabet::new(['b', 'a']).unwrap();
        assert_eq!(shortlex_cmp(&word("b", &ba), &word("a", &ba)).unwrap(), Ordering::Less);
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let ab = Alphabet::ab();
        let abc = Alphabet::new(['a', 'b', 'c']).unwrap();
        assert_eq!(
            shortlex_cmp(&word("a", &ab), &word("a", &abc)),
            Err(Error::AlphabetMismatch)
        );
    }

    #[test]
    fn canonicalize_examples() {
        let ab = Alphabet::ab();
        let w = UpWord::new(word("ab", &ab), word("abab", &ab)).unwrap();
        assert_eq!(w.to_string(), "(ab)");

        let w = UpWord::new(word("", &ab), word("a", &ab)).unwrap();
        assert_eq!(w.to_string(), "(a)");

        let w = UpWord::new(word("a", &ab), word("ba", &ab)).unwrap();
        assert_eq!(w.to_string(), "(ab)");
    }

    #[test]
    fn empty_period_rejected() {
        let ab = Alphabet::ab();
        assert_eq!(
            UpWord::new(word("a", &ab), word("", &ab)),
            Err(Error::EmptyPeriod)
        );
    }

    #[test]
    fn up_equal_examples() {
        let ab = Alphabet::ab();
        let w1 = UpWord::new(word("a", &ab), word("b", &ab)).unwrap();
        let w2 = UpWord::new(word("", &ab), word("ab", &ab)).unwrap();
        assert!(!up_equal(&w1, &w2).unwrap());

        let w3 = UpWord::new(word("a", &ab), word("ba", &ab)).unwrap();
        assert!(up_equal(&w2, &w3).unwrap());
        assert!(up_equal(&w1, &w1).unwrap());
    }

    #[test]
    fn suffix_examples() {
        let ab = Alphabet::ab();
        let w = UpWord::new(word("ab", &ab), word("ba", &ab)).unwrap();
        let suffixes: Vec<String> = w.suffixes().iter().map(|s| s.to_string()).collect();
        let mut expected = vec![
            "ab(ba)".to_string(),
            "b(ba)".to_string(),
            "(ba)".to_string(),
            "(ab)".to_string(),
        ];
        expected.sort();
        let mut got = suffixes.clone();
        got.sort();
        assert_eq!(got, expected);

        let w = UpWord::parse("(a)", &ab).unwrap();
        assert_eq!(w.suffixes(), vec![w.clone()]);

        let w = UpWord::parse("(ab)", &ab).unwrap();
        assert_eq!(w.suffixes().len(), 2);
    }

    /// Every pair of short words: structural equality of canonical forms must
    /// agree with symbol-by-symbol comparison out to the Prop-2.1 bound.
    #[test]
    fn canonical_equality_matches_unfolding_exhaustively() {
        let ab = Alphabet::ab();
        let mut all = Vec::new();
        for ulen in 0..=4usize {
            for vlen in 1..=4usize {
                for u in 0..(1usize << ulen) {
                    for v in 0..(1usize << vlen) {
                        let us: Vec<usize> = (0..ulen).map(|i| (u >> i) & 1).collect();
                        let vs: Vec<usize> = (0..vlen).map(|i| (v >> i) & 1).collect();
                        all.push((
                            FiniteWord::from_indices(&ab, us),
                            FiniteWord::from_indices(&ab, vs),
                        ));
                    }
                }
            }
        }
        let canon: Vec<UpWord> =
            all.iter().map(|(u, v)| UpWord::new(u.clone(), v.clone()).unwrap()).collect();
        for (i, (u1, v1)) in all.iter().enumerate() {
            for (j, (u2, v2)) in all.iter().enumerate() {
                let bound = u1.len().max(u2.len()) + v1.len() * v2.len();
                let direct = (0..bound).all(|p| {
                    let s1 = if p < u1.len() { u1.symbols()[p] } else { v1.symbols()[(p - u1.len()) % v1.len()] };
                    let s2 = if p < u2.len() { u2.symbols()[p] } else { v2.symbols()[(p - u2.len()) % v2.len()] };
                    s1 == s2
                });
                assert_eq!(up_equal(&canon[i], &canon[j]).unwrap(), direct);
                assert_eq!(canon[i] == canon[j], direct, "canonical forms must collide exactly on equal words");
            }
        }
    }

    #[test]
    fn suffixes_are_true_suffixes_and_bounded() {
        let ab = Alphabet::ab();
        for utext in ["", "a", "ab", "abb", "ba"] {
            for vtext in ["a", "ab", "ba", "aab", "abab"] {
                let w = UpWord::new(word(utext, &ab), word(vtext, &ab)).unwrap();
                let suffixes = w.suffixes();
                assert!(suffixes.len() <= utext.len() + vtext.len());
                // Check each suffix occurs at some shift of the original.
                let total = utext.len() + vtext.len();
                for s in &suffixes {
                    let bound = 2 * (total + s.len()) * (total + s.len()).max(1);
                    let found = (0..=total).any(|shift| {
                        (0..bound).all(|i| w.symbol_at(shift + i) == s.symbol_at(i))
                    });
                    assert!(found, "{s} is not a suffix of {w}");
                }
            }
        }
    }

    #[test]
    fn sample_rejects_conflicting_labels() {
        let ab = Alphabet::ab();
        let mut t = Sample::new(&ab);
        let w = UpWord::parse("a(b)", &ab).unwrap();
        t.insert(w.clone(), true).unwrap();
        // Same omega-word in a different spelling.
        let same = UpWord::new(word("ab", &ab), word("bb", &ab)).unwrap();
        assert_eq!(t.insert(same, false), Err(Error::InconsistentSample("a(b)".into())));
        assert_eq!(t.len(), 1);
        assert_eq!(t.length(), 2);
    }
}
