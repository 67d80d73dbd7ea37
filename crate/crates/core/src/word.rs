use std::fmt;

/// A word over a finite alphabet, letters stored as indices `0..k`.
///
/// Words are the elements of the free monoid and the word part of
/// self-similar product elements. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: u8) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[other.0.len() - self.0.len()..] == self.0[..]
    }

    /// The word `x` with `self x = other`, when `self` is a prefix.
    pub fn strip_prefix(&self, other: &Word) -> Option<Word> {
        if self.is_prefix_of(other) {
            Some(Word(other.0[self.0.len()..].to_vec()))
        } else {
            None
        }
    }

    /// The word `x` with `x self = other`, when `self` is a suffix.
    pub fn strip_suffix(&self, other: &Word) -> Option<Word> {
        if self.is_suffix_of(other) {
            Some(Word(other.0[..other.0.len() - self.0.len()].to_vec()))
        } else {
            None
        }
    }

    /// All words over `k` letters of length exactly `n`, lexicographic.
    pub fn all_of_length(k: u8, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * k as usize);
            for w in &out {
                for x in 0..k {
                    let mut v = w.0.clone();
                    v.push(x);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `n`, ordered by length then lexicographic.
    pub fn all_up_to(k: u8, n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 0..=n {
            out.extend(Word::all_of_length(k, len));
        }
        out
    }

    /// LSB-first binary value of a word over `{0,1}`.
    pub fn bit_value(&self) -> i64 {
        let mut v = 0i64;
        for (i, &b) in self.0.iter().enumerate() {
            v += (b as i64) << i;
        }
        v
    }

    /// Word of length `n` over `{0,1}` with the given LSB-first value.
    pub fn from_bit_value(mut v: i64, n: usize) -> Word {
        let mut letters = Vec::with_capacity(n);
        for _ in 0..n {
            letters.push((v & 1) as u8);
            v >>= 1;
        }
        Word(letters)
    }

    pub fn parse(s: &str) -> Option<Word> {
        if s == "ε" {
            return Some(Word::empty());
        }
        let mut letters = Vec::new();
        for c in s.bytes() {
            let idx = DIGITS.iter().position(|&d| d == c.to_ascii_lowercase())?;
            letters.push(idx as u8);
        }
        Some(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for &x in &self.0 {
            write!(f, "{}", DIGITS[x as usize] as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
