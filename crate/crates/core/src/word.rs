//! Words over two-letter alphabets, packed into a `u64`.
//!
//! Letter `i` (counting from the left) of a word of length `n` is stored at
//! bit `n - 1 - i`; a set bit is the second letter of the alphabet (`b` or
//! `d`). With this layout two words of equal length compare
//! lexicographically exactly when their bit patterns compare numerically.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Monomial};

pub const MAX_WORD_LEN: usize = 64;

pub trait Alphabet: Copy + Eq + Ord + Hash + fmt::Debug + Default + 'static {
    /// Printed form of the first and second letter.
    const LETTERS: [char; 2];
    /// Degree contributed by the first and second letter.
    const DEGREES: [usize; 2];
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Ab;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Cd;

/// The basis `e = a − b`, `b` of the ab-algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Eb;

impl Alphabet for Ab {
    const LETTERS: [char; 2] = ['a', 'b'];
    const DEGREES: [usize; 2] = [1, 1];
}

impl Alphabet for Eb {
    const LETTERS: [char; 2] = ['e', 'b'];
    const DEGREES: [usize; 2] = [1, 1];
}

impl Alphabet for Cd {
    const LETTERS: [char; 2] = ['c', 'd'];
    const DEGREES: [usize; 2] = [1, 2];
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word<A> {
    len: u8,
    bits: u64,
    _alphabet: PhantomData<A>,
}

pub type AbWord = Word<Ab>;
pub type CdWord = Word<Cd>;
pub type EbWord = Word<Eb>;

/// Integer linear combination of words.
pub type Poly<A> = LinComb<Word<A>>;
pub type AbPoly = Poly<Ab>;
pub type CdPoly = Poly<Cd>;
pub type EbPoly = Poly<Eb>;

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl<A: Alphabet> Word<A> {
    pub fn empty() -> Self {
        Self::from_bits(0, 0)
    }

    /// Builds a word from its packed form; bits above `len` are ignored.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_WORD_LEN, "word length {len} exceeds {MAX_WORD_LEN}");
        Word {
            len: len as u8,
            bits: bits & mask(len),
            _alphabet: PhantomData,
        }
    }

    /// `true` entries are the second letter of the alphabet.
    pub fn from_letters(letters: &[bool]) -> Self {
        let bits = letters
            .iter()
            .fold(0u64, |acc, &l| (acc << 1) | u64::from(l));
        Self::from_bits(letters.len(), bits)
    }

    pub fn first_letter() -> Self {
        Self::from_bits(1, 0)
    }

    pub fn second_letter() -> Self {
        Self::from_bits(1, 1)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn count_second(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn degree(&self) -> usize {
        let seconds = self.count_second();
        (self.len() - seconds) * A::DEGREES[0] + seconds * A::DEGREES[1]
    }

    /// Letter at position `i` from the left; `true` is the second letter.
    pub fn letter(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.bits >> (self.len() - 1 - i)) & 1 == 1
    }

    pub fn letters(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "word length {len} exceeds {MAX_WORD_LEN}");
        let shifted = if other.len() >= 64 { 0 } else { self.bits << other.len() };
        Self::from_bits(len, shifted | other.bits)
    }

    pub fn reverse(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        let rev = self.bits.reverse_bits() >> (64 - self.len());
        Self::from_bits(self.len(), rev)
    }

    /// Letters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        debug_assert!(start <= end && end <= self.len());
        let width = end - start;
        if width == 0 {
            return Self::empty();
        }
        let shift = self.len() - end;
        Self::from_bits(width, self.bits >> shift)
    }

    /// Drops the first letter. Panics on the empty word.
    pub fn tail(&self) -> Self {
        self.slice(1, self.len())
    }

    /// Drops the last letter. Panics on the empty word.
    pub fn init(&self) -> Self {
        self.slice(0, self.len() - 1)
    }

    pub fn poly(self) -> Poly<A> {
        LinComb::basis(self)
    }

    /// Same letter pattern read in another alphabet.
    pub fn cast<B: Alphabet>(self) -> Word<B> {
        Word::from_bits(self.len(), self.bits)
    }
}

impl<A: Alphabet> Ord for Word<A> {
    /// Degree first, then lexicographic with the first letter smallest.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                if self.len == other.len {
                    self.bits.cmp(&other.bits)
                } else {
                    self.letters().cmp(other.letters())
                }
            })
    }
}

impl<A: Alphabet> PartialOrd for Word<A> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<A: Alphabet> fmt::Display for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in self.letters() {
            write!(f, "{}", A::LETTERS[usize::from(l)])?;
        }
        Ok(())
    }
}

impl<A: Alphabet> fmt::Debug for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<A: Alphabet> Monomial for Word<A> {
    fn parse_monomial(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(Self::empty());
        }
        if s.is_empty() || s.len() > MAX_WORD_LEN {
            return Err(Error::parse(s, "word must have 1 to 64 letters"));
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            if ch == A::LETTERS[0] {
                letters.push(false);
            } else if ch == A::LETTERS[1] {
                letters.push(true);
            } else {
                return Err(Error::parse(
                    s,
                    format!("letter `{ch}` is not one of {:?}", A::LETTERS),
                ));
            }
        }
        Ok(Self::from_letters(&letters))
    }

    fn unit() -> Option<Self> {
        Some(Self::empty())
    }
}

impl<A: Alphabet> std::str::FromStr for Word<A> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_monomial(s)
    }
}

/// All words of length `n` in lexicographic order.
pub fn words_of_length<A: Alphabet>(n: usize) -> impl Iterator<Item = Word<A>> {
    assert!(n < 64);
    (0..(1u64 << n)).map(move |bits| Word::from_bits(n, bits))
}

/// All cd-words of (weighted) degree `n`, in canonical order.
pub fn cd_words_of_degree(n: usize) -> Vec<CdWord> {
    fn go(rest: usize, prefix: &mut Vec<bool>, out: &mut Vec<CdWord>) {
        if rest == 0 {
            out.push(CdWord::from_letters(prefix));
            return;
        }
        prefix.push(false);
        go(rest - 1, prefix, out);
        prefix.pop();
        if rest >= 2 {
            prefix.push(true);
            go(rest - 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}
