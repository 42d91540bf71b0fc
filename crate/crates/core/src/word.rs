//! Words in a free group and finite presentations.
//!
//! Generators are stored 0-based; everything user-facing (errors, the text
//! format) counts from 1. Lowercase letters are generators, uppercase their
//! inverses. Presentations with more than 26 generators use numeric tokens
//! `x12` / `X12` instead.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, ParseError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator: generator as u32, inverse }
    }

    /// The letter x_{g+1}.
    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    /// The letter x_{g+1}^{-1}.
    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    /// 0-based generator index.
    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A word in the free group, not necessarily reduced.
///
/// Ordered by length first, then lexicographically letter by letter
/// (`x_1 < x_1^{-1} < x_2 < ...`).
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest 0-based generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].inverse())
    }

    /// The freely reduced word equal to `self` in the free group.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction followed by removal of inverse pairs at the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce().0;
        let (mut lo, mut hi) = (0, reduced.len());
        while hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(reduced[lo..hi].to_vec())
    }

    pub fn inverse(&self) -> Word {
        self.0.iter().rev().map(|l| l.inverse()).collect()
    }

    /// Letter-by-letter juxtaposition, without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self^k` for any integer `k`, unreduced.
    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut v = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// Cyclic permutation starting at `start`.
    pub fn rotate(&self, start: usize) -> Word {
        if self.0.is_empty() {
            return Word::identity();
        }
        let s = start % self.0.len();
        let mut v = self.0[s..].to_vec();
        v.extend_from_slice(&self.0[..s]);
        Word(v)
    }

    /// Signed number of occurrences of a generator.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0.iter().filter(|l| l.generator() == generator).map(|l| l.sign()).sum()
    }

    /// Number of occurrences of a generator, either sign.
    pub fn occurrences(&self, generator: usize) -> usize {
        self.0.iter().filter(|l| l.generator() == generator).count()
    }

    /// Check every letter against an alphabet of size `n`.
    pub fn check_alphabet(&self, n: usize) -> Result<(), Error> {
        match self.max_generator() {
            Some(g) if g >= n => Err(Error::GeneratorOutOfRange { index: g + 1, n }),
            _ => Ok(()),
        }
    }

    /// Compact rendering with the default alphabet `a, b, c, ...`.
    /// Panics past 26 generators; use [`Alphabet::render`] there.
    pub fn to_letter_string(&self) -> String {
        self.0.iter().map(|&l| default_char(l)).collect()
    }
}

fn default_char(l: Letter) -> char {
    let g = l.generator();
    assert!(g < 26, "generator {} has no single-letter name", g + 1);
    let c = (b'a' + g as u8) as char;
    if l.is_inverse() {
        c.to_ascii_uppercase()
    } else {
        c
    }
}

/// Parse a word over the first `n` letters of the default alphabet.
///
/// The result is not reduced, so relators survive verbatim.
pub fn parse_word(text: &str, n: usize) -> Result<Word, ParseError> {
    Alphabet::default_letters(n).parse_word(text)
}

/// How generators are written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// One lowercase character per generator; uppercase is the inverse.
    Letters(Vec<char>),
    /// `x1 .. xn`, inverses `X1 .. Xn`.
    Numeric(usize),
}

impl Alphabet {
    /// `a, b, c, ...` when `n <= 26`, numeric otherwise.
    pub fn default_for(n: usize) -> Self {
        if n <= 26 {
            Alphabet::default_letters(n)
        } else {
            Alphabet::Numeric(n)
        }
    }

    fn default_letters(n: usize) -> Self {
        Alphabet::Letters((0..n.min(26)).map(|i| (b'a' + i as u8) as char).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            Alphabet::Letters(names) => names.len(),
            Alphabet::Numeric(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, Alphabet::Numeric(_))
    }

    pub fn generator_name(&self, g: usize) -> String {
        match self {
            Alphabet::Letters(names) => names[g].to_string(),
            Alphabet::Numeric(_) => format!("x{}", g + 1),
        }
    }

    /// Index of a generator given by name (`"c"` or `"x3"`).
    pub fn lookup(&self, name: &str) -> Option<usize> {
        match self {
            Alphabet::Letters(names) => {
                let mut chars = name.chars();
                let c = chars.next()?;
                if chars.next().is_some() {
                    return None;
                }
                names.iter().position(|&x| x == c)
            }
            Alphabet::Numeric(n) => {
                let k: usize = name.strip_prefix('x')?.parse().ok()?;
                (1..=*n).contains(&k).then(|| k - 1)
            }
        }
    }

    /// Remove generators, keeping the names of the others.
    pub fn without(&self, removed: &HashSet<usize>) -> Alphabet {
        match self {
            Alphabet::Letters(names) => Alphabet::Letters(
                names.iter().enumerate().filter(|(i, _)| !removed.contains(i)).map(|(_, &c)| c).collect(),
            ),
            Alphabet::Numeric(n) => Alphabet::Numeric(n - removed.len()),
        }
    }

    pub fn render(&self, w: &Word) -> String {
        match self {
            Alphabet::Letters(names) => {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.letters()
                    .iter()
                    .map(|l| {
                        let c = names[l.generator()];
                        if l.is_inverse() {
                            c.to_ascii_uppercase()
                        } else {
                            c
                        }
                    })
                    .collect()
            }
            Alphabet::Numeric(_) => {
                if w.is_empty() {
                    return "1".to_string();
                }
                let toks: Vec<String> = w
                    .letters()
                    .iter()
                    .map(|l| format!("{}{}", if l.is_inverse() { 'X' } else { 'x' }, l.generator() + 1))
                    .collect();
                toks.join(" ")
            }
        }
    }

    /// Parse a word; the empty string and `1` both denote the identity.
    /// Positions in errors are 1-based character columns.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        if text.trim() == "1" {
            return Ok(Word::identity());
        }
        match self {
            Alphabet::Letters(names) => {
                let mut letters = Vec::with_capacity(text.len());
                for (pos, ch) in text.chars().enumerate() {
                    let lower = ch.to_ascii_lowercase();
                    match names.iter().position(|&c| c == lower) {
                        Some(g) => letters.push(Letter::new(g, ch.is_ascii_uppercase())),
                        None if ch.is_ascii_alphabetic() => {
                            return Err(ParseError::UndeclaredGenerator { line: 1, name: lower.to_string() })
                        }
                        None => return Err(ParseError::BadCharacter { line: 1, position: pos + 1, ch }),
                    }
                }
                Ok(Word(letters))
            }
            Alphabet::Numeric(n) => parse_numeric(text, *n),
        }
    }
}

fn parse_numeric(text: &str, n: usize) -> Result<Word, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        if ch != 'x' && ch != 'X' {
            return Err(ParseError::BadCharacter { line: 1, position: i + 1, ch });
        }
        let start = i + 1;
        let mut end = start;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            let bad = chars.get(start).copied().unwrap_or(ch);
            return Err(ParseError::BadCharacter { line: 1, position: start.min(chars.len() - 1) + 1, ch: bad });
        }
        let digits: String = chars[start..end].iter().collect();
        let k: usize = digits
            .parse()
            .map_err(|_| ParseError::Syntax { line: 1, message: format!("generator number {digits} too large") })?;
        if k == 0 || k > n {
            return Err(ParseError::UndeclaredGenerator { line: 1, name: format!("x{k}") });
        }
        letters.push(Letter::new(k - 1, ch == 'X'));
        i = end;
    }
    Ok(Word(letters))
}

/// A finite presentation `<x_1..x_n | r_1..r_m>`. Relators are kept exactly
/// as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    /// Panics if a relator uses a generator outside the alphabet.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Self {
        let n = alphabet.len();
        for r in &relators {
            if let Err(e) = r.check_alphabet(n) {
                panic!("{e}");
            }
        }
        Presentation { alphabet, relators }
    }

    /// Presentation on `n` generators with the default alphabet.
    pub fn with_generators(n: usize, relators: Vec<Word>) -> Self {
        Presentation::new(Alphabet::default_for(n), relators)
    }

    pub fn free(n: usize) -> Self {
        Presentation::with_generators(n, Vec::new())
    }

    /// Generator count.
    pub fn n(&self) -> usize {
        self.alphabet.len()
    }

    /// Relator count.
    pub fn m(&self) -> usize {
        self.relators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Presentation {
        Presentation::new(self.alphabet.clone(), relators)
    }

    /// Total number of letters over all relators.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn render_word(&self, w: &Word) -> String {
        self.alphabet.render(w)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        self.alphabet.parse_word(text)
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// gens: a b c        (or `gens: 9` for x1..x9)
    /// rel: abAB
    /// ```
    pub fn parse(text: &str) -> Result<Presentation, ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| ParseError::Syntax {
                line: lineno,
                message: format!("expected `gens:` or `rel:`, found {line:?}"),
            })?;
            match key.trim() {
                "gens" => {
                    if alphabet.is_some() {
                        return Err(ParseError::Syntax { line: lineno, message: "second `gens:` line".into() });
                    }
                    alphabet = Some(parse_generators(value, lineno)?);
                }
                "rel" => {
                    let alpha = alphabet.as_ref().ok_or(ParseError::MissingGenerators)?;
                    let value = value.trim();
                    if value.is_empty() {
                        return Err(ParseError::EmptyRelator { line: lineno });
                    }
                    relators.push(alpha.parse_word(value).map_err(|e| e.at_line(lineno))?);
                }
                other => return Err(ParseError::Syntax { line: lineno, message: format!("unknown key `{other}`") }),
            }
        }
        let alphabet = alphabet.ok_or(ParseError::MissingGenerators)?;
        Ok(Presentation { alphabet, relators })
    }
}

fn parse_generators(value: &str, line: usize) -> Result<Alphabet, ParseError> {
    let tokens: Vec<&str> = value.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if tokens.is_empty() {
        return Err(ParseError::NoGenerators);
    }
    if tokens.len() == 1 && tokens[0].chars().all(|c| c.is_ascii_digit()) {
        let n: usize =
            tokens[0].parse().map_err(|_| ParseError::Syntax { line, message: "generator count too large".into() })?;
        return Ok(Alphabet::Numeric(n));
    }
    let mut seen = HashMap::new();
    let mut names = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let mut chars = tok.chars();
        let c = chars.next().unwrap();
        if chars.next().is_some() || !c.is_ascii_lowercase() {
            return Err(ParseError::Syntax {
                line,
                message: format!("generator name {tok:?} is not a lowercase letter"),
            });
        }
        if seen.insert(c, ()).is_some() {
            return Err(ParseError::DuplicateGenerator { line, name: c.to_string() });
        }
        names.push(c);
    }
    Ok(Alphabet::Letters(names))
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.alphabet {
            Alphabet::Letters(names) if !names.is_empty() => {
                let names: Vec<String> = names.iter().map(char::to_string).collect();
                writeln!(f, "gens: {}", names.join(" "))?;
            }
            _ => writeln!(f, "gens: {}", self.n())?,
        }
        for r in &self.relators {
            writeln!(f, "rel: {}", self.alphabet.render(r))?;
        }
        Ok(())
    }
}
