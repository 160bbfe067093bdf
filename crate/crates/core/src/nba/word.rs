use std::fmt;

use thiserror::Error;

use super::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("expected `stem(period)`")]
    Shape,
    #[error("period must not be empty")]
    EmptyPeriod,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}

/// An ultimately periodic word `stem · period^ω` over letter indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    stem: Vec<usize>,
    period: Vec<usize>,
}

impl UpWord {
    pub fn new(stem: Vec<usize>, period: Vec<usize>) -> Result<UpWord, WordError> {
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        Ok(UpWord { stem, period })
    }

    pub fn stem(&self) -> &[usize] {
        &self.stem
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    /// The letter at position `pos` of the infinite word.
    pub fn letter_at(&self, pos: usize) -> usize {
        if pos < self.stem.len() {
            self.stem[pos]
        } else {
            self.period[(pos - self.stem.len()) % self.period.len()]
        }
    }

    /// Parses `a b ( c d )` or, over single-character alphabets, `ab(cd)`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<UpWord, WordError> {
        let open = text.find('(').ok_or(WordError::Shape)?;
        let close = text.rfind(')').ok_or(WordError::Shape)?;
        if close < open || !text[close + 1..].trim().is_empty() {
            return Err(WordError::Shape);
        }
        let stem = tokens(&text[..open], alphabet)?;
        let period = tokens(&text[open + 1..close], alphabet)?;
        UpWord::new(stem, period)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }

    /// The same infinite word with `extra` more copies of the period moved
    /// into the stem.
    pub fn unrolled(&self, extra: usize) -> UpWord {
        let mut stem = self.stem.clone();
        for _ in 0..extra {
            stem.extend_from_slice(&self.period);
        }
        UpWord {
            stem,
            period: self.period.clone(),
        }
    }

    /// The same infinite word with the period repeated `times` times.
    pub fn period_repeated(&self, times: usize) -> UpWord {
        assert!(times >= 1);
        UpWord {
            stem: self.stem.clone(),
            period: self.period.repeat(times),
        }
    }
}

fn tokens(part: &str, alphabet: &Alphabet) -> Result<Vec<usize>, WordError> {
    let mut out = Vec::new();
    for tok in part.split_whitespace() {
        if let Some(i) = alphabet.index_of(tok) {
            out.push(i);
        } else if alphabet.single_char() {
            for c in tok.chars() {
                let s = c.to_string();
                out.push(alphabet.index_of(&s).ok_or(WordError::UnknownLetter(s))?);
            }
        } else {
            return Err(WordError::UnknownLetter(tok.to_string()));
        }
    }
    Ok(out)
}

pub struct WordDisplay<'a> {
    word: &'a UpWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet.single_char() { "" } else { " " };
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|&i| self.alphabet.letter(i))
                .collect::<Vec<_>>()
                .join(sep)
        };
        let stem = join(&self.word.stem);
        let period = join(&self.word.period);
        if sep.is_empty() {
            write!(f, "{stem}({period})")
        } else if stem.is_empty() {
            write!(f, "({period})")
        } else {
            write!(f, "{stem} ({period})")
        }
    }
}
