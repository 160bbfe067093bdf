use std::collections::HashMap;

use super::NbaError;

/// An ordered set of letter tokens, each matching `[A-Za-z0-9_]+`.
#[derive(Debug, Clone)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Alphabet {}

pub(crate) fn valid_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(letters: impl IntoIterator<Item = S>) -> Result<Alphabet, NbaError> {
        let mut out = Alphabet {
            letters: Vec::new(),
            index: HashMap::new(),
        };
        for tok in letters {
            let tok = tok.as_ref();
            if !valid_token(tok) {
                return Err(NbaError::InvalidToken(tok.to_string()));
            }
            if out.index.insert(tok.to_string(), out.letters.len()).is_some() {
                return Err(NbaError::DuplicateLetter(tok.to_string()));
            }
            out.letters.push(tok.to_string());
        }
        if out.letters.is_empty() {
            return Err(NbaError::EmptyAlphabet);
        }
        Ok(out)
    }

    /// `a, b, c, ...` for up to 26 letters, `s0, s1, ...` beyond that.
    pub fn standard(k: usize) -> Alphabet {
        let names: Vec<String> = if k <= 26 {
            (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (0..k).map(|i| format!("s{i}")).collect()
        };
        Alphabet::new(names).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, i: usize) -> &str {
        &self.letters[i]
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, tok: &str) -> Option<usize> {
        self.index.get(tok).copied()
    }

    /// True when every token is a single character, which enables the
    /// compact word syntax `ab(ba)`.
    pub fn single_char(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_inverts_position() {
        let a = Alphabet::new(["x", "y_1", "Z"]).unwrap();
        for (i, l) in a.letters().iter().enumerate() {
            assert_eq!(a.index_of(l), Some(i));
        }
        assert!(!a.single_char());
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(matches!(Alphabet::new(["a", "a"]), Err(NbaError::DuplicateLetter(_))));
        assert!(matches!(Alphabet::new(["a-b"]), Err(NbaError::InvalidToken(_))));
        assert!(matches!(Alphabet::new(Vec::<String>::new()), Err(NbaError::EmptyAlphabet)));
    }

    #[test]
    fn standard_names() {
        assert_eq!(Alphabet::standard(3).letters(), &["a", "b", "c"]);
        assert_eq!(Alphabet::standard(30).letter(29), "s29");
    }
}
