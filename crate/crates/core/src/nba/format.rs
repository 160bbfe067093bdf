//! The NBA v1 text format.
//!
//! ```text
//! nba
//! alphabet: a b
//! states: 2
//! initial: 0
//! accepting: 1
//! 0 a 0
//! 0 a 1
//! 1 b 1
//! ```
//!
//! Lines starting with `#` and blank lines are ignored when parsing.

use std::fmt::Write;

use super::{Alphabet, Nba, NbaBuilder, NbaError};

fn syntax(line: usize, message: impl Into<String>) -> NbaError {
    NbaError::Syntax {
        line,
        message: message.into(),
    }
}

fn header<'a>(line: Option<(usize, &'a str)>, key: &str) -> Result<(usize, &'a str), NbaError> {
    let (no, text) = line.ok_or_else(|| syntax(0, format!("missing `{key}:` line")))?;
    let rest = text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| syntax(no, format!("expected `{key}:`")))?;
    Ok((no, rest))
}

fn parse_state(tok: &str, line: usize, states: usize) -> Result<usize, NbaError> {
    let q: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("expected a state index, found `{tok}`")))?;
    if q >= states {
        return Err(NbaError::StateOutOfRange {
            line,
            state: q,
            states,
        });
    }
    Ok(q)
}

pub fn parse_nba(text: &str) -> Result<Nba, NbaError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, "nba")) => {}
        Some((no, _)) => return Err(syntax(no, "expected `nba` header")),
        None => return Err(syntax(0, "empty document")),
    }

    let (no, rest) = header(lines.next(), "alphabet")?;
    let alphabet = Alphabet::new(rest.split_whitespace()).map_err(|e| syntax(no, e.to_string()))?;

    let (no, rest) = header(lines.next(), "states")?;
    let states: usize = rest
        .trim()
        .parse()
        .map_err(|_| syntax(no, "expected a state count"))?;

    let mut b = NbaBuilder::new(alphabet, states);

    let (no, rest) = header(lines.next(), "initial")?;
    for tok in rest.split_whitespace() {
        b.set_initial(parse_state(tok, no, states)?);
    }

    let (no, rest) = header(lines.next(), "accepting")?;
    for tok in rest.split_whitespace() {
        b.set_accepting(parse_state(tok, no, states)?, true);
    }

    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [src, letter, dst] = toks[..] else {
            return Err(syntax(no, "expected `<src> <letter> <dst>`"));
        };
        let p = parse_state(src, no, states)?;
        let a = b.alphabet.index_of(letter).ok_or_else(|| NbaError::UnknownLetter {
            line: no,
            token: letter.to_string(),
        })?;
        let q = parse_state(dst, no, states)?;
        b.add_edge(p, a, q);
    }

    b.build()
}

pub fn serialize_nba(a: &Nba) -> String {
    let mut out = String::new();
    out.push_str("nba\n");
    out.push_str("alphabet:");
    for l in a.alphabet().letters() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let _ = writeln!(out, "states: {}", a.num_states());
    out.push_str("initial:");
    for q in a.initial() {
        let _ = write!(out, " {q}");
    }
    out.push('\n');
    out.push_str("accepting:");
    for q in a.accepting_states() {
        let _ = write!(out, " {q}");
    }
    out.push('\n');
    for (p, l, q) in a.transitions() {
        let _ = writeln!(out, "{p} {} {q}", a.alphabet().letter(l));
    }
    out
}
