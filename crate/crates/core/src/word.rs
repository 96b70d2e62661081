//! Free-group words on generators x_1, ..., x_m.
//!
//! The string grammar accepts `x1`, `X1` (inverse), `[w1,w2]` for the
//! commutator, and juxtaposition. Bare letters `x`, `y`, `z` are
//! shorthand for `x1`, `x2`, `x3`.

use std::fmt;

use crate::error::{Error, Result};

/// A word in the free group: a sequence of (1-based generator, +-1).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1);
        FreeWord {
            letters: vec![(i, 1)],
        }
    }

    pub fn from_letters(letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(g, e) in &letters {
            if g == 0 {
                return Err(Error::Parse("generator indices are 1-based".into()));
            }
            if e != 1 && e != -1 {
                return Err(Error::Parse(format!("letter exponent must be +-1, got {e}")));
            }
        }
        Ok(FreeWord { letters })
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    /// [a, b] = a b a^-1 b^-1.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Largest generator index used; 0 for the identity word.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent-sum vector in Z^m.
    pub fn exponent_sums(&self, m: usize) -> Vec<i64> {
        let mut sums = vec![0i64; m];
        for &(g, e) in &self.letters {
            if g <= m {
                sums[g - 1] += e as i64;
            }
        }
        sums
    }

    pub fn parse(s: &str) -> Result<FreeWord> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (word, rest) = parse_word(&chars, 0)?;
        if rest != chars.len() {
            return Err(Error::Parse(format!(
                "unexpected character {:?} at position {rest}",
                chars[rest]
            )));
        }
        Ok(word)
    }
}

fn parse_word(chars: &[char], mut pos: usize) -> Result<(FreeWord, usize)> {
    let mut word = FreeWord::identity();
    while pos < chars.len() && chars[pos] != ',' && chars[pos] != ']' {
        let (atom, next) = parse_atom(chars, pos)?;
        word = word.concat(&atom);
        pos = next;
    }
    Ok((word, pos))
}

fn parse_atom(chars: &[char], pos: usize) -> Result<(FreeWord, usize)> {
    match chars.get(pos) {
        // the empty word prints as "1"
        Some('1') if chars.get(pos + 1).map_or(true, |c| !c.is_ascii_digit()) => {
            Ok((FreeWord::identity(), pos + 1))
        }
        Some('[') => {
            let (a, p) = parse_word(chars, pos + 1)?;
            if chars.get(p) != Some(&',') {
                return Err(Error::Parse("expected ',' in commutator".into()));
            }
            let (b, p) = parse_word(chars, p + 1)?;
            if chars.get(p) != Some(&']') {
                return Err(Error::Parse("expected ']' closing commutator".into()));
            }
            Ok((FreeWord::commutator(&a, &b), p + 1))
        }
        Some(&c) if c.is_ascii_alphabetic() => {
            let exponent = if c.is_ascii_uppercase() { -1 } else { 1 };
            let letter = c.to_ascii_lowercase();
            let mut p = pos + 1;
            let mut digits = String::new();
            while p < chars.len() && chars[p].is_ascii_digit() {
                digits.push(chars[p]);
                p += 1;
            }
            let index = if digits.is_empty() {
                match letter {
                    'x' => 1,
                    'y' => 2,
                    'z' => 3,
                    _ => {
                        return Err(Error::Parse(format!(
                            "bare letter {c:?} has no generator index"
                        )))
                    }
                }
            } else {
                let i: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad generator index {digits:?}")))?;
                if i == 0 {
                    return Err(Error::Parse("generator indices start at 1".into()));
                }
                i
            };
            Ok((
                FreeWord {
                    letters: vec![(index, exponent)],
                },
                p,
            ))
        }
        other => Err(Error::Parse(format!("unexpected token {other:?} in word"))),
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for &(g, e) in &self.letters {
            if e > 0 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "X{g}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commutator() {
        let w = FreeWord::parse("[x,y]").unwrap();
        assert_eq!(
            w.letters(),
            &[(1, 1), (2, 1), (1, -1), (2, -1)]
        );
        assert_eq!(w, FreeWord::parse("[x1,x2]").unwrap());
        assert_eq!(w.exponent_sums(2), vec![0, 0]);
    }

    #[test]
    fn parses_juxtaposition_and_inverse() {
        let w = FreeWord::parse("x1X2x1").unwrap();
        assert_eq!(w.letters(), &[(1, 1), (2, -1), (1, 1)]);
        assert_eq!(w.inverse().letters(), &[(1, -1), (2, 1), (1, -1)]);
        assert_eq!(w.max_generator(), 2);
    }

    #[test]
    fn parses_nested_commutator() {
        let w = FreeWord::parse("[[x,y],x3]").unwrap();
        assert_eq!(w.max_generator(), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(FreeWord::parse("x0").is_err());
        assert!(FreeWord::parse("[x,y").is_err());
        assert!(FreeWord::parse("w").is_err());
        assert!(FreeWord::parse("x1)").is_err());
    }
}
