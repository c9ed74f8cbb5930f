use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generator family: half twists `σᵢⱼ` and full twists `τᵢⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Sigma,
    Tau,
}

/// One generator `σᵢⱼ^±1` or `τᵢⱼ^±1` with 1-based indices `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: Kind,
    pub i: usize,
    pub j: usize,
    pub inverse: bool,
}

impl Letter {
    /// Builds a letter; the index pair is stored in increasing order.
    pub fn new(kind: Kind, i: usize, j: usize, inverse: bool) -> Result<Letter> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidWord(format!("indices must be distinct and positive, got ({i}, {j})")));
        }
        Ok(Letter { kind, i: i.min(j), j: i.max(j), inverse })
    }

    pub fn sigma(i: usize, j: usize) -> Letter {
        Letter::new(Kind::Sigma, i, j, false).expect("valid indices")
    }

    pub fn tau(i: usize, j: usize) -> Letter {
        Letter::new(Kind::Tau, i, j, false).expect("valid indices")
    }

    pub fn inv(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }

    /// Whether the standard arcs of the two letters are disjoint: endpoints
    /// distinct and the intervals `[i, j]` either nested or separated.
    pub fn disjoint_from(&self, other: &Letter) -> bool {
        let (a, b) = if self.i < other.i { (self, other) } else { (other, self) };
        let distinct = a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
        distinct && (a.j < b.i || b.j < a.j)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::Sigma => 's',
            Kind::Tau => 't',
        };
        if self.i < 10 && self.j < 10 {
            write!(f, "{k}{}{}", self.i, self.j)?;
        } else {
            write!(f, "{k}{},{}", self.i, self.j)?;
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A product of generators; `uv` acts as `u ∘ v`, so its matrix is `M_u · M_v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(Vec<Letter>);

impl GeneratorWord {
    pub fn empty() -> GeneratorWord {
        GeneratorWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> GeneratorWord {
        GeneratorWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Cancels adjacent inverse pairs.
    pub fn freely_reduced(&self) -> GeneratorWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GeneratorWord(out)
    }

    pub fn split_at(&self, k: usize) -> (GeneratorWord, GeneratorWord) {
        (GeneratorWord(self.0[..k].to_vec()), GeneratorWord(self.0[k..].to_vec()))
    }
}

impl From<Letter> for GeneratorWord {
    fn from(l: Letter) -> GeneratorWord {
        GeneratorWord(vec![l])
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Grammar: letters `s` or `t`, then either two single digits (`s12`) or two
/// comma-separated numbers (`s1,12`), then an optional exponent `^k` with
/// `k` a nonzero integer. Whitespace between letters is optional.
impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorWord> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut letters = Vec::new();
        let err = |pos: usize, what: &str| Error::InvalidWord(format!("{what} at offset {pos} in {s:?}"));
        let digits = |pos: &mut usize| -> String {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            chars[start..*pos].iter().collect()
        };
        loop {
            while pos < chars.len() && chars[pos].is_whitespace() {
                pos += 1;
            }
            if pos == chars.len() {
                break;
            }
            let kind = match chars[pos] {
                's' | 'S' => Kind::Sigma,
                't' | 'T' => Kind::Tau,
                _ => return Err(err(pos, "expected 's' or 't'")),
            };
            pos += 1;
            let first = digits(&mut pos);
            let (i, j) = if pos < chars.len() && chars[pos] == ',' {
                pos += 1;
                let second = digits(&mut pos);
                if first.is_empty() || second.is_empty() {
                    return Err(err(pos, "expected index"));
                }
                let parse = |t: &str| t.parse::<usize>().map_err(|_| err(pos, "index out of range"));
                (parse(&first)?, parse(&second)?)
            } else {
                let d: Vec<usize> = first.chars().map(|c| c as usize - '0' as usize).collect();
                if d.len() != 2 {
                    return Err(err(pos, "expected two single-digit indices or 'i,j'"));
                }
                (d[0], d[1])
            };
            let mut exp: i64 = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let neg = match chars.get(pos) {
                    Some('-') => {
                        pos += 1;
                        true
                    }
                    Some('+') => {
                        pos += 1;
                        false
                    }
                    _ => false,
                };
                let e = digits(&mut pos);
                let e: i64 = e.parse().map_err(|_| err(pos, "expected exponent"))?;
                if e == 0 {
                    return Err(err(pos, "zero exponent"));
                }
                exp = if neg { -e } else { e };
            }
            let letter = Letter::new(kind, i, j, exp < 0)?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(letter);
            }
        }
        Ok(GeneratorWord(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        let w: GeneratorWord = "s12 s23^-1 t13".parse().unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::sigma(1, 2), Letter::sigma(2, 3).inv(), Letter::tau(1, 3)]
        );
        assert_eq!(w.to_string(), "s12 s23^-1 t13");
        let w: GeneratorWord = "s1,12^2s21".parse().unwrap();
        assert_eq!(w.to_string(), "s1,12 s1,12 s12");
        assert!("".parse::<GeneratorWord>().unwrap().is_empty());
        assert!("s11".parse::<GeneratorWord>().is_err());
        assert!("s1".parse::<GeneratorWord>().is_err());
        assert!("x12".parse::<GeneratorWord>().is_err());
        assert!("s12^0".parse::<GeneratorWord>().is_err());
    }

    #[test]
    fn inverse_and_reduction() {
        let w: GeneratorWord = "s12 s23 s23^-1 t13".parse().unwrap();
        assert_eq!(w.freely_reduced().to_string(), "s12 t13");
        assert_eq!(w.inverse().to_string(), "t13^-1 s23 s23^-1 s12^-1");
        assert!(w.concat(&w.inverse()).freely_reduced().is_empty());
    }
}
