//! Classical one-line permutations of `[k]`, used as pattern inputs.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `[k]` in one-line notation, 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its one-line values `a_1..a_k`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let k = values.len();
        let mut seen = vec![false; k];
        for &a in &values {
            if a == 0 || a as usize > k {
                return Err(Error::violation(format!(
                    "permutation value {a} out of range 1..={k}"
                )));
            }
            if seen[a as usize - 1] {
                return Err(Error::violation(format!("permutation value {a} repeated")));
            }
            seen[a as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// The identity permutation `12..k`.
    pub fn identity(k: u32) -> Self {
        Permutation {
            values: (1..=k).collect(),
        }
    }

    /// The reversal `k(k-1)..1`.
    pub fn reversal(k: u32) -> Self {
        Permutation {
            values: (1..=k).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One-line values `a_1..a_k`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value at position `i` (1-based).
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    /// Parses `"132"` (single digits) or `"1,3,2"` (comma-separated, any size).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::invalid("empty permutation"));
        }
        let values: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::invalid(format!("bad permutation entry {p:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::invalid(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Permutation::parse("132").unwrap().values(), &[1, 3, 2]);
        assert_eq!(Permutation::parse("1,3,2").unwrap().values(), &[1, 3, 2]);
        assert_eq!(
            Permutation::parse("10,2,1,3,4,5,6,7,8,9").unwrap().len(),
            10
        );
        assert!(Permutation::parse("122").is_err());
        assert!(Permutation::parse("14").is_err());
        assert!(Permutation::parse("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in ["1", "132", "4321"] {
            let p = Permutation::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
        }
    }
}
