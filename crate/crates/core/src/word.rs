//! Index words: finite sequences over `{0, …, N-1}` addressing nested cells
//! of an iterated function system.

use crate::error::{Error, Result};

/// A finite index sequence. The empty word is the identity address.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Build a word, checking every index against the branch count `n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidParameter(format!(
                "word index {bad} out of range for N={n}"
            )));
        }
        Ok(Word(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, i: usize) {
        self.0.push(i);
    }

    /// `self` followed by `other`: the address of the cell reached by
    /// descending through `self` first.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_index() {
        assert!(Word::new(vec![0, 2], 2).is_err());
        assert!(Word::new(vec![0, 1], 2).is_ok());
    }

    #[test]
    fn concat_and_prefix() {
        let w1 = Word::from(vec![1, 0]);
        let w2 = Word::from(vec![0, 1]);
        let w = w1.concat(&w2);
        assert_eq!(w.indices(), &[1, 0, 0, 1]);
        assert_eq!(w.prefix(2), w1);
    }
}
