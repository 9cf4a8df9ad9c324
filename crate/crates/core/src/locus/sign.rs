use std::fmt;
use std::str::FromStr;

use super::LocusError;

/// Sign assignment `σ ∈ {±1}ⁿ` of a signed distance sum.
///
/// The binary index sets bit `i` exactly when `σᵢ = −1`, so index 0 is the
/// unsigned (all-plus) case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self, LocusError> {
        if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(LocusError::BadSignVector(format!("{signs:?}")));
        }
        Ok(SignVector(signs))
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector(vec![1; n])
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        SignVector((0..n).map(|i| if index >> i & 1 == 1 { -1 } else { 1 }).collect())
    }

    pub fn index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .map(|(i, _)| 1 << i)
            .sum()
    }

    /// All `2ⁿ` sign vectors in index order.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        (0..1usize << n).map(move |i| SignVector::from_index(n, i))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *s > 0 { '+' } else { '-' })?;
        }
        write!(f, ")")
    }
}

/// Accepts `+-+`, `(+,-,+)` and the Unicode minus sign.
impl FromStr for SignVector {
    type Err = LocusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let signs = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                _ => Err(LocusError::BadSignVector(s.to_string())),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        SignVector::new(signs).map_err(|_| LocusError::BadSignVector(s.to_string()))
    }
}
