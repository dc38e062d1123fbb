use std::fmt;

use serde::Serialize;

/// Face counts `(f₋₁, f₀, …, f_{d−1})`. Index 0 holds `f₋₁ = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        debug_assert_eq!(counts.first(), Some(&1));
        FVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `f_i`, zero above the top dimension.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.0.get(k)).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    pub fn reduced_euler_char(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 }).sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_char_and_access() {
        let v = FVector::new(vec![1, 6, 12, 8]);
        assert_eq!(v.reduced_euler_char(), 1);
        assert_eq!(v.get(-1), 1);
        assert_eq!(v.get(1), 12);
        assert_eq!(v.get(5), 0);
        assert_eq!(v.get(-2), 0);
        assert_eq!(v.dim(), 2);
        assert_eq!(v.to_string(), "(1,6,12,8)");
        assert_eq!(FVector::new(vec![1]).reduced_euler_char(), -1);
    }
}
