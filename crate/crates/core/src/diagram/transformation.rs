use super::SetPartition;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::Mul;

/// A total map on `{1..n}`, acting on the right: `i(ab) = (ia)b`.
///
/// Internally points are 0-based; the textual form `[a1,..,an]` lists the
/// 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    image_of: Box<[u8]>,
}

impl Transformation {
    /// Builds a map from 1-based images.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!("degree {n} too large")));
        }
        let image_of = images
            .iter()
            .map(|&j| {
                if j == 0 || j > n {
                    Err(Error::InvalidIndex(format!("{j} not in 1..={n}")))
                } else {
                    Ok((j - 1) as u8)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Transformation { image_of })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        Transformation { image_of: images.into_boxed_slice() }
    }

    pub fn identity(n: usize) -> Self {
        Transformation { image_of: (0..n as u8).collect() }
    }

    /// The idempotent `(i -> j)` that sends `i` to `j` and fixes every other
    /// point.
    pub fn elementary(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidIndex(format!("({i} -> {j}) in degree {n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images[i - 1] = j;
        Transformation::new(&images)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{text}`")))?;
        if inner.is_empty() {
            return Transformation::new(&[]);
        }
        let images = inner
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Transformation::new(&images)
    }

    pub fn n(&self) -> usize {
        self.image_of.len()
    }

    /// Image of the 1-based point `i`, as a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.image_of[i - 1] as usize + 1
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.image_of.iter().map(|&j| j as usize + 1).collect();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    pub fn kernel(&self) -> SetPartition {
        SetPartition::from_labels(&self.image_of)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// For a rank `n-1` idempotent, the pair `(i, j)` with `i -> j`.
    pub fn elementary_pair(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (1..=self.n()).filter(|&i| self.apply(i) != i).collect();
        match moved.as_slice() {
            &[i] if self.is_idempotent() => Some((i, self.apply(i))),
            _ => None,
        }
    }
}

impl Mul for &Transformation {
    type Output = Transformation;

    fn mul(self, rhs: Self) -> Transformation {
        assert_eq!(self.n(), rhs.n(), "degree mismatch");
        Transformation {
            image_of: self.image_of.iter().map(|&j| rhs.image_of[j as usize]).collect(),
        }
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image_of.iter().map(|&j| (j as usize + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action() {
        let a = Transformation::parse("[2,2,3]").unwrap();
        let b = Transformation::parse("[3,1,2]").unwrap();
        // 1 -> 2 -> 1, 2 -> 2 -> 1, 3 -> 3 -> 2
        assert_eq!((&a * &b).to_string(), "[1,1,2]");
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel().classes(), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn elementary_idempotents() {
        let e = Transformation::elementary(4, 3, 1).unwrap();
        assert!(e.is_idempotent());
        assert_eq!(e.rank(), 3);
        assert_eq!(e.elementary_pair(), Some((3, 1)));
        assert!(Transformation::elementary(4, 2, 2).is_err());
        assert_eq!(Transformation::identity(3).elementary_pair(), None);
    }
}
