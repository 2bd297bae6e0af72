use std::fmt;

/// An equivalence relation on `{1..n}`, stored as a class index per point.
///
/// Class indices are normalized so that they appear in first-occurrence order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    class_id: Vec<usize>,
}

impl SetPartition {
    /// Builds a set partition from arbitrary class labels, renumbering them.
    pub fn from_labels<T: Copy + Eq>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let class_id = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        SetPartition { class_id }
    }

    /// The partition of `{1..n}` into singletons.
    pub fn trivial(n: usize) -> Self {
        SetPartition { class_id: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.class_id.len()
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_id
    }

    /// Class index of the (1-based) point `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_id[x - 1]
    }

    pub fn class_count(&self) -> usize {
        self.class_id.iter().max().map_or(0, |m| m + 1)
    }

    /// Classes as sorted lists of 1-based points, in first-occurrence order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &c) in self.class_id.iter().enumerate() {
            out[c].push(x + 1);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.class_count() == self.n()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}
