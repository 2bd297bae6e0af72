//! Partition diagrams and their composition.
//!
//! A diagram of degree `n` is a set partition of the points `1..n` (top row)
//! and `1'..n'` (bottom row). Points are written as signed integers: `+k` is
//! the top point `k` and `-k` is the bottom point `k'`.

mod generators;
mod notation;
mod planar;
mod set_partition;
mod transformation;

pub use generators::{generator, Generator};
pub use planar::{jones_to_planar, planar_to_jones};
pub use set_partition::SetPartition;
pub use transformation::Transformation;

use crate::error::{Error, Result};
use std::ops::Mul;

/// A partition diagram in canonical form.
///
/// Points are indexed in the canonical order `+1 < .. < +n < -1 < .. < -n`,
/// and every point carries the index of its block. Blocks are numbered in
/// order of their least point, so two diagrams are equal exactly when their
/// label vectors are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    n: usize,
    labels: Box<[u16]>,
}

/// Product of two diagrams together with the number of components that were
/// discarded from the middle row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub product: PartitionDiagram,
    pub middle_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramSignature {
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: SetPartition,
    pub coker: SetPartition,
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Classification {
    pub brauer: bool,
    pub planar: bool,
    pub jones: bool,
    pub idempotent: bool,
    pub projection: bool,
}

pub(crate) fn point_index(n: usize, p: i64) -> Option<usize> {
    let k = p.unsigned_abs() as usize;
    if k == 0 || k > n {
        None
    } else if p > 0 {
        Some(k - 1)
    } else {
        Some(n + k - 1)
    }
}

pub(crate) fn index_point(n: usize, idx: usize) -> i64 {
    if idx < n {
        idx as i64 + 1
    } else {
        -((idx - n) as i64 + 1)
    }
}

fn normalize<T: Copy + Eq + Into<usize>>(raw: &[T], bound: usize) -> Box<[u16]> {
    let mut remap = vec![u16::MAX; bound];
    let mut next = 0u16;
    raw.iter()
        .map(|&r| {
            let r: usize = r.into();
            if remap[r] == u16::MAX {
                remap[r] = next;
                next += 1;
            }
            remap[r]
        })
        .collect()
}

struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        DisjointSets { parent: (0..size as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

impl PartitionDiagram {
    /// Builds a diagram from explicit blocks of signed points.
    pub fn from_blocks<B: AsRef<[i64]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let mut raw = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &p in block {
                let idx = point_index(n, p).ok_or(Error::PointOutOfRange { point: p, n })?;
                if raw[idx] != usize::MAX {
                    return Err(Error::RepeatedPoint(p));
                }
                raw[idx] = b;
            }
        }
        if let Some(idx) = raw.iter().position(|&r| r == usize::MAX) {
            return Err(Error::MissingPoint(index_point(n, idx)));
        }
        Ok(Self::from_raw_labels(n, &raw))
    }

    /// Builds a diagram from one arbitrary block label per point, the points
    /// being listed in canonical order.
    pub fn from_raw_labels(n: usize, raw: &[usize]) -> Self {
        assert_eq!(raw.len(), 2 * n, "expected {} labels", 2 * n);
        let bound = raw.iter().max().map_or(0, |m| m + 1);
        PartitionDiagram { n, labels: normalize(raw, bound) }
    }

    pub fn identity(n: usize) -> Self {
        let raw: Vec<usize> = (0..2 * n).map(|i| i % n.max(1)).collect();
        Self::from_raw_labels(n, &raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Block labels in canonical point order.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as lists of signed points, sorted canonically.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (idx, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(index_point(self.n, idx));
        }
        out
    }

    pub fn compose(&self, other: &Self) -> Result<Composition> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Composition {
        let n = self.n;
        // Nodes: 0..n top of self, n..2n the shared middle row, 2n..3n bottom of other.
        let mut dsu = DisjointSets::new(3 * n);
        let mut first = vec![u32::MAX; 2 * n + 1];
        for (idx, &b) in self.labels.iter().enumerate() {
            let node = idx as u32;
            match first[b as usize] {
                u32::MAX => first[b as usize] = node,
                f => dsu.union(f, node),
            }
        }
        first.iter_mut().for_each(|f| *f = u32::MAX);
        for (idx, &b) in other.labels.iter().enumerate() {
            let node = (n + idx) as u32;
            match first[b as usize] {
                u32::MAX => first[b as usize] = node,
                f => dsu.union(f, node),
            }
        }
        let mut raw = Vec::with_capacity(2 * n);
        for node in (0..n).chain(2 * n..3 * n) {
            raw.push(dsu.find(node as u32) as usize);
        }
        let mut middle_roots: Vec<usize> = (n..2 * n).map(|node| dsu.find(node as u32) as usize).collect();
        middle_roots.sort_unstable();
        middle_roots.dedup();
        let middle_components = middle_roots.iter().filter(|r| !raw.contains(r)).count();
        Composition {
            product: PartitionDiagram { n, labels: normalize(&raw, 3 * n) },
            middle_components,
        }
    }

    /// The reflection of the diagram in the horizontal axis.
    pub fn star(&self) -> Self {
        let n = self.n;
        let raw: Vec<u16> = self.labels[n..].iter().chain(&self.labels[..n]).copied().collect();
        PartitionDiagram { n, labels: normalize(&raw, 2 * n) }
    }

    /// For each block, whether it meets the top and the bottom row.
    fn block_rows(&self) -> Vec<(bool, bool)> {
        let mut rows = vec![(false, false); self.block_count()];
        for (idx, &b) in self.labels.iter().enumerate() {
            if idx < self.n {
                rows[b as usize].0 = true;
            } else {
                rows[b as usize].1 = true;
            }
        }
        rows
    }

    pub fn rank(&self) -> usize {
        self.block_rows().iter().filter(|&&(t, b)| t && b).count()
    }

    pub fn signature(&self) -> DiagramSignature {
        let n = self.n;
        let rows = self.block_rows();
        let transversal = |b: u16| rows[b as usize] == (true, true);
        let dom = (0..n).filter(|&i| transversal(self.labels[i])).map(|i| i + 1).collect();
        let codom = (0..n).filter(|&i| transversal(self.labels[n + i])).map(|i| i + 1).collect();
        DiagramSignature {
            dom,
            codom,
            ker: SetPartition::from_labels(&self.labels[..n]),
            coker: SetPartition::from_labels(&self.labels[n..]),
            rank: rows.iter().filter(|&&(t, b)| t && b).count(),
        }
    }

    pub fn is_brauer(&self) -> bool {
        let mut sizes = vec![0usize; self.block_count()];
        for &b in self.labels.iter() {
            sizes[b as usize] += 1;
        }
        sizes.iter().all(|&s| s == 2)
    }

    pub fn is_planar(&self) -> bool {
        planar::is_noncrossing(self)
    }

    pub fn is_jones(&self) -> bool {
        self.is_brauer() && self.is_planar()
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    pub fn is_projection(&self) -> bool {
        self.is_idempotent() && self.star() == *self
    }

    pub fn classify(&self) -> Classification {
        let brauer = self.is_brauer();
        let planar = self.is_planar();
        let idempotent = self.is_idempotent();
        Classification {
            brauer,
            planar,
            jones: brauer && planar,
            idempotent,
            projection: idempotent && self.star() == *self,
        }
    }
}

impl Mul for &PartitionDiagram {
    type Output = PartitionDiagram;

    /// Panics when the degrees differ; use [`PartitionDiagram::compose`] for a
    /// checked product.
    fn mul(self, rhs: Self) -> PartitionDiagram {
        assert_eq!(self.n, rhs.n, "degree mismatch");
        self.compose_unchecked(rhs).product
    }
}
