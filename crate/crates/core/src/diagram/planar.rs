use super::{index_point, point_index, PartitionDiagram};
use crate::error::{Error, Result};

/// Position of a point index on the boundary cycle `1, .., n, n', .., 1'`.
fn cycle_position(n: usize, idx: usize) -> usize {
    if idx < n {
        idx
    } else {
        3 * n - idx - 1
    }
}

/// Noncrossing test on the boundary cycle, using a stack of open blocks.
pub(super) fn is_noncrossing(d: &PartitionDiagram) -> bool {
    let n = d.n();
    let mut seq = vec![0u16; 2 * n];
    for (idx, &b) in d.labels().iter().enumerate() {
        seq[cycle_position(n, idx)] = b;
    }
    let mut last = vec![0usize; d.block_count()];
    for (pos, &b) in seq.iter().enumerate() {
        last[b as usize] = pos;
    }
    let mut open = vec![false; d.block_count()];
    let mut stack: Vec<u16> = Vec::new();
    for (pos, &b) in seq.iter().enumerate() {
        if open[b as usize] {
            if stack.last() != Some(&b) {
                return false;
            }
        } else {
            open[b as usize] = true;
            stack.push(b);
        }
        if last[b as usize] == pos {
            stack.pop();
        }
    }
    true
}

/// Maps a planar partition of degree `n` to the Jones diagram of degree `2n`
/// obtained by doubling every point.
///
/// The top point `k` splits into `2k-1, 2k` and the bottom point `k'` into
/// `(2k)', (2k-1)'`, each pair listed in boundary-cycle order. Walking round
/// each block, the later copy of a point is joined to the earlier copy of the
/// next point of the same block.
pub fn planar_to_jones(alpha: &PartitionDiagram) -> Result<PartitionDiagram> {
    if !alpha.is_planar() {
        return Err(Error::NotPlanar);
    }
    let n = alpha.n();
    let copies = |p: i64| -> (i64, i64) {
        if p > 0 {
            (2 * p - 1, 2 * p)
        } else {
            (2 * p, 2 * p + 1)
        }
    };
    let mut blocks = Vec::new();
    for block in alpha.blocks() {
        let mut pts = block.clone();
        pts.sort_by_key(|&p| cycle_position(n, point_index(n, p).unwrap()));
        for i in 0..pts.len() {
            let next = pts[(i + 1) % pts.len()];
            blocks.push(vec![copies(pts[i]).1, copies(next).0]);
        }
    }
    PartitionDiagram::from_blocks(2 * n, &blocks)
}

/// Inverse of [`planar_to_jones`].
pub fn jones_to_planar(beta: &PartitionDiagram) -> Result<PartitionDiagram> {
    let m = beta.n();
    if m % 2 != 0 || !beta.is_jones() {
        return Err(Error::NotJones);
    }
    let n = m / 2;
    let owner = |idx: usize| {
        let p = index_point(m, idx);
        let k = (p.unsigned_abs() as usize).div_ceil(2);
        point_index(n, if p > 0 { k as i64 } else { -(k as i64) }).unwrap()
    };
    let mut raw: Vec<usize> = (0..2 * n).collect();
    for block in 0..beta.block_count() {
        let members: Vec<usize> = (0..2 * m).filter(|&i| beta.labels()[i] as usize == block).collect();
        let (a, b) = (raw[owner(members[0])], raw[owner(members[1])]);
        if a != b {
            raw.iter_mut().filter(|r| **r == b).for_each(|r| *r = a);
        }
    }
    let alpha = PartitionDiagram::from_raw_labels(n, &raw);
    if planar_to_jones(&alpha)? != *beta {
        return Err(Error::NotJones);
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{FamilyTag, MonoidFamily};
    use std::collections::HashSet;

    /// Crossing test straight from the definition: two blocks cross when
    /// they have points a < b < c < d on the cycle with a, c in one block
    /// and b, d in the other.
    fn crosses_brute(d: &PartitionDiagram) -> bool {
        let n = d.n();
        let pos: Vec<(usize, u16)> = d
            .labels()
            .iter()
            .enumerate()
            .map(|(i, &b)| (cycle_position(n, i), b))
            .collect();
        for &(a, x) in &pos {
            for &(b, y) in &pos {
                for &(c, x2) in &pos {
                    for &(e, y2) in &pos {
                        if a < b && b < c && c < e && x == x2 && y == y2 && x != y {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Matching is noncrossing iff, reading round the cycle, every pair is
    /// a properly nested bracket.
    fn brackets_ok(d: &PartitionDiagram) -> bool {
        let n = d.n();
        let mut seq = vec![0u16; 2 * n];
        for (i, &b) in d.labels().iter().enumerate() {
            seq[cycle_position(n, i)] = b;
        }
        let mut stack = Vec::new();
        for b in seq {
            if stack.last() == Some(&b) {
                stack.pop();
            } else {
                stack.push(b);
            }
        }
        stack.is_empty()
    }

    #[test]
    fn planarity_matches_definition() {
        for n in 1..=3 {
            for d in MonoidFamily::new(FamilyTag::Partition, n).unwrap().diagrams().unwrap() {
                assert_eq!(d.is_planar(), !crosses_brute(&d), "{d}");
            }
        }
        for n in 1..=5 {
            for d in MonoidFamily::new(FamilyTag::Brauer, n).unwrap().diagrams().unwrap() {
                assert_eq!(d.is_planar(), brackets_ok(&d), "{d}");
            }
        }
    }

    #[test]
    fn identity_maps_to_identity() {
        for n in 0..5 {
            let id = PartitionDiagram::identity(n);
            assert_eq!(planar_to_jones(&id).unwrap(), PartitionDiagram::identity(2 * n));
        }
    }

    #[test]
    fn isomorphism_onto_jones() {
        for n in 1..=3 {
            let planar: Vec<_> = MonoidFamily::new(FamilyTag::Partition, n)
                .unwrap()
                .diagrams()
                .unwrap()
                .into_iter()
                .filter(|d| d.is_planar())
                .collect();
            let image: HashSet<_> = planar.iter().map(|a| planar_to_jones(a).unwrap()).collect();
            assert_eq!(image.len(), planar.len());
            let jones: HashSet<_> = MonoidFamily::new(FamilyTag::Jones, 2 * n)
                .unwrap()
                .diagrams()
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(image, jones);
            for a in &planar {
                assert_eq!(&jones_to_planar(&planar_to_jones(a).unwrap()).unwrap(), a);
                for b in &planar {
                    let lhs = planar_to_jones(&(a * b)).unwrap();
                    let rhs = &planar_to_jones(a).unwrap() * &planar_to_jones(b).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rejects_crossing_input() {
        let t = crate::diagram::generator(crate::diagram::Generator::Tau(1, 3), 3).unwrap();
        assert_eq!(planar_to_jones(&t), Err(Error::NotPlanar));
        assert_eq!(jones_to_planar(&t), Err(Error::NotJones));
    }
}
