use crate::diagram::{PartitionDiagram, Transformation};

/// All set partitions of `m` points as restricted growth strings, in
/// lexicographic order.
pub(crate) fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        let bound = if prefix.is_empty() { 0 } else { max + 1 };
        for c in 0..=bound {
            prefix.push(c);
            go(prefix, max.max(c), m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(m), 0, m, &mut out);
    out
}

/// Perfect matchings of the `2n` points of a Brauer diagram.
pub(crate) fn brauer(n: usize) -> Vec<PartitionDiagram> {
    fn go(raw: &mut Vec<usize>, next: usize, n: usize, out: &mut Vec<PartitionDiagram>) {
        let Some(first) = raw.iter().position(|&r| r == usize::MAX) else {
            out.push(PartitionDiagram::from_raw_labels(n, raw));
            return;
        };
        raw[first] = next;
        for partner in first + 1..2 * n {
            if raw[partner] == usize::MAX {
                raw[partner] = next;
                go(raw, next + 1, n, out);
                raw[partner] = usize::MAX;
            }
        }
        raw[first] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * n], 0, n, &mut out);
    out
}

/// Noncrossing perfect matchings of the boundary cycle `1..n, n'..1'`, built
/// from balanced bracket sequences.
pub(crate) fn jones(n: usize) -> Vec<PartitionDiagram> {
    let to_index = |pos: usize| if pos < n { pos } else { 3 * n - pos - 1 };
    fn go(
        pos: usize,
        stack: &mut Vec<usize>,
        raw: &mut Vec<usize>,
        n: usize,
        to_index: &dyn Fn(usize) -> usize,
        out: &mut Vec<PartitionDiagram>,
    ) {
        if pos == 2 * n {
            out.push(PartitionDiagram::from_raw_labels(n, raw));
            return;
        }
        let remaining = 2 * n - pos;
        if stack.len() < remaining {
            stack.push(pos);
            raw[to_index(pos)] = pos;
            go(pos + 1, stack, raw, n, to_index, out);
            stack.pop();
        }
        if let Some(open) = stack.pop() {
            raw[to_index(pos)] = open;
            go(pos + 1, stack, raw, n, to_index, out);
            stack.push(open);
        }
    }
    let mut out = Vec::new();
    go(0, &mut Vec::new(), &mut vec![0; 2 * n], n, &to_index, &mut out);
    out
}

/// All `n^n` maps on `{1..n}` in lexicographic order.
pub(crate) fn transformations(n: usize) -> Vec<Transformation> {
    let total = (n as u64).pow(n as u32) as usize;
    let mut out = Vec::with_capacity(total);
    let mut images = vec![0u8; n];
    for _ in 0..total {
        out.push(Transformation::from_zero_based(images.clone()));
        for slot in images.iter_mut().rev() {
            *slot += 1;
            if (*slot as usize) < n {
                break;
            }
            *slot = 0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let bells = [1, 1, 2, 5, 15, 52, 203, 877];
        for (m, &b) in bells.iter().enumerate() {
            assert_eq!(set_partitions(m).len(), b);
        }
        assert_eq!(brauer(4).len(), 105);
        assert_eq!(jones(5).len(), 42);
        assert_eq!(transformations(3).len(), 27);
    }
}
