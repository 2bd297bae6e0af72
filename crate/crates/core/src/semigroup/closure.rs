use super::{principal_factor_product, Element};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::hash::Hash;

/// The subsemigroup generated by `gens`, listed in discovery order.
///
/// Every word in the generators is reached by repeatedly multiplying known
/// elements on the right by a generator.
pub fn closure<T, F>(gens: &[T], product: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut gens_unique: Vec<T> = Vec::new();
    for g in gens {
        if seen.insert(g.clone()) {
            gens_unique.push(g.clone());
        }
    }
    let mut out = gens_unique.clone();
    let mut i = 0;
    while i < out.len() {
        for g in &gens_unique {
            let y = product(&out[i], g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Whether `gens` generates exactly `target`.
pub fn is_generating<T, F>(gens: &[T], target: &[T], product: F) -> bool
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let got: HashSet<T> = closure(gens, product).into_iter().collect();
    let want: HashSet<T> = target.iter().cloned().collect();
    got == want
}

/// Whether `gens` generates the principal factor `J ∪ {0}`, where `j_class`
/// lists the elements of `J`. The zero is always counted as generated.
pub fn generates_principal_factor<E: Element>(gens: &[E], j_class: &[E]) -> Result<bool> {
    let Some(r) = j_class.first().map(|e| e.rank()) else {
        return Ok(gens.is_empty());
    };
    for g in gens {
        if g.rank() != r {
            return Err(Error::RankMismatch { expected: r, found: g.rank() });
        }
    }
    let wrapped: Vec<Option<E>> = gens.iter().cloned().map(Some).collect();
    let got: HashSet<E> = closure(&wrapped, |a, b| match (a, b) {
        (Some(a), Some(b)) => principal_factor_product(r, a, b).ok().flatten(),
        _ => None,
    })
    .into_iter()
    .flatten()
    .collect();
    Ok(got == j_class.iter().cloned().collect())
}

/// Multiplication table of a finite semigroup given by its elements.
pub struct CayleyTable<E> {
    elements: Vec<E>,
    index: HashMap<E, u32>,
    table: Vec<u32>,
}

impl<E: Element> CayleyTable<E> {
    pub const MAX_ELEMENTS: usize = 4096;

    /// Builds the table; the elements must be closed under the product.
    pub fn new(elements: Vec<E>) -> Result<Self> {
        let size = elements.len();
        if size > Self::MAX_ELEMENTS {
            return Err(Error::Guard {
                estimated: format!("{} table entries", size * size),
                limit: format!("{} entries", Self::MAX_ELEMENTS * Self::MAX_ELEMENTS),
            });
        }
        let index: HashMap<E, u32> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let mut table = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                let ab = a.product(b);
                let k = *index
                    .get(&ab)
                    .ok_or_else(|| Error::InvalidArgument(format!("product {ab} leaves the set")))?;
                table.push(k);
            }
        }
        Ok(CayleyTable { elements, index, table })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn index_of(&self, e: &E) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elements.len() + b as usize]
    }

    /// Membership mask of the subsemigroup generated by the given indices.
    pub fn closure_mask(&self, gens: &[u32]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue: Vec<u32> = Vec::with_capacity(self.len());
        for &g in gens {
            if !seen[g as usize] {
                seen[g as usize] = true;
                queue.push(g);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            let row = &self.table[x as usize * self.len()..(x as usize + 1) * self.len()];
            for &g in gens {
                let y = row[g as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        seen
    }

    /// Size of the subsemigroup generated by the given indices.
    pub fn closure_size(&self, gens: &[u32]) -> usize {
        self.closure_mask(gens).iter().filter(|&&b| b).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{generator, Generator, PartitionDiagram};
    use crate::semigroup::{FamilyTag, MonoidFamily};

    fn mul(a: &PartitionDiagram, b: &PartitionDiagram) -> PartitionDiagram {
        a * b
    }

    #[test]
    fn identity_closure() {
        let id = PartitionDiagram::identity(3);
        assert_eq!(closure(&[id.clone()], mul), vec![id]);
    }

    #[test]
    fn projections_generate_singular_part_of_p3() {
        let n = 3;
        let mut gens: Vec<PartitionDiagram> = (1..=n).map(|i| generator(Generator::Pi(i), n).unwrap()).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                gens.push(generator(Generator::PiPair(i, j), n).unwrap());
            }
        }
        let singular: Vec<_> = MonoidFamily::new(FamilyTag::Partition, 3)
            .unwrap()
            .diagrams()
            .unwrap()
            .into_iter()
            .filter(|d| d.rank() < n)
            .collect();
        assert_eq!(singular.len(), 197);
        assert!(is_generating(&gens, &singular, mul));
        let top: Vec<_> = singular.iter().filter(|d| d.rank() == 2).cloned().collect();
        assert!(generates_principal_factor(&gens, &top).unwrap());
    }

    #[test]
    fn adjacent_taus_generate_singular_part_of_j4() {
        let gens: Vec<_> = (1..4).map(|i| generator(Generator::TauAdj(i), 4).unwrap()).collect();
        assert_eq!(closure(&gens, mul).len(), 13);
    }

    #[test]
    fn example_set_in_p2_does_not_generate() {
        let gens: Vec<_> = Generator::parse_list("pi1,pi2,lam12,rho12", 2)
            .unwrap()
            .into_iter()
            .map(|g| g.diagram(2).unwrap())
            .collect();
        let singular = MonoidFamily::new(FamilyTag::Partition, 2).unwrap().ideal_elements(1).unwrap();
        let crate::semigroup::Elements::Diagrams(singular) = singular else { unreachable!() };
        assert!(!is_generating(&gens, &singular, mul));
    }

    #[test]
    fn empty_generates_empty() {
        let none: Vec<PartitionDiagram> = Vec::new();
        assert!(is_generating(&none, &none, mul));
        assert!(generates_principal_factor(&none, &none).unwrap());
    }

    #[test]
    fn table_closure_matches_generic_closure() {
        let all = MonoidFamily::new(FamilyTag::Brauer, 3).unwrap().diagrams().unwrap();
        let table = CayleyTable::new(all.clone()).unwrap();
        let gens = [generator(Generator::Tau(1, 2), 3).unwrap(), generator(Generator::Sigma(1, 2, 3), 3).unwrap()];
        let idx: Vec<u32> = gens.iter().map(|g| table.index_of(g).unwrap()).collect();
        assert_eq!(table.closure_size(&idx), closure(&gens, mul).len());
    }
}
