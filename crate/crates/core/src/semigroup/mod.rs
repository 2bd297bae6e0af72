//! Monoid families, Green's structure, ideals and closure.

mod closure;
mod enumerate;

pub use closure::{closure, generates_principal_factor, is_generating, CayleyTable};

use crate::diagram::{PartitionDiagram, SetPartition, Transformation};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// Largest family that [`MonoidFamily::elements`] will materialize.
pub const ELEMENT_GUARD: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Partition,
    Brauer,
    Jones,
    PlanarPartition,
    FullTransformation,
    SingularTransformation,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Partition => "partition",
            FamilyTag::Brauer => "brauer",
            FamilyTag::Jones => "jones",
            FamilyTag::PlanarPartition => "planar",
            FamilyTag::FullTransformation => "transformation",
            FamilyTag::SingularTransformation => "singular",
        }
    }

    pub fn is_diagram(self) -> bool {
        !matches!(self, FamilyTag::FullTransformation | FamilyTag::SingularTransformation)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "partition" | "p" => FamilyTag::Partition,
            "brauer" | "b" => FamilyTag::Brauer,
            "jones" | "j" | "tl" | "temperley-lieb" => FamilyTag::Jones,
            "planar" | "planar-partition" | "pp" => FamilyTag::PlanarPartition,
            "transformation" | "full-transformation" | "t" => FamilyTag::FullTransformation,
            "singular" | "singular-transformation" | "sing" => FamilyTag::SingularTransformation,
            _ => return Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        })
    }
}

/// A concrete monoid: a family together with its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidFamily {
    pub tag: FamilyTag,
    pub n: usize,
}

impl fmt::Display for MonoidFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tag, self.n)
    }
}

/// The elements of a family, of whichever element type it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elements {
    Diagrams(Vec<PartitionDiagram>),
    Transformations(Vec<Transformation>),
}

impl Elements {
    pub fn len(&self) -> usize {
        match self {
            Elements::Diagrams(v) => v.len(),
            Elements::Transformations(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical notation, one element per line.
    pub fn lines(&self) -> Vec<String> {
        match self {
            Elements::Diagrams(v) => v.iter().map(|d| d.to_string()).collect(),
            Elements::Transformations(v) => v.iter().map(|t| t.to_string()).collect(),
        }
    }
}

impl MonoidFamily {
    pub fn new(tag: FamilyTag, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        if !tag.is_diagram() && n > 12 {
            return Err(Error::InvalidArgument(format!("transformation degree {n} too large")));
        }
        Ok(MonoidFamily { tag, n })
    }

    /// Exact number of elements.
    pub fn size(&self) -> BigUint {
        use crate::counting::{bell, catalan, double_factorial, factorial};
        let n = self.n as u64;
        match self.tag {
            FamilyTag::Partition => bell(2 * n),
            FamilyTag::Brauer => double_factorial(2 * n - 1),
            FamilyTag::Jones => catalan(n),
            FamilyTag::PlanarPartition => catalan(2 * n),
            FamilyTag::FullTransformation => BigUint::from(n).pow(n as u32),
            FamilyTag::SingularTransformation => BigUint::from(n).pow(n as u32) - factorial(n),
        }
    }

    /// Ranks that occur in the family, in increasing order.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.n;
        match self.tag {
            FamilyTag::Partition | FamilyTag::PlanarPartition => (0..=n).collect(),
            FamilyTag::Brauer | FamilyTag::Jones => (n % 2..=n).step_by(2).collect(),
            FamilyTag::FullTransformation => (1..=n).collect(),
            FamilyTag::SingularTransformation => (1..n).collect(),
        }
    }

    pub fn has_rank(&self, r: usize) -> bool {
        self.ranks().contains(&r)
    }

    pub(crate) fn check_rank(&self, r: usize) -> Result<()> {
        if self.has_rank(r) {
            Ok(())
        } else {
            Err(Error::InvalidRank { family: self.to_string(), r })
        }
    }

    /// Rank of the top J-class below the group of units, if there is one.
    pub fn top_singular_rank(&self) -> Option<usize> {
        let below: Vec<usize> = self.ranks().into_iter().filter(|&r| r < self.n).collect();
        below.last().copied()
    }

    /// Whether a diagram of the right degree belongs to this family.
    pub fn contains(&self, d: &PartitionDiagram) -> bool {
        d.n() == self.n
            && match self.tag {
                FamilyTag::Partition => true,
                FamilyTag::Brauer => d.is_brauer(),
                FamilyTag::Jones => d.is_jones(),
                FamilyTag::PlanarPartition => d.is_planar(),
                _ => false,
            }
    }

    fn guard(&self) -> Result<()> {
        let size = self.size();
        if size > BigUint::from(ELEMENT_GUARD) {
            return Err(Error::Guard { estimated: size.to_string(), limit: ELEMENT_GUARD.to_string() });
        }
        Ok(())
    }

    /// All elements of a diagram family, sorted canonically.
    pub fn diagrams(&self) -> Result<Vec<PartitionDiagram>> {
        self.guard()?;
        let n = self.n;
        let mut out = match self.tag {
            FamilyTag::Partition => enumerate::set_partitions(2 * n)
                .into_iter()
                .map(|raw| PartitionDiagram::from_raw_labels(n, &raw))
                .collect(),
            FamilyTag::Brauer => enumerate::brauer(n),
            FamilyTag::Jones => enumerate::jones(n),
            FamilyTag::PlanarPartition => enumerate::jones(2 * n)
                .iter()
                .map(crate::diagram::jones_to_planar)
                .collect::<Result<Vec<_>>>()?,
            _ => return Err(Error::Unsupported(format!("{} has no diagrams", self.tag))),
        };
        out.sort();
        Ok(out)
    }

    /// All elements of a transformation family, sorted.
    pub fn transformations(&self) -> Result<Vec<Transformation>> {
        self.guard()?;
        let all = enumerate::transformations(self.n);
        Ok(match self.tag {
            FamilyTag::FullTransformation => all,
            FamilyTag::SingularTransformation => all.into_iter().filter(|t| t.rank() < self.n).collect(),
            _ => return Err(Error::Unsupported(format!("{} is a diagram family", self.tag))),
        })
    }

    pub fn elements(&self) -> Result<Elements> {
        if self.tag.is_diagram() {
            self.diagrams().map(Elements::Diagrams)
        } else {
            self.transformations().map(Elements::Transformations)
        }
    }

    /// The J-class summaries, ordered by rank.
    pub fn green_classes(&self) -> Result<Vec<JClassDescriptor>> {
        let rows = match self.elements()? {
            Elements::Diagrams(v) => green_classes(&v),
            Elements::Transformations(v) => green_classes(&v),
        };
        Ok(rows
            .into_iter()
            .map(|g| JClassDescriptor {
                family: *self,
                r: g.r,
                r_class_count: g.r_class_count,
                l_class_count: g.l_class_count,
                h_size: g.h_size,
                is_group: g.r_class_count == 1 && g.l_class_count == 1,
            })
            .collect())
    }

    /// Elements of rank at most `r`.
    pub fn ideal_elements(&self, r: usize) -> Result<Elements> {
        if r > self.n {
            return Err(Error::InvalidRank { family: self.to_string(), r });
        }
        Ok(match self.elements()? {
            Elements::Diagrams(v) => Elements::Diagrams(v.into_iter().filter(|d| d.rank() <= r).collect()),
            Elements::Transformations(v) => {
                Elements::Transformations(v.into_iter().filter(|t| t.rank() <= r).collect())
            }
        })
    }

    /// Elements of rank exactly `r`.
    pub fn j_class_diagrams(&self, r: usize) -> Result<Vec<PartitionDiagram>> {
        self.check_rank(r)?;
        Ok(self.diagrams()?.into_iter().filter(|d| d.rank() == r).collect())
    }

    /// Number of minimal generating sets of the ideal `I_r`, computed as
    /// `rho! * h^rho` from the R-class count `rho` and the H-class size `h`.
    pub fn min_generating_set_count(&self, r: usize) -> Result<BigUint> {
        self.check_rank(r)?;
        let rho = crate::counting::rank_ideal(self.tag, self.n, r)?;
        let h = match self.tag {
            FamilyTag::Partition | FamilyTag::Brauer => crate::counting::factorial(r as u64),
            FamilyTag::Jones | FamilyTag::PlanarPartition => BigUint::one(),
            _ => return Err(Error::Unsupported(self.tag.to_string())),
        };
        let rho_u = rho
            .to_u64()
            .filter(|&x| x <= 100_000)
            .ok_or_else(|| Error::Guard { estimated: rho.to_string(), limit: "100000".into() })?;
        Ok(crate::counting::factorial(rho_u) * h.pow(rho_u as u32))
    }
}

/// Key identifying an R-class or L-class: a set of points plus a partition.
pub type GreenKey = (Vec<usize>, SetPartition);

/// Common interface of the element types used by the brute-force machinery.
pub trait Element: Clone + Eq + Hash + Ord + Debug + Display + Send + Sync {
    fn product(&self, other: &Self) -> Self;
    fn rank(&self) -> usize;
    /// Invariant that determines the R-class.
    fn r_key(&self) -> GreenKey;
    /// Invariant that determines the L-class.
    fn l_key(&self) -> GreenKey;

    fn is_idempotent(&self) -> bool {
        self.product(self) == *self
    }
}

impl Element for PartitionDiagram {
    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn rank(&self) -> usize {
        PartitionDiagram::rank(self)
    }

    /// `(dom, ker)`. For Brauer diagrams the kernel alone already determines
    /// the domain, so this agrees with keying by kernel.
    fn r_key(&self) -> GreenKey {
        let s = self.signature();
        (s.dom, s.ker)
    }

    fn l_key(&self) -> GreenKey {
        let s = self.signature();
        (s.codom, s.coker)
    }
}

impl Element for Transformation {
    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn rank(&self) -> usize {
        Transformation::rank(self)
    }

    fn r_key(&self) -> GreenKey {
        (Vec::new(), self.kernel())
    }

    fn l_key(&self) -> GreenKey {
        (self.image(), SetPartition::trivial(0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JClassDescriptor {
    #[serde(skip)]
    pub family: MonoidFamily,
    pub r: usize,
    pub r_class_count: usize,
    pub l_class_count: usize,
    pub h_size: usize,
    pub is_group: bool,
}

impl JClassDescriptor {
    pub const CSV_HEADER: &'static str = "family,n,r,r_classes,l_classes,h_size";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family.tag, self.family.n, self.r, self.r_class_count, self.l_class_count, self.h_size
        )
    }
}

/// Per-rank Green's class counts of an arbitrary element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankClasses {
    pub r: usize,
    pub size: usize,
    pub r_class_count: usize,
    pub l_class_count: usize,
    pub h_size: usize,
}

/// Groups elements by rank and counts R- and L-classes using the invariant
/// keys of [`Element`].
pub fn green_classes<E: Element>(elements: &[E]) -> Vec<RankClasses> {
    let mut by_rank: BTreeMap<usize, (usize, BTreeSet<GreenKey>, BTreeSet<GreenKey>)> = BTreeMap::new();
    for e in elements {
        let entry = by_rank.entry(e.rank()).or_default();
        entry.0 += 1;
        entry.1.insert(e.r_key());
        entry.2.insert(e.l_key());
    }
    by_rank
        .into_iter()
        .map(|(r, (size, rs, ls))| RankClasses {
            r,
            size,
            r_class_count: rs.len(),
            l_class_count: ls.len(),
            h_size: size / (rs.len() * ls.len()),
        })
        .collect()
}

/// Product in the principal factor of the J-class of rank `j`: `ab` when it
/// stays in the class and `None` (zero) otherwise.
pub fn principal_factor_product<E: Element>(j: usize, a: &E, b: &E) -> Result<Option<E>> {
    for x in [a, b] {
        if x.rank() != j {
            return Err(Error::RankMismatch { expected: j, found: x.rank() });
        }
    }
    let ab = a.product(b);
    Ok((ab.rank() == j).then_some(ab))
}
