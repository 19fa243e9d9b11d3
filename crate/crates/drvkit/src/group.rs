//! Finite groups as dense Cayley tables, group homomorphisms, and the
//! orbit partitions used throughout: ordinary conjugacy classes and the
//! twisted orbits of g ↦ σ(h)⁻¹·g·τ(h).
//!
//! Elements are indices 0..order-1 and the multiplication table is the
//! sole source of truth; there is no symbolic permutation arithmetic here.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default cap on group order; keeps every downstream linear system at
/// desk scale. Overridable per call and via `DRVKIT_CAP` in the CLI.
pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(GroupValidation),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unsupported family parameter: {0}")]
    BadFamilyParameter(String),
    #[error("label count {labels} does not match order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("homomorphism images have length {got}, expected {expected}")]
    ImageCount { got: usize, expected: usize },
    #[error("not a homomorphism: images[{i}·{j}] differs from images[{i}]·images[{j}]")]
    NotHomomorphism { i: usize, j: usize },
    #[error("identity is not mapped to the identity")]
    IdentityNotFixed,
    #[error("homomorphism is defined on a different group")]
    GroupMismatch,
}

/// One violated group axiom, with witness indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    RowNotPermutation {
        row: usize,
        value: usize,
    },
    ColumnNotPermutation {
        col: usize,
        value: usize,
    },
    NoIdentity,
    NoInverse {
        element: usize,
    },
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NotSquare { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            AxiomViolation::EntryOutOfRange { row, col, value } => {
                write!(
                    f,
                    "closure fails: table[{row}][{col}] = {value} is out of range"
                )
            }
            AxiomViolation::RowNotPermutation { row, value } => {
                write!(f, "row {row} is not a permutation (value {value} repeats)")
            }
            AxiomViolation::ColumnNotPermutation { col, value } => {
                write!(
                    f,
                    "column {col} is not a permutation (value {value} repeats)"
                )
            }
            AxiomViolation::NoIdentity => write!(f, "identity axiom fails: no two-sided identity"),
            AxiomViolation::NoInverse { element } => {
                write!(f, "inverse axiom fails for element {element}")
            }
            AxiomViolation::NotAssociative { i, j, k } => {
                write!(f, "associativity fails at ({i}, {j}, {k})")
            }
        }
    }
}

/// Verdict of a raw-table validation. Empty violations means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupValidation {
    pub violations: Vec<AxiomViolation>,
}

impl GroupValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for GroupValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// Check every group axiom on a raw square table. All violations are
/// collected (capped per category so degenerate inputs stay readable).
pub fn validate_group(table: &[Vec<usize>]) -> GroupValidation {
    const PER_CATEGORY: usize = 8;
    let n = table.len();
    let mut v = GroupValidation::default();

    let mut shape_ok = true;
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            v.violations.push(AxiomViolation::NotSquare {
                row: i,
                len: row.len(),
                order: n,
            });
            shape_ok = false;
        }
    }
    if n == 0 {
        v.violations.push(AxiomViolation::NoIdentity);
        return v;
    }
    if !shape_ok {
        return v;
    }

    let mut closure_ok = true;
    let mut count = 0;
    'closure: for (i, row) in table.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if value >= n {
                v.violations.push(AxiomViolation::EntryOutOfRange {
                    row: i,
                    col: j,
                    value,
                });
                closure_ok = false;
                count += 1;
                if count >= PER_CATEGORY {
                    break 'closure;
                }
            }
        }
    }
    if !closure_ok {
        return v;
    }

    count = 0;
    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &value in row {
            if seen[value] {
                v.violations
                    .push(AxiomViolation::RowNotPermutation { row: i, value });
                count += 1;
                break;
            }
            seen[value] = true;
        }
        if count >= PER_CATEGORY {
            break;
        }
    }
    count = 0;
    for j in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            let value = row[j];
            if seen[value] {
                v.violations
                    .push(AxiomViolation::ColumnNotPermutation { col: j, value });
                count += 1;
                break;
            }
            seen[value] = true;
        }
        if count >= PER_CATEGORY {
            break;
        }
    }

    let identity =
        (0..n).find(|&e| (0..n).all(|j| table[e][j] == j) && (0..n).all(|i| table[i][e] == i));
    let Some(e) = identity else {
        v.violations.push(AxiomViolation::NoIdentity);
        return v;
    };

    count = 0;
    for i in 0..n {
        let has_inverse = (0..n).any(|j| table[i][j] == e && table[j][i] == e);
        if !has_inverse {
            v.violations.push(AxiomViolation::NoInverse { element: i });
            count += 1;
            if count >= PER_CATEGORY {
                break;
            }
        }
    }

    count = 0;
    'assoc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    v.violations
                        .push(AxiomViolation::NotAssociative { i, j, k });
                    count += 1;
                    if count >= PER_CATEGORY {
                        break 'assoc;
                    }
                }
            }
        }
    }
    v
}

/// A finite group given by a validated Cayley table.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validate a raw table and construct the group.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Arc<FiniteGroup>, GroupError> {
        Self::from_table_with_labels(table, None)
    }

    pub fn from_table_with_labels(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Arc<FiniteGroup>, GroupError> {
        let verdict = validate_group(&table);
        if !verdict.is_valid() {
            return Err(GroupError::InvalidTable(verdict));
        }
        let order = table.len();
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(GroupError::LabelCount {
                    labels: l.len(),
                    order,
                });
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e][j] == j))
            .expect("validated table has an identity");
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let inverse: Vec<usize> = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| flat[i * order + j] == identity)
                    .expect("validated table has inverses")
            })
            .collect();
        Ok(Arc::new(FiniteGroup {
            order,
            table: flat,
            identity,
            inverse,
            labels,
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product g_i · g_j.
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("g{}", i),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.op(i, j) == self.op(j, i)))
    }

    /// Conjugate s·g·s⁻¹.
    pub fn conjugate(&self, s: usize, g: usize) -> usize {
        self.op(self.op(s, g), self.inverse(s))
    }

    /// Orbits of g ↦ h⁻¹·g·h over all h, blocks keyed by least member.
    pub fn conjugacy_classes(&self) -> Partition {
        let maps: Vec<Box<dyn Fn(usize) -> usize + '_>> = (0..self.order)
            .map(|h| {
                let hinv = self.inverse(h);
                Box::new(move |g: usize| self.op(self.op(hinv, g), h)) as _
            })
            .collect();
        Partition::from_closure(self.order, &maps)
    }
}

/// A partition of 0..n-1 into blocks listed by least contained index,
/// each block sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    fn from_closure(n: usize, maps: &[Box<dyn Fn(usize) -> usize + '_>]) -> Partition {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut queue = vec![start];
            block_of[start] = id;
            let mut members = vec![start];
            while let Some(g) = queue.pop() {
                for m in maps {
                    let img = m(g);
                    if block_of[img] == usize::MAX {
                        block_of[img] = id;
                        members.push(img);
                        queue.push(img);
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        Partition { blocks, block_of }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// A homomorphism between finite groups, stored as element images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHomomorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHomomorphism {
    /// Validate images[e] = e and multiplicativity, then construct.
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<GroupHomomorphism, GroupError> {
        if images.len() != source.order() {
            return Err(GroupError::ImageCount {
                got: images.len(),
                expected: source.order(),
            });
        }
        for &img in &images {
            if img >= target.order() {
                return Err(GroupError::ElementOutOfRange {
                    index: img,
                    order: target.order(),
                });
            }
        }
        if images[source.identity()] != target.identity() {
            return Err(GroupError::IdentityNotFixed);
        }
        for i in 0..source.order() {
            for j in 0..source.order() {
                if images[source.op(i, j)] != target.op(images[i], images[j]) {
                    return Err(GroupError::NotHomomorphism { i, j });
                }
            }
        }
        Ok(GroupHomomorphism {
            source,
            target,
            images,
        })
    }

    pub fn identity_on(group: Arc<FiniteGroup>) -> GroupHomomorphism {
        let images = (0..group.order()).collect();
        GroupHomomorphism {
            source: Arc::clone(&group),
            target: group,
            images,
        }
    }

    /// The inner automorphism g ↦ s·g·s⁻¹.
    pub fn inner_automorphism(
        group: Arc<FiniteGroup>,
        s: usize,
    ) -> Result<GroupHomomorphism, GroupError> {
        if s >= group.order() {
            return Err(GroupError::ElementOutOfRange {
                index: s,
                order: group.order(),
            });
        }
        let images = (0..group.order()).map(|g| group.conjugate(s, g)).collect();
        Ok(GroupHomomorphism {
            source: Arc::clone(&group),
            target: group,
            images,
        })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Injectivity equals surjectivity here: the image list is a permutation.
    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &img in &self.images {
            if seen[img] {
                return false;
            }
            seen[img] = true;
        }
        true
    }

    pub fn compose(&self, inner: &GroupHomomorphism) -> Result<GroupHomomorphism, GroupError> {
        if inner.target != self.source {
            return Err(GroupError::GroupMismatch);
        }
        Ok(GroupHomomorphism {
            source: Arc::clone(&inner.source),
            target: Arc::clone(&self.target),
            images: inner.images.iter().map(|&g| self.images[g]).collect(),
        })
    }
}

/// Orbits of the maps g ↦ σ(h)⁻¹·g·τ(h) over all h in G.
///
/// These maps form a right action of G, so the orbits partition the
/// elements even when σ or τ fails to be bijective.
pub fn twisted_orbits(
    group: &Arc<FiniteGroup>,
    sigma: &GroupHomomorphism,
    tau: &GroupHomomorphism,
) -> Result<Partition, GroupError> {
    for phi in [sigma, tau] {
        if !phi.is_endomorphism() || phi.source() != group {
            return Err(GroupError::GroupMismatch);
        }
    }
    let g = group.as_ref();
    let maps: Vec<Box<dyn Fn(usize) -> usize + '_>> = (0..g.order())
        .map(|h| {
            let s_inv = g.inverse(sigma.apply(h));
            let t = tau.apply(h);
            Box::new(move |x: usize| g.op(g.op(s_inv, x), t)) as _
        })
        .collect();
    Ok(Partition::from_closure(g.order(), &maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_group, FamilySpec};

    /// Independent conjugacy oracle: compute the full relation
    /// {(g, h⁻¹gh)} pairwise and partition by repeated merging.
    fn conjugacy_oracle(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut class_of: Vec<usize> = (0..n).collect();
        loop {
            let mut changed = false;
            for x in 0..n {
                for h in 0..n {
                    let y = g.op(g.op(g.inverse(h), x), h);
                    let (a, b) = (class_of[x], class_of[y]);
                    if a != b {
                        let m = a.min(b);
                        for c in class_of.iter_mut() {
                            if *c == a || *c == b {
                                *c = m;
                            }
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<usize> = class_of.clone();
        reps.sort_unstable();
        reps.dedup();
        for r in reps {
            blocks.push((0..n).filter(|&x| class_of[x] == r).collect());
        }
        blocks
    }

    #[test]
    fn validate_group_accepts_c2() {
        assert!(validate_group(&[vec![0, 1], vec![1, 0]]).is_valid());
    }

    #[test]
    fn validate_group_flags_duplicate_row() {
        let verdict = validate_group(&[vec![0, 1], vec![1, 1]]);
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::RowNotPermutation { row: 1, .. })));
    }

    #[test]
    fn validate_group_flags_missing_identity() {
        let verdict = validate_group(&[vec![0; 3], vec![0; 3], vec![0; 3]]);
        assert!(!verdict.is_valid());
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::NoIdentity)));
        let shifted = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        // valid group (C3 with identity at index 2)
        assert!(validate_group(&shifted).is_valid());
        // now a latin square that is not associative and has no identity
        let latin = vec![vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1]];
        let verdict = validate_group(&latin);
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::NoIdentity)));
    }

    #[test]
    fn validate_group_flags_associativity() {
        // Latin square with two-sided identity at 0 that is not a group:
        // the smallest such quasigroups have order 5.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let verdict = validate_group(&table);
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::NotAssociative { .. })));
    }

    #[test]
    fn conjugacy_classes_match_oracle_on_catalog() {
        for spec in [
            FamilySpec::Cyclic(4),
            FamilySpec::Symmetric(3),
            FamilySpec::Quaternion8,
            FamilySpec::Dihedral(4),
            FamilySpec::Alternating(4),
        ] {
            let g = build_group(&spec, DEFAULT_ORDER_CAP).unwrap();
            let classes = g.conjugacy_classes();
            assert_eq!(classes.blocks(), conjugacy_oracle(&g).as_slice());
        }
    }

    #[test]
    fn conjugacy_class_shapes() {
        let c4 = build_group(&FamilySpec::Cyclic(4), 64).unwrap();
        assert_eq!(c4.conjugacy_classes().block_sizes(), vec![1, 1, 1, 1]);

        let s3 = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        assert_eq!(s3.conjugacy_classes().block_sizes(), vec![1, 3, 2]);

        let q8 = build_group(&FamilySpec::Quaternion8, 64).unwrap();
        assert_eq!(q8.conjugacy_classes().block_sizes(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_sizes_divide_group_order() {
        for spec in [
            FamilySpec::Symmetric(4),
            FamilySpec::Dihedral(5),
            FamilySpec::Quaternion8,
            FamilySpec::Alternating(4),
        ] {
            let g = build_group(&spec, 64).unwrap();
            for size in g.conjugacy_classes().block_sizes() {
                assert_eq!(g.order() % size, 0);
            }
        }
    }

    #[test]
    fn identity_class_is_singleton() {
        let g = build_group(&FamilySpec::Symmetric(4), 64).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(
            classes.blocks()[classes.block_of(g.identity())],
            vec![g.identity()]
        );
    }

    #[test]
    fn inner_automorphism_examples() {
        let s3 = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = GroupHomomorphism::inner_automorphism(Arc::clone(&s3), s3.identity()).unwrap();
        assert!(id.is_identity());

        let c5 = build_group(&FamilySpec::Cyclic(5), 64).unwrap();
        for s in 0..5 {
            assert!(GroupHomomorphism::inner_automorphism(Arc::clone(&c5), s)
                .unwrap()
                .is_identity());
        }

        // transpositions in lexicographic S3: indices 1, 2, 5
        let t = 1;
        let phi = GroupHomomorphism::inner_automorphism(Arc::clone(&s3), t).unwrap();
        assert!(!phi.is_identity());
        let twice = phi.compose(&phi).unwrap();
        assert!(twice.is_identity());
        // the other two transpositions are swapped
        assert_eq!(phi.apply(2), 5);
        assert_eq!(phi.apply(5), 2);
    }

    #[test]
    fn inner_automorphism_inverse_composition() {
        let q8 = build_group(&FamilySpec::Quaternion8, 64).unwrap();
        for s in 0..q8.order() {
            let fwd = GroupHomomorphism::inner_automorphism(Arc::clone(&q8), s).unwrap();
            let bwd =
                GroupHomomorphism::inner_automorphism(Arc::clone(&q8), q8.inverse(s)).unwrap();
            assert!(fwd.compose(&bwd).unwrap().is_identity());
        }
    }

    #[test]
    fn twisted_orbits_reduce_to_conjugacy_for_identity_maps() {
        for spec in [
            FamilySpec::Cyclic(6),
            FamilySpec::Symmetric(3),
            FamilySpec::Dihedral(4),
            FamilySpec::Quaternion8,
        ] {
            let g = build_group(&spec, 64).unwrap();
            let id = GroupHomomorphism::identity_on(Arc::clone(&g));
            let orbits = twisted_orbits(&g, &id, &id).unwrap();
            assert_eq!(orbits, g.conjugacy_classes());
        }
    }

    #[test]
    fn twisted_orbits_for_inner_sigma_are_class_translates() {
        let s3 = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = GroupHomomorphism::identity_on(Arc::clone(&s3));
        for s in [1usize, 2, 5] {
            let sigma = GroupHomomorphism::inner_automorphism(Arc::clone(&s3), s).unwrap();
            let orbits = twisted_orbits(&s3, &sigma, &id).unwrap();
            assert_eq!(orbits.block_count(), 3);
            // each orbit is s · C for a conjugacy class C
            let classes = s3.conjugacy_classes();
            let mut translates: Vec<Vec<usize>> = classes
                .blocks()
                .iter()
                .map(|c| {
                    let mut t: Vec<usize> = c.iter().map(|&x| s3.op(s, x)).collect();
                    t.sort_unstable();
                    t
                })
                .collect();
            translates.sort();
            let mut got = orbits.blocks().to_vec();
            got.sort();
            assert_eq!(got, translates);
        }
    }

    #[test]
    fn twisted_orbit_blocks_are_invariant_under_the_action() {
        let d4 = build_group(&FamilySpec::Dihedral(4), 64).unwrap();
        let id = GroupHomomorphism::identity_on(Arc::clone(&d4));
        for s in 0..d4.order() {
            let sigma = GroupHomomorphism::inner_automorphism(Arc::clone(&d4), s).unwrap();
            let orbits = twisted_orbits(&d4, &sigma, &id).unwrap();
            for x in 0..d4.order() {
                for h in 0..d4.order() {
                    let img = d4.op(d4.op(d4.inverse(sigma.apply(h)), x), id.apply(h));
                    assert_eq!(orbits.block_of(x), orbits.block_of(img));
                }
            }
        }
    }

    #[test]
    fn homomorphism_validation() {
        let c4 = build_group(&FamilySpec::Cyclic(4), 64).unwrap();
        // g -> g^2 is an endomorphism of C4
        let sq = GroupHomomorphism::new(
            Arc::clone(&c4),
            Arc::clone(&c4),
            (0..4).map(|i| (2 * i) % 4).collect(),
        )
        .unwrap();
        assert!(!sq.is_bijective());

        // g -> g^3 is an automorphism
        let cube = GroupHomomorphism::new(
            Arc::clone(&c4),
            Arc::clone(&c4),
            (0..4).map(|i| (3 * i) % 4).collect(),
        )
        .unwrap();
        assert!(cube.is_bijective());

        // shifting images off the identity is rejected
        assert_eq!(
            GroupHomomorphism::new(Arc::clone(&c4), Arc::clone(&c4), vec![1, 2, 3, 0]),
            Err(GroupError::IdentityNotFixed)
        );
        // non-multiplicative images are rejected
        assert!(matches!(
            GroupHomomorphism::new(Arc::clone(&c4), Arc::clone(&c4), vec![0, 1, 1, 1]),
            Err(GroupError::NotHomomorphism { .. })
        ));
    }
}
