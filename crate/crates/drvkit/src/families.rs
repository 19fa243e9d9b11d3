//! Small-group catalog: cyclic, dihedral, symmetric, alternating,
//! quaternion and direct-product families, each with a documented
//! canonical element order so table indices (and therefore every report)
//! are stable.
//!
//! Canonical orderings:
//! - cyclic(n): g^0, g^1, ..., g^(n-1)
//! - dihedral(n): r^0..r^(n-1), then r^0·s..r^(n-1)·s, with s·r·s = r⁻¹
//! - symmetric(n): permutations in lexicographic one-line order,
//!   composed as (p·q)(x) = p(q(x))
//! - alternating(n): even permutations in the same lexicographic order
//! - quaternion8: 1, -1, i, -i, j, -j, k, -k
//! - direct products: mixed-radix index over the factors, leftmost factor
//!   most significant

use std::fmt;
use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError};

/// Descriptor of a constructible group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Vec<FamilySpec>),
    Raw(Vec<Vec<usize>>),
}

impl FamilySpec {
    /// Parse a canonical family name: C<n>, D<n>, S<n>, A<n>, Q8, and
    /// products joined by "x" such as "C2xC4".
    pub fn parse(name: &str) -> Result<FamilySpec, GroupError> {
        let name = name.trim();
        if name.is_empty() {
            return Err(GroupError::UnknownFamily(name.to_string()));
        }
        let parts: Vec<&str> = name.split('x').collect();
        if parts.len() > 1 {
            let specs = parts
                .iter()
                .map(|p| FamilySpec::parse(p))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(FamilySpec::DirectProduct(specs));
        }
        let parse_n = |digits: &str| -> Result<usize, GroupError> {
            digits
                .parse()
                .map_err(|_| GroupError::UnknownFamily(name.to_string()))
        };
        if name == "Q8" {
            return Ok(FamilySpec::Quaternion8);
        }
        match name.split_at(1) {
            ("C", digits) => Ok(FamilySpec::Cyclic(parse_n(digits)?)),
            ("D", digits) => Ok(FamilySpec::Dihedral(parse_n(digits)?)),
            ("S", digits) => Ok(FamilySpec::Symmetric(parse_n(digits)?)),
            ("A", digits) => Ok(FamilySpec::Alternating(parse_n(digits)?)),
            _ => Err(GroupError::UnknownFamily(name.to_string())),
        }
    }

    /// Group order, computed without building the table (products of
    /// large factors are rejected by the cap before any allocation).
    pub fn order(&self) -> Result<usize, GroupError> {
        match self {
            FamilySpec::Cyclic(n) => {
                require(*n >= 1, "cyclic requires n >= 1")?;
                Ok(*n)
            }
            FamilySpec::Dihedral(n) => {
                require(*n >= 3, "dihedral requires n >= 3")?;
                Ok(2 * n)
            }
            FamilySpec::Symmetric(n) => {
                require((1..=5).contains(n), "symmetric requires 1 <= n <= 5")?;
                Ok(factorial(*n))
            }
            FamilySpec::Alternating(n) => {
                require((1..=5).contains(n), "alternating requires 1 <= n <= 5")?;
                Ok(factorial(*n).div_ceil(2))
            }
            FamilySpec::Quaternion8 => Ok(8),
            FamilySpec::DirectProduct(parts) => {
                require(
                    !parts.is_empty(),
                    "direct product requires at least one factor",
                )?;
                let mut order = 1usize;
                for p in parts {
                    order = order.checked_mul(p.order()?).ok_or_else(|| {
                        GroupError::BadFamilyParameter("product overflows".into())
                    })?;
                }
                Ok(order)
            }
            FamilySpec::Raw(table) => Ok(table.len()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "C{n}"),
            FamilySpec::Dihedral(n) => write!(f, "D{n}"),
            FamilySpec::Symmetric(n) => write!(f, "S{n}"),
            FamilySpec::Alternating(n) => write!(f, "A{n}"),
            FamilySpec::Quaternion8 => write!(f, "Q8"),
            FamilySpec::DirectProduct(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join("x"))
            }
            FamilySpec::Raw(_) => write!(f, "raw"),
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), GroupError> {
    if cond {
        Ok(())
    } else {
        Err(GroupError::BadFamilyParameter(msg.to_string()))
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Build a group from a family descriptor, enforcing the order cap.
pub fn build_group(spec: &FamilySpec, cap: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    let order = spec.order()?;
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    match spec {
        FamilySpec::Cyclic(n) => cyclic(*n),
        FamilySpec::Dihedral(n) => dihedral(*n),
        FamilySpec::Symmetric(n) => permutation_group(*n, false),
        FamilySpec::Alternating(n) => permutation_group(*n, true),
        FamilySpec::Quaternion8 => quaternion8(),
        FamilySpec::DirectProduct(parts) => {
            let built = parts
                .iter()
                .map(|p| build_group(p, cap))
                .collect::<Result<Vec<_>, _>>()?;
            direct_product(&built)
        }
        FamilySpec::Raw(table) => FiniteGroup::from_table(table.clone()),
    }
}

fn cyclic(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteGroup::from_table_with_labels(table, Some(labels))
}

fn dihedral(n: usize) -> Result<Arc<FiniteGroup>, GroupError> {
    let order = 2 * n;
    // index i < n: r^i; index n + i: r^i s, where s r^b = r^(-b) s
    let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..n {
        for b in 0..n {
            table[idx(a, false)][idx(b, false)] = idx((a + b) % n, false);
            table[idx(a, false)][idx(b, true)] = idx((a + b) % n, true);
            table[idx(a, true)][idx(b, false)] = idx((a + n - b) % n, true);
            table[idx(a, true)][idx(b, true)] = idx((a + n - b) % n, false);
        }
    }
    let labels = (0..order)
        .map(|i| {
            let (rot, refl) = if i < n { (i, false) } else { (i - n, true) };
            match (rot, refl) {
                (0, false) => "e".to_string(),
                (1, false) => "r".to_string(),
                (r, false) => format!("r^{r}"),
                (0, true) => "s".to_string(),
                (1, true) => "r*s".to_string(),
                (r, true) => format!("r^{r}*s"),
            }
        })
        .collect();
    FiniteGroup::from_table_with_labels(table, Some(labels))
}

fn quaternion8() -> Result<Arc<FiniteGroup>, GroupError> {
    // elements (unit, sign): 1, -1, i, -i, j, -j, k, -k with units 1,i,j,k
    // encoded 0..3; index = 2*unit + sign
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) => (0, true),
            (2, 2) => (0, true),
            (3, 3) => (0, true),
            (1, 2) => (3, false), // i j = k
            (2, 1) => (3, true),  // j i = -k
            (2, 3) => (1, false), // j k = i
            (3, 2) => (1, true),  // k j = -i
            (3, 1) => (2, false), // k i = j
            (1, 3) => (2, true),  // i k = -j
            _ => unreachable!(),
        }
    };
    let order = 8;
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..order {
        for b in 0..order {
            let (ua, sa) = (a / 2, a % 2 == 1);
            let (ub, sb) = (b / 2, b % 2 == 1);
            let (u, flip) = unit_mul(ua, ub);
            let sign = sa ^ sb ^ flip;
            table[a][b] = 2 * u + usize::from(sign);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table_with_labels(table, Some(labels))
}

/// S_n or A_n on points 0..n-1 in lexicographic one-line order.
fn permutation_group(n: usize, even_only: bool) -> Result<Arc<FiniteGroup>, GroupError> {
    let perms: Vec<Vec<u8>> = lexicographic_permutations(n)
        .into_iter()
        .filter(|p| !even_only || permutation_is_even(p))
        .collect();
    let index_of = |p: &[u8]| -> usize {
        perms
            .binary_search_by(|q| q.as_slice().cmp(p))
            .expect("product of kept permutations is kept")
    };
    let order = perms.len();
    let mut table = vec![vec![0usize; order]; order];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            // (p·q)(x) = p(q(x))
            let composed: Vec<u8> = (0..n).map(|x| p[q[x] as usize]).collect();
            table[a][b] = index_of(&composed);
        }
    }
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    FiniteGroup::from_table_with_labels(table, Some(labels))
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v as u8);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn permutation_is_even(p: &[u8]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

fn direct_product(parts: &[Arc<FiniteGroup>]) -> Result<Arc<FiniteGroup>, GroupError> {
    let order: usize = parts.iter().map(|g| g.order()).product();
    let strides: Vec<usize> = {
        let mut s = vec![1usize; parts.len()];
        for i in (0..parts.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * parts[i + 1].order();
        }
        s
    };
    let decode = |mut idx: usize| -> Vec<usize> {
        strides
            .iter()
            .map(|&s| {
                let c = idx / s;
                idx %= s;
                c
            })
            .collect()
    };
    let encode =
        |coords: &[usize]| -> usize { coords.iter().zip(&strides).map(|(c, s)| c * s).sum() };
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..order {
        let ca = decode(a);
        for b in 0..order {
            let cb = decode(b);
            let prod: Vec<usize> = parts
                .iter()
                .zip(ca.iter().zip(&cb))
                .map(|(g, (&x, &y))| g.op(x, y))
                .collect();
            table[a][b] = encode(&prod);
        }
    }
    let labels = (0..order)
        .map(|i| {
            let coords = decode(i);
            let names: Vec<String> = parts
                .iter()
                .zip(&coords)
                .map(|(g, &c)| g.label(c))
                .collect();
            format!("({})", names.join(","))
        })
        .collect();
    FiniteGroup::from_table_with_labels(table, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    #[test]
    fn trivial_and_small_cyclic_tables() {
        let c1 = build_group(&FamilySpec::Cyclic(1), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.table_rows(), vec![vec![0]]);

        let c2 = build_group(&FamilySpec::Cyclic(2), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c2.table_rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn family_orders() {
        for (spec, order) in [
            (FamilySpec::Symmetric(3), 6),
            (FamilySpec::Symmetric(4), 24),
            (FamilySpec::Symmetric(5), 120),
            (FamilySpec::Alternating(4), 12),
            (FamilySpec::Alternating(5), 60),
            (FamilySpec::Dihedral(3), 6),
            (FamilySpec::Dihedral(5), 10),
            (FamilySpec::Quaternion8, 8),
        ] {
            assert_eq!(spec.order().unwrap(), order);
            if order <= DEFAULT_ORDER_CAP {
                let g = build_group(&spec, DEFAULT_ORDER_CAP).unwrap();
                assert_eq!(g.order(), order);
            }
        }
    }

    #[test]
    fn symmetric_three_class_structure() {
        let s3 = build_group(&FamilySpec::Symmetric(3), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(s3.conjugacy_classes().block_sizes(), vec![1, 3, 2]);
        // lexicographic order: 012, 021, 102, 120, 201, 210
        assert_eq!(s3.label(0), "012");
        assert_eq!(s3.label(3), "120");
    }

    #[test]
    fn alternating_four_class_structure() {
        // the two classes of 3-cycles (sizes 4, least representatives at
        // indices 1 and 2) precede the double transpositions (size 3)
        let a4 = build_group(&FamilySpec::Alternating(4), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.conjugacy_classes().block_sizes(), vec![1, 4, 4, 3]);
    }

    #[test]
    fn dihedral_relations_hold() {
        let n = 5;
        let d5 = build_group(&FamilySpec::Dihedral(n), DEFAULT_ORDER_CAP).unwrap();
        let r = 1;
        let s = n;
        // s r s = r^{-1}
        assert_eq!(d5.op(d5.op(s, r), s), d5.inverse(r));
        assert_eq!(d5.conjugacy_classes().block_sizes(), vec![1, 2, 2, 5]);
    }

    #[test]
    fn quaternion_relations_hold() {
        let q8 = build_group(&FamilySpec::Quaternion8, DEFAULT_ORDER_CAP).unwrap();
        let (minus_one, i, j, k) = (1, 2, 4, 6);
        assert_eq!(q8.op(i, i), minus_one);
        assert_eq!(q8.op(j, j), minus_one);
        assert_eq!(q8.op(k, k), minus_one);
        assert_eq!(q8.op(i, j), k);
        assert_eq!(q8.op(j, i), q8.op(minus_one, k));
    }

    #[test]
    fn direct_product_of_cyclics() {
        let spec = FamilySpec::parse("C2xC4").unwrap();
        let g = build_group(&spec, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.label(0), "(e,e)");
        assert_eq!(g.label(5), "(g,g)");
    }

    #[test]
    fn parse_family_names() {
        assert_eq!(FamilySpec::parse("C8").unwrap(), FamilySpec::Cyclic(8));
        assert_eq!(FamilySpec::parse("Q8").unwrap(), FamilySpec::Quaternion8);
        assert_eq!(FamilySpec::parse("S4").unwrap(), FamilySpec::Symmetric(4));
        assert_eq!(
            FamilySpec::parse("C2xC2xC2").unwrap(),
            FamilySpec::DirectProduct(vec![
                FamilySpec::Cyclic(2),
                FamilySpec::Cyclic(2),
                FamilySpec::Cyclic(2)
            ])
        );
        assert!(FamilySpec::parse("").is_err());
        assert!(FamilySpec::parse("Z5").is_err());
        assert!(FamilySpec::parse("Cfive").is_err());
    }

    #[test]
    fn order_cap_is_enforced() {
        assert_eq!(
            build_group(&FamilySpec::Symmetric(5), DEFAULT_ORDER_CAP),
            Err(GroupError::OrderCapExceeded {
                order: 120,
                cap: DEFAULT_ORDER_CAP
            })
        );
        assert!(build_group(&FamilySpec::Symmetric(5), 120).is_ok());
        // the product order is rejected before any table is built
        let huge = FamilySpec::parse("S5xS5xS5xS5").unwrap();
        assert_eq!(
            build_group(&huge, DEFAULT_ORDER_CAP),
            Err(GroupError::OrderCapExceeded {
                order: 207_360_000,
                cap: DEFAULT_ORDER_CAP
            })
        );
    }

    #[test]
    fn family_parameter_bounds() {
        assert!(matches!(
            build_group(&FamilySpec::Cyclic(0), 64),
            Err(GroupError::BadFamilyParameter(_))
        ));
        assert!(matches!(
            build_group(&FamilySpec::Dihedral(2), 64),
            Err(GroupError::BadFamilyParameter(_))
        ));
        assert!(matches!(
            build_group(&FamilySpec::Symmetric(6), 1000),
            Err(GroupError::BadFamilyParameter(_))
        ));
    }

    #[test]
    fn raw_tables_are_validated() {
        let good = FamilySpec::Raw(vec![vec![0, 1], vec![1, 0]]);
        assert!(build_group(&good, 64).is_ok());
        let bad = FamilySpec::Raw(vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(
            build_group(&bad, 64),
            Err(GroupError::InvalidTable(_))
        ));
    }
}
