//! The named test catalog shared by the selftest command and the
//! acceptance suite, plus small deterministic helpers for seeding and
//! prime selection.

use std::sync::Arc;

use crate::families::{build_group, FamilySpec};
use crate::group::{FiniteGroup, GroupHomomorphism};

/// Catalog of groups exercised by the acceptance criteria.
pub const CATALOG_NAMES: [&str; 13] = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D4", "D5", "Q8", "A4", "S4",
];

pub fn catalog_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    CATALOG_NAMES
        .iter()
        .map(|name| {
            let spec = FamilySpec::parse(name).expect("catalog names parse");
            let group = build_group(&spec, 64).expect("catalog groups fit the cap");
            (name.to_string(), group)
        })
        .collect()
}

/// The distinct inner automorphisms of a group (the identity is the
/// conjugation by e), ordered by the least conjugating element.
pub fn distinct_inner_automorphisms(group: &Arc<FiniteGroup>) -> Vec<GroupHomomorphism> {
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for s in 0..group.order() {
        let hom = GroupHomomorphism::inner_automorphism(Arc::clone(group), s)
            .expect("element index in range");
        if !seen.contains(&hom.images().to_vec()) {
            seen.push(hom.images().to_vec());
            out.push(hom);
        }
    }
    out
}

/// The two smallest primes that do not divide n.
pub fn two_smallest_primes_not_dividing(n: usize) -> [u32; 2] {
    let mut found = Vec::with_capacity(2);
    let mut p = 2u32;
    while found.len() < 2 {
        if is_small_prime(p) && !n.is_multiple_of(p as usize) {
            found.push(p);
        }
        p += 1;
    }
    [found[0], found[1]]
}

fn is_small_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    (2..p)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

/// Mix a base seed with context tags into a per-case seed, stable across
/// platforms and iteration order.
pub fn stable_seed(base: u64, tags: &[u64]) -> u64 {
    let mut h = base ^ 0x9e37_79b9_7f4a_7c15;
    for &t in tags {
        h ^= t
            .wrapping_add(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(h << 6)
            .wrapping_add(h >> 2);
        h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 27;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds() {
        let groups = catalog_groups();
        assert_eq!(groups.len(), 13);
        let orders: Vec<usize> = groups.iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![2, 3, 4, 5, 6, 7, 8, 6, 8, 10, 8, 12, 24]);
    }

    #[test]
    fn inner_automorphism_counts_match_center_indices() {
        for (name, expected) in [
            ("C8", 1usize),
            ("S3", 6),
            ("D4", 4),
            ("D5", 10),
            ("Q8", 4),
            ("A4", 12),
            ("S4", 24),
        ] {
            let g = build_group(&FamilySpec::parse(name).unwrap(), 64).unwrap();
            assert_eq!(distinct_inner_automorphisms(&g).len(), expected, "{name}");
        }
    }

    #[test]
    fn prime_selection() {
        assert_eq!(two_smallest_primes_not_dividing(2), [3, 5]);
        assert_eq!(two_smallest_primes_not_dividing(6), [5, 7]);
        assert_eq!(two_smallest_primes_not_dividing(8), [3, 5]);
        assert_eq!(two_smallest_primes_not_dividing(10), [3, 7]);
        assert_eq!(two_smallest_primes_not_dividing(12), [5, 7]);
        assert_eq!(two_smallest_primes_not_dividing(24), [5, 7]);
    }

    #[test]
    fn stable_seed_is_order_sensitive_and_deterministic() {
        assert_eq!(stable_seed(7, &[1, 2]), stable_seed(7, &[1, 2]));
        assert_ne!(stable_seed(7, &[1, 2]), stable_seed(7, &[2, 1]));
        assert_ne!(stable_seed(7, &[1, 2]), stable_seed(8, &[1, 2]));
    }
}
