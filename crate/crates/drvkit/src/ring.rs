//! Arithmetic in the group ring RG: elements as dense coefficient
//! vectors, algebra endomorphisms, the class-sum basis of the center,
//! and the twisted-centrality test x·τ(a) = σ(a)·x.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupHomomorphism, Partition};
use crate::scalar::{CoefficientRing, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements live over different groups")]
    GroupMismatch,
    #[error("elements live over different coefficient rings")]
    RingMismatch,
    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientCount { got: usize, expected: usize },
    #[error("invalid endomorphism: {0}")]
    InvalidEndomorphism(EndoValidation),
    #[error("operation requires endomorphisms lifted from group homomorphisms")]
    NotLiftedHom,
    #[error("operation requires a field coefficient ring, got {0}")]
    NotAField(CoefficientRing),
}

/// An element Σ x_g·g of RG, densely indexed by group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    ring: CoefficientRing,
    coeffs: Vec<Scalar>,
}

impl GroupRingElement {
    pub fn zero(group: Arc<FiniteGroup>, ring: CoefficientRing) -> GroupRingElement {
        let coeffs = vec![Scalar::zero(ring); group.order()];
        GroupRingElement {
            group,
            ring,
            coeffs,
        }
    }

    pub fn one(group: Arc<FiniteGroup>, ring: CoefficientRing) -> GroupRingElement {
        let e = group.identity();
        GroupRingElement::basis(group, ring, e)
    }

    /// The basis element 1·g.
    pub fn basis(group: Arc<FiniteGroup>, ring: CoefficientRing, g: usize) -> GroupRingElement {
        let mut coeffs = vec![Scalar::zero(ring); group.order()];
        coeffs[g] = Scalar::one(ring);
        GroupRingElement {
            group,
            ring,
            coeffs,
        }
    }

    pub fn from_coeffs(
        group: Arc<FiniteGroup>,
        ring: CoefficientRing,
        coeffs: Vec<Scalar>,
    ) -> Result<GroupRingElement, AlgebraError> {
        if coeffs.len() != group.order() {
            return Err(AlgebraError::CoefficientCount {
                got: coeffs.len(),
                expected: group.order(),
            });
        }
        if coeffs.iter().any(|c| !c.matches_ring(ring)) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(GroupRingElement {
            group,
            ring,
            coeffs,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &Scalar {
        &self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Indices g with x_g != 0.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&g| !self.coeffs[g].is_zero())
            .collect()
    }

    /// All coefficients integral (trivially true over F_p).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_integral)
    }

    /// Same element over another rational-backed ring tag (ℚ or ℤ).
    pub fn retagged(&self, ring: CoefficientRing) -> GroupRingElement {
        assert!(
            !matches!(self.ring, CoefficientRing::ModP(_))
                && !matches!(ring, CoefficientRing::ModP(_)),
            "retagging is only meaningful between Q and Z"
        );
        GroupRingElement {
            group: Arc::clone(&self.group),
            ring,
            coeffs: self.coeffs.clone(),
        }
    }

    fn check_compatible(&self, other: &GroupRingElement) -> Result<(), AlgebraError> {
        if !Arc::ptr_eq(&self.group, &other.group) && self.group != other.group {
            return Err(AlgebraError::GroupMismatch);
        }
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(GroupRingElement {
            group: Arc::clone(&self.group),
            ring: self.ring,
            coeffs,
        })
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            group: Arc::clone(&self.group),
            ring: self.ring,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> GroupRingElement {
        debug_assert!(s.matches_ring(self.ring));
        GroupRingElement {
            group: Arc::clone(&self.group),
            ring: self.ring,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { c.mul(s) })
                .collect(),
        }
    }

    /// Convolution product through the Cayley table:
    /// (ab)_k = Σ_{i·j = k} a_i·b_j.
    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.check_compatible(other)?;
        let g = self.group.as_ref();
        let mut coeffs = vec![Scalar::zero(self.ring); g.order()];
        for i in 0..g.order() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..g.order() {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let k = g.op(i, j);
                coeffs[k] = coeffs[k].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(GroupRingElement {
            group: Arc::clone(&self.group),
            ring: self.ring,
            coeffs,
        })
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .iter()
            .map(|&g| format!("{}*{}", self.coeffs[g], self.group.label(g)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// One indicator sum Σ_{y ~ x} y per conjugacy class, ordered by least
/// class representative. These span the center of RG.
pub fn class_sum_center_basis(
    group: &Arc<FiniteGroup>,
    ring: CoefficientRing,
) -> Vec<GroupRingElement> {
    indicator_basis(group, ring, &group.conjugacy_classes())
}

/// Indicator sums of an arbitrary partition of the group elements.
pub fn indicator_basis(
    group: &Arc<FiniteGroup>,
    ring: CoefficientRing,
    partition: &Partition,
) -> Vec<GroupRingElement> {
    partition
        .blocks()
        .iter()
        .map(|block| {
            let mut coeffs = vec![Scalar::zero(ring); group.order()];
            for &g in block {
                coeffs[g] = Scalar::one(ring);
            }
            GroupRingElement {
                group: Arc::clone(group),
                ring,
                coeffs,
            }
        })
        .collect()
}

/// One violated endomorphism condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoViolation {
    IdentityImage,
    NotMultiplicative { g: usize, h: usize },
}

impl fmt::Display for EndoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoViolation::IdentityImage => write!(f, "image of the identity is not 1"),
            EndoViolation::NotMultiplicative { g, h } => {
                write!(f, "image({g})·image({h}) differs from image({g}·{h})")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EndoValidation {
    pub violations: Vec<EndoViolation>,
}

impl EndoValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for EndoValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// Verdict on candidate images g ↦ image(g): valid iff image(e) = 1 and
/// image(g)·image(h) = image(g·h) for every pair.
pub fn validate_endomorphism(images: &[GroupRingElement]) -> EndoValidation {
    const MAX_REPORTED: usize = 8;
    let mut verdict = EndoValidation::default();
    let Some(first) = images.first() else {
        verdict.violations.push(EndoViolation::IdentityImage);
        return verdict;
    };
    let group = Arc::clone(first.group());
    let ring = first.ring();
    let one = GroupRingElement::one(Arc::clone(&group), ring);
    if images[group.identity()] != one {
        verdict.violations.push(EndoViolation::IdentityImage);
    }
    'pairs: for g in 0..group.order() {
        for h in 0..group.order() {
            let lhs = images[g]
                .mul(&images[h])
                .expect("images share group and ring");
            if lhs != images[group.op(g, h)] {
                verdict
                    .violations
                    .push(EndoViolation::NotMultiplicative { g, h });
                if verdict.violations.len() >= MAX_REPORTED {
                    break 'pairs;
                }
            }
        }
    }
    verdict
}

/// An algebra endomorphism of RG given by dense images of the group
/// basis. Lifts of group homomorphisms keep the underlying map around,
/// which unlocks the orbit-based shortcuts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEndomorphism {
    group: Arc<FiniteGroup>,
    ring: CoefficientRing,
    images: Vec<GroupRingElement>,
    hom: Option<GroupHomomorphism>,
}

impl AlgebraEndomorphism {
    /// σ'(Σ r_g·g) = Σ r_g·σ(g): the linear lift of a group endomorphism.
    pub fn lift_group_hom(
        hom: &GroupHomomorphism,
        ring: CoefficientRing,
    ) -> Result<AlgebraEndomorphism, AlgebraError> {
        if !hom.is_endomorphism() {
            return Err(AlgebraError::GroupMismatch);
        }
        let group = Arc::clone(hom.source());
        let images = (0..group.order())
            .map(|g| GroupRingElement::basis(Arc::clone(&group), ring, hom.apply(g)))
            .collect();
        Ok(AlgebraEndomorphism {
            group,
            ring,
            images,
            hom: Some(hom.clone()),
        })
    }

    pub fn identity(group: Arc<FiniteGroup>, ring: CoefficientRing) -> AlgebraEndomorphism {
        let hom = GroupHomomorphism::identity_on(Arc::clone(&group));
        AlgebraEndomorphism::lift_group_hom(&hom, ring).expect("identity lifts")
    }

    /// Construct from arbitrary images, rejecting non-multiplicative data.
    pub fn from_images(images: Vec<GroupRingElement>) -> Result<AlgebraEndomorphism, AlgebraError> {
        let Some(first) = images.first() else {
            return Err(AlgebraError::CoefficientCount {
                got: 0,
                expected: 1,
            });
        };
        let group = Arc::clone(first.group());
        let ring = first.ring();
        if images.len() != group.order() {
            return Err(AlgebraError::CoefficientCount {
                got: images.len(),
                expected: group.order(),
            });
        }
        for img in &images {
            first.check_compatible(img)?;
        }
        let verdict = validate_endomorphism(&images);
        if !verdict.is_valid() {
            return Err(AlgebraError::InvalidEndomorphism(verdict));
        }
        // Recognize one-hot unit images as a group-hom lift so the orbit
        // shortcuts apply to hand-written data too.
        let as_hom: Option<Vec<usize>> = images
            .iter()
            .map(|img| {
                let sup = img.support();
                match sup.as_slice() {
                    [g] if img.coeff(*g).is_one() => Some(*g),
                    _ => None,
                }
            })
            .collect();
        let hom = as_hom.and_then(|imgs| {
            GroupHomomorphism::new(Arc::clone(&group), Arc::clone(&group), imgs).ok()
        });
        Ok(AlgebraEndomorphism {
            group,
            ring,
            images,
            hom,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn images(&self) -> &[GroupRingElement] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &GroupRingElement {
        &self.images[g]
    }

    /// The underlying group endomorphism when this is a lift.
    pub fn group_hom(&self) -> Option<&GroupHomomorphism> {
        self.hom.as_ref()
    }

    pub fn is_lifted(&self) -> bool {
        self.hom.is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.hom
            .as_ref()
            .is_some_and(GroupHomomorphism::is_identity)
    }

    /// Same lift over another rational-backed ring tag.
    pub fn retagged(&self, ring: CoefficientRing) -> Result<AlgebraEndomorphism, AlgebraError> {
        match &self.hom {
            Some(h) => AlgebraEndomorphism::lift_group_hom(h, ring),
            None => {
                let images = self.images.iter().map(|img| img.retagged(ring)).collect();
                Ok(AlgebraEndomorphism {
                    group: Arc::clone(&self.group),
                    ring,
                    images,
                    hom: None,
                })
            }
        }
    }

    /// Apply to an arbitrary element by linearity.
    pub fn apply(&self, x: &GroupRingElement) -> Result<GroupRingElement, AlgebraError> {
        self.images[self.group.identity()].check_compatible(x)?;
        let mut acc = GroupRingElement::zero(Arc::clone(&self.group), self.ring);
        for g in x.support() {
            acc = acc.add(&self.images[g].scale(x.coeff(g)))?;
        }
        Ok(acc)
    }

    /// Bijectivity of the induced linear map: a permutation check for
    /// lifts, a full-rank check over the field otherwise.
    pub fn is_bijective(&self) -> bool {
        if let Some(h) = &self.hom {
            return h.is_bijective();
        }
        let n = self.group.order();
        let ring = self.ring.solve_field();
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|k| (0..n).map(|g| self.images[g].coeff(k).clone()).collect())
            .collect();
        match crate::matrix::Matrix::from_rows(ring, &rows) {
            Ok(m) => m.rank() == n,
            Err(_) => false,
        }
    }

    /// Does this endomorphism fix every class sum (hence the center)?
    pub fn fixes_center(&self) -> bool {
        class_sum_center_basis(&self.group, self.ring)
            .iter()
            .all(|c| self.apply(c).map(|img| img == *c).unwrap_or(false))
    }
}

/// Twisted centrality: x·τ(h) = σ(h)·x for every group element h, which
/// extends to all of RG by linearity. When both endomorphisms are lifts
/// this is decided by coefficient constancy on the twisted orbits;
/// otherwise by the direct element-wise check.
pub fn is_twisted_central(
    x: &GroupRingElement,
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<bool, AlgebraError> {
    check_context(x, sigma, tau)?;
    match (sigma.group_hom(), tau.group_hom()) {
        (Some(sh), Some(th)) => {
            let orbits = crate::group::twisted_orbits(x.group(), sh, th)
                .map_err(|_| AlgebraError::GroupMismatch)?;
            Ok(orbits
                .blocks()
                .iter()
                .all(|block| block.iter().all(|&g| x.coeff(g) == x.coeff(block[0]))))
        }
        _ => is_twisted_central_direct(x, sigma, tau),
    }
}

/// The definitional check, one equation per group element; kept as an
/// independent route for cross-validation against the orbit shortcut.
pub fn is_twisted_central_direct(
    x: &GroupRingElement,
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<bool, AlgebraError> {
    check_context(x, sigma, tau)?;
    for h in 0..x.group().order() {
        let lhs = x.mul(tau.image(h))?;
        let rhs = sigma.image(h).mul(x)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_context(
    x: &GroupRingElement,
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<(), AlgebraError> {
    x.check_compatible(sigma.image(x.group().identity()))?;
    x.check_compatible(tau.image(x.group().identity()))?;
    Ok(())
}
