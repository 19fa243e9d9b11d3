//! Twisted derivations of RG: cocycle validation, linear extension,
//! inner derivations and their witnesses, twisted centralizers, and the
//! brute-force enumeration of the full derivation space.
//!
//! A (σ,τ)-derivation is determined by its values on the group basis via
//! δ(gh) = δ(g)·τ(h) + σ(g)·δ(h); a table satisfying that law on all
//! pairs extends linearly to the whole ring, so certification is a
//! finite check.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{twisted_orbits, FiniteGroup, Partition};
use crate::matrix::Matrix;
use crate::ring::{
    check_context, indicator_basis, is_twisted_central, AlgebraEndomorphism, AlgebraError,
    GroupRingElement,
};
use crate::scalar::{CoefficientRing, Scalar};

/// Default cap on |G| for full derivation-space enumeration (the system
/// has |G|² unknowns).
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DerivationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("value table has {got} entries, expected {expected}")]
    ValueCount { got: usize, expected: usize },
    #[error("derivation table is not certified; run certify() first")]
    Uncertified,
    #[error("cocycle law fails: {0}")]
    Cocycle(CocycleValidation),
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { order: usize, cap: usize },
    #[error("element is not central")]
    NotCentral,
    #[error("power must be positive")]
    ZeroPower,
}

/// One failed instance of the cocycle law, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub g: usize,
    pub h: usize,
    pub lhs: GroupRingElement,
    pub rhs: GroupRingElement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CocycleValidation {
    pub violations: Vec<CocycleViolation>,
    pub identity_value_nonzero: bool,
}

impl CocycleValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && !self.identity_value_nonzero
    }
}

impl fmt::Display for CocycleValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        if self.identity_value_nonzero {
            write!(f, "value at the identity is nonzero")?;
            if !self.violations.is_empty() {
                write!(f, "; ")?;
            }
        }
        let msgs: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("pair ({}, {}): lhs {} vs rhs {}", v.g, v.h, v.lhs, v.rhs))
            .collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// Check δ(gh) = δ(g)·τ(h) + σ(g)·δ(h) on every pair, plus δ(e) = 0.
pub fn validate_cocycle(
    values: &[GroupRingElement],
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<CocycleValidation, DerivationError> {
    const MAX_REPORTED: usize = 8;
    let group = Arc::clone(sigma.group());
    if values.len() != group.order() {
        return Err(DerivationError::ValueCount {
            got: values.len(),
            expected: group.order(),
        });
    }
    for v in values {
        check_context(v, sigma, tau)?;
    }
    let mut verdict = CocycleValidation {
        identity_value_nonzero: !values[group.identity()].is_zero(),
        ..Default::default()
    };
    'pairs: for g in 0..group.order() {
        for h in 0..group.order() {
            let lhs = values[group.op(g, h)].clone();
            let rhs = values[g]
                .mul(tau.image(h))?
                .add(&sigma.image(g).mul(&values[h])?)?;
            if lhs != rhs {
                verdict.violations.push(CocycleViolation { g, h, lhs, rhs });
                if verdict.violations.len() >= MAX_REPORTED {
                    break 'pairs;
                }
            }
        }
    }
    Ok(verdict)
}

/// The table g ↦ δ(g) of a candidate (σ,τ)-derivation. A table is
/// certified once the cocycle law has been verified (or is guaranteed by
/// construction, as for inner derivations); only certified tables may be
/// applied to ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTable {
    sigma: AlgebraEndomorphism,
    tau: AlgebraEndomorphism,
    values: Vec<GroupRingElement>,
    certified: bool,
}

impl DerivationTable {
    /// Build an uncertified table after shape and context checks.
    pub fn new(
        sigma: AlgebraEndomorphism,
        tau: AlgebraEndomorphism,
        values: Vec<GroupRingElement>,
    ) -> Result<DerivationTable, DerivationError> {
        let group = sigma.group();
        if values.len() != group.order() {
            return Err(DerivationError::ValueCount {
                got: values.len(),
                expected: group.order(),
            });
        }
        for v in &values {
            check_context(v, &sigma, &tau)?;
        }
        Ok(DerivationTable {
            sigma,
            tau,
            values,
            certified: false,
        })
    }

    /// Verify the cocycle law and mark the table certified.
    pub fn certify(mut self) -> Result<DerivationTable, DerivationError> {
        let verdict = validate_cocycle(&self.values, &self.sigma, &self.tau)?;
        if !verdict.is_valid() {
            return Err(DerivationError::Cocycle(verdict));
        }
        self.certified = true;
        Ok(self)
    }

    pub(crate) fn certified_unchecked(
        sigma: AlgebraEndomorphism,
        tau: AlgebraEndomorphism,
        values: Vec<GroupRingElement>,
    ) -> DerivationTable {
        DerivationTable {
            sigma,
            tau,
            values,
            certified: true,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.sigma.group()
    }

    pub fn ring(&self) -> CoefficientRing {
        self.sigma.ring()
    }

    pub fn sigma(&self) -> &AlgebraEndomorphism {
        &self.sigma
    }

    pub fn tau(&self) -> &AlgebraEndomorphism {
        &self.tau
    }

    pub fn values(&self) -> &[GroupRingElement] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &GroupRingElement {
        &self.values[g]
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(GroupRingElement::is_zero)
    }

    /// All values in ℤG.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(GroupRingElement::is_integral)
    }

    /// Pointwise sum; certification is preserved because the derivations
    /// form a module over the coefficient ring.
    pub fn add(&self, other: &DerivationTable) -> Result<DerivationTable, DerivationError> {
        if self.sigma != other.sigma || self.tau != other.tau {
            return Err(DerivationError::Algebra(AlgebraError::GroupMismatch));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DerivationTable {
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            values,
            certified: self.certified && other.certified,
        })
    }

    pub fn scale(&self, s: &Scalar) -> DerivationTable {
        DerivationTable {
            sigma: self.sigma.clone(),
            tau: self.tau.clone(),
            values: self.values.iter().map(|v| v.scale(s)).collect(),
            certified: self.certified,
        }
    }

    /// Same table over another rational-backed ring tag.
    pub fn retagged(&self, ring: CoefficientRing) -> Result<DerivationTable, DerivationError> {
        Ok(DerivationTable {
            sigma: self.sigma.retagged(ring)?,
            tau: self.tau.retagged(ring)?,
            values: self.values.iter().map(|v| v.retagged(ring)).collect(),
            certified: self.certified,
        })
    }
}

/// The linear extension Δ(Σ r_g·g) = Σ r_g·δ(g); by the cocycle law this
/// satisfies the twisted Leibniz identity on all of RG.
pub fn apply_derivation(
    table: &DerivationTable,
    a: &GroupRingElement,
) -> Result<GroupRingElement, DerivationError> {
    if !table.is_certified() {
        return Err(DerivationError::Uncertified);
    }
    check_context(a, &table.sigma, &table.tau)?;
    let mut acc = GroupRingElement::zero(Arc::clone(table.group()), table.ring());
    for g in a.support() {
        acc = acc.add(&table.values[g].scale(a.coeff(g)))?;
    }
    Ok(acc)
}

/// The inner derivation δ_x(g) = x·τ(g) − σ(g)·x. The cocycle law holds
/// identically for such tables, so the result is certified.
pub fn inner_derivation(
    x: &GroupRingElement,
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<DerivationTable, DerivationError> {
    check_context(x, sigma, tau)?;
    let values = (0..x.group().order())
        .map(|g| {
            x.mul(tau.image(g))
                .and_then(|lhs| lhs.sub(&sigma.image(g).mul(x)?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DerivationTable::certified_unchecked(
        sigma.clone(),
        tau.clone(),
        values,
    ))
}

/// Sparse linear combination of the unknowns, sorted by column with
/// nonzero coefficients.
type SparseRow = Vec<(usize, Scalar)>;

fn push_term(terms: &mut Vec<(usize, Scalar)>, col: usize, coeff: Scalar) {
    if !coeff.is_zero() {
        terms.push((col, coeff));
    }
}

fn normalize_row(mut terms: Vec<(usize, Scalar)>) -> SparseRow {
    terms.sort_by_key(|&(col, _)| col);
    let mut out: SparseRow = Vec::with_capacity(terms.len());
    for (col, coeff) in terms {
        match out.last_mut() {
            Some((last_col, acc)) if *last_col == col => *acc = acc.add(&coeff),
            _ => out.push((col, coeff)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Drop duplicate (and empty) rows, keeping first occurrences in order.
fn dedup_rows<T: Ord + Clone>(rows: Vec<T>, is_empty: impl Fn(&T) -> bool) -> Vec<T> {
    let mut seen = std::collections::BTreeSet::new();
    rows.into_iter()
        .filter(|r| !is_empty(r) && seen.insert(r.clone()))
        .collect()
}

fn rows_to_matrix(
    rows: &[SparseRow],
    cols: usize,
    ring: CoefficientRing,
) -> Result<Matrix, DerivationError> {
    let mut m = Matrix::zeros(rows.len(), cols, ring)
        .map_err(|_| DerivationError::Algebra(AlgebraError::NotAField(ring)))?;
    for (i, row) in rows.iter().enumerate() {
        for (col, coeff) in row {
            m.set(i, *col, coeff.clone())
                .expect("entries share the ring");
        }
    }
    Ok(m)
}

/// Column lists of the right-multiplication operator x ↦ x·m:
/// out[k] holds (j, c) with (x·m)_k summing c·x_j.
fn right_mul_columns(group: &FiniteGroup, m: &GroupRingElement) -> Vec<Vec<(usize, Scalar)>> {
    let n = group.order();
    let mut out = vec![Vec::new(); n];
    for l in m.support() {
        let c = m.coeff(l).clone();
        for j in 0..n {
            out[group.op(j, l)].push((j, c.clone()));
        }
    }
    out
}

/// Column lists of the left-multiplication operator x ↦ m·x.
fn left_mul_columns(group: &FiniteGroup, m: &GroupRingElement) -> Vec<Vec<(usize, Scalar)>> {
    let n = group.order();
    let mut out = vec![Vec::new(); n];
    for l in m.support() {
        let c = m.coeff(l).clone();
        for j in 0..n {
            out[group.op(l, j)].push((j, c.clone()));
        }
    }
    out
}

fn require_field(ring: CoefficientRing) -> Result<CoefficientRing, DerivationError> {
    if ring.is_field() {
        Ok(ring)
    } else {
        Err(DerivationError::Algebra(AlgebraError::NotAField(ring)))
    }
}

/// Rows of the homogeneous system x·τ(g) − σ(g)·x = 0 (all g), with the
/// right-hand sides of the inhomogeneous witness problem alongside.
fn witness_rows(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
    rhs: Option<&[GroupRingElement]>,
) -> Vec<(SparseRow, Scalar)> {
    let group = sigma.group().as_ref();
    let ring = sigma.ring();
    let n = group.order();
    let mut rows = Vec::with_capacity(n * n);
    for g in 0..n {
        let right = right_mul_columns(group, tau.image(g));
        let left = left_mul_columns(group, sigma.image(g));
        for k in 0..n {
            let mut terms = Vec::new();
            for (j, c) in &right[k] {
                push_term(&mut terms, *j, c.clone());
            }
            for (j, c) in &left[k] {
                push_term(&mut terms, *j, c.neg());
            }
            let b = rhs.map_or_else(|| Scalar::zero(ring), |v| v[g].coeff(k).clone());
            rows.push((normalize_row(terms), b));
        }
    }
    rows
}

/// Basis of {x : x·τ(a) = σ(a)·x for all a}: orbit-indicator sums when
/// both endomorphisms are group-hom lifts, otherwise the nullspace of
/// the |G|²×|G| system.
pub fn twisted_centralizer_basis(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<Vec<GroupRingElement>, DerivationError> {
    match (sigma.group_hom(), tau.group_hom()) {
        (Some(sh), Some(th)) => {
            let orbits = twisted_orbits(sigma.group(), sh, th)
                .map_err(|_| DerivationError::Algebra(AlgebraError::GroupMismatch))?;
            Ok(indicator_basis(sigma.group(), sigma.ring(), &orbits))
        }
        _ => twisted_centralizer_basis_nullspace(sigma, tau),
    }
}

/// The nullspace route, kept independent of the orbit shortcut so the
/// two can be checked against each other.
pub fn twisted_centralizer_basis_nullspace(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<Vec<GroupRingElement>, DerivationError> {
    let ring = require_field(sigma.ring())?;
    let group = Arc::clone(sigma.group());
    let n = group.order();
    let rows: Vec<SparseRow> = witness_rows(sigma, tau, None)
        .into_iter()
        .map(|(row, _)| row)
        .collect();
    let rows = dedup_rows(rows, Vec::is_empty);
    let matrix = rows_to_matrix(&rows, n, ring)?;
    matrix
        .nullspace_basis()
        .into_iter()
        .map(|coeffs| {
            GroupRingElement::from_coeffs(Arc::clone(&group), ring, coeffs)
                .map_err(DerivationError::Algebra)
        })
        .collect()
}

/// dim of the inner-derivation space: |G| minus the dimension of the
/// twisted centralizer (the kernel of x ↦ δ_x).
pub fn inner_space_dimension(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<usize, DerivationError> {
    Ok(sigma.group().order() - twisted_centralizer_basis(sigma, tau)?.len())
}

/// Enumerate a basis of the full (σ,τ)-derivation space by solving the
/// homogeneous system imposed by the cocycle law on all pairs together
/// with δ(e) = 0, in |G|² unknowns. Every returned table is certified.
pub fn derivation_space_basis(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
    cap: usize,
) -> Result<Vec<DerivationTable>, DerivationError> {
    let ring = require_field(sigma.ring())?;
    let group = Arc::clone(sigma.group());
    let n = group.order();
    if n > cap {
        return Err(DerivationError::EnumerationCapExceeded { order: n, cap });
    }
    // unknown (g, k): coefficient k of values[g], at column g*n + k
    let mut rows: Vec<SparseRow> = Vec::with_capacity(n * n * n + n);
    let e = group.identity();
    for k in 0..n {
        rows.push(vec![(e * n + k, Scalar::one(ring))]);
    }
    let right: Vec<_> = (0..n)
        .map(|h| right_mul_columns(&group, tau.image(h)))
        .collect();
    let left: Vec<_> = (0..n)
        .map(|g| left_mul_columns(&group, sigma.image(g)))
        .collect();
    for g in 0..n {
        for h in 0..n {
            let gh = group.op(g, h);
            for k in 0..n {
                let mut terms = Vec::new();
                push_term(&mut terms, gh * n + k, Scalar::one(ring));
                for (j, c) in &right[h][k] {
                    push_term(&mut terms, g * n + j, c.neg());
                }
                for (j, c) in &left[g][k] {
                    push_term(&mut terms, h * n + j, c.neg());
                }
                rows.push(normalize_row(terms));
            }
        }
    }
    let rows = dedup_rows(rows, Vec::is_empty);
    let matrix = rows_to_matrix(&rows, n * n, ring)?;
    let mut basis = Vec::new();
    for vec in matrix.nullspace_basis() {
        let values = vec
            .chunks(n)
            .map(|chunk| {
                GroupRingElement::from_coeffs(Arc::clone(&group), ring, chunk.to_vec())
                    .map_err(DerivationError::Algebra)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let table = DerivationTable::new(sigma.clone(), tau.clone(), values)?.certify()?;
        basis.push(table);
    }
    Ok(basis)
}

/// Status of a witness solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Inner,
    NotInner,
}

impl fmt::Display for WitnessStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessStatus::Inner => write!(f, "inner"),
            WitnessStatus::NotInner => write!(f, "not-inner"),
        }
    }
}

/// Whether the semisimplicity-style hypotheses hold for a given context:
/// σ and τ fix the center elementwise and the coefficient characteristic
/// does not divide |G|. Bijectivity is reported but never required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub sigma_fixes_center: bool,
    pub tau_fixes_center: bool,
    pub char_divides_order: bool,
    pub sigma_bijective: bool,
    pub tau_bijective: bool,
}

impl HypothesisReport {
    pub fn evaluate(sigma: &AlgebraEndomorphism, tau: &AlgebraEndomorphism) -> HypothesisReport {
        let p = sigma.ring().characteristic();
        HypothesisReport {
            sigma_fixes_center: sigma.fixes_center(),
            tau_fixes_center: tau.fixes_center(),
            char_divides_order: p != 0 && sigma.group().order().is_multiple_of(p as usize),
            sigma_bijective: sigma.is_bijective(),
            tau_bijective: tau.is_bijective(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.sigma_fixes_center && self.tau_fixes_center && !self.char_divides_order
    }

    /// Human-readable list of violated hypotheses, empty when all hold.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.sigma_fixes_center {
            out.push("sigma does not fix the center elementwise".to_string());
        }
        if !self.tau_fixes_center {
            out.push("tau does not fix the center elementwise".to_string());
        }
        if self.char_divides_order {
            out.push("coefficient characteristic divides the group order".to_string());
        }
        out
    }
}

/// Outcome of a witness solve: the status, the canonical witness if one
/// exists, and enough context to interpret the answer. The witness is
/// unique only up to the twisted centralizer, whose dimension is always
/// reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub status: WitnessStatus,
    pub witness: Option<GroupRingElement>,
    pub centralizer_dimension: usize,
    pub derivation_dimension: Option<usize>,
    pub hypotheses: HypothesisReport,
}

/// Solve x·τ(g) − σ(g)·x = δ(g) (all g) for x. Hypothesis violations are
/// recorded in the report but never suppress the attempt.
pub fn solve_inner_witness(table: &DerivationTable) -> Result<WitnessReport, DerivationError> {
    if !table.is_certified() {
        return Err(DerivationError::Uncertified);
    }
    let ring = require_field(table.ring())?;
    let sigma = table.sigma();
    let tau = table.tau();
    let group = Arc::clone(table.group());
    let n = group.order();

    let rows = dedup_rows(
        witness_rows(sigma, tau, Some(table.values())),
        |(row, b): &(SparseRow, Scalar)| row.is_empty() && b.is_zero(),
    );
    let sparse: Vec<SparseRow> = rows.iter().map(|(r, _)| r.clone()).collect();
    let b: Vec<Scalar> = rows.iter().map(|(_, b)| b.clone()).collect();
    let matrix = rows_to_matrix(&sparse, n, ring)?;
    let solution = matrix
        .solve_particular(&b)
        .map_err(|_| DerivationError::Algebra(AlgebraError::RingMismatch))?;

    let hypotheses = HypothesisReport::evaluate(sigma, tau);
    let centralizer_dimension = twisted_centralizer_basis(sigma, tau)?.len();
    let report = match solution {
        Some(coeffs) => {
            let witness = GroupRingElement::from_coeffs(Arc::clone(&group), ring, coeffs)?;
            WitnessReport {
                status: WitnessStatus::Inner,
                witness: Some(witness),
                centralizer_dimension,
                derivation_dimension: None,
                hypotheses,
            }
        }
        None => WitnessReport {
            status: WitnessStatus::NotInner,
            witness: None,
            centralizer_dimension,
            derivation_dimension: None,
            hypotheses,
        },
    };
    Ok(report)
}

/// Multiplicativity of the block map g ↦ [[σ(g), δ(g)], [0, τ(g)]] over
/// RG, checked by literal 2×2 block products. Agrees with the cocycle
/// law because the top-right entry of Ψ(g)·Ψ(h) is σ(g)·δ(h) + δ(g)·τ(h).
pub fn triangular_embedding_check(
    values: &[GroupRingElement],
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<bool, DerivationError> {
    let group = Arc::clone(sigma.group());
    if values.len() != group.order() {
        return Err(DerivationError::ValueCount {
            got: values.len(),
            expected: group.order(),
        });
    }
    for v in values {
        check_context(v, sigma, tau)?;
    }
    if !values[group.identity()].is_zero() {
        return Ok(false);
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let gh = group.op(g, h);
            // Ψ(g)·Ψ(h) entrywise
            let top_left = sigma.image(g).mul(sigma.image(h))?;
            let top_right = sigma
                .image(g)
                .mul(&values[h])?
                .add(&values[g].mul(tau.image(h))?)?;
            let bottom_right = tau.image(g).mul(tau.image(h))?;
            if top_left != *sigma.image(gh)
                || top_right != values[gh]
                || bottom_right != *tau.image(gh)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check Δ(αⁿ) = n·αⁿ⁻¹·Δ(α) for a central α and a certified table.
pub fn central_power_check(
    table: &DerivationTable,
    alpha: &GroupRingElement,
    n: u32,
) -> Result<bool, DerivationError> {
    if !table.is_certified() {
        return Err(DerivationError::Uncertified);
    }
    if n == 0 {
        return Err(DerivationError::ZeroPower);
    }
    let id = AlgebraEndomorphism::identity(Arc::clone(alpha.group()), alpha.ring());
    if !is_twisted_central(alpha, &id, &id)? {
        return Err(DerivationError::NotCentral);
    }
    let one = GroupRingElement::one(Arc::clone(alpha.group()), alpha.ring());
    let mut alpha_pow = one.clone(); // α^(n-1)
    for _ in 0..n - 1 {
        alpha_pow = alpha_pow.mul(alpha)?;
    }
    let alpha_n = alpha_pow.mul(alpha)?;
    let lhs = apply_derivation(table, &alpha_n)?;
    let n_scalar = Scalar::from_i64(i64::from(n), alpha.ring());
    let rhs = alpha_pow
        .scale(&n_scalar)
        .mul(&apply_derivation(table, alpha)?)?;
    Ok(lhs == rhs)
}

/// Twisted orbits of the underlying group homomorphisms, when both
/// endomorphisms are lifts.
pub fn lifted_orbits(
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<Partition, DerivationError> {
    match (sigma.group_hom(), tau.group_hom()) {
        (Some(sh), Some(th)) => twisted_orbits(sigma.group(), sh, th)
            .map_err(|_| DerivationError::Algebra(AlgebraError::GroupMismatch)),
        _ => Err(DerivationError::Algebra(AlgebraError::NotLiftedHom)),
    }
}

/// Convenience: the zero derivation for a context.
pub fn zero_derivation(sigma: &AlgebraEndomorphism, tau: &AlgebraEndomorphism) -> DerivationTable {
    let group = Arc::clone(sigma.group());
    let ring = sigma.ring();
    let values = (0..group.order())
        .map(|_| GroupRingElement::zero(Arc::clone(&group), ring))
        .collect();
    DerivationTable::certified_unchecked(sigma.clone(), tau.clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_group, FamilySpec};
    use crate::group::GroupHomomorphism;
    use crate::ring::class_sum_center_basis;

    fn q() -> CoefficientRing {
        CoefficientRing::Rational
    }

    fn f2() -> CoefficientRing {
        CoefficientRing::modp(2).unwrap()
    }

    fn id_endo(g: &Arc<FiniteGroup>, ring: CoefficientRing) -> AlgebraEndomorphism {
        AlgebraEndomorphism::identity(Arc::clone(g), ring)
    }

    fn inner_endo(g: &Arc<FiniteGroup>, ring: CoefficientRing, s: usize) -> AlgebraEndomorphism {
        let hom = GroupHomomorphism::inner_automorphism(Arc::clone(g), s).unwrap();
        AlgebraEndomorphism::lift_group_hom(&hom, ring).unwrap()
    }

    fn elem(g: &Arc<FiniteGroup>, ring: CoefficientRing, coeffs: &[i64]) -> GroupRingElement {
        GroupRingElement::from_coeffs(
            Arc::clone(g),
            ring,
            coeffs.iter().map(|&v| Scalar::from_i64(v, ring)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn zero_table_is_valid() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let zero = zero_derivation(&id, &id);
        assert!(validate_cocycle(zero.values(), &id, &id)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn outer_table_mod_two_is_valid() {
        // δ(e) = 0, δ(g) = 1 + g over F_2[C2]: the only relation is
        // δ(e) = δ(g)·g + g·δ(g) = 2(1 + g) = 0
        let c2 = build_group(&FamilySpec::Cyclic(2), 64).unwrap();
        let id = id_endo(&c2, f2());
        let values = vec![elem(&c2, f2(), &[0, 0]), elem(&c2, f2(), &[1, 1])];
        assert!(validate_cocycle(&values, &id, &id).unwrap().is_valid());
        assert!(DerivationTable::new(id.clone(), id, values)
            .unwrap()
            .certify()
            .is_ok());
    }

    #[test]
    fn rational_counterpart_is_invalid_at_g_g() {
        // over Q[C2], δ(g) = g fails: δ(g·g) = 0 but both sides sum to 2e
        let c2 = build_group(&FamilySpec::Cyclic(2), 64).unwrap();
        let id = id_endo(&c2, q());
        let values = vec![elem(&c2, q(), &[0, 0]), elem(&c2, q(), &[0, 1])];
        let verdict = validate_cocycle(&values, &id, &id).unwrap();
        assert!(!verdict.is_valid());
        assert!(verdict
            .violations
            .iter()
            .any(|v| v.g == 1 && v.h == 1 && v.lhs.is_zero() && !v.rhs.is_zero()));
        assert!(matches!(
            DerivationTable::new(id.clone(), id, values)
                .unwrap()
                .certify(),
            Err(DerivationError::Cocycle(_))
        ));
    }

    #[test]
    fn apply_derivation_is_linear_and_kills_one() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let x = elem(&g, q(), &[0, 2, 0, -1, 0, 3]);
        let table = inner_derivation(&x, &id, &id).unwrap();
        let one = GroupRingElement::one(Arc::clone(&g), q());
        assert!(apply_derivation(&table, &one).unwrap().is_zero());
        for i in 0..g.order() {
            let b = GroupRingElement::basis(Arc::clone(&g), q(), i);
            assert_eq!(apply_derivation(&table, &b).unwrap(), *table.value(i));
        }
        let a = elem(&g, q(), &[0, 2, 0, 3, 0, 0]);
        let expected = table
            .value(1)
            .scale(&Scalar::from_i64(2, q()))
            .add(&table.value(3).scale(&Scalar::from_i64(3, q())))
            .unwrap();
        assert_eq!(apply_derivation(&table, &a).unwrap(), expected);
    }

    #[test]
    fn apply_requires_certification() {
        let g = build_group(&FamilySpec::Cyclic(3), 64).unwrap();
        let id = id_endo(&g, q());
        let values = (0..3)
            .map(|_| GroupRingElement::zero(Arc::clone(&g), q()))
            .collect();
        let table = DerivationTable::new(id.clone(), id, values).unwrap();
        let one = GroupRingElement::one(Arc::clone(&g), q());
        assert_eq!(
            apply_derivation(&table, &one),
            Err(DerivationError::Uncertified)
        );
    }

    #[test]
    fn inner_derivation_of_central_element_vanishes() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        for c in class_sum_center_basis(&g, q()) {
            assert!(inner_derivation(&c, &id, &id).unwrap().is_zero());
        }
        let c6 = build_group(&FamilySpec::Cyclic(6), 64).unwrap();
        let idc = id_endo(&c6, q());
        let any = elem(&c6, q(), &[1, -2, 3, 0, 5, 7]);
        assert!(inner_derivation(&any, &idc, &idc).unwrap().is_zero());
    }

    #[test]
    fn inner_derivation_on_s3_matches_hand_expansion() {
        // x = a transposition t, evaluated at a 3-cycle c:
        // δ_x(c) = t·c − c·t is a difference of two distinct transpositions
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let t = 1usize; // 021
        let c = 3usize; // 120
        let x = GroupRingElement::basis(Arc::clone(&g), q(), t);
        let table = inner_derivation(&x, &id, &id).unwrap();
        let v = table.value(c);
        let tc = g.op(t, c);
        let ct = g.op(c, t);
        assert_ne!(tc, ct);
        assert_eq!(v.coeff(tc), &Scalar::one(q()));
        assert_eq!(v.coeff(ct), &Scalar::from_i64(-1, q()));
        assert_eq!(v.support().len(), 2);
        // both products are transpositions (elements of the size-3 class)
        let classes = g.conjugacy_classes();
        assert_eq!(classes.block_of(tc), classes.block_of(t));
        assert_eq!(classes.block_of(ct), classes.block_of(t));
    }

    #[test]
    fn inner_tables_pass_validation_over_catalog() {
        for spec in [
            FamilySpec::Cyclic(5),
            FamilySpec::Symmetric(3),
            FamilySpec::Dihedral(4),
            FamilySpec::Quaternion8,
        ] {
            let g = build_group(&spec, 64).unwrap();
            let id = id_endo(&g, q());
            let sigma = inner_endo(&g, q(), 1 % g.order());
            let coeffs: Vec<i64> = (0..g.order() as i64).map(|i| 2 * i - 3).collect();
            let x = elem(&g, q(), &coeffs);
            for (s, t) in [(&id, &id), (&sigma, &id), (&id, &sigma), (&sigma, &sigma)] {
                let table = inner_derivation(&x, s, t).unwrap();
                assert!(validate_cocycle(table.values(), s, t).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn centralizer_for_identity_maps_is_the_center() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let basis = twisted_centralizer_basis(&id, &id).unwrap();
        assert_eq!(basis, class_sum_center_basis(&g, q()));
        let null = twisted_centralizer_basis_nullspace(&id, &id).unwrap();
        assert_eq!(null.len(), basis.len());
    }

    #[test]
    fn centralizer_of_abelian_group_is_everything() {
        let g = build_group(&FamilySpec::Cyclic(5), 64).unwrap();
        let id = id_endo(&g, q());
        assert_eq!(twisted_centralizer_basis(&id, &id).unwrap().len(), 5);
        assert_eq!(inner_space_dimension(&id, &id).unwrap(), 0);
    }

    #[test]
    fn twisted_centralizer_for_inner_sigma_on_s3() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let sigma = inner_endo(&g, q(), 1);
        let tau = id_endo(&g, q());
        let basis = twisted_centralizer_basis(&sigma, &tau).unwrap();
        assert_eq!(basis.len(), 3);
        for x in &basis {
            assert!(is_twisted_central(x, &sigma, &tau).unwrap());
        }
        // cross-check against the nullspace route by mutual rank
        let null = twisted_centralizer_basis_nullspace(&sigma, &tau).unwrap();
        assert_eq!(null.len(), 3);
        let to_rows = |v: &[GroupRingElement]| -> Vec<Vec<Scalar>> {
            v.iter().map(|e| e.coeffs().to_vec()).collect()
        };
        let mut all = to_rows(&basis);
        all.extend(to_rows(&null));
        let stacked = Matrix::from_rows(q(), &all).unwrap();
        assert_eq!(stacked.rank(), 3);
    }

    #[test]
    fn derivation_space_dimensions_match_oracle() {
        // abelian identity case: no derivations at all over Q
        for n in [2usize, 3, 4, 6] {
            let g = build_group(&FamilySpec::Cyclic(n), 64).unwrap();
            let id = id_endo(&g, q());
            assert!(derivation_space_basis(&id, &id, 16).unwrap().is_empty());
        }
        // S3 over Q: dimension 3 = |G| − #classes
        let s3 = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&s3, q());
        let basis = derivation_space_basis(&id, &id, 16).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(inner_space_dimension(&id, &id).unwrap(), 3);
        for t in &basis {
            assert!(t.is_certified());
        }
        // F_2[C2]: dimension 2, all of it outer
        let c2 = build_group(&FamilySpec::Cyclic(2), 64).unwrap();
        let idp = id_endo(&c2, f2());
        assert_eq!(derivation_space_basis(&idp, &idp, 16).unwrap().len(), 2);
        assert_eq!(inner_space_dimension(&idp, &idp).unwrap(), 0);
    }

    #[test]
    fn quaternion_inner_dimension() {
        let q8 = build_group(&FamilySpec::Quaternion8, 64).unwrap();
        let id = id_endo(&q8, q());
        assert_eq!(inner_space_dimension(&id, &id).unwrap(), 3);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let s4 = build_group(&FamilySpec::Symmetric(4), 64).unwrap();
        let id = id_endo(&s4, q());
        assert_eq!(
            derivation_space_basis(&id, &id, 16),
            Err(DerivationError::EnumerationCapExceeded { order: 24, cap: 16 })
        );
    }

    #[test]
    fn witness_of_zero_table_is_zero() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let report = solve_inner_witness(&zero_derivation(&id, &id)).unwrap();
        assert_eq!(report.status, WitnessStatus::Inner);
        assert!(report.witness.unwrap().is_zero());
        assert_eq!(report.centralizer_dimension, 3);
        assert!(report.hypotheses.all_hold());
    }

    #[test]
    fn witness_recovery_on_s4_up_to_centralizer() {
        let s4 = build_group(&FamilySpec::Symmetric(4), 64).unwrap();
        let id = id_endo(&s4, q());
        let coeffs: Vec<i64> = (0..24).map(|i| (i * i % 17) as i64 - 8).collect();
        let x0 = elem(&s4, q(), &coeffs);
        let table = inner_derivation(&x0, &id, &id).unwrap();
        let report = solve_inner_witness(&table).unwrap();
        assert_eq!(report.status, WitnessStatus::Inner);
        let x = report.witness.unwrap();
        // the recovered witness induces the same derivation
        assert_eq!(inner_derivation(&x, &id, &id).unwrap(), table);
        // and differs from x0 by a twisted-central element
        let diff = x.sub(&x0).unwrap();
        assert!(is_twisted_central(&diff, &id, &id).unwrap());
    }

    #[test]
    fn outer_derivation_mod_two_is_not_inner() {
        let c2 = build_group(&FamilySpec::Cyclic(2), 64).unwrap();
        let id = id_endo(&c2, f2());
        let values = vec![elem(&c2, f2(), &[0, 0]), elem(&c2, f2(), &[1, 1])];
        let table = DerivationTable::new(id.clone(), id, values)
            .unwrap()
            .certify()
            .unwrap();
        let report = solve_inner_witness(&table).unwrap();
        assert_eq!(report.status, WitnessStatus::NotInner);
        assert!(report.witness.is_none());
        assert!(report.hypotheses.char_divides_order);
        assert!(!report.hypotheses.all_hold());
    }

    #[test]
    fn triangular_check_agrees_with_cocycle_on_examples() {
        let c2 = build_group(&FamilySpec::Cyclic(2), 64).unwrap();
        let id = id_endo(&c2, q());
        let zero = zero_derivation(&id, &id);
        assert!(triangular_embedding_check(zero.values(), &id, &id).unwrap());

        let invalid = vec![elem(&c2, q(), &[0, 0]), elem(&c2, q(), &[0, 1])];
        assert!(!triangular_embedding_check(&invalid, &id, &id).unwrap());
        assert!(!validate_cocycle(&invalid, &id, &id).unwrap().is_valid());

        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let ids3 = id_endo(&g, q());
        let x = elem(&g, q(), &[1, 2, 3, 4, 5, 6]);
        let table = inner_derivation(&x, &ids3, &ids3).unwrap();
        assert!(triangular_embedding_check(table.values(), &ids3, &ids3).unwrap());
    }

    #[test]
    fn central_power_rule_holds() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let x = elem(&g, q(), &[0, 1, -1, 2, 0, 1]);
        let table = inner_derivation(&x, &id, &id).unwrap();
        let one = GroupRingElement::one(Arc::clone(&g), q());
        for n in 1..=4 {
            assert!(central_power_check(&table, &one, n).unwrap());
        }
        for alpha in class_sum_center_basis(&g, q()) {
            for n in 1..=5 {
                assert!(central_power_check(&table, &alpha, n).unwrap());
            }
        }
        // non-central alpha is a precondition failure
        let t = GroupRingElement::basis(Arc::clone(&g), q(), 1);
        assert_eq!(
            central_power_check(&table, &t, 2),
            Err(DerivationError::NotCentral)
        );
    }

    #[test]
    fn module_closure_preserves_certification() {
        let g = build_group(&FamilySpec::Symmetric(3), 64).unwrap();
        let id = id_endo(&g, q());
        let t1 = inner_derivation(&elem(&g, q(), &[0, 1, 0, 0, 2, 0]), &id, &id).unwrap();
        let t2 = inner_derivation(&elem(&g, q(), &[3, 0, -1, 0, 0, 1]), &id, &id).unwrap();
        let sum = t1.add(&t2).unwrap();
        assert!(sum.is_certified());
        assert!(validate_cocycle(sum.values(), &id, &id).unwrap().is_valid());
        let scaled = t1.scale(&Scalar::from_i64(-7, q()));
        assert!(scaled.is_certified());
        assert!(validate_cocycle(scaled.values(), &id, &id)
            .unwrap()
            .is_valid());
    }
}
