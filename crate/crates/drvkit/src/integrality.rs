//! Integral witnesses over ℤG: lift a ℤ-valued derivation to ℚG, solve
//! for a rational witness x, and subtract u = Σ {x_g}·g built from the
//! fractional parts of the coefficients. When σ and τ are lifts of group
//! homomorphisms, the fractional parts are constant on every twisted
//! orbit, so u is twisted-central and x − u induces the same inner
//! derivation while lying in ℤG.

use std::sync::Arc;

use thiserror::Error;

use crate::derivation::{
    inner_derivation, lifted_orbits, solve_inner_witness, DerivationError, DerivationTable,
    WitnessReport, WitnessStatus,
};
use crate::ring::{AlgebraEndomorphism, AlgebraError, GroupRingElement};
use crate::scalar::{CoefficientRing, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntegralityError {
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("element is not over Q or Z")]
    NotRational,
    #[error("sigma and tau must be lifts of group homomorphisms")]
    NotLiftedHom,
    #[error("derivation values are not integral")]
    NotIntegral,
}

/// A rational witness together with its fractional-part adjustment and
/// the resulting integral witness x − u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralWitnessReport {
    /// The witness x solved over ℚ.
    pub rational_witness: GroupRingElement,
    /// u = Σ {x_g}·g with every coefficient in [0, 1).
    pub adjustment: GroupRingElement,
    /// x − u, flagged as a ℤG element.
    pub integral_witness: GroupRingElement,
    /// Whether {x_g} is constant on every twisted orbit; equivalent to u
    /// being twisted-central, hence to δ_x = δ_{x−u}.
    pub orbit_constancy: bool,
}

/// Subtract the fractional parts of a rational witness. The integral part
/// x − u always lies in ℤG; `orbit_constancy` records whether the
/// adjustment preserves the induced inner derivation.
pub fn fractional_adjust(
    x: &GroupRingElement,
    sigma: &AlgebraEndomorphism,
    tau: &AlgebraEndomorphism,
) -> Result<IntegralWitnessReport, IntegralityError> {
    if matches!(x.ring(), CoefficientRing::ModP(_)) {
        return Err(IntegralityError::NotRational);
    }
    crate::ring::check_context(&x.retagged(sigma.ring()), sigma, tau)
        .map_err(|_| IntegralityError::Algebra(AlgebraError::GroupMismatch))?;
    let orbits = lifted_orbits(sigma, tau).map_err(|e| match e {
        DerivationError::Algebra(AlgebraError::NotLiftedHom) => IntegralityError::NotLiftedHom,
        other => IntegralityError::Derivation(other),
    })?;

    let group = Arc::clone(x.group());
    let mut frac = Vec::with_capacity(group.order());
    let mut integral = Vec::with_capacity(group.order());
    for c in x.coeffs() {
        let (floor, fractional) = c.floor_split();
        integral.push(Scalar::Rational(num_rational::BigRational::from_integer(
            floor,
        )));
        frac.push(fractional);
    }
    let adjustment =
        GroupRingElement::from_coeffs(Arc::clone(&group), CoefficientRing::Rational, frac)?;
    let integral_witness =
        GroupRingElement::from_coeffs(Arc::clone(&group), CoefficientRing::Integer, integral)?;
    let orbit_constancy = orbits.blocks().iter().all(|block| {
        block
            .iter()
            .all(|&g| adjustment.coeff(g) == adjustment.coeff(block[0]))
    });
    Ok(IntegralWitnessReport {
        rational_witness: x.retagged(CoefficientRing::Rational),
        adjustment,
        integral_witness,
        orbit_constancy,
    })
}

/// Outcome of the integral pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineOutcome {
    /// An integral witness was produced and verified exactly.
    Integral {
        report: IntegralWitnessReport,
        witness_report: WitnessReport,
    },
    /// The rational solve was inconsistent; only possible when the
    /// hypotheses are violated, which the report records.
    NotInner { witness_report: WitnessReport },
    /// The fractional parts were not orbit-constant, so the adjustment
    /// changed the derivation. Signals violated preconditions (or a bug);
    /// the offending data is returned for inspection.
    ConstancyFailure {
        report: IntegralWitnessReport,
        witness_report: WitnessReport,
    },
}

/// Full integral pipeline: check the table is ℤ-valued, solve over ℚ,
/// adjust by fractional parts, and verify δ_{x−u} reproduces the input
/// table exactly.
pub fn integral_witness_pipeline(
    table: &DerivationTable,
) -> Result<PipelineOutcome, IntegralityError> {
    if matches!(table.ring(), CoefficientRing::ModP(_)) {
        return Err(IntegralityError::NotRational);
    }
    if !table.sigma().is_lifted() || !table.tau().is_lifted() {
        return Err(IntegralityError::NotLiftedHom);
    }
    if !table.is_integral() {
        return Err(IntegralityError::NotIntegral);
    }

    let rational = table.retagged(CoefficientRing::Rational)?;
    let witness_report = solve_inner_witness(&rational)?;
    let x = match (&witness_report.status, &witness_report.witness) {
        (WitnessStatus::Inner, Some(x)) => x.clone(),
        _ => return Ok(PipelineOutcome::NotInner { witness_report }),
    };

    let report = fractional_adjust(&x, rational.sigma(), rational.tau())?;
    if !report.orbit_constancy {
        return Ok(PipelineOutcome::ConstancyFailure {
            report,
            witness_report,
        });
    }

    // δ_{x−u} must reproduce the input values exactly.
    let w = report.integral_witness.retagged(CoefficientRing::Rational);
    let reproduced = inner_derivation(&w, rational.sigma(), rational.tau())?;
    if reproduced.values() != rational.values() {
        return Ok(PipelineOutcome::ConstancyFailure {
            report,
            witness_report,
        });
    }
    Ok(PipelineOutcome::Integral {
        report,
        witness_report,
    })
}
