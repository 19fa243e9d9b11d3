//! Request execution shared by the CLI and the C API: resolve a group,
//! a coefficient ring and a (σ, τ) pair from wire descriptors, run the
//! requested computation, and package a deterministic report.

use std::sync::Arc;

use serde::Deserialize;
use serde_json::json;

use crate::derivation::{
    derivation_space_basis, lifted_orbits, solve_inner_witness, twisted_centralizer_basis,
    DerivationError, DerivationTable, HypothesisReport, DEFAULT_ENUMERATION_CAP,
};
use crate::families::{build_group, FamilySpec};
use crate::group::{FiniteGroup, GroupHomomorphism, DEFAULT_ORDER_CAP};
use crate::integrality::integral_witness_pipeline;
use crate::json::{
    ContextJson, DerivationFile, ElementFile, EndoFile, GroupFile, HypothesesJson,
    PipelineOutcomeJson, RingRepr, RunReport, WitnessReportJson,
};
use crate::ring::{class_sum_center_basis, validate_endomorphism, AlgebraEndomorphism};
use crate::scalar::CoefficientRing;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    /// Bad input data: invalid tables, endomorphisms, derivations, caps.
    #[error("{error}: {detail}")]
    Validation { error: String, detail: String },
    /// A broken internal invariant.
    #[error("internal error: {0}")]
    Internal(String),
}

impl EngineError {
    pub fn validation(error: impl Into<String>, detail: impl ToString) -> EngineError {
        EngineError::Validation {
            error: error.into(),
            detail: detail.to_string(),
        }
    }
}

/// Group input: a family name such as "S3" or "C2xC4", or an inline table.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Name(String),
    Inline(GroupFile),
}

/// Endomorphism input: "id", "inner:<element>", or an inline object.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum EndoSource {
    Spec(String),
    Inline(EndoFile),
}

impl Default for EndoSource {
    fn default() -> Self {
        EndoSource::Spec("id".to_string())
    }
}

/// One engine invocation. The same structure backs CLI flags and the
/// JSON entry point of the C API.
#[derive(Clone, Debug, Deserialize)]
pub struct Request {
    pub command: String,
    pub group: GroupSource,
    #[serde(default)]
    pub ring: Option<RingRepr>,
    #[serde(default)]
    pub sigma: Option<EndoSource>,
    #[serde(default)]
    pub tau: Option<EndoSource>,
    #[serde(default)]
    pub derivation: Option<DerivationFile>,
    #[serde(default)]
    pub order_cap: Option<usize>,
    #[serde(default)]
    pub enumeration_cap: Option<usize>,
}

struct Context {
    group: Arc<FiniteGroup>,
    group_name: String,
    ring: CoefficientRing,
    sigma: AlgebraEndomorphism,
    tau: AlgebraEndomorphism,
    sigma_name: String,
    tau_name: String,
    enumeration_cap: usize,
}

impl Context {
    fn context_json(&self, with_ring: bool) -> ContextJson {
        ContextJson {
            group: self.group_name.clone(),
            order: self.group.order(),
            ring: with_ring.then(|| RingRepr::from_ring(self.ring)),
            sigma: Some(self.sigma_name.clone()),
            tau: Some(self.tau_name.clone()),
        }
    }

    fn hypotheses(&self) -> HypothesesJson {
        HypothesesJson::from_report(&HypothesisReport::evaluate(&self.sigma, &self.tau))
    }
}

fn resolve_group(
    source: &GroupSource,
    cap: usize,
) -> Result<(Arc<FiniteGroup>, String), EngineError> {
    match source {
        GroupSource::Name(name) => {
            let spec =
                FamilySpec::parse(name).map_err(|e| EngineError::validation("unknown-group", e))?;
            let group =
                build_group(&spec, cap).map_err(|e| EngineError::validation("invalid-group", e))?;
            Ok((group, name.clone()))
        }
        GroupSource::Inline(file) => {
            let group = file
                .to_group()
                .map_err(|e| EngineError::validation("invalid-group", e))?;
            if group.order() > cap {
                return Err(EngineError::validation(
                    "invalid-group",
                    format!("group order {} exceeds the cap {}", group.order(), cap),
                ));
            }
            Ok((group, "custom".to_string()))
        }
    }
}

fn resolve_endo(
    source: &EndoSource,
    group: &Arc<FiniteGroup>,
    ring: CoefficientRing,
) -> Result<(AlgebraEndomorphism, String), EngineError> {
    match source {
        EndoSource::Spec(spec) if spec == "id" => Ok((
            AlgebraEndomorphism::identity(Arc::clone(group), ring),
            "id".to_string(),
        )),
        EndoSource::Spec(spec) => {
            let Some(rest) = spec.strip_prefix("inner:") else {
                return Err(EngineError::validation(
                    "invalid-endomorphism",
                    format!("unknown endomorphism spec {spec:?}; use \"id\" or \"inner:<k>\""),
                ));
            };
            let k: usize = rest.parse().map_err(|_| {
                EngineError::validation(
                    "invalid-endomorphism",
                    format!("bad element index in {spec:?}"),
                )
            })?;
            let hom = GroupHomomorphism::inner_automorphism(Arc::clone(group), k)
                .map_err(|e| EngineError::validation("invalid-endomorphism", e))?;
            let endo = AlgebraEndomorphism::lift_group_hom(&hom, ring)
                .map_err(|e| EngineError::validation("invalid-endomorphism", e))?;
            Ok((endo, spec.clone()))
        }
        EndoSource::Inline(file) => {
            let endo = file
                .to_endomorphism(group, ring)
                .map_err(|e| EngineError::validation("invalid-endomorphism", e))?;
            Ok((endo, "custom".to_string()))
        }
    }
}

fn resolve_context(req: &Request, default_ring: CoefficientRing) -> Result<Context, EngineError> {
    let order_cap = req.order_cap.unwrap_or(DEFAULT_ORDER_CAP);
    let (group, group_name) = resolve_group(&req.group, order_cap)?;
    let ring = match &req.ring {
        Some(repr) => repr
            .to_ring()
            .map_err(|e| EngineError::validation("invalid-ring", e))?,
        None => default_ring,
    };
    let sigma_source = req.sigma.clone().unwrap_or_default();
    let tau_source = req.tau.clone().unwrap_or_default();
    let (sigma, sigma_name) = resolve_endo(&sigma_source, &group, ring)?;
    let (tau, tau_name) = resolve_endo(&tau_source, &group, ring)?;
    Ok(Context {
        group,
        group_name,
        ring,
        sigma,
        tau,
        sigma_name,
        tau_name,
        enumeration_cap: req.enumeration_cap.unwrap_or(DEFAULT_ENUMERATION_CAP),
    })
}

fn load_certified_derivation(req: &Request, ctx: &Context) -> Result<DerivationTable, EngineError> {
    let file = req.derivation.as_ref().ok_or_else(|| {
        EngineError::validation("missing-derivation", "this command needs --derivation")
    })?;
    let values = file
        .to_values(&ctx.group, ctx.ring)
        .map_err(|e| EngineError::validation("invalid-derivation", e))?;
    let table = DerivationTable::new(ctx.sigma.clone(), ctx.tau.clone(), values)
        .map_err(|e| EngineError::validation("invalid-derivation", e))?;
    table.certify().map_err(|e| match e {
        DerivationError::Cocycle(v) => EngineError::validation("uncertified-derivation", v),
        other => EngineError::validation("invalid-derivation", other),
    })
}

/// Run one request to completion.
pub fn execute(req: &Request) -> Result<RunReport, EngineError> {
    let make_report = |ctx: &Context,
                       with_ring: bool,
                       with_hypotheses: bool,
                       result: serde_json::Value| RunReport {
        version: VERSION.to_string(),
        command: req.command.clone(),
        context: ctx.context_json(with_ring),
        hypotheses: with_hypotheses.then(|| ctx.hypotheses()),
        result,
    };

    match req.command.as_str() {
        "group" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let classes = ctx.group.conjugacy_classes();
            let file = GroupFile::from_group(&ctx.group);
            let result = json!({
                "order": file.order,
                "table": file.table,
                "labels": file.labels,
                "identity": ctx.group.identity(),
                "inverse": (0..ctx.group.order()).map(|i| ctx.group.inverse(i)).collect::<Vec<_>>(),
                "abelian": ctx.group.is_abelian(),
                "conjugacy_classes": classes.blocks(),
            });
            Ok(make_report(&ctx, false, false, result))
        }
        "check-hom" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let describe = |endo: &AlgebraEndomorphism| {
                json!({
                    "valid": validate_endomorphism(endo.images()).is_valid(),
                    "lifted_from_group_hom": endo.is_lifted(),
                    "bijective": endo.is_bijective(),
                    "fixes_center": endo.fixes_center(),
                })
            };
            let result = json!({
                "sigma": describe(&ctx.sigma),
                "tau": describe(&ctx.tau),
            });
            Ok(make_report(&ctx, true, true, result))
        }
        "center" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let basis = class_sum_center_basis(&ctx.group, ctx.ring);
            let classes = ctx.group.conjugacy_classes();
            let result = json!({
                "dimension": basis.len(),
                "class_blocks": classes.blocks(),
                "class_sums": basis.iter().map(ElementFile::from_element).collect::<Vec<_>>(),
            });
            Ok(make_report(&ctx, true, false, result))
        }
        "orbits" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let orbits = lifted_orbits(&ctx.sigma, &ctx.tau)
                .map_err(|e| EngineError::validation("invalid-endomorphism", e))?;
            let result = json!({
                "orbit_count": orbits.block_count(),
                "orbits": orbits.blocks(),
            });
            Ok(make_report(&ctx, false, false, result))
        }
        "basis" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let field_ctx = field_context(&ctx)?;
            let basis =
                derivation_space_basis(&field_ctx.sigma, &field_ctx.tau, ctx.enumeration_cap)
                    .map_err(|e| EngineError::validation("enumeration-failed", e))?;
            let result = json!({
                "dimension": basis.len(),
                "tables": basis.iter().map(DerivationFile::from_table).collect::<Vec<_>>(),
            });
            Ok(make_report(&ctx, true, true, result))
        }
        "dimension" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let field_ctx = field_context(&ctx)?;
            let centralizer = twisted_centralizer_basis(&field_ctx.sigma, &field_ctx.tau)
                .map_err(|e| EngineError::validation("invalid-endomorphism", e))?;
            let inner_dimension = ctx.group.order() - centralizer.len();
            let derivation_dimension = if ctx.group.order() <= ctx.enumeration_cap {
                Some(
                    derivation_space_basis(&field_ctx.sigma, &field_ctx.tau, ctx.enumeration_cap)
                        .map_err(|e| EngineError::validation("enumeration-failed", e))?
                        .len(),
                )
            } else {
                None
            };
            let result = json!({
                "derivation_dimension": derivation_dimension,
                "inner_dimension": inner_dimension,
                "centralizer_dimension": centralizer.len(),
                "dimensions_match": derivation_dimension.map(|d| d == inner_dimension),
            });
            Ok(make_report(&ctx, true, true, result))
        }
        "witness" => {
            let ctx = resolve_context(req, CoefficientRing::Rational)?;
            let table = load_certified_derivation(req, &ctx)?;
            let field_table = if table.ring().is_field() {
                table
            } else {
                table
                    .retagged(CoefficientRing::Rational)
                    .map_err(|e| EngineError::validation("invalid-derivation", e))?
            };
            let report = solve_inner_witness(&field_table)
                .map_err(|e| EngineError::validation("solve-failed", e))?;
            let result = serde_json::to_value(WitnessReportJson::from_report(&report))
                .map_err(|e| EngineError::Internal(e.to_string()))?;
            Ok(make_report(&ctx, true, true, result))
        }
        "integralize" => {
            let ctx = resolve_context(req, CoefficientRing::Integer)?;
            if ctx.ring != CoefficientRing::Integer {
                return Err(EngineError::validation(
                    "invalid-ring",
                    "integralize works over Z",
                ));
            }
            let table = load_certified_derivation(req, &ctx)?;
            let outcome = integral_witness_pipeline(&table)
                .map_err(|e| EngineError::validation("pipeline-failed", e))?;
            let result = serde_json::to_value(PipelineOutcomeJson::from_outcome(&outcome))
                .map_err(|e| EngineError::Internal(e.to_string()))?;
            Ok(make_report(&ctx, true, true, result))
        }
        other => Err(EngineError::validation(
            "unknown-command",
            format!("no such command {other:?}"),
        )),
    }
}

/// The same context with ℤ swapped for ℚ, for solver-facing commands.
fn field_context(ctx: &Context) -> Result<Context, EngineError> {
    if ctx.ring.is_field() {
        return Ok(Context {
            group: Arc::clone(&ctx.group),
            group_name: ctx.group_name.clone(),
            ring: ctx.ring,
            sigma: ctx.sigma.clone(),
            tau: ctx.tau.clone(),
            sigma_name: ctx.sigma_name.clone(),
            tau_name: ctx.tau_name.clone(),
            enumeration_cap: ctx.enumeration_cap,
        });
    }
    let ring = ctx.ring.solve_field();
    Ok(Context {
        group: Arc::clone(&ctx.group),
        group_name: ctx.group_name.clone(),
        ring,
        sigma: ctx
            .sigma
            .retagged(ring)
            .map_err(|e| EngineError::validation("invalid-endomorphism", e))?,
        tau: ctx
            .tau
            .retagged(ring)
            .map_err(|e| EngineError::validation("invalid-endomorphism", e))?,
        sigma_name: ctx.sigma_name.clone(),
        tau_name: ctx.tau_name.clone(),
        enumeration_cap: ctx.enumeration_cap,
    })
}
