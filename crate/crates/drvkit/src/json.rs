//! JSON schemas for groups, homomorphisms, elements, derivations and
//! reports. Rational coefficients always serialize as decimal strings
//! "a/b" or "a", never as floats, so round-trips are exact and reports
//! are byte-stable.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::derivation::{DerivationTable, HypothesisReport, WitnessReport, WitnessStatus};
use crate::group::{FiniteGroup, GroupHomomorphism};
use crate::integrality::{IntegralWitnessReport, PipelineOutcome};
use crate::ring::{AlgebraEndomorphism, GroupRingElement};
use crate::scalar::{CoefficientRing, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("unknown ring {0:?}; expected \"Q\", \"Z\" or {{\"Fp\": p}}")]
    UnknownRing(String),
    #[error("{0}")]
    BadScalar(#[from] crate::scalar::ScalarError),
    #[error("{0}")]
    BadGroup(#[from] crate::group::GroupError),
    #[error("{0}")]
    BadElement(#[from] crate::ring::AlgebraError),
    #[error("{0}")]
    BadDerivation(#[from] crate::derivation::DerivationError),
    #[error("derivation value for element {index} declares ring {got}, context uses {expected}")]
    RingContextMismatch {
        index: usize,
        got: String,
        expected: String,
    },
}

/// Wire form of a coefficient ring: "Q" | "Z" | {"Fp": p}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRepr {
    Name(String),
    Fp {
        #[serde(rename = "Fp")]
        fp: u32,
    },
}

impl RingRepr {
    pub fn to_ring(&self) -> Result<CoefficientRing, SchemaError> {
        match self {
            RingRepr::Name(s) if s == "Q" => Ok(CoefficientRing::Rational),
            RingRepr::Name(s) if s == "Z" => Ok(CoefficientRing::Integer),
            RingRepr::Name(s) => Err(SchemaError::UnknownRing(s.clone())),
            RingRepr::Fp { fp } => Ok(CoefficientRing::modp(*fp)?),
        }
    }

    pub fn from_ring(ring: CoefficientRing) -> RingRepr {
        match ring {
            CoefficientRing::Rational => RingRepr::Name("Q".to_string()),
            CoefficientRing::Integer => RingRepr::Name("Z".to_string()),
            CoefficientRing::ModP(p) => RingRepr::Fp { fp: p.get() },
        }
    }
}

/// {"order": n, "table": [[...]], "labels": [...]}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn to_group(&self) -> Result<Arc<FiniteGroup>, SchemaError> {
        Ok(FiniteGroup::from_table_with_labels(
            self.table.clone(),
            self.labels.clone(),
        )?)
    }

    pub fn from_group(group: &FiniteGroup) -> GroupFile {
        GroupFile {
            order: group.order(),
            table: group.table_rows(),
            labels: group.labels().map(<[String]>::to_vec),
        }
    }
}

/// {"ring": ..., "coeffs": ["a/b", ...]}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementFile {
    pub ring: RingRepr,
    pub coeffs: Vec<String>,
}

impl ElementFile {
    pub fn to_element(&self, group: &Arc<FiniteGroup>) -> Result<GroupRingElement, SchemaError> {
        let ring = self.ring.to_ring()?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| Scalar::parse(s, ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupRingElement::from_coeffs(
            Arc::clone(group),
            ring,
            coeffs,
        )?)
    }

    pub fn from_element(x: &GroupRingElement) -> ElementFile {
        ElementFile {
            ring: RingRepr::from_ring(x.ring()),
            coeffs: x.coeffs().iter().map(Scalar::to_string).collect(),
        }
    }
}

/// Endomorphism wire forms. A bare {"images": [...]} is accepted as a
/// group homomorphism for convenience.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum EndoFile {
    #[serde(rename = "group_hom")]
    GroupHom { images: Vec<usize> },
    #[serde(rename = "algebra")]
    Algebra { images: Vec<ElementFile> },
}

impl EndoFile {
    pub fn to_endomorphism(
        &self,
        group: &Arc<FiniteGroup>,
        ring: CoefficientRing,
    ) -> Result<AlgebraEndomorphism, SchemaError> {
        match self {
            EndoFile::GroupHom { images } => {
                let hom =
                    GroupHomomorphism::new(Arc::clone(group), Arc::clone(group), images.clone())?;
                Ok(AlgebraEndomorphism::lift_group_hom(&hom, ring)?)
            }
            EndoFile::Algebra { images } => {
                let imgs = images
                    .iter()
                    .map(|e| e.to_element(group))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AlgebraEndomorphism::from_images(imgs)?)
            }
        }
    }
}

/// {"values": [element, ...]}, ring-checked against the ambient context.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DerivationFile {
    pub values: Vec<ElementFile>,
}

impl DerivationFile {
    pub fn to_values(
        &self,
        group: &Arc<FiniteGroup>,
        ring: CoefficientRing,
    ) -> Result<Vec<GroupRingElement>, SchemaError> {
        self.values
            .iter()
            .enumerate()
            .map(|(index, e)| {
                let declared = e.ring.to_ring()?;
                if declared != ring && declared.solve_field() != ring.solve_field() {
                    return Err(SchemaError::RingContextMismatch {
                        index,
                        got: declared.to_string(),
                        expected: ring.to_string(),
                    });
                }
                let mut file = e.clone();
                file.ring = RingRepr::from_ring(ring);
                file.to_element(group)
            })
            .collect()
    }

    pub fn from_table(table: &DerivationTable) -> DerivationFile {
        DerivationFile {
            values: table
                .values()
                .iter()
                .map(ElementFile::from_element)
                .collect(),
        }
    }
}

/// Hypothesis flags as reported to users.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypothesesJson {
    pub sigma_fixes_center: bool,
    pub tau_fixes_center: bool,
    pub char_divides_order: bool,
    pub sigma_bijective: bool,
    pub tau_bijective: bool,
    pub violated: Vec<String>,
}

impl HypothesesJson {
    pub fn from_report(r: &HypothesisReport) -> HypothesesJson {
        HypothesesJson {
            sigma_fixes_center: r.sigma_fixes_center,
            tau_fixes_center: r.tau_fixes_center,
            char_divides_order: r.char_divides_order,
            sigma_bijective: r.sigma_bijective,
            tau_bijective: r.tau_bijective,
            violated: r.violations(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReportJson {
    pub status: String,
    pub witness: Option<ElementFile>,
    pub centralizer_dimension: usize,
    pub derivation_dimension: Option<usize>,
    pub hypotheses: HypothesesJson,
}

impl WitnessReportJson {
    pub fn from_report(r: &WitnessReport) -> WitnessReportJson {
        WitnessReportJson {
            status: r.status.to_string(),
            witness: r.witness.as_ref().map(ElementFile::from_element),
            centralizer_dimension: r.centralizer_dimension,
            derivation_dimension: r.derivation_dimension,
            hypotheses: HypothesesJson::from_report(&r.hypotheses),
        }
    }

    pub fn status_is_inner(&self) -> bool {
        self.status == WitnessStatus::Inner.to_string()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntegralWitnessJson {
    pub rational_witness: ElementFile,
    pub adjustment: ElementFile,
    pub integral_witness: ElementFile,
    pub orbit_constancy: bool,
}

impl IntegralWitnessJson {
    pub fn from_report(r: &IntegralWitnessReport) -> IntegralWitnessJson {
        IntegralWitnessJson {
            rational_witness: ElementFile::from_element(&r.rational_witness),
            adjustment: ElementFile::from_element(&r.adjustment),
            integral_witness: ElementFile::from_element(&r.integral_witness),
            orbit_constancy: r.orbit_constancy,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineOutcomeJson {
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<IntegralWitnessJson>,
    pub witness: WitnessReportJson,
}

impl PipelineOutcomeJson {
    pub fn from_outcome(o: &PipelineOutcome) -> PipelineOutcomeJson {
        match o {
            PipelineOutcome::Integral {
                report,
                witness_report,
            } => PipelineOutcomeJson {
                outcome: "integral".to_string(),
                integral: Some(IntegralWitnessJson::from_report(report)),
                witness: WitnessReportJson::from_report(witness_report),
            },
            PipelineOutcome::NotInner { witness_report } => PipelineOutcomeJson {
                outcome: "not-inner".to_string(),
                integral: None,
                witness: WitnessReportJson::from_report(witness_report),
            },
            PipelineOutcome::ConstancyFailure {
                report,
                witness_report,
            } => PipelineOutcomeJson {
                outcome: "constancy-failure".to_string(),
                integral: Some(IntegralWitnessJson::from_report(report)),
                witness: WitnessReportJson::from_report(witness_report),
            },
        }
    }
}

/// Context echoed into every report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContextJson {
    pub group: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
}

/// Top-level report emitted by the CLI and the C API, deterministic
/// byte-for-byte for identical inputs and version.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub command: String,
    pub context: ContextJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesesJson>,
    pub result: serde_json::Value,
}

impl RunReport {
    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Diagnostic emitted on validation failures (exit code 2).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagnosticReport {
    pub version: String,
    pub command: String,
    pub error: String,
    pub detail: String,
}

impl DiagnosticReport {
    pub fn to_pretty_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("diagnostics serialize");
        s.push('\n');
        s
    }
}
