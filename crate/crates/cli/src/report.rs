//! Structured output schema. Field order is the serialization order.

use serde::{Deserialize, Serialize};
use unisem::act::{s_as_act, zero_elements, NonUniformWitness};
use unisem::classify::{classify_regular_uniform, idempotent_shape, IdempotentShape};
use unisem::format::TableFile;
use unisem::{is_uniform, uniformity_witness, Result, StructuralProfile, StructureTag};

pub const SCHEMA: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub subact: Vec<usize>,
    pub pair: (usize, usize),
    pub congruence: Vec<Vec<usize>>,
}

impl From<&NonUniformWitness> for WitnessReport {
    fn from(w: &NonUniformWitness) -> Self {
        WitnessReport {
            subact: w.subact.clone(),
            pair: w.pair,
            congruence: w.congruence.blocks(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub input: String,
    pub order: usize,
    pub names: Option<Vec<String>>,
    pub profile: StructuralProfile,
    pub zero_elements: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub idempotent_shape: IdempotentShape,
    /// `None` for the one-element semigroup.
    pub uniform: Option<bool>,
    pub classification: Option<StructureTag>,
    pub classification_error: Option<String>,
    pub witness: Option<WitnessReport>,
}

impl AnalysisReport {
    pub fn new(input: &str, file: &TableFile) -> Result<Self> {
        let s = &file.semigroup;
        let single = s.order() < 2;
        let uniform = if single { None } else { Some(is_uniform(s)?) };
        let witness = if single {
            None
        } else {
            uniformity_witness(s)?.as_ref().map(WitnessReport::from)
        };
        let (classification, classification_error) = match classify_regular_uniform(s) {
            Ok(c) if c.tag == StructureTag::NotApplicable => (None, None),
            Ok(c) => (Some(c.tag), None),
            Err(e) => (None, Some(e.to_string())),
        };
        Ok(AnalysisReport {
            schema: SCHEMA.to_string(),
            input: input.to_string(),
            order: s.order(),
            names: file.names.clone(),
            profile: unisem::structural_profile(s),
            zero_elements: zero_elements(&s_as_act(s)),
            idempotents: s.idempotents(),
            idempotent_shape: idempotent_shape(s),
            uniform,
            classification,
            classification_error,
            witness,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformReport {
    pub schema: String,
    pub input: String,
    pub order: usize,
    pub uniform: Option<bool>,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: String,
    pub input: String,
    pub order: usize,
    pub regular: bool,
    pub uniform: Option<bool>,
    pub classification: Option<StructureTag>,
    pub group_part: Vec<usize>,
    pub left_zeros: Vec<usize>,
    pub swapping: Vec<usize>,
    pub literal_swap_rule: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub schema: String,
    pub input: String,
    pub pair: (usize, usize),
    pub classes: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub schema: String,
    pub description: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub table: Vec<usize>,
    pub uniform: Option<bool>,
    pub classification: StructureTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: String,
    pub order: usize,
    pub filters: Vec<String>,
    pub count: usize,
    pub semigroups: Vec<CensusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub max_order: usize,
    pub passed: bool,
    pub reports: Vec<unisem::VerificationReport>,
}
