//! Text and JSON renderings of characteristic polynomials.

use drinfeld_core::{CharPolyResult, Fq, FqPoly};
use serde::{Deserialize, Serialize};

use crate::instance::{fq_from_value, fq_to_value, FqValue, InstanceError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    /// `i` in `a_i Z^i`.
    pub index: usize,
    pub poly: String,
    /// Little-endian coefficients in `x`.
    pub coeffs: Vec<FqValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub annihilates: bool,
    /// `None` when the linear system was skipped.
    pub linear_system: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyJson {
    pub q: u32,
    pub rank: usize,
    pub algorithm: String,
    pub k: usize,
    pub charpoly: String,
    pub coefficients: Vec<CoefficientJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

impl CharPolyJson {
    pub fn new(fq: &Fq, result: &CharPolyResult, algorithm: &str, k: usize) -> Self {
        CharPolyJson {
            q: fq.q(),
            rank: result.rank(),
            algorithm: algorithm.to_string(),
            k,
            charpoly: result.display(fq),
            coefficients: result
                .coeffs()
                .iter()
                .enumerate()
                .map(|(index, a)| CoefficientJson {
                    index,
                    poly: a.display("x", fq),
                    coeffs: a.coeffs().iter().map(|&c| fq_to_value(fq, c)).collect(),
                })
                .collect(),
            verification: None,
        }
    }

    /// Reads the coefficient lists back into a result.
    pub fn to_result(&self, fq: &Fq) -> Result<CharPolyResult, InstanceError> {
        let mut coeffs = vec![FqPoly::zero(); self.rank];
        for c in &self.coefficients {
            let slot = coeffs.get_mut(c.index).ok_or_else(|| InstanceError::Field {
                field: "coefficients",
                message: format!("index {} is not below the rank {}", c.index, self.rank),
            })?;
            let values = c
                .coeffs
                .iter()
                .map(|v| fq_from_value(fq, v, "coefficients"))
                .collect::<Result<Vec<_>, _>>()?;
            *slot = FqPoly::new(values);
        }
        Ok(CharPolyResult::new(coeffs))
    }
}

/// First line is the polynomial; then one `a_i = ...  [coeffs]` line per coefficient.
pub fn render_text(fq: &Fq, result: &CharPolyResult) -> String {
    let mut out = result.display(fq);
    out.push('\n');
    for (i, a) in result.coeffs().iter().enumerate() {
        let list: Vec<String> = a.coeffs().iter().map(|&c| fq.display(c)).collect();
        out.push_str(&format!("a_{i} = {}  [{}]\n", a.display("x", fq), list.join(", ")));
    }
    out
}
