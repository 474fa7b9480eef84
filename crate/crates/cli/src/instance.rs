//! JSON instance files.
//!
//! ```json
//! {
//!   "version": 1,
//!   "p": 2,
//!   "e": 1,
//!   "ell": [1, 1, 0, 1],
//!   "gamma_x": [1, 1],
//!   "delta": [[0, 0, 1], [1], [0, 1, 1], [0, 1]],
//!   "endo": "frobenius"
//! }
//! ```
//!
//! All coefficient lists are little-endian. An F_q element is an integer when
//! `e = 1` (reduced mod p) and a little-endian list of F_p digits when `e > 1`
//! (a bare integer is then read as an element of F_p). `f` is required when
//! `e > 1`. `endo` is optional: either `"frobenius"` or a list of τ-coefficients.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use drinfeld_core::{DrinfeldModule, Error as CoreError, FieldTower, Fq, FqElem, LElem, SkewPoly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("field `{field}`: {message}")]
    Field { field: &'static str, message: String },
}

impl InstanceError {
    fn field(field: &'static str, message: impl Into<String>) -> Self {
        InstanceError::Field {
            field,
            message: message.into(),
        }
    }

    fn core(field: &'static str, err: CoreError) -> Self {
        InstanceError::field(field, err.to_string())
    }
}

/// One F_q element as written in a file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FqValue {
    Int(i64),
    Digits(Vec<i64>),
}

/// The optional endomorphism entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndoSpec {
    Token(String),
    Coeffs(Vec<Vec<FqValue>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub version: u32,
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<i64>>,
    pub ell: Vec<FqValue>,
    pub gamma_x: Vec<FqValue>,
    pub delta: Vec<Vec<FqValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endo: Option<EndoSpec>,
}

fn one() -> u32 {
    1
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub module: DrinfeldModule,
    /// `None` when the file has no `endo` entry.
    pub endo: Option<SkewPoly>,
}

impl Instance {
    pub fn tower(&self) -> &Arc<FieldTower> {
        self.module.tower_arc()
    }

    /// The endomorphism from the file, or τ^n when there is none.
    pub fn endo_or_frobenius(&self) -> SkewPoly {
        self.endo.clone().unwrap_or_else(|| self.module.frobenius_endo())
    }
}

pub fn parse_instance(path: &Path) -> Result<Instance, InstanceError> {
    let text = fs::read_to_string(path).map_err(|source| InstanceError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance_str(&text)
}

pub fn parse_instance_str(text: &str) -> Result<Instance, InstanceError> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| InstanceError::Schema(e.to_string()))?;
    file.validate()
}

fn reduce_int(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

pub fn fq_from_value(fq: &Fq, v: &FqValue, field: &'static str) -> Result<FqElem, InstanceError> {
    let p = fq.p();
    match v {
        FqValue::Int(i) => Ok(reduce_int(*i, p)),
        FqValue::Digits(ds) => {
            if ds.len() > fq.e() {
                return Err(InstanceError::field(
                    field,
                    format!("F_q element {ds:?} has more than e = {} digits", fq.e()),
                ));
            }
            let digits: Vec<u32> = ds.iter().map(|&d| reduce_int(d, p)).collect();
            fq.from_digits(&digits).map_err(|e| InstanceError::core(field, e))
        }
    }
}

pub fn fq_to_value(fq: &Fq, c: FqElem) -> FqValue {
    if fq.e() == 1 {
        FqValue::Int(c as i64)
    } else {
        let mut ds: Vec<i64> = fq.digits(c).into_iter().map(i64::from).collect();
        while ds.len() > 1 && ds.last() == Some(&0) {
            ds.pop();
        }
        FqValue::Digits(ds)
    }
}

fn l_from_values(tower: &FieldTower, vs: &[FqValue], field: &'static str) -> Result<LElem, InstanceError> {
    if vs.len() > tower.n() {
        return Err(InstanceError::field(
            field,
            format!("element of L has {} coefficients, more than n = {}", vs.len(), tower.n()),
        ));
    }
    let coeffs = vs
        .iter()
        .map(|v| fq_from_value(tower.fq(), v, field))
        .collect::<Result<Vec<_>, _>>()?;
    tower.from_coeffs(&coeffs).map_err(|e| InstanceError::core(field, e))
}

pub fn l_to_values(tower: &FieldTower, c: &LElem) -> Vec<FqValue> {
    let mut coeffs = c.coeffs().to_vec();
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs.into_iter().map(|x| fq_to_value(tower.fq(), x)).collect()
}

impl InstanceFile {
    pub fn validate(&self) -> Result<Instance, InstanceError> {
        if self.version != SCHEMA_VERSION {
            return Err(InstanceError::field(
                "version",
                format!("unsupported version {}, expected {SCHEMA_VERSION}", self.version),
            ));
        }
        let fq = match (self.e, &self.f) {
            (0, _) => return Err(InstanceError::field("e", "must be at least 1")),
            (1, None) => Fq::prime(self.p).map_err(|e| InstanceError::core("p", e))?,
            (_, None) => return Err(InstanceError::field("f", "required when e > 1")),
            (e, Some(f)) => {
                Fq::prime(self.p).map_err(|err| InstanceError::core("p", err))?;
                let f: Vec<u32> = f.iter().map(|&c| reduce_int(c, self.p)).collect();
                if f.len() != e as usize + 1 {
                    return Err(InstanceError::field(
                        "f",
                        format!("expected e + 1 = {} coefficients, got {}", e + 1, f.len()),
                    ));
                }
                Fq::extension(self.p, &f).map_err(|err| InstanceError::core("f", err))?
            }
        };
        let ell = self
            .ell
            .iter()
            .map(|v| fq_from_value(&fq, v, "ell"))
            .collect::<Result<Vec<_>, _>>()?;
        let tower = FieldTower::new(fq, drinfeld_core::FqPoly::new(ell))
            .map_err(|e| InstanceError::core("ell", e))?;
        let tower = Arc::new(tower);
        let gamma = l_from_values(&tower, &self.gamma_x, "gamma_x")?;
        if self.delta.is_empty() {
            return Err(InstanceError::field("delta", "needs at least one coefficient Δ_1"));
        }
        let deltas = self
            .delta
            .iter()
            .map(|d| l_from_values(&tower, d, "delta"))
            .collect::<Result<Vec<_>, _>>()?;
        let module = DrinfeldModule::new(tower.clone(), gamma, deltas).map_err(|e| InstanceError::core("delta", e))?;
        let endo = match &self.endo {
            None => None,
            Some(spec) => Some(endo_from_spec(&module, spec)?),
        };
        Ok(Instance { module, endo })
    }
}

/// Resolves an `endo` entry against a module.
pub fn endo_from_spec(module: &DrinfeldModule, spec: &EndoSpec) -> Result<SkewPoly, InstanceError> {
    match spec {
        EndoSpec::Token(t) if t == "frobenius" => Ok(module.frobenius_endo()),
        EndoSpec::Token(t) => Err(InstanceError::field(
            "endo",
            format!("unknown token `{t}`, expected \"frobenius\" or a coefficient list"),
        )),
        EndoSpec::Coeffs(cs) => {
            let coeffs = cs
                .iter()
                .map(|c| l_from_values(module.tower(), c, "endo"))
                .collect::<Result<Vec<_>, _>>()?;
            let u = SkewPoly::new(coeffs);
            if u.is_zero() {
                return Err(InstanceError::field("endo", "the zero skew polynomial is not allowed"));
            }
            Ok(u)
        }
    }
}

pub fn endo_to_spec(module: &DrinfeldModule, u: &SkewPoly) -> EndoSpec {
    if module.is_frobenius(u) {
        return EndoSpec::Token("frobenius".into());
    }
    EndoSpec::Coeffs(u.coeffs().iter().map(|c| l_to_values(module.tower(), c)).collect())
}

/// The file form of a module and optional endomorphism.
pub fn to_instance_file(module: &DrinfeldModule, endo: Option<&SkewPoly>) -> InstanceFile {
    let tower = module.tower();
    let fq = tower.fq();
    InstanceFile {
        version: SCHEMA_VERSION,
        p: fq.p(),
        e: fq.e() as u32,
        f: (fq.e() > 1).then(|| fq.modulus().iter().map(|&c| c as i64).collect()),
        ell: tower.ell().coeffs().iter().map(|&c| fq_to_value(fq, c)).collect(),
        gamma_x: l_to_values(tower, module.gamma_x()),
        delta: module.deltas().iter().map(|d| l_to_values(tower, d)).collect(),
        endo: endo.map(|u| endo_to_spec(module, u)),
    }
}

pub fn to_json(file: &InstanceFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("instance serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{
        "version": 1, "p": 2, "ell": [1, 1, 0, 1], "gamma_x": [1, 1],
        "delta": [[0, 0, 1], [1], [0, 1, 1], [0, 1]], "endo": "frobenius"
    }"#;

    fn expect_field(text: &str, field: &str) {
        match parse_instance_str(text) {
            Err(InstanceError::Field { field: f, .. }) => assert_eq!(f, field, "{text}"),
            other => panic!("expected error on `{field}`, got {other:?}"),
        }
    }

    #[test]
    fn parses_worked_example() {
        let inst = parse_instance_str(WORKED).unwrap();
        assert_eq!(inst.module.rank(), 4);
        assert_eq!(inst.tower().n(), 3);
        assert_eq!(inst.endo, Some(inst.module.frobenius_endo()));
    }

    #[test]
    fn distinct_diagnostics() {
        let no_delta = r#"{"version": 1, "p": 2, "ell": [1, 1, 0, 1], "gamma_x": [1, 1]}"#;
        match parse_instance_str(no_delta) {
            Err(InstanceError::Schema(msg)) => assert!(msg.contains("delta"), "{msg}"),
            other => panic!("{other:?}"),
        }
        expect_field(&WORKED.replace("\"p\": 2", "\"p\": 4"), "p");
        expect_field(&WORKED.replace("[1, 1, 0, 1]", "[1, 0, 0, 1]"), "ell");
        expect_field(&WORKED.replace("[0, 1]], \"endo\"", "[0]], \"endo\""), "delta");
        expect_field(&WORKED.replace("\"frobenius\"", "\"verschiebung\""), "endo");
        expect_field(&WORKED.replace("\"version\": 1", "\"version\": 2"), "version");
        expect_field(&WORKED.replace("\"gamma_x\": [1, 1]", "\"gamma_x\": [1, 1, 1, 1]"), "gamma_x");
        expect_field(&WORKED.replace("\"p\": 2", "\"p\": 2, \"e\": 2"), "f");
        expect_field(&WORKED.replace("\"delta\": [[0, 0, 1], [1], [0, 1, 1], [0, 1]]", "\"delta\": []"), "delta");
        match parse_instance_str("{not json") {
            Err(InstanceError::Schema(_)) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn extension_field_elements() {
        let text = r#"{
            "version": 1, "p": 5, "e": 2, "f": [2, 0, 1], "ell": [[0, 1], 0, 1],
            "gamma_x": [[1, 1], [0, 2]], "delta": [[[3], 1], [4]]
        }"#;
        let inst = parse_instance_str(text).unwrap();
        let fq = inst.tower().fq();
        assert_eq!(fq.q(), 25);
        assert_eq!(inst.endo, None);
        let back = to_instance_file(&inst.module, None);
        let again = back.validate().unwrap();
        assert_eq!(again.module.gamma_x(), inst.module.gamma_x());
        assert_eq!(again.module.deltas(), inst.module.deltas());
        expect_field(&text.replace("[[3], 1]", "[[3, 1, 1], 1]"), "delta");
    }
}
