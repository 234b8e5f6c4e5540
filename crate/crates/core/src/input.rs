//! The input document schema: one JSON or TOML document with `group`,
//! optional `representations`, and either a `cover` or an explicit
//! `module` section, plus an optional search `config`.
//!
//! Rationals are written as `"p/q"` strings (plain integers accepted),
//! matrices as row lists, monodromy entries as words in the declared
//! generator names (`"x^3*y^-1"`, `"e"` for the identity).

use crate::cover::CoverSpec;
use crate::group::{eval_word, FiniteGroup, GroupWord};
use crate::linalg::{Rat, RationalMatrix};
use crate::rep::{rep_from_generators, RationalRep};
use crate::search::{SearchConfig, Strategy};
use crate::symplectic::SymplecticGModule;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("cannot parse input as JSON: {0}")]
    Json(String),
    #[error("cannot parse input as TOML: {0}")]
    Toml(String),
    #[error("unsupported schema_version {0} (this build reads version {SCHEMA_VERSION})")]
    SchemaVersion(u32),
    #[error("field '{field}': {message}")]
    Field { field: String, message: String },
}

fn field_err(field: &str, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Top-level input document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputDoc {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representations: Option<Vec<RepSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigDoc>,
}

fn default_schema_version() -> u32 {
    SCHEMA_VERSION
}

/// Group section: a named family with parameters, an explicit
/// multiplication table, or permutation generators.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Parameter for `cyclic`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Total order for `dihedral`, `semidihedral`, `quaternion`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    /// Factors for `product` (exactly two).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
    /// Explicit multiplication table of element indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    /// Generator indices for an explicit table (optional).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    /// Permutation generators on `0..points`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_names: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepSpec {
    pub label: String,
    /// One matrix per declared generator, entries as `"p/q"` strings.
    pub generators: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverDoc {
    pub genus: usize,
    /// Words in the group's generator names.
    pub monodromy: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub dim: usize,
    pub omega: Vec<Vec<String>>,
    /// One matrix per group element, by element index.
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ConfigDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategies: Option<Vec<String>>,
}

/// Parse a rational written as `"p/q"` or a plain integer string.
pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| format!("bad numerator in '{text}'"))?;
    let d = BigInt::from_str(den).map_err(|_| format!("bad denominator in '{text}'"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in '{text}'"));
    }
    Ok(Rat::new(n, d))
}

/// Serialize a rational as an explicit `"p/q"` string.
pub fn rational_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_matrix(rows: &[Vec<String>], field: &str) -> Result<RationalMatrix, InputError> {
    let parsed: Result<Vec<Vec<Rat>>, String> = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect();
    let parsed = parsed.map_err(|m| field_err(field, m))?;
    if let Some(first) = parsed.first() {
        let w = first.len();
        if parsed.iter().any(|r| r.len() != w) {
            return Err(field_err(field, "ragged matrix rows"));
        }
    }
    Ok(RationalMatrix::from_rows(parsed))
}

pub fn matrix_to_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(rational_to_string).collect())
        .collect()
}

/// Auto-detect JSON vs TOML and parse, with positional diagnostics.
pub fn parse_document(text: &str) -> Result<InputDoc, InputError> {
    let doc: InputDoc = if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| {
            InputError::Json(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?
    } else {
        toml::from_str(text).map_err(|e| InputError::Toml(e.to_string()))?
    };
    if doc.schema_version != SCHEMA_VERSION {
        return Err(InputError::SchemaVersion(doc.schema_version));
    }
    Ok(doc)
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, InputError> {
        let err = |m: String| field_err("group", m);
        if let Some(table) = &self.table {
            let gens = self
                .generators
                .clone()
                .unwrap_or_else(|| (0..table.len()).collect());
            let names = self
                .generator_names
                .clone()
                .unwrap_or_else(|| (0..gens.len()).map(|i| format!("g{i}")).collect());
            return FiniteGroup::from_table(
                table.clone(),
                gens,
                names,
                crate::group::Family::Custom,
            )
            .map_err(|e| err(e.to_string()));
        }
        if let Some(perms) = &self.permutations {
            return FiniteGroup::from_permutations(perms.clone(), self.generator_names.clone())
                .map_err(|e| err(e.to_string()));
        }
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| err("need one of family, table or permutations".into()))?;
        match family {
            "cyclic" => {
                let n = self.n.or(self.order).ok_or_else(|| err("cyclic needs n".into()))?;
                FiniteGroup::cyclic(n).map_err(|e| err(e.to_string()))
            }
            "dihedral" => {
                let o = self.order.ok_or_else(|| err("dihedral needs order".into()))?;
                FiniteGroup::dihedral(o).map_err(|e| err(e.to_string()))
            }
            "semidihedral" => {
                let o = self
                    .order
                    .ok_or_else(|| err("semidihedral needs order".into()))?;
                FiniteGroup::semidihedral(o).map_err(|e| err(e.to_string()))
            }
            "quaternion" => {
                let o = self
                    .order
                    .ok_or_else(|| err("quaternion needs order".into()))?;
                FiniteGroup::quaternion(o).map_err(|e| err(e.to_string()))
            }
            "product" => {
                let f = self
                    .factors
                    .as_ref()
                    .filter(|f| f.len() == 2)
                    .ok_or_else(|| err("product needs exactly two factors".into()))?;
                FiniteGroup::product_of_cyclic(f[0], f[1]).map_err(|e| err(e.to_string()))
            }
            other => Err(err(format!(
                "unknown family '{other}' (cyclic, dihedral, semidihedral, quaternion, product)"
            ))),
        }
    }
}

impl InputDoc {
    pub fn build_group(&self) -> Result<FiniteGroup, InputError> {
        self.group.build()
    }

    /// User-supplied representations, when present, extended from their
    /// generator images and fully validated.
    pub fn build_representations(
        &self,
        group: &FiniteGroup,
    ) -> Result<Option<Vec<RationalRep>>, InputError> {
        let Some(specs) = &self.representations else {
            return Ok(None);
        };
        let mut reps = Vec::with_capacity(specs.len());
        for spec in specs {
            let field = format!("representations.{}", spec.label);
            let images: Result<Vec<RationalMatrix>, InputError> = spec
                .generators
                .iter()
                .map(|m| parse_matrix(m, &field))
                .collect();
            let rep = rep_from_generators(group, &images?, &spec.label)
                .map_err(|e| field_err(&field, e.to_string()))?;
            reps.push(rep);
        }
        Ok(Some(reps))
    }

    pub fn build_cover_spec(&self, group: &FiniteGroup) -> Result<Option<CoverSpec>, InputError> {
        let Some(cover) = &self.cover else {
            return Ok(None);
        };
        let monodromy: Result<Vec<usize>, InputError> = cover
            .monodromy
            .iter()
            .map(|w| {
                let word = GroupWord::parse(w, group.generator_names())
                    .map_err(|m| field_err("cover.monodromy", m))?;
                eval_word(group, &word, group.generators())
                    .map_err(|e| field_err("cover.monodromy", e.to_string()))
            })
            .collect();
        CoverSpec::new(cover.genus, group.clone(), monodromy?)
            .map(Some)
            .map_err(|e| field_err("cover", e.to_string()))
    }

    pub fn build_module(
        &self,
        group: &FiniteGroup,
    ) -> Result<Option<SymplecticGModule>, InputError> {
        let Some(doc) = &self.module else {
            return Ok(None);
        };
        let omega = parse_matrix(&doc.omega, "module.omega")?;
        if doc.action.len() != group.order() {
            return Err(field_err(
                "module.action",
                format!(
                    "need one matrix per group element ({}), got {}",
                    group.order(),
                    doc.action.len()
                ),
            ));
        }
        let action: Result<Vec<RationalMatrix>, InputError> = doc
            .action
            .iter()
            .enumerate()
            .map(|(g, m)| parse_matrix(m, &format!("module.action[{g}]")))
            .collect();
        SymplecticGModule::new(group.clone(), omega, action?)
            .map(Some)
            .map_err(|e| field_err("module", e.to_string()))
    }

    /// Search configuration with CLI-flag overrides applied on top.
    pub fn build_config(&self, overrides: &ConfigDoc) -> Result<SearchConfig, InputError> {
        let mut cfg = SearchConfig::default();
        for layer in [self.config.as_ref(), Some(overrides)].into_iter().flatten() {
            if let Some(seed) = layer.seed {
                cfg.seed = seed;
            }
            if let Some(h) = layer.height_bound {
                cfg.height_bound = h;
            }
            if let Some(m) = layer.max_iterations {
                cfg.max_iterations = m;
            }
            if let Some(strategies) = &layer.strategies {
                let parsed: Result<Vec<Strategy>, String> =
                    strategies.iter().map(|s| s.parse()).collect();
                cfg.strategies = parsed.map_err(|m| field_err("config.strategies", m))?;
            }
        }
        if cfg.height_bound == 0 || cfg.max_iterations == 0 || cfg.strategies.is_empty() {
            return Err(field_err(
                "config",
                "height_bound, max_iterations and strategies must be positive/nonempty",
            ));
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn rational_round_trip() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rational_to_string(&rat(-2, 3)), "-2/3");
        assert_eq!(rational_to_string(&rat(5, 1)), "5/1");
    }

    #[test]
    fn parse_json_document() {
        let text = r#"{
            "group": {"family": "dihedral", "order": 8},
            "cover": {"genus": 2, "monodromy": ["x", "e", "y", "e"]},
            "config": {"seed": 3}
        }"#;
        let doc = parse_document(text).unwrap();
        let group = doc.build_group().unwrap();
        assert_eq!(group.order(), 8);
        let spec = doc.build_cover_spec(&group).unwrap().unwrap();
        assert_eq!(spec.base_genus(), 2);
        let cfg = doc.build_config(&ConfigDoc::default()).unwrap();
        assert_eq!(cfg.seed, 3);
        assert_eq!(cfg.height_bound, 4);
    }

    #[test]
    fn parse_toml_document() {
        let text = r#"
            [group]
            family = "cyclic"
            n = 4

            [cover]
            genus = 1
            monodromy = ["x", "x^2"]
        "#;
        let doc = parse_document(text).unwrap();
        let group = doc.build_group().unwrap();
        assert_eq!(group.order(), 4);
        assert!(doc.build_cover_spec(&group).unwrap().is_some());
    }

    #[test]
    fn json_errors_carry_position() {
        let text = "{\n \"group\": {\"family\": \"cyclic\", \"n\": }\n}";
        let err = parse_document(text).unwrap_err();
        match err {
            InputError::Json(m) => assert!(m.contains("line 2"), "{m}"),
            other => panic!("expected a JSON error, got {other:?}"),
        }
    }

    #[test]
    fn schema_version_is_checked() {
        let text = r#"{"schema_version": 99, "group": {"family": "cyclic", "n": 2}}"#;
        assert!(matches!(
            parse_document(text),
            Err(InputError::SchemaVersion(99))
        ));
    }

    #[test]
    fn explicit_module_document() {
        let text = r#"{
            "group": {"family": "cyclic", "n": 4},
            "module": {
                "dim": 2,
                "omega": [["0", "1"], ["-1", "0"]],
                "action": [
                    [["1", "0"], ["0", "1"]],
                    [["0", "-1"], ["1", "0"]],
                    [["-1", "0"], ["0", "-1"]],
                    [["0", "1"], ["-1", "0"]]
                ]
            }
        }"#;
        let doc = parse_document(text).unwrap();
        let group = doc.build_group().unwrap();
        let module = doc.build_module(&group).unwrap().unwrap();
        assert_eq!(module.dim(), 2);
    }

    #[test]
    fn user_representations_are_validated() {
        let text = r#"{
            "group": {"family": "cyclic", "n": 2},
            "representations": [
                {"label": "sign", "generators": [[["-1"]]]},
                {"label": "trivial", "generators": [[["1"]]]}
            ]
        }"#;
        let doc = parse_document(text).unwrap();
        let group = doc.build_group().unwrap();
        let reps = doc.build_representations(&group).unwrap().unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(|r| r.endo_dim == 1));

        let bad = r#"{
            "group": {"family": "cyclic", "n": 2},
            "representations": [{"label": "broken", "generators": [[["2"]]]}]
        }"#;
        let doc = parse_document(bad).unwrap();
        let group = doc.build_group().unwrap();
        assert!(doc.build_representations(&group).is_err());
    }

    #[test]
    fn permutation_group_document() {
        let text = r#"{
            "group": {"permutations": [[1, 2, 0], [1, 0, 2]], "generator_names": ["r", "s"]},
            "cover": {"genus": 2, "monodromy": ["r", "e", "s", "e"]}
        }"#;
        let doc = parse_document(text).unwrap();
        let group = doc.build_group().unwrap();
        assert_eq!(group.order(), 6);
        assert!(doc.build_cover_spec(&group).unwrap().is_some());
    }
}
