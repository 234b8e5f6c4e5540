//! Subcommand pipelines: parse documents, run the requested operation,
//! and assemble a [`RunReport`]. Exit codes: 0 when every verdict
//! passes, 1 for a verified negative or exhaustion, 2 for input errors.

use crate::cover::{build_cover, cohomology_module};
use crate::group::FiniteGroup;
use crate::input::{
    parse_document, parse_matrix, rational_to_string, ConfigDoc, InputDoc, InputError,
};
use crate::linalg::Subspace;
use crate::rep::{catalog_reps, RationalRep, RepError};
use crate::report::{
    BlockEntry, CellCounts, CertificateDoc, ExhaustionDoc, RunReport, TraceEntry, WittDoc,
};
use crate::search::{
    find_invariant_lagrangian, isotypic_blocks, verify_certificate, witt_equivalent, SearchOutcome,
};
use crate::symplectic::SymplecticGModule;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{0}")]
    Input(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl From<InputError> for PipelineError {
    fn from(e: InputError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn input_err(m: impl Into<String>) -> PipelineError {
    PipelineError::Input(m.into())
}

/// Search failures caused by the input (incomplete user catalogs, group
/// mismatches) are input errors; the rest are internal.
fn search_err(e: crate::search::SearchError) -> PipelineError {
    use crate::search::SearchError;
    match e {
        SearchError::Rep(inner) => PipelineError::Input(inner.to_string()),
        SearchError::Module(crate::symplectic::ModuleError::GroupMismatch) => {
            PipelineError::Input(e.to_string())
        }
        other => PipelineError::Internal(other.to_string()),
    }
}

fn echo(doc: &InputDoc) -> serde_json::Value {
    serde_json::to_value(doc).unwrap_or(serde_json::Value::Null)
}

/// Catalog resolution: user representations win, then the built-in
/// catalogs; groups without either run catalog-free.
fn resolve_reps(
    doc: &InputDoc,
    group: &FiniteGroup,
) -> Result<Option<Vec<RationalRep>>, PipelineError> {
    if let Some(user) = doc.build_representations(group)? {
        return Ok(Some(user));
    }
    match catalog_reps(group) {
        Ok(reps) => Ok(Some(reps)),
        Err(RepError::UnsupportedFamily(_)) => Ok(None),
        Err(e) => Err(input_err(e.to_string())),
    }
}

/// The module a document denotes: an explicit `module` section or the
/// cohomology module of its `cover` section.
fn resolve_module(
    doc: &InputDoc,
    group: &FiniteGroup,
) -> Result<SymplecticGModule, PipelineError> {
    if let Some(module) = doc.build_module(group)? {
        return Ok(module);
    }
    let spec = doc
        .build_cover_spec(group)?
        .ok_or_else(|| input_err("document needs a 'cover' or 'module' section"))?;
    let complex = build_cover(spec).map_err(|e| input_err(e.to_string()))?;
    cohomology_module(&complex).map_err(|e| PipelineError::Internal(e.to_string()))
}

fn element_legend(group: &FiniteGroup) -> Vec<String> {
    group.elements().map(|g| group.element_name(g)).collect()
}

/// `cover`: build the complex, report cell counts, χ, module dimension
/// and the deck-action traces.
pub fn run_cover(text: &str) -> Result<RunReport, PipelineError> {
    let doc = parse_document(text)?;
    let group = doc.build_group()?;
    let spec = doc
        .build_cover_spec(&group)?
        .ok_or_else(|| input_err("'cover' section is required"))?;
    let mut report = RunReport::new("cover", doc.build_config(&ConfigDoc::default())?.seed, echo(&doc));
    let complex = build_cover(spec).map_err(|e| input_err(e.to_string()))?;
    report.outputs.cell_counts = Some(CellCounts {
        vertices: complex.vertex_count(),
        edges: complex.edge_count(),
        faces: complex.triangle_count(),
        euler_characteristic: complex.euler_characteristic(),
    });
    let module = cohomology_module(&complex).map_err(|e| PipelineError::Internal(e.to_string()))?;
    report.outputs.module_dim = Some(module.dim());
    report.outputs.element_legend = Some(element_legend(&group));
    report.outputs.traces = Some(
        group
            .elements()
            .map(|g| TraceEntry {
                element: g,
                name: group.element_name(g),
                trace: rational_to_string(&module.action(g).trace()),
            })
            .collect(),
    );
    report.verdict(
        "complex-invariants",
        true,
        format!(
            "V={} E={} F={} chi={}",
            complex.vertex_count(),
            complex.edge_count(),
            complex.triangle_count(),
            complex.euler_characteristic()
        ),
    );
    report.verdict(
        "module-built",
        true,
        format!("dimension {}", module.dim()),
    );
    Ok(report)
}

/// `find-lagrangian`: the full pipeline, emitting a certificate or an
/// exhaustion report.
pub fn run_find_lagrangian(text: &str, overrides: &ConfigDoc) -> Result<RunReport, PipelineError> {
    let doc = parse_document(text)?;
    let group = doc.build_group()?;
    let cfg = doc.build_config(overrides)?;
    let mut report = RunReport::new("find-lagrangian", cfg.seed, echo(&doc));
    let module = resolve_module(&doc, &group)?;
    let reps = resolve_reps(&doc, &group)?;
    report.outputs.module_dim = Some(module.dim());
    report.outputs.element_legend = Some(element_legend(&group));
    if let Some(reps) = &reps {
        let decomposition =
            isotypic_blocks(&module, reps).map_err(search_err)?;
        report.outputs.blocks = Some(
            decomposition
                .blocks
                .iter()
                .map(|b| BlockEntry {
                    label: b.label.clone(),
                    dim: b.subspace.dim(),
                })
                .collect(),
        );
    }
    let outcome = find_invariant_lagrangian(&module, reps.as_deref(), &cfg)
        .map_err(search_err)?;
    match outcome {
        SearchOutcome::Found(cert) => {
            let recheck = verify_certificate(&module, &cert.lagrangian);
            report.outputs.certificate = Some(CertificateDoc::from_certificate(&cert));
            report.verdict(
                "invariant-lagrangian-found",
                recheck.is_ok(),
                format!("dimension {} [{}]", cert.lagrangian.dim(), cert.provenance),
            );
        }
        SearchOutcome::Exhausted(r) => {
            report.outputs.exhaustion = Some(ExhaustionDoc::from_report(&r));
            report.verdict(
                "invariant-lagrangian-found",
                false,
                format!(
                    "exhausted after {} candidates (height bound {}, complete: {})",
                    r.candidates_tried, r.height_bound, r.enumeration_complete
                ),
            );
        }
    }
    Ok(report)
}

/// Minimal certificate file: either a full report containing
/// `outputs.certificate` or a bare `{"lagrangian": [[..]]}` object.
#[derive(Deserialize)]
struct BareCertificate {
    lagrangian: Vec<Vec<String>>,
}

fn parse_certificate_rows(text: &str) -> Result<Vec<Vec<String>>, PipelineError> {
    if let Ok(report) = serde_json::from_str::<RunReport>(text) {
        if let Some(cert) = report.outputs.certificate {
            return Ok(cert.lagrangian);
        }
    }
    let bare: BareCertificate = serde_json::from_str(text)
        .map_err(|e| input_err(format!("certificate file: {e}")))?;
    Ok(bare.lagrangian)
}

/// `verify`: re-check a claimed certificate against a document's module.
pub fn run_verify(text: &str, certificate_text: &str) -> Result<RunReport, PipelineError> {
    let doc = parse_document(text)?;
    let group = doc.build_group()?;
    let mut report = RunReport::new("verify", doc.build_config(&ConfigDoc::default())?.seed, echo(&doc));
    let module = resolve_module(&doc, &group)?;
    let rows = parse_certificate_rows(certificate_text)?;
    let matrix = parse_matrix(&rows, "certificate.lagrangian")?;
    if matrix.rows() == 0 || matrix.cols() != module.dim() {
        report.verdict(
            "certificate-verified",
            module.dim() == 0 && matrix.rows() == 0,
            format!(
                "certificate has ambient {} but module has dimension {}",
                matrix.cols(),
                module.dim()
            ),
        );
        return Ok(report);
    }
    let subspace = Subspace::from_matrix_rows(module.dim(), &matrix);
    if subspace.dim() != matrix.rows() {
        report.verdict(
            "certificate-verified",
            false,
            "certificate rows are linearly dependent",
        );
        return Ok(report);
    }
    match verify_certificate(&module, &subspace) {
        Ok(cert) => {
            report.outputs.certificate = Some(CertificateDoc::from_certificate(&cert));
            report.verdict(
                "certificate-verified",
                true,
                format!("dimension {}", cert.lagrangian.dim()),
            );
        }
        Err(failure) => {
            report.verdict("certificate-verified", false, failure.to_string());
        }
    }
    Ok(report)
}

/// `witt-equiv`: compare the modules of two documents over the same
/// group.
pub fn run_witt_equiv(
    text_left: &str,
    text_right: &str,
    overrides: &ConfigDoc,
) -> Result<RunReport, PipelineError> {
    let doc_left = parse_document(text_left)?;
    let doc_right = parse_document(text_right)?;
    let group = doc_left.build_group()?;
    let group_right = doc_right.build_group()?;
    if group != group_right {
        return Err(input_err("the two documents use different groups"));
    }
    let cfg = doc_left.build_config(overrides)?;
    let mut report = RunReport::new("witt-equiv", cfg.seed, echo(&doc_left));
    let left = resolve_module(&doc_left, &group)?;
    let right = resolve_module(&doc_right, &group)?;
    let reps = resolve_reps(&doc_left, &group)?;
    let outcome = witt_equivalent(&left, &right, reps.as_deref(), &cfg)
        .map_err(search_err)?;
    report.outputs.witt = Some(WittDoc {
        equivalent: outcome.equivalent,
        sum_dim: outcome.sum_dim,
    });
    if let Some(cert) = &outcome.certificate {
        report.outputs.certificate = Some(CertificateDoc::from_certificate(cert));
    }
    if let Some(r) = &outcome.exhaustion {
        report.outputs.exhaustion = Some(ExhaustionDoc::from_report(r));
    }
    report.verdict(
        "witt-equivalent",
        outcome.equivalent,
        if outcome.equivalent {
            format!("verified on the sum module of dimension {}", outcome.sum_dim)
        } else {
            "search exhausted; equivalence is undecided (semi-decision)".to_string()
        },
    );
    Ok(report)
}

/// `chevalley-weil`: trace-identity report for a cover document.
pub fn run_chevalley_weil(text: &str) -> Result<RunReport, PipelineError> {
    let doc = parse_document(text)?;
    let group = doc.build_group()?;
    let spec = doc
        .build_cover_spec(&group)?
        .ok_or_else(|| input_err("'cover' section is required"))?;
    let genus = spec.base_genus();
    let mut report = RunReport::new("chevalley-weil", doc.build_config(&ConfigDoc::default())?.seed, echo(&doc));
    let complex = build_cover(spec).map_err(|e| input_err(e.to_string()))?;
    let module = cohomology_module(&complex).map_err(|e| PipelineError::Internal(e.to_string()))?;
    report.outputs.module_dim = Some(module.dim());
    report.outputs.element_legend = Some(element_legend(&group));
    let expected_dim = 2 + (2 * genus - 2) * group.order();
    let mut all_match = true;
    let mut traces = Vec::new();
    for g in group.elements() {
        let trace = module.action(g).trace();
        let want = if g == group.identity() {
            expected_dim as i64
        } else {
            2
        };
        if trace != crate::linalg::rint(want) {
            all_match = false;
        }
        traces.push(TraceEntry {
            element: g,
            name: group.element_name(g),
            trace: rational_to_string(&trace),
        });
    }
    report.outputs.traces = Some(traces);
    report.verdict(
        "trace-identity",
        all_match,
        format!(
            "expected {} at the identity and 2 elsewhere",
            expected_dim
        ),
    );
    Ok(report)
}

/// `corpus`: the built-in acceptance corpus, one verdict per criterion.
pub fn run_corpus(seed: u64) -> Result<RunReport, PipelineError> {
    let mut report = RunReport::new("corpus", seed, serde_json::Value::Null);
    let outcomes = crate::corpus::run_all_criteria(seed);
    for outcome in &outcomes {
        let failures: Vec<&str> = outcome
            .cases
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        report.verdict(
            &outcome.criterion,
            outcome.passed,
            if failures.is_empty() {
                format!("{} cases", outcome.cases.len())
            } else {
                format!("failing: {}", failures.join(", "))
            },
        );
    }
    report.outputs.corpus = Some(outcomes);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D8_COVER: &str = r#"{
        "group": {"family": "dihedral", "order": 8},
        "cover": {"genus": 2, "monodromy": ["x", "e", "y", "e"]}
    }"#;

    #[test]
    fn cover_pipeline_reports_counts() {
        let report = run_cover(D8_COVER).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.outputs.module_dim, Some(18));
        let counts = report.outputs.cell_counts.unwrap();
        assert_eq!(counts.vertices, 8);
        assert_eq!(counts.edges, 8 * 9);
        assert_eq!(counts.faces, 8 * 6);
    }

    #[test]
    fn find_pipeline_produces_certificate() {
        let report = run_find_lagrangian(D8_COVER, &ConfigDoc::default()).unwrap();
        assert_eq!(report.exit_code(), 0);
        let cert = report.outputs.certificate.unwrap();
        assert_eq!(cert.dim, 9);
        let blocks = report.outputs.blocks.unwrap();
        assert_eq!(blocks.iter().map(|b| b.dim).sum::<usize>(), 18);
    }

    #[test]
    fn verify_round_trip_and_tamper() {
        let report = run_find_lagrangian(D8_COVER, &ConfigDoc::default()).unwrap();
        let report_text = serde_json::to_string(&report).unwrap();
        let verified = run_verify(D8_COVER, &report_text).unwrap();
        assert_eq!(verified.exit_code(), 0);

        // Tamper with one entry of the certificate.
        let mut tampered: RunReport = serde_json::from_str(&report_text).unwrap();
        let cert = tampered.outputs.certificate.as_mut().unwrap();
        cert.lagrangian[0][0] = "7/1".to_string();
        let tampered_text = serde_json::to_string(&tampered).unwrap();
        let failed = run_verify(D8_COVER, &tampered_text).unwrap();
        assert_eq!(failed.exit_code(), 1);
        assert!(!failed.verdicts[0].pass);
    }

    #[test]
    fn chevalley_weil_pipeline() {
        let report = run_chevalley_weil(D8_COVER).unwrap();
        assert_eq!(report.exit_code(), 0);
        let traces = report.outputs.traces.unwrap();
        assert_eq!(traces.len(), 8);
        assert_eq!(traces[0].trace, "18/1");
        assert!(traces[1..].iter().all(|t| t.trace == "2/1"));
    }

    #[test]
    fn witt_pipeline_on_pair() {
        let right = r#"{
            "group": {"family": "dihedral", "order": 8},
            "cover": {"genus": 2, "monodromy": ["y", "e", "x*y", "e"]}
        }"#;
        let report = run_witt_equiv(D8_COVER, right, &ConfigDoc::default()).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert!(report.outputs.witt.unwrap().equivalent);
    }

    #[test]
    fn negative_module_exits_one() {
        let doc = r#"{
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
            },
            "config": {"height_bound": 10}
        }"#;
        let report = run_find_lagrangian(doc, &ConfigDoc::default()).unwrap();
        assert_eq!(report.exit_code(), 1);
        let exhaustion = report.outputs.exhaustion.unwrap();
        assert!(exhaustion.enumeration_complete);
    }

    #[test]
    fn bad_inputs_are_input_errors() {
        assert!(run_cover("{ not json").is_err());
        let bad_cover = r#"{
            "group": {"family": "cyclic", "n": 2},
            "cover": {"genus": 1, "monodromy": ["e", "e"]}
        }"#;
        let err = run_cover(bad_cover).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("generate"));
    }

    #[test]
    fn determinism_modulo_timing() {
        let a = run_find_lagrangian(D8_COVER, &ConfigDoc::default()).unwrap();
        let b = run_find_lagrangian(D8_COVER, &ConfigDoc::default()).unwrap();
        let mut ja = serde_json::to_value(&a).unwrap();
        let mut jb = serde_json::to_value(&b).unwrap();
        ja["timing_ms"] = 0.into();
        jb["timing_ms"] = 0.into();
        assert_eq!(
            serde_json::to_string(&ja).unwrap(),
            serde_json::to_string(&jb).unwrap()
        );
    }
}
