use serde::{Deserialize, Serialize};

use crate::complex::{
    f_vector, h_vector, initial_complex, multiplicity, s2_report, S2Options, S2Verdict,
};
use crate::error::PipelineError;
use crate::graph::{canonical_certificate, encode_graph6, Certificate, Graph, VertexSet};
use crate::ideal::{accessibility, is_decomposable, Accessibility, SuCache};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Evaluate (S2) through links of `Δ_<`.
    pub s2: bool,
    /// Record the f- and h-vector and multiplicity of `Δ_<`.
    pub complex: bool,
}

/// Evidence attached to a record that fails a stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Cutset(VertexSet),
    Face(String),
}

/// One classified graph. Stages after the first failing filter are `None`
/// and serialise as `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub certificate: Certificate,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub indecomposable: bool,
    pub unmixed: Option<bool>,
    pub accessible: Option<bool>,
    pub strongly_unmixed: Option<bool>,
    pub s2: Option<bool>,
    pub f_vector: Option<Vec<u64>>,
    pub h_vector: Option<Vec<i64>>,
    pub multiplicity: Option<u64>,
    pub witness: Option<Witness>,
}

impl ClassRecord {
    /// Survived (S2): indecomposable and unmixed.
    pub fn kept(&self) -> bool {
        self.indecomposable && self.unmixed == Some(true)
    }
}

/// Runs the stages in order on a connected graph: decomposability, then
/// unmixedness, then accessibility, strong unmixedness and, when asked,
/// (S2). Decomposable and mixed graphs stop early. Strong unmixedness and
/// (S2) are evaluated on every graph that survives, accessible or not, so
/// that both implications toward accessibility are exercised.
pub fn classify(
    g: &Graph,
    opts: &ClassifyOptions,
    cache: &SuCache,
) -> Result<ClassRecord, PipelineError> {
    let graph6 = encode_graph6(g)?;
    if !g.is_connected() {
        return Err(crate::error::GraphError::Disconnected.into());
    }
    let mut rec = ClassRecord {
        certificate: canonical_certificate(g)?,
        graph6,
        n: g.n(),
        edge_count: g.edge_count(),
        indecomposable: !is_decomposable(g),
        unmixed: None,
        accessible: None,
        strongly_unmixed: None,
        s2: None,
        f_vector: None,
        h_vector: None,
        multiplicity: None,
        witness: None,
    };
    if opts.complex {
        let c = initial_complex(g);
        let f = f_vector(&c);
        let d = f.len() - 1;
        rec.h_vector = Some(h_vector(&f, d).expect("f-vector length is d + 1"));
        rec.f_vector = Some(f);
        rec.multiplicity = Some(multiplicity(&c));
    }
    if !rec.indecomposable {
        return Ok(rec);
    }
    let access = accessibility(g);
    rec.unmixed = Some(access.is_unmixed());
    if let Accessibility::NotUnmixed(t) = access {
        rec.witness = Some(Witness::Cutset(t));
        return Ok(rec);
    }
    rec.accessible = Some(access.is_accessible());
    if let Accessibility::NotAccessible(t) = access {
        rec.witness = Some(Witness::Cutset(t));
    }
    rec.strongly_unmixed = Some(cache.is_strongly_unmixed(g));
    if opts.s2 {
        let report = s2_report(g, &S2Options::default());
        rec.s2 = Some(report.holds());
        if let (S2Verdict::DisconnectedLink(face), None) = (report.verdict, &rec.witness) {
            rec.witness = Some(Witness::Face(face.display(g.n())));
        }
    }
    check_implications(&rec)?;
    Ok(rec)
}

fn check_implications(rec: &ClassRecord) -> Result<(), PipelineError> {
    let contradiction = |detail: &str| PipelineError::Contradiction {
        graph6: rec.graph6.clone(),
        detail: format!("{detail}; witness {:?}", rec.witness),
    };
    if rec.accessible == Some(true) && rec.unmixed != Some(true) {
        return Err(contradiction("accessible but not unmixed"));
    }
    if rec.strongly_unmixed == Some(true) && rec.accessible != Some(true) {
        return Err(contradiction("strongly unmixed but not accessible"));
    }
    if rec.s2 == Some(true) && rec.accessible != Some(true) {
        return Err(contradiction("(S2) but not accessible"));
    }
    Ok(())
}
