use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::PipelineError;
use crate::graph::{canonical_form, decode_graph6, encode_graph6, Certificate, Graph};

/// Largest order the internal generator builds.
pub const MAX_GENERATED: usize = 9;

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by certificate.
///
/// Every connected graph has a vertex whose deletion leaves it connected,
/// so extending each class on `n - 1` vertices by a vertex with every
/// nonempty neighbourhood reaches every class on `n`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, PipelineError> {
    if n > MAX_GENERATED {
        return Err(PipelineError::GeneratorLimit {
            n,
            max: MAX_GENERATED,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<Certificate, Graph> = BTreeMap::new();
        for h in &level {
            for nb in 1u64..1 << k {
                let mut rows = h.rows().to_vec();
                rows.push(nb);
                for v in 0..k {
                    if nb >> v & 1 == 1 {
                        rows[v] |= 1 << k;
                    }
                }
                let g = Graph::from_rows(rows)?;
                let (canon, _) = canonical_form(&g)?;
                let cert = certificate_of(&canon);
                next.entry(cert).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Certificate of a graph already in canonical form.
fn certificate_of(canon: &Graph) -> Certificate {
    let line = encode_graph6(canon).expect("canonical forms fit graph6");
    Certificate::from_canonical_graph6(&line).expect("encoder output is printable")
}

/// Connected graphs on `n` vertices read from a graph6 file, one per
/// isomorphism class, sorted by certificate. Blank lines and lines starting
/// with `>` or `#` are skipped.
pub fn read_graph6_file(path: &Path, n: usize) -> Result<Vec<Graph>, PipelineError> {
    let text = fs::read_to_string(path)?;
    let mut out: BTreeMap<Certificate, Graph> = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('>') || line.starts_with('#') {
            continue;
        }
        let g = decode_graph6(line.as_bytes())?;
        if g.n() != n {
            return Err(PipelineError::WrongOrder {
                graph6: line.to_string(),
                got: g.n(),
                expected: n,
            });
        }
        if !g.is_connected() {
            continue;
        }
        let (canon, _) = canonical_form(&g)?;
        out.entry(certificate_of(&canon)).or_insert(canon);
    }
    Ok(out.into_values().collect())
}
