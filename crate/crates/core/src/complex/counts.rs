use super::FacetComplex;
use crate::error::ComplexError;

/// `(f_{-1}, f_0, …, f_{d-1})`: `f_{k-1}` counts faces with `k` symbols.
pub fn f_vector(c: &FacetComplex) -> Vec<u64> {
    let d = c.max_facet_size();
    let mut f = vec![0u64; d + 1];
    for face in c.faces() {
        f[face.len()] += 1;
    }
    f
}

/// `h_0, …, h_d` from `(f_{-1}, …, f_{d-1})`, by unrolling
/// `Σ_i f_{i-1} t^i (1 - t)^{d-i}` one factor of `(1 - t)` at a time.
pub fn h_vector(f: &[u64], d: usize) -> Result<Vec<i64>, ComplexError> {
    if f.len() != d + 1 {
        return Err(ComplexError::InconsistentDimension { len: f.len(), d });
    }
    let mut q = vec![0i64; d + 1];
    q[0] = f[0] as i64;
    for i in 1..=d {
        for k in (1..=i).rev() {
            q[k] -= q[k - 1];
        }
        q[i] += f[i] as i64;
    }
    Ok(q)
}

/// Number of facets of maximal size.
pub fn multiplicity(c: &FacetComplex) -> u64 {
    let d = c.max_facet_size();
    c.facets.iter().filter(|f| f.len() == d).count() as u64
}
