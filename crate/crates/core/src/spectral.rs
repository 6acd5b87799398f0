//! Covering matrices and their spectra.
//!
//! For a graph `G` and a vertex set `Q`, the covering matrix is the
//! adjacency matrix with a unit diagonal entry on every vertex of `Q`
//! (equivalently, a loop of weight 1 on each cover vertex):
//!
//! ```text
//! a_ij = 1  if {v_i, v_j} is an edge
//!        1  if i = j and v_i in Q
//!        0  otherwise
//! ```
//!
//! The matrix is real symmetric, so its spectrum is real. The covering
//! energy is the sum of the absolute eigenvalues. Eigenvalues are computed
//! by cyclic Jacobi sweeps; characteristic polynomials are computed in
//! exact integer arithmetic via the trace recursion (Faddeev–LeVerrier),
//! whose divisions are exact over the integers.

use crate::covering::CoverSet;
use crate::graph::Graph;
use crate::io::display_f64;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

/// Off-diagonal Frobenius norm below which the Jacobi iteration stops.
pub const JACOBI_TOLERANCE: f64 = 1e-12;

/// Maximum number of full Jacobi sweeps before reporting failure.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues closer than this are clustered into one multiplicity group;
/// an order looser than the eigensolver tolerance to absorb rounding.
pub const CLUSTER_TOLERANCE: f64 = 1e-7;

/// Magnitudes below this print as 0 in reports (values are still summed as
/// computed).
pub const DISPLAY_ZERO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralError {
    /// The Jacobi sweeps failed to reach tolerance. Must not happen for
    /// symmetric input; treated as a bug signal.
    ConvergenceFailure { sweeps: usize },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpectralError::ConvergenceFailure { sweeps } => {
                write!(f, "Jacobi iteration did not converge in {sweeps} sweeps")
            }
        }
    }
}

impl std::error::Error for SpectralError {}

/// Dense symmetric matrix with 0/1 entries at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringMatrix {
    n: usize,
    data: Vec<f64>,
}

impl CoveringMatrix {
    /// Builds a matrix from explicit rows; panics unless square and
    /// symmetric. Intended for tests and ad-hoc inputs.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> CoveringMatrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            assert_eq!(row.len(), n, "matrix must be square");
            data.extend_from_slice(row);
        }
        let m = CoveringMatrix { n, data };
        for i in 0..n {
            for j in (i + 1)..n {
                assert_eq!(m.get(i, j), m.get(j, i), "matrix must be symmetric");
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Entries as exact integers; panics if any entry is not integral
    /// (construction from a graph only ever writes 0 and 1).
    fn integer_entries(&self) -> Vec<BigInt> {
        self.data
            .iter()
            .map(|&x| {
                assert!(x.fract() == 0.0, "entry {x} is not an integer");
                BigInt::from(x as i64)
            })
            .collect()
    }
}

/// The covering matrix of `(g, q)`: adjacency plus a unit diagonal on the
/// cover vertices. Defined for any vertex set; `q` need not be a valid
/// covering.
pub fn build_covering_matrix(g: &Graph, q: &CoverSet) -> CoveringMatrix {
    let n = g.vertex_count();
    let mut data = vec![0.0; n * n];
    for &(u, v) in g.edges() {
        data[u * n + v] = 1.0;
        data[v * n + u] = 1.0;
    }
    for &v in q.members() {
        data[v * n + v] = 1.0;
    }
    CoveringMatrix { n, data }
}

/// An eigenvalue cluster: representative value and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// All real eigenvalues, descending, plus their multiplicity clustering.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    clusters: Vec<EigenCluster>,
}

impl Spectrum {
    /// Builds a spectrum from raw eigenvalues (any order); sorts descending
    /// and clusters at [`CLUSTER_TOLERANCE`].
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Spectrum {
        eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let mut clusters: Vec<EigenCluster> = Vec::new();
        let mut start = 0;
        for i in 0..eigenvalues.len() {
            if i + 1 == eigenvalues.len()
                || (eigenvalues[i] - eigenvalues[i + 1]).abs() > CLUSTER_TOLERANCE
            {
                let members = &eigenvalues[start..=i];
                clusters.push(EigenCluster {
                    value: members.iter().sum::<f64>() / members.len() as f64,
                    multiplicity: members.len(),
                });
                start = i + 1;
            }
        }
        Spectrum { eigenvalues, clusters }
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn clusters(&self) -> &[EigenCluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// [`JACOBI_TOLERANCE`]; fails after [`JACOBI_MAX_SWEEPS`] full sweeps.
pub fn eigenvalues_symmetric(m: &CoveringMatrix) -> Result<Spectrum, SpectralError> {
    let n = m.n;
    let mut a = m.data.clone();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off_norm(&a) >= JACOBI_TOLERANCE {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(SpectralError::ConvergenceFailure { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    Ok(Spectrum::from_eigenvalues(
        (0..n).map(|i| a[i * n + i]).collect(),
    ))
}

/// Monic characteristic polynomial with exact integer coefficients, stored
/// descending: `coefficients()[0]` multiplies λ^n, the last entry is the
/// constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Wraps descending coefficients; panics unless monic.
    pub fn from_descending(coeffs: Vec<BigInt>) -> CharPoly {
        assert!(
            coeffs.first().map_or(false, |c| *c == BigInt::from(1)),
            "characteristic polynomial must be monic"
        );
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation in f64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| {
            acc * x + c.to_f64().expect("coefficient fits f64")
        })
    }

    /// |p(x)| scaled by the coefficient magnitude sum Σ|c_i|·t^i at
    /// t = max(|x|, 1), a backward-error style residual for root checking.
    /// The floor at 1 keeps the scale away from zero for roots near the
    /// origin; monic input makes the scale at least 1.
    pub fn scaled_residual(&self, x: f64) -> f64 {
        let t = x.abs().max(1.0);
        let mut value = 0.0f64;
        let mut scale = 0.0f64;
        for c in &self.coeffs {
            let cf = c.to_f64().expect("coefficient fits f64");
            value = value * x + cf;
            scale = scale * t + cf.abs();
        }
        value.abs() / scale
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = mag != BigInt::from(1) || power == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact characteristic polynomial det(λI − M) of an integer matrix via the
/// trace recursion; every division is exact.
pub fn char_poly(m: &CoveringMatrix) -> CharPoly {
    let n = m.n;
    let a = m.integer_entries();
    let at = |i: usize, j: usize| -> &BigInt { &a[i * n + j] };

    let mut coeffs = vec![BigInt::from(1)];
    // aux starts as M_1 = I; after step k it holds M_{k+1}.
    let mut aux: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from((idx / n == idx % n) as i64))
        .collect();
    for k in 1..=n {
        // product = A · M_k
        let mut product = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = at(i, l);
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let m_lj = &aux[l * n + j];
                    if !m_lj.is_zero() {
                        product[i * n + j] += ail * m_lj;
                    }
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| product[i * n + i].clone()).sum();
        let negated = -trace;
        let k_big = BigInt::from(k as i64);
        assert!((&negated % &k_big).is_zero(), "trace recursion division must be exact");
        let ck = negated / k_big;
        coeffs.push(ck.clone());
        if k < n {
            for i in 0..n {
                product[i * n + i] += &ck;
            }
            aux = product;
        }
    }
    CharPoly { coeffs }
}

/// How an energy value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnergyMethod {
    #[serde(rename = "numeric")]
    Numeric,
    #[serde(rename = "closed-form")]
    ClosedForm,
}

/// Covering energy of a cover set: its spectrum and the sum of absolute
/// eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub cover: CoverSet,
    pub spectrum: Spectrum,
    pub energy: f64,
    pub method: EnergyMethod,
}

#[derive(Serialize)]
struct EnergyReportJson<'a> {
    cover: &'a [usize],
    eigenvalues: Vec<f64>,
    energy: f64,
    method: EnergyMethod,
}

impl EnergyReport {
    pub fn new(cover: CoverSet, spectrum: Spectrum, method: EnergyMethod) -> EnergyReport {
        let energy = spectrum.energy();
        EnergyReport { cover, spectrum, energy, method }
    }

    fn display_eigenvalues(&self) -> Vec<f64> {
        self.spectrum
            .eigenvalues()
            .iter()
            .map(|&x| display_f64(x, DISPLAY_ZERO))
            .collect()
    }

    /// JSON with fixed key order and floats at 12 significant digits,
    /// newline-terminated.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(&EnergyReportJson {
            cover: self.cover.members(),
            eigenvalues: self.display_eigenvalues(),
            energy: display_f64(self.energy, DISPLAY_ZERO),
            method: self.method,
        })
        .expect("report serializes");
        s.push('\n');
        s
    }

    /// One CSV row: cover and eigenvalues semicolon-joined, then energy and
    /// method (`cover,eigenvalues,energy,method`).
    pub fn to_csv_row(&self) -> String {
        let cover = self
            .cover
            .members()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let eigs = self
            .display_eigenvalues()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(";");
        format!("{cover},{eigs},{},{}\n", display_f64(self.energy, DISPLAY_ZERO),
            match self.method {
                EnergyMethod::Numeric => "numeric",
                EnergyMethod::ClosedForm => "closed-form",
            })
    }
}

/// Covering energy of `(g, q)`: builds the covering matrix, diagonalizes,
/// and sums absolute eigenvalues.
pub fn covering_energy(g: &Graph, q: &CoverSet) -> Result<EnergyReport, SpectralError> {
    let spectrum = eigenvalues_symmetric(&build_covering_matrix(g, q))?;
    Ok(EnergyReport::new(q.clone(), spectrum, EnergyMethod::Numeric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::CoverSet;
    use crate::families::{gen_star_rays, StarParams};
    use crate::graph::Graph;

    fn star3_m2() -> (Graph, CoverSet) {
        let g = gen_star_rays(StarParams { rays: 2, ray_len: 2 }).unwrap();
        let q = CoverSet::three([0], g.vertex_count()).unwrap();
        (g, q)
    }

    #[test]
    fn covering_matrix_matches_reference_rows() {
        let (g, q) = star3_m2();
        let m = build_covering_matrix(&g, &q);
        let expected = [
            [1.0, 1.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 1.0, 0.0],
            [1.0, 0.0, 0.0, 0.0, 1.0],
            [0.0, 1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0, 0.0],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.get(i, j), expected[i][j], "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn empty_cover_gives_adjacency() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let q = CoverSet::three([], 3).unwrap();
        let m = build_covering_matrix(&g, &q);
        assert_eq!(m.trace(), 0.0);
        assert_eq!(m.get(0, 1), 1.0);

        let single = Graph::new(1, []).unwrap();
        let q1 = CoverSet::three([0], 1).unwrap();
        let m1 = build_covering_matrix(&single, &q1);
        assert_eq!(m1.get(0, 0), 1.0);
    }

    #[test]
    fn eigenvalues_of_single_edge() {
        let m = CoveringMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let s = eigenvalues_symmetric(&m).unwrap();
        assert!((s.eigenvalues()[0] - 1.0).abs() < 1e-12);
        assert!((s.eigenvalues()[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = CoveringMatrix::from_rows(vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ]);
        let s = eigenvalues_symmetric(&m).unwrap();
        assert_eq!(s.eigenvalues(), &[1.0, 0.0, 0.0]);
        assert_eq!(s.clusters().len(), 2);
        assert_eq!(s.clusters()[1].multiplicity, 2);
    }

    #[test]
    fn char_poly_of_reference_matrix() {
        let (g, q) = star3_m2();
        let p = char_poly(&build_covering_matrix(&g, &q));
        let expected: Vec<BigInt> =
            [1, -1, -4, 2, 3, -1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(p.coefficients(), &expected[..]);
        assert_eq!(p.to_string(), "λ^5 - λ^4 - 4λ^3 + 2λ^2 + 3λ - 1");
    }

    #[test]
    fn char_poly_trivial_cases() {
        let zero = CoveringMatrix::from_rows(vec![vec![0.0]]);
        assert_eq!(char_poly(&zero).to_string(), "λ");
        let edge = CoveringMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(char_poly(&edge).to_string(), "λ^2 - 1");
    }

    #[test]
    fn energy_of_claw_with_center() {
        // K_{1,2} with the center covered has energy 3 = sqrt(4*2+1).
        let g = gen_star_rays(StarParams { rays: 2, ray_len: 1 }).unwrap();
        let q = CoverSet::three([0], 3).unwrap();
        let report = covering_energy(&g, &q).unwrap();
        assert!((report.energy - 3.0).abs() < 1e-10);

        let single = Graph::new(1, []).unwrap();
        let empty = CoverSet::three([], 1).unwrap();
        assert!(covering_energy(&single, &empty).unwrap().energy.abs() < 1e-15);
    }

    #[test]
    fn energy_report_serialization() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let q = CoverSet::three([], 2).unwrap();
        let report = covering_energy(&g, &q).unwrap();
        assert_eq!(
            report.to_json_string(),
            "{\"cover\":[],\"eigenvalues\":[1.0,-1.0],\"energy\":2.0,\"method\":\"numeric\"}\n"
        );
        assert_eq!(report.to_csv_row(), ",1;-1,2,numeric\n");
    }
}
