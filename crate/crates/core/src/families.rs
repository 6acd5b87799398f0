//! Graph family generators and closed-form spectra.
//!
//! The generalized star S(m, L) glues m paths of length L at a common
//! center. Two members have closed-form covering spectra under the
//! center-only cover:
//!
//! * rays of length 1 (the star K_{1,m}): eigenvalues (1 ± √(4m+1))/2 and
//!   m−1 zeros, so the energy is √(4m+1);
//! * rays of length 2: eigenvalues ±1 with multiplicity m−1 each, plus the
//!   three real roots of λ³ − λ² − (m+1)λ + 1, so the energy is
//!   2m − 2 + |x₁| + |x₂| + |x₃|.
//!
//! The cubic always falls in the casus irreducibilis here (its discriminant
//! radicand is −108m³ − 351m² − 864m < 0), so roots are computed by the
//! trigonometric method; the radical closed form is kept only as a
//! complex-arithmetic cross-check.

use crate::graph::Graph;
use crate::poly;
use crate::spectral::CharPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyError {
    InvalidParams(String),
    /// The cubic has non-real roots (positive discriminant radicand).
    ComplexRoots { radicand: f64 },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            FamilyError::ComplexRoots { radicand } => {
                write!(f, "cubic has complex roots (radicand {radicand} > 0)")
            }
        }
    }
}

impl std::error::Error for FamilyError {}

/// Parameters of the generalized star: `rays` paths of `ray_len` edges
/// glued at the center, 1 + rays·ray_len vertices in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarParams {
    pub rays: usize,
    pub ray_len: usize,
}

/// Generates the generalized star. Center is vertex 0; the ring-k vertex of
/// ray i (k = 1..=ray_len, i = 1..=rays) is `(k-1)·rays + i`.
pub fn gen_star_rays(p: StarParams) -> Result<Graph, FamilyError> {
    if p.rays < 2 {
        return Err(FamilyError::InvalidParams(format!(
            "star needs at least 2 rays, got {}",
            p.rays
        )));
    }
    if p.ray_len < 1 {
        return Err(FamilyError::InvalidParams("ray length must be at least 1".into()));
    }
    let n = 1 + p.rays * p.ray_len;
    let mut edges = Vec::with_capacity(p.rays * p.ray_len);
    for i in 1..=p.rays {
        edges.push((0, i));
        for k in 2..=p.ray_len {
            edges.push(((k - 2) * p.rays + i, (k - 1) * p.rays + i));
        }
    }
    Ok(Graph::new(n, edges).expect("star construction is valid"))
}

/// Path on n vertices (0-1-2-...).
pub fn gen_path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path construction is valid")
}

/// Complete graph on n vertices.
pub fn gen_complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete construction is valid")
}

/// One G(n, p) sample drawn from the given RNG: each of the C(n,2) pairs is
/// an edge independently with probability p, in fixed pair order.
pub fn sample_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("gnp construction is valid")
}

/// Seeded G(n, p); identical output for identical arguments.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::InvalidParams(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sample_gnp(&mut rng, n, p))
}

/// Coefficients of the monic cubic λ³ + bλ² + cλ + d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CubicCoeffs {
    /// The cubic factor of the rays-of-length-2 spectrum:
    /// λ³ − λ² − (m+1)λ + 1.
    pub fn star3(m: usize) -> CubicCoeffs {
        CubicCoeffs { b: -1.0, c: -((m as f64) + 1.0), d: 1.0 }
    }

    /// Discriminant radicand (2b³ − 9bc + 27d)² − 4(b² − 3c)³; the cubic
    /// has three real roots iff this is ≤ 0.
    pub fn radicand(&self) -> f64 {
        let CubicCoeffs { b, c, d } = *self;
        let d1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
        let d0 = b * b - 3.0 * c;
        d1 * d1 - 4.0 * d0 * d0 * d0
    }
}

/// The three real roots of a monic cubic, descending, by the trigonometric
/// method. Errors with `ComplexRoots` when the discriminant radicand is
/// positive (one real, two complex roots).
pub fn solve_cubic_real(coeffs: CubicCoeffs) -> Result<[f64; 3], FamilyError> {
    let radicand = coeffs.radicand();
    if radicand > 0.0 {
        return Err(FamilyError::ComplexRoots { radicand });
    }
    let CubicCoeffs { b, c, d } = coeffs;
    // Depressed form t³ + pt + q with λ = t − b/3.
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;
    let mut roots = if p == 0.0 {
        // Radicand ≤ 0 forces q = 0 here: a triple root.
        [shift; 3]
    } else {
        let r = 2.0 * (-p / 3.0).sqrt();
        let phi = (3.0 * q / (p * r)).clamp(-1.0, 1.0).acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [
            r * phi.cos() + shift,
            r * (phi - tau).cos() + shift,
            r * (phi - 2.0 * tau).cos() + shift,
        ]
    };
    roots.sort_by(|a, b| b.partial_cmp(a).expect("roots are finite"));
    Ok(roots)
}

/// The radical (Cardano) closed form evaluated with complex intermediates,
/// using the cube roots u, v of ½(Δ₁ ± √(Δ₁² − 4Δ₀³)) and the conjugate
/// unit coefficients (1 ± i√3)/6 for the second and third roots.
///
/// Returns the real parts descending together with the largest imaginary
/// residue, which stays below ~1e−9 whenever the roots are genuinely real.
pub fn cardano_roots(coeffs: CubicCoeffs) -> ([f64; 3], f64) {
    let CubicCoeffs { b, c, d } = coeffs;
    let d1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
    let d0 = b * b - 3.0 * c;
    let s = Complex64::new(d1 * d1 - 4.0 * d0 * d0 * d0, 0.0).sqrt();
    let u = ((Complex64::new(d1, 0.0) + s) / 2.0).cbrt();
    let v = ((Complex64::new(d1, 0.0) - s) / 2.0).cbrt();
    let shift = Complex64::new(-b / 3.0, 0.0);
    let sqrt3 = 3.0f64.sqrt();
    let plus = Complex64::new(1.0, sqrt3) / 6.0;
    let minus = Complex64::new(1.0, -sqrt3) / 6.0;
    let x1 = shift - (u + v) / 3.0;
    let x2 = shift + plus * u + minus * v;
    let x3 = shift + minus * u + plus * v;
    let residue = x1.im.abs().max(x2.im.abs()).max(x3.im.abs());
    let mut roots = [x1.re, x2.re, x3.re];
    roots.sort_by(|a, b| b.partial_cmp(a).expect("roots are finite"));
    (roots, residue)
}

/// Closed-form covering spectrum of the rays-of-length-2 star with the
/// center covered.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    /// Multiplicity of each of the eigenvalues +1 and −1 (m − 1).
    pub pm_one_multiplicity: usize,
    /// Roots of λ³ − λ² − (m+1)λ + 1, descending.
    pub cubic_roots: [f64; 3],
    /// 2m − 2 + |x₁| + |x₂| + |x₃|.
    pub energy: f64,
}

impl ClosedFormSpectrum {
    /// The full eigenvalue list (2m + 1 values), descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all = Vec::with_capacity(2 * self.pm_one_multiplicity + 3);
        all.extend(self.cubic_roots);
        all.extend(std::iter::repeat(1.0).take(self.pm_one_multiplicity));
        all.extend(std::iter::repeat(-1.0).take(self.pm_one_multiplicity));
        all.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        all
    }
}

fn require_star3_m(m: usize) -> Result<(), FamilyError> {
    if m < 2 {
        return Err(FamilyError::InvalidParams(format!(
            "rays-of-length-2 closed forms need m >= 2, got {m}"
        )));
    }
    Ok(())
}

/// Exact characteristic polynomial of the rays-of-length-2 covering matrix
/// (center covered): the expansion of
/// (λ−1)^(m−1) (λ+1)^(m−1) (λ³ − λ² − (m+1)λ + 1).
pub fn star3_char_poly(m: usize) -> Result<CharPoly, FamilyError> {
    require_star3_m(m)?;
    // Ascending coefficient slices.
    let pm = poly::pow(&[BigInt::from(-1), BigInt::from(0), BigInt::from(1)], m - 1);
    let cubic = [
        BigInt::from(1),
        BigInt::from(-((m as i64) + 1)),
        BigInt::from(-1),
        BigInt::from(1),
    ];
    let mut coeffs = poly::mul(&pm, &cubic);
    coeffs.reverse();
    Ok(CharPoly::from_descending(coeffs))
}

/// Closed-form spectrum of the rays-of-length-2 star: ±1 with multiplicity
/// m−1 each plus the three cubic roots.
pub fn star3_spectrum_closed(m: usize) -> Result<ClosedFormSpectrum, FamilyError> {
    require_star3_m(m)?;
    let cubic_roots = solve_cubic_real(CubicCoeffs::star3(m))?;
    let energy = 2.0 * (m as f64) - 2.0 + cubic_roots.iter().map(|x| x.abs()).sum::<f64>();
    Ok(ClosedFormSpectrum {
        pm_one_multiplicity: m - 1,
        cubic_roots,
        energy,
    })
}

/// Closed-form covering energy of the rays-of-length-2 star:
/// 2m − 2 + |x₁| + |x₂| + |x₃|.
pub fn star3_energy_closed(m: usize) -> Result<f64, FamilyError> {
    Ok(star3_spectrum_closed(m)?.energy)
}

/// Closed-form covering spectrum of K_{1,m} with the center covered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Star1ClosedForm {
    /// √(4m + 1).
    pub energy: f64,
    /// (1 + √(4m+1))/2.
    pub eigenvalue_pos: f64,
    /// (1 − √(4m+1))/2.
    pub eigenvalue_neg: f64,
    /// m − 1 zero eigenvalues.
    pub zero_multiplicity: usize,
}

/// Closed form for K_{1,m}, exposed for m ≥ 3; smaller stars go through the
/// generic numeric path.
pub fn star1_energy_closed(m: usize) -> Result<Star1ClosedForm, FamilyError> {
    if m < 3 {
        return Err(FamilyError::InvalidParams(format!(
            "K_{{1,m}} closed form is exposed for m >= 3, got {m}"
        )));
    }
    let root = (4.0 * m as f64 + 1.0).sqrt();
    Ok(Star1ClosedForm {
        energy: root,
        eigenvalue_pos: (1.0 + root) / 2.0,
        eigenvalue_neg: (1.0 - root) / 2.0,
        zero_multiplicity: m - 1,
    })
}

/// Two evaluations of the discriminant radicand of the rays-of-length-2
/// cubic at its coefficients b = −1, c = −(m+1), d = 1.
///
/// `simplified_radicand` is the widely quoted simplification
/// 27m³ + 189m² − 144m + 308; `expanded_radicand` is the direct expansion
/// (16 − 9m)² − 4(3m + 4)³, which collapses to −108m³ − 351m² − 864m. The
/// two disagree for every m ≥ 2, and only the direct expansion is negative
/// as three real eigenvalues of a symmetric matrix require, so the
/// simplified form is unusable for computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RadicandReport {
    pub m: usize,
    pub simplified_radicand: i64,
    pub expanded_radicand: i64,
    /// The collapsed polynomial −108m³ − 351m² − 864m, always equal to
    /// `expanded_radicand`.
    pub expanded_polynomial: i64,
    pub agree: bool,
    pub expanded_negative: bool,
}

impl RadicandReport {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Evaluates both radicand forms at `m` (integer arithmetic) and flags
/// whether they agree.
pub fn radicand_discrepancy_report(m: usize) -> RadicandReport {
    assert!(m >= 2, "radicand report needs m >= 2, got {m}");
    let mi = m as i64;
    let simplified = 27 * mi.pow(3) + 189 * mi.pow(2) - 144 * mi + 308;
    let expanded = (16 - 9 * mi).pow(2) - 4 * (3 * mi + 4).pow(3);
    let polynomial = -108 * mi.pow(3) - 351 * mi.pow(2) - 864 * mi;
    RadicandReport {
        m,
        simplified_radicand: simplified,
        expanded_radicand: expanded,
        expanded_polynomial: polynomial,
        agree: simplified == expanded,
        expanded_negative: expanded < 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen from the bisection oracle over λ³ − λ² − 3λ + 1 (see the
    // integration-test support module); the three real roots for m = 2.
    pub(crate) const M2_ROOTS: [f64; 3] =
        [2.1700864866260337, 0.3111078174659819, -1.4811943040920156];
    pub(crate) const M2_ENERGY: f64 = 5.962388608184031;

    #[test]
    fn star_generator_shapes() {
        // Two rays of length 2 glue into a path on five vertices.
        let p5 = gen_star_rays(StarParams { rays: 2, ray_len: 2 }).unwrap();
        assert_eq!(p5.vertex_count(), 5);
        assert!(p5.is_connected());
        let mut degrees: Vec<usize> = p5.vertices().map(|v| p5.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);

        let claw = gen_star_rays(StarParams { rays: 3, ray_len: 1 }).unwrap();
        assert_eq!(claw.edges(), &[(0, 1), (0, 2), (0, 3)]);

        let wide = gen_star_rays(StarParams { rays: 4, ray_len: 2 }).unwrap();
        assert_eq!(wide.vertex_count(), 9);
        assert_eq!(wide.degree(0), 4);

        assert!(gen_star_rays(StarParams { rays: 1, ray_len: 2 }).is_err());
        assert!(gen_star_rays(StarParams { rays: 2, ray_len: 0 }).is_err());
    }

    #[test]
    fn standard_generators() {
        assert_eq!(gen_path(3).enumerate_p3().len(), 1);
        assert_eq!(gen_complete(3).edge_count(), 3);
        let a = gen_random(8, 0.3, 42).unwrap();
        let b = gen_random(8, 0.3, 42).unwrap();
        assert_eq!(a, b);
        assert!(gen_random(8, 1.5, 42).is_err());
        assert_eq!(gen_random(8, 1.0, 1).unwrap().edge_count(), 28);
    }

    #[test]
    fn cubic_with_integer_roots() {
        let roots = solve_cubic_real(CubicCoeffs { b: -6.0, c: 11.0, d: -6.0 }).unwrap();
        for (computed, expected) in roots.iter().zip([3.0, 2.0, 1.0]) {
            assert!((computed - expected).abs() < 1e-12, "{roots:?}");
        }
    }

    #[test]
    fn cubic_star3_m2_roots() {
        let roots = solve_cubic_real(CubicCoeffs::star3(2)).unwrap();
        for (computed, frozen) in roots.iter().zip(M2_ROOTS) {
            assert!((computed - frozen).abs() < 1e-12, "{roots:?}");
        }
    }

    #[test]
    fn cubic_rejects_complex_roots() {
        // λ³ + λ has roots 0, ±i.
        let err = solve_cubic_real(CubicCoeffs { b: 0.0, c: 1.0, d: 0.0 }).unwrap_err();
        assert!(matches!(err, FamilyError::ComplexRoots { .. }));
    }

    #[test]
    fn cubic_vieta_for_star_family() {
        for m in 2..=50 {
            let roots = solve_cubic_real(CubicCoeffs::star3(m)).unwrap();
            let sum: f64 = roots.iter().sum();
            let product: f64 = roots.iter().product();
            let pairs = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
            assert!((sum - 1.0).abs() < 1e-10, "m={m}");
            assert!((product + 1.0).abs() < 1e-10, "m={m}");
            assert!((pairs + (m as f64 + 1.0)).abs() < 1e-10, "m={m}");
        }
    }

    #[test]
    fn cardano_cross_check() {
        for m in 2..=50 {
            let trig = solve_cubic_real(CubicCoeffs::star3(m)).unwrap();
            let (radical, residue) = cardano_roots(CubicCoeffs::star3(m));
            assert!(residue < 1e-9, "m={m}: residue {residue}");
            for (a, b) in trig.iter().zip(radical) {
                assert!((a - b).abs() < 1e-9, "m={m}: {trig:?} vs {radical:?}");
            }
        }
        // Sanity on a cubic with known roots.
        let (roots, residue) = cardano_roots(CubicCoeffs { b: -6.0, c: 11.0, d: -6.0 });
        assert!(residue < 1e-9);
        assert!((roots[0] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn char_poly_expansions() {
        let p2 = star3_char_poly(2).unwrap();
        let expected2: Vec<BigInt> =
            [1, -1, -4, 2, 3, -1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(p2.coefficients(), &expected2[..]);

        let p3 = star3_char_poly(3).unwrap();
        let expected3: Vec<BigInt> = [1, -1, -6, 3, 9, -3, -4, 1]
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        assert_eq!(p3.coefficients(), &expected3[..]);

        assert!(star3_char_poly(1).is_err());
    }

    #[test]
    fn char_poly_trace_coefficient() {
        // Coefficient of λ^(2m) is −1: the covering matrix has trace 1.
        for m in 2..=10 {
            let p = star3_char_poly(m).unwrap();
            assert_eq!(p.coefficients()[1], BigInt::from(-1), "m={m}");
        }
    }

    #[test]
    fn closed_spectrum_shape() {
        let s = star3_spectrum_closed(4).unwrap();
        assert_eq!(s.pm_one_multiplicity, 3);
        assert_eq!(s.eigenvalues().len(), 9);
        assert!((s.energy - star3_energy_closed(4).unwrap()).abs() < 1e-15);

        let m2 = star3_spectrum_closed(2).unwrap();
        assert!((m2.energy - M2_ENERGY).abs() < 1e-12);
        // Energy strictly exceeds 2m − 2: zero is never a root (constant
        // term 1).
        for m in 2..=30 {
            let e = star3_energy_closed(m).unwrap();
            assert!(e > 2.0 * m as f64 - 2.0, "m={m}");
        }
    }

    #[test]
    fn star1_closed_form() {
        let m6 = star1_energy_closed(6).unwrap();
        assert!((m6.energy - 5.0).abs() < 1e-12);
        let m3 = star1_energy_closed(3).unwrap();
        assert!((m3.energy - 13.0f64.sqrt()).abs() < 1e-12);
        assert!((m3.eigenvalue_pos + m3.eigenvalue_neg - 1.0).abs() < 1e-12);
        assert!(star1_energy_closed(2).is_err());
    }

    #[test]
    fn radicand_reports() {
        let r2 = radicand_discrepancy_report(2);
        assert_eq!(r2.expanded_radicand, -3996);
        assert_eq!(r2.simplified_radicand, 992);
        assert!(!r2.agree);
        assert!(r2.expanded_negative);
        assert_eq!(r2.expanded_polynomial, -3996);

        let r3 = radicand_discrepancy_report(3);
        assert_eq!(r3.expanded_radicand, -8667);

        assert_eq!(
            r2.to_json_string(),
            "{\"m\":2,\"simplified_radicand\":992,\"expanded_radicand\":-3996,\
             \"expanded_polynomial\":-3996,\"agree\":false,\"expanded_negative\":true}\n"
        );
    }
}
