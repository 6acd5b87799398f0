//! Test-only oracles, independent of the implementation paths they check.

// Each integration test target compiles this module separately and uses a
// different subset of it.
#![allow(dead_code)]

use cover_energy::Graph;
use std::collections::BTreeSet;

/// Evaluates a polynomial given by descending coefficients.
pub fn poly_eval(coeffs_desc: &[f64], x: f64) -> f64 {
    coeffs_desc.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// All real roots of a squarefree polynomial by scanning a uniform grid
/// over the Cauchy bound for sign changes and bisecting each bracket.
/// Returned ascending.
pub fn real_roots_bisection(coeffs_desc: &[f64], steps: usize) -> Vec<f64> {
    assert!(coeffs_desc[0] != 0.0, "leading coefficient must be nonzero");
    let lead = coeffs_desc[0];
    let bound = 1.0
        + coeffs_desc[1..]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut roots = Vec::new();
    let mut prev_x = -bound;
    let mut prev_f = poly_eval(coeffs_desc, prev_x);
    for i in 1..=steps {
        let x = -bound + 2.0 * bound * (i as f64) / (steps as f64);
        let f = poly_eval(coeffs_desc, x);
        if prev_f == 0.0 {
            roots.push(prev_x);
        } else if f != 0.0 && prev_f.signum() != f.signum() {
            let (mut lo, mut hi, mut flo) = (prev_x, x, prev_f);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fmid = poly_eval(coeffs_desc, mid);
                if fmid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo.signum() != fmid.signum() {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fmid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = f;
    }
    if prev_f == 0.0 {
        roots.push(prev_x);
    }
    roots
}

/// 3-paths by brute force over all ordered vertex triples, deduplicated
/// into canonical (min end, middle, max end) form.
pub fn p3_bruteforce(g: &Graph) -> BTreeSet<(usize, usize, usize)> {
    let mut set = BTreeSet::new();
    for a in g.vertices() {
        for b in g.vertices() {
            for c in g.vertices() {
                if a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(b, c) {
                    set.insert((a.min(c), b, a.max(c)));
                }
            }
        }
    }
    set
}
