use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::charpoly::{char_poly, strip_cyclotomic};
use super::{f_star, IsometryMatrix};
use crate::algebra::roots::{largest_real_root, DEFAULT_ROOT_TOL};
use crate::algebra::IntPolynomial;
use crate::error::Result;
use crate::lattice::{enumerate_n_unordered, in_n, PureType, MAXIMAL_TYPES};

/// Agreement required between orderings of the same type.
pub const INVARIANCE_TOL: f64 = 1e-9;
/// Gap required for strict monotonicity.
pub const MONOTONICITY_MARGIN: f64 = 1e-6;

/// Spectral data of an isometry.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectral {
    pub lambda: f64,
    pub min_poly: IntPolynomial,
    pub char_poly: IntPolynomial,
    pub cyclotomic_parts: Vec<(u64, usize)>,
}

/// Spectral radius and the minimal polynomial of the dominant eigenvalue.
///
/// When nothing survives cyclotomic stripping every eigenvalue is a root of
/// unity; this is reported as `(1, t − 1)`.
pub fn spectral_radius(a: &IsometryMatrix) -> Result<Spectral> {
    let cp = char_poly(&a.entries)?;
    let stripped = strip_cyclotomic(&cp)?;
    let (lambda, min_poly) = if stripped.salem.degree().unwrap_or(0) == 0 {
        (1.0, IntPolynomial::t_minus_one())
    } else {
        let root = largest_real_root(&stripped.salem, DEFAULT_ROOT_TOL)?;
        (root.unwrap_or(1.0), stripped.salem)
    };
    Ok(Spectral { lambda, min_poly, char_poly: cp, cyclotomic_parts: stripped.parts })
}

/// λ of `f` on `M_t`.
pub fn lambda_of(t: PureType) -> Result<f64> {
    Ok(spectral_radius(&f_star(t))?.lambda)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyRow {
    pub ty: PureType,
    pub lambda: f64,
    pub min_poly: IntPolynomial,
    pub char_poly: IntPolynomial,
    pub cyclotomic_parts: Vec<(u64, usize)>,
    pub entropy: f64,
}

impl EntropyRow {
    pub fn compute(t: PureType) -> Result<Self> {
        let s = spectral_radius(&f_star(t))?;
        Ok(EntropyRow {
            ty: t,
            lambda: s.lambda,
            entropy: s.lambda.ln(),
            min_poly: s.min_poly,
            char_poly: s.char_poly,
            cyclotomic_parts: s.cyclotomic_parts,
        })
    }
}

/// `x` rounded to `n` significant digits, as a decimal string.
pub fn sig_digits(x: f64, n: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i64;
    let decimals = (n as i64 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

fn rounded(x: f64) -> f64 {
    sig_digits(x, 12).parse().unwrap_or(x)
}

impl Serialize for EntropyRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EntropyRow", 6)?;
        st.serialize_field("type", &self.ty.as_array())?;
        st.serialize_field("lambda", &rounded(self.lambda))?;
        st.serialize_field("entropy", &rounded(self.entropy))?;
        st.serialize_field("min_poly", &self.min_poly)?;
        st.serialize_field("char_poly", &self.char_poly)?;
        st.serialize_field("cyclotomic_parts", &self.cyclotomic_parts)?;
        st.end()
    }
}

/// One row per unordered type, computed in parallel.
pub fn entropy_table() -> Result<Vec<EntropyRow>> {
    enumerate_n_unordered().into_par_iter().map(EntropyRow::compute).collect()
}

pub fn render_text(rows: &[EntropyRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<9}  {:>15}  {:>15}  min. poly", "type", "lambda", "entropy");
    for r in rows {
        let _ = writeln!(
            out,
            "{:<9}  {:>15}  {:>15}  {}",
            r.ty.to_string(),
            sig_digits(r.lambda, 12),
            sig_digits(r.entropy, 12),
            r.min_poly
        );
    }
    out
}

pub fn render_csv(rows: &[EntropyRow]) -> String {
    let mut out = String::from("type,lambda,entropy,min_poly,char_poly,cyclotomic_parts\n");
    for r in rows {
        let parts: Vec<String> = r.cyclotomic_parts.iter().map(|(n, m)| format!("{n}^{m}")).collect();
        let _ = writeln!(
            out,
            "\"{},{},{}\",{},{},\"{}\",\"{}\",\"{}\"",
            r.ty.k,
            r.ty.l,
            r.ty.m,
            sig_digits(r.lambda, 12),
            sig_digits(r.entropy, 12),
            r.min_poly,
            r.char_poly,
            parts.join(" ")
        );
    }
    out
}

pub fn render_json(rows: &[EntropyRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

/// λ and minimal polynomial agree across every ordering of `t`.
pub fn permutation_invariance_check(t: PureType) -> Result<bool> {
    let spectra = t
        .permutations()
        .into_par_iter()
        .map(|p| spectral_radius(&f_star(p)))
        .collect::<Result<Vec<_>>>()?;
    let first = &spectra[0];
    Ok(spectra
        .iter()
        .all(|s| s.min_poly == first.min_poly && (s.lambda - first.lambda).abs() <= INVARIANCE_TOL))
}

/// A comparable pair `smaller ≤ larger` where λ failed to strictly drop.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub smaller: PureType,
    pub larger: PureType,
    pub lambda_smaller: f64,
    pub lambda_larger: f64,
}

fn ordered_types() -> Vec<PureType> {
    let set: BTreeSet<PureType> = MAXIMAL_TYPES
        .iter()
        .flat_map(|n| n.permutations())
        .flat_map(|nu| {
            (0..=nu.k).flat_map(move |k| (0..=nu.l).flat_map(move |l| (0..=nu.m).map(move |m| PureType::new(k, l, m))))
        })
        .collect();
    debug_assert!(set.iter().all(|&t| in_n(t)));
    set.into_iter().collect()
}

/// Every componentwise-comparable pair of ordered types where λ does not
/// decrease by more than [`MONOTONICITY_MARGIN`].
pub fn monotonicity_check() -> Result<Vec<Violation>> {
    let types = ordered_types();
    let lambdas = types.par_iter().map(|&t| lambda_of(t)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, &a) in types.iter().enumerate() {
        for (j, &b) in types.iter().enumerate() {
            let le = a.k <= b.k && a.l <= b.l && a.m <= b.m;
            if i != j && le && lambdas[i] <= lambdas[j] + MONOTONICITY_MARGIN {
                out.push(Violation { smaller: a, larger: b, lambda_smaller: lambdas[i], lambda_larger: lambdas[j] });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::f_star_inverse;

    #[test]
    fn table_shape_and_anchors() {
        let rows = entropy_table().unwrap();
        assert_eq!(rows.len(), 30);
        let find = |k, l, m| rows.iter().find(|r| r.ty == PureType::new(k, l, m)).unwrap();
        let r = find(6, 0, 0);
        assert!((r.lambda - 5.828).abs() < 1e-3);
        assert_eq!(r.min_poly, IntPolynomial::from_i64(&[1, -6, 1]));
        let r = find(2, 2, 2);
        assert!((r.lambda - 6.678).abs() < 1e-3);
        assert_eq!(r.min_poly, IntPolynomial::from_i64(&[1, -8, 10, -8, 1]));
        let r = find(0, 0, 0);
        assert!((r.entropy - 17.944_271_909_999_16f64.ln()).abs() < 1e-12);
        let r = find(3, 3, 3);
        assert_eq!((r.lambda, r.entropy), (1.0, 0.0));
        assert_eq!(r.min_poly, IntPolynomial::t_minus_one());
    }

    #[test]
    fn spectral_properties() {
        for t in enumerate_n_unordered().into_iter().flat_map(|t| t.permutations()) {
            let s = spectral_radius(&f_star(t)).unwrap();
            assert!(s.char_poly.is_reciprocal_up_to_sign(), "{t}");
            assert!(s.min_poly.is_palindromic() || s.min_poly == IntPolynomial::t_minus_one(), "{t}");
            assert!(s.min_poly.divides(&s.char_poly) || s.lambda == 1.0);
            assert!(s.min_poly.eval_f64(s.lambda).abs() < 1e-6 * s.lambda.powi(s.min_poly.degree().unwrap() as i32));
            let inv = spectral_radius(&f_star_inverse(t)).unwrap();
            assert_eq!(inv.min_poly, s.min_poly);
            assert!((inv.lambda - s.lambda).abs() < INVARIANCE_TOL);
        }
        // reciprocal pair of real roots for quadratic factors
        let s = spectral_radius(&f_star(PureType::new(0, 0, 0))).unwrap();
        let c = s.min_poly.coeffs();
        let other = -i64::try_from(&c[1]).unwrap() as f64 - s.lambda;
        assert!((other * s.lambda - 1.0).abs() < 1e-9);
    }

    #[test]
    fn invariance_examples() {
        for t in [(2, 0, 1), (5, 1, 0), (0, 0, 0)] {
            assert!(permutation_invariance_check(PureType::new(t.0, t.1, t.2)).unwrap());
        }
        let s = spectral_radius(&f_star(PureType::new(0, 1, 5))).unwrap();
        assert_eq!(s.min_poly, IntPolynomial::from_i64(&[1, -7, 1]));
    }

    #[test]
    fn monotone() {
        assert!(monotonicity_check().unwrap().is_empty());
        assert!(lambda_of(PureType::new(0, 0, 0)).unwrap() > lambda_of(PureType::new(1, 0, 0)).unwrap());
    }

    #[test]
    fn rendering() {
        let rows = vec![EntropyRow::compute(PureType::new(0, 0, 0)).unwrap()];
        assert!(render_text(&rows).contains("17.9442719100"));
        let csv = render_csv(&rows);
        assert!(csv.lines().nth(1).unwrap().starts_with("\"0,0,0\",17.9442719100,"));
        let v: serde_json::Value = serde_json::from_str(&render_json(&rows)).unwrap();
        assert_eq!(v[0]["min_poly"], serde_json::json!([1, -18, 1]));
        assert_eq!(v[0]["type"], serde_json::json!([0, 0, 0]));
        assert_eq!(sig_digits(1.0, 12), "1.00000000000");
    }
}
