use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::{gram_of, AxisCurve, Divisor};
use crate::algebra::intpoly::JsonInt;
use crate::error::{Error, Result};
use crate::lattice::{build_gram, IntMatrix, PureType};
use crate::Axis;

/// The 24 axis-parallel curves on `S̃`, indexed `C₁ … C₂₄` in this order.
pub fn tilde_curves() -> Vec<AxisCurve> {
    use Axis::{X, Y, Z};
    const LIST: [(Axis, &str, &str); 24] = [
        (Z, "i", "0"),
        (Z, "i", "inf"),
        (Y, "0", "i"),
        (Y, "inf", "i"),
        (Z, "2/3", "i"),
        (Z, "inf", "i"),
        (X, "i", "0"),
        (X, "i", "inf"),
        (Y, "i", "2/3"),
        (Y, "i", "inf"),
        (X, "0", "i"),
        (X, "inf", "i"),
        (Z, "-i", "0"),
        (Z, "-i", "inf"),
        (Y, "0", "-i"),
        (Y, "inf", "-i"),
        (Z, "2/3", "-i"),
        (Z, "inf", "-i"),
        (X, "-i", "0"),
        (X, "-i", "inf"),
        (Y, "-i", "2/3"),
        (Y, "-i", "inf"),
        (X, "0", "-i"),
        (X, "inf", "-i"),
    ];
    LIST.iter().map(|&(a, p, q)| AxisCurve::parse(a, p, q).expect("valid literal")).collect()
}

/// An integer combination of a configuration's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicClass {
    pub coeffs: Vec<BigInt>,
}

impl PicClass {
    pub fn zero(n: usize) -> Self {
        PicClass { coeffs: vec![BigInt::zero(); n] }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = PicClass::zero(n);
        c.coeffs[i] = 1.into();
        c
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        PicClass { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }
}

impl Add for &PicClass {
    type Output = PicClass;
    fn add(self, rhs: &PicClass) -> PicClass {
        PicClass { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &PicClass {
    type Output = PicClass;
    fn sub(self, rhs: &PicClass) -> PicClass {
        PicClass { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Serialize for PicClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.iter().map(JsonInt::from).collect::<Vec<_>>().serialize(s)
    }
}

/// Labelled generators with their intersection matrix.
#[derive(Clone, Debug)]
pub struct Configuration {
    labels: Vec<String>,
    divisors: Vec<Divisor>,
    gram: IntMatrix,
}

/// Coordinates of a class in a basis, with the integrality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InBasis {
    pub coeffs: Vec<BigRational>,
    pub integral: bool,
}

impl Serialize for InBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("InBasis", 2)?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("integral", &self.integral)?;
        st.end()
    }
}

impl Configuration {
    pub fn new(labels: Vec<String>, divisors: Vec<Divisor>) -> Self {
        assert_eq!(labels.len(), divisors.len());
        let gram = gram_of(&divisors);
        Configuration { labels, divisors, gram }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Index of a generator; `[C7]` and `C7` are both accepted.
    pub fn index(&self, label: &str) -> Result<usize> {
        let l = label.trim().trim_start_matches('[').trim_end_matches(']');
        self.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownName(label.to_string()))
    }

    pub fn generator(&self, label: &str) -> Result<PicClass> {
        Ok(PicClass::unit(self.len(), self.index(label)?))
    }

    /// Parses a combination like `2Ey + 2Ez - 2Ex - C7` or `-[C21] + 2*Ex`.
    pub fn parse_class(&self, expr: &str) -> Result<PicClass> {
        let bad = || Error::Parse(format!("cannot parse class {expr:?}"));
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = PicClass::zero(self.len());
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
            let k: i64 = if digits == 0 { 1 } else { term[..digits].parse().map_err(|_| bad())? };
            let label = term[digits..].trim_start_matches('*');
            if label.is_empty() {
                return Err(bad());
            }
            let i = self.index(label)?;
            out.coeffs[i] += sign * k;
        }
        Ok(out)
    }

    pub fn pair(&self, a: &PicClass, b: &PicClass) -> BigInt {
        self.gram.pair(&a.coeffs, &b.coeffs)
    }

    /// Pairings of a class with every generator.
    pub fn pairings(&self, a: &PicClass) -> Vec<BigInt> {
        self.gram.apply(&a.coeffs)
    }

    /// Intersection matrix of the named generators, in the given order.
    pub fn gram_of_labels(&self, labels: &[&str]) -> Result<IntMatrix> {
        let idx = labels.iter().map(|l| self.index(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.gram.sub_matrix(&idx, &idx))
    }

    /// Numerical equivalence: `lhs − rhs` pairs to zero with every generator.
    pub fn verify_relation(&self, lhs: &PicClass, rhs: &PicClass) -> bool {
        self.pairings(&(lhs - rhs)).iter().all(Zero::is_zero)
    }

    fn axis_key(&self, i: usize) -> (usize, Axis) {
        match &self.divisors[i] {
            Divisor::Fiber(a) => (0, *a),
            Divisor::Curve(c) => (1, c.axis()),
        }
    }

    /// The selection reordered as fibers by axis, then curves stably grouped
    /// x, y, z: the basis order of `M_{k,l,m}`.
    pub fn canonical_order(&self, labels: &[&str]) -> Result<Vec<usize>> {
        let mut idx = labels.iter().map(|l| self.index(l)).collect::<Result<Vec<_>>>()?;
        idx.sort_by_key(|&i| self.axis_key(i));
        Ok(idx)
    }

    /// Whether the selection, in canonical order, has Gram matrix `M_expected`.
    pub fn sublattice_check(&self, labels: &[&str], expected: PureType) -> Result<bool> {
        let idx = self.canonical_order(labels)?;
        Ok(self.gram.sub_matrix(&idx, &idx) == build_gram(expected).gram)
    }

    /// Solves `G c = (target · bᵢ)ᵢ` over ℚ and checks that the residual
    /// `target − Σ cᵢ bᵢ` is numerically trivial on every generator.
    pub fn express_in_basis(&self, target: &PicClass, basis: &[&str]) -> Result<InBasis> {
        let idx = basis.iter().map(|l| self.index(l)).collect::<Result<Vec<_>>>()?;
        let g = self.gram.sub_matrix(&idx, &idx);
        let all = self.pairings(target);
        let rhs: Vec<BigInt> = idx.iter().map(|&i| all[i].clone()).collect();
        let coeffs = g.solve(&rhs).ok_or(Error::SingularGram)?;
        // Residual pairings, scaled by a common denominator to stay integral.
        let den = coeffs.iter().fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let mut scaled = target.scale(&den);
        for (c, &i) in coeffs.iter().zip(&idx) {
            let k = (c * BigRational::from_integer(den.clone())).to_integer();
            scaled.coeffs[i] -= k;
        }
        if !self.pairings(&scaled).iter().all(Zero::is_zero) {
            return Err(Error::NotInSpan);
        }
        let integral = coeffs.iter().all(|c| c.is_integer());
        Ok(InBasis { coeffs, integral })
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }
}

/// `E_x, E_y, E_z, C₁, …, C₂₄`.
pub fn tilde_configuration() -> Configuration {
    let mut labels: Vec<String> = Axis::ALL.iter().map(|a| format!("E{a}")).collect();
    let mut divisors: Vec<Divisor> = Axis::ALL.iter().map(|&a| Divisor::Fiber(a)).collect();
    for (i, c) in tilde_curves().into_iter().enumerate() {
        labels.push(format!("C{}", i + 1));
        divisors.push(Divisor::Curve(c));
    }
    Configuration::new(labels, divisors)
}

/// A linear relation `lhs = rhs` between classes, as written expressions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const C22_A: &str = "C11 + C12 - C21 + 2Ex - 2Ey - Ez + C7 + C8 + C19 + C20";
const C22_B: &str = "-C21 + 2Ex - 2Ey - C9 - C10 + C7 + C8 + C19 + C20";

pub fn tilde_relations() -> Vec<Relation> {
    vec![
        Relation { lhs: "C24", rhs: "2Ey + 2Ez - 2Ex - C7 - C8 - C11 - C12 - C19 - C20 - C23" },
        Relation { lhs: "C22", rhs: C22_A },
        Relation { lhs: "C22", rhs: C22_B },
        Relation { lhs: C22_A, rhs: C22_B },
    ]
}

/// A set of generators expected to span a copy of `M_ty`, optionally with a
/// class of the configuration that lies in that span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Selection {
    pub name: &'static str,
    #[serde(rename = "type")]
    pub ty: PureType,
    pub labels: Vec<&'static str>,
    pub contains: Option<&'static str>,
}

/// The four realizable maximal types followed by the four obstructions.
pub fn tilde_selections() -> Vec<Selection> {
    let e = ["Ex", "Ey", "Ez"];
    let sel = |name, ty: (u32, u32, u32), curves: &[&'static str], contains| {
        let mut labels = e.to_vec();
        labels.extend_from_slice(curves);
        Selection { name, ty: PureType::new(ty.0, ty.1, ty.2), labels, contains }
    };
    vec![
        sel("L600", (6, 0, 0), &["C7", "C8", "C11", "C12", "C19", "C20"], None),
        sel("L511", (5, 1, 1), &["C2", "C7", "C8", "C11", "C19", "C20", "C21"], None),
        sel("L422", (4, 2, 2), &["C1", "C2", "C7", "C8", "C9", "C10", "C19", "C20"], None),
        sel("L333", (3, 3, 3), &["C1", "C2", "C7", "C8", "C9", "C10", "C13", "C19", "C21"], None),
        sel("L700", (7, 0, 0), &["C7", "C8", "C11", "C12", "C19", "C20", "C23"], Some("C24")),
        sel("L610", (6, 1, 0), &["C7", "C8", "C11", "C12", "C19", "C20", "C21"], Some("C22")),
        sel("L520", (5, 2, 0), &["C7", "C8", "C11", "C19", "C20", "C21", "C22"], Some("C12")),
        sel("L430", (4, 3, 0), &["C7", "C8", "C9", "C10", "C19", "C20", "C21"], Some("C22")),
    ]
}

/// The conditions on an extra `(−2)`-class inside a pure sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma0Report {
    pub self_pairing: BigInt,
    pub fiber_pairings: [BigInt; 3],
    pub curve_pairings: Vec<(String, BigInt)>,
    /// Self-pairing −2, pairing 1 with exactly one fiber and 0 with the
    /// others, and non-negative pairing with every curve in the basis.
    pub ok: bool,
}

impl Serialize for Gamma0Report {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let curves: Vec<(&str, JsonInt)> = self.curve_pairings.iter().map(|(l, p)| (l.as_str(), p.into())).collect();
        let mut st = s.serialize_struct("Gamma0Report", 4)?;
        st.serialize_field("self_pairing", &JsonInt::from(&self.self_pairing))?;
        st.serialize_field("fiber_pairings", &self.fiber_pairings.iter().map(JsonInt::from).collect::<Vec<_>>())?;
        st.serialize_field("curve_pairings", &curves)?;
        st.serialize_field("ok", &self.ok)?;
        st.end()
    }
}

pub fn gamma0_report(config: &Configuration, class: &PicClass, basis: &[&str]) -> Result<Gamma0Report> {
    let all = config.pairings(class);
    let self_pairing = config.pair(class, class);
    let fiber_pairings = [0, 1, 2].map(|i| all[config.index(&format!("E{}", Axis::from_index(i))).unwrap_or(i)].clone());
    let mut curve_pairings = Vec::new();
    for &l in basis {
        let i = config.index(l)?;
        if matches!(config.divisors()[i], Divisor::Curve(_)) {
            curve_pairings.push((l.to_string(), all[i].clone()));
        }
    }
    let ones = fiber_pairings.iter().filter(|p| **p == BigInt::from(1)).count();
    let zeros = fiber_pairings.iter().filter(|p| p.is_zero()).count();
    let ok = self_pairing == BigInt::from(-2)
        && ones == 1
        && zeros == 2
        && curve_pairings.iter().all(|(_, p)| !p.is_negative());
    Ok(Gamma0Report { self_pairing, fiber_pairings, curve_pairings, ok })
}
