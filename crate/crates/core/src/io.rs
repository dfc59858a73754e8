//! JSON documents: analysis input and the report written back.
//!
//! Rationals are always strings `"p/q"` in lowest terms.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::poly::RatPoly;
use crate::exactnum::rational::{as_string, parse_decimal, to_f64, vec_as_string, Rational};
use crate::exactnum::roots::isolate_roots;
use crate::kronecker::{angle_of_root, AngleDescriptor};
use crate::oscillation::Report;
use crate::powersum::{from_root_form, DominantSpectrum, Phase, Recurrence, RemainderModel, RootCoefficient, RootForm, RootSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Recurrence,
    RootForm,
}

/// `mode` names the section that must be present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recurrence: Option<RecurrenceInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_form: Option<RootFormInput>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurrenceInput {
    /// `s1, ..., sd` in `a(n+d) = s1 a(n+d-1) + ... + sd a(n)`.
    #[serde(with = "vec_as_string")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "vec_as_string")]
    pub initials: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootFormInput {
    /// Common power of `n` multiplying the dominating terms.
    #[serde(default)]
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_real: Option<RealRootInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_real: Option<RealRootInput>,
    #[serde(default)]
    pub pairs: Vec<PairInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remainder: Option<RemainderInput>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealRootInput {
    #[serde(with = "as_string", default = "one")]
    pub modulus: Rational,
    #[serde(with = "as_string")]
    pub coefficient: Rational,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairInput {
    #[serde(with = "as_string", default = "one")]
    pub modulus: Rational,
    pub angle: AngleInput,
    pub coefficient: CoefficientInput,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleInput {
    /// `"k/n"`, in turns.
    Rational(#[serde(with = "as_string")] Rational),
    /// `a + b sqrt(r)` turns.
    Quadratic {
        #[serde(with = "as_string")]
        a: Rational,
        #[serde(with = "as_string")]
        b: Rational,
        #[serde(with = "as_string")]
        r: Rational,
    },
    /// The argument of the root of `poly` (coefficients from the constant term up)
    /// closest to `near = [re, im]`, given as decimals.
    Algebraic {
        #[serde(with = "vec_as_string")]
        poly: Vec<Rational>,
        near: [String; 2],
    },
    /// A decimal value in turns, known to within `radius`.
    Approx {
        value: String,
        #[serde(with = "as_string")]
        radius: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientInput {
    /// `c` multiplying `alpha^n`; the conjugate root gets `conj(c)`.
    Complex {
        #[serde(with = "as_string")]
        re: Rational,
        #[serde(with = "as_string")]
        im: Rational,
    },
    /// The pair contributes `w sin(2 pi (n xi + phase))`, phase in turns.
    Trig {
        #[serde(with = "as_string")]
        w: Rational,
        #[serde(with = "as_string")]
        phase: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemainderInput {
    Unknown,
    Vanishing,
    Polynomial,
    Exponential(#[serde(with = "as_string")] Rational),
    Geometric {
        #[serde(with = "as_string")]
        scale: Rational,
        #[serde(with = "as_string")]
        ratio: Rational,
    },
}

/// Validated input.
#[derive(Debug, Clone)]
pub enum Parsed {
    Recurrence(Recurrence),
    /// `None` when every coefficient is zero.
    Spectrum(Option<Box<DominantSpectrum>>),
}

impl InputDocument {
    pub fn from_json(s: &str) -> Result<Self> {
        let mut de = serde_json::Deserializer::from_str(s);
        serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let inner = e.inner();
            let path = e.path().to_string();
            let loc = if path == "." { "document".to_string() } else { format!("at {path}") };
            Error::InvalidInput(format!("{loc}: {inner}"))
        })
    }

    pub fn recurrence(coeffs: Vec<Rational>, initials: Vec<Rational>) -> Self {
        InputDocument { mode: Mode::Recurrence, recurrence: Some(RecurrenceInput { coeffs, initials }), root_form: None }
    }

    pub fn root_form(rf: RootFormInput) -> Self {
        InputDocument { mode: Mode::RootForm, recurrence: None, root_form: Some(rf) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(&self) -> Result<Parsed> {
        match (self.mode, &self.recurrence, &self.root_form) {
            (Mode::Recurrence, Some(r), None) => Ok(Parsed::Recurrence(Recurrence::new(r.coeffs.clone(), r.initials.clone())?)),
            (Mode::RootForm, None, Some(rf)) => Ok(Parsed::Spectrum(from_root_form(&rf.to_root_form()?)?.map(Box::new))),
            (Mode::Recurrence, _, _) => Err(Error::InvalidInput("mode recurrence needs exactly the `recurrence` section".into())),
            (Mode::RootForm, _, _) => Err(Error::InvalidInput("mode root_form needs exactly the `root_form` section".into())),
        }
    }
}

impl RootFormInput {
    pub fn to_root_form(&self) -> Result<RootForm> {
        let mut roots = Vec::new();
        for (r, angle) in [(&self.positive_real, (0, 1)), (&self.negative_real, (1, 2))] {
            if let Some(r) = r {
                roots.push(RootSpec {
                    modulus: r.modulus.clone(),
                    angle: AngleDescriptor::rational(angle.0, angle.1)?,
                    coeff: RootCoefficient::real(r.coefficient.clone()),
                });
            }
        }
        for (i, p) in self.pairs.iter().enumerate() {
            let angle = p.angle.descriptor().map_err(|e| Error::InvalidInput(format!("pairs[{i}]: {e}")))?;
            if angle.is_zero() || angle.is_half() {
                return Err(Error::InvalidInput(format!("pairs[{i}]: angle 0 or 1/2 is a real root")));
            }
            let coeff = match &p.coefficient {
                CoefficientInput::Complex { re, im } => RootCoefficient::Complex { re: re.clone(), im: im.clone() },
                CoefficientInput::Trig { w, phase } => RootCoefficient::Trig { w: w.clone(), phase: Phase::Exact(phase.clone()) },
            };
            roots.push(RootSpec { modulus: p.modulus.clone(), angle, coeff });
        }
        Ok(RootForm { degree: self.degree, roots, remainder: self.remainder.as_ref().map(RemainderInput::model) })
    }
}

impl AngleInput {
    pub fn descriptor(&self) -> Result<AngleDescriptor> {
        match self {
            AngleInput::Rational(q) => AngleDescriptor::from_rational(q),
            AngleInput::Quadratic { a, b, r } => AngleDescriptor::quadratic(a.clone(), b.clone(), r.clone()),
            AngleInput::Approx { value, radius } => {
                let v = parse_decimal(value)?;
                if radius.is_zero() {
                    return AngleDescriptor::from_rational(&v);
                }
                Ok(AngleDescriptor::Approximate(Interval::around(&v, radius)))
            }
            AngleInput::Algebraic { poly, near } => {
                let f = RatPoly::new(poly.clone());
                if f.degree().unwrap_or(0) < 1 {
                    return Err(Error::InvalidInput("algebraic angle needs a nonconstant polynomial".into()));
                }
                let (x, y) = (to_f64(&parse_decimal(&near[0])?), to_f64(&parse_decimal(&near[1])?));
                let mut roots = isolate_roots(&f)?;
                let dist = |r: &crate::exactnum::AlgebraicRoot| {
                    let (a, b) = r.approx();
                    (a - x).hypot(b - y)
                };
                roots.sort_by(|a, b| dist(a).total_cmp(&dist(b)));
                if roots.len() > 1 && dist(&roots[1]) < 2.0 * dist(&roots[0]) + 1e-12 {
                    return Err(Error::InvalidInput("`near` does not single out one root".into()));
                }
                angle_of_root(&roots[0])
            }
        }
    }
}

impl RemainderInput {
    pub fn model(&self) -> RemainderModel {
        match self {
            RemainderInput::Unknown => RemainderModel::Unknown,
            RemainderInput::Vanishing => RemainderModel::Vanishing,
            RemainderInput::Polynomial => RemainderModel::Polynomial,
            RemainderInput::Exponential(omega) => RemainderModel::Exponential { omega: omega.clone() },
            RemainderInput::Geometric { scale, ratio } => RemainderModel::Geometric { scale: scale.clone(), ratio: ratio.clone() },
        }
    }
}

/// Options that affect the certified body of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunOptions {
    pub terms: usize,
    pub relation_bound: u32,
    pub precision_budget: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Footer {
    pub elapsed_ms: u64,
}

/// Everything printed by an analysis. Apart from `footer`, equal inputs give
/// equal documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format: u32,
    pub mode: String,
    pub options: RunOptions,
    pub report: Report,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub footer: Option<Footer>,
}

impl ReportDocument {
    pub const FORMAT: u32 = 1;

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};

    const EXAMPLE: &str = r#"{
        "mode": "root_form",
        "root_form": {
            "positive_real": {"modulus": "3", "coefficient": "0"},
            "pairs": [
                {"modulus": "2", "angle": {"rational": "7/10"}, "coefficient": {"re": "1/2", "im": "0"}},
                {"modulus": "2", "angle": {"rational": "1/5"}, "coefficient": {"re": "1/2", "im": "0"}}
            ]
        }
    }"#;

    #[test]
    fn round_trip() {
        let d = InputDocument::from_json(EXAMPLE).unwrap();
        assert_eq!(InputDocument::from_json(&d.to_json()).unwrap(), d);
        let r = InputDocument::recurrence(vec![int(1), int(1)], vec![int(0), rat(-1, 3)]);
        let s = r.to_json();
        assert!(s.contains("\"-1/3\""));
        assert_eq!(InputDocument::from_json(&s).unwrap(), r);
        let t = r#"{"mode":"root_form","root_form":{"pairs":[{"angle":{"quadratic":{"a":"0","b":"1","r":"2"}},"coefficient":{"w":"1","phase":"3/4"}}],"remainder":{"geometric":{"scale":"-1/2","ratio":"-1/2"}}}}"#;
        let d = InputDocument::from_json(t).unwrap();
        assert_eq!(InputDocument::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn rejects_bad_rationals() {
        for bad in [r#""2/4""#, r#""1/0""#, r#""0.5""#, r#"1"#] {
            let s = format!(r#"{{"mode":"recurrence","recurrence":{{"coeffs":[{bad}],"initials":["1"]}}}}"#);
            assert!(InputDocument::from_json(&s).is_err(), "{bad}");
        }
        let e = InputDocument::from_json("{\"mode\":\"recurrence\",\n\"recurrence\":{\"coeffs\":[\"1\",]}}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = InputDocument::from_json(
            r#"{"mode":"root_form","root_form":{"pairs":[{"angle":{"rational":"2/4"},"coefficient":{"re":"1","im":"0"}}]}}"#,
        )
        .unwrap_err();
        assert!(e.to_string().contains("pairs[0].angle"), "{e}");
        let d = InputDocument::from_json(r#"{"mode":"recurrence","root_form":{}}"#).unwrap();
        assert!(d.parse().is_err());
    }

    #[test]
    fn parses_angles() {
        let d = InputDocument::from_json(EXAMPLE).unwrap();
        let Parsed::Spectrum(Some(s)) = d.parse().unwrap() else { panic!() };
        assert_eq!(s.pairs().len(), 2);
        let a = AngleInput::Algebraic { poly: vec![int(25), int(-6), int(1)], near: ["3".into(), "4".into()] };
        assert!(a.descriptor().unwrap().is_certified_irrational());
        let a = AngleInput::Algebraic { poly: vec![int(1), int(0), int(1)], near: ["0".into(), "1".into()] };
        assert_eq!(a.descriptor().unwrap().as_rational(), Some((1, 4)));
        let a = AngleInput::Approx { value: "0.1".into(), radius: rat(1, 1000) };
        assert!(matches!(a.descriptor().unwrap(), AngleDescriptor::Approximate(_)));
    }
}
