//! File formats: JSON with 17-significant-digit floats, CSV grids, and the
//! JSON description of input functions.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::Value;

use super::CliError;
use crate::hermite::{CoefficientRule, SampledFunction};
use crate::quadrature::UniformAxis;
use crate::weights::{RadialProfile, WeightSpec};
use crate::{Error, FunctionSpec, GaussianSpec, HermiteExpansion, MultiIndex};

/// `x` with 17 significant digits, the text form used in every output file.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Pretty JSON whose floats carry 17 significant digits. Non-finite floats
/// become `null`.
struct SigFigs(PrettyFormatter<'static>);

macro_rules! delegate {
    ($($name:ident $(($arg:ident: $ty:ty))?;)*) => {$(
        fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)?) -> io::Result<()> {
            self.0.$name(w $(, $arg)?)
        }
    )*};
}

impl Formatter for SigFigs {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(fmt_f64(value).as_bytes())
    }

    delegate! {
        begin_array;
        end_array;
        begin_array_value(first: bool);
        end_array_value;
        begin_object;
        end_object;
        begin_object_key(first: bool);
        begin_object_value;
        end_object_value;
    }
}

pub fn to_json<T: Serialize + ?Sized>(v: &T) -> Result<String, CliError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigFigs(PrettyFormatter::with_indent(b"  ")));
    v.serialize(&mut ser).map_err(|e| CliError::Io(e.to_string()))?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(|e| CliError::Io(e.to_string()))
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// CSV text with a header row; every value formatted by [`fmt_f64`].
pub fn csv_text(header: &[String], rows: &[Vec<f64>]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io_err = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(row.iter().map(|v| fmt_f64(*v))).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

/// Inline JSON (first non-blank character `{`) or the path of a JSON file.
pub fn load_json(input: &str) -> Result<Value, CliError> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| parse_err("input", e.to_string()))
}

fn parse_err(field: impl Into<String>, reason: impl Into<String>) -> CliError {
    CliError::Lib(Error::Parse {
        field: field.into(),
        reason: reason.into(),
    })
}

#[derive(Serialize)]
struct CoeffEntry<'a> {
    alpha: &'a [u32],
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct ExpansionFile<'a> {
    dim: usize,
    cutoff: u32,
    coeffs: Vec<CoeffEntry<'a>>,
}

/// `{dim, cutoff, coeffs: [{alpha, re, im}]}` in graded order.
pub fn expansion_json(e: &HermiteExpansion) -> Result<String, CliError> {
    to_json(&ExpansionFile {
        dim: e.dim(),
        cutoff: e.cutoff(),
        coeffs: e
            .iter()
            .map(|(a, c)| CoeffEntry {
                alpha: a.entries(),
                re: c.re,
                im: c.im,
            })
            .collect(),
    })
}

pub fn is_expansion(v: &Value) -> bool {
    v.get("coeffs").is_some()
}

fn field<'a>(v: &'a Value, name: &str, ctx: &str) -> Result<&'a Value, CliError> {
    v.get(name).ok_or_else(|| parse_err(format!("{ctx}.{name}"), "missing"))
}

fn as_f64(v: &Value, name: &str) -> Result<f64, CliError> {
    v.as_f64().ok_or_else(|| parse_err(name, format!("expected a number, found {v}")))
}

fn as_usize(v: &Value, name: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(name, format!("expected a non-negative integer, found {v}")))
}

fn opt_f64(v: &Value, name: &str, ctx: &str, default: f64) -> Result<f64, CliError> {
    match v.get(name) {
        None => Ok(default),
        Some(x) => as_f64(x, &format!("{ctx}.{name}")),
    }
}

/// A complex number written as `x`, `[re, im]` or `{"re": .., "im": ..}`.
pub fn parse_complex(v: &Value, name: &str) -> Result<Complex64, CliError> {
    match v {
        Value::Number(_) => Ok(Complex64::new(as_f64(v, name)?, 0.0)),
        Value::Array(a) if a.len() == 2 => Ok(Complex64::new(as_f64(&a[0], name)?, as_f64(&a[1], name)?)),
        Value::Object(_) => Ok(Complex64::new(
            opt_f64(v, "re", name, 0.0)?,
            opt_f64(v, "im", name, 0.0)?,
        )),
        _ => Err(parse_err(name, format!("expected a complex number, found {v}"))),
    }
}

fn parse_alpha(v: &Value, name: &str) -> Result<MultiIndex, CliError> {
    let a = v.as_array().ok_or_else(|| parse_err(name, "expected an integer array"))?;
    a.iter()
        .map(|x| {
            x.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| parse_err(name, format!("bad entry {x}")))
        })
        .collect::<Result<Vec<u32>, _>>()
        .map(MultiIndex::new)
}

/// Reads an expansion file. Entries above the declared cutoff are rejected.
pub fn parse_expansion(v: &Value) -> Result<HermiteExpansion, CliError> {
    let dim = as_usize(field(v, "dim", "expansion")?, "expansion.dim")?;
    let cutoff = as_usize(field(v, "cutoff", "expansion")?, "expansion.cutoff")? as u32;
    crate::hermite::check_dim(dim)?;
    let coeffs = field(v, "coeffs", "expansion")?
        .as_array()
        .ok_or_else(|| parse_err("expansion.coeffs", "expected an array"))?;
    let mut terms = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.iter().enumerate() {
        let ctx = format!("expansion.coeffs[{i}]");
        let alpha = parse_alpha(field(c, "alpha", &ctx)?, &format!("{ctx}.alpha"))?;
        let value = if let Some(cv) = c.get("c") {
            parse_complex(cv, &format!("{ctx}.c"))?
        } else {
            Complex64::new(opt_f64(c, "re", &ctx, 0.0)?, opt_f64(c, "im", &ctx, 0.0)?)
        };
        terms.push((alpha, value));
    }
    Ok(HermiteExpansion::from_terms(dim, cutoff, terms)?)
}

fn parse_matrix(v: &Value, dim: Option<usize>, name: &str) -> Result<DMatrix<Complex64>, CliError> {
    if let Value::Array(rows) = v {
        let d = rows.len();
        let mut m = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .filter(|r| r.len() == d)
                .ok_or_else(|| parse_err(format!("{name}[{i}]"), format!("expected a row of {d} entries")))?;
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = parse_complex(x, &format!("{name}[{i}][{j}]"))?;
            }
        }
        return Ok(m);
    }
    let d = dim.ok_or_else(|| parse_err("gaussian.dim", "required when `a` is a scalar"))?;
    Ok(DMatrix::from_diagonal_element(d, d, parse_complex(v, name)?))
}

fn parse_axes(v: &Value, name: &str) -> Result<Vec<UniformAxis>, CliError> {
    let arr = v.as_array().ok_or_else(|| parse_err(name, "expected an array of axes"))?;
    arr.iter()
        .enumerate()
        .map(|(i, a)| {
            let ctx = format!("{name}[{i}]");
            let min = as_f64(field(a, "min", &ctx)?, &format!("{ctx}.min"))?;
            let max = as_f64(field(a, "max", &ctx)?, &format!("{ctx}.max"))?;
            let n = as_usize(field(a, "n", &ctx)?, &format!("{ctx}.n"))?;
            if !(min < max) || n < 2 {
                return Err(parse_err(ctx, "need min < max and n >= 2"));
            }
            Ok(UniformAxis::new(min, max, n))
        })
        .collect()
}

/// Parses the JSON description of a function.
///
/// ```json
/// {"type": "gaussian", "a": [[1]], "l": [0], "c": 0.7511255444649425}
/// {"type": "hermite_combo", "dim": 1, "terms": [{"alpha": [3], "re": 2, "im": 0}]}
/// {"type": "coefficient_rule", "dim": 1, "rule": "stretched_exp", "r": 1, "s": 0.5}
/// {"type": "sampled", "axes": [{"min": -9, "max": 9, "n": 721}], "of": {...}}
/// ```
pub fn parse_function_spec(v: &Value) -> Result<FunctionSpec, CliError> {
    let kind = field(v, "type", "spec")?
        .as_str()
        .ok_or_else(|| parse_err("spec.type", "expected a string"))?;
    let dim = v.get("dim").map(|d| as_usize(d, "spec.dim")).transpose()?;
    let spec = match kind {
        "gaussian" => {
            let a = parse_matrix(field(v, "a", "gaussian")?, dim, "gaussian.a")?;
            let d = a.nrows();
            let l = match v.get("l") {
                None => vec![Complex64::new(0.0, 0.0); d],
                Some(Value::Array(xs)) => xs
                    .iter()
                    .enumerate()
                    .map(|(i, x)| parse_complex(x, &format!("gaussian.l[{i}]")))
                    .collect::<Result<_, _>>()?,
                Some(other) => return Err(parse_err("gaussian.l", format!("expected an array, found {other}"))),
            };
            let c = match v.get("c") {
                None => Complex64::new(1.0, 0.0),
                Some(x) => parse_complex(x, "gaussian.c")?,
            };
            FunctionSpec::Gaussian(GaussianSpec::new(a, l, c)?)
        }
        "hermite_combo" => {
            let dim = dim.ok_or_else(|| parse_err("hermite_combo.dim", "missing"))?;
            let terms = field(v, "terms", "hermite_combo")?
                .as_array()
                .ok_or_else(|| parse_err("hermite_combo.terms", "expected an array"))?;
            let mut out = Vec::with_capacity(terms.len());
            for (i, t) in terms.iter().enumerate() {
                let ctx = format!("hermite_combo.terms[{i}]");
                let alpha = parse_alpha(field(t, "alpha", &ctx)?, &format!("{ctx}.alpha"))?;
                let c = match t.get("c") {
                    Some(cv) => parse_complex(cv, &format!("{ctx}.c"))?,
                    None => Complex64::new(opt_f64(t, "re", &ctx, 0.0)?, opt_f64(t, "im", &ctx, 0.0)?),
                };
                out.push((alpha, c));
            }
            FunctionSpec::HermiteCombo { dim, terms: out }
        }
        "coefficient_rule" => {
            let dim = dim.ok_or_else(|| parse_err("coefficient_rule.dim", "missing"))?;
            let ctx = "coefficient_rule";
            let scale = opt_f64(v, "scale", ctx, 1.0)?;
            let rule_name = field(v, "rule", ctx)?
                .as_str()
                .ok_or_else(|| parse_err("coefficient_rule.rule", "expected a string"))?;
            let num = |name: &str| -> Result<f64, CliError> { as_f64(field(v, name, ctx)?, &format!("{ctx}.{name}")) };
            let rule = match rule_name {
                "stretched_exp" => CoefficientRule::StretchedExp {
                    r: num("r")?,
                    s: num("s")?,
                    scale,
                },
                "stretched_growth" => CoefficientRule::StretchedGrowth {
                    r: num("r")?,
                    s: num("s")?,
                    scale,
                },
                "factorial" => CoefficientRule::Factorial {
                    radius: num("radius")?,
                    scale,
                },
                "factorial_growth" => CoefficientRule::FactorialGrowth {
                    radius: num("radius")?,
                    scale,
                },
                other => return Err(parse_err("coefficient_rule.rule", format!("unknown rule `{other}`"))),
            };
            FunctionSpec::CoefficientRule { dim, rule }
        }
        "sampled" => {
            let axes = parse_axes(field(v, "axes", "sampled")?, "sampled.axes")?;
            let sampled = if let Some(src) = v.get("of") {
                let inner = parse_function_spec(src)?;
                if inner.dim() != axes.len() {
                    return Err(parse_err("sampled.of", "dimension differs from the number of axes"));
                }
                let cutoff = opt_f64(v, "rule_cutoff", "sampled", 64.0)? as u32;
                SampledFunction::from_fn(axes, |y| inner.eval(y, cutoff))?
            } else {
                let vals = field(v, "values", "sampled")?
                    .as_array()
                    .ok_or_else(|| parse_err("sampled.values", "expected an array"))?;
                let values = vals
                    .iter()
                    .enumerate()
                    .map(|(i, x)| parse_complex(x, &format!("sampled.values[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                SampledFunction::new(axes, values)?
            };
            FunctionSpec::Sampled(sampled)
        }
        other => return Err(parse_err("spec.type", format!("unknown function type `{other}`"))),
    };
    spec.validate()?;
    Ok(spec)
}

/// Points `"a,b,…;c,d,…"`, each with exactly `width` coordinates.
pub fn parse_points(text: &str, width: usize) -> Result<Vec<Vec<f64>>, CliError> {
    text.split(';')
        .filter(|p| !p.trim().is_empty())
        .enumerate()
        .map(|(i, p)| {
            let xs: Vec<f64> = p
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| parse_err(format!("points[{i}]"), e.to_string()))?;
            if xs.len() != width {
                return Err(parse_err(
                    format!("points[{i}]"),
                    format!("expected {width} coordinates, found {}", xs.len()),
                ));
            }
            Ok(xs)
        })
        .collect()
}

/// Comma-separated reals.
pub fn parse_reals(text: &str, name: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| parse_err(name, e.to_string())))
        .collect()
}

/// Weight description `kind[:key=value,…]`:
/// `gs:s=1,t=1,r=0.5`, `quadratic:h=0.6`, `flat:R=1`, `poly:r=2`,
/// `radial-exp:h=0.5` (`ω₀ = e^{−h r}`), `radial-root:R=1` (`ω₀ = e^{−R√r}`)
/// and `unit`.
pub fn parse_weight(text: &str) -> Result<WeightSpec, CliError> {
    let (kind, params) = text.split_once(':').unwrap_or((text, ""));
    let mut kv = Vec::new();
    for part in params.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| parse_err("weight", format!("expected key=value, found `{part}`")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|e| parse_err(format!("weight.{}", k.trim()), format!("{e}")))?;
        kv.push((k.trim().to_string(), v));
    }
    let get = |k: &str| -> Result<f64, CliError> {
        kv.iter()
            .find(|(name, _)| name == k)
            .map(|(_, v)| *v)
            .ok_or_else(|| parse_err(format!("weight.{k}"), "missing"))
    };
    let w = match kind.trim() {
        "gs" => WeightSpec::Gs {
            s: get("s")?,
            t: get("t")?,
            r: get("r")?,
        },
        "quadratic" => WeightSpec::Quadratic { h: get("h")? },
        "flat" => WeightSpec::FlatExp { radius: get("R")? },
        "poly" => WeightSpec::Poly { r: get("r")? },
        "radial-exp" => WeightSpec::Radial(RadialProfile::Exponential { h: get("h")? }),
        "radial-root" => WeightSpec::Radial(RadialProfile::RootExponential { radius: get("R")? }),
        "unit" => WeightSpec::Unit,
        other => return Err(parse_err("weight", format!("unknown weight `{other}`"))),
    };
    w.validate()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_carry_seventeen_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(-2.0), "-2.0000000000000000e0");
        let back: f64 = fmt_f64(std::f64::consts::PI).parse().unwrap();
        assert_eq!(back, std::f64::consts::PI);
        let json = to_json(&serde_json::json!({"x": 0.5, "n": 3, "bad": f64::NAN})).unwrap();
        assert!(json.contains("\"x\": 5.0000000000000000e-1"));
        assert!(json.contains("\"n\": 3"));
        assert!(json.contains("\"bad\": null"));
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["x"].as_f64(), Some(0.5));
    }

    #[test]
    fn expansion_round_trip_is_exact() {
        let e = HermiteExpansion::from_terms(
            2,
            5,
            [
                (MultiIndex::from([0, 0]), Complex64::new(0.1, -1.0 / 3.0)),
                (MultiIndex::from([2, 3]), Complex64::new(1e-200, 7.0)),
            ],
        )
        .unwrap();
        let text = expansion_json(&e).unwrap();
        let back = parse_expansion(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex(&serde_json::json!(2), "c").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex(&serde_json::json!([1, -1]), "c").unwrap(), Complex64::new(1.0, -1.0));
        assert_eq!(
            parse_complex(&serde_json::json!({"im": 3}), "c").unwrap(),
            Complex64::new(0.0, 3.0)
        );
        assert!(parse_complex(&serde_json::json!("x"), "c").is_err());
    }

    #[test]
    fn spec_errors_name_the_field() {
        let v = serde_json::json!({"type": "gaussian", "a": [[1, 0]]});
        match parse_function_spec(&v) {
            Err(CliError::Lib(Error::Parse { field, .. })) => assert_eq!(field, "gaussian.a[0]"),
            other => panic!("{other:?}"),
        }
        let v = serde_json::json!({"type": "hermite_combo", "terms": []});
        match parse_function_spec(&v) {
            Err(CliError::Lib(Error::Parse { field, .. })) => assert_eq!(field, "hermite_combo.dim"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn weights_parse() {
        assert!(matches!(parse_weight("unit").unwrap(), WeightSpec::Unit));
        assert!(matches!(parse_weight("quadratic:h=0.6").unwrap(), WeightSpec::Quadratic { h } if h == 0.6));
        assert!(matches!(
            parse_weight("gs:s=1,t=2,r=0.5").unwrap(),
            WeightSpec::Gs { s, t, r } if s == 1.0 && t == 2.0 && r == 0.5
        ));
        assert!(parse_weight("gs:s=1").is_err());
        assert!(parse_weight("nope").is_err());
    }

    #[test]
    fn points_parse() {
        assert_eq!(parse_points("0,0; 1,0;2,0", 2).unwrap(), vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]);
        assert!(parse_points("1,2,3", 2).is_err());
    }
}
