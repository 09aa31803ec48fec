//! Parsers for the compact command-line grammars describing baselines,
//! distributions, targets, and grids.
//!
//! Two surface syntaxes are accepted everywhere a distribution or target
//! is expected: a compact `family:key=value,key=value` form (list values
//! use `;` separators, since `,` separates pairs), and inline JSON for
//! anything starting with `{`. Examples:
//!
//! ```text
//! --baseline exponential:mu=2
//! --baseline normal:mu=0,sigma2=1
//! --dist pmf:points=1;2;3,masses=0.5;0.25;0.25
//! --dist '{"uniform":{"a":0,"b":1}}'
//! --target le:1.5
//! --target interval:0,1
//! --target set:2;4;6
//! --grid 0,10,0.01
//! ```

use std::str::FromStr;

use activeinfo::{BaselineSpec, Distribution, Grid, Pmf, Target};
use serde_json::Value;

fn parse_f64(name: &str, s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("{name}: '{s}' is not a number"))
}

fn parse_semicolon_list(name: &str, s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Err(format!("{name}: empty list"));
    }
    s.split(';').map(|tok| parse_f64(name, tok)).collect()
}

// Split "family:k=v,k=v" into the family name and its key/value pairs.
fn split_spec(s: &str) -> Result<(&str, Vec<(&str, &str)>), String> {
    let (family, rest) = match s.split_once(':') {
        Some((f, r)) => (f.trim(), r),
        None => (s.trim(), ""),
    };
    if family.is_empty() {
        return Err("empty family name".to_string());
    }
    let mut pairs = Vec::new();
    if !rest.trim().is_empty() {
        for item in rest.split(',') {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got '{item}'"))?;
            pairs.push((k.trim(), v.trim()));
        }
    }
    Ok((family, pairs))
}

fn lookup<'a>(pairs: &[(&str, &'a str)], key: &str) -> Option<&'a str> {
    pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn require<'a>(pairs: &[(&str, &'a str)], family: &str, key: &str) -> Result<&'a str, String> {
    lookup(pairs, key).ok_or_else(|| format!("{family} needs {key}=..."))
}

fn json_number(v: &Value, what: &str) -> Result<f64, String> {
    v.as_f64().ok_or_else(|| format!("{what} must be a number"))
}

fn json_number_array(v: &Value, what: &str) -> Result<Vec<f64>, String> {
    v.as_array()
        .ok_or_else(|| format!("{what} must be an array"))?
        .iter()
        .map(|x| json_number(x, what))
        .collect()
}

/// Parse a baseline family spec (no finite pmfs).
pub fn parse_baseline(s: &str) -> Result<BaselineSpec, String> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value =
            serde_json::from_str(s).map_err(|e| format!("invalid JSON baseline: {e}"))?;
        return baseline_from_json(&v);
    }
    let (family, pairs) = split_spec(s)?;
    let spec = match family {
        "equiprobable" => {
            let n = require(&pairs, family, "n")?;
            let n: usize = n
                .parse()
                .map_err(|_| format!("equiprobable n: '{n}' is not a positive integer"))?;
            BaselineSpec::equiprobable(n)
        }
        "uniform" => BaselineSpec::uniform(
            parse_f64("uniform a", require(&pairs, family, "a")?)?,
            parse_f64("uniform b", require(&pairs, family, "b")?)?,
        ),
        "geometric" => {
            BaselineSpec::geometric(parse_f64("geometric mu", require(&pairs, family, "mu")?)?)
        }
        "exponential" => match (lookup(&pairs, "mu"), lookup(&pairs, "rate")) {
            (Some(mu), None) => BaselineSpec::exponential(parse_f64("exponential mu", mu)?),
            (None, Some(rate)) => {
                BaselineSpec::exponential_rate(parse_f64("exponential rate", rate)?)
            }
            (Some(_), Some(_)) => {
                return Err("exponential takes mu=... or rate=..., not both".to_string())
            }
            (None, None) => return Err("exponential needs mu=... or rate=...".to_string()),
        },
        "normal" => BaselineSpec::normal(
            parse_f64("normal mu", require(&pairs, family, "mu")?)?,
            parse_f64("normal sigma2", require(&pairs, family, "sigma2")?)?,
        ),
        other => {
            return Err(format!(
                "unknown family '{other}' (expected equiprobable, uniform, geometric, exponential, or normal)"
            ))
        }
    };
    spec.map_err(|e| e.to_string())
}

fn baseline_from_json(v: &Value) -> Result<BaselineSpec, String> {
    let obj = v
        .as_object()
        .ok_or("baseline JSON must be an object with one family key")?;
    if obj.len() != 1 {
        return Err("baseline JSON must hold exactly one family key".to_string());
    }
    let (family, body) = obj.iter().next().expect("length checked");
    let get = |key: &str| -> Result<f64, String> {
        json_number(
            body.get(key)
                .ok_or_else(|| format!("{family} needs \"{key}\""))?,
            key,
        )
    };
    let spec = match family.as_str() {
        "equiprobable" => {
            let n = body
                .get("n")
                .and_then(Value::as_u64)
                .ok_or("equiprobable needs a positive integer \"n\"")?;
            BaselineSpec::equiprobable(n as usize)
        }
        "uniform" => BaselineSpec::uniform(get("a")?, get("b")?),
        "geometric" => BaselineSpec::geometric(get("mu")?),
        "exponential" => match (body.get("mu"), body.get("rate")) {
            (Some(mu), None) => BaselineSpec::exponential(json_number(mu, "mu")?),
            (None, Some(rate)) => BaselineSpec::exponential_rate(json_number(rate, "rate")?),
            _ => return Err("exponential needs exactly one of \"mu\" or \"rate\"".to_string()),
        },
        "normal" => BaselineSpec::normal(get("mu")?, get("sigma2")?),
        other => return Err(format!("unknown family '{other}'")),
    };
    spec.map_err(|e| e.to_string())
}

/// Parse a distribution: any baseline family, or a finite pmf.
pub fn parse_distribution(s: &str) -> Result<Distribution, String> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value =
            serde_json::from_str(s).map_err(|e| format!("invalid JSON distribution: {e}"))?;
        let obj = v
            .as_object()
            .ok_or("distribution JSON must be an object with one key")?;
        if obj.len() == 1 {
            if let Some(body) = obj.get("pmf") {
                let points = json_number_array(
                    body.get("points").ok_or("pmf needs \"points\"")?,
                    "pmf points",
                )?;
                let masses = json_number_array(
                    body.get("masses").ok_or("pmf needs \"masses\"")?,
                    "pmf masses",
                )?;
                let pmf = Pmf::new(points, masses).map_err(|e| e.to_string())?;
                return Ok(Distribution::from(pmf));
            }
        }
        return baseline_from_json(&v).map(Distribution::from);
    }
    if s.starts_with("pmf") {
        let (_, pairs) = split_spec(s)?;
        let points = parse_semicolon_list("pmf points", require(&pairs, "pmf", "points")?)?;
        let masses = parse_semicolon_list("pmf masses", require(&pairs, "pmf", "masses")?)?;
        let pmf = Pmf::new(points, masses).map_err(|e| e.to_string())?;
        return Ok(Distribution::from(pmf));
    }
    parse_baseline(s).map(Distribution::from)
}

/// A target event as written on the command line. `Set` keeps raw tokens
/// so the same syntax covers numeric atoms and category labels; the
/// numeric interpretation happens in [`CliTarget::to_numeric_target`].
#[derive(Debug, Clone, PartialEq)]
pub enum CliTarget {
    Set(Vec<String>),
    Le(f64),
    Interval(f64, f64),
    Union(Vec<CliTarget>),
}

impl CliTarget {
    /// Interpret as an event on the real line.
    pub fn to_numeric_target(&self) -> Result<Target, String> {
        let t = match self {
            CliTarget::Set(tokens) => {
                let atoms: Result<Vec<f64>, String> = tokens
                    .iter()
                    .map(|t| {
                        t.parse::<f64>()
                            .map_err(|_| format!("set member '{t}' is not a number"))
                    })
                    .collect();
                Target::finite_subset(atoms?)
            }
            CliTarget::Le(x) => Target::half_line_leq(*x),
            CliTarget::Interval(lo, hi) => Target::closed_interval(*lo, *hi),
            CliTarget::Union(parts) => {
                let converted: Result<Vec<Target>, String> =
                    parts.iter().map(|p| p.to_numeric_target()).collect();
                Target::union_of(converted?)
            }
        };
        t.map_err(|e| e.to_string())
    }

    /// The label set, when this target is a plain set of tokens.
    pub fn label_set(&self) -> Option<&[String]> {
        match self {
            CliTarget::Set(tokens) => Some(tokens),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CliTarget::Set(tokens) => format!("{{{}}}", tokens.join(", ")),
            CliTarget::Le(x) => format!("(-inf, {x}]"),
            CliTarget::Interval(lo, hi) => format!("[{lo}, {hi}]"),
            CliTarget::Union(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.describe()).collect();
                inner.join(" u ")
            }
        }
    }
}

pub fn parse_target(s: &str) -> Result<CliTarget, String> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value =
            serde_json::from_str(s).map_err(|e| format!("invalid JSON target: {e}"))?;
        return target_from_json(&v);
    }
    let (kind, rest) = s
        .split_once(':')
        .ok_or("target needs a kind prefix: le:, interval:, or set:")?;
    match kind.trim() {
        "le" => Ok(CliTarget::Le(parse_f64("le bound", rest)?)),
        "interval" => {
            let (lo, hi) = rest
                .split_once(',')
                .ok_or("interval needs two bounds: interval:lo,hi")?;
            let lo = parse_f64("interval lo", lo)?;
            let hi = parse_f64("interval hi", hi)?;
            if !(lo <= hi) {
                return Err(format!("interval needs lo <= hi, got [{lo}, {hi}]"));
            }
            Ok(CliTarget::Interval(lo, hi))
        }
        "set" => {
            let tokens: Vec<String> = rest
                .split(';')
                .map(|t| t.trim().to_string())
                .filter(|t| !t.is_empty())
                .collect();
            if tokens.is_empty() {
                return Err("set target needs at least one member".to_string());
            }
            let mut seen = tokens.clone();
            seen.sort();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err("set target has duplicate members".to_string());
            }
            Ok(CliTarget::Set(tokens))
        }
        other => Err(format!(
            "unknown target kind '{other}' (expected le, interval, or set)"
        )),
    }
}

fn target_from_json(v: &Value) -> Result<CliTarget, String> {
    let obj = v
        .as_object()
        .ok_or("target JSON must be an object with one key")?;
    if obj.len() != 1 {
        return Err("target JSON must hold exactly one key".to_string());
    }
    let (kind, body) = obj.iter().next().expect("length checked");
    match kind.as_str() {
        "le" => Ok(CliTarget::Le(json_number(body, "le")?)),
        "interval" => {
            let bounds = json_number_array(body, "interval")?;
            if bounds.len() != 2 {
                return Err("interval needs [lo, hi]".to_string());
            }
            if !(bounds[0] <= bounds[1]) {
                return Err(format!(
                    "interval needs lo <= hi, got [{}, {}]",
                    bounds[0], bounds[1]
                ));
            }
            Ok(CliTarget::Interval(bounds[0], bounds[1]))
        }
        "set" => {
            let arr = body.as_array().ok_or("set must be an array")?;
            let tokens: Vec<String> = arr
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err("set members must be strings or numbers".to_string()),
                })
                .collect::<Result<_, _>>()?;
            if tokens.is_empty() {
                return Err("set target needs at least one member".to_string());
            }
            Ok(CliTarget::Set(tokens))
        }
        "union" => {
            let arr = body.as_array().ok_or("union must be an array")?;
            let parts: Result<Vec<CliTarget>, String> =
                arr.iter().map(target_from_json).collect();
            let parts = parts?;
            if parts.is_empty() {
                return Err("union needs at least one part".to_string());
            }
            if parts.iter().any(|p| matches!(p, CliTarget::Union(_))) {
                return Err("unions cannot nest".to_string());
            }
            Ok(CliTarget::Union(parts))
        }
        other => Err(format!("unknown target kind '{other}'")),
    }
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let s = s.trim();
    if s == "auto" {
        return Ok(Grid::Auto);
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "grid must be 'auto' or 'lo,hi,step', got '{s}'"
        ));
    }
    let lo = parse_f64("grid lo", parts[0])?;
    let hi = parse_f64("grid hi", parts[1])?;
    let step = parse_f64("grid step", parts[2])?;
    Grid::range(lo, hi, step).map_err(|e| e.to_string())
}

/// Newtype wrappers so clap can parse these via `FromStr` (failures
/// surface as usage errors).
macro_rules! from_str_arg {
    ($name:ident, $inner:ty, $parser:expr) => {
        #[derive(Debug, Clone)]
        pub struct $name(pub $inner);

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                ($parser)(s).map($name)
            }
        }
    };
}

from_str_arg!(BaselineArg, BaselineSpec, parse_baseline);
from_str_arg!(DistArg, Distribution, parse_distribution);
from_str_arg!(TargetArg, CliTarget, parse_target);
from_str_arg!(GridArg, Grid, parse_grid);

/// `x,y,z` velocity triple.
#[derive(Debug, Clone)]
pub struct VelocityArg(pub [f64; 3]);

impl FromStr for VelocityArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("velocity must be 'x,y,z', got '{s}'"));
        }
        let mut v = [0.0f64; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = parse_f64("velocity component", part)?;
        }
        Ok(VelocityArg(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn baseline_compact_forms() {
        assert_eq!(
            parse_baseline("equiprobable:n=8").unwrap(),
            BaselineSpec::equiprobable(8).unwrap()
        );
        assert_eq!(
            parse_baseline("uniform:a=0,b=1").unwrap(),
            BaselineSpec::uniform(0.0, 1.0).unwrap()
        );
        assert_eq!(
            parse_baseline("geometric:mu=4").unwrap(),
            BaselineSpec::geometric(4.0).unwrap()
        );
        assert_eq!(
            parse_baseline("exponential:mu=2").unwrap(),
            BaselineSpec::exponential(2.0).unwrap()
        );
        assert_eq!(
            parse_baseline("exponential:rate=0.5").unwrap(),
            BaselineSpec::exponential_rate(0.5).unwrap()
        );
        assert_eq!(
            parse_baseline("normal:mu=0,sigma2=1").unwrap(),
            BaselineSpec::normal(0.0, 1.0).unwrap()
        );
    }

    #[test]
    fn baseline_json_forms() {
        assert_eq!(
            parse_baseline("{\"exponential\":{\"rate\":1.5}}").unwrap(),
            BaselineSpec::exponential_rate(1.5).unwrap()
        );
        assert_eq!(
            parse_baseline("{\"normal\":{\"mu\":2,\"sigma2\":9}}").unwrap(),
            BaselineSpec::normal(2.0, 9.0).unwrap()
        );
        assert_eq!(
            parse_baseline("{\"equiprobable\":{\"n\":10}}").unwrap(),
            BaselineSpec::equiprobable(10).unwrap()
        );
    }

    #[test]
    fn baseline_rejects_garbage() {
        assert!(parse_baseline("cauchy:x0=0").is_err());
        assert!(parse_baseline("uniform:a=1,b=0").is_err());
        assert!(parse_baseline("uniform:a=0").is_err());
        assert!(parse_baseline("exponential:mu=2,rate=0.5").is_err());
        assert!(parse_baseline("geometric:mu=0.5").is_err());
        assert!(parse_baseline("{\"uniform\":{\"a\":0}}").is_err());
        assert!(parse_baseline("{bad json").is_err());
    }

    #[test]
    fn pmf_distribution_forms() {
        let d = parse_distribution("pmf:points=1;2;3,masses=0.5;0.25;0.25").unwrap();
        let t = Target::finite_subset(vec![1.0]).unwrap();
        assert_eq!(d.probability(&t).unwrap(), 0.5);
        let d2 =
            parse_distribution("{\"pmf\":{\"points\":[1,2,3],\"masses\":[0.5,0.25,0.25]}}")
                .unwrap();
        assert_eq!(d2.probability(&t).unwrap(), 0.5);
        assert!(parse_distribution("pmf:points=1;2,masses=0.5").is_err());
        assert!(parse_distribution("pmf:points=1;2,masses=0.9;0.2").is_err());
    }

    #[test]
    fn target_forms() {
        assert_eq!(parse_target("le:1.5").unwrap(), CliTarget::Le(1.5));
        assert_eq!(
            parse_target("interval:0,1").unwrap(),
            CliTarget::Interval(0.0, 1.0)
        );
        assert_eq!(
            parse_target("set:2;4;6").unwrap(),
            CliTarget::Set(vec!["2".into(), "4".into(), "6".into()])
        );
        assert_eq!(
            parse_target("set:red;blue").unwrap(),
            CliTarget::Set(vec!["red".into(), "blue".into()])
        );
        let u = parse_target("{\"union\":[{\"interval\":[0,1]},{\"le\":-5}]}").unwrap();
        assert!(matches!(u, CliTarget::Union(ref p) if p.len() == 2));
        assert!(u.to_numeric_target().is_ok());
    }

    #[test]
    fn target_rejects_garbage() {
        assert!(parse_target("between:0,1").is_err());
        assert!(parse_target("interval:1,0").is_err());
        assert!(parse_target("le:abc").is_err());
        assert!(parse_target("set:").is_err());
        assert!(parse_target("set:a;a").is_err());
        assert!(parse_target("1.5").is_err());
        // overlapping union caught on numeric conversion
        let u = parse_target("{\"union\":[{\"interval\":[0,2]},{\"interval\":[1,3]}]}").unwrap();
        assert!(u.to_numeric_target().is_err());
    }

    #[test]
    fn numeric_conversion_of_label_sets_fails_cleanly() {
        let t = parse_target("set:red;blue").unwrap();
        assert!(t.to_numeric_target().is_err());
        assert_eq!(
            t.label_set().unwrap(),
            &["red".to_string(), "blue".to_string()]
        );
    }

    #[test]
    fn grid_forms() {
        assert_eq!(parse_grid("auto").unwrap(), Grid::Auto);
        assert_eq!(
            parse_grid("0,10,0.01").unwrap(),
            Grid::range(0.0, 10.0, 0.01).unwrap()
        );
        assert!(parse_grid("0,10").is_err());
        assert!(parse_grid("10,0,0.01").is_err());
    }

    #[test]
    fn velocity_triple() {
        let v: VelocityArg = "200,-150,50".parse().unwrap();
        assert_eq!(v.0, [200.0, -150.0, 50.0]);
        assert!("1,2".parse::<VelocityArg>().is_err());
        assert!("a,b,c".parse::<VelocityArg>().is_err());
    }
}
