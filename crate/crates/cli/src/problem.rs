//! Problem files: JSON definitions of algebras, actions, crossed maps and
//! truncated deformations.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};
use supercochain::{parse_scalar, ActionMap, GradedSpace, LinearMap, Scalar, SuperAlgebra};

use crate::error::CliError;

/// Names accepted in the `computations` list and on the command line.
pub const COMMANDS: [&str; 7] = [
    "check-algebra",
    "check-triple",
    "check-crossed",
    "cohomology",
    "ch-cohomology",
    "deform",
    "ch-deform",
];

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

/// A JSON object kept in source order; repeated keys are an error.
#[derive(Debug, Clone, Default)]
struct Entries<T>(Vec<(String, T)>);

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Entries<T> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Entries<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out: Vec<(String, T)> = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, T>()? {
                    if out.iter().any(|(seen, _)| *seen == k) {
                        return Err(serde::de::Error::custom(format!("duplicate key `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }
        de.deserialize_map(V(std::marker::PhantomData))
    }
}

type RawVector = Entries<RawScalar>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    left: String,
    right: String,
    value: RawVector,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(default)]
    even: Vec<String>,
    #[serde(default)]
    odd: Vec<String>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    g: String,
    h: String,
    value: RawVector,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTripleCoefficient {
    #[serde(default)]
    g: Vec<RawBracket>,
    #[serde(default)]
    h: Vec<RawBracket>,
    #[serde(default)]
    action: Vec<RawAction>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeformation {
    coefficients: Vec<RawTripleCoefficient>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChDeformation {
    coefficients: Vec<Entries<RawVector>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    g: Option<RawAlgebra>,
    h: Option<RawAlgebra>,
    action: Option<Vec<RawAction>>,
    crossed: Option<Entries<RawVector>>,
    deformation: Option<RawDeformation>,
    ch_deformation: Option<RawChDeformation>,
    computations: Option<Vec<String>>,
}

/// Order-`k` coefficients `(πₖ, ρₖ, μₖ)` for `k = 1..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSeries {
    pub pi: Vec<SuperAlgebra>,
    pub rho: Vec<ActionMap>,
    pub mu: Vec<SuperAlgebra>,
}

/// A validated problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub g: Option<SuperAlgebra>,
    pub h: Option<SuperAlgebra>,
    pub action: Option<ActionMap>,
    pub crossed: Option<LinearMap>,
    pub deformation: Option<TripleSeries>,
    /// `D₁, D₂, …`; the base map is `crossed`.
    pub ch_deformation: Option<Vec<LinearMap>>,
    pub computations: Vec<String>,
}

pub fn parse(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<ProblemFile, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(raw)
}

fn invalid(section: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Validation {
        section: section.into(),
        message: message.into(),
    }
}

fn scalar(section: &str, label: &str, raw: &RawScalar) -> Result<Scalar, CliError> {
    match raw {
        RawScalar::Int(n) => Ok(Scalar::from_integer((*n).into())),
        RawScalar::Text(s) => {
            parse_scalar(s).map_err(|_| invalid(section, format!("coefficient of `{label}` is not a rational: \"{s}\"")))
        }
    }
}

fn index(section: &str, space: &GradedSpace, label: &str) -> Result<usize, CliError> {
    space
        .position(label)
        .ok_or_else(|| invalid(section, format!("unknown label `{label}`")))
}

fn vector(section: &str, space: &GradedSpace, raw: &RawVector) -> Result<Vec<Scalar>, CliError> {
    let mut v = vec![Scalar::from_integer(0.into()); space.dim()];
    for (label, c) in &raw.0 {
        v[index(section, space, label)?] = scalar(section, label, c)?;
    }
    Ok(v)
}

fn parity_check(section: &str, space: &GradedSpace, v: &[Scalar], want: supercochain::Parity) -> Result<(), CliError> {
    for (k, x) in v.iter().enumerate() {
        if *x != Scalar::from_integer(0.into()) && space.parity(k) != want {
            return Err(invalid(
                section,
                format!("parity violation: component `{}` is {} but the value must be {}", space.label(k), space.parity(k), want),
            ));
        }
    }
    Ok(())
}

fn space(section: &str, raw: &RawAlgebra) -> Result<Arc<GradedSpace>, CliError> {
    let mut seen = BTreeSet::new();
    for l in raw.even.iter().chain(&raw.odd) {
        if l.is_empty() {
            return Err(invalid(section, "empty basis label"));
        }
        if !seen.insert(l.as_str()) {
            return Err(invalid(section, format!("duplicate label `{l}`")));
        }
    }
    if seen.is_empty() {
        return Err(invalid(section, "an algebra needs at least one basis vector"));
    }
    GradedSpace::new(raw.even.iter().cloned(), raw.odd.iter().cloned())
        .map(Arc::new)
        .map_err(|e| invalid(section, e.to_string()))
}

fn brackets(section: &str, space: &Arc<GradedSpace>, raw: &[RawBracket]) -> Result<SuperAlgebra, CliError> {
    let mut alg = SuperAlgebra::new(space.clone());
    let mut seen = BTreeSet::new();
    for (n, b) in raw.iter().enumerate() {
        let here = format!("{section}.brackets[{n}]");
        let i = index(&here, space, &b.left)?;
        let j = index(&here, space, &b.right)?;
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(invalid(here, format!("bracket [{}, {}] given twice", b.left, b.right)));
        }
        let v = vector(&here, space, &b.value)?;
        parity_check(&here, space, &v, space.parity(i) + space.parity(j))?;
        if i == j && !space.parity(i).is_odd() && v.iter().any(|x| *x != Scalar::from_integer(0.into())) {
            return Err(invalid(here, format!("[{0}, {0}] must vanish for the even vector `{0}`", b.left)));
        }
        alg.set_bracket(i, j, v).map_err(|e| invalid(&here, e.to_string()))?;
    }
    Ok(alg)
}

fn action(section: &str, g: &Arc<GradedSpace>, h: &Arc<GradedSpace>, raw: &[RawAction]) -> Result<ActionMap, CliError> {
    let mut rho = ActionMap::zero(g.clone(), h.clone());
    let mut seen = BTreeSet::new();
    for (n, a) in raw.iter().enumerate() {
        let here = format!("{section}[{n}]");
        let i = index(&here, g, &a.g)?;
        let j = index(&here, h, &a.h)?;
        if !seen.insert((i, j)) {
            return Err(invalid(here, format!("action of `{}` on `{}` given twice", a.g, a.h)));
        }
        let v = vector(&here, h, &a.value)?;
        parity_check(&here, h, &v, g.parity(i) + h.parity(j))?;
        rho.set(i, j, v).map_err(|e| invalid(&here, e.to_string()))?;
    }
    Ok(rho)
}

fn even_map(section: &str, g: &Arc<GradedSpace>, h: &Arc<GradedSpace>, raw: &Entries<RawVector>) -> Result<LinearMap, CliError> {
    let mut images = vec![vec![Scalar::from_integer(0.into()); h.dim()]; g.dim()];
    for (label, value) in &raw.0 {
        let here = format!("{section}.{label}");
        let i = index(section, g, label)?;
        let v = vector(&here, h, value)?;
        parity_check(&here, h, &v, g.parity(i))?;
        images[i] = v;
    }
    LinearMap::from_images(g.clone(), h.clone(), &images).map_err(|e| invalid(section, e.to_string()))
}

fn require<'a, T>(item: &'a Option<T>, name: &str, by: &str) -> Result<&'a T, CliError> {
    item.as_ref()
        .ok_or_else(|| invalid(by, format!("section `{name}` is required")))
}

fn build(raw: RawProblem) -> Result<ProblemFile, CliError> {
    let gs = raw.g.as_ref().map(|a| space("g", a)).transpose()?;
    let hs = raw.h.as_ref().map(|a| space("h", a)).transpose()?;
    let g = match (&raw.g, &gs) {
        (Some(a), Some(s)) => Some(brackets("g", s, &a.brackets)?),
        _ => None,
    };
    let h = match (&raw.h, &hs) {
        (Some(a), Some(s)) => Some(brackets("h", s, &a.brackets)?),
        _ => None,
    };
    let pair = |by: &str| -> Result<(Arc<GradedSpace>, Arc<GradedSpace>), CliError> {
        Ok((require(&gs, "g", by)?.clone(), require(&hs, "h", by)?.clone()))
    };

    let action_map = match &raw.action {
        Some(a) => {
            let (gs, hs) = pair("action")?;
            Some(action("action", &gs, &hs, a)?)
        }
        None => None,
    };
    let crossed = match &raw.crossed {
        Some(c) => {
            let (gs, hs) = pair("crossed")?;
            require(&action_map, "action", "crossed")?;
            Some(even_map("crossed", &gs, &hs, c)?)
        }
        None => None,
    };

    let deformation = match &raw.deformation {
        Some(d) => {
            let (gs, hs) = pair("deformation")?;
            require(&action_map, "action", "deformation")?;
            if d.coefficients.is_empty() {
                return Err(invalid("deformation", "at least one coefficient is required"));
            }
            let mut series = TripleSeries {
                pi: Vec::new(),
                rho: Vec::new(),
                mu: Vec::new(),
            };
            for (k, c) in d.coefficients.iter().enumerate() {
                let here = format!("deformation.coefficients[{k}]");
                series.pi.push(brackets(&format!("{here}.g"), &gs, &c.g)?);
                series.mu.push(brackets(&format!("{here}.h"), &hs, &c.h)?);
                series.rho.push(action(&format!("{here}.action"), &gs, &hs, &c.action)?);
            }
            Some(series)
        }
        None => None,
    };
    let ch_deformation = match &raw.ch_deformation {
        Some(d) => {
            let (gs, hs) = pair("ch_deformation")?;
            require(&crossed, "crossed", "ch_deformation")?;
            if d.coefficients.is_empty() {
                return Err(invalid("ch_deformation", "at least one coefficient is required"));
            }
            let maps = d
                .coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| even_map(&format!("ch_deformation.coefficients[{k}]"), &gs, &hs, c))
                .collect::<Result<Vec<_>, _>>()?;
            Some(maps)
        }
        None => None,
    };

    let problem = ProblemFile {
        g,
        h,
        action: action_map,
        crossed,
        deformation,
        ch_deformation,
        computations: raw.computations.unwrap_or_default(),
    };
    for c in &problem.computations {
        if !COMMANDS.contains(&c.as_str()) {
            return Err(invalid("computations", format!("unknown computation `{c}`")));
        }
        problem.sections_for(c)?;
    }
    Ok(problem)
}

impl ProblemFile {
    /// Fails naming the first section `command` needs but the file lacks.
    pub fn sections_for(&self, command: &str) -> Result<(), CliError> {
        let needs: &[&str] = match command {
            "check-algebra" => {
                if self.g.is_none() && self.h.is_none() {
                    return Err(invalid(command, "section `g` or `h` is required"));
                }
                &[]
            }
            "check-triple" | "cohomology" => &["g", "h", "action"],
            "check-crossed" | "ch-cohomology" => &["g", "h", "action", "crossed"],
            "deform" => &["g", "h", "action", "deformation"],
            "ch-deform" => &["g", "h", "action", "crossed", "ch_deformation"],
            _ => return Err(invalid("command", format!("unknown command `{command}`"))),
        };
        for &s in needs {
            let present = match s {
                "g" => self.g.is_some(),
                "h" => self.h.is_some(),
                "action" => self.action.is_some(),
                "crossed" => self.crossed.is_some(),
                "deformation" => self.deformation.is_some(),
                _ => self.ch_deformation.is_some(),
            };
            if !present {
                return Err(invalid(command, format!("section `{s}` is required")));
            }
        }
        Ok(())
    }
}
