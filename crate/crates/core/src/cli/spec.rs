//! The `family:N[:param]` state grammar.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::state::SymmetricState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `ghz:N`
    Ghz,
    /// `perp:N`, the orthogonal GHZ partner.
    GhzPerp,
    /// `css:N`, coherent state along +x.
    Css,
    /// `dicke:N:k`
    Dicke,
    /// `oat:N:μ`
    OneAxis,
    /// `tat:N:χ`
    TwoAxis,
    /// `mix:N:p`
    Mixture,
    /// `mixed:N`, maximally mixed on the symmetric subspace.
    MaximallyMixed,
}

impl Family {
    pub fn keyword(self) -> &'static str {
        match self {
            Family::Ghz => "ghz",
            Family::GhzPerp => "perp",
            Family::Css => "css",
            Family::Dicke => "dicke",
            Family::OneAxis => "oat",
            Family::TwoAxis => "tat",
            Family::Mixture => "mix",
            Family::MaximallyMixed => "mixed",
        }
    }

    pub fn takes_param(self) -> bool {
        matches!(
            self,
            Family::Dicke | Family::OneAxis | Family::TwoAxis | Family::Mixture
        )
    }

    pub fn build(self, n: usize, param: f64) -> Result<SymmetricState> {
        match self {
            Family::Ghz => SymmetricState::ghz(n),
            Family::GhzPerp => SymmetricState::ghz_perp(n),
            Family::Css => SymmetricState::coherent_x(n),
            Family::Dicke => {
                if param < 0.0 || param.fract() != 0.0 {
                    return Err(Error::Parse(format!("dicke index `{param}` is not a nonnegative integer")));
                }
                SymmetricState::dicke(n, param as usize)
            }
            Family::OneAxis => SymmetricState::one_axis_twisted(n, param),
            Family::TwoAxis => SymmetricState::two_axis_twisted(n, param),
            Family::Mixture => SymmetricState::ghz_mixture(n, param),
            Family::MaximallyMixed => SymmetricState::maximally_mixed(n),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ghz" => Family::Ghz,
            "perp" => Family::GhzPerp,
            "css" => Family::Css,
            "dicke" => Family::Dicke,
            "oat" => Family::OneAxis,
            "tat" => Family::TwoAxis,
            "mix" => Family::Mixture,
            "mixed" => Family::MaximallyMixed,
            other => return Err(Error::Parse(format!("unknown state family `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    Family { family: Family, n: usize, param: Option<f64> },
    /// `json:<path>`, a serialized state record.
    Json(PathBuf),
}

pub(crate) fn parse_n(token: &str) -> Result<usize> {
    let n: usize = token
        .parse()
        .map_err(|_| Error::Parse(format!("party count `{token}` is not an integer")))?;
    if n < 2 {
        return Err(Error::Parse(format!("party count `{token}` must be at least 2")));
    }
    Ok(n)
}

pub(crate) fn parse_f64(token: &str) -> Result<f64> {
    let x: f64 = token
        .parse()
        .map_err(|_| Error::Parse(format!("parameter `{token}` is not a number")))?;
    if !x.is_finite() {
        return Err(Error::Parse(format!("parameter `{token}` is not finite")));
    }
    Ok(x)
}

impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(path) = s.strip_prefix("json:") {
            return Ok(StateSpec::Json(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.split(':').collect();
        let family: Family = parts[0].parse()?;
        let n = parts
            .get(1)
            .ok_or_else(|| Error::Parse(format!("`{s}` is missing the party count")))
            .and_then(|t| parse_n(t))?;
        let param = match (family.takes_param(), parts.get(2)) {
            (true, Some(t)) => Some(parse_f64(t)?),
            (true, None) => {
                return Err(Error::Parse(format!(
                    "family `{}` needs a parameter",
                    family.keyword()
                )))
            }
            (false, Some(t)) => {
                return Err(Error::Parse(format!(
                    "unexpected token `{t}`: family `{}` takes no parameter",
                    family.keyword()
                )))
            }
            (false, None) => None,
        };
        if parts.len() > 3 {
            return Err(Error::Parse(format!("unexpected token `{}`", parts[3])));
        }
        Ok(StateSpec::Family { family, n, param })
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Family { family, n, param: Some(p) } => write!(f, "{}:{n}:{p}", family.keyword()),
            StateSpec::Family { family, n, param: None } => write!(f, "{}:{n}", family.keyword()),
            StateSpec::Json(p) => write!(f, "json:{}", p.display()),
        }
    }
}

impl StateSpec {
    pub fn build(&self) -> Result<SymmetricState> {
        match self {
            StateSpec::Family { family, n, param } => family.build(*n, param.unwrap_or(0.0)),
            StateSpec::Json(path) => SymmetricState::from_json(&std::fs::read_to_string(path)?),
        }
    }
}

/// `a:b:steps`, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub start: f64,
    pub end: f64,
    pub steps: usize,
}

impl ParamRange {
    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let h = (self.end - self.start) / (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.start + h * i as f64).collect()
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("range `{s}` is not of the form a:b:steps")));
        }
        let start = parse_f64(parts[0])?;
        let end = parse_f64(parts[1])?;
        let steps: usize = parts[2]
            .parse()
            .map_err(|_| Error::Parse(format!("step count `{}` is not an integer", parts[2])))?;
        if steps == 0 {
            return Err(Error::Parse("step count must be positive".into()));
        }
        if end < start {
            return Err(Error::Parse(format!("range `{s}` is decreasing")));
        }
        Ok(Self { start, end, steps })
    }
}
