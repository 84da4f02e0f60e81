//! JSON-compatible configuration for map specifications and whole systems,
//! round-trippable with the catalog builders.

use serde::{Deserialize, Serialize};

use crate::conjugate::{ConjugateSystem, SystemKind};
use crate::error::{Error, Result};
use crate::ifs::{Domain, IfSystem};
use crate::map::{MapForm, MapSpec};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapConfig {
    Affine { slope: f64, offset: f64 },
    Moebius { a: f64, b: f64, c: f64, d: f64 },
    PiecewiseLinear { knots: Vec<(f64, f64)> },
    Similarity2 { ratio: f64, offset: [f64; 2] },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum DomainConfig {
    UnitInterval,
    Interval { lo: f64, hi: f64 },
    Gasket { corners: [[f64; 2]; 3] },
    Box2 { lo: [f64; 2], hi: [f64; 2] },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IfsConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub domain: DomainConfig,
    pub maps: Vec<MapConfig>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SystemConfig {
    pub name: String,
    /// `monotone_interval`, `gasket`, or `generic`.
    pub system_kind: String,
    pub x_side: IfsConfig,
    pub y_side: IfsConfig,
}

impl MapConfig {
    pub fn to_spec(&self) -> Result<MapSpec> {
        Ok(match self {
            MapConfig::Affine { slope, offset } => MapSpec::affine(*slope, *offset),
            MapConfig::Moebius { a, b, c, d } => MapSpec::moebius(*a, *b, *c, *d),
            MapConfig::PiecewiseLinear { knots } => MapSpec::piecewise_linear(knots.clone())?,
            MapConfig::Similarity2 { ratio, offset } => MapSpec::similarity2(*ratio, *offset),
        })
    }

    pub fn from_spec(spec: &MapSpec) -> Result<Self> {
        Ok(match &spec.form {
            MapForm::Affine { slope, offset } => MapConfig::Affine {
                slope: *slope,
                offset: *offset,
            },
            MapForm::Moebius { a, b, c, d } => MapConfig::Moebius {
                a: *a,
                b: *b,
                c: *c,
                d: *d,
            },
            MapForm::PiecewiseLinear { knots } => MapConfig::PiecewiseLinear {
                knots: knots.clone(),
            },
            MapForm::Similarity2 { ratio, offset } => MapConfig::Similarity2 {
                ratio: *ratio,
                offset: *offset,
            },
            other => {
                return Err(Error::Config(format!(
                    "map form {other:?} has no configuration encoding"
                )))
            }
        })
    }
}

impl DomainConfig {
    pub fn to_domain(&self) -> Domain {
        match self {
            DomainConfig::UnitInterval => Domain::UnitInterval,
            DomainConfig::Interval { lo, hi } => Domain::Interval { lo: *lo, hi: *hi },
            DomainConfig::Gasket { corners } => Domain::Gasket { corners: *corners },
            DomainConfig::Box2 { lo, hi } => Domain::Box2 { lo: *lo, hi: *hi },
        }
    }

    pub fn from_domain(d: &Domain) -> Self {
        match d {
            Domain::UnitInterval => DomainConfig::UnitInterval,
            Domain::Interval { lo, hi } => DomainConfig::Interval { lo: *lo, hi: *hi },
            Domain::Gasket { corners } => DomainConfig::Gasket { corners: *corners },
            Domain::Box2 { lo, hi } => DomainConfig::Box2 { lo: *lo, hi: *hi },
        }
    }
}

impl IfsConfig {
    pub fn to_system(&self, fallback_name: &str) -> Result<IfSystem> {
        let maps = self
            .maps
            .iter()
            .map(MapConfig::to_spec)
            .collect::<Result<Vec<_>>>()?;
        IfSystem::new(
            self.name.clone().unwrap_or_else(|| fallback_name.to_string()),
            self.domain.to_domain(),
            maps,
        )
    }

    pub fn from_system(ifs: &IfSystem) -> Result<Self> {
        Ok(IfsConfig {
            name: Some(ifs.name().to_string()),
            domain: DomainConfig::from_domain(ifs.domain()),
            maps: ifs
                .maps()
                .iter()
                .map(MapConfig::from_spec)
                .collect::<Result<_>>()?,
        })
    }
}

fn kind_from_str(s: &str) -> Result<SystemKind> {
    match s {
        "monotone_interval" => Ok(SystemKind::MonotoneInterval),
        "gasket" => Ok(SystemKind::Gasket),
        "generic" => Ok(SystemKind::Generic),
        other => Err(Error::Config(format!("unknown system kind '{other}'"))),
    }
}

fn kind_to_str(k: SystemKind) -> &'static str {
    match k {
        SystemKind::MonotoneInterval => "monotone_interval",
        SystemKind::Gasket => "gasket",
        SystemKind::Generic => "generic",
    }
}

impl SystemConfig {
    pub fn to_system(&self) -> Result<ConjugateSystem> {
        ConjugateSystem::new(
            self.name.clone(),
            kind_from_str(&self.system_kind)?,
            self.x_side.to_system(&format!("{}-x", self.name))?,
            self.y_side.to_system(&format!("{}-y", self.name))?,
        )
    }

    pub fn from_system(sys: &ConjugateSystem) -> Result<Self> {
        Ok(SystemConfig {
            name: sys.name().to_string(),
            system_kind: kind_to_str(sys.kind()).to_string(),
            x_side: IfsConfig::from_system(sys.x_side())?,
            y_side: IfsConfig::from_system(sys.y_side())?,
        })
    }
}

/// Load a system from a JSON configuration file.
pub fn load_system(path: &std::path::Path) -> Result<ConjugateSystem> {
    let text = std::fs::read_to_string(path)?;
    let cfg: SystemConfig = serde_json::from_str(&text)?;
    cfg.to_system()
}

/// Serialize a system to pretty JSON.
pub fn system_to_json(sys: &ConjugateSystem) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SystemConfig::from_system(
        sys,
    )?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;
    use crate::zoo;

    #[test]
    fn catalog_round_trips_through_json() {
        for entry in zoo::catalog() {
            let sys = entry.build().unwrap();
            let json = system_to_json(&sys).unwrap();
            let cfg: SystemConfig = serde_json::from_str(&json).unwrap();
            let back = cfg.to_system().unwrap();
            assert_eq!(back.kind(), sys.kind(), "{}", entry.reference());
            // same behaviour at a probe point
            if sys.kind() != crate::conjugate::SystemKind::Gasket {
                for &x in &[0.25, 0.5, 0.875] {
                    let a = sys.evaluate(Point::scalar(x), 1e-9);
                    let b = back.evaluate(Point::scalar(x), 1e-9);
                    match (a, b) {
                        (Ok((ya, _)), Ok((yb, _))) => {
                            assert!((ya - yb).abs() < 1e-12, "{} at {x}", entry.reference())
                        }
                        (Err(_), Err(_)) => {}
                        _ => panic!("round trip changed evaluability"),
                    }
                }
            }
        }
    }

    #[test]
    fn bad_kind_is_rejected() {
        let sys = zoo::lebesgue(0.5).unwrap();
        let mut cfg = SystemConfig::from_system(&sys).unwrap();
        cfg.system_kind = "spiral".into();
        assert!(cfg.to_system().is_err());
    }
}
