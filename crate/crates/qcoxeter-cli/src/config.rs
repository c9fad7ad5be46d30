//! Flat sectioned key/value configuration files.
//!
//! ```text
//! [group]
//! family = C
//! rank = 2
//! lattice = adjoint          # adjoint | coweight | explicit
//! # generator = 1/2, 0       # one line per generator row when explicit
//! torsion = 2                # optional comma list of torsion orders
//!
//! [hecke]
//! q = 2                      # uniform, or one value per generator s0..sr
//!
//! [caps]
//! weyl_order_cap = 2000
//! qcg_length_bound = 8
//! node_cap = 50000
//! bfs_cap = 500000
//! max_iter = 0               # 0 keeps the built-in bound
//! seed = 1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use qcoxeter::group::{GroupContext, LatticeSpec};
use qcoxeter::hecke::QParams;
use qcoxeter::linalg::Point;
use qcoxeter::rootsys::{build_root_system, CartanDatum, Family, RootSystem};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing required key {0}")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum LatticeKind {
    Adjoint,
    Coweight,
    Explicit(Vec<Vec<BigRational>>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum QSpec {
    Uniform(u64),
    PerGenerator(Vec<u64>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Caps {
    pub weyl_order_cap: usize,
    pub qcg_length_bound: u64,
    pub node_cap: usize,
    pub bfs_cap: usize,
    pub max_iter: u64,
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            weyl_order_cap: 2000,
            qcg_length_bound: 8,
            node_cap: 50_000,
            bfs_cap: 500_000,
            max_iter: 0,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupConfig {
    pub family: Family,
    pub rank: usize,
    pub lattice: LatticeKind,
    pub torsion: Vec<u64>,
    pub q: QSpec,
    pub caps: Caps,
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| format!("bad rational {:?}", text))?;
    let d: BigInt = den.parse().map_err(|_| format!("bad rational {:?}", text))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {:?}", text));
    }
    Ok(BigRational::new(n, d))
}

impl GroupConfig {
    pub fn parse(text: &str) -> Result<GroupConfig, ConfigError> {
        let mut section = String::new();
        let mut family = None;
        let mut rank = None;
        let mut lattice_kind: Option<String> = None;
        let mut generators: Vec<Vec<BigRational>> = Vec::new();
        let mut torsion: Vec<u64> = Vec::new();
        let mut q: Option<QSpec> = None;
        let mut caps = Caps::default();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| ConfigError::Parse { line, message };
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            if content.starts_with('[') {
                if !content.ends_with(']') {
                    return Err(err("unterminated section header".into()));
                }
                section = content[1..content.len() - 1].trim().to_string();
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err("expected key = value".into()))?;
            let key = key.trim();
            let value = value.trim();
            match (section.as_str(), key) {
                ("group", "family") => {
                    family = Some(match value {
                        "A" | "a" => Family::A,
                        "B" | "b" => Family::B,
                        "C" | "c" => Family::C,
                        "D" | "d" => Family::D,
                        "G" | "g" => Family::G,
                        "F" | "f" => Family::F,
                        other => return Err(err(format!("unknown family {:?}", other))),
                    });
                }
                ("group", "rank") => {
                    rank = Some(value.parse::<usize>().map_err(|e| err(e.to_string()))?);
                }
                ("group", "lattice") => lattice_kind = Some(value.to_string()),
                ("group", "generator") => {
                    let row: Result<Vec<_>, _> = value.split(',').map(parse_rational).collect();
                    generators.push(row.map_err(|m| err(m))?);
                }
                ("group", "torsion") => {
                    let orders: Result<Vec<u64>, _> =
                        value.split(',').map(|v| v.trim().parse::<u64>()).collect();
                    torsion = orders.map_err(|e| err(e.to_string()))?;
                    if torsion.iter().any(|&o| o < 1) {
                        return Err(err("torsion orders must be positive".into()));
                    }
                }
                ("hecke", "q") => {
                    let vals: Result<Vec<u64>, _> =
                        value.split(',').map(|v| v.trim().parse::<u64>()).collect();
                    let vals = vals.map_err(|e| err(e.to_string()))?;
                    q = Some(if vals.len() == 1 {
                        QSpec::Uniform(vals[0])
                    } else {
                        QSpec::PerGenerator(vals)
                    });
                }
                ("caps", "weyl_order_cap") => {
                    caps.weyl_order_cap = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                ("caps", "qcg_length_bound") => {
                    caps.qcg_length_bound = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                ("caps", "node_cap") => {
                    caps.node_cap = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                ("caps", "bfs_cap") => {
                    caps.bfs_cap = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                ("caps", "max_iter") => {
                    caps.max_iter = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                ("caps", "seed") => {
                    caps.seed = value.parse().map_err(|e: std::num::ParseIntError| err(e.to_string()))?;
                }
                (s, k) => {
                    return Err(err(format!("unknown key {:?} in section {:?}", k, s)));
                }
            }
        }

        let family = family.ok_or(ConfigError::Missing("group.family"))?;
        let rank = rank.ok_or(ConfigError::Missing("group.rank"))?;
        let lattice = match lattice_kind.as_deref() {
            None | Some("adjoint") => LatticeKind::Adjoint,
            Some("coweight") => LatticeKind::Coweight,
            Some("explicit") => {
                if generators.is_empty() {
                    return Err(ConfigError::Invalid(
                        "explicit lattice requires generator rows".into(),
                    ));
                }
                if generators.iter().any(|g| g.len() != rank) {
                    return Err(ConfigError::Invalid(format!(
                        "generator rows must have {} entries",
                        rank
                    )));
                }
                LatticeKind::Explicit(generators.clone())
            }
            Some(other) => {
                return Err(ConfigError::Invalid(format!(
                    "unknown lattice kind {:?}",
                    other
                )))
            }
        };
        if !matches!(lattice, LatticeKind::Explicit(_)) && !generators.is_empty() {
            return Err(ConfigError::Invalid(
                "generator rows are only allowed with lattice = explicit".into(),
            ));
        }
        Ok(GroupConfig {
            family,
            rank,
            lattice,
            torsion,
            q: q.unwrap_or(QSpec::Uniform(2)),
            caps,
        })
    }

    pub fn root_system(&self) -> anyhow::Result<RootSystem> {
        let datum = CartanDatum::new(self.family, self.rank)?;
        Ok(build_root_system(datum)?)
    }

    pub fn lattice_spec(&self, rs: &RootSystem) -> LatticeSpec {
        let base = match &self.lattice {
            LatticeKind::Adjoint => LatticeSpec::adjoint(rs),
            LatticeKind::Coweight => LatticeSpec::coweight(rs),
            LatticeKind::Explicit(rows) => LatticeSpec {
                free_generators: rows.iter().map(|r| Point(r.clone())).collect(),
                torsion_orders: vec![],
            },
        };
        base.with_torsion(self.torsion.clone())
    }

    pub fn build_context(&self) -> anyhow::Result<GroupContext> {
        let rs = self.root_system()?;
        let lattice = self.lattice_spec(&rs);
        Ok(GroupContext::new(rs, lattice, self.caps.weyl_order_cap)?)
    }

    pub fn qparams(&self, ctx: &GroupContext) -> anyhow::Result<QParams> {
        let values = match &self.q {
            QSpec::Uniform(v) => vec![*v; ctx.delta_aff_count()],
            QSpec::PerGenerator(vals) => {
                anyhow::ensure!(
                    vals.len() == ctx.delta_aff_count(),
                    "q list must have one value per generator (expected {}, got {})",
                    ctx.delta_aff_count(),
                    vals.len()
                );
                vals.clone()
            }
        };
        Ok(QParams::new(ctx, values)?)
    }

    pub fn lattice_name(&self) -> &'static str {
        match self.lattice {
            LatticeKind::Adjoint => "adjoint",
            LatticeKind::Coweight => "coweight",
            LatticeKind::Explicit(_) => "explicit",
        }
    }
}

/// Applies environment overrides for caps (QCOX_NODE_CAP, QCOX_BFS_CAP,
/// QCOX_MAX_ITER, QCOX_WEYL_CAP).
pub fn apply_env_overrides(caps: &mut Caps) {
    if let Ok(v) = std::env::var("QCOX_NODE_CAP") {
        if let Ok(n) = v.parse() {
            caps.node_cap = n;
        }
    }
    if let Ok(v) = std::env::var("QCOX_BFS_CAP") {
        if let Ok(n) = v.parse() {
            caps.bfs_cap = n;
        }
    }
    if let Ok(v) = std::env::var("QCOX_MAX_ITER") {
        if let Ok(n) = v.parse() {
            caps.max_iter = n;
        }
    }
    if let Ok(v) = std::env::var("QCOX_WEYL_CAP") {
        if let Ok(n) = v.parse() {
            caps.weyl_order_cap = n;
        }
    }
}
