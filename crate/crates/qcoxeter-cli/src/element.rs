//! Element input grammar and canonical serialization.
//!
//! Input: whitespace-separated factors, composed left to right.
//!   s0 .. sr     affine Coxeter generators (s0 is the affine reflection)
//!   t(c1,..,cr)  translation by integer coefficients over the lattice generators
//!   tau(t1,..)   torsion element by residues
//!   omega(NAME)  length-zero section of a named omega generator (g1.., u1..)
//!
//! Canonical output: `t(c1,..,cr) [tau(t1,..)] w(s.. ..)`.

use num_bigint::BigInt;
use thiserror::Error;

use qcoxeter::group::{GroupContext, GroupElement, OmegaElement};
use qcoxeter::rootsys::FiniteWeylElement;

#[derive(Debug, Error)]
pub enum ElementError {
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("generator index {0} out of range")]
    GeneratorRange(usize),
    #[error("translation needs {expected} coefficients, got {got}")]
    TranslationArity { expected: usize, got: usize },
    #[error("torsion tuple needs {expected} residues, got {got}")]
    TorsionArity { expected: usize, got: usize },
    #[error("unknown omega generator name {0:?}")]
    UnknownOmega(String),
    #[error("bad integer {0:?}")]
    BadInteger(String),
}

/// Names of the omega generators: free cyclic factors first (g1, g2, ...),
/// then torsion factors (u1, u2, ...).
pub fn omega_generator_names(ctx: &GroupContext) -> Vec<(String, OmegaElement)> {
    let mut names = Vec::new();
    let mut free_seen = 0usize;
    let mut torsion_seen = 0usize;
    for class in ctx.omega_generators() {
        if class.free.iter().any(|&x| x != 0) {
            free_seen += 1;
            names.push((format!("g{}", free_seen), class));
        } else {
            torsion_seen += 1;
            names.push((format!("u{}", torsion_seen), class));
        }
    }
    names
}

pub fn parse_element(ctx: &GroupContext, text: &str) -> Result<GroupElement, ElementError> {
    let names = omega_generator_names(ctx);
    let mut acc = ctx.identity();
    for token in text.split_whitespace() {
        let factor = parse_factor(ctx, &names, token)?;
        acc = ctx.compose(&acc, &factor);
    }
    Ok(acc)
}

fn parse_int_list(inner: &str) -> Result<Vec<BigInt>, ElementError> {
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|v| {
            let v = v.trim();
            v.parse::<BigInt>()
                .map_err(|_| ElementError::BadInteger(v.to_string()))
        })
        .collect()
}

fn parse_factor(
    ctx: &GroupContext,
    names: &[(String, OmegaElement)],
    token: &str,
) -> Result<GroupElement, ElementError> {
    if let Some(rest) = token.strip_prefix('s') {
        if let Ok(idx) = rest.parse::<usize>() {
            if idx >= ctx.delta_aff_count() {
                return Err(ElementError::GeneratorRange(idx));
            }
            return Ok(ctx.delta_aff(idx));
        }
    }
    if let Some(inner) = token.strip_prefix("t(").and_then(|r| r.strip_suffix(')')) {
        let coeffs = parse_int_list(inner)?;
        if coeffs.len() != ctx.rank() {
            return Err(ElementError::TranslationArity {
                expected: ctx.rank(),
                got: coeffs.len(),
            });
        }
        return Ok(ctx.translation(&ctx.lattice_point(&coeffs)));
    }
    if let Some(inner) = token.strip_prefix("tau(").and_then(|r| r.strip_suffix(')')) {
        let residues = parse_int_list(inner)?;
        if residues.len() != ctx.lattice.torsion_orders.len() {
            return Err(ElementError::TorsionArity {
                expected: ctx.lattice.torsion_orders.len(),
                got: residues.len(),
            });
        }
        let residues: Vec<u64> = residues
            .iter()
            .zip(&ctx.lattice.torsion_orders)
            .map(|(r, &o)| {
                let o_big = BigInt::from(o);
                let m = ((r % &o_big) + &o_big) % &o_big;
                u64::try_from(&m).unwrap()
            })
            .collect();
        return Ok(ctx.torsion_element(residues));
    }
    if let Some(inner) = token.strip_prefix("omega(").and_then(|r| r.strip_suffix(')')) {
        let name = inner.trim();
        let class = names
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.clone())
            .ok_or_else(|| ElementError::UnknownOmega(name.to_string()))?;
        return Ok(ctx.omega_section(&class));
    }
    Err(ElementError::UnknownToken(token.to_string()))
}

/// Reduced word of a finite Weyl element over the simple reflections.
pub fn finite_word(ctx: &GroupContext, u: &FiniteWeylElement) -> Vec<usize> {
    let rs = &ctx.roots;
    let mut word = Vec::new();
    let mut cur = u.clone();
    while !cur.is_identity() {
        let mut progressed = false;
        for i in 1..=rs.rank {
            let pre = cur.inverse().apply_covector(&rs.positive_roots[i - 1].pairings);
            let (_, negative) = rs.classify_covector(&pre).expect("root image");
            if negative {
                word.push(i);
                cur = rs.simple_reflection(i).compose(&cur);
                progressed = true;
                break;
            }
        }
        assert!(progressed, "nontrivial element with no descent");
    }
    word
}

/// Canonical text form, parseable by `parse_element`.
pub fn format_element(ctx: &GroupContext, w: &GroupElement) -> String {
    let coords = ctx
        .lattice_coords(&w.translation)
        .expect("element translation lies in the lattice");
    let coeffs: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    let mut out = format!("t({})", coeffs.join(","));
    if !ctx.lattice.torsion_orders.is_empty() {
        let res: Vec<String> = w.torsion.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!(" tau({})", res.join(",")));
    }
    let word = finite_word(ctx, &w.finite);
    let word_txt: Vec<String> = word.iter().map(|i| format!("s{}", i)).collect();
    out.push_str(&format!(" w({})", word_txt.join(" ")));
    out
}

/// Parses the canonical form produced by `format_element`: the `w(...)`
/// suffix unwraps to a plain generator word.
pub fn parse_canonical(ctx: &GroupContext, text: &str) -> Result<GroupElement, ElementError> {
    let (prefix, word) = match text.find("w(") {
        Some(pos) => {
            let inner = text[pos + 2..]
                .trim_end()
                .strip_suffix(')')
                .ok_or_else(|| ElementError::UnknownToken(text[pos..].to_string()))?;
            (&text[..pos], inner)
        }
        None => (text, ""),
    };
    let rebuilt = format!("{} {}", prefix, word);
    parse_element(ctx, &rebuilt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::GroupConfig;

    fn ctx(text: &str) -> GroupContext {
        GroupConfig::parse(text).unwrap().build_context().unwrap()
    }

    #[test]
    fn parse_generators_and_translations() {
        let c = ctx("[group]\nfamily = A\nrank = 1\n");
        let s0 = parse_element(&c, "s0").unwrap();
        assert_eq!(s0, c.delta_aff(0));
        let t = parse_element(&c, "s0 s1").unwrap();
        assert_eq!(t, parse_element(&c, "t(1)").unwrap());
        assert!(parse_element(&c, "s5").is_err());
        assert!(parse_element(&c, "t(1,2)").is_err());
        assert!(parse_element(&c, "zork").is_err());
    }

    #[test]
    fn roundtrip_canonical_form() {
        let c = ctx("[group]\nfamily = C\nrank = 2\nlattice = coweight\n");
        for seed in 0..20u64 {
            let w = c.random_element(6, seed);
            let text = format_element(&c, &w);
            let back = parse_canonical(&c, &text).unwrap();
            assert_eq!(back, w, "roundtrip failed for {}", text);
        }
    }

    #[test]
    fn omega_and_torsion_tokens() {
        let c = ctx("[group]\nfamily = A\nrank = 1\nlattice = coweight\ntorsion = 2\n");
        let names = omega_generator_names(&c);
        assert_eq!(names.len(), 2);
        assert_eq!(names[0].0, "g1");
        assert_eq!(names[1].0, "u1");
        let g = parse_element(&c, "omega(g1)").unwrap();
        assert_eq!(c.length(&g), 0);
        assert!(!c.omega_projection(&g).is_trivial());
        let u = parse_element(&c, "tau(1)").unwrap();
        assert_eq!(u, c.torsion_element(vec![1]));
        assert!(parse_element(&c, "omega(g9)").is_err());
    }

    #[test]
    fn identity_roundtrip() {
        let c = ctx("[group]\nfamily = A\nrank = 2\n");
        let text = format_element(&c, &c.identity());
        assert_eq!(text, "t(0,0) w()");
        assert_eq!(parse_canonical(&c, &text).unwrap(), c.identity());
    }
}
