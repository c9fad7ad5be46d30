//! Certificate text documents: serialization and re-parsing for replay.

use std::fmt::Write as _;

use thiserror::Error;

use qcoxeter::diamond::{DiamondCertificate, Phase, TranscriptStep};
use qcoxeter::group::GroupContext;

use crate::element::{format_element, parse_canonical, ElementError};

pub const HEADER: &str = "qcox-certificate v1";

#[derive(Debug, Error)]
pub enum CertDocError {
    #[error("missing header line")]
    MissingHeader,
    #[error("missing field {0}")]
    MissingField(&'static str),
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error(transparent)]
    Element(#[from] ElementError),
}

pub fn render_certificate(ctx: &GroupContext, cert: &DiamondCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", HEADER);
    let _ = writeln!(out, "original: {}", format_element(ctx, &cert.original));
    let _ = writeln!(out, "length: {}", ctx.length(&cert.original));
    let conj: Vec<String> = cert.conjugators.iter().map(|s| format!("s{}", s)).collect();
    let _ = writeln!(
        out,
        "conjugators: {}",
        if conj.is_empty() { "none".to_string() } else { conj.join(" ") }
    );
    let _ = writeln!(out, "witness: s{}", cert.witness);
    let _ = writeln!(out, "final: {}", format_element(ctx, &cert.final_element));
    for (i, step) in cert.transcript.iter().enumerate() {
        let _ = writeln!(
            out,
            "step: {} conjugator=s{} phase={} length={} element={}",
            i + 1,
            step.conjugator,
            step.phase,
            step.length,
            format_element(ctx, &step.element)
        );
    }
    let _ = writeln!(out, "end");
    out
}

fn parse_generator(token: &str) -> Result<usize, CertDocError> {
    token
        .strip_prefix('s')
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| CertDocError::Malformed(token.to_string()))
}

pub fn parse_certificate(
    ctx: &GroupContext,
    text: &str,
) -> Result<DiamondCertificate, CertDocError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == HEADER => {}
        _ => return Err(CertDocError::MissingHeader),
    }
    let mut original = None;
    let mut conjugators = None;
    let mut witness = None;
    let mut final_element = None;
    let mut transcript = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line == "end" {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| CertDocError::Malformed(line.to_string()))?;
        let value = value.trim();
        match key.trim() {
            "original" => original = Some(parse_canonical(ctx, value)?),
            "length" => {}
            "conjugators" => {
                conjugators = Some(if value == "none" {
                    vec![]
                } else {
                    value
                        .split_whitespace()
                        .map(parse_generator)
                        .collect::<Result<Vec<_>, _>>()?
                });
            }
            "witness" => witness = Some(parse_generator(value)?),
            "final" => final_element = Some(parse_canonical(ctx, value)?),
            "step" => {
                let mut conj = None;
                let mut phase = None;
                let mut length = None;
                let mut element = None;
                for part in value.split_whitespace() {
                    if let Some((k, v)) = part.split_once('=') {
                        match k {
                            "conjugator" => conj = Some(parse_generator(v)?),
                            "phase" => {
                                phase = Some(match v {
                                    "intermediate" => Phase::Intermediate,
                                    "antidominant" => Phase::Antidominant,
                                    "dominant-shortcut" => Phase::DominantShortcut,
                                    other => {
                                        return Err(CertDocError::Malformed(other.to_string()))
                                    }
                                });
                            }
                            "length" => {
                                length = Some(
                                    v.parse::<u64>()
                                        .map_err(|_| CertDocError::Malformed(v.to_string()))?,
                                );
                            }
                            "element" => {}
                            _ => return Err(CertDocError::Malformed(part.to_string())),
                        }
                    }
                }
                // the element is the tail after "element="
                if let Some(pos) = value.find("element=") {
                    element = Some(parse_canonical(ctx, &value[pos + 8..])?);
                }
                transcript.push(TranscriptStep {
                    conjugator: conj.ok_or(CertDocError::MissingField("step conjugator"))?,
                    element: element.ok_or(CertDocError::MissingField("step element"))?,
                    length: length.ok_or(CertDocError::MissingField("step length"))?,
                    phase: phase.ok_or(CertDocError::MissingField("step phase"))?,
                });
            }
            other => return Err(CertDocError::Malformed(other.to_string())),
        }
    }
    Ok(DiamondCertificate {
        original: original.ok_or(CertDocError::MissingField("original"))?,
        conjugators: conjugators.ok_or(CertDocError::MissingField("conjugators"))?,
        witness: witness.ok_or(CertDocError::MissingField("witness"))?,
        final_element: final_element.ok_or(CertDocError::MissingField("final"))?,
        transcript,
    })
}
