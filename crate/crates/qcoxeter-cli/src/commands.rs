//! Subcommand implementations; each returns a process exit code
//! (0 all requested checks passed, 1 a check failed, 2 usage or input error).

use std::path::Path;

use anyhow::Context;

use qcoxeter::diamond::{
    brute_force_diamond, find_diamond, lateral_class, verify_certificate, BruteForceOutcome,
    DiamondError, SearchOptions,
};
use qcoxeter::geometry::{minimal_gallery, Alcove};
use qcoxeter::group::{validate_qcg, GroupContext, OmegaElement};
use qcoxeter::hecke::{check_dimension_bound, translation_orbit_count, QParams};

use crate::config::{apply_env_overrides, Caps, GroupConfig, QSpec};
use crate::element::{format_element, parse_element};
use crate::certdoc::render_certificate;
use crate::svg::{render, FigureSpec};

pub fn load_config(path: &Path) -> anyhow::Result<GroupConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    let mut cfg = GroupConfig::parse(&text)?;
    apply_env_overrides(&mut cfg.caps);
    Ok(cfg)
}

fn search_options(caps: &Caps, max_iter_flag: Option<u64>) -> SearchOptions {
    let mut opts = SearchOptions {
        bfs_cap: caps.bfs_cap,
        ..SearchOptions::default()
    };
    let cap = max_iter_flag.unwrap_or(caps.max_iter);
    if cap > 0 {
        opts.max_iter = Some(cap);
    }
    opts
}

/// Residues over the nontrivial omega factors, e.g. "1" or "2,1"; "triv" or
/// an empty string is the trivial class.
pub fn parse_tau(ctx: &GroupContext, text: &str) -> anyhow::Result<OmegaElement> {
    let mut tau = ctx.trivial_omega();
    let text = text.trim();
    if text.is_empty() || text == "triv" {
        return Ok(tau);
    }
    let residues: Vec<u64> = text
        .split(',')
        .map(|v| v.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .context("tau residues must be nonnegative integers")?;
    let free_slots: Vec<usize> = (0..ctx.free_orders.len())
        .filter(|&i| ctx.free_orders[i] > 1)
        .collect();
    let expected = free_slots.len() + ctx.lattice.torsion_orders.len();
    anyhow::ensure!(
        residues.len() == expected,
        "tau needs {} residues (nontrivial free factors then torsion), got {}",
        expected,
        residues.len()
    );
    for (k, &i) in free_slots.iter().enumerate() {
        tau.free[i] = residues[k] % ctx.free_orders[i];
    }
    for (k, o) in ctx.lattice.torsion_orders.iter().enumerate() {
        tau.torsion[k] = residues[free_slots.len() + k] % o;
    }
    Ok(tau)
}

pub fn format_tau(ctx: &GroupContext, tau: &OmegaElement) -> String {
    if tau.is_trivial() {
        return "triv".into();
    }
    let mut parts = Vec::new();
    for i in 0..ctx.free_orders.len() {
        if ctx.free_orders[i] > 1 {
            parts.push(tau.free[i].to_string());
        }
    }
    for t in &tau.torsion {
        parts.push(t.to_string());
    }
    parts.join(",")
}

pub fn cmd_validate(cfg: &GroupConfig) -> anyhow::Result<i32> {
    let rs = cfg.root_system()?;
    let lattice = cfg.lattice_spec(&rs);
    let report = validate_qcg(&rs, &lattice, cfg.caps.weyl_order_cap, cfg.caps.qcg_length_bound);
    print!("{}", report.render());
    // q invariance is part of the configuration contract
    if report.all_passed() {
        let ctx = cfg.build_context()?;
        match cfg.qparams(&ctx) {
            Ok(_) => println!("PASS q conjugation-invariance"),
            Err(e) => {
                println!("FAIL q conjugation-invariance: {}", e);
                return Ok(1);
            }
        }
        Ok(0)
    } else {
        Ok(1)
    }
}

pub struct DiamondArgs {
    pub element: Option<String>,
    pub verify: bool,
    pub brute_force: bool,
    pub max_iter: Option<u64>,
    pub batch: Option<usize>,
    pub word_length: usize,
    pub out: Option<std::path::PathBuf>,
}

fn run_one_diamond(
    ctx: &GroupContext,
    cfg: &GroupConfig,
    w: &qcoxeter::group::GroupElement,
    args: &DiamondArgs,
    emit_doc: bool,
) -> anyhow::Result<bool> {
    let opts = search_options(&cfg.caps, args.max_iter);
    let cert = match find_diamond(ctx, w, &opts) {
        Ok(c) => c,
        Err(DiamondError::TranslationInput) => {
            eprintln!(
                "element {} is a translation; the theorem hypothesis requires w \u{2209} \u{039b}",
                format_element(ctx, w)
            );
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let doc = render_certificate(ctx, &cert);
    if emit_doc {
        match &args.out {
            Some(path) => std::fs::write(path, &doc)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{}", doc),
        }
    }
    let mut ok = true;
    if args.verify {
        match verify_certificate(ctx, w, &cert) {
            Ok(()) => {
                if emit_doc {
                    println!("verified: true");
                }
            }
            Err(e) => {
                println!("verified: false ({})", e);
                ok = false;
            }
        }
    }
    if args.brute_force {
        match brute_force_diamond(ctx, w, cfg.caps.node_cap)? {
            BruteForceOutcome::Found { element, witness, depth, .. } => {
                if emit_doc {
                    println!(
                        "oracle: witness s{} at depth {} on {}",
                        witness,
                        depth,
                        format_element(ctx, &element)
                    );
                }
                let class = lateral_class(ctx, w, cfg.caps.node_cap);
                if !class.elements.contains(&cert.final_element) {
                    println!("oracle: certificate final element is outside the explored class");
                    ok = false;
                }
            }
            BruteForceOutcome::CapExhausted { explored } => {
                println!("oracle: node cap exhausted after {} elements", explored);
                ok = false;
            }
            BruteForceOutcome::ClassExhaustedNoWitness { class_size } => {
                println!(
                    "oracle: class of size {} has no direct witness; this contradicts the theorem",
                    class_size
                );
                ok = false;
            }
        }
    }
    Ok(ok)
}

pub fn cmd_diamond(cfg: &GroupConfig, args: &DiamondArgs) -> anyhow::Result<i32> {
    let ctx = cfg.build_context()?;
    if let Some(n) = args.batch {
        let mut passed = 0usize;
        let mut skipped = 0usize;
        for i in 0..n {
            let w = ctx.random_element(args.word_length, cfg.caps.seed.wrapping_add(i as u64));
            if ctx.is_translation(&w) {
                skipped += 1;
                continue;
            }
            if run_one_diamond(&ctx, cfg, &w, args, false)? {
                passed += 1;
            } else {
                println!("batch: failure at element {}", format_element(&ctx, &w));
                return Ok(1);
            }
        }
        println!("batch: {} runs passed, {} translations skipped", passed, skipped);
        return Ok(0);
    }
    let Some(word) = &args.element else {
        anyhow::bail!("an element or --batch is required");
    };
    let w = parse_element(&ctx, word).map_err(anyhow::Error::from)?;
    if ctx.is_translation(&w) {
        eprintln!(
            "element {} is a translation; the theorem hypothesis requires w \u{2209} \u{039b}",
            format_element(&ctx, &w)
        );
        return Ok(2);
    }
    Ok(if run_one_diamond(&ctx, cfg, &w, args, true)? { 0 } else { 1 })
}

pub fn cmd_center(
    cfg: &GroupConfig,
    level: u64,
    tau_arg: Option<&str>,
    q_list: Option<&[u64]>,
) -> anyhow::Result<i32> {
    let ctx = cfg.build_context()?;
    let taus: Vec<OmegaElement> = match tau_arg {
        Some(t) => vec![parse_tau(&ctx, t)?],
        None => ctx.all_omega_classes(),
    };
    let q_values: Vec<Vec<u64>> = match (q_list, &cfg.q) {
        (Some(list), _) => list.iter().map(|&q| vec![q; ctx.delta_aff_count()]).collect(),
        (None, QSpec::Uniform(q)) => vec![vec![*q; ctx.delta_aff_count()]],
        (None, QSpec::PerGenerator(vals)) => vec![vals.clone()],
    };
    println!("type lattice level tau q dim N tight");
    let mut violated = false;
    for tau in &taus {
        for q_vals in &q_values {
            let q = QParams::new(&ctx, q_vals.clone())?;
            let report = check_dimension_bound(&ctx, level, tau, &q);
            let q_txt = if q_vals.iter().all(|&v| v == q_vals[0]) {
                q_vals[0].to_string()
            } else {
                q_vals
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            println!(
                "{}{} {} {} {} {} {} {} {}",
                cfg.family,
                cfg.rank,
                cfg.lattice_name(),
                level,
                format_tau(&ctx, tau),
                q_txt,
                report.dimension,
                report.orbit_count,
                if report.tight { "yes" } else { "no" }
            );
            if !report.passed {
                println!(
                    "BOUND VIOLATION: dim {} > N {} at tau {}",
                    report.dimension,
                    report.orbit_count,
                    format_tau(&ctx, tau)
                );
                violated = true;
            }
        }
    }
    Ok(if violated { 1 } else { 0 })
}

pub fn cmd_orbits(cfg: &GroupConfig, level: u64, tau_arg: Option<&str>) -> anyhow::Result<i32> {
    let ctx = cfg.build_context()?;
    let taus: Vec<OmegaElement> = match tau_arg {
        Some(t) => vec![parse_tau(&ctx, t)?],
        None => ctx.all_omega_classes(),
    };
    for tau in &taus {
        let (count, orbits) = translation_orbit_count(&ctx, level, tau);
        println!("tau {}: {} orbits with length <= {}", format_tau(&ctx, tau), count, level);
        for o in &orbits {
            let coords = ctx
                .lattice_coords(&o.dominant)
                .expect("dominant representative lies in the lattice");
            let coeffs: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            let torsion = if o.torsion.is_empty() {
                String::new()
            } else {
                format!(
                    " torsion=({})",
                    o.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
                )
            };
            println!(
                "  orbit rep=t({}){} length={} size={}",
                coeffs.join(","),
                torsion,
                o.length,
                o.size
            );
        }
    }
    Ok(0)
}

pub struct RenderArgs {
    pub radius: i64,
    pub class_of: Option<String>,
    pub gallery_to: Option<String>,
    pub shade_chambers: bool,
    pub out: std::path::PathBuf,
}

pub fn cmd_render(cfg: &GroupConfig, args: &RenderArgs) -> anyhow::Result<i32> {
    let ctx = cfg.build_context()?;
    let mut fig = FigureSpec {
        radius: args.radius,
        base: true,
        shade_chambers: args.shade_chambers,
        ..Default::default()
    };
    if let Some(word) = &args.class_of {
        let w = parse_element(&ctx, word).map_err(anyhow::Error::from)?;
        let class = lateral_class(&ctx, &w, cfg.caps.node_cap);
        if !class.complete {
            eprintln!("warning: lateral class truncated at the node cap");
        }
        fig.class = class
            .elements
            .iter()
            .map(|g| Alcove::of_element(&ctx, g))
            .collect();
    }
    if let Some(word) = &args.gallery_to {
        let w = parse_element(&ctx, word).map_err(anyhow::Error::from)?;
        let target = Alcove::of_element(&ctx, &w);
        let gallery = minimal_gallery(&ctx.roots, &Alcove::base(&ctx.roots), &target);
        fig.gallery = gallery.alcoves;
    }
    let svg = render(&ctx, &fig)?;
    std::fs::write(&args.out, svg).with_context(|| format!("writing {}", args.out.display()))?;
    println!("wrote {}", args.out.display());
    Ok(0)
}
