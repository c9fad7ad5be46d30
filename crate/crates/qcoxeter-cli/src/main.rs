use std::path::PathBuf;

use clap::{Parser, Subcommand};

use qcoxeter_cli::commands::{
    cmd_center, cmd_diamond, cmd_orbits, cmd_render, cmd_validate, load_config, DiamondArgs,
    RenderArgs,
};

#[derive(Parser)]
#[command(
    name = "qcox",
    about = "Extended affine Weyl groups: hypothesis validation, diamond certificates, Hecke center tables, translation orbits, and alcove figures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the group hypotheses for a configuration
    Validate { config: PathBuf },
    /// Produce (and optionally check) a diamond certificate
    Diamond {
        config: PathBuf,
        /// element in the input grammar, e.g. "s0 s1" or "t(1,0) s2"
        element: Option<String>,
        /// replay the certificate independently
        #[arg(long)]
        verify: bool,
        /// cross-check against the breadth-first oracle
        #[arg(long = "brute-force")]
        brute_force: bool,
        #[arg(long = "max-iter")]
        max_iter: Option<u64>,
        /// run this many seeded random elements instead of one element
        #[arg(long)]
        batch: Option<usize>,
        #[arg(long = "word-length", default_value_t = 10)]
        word_length: usize,
        /// write the certificate document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Center dimensions against the translation-orbit bound
    Center {
        config: PathBuf,
        #[arg(long)]
        level: u64,
        /// omega class residues (default: every class)
        #[arg(long)]
        tau: Option<String>,
        /// uniform q values to sweep, e.g. 2,3,5
        #[arg(long = "q-list", value_delimiter = ',')]
        q_list: Option<Vec<u64>>,
    },
    /// List translation orbits by length and omega class
    Orbits {
        config: PathBuf,
        #[arg(long)]
        level: u64,
        #[arg(long)]
        tau: Option<String>,
    },
    /// Render a rank-2 alcove figure as SVG
    Render {
        config: PathBuf,
        #[arg(long, default_value_t = 3)]
        radius: i64,
        /// highlight the lateral class of this element
        #[arg(long = "class-of")]
        class_of: Option<String>,
        /// highlight a minimal gallery from the base alcove to this element's alcove
        #[arg(long = "gallery-to")]
        gallery_to: Option<String>,
        #[arg(long = "shade-chambers")]
        shade_chambers: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.cmd {
        Cmd::Validate { config } => cmd_validate(&load_config(&config)?),
        Cmd::Diamond {
            config,
            element,
            verify,
            brute_force,
            max_iter,
            batch,
            word_length,
            out,
        } => cmd_diamond(
            &load_config(&config)?,
            &DiamondArgs {
                element,
                verify,
                brute_force,
                max_iter,
                batch,
                word_length,
                out,
            },
        ),
        Cmd::Center {
            config,
            level,
            tau,
            q_list,
        } => cmd_center(
            &load_config(&config)?,
            level,
            tau.as_deref(),
            q_list.as_deref(),
        ),
        Cmd::Orbits { config, level, tau } => {
            cmd_orbits(&load_config(&config)?, level, tau.as_deref())
        }
        Cmd::Render {
            config,
            radius,
            class_of,
            gallery_to,
            shade_chambers,
            out,
        } => cmd_render(
            &load_config(&config)?,
            &RenderArgs {
                radius,
                class_of,
                gallery_to,
                shade_chambers,
                out,
            },
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {:#}", err);
            2
        }
    };
    std::process::exit(code);
}
