use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "braidlab", version, about = "Orderings, translation numbers and rotation numbers on braid groups")]
pub struct Cli {
    /// Report layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct BraidArg {
    /// Strand count; inferred from the cone when one is given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Braid word as signed indices, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
}

#[derive(Args, Debug)]
pub struct ConeBraid {
    /// Cone spec, e.g. dehornoy:3, dd:4, rev:dehornoy:3, conj:dehornoy:3:,1 2.
    #[arg(long)]
    pub cone: String,
    #[command(flatten)]
    pub braid: BraidArg,
}

#[derive(Args, Debug)]
pub struct Precision {
    /// Number of powers used for translation numbers.
    #[arg(long, default_value_t = 32)]
    pub k: i64,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    /// Matrix as [[q,r],[s,t]].
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
    /// Cone on B_3 with Δ² positive.
    #[arg(long, default_value = "dehornoy:3")]
    pub cone: String,
    #[command(flatten)]
    pub precision: Precision,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Garside normal form.
    Nf(BraidArg),
    /// Sign of a braid under a cone.
    Sign(ConeBraid),
    /// Order two braids under a cone.
    Cmp {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        n: Option<usize>,
        /// Give exactly twice.
        #[arg(long, allow_hyphen_values = true, required = true)]
        braid: Vec<String>,
    },
    /// Largest m with Δ^{2m} <= β.
    Floor(ConeBraid),
    /// Translation number interval.
    Tau {
        #[command(flatten)]
        args: ConeBraid,
        #[command(flatten)]
        precision: Precision,
    },
    /// Fractional Dehn twist coefficient.
    Fdtc {
        #[command(flatten)]
        braid: BraidArg,
        #[command(flatten)]
        precision: Precision,
        /// disk or torus.
        #[arg(long, default_value = "disk")]
        surface: String,
    },
    /// Rotation number of the image in B_n/<Δ²>.
    Rot {
        #[command(flatten)]
        args: ConeBraid,
        #[command(flatten)]
        precision: Precision,
    },
    /// A braid word mapping to an SL_2(Z) matrix.
    #[command(name = "sl2-word")]
    Sl2Word {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Rotation number of an SL_2(Z) matrix.
    #[command(name = "sl2-rot")]
    Sl2Rot(MatrixArgs),
    /// Rotation number of a PSL_2(Z) class.
    #[command(name = "psl2-rot")]
    Psl2Rot(MatrixArgs),
    /// Boundedness probe for the powers of a braid.
    Probe {
        #[command(flatten)]
        args: ConeBraid,
        /// Largest power tried.
        #[arg(long, default_value_t = 32)]
        k: i64,
    },
    /// Verification suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Experiments.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Garside and power identities.
    Identities {
        /// Single strand count; all of 3..=6 when absent.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 5)]
        k_max: i64,
    },
    /// Dubrovina–Dubrovin cone suite.
    Dd {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, default_value_t = 6)]
        semigroup_len: usize,
    },
    /// Dehornoy ball suite, plus cone axioms for an optional extra cone.
    Cones {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        cone: Option<String>,
    },
    /// Floor defect, continuity and translation bounds.
    Quasimorphism {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[command(flatten)]
        precision: Precision,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Experiment {
    /// τ(Δ²_(n-1)) across the rigid family and the exponent-sum contrast.
    Rigidity {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[command(flatten)]
        precision: Precision,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Agreement of Δ-conjugated cones with the lexicographic one.
    Convergence {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        i_max: i64,
        #[arg(long, default_value_t = 4)]
        len: usize,
    },
    /// Pairwise distinct cones with Δ_(n-1)² bounded.
    Uncountable {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rotation-number comparison of circular orderings.
    Semiconjugacy {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[command(flatten)]
        precision: Precision,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Finite dynamic realisation and numeric translation numbers.
    Realisation {
        #[arg(long, default_value = "dehornoy:3")]
        cone: String,
        #[arg(long, default_value_t = 5)]
        len: usize,
        /// Iterations for the numeric translation number.
        #[arg(long, default_value_t = 8)]
        m: u32,
        #[command(flatten)]
        precision: Precision,
        /// Also print the breakpoint tables of the generator maps.
        #[arg(long)]
        table: bool,
    },
}
