use clap::{Parser, Subcommand, ValueEnum};

use debruijn_words::cli::{self, Command, OutputFormat, RunConfig, TargetKind};

/// Generate and verify De Bruijn sequences over primitive words, and words
/// containing every square of a given length.
#[derive(Parser)]
#[command(name = "dbwords", version, about)]
struct Args {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: CommandArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    /// Every square v^2 with v of length n (factor length 2n)
    Squares,
    /// Every primitive word of length n
    Primitive,
    /// Every word of length n
    All,
}

#[derive(Subcommand)]
enum CommandArg {
    /// Greedy De Bruijn word over the primitive words of length n
    PrimitiveDb {
        /// Alphabet size (k >= 2)
        #[arg(short)]
        k: u32,
        /// Word length (n >= 2)
        #[arg(short)]
        n: u32,
    },
    /// Word containing every square of length 2n
    SquareWord {
        #[arg(short)]
        k: u32,
        /// Square root length (n >= 2)
        #[arg(short)]
        n: u32,
        /// Linearized De Bruijn seed of order n-1 (length k^(n-1) + n - 2);
        /// generated greedily when absent
        #[arg(long)]
        seed: Option<String>,
    },
    /// Classic greedy De Bruijn word over all words of length n
    ClassicDb {
        #[arg(short)]
        k: u32,
        /// Factor length (n >= 1)
        #[arg(short)]
        n: u32,
    },
    /// Check factor coverage of a word read from standard input
    Verify {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        n: u32,
        /// Dictionary to check against
        #[arg(long, value_enum)]
        targets: TargetArg,
        /// Read the word cyclically
        #[arg(long)]
        circular: bool,
    },
    /// Tabulate counts, bounds and achieved lengths over a (k, n) grid
    Table {
        #[arg(long, default_value_t = 2)]
        k_min: u32,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Exhaustive shortest square-covering word search (tiny instances)
    MinCover {
        #[arg(short)]
        k: u32,
        #[arg(short)]
        n: u32,
        /// Maximum number of search states to expand
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        /// Run even when k^n exceeds the default gate of 4
        #[arg(long)]
        force: bool,
    },
}

fn main() {
    let args = Args::parse();
    let command = match args.command {
        CommandArg::PrimitiveDb { k, n } => Command::PrimitiveDb { k, n },
        CommandArg::SquareWord { k, n, seed } => Command::SquareWord { k, n, seed },
        CommandArg::ClassicDb { k, n } => Command::ClassicDb { k, n },
        CommandArg::Verify {
            k,
            n,
            targets,
            circular,
        } => Command::Verify {
            k,
            n,
            targets: match targets {
                TargetArg::Squares => TargetKind::Squares,
                TargetArg::Primitive => TargetKind::Primitive,
                TargetArg::All => TargetKind::All,
            },
            circular,
        },
        CommandArg::Table {
            k_min,
            k_max,
            n_min,
            n_max,
        } => Command::Table {
            k_range: k_min..=k_max,
            n_range: n_min..=n_max,
        },
        CommandArg::MinCover {
            k,
            n,
            budget,
            force,
        } => Command::MinCover {
            k,
            n,
            budget,
            force,
        },
    };
    let config = RunConfig {
        command,
        format: match args.format {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        },
    };
    let code = cli::run(
        &config,
        std::io::stdin().lock(),
        std::io::stdout().lock(),
        std::io::stderr().lock(),
    );
    std::process::exit(code);
}
