//! `qskein` command line: exact colored sl2/sl3 invariants of 2-bridge
//! links, twist expansions, bubble coefficients, and a verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 computation error. JSON results go to stdout, diagnostics to stderr.

mod render;
mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use qskein::jones_2bridge::{colored_jones, Algebra, JonesError, TwoBridgeSpec};
use qskein::twist_formulas::{
    bubble_coeff, multi_twist_expansion_sl2, multi_twist_expansion_sl3, Handedness,
    TwistKindSl2,
};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qskein",
    version,
    about = "Exact colored sl2/sl3 invariants of 2-bridge links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    Sl2,
    Sl3,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Algebra {
        match a {
            AlgebraArg::Sl2 => Algebra::Sl2,
            AlgebraArg::Sl3 => Algebra::Sl3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Half,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HandedArg {
    Right,
    Left,
}

impl From<HandedArg> for Handedness {
    fn from(h: HandedArg) -> Handedness {
        match h {
            HandedArg::Right => Handedness::Right,
            HandedArg::Left => Handedness::Left,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Qident,
    Jw,
    Clasp,
    Twist,
    Bubble,
    Jones,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the colored invariant of a 2-bridge link [2a_1, ..., 2a_l]
    Jones {
        /// Skein theory: sl2 (Kauffman bracket) or sl3 (Kuperberg webs)
        #[arg(long, value_enum, default_value_t = AlgebraArg::Sl2)]
        algebra: AlgebraArg,
        /// Color n: the invariant is J_{n+1} (sl2) or J_{(n,0)} (sl3)
        #[arg(long)]
        color: u32,
        /// Comma-separated even twist counts, e.g. "2,-2,4"
        #[arg(long)]
        link: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Expand a two-strand multi-twist region into clasped eigenstates
    Expand {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Sl2)]
        algebra: AlgebraArg,
        /// Color on the two strands
        #[arg(long)]
        n: u32,
        /// Number of twists (half-twists or full twists, per --kind)
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Twist unit: half (crossing) or full (two crossings); sl3 is
        /// full-twist only
        #[arg(long, value_enum, default_value_t = KindArg::Half)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = HandedArg::Right)]
        handed: HandedArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Expand a clasped bubble into basis webs sigma_t
    Bubble {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Sl2)]
        algebra: AlgebraArg,
        /// Color of the first clasped line
        #[arg(long)]
        n: u32,
        /// Color of the second clasped line
        #[arg(long)]
        m: u32,
        /// Strands in the lower band
        #[arg(long)]
        k: u32,
        /// Strands in the upper band
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Run a formula-vs-oracle verification suite and report per-check
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Scale cap (color / clasp size); each suite documents its default
        #[arg(long)]
        max_n: Option<u32>,
        /// Seed for the randomized spot checks (deterministic per seed)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Term cap for brute-force diagram oracles (default 10_000_000)
        #[arg(long, default_value_t = 10_000_000)]
        max_terms: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Jones {
            algebra,
            color,
            link,
            format,
        } => cmd_jones(algebra, color, &link, format),
        Command::Expand {
            algebra,
            n,
            m,
            kind,
            handed,
            format,
        } => cmd_expand(algebra, n, m, kind, handed, format),
        Command::Bubble {
            algebra,
            n,
            m,
            k,
            l,
            format,
        } => cmd_bubble(algebra, n, m, k, l, format),
        Command::Verify {
            suite,
            max_n,
            seed,
            max_terms,
        } => verify::cmd_verify(suite, max_n, seed, max_terms),
    };
    ExitCode::from(code)
}

fn cmd_jones(algebra: AlgebraArg, color: u32, link: &str, format: FormatArg) -> u8 {
    let spec = match TwoBridgeSpec::parse_text(link) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: invalid --link: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match colored_jones(&spec, color, algebra.into()) {
        Ok(r) => r,
        Err(e @ JonesError::OutOfRange(_)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: computation failed: {e}");
            return EXIT_COMPUTE;
        }
    };
    match format {
        FormatArg::Json => {
            println!("{}", serde_json::to_string(&result.to_json()).unwrap());
        }
        FormatArg::Plain => {
            println!("{}", result.polynomial.format_q());
        }
        FormatArg::Latex => {
            println!("{}", render::latex_poly(&result.polynomial));
        }
    }
    EXIT_OK
}

fn cmd_expand(
    algebra: AlgebraArg,
    n: u32,
    m: u32,
    kind: KindArg,
    handed: HandedArg,
    format: FormatArg,
) -> u8 {
    let expansion = match (algebra, kind) {
        (AlgebraArg::Sl2, KindArg::Half) => {
            multi_twist_expansion_sl2(n, m, TwistKindSl2::Half, handed.into())
        }
        (AlgebraArg::Sl2, KindArg::Full) => {
            multi_twist_expansion_sl2(n, m, TwistKindSl2::Full, handed.into())
        }
        (AlgebraArg::Sl3, KindArg::Full) => multi_twist_expansion_sl3(n, m, handed.into()),
        (AlgebraArg::Sl3, KindArg::Half) => {
            eprintln!(
                "error: sl3 multi-twist expansion is full-twist only (use --kind full)"
            );
            return EXIT_USAGE;
        }
    };
    match format {
        FormatArg::Json => {
            let mut v = expansion.to_json();
            let obj = v.as_object_mut().unwrap();
            obj.insert(
                "algebra".into(),
                serde_json::Value::from(Algebra::from(algebra).name()),
            );
            obj.insert(
                "kind".into(),
                serde_json::Value::from(match kind {
                    KindArg::Half => "half",
                    KindArg::Full => "full",
                }),
            );
            obj.insert(
                "handed".into(),
                serde_json::Value::from(match handed {
                    HandedArg::Right => "right",
                    HandedArg::Left => "left",
                }),
            );
            obj.insert("m".into(), serde_json::Value::from(m));
            println!("{}", serde_json::to_string(&v).unwrap());
        }
        FormatArg::Plain => {
            for (k, c) in &expansion.coefficients {
                println!("{k}: {}", render::plain_rf(c));
            }
        }
        FormatArg::Latex => {
            for (k, c) in &expansion.coefficients {
                println!("{k}: {}", render::latex_rf(c));
            }
        }
    }
    EXIT_OK
}

fn cmd_bubble(algebra: AlgebraArg, n: u32, m: u32, k: u32, l: u32, format: FormatArg) -> u8 {
    if k > n.min(m) || l > n.min(m) {
        eprintln!(
            "error: band sizes k={k}, l={l} exceed min(n, m) = {}",
            n.min(m)
        );
        return EXIT_USAGE;
    }
    let t_lo = k.max(l);
    let t_hi = (k + l).min(n).min(m);
    let mut coeffs = Vec::new();
    for t in t_lo..=t_hi {
        match bubble_coeff(algebra.into(), n, m, k, l, t) {
            Ok(c) => coeffs.push((t, c)),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    match format {
        FormatArg::Json => {
            let mut map = serde_json::Map::new();
            for (t, c) in &coeffs {
                map.insert(t.to_string(), c.to_json());
            }
            let v = serde_json::json!({
                "algebra": Algebra::from(algebra).name(),
                "n": n,
                "m": m,
                "k": k,
                "l": l,
                "coefficients": map,
            });
            println!("{}", serde_json::to_string(&v).unwrap());
        }
        FormatArg::Plain => {
            for (t, c) in &coeffs {
                println!("{t}: {}", render::plain_rf(c));
            }
        }
        FormatArg::Latex => {
            for (t, c) in &coeffs {
                println!("{t}: {}", render::latex_rf(c));
            }
        }
    }
    EXIT_OK
}
