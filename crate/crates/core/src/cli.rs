//! The `bott` command line tool.
//!
//! Exit codes: 0 success (or `isomorphic`), 1 `distinct`, 2 invalid input or
//! a tower that is not Z-trivial, 3 ambiguous labelled reconstruction.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::census::enumerate_labelled;
use crate::deck::{make_deck, reconstruct, Deck, Reconstruction};
use crate::error::Error;
use crate::forest::{BottDiagram, Label};
use crate::text::format_diagram_stream;
use crate::tower::{tower_of_diagram, BottMatrix};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_AMBIGUOUS: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bott",
    version,
    about = "Cohomology, Chern classes and Bott diagrams of Bott towers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the total Chern class of a tower
    Chern {
        /// Tower matrix file, or `-` for standard input
        tower: PathBuf,
    },
    /// Print the Bott diagram of a Z-trivial tower
    Diagram { tower: PathBuf },
    /// Decide whether two Z-trivial towers are biholomorphic
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Also print both Chern classes in the z generators
        #[arg(long)]
        chern: bool,
    },
    /// Print the deck of a forest
    Deck { forest: PathBuf },
    /// Rebuild a forest from its deck
    Reconstruct {
        deck: PathBuf,
        /// Compare edge labels too
        #[arg(long)]
        labelled: bool,
    },
    /// List all Bott diagrams on n vertices up to isomorphism
    Enumerate {
        n: usize,
        /// Largest edge label
        #[arg(long, default_value_t = 1)]
        qmax: Label,
        /// Finish with a `count=<k>` line
        #[arg(long)]
        count: bool,
    },
    /// Print a tower realizing a Bott diagram
    Tower { forest: PathBuf },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: u8, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, Outcome> {
        let text = if path.as_os_str() == "-" {
            if self.stdin_used {
                return Err(Outcome::fail(
                    EXIT_INVALID,
                    "error: standard input can only be read once\n".into(),
                ));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map(|_| s)
        } else {
            std::fs::read_to_string(path)
        };
        text.map_err(|e| {
            Outcome::fail(
                EXIT_INVALID,
                format!("error: cannot read {}: {e}\n", path.display()),
            )
        })
    }

    fn parse<T>(&mut self, path: &PathBuf) -> Result<T, Outcome>
    where
        T: std::str::FromStr<Err = Error>,
    {
        let text = self.read(path)?;
        text.parse::<T>().map_err(|e| file_error(path, &e))
    }
}

fn file_error(path: &Path, e: &Error) -> Outcome {
    let msg = match e {
        Error::Parse(p) => p.to_string(),
        other => other.to_string(),
    };
    Outcome::fail(EXIT_INVALID, format!("error: {}: {msg}\n", path.display()))
}

/// Run the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome::fail(code, rendered)
            };
        }
    };
    let mut input = Input {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut input) {
        Ok(out) | Err(out) => out,
    }
}

fn execute(command: Command, input: &mut Input<'_>) -> Result<Outcome, Outcome> {
    match command {
        Command::Chern { tower } => {
            let m: BottMatrix = input.parse(&tower)?;
            Ok(Outcome::ok(format!("{}\n", m.presentation().total_chern())))
        }
        Command::Diagram { tower } => {
            let m: BottMatrix = input.parse(&tower)?;
            match m.diagram() {
                Ok(d) => Ok(Outcome::ok(d.to_string())),
                Err(Error::NotZTrivial(e)) => Ok(Outcome {
                    code: EXIT_INVALID,
                    stdout: format!("{e}\n"),
                    stderr: String::new(),
                }),
                Err(e) => Err(file_error(&tower, &e)),
            }
        }
        Command::Iso {
            first,
            second,
            chern,
        } => {
            let m1: BottMatrix = input.parse(&first)?;
            let m2: BottMatrix = input.parse(&second)?;
            let d1 = m1.diagram().map_err(|e| file_error(&first, &e))?;
            let d2 = m2.diagram().map_err(|e| file_error(&second, &e))?;
            let same = d1.is_isomorphic(&d2);
            let mut out = String::from(if same { "isomorphic\n" } else { "distinct\n" });
            if chern {
                let c1 = m1.chern_in_z_basis().map_err(|e| file_error(&first, &e))?;
                let c2 = m2.chern_in_z_basis().map_err(|e| file_error(&second, &e))?;
                let _ = writeln!(out, "chern1: {}", c1.display_with('z'));
                let _ = writeln!(out, "chern2: {}", c2.display_with('z'));
                let verdict = if c1 == c2 { "equal" } else { "different" };
                let _ = writeln!(out, "chern: {verdict}");
            }
            Ok(Outcome {
                code: if same { EXIT_OK } else { EXIT_NEGATIVE },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::Deck { forest } => {
            let d: BottDiagram = input.parse(&forest)?;
            let deck = make_deck(&d).map_err(|e| file_error(&forest, &e))?;
            Ok(Outcome::ok(deck.to_string()))
        }
        Command::Reconstruct { deck, labelled } => {
            let parsed: Deck = input.parse(&deck)?;
            match reconstruct(&parsed, labelled).map_err(|e| file_error(&deck, &e))? {
                Reconstruction::Forest(f) => Ok(Outcome::ok(f.to_string())),
                Reconstruction::Ambiguous { shape, unknown } => {
                    let vertices: Vec<String> =
                        unknown.iter().map(|v| (v + 1).to_string()).collect();
                    Ok(Outcome {
                        code: EXIT_AMBIGUOUS,
                        stdout: format!(
                            "ambiguous\n{shape}unknown-labels: {}\n",
                            vertices.join(" ")
                        ),
                        stderr: String::new(),
                    })
                }
            }
        }
        Command::Enumerate { n, qmax, count } => {
            if n == 0 || qmax == 0 {
                return Err(Outcome::fail(
                    EXIT_INVALID,
                    "error: n and --qmax must be at least 1\n".into(),
                ));
            }
            let all = enumerate_labelled(n, qmax);
            let mut out = format_diagram_stream(&all);
            if count {
                let _ = write!(out, "\ncount={}\n", all.len());
            }
            Ok(Outcome::ok(out))
        }
        Command::Tower { forest } => {
            let d: BottDiagram = input.parse(&forest)?;
            let m = tower_of_diagram(&d).map_err(|e| file_error(&forest, &e))?;
            Ok(Outcome::ok(m.to_string()))
        }
    }
}
