//! The `unl` command: UNL text to XML or DOT, and full-schema XML to DOT.
//!
//! ```text
//! unl parse    [INPUT] [-o OUTPUT] [--strict]
//! unl to-xml   [INPUT] [-o OUTPUT] [--schema lite|full] [--strict]
//! unl to-dot   [INPUT] [-o OUTPUT] [--show-attributes] [--scope-style cluster|node] [--strict]
//! unl from-xml [INPUT] [-o OUTPUT] [--show-attributes] [--scope-style cluster|node] [--strict]
//! ```
//!
//! INPUT defaults to stdin (also `-`), OUTPUT to stdout. Diagnostics go to
//! stderr. Exit codes: 0 success, 1 input, parse or I/O failure (or any
//! warning under `--strict`), 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unl_core::{
    build_graph, emit_dot, emit_xml, ingest_xml, parse_document, Diagnostic, DotOptions, ScopeStyle, UnlDocument,
    XmlSchemaMode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "unl", version, about = "Convert UNL expressions to XML and DOT graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the relations in canonical form, one per line.
    Parse {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Write the document as XML.
    ToXml {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, value_enum, default_value_t = Schema::Full)]
        schema: Schema,
    },
    /// Write the document's graph as a DOT script.
    ToDot {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        dot: DotArgs,
    },
    /// Read full-schema XML and write its graph as a DOT script.
    FromXml {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        dot: DotArgs,
    },
}

#[derive(Debug, Args)]
struct IoArgs {
    /// Input file; stdin when omitted or `-`.
    input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Treat warnings as failures.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct DotArgs {
    /// Show `@` attributes under node labels.
    #[arg(long)]
    show_attributes: bool,
    #[arg(long, value_enum, default_value_t = StyleArg::Cluster)]
    scope_style: StyleArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Schema {
    Lite,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StyleArg {
    Cluster,
    Node,
}

impl DotArgs {
    fn options(&self) -> DotOptions {
        DotOptions {
            show_attributes: self.show_attributes,
            scope_style: match self.scope_style {
                StyleArg::Cluster => ScopeStyle::Cluster,
                StyleArg::Node => ScopeStyle::Node,
            },
            ..DotOptions::default()
        }
    }
}

/// A failure that has already been reported; carries the exit code.
struct Failed(i32);

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Streams<'_> {
    fn fail(&mut self, msg: impl std::fmt::Display) -> Failed {
        let _ = writeln!(self.stderr, "{msg}");
        Failed(EXIT_FAILURE)
    }

    fn read_input(&mut self, io: &IoArgs) -> Result<String, Failed> {
        let mut bytes = Vec::new();
        match &io.input {
            Some(path) if path.as_os_str() != "-" => {
                bytes = fs::read(path).map_err(|e| self.fail(format!("error: cannot read {}: {e}", path.display())))?;
            }
            _ => {
                self.stdin
                    .read_to_end(&mut bytes)
                    .map_err(|e| self.fail(format!("error: cannot read stdin: {e}")))?;
            }
        }
        String::from_utf8(bytes).map_err(|e| self.fail(format!("error: input is not valid UTF-8: {e}")))
    }

    fn write_output(&mut self, io: &IoArgs, text: &str) -> Result<(), Failed> {
        match &io.output {
            Some(path) => {
                fs::write(path, text).map_err(|e| self.fail(format!("error: cannot write {}: {e}", path.display())))
            }
            None => self
                .stdout
                .write_all(text.as_bytes())
                .and_then(|()| self.stdout.flush())
                .map_err(|e| self.fail(format!("error: cannot write stdout: {e}"))),
        }
    }

    /// Reports warnings; under `--strict` any warning fails the run.
    fn report(&mut self, diagnostics: &[Diagnostic], strict: bool) -> Result<(), Failed> {
        for d in diagnostics {
            let _ = writeln!(self.stderr, "{d}");
        }
        if strict && !diagnostics.is_empty() {
            let _ = writeln!(self.stderr, "error: {} warning(s) with --strict", diagnostics.len());
            return Err(Failed(EXIT_FAILURE));
        }
        Ok(())
    }

    fn parse_unl(&mut self, io: &IoArgs) -> Result<UnlDocument, Failed> {
        let text = self.read_input(io)?;
        let doc = parse_document(&text).map_err(|e| self.fail(e))?;
        self.report(&doc.diagnostics, io.strict)?;
        Ok(doc)
    }

    fn dot(&mut self, doc: &UnlDocument, opts: &DotOptions) -> Result<String, Failed> {
        emit_dot(&build_graph(doc), opts).map_err(|e| self.fail(format!("error: {e}")))
    }

    fn execute(&mut self, command: &Command) -> Result<(), Failed> {
        match command {
            Command::Parse { io } => {
                let doc = self.parse_unl(io)?;
                self.write_output(io, &doc.to_unl())
            }
            Command::ToXml { io, schema } => {
                let doc = self.parse_unl(io)?;
                let mode = match schema {
                    Schema::Lite => XmlSchemaMode::Lite,
                    Schema::Full => XmlSchemaMode::Full,
                };
                self.write_output(io, &emit_xml(&doc, mode))
            }
            Command::ToDot { io, dot } => {
                let doc = self.parse_unl(io)?;
                let out = self.dot(&doc, &dot.options())?;
                self.write_output(io, &out)
            }
            Command::FromXml { io, dot } => {
                let text = self.read_input(io)?;
                let doc = ingest_xml(&text).map_err(|e| self.fail(format!("error: {e}")))?;
                self.report(&doc.diagnostics, io.strict)?;
                let out = self.dot(&doc, &dot.options())?;
                self.write_output(io, &out)
            }
        }
    }
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let mut streams = Streams { stdin, stdout, stderr };
    match streams.execute(&cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failed(code)) => code,
    }
}
