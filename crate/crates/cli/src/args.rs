use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "comod", version, about = "Validate instance documents and certify constructions over them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
    /// Instance document (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(clap::Args, Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    /// Poset element label.
    #[arg(long, global = true, value_name = "ELEMENT")]
    pub at: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub object: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub pairing: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub left: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub right: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub morphism: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub module: Option<String>,
    #[arg(long, global = true, value_name = "NAME")]
    pub algebra: Option<String>,
    /// Seed vectors as a JSON array of rows, entries in the document's field.
    #[arg(long, global = true, value_name = "JSON")]
    pub seed: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Check every item of the document against its axioms.
    Validate,
    Compute {
        #[arg(value_enum)]
        what: ComputeKind,
    },
    Check {
        #[arg(value_enum)]
        what: CheckKind,
    },
    Adjunction {
        #[arg(value_enum)]
        which: AdjunctionKind,
    },
    /// Cartesian hull of a seed inside a cartesian object.
    Hull,
    /// Rational part of a module with respect to a pairing.
    Rationalize,
    /// The projective generator family of an object's category.
    Generators,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComputeKind {
    Cotensor,
    Coinduce,
    Cohom,
    Contraextend,
    Contratensor,
    FiniteDual,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Coalgebra,
    Comodule,
    Contramodule,
    Representation,
    Object,
    Cartesian,
    Coflat,
    SigmaInjective,
    Pairing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjunctionKind {
    ExEv,
    EvCoe,
    CorestrictCoinduce,
    CohomCorestrict,
    ContraextendContrarestrict,
    #[value(name = "FG", alias = "fg")]
    Fg,
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl Command {
    pub fn name(self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::Compute { what } => format!("compute {}", value_name(what)),
            Command::Check { what } => format!("check {}", value_name(what)),
            Command::Adjunction { which } => format!("adjunction {}", value_name(which)),
            Command::Hull => "hull".into(),
            Command::Rationalize => "rationalize".into(),
            Command::Generators => "generators".into(),
        }
    }
}

impl Options {
    /// The command line minus input and output, in a fixed flag order.
    pub fn echo(&self, command: Command) -> String {
        let mut s = command.name();
        let flags = [
            ("at", &self.at),
            ("object", &self.object),
            ("pairing", &self.pairing),
            ("left", &self.left),
            ("right", &self.right),
            ("morphism", &self.morphism),
            ("module", &self.module),
            ("algebra", &self.algebra),
            ("seed", &self.seed),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                s.push_str(&format!(" --{k} {v}"));
            }
        }
        s
    }
}
