//! Problem files, command dispatch and report output for `gred-check`.

pub mod app;
pub mod format;
pub mod report;

use std::str::FromStr;

use gred_core::checker::Checks;

pub use app::{run, EXIT_BUDGET, EXIT_FAILURE, EXIT_INPUT, EXIT_OK};

/// A question the `run` command can be asked to answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum CheckKind {
    Saturated,
    Reduced,
    Density,
    Strata,
    Coreduced,
    Real,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Saturated,
        CheckKind::Reduced,
        CheckKind::Density,
        CheckKind::Strata,
        CheckKind::Coreduced,
        CheckKind::Real,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Saturated => "saturated",
            CheckKind::Reduced => "reduced",
            CheckKind::Density => "density",
            CheckKind::Strata => "strata",
            CheckKind::Coreduced => "coreduced",
            CheckKind::Real => "real",
        }
    }

    pub fn checks(kinds: &[CheckKind]) -> Checks {
        let mut c = Checks::NONE;
        for k in kinds {
            match k {
                CheckKind::Saturated => c.saturated = true,
                CheckKind::Reduced => c.reduced = true,
                CheckKind::Density => c.density = true,
                CheckKind::Strata => c.strata = true,
                CheckKind::Coreduced => c.coreduced = true,
                CheckKind::Real => c.real = true,
            }
        }
        c
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}
