//! Wakamatsu-tilting certification, Auslander-class membership, cotorsion-pair data with
//! special approximations, and good-ness checks.
//!
//! A [`TiltingModule`] is an `S`-`R`-bimodule `T` whose left algebra `S` plays the role of
//! `End_R(T)`. Statements quantified over whole subcategories are certified relative to
//! finite generator lists; every verdict records that it is relative.

mod auslander;
mod cotorsion;
mod good;
mod tilting;
mod wakamatsu;

pub use auslander::{in_auslander, in_co_auslander, Membership};
pub use cotorsion::{special_precover, special_preenvelope, AddClosure, ApproxKind, ApproxSequence, CotorsionData};
pub use good::{check_ext_projective_generator, check_good, derive_s_data, finite_type_check};
pub use tilting::TiltingModule;
pub use wakamatsu::{check_wakamatsu, CoresolutionStep, WTiltReport};

use thiserror::Error;

use crate::homalg::HomalgError;
use crate::rmod::ModuleError;

/// Errors raised by certification and approximation routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WTiltError {
    #[error("fails at stage {stage}: {clause}")]
    FailsAtStage { stage: usize, clause: String },
    #[error("iteration cap exceeded ({cap} rounds): the data is not a complete cotorsion pair at this depth")]
    IterationCap { cap: usize },
    #[error("invalid cotorsion data: {0}")]
    InvalidData(String),
    #[error("approximation sequence failed verification: {0}")]
    BadSequence(String),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// One itemized check inside a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// An itemized pass/fail verdict.
///
/// `relative` marks verdicts that quantify over supplied generator lists only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub title: String,
    pub items: Vec<CheckItem>,
    pub relative: bool,
}

impl Verdict {
    pub fn new(title: impl Into<String>, relative: bool) -> Verdict {
        Verdict { title: title.into(), items: Vec::new(), relative }
    }

    /// Records one check.
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), passed, detail: detail.into() });
    }

    /// Appends the items of another verdict, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Verdict) {
        self.relative |= other.relative;
        for it in other.items {
            self.items.push(CheckItem { name: format!("{prefix}{}", it.name), ..it });
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}
