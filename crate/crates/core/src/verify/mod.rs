//! The identity ledger.
//!
//! Every entry evaluates both sides of one identity by independent code
//! paths and records the residual against a per-entry tolerance. Entries are
//! addressed by stable string ids and grouped by [`Tag`].
//!
//! Proved identities report `pass` or `fail`. Conjectured identities are
//! quarantined: they report `supports-conjecture` or `error` and never count
//! towards the aggregate verdict.

mod catalan;
mod lemma1;
mod lemma2;
mod lemma4;
mod misc;
mod prop;
mod sine;

use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use catalan::{catalan_route, catalan_route_names, catalan_routes, CatalanRoute};
pub use sine::{SineSum, SINE_SUMS};

/// Ledger groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Prop1,
    Prop2,
    Sine,
    Catalan,
    Misc,
}

impl Tag {
    pub const ALL: [Tag; 9] = [
        Tag::Lemma1,
        Tag::Lemma2,
        Tag::Lemma3,
        Tag::Lemma4,
        Tag::Prop1,
        Tag::Prop2,
        Tag::Sine,
        Tag::Catalan,
        Tag::Misc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Lemma1 => "lemma1",
            Tag::Lemma2 => "lemma2",
            Tag::Lemma3 => "lemma3",
            Tag::Lemma4 => "lemma4",
            Tag::Prop1 => "prop1",
            Tag::Prop2 => "prop2",
            Tag::Sine => "sine",
            Tag::Catalan => "catalan",
            Tag::Misc => "misc",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SupportsConjecture,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SupportsConjecture => "supports-conjecture",
            Status::Error => "error",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether an entry is a proved identity or a conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Proved,
    Conjecture,
}

/// Result of running one ledger entry. `lhs`, `rhs` and `residual` are
/// absent when the evaluation itself failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// The identity being checked, in plain text.
    pub reference: String,
    pub tags: Vec<Tag>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub residual: Option<f64>,
    pub tol: f64,
    pub status: Status,
    pub elapsed_ms: u64,
    pub diagnostic: Option<String>,
}

/// Values produced by a check body. For checks over several instances the
/// sides are those of the worst instance and `note` names it.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Outcome {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pair(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            residual: (lhs - rhs).abs(),
            note: None,
        }
    }

    /// Worst instance of a family; an empty family is a bug in the ledger.
    pub fn worst(items: impl IntoIterator<Item = (String, f64, f64)>) -> Self {
        let mut best: Option<Outcome> = None;
        let mut count = 0;
        for (label, lhs, rhs) in items {
            count += 1;
            let r = (lhs - rhs).abs();
            // A NaN residual wins so it is never hidden.
            let replace = match &best {
                None => true,
                Some(b) => !b.residual.is_nan() && (r.is_nan() || r > b.residual),
            };
            if replace {
                best = Some(Outcome {
                    lhs,
                    rhs,
                    residual: r,
                    note: Some(label),
                });
            }
        }
        let mut out = best.expect("check family has no instances");
        out.note = out.note.map(|n| format!("worst of {count}: {n}"));
        out
    }

    /// Raise the residual to at least `extra` (used for side conditions
    /// that must vanish).
    pub fn with_extra(mut self, label: &str, extra: f64) -> Self {
        if extra > self.residual || extra.is_nan() {
            self.residual = extra;
            self.note = Some(format!("side condition {label}"));
        }
        self
    }
}

type Body = fn(f64) -> Result<Outcome>;

/// One ledger entry.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub reference: &'static str,
    pub tags: &'static [Tag],
    pub tol: f64,
    pub kind: Kind,
    body: Body,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("tags", &self.tags)
            .field("tol", &self.tol)
            .field("kind", &self.kind)
            .finish()
    }
}

/// Default tolerance classes.
pub(crate) const TOL_CLOSED: f64 = 1e-12;
pub(crate) const TOL_QUAD: f64 = 1e-10;
pub(crate) const TOL_CHAIN: f64 = 1e-9;

pub(crate) const fn proved(
    id: &'static str,
    reference: &'static str,
    tags: &'static [Tag],
    tol: f64,
    body: Body,
) -> Check {
    Check {
        id,
        reference,
        tags,
        tol,
        kind: Kind::Proved,
        body,
    }
}

pub(crate) const fn conjecture(
    id: &'static str,
    reference: &'static str,
    tags: &'static [Tag],
    tol: f64,
    body: Body,
) -> Check {
    Check {
        id,
        reference,
        tags,
        tol,
        kind: Kind::Conjecture,
        body,
    }
}

/// Every ledger entry, sorted by id.
pub fn ledger() -> Vec<Check> {
    let mut all: Vec<Check> = [
        lemma1::CHECKS,
        lemma2::CHECKS,
        catalan::CHECKS,
        lemma4::CHECKS,
        prop::CHECKS,
        sine::CHECKS,
        misc::CHECKS,
    ]
    .concat();
    all.sort_by(|a, b| a.id.cmp(b.id));
    all
}

/// Ids of every ledger entry, sorted.
pub fn check_ids() -> Vec<&'static str> {
    ledger().into_iter().map(|c| c.id).collect()
}

fn find(id: &str) -> Result<Check> {
    ledger()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

impl Check {
    /// Run with acceptance tolerance `tol`. Inner evaluations target the
    /// smaller of `tol` and the default, so loosening a tolerance never
    /// changes the computed values.
    pub fn run(&self, tol: f64) -> CheckRecord {
        let start = Instant::now();
        let eval_tol = tol.min(self.tol);
        let out = if eval_tol > 0.0 {
            (self.body)(eval_tol)
        } else {
            Err(crate::error::domain(format!("tolerance must be positive, got {tol}")))
        };
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let mut rec = CheckRecord {
            id: self.id.to_string(),
            reference: self.reference.to_string(),
            tags: self.tags.to_vec(),
            lhs: None,
            rhs: None,
            residual: None,
            tol,
            status: Status::Error,
            elapsed_ms,
            diagnostic: None,
        };
        match out {
            Err(e) => rec.diagnostic = Some(e.to_string()),
            Ok(o) if !(o.lhs.is_finite() && o.rhs.is_finite() && o.residual.is_finite()) => {
                rec.diagnostic = Some(format!(
                    "non-finite result: lhs {}, rhs {}, residual {}",
                    o.lhs, o.rhs, o.residual
                ));
            }
            Ok(o) => {
                let ok = o.residual <= tol;
                rec.lhs = Some(o.lhs);
                rec.rhs = Some(o.rhs);
                rec.residual = Some(o.residual);
                rec.diagnostic = o.note;
                rec.status = match (self.kind, ok) {
                    (Kind::Proved, true) => Status::Pass,
                    (Kind::Proved, false) => Status::Fail,
                    (Kind::Conjecture, true) => Status::SupportsConjecture,
                    (Kind::Conjecture, false) => {
                        let msg = format!("residual {:e} exceeds {tol:e}", o.residual);
                        rec.diagnostic = Some(match rec.diagnostic.take() {
                            Some(n) => format!("{msg}; {n}"),
                            None => msg,
                        });
                        Status::Error
                    }
                };
            }
        }
        rec
    }
}

/// Run one check by id, optionally replacing its default tolerance.
pub fn run_check(id: &str, tol_override: Option<f64>) -> Result<CheckRecord> {
    let c = find(id)?;
    Ok(c.run(tol_override.unwrap_or(c.tol)))
}

/// Run every check (or those carrying `filter`), with each default
/// tolerance multiplied by `tol_scale`. Records are sorted by id.
pub fn run_all(filter: Option<Tag>, tol_scale: Option<f64>) -> Vec<CheckRecord> {
    let scale = tol_scale.unwrap_or(1.0);
    let mut recs: Vec<CheckRecord> = ledger()
        .into_par_iter()
        .filter(|c| filter.is_none_or(|t| c.tags.contains(&t)))
        .map(|c| c.run(c.tol * scale))
        .collect();
    recs.sort_by(|a, b| a.id.cmp(&b.id));
    recs
}

/// True iff every proved-identity record passed. Conjecture records are
/// ignored.
pub fn all_pass(records: &[CheckRecord]) -> bool {
    records
        .iter()
        .all(|r| matches!(r.status, Status::Pass | Status::SupportsConjecture) || is_conjecture(&r.id))
}

/// Whether the ledger entry `id` is a conjecture.
pub fn is_conjecture(id: &str) -> bool {
    find(id).is_ok_and(|c| c.kind == Kind::Conjecture)
}

// Shared helpers for check bodies.

pub(crate) fn csc2(x: f64) -> f64 {
    let s = x.sin();
    1.0 / (s * s)
}

pub(crate) fn tg(x: f64) -> Result<f64> {
    Ok(crate::specfun::trigamma(x)?.value)
}

pub(crate) fn cl2v(x: f64) -> Result<f64> {
    Ok(crate::specfun::cl2(x, 1e-16)?.value)
}

/// ∫_a^b f with declared singular points.
pub(crate) fn quad(f: impl Fn(f64) -> f64, a: f64, b: f64, singular: &[f64], tol: f64) -> Result<f64> {
    let mut p = crate::quad::QuadProblem::new(f, a, b).tol(tol);
    for &s in singular {
        p = p.singular_at(s);
    }
    Ok(p.integrate()?.value)
}
