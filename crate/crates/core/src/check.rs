//! Pass/fail bookkeeping shared by every verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undefined,
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undefined => "undefined",
            Status::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

/// Result of checking one identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, detail: None }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, detail: Some(detail.into()) }
    }

    pub fn undefined(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Undefined, detail: Some(detail.into()) }
    }

    pub fn degenerate(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Degenerate, detail: Some(detail.into()) }
    }

    /// `pass` when `ok`, otherwise `fail` with the lazily built message.
    pub fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(detail())
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Running counts over many instances of one identity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub undefined: usize,
    pub degenerate: usize,
    pub first_failure: Option<String>,
    pub first_undefined: Option<String>,
}

impl Tally {
    pub fn record(&mut self, outcome: &Outcome) {
        match outcome.status {
            Status::Pass => self.pass += 1,
            Status::Fail => {
                self.fail += 1;
                if self.first_failure.is_none() {
                    self.first_failure = outcome.detail.clone();
                }
            }
            Status::Undefined => {
                self.undefined += 1;
                if self.first_undefined.is_none() {
                    self.first_undefined = outcome.detail.clone();
                }
            }
            Status::Degenerate => self.degenerate += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.undefined += other.undefined;
        self.degenerate += other.degenerate;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure.clone();
        }
        if self.first_undefined.is_none() {
            self.first_undefined = other.first_undefined.clone();
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.undefined + self.degenerate
    }

    /// Collapses the counts: any failure fails; otherwise pass if anything
    /// passed; otherwise the instances were all undefined or degenerate.
    pub fn status(&self) -> Status {
        if self.fail > 0 {
            Status::Fail
        } else if self.pass > 0 {
            Status::Pass
        } else if self.undefined > 0 {
            Status::Undefined
        } else if self.degenerate > 0 {
            Status::Degenerate
        } else {
            Status::Pass
        }
    }
}

/// Identity name paired with its counts, in the order the checks ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityTally {
    pub identity: &'static str,
    pub tally: Tally,
}

/// Accumulates tallies under identity names, keeping first-seen order.
#[derive(Debug, Clone, Default)]
pub struct Ledger {
    entries: Vec<IdentityTally>,
}

impl Ledger {
    pub fn record(&mut self, identity: &'static str, outcome: &Outcome) {
        self.slot(identity).record(outcome);
    }

    pub fn merge_tally(&mut self, identity: &'static str, tally: &Tally) {
        self.slot(identity).merge(tally);
    }

    pub fn merge(&mut self, other: &Ledger) {
        for e in &other.entries {
            self.merge_tally(e.identity, &e.tally);
        }
    }

    fn slot(&mut self, identity: &'static str) -> &mut Tally {
        let pos = match self.entries.iter().position(|e| e.identity == identity) {
            Some(p) => p,
            None => {
                self.entries.push(IdentityTally { identity, tally: Tally::default() });
                self.entries.len() - 1
            }
        };
        &mut self.entries[pos].tally
    }

    pub fn get(&self, identity: &str) -> Option<&Tally> {
        self.entries.iter().find(|e| e.identity == identity).map(|e| &e.tally)
    }

    pub fn entries(&self) -> &[IdentityTally] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<IdentityTally> {
        self.entries
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.tally.fail == 0)
    }
}

/// Deterministic per-trial generator: FNV-1a over the tag and parameters,
/// mixed with the run seed.
pub fn trial_rng(seed: u64, tag: &str, params: &[u64], trial: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for b in bytes {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(&seed.to_le_bytes());
    eat(tag.as_bytes());
    for p in params {
        eat(&p.to_le_bytes());
    }
    eat(&trial.to_le_bytes());
    rand_chacha::ChaCha8Rng::seed_from_u64(h)
}
