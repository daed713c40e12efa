use std::ops::RangeInclusive;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{check_irreducible, Verdict};
use crate::coadjoint::generic_functional;
use crate::lie_core::construct_free2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: usize,
    /// `None` when the row timed out.
    pub verdict: Option<Verdict>,
    pub stab_dim: usize,
    pub ms: u64,
    pub timed_out: bool,
}

impl SweepRow {
    /// `m=<int> verdict=<..> stab_dim=<int> ms=<int>`; `ms` is printed only
    /// when `timing` is set and is 0 otherwise.
    pub fn to_text(&self, timing: bool) -> String {
        let verdict = self.verdict.map_or_else(|| "TimedOut".to_string(), |v| v.to_string());
        let ms = if timing { self.ms } else { 0 };
        format!("m={} verdict={} stab_dim={} ms={}", self.m, verdict, self.stab_dim, ms)
    }

    /// The parity theorems: odd `m` irreducible, even `m` reducible.
    pub fn matches_parity(&self) -> bool {
        let expect = if self.m % 2 == 1 { Verdict::Irreducible } else { Verdict::Reducible };
        self.verdict == Some(expect)
    }
}

/// Generic symbolic verdict for a single `m`.
pub fn sweep_row(m: usize) -> SweepRow {
    let start = Instant::now();
    let alg = construct_free2(m).expect("m >= 2");
    let r = check_irreducible(&alg, &generic_functional(&alg));
    SweepRow {
        m,
        verdict: Some(r.verdict),
        stab_dim: r.stab_dim,
        ms: start.elapsed().as_millis() as u64,
        timed_out: false,
    }
}

/// One row per `m`, each computed on a worker thread and abandoned after
/// `timeout`.
pub fn theorem_sweep(range: RangeInclusive<usize>, timeout: Option<Duration>) -> Vec<SweepRow> {
    range
        .map(|m| {
            let (tx, rx) = mpsc::channel();
            thread::spawn(move || {
                let _ = tx.send(sweep_row(m));
            });
            let got = match timeout {
                Some(t) => rx.recv_timeout(t).ok(),
                None => rx.recv().ok(),
            };
            got.unwrap_or(SweepRow {
                m,
                verdict: None,
                stab_dim: 0,
                ms: timeout.map_or(0, |t| t.as_millis() as u64),
                timed_out: true,
            })
        })
        .collect()
}

/// Parses `A` or `A..B` (inclusive).
pub fn parse_m_range(s: &str) -> Option<RangeInclusive<usize>> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => {
            let a = s.trim().parse().ok()?;
            (a, a)
        }
    };
    (a <= b).then_some(a..=b)
}
