//! Line-oriented reports.
//!
//! ```text
//! CONFIG witness_primes 25
//! CHECK split-octahedral PASS SPLIT CERT 3 1 t
//! TIME split-octahedral 3
//! ```
//!
//! A job contributes one `CHECK` line per detail line and one `TIME` line.
//! Dropping the `TIME` lines leaves output that is byte-identical across runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// `Fail` beats `Inconclusive` beats `Pass`.
    pub fn combine(self, o: Status) -> Status {
        use Status::*;
        match (self, o) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

impl FromStr for Status {
    type Err = ReportParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "PASS" => Ok(Status::Pass),
            "FAIL" => Ok(Status::Fail),
            "INCONCLUSIVE" => Ok(Status::Inconclusive),
            _ => Err(ReportParseError(format!("unknown status {s:?}"))),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("malformed report: {0}")]
pub struct ReportParseError(pub String);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    pub detail: Vec<String>,
    pub wall_ms: u64,
}

impl Entry {
    pub fn new(id: &str, status: Status, detail: Vec<String>) -> Self {
        let detail = detail.into_iter().map(|l| l.replace('\n', " ")).collect();
        Entry { id: id.to_string(), status, detail, wall_ms: 0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: Vec<(String, String)>,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn status(&self) -> Status {
        self.entries.iter().fold(Status::Pass, |s, e| s.combine(e.status))
    }

    /// 0 all pass, 1 any failure, 3 inconclusive without failure.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.config {
            out.push_str(&format!("CONFIG {k} {v}\n"));
        }
        for e in &self.entries {
            if e.detail.is_empty() {
                out.push_str(&format!("CHECK {} {}\n", e.id, e.status));
            }
            for d in &e.detail {
                out.push_str(&format!("CHECK {} {} {d}\n", e.id, e.status));
            }
            out.push_str(&format!("TIME {} {}\n", e.id, e.wall_ms));
        }
        out
    }

    /// The report with wall times removed, for determinism comparisons.
    pub fn render_untimed(&self) -> String {
        self.render().lines().filter(|l| !l.starts_with("TIME ")).map(|l| format!("{l}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<Report, ReportParseError> {
        let mut r = Report::default();
        let mut open: Option<Entry> = None;
        for line in text.lines() {
            let (tag, rest) = line.split_once(' ').unwrap_or((line, ""));
            match tag {
                "CONFIG" => {
                    let (k, v) = rest.split_once(' ').ok_or_else(|| ReportParseError(line.into()))?;
                    r.config.push((k.into(), v.into()));
                }
                "CHECK" => {
                    let mut it = rest.splitn(3, ' ');
                    let id = it.next().filter(|s| !s.is_empty()).ok_or_else(|| ReportParseError(line.into()))?;
                    let status: Status = it.next().ok_or_else(|| ReportParseError(line.into()))?.parse()?;
                    let detail = it.next();
                    let e = open.get_or_insert_with(|| Entry::new(id, status, vec![]));
                    if e.id != id || e.status != status {
                        return Err(ReportParseError(format!("{line:?} interrupts entry {}", e.id)));
                    }
                    e.detail.extend(detail.map(str::to_string));
                }
                "TIME" => {
                    let (id, ms) = rest.split_once(' ').ok_or_else(|| ReportParseError(line.into()))?;
                    let mut e = open.take().ok_or_else(|| ReportParseError(format!("TIME without CHECK: {line}")))?;
                    if e.id != id {
                        return Err(ReportParseError(format!("TIME for {id} closes {}", e.id)));
                    }
                    e.wall_ms = ms.parse().map_err(|_| ReportParseError(line.into()))?;
                    r.entries.push(e);
                }
                "" => {}
                _ => return Err(ReportParseError(format!("unknown line {line:?}"))),
            }
        }
        if let Some(e) = open {
            return Err(ReportParseError(format!("entry {} has no TIME line", e.id)));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut a = Entry::new("split-octahedral", Status::Pass, vec!["SPLIT CERT 3 1 t".into(), "second line".into()]);
        a.wall_ms = 12;
        let b = Entry::new("empty", Status::Inconclusive, vec![]);
        Report { config: vec![("seed".into(), "0".into())], entries: vec![a, b] }
    }

    #[test]
    fn render_parse_round_trip() {
        let r = sample();
        assert_eq!(Report::parse(&r.render()).unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), r);
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        assert_eq!(r.exit_code(), 3);
        r.entries[1].status = Status::Fail;
        assert_eq!(r.exit_code(), 1);
        r.entries[1].status = Status::Pass;
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn untimed_render_drops_times() {
        let mut r = sample();
        let a = r.render_untimed();
        r.entries[0].wall_ms = 99;
        assert_eq!(a, r.render_untimed());
        assert!(!a.contains("TIME"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Report::parse("CHECK x MAYBE y\nTIME x 1\n").is_err());
        assert!(Report::parse("CHECK x PASS y\n").is_err());
        assert!(Report::parse("hello\n").is_err());
    }
}
