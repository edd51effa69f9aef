//! Pass/fail/info audit reports shared by the identity and oracle suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Observation that does not gate the run (known discrepancies).
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.entries.push(Entry { name: name.into(), status, detail: detail.into() });
    }

    pub fn pass(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::Pass, detail);
    }

    pub fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::Info, detail);
    }

    /// Records PASS when `failure` is `None`, FAIL with its text otherwise.
    pub fn check(&mut self, name: impl Into<String>, cases: usize, failure: Option<String>) {
        match failure {
            None => self.pass(name, format!("{cases} cases")),
            Some(why) => self.push(name, Status::Fail, why),
        }
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.title;
        for mut e in other.entries {
            e.name = format!("{prefix}: {}", e.name);
            self.entries.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for e in &self.entries {
            writeln!(f, "{} {}: {}", e.status, e.name, e.detail)?;
        }
        writeln!(
            f,
            "# {} pass, {} fail, {} info",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info)
        )
    }
}

/// Walks `(case, observed, expected)` triples and returns the number of
/// cases plus a message for the first disagreement.
pub fn first_mismatch<T, I>(cases: I) -> (usize, Option<String>)
where
    T: PartialEq + fmt::Display,
    I: IntoIterator<Item = (String, T, T)>,
{
    let mut count = 0;
    for (case, observed, expected) in cases {
        count += 1;
        if observed != expected {
            return (count, Some(format!("first failure at {case}: observed {observed}, expected {expected}")));
        }
    }
    (count, None)
}
