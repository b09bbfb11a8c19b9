//! Verification reports.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of nonzero residual entries or terms.
    pub residuals: usize,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, residuals: usize) -> Self {
        Self {
            name: name.into(),
            passed: residuals == 0,
            residuals,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// A check that fails for a reason other than a residual.
    pub fn failed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            residuals: 0,
            detail: detail.into(),
        }
    }

    pub fn ok(name: impl Into<String>) -> Self {
        Self::new(name, 0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Append `other`, tagging each check with `[prefix]`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("[{prefix}] {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Table rendering; `color` adds ANSI status colors.
    pub fn render(&self, color: bool) -> String {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let mut out = format!("{}\n", self.title);
        for c in &self.checks {
            let status = match (c.passed, color) {
                (true, true) => "\x1b[32mPASS\x1b[0m",
                (false, true) => "\x1b[31mFAIL\x1b[0m",
                (true, false) => "PASS",
                (false, false) => "FAIL",
            };
            let pad = width - c.name.chars().count();
            out.push_str(&format!(
                "  {}{}  {status}  residual={}",
                c.name,
                " ".repeat(pad),
                c.residuals
            ));
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("{} of {} checks passed\n", self.passed_count(), self.len()));
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_residuals() {
        let mut r = Report::new("demo");
        r.push(Check::new("a", 0));
        assert!(r.all_passed());
        r.push(Check::new("bb", 3).with_detail("x"));
        assert!(!r.all_passed());
        let text = r.render(false);
        assert!(text.contains("a   PASS  residual=0"));
        assert!(text.contains("bb  FAIL  residual=3  x"));
        assert!(text.ends_with("1 of 2 checks passed\n"));
    }
}
