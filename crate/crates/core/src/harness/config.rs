//! Suite selection and run configuration.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::bubblecalc::BubbleConvention;

use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Presentation,
    Delta,
    RCorollary,
    RExpansion,
    Iota,
    DividedPowers,
    Bubbles,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Presentation,
        Suite::Delta,
        Suite::RCorollary,
        Suite::RExpansion,
        Suite::Iota,
        Suite::DividedPowers,
        Suite::Bubbles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Delta => "delta",
            Suite::RCorollary => "r_corollary",
            Suite::RExpansion => "r_expansion",
            Suite::Iota => "iota",
            Suite::DividedPowers => "divided_powers",
            Suite::Bubbles => "bubbles",
        }
    }

    /// Suites that only make sense for `r = n`.
    pub fn needs_r_equal_n(self) -> bool {
        matches!(
            self,
            Suite::Delta | Suite::RCorollary | Suite::RExpansion | Suite::Iota
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown suite `{s}`")))
    }
}

/// Either every applicable suite or an explicit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Vec<Suite>),
}

impl FromStr for Selection {
    type Err = HarnessError;
    /// `all` or a comma-separated list of suite names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "all" {
            return Ok(Selection::All);
        }
        let mut v = s
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<Result<Vec<Suite>, _>>()?;
        v.sort();
        v.dedup();
        Ok(Selection::Only(v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub n: usize,
    pub r: u32,
    pub window: Option<(i64, i64)>,
    pub selection: Selection,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub out: Option<PathBuf>,
    /// Relations whose id starts with this prefix get their right-hand side
    /// multiplied by `q` before checking.
    pub corrupt: Option<String>,
    pub bubble_convention: BubbleConvention,
}

impl SuiteConfig {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            r: n as u32,
            window: None,
            selection: Selection::All,
            jobs: 0,
            out: None,
            corrupt: None,
            bubble_convention: BubbleConvention::default(),
        }
    }

    pub fn with_suites(mut self, suites: &[Suite]) -> Self {
        self.selection = Selection::Only(suites.to_vec());
        self
    }

    /// The suites to run, after checking the configuration.
    pub fn suites(&self) -> Result<Vec<Suite>, HarnessError> {
        if self.n < 3 {
            return Err(HarnessError::Config(format!(
                "rank must be at least 3, got {}",
                self.n
            )));
        }
        if self.r == 0 || self.r as usize > self.n {
            return Err(HarnessError::Config(format!(
                "degree must satisfy 1 ≤ r ≤ n, got r={} n={}",
                self.r, self.n
            )));
        }
        if let Some((lo, hi)) = self.window {
            if lo > hi {
                return Err(HarnessError::Config(format!("empty window {lo}..{hi}")));
            }
        }
        let square = self.r as usize == self.n;
        match &self.selection {
            Selection::All => Ok(Suite::ALL
                .into_iter()
                .filter(|s| square || !s.needs_r_equal_n())
                .collect()),
            Selection::Only(v) => {
                if let Some(s) = v.iter().find(|s| !square && s.needs_r_equal_n()) {
                    return Err(HarnessError::Config(format!(
                        "suite `{s}` needs r = n, got r={} n={}",
                        self.r, self.n
                    )));
                }
                Ok(v.clone())
            }
        }
    }

    /// Applies `key = value` lines; `#` starts a comment. Keys mirror the
    /// command-line flags: `n`, `r`, `window`, `suites`, `jobs`, `out`,
    /// `corrupt`, `bubble_cw0`, `bubble_ccw0`.
    pub fn apply_config_text(&mut self, text: &str) -> Result<(), HarnessError> {
        let mut r_given = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                HarnessError::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                HarnessError::Config(format!("line {}: invalid {what} `{value}`", lineno + 1))
            };
            match key {
                "n" => self.n = value.parse().map_err(|_| bad("rank"))?,
                "r" => {
                    self.r = value.parse().map_err(|_| bad("degree"))?;
                    r_given = true;
                }
                "window" => self.window = Some(parse_window(value)?),
                "suites" => self.selection = value.parse()?,
                "jobs" => self.jobs = value.parse().map_err(|_| bad("job count"))?,
                "out" => self.out = Some(PathBuf::from(value)),
                "corrupt" => self.corrupt = Some(value.to_string()),
                "bubble_cw0" => {
                    self.bubble_convention.cw0 = value.parse().map_err(|_| bad("scalar"))?
                }
                "bubble_ccw0" => {
                    self.bubble_convention.ccw0 = value.parse().map_err(|_| bad("scalar"))?
                }
                other => {
                    return Err(HarnessError::Config(format!(
                        "line {}: unknown key `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        if !r_given {
            self.r = self.n as u32;
        }
        Ok(())
    }
}

/// `LO..HI`.
pub fn parse_window(s: &str) -> Result<(i64, i64), HarnessError> {
    let bad = || HarnessError::Config(format!("window must look like LO..HI, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}
