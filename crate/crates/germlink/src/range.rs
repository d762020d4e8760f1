use std::fmt;
use std::str::FromStr;

/// Inclusive parameter range, written `N` or `A..B`. `A > B` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamRange {
    pub start: u64,
    pub end: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid range {0:?}: expected N or A..B with non-negative integers")]
pub struct RangeError(pub String);

impl ParamRange {
    pub fn single(value: u64) -> Self {
        ParamRange {
            start: value,
            end: value,
        }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.end
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }
}

impl FromStr for ParamRange {
    type Err = RangeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RangeError(s.to_string());
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| err());
        match s.split_once("..") {
            None => parse(s).map(ParamRange::single),
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(ParamRange {
                    start: parse(a)?,
                    end: parse(b)?,
                })
            }
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
