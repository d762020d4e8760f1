use std::fmt;
use std::str::FromStr;

use germlink_core::fibre::ChiConvention;

/// Which Milnor-fibre Euler characteristic conventions a report displays.
/// The obstruction verdict always uses both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChiSelection {
    #[default]
    Literal,
    Join,
    Both,
}

impl ChiSelection {
    pub fn conventions(self) -> &'static [ChiConvention] {
        match self {
            ChiSelection::Literal => &[ChiConvention::Literal],
            ChiSelection::Join => &[ChiConvention::Join],
            ChiSelection::Both => &[ChiConvention::Literal, ChiConvention::Join],
        }
    }
}

impl fmt::Display for ChiSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiSelection::Literal => "literal",
            ChiSelection::Join => "join",
            ChiSelection::Both => "both",
        })
    }
}

impl FromStr for ChiSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "literal" => Ok(ChiSelection::Literal),
            "join" => Ok(ChiSelection::Join),
            "both" => Ok(ChiSelection::Both),
            other => Err(format!("unknown convention {other:?}; expected literal, join or both")),
        }
    }
}
