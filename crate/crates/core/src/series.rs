//! Date-indexed daily observation series, the common frame for every metric.
//!
//! Each series carries a chain tag, a frame name, a unit, and a strictly
//! date-ordered list of `(date, value)` points. Missing days are allowed and
//! never filled in; every downstream statistic operates on present days only.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The chains the canonical data dictionary covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chain {
    Algorand,
    Ethereum2,
}

impl Chain {
    pub fn as_str(self) -> &'static str {
        match self {
            Chain::Algorand => "algorand",
            Chain::Ethereum2 => "ethereum2",
        }
    }
}

impl std::fmt::Display for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Chain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "algorand" => Ok(Chain::Algorand),
            "ethereum2" | "ethereum" | "eth2" => Ok(Chain::Ethereum2),
            other => Err(format!("unknown chain `{other}` (expected algorand or ethereum2)")),
        }
    }
}

/// Measurement unit of a frame's values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Count,
    Seconds,
    Eth,
    Algo,
    Percent,
    None,
}

impl Unit {
    /// Hard value bounds implied by the unit, used by dataset validation.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            Unit::Count | Unit::Seconds | Unit::Eth | Unit::Algo => (0.0, f64::INFINITY),
            Unit::Percent => (0.0, 1.0),
            Unit::None => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }
}

/// One daily observation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub date: NaiveDate,
    pub value: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("duplicate date {0} in series")]
    DuplicateDate(NaiveDate),
    #[error("non-finite value on {0}")]
    NonFiniteValue(NaiveDate),
}

/// A date-indexed sequence of daily values for one frame of one chain.
///
/// Invariants held after construction: dates strictly increasing, all values
/// finite. Unit-range constraints (nonnegative counts, percent in `[0,1]`)
/// are checked by dataset validation, not here, so that out-of-range data can
/// be loaded and then reported.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservationSeries {
    chain: Chain,
    name: String,
    unit: Unit,
    points: Vec<Point>,
}

impl ObservationSeries {
    /// Build a series from points in any order. Points are sorted by date;
    /// duplicate dates and non-finite values are rejected.
    pub fn new(
        chain: Chain,
        name: impl Into<String>,
        unit: Unit,
        mut points: Vec<Point>,
    ) -> Result<Self, SeriesError> {
        for p in &points {
            if !p.value.is_finite() {
                return Err(SeriesError::NonFiniteValue(p.date));
            }
        }
        points.sort_by_key(|p| p.date);
        for w in points.windows(2) {
            if w[0].date == w[1].date {
                return Err(SeriesError::DuplicateDate(w[0].date));
            }
        }
        Ok(Self { chain, name: name.into(), unit, points })
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.value)
    }

    pub fn dates(&self) -> impl Iterator<Item = NaiveDate> + '_ {
        self.points.iter().map(|p| p.date)
    }
}
