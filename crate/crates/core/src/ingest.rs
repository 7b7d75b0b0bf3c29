//! CSV ingestion against the canonical per-day data dictionary.
//!
//! The on-disk contract is fixed: comma-separated files with a mandatory
//! header row, ISO-8601 dates (`YYYY-MM-DD`) in a `date` column, plain
//! decimal values (no thousands separators), one file per frame except for
//! the Algorand files that carry two value columns and are split into one
//! frame per column at load time.
//!
//! Dictionary ranges are validation warnings, not load failures: they
//! describe one historical snapshot, and the loader must accept other chains
//! and eras. Validation reports every out-of-range point without mutating
//! anything.

use std::collections::BTreeMap;
use std::path::Path;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{Chain, ObservationSeries, Point, Unit};

/// The numeric frames of the data dictionary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameKind {
    // Ethereum 2.0
    DailyBlockCount,
    AvgBlockTime,
    AvgGasUsed,
    TransactionCount,
    GasLimit,
    BurnedFees,
    ValidatorCount,
    AvgValidatorBalance,
    ParticipationRate,
    NetworkLiveness,
    // Algorand (TransactionCount and BurnedFees are shared names)
    ProposerCount,
    BlockReward,
    ContractCalls,
    UniqueCalls,
}

impl FrameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FrameKind::DailyBlockCount => "daily_block_count",
            FrameKind::AvgBlockTime => "avg_block_time",
            FrameKind::AvgGasUsed => "avg_gas_used",
            FrameKind::TransactionCount => "transaction_count",
            FrameKind::GasLimit => "gas_limit",
            FrameKind::BurnedFees => "burned_fees",
            FrameKind::ValidatorCount => "validator_count",
            FrameKind::AvgValidatorBalance => "avg_validator_balance",
            FrameKind::ParticipationRate => "participation_rate",
            FrameKind::NetworkLiveness => "network_liveness",
            FrameKind::ProposerCount => "proposer_count",
            FrameKind::BlockReward => "block_reward",
            FrameKind::ContractCalls => "contract_calls",
            FrameKind::UniqueCalls => "unique_calls",
        }
    }

    /// Unit of the frame's values for the given chain.
    pub fn unit(self, chain: Chain) -> Unit {
        match self {
            FrameKind::DailyBlockCount
            | FrameKind::TransactionCount
            | FrameKind::ValidatorCount
            | FrameKind::NetworkLiveness
            | FrameKind::ProposerCount
            | FrameKind::ContractCalls
            | FrameKind::UniqueCalls => Unit::Count,
            FrameKind::AvgBlockTime => Unit::Seconds,
            FrameKind::AvgGasUsed => Unit::None,
            FrameKind::GasLimit | FrameKind::AvgValidatorBalance => Unit::Eth,
            FrameKind::ParticipationRate => Unit::Percent,
            FrameKind::BurnedFees | FrameKind::BlockReward => match chain {
                Chain::Ethereum2 => Unit::Eth,
                Chain::Algorand => Unit::Algo,
            },
        }
    }

    /// Dictionary range for the frame on the given chain, when one is
    /// published. Points outside it are flagged by [`validate_dataset`].
    pub fn dictionary_range(self, chain: Chain) -> Option<(f64, f64)> {
        match (chain, self) {
            (Chain::Ethereum2, FrameKind::DailyBlockCount) => Some((0.0, 7180.0)),
            (Chain::Ethereum2, FrameKind::AvgBlockTime) => Some((4.46, 30.57)),
            (Chain::Ethereum2, FrameKind::AvgGasUsed) => Some((0.0, 15_511_762.25)),
            (Chain::Ethereum2, FrameKind::TransactionCount) => Some((0.0, 1_932_226.0)),
            (Chain::Ethereum2, FrameKind::GasLimit) => Some((5000.0, 30_076_713.92)),
            (Chain::Ethereum2, FrameKind::BurnedFees) => Some((0.0, 71_718.88)),
            (Chain::Ethereum2, FrameKind::ValidatorCount) => Some((21_063.0, 771_738.0)),
            (Chain::Ethereum2, FrameKind::AvgValidatorBalance) => {
                Some((32.00953203, 34.00950871))
            }
            (Chain::Ethereum2, FrameKind::ParticipationRate) => {
                Some((0.941524213, 0.99728444))
            }
            (Chain::Ethereum2, FrameKind::NetworkLiveness) => Some((2.0, 12.0)),
            (Chain::Algorand, FrameKind::ProposerCount) => Some((31.0, 130.0)),
            (Chain::Algorand, FrameKind::TransactionCount) => Some((913.0, 9_271_981.0)),
            (Chain::Algorand, FrameKind::BurnedFees) => Some((1.47588, 33113.44687)),
            (Chain::Algorand, FrameKind::BlockReward) => Some((141.059024, 5184.994864)),
            (Chain::Algorand, FrameKind::ContractCalls) => Some((1.0, 197_459.0)),
            (Chain::Algorand, FrameKind::UniqueCalls) => Some((1.0, 10149.0)),
            _ => None,
        }
    }

    /// Frames a chain's dataset may contain.
    pub fn allowed_for(chain: Chain) -> &'static [FrameKind] {
        match chain {
            Chain::Ethereum2 => &[
                FrameKind::DailyBlockCount,
                FrameKind::AvgBlockTime,
                FrameKind::AvgGasUsed,
                FrameKind::TransactionCount,
                FrameKind::GasLimit,
                FrameKind::BurnedFees,
                FrameKind::ValidatorCount,
                FrameKind::AvgValidatorBalance,
                FrameKind::ParticipationRate,
                FrameKind::NetworkLiveness,
            ],
            Chain::Algorand => &[
                FrameKind::ProposerCount,
                FrameKind::TransactionCount,
                FrameKind::BurnedFees,
                FrameKind::BlockReward,
                FrameKind::ContractCalls,
                FrameKind::UniqueCalls,
            ],
        }
    }
}

impl std::fmt::Display for FrameKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One value column inside a recognized file.
#[derive(Debug, Clone, Copy)]
pub struct ColumnSpec {
    pub kind: FrameKind,
    /// Optional columns are loaded when present and skipped otherwise.
    pub required: bool,
}

/// A recognized file of a chain's directory layout and the frames it carries.
#[derive(Debug, Clone, Copy)]
pub struct FileSpec {
    pub file_name: &'static str,
    pub columns: &'static [ColumnSpec],
}

/// Default column name for dates in every canonical file.
pub const DATE_COLUMN: &str = "date";

/// Algorand per-block info file; string-typed, counted but never loaded as a
/// numeric frame.
pub const BLOCK_INFO_FILE: &str = "al_block_data.csv";

const ETHEREUM2_FILES: &[FileSpec] = &[
    FileSpec {
        file_name: "daily_block_count.csv",
        columns: &[ColumnSpec { kind: FrameKind::DailyBlockCount, required: true }],
    },
    FileSpec {
        file_name: "avg_blk_time.csv",
        columns: &[ColumnSpec { kind: FrameKind::AvgBlockTime, required: true }],
    },
    FileSpec {
        file_name: "gas_used_avg_by_blk.csv",
        columns: &[ColumnSpec { kind: FrameKind::AvgGasUsed, required: true }],
    },
    FileSpec {
        file_name: "daily_transactions.csv",
        columns: &[ColumnSpec { kind: FrameKind::TransactionCount, required: true }],
    },
    FileSpec {
        file_name: "gas_limit.csv",
        columns: &[ColumnSpec { kind: FrameKind::GasLimit, required: true }],
    },
    FileSpec {
        file_name: "burned_fees.csv",
        columns: &[ColumnSpec { kind: FrameKind::BurnedFees, required: true }],
    },
    FileSpec {
        file_name: "validator_data.csv",
        columns: &[ColumnSpec { kind: FrameKind::ValidatorCount, required: true }],
    },
    FileSpec {
        file_name: "validator_avg_balance.csv",
        columns: &[ColumnSpec { kind: FrameKind::AvgValidatorBalance, required: true }],
    },
    FileSpec {
        file_name: "participation_rate.csv",
        columns: &[ColumnSpec { kind: FrameKind::ParticipationRate, required: true }],
    },
    FileSpec {
        file_name: "network_Liveness.csv",
        columns: &[ColumnSpec { kind: FrameKind::NetworkLiveness, required: true }],
    },
];

const ALGORAND_FILES: &[FileSpec] = &[
    FileSpec {
        file_name: "al_block_data_proposercount_reward.csv",
        columns: &[
            ColumnSpec { kind: FrameKind::ProposerCount, required: true },
            // The reward column travels with the proposer file in some
            // exports; the dedicated reward file takes precedence.
            ColumnSpec { kind: FrameKind::BlockReward, required: false },
        ],
    },
    FileSpec {
        file_name: "al_transac_data_count_fee.csv",
        columns: &[
            ColumnSpec { kind: FrameKind::TransactionCount, required: true },
            ColumnSpec { kind: FrameKind::BurnedFees, required: true },
        ],
    },
    FileSpec {
        file_name: "al_block_data_reward.csv",
        columns: &[ColumnSpec { kind: FrameKind::BlockReward, required: true }],
    },
    FileSpec {
        file_name: "al_contracts_calls_unique_calls.csv",
        columns: &[
            ColumnSpec { kind: FrameKind::ContractCalls, required: true },
            ColumnSpec { kind: FrameKind::UniqueCalls, required: true },
        ],
    },
];

/// The file layout recognized for a chain's data directory.
pub fn chain_files(chain: Chain) -> &'static [FileSpec] {
    match chain {
        Chain::Ethereum2 => ETHEREUM2_FILES,
        Chain::Algorand => ALGORAND_FILES,
    }
}

/// Descriptor for loading one frame out of one file: names the date column
/// and the value column.
#[derive(Debug, Clone)]
pub struct FrameSchema {
    pub chain: Chain,
    pub kind: FrameKind,
    pub date_column: String,
    pub value_column: String,
}

impl FrameSchema {
    /// Canonical schema: dates under [`DATE_COLUMN`], values under the frame
    /// name. This is also the layout [`write_frame_csv`] produces.
    pub fn canonical(chain: Chain, kind: FrameKind) -> Self {
        Self {
            chain,
            kind,
            date_column: DATE_COLUMN.to_string(),
            value_column: kind.as_str().to_string(),
        }
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{file}: column `{column}` not found in header")]
    MissingColumn { file: String, column: String },
    #[error("{file}: row {row}: cannot parse `{value}` as a date (expected YYYY-MM-DD)")]
    UnparsableDate { file: String, row: u64, value: String },
    #[error("{file}: row {row}, column `{column}`: `{value}` is not a finite number")]
    NonNumericValue { file: String, row: u64, column: String, value: String },
    #[error("{file}: duplicate date {date}")]
    DuplicateDate { file: String, date: NaiveDate },
    #[error("no recognized frame files found in {dir}")]
    NoFramesFound { dir: String },
    #[error("series share no dates")]
    EmptyIntersection,
    #[error("frame `{kind}` is not part of the {chain} dictionary")]
    UnknownFrame { chain: Chain, kind: FrameKind },
    #[error("frame `{0}` is tagged for a different chain")]
    ChainMismatch(FrameKind),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}: {source}")]
    Csv {
        file: String,
        #[source]
        source: csv::Error,
    },
}

fn file_label(path: &Path) -> String {
    path.display().to_string()
}

/// Load one frame from a CSV file.
///
/// Rows may arrive in any order; the result is sorted by date. Repeated
/// dates are an error, never silently merged.
pub fn load_frame(path: &Path, schema: &FrameSchema) -> Result<ObservationSeries, IngestError> {
    let file = file_label(path);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|source| csv_error(&file, source))?;

    let headers = reader.headers().map_err(|source| csv_error(&file, source))?.clone();
    let col_index = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| IngestError::MissingColumn {
            file: file.clone(),
            column: name.to_string(),
        })
    };
    let date_idx = col_index(&schema.date_column)?;
    let value_idx = col_index(&schema.value_column)?;

    let mut points = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|source| csv_error(&file, source))?;
        // Header is line 1; first data row is line 2.
        let row = i as u64 + 2;
        let date_text = record.get(date_idx).unwrap_or("");
        let date = NaiveDate::parse_from_str(date_text, "%Y-%m-%d").map_err(|_| {
            IngestError::UnparsableDate { file: file.clone(), row, value: date_text.to_string() }
        })?;
        let value_text = record.get(value_idx).unwrap_or("");
        let value: f64 = value_text.parse().ok().filter(|v: &f64| v.is_finite()).ok_or_else(
            || IngestError::NonNumericValue {
                file: file.clone(),
                row,
                column: schema.value_column.clone(),
                value: value_text.to_string(),
            },
        )?;
        points.push(Point { date, value });
    }

    points.sort_by_key(|p| p.date);
    for w in points.windows(2) {
        if w[0].date == w[1].date {
            return Err(IngestError::DuplicateDate { file, date: w[0].date });
        }
    }
    let unit = schema.kind.unit(schema.chain);
    // Finiteness was checked per value; duplicates above.
    Ok(ObservationSeries::new(schema.chain, schema.kind.as_str(), unit, points)
        .expect("points validated during parse"))
}

fn csv_error(file: &str, source: csv::Error) -> IngestError {
    if source.is_io_error() {
        if let csv::ErrorKind::Io(io) = source.into_kind() {
            return IngestError::Io { path: file.to_string(), source: io };
        }
        unreachable!("is_io_error guarantees an Io kind");
    }
    IngestError::Csv { file: file.to_string(), source }
}

/// A chain's loaded collection of frames.
#[derive(Debug, Clone, Serialize)]
pub struct ChainDataset {
    chain: Chain,
    frames: BTreeMap<FrameKind, ObservationSeries>,
    /// Data rows of the string-typed per-block info file, when present.
    pub block_info_rows: Option<u64>,
}

impl ChainDataset {
    pub fn new(chain: Chain) -> Self {
        Self { chain, frames: BTreeMap::new(), block_info_rows: None }
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    /// Insert a frame. The frame must belong to this chain's dictionary and
    /// its series must carry the dataset's chain tag.
    pub fn insert_frame(&mut self, kind: FrameKind, series: ObservationSeries) -> Result<(), IngestError> {
        if !FrameKind::allowed_for(self.chain).contains(&kind) {
            return Err(IngestError::UnknownFrame { chain: self.chain, kind });
        }
        if series.chain() != self.chain {
            return Err(IngestError::ChainMismatch(kind));
        }
        self.frames.insert(kind, series);
        Ok(())
    }

    pub fn frame(&self, kind: FrameKind) -> Option<&ObservationSeries> {
        self.frames.get(&kind)
    }

    pub fn frames(&self) -> impl Iterator<Item = (FrameKind, &ObservationSeries)> {
        self.frames.iter().map(|(k, s)| (*k, s))
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }
}

/// Result of loading a directory: the dataset, the files actually consumed
/// (for provenance digests), and the `.csv` files that did not match any
/// recognized name and were therefore skipped.
#[derive(Debug)]
pub struct DatasetLoad {
    pub dataset: ChainDataset,
    pub loaded_files: Vec<std::path::PathBuf>,
    pub skipped_files: Vec<String>,
}

/// Load every recognized frame file for `chain` from `dir`.
///
/// Unrecognized `.csv` files are reported in [`DatasetLoad::skipped_files`],
/// not loaded. A directory with no recognized files at all is an error.
pub fn load_chain_dataset(dir: &Path, chain: Chain) -> Result<DatasetLoad, IngestError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|source| IngestError::Io { path: file_label(dir), source })?;
    let mut present: Vec<String> = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|source| IngestError::Io { path: file_label(dir), source })?;
        if entry.path().is_file() {
            if let Some(name) = entry.file_name().to_str() {
                present.push(name.to_string());
            }
        }
    }
    present.sort();

    let mut dataset = ChainDataset::new(chain);
    let mut loaded_files = Vec::new();
    let mut skipped = Vec::new();
    let mut recognized_any = false;

    for name in &present {
        if chain == Chain::Algorand && name == BLOCK_INFO_FILE {
            let path = dir.join(name);
            dataset.block_info_rows = Some(count_data_rows(&path)?);
            loaded_files.push(path);
            recognized_any = true;
            continue;
        }
        let spec = chain_files(chain).iter().find(|s| s.file_name == name);
        match spec {
            Some(spec) => {
                recognized_any = true;
                let path = dir.join(name);
                loaded_files.push(path.clone());
                let header = read_header(&path)?;
                for col in spec.columns {
                    let schema = FrameSchema::canonical(chain, col.kind);
                    if !col.required && !header.iter().any(|h| h == schema.value_column.as_str()) {
                        continue;
                    }
                    // A dedicated single-frame file wins over an optional
                    // duplicate column seen earlier.
                    let series = load_frame(&path, &schema)?;
                    if dataset.frame(col.kind).is_some() && !col.required {
                        continue;
                    }
                    dataset.insert_frame(col.kind, series)?;
                }
            }
            None => {
                if name.ends_with(".csv") {
                    skipped.push(name.clone());
                }
            }
        }
    }

    if !recognized_any {
        return Err(IngestError::NoFramesFound { dir: file_label(dir) });
    }
    Ok(DatasetLoad { dataset, loaded_files, skipped_files: skipped })
}

fn read_header(path: &Path) -> Result<Vec<String>, IngestError> {
    let file = file_label(path);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|source| csv_error(&file, source))?;
    Ok(reader
        .headers()
        .map_err(|source| csv_error(&file, source))?
        .iter()
        .map(|h| h.to_string())
        .collect())
}

fn count_data_rows(path: &Path) -> Result<u64, IngestError> {
    let file = file_label(path);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_path(path)
        .map_err(|source| csv_error(&file, source))?;
    let mut rows = 0u64;
    for record in reader.records() {
        record.map_err(|source| csv_error(&file, source))?;
        rows += 1;
    }
    Ok(rows)
}

/// One out-of-range point found by validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub frame: String,
    /// 1-based position of the point within the frame's date-sorted series.
    pub row: u64,
    pub column: String,
    pub rule: String,
    pub value: f64,
}

/// Outcome of checking a dataset against unit bounds and dictionary ranges.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self { pass: violations.is_empty(), violations }
    }
}

/// Check every point of every frame against the tighter of the unit bounds
/// and the dictionary range. Violations are data, not faults: the dataset is
/// never mutated and the call always succeeds.
pub fn validate_dataset(ds: &ChainDataset) -> ValidationReport {
    let mut violations = Vec::new();
    for (kind, series) in ds.frames() {
        let (unit_lo, unit_hi) = series.unit().bounds();
        let (dict_lo, dict_hi) = kind
            .dictionary_range(ds.chain())
            .unwrap_or((f64::NEG_INFINITY, f64::INFINITY));
        let lo = unit_lo.max(dict_lo);
        let hi = unit_hi.min(dict_hi);
        for (i, point) in series.points().iter().enumerate() {
            let rule = if point.value < lo {
                Some(format!("below minimum {lo}"))
            } else if point.value > hi {
                Some(format!("above maximum {hi}"))
            } else {
                None
            };
            if let Some(rule) = rule {
                violations.push(Violation {
                    frame: kind.as_str().to_string(),
                    row: i as u64 + 1,
                    column: kind.as_str().to_string(),
                    rule,
                    value: point.value,
                });
            }
        }
    }
    ValidationReport::from_violations(violations)
}

/// Dates and paired values shared by two series.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedPairs {
    pub dates: Vec<NaiveDate>,
    pub left: Vec<f64>,
    pub right: Vec<f64>,
}

impl AlignedPairs {
    pub fn len(&self) -> usize {
        self.dates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dates.is_empty()
    }
}

/// Pair two series over the intersection of their dates, in date order.
pub fn align_series(
    a: &ObservationSeries,
    b: &ObservationSeries,
) -> Result<AlignedPairs, IngestError> {
    let mut dates = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let (pa, pb) = (a.points(), b.points());
    let (mut i, mut j) = (0, 0);
    while i < pa.len() && j < pb.len() {
        match pa[i].date.cmp(&pb[j].date) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                dates.push(pa[i].date);
                left.push(pa[i].value);
                right.push(pb[j].value);
                i += 1;
                j += 1;
            }
        }
    }
    if dates.is_empty() {
        return Err(IngestError::EmptyIntersection);
    }
    Ok(AlignedPairs { dates, left, right })
}

/// Render a series as canonical CSV text (`date,<frame name>` header).
///
/// Values use the shortest decimal form that parses back to the same `f64`,
/// so a write/load cycle is lossless.
pub fn frame_csv_string(series: &ObservationSeries) -> String {
    let mut out = String::new();
    out.push_str(DATE_COLUMN);
    out.push(',');
    out.push_str(series.name());
    out.push_str("\r\n");
    for p in series.points() {
        out.push_str(&format!("{},{}\r\n", p.date.format("%Y-%m-%d"), p.value));
    }
    out
}

/// Write a series to `path` in the canonical CSV layout.
pub fn write_frame_csv(series: &ObservationSeries, path: &Path) -> Result<(), IngestError> {
    std::fs::write(path, frame_csv_string(series))
        .map_err(|source| IngestError::Io { path: file_label(path), source })
}
