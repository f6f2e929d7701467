//! OEIS b-files: plain text, one `index value` pair per line, `#` comments.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::CoefficientSeries;

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {reason}: {text:?}")]
    Malformed {
        line: usize,
        reason: &'static str,
        text: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFile {
    entries: BTreeMap<i64, BigInt>,
}

impl BFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self, BFileError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| BFileError::Io {
            path: path.display().to_string(),
            source,
        })?;
        text.parse()
    }

    pub fn entries(&self) -> &BTreeMap<i64, BigInt> {
        &self.entries
    }

    /// Compares every b-file entry whose index lies in `0..=series.order()`.
    pub fn compare(&self, series: &CoefficientSeries) -> Comparison {
        let order = series.order() as i64;
        let overlap: Vec<(&i64, &BigInt)> = self.entries.range(0..=order).collect();
        let (Some(&(&lo, _)), Some(&(&hi, _))) = (overlap.first(), overlap.last()) else {
            return Comparison::NoOverlap;
        };
        for (&index, expected) in &overlap {
            let computed = series.coeff(index as usize);
            if computed != *expected {
                return Comparison::Mismatch {
                    index,
                    bfile: (*expected).clone(),
                    computed: computed.clone(),
                };
            }
        }
        Comparison::Match { lo, hi }
    }
}

impl FromStr for BFile {
    type Err = BFileError;

    fn from_str(text: &str) -> Result<Self, BFileError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |reason| BFileError::Malformed {
                line: i + 1,
                reason,
                text: raw.to_string(),
            };
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(malformed("expected exactly two fields"));
            };
            let index: i64 = index.parse().map_err(|_| malformed("bad index"))?;
            let value: BigInt = value.parse().map_err(|_| malformed("bad value"))?;
            if entries.insert(index, value).is_some() {
                return Err(malformed("duplicate index"));
            }
        }
        Ok(BFile { entries })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Match {
        lo: i64,
        hi: i64,
    },
    Mismatch {
        index: i64,
        bfile: BigInt,
        computed: BigInt,
    },
    NoOverlap,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[i64]) -> CoefficientSeries {
        CoefficientSeries::from_coeffs(c.iter().copied(), c.len() - 1)
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let b: BFile = "# A000000\n\n0 1\n1  1\n  2\t4\n".parse().unwrap();
        assert_eq!(b.entries().len(), 3);
        assert_eq!(b.entries()[&2], BigInt::from(4));
    }

    #[test]
    fn reports_malformed_lines() {
        let err = "0 1\n1 x\n".parse::<BFile>().unwrap_err();
        assert!(matches!(
            err,
            BFileError::Malformed {
                line: 2,
                reason: "bad value",
                ..
            }
        ));
        let err = "0 1 2\n".parse::<BFile>().unwrap_err();
        assert!(matches!(err, BFileError::Malformed { line: 1, .. }));
        let err = "0 1\n0 1\n".parse::<BFile>().unwrap_err();
        assert!(matches!(
            err,
            BFileError::Malformed {
                line: 2,
                reason: "duplicate index",
                ..
            }
        ));
    }

    #[test]
    fn comparisons() {
        let s = series(&[1, 1, 1, 4, 19]);
        let good: BFile = "0 1\n1 1\n2 1\n3 4\n4 19\n5 1000\n".parse().unwrap();
        assert_eq!(good.compare(&s), Comparison::Match { lo: 0, hi: 4 });
        let bad: BFile = "1 1\n2 1\n3 5\n".parse().unwrap();
        assert_eq!(
            bad.compare(&s),
            Comparison::Mismatch {
                index: 3,
                bfile: BigInt::from(5),
                computed: BigInt::from(4)
            }
        );
        let late: BFile = "10 1\n".parse().unwrap();
        assert_eq!(late.compare(&s), Comparison::NoOverlap);
        let negative: BFile = "-1 7\n".parse().unwrap();
        assert_eq!(negative.compare(&s), Comparison::NoOverlap);
    }
}
