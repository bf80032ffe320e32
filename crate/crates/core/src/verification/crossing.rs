use std::fmt::Write;

use serde::Serialize;

use crate::constructions::{g_pair, G_PAIR_MIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::MAX_ORDER;
use crate::indices::{harary, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRow {
    pub n: usize,
    pub h_g1: Rational,
    pub h_g2: Rational,
    /// Sign of `h_g1 - h_g2`.
    pub sign: i8,
}

pub fn crossing_table(from: usize, to: usize) -> Result<Vec<CrossingRow>> {
    if from < G_PAIR_MIN_ORDER || from > to || to > MAX_ORDER {
        return Err(Error::SpecViolation(format!(
            "need {G_PAIR_MIN_ORDER} <= from <= to <= {MAX_ORDER}, got {from}..{to}"
        )));
    }
    (from..=to)
        .map(|n| {
            let pair = g_pair(n)?;
            let h_g1 = harary(&pair.g1)?;
            let h_g2 = harary(&pair.g2)?;
            let sign = (&h_g1 - &h_g2).signum();
            Ok(CrossingRow { n, h_g1, h_g2, sign })
        })
        .collect()
}

pub fn crossing_csv(rows: &[CrossingRow]) -> String {
    let mut out = String::from("n,h_g1,h_g2,sign\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.n, r.h_g1, r.h_g2, r.sign).unwrap();
    }
    out
}
