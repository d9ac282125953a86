//! Sweep CSV: header `p,h,value_conv,value_sed`, rows p-major.

use std::io::{Read, Write};

use sedwit_core::noise::SweepRecord;

use crate::error::Result;
use crate::format::sig12;

pub const HEADER: [&str; 4] = ["p", "h", "value_conv", "value_sed"];

pub fn write_sweep<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record([sig12(r.p), sig12(r.h), sig12(r.value_conv), sig12(r.value_sed)])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, serde::Deserialize, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub h: f64,
    pub value_conv: f64,
    pub value_sed: f64,
}

pub fn read_sweep<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<Result<Vec<SweepRow>, _>>()?)
}
