//! Shared fixtures for the pipeline benchmarks.

use symcubic::jacobian::{sample_smooth_member, RankConfig, SampleConfig};
use symcubic::symmetry::SymmetryType;
use symcubic::Polynomial;

pub fn order_three_type() -> SymmetryType {
    SymmetryType::new(3, [0, 0, 0, 0, 0, 1], 0).unwrap()
}

pub fn order_eleven_type() -> SymmetryType {
    SymmetryType::new(11, [0, 1, 3, 4, 5, 9], 0).unwrap()
}

pub fn smooth_member(sym: &SymmetryType) -> Polynomial {
    sample_smooth_member(sym, &RankConfig::default(), &SampleConfig::default(), 1)
        .unwrap()
        .0
}
