//! The standard catalogue of prime-order symmetry types of smooth cubic
//! fourfolds, used for labeling reports and for discrepancy flags on the
//! compactification verdicts.
//!
//! Every quantity the crate reports is computed from first principles; the
//! catalogue only supplies the conventional label T_p^i and, where the
//! reference classification pins one, the documented Baily-Borel verdict.
//! One entry (T3-1) is deliberately left unpinned: the reference lists
//! omit it, so its computed verdict is reported with a flag instead of
//! being asserted against a source.

use crate::symmetry::{SymmetryType, NVARS};

#[derive(Debug, Clone, Copy)]
pub struct KnownType {
    pub label: &'static str,
    pub order: u64,
    pub weights: [i64; NVARS],
    pub lambda_exp: i64,
    /// Documented compactification verdict, when the reference pins one.
    pub bb_reference: Option<bool>,
}

pub const KNOWN_TYPES: [KnownType; 13] = [
    KnownType {
        label: "T2-1",
        order: 2,
        weights: [0, 0, 0, 0, 0, 1],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T2-2",
        order: 2,
        weights: [0, 0, 0, 0, 1, 1],
        lambda_exp: 0,
        bb_reference: Some(false),
    },
    KnownType {
        label: "T2-3",
        order: 2,
        weights: [0, 0, 0, 1, 1, 1],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T3-1",
        order: 3,
        weights: [0, 0, 0, 0, 0, 1],
        lambda_exp: 0,
        bb_reference: None,
    },
    KnownType {
        label: "T3-2",
        order: 3,
        weights: [0, 0, 0, 0, 1, 1],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T3-3",
        order: 3,
        weights: [0, 0, 0, 0, 1, 2],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T3-4",
        order: 3,
        weights: [0, 0, 0, 1, 1, 1],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T3-5",
        order: 3,
        weights: [0, 0, 0, 1, 1, 2],
        lambda_exp: 0,
        bb_reference: Some(false),
    },
    KnownType {
        label: "T3-6",
        order: 3,
        weights: [0, 0, 1, 1, 2, 2],
        lambda_exp: 0,
        bb_reference: Some(false),
    },
    KnownType {
        label: "T3-7",
        order: 3,
        weights: [0, 0, 1, 1, 2, 2],
        lambda_exp: 2,
        bb_reference: Some(true),
    },
    KnownType {
        label: "T5-1",
        order: 5,
        weights: [0, 0, 1, 2, 3, 4],
        lambda_exp: 0,
        bb_reference: Some(false),
    },
    KnownType {
        label: "T7-1",
        order: 7,
        weights: [1, 2, 3, 4, 5, 6],
        lambda_exp: 0,
        bb_reference: Some(false),
    },
    KnownType {
        label: "T11-1",
        order: 11,
        weights: [0, 1, 3, 4, 5, 9],
        lambda_exp: 0,
        bb_reference: Some(true),
    },
];

impl KnownType {
    pub fn symmetry(&self) -> SymmetryType {
        SymmetryType::new(self.order, self.weights, self.lambda_exp)
            .expect("catalogue entries are valid")
    }
}

/// Look up the catalogue entry equivalent to a given symmetry type.
pub fn lookup(sym: &SymmetryType) -> Option<&'static KnownType> {
    let canon = sym.canonicalize();
    KNOWN_TYPES
        .iter()
        .find(|k| k.symmetry().canonicalize() == canon)
}
