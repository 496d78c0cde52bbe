//! Explicit constructions: the partition combinatorics behind the family
//! theorem, balanced matrices with prescribed row sums, all-even regular
//! matrices, the block families, and the independent semi-invariant family.

pub mod lemma4;
pub mod partitions;
pub mod thm2;
pub mod thm3;

pub use lemma4::lemma4_balanced;
pub use partitions::{
    beta, d_of, enumerate_i, enumerate_p, modification_path, modify, nu, v_tuple, varpi, wp, wt,
    DOf,
};
pub use thm2::{lemma2_even, thm2_i, thm2_ii, thm2_iii, thm2_iv, thm2_v, y_membership, Thm2Output};
pub use thm3::{compositions_colex, thm3_family, Thm3Instance, Thm3Member, Thm3Options};

use crate::error::ConstructError;

pub(crate) fn to_u32(v: u64) -> Result<u32, ConstructError> {
    u32::try_from(v).map_err(|_| ConstructError::Overflow)
}

pub(crate) fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructError::Precondition(msg()))
    }
}
