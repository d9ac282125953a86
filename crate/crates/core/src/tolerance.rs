//! Process-wide numerical tolerances.
//!
//! Physics-level assertions (expectation values, witness equalities) default
//! to `1e-10`; algebraic identities (Hermiticity, unitarity, normalization)
//! default to `1e-12`.

use core::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_PHYSICS: f64 = 1e-10;
pub const DEFAULT_ALGEBRAIC: f64 = 1e-12;

// f64 bit patterns of the defaults above.
static PHYSICS: AtomicU64 = AtomicU64::new(0x3DDB_7CDF_D9D7_BDBB);
static ALGEBRAIC: AtomicU64 = AtomicU64::new(0x3D71_9799_812D_EA11);

pub fn physics() -> f64 {
    f64::from_bits(PHYSICS.load(Ordering::Relaxed))
}

pub fn algebraic() -> f64 {
    f64::from_bits(ALGEBRAIC.load(Ordering::Relaxed))
}

pub fn set_physics(tol: f64) {
    PHYSICS.store(tol.to_bits(), Ordering::Relaxed);
}

pub fn set_algebraic(tol: f64) {
    ALGEBRAIC.store(tol.to_bits(), Ordering::Relaxed);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_bit_patterns() {
        assert_eq!(DEFAULT_PHYSICS.to_bits(), 0x3DDB_7CDF_D9D7_BDBB);
        assert_eq!(DEFAULT_ALGEBRAIC.to_bits(), 0x3D71_9799_812D_EA11);
        assert_eq!(physics(), DEFAULT_PHYSICS);
        assert_eq!(algebraic(), DEFAULT_ALGEBRAIC);
    }
}
