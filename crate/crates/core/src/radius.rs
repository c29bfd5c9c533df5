use crate::error::{Error, Result};

/// A radius `r` in the unit interval carried together with its complement
/// `r' = sqrt(1 - r^2)`.
///
/// Most functions in this crate lose all their precision near one end of the
/// interval if `r'` is recomputed from a rounded `r`, so both values travel
/// together. The smaller of the two is authoritative: when one of them is
/// below about `1e-8` the other rounds to exactly `1.0`, which is the only
/// situation in which a stored value may equal one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitRadius {
    r: f64,
    rc: f64,
}

impl UnitRadius {
    /// Builds a radius from `r ∈ (0,1)`.
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::domain("UnitRadius", format!("r = {r} is not in (0,1)")));
        }
        Ok(UnitRadius { r, rc: complement(r) })
    }

    /// Builds a radius from its complement `r' ∈ (0,1)`.
    pub fn from_complement(rc: f64) -> Result<Self> {
        if !(rc > 0.0 && rc < 1.0) {
            return Err(Error::domain("UnitRadius", format!("r' = {rc} is not in (0,1)")));
        }
        Ok(UnitRadius { r: complement(rc), rc })
    }

    /// Builds a radius from a pair that already satisfies `r^2 + r'^2 = 1`
    /// up to rounding.
    pub fn from_pair(r: f64, rc: f64) -> Result<Self> {
        if !(r > 0.0 && r <= 1.0 && rc > 0.0 && rc <= 1.0) || (r == 1.0 && rc == 1.0) {
            return Err(Error::domain("UnitRadius", format!("({r}, {rc}) is not a unit pair")));
        }
        let defect = (r * r + rc * rc - 1.0).abs();
        if defect > 1e-13 {
            return Err(Error::domain("UnitRadius", format!("r^2 + r'^2 - 1 = {defect:e} for ({r}, {rc})")));
        }
        Ok(UnitRadius { r, rc })
    }

    /// The symmetric point `r = r' = 1/sqrt(2)`.
    pub fn symmetric() -> Self {
        UnitRadius { r: std::f64::consts::FRAC_1_SQRT_2, rc: std::f64::consts::FRAC_1_SQRT_2 }
    }

    /// Swaps the roles of `r` and `r'`.
    pub fn swap(self) -> Self {
        UnitRadius { r: self.rc, rc: self.r }
    }

    pub fn r(self) -> f64 {
        self.r
    }

    /// The complement `r' = sqrt(1 - r^2)`.
    pub fn rc(self) -> f64 {
        self.rc
    }

    /// `r^2`, the hypergeometric argument used by elliptic integrals.
    pub fn r2(self) -> f64 {
        self.r * self.r
    }

    /// `1 - r^2`, formed from the complement without cancellation.
    pub fn rc2(self) -> f64 {
        self.rc * self.rc
    }

    /// Clamps a possibly underflowed pair into a representable radius.
    pub(crate) fn saturating(r: f64, rc: f64) -> Self {
        let tiny = f64::MIN_POSITIVE;
        if rc < tiny {
            UnitRadius { r: 1.0, rc: tiny }
        } else if r < tiny {
            UnitRadius { r: tiny, rc: 1.0 }
        } else {
            UnitRadius { r, rc }
        }
    }
}

/// `sqrt(1 - x^2)` computed as `sqrt((1-x)(1+x))`.
pub(crate) fn complement(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_endpoints() {
        assert!(UnitRadius::new(0.0).is_err());
        assert!(UnitRadius::new(1.0).is_err());
        assert!(UnitRadius::new(f64::NAN).is_err());
        assert!(UnitRadius::from_complement(1.0).is_err());
    }

    #[test]
    fn pair_is_consistent() {
        for &r in &[1e-9, 0.1, 0.5, 0.9, 0.999_999] {
            let u = UnitRadius::new(r).unwrap();
            assert!((u.r2() + u.rc2() - 1.0).abs() <= 2.0 * f64::EPSILON);
        }
    }

    #[test]
    fn tiny_complement_keeps_information() {
        let u = UnitRadius::from_complement(1e-12).unwrap();
        assert_eq!(u.r(), 1.0);
        assert_eq!(u.rc(), 1e-12);
        assert!(UnitRadius::from_pair(u.r(), u.rc()).is_ok());
    }

    #[test]
    fn mismatched_pair_rejected() {
        assert!(UnitRadius::from_pair(0.6, 0.7).is_err());
        assert!(UnitRadius::from_pair(0.6, 0.8).is_ok());
    }
}
