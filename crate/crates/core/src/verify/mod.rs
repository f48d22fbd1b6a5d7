//! Verification harness: gap scans over index grids, the unit-equation and
//! subspace inequalities, and the summand-level checks they rest on.

mod inequalities;
mod scan;
mod subsum;

pub use inequalities::{check_brownawell_masser, check_zannier, InequalityReport};
pub use scan::{
    check_corollary_degrees, scan_region, scan_strip, scan_theorem1, scan_theorem1_with, scan_theorem2,
    scan_theorem2_with, summand_values, CorollaryReport, Gap, Region, RegionRule, ScanCell, ScanReport, Strip,
};
pub use subsum::{independence_check, minimal_vanishing_subsum, LinearIndependence, SubsumWitness, SUBSUM_BUDGET};
