//! Counting nestings of disjoint, non-tangent circles through integer
//! partitions, with an exhaustive rooted-forest oracle as ground truth.

mod bounds;
mod forest;
mod partition;
mod triangle;

pub use bounds::{
    bounds_report, bounds_with, discrepancy_report, BoundsReport, DiscrepancyReport, DiscrepancyRow,
};
pub use forest::{forest_counts, forest_oracle, CanonicalForest, RootedTree, MAX_ORACLE_NODES};
pub use partition::{partition_count_oracle, partition_counts, partitions, Partition, Partitions};
pub use triangle::{
    b_euler_product, b_partition_sum, b_via_p2_sum, p1_paper, p1_standard, p2_direct, p2_paper,
    BMethod, BSequence, CountTriangle, Method, TriangleKind,
};
